//! The cochain complex (H^⊗•, d^•) of a coalgebra with trivial coefficients,
//! its second cohomology, and the search for adjoinable elements whose
//! comultiplication defect represents a prescribed class.
//!
//! Degrees run up to 3: d¹ and d² carry all the structure used downstream,
//! and d³ exists to witness the complex identity and the H³ dimension.

use crate::algebra::{vec_add, vec_is_zero, Element, StructuredAlgebra};
use crate::invariants::{coradical, coradical_filtration, decode_vector, K_of};
use crate::linalg::{neg_mod, FpMatrix, Subspace};
use crate::{Error, Result};

/// Cells allowed in the dense d³ matrix (n⁴ × n³ entries = n⁷).
const MAX_D3_CELLS: u128 = 1 << 28;

/// Matrix of d^degree : H^⊗degree → H^⊗(degree+1), assembled term by term:
/// 1⊗x, the alternating coproduct insertions (−1)^m (Id^{m−1} ⊗ Δ ⊗
/// Id^{degree−m}), and (−1)^{degree+1} x⊗1, all reduced mod p. Tensor factors
/// are indexed with the last factor fastest, matching `kronecker`.
pub fn differential(h: &StructuredAlgebra, degree: usize) -> Result<FpMatrix> {
    assert!(h.kind.has_coalgebra(), "differentials need a comultiplication");
    if degree == 0 || degree > 3 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let n = h.dim;
    if degree == 3 && (n as u128).pow(7) > MAX_D3_CELLS {
        return Err(Error::DegreeTooLarge(n));
    }
    let p = h.p;
    let rows = n.pow(degree as u32 + 1);
    let cols = n.pow(degree as u32);
    let mut d = FpMatrix::zeros(p, rows, cols);
    let minus = neg_mod(1, p);
    let outer_sign = if degree % 2 == 0 { minus } else { 1 };
    for col in 0..cols {
        for (uidx, &uc) in h.unit_vec().iter().enumerate() {
            if uc != 0 {
                accumulate(&mut d, uidx * cols + col, col, uc);
                accumulate(&mut d, col * n + uidx, col, uc * outer_sign % p);
            }
        }
    }
    for m in 1..=degree {
        let sign = if m % 2 == 0 { 1 } else { minus };
        let left = n.pow(m as u32 - 1);
        let right = n.pow((degree - m) as u32);
        for a in 0..left {
            for i in 0..n {
                let crow = h.comult_row(i);
                for (jk, &c) in crow.iter().enumerate() {
                    if c == 0 {
                        continue;
                    }
                    let v = c * sign % p;
                    for b in 0..right {
                        let col = (a * n + i) * right + b;
                        let row = (a * n * n + jk) * right + b;
                        accumulate(&mut d, row, col, v);
                    }
                }
            }
        }
    }
    Ok(d)
}

fn accumulate(m: &mut FpMatrix, r: usize, c: usize, v: u64) {
    let cur = m.get(r, c);
    m.set(r, c, (cur + v) % m.modulus());
}

/// One degree of the complex: the differential into C^degree and the one
/// out of it. Their composite is checked to vanish on construction.
#[derive(Clone, Debug)]
pub struct CochainComplexSlice {
    pub degree: usize,
    pub d_in: FpMatrix,
    pub d_out: FpMatrix,
}

pub fn complex_slice(h: &StructuredAlgebra, degree: usize) -> Result<CochainComplexSlice> {
    if degree == 0 || degree > 3 {
        return Err(Error::UnsupportedDegree(degree));
    }
    // d⁰ = 0 from the scalars
    let d_in =
        if degree == 1 { FpMatrix::zeros(h.p, h.dim, 1) } else { differential(h, degree - 1)? };
    let d_out = differential(h, degree)?;
    assert!(d_out.matmul(&d_in).is_zero(), "d∘d must vanish");
    Ok(CochainComplexSlice { degree, d_in, d_out })
}

impl CochainComplexSlice {
    /// dim Ker d_out − rank d_in.
    pub fn cohomology_dim(&self) -> usize {
        self.d_out.kernel().dim() - self.d_in.rank()
    }
}

/// H² = Ker d² / Im d¹ with a deterministic set of representative cocycles.
#[derive(Clone, Debug)]
pub struct CohomologyClasses {
    pub cocycles: Subspace,
    pub coboundaries: Subspace,
    /// Tensor-square vectors whose classes form a basis of H², chosen as
    /// quotient_basis(Im d¹ ⊆ Ker d²).
    pub representatives: Vec<Vec<u64>>,
    pub d1: FpMatrix,
    pub d2: FpMatrix,
}

impl CohomologyClasses {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

pub fn h2(h: &StructuredAlgebra) -> CohomologyClasses {
    let d1 = differential(h, 1).expect("degree 1 is always available");
    let d2 = differential(h, 2).expect("degree 2 is always available");
    let cocycles = d2.kernel();
    let coboundaries = Subspace::from_rows(h.p, h.dim * h.dim, &d1.transpose().to_rows());
    assert!(cocycles.contains_subspace(&coboundaries), "coboundaries must be cocycles");
    let representatives = cocycles.quotient_basis(&coboundaries);
    CohomologyClasses { cocycles, coboundaries, representatives, d1, d2 }
}

/// Writes the cocycle u as Σ αᵢuᵢ + d¹(y) against the representatives uᵢ,
/// returning (α, y); the identity is re-verified exactly before returning.
pub fn decompose_cocycle(classes: &CohomologyClasses, u: &[u64]) -> Result<(Vec<u64>, Element)> {
    if !vec_is_zero(&classes.d2.matvec(u)) {
        return Err(Error::NotCocycle);
    }
    let p = classes.d1.modulus();
    let nn = classes.d1.rows();
    let r = classes.representatives.len();
    let reps_mat = if r == 0 {
        FpMatrix::zeros(p, nn, 0)
    } else {
        FpMatrix::from_rows(p, nn, &classes.representatives).transpose()
    };
    let sol = reps_mat
        .hstack(&classes.d1)
        .solve(u)
        .expect("cocycles decompose against a basis of H² plus coboundaries");
    let (alphas, y) = sol.split_at(r);
    let mut rebuilt = classes.d1.matvec(y);
    for (i, &a) in alphas.iter().enumerate() {
        if a != 0 {
            for (t, slot) in rebuilt.iter_mut().enumerate() {
                *slot = (*slot + a * classes.representatives[i][t]) % p;
            }
        }
    }
    assert_eq!(rebuilt, u, "decomposition identity failed to re-verify");
    Ok((alphas.to_vec(), Element::from_coords(y.to_vec())))
}

/// Outcome of [`find_z`]: an element outside L whose comultiplication defect
/// is a nontrivial cocycle combination over the Hopf subalgebra L.
#[derive(Clone, Debug)]
pub struct CocycleWitness {
    /// The adjusted element z with Δz = z⊗1 + 1⊗z + u.
    pub z: Element,
    /// The defect u in ambient H⊗H coordinates.
    pub u: Vec<u64>,
    /// The same defect in L⊗L coordinates.
    pub u_in_sub: Vec<u64>,
    /// Coefficients of u against the H²(k, L) representatives; not all zero.
    pub alphas: Vec<u64>,
    /// The filtration degree at which L first fails to exhaust H.
    pub degree: usize,
    /// L restricted to its own basis, as certified by `restrict_to`.
    pub sub: StructuredAlgebra,
    pub classes: CohomologyClasses,
}

/// Finds z ∈ H∖L with Δ(z) = z⊗1 + 1⊗z + Σαᵢuᵢ for a connected H and a
/// proper Hopf subalgebra L ⊇ K: walks the coradical filtration to the first
/// degree d ≥ 2 where L stops exhausting it, takes the first quotient basis
/// vector as z, and absorbs the coboundary part of its defect into z.
pub fn find_z(h: &StructuredAlgebra, l: &Subspace) -> Result<CocycleWitness> {
    let h0 = coradical(h)?;
    if h0.dim() != 1 {
        return Err(Error::NotConnected(h0.dim()));
    }
    if l.is_full() {
        return Err(Error::NotProper("the subalgebra is already all of H".into()));
    }
    let k = K_of(h)?;
    if !l.contains_subspace(&k) {
        return Err(Error::MissingCore);
    }
    let sub = h.restrict_to(l)?;
    let filt = coradical_filtration(h)?;
    let (degree, layer) = filt
        .layers
        .iter()
        .enumerate()
        .skip(2)
        .find(|(_, layer)| !l.contains_subspace(layer))
        .expect("a proper subalgebra must miss some filtration layer");
    let ld = l.intersect(layer);
    let z0 = layer.quotient_basis(&ld).swap_remove(0);
    let u0 = h.coproduct_defect(&z0);
    let u0_sub =
        tensor_coords_in(l, &u0).expect("the defect at the first missed degree must lie in L⊗L");
    let classes = h2(&sub);
    let (alphas, y) = decompose_cocycle(&classes, &u0_sub)?;
    // z ← z + y turns the defect into Σαᵢuᵢ exactly: the defect of y ∈ L
    // is −d¹(y)
    let z = vec_add(h.p, &z0, &l.lift(&y.coords));
    let ln = l.dim();
    let mut u_in_sub = vec![0u64; ln * ln];
    for (i, &a) in alphas.iter().enumerate() {
        if a != 0 {
            for (t, slot) in u_in_sub.iter_mut().enumerate() {
                *slot = (*slot + a * classes.representatives[i][t]) % h.p;
            }
        }
    }
    let u = tensor_lift(l, &u_in_sub);
    assert!(!l.contains(&z), "the correction must stay outside L");
    assert!(alphas.iter().any(|&a| a != 0), "the defect class must be nonzero for z outside L");
    assert!(vec_is_zero(&classes.d2.matvec(&u_in_sub)), "adjusted defect must stay a cocycle");
    assert!(!classes.coboundaries.contains(&u_in_sub), "adjusted defect must not be a coboundary");
    assert_eq!(h.coproduct_defect(&z), u, "Δz − z⊗1 − 1⊗z must equal the adjusted defect");
    Ok(CocycleWitness { z: Element::from_coords(z), u, u_in_sub, alphas, degree, sub, classes })
}

/// Coordinates of the ambient tensor u against the basis W⊗W of sub⊗sub,
/// when u lies there: read entries off pivot pairs, then verify exactly.
pub(crate) fn tensor_coords_in(sub: &Subspace, u: &[u64]) -> Option<Vec<u64>> {
    let l = sub.dim();
    let n = sub.ambient_dim();
    let piv = sub.pivots();
    let mut coords = vec![0u64; l * l];
    for a in 0..l {
        for b in 0..l {
            coords[a * l + b] = u[piv[a] * n + piv[b]];
        }
    }
    if tensor_lift(sub, &coords) == u {
        Some(coords)
    } else {
        None
    }
}

/// Ambient tensor Σ c_{ab} W_a⊗W_b from coordinates in the sub⊗sub basis.
pub(crate) fn tensor_lift(sub: &Subspace, coords: &[u64]) -> Vec<u64> {
    let l = sub.dim();
    let n = sub.ambient_dim();
    let p = sub.modulus();
    let rows = sub.basis_rows();
    let mut out = vec![0u64; n * n];
    for a in 0..l {
        for b in 0..l {
            let c = coords[a * l + b];
            if c == 0 {
                continue;
            }
            for (i, &wa) in rows[a].iter().enumerate() {
                if wa == 0 {
                    continue;
                }
                let cwa = c * wa % p;
                for (j, &wb) in rows[b].iter().enumerate() {
                    if wb != 0 {
                        out[i * n + j] = (out[i * n + j] + cwa * wb) % p;
                    }
                }
            }
        }
    }
    out
}

/// Whether every representative satisfies uᵖ = u in H⊗H. For group duals
/// over F_p this holds for all of them; the check verifies rather than
/// assumes it.
pub fn frobenius_fixed_check(h: &StructuredAlgebra, classes: &CohomologyClasses) -> bool {
    classes.representatives.iter().all(|u| &h.tensor_square_pow(u, h.p) == u)
}

/// Representatives with uᵖ = u, correcting any unfixed one by a coboundary
/// search u' = u + d¹(y). The search is exhaustive over y and therefore
/// bounded; it is not expected to run for group duals.
pub fn frobenius_fixed_representatives(
    h: &StructuredAlgebra,
    classes: &CohomologyClasses,
) -> Result<Vec<Vec<u64>>> {
    let n = h.dim;
    classes
        .representatives
        .iter()
        .map(|u| {
            if &h.tensor_square_pow(u, h.p) == u {
                return Ok(u.clone());
            }
            let total = (h.p as u128).pow(n as u32);
            if total > 1 << 16 {
                return Err(Error::FrobeniusFixup);
            }
            for code in 0..total as u64 {
                let y = decode_vector(h.p, n, code);
                let cand = vec_add(h.p, u, &classes.d1.matvec(&y));
                if h.tensor_square_pow(&cand, h.p) == cand {
                    return Ok(cand);
                }
            }
            Err(Error::FrobeniusFixup)
        })
        .collect()
}

#[cfg(test)]
// Index arithmetic with literal zeros spells out the i·n + j slot layout;
// keep it visible.
#[allow(clippy::identity_op)]
mod tests {
    use super::*;
    use crate::algebra::tests::{cyclic_group_algebra, primitive_truncated_line, restricted_line};
    use crate::algebra::AlgebraKind;
    use crate::invariants::primitive_space;

    #[test]
    fn d1_kills_primitives_and_doubles_the_unit() {
        let line = primitive_truncated_line(2);
        let d1 = differential(&line, 1).unwrap();
        assert_eq!(d1.matvec(&[0, 1]), vec![0, 0, 0, 0]);
        // d¹(1) = 1⊗1 − Δ1 + 1⊗1 = 1⊗1
        assert_eq!(d1.matvec(&[1, 0]), vec![1, 0, 0, 0]);
    }

    #[test]
    fn complex_identity_holds() {
        for h in [
            primitive_truncated_line(2),
            restricted_line(2),
            restricted_line(3),
            cyclic_group_algebra(2, 2),
            cyclic_group_algebra(3, 3),
            cyclic_group_algebra(2, 4).dual().unwrap(),
        ] {
            let s2 = complex_slice(&h, 2).unwrap();
            assert!(s2.d_out.matmul(&s2.d_in).is_zero());
            let s3 = complex_slice(&h, 3).unwrap();
            assert!(s3.d_out.matmul(&s3.d_in).is_zero());
        }
    }

    #[test]
    fn degree_bounds_are_enforced() {
        let line = primitive_truncated_line(2);
        assert!(matches!(differential(&line, 0), Err(Error::UnsupportedDegree(0))));
        assert!(matches!(differential(&line, 4), Err(Error::UnsupportedDegree(4))));
        let big = cyclic_group_algebra(3, 27);
        assert!(matches!(differential(&big, 3), Err(Error::DegreeTooLarge(27))));
        assert!(differential(&big, 2).is_ok());
    }

    #[test]
    fn first_cohomology_is_the_primitive_space() {
        for h in [
            primitive_truncated_line(2),
            restricted_line(3),
            cyclic_group_algebra(2, 2),
            cyclic_group_algebra(2, 4).dual().unwrap(),
        ] {
            let s1 = complex_slice(&h, 1).unwrap();
            assert_eq!(s1.cohomology_dim(), primitive_space(&h).dim());
        }
    }

    #[test]
    fn h2_of_the_truncated_line_against_exhaustion() {
        let line = primitive_truncated_line(2);
        let classes = h2(&line);
        // Ker d² = span{1⊗1, x⊗x}, Im d¹ = span{1⊗1}, H² = [x⊗x]
        assert_eq!(classes.cocycles.dim(), 2);
        assert_eq!(classes.coboundaries.dim(), 1);
        assert_eq!(classes.representatives, vec![vec![0, 0, 0, 1]]);

        // exhaustive oracle over all 16 tensor-square vectors
        let mut cocycle_count = 0u32;
        let mut coboundary_count = 0u32;
        for code in 0..16u64 {
            let u = decode_vector(2, 4, code);
            if vec_is_zero(&classes.d2.matvec(&u)) {
                cocycle_count += 1;
                assert!(classes.cocycles.contains(&u));
            } else {
                assert!(!classes.cocycles.contains(&u));
            }
            if classes.coboundaries.contains(&u) {
                coboundary_count += 1;
            }
        }
        assert_eq!(cocycle_count, 4);
        assert_eq!(coboundary_count, 2);
        // 4 cocycles / 2 coboundaries = 2 classes = 2^(dim H²)
        assert_eq!(classes.dim(), 1);
    }

    #[test]
    fn h2_of_scalars_vanishes() {
        let k = StructuredAlgebra {
            p: 2,
            dim: 1,
            kind: AlgebraKind::Hopf,
            labels: vec!["1".into()],
            mult: Some(vec![1]),
            unit: Some(vec![1]),
            comult: Some(vec![1]),
            counit: Some(vec![1]),
            antipode: None,
        }
        .validated()
        .unwrap();
        let classes = h2(&k);
        assert_eq!(classes.dim(), 0);
        assert_eq!(classes.cocycles.dim(), 1);
        assert_eq!(classes.coboundaries.dim(), 1);
    }

    #[test]
    fn h2_of_the_function_algebra_on_c2_is_nonzero() {
        let d2 = cyclic_group_algebra(2, 2).dual().unwrap();
        assert!(h2(&d2).dim() >= 1);
    }

    #[test]
    fn h2_of_the_cubic_line_exercises_signs() {
        // over F_3: Ker d² = span{1⊗1, x⊗x, x⊗x² + x²⊗x} and x⊗x = d¹(x²)
        let w = restricted_line(3);
        let classes = h2(&w);
        assert_eq!(classes.cocycles.dim(), 3);
        assert_eq!(classes.coboundaries.dim(), 2);
        let mut xx = vec![0u64; 9];
        xx[1 * 3 + 1] = 1;
        assert!(classes.coboundaries.contains(&xx));
        let mut witt = vec![0u64; 9];
        witt[1 * 3 + 2] = 1;
        witt[2 * 3 + 1] = 1;
        assert_eq!(classes.representatives, vec![witt]);
    }

    #[test]
    fn decompose_recovers_representatives_and_coboundaries() {
        let line = primitive_truncated_line(2);
        let classes = h2(&line);
        // a representative decomposes as itself with no correction
        let (alphas, y) = decompose_cocycle(&classes, &[0, 0, 0, 1]).unwrap();
        assert_eq!(alphas, vec![1]);
        assert!(y.is_zero());
        // a coboundary decomposes with zero α
        let (alphas, y) = decompose_cocycle(&classes, &[1, 0, 0, 0]).unwrap();
        assert_eq!(alphas, vec![0]);
        assert_eq!(classes.d1.matvec(&y.coords), vec![1, 0, 0, 0]);
        // mixed case
        let (alphas, _) = decompose_cocycle(&classes, &[1, 0, 0, 1]).unwrap();
        assert_eq!(alphas, vec![1]);
        // x⊗1 is not a cocycle
        assert!(matches!(decompose_cocycle(&classes, &[0, 0, 1, 0]), Err(Error::NotCocycle)));
    }

    #[test]
    fn coboundary_decomposition_has_zero_alphas_everywhere() {
        for h in [restricted_line(3), cyclic_group_algebra(2, 4).dual().unwrap()] {
            let classes = h2(&h);
            for code in [1u64, 2, 5, 7] {
                let y = decode_vector(h.p, h.dim, code);
                let u = classes.d1.matvec(&y);
                let (alphas, yy) = decompose_cocycle(&classes, &u).unwrap();
                assert!(alphas.iter().all(|&a| a == 0));
                assert_eq!(classes.d1.matvec(&yy.coords), u);
            }
        }
    }

    #[test]
    fn find_z_walks_up_the_cyclic_tower() {
        let h = cyclic_group_algebra(2, 4).dual().unwrap();
        let k = K_of(&h).unwrap();
        assert_eq!(k.dim(), 2);
        let w = find_z(&h, &k).unwrap();
        assert_eq!(w.degree, 2);
        assert!(!k.contains(&w.z.coords));
        assert!(w.alphas.iter().any(|&a| a != 0));
        assert_eq!(h.coproduct_defect(&w.z.coords), w.u);
        assert!(!w.classes.coboundaries.contains(&w.u_in_sub));
    }

    #[test]
    fn find_z_rejects_bad_inputs() {
        let h = cyclic_group_algebra(2, 4).dual().unwrap();
        let full = Subspace::full(2, 4);
        assert!(matches!(find_z(&h, &full), Err(Error::NotProper(_))));
        let scalars = Subspace::from_rows(2, 4, &[vec![1, 1, 1, 1]]);
        assert!(matches!(find_z(&h, &scalars), Err(Error::MissingCore)));
        let grouplike = cyclic_group_algebra(2, 4);
        let half = Subspace::from_rows(2, 4, &[vec![1, 0, 0, 0], vec![0, 0, 1, 0]]);
        assert!(matches!(find_z(&grouplike, &half), Err(Error::NotConnected(4))));
    }

    #[test]
    fn representatives_of_group_duals_are_frobenius_fixed() {
        for h in [
            cyclic_group_algebra(2, 2).dual().unwrap(),
            cyclic_group_algebra(2, 4).dual().unwrap(),
            cyclic_group_algebra(3, 3).dual().unwrap(),
        ] {
            let classes = h2(&h);
            assert!(frobenius_fixed_check(&h, &classes));
            let fixed = frobenius_fixed_representatives(&h, &classes).unwrap();
            assert_eq!(fixed, classes.representatives);
        }
    }
}
