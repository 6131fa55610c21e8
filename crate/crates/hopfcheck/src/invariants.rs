//! Semisimplicity and coalgebra invariants: Jacobson radical, integrals,
//! center, coradical filtration, primitive elements, and the restricted
//! structure carried by the primitive space.

use std::collections::HashSet;

use crate::algebra::{vec_is_zero, AlgebraKind, StructuredAlgebra};
use crate::linalg::{neg_mod, FpMatrix, Subspace};
use crate::{Error, Result};

/// Matrix of left multiplication by x on the basis: column j holds x·e_j.
pub fn left_multiplication(a: &StructuredAlgebra, x: &[u64]) -> FpMatrix {
    let n = a.dim;
    let mut m = FpMatrix::zeros(a.p, n, n);
    let mut e = vec![0u64; n];
    for j in 0..n {
        e[j] = 1;
        let col = a.multiply_vec(x, &e);
        e[j] = 0;
        for (i, &c) in col.iter().enumerate() {
            if c != 0 {
                m.set(i, j, c);
            }
        }
    }
    m
}

/// Jacobson radical by the characteristic-p trace-form chain. Starting from
/// I₋₁ = A, level i keeps the x with c_{pⁱ}(L_{x·y}) = 0 for every y in the
/// previous level, where c_d reads the coefficient of λ^{n−d} off the
/// characteristic polynomial of left multiplication; over the prime field
/// each level is a linear condition on x. The last level (pˡ ≤ n) is the
/// radical, and the result is checked to be a nilpotent two-sided ideal
/// before it is returned.
pub fn jacobson_radical(a: &StructuredAlgebra) -> Subspace {
    assert!(a.kind.has_algebra(), "radical requires a multiplication");
    let mut cur = Subspace::full(a.p, a.dim);
    let mut deg = 1u64;
    while deg <= a.dim as u64 && !cur.is_zero() {
        cur = radical_level(a, &cur, deg as usize);
        deg *= a.p;
    }
    assert!(is_nilpotent_ideal(a, &cur), "radical chain left a set that is not a nilpotent ideal");
    cur
}

fn radical_level(a: &StructuredAlgebra, prev: &Subspace, deg: usize) -> Subspace {
    let m = prev.dim();
    let n = a.dim;
    let rows = prev.basis_rows();
    let mut cond = FpMatrix::zeros(a.p, m, m);
    for t in 0..m {
        for s in 0..m {
            let prod = a.multiply_vec(&rows[s], &rows[t]);
            let cp = left_multiplication(a, &prod).charpoly();
            cond.set(t, s, cp[n - deg]);
        }
    }
    let lifted: Vec<Vec<u64>> = cond.kernel().basis_rows().iter().map(|xi| prev.lift(xi)).collect();
    Subspace::from_rows(a.p, n, &lifted)
}

fn is_nilpotent_ideal(a: &StructuredAlgebra, j: &Subspace) -> bool {
    let n = a.dim;
    let mut e = vec![0u64; n];
    for v in j.basis_rows() {
        for i in 0..n {
            e[i] = 1;
            let lv = a.multiply_vec(&e, &v);
            let rv = a.multiply_vec(&v, &e);
            e[i] = 0;
            if !j.contains(&lv) || !j.contains(&rv) {
                return false;
            }
        }
    }
    let mut pow = j.clone();
    for _ in 0..n {
        if pow.is_zero() {
            return true;
        }
        pow = product_span(a, &pow, j);
    }
    pow.is_zero()
}

/// Span of all pairwise products u·v with u in `u`, v in `v`.
pub fn product_span(a: &StructuredAlgebra, u: &Subspace, v: &Subspace) -> Subspace {
    let mut rows = Vec::new();
    for x in u.basis_rows() {
        for y in v.basis_rows() {
            rows.push(a.multiply_vec(&x, &y));
        }
    }
    Subspace::from_rows(a.p, a.dim, &rows)
}

pub fn is_semisimple(a: &StructuredAlgebra) -> bool {
    jacobson_radical(a).is_zero()
}

/// Exhaustive radical of a small commutative algebra: the span of every x
/// with x^dim = 0. Independent cross-check for [`jacobson_radical`]; the
/// p^dim enumeration is capped at 2^16 elements.
pub fn nilpotent_scan_radical(a: &StructuredAlgebra) -> Subspace {
    assert!(
        a.kind.has_algebra() && a.is_commutative(),
        "the nilpotency scan applies to commutative algebras"
    );
    let n = a.dim;
    let total = (a.p as u128).pow(n as u32);
    assert!(total <= 1 << 16, "scan space too large");
    let mut rows = Vec::new();
    for code in 0..total as u64 {
        let x = decode_vector(a.p, n, code);
        if vec_is_zero(&a.element_pow(&x, n as u64)) {
            rows.push(x);
        }
    }
    Subspace::from_rows(a.p, n, &rows)
}

pub(crate) fn decode_vector(p: u64, n: usize, mut code: u64) -> Vec<u64> {
    (0..n)
        .map(|_| {
            let d = code % p;
            code /= p;
            d
        })
        .collect()
}

/// The spaces of left and right integrals together with whether ε is nonzero
/// on them. For a finite-dimensional Hopf algebra both spaces are lines, and
/// ε(∫) ≠ 0 is the Maschke criterion for semisimplicity.
#[derive(Clone, Debug)]
pub struct Integrals {
    pub left: Subspace,
    pub right: Subspace,
    pub eps_left_nonzero: bool,
    pub eps_right_nonzero: bool,
}

pub fn integrals(h: &StructuredAlgebra) -> Result<Integrals> {
    assert!(
        h.kind.has_algebra() && h.kind.has_coalgebra(),
        "integrals need a multiplication and a counit"
    );
    let left = integral_space(h, true)?;
    let right = integral_space(h, false)?;
    let eps_left_nonzero = h.counit_of_vec(&left.basis_rows()[0]) != 0;
    let eps_right_nonzero = h.counit_of_vec(&right.basis_rows()[0]) != 0;
    Ok(Integrals { left, right, eps_left_nonzero, eps_right_nonzero })
}

/// Solutions of h·t = ε(h)·t (left) or t·h = ε(h)·t (right) for all h.
fn integral_space(h: &StructuredAlgebra, left: bool) -> Result<Subspace> {
    let n = h.dim;
    let eps = h.counit_vec().to_vec();
    let mut stacked = FpMatrix::zeros(h.p, n * n, n);
    for i in 0..n {
        for c in 0..n {
            let prod = if left { h.mult_row(i, c) } else { h.mult_row(c, i) };
            for r in 0..n {
                let mut v = prod[r];
                if r == c {
                    v = (v + neg_mod(eps[i], h.p)) % h.p;
                }
                if v != 0 {
                    stacked.set(i * n + r, c, v);
                }
            }
        }
    }
    let ker = stacked.kernel();
    if ker.dim() != 1 {
        return Err(Error::IntegralDimension(ker.dim()));
    }
    Ok(ker)
}

/// Center of the underlying algebra.
pub fn center(a: &StructuredAlgebra) -> Subspace {
    assert!(a.kind.has_algebra(), "center requires a multiplication");
    let n = a.dim;
    let mut stacked = FpMatrix::zeros(a.p, n * n, n);
    for i in 0..n {
        for c in 0..n {
            let l = a.mult_row(i, c);
            let r = a.mult_row(c, i);
            for row in 0..n {
                let v = (l[row] + neg_mod(r[row], a.p)) % a.p;
                if v != 0 {
                    stacked.set(i * n + row, c, v);
                }
            }
        }
    }
    stacked.kernel()
}

/// The coradical H₀: the sum of all simple subcoalgebras, computed as the
/// annihilator of the Jacobson radical of the dual algebra.
pub fn coradical(h: &StructuredAlgebra) -> Result<Subspace> {
    let dual = h.dual_algebra()?;
    let j = jacobson_radical(&dual);
    if j.is_zero() {
        return Ok(Subspace::full(h.p, h.dim));
    }
    Ok(j.basis().kernel())
}

pub fn is_connected(h: &StructuredAlgebra) -> Result<bool> {
    Ok(coradical(h)?.dim() == 1)
}

/// The chain H₀ ⊆ H₁ ⊆ … ⊆ H with Hₙ = Δ⁻¹(H ⊗ Hₙ₋₁ + H₀ ⊗ H).
#[derive(Clone, Debug)]
pub struct CoradicalFiltration {
    pub layers: Vec<Subspace>,
}

impl CoradicalFiltration {
    pub fn layer_dims(&self) -> Vec<usize> {
        self.layers.iter().map(Subspace::dim).collect()
    }

    /// Index of the first layer equal to H.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }
}

pub fn coradical_filtration(h: &StructuredAlgebra) -> Result<CoradicalFiltration> {
    let h0 = coradical(h)?;
    let q0 = h0.quotient_projection();
    let mut layers = vec![h0];
    while !layers.last().unwrap().is_full() {
        let prev = layers.last().unwrap();
        let next = tensor_preimage_kernel(h, &q0, &prev.quotient_projection());
        assert!(
            next.contains_subspace(prev) && next.dim() > prev.dim(),
            "coradical filtration failed to grow"
        );
        layers.push(next);
    }
    Ok(CoradicalFiltration { layers })
}

/// Kernel of (qa ⊗ qb) ∘ Δ without forming the Kronecker product: per basis
/// element, reshape Δe_i into an n×n matrix T and flatten qa·T·qbᵀ.
fn tensor_preimage_kernel(h: &StructuredAlgebra, qa: &FpMatrix, qb: &FpMatrix) -> Subspace {
    let n = h.dim;
    let (ra, rb) = (qa.rows(), qb.rows());
    let qbt = qb.transpose();
    let mut cond = FpMatrix::zeros(h.p, ra * rb, n);
    for i in 0..n {
        let t = h.comult_row(i);
        let trows: Vec<Vec<u64>> = (0..n).map(|j| t[j * n..(j + 1) * n].to_vec()).collect();
        let tmat = FpMatrix::from_rows(h.p, n, &trows);
        let folded = qa.matmul(&tmat).matmul(&qbt);
        for r in 0..ra {
            for s in 0..rb {
                let v = folded.get(r, s);
                if v != 0 {
                    cond.set(r * rb + s, i, v);
                }
            }
        }
    }
    cond.kernel()
}

/// Elements with Δx = x⊗1 + 1⊗x.
pub fn primitive_space(h: &StructuredAlgebra) -> Subspace {
    assert!(h.kind.has_coalgebra(), "primitives require a comultiplication");
    let n = h.dim;
    let mut m = FpMatrix::zeros(h.p, n * n, n);
    let mut e = vec![0u64; n];
    for i in 0..n {
        e[i] = 1;
        let def = h.coproduct_defect(&e);
        e[i] = 0;
        for (t, &c) in def.iter().enumerate() {
            if c != 0 {
                m.set(t, i, c);
            }
        }
    }
    m.kernel()
}

/// Smallest antipode-stable subbialgebra containing the seed: adjoins the
/// unit, then closes under products, antipode images, and coproduct slices
/// (which keep the span a subcoalgebra). The result is certified by
/// restricting the full structure to it.
pub fn generated_hopf_subalgebra(h: &StructuredAlgebra, seed: &Subspace) -> Result<Subspace> {
    assert_eq!(h.kind, AlgebraKind::Hopf, "closure runs inside a Hopf algebra");
    let n = h.dim;
    let s = h.antipode_matrix()?;
    let mut v = seed.with_row(h.unit_vec());
    loop {
        let mut next = v.clone();
        let rows = v.basis_rows();
        for x in &rows {
            let t = h.comultiply_vec(x);
            for k in 0..n {
                let lslice: Vec<u64> = (0..n).map(|i| t[i * n + k]).collect();
                let rslice: Vec<u64> = (0..n).map(|j| t[k * n + j]).collect();
                next = next.with_row(&lslice).with_row(&rslice);
            }
            next = next.with_row(&s.matvec(x));
        }
        for x in &rows {
            for y in &rows {
                next = next.with_row(&h.multiply_vec(x, y));
            }
        }
        if next.dim() == v.dim() {
            break;
        }
        v = next;
    }
    h.restrict_to(&v)?;
    Ok(v)
}

/// The Hopf subalgebra generated by the primitive elements. For connected H
/// in characteristic p this is the restricted enveloping algebra of the
/// primitive p-Lie algebra g, of dimension p^dim(g).
#[allow(non_snake_case)]
pub fn K_of(h: &StructuredAlgebra) -> Result<Subspace> {
    generated_hopf_subalgebra(h, &primitive_space(h))
}

/// What the primitive space g carries as a restricted Lie algebra: its
/// dimension, whether the bracket vanishes, the linearized p-power map
/// (present exactly in the abelian case, where x ↦ xᵖ is additive), and
/// whether the p-powers span g.
#[derive(Clone, Debug)]
pub struct RestrictedStructureReport {
    pub primitive_dim: usize,
    pub abelian: bool,
    pub pmap_matrix: Option<FpMatrix>,
    pub pmap_bijective: bool,
    pub spans: bool,
}

pub fn restricted_structure(h: &StructuredAlgebra) -> RestrictedStructureReport {
    assert!(
        h.kind.has_algebra() && h.kind.has_coalgebra(),
        "restricted structure needs a bialgebra"
    );
    let g = primitive_space(h);
    let d = g.dim();
    let rows = g.basis_rows();
    let abelian =
        (0..d).all(|i| (i + 1..d).all(|j| vec_is_zero(&h.commutator_vec(&rows[i], &rows[j]))));
    if d == 0 {
        return RestrictedStructureReport {
            primitive_dim: 0,
            abelian: true,
            pmap_matrix: Some(FpMatrix::zeros(h.p, 0, 0)),
            pmap_bijective: true,
            spans: true,
        };
    }
    if abelian {
        let mut m = FpMatrix::zeros(h.p, d, d);
        for (j, x) in rows.iter().enumerate() {
            let xp = h.element_pow(x, h.p);
            let c = g.coords(&xp).expect("p-th powers of primitives are primitive");
            for (i, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    m.set(i, j, ci);
                }
            }
        }
        let bijective = m.inverse().is_some();
        RestrictedStructureReport {
            primitive_dim: d,
            abelian,
            pmap_matrix: Some(m),
            pmap_bijective: bijective,
            spans: bijective,
        }
    } else {
        // without additivity the p-power map must be read off pointwise
        let total = (h.p as u128).pow(d as u32);
        assert!(total <= 1 << 16, "primitive space too large to enumerate");
        let mut images = Vec::with_capacity(total as usize);
        for code in 0..total as u64 {
            let coeffs = decode_vector(h.p, d, code);
            images.push(h.element_pow(&g.lift(&coeffs), h.p));
        }
        let distinct: HashSet<&Vec<u64>> = images.iter().collect();
        let span = Subspace::from_rows(h.p, h.dim, &images);
        RestrictedStructureReport {
            primitive_dim: d,
            abelian,
            pmap_matrix: None,
            pmap_bijective: distinct.len() == images.len(),
            spans: span.dim() == d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::cyclic_group_algebra;
    use proptest::prelude::*;

    fn truncated_line(p: u64) -> StructuredAlgebra {
        crate::algebra::tests::primitive_truncated_line(p)
    }

    #[test]
    fn radical_of_modular_group_algebras() {
        let c2 = cyclic_group_algebra(2, 2);
        let j = jacobson_radical(&c2);
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&[1, 1]));
        assert!(!is_semisimple(&c2));

        let c4 = cyclic_group_algebra(2, 4);
        assert_eq!(jacobson_radical(&c4).dim(), 3);

        let c3 = cyclic_group_algebra(3, 3);
        let j3 = jacobson_radical(&c3);
        assert_eq!(j3.dim(), 2);
        assert!(j3.contains(&[2, 1, 0]));
    }

    #[test]
    fn maschke_direction_over_coprime_characteristic() {
        assert!(is_semisimple(&cyclic_group_algebra(3, 2)));
        assert!(is_semisimple(&cyclic_group_algebra(2, 3)));
        assert!(is_semisimple(&cyclic_group_algebra(5, 6)));
    }

    #[test]
    fn dual_of_modular_group_algebra_is_semisimple() {
        let dual = cyclic_group_algebra(2, 2).dual().unwrap();
        assert!(is_semisimple(&dual));
    }

    #[test]
    fn radical_of_truncated_line() {
        let line = truncated_line(2);
        let j = jacobson_radical(&line);
        assert_eq!(j.dim(), 1);
        assert!(j.contains(&[0, 1]));
    }

    #[test]
    fn scan_oracle_agrees_with_trace_form_chain() {
        let instances = [
            cyclic_group_algebra(2, 2),
            cyclic_group_algebra(2, 4),
            cyclic_group_algebra(2, 6),
            cyclic_group_algebra(3, 3),
            cyclic_group_algebra(3, 2),
            truncated_line(2),
            truncated_line(3),
            cyclic_group_algebra(2, 2).dual().unwrap(),
        ];
        for a in &instances {
            assert_eq!(jacobson_radical(a), nilpotent_scan_radical(a));
        }
    }

    #[test]
    fn integrals_of_group_algebras() {
        // Σ gⁱ is the two-sided integral; ε(Σ gⁱ) = n
        let c4 = cyclic_group_algebra(2, 4);
        let ints = integrals(&c4).unwrap();
        assert_eq!(ints.left.basis_rows(), vec![vec![1, 1, 1, 1]]);
        assert_eq!(ints.left, ints.right);
        assert!(!ints.eps_left_nonzero);
        assert!(!ints.eps_right_nonzero);

        let c3 = cyclic_group_algebra(2, 3);
        let ints = integrals(&c3).unwrap();
        assert!(ints.eps_left_nonzero);
        assert!(is_semisimple(&c3));
    }

    #[test]
    fn integrals_of_a_function_algebra() {
        // on (kC_2)* the integral is the delta function at the identity
        let dual = cyclic_group_algebra(2, 2).dual().unwrap();
        let ints = integrals(&dual).unwrap();
        assert_eq!(ints.left.basis_rows(), vec![vec![1, 0]]);
        assert!(ints.eps_left_nonzero && ints.eps_right_nonzero);
    }

    #[test]
    fn integral_dimension_failure_is_reported() {
        // ε(x) = 1 is not an algebra character on k[x]/(x²), and the
        // "integral" conditions then have no nonzero solution
        let mut line = truncated_line(2);
        line.counit = Some(vec![1, 1]);
        assert!(matches!(integrals(&line), Err(Error::IntegralDimension(0))));
    }

    #[test]
    fn center_of_commutative_algebra_is_everything() {
        assert!(center(&cyclic_group_algebra(2, 4)).is_full());
        assert!(center(&truncated_line(3)).is_full());
    }

    #[test]
    fn coradical_and_connectedness() {
        // grouplikes span kC_2, so its coradical is everything
        let c2 = cyclic_group_algebra(2, 2);
        assert!(coradical(&c2).unwrap().is_full());
        assert!(!is_connected(&c2).unwrap());

        // duals of p-group algebras and the truncated line are connected
        assert!(is_connected(&c2.dual().unwrap()).unwrap());
        assert!(is_connected(&truncated_line(2)).unwrap());
        assert!(is_connected(&cyclic_group_algebra(3, 3).dual().unwrap()).unwrap());

        // away from the modular case the dual is spanned by characters
        assert!(coradical(&cyclic_group_algebra(3, 2)).unwrap().is_full());
    }

    /// Filtration layers via dual radical powers: Hₙ = (J^{n+1})^⊥.
    fn filtration_dims_by_dual_powers(h: &StructuredAlgebra) -> Vec<usize> {
        let dual = h.dual_algebra().unwrap();
        let j = jacobson_radical(&dual);
        let mut dims = Vec::new();
        let mut pow = j.clone();
        loop {
            let dim = h.dim - pow.dim();
            dims.push(dim);
            if dim == h.dim {
                return dims;
            }
            pow = product_span(&dual, &pow, &j);
        }
    }

    #[test]
    fn filtration_of_cyclic_duals() {
        let d4 = cyclic_group_algebra(2, 4).dual().unwrap();
        let filt = coradical_filtration(&d4).unwrap();
        assert_eq!(filt.layer_dims(), vec![1, 2, 3, 4]);
        assert_eq!(filt.layer_dims(), filtration_dims_by_dual_powers(&d4));
        assert_eq!(filt.depth(), 3);

        let d8 = cyclic_group_algebra(2, 8).dual().unwrap();
        let filt = coradical_filtration(&d8).unwrap();
        assert_eq!(filt.layer_dims(), (1..=8).collect::<Vec<_>>());
        assert_eq!(filt.layer_dims(), filtration_dims_by_dual_powers(&d8));

        let d9 = cyclic_group_algebra(3, 9).dual().unwrap();
        assert_eq!(
            coradical_filtration(&d9).unwrap().layer_dims(),
            filtration_dims_by_dual_powers(&d9)
        );
    }

    #[test]
    fn filtration_of_a_cosemisimple_algebra_is_immediate() {
        let c4 = cyclic_group_algebra(2, 4);
        let filt = coradical_filtration(&c4).unwrap();
        assert_eq!(filt.layer_dims(), vec![4]);
        assert_eq!(filt.depth(), 0);
    }

    #[test]
    fn primitives_of_duals() {
        let d2 = cyclic_group_algebra(2, 2).dual().unwrap();
        let prim = primitive_space(&d2);
        assert_eq!(prim.basis_rows(), vec![vec![0, 1]]);

        // in (kC_4)* only f₁ + f₃ is primitive
        let d4 = cyclic_group_algebra(2, 4).dual().unwrap();
        let prim = primitive_space(&d4);
        assert_eq!(prim.basis_rows(), vec![vec![0, 1, 0, 1]]);
    }

    #[test]
    fn hopf_closure_of_primitives() {
        let d4 = cyclic_group_algebra(2, 4).dual().unwrap();
        let k = K_of(&d4).unwrap();
        assert_eq!(k.dim(), 2);
        assert!(k.contains(&[1, 1, 1, 1]));
        assert!(k.contains(&[0, 1, 0, 1]));

        // the line is generated by its primitive x
        let k = K_of(&truncated_line(2)).unwrap();
        assert!(k.is_full());

        // kC_2 has no nonzero primitives, so K is the scalars
        let k = K_of(&cyclic_group_algebra(2, 2)).unwrap();
        assert_eq!(k.dim(), 1);
    }

    #[test]
    fn restricted_structure_reports() {
        // f₁ + f₃ in (kC_4)* is a primitive idempotent: pᵗʰ power map is 1
        let d4 = cyclic_group_algebra(2, 4).dual().unwrap();
        let rep = restricted_structure(&d4);
        assert_eq!(rep.primitive_dim, 1);
        assert!(rep.abelian);
        assert_eq!(rep.pmap_matrix.as_ref().unwrap().get(0, 0), 1);
        assert!(rep.pmap_bijective && rep.spans);

        // x² = 0 in the line: the p-power map vanishes
        let rep = restricted_structure(&truncated_line(2));
        assert_eq!(rep.primitive_dim, 1);
        assert_eq!(rep.pmap_matrix.as_ref().unwrap().get(0, 0), 0);
        assert!(!rep.pmap_bijective && !rep.spans);

        // no primitives at all: everything holds vacuously
        let rep = restricted_structure(&cyclic_group_algebra(2, 2));
        assert_eq!(rep.primitive_dim, 0);
        assert!(rep.abelian && rep.pmap_bijective && rep.spans);
    }

    proptest! {
        /// kC_n over F_p is F_p[t]/(tⁿ − 1); writing n = m·pᵏ with p ∤ m,
        /// the squarefree part has dimension m, so the radical has n − m.
        #[test]
        fn radical_dimension_of_cyclic_group_algebras(
            n in 1usize..=9,
            p in prop_oneof![Just(2u64), Just(3), Just(5)],
        ) {
            let mut m = n;
            while m % p as usize == 0 {
                m /= p as usize;
            }
            let a = cyclic_group_algebra(p, n);
            prop_assert_eq!(jacobson_radical(&a).dim(), n - m);
        }

        /// Maschke both ways for cyclic groups: semisimple ⟺ p ∤ n ⟺ ε(∫) ≠ 0.
        #[test]
        fn integral_criterion_matches_radical(
            n in 1usize..=8,
            p in prop_oneof![Just(2u64), Just(3)],
        ) {
            let a = cyclic_group_algebra(p, n);
            let semisimple = is_semisimple(&a);
            let ints = integrals(&a).unwrap();
            prop_assert_eq!(semisimple, n % p as usize != 0);
            prop_assert_eq!(ints.eps_left_nonzero, semisimple);
            prop_assert_eq!(ints.eps_right_nonzero, semisimple);
        }
    }
}
