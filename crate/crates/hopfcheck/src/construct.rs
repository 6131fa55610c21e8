//! Constructors: group algebras and their duals, restricted enveloping
//! algebras, cocycle extensions, crossed products, and Hopf quotients.
//!
//! Every builder funnels its output through [`StructuredAlgebra::validated`],
//! so a hypothesis the builder cannot test directly (restrictedness of a
//! p-map, the cocycle identity for a crossed product) surfaces as a concrete
//! axiom violation instead of a silently wrong algebra.

use std::collections::BTreeMap;

use crate::algebra::{vec_add, vec_is_zero, vec_scale, AlgebraKind, Element, StructuredAlgebra};
use crate::groups::GroupTable;
use crate::linalg::{neg_mod, pow_mod, FpMatrix, Subspace};
use crate::{Error, Result};

/// Dense structure tensors are cubic in the dimension, so builders refuse to
/// produce anything larger than this.
pub const MAX_CONSTRUCTED_DIM: usize = 128;

fn check_dim(n: usize) -> Result<usize> {
    if n > MAX_CONSTRUCTED_DIM {
        Err(Error::DimensionTooLarge(n, MAX_CONSTRUCTED_DIM))
    } else {
        Ok(n)
    }
}

/// The group algebra kG: grouplike basis indexed by the group elements,
/// Δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
pub fn group_algebra(p: u64, g: &GroupTable) -> StructuredAlgebra {
    let n = g.order();
    let mut mult = vec![0u64; n * n * n];
    let mut comult = vec![0u64; n * n * n];
    let mut antipode = FpMatrix::zeros(p, n, n);
    for i in 0..n {
        comult[i * n * n + i * n + i] = 1;
        antipode.set(g.inverse(i), i, 1);
        for j in 0..n {
            mult[(i * n + j) * n + g.mul(i, j)] = 1;
        }
    }
    let mut unit = vec![0u64; n];
    unit[g.identity()] = 1;
    StructuredAlgebra {
        p,
        dim: n,
        kind: AlgebraKind::Hopf,
        labels: StructuredAlgebra::default_labels(n, "g"),
        mult: Some(mult),
        unit: Some(unit),
        comult: Some(comult),
        counit: Some(vec![1; n]),
        antipode: Some(antipode),
    }
    .validated()
    .expect("group axioms imply the Hopf axioms")
}

/// The function algebra (kG)* on the dual basis f_x: pointwise idempotent
/// products, Δ(f_x) = Σ_{uv=x} f_u⊗f_v, ε(f_x) = δ_{x,e}, S(f_x) = f_{x⁻¹}.
///
/// This equals `group_algebra(p, g).dual()` tensor for tensor (only the
/// labels differ); the direct construction keeps that fact testable.
pub fn group_dual(p: u64, g: &GroupTable) -> StructuredAlgebra {
    let n = g.order();
    let mut mult = vec![0u64; n * n * n];
    let mut comult = vec![0u64; n * n * n];
    let mut antipode = FpMatrix::zeros(p, n, n);
    for u in 0..n {
        mult[(u * n + u) * n + u] = 1;
        antipode.set(g.inverse(u), u, 1);
        for v in 0..n {
            comult[g.mul(u, v) * n * n + u * n + v] = 1;
        }
    }
    let mut counit = vec![0u64; n];
    counit[g.identity()] = 1;
    StructuredAlgebra {
        p,
        dim: n,
        kind: AlgebraKind::Hopf,
        labels: StructuredAlgebra::default_labels(n, "f"),
        mult: Some(mult),
        unit: Some(vec![1; n]),
        comult: Some(comult),
        counit: Some(counit),
        antipode: Some(antipode),
    }
    .validated()
    .expect("the dual of a group algebra satisfies the Hopf axioms")
}

/// A restricted Lie algebra by structure constants: `bracket[(i·d + j)·d + k]`
/// is the coefficient of x_k in [x_i, x_j], and `pmap[i·d + k]` the
/// coefficient of x_k in x_i^{[p]}.
///
/// [`validate`](Self::validate) checks the Lie identities (alternating
/// bracket, Jacobi). Compatibility of the p-map with the bracket is *not*
/// checked here; it is certified after the fact when
/// [`restricted_enveloping`] validates the algebra it produced. An
/// incompatible p-map breaks associativity of the straightened product, so
/// it cannot slip through.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictedLieData {
    pub p: u64,
    pub dim: usize,
    pub bracket: Vec<u64>,
    pub pmap: Vec<u64>,
}

impl RestrictedLieData {
    /// Structure constants of [x_i, x_j].
    pub fn bracket_of(&self, i: usize, j: usize) -> &[u64] {
        let d = self.dim;
        &self.bracket[(i * d + j) * d..(i * d + j + 1) * d]
    }

    /// Structure constants of x_i^{[p]}.
    pub fn pmap_of(&self, i: usize) -> &[u64] {
        &self.pmap[i * self.dim..(i + 1) * self.dim]
    }

    pub fn validate(&self) -> Result<()> {
        let (d, p) = (self.dim, self.p);
        if !crate::linalg::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if self.bracket.len() != d * d * d || self.pmap.len() != d * d {
            return Err(Error::InvalidLieData(format!(
                "expected {} bracket and {} p-map constants, got {} and {}",
                d * d * d,
                d * d,
                self.bracket.len(),
                self.pmap.len()
            )));
        }
        if self.bracket.iter().chain(self.pmap.iter()).any(|&c| c >= p) {
            return Err(Error::InvalidLieData(format!("coefficients must be reduced mod {p}")));
        }
        for i in 0..d {
            // alternating, not just antisymmetric: [x,x] = 0 matters at p = 2
            if !vec_is_zero(self.bracket_of(i, i)) {
                return Err(Error::InvalidLieData(format!("[x{i}, x{i}] must vanish")));
            }
            for j in 0..i {
                let s = vec_add(p, self.bracket_of(i, j), self.bracket_of(j, i));
                if !vec_is_zero(&s) {
                    return Err(Error::InvalidLieData(format!(
                        "[x{i}, x{j}] and [x{j}, x{i}] do not sum to zero"
                    )));
                }
            }
        }
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let mut acc = vec![0u64; d];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        let inner = self.bracket_of(a, b);
                        for (m, &cm) in inner.iter().enumerate() {
                            if cm != 0 {
                                let outer = self.bracket_of(m, c);
                                for (t, slot) in acc.iter_mut().enumerate() {
                                    *slot = (*slot + cm * outer[t]) % p;
                                }
                            }
                        }
                    }
                    if !vec_is_zero(&acc) {
                        return Err(Error::InvalidLieData(format!(
                            "Jacobi fails on (x{i}, x{j}, x{k})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

fn add_word(work: &mut BTreeMap<Vec<u8>, u64>, w: Vec<u8>, c: u64, p: u64) {
    if c % p == 0 {
        return;
    }
    let slot = work.entry(w).or_insert(0);
    *slot = (*slot + c) % p;
}

/// Rewrites the word to the PBW normal form, accumulating coefficients into
/// `out` (indexed by Σ e_i·p^i). An out-of-order adjacent pair x_u x_v with
/// u > v becomes x_v x_u + [x_u, x_v]; a run of p equal letters becomes the
/// p-map image. Both moves strictly decrease (degree, inversion count)
/// lexicographically, so the rewriting terminates whatever the order of
/// processing.
fn straighten(g: &RestrictedLieData, word: Vec<u8>, out: &mut [u64]) {
    let p = g.p;
    let pu = p as usize;
    let mut work = BTreeMap::new();
    add_word(&mut work, word, 1, p);
    while let Some((w, c)) = work.pop_first() {
        if c == 0 {
            continue;
        }
        if let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) {
            let (u, v) = (w[i] as usize, w[i + 1] as usize);
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            add_word(&mut work, swapped, c, p);
            for (k, &ck) in g.bracket_of(u, v).iter().enumerate() {
                if ck != 0 {
                    let mut repl = Vec::with_capacity(w.len() - 1);
                    repl.extend_from_slice(&w[..i]);
                    repl.push(k as u8);
                    repl.extend_from_slice(&w[i + 2..]);
                    add_word(&mut work, repl, c * ck % p, p);
                }
            }
            continue;
        }
        // sorted; look for the leftmost run of p equal letters
        if let Some(i) = (0..w.len().saturating_sub(pu - 1))
            .find(|&i| w[i + 1..i + pu].iter().all(|&x| x == w[i]))
        {
            for (k, &ck) in g.pmap_of(w[i] as usize).iter().enumerate() {
                if ck != 0 {
                    let mut repl = Vec::with_capacity(w.len() + 1 - pu);
                    repl.extend_from_slice(&w[..i]);
                    repl.push(k as u8);
                    repl.extend_from_slice(&w[i + pu..]);
                    add_word(&mut work, repl, c * ck % p, p);
                }
            }
            continue;
        }
        let mut idx = 0usize;
        for &letter in &w {
            idx += pu.pow(letter as u32);
        }
        out[idx] = (out[idx] + c) % p;
    }
}

fn monomial_word(mut m: usize, d: usize, pu: usize) -> Vec<u8> {
    let mut w = Vec::new();
    for gen in 0..d {
        let e = m % pu;
        m /= pu;
        w.extend(std::iter::repeat_n(gen as u8, e));
    }
    w
}

fn monomial_label(m: usize, d: usize, pu: usize) -> String {
    if m == 0 {
        return "1".into();
    }
    let mut parts = Vec::new();
    let mut rest = m;
    for gen in 0..d {
        let e = rest % pu;
        rest /= pu;
        match e {
            0 => {}
            1 => parts.push(format!("x{gen}")),
            _ => parts.push(format!("x{gen}^{e}")),
        }
    }
    parts.join("*")
}

/// The restricted enveloping algebra u(g) on the PBW basis
/// x_0^{e_0}···x_{d−1}^{e_{d−1}}, e_i < p, indexed by Σ e_i·p^i. Generators
/// are primitive; products are computed by [`straighten`].
///
/// Validation of the result doubles as the restrictedness check: if the
/// p-map is not compatible with the bracket, the straightened product is not
/// associative and the error reports the offending triple.
pub fn restricted_enveloping(g: &RestrictedLieData) -> Result<StructuredAlgebra> {
    g.validate()?;
    let (d, p) = (g.dim, g.p);
    let pu = p as usize;
    let big = (pu as u128).checked_pow(d as u32).unwrap_or(u128::MAX);
    if big > MAX_CONSTRUCTED_DIM as u128 {
        return Err(Error::DimensionTooLarge(
            big.min(usize::MAX as u128) as usize,
            MAX_CONSTRUCTED_DIM,
        ));
    }
    let n = big as usize;

    let mut mult = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            let mut word = monomial_word(i, d, pu);
            word.extend(monomial_word(j, d, pu));
            straighten(g, word, &mut mult[(i * n + j) * n..(i * n + j + 1) * n]);
        }
    }
    let mut unit = vec![0u64; n];
    unit[0] = 1;
    let labels = (0..n).map(|m| monomial_label(m, d, pu)).collect();
    let mut alg = StructuredAlgebra {
        p,
        dim: n,
        kind: AlgebraKind::Algebra,
        labels,
        mult: Some(mult),
        unit: Some(unit),
        comult: None,
        counit: None,
        antipode: None,
    };

    // Δ(x_g) = x_g⊗1 + 1⊗x_g, extended multiplicatively along
    // monomial(m) = x_g·monomial(m − p^g) for the smallest g occurring in m.
    let mut comult = vec![0u64; n * n * n];
    let mut dp: Vec<Vec<u64>> = vec![Vec::new(); n];
    let mut one = vec![0u64; n * n];
    one[0] = 1;
    dp[0] = one;
    for m in 1..n {
        let gen = (0..d).find(|&g| (m / pu.pow(g as u32)) % pu != 0).expect("m > 0");
        let step = pu.pow(gen as u32);
        let mut prim = vec![0u64; n * n];
        prim[step * n] = 1;
        prim[step] = 1;
        dp[m] = alg.tensor_square_multiply(&prim, &dp[m - step]);
        comult[m * n * n..(m + 1) * n * n].copy_from_slice(&dp[m]);
    }
    comult[0] = 1;
    let mut counit = vec![0u64; n];
    counit[0] = 1;
    alg.comult = Some(comult);
    alg.counit = Some(counit);
    alg.kind = AlgebraKind::Hopf;
    alg.antipode =
        Some(alg.compute_antipode().map_err(|_| {
            Error::NotRestricted("the straightened product has no antipode".into())
        })?);
    let alg = alg.validated().map_err(|e| match e {
        Error::AxiomViolations(v) => Error::NotRestricted(format!(
            "validation found {} violation(s); first: {}",
            v.len(),
            v[0]
        )),
        other => other,
    })?;

    // certify the presentation: generators multiply back to the input data
    for i in 0..d {
        let xi = Element::basis(n, pu.pow(i as u32));
        for j in 0..d {
            let xj = Element::basis(n, pu.pow(j as u32));
            let br = alg.commutator(&xi, &xj);
            let mut expected = vec![0u64; n];
            for (k, &c) in g.bracket_of(i, j).iter().enumerate() {
                expected[pu.pow(k as u32)] = c;
            }
            assert_eq!(br.coords, expected, "straightening disagrees with the bracket");
        }
        let mut expected = vec![0u64; n];
        for (k, &c) in g.pmap_of(i).iter().enumerate() {
            expected[pu.pow(k as u32)] = c;
        }
        assert_eq!(alg.element_pow(&xi.coords, p), expected, "x^p disagrees with the p-map");
    }
    Ok(alg)
}

/// Data for adjoining a generator z to a commutative Hopf algebra L along a
/// 2-cocycle u ∈ L⊗L, subject to the monic p-polynomial relation
///
/// ```text
/// z^{p^l} + lower[l−1]·z^{p^{l−1}} + ··· + lower[0]·z + constant = 0
/// ```
///
/// with `l = lower.len() ≥ 1` and `constant` an element of L. The coproduct
/// extends Δ(z) = z⊗1 + 1⊗z + u as an algebra map.
#[derive(Clone, Debug)]
pub struct CocycleExtensionSpec {
    pub base: StructuredAlgebra,
    /// u ∈ L⊗L, length dim(L)².
    pub cocycle: Vec<u64>,
    /// lower[i] multiplies z^{p^i}.
    pub lower: Vec<u64>,
    /// Constant term, an element of L.
    pub constant: Vec<u64>,
}

/// A successful [`adjoin_cocycle_element`]: the extension H = L[z]/(relation)
/// together with z and the cocycle re-embedded in H⊗H. L sits inside H as
/// the first dim(L) coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleExtension {
    pub algebra: StructuredAlgebra,
    pub z: Element,
    /// The defect Δ(z) − z⊗1 − 1⊗z in H⊗H coordinates.
    pub cocycle: Vec<u64>,
    pub base_dim: usize,
}

/// Extends a commutative Hopf algebra by a new generator whose coproduct
/// defect is a prescribed 2-cocycle.
///
/// The relation must be compatible with the coproduct: applying Δ to it and
/// using (Δz)^{p^m} = z^{p^m}⊗1 + 1⊗z^{p^m} + u^{p^m} (freshman's dream in
/// the commutative tensor square) reduces compatibility to the identity
/// u^{p^l} + Σ lower[i]·u^{p^i} = d¹(constant) in L⊗L, and to ε annihilating
/// the relation. Both are checked up front; the assembled algebra is then
/// validated in full.
pub fn adjoin_cocycle_element(spec: &CocycleExtensionSpec) -> Result<CocycleExtension> {
    let l = &spec.base;
    let (p, nl) = (l.p, l.dim);
    let ell = spec.lower.len();
    assert!(ell >= 1, "the relation must involve z^{{p^l}} with l >= 1");
    assert_eq!(spec.cocycle.len(), nl * nl, "cocycle must live in L tensor L");
    assert_eq!(spec.constant.len(), nl, "constant term must be an element of L");
    if l.kind != AlgebraKind::Hopf {
        return Err(if l.kind.has_coalgebra() {
            Error::MissingAntipode
        } else {
            Error::MissingCoalgebra
        });
    }
    if !l.is_commutative() {
        return Err(Error::BaseNotCommutative);
    }
    if spec.lower.iter().any(|&c| c >= p) || spec.cocycle.iter().any(|&c| c >= p) {
        return Err(Error::IncompatibleRelation(format!("coefficients must be reduced mod {p}")));
    }
    let d2 = crate::cohomology::differential(l, 2)?;
    if !vec_is_zero(&d2.matvec(&spec.cocycle)) {
        return Err(Error::NotCocycle);
    }

    // ε(z) is forced by the counit axiom: (ε⊗id)Δz = z gives
    // ε(z)·1 = −(ε⊗id)u, and for a 2-cocycle (ε⊗id)u = (ε⊗ε)u·1.
    let eps = l.counit_vec();
    let mut s = 0u64;
    for i in 0..nl {
        for j in 0..nl {
            s = (s + eps[i] * eps[j] % p * spec.cocycle[i * nl + j]) % p;
        }
    }
    let eps_z = neg_mod(s, p);

    let big128 = (p as u128).checked_pow(ell as u32).unwrap_or(u128::MAX);
    let n128 = big128.saturating_mul(nl as u128);
    if n128 > MAX_CONSTRUCTED_DIM as u128 {
        return Err(Error::DimensionTooLarge(
            n128.min(usize::MAX as u128) as usize,
            MAX_CONSTRUCTED_DIM,
        ));
    }
    let big = big128 as usize;
    let n = big * nl;

    let d1 = crate::cohomology::differential(l, 1)?;
    let mut lhs = l.tensor_square_pow(&spec.cocycle, big as u64);
    for (i, &c) in spec.lower.iter().enumerate() {
        if c != 0 {
            let power = l.tensor_square_pow(&spec.cocycle, p_power(p, i));
            lhs = vec_add(p, &lhs, &vec_scale(p, c, &power));
        }
    }
    if lhs != d1.matvec(&spec.constant) {
        return Err(Error::IncompatibleRelation(
            "u^{p^l} + sum lower[i]*u^{p^i} is not the coboundary of the constant term".into(),
        ));
    }
    let mut eps_rel = pow_mod(eps_z, big as u64, p);
    for (i, &c) in spec.lower.iter().enumerate() {
        eps_rel = (eps_rel + c * pow_mod(eps_z, p_power(p, i), p)) % p;
    }
    eps_rel = (eps_rel + l.counit_of_vec(&spec.constant)) % p;
    if eps_rel != 0 {
        return Err(Error::IncompatibleRelation(
            "the counit does not annihilate the relation".into(),
        ));
    }

    // powers of z, reduced: z^{p^l} = −(Σ lower[i]·z^{p^i} + constant)
    let unit_l = l.unit_vec();
    let mut red = vec![vec![0u64; n]; 2 * big - 1];
    for (m, row) in red.iter_mut().enumerate().take(big) {
        for b in 0..nl {
            row[m * nl + b] = unit_l[b];
        }
    }
    for m in big..2 * big - 1 {
        let tail = m - big;
        let mut v = vec![0u64; n];
        for (i, &c) in spec.lower.iter().enumerate() {
            if c != 0 {
                let idx = tail + p_power(p, i) as usize;
                v = vec_add(p, &v, &vec_scale(p, c, &red[idx]));
            }
        }
        for b in 0..nl {
            v[tail * nl + b] = (v[tail * nl + b] + spec.constant[b]) % p;
        }
        red[m] = vec_scale(p, p - 1, &v);
    }

    // e_c·z^m for every base coordinate c: rescale each z-block by L's mult
    let mut redmul = vec![vec![vec![0u64; n]; 2 * big - 1]; nl];
    for (c, rows) in redmul.iter_mut().enumerate() {
        for (m, out) in rows.iter_mut().enumerate() {
            for t in 0..big {
                for dd in 0..nl {
                    let coef = red[m][t * nl + dd];
                    if coef != 0 {
                        let prod = l.mult_row(c, dd);
                        for k in 0..nl {
                            out[t * nl + k] = (out[t * nl + k] + coef * prod[k]) % p;
                        }
                    }
                }
            }
        }
    }

    // (e_a z^s)(e_b z^t) = Σ_c (e_a e_b)[c] · e_c z^{s+t}
    let mut mult = vec![0u64; n * n * n];
    for s in 0..big {
        for a in 0..nl {
            let i = s * nl + a;
            for t in 0..big {
                for b in 0..nl {
                    let j = t * nl + b;
                    let lprod = l.mult_row(a, b);
                    let slot = &mut mult[(i * n + j) * n..(i * n + j + 1) * n];
                    for (c, &lc) in lprod.iter().enumerate() {
                        if lc != 0 {
                            for (k, &r) in redmul[c][s + t].iter().enumerate() {
                                if r != 0 {
                                    slot[k] = (slot[k] + lc * r) % p;
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let mut unit = vec![0u64; n];
    unit[..nl].copy_from_slice(unit_l);
    let labels = (0..n)
        .map(|i| {
            let (t, b) = (i / nl, i % nl);
            let base = &l.labels[b];
            match (t, base.as_str()) {
                (0, _) => base.clone(),
                (1, "1") => "z".into(),
                (_, "1") => format!("z^{t}"),
                (1, _) => format!("{base}*z"),
                _ => format!("{base}*z^{t}"),
            }
        })
        .collect();
    let mut ext = StructuredAlgebra {
        p,
        dim: n,
        kind: AlgebraKind::Algebra,
        labels,
        mult: Some(mult),
        unit: Some(unit),
        comult: None,
        counit: None,
        antipode: None,
    };

    // Δ(e_b z^t) = Δ_L(e_b)·(Δz)^t with Δz = z⊗1 + 1⊗z + u
    let one = &red[0];
    let zv = &red[1];
    let mut dz = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            dz[i * n + j] = (zv[i] * one[j] + one[i] * zv[j]) % p;
        }
    }
    let mut u_emb = vec![0u64; n * n];
    for a in 0..nl {
        for b in 0..nl {
            u_emb[a * n + b] = spec.cocycle[a * nl + b];
        }
    }
    dz = vec_add(p, &dz, &u_emb);
    let mut dzpow: Vec<Vec<u64>> = Vec::with_capacity(big);
    let mut one_one = vec![0u64; n * n];
    for i in 0..n {
        for j in 0..n {
            one_one[i * n + j] = one[i] * one[j] % p;
        }
    }
    dzpow.push(one_one);
    for t in 1..big {
        let next = ext.tensor_square_multiply(&dz, &dzpow[t - 1]);
        dzpow.push(next);
    }
    let mut comult = vec![0u64; n * n * n];
    let mut counit = vec![0u64; n];
    for t in 0..big {
        for b in 0..nl {
            let i = t * nl + b;
            let crow = l.comult_row(b);
            let mut emb = vec![0u64; n * n];
            for al in 0..nl {
                for be in 0..nl {
                    emb[al * n + be] = crow[al * nl + be];
                }
            }
            let row = ext.tensor_square_multiply(&emb, &dzpow[t]);
            comult[i * n * n..(i + 1) * n * n].copy_from_slice(&row);
            counit[i] = eps[b] * pow_mod(eps_z, t as u64, p) % p;
        }
    }
    ext.comult = Some(comult);
    ext.counit = Some(counit);
    ext.kind = AlgebraKind::Hopf;
    ext.antipode = Some(
        ext.compute_antipode()
            .map_err(|_| Error::IncompatibleRelation("the extension admits no antipode".into()))?,
    );
    let ext = ext.validated().map_err(|e| match e {
        Error::AxiomViolations(v) => Error::IncompatibleRelation(format!(
            "validation found {} violation(s); first: {}",
            v.len(),
            v[0]
        )),
        other => other,
    })?;
    Ok(CocycleExtension {
        z: Element::from_coords(red[1].clone()),
        cocycle: u_emb,
        base_dim: nl,
        algebra: ext,
    })
}

/// p^e as a plain integer. Callers only need exponents below the dimension
/// guard, so this cannot overflow.
fn p_power(p: u64, e: usize) -> u64 {
    (0..e).fold(1u64, |acc, _| acc * p)
}

/// The crossed product A #_σ H:
///
/// ```text
/// (a # h)(b # k) = Σ a·(h₁·b)·σ(h₂, k₁) # h₃·k₂
/// ```
///
/// `action[(t·dimA + a)·dimA + c]` is the coefficient of e_c in e_t·e_a and
/// `sigma[(t·dimH + s)·dimA + c]` the coefficient of e_c in σ(e_t, e_s).
/// Basis convention in the output: a # h ↦ a·dimH + h.
///
/// The action must measure (checked on basis triples) and σ must be
/// convolution invertible (solved as a linear system). The cocycle and
/// twisted-module conditions on σ are *not* checked separately: they are
/// equivalent to associativity and unitality of the result, which the final
/// validation establishes.
pub fn crossed_product(
    a: &StructuredAlgebra,
    h: &StructuredAlgebra,
    action: &[u64],
    sigma: &[u64],
) -> Result<StructuredAlgebra> {
    assert!(a.kind.has_algebra(), "A must carry an algebra structure");
    assert!(
        h.kind.has_algebra() && h.kind.has_coalgebra(),
        "H must carry both algebra and coalgebra structure"
    );
    if a.p != h.p {
        return Err(Error::ModulusMismatch(a.p, h.p));
    }
    let (na, nh, p) = (a.dim, h.dim, a.p);
    assert_eq!(action.len(), nh * na * na, "action table has the wrong length");
    assert_eq!(sigma.len(), nh * nh * na, "sigma table has the wrong length");
    let n = check_dim(na * nh)?;

    let act = |t: usize, x: usize| &action[(t * na + x) * na..(t * na + x + 1) * na];
    let sig = |t: usize, s: usize| &sigma[(t * nh + s) * na..(t * nh + s + 1) * na];

    // measuring: t·1 = ε(t)·1 and t·(xy) = Σ (t₁·x)(t₂·y)
    for t in 0..nh {
        let mut lhs = vec![0u64; na];
        for (x, &c) in a.unit_vec().iter().enumerate() {
            if c != 0 {
                let row = act(t, x);
                for r in 0..na {
                    lhs[r] = (lhs[r] + c * row[r]) % p;
                }
            }
        }
        if lhs != vec_scale(p, h.counit_vec()[t], a.unit_vec()) {
            return Err(Error::NotMeasuring(format!(
                "basis element {t} of H does not send 1 to its counit multiple"
            )));
        }
        let dt = h.comult_row(t);
        for x in 0..na {
            for y in 0..na {
                let mut lhs = vec![0u64; na];
                for (c, &m) in a.mult_row(x, y).iter().enumerate() {
                    if m != 0 {
                        let row = act(t, c);
                        for r in 0..na {
                            lhs[r] = (lhs[r] + m * row[r]) % p;
                        }
                    }
                }
                let mut rhs = vec![0u64; na];
                for h1 in 0..nh {
                    for h2 in 0..nh {
                        let c = dt[h1 * nh + h2];
                        if c != 0 {
                            let w = a.multiply_vec(act(h1, x), act(h2, y));
                            for r in 0..na {
                                rhs[r] = (rhs[r] + c * w[r]) % p;
                            }
                        }
                    }
                }
                if lhs != rhs {
                    return Err(Error::NotMeasuring(format!(
                        "measuring fails on H basis {t} and A basis pair ({x}, {y})"
                    )));
                }
            }
        }
    }

    // convolution inverse of σ in Hom(H⊗H, A): σ*τ = uε, then the check that
    // τ*σ = uε too (automatic in a finite-dimensional convolution algebra,
    // but cheap to confirm)
    let unknowns = nh * nh * na;
    assert!(unknowns <= 8192, "convolution-inverse solve is too large ({unknowns} unknowns)");
    let mut m = FpMatrix::zeros(p, unknowns, unknowns);
    let mut rhs = vec![0u64; unknowns];
    for hh in 0..nh {
        let dh = h.comult_row(hh);
        for kk in 0..nh {
            let dk = h.comult_row(kk);
            for r in 0..na {
                rhs[(hh * nh + kk) * na + r] =
                    h.counit_vec()[hh] * h.counit_vec()[kk] % p * a.unit_vec()[r] % p;
            }
            for h1 in 0..nh {
                for h2 in 0..nh {
                    let c1 = dh[h1 * nh + h2];
                    if c1 == 0 {
                        continue;
                    }
                    for k1 in 0..nh {
                        for k2 in 0..nh {
                            let c2 = dk[k1 * nh + k2];
                            if c2 == 0 {
                                continue;
                            }
                            let sv = sig(h1, k1);
                            for cc in 0..na {
                                let mut ecc = vec![0u64; na];
                                ecc[cc] = 1;
                                let prod = a.multiply_vec(sv, &ecc);
                                let col = (h2 * nh + k2) * na + cc;
                                for r in 0..na {
                                    let row = (hh * nh + kk) * na + r;
                                    let add = c1 * c2 % p * prod[r] % p;
                                    if add != 0 {
                                        m.set(row, col, (m.get(row, col) + add) % p);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let tau = m.solve(&rhs).ok_or(Error::NotConvolutionInvertible)?;
    {
        // τ*σ on every basis pair
        for hh in 0..nh {
            let dh = h.comult_row(hh);
            for kk in 0..nh {
                let dk = h.comult_row(kk);
                let mut acc = vec![0u64; na];
                for h1 in 0..nh {
                    for h2 in 0..nh {
                        let c1 = dh[h1 * nh + h2];
                        if c1 == 0 {
                            continue;
                        }
                        for k1 in 0..nh {
                            for k2 in 0..nh {
                                let c2 = dk[k1 * nh + k2];
                                if c2 == 0 {
                                    continue;
                                }
                                let tv = &tau[(h1 * nh + k1) * na..(h1 * nh + k1 + 1) * na];
                                let prod = a.multiply_vec(tv, sig(h2, k2));
                                let c = c1 * c2 % p;
                                for r in 0..na {
                                    acc[r] = (acc[r] + c * prod[r]) % p;
                                }
                            }
                        }
                    }
                }
                let expected =
                    vec_scale(p, h.counit_vec()[hh] * h.counit_vec()[kk] % p, a.unit_vec());
                assert_eq!(acc, expected, "right convolution inverse is not two-sided");
            }
        }
    }

    let mut mult = vec![0u64; n * n * n];
    // Δ²(e_t) as a sparse list of (h₁, h₂, h₃, coeff)
    let d2h: Vec<Vec<(usize, usize, usize, u64)>> = (0..nh)
        .map(|t| {
            let dt = h.comult_row(t);
            let mut out = Vec::new();
            for mid in 0..nh {
                for h3 in 0..nh {
                    let c = dt[mid * nh + h3];
                    if c == 0 {
                        continue;
                    }
                    let dm = h.comult_row(mid);
                    for h1 in 0..nh {
                        for h2 in 0..nh {
                            let c2 = dm[h1 * nh + h2];
                            if c2 != 0 {
                                out.push((h1, h2, h3, c * c2 % p));
                            }
                        }
                    }
                }
            }
            out
        })
        .collect();
    for aa in 0..na {
        for hh in 0..nh {
            let i = aa * nh + hh;
            for bb in 0..na {
                for kk in 0..nh {
                    let j = bb * nh + kk;
                    let dk = h.comult_row(kk);
                    let slot_base = (i * n + j) * n;
                    for &(h1, h2, h3, c1) in &d2h[hh] {
                        let actv = act(h1, bb);
                        for k1 in 0..nh {
                            for k2 in 0..nh {
                                let c2 = dk[k1 * nh + k2];
                                if c2 == 0 {
                                    continue;
                                }
                                let mut left = a.multiply_vec(actv, sig(h2, k1));
                                for slot in left.iter_mut() {
                                    *slot = *slot * c1 % p * c2 % p;
                                }
                                let mut apart = vec![0u64; na];
                                for (c, &lc) in left.iter().enumerate() {
                                    if lc != 0 {
                                        let row = a.mult_row(aa, c);
                                        for r in 0..na {
                                            apart[r] = (apart[r] + lc * row[r]) % p;
                                        }
                                    }
                                }
                                let hpart = h.mult_row(h3, k2);
                                for (ci, &ca) in apart.iter().enumerate() {
                                    if ca == 0 {
                                        continue;
                                    }
                                    for (cj, &ch) in hpart.iter().enumerate() {
                                        if ch != 0 {
                                            let k = ci * nh + cj;
                                            mult[slot_base + k] =
                                                (mult[slot_base + k] + ca * ch) % p;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    let mut unit = vec![0u64; n];
    for (x, &cx) in a.unit_vec().iter().enumerate() {
        for (y, &cy) in h.unit_vec().iter().enumerate() {
            unit[x * nh + y] = cx * cy % p;
        }
    }
    let labels = (0..n).map(|i| format!("{}#{}", a.labels[i / nh], h.labels[i % nh])).collect();
    StructuredAlgebra {
        p,
        dim: n,
        kind: AlgebraKind::Algebra,
        labels,
        mult: Some(mult),
        unit: Some(unit),
        comult: None,
        counit: None,
        antipode: None,
    }
    .validated()
}

/// flatten(qa·T·qbᵀ) for T the n×n reshape of a tensor-square vector.
fn project_tensor(qa: &FpMatrix, t: &[u64], qb: &FpMatrix) -> Vec<u64> {
    let n = qa.cols();
    let (ra, rb) = (qa.rows(), qb.rows());
    let p = qa.modulus();
    let mut out = vec![0u64; ra * rb];
    for r in 0..ra {
        for s in 0..rb {
            let mut acc = 0u64;
            for i in 0..n {
                let c = qa.get(r, i);
                if c == 0 {
                    continue;
                }
                for j in 0..n {
                    let d = qb.get(s, j);
                    if d != 0 {
                        acc = (acc + c * d % p * t[i * n + j]) % p;
                    }
                }
            }
            out[r * rb + s] = acc;
        }
    }
    out
}

/// Quotient of a Hopf algebra by a Hopf ideal: a two-sided ideal I with
/// ε(I) = 0, S(I) ⊆ I, and Δ(I) ⊆ I⊗H + H⊗I. All four conditions are
/// verified (the coideal one via the projection π: Δ(v) must die under
/// π⊗π). The quotient is presented on the non-pivot coordinates of I, which
/// keeps the labels of the surviving basis vectors.
pub fn quotient_by_hopf_ideal(
    h: &StructuredAlgebra,
    ideal: &Subspace,
) -> Result<StructuredAlgebra> {
    assert_eq!(h.kind, AlgebraKind::Hopf, "quotient requires a Hopf algebra");
    assert_eq!(ideal.ambient_dim(), h.dim, "ideal must live in the algebra");
    assert_eq!(ideal.modulus(), h.p);
    let (n, p) = (h.dim, h.p);
    if ideal.is_full() {
        return Err(Error::NotHopfIdeal("the whole algebra is not a proper ideal".into()));
    }
    let s_mat = h.antipode_matrix()?;
    let q = ideal.quotient_projection();
    for w in ideal.basis_rows() {
        if h.counit_of_vec(&w) != 0 {
            return Err(Error::NotHopfIdeal("the counit does not vanish on the ideal".into()));
        }
        if !ideal.contains(&s_mat.matvec(&w)) {
            return Err(Error::NotHopfIdeal("the ideal is not antipode stable".into()));
        }
        for i in 0..n {
            let e = Element::basis(n, i);
            if !ideal.contains(&h.multiply_vec(&e.coords, &w)) {
                return Err(Error::NotHopfIdeal(format!(
                    "not a left ideal: e_{i}·v leaves the span"
                )));
            }
            if !ideal.contains(&h.multiply_vec(&w, &e.coords)) {
                return Err(Error::NotHopfIdeal(format!(
                    "not a right ideal: v·e_{i} leaves the span"
                )));
            }
        }
        if !vec_is_zero(&project_tensor(&q, &h.comultiply_vec(&w), &q)) {
            return Err(Error::NotHopfIdeal(
                "not a coideal: some Δ(v) is outside I⊗H + H⊗I".into(),
            ));
        }
    }

    let free: Vec<usize> = (0..n).filter(|c| !ideal.pivots().contains(c)).collect();
    let m = free.len();
    let mut mult = vec![0u64; m * m * m];
    for (al, &fa) in free.iter().enumerate() {
        for (be, &fb) in free.iter().enumerate() {
            let img = q.matvec(h.mult_row(fa, fb));
            mult[(al * m + be) * m..(al * m + be + 1) * m].copy_from_slice(&img);
        }
    }
    let mut comult = vec![0u64; m * m * m];
    let mut counit = vec![0u64; m];
    let mut antipode = FpMatrix::zeros(p, m, m);
    for (ga, &fg) in free.iter().enumerate() {
        let img = project_tensor(&q, h.comult_row(fg), &q);
        comult[ga * m * m..(ga + 1) * m * m].copy_from_slice(&img);
        counit[ga] = h.counit_vec()[fg];
        let mut col = vec![0u64; n];
        for r in 0..n {
            col[r] = s_mat.get(r, fg);
        }
        for (r, &v) in q.matvec(&col).iter().enumerate() {
            antipode.set(r, ga, v);
        }
    }
    StructuredAlgebra {
        p,
        dim: m,
        kind: AlgebraKind::Hopf,
        labels: free.iter().map(|&f| h.labels[f].clone()).collect(),
        mult: Some(mult),
        unit: Some(q.matvec(h.unit_vec())),
        comult: Some(comult),
        counit: Some(counit),
        antipode: Some(antipode),
    }
    .validated()
}

/// span (L ∩ ker ε)·H, the ideal that presents H as an extension over the
/// subalgebra spanned by `l`. For central (in particular commutative)
/// situations it is two-sided and a Hopf ideal.
pub fn augmentation_left_ideal(h: &StructuredAlgebra, l: &Subspace) -> Subspace {
    let eps = FpMatrix::from_rows(h.p, h.dim, std::slice::from_ref(&h.counit_vec().to_vec()));
    let lplus = l.intersect(&eps.kernel());
    crate::invariants::product_span(h, &lplus, &Subspace::full(h.p, h.dim))
}
