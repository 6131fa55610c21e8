//! Row spaces in reduced echelon form.
//!
//! A subspace stores the unique RREF basis of its span, so two subspaces are
//! equal as values exactly when they are equal as sets of vectors. Pivot
//! columns double as coordinate slots: the coordinates of a member vector
//! can be read off its pivot entries without solving anything.

use super::FpMatrix;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(p: u64, ambient: usize) -> Self {
        Subspace { basis: FpMatrix::zeros(p, 0, ambient), pivots: Vec::new() }
    }

    pub fn full(p: u64, ambient: usize) -> Self {
        Self::from_matrix(FpMatrix::identity(p, ambient))
    }

    pub fn from_rows(p: u64, ambient: usize, rows: &[Vec<u64>]) -> Self {
        Self::from_matrix(FpMatrix::from_rows(p, ambient, rows))
    }

    /// Span of the rows of `m`.
    pub fn from_matrix(m: FpMatrix) -> Self {
        let (r, pivots) = m.rref();
        let rank = pivots.len();
        let mut basis = FpMatrix::zeros(r.modulus(), rank, r.cols());
        for i in 0..rank {
            for c in 0..r.cols() {
                let v = r.get(i, c);
                if v != 0 {
                    basis.set(i, c, v);
                }
            }
        }
        Subspace { basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn modulus(&self) -> u64 {
        self.basis.modulus()
    }

    /// The canonical RREF basis, one vector per row.
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<u64>> {
        self.basis.to_rows()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Residual of v after eliminating along the basis; zero iff v ∈ span.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.ambient_dim());
        let p = self.modulus();
        let mut r: Vec<u64> = v.iter().map(|&x| x % p).collect();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let c = r[pc];
            if c != 0 {
                let neg = p - c;
                for (t, entry) in r.iter_mut().enumerate() {
                    *entry = (*entry + neg * self.basis.get(i, t)) % p;
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of v in the canonical basis; None when v ∉ span.
    /// In RREF the pivot columns are standard basis directions, so the
    /// coordinates are the pivot entries of v itself.
    pub fn coords(&self, v: &[u64]) -> Option<Vec<u64>> {
        if !self.contains(v) {
            return None;
        }
        let p = self.modulus();
        Some(self.pivots.iter().map(|&pc| v[pc] % p).collect())
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        (0..other.dim()).all(|i| self.contains(&other.basis.row_u64(i)))
    }

    pub fn sum(&self, other: &Self) -> Self {
        assert_eq!(self.modulus(), other.modulus());
        assert_eq!(self.ambient_dim(), other.ambient_dim());
        Self::from_matrix(self.basis.vstack(&other.basis))
    }

    pub fn with_row(&self, v: &[u64]) -> Self {
        let mut rows = self.basis_rows();
        rows.push(v.to_vec());
        Self::from_rows(self.modulus(), self.ambient_dim(), &rows)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        assert_eq!(self.modulus(), other.modulus());
        assert_eq!(self.ambient_dim(), other.ambient_dim());
        let p = self.modulus();
        // (a, b) ∈ ker [Uᵀ | Vᵀ] means Σ aᵢuᵢ = −Σ bⱼvⱼ lies in both spans
        let k = self.basis.transpose().hstack(&other.basis.transpose()).kernel();
        let mut rows = Vec::with_capacity(k.dim());
        for ab in k.basis_rows() {
            let mut w = vec![0u64; self.ambient_dim()];
            for (j, &a) in ab[..self.dim()].iter().enumerate() {
                if a != 0 {
                    for (t, entry) in w.iter_mut().enumerate() {
                        *entry = (*entry + a * self.basis.get(j, t)) % p;
                    }
                }
            }
            rows.push(w);
        }
        Self::from_rows(p, self.ambient_dim(), &rows)
    }

    /// A matrix whose kernel is exactly this subspace: reduce against the
    /// basis, then read off the non-pivot coordinates of the residual. Its
    /// rows realize the projection onto a complement along the subspace.
    pub fn quotient_projection(&self) -> FpMatrix {
        let n = self.ambient_dim();
        let p = self.modulus();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut q = FpMatrix::zeros(p, free.len(), n);
        for (r, &f) in free.iter().enumerate() {
            q.set(r, f, 1);
            for (t, &piv) in self.pivots.iter().enumerate() {
                let c = self.basis.get(t, f);
                if c != 0 {
                    q.set(r, piv, crate::linalg::neg_mod(c, p));
                }
            }
        }
        q
    }

    /// Ambient vector Σ coords[i]·basis_i.
    pub fn lift(&self, coords: &[u64]) -> Vec<u64> {
        assert_eq!(coords.len(), self.dim(), "coordinate count must match the basis");
        let p = self.modulus();
        let mut v = vec![0u64; self.ambient_dim()];
        for (i, &c) in coords.iter().enumerate() {
            if c != 0 {
                for (j, slot) in v.iter_mut().enumerate() {
                    *slot = (*slot + c * self.basis.get(i, j)) % p;
                }
            }
        }
        v
    }

    /// Representatives extending `sub` to a basis of `self`, taken greedily
    /// from self's echelon rows in order. Deterministic by construction.
    pub fn quotient_basis(&self, sub: &Self) -> Vec<Vec<u64>> {
        assert!(self.contains_subspace(sub), "quotient base must be contained in the space");
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for i in 0..self.dim() {
            let row = self.basis.row_u64(i);
            if !acc.contains(&row) {
                acc = acc.with_row(&row);
                out.push(row);
            }
        }
        debug_assert_eq!(out.len() + sub.dim(), self.dim());
        out
    }
}
