//! Dense matrices over F_p.
//!
//! Rows are bit-packed for p = 2 (64 entries per machine word, so row
//! operations are word-wide XORs) and stored as single-byte residues for odd
//! p. Entries are always least nonnegative residues, which keeps every
//! intermediate product below 2^16 and lets the hot row kernels run on u16s.

use super::Subspace;
use super::{inv_mod, is_prime, neg_mod};
use std::fmt;

/// Row-major matrix over F_p with entries kept reduced.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    store: Store,
}

#[derive(Clone, PartialEq, Eq)]
enum Store {
    /// p = 2: entry (r, c) is bit c & 63 of `words[r * wpr + c / 64]`.
    Bits { wpr: usize, words: Vec<u64> },
    /// Odd p: one byte per entry.
    Bytes(Vec<u8>),
}

/// dst += c * src entrywise mod P. A constant modulus lets the compiler turn
/// the division into multiplies and vectorize; operands are below 251 so u16
/// never overflows for P <= 7.
fn axpy_bytes_const<const P: u16>(dst: &mut [u8], src: &[u8], c: u16) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d = ((*d as u16 + c * (*s as u16)) % P) as u8;
    }
}

fn axpy_bytes(p: u64, dst: &mut [u8], src: &[u8], c: u64) {
    debug_assert!(c != 0 && c < p);
    match p {
        3 => axpy_bytes_const::<3>(dst, src, c as u16),
        5 => axpy_bytes_const::<5>(dst, src, c as u16),
        7 => axpy_bytes_const::<7>(dst, src, c as u16),
        _ => {
            let (p, c) = (p as u32, c as u32);
            for (d, s) in dst.iter_mut().zip(src) {
                *d = ((*d as u32 + c * (*s as u32)) % p) as u8;
            }
        }
    }
}

fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn scale_bytes(p: u64, row: &mut [u8], c: u64) {
    let (p, c) = (p as u32, c as u32);
    for d in row.iter_mut() {
        *d = (*d as u32 * c % p) as u8;
    }
}

fn swap_chunks<T>(data: &mut [T], stride: usize, i: usize, j: usize) {
    if i == j || stride == 0 {
        return;
    }
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    let (head, tail) = data.split_at_mut(hi * stride);
    head[lo * stride..(lo + 1) * stride].swap_with_slice(&mut tail[..stride]);
}

/// Mutable chunk i together with shared chunk j of the same slice; i != j.
fn disjoint_chunks<T>(data: &mut [T], stride: usize, i: usize, j: usize) -> (&mut [T], &[T]) {
    assert_ne!(i, j);
    if i < j {
        let (head, tail) = data.split_at_mut(j * stride);
        (&mut head[i * stride..(i + 1) * stride], &tail[..stride])
    } else {
        let (head, tail) = data.split_at_mut(i * stride);
        (&mut tail[..stride], &head[j * stride..(j + 1) * stride])
    }
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        assert!(is_prime(p) && p <= 251, "modulus must be a prime <= 251");
        let store = if p == 2 {
            let wpr = cols.div_ceil(64);
            Store::Bits { wpr, words: vec![0; rows * wpr] }
        } else {
            Store::Bytes(vec![0; rows * cols])
        };
        FpMatrix { p, rows, cols, store }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from row data, reducing entries mod p.
    pub fn from_rows(p: u64, cols: usize, data: &[Vec<u64>]) -> Self {
        let mut m = Self::zeros(p, data.len(), cols);
        for (r, row) in data.iter().enumerate() {
            assert_eq!(row.len(), cols, "row {r} has the wrong width");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v % p);
            }
        }
        m
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.store {
            Store::Bits { wpr, words } => words[r * wpr + c / 64] >> (c & 63) & 1,
            Store::Bytes(d) => d[r * self.cols + c] as u64,
        }
    }

    /// `v` must already be reduced.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        debug_assert!(r < self.rows && c < self.cols);
        debug_assert!(v < self.p);
        match &mut self.store {
            Store::Bits { wpr, words } => {
                let w = &mut words[r * *wpr + c / 64];
                *w = *w & !(1 << (c & 63)) | v << (c & 63);
            }
            Store::Bytes(d) => d[r * self.cols + c] = v as u8,
        }
    }

    pub fn row_u64(&self, r: usize) -> Vec<u64> {
        (0..self.cols).map(|c| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row_u64(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        match &self.store {
            Store::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Store::Bytes(d) => d.iter().all(|&b| b == 0),
        }
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        match &mut self.store {
            Store::Bits { wpr, words } => swap_chunks(words, *wpr, i, j),
            Store::Bytes(d) => swap_chunks(d, self.cols, i, j),
        }
    }

    /// row[i] *= c for a nonzero residue c.
    pub fn scale_row(&mut self, i: usize, c: u64) {
        assert!(c != 0 && c < self.p);
        if c == 1 {
            return;
        }
        match &mut self.store {
            Store::Bits { .. } => unreachable!("1 is the only unit mod 2"),
            Store::Bytes(d) => scale_bytes(self.p, &mut d[i * self.cols..(i + 1) * self.cols], c),
        }
    }

    /// row[dst] += c * row[src]; dst != src.
    pub fn row_axpy(&mut self, dst: usize, src: usize, c: u64) {
        assert!(c < self.p);
        if c == 0 {
            return;
        }
        match &mut self.store {
            Store::Bits { wpr, words } => {
                let (d, s) = disjoint_chunks(words, *wpr, dst, src);
                xor_words(d, s);
            }
            Store::Bytes(data) => {
                let (d, s) = disjoint_chunks(data, self.cols, dst, src);
                axpy_bytes(self.p, d, s, c);
            }
        }
    }

    /// row[dst] += c * other.row[src]; widths and moduli must agree.
    pub fn row_axpy_from(&mut self, dst: usize, other: &Self, src: usize, c: u64) {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.cols);
        assert!(c < self.p);
        if c == 0 {
            return;
        }
        match (&mut self.store, &other.store) {
            (Store::Bits { wpr, words }, Store::Bits { wpr: sw, words: src_words }) => {
                xor_words(
                    &mut words[dst * *wpr..(dst + 1) * *wpr],
                    &src_words[src * sw..(src + 1) * sw],
                );
            }
            (Store::Bytes(d), Store::Bytes(s)) => {
                axpy_bytes(
                    self.p,
                    &mut d[dst * self.cols..(dst + 1) * self.cols],
                    &s[src * other.cols..(src + 1) * other.cols],
                    c,
                );
            }
            _ => unreachable!("equal moduli imply equal storage"),
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..self.cols {
            if pr == self.rows {
                break;
            }
            let Some(r) = (pr..self.rows).find(|&r| self.get(r, col) != 0) else {
                continue;
            };
            self.swap_rows(pr, r);
            self.scale_row(pr, inv_mod(self.get(pr, col), self.p));
            for r2 in 0..self.rows {
                if r2 == pr {
                    continue;
                }
                let c = self.get(r2, col);
                if c != 0 {
                    self.row_axpy(r2, pr, self.p - c);
                }
            }
            pivots.push(col);
            pr += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of { v : M v = 0 }.
    pub fn kernel(&self) -> Subspace {
        let (m, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &pc in &pivots {
            is_pivot[pc] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - pivots.len());
        for f in 0..self.cols {
            if is_pivot[f] {
                continue;
            }
            let mut v = vec![0u64; self.cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = neg_mod(m.get(i, f), self.p);
            }
            basis.push(v);
        }
        Subspace::from_rows(self.p, self.cols, &basis)
    }

    /// One solution of M x = b with free coordinates set to zero.
    pub fn solve(&self, b: &[u64]) -> Option<Vec<u64>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.p, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    aug.set(r, c, v);
                }
            }
            if b[r] % self.p != 0 {
                aug.set(r, self.cols, b[r] % self.p);
            }
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u64; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.get(i, self.cols);
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut aug = Self::zeros(self.p, n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                let v = self.get(r, c);
                if v != 0 {
                    aug.set(r, c, v);
                }
            }
            aug.set(r, n + r, 1);
        }
        let pivots = aug.rref_in_place();
        // rank is always n thanks to the identity block, so invertibility
        // means every pivot landed in the left block
        if n > 0 && pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(self.p, n, n);
        for r in 0..n {
            for c in 0..n {
                let v = aug.get(r, n + c);
                if v != 0 {
                    inv.set(r, c, v);
                }
            }
        }
        Some(inv)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    t.set(c, r, v);
                }
            }
        }
        t
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let c = self.get(i, k);
                if c != 0 {
                    out.row_axpy_from(i, other, k, c);
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        match &self.store {
            Store::Bits { wpr, words } => {
                let mut packed = vec![0u64; *wpr];
                for (c, &x) in v.iter().enumerate() {
                    debug_assert!(x < 2);
                    packed[c / 64] |= (x & 1) << (c & 63);
                }
                (0..self.rows)
                    .map(|r| {
                        let row = &words[r * wpr..(r + 1) * wpr];
                        let ones: u32 =
                            row.iter().zip(&packed).map(|(a, b)| (a & b).count_ones()).sum();
                        (ones & 1) as u64
                    })
                    .collect()
            }
            Store::Bytes(d) => (0..self.rows)
                .map(|r| {
                    d[r * self.cols..(r + 1) * self.cols]
                        .iter()
                        .zip(v)
                        .map(|(&a, &b)| a as u64 * b)
                        .sum::<u64>()
                        % self.p
                })
                .collect(),
        }
    }

    /// Kronecker product: (a ⊗ b)[i·rb + k][j·cb + l] = a[i][j] · b[k][l].
    /// This is the crate-wide tensor convention, second factor fastest.
    pub fn kronecker(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        let mut out = Self::zeros(self.p, self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b != 0 {
                            out.set(i * other.rows + k, j * other.cols + l, a * b % self.p);
                        }
                    }
                }
            }
        }
        out
    }

    /// [self | other]
    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.rows, other.rows);
        let mut out = Self::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, c, v);
                }
            }
            for c in 0..other.cols {
                let v = other.get(r, c);
                if v != 0 {
                    out.set(r, self.cols + c, v);
                }
            }
        }
        out
    }

    /// [self; other]
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols, other.cols);
        let mut out = Self::zeros(self.p, self.rows + other.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let v = self.get(r, c);
                if v != 0 {
                    out.set(r, c, v);
                }
            }
        }
        for r in 0..other.rows {
            for c in 0..self.cols {
                let v = other.get(r, c);
                if v != 0 {
                    out.set(self.rows + r, c, v);
                }
            }
        }
        out
    }

    /// Coefficients of det(λI − M), ascending by power; result[n] = 1.
    ///
    /// Similarity reduction to upper Hessenberg form (each row operation
    /// paired with its inverse column operation), then the leading principal
    /// minors of λI − H by last-column expansion. Works in any
    /// characteristic, unlike trace-based methods that divide by integers.
    pub fn charpoly(&self) -> Vec<u64> {
        assert_eq!(self.rows, self.cols);
        let (n, p) = (self.rows, self.p);
        let mut h = self.to_rows();
        for j in 0..n.saturating_sub(2) {
            let Some(r) = (j + 1..n).find(|&r| h[r][j] != 0) else {
                continue;
            };
            h.swap(r, j + 1);
            for row in h.iter_mut() {
                row.swap(r, j + 1);
            }
            let inv = inv_mod(h[j + 1][j], p);
            for r2 in j + 2..n {
                let f = h[r2][j] * inv % p;
                if f == 0 {
                    continue;
                }
                let nf = p - f;
                // the column ops below keep mutating row j+1, so snapshot it
                // fresh for each eliminated row
                let pivot_row = h[j + 1].clone();
                for (t, &pv) in pivot_row.iter().enumerate() {
                    h[r2][t] = (h[r2][t] + nf * pv) % p;
                }
                for t in 0..n {
                    h[t][j + 1] = (h[t][j + 1] + f * h[t][r2]) % p;
                }
            }
        }
        // p_k = (λ − h[k-1][k-1]) p_{k-1}
        //       − Σ_{m=1}^{k-1} h[k-1-m][k-1] (Π_{t=1}^{m} h[k-t][k-t-1]) p_{k-1-m}
        let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
        polys.push(vec![1]);
        for k in 1..=n {
            let mut pk = vec![0u64; k + 1];
            for (i, &c) in polys[k - 1].iter().enumerate() {
                pk[i + 1] = c;
            }
            let nd = neg_mod(h[k - 1][k - 1], p);
            if nd != 0 {
                for (i, &c) in polys[k - 1].iter().enumerate() {
                    pk[i] = (pk[i] + nd * c) % p;
                }
            }
            let mut prod = 1u64;
            for m in 1..k {
                prod = prod * h[k - m][k - m - 1] % p;
                if prod == 0 {
                    break;
                }
                let coef = h[k - 1 - m][k - 1] * prod % p;
                if coef == 0 {
                    continue;
                }
                let neg = p - coef;
                for (i, &c) in polys[k - 1 - m].iter().enumerate() {
                    pk[i] = (pk[i] + neg * c) % p;
                }
            }
            polys.push(pk);
        }
        polys.pop().unwrap()
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, {}x{}, {:?})", self.p, self.rows, self.cols, self.to_rows())
    }
}
