//! Finite group multiplication tables and a catalog of small groups.
//!
//! Tables are validated on construction (Latin square, identity,
//! associativity, two-sided inverses), including the ones our own builders
//! produce: the catalog certifies itself rather than trusting its formulas.

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupTable {
    order: usize,
    /// mult[a · order + b] = index of g_a · g_b
    mult: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    pub fn from_table(order: usize, mult: Vec<usize>) -> Result<GroupTable> {
        let bad = |msg: String| Error::InvalidGroupTable(msg);
        if order == 0 {
            return Err(bad("order must be positive".into()));
        }
        if mult.len() != order * order {
            return Err(bad(format!(
                "table has {} entries, expected {}",
                mult.len(),
                order * order
            )));
        }
        if let Some(&e) = mult.iter().find(|&&e| e >= order) {
            return Err(bad(format!("entry {e} out of range")));
        }
        for i in 0..order {
            let mut seen_row = vec![false; order];
            let mut seen_col = vec![false; order];
            for j in 0..order {
                let r = mult[i * order + j];
                let c = mult[j * order + i];
                if seen_row[r] {
                    return Err(bad(format!("row {i} repeats element {r}")));
                }
                if seen_col[c] {
                    return Err(bad(format!("column {i} repeats element {c}")));
                }
                seen_row[r] = true;
                seen_col[c] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|j| mult[e * order + j] == j && mult[j * order + e] == j))
            .ok_or_else(|| bad("no identity element".into()))?;
        for a in 0..order {
            for b in 0..order {
                let ab = mult[a * order + b];
                for c in 0..order {
                    if mult[ab * order + c] != mult[a * order + mult[b * order + c]] {
                        return Err(bad(format!("({a}·{b})·{c} != {a}·({b}·{c})")));
                    }
                }
            }
        }
        let mut inv = vec![0usize; order];
        for (a, slot) in inv.iter_mut().enumerate() {
            let j = (0..order)
                .find(|&j| mult[a * order + j] == identity)
                .ok_or_else(|| bad(format!("element {a} has no right inverse")))?;
            if mult[j * order + a] != identity {
                return Err(bad(format!("inverse of element {a} is one-sided")));
            }
            *slot = j;
        }
        Ok(GroupTable { order, mult, inv, identity })
    }

    fn build(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<GroupTable> {
        let mut mult = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                mult[a * order + b] = f(a, b);
            }
        }
        Self::from_table(order, mult)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.mult
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn cyclic(n: usize) -> GroupTable {
        Self::build(n, |a, b| (a + b) % n).expect("cyclic groups are groups")
    }

    /// Index convention: (a, b) ↦ a · other.order + b, second factor fastest.
    pub fn direct_product(&self, other: &GroupTable) -> GroupTable {
        let n = other.order;
        Self::build(self.order * n, |x, y| self.mul(x / n, y / n) * n + other.mul(x % n, y % n))
            .expect("products of groups are groups")
    }

    /// ⟨a, b | aⁿ = bᵐ = 1, b·a·b⁻¹ = aʳ⟩ with rᵐ ≡ 1 (mod n); aⁱbʲ ↦ i·m + j.
    /// Covers the dihedral (m = 2, r = n−1), semidihedral, and modular
    /// maximal-cyclic families.
    pub fn metacyclic(n: usize, m: usize, r: usize) -> Result<GroupTable> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidGroupTable("cyclic factors must be nonempty".into()));
        }
        let powr = |j: usize| (0..j).fold(1usize, |t, _| t * r % n);
        if powr(m) != 1 % n {
            return Err(Error::InvalidGroupTable(format!(
                "conjugation exponent {r} has r^{m} != 1 mod {n}"
            )));
        }
        // aⁱbʲ · aᵏbˡ = a^{i + k·rʲ} b^{j+l}
        Self::build(n * m, |x, y| {
            let (i, j) = (x / m, x % m);
            let (k, l) = (y / m, y % m);
            (i + k * powr(j)) % n * m + (j + l) % m
        })
    }

    /// ⟨a, b | a^{2m} = 1, b² = aᵐ, b·a·b⁻¹ = a⁻¹⟩ of order 4m; aⁱbʲ ↦ 2i + j.
    pub fn generalized_quaternion(m: usize) -> Result<GroupTable> {
        if m < 2 {
            return Err(Error::InvalidGroupTable(
                "generalized quaternion groups start at order 8".into(),
            ));
        }
        let n = 2 * m;
        Self::build(4 * m, |x, y| {
            let (i, j) = (x / 2, x % 2);
            let (k, l) = (y / 2, y % 2);
            if j == 0 {
                (i + k) % n * 2 + l
            } else {
                // b·aᵏ = a⁻ᵏ·b, and b² contributes aᵐ
                let base = (i + n - k) % n;
                if l == 0 {
                    base * 2 + 1
                } else {
                    (base + m) % n * 2
                }
            }
        })
    }

    /// Unitriangular 3×3 matrices over F_p: (a,b,c)·(a',b',c') =
    /// (a+a', b+b', c+c'+a·b'); (a,b,c) ↦ a·p² + b·p + c. Order p³.
    pub fn heisenberg(p: usize) -> Result<GroupTable> {
        if p < 2 {
            return Err(Error::InvalidGroupTable("heisenberg groups need p >= 2".into()));
        }
        Self::build(p * p * p, |x, y| {
            let (a1, b1, c1) = (x / (p * p), x / p % p, x % p);
            let (a2, b2, c2) = (y / (p * p), y / p % p, y % p);
            (a1 + a2) % p * p * p + (b1 + b2) % p * p + (c1 + c2 + a1 * b2) % p
        })
    }

    /// Parses catalog names: `x`-separated products of the atoms
    /// c{n}, d{k} (order 2k), q{N} (order N, N ≡ 0 mod 4), sd16, m16, m27,
    /// heis{p}. Examples: "c4", "c2xc2xc2", "d4", "q8xc2", "heis3".
    pub fn from_catalog(name: &str) -> Result<GroupTable> {
        let mut product: Option<GroupTable> = None;
        for part in name.split('x') {
            let g = Self::catalog_atom(part)?;
            product = Some(match product {
                None => g,
                Some(acc) => acc.direct_product(&g),
            });
        }
        product.ok_or_else(|| Error::UnknownGroup(name.to_string()))
    }

    fn catalog_atom(s: &str) -> Result<GroupTable> {
        let unknown = || Error::UnknownGroup(s.to_string());
        match s {
            "sd16" => return Self::metacyclic(8, 2, 3),
            "m16" => return Self::metacyclic(8, 2, 5),
            "m27" => return Self::metacyclic(9, 3, 4),
            _ => {}
        }
        if let Some(num) = s.strip_prefix("heis") {
            let p: usize = num.parse().map_err(|_| unknown())?;
            return Self::heisenberg(p);
        }
        if s.len() < 2 {
            return Err(unknown());
        }
        let (head, num) = s.split_at(1);
        let n: usize = num.parse().map_err(|_| unknown())?;
        match head {
            "c" if n >= 1 => Ok(Self::cyclic(n)),
            "d" if n >= 2 => Self::metacyclic(n, 2, n - 1),
            "q" if n >= 8 && n % 4 == 0 => Self::generalized_quaternion(n / 4),
            _ => Err(unknown()),
        }
    }
}
