//! Exact linear algebra over prime fields.
//!
//! Everything here is dense and deterministic: matrices carry their modulus,
//! subspaces are canonicalized to reduced row echelon form on construction,
//! and no operation ever leaves an entry unreduced. Moduli are capped at 251
//! so residues fit in a byte and products fit comfortably in a u64.

mod matrix;
mod subspace;

pub use matrix::FpMatrix;
pub use subspace::Subspace;

/// Trial division. Moduli are at most 251, so this is never the bottleneck.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// base^exp mod p by binary powering.
pub fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Multiplicative inverse by Fermat's little theorem; `a` must be a unit.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "zero is not invertible mod {p}");
    pow_mod(a, p - 2, p)
}

pub fn neg_mod(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn primality_of_small_integers() {
        let primes: Vec<u64> = (0..=20).filter(|&n| is_prime(n)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19]);
        assert!(is_prime(251));
        assert!(!is_prime(249));
    }

    #[test]
    fn negation_is_reduced() {
        assert_eq!(neg_mod(0, 5), 0);
        assert_eq!(neg_mod(2, 5), 3);
        assert_eq!(neg_mod(7, 5), 3);
    }

    proptest! {
        #[test]
        fn inverse_times_self_is_one(
            p in prop::sample::select(vec![2u64, 3, 5, 7, 251]),
            a in 1u64..250,
        ) {
            prop_assume!(a % p != 0);
            prop_assert_eq!(a % p * inv_mod(a, p) % p, 1);
        }

        #[test]
        fn powering_matches_iterated_product(
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
            base in 0u64..7,
            exp in 0u64..12,
        ) {
            let mut naive = 1 % p;
            for _ in 0..exp {
                naive = naive * (base % p) % p;
            }
            prop_assert_eq!(pow_mod(base, exp, p), naive);
        }
    }
}
