//! Small finite fields GF(p^k), k ≤ 4, with full lookup tables.
//!
//! Extension fields use one fixed irreducible modulus per (p, k); the
//! table below documents them. Elements are indexed 0..q by their
//! little-endian base-p digit strings, so index arithmetic is stable
//! across runs. Building the inverse table verifies the modulus: a
//! reducible polynomial would produce a zero divisor and fail loudly.

use crate::{Error, Result};

/// Fixed irreducible moduli, coefficients little-endian including the
/// leading 1.
const MODULI: &[(u64, u32, &[u64])] = &[
    (2, 2, &[1, 1, 1]),       // x^2 + x + 1
    (2, 3, &[1, 1, 0, 1]),    // x^3 + x + 1
    (2, 4, &[1, 1, 0, 0, 1]), // x^4 + x + 1
    (3, 2, &[1, 0, 1]),       // x^2 + 1
    (3, 3, &[1, 2, 0, 1]),    // x^3 + 2x + 1
    (3, 4, &[2, 1, 0, 0, 1]), // x^4 + x + 2
    (5, 2, &[2, 0, 1]),       // x^2 + 2
    (7, 2, &[1, 0, 1]),       // x^2 + 1
];

/// A concrete GF(p^k) with lookup tables for all operations.
#[derive(Clone)]
pub struct Field {
    pub p: u64,
    pub k: u32,
    /// Field size p^k.
    pub q: usize,
    add_t: Vec<u16>,
    mul_t: Vec<u16>,
    neg_t: Vec<u16>,
    inv_t: Vec<u16>,
    frob_t: Vec<u16>,
    primitive: u16,
}

impl std::fmt::Debug for Field {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

fn digits(mut x: usize, p: u64, k: u32) -> Vec<u64> {
    let mut out = vec![0u64; k as usize];
    for d in out.iter_mut() {
        *d = (x as u64) % p;
        x /= p as usize;
    }
    out
}

fn undigits(ds: &[u64], p: u64) -> usize {
    let mut x = 0usize;
    for &d in ds.iter().rev() {
        x = x * p as usize + d as usize;
    }
    x
}

impl Field {
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !crate::numth::is_prime(p as u128) {
            return Err(Error::InvalidParams(format!("{p} is not prime")));
        }
        if k == 0 || k > 4 {
            return Err(Error::InvalidParams("field degree must be 1..=4".into()));
        }
        let q = (p as usize).pow(k);
        if q > 81 {
            return Err(Error::InvalidParams(format!(
                "field size {q} exceeds the supported bound 81"
            )));
        }
        let modulus: Vec<u64> = if k == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|&&(mp, mk, _)| mp == p && mk == k)
                .map(|&(_, _, m)| m.to_vec())
                .ok_or_else(|| {
                    Error::InvalidParams(format!("no modulus on record for GF({p}^{k})"))
                })?
        };

        // Polynomial multiplication mod (p, modulus).
        let mul_raw = |a: usize, b: usize| -> usize {
            let da = digits(a, p, k);
            let db = digits(b, p, k);
            let mut prod = vec![0u64; 2 * k as usize];
            for (i, &ai) in da.iter().enumerate() {
                for (j, &bj) in db.iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ai * bj) % p;
                }
            }
            // Reduce by the monic modulus.
            for i in (k as usize..prod.len()).rev() {
                let c = prod[i];
                if c == 0 {
                    continue;
                }
                prod[i] = 0;
                for (j, &mj) in modulus.iter().enumerate().take(k as usize) {
                    let idx = i - k as usize + j;
                    prod[idx] = (prod[idx] + c * (p - mj % p)) % p;
                }
            }
            undigits(&prod[..k as usize], p)
        };

        let mut add_t = vec![0u16; q * q];
        let mut mul_t = vec![0u16; q * q];
        let mut neg_t = vec![0u16; q];
        for a in 0..q {
            let da = digits(a, p, k);
            let neg: Vec<u64> = da.iter().map(|&x| (p - x) % p).collect();
            neg_t[a] = undigits(&neg, p) as u16;
            for b in 0..q {
                let db = digits(b, p, k);
                let sum: Vec<u64> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add_t[a * q + b] = undigits(&sum, p) as u16;
                mul_t[a * q + b] = mul_raw(a, b) as u16;
            }
        }
        let mut inv_t = vec![0u16; q];
        for a in 1..q {
            let mut found = None;
            for b in 1..q {
                if mul_t[a * q + b] == 1 {
                    found = Some(b as u16);
                    break;
                }
            }
            inv_t[a] = found.ok_or_else(|| {
                Error::InvalidParams(format!(
                    "modulus for GF({p}^{k}) is not irreducible: {a} has no inverse"
                ))
            })?;
        }
        let mut frob_t = vec![0u16; q];
        for a in 0..q {
            let mut x = a;
            for _ in 1..p {
                x = mul_t[x * q + a] as usize;
            }
            frob_t[a] = x as u16;
        }
        // Smallest primitive element.
        let mut primitive = 0u16;
        'outer: for a in 1..q {
            let mut x = a;
            let mut ord = 1;
            while x != 1 {
                x = mul_t[x * q + a] as usize;
                ord += 1;
            }
            if ord == q - 1 {
                primitive = a as u16;
                break 'outer;
            }
        }
        Ok(Field {
            p,
            k,
            q,
            add_t,
            mul_t,
            neg_t,
            inv_t,
            frob_t,
            primitive,
        })
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        self.add_t[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul_t[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        self.neg_t[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != 0);
        self.inv_t[a as usize]
    }

    /// Frobenius x ↦ x^p.
    #[inline]
    pub fn frobenius(&self, a: u16) -> u16 {
        self.frob_t[a as usize]
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_element(&self) -> u16 {
        self.primitive
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_fields_build() {
        // Building the inverse table is a completeness proof that each
        // embedded modulus is irreducible.
        for (p, kmax) in [(2u64, 4u32), (3, 4), (5, 2), (7, 2), (11, 1), (13, 1), (79, 1)] {
            for k in 1..=kmax {
                if (p as usize).pow(k) > 81 {
                    continue;
                }
                let f = Field::new(p, k).unwrap();
                assert_eq!(f.q, (p as usize).pow(k));
            }
        }
        assert!(Field::new(4, 1).is_err());
        assert!(Field::new(2, 5).is_err());
        assert!(Field::new(83, 1).is_err()); // exceeds size bound
    }

    #[test]
    fn field_axioms_spot_checks() {
        for (p, k) in [(2u64, 4u32), (3, 3), (3, 4), (5, 2), (7, 2)] {
            let f = Field::new(p, k).unwrap();
            let q = f.q as u16;
            for a in 0..q {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q.min(16) {
                        // Associativity and distributivity.
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive_and_fixes_prime_field() {
        let f = Field::new(3, 2).unwrap();
        for a in 0..f.q as u16 {
            for b in 0..f.q as u16 {
                assert_eq!(
                    f.frobenius(f.add(a, b)),
                    f.add(f.frobenius(a), f.frobenius(b))
                );
            }
        }
        for a in 0..3u16 {
            assert_eq!(f.frobenius(a), a);
        }
    }

    #[test]
    fn primitive_element_generates() {
        let f = Field::new(2, 4).unwrap();
        let g = f.primitive_element();
        let mut seen = std::collections::HashSet::new();
        let mut x = 1u16;
        for _ in 0..f.q - 1 {
            x = f.mul(x, g);
            seen.insert(x);
        }
        assert_eq!(seen.len(), f.q - 1);
    }
}
