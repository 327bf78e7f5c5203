//! Integer factorization, primality, multiplicative orders and
//! Zsigmondy / large-Zsigmondy prime search.
//!
//! A Zsigmondy prime for `p^n − 1` divides `p^n − 1` but no `p^k − 1`
//! with `k < n`; equivalently the multiplicative order of `p` modulo the
//! prime is exactly `n`. Every Zsigmondy prime divides the cyclotomic
//! value `Φ_n(p)`, so the search factorizes `Φ_n(p)` instead of
//! `p^n − 1` itself and filters by exact order. That keeps the numbers
//! involved far below the 128-bit ceiling even for the large exponents
//! arising from exceptional-group orders.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::{Error, Result};

/// Witness for a Zsigmondy prime of `p^n − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZsigmondyWitness {
    /// The prime itself.
    pub prime: u128,
    /// Exact exponent of the prime in `p^n − 1`.
    pub multiplicity: u32,
    /// Large-Zsigmondy flag relative to the threshold the search was run
    /// with (`2n` for the plain listing): the prime reaches the threshold
    /// on its own or its square divides `p^n − 1`.
    pub large: bool,
}

#[inline]
fn addmod(a: u128, b: u128, m: u128) -> u128 {
    debug_assert!(a < m && b < m);
    let (sum, overflow) = a.overflowing_add(b);
    if overflow || sum >= m {
        sum.wrapping_sub(m)
    } else {
        sum
    }
}

/// `a · b mod m` for moduli up to 2^127.
pub fn mulmod(a: u128, b: u128, m: u128) -> u128 {
    let (a, b) = (a % m, b % m);
    if let Some(prod) = a.checked_mul(b) {
        return prod % m;
    }
    let mut result = 0u128;
    let mut base = a;
    let mut mult = b;
    while mult > 0 {
        if mult & 1 == 1 {
            result = addmod(result, base, m);
        }
        base = addmod(base, base, m);
        mult >>= 1;
    }
    result
}

pub fn powmod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut result = 1u128;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mulmod(result, base, m);
        }
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    result
}

fn miller_rabin_witness(n: u128, a: u128) -> bool {
    // Returns true when `a` witnesses that n is composite.
    let a = a % n;
    if a == 0 {
        return false;
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    let mut x = powmod(a, d, n);
    if x == 1 || x == n - 1 {
        return false;
    }
    for _ in 1..s {
        x = mulmod(x, x, n);
        if x == n - 1 {
            return false;
        }
    }
    true
}

/// Deterministic below 2^64 (fixed base set); above, a fixed schedule of
/// the first forty prime bases.
pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u128, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < u64::MAX as u128 {
        const BASES: [u128; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
        return BASES.iter().all(|&a| !miller_rabin_witness(n, a));
    }
    const SCHEDULE: [u128; 40] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173,
    ];
    SCHEDULE.iter().all(|&a| !miller_rabin_witness(n, a))
}

/// Brent's variant of Pollard rho; returns a nontrivial factor of a
/// composite `n`. The polynomial offset steps through a fixed schedule,
/// so the factor found is the same on every run.
fn pollard_brent(n: u128) -> u128 {
    debug_assert!(n > 3 && !is_prime(n));
    if n.is_multiple_of(2) {
        return 2;
    }
    for c in 1u128..64 {
        let f = |x: u128| addmod(mulmod(x, x, n), c % n, n);
        let mut x = 2u128;
        let mut y = 2u128;
        let mut d = 1u128;
        let mut saved = 2u128;
        let mut power = 1u64;
        let mut lam = 0u64;
        'outer: while d == 1 {
            if power == lam {
                x = y;
                power *= 2;
                lam = 0;
                saved = y;
            }
            // Batch 64 steps between gcd calls.
            let mut q = 1u128;
            for _ in 0..64 {
                y = f(y);
                lam += 1;
                let diff = x.abs_diff(y);
                q = mulmod(q, diff.max(1), n);
                if power == lam {
                    break;
                }
            }
            d = q.gcd(&n);
            if d == n {
                // Backtrack step by step from the saved point.
                let mut z = saved;
                loop {
                    z = f(z);
                    let diff = x.abs_diff(z);
                    d = diff.max(1).gcd(&n);
                    if d > 1 {
                        break 'outer;
                    }
                    if z == y {
                        break;
                    }
                }
                d = 1;
                break;
            }
        }
        if d > 1 && d < n {
            return d;
        }
    }
    panic!("pollard rho failed on {n} after fixed schedule");
}

/// Full prime factorization, sorted by prime. 1 maps to the empty list.
pub fn factorize(n: u128) -> Vec<(u128, u32)> {
    let mut factors: Vec<(u128, u32)> = Vec::new();
    let push = |p: u128, factors: &mut Vec<(u128, u32)>| {
        if let Some(last) = factors.iter_mut().find(|(q, _)| *q == p) {
            last.1 += 1;
        } else {
            factors.push((p, 1));
        }
    };
    let mut m = n;
    for small in [2u128, 3, 5] {
        while m.is_multiple_of(small) {
            push(small, &mut factors);
            m /= small;
        }
    }
    let mut d = 7u128;
    let mut step = [4u128, 2, 4, 2, 4, 6, 2, 6].iter().cycle();
    while d < 1_000_000 && d * d <= m {
        while m.is_multiple_of(d) {
            push(d, &mut factors);
            m /= d;
        }
        d += step.next().unwrap();
    }
    // Remaining cofactor: split recursively with rho.
    let mut stack = Vec::new();
    if m > 1 {
        stack.push(m);
    }
    while let Some(x) = stack.pop() {
        if is_prime(x) {
            push(x, &mut factors);
        } else {
            let f = pollard_brent(x);
            stack.push(f);
            stack.push(x / f);
        }
    }
    factors.sort_unstable();
    factors
}

/// Largest odd divisor.
pub fn odd_part(n: u64) -> u64 {
    n >> n.trailing_zeros().min(63)
}

pub fn odd_part_big(n: &BigUint) -> BigUint {
    if n.is_one() || n == &BigUint::from(0u32) {
        return n.clone();
    }
    n >> n.trailing_zeros().unwrap_or(0)
}

/// Least `k ≥ 1` with `p^k ≡ 1 (mod m)`; requires `gcd(p, m) = 1`.
pub fn multiplicative_order(p: u128, m: u128) -> Result<u128> {
    if m < 2 {
        return Err(Error::InvalidParams("modulus must exceed 1".into()));
    }
    if p.gcd(&m) != 1 {
        return Err(Error::InvalidParams(format!(
            "gcd({p}, {m}) must be 1"
        )));
    }
    // The order divides the Carmichael function λ(m).
    let mut lambda = 1u128;
    for (q, e) in factorize(m) {
        let contribution = if q == 2 {
            match e {
                1 => 1,
                2 => 2,
                _ => 1u128 << (e - 2),
            }
        } else {
            (q - 1) * q.pow(e - 1)
        };
        lambda = lambda / lambda.gcd(&contribution) * contribution;
    }
    let mut order = lambda;
    for (q, _) in factorize(lambda) {
        while order.is_multiple_of(q) && powmod(p, order / q, m) == 1 {
            order /= q;
        }
    }
    debug_assert_eq!(powmod(p, order, m), 1);
    Ok(order)
}

fn moebius(n: u32) -> i32 {
    let mut m = n as u128;
    let mut count = 0;
    let mut d = 2u128;
    while d * d <= m {
        if m.is_multiple_of(d) {
            m /= d;
            if m.is_multiple_of(d) {
                return 0;
            }
            count += 1;
        }
        d += 1;
    }
    if m > 1 {
        count += 1;
    }
    if count % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Value of the n-th cyclotomic polynomial at `p`, exactly.
pub fn cyclotomic_value(n: u32, p: u64) -> BigUint {
    assert!(n >= 1 && p >= 2);
    let big_p = BigUint::from(p);
    let mut numerator = BigUint::one();
    let mut denominator = BigUint::one();
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let term = big_p.pow(n / d) - BigUint::one();
        match moebius(d) {
            1 => numerator *= term,
            -1 => denominator *= term,
            _ => {}
        }
    }
    debug_assert!((&numerator % &denominator).is_one() || (&numerator % &denominator) == BigUint::from(0u32));
    numerator / denominator
}

/// All Zsigmondy primes for `p^n − 1` with exact multiplicities, sorted
/// ascending. Empty exactly in the classical exception cases. The `large`
/// flag is relative to the default threshold `2n`.
pub fn zsigmondy_primes(p: u64, n: u32) -> Result<Vec<ZsigmondyWitness>> {
    if !is_prime(p as u128) {
        return Err(Error::InvalidParams(format!("{p} is not prime")));
    }
    if n == 0 {
        return Err(Error::InvalidParams("exponent must be positive".into()));
    }
    let phi = cyclotomic_value(n, p);
    let phi128 = phi.to_u128().ok_or_else(|| {
        Error::OutOfRange(format!("Φ_{n}({p}) exceeds 2^127"))
    })?;
    if phi128 >= 1u128 << 127 {
        return Err(Error::OutOfRange(format!("Φ_{n}({p}) exceeds 2^127")));
    }
    let mut out = Vec::new();
    for (prime, mult) in factorize(phi128) {
        // Primes dividing Φ_n(p) without full order n are the intrinsic
        // divisors of n; filter by exact order.
        if prime == p as u128 {
            continue;
        }
        let order = multiplicative_order(p as u128, prime)?;
        if order == n as u128 {
            out.push(ZsigmondyWitness {
                prime,
                multiplicity: mult,
                large: prime >= 2 * n as u128 || mult >= 2,
            });
        }
    }
    Ok(out)
}

/// Largest Zsigmondy prime for `p^n − 1` that is large with respect to
/// `threshold`: the prime reaches the threshold, or appears squared and
/// its square does.
pub fn large_zsigmondy(p: u64, n: u32, threshold: u128) -> Result<Option<ZsigmondyWitness>> {
    let witnesses = zsigmondy_primes(p, n)?;
    Ok(witnesses
        .into_iter()
        .filter(|w| {
            w.prime >= threshold || (w.multiplicity >= 2 && w.prime * w.prime >= threshold)
        })
        .map(|w| ZsigmondyWitness { large: true, ..w })
        .next_back())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_case_analysis_constants() {
        assert_eq!(factorize(4095), vec![(3, 2), (5, 1), (7, 1), (13, 1)]);
        assert_eq!(factorize(4097), vec![(17, 1), (241, 1)]);
        assert_eq!(factorize(1), vec![]);
    }

    #[test]
    fn factorize_recomposes_and_reports_primes() {
        for n in [2u128, 97, 360, 1 << 40, 600851475143, 2u128.pow(89) - 1] {
            let fs = factorize(n);
            let mut prod = 1u128;
            for &(p, e) in &fs {
                assert!(is_prime(p), "{p} not prime");
                prod *= p.pow(e);
            }
            assert_eq!(prod, n);
        }
    }

    #[test]
    fn primality_spot_checks() {
        assert!(is_prime(2));
        assert!(is_prime(87211));
        assert!(is_prime((1u128 << 127) - 1)); // Mersenne prime 2^127 - 1
        assert!(!is_prime(1));
        assert!(!is_prime(4097));
        assert!(!is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn multiplicative_orders() {
        assert_eq!(multiplicative_order(2, 7).unwrap(), 3);
        assert_eq!(multiplicative_order(2, 13).unwrap(), 12);
        assert_eq!(multiplicative_order(3, 41).unwrap(), 8);
        assert!(multiplicative_order(2, 8).is_err());
    }

    #[test]
    fn cyclotomic_values() {
        assert_eq!(cyclotomic_value(1, 2), BigUint::from(1u32));
        assert_eq!(cyclotomic_value(6, 2), BigUint::from(3u32));
        assert_eq!(cyclotomic_value(12, 2), BigUint::from(13u32));
        assert_eq!(cyclotomic_value(8, 3), BigUint::from(82u32)); // 3^4 + 1
        assert_eq!(cyclotomic_value(4, 5), BigUint::from(26u32));
    }

    #[test]
    fn zsigmondy_classical_cases() {
        assert!(zsigmondy_primes(2, 6).unwrap().is_empty());
        assert!(zsigmondy_primes(2, 1).unwrap().is_empty());
        // p + 1 a power of two.
        assert!(zsigmondy_primes(7, 2).unwrap().is_empty());
        assert!(zsigmondy_primes(31, 2).unwrap().is_empty());

        let w = zsigmondy_primes(2, 4).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].prime, 5);
        assert_eq!(w[0].multiplicity, 1);

        let w = zsigmondy_primes(3, 8).unwrap();
        assert!(w.iter().any(|w| w.prime == 41));

        let w = zsigmondy_primes(2, 12).unwrap();
        assert!(w.iter().any(|w| w.prime == 13));

        let w = zsigmondy_primes(2, 8).unwrap();
        assert!(w.iter().any(|w| w.prime == 17));
    }

    #[test]
    fn zsigmondy_brute_force_oracle_small_range() {
        // Independent route: factorize p^n − 1 directly and keep primes
        // not dividing any p^k − 1 with k < n.
        for p in [2u64, 3, 5] {
            for n in 1..=20u32 {
                let value = (p as u128).pow(n) - 1;
                let mut expected: Vec<u128> = factorize(value)
                    .into_iter()
                    .map(|(q, _)| q)
                    .filter(|&q| {
                        (1..n).all(|k| ((p as u128).pow(k) - 1) % q != 0)
                    })
                    .collect();
                expected.sort_unstable();
                let got: Vec<u128> = zsigmondy_primes(p, n)
                    .unwrap()
                    .iter()
                    .map(|w| w.prime)
                    .collect();
                assert_eq!(got, expected, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn zsigmondy_multiplicity_is_exact() {
        // 2^20 - 1 = 3 · 5^2 · 11 · 31 · 41 has Zsigmondy prime 41 with
        // multiplicity 1; 2^18-1 = 3^3·7·19·73 gives 19 with mult 1.
        let w = zsigmondy_primes(2, 20).unwrap();
        assert_eq!(w, vec![ZsigmondyWitness { prime: 41, multiplicity: 1, large: true }]);
        // p=2, n=6k where a square appears: 2^21-1 = 7^2 · 127 · 337.
        let w = zsigmondy_primes(2, 21).unwrap();
        assert!(w.iter().any(|w| w.prime == 337));
        // 7^2 divides 2^21-1 but ord_7(2)=3, so 7 is not Zsigmondy for 21.
        assert!(w.iter().all(|w| w.prime != 7));
    }

    #[test]
    fn large_zsigmondy_thresholds() {
        let w = large_zsigmondy(2, 12, 8).unwrap().unwrap();
        assert_eq!(w.prime, 13);
        assert!(w.large);

        assert!(large_zsigmondy(2, 6, 2).unwrap().is_none());
        // 5 < 6 and 5² does not divide 15.
        assert!(large_zsigmondy(2, 4, 6).unwrap().is_none());
        assert!(large_zsigmondy(2, 4, 5).unwrap().is_some());
    }

    #[test]
    fn odd_parts() {
        assert_eq!(odd_part(7920), 495);
        assert_eq!(odd_part(1), 1);
        assert_eq!(odd_part(20160), 315);
        assert_eq!(
            odd_part_big(&BigUint::from(244823040u64)),
            BigUint::from(239085u64)
        );
    }
}
