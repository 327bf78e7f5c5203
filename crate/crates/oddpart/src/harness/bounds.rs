//! Exact-arithmetic bound checks.
//!
//! The λ = ∛24 bounds are decided without floating point: cubing removes
//! λ from a ≤ |V|²/λ (24·a³ ≤ |V|⁶) and sixth powers remove it from
//! a ≤ |V|^(3/2)/λ (576·a⁶ ≤ |V|⁹). The α-exponent bound compares
//! ln(24·a³)·ln 9 against ln(48³·24)·ln |V| in fixed point with 112
//! fractional bits, with an exact integer path when |V| is a power of 9
//! (where 9^(3α) = 48³·24 exactly).

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub const FRAC_BITS: u32 = 112;
const GUARD_BITS: u32 = 16;
const NEAR_BOUNDARY_BITS: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum BoundKind {
    #[serde(rename = "TWO")]
    Two,
    #[serde(rename = "THREE_HALVES")]
    ThreeHalves,
    #[serde(rename = "ALPHA")]
    Alpha,
    #[serde(rename = "PERM_2POW")]
    Perm2Pow,
}

/// Slack of a bound check: an exact integer for the algebraic bounds (and
/// the power-of-9 α path), or a fixed-point value for the α logarithm
/// comparison.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Margin {
    #[serde(rename = "exact")]
    Exact { value: String },
    #[serde(rename = "fixed")]
    Fixed { value: String, frac_bits: u32 },
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub schema: &'static str,
    pub kind: BoundKind,
    /// a(G), |H| or the permutation-side a(G), as checked.
    pub lhs: String,
    /// |V| for the linear bounds, the degree n for PERM_2POW.
    pub base: String,
    pub verdict: bool,
    pub margin: Margin,
    /// Set on ALPHA checks whose slack is within 2^-40 of zero.
    pub near_boundary: bool,
}

pub const SCHEMA_BOUND: &str = "oddpart.bound-report/1";

/// atanh series t + t³/3 + t⁵/5 + … in fixed point at `scale` bits.
fn atanh_series(t: &BigInt, scale: u32) -> BigInt {
    let t2 = (t * t) >> scale;
    let mut term = t.clone();
    let mut sum = t.clone();
    let mut k = 1u32;
    loop {
        term = (&term * &t2) >> scale;
        k += 2;
        let contribution = &term / k;
        if contribution.is_zero() {
            return sum;
        }
        sum += contribution;
    }
}

fn ln2_fixed(scale: u32) -> BigInt {
    // ln 2 = 2 · atanh(1/3)
    let t = (BigInt::one() << scale) / 3;
    atanh_series(&t, scale) * 2
}

/// ⌊ln(x) · 2^FRAC_BITS⌋ up to a few ulps, for x ≥ 1.
pub fn ln_fixed(x: &BigUint) -> BigInt {
    assert!(!x.is_zero());
    let scale = FRAC_BITS + GUARD_BITS;
    let e = x.bits() as u32 - 1; // x = 2^e · m, m ∈ [1, 2)
    let two_e = BigUint::one() << e;
    let num = BigInt::from((x - &two_e) << scale);
    let den = BigInt::from(x + &two_e);
    let t = num / den; // m−1 over m+1, in [0, 1/3)
    let ln_m = atanh_series(&t, scale) * 2;
    let result = ln_m + ln2_fixed(scale) * e;
    result >> GUARD_BITS
}

fn exact_report(kind: BoundKind, lhs: &BigUint, base: &BigUint, margin: BigInt) -> BoundReport {
    BoundReport {
        schema: SCHEMA_BOUND,
        kind,
        lhs: lhs.to_string(),
        base: base.to_string(),
        verdict: !margin.is_negative(),
        near_boundary: false,
        margin: Margin::Exact {
            value: margin.to_string(),
        },
    }
}

/// Checks one bound with exact integer verdicts; `base` is |V| for the
/// linear bounds and the permutation degree for PERM_2POW.
pub fn check_bound(kind: BoundKind, lhs: &BigUint, base: &BigUint) -> BoundReport {
    match kind {
        BoundKind::Two => {
            // a ≤ |V|²/λ  ⟺  24·a³ ≤ |V|⁶
            let margin = BigInt::from(base.pow(6)) - BigInt::from(lhs.pow(3) * 24u32);
            exact_report(kind, lhs, base, margin)
        }
        BoundKind::ThreeHalves => {
            // a ≤ |V|^(3/2)/λ  ⟺  576·a⁶ ≤ |V|⁹
            let margin = BigInt::from(base.pow(9)) - BigInt::from(lhs.pow(6) * 576u32);
            exact_report(kind, lhs, base, margin)
        }
        BoundKind::Perm2Pow => {
            // a ≤ 2^(n−1)
            let degree = base.to_u32().expect("degree fits u32");
            assert!(degree >= 1);
            let bound = BigUint::one() << (degree - 1);
            let margin = BigInt::from(bound) - BigInt::from(lhs.clone());
            exact_report(kind, lhs, base, margin)
        }
        BoundKind::Alpha => check_alpha(lhs, base),
    }
}

/// |G| ≤ |V|^α/λ with α = (3·log 48 + log 24)/(3·log 9), i.e.
/// 24·|G|³ ≤ |V|^(3α) where 9^(3α) = 48³·24 = 2654208.
fn check_alpha(lhs: &BigUint, base: &BigUint) -> BoundReport {
    let cubed = lhs.pow(3) * BigUint::from(24u32);
    let alpha_base = BigUint::from(2654208u64);
    // Exact path when |V| is a power of 9.
    let mut v = base.clone();
    let nine = BigUint::from(9u32);
    let mut k = 0u32;
    while (&v % &nine).is_zero() {
        v /= &nine;
        k += 1;
    }
    if v.is_one() && k >= 1 {
        let margin = BigInt::from(alpha_base.pow(k)) - BigInt::from(cubed);
        let near = margin.is_zero();
        let mut report = exact_report(BoundKind::Alpha, lhs, base, margin);
        report.near_boundary = near;
        return report;
    }
    // ln(24·a³)·ln 9 ≤ ln(2654208)·ln |V|, fixed point.
    let slack = ((ln_fixed(&alpha_base) * ln_fixed(base)) >> FRAC_BITS)
        - ((ln_fixed(&cubed) * ln_fixed(&nine)) >> FRAC_BITS);
    let near = slack.abs() < (BigInt::one() << (FRAC_BITS - NEAR_BOUNDARY_BITS));
    BoundReport {
        schema: SCHEMA_BOUND,
        kind: BoundKind::Alpha,
        lhs: lhs.to_string(),
        base: base.to_string(),
        verdict: !slack.is_negative(),
        near_boundary: near,
        margin: Margin::Fixed {
            value: slack.to_string(),
            frac_bits: FRAC_BITS,
        },
    }
}
