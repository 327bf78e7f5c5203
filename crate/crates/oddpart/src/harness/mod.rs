//! Exact-arithmetic bound checks, subgroup enumeration and the
//! exhaustive desk-scale verification campaigns.
//!
//! Each campaign enumerates a finite family of groups, computes the
//! relevant invariant with exact arithmetic, checks the bound on every
//! member and reports counts, attained maxima and (expected-empty)
//! violation lists. Reports are deterministic: work may be partitioned
//! across threads, but results are merged in canonical order.

mod bounds;
mod dense;

pub use bounds::{check_bound, ln_fixed, BoundKind, BoundReport, Margin, SCHEMA_BOUND};
pub use dense::{DenseGroup, SubSet};

use std::collections::BTreeMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::linrep::{self, MatrixGroup, VectorAction};
use crate::perm::{Caps, PermGroup, Permutation};
use crate::report::{CampaignReport, Finding};
use crate::structure;
use crate::{numth, Error, Result};

/// Runs a campaign body inside a thread pool sized by ODDPART_THREADS
/// when that variable is set; the default global pool otherwise.
pub fn with_thread_pool<T, F>(f: F) -> T
where
    T: Send,
    F: FnOnce() -> T + Send,
{
    match std::env::var("ODDPART_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        Some(n) if n >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

/// All subgroups of a small group, deduplicated by exact element set and
/// sorted by (order, canonical element list).
pub fn enumerate_subgroups(
    group: &PermGroup,
    order_cap: Option<u64>,
) -> Result<Vec<PermGroup>> {
    let dense = DenseGroup::from_perm_group(group)?;
    dense
        .all_subgroups(order_cap)
        .iter()
        .map(|s| dense.to_perm_group(s))
        .collect()
}

fn entry(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

// ---------------------------------------------------------------------
// Permutation-degree campaign
// ---------------------------------------------------------------------

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E3779B97F4A7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
    z ^ (z >> 31)
}

fn random_permutation(degree: usize, state: &mut u64) -> Permutation {
    let mut images: Vec<u32> = (0..degree as u32).collect();
    for i in (1..degree).rev() {
        let j = (splitmix64(state) % (i as u64 + 1)) as usize;
        images.swap(i, j);
    }
    Permutation::from_images(images).expect("shuffle is a bijection")
}

/// Exhaustively verifies a(G) ≤ 2^(n−1) over every subgroup of S_n for
/// n = 2..=max_degree (max 7). With `degree8_samples` set, degree 8 is
/// additionally spot-checked on that many pseudorandomly generated
/// subgroups (fixed seed, reproducible).
pub fn scan_prop41(max_degree: u32, degree8_samples: Option<u64>) -> Result<CampaignReport> {
    if !(2..=8).contains(&max_degree) {
        return Err(Error::InvalidParams("max degree must be in 2..=8".into()));
    }
    if max_degree == 8 && degree8_samples.is_none() {
        return Err(Error::InvalidParams(
            "degree 8 requires the sampling flag".into(),
        ));
    }
    with_thread_pool(|| {
        let mut report = CampaignReport::new("prop41");
        report
            .params
            .insert("max_degree".into(), max_degree.to_string());
        if let Some(s) = degree8_samples {
            report
                .params
                .insert("degree8_samples".into(), s.to_string());
        }
        for n in 2..=max_degree.min(7) {
            let dense = DenseGroup::from_perm_group(&PermGroup::symmetric(n as usize))?;
            let subs = dense.all_subgroups(None);
            let a_values: Vec<u64> = subs.par_iter().map(|s| dense.a_value(s)).collect();
            let bound = BigUint::from(2u32).pow(n - 1);
            let mut max_a = 0u64;
            for (sub, &a) in subs.iter().zip(&a_values) {
                max_a = max_a.max(a);
                let check = check_bound(
                    BoundKind::Perm2Pow,
                    &BigUint::from(a),
                    &BigUint::from(n),
                );
                if !check.verdict {
                    report.violations.push(entry(&[
                        ("degree", n.to_string()),
                        ("subgroup_order", sub.order.to_string()),
                        ("a_value", a.to_string()),
                    ]));
                }
            }
            report.checked += subs.len() as u64;
            report.stats.push(entry(&[
                ("degree", n.to_string()),
                ("subgroups", subs.len().to_string()),
                ("max_a", max_a.to_string()),
                ("bound", bound.to_string()),
                ("max_ratio", format!("{max_a}/{bound}")),
            ]));
        }
        if max_degree == 8 {
            let samples = degree8_samples.unwrap();
            let mut state = 0x0DD9A27u64;
            let caps = Caps {
                element_cap: 50_000,
                ..Caps::default()
            };
            let mut max_a = 0u64;
            for i in 0..samples {
                let x = random_permutation(8, &mut state);
                let y = random_permutation(8, &mut state);
                let gens = if i % 3 == 2 {
                    // commutator and square give smaller groups for variety
                    let comm = x
                        .inverse()
                        .compose(&y.inverse())
                        .compose(&x)
                        .compose(&y);
                    vec![comm, x.compose(&x)]
                } else {
                    vec![x, y]
                };
                let group = PermGroup::from_generators(8, gens)?.with_caps(caps);
                let dense = DenseGroup::from_perm_group(&group)?;
                let a = dense.a_value(&dense.full_subgroup());
                max_a = max_a.max(a);
                let check =
                    check_bound(BoundKind::Perm2Pow, &BigUint::from(a), &BigUint::from(8u32));
                if !check.verdict {
                    report.violations.push(entry(&[
                        ("degree", "8".into()),
                        ("sample", i.to_string()),
                        ("a_value", a.to_string()),
                    ]));
                }
                report.checked += 1;
            }
            report.stats.push(entry(&[
                ("degree", "8".into()),
                ("mode", "sampled".into()),
                ("samples", samples.to_string()),
                ("max_a", max_a.to_string()),
                ("bound", "128".into()),
            ]));
        }
        Ok(report)
    })
}

// ---------------------------------------------------------------------
// Linear-group campaigns
// ---------------------------------------------------------------------

/// One scanned vector space, as (dimension, characteristic).
pub type Space = (u32, u64);

pub const DEFAULT_SPACES: &[Space] = &[(2, 2), (2, 3), (3, 2), (2, 5)];
pub const DEFAULT_COR13_PAIRS: &[(Space, Space)] = &[((2, 2), (1, 3)), ((2, 3), (2, 2))];

/// One scanned space: GL(dim, p) with its subgroup lattice, complete
/// reducibility flags and a-values.
struct SpaceScan {
    v_size: BigUint,
    label: String,
    dense: DenseGroup,
    subs: Vec<SubSet>,
    completely_reducible: Vec<bool>,
    a_values: Vec<u64>,
}

fn scan_space(dim: u32, p: u64) -> Result<SpaceScan> {
    if !numth::is_prime(p as u128) {
        return Err(Error::InvalidParams(format!(
            "characteristic {p} must be prime"
        )));
    }
    let gl = linrep::general_linear(dim as usize, p, 1)?;
    let perm = gl.to_permutation(VectorAction::NonzeroVectors)?;
    let order = perm
        .order_u64()
        .ok_or_else(|| Error::OutOfRange("GL order exceeds u64".into()))?;
    if order > 20_000 {
        return Err(Error::CapExceeded {
            what: "GL(d,p) order for subgroup scan",
            value: order as u128,
            cap: 20_000,
        });
    }
    let dense = DenseGroup::from_perm_group(&perm)?;
    let subs = dense.all_subgroups(None);
    let field = gl.field.clone();
    let completely_reducible: Vec<bool> = subs
        .par_iter()
        .map(|sub| -> Result<bool> {
            let mats = sub
                .gens
                .iter()
                .map(|&g| {
                    linrep::matrix_from_nonzero_action(
                        &field,
                        dim as usize,
                        dense.permutation(g).expect("permutation-backed"),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            MatrixGroup::new(field.clone(), dim as usize, mats)?.is_completely_reducible()
        })
        .collect::<Result<Vec<bool>>>()?;
    let a_values: Vec<u64> = subs.par_iter().map(|s| dense.a_value(s)).collect();
    Ok(SpaceScan {
        v_size: BigUint::from(p).pow(dim),
        label: format!("GL({dim},{p})"),
        dense,
        subs,
        completely_reducible,
        a_values,
    })
}

/// Verifies a(G) ≤ |V|²/λ (and a(G) ≤ |V|^(3/2)/λ in odd characteristic)
/// over every completely reducible subgroup of GL(d, p) for the given
/// spaces.
pub fn scan_thm12(spaces: &[Space]) -> Result<CampaignReport> {
    with_thread_pool(|| {
        let mut report = CampaignReport::new("thm12");
        report.params.insert(
            "spaces".into(),
            spaces
                .iter()
                .map(|(d, p)| format!("{d}:{p}"))
                .collect::<Vec<_>>()
                .join(","),
        );
        for &(dim, p) in spaces {
            let scan = scan_space(dim, p)?;
            let mut cr_count = 0u64;
            let mut max_a = 0u64;
            for i in 0..scan.subs.len() {
                if !scan.completely_reducible[i] {
                    continue;
                }
                cr_count += 1;
                let a = scan.a_values[i];
                max_a = max_a.max(a);
                let a_big = BigUint::from(a);
                report.checked += 1;
                if !check_bound(BoundKind::Two, &a_big, &scan.v_size).verdict {
                    report.violations.push(entry(&[
                        ("space", scan.label.clone()),
                        ("kind", "TWO".into()),
                        ("subgroup_order", scan.subs[i].order.to_string()),
                        ("a_value", a.to_string()),
                    ]));
                }
                if p != 2 {
                    report.checked += 1;
                    if !check_bound(BoundKind::ThreeHalves, &a_big, &scan.v_size).verdict {
                        report.violations.push(entry(&[
                            ("space", scan.label.clone()),
                            ("kind", "THREE_HALVES".into()),
                            ("subgroup_order", scan.subs[i].order.to_string()),
                            ("a_value", a.to_string()),
                        ]));
                    }
                }
            }
            report.stats.push(entry(&[
                ("space", scan.label.clone()),
                ("V", scan.v_size.to_string()),
                ("subgroups", scan.subs.len().to_string()),
                ("completely_reducible", cr_count.to_string()),
                ("max_a", max_a.to_string()),
            ]));
        }
        Ok(report)
    })
}

/// Semilinear variant of the |V| = 16 scan: ΓL(2,4) acting on the 15
/// nonzero vectors of GF(4)² — which are exactly the nonzero vectors of
/// F2⁴, since semilinear maps over GF(4) are linear over F2. Complete
/// reducibility is tested over F2⁴ and the square bound uses |V| = 16.
pub fn scan_thm12_semilinear_gf4() -> Result<CampaignReport> {
    with_thread_pool(|| {
        let mut report = CampaignReport::new("thm12-gamma24");
        report
            .params
            .insert("space".into(), "GammaL(2,4) on F2^4".into());
        let gl24 = linrep::general_linear(2, 2, 2)?;
        let perm = gl24.to_permutation(VectorAction::NonzeroVectors)?;
        let frobenius = linrep::frobenius_on_nonzero_vectors(&gl24.field, 2)?;
        let mut gens: Vec<Permutation> = perm.generators().to_vec();
        gens.push(frobenius);
        let gamma = PermGroup::from_generators(15, gens)?;
        let dense = DenseGroup::from_perm_group(&gamma)?;
        let subs = dense.all_subgroups(None);
        let f2 = std::sync::Arc::new(linrep::Field::new(2, 1)?);
        let v_size = BigUint::from(16u32);
        let mut cr_count = 0u64;
        let mut max_a = 0u64;
        for sub in &subs {
            let mats = sub
                .gens
                .iter()
                .map(|&g| {
                    linrep::matrix_from_nonzero_action(
                        &f2,
                        4,
                        dense.permutation(g).expect("permutation-backed"),
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            let matrix_group = MatrixGroup::new(f2.clone(), 4, mats)?;
            if !matrix_group.is_completely_reducible()? {
                continue;
            }
            cr_count += 1;
            let a = dense.a_value(sub);
            max_a = max_a.max(a);
            report.checked += 1;
            if !check_bound(BoundKind::Two, &BigUint::from(a), &v_size).verdict {
                report.violations.push(entry(&[
                    ("space", "GammaL(2,4)".into()),
                    ("subgroup_order", sub.order.to_string()),
                    ("a_value", a.to_string()),
                ]));
            }
        }
        report.stats.push(entry(&[
            ("space", "GammaL(2,4)".into()),
            ("V", "16".into()),
            ("group_order", gamma.order().to_string()),
            ("subgroups", subs.len().to_string()),
            ("completely_reducible", cr_count.to_string()),
            ("max_a", max_a.to_string()),
        ]));
        Ok(report)
    })
}

/// Verifies |H| ≤ |V|²/λ for every subgroup H of every completely
/// reducible solvable subgroup G ≤ GL(d, p) with 2 ∤ |H| or 3 ∤ |H|, and
/// |H| ≤ |V|^(3/2)/λ when 2 ∤ |H| and p ≠ 2. H itself need not act
/// completely reducibly.
pub fn scan_prop21(spaces: &[Space]) -> Result<CampaignReport> {
    with_thread_pool(|| {
        let mut report = CampaignReport::new("prop21");
        report.params.insert(
            "spaces".into(),
            spaces
                .iter()
                .map(|(d, p)| format!("{d}:{p}"))
                .collect::<Vec<_>>()
                .join(","),
        );
        for &(dim, p) in spaces {
            let scan = scan_space(dim, p)?;
            let solvable: Vec<bool> = scan
                .subs
                .par_iter()
                .map(|s| scan.dense.is_solvable(s))
                .collect();
            let mut ambient_count = 0u64;
            let mut pair_count = 0u64;
            let mut max_h = 0u64;
            for gi in 0..scan.subs.len() {
                if !scan.completely_reducible[gi] || !solvable[gi] {
                    continue;
                }
                ambient_count += 1;
                for hi in 0..scan.subs.len() {
                    if !scan.subs[gi].contains(&scan.subs[hi]) {
                        continue;
                    }
                    pair_count += 1;
                    let h_order = scan.subs[hi].order as u64;
                    let h_big = BigUint::from(h_order);
                    let odd = h_order % 2 == 1;
                    if odd || !h_order.is_multiple_of(3) {
                        max_h = max_h.max(h_order);
                        report.checked += 1;
                        if !check_bound(BoundKind::Two, &h_big, &scan.v_size).verdict {
                            report.violations.push(entry(&[
                                ("space", scan.label.clone()),
                                ("kind", "TWO".into()),
                                ("ambient_order", scan.subs[gi].order.to_string()),
                                ("subgroup_order", h_order.to_string()),
                            ]));
                        }
                    }
                    if odd && p != 2 {
                        report.checked += 1;
                        if !check_bound(BoundKind::ThreeHalves, &h_big, &scan.v_size).verdict
                        {
                            report.violations.push(entry(&[
                                ("space", scan.label.clone()),
                                ("kind", "THREE_HALVES".into()),
                                ("ambient_order", scan.subs[gi].order.to_string()),
                                ("subgroup_order", h_order.to_string()),
                            ]));
                        }
                    }
                }
            }
            report.stats.push(entry(&[
                ("space", scan.label.clone()),
                ("V", scan.v_size.to_string()),
                ("cr_solvable_ambients", ambient_count.to_string()),
                ("subgroup_pairs", pair_count.to_string()),
                ("max_checked_order", max_h.to_string()),
            ]));
        }
        Ok(report)
    })
}

/// Verifies a(G1 × G2) ≤ |V|²/λ for direct products across two
/// characteristics, with |V| = |V1|·|V2| and a = a(G1)·a(G2); a sample
/// of products is re-analyzed through the composition-factor engine as a
/// cross-module consistency check.
pub fn scan_cor13(pairs: &[(Space, Space)]) -> Result<CampaignReport> {
    with_thread_pool(|| {
        let mut report = CampaignReport::new("cor13");
        report.params.insert(
            "pairs".into(),
            pairs
                .iter()
                .map(|((d1, p1), (d2, p2))| format!("{d1}:{p1}x{d2}:{p2}"))
                .collect::<Vec<_>>()
                .join(","),
        );
        for &((d1, p1), (d2, p2)) in pairs {
            if p1 == p2 {
                return Err(Error::InvalidParams(
                    "mixed characteristic requires p1 != p2".into(),
                ));
            }
            let s1 = scan_space(d1, p1)?;
            let s2 = scan_space(d2, p2)?;
            let v = &s1.v_size * &s2.v_size;
            let cr1: Vec<usize> = (0..s1.subs.len())
                .filter(|&i| s1.completely_reducible[i])
                .collect();
            let cr2: Vec<usize> = (0..s2.subs.len())
                .filter(|&i| s2.completely_reducible[i])
                .collect();
            let mut max_a = 0u64;
            for &i in &cr1 {
                for &j in &cr2 {
                    let a = s1.a_values[i] * s2.a_values[j];
                    max_a = max_a.max(a);
                    report.checked += 1;
                    if !check_bound(BoundKind::Two, &BigUint::from(a), &v).verdict {
                        report.violations.push(entry(&[
                            ("pair", format!("{}x{}", s1.label, s2.label)),
                            (
                                "orders",
                                format!("{}x{}", s1.subs[i].order, s2.subs[j].order),
                            ),
                            ("a_value", a.to_string()),
                        ]));
                    }
                }
            }
            // Cross-module consistency: rebuild a few products as
            // permutation groups on disjoint points and recompute a(G)
            // through the composition-factor engine.
            let mut cross_checked = 0u64;
            for &i in cr1.iter().rev().take(3) {
                for &j in cr2.iter().rev().take(3) {
                    let g1 = s1.dense.to_perm_group(&s1.subs[i])?;
                    let g2 = s2.dense.to_perm_group(&s2.subs[j])?;
                    let product = PermGroup::disjoint_direct_product(&g1, &g2);
                    let direct = structure::a_of_group(&product)?;
                    let expected = s1.a_values[i] * s2.a_values[j];
                    cross_checked += 1;
                    if direct != expected {
                        report.findings.push(Finding {
                            kind: "CROSS_MODULE_MISMATCH".into(),
                            detail: format!(
                                "{}x{} orders {}x{}: product engine {} vs factor product {}",
                                s1.label,
                                s2.label,
                                s1.subs[i].order,
                                s2.subs[j].order,
                                direct,
                                expected
                            ),
                        });
                    }
                }
            }
            report.stats.push(entry(&[
                ("pair", format!("{}x{}", s1.label, s2.label)),
                ("V", v.to_string()),
                ("products_checked", (cr1.len() * cr2.len()).to_string()),
                ("cross_module_samples", cross_checked.to_string()),
                ("max_a", max_a.to_string()),
            ]));
        }
        Ok(report)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerate_subgroups_of_s3() {
        let subs = enumerate_subgroups(&PermGroup::symmetric(3), None).unwrap();
        assert_eq!(subs.len(), 6);
        let orders: Vec<u64> = subs.iter().map(|g| g.order_u64().unwrap()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn prop41_small_degrees() {
        let report = scan_prop41(4, None).unwrap();
        assert!(report.violations.is_empty());
        // Degrees 2, 3, 4 with subgroup counts 2, 6, 30.
        assert_eq!(report.checked, 2 + 6 + 30);
        assert_eq!(report.stats[2]["subgroups"], "30");
        assert_eq!(report.stats[2]["max_a"], "3");
    }

    #[test]
    fn prop41_degree_8_needs_flag() {
        assert!(scan_prop41(8, None).is_err());
    }

    #[test]
    fn thm12_on_gl22() {
        let report = scan_thm12(&[(2, 2)]).unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.stats[0]["subgroups"], "6");
        assert_eq!(report.stats[0]["max_a"], "3");
    }

    #[test]
    fn prop21_on_gl23() {
        let report = scan_prop21(&[(2, 3)]).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.checked > 0);
    }

    #[test]
    fn cor13_default_pair() {
        let report = scan_cor13(&[((2, 2), (1, 3))]).unwrap();
        assert!(report.violations.is_empty());
        assert!(report.findings.is_empty());
        assert!(report.checked > 0);
    }

    #[test]
    fn cor13_rejects_equal_characteristic() {
        assert!(scan_cor13(&[((2, 2), (3, 2))]).is_err());
    }

    #[test]
    fn semilinear_gf4_scan_runs_clean() {
        let report = scan_thm12_semilinear_gf4().unwrap();
        assert!(report.violations.is_empty());
        assert_eq!(report.stats[0]["group_order"], "360");
        assert!(report.checked > 0);
    }

    #[test]
    fn campaign_reports_are_deterministic() {
        let a = scan_thm12(&[(2, 3)]).unwrap().to_json();
        let b = scan_thm12(&[(2, 3)]).unwrap().to_json();
        assert_eq!(a, b);
        let a = scan_prop41(5, None).unwrap().to_json();
        let b = scan_prop41(5, None).unwrap().to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn degree8_sampling_is_reproducible() {
        let a = scan_prop41(8, Some(6)).unwrap();
        let b = scan_prop41(8, Some(6)).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert!(a.violations.is_empty());
    }
}
