//! Randomized property suites over small-group instances, at least 200
//! instances per property, driven by a fixed-seed generator so every run
//! exercises the same corpus.

use num_traits::ToPrimitive;

use oddpart::harness::DenseGroup;
use oddpart::numth;
use oddpart::perm::{PermGroup, Permutation};
use oddpart::structure;

struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    fn permutation(&mut self, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for i in (1..degree).rev() {
            let j = self.below(i as u64 + 1) as usize;
            images.swap(i, j);
        }
        Permutation::from_images(images).unwrap()
    }

    fn group(&mut self, degree: usize, gens: usize) -> PermGroup {
        let gens = (0..gens).map(|_| self.permutation(degree)).collect();
        PermGroup::from_generators(degree, gens).unwrap()
    }
}

#[test]
fn a_is_multiplicative_over_direct_products() {
    let mut rng = Rng(11);
    let mut checked = 0;
    while checked < 220 {
        let d1 = 3 + rng.below(3) as usize;
        let d2 = 3 + rng.below(3) as usize;
        let g = rng.group(d1, 2);
        let h = rng.group(d2, 2);
        let product = PermGroup::disjoint_direct_product(&g, &h);
        let expected =
            structure::a_of_group(&g).unwrap() * structure::a_of_group(&h).unwrap();
        assert_eq!(
            structure::a_of_group(&product).unwrap(),
            expected,
            "|G| = {:?}, |H| = {:?}",
            g.order_u64(),
            h.order_u64()
        );
        checked += 1;
    }
    println!("[property] a(GxH) = a(G)a(H) on {checked} random direct products");
}

#[test]
fn a_splits_over_any_found_normal_subgroup() {
    let mut rng = Rng(23);
    let mut checked = 0;
    while checked < 220 {
        let degree = 4 + rng.below(3) as usize;
        let g = rng.group(degree, 2);
        if g.order_u64() == Some(1) {
            continue;
        }
        let Some(n) = structure::find_proper_normal(&g).unwrap() else {
            continue; // simple group: nothing to split
        };
        let quotient = g.coset_action(&n).unwrap();
        let a_g = structure::a_of_group(&g).unwrap();
        let a_n = structure::a_of_group(&n).unwrap();
        let a_q = structure::a_of_group(&quotient).unwrap();
        assert_eq!(a_g, a_n * a_q, "|G| = {:?}", g.order_u64());
        checked += 1;
    }
    println!("[property] a(G) = a(N)a(G/N) on {checked} instances");
}

/// Random subgroups of solvable ambients are solvable, and for solvable
/// groups a(G) is exactly the odd part of the order.
#[test]
fn a_of_solvable_groups_equals_odd_part() {
    let ambients: Vec<PermGroup> = vec![
        PermGroup::symmetric(4),
        // dihedral of order 12 on 6 points
        PermGroup::from_generators(
            6,
            vec![
                Permutation::from_cycles(6, &[(0..6).collect()]).unwrap(),
                Permutation::from_images(vec![5, 4, 3, 2, 1, 0]).unwrap(),
            ],
        )
        .unwrap(),
        oddpart::linrep::affine_general_linear(1, 5, 1).unwrap(),
        oddpart::linrep::affine_semilinear(2, 3).unwrap(),
        oddpart::linrep::affine_general_linear(2, 3, 1).unwrap(),
        // C2 wr C2 wr C2 on 8 points (a Sylow 2-subgroup of S8)
        PermGroup::from_generators(
            8,
            vec![
                Permutation::cycle(8, &[0, 1]).unwrap(),
                Permutation::from_cycles(8, &[vec![0, 2], vec![1, 3]]).unwrap(),
                Permutation::from_cycles(8, &[vec![0, 4], vec![1, 5], vec![2, 6], vec![3, 7]])
                    .unwrap(),
            ],
        )
        .unwrap(),
        // S3 x S3 with the swap, order 72, on 6 points
        PermGroup::from_generators(
            6,
            vec![
                Permutation::cycle(6, &[0, 1, 2]).unwrap(),
                Permutation::cycle(6, &[0, 1]).unwrap(),
                Permutation::from_cycles(6, &[vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap(),
            ],
        )
        .unwrap(),
    ];
    for ambient in &ambients {
        assert!(ambient.is_solvable());
    }
    let mut rng = Rng(37);
    let mut checked = 0;
    while checked < 220 {
        let ambient = &ambients[rng.below(ambients.len() as u64) as usize];
        // random elements as short products of generators
        let mut pick = || {
            let mut e = Permutation::identity(ambient.degree());
            for _ in 0..(2 + rng.below(5)) {
                let gens = ambient.generators();
                e = e.compose(&gens[rng.below(gens.len() as u64) as usize]);
            }
            e
        };
        let sub =
            PermGroup::from_generators(ambient.degree(), vec![pick(), pick()]).unwrap();
        assert!(sub.is_solvable(), "subgroup of solvable is solvable");
        let order = sub.order_u64().unwrap();
        assert_eq!(
            structure::a_of_group(&sub).unwrap(),
            numth::odd_part(order),
            "order {order}"
        );
        checked += 1;
    }
    println!("[property] a(G) = |G|_odd on {checked} random solvable groups");
}

#[test]
fn bsgs_order_matches_brute_force_closure() {
    let mut rng = Rng(41);
    let mut checked = 0;
    while checked < 220 {
        let degree = 3 + rng.below(5) as usize; // up to degree 7
        let gen_count = 1 + rng.below(2) as usize;
        let g = rng.group(degree, gen_count);
        let Some(elements) = g.brute_force_elements(5000) else {
            continue; // closure larger than the 5000-element oracle cap
        };
        assert_eq!(
            g.order(),
            num_bigint::BigUint::from(elements.len()),
            "degree {degree}"
        );
        checked += 1;
    }
    println!("[property] BSGS order = closure size on {checked} random groups");
}

#[test]
fn zsigmondy_primes_are_congruent_to_one_mod_n() {
    let mut checked = 0;
    // Full sweep for small characteristics.
    for p in [2u64, 3, 5, 7] {
        for n in 1..=40u32 {
            for w in numth::zsigmondy_primes(p, n).unwrap() {
                assert_eq!(
                    w.prime % n as u128,
                    1 % n as u128,
                    "L = {} for ({p},{n})",
                    w.prime
                );
            }
            checked += 1;
        }
    }
    // Randomized extras over larger characteristics.
    let primes = [11u64, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47];
    let mut rng = Rng(53);
    for _ in 0..60 {
        let p = primes[rng.below(primes.len() as u64) as usize];
        let n = 1 + rng.below(24) as u32;
        for w in numth::zsigmondy_primes(p, n).unwrap() {
            assert_eq!(w.prime % n as u128, 1 % n as u128);
        }
        checked += 1;
    }
    assert!(checked >= 200);
    println!("[property] every Zsigmondy prime is 1 mod n over {checked} (p, n) pairs");
}

/// Zsigmondy's theorem pins the empty cases exactly: (2,1), (2,6), and
/// n = 2 with p + 1 a power of two.
#[test]
fn zsigmondy_empty_exactly_on_classical_exceptions() {
    for p in [2u64, 3, 5, 7] {
        for n in 1..=40u32 {
            let empty = numth::zsigmondy_primes(p, n).unwrap().is_empty();
            let classical = (p == 2 && n == 1)
                || (p == 2 && n == 6)
                || (n == 2 && (p + 1).is_power_of_two());
            assert_eq!(empty, classical, "p={p} n={n}");
        }
    }
    println!("[property] classical exception set exact over 160 (p, n) pairs");
}

// ------------------------------------------------------------------
// Module invariants beyond the five randomized suites
// ------------------------------------------------------------------

#[test]
fn orbits_partition_and_blocks_are_invariant() {
    let mut rng = Rng(61);
    for _ in 0..200 {
        let degree = 4 + rng.below(4) as usize;
        let g = rng.group(degree, 2);
        // orbits: disjoint, covering, generator-closed
        let orbits = g.orbits();
        let mut seen = vec![false; degree];
        for orbit in &orbits {
            for &pt in orbit {
                assert!(!seen[pt as usize], "orbits overlap");
                seen[pt as usize] = true;
            }
            for gen in g.generators() {
                for &pt in orbit {
                    assert!(orbit.contains(&gen.apply(pt)));
                }
            }
        }
        assert!(seen.iter().all(|&s| s), "orbits cover all points");
        // block systems: preserved setwise, at least two blocks of size ≥ 2
        if g.is_transitive() {
            if let oddpart::perm::BlockSystem::Blocks(blocks) =
                g.minimal_block_system().unwrap()
            {
                assert!(blocks.len() >= 2);
                assert!(blocks.iter().all(|b| b.len() >= 2));
                for gen in g.generators() {
                    for block in &blocks {
                        let mut image: Vec<u32> =
                            block.iter().map(|&pt| gen.apply(pt)).collect();
                        image.sort_unstable();
                        assert!(blocks.contains(&image), "block image is a block");
                    }
                }
            }
        }
    }
    println!("[property] orbit partition and block invariance on 200 random groups");
}

#[test]
fn membership_agrees_with_brute_force() {
    let mut rng = Rng(71);
    let mut checked = 0;
    while checked < 200 {
        let degree = 4 + rng.below(3) as usize;
        let g = rng.group(degree, 2);
        let Some(elements) = g.brute_force_elements(5000) else {
            continue;
        };
        let inside = &elements[rng.below(elements.len() as u64) as usize];
        assert!(g.contains(inside).unwrap());
        let candidate = rng.permutation(degree);
        assert_eq!(
            g.contains(&candidate).unwrap(),
            elements.contains(&candidate)
        );
        checked += 1;
    }
    println!("[property] membership agrees with brute force on {checked} groups");
}

#[test]
fn coset_action_order_is_the_index() {
    let mut rng = Rng(83);
    let mut checked = 0;
    while checked < 200 {
        let degree = 4 + rng.below(3) as usize;
        let g = rng.group(degree, 2);
        let order = g.order_u64().unwrap();
        if order == 1 {
            continue;
        }
        let Some(n) = structure::find_proper_normal(&g).unwrap() else {
            continue;
        };
        let q = g.coset_action(&n).unwrap();
        let n_order = n.order_u64().unwrap();
        assert_eq!(q.order_u64(), Some(order / n_order));
        assert_eq!(q.degree() as u64, order / n_order);
        checked += 1;
    }
    println!("[property] coset action order = index on {checked} instances");
}

#[test]
fn solvability_matches_classical_facts() {
    let mut rng = Rng(97);
    let mut small = 0;
    for _ in 0..400 {
        let degree = 3 + rng.below(5) as usize;
        let g = rng.group(degree, 2);
        let order = g.order_u64().unwrap();
        if order < 60 {
            assert!(g.is_solvable(), "every group of order < 60 is solvable");
            small += 1;
        }
    }
    assert!(small >= 50, "enough small groups sampled ({small})");
    // Groups containing A5 are not solvable.
    let a5 = PermGroup::alternating(5);
    assert!(!a5.is_solvable());
    assert!(!PermGroup::symmetric(5).is_solvable());
    assert!(!PermGroup::symmetric(6).is_solvable());
    println!("[property] solvability classical facts on {small} small groups");
}

/// Maschke direction: subgroups of GL(2,3) of order coprime to 3 are
/// completely reducible; the unipotent direction fails.
#[test]
fn complete_reducibility_matches_maschke() {
    let gl = oddpart::linrep::general_linear(2, 3, 1).unwrap();
    let perm = gl
        .to_permutation(oddpart::linrep::VectorAction::NonzeroVectors)
        .unwrap();
    let dense = DenseGroup::from_perm_group(&perm).unwrap();
    let mut coprime = 0;
    for sub in dense.all_subgroups(None) {
        let mats: Vec<_> = sub
            .gens
            .iter()
            .map(|&i| {
                oddpart::linrep::matrix_from_nonzero_action(
                    &gl.field,
                    2,
                    dense.permutation(i).unwrap(),
                )
                .unwrap()
            })
            .collect();
        let group = oddpart::linrep::MatrixGroup::new(gl.field.clone(), 2, mats).unwrap();
        if sub.order % 3 != 0 {
            assert!(
                group.is_completely_reducible().unwrap(),
                "order {} is coprime to the characteristic",
                sub.order
            );
            coprime += 1;
        }
    }
    assert!(coprime > 10);
    println!("[property] Maschke direction on {coprime} coprime-order subgroups");
}

/// The composition-factor product always recomposes to the group order,
/// and a(G) divides the odd part.
#[test]
fn composition_report_internal_invariants() {
    let mut rng = Rng(101);
    for _ in 0..200 {
        let degree = 4 + rng.below(3) as usize;
        let g = rng.group(degree, 2);
        let report = structure::composition_factors(&g).unwrap();
        let product: u64 = report.factors.iter().map(|f| f.order).product();
        assert_eq!(product, report.order);
        assert_eq!(report.odd_part_of_order % report.a_value, 0);
        for f in &report.factors {
            if f.abelian {
                assert!(numth::is_prime(f.order as u128));
            } else {
                assert!(f.order >= 60 && f.order % 2 == 0, "Feit-Thompson");
            }
        }
        assert_eq!(
            report.order.to_u64(),
            g.order().to_u64(),
            "report order matches group order"
        );
    }
    println!("[property] composition report invariants on 200 random groups");
}

/// Groups of odd order satisfy a(G) = |G| (the Feit-Thompson
/// consistency check, on odd-order groups up to order 2000).
#[test]
fn odd_order_groups_have_a_equal_to_order() {
    // Odd-order subgroups sampled inside an odd-order ambient: the
    // normalizer-style group C7 x C9 x C5 on 21 points and C3 wr C3.
    let ambients = [PermGroup::from_generators(
            21,
            vec![
                Permutation::from_cycles(21, &[(0..7).collect()]).unwrap(),
                Permutation::from_cycles(21, &[(7..16).collect()]).unwrap(),
                Permutation::from_cycles(21, &[(16..21).collect()]).unwrap(),
            ],
        )
        .unwrap(),
        PermGroup::from_generators(
            9,
            vec![
                Permutation::cycle(9, &[0, 1, 2]).unwrap(),
                Permutation::cycle(9, &[3, 4, 5]).unwrap(),
                Permutation::from_cycles(9, &[vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]])
                    .unwrap(),
            ],
        )
        .unwrap()];
    let mut rng = Rng(113);
    let mut checked = 0;
    while checked < 200 {
        let ambient = &ambients[rng.below(ambients.len() as u64) as usize];
        let mut pick = || {
            let mut e = Permutation::identity(ambient.degree());
            for _ in 0..(1 + rng.below(6)) {
                let gens = ambient.generators();
                e = e.compose(&gens[rng.below(gens.len() as u64) as usize]);
            }
            e
        };
        let sub =
            PermGroup::from_generators(ambient.degree(), vec![pick(), pick()]).unwrap();
        let order = sub.order_u64().unwrap();
        assert!(order % 2 == 1, "ambient has odd order");
        if order > 2000 {
            continue;
        }
        assert_eq!(structure::a_of_group(&sub).unwrap(), order);
        checked += 1;
    }
    println!("[property] a(G) = |G| on {checked} odd-order groups");
}

/// Regenerating a group from a different generating set leaves the
/// subgroup census unchanged.
#[test]
fn subgroup_enumeration_is_generating_set_invariant() {
    let mut rng = Rng(127);
    for _ in 0..20 {
        let degree = 4 + rng.below(2) as usize;
        let g = rng.group(degree, 2);
        let elements = g.elements().unwrap();
        // Rebuild from two random elements plus the original generators.
        let mut gens: Vec<Permutation> = g.generators().to_vec();
        gens.push(elements[rng.below(elements.len() as u64) as usize].clone());
        let regenerated = PermGroup::from_generators(degree, gens).unwrap();
        assert_eq!(regenerated.order(), g.order());
        let a = oddpart::harness::enumerate_subgroups(&g, None).unwrap().len();
        let b = oddpart::harness::enumerate_subgroups(&regenerated, None)
            .unwrap()
            .len();
        assert_eq!(a, b);
    }
    println!("[property] subgroup census invariant under regeneration on 20 groups");
}
