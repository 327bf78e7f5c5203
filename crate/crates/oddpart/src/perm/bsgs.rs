//! Deterministic Schreier–Sims machinery.
//!
//! `Bsgs` is the stabilizer chain used for orders, membership and element
//! enumeration. Base points are the smallest non-fixed points and every
//! loop runs in a fixed order, so the structure is identical across runs.
//! Transversals are stored as Schreier vectors and coset representatives
//! are rebuilt on demand, keeping memory linear in the degree per level.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::One;

use super::Permutation;

#[derive(Clone)]
struct Level {
    point: u32,
    /// Discovery-ordered orbit of `point` under the generators active at
    /// this level.
    orbit: Vec<u32>,
    /// Schreier vector: `sv[p] = (generator index, parent point)`;
    /// the root has parent = itself and generator index = usize::MAX.
    sv: Vec<Option<(usize, u32)>>,
}

#[derive(Clone)]
pub(crate) struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
    /// All strong generators; `tags[k]` is the deepest level whose
    /// stabilizer contains `gens[k]` (it fixes base points before its
    /// tag and moves the base point at its tag).
    gens: Vec<Permutation>,
    tags: Vec<usize>,
}

impl Bsgs {
    pub fn build(degree: usize, generators: &[Permutation]) -> Bsgs {
        let mut b = Bsgs {
            degree,
            levels: Vec::new(),
            gens: Vec::new(),
            tags: Vec::new(),
        };
        for g in generators {
            if !g.is_identity() {
                b.sift_and_add(g.clone());
            }
        }
        // Completion: scan deepest level first; every addition at level j
        // restarts the scan from j. When the scan passes level 0 all
        // Schreier generators sift to the identity and the chain is a
        // genuine BSGS.
        let mut i = b.levels.len() as isize - 1;
        while i >= 0 {
            let lvl = i as usize;
            b.recompute_orbit(lvl);
            match b.first_violation(lvl) {
                None => i -= 1,
                Some(residue) => {
                    let j = b.insert_residue(residue, lvl + 1);
                    i = j as isize;
                }
            }
        }
        b
    }

    fn active_gens(&self, level: usize) -> impl Iterator<Item = (usize, &Permutation)> {
        self.gens
            .iter()
            .enumerate()
            .filter(move |(k, _)| self.tags[*k] >= level)
    }

    fn recompute_orbit(&mut self, level: usize) {
        let point = self.levels[level].point;
        let mut sv: Vec<Option<(usize, u32)>> = vec![None; self.degree];
        sv[point as usize] = Some((usize::MAX, point));
        let mut orbit = vec![point];
        let mut head = 0;
        while head < orbit.len() {
            let pt = orbit[head];
            head += 1;
            for (k, g) in self.gens.iter().enumerate() {
                if self.tags[k] < level {
                    continue;
                }
                let img = g.apply(pt);
                if sv[img as usize].is_none() {
                    sv[img as usize] = Some((k, pt));
                    orbit.push(img);
                }
            }
        }
        self.levels[level].orbit = orbit;
        self.levels[level].sv = sv;
    }

    /// Coset representative mapping the level's base point to `target`.
    fn transversal(&self, level: usize, target: u32) -> Permutation {
        let lvl = &self.levels[level];
        let mut path = Vec::new();
        let mut cur = target;
        loop {
            let (k, parent) = lvl.sv[cur as usize].expect("target must lie in orbit");
            if k == usize::MAX {
                break;
            }
            path.push(k);
            cur = parent;
        }
        let mut u = Permutation::identity(self.degree);
        for &k in path.iter().rev() {
            u = self.gens[k].compose(&u);
        }
        u
    }

    /// Strips `g` through levels `from..`; returns the residue and the
    /// level at which sifting stopped.
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut residue = g.clone();
        for i in from..self.levels.len() {
            let img = residue.apply(self.levels[i].point);
            if self.levels[i].sv[img as usize].is_none() {
                return (residue, i);
            }
            if img != self.levels[i].point {
                let u = self.transversal(i, img);
                residue = u.inverse().compose(&residue);
            }
        }
        (residue, self.levels.len())
    }

    fn sift_and_add(&mut self, g: Permutation) {
        let (residue, level) = self.strip(&g, 0);
        if !residue.is_identity() {
            self.push_gen(residue, level);
        }
    }

    /// Inserts a residue known to fix all base points before `min_level`.
    /// Returns the level the residue landed at.
    fn insert_residue(&mut self, residue: Permutation, min_level: usize) -> usize {
        let (res, level) = self.strip(&residue, min_level);
        debug_assert!(!res.is_identity());
        self.push_gen(res, level)
    }

    fn push_gen(&mut self, g: Permutation, level: usize) -> usize {
        if level == self.levels.len() {
            let point = g.smallest_moved_point().expect("non-identity");
            let mut sv = vec![None; self.degree];
            sv[point as usize] = Some((usize::MAX, point));
            self.levels.push(Level {
                point,
                orbit: vec![point],
                sv,
            });
        }
        self.gens.push(g);
        self.tags.push(level);
        level
    }

    /// First Schreier generator at `level` that fails to sift through the
    /// deeper levels, returned as its sifted residue.
    fn first_violation(&mut self, level: usize) -> Option<Permutation> {
        let orbit = self.levels[level].orbit.clone();
        for &gamma in &orbit {
            let u_gamma = self.transversal(level, gamma);
            let gen_indices: Vec<usize> = self
                .active_gens(level)
                .map(|(k, _)| k)
                .collect();
            for k in gen_indices {
                let s = &self.gens[k];
                let target = s.apply(gamma);
                let u_target_inv = self.transversal(level, target).inverse();
                let schreier = u_target_inv.compose(&s.compose(&u_gamma));
                if schreier.is_identity() {
                    continue;
                }
                let (res, _) = self.strip(&schreier, level + 1);
                if !res.is_identity() {
                    return Some(res);
                }
            }
        }
        None
    }

    pub fn order(&self) -> BigUint {
        let mut order = BigUint::one();
        for lvl in &self.levels {
            order *= BigUint::from(lvl.orbit.len() as u64);
        }
        order
    }

    pub fn sifts_to_identity(&self, g: &Permutation) -> bool {
        let (res, _) = self.strip(g, 0);
        res.is_identity()
    }

    /// Every group element, as products of transversal representatives.
    pub fn all_elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in (0..self.levels.len()).rev() {
            let orbit = self.levels[level].orbit.clone();
            let mut next = Vec::with_capacity(elems.len() * orbit.len());
            for &gamma in &orbit {
                let u = self.transversal(level, gamma);
                for h in &elems {
                    next.push(u.compose(h));
                }
            }
            elems = next;
        }
        elems
    }
}

/// Stabilizer chain with strictly increasing base points, used to pick
/// the lexicographically minimal representative of a left coset `g·N`.
/// Built from full Schreier generator sets (no sifting); intended for the
/// modest subgroup sizes seen in coset actions.
pub(crate) struct OrderedChain {
    levels: Vec<OrderedLevel>,
}

struct OrderedLevel {
    point: u32,
    orbit: Vec<u32>,
    sv: Vec<Option<(usize, u32)>>,
    gens: Vec<Permutation>,
}

impl OrderedChain {
    pub fn build(degree: usize, generators: &[Permutation]) -> OrderedChain {
        let mut levels = Vec::new();
        let mut gens: Vec<Permutation> = {
            let mut seen = HashSet::new();
            generators
                .iter()
                .filter(|g| !g.is_identity() && seen.insert((*g).clone()))
                .cloned()
                .collect()
        };
        while !gens.is_empty() {
            let point = gens
                .iter()
                .filter_map(|g| g.smallest_moved_point())
                .min()
                .expect("non-identity generators move something");
            let mut sv: Vec<Option<(usize, u32)>> = vec![None; degree];
            sv[point as usize] = Some((usize::MAX, point));
            let mut orbit = vec![point];
            let mut head = 0;
            while head < orbit.len() {
                let pt = orbit[head];
                head += 1;
                for (k, g) in gens.iter().enumerate() {
                    let img = g.apply(pt);
                    if sv[img as usize].is_none() {
                        sv[img as usize] = Some((k, pt));
                        orbit.push(img);
                    }
                }
            }
            let level = OrderedLevel {
                point,
                orbit,
                sv,
                gens,
            };
            // Stabilizer generators: the full set of Schreier generators.
            let mut next: Vec<Permutation> = Vec::new();
            let mut seen = HashSet::new();
            for &gamma in &level.orbit {
                let u_gamma = level.transversal(degree, gamma);
                for s in &level.gens {
                    let target = s.apply(gamma);
                    let u_target_inv = level.transversal(degree, target).inverse();
                    let schreier = u_target_inv.compose(&s.compose(&u_gamma));
                    if !schreier.is_identity() && seen.insert(schreier.clone()) {
                        next.push(schreier);
                    }
                }
            }
            levels.push(level);
            gens = next;
        }
        OrderedChain { levels }
    }

    /// Lexicographically minimal element of the left coset `g·N`.
    ///
    /// Works because the base points increase strictly: every point below
    /// the current base point is fixed by the remaining stabilizer, so the
    /// image vector can be minimized coordinate by coordinate.
    pub fn min_in_coset(&self, g: &Permutation) -> Permutation {
        let degree = g.degree();
        let mut cur = g.clone();
        for level in &self.levels {
            let mut best = level.point;
            let mut best_img = cur.apply(level.point);
            for &y in &level.orbit {
                let img = cur.apply(y);
                if img < best_img {
                    best_img = img;
                    best = y;
                }
            }
            if best != level.point {
                let u = level.transversal(degree, best);
                cur = cur.compose(&u);
            }
        }
        cur
    }
}

impl OrderedLevel {
    fn transversal(&self, degree: usize, target: u32) -> Permutation {
        let mut path = Vec::new();
        let mut cur = target;
        loop {
            let (k, parent) = self.sv[cur as usize].expect("target must lie in orbit");
            if k == usize::MAX {
                break;
            }
            path.push(k);
            cur = parent;
        }
        let mut u = Permutation::identity(degree);
        for &k in path.iter().rev() {
            u = self.gens[k].compose(&u);
        }
        u
    }
}
