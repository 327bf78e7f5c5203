//! Permutations and permutation groups.
//!
//! Groups are given by generators; orders, membership tests and element
//! enumeration go through a deterministic base-and-strong-generating-set
//! (BSGS) computation that is built lazily and cached. Base points are
//! always the smallest non-fixed points, so repeated runs over the same
//! generators produce identical data.

mod bsgs;
mod parse;

pub use parse::{parse_generator_file, write_generator_file};

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::{Error, Result};
use bsgs::{Bsgs, OrderedChain};

/// A permutation of `{0, …, degree-1}`, stored as its image sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    /// Identity permutation of the given degree.
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image sequence; `images[i]` is the
    /// image of point `i`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &img in &images {
            if (img as usize) >= degree || seen[img as usize] {
                return Err(Error::NotBijection { degree });
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of the given degree from cycles. Later cycles
    /// are applied after earlier ones; for disjoint cycles the order is
    /// immaterial. Fixed points may be omitted.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for &pt in cycle {
                if pt as usize >= degree {
                    return Err(Error::Parse(format!(
                        "point {pt} out of range for degree {degree}"
                    )));
                }
            }
            if cycle.len() < 2 {
                continue;
            }
            let mut step: Vec<u32> = (0..degree as u32).collect();
            for i in 0..cycle.len() {
                step[cycle[i] as usize] = cycle[(i + 1) % cycle.len()];
            }
            for img in images.iter_mut() {
                *img = step[*img as usize];
            }
        }
        Permutation::from_images(images)
    }

    /// Convenience constructor for one-cycle permutations in tests and
    /// examples.
    pub fn cycle(degree: usize, points: &[u32]) -> Result<Self> {
        Permutation::from_cycles(degree, &[points.to_vec()])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i as u32 == img)
    }

    /// `self ∘ other`: applies `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        let images = other
            .images
            .iter()
            .map(|&mid| self.images[mid as usize])
            .collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u32;
        }
        Permutation { images }
    }

    /// Conjugate `g⁻¹ ∘ self ∘ g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().compose(&self.compose(g))
    }

    /// Smallest point not fixed by this permutation, if any.
    pub fn smallest_moved_point(&self) -> Option<u32> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &img)| i as u32 != img)
            .map(|(i, _)| i as u32)
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn element_order(&self) -> u64 {
        let mut order: u64 = 1;
        for cycle in self.cycles_with_fixed(false) {
            order = num_integer::lcm(order, cycle.len() as u64);
        }
        order
    }

    /// Cycle decomposition; fixed points included only when requested.
    /// Cycles are listed by smallest element, each starting at its
    /// smallest point.
    pub fn cycles_with_fixed(&self, include_fixed: bool) -> Vec<Vec<u32>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start as usize] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur as usize] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            if cycle.len() > 1 || include_fixed {
                out.push(cycle);
            }
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles_with_fixed(false);
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, pt) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{pt}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Caps guarding the expensive operations; all configurable.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Maximum degree (index) allowed for a coset action.
    pub coset_degree: u64,
    /// Maximum group order for full element enumeration.
    pub element_cap: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            coset_degree: 100_000,
            element_cap: 20_000,
        }
    }
}

/// A permutation group given by generators, with a lazily built BSGS.
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    caps: Caps,
    bsgs: OnceLock<Bsgs>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let bsgs = OnceLock::new();
        if let Some(b) = self.bsgs.get() {
            let _ = bsgs.set(b.clone());
        }
        PermGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            caps: self.caps,
            bsgs,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermGroup(degree {}, {} gens)", self.degree, self.generators.len())
    }
}

/// Result of a block-system search for a transitive group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockSystem {
    /// Only the trivial systems exist: the group is primitive.
    Trivial,
    /// A minimal nontrivial system of blocks, each sorted, listed by
    /// smallest element.
    Blocks(Vec<Vec<u32>>),
}

impl PermGroup {
    /// Builds a group from generators of the given degree. Identity
    /// generators and duplicates are discarded; the trivial group has an
    /// empty effective generator list.
    pub fn from_generators(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        let mut effective = Vec::new();
        let mut seen = HashSet::new();
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
            if !g.is_identity() && seen.insert(g.clone()) {
                effective.push(g);
            }
        }
        Ok(PermGroup {
            degree,
            generators: effective,
            caps: Caps::default(),
            bsgs: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup::from_generators(degree, Vec::new()).expect("trivial group")
    }

    /// Symmetric group on `{0, …, n-1}` with the standard generators.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::cycle(n, &[0, 1]).unwrap());
        }
        if n >= 3 {
            gens.push(Permutation::from_cycles(n, &[(0..n as u32).collect()]).unwrap());
        }
        PermGroup::from_generators(n, gens).unwrap()
    }

    /// Alternating group on `{0, …, n-1}`.
    pub fn alternating(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 3 {
            gens.push(Permutation::cycle(n, &[0, 1, 2]).unwrap());
        }
        if n >= 4 {
            let long: Vec<u32> = if n % 2 == 1 {
                (0..n as u32).collect()
            } else {
                (1..n as u32).collect()
            };
            gens.push(Permutation::from_cycles(n, &[long]).unwrap());
        }
        PermGroup::from_generators(n, gens).unwrap()
    }

    pub fn with_caps(mut self, caps: Caps) -> Self {
        self.caps = caps;
        self
    }

    pub fn caps(&self) -> Caps {
        self.caps
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    fn chain(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::build(self.degree, &self.generators))
    }

    /// Exact group order.
    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    /// Group order as `u64` when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    /// Membership test by sifting through the BSGS.
    pub fn contains(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: g.degree(),
            });
        }
        Ok(self.chain().sifts_to_identity(g))
    }

    /// The orbits of the group, each sorted ascending, listed by smallest
    /// element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        for start in 0..n as u32 {
            if seen[start as usize] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start as usize] = true;
            let mut head = 0;
            while head < orbit.len() {
                let pt = orbit[head];
                head += 1;
                for g in &self.generators {
                    let img = g.apply(pt);
                    if !seen[img as usize] {
                        seen[img as usize] = true;
                        orbit.push(img);
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        orbits
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Minimal nontrivial block system of a transitive group, or
    /// `Trivial` when the group is primitive.
    ///
    /// For each seed pair `(0, i)` the finest G-invariant partition
    /// merging 0 and i is computed; among the nontrivial results the one
    /// with the smallest block size wins, ties broken by smallest `i`.
    pub fn minimal_block_system(&self) -> Result<BlockSystem> {
        if !self.is_transitive() {
            return Err(Error::NotTransitive);
        }
        let n = self.degree;
        if n <= 2 {
            return Ok(BlockSystem::Trivial);
        }
        let mut best: Option<(usize, Vec<Vec<u32>>)> = None;
        for seed in 1..n as u32 {
            if let Some(blocks) = self.finest_blocks_merging(0, seed) {
                let size = blocks[0].len();
                if best.as_ref().is_none_or(|(s, _)| size < *s) {
                    best = Some((size, blocks));
                }
            }
        }
        Ok(match best {
            Some((_, blocks)) => BlockSystem::Blocks(blocks),
            None => BlockSystem::Trivial,
        })
    }

    /// Atkinson's algorithm: the finest block system in which `a` and `b`
    /// share a block, or `None` when that system is the full partition.
    fn finest_blocks_merging(&self, a: u32, b: u32) -> Option<Vec<Vec<u32>>> {
        let n = self.degree;
        let mut parent: Vec<u32> = (0..n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                let up = parent[parent[x as usize] as usize];
                parent[x as usize] = up;
                x = up;
            }
            x
        }
        let mut queue = vec![(a, b)];
        parent[b as usize] = a;
        while let Some((x, y)) = queue.pop() {
            for g in &self.generators {
                let (gx, gy) = (g.apply(x), g.apply(y));
                let (rx, ry) = (find(&mut parent, gx), find(&mut parent, gy));
                if rx != ry {
                    let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
                    parent[hi as usize] = lo;
                    queue.push((lo, hi));
                }
            }
        }
        let mut classes: HashMap<u32, Vec<u32>> = HashMap::new();
        for x in 0..n as u32 {
            classes.entry(find(&mut parent, x)).or_default().push(x);
        }
        if classes.len() == 1 {
            return None;
        }
        let mut blocks: Vec<Vec<u32>> = classes.into_values().collect();
        for block in blocks.iter_mut() {
            block.sort_unstable();
        }
        blocks.sort_unstable();
        Some(blocks)
    }

    /// True iff the transitive group preserves no nontrivial block system.
    pub fn is_primitive(&self) -> Result<bool> {
        Ok(matches!(self.minimal_block_system()?, BlockSystem::Trivial))
    }

    /// Smallest normal subgroup containing `seeds`, by repeated
    /// conjugation with the group generators.
    pub fn normal_closure(&self, seeds: &[Permutation]) -> Result<PermGroup> {
        let mut closure_gens: Vec<Permutation> = Vec::new();
        let mut seen = HashSet::new();
        for s in seeds {
            if !self.contains(s)? {
                return Err(Error::NotMember);
            }
            if !s.is_identity() && seen.insert(s.clone()) {
                closure_gens.push(s.clone());
            }
        }
        loop {
            let group = PermGroup::from_generators(self.degree, closure_gens.clone())?;
            let mut fresh = Vec::new();
            for n in &closure_gens {
                for g in &self.generators {
                    let c = n.conjugate_by(g);
                    if !group.contains(&c)? && seen.insert(c.clone()) {
                        fresh.push(c);
                    }
                }
            }
            if fresh.is_empty() {
                return Ok(group.with_caps(self.caps));
            }
            closure_gens.extend(fresh);
        }
    }

    /// Derived subgroup: normal closure of the generator commutators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut comms = Vec::new();
        for a in &self.generators {
            for b in &self.generators {
                let c = a.inverse().compose(&b.inverse()).compose(a).compose(b);
                if !c.is_identity() {
                    comms.push(c);
                }
            }
        }
        self.normal_closure(&comms)
            .expect("commutators are members")
    }

    /// Iterates the derived series to triviality or stabilization.
    pub fn is_solvable(&self) -> bool {
        let mut cur = self.clone();
        let mut cur_order = cur.order();
        while !cur_order.is_one() {
            let next = cur.derived_subgroup();
            let next_order = next.order();
            if next_order == cur_order {
                return false;
            }
            cur = next;
            cur_order = next_order;
        }
        true
    }

    /// Permutation action of the group on the left cosets of a normal
    /// subgroup `n`. The kernel is exactly `n`, so the image is a faithful
    /// copy of the quotient; its degree is the index.
    pub fn coset_action(&self, n: &PermGroup) -> Result<PermGroup> {
        if n.degree != self.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                got: n.degree,
            });
        }
        // Normality: conjugating the subgroup generators by the group
        // generators must stay inside the subgroup.
        for g in &self.generators {
            for x in &n.generators {
                if !n.contains(&x.conjugate_by(g))? {
                    return Err(Error::NotNormal);
                }
            }
        }
        let g_order = self.order();
        let n_order = n.order();
        let index = (&g_order / &n_order)
            .to_u64()
            .ok_or(Error::CapExceeded {
                what: "coset action degree",
                value: u128::MAX,
                cap: self.caps.coset_degree as u128,
            })?;
        if index > self.caps.coset_degree {
            return Err(Error::CapExceeded {
                what: "coset action degree",
                value: index as u128,
                cap: self.caps.coset_degree as u128,
            });
        }
        let chain = OrderedChain::build(n.degree, &n.generators);
        let canon = |g: &Permutation| chain.min_in_coset(g);

        let mut reps: Vec<Permutation> = Vec::with_capacity(index as usize);
        let mut index_of: HashMap<Permutation, u32> = HashMap::new();
        let root = canon(&Permutation::identity(self.degree));
        index_of.insert(root.clone(), 0);
        reps.push(root);
        let mut head = 0;
        while head < reps.len() {
            let rep = reps[head].clone();
            head += 1;
            for g in &self.generators {
                let c = canon(&g.compose(&rep));
                if !index_of.contains_key(&c) {
                    index_of.insert(c.clone(), reps.len() as u32);
                    reps.push(c);
                }
            }
        }
        debug_assert_eq!(reps.len() as u64, index);
        let mut images = Vec::new();
        for g in &self.generators {
            let imgs: Vec<u32> = reps
                .iter()
                .map(|rep| index_of[&canon(&g.compose(rep))])
                .collect();
            images.push(Permutation::from_images(imgs)?);
        }
        PermGroup::from_generators(reps.len(), images).map(|q| q.with_caps(self.caps))
    }

    /// All group elements, canonically sorted by image sequence.
    pub fn elements(&self) -> Result<Vec<Permutation>> {
        let order = self.order();
        let cap = BigUint::from(self.caps.element_cap);
        if order > cap {
            return Err(Error::CapExceeded {
                what: "element enumeration",
                value: order.to_u128().unwrap_or(u128::MAX),
                cap: self.caps.element_cap as u128,
            });
        }
        let mut elems = self.chain().all_elements();
        elems.sort_unstable();
        Ok(elems)
    }

    /// Direct product of two groups acting on disjoint point sets: the
    /// left factor keeps its points, the right factor is shifted.
    pub fn disjoint_direct_product(a: &PermGroup, b: &PermGroup) -> PermGroup {
        let (da, db) = (a.degree, b.degree);
        let degree = da + db;
        let mut gens = Vec::new();
        for g in &a.generators {
            let mut images: Vec<u32> = g.images().to_vec();
            images.extend(da as u32..degree as u32);
            gens.push(Permutation::from_images(images).expect("extension is a bijection"));
        }
        for g in &b.generators {
            let mut images: Vec<u32> = (0..da as u32).collect();
            images.extend(g.images().iter().map(|&x| x + da as u32));
            gens.push(Permutation::from_images(images).expect("shift is a bijection"));
        }
        PermGroup::from_generators(degree, gens).expect("degrees agree by construction")
    }

    /// Brute-force closure of the generators under composition; the
    /// independent oracle for `order` in tests. Returns `None` if the
    /// closure exceeds `cap` elements.
    pub fn brute_force_elements(&self, cap: usize) -> Option<Vec<Permutation>> {
        let mut set: HashSet<Permutation> = HashSet::new();
        let id = Permutation::identity(self.degree);
        set.insert(id.clone());
        let mut queue = vec![id];
        while let Some(e) = queue.pop() {
            for g in &self.generators {
                let prod = e.compose(g);
                if set.insert(prod.clone()) {
                    if set.len() > cap {
                        return None;
                    }
                    queue.push(prod);
                }
            }
        }
        let mut elems: Vec<Permutation> = set.into_iter().collect();
        elems.sort_unstable();
        Some(elems)
    }
}
