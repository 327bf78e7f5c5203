//! Index-based group engine for exhaustive campaigns.
//!
//! A `DenseGroup` holds the full element list of a small group in
//! canonical (sorted) order, with a multiplication table when the group
//! is small enough. Subgroups are bitsets over element indices, which
//! makes the subgroup-lattice walk and the composition-factor recursion
//! cheap enough to run over every subgroup of S7 in seconds.
//!
//! Subgroup enumeration is by cyclic extension: seed with all cyclic
//! subgroups, then repeatedly extend each known subgroup H by a zuppo
//! generator z (a cyclic subgroup of prime-power order). Every subgroup
//! is a chain of such extensions. Two prunes keep this tractable:
//! extensions are deduplicated per double coset HzH (⟨H, z'⟩ = ⟨H, z⟩
//! for z' ∈ HzH), and any closure passing n/2 elements must be the whole
//! group by Lagrange.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::perm::{PermGroup, Permutation};
use crate::{numth, Error, Result};

const TABLE_LIMIT: usize = 6000;

/// Bitset over element indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits(Box<[u64]>);

impl Bits {
    fn empty(n: usize) -> Bits {
        Bits(vec![0u64; n.div_ceil(64)].into_boxed_slice())
    }

    #[inline]
    fn test(&self, i: u32) -> bool {
        self.0[(i / 64) as usize] >> (i % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: u32) {
        self.0[(i / 64) as usize] |= 1 << (i % 64);
    }

    fn is_subset_of(&self, other: &Bits) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &word)| {
            (0..64u32)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| w as u32 * 64 + b)
        })
    }
}

/// A subgroup of a `DenseGroup`: membership bitset, order, and a small
/// generating set accumulated along the extension chain.
#[derive(Clone)]
pub struct SubSet {
    pub bits: Bits,
    pub order: u32,
    pub gens: Vec<u32>,
}

impl SubSet {
    pub fn elements(&self) -> Vec<u32> {
        self.bits.iter_ones().collect()
    }

    pub fn contains(&self, other: &SubSet) -> bool {
        other.bits.is_subset_of(&self.bits)
    }
}

/// Element lookup for table-less groups; degrees up to 16 pack the whole
/// image sequence into a u64 key.
enum ElementIndex {
    Packed(HashMap<u64, u32>),
    Generic(HashMap<Permutation, u32>),
}

fn pack_images(p: &Permutation) -> u64 {
    debug_assert!(p.degree() <= 16);
    p.images()
        .iter()
        .fold(0u64, |acc, &img| (acc << 4) | img as u64)
}

impl ElementIndex {
    fn build(perms: &[Permutation]) -> ElementIndex {
        if perms.first().map_or(0, |p| p.degree()) <= 16 {
            ElementIndex::Packed(
                perms
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (pack_images(p), i as u32))
                    .collect(),
            )
        } else {
            ElementIndex::Generic(
                perms
                    .iter()
                    .enumerate()
                    .map(|(i, p)| (p.clone(), i as u32))
                    .collect(),
            )
        }
    }

    fn lookup(&self, p: &Permutation) -> u32 {
        match self {
            ElementIndex::Packed(m) => m[&pack_images(p)],
            ElementIndex::Generic(m) => m[p],
        }
    }
}

/// Multiplication tables, forward (a·b at a·n+b) and reversed (a·b at
/// b·n+a); the reversed copy turns the column walks of coset marking
/// into sequential reads. `rev` may be empty for groups that never run
/// the lattice walk (quotients).
struct MulTables {
    fwd: Vec<u16>,
    rev: Vec<u16>,
}

pub struct DenseGroup {
    pub n: usize,
    degree: usize,
    perms: Option<Vec<Permutation>>,
    index: Option<ElementIndex>,
    table: Option<MulTables>,
    inv: Vec<u32>,
    pub elem_order: Vec<u32>,
    group_gens: Vec<u32>,
}

impl DenseGroup {
    /// Dense form of a permutation group; requires the order to be
    /// within the element-enumeration cap.
    pub fn from_perm_group(group: &PermGroup) -> Result<DenseGroup> {
        let elems = group.elements()?;
        let index = ElementIndex::build(&elems);
        let group_gens = group
            .generators()
            .iter()
            .map(|g| index.lookup(g))
            .collect::<Vec<u32>>();
        let n = elems.len();
        let table = if n <= TABLE_LIMIT {
            let mut fwd = vec![0u16; n * n];
            fwd.par_chunks_mut(n).enumerate().for_each(|(a, row)| {
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = index.lookup(&elems[a].compose(&elems[b])) as u16;
                }
            });
            let mut rev = vec![0u16; n * n];
            rev.par_chunks_mut(n).enumerate().for_each(|(b, row)| {
                for (a, slot) in row.iter_mut().enumerate() {
                    *slot = fwd[a * n + b];
                }
            });
            Some(MulTables { fwd, rev })
        } else {
            None
        };
        let degree = group.degree();
        let mut dense = DenseGroup {
            n,
            degree,
            perms: Some(elems),
            index: Some(index),
            table,
            inv: Vec::new(),
            elem_order: Vec::new(),
            group_gens,
        };
        dense.fill_inverse_and_orders();
        Ok(dense)
    }

    /// Dense group from an explicit multiplication table (quotients).
    fn from_table(n: usize, fwd: Vec<u16>, group_gens: Vec<u32>) -> DenseGroup {
        let rev = Vec::new();
        let mut dense = DenseGroup {
            n,
            degree: 0,
            perms: None,
            index: None,
            table: Some(MulTables { fwd, rev }),
            inv: Vec::new(),
            elem_order: Vec::new(),
            group_gens,
        };
        dense.fill_inverse_and_orders();
        dense
    }

    fn fill_inverse_and_orders(&mut self) {
        let n = self.n;
        let id = self.identity();
        let mut inv = vec![u32::MAX; n];
        let mut ord = vec![0u32; n];
        inv[id as usize] = id;
        ord[id as usize] = 1;
        for a in 0..n as u32 {
            if a == id {
                continue;
            }
            let mut x = a;
            let mut k = 1u32;
            while x != id {
                let next = self.mul(x, a);
                if next == id {
                    inv[a as usize] = x;
                }
                x = next;
                k += 1;
                debug_assert!(k as usize <= n + 1);
            }
            ord[a as usize] = k;
        }
        self.inv = inv;
        self.elem_order = ord;
    }

    /// Identity index: the element list is sorted, and the identity has
    /// the lexicographically smallest image sequence; quotient tables are
    /// built with the identity coset first.
    #[inline]
    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.table {
            Some(t) => t.fwd[a as usize * self.n + b as usize] as u32,
            None => {
                let perms = self.perms.as_ref().expect("table or perms");
                let index = self.index.as_ref().expect("index");
                index.lookup(&perms[a as usize].compose(&perms[b as usize]))
            }
        }
    }

    /// Marks the whole coset H·t; with tables this is one sequential
    /// sweep of the reversed row of t.
    fn mark_coset(&self, bits: &mut Bits, h_elems: &[u32], t: u32) {
        match &self.table {
            Some(tables) if !tables.rev.is_empty() => {
                let row = &tables.rev[t as usize * self.n..(t as usize + 1) * self.n];
                for &e in h_elems {
                    bits.set(row[e as usize] as u32);
                }
            }
            _ => {
                for &e in h_elems {
                    bits.set(self.mul(e, t));
                }
            }
        }
    }

    /// `b·a` through the reversed table (cache-friendly when `a` is
    /// fixed and `b` varies).
    #[inline]
    fn mul_rev(&self, b: u32, a: u32) -> u32 {
        match &self.table {
            Some(t) if !t.rev.is_empty() => t.rev[a as usize * self.n + b as usize] as u32,
            _ => self.mul(b, a),
        }
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    pub fn conjugate(&self, g: u32, x: u32) -> u32 {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn permutation(&self, idx: u32) -> Option<&Permutation> {
        self.perms.as_ref().map(|p| &p[idx as usize])
    }

    /// The whole group as a subgroup value.
    pub fn full_subgroup(&self) -> SubSet {
        let mut bits = Bits::empty(self.n);
        for i in 0..self.n as u32 {
            bits.set(i);
        }
        SubSet {
            bits,
            order: self.n as u32,
            gens: self.group_gens.clone(),
        }
    }

    pub fn trivial_subgroup(&self) -> SubSet {
        let mut bits = Bits::empty(self.n);
        bits.set(self.identity());
        SubSet {
            bits,
            order: 1,
            gens: Vec::new(),
        }
    }

    /// Cyclic subgroup generated by one element.
    pub fn cyclic_subgroup(&self, g: u32) -> SubSet {
        let mut bits = Bits::empty(self.n);
        bits.set(self.identity());
        let mut order = 1;
        let mut x = g;
        while x != self.identity() {
            bits.set(x);
            order += 1;
            x = self.mul(x, g);
        }
        SubSet {
            bits,
            order,
            gens: if g == self.identity() { vec![] } else { vec![g] },
        }
    }

    /// Closure of a generating set inside an ambient subgroup, by plain
    /// element BFS; exits early to the ambient when past half its order.
    pub fn closure_within(&self, ambient: &SubSet, gens: &[u32]) -> SubSet {
        let mut bits = Bits::empty(self.n);
        bits.set(self.identity());
        let mut count = 1u32;
        let mut stack: Vec<u32> = vec![self.identity()];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !bits.test(y) {
                    bits.set(y);
                    count += 1;
                    if count > ambient.order / 2 {
                        return SubSet {
                            bits: ambient.bits.clone(),
                            order: ambient.order,
                            gens: ambient.gens.clone(),
                        };
                    }
                    stack.push(y);
                }
            }
        }
        SubSet {
            bits,
            order: count,
            gens: gens.to_vec(),
        }
    }

    /// ⟨H, z⟩ by breadth-first search over right cosets of H: each new
    /// coset is marked wholesale, so the cost is linear in the result.
    fn extend_subgroup(&self, h: &SubSet, h_elems: &[u32], z: u32) -> SubSet {
        let half = (self.n / 2) as u32;
        let mut bits = h.bits.clone();
        let mut count = h.order;
        let mut gens = h.gens.clone();
        gens.push(z);
        let mut reps: Vec<u32> = vec![self.identity()];
        let mut head = 0;
        while head < reps.len() {
            let r = reps[head];
            head += 1;
            for &s in &gens {
                let t = self.mul(r, s);
                if !bits.test(t) {
                    self.mark_coset(&mut bits, h_elems, t);
                    count += h.order;
                    if count > half {
                        return self.full_subgroup();
                    }
                    reps.push(t);
                }
            }
        }
        SubSet { bits, order: count, gens }
    }

    fn conjugate_subgroup(&self, sub: &SubSet, g: u32) -> SubSet {
        let mut bits = Bits::empty(self.n);
        for x in sub.bits.iter_ones() {
            bits.set(self.conjugate(g, x));
        }
        let gens = sub.gens.iter().map(|&s| self.conjugate(g, s)).collect();
        SubSet {
            bits,
            order: sub.order,
            gens,
        }
    }

    /// Inserts a subgroup together with its whole conjugacy class;
    /// returns the index of the class representative when the class is
    /// new.
    fn insert_class(
        &self,
        sub: SubSet,
        found: &mut HashMap<Bits, usize>,
        subgroups: &mut Vec<SubSet>,
    ) -> Option<usize> {
        if found.contains_key(&sub.bits) {
            return None;
        }
        let rep = subgroups.len();
        found.insert(sub.bits.clone(), rep);
        subgroups.push(sub);
        let mut stack = vec![rep];
        while let Some(i) = stack.pop() {
            for gi in 0..self.group_gens.len() {
                let g = self.group_gens[gi];
                let conj = self.conjugate_subgroup(&subgroups[i], g);
                if !found.contains_key(&conj.bits) {
                    let idx = subgroups.len();
                    found.insert(conj.bits.clone(), idx);
                    subgroups.push(conj);
                    stack.push(idx);
                }
            }
        }
        Some(rep)
    }

    /// All subgroups, optionally capped by order, sorted by (order,
    /// element list).
    ///
    /// Only one representative per conjugacy class runs the zuppo
    /// extension step: conjugate subgroups have conjugate extensions, so
    /// closing each new class under conjugation preserves completeness
    /// at a fraction of the cost.
    pub fn all_subgroups(&self, order_cap: Option<u64>) -> Vec<SubSet> {
        let cap = order_cap.unwrap_or(self.n as u64);
        // Zuppos: cyclic subgroups of prime-power order, each with every
        // element index that generates it.
        let mut zuppo_bits: HashMap<Bits, usize> = HashMap::new();
        let mut zuppos: Vec<(u32, Vec<u32>)> = Vec::new(); // (canonical gen, all gens)
        let mut seen_cyclic: HashMap<Bits, ()> = HashMap::new();
        let mut seeds: Vec<SubSet> = vec![self.trivial_subgroup()];
        seen_cyclic.insert(seeds[0].bits.clone(), ());
        for g in 0..self.n as u32 {
            if g == self.identity() {
                continue;
            }
            let sub = self.cyclic_subgroup(g);
            let ord = self.elem_order[g as usize] as u128;
            if numth::factorize(ord).len() == 1 {
                match zuppo_bits.get(&sub.bits) {
                    Some(&i) => zuppos[i].1.push(g),
                    None => {
                        zuppo_bits.insert(sub.bits.clone(), zuppos.len());
                        zuppos.push((g, vec![g]));
                    }
                }
            }
            if sub.order as u64 <= cap && !seen_cyclic.contains_key(&sub.bits) {
                seen_cyclic.insert(sub.bits.clone(), ());
                seeds.push(sub);
            }
        }
        seeds.sort_by_key(|s| (s.order, s.elements()));

        let mut found: HashMap<Bits, usize> = HashMap::new();
        let mut subgroups: Vec<SubSet> = Vec::new();
        let mut rep_queue: Vec<usize> = Vec::new();
        for s in seeds {
            if let Some(rep) = self.insert_class(s, &mut found, &mut subgroups) {
                rep_queue.push(rep);
            }
        }

        let mut head = 0;
        while head < rep_queue.len() {
            // Extend a layer of class representatives in parallel; merge
            // the candidates deterministically.
            let layer: Vec<usize> = rep_queue[head..].to_vec();
            head = rep_queue.len();
            let results: Vec<Vec<SubSet>> = layer
                .par_iter()
                .map(|&idx| {
                    let h = &subgroups[idx];
                    let h_elems = h.elements();
                    let mut done = h.bits.clone();
                    let mut out = Vec::new();
                    for (zgen, all_gens) in &zuppos {
                        if all_gens.iter().any(|&g| done.test(g)) {
                            continue;
                        }
                        let k = self.extend_subgroup(h, &h_elems, *zgen);
                        if (k.order as u64) <= cap {
                            out.push(k);
                        }
                        // Mark the double coset H·z·H.
                        let mut stack = vec![*zgen];
                        done.set(*zgen);
                        while let Some(x) = stack.pop() {
                            for &g in &h.gens {
                                for y in [self.mul(x, g), self.mul_rev(g, x)] {
                                    if !done.test(y) {
                                        done.set(y);
                                        stack.push(y);
                                    }
                                }
                            }
                        }
                    }
                    out
                })
                .collect();
            for batch in results {
                for k in batch {
                    if let Some(rep) = self.insert_class(k, &mut found, &mut subgroups) {
                        rep_queue.push(rep);
                    }
                }
            }
        }
        subgroups.sort_by_key(|a| (a.order, a.elements()));
        subgroups
    }

    /// Normal closure of a set of elements inside an ambient subgroup.
    ///
    /// Incremental: each new normal generator extends the closure by
    /// multiplying the existing elements once, so the total work is
    /// linear in |closure| · #generators. Conjugating the generator list
    /// by the ambient generators is enough to certify normality.
    pub fn normal_closure_of_set(&self, ambient: &SubSet, seeds: &[u32]) -> SubSet {
        let id = self.identity();
        let mut bits = Bits::empty(self.n);
        bits.set(id);
        let mut elems: Vec<u32> = vec![id];
        let mut gens: Vec<u32> = Vec::new();
        let mut pending: Vec<u32> = seeds.iter().rev().copied().collect();
        while let Some(seed) = pending.pop() {
            if bits.test(seed) {
                continue;
            }
            gens.push(seed);
            // Old elements only need multiplication by the new generator;
            // elements found from here on get the full generator list.
            let fresh_from = elems.len();
            for i in 0..elems.len() {
                let y = self.mul(elems[i], seed);
                if !bits.test(y) {
                    bits.set(y);
                    elems.push(y);
                }
            }
            let mut head = fresh_from.min(elems.len());
            while head < elems.len() {
                let x = elems[head];
                head += 1;
                for &g in &gens {
                    let y = self.mul(x, g);
                    if !bits.test(y) {
                        bits.set(y);
                        elems.push(y);
                    }
                }
            }
            if elems.len() as u32 > ambient.order / 2 {
                return SubSet {
                    bits: ambient.bits.clone(),
                    order: ambient.order,
                    gens: ambient.gens.clone(),
                };
            }
            for &g in &ambient.gens {
                let c = self.conjugate(g, seed);
                if !bits.test(c) {
                    pending.push(c);
                }
            }
        }
        SubSet {
            bits,
            order: elems.len() as u32,
            gens,
        }
    }

    /// Normal closure of one element inside an ambient subgroup.
    pub fn normal_closure_within(&self, ambient: &SubSet, seed: u32) -> SubSet {
        self.normal_closure_of_set(ambient, &[seed])
    }

    /// A proper nontrivial normal subgroup, as the normal closure of the
    /// first prime-order element (ascending) whose closure is proper.
    ///
    /// Conjugate elements have the same normal closure, so after a full
    /// closure the whole conjugacy class is skipped; the result is
    /// identical to the plain ascending scan.
    pub fn find_proper_normal(&self, sub: &SubSet) -> Option<SubSet> {
        if sub.order <= 1 {
            return None;
        }
        let mut tried = Bits::empty(self.n);
        for x in sub.bits.iter_ones() {
            if x == self.identity() || tried.test(x) {
                continue;
            }
            if !numth::is_prime(self.elem_order[x as usize] as u128) {
                continue;
            }
            let closure = self.normal_closure_within(sub, x);
            if closure.order < sub.order {
                return Some(closure);
            }
            // Mark the conjugacy class of x within sub.
            let mut stack = vec![x];
            tried.set(x);
            while let Some(y) = stack.pop() {
                for &g in &sub.gens {
                    let c = self.conjugate(g, y);
                    if !tried.test(c) {
                        tried.set(c);
                        stack.push(c);
                    }
                }
            }
        }
        None
    }

    /// Quotient of `sub` by a normal subgroup, as a dense group on the
    /// cosets (ordered by smallest member, so the identity coset is 0).
    pub fn quotient(&self, sub: &SubSet, normal: &SubSet) -> DenseGroup {
        let n_elems = normal.elements();
        let mut coset_of: HashMap<u32, u32> = HashMap::new();
        let mut reps: Vec<u32> = Vec::new();
        for x in sub.bits.iter_ones() {
            if coset_of.contains_key(&x) {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(x);
            for &h in &n_elems {
                coset_of.insert(self.mul(h, x), id);
            }
        }
        let nq = reps.len();
        let mut table = vec![0u16; nq * nq];
        for (i, &ri) in reps.iter().enumerate() {
            for (j, &rj) in reps.iter().enumerate() {
                table[i * nq + j] = coset_of[&self.mul(ri, rj)] as u16;
            }
        }
        let gens = sub
            .gens
            .iter()
            .map(|g| coset_of[g])
            .filter(|&g| g != 0)
            .collect();
        DenseGroup::from_table(nq, table, gens)
    }

    fn collect_factors(&self, sub: &SubSet, out: &mut Vec<(u64, bool)>) {
        if sub.order == 1 {
            return;
        }
        match self.find_proper_normal(sub) {
            None => {
                out.push((
                    sub.order as u64,
                    numth::is_prime(sub.order as u128),
                ));
            }
            Some(normal) => {
                let quotient = self.quotient(sub, &normal);
                self.collect_factors(&normal, out);
                let full = quotient.full_subgroup();
                quotient.collect_factors(&full, out);
            }
        }
    }

    /// Composition factors of a subgroup: (order, abelian) pairs, sorted.
    pub fn composition_factors(&self, sub: &SubSet) -> Vec<(u64, bool)> {
        let mut out = Vec::new();
        self.collect_factors(sub, &mut out);
        out.sort_unstable();
        out
    }

    /// Product of the odd-order composition factors.
    pub fn a_value(&self, sub: &SubSet) -> u64 {
        self.composition_factors(sub)
            .iter()
            .filter(|(order, _)| order % 2 == 1)
            .map(|(order, _)| order)
            .product()
    }

    /// Solvability via the derived series.
    pub fn is_solvable(&self, sub: &SubSet) -> bool {
        let mut cur = sub.clone();
        loop {
            if cur.order == 1 {
                return true;
            }
            let derived = self.derived_subgroup(&cur);
            if derived.order == cur.order {
                return false;
            }
            cur = derived;
        }
    }

    pub fn derived_subgroup(&self, sub: &SubSet) -> SubSet {
        let mut comms = Vec::new();
        for &a in &sub.gens {
            for &b in &sub.gens {
                let c = self.mul(
                    self.mul(self.mul(self.inv(a), self.inv(b)), a),
                    b,
                );
                if c != self.identity() && !comms.contains(&c) {
                    comms.push(c);
                }
            }
        }
        if comms.is_empty() {
            return self.trivial_subgroup();
        }
        self.normal_closure_of_set(sub, &comms)
    }

    /// Rebuilds a subgroup as a `PermGroup` (permutation-backed groups
    /// only).
    pub fn to_perm_group(&self, sub: &SubSet) -> Result<PermGroup> {
        let perms = self
            .perms
            .as_ref()
            .ok_or_else(|| Error::InvalidParams("quotient groups have no points".into()))?;
        let gens = sub
            .gens
            .iter()
            .map(|&g| perms[g as usize].clone())
            .collect();
        PermGroup::from_generators(self.degree, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_symmetric(n: usize) -> DenseGroup {
        DenseGroup::from_perm_group(&PermGroup::symmetric(n)).unwrap()
    }

    #[test]
    fn s3_has_six_subgroups() {
        let dense = dense_symmetric(3);
        let subs = dense.all_subgroups(None);
        assert_eq!(subs.len(), 6);
        let orders: Vec<u32> = subs.iter().map(|s| s.order).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 3, 6]);
    }

    #[test]
    fn s4_has_thirty_subgroups() {
        let dense = dense_symmetric(4);
        let subs = dense.all_subgroups(None);
        assert_eq!(subs.len(), 30);
    }

    #[test]
    fn c6_has_four_subgroups() {
        let c6 = PermGroup::from_generators(
            6,
            vec![Permutation::from_cycles(6, &[(0..6).collect()]).unwrap()],
        )
        .unwrap();
        let dense = DenseGroup::from_perm_group(&c6).unwrap();
        assert_eq!(dense.all_subgroups(None).len(), 4);
    }

    #[test]
    fn s5_subgroup_count_matches_literature() {
        let dense = dense_symmetric(5);
        assert_eq!(dense.all_subgroups(None).len(), 156);
    }

    #[test]
    fn order_cap_prunes_output() {
        let dense = dense_symmetric(4);
        let subs = dense.all_subgroups(Some(4));
        assert!(subs.iter().all(|s| s.order <= 4));
        // 1 + 9 of order 2 + 4 of order 3 + 7 of order 4 (3 C4 + 4 V4).
        assert_eq!(subs.len(), 21);
    }

    #[test]
    fn dense_composition_matches_structure_module() {
        let group = PermGroup::symmetric(4);
        let dense = DenseGroup::from_perm_group(&group).unwrap();
        for sub in dense.all_subgroups(None) {
            let perm_sub = dense.to_perm_group(&sub).unwrap();
            let expected = crate::structure::a_of_group(&perm_sub).unwrap();
            assert_eq!(dense.a_value(&sub), expected);
        }
    }

    #[test]
    fn dense_solvability_matches_perm_engine() {
        let dense = dense_symmetric(5);
        for sub in dense.all_subgroups(None) {
            let perm_sub = dense.to_perm_group(&sub).unwrap();
            assert_eq!(
                dense.is_solvable(&sub),
                perm_sub.is_solvable(),
                "order {}",
                sub.order
            );
        }
    }

    #[test]
    fn subgroup_count_is_generating_set_invariant() {
        let g1 = PermGroup::symmetric(4);
        let g2 = PermGroup::from_generators(
            4,
            vec![
                Permutation::cycle(4, &[0, 1]).unwrap(),
                Permutation::cycle(4, &[1, 2]).unwrap(),
                Permutation::cycle(4, &[2, 3]).unwrap(),
            ],
        )
        .unwrap();
        let n1 = DenseGroup::from_perm_group(&g1).unwrap().all_subgroups(None).len();
        let n2 = DenseGroup::from_perm_group(&g2).unwrap().all_subgroups(None).len();
        assert_eq!(n1, n2);
    }
}
