//! Matrix groups over small finite fields and their permutation actions.
//!
//! Matrices act on column vectors, `v ↦ M·v`. Vectors are ranked by their
//! little-endian base-q digit strings, which pins every permutation image
//! bit-exactly across runs.

mod field;

pub use field::Field;

use std::collections::HashMap;
use std::sync::Arc;

use crate::perm::{PermGroup, Permutation};
use crate::{Error, Result};

/// A dim × dim matrix over a shared field; entries are field-element
/// indices in row-major order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub dim: usize,
    data: Vec<u16>,
}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.dim {
            writeln!(f, "{:?}", &self.data[r * self.dim..(r + 1) * self.dim])?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn identity(dim: usize) -> Matrix {
        let mut m = Matrix {
            dim,
            data: vec![0; dim * dim],
        };
        for i in 0..dim {
            m.data[i * dim + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[&[u16]]) -> Matrix {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim);
            data.extend_from_slice(r);
        }
        Matrix { dim, data }
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u16 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        self.data[r * self.dim + c] = v;
    }

    pub fn mul(&self, field: &Field, other: &Matrix) -> Matrix {
        let d = self.dim;
        let mut out = Matrix {
            dim: d,
            data: vec![0; d * d],
        };
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u16;
                for l in 0..d {
                    acc = field.add(acc, field.mul(self.get(i, l), other.get(l, j)));
                }
                out.data[i * d + j] = acc;
            }
        }
        out
    }

    pub fn apply(&self, field: &Field, v: &[u16]) -> Vec<u16> {
        let d = self.dim;
        (0..d)
            .map(|i| {
                let mut acc = 0u16;
                for (j, &vj) in v.iter().enumerate() {
                    acc = field.add(acc, field.mul(self.get(i, j), vj));
                }
                acc
            })
            .collect()
    }

    /// Rank by Gaussian elimination; dim means invertible.
    pub fn rank(&self, field: &Field) -> usize {
        let rows: Vec<Vec<u16>> = (0..self.dim)
            .map(|r| self.data[r * self.dim..(r + 1) * self.dim].to_vec())
            .collect();
        rank_of(field, rows)
    }
}

fn rank_of(field: &Field, mut rows: Vec<Vec<u16>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for c in 0..cols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    let sub = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], sub);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Reduced row echelon form with zero rows dropped.
fn rref(field: &Field, mut rows: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for c in 0..cols {
            rows[rank][c] = field.mul(rows[rank][c], inv);
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    let sub = field.mul(factor, rows[rank][c]);
                    rows[r][c] = field.sub(rows[r][c], sub);
                }
            }
        }
        rank += 1;
    }
    rows.truncate(rank);
    rows
}

/// How a matrix group is turned into a permutation group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VectorAction {
    /// Faithful action on the q^d − 1 nonzero vectors.
    NonzeroVectors,
    /// Action on all q^d vectors (zero is a fixed point).
    AllVectors,
    /// Action on projective points; the kernel is the scalar subgroup.
    ProjectivePoints,
    /// Alias of `AllVectors`, the linear part of an affine action.
    AffinePoints,
}

impl std::str::FromStr for VectorAction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "nonzero-vectors" | "nonzero" => Ok(VectorAction::NonzeroVectors),
            "all-vectors" | "all" => Ok(VectorAction::AllVectors),
            "projective-points" | "projective" => Ok(VectorAction::ProjectivePoints),
            "affine-points" | "affine" => Ok(VectorAction::AffinePoints),
            other => Err(Error::Parse(format!("unknown action `{other}`"))),
        }
    }
}

/// A matrix group over a small finite field, given by generators.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub field: Arc<Field>,
    pub dim: usize,
    pub generators: Vec<Matrix>,
}

pub const POINT_CAP: usize = 100_000;
const SUBSPACE_VECTOR_CAP: usize = 6561;

fn vector_rank(q: usize, v: &[u16]) -> usize {
    let mut x = 0usize;
    for &c in v.iter().rev() {
        x = x * q + c as usize;
    }
    x
}

fn vector_unrank(q: usize, dim: usize, mut x: usize) -> Vec<u16> {
    let mut v = vec![0u16; dim];
    for c in v.iter_mut() {
        *c = (x % q) as u16;
        x /= q;
    }
    v
}

impl MatrixGroup {
    pub fn new(field: Arc<Field>, dim: usize, generators: Vec<Matrix>) -> Result<MatrixGroup> {
        if dim == 0 {
            return Err(Error::InvalidParams("dimension must be positive".into()));
        }
        for g in &generators {
            if g.dim != dim {
                return Err(Error::InvalidParams(
                    "generator dimension mismatch".into(),
                ));
            }
            if g.rank(&field) != dim {
                return Err(Error::InvalidParams("generator is singular".into()));
            }
        }
        Ok(MatrixGroup {
            field,
            dim,
            generators,
        })
    }

    fn vector_count(&self) -> usize {
        self.field.q.pow(self.dim as u32)
    }

    /// Permutation image of the group in the chosen action.
    pub fn to_permutation(&self, action: VectorAction) -> Result<PermGroup> {
        let q = self.field.q;
        let total = self.vector_count();
        match action {
            VectorAction::NonzeroVectors => {
                let points = total - 1;
                self.check_points(points)?;
                let perms = self.generator_images(points, 1)?;
                PermGroup::from_generators(points, perms)
            }
            VectorAction::AllVectors | VectorAction::AffinePoints => {
                self.check_points(total)?;
                let perms = self.generator_images(total, 0)?;
                PermGroup::from_generators(total, perms)
            }
            VectorAction::ProjectivePoints => {
                let reps = self.projective_reps();
                self.check_points(reps.len())?;
                let index_of: HashMap<usize, u32> = reps
                    .iter()
                    .enumerate()
                    .map(|(i, &r)| (r, i as u32))
                    .collect();
                let mut perms = Vec::new();
                for g in &self.generators {
                    let mut images = Vec::with_capacity(reps.len());
                    for &r in &reps {
                        let v = vector_unrank(q, self.dim, r);
                        let w = g.apply(&self.field, &v);
                        let w = self.normalize_projective(&w);
                        images.push(index_of[&vector_rank(q, &w)]);
                    }
                    perms.push(Permutation::from_images(images)?);
                }
                PermGroup::from_generators(reps.len(), perms)
            }
        }
    }

    fn check_points(&self, points: usize) -> Result<()> {
        if points > POINT_CAP {
            return Err(Error::CapExceeded {
                what: "permutation action points",
                value: points as u128,
                cap: POINT_CAP as u128,
            });
        }
        Ok(())
    }

    /// Image permutations on the vectors ranked `offset..offset+points`.
    fn generator_images(&self, points: usize, offset: usize) -> Result<Vec<Permutation>> {
        let q = self.field.q;
        let mut perms = Vec::new();
        for g in &self.generators {
            let mut images = Vec::with_capacity(points);
            for idx in 0..points {
                let v = vector_unrank(q, self.dim, idx + offset);
                let w = g.apply(&self.field, &v);
                images.push((vector_rank(q, &w) - offset) as u32);
            }
            perms.push(Permutation::from_images(images)?);
        }
        Ok(perms)
    }

    /// Canonical projective representatives: first nonzero coordinate 1,
    /// sorted by vector rank.
    fn projective_reps(&self) -> Vec<usize> {
        let q = self.field.q;
        let mut reps = Vec::new();
        for r in 1..self.vector_count() {
            let v = vector_unrank(q, self.dim, r);
            if self.normalize_projective(&v) == v {
                reps.push(r);
            }
        }
        reps
    }

    fn normalize_projective(&self, v: &[u16]) -> Vec<u16> {
        let lead = v.iter().find(|&&c| c != 0).copied().unwrap_or(0);
        if lead == 0 {
            return v.to_vec();
        }
        let inv = self.field.inv(lead);
        v.iter().map(|&c| self.field.mul(inv, c)).collect()
    }

    /// All G-invariant subspaces, including 0 and V, each given by a
    /// reduced-echelon basis, sorted by (dimension, basis).
    pub fn invariant_subspaces(&self) -> Result<Vec<Subspace>> {
        Ok(self
            .all_subspaces()?
            .into_iter()
            .filter(|s| self.is_invariant(s))
            .collect())
    }

    fn all_subspaces(&self) -> Result<Vec<Subspace>> {
        let q = self.field.q;
        let total = self.vector_count();
        if total > SUBSPACE_VECTOR_CAP {
            return Err(Error::CapExceeded {
                what: "subspace enumeration vectors",
                value: total as u128,
                cap: SUBSPACE_VECTOR_CAP as u128,
            });
        }
        let zero = Subspace {
            dim: 0,
            basis: Vec::new(),
            members: {
                let mut m = vec![false; total];
                m[0] = true;
                m
            },
        };
        let mut found: HashMap<Vec<bool>, Subspace> = HashMap::new();
        found.insert(zero.members.clone(), zero.clone());
        let mut queue = vec![zero];
        while let Some(s) = queue.pop() {
            if s.dim == self.dim {
                continue;
            }
            for r in 1..total {
                if s.members[r] {
                    continue;
                }
                let mut basis = s.basis.clone();
                basis.push(vector_unrank(q, self.dim, r));
                let ext = self.span(&basis);
                if !found.contains_key(&ext.members) {
                    found.insert(ext.members.clone(), ext.clone());
                    queue.push(ext);
                }
            }
        }
        let mut out: Vec<Subspace> = found.into_values().collect();
        out.sort_by(|a, b| (a.dim, &a.basis).cmp(&(b.dim, &b.basis)));
        Ok(out)
    }

    fn span(&self, basis: &[Vec<u16>]) -> Subspace {
        let q = self.field.q;
        let total = self.vector_count();
        let reduced = rref(&self.field, basis.to_vec());
        let dim = reduced.len();
        let mut members = vec![false; total];
        // Enumerate all q^dim linear combinations.
        let combos = q.pow(dim as u32);
        for c in 0..combos {
            let coeffs = vector_unrank(q, dim, c);
            let mut v = vec![0u16; self.dim];
            for (row, &coef) in reduced.iter().zip(&coeffs) {
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi = self.field.add(*vi, self.field.mul(coef, ri));
                }
            }
            members[vector_rank(q, &v)] = true;
        }
        Subspace {
            dim,
            basis: reduced,
            members,
        }
    }

    fn is_invariant(&self, s: &Subspace) -> bool {
        let q = self.field.q;
        self.generators.iter().all(|g| {
            s.basis.iter().all(|b| {
                let img = g.apply(&self.field, b);
                s.members[vector_rank(q, &img)]
            })
        })
    }

    /// True iff every invariant subspace admits an invariant complement.
    pub fn is_completely_reducible(&self) -> Result<bool> {
        let invariant = self.invariant_subspaces()?;
        Ok(invariant.iter().all(|w| {
            if w.dim == 0 || w.dim == self.dim {
                return true;
            }
            invariant.iter().any(|c| {
                c.dim + w.dim == self.dim && intersect_trivially(w, c)
            })
        }))
    }
}

fn intersect_trivially(a: &Subspace, b: &Subspace) -> bool {
    a.members
        .iter()
        .zip(&b.members)
        .filter(|&(&x, &y)| x && y)
        .count()
        == 1
}

/// A subspace of V = F^d: reduced-echelon basis plus its full member set
/// indexed by vector rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub dim: usize,
    pub basis: Vec<Vec<u16>>,
    members: Vec<bool>,
}

impl Subspace {
    pub fn contains_rank(&self, rank: usize) -> bool {
        self.members[rank]
    }
}

/// Recovers the matrix inducing a given permutation of the nonzero
/// vectors: column j is the image of the j-th standard basis vector.
pub fn matrix_from_nonzero_action(
    field: &Arc<Field>,
    dim: usize,
    perm: &Permutation,
) -> Result<Matrix> {
    let q = field.q;
    let mut m = Matrix::identity(dim);
    for j in 0..dim {
        let basis_rank = q.pow(j as u32);
        let image_rank = perm.apply((basis_rank - 1) as u32) as usize + 1;
        let col = vector_unrank(q, dim, image_rank);
        for (i, &c) in col.iter().enumerate() {
            m.set(i, j, c);
        }
    }
    if m.rank(field) != dim {
        return Err(Error::InvalidParams(
            "permutation does not come from an invertible matrix".into(),
        ));
    }
    Ok(m)
}

// ---------------------------------------------------------------------
// Classical constructions
// ---------------------------------------------------------------------

/// Result of a named construction: a matrix group, or directly a
/// permutation group for the affine, projective and semilinear families.
pub enum Constructed {
    Matrix(MatrixGroup),
    Perm(PermGroup),
}

impl Constructed {
    pub fn into_perm(self, action: VectorAction) -> Result<PermGroup> {
        match self {
            Constructed::Perm(g) => Ok(g),
            Constructed::Matrix(m) => m.to_permutation(action),
        }
    }
}

/// Generators of GL(d, q): a primitive scaling, a basis cycle and a
/// transvection.
pub fn general_linear(dim: usize, p: u64, k: u32) -> Result<MatrixGroup> {
    let field = Arc::new(Field::new(p, k)?);
    let mut gens = Vec::new();
    let nu = field.primitive_element();
    if nu != 1 {
        let mut scale = Matrix::identity(dim);
        scale.set(0, 0, nu);
        gens.push(scale);
    }
    if dim >= 2 {
        gens.extend(transvection_generators(&field, dim));
        gens.push(cycle_matrix(&field, dim, false));
    }
    MatrixGroup::new(field, dim, gens)
}

/// Generators of SL(d, q): adjacent transvections over an F_p-basis of
/// the field (guaranteed generating set).
pub fn special_linear(dim: usize, p: u64, k: u32) -> Result<MatrixGroup> {
    if dim < 2 {
        return Err(Error::InvalidParams("SL needs dimension ≥ 2".into()));
    }
    let field = Arc::new(Field::new(p, k)?);
    let gens = transvection_generators(&field, dim);
    MatrixGroup::new(field, dim, gens)
}

fn transvection_generators(field: &Arc<Field>, dim: usize) -> Vec<Matrix> {
    // E_{i,i+1}(ν^j) and E_{i+1,i}(ν^j) for an F_p-basis {ν^j}.
    let mut lambdas = vec![1u16];
    let nu = field.primitive_element();
    let mut x = 1u16;
    for _ in 1..field.k {
        x = field.mul(x, nu);
        lambdas.push(x);
    }
    let mut gens = Vec::new();
    for i in 0..dim - 1 {
        for &lam in &lambdas {
            let mut a = Matrix::identity(dim);
            a.set(i, i + 1, lam);
            gens.push(a);
            let mut b = Matrix::identity(dim);
            b.set(i + 1, i, lam);
            gens.push(b);
        }
    }
    gens
}

fn cycle_matrix(field: &Arc<Field>, dim: usize, det_one: bool) -> Matrix {
    let mut m = Matrix {
        dim,
        data: vec![0; dim * dim],
    };
    for i in 0..dim - 1 {
        m.set(i + 1, i, 1);
    }
    let top = if det_one && dim.is_multiple_of(2) {
        field.neg(1)
    } else {
        1
    };
    m.set(0, dim - 1, top);
    m
}

/// Affine group AGL(d, q) acting on the q^d vectors: translations by the
/// standard basis plus the linear generators.
pub fn affine_general_linear(dim: usize, p: u64, k: u32) -> Result<PermGroup> {
    let gl = general_linear(dim, p, k)?;
    let q = gl.field.q;
    let total = q.pow(dim as u32);
    if total > POINT_CAP {
        return Err(Error::CapExceeded {
            what: "affine points",
            value: total as u128,
            cap: POINT_CAP as u128,
        });
    }
    let mut gens = Vec::new();
    let linear = gl.to_permutation(VectorAction::AllVectors)?;
    gens.extend(linear.generators().iter().cloned());
    for j in 0..dim {
        let mut images = Vec::with_capacity(total);
        for r in 0..total {
            let mut v = vector_unrank(q, dim, r);
            v[j] = gl.field.add(v[j], 1);
            images.push(vector_rank(q, &v) as u32);
        }
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::from_generators(total, gens)
}

/// Frobenius permutation on all vectors (coordinatewise x ↦ x^p).
fn frobenius_on_vectors(field: &Field, dim: usize) -> Result<Permutation> {
    let q = field.q;
    let total = q.pow(dim as u32);
    let mut images = Vec::with_capacity(total);
    for r in 0..total {
        let v = vector_unrank(q, dim, r);
        let w: Vec<u16> = v.iter().map(|&c| field.frobenius(c)).collect();
        images.push(vector_rank(q, &w) as u32);
    }
    Permutation::from_images(images)
}

/// Frobenius permutation on the nonzero vectors.
pub fn frobenius_on_nonzero_vectors(field: &Field, dim: usize) -> Result<Permutation> {
    let q = field.q;
    let total = q.pow(dim as u32);
    let mut images = Vec::with_capacity(total - 1);
    for r in 1..total {
        let v = vector_unrank(q, dim, r);
        let w: Vec<u16> = v.iter().map(|&c| field.frobenius(c)).collect();
        images.push(vector_rank(q, &w) as u32 - 1);
    }
    Permutation::from_images(images)
}

/// AΓL(1, q): the affine group extended by the Frobenius automorphism.
pub fn affine_semilinear(p: u64, k: u32) -> Result<PermGroup> {
    let agl = affine_general_linear(1, p, k)?;
    let field = Field::new(p, k)?;
    let frob = frobenius_on_vectors(&field, 1)?;
    let mut gens: Vec<Permutation> = agl.generators().to_vec();
    gens.push(frob);
    PermGroup::from_generators(agl.degree(), gens)
}

fn frobenius_on_projective(group: &MatrixGroup) -> Result<Permutation> {
    let q = group.field.q;
    let reps = group.projective_reps();
    let index_of: HashMap<usize, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i as u32))
        .collect();
    let mut images = Vec::with_capacity(reps.len());
    for &r in &reps {
        let v = vector_unrank(q, group.dim, r);
        let w: Vec<u16> = v.iter().map(|&c| group.field.frobenius(c)).collect();
        let w = group.normalize_projective(&w);
        images.push(index_of[&vector_rank(q, &w)]);
    }
    Permutation::from_images(images)
}

/// PΓL(2, q): PGL(2, q) on the projective line extended by Frobenius.
pub fn projective_semilinear(p: u64, k: u32) -> Result<PermGroup> {
    let gl = general_linear(2, p, k)?;
    let pgl = gl.to_permutation(VectorAction::ProjectivePoints)?;
    let frob = frobenius_on_projective(&gl)?;
    let mut gens: Vec<Permutation> = pgl.generators().to_vec();
    gens.push(frob);
    PermGroup::from_generators(pgl.degree(), gens)
}

/// PΣL(2, q): PSL(2, q) extended by Frobenius. For q = 9 this is the
/// degree-10 copy of S6.
pub fn projective_sigma_linear(p: u64, k: u32) -> Result<PermGroup> {
    let sl = special_linear(2, p, k)?;
    let psl = sl.to_permutation(VectorAction::ProjectivePoints)?;
    let frob = frobenius_on_projective(&sl)?;
    let mut gens: Vec<Permutation> = psl.generators().to_vec();
    gens.push(frob);
    PermGroup::from_generators(psl.degree(), gens)
}

/// M10 on 10 points: PSL(2, 9) extended by the product of Frobenius with
/// a non-square scaling, x ↦ ν·x³.
pub fn mathieu_10() -> Result<PermGroup> {
    let sl = special_linear(2, 3, 2)?;
    let psl = sl.to_permutation(VectorAction::ProjectivePoints)?;
    let field = &sl.field;
    let q = field.q;
    let nu = field.primitive_element();
    let reps = sl.projective_reps();
    let index_of: HashMap<usize, u32> = reps
        .iter()
        .enumerate()
        .map(|(i, &r)| (r, i as u32))
        .collect();
    let mut images = Vec::with_capacity(reps.len());
    for &r in &reps {
        let v = vector_unrank(q, 2, r);
        let w = vec![
            field.mul(nu, field.frobenius(v[0])),
            field.frobenius(v[1]),
        ];
        let w = sl.normalize_projective(&w);
        images.push(index_of[&vector_rank(q, &w)]);
    }
    let sigma = Permutation::from_images(images)?;
    let mut gens: Vec<Permutation> = psl.generators().to_vec();
    gens.push(sigma);
    PermGroup::from_generators(psl.degree(), gens)
}

/// Degree-10 action of S6 on the partitions of six points into two
/// triples; each partition is labelled by the triple containing 0.
pub fn s6_on_partitions() -> Result<PermGroup> {
    let mut triples: Vec<[u32; 3]> = Vec::new();
    for a in 1..6u32 {
        for b in (a + 1)..6 {
            triples.push([0, a, b]);
        }
    }
    let canon = |mut t: [u32; 3]| -> [u32; 3] {
        t.sort_unstable();
        if t[0] == 0 {
            t
        } else {
            // take the complement, which contains 0
            let mut c = [0u32; 3];
            let mut k = 0;
            for x in 0..6u32 {
                if !t.contains(&x) {
                    c[k] = x;
                    k += 1;
                }
            }
            c
        }
    };
    let index_of: HashMap<[u32; 3], u32> = triples
        .iter()
        .enumerate()
        .map(|(i, &t)| (t, i as u32))
        .collect();
    let s6 = PermGroup::symmetric(6);
    let mut gens = Vec::new();
    for g in s6.generators() {
        let mut images = Vec::with_capacity(10);
        for t in &triples {
            let mapped = canon([g.apply(t[0]), g.apply(t[1]), g.apply(t[2])]);
            images.push(index_of[&mapped]);
        }
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::from_generators(10, gens)
}

/// Named constructions; `params` as in the CLI (`--params 2,7` etc.).
pub fn classical_construction(name: &str, params: &[u64]) -> Result<Constructed> {
    let dim_q = |params: &[u64]| -> Result<(usize, u64, u32)> {
        if params.len() != 2 {
            return Err(Error::InvalidParams(
                "expected two parameters: dimension,field-size".into(),
            ));
        }
        let (d, q) = (params[0] as usize, params[1]);
        let (p, k) = split_prime_power(q)?;
        Ok((d, p, k))
    };
    match name {
        "GL" => {
            let (d, p, k) = dim_q(params)?;
            Ok(Constructed::Matrix(general_linear(d, p, k)?))
        }
        "SL" => {
            let (d, p, k) = dim_q(params)?;
            Ok(Constructed::Matrix(special_linear(d, p, k)?))
        }
        "PGL" => {
            let (d, p, k) = dim_q(params)?;
            let g = general_linear(d, p, k)?;
            Ok(Constructed::Perm(
                g.to_permutation(VectorAction::ProjectivePoints)?,
            ))
        }
        "PSL" => {
            let (d, p, k) = dim_q(params)?;
            let g = special_linear(d, p, k)?;
            Ok(Constructed::Perm(
                g.to_permutation(VectorAction::ProjectivePoints)?,
            ))
        }
        "AGL" => {
            let (d, p, k) = dim_q(params)?;
            Ok(Constructed::Perm(affine_general_linear(d, p, k)?))
        }
        "AGammaL" => {
            let (d, p, k) = dim_q(params)?;
            if d != 1 {
                return Err(Error::InvalidParams("AGammaL supports dimension 1".into()));
            }
            Ok(Constructed::Perm(affine_semilinear(p, k)?))
        }
        "PGammaL" => {
            let (d, p, k) = dim_q(params)?;
            if d != 2 {
                return Err(Error::InvalidParams("PGammaL supports dimension 2".into()));
            }
            Ok(Constructed::Perm(projective_semilinear(p, k)?))
        }
        "PSigmaL" => {
            let (d, p, k) = dim_q(params)?;
            if d != 2 {
                return Err(Error::InvalidParams("PSigmaL supports dimension 2".into()));
            }
            Ok(Constructed::Perm(projective_sigma_linear(p, k)?))
        }
        "M10" => Ok(Constructed::Perm(mathieu_10()?)),
        "S6deg10" => Ok(Constructed::Perm(s6_on_partitions()?)),
        other => Err(Error::InvalidParams(format!(
            "unknown construction `{other}`"
        ))),
    }
}

/// Splits a prime power q into (p, k).
pub fn split_prime_power(q: u64) -> Result<(u64, u32)> {
    if q < 2 {
        return Err(Error::InvalidParams(format!("{q} is not a prime power")));
    }
    let factors = crate::numth::factorize(q as u128);
    if factors.len() != 1 {
        return Err(Error::InvalidParams(format!("{q} is not a prime power")));
    }
    Ok((factors[0].0 as u64, factors[0].1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure;

    fn scalar_group(field: Arc<Field>, dim: usize, scalar: u16) -> MatrixGroup {
        let mut m = Matrix::identity(dim);
        for i in 0..dim {
            m.set(i, i, scalar);
        }
        MatrixGroup::new(field, dim, vec![m]).unwrap()
    }

    #[test]
    fn gl22_is_s3_on_nonzero_vectors() {
        let g = general_linear(2, 2, 1).unwrap();
        let perm = g.to_permutation(VectorAction::NonzeroVectors).unwrap();
        assert_eq!(perm.degree(), 3);
        assert_eq!(perm.order_u64(), Some(6));
    }

    #[test]
    fn gl23_order_48() {
        let g = general_linear(2, 3, 1).unwrap();
        let perm = g.to_permutation(VectorAction::NonzeroVectors).unwrap();
        assert_eq!(perm.degree(), 8);
        assert_eq!(perm.order_u64(), Some(48));
    }

    #[test]
    fn general_linear_orders_match_formula() {
        for (d, q) in [(2usize, 2u64), (2, 3), (2, 4), (3, 2), (2, 5), (3, 3), (4, 2)] {
            let (p, k) = split_prime_power(q).unwrap();
            let g = general_linear(d, p, k).unwrap();
            let perm = g.to_permutation(VectorAction::NonzeroVectors).unwrap();
            let mut expected: u64 = 1;
            for i in 0..d {
                expected *= q.pow(d as u32) - q.pow(i as u32);
            }
            assert_eq!(perm.order_u64(), Some(expected), "GL({d},{q})");
        }
    }

    #[test]
    fn sl24_on_projective_line_is_a5() {
        let g = special_linear(2, 2, 2).unwrap();
        let perm = g.to_permutation(VectorAction::ProjectivePoints).unwrap();
        assert_eq!(perm.degree(), 5);
        assert_eq!(perm.order_u64(), Some(60));
        // Independent route: brute-force closure of the projective images.
        let brute = perm.brute_force_elements(100).unwrap();
        assert_eq!(brute.len(), 60);
    }

    #[test]
    fn psl_orders() {
        for (q, degree, order) in [(5u64, 6usize, 60u64), (7, 8, 168), (9, 10, 360)] {
            let (p, k) = split_prime_power(q).unwrap();
            let g = special_linear(2, p, k).unwrap();
            let perm = g.to_permutation(VectorAction::ProjectivePoints).unwrap();
            assert_eq!(perm.degree(), degree, "PSL(2,{q}) degree");
            assert_eq!(perm.order_u64(), Some(order), "PSL(2,{q}) order");
        }
        // PSL(3,2) on 7 points, PSL(3,3) on 13, PSL(4,2) on 15.
        for (d, q, degree, order) in [
            (3usize, 2u64, 7usize, 168u64),
            (3, 3, 13, 5616),
            (4, 2, 15, 20160),
        ] {
            let (p, k) = split_prime_power(q).unwrap();
            let g = special_linear(d, p, k).unwrap();
            let perm = g.to_permutation(VectorAction::ProjectivePoints).unwrap();
            assert_eq!(perm.degree(), degree);
            assert_eq!(perm.order_u64(), Some(order));
        }
    }

    #[test]
    fn affine_groups() {
        let agl15 = affine_general_linear(1, 5, 1).unwrap();
        assert_eq!(agl15.degree(), 5);
        assert_eq!(agl15.order_u64(), Some(20));

        let agl23 = affine_general_linear(2, 3, 1).unwrap();
        assert_eq!(agl23.order_u64(), Some(432));

        let agamma18 = affine_semilinear(2, 3).unwrap();
        assert_eq!(agamma18.degree(), 8);
        assert_eq!(agamma18.order_u64(), Some(168));
    }

    #[test]
    fn semilinear_projective_groups() {
        let pgammal28 = projective_semilinear(2, 3).unwrap();
        assert_eq!(pgammal28.degree(), 9);
        assert_eq!(pgammal28.order_u64(), Some(1512));

        let pgammal29 = projective_semilinear(3, 2).unwrap();
        assert_eq!(pgammal29.degree(), 10);
        assert_eq!(pgammal29.order_u64(), Some(1440));
        assert_eq!(structure::odd_part(1440), 45);
    }

    #[test]
    fn m10_certification() {
        let m10 = mathieu_10().unwrap();
        assert_eq!(m10.degree(), 10);
        assert_eq!(m10.order_u64(), Some(720));
        assert!(m10.is_transitive());
        let orders: std::collections::HashSet<u64> = m10
            .elements()
            .unwrap()
            .iter()
            .map(|e| e.element_order())
            .collect();
        // M10 has elements of order 8 but none of order 6 or 10, which
        // separates it from PGL(2,9) and the degree-10 S6.
        assert!(orders.contains(&8));
        assert!(!orders.contains(&10));
        assert!(!orders.contains(&6));
    }

    #[test]
    fn s6_partition_action() {
        let g = s6_on_partitions().unwrap();
        assert_eq!(g.degree(), 10);
        assert_eq!(g.order_u64(), Some(720));
        assert!(g.is_transitive());
        let orders: std::collections::HashSet<u64> = g
            .elements()
            .unwrap()
            .iter()
            .map(|e| e.element_order())
            .collect();
        assert!(orders.contains(&6));
        assert!(!orders.contains(&8));
    }

    #[test]
    fn scalar_group_fixes_all_subspaces() {
        let field = Arc::new(Field::new(3, 1).unwrap());
        let g = scalar_group(field, 2, 2);
        let subs = g.invariant_subspaces().unwrap();
        // 0, four lines, V.
        assert_eq!(subs.len(), 6);
        assert!(g.is_completely_reducible().unwrap());
    }

    #[test]
    fn unitriangular_group_is_not_completely_reducible() {
        let field = Arc::new(Field::new(3, 1).unwrap());
        let mut m = Matrix::identity(2);
        m.set(0, 1, 1);
        let g = MatrixGroup::new(field, 2, vec![m]).unwrap();
        let subs = g.invariant_subspaces().unwrap();
        // Exactly 0, span(e1), V under the column-vector action.
        assert_eq!(subs.len(), 3);
        assert_eq!(subs[1].dim, 1);
        assert_eq!(subs[1].basis, vec![vec![1, 0]]);
        assert!(!g.is_completely_reducible().unwrap());
    }

    #[test]
    fn full_gl_has_only_trivial_invariant_subspaces() {
        let g = general_linear(2, 3, 1).unwrap();
        let subs = g.invariant_subspaces().unwrap();
        assert_eq!(subs.len(), 2);
    }

    #[test]
    fn diagonal_group_is_completely_reducible() {
        let field = Arc::new(Field::new(3, 1).unwrap());
        let mut m = Matrix::identity(2);
        m.set(0, 0, 2);
        let g = MatrixGroup::new(field, 2, vec![m]).unwrap();
        assert!(g.is_completely_reducible().unwrap());
    }

    #[test]
    fn invariant_subspaces_are_stable_under_generators() {
        let g = special_linear(2, 3, 1).unwrap();
        for s in g.invariant_subspaces().unwrap() {
            for gen in &g.generators {
                for b in &s.basis {
                    let img = gen.apply(&g.field, b);
                    assert!(s.contains_rank(vector_rank(g.field.q, &img)));
                }
            }
        }
    }

    #[test]
    fn matrix_roundtrip_through_nonzero_action() {
        let g = general_linear(3, 2, 1).unwrap();
        let perm = g.to_permutation(VectorAction::NonzeroVectors).unwrap();
        for (gen_matrix, gen_perm) in g.generators.iter().zip(perm.generators()) {
            let back = matrix_from_nonzero_action(&g.field, 3, gen_perm).unwrap();
            assert_eq!(&back, gen_matrix);
        }
    }

    #[test]
    fn to_permutation_order_matches_matrix_closure() {
        // Order preservation for a faithful action.
        let g = special_linear(2, 3, 1).unwrap();
        let perm = g.to_permutation(VectorAction::NonzeroVectors).unwrap();
        let mut set = std::collections::HashSet::new();
        let mut queue = vec![Matrix::identity(2)];
        set.insert(Matrix::identity(2));
        while let Some(m) = queue.pop() {
            for gen in &g.generators {
                let prod = m.mul(&g.field, gen);
                if set.insert(prod.clone()) {
                    queue.push(prod);
                }
            }
        }
        assert_eq!(perm.order_u64(), Some(set.len() as u64));
    }

    #[test]
    fn prime_power_splitting() {
        assert_eq!(split_prime_power(8).unwrap(), (2, 3));
        assert_eq!(split_prime_power(7).unwrap(), (7, 1));
        assert!(split_prime_power(12).is_err());
    }
}
