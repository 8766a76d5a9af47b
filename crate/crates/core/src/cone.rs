//! Rational polyhedral cones in double description.
//!
//! A [`Cone`] stores both its generators (extreme rays plus a lineality
//! basis) and its inequalities, converted eagerly at construction by the
//! incremental double description method with the algebraic adjacency test.
//!
//! Canonical form:
//! - `lineality` is the RREF basis of the lineality space, made primitive;
//! - `rays` are the extreme rays projected onto the orthogonal complement of
//!   the lineality space, primitive and sorted;
//! - `inequalities` are the facet normals projected into the linear span of
//!   the cone, together with `±b` for the RREF basis `b` of the orthogonal
//!   complement of the span, all primitive and sorted.
//!
//! With this normalization two cones are equal as point sets iff they are
//! equal as values.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{canonical_basis, orthogonal_basis, project_out, rank, RatMat, RatVec};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cone {
    ambient: usize,
    rays: Vec<RatVec>,
    inequalities: Vec<RatVec>,
    lineality: Vec<RatVec>,
    dim: usize,
    facets: Vec<RatVec>,
}

/// Output of one double description pass on `{x : <a, x> >= 0}`.
struct DdOutput {
    lineality: Vec<RatVec>,
    rays: Vec<RatVec>,
}

#[derive(Clone)]
struct DdRay {
    v: RatVec,
    tight: BitSet,
}

#[derive(Clone, Default, PartialEq, Eq)]
struct BitSet(Vec<u64>);

impl BitSet {
    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }

    fn contains(&self, i: usize) -> bool {
        self.0.get(i / 64).is_some_and(|w| w & (1 << (i % 64)) != 0)
    }

    fn intersection(&self, other: &BitSet) -> BitSet {
        BitSet(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn full(k: usize) -> BitSet {
        let mut s = BitSet::default();
        for i in 0..k {
            s.insert(i);
        }
        s
    }
}

fn double_description(constraints: &[RatVec], n: usize) -> DdOutput {
    let mut lineality: Vec<RatVec> = (0..n).map(|i| RatVec::unit(n, i)).collect();
    let mut rays: Vec<DdRay> = Vec::new();
    let mut processed: Vec<&RatVec> = Vec::new();

    for a in constraints.iter().filter(|a| !a.is_zero()) {
        let idx = processed.len();
        if let Some(pos) = lineality.iter().position(|l| !a.dot(l).is_zero()) {
            // The new halfspace cuts the lineality space: one lineality
            // direction becomes a ray and everything else is projected into
            // the kernel of `a`.
            let mut l = lineality.remove(pos);
            let mut al = a.dot(&l);
            if al.is_negative() {
                l = -l;
                al = -al;
            }
            for other in lineality.iter_mut() {
                let f = a.dot(other) / &al;
                *other = other.add_scaled(&-f, &l);
            }
            for r in rays.iter_mut() {
                let f = a.dot(&r.v) / &al;
                r.v = r.v.add_scaled(&-f, &l).primitive();
                r.tight.insert(idx);
            }
            rays.push(DdRay {
                v: l.primitive(),
                tight: BitSet::full(idx),
            });
        } else {
            let values: Vec<_> = rays.iter().map(|r| a.dot(&r.v)).collect();
            let d = n - lineality.len();
            let mut next: Vec<DdRay> = Vec::with_capacity(rays.len());
            for (r, val) in rays.iter().zip(&values) {
                if val.is_positive() {
                    next.push(r.clone());
                } else if val.is_zero() {
                    let mut r = r.clone();
                    r.tight.insert(idx);
                    next.push(r);
                }
            }
            for (p, vp) in rays.iter().zip(&values).filter(|(_, v)| v.is_positive()) {
                for (q, vq) in rays.iter().zip(&values).filter(|(_, v)| v.is_negative()) {
                    let common = p.tight.intersection(&q.tight);
                    if d < 2 || common.count() < d - 2 {
                        continue;
                    }
                    let rows: Vec<RatVec> = (0..idx)
                        .filter(|&i| common.contains(i))
                        .map(|i| processed[i].clone())
                        .collect();
                    if rank(&rows, n) != d - 2 {
                        continue;
                    }
                    let v = q.v.scale(vp).add_scaled(&-vq.clone(), &p.v).primitive();
                    let mut tight = common;
                    tight.insert(idx);
                    next.push(DdRay { v, tight });
                }
            }
            rays = next;
        }
        processed.push(a);
    }

    DdOutput {
        lineality,
        rays: rays.into_iter().map(|r| r.v).collect(),
    }
}

fn check_lengths(vs: &[RatVec], n: usize) -> Result<()> {
    match vs.iter().find(|v| v.len() != n) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: n,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

fn with_negatives(vs: &[RatVec]) -> impl Iterator<Item = RatVec> + '_ {
    vs.iter().flat_map(|v| [v.clone(), -v])
}

fn canonical_directions(vs: Vec<RatVec>, complement: &[RatVec]) -> Vec<RatVec> {
    let orth = orthogonal_basis(complement);
    let set: BTreeSet<RatVec> = vs
        .iter()
        .map(|v| project_out(v, &orth).primitive())
        .filter(|v| !v.is_zero())
        .collect();
    set.into_iter().collect()
}

impl Cone {
    /// Canonicalizes a cone from both of its descriptions: `primal` are the
    /// generators, `polar` the generators of the dual cone.
    fn assemble(n: usize, primal: DdOutput, polar: DdOutput) -> Cone {
        let lineality = canonical_basis(&primal.lineality, n);
        let rays = canonical_directions(primal.rays, &lineality);
        let equations = canonical_basis(&polar.lineality, n);
        let facets = canonical_directions(polar.rays, &equations);
        let inequalities: BTreeSet<RatVec> = facets
            .iter()
            .cloned()
            .chain(with_negatives(&equations))
            .collect();
        Cone {
            ambient: n,
            dim: n - equations.len(),
            rays,
            inequalities: inequalities.into_iter().collect(),
            lineality,
            facets,
        }
    }

    /// The cone of nonnegative combinations of `gens`.
    pub fn from_generators(gens: &[RatVec], dim: usize) -> Result<Cone> {
        check_lengths(gens, dim)?;
        let polar = double_description(gens, dim);
        let ineqs: Vec<RatVec> = polar
            .rays
            .iter()
            .cloned()
            .chain(with_negatives(&polar.lineality))
            .collect();
        let primal = double_description(&ineqs, dim);
        Ok(Self::assemble(dim, primal, polar))
    }

    /// The cone `{v : <a, v> >= 0 for all a in ineqs}`.
    pub fn from_inequalities(ineqs: &[RatVec], dim: usize) -> Result<Cone> {
        check_lengths(ineqs, dim)?;
        let primal = double_description(ineqs, dim);
        let gens: Vec<RatVec> = primal
            .rays
            .iter()
            .cloned()
            .chain(with_negatives(&primal.lineality))
            .collect();
        let polar = double_description(&gens, dim);
        Ok(Self::assemble(dim, primal, polar))
    }

    pub fn zero(dim: usize) -> Cone {
        Self::from_generators(&[], dim).expect("empty generator set")
    }

    pub fn whole_space(dim: usize) -> Cone {
        Self::from_inequalities(&[], dim).expect("empty inequality set")
    }

    /// Shorthand for integer generator literals.
    pub fn from_int_generators(gens: &[&[i64]], dim: usize) -> Result<Cone> {
        let gens: Vec<RatVec> = gens.iter().map(|g| RatVec::from_ints(g)).collect();
        Self::from_generators(&gens, dim)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[RatVec] {
        &self.rays
    }

    pub fn inequalities(&self) -> &[RatVec] {
        &self.inequalities
    }

    pub fn lineality_basis(&self) -> &[RatVec] {
        &self.lineality
    }

    /// Facet-defining functionals: the inequalities that are not
    /// identically zero on the cone.
    pub fn facets(&self) -> &[RatVec] {
        &self.facets
    }

    pub fn is_strictly_convex(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Rays followed by `±b` for each lineality basis vector; these
    /// generate the cone.
    pub fn generators(&self) -> Vec<RatVec> {
        self.rays
            .iter()
            .cloned()
            .chain(with_negatives(&self.lineality))
            .collect()
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if n == self.ambient {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: n,
            })
        }
    }

    pub fn contains(&self, v: &RatVec) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &RatVec) -> bool {
        self.inequalities.iter().all(|a| !a.dot(v).is_negative())
    }

    pub fn in_relative_interior(&self, v: &RatVec) -> Result<bool> {
        self.check_dim(v.len())?;
        Ok(self.in_relative_interior_unchecked(v))
    }

    pub(crate) fn in_relative_interior_unchecked(&self, v: &RatVec) -> bool {
        self.contains_unchecked(v) && self.facets.iter().all(|a| a.dot(v).is_positive())
    }

    /// `self ⊆ other`, decided on generators against inequalities.
    pub fn is_subset_of(&self, other: &Cone) -> Result<bool> {
        other.check_dim(self.ambient)?;
        Ok(self
            .generators()
            .iter()
            .all(|g| other.contains_unchecked(g)))
    }

    /// All faces, each canonical, sorted by dimension and then canonically.
    /// The minimal face is the lineality space; the last face is `self`.
    pub fn faces(&self) -> Vec<Cone> {
        let full: Vec<usize> = (0..self.rays.len()).collect();
        let mut seen: HashSet<Vec<usize>> = HashSet::from([full.clone()]);
        let mut queue = VecDeque::from([full]);
        while let Some(set) = queue.pop_front() {
            for a in &self.facets {
                let sub: Vec<usize> = set
                    .iter()
                    .copied()
                    .filter(|&i| a.dot(&self.rays[i]).is_zero())
                    .collect();
                if sub.len() < set.len() && seen.insert(sub.clone()) {
                    queue.push_back(sub);
                }
            }
        }
        let mut out: Vec<Cone> = seen
            .into_iter()
            .map(|set| {
                let gens: Vec<RatVec> = set
                    .iter()
                    .map(|&i| self.rays[i].clone())
                    .chain(with_negatives(&self.lineality))
                    .collect();
                Cone::from_generators(&gens, self.ambient).expect("face generators")
            })
            .collect();
        out.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.cmp(b)));
        out
    }

    pub fn is_face_of(&self, other: &Cone) -> Result<bool> {
        other.check_dim(self.ambient)?;
        if !self.is_subset_of(other)? {
            return Ok(false);
        }
        Ok(other.faces().contains(self))
    }

    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        self.check_dim(other.ambient)?;
        let ineqs: Vec<RatVec> = self
            .inequalities
            .iter()
            .chain(&other.inequalities)
            .cloned()
            .collect();
        Cone::from_inequalities(&ineqs, self.ambient)
    }

    /// Image under the linear map `m` (with `ambient_dim` columns).
    pub fn image(&self, m: &RatMat) -> Result<Cone> {
        if m.ncols() != self.ambient {
            return Err(Error::ShapeMismatch(format!(
                "matrix has {} columns, cone lives in dimension {}",
                m.ncols(),
                self.ambient
            )));
        }
        let gens: Vec<RatVec> = self.generators().iter().map(|g| m.apply(g)).collect();
        Cone::from_generators(&gens, m.nrows())
    }

    /// Sum of the canonical rays; lies in the relative interior.
    pub fn interior_point(&self) -> RatVec {
        self.rays
            .iter()
            .fold(RatVec::zeros(self.ambient), |acc, r| &acc + r)
    }
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "{{0}}");
        }
        write!(f, "cone<")?;
        for (i, r) in self.rays.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        if !self.lineality.is_empty() {
            write!(f, " | lin ")?;
            for (i, b) in self.lineality.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{b}")?;
            }
        }
        write!(f, ">")
    }
}
