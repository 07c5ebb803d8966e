//! Rational polyhedral cones in canonical double description.
//!
//! A [`Cone`] always carries both descriptions:
//!
//! * generators: primitive extremal rays (orthogonal to the lineality space)
//!   plus a saturated Hermite basis of the lineality space;
//! * inequalities: primitive facet normals lying in the linear span of the
//!   cone, plus a saturated Hermite basis of the equations cutting out that
//!   span.
//!
//! Rays and normals are sorted, so two cones describing the same point set
//! compare equal field by field. This is what the rest of the crate relies
//! on for hashing and deduplication.

mod dd;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{self, dot, is_zero, Vector};
use crate::error::{Error, Result};
use crate::lattice::{self, Sublattice};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "ConeRepr", into = "ConeRepr")]
pub struct Cone {
    ambient: usize,
    dim: usize,
    rays: Vec<Vector>,
    lineality: Vec<Vector>,
    normals: Vec<Vector>,
    equations: Vec<Vector>,
}

/// Serialized form. On input only `rays` and `lineality` are required;
/// the remaining fields, when present, must agree with the canonical form.
#[derive(Serialize, Deserialize)]
struct ConeRepr {
    ambient_rank: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    dim: Option<usize>,
    #[serde(default)]
    rays: Vec<Vector>,
    #[serde(default)]
    lineality: Vec<Vector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    normals: Option<Vec<Vector>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    equations: Option<Vec<Vector>>,
}

impl From<Cone> for ConeRepr {
    fn from(c: Cone) -> Self {
        ConeRepr {
            ambient_rank: c.ambient,
            dim: Some(c.dim),
            rays: c.rays,
            lineality: c.lineality,
            normals: Some(c.normals),
            equations: Some(c.equations),
        }
    }
}

impl TryFrom<ConeRepr> for Cone {
    type Error = String;
    fn try_from(r: ConeRepr) -> std::result::Result<Self, String> {
        let n = r.ambient_rank;
        if let Some(bad) = r.rays.iter().chain(&r.lineality).find(|v| v.len() != n) {
            return Err(format!("vector {bad:?} does not have length {n}"));
        }
        let mut gens = r.rays.clone();
        for l in &r.lineality {
            gens.push(l.clone());
            gens.push(arith::neg(l));
        }
        let c = Cone::from_generators(n, &gens);
        if r.dim.is_some_and(|d| d != c.dim)
            || r.normals.as_ref().is_some_and(|v| *v != c.normals)
            || r.equations.as_ref().is_some_and(|v| *v != c.equations)
        {
            return Err(format!("cone description is not canonical (expected {c})"));
        }
        Ok(c)
    }
}

impl Cone {
    pub fn zero(ambient: usize) -> Cone {
        Cone::from_generators(ambient, &[])
    }

    pub fn full(ambient: usize) -> Cone {
        Cone::from_inequalities(ambient, &[], &[])
    }

    /// The cone of nonnegative combinations of `gens`.
    pub fn from_generators(ambient: usize, gens: &[Vector]) -> Cone {
        for g in gens {
            assert_eq!(g.len(), ambient, "generator {g:?} has wrong length");
        }
        let gens: Vec<Vector> = gens.iter().filter(|g| !is_zero(g)).cloned().collect();
        let dual = dd::generators(ambient, &gens, &[]);
        let primal = dd::generators(ambient, &dual.rays, &dual.lineality);
        Cone::canonical(ambient, primal.rays, primal.lineality, dual.rays)
    }

    /// `{x : <n, x> >= 0 for all normals, <e, x> = 0 for all equations}`.
    pub fn from_inequalities(ambient: usize, normals: &[Vector], equations: &[Vector]) -> Cone {
        for v in normals.iter().chain(equations) {
            assert_eq!(v.len(), ambient, "inequality {v:?} has wrong length");
        }
        let primal = dd::generators(ambient, normals, equations);
        let dual = dd::generators(ambient, &primal.rays, &primal.lineality);
        Cone::canonical(ambient, primal.rays, primal.lineality, dual.rays)
    }

    fn canonical(n: usize, rays: Vec<Vector>, lineality: Vec<Vector>, normals: Vec<Vector>) -> Cone {
        let lineality = if lineality.is_empty() {
            lineality
        } else {
            arith::saturated_basis(&lineality, n)
        };
        let mut rays: Vec<Vector> = rays
            .iter()
            .map(|r| arith::project_off(&lineality, r))
            .filter(|r| !is_zero(r))
            .collect();
        rays.sort();
        rays.dedup();

        let mut spanning: Vec<Vector> = lineality.clone();
        spanning.extend(rays.iter().cloned());
        let full = spanning.len() >= n && arith::rank(&spanning, n) == n;
        let (span_basis, equations) = if full {
            (Vec::new(), Vec::new())
        } else {
            let b = arith::saturated_basis(&spanning, n);
            let e = arith::complement_basis(&b, n);
            (b, e)
        };
        let dim = n - equations.len();
        let mut normals: Vec<Vector> = normals
            .iter()
            .map(|v| {
                if full {
                    arith::primitive(v)
                } else {
                    arith::project_onto(&span_basis, v)
                }
            })
            .filter(|v| !is_zero(v))
            .collect();
        normals.sort();
        normals.dedup();
        Cone {
            ambient: n,
            dim,
            rays,
            lineality,
            normals,
            equations,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Primitive extremal rays modulo the lineality space.
    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    /// Saturated Hermite basis of the lineality space.
    pub fn lineality(&self) -> &[Vector] {
        &self.lineality
    }

    pub fn lineality_sublattice(&self) -> Sublattice {
        lattice::lattice_span(&self.lineality, self.ambient)
    }

    pub fn lineality_dim(&self) -> usize {
        self.lineality.len()
    }

    /// Primitive facet normals inside the linear span.
    pub fn facet_normals(&self) -> &[Vector] {
        &self.normals
    }

    /// Saturated basis of the equations of the linear span.
    pub fn span_equations(&self) -> &[Vector] {
        &self.equations
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient
    }

    pub fn is_linear_subspace(&self) -> bool {
        self.rays.is_empty()
    }

    /// Rays and both signs of every lineality vector.
    pub fn generators(&self) -> Vec<Vector> {
        let mut g = self.rays.clone();
        for l in &self.lineality {
            g.push(l.clone());
            g.push(arith::neg(l));
        }
        g
    }

    pub fn extremal_rays(&self) -> Result<&[Vector]> {
        if !self.is_pointed() {
            return Err(Error::NotPointed {
                lineality_dim: self.lineality.len(),
            });
        }
        Ok(&self.rays)
    }

    pub fn in_span(&self, x: &[i64]) -> bool {
        self.equations.iter().all(|e| dot(e, x) == 0)
    }

    pub fn contains_point(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.ambient);
        self.in_span(x) && self.normals.iter().all(|n| dot(n, x) >= 0)
    }

    /// `x` lies in the relative interior (within the linear span).
    pub fn relint_contains(&self, x: &[i64]) -> bool {
        assert_eq!(x.len(), self.ambient);
        self.in_span(x) && self.normals.iter().all(|n| dot(n, x) > 0)
    }

    /// Sum of the rays; lies in the relative interior.
    pub fn relint_point(&self) -> Vector {
        let mut p = vec![0i64; self.ambient];
        for r in &self.rays {
            for (pi, ri) in p.iter_mut().zip(r) {
                *pi = pi.checked_add(*ri).expect("relative interior point overflows i64");
            }
        }
        p
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Cone) -> bool {
        assert_eq!(self.ambient, other.ambient);
        other.rays.iter().all(|r| self.contains_point(r))
            && other
                .lineality
                .iter()
                .all(|l| self.in_span(l) && self.normals.iter().all(|n| dot(n, l) == 0))
    }

    pub fn intersect(&self, other: &Cone) -> Cone {
        assert_eq!(self.ambient, other.ambient, "ambient ranks differ");
        if self.contains(other) {
            return other.clone();
        }
        if other.contains(self) {
            return self.clone();
        }
        let mut normals = self.normals.clone();
        normals.extend(other.normals.iter().cloned());
        let mut eqs = self.equations.clone();
        eqs.extend(other.equations.iter().cloned());
        Cone::from_inequalities(self.ambient, &normals, &eqs)
    }

    /// Intersection of a nonempty family, in one conversion.
    pub fn intersect_all<'a, I: IntoIterator<Item = &'a Cone>>(ambient: usize, cones: I) -> Cone {
        let mut normals: Vec<Vector> = Vec::new();
        let mut eqs: Vec<Vector> = Vec::new();
        for c in cones {
            assert_eq!(c.ambient, ambient);
            normals.extend(c.normals.iter().cloned());
            eqs.extend(c.equations.iter().cloned());
        }
        normals.sort();
        normals.dedup();
        eqs.sort();
        eqs.dedup();
        Cone::from_inequalities(ambient, &normals, &eqs)
    }

    /// Face cut out by the hyperplanes `tight`, each of which must be a
    /// valid inequality on the cone.
    pub fn face_cut_by(&self, tight: &[&Vector]) -> Cone {
        let mut gens: Vec<Vector> = self
            .rays
            .iter()
            .filter(|r| tight.iter().all(|n| dot(n, r) == 0))
            .cloned()
            .collect();
        for l in &self.lineality {
            gens.push(l.clone());
            gens.push(arith::neg(l));
        }
        Cone::from_generators(self.ambient, &gens)
    }

    /// All faces of dimension `dim - 1`.
    pub fn facets(&self) -> Vec<Cone> {
        let mut out: Vec<Cone> = self.normals.iter().map(|n| self.face_cut_by(&[n])).collect();
        out.sort();
        out.dedup();
        out
    }

    /// All faces, including the cone itself and its lineality space.
    pub fn faces(&self) -> Vec<Cone> {
        let mut all = vec![self.clone()];
        let mut frontier = vec![self.clone()];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for c in &frontier {
                next.extend(c.facets());
            }
            next.sort();
            next.dedup();
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort();
        all.dedup();
        all
    }

    /// `self` is a face of `of`.
    pub fn is_face_of(&self, of: &Cone) -> bool {
        if self.ambient != of.ambient || !of.contains(self) {
            return false;
        }
        let tight: Vec<&Vector> = of
            .normals
            .iter()
            .filter(|n| {
                self.rays.iter().all(|r| dot(n, r) == 0)
                    && self.lineality.iter().all(|l| dot(n, l) == 0)
            })
            .collect();
        // the face cut by `tight` is generated by these rays plus lineality
        of.rays
            .iter()
            .filter(|r| tight.iter().all(|n| dot(n, r) == 0))
            .all(|r| self.contains_point(r))
            && of
                .lineality
                .iter()
                .all(|l| self.in_span(l) && self.normals.iter().all(|n| dot(n, l) == 0))
    }

    /// The relative interiors of `self` and `other` meet.
    pub fn relint_overlap(&self, other: &Cone) -> bool {
        let p = self.intersect(other).relint_point();
        self.relint_contains(&p) && other.relint_contains(&p)
    }

    /// `self° ⊆ other°`.
    pub fn relint_subset(&self, other: &Cone) -> bool {
        other.contains(self) && other.relint_contains(&self.relint_point())
    }

    /// Normal of the hyperplane spanned by a codimension-one cone inside
    /// `within`, projected into the span of `within`, primitive and
    /// lexicographically positive.
    pub fn hyperplane_in(&self, within: &Cone) -> Option<Vector> {
        if self.dim + 1 != within.dim {
            return None;
        }
        let basis = within.span_basis();
        self.equations
            .iter()
            .map(|e| {
                if within.is_full_dimensional() {
                    arith::primitive(e)
                } else {
                    arith::project_onto(&basis, e)
                }
            })
            .find(|v| !is_zero(v))
            .map(arith::lex_positive)
    }

    /// Saturated basis of the linear span.
    pub fn span_basis(&self) -> Vec<Vector> {
        if self.is_full_dimensional() {
            return (0..self.ambient)
                .map(|i| {
                    let mut e = vec![0; self.ambient];
                    e[i] = 1;
                    e
                })
                .collect();
        }
        arith::complement_basis(&self.equations, self.ambient)
    }
}

/// Convenience wrapper for [`Cone::from_generators`].
pub fn cone_from_generators(ambient: usize, gens: &[Vector]) -> Cone {
    Cone::from_generators(ambient, gens)
}

/// Convenience wrapper for [`Cone::from_inequalities`].
pub fn cone_from_inequalities(ambient: usize, normals: &[Vector], equations: &[Vector]) -> Cone {
    Cone::from_inequalities(ambient, normals, equations)
}

/// Positive integer multiple of a rational point. Every cone predicate is
/// invariant under positive scaling, so this is how rational characters
/// enter the integer kernel.
pub fn integral_point(v: &[num_rational::Ratio<i64>]) -> Vector {
    let w: Vec<arith::Q> = v
        .iter()
        .map(|x| arith::Q::new(*x.numer() as i128, *x.denom() as i128))
        .collect();
    arith::q_to_primitive(&w)
}

fn fmt_vecs(v: &[Vector]) -> String {
    let parts: Vec<String> = v
        .iter()
        .map(|x| {
            let s: Vec<String> = x.iter().map(|c| c.to_string()).collect();
            format!("({})", s.join(","))
        })
        .collect();
    parts.join(" ")
}

impl fmt::Display for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim {} rays [{}]", self.dim, fmt_vecs(&self.rays))?;
        if !self.lineality.is_empty() {
            write!(f, " lin [{}]", fmt_vecs(&self.lineality))?;
        }
        Ok(())
    }
}
