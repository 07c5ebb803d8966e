//! Orbit cones, GIT-cones, walls and GIT-fans.
//!
//! A weight system lists the degrees `w_1, ..., w_r` of homogeneous
//! generators together with a description of which index subsets are
//! faces (the coordinate faces whose generator products do not vanish
//! identically). Orbit cones are the cones generated by the weights of
//! such faces; the GIT-fan is assembled from their codimension-one
//! members.

use std::collections::{BTreeSet, HashMap, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{self, dot, lex_positive, Vector};
use crate::cone::Cone;
use crate::error::{Error, Result};

/// Coordinate face of the positive orthant, as a bit mask over generator
/// indices (bit `i` is generator `i`, zero based).
pub type FaceSet = u64;

pub const MAX_GENERATORS: usize = 64;
/// Subset families are enumerated exhaustively up to this many generators.
pub const MAX_ENUMERATED_GENERATORS: usize = 24;

pub fn face_set(indices: &[usize]) -> FaceSet {
    indices.iter().fold(0, |f, &i| f | 1 << i)
}

pub fn face_indices(f: FaceSet) -> Vec<usize> {
    (0..MAX_GENERATORS).filter(|i| f >> i & 1 == 1).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceSpec {
    /// Free algebra: every index subset is a face.
    AllSubsets,
    /// Hypersurface `T_i^k + g(other variables)` with generic `g`.
    Hypersurface { index: usize, exponent: u32 },
    ExplicitFaces(Vec<FaceSet>),
    /// Only the walls are known; orbit cones are unavailable.
    WallsGiven(Vec<Cone>),
    /// The orbit cones themselves, given without generator data.
    ExplicitCones(Vec<Cone>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub ambient_rank: usize,
    pub weights: Vec<Vector>,
    pub fface: FaceSpec,
    pub relation_degrees: Option<Vec<Vector>>,
    pub dim_r: Option<usize>,
}

impl WeightSystem {
    pub fn new(ambient_rank: usize, weights: Vec<Vector>, fface: FaceSpec) -> Result<WeightSystem> {
        let ws = WeightSystem {
            ambient_rank,
            weights,
            fface,
            relation_degrees: None,
            dim_r: None,
        };
        ws.validate()?;
        Ok(ws)
    }

    pub fn with_relations(mut self, degrees: Vec<Vector>) -> Result<WeightSystem> {
        self.relation_degrees = Some(degrees);
        self.validate()?;
        Ok(self)
    }

    pub fn with_dim_r(mut self, dim_r: usize) -> WeightSystem {
        self.dim_r = Some(dim_r);
        self
    }

    fn validate(&self) -> Result<()> {
        let k = self.ambient_rank;
        let bad = |m: String| Err(Error::InvalidSystem(m));
        let r = self.weights.len();
        if r > MAX_GENERATORS {
            return bad(format!("{r} generators exceed the limit of {MAX_GENERATORS}"));
        }
        if let Some(w) = self.weights.iter().find(|w| w.len() != k) {
            return bad(format!("weight {w:?} does not have length {k}"));
        }
        if let Some(d) = self
            .relation_degrees
            .iter()
            .flatten()
            .find(|d| d.len() != k)
        {
            return bad(format!("relation degree {d:?} does not have length {k}"));
        }
        let full: FaceSet = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        match &self.fface {
            FaceSpec::AllSubsets => {}
            FaceSpec::Hypersurface { index, exponent } => {
                if *index >= r {
                    return bad(format!("distinguished index {} out of range", index + 1));
                }
                if *exponent == 0 {
                    return bad("hypersurface exponent must be positive".into());
                }
            }
            FaceSpec::ExplicitFaces(faces) => {
                if let Some(f) = faces.iter().find(|&&f| f & !full != 0) {
                    return bad(format!("face {:?} uses a missing index", face_indices(*f)));
                }
            }
            FaceSpec::WallsGiven(cones) | FaceSpec::ExplicitCones(cones) => {
                if cones.iter().any(|c| c.ambient_rank() != k) {
                    return bad("cone of wrong ambient rank".into());
                }
            }
        }
        Ok(())
    }

    pub fn r(&self) -> usize {
        self.weights.len()
    }

    pub fn all_indices(&self) -> FaceSet {
        let r = self.r();
        if r == 64 {
            u64::MAX
        } else {
            (1u64 << r) - 1
        }
    }

    pub fn subset_cone(&self, f: FaceSet) -> Cone {
        let gens: Vec<Vector> = face_indices(f)
            .into_iter()
            .map(|i| self.weights[i].clone())
            .collect();
        Cone::from_generators(self.ambient_rank, &gens)
    }

    /// The F-faces as index subsets, sorted, including the empty face.
    pub fn f_faces(&self) -> Result<Vec<FaceSet>> {
        let r = self.r();
        let mut out: Vec<FaceSet> = match &self.fface {
            FaceSpec::AllSubsets => {
                check_enumerable(r)?;
                (0..1u64 << r).collect()
            }
            FaceSpec::Hypersurface { index, exponent } => {
                check_enumerable(r)?;
                let i0 = *index;
                let target: Vector = self.weights[i0]
                    .iter()
                    .map(|&x| x.checked_mul(*exponent as i64).expect("degree overflow"))
                    .collect();
                let base: Vec<FaceSet> = (0..1u64 << r).filter(|f| f >> i0 & 1 == 0).collect();
                let mut v = base.clone();
                for f in base {
                    let gens: Vec<Vector> = face_indices(f)
                        .into_iter()
                        .map(|i| self.weights[i].clone())
                        .collect();
                    if in_monoid(self.ambient_rank, &target, &gens) {
                        v.push(f | 1 << i0);
                    }
                }
                v
            }
            FaceSpec::ExplicitFaces(faces) => {
                let mut v = faces.clone();
                v.push(0);
                v
            }
            FaceSpec::WallsGiven(_) | FaceSpec::ExplicitCones(_) => {
                return Err(Error::InvalidSystem(
                    "F-faces are not available for this face specification".into(),
                ))
            }
        };
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

fn check_enumerable(r: usize) -> Result<()> {
    if r > MAX_ENUMERATED_GENERATORS {
        return Err(Error::InvalidSystem(format!(
            "{r} generators are too many for subset enumeration (limit {MAX_ENUMERATED_GENERATORS})"
        )));
    }
    Ok(())
}

/// `target` is a nonnegative integer combination of `gens`.
///
/// Searched exhaustively along a functional that is positive on every
/// generator; when no such functional exists the rational cone membership
/// is used instead.
pub fn in_monoid(ambient: usize, target: &[i64], gens: &[Vector]) -> bool {
    if arith::is_zero(target) {
        return true;
    }
    let c = Cone::from_generators(ambient, gens);
    if !c.contains_point(target) {
        return false;
    }
    if !c.is_pointed() || gens.iter().any(|g| arith::is_zero(g)) {
        return true;
    }
    let dual = Cone::from_inequalities(ambient, gens, &[]);
    let l = dual.relint_point();
    let mut gens: Vec<&Vector> = gens.iter().collect();
    gens.sort();
    gens.dedup();
    let mut failed: HashSet<Vector> = HashSet::new();
    fn search(
        t: Vector,
        from: usize,
        gens: &[&Vector],
        l: &[i64],
        failed: &mut HashSet<Vector>,
    ) -> bool {
        if arith::is_zero(&t) {
            return true;
        }
        if dot(l, &t) <= 0 || failed.contains(&t) {
            return false;
        }
        for (i, g) in gens.iter().enumerate().skip(from) {
            let next: Vector = t.iter().zip(g.iter()).map(|(a, b)| a - b).collect();
            if search(next, i, gens, l, failed) {
                return true;
            }
        }
        failed.insert(t);
        false
    }
    search(target.to_vec(), 0, &gens, &l, &mut failed)
}

pub fn weight_cone(ws: &WeightSystem) -> Cone {
    match &ws.fface {
        FaceSpec::ExplicitCones(cones) if ws.weights.is_empty() => {
            let gens: Vec<Vector> = cones.iter().flat_map(|c| c.generators()).collect();
            Cone::from_generators(ws.ambient_rank, &gens)
        }
        _ => Cone::from_generators(ws.ambient_rank, &ws.weights),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitConeSet {
    ambient_rank: usize,
    cones: Vec<Cone>,
    provenance: Vec<Vec<FaceSet>>,
}

impl OrbitConeSet {
    /// A family given directly by its cones.
    pub fn from_cones(ambient_rank: usize, cones: Vec<Cone>) -> OrbitConeSet {
        let mut cones = cones;
        cones.sort();
        cones.dedup();
        let provenance = vec![Vec::new(); cones.len()];
        OrbitConeSet {
            ambient_rank,
            cones,
            provenance,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Canonically sorted members.
    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    /// Generating index subsets of each member (empty for explicit cones).
    pub fn provenance(&self) -> &[Vec<FaceSet>] {
        &self.provenance
    }

    pub fn index_of(&self, c: &Cone) -> Option<usize> {
        self.cones.binary_search(c).ok()
    }

    /// The cone generated by all members.
    pub fn support(&self) -> Cone {
        let gens: Vec<Vector> = self.cones.iter().flat_map(|c| c.generators()).collect();
        Cone::from_generators(self.ambient_rank, &gens)
    }
}

/// Cones of the given index subsets, deduplicated.
///
/// Subsets are processed by size; a subset whose largest weight already
/// lies in the cone of the others reuses that cone.
fn subset_cones(ws: &WeightSystem, faces: &[FaceSet]) -> OrbitConeSet {
    let mut by_size: Vec<Vec<FaceSet>> = vec![Vec::new(); ws.r() + 1];
    for &f in faces {
        by_size[f.count_ones() as usize].push(f);
    }
    let mut id_of: HashMap<FaceSet, usize> = HashMap::new();
    let mut cones: Vec<Cone> = Vec::new();
    let mut index: HashMap<Cone, usize> = HashMap::new();
    let mut prov: Vec<Vec<FaceSet>> = Vec::new();
    for layer in by_size {
        let found: Vec<(FaceSet, std::result::Result<usize, Cone>)> = layer
            .par_iter()
            .map(|&f| {
                if f != 0 {
                    let top = 63 - f.leading_zeros() as usize;
                    let parent = f & !(1 << top);
                    if let Some(&p) = id_of.get(&parent) {
                        if cones[p].contains_point(&ws.weights[top]) {
                            return (f, Ok(p));
                        }
                    }
                }
                (f, Err(ws.subset_cone(f)))
            })
            .collect();
        for (f, res) in found {
            let id = match res {
                Ok(p) => p,
                Err(c) => *index.entry(c.clone()).or_insert_with(|| {
                    cones.push(c);
                    prov.push(Vec::new());
                    cones.len() - 1
                }),
            };
            id_of.insert(f, id);
            prov[id].push(f);
        }
    }
    let mut order: Vec<usize> = (0..cones.len()).collect();
    order.sort_by(|&a, &b| cones[a].cmp(&cones[b]));
    let provenance = order
        .iter()
        .map(|&i| {
            let mut p = std::mem::take(&mut prov[i]);
            p.sort_unstable();
            p
        })
        .collect();
    let cones = order.iter().map(|&i| cones[i].clone()).collect();
    OrbitConeSet {
        ambient_rank: ws.ambient_rank,
        cones,
        provenance,
    }
}

pub fn orbit_cones(ws: &WeightSystem) -> Result<OrbitConeSet> {
    match &ws.fface {
        FaceSpec::WallsGiven(_) => Err(Error::WallsGiven),
        FaceSpec::ExplicitCones(cones) => Ok(OrbitConeSet::from_cones(ws.ambient_rank, cones.clone())),
        FaceSpec::AllSubsets => {
            check_enumerable(ws.r())?;
            let faces: Vec<FaceSet> = (0..1u64 << ws.r()).collect();
            Ok(subset_cones(ws, &faces))
        }
        FaceSpec::Hypersurface { index, .. } => {
            check_enumerable(ws.r())?;
            let faces: Vec<FaceSet> = (0..1u64 << ws.r()).filter(|f| f >> index & 1 == 0).collect();
            Ok(subset_cones(ws, &faces))
        }
        FaceSpec::ExplicitFaces(_) => Ok(subset_cones(ws, &ws.f_faces()?)),
    }
}

/// Images of all F-faces, with the faces mapping onto each cone.
pub fn projected_f_faces(ws: &WeightSystem) -> Result<OrbitConeSet> {
    Ok(subset_cones(ws, &ws.f_faces()?))
}

/// Intersection of all orbit cones containing `chi`.
pub fn git_cone(oc: &OrbitConeSet, chi: &[i64]) -> Result<Cone> {
    let containing: Vec<&Cone> = oc.cones.iter().filter(|c| c.contains_point(chi)).collect();
    if containing.is_empty() {
        return Err(Error::OutsideWeightCone);
    }
    Ok(Cone::intersect_all(oc.ambient_rank, containing))
}

/// Codimension-one members (relative to the support) that are faces of a
/// full-dimensional member, keeping only the inclusion-maximal ones inside
/// each hyperplane.
pub fn walls(oc: &OrbitConeSet) -> Vec<Cone> {
    let support = oc.support();
    let d = support.dim();
    if d == 0 {
        return Vec::new();
    }
    let mut by_normal: HashMap<Vector, Vec<&Cone>> = HashMap::new();
    for c in oc.cones.iter().filter(|c| c.dim() == d) {
        for n in c.facet_normals() {
            by_normal.entry(lex_positive(n.clone())).or_default().push(c);
        }
    }
    let candidates: Vec<(Vector, &Cone)> = oc
        .cones
        .par_iter()
        .filter(|c| c.dim() + 1 == d)
        .filter_map(|w| {
            let h = w.hyperplane_in(&support)?;
            let fulls = by_normal.get(&h)?;
            fulls.iter().any(|f| w.is_face_of(f)).then_some((h, w))
        })
        .collect();
    let mut groups: HashMap<Vector, Vec<&Cone>> = HashMap::new();
    for (h, w) in candidates {
        groups.entry(h).or_default().push(w);
    }
    let mut out: Vec<Cone> = Vec::new();
    for ws in groups.values() {
        for w in ws {
            if !ws.iter().any(|o| o != w && o.contains(w)) {
                out.push((*w).clone());
            }
        }
    }
    out.sort();
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GITFan {
    support: Cone,
    chambers: Vec<Cone>,
    walls: Vec<Cone>,
    lower_cones: Vec<Cone>,
    /// `(i, j)`: cone `i` is a facet of cone `j`, indexing the concatenation
    /// chambers, walls, lower cones.
    face_relations: Vec<(usize, usize)>,
}

impl GITFan {
    pub fn support(&self) -> &Cone {
        &self.support
    }

    pub fn chambers(&self) -> &[Cone] {
        &self.chambers
    }

    /// Codimension-one cones of the fan.
    pub fn walls(&self) -> &[Cone] {
        &self.walls
    }

    /// Cones of codimension at least two.
    pub fn lower_cones(&self) -> &[Cone] {
        &self.lower_cones
    }

    pub fn face_relations(&self) -> &[(usize, usize)] {
        &self.face_relations
    }

    /// All cones: chambers, walls, lower cones.
    pub fn cones(&self) -> impl Iterator<Item = &Cone> {
        self.chambers
            .iter()
            .chain(&self.walls)
            .chain(&self.lower_cones)
    }

    pub fn len(&self) -> usize {
        self.chambers.len() + self.walls.len() + self.lower_cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cone(&self, i: usize) -> &Cone {
        let (c, w) = (self.chambers.len(), self.walls.len());
        if i < c {
            &self.chambers[i]
        } else if i < c + w {
            &self.walls[i - c]
        } else {
            &self.lower_cones[i - c - w]
        }
    }

    pub fn count_by_dim(&self) -> Vec<usize> {
        let mut v = vec![0; self.support.ambient_rank() + 1];
        for c in self.cones() {
            v[c.dim()] += 1;
        }
        v
    }

    /// Every pair of cones meets in a common face.
    pub fn verify_fan_property(&self) -> Result<()> {
        let all: Vec<&Cone> = self.cones().collect();
        let pairs: Vec<(usize, usize)> = (0..all.len())
            .flat_map(|i| (i + 1..all.len()).map(move |j| (i, j)))
            .collect();
        match pairs.par_iter().find_first(|&&(i, j)| !meets_in_face(all[i], all[j])) {
            Some(&(i, j)) => Err(Error::NotAFan(i, j)),
            None => Ok(()),
        }
    }
}

fn meets_in_face(a: &Cone, b: &Cone) -> bool {
    let x = a.intersect(b);
    x.is_face_of(a) && x.is_face_of(b)
}

/// The GIT-fan of an orbit-cone family satisfying the wall hypotheses.
pub fn git_fan(oc: &OrbitConeSet) -> Result<GITFan> {
    let support = oc.support();
    let d = support.dim();
    let fulls: Vec<&Cone> = oc.cones.iter().filter(|c| c.dim() == d).collect();
    let offending = oc
        .cones
        .par_iter()
        .position_first(|c| !fulls.iter().any(|f| c.is_face_of(f)));
    if let Some(index) = offending {
        return Err(Error::WallHypothesis { index });
    }
    build_fan(&support, &walls(oc))
}

/// GIT-fan from a support cone and its walls.
pub fn git_fan_from_walls(support: &Cone, walls: &[Cone]) -> Result<GITFan> {
    let d = support.dim();
    for (index, w) in walls.iter().enumerate() {
        if w.ambient_rank() != support.ambient_rank() {
            return Err(Error::Dimension {
                expected: support.ambient_rank(),
                found: w.ambient_rank(),
            });
        }
        if w.dim() + 1 != d {
            return Err(Error::WallDimension {
                index,
                expected: d.saturating_sub(1),
                found: w.dim(),
            });
        }
        if !support.contains(w) {
            return Err(Error::WallOutsideSupport { index });
        }
    }
    build_fan(support, walls)
}

/// The fan of all cones generated by subsets of `vectors`.
pub fn sigma_fan(ambient: usize, vectors: &[Vector]) -> Result<GITFan> {
    let ws = WeightSystem::new(ambient, vectors.to_vec(), FaceSpec::AllSubsets)?;
    git_fan(&orbit_cones(&ws)?)
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.0[hi] = lo;
        }
    }
}

fn half_space_cut(c: &Cone, h: &Vector) -> Cone {
    let mut normals = c.facet_normals().to_vec();
    normals.push(h.clone());
    Cone::from_inequalities(c.ambient_rank(), &normals, c.span_equations())
}

/// Chambers are unions of cells of the arrangement spanned by the walls;
/// neighbouring cells are merged unless their common facet lies in a wall.
fn build_fan(support: &Cone, walls: &[Cone]) -> Result<GITFan> {
    let n = support.ambient_rank();
    let d = support.dim();
    let gens = support.generators();
    let mut planes: Vec<Vector> = walls
        .iter()
        .filter_map(|w| w.hyperplane_in(support))
        .filter(|h| gens.iter().any(|g| dot(h, g) > 0) && gens.iter().any(|g| dot(h, g) < 0))
        .collect();
    planes.sort();
    planes.dedup();
    let plane_index: HashMap<&Vector, usize> =
        planes.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let mut walls_on: Vec<Vec<&Cone>> = vec![Vec::new(); planes.len()];
    for w in walls {
        if let Some(h) = w.hyperplane_in(support) {
            if let Some(&j) = plane_index.get(&h) {
                walls_on[j].push(w);
            }
        }
    }

    let chambers: Vec<Cone> = if planes.is_empty() {
        vec![support.clone()]
    } else {
        let cell_cone = |signs: &[bool]| -> Cone {
            let mut normals = support.facet_normals().to_vec();
            for (h, &s) in planes.iter().zip(signs) {
                normals.push(if s { h.clone() } else { arith::neg(h) });
            }
            Cone::from_inequalities(n, &normals, support.span_equations())
        };

        let mut start = support.clone();
        let mut signs = vec![true; planes.len()];
        for (j, h) in planes.iter().enumerate() {
            let plus = half_space_cut(&start, h);
            start = if plus.dim() == d {
                plus
            } else {
                signs[j] = false;
                half_space_cut(&start, &arith::neg(h))
            };
        }

        let mut cells: Vec<Cone> = vec![start];
        let mut cell_signs: Vec<Vec<bool>> = vec![signs.clone()];
        let mut id_of: HashMap<Vec<bool>, usize> = HashMap::new();
        id_of.insert(signs, 0);
        let mut uf = UnionFind(vec![0]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let steps: Vec<Result<Vec<(usize, bool)>>> = frontier
                .par_iter()
                .map(|&id| cell_neighbours(&cells[id], &plane_index, &walls_on))
                .collect();
            let mut pending: Vec<Vec<bool>> = Vec::new();
            let mut pending_set: HashSet<Vec<bool>> = HashSet::new();
            let mut edges: Vec<(usize, Vec<bool>, bool)> = Vec::new();
            for (&id, step) in frontier.iter().zip(steps) {
                for (j, merge) in step? {
                    let mut s = cell_signs[id].clone();
                    s[j] = !s[j];
                    if !id_of.contains_key(&s) && pending_set.insert(s.clone()) {
                        pending.push(s.clone());
                    }
                    edges.push((id, s, merge));
                }
            }
            let fresh: Vec<Cone> = pending.par_iter().map(|s| cell_cone(s)).collect();
            let mut next = Vec::new();
            for (s, c) in pending.into_iter().zip(fresh) {
                if c.dim() != d {
                    return Err(Error::Arrangement(format!(
                        "neighbouring cell {c} is not full-dimensional"
                    )));
                }
                let id = cells.len();
                cells.push(c);
                cell_signs.push(s.clone());
                id_of.insert(s, id);
                uf.0.push(id);
                next.push(id);
            }
            for (a, s, merge) in edges {
                if merge {
                    uf.union(a, id_of[&s]);
                }
            }
            frontier = next;
        }

        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for id in 0..cells.len() {
            groups.entry(uf.find(id)).or_default().push(id);
        }
        let groups: Vec<Vec<usize>> = groups.into_values().collect();
        let mut chambers: Vec<Cone> = groups
            .par_iter()
            .map(|g| {
                let gens: Vec<Vector> = g.iter().flat_map(|&i| cells[i].generators()).collect();
                Cone::from_generators(n, &gens)
            })
            .collect();
        chambers.sort();
        chambers
    };

    let pairs: Vec<(usize, usize)> = (0..chambers.len())
        .flat_map(|i| (i + 1..chambers.len()).map(move |j| (i, j)))
        .collect();
    if let Some(&(i, j)) = pairs
        .par_iter()
        .find_first(|&&(i, j)| !meets_in_face(&chambers[i], &chambers[j]))
    {
        return Err(Error::NotAFan(i, j));
    }
    Ok(assemble(support.clone(), chambers))
}

/// For each facet of `cell` on an arrangement hyperplane: the hyperplane
/// index and whether the facet is free of walls.
fn cell_neighbours(
    cell: &Cone,
    plane_index: &HashMap<&Vector, usize>,
    walls_on: &[Vec<&Cone>],
) -> Result<Vec<(usize, bool)>> {
    let mut out = Vec::new();
    for nrm in cell.facet_normals() {
        let key = lex_positive(nrm.clone());
        let Some(&j) = plane_index.get(&key) else {
            continue;
        };
        let facet = cell.face_cut_by(&[nrm]);
        let covered = walls_on[j].iter().any(|w| w.contains(&facet));
        if !covered && walls_on[j].iter().any(|w| w.intersect(&facet).dim() == facet.dim()) {
            return Err(Error::Arrangement(format!(
                "a wall covers part of the cell facet {facet} but not all of it"
            )));
        }
        out.push((j, !covered));
    }
    Ok(out)
}

fn assemble(support: Cone, chambers: Vec<Cone>) -> GITFan {
    let d = support.dim();
    let mut facets_of: HashMap<Cone, Vec<Cone>> = HashMap::new();
    let mut level: Vec<Cone> = chambers.clone();
    while !level.is_empty() {
        let computed: Vec<(Cone, Vec<Cone>)> = level
            .into_par_iter()
            .map(|c| {
                let f = c.facets();
                (c, f)
            })
            .collect();
        let mut next: BTreeSet<Cone> = BTreeSet::new();
        for (c, fs) in computed {
            for f in &fs {
                if !facets_of.contains_key(f) {
                    next.insert(f.clone());
                }
            }
            facets_of.insert(c, fs);
        }
        level = next.into_iter().collect();
    }
    let mut walls: Vec<Cone> = Vec::new();
    let mut lower: Vec<Cone> = Vec::new();
    for c in facets_of.keys() {
        if c.dim() + 1 == d {
            walls.push(c.clone());
        } else if c.dim() + 1 < d {
            lower.push(c.clone());
        }
    }
    walls.sort();
    lower.sort();
    let order: Vec<&Cone> = chambers.iter().chain(&walls).chain(&lower).collect();
    let index: HashMap<&Cone, usize> = order.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut face_relations: Vec<(usize, usize)> = Vec::new();
    for (j, c) in order.iter().enumerate() {
        for f in &facets_of[*c] {
            face_relations.push((index[f], j));
        }
    }
    face_relations.sort_unstable();
    GITFan {
        support,
        chambers,
        walls,
        lower_cones: lower,
        face_relations,
    }
}

/// The fan cone whose relative interior contains `chi`.
pub fn chamber_of(fan: &GITFan, chi: &[i64]) -> Result<Cone> {
    if !fan.support.contains_point(chi) {
        return Err(Error::OutsideSupport);
    }
    let found = fan
        .cones()
        .find(|c| c.relint_contains(chi))
        .cloned()
        .ok_or_else(|| Error::Arrangement("no fan cone contains the point in its interior".into()))?;
    debug_assert_eq!(
        found,
        Cone::intersect_all(
            chi.len(),
            fan.walls
                .iter()
                .chain(&fan.chambers)
                .filter(|c| c.contains_point(chi))
        ),
        "cone of a point differs from the intersection of the cones through it"
    );
    Ok(found)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FaceOrder {
    Equal,
    AFaceOfB,
    BFaceOfA,
    Incomparable,
}

pub fn compare_git_cones(a: &Cone, b: &Cone) -> FaceOrder {
    if a == b {
        FaceOrder::Equal
    } else if a.is_face_of(b) {
        FaceOrder::AFaceOfB
    } else if b.is_face_of(a) {
        FaceOrder::BFaceOfA
    } else {
        FaceOrder::Incomparable
    }
}

/// `λ ∩ α` where `α = (κ° × Q^m) ∩ support`: the closed cone together with
/// the inequalities that hold strictly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HalfOpenCone {
    pub closed: Cone,
    pub open_normals: Vec<Vector>,
}

impl HalfOpenCone {
    pub fn contains_point(&self, x: &[i64]) -> bool {
        self.closed.contains_point(x) && self.open_normals.iter().all(|n| dot(n, x) > 0)
    }
}

/// The nonempty intersections of fan cones with `κ° × Q^m`, where `κ`
/// lives in the first `k_rank` coordinates.
pub fn restrict_to_ample(fan: &GITFan, kappa: &Cone, k_rank: usize) -> Result<Vec<HalfOpenCone>> {
    let n = fan.support.ambient_rank();
    if kappa.ambient_rank() != k_rank || k_rank > n || !kappa.is_full_dimensional() {
        return Err(Error::KappaDegenerate(k_rank));
    }
    let lift = |v: &Vector| -> Vector {
        let mut w = v.clone();
        w.resize(n, 0);
        w
    };
    let open: Vec<Vector> = kappa.facet_normals().iter().map(lift).collect();
    let probe = HalfOpenCone {
        closed: fan.support.clone(),
        open_normals: open.clone(),
    };
    if !probe.contains_point(&half_space_all(&fan.support, &open).relint_point()) {
        return Err(Error::KappaDegenerate(k_rank));
    }
    let out: Vec<HalfOpenCone> = fan
        .cones()
        .collect::<Vec<_>>()
        .par_iter()
        .filter_map(|lambda| {
            let closed = half_space_all(lambda, &open);
            let cut = HalfOpenCone {
                closed,
                open_normals: open.clone(),
            };
            cut.contains_point(&cut.closed.relint_point()).then_some(cut)
        })
        .collect();
    Ok(out)
}

fn half_space_all(c: &Cone, normals: &[Vector]) -> Cone {
    let mut all = c.facet_normals().to_vec();
    all.extend(normals.iter().cloned());
    Cone::from_inequalities(c.ambient_rank(), &all, c.span_equations())
}
