//! Brute-force cross-checks, independent of the incremental algorithms.

use std::collections::BTreeMap;

use gitq::collections::{is_two_connected, ConeCollection};
use gitq::gitfan::{FaceSpec, OrbitConeSet, WeightSystem};
use gitq::{Cone, Vector};
use rayon::prelude::*;

const MAX_BRUTE_GENERATORS: usize = 16;
const MAX_BRUTE_CONES: usize = 20;

/// Facets of full-dimensional subset cones, inclusion-maximal within each
/// hyperplane. `None` when the family is not a subset family or too large.
pub fn facet_walls(ws: &WeightSystem) -> gitq::Result<Option<Vec<Cone>>> {
    let r = ws.r();
    if r > MAX_BRUTE_GENERATORS {
        return Ok(None);
    }
    let subsets: Vec<u64> = match &ws.fface {
        FaceSpec::AllSubsets => (0..1u64 << r).collect(),
        FaceSpec::Hypersurface { index, .. } => (0..1u64 << r).filter(|s| s >> index & 1 == 0).collect(),
        FaceSpec::ExplicitFaces(f) => f.clone(),
        _ => return Ok(None),
    };
    let n = ws.ambient_rank;
    let support = Cone::from_generators(n, &ws.weights);
    let d = support.dim();
    let facets: Vec<Cone> = subsets
        .par_iter()
        .flat_map_iter(|&s| {
            let gens: Vec<Vector> = (0..r)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| ws.weights[i].clone())
                .collect();
            let c = Cone::from_generators(n, &gens);
            if c.dim() == d {
                c.facets()
            } else {
                Vec::new()
            }
        })
        .collect();
    let mut by_plane: BTreeMap<Vector, Vec<Cone>> = BTreeMap::new();
    for f in facets {
        if let Some(h) = f.hyperplane_in(&support) {
            by_plane.entry(h).or_default().push(f);
        }
    }
    let mut out = Vec::new();
    for group in by_plane.values_mut() {
        group.sort();
        group.dedup();
        for w in group.iter() {
            if !group.iter().any(|o| o != w && o.contains(w)) {
                out.push(w.clone());
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(Some(out))
}

/// 2-maximal collections by exhaustion over all subsets of the orbit cones.
pub fn two_maximal_brute(oc: &OrbitConeSet) -> Option<Vec<ConeCollection>> {
    let cones = oc.cones();
    let m = cones.len();
    if m > MAX_BRUTE_CONES {
        return None;
    }
    let pick = |s: u64| -> ConeCollection {
        (0..m).filter(|i| s >> i & 1 == 1).map(|i| cones[i].clone()).collect()
    };
    let connected: Vec<u64> = (1..1u64 << m)
        .into_par_iter()
        .filter(|&s| is_two_connected(&pick(s)))
        .collect();
    let is_connected = |s: u64| connected.binary_search(&s).is_ok();
    let mut out: Vec<ConeCollection> = connected
        .iter()
        .copied()
        .filter(|&s| (0..m).all(|i| s >> i & 1 == 1 || !is_connected(s | 1 << i)))
        .map(pick)
        .collect();
    out.sort();
    Some(out)
}
