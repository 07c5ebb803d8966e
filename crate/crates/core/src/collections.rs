//! Collections of orbit cones: 2-connectedness, 2-maximal collections and
//! their face order.

use serde::{Deserialize, Serialize};

use crate::arith::Bits;
use crate::cone::Cone;
use crate::gitfan::OrbitConeSet;

/// A finite set of cones, sorted and without duplicates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConeCollection {
    members: Vec<Cone>,
}

impl ConeCollection {
    pub fn new(mut members: Vec<Cone>) -> ConeCollection {
        members.sort();
        members.dedup();
        if let Some(first) = members.first() {
            let n = first.ambient_rank();
            assert!(
                members.iter().all(|c| c.ambient_rank() == n),
                "collection members live in different ambient spaces"
            );
        }
        ConeCollection { members }
    }

    pub fn members(&self) -> &[Cone] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, c: &Cone) -> bool {
        self.members.binary_search(c).is_ok()
    }
}

impl FromIterator<Cone> for ConeCollection {
    fn from_iter<I: IntoIterator<Item = Cone>>(iter: I) -> Self {
        ConeCollection::new(iter.into_iter().collect())
    }
}

pub fn is_two_connected(psi: &ConeCollection) -> bool {
    let m = &psi.members;
    (0..m.len()).all(|i| (i + 1..m.len()).all(|j| m[i].relint_overlap(&m[j])))
}

/// Maximal cliques of the relative-interior overlap graph, each sorted,
/// the list sorted canonically.
pub fn enumerate_two_maximal(omega: &OrbitConeSet) -> Vec<ConeCollection> {
    let cones = omega.cones();
    let n = cones.len();
    let mut adj: Vec<Bits> = vec![Bits::new(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if cones[i].relint_overlap(&cones[j]) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    let all = Bits::with_prefix(n, n);
    bron_kerbosch(&adj, Vec::new(), all, Bits::new(n), &mut cliques);
    let mut out: Vec<ConeCollection> = cliques
        .into_iter()
        .map(|c| ConeCollection::new(c.into_iter().map(|i| cones[i].clone()).collect()))
        .collect();
    out.sort();
    out
}

fn bron_kerbosch(adj: &[Bits], r: Vec<usize>, p: Bits, x: Bits, out: &mut Vec<Vec<usize>>) {
    let n = adj.len();
    if p.count() == 0 {
        if x.count() == 0 {
            out.push(r);
        }
        return;
    }
    let union = p.or(&x);
    let pivot = (0..n)
        .filter(|&u| union.contains(u))
        .max_by_key(|&u| (p.and(&adj[u]).count(), std::cmp::Reverse(u)))
        .expect("candidate set is nonempty");
    let mut p = p;
    let mut x = x;
    for v in 0..n {
        if !p.contains(v) || adj[pivot].contains(v) {
            continue;
        }
        let mut r2 = r.clone();
        r2.push(v);
        bron_kerbosch(adj, r2, p.and(&adj[v]), x.and(&adj[v]), out);
        p.remove(v);
        x.insert(v);
    }
}

/// `psi ⪯ psi2`: every member of `psi2` has a face in `psi`.
pub fn collection_face(psi: &ConeCollection, psi2: &ConeCollection) -> bool {
    psi2.members
        .iter()
        .all(|b| psi.members.iter().any(|a| a.is_face_of(b)))
}

/// Members whose relative interior contains `chi`.
pub fn collection_of_point(omega: &OrbitConeSet, chi: &[i64]) -> ConeCollection {
    omega
        .cones()
        .iter()
        .filter(|c| c.relint_contains(chi))
        .cloned()
        .collect()
}

/// Members containing no other member.
pub fn minimal_members(psi: &ConeCollection) -> ConeCollection {
    psi.members
        .iter()
        .filter(|c| !psi.members.iter().any(|o| o != *c && c.contains(o)))
        .cloned()
        .collect()
}
