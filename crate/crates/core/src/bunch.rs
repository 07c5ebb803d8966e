//! Bunched rings: admissible weight systems, F-bunches and the divisor
//! geometry of the associated quotient.
//!
//! The positive orthant of `Z^r` is fixed as `γ`, so faces are index
//! subsets and the image of a face `γ₀` is the cone of its weights. Both
//! lattice images that occur, of `γ₀ ∩ E` and of `lin(γ₀) ∩ E`, are the
//! integer span of those weights.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::Vector;
use crate::collections::{collection_of_point, minimal_members, ConeCollection};
use crate::cone::Cone;
use crate::error::{Error, Result};
use crate::gitfan::{
    face_indices, git_cone, orbit_cones, projected_f_faces, weight_cone, FaceSet, OrbitConeSet,
    WeightSystem,
};
use crate::lattice::{lattice_intersect, lattice_span, Sublattice};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bunch {
    pub system: WeightSystem,
    pub phi: ConeCollection,
}

fn face_weights(ws: &WeightSystem, f: FaceSet) -> Vec<Vector> {
    face_indices(f).into_iter().map(|i| ws.weights[i].clone()).collect()
}

/// The facets of the orthant, in index order: facet `i` omits generator `i`.
fn orthant_facets(ws: &WeightSystem) -> Vec<FaceSet> {
    let all = ws.all_indices();
    (0..ws.r()).map(|i| all & !(1u64 << i)).collect()
}

/// `Err(facet)` names the first facet whose weights do not generate `Z^k`.
pub fn check_admissible(ws: &WeightSystem) -> std::result::Result<(), FaceSet> {
    for f in orthant_facets(ws) {
        if !lattice_span(&face_weights(ws, f), ws.ambient_rank).is_full() {
            return Err(f);
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FBunchCheck {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

pub fn is_f_bunch(b: &Bunch) -> Result<FBunchCheck> {
    let ws = &b.system;
    let projected = projected_f_faces(ws)?;
    let phi = b.phi.members();
    let mut diagnostics = Vec::new();
    if phi.is_empty() {
        diagnostics.push("the collection is empty".to_string());
    }
    for tau in phi {
        if projected.index_of(tau).is_none() {
            diagnostics.push(format!("{tau} is not a projected F-face"));
        }
    }
    let verdicts: Vec<Option<String>> = projected
        .cones()
        .par_iter()
        .map(|tau| {
            let clash = phi.iter().filter(|s| *s != tau).find(|s| {
                !tau.relint_overlap(s) || s.relint_subset(tau)
            });
            match (b.phi.contains(tau), clash) {
                (true, Some(s)) => Some(format!(
                    "members {tau} and {s} violate the overlap condition"
                )),
                (false, None) => Some(format!(
                    "{tau} satisfies the overlap condition but is not a member"
                )),
                _ => None,
            }
        })
        .collect();
    diagnostics.extend(verdicts.into_iter().flatten());
    for f in orthant_facets(ws) {
        let q = ws.subset_cone(f);
        if !phi.iter().any(|t| t.relint_subset(&q)) {
            diagnostics.push(format!(
                "no member lies interior to the image of facet {:?}",
                one_based(f)
            ));
        }
    }
    Ok(FBunchCheck {
        valid: diagnostics.is_empty(),
        diagnostics,
    })
}

pub fn one_based(f: FaceSet) -> Vec<usize> {
    face_indices(f).into_iter().map(|i| i + 1).collect()
}

/// Relevant F-faces and their inclusion-minimal members, both sorted.
pub fn rlv_cov(b: &Bunch) -> Result<(Vec<FaceSet>, Vec<FaceSet>)> {
    let projected = projected_f_faces(&b.system)?;
    Ok(rlv_cov_in(&projected, &b.phi))
}

fn rlv_cov_in(projected: &OrbitConeSet, phi: &ConeCollection) -> (Vec<FaceSet>, Vec<FaceSet>) {
    let mut rlv: Vec<FaceSet> = projected
        .cones()
        .par_iter()
        .zip(projected.provenance())
        .filter(|(q, _)| phi.members().iter().any(|t| t.relint_subset(q)))
        .flat_map_iter(|(_, faces)| faces.iter().copied())
        .collect();
    rlv.sort_unstable();
    let cov: Vec<FaceSet> = rlv
        .iter()
        .copied()
        .filter(|&f| !rlv.iter().any(|&g| g != f && g & !f == 0))
        .collect();
    (rlv, cov)
}

/// `chi` lies in the relative interior of the image of every facet.
pub fn omega_deep_contains(ws: &WeightSystem, chi: &[i64]) -> bool {
    orthant_facets(ws)
        .into_par_iter()
        .all(|f| ws.subset_cone(f).relint_contains(chi))
}

/// The bunch `Φ(χ)` of minimal projected F-faces whose interior contains
/// `chi`. `degree_zero_trivial` asserts that only constants have degree
/// zero, which weight data cannot certify.
pub fn bunch_of_character(ws: &WeightSystem, chi: &[i64], degree_zero_trivial: bool) -> Result<Bunch> {
    if chi.len() != ws.ambient_rank {
        return Err(Error::Dimension {
            expected: ws.ambient_rank,
            found: chi.len(),
        });
    }
    if let Err(f) = check_admissible(ws) {
        return Err(Error::NotAdmissible { facet: one_based(f) });
    }
    if ws.weights.iter().any(|w| crate::arith::is_zero(w)) {
        return Err(Error::DegreeZero("a generator has degree zero".into()));
    }
    if !weight_cone(ws).is_pointed() {
        return Err(Error::DegreeZero("the weight cone is not pointed".into()));
    }
    if !degree_zero_trivial {
        return Err(Error::DegreeZero(
            "the caller must assert that the degree-zero part consists of constants".into(),
        ));
    }
    if !omega_deep_contains(ws, chi) {
        return Err(Error::NotDeep);
    }
    Ok(Bunch {
        system: ws.clone(),
        phi: phi_of_character(ws, chi)?,
    })
}

/// `Φ(χ)` without the preconditions that make it an F-bunch.
pub fn phi_of_character(ws: &WeightSystem, chi: &[i64]) -> Result<ConeCollection> {
    let projected = projected_f_faces(ws)?;
    Ok(minimal_members(&collection_of_point(&projected, chi)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Fano {
    Fano,
    #[serde(rename = "Q-Fano")]
    QFano,
    #[serde(rename = "neither")]
    Neither,
    #[serde(rename = "unknown")]
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryReport {
    pub dim_x: Option<usize>,
    pub cl_rank: usize,
    pub picard: Sublattice,
    #[serde(with = "decimal")]
    pub picard_index: Option<BigInt>,
    pub eff: Cone,
    pub mov: Cone,
    pub semiample: Cone,
    pub ample_witness: Option<Vector>,
    pub locally_factorial: bool,
    pub q_factorial: bool,
    pub canonical_class: Option<Vector>,
    pub fano: Fano,
    pub rlv: Vec<FaceSet>,
    pub cov: Vec<FaceSet>,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &Option<BigInt>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(x) => s.serialize_some(&x.to_string()),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<BigInt>, D::Error> {
        let v: Option<String> = Option::deserialize(d)?;
        v.map(|s| s.parse().map_err(serde::de::Error::custom)).transpose()
    }
}

/// `x` lies in the relative interior of every member.
fn in_all_interiors(phi: &ConeCollection, x: &[i64]) -> bool {
    phi.members().iter().all(|t| t.relint_contains(x))
}

pub fn geometry_report(b: &Bunch) -> Result<GeometryReport> {
    let ws = &b.system;
    let k = ws.ambient_rank;
    let projected = projected_f_faces(ws)?;
    let (rlv, cov) = rlv_cov_in(&projected, &b.phi);

    let picard = cov
        .iter()
        .map(|&f| lattice_span(&face_weights(ws, f), k))
        .reduce(|a, b| lattice_intersect(&a, &b))
        .unwrap_or_else(|| Sublattice::full(k));
    let picard_index = picard.index();

    let eff = weight_cone(ws);
    let facet_images: Vec<Cone> = orthant_facets(ws)
        .into_par_iter()
        .map(|f| ws.subset_cone(f))
        .collect();
    let mov = if facet_images.is_empty() {
        eff.clone()
    } else {
        Cone::intersect_all(k, &facet_images)
    };
    let semiample = if b.phi.is_empty() {
        Cone::zero(k)
    } else {
        Cone::intersect_all(k, b.phi.members())
    };
    let witness = semiample.relint_point();
    let ample_witness = (!b.phi.is_empty() && in_all_interiors(&b.phi, &witness)).then_some(witness);
    let locally_factorial = rlv
        .par_iter()
        .all(|&f| lattice_span(&face_weights(ws, f), k).is_full());
    let q_factorial = b.phi.members().iter().all(|t| t.is_full_dimensional());
    let canonical_class = ws.relation_degrees.as_ref().map(|rel| {
        let mut kc = vec![0i64; k];
        for d in rel {
            for (c, x) in kc.iter_mut().zip(d) {
                *c += x;
            }
        }
        for w in &ws.weights {
            for (c, x) in kc.iter_mut().zip(w) {
                *c -= x;
            }
        }
        kc
    });
    let fano = match &canonical_class {
        None => Fano::Unknown,
        Some(kc) => {
            let anti: Vector = kc.iter().map(|x| -x).collect();
            if b.phi.is_empty() || !in_all_interiors(&b.phi, &anti) {
                Fano::Neither
            } else if picard.contains_i64(&anti) {
                Fano::Fano
            } else {
                Fano::QFano
            }
        }
    };
    Ok(GeometryReport {
        dim_x: ws.dim_r.and_then(|d| d.checked_sub(k)),
        cl_rank: k,
        picard,
        picard_index,
        eff,
        mov,
        semiample,
        ample_witness,
        locally_factorial,
        q_factorial,
        canonical_class,
        fano,
        rlv,
        cov,
    })
}

/// The semiample cone `∩ Φ(χ)` equals the GIT-cone of `chi`. Guaranteed
/// for deep characters; for others it is merely evaluated.
pub fn semiample_equals_gitcone_check(ws: &WeightSystem, chi: &[i64]) -> Result<bool> {
    let phi = phi_of_character(ws, chi)?;
    if phi.is_empty() {
        return Err(Error::OutsideWeightCone);
    }
    let semiample = Cone::intersect_all(ws.ambient_rank, phi.members());
    Ok(semiample == git_cone(&orbit_cones(ws)?, chi)?)
}
