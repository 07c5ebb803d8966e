//! Randomized suites shared by the property tests and the acceptance run.
//! Each returns the first counterexample as an error message.
#![allow(dead_code)]

use gitq::bunch::{
    bunch_of_character, is_f_bunch, omega_deep_contains, phi_of_character, semiample_equals_gitcone_check, Bunch,
};
use gitq::collections::{enumerate_two_maximal, is_two_connected, ConeCollection};
use gitq::cone::{cone_from_generators, cone_from_inequalities};
use gitq::corpus::{gen_family, Params};
use gitq::gitfan::{
    chamber_of, compare_git_cones, git_cone, git_fan, orbit_cones, sigma_fan, FaceOrder, FaceSpec, OrbitConeSet,
    WeightSystem,
};
use gitq::Cone;
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::{Config, TestCaseError, TestError, TestRunner};

use crate::common::{combination, git_cone_oracle, pointed_weights, vectors, Vector};

pub type Outcome = Result<(), String>;

fn run<S: Strategy>(cases: u32, strategy: S, test: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Outcome
where
    S::Value: std::fmt::Debug,
{
    let mut runner = TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    });
    runner.run(&strategy, test).map_err(|e| match e {
        TestError::Abort(why) => format!("aborted: {why}"),
        TestError::Fail(why, input) => format!("{why}; minimal input {input:?}"),
    })
}

fn system(k: std::ops::RangeInclusive<usize>, r: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = (usize, Vec<Vector>)> {
    k.prop_flat_map(move |k| (Just(k), pointed_weights(k, r.clone())))
}

fn coefficient_lists(count: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0i64..=3, 7), count)
}

fn points(k: usize, weights: &[Vector], coeffs: &[Vec<i64>]) -> Vec<Vector> {
    coeffs
        .iter()
        .map(|c| combination(k, weights, &c[..weights.len()]))
        .collect()
}

/// H-description of a random cone converts back to the same cone.
pub fn dd_round_trip(cases: u32) -> Outcome {
    let strategy = (1usize..=6).prop_flat_map(|n| (Just(n), vectors(n, 0..=7, 3)));
    run(cases, strategy, |(n, gens)| {
        let c = cone_from_generators(n, &gens);
        let back = cone_from_inequalities(n, c.facet_normals(), c.span_equations());
        prop_assert_eq!(&back, &c);
        for g in &gens {
            prop_assert!(c.contains_point(g));
        }
        prop_assert_eq!(cone_from_generators(n, &c.generators()), c);
        Ok(())
    })
}

/// The GIT-cone equals the fan cone through the point and the direct
/// intersection of subset cones containing it.
pub fn git_cone_equivalence(cases: u32) -> Outcome {
    run(cases, (system(1..=4, 1..=7), coefficient_lists(1)), |((k, w), coeffs)| {
        let ws = WeightSystem::new(k, w.clone(), FaceSpec::AllSubsets).unwrap();
        let oc = orbit_cones(&ws).unwrap();
        let fan = git_fan(&oc).unwrap();
        for chi in points(k, &w, &coeffs) {
            let lambda = git_cone(&oc, &chi).unwrap();
            prop_assert_eq!(&lambda, &chamber_of(&fan, &chi).unwrap());
            prop_assert_eq!(&lambda, &git_cone_oracle(k, &w, &chi));
        }
        Ok(())
    })
}

/// More orbit cones through `chi` than through `chi2` exactly when
/// `λ(chi)` is a face of `λ(chi2)`.
pub fn order_reversal(cases: u32) -> Outcome {
    run(cases, (system(2..=3, 1..=6), coefficient_lists(2)), |((k, w), coeffs)| {
        let ws = WeightSystem::new(k, w.clone(), FaceSpec::AllSubsets).unwrap();
        let oc = orbit_cones(&ws).unwrap();
        let pts = points(k, &w, &coeffs);
        let (chi, chi2) = (&pts[0], &pts[1]);
        let holding = |x: &[i64]| -> Vec<bool> { oc.cones().iter().map(|c| c.contains_point(x)).collect() };
        let (s1, s2) = (holding(chi), holding(chi2));
        let superset = s1.iter().zip(&s2).all(|(a, b)| *a || !*b);
        let order = compare_git_cones(&git_cone(&oc, chi).unwrap(), &git_cone(&oc, chi2).unwrap());
        prop_assert_eq!(superset, matches!(order, FaceOrder::Equal | FaceOrder::AFaceOfB));
        Ok(())
    })
}

/// A hypersurface system has the fan of the remaining weights.
pub fn hypersurface_equivalence(cases: u32) -> Outcome {
    let strategy = (
        system(1..=3, 2..=5),
        prop::collection::vec(any::<bool>(), 5),
        1u32..=3,
        any::<bool>(),
        prop::collection::vec(0i64..=3, 3),
    );
    run(cases, strategy, |((k, w), pick, exponent, random_last, last)| {
        let mut weights = w.clone();
        let extra: Vector = if random_last {
            let mut v = last[..k].to_vec();
            v[0] += 1;
            v
        } else {
            let chosen: Vec<&Vector> = w.iter().zip(&pick).filter(|(_, p)| **p).map(|(x, _)| x).collect();
            if chosen.is_empty() {
                w[0].clone()
            } else {
                (0..k).map(|j| chosen.iter().map(|c| c[j]).sum()).collect()
            }
        };
        weights.push(extra);
        let i0 = weights.len() - 1;
        let ws = WeightSystem::new(k, weights.clone(), FaceSpec::Hypersurface { index: i0, exponent }).unwrap();
        let fan = git_fan(&orbit_cones(&ws).unwrap()).unwrap();
        prop_assert_eq!(fan, sigma_fan(k, &weights[..i0]).unwrap());
        Ok(())
    })
}

pub fn family(name: &str, pairs: &[(&str, i64)]) -> WeightSystem {
    let p: Params = pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    gen_family(name, &p).unwrap()
}

/// Distinct deep characters drawn as random nonnegative combinations of
/// the weights; `tries` bounds the number of draws.
pub fn deep_characters(ws: &WeightSystem, count: usize, tries: usize) -> Vec<Vector> {
    let mut runner = TestRunner::new(Config::default());
    let strategy = prop::collection::vec(0i64..=4, ws.r());
    let mut out: Vec<Vector> = Vec::new();
    for _ in 0..tries {
        let coeffs = strategy.new_tree(&mut runner).unwrap().current();
        let chi = combination(ws.ambient_rank, &ws.weights, &coeffs);
        if !out.contains(&chi) && omega_deep_contains(ws, &chi) {
            out.push(chi);
            if out.len() == count {
                break;
            }
        }
    }
    out
}

/// On twenty deep characters: the semiample cone is the GIT-cone and the
/// bunch is an F-bunch.
pub fn deep_character_checks(ws: &WeightSystem, admissible: bool) -> Outcome {
    let chars = deep_characters(ws, 20, 20_000);
    if chars.len() < 20 {
        return Err(format!("only {} deep characters found", chars.len()));
    }
    for chi in chars {
        if !semiample_equals_gitcone_check(ws, &chi).map_err(|e| e.to_string())? {
            return Err(format!("semiample cone differs from the GIT-cone at {chi:?}"));
        }
        let b = if admissible {
            bunch_of_character(ws, &chi, true).map_err(|e| e.to_string())?
        } else {
            Bunch {
                system: ws.clone(),
                phi: phi_of_character(ws, &chi).map_err(|e| e.to_string())?,
            }
        };
        let check = is_f_bunch(&b).map_err(|e| e.to_string())?;
        if !check.valid {
            return Err(format!("Φ({chi:?}) is not an F-bunch: {:?}", check.diagnostics));
        }
    }
    Ok(())
}

/// Maximal pairwise-overlapping subfamilies by exhaustion over all subsets.
pub fn exhaustive_two_maximal(cones: &[Cone]) -> Vec<ConeCollection> {
    let m = cones.len();
    let overlap: Vec<Vec<bool>> = cones
        .iter()
        .map(|a| cones.iter().map(|b| a.relint_overlap(b)).collect())
        .collect();
    let clique = |s: u32| (0..m).all(|i| s >> i & 1 == 0 || (0..m).all(|j| s >> j & 1 == 0 || overlap[i][j]));
    let mut out: Vec<ConeCollection> = (1..1u32 << m)
        .filter(|&s| clique(s))
        .filter(|&s| (0..m).all(|i| s >> i & 1 == 1 || !clique(s | 1 << i)))
        .map(|s| (0..m).filter(|i| s >> i & 1 == 1).map(|i| cones[i].clone()).collect())
        .collect();
    out.sort();
    out
}

/// Clique enumeration agrees with exhaustion for families of at most 12
/// cones, and every reported collection is maximal.
pub fn cliques_vs_exhaustion(cases: u32) -> Outcome {
    let strategy = (2usize..=3).prop_flat_map(|n| {
        prop::collection::vec(vectors(n, 1..=3, 2), 1..=12).prop_map(move |gens| {
            OrbitConeSet::from_cones(n, gens.iter().map(|g| Cone::from_generators(n, g)).collect())
        })
    });
    run(cases, strategy, |omega| {
        let found = enumerate_two_maximal(&omega);
        prop_assert_eq!(&found, &exhaustive_two_maximal(omega.cones()));
        for psi in &found {
            prop_assert!(is_two_connected(psi));
            for c in omega.cones().iter().filter(|c| !psi.contains(c)) {
                let mut bigger = psi.members().to_vec();
                bigger.push(c.clone());
                prop_assert!(!is_two_connected(&ConeCollection::new(bigger)));
            }
        }
        Ok(())
    })
}
