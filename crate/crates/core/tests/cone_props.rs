mod common;
mod suites;

use common::{lp_in_cone, lp_relint_overlap, vectors, Vector};
use gitq::Cone;
use proptest::prelude::*;

fn cone_case(max_n: usize) -> impl Strategy<Value = (usize, Vec<Vector>)> {
    (1..=max_n).prop_flat_map(|n| (Just(n), vectors(n, 0..=7, 3)))
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn h_description_matches_lp((n, gens) in cone_case(4),
                                coeffs in prop::collection::vec(0i64..=3, 7),
                                raw in prop::collection::vec(prop::collection::vec(-4i64..=4, 4), 6)) {
        let c = Cone::from_generators(n, &gens);
        let mut points: Vec<Vector> = raw.into_iter().map(|mut v| { v.truncate(n); v }).collect();
        points.push(common::combination(n, &gens, &coeffs[..gens.len()]));
        for x in points {
            let by_h = c.facet_normals().iter().all(|a| dot(a, &x) >= 0)
                && c.span_equations().iter().all(|e| dot(e, &x) == 0);
            prop_assert_eq!(by_h, lp_in_cone(n, &gens, &x), "{:?}", x);
        }
    }

    #[test]
    fn facets_are_faces((n, gens) in cone_case(5)) {
        let c = Cone::from_generators(n, &gens);
        for f in c.facets() {
            prop_assert!(f.is_face_of(&c));
            prop_assert_eq!(c.intersect(&f), f.clone());
            prop_assert_eq!(f.dim() + 1, c.dim());
        }
    }

    #[test]
    fn relint_overlap_matches_lp((n, ga, gb) in (1usize..=4).prop_flat_map(|n| {
        (Just(n), vectors(n, 0..=4, 2), vectors(n, 0..=4, 2))
    })) {
        let a = Cone::from_generators(n, &ga);
        let b = Cone::from_generators(n, &gb);
        let overlap = a.relint_overlap(&b);
        prop_assert_eq!(overlap, b.relint_overlap(&a));
        prop_assert!(a.relint_overlap(&a));
        prop_assert_eq!(overlap, lp_relint_overlap(n, &ga, &gb));
    }
}

#[test]
fn double_description_round_trip() {
    suites::dd_round_trip(200).unwrap();
}
