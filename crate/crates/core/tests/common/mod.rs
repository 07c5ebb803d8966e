#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

pub type Vector = Vec<i64>;

pub fn q(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// Feasibility of `a z = b, z >= 0` by the two-phase simplex method with
/// Bland's rule, in exact arithmetic.
pub fn lp_feasible(a: &[Vec<BigRational>], b: &[BigRational]) -> bool {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let width = n + m + 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(m);
    for i in 0..m {
        let flip = b[i].is_negative();
        let mut row: Vec<BigRational> = a[i].iter().map(|x| if flip { -x } else { x.clone() }).collect();
        row.extend((0..m).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
        row.push(if flip { -&b[i] } else { b[i].clone() });
        t.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    let mut obj = vec![BigRational::zero(); width];
    for row in &t {
        for j in (0..n).chain(std::iter::once(width - 1)) {
            obj[j] -= &row[j];
        }
    }
    loop {
        let Some(enter) = (0..width - 1).find(|&j| obj[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, BigRational)> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][width - 1] / &t[i][enter];
                let better = match &leave {
                    None => true,
                    Some((l, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*l]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((p, _)) = leave else {
            break;
        };
        let piv = t[p][enter].clone();
        for x in t[p].iter_mut() {
            *x /= &piv;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (x, y) in row.iter_mut().zip(&prow) {
                    *x -= &f * y;
                }
            }
        }
        let f = obj[enter].clone();
        for (x, y) in obj.iter_mut().zip(&prow) {
            *x -= &f * y;
        }
        basis[p] = enter;
    }
    obj[width - 1].is_zero()
}

/// `x` is a nonnegative combination of `gens`.
pub fn lp_in_cone(n: usize, gens: &[Vector], x: &[i64]) -> bool {
    let a: Vec<Vec<BigRational>> = (0..n).map(|i| gens.iter().map(|g| q(g[i])).collect()).collect();
    let b: Vec<BigRational> = x.iter().map(|&v| q(v)).collect();
    lp_feasible(&a, &b)
}

/// Some point is a strictly positive combination of `ga` and of `gb`.
pub fn lp_relint_overlap(n: usize, ga: &[Vector], gb: &[Vector]) -> bool {
    // λ = 1 + z, μ = 1 + z', z, z' >= 0
    let a: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            ga.iter()
                .map(|g| q(g[i]))
                .chain(gb.iter().map(|g| q(-g[i])))
                .collect()
        })
        .collect();
    let b: Vec<BigRational> = (0..n)
        .map(|i| q(gb.iter().map(|g| g[i]).sum::<i64>() - ga.iter().map(|g| g[i]).sum::<i64>()))
        .collect();
    lp_feasible(&a, &b)
}

pub fn vectors(n: usize, count: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(prop::collection::vec(-bound..=bound, n), count)
}

/// Weights with a positive first coordinate, so the weight cone is pointed.
pub fn pointed_weights(k: usize, r: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<Vector>> {
    prop::collection::vec(
        (1i64..=3, prop::collection::vec(-2i64..=2, k - 1)).prop_map(|(h, mut rest)| {
            rest.insert(0, h);
            rest
        }),
        r,
    )
}

/// Nonnegative combination of `gens` with the given coefficients.
pub fn combination(n: usize, gens: &[Vector], coeffs: &[i64]) -> Vector {
    (0..n)
        .map(|j| gens.iter().zip(coeffs).map(|(g, c)| g[j] * c).sum())
        .collect()
}

/// Cones of all subsets, computed directly.
pub fn subset_cones(n: usize, weights: &[Vector]) -> Vec<gitq::Cone> {
    let r = weights.len();
    (0..1u64 << r)
        .map(|s| {
            let gens: Vec<Vector> = (0..r).filter(|i| s >> i & 1 == 1).map(|i| weights[i].clone()).collect();
            gitq::Cone::from_generators(n, &gens)
        })
        .collect()
}

/// Intersection of all subset cones containing `chi` by direct test.
pub fn git_cone_oracle(n: usize, weights: &[Vector], chi: &[i64]) -> gitq::Cone {
    let containing: Vec<gitq::Cone> = subset_cones(n, weights)
        .into_iter()
        .filter(|c| lp_in_cone(n, c.generators().as_slice(), chi))
        .collect();
    gitq::Cone::intersect_all(n, containing.iter())
}
