//! Double description conversion from inequalities to generators.
//!
//! Input: `{x : <a_i, x> >= 0, <e_j, x> = 0}`. Output: extreme rays modulo
//! the lineality space together with a basis of that space. Rays are kept
//! irredundant throughout; adjacency is decided combinatorially from the
//! sets of tight inequalities.

use crate::arith::{self, combine, dot, is_zero, Bits, Vector};

pub(crate) struct Generators {
    pub rays: Vec<Vector>,
    pub lineality: Vec<Vector>,
}

struct Ray {
    v: Vector,
    tight: Bits,
}

pub(crate) fn generators(n: usize, ineqs: &[Vector], eqs: &[Vector]) -> Generators {
    let m = ineqs.len();
    let mut lineality: Vec<Vector> = if eqs.iter().all(|e| is_zero(e)) {
        (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect()
    } else {
        arith::nullspace(eqs, n)
    };
    let mut rays: Vec<Ray> = Vec::new();

    for (i, a) in ineqs.iter().enumerate() {
        if is_zero(a) {
            for r in rays.iter_mut() {
                r.tight.insert(i);
            }
            continue;
        }
        if let Some(pos) = lineality.iter().position(|l| dot(a, l) != 0) {
            // Split off one lineality direction; it becomes a ray.
            let mut l = lineality.swap_remove(pos);
            if dot(a, &l) < 0 {
                l = arith::neg(&l);
            }
            let al = dot(a, &l);
            for other in lineality.iter_mut() {
                let ao = dot(a, other);
                if ao != 0 {
                    *other = combine(al, other, -ao, &l);
                }
            }
            for r in rays.iter_mut() {
                let ar = dot(a, &r.v);
                if ar != 0 {
                    r.v = combine(al, &r.v, -ar, &l);
                }
                r.tight.insert(i);
            }
            rays.push(Ray {
                v: l,
                tight: Bits::with_prefix(m, i),
            });
            continue;
        }

        let vals: Vec<i128> = rays.iter().map(|r| dot(a, &r.v)).collect();
        if vals.iter().all(|&v| v >= 0) {
            for (r, &v) in rays.iter_mut().zip(&vals) {
                if v == 0 {
                    r.tight.insert(i);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k] < 0).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.and(&rays[q].tight);
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && common.is_subset(&r.tight));
                if blocked {
                    continue;
                }
                let v = combine(vals[p], &rays[q].v, -vals[q], &rays[p].v);
                let mut tight = common;
                tight.insert(i);
                fresh.push(Ray { v, tight });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
        for (r, &v) in rays.into_iter().zip(&vals) {
            if v > 0 {
                next.push(r);
            } else if v == 0 {
                let mut r = r;
                r.tight.insert(i);
                next.push(r);
            }
        }
        next.extend(fresh);
        rays = next;
    }

    Generators {
        rays: rays.into_iter().map(|r| r.v).collect(),
        lineality,
    }
}
