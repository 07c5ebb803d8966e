//! Small exact helpers on machine-integer vectors.
//!
//! Coordinates are `i64`; products and sums are formed in `i128` and
//! reduced by their content before narrowing. Narrowing panics on
//! overflow instead of wrapping.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::Zero;

use crate::lattice::{self, IntMatrix};

pub type Vector = Vec<i64>;

pub fn dot(a: &[i64], b: &[i64]) -> i128 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

pub fn narrow(x: i128) -> i64 {
    i64::try_from(x).expect("cone coordinate exceeds the i64 range")
}

/// Divides by the gcd of the entries (sign kept); the zero vector is returned as is.
pub fn primitive_wide(v: &[i128]) -> Vector {
    let g = v.iter().fold(0i128, |g, &x| g.gcd(&x));
    if g == 0 {
        return v.iter().map(|_| 0).collect();
    }
    v.iter().map(|&x| narrow(x / g)).collect()
}

pub fn primitive(v: &[i64]) -> Vector {
    let w: Vec<i128> = v.iter().map(|&x| x as i128).collect();
    primitive_wide(&w)
}

pub fn is_zero(v: &[i64]) -> bool {
    v.iter().all(|&x| x == 0)
}

pub fn neg(v: &[i64]) -> Vector {
    v.iter().map(|&x| -x).collect()
}

/// `a * x + b * y`, made primitive.
pub fn combine(a: i128, x: &[i64], b: i128, y: &[i64]) -> Vector {
    let w: Vec<i128> = x
        .iter()
        .zip(y)
        .map(|(&xi, &yi)| a * xi as i128 + b * yi as i128)
        .collect();
    primitive_wide(&w)
}

/// Lexicographic sign normalisation: first nonzero entry positive.
pub fn lex_positive(v: Vector) -> Vector {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => neg(&v),
        _ => v,
    }
}

pub type Q = Ratio<i128>;

/// Reduced row echelon form over Q, pivoting only in the first `cols`
/// columns (trailing columns are carried along). Returns the pivot columns.
pub fn rref(rows: &mut [Vec<Q>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c];
                let pivot = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot) {
                    *x -= *p * f;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_q(rows: &[Vector]) -> Vec<Vec<Q>> {
    rows.iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x as i128)).collect())
        .collect()
}

/// Clears denominators and makes primitive.
pub fn q_to_primitive(v: &[Q]) -> Vector {
    let l = v.iter().fold(1i128, |l, x| l.lcm(x.denom()));
    let w: Vec<i128> = v.iter().map(|x| x.numer() * (l / x.denom())).collect();
    primitive_wide(&w)
}

pub fn rank(rows: &[Vector], cols: usize) -> usize {
    let mut q = to_q(rows);
    rref(&mut q, cols).len()
}

/// Some integer basis of `{x : rows * x = 0}` (not necessarily saturated).
pub fn nullspace(rows: &[Vector], cols: usize) -> Vec<Vector> {
    let mut q = to_q(rows);
    let pivots = rref(&mut q, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Q::zero(); cols];
            v[f] = Q::from_integer(1);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -q[r][f];
            }
            q_to_primitive(&v)
        })
        .collect()
}

fn sublattice_rows(s: &lattice::Sublattice) -> Vec<Vector> {
    s.basis()
        .to_i64_rows()
        .expect("lattice basis entry exceeds the i64 range")
}

/// Canonical saturated basis of `span(vectors)`.
pub fn saturated_basis(vectors: &[Vector], cols: usize) -> Vec<Vector> {
    let nonzero: Vec<&Vector> = vectors.iter().filter(|v| !is_zero(v)).collect();
    if nonzero.is_empty() {
        return Vec::new();
    }
    sublattice_rows(&lattice::saturation(&nonzero, cols))
}

/// Canonical saturated basis of `span(vectors)^⊥`.
pub fn complement_basis(vectors: &[Vector], cols: usize) -> Vec<Vector> {
    if vectors.iter().all(|v| is_zero(v)) {
        return sublattice_rows(&lattice::Sublattice::full(cols));
    }
    let m = IntMatrix::from_rows(cols, vectors);
    let k = lattice::right_kernel(&m);
    sublattice_rows(&lattice::Sublattice::from_matrix(&k))
}

/// Orthogonal projection of `v` onto `span(basis)` (basis linearly
/// independent), returned as a primitive integer vector in the same
/// direction. The sign of the projection is preserved.
pub fn project_onto(basis: &[Vector], v: &[i64]) -> Vector {
    if basis.is_empty() {
        return vec![0; v.len()];
    }
    let k = basis.len();
    // Gram system G c = B v
    let mut aug: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            let mut row: Vec<Q> = (0..k)
                .map(|j| Q::from_integer(dot(&basis[i], &basis[j])))
                .collect();
            row.push(Q::from_integer(dot(&basis[i], v)));
            row
        })
        .collect();
    let pivots = rref(&mut aug, k);
    debug_assert_eq!(pivots.len(), k, "projection basis is dependent");
    let n = v.len();
    let mut p = vec![Q::zero(); n];
    for i in 0..k {
        let c = aug[i][k];
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            p[j] += c * Q::from_integer(basis[i][j] as i128);
        }
    }
    q_to_primitive(&p)
}

/// Component of `v` orthogonal to `span(basis)`, primitive.
pub fn project_off(basis: &[Vector], v: &[i64]) -> Vector {
    if basis.is_empty() {
        return primitive(v);
    }
    let k = basis.len();
    let mut aug: Vec<Vec<Q>> = (0..k)
        .map(|i| {
            let mut row: Vec<Q> = (0..k)
                .map(|j| Q::from_integer(dot(&basis[i], &basis[j])))
                .collect();
            row.push(Q::from_integer(dot(&basis[i], v)));
            row
        })
        .collect();
    rref(&mut aug, k);
    let n = v.len();
    let mut p: Vec<Q> = v.iter().map(|&x| Q::from_integer(x as i128)).collect();
    for i in 0..k {
        let c = aug[i][k];
        if c.is_zero() {
            continue;
        }
        for j in 0..n {
            p[j] -= c * Q::from_integer(basis[i][j] as i128);
        }
    }
    q_to_primitive(&p)
}

/// Fixed-width bit set over row indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bits(Vec<u64>);

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64).max(1)])
    }

    pub fn with_prefix(len: usize, prefix: usize) -> Self {
        let mut b = Bits::new(len);
        for i in 0..prefix {
            b.insert(i);
        }
        b
    }

    pub fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    pub fn or(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a | b).collect())
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    pub fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}
