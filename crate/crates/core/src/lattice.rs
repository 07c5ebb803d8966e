//! Exact integer linear algebra: Hermite and Smith normal forms and
//! sublattices of `Z^n`.
//!
//! Everything here works over arbitrary-precision integers. Row-style
//! Hermite normal form is the canonical representation of a sublattice:
//! pivots are positive, pivot columns strictly increase, and every entry
//! above a pivot is reduced into `[0, pivot)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// Dense integer matrix in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from machine-integer rows. `cols` is needed so that an
    /// empty row list still has a shape.
    pub fn from_rows<R: AsRef<[i64]>>(cols: usize, rows: &[R]) -> Self {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "row {i} has length {} != {cols}", r.len());
            for (j, x) in r.iter().enumerate() {
                m[(i, j)] = BigInt::from(*x);
            }
        }
        m
    }

    pub fn from_big_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            data.extend(r);
        }
        IntMatrix {
            rows: n,
            cols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Rows converted to `i64`; `None` if some entry does not fit.
    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| i64::try_from(x).ok())
                    .collect::<Option<Vec<_>>>()
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * &other[(k, j)];
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self[(src, j)] * q;
            self[(dst, j)] -= v;
        }
    }

    fn sub_col_multiple(&mut self, dst: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self[(i, src)] * q;
            self[(i, dst)] -= v;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -&self[(i, j)];
            self[(i, j)] = v;
        }
    }

    /// Replaces rows (p, q) by (s*p + t*q, u*p + v*q).
    fn combine_rows(&mut self, p: usize, q: usize, s: &BigInt, t: &BigInt, u: &BigInt, v: &BigInt) {
        for j in 0..self.cols {
            let a = self[(p, j)].clone();
            let b = self[(q, j)].clone();
            self[(p, j)] = s * &a + t * &b;
            self[(q, j)] = u * &a + v * &b;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Row-style Hermite normal form.
///
/// Returns `(h, t)` with `h = t * m`, `t` unimodular. The nonzero rows of `h`
/// come first and form the canonical basis of the row lattice of `m`.
pub fn hermite_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let mut h = m.clone();
    let mut t = IntMatrix::identity(m.rows);
    let mut pivot_row = 0;
    for col in 0..m.cols {
        if pivot_row == m.rows {
            break;
        }
        // Extended-gcd elimination keeps every step unimodular.
        for i in pivot_row + 1..m.rows {
            if h[(i, col)].is_zero() {
                continue;
            }
            let a = h[(pivot_row, col)].clone();
            let b = h[(i, col)].clone();
            let eg = a.extended_gcd(&b);
            let (g, s, r) = (eg.gcd, eg.x, eg.y);
            let u = -(&b / &g);
            let v = &a / &g;
            h.combine_rows(pivot_row, i, &s, &r, &u, &v);
            t.combine_rows(pivot_row, i, &s, &r, &u, &v);
        }
        if h[(pivot_row, col)].is_zero() {
            continue;
        }
        if h[(pivot_row, col)].is_negative() {
            h.negate_row(pivot_row);
            t.negate_row(pivot_row);
        }
        let p = h[(pivot_row, col)].clone();
        for i in 0..pivot_row {
            let q = h[(i, col)].div_floor(&p);
            h.sub_row_multiple(i, pivot_row, &q);
            t.sub_row_multiple(i, pivot_row, &q);
        }
        pivot_row += 1;
    }
    (h, t)
}

/// Rank of an integer matrix (over Q).
pub fn rank(m: &IntMatrix) -> usize {
    let (h, _) = hermite_normal_form(m);
    (0..h.rows).filter(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
}

/// Nonzero diagonal entries of the Smith normal form, each dividing the next.
pub fn smith_invariants(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| a[(i, j)].abs() < a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        loop {
            let p = a[(t, t)].clone();
            let mut changed = false;
            for i in t + 1..rows {
                let q = a[(i, t)].div_floor(&p);
                a.sub_row_multiple(i, t, &q);
                if !a[(i, t)].is_zero() {
                    changed = true;
                }
            }
            for j in t + 1..cols {
                let q = a[(t, j)].div_floor(&p);
                a.sub_col_multiple(j, t, &q);
                if !a[(t, j)].is_zero() {
                    changed = true;
                }
            }
            if changed {
                // a smaller remainder exists in row/column t; move it to the pivot
                let mut best = (t, t);
                for i in t..rows {
                    if !a[(i, t)].is_zero() && a[(i, t)].abs() < a[best].abs() {
                        best = (i, t);
                    }
                }
                for j in t..cols {
                    if !a[(t, j)].is_zero() && a[(t, j)].abs() < a[best].abs() {
                        best = (t, j);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                continue;
            }
            // divisibility of the trailing block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let neg_one = -BigInt::one();
                    a.sub_row_multiple(t, i, &neg_one);
                }
                None => break,
            }
        }
        out.push(a[(t, t)].abs());
        t += 1;
    }
    out
}

/// Integer basis of the left kernel `{x : x * m = 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let (h, t) = hermite_normal_form(m);
    let rows: Vec<Vec<BigInt>> = (0..h.rows)
        .filter(|&i| h.row(i).iter().all(Zero::is_zero))
        .map(|i| t.row(i).to_vec())
        .collect();
    IntMatrix::from_big_rows(m.rows, rows)
}

/// Integer basis of the right kernel `{x : m * x = 0}`.
pub fn right_kernel(m: &IntMatrix) -> IntMatrix {
    left_kernel(&m.transpose())
}

/// A sublattice of `Z^n`, stored by its Hermite basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SublatticeRepr", into = "SublatticeRepr")]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
}

#[derive(Serialize, Deserialize)]
struct SublatticeRepr {
    ambient_rank: usize,
    basis: Vec<Vec<String>>,
}

impl From<Sublattice> for SublatticeRepr {
    fn from(s: Sublattice) -> Self {
        SublatticeRepr {
            ambient_rank: s.ambient_rank,
            basis: s
                .basis
                .to_rows()
                .into_iter()
                .map(|r| r.iter().map(|x| x.to_string()).collect())
                .collect(),
        }
    }
}

impl TryFrom<SublatticeRepr> for Sublattice {
    type Error = String;
    fn try_from(r: SublatticeRepr) -> Result<Self, String> {
        let rows = r
            .basis
            .iter()
            .map(|row| {
                if row.len() != r.ambient_rank {
                    return Err(format!("basis row of length {} in rank {}", row.len(), r.ambient_rank));
                }
                row.iter()
                    .map(|x| x.parse::<BigInt>().map_err(|e| e.to_string()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Sublattice::from_matrix(&IntMatrix::from_big_rows(
            r.ambient_rank,
            rows,
        )))
    }
}

impl Sublattice {
    pub fn zero(ambient_rank: usize) -> Self {
        Sublattice {
            ambient_rank,
            basis: IntMatrix::zeros(0, ambient_rank),
        }
    }

    pub fn full(ambient_rank: usize) -> Self {
        Sublattice {
            ambient_rank,
            basis: IntMatrix::identity(ambient_rank),
        }
    }

    /// Lattice spanned by the rows of `m`.
    pub fn from_matrix(m: &IntMatrix) -> Self {
        let (h, _) = hermite_normal_form(m);
        let rows: Vec<Vec<BigInt>> = (0..h.rows)
            .map(|i| h.row(i).to_vec())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        Sublattice {
            ambient_rank: m.cols,
            basis: IntMatrix::from_big_rows(m.cols, rows),
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.rows
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn smith_invariants(&self) -> Vec<BigInt> {
        smith_invariants(&self.basis)
    }

    /// `rank = ambient_rank` and every Smith invariant equals one.
    pub fn is_full(&self) -> bool {
        self.rank() == self.ambient_rank && self.smith_invariants().iter().all(One::is_one)
    }

    /// Index in `Z^n`; `None` when the rank is smaller than `n`.
    pub fn index(&self) -> Option<BigInt> {
        if self.rank() < self.ambient_rank {
            return None;
        }
        Some(self.smith_invariants().iter().product())
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.ambient_rank);
        let mut v = v.to_vec();
        let mut col = 0;
        for i in 0..self.basis.rows {
            let row = self.basis.row(i);
            let pivot = (col..self.ambient_rank)
                .find(|&j| !row[j].is_zero())
                .expect("Hermite basis row without pivot");
            if v[col..pivot].iter().any(|x| !x.is_zero()) {
                return false;
            }
            let (q, r) = v[pivot].div_rem(&row[pivot]);
            if !r.is_zero() {
                return false;
            }
            for j in pivot..self.ambient_rank {
                v[j] -= &q * &row[j];
            }
            col = pivot + 1;
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&x| BigInt::from(x)).collect();
        self.contains(&v)
    }
}

/// Sublattice generated by `vectors` inside `Z^ambient_rank`.
pub fn lattice_span<V: AsRef<[i64]>>(vectors: &[V], ambient_rank: usize) -> Sublattice {
    Sublattice::from_matrix(&IntMatrix::from_rows(ambient_rank, vectors))
}

/// Intersection of two sublattices of the same ambient lattice.
pub fn lattice_intersect(a: &Sublattice, b: &Sublattice) -> Sublattice {
    assert_eq!(a.ambient_rank, b.ambient_rank, "ambient ranks differ");
    let n = a.ambient_rank;
    if a.rank() == 0 || b.rank() == 0 {
        return Sublattice::zero(n);
    }
    // x*A = y*B  <=>  (x, -y) lies in the left kernel of [A; B]
    let mut stacked = a.basis.to_rows();
    stacked.extend(b.basis.to_rows());
    let m = IntMatrix::from_big_rows(n, stacked);
    let kernel = left_kernel(&m);
    let ra = a.rank();
    let mut rows = Vec::with_capacity(kernel.rows());
    for k in 0..kernel.rows() {
        let coeffs = &kernel.row(k)[..ra];
        let mut v = vec![BigInt::zero(); n];
        for (c, i) in coeffs.iter().zip(0..ra) {
            if c.is_zero() {
                continue;
            }
            for (vj, bj) in v.iter_mut().zip(a.basis.row(i)) {
                *vj += c * bj;
            }
        }
        rows.push(v);
    }
    Sublattice::from_matrix(&IntMatrix::from_big_rows(n, rows))
}

/// The saturation `span_Q(vectors) ∩ Z^n`, as a canonical Hermite basis.
pub fn saturation<V: AsRef<[i64]>>(vectors: &[V], ambient_rank: usize) -> Sublattice {
    let m = IntMatrix::from_rows(ambient_rank, vectors);
    let perp = right_kernel(&m);
    if perp.rows() == 0 {
        return Sublattice::full(ambient_rank);
    }
    Sublattice::from_matrix(&right_kernel(&perp))
}

/// Canonical integer basis of the orthogonal complement of `span(vectors)`.
pub fn orthogonal_complement<V: AsRef<[i64]>>(vectors: &[V], ambient_rank: usize) -> Sublattice {
    let m = IntMatrix::from_rows(ambient_rank, vectors);
    Sublattice::from_matrix(&right_kernel(&m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn hnf_identity() {
        let id = IntMatrix::identity(2);
        let (h, t) = hermite_normal_form(&id);
        assert_eq!(h, id);
        assert_eq!(t, id);
    }

    #[test]
    fn hnf_of_redundant_generators_is_full_lattice() {
        let m = IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 1], vec![15, 3]]);
        let (h, t) = hermite_normal_form(&m);
        assert_eq!(t.mul(&m), h);
        assert_eq!(h.to_rows()[..2], big(&[vec![1, 0], vec![0, 1]])[..]);
        assert!(h.row(2).iter().all(Zero::is_zero));
    }

    #[test]
    fn hnf_two_by_two() {
        let m = IntMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]);
        let (h, t) = hermite_normal_form(&m);
        assert_eq!(h.to_rows(), big(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(t.mul(&m), h);
        assert_eq!(t.determinant().abs(), BigInt::one());
    }

    #[test]
    fn hnf_zero_matrix() {
        let m = IntMatrix::zeros(2, 3);
        let (h, _) = hermite_normal_form(&m);
        assert!(h.is_zero());
    }

    #[test]
    fn smith_examples() {
        let to = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(smith_invariants(&IntMatrix::identity(3)), to(&[1, 1, 1]));
        let d = IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 4]]);
        assert_eq!(smith_invariants(&d), to(&[2, 4]));
        let m = IntMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]);
        assert_eq!(smith_invariants(&m), to(&[2, 4]));
        let m = IntMatrix::from_rows(2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_invariants(&m), to(&[1, 6]));
        assert!(smith_invariants(&IntMatrix::zeros(2, 2)).is_empty());
    }

    #[test]
    fn span_examples() {
        assert!(lattice_span(&[vec![1, 0], vec![0, 1]], 2).is_full());
        let sl4 = [
            vec![2, 0],
            vec![3, 0],
            vec![4, 0],
            vec![5, 0],
            vec![6, 0],
            vec![0, 1],
            vec![1, 1],
            vec![2, 1],
            vec![3, 1],
            vec![4, 1],
            vec![15, 3],
        ];
        assert!(lattice_span(&sl4, 2).is_full());
        let s = lattice_span(&[vec![2, 0], vec![0, 2]], 2);
        assert_eq!(s.rank(), 2);
        assert!(!s.is_full());
        assert_eq!(s.smith_invariants(), vec![BigInt::from(2), BigInt::from(2)]);
        assert_eq!(s.index(), Some(BigInt::from(4)));
        let empty: [Vec<i64>; 0] = [];
        assert_eq!(lattice_span(&empty, 3).rank(), 0);
    }

    #[test]
    fn intersect_examples() {
        let full = Sublattice::full(2);
        assert_eq!(lattice_intersect(&full, &full), full);
        let a = lattice_span(&[vec![1, 0]], 2);
        let b = lattice_span(&[vec![0, 1]], 2);
        assert_eq!(lattice_intersect(&a, &b).rank(), 0);
        let a = lattice_span(&[vec![1, 1]], 2);
        let b = lattice_span(&[vec![1, -1]], 2);
        assert_eq!(lattice_intersect(&a, &b).rank(), 0);
        // 2Z x Z  ∩  Z x 3Z = 2Z x 3Z
        let a = lattice_span(&[vec![2, 0], vec![0, 1]], 2);
        let b = lattice_span(&[vec![1, 0], vec![0, 3]], 2);
        assert_eq!(lattice_intersect(&a, &b), lattice_span(&[vec![2, 0], vec![0, 3]], 2));
    }

    #[test]
    fn membership() {
        let s = lattice_span(&[vec![2, 4], vec![6, 8]], 2);
        assert!(s.contains_i64(&[2, 0]));
        assert!(s.contains_i64(&[0, 4]));
        assert!(!s.contains_i64(&[1, 0]));
        assert!(!s.contains_i64(&[0, 2]));
        let line = lattice_span(&[vec![1, 1, 0]], 3);
        assert!(line.contains_i64(&[-3, -3, 0]));
        assert!(!line.contains_i64(&[1, 0, 0]));
    }

    #[test]
    fn saturation_and_complement() {
        let s = saturation(&[vec![2, 2, 0]], 3);
        assert_eq!(s, lattice_span(&[vec![1, 1, 0]], 3));
        let c = orthogonal_complement(&[vec![1, 1, 0]], 3);
        assert_eq!(c.rank(), 2);
        for i in 0..c.rank() {
            let r = c.basis().row(i);
            assert_eq!(&r[0] + &r[1], BigInt::zero());
        }
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(3, &[vec![2, 0, 1], vec![1, 3, 2], vec![1, 1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(6));
        let m = IntMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(m.determinant(), BigInt::from(-1));
    }
}
