//! Dense exact matrices over the integers and the rationals.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rat::{primitive_from_rat, IntVec, Rat};
use crate::error::{Error, Result};

/// Integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<String>>", into = "Vec<Vec<String>>")]
pub struct IntMat {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMat {
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.as_ref().len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.as_ref().len(), c, "ragged matrix");
            entries.extend(row.as_ref().iter().map(|&x| BigInt::from(x)));
        }
        IntMat { rows: r, cols: c, entries }
    }

    pub fn from_big_rows(rows: Vec<IntVec>, cols: usize) -> Self {
        let r = rows.len();
        let mut entries = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix");
            entries.extend(row);
        }
        IntMat { rows: r, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat { rows: n, cols: n, entries: vec![BigInt::zero(); n * n] };
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMat { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> IntVec {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    /// The square submatrix formed by the given columns, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> IntMat {
        let mut entries = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            for &j in idx {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMat { rows: self.rows, cols: idx.len(), entries }
    }

    pub fn transpose(&self) -> IntMat {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMat { rows: self.cols, cols: self.rows, entries }
    }

    pub fn mul(&self, other: &IntMat) -> IntMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> IntVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_rat_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + b * a)
            })
            .collect()
    }

    pub fn to_rat(&self) -> RatMat {
        RatMat {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|x| Rat::from_integer(x.clone())).collect(),
        }
    }

    pub fn det(&self) -> Rat {
        self.to_rat().det()
    }

    pub fn rank(&self) -> usize {
        self.to_rat().rank()
    }

    /// Whether some covector is strictly positive on every column, which is
    /// equivalent to `ker A ∩ R^N_{≥0} = 0`.
    pub fn is_pointed(&self) -> bool {
        crate::cone::ConeH::from_generators(self.rows, &self.columns())
            .map(|c| c.lineality().is_empty())
            .unwrap_or(false)
    }
}

impl fmt::Debug for IntMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.to_string()).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

impl From<IntMat> for Vec<Vec<String>> {
    fn from(m: IntMat) -> Self {
        (0..m.rows)
            .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
            .collect()
    }
}

impl TryFrom<Vec<Vec<String>>> for IntMat {
    type Error = Error;

    fn try_from(rows: Vec<Vec<String>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut big = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() != cols {
                return Err(Error::Parse("ragged matrix".into()));
            }
            let parsed: Result<IntVec> = row
                .iter()
                .map(|s| s.parse().map_err(|_| Error::Parse(format!("bad integer {s:?}"))))
                .collect();
            big.push(parsed?);
        }
        Ok(IntMat::from_big_rows(big, cols))
    }
}

/// Rational matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl RatMat {
    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let entries: Vec<Rat> = rows
            .into_iter()
            .flat_map(|row| {
                assert_eq!(row.len(), c, "ragged matrix");
                row
            })
            .collect();
        RatMat { rows: r, cols: c, entries }
    }

    pub fn identity(n: usize) -> Self {
        IntMat::identity(n).to_rat()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows);
        let mut entries = vec![Rat::zero(); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    entries[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        RatMat { rows: self.rows, cols: other.cols, entries }
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn mul_int_vec(&self, v: &[BigInt]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    /// Gaussian elimination; returns the echelon form, the pivot columns and
    /// the sign/scale accumulated for the determinant.
    fn eliminate(&self) -> (Vec<Vec<Rat>>, Vec<usize>, Rat) {
        let mut m: Vec<Vec<Rat>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut factor = Rat::one();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            if p != r {
                m.swap(p, r);
                factor = -factor;
            }
            let pivot = m[r][c].clone();
            factor *= &pivot;
            for x in m[r].iter_mut() {
                *x /= &pivot;
            }
            for i in 0..self.rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..self.cols {
                        let t = &m[r][j] * &f;
                        m[i][j] -= t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots, factor)
    }

    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let (_, pivots, factor) = self.eliminate();
        if pivots.len() < self.rows {
            Rat::zero()
        } else {
            factor
        }
    }

    pub fn rank(&self) -> usize {
        self.eliminate().1.len()
    }

    /// Reduced row echelon form with zero rows dropped.
    pub fn rref(&self) -> RatMat {
        let (m, pivots, _) = self.eliminate();
        RatMat::from_rows_sized(m.into_iter().take(pivots.len()).collect(), self.cols)
    }

    fn from_rows_sized(rows: Vec<Vec<Rat>>, cols: usize) -> RatMat {
        let r = rows.len();
        RatMat { rows: r, cols, entries: rows.into_iter().flatten().collect() }
    }

    pub fn invert(&self) -> Result<RatMat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let n = self.rows;
        let mut aug: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut row = self.row(i).to_vec();
                row.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| !aug[i][c].is_zero()).ok_or(Error::SingularMatrix)?;
            aug.swap(p, c);
            let pivot = aug[c][c].clone();
            for x in aug[c].iter_mut() {
                *x /= &pivot;
            }
            for i in 0..n {
                if i != c && !aug[i][c].is_zero() {
                    let f = aug[i][c].clone();
                    for j in c..2 * n {
                        let t = &aug[c][j] * &f;
                        aug[i][j] -= t;
                    }
                }
            }
        }
        Ok(RatMat::from_rows(aug.into_iter().map(|row| row[n..].to_vec()).collect()))
    }

    /// A basis of `{x : M x = 0}` in canonical form: the rows of the reduced
    /// echelon form of the basis, each scaled to a primitive integer vector.
    pub fn kernel(&self) -> Vec<IntVec> {
        let (m, pivots, _) = self.eliminate();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis: Vec<Vec<Rat>> = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[f] = Rat::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return Vec::new();
        }
        RatMat::from_rows(basis)
            .rref()
            .entries
            .chunks(self.cols)
            .map(primitive_from_rat)
            .collect()
    }
}

/// Rank of a list of integer vectors, computed fraction-free.
pub fn rank_of(vectors: &[IntVec]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let cols = first.len();
    let mut m: Vec<IntVec> = vectors.to_vec();
    let mut r = 0;
    for c in 0..cols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let (head, tail) = m.split_at_mut(r + 1);
        let pivot_row = &head[r];
        for row in tail.iter_mut() {
            if row[c].is_zero() {
                continue;
            }
            let a = pivot_row[c].clone();
            let b = row[c].clone();
            for j in c..cols {
                row[j] = &row[j] * &a - &pivot_row[j] * &b;
            }
            super::rat::primitive(row);
        }
        r += 1;
    }
    r
}

/// `|det|` of the square matrix formed by some columns.
pub fn abs_det_columns(m: &IntMat, idx: &[usize]) -> BigInt {
    m.select_columns(idx).det().numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::{int, rat};

    #[test]
    fn identity_and_singular() {
        assert_eq!(IntMat::identity(8).det(), int(1));
        let m = IntMat::from_rows(&[[1, 2, 3], [1, 2, 3], [0, 1, 5]]);
        assert_eq!(m.det(), int(0));
        assert_eq!(IntMat::zeros(3, 4).rank(), 0);
    }

    #[test]
    fn diagonal_inverse() {
        let mut rows = vec![vec![Rat::zero(); 4]; 4];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = int(if i == 0 { 2 } else { 1 });
        }
        let inv = RatMat::from_rows(rows).invert().unwrap();
        assert_eq!(inv.get(0, 0), &rat(1, 2));
        assert_eq!(inv.get(3, 3), &int(1));
        assert_eq!(RatMat::identity(5).invert().unwrap(), RatMat::identity(5));
    }

    #[test]
    fn singular_inverse_is_an_error() {
        let m = IntMat::from_rows(&[[1, 2], [2, 4]]).to_rat();
        assert_eq!(m.invert(), Err(Error::SingularMatrix));
    }

    #[test]
    fn kernel_is_canonical() {
        let m = IntMat::from_rows(&[[1, 1, 1]]).to_rat();
        let k = m.kernel();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.mul_int_vec(v).iter().all(Zero::is_zero));
        }
        let m2 = IntMat::from_rows(&[[2, 2, 2]]).to_rat();
        assert_eq!(m2.kernel(), k);
    }

    #[test]
    fn fraction_free_rank_agrees() {
        let m = IntMat::from_rows(&[[1, 2, 3], [2, 4, 6], [0, 1, 5], [1, 3, 8]]);
        assert_eq!(rank_of(&(0..4).map(|i| m.row(i).to_vec()).collect::<Vec<_>>()), 2);
        assert_eq!(m.rank(), 2);
    }
}
