use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{CycScalar, ExactError};

/// Dense row-major matrix of exact scalars.
///
/// A linear map `V -> W` with `dim V = m`, `dim W = n` is an `n x m` matrix.
/// Tensor bases are lexicographic: `e_i (x) f_j` has index `i * dim F + j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<CycScalar>,
}

impl Mat {
    pub fn new(rows: usize, cols: usize, data: Vec<CycScalar>) -> Result<Mat, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::Shape { op: "new", left: (rows, cols), right: (data.len(), 1) });
        }
        Ok(Mat { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![CycScalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = CycScalar::one();
        }
        m
    }

    /// The `1 x 1` matrix holding `c`.
    pub fn scalar(c: CycScalar) -> Mat {
        Mat { rows: 1, cols: 1, data: vec![c] }
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Result<Mat, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(ExactError::Shape { op: "from_rows", left: (r, c), right: (r, 0) });
        }
        Ok(Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Integer matrix from row slices; panics on ragged input.
    pub fn from_ints(rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged integer matrix");
        let data = rows.iter().flat_map(|row| row.iter().map(|&v| CycScalar::from_int(v))).collect();
        Mat { rows: r, cols: c, data }
    }

    /// Column vector from entries.
    pub fn column(entries: Vec<CycScalar>) -> Mat {
        Mat { rows: entries.len(), cols: 1, data: entries }
    }

    /// Row vector from entries.
    pub fn row(entries: Vec<CycScalar>) -> Mat {
        Mat { rows: 1, cols: entries.len(), data: entries }
    }

    /// Standard basis column `e_k` of length `n`.
    pub fn unit_column(n: usize, k: usize) -> Mat {
        let mut m = Mat::zeros(n, 1);
        m.data[k] = CycScalar::one();
        m
    }

    /// Matrix unit with a single 1 at `(i, j)`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        m.data[i * cols + j] = CycScalar::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &CycScalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycScalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[CycScalar] {
        &self.data
    }

    pub fn into_entries(self) -> Vec<CycScalar> {
        self.data
    }

    pub fn row_vec(&self, i: usize) -> &[CycScalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col_mat(&self, j: usize) -> Mat {
        Mat::column((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    /// The single entry of a `1 x 1` matrix.
    pub fn to_scalar(&self) -> Option<&CycScalar> {
        if self.rows == 1 && self.cols == 1 {
            Some(&self.data[0])
        } else {
            None
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycScalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.rows)
    }

    /// First `(row, col)` where the two matrices differ, or a shape witness.
    pub fn first_difference(&self, other: &Mat) -> Option<(usize, usize)> {
        if self.shape() != other.shape() {
            return Some((usize::MAX, usize::MAX));
        }
        self.data
            .iter()
            .zip(other.data.iter())
            .position(|(a, b)| a != b)
            .map(|k| (k / self.cols.max(1), k % self.cols.max(1)))
    }

    pub fn try_mul(&self, rhs: &Mat) -> Result<Mat, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::Shape { op: "mul", left: self.shape(), right: rhs.shape() });
        }
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let one = a.is_one();
                for j in 0..rhs.cols {
                    let b = &rhs.data[k * rhs.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * rhs.cols + j];
                    *slot = if one { &*slot + b } else { &*slot + &(a * b) };
                }
            }
        }
        Ok(out)
    }

    pub fn try_add(&self, rhs: &Mat) -> Result<Mat, ExactError> {
        if self.shape() != rhs.shape() {
            return Err(ExactError::Shape { op: "add", left: self.shape(), right: rhs.shape() });
        }
        let data = self.data.iter().zip(rhs.data.iter()).map(|(a, b)| a + b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn try_sub(&self, rhs: &Mat) -> Result<Mat, ExactError> {
        if self.shape() != rhs.shape() {
            return Err(ExactError::Shape { op: "sub", left: self.shape(), right: rhs.shape() });
        }
        let data = self.data.iter().zip(rhs.data.iter()).map(|(a, b)| a - b).collect();
        Ok(Mat { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &CycScalar) -> Mat {
        let data = self.data.iter().map(|a| a * c).collect();
        Mat { rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.data[i * self.cols + j].clone();
            }
        }
        out
    }

    /// Kronecker product: `(a (x) b)(v (x) w) = a v (x) b w`.
    pub fn kron(&self, rhs: &Mat) -> Mat {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Mat::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self.data[i * self.cols + j];
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let b = &rhs.data[p * rhs.cols + q];
                        if b.is_zero() {
                            continue;
                        }
                        out.data[(i * rhs.rows + p) * cols + j * rhs.cols + q] = a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product of a sequence; the empty product is `[1]`.
    pub fn kron_all<'a>(factors: impl IntoIterator<Item = &'a Mat>) -> Mat {
        factors.into_iter().fold(Mat::identity(1), |acc, m| acc.kron(m))
    }

    /// The flip `V (x) W -> W (x) V` with `dim V = m`, `dim W = n`.
    pub fn swap(m: usize, n: usize) -> Mat {
        permute_factors(&[m, n], &[1, 0])
    }

    /// Block-diagonal sum.
    pub fn direct_sum(blocks: &[Mat]) -> Mat {
        let rows = blocks.iter().map(Mat::rows).sum();
        let cols = blocks.iter().map(Mat::cols).sum();
        let mut out = Mat::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    out.data[(r0 + i) * cols + c0 + j] = b.data[i * b.cols + j].clone();
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn vstack(blocks: &[Mat]) -> Result<Mat, ExactError> {
        let cols = blocks.first().map_or(0, Mat::cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            if b.cols != cols {
                return Err(ExactError::Shape { op: "vstack", left: (rows, cols), right: b.shape() });
            }
            rows += b.rows;
            data.extend(b.data.iter().cloned());
        }
        Ok(Mat { rows, cols, data })
    }

    /// Places matrices with equal row counts side by side.
    pub fn hstack(blocks: &[Mat]) -> Result<Mat, ExactError> {
        let t: Vec<Mat> = blocks.iter().map(Mat::transpose).collect();
        Ok(Mat::vstack(&t)?.transpose())
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out.data[a * cols.len() + b] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Row-major flattening into a column vector.
    pub fn vectorize(&self) -> Mat {
        Mat { rows: self.rows * self.cols, cols: 1, data: self.data.clone() }
    }

    /// Inverse of [`Mat::vectorize`].
    pub fn unvectorize(v: &Mat, rows: usize, cols: usize) -> Mat {
        assert_eq!(v.rows * v.cols, rows * cols, "length mismatch in unvectorize");
        Mat { rows, cols, data: v.data.clone() }
    }

    pub fn trace(&self) -> CycScalar {
        (0..self.rows.min(self.cols)).fold(CycScalar::zero(), |acc, i| acc + self.get(i, i))
    }
}

/// Matrix of the factor permutation on `V_0 (x) ... (x) V_{k-1}` (dims `dims`)
/// whose output factor `j` is input factor `perm[j]`.
pub fn permute_factors(dims: &[usize], perm: &[usize]) -> Mat {
    assert_eq!(dims.len(), perm.len(), "permutation length mismatch");
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut m = Mat::zeros(total, total);
    let mut idx = vec![0usize; dims.len()];
    for src in 0..total {
        // decode src into per-factor indices
        let mut rem = src;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut dst = 0;
        for (j, &p) in perm.iter().enumerate() {
            dst = dst * out_dims[j] + idx[p];
        }
        m.data[dst * total + src] = CycScalar::one();
    }
    m
}

impl Mul<&Mat> for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul<Mat> for Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        &self * &rhs
    }
}

impl Mul<&Mat> for Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        &self * rhs
    }
}

impl Mul<Mat> for &Mat {
    type Output = Mat;
    fn mul(self, rhs: Mat) -> Mat {
        self * &rhs
    }
}

impl Add<&Mat> for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub<&Mat> for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str("; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kron_examples() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(3)), Mat::identity(6));
        let a = Mat::from_ints(&[&[1, 2]]);
        let b = Mat::from_ints(&[&[3, 4]]);
        assert_eq!(a.kron(&b), Mat::from_ints(&[&[3, 4, 6, 8]]));
        let c = Mat::from_ints(&[&[1, -2], &[0, 5]]);
        assert_eq!(c.kron(&Mat::identity(1)), c);
    }

    #[test]
    fn swap_exchanges_factors() {
        let v = Mat::column(vec![1.into(), 2.into()]);
        let w = Mat::column(vec![3.into(), 5.into(), 7.into()]);
        assert_eq!(&Mat::swap(2, 3) * &v.kron(&w), w.kron(&v));
    }

    #[test]
    fn permute_three_factors() {
        let u = Mat::column(vec![1.into(), 2.into()]);
        let v = Mat::column(vec![3.into(), 4.into(), 5.into()]);
        let w = Mat::column(vec![6.into(), 7.into()]);
        let p = permute_factors(&[2, 3, 2], &[2, 0, 1]);
        assert_eq!(&p * &Mat::kron_all([&u, &v, &w]), Mat::kron_all([&w, &u, &v]));
    }

    #[test]
    fn stacking_and_selection() {
        let a = Mat::from_ints(&[&[1, 2], &[3, 4]]);
        let s = Mat::vstack(&[a.clone(), Mat::from_ints(&[&[5, 6]])]).unwrap();
        assert_eq!(s.shape(), (3, 2));
        assert_eq!(s.select(&[2], &[0, 1]), Mat::from_ints(&[&[5, 6]]));
        let h = Mat::hstack(&[a.clone(), Mat::from_ints(&[&[9], &[8]])]).unwrap();
        assert_eq!(h, Mat::from_ints(&[&[1, 2, 9], &[3, 4, 8]]));
        assert_eq!(Mat::direct_sum(&[a.clone(), Mat::identity(1)]).shape(), (3, 3));
        assert!(Mat::vstack(&[a, Mat::identity(3)]).is_err());
    }

    #[test]
    fn shape_errors() {
        let a = Mat::zeros(2, 3);
        assert!(a.try_mul(&Mat::zeros(2, 3)).is_err());
        assert!(a.try_add(&Mat::zeros(3, 2)).is_err());
        assert_eq!(a.first_difference(&Mat::zeros(3, 2)), Some((usize::MAX, usize::MAX)));
    }
}
