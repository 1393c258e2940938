use alloc::vec::Vec;

use super::{CycScalar, ExactError, Mat};

/// One solution of `A x = b` together with a basis of `ker A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub particular: Mat,
    pub kernel: Vec<Mat>,
}

/// Quotient of `k^n` by the span of a set of relation vectors.
///
/// Representatives are the standard basis vectors at the non-pivot columns of
/// the reduced row-echelon form of the relations (leftmost pivots).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    ambient: usize,
    relation_rank: usize,
    basis: Vec<usize>,
    projection: Mat,
}

impl Quotient {
    /// `relations` holds one relation vector per row.
    pub fn new(ambient: usize, relations: &Mat) -> Result<Quotient, ExactError> {
        if relations.cols() != ambient && relations.rows() != 0 {
            return Err(ExactError::Shape { op: "quotient", left: (0, ambient), right: relations.shape() });
        }
        let (r, pivots) = if relations.rows() == 0 { (Mat::zeros(0, ambient), Vec::new()) } else { relations.rref() };
        let basis: Vec<usize> = (0..ambient).filter(|j| !pivots.contains(j)).collect();
        let mut projection = Mat::zeros(basis.len(), ambient);
        for (k, &j) in basis.iter().enumerate() {
            projection.set(k, j, CycScalar::one());
            for (row, &p) in pivots.iter().enumerate() {
                let e = r.get(row, j);
                if !e.is_zero() {
                    projection.set(k, p, -e);
                }
            }
        }
        Ok(Quotient { ambient, relation_rank: pivots.len(), basis, projection })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relation_rank
    }

    /// Ambient indices of the chosen representatives.
    pub fn basis(&self) -> &[usize] {
        &self.basis
    }

    /// `dim x ambient` matrix sending a vector to its class coordinates.
    pub fn projection(&self) -> &Mat {
        &self.projection
    }

    /// `ambient x dim` matrix sending class coordinates to representatives.
    pub fn section(&self) -> Mat {
        let mut s = Mat::zeros(self.ambient, self.basis.len());
        for (k, &j) in self.basis.iter().enumerate() {
            s.set(j, k, CycScalar::one());
        }
        s
    }
}

/// Basis of all `rows x cols` matrices `X` with `constraint(X) = 0`, for a
/// linear `constraint`.
pub fn solution_space(shape: (usize, usize), constraint: impl Fn(&Mat) -> Mat) -> Vec<Mat> {
    block_solution_space(&[shape], |x| alloc::vec![constraint(&x[0])]).into_iter().map(|mut b| b.remove(0)).collect()
}

/// Basis of all tuples `(X_0, ..., X_k)` of matrices of the given shapes
/// annihilated by a linear `constraint`. The constraint is evaluated on each
/// unit tuple; the kernel of the stacked, vectorized images is split back
/// into tuples. Image shapes must not depend on the argument.
pub fn block_solution_space(shapes: &[(usize, usize)], constraint: impl Fn(&[Mat]) -> Vec<Mat>) -> Vec<Vec<Mat>> {
    let sizes: Vec<usize> = shapes.iter().map(|&(r, c)| r * c).collect();
    let unknowns: usize = sizes.iter().sum();
    let zero: Vec<Mat> = shapes.iter().map(|&(r, c)| Mat::zeros(r, c)).collect();
    let mut columns = Vec::with_capacity(unknowns);
    for (b, &(rows, cols)) in shapes.iter().enumerate() {
        for k in 0..rows * cols {
            let mut arg = zero.clone();
            arg[b] = Mat::unit(rows, cols, k / cols, k % cols);
            let images: Vec<Mat> = constraint(&arg).iter().map(Mat::vectorize).collect();
            columns.push(if images.is_empty() {
                Mat::zeros(0, 1)
            } else {
                Mat::vstack(&images).expect("vectorized images are columns")
            });
        }
    }
    let system = if columns.is_empty() {
        Mat::zeros(0, 0)
    } else {
        Mat::hstack(&columns).expect("a linear constraint has a fixed codomain shape")
    };
    system
        .kernel_basis()
        .iter()
        .map(|v| {
            let mut out = Vec::with_capacity(shapes.len());
            let mut at = 0;
            for &(rows, cols) in shapes {
                let part: Vec<usize> = (at..at + rows * cols).collect();
                out.push(Mat::unvectorize(&v.select(&part, &[0]), rows, cols));
                at += rows * cols;
            }
            out
        })
        .collect()
}

impl Mat {
    /// Reduced row-echelon form and pivot columns (leftmost pivot, first row).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let (rows, cols) = self.shape();
        let mut a: Vec<Vec<CycScalar>> = (0..rows).map(|i| self.row_vec(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].inv().expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..cols {
                    a[r][j] = &a[r][j] * &inv;
                }
            }
            let pivot_row = a[r].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = &row[j] - &(&f * &pivot_row[j]);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let data = a.into_iter().flatten().collect();
        (Mat::new(rows, cols, data).expect("shape preserved"), pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel, one column vector per free column.
    pub fn kernel_basis(&self) -> Vec<Mat> {
        let cols = self.cols();
        let (r, pivots) = self.rref();
        let mut out = Vec::new();
        for j in (0..cols).filter(|j| !pivots.contains(j)) {
            let mut v = Mat::zeros(cols, 1);
            v.set(j, 0, CycScalar::one());
            for (row, &p) in pivots.iter().enumerate() {
                let e = r.get(row, j);
                if !e.is_zero() {
                    v.set(p, 0, -e);
                }
            }
            out.push(v);
        }
        out
    }

    /// Kernel basis as the columns of one `cols x nullity` matrix.
    pub fn kernel(&self) -> Mat {
        let basis = self.kernel_basis();
        if basis.is_empty() {
            return Mat::zeros(self.cols(), 0);
        }
        Mat::hstack(&basis).expect("equal heights")
    }

    /// Solves `self * x = rhs`, with free variables set to zero.
    pub fn solve(&self, rhs: &Mat) -> Result<Solution, ExactError> {
        if rhs.rows() != self.rows() {
            return Err(ExactError::Shape { op: "solve", left: self.shape(), right: rhs.shape() });
        }
        let n = self.cols();
        let aug = Mat::hstack(&[self.clone(), rhs.clone()])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Err(ExactError::Inconsistent);
        }
        let mut x = Mat::zeros(n, rhs.cols());
        for (row, &p) in pivots.iter().enumerate() {
            for k in 0..rhs.cols() {
                x.set(p, k, r.get(row, n + k).clone());
            }
        }
        Ok(Solution { particular: x, kernel: self.kernel_basis() })
    }

    pub fn inverse(&self) -> Result<Mat, ExactError> {
        if self.rows() != self.cols() {
            return Err(ExactError::Shape { op: "inverse", left: self.shape(), right: self.shape() });
        }
        let n = self.rows();
        let aug = Mat::hstack(&[self.clone(), Mat::identity(n)])?;
        let (r, pivots) = aug.rref();
        if pivots.iter().filter(|&&p| p < n).count() < n {
            return Err(ExactError::Singular);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(r.select(&rows, &cols))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows() == self.cols() && self.rank() == self.rows()
    }

    /// Determinant by fraction-tracking elimination; `det` of `0 x 0` is 1.
    pub fn det(&self) -> Result<CycScalar, ExactError> {
        if self.rows() != self.cols() {
            return Err(ExactError::Shape { op: "det", left: self.shape(), right: self.shape() });
        }
        let n = self.rows();
        let mut a: Vec<Vec<CycScalar>> = (0..n).map(|i| self.row_vec(i).to_vec()).collect();
        let mut det = CycScalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
                return Ok(CycScalar::zero());
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            det = &det * &a[c][c];
            let inv = a[c][c].inv()?;
            let pivot_row = a[c].clone();
            for row in a.iter_mut().skip(c + 1) {
                if row[c].is_zero() {
                    continue;
                }
                let f = &row[c] * &inv;
                for j in c..n {
                    if !pivot_row[j].is_zero() {
                        row[j] = &row[j] - &(&f * &pivot_row[j]);
                    }
                }
            }
        }
        Ok(det)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn kernel_examples() {
        assert!(Mat::identity(4).kernel_basis().is_empty());
        let k = Mat::from_ints(&[&[1, 1]]).kernel_basis();
        assert_eq!(k, vec![Mat::from_ints(&[&[-1], &[1]])]);
        assert_eq!(Mat::zeros(3, 5).rank(), 0);
        assert_eq!(Mat::zeros(3, 5).kernel_basis().len(), 5);
    }

    #[test]
    fn solve_and_inconsistent() {
        let a = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        let s = a.solve(&Mat::from_ints(&[&[3], &[6]])).unwrap();
        assert_eq!(&a * &s.particular, Mat::from_ints(&[&[3], &[6]]));
        assert_eq!(s.kernel.len(), 1);
        assert_eq!(a.solve(&Mat::from_ints(&[&[1], &[0]])), Err(ExactError::Inconsistent));
    }

    #[test]
    fn inverse_and_det() {
        let a = Mat::from_ints(&[&[2, 1], &[7, 4]]);
        assert_eq!(&a * &a.inverse().unwrap(), Mat::identity(2));
        assert_eq!(a.det().unwrap(), CycScalar::one());
        let s = Mat::from_ints(&[&[1, 2], &[2, 4]]);
        assert_eq!(s.inverse(), Err(ExactError::Singular));
        assert!(s.det().unwrap().is_zero());
        let z = CycScalar::zeta(4);
        let m = Mat::new(2, 2, vec![z.clone(), CycScalar::one(), CycScalar::zero(), z.clone()]).unwrap();
        assert_eq!(m.det().unwrap(), CycScalar::from_int(-1));
        assert_eq!(&m.inverse().unwrap() * &m, Mat::identity(2));
        assert_eq!(Mat::identity(0).det().unwrap(), CycScalar::one());
    }

    #[test]
    fn quotient_projection() {
        // relations e0 - e1 and e2 in k^3
        let rel = Mat::from_ints(&[&[1, -1, 0], &[0, 0, 1]]);
        let q = Quotient::new(3, &rel).unwrap();
        assert_eq!(q.dim(), 1);
        assert_eq!(q.basis(), &[1]);
        assert!((q.projection() * &rel.transpose()).is_zero());
        assert!((q.projection() * &q.section()).is_identity());
        let free = Quotient::new(2, &Mat::zeros(0, 2)).unwrap();
        assert_eq!(free.dim(), 2);
    }
}
