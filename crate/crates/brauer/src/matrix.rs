//! Dense exact-rational matrices: just enough linear algebra for module
//! computations (products, rank, nullspace, solving, traces).

use num::{BigRational, One, Signed, Zero};

/// Exact scalar.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Dense matrix over the rationals. Zero rows or columns are legal and
/// behave as the empty matrix of that shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Integer-entry convenience constructor.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter().map(|row| row.iter().map(|&n| rat(n)).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * &other[(k, j)];
                    if !add.is_zero() {
                        let cur = out[(i, j)].clone();
                        out[(i, j)] = cur + add;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        let mut out = self.clone();
        for a in out.data.iter_mut() {
            *a *= c;
        }
        out
    }

    pub fn transpose(&self) -> Mat {
        let mut out = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> Rat {
        assert_eq!(self.rows, self.cols, "trace of a non-square matrix");
        (0..self.rows).fold(Rat::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Mat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Reduce in place to row echelon form; returns pivot column indices.
    fn row_reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            // Partial pivot by largest absolute value keeps entries tamer.
            let Some(best) = (row..self.rows)
                .filter(|&r| !self[(r, col)].is_zero())
                .max_by(|&a, &b| self[(a, col)].abs().cmp(&self[(b, col)].abs()))
            else {
                continue;
            };
            self.swap_rows(row, best);
            let inv = self[(row, col)].clone();
            for j in col..self.cols {
                let val = self[(row, j)].clone() / &inv;
                self[(row, j)] = val;
            }
            for r in 0..self.rows {
                if r != row && !self[(r, col)].is_zero() {
                    let factor = self[(r, col)].clone();
                    for j in col..self.cols {
                        let val = self[(r, j)].clone() - &factor * &self[(row, j)];
                        self[(r, j)] = val;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.row_reduce().len()
    }

    /// Basis of the right nullspace, as columns of the returned matrix.
    pub fn nullspace(&self) -> Mat {
        let mut m = self.clone();
        let pivots = m.row_reduce();
        let free: Vec<usize> =
            (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zero(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis[(fc, k)] = Rat::one();
            for (r, &pc) in pivots.iter().enumerate() {
                let v = -m[(r, fc)].clone();
                basis[(pc, k)] = v;
            }
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Solve `self · X = rhs` exactly. Returns one solution if consistent.
    pub fn solve(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        // Augment and reduce.
        let mut aug = Mat::zero(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..rhs.cols {
                aug[(i, self.cols + j)] = rhs[(i, j)].clone();
            }
        }
        let pivots = aug.row_reduce();
        // Rows with a pivot beyond the coefficient block mean inconsistency.
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let rank = pivots.len();
        for r in rank..self.rows {
            for j in 0..rhs.cols {
                if !aug[(r, self.cols + j)].is_zero() {
                    return None;
                }
            }
        }
        let mut x = Mat::zero(self.cols, rhs.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x[(pc, j)] = aug[(r, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    /// Kronecker product.
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zero(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = &self[(i, j)];
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        let v = a * &other[(p, q)];
                        out[(i * other.rows + p, j * other.cols + q)] = v;
                    }
                }
            }
        }
        out
    }

    /// Columns of the matrix as column vectors.
    pub fn columns(&self) -> Vec<Mat> {
        (0..self.cols)
            .map(|j| {
                let mut c = Mat::zero(self.rows, 1);
                for i in 0..self.rows {
                    c[(i, 0)] = self[(i, j)].clone();
                }
                c
            })
            .collect()
    }

    /// Render entries as `p/q` strings, mostly for diagnostics.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)].to_string()).collect())
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = Rat;
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.cols(), 1);
        assert!(m.mul(&ns).is_zero());

        let id = Mat::identity(4);
        assert_eq!(id.rank(), 4);
        assert_eq!(id.nullspace().cols(), 0);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = Mat::from_i64(&[&[2, 1], &[1, 3]]);
        let b = Mat::from_i64(&[&[5], &[10]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);

        let singular = Mat::from_i64(&[&[1, 1], &[2, 2]]);
        let bad = Mat::from_i64(&[&[1], &[3]]);
        assert!(singular.solve(&bad).is_none());
        let ok = Mat::from_i64(&[&[1], &[2]]);
        let x = singular.solve(&ok).unwrap();
        assert_eq!(singular.mul(&x), ok);
    }

    #[test]
    fn zero_dimensional_shapes() {
        let e = Mat::zero(0, 3);
        assert_eq!(e.rank(), 0);
        assert_eq!(e.nullity(), 3);
        let f = Mat::zero(3, 0);
        assert_eq!(f.rank(), 0);
        let g = e.mul(&f.transpose().transpose());
        assert_eq!((g.rows(), g.cols()), (0, 0));
    }

    #[test]
    fn kron_shape_and_values() {
        let a = Mat::from_i64(&[&[1, 2]]);
        let b = Mat::from_i64(&[&[0, 3], &[4, 0]]);
        let k = a.kron(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k[(1, 0)], rat(4));
        assert_eq!(k[(0, 3)], rat(6));
        assert_eq!(k[(1, 2)], rat(8));
    }

    #[test]
    fn exactness_survives_awkward_fractions() {
        // Hilbert-style matrix: floating point would lose this.
        let h = Mat::from_rows(
            (1..=4)
                .map(|i| {
                    (1..=4)
                        .map(|j| Rat::new(1.into(), (i + j - 1).into()))
                        .collect()
                })
                .collect(),
        );
        assert_eq!(h.rank(), 4);
        let rhs = Mat::from_i64(&[&[1], &[0], &[0], &[0]]);
        let x = h.solve(&rhs).unwrap();
        assert_eq!(h.mul(&x), rhs);
    }
}
