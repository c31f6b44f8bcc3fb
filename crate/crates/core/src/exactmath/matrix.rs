use std::fmt;
use std::ops::Mul;

use super::ExactScalar;

/// Dense matrix over ℚ[i, √2, √5], row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<ExactScalar>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![ExactScalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.data[k * n + k] = ExactScalar::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<ExactScalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| ExactScalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// `[[a, b], [c, d]]`
    pub fn mat2(a: ExactScalar, b: ExactScalar, c: ExactScalar, d: ExactScalar) -> Self {
        Self {
            rows: 2,
            cols: 2,
            data: vec![a, b, c, d],
        }
    }

    pub fn diag2(a: ExactScalar, d: ExactScalar) -> Self {
        Self::mat2(a, ExactScalar::zero(), ExactScalar::zero(), d)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &ExactScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: ExactScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|r| (0..self.cols).all(|c| r == c || self.get(r, c).is_zero()))
    }

    pub fn scale(&self, s: &ExactScalar) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = ExactScalar::zero();
                for (c, x) in v.iter().enumerate() {
                    let a = self.get(r, c);
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    /// Determinant by elimination over the field.
    pub fn determinant(&self) -> ExactScalar {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        let mut m: Vec<Vec<ExactScalar>> = (0..n)
            .map(|r| self.data[r * n..(r + 1) * n].to_vec())
            .collect();
        let mut det = ExactScalar::one();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return ExactScalar::zero();
            };
            if piv != col {
                m.swap(piv, col);
                det = -det;
            }
            let p = m[col][col].clone();
            det *= &p;
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] * &pinv;
                for c in col..n {
                    let t = &factor * &m[col][c];
                    m[r][c] -= &t;
                }
            }
        }
        det
    }

    /// Reduced row echelon form; returns the pivot columns.
    ///
    /// Pivots are chosen as the first nonzero entry scanning rows top-down
    /// within each column, columns left to right, so the result is
    /// deterministic.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(piv) = (row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            if piv != row {
                for c in 0..self.cols {
                    self.data.swap(piv * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.get(row, col).inv().expect("nonzero pivot");
            for c in col..self.cols {
                let v = self.get(row, c);
                if !v.is_zero() {
                    let nv = v * &inv;
                    self.set(row, c, nv);
                }
            }
            for r in 0..self.rows {
                if r == row || self.get(r, col).is_zero() {
                    continue;
                }
                let factor = self.get(r, col).clone();
                for c in col..self.cols {
                    let p = self.get(row, c);
                    if p.is_zero() {
                        continue;
                    }
                    let t = &factor * p;
                    let cur = &self.data[r * self.cols + c];
                    let nv = cur - &t;
                    self.set(r, c, nv);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of the right nullspace `{x : A x = 0}`, one vector per free
    /// column, with a 1 in that column. Empty when A has full column rank.
    pub fn nullspace(&self) -> Vec<Vec<ExactScalar>> {
        let mut r = self.clone();
        let pivots = r.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|free| {
                let mut v = vec![ExactScalar::zero(); self.cols];
                v[free] = ExactScalar::one();
                for (prow, &pcol) in pivots.iter().enumerate() {
                    v[pcol] = -r.get(prow, free);
                }
                v
            })
            .collect()
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = ExactMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    out.data[r * rhs.cols + c] += &(a * b);
                }
            }
        }
        out
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Incrementally maintained row space, used to test whether new vectors are
/// independent of a growing set.
#[derive(Clone, Debug)]
pub struct RowSpace {
    dim: usize,
    /// Echelon rows, each with a leading 1 at `leads[k]`.
    rows: Vec<Vec<ExactScalar>>,
    leads: Vec<usize>,
}

impl RowSpace {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the current basis; the remainder is zero iff `v`
    /// lies in the span.
    pub fn reduce(&self, v: &[ExactScalar]) -> Vec<ExactScalar> {
        assert_eq!(v.len(), self.dim);
        let mut w = v.to_vec();
        for (row, &lead) in self.rows.iter().zip(&self.leads) {
            if w[lead].is_zero() {
                continue;
            }
            let f = w[lead].clone();
            for (c, x) in row.iter().enumerate() {
                if !x.is_zero() {
                    let t = &f * x;
                    w[c] -= &t;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[ExactScalar]) -> bool {
        self.reduce(v).iter().all(ExactScalar::is_zero)
    }

    /// Adds `v` to the span; returns false if it was already contained.
    pub fn insert(&mut self, v: &[ExactScalar]) -> bool {
        let mut w = self.reduce(v);
        let Some(lead) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[lead].inv().expect("nonzero lead");
        for x in w.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // keep earlier rows reduced at the new lead
        for row in self.rows.iter_mut() {
            if row[lead].is_zero() {
                continue;
            }
            let f = row[lead].clone();
            for (c, x) in w.iter().enumerate() {
                if !x.is_zero() {
                    let t = &f * x;
                    row[c] -= &t;
                }
            }
        }
        self.rows.push(w);
        self.leads.push(lead);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nullspace_of_single_row() {
        let a = ExactMatrix::from_int_rows(&[&[1, -1]]);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![ExactScalar::one(), ExactScalar::one()]]);
    }

    #[test]
    fn identity_has_trivial_nullspace() {
        assert!(ExactMatrix::identity(2).nullspace().is_empty());
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let a = ExactMatrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 1, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), a.cols() - a.rank());
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(ExactScalar::is_zero));
        }
    }

    #[test]
    fn nullspace_over_the_extension() {
        // [1, √5] x = 0  →  x = (−√5, 1)
        let a = ExactMatrix::from_rows(vec![vec![ExactScalar::one(), ExactScalar::sqrt5()]]);
        let ns = a.nullspace();
        assert_eq!(ns, vec![vec![-ExactScalar::sqrt5(), ExactScalar::one()]]);
    }

    #[test]
    fn determinant_2x2() {
        let m = ExactMatrix::mat2(
            ExactScalar::zero(),
            ExactScalar::one(),
            ExactScalar::from_int(-1),
            ExactScalar::zero(),
        );
        assert!(m.determinant().is_one());
        let n = ExactMatrix::from_int_rows(&[&[2, 1, 0], &[1, 2, 1], &[0, 1, 2]]);
        assert_eq!(n.determinant(), ExactScalar::from_int(4));
    }

    #[test]
    fn row_space_membership() {
        let mut rs = RowSpace::new(3);
        let a: Vec<ExactScalar> = [1, 1, 0].iter().map(|&x| ExactScalar::from_int(x)).collect();
        let b: Vec<ExactScalar> = [0, 1, 1].iter().map(|&x| ExactScalar::from_int(x)).collect();
        let c: Vec<ExactScalar> = [1, 2, 1].iter().map(|&x| ExactScalar::from_int(x)).collect();
        assert!(rs.insert(&a));
        assert!(rs.insert(&b));
        assert!(rs.contains(&c));
        assert!(!rs.insert(&c));
        assert_eq!(rs.rank(), 2);
    }
}
