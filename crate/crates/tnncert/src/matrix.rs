//! Dense matrices over an arbitrary scalar, with the submatrix and CSV
//! plumbing the immanant evaluators need. Row/column index sets on the
//! public surface are 1-based, matching the combinatorial conventions used
//! everywhere else in this crate.

use crate::error::Error;
use crate::scalar::{parse_rat, rat_to_string, Scalar};
use crate::{Rat, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>, // row-major
}

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::SizeMismatch {
                left: data.len(),
                right: rows * cols,
                context: "matrix data length must be rows·cols",
            });
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Parse("matrix rows have unequal lengths".into()));
        }
        let data = rows.into_iter().flatten().collect();
        Matrix::new(r, c, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based (i, j).
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn transpose(&self) -> Matrix<T> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Submatrix with the given 1-based row and column indices, in the
    /// order listed.
    pub fn submatrix(&self, row_set: &[usize], col_set: &[usize]) -> Result<Matrix<T>> {
        for &i in row_set {
            if i == 0 || i > self.rows {
                return Err(Error::OutOfRange {
                    what: "row index".into(),
                    value: i.to_string(),
                    allowed: format!("1..={}", self.rows),
                });
            }
        }
        for &j in col_set {
            if j == 0 || j > self.cols {
                return Err(Error::OutOfRange {
                    what: "column index".into(),
                    value: j.to_string(),
                    allowed: format!("1..={}", self.cols),
                });
            }
        }
        Ok(Matrix::from_fn(row_set.len(), col_set.len(), |i, j| {
            self.get(row_set[i] - 1, col_set[j] - 1).clone()
        }))
    }

    /// Principal submatrix on a 1-based index set.
    pub fn principal_submatrix(&self, i_set: &[usize]) -> Result<Matrix<T>> {
        self.submatrix(i_set, i_set)
    }
}

impl<T: Scalar> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn mul(&self, other: &Matrix<T>) -> Result<Matrix<T>> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch {
                left: self.cols,
                right: other.rows,
                context: "matrix product inner dimensions",
            });
        }
        Ok(Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc + self.get(i, k).clone() * other.get(k, j).clone();
            }
            acc
        }))
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{:?} ", self.data[i * self.cols + j])?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Matrix<Rat> {
    /// Parses comma-separated rows, one per line; blank lines and lines
    /// starting with '#' are skipped. Entries are integers or "p/q".
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let row: Vec<Rat> = line
                .split(',')
                .map(|cell| parse_rat(cell.trim()))
                .collect::<Result<_>>()?;
            rows.push(row);
        }
        if rows.is_empty() {
            return Err(Error::Parse("no matrix rows found".into()));
        }
        Matrix::from_rows(rows)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| rat_to_string(self.get(i, j)))
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// Entries as display strings, for JSON embedding.
    pub fn string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| rat_to_string(self.get(i, j)))
                    .collect()
            })
            .collect()
    }

    pub fn from_string_rows(rows: &[Vec<String>]) -> Result<Self> {
        let parsed: Vec<Vec<Rat>> = rows
            .iter()
            .map(|row| row.iter().map(|s| parse_rat(s)).collect::<Result<_>>())
            .collect::<Result<_>>()?;
        Matrix::from_rows(parsed)
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let converted = rows
            .iter()
            .map(|row| row.iter().map(|&v| Rat::from_integer(v.into())).collect())
            .collect();
        Matrix::from_rows(converted)
    }
}
