//! Dense matrices over the exact fields, with Gaussian elimination.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::Field;

/// Row or column label: an orbit's relative-position vector `t`, a configuration
/// (its occupied nodes), or a bare index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Label {
    #[serde(rename = "t")]
    Orbit(Vec<u8>),
    #[serde(rename = "j")]
    Config(Vec<u8>),
    #[serde(rename = "i")]
    Index(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[u8]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Label::Orbit(t) => write!(f, "t=({})", join(t)),
            Label::Config(j) => write!(f, "{{{}}}", join(j)),
            Label::Index(i) => write!(f, "{i}"),
        }
    }
}

fn index_labels(n: usize) -> Vec<Label> {
    (0..n).map(Label::Index).collect()
}

#[derive(Clone, Debug)]
pub struct ExactMatrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
    row_labels: Vec<Label>,
    col_labels: Vec<Label>,
}

impl<F: Field> PartialEq for ExactMatrix<F> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl<F: Field> ExactMatrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}×{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            data,
            row_labels: index_labels(rows),
            col_labels: index_labels(cols),
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix::new(rows, cols, vec![F::zero(); rows * cols]).expect("sized")
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        ExactMatrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_columns(cols: &[Vec<F>]) -> Result<Self> {
        let c = cols.len();
        let r = cols.first().map_or(0, Vec::len);
        if cols.iter().any(|col| col.len() != r) {
            return Err(Error::Dimension("ragged columns".into()));
        }
        let mut m = ExactMatrix::zeros(r, c);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn column_vector(v: Vec<F>) -> Self {
        let n = v.len();
        ExactMatrix::new(n, 1, v).expect("sized")
    }

    pub fn with_labels(mut self, rows: Vec<Label>, cols: Vec<Label>) -> Self {
        assert_eq!(rows.len(), self.rows, "row label count");
        assert_eq!(cols.len(), self.cols, "column label count");
        self.row_labels = rows;
        self.col_labels = cols;
        self
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.col_labels
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: F) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> impl Iterator<Item = &F> {
        self.data.iter()
    }

    pub fn row(&self, i: usize) -> Vec<F> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> ExactMatrix<G> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn try_map<G: Field>(&self, f: impl Fn(&F) -> Result<G>) -> Result<ExactMatrix<G>> {
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        })
    }

    pub fn scale(&self, s: &F) -> Self {
        self.map(|x| s.clone() * x.clone())
    }

    pub fn transpose(&self) -> Self {
        let mut m = ExactMatrix::zeros(self.cols, self.rows)
            .with_labels(self.col_labels.clone(), self.row_labels.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().map(F::conj)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.adjoint()
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    fn check_same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "{what}: {}×{} vs {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "add")?;
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x = x.checked_add(y)?;
        }
        Ok(m)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other, "sub")?;
        let mut m = self.clone();
        for (x, y) in m.data.iter_mut().zip(&other.data) {
            *x = x.checked_sub(y)?;
        }
        Ok(m)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "mul: {}×{} by {}×{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m: ExactMatrix<F> = ExactMatrix::zeros(self.rows, other.cols)
            .with_labels(self.row_labels.clone(), other.col_labels.clone());
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = m.get(i, j).checked_add(&a.checked_mul(b)?)?;
                    m.set(i, j, cur);
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        Ok(self.mul(&ExactMatrix::column_vector(v.to_vec()))?.column(0))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> Result<(Self, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv()?;
            for j in col..m.cols {
                let v = m.get(row, j).checked_mul(&inv)?;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.get(i, col).is_zero() {
                    continue;
                }
                let factor = m.get(i, col).clone();
                for j in col..m.cols {
                    let v = m.get(i, j).checked_sub(&factor.checked_mul(m.get(row, j))?)?;
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Ok((m, pivots))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// A basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Result<Vec<Vec<F>>> {
        let (r, pivots) = self.rref()?;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        Ok(free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(row, f).clone();
                }
                v
            })
            .collect())
    }

    /// The unique `X` with `A X = B`; `A` must have full column rank and the system
    /// must be consistent.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if rhs.rows != self.rows {
            return Err(Error::Dimension("solve: row count".into()));
        }
        let n = self.cols;
        let mut aug = ExactMatrix::zeros(self.rows, n + rhs.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                aug.set(i, n + j, rhs.get(i, j).clone());
            }
        }
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots[..n] != (0..n).collect::<Vec<_>>()[..] {
            return Err(Error::Singular("coefficient matrix lacks full column rank".into()));
        }
        if pivots.len() > n {
            return Err(Error::Singular("inconsistent system".into()));
        }
        let mut x = ExactMatrix::zeros(n, rhs.cols)
            .with_labels(self.col_labels.clone(), rhs.col_labels.clone());
        for i in 0..n {
            for j in 0..rhs.cols {
                x.set(i, j, r.get(i, n + j).clone());
            }
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        Ok(self
            .solve(&ExactMatrix::identity(self.rows))?
            .with_labels(self.col_labels.clone(), self.row_labels.clone()))
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(blocks: &[Self]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = ExactMatrix::zeros(r, c);
        let (mut r0, mut c0) = (0, 0);
        let mut rl = Vec::with_capacity(r);
        let mut cl = Vec::with_capacity(c);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
            rl.extend(b.row_labels.iter().cloned());
            cl.extend(b.col_labels.iter().cloned());
            r0 += b.rows;
            c0 += b.cols;
        }
        m.with_labels(rl, cl)
    }
}

/// `⟨a, b⟩ = Σ conj(aᵢ) bᵢ`.
pub fn inner<F: Field>(a: &[F], b: &[F]) -> F {
    a.iter()
        .zip(b)
        .fold(F::zero(), |acc, (x, y)| acc + x.conj() * y.clone())
}

/// `|a⟩⟨b|`.
pub fn outer<F: Field>(a: &[F], b: &[F]) -> ExactMatrix<F> {
    let mut m = ExactMatrix::zeros(a.len(), b.len());
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            m.set(i, j, x.clone() * y.conj());
        }
    }
    m
}

/// Orthogonal projector `B (B†B)⁻¹ B†` onto the span of the given independent columns.
pub fn projector_onto<F: Field>(basis: &[Vec<F>], dim: usize) -> Result<ExactMatrix<F>> {
    if basis.is_empty() {
        return Ok(ExactMatrix::zeros(dim, dim));
    }
    let b = ExactMatrix::from_columns(basis)?;
    let bh = b.adjoint();
    let gram = bh.mul(&b)?;
    b.mul(&gram.inverse()?)?.mul(&bh)
}

impl<F: Field> fmt::Display for ExactMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
