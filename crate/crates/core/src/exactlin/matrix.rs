use std::collections::BTreeMap;

use super::field::Field;
use super::tensor::Tensor;
use super::word::Word;
use crate::error::{Error, Result};

/// Small dense matrix, used for coefficient matrices and changes of basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::precondition("ragged matrix rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::precondition("matrix shapes do not compose"));
        }
        let mut out: Matrix<F> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).add(&a.mul(other.get(k, j)));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Field::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| self.get(i, j).add(self.get(j, i)).is_zero())
            })
    }

    /// Row echelon form via Gaussian elimination; returns `(echelon, pivot columns)`.
    fn echelon(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            for j in 0..m.cols {
                m.data.swap(r * m.cols + j, p * m.cols + j);
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(r, j).mul(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r {
                    let factor = m.get(i, c).clone();
                    if factor.is_zero() {
                        continue;
                    }
                    for j in 0..m.cols {
                        let mut v = m.get(i, j).clone();
                        v.sub_mul_assign(&factor, m.get(r, j));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one());
        }
        let (e, pivots) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, e.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// A nonzero vector `v` with `self · v = 0`, if the kernel is nontrivial.
    pub fn kernel_vector(&self) -> Option<Vec<F>> {
        let (e, pivots) = self.echelon();
        let free = (0..self.cols).find(|c| !pivots.contains(c))?;
        let mut v = vec![F::zero(); self.cols];
        v[free] = F::one();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = e.get(r, free).neg();
        }
        Some(v)
    }
}

/// Rewrites `t` under the substitution `x_i ↦ Σ_j sub[i][j] y_j`, i.e. expresses
/// it in a new basis `y` given each old generator's coordinates.
pub fn substitute<F: Field>(t: &Tensor<F>, sub: &Matrix<F>) -> Result<Tensor<F>> {
    let n = t.arity();
    if sub.nrows() != n || sub.ncols() != n {
        return Err(Error::ArityMismatch {
            expected: n,
            found: sub.nrows(),
        });
    }
    let mut acc: BTreeMap<Word, F> = BTreeMap::new();
    for (w, c) in t.terms() {
        // expand the product of linear forms letter by letter
        let mut partial: Vec<(Vec<u8>, F)> = vec![(Vec::new(), c.clone())];
        for &l in w.letters() {
            let mut next = Vec::new();
            for (prefix, pc) in &partial {
                for j in 0..n {
                    let a = sub.get(l as usize, j);
                    if a.is_zero() {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(j as u8);
                    next.push((p, pc.mul(a)));
                }
            }
            partial = next;
        }
        for (p, pc) in partial {
            let e = acc.entry(Word::new(p)).or_insert_with(F::zero);
            *e = e.add(&pc);
        }
    }
    Tensor::from_terms(n, t.degree(), acc)
}
