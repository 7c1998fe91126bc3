//! Smith normal form over the integers with exact unimodular transforms.

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<i128>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `min(rows, cols)` nonnegative entries, each dividing the next.
    pub diagonal: Vec<i128>,
    /// Unimodular, `rows × rows`.
    pub left: IntMatrix,
    /// Unimodular, `cols × cols`.
    pub right: IntMatrix,
    /// Inverse of `left`, tracked alongside it.
    pub left_inverse: IntMatrix,
}

impl SnfResult {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|&&d| d != 0).count()
    }
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i128::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> Result<IntMatrix> {
    let n = a.len();
    let inner = b.len();
    let m = b.first().map_or(0, |r| r.len());
    let mut out = vec![vec![0i128; m]; n];
    for i in 0..n {
        debug_assert_eq!(a[i].len(), inner);
        for k in 0..inner {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..m {
                let prod = aik.checked_mul(b[k][j]).ok_or(Error::Overflow("matrix product"))?;
                out[i][j] = out[i][j]
                    .checked_add(prod)
                    .ok_or(Error::Overflow("matrix product"))?;
            }
        }
    }
    Ok(out)
}

fn axpy(target: i128, q: i128, source: i128) -> Result<i128> {
    q.checked_mul(source)
        .and_then(|v| target.checked_sub(v))
        .ok_or(Error::Overflow("Smith normal form"))
}

struct Work {
    a: IntMatrix,
    left: IntMatrix,
    left_inv: IntMatrix,
    right: IntMatrix,
}

impl Work {
    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: i128) -> Result<()> {
        for j in 0..self.a[i].len() {
            self.a[i][j] = axpy(self.a[i][j], q, self.a[t][j])?;
        }
        for j in 0..self.left[i].len() {
            self.left[i][j] = axpy(self.left[i][j], q, self.left[t][j])?;
        }
        // inverse: column t += q * column i
        for row in self.left_inv.iter_mut() {
            row[t] = axpy(row[t], -q, row[i])?;
        }
        Ok(())
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: i128) -> Result<()> {
        for row in self.a.iter_mut() {
            row[j] = axpy(row[j], q, row[t])?;
        }
        for row in self.right.iter_mut() {
            row[j] = axpy(row[j], q, row[t])?;
        }
        Ok(())
    }

    fn swap_rows(&mut self, i: usize, t: usize) {
        if i != t {
            self.a.swap(i, t);
            self.left.swap(i, t);
            for row in self.left_inv.iter_mut() {
                row.swap(i, t);
            }
        }
    }

    fn swap_cols(&mut self, j: usize, t: usize) {
        if j != t {
            for row in self.a.iter_mut() {
                row.swap(j, t);
            }
            for row in self.right.iter_mut() {
                row.swap(j, t);
            }
        }
    }

    fn negate_row(&mut self, t: usize) {
        for v in self.a[t].iter_mut() {
            *v = -*v;
        }
        for v in self.left[t].iter_mut() {
            *v = -*v;
        }
        for row in self.left_inv.iter_mut() {
            row[t] = -row[t];
        }
    }

    fn min_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i128, usize, usize)> = None;
        for (i, row) in self.a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(b, _, _)| v.abs() < b) {
                    best = Some((v.abs(), i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }
}

/// Compute `left · m · right = diag(diagonal)`.
///
/// Total on integer matrices; the only failure is `i128` overflow in the
/// transforms.
pub fn smith_normal_form(m: &IntMatrix) -> Result<SnfResult> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    if m.iter().any(|r| r.len() != cols) {
        return Err(Error::Internal("ragged matrix passed to Smith normal form".into()));
    }
    let mut w = Work {
        a: m.clone(),
        left: identity(rows),
        left_inv: identity(rows),
        right: identity(cols),
    };
    let steps = rows.min(cols);
    'outer: for t in 0..steps {
        loop {
            let Some((pi, pj)) = w.min_pivot(t) else {
                break 'outer;
            };
            w.swap_rows(pi, t);
            w.swap_cols(pj, t);
            let pivot = w.a[t][t];
            let mut clean = true;
            for i in (t + 1)..rows {
                let q = w.a[i][t] / pivot;
                if q != 0 {
                    w.row_sub(i, t, q)?;
                }
                clean &= w.a[i][t] == 0;
            }
            for j in (t + 1)..cols {
                let q = w.a[t][j] / pivot;
                if q != 0 {
                    w.col_sub(j, t, q)?;
                }
                clean &= w.a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let offender = ((t + 1)..rows)
                .find(|&i| ((t + 1)..cols).any(|j| w.a[i][j] % pivot != 0));
            match offender {
                // row_t += row_i, then the next pass reduces the remainder
                Some(i) => w.row_sub(t, i, -1)?,
                None => break,
            }
        }
        if w.a[t][t] < 0 {
            w.negate_row(t);
        }
    }
    let diagonal = (0..steps).map(|t| w.a[t][t]).collect();
    Ok(SnfResult {
        diagonal,
        left: w.left,
        right: w.right,
        left_inverse: w.left_inv,
    })
}
