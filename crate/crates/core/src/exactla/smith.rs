use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Dense integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        assert!(entries.iter().all(|r| r.len() == cols), "ragged integer matrix");
        IntMatrix { rows, cols, entries }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i]
    }

    /// Submatrix made of the given rows.
    pub fn select_rows(&self, idx: &[usize]) -> IntMatrix {
        IntMatrix { rows: idx.len(), cols: self.cols, entries: idx.iter().map(|&i| self.entries[i].clone()).collect() }
    }
}

/// Elementary divisors `d_1 | d_2 | ...` of `m`, `min(rows, cols)` of them, zeros last.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.entries.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_nonzero(&a, t) else {
            break;
        };
        a.swap(t, pr);
        for row in a.iter_mut() {
            row.swap(t, pc);
        }
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = a[i][t].div_floor(&a[t][t]);
                let top = a[t].clone();
                for (x, y) in a[i].iter_mut().zip(&top) {
                    *x -= &q * y;
                }
                if !a[i][t].is_zero() {
                    a.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = a[t][j].div_floor(&a[t][t]);
                for row in a.iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                if !a[t][j].is_zero() {
                    for row in a.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // the pivot must divide the remaining block
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_multiple_of(&a[t][t]));
            match bad {
                Some((i, _)) => {
                    let src = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&src) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag.resize(rows.min(cols), BigInt::zero());
    diag
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < a[bi][bj].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}
