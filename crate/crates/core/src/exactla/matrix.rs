use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{RatVec, Rational};

type Entry = (usize, Rational);
type IntRow = Vec<(usize, BigInt)>;

/// Sparse rational matrix, stored row-major with sorted column indices.
///
/// Only nonzero entries are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Entry>>,
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.to_dense() {
            let cells: Vec<String> = row.iter().map(super::format_rational).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Vec::new(); rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].push((i, Rational::one()));
        }
        m
    }

    pub fn from_dense(rows: &[RatVec]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_dense_with_cols(rows, cols)
    }

    pub fn from_dense_with_cols(rows: &[RatVec], cols: usize) -> Self {
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect()
            })
            .collect();
        RatMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let dense: Vec<RatVec> = rows.iter().map(|r| super::rat_vec(r)).collect();
        Self::from_dense(&dense)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn row(&self, i: usize) -> &[Entry] {
        &self.data[i]
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        match self.data[r].binary_search_by_key(&c, |e| e.0) {
            Ok(k) => self.data[r][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Adds `v` to entry `(r, c)`, dropping it if the sum cancels.
    pub fn add_to(&mut self, r: usize, c: usize, v: &Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        if v.is_zero() {
            return;
        }
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(k) => {
                row[k].1 += v;
                if row[k].1.is_zero() {
                    row.remove(k);
                }
            }
            Err(k) => row.insert(k, (c, v.clone())),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        assert!(r < self.rows && c < self.cols, "index ({r},{c}) out of range");
        let row = &mut self.data[r];
        match row.binary_search_by_key(&c, |e| e.0) {
            Ok(k) if v.is_zero() => {
                row.remove(k);
            }
            Ok(k) => row[k].1 = v,
            Err(_) if v.is_zero() => {}
            Err(k) => row.insert(k, (c, v)),
        }
    }

    pub fn to_dense(&self) -> Vec<RatVec> {
        self.data
            .iter()
            .map(|row| {
                let mut dense = vec![Rational::zero(); self.cols];
                for (c, v) in row {
                    dense[*c] = v.clone();
                }
                dense
            })
            .collect()
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for (c, v) in row {
                out.data[*c].push((r, v.clone()));
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> RatVec {
        assert_eq!(v.len(), self.cols);
        self.data.iter().map(|row| row.iter().fold(Rational::zero(), |acc, (c, x)| acc + x * &v[*c])).collect()
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for (r, row) in self.data.iter().enumerate() {
            let mut acc: HashMap<usize, Rational> = HashMap::new();
            for (k, a) in row {
                for (c, b) in &other.data[*k] {
                    *acc.entry(*c).or_insert_with(Rational::zero) += a * b;
                }
            }
            let mut entries: Vec<Entry> = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            entries.sort_by_key(|e| e.0);
            out.data[r] = entries;
        }
        out
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RatMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Appends a row given densely.
    pub fn push_row(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(j, v)| (j, v.clone())).collect());
        self.rows += 1;
    }

    /// Appends a row given sparsely; entries must be sorted and nonzero.
    pub fn push_sparse_row(&mut self, row: Vec<Entry>) {
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(row.iter().all(|(c, v)| *c < self.cols && !v.is_zero()));
        self.data.push(row);
        self.rows += 1;
    }

    pub fn rank(&self) -> usize {
        Echelon::build(self).rank()
    }

    /// Basis of the right kernel `{v : self * v = 0}`.
    ///
    /// Every returned vector has a 1 in one free column and 0 in all other
    /// free columns, so coordinates of a kernel element in this basis are
    /// its values at [`RatMatrix::free_columns`].
    pub fn kernel_basis(&self) -> Vec<RatVec> {
        let mut ech = Echelon::build(self);
        ech.reduce_fully();
        ech.kernel(self.cols)
    }

    /// Free (non-pivot) columns of the reduced row echelon form, ascending.
    pub fn free_columns(&self) -> Vec<usize> {
        let ech = Echelon::build(self);
        (0..self.cols).filter(|c| !ech.pivot_of_col.contains_key(c)).collect()
    }

    /// Pivot columns of the row echelon form, ascending.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let ech = Echelon::build(self);
        let mut p: Vec<usize> = ech.pivot_of_col.keys().copied().collect();
        p.sort_unstable();
        p
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &RatMatrix) -> Vec<RatVec> {
    m.kernel_basis()
}

/// Fraction-free row echelon form over the integers.
struct Echelon {
    rows: Vec<IntRow>,
    pivot_of_col: HashMap<usize, usize>,
}

impl Echelon {
    fn build(m: &RatMatrix) -> Self {
        let mut order: Vec<usize> = (0..m.rows).filter(|&r| !m.data[r].is_empty()).collect();
        order.sort_by_key(|&r| (m.data[r].len(), m.data[r][0].0));
        let mut ech = Echelon { rows: Vec::new(), pivot_of_col: HashMap::new() };
        for r in order {
            ech.insert(integer_row(&m.data[r]));
        }
        ech
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn insert(&mut self, mut row: IntRow) {
        let mut i = 0;
        while i < row.len() {
            let c = row[i].0;
            match self.pivot_of_col.get(&c) {
                Some(&p) => {
                    let a = row[i].1.clone();
                    row = eliminate(&row, &a, &self.rows[p]);
                }
                None => i += 1,
            }
        }
        if row.is_empty() {
            return;
        }
        make_primitive(&mut row);
        let lead = row[0].0;
        self.pivot_of_col.insert(lead, self.rows.len());
        self.rows.push(row);
    }

    /// Clears every pivot column above and below its pivot.
    fn reduce_fully(&mut self) {
        let mut pivots: Vec<(usize, usize)> = self.pivot_of_col.iter().map(|(&c, &r)| (c, r)).collect();
        pivots.sort_unstable();
        for &(c, p) in pivots.iter().rev() {
            for q in 0..self.rows.len() {
                if q == p {
                    continue;
                }
                if let Ok(k) = self.rows[q].binary_search_by_key(&c, |e| e.0) {
                    let a = self.rows[q][k].1.clone();
                    let mut reduced = eliminate(&self.rows[q], &a, &self.rows[p]);
                    make_primitive(&mut reduced);
                    self.rows[q] = reduced;
                }
            }
        }
    }

    fn kernel(&self, cols: usize) -> Vec<RatVec> {
        let free: Vec<usize> = (0..cols).filter(|c| !self.pivot_of_col.contains_key(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for row in &self.rows {
                let (lead_col, lead) = &row[0];
                if let Ok(k) = row.binary_search_by_key(&f, |e| e.0) {
                    v[*lead_col] = -Rational::new(row[k].1.clone(), lead.clone());
                }
            }
            basis.push(v);
        }
        basis
    }
}

fn integer_row(row: &[Entry]) -> IntRow {
    let lcm = row.iter().fold(BigInt::one(), |acc, (_, v)| acc.lcm(v.denom()));
    row.iter().map(|(c, v)| (*c, (v * &lcm).to_integer())).collect()
}

/// `lead(pivot) * row - a * pivot`, which cancels the entry of `row` sitting
/// in the pivot's leading column (whose value in `row` is `a`).
fn eliminate(row: &IntRow, a: &BigInt, pivot: &IntRow) -> IntRow {
    let lead = &pivot[0].1;
    let g = lead.gcd(a);
    let (s, t) = (lead / &g, a / &g);
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        let ci = row.get(i).map_or(usize::MAX, |e| e.0);
        let cj = pivot.get(j).map_or(usize::MAX, |e| e.0);
        let (c, v) = if ci < cj {
            i += 1;
            (ci, &s * &row[i - 1].1)
        } else if cj < ci {
            j += 1;
            (cj, -(&t * &pivot[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (ci, &s * &row[i - 1].1 - &t * &pivot[j - 1].1)
        };
        if !v.is_zero() {
            out.push((c, v));
        }
    }
    out
}

fn make_primitive(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        return;
    }
    for (_, v) in row.iter_mut() {
        *v /= &g;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, ratio};

    fn is_in_kernel(m: &RatMatrix, v: &[Rational]) -> bool {
        m.mul_vec(v).iter().all(Zero::is_zero)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(2, 5).rank(), 0);
        assert_eq!(RatMatrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
        let m = RatMatrix::from_i64(&[vec![1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(&k[0][0] + &k[0][1], rat(0));
        assert!(is_in_kernel(&m, &k[0]));
    }

    #[test]
    fn kernel_with_fractions() {
        let m = RatMatrix::from_dense(&[
            vec![ratio(1, 2), rat(3), rat(0), ratio(-2, 3)],
            vec![rat(1), rat(6), rat(1), rat(0)],
        ]);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(is_in_kernel(&m, v));
        }
    }

    #[test]
    fn product_and_transpose() {
        let a = RatMatrix::from_i64(&[vec![1, 2], vec![0, 1], vec![3, 0]]);
        let b = RatMatrix::from_i64(&[vec![1, 0, -1], vec![2, 1, 0]]);
        let ab = a.mul(&b);
        assert_eq!(ab.to_dense(), RatMatrix::from_i64(&[vec![5, 2, -1], vec![2, 1, 0], vec![3, 0, -3]]).to_dense());
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn set_and_cancel() {
        let mut m = RatMatrix::zeros(2, 2);
        m.add_to(0, 1, &rat(2));
        m.add_to(0, 1, &rat(-2));
        assert!(m.is_zero());
        m.set(1, 0, ratio(1, 3));
        assert_eq!(m.get(1, 0), ratio(1, 3));
        assert_eq!(m.nnz(), 1);
    }
}
