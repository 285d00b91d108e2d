use num_traits::{One, Zero};

use super::{RatMatrix, RatVec, Rational};

/// Reduced row echelon form of a small dense matrix, with its pivot columns.
fn rref(mut a: Vec<RatVec>) -> (Vec<RatVec>, Vec<usize>) {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
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
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Determinant of a square matrix given by rows.
pub fn determinant(m: &[RatVec]) -> Rational {
    let n = m.len();
    let mut a: Vec<RatVec> = m.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        assert_eq!(a[c].len(), n, "determinant of a non-square matrix");
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let pivot = a[c][c].clone();
        det *= &pivot;
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] / &pivot;
            let (top, bottom) = a.split_at_mut(i);
            for (x, y) in bottom[0].iter_mut().zip(&top[c]).skip(c) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Inverse of a square matrix, or `None` if it is singular.
pub fn inverse(m: &[RatVec]) -> Option<Vec<RatVec>> {
    let n = m.len();
    if n == 0 {
        return Some(Vec::new());
    }
    let aug: Vec<RatVec> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Some solution `x` of `a x = b`, or `None` if the system is inconsistent.
pub fn solve(a: &[RatVec], b: &[Rational]) -> Option<RatVec> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Vec<RatVec> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (row, &c) in red.iter().zip(&pivots) {
        x[c] = row[cols].clone();
    }
    Some(x)
}

/// Coordinates of `v` in the (linearly independent) `basis`, if `v` lies in its span.
pub fn coordinates(basis: &[RatVec], v: &[Rational]) -> Option<RatVec> {
    if basis.is_empty() {
        return v.iter().all(Zero::is_zero).then(Vec::new);
    }
    let rows: Vec<RatVec> = (0..v.len()).map(|i| basis.iter().map(|b| b[i].clone()).collect()).collect();
    solve(&rows, v)
}

pub fn rank_of_vectors(vs: &[RatVec]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    if vs.len() * vs[0].len() > 4096 {
        return RatMatrix::from_dense(vs).rank();
    }
    rref(vs.to_vec()).1.len()
}
