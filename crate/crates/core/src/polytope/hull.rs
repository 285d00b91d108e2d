//! Exact double description over the integers.

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Makes `v` primitive (coprime entries), keeping its direction.
pub(crate) fn primitive(v: &mut [BigInt]) {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() || g == BigInt::from(1) {
        return;
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Independent rows chosen greedily, in order, with an integer echelon.
fn independent_rows(rows: &[Vec<BigInt>]) -> Vec<usize> {
    let mut echelon: Vec<(usize, Vec<BigInt>)> = Vec::new();
    let mut chosen = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let mut r = row.clone();
        for (c, p) in &echelon {
            if r[*c].is_zero() {
                continue;
            }
            let (a, b) = (p[*c].clone(), r[*c].clone());
            for (x, y) in r.iter_mut().zip(p) {
                *x = &a * &*x - &b * y;
            }
            primitive(&mut r);
        }
        if let Some(c) = r.iter().position(|x| !x.is_zero()) {
            echelon.push((c, r));
            chosen.push(i);
        }
    }
    chosen
}

/// Extreme rays of the pointed cone `{y : rows[i] . y >= 0 for all i}`.
///
/// `rows` must have full column rank. Each returned ray is primitive.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let d = rows[0].len();
    let basis = independent_rows(rows);
    assert_eq!(basis.len(), d, "constraint matrix must have full column rank");

    // rays of the simplicial start cone are the columns of the inverse
    let a: Vec<crate::exactla::RatVec> = basis
        .iter()
        .map(|&i| rows[i].iter().map(|x| crate::exactla::Rational::from_integer(x.clone())).collect())
        .collect();
    let inv = crate::exactla::inverse(&a).expect("independent rows");
    let mut rays: Vec<Vec<BigInt>> = (0..d)
        .map(|j| {
            let col: Vec<_> = inv.iter().map(|r| r[j].clone()).collect();
            crate::exactla::primitive_integer(&col)
        })
        .collect();

    let mut processed: Vec<usize> = basis.clone();
    let mut zero_sets: Vec<FixedBitSet> = rays.iter().map(|r| zero_set(rows, &processed, r)).collect();

    let mut in_basis = vec![false; rows.len()];
    for &i in &basis {
        in_basis[i] = true;
    }
    for (i, row) in rows.iter().enumerate() {
        if in_basis[i] {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(row, r)).collect();
        if vals.iter().all(|v| !v.is_negative()) {
            for (k, v) in vals.iter().enumerate() {
                if v.is_zero() {
                    zero_sets[k].grow(rows.len());
                    zero_sets[k].insert(i);
                }
            }
            processed.push(i);
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&k| vals[k].is_negative()).collect();
        let mut new_rays = Vec::new();
        let mut new_zero = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = {
                    let mut s = zero_sets[p].clone();
                    s.intersect_with(&zero_sets[n]);
                    s
                };
                if common.count_ones(..) + 2 < d {
                    continue;
                }
                let adjacent = (0..rays.len()).filter(|&k| k != p && k != n).all(|k| !common.is_subset(&zero_sets[k]));
                if !adjacent {
                    continue;
                }
                let mut r: Vec<BigInt> =
                    rays[n].iter().zip(&rays[p]).map(|(x, y)| &vals[p] * x - &vals[n] * y).collect();
                primitive(&mut r);
                let mut z = common;
                z.grow(rows.len());
                z.insert(i);
                new_rays.push(r);
                new_zero.push(z);
            }
        }
        let mut kept_rays = Vec::new();
        let mut kept_zero = Vec::new();
        for k in 0..rays.len() {
            if vals[k].is_negative() {
                continue;
            }
            let mut z = zero_sets[k].clone();
            if vals[k].is_zero() {
                z.grow(rows.len());
                z.insert(i);
            }
            kept_rays.push(rays[k].clone());
            kept_zero.push(z);
        }
        kept_rays.extend(new_rays);
        kept_zero.extend(new_zero);
        rays = kept_rays;
        zero_sets = kept_zero;
        processed.push(i);
    }
    rays
}

fn zero_set(rows: &[Vec<BigInt>], idx: &[usize], ray: &[BigInt]) -> FixedBitSet {
    let mut s = FixedBitSet::with_capacity(rows.len());
    for &i in idx {
        if dot(&rows[i], ray).is_zero() {
            s.insert(i);
        }
    }
    s
}
