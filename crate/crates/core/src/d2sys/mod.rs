//! The linear system in flag variables `s(a, Π, ε)` whose solution space is `D^2`,
//! and the cleaning process that certifies its vanishing.

mod clean;

pub use clean::{certify_vanishing, clean, clean_in_random_order, CleanEvent, CleanState, Verdict};

use std::collections::HashMap;

use serde::Serialize;

use crate::complexes::{cone_fan, OrientedFan};
use crate::dinv::d_profile;
use crate::error::{Error, Result};
use crate::exactla::{rat, RatMatrix, RatVec, Rational};
use crate::polytope::Polytope;

/// A `(0,2,3)`-flag: vertex `a` in 2-face `eps` in 3-face `pi` (face indices).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Flag {
    pub a: usize,
    pub eps: usize,
    pub pi: usize,
}

#[derive(Clone, Debug)]
pub struct FlagSystem {
    pub variables: Vec<Flag>,
    /// `ε ↦ Π(ε)`, the first 3-face containing `ε`.
    pub reference: HashMap<usize, usize>,
    /// `(ε, F) ↦ (Π⁺, Π⁻)` for every flag of a 2-face in a 4-face.
    pub between: HashMap<(usize, usize), (usize, usize)>,
    pub equations: RatMatrix,
    /// Number of rows from each of the three families.
    pub family_rows: [usize; 3],
}

impl FlagSystem {
    pub fn index_of(&self, f: &Flag) -> Option<usize> {
        self.variables.binary_search(f).ok()
    }

    pub fn kernel_dim(&self) -> usize {
        self.variables.len() - self.equations.rank()
    }

    /// True iff `x` solves every equation.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        self.equations.mul_vec(x).iter().all(|v| *v == rat(0))
    }
}

fn faces_between(p: &Polytope, lo: usize, hi: usize, dim: isize) -> Vec<usize> {
    p.faces_of_dim(dim)
        .filter(|&i| {
            let s = &p.face(i).vertex_set;
            crate::polytope::is_subset(&p.face(lo).vertex_set, s)
                && crate::polytope::is_subset(s, &p.face(hi).vertex_set)
        })
        .collect()
}

/// Fails unless `D^1 = D^2 = 0` for every 3-face.
pub fn check_hypothesis(p: &Polytope) -> Result<()> {
    for pi in p.faces_of_dim(3) {
        let d = d_profile(&p.face_polytope(pi))?;
        if d.get(1) != 0 || d.get(2) != 0 {
            return Err(Error::HypothesisViolated(format!(
                "3-face {:?} has D^1 = {}, D^2 = {}",
                p.face(pi).vertex_set,
                d.get(1),
                d.get(2)
            )));
        }
    }
    Ok(())
}

/// Orders the two 3-faces between `ε` and `F` by the sign `ε(ε,Π)·ε(Π,F)` of the cone fan.
fn order_pair(fan: &OrientedFan, eps: usize, f: usize, pair: [usize; 2]) -> (usize, usize) {
    let s = |pi: usize| fan.sign(eps, pi) * fan.sign(pi, f);
    let (s0, s1) = (s(pair[0]), s(pair[1]));
    assert_eq!(s0, -s1, "the two faces between must carry opposite signs");
    if s0 > 0 {
        (pair[0], pair[1])
    } else {
        (pair[1], pair[0])
    }
}

/// Assembles the three equation families.
pub fn build_flag_system(p: &Polytope) -> Result<FlagSystem> {
    if p.dim() < 4 {
        return Err(Error::PreconditionViolated(format!("flag system needs dimension at least 4, got {}", p.dim())));
    }
    check_hypothesis(p)?;
    let n = p.ambient_dim();
    let fan = cone_fan(p);

    let mut variables = Vec::new();
    for eps in p.faces_of_dim(2) {
        for &pi in p.super_facets(eps) {
            for &a in &p.face(eps).vertex_set {
                variables.push(Flag { a, eps, pi });
            }
        }
    }
    variables.sort();
    let col: HashMap<Flag, usize> = variables.iter().enumerate().map(|(i, f)| (*f, i)).collect();

    let reference: HashMap<usize, usize> = p
        .faces_of_dim(2)
        .map(|eps| (eps, *p.super_facets(eps).iter().min().expect("a 2-face of a 4-polytope lies in a 3-face")))
        .collect();

    let mut between = HashMap::new();
    for f in p.faces_of_dim(4) {
        for eps in faces_between(p, 0, f, 2) {
            let mid = faces_between(p, eps, f, 3);
            assert_eq!(mid.len(), 2, "a (2,4)-flag has exactly two faces in between");
            between.insert((eps, f), order_pair(&fan, eps, f, [mid[0], mid[1]]));
        }
    }

    let mut eq = RatMatrix::zeros(0, variables.len());
    let mut family_rows = [0; 3];
    let one = rat(1);

    let mut keys: Vec<&(usize, usize)> = between.keys().collect();
    keys.sort();
    for f in p.faces_of_dim(4) {
        for &a in &p.face(f).vertex_set {
            let mut row: Vec<(usize, Rational)> = Vec::new();
            for &&(eps, ff) in keys.iter().filter(|k| k.1 == f) {
                if !p.face(eps).contains(a) {
                    continue;
                }
                let (plus, minus) = between[&(eps, ff)];
                row.push((col[&Flag { a, eps, pi: plus }], one.clone()));
                row.push((col[&Flag { a, eps, pi: minus }], -one.clone()));
            }
            push_sparse(&mut eq, row);
            family_rows[0] += 1;
        }
    }
    for eps in p.faces_of_dim(2) {
        for &pi in p.super_facets(eps) {
            for i in 0..=n {
                let row: Vec<(usize, Rational)> = p
                    .face(eps)
                    .vertex_set
                    .iter()
                    .map(|&a| {
                        let c = if i < n { p.vertices()[a][i].clone() } else { one.clone() };
                        (col[&Flag { a, eps, pi }], c)
                    })
                    .collect();
                push_sparse(&mut eq, row);
                family_rows[1] += 1;
            }
        }
    }
    for eps in p.faces_of_dim(2) {
        for &a in &p.face(eps).vertex_set {
            push_sparse(&mut eq, vec![(col[&Flag { a, eps, pi: reference[&eps] }], one.clone())]);
            family_rows[2] += 1;
        }
    }
    Ok(FlagSystem { variables, reference, between, equations: eq, family_rows })
}

fn push_sparse(m: &mut RatMatrix, mut row: Vec<(usize, Rational)>) {
    row.sort_by_key(|e| e.0);
    let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(row.len());
    for (c, v) in row {
        match merged.last_mut() {
            Some(last) if last.0 == c => last.1 += v,
            _ => merged.push((c, v)),
        }
    }
    merged.retain(|e| e.1 != rat(0));
    m.push_sparse_row(merged);
}

/// `dim D^2` as the kernel dimension of the flag system.
///
/// In dimension 3 the polytope is its own only 3-face and the system says
/// nothing; the direct value is returned instead.
pub fn d2_via_flags(p: &Polytope) -> Result<usize> {
    if p.dim() == 3 {
        return Ok(d_profile(p)?.get(2));
    }
    Ok(build_flag_system(p)?.kernel_dim())
}

/// The flag system with every variable on a triangular 2-face forced to zero.
pub fn kernel_dim_without_triangles(sys: &FlagSystem, p: &Polytope) -> usize {
    let mut m = sys.equations.clone();
    for (i, f) in sys.variables.iter().enumerate() {
        if p.face(f.eps).len() == 3 {
            let mut row = vec![rat(0); sys.variables.len()];
            row[i] = rat(1);
            m.push_row(&row);
        }
    }
    sys.variables.len() - m.rank()
}

/// Vector with `±1` alternating around each quadrilateral.
///
/// Values sit on the 3-face that is not the reference one; each quadrilateral
/// gets a global sign `g_ε`, chosen by search so that the vertex equations hold.
pub fn alternating_element(p: &Polytope, sys: &FlagSystem) -> Option<RatVec> {
    let quads: Vec<usize> = p.faces_of_dim(2).filter(|&e| p.face(e).len() == 4).collect();
    let mut base: Vec<RatVec> = Vec::new();
    for &eps in &quads {
        let cyc = crate::dinv::polygon_cycle(p, eps);
        let pi = *p
            .super_facets(eps)
            .iter()
            .find(|&&pi| pi != sys.reference[&eps])
            .expect("a 2-face of a 4-polytope lies in two 3-faces");
        let mut v = vec![rat(0); sys.variables.len()];
        for (k, &a) in cyc.iter().enumerate() {
            let i = sys.index_of(&Flag { a, eps, pi }).expect("flag variable");
            v[i] = rat(if k % 2 == 0 { 1 } else { -1 });
        }
        base.push(v);
    }
    let images: Vec<RatVec> = base.iter().map(|v| sys.equations.mul_vec(v)).collect();
    let rows = sys.equations.nrows();
    let mut signs = vec![0i64; quads.len()];
    let mut acc = vec![rat(0); rows];
    if !search_signs(0, &images, &mut signs, &mut acc) {
        return None;
    }
    let mut x = vec![rat(0); sys.variables.len()];
    for (v, &g) in base.iter().zip(&signs) {
        for (xi, vi) in x.iter_mut().zip(v) {
            *xi += vi * rat(g);
        }
    }
    Some(x)
}

fn search_signs(k: usize, images: &[RatVec], signs: &mut Vec<i64>, acc: &mut RatVec) -> bool {
    if k == images.len() {
        return acc.iter().all(|v| *v == rat(0));
    }
    for g in [1, -1] {
        signs[k] = g;
        for (a, v) in acc.iter_mut().zip(&images[k]) {
            *a += v * rat(g);
        }
        // rows touched by no later quadrilateral must already balance
        let dead =
            acc.iter().enumerate().any(|(r, v)| *v != rat(0) && images[k + 1..].iter().all(|im| im[r] == rat(0)));
        if !dead && search_signs(k + 1, images, signs, acc) {
            return true;
        }
        for (a, v) in acc.iter_mut().zip(&images[k]) {
            *a -= v * rat(g);
        }
    }
    false
}

/// True iff some alternating `±1` assignment on the quadrilaterals solves the flag system.
pub fn sign_element_check(p: &Polytope) -> Result<bool> {
    if p.dim() != 4 {
        return Err(Error::PreconditionViolated("sign element check needs a 4-polytope".into()));
    }
    if p.faces_of_dim(2).any(|e| p.face(e).len() > 4) {
        return Err(Error::PreconditionViolated("2-faces must be triangles or quadrilaterals".into()));
    }
    let sys = build_flag_system(p)?;
    Ok(alternating_element(p, &sys).is_some_and(|x| sys.satisfied_by(&x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn simplex_has_trivial_system() {
        let p = zoo::simplex(4);
        let sys = build_flag_system(&p).unwrap();
        assert_eq!(sys.kernel_dim(), 0);
        assert!(sign_element_check(&p).unwrap());
    }

    #[test]
    fn double_pyramid_over_cuboctahedron() {
        let p = zoo::get("dp_cuboctahedron").unwrap();
        let sys = build_flag_system(&p).unwrap();
        assert_eq!(sys.kernel_dim(), 1);
        assert_eq!(kernel_dim_without_triangles(&sys, &p), 1);
        assert!(sign_element_check(&p).unwrap());
    }

    #[test]
    fn cube_faces_violate_hypothesis() {
        let p = zoo::cube(4);
        assert!(matches!(build_flag_system(&p), Err(Error::HypothesisViolated(_))));
    }
}
