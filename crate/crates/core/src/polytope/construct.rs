use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{self, RatVec, Rational};

use super::Polytope;

fn lift(v: &[Rational], h: Rational) -> RatVec {
    let mut w = v.to_vec();
    w.push(h);
    w
}

fn apex(n: usize, h: Rational) -> RatVec {
    lift(&vec![Rational::zero(); n], h)
}

fn full_dim(p: &Polytope) {
    assert!(!p.is_empty(), "constructor needs a nonempty polytope");
}

/// Pyramid with apex `e_{n+1}` over `p` placed at height 0.
pub fn pyramid(p: &Polytope) -> Polytope {
    full_dim(p);
    let n = p.ambient_dim();
    let mut pts: Vec<RatVec> = p.vertices().iter().map(|v| lift(v, Rational::zero())).collect();
    pts.push(apex(n, Rational::one()));
    Polytope::from_vertices(&pts).expect("nonempty")
}

/// Double pyramid with apexes `±e_{n+1}` over `p` centred at its barycenter.
pub fn double_pyramid(p: &Polytope) -> Polytope {
    full_dim(p);
    let n = p.ambient_dim();
    let b = p.barycenter();
    let mut pts: Vec<RatVec> = p.vertices().iter().map(|v| lift(&exactla::sub(v, &b), Rational::zero())).collect();
    pts.push(apex(n, Rational::one()));
    pts.push(apex(n, -Rational::one()));
    Polytope::from_vertices(&pts).expect("nonempty")
}

/// `p x [0, 1]`.
pub fn prism(p: &Polytope) -> Polytope {
    full_dim(p);
    let mut pts: Vec<RatVec> = p.vertices().iter().map(|v| lift(v, Rational::zero())).collect();
    pts.extend(p.vertices().iter().map(|v| lift(v, Rational::one())));
    Polytope::from_vertices(&pts).expect("nonempty")
}

/// Cartesian product.
pub fn product(p: &Polytope, q: &Polytope) -> Polytope {
    full_dim(p);
    full_dim(q);
    let mut pts = Vec::new();
    for v in p.vertices() {
        for w in q.vertices() {
            let mut x = v.clone();
            x.extend(w.iter().cloned());
            pts.push(x);
        }
    }
    Polytope::from_vertices(&pts).expect("nonempty")
}

/// Free sum: both polytopes centred at their barycenters in complementary subspaces.
pub fn free_sum(p: &Polytope, q: &Polytope) -> Polytope {
    full_dim(p);
    full_dim(q);
    let (bp, bq) = (p.barycenter(), q.barycenter());
    let zp = vec![Rational::zero(); p.ambient_dim()];
    let zq = vec![Rational::zero(); q.ambient_dim()];
    let mut pts = Vec::new();
    for v in p.vertices() {
        let mut x = exactla::sub(v, &bp);
        x.extend(zq.iter().cloned());
        pts.push(x);
    }
    for w in q.vertices() {
        let mut x = zp.clone();
        x.extend(exactla::sub(w, &bq));
        pts.push(x);
    }
    Polytope::from_vertices(&pts).expect("nonempty")
}

/// True iff the 3-face `f` has a 2-face containing all of its vertices but one.
pub fn is_pyramid_3face(f: usize, p: &Polytope) -> Result<bool> {
    let face = p.face(f);
    if face.dim != 3 {
        return Err(Error::DimensionMismatch { expected: 3, found: face.dim.max(0) as usize });
    }
    let within = p.faces_within(f);
    Ok(within.iter().any(|&g| p.face(g).dim == 2 && p.face(g).len() + 1 == face.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::FVector;

    fn square() -> Polytope {
        Polytope::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    fn triangle() -> Polytope {
        Polytope::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1]]).unwrap()
    }

    #[test]
    fn octahedron_from_square() {
        let o = double_pyramid(&square());
        assert_eq!(o.f_vector(), FVector(vec![1, 6, 12, 8, 1]));
    }

    #[test]
    fn pyramid_and_prism() {
        assert_eq!(pyramid(&square()).f_vector(), FVector(vec![1, 5, 8, 5, 1]));
        assert_eq!(prism(&triangle()).f_vector(), FVector(vec![1, 6, 9, 5, 1]));
        assert_eq!(product(&square(), &triangle()).f_vector().f(0), 12);
        assert_eq!(free_sum(&square(), &triangle()).f_vector().f(0), 7);
    }

    #[test]
    fn pyramid_faces() {
        let tet = pyramid(&triangle());
        let sqp = pyramid(&square());
        let tp = prism(&triangle());
        for (p, want) in [(tet, true), (sqp, true), (tp, false)] {
            assert_eq!(is_pyramid_3face(p.top_face(), &p).unwrap(), want);
        }
        let s = square();
        assert!(is_pyramid_3face(s.top_face(), &s).is_err());
    }
}
