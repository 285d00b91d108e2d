//! The invariants `D^k` of a polytope, computed by several independent routes.

use serde::Serialize;

use crate::complexes::{assemble, cohomology_dims, cone_fan, normal_fan, SystemSpec};
use crate::error::Result;
use crate::exactla::{self, RatMatrix, RatVec, Rational};
use crate::polytope::{double_pyramid, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Method {
    DirectQuotient,
    SpanShift,
    PolarDual,
}

/// `dim D^0 .. dim D^n` together with how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DProfile {
    pub dims: Vec<usize>,
    pub method: Method,
}

impl DProfile {
    /// `dim D^k`, zero outside `0..=n`.
    pub fn get(&self, k: isize) -> usize {
        usize::try_from(k).ok().and_then(|k| self.dims.get(k).copied()).unwrap_or(0)
    }
}

/// `D^k = H^k(cone fan, V/span)`.
pub fn d_profile(p: &Polytope) -> Result<DProfile> {
    if p.is_empty() {
        return Ok(DProfile { dims: Vec::new(), method: Method::DirectQuotient });
    }
    let n = p.ambient_dim();
    let h = cohomology_dims(&assemble(&cone_fan(p), &SystemSpec::QuotientBySpan)?)?;
    Ok(DProfile { dims: h[..=n].to_vec(), method: Method::DirectQuotient })
}

/// `D^k = H^{k+1}(cone fan, span)`, from exactness of the constant system `V`.
pub fn d_profile_span_route(p: &Polytope) -> Result<DProfile> {
    if p.is_empty() {
        return Ok(DProfile { dims: Vec::new(), method: Method::SpanShift });
    }
    let n = p.ambient_dim();
    let h = cohomology_dims(&assemble(&cone_fan(p), &SystemSpec::Span)?)?;
    Ok(DProfile { dims: h[1..=n + 1].to_vec(), method: Method::SpanShift })
}

/// `dim D^k(p) = dim D^{n-k}(p^∨)`, from the pairing between a polytope and its polar.
pub fn d_profile_dual_route(p: &Polytope) -> Result<DProfile> {
    if p.dim() < 1 {
        let mut d = d_profile(p)?;
        d.method = Method::PolarDual;
        return Ok(d);
    }
    let mut dims = d_profile(&p.polar_dual())?.dims;
    dims.reverse();
    Ok(DProfile { dims, method: Method::PolarDual })
}

/// Edge dilation vectors `(t_e)` for which every 2-face still closes up.
#[derive(Clone, Debug)]
pub struct MinkowskiSpace {
    /// Face indices of the edges, in the order of the coordinates.
    pub edges: Vec<usize>,
    pub basis: Vec<RatVec>,
}

impl MinkowskiSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Boundary of a 2-face as a closed walk `v_0 v_1 ... v_{m-1}` starting at its smallest vertex.
pub fn polygon_cycle(p: &Polytope, face: usize) -> Vec<usize> {
    let edges: Vec<(usize, usize)> =
        p.sub_facets(face).iter().map(|&e| (p.face(e).vertex_set[0], p.face(e).vertex_set[1])).collect();
    let start = p.face(face).vertex_set[0];
    let mut cycle = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = edges
            .iter()
            .find_map(|&(a, b)| match (a == cur, b == cur) {
                (true, _) if b != prev => Some(b),
                (_, true) if a != prev => Some(a),
                _ => None,
            })
            .expect("polygon boundary is a cycle");
        if next == start {
            break;
        }
        cycle.push(next);
        prev = cur;
        cur = next;
    }
    cycle
}

/// The closing-condition matrix of the edges of face `face` (use the top face for the whole polytope).
pub fn edge_system(p: &Polytope, face: usize) -> (Vec<usize>, RatMatrix) {
    let within = p.faces_within(face);
    let edges: Vec<usize> = within.iter().copied().filter(|&i| p.face(i).dim == 1).collect();
    let col = |e: usize| edges.binary_search(&e).expect("edge of the face");
    let n = p.ambient_dim();
    let mut m = RatMatrix::zeros(0, edges.len());
    for &f in within.iter().filter(|&&i| p.face(i).dim == 2) {
        let cyc = polygon_cycle(p, f);
        let mut rows = vec![vec![Rational::from_integer(0.into()); edges.len()]; n];
        for k in 0..cyc.len() {
            let (u, w) = (cyc[k], cyc[(k + 1) % cyc.len()]);
            let mut key = vec![u, w];
            key.sort_unstable();
            let e = col(p.face_index(&key).expect("consecutive vertices span an edge"));
            let d = exactla::sub(&p.vertices()[w], &p.vertices()[u]);
            for (r, x) in rows.iter_mut().zip(d) {
                r[e] = x;
            }
        }
        for r in rows {
            m.push_row(&r);
        }
    }
    (edges, m)
}

/// Minkowski summands of `p` up to translation, as edge dilation factors.
pub fn minkowski_space(p: &Polytope) -> MinkowskiSpace {
    let (edges, m) = edge_system(p, p.top_face());
    MinkowskiSpace { edges, basis: m.kernel_basis() }
}

/// One named comparison of two integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub lhs: i64,
    pub rhs: i64,
}

impl Check {
    pub fn new(name: impl Into<String>, lhs: i64, rhs: i64) -> Self {
        Check { name: name.into(), pass: lhs == rhs, lhs, rhs }
    }
}

/// `Σ_j (-1)^{j+1} j f_j` over `j = lo..=n`, for `lo` either `-1` or `0`.
pub fn simple_polytope_sum(p: &Polytope, lo: isize) -> i64 {
    let f = p.f_vector();
    (lo..=p.dim())
        .map(|j| {
            let s = if (j + 1) % 2 == 0 { 1 } else { -1 };
            s * j as i64 * f.f(j) as i64
        })
        .sum()
}

/// Evaluates every closed-form identity that applies to `p` against the direct profile.
pub fn closed_form_checks(p: &Polytope) -> Result<Vec<Check>> {
    let d = d_profile(p)?;
    let n = p.dim();
    let f = p.f_vector();
    let dk = |k: isize| d.get(k) as i64;
    let fj = |j: isize| f.f(j) as i64;
    let mut out = Vec::new();
    if n < 1 {
        return Ok(out);
    }
    out.push(Check::new("boundary terms D^0 + D^n vanish", dk(0) + dk(n), 0));
    let lhs: i64 = (0..=n).map(|k| if (k + 1) % 2 == 0 { dk(k) } else { -dk(k) }).sum();
    let rhs: i64 = (0..=n)
        .map(|k| {
            let t = (n + 1 - k) as i64 * fj(k - 1);
            if (k + 1) % 2 == 0 {
                t
            } else {
                -t
            }
        })
        .sum();
    out.push(Check::new("alternating sum", lhs, rhs));
    if n == 2 {
        out.push(Check::new("polygon D^1 = f_0 - 3", dk(1), fj(0) - 3));
    }
    if n == 3 {
        out.push(Check::new("D^2 - D^1 = f_2 - f_0", dk(2) - dk(1), fj(2) - fj(0)));
        if p.faces_are_simplices(2) {
            out.push(Check::new("simplicial D^2 = f_0 - 4", dk(2), fj(0) - 4));
        }
    }
    if p.is_simple() {
        let higher: i64 = (2..=n).map(dk).sum();
        out.push(Check::new("simple D^k = 0 for k >= 2", higher, 0));
        out.push(Check::new("simple D^1 formula, sum from j = -1", dk(1), simple_polytope_sum(p, -1)));
        let without = simple_polytope_sum(p, 0);
        out.push(Check {
            name: "simple D^1 formula, sum from j = 0 (informational)".into(),
            pass: true,
            lhs: dk(1),
            rhs: without,
        });
    }
    let ell = (1..n).filter(|&l| p.faces_are_simplices(l)).max();
    if let Some(ell) = ell {
        let lower: i64 = (0..ell).map(dk).sum();
        out.push(Check::new(format!("simplex {ell}-faces force D^k = 0 for k < {ell}"), lower, 0));
    }
    if n >= 2 {
        out.push(Check::new("Minkowski summands = D^1 + 1", minkowski_space(p).dim() as i64, dk(1) + 1));
    }
    Ok(out)
}

/// `H^{1,1}(N(Δ)) = D^1 + 1` and `H^{k,1}(N(Δ)) = D^k` for `2 <= k <= n`, as checks.
pub fn normal_fan_checks(p: &Polytope) -> Result<Vec<Check>> {
    let n = p.ambient_dim();
    let d = d_profile(p)?;
    let h = cohomology_dims(&assemble(&normal_fan(p), &SystemSpec::ExteriorQuotient(1))?)?;
    let hk1 = |k: usize| h[n - k] as i64;
    let mut out = vec![Check::new("H^{1,1} = D^1 + 1", hk1(1), d.get(1) as i64 + 1)];
    for k in 2..=n {
        out.push(Check::new(format!("H^{{{k},1}} = D^{k}"), hk1(k), d.get(k as isize) as i64));
    }
    Ok(out)
}

pub fn normal_fan_sequence_check(p: &Polytope) -> Result<bool> {
    Ok(normal_fan_checks(p)?.iter().all(|c| c.pass))
}

/// Profile of the double pyramid, next to the one predicted from `p`.
pub fn double_pyramid_recursion(p: &Polytope) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = p.dim();
    let base = d_profile(p)?;
    let actual = d_profile(&double_pyramid(p))?.dims;
    let predicted = (0..=n + 1).map(|k| base.get(k - 1) + usize::from(k == n)).collect();
    Ok((actual, predicted))
}

pub fn double_pyramid_recursion_check(p: &Polytope) -> Result<bool> {
    let (a, b) = double_pyramid_recursion(p)?;
    Ok(a == b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn dims(name: &str) -> Vec<usize> {
        d_profile(&zoo::get(name).unwrap()).unwrap().dims
    }

    #[test]
    fn small_profiles() {
        assert_eq!(dims("unit_square_lattice"), vec![0, 1, 0]);
        assert_eq!(dims("cube(3)"), vec![0, 2, 0, 0]);
        assert_eq!(dims("octahedron"), vec![0, 0, 2, 0]);
        assert_eq!(dims("simplex(3)"), vec![0, 0, 0, 0]);
        assert_eq!(d_profile(&Polytope::from_i64(&[vec![2]]).unwrap()).unwrap().dims, vec![1]);
        assert!(d_profile(&Polytope::empty()).unwrap().dims.is_empty());
    }

    #[test]
    fn routes_agree_on_square_and_cube() {
        for name in ["unit_square_lattice", "cube(3)", "pyramid_mgon(5)"] {
            let p = zoo::get(name).unwrap();
            let a = d_profile(&p).unwrap().dims;
            assert_eq!(d_profile_dual_route(&p).unwrap().dims, a, "{name}");
            assert_eq!(d_profile_span_route(&p).unwrap().dims, a, "{name}");
        }
    }

    #[test]
    fn minkowski_dimensions() {
        assert_eq!(minkowski_space(&zoo::get("unit_square_lattice").unwrap()).dim(), 2);
        assert_eq!(minkowski_space(&zoo::get("octahedron").unwrap()).dim(), 1);
        let m = minkowski_space(&zoo::get("cuboctahedron").unwrap());
        assert_eq!(m.dim(), 2);
    }

    #[test]
    fn cycle_walks_the_square() {
        let p = zoo::get("unit_square_lattice").unwrap();
        assert_eq!(polygon_cycle(&p, p.top_face()).len(), 4);
    }

    #[test]
    fn simple_formula_convention() {
        let c = zoo::get("cube(3)").unwrap();
        assert_eq!(simple_polytope_sum(&c, -1), 2);
        assert_eq!(simple_polytope_sum(&c, 0), 3);
        assert!(closed_form_checks(&c).unwrap().iter().all(|k| k.pass));
    }
}
