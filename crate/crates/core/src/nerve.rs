//! The nerve of the covering of the `ℓ`-skeleton by the `ℓ`-faces, and the
//! bottom two rows of the `E_2` page of its spectral sequence.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::d2sys;
use crate::dinv::{d_profile, edge_system};
use crate::error::{Error, Result};
use crate::exactla::{rat, RatMatrix, RatVec, Rational};
use crate::polytope::{intersect, FacePoset, Polytope};

/// A simplex of the nerve: strictly increasing positions into the cover, and the face they cut out.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Simplex {
    pub tuple: Vec<usize>,
    pub face: usize,
}

#[derive(Clone, Debug)]
pub struct Nerve {
    pub ell: usize,
    /// Face indices of the `ℓ`-faces.
    pub cover_faces: Vec<usize>,
    /// `simplices[p]` holds the tuples of length `p + 1`.
    pub simplices: Vec<Vec<Simplex>>,
    polytope: Polytope,
}

impl Nerve {
    pub fn polytope(&self) -> &Polytope {
        &self.polytope
    }

    pub fn intersection_face(&self, tuple: &[usize]) -> Option<usize> {
        let level = self.simplices.get(tuple.len().checked_sub(1)?)?;
        level.binary_search_by(|s| s.tuple.as_slice().cmp(tuple)).ok().map(|i| level[i].face)
    }

    pub fn max_p(&self) -> usize {
        self.simplices.len().saturating_sub(1)
    }
}

pub fn build_nerve(p: &Polytope, ell: usize) -> Result<Nerve> {
    let max = p.dim() - 1;
    if ell < 2 || ell as isize > max {
        return Err(Error::DimensionOutOfRange { ell, max: max.max(0) as usize });
    }
    let cover_faces: Vec<usize> = p.faces_of_dim(ell as isize).collect();
    let mut simplices: Vec<Vec<Simplex>> = Vec::new();
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for i in (0..cover_faces.len()).rev() {
        stack.push((vec![i], p.face(cover_faces[i]).vertex_set.clone()));
    }
    while let Some((tuple, set)) = stack.pop() {
        let last = *tuple.last().expect("tuples are nonempty");
        for j in (last + 1..cover_faces.len()).rev() {
            let meet = intersect(&set, &p.face(cover_faces[j]).vertex_set);
            if !meet.is_empty() {
                let mut t = tuple.clone();
                t.push(j);
                stack.push((t, meet));
            }
        }
        let face = p.face_index(&set).expect("intersections of faces are faces");
        if simplices.len() < tuple.len() {
            simplices.resize(tuple.len(), Vec::new());
        }
        simplices[tuple.len() - 1].push(Simplex { tuple, face });
    }
    for level in &mut simplices {
        level.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    }
    Ok(Nerve { ell, cover_faces, simplices, polytope: p.clone() })
}

/// `D^1` of a face as edge dilations normalised by `t_{e_0} = 0`.
struct MinkowskiFiber {
    edges: Vec<usize>,
    basis: Vec<RatVec>,
    free: Vec<usize>,
}

impl MinkowskiFiber {
    fn new(p: &Polytope, face: usize) -> Self {
        if p.face(face).dim < 2 {
            return MinkowskiFiber { edges: Vec::new(), basis: Vec::new(), free: Vec::new() };
        }
        let (edges, mut m) = edge_system(p, face);
        m.push_sparse_row(vec![(0, rat(1))]);
        MinkowskiFiber { edges, basis: m.kernel_basis(), free: m.free_columns() }
    }

    /// Coordinates of the restriction of `v` (on the edges of `larger`) to this face.
    fn restrict(&self, larger: &MinkowskiFiber, v: &[Rational]) -> RatVec {
        let value = |e: usize| &v[larger.edges.binary_search(&e).expect("edge of the larger face")];
        let shift = value(self.edges[0]).clone();
        self.free.iter().map(|&c| value(self.edges[c]) - &shift).collect()
    }
}

enum Fibers {
    Point,
    Minkowski(HashMap<usize, MinkowskiFiber>),
}

impl Fibers {
    fn dim(&self, p: &Polytope, face: usize) -> usize {
        match self {
            Fibers::Point => usize::from(p.face(face).dim == 0),
            Fibers::Minkowski(m) => m[&face].basis.len(),
        }
    }

    /// Matrix of the restriction from `from` to `to`, as rows indexed by the basis of `to`.
    fn restriction(&self, from: usize, to: usize) -> Vec<RatVec> {
        match self {
            Fibers::Point => vec![vec![rat(1)]],
            Fibers::Minkowski(m) => {
                let (big, small) = (&m[&from], &m[&to]);
                let cols: Vec<RatVec> = big.basis.iter().map(|b| small.restrict(big, b)).collect();
                (0..small.basis.len()).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
            }
        }
    }
}

struct CochainComplex<'a> {
    nv: &'a Nerve,
    fibers: Fibers,
    offsets: Vec<Vec<usize>>,
    dims: Vec<usize>,
}

impl<'a> CochainComplex<'a> {
    fn new(nv: &'a Nerve, fibers: Fibers, keep: &dyn Fn(&Simplex) -> bool) -> Self {
        let p = &nv.polytope;
        let mut offsets = Vec::new();
        let mut dims = Vec::new();
        for level in &nv.simplices {
            let mut off = Vec::with_capacity(level.len());
            let mut total = 0;
            for s in level {
                off.push(total);
                if keep(s) {
                    total += fibers.dim(p, s.face);
                }
            }
            offsets.push(off);
            dims.push(total);
        }
        CochainComplex { nv, fibers, offsets, dims }
    }

    fn dim(&self, p: usize) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }

    fn block_dim(&self, level: usize, i: usize) -> usize {
        let next = self.offsets[level].get(i + 1).copied().unwrap_or(self.dims[level]);
        next - self.offsets[level][i]
    }

    /// `δ: C^p -> C^{p+1}`.
    fn differential(&self, p: usize) -> RatMatrix {
        let mut m = RatMatrix::zeros(0, self.dim(p));
        if self.dim(p) == 0 || self.dim(p + 1) == 0 {
            return m;
        }
        for (i, s) in self.nv.simplices[p + 1].iter().enumerate() {
            let r = self.block_dim(p + 1, i);
            if r == 0 {
                continue;
            }
            let mut rows: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); r];
            for k in 0..s.tuple.len() {
                let mut t = s.tuple.clone();
                t.remove(k);
                let j = self.nv.simplices[p]
                    .binary_search_by(|x| x.tuple.as_slice().cmp(&t))
                    .expect("nerve is closed under faces");
                if self.block_dim(p, j) == 0 {
                    continue;
                }
                let base = self.offsets[p][j];
                let sign = rat(if k % 2 == 0 { 1 } else { -1 });
                let res = self.fibers.restriction(self.nv.simplices[p][j].face, s.face);
                for (row, rr) in rows.iter_mut().zip(&res) {
                    for (c, v) in rr.iter().enumerate() {
                        if *v != rat(0) {
                            *row.entry(base + c).or_insert_with(|| rat(0)) += v * &sign;
                        }
                    }
                }
            }
            for row in rows {
                m.push_sparse_row(row.into_iter().filter(|e| e.1 != rat(0)).collect());
            }
        }
        m
    }

    fn cohomology(&self, p: usize) -> usize {
        let out = self.differential(p).rank();
        let inc = if p > 0 { self.differential(p - 1).rank() } else { 0 };
        self.dim(p) - out - inc
    }
}

/// `E_2^{p,q} = H^p(M, T^q)` for `q ∈ {0, 1}`.
pub fn e2_entry(nv: &Nerve, p: usize, q: usize) -> Result<usize> {
    let poly = &nv.polytope;
    match q {
        0 => {
            // the complex splits into one summand per vertex
            let mut total = 0;
            for v in 0..poly.num_vertices() {
                let cx = CochainComplex::new(nv, Fibers::Point, &|s| poly.face(s.face).vertex_set == [v]);
                total += cx.cohomology(p);
            }
            Ok(total)
        }
        1 => {
            let mut fibers = HashMap::new();
            for level in &nv.simplices {
                for s in level {
                    fibers.entry(s.face).or_insert_with(|| MinkowskiFiber::new(poly, s.face));
                }
            }
            Ok(CochainComplex::new(nv, Fibers::Minkowski(fibers), &|_| true).cohomology(p))
        }
        _ => Err(Error::UnsupportedSpec(format!("only q = 0 and q = 1 are supported, got {q}"))),
    }
}

/// The `(p, q)` table for `q ∈ {0, 1}` and `p = 0..=max_p`.
pub fn e2_page(nv: &Nerve) -> Result<Vec<[usize; 2]>> {
    (0..=nv.max_p()).map(|p| Ok([e2_entry(nv, p, 0)?, e2_entry(nv, p, 1)?])).collect()
}

/// `H~^k` of the `k`-skeleton of a face poset.
pub fn skeleton_reduced_cohomology(figure: &FacePoset, k: isize) -> usize {
    figure.skeleton_cohomology(k)[(k + 1) as usize]
}

/// Sum over vertices of `H~^{ℓ-1}` of the `(ℓ-1)`-skeleton of the vertex figure.
pub fn vertex_figure_sum(p: &Polytope, ell: usize) -> usize {
    (0..p.num_vertices()).map(|v| skeleton_reduced_cohomology(&p.vertex_figure(v), ell as isize - 1)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankBound {
    pub d2: usize,
    pub e2_11: usize,
    /// Kernel dimension of the flag system, when its hypothesis holds.
    pub flag_kernel: Option<usize>,
}

impl RankBound {
    pub fn holds(&self) -> bool {
        self.d2 <= self.e2_11 && self.flag_kernel.is_none_or(|k| k == self.d2)
    }
}

pub fn d2_rank_bound(p: &Polytope) -> Result<RankBound> {
    for pi in p.faces_of_dim(3) {
        if d_profile(&p.face_polytope(pi))?.get(2) != 0 {
            return Err(Error::HypothesisViolated(format!("3-face {:?} has nonzero D^2", p.face(pi).vertex_set)));
        }
    }
    let nv = build_nerve(p, 3)?;
    let d2 = d_profile(p)?.get(2);
    let e2_11 = e2_entry(&nv, 1, 1)?;
    let flag_kernel = match d2sys::build_flag_system(p) {
        Ok(sys) => Some(sys.kernel_dim()),
        Err(Error::HypothesisViolated(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(RankBound { d2, e2_11, flag_kernel })
}

/// `dim D^2 <= dim E_2^{1,1}`, with equality to the flag-system kernel when that applies.
pub fn d2_rank_bound_check(p: &Polytope) -> Result<bool> {
    Ok(d2_rank_bound(p)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    #[test]
    fn range_is_checked() {
        assert!(matches!(build_nerve(&zoo::mgon(4), 2), Err(Error::DimensionOutOfRange { .. })));
    }

    #[test]
    fn simplex_nerve() {
        let p = zoo::simplex(4);
        let nv = build_nerve(&p, 3).unwrap();
        assert_eq!(nv.cover_faces.len(), 5);
        let total: usize = nv.simplices.iter().map(Vec::len).sum();
        assert_eq!(total, 30);
        assert_eq!(e2_entry(&nv, 3, 0).unwrap(), vertex_figure_sum(&p, 3));
        assert!(d2_rank_bound_check(&p).unwrap());
    }

    #[test]
    fn double_pyramid_over_cuboctahedron() {
        let p = zoo::get("dp_cuboctahedron").unwrap();
        let nv = build_nerve(&p, 3).unwrap();
        assert_eq!(nv.cover_faces.len(), 28);
        assert_eq!(e2_entry(&nv, 1, 1).unwrap(), 6);
        assert_eq!(e2_entry(&nv, 0, 1).unwrap(), 0);
        assert_eq!(e2_entry(&nv, 3, 0).unwrap(), 14);
        assert_eq!(vertex_figure_sum(&p, 3), 14);
        let rb = d2_rank_bound(&p).unwrap();
        assert_eq!(rb, RankBound { d2: 1, e2_11: 6, flag_kernel: Some(1) });
    }

    #[test]
    fn circle_skeleton() {
        let tri = zoo::mgon(3).face_poset();
        assert_eq!(skeleton_reduced_cohomology(&tri, 1), 1);
    }
}
