//! Convex polytopes with exact rational vertices and their face lattices.

mod construct;
mod hull;
mod poset;

pub use construct::{double_pyramid, free_sum, is_pyramid_3face, prism, product, pyramid};
pub use poset::FacePoset;

use std::collections::{BTreeSet, HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactla::{self, RatVec, Rational};

/// A face, recorded by the indices of the polytope vertices lying on it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    pub dim: isize,
    pub vertex_set: Vec<usize>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.vertex_set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertex_set.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertex_set.binary_search(&v).is_ok()
    }
}

/// Face numbers `f_{-1}, f_0, ..., f_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    /// `f_j`, for `j >= -1`.
    pub fn f(&self, j: isize) -> usize {
        usize::try_from(j + 1).ok().and_then(|i| self.0.get(i).copied()).unwrap_or(0)
    }

    /// `sum_j (-1)^j f_j`, which vanishes for every nonempty polytope.
    pub fn euler_sum(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &f)| if i % 2 == 1 { f as i64 } else { -(f as i64) }).sum()
    }

    /// The counts `f_0 .. f_{n-1}` of proper nonempty faces.
    pub fn proper(&self) -> &[usize] {
        let n = self.0.len();
        if n < 2 {
            &[]
        } else {
            &self.0[1..n - 1]
        }
    }
}

/// Facet inequality `<normal, x> + offset >= 0`, with `normal` the inner normal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inequality {
    pub normal: RatVec,
    pub offset: Rational,
}

impl Inequality {
    pub fn eval(&self, x: &[Rational]) -> Rational {
        exactla::dot(&self.normal, x) + &self.offset
    }
}

/// A full-dimensional polytope together with its face lattice.
#[derive(Clone, Debug)]
pub struct Polytope {
    name: Option<String>,
    dim: isize,
    vertices: Vec<RatVec>,
    faces: Vec<Face>,
    index: HashMap<Vec<usize>, usize>,
    facets: Vec<usize>,
    inequalities: Vec<Inequality>,
    sub_facets: Vec<Vec<usize>>,
    super_facets: Vec<Vec<usize>>,
}

impl Polytope {
    /// The empty polytope, of dimension -1.
    pub fn empty() -> Self {
        Self::assemble(None, -1, Vec::new(), vec![Face { dim: -1, vertex_set: Vec::new() }], Vec::new(), Vec::new())
    }

    /// Convex hull of `points`, re-expressed in its affine hull if that is a proper subspace.
    pub fn from_vertices(points: &[RatVec]) -> Result<Self> {
        let Some(first) = points.first() else {
            return Err(Error::EmptyInput);
        };
        let ambient = first.len();
        if let Some(bad) = points.iter().find(|p| p.len() != ambient) {
            return Err(Error::DimensionMismatch { expected: ambient, found: bad.len() });
        }
        let mut distinct: Vec<RatVec> = Vec::new();
        for p in points {
            if !distinct.contains(p) {
                distinct.push(p.clone());
            }
        }
        let coords = affine_coordinates(&distinct);
        let dim = coords[0].len();
        if dim == 0 {
            let faces = vec![Face { dim: -1, vertex_set: vec![] }, Face { dim: 0, vertex_set: vec![0] }];
            return Ok(Self::assemble(None, 0, coords[..1].to_vec(), faces, Vec::new(), Vec::new()));
        }

        let rows: Vec<Vec<num_bigint::BigInt>> = coords
            .iter()
            .map(|x| {
                let mut h = x.clone();
                h.push(Rational::one());
                exactla::primitive_integer(&h)
            })
            .collect();
        let mut rays = hull::extreme_rays(&rows);
        rays.sort();
        let ineqs: Vec<Inequality> = rays
            .iter()
            .map(|r| {
                let q: RatVec = r.iter().map(|x| Rational::from_integer(x.clone())).collect();
                Inequality { normal: q[..dim].to_vec(), offset: q[dim].clone() }
            })
            .collect();
        let point_sets: Vec<FixedBitSet> = ineqs
            .iter()
            .map(|h| {
                let mut s = FixedBitSet::with_capacity(coords.len());
                for (i, x) in coords.iter().enumerate() {
                    if h.eval(x).is_zero() {
                        s.insert(i);
                    }
                }
                s
            })
            .collect();

        // a point is a vertex iff the facets through it cut out exactly that point
        let extreme: Vec<usize> = (0..coords.len())
            .filter(|&i| {
                let mut s = FixedBitSet::with_capacity(coords.len());
                s.insert_range(..);
                for ps in point_sets.iter().filter(|ps| ps.contains(i)) {
                    s.intersect_with(ps);
                }
                s.count_ones(..) == 1
            })
            .collect();
        let mut new_index = vec![usize::MAX; coords.len()];
        for (k, &i) in extreme.iter().enumerate() {
            new_index[i] = k;
        }
        let vertices: Vec<RatVec> = extreme.iter().map(|&i| coords[i].clone()).collect();
        let facet_sets: Vec<Vec<usize>> = point_sets
            .iter()
            .map(|ps| ps.ones().filter(|&i| new_index[i] != usize::MAX).map(|i| new_index[i]).collect())
            .collect();

        let faces = close_under_intersection(&vertices, &facet_sets, dim as isize);
        Ok(Self::assemble(None, dim as isize, vertices, faces, facet_sets, ineqs))
    }

    pub fn from_i64(points: &[Vec<i64>]) -> Result<Self> {
        let pts: Vec<RatVec> = points.iter().map(|p| exactla::rat_vec(p)).collect();
        Self::from_vertices(&pts)
    }

    fn assemble(
        name: Option<String>,
        dim: isize,
        vertices: Vec<RatVec>,
        mut faces: Vec<Face>,
        facet_sets: Vec<Vec<usize>>,
        ineqs: Vec<Inequality>,
    ) -> Self {
        faces.sort();
        let index: HashMap<Vec<usize>, usize> =
            faces.iter().enumerate().map(|(i, f)| (f.vertex_set.clone(), i)).collect();
        let mut pairs: Vec<(usize, Inequality)> = facet_sets.iter().zip(ineqs).map(|(s, h)| (index[s], h)).collect();
        pairs.sort_by_key(|p| p.0);
        let (facets, inequalities): (Vec<usize>, Vec<Inequality>) = pairs.into_iter().unzip();

        let n = faces.len();
        let bits: Vec<FixedBitSet> = faces
            .iter()
            .map(|f| {
                let mut b = FixedBitSet::with_capacity(vertices.len());
                for &v in &f.vertex_set {
                    b.insert(v);
                }
                b
            })
            .collect();
        let mut sub_facets = vec![Vec::new(); n];
        let mut super_facets = vec![Vec::new(); n];
        let start_of_dim = |d: isize| faces.partition_point(|f| f.dim < d);
        for i in 0..n {
            let d = faces[i].dim;
            let (lo, hi) = (start_of_dim(d - 1), start_of_dim(d));
            for j in lo..hi {
                if bits[j].is_subset(&bits[i]) {
                    sub_facets[i].push(j);
                    super_facets[j].push(i);
                }
            }
        }
        Polytope { name, dim, vertices, faces, index, facets, inequalities, sub_facets, super_facets }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Dimension of the polytope, which equals the ambient dimension (`-1` if empty).
    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim.max(0) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.dim < 0
    }

    pub fn vertices(&self) -> &[RatVec] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// All faces, including the empty face and the polytope itself, sorted by (dim, vertex set).
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    /// Index of the face with exactly this (sorted) vertex set.
    pub fn face_index(&self, vertex_set: &[usize]) -> Option<usize> {
        self.index.get(vertex_set).copied()
    }

    pub fn faces_of_dim(&self, d: isize) -> impl Iterator<Item = usize> + '_ {
        let lo = self.faces.partition_point(|f| f.dim < d);
        let hi = self.faces.partition_point(|f| f.dim <= d);
        lo..hi
    }

    pub fn top_face(&self) -> usize {
        self.faces.len() - 1
    }

    /// Faces of dimension one less contained in face `i`.
    pub fn sub_facets(&self, i: usize) -> &[usize] {
        &self.sub_facets[i]
    }

    /// Faces of dimension one more containing face `i`.
    pub fn super_facets(&self, i: usize) -> &[usize] {
        &self.super_facets[i]
    }

    /// Face indices of the facets, with matching [`Polytope::inequalities`].
    pub fn facets(&self) -> &[usize] {
        &self.facets
    }

    pub fn inequalities(&self) -> &[Inequality] {
        &self.inequalities
    }

    /// Indices of the faces containing face `i` (including `i`).
    pub fn faces_containing(&self, i: usize) -> Vec<usize> {
        let set = &self.faces[i].vertex_set;
        (0..self.faces.len()).filter(|&j| is_subset(set, &self.faces[j].vertex_set)).collect()
    }

    /// Indices of the faces contained in face `i` (including `i` and the empty face).
    pub fn faces_within(&self, i: usize) -> Vec<usize> {
        let set = &self.faces[i].vertex_set;
        (0..=i).filter(|&j| is_subset(&self.faces[j].vertex_set, set)).collect()
    }

    /// Smallest face containing all the given vertices.
    pub fn join(&self, vertices: &[usize]) -> usize {
        (0..self.faces.len())
            .find(|&j| vertices.iter().all(|v| self.faces[j].contains(*v)))
            .expect("the polytope contains every vertex")
    }

    /// Face given by intersecting two faces.
    pub fn meet(&self, a: usize, b: usize) -> usize {
        let s = intersect(&self.faces[a].vertex_set, &self.faces[b].vertex_set);
        self.index[&s]
    }

    pub fn f_vector(&self) -> FVector {
        let mut f = vec![0; (self.dim + 2) as usize];
        for face in &self.faces {
            f[(face.dim + 1) as usize] += 1;
        }
        FVector(f)
    }

    pub fn barycenter(&self) -> RatVec {
        let n = self.ambient_dim();
        let k = Rational::from_integer(self.vertices.len().into());
        let mut b = vec![Rational::zero(); n];
        for v in &self.vertices {
            b = exactla::add(&b, v);
        }
        exactla::scale(&b, &k.recip())
    }

    /// The face as a polytope of its own, in coordinates of its affine hull.
    pub fn face_polytope(&self, i: usize) -> Polytope {
        let f = &self.faces[i];
        if f.vertex_set.is_empty() {
            return Polytope::empty();
        }
        let pts: Vec<RatVec> = f.vertex_set.iter().map(|&v| self.vertices[v].clone()).collect();
        Polytope::from_vertices(&pts).expect("a face has vertices")
    }

    /// Polar dual of the polytope translated so that its barycenter is the origin.
    ///
    /// Vertex `j` of the result corresponds to facet `j` of `self`.
    pub fn polar_dual(&self) -> Polytope {
        assert!(self.dim >= 1, "polar dual needs a polytope of positive dimension");
        let b = self.barycenter();
        let pts: Vec<RatVec> = self
            .inequalities
            .iter()
            .map(|h| {
                let c = h.eval(&b);
                exactla::scale(&h.normal, &(-c.recip()))
            })
            .collect();
        Polytope::from_vertices(&pts).expect("dual of a full-dimensional polytope")
    }

    /// Applies `x -> a x + t` to every vertex.
    pub fn affine_image(&self, a: &[RatVec], t: &[Rational]) -> Result<Polytope> {
        let pts: Vec<RatVec> = self
            .vertices
            .iter()
            .map(|v| a.iter().zip(t).map(|(row, ti)| exactla::dot(row, v) + ti).collect())
            .collect();
        Polytope::from_vertices(&pts)
    }

    /// Faces containing vertex `v`, as an abstract poset with dimensions shifted down by one.
    pub fn vertex_figure(&self, v: usize) -> FacePoset {
        let vf = self.index[&vec![v]];
        let members = self.faces_containing(vf);
        FacePoset::from_sets(
            members.iter().map(|&i| (self.faces[i].dim - 1, self.faces[i].vertex_set.clone())).collect(),
        )
    }

    /// The face lattice as an abstract poset.
    pub fn face_poset(&self) -> FacePoset {
        FacePoset::from_sets(self.faces.iter().map(|f| (f.dim, f.vertex_set.clone())).collect())
    }

    /// True iff every vertex coordinate is an integer.
    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().flatten().all(|x| x.is_integer())
    }

    /// True iff the polytope is simple (every vertex lies in exactly `dim` facets).
    pub fn is_simple(&self) -> bool {
        (0..self.vertices.len())
            .all(|v| self.facets.iter().filter(|&&f| self.faces[f].contains(v)).count() == self.dim as usize)
    }

    /// True iff all faces of dimension `d` are simplices.
    pub fn faces_are_simplices(&self, d: isize) -> bool {
        self.faces_of_dim(d).all(|i| self.faces[i].len() as isize == d + 1)
    }

    /// Compares face lattices under the identity vertex labelling up to permutation.
    pub fn combinatorially_equal(&self, other: &Polytope) -> bool {
        self.face_poset().isomorphic(&other.face_poset())
    }
}

pub fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

pub fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().filter(|x| b.binary_search(x).is_ok()).copied().collect()
}

/// Affine rank of a set of points, i.e. the dimension of its affine hull.
pub(crate) fn affine_dim(points: &[&RatVec]) -> isize {
    match points.split_first() {
        None => -1,
        Some((p0, rest)) => {
            let diffs: Vec<RatVec> = rest.iter().map(|p| exactla::sub(p, p0)).collect();
            exactla::rank_of_vectors(&diffs) as isize
        }
    }
}

/// Coordinates of the points in a basis of their affine hull.
///
/// Full-dimensional inputs keep their coordinates; otherwise the origin is the
/// lexicographically smallest point and the basis is the first independent
/// differences to it.
fn affine_coordinates(points: &[RatVec]) -> Vec<RatVec> {
    let ambient = points[0].len();
    let p0 = points.iter().min().expect("nonempty").clone();
    let mut basis: Vec<RatVec> = Vec::new();
    for p in points {
        let d = exactla::sub(p, &p0);
        let mut trial = basis.clone();
        trial.push(d.clone());
        if exactla::rank_of_vectors(&trial) == trial.len() {
            basis = trial;
        }
    }
    if basis.len() == ambient {
        return points.to_vec();
    }
    points
        .iter()
        .map(|p| exactla::coordinates(&basis, &exactla::sub(p, &p0)).expect("point lies in its affine hull"))
        .collect()
}

fn close_under_intersection(vertices: &[RatVec], facet_sets: &[Vec<usize>], dim: isize) -> Vec<Face> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<usize>> = VecDeque::new();
    for s in facet_sets {
        if seen.insert(s.clone()) {
            queue.push_back(s.clone());
        }
    }
    while let Some(s) = queue.pop_front() {
        for t in facet_sets {
            let m = intersect(&s, t);
            if seen.insert(m.clone()) {
                queue.push_back(m);
            }
        }
    }
    seen.insert(Vec::new());
    seen.insert((0..vertices.len()).collect());
    seen.into_iter()
        .map(|s| {
            let d = if s.len() == vertices.len() {
                dim
            } else {
                let pts: Vec<&RatVec> = s.iter().map(|&v| &vertices[v]).collect();
                affine_dim(&pts)
            };
            Face { dim: d, vertex_set: s }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square() -> Polytope {
        Polytope::from_i64(&[vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]]).unwrap()
    }

    #[test]
    fn square_lattice() {
        let p = square();
        assert_eq!(p.f_vector(), FVector(vec![1, 4, 4, 1]));
        assert_eq!(p.f_vector().euler_sum(), 0);
        assert_eq!(p.facets().len(), 4);
    }

    #[test]
    fn single_point_and_segment() {
        let p = Polytope::from_i64(&[vec![3, 4]]).unwrap();
        assert_eq!(p.dim(), 0);
        assert_eq!(p.f_vector(), FVector(vec![1, 1]));
        let s = Polytope::from_i64(&[vec![0, 0], vec![2, 2], vec![1, 1]]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.f_vector(), FVector(vec![1, 2, 1]));
        assert!(Polytope::from_vertices(&[]).is_err());
    }

    #[test]
    fn redundant_points_removed() {
        let p =
            Polytope::from_i64(&[vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 0], vec![0, 0], vec![2, 2], vec![1, 1]])
                .unwrap();
        assert_eq!(p.num_vertices(), 4);
    }

    #[test]
    fn lower_dimensional_input_is_reduced() {
        let p = Polytope::from_i64(&[vec![0, 0, 1], vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 1]]).unwrap();
        assert_eq!(p.dim(), 2);
        assert_eq!(p.f_vector(), FVector(vec![1, 4, 4, 1]));
    }

    #[test]
    fn inequalities_are_tight_on_facets() {
        let p = square();
        for (f, h) in p.facets().iter().zip(p.inequalities()) {
            for (v, x) in p.vertices().iter().enumerate() {
                let val = h.eval(x);
                assert!(val >= Rational::zero());
                assert_eq!(val.is_zero(), p.face(*f).contains(v));
            }
        }
    }
}
