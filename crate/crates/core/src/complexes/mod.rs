//! Oriented fans and the cochain complexes of systems of vector spaces on them.

mod system;

pub use system::{assemble, cohomology_dims, hodge_number, SystemComplex, SystemSpec};

use num_traits::{Signed, Zero};

use crate::exactla::{self, RatVec, Rational};
use crate::polytope::Polytope;

/// A polyhedral cone with a chosen orientation of its linear span.
#[derive(Clone, Debug)]
pub struct Cone {
    /// Face label: vertex indices for cones over faces, facet indices for normal cones.
    pub label: Vec<usize>,
    pub generators: Vec<RatVec>,
    /// Oriented basis of the span, chosen greedily from the generators.
    pub basis: Vec<RatVec>,
    coord_cols: Vec<usize>,
    coord_inv: Vec<RatVec>,
}

impl Cone {
    fn new(label: Vec<usize>, generators: Vec<RatVec>) -> Self {
        let mut basis: Vec<RatVec> = Vec::new();
        for g in &generators {
            let mut trial = basis.clone();
            trial.push(g.clone());
            if exactla::rank_of_vectors(&trial) == trial.len() {
                basis = trial;
            }
        }
        let ambient = generators.first().map_or(0, Vec::len);
        let k = basis.len();
        let mut cols: Vec<usize> = Vec::new();
        for c in 0..ambient {
            if cols.len() == k {
                break;
            }
            let mut trial = cols.clone();
            trial.push(c);
            let rows: Vec<RatVec> = trial.iter().map(|&r| basis.iter().map(|b| b[r].clone()).collect()).collect();
            if exactla::rank_of_vectors(&rows) == trial.len() {
                cols = trial;
            }
        }
        let square: Vec<RatVec> = cols.iter().map(|&r| basis.iter().map(|b| b[r].clone()).collect()).collect();
        let coord_inv = exactla::inverse(&square).expect("basis restricted to pivot rows is invertible");
        Cone { label, generators, basis, coord_cols: cols, coord_inv }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `v` in the oriented basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Rational]) -> Option<RatVec> {
        let x: RatVec = self
            .coord_inv
            .iter()
            .map(|row| row.iter().zip(&self.coord_cols).fold(Rational::zero(), |acc, (a, &c)| acc + a * &v[c]))
            .collect();
        let mut back = vec![Rational::zero(); v.len()];
        for (xi, b) in x.iter().zip(&self.basis) {
            for (t, bj) in back.iter_mut().zip(b) {
                *t += xi * bj;
            }
        }
        (back == v).then_some(x)
    }

    pub fn contains_in_span(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// A fan whose cones carry orientations, with the incidence signs between
/// each cone and its facets.
#[derive(Clone, Debug)]
pub struct OrientedFan {
    ambient_dim: usize,
    cones: Vec<Cone>,
    facets: Vec<Vec<(usize, i64)>>,
}

impl OrientedFan {
    /// Builds a fan from cones and the list of facet relations `(tau, sigma)`.
    pub fn from_cones(ambient_dim: usize, cones: Vec<(Vec<usize>, Vec<RatVec>)>, covers: &[(usize, usize)]) -> Self {
        let cones: Vec<Cone> = cones.into_iter().map(|(l, g)| Cone::new(l, g)).collect();
        let mut facets = vec![Vec::new(); cones.len()];
        for &(t, s) in covers {
            assert_eq!(cones[t].dim() + 1, cones[s].dim(), "covers must raise dimension by one");
            let sign = incidence_sign(&cones[t], &cones[s]);
            facets[s].push((t, sign));
        }
        for f in facets.iter_mut() {
            f.sort_unstable();
        }
        OrientedFan { ambient_dim, cones, facets }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, i: usize) -> &Cone {
        &self.cones[i]
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }

    /// Facets of cone `s` with their signs `ε(τ, σ)`.
    pub fn facets_of(&self, s: usize) -> &[(usize, i64)] {
        &self.facets[s]
    }

    /// `ε(τ, σ)`: the sign when `τ` is a facet of `σ`, else 0.
    pub fn sign(&self, t: usize, s: usize) -> i64 {
        self.facets[s].iter().find(|e| e.0 == t).map_or(0, |e| e.1)
    }

    pub fn cones_of_dim(&self, k: usize) -> Vec<usize> {
        (0..self.cones.len()).filter(|&i| self.cones[i].dim() == k).collect()
    }

    /// Number of cones in each dimension `0..=ambient_dim`.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; self.ambient_dim + 1];
        for cone in &self.cones {
            c[cone.dim()] += 1;
        }
        c
    }

    /// Index of the cone with the given label.
    pub fn find(&self, label: &[usize]) -> Option<usize> {
        self.cones.iter().position(|c| c.label == label)
    }

    /// Sub-fan on the cones with `keep[i]`; must be closed under taking faces.
    pub fn subfan(&self, keep: &[bool]) -> OrientedFan {
        let new_index: Vec<Option<usize>> = keep
            .iter()
            .scan(0, |next, &k| {
                Some(k.then(|| {
                    *next += 1;
                    *next - 1
                }))
            })
            .collect();
        let cones: Vec<Cone> = self.cones.iter().zip(keep).filter(|(_, &k)| k).map(|(c, _)| c.clone()).collect();
        let facets: Vec<Vec<(usize, i64)>> = self
            .facets
            .iter()
            .zip(keep)
            .filter(|(_, &k)| k)
            .map(|(f, _)| {
                f.iter().map(|&(t, e)| (new_index[t].expect("sub-fan must be closed under faces"), e)).collect()
            })
            .collect();
        OrientedFan { ambient_dim: self.ambient_dim, cones, facets }
    }

    /// Checks `Σ_σ ε(τ,σ) ε(σ,ρ) = 0` over all two-step chains.
    pub fn signs_compose_to_zero(&self) -> bool {
        (0..self.cones.len()).all(|r| {
            let mut acc: std::collections::HashMap<usize, i64> = Default::default();
            for &(s, e1) in &self.facets[r] {
                for &(t, e2) in &self.facets[s] {
                    *acc.entry(t).or_default() += e1 * e2;
                }
            }
            acc.values().all(|&v| v == 0)
        })
    }
}

/// Sign of `det[g, B_τ]` in the basis of `σ`, where `g` is the first generator of `σ` outside `τ`.
fn incidence_sign(t: &Cone, s: &Cone) -> i64 {
    let g = s.generators.iter().find(|g| !t.contains_in_span(g)).expect("a facet misses some generator of the cone");
    let mut cols = vec![s.coordinates(g).expect("generator in span")];
    for b in &t.basis {
        cols.push(s.coordinates(b).expect("facet lies in the cone"));
    }
    let det = exactla::determinant(&cols);
    assert!(!det.is_zero(), "facet basis plus outside generator must span");
    if det.is_positive() {
        1
    } else {
        -1
    }
}

/// The fan of cones over the faces of `p`, including the zero cone, in dimension `dim p + 1`.
///
/// Cone `i` is the cone over face `i` of `p`.
pub fn cone_fan(p: &Polytope) -> OrientedFan {
    let ambient = (p.dim() + 1) as usize;
    let cones = p
        .faces()
        .iter()
        .map(|f| {
            let gens = f
                .vertex_set
                .iter()
                .map(|&v| {
                    let mut g = p.vertices()[v].clone();
                    g.push(exactla::rat(1));
                    g
                })
                .collect();
            (f.vertex_set.clone(), gens)
        })
        .collect();
    let mut covers = Vec::new();
    for i in 0..p.faces().len() {
        for &j in p.sub_facets(i) {
            covers.push((j, i));
        }
    }
    OrientedFan::from_cones(ambient, cones, &covers)
}

/// The complete inner normal fan of `p`.
///
/// Cone `i` belongs to face `faces.len() - 2 - i` (faces in reverse order, the
/// empty face dropped); its label is the list of facet positions containing it.
pub fn normal_fan(p: &Polytope) -> OrientedFan {
    assert!(p.dim() >= 1, "normal fan of a polytope of positive dimension");
    let n = p.ambient_dim();
    let nf = p.faces().len();
    let order: Vec<usize> = (1..nf).rev().collect();
    let cones = order
        .iter()
        .map(|&i| {
            let f = p.face(i);
            let label: Vec<usize> = p
                .facets()
                .iter()
                .enumerate()
                .filter(|(_, &fi)| f.vertex_set.iter().all(|v| p.face(fi).contains(*v)))
                .map(|(k, _)| k)
                .collect();
            let gens = label.iter().map(|&k| p.inequalities()[k].normal.clone()).collect::<Vec<_>>();
            (label, gens)
        })
        .collect::<Vec<_>>();
    let pos = |face: usize| nf - 1 - face;
    let mut covers = Vec::new();
    for &i in &order {
        for &j in p.super_facets(i) {
            covers.push((pos(j), pos(i)));
        }
    }
    OrientedFan::from_cones(n, cones, &covers)
}
