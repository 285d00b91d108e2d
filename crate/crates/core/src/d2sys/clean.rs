use std::collections::{BTreeSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::polytope::{is_pyramid_3face, Polytope};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CleanEvent {
    /// Rule (i): a 2-face (face index) became clean.
    Face(usize),
    /// Rule (ii): a vertex became clean.
    Vertex(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CleanState {
    pub clean_vertices: BTreeSet<usize>,
    pub clean_2faces: BTreeSet<usize>,
    pub history: Vec<CleanEvent>,
}

impl CleanState {
    pub fn is_complete(&self, p: &Polytope) -> bool {
        self.clean_vertices.len() == p.num_vertices() && self.clean_2faces.len() == p.faces_of_dim(2).count()
    }
}

struct Rules<'a> {
    p: &'a Polytope,
    n: isize,
    faces_at: Vec<Vec<usize>>,
}

impl<'a> Rules<'a> {
    fn new(p: &'a Polytope) -> Self {
        let mut faces_at = vec![Vec::new(); p.num_vertices()];
        for e in p.faces_of_dim(2) {
            for &a in &p.face(e).vertex_set {
                faces_at[a].push(e);
            }
        }
        Rules { p, n: p.dim(), faces_at }
    }

    fn face_ready(&self, s: &CleanState, e: usize) -> bool {
        let vs = &self.p.face(e).vertex_set;
        let clean = vs.iter().filter(|a| s.clean_vertices.contains(a)).count();
        clean + 3 >= vs.len()
    }

    fn vertex_ready(&self, s: &CleanState, a: usize) -> bool {
        let dirty = self.faces_at[a].iter().filter(|e| !s.clean_2faces.contains(e)).count();
        (dirty as isize) <= self.n - 3
    }

    fn apply(&self, s: &mut CleanState, ev: CleanEvent) {
        match ev {
            CleanEvent::Face(e) => s.clean_2faces.insert(e),
            CleanEvent::Vertex(a) => s.clean_vertices.insert(a),
        };
        s.history.push(ev);
    }
}

fn empty_state() -> CleanState {
    CleanState { clean_vertices: BTreeSet::new(), clean_2faces: BTreeSet::new(), history: Vec::new() }
}

/// Least fixpoint of the cleaning rules, by a worklist.
pub fn clean(p: &Polytope) -> CleanState {
    let rules = Rules::new(p);
    let mut s = empty_state();
    let mut queue: VecDeque<CleanEvent> = p.faces_of_dim(2).map(CleanEvent::Face).collect();
    queue.extend((0..p.num_vertices()).map(CleanEvent::Vertex));
    while let Some(ev) = queue.pop_front() {
        match ev {
            CleanEvent::Face(e) if !s.clean_2faces.contains(&e) && rules.face_ready(&s, e) => {
                rules.apply(&mut s, ev);
                for &a in &p.face(e).vertex_set {
                    if !s.clean_vertices.contains(&a) {
                        queue.push_back(CleanEvent::Vertex(a));
                    }
                }
            }
            CleanEvent::Vertex(a) if !s.clean_vertices.contains(&a) && rules.vertex_ready(&s, a) => {
                rules.apply(&mut s, ev);
                for &e in &rules.faces_at[a] {
                    if !s.clean_2faces.contains(&e) {
                        queue.push_back(CleanEvent::Face(e));
                    }
                }
            }
            _ => {}
        }
    }
    s
}

/// Same fixpoint, firing one applicable rule chosen at random at every step.
pub fn clean_in_random_order<R: Rng>(p: &Polytope, rng: &mut R) -> CleanState {
    let rules = Rules::new(p);
    let mut s = empty_state();
    let mut items: Vec<CleanEvent> = p.faces_of_dim(2).map(CleanEvent::Face).collect();
    items.extend((0..p.num_vertices()).map(CleanEvent::Vertex));
    loop {
        items.shuffle(rng);
        let next = items.iter().position(|&ev| match ev {
            CleanEvent::Face(e) => rules.face_ready(&s, e),
            CleanEvent::Vertex(a) => rules.vertex_ready(&s, a),
        });
        match next {
            Some(k) => {
                let ev = items.swap_remove(k);
                rules.apply(&mut s, ev);
            }
            None => return s,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    VanishesByTheorem,
    NotApplicable(String),
}

/// Pyramid 3-faces plus complete cleaning certify `D^2 = 0`.
pub fn certify_vanishing(p: &Polytope) -> Result<Verdict> {
    if p.dim() < 3 {
        return Ok(Verdict::NotApplicable(format!("dimension {} is below 3", p.dim())));
    }
    for f in p.faces_of_dim(3) {
        if !is_pyramid_3face(f, p)? {
            return Ok(Verdict::NotApplicable(format!("3-face {:?} is not a pyramid", p.face(f).vertex_set)));
        }
    }
    let s = clean(p);
    if !s.is_complete(p) {
        return Ok(Verdict::NotApplicable(format!(
            "cleaning stalls with {} of {} vertices clean",
            s.clean_vertices.len(),
            p.num_vertices()
        )));
    }
    Ok(Verdict::VanishesByTheorem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;
    use rand::SeedableRng;

    #[test]
    fn simplex_cleans_completely() {
        let p = zoo::simplex(4);
        assert!(clean(&p).is_complete(&p));
        assert_eq!(certify_vanishing(&p).unwrap(), Verdict::VanishesByTheorem);
    }

    #[test]
    fn double_pyramid_stalls_after_triangles() {
        let p = zoo::get("dp_cuboctahedron").unwrap();
        let s = clean(&p);
        let triangles: BTreeSet<usize> = p.faces_of_dim(2).filter(|&e| p.face(e).len() == 3).collect();
        let apexes: BTreeSet<usize> = (0..p.num_vertices())
            .filter(|&a| p.faces_of_dim(2).all(|e| p.face(e).len() == 3 || !p.face(e).contains(a)))
            .collect();
        assert_eq!(apexes.len(), 2);
        assert_eq!(s.clean_vertices, apexes);
        assert_eq!(s.clean_2faces, triangles);
        assert!(matches!(certify_vanishing(&p).unwrap(), Verdict::NotApplicable(_)));
    }

    #[test]
    fn random_orders_agree() {
        let p = zoo::get("pyramid_mgon(6)").unwrap();
        let base = clean(&p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..10 {
            let s = clean_in_random_order(&p, &mut rng);
            assert_eq!((s.clean_vertices, s.clean_2faces), (base.clean_vertices.clone(), base.clean_2faces.clone()));
        }
    }
}
