use std::collections::{HashMap, VecDeque};

use crate::exactla::{rat, RatMatrix};

use super::{intersect, is_subset};

/// A graded poset of faces, each element labelled by a set of atoms.
///
/// Order is inclusion of the labels. The minimum has dimension `-1`.
#[derive(Clone, Debug)]
pub struct FacePoset {
    elems: Vec<(isize, Vec<usize>)>,
    lower: Vec<Vec<usize>>,
}

impl FacePoset {
    pub fn from_sets(mut elems: Vec<(isize, Vec<usize>)>) -> Self {
        elems.sort();
        let n = elems.len();
        let mut lower = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..i {
                if elems[j].0 + 1 == elems[i].0 && is_subset(&elems[j].1, &elems[i].1) {
                    lower[i].push(j);
                }
            }
        }
        FacePoset { elems, lower }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn dim(&self, i: usize) -> isize {
        self.elems[i].0
    }

    pub fn label(&self, i: usize) -> &[usize] {
        &self.elems[i].1
    }

    /// Dimension of the maximum.
    pub fn top_dim(&self) -> isize {
        self.elems.last().map_or(-1, |e| e.0)
    }

    pub fn lower_covers(&self, i: usize) -> &[usize] {
        &self.lower[i]
    }

    pub fn elements_of_dim(&self, d: isize) -> Vec<usize> {
        (0..self.elems.len()).filter(|&i| self.elems[i].0 == d).collect()
    }

    /// Number of elements of each dimension `-1, 0, ..., top`.
    pub fn counts(&self) -> Vec<usize> {
        let mut c = vec![0; (self.top_dim() + 2).max(0) as usize];
        for (d, _) in &self.elems {
            c[(d + 1) as usize] += 1;
        }
        c
    }

    /// Incidence numbers `[F : G]` for every cover `G < F`, making the cellular
    /// boundary square to zero.
    ///
    /// Signs are propagated across ridges: the two facets of `F` through a ridge
    /// must induce opposite orientations on it.
    pub fn incidence_signs(&self) -> Vec<HashMap<usize, i64>> {
        let n = self.elems.len();
        let mut signs: Vec<HashMap<usize, i64>> = vec![HashMap::new(); n];
        for f in 0..n {
            let covers = &self.lower[f];
            if covers.is_empty() {
                continue;
            }
            let mut through: HashMap<usize, Vec<usize>> = HashMap::new();
            for &g in covers {
                for &r in &self.lower[g] {
                    through.entry(r).or_default().push(g);
                }
            }
            let mut s: HashMap<usize, i64> = HashMap::new();
            s.insert(covers[0], 1);
            let mut queue = VecDeque::from([covers[0]]);
            while let Some(g) = queue.pop_front() {
                for &r in &self.lower[g] {
                    for &h in &through[&r] {
                        if h == g {
                            continue;
                        }
                        let want = -s[&g] * signs[g][&r] * signs[h][&r];
                        match s.get(&h) {
                            Some(&have) => assert_eq!(have, want, "poset is not thin"),
                            None => {
                                s.insert(h, want);
                                queue.push_back(h);
                            }
                        }
                    }
                }
            }
            assert_eq!(s.len(), covers.len(), "facet graph is disconnected");
            signs[f] = s;
        }
        signs
    }

    /// Augmented coboundary `C^{d} -> C^{d+1}` with constant coefficients, for `d >= -1`.
    pub fn coboundary(&self, d: isize, signs: &[HashMap<usize, i64>]) -> RatMatrix {
        let src = self.elements_of_dim(d);
        let dst = self.elements_of_dim(d + 1);
        let col: HashMap<usize, usize> = src.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        let mut m = RatMatrix::zeros(dst.len(), src.len());
        for (r, &f) in dst.iter().enumerate() {
            for (&g, &s) in &signs[f] {
                m.set(r, col[&g], rat(s));
            }
        }
        m
    }

    /// Reduced cohomology `H~^j` of the `k`-skeleton for `j = -1..=k`.
    pub fn skeleton_cohomology(&self, k: isize) -> Vec<usize> {
        let signs = self.incidence_signs();
        let ranks: Vec<usize> = (-1..k).map(|d| self.coboundary(d, &signs).rank()).collect();
        (-1..=k)
            .map(|j| {
                let c = self.elements_of_dim(j).len();
                let out = if j < k { ranks[(j + 1) as usize] } else { 0 };
                let inc = if j > -1 { ranks[j as usize] } else { 0 };
                c - out - inc
            })
            .collect()
    }

    /// Face lattice isomorphism, decided on atoms versus coatoms.
    pub fn isomorphic(&self, other: &FacePoset) -> bool {
        if self.counts() != other.counts() {
            return false;
        }
        let top = self.top_dim();
        if top <= 0 {
            return true;
        }
        let incidences = |p: &FacePoset| -> Vec<Vec<usize>> {
            let atoms = p.elements_of_dim(0);
            p.elements_of_dim(top - 1)
                .iter()
                .map(|&c| (0..atoms.len()).filter(|&k| is_subset(&p.elems[atoms[k]].1, &p.elems[c].1)).collect())
                .collect()
        };
        let a_sets = incidences(self);
        let b_sets = incidences(other);
        let sig = |sets: &[Vec<usize>], v: usize| -> Vec<usize> {
            let mut s: Vec<usize> = sets.iter().filter(|c| c.contains(&v)).map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        let na = self.elements_of_dim(0).len();
        let a_sig: Vec<Vec<usize>> = (0..na).map(|v| sig(&a_sets, v)).collect();
        let b_sig: Vec<Vec<usize>> = (0..na).map(|v| sig(&b_sets, v)).collect();
        let mut map = vec![usize::MAX; na];
        let mut used = vec![false; na];
        search(0, &mut map, &mut used, &a_sig, &b_sig, &a_sets, &b_sets)
    }
}

fn search(
    v: usize,
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    a_sig: &[Vec<usize>],
    b_sig: &[Vec<usize>],
    a_sets: &[Vec<usize>],
    b_sets: &[Vec<usize>],
) -> bool {
    let n = map.len();
    if v == n {
        let mut image: Vec<Vec<usize>> = a_sets
            .iter()
            .map(|s| {
                let mut t: Vec<usize> = s.iter().map(|&x| map[x]).collect();
                t.sort_unstable();
                t
            })
            .collect();
        let mut target = b_sets.to_vec();
        image.sort();
        target.sort();
        return image == target;
    }
    for w in 0..n {
        if used[w] || a_sig[v] != b_sig[w] {
            continue;
        }
        map[v] = w;
        used[w] = true;
        let consistent = a_sets.iter().all(|s| {
            let mut img: Vec<usize> = s.iter().filter(|&&x| x <= v).map(|&x| map[x]).collect();
            img.sort_unstable();
            b_sets.iter().any(|t| t.len() == s.len() && intersect(&img, t).len() == img.len())
        });
        if consistent && search(v + 1, map, used, a_sig, b_sig, a_sets, b_sets) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
