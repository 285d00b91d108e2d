//! Graded deformation spaces `T^1(-R)` and `T^2(-R)` of the Gorenstein toric
//! singularity given by the cone over a lattice polytope.

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::complexes::{assemble, cohomology_dims, cone_fan, OrientedFan, SystemSpec};
use crate::dinv::{d_profile, polygon_cycle};
use crate::error::{Error, Result};
use crate::exactla::{rank_of_vectors, rat, smith_diagonal, IntMatrix, RatVec};
use crate::polytope::Polytope;

#[derive(Clone, Debug)]
pub struct GorensteinCone {
    pub lattice_polytope: Polytope,
    /// Rows `(a, 1)`, one per vertex.
    pub generators: IntMatrix,
    /// The degree `[0, ..., 0, 1]`.
    pub rstar: Vec<i64>,
    fan: OrientedFan,
}

impl GorensteinCone {
    pub fn rank(&self) -> usize {
        self.generators.cols
    }

    pub fn fan(&self) -> &OrientedFan {
        &self.fan
    }

    /// `<a^ν, R>` for every generator.
    pub fn values(&self, r: &[i64]) -> Result<Vec<BigInt>> {
        if r.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: r.len() });
        }
        Ok(self.generators.entries.iter().map(|g| g.iter().zip(r).map(|(x, &ri)| x * BigInt::from(ri)).sum()).collect())
    }

    /// True iff `<a^ν, R> <= 1` for every generator.
    pub fn is_bounded(&self, r: &[i64]) -> Result<bool> {
        Ok(self.values(r)?.iter().all(|v| *v <= BigInt::one()))
    }
}

pub fn gorenstein_cone(p: &Polytope) -> Result<GorensteinCone> {
    if p.is_empty() {
        return Err(Error::EmptyInput);
    }
    if let Some(v) = p.vertices().iter().position(|x| x.iter().any(|c| !c.is_integer())) {
        return Err(Error::NonIntegralVertices(v));
    }
    let entries: Vec<Vec<BigInt>> =
        p.vertices().iter().map(|x| x.iter().map(|c| c.to_integer()).chain([BigInt::one()]).collect()).collect();
    let n = p.ambient_dim();
    let mut rstar = vec![0; n + 1];
    rstar[n] = 1;
    Ok(GorensteinCone { lattice_polytope: p.clone(), generators: IntMatrix::new(entries), rstar, fan: cone_fan(p) })
}

fn unimodular(m: &IntMatrix) -> bool {
    smith_diagonal(m).iter().all(BigInt::is_one)
}

/// Every edge of the polytope is a unimodular segment.
pub fn smooth_in_codim2(c: &GorensteinCone) -> bool {
    let p = &c.lattice_polytope;
    p.faces_of_dim(1).all(|e| unimodular(&c.generators.select_rows(&p.face(e).vertex_set)))
}

/// Every 2-face is a unimodular triangle or a unit square.
pub fn conifold_codim3(c: &GorensteinCone) -> bool {
    let p = &c.lattice_polytope;
    p.faces_of_dim(2).all(|f| {
        let cyc = polygon_cycle(p, f);
        match cyc.len() {
            3 => unimodular(&c.generators.select_rows(&cyc)),
            4 => {
                let g = |i: usize| c.generators.row(cyc[i]);
                let parallel = (0..c.rank()).all(|j| &g(0)[j] + &g(2)[j] == &g(1)[j] + &g(3)[j]);
                parallel && unimodular(&c.generators.select_rows(&[cyc[0], cyc[1], cyc[3]]))
            }
            _ => false,
        }
    })
}

/// The face `Δ ∩ [R = 1]`, for `R <= 1` on `Δ`.
pub fn restrict_to_face(c: &GorensteinCone, r: &[i64]) -> Result<Polytope> {
    let values = c.values(r)?;
    if let Some((generator, v)) = values.iter().enumerate().find(|(_, v)| **v > BigInt::one()) {
        return Err(Error::DegreeNotBounded { generator, value: v.to_i64().unwrap_or(i64::MAX) });
    }
    let set: Vec<usize> = (0..values.len()).filter(|&i| values[i].is_one()).collect();
    let p = &c.lattice_polytope;
    let face = p.face_index(&set).expect("a supporting hyperplane cuts out a face");
    Ok(p.face_polytope(face))
}

/// Homology of the `V^R` system on the cone fan, in every degree.
pub fn vr_homology(c: &GorensteinCone, r: &[i64]) -> Result<Vec<usize>> {
    cohomology_dims(&assemble(&c.fan, &SystemSpec::Vr(r.to_vec()))?)
}

/// `dim T^k(-R)` for `k ∈ {1, 2}`.
pub fn t_graded(c: &GorensteinCone, k: usize, r: &[i64]) -> Result<usize> {
    if !(1..=2).contains(&k) {
        return Err(Error::DegreeUnsupported(format!("T^{k} is not computed")));
    }
    if c.is_bounded(r)? {
        let face = restrict_to_face(c, r)?;
        return Ok(d_profile(&face)?.get(k as isize));
    }
    if !smooth_in_codim2(c) {
        return Err(Error::DegreeUnsupported("cone is not smooth in codimension two".into()));
    }
    if k == 2 && !conifold_codim3(c) {
        return Err(Error::DegreeUnsupported("3-faces other than conifolds contribute locally to T^2".into()));
    }
    Ok(vr_homology(c, r)?[k])
}

/// All homology of the `V^R` complex vanishes, for `R` not bounded by 1.
pub fn vr_complex_exactness(c: &GorensteinCone, r: &[i64]) -> Result<bool> {
    if c.is_bounded(r)? {
        return Err(Error::PreconditionViolated(format!("degree {r:?} is at most 1 on every generator")));
    }
    Ok(vr_homology(c, r)?.iter().all(|&h| h == 0))
}

/// How the values of `R` on the four rays of a square 3-face fall.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SquareCase {
    /// Some value is at most 0.
    Vanishing,
    AllOne,
    TwoAdjacentLarge,
    ThreeLarge,
    AllLarge,
    /// A pattern a unit square cannot produce.
    Impossible,
}

pub fn square_case(values: &[i64; 4]) -> SquareCase {
    if values.iter().any(|&v| v <= 0) {
        return SquareCase::Vanishing;
    }
    let large: Vec<usize> = (0..4).filter(|&i| values[i] >= 2).collect();
    match large.len() {
        0 => SquareCase::AllOne,
        2 if (large[1] - large[0]) % 2 == 1 => SquareCase::TwoAdjacentLarge,
        3 => SquareCase::ThreeLarge,
        4 => SquareCase::AllLarge,
        _ => SquareCase::Impossible,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalContribution {
    pub face: Vec<usize>,
    pub case: SquareCase,
    /// Dimension of the span of the lattice points of `K^R_τ` found in the box.
    pub span_found: usize,
    /// Dimension of the intersection of the spans over the four rays.
    pub span_expected: usize,
}

impl LocalContribution {
    pub fn vanishes(&self) -> bool {
        self.case != SquareCase::Impossible && self.span_found == self.span_expected
    }
}

/// Compares both spans on every square 3-face, searching lattice points in `[-radius, radius]^{n+1}`.
pub fn local_contributions(c: &GorensteinCone, r: &[i64], radius: i64) -> Result<Vec<LocalContribution>> {
    if !conifold_codim3(c) {
        return Err(Error::PreconditionViolated(
            "some 2-face is neither a unimodular triangle nor a unit square".into(),
        ));
    }
    let p = &c.lattice_polytope;
    let values = c.values(r)?;
    let d = c.rank();
    let gens: Vec<Vec<i64>> =
        c.generators.entries.iter().map(|g| g.iter().map(|x| x.to_i64().expect("small generator")).collect()).collect();
    let pair = |a: &[i64], m: &[i64]| -> i64 { a.iter().zip(m).map(|(x, y)| x * y).sum() };
    let points: Vec<Vec<i64>> = (0..d)
        .map(|_| -radius..=radius)
        .multi_cartesian_product()
        .filter(|m| gens.iter().all(|g| pair(g, m) >= 0))
        .collect();

    let mut out = Vec::new();
    for f in p.faces_of_dim(2) {
        let cyc = polygon_cycle(p, f);
        if cyc.len() != 4 {
            continue;
        }
        let vals: Vec<i64> = cyc.iter().map(|&i| values[i].to_i64().unwrap_or(i64::MAX)).collect();
        let case = square_case(&[vals[0], vals[1], vals[2], vals[3]]);
        let found: Vec<RatVec> = points
            .iter()
            .filter(|m| cyc.iter().zip(&vals).all(|(&i, &v)| pair(&gens[i], m) < v))
            .map(|m| m.iter().map(|&x| rat(x)).collect())
            .collect();
        let span_expected = if case == SquareCase::Vanishing {
            0
        } else {
            let tight: Vec<RatVec> = cyc
                .iter()
                .zip(&vals)
                .filter(|(_, &v)| v == 1)
                .map(|(&i, _)| gens[i].iter().map(|&x| rat(x)).collect())
                .collect();
            d - rank_of_vectors(&tight)
        };
        out.push(LocalContribution { face: cyc, case, span_found: rank_of_vectors(&found), span_expected });
    }
    Ok(out)
}

/// True iff no square 3-face contributes locally to `T^2(-R)`.
pub fn t2_local_contribution_conifold_check(c: &GorensteinCone, r: &[i64]) -> Result<bool> {
    Ok(local_contributions(c, r, 2)?.iter().all(LocalContribution::vanishes))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepEntry {
    pub degree: Vec<i64>,
    pub t1: usize,
    /// `None` when the degree is not supported for `T^2`.
    pub t2: Option<usize>,
}

/// `T^1` and `T^2` for every degree in the box `[lo, hi]^{n+1}`.
pub fn sweep(c: &GorensteinCone, lo: i64, hi: i64) -> Result<Vec<SweepEntry>> {
    let mut out = Vec::new();
    for degree in (0..c.rank()).map(|_| lo..=hi).multi_cartesian_product() {
        let t1 = match t_graded(c, 1, &degree) {
            Ok(v) => v,
            Err(Error::DegreeUnsupported(_)) => continue,
            Err(e) => return Err(e),
        };
        let t2 = match t_graded(c, 2, &degree) {
            Ok(v) => Some(v),
            Err(Error::DegreeUnsupported(_)) => None,
            Err(e) => return Err(e),
        };
        out.push(SweepEntry { degree, t1, t2 });
    }
    Ok(out)
}
