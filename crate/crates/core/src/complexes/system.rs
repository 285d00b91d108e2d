use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{self, rat, RatMatrix, RatVec, Rational};

use super::{Cone, OrientedFan};

/// Which system of vector spaces to place on the cones of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemSpec {
    /// `σ ↦ span σ`.
    Span,
    /// `σ ↦ V / span σ`.
    QuotientBySpan,
    /// `σ ↦ Λ^q (V / span σ)`.
    ExteriorQuotient(usize),
    /// `σ ↦ K`.
    Constant,
    /// `σ ↦ σ^⊥`, homological.
    Perp,
    /// `σ ↦ V^R_σ` for an integral degree `R`, homological.
    Vr(Vec<i64>),
}

impl SystemSpec {
    pub fn is_homological(&self) -> bool {
        matches!(self, SystemSpec::Perp | SystemSpec::Vr(_))
    }

    pub fn label(&self) -> String {
        match self {
            SystemSpec::Span => "span".into(),
            SystemSpec::QuotientBySpan => "quotient".into(),
            SystemSpec::ExteriorQuotient(q) => format!("exterior({q})"),
            SystemSpec::Constant => "constant".into(),
            SystemSpec::Perp => "perp".into(),
            SystemSpec::Vr(r) => format!("vr({})", r.iter().join(",")),
        }
    }
}

/// The complex of a system on a fan, graded by cone dimension.
///
/// `maps[k]` connects degree `k` and `k + 1`: it is the coboundary
/// `C^k → C^{k+1}` for cohomological systems and the boundary
/// `C_{k+1} → C_k` for homological ones.
#[derive(Clone, Debug)]
pub struct SystemComplex {
    pub spec: SystemSpec,
    pub dims: Vec<usize>,
    pub maps: Vec<RatMatrix>,
    /// For each degree, `(cone, offset, fiber dimension)` of every block.
    pub blocks: Vec<Vec<(usize, usize, usize)>>,
}

impl SystemComplex {
    pub fn is_homological(&self) -> bool {
        self.spec.is_homological()
    }

    /// Euler characteristic `Σ (-1)^k dim C^k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().enumerate().map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) }).sum()
    }

    /// Degree where consecutive maps fail to compose to zero, if any.
    pub fn square_defect(&self) -> Option<usize> {
        (0..self.maps.len().saturating_sub(1)).find(|&k| {
            let prod = if self.is_homological() {
                self.maps[k].mul(&self.maps[k + 1])
            } else {
                self.maps[k + 1].mul(&self.maps[k])
            };
            !prod.is_zero()
        })
    }
}

/// A concrete basis of one fiber together with what is needed to express maps into or out of it.
enum Fiber {
    Span,
    Quotient { complement: Vec<usize>, inverse: Vec<RatVec> },
    Exterior { complement: Vec<usize>, inverse: Vec<RatVec>, subsets: Vec<Vec<usize>> },
    Constant,
    Kernel { basis: Vec<RatVec>, free: Vec<usize> },
    Zero,
}

impl Fiber {
    fn dim(&self, cone: &Cone) -> usize {
        match self {
            Fiber::Span => cone.dim(),
            Fiber::Quotient { complement, .. } => complement.len(),
            Fiber::Exterior { subsets, .. } => subsets.len(),
            Fiber::Constant => 1,
            Fiber::Kernel { basis, .. } => basis.len(),
            Fiber::Zero => 0,
        }
    }
}

fn standard(d: usize, j: usize) -> RatVec {
    let mut e = vec![Rational::zero(); d];
    e[j] = Rational::one();
    e
}

/// Standard vectors completing the cone basis to a basis of `V`, with the inverse of `[B | E]`.
fn complement(cone: &Cone, d: usize) -> (Vec<usize>, Vec<RatVec>) {
    let mut vecs = cone.basis.clone();
    let mut comp = Vec::new();
    for j in 0..d {
        if vecs.len() == d {
            break;
        }
        let mut trial = vecs.clone();
        trial.push(standard(d, j));
        if exactla::rank_of_vectors(&trial) == trial.len() {
            vecs = trial;
            comp.push(j);
        }
    }
    let cols: Vec<RatVec> = (0..d).map(|r| vecs.iter().map(|v| v[r].clone()).collect()).collect();
    let inverse = exactla::inverse(&cols).expect("completed basis");
    (comp, inverse)
}

/// Kernel of the rows, with the free columns that serve as coordinates.
fn kernel_fiber(rows: &[RatVec], d: usize) -> Fiber {
    let m = RatMatrix::from_dense_with_cols(rows, d);
    Fiber::Kernel { basis: m.kernel_basis(), free: m.free_columns() }
}

fn fiber(cone: &Cone, spec: &SystemSpec, d: usize) -> Result<Fiber> {
    Ok(match spec {
        SystemSpec::Span => Fiber::Span,
        SystemSpec::QuotientBySpan => {
            let (complement, inverse) = complement(cone, d);
            Fiber::Quotient { complement, inverse }
        }
        SystemSpec::ExteriorQuotient(q) => {
            let (complement, inverse) = complement(cone, d);
            let subsets = (0..complement.len()).combinations(*q).collect();
            Fiber::Exterior { complement, inverse, subsets }
        }
        SystemSpec::Constant => Fiber::Constant,
        SystemSpec::Perp => kernel_fiber(&cone.basis, d),
        SystemSpec::Vr(r) => {
            let mut tight = Vec::new();
            for g in &cone.generators {
                if g.iter().any(|x| !x.is_integer()) {
                    return Err(Error::UnsupportedSpec(format!("{} on a non-lattice cone", spec.label())));
                }
                let value: Rational = g.iter().zip(r).map(|(x, &ri)| x * rat(ri)).sum();
                if !value.is_positive() {
                    return Ok(Fiber::Zero);
                }
                if value.is_one() {
                    tight.push(g.clone());
                }
            }
            kernel_fiber(&tight, d)
        }
    })
}

/// Matrix of the quotient map `V/span τ → V/span σ` in the complement bases.
fn quotient_matrix(src: &[usize], dst: &[usize], dst_inverse: &[RatVec], k: usize) -> Vec<RatVec> {
    dst.iter().enumerate().map(|(a, _)| src.iter().map(|&j| dst_inverse[k + a][j].clone()).collect()).collect()
}

/// The map of fibers along a face relation, oriented as the system's arrows.
fn fiber_map(from: (&Cone, &Fiber), to: (&Cone, &Fiber)) -> Vec<RatVec> {
    let ((fc, ff), (tc, tf)) = (from, to);
    match (ff, tf) {
        (Fiber::Span, Fiber::Span) => {
            let cols: Vec<RatVec> = fc.basis.iter().map(|b| tc.coordinates(b).expect("face span")).collect();
            transpose(&cols, tc.dim())
        }
        (Fiber::Quotient { complement: src, .. }, Fiber::Quotient { complement: dst, inverse }) => {
            quotient_matrix(src, dst, inverse, tc.dim())
        }
        (
            Fiber::Exterior { complement: src, subsets: src_sets, .. },
            Fiber::Exterior { complement: dst, inverse, subsets: dst_sets },
        ) => {
            let m = quotient_matrix(src, dst, inverse, tc.dim());
            dst_sets
                .iter()
                .map(|i| {
                    src_sets
                        .iter()
                        .map(|j| {
                            let minor: Vec<RatVec> =
                                i.iter().map(|&a| j.iter().map(|&b| m[a][b].clone()).collect()).collect();
                            exactla::determinant(&minor)
                        })
                        .collect()
                })
                .collect()
        }
        (Fiber::Constant, Fiber::Constant) => vec![vec![Rational::one()]],
        (Fiber::Kernel { basis, .. }, Fiber::Kernel { free, basis: tb }) => {
            let cols: Vec<RatVec> = basis.iter().map(|w| free.iter().map(|&c| w[c].clone()).collect()).collect();
            transpose(&cols, tb.len())
        }
        (Fiber::Zero, _) | (_, Fiber::Zero) => Vec::new(),
        _ => unreachable!("fibers of one system share a kind"),
    }
}

fn transpose(cols: &[RatVec], rows: usize) -> Vec<RatVec> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}

/// Assembles the complex of `spec` on `fan`.
pub fn assemble(fan: &OrientedFan, spec: &SystemSpec) -> Result<SystemComplex> {
    let d = fan.ambient_dim();
    if let SystemSpec::ExteriorQuotient(q) = spec {
        if *q > d {
            return Err(Error::UnsupportedSpec(format!("exterior power {q} exceeds dimension {d}")));
        }
    }
    if let SystemSpec::Vr(r) = spec {
        if r.len() != d {
            return Err(Error::DimensionMismatch { expected: d, found: r.len() });
        }
    }
    let fibers: Vec<Fiber> = fan.cones().iter().map(|c| fiber(c, spec, d)).collect::<Result<_>>()?;
    let mut dims = vec![0; d + 1];
    let mut blocks = vec![Vec::new(); d + 1];
    let mut offset = vec![0; fan.len()];
    for (i, cone) in fan.cones().iter().enumerate() {
        let k = cone.dim();
        let size = fibers[i].dim(cone);
        offset[i] = dims[k];
        blocks[k].push((i, dims[k], size));
        dims[k] += size;
    }
    let homological = spec.is_homological();
    let mut maps: Vec<RatMatrix> =
        (0..d)
            .map(|k| {
                if homological {
                    RatMatrix::zeros(dims[k], dims[k + 1])
                } else {
                    RatMatrix::zeros(dims[k + 1], dims[k])
                }
            })
            .collect();
    for (s, cone) in fan.cones().iter().enumerate() {
        if cone.dim() == 0 {
            continue;
        }
        let k = cone.dim() - 1;
        for &(t, eps) in fan.facets_of(s) {
            let tc = fan.cone(t);
            let sign = rat(eps);
            let (block, r0, c0) = if homological {
                (fiber_map((cone, &fibers[s]), (tc, &fibers[t])), offset[t], offset[s])
            } else {
                (fiber_map((tc, &fibers[t]), (cone, &fibers[s])), offset[s], offset[t])
            };
            for (a, row) in block.iter().enumerate() {
                for (b, x) in row.iter().enumerate() {
                    if !x.is_zero() {
                        maps[k].add_to(r0 + a, c0 + b, &(x * &sign));
                    }
                }
            }
        }
    }
    Ok(SystemComplex { spec: spec.clone(), dims, maps, blocks })
}

/// Dimensions of the (co)homology in every degree `0..=ambient_dim`.
pub fn cohomology_dims(c: &SystemComplex) -> Result<Vec<usize>> {
    if let Some(degree) = c.square_defect() {
        return Err(Error::NotAComplex { degree });
    }
    let ranks: Vec<usize> = c.maps.iter().map(RatMatrix::rank).collect();
    Ok((0..c.dims.len())
        .map(|k| {
            let out = ranks.get(k).copied().unwrap_or(0);
            let inc = if k > 0 { ranks[k - 1] } else { 0 };
            c.dims[k] - out - inc
        })
        .collect())
}

/// `dim H^{D-p}(Σ, Λ^q V/span)` for a fan in dimension `D`.
pub fn hodge_number(fan: &OrientedFan, p: usize, q: usize) -> Result<usize> {
    let d = fan.ambient_dim();
    if p > d || q > d {
        return Ok(0);
    }
    let c = assemble(fan, &SystemSpec::ExteriorQuotient(q))?;
    Ok(cohomology_dims(&c)?[d - p])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{cone_fan, normal_fan};
    use crate::polytope::Polytope;
    use crate::zoo;

    fn h(p: &Polytope, spec: SystemSpec) -> Vec<usize> {
        cohomology_dims(&assemble(&cone_fan(p), &spec).unwrap()).unwrap()
    }

    #[test]
    fn square_quotient_complex() {
        let sq = zoo::get("unit_square_lattice").unwrap();
        let c = assemble(&cone_fan(&sq), &SystemSpec::QuotientBySpan).unwrap();
        assert_eq!(c.dims, vec![3, 8, 4, 0]);
        assert_eq!(cohomology_dims(&c).unwrap(), vec![0, 1, 0, 0]);
    }

    #[test]
    fn constant_and_span() {
        let sq = zoo::get("unit_square_lattice").unwrap();
        assert_eq!(h(&sq, SystemSpec::Constant), vec![0, 0, 0, 0]);
        let pt = Polytope::from_i64(&[vec![0]]).unwrap();
        let c = assemble(&cone_fan(&pt), &SystemSpec::Span).unwrap();
        assert_eq!(c.dims, vec![0, 1]);
    }

    #[test]
    fn perp_matches_quotient() {
        for name in ["unit_square_lattice", "cuboctahedron", "cube(3)"] {
            let p = zoo::get(name).unwrap();
            assert_eq!(h(&p, SystemSpec::Perp), h(&p, SystemSpec::QuotientBySpan), "{name}");
        }
    }

    #[test]
    fn hodge_of_square_normal_fan() {
        let sq = zoo::get("unit_square_lattice").unwrap();
        let nf = normal_fan(&sq);
        assert_eq!(hodge_number(&nf, 1, 1).unwrap(), 2);
        assert_eq!(hodge_number(&nf, 2, 2).unwrap(), 1);
        assert_eq!(hodge_number(&nf, 2, 1).unwrap(), 0);
        assert_eq!(hodge_number(&nf, 0, 1).unwrap(), 0);
    }
}
