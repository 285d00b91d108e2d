//! Named example polytopes with exact rational coordinates.
//!
//! Names take integer parameters in parentheses: `simplex(4)`, `mgon(7)`,
//! `cyclic(4,8)`. Parameterless names may be written with or without `()`.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exactla::{rat, rat_vec, ratio, RatVec, Rational};
use crate::polytope::{double_pyramid, prism, pyramid, Polytope};

/// Parameter in the icosahedron model `(0, ±1, ±T)` and its cyclic shifts.
pub const ICOSAHEDRON_T: (i64, i64) = (8, 5);

/// A representative list of zoo names, used by sweeps and self checks.
pub fn catalogue() -> Vec<String> {
    let mut names: Vec<String> = vec![
        "simplex(2)",
        "simplex(3)",
        "simplex(4)",
        "cube(2)",
        "cube(3)",
        "crosspoly(3)",
        "mgon(5)",
        "mgon(6)",
        "pyramid_mgon(4)",
        "pyramid_mgon(5)",
        "bipyramid_mgon(5)",
        "bipyramid_mgon(6)",
        "icosahedron",
        "cuboctahedron",
        "prism_triangle",
        "cyclic(4,6)",
        "unit_square_lattice",
        "unit_cube_lattice",
    ]
    .into_iter()
    .map(String::from)
    .collect();
    names.push("dp_cuboctahedron".into());
    names
}

/// Looks up a zoo polytope by name.
pub fn get(name: &str) -> Result<Polytope> {
    let unknown = || Error::UnknownName(name.to_string());
    let trimmed = name.trim();
    let (base, args) = match trimmed.split_once('(') {
        Some((b, rest)) => {
            let inner = rest.strip_suffix(')').ok_or_else(unknown)?;
            let args: Vec<usize> = if inner.trim().is_empty() {
                Vec::new()
            } else {
                inner
                    .split(',')
                    .map(|a| a.trim().parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| unknown())?
            };
            (b.trim(), args)
        }
        None => (trimmed, Vec::new()),
    };
    let one = |lo: usize| -> Result<usize> {
        match args.as_slice() {
            [k] if *k >= lo => Ok(*k),
            _ => Err(unknown()),
        }
    };
    let none = || -> Result<()> {
        if args.is_empty() {
            Ok(())
        } else {
            Err(unknown())
        }
    };
    let p = match base {
        "simplex" => simplex(one(0)?),
        "cube" => cube(one(1)?),
        "crosspoly" => crosspoly(one(1)?),
        "mgon" => mgon(one(3)?),
        "pyramid_mgon" => pyramid(&mgon(one(3)?)),
        "bipyramid_mgon" => double_pyramid(&mgon(one(3)?)),
        "icosahedron" => none().map(|_| icosahedron())?,
        "cuboctahedron" => none().map(|_| cuboctahedron())?,
        "dp_cuboctahedron" => none().map(|_| double_pyramid(&cuboctahedron()))?,
        "prism_triangle" => none().map(|_| prism(&mgon(3)))?,
        "octahedron" => none().map(|_| crosspoly(3))?,
        "cyclic" => match args.as_slice() {
            [d, n] if *d >= 2 && n > d => cyclic(*d, *n),
            _ => return Err(unknown()),
        },
        "unit_square_lattice" => none().map(|_| unit_cube(2))?,
        "unit_cube_lattice" => none().map(|_| unit_cube(3))?,
        _ => return Err(unknown()),
    };
    Ok(p.with_name(trimmed))
}

fn build(points: Vec<RatVec>) -> Polytope {
    Polytope::from_vertices(&points).expect("zoo polytopes are nonempty")
}

/// Standard simplex: the origin and the unit vectors.
pub fn simplex(n: usize) -> Polytope {
    let mut pts = vec![vec![rat(0); n]];
    for i in 0..n {
        let mut e = vec![rat(0); n];
        e[i] = rat(1);
        pts.push(e);
    }
    build(pts)
}

/// `[-1, 1]^n`.
pub fn cube(n: usize) -> Polytope {
    build((0..n).map(|_| [-1i64, 1]).multi_cartesian_product().map(|v| rat_vec(&v)).collect())
}

/// `[0, 1]^n`, a lattice polytope.
pub fn unit_cube(n: usize) -> Polytope {
    build((0..n).map(|_| [0i64, 1]).multi_cartesian_product().map(|v| rat_vec(&v)).collect())
}

/// Convex hull of `±e_i`.
pub fn crosspoly(n: usize) -> Polytope {
    let mut pts = Vec::new();
    for i in 0..n {
        for s in [1, -1] {
            let mut e = vec![rat(0); n];
            e[i] = rat(s);
            pts.push(e);
        }
    }
    build(pts)
}

/// Convex `m`-gon with rational vertices on the unit circle.
pub fn mgon(m: usize) -> Polytope {
    let m = m as i64;
    build(
        (0..m)
            .map(|k| {
                let t = ratio(4 * (2 * k - m + 1), 2 * m);
                let d = rat(1) + &t * &t;
                vec![(rat(1) - &t * &t) / &d, rat(2) * &t / &d]
            })
            .collect(),
    )
}

/// Rational icosahedron: cyclic shifts of `(0, ±1, ±T)`.
pub fn icosahedron() -> Polytope {
    let t = ratio(ICOSAHEDRON_T.0, ICOSAHEDRON_T.1);
    let mut pts = Vec::new();
    for a in [rat(1), rat(-1)] {
        for b in [t.clone(), -t.clone()] {
            let base = [rat(0), a.clone(), b];
            for shift in 0..3 {
                pts.push((0..3).map(|i| base[(i + shift) % 3].clone()).collect());
            }
        }
    }
    build(pts)
}

/// All permutations of `(±1, ±1, 0)`.
pub fn cuboctahedron() -> Polytope {
    let mut pts: Vec<RatVec> = Vec::new();
    for zero in 0..3 {
        for a in [1, -1] {
            for b in [1, -1] {
                let mut v = vec![rat(0); 3];
                let others: Vec<usize> = (0..3).filter(|&i| i != zero).collect();
                v[others[0]] = rat(a);
                v[others[1]] = rat(b);
                pts.push(v);
            }
        }
    }
    build(pts)
}

/// Cyclic polytope: points `(t, t^2, ..., t^d)` for `t = 1..=n`.
pub fn cyclic(d: usize, n: usize) -> Polytope {
    build((1..=n as i64).map(|t| (1..=d as u32).map(|e| Rational::from_integer(t.pow(e).into())).collect()).collect())
}
