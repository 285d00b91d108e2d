use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use itertools::Itertools;
use num_traits::{Signed, Zero};
use polyhodge::complexes::{assemble, cone_fan, normal_fan, SystemSpec};
use polyhodge::d2sys::{self, certify_vanishing, clean, clean_in_random_order, Verdict};
use polyhodge::dinv::{self, d_profile, d_profile_dual_route, minkowski_space};
use polyhodge::exactla::{determinant, dot, rat, ratio, RatVec, Rational};
use polyhodge::nerve::{build_nerve, e2_page, vertex_figure_sum};
use polyhodge::polytope::{double_pyramid, free_sum, prism, product, pyramid, Polytope};
use polyhodge::toricdef::{gorenstein_cone, restrict_to_face, vr_complex_exactness, vr_homology, GorensteinCone};
use polyhodge::zoo;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: polyhodge::Error) -> String {
    e.to_string()
}

fn dims(p: &Polytope) -> Result<Vec<usize>, String> {
    d_profile(p).map(|d| d.dims).map_err(err)
}

fn get(name: &str) -> Result<Polytope, String> {
    zoo::get(name).map_err(err)
}

fn catalogue() -> Result<Vec<(String, Polytope)>, String> {
    zoo::catalogue().into_iter().map(|n| get(&n).map(|p| (n, p))).collect()
}

fn regression_table() -> Outcome {
    let mut n = 0;
    let mut check = |label: String, got: Vec<usize>, want: Vec<usize>| -> Result<(), String> {
        n += 1;
        ensure!(got == want, "{label}: got {got:?}, want {want:?}");
        Ok(())
    };
    check("icosahedron".into(), dims(&zoo::icosahedron())?, vec![0, 0, 8, 0])?;
    for m in 4..=8 {
        check(format!("pyramid over {m}-gon"), dims(&get(&format!("pyramid_mgon({m})"))?)?, vec![0; 4])?;
        let d = dims(&get(&format!("bipyramid_mgon({m})"))?)?;
        check(format!("bipyramid over {m}-gon D^2"), vec![d[2]], vec![m - 2])?;
    }
    let cuboct = zoo::cuboctahedron();
    check("cuboctahedron".into(), dims(&cuboct)?, vec![0, 1, 3, 0])?;
    check("cuboctahedron f-vector".into(), cuboct.f_vector().proper().to_vec(), vec![12, 24, 14])?;
    check("double pyramid over cuboctahedron".into(), dims(&double_pyramid(&cuboct))?, vec![0, 0, 1, 4, 0])?;
    for m in 3..=10 {
        check(format!("{m}-gon D^1"), vec![dims(&zoo::mgon(m))?[1]], vec![m - 3])?;
    }
    let simple = [
        zoo::cube(3),
        zoo::cube(4),
        get("prism_triangle")?,
        prism(&zoo::mgon(5)),
        product(&zoo::mgon(3), &zoo::mgon(4)),
        product(&zoo::cube(2), &zoo::mgon(6)),
        product(&get("prism_triangle")?, &zoo::mgon(3)),
    ];
    for p in &simple {
        ensure!(p.is_simple(), "expected a simple polytope, f = {:?}", p.f_vector().0);
        let d = dims(p)?;
        check(format!("simple polytope f = {:?}", p.f_vector().0), d[2..].to_vec(), vec![0; d.len() - 2])?;
    }
    Ok(format!("{n} regression values"))
}

fn cross_method() -> Outcome {
    let polys = catalogue()?;
    for (name, p) in &polys {
        let d = dims(p)?;
        let dual = d_profile_dual_route(p).map_err(err)?.dims;
        ensure!(d == dual, "{name}: direct {d:?} vs dual {dual:?}");
        for c in dinv::normal_fan_checks(p).map_err(err)? {
            ensure!(c.pass, "{name}: {} ({} vs {})", c.name, c.lhs, c.rhs);
        }
        ensure!(minkowski_space(p).dim() == d[1] + 1, "{name}: Minkowski summands");
        let alt = dinv::closed_form_checks(p).map_err(err)?;
        let alt = alt.iter().find(|c| c.name == "alternating sum").ok_or(format!("{name}: no alternating sum"))?;
        ensure!(alt.pass, "{name}: alternating sum {} vs {}", alt.lhs, alt.rhs);
    }
    Ok(format!("{} zoo polytopes", polys.len()))
}

fn flag_oracle() -> Outcome {
    let dp = get("dp_cuboctahedron")?;
    let flags = d2sys::d2_via_flags(&dp).map_err(err)?;
    let direct = dims(&dp)?[2];
    ensure!(flags == 1 && direct == 1, "flags {flags}, direct {direct}");
    ensure!(d2sys::sign_element_check(&dp).map_err(err)?, "alternating element is not in the kernel");
    let s = d2sys::d2_via_flags(&zoo::simplex(4)).map_err(err)?;
    ensure!(s == 0, "4-simplex flag kernel {s}");
    Ok("kernel 1 = D^2, sign element in kernel, simplex 0".into())
}

fn double_pyramid_recursion() -> Outcome {
    for (name, p) in [
        ("square", zoo::mgon(4)),
        ("pentagon", zoo::mgon(5)),
        ("cuboctahedron", zoo::cuboctahedron()),
        ("octahedron", zoo::crosspoly(3)),
        ("simplex(3)", zoo::simplex(3)),
    ] {
        let (actual, predicted) = dinv::double_pyramid_recursion(&p).map_err(err)?;
        ensure!(actual == predicted, "{name}: {actual:?} vs {predicted:?}");
    }
    Ok("5 bases".into())
}

fn nerve_e2() -> Outcome {
    let mut detail = Vec::new();
    for name in ["dp_cuboctahedron", "cyclic(4,8)"] {
        let p = get(name)?;
        let nv = build_nerve(&p, 3).map_err(err)?;
        let page = e2_page(&nv).map_err(err)?;
        for (k, e) in page.iter().enumerate() {
            ensure!(k == 3 || e[0] == 0, "{name}: E2^({k},0) = {}", e[0]);
        }
        let sum = vertex_figure_sum(&p, 3);
        ensure!(page[3][0] == sum, "{name}: E2^(3,0) = {} vs {sum}", page[3][0]);
        detail.push(format!("{name} E2^(3,0) = {sum}"));
    }
    Ok(detail.join(", "))
}

fn random_affine(rng: &mut ChaCha8Rng, n: usize) -> (Vec<RatVec>, RatVec) {
    loop {
        let a: Vec<RatVec> =
            (0..n).map(|_| (0..n).map(|_| ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))).collect()).collect();
        if !determinant(&a).is_zero() {
            let t = (0..n).map(|_| ratio(rng.gen_range(-9..=9), rng.gen_range(1..=3))).collect();
            return (a, t);
        }
    }
}

/// `x ↦ (A x + t) / (1 + <c, x>)`, with `c` scaled so the denominator stays positive on the vertices.
fn random_projective(rng: &mut ChaCha8Rng, p: &Polytope, affine_only: bool) -> Result<Polytope, String> {
    let n = p.ambient_dim();
    let (a, t) = random_affine(rng, n);
    let mut c: RatVec = (0..n).map(|_| rat(rng.gen_range(-3..=3))).collect();
    if affine_only {
        c.iter_mut().for_each(|x| *x = rat(0));
    }
    let bound: Rational = p.vertices().iter().map(|v| dot(&c, v).abs()).max().unwrap_or_else(|| rat(0));
    let scale = rat(2) * (bound + rat(1));
    let pts: Vec<RatVec> = p
        .vertices()
        .iter()
        .map(|v| {
            let den = rat(1) + dot(&c, v) / &scale;
            a.iter().zip(&t).map(|(row, ti)| (dot(row, v) + ti) / &den).collect()
        })
        .collect();
    Polytope::from_vertices(&pts).map_err(err)
}

fn random_instance(rng: &mut ChaCha8Rng) -> (String, Polytope) {
    let m = rng.gen_range(4..=6);
    let k = rng.gen_range(3..=5);
    let (name, p) = match rng.gen_range(0..8) {
        0 => (format!("pyr pyr {m}-gon"), pyramid(&pyramid(&zoo::mgon(m)))),
        1 => (format!("{m}-gon + {k}-gon"), free_sum(&zoo::mgon(m), &zoo::mgon(k))),
        2 => (format!("dp pyr {m}-gon"), double_pyramid(&pyramid(&zoo::mgon(m)))),
        3 => (format!("pyr dp {m}-gon"), pyramid(&double_pyramid(&zoo::mgon(m)))),
        4 => (format!("cyclic(4,{})", m + 2), zoo::cyclic(4, m + 2)),
        5 => ("dp cube".into(), double_pyramid(&zoo::cube(3))),
        6 => (format!("pyr pyr pyr {m}-gon"), pyramid(&pyramid(&pyramid(&zoo::mgon(m))))),
        _ => (format!("pyr {m}-gon + segment"), free_sum(&pyramid(&zoo::mgon(m)), &zoo::cube(1))),
    };
    (name, p)
}

fn cleaning() -> Outcome {
    let dp = get("dp_cuboctahedron")?;
    let s = clean(&dp);
    let triangles: BTreeSet<usize> = dp.faces_of_dim(2).filter(|&e| dp.face(e).len() == 3).collect();
    ensure!(s.clean_2faces == triangles, "some quadrilateral was cleaned");
    let on_quads: BTreeSet<usize> =
        dp.faces_of_dim(2).filter(|&e| dp.face(e).len() == 4).flat_map(|e| dp.face(e).vertex_set.clone()).collect();
    ensure!(s.clean_vertices.is_disjoint(&on_quads), "a vertex of a quadrilateral was cleaned");
    ensure!(
        matches!(certify_vanishing(&dp).map_err(err)?, Verdict::NotApplicable(_)),
        "certificate on the double pyramid"
    );

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut certified = 0;
    for _ in 0..20 {
        let (name, base) = random_instance(&mut rng);
        let p = random_projective(&mut rng, &base, false)?;
        if certify_vanishing(&p).map_err(err)? == Verdict::VanishesByTheorem {
            certified += 1;
            let d2 = dims(&p)?[2];
            ensure!(d2 == 0, "{name}: certified but D^2 = {d2}");
        }
    }
    ensure!(certified > 0, "no random instance was certified");
    Ok(format!("{certified} of 20 random instances certified, all with D^2 = 0"))
}

fn confluence() -> Outcome {
    let polys = vec![
        ("dp_cuboctahedron".to_string(), get("dp_cuboctahedron")?),
        ("dp cube".into(), double_pyramid(&zoo::cube(3))),
        ("pentagon + square".into(), free_sum(&zoo::mgon(5), &zoo::mgon(4))),
        ("pyr pyr hexagon".into(), pyramid(&pyramid(&zoo::mgon(6)))),
        ("cyclic(4,7)".into(), zoo::cyclic(4, 7)),
        ("icosahedron".into(), zoo::icosahedron()),
        ("cube(4)".into(), zoo::cube(4)),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (name, p) in &polys {
        let base = clean(p);
        for _ in 0..100 {
            let s = clean_in_random_order(p, &mut rng);
            ensure!(
                s.clean_vertices == base.clean_vertices && s.clean_2faces == base.clean_2faces,
                "{name}: random order reached a different fixpoint"
            );
        }
    }
    Ok(format!("{} polytopes x 100 orders", polys.len()))
}

fn toric() -> Outcome {
    let conifold = gorenstein_cone(&zoo::unit_cube(2)).map_err(err)?;
    let cube = gorenstein_cone(&zoo::unit_cube(3)).map_err(err)?;
    let t = |c: &GorensteinCone, k: usize| polyhodge::toricdef::t_graded(c, k, &c.rstar).map_err(err);
    ensure!(t(&conifold, 1)? == 1, "conifold T^1(-R*)");
    ensure!(t(&cube, 1)? == 2, "cube T^1(-R*)");
    ensure!(t(&cube, 2)? == 0, "cube T^2(-R*)");
    let mut compared = 0;
    for c in [&conifold, &cube] {
        for r in (0..c.rank()).map(|_| -1i64..=1).multi_cartesian_product() {
            if !c.is_bounded(&r).map_err(err)? {
                continue;
            }
            let face = restrict_to_face(c, &r).map_err(err)?;
            let via_face = d_profile(&face).map_err(err)?.get(1);
            let via_vr = vr_homology(c, &r).map_err(err)?[1];
            ensure!(via_face == via_vr, "degree {r:?}: face route {via_face}, V^R route {via_vr}");
            compared += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for c in [&conifold, &cube] {
        let mut done = 0;
        while done < 200 {
            let r: Vec<i64> = (0..c.rank()).map(|_| rng.gen_range(-3..=3)).collect();
            if c.is_bounded(&r).map_err(err)? {
                continue;
            }
            ensure!(vr_complex_exactness(c, &r).map_err(err)?, "V^R complex not exact for {r:?}");
            done += 1;
        }
    }
    Ok(format!("{compared} bounded degrees agree, 400 unbounded degrees exact"))
}

fn structural() -> Outcome {
    let mut complexes = 0;
    let polys = catalogue()?;
    for (name, p) in &polys {
        let n = p.ambient_dim();
        let specs = vec![SystemSpec::Span, SystemSpec::QuotientBySpan, SystemSpec::Constant, SystemSpec::Perp];
        for fan in [cone_fan(p), normal_fan(p)] {
            let mut all = specs.clone();
            all.extend((0..=fan.ambient_dim()).map(SystemSpec::ExteriorQuotient));
            if p.is_lattice() && fan.ambient_dim() == n + 1 {
                let mut rstar = vec![0; n + 1];
                rstar[n] = 1;
                all.push(SystemSpec::Vr(rstar));
            }
            for spec in &all {
                let c = assemble(&fan, spec).map_err(err)?;
                ensure!(c.square_defect().is_none(), "{name}: {} is not a complex", spec.label());
                complexes += 1;
            }
        }
        ensure!(p.f_vector().euler_sum() == 0, "{name}: Euler relation");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut maps = 0;
    for (name, p) in &polys {
        let d = dims(p)?;
        for i in 0..10 {
            let q = random_projective(&mut rng, p, i % 2 == 0)?;
            ensure!(q.f_vector() == p.f_vector(), "{name}: map changed the f-vector");
            ensure!(q.f_vector().euler_sum() == 0, "{name}: Euler relation after a map");
            let dq = dims(&q)?;
            ensure!(dq == d, "{name}: {d:?} became {dq:?}");
            maps += 1;
        }
    }
    Ok(format!("{complexes} complexes square to zero, {maps} maps preserve the profile"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("regression table", regression_table),
        ("cross-method consistency", cross_method),
        ("flag-system oracle", flag_oracle),
        ("double-pyramid recursion", double_pyramid_recursion),
        ("nerve E2 bottom row", nerve_e2),
        ("cleaning and certificate soundness", cleaning),
        ("cleaning confluence", confluence),
        ("toric T^1 and T^2", toric),
        ("structural properties", structural),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail}; {secs:.1}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why}; {secs:.1}s)", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
