//! Command-line front end. `run` parses arguments, dispatches, prints a report
//! and returns the process exit code: 0 on success, 1 when a computation fails
//! or a check does not pass, 2 on bad input.

use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::complexes::{hodge_number, normal_fan};
use crate::d2sys;
use crate::dinv::{self, Check};
use crate::error::{Error, Result};
use crate::nerve;
use crate::polytope::{product, Polytope};
use crate::toricdef;
use crate::{io, zoo};

#[derive(Parser, Debug)]
#[command(name = "polyhodge", version, about = "Hodge-type invariants of convex polytopes")]
pub struct Cli {
    /// Emit a JSON report instead of a text table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Built-in polytope, e.g. `cuboctahedron` or `cyclic(4,8)`.
    #[arg(long, conflicts_with = "file")]
    pub zoo: Option<String>,
    /// JSON file `{"name"?, "vertices": [[...], ...]}`.
    #[arg(long)]
    pub file: Option<std::path::PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Crosscheck {
    Dual,
    Closedform,
    Normalfan,
    Flags,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimensions of D^k for k = 0..n.
    Dinv {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum)]
        crosscheck: Option<Crosscheck>,
    },
    /// Table of H^{p,q} of the normal fan.
    Hodge {
        #[command(flatten)]
        source: Source,
    },
    /// Minkowski summands as edge dilations.
    Minkowski {
        #[command(flatten)]
        source: Source,
    },
    /// The flag system for D^2.
    D2system {
        #[command(flatten)]
        source: Source,
    },
    /// Run the cleaning process.
    Clean {
        #[command(flatten)]
        source: Source,
    },
    /// Try to certify D^2 = 0 by pyramids and cleaning.
    Certify {
        #[command(flatten)]
        source: Source,
    },
    /// E_2 terms of the nerve spectral sequence.
    NerveE2 {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value_t = 3)]
        ell: usize,
    },
    /// Graded deformation spaces of the cone over a lattice polytope.
    Toric {
        #[command(subcommand)]
        op: ToricOp,
    },
    /// List the built-in polytopes, or print one as JSON.
    Zoo { name: Option<String> },
    /// Run the regression table.
    Selfcheck,
}

#[derive(Subcommand, Debug)]
pub enum ToricOp {
    T1 {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degree: Vec<i64>,
    },
    T2 {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        degree: Vec<i64>,
    },
    Sweep {
        #[command(flatten)]
        source: Source,
        /// Coordinate range `lo,hi`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        r#box: Vec<i64>,
    },
}

#[derive(Serialize, Debug)]
pub struct InputEcho {
    pub name: Option<String>,
    pub f_vector: Vec<usize>,
}

#[derive(Serialize, Debug)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputEcho>,
    pub results: Map<String, Value>,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
}

impl Report {
    fn new(command: &str, p: Option<&Polytope>) -> Self {
        Report {
            command: command.into(),
            input: p.map(|p| InputEcho { name: p.name().map(String::from), f_vector: p.f_vector().0 }),
            results: Map::new(),
            checks: Vec::new(),
            elapsed_ms: 0,
        }
    }

    fn set(&mut self, key: &str, v: impl Serialize) {
        self.results.insert(key.into(), serde_json::to_value(v).expect("report values serialise"));
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("command  {}\n", self.command);
        if let Some(i) = &self.input {
            s += &format!("input    {}  f = {:?}\n", i.name.as_deref().unwrap_or("-"), i.f_vector);
        }
        let width = self.results.keys().map(String::len).max().unwrap_or(0);
        for (k, v) in &self.results {
            s += &format!("{k:<width$}  {v}\n");
        }
        if !self.checks.is_empty() {
            let w = self.checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
            for c in &self.checks {
                let mark = if c.pass { "pass" } else { "FAIL" };
                s += &format!("  {:<w$}  {mark}  {} vs {}\n", c.name, c.lhs, c.rhs);
            }
        }
        s += &format!("time     {} ms\n", self.elapsed_ms);
        s
    }
}

fn load(src: &Source) -> Result<Polytope> {
    match (&src.zoo, &src.file) {
        (Some(name), _) => zoo::get(name),
        (None, Some(path)) => io::read_file(path),
        (None, None) => Err(Error::Parse("give --zoo NAME or --file PATH".into())),
    }
}

fn is_input_error(e: &Error) -> bool {
    matches!(e, Error::Parse(_) | Error::Json(_) | Error::Io(_) | Error::UnknownName(_) | Error::EmptyInput)
}

fn dinv_report(p: &Polytope, cross: Option<Crosscheck>) -> Result<Report> {
    let mut r = Report::new("dinv", Some(p));
    let d = dinv::d_profile(p)?;
    r.set("dims", &d.dims);
    let want = |c: Crosscheck| cross == Some(c) || cross == Some(Crosscheck::All);
    if want(Crosscheck::Dual) && p.dim() >= 1 {
        let dual = dinv::d_profile_dual_route(p)?;
        for (k, (a, b)) in d.dims.iter().zip(&dual.dims).enumerate() {
            r.checks.push(Check::new(format!("dual route D^{k}"), *a as i64, *b as i64));
        }
    }
    if want(Crosscheck::Closedform) {
        r.checks.extend(dinv::closed_form_checks(p)?);
    }
    if want(Crosscheck::Normalfan) && p.dim() >= 1 {
        r.checks.extend(dinv::normal_fan_checks(p)?);
    }
    if want(Crosscheck::Flags) && p.dim() >= 3 {
        match d2sys::d2_via_flags(p) {
            Ok(k) => r.checks.push(Check::new("flag system kernel = D^2", k as i64, d.get(2) as i64)),
            Err(Error::HypothesisViolated(msg)) => r.set("flags", format!("not applicable: {msg}")),
            Err(e) => return Err(e),
        }
    }
    Ok(r)
}

fn hodge_report(p: &Polytope) -> Result<Report> {
    let mut r = Report::new("hodge", Some(p));
    let fan = normal_fan(p);
    let n = fan.ambient_dim();
    let table: Vec<Vec<usize>> =
        (0..=n).map(|q| (0..=n).map(|pp| hodge_number(&fan, pp, q)).collect::<Result<_>>()).collect::<Result<_>>()?;
    r.set("dims", table);
    Ok(r)
}

fn minkowski_report(p: &Polytope) -> Result<Report> {
    let mut r = Report::new("minkowski", Some(p));
    let m = dinv::minkowski_space(p);
    r.set("dims", m.dim());
    r.set("edges", m.edges.len());
    r.set(
        "basis",
        m.basis.iter().map(|v| v.iter().map(crate::exactla::format_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
    );
    r.checks.push(Check::new("summands = D^1 + 1", m.dim() as i64, dinv::d_profile(p)?.get(1) as i64 + 1));
    Ok(r)
}

fn d2system_report(p: &Polytope) -> Result<Report> {
    let mut r = Report::new("d2system", Some(p));
    let sys = d2sys::build_flag_system(p)?;
    r.set("variables", sys.variables.len());
    r.set("family_rows", sys.family_rows);
    r.set("kernel_dim", sys.kernel_dim());
    r.checks.push(Check::new("kernel = D^2", sys.kernel_dim() as i64, dinv::d_profile(p)?.get(2) as i64));
    if p.dim() == 4 && p.faces_of_dim(2).all(|e| p.face(e).len() <= 4) {
        r.set("sign_element", d2sys::sign_element_check(p)?);
    }
    Ok(r)
}

fn clean_report(p: &Polytope) -> Result<Report> {
    let mut r = Report::new("clean", Some(p));
    let s = d2sys::clean(p);
    r.set("clean_vertices", &s.clean_vertices);
    r.set("clean_2faces", s.clean_2faces.iter().map(|&e| &p.face(e).vertex_set).collect::<Vec<_>>());
    r.set("complete", s.is_complete(p));
    r.set("history", &s.history);
    Ok(r)
}

fn certify_report(p: &Polytope) -> Result<Report> {
    let mut r = Report::new("certify", Some(p));
    let v = d2sys::certify_vanishing(p)?;
    let d2 = dinv::d_profile(p)?.get(2);
    if v == d2sys::Verdict::VanishesByTheorem {
        r.checks.push(Check::new("certified D^2 = 0", d2 as i64, 0));
    }
    r.set("verdict", v);
    r.set("d2", d2);
    Ok(r)
}

fn nerve_report(p: &Polytope, ell: usize) -> Result<Report> {
    let mut r = Report::new("nerve-e2", Some(p));
    let nv = nerve::build_nerve(p, ell)?;
    let page = nerve::e2_page(&nv)?;
    let rows: Vec<Value> = page.iter().enumerate().map(|(pp, e)| json!({"p": pp, "q0": e[0], "q1": e[1]})).collect();
    r.set("ell", ell);
    r.set("cover_faces", nv.cover_faces.len());
    r.set("dims", rows);
    let e0 = page.get(ell).map_or(0, |e| e[0]);
    r.checks.push(Check::new("E2^{ell,0} = vertex figure sum", e0 as i64, nerve::vertex_figure_sum(p, ell) as i64));
    let off: usize = page.iter().enumerate().filter(|(pp, _)| *pp != ell).map(|(_, e)| e[0]).sum();
    r.checks.push(Check::new("E2^{p,0} = 0 for p != ell", off as i64, 0));
    Ok(r)
}

fn toric_report(op: &ToricOp) -> Result<Report> {
    match op {
        ToricOp::T1 { source, degree } | ToricOp::T2 { source, degree } => {
            let k = if matches!(op, ToricOp::T1 { .. }) { 1 } else { 2 };
            let p = load(source)?;
            let c = toricdef::gorenstein_cone(&p)?;
            let mut r = Report::new(&format!("toric t{k}"), Some(&p));
            let v = toricdef::t_graded(&c, k, degree)?;
            r.set("degree", degree);
            r.set(&format!("t{k}"), v);
            if !c.is_bounded(degree)? {
                r.checks.push(Check::new(
                    "V^R complex exact",
                    i64::from(toricdef::vr_complex_exactness(&c, degree)?),
                    1,
                ));
            }
            Ok(r)
        }
        ToricOp::Sweep { source, r#box } => {
            let [lo, hi] = r#box.as_slice() else {
                return Err(Error::Parse("--box takes lo,hi".into()));
            };
            let p = load(source)?;
            let c = toricdef::gorenstein_cone(&p)?;
            let mut r = Report::new("toric sweep", Some(&p));
            let entries = toricdef::sweep(&c, *lo, *hi)?;
            let table: Map<String, Value> = entries
                .iter()
                .map(|e| {
                    let key = e.degree.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
                    let t2 = e.t2.map_or(json!("unsupported"), |v| json!(v));
                    (key, json!({"t1": e.t1, "t2": t2}))
                })
                .collect();
            r.set("degrees", table);
            Ok(r)
        }
    }
}

fn zoo_report(name: Option<&str>) -> Result<Report> {
    match name {
        None => {
            let mut r = Report::new("zoo", None);
            r.set("names", zoo::catalogue());
            Ok(r)
        }
        Some(n) => {
            let p = zoo::get(n)?;
            let mut r = Report::new("zoo", Some(&p));
            r.set("polytope", io::to_json_value(&p));
            Ok(r)
        }
    }
}

fn profile_checks(label: &str, got: &[usize], want: &[usize]) -> Vec<Check> {
    let mut out = vec![Check::new(format!("{label}: length"), got.len() as i64, want.len() as i64)];
    out.extend(
        got.iter().zip(want).enumerate().map(|(k, (a, b))| Check::new(format!("{label}: D^{k}"), *a as i64, *b as i64)),
    );
    out
}

/// The regression table run by `selfcheck`.
pub fn regression_checks() -> Result<Vec<Check>> {
    let dims = |p: &Polytope| dinv::d_profile(p).map(|d| d.dims);
    let mut out = Vec::new();
    out.extend(profile_checks("icosahedron", &dims(&zoo::icosahedron())?, &[0, 0, 8, 0]));
    for m in 4..=8 {
        out.extend(profile_checks(
            &format!("pyramid over {m}-gon"),
            &dims(&zoo::get(&format!("pyramid_mgon({m})"))?)?,
            &[0; 4],
        ));
        let d = dims(&zoo::get(&format!("bipyramid_mgon({m})"))?)?;
        out.push(Check::new(format!("bipyramid over {m}-gon: D^2 = m - 2"), d[2] as i64, m - 2));
    }
    let cuboct = zoo::cuboctahedron();
    out.extend(profile_checks("cuboctahedron", &dims(&cuboct)?, &[0, 1, 3, 0]));
    for (j, want) in [12, 24, 14].into_iter().enumerate() {
        out.push(Check::new(format!("cuboctahedron: f_{j}"), cuboct.f_vector().f(j as isize) as i64, want));
    }
    let dp = zoo::get("dp_cuboctahedron")?;
    out.extend(profile_checks("double pyramid over cuboctahedron", &dims(&dp)?, &[0, 0, 1, 4, 0]));
    for m in 3..=10i64 {
        let d = dims(&zoo::mgon(m as usize))?;
        out.push(Check::new(format!("{m}-gon: D^1 = m - 3"), d[1] as i64, m - 3));
    }
    let simple = [
        ("cube(3)", zoo::cube(3)),
        ("cube(4)", zoo::cube(4)),
        ("prism over triangle", zoo::get("prism_triangle")?),
        ("triangle x square", product(&zoo::mgon(3), &zoo::mgon(4))),
        ("square x pentagon", product(&zoo::mgon(4), &zoo::mgon(5))),
    ];
    for (name, p) in simple {
        let d = dims(&p)?;
        out.push(Check::new(format!("{name}: D^k = 0 for k >= 2"), d[2..].iter().sum::<usize>() as i64, 0));
    }
    out.push(Check::new("double pyramid over cuboctahedron: flag kernel", d2sys::d2_via_flags(&dp)? as i64, 1));
    out.push(Check::new("4-simplex: flag kernel", d2sys::d2_via_flags(&zoo::simplex(4))? as i64, 0));
    Ok(out)
}

fn selfcheck_report() -> Result<Report> {
    let mut r = Report::new("selfcheck", None);
    r.checks = regression_checks()?;
    r.set("total", r.checks.len());
    r.set("failed", r.checks.iter().filter(|c| !c.pass).count());
    Ok(r)
}

fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Dinv { source, crosscheck } => dinv_report(&load(source)?, *crosscheck),
        Command::Hodge { source } => hodge_report(&load(source)?),
        Command::Minkowski { source } => minkowski_report(&load(source)?),
        Command::D2system { source } => d2system_report(&load(source)?),
        Command::Clean { source } => clean_report(&load(source)?),
        Command::Certify { source } => certify_report(&load(source)?),
        Command::NerveE2 { source, ell } => nerve_report(&load(source)?, *ell),
        Command::Toric { op } => toric_report(op),
        Command::Zoo { name } => zoo_report(name.as_deref()),
        Command::Selfcheck => selfcheck_report(),
    }
}

/// Runs the command line `args` (program name first), writing the report to `out`.
pub fn run_with<I, T, W>(args: I, out: &mut W) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
    W: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let _ = write!(out, "{e}");
            return code;
        }
    };
    let start = Instant::now();
    let result = dispatch(&cli.command);
    let (text, code) = match result {
        Ok(mut r) => {
            r.elapsed_ms = start.elapsed().as_millis();
            let code = if r.passed() { 0 } else { 1 };
            let text =
                if cli.json { serde_json::to_string_pretty(&r).expect("report serialises") } else { r.to_text() };
            (text, code)
        }
        Err(e) => {
            let code = if is_input_error(&e) { 2 } else { 1 };
            let text = if cli.json { json!({"error": e.to_string()}).to_string() } else { format!("error: {e}") };
            (text, code)
        }
    };
    let _ = writeln!(out, "{text}");
    code
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run_with(std::iter::once("polyhodge").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    fn json_of(args: &[&str]) -> (i32, Value) {
        let mut all = vec!["--json"];
        all.extend_from_slice(args);
        let (code, s) = call(&all);
        (code, serde_json::from_str(&s).unwrap())
    }

    #[test]
    fn dinv_icosahedron() {
        let (code, v) = json_of(&["dinv", "--zoo", "icosahedron"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["dims"], json!([0, 0, 8, 0]));
    }

    #[test]
    fn dual_crosscheck() {
        let (code, v) = json_of(&["dinv", "--zoo", "cuboctahedron", "--crosscheck", "dual"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["dims"], json!([0, 1, 3, 0]));
        assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == json!(true)));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["dinv", "--zoo", "dodecahedron"]).0, 2);
        assert_eq!(call(&["dinv"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["d2system", "--zoo", "cube(4)"]).0, 1);
        assert_eq!(call(&["nerve-e2", "--zoo", "mgon(5)"]).0, 1);
    }

    #[test]
    fn toric_degrees() {
        let (code, v) = json_of(&["toric", "t1", "--zoo", "unit_square_lattice", "--degree", "0,0,1"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["t1"], json!(1));
        let (code, v) = json_of(&["toric", "t2", "--zoo", "unit_cube_lattice", "--degree", "-1,0,0,2"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["t2"], json!(0));
        let (code, v) = json_of(&["toric", "sweep", "--zoo", "unit_square_lattice", "--box=-1,1"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["degrees"]["0,0,1"]["t1"], json!(1));
    }

    #[test]
    fn other_commands() {
        let (_, v) = json_of(&["clean", "--zoo", "simplex(4)"]);
        assert_eq!(v["results"]["clean_vertices"], json!([0, 1, 2, 3, 4]));
        let (_, v) = json_of(&["certify", "--zoo", "simplex(4)"]);
        assert_eq!(v["results"]["verdict"], json!("VanishesByTheorem"));
        let (_, v) = json_of(&["d2system", "--zoo", "dp_cuboctahedron"]);
        assert_eq!(v["results"]["kernel_dim"], json!(1));
        let (_, v) = json_of(&["minkowski", "--zoo", "mgon(5)"]);
        assert_eq!(v["results"]["dims"], json!(3));
        let (code, v) = json_of(&["hodge", "--zoo", "cube(2)"]);
        assert_eq!(code, 0);
        assert_eq!(v["results"]["dims"][1][1], json!(2));
        let (code, _) = call(&["zoo", "cuboctahedron"]);
        assert_eq!(code, 0);
    }
}
