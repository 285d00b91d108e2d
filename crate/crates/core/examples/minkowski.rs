//! Minkowski summands of a polytope as edge dilation factors.

use polyhodge::dinv::{d_profile, minkowski_space};
use polyhodge::exactla::format_rational;
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    for name in ["mgon(6)", "cube(3)", "prism_triangle", "octahedron"] {
        let p = zoo::get(name)?;
        let m = minkowski_space(&p);
        assert_eq!(m.dim(), d_profile(&p)?.get(1) + 1);
        println!("{name}: {} edges, summand space of dimension {}", m.edges.len(), m.dim());
    }
    let hex = minkowski_space(&zoo::mgon(6));
    for v in &hex.basis {
        println!("  [{}]", v.iter().map(format_rational).collect::<Vec<_>>().join(" "));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
