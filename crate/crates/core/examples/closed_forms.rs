//! Closed-form identities between face numbers and `D^k`, checked against the direct computation.

use polyhodge::dinv::closed_form_checks;
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    for name in ["cube(3)", "prism_triangle", "octahedron", "icosahedron", "cuboctahedron"] {
        println!("{name}");
        for c in closed_form_checks(&zoo::get(name)?)? {
            println!("  {:<50} {:>4} {:>4}  {}", c.name, c.lhs, c.rhs, if c.pass { "ok" } else { "FAIL" });
            assert!(c.pass);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
