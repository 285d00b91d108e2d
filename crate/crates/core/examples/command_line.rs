//! Driving the command-line front end from code.

use polyhodge::cli::run_with;
use polyhodge::Result;

pub fn run_example() -> Result<()> {
    let mut out = Vec::new();
    let code = run_with(["polyhodge", "--json", "dinv", "--zoo", "icosahedron", "--crosscheck", "dual"], &mut out);
    print!("{}", String::from_utf8_lossy(&out));
    assert_eq!(code, 0);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
