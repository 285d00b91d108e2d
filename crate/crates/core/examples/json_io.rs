//! Reading polytopes from JSON with integer, fractional and decimal coordinates.

use polyhodge::dinv::d_profile;
use polyhodge::io::{from_json_str, to_json_string};
use polyhodge::Result;

pub fn run_example() -> Result<()> {
    let src = r#"{"name": "kite", "vertices": [[0, 0], ["3/2", "0.5"], [2, 2], ["0.5", "3/2"]]}"#;
    let p = from_json_str(src)?;
    println!("{} has f-vector {:?} and D = {:?}", p.name().unwrap_or("?"), p.f_vector().0, d_profile(&p)?.dims);
    let back = from_json_str(&to_json_string(&p))?;
    assert!(back.combinatorially_equal(&p));
    println!("{}", to_json_string(&back));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
