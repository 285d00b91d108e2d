//! Dimensions of `D^k` for a few polytopes, computed on the cone over the
//! polytope and, independently, through the polar dual.

use polyhodge::dinv::{d_profile, d_profile_dual_route, d_profile_span_route, double_pyramid_recursion};
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    for name in ["mgon(7)", "icosahedron", "cuboctahedron", "bipyramid_mgon(6)", "dp_cuboctahedron", "cyclic(4,8)"] {
        let p = zoo::get(name)?;
        let d = d_profile(&p)?;
        let dual = d_profile_dual_route(&p)?;
        let span = d_profile_span_route(&p)?;
        assert_eq!(d.dims, dual.dims);
        assert_eq!(d.dims, span.dims);
        println!("{name:<20} D = {:?}", d.dims);
    }

    let (actual, predicted) = double_pyramid_recursion(&zoo::mgon(5))?;
    println!("double pyramid over a pentagon: {actual:?}, predicted {predicted:?}");
    assert_eq!(actual, predicted);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
