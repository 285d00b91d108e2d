//! `D^2` as the solution space of a sparse system in flag variables, on the
//! double pyramid over the cuboctahedron.

use polyhodge::d2sys::{build_flag_system, kernel_dim_without_triangles, sign_element_check};
use polyhodge::dinv::d_profile;
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    let p = zoo::get("dp_cuboctahedron")?;
    let sys = build_flag_system(&p)?;
    println!("{} flag variables, rows per family {:?}", sys.variables.len(), sys.family_rows);
    println!("kernel dimension {}", sys.kernel_dim());
    assert_eq!(sys.kernel_dim(), d_profile(&p)?.get(2));
    assert_eq!(kernel_dim_without_triangles(&sys, &p), sys.kernel_dim());
    println!("alternating signs on the squares solve the system: {}", sign_element_check(&p)?);

    // a cube vertex lies on three squares, so alternation cannot balance
    let dc = polyhodge::polytope::double_pyramid(&zoo::cube(3));
    println!(
        "double pyramid over the cube: kernel {}, sign element {}",
        build_flag_system(&dc)?.kernel_dim(),
        sign_element_check(&dc)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
