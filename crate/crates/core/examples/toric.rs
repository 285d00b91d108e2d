//! Graded pieces of `T^1` and `T^2` for the cones over the unit square and the unit cube.

use polyhodge::toricdef::{
    conifold_codim3, gorenstein_cone, smooth_in_codim2, sweep, t2_local_contribution_conifold_check, t_graded,
    vr_complex_exactness,
};
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    for n in [2, 3] {
        let c = gorenstein_cone(&zoo::unit_cube(n))?;
        println!(
            "cone over the unit {n}-cube: smooth in codim 2 {}, conifold in codim 3 {}",
            smooth_in_codim2(&c),
            conifold_codim3(&c)
        );
        println!("  T^1(-R*) = {}, T^2(-R*) = {}", t_graded(&c, 1, &c.rstar)?, t_graded(&c, 2, &c.rstar)?);
        let nonzero: Vec<_> = sweep(&c, -1, 1)?.into_iter().filter(|e| e.t1 > 0 || e.t2.unwrap_or(0) > 0).collect();
        for e in &nonzero {
            println!("  degree {:?}: t1 {} t2 {:?}", e.degree, e.t1, e.t2);
        }
        let mut big = c.rstar.clone();
        big[0] = 1;
        assert!(vr_complex_exactness(&c, &big)?);
        assert!(t2_local_contribution_conifold_check(&c, &big)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
