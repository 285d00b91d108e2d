//! Convex hull and face lattice of a point set, with exact rational coordinates.

use polyhodge::exactla::{format_rational, rat, ratio};
use polyhodge::polytope::Polytope;
use polyhodge::Result;

pub fn run_example() -> Result<()> {
    // a square with an interior point and a redundant edge midpoint
    let pts = vec![
        vec![rat(0), rat(0)],
        vec![rat(2), rat(0)],
        vec![rat(2), rat(2)],
        vec![rat(0), rat(2)],
        vec![rat(1), rat(0)],
        vec![ratio(1, 3), ratio(5, 4)],
    ];
    let sq = Polytope::from_vertices(&pts)?;
    assert_eq!(sq.num_vertices(), 4);
    println!("f-vector {:?}", sq.f_vector().0);
    for (i, h) in sq.inequalities().iter().enumerate() {
        let normal: Vec<String> = h.normal.iter().map(format_rational).collect();
        println!("facet {i}: <{}> x + {} >= 0", normal.join(", "), format_rational(&h.offset));
    }

    let cube = polyhodge::zoo::cube(3);
    for d in -1..=3 {
        println!("cube: {} faces of dimension {d}", cube.faces_of_dim(d).count());
    }
    assert_eq!(cube.f_vector().euler_sum(), 0);

    let oct = cube.polar_dual();
    println!("polar dual f-vector {:?}", oct.f_vector().0);
    assert!(oct.polar_dual().combinatorially_equal(&cube));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
