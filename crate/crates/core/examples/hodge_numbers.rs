//! Hodge numbers of the toric variety of a normal fan, and the cohomology of
//! arbitrary systems of vector spaces on a fan.

use polyhodge::complexes::{assemble, cohomology_dims, cone_fan, hodge_number, normal_fan, SystemSpec};
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    let p = zoo::cuboctahedron();
    let fan = normal_fan(&p);
    println!("normal fan cones by dimension {:?}", fan.counts());
    for q in 0..=3 {
        let row: Vec<usize> = (0..=3).map(|k| hodge_number(&fan, k, q)).collect::<Result<_>>()?;
        println!("q = {q}: {row:?}");
    }

    let cf = cone_fan(&p);
    for spec in [SystemSpec::Span, SystemSpec::QuotientBySpan, SystemSpec::Perp] {
        let c = assemble(&cf, &spec)?;
        assert!(c.square_defect().is_none());
        println!("{:<10} chain dims {:?} cohomology {:?}", spec.label(), c.dims, cohomology_dims(&c)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
