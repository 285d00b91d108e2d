//! Sparse exact rank and kernel, and Smith normal form over the integers.

use polyhodge::exactla::{format_rational, smith_diagonal, IntMatrix, RatMatrix};
use polyhodge::Result;

pub fn run_example() -> Result<()> {
    let m = RatMatrix::from_i64(&[vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![0, 1, 1, 0]]);
    println!("rank {}", m.rank());
    for v in m.kernel_basis() {
        let v: Vec<String> = v.iter().map(format_rational).collect();
        println!("kernel vector [{}]", v.join(", "));
    }
    assert_eq!(m.rank() + m.kernel_basis().len(), m.ncols());
    assert_eq!(m.rank(), m.transpose().rank());

    let a = IntMatrix::from_i64(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let d = smith_diagonal(&a);
    println!("elementary divisors {:?}", d.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
