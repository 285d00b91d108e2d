//! Bottom rows of the `E_2` page for the covering of the 3-skeleton by 3-faces.

use polyhodge::nerve::{build_nerve, d2_rank_bound, e2_page, vertex_figure_sum};
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    for name in ["cyclic(4,8)", "dp_cuboctahedron"] {
        let p = zoo::get(name)?;
        let nv = build_nerve(&p, 3)?;
        let page = e2_page(&nv)?;
        println!("{name}: {} cover faces", nv.cover_faces.len());
        for (k, e) in page.iter().enumerate().filter(|(_, e)| e[0] + e[1] > 0) {
            println!("  E2^({k},0) = {}  E2^({k},1) = {}", e[0], e[1]);
        }
        assert_eq!(page[3][0], vertex_figure_sum(&p, 3));
        println!("  {:?}", d2_rank_bound(&p)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
