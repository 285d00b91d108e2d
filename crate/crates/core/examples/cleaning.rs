//! The cleaning process on vertices and 2-faces, and the vanishing certificate it feeds.

use polyhodge::d2sys::{certify_vanishing, clean, Verdict};
use polyhodge::dinv::d_profile;
use polyhodge::polytope::{double_pyramid, pyramid};
use polyhodge::{zoo, Result};

pub fn run_example() -> Result<()> {
    let candidates = vec![
        ("simplex(4)", zoo::simplex(4)),
        ("pyramid over a square pyramid", pyramid(&pyramid(&zoo::mgon(4)))),
        ("pyramid over octahedron", pyramid(&zoo::crosspoly(3))),
        ("double pyramid over cuboctahedron", double_pyramid(&zoo::cuboctahedron())),
    ];
    for (name, p) in candidates {
        let s = clean(&p);
        let verdict = certify_vanishing(&p)?;
        println!(
            "{name}: {}/{} vertices and {}/{} 2-faces clean, {verdict:?}",
            s.clean_vertices.len(),
            p.num_vertices(),
            s.clean_2faces.len(),
            p.faces_of_dim(2).count()
        );
        if verdict == Verdict::VanishesByTheorem {
            assert_eq!(d_profile(&p)?.get(2), 0);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
