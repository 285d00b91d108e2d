use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use polyhodge::complexes::{assemble, cone_fan, normal_fan, SystemSpec};
use polyhodge::d2sys::{clean, clean_in_random_order};
use polyhodge::dinv::{d_profile, d_profile_dual_route};
use polyhodge::exactla::{rat, rat_vec, ratio, smith_diagonal, IntMatrix, RatMatrix, RatVec};
use polyhodge::io::{from_json_str, to_json_string};
use polyhodge::polytope::{double_pyramid, free_sum, pyramid, Polytope};
use polyhodge::zoo;
use proptest::prelude::*;
use rand::SeedableRng;

fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
}

fn point_set(d: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-4i64..=4, d), d + 1..=d + 6)
}

fn full_dim(points: &[Vec<i64>], d: usize) -> Option<Polytope> {
    Polytope::from_i64(points).ok().filter(|p| p.dim() == d as isize)
}

fn constructed() -> impl Strategy<Value = Polytope> {
    (0usize..6, 3usize..=6, 3usize..=5).prop_map(|(kind, m, k)| match kind {
        0 => pyramid(&pyramid(&zoo::mgon(m))),
        1 => free_sum(&zoo::mgon(m), &zoo::mgon(k)),
        2 => double_pyramid(&zoo::mgon(m)),
        3 => double_pyramid(&pyramid(&zoo::mgon(m))),
        4 => zoo::cyclic(4, m + 2),
        _ => double_pyramid(&double_pyramid(&zoo::mgon(m))),
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_is_transpose_invariant(rows in int_matrix(6, 7)) {
        let m = RatMatrix::from_i64(&rows);
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_plus_nullity(rows in int_matrix(6, 7)) {
        let m = RatMatrix::from_i64(&rows);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.ncols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn smith_divisibility(rows in int_matrix(5, 5)) {
        let d = smith_diagonal(&IntMatrix::from_i64(&rows));
        let nonzero: Vec<&BigInt> = d.iter().take_while(|x| !x.is_zero()).collect();
        prop_assert!(d[nonzero.len()..].iter().all(Zero::is_zero));
        prop_assert_eq!(nonzero.len(), RatMatrix::from_i64(&rows).rank());
        for w in nonzero.windows(2) {
            prop_assert!(w[1].is_multiple_of(w[0]));
        }
    }

    #[test]
    fn euler_relation(points in point_set(3)) {
        if let Some(p) = full_dim(&points, 3) {
            prop_assert_eq!(p.f_vector().euler_sum(), 0);
        }
    }

    #[test]
    fn polar_is_an_involution(points in point_set(3)) {
        if let Some(p) = full_dim(&points, 3) {
            let dual = p.polar_dual();
            prop_assert_eq!(dual.f_vector().proper().iter().rev().copied().collect::<Vec<_>>(), p.f_vector().proper().to_vec());
            prop_assert!(dual.polar_dual().combinatorially_equal(&p));
        }
    }

    #[test]
    fn direct_and_dual_routes_agree(points in point_set(3)) {
        if let Some(p) = full_dim(&points, 3) {
            prop_assert_eq!(d_profile(&p).unwrap().dims, d_profile_dual_route(&p).unwrap().dims);
        }
    }

    #[test]
    fn affine_invariance(points in point_set(3), a in prop::collection::vec(-3i64..=3, 9), den in 1i64..=5, t in prop::collection::vec(-5i64..=5, 3)) {
        let mat: Vec<RatVec> = a.chunks(3).map(|r| r.iter().map(|&x| ratio(x, den)).collect()).collect();
        prop_assume!(!polyhodge::exactla::determinant(&mat).is_zero());
        if let Some(p) = full_dim(&points, 3) {
            let q = p.affine_image(&mat, &rat_vec(&t)).unwrap();
            prop_assert_eq!(d_profile(&p).unwrap().dims, d_profile(&q).unwrap().dims);
        }
    }

    #[test]
    fn json_round_trip(points in point_set(3)) {
        if let Some(p) = full_dim(&points, 3) {
            let q = from_json_str(&to_json_string(&p)).unwrap();
            prop_assert_eq!(p.vertices(), q.vertices());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn complexes_square_to_zero(points in point_set(3), q in 0usize..=4) {
        if let Some(p) = full_dim(&points, 3) {
            for fan in [cone_fan(&p), normal_fan(&p)] {
                let q = q.min(fan.ambient_dim());
                for spec in [SystemSpec::Span, SystemSpec::QuotientBySpan, SystemSpec::Perp, SystemSpec::ExteriorQuotient(q)] {
                    prop_assert!(assemble(&fan, &spec).unwrap().square_defect().is_none());
                }
            }
            prop_assert!(cone_fan(&p).signs_compose_to_zero());
        }
    }

    #[test]
    fn cleaning_is_confluent(p in constructed(), seed in any::<u64>()) {
        let base = clean(&p);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..5 {
            let s = clean_in_random_order(&p, &mut rng);
            prop_assert_eq!(&s.clean_vertices, &base.clean_vertices);
            prop_assert_eq!(&s.clean_2faces, &base.clean_2faces);
        }
        let triangles = p.faces_of_dim(2).filter(|&e| p.face(e).len() == 3);
        for e in triangles {
            prop_assert!(base.clean_2faces.contains(&e));
        }
    }

    #[test]
    fn four_dim_routes_agree(points in point_set(4)) {
        if let Some(p) = full_dim(&points, 4) {
            prop_assert_eq!(d_profile(&p).unwrap().dims, d_profile_dual_route(&p).unwrap().dims);
            prop_assert_eq!(p.f_vector().euler_sum(), 0);
        }
    }
}

#[test]
fn scaled_polytope_keeps_its_profile() {
    let p = zoo::cuboctahedron();
    let mat: Vec<RatVec> = (0..3).map(|i| (0..3).map(|j| if i == j { rat(3) } else { rat(0) }).collect()).collect();
    let q = p.affine_image(&mat, &rat_vec(&[1, 2, 3])).unwrap();
    assert_eq!(d_profile(&q).unwrap().dims, vec![0, 1, 3, 0]);
}
