//! Property tests for the exact arithmetic layer: field axioms for the
//! scalars, text round trips, and substitution checks for the linear solvers.

mod common;

use liebex::exactnum::{
    checked_div, format_scalar, int, nullspace, parse_scalar, rational, solve_affine, Matrix,
    Rational, Scalar,
};
use proptest::prelude::*;
use rand::Rng;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-24i64..=24, 1i64..=12).prop_map(|(p, q)| rational(p, q))
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (small_rational(), small_rational()).prop_map(|(re, im)| Scalar::new(re, im))
}

proptest! {
    #[test]
    fn addition_is_a_commutative_group(
        a in small_scalar(), b in small_scalar(), c in small_scalar()
    ) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a + &int(0), a.clone());
        prop_assert_eq!(&a + &(-&a), int(0));
    }

    #[test]
    fn multiplication_is_commutative_and_associative(
        a in small_scalar(), b in small_scalar(), c in small_scalar()
    ) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &int(1), a.clone());
    }

    #[test]
    fn multiplication_distributes_over_addition(
        a in small_scalar(), b in small_scalar(), c in small_scalar()
    ) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn nonzero_scalars_invert(a in small_scalar(), b in small_scalar()) {
        prop_assume!(b != int(0));
        let q = checked_div(&a, &b).unwrap();
        prop_assert_eq!(&q * &b, a);
    }

    #[test]
    fn scalar_text_round_trips(a in small_scalar()) {
        let text = format_scalar(&a);
        prop_assert_eq!(parse_scalar(&text).unwrap(), a);
    }
}

#[test]
fn division_by_zero_is_an_error() {
    assert!(checked_div(&int(3), &int(0)).is_err());
}

#[test]
fn scalar_text_is_canonical() {
    for (raw, canonical) in [
        ("3/6", "1/2"),
        ("-4/2", "-2"),
        ("0+0*i", "0"),
        ("i", "1*i"),
        ("-i", "-1*i"),
        ("2i", "2*i"),
        ("1/3 - 2/5*i", "1/3-2/5*i"),
        ("0+2*i", "2*i"),
    ] {
        assert_eq!(format_scalar(&parse_scalar(raw).unwrap()), canonical, "{raw}");
    }
    assert!(parse_scalar("").is_err());
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("x").is_err());
    assert!(parse_scalar("1+2").is_err());
}

fn random_matrix(rng: &mut rand::rngs::StdRng, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            m.set(i, j, common::sparse_scalar(rng, 0.6));
        }
    }
    m
}

#[test]
fn affine_solutions_substitute_back_exactly() {
    let mut rng = common::rng(0x5eed_0001);
    let mut consistent = 0usize;
    let mut inconsistent = 0usize;
    for _ in 0..200 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let a = random_matrix(&mut rng, rows, cols);
        // Half the systems are built from a known solution, half are arbitrary.
        let b: Vec<Scalar> = if rng.gen_bool(0.5) {
            let x0: Vec<Scalar> = (0..cols).map(|_| common::sparse_scalar(&mut rng, 0.6)).collect();
            a.mul_vec(&x0).unwrap()
        } else {
            (0..rows).map(|_| common::sparse_scalar(&mut rng, 0.6)).collect()
        };
        let sol = solve_affine(&a, &b).unwrap();
        match &sol.particular {
            Some(p) => {
                consistent += 1;
                assert_eq!(a.mul_vec(p).unwrap(), b, "particular solution must satisfy the system");
                for v in &sol.basis {
                    assert!(
                        a.mul_vec(v).unwrap().iter().all(|c| *c == int(0)),
                        "homogeneous basis vectors must lie in the kernel"
                    );
                }
                // A random affine combination is again a solution and is
                // recognized as a member.
                let coeffs: Vec<Scalar> =
                    (0..sol.basis.len()).map(|_| common::sparse_scalar(&mut rng, 0.7)).collect();
                let x = sol.element(&coeffs).unwrap();
                assert_eq!(a.mul_vec(&x).unwrap(), b);
                assert!(sol.contains(&x).unwrap());
            }
            None => {
                inconsistent += 1;
                // Genuinely inconsistent: the augmented matrix has higher rank.
                let mut aug = Matrix::zeros(rows, cols + 1);
                for (i, rhs) in b.iter().enumerate() {
                    for j in 0..cols {
                        aug.set(i, j, a.get(i, j).clone());
                    }
                    aug.set(i, cols, rhs.clone());
                }
                assert!(aug.rank() > a.rank(), "declared inconsistent but solvable");
            }
        }
    }
    assert!(consistent >= 50, "want a healthy mix, got {consistent} consistent");
    assert!(inconsistent >= 20, "want a healthy mix, got {inconsistent} inconsistent");
}

#[test]
fn nullspace_dimension_matches_the_rank_theorem() {
    let mut rng = common::rng(0x5eed_0002);
    for _ in 0..120 {
        let rows = rng.gen_range(1..=7);
        let cols = rng.gen_range(1..=7);
        let a = random_matrix(&mut rng, rows, cols);
        let ker = nullspace(&a).unwrap();
        assert_eq!(ker.dim(), Some(cols - a.rank()));
        for v in &ker.basis {
            assert!(a.mul_vec(v).unwrap().iter().all(|c| *c == int(0)));
        }
    }
}

#[test]
fn reduction_is_idempotent_and_reports_pivots() {
    let mut rng = common::rng(0x5eed_0003);
    for _ in 0..80 {
        let rows = rng.gen_range(1..=6);
        let cols = rng.gen_range(1..=6);
        let a = random_matrix(&mut rng, rows, cols);
        let (r, pivots) = a.rref();
        let (r2, pivots2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(pivots, pivots2);
        assert_eq!(pivots.len(), a.rank());
        // Each pivot column holds a standard unit vector.
        for (i, &j) in pivots.iter().enumerate() {
            for k in 0..rows {
                let expect = if k == i { int(1) } else { int(0) };
                assert_eq!(*r.get(k, j), expect);
            }
        }
    }
}

#[test]
fn inverses_multiply_to_the_identity() {
    let mut rng = common::rng(0x5eed_0004);
    let mut invertible = 0usize;
    for _ in 0..60 {
        let n = rng.gen_range(1..=5);
        let a = random_matrix(&mut rng, n, n);
        match a.inverse() {
            Some(inv) => {
                invertible += 1;
                assert_eq!(a.mul(&inv).unwrap(), Matrix::identity(n));
                assert_eq!(inv.mul(&a).unwrap(), Matrix::identity(n));
            }
            None => assert!(a.rank() < n),
        }
    }
    assert!(invertible >= 10, "want some invertible samples, got {invertible}");
}
