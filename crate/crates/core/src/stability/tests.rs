use super::*;
use crate::part;
use crate::symfunc::rat;

fn s(p: Partition) -> SymmetricFunction {
    SymmetricFunction::schur(p)
}

fn q(a: i64, b: i64) -> Rational {
    Rational::new(BigInt::from(a), BigInt::from(b))
}

#[test]
fn stable_step_examples() {
    assert!(is_stable_step(&s(part![3, 1]), &s(part![2, 1])).unwrap());
    assert!(!is_stable_step(&s(part![2, 2]), &s(part![2, 1])).unwrap());
    let zero = SymmetricFunction::zero(Basis::Schur);
    assert!(is_stable_step(&zero, &zero).unwrap());
    assert!(!is_stable_step(&s(part![1]), &zero).unwrap());
    assert_eq!(
        is_stable_step(&s(part![3, 1]), &s(part![2])).unwrap_err(),
        Error::DegreeMismatch { expected: 3, found: 4 }
    );
}

#[test]
fn bounds() {
    assert_eq!(theorem_bounds(2, 3, 3).unwrap(), vec![rat(6)]);
    assert_eq!(theorem_bounds(2, 8, 13).unwrap(), vec![rat(26), q(104, 5)]);
    assert_eq!(theorem_bounds(3, 4, 0).unwrap(), vec![rat(0)]);
    assert!(theorem_bounds(2, 2, 1).is_err());

    let two = LambdaSet::k_equal(2).unwrap();
    for d in 2..=4 {
        for i in 0..=5 {
            assert_eq!(general_bound(&two, i, d).unwrap(), q(4 * i as i64, d as i64 - 1));
        }
    }
    assert_eq!(general_bound(&LambdaSet::k_equal(3).unwrap(), 5, 3).unwrap(), rat(8));
    let pairs = LambdaSet::new([part![2, 2]]).unwrap();
    assert_eq!(general_bound(&pairs, 1, 2).unwrap(), rat(0));
}

#[test]
fn admissible_parameters_solve_the_degree_equation() {
    for d in 2..=3 {
        for k in d + 1..=5 {
            for n in 1..=10 {
                for i in 0..=12 {
                    for p in admissible_params(n, i, d, k) {
                        assert_eq!(p.i(), i as i64);
                        assert!(p.r <= p.t && p.t * k <= n);
                    }
                }
            }
        }
    }
}

#[test]
fn psi_vanishing_cases() {
    // r > t
    assert!(psi(&PsiParams::new(8, 0, 3, 2, 2, 3).unwrap()).is_zero());
    // tk > n
    assert!(psi(&PsiParams::new(5, 0, 1, 2, 2, 3).unwrap()).is_zero());
    assert!(PsiParams::new(5, 0, 1, 1, 2, 2).is_err());
}

#[test]
fn psi_smallest_three_equal_summand() {
    let p = PsiParams::new(3, 0, 1, 1, 2, 3).unwrap();
    assert_eq!(p.i(), 3);
    let f = psi(&p);
    assert!(!f.is_zero());
    assert!(f.is_schur_positive_integral());
    assert_eq!(f.homogeneous_degree().unwrap(), Some(3));
}

#[test]
fn first_three_equal_degree_is_zero() {
    for n in 1..=9 {
        assert!(kequal_char(n, 1, 2, 3).unwrap().is_zero(), "n = {n}");
    }
}

#[test]
fn below_k_points_nothing_survives() {
    for k in 3..=5 {
        for n in 1..k {
            for i in 0..=8 {
                assert!(kequal_char(n, i, 2, k).unwrap().is_zero());
            }
        }
    }
}

#[test]
fn formula_matches_lattice_for_three_equal() {
    let lambda = LambdaSet::k_equal(3).unwrap();
    for n in 3..=5 {
        for i in 0..=2 * n {
            let formula = kequal_char(n, i, 2, 3).unwrap();
            let lattice = lambda_char_smalln(n, 2, &lambda, i, 6).unwrap();
            assert_eq!(formula, lattice, "n={n} i={i}");
        }
    }
}

#[test]
fn lambda_char_checks_size() {
    let lambda = LambdaSet::k_equal(3).unwrap();
    assert_eq!(
        lambda_char_smalln(2, 2, &lambda, 1, 6).unwrap_err(),
        Error::BelowBaseSize { n: 2, n0: 3 }
    );
    assert_eq!(
        lambda_char_smalln(9, 2, &lambda, 1, 6).unwrap_err(),
        Error::OracleLimit { n: 9, limit: 6 }
    );
}

#[test]
fn pure_braid_degree_zero_and_one() {
    let two = LambdaSet::k_equal(2).unwrap();
    for n in 2..=5 {
        assert!(lambda_char_smalln(n, 2, &two, 0, 6).unwrap().is_zero());
    }
    let h1 = lambda_char_smalln(3, 2, &two, 1, 6).unwrap();
    assert_eq!(h1, s(part![3]) + s(part![2, 1]));
}

#[test]
fn smallest_table_entry() {
    let report = sharp_bound_certified(2, 3, 3).unwrap();
    assert_eq!(report.sharp_bound, SharpBound::Certified(6));
    assert_eq!(report.horizon, 6);
    assert!(!report.stable_steps[&6]);
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["sharp_bound"], 6);
    assert_eq!(json["k"], 3);
}

#[test]
fn short_horizon_is_not_certified() {
    let report = sharp_bound_with_horizon(2, 3, 3, Some(5)).unwrap();
    assert!(!report.certified);
    assert!(matches!(report.sharp_bound, SharpBound::Candidate(_)));
}

#[test]
fn vacuous_sequences() {
    let report = sharp_bound_certified(2, 4, 4).unwrap();
    assert_eq!(report.sharp_bound, SharpBound::Vacuous);
    assert_eq!(serde_json::to_value(&report).unwrap()["sharp_bound"], "vacuous");
}

fn small_lambdas() -> Vec<LambdaSet> {
    ["[2]", "[3]", "[2,2]", "[2,1]", "[3];[2,2]"].iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn decomposition_through_singleton_free_lattices() {
    for lambda in small_lambdas() {
        for d in 2..=3 {
            for n in lambda.n0()..=5 {
                for i in 0..=d * n {
                    let direct = lambda_char_smalln(n, d, &lambda, i, 6).unwrap();
                    let assembled = lambda_char_decomposed(n, d, &lambda, i, 6).unwrap();
                    assert_eq!(direct, assembled, "Λ={lambda} d={d} n={n} i={i}");
                }
            }
        }
    }
}

#[test]
fn nonzero_pieces_obey_the_rank_and_size_window() {
    for lambda in small_lambdas() {
        for d in 2..=3 {
            for i in 0..=12 {
                for (mu, _) in singleton_free_parts(d, &lambda, i, 6, 6).unwrap() {
                    let size = rat(mu.size() as i64);
                    let rank = rat(mu.rank() as i64);
                    let (i1, d1) = (rat(i as i64 + 1), rat(d as i64));
                    let top = rat(i as i64 + 1 - lambda.rank() as i64);
                    assert!(rat(1) + &i1 / &d1 <= size, "Λ={lambda} d={d} i={i} μ={mu}");
                    assert!(size <= rat(2) * &top / (&d1 - rat(1)), "Λ={lambda} d={d} i={i} μ={mu}");
                    assert!(&i1 / &d1 <= rank && rank <= &top / (&d1 - rat(1)));
                }
            }
        }
    }
}

#[test]
fn empty_rank_window_forces_zero() {
    // Λ = {(3)} at n = 3, d = 2: rank(μ) = 2 needs (i+1)/2 <= 2 <= i - 1
    let lambda = LambdaSet::k_equal(3).unwrap();
    for i in [0, 1, 2, 4, 5] {
        assert!(lambda_char_smalln(3, 2, &lambda, i, 6).unwrap().is_zero(), "i = {i}");
    }
    assert!(!lambda_char_smalln(3, 2, &lambda, 3, 6).unwrap().is_zero());
}
