use colmez_g::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use padic_core::{PadicScalar, EXACT};
use series_core::{cyclotomic_phi, frobenius_apply, t_over_t, CharacterParams, ExactPoly, TruncatedSeries};

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn spec(p: u64, r: u32, n: u32, depth: u32) -> GTermSpec {
    GTermSpec::new(p, r, n, depth).unwrap()
}

#[test]
fn single_factor_term() {
    let phi = cyclotomic_phi(3, 1).scale(&q(1, 3));
    let want = ExactPoly::one().sub(&phi.pow(2)).pow(2).scale(&q(1, 3));
    assert_eq!(g_term(&spec(3, 1, 1, 1)).unwrap(), want);
}

#[test]
fn terms_vanish_at_zero() {
    for (p, r, n, depth) in [(3, 1, 1, 1), (3, 2, 2, 3), (5, 1, 1, 2)] {
        assert_eq!(g_term(&spec(p, r, n, depth)).unwrap().coeff(0), q(0, 1));
    }
}

#[test]
fn later_terms_divisible_by_first_level() {
    let g = g_term(&spec(3, 1, 2, 3)).unwrap();
    let m = cyclotomic_phi(3, 1).pow(2);
    assert!(g.rem(&m).is_zero());
}

#[test]
fn partial_sum_of_one_term() {
    assert_eq!(g_partial(3, 1, 1, 1).unwrap(), g_term(&spec(3, 1, 1, 1)).unwrap());
}

#[test]
fn partial_sum_congruences() {
    let g = g_partial(3, 1, 2, 3).unwrap();
    let c1 = check_congruence(&g, 3, 1, 1);
    assert!(c1.holds && c1.remainder.is_zero());
    let c2 = check_congruence(&g, 3, 1, 2);
    assert!(c2.holds && c2.remainder.is_zero());
}

#[test]
fn listed_congruence_cases() {
    assert!(check_partial_congruence(3, 1, 1, 2, 3).unwrap().holds);
    assert!(check_partial_congruence(5, 2, 1, 1, 2).unwrap().holds);
    let c = check_partial_congruence(3, 1, 3, 2, 3).unwrap();
    assert!(!c.holds);
    assert!(!c.remainder.is_zero());
}

#[test]
fn congruences_hold_exactly_across_grid() {
    for p in [3u64, 5] {
        for r in 1..=3u32 {
            for n_max in 1..=3u32 {
                for n in 1..=n_max {
                    let c = check_partial_congruence(p, r, n, n_max, n_max + 2).unwrap();
                    assert!(c.holds, "p={p} r={r} n={n} n_max={n_max}: {}", c.remainder);
                }
            }
        }
    }
}

#[test]
fn frobenius_shifts_terms() {
    for (p, r, n, depth) in [(3, 1, 1, 1), (3, 1, 1, 2), (3, 2, 1, 2), (5, 1, 1, 1), (3, 1, 2, 3)] {
        let s = spec(p, r, n, depth);
        let lhs = frobenius_poly(&g_term(&s).unwrap(), p).scale(&q(1, p as i64));
        assert_eq!(lhs, g_term(&s.shifted()).unwrap(), "p={p} r={r} n={n} depth={depth}");
    }
}

#[test]
fn frobenius_shift_through_series() {
    let s = spec(3, 1, 1, 2);
    let g = TruncatedSeries::from_poly(3, &g_term(&s).unwrap(), 20);
    let lhs = frobenius_apply(&g).unwrap().scale(&PadicScalar::from_rational(3, &q(1, 3), 20));
    let rhs = TruncatedSeries::from_poly(3, &g_term(&s.shifted()).unwrap(), 20);
    assert_eq!(lhs.end(), rhs.end());
    for d in 0..rhs.end() {
        let diff = &lhs.coeff(d).unwrap() - &rhs.coeff(d).unwrap();
        assert!(diff.is_zero(), "degree {d}");
        assert!(diff.abs_precision() >= 10, "degree {d}");
    }
}

#[test]
fn budget_cap_refuses_large_terms() {
    let s = spec(5, 3, 1, 5);
    match g_term_with_cap(&s, 1000) {
        Err(ColmezError::BudgetExceeded { needed, cap }) => {
            assert_eq!(cap, 1000);
            assert_eq!(needed, s.degree_bound());
        }
        other => panic!("expected a budget error, got {other:?}"),
    }
    assert!(matches!(g_partial_with_cap(5, 3, 2, 5, 1000), Err(ColmezError::BudgetExceeded { .. })));
}

#[test]
fn invalid_specs_rejected() {
    assert!(GTermSpec::new(3, 1, 2, 1).is_err());
    assert!(GTermSpec::new(4, 1, 1, 1).is_err());
    assert!(GTermSpec::new(3, 0, 1, 1).is_err());
}

fn expect_c1_phi(p: u64, r: u32, depth: u32, prec: u32, min_digits: i64) {
    let rep = residue_c1_phi(p, r, depth, prec).unwrap();
    let want = q(1, p as i64) - q(1, 1);
    assert_eq!(rep.exact, want);
    assert!(rep.certified >= min_digits, "certified {}", rep.certified);
    let diff = &rep.value - &PadicScalar::from_rational(p, &want, prec + 4);
    assert!(diff.is_zero() && diff.abs_precision() >= rep.certified);
}

#[test]
fn c1_phi_residue_p3() {
    expect_c1_phi(3, 1, 4, 12, 6);
}

#[test]
fn c1_phi_residue_p5() {
    expect_c1_phi(5, 2, 3, 10, 6);
}

#[test]
fn c1_phi_certificate_grows_with_depth() {
    let mut last = i64::MIN;
    for depth in 1..=5 {
        let c = residue_c1_phi(3, 1, depth, 40).unwrap().certified;
        assert!(c > last);
        last = c;
    }
}

#[test]
fn residue_over_t_reads_constant_term() {
    let g = TruncatedSeries::from_poly(5, &ExactPoly::from_ints(&[1, 1]), 10);
    let r = residue_over_t(&g, 20, 10).unwrap();
    let diff = &r - &PadicScalar::from_int(5, 1, 10);
    assert!(diff.is_zero() && diff.abs_precision() >= 8);
}

#[test]
fn annulus_residue_of_one_counts_roots() {
    assert_eq!(annulus_residue(&ExactPoly::one(), 3, 2), q(9, 1));
    // T vanishes at ζ = 1 and sums to -p elsewhere
    assert_eq!(annulus_residue(&ExactPoly::x(), 5, 1), q(-5, 1));
}

#[test]
fn c1_gamma_first_term() {
    let params = CharacterParams::standard(3);
    let res = residue_c1_gamma(3, 1, 1, 3, 200, 40, &params).unwrap();
    assert!(res.is_zero(), "{}", res.value);
    assert!(res.certified >= 6, "certified {}", res.certified);
}

#[test]
fn c1_gamma_second_term() {
    let params = CharacterParams::standard(3);
    let res = residue_c1_gamma(3, 2, 2, 4, 200, 40, &params).unwrap();
    assert!(res.is_zero(), "{}", res.value);
    assert!(res.certified >= 6, "certified {}", res.certified);
}

#[test]
fn gamma_fixes_constants() {
    for prec in [5u32, 12, 30] {
        for n in 1..=3 {
            let c = PadicScalar::from_rational(3, &q(1, 3i64.pow(n)), prec);
            let f = TruncatedSeries::monomial(c, 0);
            let res = gamma_difference_residue(&f, &CharacterParams::standard(3), 10, prec, 1).unwrap();
            assert!(res.is_zero());
            assert!(res.certified >= prec as i64 - n as i64, "prec {prec} n {n}: {}", res.certified);
        }
    }
}

/// `c (1+T) / (T t^r)`, so that `res(· t^r dt) = c`.
fn with_residue(p: u64, r: u32, c: &PadicScalar, m: usize, prec: u32) -> TruncatedSeries {
    let u = t_over_t(p, m, prec).invert_unit().unwrap().pow(r);
    let one_plus_t = TruncatedSeries::new(p, 0, vec![PadicScalar::one(p, prec), PadicScalar::one(p, prec)], EXACT, EXACT);
    u.mul(&one_plus_t).shift_degree(-(r as i64) - 1).scale(c)
}

#[test]
fn l_invariant_zero_numerator() {
    let p = 5;
    let params = CharacterParams::standard(p);
    let a = TruncatedSeries::from_poly(p, &ExactPoly::from_ints(&[2, 1]), 12);
    let b = with_residue(p, 1, &PadicScalar::from_int(p, 3, 12), 10, 12);
    match benois_l_invariant(&Cocycle::new(a, b, 1).unwrap(), &params).unwrap() {
        LInvariant::Finite(x) => assert!(x.is_zero()),
        LInvariant::Infinity => panic!("expected zero"),
    }
}

#[test]
fn l_invariant_of_c1_shape_is_infinite() {
    let p = 3;
    let params = CharacterParams::standard(p);
    let lam = PadicScalar::from_rational(p, &(q(1, 3) - q(1, 1)), 12);
    let a = with_residue(p, 2, &lam, 10, 12);
    let c = Cocycle::new(a, TruncatedSeries::zero(p), 2).unwrap();
    let (l, m) = c.residues().unwrap();
    assert!((&l - &lam).is_zero());
    assert!(m.is_zero());
    assert_eq!(benois_l_invariant(&c, &params).unwrap(), LInvariant::Infinity);
}

#[test]
fn l_invariant_synthetic_one() {
    for p in [3u64, 5, 7] {
        let params = CharacterParams::standard(p);
        let prec = 14;
        let a = with_residue(p, 1, &PadicScalar::one(p, prec), 12, prec);
        let b = with_residue(p, 1, &(-&params.log_chi(prec)), 12, prec);
        let c = Cocycle::new(a, b, 1).unwrap();
        let LInvariant::Finite(x) = benois_l_invariant(&c, &params).unwrap() else { panic!("finite expected") };
        let diff = &x - &PadicScalar::one(p, prec);
        assert!(diff.is_zero() && diff.abs_precision() >= 8, "p={p}: {x}");

        // scaling the class leaves the ratio alone
        for s in [PadicScalar::from_int(p, 7, prec), PadicScalar::from_int(p, p as i64 * 2, prec)] {
            let LInvariant::Finite(y) = benois_l_invariant(&c.scale(&s), &params).unwrap() else { panic!() };
            let d = &y - &x;
            assert!(d.is_zero() && d.abs_precision() >= 6, "p={p}: {y} vs {x}");
        }
    }
}

#[test]
fn l_invariant_indeterminate() {
    let p = 3;
    let a = TruncatedSeries::from_poly(p, &ExactPoly::from_ints(&[1, 2]), 10);
    let c = Cocycle::new(a.clone(), a, 1).unwrap();
    assert_eq!(benois_l_invariant(&c, &CharacterParams::standard(p)), Err(ColmezError::IndeterminateClass));
}

#[test]
fn trace_functional_matches_exact_trace() {
    for (p, r, n, depth) in [(3, 1, 1, 3), (5, 1, 1, 2), (3, 2, 2, 3)] {
        let g = g_term(&spec(p, r, n, depth)).unwrap();
        let exact = annulus_residue(&g, p, 1);
        let approx = trace_functional(&TruncatedSeries::from_poly(p, &g, 30), 1).unwrap();
        let diff = &approx - &PadicScalar::from_rational(p, &exact, 40);
        assert!(diff.is_zero() && diff.abs_precision() >= 10, "p={p} r={r} n={n}: {approx}");
    }
}
