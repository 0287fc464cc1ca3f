use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use padic_core::{QuadRational, ResidueElement, Valuation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use reduction_classifier::*;
use trianguline_limits::LValue;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn lq(n: i64, d: i64) -> LValue {
    LValue::rational(n, d)
}

fn half(n: i64) -> Valuation {
    Valuation::Finite(Rational64::new(n, 2))
}

/// `H_- + H_+ + π^e`, so that `ν = e/2`.
fn at_nu(p: u64, k: u32, e: i64) -> LValue {
    LValue::Finite(QuadRational::rational(harmonic_shift(k)).add(&QuadRational::pi_power(p, e)))
}

fn five_halves_plus(b: BigRational) -> LValue {
    LValue::Finite(QuadRational::new(q(5, 2), b))
}

#[test]
fn harmonic_sums() {
    assert_eq!(harmonic_sum(0), q(0, 1));
    assert_eq!(harmonic_sum(2), q(3, 2));
    assert_eq!(harmonic_sum(4), q(25, 12));
}

#[test]
fn shifts_by_weight() {
    assert_eq!(v_plus_minus(3), (0, 1));
    assert_eq!(harmonic_shift(3), q(1, 1));
    assert_eq!(v_plus_minus(5), (1, 2));
    assert_eq!(harmonic_shift(5), q(5, 2));
    assert_eq!(v_plus_minus(4), (0, 2));
    assert_eq!(harmonic_shift(4), q(3, 2));
    for k in 3..20 {
        let (lo, hi) = v_plus_minus(k);
        assert!(2 * lo < k - 2 && k - 2 < 2 * hi && hi - lo <= 2);
    }
}

#[test]
fn gp_shifts() {
    assert_eq!(gp_shift(2).unwrap(), q(1, 1));
    assert_eq!(gp_shift(4).unwrap(), q(5, 2));
    assert_eq!(gp_shift(6).unwrap(), q(10, 3));
    assert_eq!(gp_shift(5), Err(ClassifyError::OddArgument(5)));
    for k in [3u32, 5, 7, 9] {
        assert_eq!(gp_shift(k - 1).unwrap(), harmonic_shift(k));
    }
}

#[test]
fn nu_examples() {
    assert_eq!(nu_invariant(5, 4, &lq(0, 1)), Valuation::int(0));
    assert_eq!(nu_invariant(5, 4, &LValue::Infinity), Valuation::NegInf);
    assert_eq!(nu_invariant(7, 5, &five_halves_plus(q(1, 1))), half(1));
    assert_eq!(nu_invariant(7, 5, &lq(5, 2)), Valuation::PosInf);
    assert_eq!(nu_invariant(5, 5, &lq(0, 1)), Valuation::int(1));
}

#[test]
fn inertia_examples() {
    // ν > 0 at k = 4
    let s = classify_inertia(5, 4, &lq(3 + 2 * 5, 2)).unwrap();
    assert_eq!(s, ReductionShape::irreducible(5, 2 + 5).unwrap());
    assert_eq!(s, ReductionShape::Irreducible { c: 7 });
    assert_eq!(classify_inertia(7, 5, &lq(0, 1)).unwrap(), ReductionShape::irreducible(7, 3 + 7).unwrap());
    for p in [3u64, 5, 7, 11] {
        assert_eq!(classify_inertia(p, 3, &LValue::Infinity).unwrap(), ReductionShape::irreducible(p, 2).unwrap());
    }
    assert!(matches!(classify_inertia(5, 7, &lq(0, 1)), Err(ClassifyError::WeightOutOfRange { .. })));
}

#[test]
fn orbit_representative() {
    // ind(ω₂^c) = ind(ω₂^{pc})
    assert_eq!(ReductionShape::irreducible(5, 11).unwrap(), ReductionShape::irreducible(5, 7).unwrap());
    assert!(ReductionShape::irreducible(5, 12).is_err());
}

#[test]
fn full_weight_four() {
    let s = classify_full_small_weight(5, 4, &lq(0, 1)).unwrap();
    assert_eq!(s, ReductionShape::reducible_full(5, 2, 1, Lambda::Value(ResidueElement::new(5, 3))));
    assert_eq!(s.to_string(), "mu(l) omega^2 + mu(1/l) omega^1, l = 3");
    assert_eq!(classify_full_small_weight(5, 4, &lq(1, 5)).unwrap(), ReductionShape::irreducible(5, 3).unwrap());
    assert_eq!(classify_full_small_weight(7, 4, &lq(3 + 14, 2)).unwrap(), ReductionShape::irreducible(7, 2 + 7).unwrap());
    assert!(matches!(classify_full_small_weight(3, 4, &lq(0, 1)), Err(ClassifyError::WeightOutOfRange { .. })));
}

#[test]
fn full_weight_five() {
    // ν = -1/2 needs 5/2 + π/p; λ₁ = -3·π·π/7 = -3
    let l = five_halves_plus(q(1, 7));
    assert_eq!(nu_invariant(7, 5, &l), half(-1));
    let s = classify_full_small_weight(7, 5, &l).unwrap();
    assert_eq!(s, ReductionShape::reducible_full(7, 3, 1, Lambda::Value(ResidueElement::new(7, 4))));
    // 5/2 + π itself sits at ν = 1/2
    let s = classify_full_small_weight(7, 5, &five_halves_plus(q(1, 1))).unwrap();
    let ReductionShape::ReducibleFull { i: 2, j: 2, lambda: Lambda::Trace(t) } = s else { panic!("{s}") };
    assert_eq!(t.trace, ResidueElement::new(7, 2));
    assert!(t.split);
    assert_eq!(t.roots(), (ResidueElement::new(7, 1), ResidueElement::new(7, 1)));
    assert_eq!(classify_full_small_weight(7, 5, &lq(0, 1)).unwrap(), ReductionShape::irreducible(7, 3 + 7).unwrap());
    assert_eq!(classify_full_small_weight(7, 5, &lq(1, 7)).unwrap(), ReductionShape::irreducible(7, 4).unwrap());
}

#[test]
fn full_weight_three() {
    let s = classify_full_small_weight(3, 3, &lq(1, 1)).unwrap();
    let ReductionShape::ReducibleFull { i: 1, j: 1, lambda: Lambda::Trace(t) } = s else { panic!("{s}") };
    assert!(t.trace.is_zero());
    // λ = ±√-1
    let (a, b) = t.roots();
    let minus_one = ResidueElement::new(3, -1);
    assert_eq!(a.mul(&a), minus_one);
    assert_eq!(a.add(&b), ResidueElement::new(3, 0));
    assert!(!t.split);
    let t5 = trace_weight3(5, &lq(1, 1)).unwrap();
    assert!(t5.split);
    assert_eq!(classify_full_small_weight(3, 3, &LValue::Infinity).unwrap(), ReductionShape::irreducible(3, 2).unwrap());
    assert_eq!(classify_full_small_weight(5, 3, &lq(0, 1)).unwrap(), ReductionShape::irreducible(5, 2).unwrap());
}

#[test]
fn lambda_roots_satisfy_quadratic() {
    for p in [5u64, 7, 11, 13] {
        for t in 0..p {
            let tp = TracePair::new(ResidueElement::new(p, t as i64));
            let (a, b) = tp.roots();
            let one = ResidueElement::new(p, 1);
            assert_eq!(a.mul(&b), one, "p={p} t={t}");
            assert_eq!(a.add(&b), tp.trace);
            assert_eq!(tp.split, a.degree() == 1);
        }
    }
}

#[test]
fn lambda_outside_regime_rejected() {
    assert!(matches!(lambda_weight4(5, &lq(3, 2)), Err(ClassifyError::RegimeMismatch(_))));
    assert!(matches!(lambda1_weight5(7, &lq(0, 1)), Err(ClassifyError::RegimeMismatch(_))));
    assert!(matches!(trace_weight3(5, &lq(0, 1)), Err(ClassifyError::RegimeMismatch(_))));
    assert!(matches!(trace_weight5(7, &LValue::Infinity), Err(ClassifyError::RegimeMismatch(_))));
}

#[test]
fn full_restricts_to_inertia_row() {
    for p in [5u64, 7, 11] {
        for k in 3..=5u32 {
            for e in -8..=8 {
                let l = at_nu(p, k, e);
                let full = classify_full_small_weight(p, k, &l).unwrap();
                assert_eq!(full.inertia(p), classify_inertia(p, k, &l).unwrap(), "p={p} k={k} e={e}");
            }
        }
    }
}

#[test]
fn trace_locally_constant() {
    for p in [5u64, 7] {
        for (k, base) in [(3u32, at_nu(p, 3, 1)), (5, at_nu(p, 5, 3)), (5, five_halves_plus(q(3, 1)))] {
            let t0 = classify_full_small_weight(p, k, &base).unwrap();
            let LValue::Finite(b) = &base else { unreachable!() };
            for m in 2..5i64 {
                for eps in [1i64, 2, -3] {
                    let moved = LValue::Finite(b.add(&QuadRational::int(eps).mul(&QuadRational::pi_power(p, 2 * m), p)));
                    assert_eq!(classify_full_small_weight(p, k, &moved).unwrap(), t0, "p={p} k={k} m={m}");
                }
            }
        }
    }
}

fn nu_samples() -> Vec<Valuation> {
    let mut out = vec![Valuation::NegInf, Valuation::PosInf];
    out.extend((-16..=16).map(half));
    out.extend([Valuation::Finite(Rational64::new(1, 3)), Valuation::Finite(Rational64::new(-7, 4))]);
    out
}

#[test]
fn rows_partition_valuations() {
    for p in [3u64, 5, 7, 11, 13] {
        for k in 3..=(p + 1) as u32 {
            let rows = inertia_rows(p, k).unwrap();
            assert_eq!(rows.iter().filter(|r| !r.shape.is_irreducible()).count(), (k as usize - 1) / 2);
            for nu in nu_samples() {
                let hits = rows.iter().filter(|r| r.region.contains(nu)).count();
                assert_eq!(hits, 1, "p={p} k={k} nu={nu}");
                let s = classify_nu(p, k, nu).unwrap();
                assert!(s.determinant_ok(p, k), "p={p} k={k} nu={nu}: {s}");
            }
        }
    }
}

#[test]
fn first_rows_of_table() {
    let p = 11;
    let k = 8;
    let rows = inertia_rows(p, k).unwrap();
    let h = Rational64::new(6, 2);
    assert_eq!(rows[0].region, Region::Below(Rational64::from_integer(1) - h));
    assert_eq!(rows[0].shape, ReductionShape::irreducible(p, 7).unwrap());
    assert_eq!(rows[1].shape, ReductionShape::reducible(p, 6, 1));
    assert_eq!(rows[2].shape, ReductionShape::irreducible(p, 6 + 11).unwrap());
    assert_eq!(rows[3].shape, ReductionShape::reducible(p, 5, 2));
    assert_eq!(rows.last().unwrap().shape, ReductionShape::irreducible(p, 4 + 11 * 3).unwrap());
}

#[test]
fn gp_encoding_agrees_on_odd_weights() {
    let p = 7;
    for k in [3u32, 5, 7] {
        for nu in nu_samples() {
            assert_eq!(gp_inertia_shape_nu(p, k, nu).unwrap(), classify_nu(p, k, nu).unwrap(), "k={k} nu={nu}");
        }
        for e in -12..=12 {
            let l = at_nu(p, k, e);
            assert_eq!(gp_inertia_shape(p, k, &l).unwrap(), classify_inertia(p, k, &l).unwrap(), "k={k} e={e}");
        }
        assert_eq!(gp_inertia_shape(p, k, &LValue::Infinity).unwrap(), classify_inertia(p, k, &LValue::Infinity).unwrap());
    }
}

#[test]
fn bm_encoding_agrees_on_even_weights() {
    for p in [5u64, 7, 11] {
        for k in (4..=(p + 1) as u32).step_by(2) {
            for nu in nu_samples() {
                assert_eq!(bm_inertia_shape(p, k, nu).unwrap(), classify_nu(p, k, nu).unwrap(), "p={p} k={k} nu={nu}");
            }
        }
    }
}

#[test]
fn bm_examples() {
    let c = bm_crosscheck(5, 4, &lq(0, 1)).unwrap();
    assert_eq!(c.a, Some(QuadRational::int(3)));
    assert_eq!((c.v_a, c.nu, c.equal), (Valuation::int(0), Valuation::int(0), true));
    // H_1 + H_3 = 17/6 makes both sides infinite
    let c = bm_crosscheck(7, 6, &lq(17, 6)).unwrap();
    assert_eq!((c.v_a, c.nu, c.equal), (Valuation::PosInf, Valuation::PosInf, true));
    assert_eq!(c.a, Some(QuadRational::zero()));
    // 11/6 is H_3 alone
    let c = bm_crosscheck(7, 6, &lq(11, 6)).unwrap();
    assert_eq!((c.v_a, c.nu, c.equal), (Valuation::int(0), Valuation::int(0), true));
    assert!(bm_crosscheck(7, 6, &LValue::Infinity).unwrap().equal);
    assert!(bm_crosscheck(7, 5, &lq(0, 1)).is_err());
}

#[test]
fn bm_valuation_matches_nu_random() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in [4u32, 6, 8] {
        for _ in 0..100 {
            let num: i64 = rng.gen_range(-5000..5000);
            let e: u32 = rng.gen_range(0..4);
            let den: i64 = rng.gen_range(1..200) * 7i64.pow(e);
            let c = bm_crosscheck(7, k, &lq(num, den)).unwrap();
            assert!(c.equal, "k={k} L={num}/{den}: {c:?}");
        }
    }
}

#[test]
fn zigzag_examples() {
    let z = zigzag_params(5, 4, &lq(1, 1), 3).unwrap();
    assert_eq!(z.tau, Valuation::int(3));
    assert_eq!(z.t, 3);
    for n in 2..=4 {
        let z = zigzag_params(5, 4, &LValue::Infinity, n).unwrap();
        assert_eq!(z.tau, Valuation::int(n as i64));
        assert_eq!(z.t, (n * n) as u64);
        assert_eq!(z.nu, Valuation::NegInf);
    }
    assert_eq!(t_direct(7, 5, &lq(2, 1), 4).unwrap(), 4);
}

#[test]
fn zigzag_needs_large_n_for_degenerate_shift() {
    // 𝓛 = H_- + H_+ has ν = ∞, never matched
    assert_eq!(zigzag_params(5, 4, &lq(3, 2), 3), Err(ClassifyError::RegimeNotReached { n: 3 }));
    // ν = 3 needs n beyond ν
    let l = at_nu(5, 4, 6);
    assert!(zigzag_params(5, 4, &l, 2).is_err());
    assert!(zigzag_params(5, 4, &l, 5).is_ok());
}

#[test]
fn zigzag_closed_form_on_grid() {
    let two_plus_pi = LValue::Finite(QuadRational::new(q(2, 1), q(1, 1)));
    for p in [3u64, 5, 7] {
        for k in 3..=5u32 {
            for l in [lq(0, 1), lq(1, 1), lq(5, 2), two_plus_pi.clone(), LValue::Infinity] {
                if nu_invariant(p, k, &l) == Valuation::PosInf {
                    continue;
                }
                let top = if l.is_infinite() { 4 } else { 6 };
                assert!(regime_threshold(p, k, &l, top).unwrap().is_some_and(|n0| n0 <= 2), "p={p} k={k} L={l}");
                for n in 2..=top {
                    let z = zigzag_params(p, k, &l, n).unwrap();
                    let want_t = if l.is_infinite() { (n * n) as u64 } else { n as u64 };
                    assert_eq!(z.t, want_t);
                }
            }
        }
    }
}

#[test]
fn binomial_examples() {
    let b = binomial_valuation(3, 2, 2, 2).unwrap();
    assert_eq!((b.computed, b.formula, b.equal), (1, 1, true));
    let b = binomial_valuation(5, 3, 3, 75).unwrap();
    assert_eq!((b.computed, b.formula), (0, 0));
    assert!(binomial_valuation(3, 3, 1, 1).is_err());
}

#[test]
fn binomial_valuations_exhaustive() {
    for p in [3u64, 5, 7] {
        for c in 1..p {
            for i in 1..=4u32 {
                for j in 1..=c * p.pow(i - 1) {
                    assert!(binomial_valuation(p, c, i, j).unwrap().equal, "p={p} c={c} i={i} j={j}");
                }
            }
        }
    }
}

#[test]
fn conditional_flags() {
    assert!(!is_conditional(5, 4, &lq(0, 1)));
    assert!(!is_conditional(7, 6, &LValue::Infinity));
    assert!(is_conditional(7, 6, &lq(0, 1)));
    assert!(is_conditional(3, 4, &lq(0, 1)));
    assert!(!is_conditional(3, 3, &lq(0, 1)));
}

#[test]
fn records_round_trip() {
    let r = classify_record(5, 4, &lq(0, 1), true).unwrap();
    assert_eq!(r.lambda, Some(LambdaRecord::Value { value: "3".into() }));
    assert_eq!(r.shape, ShapeRecord::ReducibleFull { i: 2, j: 1 });
    assert!(!r.conditional);
    let js = serde_json::to_string(&r).unwrap();
    assert!(js.contains("\"L\":\"0\""));
    let back: ClassificationRecord = serde_json::from_str(&js).unwrap();
    assert_eq!(back, r);
    let rows = table(5, &[lq(1, 3)], false).unwrap();
    assert_eq!(rows.len(), 4);
    for row in &rows {
        let js = serde_json::to_value(row).unwrap();
        assert!(js.get("lambda").is_none());
        assert_eq!(serde_json::from_value::<ClassificationRecord>(js).unwrap(), *row);
    }
    let r = classify_record(7, 5, &lq(0, 1), false).unwrap();
    assert_eq!(r.shape, ShapeRecord::Irreducible { c: 10 });
    assert!(!r.conditional);
}
