mod common;

use common::{ctx, r};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cyclic_alpha::bignum::{arccos, cos, pi, sin, sin_cos, sqrt, tan, BigReal};
use cyclic_alpha::characteristics::{
    alpha_characteristic, alpha_via_beta, beta, compute_set, cos_ratio, PrimePair,
};
use cyclic_alpha::electroweak::{compare_values, predict};
use cyclic_alpha::geometry::{build_system, verify_identities};
use cyclic_alpha::kinematics::{build_orbit, light_speed_check, n_max_from_alpha};
use cyclic_alpha::primes::primes_up_to;
use cyclic_alpha::search::{enumerate_pairs, rank_all, scan, ConstantRecord, ScanBounds};

/// A uniform point of [0, π] at 40 decimal places.
fn point_in_0_pi(numerator: u64, denominator: u64) -> BigReal {
    let p = pi(&ctx(40));
    p.mul_int(numerator).div_int(denominator, 40)
}

fn prime_index() -> impl Strategy<Value = (usize, usize)> {
    // 61 odd primes below 300
    (1usize..61, 0usize..61).prop_filter("distinct", |(a, b)| b < a)
}

fn odd_primes() -> Vec<u64> {
    primes_up_to(300).into_iter().filter(|&p| p >= 3).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pythagorean_identity(num in 0u64..=1_000_000, d in 8u32..40) {
        let c = ctx(d);
        let x = point_in_0_pi(num, 1_000_000);
        let (s, co) = sin_cos(&x, &c);
        prop_assert!((&s * &s + &co * &co - BigReal::one()).abs() < c.loose_tolerance(2));
        prop_assert!(co <= BigReal::one() && co >= -BigReal::one());
    }

    #[test]
    fn arccos_inverts_cos(num in 0u64..=1_000_000, d in 8u32..40) {
        let c = ctx(d);
        let x = point_in_0_pi(num, 1_000_000).round_to(c.working_places());
        let back = arccos(&cos(&x, &c), &c).unwrap();
        prop_assert!((back.radians() - &x).abs() < c.loose_tolerance(2), "x = {}, back = {}", x, back);
    }

    #[test]
    fn thirty_and_sixty_digits_agree(num in -4_000_000i64..4_000_000) {
        let x = BigReal::from(num).div_int(1_000_000, 30);
        let (lo, hi) = (ctx(30), ctx(60));
        let tol = r("1e-28");
        prop_assert!((cos(&x, &lo) - cos(&x, &hi)).abs() < tol);
        prop_assert!((sin(&x, &lo) - sin(&x, &hi)).abs() < tol);
        let y = x.div_int(4, 30);
        prop_assert!((tan(&y, &lo).unwrap() - tan(&y, &hi).unwrap()).abs() < tol);
        let z = x.abs().div_int(4, 30);
        prop_assert!((arccos(&cos(&z, &lo), &lo).unwrap().radians()
            - arccos(&cos(&z, &lo), &hi).unwrap().radians()).abs() < tol);
        prop_assert!((sqrt(&x.abs(), &lo).unwrap() - sqrt(&x.abs(), &hi).unwrap()).abs() < tol);
    }

    #[test]
    fn cos_decreasing_on_grids(start in 0u64..900, step in 1u64..100) {
        let c = ctx(20);
        let mut prev: Option<BigReal> = None;
        let mut k = start;
        while k <= 1000 {
            let v = cos(&point_in_0_pi(k, 1000), &c);
            if let Some(p) = &prev {
                prop_assert!(v < *p);
            }
            prev = Some(v);
            k += step;
        }
    }

    #[test]
    fn swapping_orders_swaps_characteristics((i, j) in prime_index()) {
        let primes = odd_primes();
        let (a, b) = (primes[i], primes[j]);
        let c = ctx(20);
        let forward = compute_set(&PrimePair::new(a, b).unwrap(), &c).unwrap();
        let swapped = PrimePair::new(b, a).unwrap();
        prop_assert!(swapped.was_swapped());
        let back = compute_set(&swapped, &c).unwrap();
        prop_assert_eq!(&forward.alpha_n1, &back.alpha_n1);
        prop_assert_eq!(&forward.alpha_n2, &back.alpha_n2);
        // alpha_n(n·m) with the roles exchanged
        prop_assert_eq!(alpha_characteristic(b, a, &c).unwrap(), forward.alpha_n2.clone());
        let inverse = cos_ratio(b, a, &c).unwrap();
        let product = &inverse * forward.ratio_d_e.as_ref().unwrap();
        prop_assert!((product - BigReal::one()).abs() < c.loose_tolerance(2));
    }

    #[test]
    fn characteristic_invariants((i, j) in prime_index()) {
        let primes = odd_primes();
        let pair = PrimePair::new(primes[i], primes[j]).unwrap();
        let c = ctx(25);
        let set = compute_set(&pair, &c).unwrap();
        let tol = c.loose_tolerance(2);
        prop_assert!(set.alpha_n1.mul_int(pair.n1()) < BigReal::one());
        prop_assert!(set.alpha_n2.mul_int(pair.n2()) < BigReal::one());
        prop_assert!(set.beta > BigReal::one());
        let route = alpha_via_beta(pair.n1(), pair.n2(), &c).unwrap();
        prop_assert!((route - &set.alpha_n1).abs() < tol);
        let (b1, b2) = set.beta_cross_residuals();
        prop_assert!(b1 < tol && b2.unwrap() < tol);
        if pair.n1() >= 5 {
            let s = set.sin2_theta_g.as_ref().unwrap();
            prop_assert!(s.is_positive() && *s < BigReal::one());
        }
    }

    #[test]
    fn identities_hold_for_random_pairs((i, j) in prime_index()) {
        let primes = odd_primes();
        let pair = PrimePair::new(primes[i], primes[j]).unwrap();
        let c = ctx(30);
        let system = build_system(&pair, &BigReal::one(), &c).unwrap();
        let report = verify_identities(&system, &c, &c.loose_tolerance(2));
        prop_assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
        prop_assert!(system.r_c < system.r_a && system.r_a < system.r_d);
    }

    #[test]
    fn geometry_is_scale_invariant((i, j) in prime_index()) {
        let primes = odd_primes();
        let pair = PrimePair::new(primes[i], primes[j]).unwrap();
        let c = ctx(25);
        let places = c.working_places();
        let ratios = |r_b: &BigReal| {
            let s = build_system(&pair, r_b, &c).unwrap();
            [
                s.r_a.div(&s.r_b, places),
                s.r_c.div(&s.r_b, places),
                s.r_d.div(&s.r_b, places),
                s.r_e.div(&s.r_b, places),
                s.l_n1.div(&s.r_d, places),
                s.l_n2.div(&s.r_e, places),
                s.perimeter.div(&s.r_c, places),
            ]
        };
        let base = ratios(&BigReal::one());
        let seventh = BigReal::one().div_int(7, places);
        for scale in [BigReal::from(3i64), seventh] {
            for (a, b) in base.iter().zip(ratios(&scale)) {
                prop_assert!((a - &b).abs() < c.loose_tolerance(2));
            }
        }
    }

    #[test]
    fn orbit_light_speed(num in 1u64..999_999, d in 10u32..40) {
        let c = ctx(d);
        let alpha = BigReal::from(num).div_int(1_000_000, 6);
        let orbit = build_orbit(&alpha, &r("2.5"), &c).unwrap();
        prop_assert!(light_speed_check(&orbit, &c) < c.tolerance());
        prop_assert!(orbit.v_c < BigReal::one());
        prop_assert!(alpha.mul_int(orbit.n_max + 1) >= BigReal::one());
    }

    #[test]
    fn compare_is_antisymmetric(a in -1_000_000i64..1_000_000, b in -1_000_000i64..1_000_000, s in 1u64..1000) {
        let c = ctx(15);
        let x = BigReal::from(a).div_int(1000, 6);
        let y = BigReal::from(b).div_int(1000, 6);
        let sigma = BigReal::from(s).div_int(100, 6);
        let fwd = compare_values("q", &x, &y, "y", Some(&sigma), &c);
        let rev = compare_values("q", &y, &x, "x", Some(&sigma), &c);
        prop_assert_eq!(&fwd.signed_diff, &(-rev.signed_diff.clone()));
        prop_assert_eq!(&fwd.abs_diff, &rev.abs_diff);
        prop_assert_eq!(fwd.sigma_diff.unwrap().abs(), rev.sigma_diff.unwrap().abs());
    }

    #[test]
    fn electroweak_fields_are_consistent((i, j) in prime_index()) {
        let primes = odd_primes();
        let pair = PrimePair::new(primes[i], primes[j]).unwrap();
        let c = ctx(20);
        let p = predict(&pair, &c).unwrap();
        let tol = c.loose_tolerance(2);
        prop_assert!((&p.g2_over_4pi * &p.sin2_theta_w - &p.alpha_fs).abs() < tol);
        if p.sin2_theta_w.is_positive() && p.sin2_theta_w < BigReal::one() {
            prop_assert!(p.mz_over_mw > BigReal::one());
        }
        for v in [&p.alpha_fs, &p.g2_over_4pi, &p.g_prime_over_e, &p.g_z_over_e, &p.alpha_w] {
            prop_assert!(v.is_positive());
        }
    }
}

#[test]
fn n_max_steps_exactly_at_reciprocals() {
    for k in 2u64..300 {
        let above = BigReal::one().div_int(k, 40) + BigReal::ulp(40);
        let below = BigReal::one().div_int(k, 40) - BigReal::ulp(40);
        assert_eq!(n_max_from_alpha(&above).unwrap(), k - 1, "just above 1/{k}");
        assert_eq!(n_max_from_alpha(&below).unwrap(), k, "just below 1/{k}");
    }
    for (alpha, n) in [
        ("0.5", 1),
        ("0.25", 3),
        ("0.2", 4),
        ("0.125", 7),
        ("0.1", 9),
        ("0.01", 99),
    ] {
        assert_eq!(n_max_from_alpha(&r(alpha)).unwrap(), n);
    }
}

#[test]
fn beta_exceeds_one_and_approaches_it() {
    let c = ctx(20);
    let mut prev = None;
    for (a, b) in [(3, 2), (5, 3), (11, 7), (137, 29), (293, 283)] {
        let value = beta(&PrimePair::new(a, b).unwrap(), &c).unwrap();
        assert!(value > BigReal::one());
        if let Some(p) = prev {
            assert!(value < p);
        }
        prev = Some(value);
    }
}

fn pair_count(bounds: &ScanBounds) -> usize {
    let primes = primes_up_to(bounds.max_n1);
    primes
        .iter()
        .map(|&n1| {
            primes
                .iter()
                .filter(|&&n2| n2 < n1 && n2 <= bounds.max_n2)
                .count()
        })
        .sum()
}

#[test]
fn enumeration_matches_analytic_count() {
    for (a, b) in [(3, 3), (7, 7), (50, 10), (200, 200), (300, 31)] {
        let bounds = ScanBounds::new(a, b).unwrap();
        let pairs = enumerate_pairs(&bounds).unwrap();
        assert_eq!(pairs.len(), pair_count(&bounds));
        assert!(pairs
            .windows(2)
            .all(|w| (w[0].n1(), w[0].n2()) < (w[1].n1(), w[1].n2())));
    }
    let k = primes_up_to(200).len();
    assert_eq!(
        enumerate_pairs(&ScanBounds::new(200, 200).unwrap())
            .unwrap()
            .len(),
        k * (k - 1) / 2
    );
}

#[test]
fn scan_is_complete_deterministic_and_monotone() {
    let c = ctx(20);
    let small = ScanBounds::new(60, 20).unwrap();
    let large = ScanBounds::new(120, 40).unwrap();
    let exact = compute_set(&PrimePair::new(53, 17).unwrap(), &c).unwrap();
    let targets = vec![
        ConstantRecord::new("exact", exact.sin2_theta_g.clone().unwrap(), r("1e-6")),
        ConstantRecord::new("loose", r("0.0345"), BigReal::zero()),
    ];
    let found = scan(&targets, &small, &c).unwrap();
    let hit = found
        .iter()
        .find(|m| m.target.name == "exact" && (m.pair.n1(), m.pair.n2()) == (53, 17))
        .unwrap();
    assert!(hit.abs_diff.is_zero());

    let again = scan(&targets, &small, &c).unwrap();
    let keys = |v: &[cyclic_alpha::search::MatchResult]| {
        v.iter()
            .map(|m| {
                (
                    m.target.name.clone(),
                    m.pair,
                    m.kind,
                    m.rank,
                    m.computed.clone(),
                )
            })
            .collect::<Vec<_>>()
    };
    assert_eq!(keys(&found), keys(&again));

    let bigger = scan(&targets, &large, &c).unwrap();
    for m in &found {
        assert!(bigger
            .iter()
            .any(|b| b.target.name == m.target.name && b.pair == m.pair && b.kind == m.kind));
    }

    let all = rank_all(&targets, &small, &c).unwrap();
    for name in ["exact", "loose"] {
        let ranked: Vec<_> = all.iter().filter(|m| m.target.name == name).collect();
        for w in ranked.windows(2) {
            let key = |m: &cyclic_alpha::search::MatchResult| {
                m.sigma_diff.clone().unwrap_or_else(|| m.abs_diff.clone())
            };
            assert!(key(w[0]) <= key(w[1]));
            assert_eq!(w[0].rank + 1, w[1].rank);
        }
    }
}

/// The full-size sampling run; slow in debug builds.
#[test]
#[ignore]
fn million_sample_pythagorean_identity() {
    let c = ctx(12);
    let tol = c.loose_tolerance(2);
    let p = pi(&ctx(40));
    let mut rng = StdRng::seed_from_u64(0x0c05_5111);
    for _ in 0..1_000_000 {
        let k: u64 = rng.gen_range(0..=1u64 << 52);
        let x = (&p * BigReal::from(k)).div(&BigReal::from(1u64 << 52), 40);
        let (s, co) = sin_cos(&x, &c);
        assert!(
            (&s * &s + &co * &co - BigReal::one()).abs() < tol,
            "x = {x}"
        );
        let back = arccos(&co, &c).unwrap();
        assert!((back.radians() - &x).abs() < tol, "x = {x}");
    }
}
