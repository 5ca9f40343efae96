//! Property tests: structural laws checked on arbitrary inputs against
//! brute-force routes.

use proptest::collection::vec;
use proptest::prelude::*;

use num_traits::Zero;

use stirling_forge::exactnum::{
    binomial, binomial_transform, hockey_stick, inverse_binomial_transform, rat, Integer,
    Rational,
};
use stirling_forge::families::{power_sum_naive, power_sum_stirling};
use stirling_forge::findiff::{newton_coefficients, newton_reconstruct};
use stirling_forge::polybasis::{expand_in_falling_basis, power_to_falling, Polynomial};
use stirling_forge::series::TruncatedSeries;
use stirling_forge::stirling::{orthogonality_sum, stirling2, stirling2_explicit};

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(p, q)| rat(p, q))
}

fn polynomial(max_len: usize) -> impl Strategy<Value = Polynomial> {
    vec(rational(), 0..=max_len).prop_map(Polynomial::from_coeffs)
}

fn series(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    vec(rational(), order + 1).prop_map(move |cs| TruncatedSeries::from_fn(order, |k| cs[k].clone()))
}

/// Constant term forced to 0 (exp/log domain).
fn series_no_constant(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(order).prop_map(move |s| {
        TruncatedSeries::from_fn(s.order(), |k| {
            if k == 0 {
                Rational::zero()
            } else {
                s.coefficients()[k].clone()
            }
        })
    })
}

/// Constant term forced away from 0 (reciprocal domain).
fn series_unit(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    series(order).prop_map(move |s| {
        TruncatedSeries::from_fn(s.order(), |k| {
            let c = s.coefficients()[k].clone();
            if k == 0 && c.is_zero() {
                rat(1, 1)
            } else {
                c
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn binomial_transform_round_trips(a in vec(rational(), 1..=10)) {
        let b = binomial_transform(&a).unwrap();
        prop_assert_eq!(inverse_binomial_transform(&b).unwrap(), a.clone());
        let c = inverse_binomial_transform(&a).unwrap();
        prop_assert_eq!(binomial_transform(&c).unwrap(), a);
    }

    #[test]
    fn hockey_stick_matches_the_direct_sum(n in 0usize..=25, extra in 0usize..=25) {
        let k = extra.min(n);
        let direct: Integer = (k..=n).map(|j| binomial(j, k as i64)).sum();
        prop_assert_eq!(hockey_stick(n, k).unwrap(), direct);
    }

    #[test]
    fn second_kind_recurrence_matches_explicit_sum(m in 0usize..=20, pick in 0usize..=20) {
        let n = pick.min(m);
        prop_assert_eq!(stirling2(m, n), stirling2_explicit(m, n));
    }

    #[test]
    fn orthogonality_holds_at_random_pairs(m in 0usize..=18, n in 0usize..=18) {
        let expected = if m == n { Integer::from(1) } else { Integer::zero() };
        prop_assert_eq!(orthogonality_sum(m, n), expected);
    }

    #[test]
    fn power_sum_routes_agree(m in 0usize..=8, n in 1usize..=50) {
        prop_assert_eq!(power_sum_stirling(m, n), power_sum_naive(m, n));
    }

    #[test]
    fn newton_expansion_round_trips(f in polynomial(9)) {
        let back = newton_reconstruct(&newton_coefficients(&f));
        prop_assert_eq!(back, f);
    }

    #[test]
    fn falling_basis_expansion_round_trips(f in polynomial(9)) {
        let back = expand_in_falling_basis(&f).to_polynomial();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn falling_expansion_of_a_power_rebuilds_it(m in 0usize..=15) {
        let rebuilt = power_to_falling(m).to_polynomial();
        prop_assert_eq!(rebuilt, Polynomial::monomial(rat(1, 1), m));
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(f in polynomial(6), g in polynomial(6), x in rational()) {
        prop_assert_eq!(f.add(&g).eval(&x), f.eval(&x) + g.eval(&x));
        prop_assert_eq!(f.mul(&g).eval(&x), f.eval(&x) * g.eval(&x));
    }

    #[test]
    fn series_multiplication_is_commutative_and_associative(
        f in series(8), g in series(8), h in series(8)
    ) {
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn exp_and_log_invert_each_other(f in series_no_constant(10)) {
        let exped = f.exp().unwrap();
        let back = exped.sub(&TruncatedSeries::one(10)).log1p().unwrap();
        prop_assert_eq!(back, f.clone());
        let logged = f.log1p().unwrap();
        let forward = logged.exp().unwrap();
        prop_assert_eq!(forward, TruncatedSeries::one(10).add(&f));
    }

    #[test]
    fn reciprocal_is_a_true_inverse(f in series_unit(10)) {
        let inverse = f.reciprocal().unwrap();
        prop_assert_eq!(f.mul(&inverse), TruncatedSeries::one(10));
    }

    #[test]
    fn theta_powers_compose_additively(f in series(8), a in 0usize..=4, b in 0usize..=4) {
        prop_assert_eq!(f.theta(a).theta(b), f.theta(a + b));
    }
}
