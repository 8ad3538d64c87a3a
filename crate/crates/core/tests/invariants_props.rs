//! Conversions and identities of the numerical invariants.

use curveclass_core::algebra::rat;
use curveclass_core::invariants::*;
use proptest::prelude::*;

fn admissible() -> impl Strategy<Value = DeltaKappa> {
    (1i64..=40).prop_flat_map(|d| {
        (0..=arithmetic_genus(d)).prop_flat_map(move |delta| {
            (2 * delta..=3 * delta).prop_map(move |kappa| DeltaKappa::new(d, delta, kappa))
        })
    })
}

proptest! {
    #[test]
    fn triple_round_trip(d in 1i64..=60, g in -50i64..=2000, c in -50i64..=4000) {
        let t = ClassTriple::new(d, g, c);
        let (delta, kappa) = raw_delta_kappa(t);
        match to_delta_kappa(t) {
            Ok(dk) => prop_assert_eq!(from_delta_kappa(dk), t),
            Err(_) => prop_assert!(delta < 0 || kappa < 0),
        }
    }

    #[test]
    fn nodal_cuspidal_round_trip(dk in admissible()) {
        let nc = virtual_counts(dk).unwrap();
        prop_assert!(nc.nodes >= 0 && nc.cusps >= 0);
        prop_assert_eq!(from_nodal_cuspidal(nc), dk);
    }

    #[test]
    fn class_identities(d in 1i64..=80, g in -100i64..=3000, c in -100i64..=6000) {
        let t = ClassTriple::new(d, g, c);
        let (delta, kappa) = raw_delta_kappa(t);
        prop_assert_eq!(2 * d - 2 - c + 2 * g, kappa - 2 * delta);
        // c - 3g + (d^2-7d+6)/2 = 3δ - κ, doubled to stay integral
        prop_assert_eq!(2 * c - 6 * g + d * d - 7 * d + 6, 2 * (3 * delta - kappa));
    }

    #[test]
    fn admissible_counts_are_nonnegative(dk in admissible()) {
        let t = from_delta_kappa(dk);
        prop_assert!(2 * t.d - 2 - t.c + 2 * t.g >= 0);
        prop_assert!(2 * t.c - 6 * t.g + t.d * t.d - 7 * t.d + 6 >= 0);
        prop_assert!(triple_is_admissible(t));
    }

    #[test]
    fn duality_is_an_involution(d in -5i64..=60, g in -5i64..=100, c in -5i64..=200) {
        let t = ClassTriple::new(d, g, c);
        prop_assert_eq!(dual_triple(dual_triple(t)), t);
        prop_assert_eq!(expected_dim(dual_triple(t)), expected_dim(t));
    }

    #[test]
    fn gamma_bound(delta in 1i64..=10_000, frac in 0.0f64..=1.0) {
        let kappa = 2 * delta + (frac * delta as f64).floor() as i64;
        let kappa = kappa.min(3 * delta);
        let g = gamma_point(kappa, delta).unwrap();
        prop_assert!(g <= rat(5 * kappa - 6 * delta));
    }
}

#[test]
fn gamma_rejects_outside_the_cone() {
    assert!(gamma_point(1, 1).is_err());
    assert!(gamma_point(4, 1).is_err());
    assert!(gamma_point(0, 0).is_err());
    assert_eq!(gamma_point(3, 1).unwrap(), rat(9));
}
