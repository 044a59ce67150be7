mod gauss {
    #![allow(unused_imports)]
    use liouville_core::*;
    use liouville_core::algebra::*;
    use liouville_core::gauss::*;
    use liouville_core::linalg::*;
    use liouville_core::models::*;
    use liouville_core::reduction::*;
    use liouville_core::spectrum::*;
    #[allow(dead_code)]
    const ZERO: C64 = C64::new(0.0, 0.0);
    #[allow(dead_code)]
    fn m(q: u32, r: u32, dq: u32, dr: u32) -> Monomial {
        Monomial::new(q, r, dq, dr)
    }
    #[allow(dead_code)]
    fn re(x: f64) -> C64 {
        C64::new(x, 0.0)
    }
    #[allow(dead_code)]
    fn im(x: f64) -> C64 {
        C64::new(0.0, x)
    }


    #[test]
    fn delta_examples() {
        assert!((delta(&GaussianState::thermal(1.7).unwrap()) - 1.0).abs() < 1e-15);
        assert_eq!(delta(&GaussianState::new(1.0, 0.0, 0.0).unwrap()), 4.0);
        assert_eq!(delta(&GaussianState::new(0.25, 1.0, 0.75).unwrap()), 2.0);
    }

    #[test]
    fn im2_scales_everything() {
        let s = GaussianState::new(0.3, 0.4, 0.5).unwrap();
        let out = transform_gaussian(GeneratorId::IM2, 0.7, &s).unwrap();
        let e = libm::exp(-0.7);
        assert!((out.mu - 0.3 * e).abs() < 1e-15);
        assert!((out.kappa - 0.4 * e).abs() < 1e-15);
        assert!((out.mu_plus_nu() - 0.8 * e).abs() < 1e-15);
    }

    #[test]
    fn l2plus_on_thermal_state() {
        let b = 1.3;
        let eta = 0.4;
        let out = transform_gaussian(GeneratorId::L2PLUS, eta, &GaussianState::thermal(b).unwrap()).unwrap();
        assert!((out.kappa + eta / (2.0 * b)).abs() < 1e-15);
        assert!((out.mu - 1.0 / (4.0 * b)).abs() < 1e-15);
    }

    #[test]
    fn zero_parameter_is_identity() {
        let s = GaussianState::new(0.3, -0.4, 0.5).unwrap();
        for id in GeneratorId::ALL {
            assert!(transform_gaussian(id, 0.0, &s).unwrap().max_abs_diff(&s) < 1e-15, "{id:?}");
        }
    }

    #[test]
    fn l2plus_window_example() {
        let s = GaussianState::new(0.25, 0.0, 0.75).unwrap();
        let (lo, hi) = positivity_window(GeneratorId::L2PLUS, &s);
        let r3 = libm::sqrt(3.0);
        assert!((lo + r3).abs() < 1e-15 && (hi - r3).abs() < 1e-15);
        for p in [lo, hi] {
            assert!(transform_gaussian(GeneratorId::L2PLUS, p, &s).unwrap().nu.abs() < 1e-12);
        }
        let err = transform_gaussian(GeneratorId::L2PLUS, 1.8, &s).unwrap_err();
        assert_eq!(err.kind(), "PositivityViolation");
    }

    #[test]
    fn l1plus_window_on_thermal() {
        let s = GaussianState::thermal(1.0).unwrap();
        let (lo, hi) = positivity_window(GeneratorId::L1PLUS, &s);
        let expected = libm::sqrt(s.nu / s.mu);
        assert!((lo + expected).abs() < 1e-14 && (hi - expected).abs() < 1e-14);
    }

    #[test]
    fn plan_errors_carry_step_index() {
        let s = GaussianState::thermal(1.0).unwrap();
        let steps = [Step::new(GeneratorId::IL0, 0.3), Step::new(GeneratorId::L2PLUS, 100.0)];
        match apply_plan_gaussian(&steps, &s) {
            Err(Error::PositivityViolation { step: Some(1), .. }) => {}
            other => panic!("{other:?}"),
        }
        assert_eq!(apply_plan_gaussian(&[], &s).unwrap(), s);
    }

    #[test]
    fn thermal_preset_examples() {
        let (s, f) = stationary_preset(&ModelPreset::Kl { omega0: 1.0, gamma: 0.3, b: 1.0 }).unwrap();
        assert!((s.mu - 0.25).abs() < 1e-15 && s.kappa == 0.0 && (s.mu_plus_nu() - 1.0).abs() < 1e-15);
        assert!((f.q_scale - libm::sqrt(2.0)).abs() < 1e-15);
        let hpz = ModelPreset::Hpz { omega0_prime: 1.0, gamma: 0.6, b_hpz: 1.0, d: 0.2 };
        let (s, _) = stationary_preset(&hpz).unwrap();
        assert!((s.mu - 1.0 / 4.4).abs() < 1e-15 && (s.mu_plus_nu() - 1.0).abs() < 1e-15);
    }
}
