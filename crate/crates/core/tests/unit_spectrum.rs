mod eigenfunction {
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

    use liouville_core::reduction::reduce_to_kl;
    use liouville_core::spectrum::Sign;

    #[test]
    fn stationary_state_matches_thermal_density() {
        let b = 1.4;
        let f = kl_eigenfunction(&EigenLabel::new(0, 0, Sign::Plus).unwrap(), b, 1.0, 0.3).unwrap();
        for (q, r) in [(0.0, 0.0), (0.7, -0.3), (-1.2, 0.9)] {
            let expected = libm::exp(-q * q / (2.0 * b) - b * r * r / 2.0) / libm::sqrt(2.0 * core::f64::consts::PI * b);
            assert!((f.evaluate(q, r) - C64::new(expected, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn sign_pairs_are_conjugate_mirrored() {
        for m in 1..4 {
            for n in 1..=m {
                let p = kl_eigenfunction(&EigenLabel::new(m, n, Sign::Plus).unwrap(), 1.2, 1.0, 0.3).unwrap();
                let q = kl_eigenfunction(&EigenLabel::new(m, n, Sign::Minus).unwrap(), 1.2, 1.0, 0.3).unwrap();
                for (x, y) in [(0.3, 0.4), (-1.1, 0.2)] {
                    assert!((q.evaluate(x, y) - p.evaluate(x, -y).conj()).norm() < 1e-13);
                }
            }
        }
    }

    #[test]
    fn identity_plan_gives_kl() {
        let c = LiouvillianCoeffs::kl(1.0, 0.3, 1.0);
        let plan = reduce_to_kl(&c, 1.0).unwrap();
        let l = EigenLabel::new(2, 1, Sign::Plus).unwrap();
        let a = transformed_eigenfunction(&plan, &l, &c).unwrap();
        let b = kl_eigenfunction(&l, 1.0, 1.0, 0.3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn conjugated_coordinates_commute() {
        let c = LiouvillianCoeffs { h: [2.3, 0.4, -0.7], gamma: 0.5, g: [-1.1, 0.3, 0.2] };
        let plan = reduce_to_kl(&c, 1.0).unwrap();
        let f = transformed_eigenfunction(&plan, &EigenLabel::new(1, 1, Sign::Plus).unwrap(), &c).unwrap();
        assert!(f.operator_commutator().norm() < 1e-12);
    }
}

mod fixtures {
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


    fn cl() -> ModelPreset {
        ModelPreset::Cl { omega0_prime: 1.0, gamma: 0.6, b_cl: 1.0 }
    }

    #[test]
    fn unsupported_labels_and_models() {
        let l = EigenLabel::new(2, 0, Sign::Plus).unwrap();
        assert_eq!(closed_form_fixture(&cl(), &l, FixtureForm::Spectral).unwrap_err().kind(), "UnsupportedLabel");
        let l = EigenLabel::new(1, 0, Sign::Plus).unwrap();
        let kl = ModelPreset::Kl { omega0: 1.0, gamma: 0.3, b: 1.0 };
        assert_eq!(closed_form_fixture(&kl, &l, FixtureForm::Spectral).unwrap_err().kind(), "UnsupportedModel");
    }

    #[test]
    fn cl_forms_differ_by_constants() {
        let cases = [(1, 1, Sign::Plus, -1.0), (1, 1, Sign::Minus, 1.0), (1, 0, Sign::Plus, 1.0)];
        for (m, n, s, ratio) in cases {
            let l = EigenLabel::new(m, n, s).unwrap();
            let a = closed_form_fixture(&cl(), &l, FixtureForm::Hyperbolic).unwrap();
            let b = closed_form_fixture(&cl(), &l, FixtureForm::Spectral).unwrap();
            for (q, r) in [(0.3, 0.1), (1.0, 2.0), (-0.7, 0.4)] {
                let (fa, fb) = (a.evaluate(q, r), b.evaluate(q, r));
                assert!((fa - fb * ratio).norm() < 1e-14, "{l}: {fa} vs {fb}");
            }
        }
    }
}

mod hermite {
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
    fn low_orders() {
        assert_eq!(hermite(0, 0.7), 1.0);
        assert_eq!(hermite(1, 0.7), 1.4);
        assert!((hermite(2, 0.7) - (4.0 * 0.49 - 2.0)).abs() < 1e-15);
        assert_eq!(hermite_coefficients(2), vec![-2.0, 0.0, 4.0]);
        assert_eq!(hermite_coefficients(3), vec![0.0, -12.0, 0.0, 8.0]);
    }

    #[test]
    fn coefficients_agree_with_recurrence() {
        for k in 0..12 {
            let c = hermite_coefficients(k);
            let x: f64 = 0.37;
            let v: f64 = c.iter().enumerate().map(|(i, a)| a * x.powi(i as i32)).sum();
            assert!((v - hermite(k, x)).abs() < 1e-9 * hermite(k, x).abs().max(1.0));
        }
    }
}

mod label {
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
    fn eigenvalue_examples() {
        let l = |m, n, s| EigenLabel::new(m, n, s).unwrap();
        assert_eq!(eigenvalue(&l(0, 0, Sign::Plus), 1.0, 0.2), C64::new(0.0, 0.0));
        assert!((eigenvalue(&l(1, 1, Sign::Plus), 1.0, 0.2) - C64::new(0.1, 1.0)).norm() < 1e-15);
        assert!((eigenvalue(&l(1, 1, Sign::Minus), 1.0, 0.2) - C64::new(0.1, -1.0)).norm() < 1e-15);
        assert!((eigenvalue(&l(1, 0, Sign::Plus), 1.0, 0.2) - C64::new(0.2, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn label_errors() {
        assert_eq!(EigenLabel::new(1, 2, Sign::Plus).unwrap_err().kind(), "LabelError");
        assert_eq!(EigenLabel::new(1, -1, Sign::Plus).unwrap_err().kind(), "LabelError");
        assert_eq!(EigenLabel::new(33, 0, Sign::Plus).unwrap_err().kind(), "LabelError");
        assert_eq!(EigenLabel::all_up_to(2).len(), 1 + 3 + 5);
    }

    #[test]
    fn coefficient_examples() {
        assert_eq!(c_coefficient(0, 0, 0, 0, 0, Sign::Plus).unwrap(), C64::new(1.0, 0.0));
        assert!((c_coefficient(1, 1, 0, 0, 0, Sign::Plus).unwrap() - C64::new(0.0, -1.0)).norm() < 1e-15);
        assert!((c_coefficient(1, 1, 0, 0, 1, Sign::Plus).unwrap() - C64::new(0.0, -0.5)).norm() < 1e-15);
        assert_eq!(c_coefficient(1, 1, 1, 0, 0, Sign::Plus).unwrap_err().kind(), "IndexError");
        assert_eq!(c_coefficient(2, 0, 1, 2, 0, Sign::Plus).unwrap_err().kind(), "IndexError");
        assert!(c_coefficient(32, 0, 32, 16, 0, Sign::Plus).unwrap().norm().is_finite());
    }
}

mod poly {
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

    use liouville_core::spectrum::Sign;

    fn label(m: i64, n: i64, s: Sign) -> EigenLabel {
        EigenLabel::new(m, n, s).unwrap()
    }

    #[test]
    fn reference_values() {
        let i = C64::new(0.0, 1.0);
        let p = pi_polynomial(&label(1, 1, Sign::Plus));
        assert!(p.max_abs_diff(&BivariatePoly::from_terms([((1, 0), -i), ((0, 1), -i)])) < 1e-15);
        let p = pi_polynomial(&label(1, 1, Sign::Minus));
        assert!(p.max_abs_diff(&BivariatePoly::from_terms([((1, 0), i), ((0, 1), -i)])) < 1e-15);
        let p = pi_polynomial(&label(1, 0, Sign::Plus));
        let expected = BivariatePoly::from_terms([
            ((0, 0), C64::new(0.5, 0.0)),
            ((2, 0), C64::new(-1.0, 0.0)),
            ((0, 2), C64::new(1.0, 0.0)),
        ]);
        assert!(p.max_abs_diff(&expected) < 1e-15);
        assert_eq!(pi_polynomial(&label(0, 0, Sign::Plus)), BivariatePoly::one());
    }

    #[test]
    fn degree_is_two_m_minus_n() {
        for l in EigenLabel::all_up_to(6) {
            assert_eq!(pi_polynomial(&l).pruned(1e-14).degree(), 2 * l.m - l.n, "{l}");
        }
    }

    #[test]
    fn n_zero_sign_irrelevant() {
        for m in 0..6 {
            assert_eq!(pi_polynomial(&label(m, 0, Sign::Plus)), pi_polynomial(&label(m, 0, Sign::Minus)));
        }
    }

    #[test]
    fn calculus() {
        let p = BivariatePoly::from_terms([((2, 1), C64::new(3.0, 0.0)), ((0, 0), C64::new(1.0, 0.0))]);
        assert_eq!(p.d_x(), BivariatePoly::term(1, 1, C64::new(6.0, 0.0)));
        assert_eq!(p.d_y(), BivariatePoly::term(2, 0, C64::new(3.0, 0.0)));
        assert!((p.evaluate(2.0, -1.0) - C64::new(-11.0, 0.0)).norm() < 1e-15);
    }
}
