mod basis {
    #![allow(unused_imports)]
    use liouville::core::*;
    use liouville::verify::*;
    use std::f64::consts::{PI, SQRT_2};


    #[test]
    fn ladder_structure() {
        let (x, d) = ladder_matrices(6);
        assert!((x[(1, 0)] - 1.0 / SQRT_2).abs() < 1e-15);
        assert_eq!(x.transpose(), x);
        assert_eq!(d.transpose(), -d.clone());
        let comm = &d * &x - &x * &d;
        for i in 0..5 {
            for j in 0..5 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((comm[(i, j)] - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn ladder_matches_quadrature() {
        let (nodes, weights) = gauss_hermite(20);
        let (x, d) = ladder_matrices(8);
        for i in 0..7 {
            for j in 0..7 {
                let mut xu = 0.0;
                let mut du = 0.0;
                for (u, w) in nodes.iter().zip(&weights) {
                    let h = hermite_function_polys(9, *u);
                    xu += w * h[i] * u * h[j];
                    // d/du ψ_j = (h_j' - u h_j) e^{-u²/2}, h_j' = √(2j) h_{j-1}
                    let dh = if j > 0 { (2.0 * j as f64).sqrt() * h[j - 1] } else { 0.0 };
                    du += w * h[i] * (dh - u * h[j]);
                }
                assert!((xu - x[(i, j)]).abs() < 1e-13, "{i},{j}");
                assert!((du - d[(i, j)]).abs() < 1e-13, "{i},{j}");
            }
        }
    }

    #[test]
    fn quadrature_integrates_moments() {
        let (x, w) = gauss_hermite(30);
        let m0: f64 = w.iter().sum();
        let m2: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
        let m10: f64 = x.iter().zip(&w).map(|(x, w)| w * x.powi(10)).sum();
        assert!((m0 - PI.sqrt()).abs() < 1e-13);
        assert!((m2 - PI.sqrt() / 2.0).abs() < 1e-13);
        assert!((m10 - PI.sqrt() * 945.0 / 32.0).abs() < 1e-10);
        let (x, w) = gauss_hermite(104);
        let m0: f64 = w.iter().sum();
        assert!((m0 - PI.sqrt()).abs() < 1e-12 && x.windows(2).all(|p| p[0] > p[1]));
    }

    #[test]
    fn small_basis_rejected() {
        assert!(BasisConfig::new(3, 8, CoordinateFrame::IDENTITY).is_err());
    }
}

mod expand {
    #![allow(unused_imports)]
    use liouville::core::*;
    use liouville::verify::*;
    use std::f64::consts::{PI, SQRT_2};

    use liouville_core::spectrum::{EigenLabel, Sign};
    use liouville_core::{kl_eigenfunction, CoordinateFrame};

    #[test]
    fn stationary_state_is_single_coefficient() {
        let s = GaussianState::thermal(1.0).unwrap();
        let cfg = BasisConfig::adapted_to(&s, 8, 8).unwrap();
        let v = expand(&s, &cfg);
        assert!(!v.frame_mismatch);
        assert_eq!(v.support(1e-13), vec![(0, 0)]);
    }

    #[test]
    fn first_mode_has_two_coefficients() {
        let f = kl_eigenfunction(&EigenLabel::new(1, 1, Sign::Plus).unwrap(), 1.0, 1.0, 0.3).unwrap();
        let cfg = BasisConfig::adapted_to(&f.gaussian, 8, 8).unwrap();
        let mut s = expand(&f, &cfg).support(1e-13);
        s.sort();
        assert_eq!(s, vec![(0, 1), (1, 0)]);
    }

    #[test]
    fn evaluate_reproduces_function() {
        let f = kl_eigenfunction(&EigenLabel::new(2, 1, Sign::Minus).unwrap(), 1.3, 1.0, 0.3).unwrap();
        let cfg = BasisConfig::adapted_to(&f.gaussian, 10, 10).unwrap();
        let v = expand(&f, &cfg);
        for (q, r) in [(0.1, 0.2), (-1.5, 0.7), (2.0, -1.0)] {
            assert!((v.evaluate(q, r) - f.evaluate(q, r)).norm() < 1e-13);
        }
    }

    #[test]
    fn chirped_gaussian_in_chirped_basis() {
        let s = GaussianState::new(0.3, 0.45, 0.6).unwrap();
        let cfg = BasisConfig::adapted_to(&s, 6, 6).unwrap();
        let v = expand(&s, &cfg);
        assert_eq!(v.support(1e-13), vec![(0, 0)]);
        assert!((v.evaluate(0.4, -0.3) - s.evaluate(0.4, -0.3)).norm() < 1e-14);
        let plain = BasisConfig::new(6, 6, CoordinateFrame::IDENTITY).unwrap();
        assert!(expand(&s, &plain).frame_mismatch);
    }
}

mod matrix {
    #![allow(unused_imports)]
    use liouville::core::*;
    use liouville::verify::*;
    use std::f64::consts::{PI, SQRT_2};

    use liouville_core::CoordinateFrame;

    #[test]
    fn zero_and_identity() {
        let cfg = BasisConfig::new(5, 6, CoordinateFrame::IDENTITY).unwrap();
        assert_eq!(assemble_matrix(&PhasePolyOperator::zero(), &cfg).unwrap().nnz(), 0);
        let id = assemble_matrix(&PhasePolyOperator::identity(), &cfg).unwrap();
        assert_eq!(id.nnz(), 30);
        assert!((0..30).all(|i| id.get(i, i) == C64::new(1.0, 0.0)));
    }

    #[test]
    fn degree_limit() {
        let cfg = BasisConfig::new(5, 5, CoordinateFrame::IDENTITY).unwrap();
        let op = PhasePolyOperator::term(Monomial::new(3, 2, 0, 0), C64::new(1.0, 0.0));
        assert_eq!(assemble_matrix(&op, &cfg).unwrap_err().kind(), "DegreeError");
    }

    #[test]
    fn chirp_conjugation_of_derivative() {
        let op = chirp_conjugate(&PhasePolyOperator::d_q(), 0.7);
        assert_eq!(op.coeff(Monomial::new(0, 0, 1, 0)), C64::new(1.0, 0.0));
        assert_eq!(op.coeff(Monomial::new(0, 1, 0, 0)), C64::new(0.0, -0.7));
    }
}
