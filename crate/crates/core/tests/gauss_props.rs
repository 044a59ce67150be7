use liouville_core::*;
use proptest::prelude::*;

/// Complete-the-square oracle: conjugate the annihilators
/// `A1 = ∂Q + 4μQ + iκr`, `A2 = ∂r + iκQ + (μ+ν)r` and read the new
/// exponent from `D⁻¹X`.
fn oracle(id: GeneratorId, p: f64, s: &GaussianState) -> GaussianState {
    let i = C64::new(0.0, 1.0);
    let a1 = LinearPhaseOperator::new(C64::new(4.0 * s.mu, 0.0), i * s.kappa, C64::new(1.0, 0.0), C64::new(0.0, 0.0));
    let a2 = LinearPhaseOperator::new(i * s.kappa, C64::new(s.mu + s.nu, 0.0), C64::new(0.0, 0.0), C64::new(1.0, 0.0));
    let (b1, b2) = (conjugate_linear(id, p, &a1), conjugate_linear(id, p, &a2));
    let det = b1.dq * b2.dr - b1.dr * b2.dq;
    let inv = [[b2.dr / det, -b1.dr / det], [-b2.dq / det, b1.dq / det]];
    let x = [[b1.q, b1.r], [b2.q, b2.r]];
    let m = |a: usize, b: usize| inv[a][0] * x[0][b] + inv[a][1] * x[1][b];
    let mu = m(0, 0).re / 4.0;
    let kappa = (m(0, 1) / i).re;
    GaussianState { mu, kappa, nu: m(1, 1).re - mu }
}

fn physical() -> impl Strategy<Value = GaussianState> {
    (0.05..2.0f64, -1.5..1.5f64, 0.0..2.0f64).prop_map(|(mu, kappa, nu)| GaussianState::new(mu, kappa, nu).unwrap())
}

fn generator_id() -> impl Strategy<Value = GeneratorId> {
    (0usize..7).prop_map(|i| GeneratorId::ALL[i])
}

/// A parameter inside the window, drawn by a fraction of its width.
fn inside(id: GeneratorId, s: &GaussianState, t: f64) -> f64 {
    let (lo, hi) = positivity_window(id, s);
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => lo + t * (hi - lo),
        (true, false) => lo + 2.0 * t,
        _ => 2.0 * t - 1.0,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn maps_match_complete_the_square(id in generator_id(), s in physical(), t in 0.0..1.0f64) {
        let p = inside(id, &s, t);
        let a = transform_gaussian(id, p, &s).unwrap();
        let b = oracle(id, p, &s);
        prop_assert!(a.max_abs_diff(&b) <= 1e-10 * (1.0 + b.mu.abs() + b.kappa.abs() + b.nu.abs()), "{:?} {} {:?} {:?}", id, p, a, b);
    }

    #[test]
    fn window_endpoints_are_pure_boundary(id in generator_id(), s in physical()) {
        let (lo, hi) = positivity_window(id, &s);
        for e in [lo, hi].into_iter().filter(|x| x.is_finite()) {
            let out = transform_gaussian(id, e, &s).unwrap();
            prop_assert!(out.nu.abs() <= 1e-12 * (1.0 + out.mu + s.mu + s.nu), "{:?} {} {:?}", id, e, out);
        }
    }

    #[test]
    fn one_parameter_group_law(id in generator_id(), s in physical(), t1 in 0.0..1.0f64, t2 in 0.0..1.0f64) {
        // Both factors and their sum stay where the unchecked map is defined.
        let a = 0.3 * (inside(id, &s, t1) .clamp(-3.0, 3.0));
        let b = 0.3 * (inside(id, &s, t2).clamp(-3.0, 3.0));
        let first = transform_gaussian(id, b, &s).unwrap();
        if let (Ok(two), Ok(one)) = (transport_gaussian(&[Step::new(id, a)], &first), transform_gaussian(id, a + b, &s)) {
            prop_assert!(two.max_abs_diff(&one) <= 1e-12 * (1.0 + one.mu + one.kappa.abs() + one.nu.abs()));
        }
    }

    #[test]
    fn outside_window_is_rejected(s in physical()) {
        let (_, hi) = positivity_window(GeneratorId::L2PLUS, &s);
        let err = transform_gaussian(GeneratorId::L2PLUS, hi + 0.1, &s).unwrap_err();
        prop_assert_eq!(err.kind(), "PositivityViolation");
    }
}

#[test]
fn trace_is_preserved() {
    let s = GaussianState::new(0.3, 0.4, 0.5).unwrap();
    for id in GeneratorId::ALL {
        let p = inside(id, &s, 0.37);
        let out = transform_gaussian(id, p, &s).unwrap();
        // ∫ f(x, 0) dx by the trapezoidal rule, which is spectrally accurate here.
        let h = 0.01;
        let total: f64 = (-4000..=4000).map(|k| out.evaluate(k as f64 * h, 0.0).re * h).sum();
        assert!((total - 1.0).abs() < 1e-12, "{id:?}: {total}");
    }
}

#[test]
fn cl_and_hpz_stationary_states_from_kl() {
    // [G2(η), U1(φ)] carries the KL state into the CL state; G1(ζ) then gives HPZ.
    let (w, gamma, b) = (1.0, 0.6, 1.0);
    let cl = ModelPreset::cl_from_kl_temperature(w, gamma, b).unwrap();
    let c = cl.coefficients();
    let plan = reduce_to_kl(&c, b).unwrap();
    let s = apply_plan_gaussian(&liouville_core::spectrum::inverse_steps(&plan), &GaussianState::thermal(b).unwrap()).unwrap();
    let expected = cl.stationary().unwrap();
    assert!(s.max_abs_diff(&expected) < 1e-12, "{s:?} {expected:?}");
    assert!((delta(&s) - 1.0).abs() < 1e-12);

    let hpz = ModelPreset::Hpz { omega0_prime: 1.0, gamma: 0.6, b_hpz: 1.0, d: 0.2 };
    let (s, frame) = stationary_preset(&hpz).unwrap();
    assert!((s.mu - 1.0 / 4.4).abs() < 1e-15 && (s.mu + s.nu - 1.0).abs() < 1e-15);
    assert!((frame.q_scale - libm::sqrt(2.2)).abs() < 1e-15 && (frame.r_scale - libm::sqrt(0.5)).abs() < 1e-15);
}

#[test]
fn overdamped_or_nonpositive_presets_fail() {
    let bad = ModelPreset::Hpz { omega0_prime: 1.0, gamma: 0.6, b_hpz: 0.1, d: 1.0 };
    assert_eq!(stationary_preset(&bad).unwrap_err().kind(), "PositivityViolation");
    let od = ModelPreset::Cl { omega0_prime: 0.1, gamma: 0.6, b_cl: 1.0 };
    assert_eq!(stationary_preset(&od).unwrap_err().kind(), "OverdampedError");
}
