mod linalg {
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
    fn expm_of_rotation_generator() {
        let t = 1.3;
        let a = [
            [C64::new(0.0, 0.0), C64::new(-t, 0.0)],
            [C64::new(t, 0.0), C64::new(0.0, 0.0)],
        ];
        let e = expm(&a);
        assert!((e[0][0].re - libm::cos(t)).abs() < 1e-14);
        assert!((e[1][0].re - libm::sin(t)).abs() < 1e-14);
        assert!((e[0][1].re + libm::sin(t)).abs() < 1e-14);
    }

    #[test]
    fn expm_of_nilpotent_terminates() {
        let a = [
            [C64::new(0.0, 0.0), C64::new(3.0, -1.0)],
            [C64::new(0.0, 0.0), C64::new(0.0, 0.0)],
        ];
        let e = expm(&a);
        assert!((e[0][1] - C64::new(3.0, -1.0)).norm() < 1e-14);
        assert_eq!(e[1][0], C64::new(0.0, 0.0));
    }

    #[test]
    fn solve3_matches_rhs() {
        let m = [[2.0, 1.0, 0.5], [0.0, -3.0, 1.0], [1.0, 1.0, 1.0]];
        let rhs = [1.0, 2.0, 3.0];
        let x = solve3(&m, &rhs).unwrap();
        let back = matvec3(&m, &x);
        for i in 0..3 {
            assert!((back[i] - rhs[i]).abs() < 1e-14);
        }
        assert!(solve3(&[[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 0.0, 1.0]], &rhs).is_none());
    }
}
