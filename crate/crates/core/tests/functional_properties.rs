use proptest::prelude::*;
use santalo::functionals::{
    bs_product, mean_power, polar_radial_power_integral, radial_power_integral, s_integral, ExponentPair,
};
use santalo::quadrature::{gauss_product_rule, unit_sphere_measure, Region};
use santalo::{BodySpec, CenteredBody};

fn semiaxes(d: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.1f64..10.0, d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn s_integral_is_homogeneous(n in 1usize..=3, beta in 0.1f64..4.0, t in 0.01f64..100.0, seed in 0u64..1000) {
        let a = santalo::fixtures::random_semiaxes(seed, 0, n + 1, 50.0);
        let rule = gauss_product_rule::<f64>(n, 10, Region::Octant).unwrap();
        let s = s_integral(beta, &a, &rule).unwrap().value;
        let ta: Vec<f64> = a.iter().map(|x| x * t).collect();
        let st = s_integral(beta, &ta, &rule).unwrap().value;
        prop_assert!((st - t.powf(-beta) * s).abs() <= 1e-12 * st.abs().max(t.powf(-beta) * s));
    }

    #[test]
    fn s_integral_is_the_box_polar_integral(a in semiaxes(3), beta in 0.2f64..3.0) {
        // On the octant the box support is a·u, so J = 2^{n+1} S.
        let rule = gauss_product_rule::<f64>(2, 12, Region::Octant).unwrap();
        let d = BodySpec::box_(a.clone()).unwrap();
        let j = polar_radial_power_integral(&d, &[0.0; 3], beta, &rule).unwrap().value;
        let s = s_integral(beta, &a, &rule).unwrap().value;
        prop_assert!((j - 8.0 * s).abs() <= 1e-11 * j);
    }

    #[test]
    fn mean_power_is_monotone(a in semiaxes(3), kind in 0..3usize) {
        let spec = match kind {
            0 => BodySpec::rhombus(a),
            1 => BodySpec::box_(a),
            _ => BodySpec::ellipsoid(a),
        }.unwrap();
        let rule = gauss_product_rule::<f64>(2, 10, Region::Octant).unwrap();
        let body = CenteredBody::origin(spec);
        let m: Vec<f64> = [0.5, 1.0, 2.0, 3.0, 5.0].iter().map(|&p| mean_power(&body, p, &rule).unwrap()).collect();
        for w in m.windows(2) {
            prop_assert!(w[0] <= w[1] * (1.0 + 1e-12));
        }
    }

    #[test]
    fn ellipsoid_product_is_affine_invariant(a in semiaxes(3)) {
        let rule = gauss_product_rule::<f64>(2, 48, Region::Octant).unwrap();
        let a: Vec<f64> = a.iter().map(|x| x.clamp(0.5, 2.0)).collect();
        let pair = ExponentPair::new(3.0, 3.0, 2).unwrap();
        let p = bs_product(&BodySpec::ellipsoid(a).unwrap(), &[0.0; 3], &pair, &rule).unwrap();
        let target = unit_sphere_measure::<f64>(2).powf(2.0 / 3.0);
        prop_assert!((p - target).abs() <= 1e-8 * target);
    }

    #[test]
    fn zero_exponent_integrates_the_measure(a in semiaxes(2)) {
        let rule = gauss_product_rule::<f64>(1, 16, Region::Octant).unwrap();
        let body = CenteredBody::origin(BodySpec::box_(a).unwrap());
        let v = radial_power_integral(&body, 0.0, &rule).unwrap().value;
        prop_assert!((v - 2.0 * std::f64::consts::PI).abs() <= 1e-12);
    }

    #[test]
    fn polar_integral_convex_along_segments(a in semiaxes(3), t in 0.0f64..0.6, s in -0.6f64..0.6) {
        let rule = gauss_product_rule::<f64>(2, 10, Region::Full).unwrap();
        let spec = BodySpec::box_(a.clone()).unwrap();
        let z1 = vec![t * a[0], 0.0, 0.0];
        let z2 = vec![0.0, s * a[1], 0.0];
        let mid: Vec<f64> = z1.iter().zip(&z2).map(|(x, y)| 0.5 * (x + y)).collect();
        let j = |z: &[f64]| polar_radial_power_integral(&spec, z, 2.0, &rule).unwrap().value;
        let avg = 0.5 * (j(&z1) + j(&z2));
        prop_assert!(j(&mid) <= avg * (1.0 + 1e-10));
    }
}

#[test]
fn single_precision_agrees_with_double() {
    let a = vec![2.0, 1.0, 0.5];
    let p64 = bs_product(
        &BodySpec::<f64>::box_(a.clone()).unwrap(),
        &[0.0; 3],
        &ExponentPair::new(2.0, 3.0, 2).unwrap(),
        &gauss_product_rule::<f64>(2, 24, Region::Octant).unwrap(),
    )
    .unwrap();
    let a32: Vec<f32> = a.iter().map(|&x| x as f32).collect();
    let p32 = bs_product(
        &BodySpec::<f32>::box_(a32).unwrap(),
        &[0.0f32; 3],
        &ExponentPair::new(2.0f32, 3.0, 2).unwrap(),
        &gauss_product_rule::<f32>(2, 24, Region::Octant).unwrap(),
    )
    .unwrap();
    assert!((p32 as f64 - p64).abs() <= 1e-5 * p64);
}
