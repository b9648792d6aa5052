use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use santalo::bounds::{
    admissible, alpha_star, boundary_sign_condition, classify_exact, fit_slope, pest_exponents, qest_exponents,
};
use santalo::functionals::ExponentPair;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

proptest! {
    #[test]
    fn equivalence_in_exact_arithmetic(n in 1usize..=4, ap in 1i64..500, aq in 1i64..30, bp in 1i64..500, bq in 1i64..30) {
        let c = classify_exact(&q(ap, aq), &q(bp, bq), n).unwrap();
        prop_assert_eq!(c.main_holds, c.star_holds);
    }

    #[test]
    fn main_condition_matches_float_oracle(n in 1usize..=4, alpha in 0.05f64..50.0, beta in 0.05f64..50.0) {
        // Away from the boundary a plain float evaluation decides the same way.
        let nf = n as f64;
        let (c1, c2) = (nf / alpha + 1.0 / beta - 1.0, 1.0 / alpha + nf / beta - 1.0);
        prop_assume!(c1.abs() > 1e-9 && c2.abs() > 1e-9);
        let adm = admissible(&ExponentPair::new(alpha, beta, n).unwrap()).unwrap();
        prop_assert_eq!(adm.main_holds, c1 > 0.0 && c2 > 0.0);
    }

    #[test]
    fn alpha_star_is_the_boundary(n in 1usize..=4, alpha in 1.01f64..50.0) {
        // At β = α*(α) one of the two defining inequalities is tight.
        let s = alpha_star(alpha, n).unwrap();
        let nf = n as f64;
        let tight = (nf / alpha + 1.0 / s - 1.0).abs().min((1.0 / alpha + nf / s - 1.0).abs());
        prop_assert!(tight <= 1e-12);
    }

    #[test]
    fn sign_condition_on_boundary(n in 1usize..=4, p in 1i64..1000, d in 1i64..50) {
        let alpha = q(n as i64 + 1, 1) + q(p, d);
        prop_assert!(boundary_sign_condition(&alpha, n).unwrap());
    }

    #[test]
    fn pest_reverses_and_negates_qest(n in 1usize..=4, x in 0.1f64..10.0) {
        prop_assume!((x - x.round()).abs() > 1e-6);
        let qe = qest_exponents(x, n).unwrap();
        let pe = pest_exponents(x, n).unwrap();
        for (a, b) in qe.iter().rev().zip(&pe) {
            prop_assert_eq!(-a, *b);
        }
    }

    #[test]
    fn qest_exponents_sum_to_minus_beta(n in 1usize..=4, beta in 0.1f64..10.0) {
        // S(β, t a) = t^{-β} S(β, a) forces the monomial to be degree -β.
        prop_assume!((beta - beta.round()).abs() > 1e-6);
        let e = qest_exponents(beta, n).unwrap();
        let sum: f64 = e.iter().sum();
        prop_assert!((sum + beta).abs() <= 1e-12);
    }

    #[test]
    fn fit_recovers_lines(m in -3.0f64..3.0, c in -5.0f64..5.0, count in 3usize..20) {
        let xs: Vec<f64> = (0..count).map(|i| i as f64 * 0.5).collect();
        let ys: Vec<f64> = xs.iter().map(|x| m * x + c).collect();
        let f = fit_slope(&xs, &ys).unwrap();
        prop_assert!((f.slope - m).abs() <= 1e-10);
        prop_assert!((f.intercept - c).abs() <= 1e-10);
        prop_assert!((0.0..=1.0 + 1e-12).contains(&f.r_squared));
    }
}
