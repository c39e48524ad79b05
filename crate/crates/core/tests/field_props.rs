use std::sync::Arc;

use braidcyc::scalar::{cyclotomic_polynomial, root_sum_check, Cyclo, CyclotomicField};
use proptest::prelude::*;

fn totient(n: usize) -> usize {
    (1..=n).filter(|&k| gcd(k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A random element `Σ c_k ζ^k / den` over the full power range `0..n`, so
/// reduction mod Φ_n is exercised.
fn element(field: &Arc<CyclotomicField>, coeffs: &[i64], den: i64) -> Cyclo {
    let mut acc = Cyclo::zero(field);
    for (k, &c) in coeffs.iter().enumerate() {
        acc += &(&Cyclo::from_ratio(field, c, den) * &Cyclo::zeta_power(field, k as i64));
    }
    acc
}

fn arb_triple() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>, i64)> {
    (1usize..=8).prop_flat_map(|n| {
        let c = || prop::collection::vec(-4i64..=4, n);
        (Just(n), c(), c(), c(), 1i64..=5)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((n, a, b, c, den) in arb_triple()) {
        let f = CyclotomicField::new(n);
        let (a, b, c) = (element(&f, &a, den), element(&f, &b, 1), element(&f, &c, 1));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, Cyclo::zero(&f));
        prop_assert_eq!(&a + &(-&a), Cyclo::zero(&f));
        prop_assert_eq!(&a * &Cyclo::one(&f), a.clone());
    }

    #[test]
    fn nonzero_elements_invert((n, a, _b, _c, den) in arb_triple()) {
        let f = CyclotomicField::new(n);
        let a = element(&f, &a, den);
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert_eq!(inv.inv().unwrap(), a);
    }

    #[test]
    fn canonical_form_across_paths(n in 1usize..=8, k in -20i64..20, j in -20i64..20) {
        let f = CyclotomicField::new(n);
        let z = Cyclo::zeta_power(&f, 1);
        let direct = Cyclo::zeta_power(&f, k + j);
        let product = &Cyclo::zeta_power(&f, k) * &Cyclo::zeta_power(&f, j);
        let shifted = Cyclo::zeta_power(&f, k + j + 3 * n as i64);
        prop_assert_eq!(&direct, &product);
        prop_assert_eq!(&direct, &shifted);
        prop_assert_eq!(direct.coeffs(), product.coeffs());
        let e = (k + j).rem_euclid(n as i64) as u64;
        prop_assert_eq!(z.pow(e), direct);
    }

    #[test]
    fn serialization_round_trip((n, a, _b, _c, den) in arb_triple()) {
        let f = CyclotomicField::new(n);
        let a = element(&f, &a, den);
        let s = a.to_strings();
        prop_assert_eq!(s.len(), f.degree());
        prop_assert_eq!(Cyclo::from_strings(&f, &s).unwrap(), a);
    }
}

#[test]
fn roots_of_unity_have_order_n_and_kill_phi() {
    for n in 1..=12 {
        let f = CyclotomicField::new(n);
        let phi = cyclotomic_polynomial(n);
        assert_eq!(phi.len() - 1, totient(n), "deg Φ_{n}");
        assert!(phi.last().unwrap() == &num_rational_one(), "Φ_{n} monic");
        for k in 0..n as i64 {
            let z = Cyclo::zeta_power(&f, k);
            assert!(z.pow(n as u64).is_one());
            // primitive roots are exactly the roots of Φ_n
            let primitive = gcd(k as usize, n) == 1;
            assert_eq!(z.eval_poly(&phi).is_zero(), primitive, "n={n} k={k}");
        }
    }
}

fn num_rational_one() -> num_rational::BigRational {
    num_rational::BigRational::from_integer(1.into())
}

#[test]
fn character_orthogonality() {
    // Σ_a ζ^{ab} = n δ_{b,0}, and the normalised double sum is 1
    for n in 1..=8usize {
        let f = CyclotomicField::new(n);
        let mut double = Cyclo::zero(&f);
        for b in 0..n as i64 {
            let mut s = Cyclo::zero(&f);
            for a in 0..n as i64 {
                s += &Cyclo::zeta_power(&f, a * b);
            }
            let expected = if b == 0 { Cyclo::from_int(&f, n as i64) } else { Cyclo::zero(&f) };
            assert_eq!(s, expected, "n={n} b={b}");
            let normalised = root_sum_check(&f, b);
            assert_eq!(normalised.is_one(), b == 0);
            assert_eq!(normalised.is_zero(), b != 0);
            double += &s;
        }
        assert!((&double * &Cyclo::from_ratio(&f, 1, n as i64)).is_one(), "n={n}");
    }
}

#[test]
fn mixing_fields_is_an_error() {
    let a = Cyclo::one(&CyclotomicField::new(3));
    let b = Cyclo::one(&CyclotomicField::new(4));
    assert!(a.try_add(&b).is_err());
    assert!(a.try_mul(&b).is_err());
}
