//! Property tests for the polynomial ring: ring axioms, exact division,
//! normalization, evaluation, and the parse/format round trip.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use powrel::poly::{normalize_vector, Monomial, Poly, Var};

fn arb_var() -> impl Strategy<Value = Var> {
    ((1u32..=3), (1u32..=3)).prop_map(|(r, c)| Var::new(r, c))
}

fn arb_monomial() -> impl Strategy<Value = Monomial> {
    prop::collection::vec((arb_var(), 1u32..=3), 0..=3).prop_map(Monomial::from_powers)
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((arb_monomial(), -20i64..=20), 0..=5)
        .prop_map(|terms| Poly::from_terms(terms.into_iter().map(|(m, c)| (m, BigInt::from(c)))))
}

fn arb_nonzero_poly() -> impl Strategy<Value = Poly> {
    arb_poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn arb_assignment() -> impl Strategy<Value = BTreeMap<Var, BigRational>> {
    prop::collection::vec(-9i64..=9, 9).prop_map(|values| {
        let mut map = BTreeMap::new();
        for (idx, v) in values.into_iter().enumerate() {
            let (r, c) = ((idx / 3) as u32 + 1, (idx % 3) as u32 + 1);
            map.insert(Var::new(r, c), BigRational::from_integer(v.into()));
        }
        map
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn add_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
    }

    #[test]
    fn add_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
    }

    #[test]
    fn mul_commutes(a in arb_poly(), b in arb_poly()) {
        prop_assert_eq!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn mul_associates(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn mul_distributes(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }

    #[test]
    fn identities_hold(a in arb_poly()) {
        prop_assert_eq!(a.add(&Poly::zero()), a.clone());
        prop_assert_eq!(a.mul(&Poly::one()), a.clone());
        prop_assert!(a.add(&a.neg()).is_zero());
    }

    #[test]
    fn exact_div_round_trips(p in arb_poly(), d in arb_nonzero_poly()) {
        prop_assert_eq!(p.mul(&d).exact_div(&d).unwrap(), p);
    }

    #[test]
    fn parse_format_round_trips(p in arb_poly()) {
        let text = p.to_string();
        prop_assert_eq!(Poly::parse(&text).unwrap(), p);
    }

    #[test]
    fn normalize_idempotent_and_scale_free(p in arb_poly(), c in 1i64..=20, sign in prop::bool::ANY) {
        let scale = BigInt::from(if sign { c } else { -c });
        let normalized = p.normalize();
        prop_assert_eq!(normalized.normalize(), normalized.clone());
        prop_assert_eq!(p.mul_scalar(&scale).normalize(), normalized);
    }

    #[test]
    fn normalized_vector_is_canonical(a in arb_poly(), b in arb_poly(), c in 1i64..=9) {
        let v = vec![a, b];
        let nv = normalize_vector(&v);
        prop_assert_eq!(normalize_vector(&nv), nv.clone());
        let scaled: Vec<Poly> = v.iter().map(|p| p.mul_scalar(&BigInt::from(-c))).collect();
        prop_assert_eq!(normalize_vector(&scaled), nv);
    }

    #[test]
    fn eval_is_a_ring_homomorphism(a in arb_poly(), b in arb_poly(), asg in arb_assignment()) {
        let lhs = a.mul(&b).eval(&asg).unwrap();
        let rhs = a.eval(&asg).unwrap() * b.eval(&asg).unwrap();
        prop_assert_eq!(lhs, rhs);
        let lhs = a.add(&b).eval(&asg).unwrap();
        let rhs = a.eval(&asg).unwrap() + b.eval(&asg).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn monomial_order_is_total_and_multiplicative(a in arb_monomial(), b in arb_monomial(), c in arb_monomial()) {
        // Ordering respects multiplication, as a monomial order must.
        if a < b {
            prop_assert!(a.mul(&c) < b.mul(&c));
        }
        prop_assert_eq!(a.cmp(&b), b.cmp(&a).reverse());
    }
}

#[test]
fn format_grammar_corner_cases() {
    let cases = [
        "0",
        "7",
        "-7",
        "a[1,1]",
        "-a[1,1]",
        "2*a[1,2]",
        "a[1,1]*a[2,2] - a[1,2]*a[2,1]",
        "a[3,3]^4 - 12*a[1,2]^2*a[2,1] + 1",
    ];
    for text in cases {
        let p = Poly::parse(text).unwrap();
        assert_eq!(p.to_string(), text, "canonical form of {text:?}");
    }
}
