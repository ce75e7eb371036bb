//! Property-based invariants: ultrametric axioms, the substitution
//! homomorphism, field arithmetic laws, and value preservation of the
//! normal-form rewrite.

use proptest::prelude::*;

use num_bigint::BigInt;
use num_rational::BigRational;
use silverline_core::algebraic::width_10_pow_neg;
use silverline_core::field::{FieldElement, NumberField};
use silverline_core::sigma::{is_normal_form, to_normal_form, SigmaIntRep};
use silverline_core::silver::SilverPolynomial;
use silverline_core::tiling::{dw_rule, ultrametric_distance, IndicatorString};

fn indicator(max_index: u8) -> impl Strategy<Value = IndicatorString> {
    prop::collection::vec(1..=max_index, 0..24).prop_map(IndicatorString::new)
}

proptest! {
    #[test]
    fn ultrametric_axioms(x in indicator(3), y in indicator(3), z in indicator(3)) {
        let dxy = ultrametric_distance(&x, &y);
        let dyx = ultrametric_distance(&y, &x);
        prop_assert_eq!(&dxy, &dyx);
        // Identity of indiscernibles on completed sequences.
        prop_assert_eq!(dxy == BigRational::new(BigInt::from(0), BigInt::from(1)), x == y);
        // Strengthened triangle inequality.
        let dxz = ultrametric_distance(&x, &z);
        let dzy = ultrametric_distance(&z, &y);
        prop_assert!(dxy <= dxz.max(dzy));
    }

    #[test]
    fn substitution_is_a_homomorphism(s in indicator(3), t in indicator(3)) {
        let sp = SilverPolynomial::new(vec![1, 0, 1]).unwrap();
        let rule = dw_rule(&sp, None).unwrap();
        let joined = rule.apply(&s.join(&t));
        prop_assert_eq!(joined, rule.apply(&s).join(&rule.apply(&t)));
    }

    #[test]
    fn normal_form_preserves_value(bits in prop::collection::vec(0u8..=1, 1..12), n in 2usize..=5) {
        let sp = SilverPolynomial::distinguished(n).unwrap();
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        let rep = SigmaIntRep::new(bits).unwrap();
        let nf = to_normal_form(&rep, n).unwrap();
        prop_assert!(is_normal_form(nf.rep(), n));
        prop_assert_eq!(nf.value(&field), rep.value(&field));
    }

    #[test]
    fn field_ring_laws(a in prop::collection::vec(-9i64..=9, 3), b in prop::collection::vec(-9i64..=9, 3), c in prop::collection::vec(-9i64..=9, 3)) {
        let sp = SilverPolynomial::distinguished(3).unwrap();
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        let mk = |v: &Vec<i64>| {
            FieldElement::from_coords(
                &field,
                v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect(),
            )
            .unwrap()
        };
        let (a, b, c) = (mk(&a), mk(&b), mk(&c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            let inv = a.inverse().unwrap();
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn inflate_multiplies_by_sigma(bits in prop::collection::vec(0u8..=1, 0..10)) {
        let sp = SilverPolynomial::new(vec![1, 0, 1]).unwrap();
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        let rep = SigmaIntRep::new(bits).unwrap();
        let sigma = FieldElement::generator(&field);
        prop_assert_eq!(rep.inflate().value(&field), &sigma * &rep.value(&field));
    }
}

#[test]
fn normal_form_uniqueness_small_sweep() {
    // Distinct normal forms of degree <= 9 have pairwise distinct exact
    // values (checked via an exact-value map).
    use std::collections::BTreeMap;
    for n in 2..=4usize {
        let sp = SilverPolynomial::distinguished(n).unwrap();
        let field = NumberField::new(sp.to_polynomial()).unwrap();
        let _root = sp.silver_number(&width_10_pow_neg(30));
        let mut seen: BTreeMap<String, Vec<u8>> = BTreeMap::new();
        for len in 1..=10usize {
            for mask in 0..(1u64 << (len - 1)) {
                let mut bits = vec![1u8];
                for j in 0..len - 1 {
                    bits.push(((mask >> j) & 1) as u8)
                }
                let rep = SigmaIntRep::new(bits.clone()).unwrap();
                if !is_normal_form(&rep, n) {
                    continue;
                }
                let key = format!("{}", rep.value(&field));
                if let Some(prev) = seen.insert(key, bits.clone()) {
                    panic!("N={n}: {prev:?} and {bits:?} share a value");
                }
            }
        }
    }
}
