mod props;

use diagforge::algebra::{
    int, poly_substitute, vars_from, MPoly, Monomial, NfElem, NumberField, Rational,
    RationalFunction,
};
use num_traits::Zero;
use props::{nonzero_rat, small_rat};
use proptest::prelude::*;

fn poly2() -> impl Strategy<Value = MPoly<Rational>> {
    prop::collection::vec((0u32..4, 0u32..4, small_rat()), 0..6).prop_map(|ts| {
        MPoly::from_terms(
            &vars_from(&["x", "y"]),
            ts.into_iter().map(|(i, j, c)| (Monomial(vec![i, j]), c)),
        )
    })
}

fn upoly() -> impl Strategy<Value = MPoly<Rational>> {
    prop::collection::vec(small_rat(), 1..6).prop_map(|cs| {
        MPoly::from_terms(
            &vars_from(&["x"]),
            cs.into_iter()
                .enumerate()
                .map(|(i, c)| (Monomial(vec![i as u32]), c)),
        )
    })
}

#[test]
fn shared_suites() {
    assert_eq!(props::group_law(), Ok(props::CASES));
    assert_eq!(props::map_roundtrip(), Ok(props::CASES));
    assert_eq!(props::conic_substitution(), Ok(props::CASES));
    assert_eq!(props::canonical_idempotent(), Ok(props::CASES));
}

proptest! {
    #![proptest_config(props::config())]

    #[test]
    fn ring_axioms(a in poly2(), b in poly2(), c in poly2()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(a.mul(&MPoly::one(a.vars())), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly2(), b in poly2(), x in small_rat(), y in small_rat()) {
        let pt = [x, y];
        prop_assert_eq!(a.mul(&b).eval(&pt), a.eval(&pt) * b.eval(&pt));
        prop_assert_eq!(a.add(&b).eval(&pt), a.eval(&pt) + b.eval(&pt));
    }

    #[test]
    fn mobius_substitution(
        p in upoly(),
        m in (small_rat(), small_rat(), small_rat(), small_rat()),
        t0 in small_rat(),
    ) {
        let (a, b, c, d) = m;
        prop_assume!(&a * &d != &b * &c);
        let tv = vars_from(&["t"]);
        let t = MPoly::var(&tv, 0);
        let lin = |k: &Rational, l: &Rational| t.scale(k).add(&MPoly::constant(&tv, l.clone()));
        let sub = RationalFunction::new(lin(&a, &b), lin(&c, &d)).unwrap();
        let r = poly_substitute(&p, &[sub]).unwrap();
        let den = &c * &t0 + &d;
        prop_assume!(!den.is_zero());
        let x = (&a * &t0 + &b) / den;
        let got = r.num().eval(std::slice::from_ref(&t0)) / r.den().eval(&[t0]);
        prop_assert_eq!(got, p.eval(&[x]));
    }

    #[test]
    fn norm_is_multiplicative(
        u in prop::collection::vec(small_rat(), 3),
        v in prop::collection::vec(nonzero_rat(), 3),
    ) {
        let k = NumberField::new("cbrt2", [-2, 0, 0, 1].map(int).to_vec()).unwrap();
        let (x, y) = (NfElem::new(&k, u), NfElem::new(&k, v));
        let (nx, ny) = (x.norm(), y.norm());
        prop_assert_eq!((x * y).norm(), nx * ny);
    }
}
