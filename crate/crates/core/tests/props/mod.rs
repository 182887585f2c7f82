//! Randomized invariants shared by the acceptance and property targets.
//! Every runner uses the fixed seed below so failures are reproducible.

#![allow(dead_code)]

use diagforge::algebra::{int, rat, Field, RatFn, Rational};
use diagforge::families::{canonicalize, class_key, ProjPoint, EXPONENT_TYPES};
use diagforge::genus1::{
    parametrize_conic, BirationalMap, Conic, ECPoint, Genus1Model, QuarticModel, WeierstrassCurve,
};
use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed, TestCaseError, TestRunner};

pub const SEED: u64 = 0x5eed_d1a6_0f06_e000;
pub const CASES: u32 = 128;

pub fn config() -> Config {
    Config {
        cases: CASES,
        rng_seed: RngSeed::Fixed(SEED),
        failure_persistence: None,
        ..Config::default()
    }
}

/// Runs one property; `Ok` carries the number of cases.
pub fn run<S: Strategy>(
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Result<u32, String> {
    let mut runner = TestRunner::new(config());
    runner
        .run(&strategy, test)
        .map(|_| CASES)
        .map_err(|e| e.to_string())
}

pub fn small_rat() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

pub fn nonzero_rat() -> impl Strategy<Value = Rational> {
    small_rat().prop_filter("nonzero", |q| !q.is_zero())
}

fn check(ok: bool, what: &str) -> Result<(), TestCaseError> {
    if ok {
        Ok(())
    } else {
        Err(TestCaseError::fail(what.to_string()))
    }
}

/// A random short Weierstrass curve with a rational point on it.
fn curve_with_point() -> impl Strategy<Value = (WeierstrassCurve<Rational>, ECPoint<Rational>)> {
    (small_rat(), small_rat(), small_rat()).prop_filter_map("singular", |(a, x, y)| {
        let b = &y * &y - &x * &x * &x - &a * &x;
        let e = WeierstrassCurve::new(a, b).ok()?;
        let p = e.point(x, y).ok()?;
        Some((e, p))
    })
}

/// Associativity, commutativity, inverses and identity, on multiples of a random point.
pub fn group_law() -> Result<u32, String> {
    run(
        (curve_with_point(), -4i64..=4, -4i64..=4, -4i64..=4),
        |((e, p), i, j, k)| {
            let (a, b, c) = (
                e.mul(i, &p).unwrap(),
                e.mul(j, &p).unwrap(),
                e.mul(k, &p).unwrap(),
            );
            let add = |x: &ECPoint<Rational>, y: &ECPoint<Rational>| e.add(x, y).unwrap();
            check(
                add(&add(&a, &b), &c) == add(&a, &add(&b, &c)),
                "associativity",
            )?;
            check(add(&a, &b) == add(&b, &a), "commutativity")?;
            check(add(&a, &b) == e.mul(i + j, &p).unwrap(), "multiples")?;
            check(add(&a, &e.neg(&a)).is_infinity(), "inverse")?;
            check(add(&a, &ECPoint::Infinity) == a, "identity")?;
            check(e.contains(&add(&a, &b)), "on curve")
        },
    )
}

/// `c w² = f(t)` through `(t0, 1)` with `c = f(t0)`, and the image of `(t0, −1)`.
fn quartic_case() -> impl Strategy<Value = (BirationalMap<Rational>, Vec<Rational>)> {
    (prop::collection::vec(small_rat(), 5), small_rat()).prop_filter_map(
        "degenerate quartic",
        |(mut f, t0)| {
            if f[4].is_zero() {
                f[4] = int(1);
            }
            let c = f
                .iter()
                .rev()
                .fold(Rational::zero(), |acc, x| acc * &t0 + x);
            if c.is_zero() {
                return None;
            }
            let m = QuarticModel::affine(c, f, t0.clone(), int(1)).ok()?;
            let map = BirationalMap::to_weierstrass(&Genus1Model::Quartic(m)).ok()?;
            Some((map, vec![t0, int(1), int(-1)]))
        },
    )
}

/// Weierstrass multiples of a quartic point map back onto the quartic and
/// forward again to themselves.
pub fn map_roundtrip() -> Result<u32, String> {
    run((quartic_case(), -3i64..=3), |((map, q), k)| {
        let r = map.target.mul(k, &map.forward(&q).unwrap()).unwrap();
        match map.backward(&r) {
            Ok(back) => {
                check(map.source.contains(&back), "backward lands on the quartic")?;
                check(map.forward(&back).unwrap() == r, "forward after backward")
            }
            // Exceptional points are refused rather than mapped.
            Err(_) => Ok(()),
        }
    })
}

/// Diagonal conic through a random point; the parametrization substituted
/// into the conic is the zero quartic in `a/b`.
pub fn conic_substitution() -> Result<u32, String> {
    let strat = (
        nonzero_rat(),
        nonzero_rat(),
        small_rat(),
        small_rat(),
        nonzero_rat(),
    );
    run(strat, |(a, b, x, y, z)| {
        let c = -(&a * &x * &x + &b * &y * &y) / (&z * &z);
        if c.is_zero() {
            return Ok(());
        }
        let zero = Rational::zero();
        let conic = Conic::from_coeffs([a, b, c, zero.clone(), zero.clone(), zero]);
        let par = parametrize_conic(&conic, &[x, y, z]).unwrap();
        let lift = |q: &Rational| RatFn::from_rational(q);
        let sym = Conic {
            m: conic.m.clone().map(|row| row.map(|q| lift(&q))),
        };
        let forms: [Vec<RatFn>; 3] = par.forms.clone().map(|f| f.iter().map(&lift).collect());
        let pt: [RatFn; 3] = std::array::from_fn(|i| {
            forms[i]
                .iter()
                .rev()
                .fold(RatFn::from_int(0), |acc, x| acc * &RatFn::var() + x)
        });
        check(sym.eval(&pt).is_zero(), "substitution is identically zero")?;
        check(
            conic.eval(&par.eval(&int(1), &int(0))).is_zero(),
            "point at b = 0",
        )
    })
}

/// Canonical forms are fixed points and invariant under weighted scaling.
pub fn canonical_idempotent() -> Result<u32, String> {
    let strat = (
        prop::collection::vec(small_rat(), 4),
        0..EXPONENT_TYPES.len(),
        nonzero_rat(),
    );
    run(strat, |(p, ty, lam)| {
        if p.iter().all(Zero::is_zero) {
            return Ok(());
        }
        let exps = EXPONENT_TYPES[ty];
        let w = diagforge::families::weights(&exps);
        let c = canonicalize(&p, &exps).unwrap();
        let as_rat = |q: &ProjPoint| -> Vec<Rational> {
            q.0.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        };
        check(canonicalize(&as_rat(&c), &exps).unwrap() == c, "idempotent")?;
        let scaled: Vec<Rational> = (0..4).map(|i| &p[i] * &Field::pow(&lam, w[i])).collect();
        check(
            canonicalize(&scaled, &exps).unwrap() == c,
            "scaling invariant",
        )?;
        let k = class_key(&c, &exps);
        check(class_key(&k, &exps) == k, "class key idempotent")
    })
}
