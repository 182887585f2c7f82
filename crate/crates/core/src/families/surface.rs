use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::algebra::field::is_rational_square;
use crate::algebra::{Field, Rational};

use super::FamilyError;

pub const EXPONENT_TYPES: [[u32; 4]; 6] = [
    [4, 4, 4, 4],
    [6, 6, 6, 2],
    [6, 6, 6, 3],
    [6, 6, 6, 6],
    [6, 6, 3, 2],
    [6, 6, 3, 3],
];

/// `c0·x^e0 + c1·y^e1 + c2·z^e2 + c3·w^e3 = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagonalSurface<F> {
    pub coeffs: [F; 4],
    pub exps: [u32; 4],
    pub note: String,
}

impl<F: Field> DiagonalSurface<F> {
    pub fn new(coeffs: [F; 4], exps: [u32; 4]) -> Result<Self, FamilyError> {
        if !EXPONENT_TYPES.contains(&exps) {
            return Err(FamilyError::BadSurface(format!(
                "unsupported exponents {exps:?}"
            )));
        }
        if let Some(i) = coeffs.iter().position(|c| c.is_zero()) {
            return Err(FamilyError::Degenerate(format!(
                "surface coefficient {i} vanishes"
            )));
        }
        Ok(Self {
            coeffs,
            exps,
            note: String::new(),
        })
    }

    pub fn with_note(mut self, note: &str) -> Self {
        self.note = note.to_string();
        self
    }

    pub fn eval(&self, p: &[F]) -> F {
        self.coeffs
            .iter()
            .zip(p)
            .zip(self.exps)
            .fold(F::zero(), |acc, ((c, x), e)| acc + c.clone() * &x.pow(e))
    }

    pub fn weights(&self) -> [u32; 4] {
        weights(&self.exps)
    }
}

impl DiagonalSurface<Rational> {
    /// Whether the coefficient product is a rational square (quartic case).
    pub fn abcd_is_square(&self) -> Option<bool> {
        if self.exps != [4, 4, 4, 4] {
            return None;
        }
        let prod = self.coeffs.iter().fold(Rational::one(), |a, c| a * c);
        Some(is_rational_square(&prod))
    }

    pub fn eval_int(&self, p: &ProjPoint) -> Rational {
        let q: Vec<Rational> =
            p.0.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect();
        self.eval(&q)
    }
}

impl<F: Field> fmt::Display for DiagonalSurface<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = ["x", "y", "z", "w"];
        let parts: Vec<String> = (0..4)
            .map(|i| format!("({})*{}^{}", self.coeffs[i], names[i], self.exps[i]))
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

/// Scaling weights `lcm(e)/e_i`: the class of `(x_i)` is `(λ^{w_i} x_i)`.
pub fn weights(exps: &[u32; 4]) -> [u32; 4] {
    let l = exps.iter().fold(1u32, |a, e| a.lcm(e));
    exps.map(|e| l / e)
}

/// A nontrivial solution in canonical integer coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjPoint(pub [BigInt; 4]);

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.0;
        write!(f, "({a}, {b}, {c}, {d})")
    }
}

impl ProjPoint {
    pub fn from_ints(v: [i64; 4]) -> Self {
        ProjPoint(v.map(BigInt::from))
    }

    pub fn zero_count(&self) -> usize {
        self.0.iter().filter(|x| x.is_zero()).count()
    }

    pub fn is_trivial(&self) -> bool {
        self.zero_count() >= 2
    }

    pub fn max_abs(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).max().unwrap()
    }

    /// Weighted height test `|x_i| ≤ H^{w_i}`.
    pub fn within_height(&self, h: u64, exps: &[u32; 4]) -> bool {
        let w = weights(exps);
        self.0
            .iter()
            .zip(w)
            .all(|(x, wi)| x.abs() <= num_traits::pow(BigInt::from(h), wi as usize))
    }

    /// Smallest `H` with the point inside the weighted box.
    pub fn weighted_height(&self, exps: &[u32; 4]) -> BigInt {
        let w = weights(exps);
        self.0
            .iter()
            .zip(w)
            .map(|(x, wi)| {
                let r = x.abs().nth_root(wi);
                if num_traits::pow(r.clone(), wi as usize) == x.abs() {
                    r
                } else {
                    r + 1
                }
            })
            .max()
            .unwrap()
    }

    pub fn digits(&self) -> usize {
        self.max_abs().to_string().len()
    }
}

/// Canonical integer representative of a weighted projective rational point.
///
/// Weight-one coordinates become coprime integers; remaining denominators are
/// cleared by the smallest `μ` found by trial division (exact below 10^6 per
/// prime factor); the first nonzero odd-weight coordinate is positive.
pub fn canonicalize(p: &[Rational], exps: &[u32; 4]) -> Result<ProjPoint, FamilyError> {
    if p.len() != 4 {
        return Err(FamilyError::BadPoint(format!(
            "expected 4 coordinates, got {}",
            p.len()
        )));
    }
    if p.iter().all(|x| x.is_zero()) {
        return Err(FamilyError::BadPoint("all coordinates zero".into()));
    }
    let w = weights(exps);
    let mut q: Vec<Rational> = p.to_vec();
    let unit: Vec<usize> = (0..4).filter(|&i| w[i] == 1 && !q[i].is_zero()).collect();
    if !unit.is_empty() {
        let den = unit.iter().fold(BigInt::one(), |a, &i| a.lcm(q[i].denom()));
        let num = unit.iter().fold(BigInt::zero(), |a, &i| {
            a.gcd(&(q[i].numer() * &den / q[i].denom()))
        });
        let lam = Rational::new(den, num);
        q = scale(&q, &lam, &w);
    }
    let mut mu = BigInt::one();
    for i in 0..4 {
        if w[i] > 1 && !q[i].is_zero() {
            mu = mu.lcm(&min_root_multiplier(q[i].denom(), w[i]));
        }
    }
    if !mu.is_one() {
        q = scale(&q, &Rational::from_integer(mu), &w);
    }
    if let Some(i) = (0..4).find(|&i| w[i] % 2 == 1 && !q[i].is_zero()) {
        if q[i].is_negative() {
            q = scale(&q, &-Rational::one(), &w);
        }
    }
    let coords: Vec<BigInt> = q
        .iter()
        .map(|x| {
            debug_assert!(x.is_integer());
            x.to_integer()
        })
        .collect();
    Ok(ProjPoint([
        coords[0].clone(),
        coords[1].clone(),
        coords[2].clone(),
        coords[3].clone(),
    ]))
}

/// Canonical representative of the class under weighted scaling and sign
/// changes of even-exponent coordinates.
pub fn class_key(p: &ProjPoint, exps: &[u32; 4]) -> ProjPoint {
    let q: Vec<Rational> = (0..4)
        .map(|i| {
            let x = &p.0[i];
            Rational::from_integer(if exps[i].is_multiple_of(2) {
                x.abs()
            } else {
                x.clone()
            })
        })
        .collect();
    canonicalize(&q, exps).expect("nonzero point")
}

pub fn equivalent(p: &ProjPoint, q: &ProjPoint, exps: &[u32; 4]) -> bool {
    class_key(p, exps) == class_key(q, exps)
}

fn scale(q: &[Rational], lam: &Rational, w: &[u32; 4]) -> Vec<Rational> {
    q.iter()
        .zip(w)
        .map(|(x, &wi)| x * num_traits::pow(lam.clone(), wi as usize))
        .collect()
}

/// Smallest `μ` (up to the trial-division bound) with `d | μ^k`.
fn min_root_multiplier(d: &BigInt, k: u32) -> BigInt {
    let mut rest = d.clone();
    let mut mu = BigInt::one();
    let mut p = BigInt::from(2u32);
    let bound = BigInt::from(1_000_000u32);
    while &p * &p <= rest && p <= bound {
        let mut e = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            e += 1;
        }
        if e > 0 {
            mu *= num_traits::pow(p.clone(), e.div_ceil(k) as usize);
        }
        p += if p.to_u32() == Some(2) { 1 } else { 2 };
    }
    mu * rest
}
