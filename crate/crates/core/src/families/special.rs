//! Closed-form constructions with their own entry points.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::{Field, Rational};
use crate::genus1::quartic::{form_eval, form_mul, BinaryForm};

use super::instance::{generate_points, instantiate};
use super::surface::{canonicalize, class_key, DiagonalSurface, ProjPoint};
use super::FamilyError;

/// The point `(k(8as⁴−ct⁴), k(8as⁴+ct⁴), 8kas³t, 4acst³)` on
/// `a x⁴ − a y⁴ + c z⁴ + d w⁴ = 0`, where `k⁴ = 4a²cd`.
pub fn carmichael_solution(
    a: &Rational,
    c: &Rational,
    d: &Rational,
    s: &Rational,
    t: &Rational,
) -> Result<ProjPoint, FamilyError> {
    let target = Rational::from_int(4) * a * a * c * d;
    let k = crate::algebra::field::exact_root(target.numer(), 4)
        .zip(crate::algebra::field::exact_root(target.denom(), 4))
        .map(|(n, m)| Rational::new(n, m))
        .ok_or_else(|| {
            FamilyError::Inadmissible(format!("4a²cd = {target} is not a fourth power"))
        })?;
    let eight_as4 = Rational::from_int(8) * a * s.pow(4);
    let ct4 = c.clone() * t.pow(4);
    let p = [
        k.clone() * (eight_as4.clone() - &ct4),
        k.clone() * (eight_as4 + &ct4),
        Rational::from_int(8) * &k * a * s.pow(3) * t,
        Rational::from_int(4) * a * c * s * t.pow(3),
    ];
    if p.iter().filter(|x| x.is_zero()).count() >= 2 {
        return Err(FamilyError::Degenerate(
            "trivial point (two zero coordinates)".into(),
        ));
    }
    let surf = DiagonalSurface::new([a.clone(), -a.clone(), c.clone(), d.clone()], [4; 4])?;
    debug_assert!(surf.eval(&p).is_zero());
    canonicalize(&p, &[4; 4])
}

/// Forms `(φ₁−φ₂, 2φ₂, φ₁+φ₂, φ₃)` solving `x⁴+y⁴+z⁴ = 2k²w⁴` identically,
/// given binary forms with `φ₁² + 3φ₂² = kφ₃²`.
pub fn conic_2k2_solution(
    k: &Rational,
    phi: &[BinaryForm<Rational>; 3],
) -> Result<[BinaryForm<Rational>; 4], FamilyError> {
    let d = phi.iter().map(|f| f.len()).max().unwrap_or(0);
    let pad = |f: &BinaryForm<Rational>| {
        let mut g = f.clone();
        g.resize(d, Rational::zero());
        g
    };
    let [p1, p2, p3] = [pad(&phi[0]), pad(&phi[1]), pad(&phi[2])];
    let combo = |xs: &[(Rational, &BinaryForm<Rational>)]| -> BinaryForm<Rational> {
        let mut out: BinaryForm<Rational> = Vec::new();
        for (c, f) in xs {
            if out.len() < f.len() {
                out.resize(f.len(), Rational::zero());
            }
            for (o, x) in out.iter_mut().zip(f.iter()) {
                *o = o.clone() + c.clone() * x;
            }
        }
        out
    };
    let one = Rational::from_int(1);
    let conic = combo(&[
        (one.clone(), &form_mul(&p1, &p1)),
        (Rational::from_int(3), &form_mul(&p2, &p2)),
        (-k.clone(), &form_mul(&p3, &p3)),
    ]);
    if conic.iter().any(|c| !c.is_zero()) {
        return Err(FamilyError::BadPoint(
            "forms do not solve X1² + 3X2² = kX3²".into(),
        ));
    }
    let out = [
        combo(&[(one.clone(), &p1), (-one.clone(), &p2)]),
        combo(&[(Rational::from_int(2), &p2)]),
        combo(&[(one.clone(), &p1), (one.clone(), &p2)]),
        p3,
    ];
    let fourth = |f: &BinaryForm<Rational>| {
        let sq = form_mul(f, f);
        form_mul(&sq, &sq)
    };
    let two_k2 = Rational::from_int(2) * k * k;
    let surf = combo(&[
        (one.clone(), &fourth(&out[0])),
        (one.clone(), &fourth(&out[1])),
        (one, &fourth(&out[2])),
        (-two_k2, &fourth(&out[3])),
    ]);
    debug_assert!(surf.iter().all(|c| c.is_zero()));
    Ok(out)
}

/// Evaluates forms at `(a : b)`.
pub fn eval_forms(forms: &[BinaryForm<Rational>], a: &Rational, b: &Rational) -> Vec<Rational> {
    forms.iter().map(|f| form_eval(f, a, b)).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainMember {
    pub index: i64,
    pub point: ProjPoint,
}

/// `L` pairwise non-proportional integer solutions of
/// `2X⁶ − 2Y⁶ + Z⁶ = K³W⁶`, `K = t₀⁴+6t₀³+3t₀²+2t₀−1`, from the multiples of
/// the seed on the fiber quartic.
pub fn sixth_power_chain(
    t0: &Rational,
    len: usize,
) -> Result<(Rational, Vec<ChainMember>), FamilyError> {
    let params: BTreeMap<String, Rational> = [("t0".to_string(), t0.clone())].into();
    let inst = instantiate("sec6_sextsurf_chain", &params)?;
    let k = inst.value("K").cloned().expect("derived K");
    let ms: Vec<i64> = (1..=len as i64).collect();
    let mut out: Vec<ChainMember> = Vec::with_capacity(len);
    for g in generate_points(&inst, &ms) {
        let point = g.point?;
        let key = class_key(&point, &inst.surface.exps);
        if out
            .iter()
            .any(|c| class_key(&c.point, &inst.surface.exps) == key)
        {
            return Err(FamilyError::Degenerate(format!(
                "chain repeats at index {}",
                g.m
            )));
        }
        out.push(ChainMember { index: g.m, point });
    }
    Ok((k, out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn carmichael_sample() {
        let p = carmichael_solution(&int(1), &int(1), &int(4), &int(1), &int(1)).unwrap();
        assert_eq!(p, ProjPoint::from_ints([7, 9, 8, 2]));
        assert!(carmichael_solution(&int(1), &int(1), &int(4), &int(1), &int(0)).is_err());
        assert!(carmichael_solution(&int(1), &int(1), &int(2), &int(1), &int(1)).is_err());
    }

    #[test]
    fn conic_closure() {
        // (p² − 3q², 2pq, p² + 3q²) solves the k = 1 conic; halving φ₃ gives k = 4.
        let phi = [
            vec![int(-3), int(0), int(1)],
            vec![int(0), int(2), int(0)],
            vec![int(3), int(0), int(1)],
        ];
        let f = conic_2k2_solution(&int(1), &phi).unwrap();
        let v = eval_forms(&f, &int(2), &int(1));
        assert_eq!(v, vec![int(-3), int(8), int(5), int(7)]);
        let bad = [phi[0].clone(), phi[1].clone(), vec![int(1), int(0), int(1)]];
        assert!(conic_2k2_solution(&int(1), &bad).is_err());
        let half = [
            phi[0].clone(),
            phi[1].clone(),
            vec![rat(3, 2), int(0), rat(1, 2)],
        ];
        assert!(conic_2k2_solution(&int(4), &half).is_ok());
    }

    #[test]
    fn chain_members() {
        let (k, c) = sixth_power_chain(&int(1), 3).unwrap();
        assert_eq!(k, int(11));
        assert_eq!(c[0].point, ProjPoint::from_ints([3, 2, -1, -1]));
        assert_eq!(c.len(), 3);
        assert!(sixth_power_chain(&int(1), 0).unwrap().1.is_empty());
    }
}
