//! Exact point checks and the exhaustive height-bounded search oracle.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::algebra::Rational;
use crate::families::{
    class_key, generate_points, weights, DiagonalSurface, ProjPoint, SurfaceInstance,
};

use super::VerifyError;

#[derive(Clone, Debug, PartialEq)]
pub enum CheckOutcome {
    Accepted,
    /// The exact surface value, and whether the point is trivial.
    Rejected {
        value: Rational,
        trivial: bool,
    },
}

/// Accepts iff the surface vanishes exactly and at most one coordinate is zero.
pub fn check_point(
    s: &DiagonalSurface<Rational>,
    p: &[BigInt; 4],
) -> Result<CheckOutcome, VerifyError> {
    if p.iter().all(|x| x.is_zero()) {
        return Err(VerifyError::BadPoint("all coordinates are zero".into()));
    }
    let pp = ProjPoint(p.clone());
    let value = s.eval_int(&pp);
    let trivial = pp.is_trivial();
    Ok(if value.is_zero() && !trivial {
        CheckOutcome::Accepted
    } else {
        CheckOutcome::Rejected { value, trivial }
    })
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub surface: DiagonalSurface<Rational>,
    pub height: u64,
    /// Class representatives (see `class_key`), sorted.
    pub points: Vec<ProjPoint>,
    pub elapsed: Duration,
    pub scanned: u64,
}

/// Integer coefficients proportional to the surface's.
fn integral_coeffs(s: &DiagonalSurface<Rational>) -> [BigInt; 4] {
    let l = s.coeffs.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
    s.coeffs
        .clone()
        .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
}

struct Kernel {
    coeffs: [BigInt; 4],
    small: Option<[i128; 4]>,
    exps: [u32; 4],
    bound3: BigInt,
}

impl Kernel {
    fn partial(&self, x: [i64; 3]) -> BigInt {
        if let Some(c) = self.small {
            let mut acc: i128 = 0;
            let ok = (0..3).all(|i| {
                let t = (x[i] as i128)
                    .checked_pow(self.exps[i])
                    .and_then(|v| v.checked_mul(c[i]))
                    .and_then(|v| acc.checked_add(v));
                t.map(|v| acc = v).is_some()
            });
            if ok {
                return BigInt::from(acc);
            }
        }
        (0..3).fold(BigInt::zero(), |a, i| {
            a + &self.coeffs[i] * num_traits::pow(BigInt::from(x[i]), self.exps[i] as usize)
        })
    }

    /// All `w` with `c₃ w^e₃ = −partial` and `|w| ≤ bound3`, `w ≥ 0` for even `e₃`.
    fn last(&self, partial: &BigInt) -> Option<BigInt> {
        let (q, r) = (-partial).div_rem(&self.coeffs[3]);
        if !r.is_zero() {
            return None;
        }
        let e = self.exps[3];
        if q.is_negative() && e.is_multiple_of(2) {
            return None;
        }
        let root = match q.abs().to_u128() {
            Some(v) => BigInt::from(v.nth_root(e)),
            None => q.abs().nth_root(e),
        };
        if num_traits::pow(root.clone(), e as usize) != q.abs() || root > self.bound3 {
            return None;
        }
        Some(if q.is_negative() { -root } else { root })
    }
}

fn range(bound: i64, exp: u32) -> std::ops::RangeInclusive<i64> {
    if exp.is_multiple_of(2) {
        0..=bound
    } else {
        -bound..=bound
    }
}

/// Every nontrivial solution inside the weighted box `|xᵢ| ≤ H^{wᵢ}`, as sorted
/// class representatives. The output does not depend on `threads`.
pub fn brute_search(
    s: &DiagonalSurface<Rational>,
    h: u64,
    threads: usize,
) -> Result<SearchResult, VerifyError> {
    if h == 0 {
        return Err(VerifyError::BadPoint(
            "height bound must be at least 1".into(),
        ));
    }
    let start = Instant::now();
    let w = weights(&s.exps);
    let bounds: Vec<i64> = w
        .iter()
        .map(|&wi| {
            h.checked_pow(wi)
                .and_then(|b| i64::try_from(b).ok())
                .ok_or_else(|| VerifyError::BadPoint("height bound too large".into()))
        })
        .collect::<Result<_, _>>()?;
    let coeffs = integral_coeffs(s);
    let small = coeffs.clone().map(|c| c.to_i128());
    let kernel = Kernel {
        small: small
            .iter()
            .all(Option::is_some)
            .then(|| small.map(Option::unwrap)),
        coeffs,
        exps: s.exps,
        bound3: BigInt::from(bounds[3]),
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
        .map_err(|e| VerifyError::BadPoint(e.to_string()))?;
    let exps = s.exps;
    let xs: Vec<i64> = range(bounds[0], exps[0]).collect();
    let found: Vec<(u64, Vec<ProjPoint>)> = pool.install(|| {
        xs.par_iter()
            .map(|&x| {
                let mut out = vec![];
                let mut n = 0u64;
                for y in range(bounds[1], exps[1]) {
                    for z in range(bounds[2], exps[2]) {
                        n += 1;
                        let Some(wv) = kernel.last(&kernel.partial([x, y, z])) else {
                            continue;
                        };
                        let p = ProjPoint([x.into(), y.into(), z.into(), wv]);
                        if p.zero_count() < 2 {
                            out.push(class_key(&p, &exps));
                        }
                    }
                }
                (n, out)
            })
            .collect()
    });
    let scanned = found.iter().map(|(n, _)| n).sum();
    let set: BTreeSet<ProjPoint> = found.into_iter().flat_map(|(_, v)| v).collect();
    Ok(SearchResult {
        surface: s.clone(),
        height: h,
        points: set.into_iter().collect(),
        elapsed: start.elapsed(),
        scanned,
    })
}

#[derive(Clone, Debug)]
pub struct CrossReport {
    /// Generated points inside the box, with their index.
    pub generated: Vec<(i64, ProjPoint)>,
    /// Generated inside the box but absent from the scan; must be empty.
    pub missed: Vec<ProjPoint>,
    /// Found by the scan but not generated.
    pub extra: Vec<ProjPoint>,
    pub search: SearchResult,
}

impl CrossReport {
    pub fn consistent(&self) -> bool {
        self.missed.is_empty()
    }
}

pub fn cross_validate(
    inst: &SurfaceInstance<Rational>,
    h: u64,
    multiples: &[i64],
    threads: usize,
) -> Result<CrossReport, VerifyError> {
    let exps = inst.surface.exps;
    let search = brute_search(&inst.surface, h, threads)?;
    let generated: Vec<(i64, ProjPoint)> = generate_points(inst, multiples)
        .into_iter()
        .filter_map(|g| g.point.ok().map(|p| (g.m, p)))
        .filter(|(_, p)| p.within_height(h, &exps))
        .collect();
    let keys: BTreeSet<ProjPoint> = generated.iter().map(|(_, p)| class_key(p, &exps)).collect();
    let found: BTreeSet<&ProjPoint> = search.points.iter().collect();
    let missed = keys
        .iter()
        .filter(|k| !found.contains(k))
        .cloned()
        .collect();
    let extra = search
        .points
        .iter()
        .filter(|p| !keys.contains(*p))
        .cloned()
        .collect();
    Ok(CrossReport {
        generated,
        missed,
        extra,
        search,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;

    fn surf(c: [i64; 4], e: [u32; 4]) -> DiagonalSurface<Rational> {
        DiagonalSurface::new(c.map(int), e).unwrap()
    }

    fn pt(v: [i64; 4]) -> [BigInt; 4] {
        v.map(BigInt::from)
    }

    #[test]
    fn point_checks() {
        let s = surf([1, 1, -36, 2], [6, 6, 6, 3]);
        assert_eq!(
            check_point(&s, &pt([37, 17, 21, 629])).unwrap(),
            CheckOutcome::Accepted
        );
        let q = surf([1, 1, -2, -14], [4; 4]);
        assert_eq!(
            check_point(&q, &pt([0, 2, 1, -1])).unwrap(),
            CheckOutcome::Accepted
        );
        let one = surf([1, 1, 1, 1], [4; 4]);
        assert_eq!(
            check_point(&one, &pt([1, 1, 1, 1])).unwrap(),
            CheckOutcome::Rejected {
                value: int(4),
                trivial: false
            }
        );
        assert!(check_point(&one, &pt([0, 0, 0, 0])).is_err());
    }

    #[test]
    fn small_searches() {
        let q = surf([1, 1, -2, -14], [4; 4]);
        let r = brute_search(&q, 3, 2).unwrap();
        assert!(r.points.contains(&ProjPoint::from_ints([0, 2, 1, 1])));
        assert!(brute_search(&surf([1, 1, 1, 1], [4; 4]), 10, 4)
            .unwrap()
            .points
            .is_empty());
        let s = surf([1, 1, -36, 2], [6, 6, 6, 3]);
        let r = brute_search(&s, 40, 3).unwrap();
        assert!(r.points.contains(&ProjPoint::from_ints([37, 17, 21, 629])));
        assert!(brute_search(&q, 0, 1).is_err());
    }
}
