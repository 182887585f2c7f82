//! Resolving a family at concrete parameter values and generating points.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::algebra::field::exact_root;
use crate::algebra::{parse_rational, vars_from, Field, MPoly, Rational, Vars};
use crate::genus1::{
    parametrize_conic, Conic, ConicParam, FiberGroup, Genus1Error, Genus1Model, PlaneCubic,
    QuadricIntersection, QuarticModel,
};

use super::registry::{family, CurveTemplate, Derived, FamilySpec};
use super::surface::{canonicalize, DiagonalSurface, ProjPoint};
use super::template::{binary_form, compile, eval_fraction, Specializer};
use super::FamilyError;

/// The curve whose points pull back to the surface.
#[derive(Clone, Debug)]
#[allow(clippy::large_enum_variant)]
pub enum Fiber<F> {
    Genus1 { group: FiberGroup<F>, seed: Vec<F> },
    Line,
    Conic(ConicParam<F>),
}

#[derive(Clone, Debug)]
pub struct SurfaceInstance<F> {
    pub spec: &'static FamilySpec,
    /// Parameters followed by derived values.
    pub values: Vec<(String, F)>,
    pub surface: DiagonalSurface<F>,
    pub fiber: Fiber<F>,
    /// Order of a torsion seed, filled in over ℚ.
    pub seed_order: Option<u32>,
    pullback: Vec<(MPoly<F>, MPoly<F>)>,
}

fn lift(e: Genus1Error) -> FamilyError {
    match e {
        Genus1Error::Singular(s) => FamilyError::Degenerate(s),
        Genus1Error::Indeterminate(s) => FamilyError::Indeterminate(s),
        other => FamilyError::Genus1(other),
    }
}

fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    Some(Rational::new(
        exact_root(q.numer(), k)?,
        exact_root(q.denom(), k)?,
    ))
}

struct Scope<'a, F> {
    names: Vec<&'a str>,
    values: Vec<F>,
}

impl<'a, F: Field> Scope<'a, F> {
    fn vars(&self, coords: &[&str]) -> Vars {
        let all: Vec<&str> = self
            .names
            .iter()
            .copied()
            .chain(coords.iter().copied())
            .collect();
        vars_from(&all)
    }

    fn spec(&self, coords: &[&str]) -> Specializer<F> {
        Specializer::new(self.values.clone(), coords)
    }

    fn constant(&self, src: &str) -> Result<F, FamilyError> {
        self.spec(&[]).constant(&compile(src, &self.vars(&[]))?)
    }

    fn constants<const N: usize>(&self, srcs: &[&str; N]) -> Result<[F; N], FamilyError> {
        let v: Vec<F> = srcs
            .iter()
            .map(|s| self.constant(s))
            .collect::<Result<_, _>>()?;
        Ok(v.try_into().unwrap_or_else(|_| unreachable!()))
    }

    fn polynomial(&self, src: &str, coords: &[&str]) -> Result<MPoly<F>, FamilyError> {
        self.spec(coords)
            .polynomial(&compile(src, &self.vars(coords))?)
    }

    fn derive(&mut self, d: &'a Derived) -> Result<(), FamilyError> {
        let v = match d {
            Derived::Value(_, e) => self.constant(e)?,
            Derived::Root(_, e, k) => {
                let x = self.constant(e)?;
                let q = x.to_rational().ok_or_else(|| {
                    FamilyError::BadParam(format!("root of {e} needs rational parameters"))
                })?;
                let r = rational_root(&q, *k).ok_or_else(|| {
                    FamilyError::Inadmissible(format!("{e} = {q} is not a rational {k}-th power"))
                })?;
                F::from_rational(&r)
            }
            Derived::FormAt(_, form, vars, at) => {
                let p = self.polynomial(form, vars)?;
                p.eval(&self.constants(at)?)
            }
        };
        self.names.push(d.name());
        self.values.push(v);
        Ok(())
    }
}

/// Resolves `spec` at field values; absent parameters take their defaults.
pub fn instantiate_with<F: Field>(
    spec: &'static FamilySpec,
    given: &BTreeMap<String, F>,
) -> Result<SurfaceInstance<F>, FamilyError> {
    if let Some(n) = given
        .keys()
        .find(|n| spec.params.iter().all(|p| p.name != n.as_str()))
    {
        return Err(FamilyError::BadParam(format!(
            "{} has no parameter {n}",
            spec.id
        )));
    }
    let mut scope = Scope {
        names: vec![],
        values: vec![],
    };
    for p in spec.params {
        let v = match given.get(p.name) {
            Some(v) => v.clone(),
            None => F::from_rational(&parse_rational(p.default).expect("valid default")),
        };
        scope.names.push(p.name);
        scope.values.push(v);
    }
    for ex in spec.exclusions {
        if scope.constant(ex.expr)?.is_zero() {
            return Err(FamilyError::Inadmissible(ex.message.to_string()));
        }
    }
    for d in spec.derived {
        scope.derive(d)?;
    }
    let coeffs = scope.constants(&spec.surface)?;
    let surface = DiagonalSurface::new(coeffs, spec.exps)?.with_note(spec.annotation);

    let coords = spec.curve.coords();
    let fiber = match &spec.curve {
        CurveTemplate::Quadrics {
            qa,
            qb,
            origin,
            seed,
            ..
        } => {
            let qi = QuadricIntersection::new(
                scope.polynomial(qa, &coords)?,
                scope.polynomial(qb, &coords)?,
                scope.constants(origin)?,
            )
            .map_err(lift)?;
            genus1_fiber(Genus1Model::Quadrics(qi), scope.constants(seed)?.to_vec())?
        }
        CurveTemplate::Quartic {
            c, f, origin, seed, ..
        } => {
            let form = binary_form(&scope.polynomial(f, &coords[..2])?, 4)?;
            let m = QuarticModel::new(scope.constant(c)?, form, scope.constants(origin)?)
                .map_err(lift)?;
            genus1_fiber(Genus1Model::Quartic(m), scope.constants(seed)?.to_vec())?
        }
        CurveTemplate::Cubic {
            f, origin, seed, ..
        } => {
            let c = PlaneCubic::new(scope.polynomial(f, &coords)?, scope.constants(origin)?)
                .map_err(lift)?;
            genus1_fiber(Genus1Model::Cubic(c), scope.constants(seed)?.to_vec())?
        }
        CurveTemplate::Line { .. } => Fiber::Line,
        CurveTemplate::Conic { form, base, .. } => {
            let conic = Conic::from_poly(&scope.polynomial(form, &coords)?).map_err(lift)?;
            Fiber::Conic(parametrize_conic(&conic, &scope.constants(base)?).map_err(lift)?)
        }
    };
    let sp = scope.spec(&coords);
    let vars = scope.vars(&coords);
    let pullback = spec
        .pullback
        .iter()
        .map(|s| sp.fraction(&compile(s, &vars)?))
        .collect::<Result<Vec<_>, _>>()?;
    let values = scope
        .names
        .iter()
        .map(|n| n.to_string())
        .zip(scope.values)
        .collect();
    let inst = SurfaceInstance {
        spec,
        values,
        surface,
        fiber,
        seed_order: None,
        pullback,
    };
    inst.check_seed()?;
    Ok(inst)
}

fn genus1_fiber<F: Field>(model: Genus1Model<F>, seed: Vec<F>) -> Result<Fiber<F>, FamilyError> {
    if !model.contains(&seed) {
        return Err(FamilyError::Inadmissible(
            "seed is not on the fiber curve".into(),
        ));
    }
    let group = model.group().map_err(lift)?;
    Ok(Fiber::Genus1 { group, seed })
}

/// Resolves a registered family over ℚ and records the seed's order when it
/// is torsion.
pub fn instantiate(
    id: &str,
    params: &BTreeMap<String, Rational>,
) -> Result<SurfaceInstance<Rational>, FamilyError> {
    let mut inst = instantiate_with(family(id)?, params)?;
    if let Fiber::Genus1 { group, seed } = &inst.fiber {
        inst.seed_order = group.small_order(seed).map_err(lift)?;
    }
    Ok(inst)
}

impl<F: Field> SurfaceInstance<F> {
    pub fn value(&self, name: &str) -> Option<&F> {
        self.values.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    /// The fiber point indexed by `m`: `m·seed`, or the parameter `(m : 1)`.
    pub fn fiber_point(&self, m: i64) -> Result<Vec<F>, FamilyError> {
        let mf = F::from_int(m);
        Ok(match &self.fiber {
            Fiber::Genus1 { group, seed } => group.mul(m, seed).map_err(lift)?,
            Fiber::Line => vec![mf, F::one()],
            Fiber::Conic(c) => c.eval(&mf, &F::one()).to_vec(),
        })
    }

    pub fn pull(&self, pt: &[F]) -> Result<Vec<F>, FamilyError> {
        let v: Vec<F> = self
            .pullback
            .iter()
            .map(|nd| eval_fraction(nd, pt))
            .collect::<Option<_>>()
            .ok_or_else(|| FamilyError::Indeterminate("pullback denominator vanishes".into()))?;
        if v.iter().all(|x| x.is_zero()) {
            return Err(FamilyError::Indeterminate(
                "pullback vanishes identically here".into(),
            ));
        }
        Ok(v)
    }

    /// Surface point for index `m`, checked exactly and for non-triviality.
    pub fn point(&self, m: i64) -> Result<Vec<F>, FamilyError> {
        if m == 0 {
            return Err(FamilyError::BadParam("multiples must be nonzero".into()));
        }
        let mut p = self.pull(&self.fiber_point(m)?)?;
        if self.surface.weights() == [1; 4] {
            F::normalize_projective(&mut p);
        }
        self.accept(p)
    }

    fn accept(&self, p: Vec<F>) -> Result<Vec<F>, FamilyError> {
        if !self.surface.eval(&p).is_zero() {
            return Err(FamilyError::BadPoint(format!(
                "{} pullback is off the surface",
                self.spec.id
            )));
        }
        if p.iter().filter(|x| x.is_zero()).count() >= 2 {
            return Err(FamilyError::Degenerate(
                "trivial point (two zero coordinates)".into(),
            ));
        }
        Ok(p)
    }

    fn check_seed(&self) -> Result<(), FamilyError> {
        match &self.fiber {
            Fiber::Genus1 { seed, .. } => self.accept(self.pull(seed)?).map(|_| ()),
            _ => (1..=3).try_for_each(|m| self.point(m).map(|_| ())),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub m: i64,
    pub point: Result<ProjPoint, FamilyError>,
}

/// Canonical pullbacks of the indexed fiber points, in ascending `m`.
pub fn generate_points(inst: &SurfaceInstance<Rational>, multiples: &[i64]) -> Vec<Generated> {
    let mut ms = multiples.to_vec();
    ms.sort_unstable();
    ms.dedup();
    ms.par_iter()
        .map(|&m| Generated {
            m,
            point: inst
                .point(m)
                .and_then(|p| canonicalize(&p, &inst.surface.exps)),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, RatFn};

    fn params(kv: &[(&str, Rational)]) -> BTreeMap<String, Rational> {
        kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn st_seed_pullback() {
        let inst = instantiate("sec3_St", &params(&[("u", int(1))])).unwrap();
        let c: Vec<i64> = [1, 1, -2, -14].to_vec();
        assert_eq!(
            inst.surface.coeffs.to_vec(),
            c.iter().map(|&x| int(x)).collect::<Vec<_>>()
        );
        let g = generate_points(&inst, &[1]);
        assert_eq!(g[0].point, Ok(ProjPoint::from_ints([0, 2, 1, -1])));
    }

    #[test]
    fn exclusions_and_unknowns() {
        let e = instantiate("v1_ex1", &params(&[("u", int(0))])).unwrap_err();
        assert_eq!(e, FamilyError::Inadmissible("u∉{−2,−1,−1/2,0,1}".into()));
        assert!(matches!(
            instantiate("nosuch", &BTreeMap::new()),
            Err(FamilyError::UnknownFamily(_))
        ));
        assert!(matches!(
            instantiate("v1_ex1", &params(&[("v", int(2))])),
            Err(FamilyError::BadParam(_))
        ));
        let m = instantiate("modsquares_m", &params(&[("m", int(1))])).unwrap();
        assert_eq!(m.surface.coeffs, [int(8), int(2), int(-1), int(-1)]);
        assert_eq!(m.seed_order, Some(4));
        assert_eq!(m.surface.abcd_is_square(), Some(true));
    }

    #[test]
    fn symbolic_instance_over_function_field() {
        let spec = family("v1_ex1").unwrap();
        let given = [("u".to_string(), RatFn::var())].into_iter().collect();
        let inst = instantiate_with(spec, &given).unwrap();
        let p = inst.point(2).unwrap();
        let at3: Vec<Rational> = p.iter().map(|c| c.eval(&int(3)).unwrap()).collect();
        let c = canonicalize(&at3, &[4; 4]).unwrap();
        assert_eq!(
            super::super::class_key(&c, &[4; 4]),
            ProjPoint::from_ints([5, 1, 3, 7])
        );
    }
}
