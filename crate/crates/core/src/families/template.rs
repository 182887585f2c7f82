//! Family templates: infix expressions over parameters and curve coordinates,
//! compiled once over ℚ and specialized to concrete field values.

use crate::algebra::{
    parse_infix, EvalContext, Field, FieldElem, MPoly, Monomial, Rational, RationalFunction, Vars,
};

use super::FamilyError;

/// Parses `src` as a rational function in `vars` with rational coefficients.
pub fn compile(src: &str, vars: &Vars) -> Result<RationalFunction<Rational>, FamilyError> {
    let e = parse_infix(src)?;
    let rf = EvalContext::new(vars.clone()).eval(&e)?;
    let conv = |p: &MPoly<FieldElem>| -> Result<MPoly<Rational>, FamilyError> {
        if p.terms().any(|(_, c)| c.as_rational().is_none()) {
            return Err(FamilyError::BadParam(format!(
                "non-rational coefficient in {src}"
            )));
        }
        Ok(p.map_coeffs(|c| c.as_rational().cloned().unwrap()))
    };
    Ok(RationalFunction::new(conv(rf.num())?, conv(rf.den())?)?)
}

/// Substitutes values for the leading `values.len()` variables, keeping the
/// remaining ones as polynomial variables `coords`.
pub struct Specializer<F> {
    pub values: Vec<F>,
    pub coords: Vars,
}

impl<F: Field> Specializer<F> {
    pub fn new(values: Vec<F>, coords: &[&str]) -> Self {
        Self {
            values,
            coords: crate::algebra::vars_from(coords),
        }
    }

    pub fn poly(&self, p: &MPoly<Rational>) -> MPoly<F> {
        let k = self.values.len();
        let mut out = MPoly::zero(&self.coords);
        for (m, c) in p.terms() {
            let mut coeff = F::from_rational(c);
            for (v, &e) in self.values.iter().zip(&m.0[..k]) {
                if e > 0 {
                    coeff = coeff * &v.pow(e);
                }
            }
            out.add_term(Monomial(m.0[k..].to_vec()), coeff);
        }
        out
    }

    /// Numerator and denominator after specialization.
    pub fn fraction(
        &self,
        r: &RationalFunction<Rational>,
    ) -> Result<(MPoly<F>, MPoly<F>), FamilyError> {
        let den = self.poly(r.den());
        if den.is_zero() {
            return Err(FamilyError::Degenerate(
                "a template denominator vanishes".into(),
            ));
        }
        Ok((self.poly(r.num()), den))
    }

    /// A polynomial in the coordinates; the denominator must specialize to a constant.
    pub fn polynomial(&self, r: &RationalFunction<Rational>) -> Result<MPoly<F>, FamilyError> {
        let (n, d) = self.fraction(r)?;
        let c = d
            .as_constant()
            .ok_or_else(|| FamilyError::BadParam("coordinate in a template denominator".into()))?;
        Ok(n.scale(&c.inv().unwrap()))
    }

    /// A template free of coordinates, evaluated to a field element.
    pub fn constant(&self, r: &RationalFunction<Rational>) -> Result<F, FamilyError> {
        let p = self.polynomial(r)?;
        if p.terms().any(|(m, _)| m.degree() > 0) {
            return Err(FamilyError::BadParam(
                "constant template depends on coordinates".into(),
            ));
        }
        Ok(p.as_constant().unwrap_or_else(F::zero))
    }
}

/// Evaluates a fraction at a point, `None` when the denominator vanishes.
pub fn eval_fraction<F: Field>(nd: &(MPoly<F>, MPoly<F>), p: &[F]) -> Option<F> {
    nd.0.eval(p).try_div(&nd.1.eval(p))
}

/// Coefficients of a binary form of degree `d`, entry `i` for `a^i b^(d−i)`.
pub fn binary_form<F: Field>(p: &MPoly<F>, d: u32) -> Result<Vec<F>, FamilyError> {
    if p.vars().len() != 2 || !p.is_homogeneous_of(d) {
        return Err(FamilyError::BadParam(format!(
            "expected a binary form of degree {d}"
        )));
    }
    Ok((0..=d)
        .map(|i| p.coeff(&Monomial(vec![i, d - i])))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat, vars_from, RatFn};

    #[test]
    fn specialize_to_rationals_and_functions() {
        let vars = vars_from(&["u", "X", "Y"]);
        let r = compile("(1+u)*X^2 - u^2*X*Y/2", &vars).unwrap();
        let s = Specializer::new(vec![int(3)], &["X", "Y"]);
        let p = s.polynomial(&r).unwrap();
        assert_eq!(p.eval(&[int(1), int(2)]), int(4 - 9));
        let f = binary_form(&p, 2).unwrap();
        assert_eq!(f, vec![int(0), rat(-9, 2), int(4)]);

        let g = Specializer::new(vec![RatFn::var()], &["X", "Y"]);
        let q = g.polynomial(&r).unwrap();
        let v = q.eval(&[RatFn::from_int(1), RatFn::from_int(0)]);
        assert_eq!(v.eval(&int(5)), Some(int(6)));
    }

    #[test]
    fn denominators_are_checked() {
        let vars = vars_from(&["u", "X"]);
        let r = compile("X/(u-1)", &vars).unwrap();
        assert!(Specializer::new(vec![int(1)], &["X"]).fraction(&r).is_err());
        let c = compile("u^2/(u+1)", &vars_from(&["u"])).unwrap();
        assert_eq!(
            Specializer::<Rational>::new(vec![int(2)], &[])
                .constant(&c)
                .unwrap(),
            rat(4, 3)
        );
    }
}
