//! The family table. Every expression is an infix template over the family's
//! parameters, derived values and curve coordinates.

use super::FamilyError;

#[derive(Debug)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: &'static str,
}

/// A value computed from the parameters before anything else.
#[derive(Debug)]
pub enum Derived {
    Value(&'static str, &'static str),
    /// Rational `k`-th root of an expression; inadmissible when none exists.
    Root(&'static str, &'static str, u32),
    /// A binary form in two named variables evaluated at two expressions.
    FormAt(
        &'static str,
        &'static str,
        [&'static str; 2],
        [&'static str; 2],
    ),
}

impl Derived {
    pub fn name(&self) -> &'static str {
        match self {
            Derived::Value(n, _) | Derived::Root(n, _, _) | Derived::FormAt(n, _, _, _) => n,
        }
    }
}

/// A nonvanishing requirement on the parameters.
#[derive(Debug)]
pub struct Exclusion {
    pub expr: &'static str,
    pub message: &'static str,
}

#[derive(Debug)]
pub enum CurveTemplate {
    /// Two quadrics in P³ with an origin and a seed.
    Quadrics {
        coords: [&'static str; 4],
        qa: &'static str,
        qb: &'static str,
        origin: [&'static str; 4],
        seed: [&'static str; 4],
    },
    /// `c·w² = f(a, b)` with `f` a binary quartic; coordinates `(a, b, w)`.
    Quartic {
        coords: [&'static str; 3],
        c: &'static str,
        f: &'static str,
        origin: [&'static str; 3],
        seed: [&'static str; 3],
    },
    /// Plane cubic with a rational origin and a seed.
    Cubic {
        coords: [&'static str; 3],
        f: &'static str,
        origin: [&'static str; 3],
        seed: [&'static str; 3],
    },
    /// Genus zero: the pullback is polynomial in `(a : b)`; index `m` is `(m : 1)`.
    Line { coords: [&'static str; 2] },
    /// Genus zero through a conic: index `m` is the parametrized point `(m : 1)`.
    Conic {
        coords: [&'static str; 3],
        form: &'static str,
        base: [&'static str; 3],
    },
}

impl CurveTemplate {
    pub fn kind(&self) -> &'static str {
        match self {
            CurveTemplate::Quadrics { .. } => "quadrics",
            CurveTemplate::Quartic { .. } => "quartic",
            CurveTemplate::Cubic { .. } => "cubic",
            CurveTemplate::Line { .. } => "line",
            CurveTemplate::Conic { .. } => "conic",
        }
    }

    pub fn is_genus_one(&self) -> bool {
        !matches!(
            self,
            CurveTemplate::Line { .. } | CurveTemplate::Conic { .. }
        )
    }

    pub fn coords(&self) -> Vec<&'static str> {
        match self {
            CurveTemplate::Quadrics { coords, .. } => coords.to_vec(),
            CurveTemplate::Quartic { coords, .. }
            | CurveTemplate::Cubic { coords, .. }
            | CurveTemplate::Conic { coords, .. } => coords.to_vec(),
            CurveTemplate::Line { coords } => coords.to_vec(),
        }
    }
}

#[derive(Debug)]
pub struct FamilySpec {
    pub id: &'static str,
    pub summary: &'static str,
    pub params: &'static [ParamSpec],
    pub derived: &'static [Derived],
    pub exclusions: &'static [Exclusion],
    pub exps: [u32; 4],
    pub surface: [&'static str; 4],
    pub curve: CurveTemplate,
    pub pullback: [&'static str; 4],
    /// Informational note (Picard numbers are quoted, never computed).
    pub annotation: &'static str,
}

impl FamilySpec {
    /// Parameter and derived names, in template variable order.
    pub fn scalar_names(&self) -> Vec<&'static str> {
        self.params
            .iter()
            .map(|p| p.name)
            .chain(self.derived.iter().map(Derived::name))
            .collect()
    }
}

const fn p(name: &'static str, default: &'static str) -> ParamSpec {
    ParamSpec { name, default }
}

const fn ex(expr: &'static str, message: &'static str) -> Exclusion {
    Exclusion { expr, message }
}

const Q4: [u32; 4] = [4, 4, 4, 4];
const S2: [u32; 4] = [6, 6, 6, 2];

const W2_ROW34_XYZ: [&str; 3] = ["6*a^2 - b^2", "a*(3*a + 2*b)", "6*a^2 + 3*a*b + b^2"];

pub static FAMILIES: &[FamilySpec] = &[
    FamilySpec {
        id: "v1_ex1",
        summary: "(1+u)X^4 + 4u^2(1+u)Y^4 - uZ^4 - W^4 from two quadrics in X,Y,Z,W",
        params: &[p("u", "3")],
        derived: &[],
        exclusions: &[ex("u*(u+2)*(u+1)*(2*u+1)*(u-1)", "u∉{−2,−1,−1/2,0,1}")],
        exps: Q4,
        surface: ["1+u", "4*u^2*(1+u)", "-u", "-1"],
        curve: CurveTemplate::Quadrics {
            coords: ["X", "Y", "Z", "W"],
            qa: "X^2 - 2*X*Y - 2*u*Y^2 - Z^2",
            qb: "X^2 + 2*u*X*Y - 2*u*Y^2 - W^2",
            origin: ["1", "0", "1", "1"],
            seed: ["1", "0", "1", "-1"],
        },
        pullback: ["X", "Y", "Z", "W"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "v2_ex2",
        summary: "alpha^2 X^4 + (1-alpha)^2 Y^4 + 2alpha(1-alpha) Z^4 - W^4",
        params: &[p("alpha", "3")],
        derived: &[],
        exclusions: &[ex("alpha*(1-alpha)", "alpha∉{0,1}")],
        exps: Q4,
        surface: ["alpha^2", "(1-alpha)^2", "2*alpha*(1-alpha)", "-1"],
        curve: CurveTemplate::Quadrics {
            coords: ["X", "Y", "Z", "W"],
            qa: "alpha*X^2 + (1-alpha)*Y^2 - W^2",
            qb: "X*Y - Z^2",
            origin: ["1", "1", "1", "1"],
            seed: ["1", "1", "-1", "1"],
        },
        pullback: ["X", "Y", "Z", "W"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "v3_surface1",
        summary: "x^4 + y^4 - (p^4+q^4)^2 Z^4 - p^2q^2(2p^2+3pq+2q^2)^2(p^4+q^4) W^4",
        params: &[p("p", "1"), p("q", "2")],
        derived: &[Derived::Value("s", "p^2 + p*q + q^2")],
        exclusions: &[ex("p*q*(p+q)", "p, q, p+q nonzero")],
        exps: Q4,
        surface: [
            "1",
            "1",
            "-(p^4+q^4)^2",
            "-p^2*q^2*(2*p^2+3*p*q+2*q^2)^2*(p^4+q^4)",
        ],
        curve: CurveTemplate::Quadrics {
            coords: ["x", "y", "Z", "W"],
            qa: "-p*q*(x^2+y^2) + (p^2+q^2)*x*y - (p^4+q^4)*(x+y)*Z + s*(p^4+q^4)*Z^2",
            qb: "p*q*(p+q)^2*(2*p^2+3*p*q+2*q^2)*W^2 + (x+y)^2 - 2*s*(x+y)*Z + (p^4+q^4)*Z^2",
            origin: ["p*s", "q*s", "p+q", "1"],
            seed: ["p*s", "q*s", "p+q", "-1"],
        },
        pullback: ["x", "y", "Z", "W"],
        annotation: "generic Picard rank 3 (quoted)",
    },
    FamilySpec {
        id: "sec3_St",
        summary: "X^4 + Y^4 - 2Z^4 - 2(1+6u^2)W^4",
        params: &[p("u", "1")],
        derived: &[],
        exclusions: &[ex("u", "u≠0 (seed is torsion)")],
        exps: Q4,
        surface: ["1", "1", "-2", "-2*(1+6*u^2)"],
        curve: CurveTemplate::Quadrics {
            coords: ["T", "W", "Y", "V"],
            qa: "Y*V - W^2",
            qb: "(1+6*u^2)*Y^2 - (6*T^2 + 12*T*V + 7*V^2)",
            origin: ["u-1", "1", "1", "1"],
            seed: ["u-1", "-1", "1", "1"],
        },
        pullback: ["T", "T + 2*V", "T + V", "W"],
        annotation: "generic Picard rank 1 (quoted)",
    },
    FamilySpec {
        id: "sec3_PQ_generic",
        summary: "P X^4 + Q Y^4 - (P+Q) Z^4 - H(t) W^4",
        params: &[p("P", "1"), p("Q", "2"), p("t", "1")],
        derived: &[],
        exclusions: &[
            ex("P*Q*(P+Q)", "P, Q, P+Q nonzero"),
            ex("P + 2*Q + 3*Q*t", "P+2Q+3Qt≠0 (seed is torsion)"),
        ],
        exps: Q4,
        surface: [
            "P",
            "Q",
            "-(P+Q)",
            "-P*Q*(P+Q)*(P^2+3*P*Q+3*Q^2+4*Q*(P+2*Q)*t+6*Q^2*t^2)",
        ],
        curve: CurveTemplate::Quadrics {
            coords: ["T", "W", "Y", "V"],
            qa: "Y*V - W^2",
            qb: "P*Q*(P+Q)*((P^2+3*P*Q+3*Q^2+4*Q*(P+2*Q)*t+6*Q^2*t^2)*Y^2 \
                 - ((P^2+3*P*Q+3*Q^2)*V^2 + 4*Q*(P+2*Q)*T*V + 6*Q^2*T^2))",
            origin: ["t", "1", "1", "1"],
            seed: ["t", "-1", "1", "1"],
        },
        pullback: ["Q*T", "Q*T + (P+Q)*V", "Q*(T+V)", "W"],
        annotation: "generic Picard rank 1 (quoted)",
    },
    FamilySpec {
        id: "ident0",
        summary: "(2ac-b^2)a^2 X^4 + (2ac-b^2)c^2 Y^4 + a^2b^2 Z^4 - 2a^3c W^4",
        params: &[p("a", "1"), p("b", "1"), p("c", "2")],
        derived: &[],
        exclusions: &[ex("a*b*c*(2*a*c-b^2)", "a, b, c, 2ac−b² nonzero")],
        exps: Q4,
        surface: ["(2*a*c-b^2)*a^2", "(2*a*c-b^2)*c^2", "a^2*b^2", "-2*a^3*c"],
        curve: CurveTemplate::Quadrics {
            coords: ["S", "T", "U", "V"],
            qa: "a*b*U^2 - (a*b*S^2 + 2*a*c*S*T + b*c*T^2)",
            qb: "a*V^2 - (a*S^2 + b*S*T + c*T^2)",
            origin: ["1", "0", "1", "1"],
            seed: ["1", "0", "1", "-1"],
        },
        pullback: ["S", "T", "U", "V"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "ident1_surf1",
        summary: "three-parameter surface with base point at T=0",
        params: &[p("p", "1"), p("q", "3"), p("r", "1")],
        derived: &[],
        exclusions: &[ex(
            "r*(q-2*r)*(p-q+r)*(q^2-2*p*r-2*q*r+2*r^2)",
            "r, q−2r, p−q+r, q²−2pr−2qr+2r² nonzero",
        )],
        exps: Q4,
        surface: [
            "(p-q+r)^2*(q^2-2*p*r-2*q*r+2*r^2)",
            "r^2*(q^2-2*p*r-2*q*r+2*r^2)",
            "2*r^3*(p-q+r)",
            "-(q-2*r)^2*r^2",
        ],
        curve: CurveTemplate::Quadrics {
            coords: ["T", "S", "Z", "W"],
            qa: "r*S^2 + q*T*S + p*T^2 - r*Z^2",
            qb: "r*(2*r-q)*S^2 - 2*r*(p-r)*T*S + (-p*q+q^2-2*q*r+2*r^2)*T^2 - r*(2*r-q)*W^2",
            origin: ["0", "1", "1", "1"],
            seed: ["0", "1", "1", "-1"],
        },
        pullback: ["T", "S + T", "Z", "W"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "ident2_surf2",
        summary: "-(r-s)(r+s)^2 X^4 - r^2(r-s) Y^4 - r^2(r+s) Z^4 + 2r^3 W^4",
        params: &[p("r", "3"), p("s", "1")],
        derived: &[],
        exclusions: &[ex("r*(r-s)*(r+s)*s", "r, s, r−s, r+s nonzero")],
        exps: Q4,
        surface: ["-(r-s)*(r+s)^2", "-r^2*(r-s)", "-r^2*(r+s)", "2*r^3"],
        curve: CurveTemplate::Quadrics {
            coords: ["T", "S", "Z", "W"],
            qa: "r*S^2 + s*T^2 - r*Z^2",
            qb: "r*S^2 + (r-s)*T*S + r*T^2 - r*W^2",
            origin: ["0", "1", "1", "1"],
            seed: ["0", "1", "1", "-1"],
        },
        pullback: ["T", "S + T", "Z", "W"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "ident3_surf3",
        summary: "(1-2a)^2 X^4 + Y^4 - 2(1-a)^2(1-2a) Z^4 - W^4",
        params: &[p("a", "2")],
        derived: &[],
        exclusions: &[ex("(1-a)*(1-2*a)", "a∉{1,1/2}")],
        exps: Q4,
        surface: ["(1-2*a)^2", "1", "-2*(1-a)^2*(1-2*a)", "-1"],
        curve: CurveTemplate::Quadrics {
            coords: ["T", "S", "Z", "W"],
            qa: "T*S + T^2 - (1-a)*Z^2",
            qb: "S^2 + 2*T*S + 2*a*T^2 - W^2",
            origin: ["0", "1", "0", "1"],
            seed: ["-1", "a", "1", "a"],
        },
        pullback: ["T", "S + T", "Z", "W"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "modsquares_m",
        summary: "4m^2(1+m)X^4 + (1+m)Y^4 - mZ^4 - W^4, coefficient product m mod squares",
        params: &[p("m", "2")],
        derived: &[],
        exclusions: &[ex("m*(1+m)*(1+2*m)", "m∉{0,−1,−1/2}")],
        exps: Q4,
        surface: ["4*m^2*(1+m)", "1+m", "-m", "-1"],
        curve: CurveTemplate::Quadrics {
            coords: ["T", "S", "Z", "W"],
            qa: "S^2 - (1+2*m)*T^2 - Z^2",
            qb: "S^2 + 2*(1+m)*T*S + T^2 - W^2",
            origin: ["0", "1", "1", "1"],
            seed: ["0", "1", "1", "-1"],
        },
        pullback: ["T", "S + T", "Z", "W"],
        annotation: "generic Picard rank 2 (quoted)",
    },
    FamilySpec {
        id: "carmichael",
        summary: "a x^4 - a y^4 + c z^4 + d w^4 when 4a^2cd is a fourth power k^4",
        params: &[p("a", "1"), p("c", "1"), p("d", "4")],
        derived: &[Derived::Root("k", "4*a^2*c*d", 4)],
        exclusions: &[],
        exps: Q4,
        surface: ["a", "-a", "c", "d"],
        curve: CurveTemplate::Line { coords: ["s", "t"] },
        pullback: [
            "k*(8*a*s^4 - c*t^4)",
            "k*(8*a*s^4 + c*t^4)",
            "8*k*a*s^3*t",
            "4*a*c*s*t^3",
        ],
        annotation: "",
    },
    FamilySpec {
        id: "conic_2k2",
        summary: "x^4 + y^4 + z^4 - 2k^2 w^4 from the conic X1^2 + 3X2^2 = kX3^2",
        params: &[p("k", "4"), p("x1", "1"), p("x2", "1"), p("x3", "1")],
        derived: &[],
        exclusions: &[ex("k", "k≠0")],
        exps: Q4,
        surface: ["1", "1", "1", "-2*k^2"],
        curve: CurveTemplate::Conic {
            coords: ["X1", "X2", "X3"],
            form: "X1^2 + 3*X2^2 - k*X3^2",
            base: ["x1", "x2", "x3"],
        },
        pullback: ["X1 - X2", "2*X2", "X1 + X2", "X3"],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_w2_row1",
        summary: "t^2 x^6 + y^6 - 2t z^6 - w^2",
        params: &[p("t", "2")],
        derived: &[],
        exclusions: &[],
        exps: S2,
        surface: ["t^2", "1", "-2*t", "-1"],
        curve: CurveTemplate::Line { coords: ["a", "b"] },
        pullback: ["a^2", "b^2", "a*b", "a^6*t - b^6"],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_w2_row2",
        summary: "2t^3 x^6 + y^6 - z^6 + 6t w^2",
        params: &[p("t", "1")],
        derived: &[],
        exclusions: &[],
        exps: S2,
        surface: ["2*t^3", "1", "-1", "6*t"],
        curve: CurveTemplate::Line { coords: ["a", "b"] },
        pullback: [
            "2*a*b",
            "2*t*a^2 - b^2",
            "2*t*a^2 + b^2",
            "2*a*b*(4*t^2*a^4 + b^4)",
        ],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_w2_row3",
        summary: "x^6 - 108 y^6 - 4 z^6 + 3 w^2",
        params: &[],
        derived: &[],
        exclusions: &[],
        exps: S2,
        surface: ["1", "-108", "-4", "3"],
        curve: CurveTemplate::Line { coords: ["a", "b"] },
        pullback: [
            W2_ROW34_XYZ[0],
            W2_ROW34_XYZ[1],
            W2_ROW34_XYZ[2],
            "270*a^6 + 540*a^5*b + 360*a^4*b^2 + 144*a^3*b^3 + 48*a^2*b^4 + 12*a*b^5 + b^6",
        ],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_w2_row4",
        summary: "x^6 - 432 y^6 + 8 z^6 - 9 w^2",
        params: &[],
        derived: &[],
        exclusions: &[],
        exps: S2,
        surface: ["1", "-432", "8", "-9"],
        curve: CurveTemplate::Line { coords: ["a", "b"] },
        pullback: [
            W2_ROW34_XYZ[0],
            W2_ROW34_XYZ[1],
            W2_ROW34_XYZ[2],
            "108*a^6 - 72*a^5*b - 216*a^4*b^2 - 144*a^3*b^3 - 42*a^2*b^4 - 8*a*b^5 - b^6",
        ],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_w3_chain",
        summary: "t^2 x^6 + y^6 - m^2 z^6 + 2t w^3 from the cubic (S+T)^3 - tT^3 = m z^3",
        params: &[p("t", "1"), p("m", "6"), p("T0", "-37/54"), p("z0", "7/18")],
        derived: &[Derived::Root("c", "t", 3)],
        exclusions: &[ex("t*m", "t, m nonzero")],
        exps: [6, 6, 6, 3],
        surface: ["t^2", "1", "-m^2", "2*t"],
        curve: CurveTemplate::Cubic {
            coords: ["T", "S", "z"],
            f: "(S+T)^3 - t*T^3 - m*z^3",
            origin: ["1", "c-1", "0"],
            seed: ["T0", "1", "z0"],
        },
        pullback: ["T", "S + T", "z", "-T*(S+T)"],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_third_PQ",
        summary: "p x^6 + q y^6 - (p+q) z^6 - q c w^2 with c = g(t, 1)",
        params: &[p("p", "1"), p("q", "1"), p("t", "1")],
        derived: &[Derived::FormAt(
            "cg",
            "p*(p+q)*(15*q^4*a^4 + (20*p*q^3+40*q^4)*a^3*b + (15*p^2*q^2+45*p*q^3+45*q^4)*a^2*b^2 \
             + (6*p^3*q+24*p^2*q^2+36*p*q^3+24*q^4)*a*b^3 + (p^4+5*p^3*q+10*p^2*q^2+10*p*q^3+5*q^4)*b^4)",
            ["a", "b"],
            ["t", "1"],
        )],
        exclusions: &[ex("p*q*(p+q)", "p, q, p+q nonzero")],
        exps: S2,
        surface: ["p", "q", "-(p+q)", "-q*cg"],
        curve: CurveTemplate::Quartic {
            coords: ["a", "b", "w"],
            c: "cg",
            f: "p*(p+q)*(15*q^4*a^4 + (20*p*q^3+40*q^4)*a^3*b + (15*p^2*q^2+45*p*q^3+45*q^4)*a^2*b^2 \
                + (6*p^3*q+24*p^2*q^2+36*p*q^3+24*q^4)*a*b^3 + (p^4+5*p^3*q+10*p^2*q^2+10*p*q^3+5*q^4)*b^4)",
            origin: ["t", "1", "1"],
            seed: ["t", "1", "-1"],
        },
        pullback: ["q*a", "q*a + (p+q)*b", "q*(a+b)", "b*w"],
        annotation: "",
    },
    FamilySpec {
        id: "sextic_third_11m2",
        summary: "x^6 + y^6 - 2z^6 - 2(15t^4+15t^2+1) w^2",
        params: &[p("t", "1")],
        derived: &[],
        exclusions: &[],
        exps: S2,
        surface: ["1", "1", "-2", "-2*(15*t^4+15*t^2+1)"],
        curve: CurveTemplate::Quartic {
            coords: ["a", "b", "w"],
            c: "15*t^4 + 15*t^2 + 1",
            f: "15*a^4 + 60*a^3*b + 105*a^2*b^2 + 90*a*b^3 + 31*b^4",
            origin: ["-1-t", "1", "1"],
            seed: ["-1-t", "1", "-1"],
        },
        pullback: ["a", "a + 2*b", "a + b", "b*w"],
        annotation: "",
    },
    FamilySpec {
        id: "sec6_quartsurf",
        summary: "P X^4 + Q Y^4 + R Z^4 + S K^2 W^4 from the quartic identity in a, b, c",
        params: &[p("a", "1"), p("b", "1"), p("c", "1"), p("t0", "1")],
        derived: &[Derived::FormAt("K", SEC6_F, ["t", "U"], ["t0", "1"])],
        exclusions: &[],
        exps: Q4,
        surface: [
            "a^2 + 2*a*b + 2*b^2 - 2*c",
            "4*(a^2 + 2*a*b + 2*b^2 - 2*c)",
            "(a^2 - 2*a*b + 2*b^2)*c^2",
            "(-a^2 + 2*a*b - 2*b^2)*K^2",
        ],
        curve: CurveTemplate::Quartic {
            coords: ["t", "U", "w"],
            c: "K",
            f: SEC6_F,
            origin: ["t0", "1", "1"],
            seed: ["t0", "1", "-1"],
        },
        pullback: [
            "2*a*(2*a*b-c)*U^2 - 4*b*(2*a*b-c)*t*U + (4*b^3+(a-2*b)*c)*t^2",
            "2*(a^3-(a-b)*c)*U^2 - 2*a*(2*a*b-c)*t*U + b*(2*a*b-c)*t^2",
            "2*(2*a*b-c)*U^2 - 2*(a^2+2*b^2-c)*t*U + (2*a*b-c)*t^2",
            "w",
        ],
        annotation: "",
    },
    FamilySpec {
        id: "sec6_sextsurf_chain",
        summary: "2 X^6 - 2 Y^6 + Z^6 - K^3 W^6 with K = t0^4+6t0^3+3t0^2+2t0-1",
        params: &[p("t0", "1")],
        derived: &[Derived::Value("K", "t0^4 + 6*t0^3 + 3*t0^2 + 2*t0 - 1")],
        exclusions: &[],
        exps: [6, 6, 6, 6],
        surface: ["2", "-2", "1", "-K^3"],
        curve: CurveTemplate::Quartic {
            coords: ["a", "b", "w"],
            c: "K",
            f: "a^4 + 6*a^3*b + 3*a^2*b^2 + 2*a*b^3 - b^4",
            origin: ["t0", "1", "1"],
            seed: ["t0", "1", "-1"],
        },
        pullback: ["a^2 + 2*a*b", "a^2 + b^2", "a^2 - a*b - b^2", "w"],
        annotation: "",
    },
];

const SEC6_F: &str =
    "4*(2*a^4*(a^2+2*a*b+2*b^2) - 2*a^3*(3*a+2*b)*c + (5*a^2-2*a*b+2*b^2)*c^2 - c^3)*U^4 \
    - 8*(2*a*b-c)*(2*a^2*(a^2+2*a*b+2*b^2) - 2*a*(2*a+b)*c + c^2)*t*U^3 \
    + 8*(2*a*b-c)*(3*a*b*(a^2+2*a*b+2*b^2) - (a^2+6*a*b+2*b^2)*c + c^2)*t^2*U^2 \
    - 4*(2*a*b-c)*(4*b^2*(a^2+2*a*b+2*b^2) - 2*b*(a+4*b)*c + c^2)*t^3*U \
    + (8*b^4*(a^2+2*a*b+2*b^2) - 8*b^3*(a+3*b)*c + (a^2-2*a*b+10*b^2)*c^2 - c^3)*t^4";

pub fn family(id: &str) -> Result<&'static FamilySpec, FamilyError> {
    FAMILIES
        .iter()
        .find(|f| f.id == id)
        .ok_or_else(|| FamilyError::UnknownFamily(id.to_string()))
}

pub fn list_families() -> &'static [FamilySpec] {
    FAMILIES
}
