//! Acceptance suite: one line per criterion, exit status 1 if any fails.
//! All comparisons are exact; runtime limits are listed with each criterion.

mod props;

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use diagforge::algebra::{int, vars_from, Field, RatFn, Rational};
use diagforge::families::template::{compile, Specializer};
use diagforge::families::{
    family, generate_points, instantiate, instantiate_with, list_families, ProjPoint,
    SurfaceInstance,
};
use diagforge::genus1::{ECPoint, TorsionOrder, WeierstrassCurve};
use diagforge::verify::{brute_search, cross_validate, load_corpus, run_identity_suite};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Suite = (&'static str, fn() -> Result<u32, String>);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(t: Instant, limit: Duration) -> Result<String, String> {
    let el = t.elapsed();
    ensure(el < limit, format!("took {el:?}, limit {limit:?}"))?;
    Ok(format!("{:.2}s < {}s", el.as_secs_f64(), limit.as_secs()))
}

fn params(kv: &[(&str, i64)]) -> BTreeMap<String, Rational> {
    kv.iter().map(|(k, v)| (k.to_string(), int(*v))).collect()
}

fn identities() -> Outcome {
    let t = Instant::now();
    let corpus = load_corpus().map_err(|e| e.to_string())?;
    let reports = run_identity_suite(&corpus, None).map_err(|e| e.to_string())?;
    let failed: Vec<_> = reports
        .iter()
        .filter(|r| !r.passed)
        .map(|r| &r.id)
        .collect();
    ensure(
        reports.len() >= 18,
        format!("only {} fixtures", reports.len()),
    )?;
    ensure(failed.is_empty(), format!("failing: {failed:?}"))?;
    Ok(format!(
        "{} fixtures, {}",
        reports.len(),
        within(t, Duration::from_secs(60))?
    ))
}

fn torsion() -> Outcome {
    let e1 = WeierstrassCurve::new(int(621), int(3942)).map_err(|e| e.to_string())?;
    let p1 = e1.point(int(21), int(162)).map_err(|e| e.to_string())?;
    ensure(
        e1.torsion_test(&p1).unwrap() == TorsionOrder::Finite(4),
        "(21,162) should have order 4",
    )?;
    let e2 = WeierstrassCurve::new(int(2808), int(35424)).map_err(|e| e.to_string())?;
    let p2 = e2.point(int(60), int(648)).map_err(|e| e.to_string())?;
    ensure(
        e2.torsion_test(&p2).unwrap() == TorsionOrder::Infinite,
        "(60,648) should have infinite order",
    )?;
    ensure(
        e2.lutz_nagell_certificate(&p2, 12).unwrap() == Some(2),
        "2U should be the first non-integral multiple",
    )?;
    let ECPoint::Affine(x, _) = e2.mul(2, &p2).unwrap() else {
        return Err("2U is the identity".into());
    };
    Ok(format!("order 4 at u=1; infinite at u=2, x(2U)={x}"))
}

fn upoly(src: &str) -> RatFn {
    let r = compile(src, &vars_from(&["u"])).unwrap();
    Specializer::new(vec![RatFn::var()], &[])
        .constant(&r)
        .unwrap()
}

/// Equality in P³ up to a common factor and independent signs on even-exponent
/// coordinates, as identities in `u`.
fn same_up_to_signs(got: &[RatFn], want: &[&str], exps: &[u32; 4]) -> Result<(), String> {
    let want: Vec<RatFn> = want.iter().map(|s| upoly(s)).collect();
    let j = (0..4).find(|&i| !want[i].is_zero()).unwrap();
    let lam = got[j]
        .try_div(&want[j])
        .ok_or("zero where nonzero expected")?;
    for i in 0..4 {
        let w = lam.clone() * &want[i];
        let ok = got[i] == w || (exps[i].is_multiple_of(2) && got[i] == -w);
        ensure(ok, format!("coordinate {i} differs"))?;
    }
    Ok(())
}

fn symbolic_point(id: &str, m: i64) -> Result<(Vec<RatFn>, [u32; 4]), String> {
    let given = [("u".to_string(), RatFn::var())].into_iter().collect();
    let inst: SurfaceInstance<RatFn> =
        instantiate_with(family(id).unwrap(), &given).map_err(|e| e.to_string())?;
    let p = inst.point(m).map_err(|e| format!("{id} m={m}: {e}"))?;
    Ok((p, inst.surface.exps))
}

fn pullbacks() -> Outcome {
    let cases: [(&str, i64, [&str; 4]); 4] = [
        (
            "v1_ex1",
            2,
            ["1+10*u+u^2", "-4*(1-u)", "-3-10*u+u^2", "1-10*u-3*u^2"],
        ),
        (
            "v1_ex1",
            3,
            [
                "-(1+10*u+u^2)*(1+52*u+38*u^2+52*u^3+u^4)",
                "4*(1-u)*(-3-10*u+u^2)*(-1+10*u+3*u^2)",
                "-5-114*u+233*u^2+1140*u^3+381*u^4+94*u^5-u^6",
                "1-94*u-381*u^2-1140*u^3-233*u^4+114*u^5+5*u^6",
            ],
        ),
        ("sec3_St", 1, ["-1+u", "1+u", "u", "-1"]),
        (
            "sec3_St",
            2,
            [
                "-1-3*u-36*u^3+54*u^4-162*u^5-324*u^7-729*u^8+81*u^9",
                "1-3*u-36*u^3-54*u^4-162*u^5-324*u^7+729*u^8+81*u^9",
                "3*u*(-1-12*u^2-54*u^4-108*u^6+27*u^8)",
                "-(1+12*u^2+9*u^4)*(-1+27*u^4)",
            ],
        ),
    ];
    for (id, m, want) in &cases {
        let (got, exps) = symbolic_point(id, *m)?;
        same_up_to_signs(&got, want, &exps).map_err(|e| format!("{id} m={m}: {e}"))?;
    }
    Ok("v1_ex1 m=2,3 and sec3_St m=1,2 match as identities in u".into())
}

fn chain_table() -> Outcome {
    let t = Instant::now();
    let rows: [[&str; 4]; 3] = [
        ["37", "17", "21", "629"],
        ["1805723", "2237723", "960540", "4040707888729"],
        [
            "209143555850753",
            "84691068680987",
            "112490043311709",
            "17712591252741962842340733211",
        ],
    ];
    let inst = instantiate("sextic_w3_chain", &params(&[("t", 1), ("m", 6)]))
        .map_err(|e| e.to_string())?;
    for g in generate_points(&inst, &[1, 2, 3]) {
        let p = g.point.map_err(|e| format!("k={}: {e}", g.m))?;
        let abs: Vec<String> = p.0.iter().map(|x| x.abs().to_string()).collect();
        ensure(
            abs == rows[g.m as usize - 1],
            format!("k={} gives {:?}", g.m, p.0),
        )?;
        ensure(inst.surface.eval_int(&p).is_zero(), "off the surface")?;
    }
    Ok(format!(
        "rows k=1..3 exact, {}",
        within(t, Duration::from_secs(10))?
    ))
}

fn exactness() -> Outcome {
    let t = Instant::now();
    let (mut n, mut grow) = (0, 0);
    for spec in list_families() {
        let inst =
            instantiate(spec.id, &BTreeMap::new()).map_err(|e| format!("{}: {e}", spec.id))?;
        let pts: Vec<ProjPoint> = generate_points(&inst, &[1, 2, 3, 4, 5])
            .into_iter()
            .map(|g| g.point.map_err(|e| format!("{} m={}: {e}", spec.id, g.m)))
            .collect::<Result<_, _>>()?;
        for (m, p) in pts.iter().enumerate() {
            ensure(
                inst.surface.eval_int(p).is_zero() && !p.is_trivial(),
                format!("{} m={} not an exact nontrivial point", spec.id, m + 1),
            )?;
        }
        if spec.curve.is_genus_one() && inst.seed_order.is_none() {
            grow += 1;
            let h: Vec<BigInt> = pts
                .iter()
                .map(|p| p.weighted_height(&inst.surface.exps))
                .collect();
            ensure(
                h.windows(2).all(|w| w[0] < w[1]),
                format!("{} heights not increasing: {h:?}", spec.id),
            )?;
        }
        n += 1;
    }
    Ok(format!(
        "{n} families, heights increase on {grow} rank-positive, {}",
        within(t, Duration::from_secs(120))?
    ))
}

fn search_bytes(threads: usize) -> Vec<u8> {
    let mut out = vec![];
    let args = [
        "diagforge",
        "search",
        "--surface",
        "1,1,-2,-14",
        "--height",
        "6",
        "--threads",
        &threads.to_string(),
    ];
    let code = diagforge::cli::run(args, &mut out, &mut std::io::sink());
    assert_eq!(code, 0);
    out
}

fn oracle() -> Outcome {
    let multiples: Vec<i64> = (1..=6).collect();
    let mut summary = vec![];
    for (id, u, h) in [("sec3_St", 1, 5), ("v1_ex1", 3, 60)] {
        let inst = instantiate(id, &params(&[("u", u)])).map_err(|e| e.to_string())?;
        let r = cross_validate(&inst, h, &multiples, 4).map_err(|e| e.to_string())?;
        ensure(
            !r.generated.is_empty(),
            format!("{id}: nothing generated within H={h}"),
        )?;
        ensure(r.consistent(), format!("{id}: scan missed {:?}", r.missed))?;
        summary.push(format!("{id} {} in box", r.generated.len()));
    }
    let pos = diagforge::families::DiagonalSurface::new([1, 1, 1, 2].map(int), [4; 4]).unwrap();
    ensure(
        brute_search(&pos, 5, 4).unwrap().points.is_empty(),
        "(1,1,1,2) not empty",
    )?;
    let (a, b) = (search_bytes(1), search_bytes(8));
    ensure(!a.is_empty() && a == b, "1 and 8 threads differ")?;
    Ok(format!(
        "{}; positive surface empty; threads 1/8 identical",
        summary.join(", ")
    ))
}

fn properties() -> Outcome {
    let named: [Suite; 4] = [
        ("group law", props::group_law),
        ("map roundtrip", props::map_roundtrip),
        ("conic substitution", props::conic_substitution),
        ("canonical form", props::canonical_idempotent),
    ];
    for (name, f) in named {
        let n = f().map_err(|e| format!("{name}: {e}"))?;
        ensure(n >= 100, format!("{name}: {n} cases"))?;
    }
    Ok(format!(
        "4 suites x {} cases, seed {:#x}",
        props::CASES,
        props::SEED
    ))
}

fn excluded() -> Outcome {
    for spec in list_families() {
        ensure(
            spec.annotation.is_empty() || spec.annotation.ends_with("(quoted)"),
            format!("{}: annotation is not marked as quoted", spec.id),
        )?;
    }
    Ok("rank and density statements are annotations only; nothing tested".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("identity suite", identities),
        ("torsion fixtures", torsion),
        ("symbolic pullbacks", pullbacks),
        ("sextic chain table", chain_table),
        ("point exactness", exactness),
        ("oracle agreement", oracle),
        ("property suites", properties),
        ("excluded items", excluded),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match res {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", i + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {} {name}: FAIL ({e})", i + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
