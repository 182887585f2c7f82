//! Command-line front end. Records are JSON lines; integers and rationals are
//! decimal strings.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use crate::algebra::{parse_rational, Rational};
use crate::families::{
    generate_points, instantiate, list_families, sixth_power_chain, DiagonalSurface, FamilyError,
    ProjPoint,
};
use crate::verify::{brute_search, check_point, load_corpus, run_identity_suite, CheckOutcome};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "diagforge",
    version,
    about = "Rational points on diagonal quartic and sextic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List registered families.
    List,
    /// Check the identity corpus.
    VerifyIdentities {
        #[arg(long = "id")]
        ids: Vec<String>,
    },
    /// Generate surface points from a family.
    Gen {
        #[arg(long)]
        family: String,
        /// `name=value`, value an integer or `p/q`.
        #[arg(long = "param", allow_hyphen_values = true)]
        params: Vec<String>,
        /// `A..B` (inclusive) or a comma list.
        #[arg(long, default_value = "1..3", allow_hyphen_values = true)]
        multiples: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check one point on a surface.
    Check {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Exhaustive search below a weighted height bound.
    Search {
        #[command(flatten)]
        surface: SurfaceArgs,
        #[arg(long)]
        height: u64,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Chain of solutions of 2X^6 - 2Y^6 + Z^6 = K^3 W^6.
    Chain {
        #[arg(long, allow_hyphen_values = true)]
        t0: String,
        #[arg(long)]
        length: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SurfaceArgs {
    #[arg(long, allow_hyphen_values = true)]
    surface: String,
    #[arg(long, default_value = "4,4,4,4")]
    exponents: String,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    msg: String,
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        msg: msg.into(),
    }
}

impl From<FamilyError> for Failure {
    fn from(e: FamilyError) -> Self {
        usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        usage(format!("i/o: {e}"))
    }
}

#[derive(Serialize)]
struct PointRecord<'a> {
    family: &'a str,
    params: BTreeMap<String, String>,
    m: i64,
    point: [String; 4],
    surface: [String; 4],
    exponents: [u32; 4],
    verified: bool,
}

#[derive(Serialize)]
struct FamilyRecord {
    id: &'static str,
    summary: &'static str,
    params: BTreeMap<&'static str, &'static str>,
    exponents: [u32; 4],
    curve: &'static str,
    #[serde(skip_serializing_if = "str::is_empty")]
    annotation: &'static str,
}

#[derive(Serialize)]
struct SearchRecord {
    point: [String; 4],
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum ChainRecord {
    Header {
        t0: String,
        k: String,
        rhs: String,
        equation: &'static str,
    },
    Member {
        index: i64,
        point: [String; 4],
        verified: bool,
    },
}

fn strings(p: &ProjPoint) -> [String; 4] {
    p.0.clone().map(|x| x.to_string())
}

fn json_line(out: &mut dyn Write, v: &impl Serialize) -> Result<(), Failure> {
    serde_json::to_writer(&mut *out, v).map_err(|e| usage(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn parse_list<T>(s: &str, what: &str, f: impl Fn(&str) -> Option<T>) -> Result<Vec<T>, Failure> {
    s.split(',')
        .map(|x| f(x.trim()).ok_or_else(|| usage(format!("bad {what} entry {x:?}"))))
        .collect()
}

fn parse_surface(a: &SurfaceArgs) -> Result<DiagonalSurface<Rational>, Failure> {
    let c = parse_list(&a.surface, "surface", parse_rational)?;
    let e = parse_list(&a.exponents, "exponent", |x| x.parse::<u32>().ok())?;
    let c: [Rational; 4] = c
        .try_into()
        .map_err(|_| usage("surface needs four coefficients"))?;
    let e: [u32; 4] = e
        .try_into()
        .map_err(|_| usage("exponents need four entries"))?;
    Ok(DiagonalSurface::new(c, e)?)
}

fn parse_multiples(s: &str) -> Result<Vec<i64>, Failure> {
    let ms = match s.split_once("..") {
        Some((a, b)) => {
            let a: i64 = a
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad range {s:?}")))?;
            let b: i64 = b
                .trim()
                .parse()
                .map_err(|_| usage(format!("bad range {s:?}")))?;
            (a..=b).collect()
        }
        None => parse_list(s, "multiple", |x| x.parse::<i64>().ok())?,
    };
    if ms.is_empty() || ms.contains(&0) {
        return Err(usage(
            "multiples must be a nonempty list of nonzero integers",
        ));
    }
    Ok(ms)
}

fn parse_params(kv: &[String]) -> Result<BTreeMap<String, Rational>, Failure> {
    kv.iter()
        .map(|s| {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| usage(format!("parameter {s:?} is not name=value")))?;
            let q = parse_rational(v.trim()).ok_or_else(|| usage(format!("bad rational {v:?}")))?;
            Ok((k.trim().to_string(), q))
        })
        .collect()
}

/// Runs `f` against the `--out` file when given, else against `stdout`.
fn with_output<R>(
    out: &Option<PathBuf>,
    stdout: &mut dyn Write,
    f: impl FnOnce(&mut dyn Write) -> Result<R, Failure>,
) -> Result<R, Failure> {
    match out {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            let r = f(&mut w)?;
            w.flush()?;
            Ok(r)
        }
        None => f(stdout),
    }
}

/// Runs the CLI on `args` (program name first); returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(stdout, "{text}")
            } else {
                write!(stderr, "{text}")
            };
            return code;
        }
    };
    match dispatch(cli.cmd, stdout, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

fn dispatch(cmd: Cmd, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        Cmd::List => {
            for f in list_families() {
                let rec = FamilyRecord {
                    id: f.id,
                    summary: f.summary,
                    params: f.params.iter().map(|p| (p.name, p.default)).collect(),
                    exponents: f.exps,
                    curve: f.curve.kind(),
                    annotation: f.annotation,
                };
                json_line(stdout, &rec)?;
            }
            Ok(EXIT_OK)
        }
        Cmd::VerifyIdentities { ids } => {
            let corpus = load_corpus().map_err(|e| usage(e.to_string()))?;
            let filter = (!ids.is_empty()).then_some(ids.as_slice());
            let reports = run_identity_suite(&corpus, filter).map_err(|e| usage(e.to_string()))?;
            let mut all = true;
            for r in &reports {
                let ms = r.elapsed.as_secs_f64() * 1e3;
                if r.passed {
                    writeln!(stdout, "PASS {} ({ms:.1} ms)", r.id)?;
                } else {
                    all = false;
                    let w: Vec<String> = r
                        .witness
                        .iter()
                        .flatten()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    writeln!(
                        stdout,
                        "FAIL {} witness [{}] {}",
                        r.id,
                        w.join(", "),
                        r.detail
                    )?;
                }
            }
            Ok(if all { EXIT_OK } else { EXIT_REJECTED })
        }
        Cmd::Gen {
            family,
            params,
            multiples,
            out,
        } => {
            let given = parse_params(&params)?;
            let ms = parse_multiples(&multiples)?;
            let inst = instantiate(&family, &given)?;
            let shown: BTreeMap<String, String> = inst
                .values
                .iter()
                .take(inst.spec.params.len())
                .map(|(k, v)| (k.clone(), v.to_string()))
                .collect();
            let surface = inst.surface.coeffs.clone().map(|c| c.to_string());
            let gen = generate_points(&inst, &ms);
            with_output(&out, stdout, |w| {
                for g in gen {
                    match g.point {
                        Ok(p) => {
                            let verified =
                                check_point(&inst.surface, &p.0) == Ok(CheckOutcome::Accepted);
                            if !verified {
                                return Err(usage(format!("m={} failed the exact check", g.m)));
                            }
                            let rec = PointRecord {
                                family: inst.spec.id,
                                params: shown.clone(),
                                m: g.m,
                                point: strings(&p),
                                surface: surface.clone(),
                                exponents: inst.surface.exps,
                                verified,
                            };
                            json_line(w, &rec)?;
                        }
                        Err(e) => writeln!(stderr, "note: m={} skipped: {e}", g.m)?,
                    }
                }
                Ok(EXIT_OK)
            })
        }
        Cmd::Check { surface, point } => {
            let s = parse_surface(&surface)?;
            let p = parse_list(&point, "point", |x| x.parse::<BigInt>().ok())?;
            let p: [BigInt; 4] = p
                .try_into()
                .map_err(|_| usage("point needs four coordinates"))?;
            match check_point(&s, &p).map_err(|e| usage(e.to_string()))? {
                CheckOutcome::Accepted => {
                    writeln!(stdout, "accepted")?;
                    Ok(EXIT_OK)
                }
                CheckOutcome::Rejected { value, trivial } => {
                    let why = if trivial { " (trivial point)" } else { "" };
                    writeln!(stdout, "rejected value={value}{why}")?;
                    Ok(EXIT_REJECTED)
                }
            }
        }
        Cmd::Search {
            surface,
            height,
            threads,
            out,
        } => {
            let s = parse_surface(&surface)?;
            let r = brute_search(&s, height, threads).map_err(|e| usage(e.to_string()))?;
            with_output(&out, stdout, |w| {
                r.points
                    .iter()
                    .try_for_each(|p| json_line(w, &SearchRecord { point: strings(p) }))
            })?;
            writeln!(
                stderr,
                "scanned {} candidates, {} classes, {:.3} s",
                r.scanned,
                r.points.len(),
                r.elapsed.as_secs_f64()
            )?;
            Ok(EXIT_OK)
        }
        Cmd::Chain { t0, length, out } => {
            let t = parse_rational(&t0).ok_or_else(|| usage(format!("bad rational {t0:?}")))?;
            let (k, members) = sixth_power_chain(&t, length)?;
            let surf = DiagonalSurface::new(
                [
                    Rational::from_integer(2.into()),
                    Rational::from_integer((-2).into()),
                    Rational::from_integer(1.into()),
                    -(k.clone() * &k * &k),
                ],
                [6; 4],
            )?;
            with_output(&out, stdout, |w| {
                let header = ChainRecord::Header {
                    t0: t.to_string(),
                    k: k.to_string(),
                    rhs: (k.clone() * &k * &k).to_string(),
                    equation: "2X^6 - 2Y^6 + Z^6 = K^3 W^6",
                };
                json_line(w, &header)?;
                for c in &members {
                    let verified = check_point(&surf, &c.point.0) == Ok(CheckOutcome::Accepted);
                    if !verified {
                        return Err(usage(format!(
                            "chain member {} failed the exact check",
                            c.index
                        )));
                    }
                    let rec = ChainRecord::Member {
                        index: c.index,
                        point: strings(&c.point),
                        verified,
                    };
                    json_line(w, &rec)?;
                }
                Ok(EXIT_OK)
            })
        }
    }
}
