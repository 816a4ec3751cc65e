//! The `moma` command-line front end.
//!
//! Complexes are read from `.scx` files or from the builtin catalog with the
//! `@name` syntax. Results are printed as JSON on standard output (the
//! `catalog` command prints `.scx` text); diagnostics go to standard error.
//!
//! Exit codes: `0` success or affirmative verdict, `1` non-affirmative
//! verdict (not flag, not aspherical or criterion not applicable,
//! certificate refused, not or not provably a sphere), `2` input error,
//! `3` capacity error. Scripts can branch on the code and read the JSON for
//! the distinction between refuted and undecided.

use crate::asphericity::{builtin_pair, davis_criterion, Outcome};
use crate::catalog;
use crate::coxeter::{self, RacgPresentation, Word};
use crate::davis;
use crate::error::{Error, Result};
use crate::homology::{homology, Coefficients};
use crate::polyprod::{build_rk, euler_formula};
use crate::scx;
use crate::simplicial::{is_sphere_triangulation, SimplicialComplex, SphereTier, SphereVerdict};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use std::io::Write;

#[derive(Parser)]
#[command(
    name = "moma",
    about = "Real moment-angle complexes, exact homology, and Davis complexes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the complex is flag; a failure carries the minimal
    /// missing face.
    Flag { input: String },
    /// Run the asphericity criterion for Z_K over a builtin pair.
    Aspherical {
        input: String,
        #[arg(long, value_parser = ["real", "complex", "quaternionic"])]
        pair: String,
    },
    /// Operations on the real moment-angle complex R_K.
    Rk {
        #[command(subcommand)]
        action: RkAction,
    },
    /// Certify nonpositive curvature of the cubical complexes attached to K.
    Npc {
        input: String,
        #[arg(long, default_value_t = davis::NPC_DEFAULT_RADIUS)]
        radius: u32,
    },
    /// Operations in the right-angled Coxeter group W_K.
    Racg {
        #[command(subcommand)]
        action: RacgAction,
    },
    /// Davis-complex balls and the covering map over R_K.
    Davis {
        #[command(subcommand)]
        action: DavisAction,
    },
    /// Decide (up to the documented tiers) whether K triangulates a sphere.
    SphereCheck { input: String },
    /// Print a catalog complex as .scx text.
    Catalog { name: String },
}

#[derive(Subcommand)]
enum RkAction {
    /// Build R_K and print the cell complex as JSON.
    Build { input: String },
    /// Integral (or mod-2) homology of R_K.
    Homology {
        input: String,
        #[arg(long)]
        mod2: bool,
    },
    /// Euler characteristic, by cell census and by the closed formula.
    Euler { input: String },
}

#[derive(Subcommand)]
enum RacgAction {
    /// Normal form of a word (comma-separated generators, `e` for empty).
    Nf {
        input: String,
        #[arg(long)]
        word: String,
    },
    /// Enumerate the ball of the given radius, grouped by length.
    Ball {
        input: String,
        #[arg(long)]
        radius: u32,
    },
    /// Sphere sizes (growth) up to the given radius.
    Growth {
        input: String,
        #[arg(long)]
        radius: u32,
    },
}

#[derive(Subcommand)]
enum DavisAction {
    /// Build the radius-r ball of the Davis complex.
    Ball {
        input: String,
        #[arg(long)]
        radius: u32,
    },
    /// Verify the covering map from the radius-r ball onto R_K.
    Cover {
        input: String,
        #[arg(long)]
        radius: u32,
    },
}

/// Entry point for the binary: argv from the environment, output to stdout.
pub fn run_main() -> i32 {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = std::io::stdout();
    run(&args, &mut stdout)
}

/// Parses `argv` and executes; prints results to `out` and diagnostics to
/// stderr. Returns the process exit code.
pub fn run<S: AsRef<str>>(args: &[S], out: &mut impl Write) -> i32 {
    let cli = match Cli::try_parse_from(args.iter().map(|a| a.as_ref())) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("moma: {err}");
            match err {
                Error::Capacity(_) => 3,
                _ => 2,
            }
        }
    }
}

fn load_complex(input: &str) -> Result<SimplicialComplex> {
    if let Some(name) = input.strip_prefix('@') {
        return catalog::get(name);
    }
    let text = std::fs::read_to_string(input)
        .map_err(|e| Error::input(format!("cannot read {input}: {e}")))?;
    scx::read_str(&text)
}

fn emit(out: &mut impl Write, value: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    writeln!(out, "{text}").map_err(|e| Error::input(format!("write failed: {e}")))
}

fn dispatch(cli: Cli, out: &mut impl Write) -> Result<i32> {
    match cli.command {
        Command::Flag { input } => {
            let k = load_complex(&input)?;
            match k.is_flag() {
                Ok(()) => {
                    emit(out, &json!({ "flag": true, "witness": Value::Null }))?;
                    Ok(0)
                }
                Err(w) => {
                    emit(out, &json!({ "flag": false, "witness": w.missing_face.vertices() }))?;
                    Ok(1)
                }
            }
        }
        Command::Aspherical { input, pair } => {
            let k = load_complex(&input)?;
            let descriptor = builtin_pair(&pair)?;
            let verdict = davis_criterion(&k, &descriptor);
            emit(out, &verdict.to_json())?;
            Ok(if verdict.outcome == Outcome::Aspherical { 0 } else { 1 })
        }
        Command::Rk { action } => match action {
            RkAction::Build { input } => {
                let k = load_complex(&input)?;
                let rk = build_rk(&k)?;
                emit(out, &rk.to_json())?;
                Ok(0)
            }
            RkAction::Homology { input, mod2 } => {
                let k = load_complex(&input)?;
                let rk = build_rk(&k)?;
                let coeffs = if mod2 { Coefficients::Mod2 } else { Coefficients::Integer };
                let h = homology(&rk, coeffs)?;
                emit(out, &h.to_json())?;
                Ok(0)
            }
            RkAction::Euler { input } => {
                let k = load_complex(&input)?;
                let rk = build_rk(&k)?;
                let census = rk.euler_characteristic();
                let formula = euler_formula(&k);
                emit(
                    out,
                    &json!({ "euler": census, "formula": formula, "agree": census == formula }),
                )?;
                Ok(0)
            }
        },
        Command::Npc { input, radius } => {
            let k = load_complex(&input)?;
            let cert = davis::npc_certificate_with_radius(&k, radius)?;
            emit(out, &cert.to_json())?;
            Ok(if cert.issued() { 0 } else { 1 })
        }
        Command::Racg { action } => match action {
            RacgAction::Nf { input, word } => {
                let k = load_complex(&input)?;
                let p = RacgPresentation::from_complex(&k);
                let w = Word::parse(&word, p.generators())?;
                let nf = coxeter::normal_form(&p, &w);
                let support: Vec<u32> = (1..=p.generators())
                    .filter(|&i| nf.support_mask() >> (i - 1) & 1 == 1)
                    .collect();
                emit(
                    out,
                    &json!({
                        "input": w.to_string(),
                        "normal_form": nf.to_string(),
                        "length": nf.len(),
                        "support": support,
                    }),
                )?;
                Ok(0)
            }
            RacgAction::Ball { input, radius } => {
                let k = load_complex(&input)?;
                let p = RacgPresentation::from_complex(&k);
                let b = coxeter::ball(&p, radius)?;
                let spheres: Vec<Vec<String>> = b
                    .spheres()
                    .iter()
                    .map(|s| s.iter().map(|w| w.to_string()).collect())
                    .collect();
                emit(
                    out,
                    &json!({
                        "radius": radius,
                        "sphere_sizes": b.sphere_sizes(),
                        "spheres": spheres,
                    }),
                )?;
                Ok(0)
            }
            RacgAction::Growth { input, radius } => {
                let k = load_complex(&input)?;
                let p = RacgPresentation::from_complex(&k);
                emit(
                    out,
                    &json!({ "radius": radius, "sphere_sizes": coxeter::sphere_sizes(&p, radius)? }),
                )?;
                Ok(0)
            }
        },
        Command::Davis { action } => match action {
            DavisAction::Ball { input, radius } => {
                let k = load_complex(&input)?;
                let built = davis::davis_ball(&k, radius)?;
                let interior: Vec<&String> = built.interior.iter().collect();
                emit(
                    out,
                    &json!({
                        "radius": radius,
                        "chambers": built.chamber_count,
                        "complex": built.complex.to_json(),
                        "interior_cells": interior,
                        "covering": built.covering,
                        "notes": built.notes,
                    }),
                )?;
                Ok(0)
            }
            DavisAction::Cover { input, radius } => {
                let k = load_complex(&input)?;
                let report = davis::covering_check(&k, radius)?;
                emit(out, &report.to_json())?;
                Ok(if report.passed() { 0 } else { 1 })
            }
        },
        Command::SphereCheck { input } => {
            let k = load_complex(&input)?;
            let verdict = is_sphere_triangulation(&k);
            let (label, tier, reason, code) = match &verdict {
                SphereVerdict::Yes { tier, reason } => (
                    "yes",
                    match tier {
                        SphereTier::Exact => Value::from("exact"),
                        SphereTier::HomologyCertified => Value::from("homology-certified"),
                    },
                    reason.clone(),
                    0,
                ),
                SphereVerdict::No { reason } => ("no", Value::Null, reason.clone(), 1),
                SphereVerdict::Unknown { reason } => ("unknown", Value::Null, reason.clone(), 1),
            };
            emit(out, &json!({ "verdict": label, "tier": tier, "reason": reason }))?;
            Ok(code)
        }
        Command::Catalog { name } => {
            let k = catalog::get(&name)?;
            write!(out, "{}", scx::write_string(&k))
                .map_err(|e| Error::input(format!("write failed: {e}")))?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = run(args, &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn flag_pentagon() {
        let (code, text) = run_capture(&["moma", "flag", "@pentagon"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["flag"], Value::Bool(true));
    }

    #[test]
    fn flag_boundary_triangle_fails() {
        let (code, text) = run_capture(&["moma", "flag", "@boundary-simplex:2"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["witness"], json!([1, 2, 3]));
    }

    #[test]
    fn rk_homology_sphere() {
        let (code, text) = run_capture(&["moma", "rk", "homology", "@boundary-simplex:2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        let bettis: Vec<u64> = v["degrees"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d["betti"].as_u64().unwrap())
            .collect();
        assert_eq!(bettis, vec![1, 0, 1]);
    }

    #[test]
    fn aspherical_pentagon_complex_pair() {
        let (code, text) =
            run_capture(&["moma", "aspherical", "@pentagon", "--pair", "complex"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["failed"], json!(["ii"]));
        assert_eq!(v["outcome"], json!("NotAspherical"));
    }

    #[test]
    fn output_is_deterministic() {
        let (_, a) = run_capture(&["moma", "rk", "build", "@pentagon"]);
        let (_, b) = run_capture(&["moma", "rk", "build", "@pentagon"]);
        assert_eq!(a, b);
        let (_, a) = run_capture(&["moma", "davis", "cover", "@simplex:1", "--radius", "1"]);
        let (_, b) = run_capture(&["moma", "davis", "cover", "@simplex:1", "--radius", "1"]);
        assert_eq!(a, b);
    }

    #[test]
    fn catalog_emits_scx() {
        let (code, text) = run_capture(&["moma", "catalog", "pentagon"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("vertices 5\n"));
        let k = scx::read_str(&text).unwrap();
        assert_eq!(k, catalog::get("pentagon").unwrap());
    }

    #[test]
    fn exit_codes_for_errors() {
        let (code, _) = run_capture(&["moma", "flag", "@no-such-entry"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["moma", "flag", "/nonexistent/path.scx"]);
        assert_eq!(code, 2);
        let (code, _) = run_capture(&["moma", "racg", "growth", "@pentagon", "--radius", "99"]);
        assert_eq!(code, 3);
        let (code, _) = run_capture(&["moma", "no-such-command"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn sphere_check_verdicts() {
        let (code, text) = run_capture(&["moma", "sphere-check", "@pentagon"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["verdict"], json!("yes"));
        assert_eq!(v["tier"], json!("exact"));
        let (code, _) = run_capture(&["moma", "sphere-check", "@points:3"]);
        assert_eq!(code, 1);
        let (code, text) = run_capture(&["moma", "sphere-check", "@boundary-simplex:4"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["tier"], json!("homology-certified"));
    }

    #[test]
    fn racg_nf_and_growth() {
        let (code, text) = run_capture(&["moma", "racg", "nf", "@pentagon", "--word", "2,1,1,2"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["normal_form"], json!("e"));
        let (code, text) = run_capture(&["moma", "racg", "growth", "@simplex:1", "--radius", "4"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["sphere_sizes"], json!([1, 2, 1, 0, 0]));
    }

    #[test]
    fn npc_verdicts() {
        let (code, _) = run_capture(&["moma", "npc", "@pentagon"]);
        assert_eq!(code, 0);
        let (code, text) = run_capture(&["moma", "npc", "@boundary-simplex:2"]);
        assert_eq!(code, 1);
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["witness"], json!([1, 2, 3]));
    }
}
