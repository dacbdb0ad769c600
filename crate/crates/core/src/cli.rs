//! The `checkerboard` command line.

use std::fs;
use std::io::{Read, Write};

use clap::error::ErrorKind;
use clap::{ArgGroup, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::classify::{census_csv, classify, reference_diagram, weaving_census, weaving_diagram};
use crate::diagram::{analyze, emit_pd, parse_pd, Diagram, DiagramReport};
use crate::hypgeom::regular_ngon_target;
use crate::realize::{inscribe_solid, polyhedron_volume_from, solid_report, SolidReport};
use crate::solid::ReferenceSolid;
use crate::Verdict;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFICATION: i32 = 2;

/// Two conings of the same solid must agree to this much.
const CONING_TOL: f64 = 1e-8;

#[derive(Debug, Parser)]
#[command(
    name = "checkerboard",
    version,
    about = "Alternating links with totally geodesic checkerboard surfaces"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Numeric tolerance for geometric checks.
    #[arg(long, global = true, default_value_t = 1e-9, value_parser = parse_tol)]
    tol: f64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Combinatorial report on a PD code.
    Analyze {
        /// PD file, or `-` for standard input.
        #[arg(long)]
        pd: String,
    },
    /// Decide whether both checkerboard surfaces are totally geodesic.
    #[command(group(ArgGroup::new("input").required(true).args(["pd", "solid", "weaving"])))]
    Classify {
        #[arg(long)]
        pd: Option<String>,
        #[arg(long, value_parser = parse_solid)]
        solid: Option<ReferenceSolid>,
        #[arg(long, num_args = 2, value_names = ["P", "Q"])]
        weaving: Option<Vec<usize>>,
    },
    /// Build the standard diagram of a weaving link.
    Weaving {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        /// Also print the PD code.
        #[arg(long)]
        emit_pd: bool,
    },
    /// Classify every weaving link W(p, q) with p <= max-p and q <= max-q.
    Census {
        #[arg(long)]
        max_p: usize,
        #[arg(long)]
        max_q: usize,
        #[arg(long)]
        csv: bool,
    },
    /// Realize a solid as a right-angled ideal polyhedron and verify it.
    Realize {
        #[arg(long, value_parser = parse_solid)]
        solid: ReferenceSolid,
    },
    /// Volume of the right-angled solid and of the link complement.
    Volume {
        #[arg(long, value_parser = parse_solid)]
        solid: ReferenceSolid,
    },
    /// Cross ratio of four consecutive vertices of a regular ideal n-gon.
    Crossratio {
        #[arg(long)]
        n: usize,
    },
}

fn parse_tol(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(t) if t.is_finite() && t >= 0.0 => Ok(t),
        _ => Err(format!(
            "tolerance must be a non-negative number, got '{s}'"
        )),
    }
}

fn parse_solid(s: &str) -> Result<ReferenceSolid, String> {
    s.parse().map_err(|_| {
        format!("unknown solid '{s}' (expected octahedron, cuboctahedron or icosidodecahedron)")
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub verdict: Verdict,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeavingReport {
    pub p: usize,
    pub q: usize,
    pub report: DiagramReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub pd: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VolumeReport {
    pub solid: ReferenceSolid,
    pub volume: f64,
    pub vol_perp: f64,
    /// Volume from a second coning, for comparison.
    pub volume_check: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossRatioReport {
    pub n: usize,
    /// `None` when the target is infinity.
    pub target: Option<f64>,
}

/// Formats `x` with 10 significant digits, trailing zeros removed.
pub fn sig10(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..=15).contains(&exp) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - exp).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

enum Failure {
    Invalid(String),
    Verification(String),
}

fn read_pd(path: &str, stdin: &mut dyn Read) -> Result<Diagram, Failure> {
    let text = if path == "-" {
        let mut s = String::new();
        stdin
            .read_to_string(&mut s)
            .map_err(|e| Failure::Invalid(format!("reading stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("{path}: {e}")))?
    };
    parse_pd(&text).map_err(|e| Failure::Invalid(e.to_string()))
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("reports serialize") + "\n"
}

fn report_text(r: &DiagramReport) -> String {
    let faces: Vec<String> = r
        .face_vector
        .iter()
        .map(|(k, v)| format!("{k}:{v}"))
        .collect();
    format!(
        "crossings: {}\ncomponents: {}\nalternating: {}\nreduced: {}\nsplit: {}\nprime: {}\ntorus (2,q): {}\nfaces: {}\nbigon: {}\ntriangle: {}\n",
        r.crossings,
        r.components,
        r.alternating,
        r.reduced,
        r.split,
        r.prime,
        r.torus2q,
        faces.join(" "),
        r.has_bigon,
        r.has_triangle
    )
}

fn solid_text(r: &SolidReport) -> String {
    let max_angle = r
        .dihedral_angles
        .iter()
        .map(|a| (a.angle - std::f64::consts::FRAC_PI_2).abs())
        .fold(0.0, f64::max);
    let max_face = r.face_residuals.iter().copied().fold(0.0, f64::max);
    let max_cusp = r
        .cusps
        .iter()
        .map(|c| c.right_angle_defect().max(c.opposite_side_defect()))
        .fold(0.0, f64::max);
    let ok = |b: bool| if b { "ok" } else { "FAILED" };
    format!(
        "solid: {}\nvertices: {}\ndihedral angles: {} edges, max |angle - pi/2| = {} ({})\nfaces: {}, max regularity residual = {} ({})\ncusps: {}, max rectangle defect = {} ({})\nedge classes: {} of sizes {:?} ({})\nvolume: {}\nvol_perp: {}\n",
        r.solid,
        r.vertices.len(),
        r.dihedral_angles.len(),
        sig10(max_angle),
        ok(r.checks.right_angles),
        r.face_residuals.len(),
        sig10(max_face),
        ok(r.checks.regular_faces),
        r.cusps.len(),
        sig10(max_cusp),
        ok(r.checks.rectangular_cusps),
        r.edge_class_sizes.len(),
        {
            let mut s = r.edge_class_sizes.clone();
            s.dedup();
            s
        },
        ok(r.checks.edge_classes_of_four),
        sig10(r.volume),
        sig10(r.vol_perp),
    )
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String, Failure> {
    let invalid = |e: &dyn std::fmt::Display| Failure::Invalid(e.to_string());
    match &cli.command {
        Command::Analyze { pd } => {
            let r = analyze(&read_pd(pd, stdin)?);
            Ok(if cli.json {
                to_json(&r)
            } else {
                report_text(&r)
            })
        }
        Command::Classify { pd, solid, weaving } => {
            let d = match (pd, solid, weaving) {
                (Some(path), _, _) => read_pd(path, stdin)?,
                (_, Some(s), _) => reference_diagram(*s),
                (_, _, Some(pq)) => weaving_diagram(pq[0], pq[1]).map_err(|e| invalid(&e))?,
                _ => unreachable!("clap requires one input"),
            };
            let verdict = classify(&d);
            let r = ClassifyReport {
                reason: verdict.reason(),
                verdict,
            };
            Ok(if cli.json {
                to_json(&r)
            } else {
                format!("{}\n", r.verdict)
            })
        }
        Command::Weaving {
            p,
            q,
            emit_pd: with_pd,
        } => {
            let d = weaving_diagram(*p, *q).map_err(|e| invalid(&e))?;
            let r = WeavingReport {
                p: *p,
                q: *q,
                report: analyze(&d),
                pd: with_pd.then(|| emit_pd(&d)),
            };
            if cli.json {
                return Ok(to_json(&r));
            }
            let mut s = format!("W({p},{q})\n{}", report_text(&r.report));
            if let Some(pd) = &r.pd {
                s.push_str(pd);
                s.push('\n');
            }
            Ok(s)
        }
        Command::Census { max_p, max_q, csv } => {
            let rows = weaving_census(*max_p, *max_q).map_err(|e| invalid(&e))?;
            if cli.json {
                Ok(to_json(&rows))
            } else if *csv {
                Ok(census_csv(&rows))
            } else {
                let mut s = String::new();
                for r in &rows {
                    s.push_str(&format!(
                        "W({},{})  {:>3}  {}\n",
                        r.p, r.q, r.crossings, r.verdict
                    ));
                }
                Ok(s)
            }
        }
        Command::Realize { solid } => {
            let r = solid_report(*solid, cli.tol);
            let text = if cli.json {
                to_json(&r)
            } else {
                solid_text(&r)
            };
            if r.checks.all() {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
        Command::Volume { solid } => {
            let p = inscribe_solid(*solid);
            let last = solid.vertex_count() - 1;
            let volume = polyhedron_volume_from(&p, 0, 0)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let volume_check = polyhedron_volume_from(&p, last, 1)
                .map_err(|e| Failure::Verification(e.to_string()))?;
            let r = VolumeReport {
                solid: *solid,
                volume,
                vol_perp: 2.0 * volume,
                volume_check,
            };
            let text = if cli.json {
                to_json(&r)
            } else {
                format!(
                    "vol: {}\nvol_perp: {}\n",
                    sig10(r.volume),
                    sig10(r.vol_perp)
                )
            };
            if (volume - volume_check).abs() <= CONING_TOL {
                Ok(text)
            } else {
                Err(Failure::Verification(format!(
                    "{text}conings disagree: {} vs {}\n",
                    sig10(volume),
                    sig10(volume_check)
                )))
            }
        }
        Command::Crossratio { n } => {
            let t = regular_ngon_target(*n).map_err(|e| invalid(&e))?;
            let r = CrossRatioReport {
                n: *n,
                target: t.value().map(|z| z.re),
            };
            Ok(if cli.json {
                to_json(&r)
            } else {
                match r.target {
                    None => "inf\n".to_string(),
                    Some(x) => format!("{}\n", sig10(x)),
                }
            })
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_INVALID
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(text) => {
            let _ = write!(out, "{text}");
            EXIT_OK
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Verification(text)) => {
            let _ = write!(out, "{text}");
            let _ = writeln!(err, "error: verification failed");
            EXIT_VERIFICATION
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], input: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut stdin = input.as_bytes();
        let argv = std::iter::once("checkerboard").chain(args.iter().copied());
        let code = run(argv, &mut stdin, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig10(3.663862376708876), "3.663862377");
        assert_eq!(sig10(2.0), "2");
        assert_eq!(sig10(0.000123456789012), "0.000123456789");
        assert_eq!(sig10(-1.5), "-1.5");
        assert_eq!(sig10(1.23e-12), "1.230000000e-12");
    }

    #[test]
    fn classify_weaving() {
        let (code, out, _) = call(&["classify", "--weaving", "3", "3"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "BothTotallyGeodesic(Octahedron)\n");
        let (_, out, _) = call(&["classify", "--weaving", "4", "4"], "");
        assert_eq!(out, "BothTotallyGeodesic(Cuboctahedron)\n");
    }

    #[test]
    fn classify_solid_and_stdin() {
        let (_, out, _) = call(&["classify", "--solid", "icosidodecahedron"], "");
        assert_eq!(out, "BothTotallyGeodesic(Icosidodecahedron)\n");
        let (code, out, _) = call(
            &["classify", "--pd", "-"],
            "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
        );
        assert_eq!(code, 0);
        assert!(out.starts_with("PrerequisiteFailed"), "{out}");
    }

    #[test]
    fn volume_octahedron() {
        let (code, out, _) = call(&["volume", "--solid", "octahedron"], "");
        assert_eq!(code, 0);
        assert_eq!(out, "vol: 3.663862377\nvol_perp: 7.327724753\n");
    }

    #[test]
    fn crossratio_targets() {
        assert_eq!(call(&["crossratio", "--n", "5"], "").1, "1.618033989\n");
        assert_eq!(call(&["crossratio", "--n", "4"], "").1, "2\n");
        assert_eq!(call(&["crossratio", "--n", "3"], "").1, "inf\n");
        assert_eq!(call(&["crossratio", "--n", "2"], "").0, 1);
    }

    #[test]
    fn usage_errors() {
        let (code, _, err) = call(&["frobnicate"], "");
        assert_eq!(code, 1);
        assert!(err.contains("Usage"), "{err}");
        assert_eq!(call(&["volume", "--solid", "cube"], "").0, 1);
        assert_eq!(call(&["classify"], "").0, 1);
        assert_eq!(call(&["analyze", "--pd", "/nonexistent/file"], "").0, 1);
        assert_eq!(call(&["analyze", "--pd", "-"], "X(1,2,3)").0, 1);
        let (code, out, _) = call(&["--help"], "");
        assert_eq!(code, 0);
        assert!(out.contains("census"));
    }

    #[test]
    fn realize_passes() {
        for s in ["octahedron", "cuboctahedron", "icosidodecahedron"] {
            let (code, out, _) = call(&["realize", "--solid", s], "");
            assert_eq!(code, 0, "{out}");
        }
    }

    #[test]
    fn impossible_tolerance_is_a_verification_failure() {
        let (code, _, err) = call(
            &["realize", "--solid", "icosidodecahedron", "--tol", "1e-30"],
            "",
        );
        assert_eq!(code, 2);
        assert!(err.contains("verification"));
        assert_eq!(
            call(&["realize", "--solid", "octahedron", "--tol=-1"], "").0,
            1
        );
    }

    #[test]
    fn json_round_trips() {
        let (_, out, _) = call(
            &["--json", "analyze", "--pd", "-"],
            "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)",
        );
        let r: DiagramReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.crossings, 4);
        let (_, out, _) = call(&["realize", "--solid", "cuboctahedron", "--json"], "");
        let r: SolidReport = serde_json::from_str(&out).unwrap();
        assert_eq!(to_json(&r), out);
        let (_, out, _) = call(&["--json", "volume", "--solid", "octahedron"], "");
        let r: VolumeReport = serde_json::from_str(&out).unwrap();
        assert_eq!(to_json(&r), out);
        let (_, out, _) = call(&["--json", "classify", "--weaving", "3", "3"], "");
        let r: ClassifyReport = serde_json::from_str(&out).unwrap();
        assert!(r.verdict.is_both());
        let (_, out, _) = call(&["--json", "crossratio", "--n", "3"], "");
        let r: CrossRatioReport = serde_json::from_str(&out).unwrap();
        assert_eq!(r.target, None);
    }

    #[test]
    fn census_outputs() {
        let (code, out, _) = call(&["census", "--max-p", "4", "--max-q", "4", "--csv"], "");
        assert_eq!(code, 0);
        assert!(out.starts_with("p,q,crossings,verdict,reason\n"));
        assert_eq!(out.lines().count(), 1 + 2 * 3);
        let (_, out, _) = call(&["census", "--max-p", "4", "--max-q", "4"], "");
        assert!(out.contains("W(3,3)"));
        assert_eq!(call(&["census", "--max-p", "2", "--max-q", "4"], "").0, 1);
    }

    #[test]
    fn weaving_emits_pd() {
        let (code, out, _) = call(&["weaving", "--p", "3", "--q", "2", "--emit-pd"], "");
        assert_eq!(code, 0);
        let pd = out.lines().last().unwrap();
        assert_eq!(parse_pd(pd).unwrap().crossing_count(), 4);
    }

    #[test]
    fn deterministic_output() {
        let a = call(&["--json", "realize", "--solid", "icosidodecahedron"], "");
        let b = call(&["--json", "realize", "--solid", "icosidodecahedron"], "");
        assert_eq!(a, b);
    }
}
