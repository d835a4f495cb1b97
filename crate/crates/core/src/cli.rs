//! Command-line front end.
//!
//! Exit codes: 0 when every emitted check passes (or holds with equality),
//! 1 when some check fails, 2 on bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::catalog::{named_class, Convention, NAMES};
use crate::curves::{intersect, CurveSpec};
use crate::error::{Error, Result};
use crate::format::{class_to_json_pretty, parse_class};
use crate::picard::{AnyClass, ClassView};
use crate::pushpull::{push_quadratic, push_quadratic_partial};
use crate::scalar::Rational;
use crate::theorems::{
    certify_slope_equals_a_over_b0, check_pencil_inequality, check_thm1b, derive_b10_bound,
    epsilon_table, kodaira_slope_report, CheckReport, KodairaReport,
};
use crate::verify::verify_all;

pub const DECIMALS_ENV: &str = "MODULISLOPE_DECIMALS";
pub const DEFAULT_DECIMALS: usize = 4;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "modulislope",
    version,
    about = "Exact divisor-class calculus and slope certificates on M_g"
)]
struct Cli {
    /// Emit JSON instead of a text table.
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV where the output is tabular.
    #[arg(long, global = true)]
    csv: bool,
    /// Digits after the decimal point in rendered approximations.
    #[arg(long, global = true)]
    decimals: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// π_*(X·Y) for two classes on M_g,1 (files or catalog names).
    Push {
        x: String,
        y: String,
        /// Allow unknown coefficients in Y.
        #[arg(long)]
        partial: bool,
        /// Write the result here instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Intersection number of a test curve with a class.
    Intersect {
        /// lefschetz:<i>, glued:<i>:<g> or pointed-k3.
        #[arg(long)]
        curve: String,
        #[arg(long)]
        class: String,
    },
    /// Slope of a full class on M_g.
    Slope {
        #[arg(long)]
        class: String,
    },
    /// List bundled classes, or print one as class JSON.
    Catalog { name: Option<String> },
    /// Check the glued-pencil inequality for b_i (two-branch form at i = 10).
    #[command(name = "verify-thm1")]
    VerifyThm1 {
        #[arg(long)]
        class: String,
        #[arg(long)]
        i: u32,
    },
    /// Certify s(D) = a/b_0 for a class of genus at most 23.
    Certify {
        #[arg(long)]
        class: String,
    },
    /// Derive the b_10 bound by eliminating m.
    #[command(name = "bound-b10")]
    BoundB10,
    /// ε_g table.
    #[command(name = "epsilon-table")]
    EpsilonTable {
        #[arg(long, default_value_t = 3)]
        from: u32,
        #[arg(long, default_value_t = 23)]
        to: u32,
    },
    /// Slope of the K3 divisor against the conjectured bound.
    Counterexample,
    /// π_*(K·W̄) and its slope against the printed closed form.
    Kodaira {
        #[arg(long)]
        g: u32,
        /// Reports both conventions when omitted.
        #[arg(long)]
        convention: Option<String>,
    },
    /// Run every reproduction criterion.
    #[command(name = "verify-all")]
    VerifyAll,
}

/// Resolved options for one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub subcommand: String,
    pub inputs: Vec<String>,
    pub format: OutputFormat,
    pub decimals: usize,
    /// `None` means report both conventions.
    pub convention: Option<Convention>,
}

fn decimals_from_env() -> Result<Option<usize>> {
    match std::env::var(DECIMALS_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            Error::Parse(format!(
                "{DECIMALS_ENV} must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(None),
    }
}

/// Reads a class from a JSON file, or looks it up by catalog keyword when
/// no such file exists.
pub fn load_class(arg: &str) -> Result<AnyClass> {
    let path = Path::new(arg);
    if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        parse_class(&text)
    } else {
        named_class(arg).map_err(|_| {
            Error::Parse(format!(
                "{arg:?} is neither a readable file nor a catalog name"
            ))
        })
    }
}

struct Out<'a> {
    w: &'a mut dyn Write,
    cfg: RunConfig,
}

impl Out<'_> {
    fn line(&mut self, s: impl AsRef<str>) {
        let _ = writeln!(self.w, "{}", s.as_ref());
    }

    fn approx(&self, r: &Rational) -> String {
        format!("{r} ≈ {}", r.to_decimal(self.cfg.decimals))
    }

    fn json<T: serde::Serialize + ?Sized>(&mut self, v: &T) {
        let s = serde_json::to_string_pretty(v).expect("in-memory serialization");
        self.line(s);
    }

    fn csv_rows(&mut self, header: &[&str], rows: Vec<Vec<String>>) -> Result<()> {
        let mut wtr = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Parse(e.to_string());
        wtr.write_record(header).map_err(io)?;
        for r in rows {
            wtr.write_record(&r).map_err(io)?;
        }
        let bytes = wtr.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
        let _ = self.w.write_all(&bytes);
        Ok(())
    }

    fn reports(&mut self, reports: &[CheckReport]) -> Result<i32> {
        match self.cfg.format {
            OutputFormat::Json => self.json(reports),
            OutputFormat::Csv => {
                let rows = flatten(reports)
                    .into_iter()
                    .map(|r| {
                        vec![
                            r.id.clone(),
                            r.left.to_string(),
                            r.relation.to_string(),
                            r.right.to_string(),
                            r.witness.clone(),
                            r.verdict.to_string(),
                        ]
                    })
                    .collect();
                self.csv_rows(
                    &["id", "left", "relation", "right", "witness", "verdict"],
                    rows,
                )?;
            }
            OutputFormat::Text => {
                for r in reports {
                    self.report_text(r, 0);
                }
            }
        }
        Ok(if reports.iter().all(CheckReport::is_ok) {
            EXIT_OK
        } else {
            EXIT_FAIL
        })
    }

    fn report_text(&mut self, r: &CheckReport, depth: usize) {
        let pad = "  ".repeat(depth);
        let line = format!(
            "{pad}[{}] {}: {} {} {}   [{}]",
            r.verdict.to_string().to_uppercase(),
            r.id,
            self.approx(&r.left),
            r.relation,
            self.approx(&r.right),
            r.witness
        );
        self.line(line);
        for n in &r.notes {
            self.line(format!("{pad}  note: {n}"));
        }
        for d in &r.details {
            self.report_text(d, depth + 1);
        }
    }
}

fn flatten(reports: &[CheckReport]) -> Vec<&CheckReport> {
    let mut out = Vec::new();
    for r in reports {
        out.push(r);
        out.extend(flatten(&r.details));
    }
    out
}

fn kodaira_text(out: &mut Out<'_>, r: &KodairaReport) {
    out.line(format!("g = {}, convention = {}", r.g, r.convention));
    out.line(format!("  π_*(K·W̄) = {}", r.class));
    let slope = match r.slope.finite() {
        Some(s) => out.approx(s),
        None => "infinity".into(),
    };
    out.line(format!("  computed slope = {slope}"));
    out.line(format!(
        "  printed slope  = {}",
        out.approx(&r.printed_slope)
    ));
    out.line(format!(
        "  λ-coefficient matches 13g³+6g²-9g+2: {}",
        r.lambda_match
    ));
    out.line(format!("  slope matches printed value: {}", r.slope_match));
}

fn dispatch(cli: Cli, out: &mut Out<'_>) -> Result<i32> {
    match cli.command {
        Command::Push {
            x,
            y,
            partial,
            output,
        } => {
            let xc = load_class(&x)?;
            let xc = xc
                .as_pointed()
                .ok_or_else(|| Error::Parse(format!("{x}: expected a full class on Mg1")))?;
            let yc = load_class(&y)?;
            let json = if partial {
                class_to_json_pretty(&push_quadratic_partial(xc, &yc.to_partial())?)
            } else {
                let yc = match &yc {
                    AnyClass::Pointed(p) => p,
                    AnyClass::Partial(_) => {
                        return Err(Error::Parse(format!(
                            "{y}: has unknown coefficients; use --partial"
                        )))
                    }
                    AnyClass::Full(_) => {
                        return Err(Error::Parse(format!("{y}: expected a class on Mg1")))
                    }
                };
                class_to_json_pretty(&push_quadratic(xc, yc)?)
            };
            match output {
                Some(path) => std::fs::write(&path, json + "\n")
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
                None => out.line(json),
            }
            Ok(EXIT_OK)
        }
        Command::Intersect { curve, class } => {
            let c = curve.parse::<CurveSpec>()?.build()?;
            let d = load_class(&class)?;
            let v = intersect(&c, &d)?;
            match out.cfg.format {
                OutputFormat::Json => {
                    out.json(&serde_json::json!({ "curve": c.name(), "value": v }))
                }
                _ => out.line(v.to_string()),
            }
            Ok(EXIT_OK)
        }
        Command::Slope { class } => {
            let d = load_class(&class)?;
            let s = d.slope()?;
            match out.cfg.format {
                OutputFormat::Json => out.json(&serde_json::json!({ "slope": s })),
                _ => out.line(match s.finite() {
                    Some(r) => out.approx(r),
                    None => "infinity".into(),
                }),
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { name: None } => {
            match out.cfg.format {
                OutputFormat::Json => out.json(
                    &NAMES
                        .iter()
                        .map(|(n, d)| serde_json::json!({"name": n, "description": d}))
                        .collect::<Vec<_>>(),
                ),
                _ => {
                    for (n, d) in NAMES {
                        out.line(format!("{n:<34} {d}"));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Catalog { name: Some(name) } => {
            let c = named_class(&name)?;
            out.line(class_to_json_pretty(&c));
            Ok(EXIT_OK)
        }
        Command::VerifyThm1 { class, i } => {
            let d = load_class(&class)?;
            let report = if i == 10 && d.genus() >= 20 {
                check_thm1b(&d)?
            } else {
                check_pencil_inequality(&d, i)?
            };
            out.reports(&[report])
        }
        Command::Certify { class } => {
            let d = load_class(&class)?;
            out.reports(&[certify_slope_equals_a_over_b0(&d)?])
        }
        Command::BoundB10 => {
            let b = derive_b10_bound()?;
            match out.cfg.format {
                OutputFormat::Json => {
                    out.line(serde_json::json!({ "alpha": b.alpha, "beta": b.beta }).to_string())
                }
                OutputFormat::Csv => out.csv_rows(
                    &["alpha", "beta"],
                    vec![vec![b.alpha.to_string(), b.beta.to_string()]],
                )?,
                OutputFormat::Text => {
                    out.line("b_10 >= alpha·b_0 - beta·a whenever b_10 < 78·b_0 - 11·a");
                    out.line(format!("  alpha = {}", out.approx(&b.alpha)));
                    out.line(format!("  beta  = {}", out.approx(&b.beta)));
                    out.line(format!("  m >= {}", b.m_lower));
                    out.line(format!("  [λ] π_*(W̄·E) = {} >= 0", b.lambda_form));
                    out.line(format!("  [δ_0] π_*(W̄·E) = {}", b.delta0_form));
                    for a in &b.assumptions {
                        out.line(format!("  assumption: {a}"));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::EpsilonTable { from, to } => {
            let rows = epsilon_table(from, to)?;
            match out.cfg.format {
                OutputFormat::Json => out.json(&rows),
                OutputFormat::Csv => {
                    let data = rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.g.to_string(),
                                r.upper_bound_source.to_string(),
                                r.u_g.to_string(),
                                r.binding_i.to_string(),
                                r.threshold.to_string(),
                                r.epsilon_g.to_string(),
                            ]
                        })
                        .collect();
                    out.csv_rows(
                        &["g", "source", "u_g", "binding_i", "threshold", "epsilon"],
                        data,
                    )?;
                }
                OutputFormat::Text => {
                    let d = out.cfg.decimals;
                    out.line(format!(
                        "{:>3}  {:<13}  {:>12}  {:>3}  {:>12}  {:>12}",
                        "g", "source", "u_g", "i", "threshold", "epsilon"
                    ));
                    for r in &rows {
                        out.line(format!(
                            "{:>3}  {:<13}  {:>12}  {:>3}  {:>12}  {:>12}",
                            r.g,
                            r.upper_bound_source.to_string(),
                            r.u_g.to_decimal(d),
                            r.binding_i,
                            r.threshold.to_decimal(d),
                            r.epsilon_g.to_decimal(d)
                        ));
                    }
                }
            }
            Ok(if rows.iter().all(|r| r.is_valid()) {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::Counterexample => {
            let k3 = crate::catalog::k3_divisor();
            let cert = certify_slope_equals_a_over_b0(&k3)?;
            let bound = Rational::frac(78, 11);
            let bk = intersect(&crate::curves::lefschetz_pencil(10)?, &k3)?;
            let ok = cert.is_ok() && cert.left < bound;
            match out.cfg.format {
                OutputFormat::Json => out.json(&serde_json::json!({
                    "slope": cert.left,
                    "conjectured_bound": bound,
                    "strictly_smaller": cert.left < bound,
                    "lefschetz_pairing": bk,
                    "certificate": cert,
                })),
                _ => {
                    out.line(format!("s(K̄) = {} < {}", cert.left, bound));
                    out.line(format!(
                        "  B·K̄ = {bk} (B = Lefschetz pencil of genus-10 K3 sections)"
                    ));
                    out.report_text(&cert, 1);
                }
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAIL })
        }
        Command::Kodaira { g, convention } => {
            let convs = match convention.or(out.cfg.convention.map(|c| c.to_string())) {
                Some(c) => vec![c.parse()?],
                None => Convention::ALL.to_vec(),
            };
            let reports = convs
                .into_iter()
                .map(|c| kodaira_slope_report(g, c))
                .collect::<Result<Vec<_>>>()?;
            match out.cfg.format {
                OutputFormat::Json => out.json(&reports),
                _ => reports.iter().for_each(|r| kodaira_text(out, r)),
            }
            Ok(if reports.iter().all(|r| r.lambda_match) {
                EXIT_OK
            } else {
                EXIT_FAIL
            })
        }
        Command::VerifyAll => {
            let v = verify_all(out.cfg.decimals);
            match out.cfg.format {
                OutputFormat::Json => out.json(&v),
                OutputFormat::Csv => {
                    let rows = v
                        .criteria
                        .iter()
                        .map(|c| {
                            vec![
                                c.id.to_string(),
                                c.title.to_string(),
                                (if c.passed { "pass" } else { "fail" }).into(),
                                c.detail.clone(),
                            ]
                        })
                        .collect();
                    out.csv_rows(&["id", "criterion", "verdict", "detail"], rows)?;
                }
                OutputFormat::Text => {
                    for c in &v.criteria {
                        let tag = if c.passed { "PASS" } else { "FAIL" };
                        let detail = if c.passed {
                            String::new()
                        } else {
                            format!(" -- {}", c.detail)
                        };
                        out.line(format!("[{tag}] {:>2}. {}{detail}", c.id, c.title));
                    }
                    out.line(format!("open discrepancies ({}):", v.discrepancies.len()));
                    for d in &v.discrepancies {
                        out.line(format!("  - {}: {}", d.id, d.statement));
                        out.line(format!("      computed: {}", d.computed));
                        out.line(format!("      printed:  {}", d.printed));
                    }
                }
            }
            Ok(if v.all_passed() { EXIT_OK } else { EXIT_FAIL })
        }
    }
}

fn subcommand_name(c: &Command) -> &'static str {
    match c {
        Command::Push { .. } => "push",
        Command::Intersect { .. } => "intersect",
        Command::Slope { .. } => "slope",
        Command::Catalog { .. } => "catalog",
        Command::VerifyThm1 { .. } => "verify-thm1",
        Command::Certify { .. } => "certify",
        Command::BoundB10 => "bound-b10",
        Command::EpsilonTable { .. } => "epsilon-table",
        Command::Counterexample => "counterexample",
        Command::Kodaira { .. } => "kodaira",
        Command::VerifyAll => "verify-all",
    }
}

fn inputs(c: &Command) -> Vec<String> {
    match c {
        Command::Push { x, y, .. } => vec![x.clone(), y.clone()],
        Command::Intersect { class, .. }
        | Command::Slope { class }
        | Command::VerifyThm1 { class, .. }
        | Command::Certify { class } => vec![class.clone()],
        _ => Vec::new(),
    }
}

/// Runs the CLI with explicit output streams; returns the exit code.
pub fn run_with<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(stderr, "{rendered}");
            } else {
                let _ = write!(stdout, "{rendered}");
            }
            return code;
        }
    };
    let decimals = match cli
        .decimals
        .map(Ok)
        .or_else(|| decimals_from_env().transpose())
    {
        Some(Ok(d)) => d,
        Some(Err(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_INPUT;
        }
        None => DEFAULT_DECIMALS,
    };
    let format = if cli.json {
        OutputFormat::Json
    } else if cli.csv {
        OutputFormat::Csv
    } else {
        OutputFormat::Text
    };
    let convention = match &cli.command {
        Command::Kodaira {
            convention: Some(c),
            ..
        } => c.parse().ok(),
        _ => None,
    };
    let cfg = RunConfig {
        subcommand: subcommand_name(&cli.command).to_string(),
        inputs: inputs(&cli.command),
        format,
        decimals,
        convention,
    };
    let mut out = Out { w: stdout, cfg };
    match dispatch(cli, &mut out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_INPUT
        }
    }
}

pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["modulislope"];
        argv.extend_from_slice(args);
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn counterexample_line() {
        let (code, out, _) = run_capture(&["counterexample"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next().unwrap(), "s(K̄) = 7 < 78/11");
    }

    #[test]
    fn bound_json() {
        let (code, out, _) = run_capture(&["bound-b10", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"alpha":"45045/631","beta":"6435/631"}"#);
    }

    #[test]
    fn intersect_named() {
        let (code, out, _) = run_capture(&[
            "intersect",
            "--curve",
            "lefschetz:10",
            "--class",
            "k3divisor",
        ]);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), "-1");
    }

    #[test]
    fn input_errors_exit_2() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        let (code, _, err) = run_capture(&[
            "intersect",
            "--curve",
            "lefschetz:10",
            "--class",
            "/nonexistent.json",
        ]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
        assert_eq!(
            run_capture(&[
                "intersect",
                "--curve",
                "lefschetz:13",
                "--class",
                "k3divisor"
            ])
            .0,
            2
        );
        assert_eq!(
            run_capture(&["kodaira", "--g", "5", "--convention", "odd"]).0,
            2
        );
    }

    #[test]
    fn failing_check_exit_1() {
        let (code, out, _) = run_capture(&["verify-thm1", "--class", "brillnoether:5", "--i", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("[EQUALITY]"));
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("d.json");
        std::fs::write(
            &p,
            r#"{"space":"Mg","genus":10,"coeffs":{"lambda":"100","delta0":"-1"}}"#,
        )
        .unwrap();
        let (code, _, _) = run_capture(&["certify", "--class", p.to_str().unwrap()]);
        assert_eq!(code, 1);
    }

    #[test]
    fn decimals_flag() {
        let (_, out, _) = run_capture(&["bound-b10", "--decimals", "2"]);
        assert!(out.contains("≈ 71.38"), "{out}");
    }

    #[test]
    fn epsilon_csv_header() {
        let (code, out, _) = run_capture(&["epsilon-table", "--from", "10", "--to", "12", "--csv"]);
        assert_eq!(code, 0);
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap(),
            "g,source,u_g,binding_i,threshold,epsilon"
        );
        assert_eq!(lines.next().unwrap(), "10,petri,36/5,5,47/6,19/30");
    }
}
