//! Command-line interface: generate, validate, measure, certify, fold,
//! verify, optimize, and render grid-diagram ribbons.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure,
//! 3 invalid input data.

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use gridribbon::alexander::{grid_alexander, torus_alexander, twist_alexander, verify_family};
use gridribbon::anneal::{anneal_restarts, SearchConfig};
use gridribbon::fold::{bound_vs_crossing, build_layout, fold_path, upper_bound};
use gridribbon::generators::{torus_grid, twist_grid, KnotFamily, TorusParams, TwistParams};
use gridribbon::grid::{trace, validate, GridDiagram};
use gridribbon::metrics::{certify_quadratic, certify_torus, certify_twist, ribbon_length};
use gridribbon::render::{render_fold, render_grid, render_knot, render_ribbon, RenderStyle};
use serde::Serialize;
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

const EXIT_OK: i32 = 0;
const EXIT_USAGE: i32 = 1;
const EXIT_VERIFICATION: i32 = 2;
const EXIT_DATA: i32 = 3;

#[derive(Parser)]
#[command(
    name = "gridribbon",
    about = "Grid diagrams, flat knotted ribbons, and ribbonlength bound certificates",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for structured results.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Seed for randomized subcommands.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Suppress informational notes on stderr.
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a family grid diagram and emit its grid JSON.
    Generate {
        #[command(subcommand)]
        family: GenerateFamily,
    },
    /// Check the grid-diagram conditions of a diagram.
    Validate { file: String },
    /// Exact ribbon length of a diagram.
    Length { file: String },
    /// Certify a ribbonlength upper bound.
    Certify {
        #[command(subcommand)]
        target: CertifyTarget,
    },
    /// Folded-ribbon layout, lengths, and closed-form bounds.
    Fold {
        /// Number of half twists.
        #[arg(long)]
        n: i64,
        /// Ribbon width.
        #[arg(long, default_value_t = 1.0)]
        width: f64,
        /// Include the full layout coordinates in the payload.
        #[arg(long)]
        layout_json: bool,
    },
    /// Verify the knot family of a diagram through its Alexander polynomial.
    Verify {
        file: String,
        /// Expected family: torus:P,Q or twist:N.
        #[arg(long)]
        expect: String,
        /// Also print the computed polynomial.
        #[arg(long)]
        print_poly: bool,
    },
    /// Shorten a diagram by annealing over knot-preserving grid moves.
    Optimize {
        file: String,
        #[arg(long, default_value_t = 2000)]
        steps: u64,
        #[arg(long, default_value_t = 3.0)]
        temp: f64,
        #[arg(long, default_value_t = 0.999)]
        cool: f64,
        #[arg(long, default_value_t = 1)]
        stab_budget: usize,
        #[arg(long, default_value_t = 1)]
        restarts: usize,
    },
    /// Render a diagram (or the folded layout with FILE = "fold") as SVG.
    Render {
        /// Grid JSON file, "-" for stdin, or the literal "fold".
        file: String,
        #[arg(long, value_enum, default_value_t = StyleKind::Grid)]
        style: StyleKind,
        /// Pixels per grid cell (or per ribbon width for fold layouts).
        #[arg(long, default_value_t = 40.0)]
        cell_px: f64,
        /// Draw all dots alike.
        #[arg(long)]
        monochrome_dots: bool,
        /// Half twists (fold rendering only).
        #[arg(long)]
        n: Option<i64>,
        /// Ribbon width (fold rendering only).
        #[arg(long, default_value_t = 1.0)]
        width: f64,
    },
}

#[derive(Subcommand)]
enum GenerateFamily {
    /// Torus knot diagram on a (p+q)-sized grid.
    Torus {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Twist knot diagram on an (n+4)-sized grid.
    Twist {
        #[arg(long)]
        n: i64,
    },
}

#[derive(Subcommand)]
enum CertifyTarget {
    /// Linear bound 8c for a torus knot.
    Torus {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
    },
    /// Linear bound 8c for a twist knot.
    Twist {
        #[arg(long)]
        n: i64,
    },
    /// Quadratic bound 2(c+1)(c+2) for a diagram with known crossing number.
    Quadratic {
        file: String,
        #[arg(long)]
        crossings: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StyleKind {
    Grid,
    Knot,
    Ribbon,
}

/// Failures carrying their process exit code.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: msg.into(),
        }
    }

    fn data(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_DATA,
            message: msg.into(),
        }
    }

    fn verification(msg: impl Into<String>) -> Self {
        Failure {
            code: EXIT_VERIFICATION,
            message: msg.into(),
        }
    }
}

/// Library errors about the input diagram are data errors; everything else
/// (bad parameters, bad configs) is a usage error.
fn classify(e: gridribbon::Error) -> Failure {
    use gridribbon::Error::*;
    match e {
        InvalidGrid(_) | MultiComponent { .. } | ZeroCrossings | MalformedPd(_)
        | CoefficientOverflow => Failure::data(e.to_string()),
        _ => Failure::usage(e.to_string()),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(()) => std::process::exit(EXIT_OK),
        Err(f) => {
            eprintln!("gridribbon: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn read_grid(path: &str) -> Result<GridDiagram, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::data(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::data(format!("reading {path}: {e}")))?
    };
    GridDiagram::from_json(&text).map_err(|e| Failure::data(e.to_string()))
}

struct Output {
    out: Option<PathBuf>,
    quiet: bool,
}

impl Output {
    fn emit(&self, content: &str) -> Result<(), Failure> {
        match &self.out {
            None => {
                print!("{content}");
                Ok(())
            }
            Some(path) => {
                std::fs::write(path, content)
                    .map_err(|e| Failure::data(format!("writing {}: {e}", path.display())))?;
                if !self.quiet {
                    eprintln!("wrote {}", path.display());
                }
                Ok(())
            }
        }
    }

    fn emit_payload<T: Serialize>(
        &self,
        format: Format,
        payload: &T,
        table: String,
    ) -> Result<(), Failure> {
        match format {
            Format::Json => {
                let json = serde_json::to_string(payload)
                    .map_err(|e| Failure::data(format!("serializing output: {e}")))?;
                self.emit(&format!("{json}\n"))
            }
            Format::Table => self.emit(&table),
        }
    }
}

fn table_rows(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

fn ratio_string(r: (u64, u64)) -> String {
    if r.1 == 1 {
        r.0.to_string()
    } else {
        format!("{}/{}", r.0, r.1)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let output = Output {
        out: cli.out.clone(),
        quiet: cli.quiet,
    };
    match cli.command {
        Command::Generate { family } => {
            let grid = match family {
                GenerateFamily::Torus { p, q } => {
                    let params = TorusParams::new(p, q).map_err(|e| Failure::usage(e.to_string()))?;
                    torus_grid(&params)
                }
                GenerateFamily::Twist { n } => {
                    let params = TwistParams::new(n).map_err(|e| Failure::usage(e.to_string()))?;
                    twist_grid(&params)
                }
            };
            output.emit(&format!("{}\n", grid.to_json()))
        }

        Command::Validate { file } => {
            let grid = read_grid(&file)?;
            let report = validate(&grid);
            let payload = json!({
                "black_is_permutation": report.black_is_permutation,
                "white_is_permutation": report.white_is_permutation,
                "no_shared_cell": report.no_shared_cell,
                "valid": report.is_valid(),
            });
            let table = table_rows(&[
                ("black is permutation", report.black_is_permutation.to_string()),
                ("white is permutation", report.white_is_permutation.to_string()),
                ("no shared cell", report.no_shared_cell.to_string()),
                ("valid", report.is_valid().to_string()),
            ]);
            output.emit_payload(cli.format, &payload, table)?;
            if report.is_valid() {
                Ok(())
            } else {
                Err(Failure::verification("diagram is not a valid grid diagram"))
            }
        }

        Command::Length { file } => {
            let grid = read_grid(&file)?;
            let report = ribbon_length(&grid).map_err(|e| Failure::data(e.to_string()))?;
            let table = table_rows(&[
                ("horizontal sum", report.horizontal_sum.to_string()),
                ("vertical sum", report.vertical_sum.to_string()),
                ("total", report.total.to_string()),
                ("width", report.width.to_string()),
                ("length/width", ratio_string(report.ratio)),
            ]);
            output.emit_payload(cli.format, &report, table)
        }

        Command::Certify { target } => {
            let (cert, extra): (gridribbon::metrics::BoundCertificate, Option<(u64, bool)>) =
                match target {
                    CertifyTarget::Torus { p, q } => {
                        let params =
                            TorusParams::new(p, q).map_err(|e| Failure::usage(e.to_string()))?;
                        (certify_torus(&params), None)
                    }
                    CertifyTarget::Twist { n } => {
                        let params =
                            TwistParams::new(n).map_err(|e| Failure::usage(e.to_string()))?;
                        (certify_twist(&params), None)
                    }
                    CertifyTarget::Quadratic { file, crossings } => {
                        let grid = read_grid(&file)?;
                        let q = certify_quadratic(&grid, crossings).map_err(classify)?;
                        let extra = Some((q.grid_size_bound, q.within_grid_size_bound));
                        (q.certificate, extra)
                    }
                };
            let mut rows = vec![
                ("knot", cert.knot_label.clone()),
                ("crossing number", cert.crossing_number.to_string()),
                ("computed length", cert.computed_length.to_string()),
                ("bound", cert.bound_value.to_string()),
                ("ratio", ratio_string(cert.ratio)),
                ("holds", cert.holds.to_string()),
            ];
            let payload = if let Some((gsb, within)) = extra {
                rows.push(("grid-size bound", gsb.to_string()));
                rows.push(("within grid-size bound", within.to_string()));
                json!({
                    "certificate": cert,
                    "grid_size_bound": gsb,
                    "within_grid_size_bound": within,
                })
            } else {
                serde_json::to_value(&cert).map_err(|e| Failure::data(e.to_string()))?
            };
            let holds = cert.holds;
            output.emit_payload(cli.format, &payload, table_rows(&rows))?;
            if holds {
                Ok(())
            } else {
                Err(Failure::verification("bound does not hold"))
            }
        }

        Command::Fold { n, width, layout_json } => {
            let bound = upper_bound(n).map_err(|e| Failure::usage(e.to_string()))?;
            let slope = bound_vs_crossing(n).map_err(|e| Failure::usage(e.to_string()))?;
            let layout_n = if n % 2 == 0 { n } else { n + 1 };
            let layout =
                build_layout(width, layout_n).map_err(|e| Failure::usage(e.to_string()))?;
            let lengths = layout.segment_lengths();
            let total = layout.total_length();
            let path = fold_path(layout_n as u64).map_err(|e| Failure::usage(e.to_string()))?;

            let mut payload = json!({
                "half_twists": n,
                "width": width,
                "layout_half_twists": layout_n,
                "total_length": total,
                "upper_bound_per_width": bound,
                "upper_bound_times_width": bound * width,
                "crossing_number": slope.crossing_number,
                "slope": slope.slope,
                "slope_check": slope.slope_holds,
                "segment_lengths": lengths
                    .named()
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect::<serde_json::Map<_, _>>(),
                "path": path.labels,
            });
            if layout_json {
                payload["points"] = layout
                    .named_points()
                    .into_iter()
                    .map(|(k, (x, y))| (k.to_string(), json!([x, y])))
                    .collect::<serde_json::Map<_, _>>()
                    .into();
            }
            let mut rows = vec![
                ("half twists", n.to_string()),
                ("width", format!("{width}")),
                ("layout half twists", layout_n.to_string()),
                ("total length", format!("{total:.9}")),
                ("bound per width", format!("{bound:.9}")),
                ("crossing number", slope.crossing_number.to_string()),
                ("slope (√5+2)/2", format!("{:.9}", slope.slope)),
                ("slope check", slope.slope_holds.to_string()),
            ];
            for (k, v) in lengths.named() {
                rows.push((k, format!("{v:.9}")));
            }
            output.emit_payload(cli.format, &payload, table_rows(&rows))
        }

        Command::Verify { file, expect, print_poly } => {
            let grid = read_grid(&file)?;
            let family = parse_expect(&expect)?;
            let expected = match family {
                KnotFamily::Torus(t) => torus_alexander(&t),
                KnotFamily::Twist(t) => twist_alexander(&t),
            };
            let computed = grid_alexander(&grid).map_err(|e| Failure::data(e.to_string()))?;
            let matched =
                verify_family(&grid, &expected).map_err(|e| Failure::data(e.to_string()))?;
            let payload = json!({
                "expect": family.label(),
                "matched": matched,
                "computed": computed.to_json_map(),
                "expected": expected.normalized().to_json_map(),
            });
            let mut rows = vec![
                ("expect", family.label()),
                ("matched", matched.to_string()),
            ];
            if print_poly {
                rows.push(("computed", computed.to_string()));
                rows.push(("expected", expected.normalized().to_string()));
            }
            output.emit_payload(cli.format, &payload, table_rows(&rows))?;
            if matched {
                Ok(())
            } else {
                Err(Failure::verification("Alexander polynomial mismatch"))
            }
        }

        Command::Optimize { file, steps, temp, cool, stab_budget, restarts } => {
            let grid = read_grid(&file)?;
            let cfg = SearchConfig {
                max_steps: steps,
                seed: cli.seed,
                initial_temp: temp,
                cooling: cool,
                stab_budget,
            };
            let (best, reports) =
                anneal_restarts(&grid, &cfg, restarts).map_err(classify)?;
            let best_report = ribbon_length(&best).map_err(|e| Failure::data(e.to_string()))?;
            let start_report = ribbon_length(&grid).map_err(|e| Failure::data(e.to_string()))?;
            let payload = json!({
                "best": best,
                "start_total": start_report.total,
                "best_total": best_report.total,
                "best_size": best.size(),
                "config": cfg,
                "restarts": reports,
            });
            let table = table_rows(&[
                ("start total", start_report.total.to_string()),
                ("best total", best_report.total.to_string()),
                ("best size", best.size().to_string()),
                ("best grid", best.to_json()),
                (
                    "accepted",
                    reports.iter().map(|r| r.accepted).sum::<u64>().to_string(),
                ),
                (
                    "rejected",
                    reports.iter().map(|r| r.rejected).sum::<u64>().to_string(),
                ),
            ]);
            output.emit_payload(cli.format, &payload, table)
        }

        Command::Render { file, style, cell_px, monochrome_dots, n, width } => {
            let render_style = RenderStyle {
                cell_px,
                monochrome_dots,
                ..RenderStyle::default()
            };
            let svg = if file == "fold" {
                let n = n.ok_or_else(|| Failure::usage("render fold requires --n"))?;
                let layout_n = if n % 2 == 0 { n } else { n + 1 };
                let layout =
                    build_layout(width, layout_n).map_err(|e| Failure::usage(e.to_string()))?;
                render_fold(&layout, &render_style)
            } else {
                let grid = read_grid(&file)?;
                if !validate(&grid).is_valid() {
                    return Err(Failure::data("diagram is not a valid grid diagram"));
                }
                match style {
                    StyleKind::Grid => render_grid(&grid, &render_style),
                    StyleKind::Knot => {
                        let k = trace(&grid).map_err(|e| Failure::data(e.to_string()))?;
                        render_knot(&k, &render_style)
                    }
                    StyleKind::Ribbon => {
                        let k = trace(&grid).map_err(|e| Failure::data(e.to_string()))?;
                        render_ribbon(&grid, &k, &render_style)
                    }
                }
            };
            output.emit(&svg.to_svg_string())
        }
    }
}

fn parse_expect(expect: &str) -> Result<KnotFamily, Failure> {
    let (family, rest) = expect
        .split_once(':')
        .ok_or_else(|| Failure::usage("--expect must be torus:P,Q or twist:N"))?;
    match family {
        "torus" => {
            let (p, q) = rest
                .split_once(',')
                .ok_or_else(|| Failure::usage("torus expects two parameters: torus:P,Q"))?;
            let p: i64 = p.trim().parse().map_err(|_| Failure::usage("bad torus p"))?;
            let q: i64 = q.trim().parse().map_err(|_| Failure::usage("bad torus q"))?;
            let params = TorusParams::new(p, q).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(KnotFamily::Torus(params))
        }
        "twist" => {
            let n: i64 = rest.trim().parse().map_err(|_| Failure::usage("bad twist n"))?;
            let params = TwistParams::new(n).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(KnotFamily::Twist(params))
        }
        other => Err(Failure::usage(format!(
            "unknown family '{other}'; use torus:P,Q or twist:N"
        ))),
    }
}
