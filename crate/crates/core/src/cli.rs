//! Command-line front end wiring the verifiers, oracles, and file loaders.
//!
//! Exit codes: 0 for verified/success, 1 for a falsified identity, 2 for
//! input errors.

use crate::annulus::BraidWord;
use crate::reporting::{ResidualLine, Verdict, VerificationReport};
use crate::torus::Cone;
use crate::{dilog, lift, qtorus, torus, triangulate};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "skein",
    about = "Exact verification of skein dilogarithm identities, torus wall-crossing \
             formulas, skein lifts to double covers, and angle-structure effectivity",
    version
)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Output format: text or json
    #[arg(long, default_value = "text", global = false)]
    format: String,
    /// Test hook: inject a fake nonzero residual into the report
    #[arg(long, hide = true)]
    inject_error: bool,
}

#[derive(Subcommand)]
enum Verb {
    /// Skein dilogarithm checks: closed forms and 3-term recurrences
    Dilog {
        #[arg(long, default_value_t = 8)]
        max_degree: u32,
        /// Which check: product, exp, inverse, recurrence, or all
        #[arg(long, default_value = "all")]
        which: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The pentagon identity on the punctured torus
    Pentagon {
        #[arg(long, default_value_t = 6)]
        max_weight: u32,
        /// Twist every factor by the quadratic refinement
        #[arg(long)]
        twisted: bool,
        /// Verify in the gl(1) quantum torus instead
        #[arg(long)]
        gl1: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The Seiberg-Witten wall-crossing formula
    SwWcf {
        #[arg(long, default_value_t = 4)]
        max_weight: u32,
        /// Verify in the gl(1) quantum torus instead
        #[arg(long)]
        gl1: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The coproduct theorem on braid closures over the trivial double cover
    Coproduct {
        /// Explicit braid word like "s1 -s2" (requires --strands)
        #[arg(long)]
        braid: Option<String>,
        #[arg(long, default_value_t = 2)]
        strands: usize,
        /// Sweep all words up to this length on up to --strands strands
        #[arg(long)]
        sweep_length: Option<usize>,
        /// Additionally check this many random braids
        #[arg(long, default_value_t = 0)]
        random: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The colored-unknot identity for all partitions up to a size
    UnknotId {
        #[arg(long, default_value_t = 4)]
        max_size: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The A_{i,j} recursion against the Hecke closure oracle
    Aij {
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate and evaluate skein lifts of a diagram file
    Lift {
        /// Diagram file (line-oriented events format)
        #[arg(long)]
        diagram: String,
        /// Optional chart file declaring walls
        #[arg(long)]
        chart: Option<String>,
        /// Evaluation target: trivial or gl1
        #[arg(long, default_value = "trivial")]
        target: String,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Taut structures and effectivity of marked triangulations
    Effectivity {
        /// Triangulation file
        #[arg(long)]
        triangulation: String,
        /// Report every marking instead of only effective ones
        #[arg(long)]
        all_markings: bool,
        /// Exit 0 exactly when at least one effective marking exists
        #[arg(long)]
        exists: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run every property suite
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[command(flatten)]
        out: OutputOpts,
    },
}

pub fn run(argv: &[String]) -> u8 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            // clap handles --help/--version with success exits
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn emit(mut report: VerificationReport, out: &OutputOpts) -> Result<u8, String> {
    if out.inject_error {
        report.residuals.push(ResidualLine {
            class: "injected".into(),
            value: "1".into(),
        });
        report.verdict = Verdict::Falsified;
    }
    let text = report.render(&out.format).map_err(|e| e.to_string())?;
    println!("{}", text.trim_end());
    Ok(if report.verified() { 0 } else { 1 })
}

fn merge(mut reports: Vec<VerificationReport>, name: &str) -> VerificationReport {
    let mut all = VerificationReport {
        identity: name.into(),
        parameter: 0,
        residuals: vec![],
        verdict: Verdict::Verified,
        seconds: 0.0,
    };
    for r in reports.drain(..) {
        for line in r.residuals {
            all.residuals.push(ResidualLine {
                class: format!("{}: {}", r.identity, line.class),
                value: line.value,
            });
        }
        if r.verdict == Verdict::Falsified {
            all.verdict = Verdict::Falsified;
        }
        all.seconds += r.seconds;
    }
    all
}

fn dispatch(cli: Cli) -> Result<u8, String> {
    match cli.verb {
        Verb::Dilog { max_degree, which, out } => {
            let n = max_degree;
            let reports = match which.as_str() {
                "product" | "exp" => vec![dilog::verify_forms_agree(n)],
                "inverse" => vec![
                    dilog::verify_psi_inverse(n),
                    dilog::verify_inverse_recurrence(n),
                ],
                "recurrence" => vec![
                    dilog::verify_recurrence(n),
                    dilog::verify_inverse_recurrence(n),
                ],
                "all" => vec![
                    dilog::verify_forms_agree(n),
                    dilog::verify_psi_inverse(n),
                    dilog::verify_recurrence(n),
                    dilog::verify_inverse_recurrence(n),
                ],
                other => return Err(format!("unknown dilog check {other}")),
            };
            emit(merge(reports, "dilog"), &out)
        }
        Verb::Pentagon { max_weight, twisted, gl1, out } => {
            let report = if gl1 {
                qtorus::verify_gl1_pentagon(max_weight)
            } else {
                torus::verify_pentagon(max_weight, twisted)
            };
            emit(report, &out)
        }
        Verb::SwWcf { max_weight, gl1, out } => {
            let report = if gl1 {
                qtorus::verify_gl1_sw(max_weight)
            } else {
                torus::verify_sw(max_weight)
            };
            emit(report, &out)
        }
        Verb::Coproduct { braid, strands, sweep_length, random, seed, out } => {
            let mut reports = vec![];
            if let Some(word) = braid {
                let beta = BraidWord::parse(strands, &word).map_err(|e| e.to_string())?;
                reports.push(lift::verify_coproduct_on_braid(&beta).map_err(|e| e.to_string())?);
            }
            if let Some(len) = sweep_length {
                for beta in sweep_braids(strands, len) {
                    reports
                        .push(lift::verify_coproduct_on_braid(&beta).map_err(|e| e.to_string())?);
                }
            }
            if random > 0 {
                use rand::Rng;
                use rand::SeedableRng;
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                for _ in 0..random {
                    let n = rng.gen_range(1..=strands.max(1));
                    let len = if n == 1 { 0 } else { rng.gen_range(0..=6usize) };
                    let word: Vec<i32> = (0..len)
                        .map(|_| {
                            let i = rng.gen_range(1..n as i32);
                            if rng.gen_bool(0.5) {
                                i
                            } else {
                                -i
                            }
                        })
                        .collect();
                    let beta = BraidWord::new(n, word).map_err(|e| e.to_string())?;
                    reports
                        .push(lift::verify_coproduct_on_braid(&beta).map_err(|e| e.to_string())?);
                }
            }
            if reports.is_empty() {
                return Err("nothing to check: pass --braid, --sweep-length, or --random".into());
            }
            emit(merge(reports, "coproduct"), &out)
        }
        Verb::UnknotId { max_size, out } => {
            emit(lift::verify_colored_unknot(max_size), &out)
        }
        Verb::Aij { max, out } => {
            emit(lift::verify_aij_oracle(max).map_err(|e| e.to_string())?, &out)
        }
        Verb::Lift { diagram, chart, target, out: _ } => {
            let text = std::fs::read_to_string(&diagram)
                .map_err(|e| format!("reading {diagram}: {e}"))?;
            let d = lift::LeafDiagram::parse(&text).map_err(|e| e.to_string())?;
            let chart = match chart {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| format!("reading {path}: {e}"))?;
                    lift::parse_chart(&text).map_err(|e| e.to_string())?
                }
                None => lift::CoverChart::trivial(d.chart),
            };
            let lifts = lift::enumerate_lifts(&d, &chart).map_err(|e| e.to_string())?;
            println!("{} lifts:", lifts.terms.len());
            for t in &lifts.terms {
                let sheets: Vec<String> = t
                    .components
                    .iter()
                    .map(|c| {
                        format!(
                            "{}@{}",
                            if c.wires.is_empty() {
                                "circle".to_string()
                            } else {
                                format!("{:?}", c.wires)
                            },
                            c.sheet
                        )
                    })
                    .collect();
                println!("  weight {} components {}", t.weight, sheets.join(" "));
            }
            match target.as_str() {
                "trivial" => {
                    match lift::evaluate_trivial_cover(&lifts).map_err(|e| e.to_string())? {
                        lift::TrivialEvaluation::Annular(t) => {
                            println!("evaluation (sheet1 (x) sheet2):");
                            for ((m, n), c) in t.terms() {
                                println!("  [{}] W{} (x) W{}", c, m, n);
                            }
                        }
                        lift::TrivialEvaluation::PlanarClosed(s) => {
                            println!("evaluation: {s}");
                        }
                        lift::TrivialEvaluation::PlanarTangle(map) => {
                            println!("evaluation by open-strand sheets:");
                            for (k, v) in map {
                                println!("  {k:?}: {v}");
                            }
                        }
                    }
                }
                "gl1" => {
                    let q = lift::evaluate_homological(&lifts, Cone::UpperWedge, 16)
                        .map_err(|e| e.to_string())?;
                    println!("evaluation: {}", q.render());
                }
                other => return Err(format!("unknown target {other}")),
            }
            Ok(0)
        }
        Verb::Effectivity { triangulation, all_markings, exists, out } => {
            let text = std::fs::read_to_string(&triangulation)
                .map_err(|e| format!("reading {triangulation}: {e}"))?;
            let tri = triangulate::IdealTriangulation::parse(&text).map_err(|e| e.to_string())?;
            let taut = triangulate::enumerate_taut(&tri);
            println!("taut angle structures: {}", taut.len());
            let started = std::time::Instant::now();
            let mut lines = vec![];
            let mut effective_count = 0usize;
            for m in triangulate::Marking::all(tri.tets()) {
                let outcome = triangulate::is_effective(&tri, &m);
                let g = triangulate::gluing_matrix(&tri, &m);
                match &outcome {
                    triangulate::Effectivity::Effective { witness } => {
                        effective_count += 1;
                        let ok = triangulate::verify_witness(&g, witness);
                        let ws: Vec<String> = witness.iter().map(|w| w.to_string()).collect();
                        lines.push((
                            format!("{m} effective, witness z = ({})", ws.join(", ")),
                            if ok { "0".into() } else { "witness fails".into() },
                            ok,
                        ));
                    }
                    triangulate::Effectivity::Ineffective { certificate } => {
                        let ok = triangulate::verify_certificate(&g, certificate);
                        if all_markings {
                            let ps: Vec<String> =
                                certificate.iter().map(|p| p.to_string()).collect();
                            lines.push((
                                format!("{m} not effective, certificate p = ({})", ps.join(", ")),
                                if ok { "0".into() } else { "certificate fails".into() },
                                ok,
                            ));
                        } else if !ok {
                            lines.push((format!("{m}"), "certificate fails".into(), false));
                        }
                    }
                }
            }
            let report = VerificationReport::new(
                "effectivity",
                tri.tets() as u32,
                lines,
                started,
            );
            let code = emit(report, &out)?;
            if exists {
                return Ok(if effective_count > 0 { 0 } else { 1 });
            }
            Ok(code)
        }
        Verb::Selftest { seed, out } => {
            let mut reports = vec![
                dilog::verify_forms_agree(8),
                dilog::verify_psi_inverse(8),
                dilog::verify_recurrence(8),
                dilog::verify_inverse_recurrence(8),
                torus::verify_pentagon(6, false),
                torus::verify_pentagon(6, true),
                torus::verify_sw(4),
                qtorus::verify_gl1_pentagon(8),
                qtorus::verify_gl1_sw(8),
                qtorus::gl1_homomorphism_check(
                    &[
                        (torus::LatticeVector(1, 0), torus::LatticeVector(0, 1)),
                        (torus::LatticeVector(0, 1), torus::LatticeVector(0, 2)),
                        (torus::LatticeVector(2, 1), torus::LatticeVector(1, 2)),
                    ],
                    8,
                    torus::Cone::FirstQuadrant,
                ),
                torus::fock_crosscheck(
                    &[
                        (torus::LatticeVector(1, 0), torus::LatticeVector(0, 1)),
                        (torus::LatticeVector(1, 1), torus::LatticeVector(-1, 1)),
                        (torus::LatticeVector(0, 1), torus::LatticeVector(0, 2)),
                    ],
                    5,
                ),
                lift::verify_colored_unknot(4),
                lift::verify_tables().map_err(|e| e.to_string())?,
                lift::verify_aij_oracle(4).map_err(|e| e.to_string())?,
                lift::skein_triple_suite(seed, 8).map_err(|e| e.to_string())?,
                lift::move_invariance_suite(seed).map_err(|e| e.to_string())?,
            ];
            for beta in sweep_braids(3, 3) {
                reports.push(lift::verify_coproduct_on_braid(&beta).map_err(|e| e.to_string())?);
            }
            // figure-eight fixture
            let tri = triangulate::IdealTriangulation::figure_eight();
            let started = std::time::Instant::now();
            let taut_ok = triangulate::enumerate_taut(&tri).len() == 3;
            let eff = triangulate::Marking::all(2)
                .into_iter()
                .filter(|m| triangulate::is_effective(&tri, m).is_effective())
                .count();
            reports.push(VerificationReport::new(
                "figure-eight",
                2,
                vec![
                    (
                        "3 taut structures".into(),
                        if taut_ok { "0".into() } else { "wrong count".into() },
                        taut_ok,
                    ),
                    (
                        "4 effective markings".into(),
                        if eff == 4 { "0".into() } else { format!("{eff}") },
                        eff == 4,
                    ),
                ],
                started,
            ));
            emit(merge(reports, "selftest"), &out)
        }
    }
}

/// All braid words on up to `strands` strands with length up to `len`.
fn sweep_braids(strands: usize, len: usize) -> Vec<BraidWord> {
    let mut out = vec![BraidWord { strands: 1, word: vec![] }];
    for n in 2..=strands {
        let letters: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
        let mut words: Vec<Vec<i32>> = vec![vec![]];
        for _ in 0..len {
            out.extend(words.iter().map(|w| BraidWord { strands: n, word: w.clone() }));
            let mut next = vec![];
            for w in &words {
                for &l in &letters {
                    let mut w2 = w.clone();
                    w2.push(l);
                    next.push(w2);
                }
            }
            words = next;
        }
        out.extend(words.into_iter().map(|w| BraidWord { strands: n, word: w }));
    }
    out
}
