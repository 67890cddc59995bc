//! Command-line interface: matrix tables, identity suites, conjecture
//! scans, and reproduction of the published tables.
//!
//! Exit codes: 0 success, 1 identity failure in `verify`, 2 usage error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use casselman::casselman::{
    ad_recursion_check, descent_conjecture_scan, poles_scan, product_formula_scan, run_suite,
    symbolic_engine, AdScanReport, Backend, CassEngine, ProductScanReport, Suite, Variant,
};
use casselman::klpoly::KLTable;
use casselman::symbolics::{ModCtx, ModRing, DEFAULT_PRIME};
use casselman::weyl::{CartanType, ElemIdx, RootSystem, WeylGroup};
use casselman_cli::output::{self, Format};
use casselman_cli::reports;

#[derive(Parser)]
#[command(
    name = "casselman",
    version,
    about = "Exact tables and mechanical verification for deformed R-polynomials and Casselman transition matrices on finite Weyl groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit one matrix family over all comparable Bruhat pairs.
    Table(TableArgs),
    /// Run an identity suite; exits 1 if any identity fails.
    Verify(VerifyArgs),
    /// Run a conjecture scan; always exits 0 with a report.
    Scan(ScanArgs),
    /// Regenerate a published table and diff it against the frozen rows.
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct GroupArgs {
    /// Cartan type: A, B, C, or D.
    #[arg(long = "type")]
    cartan_type: String,
    #[arg(long)]
    rank: usize,
}

impl GroupArgs {
    fn build(&self) -> Result<Arc<WeylGroup>, String> {
        let ct = CartanType::parse(&self.cartan_type).map_err(|e| e.to_string())?;
        let rs = RootSystem::new(ct, self.rank).map_err(|e| e.to_string())?;
        Ok(WeylGroup::build(rs))
    }

    fn label(&self) -> String {
        format!("{}{}", self.cartan_type.to_uppercase(), self.rank)
    }
}

#[derive(Args)]
struct BackendArgs {
    /// symbolic or modular.
    #[arg(long, default_value = "symbolic")]
    backend: String,
    #[arg(long, default_value_t = DEFAULT_PRIME)]
    prime: u64,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Seed fully determining the modular sample points.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

impl BackendArgs {
    fn build(&self) -> Result<Backend, String> {
        match self.backend.as_str() {
            "symbolic" => Ok(Backend::Symbolic),
            "modular" => {
                if self.samples == 0 {
                    return Err("modular backend needs at least one sample".to_string());
                }
                Ok(Backend::Modular {
                    prime: self.prime,
                    samples: self.samples,
                    seed: self.seed,
                })
            }
            other => Err(format!("unknown backend {other:?}")),
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// json, csv, or latex.
    #[arg(long, default_value = "json")]
    format: String,
    /// Output path; stdout when omitted.
    #[arg(long)]
    output: Option<PathBuf>,
}

impl OutputArgs {
    fn format(&self) -> Result<Format, String> {
        Format::parse(&self.format).ok_or_else(|| format!("unknown format {:?}", self.format))
    }

    fn write(&self, text: &str) -> Result<(), String> {
        match &self.output {
            Some(path) => std::fs::write(path, text).map_err(|e| e.to_string()),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// One of r, r-prime, m, m-prime, R, P, Q, c.
    #[arg(long)]
    matrix: String,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// fe-q1, full-inversion, duality, limits, oracle, hecke-lemmas,
    /// transforms, or all.
    #[arg(long)]
    suite: String,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ScanArgs {
    #[command(flatten)]
    group: GroupArgs,
    /// poles, descent, ad-recursion, or product-formula.
    #[arg(long)]
    conjecture: String,
    /// Restrict the ad-recursion scan to pairs with P = Q = 1.
    #[arg(long)]
    pq1_only: bool,
    #[command(flatten)]
    backend: BackendArgs,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ReproduceArgs {
    /// figure1 or a3-adtable.
    #[arg(long)]
    target: String,
    #[command(flatten)]
    out: OutputArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Table(args) => run_table(args),
        Cmd::Verify(args) => run_verify(args),
        Cmd::Scan(args) => run_scan(args),
        Cmd::Reproduce(args) => run_reproduce(args),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn sorted_pairs(g: &WeylGroup) -> Vec<(ElemIdx, ElemIdx)> {
    let mut pairs = g.comparable_pairs();
    pairs.sort_by_key(|&(u, v)| (g.length(u), g.length(v), u, v));
    pairs
}

fn run_table(args: TableArgs) -> Result<ExitCode, String> {
    let g = args.group.build()?;
    let format = args.out.format()?;
    let backend = args.backend.build()?;
    let matrix = args.matrix.as_str();
    let known = ["r", "r-prime", "m", "m-prime", "R", "P", "Q", "c"];
    if !known.contains(&matrix) {
        return Err(format!("unknown matrix {matrix:?}; expected one of {known:?}"));
    }

    let mut kl = KLTable::new(g.clone());
    let pairs = sorted_pairs(&g);
    let mut entries: Vec<Value> = Vec::new();
    let mut csv_rows: Vec<Vec<String>> = Vec::new();

    let mut push = |u: ElemIdx, v: ElemIdx, text: String, value: Value| {
        entries.push(json!({
            "u": g.word_string(u),
            "v": g.word_string(v),
            "text": text,
            "value": value,
        }));
        csv_rows.push(vec![g.word_string(u), g.word_string(v), text]);
    };

    match (&backend, matrix) {
        (_, "R" | "P" | "Q" | "c") => {
            for &(u, v) in &pairs {
                let value = match matrix {
                    "R" => kl.classical_r(u, v).to_laurent(),
                    "P" => kl.kl_p(u, v).to_laurent(),
                    "Q" => kl.kl_q(u, v).to_laurent(),
                    _ => kl.c_coeff(u, v),
                };
                push(u, v, value.to_string(), serde_json::to_value(&value).unwrap());
            }
        }
        (Backend::Symbolic, _) => {
            let mut engine = symbolic_engine(g.clone());
            for &(u, v) in &pairs {
                let value = match matrix {
                    "r" => engine.r(Variant::Plain, u, v),
                    "r-prime" => engine.r_prime(Variant::Plain, u, v),
                    "m" => engine.m(Variant::Plain, u, v).expect("comparable"),
                    _ => engine.m_prime(Variant::Plain, u, v).expect("comparable"),
                };
                push(u, v, value.to_string(), serde_json::to_value(&value).unwrap());
            }
        }
        (Backend::Modular { prime, seed, .. }, _) => {
            let points = ModCtx::sample_points(
                *prime,
                *seed,
                1,
                g.rank(),
                &g.root_system().positive_roots,
            );
            let mut engine = CassEngine::new(g.clone(), ModRing::at_point(&points[0]));
            for &(u, v) in &pairs {
                let value = match matrix {
                    "r" => engine.r(Variant::Plain, u, v),
                    "r-prime" => engine.r_prime(Variant::Plain, u, v),
                    "m" => engine.m(Variant::Plain, u, v).expect("comparable"),
                    _ => engine.m_prime(Variant::Plain, u, v).expect("comparable"),
                };
                push(u, v, value.to_string(), json!(value));
            }
        }
    }

    let text = match format {
        Format::Json => output::render_json(&output::envelope(
            "table",
            json!({
                "group": args.group.label(),
                "matrix": matrix,
                "backend": args.backend.backend,
                "seed": args.backend.seed,
                "entries": entries,
            }),
        )),
        Format::Csv => output::render_csv(&["u", "v", "value"], &csv_rows),
        Format::Latex => {
            let rows: Vec<String> = csv_rows
                .iter()
                .map(|r| {
                    format!(
                        "${}$ & ${}$ & {}",
                        output::latex_word(&r[0]),
                        output::latex_word(&r[1]),
                        output::latex_verbatim(&r[2])
                    )
                })
                .collect();
            output::latex_document("|l|l|l|", "$u$ & $v$ & value", &rows)
        }
    };
    args.out.write(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let g = args.group.build()?;
    if args.out.format()? != Format::Json {
        return Err("verify reports are JSON only".to_string());
    }
    let backend = args.backend.build()?;
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::all().to_vec()
    } else {
        vec![Suite::parse(&args.suite)
            .ok_or_else(|| format!("unknown suite {:?}", args.suite))?]
    };
    let outcomes: Vec<_> = suites
        .iter()
        .map(|&s| run_suite(&g, s, &backend))
        .collect();
    let passed = outcomes.iter().all(|o| o.passed());
    let text = output::render_json(&output::envelope(
        "verify",
        json!({
            "group": args.group.label(),
            "passed": passed,
            "suites": outcomes,
        }),
    ));
    args.out.write(&text)?;
    Ok(if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn merged_modular_ad(
    g: &Arc<WeylGroup>,
    kl: &mut KLTable,
    prime: u64,
    samples: usize,
    seed: u64,
    pq1_only: bool,
) -> Result<AdScanReport, String> {
    let points = ModCtx::sample_points(prime, seed, samples, g.rank(), &g.root_system().positive_roots);
    let mut merged: Option<AdScanReport> = None;
    for ctx in &points {
        let mut engine = CassEngine::new(g.clone(), ModRing::at_point(ctx));
        let report = ad_recursion_check(&mut engine, kl, pq1_only).map_err(|e| e.to_string())?;
        merged = Some(match merged.take() {
            None => report,
            Some(mut acc) => {
                for f in report.failures {
                    if !acc
                        .failures
                        .iter()
                        .any(|x| x.u == f.u && x.v == f.v && x.t == f.t)
                    {
                        acc.failures.push(f);
                    }
                }
                acc
            }
        });
    }
    Ok(merged.expect("at least one sample"))
}

fn merged_modular_product(
    g: &Arc<WeylGroup>,
    kl: &mut KLTable,
    prime: u64,
    samples: usize,
    seed: u64,
) -> ProductScanReport {
    let points = ModCtx::sample_points(prime, seed, samples, g.rank(), &g.root_system().positive_roots);
    let mut merged: Option<ProductScanReport> = None;
    for ctx in &points {
        let mut engine = CassEngine::new(g.clone(), ModRing::at_point(ctx));
        let report = product_formula_scan(&mut engine, kl);
        merged = Some(match merged.take() {
            None => report,
            Some(mut acc) => {
                for p in report.m_violations {
                    if !acc.m_violations.contains(&p) {
                        acc.m_violations.push(p);
                    }
                }
                for p in report.m_prime_violations {
                    if !acc.m_prime_violations.contains(&p) {
                        acc.m_prime_violations.push(p);
                    }
                }
                acc
            }
        });
    }
    merged.expect("at least one sample")
}

fn run_scan(args: ScanArgs) -> Result<ExitCode, String> {
    let g = args.group.build()?;
    if args.out.format()? != Format::Json {
        return Err("scan reports are JSON only".to_string());
    }
    let backend = args.backend.build()?;
    let mut kl = KLTable::new(g.clone());
    let payload = match args.conjecture.as_str() {
        "descent" => {
            let report = descent_conjecture_scan(&mut kl);
            serde_json::to_value(report).unwrap()
        }
        "poles" => {
            if backend != Backend::Symbolic {
                return Err("the poles scan inspects symbolic denominators; use --backend symbolic".into());
            }
            let mut engine = symbolic_engine(g.clone());
            serde_json::to_value(poles_scan(&mut engine)).unwrap()
        }
        "ad-recursion" => {
            let report = match &backend {
                Backend::Symbolic => {
                    let mut engine = symbolic_engine(g.clone());
                    ad_recursion_check(&mut engine, &mut kl, args.pq1_only)
                        .map_err(|e| e.to_string())?
                }
                Backend::Modular { prime, samples, seed } => {
                    merged_modular_ad(&g, &mut kl, *prime, *samples, *seed, args.pq1_only)?
                }
            };
            serde_json::to_value(report).unwrap()
        }
        "product-formula" => {
            let report = match &backend {
                Backend::Symbolic => {
                    let mut engine = symbolic_engine(g.clone());
                    product_formula_scan(&mut engine, &mut kl)
                }
                Backend::Modular { prime, samples, seed } => {
                    merged_modular_product(&g, &mut kl, *prime, *samples, *seed)
                }
            };
            serde_json::to_value(report).unwrap()
        }
        other => return Err(format!("unknown conjecture {other:?}")),
    };
    let text = output::render_json(&output::envelope(
        "scan",
        json!({
            "group": args.group.label(),
            "conjecture": args.conjecture,
            "backend": args.backend.backend,
            "seed": args.backend.seed,
            "result": payload,
        }),
    ));
    args.out.write(&text)?;
    Ok(ExitCode::SUCCESS)
}

fn run_reproduce(args: ReproduceArgs) -> Result<ExitCode, String> {
    let format = args.out.format()?;
    let text = match args.target.as_str() {
        "figure1" => {
            let report = reports::figure1_report();
            match format {
                Format::Json => output::render_json(&output::envelope(
                    "reproduce",
                    json!({ "target": "figure1", "result": report }),
                )),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = report
                        .rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.u.clone(),
                                r.v.clone(),
                                r.c_text.clone(),
                                if r.precedes { "prec" } else { "" }.to_string(),
                            ]
                        })
                        .collect();
                    output::render_csv(&["u", "v", "c", "precedes"], &rows)
                }
                Format::Latex => {
                    let rows: Vec<String> = report
                        .rows
                        .iter()
                        .map(|r| {
                            format!(
                                "${}$ & ${}$ & ${}$ & {}",
                                output::latex_word(&r.u),
                                output::latex_word(&r.v),
                                output::latex_qlaurent(&r.c),
                                if r.precedes { "$\\checkmark$" } else { "" }
                            )
                        })
                        .collect();
                    output::latex_document(
                        "|l|l|c|c|",
                        "$u$ & $v$ & $c_{u,v}$ & $u \\prec v$",
                        &rows,
                    )
                }
            }
        }
        "a3-adtable" => {
            let report = reports::a3_adtable_report();
            match format {
                Format::Json => output::render_json(&output::envelope(
                    "reproduce",
                    json!({ "target": "a3-adtable", "result": report }),
                )),
                Format::Csv => {
                    let rows: Vec<Vec<String>> = report
                        .rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.u.clone(),
                                r.v.clone(),
                                r.t.clone(),
                                r.p.clone(),
                                r.q.clone(),
                            ]
                        })
                        .collect();
                    output::render_csv(&["u", "v", "t", "P", "Q"], &rows)
                }
                Format::Latex => {
                    let rows: Vec<String> = report
                        .rows
                        .iter()
                        .map(|r| {
                            format!(
                                "${}$ & ${}$ & ${}$ & {} & {}",
                                output::latex_word(&r.u),
                                output::latex_word(&r.v),
                                output::latex_word(&r.t),
                                output::latex_verbatim(&r.p),
                                output::latex_verbatim(&r.q)
                            )
                        })
                        .collect();
                    output::latex_document(
                        "|l|l|l|l|l|",
                        "$u$ & $v$ & $t$ & $P_{u,v}$ & $Q_{u,v}$",
                        &rows,
                    )
                }
            }
        }
        other => return Err(format!("unknown target {other:?}")),
    };
    args.out.write(&text)?;
    Ok(ExitCode::SUCCESS)
}
