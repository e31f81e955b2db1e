//! Command-line front end: exact computations and verification reports for
//! the Temperley-Lieb and blob diagram algebras.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use blobalg::algebra::{
    action_matrix, gram_matrix, verify_presentation_relations, Algebra, AlgebraKind, CellShape,
    Element,
};
use blobalg::coeffs::{separation_ok, CoeffField};
use blobalg::graded::{
    golden_snapshot, graded_dim_string, graded_dimensions, psi_basis,
    verify_graded_cellularity, verify_reduced_expression_independence,
};
use blobalg::jm::{verify_commutation, verify_triangularity};
use blobalg::klr::{klr_data, verify_jm_subalgebra, verify_presentation, verify_weight_spaces};
use blobalg::report::Report;

#[derive(Parser)]
#[command(
    name = "blobalg",
    about = "Exact Temperley-Lieb and blob algebra computations with machine verification",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum AlgArg {
    Tl,
    Blob,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    Generic,
    Cyclo,
}

#[derive(Args, Clone)]
struct AlgebraOpts {
    /// Which diagram algebra
    #[arg(long, value_enum)]
    algebra: AlgArg,
    /// Number of strands
    #[arg(long)]
    n: usize,
    /// Coefficient field (cyclo requires --l; blob cyclo also --m)
    #[arg(long, value_enum, default_value_t = FieldArg::Generic)]
    field: FieldArg,
    /// Odd order of the root of unity for the cyclotomic field
    #[arg(long)]
    l: Option<u64>,
    /// Blob exponent: Q specializes to zeta^m
    #[arg(long)]
    m: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of the algebra (diagram count)
    Dim(AlgebraOpts),
    /// Structure constants of the diagram basis
    Mult(AlgebraOpts),
    /// Verify the defining presentation relations in the diagram basis
    VerifyRelations(AlgebraOpts),
    /// Verify Jucys-Murphy commutation rules, star-symmetry and the
    /// triangular action with its contents
    VerifyJm(AlgebraOpts),
    /// Verify the full KLR presentation in the specialized quotient
    VerifyKlr(AlgebraOpts),
    /// Build and print the graded cellular basis
    PsiBasis(AlgebraOpts),
    /// Gram matrices of the cell modules
    Gram(AlgebraOpts),
    /// Graded dimensions of the cell modules
    GradedDims(AlgebraOpts),
    /// Matrix of a Jucys-Murphy element on a chosen cell module
    JmMatrix {
        #[command(flatten)]
        opts: AlgebraOpts,
        /// Index of the Jucys-Murphy element
        #[arg(long)]
        k: usize,
        /// Cell shape: the axis coordinate f for the blob algebra, the
        /// number of through lines for TL
        #[arg(long)]
        shape: i64,
    },
    /// Recompute the worked small examples and compare with the golden
    /// files
    Golden {
        /// Regenerate the golden files (shows a diff)
        #[arg(long)]
        update: bool,
        /// Directory holding the golden files
        #[arg(long, default_value = "crates/core/golden/v1")]
        dir: PathBuf,
    },
}

enum AnyAlgebra {
    Generic(Algebra<blobalg::coeffs::GenericField>),
    Cyclo(Algebra<blobalg::coeffs::CycloField>),
}

fn build_algebra(opts: &AlgebraOpts, need_separation: bool) -> Result<AnyAlgebra, String> {
    let kind = match opts.algebra {
        AlgArg::Tl => AlgebraKind::Tl,
        AlgArg::Blob => AlgebraKind::Blob,
    };
    match opts.field {
        FieldArg::Generic => Ok(AnyAlgebra::Generic(match kind {
            AlgebraKind::Tl => Algebra::tl_generic(opts.n),
            AlgebraKind::Blob => Algebra::blob_generic(opts.n),
        })),
        FieldArg::Cyclo => {
            let l = opts.l.ok_or("cyclotomic field needs --l")?;
            let alg = match kind {
                AlgebraKind::Tl => Algebra::tl_cyclo(opts.n, l).map_err(|e| e.to_string())?,
                AlgebraKind::Blob => {
                    let m = opts.m.ok_or("blob cyclotomic field needs --m")?;
                    if need_separation && !separation_ok(l, m) {
                        return Err(format!(
                            "(l,m) = ({l},{m}) violates the separation conditions required here"
                        ));
                    }
                    Algebra::blob_cyclo(opts.n, l, m).map_err(|e| e.to_string())?
                }
            };
            Ok(AnyAlgebra::Cyclo(alg))
        }
    }
}

fn config_json(opts: &AlgebraOpts) -> serde_json::Value {
    json!({
        "algebra": match opts.algebra { AlgArg::Tl => "tl", AlgArg::Blob => "blob" },
        "n": opts.n,
        "field": match opts.field { FieldArg::Generic => "generic", FieldArg::Cyclo => "cyclo" },
        "l": opts.l,
        "m": opts.m,
    })
}

fn emit_report(format: Format, config: serde_json::Value, rep: &Report, extra: Option<String>) {
    match format {
        Format::Json => {
            let results: Vec<_> = rep
                .results
                .iter()
                .map(|r| json!({"name": r.name, "pass": r.pass, "detail": r.detail}))
                .collect();
            println!(
                "{}",
                serde_json::to_string_pretty(&json!({
                    "config": config,
                    "results": results,
                    "pass": rep.pass(),
                }))
                .unwrap()
            );
        }
        _ => {
            if let Some(x) = extra {
                println!("{x}");
            }
            println!("{rep}");
        }
    }
}

fn run() -> Result<bool, String> {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("BLOBALG_THREADS") {
        let t: usize = threads.parse().map_err(|_| "bad BLOBALG_THREADS")?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| e.to_string())?;
    }
    match &cli.command {
        Command::Dim(opts) => {
            let dim = match build_algebra(opts, false)? {
                AnyAlgebra::Generic(a) => a.dim(),
                AnyAlgebra::Cyclo(a) => a.dim(),
            };
            match cli.format {
                Format::Json => println!(
                    "{}",
                    json!({"config": config_json(opts), "results": [{"name": "dim", "pass": true, "detail": dim}], "pass": true})
                ),
                _ => println!("{dim}"),
            }
            Ok(true)
        }
        Command::Mult(opts) => {
            fn table<F: CoeffField>(alg: &Algebra<F>, format: Format) -> String {
                let basis = alg.basis();
                let mut lines = Vec::new();
                if format == Format::Csv {
                    lines.push("i,j,k,coeff".to_string());
                }
                for (i, a) in basis.iter().enumerate() {
                    for (j, b) in basis.iter().enumerate() {
                        let ea = Element::from_diagram(alg, a.clone(), alg.field.one());
                        let eb = Element::from_diagram(alg, b.clone(), alg.field.one());
                        let prod = ea.mul(alg, &eb);
                        match format {
                            Format::Csv => {
                                for (d, c) in prod.terms() {
                                    let k = basis.iter().position(|x| x == d).unwrap();
                                    lines.push(format!("{i},{j},{k},{c}"));
                                }
                            }
                            _ => lines.push(format!("[{i}]·[{j}] = {prod}")),
                        }
                    }
                }
                lines.join("\n")
            }
            let out = match build_algebra(opts, false)? {
                AnyAlgebra::Generic(a) => table(&a, cli.format),
                AnyAlgebra::Cyclo(a) => table(&a, cli.format),
            };
            println!("{out}");
            Ok(true)
        }
        Command::VerifyRelations(opts) => {
            let rep = match build_algebra(opts, false)? {
                AnyAlgebra::Generic(a) => verify_presentation_relations(&a),
                AnyAlgebra::Cyclo(a) => verify_presentation_relations(&a),
            };
            emit_report(cli.format, config_json(opts), &rep, None);
            Ok(rep.pass())
        }
        Command::VerifyJm(opts) => {
            let rep = match build_algebra(opts, false)? {
                AnyAlgebra::Generic(a) => {
                    let mut r = verify_commutation(&a).map_err(|e| e.to_string())?;
                    r.merge(verify_triangularity(&a).map_err(|e| e.to_string())?);
                    r
                }
                AnyAlgebra::Cyclo(a) => {
                    let mut r = verify_commutation(&a).map_err(|e| e.to_string())?;
                    r.merge(verify_triangularity(&a).map_err(|e| e.to_string())?);
                    r
                }
            };
            emit_report(cli.format, config_json(opts), &rep, None);
            Ok(rep.pass())
        }
        Command::VerifyKlr(opts) => {
            let AnyAlgebra::Cyclo(alg) = build_algebra(opts, true)? else {
                return Err(
                    "the KLR layer lives in the specialized quotient; use --field cyclo".into(),
                );
            };
            let klr = klr_data(&alg).map_err(|e| e.to_string())?;
            let mut rep = verify_presentation(&klr);
            rep.merge(verify_weight_spaces(&klr));
            rep.merge(verify_jm_subalgebra(&klr));
            rep.merge(
                verify_reduced_expression_independence(&klr).map_err(|e| e.to_string())?,
            );
            emit_report(cli.format, config_json(opts), &rep, None);
            Ok(rep.pass())
        }
        Command::PsiBasis(opts) => {
            let AnyAlgebra::Cyclo(alg) = build_algebra(opts, true)? else {
                return Err("the graded basis needs --field cyclo".into());
            };
            let klr = klr_data(&alg).map_err(|e| e.to_string())?;
            let basis = psi_basis(klr).map_err(|e| e.to_string())?;
            match cli.format {
                Format::Json => {
                    let items: Vec<_> = basis
                        .elements
                        .values()
                        .map(|p| {
                            let expansion: Vec<_> = p
                                .element
                                .terms()
                                .map(|(d, c)| json!({"diagram": d, "coeff": c.to_string()}))
                                .collect();
                            json!({
                                "row": p.s.to_string(),
                                "col": p.t.to_string(),
                                "degree": p.degree,
                                "expansion": expansion,
                            })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "config": config_json(opts),
                            "results": items,
                            "pass": true,
                        }))
                        .unwrap()
                    );
                }
                _ => {
                    for p in basis.elements.values() {
                        println!("psi({}, {})  degree {}", p.s, p.t, p.degree);
                        println!("  = {}", p.element);
                        for (d, _) in p.element.terms() {
                            println!("{}", indent(&blobalg::diagrams::ascii_render(d), 4));
                            break; // leading diagram only, keep output short
                        }
                    }
                }
            }
            let rep = verify_graded_cellularity(&basis).map_err(|e| e.to_string())?;
            if cli.format != Format::Json {
                println!("{rep}");
            }
            Ok(rep.pass())
        }
        Command::Gram(opts) => {
            fn grams<F: CoeffField>(alg: &Algebra<F>) -> Result<String, String> {
                let mut out = Vec::new();
                for shape in CellShape::all(alg.kind, alg.n) {
                    let (tabs, g) = gram_matrix(alg, shape).map_err(|e| e.to_string())?;
                    out.push(format!("cell {shape}:"));
                    for (i, row) in g.iter().enumerate() {
                        let cells: Vec<String> = row.iter().map(|c| c.to_string()).collect();
                        out.push(format!("  {}: [{}]", tabs[i], cells.join(", ")));
                    }
                }
                Ok(out.join("\n"))
            }
            let out = match build_algebra(opts, false)? {
                AnyAlgebra::Generic(a) => grams(&a)?,
                AnyAlgebra::Cyclo(a) => grams(&a)?,
            };
            println!("{out}");
            Ok(true)
        }
        Command::GradedDims(opts) => {
            let kind = match opts.algebra {
                AlgArg::Tl => AlgebraKind::Tl,
                AlgArg::Blob => AlgebraKind::Blob,
            };
            let l = opts.l.ok_or("graded dimensions need --l")?;
            let m = opts.m.unwrap_or(0);
            if kind == AlgebraKind::Blob && !separation_ok(l, m) {
                return Err(format!("(l,m) = ({l},{m}) violates the separation conditions"));
            }
            let dims = graded_dimensions(kind, opts.n, l, m);
            match cli.format {
                Format::Json => {
                    let items: Vec<_> = dims
                        .iter()
                        .map(|(shape, poly)| {
                            json!({"cell": shape.to_string(), "graded_dim": graded_dim_string(poly)})
                        })
                        .collect();
                    println!(
                        "{}",
                        json!({"config": config_json(opts), "results": items, "pass": true})
                    );
                }
                _ => {
                    for (shape, poly) in &dims {
                        println!("cell {shape}: {}", graded_dim_string(poly));
                    }
                }
            }
            Ok(true)
        }
        Command::JmMatrix { opts, k, shape } => {
            fn matrix<F: CoeffField>(
                alg: &Algebra<F>,
                k: usize,
                shape: CellShape,
                format: Format,
            ) -> Result<String, String> {
                let lk = blobalg::jm::jm_element(alg, k).map_err(|e| e.to_string())?;
                let (tabs, m) = action_matrix(alg, shape, &lk).map_err(|e| e.to_string())?;
                let mut out = Vec::new();
                match format {
                    Format::Csv => {
                        out.push("row,col,coeff".to_string());
                        for (j, col) in m.iter().enumerate() {
                            for (i, c) in col.iter().enumerate() {
                                out.push(format!("{},{},{}", tabs[i], tabs[j], c));
                            }
                        }
                    }
                    _ => {
                        for (j, col) in m.iter().enumerate() {
                            let cells: Vec<String> = col.iter().map(|c| c.to_string()).collect();
                            out.push(format!("L_{k}·m({}, max) -> [{}]", tabs[j], cells.join(", ")));
                        }
                    }
                }
                Ok(out.join("\n"))
            }
            let cell = match opts.algebra {
                AlgArg::Blob => CellShape::Blob(*shape),
                AlgArg::Tl => CellShape::Tl(*shape as usize),
            };
            let out = match build_algebra(opts, false)? {
                AnyAlgebra::Generic(a) => matrix(&a, *k, cell, cli.format)?,
                AnyAlgebra::Cyclo(a) => matrix(&a, *k, cell, cli.format)?,
            };
            println!("{out}");
            Ok(true)
        }
        Command::Golden { update, dir } => {
            let snapshot = golden_snapshot().map_err(|e| e.to_string())?;
            let path = dir.join("examples.json");
            if *update {
                std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
                let new = serde_json::to_string_pretty(&snapshot).unwrap();
                let old = std::fs::read_to_string(&path).unwrap_or_default();
                if old == new {
                    println!("golden file unchanged: {}", path.display());
                } else {
                    println!("rewriting {} ({} -> {} bytes)", path.display(), old.len(), new.len());
                    std::fs::write(&path, new).map_err(|e| e.to_string())?;
                }
                return Ok(true);
            }
            let stored: serde_json::Value = serde_json::from_str(
                &std::fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read {}: {e}", path.display()))?,
            )
            .map_err(|e| e.to_string())?;
            let mut rep = Report::new();
            rep.check(
                "worked examples reproduce the golden file",
                stored == snapshot,
                format!("{}", path.display()),
            );
            rep.check(
                "both example reports pass",
                snapshot["tl3_l3"]["pass"] == json!(true)
                    && snapshot["b3_l5_m2"]["pass"] == json!(true),
                String::new(),
            );
            emit_report(cli.format, json!({"golden_dir": dir}), &rep, None);
            Ok(rep.pass())
        }
    }
}

fn indent(s: &str, by: usize) -> String {
    let pad = " ".repeat(by);
    s.lines().map(|l| format!("{pad}{l}")).collect::<Vec<_>>().join("\n")
}

fn main() -> ExitCode {
    match run() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
