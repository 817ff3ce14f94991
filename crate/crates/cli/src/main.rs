//! `gfc` — command-line evaluator for the exterior-algebra kernel.
//!
//! Subcommands: `eval` (one expression), `repl` (line loop), `table`
//! (full basis-by-basis product table), `cocycle` (coboundary of a
//! cochain plus the induced-product cross-check).
//!
//! Exit codes: 0 success, 1 evaluation error, 2 expression parse
//! error, 3 configuration error (flags, files, matrices, scalar mode).

use std::io::{BufRead, IsTerminal, Write as _};

use clap::{Parser as ClapParser, Subcommand, ValueEnum};
use gfc_core::*;

use gfc_cli::eval::{eval, Session, Value};
use gfc_cli::parser::parse;
use gfc_cli::render::{matrix_from_json, render_json, render_text};

#[derive(ClapParser)]
#[command(name = "gfc", version, about = "Exterior-algebra calculator with exact rational arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum TableOp {
    Clifford,
    Wedge,
    Meet,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate one expression and print the result.
    Eval {
        /// Number of generators (1..=16).
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Bilinear form for `*`, `_|`, `|_`: a JSON file path or inline JSON rows.
        #[arg(long)]
        form: Option<String>,
        /// Coscalar matrix for `cdelta`, `lcocon`, `rcocon`.
        #[arg(long)]
        coform: Option<String>,
        /// Cochain matrix for `circ`, `P`, `inv_p`.
        #[arg(long)]
        p: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Expression; may start with `-` (quote it, or separate with `--`).
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Read expressions from stdin, one per line.
    Repl {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        form: Option<String>,
        #[arg(long)]
        coform: Option<String>,
        #[arg(long)]
        p: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the product of every pair of basis blades.
    Table {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long)]
        form: Option<String>,
        #[arg(long, value_enum)]
        op: TableOp,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print the coboundary of a cochain and verify the product it induces.
    Cocycle {
        #[arg(long, default_value_t = 3)]
        dim: usize,
        /// Cochain matrix (upper triangle is read).
        #[arg(long)]
        p: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

enum Failure {
    Parse(String, usize),
    Eval(String),
    Config(String),
}

impl Failure {
    fn report(&self) -> i32 {
        match self {
            Failure::Parse(msg, col) => {
                eprintln!("error: parse error at column {col}: {msg}");
                2
            }
            Failure::Eval(msg) => {
                eprintln!("error: {msg}");
                1
            }
            Failure::Config(msg) => {
                eprintln!("error: {msg}");
                3
            }
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprint!("{e}");
            std::process::exit(3);
        }
    };
    let mode = std::env::var("GFC_SCALAR").unwrap_or_else(|_| "rational".to_string());
    let code = match mode.as_str() {
        "rational" => run::<Rational>(cli),
        "float" => run::<f64>(cli),
        other => {
            eprintln!("error: GFC_SCALAR must be `rational` or `float`, got `{other}`");
            3
        }
    };
    std::process::exit(code);
}

fn run<S: Scalar>(cli: Cli) -> i32 {
    let outcome = match cli.cmd {
        Cmd::Eval {
            dim,
            form,
            coform,
            p,
            format,
            expr,
        } => build_session::<S>(dim, &form, &coform, &p)
            .and_then(|s| eval_one(&s, &expr, format)),
        Cmd::Repl {
            dim,
            form,
            coform,
            p,
            format,
        } => build_session::<S>(dim, &form, &coform, &p).map(|s| repl(&s, format)),
        Cmd::Table {
            dim,
            form,
            op,
            format,
        } => table::<S>(dim, &form, op, format),
        Cmd::Cocycle { dim, p, format } => cocycle_report::<S>(dim, &p, format),
    };
    match outcome {
        Ok(()) => 0,
        Err(f) => f.report(),
    }
}

fn parse_dim(dim: usize) -> Result<Dim, Failure> {
    Dim::new(dim).map_err(|e| Failure::Config(e.to_string()))
}

fn load_matrix<S: Scalar>(arg: &str, dim: Dim) -> Result<Vec<Vec<S>>, Failure> {
    let text = if arg.trim_start().starts_with('[') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::Config(format!("cannot read `{arg}`: {e}")))?
    };
    matrix_from_json(&text, dim).map_err(Failure::Config)
}

fn build_session<S: Scalar>(
    dim: usize,
    form: &Option<String>,
    coform: &Option<String>,
    p: &Option<String>,
) -> Result<Session<S>, Failure> {
    let dim = parse_dim(dim)?;
    if !S::EXACT && (coform.is_some() || p.is_some()) {
        return Err(Failure::Config(
            "`--coform` and `--p` need exact scalars; run with GFC_SCALAR=rational".to_string(),
        ));
    }
    let mut session = Session::bare(dim);
    if let Some(arg) = form {
        let rows = load_matrix::<S>(arg, dim)?;
        let form = BilinearForm::new(dim, rows).map_err(|e| Failure::Config(e.to_string()))?;
        session.form = Some(ExtendedForm::new(form));
    }
    if let Some(arg) = coform {
        let rows = load_matrix::<S>(arg, dim)?;
        let c = BilinearForm::new(dim, rows).map_err(|e| Failure::Config(e.to_string()))?;
        session.coscalar =
            Some(coscalar_extension(&c).map_err(|e| Failure::Config(e.to_string()))?);
    }
    if let Some(arg) = p {
        let rows = load_matrix::<S>(arg, dim)?;
        let m = BilinearForm::new(dim, rows).map_err(|e| Failure::Config(e.to_string()))?;
        let cochain = Cochain::from_matrix(&m);
        let inverse = cochain.convolution_inverse();
        session.cochain = Some((cochain, inverse));
    }
    Ok(session)
}

fn eval_one<S: Scalar>(session: &Session<S>, expr: &str, format: Format) -> Result<(), Failure> {
    let ast = parse(expr, session.dim).map_err(|e| Failure::Parse(e.msg, e.col))?;
    let value = eval(&ast, session).map_err(|e| Failure::Eval(e.0))?;
    match format {
        Format::Text => println!("{}", render_text(&value)),
        Format::Json => println!("{}", render_json(&value, session.dim)),
    }
    Ok(())
}

fn repl<S: Scalar>(session: &Session<S>, format: Format) {
    let interactive = std::io::stdin().is_terminal();
    let stdin = std::io::stdin();
    let mut lines = stdin.lock().lines();
    loop {
        if interactive {
            print!("gfc> ");
            std::io::stdout().flush().ok();
        }
        let Some(Ok(line)) = lines.next() else { break };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == "exit" || line == "quit" {
            break;
        }
        match parse(line, session.dim) {
            Err(e) => eprintln!("error: parse error at column {}: {}", e.col, e.msg),
            Ok(ast) => match eval(&ast, session) {
                Err(e) => eprintln!("error: {}", e.0),
                Ok(v) => match format {
                    Format::Text => println!("{}", render_text(&v)),
                    Format::Json => println!("{}", render_json(&v, session.dim)),
                },
            },
        }
    }
}

fn table<S: Scalar>(
    dim: usize,
    form: &Option<String>,
    op: TableOp,
    format: Format,
) -> Result<(), Failure> {
    let dim = parse_dim(dim)?;
    let form = match (op, form) {
        (TableOp::Clifford, None) => {
            return Err(Failure::Config(
                "`table --op clifford` needs `--form`".to_string(),
            ))
        }
        (_, Some(arg)) => {
            let rows = load_matrix::<S>(arg, dim)?;
            let m = BilinearForm::new(dim, rows).map_err(|e| Failure::Config(e.to_string()))?;
            Some(ExtendedForm::new(m))
        }
        (_, None) => None,
    };
    let basis: Vec<Blade> = blades(dim).collect();
    let cell = |a: Blade, b: Blade| -> Result<Multivector<S>, Failure> {
        let x = Multivector::basis_blade(dim, a);
        let y = Multivector::basis_blade(dim, b);
        let r = match op {
            TableOp::Clifford => clifford_product(form.as_ref().unwrap(), &x, &y),
            TableOp::Wedge => x.wedge(&y),
            TableOp::Meet => meet(&x, &y),
        };
        r.map_err(|e| Failure::Eval(e.to_string()))
    };
    match format {
        Format::Text => {
            let sym = match op {
                TableOp::Clifford => "*",
                TableOp::Wedge => "^",
                TableOp::Meet => "v",
            };
            for &a in &basis {
                for &b in &basis {
                    println!("{} {} {} = {}", a.label(dim), sym, b.label(dim), cell(a, b)?);
                }
            }
        }
        Format::Json => {
            let op_name = match op {
                TableOp::Clifford => "clifford",
                TableOp::Wedge => "wedge",
                TableOp::Meet => "meet",
            };
            let mut rows = Vec::with_capacity(basis.len());
            for &a in &basis {
                let mut row = Vec::with_capacity(basis.len());
                for &b in &basis {
                    let m = cell(a, b)?;
                    match render_json(&Value::Mv(m), dim) {
                        serde_json::Value::Object(o) => row.push(o["terms"].clone()),
                        _ => unreachable!(),
                    }
                }
                rows.push(serde_json::Value::Array(row));
            }
            let out = serde_json::json!({
                "dim": dim.get(),
                "op": op_name,
                "table": rows,
            });
            println!("{out}");
        }
    }
    Ok(())
}

fn cocycle_report<S: Scalar>(dim: usize, p_arg: &str, format: Format) -> Result<(), Failure> {
    let dim = parse_dim(dim)?;
    if !S::EXACT {
        return Err(Failure::Config(
            "`cocycle` needs exact scalars; run with GFC_SCALAR=rational".to_string(),
        ));
    }
    if dim.get() > 6 {
        return Err(Failure::Config(format!(
            "`cocycle` checks every basis pair (4^n of them); dim {} exceeds the cap of 6",
            dim.get()
        )));
    }
    let rows = load_matrix::<S>(p_arg, dim)?;
    let m = BilinearForm::new(dim, rows).map_err(|e| Failure::Config(e.to_string()))?;
    let p = Cochain::from_matrix(&m);
    let p_inv = p.convolution_inverse();
    let pairing =
        coboundary_pairing(&p, &p_inv).map_err(|e| Failure::Eval(e.to_string()))?;
    let basis: Vec<Blade> = blades(dim).collect();

    // The coboundary of a cochain is a cocycle: the product it induces
    // through cliffordization must agree with the circle product on
    // every pair of basis blades.
    let mut checked = 0usize;
    for &a in &basis {
        let x = Multivector::basis_blade(dim, a);
        for &b in &basis {
            let y = Multivector::basis_blade(dim, b);
            let via_circle =
                circle_product(&p, &p_inv, &x, &y).map_err(|e| Failure::Eval(e.to_string()))?;
            let via_pairing =
                clifford_product(&pairing, &x, &y).map_err(|e| Failure::Eval(e.to_string()))?;
            if via_circle != via_pairing {
                return Err(Failure::Eval(format!(
                    "induced products disagree on {} , {}",
                    a.label(dim),
                    b.label(dim)
                )));
            }
            checked += 1;
        }
    }

    match format {
        Format::Text => {
            for &a in &basis {
                for &b in &basis {
                    let v = pairing.pair(a, b);
                    if !v.is_zero() {
                        println!("dP({}, {}) = {}", a.label(dim), b.label(dim), v);
                    }
                }
            }
            println!("induced product check: {checked}/{checked} basis pairs match");
        }
        Format::Json => {
            let mut entries = Vec::new();
            for &a in &basis {
                for &b in &basis {
                    let v = pairing.pair(a, b);
                    if !v.is_zero() {
                        entries.push(serde_json::json!({
                            "left": a.indices().collect::<Vec<_>>(),
                            "right": b.indices().collect::<Vec<_>>(),
                            "value": v.to_string(),
                        }));
                    }
                }
            }
            let out = serde_json::json!({
                "dim": dim.get(),
                "entries": entries,
                "pairs_checked": checked,
                "all_match": true,
            });
            println!("{out}");
        }
    }
    Ok(())
}
