//! `pbern`: p-Bernoulli values, tables, generating-function expansions and
//! identity verification from the command line.
//!
//! Exit codes: 0 success / everything verified, 1 an identity failed,
//! 2 usage error.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use pbern_core::harness::{Harness, Identity, Report};
use pbern_core::{
    egf_closed_form, factorial, pbernoulli_explicit, PBTable, Rational, Route, Triangle,
    TriangleKind,
};

#[derive(Parser)]
#[command(name = "pbern", version, about = "Exact p-Bernoulli numbers and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    #[default]
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Explicit,
    Recurrence,
    Stirling1,
    Egf,
}

impl From<Method> for Route {
    fn from(m: Method) -> Route {
        match m {
            Method::Explicit => Route::Explicit,
            Method::Recurrence => Route::Recurrence,
            Method::Stirling1 => Route::Stirling1,
            Method::Egf => Route::Egf,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum TriangleArg {
    Stirling2,
    Stirling1,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single B_{n,p}.
    Value {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, value_enum, default_value_t = Method::Explicit)]
        method: Method,
    },
    /// Print the rectangle of B_{n,p}, or a Stirling triangle.
    Table {
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        #[arg(long, default_value_t = 6)]
        pmax: usize,
        #[arg(long, value_enum, default_value_t = Method::Explicit)]
        method: Method,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Dump a Stirling triangle (rows 0..=nmax) instead.
        #[arg(long, value_enum)]
        triangle: Option<TriangleArg>,
    },
    /// Expand the closed-form generating function and compare with B_{n,p}/n!.
    Series {
        #[arg(long)]
        p: usize,
        #[arg(long, default_value_t = 32)]
        order: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Verify identities; exit 1 if any cell fails.
    Verify {
        /// all, routes, theorem1, theorem2, corollary1, corollary2,
        /// special-sums, eq12 or proposition
        #[arg(default_value = "all")]
        selector: String,
        #[arg(long, default_value_t = 20)]
        nmax: usize,
        #[arg(long, default_value_t = 6)]
        pmax: usize,
        #[arg(long, default_value_t = 32)]
        order: i64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Add 1 to table cell N,P before verifying (fault injection).
        #[arg(long, hide = true, value_name = "N,P")]
        corrupt_cell: Option<String>,
    },
}

struct Usage(String);

type CmdResult = Result<(String, u8), Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Value { n, p, method } => cmd_value(n, p, method),
        Command::Table {
            nmax,
            pmax,
            method,
            format,
            triangle,
        } => match triangle {
            Some(kind) => Ok((cmd_triangle(nmax, kind, format), 0)),
            None => Ok((cmd_table(nmax, pmax, method, format), 0)),
        },
        Command::Series { p, order, format } => cmd_series(p, order, format),
        Command::Verify {
            selector,
            nmax,
            pmax,
            order,
            format,
            corrupt_cell,
        } => cmd_verify(&selector, nmax, pmax, order, format, corrupt_cell.as_deref()),
    };
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(Usage(msg)) => {
            eprintln!("pbern: {msg}");
            ExitCode::from(2)
        }
    }
}

fn cmd_value(n: usize, p: i64, method: Method) -> CmdResult {
    let value = match method {
        Method::Explicit => pbernoulli_explicit(n, p).map_err(|e| Usage(e.to_string()))?,
        _ => {
            if p < 0 {
                return Err(Usage(format!("method {} needs p >= 0, got {p}", Route::from(method))));
            }
            PBTable::build(n, p as usize, method.into())
                .get(n, p as usize)
                .clone()
        }
    };
    Ok((format!("{value}\n"), 0))
}

fn cmd_table(nmax: usize, pmax: usize, method: Method, format: OutputFormat) -> String {
    let table = PBTable::build(nmax, pmax, method.into());
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("n,p,value\n");
            for (n, p, v) in table.cells() {
                let _ = writeln!(out, "{n},{p},{v}");
            }
        }
        OutputFormat::Json => {
            let cells: Vec<Value> = table
                .cells()
                .map(|(n, p, v)| json!({"n": n, "p": p, "value": v.to_string()}))
                .collect();
            out = json_line(&Value::Array(cells));
        }
        OutputFormat::Plain => {
            let header: Vec<String> = (0..=pmax).map(|p| p.to_string()).collect();
            let _ = writeln!(out, "n\\p\t{}", header.join("\t"));
            for n in 0..=nmax {
                let row: Vec<String> = (0..=pmax).map(|p| table.get(n, p).to_string()).collect();
                let _ = writeln!(out, "{n}\t{}", row.join("\t"));
            }
        }
    }
    out
}

fn cmd_triangle(nmax: usize, kind: TriangleArg, format: OutputFormat) -> String {
    let kind = match kind {
        TriangleArg::Stirling2 => TriangleKind::Stirling2,
        TriangleArg::Stirling1 => TriangleKind::Stirling1Unsigned,
    };
    let tri = Triangle::with_rows(kind, nmax);
    let mut out = String::new();
    match format {
        OutputFormat::Csv => {
            out.push_str("n,k,value\n");
            for (n, k, v) in tri.entries() {
                let _ = writeln!(out, "{n},{k},{v}");
            }
        }
        OutputFormat::Json => {
            let cells: Vec<Value> = tri
                .entries()
                .map(|(n, k, v)| json!({"n": n, "k": k, "value": v.to_string()}))
                .collect();
            out = json_line(&Value::Array(cells));
        }
        OutputFormat::Plain => {
            for n in 0..=nmax {
                let row: Vec<String> = tri.row(n).iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "{n}\t{}", row.join("\t"));
            }
        }
    }
    out
}

fn cmd_series(p: usize, order: i64, format: OutputFormat) -> CmdResult {
    let series = egf_closed_form(p, order).map_err(|e| Usage(e.to_string()))?;
    let rows: Vec<(i64, Rational, Rational)> = (0..order)
        .map(|n| {
            let got = series.coeff(n).expect("n < order");
            let want = pbernoulli_explicit(n as usize, p as i64).expect("p >= 0")
                / Rational::from(factorial(n as u64));
            (n, got, want)
        })
        .collect();
    // the principal part must have cancelled as well
    let all_match = series.valuation() >= 0 && rows.iter().all(|(_, a, b)| a == b);
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            let _ = writeln!(out, "{series}");
            for (n, a, b) in &rows {
                let _ = writeln!(out, "{n}\t{a}\t{b}\t{}", if a == b { "ok" } else { "MISMATCH" });
            }
            let _ = writeln!(out, "match: {all_match}");
        }
        OutputFormat::Csv => {
            out.push_str("n,egf,explicit,match\n");
            for (n, a, b) in &rows {
                let _ = writeln!(out, "{n},{a},{b},{}", a == b);
            }
        }
        OutputFormat::Json => {
            let coeffs: Vec<Value> = rows
                .iter()
                .map(|(n, a, b)| {
                    json!({"n": n, "egf": a.to_string(), "explicit": b.to_string(), "match": a == b})
                })
                .collect();
            out = json_line(&json!({
                "p": p,
                "order": order,
                "valuation": series.valuation(),
                "series": series.to_string(),
                "coefficients": coeffs,
                "all_match": all_match,
            }));
        }
    }
    Ok((out, if all_match { 0 } else { 1 }))
}

fn parse_cell(s: &str) -> Result<(usize, usize), Usage> {
    let bad = || Usage(format!("--corrupt-cell expects N,P, got {s:?}"));
    let (n, p) = s.split_once(',').ok_or_else(bad)?;
    Ok((
        n.trim().parse().map_err(|_| bad())?,
        p.trim().parse().map_err(|_| bad())?,
    ))
}

fn cmd_verify(
    selector: &str,
    nmax: usize,
    pmax: usize,
    order: i64,
    format: OutputFormat,
    corrupt: Option<&str>,
) -> CmdResult {
    let identities: Vec<Identity> = if selector == "all" {
        Identity::ALL.to_vec()
    } else {
        vec![selector.parse().map_err(|e: pbern_core::Error| Usage(e.to_string()))?]
    };
    let mut harness = Harness::new(nmax, pmax, order).map_err(|e| Usage(e.to_string()))?;
    if let Some(spec) = corrupt {
        let (n, p) = parse_cell(spec)?;
        let table = harness.table_mut();
        let Some(old) = table.try_get(n, p).cloned() else {
            return Err(Usage(format!(
                "cell ({n},{p}) outside table n <= {}, p <= {}",
                table.nmax(),
                table.pmax()
            )));
        };
        table.set(n, p, old + Rational::one());
    }
    let reports: Vec<Report> = identities.into_iter().flat_map(|i| harness.run(i)).collect();
    let all_pass = reports.iter().all(|r| r.all_pass);
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for r in &reports {
                out.push_str(&r.render_plain());
            }
            let _ = writeln!(out, "overall: {}", if all_pass { "PASS" } else { "FAIL" });
        }
        OutputFormat::Json => {
            let v: Vec<Value> = reports.iter().map(Report::to_json).collect();
            out = json_line(&Value::Array(v));
        }
        OutputFormat::Csv => {
            out.push_str("identity,params,lhs,rhs,pass\n");
            for r in &reports {
                for c in &r.cells {
                    let params: Vec<String> =
                        c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(
                        out,
                        "{},{},{},{},{}",
                        r.identity,
                        params.join(" "),
                        c.lhs,
                        c.rhs,
                        c.pass
                    );
                }
            }
        }
    }
    Ok((out, if all_pass { 0 } else { 1 }))
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json serializes");
    s.push('\n');
    s
}
