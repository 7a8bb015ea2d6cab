//! The `cyclo` command line.
//!
//! Every command builds a [`Report`] and renders it as text, JSON or CSV.
//! JSON reports contain only sorted maps, so parsing and re-serialising one is
//! byte-identical. CSV columns per command:
//!
//! | command       | columns |
//! |---------------|---------|
//! | coeff         | `n,k,coeff,method` |
//! | poly          | `k,coeff` |
//! | height        | `p,q,r,height,witness,signed_value` |
//! | beiter-sets   | `p,b_minus,b_plus,lower_bound` |
//! | construct, moller, verify-cert | `kind,p,q,r,alpha,n,claimed,exact_height,verified` |
//! | verify-table  | `row,p,expected,computed,pass` |
//! | reciprocal    | `n,block_len,height,minimal_period,period_divides_n,prediction,agreement` |
//! | transport     | `p,q,r,n,value,target,mode,n_new,value_new,pass` |
//!
//! List-valued cells are joined with `;`. Exit codes: 0 success, 1 a
//! verification mismatch, 2 invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::beiter::{
    beiter_sets, construct, least_admissible_q, lehmer, moller, moller_with_q, mp_lower_bound,
    verify_certificate_with, Certificate, CheckStatus, Sign, VerificationResult, VerifyConfig,
};
use crate::binary::binary_coeff;
use crate::bounds::general_ceiling;
use crate::dense::{
    cyclotomic_poly_capped, reciprocal_block_capped, reciprocal_height_predicate,
    ReciprocalPrediction, DEFAULT_DEGREE_CAP,
};
use crate::error::{Error, Result};
use crate::fixtures::{COUNTER_EXAMPLE_TABLE, HEIGHT_RANGE_TABLE, SETS_TABLE};
use crate::kaplan::{
    ternary_coeff, ternary_height_capped, transport_neg, transport_same, OddPrimeTriple,
    DEFAULT_SCAN_CAP,
};
use crate::numtheory::factorize;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

const DEFAULT_R_CAP: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignArg {
    Minus,
    Plus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Self {
        match s {
            SignArg::Minus => Sign::Minus,
            SignArg::Plus => Sign::Plus,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "cyclo", version, about = "Exact coefficients and heights of cyclotomic polynomials")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Upper limit for the prime r searched by constructions.
    #[arg(long, default_value_t = DEFAULT_R_CAP, global = true)]
    pub r_cap: u64,
    /// Most coefficients a full height scan may visit.
    #[arg(long, default_value_t = DEFAULT_SCAN_CAP, global = true)]
    pub scan_cap: u64,
    /// Largest degree handed to the dense oracle.
    #[arg(long, default_value_t = DEFAULT_DEGREE_CAP, global = true)]
    pub dense_cap: u64,
    /// Threads for height scans; defaults to the available parallelism.
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Coefficient a_n(k).
    Coeff { n: u64, k: u64 },
    /// All coefficients of Φ_n (dense).
    Poly { n: u64 },
    /// Height of Φ_pqr by a full scan.
    Height { p: u64, q: u64, r: u64 },
    /// The classes B₋(p), B₊(p) and the resulting lower bound.
    BeiterSets { p: u64 },
    /// Build and verify large-coefficient certificates.
    Construct {
        #[arg(long)]
        p: u64,
        /// Residue class; defaults to q mod p, or every member of the set.
        #[arg(long)]
        beta: Option<u64>,
        /// Prime q ≡ β (mod p); defaults to the least admissible one.
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, value_enum)]
        sign: SignArg,
        /// Upper limit when searching for q.
        #[arg(long, default_value_t = 10_000_000)]
        q_cap: u64,
    },
    /// The (mpq-1)/2 family: (p+1)/2 and (p-1)/2 coefficients.
    Moller {
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: u64,
        /// Prime q ≡ 2 (mod p); defaults to the least one.
        #[arg(long)]
        q: Option<u64>,
        /// Fail instead of trying larger m when r is not prime.
        #[arg(long)]
        exact_m: bool,
    },
    /// Check a reference table (1, 2 or 3).
    VerifyTable {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Height of 1/Φ_n over one period, given n or p q r.
    Reciprocal {
        #[arg(num_args = 1..=3, required = true)]
        values: Vec<u64>,
    },
    /// Move a coefficient of Φ_pqr to Φ_pqs (s ≡ r mod pq) or, negated, to Φ_pqu (u ≡ -r mod pq).
    Transport {
        p: u64,
        q: u64,
        r: u64,
        n: u64,
        #[arg(long)]
        to: u64,
    },
    /// Verify certificates from a JSON file, or standard input when omitted.
    VerifyCert { file: Option<PathBuf> },
}

/// Machine-readable outcome of one command.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub results: Vec<Value>,
    pub checks_passed: u64,
    pub checks_failed: u64,
    pub elapsed_ms: u64,
    #[serde(skip)]
    text: Vec<String>,
    #[serde(skip)]
    columns: &'static [&'static str],
}

impl Report {
    fn new(command: &str, columns: &'static [&'static str]) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Vec::new(),
            checks_passed: 0,
            checks_failed: 0,
            elapsed_ms: 0,
            text: Vec::new(),
            columns,
        }
    }

    fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    fn check(&mut self, ok: bool) {
        if ok {
            self.checks_passed += 1;
        } else {
            self.checks_failed += 1;
        }
    }

    fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    pub fn exit_code(&self) -> i32 {
        if self.checks_failed == 0 {
            EXIT_OK
        } else {
            EXIT_MISMATCH
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports hold only JSON values")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(self.columns).expect("in-memory write");
        for row in &self.results {
            let cells: Vec<String> = self.columns.iter().map(|c| csv_cell(&row[*c])).collect();
            w.write_record(&cells).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = self.text.join("\n");
                s.push('\n');
                s
            }
            Format::Json => self.to_json() + "\n",
            Format::Csv => self.to_csv(),
        }
    }
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(csv_cell).collect::<Vec<_>>().join(";"),
        other => other.to_string(),
    }
}

/// What a finished command produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parse `args` (including the program name) and run the command.
pub fn run_from<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { stdout: text, stderr: String::new(), code }
            } else {
                Outcome { stdout: String::new(), stderr: text, code }
            }
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let start = Instant::now();
    match dispatch(cli) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis() as u64;
            Outcome { stdout: report.render(cli.format), stderr: String::new(), code: report.exit_code() }
        }
        Err(e) => Outcome { stdout: String::new(), stderr: format!("error: {e}\n"), code: EXIT_INVALID },
    }
}

/// Entry point for the binary: runs on the process arguments and returns the exit code.
pub fn main_with_args() -> i32 {
    let out = run_from(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

impl Cli {
    fn workers(&self) -> usize {
        self.workers
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
            .max(1)
    }

    fn verify_config(&self) -> VerifyConfig {
        VerifyConfig { dense_cap: self.dense_cap, scan_cap: self.scan_cap, workers: self.workers() }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Coeff { n, k } => cmd_coeff(cli, *n, *k),
        Command::Poly { n } => cmd_poly(cli, *n),
        Command::Height { p, q, r } => cmd_height(cli, *p, *q, *r),
        Command::BeiterSets { p } => cmd_beiter_sets(*p),
        Command::Construct { p, beta, q, sign, q_cap } => {
            cmd_construct(cli, *p, *beta, *q, (*sign).into(), *q_cap)
        }
        Command::Moller { p, m, q, exact_m } => cmd_moller(cli, *p, *m, *q, !exact_m),
        Command::VerifyTable { which } => cmd_verify_table(cli, *which),
        Command::Reciprocal { values } => cmd_reciprocal(cli, values),
        Command::Transport { p, q, r, n, to } => cmd_transport(*p, *q, *r, *n, *to),
        Command::VerifyCert { file } => cmd_verify_cert(cli, file.as_deref()),
    }
}

fn cmd_coeff(cli: &Cli, n: u64, k: u64) -> Result<Report> {
    let f = factorize(n)?;
    if !f.is_squarefree() {
        return Err(Error::NotSquarefree(n));
    }
    let primes: Vec<u64> = f.primes().collect();
    let (value, method) = match primes.as_slice() {
        [p, q, r] if *p > 2 => (ternary_coeff(&OddPrimeTriple::new(*p, *q, *r)?, k)?, "kaplan"),
        [p, q] if *p > 2 => (binary_coeff(*p, *q, k)? as i64, "binary"),
        _ => (cyclotomic_poly_capped(n, cli.dense_cap)?.get(k), "dense"),
    };
    let mut report = Report::new("coeff", &["n", "k", "coeff", "method"]).input("n", n).input("k", k);
    report.results.push(json!({ "n": n, "k": k, "coeff": value, "method": method }));
    report.line(value.to_string());
    Ok(report)
}

fn cmd_poly(cli: &Cli, n: u64) -> Result<Report> {
    let poly = cyclotomic_poly_capped(n, cli.dense_cap)?;
    let mut report = Report::new("poly", &["k", "coeff"]).input("n", n);
    for (k, c) in poly.coeffs.iter().enumerate() {
        report.results.push(json!({ "k": k, "coeff": c }));
    }
    report.line(poly.coeffs.iter().map(i64::to_string).collect::<Vec<_>>().join(" "));
    Ok(report)
}

fn cmd_height(cli: &Cli, p: u64, q: u64, r: u64) -> Result<Report> {
    let t = OddPrimeTriple::new(p, q, r)?;
    let h = ternary_height_capped(&t, cli.workers(), cli.scan_cap)?;
    let mut report = Report::new("height", &["p", "q", "r", "height", "witness", "signed_value"])
        .input("p", p)
        .input("q", q)
        .input("r", r);
    report.results.push(json!({
        "p": p, "q": q, "r": r,
        "height": h.height, "witness": h.witness, "signed_value": h.signed_value,
    }));
    report.line(format!("A({}) = {} (a({}) = {})", t.n(), h.height, h.witness, h.signed_value));
    Ok(report)
}

fn cmd_beiter_sets(p: u64) -> Result<Report> {
    let sets = beiter_sets(p)?;
    let bound = mp_lower_bound(p);
    let mut report = Report::new("beiter-sets", &["p", "b_minus", "b_plus", "lower_bound"]).input("p", p);
    report.results.push(json!({
        "p": p, "b_minus": sets.b_minus, "b_plus": sets.b_plus, "lower_bound": bound,
    }));
    report.line(format!("B-({p}) = {:?}", sets.b_minus));
    report.line(format!("B+({p}) = {:?}", sets.b_plus));
    report.line(match bound {
        Some(b) => format!("M({p}) >= {b}"),
        None => format!("B({p}) is empty"),
    });
    Ok(report)
}

const CERT_COLUMNS: &[&str] = &["kind", "p", "q", "r", "alpha", "n", "claimed", "exact_height", "verified"];

fn push_verified(report: &mut Report, v: &VerificationResult) {
    let mut record = serde_json::to_value(v.certificate).expect("certificates serialise");
    let map = record.as_object_mut().expect("certificates are objects");
    map.insert("verified".into(), v.verified().into());
    map.insert("checks".into(), serde_json::to_value(&v.checks).expect("checks serialise"));
    report.results.push(record);
    for c in &v.checks {
        match c.status {
            CheckStatus::Passed => report.check(true),
            CheckStatus::Failed => report.check(false),
            CheckStatus::Skipped => {}
        }
    }
    let c = &v.certificate;
    let summary: Vec<String> = v
        .checks
        .iter()
        .map(|ch| format!("{}={}", ch.name, serde_json::to_value(ch.status).unwrap().as_str().unwrap()))
        .collect();
    report.line(format!(
        "{:?} p={} q={} r={} alpha={} n={} claimed={}{}  [{}]",
        c.kind,
        c.p,
        c.q,
        c.r,
        c.alpha,
        c.n,
        c.claimed,
        if c.exact_height { " (height)" } else { "" },
        summary.join(" ")
    ));
}

fn cmd_construct(cli: &Cli, p: u64, beta: Option<u64>, q: Option<u64>, sign: Sign, q_cap: u64) -> Result<Report> {
    let set_name = if sign == Sign::Minus { "B₋" } else { "B₊" };
    let betas: Vec<u64> = match (beta, q) {
        (Some(b), _) => vec![b],
        (None, Some(q)) => vec![q % p],
        (None, None) => {
            let sets = beiter_sets(p)?;
            let members = sets.get(sign).to_vec();
            if members.is_empty() {
                return Err(Error::InvalidInput(format!("{set_name}({p}) empty")));
            }
            members
        }
    };
    let mut report = Report::new("construct", CERT_COLUMNS)
        .input("p", p)
        .input("sign", serde_json::to_value(sign).expect("sign serialises"))
        .input("r_cap", cli.r_cap);
    if let Some(b) = beta {
        report = report.input("beta", b);
    }
    if let Some(q) = q {
        report = report.input("q", q);
    }
    let cfg = cli.verify_config();
    for b in betas {
        let q = match q {
            Some(q) => q,
            None => least_admissible_q(p, b, sign, q_cap)?,
        };
        for cert in construct(p, b, q, sign, cli.r_cap)? {
            push_verified(&mut report, &verify_certificate_with(&cert, &cfg));
        }
    }
    Ok(report)
}

fn cmd_moller(cli: &Cli, p: u64, m: u64, q: Option<u64>, search: bool) -> Result<Report> {
    let main = match q {
        Some(q) => moller_with_q(p, q, m, search)?,
        None => moller(p, m, search)?,
    };
    let mut report = Report::new("moller", CERT_COLUMNS).input("p", p).input("m", m);
    if let Some(q) = q {
        report = report.input("q", q);
    }
    let cfg = cli.verify_config();
    push_verified(&mut report, &verify_certificate_with(&main, &cfg));
    if p > 3 {
        let l = lehmer(p, main.q, main.r)?;
        push_verified(&mut report, &verify_certificate_with(&l, &cfg));
    }
    Ok(report)
}

fn table_row(report: &mut Report, row: usize, p: u64, expected: Value, computed: Value) {
    let pass = expected == computed;
    report.check(pass);
    report.line(format!(
        "row {row:2} p={p:3} {} expected {expected} computed {computed}",
        if pass { "ok  " } else { "FAIL" }
    ));
    report.results.push(json!({
        "row": row, "p": p, "expected": expected, "computed": computed, "pass": pass,
    }));
}

fn cmd_verify_table(cli: &Cli, which: u8) -> Result<Report> {
    let mut report =
        Report::new("verify-table", &["row", "p", "expected", "computed", "pass"]).input("table", which);
    match which {
        1 => {
            for (i, row) in SETS_TABLE.iter().enumerate() {
                let s = beiter_sets(row.p)?;
                table_row(
                    &mut report,
                    i + 1,
                    row.p,
                    json!([row.b_minus, row.b_plus, row.lower_bound]),
                    json!([s.b_minus, s.b_plus, mp_lower_bound(row.p)]),
                );
            }
        }
        2 => {
            for (i, row) in HEIGHT_RANGE_TABLE.iter().enumerate() {
                let t = OddPrimeTriple::new(row.p, row.q, row.r)?;
                let a = ternary_coeff(&t, row.n)?.unsigned_abs();
                let b = general_ceiling(row.p);
                table_row(&mut report, i + 1, row.p, json!([row.a, row.b, true]), json!([a, b, a <= b]));
            }
        }
        3 => {
            let mut rebuilt: Vec<Certificate> = Vec::new();
            let mut qs: Vec<u64> = COUNTER_EXAMPLE_TABLE.iter().map(|r| r.q).collect();
            qs.dedup();
            for q in qs {
                rebuilt.extend(construct(11, 4, q, Sign::Minus, cli.r_cap)?);
            }
            for (i, row) in COUNTER_EXAMPLE_TABLE.iter().enumerate() {
                let t = OddPrimeTriple::new(row.p, row.q, row.r)?;
                let value = ternary_coeff(&t, row.n)?;
                let regenerated = rebuilt
                    .iter()
                    .find(|c| c.q == row.q && c.alpha == row.alpha)
                    .map(|c| json!([c.r, c.n]));
                table_row(
                    &mut report,
                    i + 1,
                    row.p,
                    json!([row.value, [row.r, row.n]]),
                    json!([value, regenerated]),
                );
            }
        }
        _ => return Err(Error::InvalidInput(format!("no table {which}"))),
    }
    let total = report.checks_passed + report.checks_failed;
    report.line(format!("{}/{} rows pass", report.checks_passed, total));
    Ok(report)
}

fn cmd_reciprocal(cli: &Cli, values: &[u64]) -> Result<Report> {
    let (n, triple) = match values {
        [n] => {
            let primes: Vec<u64> = factorize(*n)?.primes().collect();
            let triple = match primes.as_slice() {
                [p, q, r] if *p > 2 => Some((*p, *q, *r)),
                _ => None,
            };
            (*n, triple)
        }
        [p, q, r] => {
            let t = OddPrimeTriple::new(*p, *q, *r)?;
            (t.n(), Some((*p, *q, *r)))
        }
        _ => return Err(Error::InvalidInput("give n, or p q r".into())),
    };
    let block = reciprocal_block_capped(n, cli.dense_cap)?;
    let height = block.height();
    let period = block.minimal_period();
    let divides = n % period == 0;
    let mut report = Report::new(
        "reciprocal",
        &["n", "block_len", "height", "minimal_period", "period_divides_n", "prediction", "agreement"],
    )
    .input("n", n);
    report.check(divides);
    let mut record = json!({
        "n": n, "block_len": block.block.len(), "height": height,
        "minimal_period": period, "period_divides_n": divides,
        "prediction": Value::Null, "agreement": Value::Null,
    });
    report.line(format!("H({n}) = {height}, minimal period {period} (divides n: {divides})"));
    if let Some((p, q, r)) = triple {
        let pred = reciprocal_height_predicate(p, q, r)?;
        let agreement = (height == p - 1) == (pred == ReciprocalPrediction::EqualPMinus1);
        report.check(agreement);
        record["prediction"] = serde_json::to_value(pred).expect("prediction serialises");
        record["agreement"] = agreement.into();
        let said = match pred {
            ReciprocalPrediction::EqualPMinus1 => "equal p-1",
            ReciprocalPrediction::LessThanPMinus1 => "less than p-1",
        };
        report.line(format!("predicted {said} for ({p}, {q}, {r}); agreement {agreement}"));
    }
    report.results.push(record);
    Ok(report)
}

fn cmd_transport(p: u64, q: u64, r: u64, n: u64, to: u64) -> Result<Report> {
    let t = OddPrimeTriple::new(p, q, r)?;
    let pq = p * q;
    let (mode, n_new, sign) = if to % pq == r % pq {
        ("same", transport_same(&t, n, to)?, 1)
    } else if (to % pq + r % pq) % pq == 0 {
        ("negated", transport_neg(&t, n, to)?, -1)
    } else {
        return Err(Error::CongruenceViolated(format!(
            "target {to} is neither ≡ r nor ≡ -r modulo {pq}"
        )));
    };
    let (lo, hi) = (q.min(to), q.max(to));
    let target = OddPrimeTriple::new(p, lo, hi)?;
    let value = ternary_coeff(&t, n)?;
    let value_new = ternary_coeff(&target, n_new)?;
    let pass = value_new == sign * value;
    let mut report = Report::new(
        "transport",
        &["p", "q", "r", "n", "value", "target", "mode", "n_new", "value_new", "pass"],
    )
    .input("p", p)
    .input("q", q)
    .input("r", r)
    .input("n", n)
    .input("to", to);
    report.check(pass);
    report.results.push(json!({
        "p": p, "q": q, "r": r, "n": n, "value": value, "target": to,
        "mode": mode, "n_new": n_new, "value_new": value_new, "pass": pass,
    }));
    report.line(format!(
        "a_{{{p}·{q}·{r}}}({n}) = {value} -> a_{{{p}·{q}·{to}}}({n_new}) = {value_new} ({mode}, {})",
        if pass { "ok" } else { "MISMATCH" }
    ));
    Ok(report)
}

fn cmd_verify_cert(cli: &Cli, file: Option<&std::path::Path>) -> Result<Report> {
    let raw = match file {
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Error::InvalidInput(format!("cannot read standard input: {e}")))?;
            s
        }
    };
    let certs = parse_certificates(&raw)?;
    let mut report = Report::new("verify-cert", CERT_COLUMNS).input("certificates", certs.len() as u64);
    if let Some(path) = file {
        report = report.input("file", path.display().to_string());
    }
    let cfg = cli.verify_config();
    for c in &certs {
        push_verified(&mut report, &verify_certificate_with(c, &cfg));
    }
    Ok(report)
}

/// One certificate object or an array of them.
pub fn parse_certificates(raw: &str) -> Result<Vec<Certificate>> {
    let value: Value =
        serde_json::from_str(raw).map_err(|e| Error::InvalidInput(format!("malformed JSON: {e}")))?;
    let parse = |v: Value| {
        serde_json::from_value::<Certificate>(v)
            .map_err(|e| Error::InvalidInput(format!("malformed certificate: {e}")))
    };
    match value {
        Value::Array(items) => items.into_iter().map(parse).collect(),
        other => Ok(vec![parse(other)?]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_from(std::iter::once("cyclo").chain(args.iter().copied()))
    }

    #[test]
    fn coeff_text() {
        assert_eq!(run(&["coeff", "105", "7"]).stdout, "-2\n");
        assert_eq!(run(&["coeff", "7", "3"]).stdout, "1\n");
        assert_eq!(run(&["coeff", "15", "7"]).stdout, "-1\n");
        assert_eq!(run(&["coeff", "12", "1"]).code, EXIT_INVALID);
    }

    #[test]
    fn csv_columns() {
        let out = run(&["--format", "csv", "beiter-sets", "71"]);
        assert_eq!(out.stdout, "p,b_minus,b_plus,lower_bound\n71,32;33;34,27;29;30;31,44\n");
    }

    #[test]
    fn bad_arguments_exit_two() {
        assert_eq!(run(&["verify-table", "4"]).code, EXIT_INVALID);
        assert_eq!(run(&["height", "3", "5"]).code, EXIT_INVALID);
        let out = run(&["construct", "--p", "7", "--sign", "minus"]);
        assert_eq!(out.code, EXIT_INVALID);
        assert!(out.stderr.contains("B₋(7) empty"));
        assert_eq!(run(&["--help"]).code, EXIT_OK);
    }
}
