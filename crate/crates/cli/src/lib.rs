//! Argument handling and output formatting for the `holf2` binary.
//!
//! [`run`] never touches the process: it returns the exit code and the text
//! destined for stdout and stderr, so tests can drive it directly.

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use holf2::aut::convention_self_test;
use holf2::claims::{
    check_upu, check_word_swap, check_zxz, scan_torsion_ball, verify_all,
    verify_decomposition_relations, verify_presentations, DEFAULT_BOUND,
};
use holf2::report::{any_failed, ClaimReport, Status};
use holf2::torsion::{
    classify, lemma_identity_suite, representative_orders, ClassifyResult, DEFAULT_DEPTH,
};
use holf2::{compute_nf, gl_normal_form, parse_word, HolElt, Mat2, Order};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub const SCHEMA: u32 = 1;

#[derive(Debug, Parser)]
#[command(
    name = "holf2",
    version,
    about = "Exact arithmetic in F2, Aut(F2), GL(2,Z) and Hol(F2)"
)]
pub struct Cli {
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Images of a and b under the automorphism part, and the F2 part
    Eval { word: String },
    /// Normal form p^r u x^(2s) w(ta, tb) z(a, b)
    Nf { word: String },
    /// Order of the element (a positive integer or infinite)
    Order { word: String },
    /// Image in Aut(F2) or GL(2,Z)
    Project {
        word: String,
        #[arg(long, value_enum)]
        to: Target,
    },
    /// Conjugacy class of a finite-order element, with a certificate
    Classify {
        word: String,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
    /// Normal form of the GL(2,Z) image
    #[command(name = "gl2z-nf")]
    Gl2zNf { word: String },
    /// Run a claims suite
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Classify the finite-order elements of a Cayley ball
    Scan {
        #[arg(long, default_value_t = 3)]
        radius: usize,
        #[arg(long, default_value_t = DEFAULT_DEPTH)]
        depth: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Target {
    Aut,
    Gl2z,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Suite {
    All,
    Presentations,
    Decompositions,
    Lemma,
    Zxz,
    Upu,
    Swap,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Presentations => "presentations",
            Suite::Decompositions => "decompositions",
            Suite::Lemma => "lemma",
            Suite::Zxz => "zxz",
            Suite::Upu => "upu",
            Suite::Swap => "swap",
        }
    }
}

#[derive(Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Output {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: String) -> Output {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

#[derive(Serialize)]
struct JsonReport<'a> {
    claim_id: &'a str,
    status: &'static str,
    bound: Option<u64>,
    details: &'a str,
    certificate: Option<&'a str>,
}

impl<'a> From<&'a ClaimReport> for JsonReport<'a> {
    fn from(r: &'a ClaimReport) -> Self {
        JsonReport {
            claim_id: &r.claim_id,
            status: r.status.label(),
            bound: r.status.bound(),
            details: &r.details,
            certificate: r.certificate.as_deref(),
        }
    }
}

#[derive(Default, Serialize)]
struct Summary {
    pass: usize,
    evidence: usize,
    fail: usize,
}

fn summarize(reports: &[ClaimReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Evidence(_) => s.evidence += 1,
            Status::Fail => s.fail += 1,
        }
    }
    s
}

fn to_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn with_schema(command: &str, body: Value) -> Value {
    let mut obj = serde_json::Map::new();
    obj.insert("schema".into(), json!(SCHEMA));
    obj.insert("command".into(), json!(command));
    if let Value::Object(fields) = body {
        obj.extend(fields);
    }
    Value::Object(obj)
}

fn reports_output(command: &str, target: &str, reports: &[ClaimReport], json: bool) -> Output {
    let code = if any_failed(reports) {
        EXIT_FAIL
    } else {
        EXIT_OK
    };
    let summary = summarize(reports);
    let stdout = if json {
        let items: Vec<JsonReport> = reports.iter().map(JsonReport::from).collect();
        to_json(&with_schema(
            command,
            json!({ "target": target, "reports": items, "summary": summary }),
        ))
    } else {
        let mut s: String = reports.iter().map(|r| format!("{r}\n")).collect();
        s.push_str(&format!(
            "{} pass, {} evidence, {} fail\n",
            summary.pass, summary.evidence, summary.fail
        ));
        s
    };
    Output {
        code,
        stdout,
        stderr: String::new(),
    }
}

fn matrix_json(m: &Mat2) -> Value {
    match m.to_i64_rows() {
        Some(rows) => json!(rows),
        None => {
            let e: Vec<String> = m.entries().iter().map(|x| x.to_string()).collect();
            json!([[e[0], e[1]], [e[2], e[3]]])
        }
    }
}

fn order_json(o: Order) -> Value {
    match o {
        Order::Finite(n) => json!(n),
        Order::Infinite => json!("infinite"),
    }
}

fn parse_elt(word: &str) -> Result<HolElt, Output> {
    parse_word(word)
        .map(|w| w.eval())
        .map_err(|e| Output::usage(format!("error: {e} in {word:?}\n")))
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output::usage(text)
            } else {
                Output::ok(text)
            };
        }
    };
    if !convention_self_test() {
        return Output {
            code: EXIT_FAIL,
            stdout: String::new(),
            stderr: "error: composition convention self-test failed\n".into(),
        };
    }
    match execute(&cli) {
        Ok(out) | Err(out) => out,
    }
}

fn execute(cli: &Cli) -> Result<Output, Output> {
    let json = cli.json;
    let out = match &cli.command {
        Command::Eval { word } => {
            let e = parse_elt(word)?;
            let [ia, ib] = e.aut().images();
            if json {
                Output::ok(to_json(&with_schema(
                    "eval",
                    json!({ "input": word, "images": { "a": ia.to_string(), "b": ib.to_string() }, "z": e.z().to_string() }),
                )))
            } else {
                Output::ok(format!("a -> {ia}\nb -> {ib}\nz = {}\n", e.z()))
            }
        }
        Command::Nf { word } => {
            let e = parse_elt(word)?;
            let nf = compute_nf(&e).map_err(|err| Output {
                code: EXIT_FAIL,
                stdout: String::new(),
                stderr: format!("error: {err}\n"),
            })?;
            if json {
                Output::ok(to_json(&with_schema(
                    "nf",
                    json!({ "input": word, "normal_form": nf, "word": nf.to_word_string() }),
                )))
            } else {
                Output::ok(format!("{nf}\n{}\n", nf.to_word_string()))
            }
        }
        Command::Order { word } => {
            let o = parse_elt(word)?.order();
            if json {
                Output::ok(to_json(&with_schema(
                    "order",
                    json!({ "input": word, "order": order_json(o) }),
                )))
            } else {
                Output::ok(format!("{o}\n"))
            }
        }
        Command::Project { word, to } => {
            let e = parse_elt(word)?;
            match to {
                Target::Aut => {
                    let [ia, ib] = e.aut().images();
                    if json {
                        Output::ok(to_json(&with_schema(
                            "project",
                            json!({ "input": word, "to": "aut", "images": { "a": ia.to_string(), "b": ib.to_string() } }),
                        )))
                    } else {
                        Output::ok(format!("a -> {ia}\nb -> {ib}\n"))
                    }
                }
                Target::Gl2z => {
                    let m = e.project_gl2z();
                    if json {
                        Output::ok(to_json(&with_schema(
                            "project",
                            json!({ "input": word, "to": "gl2z", "matrix": matrix_json(&m) }),
                        )))
                    } else {
                        Output::ok(format!("{m}\n"))
                    }
                }
            }
        }
        Command::Classify { word, depth } => {
            let e = parse_elt(word)?;
            classify_output(word, &e, *depth, json)
        }
        Command::Gl2zNf { word } => {
            let m = parse_elt(word)?.project_gl2z();
            let nf = gl_normal_form(&m).map_err(|err| Output {
                code: EXIT_FAIL,
                stdout: String::new(),
                stderr: format!("error: {err}\n"),
            })?;
            if json {
                Output::ok(to_json(&with_schema(
                    "gl2z-nf",
                    json!({ "input": word, "matrix": matrix_json(&m), "normal_form": nf, "word": nf.display_upper() }),
                )))
            } else {
                Output::ok(format!("{m}\n{nf}\n"))
            }
        }
        Command::Verify { suite, bound } => {
            if *bound == 0 && matches!(suite, Suite::All | Suite::Upu | Suite::Swap) {
                return Err(Output::usage("error: --bound must be at least 1\n".into()));
            }
            let reports = match suite {
                Suite::All => verify_all(*bound, cli.seed),
                Suite::Presentations => verify_presentations(),
                Suite::Decompositions => verify_decomposition_relations(),
                Suite::Lemma => {
                    let mut r = lemma_identity_suite();
                    r.extend(representative_orders());
                    r
                }
                Suite::Zxz => vec![check_zxz()],
                Suite::Upu => vec![check_upu(*bound)],
                Suite::Swap => vec![check_word_swap(*bound)],
            };
            reports_output("verify", suite.name(), &reports, json)
        }
        Command::Scan { radius, depth } => {
            if *radius == 0 {
                return Err(Output::usage("error: --radius must be at least 1\n".into()));
            }
            let reports = scan_torsion_ball(*radius, *depth).to_reports();
            reports_output(
                "scan",
                &format!("radius {radius}, depth {depth}"),
                &reports,
                json,
            )
        }
    };
    Ok(out)
}

fn classify_output(word: &str, e: &HolElt, depth: usize, json: bool) -> Output {
    let result = classify(e, depth);
    let (code, text, body) = match &result {
        ClassifyResult::Classified(cert) => {
            let verified = cert.verify(e);
            let conj = cert.conjugator_string();
            (
                if verified { EXIT_OK } else { EXIT_FAIL },
                format!(
                    "class {} (order {})\nconjugator c = {conj}, c' ({}) c = input: {}\n",
                    cert.class,
                    cert.class.expected_order(),
                    cert.class,
                    if verified { "verified" } else { "NOT verified" }
                ),
                json!({
                    "result": "classified",
                    "class": cert.class.word(),
                    "order": cert.class.expected_order(),
                    "conjugator": conj,
                    "verified": verified,
                }),
            )
        }
        ClassifyResult::NotTorsion => (
            EXIT_OK,
            "infinite order, not torsion\n".to_string(),
            json!({ "result": "not-torsion" }),
        ),
        ClassifyResult::UnknownAtDepth(d) => (
            EXIT_FAIL,
            format!("no conjugator found within depth {d}\n"),
            json!({ "result": "unknown", "depth": d }),
        ),
    };
    let stdout = if json {
        let mut v = with_schema("classify", json!({ "input": word }));
        if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
            m.extend(b);
        }
        to_json(&v)
    } else {
        text
    };
    Output {
        code,
        stdout,
        stderr: String::new(),
    }
}
