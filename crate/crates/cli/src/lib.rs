//! Command-line front end for `rigid-core`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! code together with everything written to stdout and stderr, so the binary
//! and the tests share one code path.

pub mod audit;
pub mod error;
pub mod render;
pub mod selector;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use rigid_core::chartab::{
    character_table, compare_with_oracle, murnaghan_nakayama, verify_orthogonality,
};
use rigid_core::counting::{
    abc_census, analyze_tuple, class_algebra_constant, enumerate_solutions, frobenius_count,
    Census, ClassTuple, RigidityVerdict, TupleAnalysis, DEFAULT_SCAN_CAP,
};
use rigid_core::qsymbolic::PaperLedger;
use rigid_core::{parse_group_spec, ClassTable, FiniteGroup, GroupSpec, DEFAULT_CAP};

use crate::error::{exit, CliError};
use crate::selector::{expand, Selector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Pretty-printed JSON.
    Structured,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "rigid",
    version,
    about = "Exact rigidity checks for conjugacy-class tuples"
)]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value = "structured")]
    pub format: Format,
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    pub cap: usize,
    /// Largest number of tuples a brute-force scan may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_SCAN_CAP)]
    pub scan_cap: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate a group and print its order.
    Order { spec: String },
    /// Conjugacy classes with sizes, element orders and representatives.
    Classes { spec: String },
    /// Character table by Dixon-Schneider.
    Chartab {
        spec: String,
        /// For Sym(n), also compare with the Murnaghan-Nakayama table.
        #[arg(long)]
        oracle: bool,
    },
    /// Frobenius count and brute-force count for class tuples.
    Count {
        spec: String,
        #[arg(required = true)]
        selectors: Vec<String>,
    },
    /// All product-one triples with the given element orders.
    Triples {
        spec: String,
        a: u64,
        b: u64,
        c: u64,
    },
    /// Rigidity verdicts for class tuples. Plain integers select every class
    /// of that element order; three orders also produce a census.
    Rigid {
        spec: String,
        #[arg(required = true)]
        selectors: Vec<String>,
    },
    /// Run the full reproduction audit.
    PaperAudit {
        /// Run only this section (1-6).
        #[arg(long)]
        section: Option<u8>,
        /// Replace the cited ledger with one read from a file.
        #[arg(long)]
        ledger: Option<String>,
    },
    /// Murnaghan-Nakayama character table of Sym(n).
    Oracle { n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    value: Value,
    text: Option<String>,
    passed: bool,
}

impl Report {
    fn ok(value: Value) -> Self {
        Self {
            value,
            text: None,
            passed: true,
        }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                exit::USAGE
            } else {
                exit::PASS
            };
            let rendered = e.render().to_string();
            let (stdout, stderr) = if code == exit::PASS {
                (rendered, String::new())
            } else {
                (String::new(), rendered)
            };
            return Outcome {
                code,
                stdout,
                stderr,
            };
        }
    };
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(CliError::Usage(format!("cannot start thread pool: {e}"))),
        },
        None => execute(&cli),
    };
    match result {
        Ok(report) => {
            let stdout = match (cli.format, report.text) {
                (Format::Text, Some(text)) => text,
                (Format::Text, None) => render::text(&report.value),
                (Format::Structured, _) => {
                    serde_json::to_string_pretty(&report.value).expect("serializable") + "\n"
                }
            };
            Outcome {
                code: if report.passed {
                    exit::PASS
                } else {
                    exit::CHECK_FAILED
                },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn header(command: &str, input: Value) -> serde_json::Map<String, Value> {
    let mut map = serde_json::Map::new();
    map.insert("tool".into(), json!("rigid"));
    map.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
    map.insert("command".into(), json!(command));
    map.insert("input".into(), input);
    map
}

fn build(spec: &str, cap: usize) -> Result<(GroupSpec, FiniteGroup), CliError> {
    let parsed = parse_group_spec(spec)?;
    let group = parsed.build(cap)?;
    Ok((parsed, group))
}

fn execute(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Order { spec } => cmd_order(spec, cli.cap),
        Command::Classes { spec } => cmd_classes(spec, cli.cap),
        Command::Chartab { spec, oracle } => cmd_chartab(spec, *oracle, cli.cap),
        Command::Count { spec, selectors } => cmd_count(spec, selectors, cli),
        Command::Triples { spec, a, b, c } => cmd_triples(spec, [*a, *b, *c], cli),
        Command::Rigid { spec, selectors } => cmd_rigid(spec, selectors, cli),
        Command::PaperAudit { section, ledger } => cmd_paper_audit(*section, ledger.as_deref()),
        Command::Oracle { n } => cmd_oracle(*n),
    }
}

fn cmd_order(spec: &str, cap: usize) -> Result<Report, CliError> {
    let (parsed, g) = build(spec, cap)?;
    let mut out = header("order", json!({ "spec": parsed.to_string() }));
    out.insert("order".into(), json!(g.order()));
    let gens: Vec<String> = g.generators().iter().map(ToString::to_string).collect();
    out.insert("generators".into(), json!(gens));
    Ok(Report::ok(Value::Object(out)))
}

fn class_rows(g: &FiniteGroup, t: &ClassTable) -> Vec<Value> {
    t.classes()
        .iter()
        .map(|c| {
            json!({
                "id": c.id,
                "name": t.class_name(c.id),
                "element_order": c.element_order,
                "size": c.size(),
                "centralizer_order": c.centralizer_order,
                "representative": g.element(c.representative).to_string(),
            })
        })
        .collect()
}

fn cmd_classes(spec: &str, cap: usize) -> Result<Report, CliError> {
    let (parsed, g) = build(spec, cap)?;
    let t = ClassTable::new(&g);
    let mut out = header("classes", json!({ "spec": parsed.to_string() }));
    out.insert("order".into(), json!(g.order()));
    out.insert("num_classes".into(), json!(t.len()));
    out.insert("classes".into(), json!(class_rows(&g, &t)));
    let head: Vec<String> = [
        "id",
        "name",
        "order",
        "size",
        "centralizer",
        "representative",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let rows: Vec<Vec<String>> = t
        .classes()
        .iter()
        .map(|c| {
            vec![
                c.id.to_string(),
                t.class_name(c.id),
                c.element_order.to_string(),
                c.size().to_string(),
                c.centralizer_order.to_string(),
                g.element(c.representative).to_string(),
            ]
        })
        .collect();
    let text = format!(
        "{parsed}: order {}, {} classes\n{}",
        g.order(),
        t.len(),
        render::table(&head, &rows)
    );
    Ok(Report {
        value: Value::Object(out),
        text: Some(text),
        passed: true,
    })
}

fn cmd_chartab(spec: &str, oracle: bool, cap: usize) -> Result<Report, CliError> {
    let (parsed, g) = build(spec, cap)?;
    let degree = match (&parsed, oracle) {
        (GroupSpec::Symmetric(n), _) => Some(*n),
        (_, true) => {
            return Err(CliError::Usage(
                "--oracle needs a group of the form Sym(n)".into(),
            ));
        }
        _ => None,
    };
    let t = ClassTable::new(&g);
    let ct = character_table(&g, &t)?;
    let orth = verify_orthogonality(&ct);
    let names: Vec<String> = (0..t.len()).map(|c| t.class_name(c)).collect();
    let mut out = header(
        "chartab",
        json!({ "spec": parsed.to_string(), "oracle": oracle }),
    );
    out.insert("order".into(), json!(g.order()));
    out.insert("prime".into(), json!(ct.modular.as_ref().map(|m| m.prime)));
    out.insert(
        "classes".into(),
        json!((0..t.len())
            .map(|c| json!({ "name": names[c], "element_order": ct.class_orders[c], "size": ct.class_sizes[c] }))
            .collect::<Vec<_>>()),
    );
    let rows: Vec<Vec<String>> = ct
        .rows
        .iter()
        .map(|r| r.values.iter().map(ToString::to_string).collect())
        .collect();
    out.insert(
        "characters".into(),
        json!(ct
            .rows
            .iter()
            .zip(&rows)
            .map(|(r, v)| json!({ "degree": r.degree, "values": v }))
            .collect::<Vec<_>>()),
    );
    out.insert(
        "orthogonality".into(),
        json!({
            "passed": orth.passed(),
            "row_pairs": orth.row_pairs_checked,
            "column_pairs": orth.column_pairs_checked,
        }),
    );
    let mut passed = orth.passed();
    let mut oracle_line = String::new();
    if oracle {
        let n = degree.expect("checked above");
        let diff = compare_with_oracle(&ct, &g, &t, n)?;
        passed &= diff.is_empty();
        out.insert(
            "oracle".into(),
            json!({
                "n": n,
                "matches": diff.is_empty(),
                "rows_only_in_dixon": diff.only_in_computed.len(),
                "rows_only_in_oracle": diff.only_in_oracle.len(),
            }),
        );
        oracle_line = format!(
            "Murnaghan-Nakayama oracle: {}\n",
            if diff.is_empty() { "match" } else { "MISMATCH" }
        );
    }
    let mut head = vec!["".to_string()];
    head.extend(names.iter().cloned());
    let body: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut line = vec![format!("X.{}", i + 1)];
            line.extend(r.iter().cloned());
            line
        })
        .collect();
    let text = format!(
        "{parsed}: order {}\n{}orthogonality: {}\n{oracle_line}",
        g.order(),
        render::table(&head, &body),
        if orth.passed() { "pass" } else { "FAIL" }
    );
    Ok(Report {
        value: Value::Object(out),
        text: Some(text),
        passed,
    })
}

fn parse_selectors(texts: &[String]) -> Result<Vec<Selector>, CliError> {
    texts.iter().map(|s| Selector::parse(s)).collect()
}

fn cmd_count(spec: &str, selectors: &[String], cli: &Cli) -> Result<Report, CliError> {
    let sels = parse_selectors(selectors)?;
    let (parsed, g) = build(spec, cli.cap)?;
    let t = ClassTable::new(&g);
    let ct = character_table(&g, &t)?;
    let mut results = Vec::new();
    let mut passed = true;
    for ids in expand(&sels, &t)? {
        let tuple = ClassTuple::new(ids.clone());
        let formula = frobenius_count(&ct, &tuple)?;
        let brute = enumerate_solutions(&g, &t, &tuple, cli.scan_cap)?.len() as u128;
        passed &= formula == brute;
        let mut entry = json!({
            "classes": ids.iter().map(|&c| t.class_name(c)).collect::<Vec<_>>(),
            "frobenius_count": formula.to_string(),
            "brute_force_count": brute.to_string(),
        });
        if let [x, y, z] = ids[..] {
            entry["class_algebra_constant"] =
                json!(class_algebra_constant(&ct, x, y, z)?.to_string());
        }
        results.push(entry);
    }
    let mut out = header(
        "count",
        json!({ "spec": parsed.to_string(), "selectors": selectors }),
    );
    out.insert("order".into(), json!(g.order()));
    out.insert("tuples".into(), json!(results));
    out.insert("agree".into(), json!(passed));
    Ok(Report {
        value: Value::Object(out),
        text: None,
        passed,
    })
}

pub fn verdict_json(v: &RigidityVerdict) -> Value {
    match v {
        RigidityVerdict::Empty => json!({ "kind": "empty" }),
        RigidityVerdict::Rigid { stabilizer_order } => {
            json!({ "kind": "rigid", "stabilizer_order": stabilizer_order })
        }
        RigidityVerdict::NotRigid { orbits } => json!({ "kind": "not-rigid", "orbits": orbits }),
    }
}

fn elements(g: &FiniteGroup, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| g.element(x).to_string()).collect()
}

fn analysis_json(g: &FiniteGroup, t: &ClassTable, a: &TupleAnalysis) -> Value {
    json!({
        "classes": a.tuple.ids().iter().map(|&c| t.class_name(c)).collect::<Vec<_>>(),
        "class_sizes": a.tuple.ids().iter().map(|&c| t.class(c).size()).collect::<Vec<_>>(),
        "frobenius_count": a.frobenius_count.to_string(),
        "solutions": a.decomposition.total,
        "verdict": verdict_json(&a.verdict),
        "orbits": a.decomposition.orbits.iter().map(|o| json!({
            "size": o.size,
            "stabilizer_order": o.stabilizer_order,
            "representative": elements(g, &o.representative),
        })).collect::<Vec<_>>(),
    })
}

fn census_json(g: &FiniteGroup, t: &ClassTable, c: &Census) -> Value {
    json!({
        "orders": c.orders,
        "per_tuple": c.per_tuple.iter().map(|(tuple, n)| json!({
            "classes": tuple.ids().iter().map(|&k| t.class_name(k)).collect::<Vec<_>>(),
            "solutions": n,
        })).collect::<Vec<_>>(),
        "total": c.total,
        "orbits": c.orbits.iter().map(|o| json!({
            "size": o.orbit.size,
            "stabilizer_order": o.orbit.stabilizer_order,
            "representative": elements(g, &o.orbit.representative),
            "generated_order": o.generated.order,
        })).collect::<Vec<_>>(),
    })
}

fn cmd_triples(spec: &str, orders: [u64; 3], cli: &Cli) -> Result<Report, CliError> {
    let (parsed, g) = build(spec, cli.cap)?;
    let t = ClassTable::new(&g);
    let census = abc_census(&g, &t, orders[0], orders[1], orders[2], cli.scan_cap)?;
    let mut out = header(
        "triples",
        json!({ "spec": parsed.to_string(), "orders": orders }),
    );
    out.insert("order".into(), json!(g.order()));
    out.insert("census".into(), census_json(&g, &t, &census));
    Ok(Report::ok(Value::Object(out)))
}

fn cmd_rigid(spec: &str, selectors: &[String], cli: &Cli) -> Result<Report, CliError> {
    let sels = parse_selectors(selectors)?;
    let (parsed, g) = build(spec, cli.cap)?;
    let t = ClassTable::new(&g);
    let ct = character_table(&g, &t)?;
    let analyses = expand(&sels, &t)?
        .into_iter()
        .map(|ids| analyze_tuple(&g, &t, &ct, &ClassTuple::new(ids), cli.scan_cap))
        .collect::<Result<Vec<_>, _>>()?;
    let mut out = header(
        "rigid",
        json!({ "spec": parsed.to_string(), "selectors": selectors }),
    );
    out.insert("order".into(), json!(g.order()));
    out.insert(
        "tuples".into(),
        json!(analyses
            .iter()
            .map(|a| analysis_json(&g, &t, a))
            .collect::<Vec<_>>()),
    );
    if let [Selector::Order(a), Selector::Order(b), Selector::Order(c)] = sels[..] {
        let census = abc_census(&g, &t, a, b, c, cli.scan_cap)?;
        out.insert("census".into(), census_json(&g, &t, &census));
    }
    Ok(Report::ok(Value::Object(out)))
}

fn cmd_paper_audit(section: Option<u8>, ledger: Option<&str>) -> Result<Report, CliError> {
    if let Some(s) = section {
        if !audit::SECTIONS.iter().any(|(id, _)| *id == s) {
            return Err(CliError::Usage(format!(
                "no audit section {s}; expected 1-6"
            )));
        }
    }
    let (ledger, source) = match ledger {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io {
                path: path.to_string(),
                msg: e.to_string(),
            })?;
            (PaperLedger::parse(&text)?, path.to_string())
        }
        None => (PaperLedger::cited(), "cited".to_string()),
    };
    let report = audit::run(&audit::AuditOptions {
        section,
        ledger,
        ledger_source: source,
    });
    Ok(Report {
        value: serde_json::to_value(&report).expect("serializable"),
        text: Some(audit::render_text(&report)),
        passed: report.passed(),
    })
}

fn cmd_oracle(n: usize) -> Result<Report, CliError> {
    let ct = murnaghan_nakayama(n)?;
    let mut out = header("oracle", json!({ "n": n }));
    out.insert(
        "classes".into(),
        json!((0..ct.num_classes())
            .map(|c| json!({ "cycle_type": ct.class_labels[c], "element_order": ct.class_orders[c], "size": ct.class_sizes[c] }))
            .collect::<Vec<_>>()),
    );
    out.insert(
        "characters".into(),
        json!(ct
            .rows
            .iter()
            .map(|r| json!({
                "degree": r.degree,
                "values": r.values.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>()),
    );
    Ok(Report::ok(Value::Object(out)))
}
