//! The reproduction audit: every finite computation behind the rigidity
//! argument, plus the cited symbolic ledger, as a list of pass/fail checks.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Map, Value};

use rigid_core::chartab::{
    character_table, compare_with_oracle, verify_orthogonality, CharacterTable,
};
use rigid_core::counting::{
    abc_census, analyze_tuple, class_algebra_constant, enumerate_solutions, frobenius_count,
    ClassTuple, RigidityVerdict, DEFAULT_SCAN_CAP,
};
use rigid_core::qsymbolic::{
    dimension_criterion, g2_class_dimensions, lang_splitting_data, normalized_solution_count,
    orbit_mass, PaperLedger, G2_DIMENSION, LEDGER_CITATION,
};
use rigid_core::{parse_group_spec, so3_enumerate, ClassTable, FiniteGroup, Result, DEFAULT_CAP};

pub const SECTIONS: [(u8, &str); 6] = [
    (1, "Sym(5) (2,4,5) census"),
    (2, "SO3(5) as a finite shadow of Sym(5)"),
    (3, "Frobenius formula against brute force"),
    (4, "Dixon-Schneider against Murnaghan-Nakayama"),
    (5, "symbolic ledger identities"),
    (6, "negative controls"),
];

pub const DIMENSION_CITATION: &str =
    "cited: centralizers in G2 of t, s1, u are A1A1~ (dim 6), A1T' (dim 4), U4.Sym3 (dim 4)";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Computed,
    PaperSourced,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub section: u8,
    pub name: String,
    pub status: Status,
    pub values: Value,
    pub provenance: Provenance,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub citation: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SectionSummary {
    pub id: u8,
    pub title: &'static str,
    pub status: Status,
}

#[derive(Clone, Debug, Serialize)]
pub struct AuditReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub input: Value,
    pub sections: Vec<SectionSummary>,
    pub checks: Vec<Check>,
    pub overall: Status,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }
}

pub struct AuditOptions {
    pub section: Option<u8>,
    pub ledger: PaperLedger,
    pub ledger_source: String,
}

struct Recorder {
    section: u8,
    checks: Vec<Check>,
}

impl Recorder {
    fn computed(&mut self, name: &str, ok: bool, values: Value) {
        self.push(name, ok, values, Provenance::Computed, None);
    }

    fn cited(&mut self, name: &str, ok: bool, values: Value, citation: &str) {
        self.push(name, ok, values, Provenance::PaperSourced, Some(citation));
    }

    fn push(
        &mut self,
        name: &str,
        ok: bool,
        values: Value,
        provenance: Provenance,
        citation: Option<&str>,
    ) {
        self.checks.push(Check {
            section: self.section,
            name: name.to_string(),
            status: Status::of(ok),
            values,
            provenance,
            citation: citation.map(str::to_string),
        });
    }

    /// Records an engine error as a failed check.
    fn guard(&mut self, name: &str, result: Result<()>) {
        if let Err(e) = result {
            self.computed(name, false, json!({ "error": e.to_string() }));
        }
    }
}

struct Analyzed {
    group: FiniteGroup,
    table: ClassTable,
    chars: CharacterTable,
}

fn analyze(spec: &str) -> Result<Analyzed> {
    let group = parse_group_spec(spec)?.build(DEFAULT_CAP)?;
    analyze_group(group)
}

fn analyze_group(group: FiniteGroup) -> Result<Analyzed> {
    let table = ClassTable::new(&group);
    let chars = character_table(&group, &table)?;
    Ok(Analyzed {
        group,
        table,
        chars,
    })
}

fn census_checks(rec: &mut Recorder, a: &Analyzed, expected_order: usize) -> Result<()> {
    let census = abc_census(&a.group, &a.table, 2, 4, 5, DEFAULT_SCAN_CAP)?;
    rec.computed(
        "census-total",
        census.total == 120,
        json!({ "orders": census.orders, "total": census.total, "expected": 120 }),
    );
    let orbits = census.orbits.len();
    rec.computed(
        "single-orbit",
        orbits == 1,
        json!({ "orbits": orbits, "expected": 1 }),
    );
    let stabilizers: Vec<usize> = census
        .orbits
        .iter()
        .map(|o| o.orbit.stabilizer_order)
        .collect();
    rec.computed(
        "trivial-stabilizer",
        stabilizers == [1],
        json!({ "stabilizer_orders": stabilizers }),
    );
    let generated: Vec<usize> = census.orbits.iter().map(|o| o.generated.order).collect();
    rec.computed(
        "generates-group",
        !generated.is_empty() && generated.iter().all(|&o| o == expected_order),
        json!({ "generated_orders": generated, "expected": expected_order }),
    );
    Ok(())
}

fn section_census(rec: &mut Recorder) {
    let result = analyze("Sym(5)").and_then(|a| census_checks(rec, &a, 120));
    rec.guard("sym5-census", result);
}

fn section_so3(rec: &mut Recorder) {
    let result = (|| {
        let so3 = so3_enumerate(5)?;
        rec.computed(
            "order",
            so3.order() == 120,
            json!({ "order": so3.order(), "expected": 120 }),
        );
        let derived = so3.derived_subgroup().len();
        rec.computed(
            "derived-subgroup",
            derived == 60,
            json!({ "order": derived, "expected": 60 }),
        );
        let sym5 = parse_group_spec("Sym(5)")?.build(DEFAULT_CAP)?;
        let (f, g) = (so3.fingerprint(), sym5.fingerprint());
        rec.computed(
            "fingerprint-matches-sym5",
            f == g,
            json!({
                "class_sizes": f.class_sizes,
                "order_profile": f.order_profile,
                "sym5_class_sizes": g.class_sizes,
                "sym5_order_profile": g.order_profile,
            }),
        );
        let a = analyze_group(so3)?;
        let fives: Vec<usize> = a
            .table
            .classes_of_element_order(5)
            .iter()
            .map(|&c| a.table.class(c).size())
            .collect();
        rec.computed(
            "unique-order-5-class",
            fives == [24],
            json!({ "order_5_class_sizes": fives, "expected": [24] }),
        );
        census_checks(rec, &a, 120)
    })();
    rec.guard("so3-5", result);
}

fn frobenius_vs_brute(a: &Analyzed) -> Result<Value> {
    let r = a.table.len();
    let mut triples = 0u64;
    let mut mismatches = Vec::new();
    for x in 0..r {
        for y in 0..r {
            for z in 0..r {
                let tuple = ClassTuple::new(vec![x, y, z]);
                let formula = frobenius_count(&a.chars, &tuple)?;
                let brute = enumerate_solutions(&a.group, &a.table, &tuple, DEFAULT_SCAN_CAP)?.len()
                    as u128;
                let constant = class_algebra_constant(&a.chars, x, y, z)?;
                let size = a.table.class(z).size() as u128;
                triples += 1;
                if formula != brute || formula != size * constant {
                    mismatches.push(json!({
                        "classes": [x, y, z],
                        "frobenius": formula.to_string(),
                        "brute_force": brute.to_string(),
                        "class_algebra_constant": constant.to_string(),
                    }));
                }
            }
        }
    }
    Ok(json!({ "triples": triples, "mismatches": mismatches }))
}

fn section_frobenius(rec: &mut Recorder) {
    for spec in ["Sym(3)", "Sym(4)", "Sym(5)", "Alt(4)", "Alt(5)"] {
        let name = format!("frobenius-equals-brute-force {spec}");
        match analyze(spec).and_then(|a| frobenius_vs_brute(&a)) {
            Ok(values) => {
                let ok = values["mismatches"].as_array().is_some_and(Vec::is_empty);
                rec.computed(&name, ok, values);
            }
            Err(e) => rec.computed(&name, false, json!({ "error": e.to_string() })),
        }
    }
}

fn section_oracle(rec: &mut Recorder) {
    let result = (|| {
        let a = analyze("Sym(5)")?;
        let report = verify_orthogonality(&a.chars);
        let squares: u64 = a.chars.degrees().iter().map(|d| d * d).sum();
        rec.computed(
            "orthogonality",
            report.passed() && squares == 120,
            json!({
                "row_pairs": report.row_pairs_checked,
                "column_pairs": report.column_pairs_checked,
                "degrees": a.chars.degrees(),
                "sum_of_squared_degrees": squares,
            }),
        );
        let diff = compare_with_oracle(&a.chars, &a.group, &a.table, 5)?;
        rec.computed(
            "matches-murnaghan-nakayama",
            diff.is_empty(),
            json!({
                "rows_only_in_dixon": diff.only_in_computed.len(),
                "rows_only_in_oracle": diff.only_in_oracle.len(),
            }),
        );
        Ok(())
    })();
    rec.guard("sym5-oracle", result);
}

fn rational(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn section_symbolic(rec: &mut Recorder, ledger: &PaperLedger) {
    for (name, entries) in [("tuple-C", &ledger.tuple_c), ("tuple-D", &ledger.tuple_d)] {
        let terms: Vec<String> = entries
            .iter()
            .map(|e| format!("{}: ({}) / ({})", e.label, e.a_value, e.centralizer_order))
            .collect();
        match normalized_solution_count(entries) {
            Ok(f) => {
                let at: Map<String, Value> = [5i64, 25, 125]
                    .iter()
                    .map(|&q| {
                        let v = f
                            .evaluate_int(q)
                            .map_or_else(|e| e.to_string(), |v| v.to_string());
                        (format!("q={q}"), Value::String(v))
                    })
                    .collect();
                rec.cited(
                    &format!("{name} normalized count is 1"),
                    f.is_constant(&rational(1)),
                    json!({ "terms": terms, "sum": f.to_string(), "specializations": at }),
                    LEDGER_CITATION,
                );
            }
            Err(e) => rec.cited(
                &format!("{name} normalized count is 1"),
                false,
                json!({ "terms": terms, "error": e.to_string() }),
                LEDGER_CITATION,
            ),
        }
    }
    for (stabs, expected) in [(&[6u64, 3, 2][..], 1), (&[6, 3, 2, 2, 2][..], 2)] {
        let mass = orbit_mass(stabs);
        rec.computed(
            &format!("orbit-mass {stabs:?}"),
            mass == rational(expected),
            json!({ "stabilizer_orders": stabs, "mass": mass.to_string(), "expected": expected }),
        );
    }
    match parse_group_spec("Sym(3)").and_then(|s| s.build(DEFAULT_CAP)) {
        Ok(sym3) => {
            let data = lang_splitting_data(&sym3);
            rec.computed(
                "sym3-splitting-data",
                data == [6, 3, 2],
                json!({ "centralizer_orders": data, "expected": [6, 3, 2] }),
            );
            let coeffs: Vec<String> = ledger
                .tuple_c
                .iter()
                .map(|e| e.centralizer_order.coefficient(4).to_string())
                .collect();
            let data_text: Vec<String> = data.iter().map(usize::to_string).collect();
            rec.cited(
                "splitting-data-matches-centralizers",
                coeffs == data_text,
                json!({ "q4_coefficients": coeffs, "sym3_centralizer_orders": data }),
                LEDGER_CITATION,
            );
        }
        Err(e) => rec.computed(
            "sym3-splitting-data",
            false,
            json!({ "error": e.to_string() }),
        ),
    }
    let dims = g2_class_dimensions();
    let class_dims: Vec<u64> = dims.iter().map(|d| d.class_dimension).collect();
    let check = dimension_criterion(&class_dims, G2_DIMENSION);
    let labelled: Map<String, Value> = dims
        .iter()
        .map(|d| (d.label.to_string(), json!(d.class_dimension)))
        .collect();
    rec.cited(
        "dimension-criterion",
        check.satisfied && check.equality && check.sum == 28,
        json!({
            "class_dimensions": labelled,
            "sum": check.sum,
            "two_dim_g": 2 * G2_DIMENSION,
            "equality": check.equality,
        }),
        DIMENSION_CITATION,
    );
}

fn section_controls(rec: &mut Recorder) {
    let result = (|| {
        let alt4 = analyze("Alt(4)")?;
        let twos = alt4.table.classes_of_element_order(2);
        let tuple = ClassTuple::new(vec![twos[0]; 3]);
        let a = analyze_tuple(
            &alt4.group,
            &alt4.table,
            &alt4.chars,
            &tuple,
            DEFAULT_SCAN_CAP,
        )?;
        let sizes: Vec<usize> = a.decomposition.orbits.iter().map(|o| o.size).collect();
        let stabs: Vec<usize> = a
            .decomposition
            .orbits
            .iter()
            .map(|o| o.stabilizer_order)
            .collect();
        rec.computed(
            "alt4-222-not-rigid",
            a.verdict == RigidityVerdict::NotRigid { orbits: 2 }
                && sizes == [3, 3]
                && stabs == [4, 4],
            json!({
                "verdict": crate::verdict_json(&a.verdict),
                "orbit_sizes": sizes,
                "stabilizer_orders": stabs,
            }),
        );
        let sym5 = analyze("Sym(5)")?;
        let find = |order: u64, size: usize| {
            sym5.table
                .classes()
                .iter()
                .find(|c| c.element_order == order && c.size() == size)
                .map(|c| c.id)
        };
        let (Some(x), Some(y), Some(z)) = (find(2, 15), find(4, 30), find(5, 24)) else {
            rec.computed(
                "sym5-2B4A5A-empty",
                false,
                json!({ "error": "classes not found" }),
            );
            return Ok(());
        };
        let tuple = ClassTuple::new(vec![x, y, z]);
        let a = analyze_tuple(
            &sym5.group,
            &sym5.table,
            &sym5.chars,
            &tuple,
            DEFAULT_SCAN_CAP,
        )?;
        let brute = enumerate_solutions(&sym5.group, &sym5.table, &tuple, DEFAULT_SCAN_CAP)?.len();
        rec.computed(
            "sym5-2B4A5A-empty",
            a.verdict == RigidityVerdict::Empty && a.frobenius_count == 0 && brute == 0,
            json!({
                "classes": [sym5.table.class_name(x), sym5.table.class_name(y), sym5.table.class_name(z)],
                "verdict": crate::verdict_json(&a.verdict),
                "frobenius_count": a.frobenius_count.to_string(),
                "brute_force_count": brute,
            }),
        );
        Ok(())
    })();
    rec.guard("negative-controls", result);
}

pub fn run(options: &AuditOptions) -> AuditReport {
    let mut checks = Vec::new();
    let mut sections = Vec::new();
    for (id, title) in SECTIONS {
        if options.section.is_some_and(|s| s != id) {
            continue;
        }
        let mut rec = Recorder {
            section: id,
            checks: Vec::new(),
        };
        match id {
            1 => section_census(&mut rec),
            2 => section_so3(&mut rec),
            3 => section_frobenius(&mut rec),
            4 => section_oracle(&mut rec),
            5 => section_symbolic(&mut rec, &options.ledger),
            _ => section_controls(&mut rec),
        }
        let ok = !rec.checks.is_empty() && rec.checks.iter().all(|c| c.status == Status::Pass);
        sections.push(SectionSummary {
            id,
            title,
            status: Status::of(ok),
        });
        checks.extend(rec.checks);
    }
    let overall = Status::of(sections.iter().all(|s| s.status == Status::Pass));
    AuditReport {
        tool: "rigid",
        version: env!("CARGO_PKG_VERSION"),
        input: json!({
            "sections": sections.iter().map(|s| s.id).collect::<Vec<_>>(),
            "ledger": options.ledger_source,
        }),
        sections,
        checks,
        overall,
    }
}

/// One line per check, then the verdict.
pub fn render_text(report: &AuditReport) -> String {
    let mut out = format!("{} {} paper-audit\n", report.tool, report.version);
    for s in &report.sections {
        out.push_str(&format!(
            "\n== section {}: {} [{}]\n",
            s.id,
            s.title,
            status_word(s.status)
        ));
        for c in report.checks.iter().filter(|c| c.section == s.id) {
            let tag = match c.provenance {
                Provenance::Computed => "computed",
                Provenance::PaperSourced => "paper-sourced",
            };
            out.push_str(&format!(
                "  [{}] {} ({tag})\n",
                status_word(c.status),
                c.name
            ));
            for line in crate::render::text(&c.values).lines() {
                out.push_str(&format!("        {line}\n"));
            }
            if let Some(cite) = &c.citation {
                out.push_str(&format!("        citation: {cite}\n"));
            }
        }
    }
    out.push_str(&format!("\noverall: {}\n", status_word(report.overall)));
    out
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
    }
}
