//! Command-line plumbing: the JSON documents, corpus files, and the
//! human-readable renderings used by the `submax` binary.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{verify_against, Report, Tier, Verdict};
use crate::error::{Error, Result};
use crate::oracle::{classify, descriptor_serde, AutAction, CaseKey, ClassifyResult, Regime, SubmaxRecord};
use crate::pi_arith::{Family, FamilyKey, PrimeSet};
use crate::structid::StructureDescriptor;

/// Version of every JSON document written or read.
pub const SCHEMA: u32 = 1;

/// Builds a case from command-line style inputs. `q` may be omitted for
/// `l3-3`. Errors name the violated family condition.
pub fn parse_case(family: &str, q: Option<u64>, pi: &str) -> Result<CaseKey> {
    let family: Family = family.parse()?;
    let q = match (family, q) {
        (Family::L3Three, None) => 3,
        (_, Some(q)) => q,
        (_, None) => return Err(Error::InvalidInput(format!("--q is required for family {family}"))),
    };
    let key = FamilyKey::new(family, q)?;
    let pi: PrimeSet = pi.parse()?;
    Ok(CaseKey::new(key, pi))
}

/// The `classify` JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassifyDoc {
    pub schema: u32,
    pub family: Family,
    pub q: u64,
    pub pi: PrimeSet,
    pub regime: Regime,
    pub records: Vec<SubmaxRecord>,
}

impl ClassifyDoc {
    pub fn new(case: &CaseKey, result: &ClassifyResult) -> ClassifyDoc {
        ClassifyDoc {
            schema: SCHEMA,
            family: case.key.family,
            q: case.key.q,
            pi: case.pi.clone(),
            regime: result.regime,
            records: result.records.clone(),
        }
    }
}

/// One verified class in a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    #[serde(with = "descriptor_serde")]
    pub descriptor: StructureDescriptor,
    pub order: u64,
    pub class_size: u64,
    pub orbit: usize,
    pub pi_maximal: bool,
    pub pronormal: Option<bool>,
    pub intravariant: bool,
    pub wh_index: u64,
    /// Generators of a representative, each as its list of point images.
    pub generators: Vec<Vec<usize>>,
}

/// The `verify` / `corpus` JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDoc {
    pub schema: u32,
    pub family: Family,
    pub q: u64,
    pub pi: PrimeSet,
    pub regime: Regime,
    pub records: Vec<SubmaxRecord>,
    pub tier: Tier,
    pub verdict: String,
    pub details: Vec<String>,
    pub classes: Vec<ClassDoc>,
}

impl ReportDoc {
    pub fn new(r: &Report) -> ReportDoc {
        ReportDoc {
            schema: SCHEMA,
            family: r.case.key.family,
            q: r.case.key.q,
            pi: r.case.pi.clone(),
            regime: r.oracle.regime,
            records: r.oracle.records.clone(),
            tier: r.tier,
            verdict: r.verdict.label().to_string(),
            details: r.verdict.details(),
            classes: r
                .classes
                .iter()
                .map(|c| ClassDoc {
                    descriptor: c.descriptor.clone(),
                    order: c.order,
                    class_size: c.class_size,
                    orbit: c.orbit,
                    pi_maximal: c.pi_maximal,
                    pronormal: c.pronormal,
                    intravariant: c.intravariant,
                    wh_index: c.wh_index,
                    generators: c.generators.iter().map(|g| g.to_vec()).collect(),
                })
                .collect(),
        }
    }
}

pub fn to_json<T: Serialize>(doc: &T) -> String {
    serde_json::to_string(doc).expect("documents serialize")
}

/// A corpus document: `{"schema":1,"cases":[…]}`.
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusFile {
    pub schema: u32,
    pub cases: Vec<CorpusCase>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCase {
    family: Family,
    q: u64,
    pi: PrimeSet,
    #[serde(default = "default_tier")]
    tier: Tier,
    #[serde(default)]
    expected: Option<Vec<SubmaxRecord>>,
}

fn default_tier() -> Tier {
    Tier::Full
}

/// One corpus entry. `expected`, when given, replaces the classification
/// as the expectation the engine is checked against.
#[derive(Debug, Clone, Deserialize)]
#[serde(try_from = "RawCase")]
pub struct CorpusCase {
    pub case: CaseKey,
    pub tier: Tier,
    pub expected: Option<Vec<SubmaxRecord>>,
}

impl TryFrom<RawCase> for CorpusCase {
    type Error = String;
    fn try_from(raw: RawCase) -> std::result::Result<CorpusCase, String> {
        let key = FamilyKey::new(raw.family, raw.q).map_err(|e| format!("field `q`: {e}"))?;
        Ok(CorpusCase {
            case: CaseKey::new(key, raw.pi),
            tier: raw.tier,
            expected: raw.expected,
        })
    }
}

/// Parses a corpus document; errors carry line and column, or the field.
pub fn parse_corpus(text: &str) -> std::result::Result<CorpusFile, String> {
    let file: CorpusFile = serde_json::from_str(text).map_err(|e| e.to_string())?;
    if file.schema != SCHEMA {
        return Err(format!("field `schema`: unsupported version {}, expected {SCHEMA}", file.schema));
    }
    Ok(file)
}

/// Runs every case on the current rayon pool; results are in corpus order.
pub fn run_corpus(file: &CorpusFile, budget: u64) -> Vec<Report> {
    file.cases
        .par_iter()
        .map(|c| {
            let mut oracle = classify(&c.case).expect("validated case");
            if let Some(expected) = &c.expected {
                oracle.records = expected.clone();
            }
            match verify_against(&c.case, c.tier, budget, oracle.clone()) {
                Ok(r) => r,
                Err(e) => Report {
                    case: c.case.clone(),
                    tier: c.tier,
                    oracle,
                    classes: Vec::new(),
                    verdict: Verdict::Inconclusive(format!("engine error: {e}")),
                    elapsed_ms: 0,
                },
            }
        })
        .collect()
}

fn regime_text(r: Regime) -> &'static str {
    match r {
        Regime::EmptyPi => "EMPTY_PI",
        Regime::SinglePrime => "SINGLE_PRIME",
        Regime::Full => "FULL",
        Regime::Table => "TABLE",
    }
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Human-readable classification table.
pub fn render_classify(case: &CaseKey, res: &ClassifyResult) -> String {
    let mut out = String::new();
    writeln!(out, "{case}").unwrap();
    writeln!(out, "regime: {}", regime_text(res.regime)).unwrap();
    writeln!(
        out,
        "{:<8} {:<16} {:>8} {:>4} {:<15} {:<6} {:<12} {:<6}",
        "source", "subgroup", "order", "ncc", "Aut(S)", "π-max", "container", "intrav"
    )
    .unwrap();
    for r in &res.records {
        let source = if r.table == 0 {
            format!("deg.{}", r.row)
        } else {
            format!("T{}.{}", r.table, r.row)
        };
        let action = match r.aut_action {
            AutAction::Invariant => "invariant",
            AutAction::FusedByOuter => "fused by outer",
        };
        let container = r.container.as_ref().map_or("-".to_string(), |c| c.to_string());
        writeln!(
            out,
            "{:<8} {:<16} {:>8} {:>4} {:<15} {:<6} {:<12} {:<6}",
            source,
            r.descriptor.to_string(),
            r.order,
            r.ncc,
            action,
            flag(r.pi_maximal),
            container,
            flag(r.intravariant)
        )
        .unwrap();
        if let Some(note) = &r.note {
            writeln!(out, "         note: {note}").unwrap();
        }
    }
    out
}

/// Human-readable verification report.
pub fn render_report(r: &Report) -> String {
    let mut out = String::new();
    writeln!(out, "{} [{} tier]: {}", r.case, r.tier, r.verdict.label()).unwrap();
    writeln!(
        out,
        "  {:<16} {:>8} {:>10} {:>5} {:<6} {:<9} {:<6} {:>6}",
        "subgroup", "order", "class size", "orbit", "π-max", "pronormal", "intrav", "|N:H|"
    )
    .unwrap();
    for c in &r.classes {
        let pron = match c.pronormal {
            Some(b) => flag(b),
            None => "-",
        };
        writeln!(
            out,
            "  {:<16} {:>8} {:>10} {:>5} {:<6} {:<9} {:<6} {:>6}",
            c.descriptor.to_string(),
            c.order,
            c.class_size,
            c.orbit,
            flag(c.pi_maximal),
            pron,
            flag(c.intravariant),
            c.wh_index
        )
        .unwrap();
    }
    for d in r.verdict.details() {
        writeln!(out, "  - {d}").unwrap();
    }
    out
}

/// Exit code for a verdict: 0 match, 1 mismatch, 3 inconclusive.
pub fn exit_code(v: &Verdict) -> i32 {
    match v {
        Verdict::Match => 0,
        Verdict::Mismatch(_) => 1,
        Verdict::Inconclusive(_) => 3,
    }
}
