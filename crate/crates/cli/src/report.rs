//! Serializable records for every command. Field order is fixed by the
//! struct definitions, so identical inputs give byte-identical JSON.

use serde::Serialize;
use serde_json::Value;

use whiteman_core::codegen::{ClassificationReport, Construction, CyclicCode, DiscrepancyReport};
use whiteman_core::distance::{self, BudgetUsed, DistanceResult, Witness};
use whiteman_core::poly::to_comma;
use whiteman_core::verify::Check;
use whiteman_core::{Label, OmegaTriple, WhitemanSystem};

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassSizes {
    pub r: usize,
    pub n1: usize,
    pub n2: usize,
    pub d: [usize; 6],
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassLists {
    pub n1: Vec<usize>,
    pub n2: Vec<usize>,
    pub d: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SystemRecord {
    pub n1: u64,
    pub n2: u64,
    pub n: u64,
    pub g: u64,
    pub x: u64,
    pub e: u64,
    pub class_sizes: ClassSizes,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<ClassLists>,
}

impl SystemRecord {
    pub fn new(sys: &WhitemanSystem, full: bool) -> Self {
        let p = sys.params();
        let count = |l: Label| sys.membership().iter().filter(|&&x| x == l).count();
        SystemRecord {
            n1: p.n1(),
            n2: p.n2(),
            n: p.n(),
            g: sys.g(),
            x: sys.x(),
            e: p.e(),
            class_sizes: ClassSizes {
                r: count(Label::R),
                n1: count(Label::N1),
                n2: count(Label::N2),
                d: std::array::from_fn(|j| count(Label::D(j as u8))),
            },
            classes: full.then(|| ClassLists {
                n1: sys.n1_set().to_vec(),
                n2: sys.n2_set().to_vec(),
                d: (0..6).map(|j| sys.class(j).to_vec()).collect(),
            }),
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct OmegaRecord {
    pub omega1: u32,
    pub omega2: u32,
    pub omega: u32,
}

impl From<OmegaTriple> for OmegaRecord {
    fn from(o: OmegaTriple) -> Self {
        OmegaRecord {
            omega1: o.omega1,
            omega2: o.omega2,
            omega: o.omega,
        }
    }
}

/// `S(beta)`, `T(beta)`, `M(beta)` as coefficient vectors over the prime
/// field, lowest degree first.
#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ValuesRecord {
    pub s: Vec<u32>,
    pub t: Vec<u32>,
    pub m: Vec<u32>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl From<&Check> for CheckRecord {
    fn from(c: &Check) -> Self {
        CheckRecord {
            name: c.name.to_string(),
            passed: c.passed,
            cases: c.cases,
            detail: c.detail.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ClassifyRecord {
    pub system: SystemRecord,
    pub q: u64,
    pub m: u64,
    pub q_class: u8,
    pub omegas: OmegaRecord,
    pub values: ValuesRecord,
    pub memberships: [String; 3],
    pub branch: String,
    pub mst: [Option<u8>; 3],
    pub removed: Vec<u8>,
    pub lemma5: CheckRecord,
}

impl ClassifyRecord {
    pub fn new(
        con: &Construction,
        report: &ClassificationReport,
        lemma5: &Check,
        full: bool,
    ) -> Self {
        let v = |i: usize| report.values[i].coeffs().to_vec();
        ClassifyRecord {
            system: SystemRecord::new(con.system(), full),
            q: con.q(),
            m: con.m(),
            q_class: report.q_class,
            omegas: report.omegas.into(),
            values: ValuesRecord {
                s: v(0),
                t: v(1),
                m: v(2),
            },
            memberships: report.memberships.map(|m| m.to_string()),
            branch: report.branch.to_string(),
            mst: report.mst,
            removed: report.removed(),
            lemma5: lemma5.into(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DistanceSummary {
    pub kind: String,
    pub value: Option<u64>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CodeRecord {
    pub n: usize,
    pub q: u64,
    pub n1: u64,
    pub n2: u64,
    pub g: u64,
    pub x: u64,
    pub k: usize,
    pub gen: String,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<DistanceSummary>,
}

impl CodeRecord {
    pub fn new(con: &Construction, code: &CyclicCode, dist: Option<&DistanceResult>) -> Self {
        let p = con.params();
        CodeRecord {
            n: code.n,
            q: code.q,
            n1: p.n1(),
            n2: p.n2(),
            g: con.system().g(),
            x: con.system().x(),
            k: code.k,
            gen: to_comma(&code.gen),
            provenance: code.provenance.to_string(),
            distance: dist.map(|d| DistanceSummary {
                kind: d.kind.to_string(),
                value: d.value,
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CrossCheckRecord {
    pub agree: bool,
    pub branch: String,
    pub oracle_k: usize,
    pub closed_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_error: Option<String>,
    pub observed: String,
    pub predicted: String,
}

impl From<&DiscrepancyReport> for CrossCheckRecord {
    fn from(d: &DiscrepancyReport) -> Self {
        CrossCheckRecord {
            agree: d.agree,
            branch: d.report.branch.to_string(),
            oracle_k: d.oracle.k,
            closed_k: d.closed.as_ref().map(|c| c.k),
            closed_error: d.closed_error.as_ref().map(|e| e.to_string()),
            observed: d.observed.to_string(),
            predicted: d.predicted.to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct GenerateRecord {
    pub code: CodeRecord,
    pub closed_form: Option<CodeRecord>,
    pub cross_check: CrossCheckRecord,
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
pub struct BudgetRecord {
    pub codewords: u64,
    pub rank_tests: u64,
}

impl From<BudgetUsed> for BudgetRecord {
    fn from(b: BudgetUsed) -> Self {
        BudgetRecord {
            codewords: b.codewords,
            rank_tests: b.rank_tests,
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DistanceRecord {
    pub kind: String,
    pub value: Option<u64>,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Vec<Vec<usize>>>,
    pub budget_used: BudgetRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_weight_count: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl From<&DistanceResult> for DistanceRecord {
    fn from(d: &DistanceResult) -> Self {
        DistanceRecord {
            kind: d.kind.to_string(),
            value: d.value,
            method: d.method.to_string(),
            witnesses: (!d.witnesses.is_empty()).then(|| d.witnesses.clone()),
            budget_used: d.budget_used.into(),
            min_weight_count: d.min_weight_count,
            note: d.note.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct WitnessRecord {
    pub weight: u64,
    pub support: Vec<usize>,
    pub source: String,
}

impl From<&Witness> for WitnessRecord {
    fn from(w: &Witness) -> Self {
        WitnessRecord {
            weight: w.weight,
            support: w.support.clone(),
            source: w.source.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct DistanceReport {
    pub code: CodeRecord,
    pub result: DistanceRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<DistanceRecord>,
    pub upper_bound: Option<WitnessRecord>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct CheckReport {
    pub system: SystemRecord,
    pub q: u64,
    pub q_class: u8,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

/// Full enumeration when `q^k` fits the budget, support search otherwise.
pub fn best_distance(
    code: &CyclicCode,
    wmax: usize,
    enum_budget: u64,
    rank_cap: u64,
) -> DistanceResult {
    let size = u32::try_from(code.k)
        .ok()
        .and_then(|k| code.q.checked_pow(k));
    if size.is_some_and(|s| s <= enum_budget) {
        distance::exact_min_distance(code, enum_budget)
    } else {
        distance::min_weight_support_search(code, wmax, rank_cap)
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("records serialize")
}

/// Flattens a record into aligned `key  value` lines.
pub fn to_table<T: Serialize>(v: &T) -> String {
    let value = serde_json::to_value(v).expect("records serialize");
    let mut rows = Vec::new();
    flatten("", &value, &mut rows);
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in rows {
        out.push_str(&format!("{k:<width$}  {v}\n"));
    }
    out
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, v) in map {
                flatten(&join(k), v, out);
            }
        }
        Value::Array(items) if items.iter().any(|i| i.is_object()) => {
            for (i, v) in items.iter().enumerate() {
                flatten(&join(&i.to_string()), v, out);
            }
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push((prefix.to_string(), format!("[{}]", parts.join(","))));
        }
        _ => out.push((prefix.to_string(), scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn system_record_values() {
        let con = Construction::new(7, 13, 2).unwrap();
        let r = SystemRecord::new(con.system(), false);
        assert_eq!((r.g, r.x, r.e, r.n), (19, 40, 12, 91));
        assert_eq!(r.class_sizes.d, [12; 6]);
        assert_eq!(
            (r.class_sizes.n1, r.class_sizes.n2, r.class_sizes.r),
            (12, 6, 1)
        );
        assert!(r.classes.is_none());
        let full = SystemRecord::new(con.system(), true);
        assert_eq!(full.classes.unwrap().d.len(), 6);
    }

    #[test]
    fn table_flattens_nested() {
        #[derive(Serialize)]
        struct Inner {
            a: u8,
        }
        #[derive(Serialize)]
        struct Outer {
            name: &'static str,
            inner: Inner,
            list: Vec<u8>,
            none: Option<u8>,
        }
        let t = to_table(&Outer {
            name: "x",
            inner: Inner { a: 3 },
            list: vec![1, 2],
            none: None,
        });
        assert_eq!(t, "name     x\ninner.a  3\nlist     [1,2]\nnone     -\n");
    }
}
