//! Reproduction of the eleven worked examples against their reference
//! values. A row is `agree` when every reference value is reproduced,
//! `unverified` when some reference value is consistent with what could be
//! certified but not pinned down, and `discrepancy` otherwise.

use serde::Serialize;

use whiteman_core::codegen::{Construction, Constructor, CyclicCode, Provenance};
use whiteman_core::distance::{self, DistanceResult, Kind};
use whiteman_core::poly::{parse_comma, to_comma};
use whiteman_core::{Field, PolyRing, PrimeField};

use crate::config::InputError;
use crate::report::{best_distance, CheckRecord, DistanceRecord, OmegaRecord, WitnessRecord};

/// Reference generator listed for the first example.
pub const REFERENCE_GEN_7_13: &str = "1,1,1,1,1,1,1,0,0,0,0,0,0,1,1,1,1,1,1,1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    /// Generator from the gcd with the sequence polynomial.
    Sequence,
    Theorem(Constructor),
}

/// What an example states about its code.
#[derive(Debug, Clone, Copy, Default)]
pub struct Reference {
    pub k: Option<usize>,
    /// Minimum distance stated as the actual value.
    pub d: Option<u64>,
    /// Lower bound stated alongside it.
    pub bound: Option<u64>,
    pub omegas: Option<(u32, u32, u32)>,
    /// `S(beta), T(beta), M(beta)` as integers mod `q`.
    pub stm: Option<[i64; 3]>,
    pub gen: Option<&'static str>,
}

#[derive(Debug, Clone, Copy)]
pub struct Example {
    pub id: u8,
    pub n1: u64,
    pub n2: u64,
    pub q: u64,
    pub source: Source,
    pub reference: Reference,
}

pub fn examples() -> Vec<Example> {
    let seq = |id, n1, n2, q, reference| Example {
        id,
        n1,
        n2,
        q,
        source: Source::Sequence,
        reference,
    };
    let thm = |id, n1, n2, c, reference| Example {
        id,
        n1,
        n2,
        q: 2,
        source: Source::Theorem(c),
        reference,
    };
    let p = Reference::default;
    vec![
        seq(
            1,
            7,
            13,
            2,
            Reference {
                k: Some(72),
                d: Some(4),
                omegas: Some((0, 0, 0)),
                gen: Some(REFERENCE_GEN_7_13),
                ..p()
            },
        ),
        seq(
            2,
            13,
            7,
            2,
            Reference {
                k: Some(1),
                d: Some(91),
                omegas: Some((1, 1, 0)),
                ..p()
            },
        ),
        seq(
            3,
            13,
            19,
            2,
            Reference {
                k: Some(109),
                omegas: Some((1, 1, 0)),
                stm: Some([0, 0, 1]),
                ..p()
            },
        ),
        seq(
            4,
            19,
            13,
            2,
            Reference {
                k: Some(139),
                omegas: Some((0, 0, 0)),
                stm: Some([1, 1, 1]),
                ..p()
            },
        ),
        seq(
            5,
            31,
            19,
            3,
            Reference {
                k: Some(289),
                omegas: Some((0, 1, 0)),
                stm: Some([-1, -1, 0]),
                ..p()
            },
        ),
        seq(
            6,
            19,
            31,
            3,
            Reference {
                k: Some(301),
                omegas: Some((0, 1, 0)),
                stm: Some([0, 0, 0]),
                ..p()
            },
        ),
        thm(
            7,
            13,
            31,
            Constructor::T3 { i: 1 },
            Reference {
                k: Some(13),
                d: Some(31),
                ..p()
            },
        ),
        thm(
            8,
            13,
            31,
            Constructor::T4,
            Reference {
                k: Some(43),
                d: Some(13),
                ..p()
            },
        ),
        thm(
            9,
            13,
            19,
            Constructor::T5 { i: 1, j: 0 },
            Reference {
                k: Some(49),
                d: Some(19),
                bound: Some(5),
                ..p()
            },
        ),
        thm(
            10,
            13,
            19,
            Constructor::T6 { j: 1 },
            Reference {
                k: Some(67),
                d: Some(13),
                bound: Some(4),
                ..p()
            },
        ),
        thm(
            11,
            13,
            19,
            Constructor::T7 {
                i: 1,
                j: 0,
                h: 1,
                t: 2,
            },
            Reference {
                k: Some(49),
                d: Some(19),
                bound: Some(5),
                ..p()
            },
        ),
    ]
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq, PartialOrd, Ord)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Agree,
    Unverified,
    Discrepancy,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct Discrepancy {
    pub field: String,
    pub reference: String,
    pub computed: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct ExampleRow {
    pub example: u8,
    pub n1: u64,
    pub n2: u64,
    pub q: u64,
    pub n: usize,
    pub provenance: String,
    pub status: Status,
    pub k: usize,
    pub gen_degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omegas: Option<OmegaRecord>,
    pub distance: DistanceRecord,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theorem: Option<DistanceRecord>,
    pub upper_bound: Option<WitnessRecord>,
    pub discrepancies: Vec<Discrepancy>,
    pub unverified: Vec<String>,
    pub notes: Vec<String>,
    pub self_consistent: bool,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct SuiteReport {
    pub rows: Vec<ExampleRow>,
    pub agree: usize,
    pub unverified: usize,
    pub discrepancies: usize,
    pub self_consistent: bool,
}

impl SuiteReport {
    /// `0` when everything agrees, `2` for reference values the computation
    /// contradicts while every self-consistency check holds, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if !self.self_consistent {
            1
        } else if self.discrepancies > 0 {
            2
        } else {
            0
        }
    }

    pub fn table(&self) -> String {
        let mut out = format!(
            "{:<3} {:<13} {:<12} {:>5} {:<40} {:<22} {}\n",
            "ex", "(n1,n2,q)", "status", "k", "provenance", "distance", "differences"
        );
        for r in &self.rows {
            let d = match r.distance.value {
                Some(v) => format!("{} {v}", r.distance.kind),
                None => r.distance.kind.clone(),
            };
            let diffs: Vec<String> = r
                .discrepancies
                .iter()
                .map(|x| {
                    format!(
                        "{}: {} vs {}",
                        x.field,
                        abbreviate(&x.reference),
                        abbreviate(&x.computed)
                    )
                })
                .collect();
            let params = format!("({},{},{})", r.n1, r.n2, r.q);
            let status = match r.status {
                Status::Agree => "agree",
                Status::Unverified => "unverified",
                Status::Discrepancy => "discrepancy",
            };
            out.push_str(&format!(
                "{:<3} {:<13} {:<12} {:>5} {:<40} {:<22} {}\n",
                r.example,
                params,
                status,
                r.k,
                r.provenance,
                d,
                diffs.join("; ")
            ));
        }
        out.push_str(&format!(
            "agree {}, unverified {}, discrepancy {}, self-consistent {}\n",
            self.agree, self.unverified, self.discrepancies, self.self_consistent
        ));
        out
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteOptions {
    pub wmax: usize,
    pub enum_budget: u64,
    pub rank_cap: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            wmax: 4,
            enum_budget: distance::DEFAULT_ENUM_BUDGET,
            rank_cap: distance::DEFAULT_RANK_TEST_CAP,
        }
    }
}

/// Runs every example, one thread each; rows keep the input order.
pub fn run_suite(list: &[Example], opts: SuiteOptions) -> Result<SuiteReport, InputError> {
    let rows = std::thread::scope(|s| {
        let handles: Vec<_> = list
            .iter()
            .map(|ex| s.spawn(move || run_example(ex, opts)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("example thread panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let count = |st| rows.iter().filter(|r| r.status == st).count();
    Ok(SuiteReport {
        agree: count(Status::Agree),
        unverified: count(Status::Unverified),
        discrepancies: count(Status::Discrepancy),
        self_consistent: rows.iter().all(|r| r.self_consistent),
        rows,
    })
}

struct RowBuilder {
    discrepancies: Vec<Discrepancy>,
    unverified: Vec<String>,
    notes: Vec<String>,
    checks: Vec<CheckRecord>,
}

impl RowBuilder {
    fn differ(
        &mut self,
        field: &str,
        reference: impl ToString,
        computed: impl ToString,
        note: Option<String>,
    ) {
        self.discrepancies.push(Discrepancy {
            field: field.into(),
            reference: reference.to_string(),
            computed: computed.to_string(),
            note,
        });
    }

    fn check(&mut self, name: &str, passed: bool, detail: impl FnOnce() -> String) {
        self.checks.push(CheckRecord {
            name: name.into(),
            passed,
            cases: 1,
            detail: (!passed).then(detail),
        });
    }
}

pub fn run_example(ex: &Example, opts: SuiteOptions) -> Result<ExampleRow, InputError> {
    let con = Construction::new(ex.n1, ex.n2, ex.q)?;
    let refv = ex.reference;
    let mut b = RowBuilder {
        discrepancies: vec![],
        unverified: vec![],
        notes: vec![],
        checks: vec![],
    };
    let field = PrimeField::new(ex.q)?;
    let ring = PolyRing::new(&field);
    let xn = ring.x_pow_minus_one(con.n());

    let (code, branch, omegas) = match ex.source {
        Source::Sequence => {
            let code = con.generator_via_gcd();
            let cc = con.cross_check()?;
            let gcd = con.oracle_gcd();
            b.check("gen divides x^n - 1", ring.divides(&code.gen, &xn)?, || {
                "remainder is nonzero".into()
            });
            b.check("k = deg gcd", gcd.degree() == Some(code.k), || {
                format!("k = {}, deg gcd = {:?}", code.k, gcd.degree())
            });
            let p = con.params();
            let want = (p.n2() - 1) + (p.n1() - 1) * (p.n2() - 1) / 2;
            let weight = con.sequence().weight() as u64;
            b.check("sequence weight", weight == want, || {
                format!("weight {weight}, expected {want}")
            });
            b.check("closed form matches oracle", cc.agree, || {
                format!("observed {}, predicted {}", cc.observed, cc.predicted)
            });
            let o = cc.report.omegas;
            if let Some(po) = refv.omegas {
                let (n1, n2, q) = (p.n1(), p.n2(), ex.q);
                for (name, a, c, note) in [
                    (
                        "omega1",
                        po.0,
                        o.omega1,
                        format!("({n1}+1)/2 = {} = {} mod {q}", n1.div_ceil(2), o.omega1),
                    ),
                    (
                        "omega2",
                        po.1,
                        o.omega2,
                        format!("({n2}-1)/2 = {} = {} mod {q}", (n2 - 1) / 2, o.omega2),
                    ),
                    (
                        "omega",
                        po.2,
                        o.omega,
                        format!(
                            "({n1}+1)({n2}-1)/2 = {} = {} mod {q}",
                            (n1 + 1) * (n2 - 1) / 2,
                            o.omega
                        ),
                    ),
                ] {
                    if a != c {
                        b.differ(name, a, c, Some(note));
                    }
                }
            }
            if let Some(stm) = refv.stm {
                compare_values(&con, &cc.report.values, stm, &mut b);
            }
            if let Some(g) = refv.gen {
                let reference = parse_comma(&field, g)?;
                if reference != code.gen {
                    let note = (reference == gcd).then(|| {
                        "the reference polynomial equals gcd(x^n - 1, S(x)), the check polynomial of the code"
                            .to_string()
                    });
                    b.differ("gen", to_comma(&reference), to_comma(&code.gen), note);
                }
            }
            (code, Some(cc.report.branch.to_string()), Some(o.into()))
        }
        Source::Theorem(c) => {
            let code = con.theorem_constructor(c)?;
            b.check("gen divides x^n - 1", ring.divides(&code.gen, &xn)?, || {
                "remainder is nonzero".into()
            });
            (code, None, None)
        }
    };

    if let Some(k) = refv.k {
        if k != code.k {
            let note = match ex.source {
                Source::Sequence => branch.as_ref().map(|b| format!("oracle code, branch {b}")),
                Source::Theorem(c) => Some(format!("dimension of {c}")),
            };
            b.differ("k", k, code.k, note);
        }
    }

    let dist = best_distance(&code, opts.wmax, opts.enum_budget, opts.rank_cap);
    let witness = distance::upper_bound_witness(&code);
    let theorem = match ex.source {
        Source::Theorem(c) => Some(distance::theorem_bounds(&code, c.theorem())?),
        Source::Sequence => None,
    };
    distance_consistency(
        &dist,
        witness.as_ref().map(|w| w.weight),
        theorem.as_ref(),
        &mut b,
    );

    let certified = dist.kind == Kind::Exact || dist.kind == Kind::BoundedSearchExact;
    if let Some(d) = refv.d {
        let theorem_exact = theorem.as_ref().filter(|t| t.kind == Kind::Exact);
        if certified {
            let v = dist.value.expect("certified value");
            if v != d {
                let note = if ex.id == 1 {
                    Some(reference_code_note(&field, &opts)?)
                } else {
                    None
                };
                b.differ("d", d, v, note);
            }
        } else if let Some(t) = theorem_exact {
            let v = t.value.expect("theorem value");
            if v != d {
                b.differ("d", d, v, Some("theorem value".into()));
            }
            b.notes.push(format!(
                "d = {v} by theorem; search certifies {}",
                describe(&dist, witness.as_ref().map(|w| w.weight))
            ));
        } else {
            let lower = lower_bound(&dist).max(theorem.as_ref().and_then(|t| t.value).unwrap_or(0));
            let upper = witness.as_ref().map(|w| w.weight);
            if d < lower || upper.is_some_and(|u| d > u) {
                b.differ("d", d, describe(&dist, upper), None);
            } else {
                b.unverified.push(format!(
                    "d = {d}: certified {lower} <= d{}",
                    upper.map(|u| format!(" <= {u}")).unwrap_or_default()
                ));
            }
        }
    }
    if let (Some(bound), Some(t)) = (refv.bound, theorem.as_ref()) {
        if t.value != Some(bound) {
            b.differ("bound", bound, format!("{:?}", t.value), None);
        }
    }

    let status = if !b.discrepancies.is_empty() {
        Status::Discrepancy
    } else if !b.unverified.is_empty() {
        Status::Unverified
    } else {
        Status::Agree
    };
    Ok(ExampleRow {
        example: ex.id,
        n1: ex.n1,
        n2: ex.n2,
        q: ex.q,
        n: code.n,
        provenance: code.provenance.to_string(),
        status,
        k: code.k,
        gen_degree: code.gen.degree().unwrap_or(0),
        branch,
        omegas,
        distance: (&dist).into(),
        theorem: theorem.as_ref().map(Into::into),
        upper_bound: witness.as_ref().map(Into::into),
        discrepancies: b.discrepancies,
        unverified: b.unverified,
        notes: b.notes,
        self_consistent: b.checks.iter().all(|c| c.passed),
        checks: b.checks,
    })
}

fn abbreviate(s: &str) -> String {
    if s.len() <= 24 {
        s.to_string()
    } else {
        format!("{}... ({} coefficients)", &s[..12], s.split(',').count())
    }
}

fn lower_bound(d: &DistanceResult) -> u64 {
    match d.kind {
        Kind::Inconclusive => 1,
        _ => d.value.unwrap_or(1),
    }
}

fn describe(d: &DistanceResult, upper: Option<u64>) -> String {
    let lo = lower_bound(d);
    match upper {
        Some(u) => format!("{lo} <= d <= {u}"),
        None => format!("d >= {lo}"),
    }
}

fn distance_consistency(
    dist: &DistanceResult,
    upper: Option<u64>,
    theorem: Option<&DistanceResult>,
    b: &mut RowBuilder,
) {
    let lo = lower_bound(dist);
    if let Some(u) = upper {
        b.check("search bound <= witness weight", lo <= u, || {
            format!("lower bound {lo} exceeds witness {u}")
        });
    }
    if let Some(t) = theorem.and_then(|t| t.value) {
        if let Some(u) = upper {
            b.check("theorem value <= witness weight", t <= u, || {
                format!("theorem {t} exceeds witness {u}")
            });
        }
        if matches!(dist.kind, Kind::Exact | Kind::BoundedSearchExact) {
            let v = dist.value.unwrap_or(0);
            let exact = theorem.is_some_and(|th| th.kind == Kind::Exact);
            let ok = if exact { v == t } else { t <= v };
            b.check("theorem value consistent with search", ok, || {
                format!("theorem {t}, search {v}")
            });
        }
    }
}

/// Support search on the code generated by the reference polynomial.
fn reference_code_note(field: &PrimeField, opts: &SuiteOptions) -> Result<String, InputError> {
    let p = parse_comma(field, REFERENCE_GEN_7_13)?;
    let code = CyclicCode::new(2, 91, p, Provenance::Oracle)?;
    let d = distance::min_weight_support_search(&code, opts.wmax, opts.rank_cap);
    Ok(format!(
        "the code generated by the reference polynomial is [{}, {}] with d {} ({})",
        code.n,
        code.k,
        d.value.map(|v| v.to_string()).unwrap_or_else(|| "?".into()),
        d.kind
    ))
}

/// Reference values are compared against every choice of `beta^r`: moving
/// `r` through `D_u` rotates `(S, T, M, -(S+1), -(T+1), -(M+1))` by `u`.
fn compare_values(
    con: &Construction,
    values: &[whiteman_core::ExtElem; 3],
    stm: [i64; 3],
    b: &mut RowBuilder,
) {
    let f = con.root().field();
    let q = con.q() as i64;
    let table: Vec<_> = values
        .iter()
        .cloned()
        .chain(values.iter().map(|v| f.neg(&f.add(v, &f.one()))))
        .collect();
    let want: Vec<_> = stm
        .iter()
        .map(|&v| f.embed(v.rem_euclid(q) as u32))
        .collect();
    let hit = (0..6).find(|&u| (0..3).all(|i| table[(u + i) % 6] == want[i]));
    let render = |i: usize| match f.descend(&table[i]) {
        Some(c) if q > 2 && c as i64 == q - 1 => "-1".to_string(),
        Some(c) => c.to_string(),
        None => format!("{:?}", table[i].coeffs()),
    };
    match hit {
        Some(0) => {}
        Some(u) => b.notes.push(format!(
            "reference S, T, M match beta^r with r in D{u}; the computed values use r = 1"
        )),
        None => b.differ(
            "S,T,M",
            format!("({},{},{})", stm[0], stm[1], stm[2]),
            format!("({},{},{})", render(0), render(1), render(2)),
            Some("no choice of beta reproduces the reference triple".into()),
        ),
    }
}
