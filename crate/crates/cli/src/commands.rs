use serde::Serialize;

use whiteman_core::codegen::Constructor;
use whiteman_core::distance;
use whiteman_core::verify;

use crate::config::{Format, InputError, JobConfig};
use crate::report::{
    best_distance, to_json, to_table, CheckRecord, CheckReport, ClassifyRecord, CodeRecord,
    DistanceReport, GenerateRecord, SystemRecord,
};
use crate::suite::{examples, run_suite, SuiteOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Generate,
    Check,
    Distance,
    Examples,
}

/// Rendered output and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub exit_code: i32,
}

impl Outcome {
    pub fn input_error(e: &InputError) -> Self {
        Outcome {
            output: format!("error: {e}\n"),
            exit_code: 1,
        }
    }
}

fn render<T: Serialize>(v: &T, format: Format) -> String {
    match format {
        Format::Json => to_json(v) + "\n",
        Format::Table => to_table(v),
    }
}

pub fn run(cmd: Command, cfg: &JobConfig) -> Outcome {
    let r = match cmd {
        Command::Classify => classify(cfg),
        Command::Generate => generate(cfg),
        Command::Check => check(cfg),
        Command::Distance => distance_cmd(cfg),
        Command::Examples => examples_cmd(cfg),
    };
    r.unwrap_or_else(|e| Outcome::input_error(&e))
}

pub fn classify(cfg: &JobConfig) -> Result<Outcome, InputError> {
    let con = cfg.construction()?;
    let report = con.classify()?;
    let lemma5 = verify::lemma5(&con)?;
    let rec = ClassifyRecord::new(&con, &report, &lemma5, cfg.full);
    Ok(Outcome {
        output: render(&rec, cfg.format),
        exit_code: 0,
    })
}

/// Both generator paths. Exit code 2 when they disagree.
pub fn generate(cfg: &JobConfig) -> Result<Outcome, InputError> {
    let con = cfg.construction()?;
    let cc = con.cross_check()?;
    let dist = best_distance(&cc.oracle, cfg.wmax, cfg.enum_budget, cfg.rank_cap);
    let rec = GenerateRecord {
        code: CodeRecord::new(&con, &cc.oracle, Some(&dist)),
        closed_form: cc.closed.as_ref().map(|c| CodeRecord::new(&con, c, None)),
        cross_check: (&cc).into(),
    };
    Ok(Outcome {
        output: render(&rec, cfg.format),
        exit_code: if cc.agree { 0 } else { 2 },
    })
}

/// The structural identity checks. Exit code 2 when any fails.
pub fn check(cfg: &JobConfig) -> Result<Outcome, InputError> {
    let con = cfg.construction()?;
    let checks = verify::lemma_suite(&con)?;
    let passed = checks.iter().all(|c| c.passed);
    let rec = CheckReport {
        system: SystemRecord::new(con.system(), cfg.full),
        q: con.q(),
        q_class: con.q_class(),
        passed,
        checks: checks.iter().map(CheckRecord::from).collect(),
    };
    Ok(Outcome {
        output: render(&rec, cfg.format),
        exit_code: if passed { 0 } else { 2 },
    })
}

/// Distance of a theorem code when `--theorem` is given, otherwise of the
/// oracle code.
pub fn distance_cmd(cfg: &JobConfig) -> Result<Outcome, InputError> {
    let con = cfg.construction()?;
    let code = match cfg.constructor {
        Some(c) => con.theorem_constructor(c)?,
        None => con.generator_via_gcd(),
    };
    let result = best_distance(&code, cfg.wmax, cfg.enum_budget, cfg.rank_cap);
    let theorem = match cfg.constructor {
        Some(c) => Some(distance::theorem_bounds(&code, c.theorem())?),
        None => None,
    };
    let witness = distance::upper_bound_witness(&code);
    let rec = DistanceReport {
        code: CodeRecord::new(&con, &code, Some(&result)),
        result: (&result).into(),
        theorem: theorem.as_ref().map(Into::into),
        upper_bound: witness.as_ref().map(Into::into),
    };
    Ok(Outcome {
        output: render(&rec, cfg.format),
        exit_code: 0,
    })
}

pub fn examples_cmd(cfg: &JobConfig) -> Result<Outcome, InputError> {
    let opts = SuiteOptions {
        wmax: cfg.wmax,
        enum_budget: cfg.enum_budget,
        rank_cap: cfg.rank_cap,
    };
    let report = run_suite(&examples(), opts)?;
    let output = match cfg.format {
        Format::Json => to_json(&report) + "\n",
        Format::Table => report.table(),
    };
    Ok(Outcome {
        output,
        exit_code: report.exit_code(),
    })
}

/// `--theorem` and `--indices` together.
pub fn constructor(theorem: Option<u8>, indices: &[u8]) -> Result<Option<Constructor>, InputError> {
    match theorem {
        None if indices.is_empty() => Ok(None),
        None => Err(InputError("--indices requires --theorem".into())),
        Some(t) => Ok(Some(Constructor::from_indices(t, indices)?)),
    }
}
