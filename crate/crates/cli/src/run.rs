//! The command driver: turns a [`RunConfig`] into a JSON report and an
//! exit status.

use std::path::PathBuf;
use std::thread;

use serde_json::{json, Map, Value};

use quandle_order::catalog::census;
use quandle_order::quandle::FiniteQuandle;
use quandle_order::search::{decide, enumerate_space_part, Member, OrderSpace, Partition, Property, SearchConfig, Tier};

use crate::builtin::parse_builtin;
use crate::formats::{parse_input, Structure};
use crate::report::{census_record_json, cyclic_json, error_json, linear_json, quandle_json, render_pretty, verdict_fields, witness_json};
use crate::verify::verify_paper;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Check,
    Enumerate,
    Witness,
    Census,
    VerifyPaper,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Enumerate => "enumerate",
            Command::Witness => "witness",
            Command::Census => "census",
            Command::VerifyPaper => "verify-paper",
        }
    }

    fn needs_quandle(self) -> bool {
        matches!(self, Command::Check | Command::Enumerate | Command::Witness)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSource {
    File(PathBuf),
    Builtin(String),
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub input: Option<InputSource>,
    pub property: Option<Property>,
    pub search: SearchConfig,
    /// Worker threads for `enumerate`.
    pub threads: usize,
    pub output: Option<PathBuf>,
    pub fail_on_no: bool,
    pub pretty: bool,
    /// Largest order swept by `census`.
    pub max_order: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            input: None,
            property: None,
            search: SearchConfig::default(),
            threads: 1,
            output: None,
            fail_on_no: false,
            pretty: false,
            max_order: 4,
        }
    }

    pub fn with_builtin(mut self, spec: &str) -> Self {
        self.input = Some(InputSource::Builtin(spec.to_string()));
        self
    }

    pub fn with_property(mut self, p: Property) -> Self {
        self.property = Some(p);
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutcome {
    pub report: Value,
    pub exit_code: i32,
}

impl RunOutcome {
    /// The report as it is written out: one JSON document, or indented
    /// text with `pretty`.
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            render_pretty(&self.report)
        } else {
            let mut s = serde_json::to_string(&self.report).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

pub fn parse_property(s: &str) -> Option<Property> {
    Property::ALL.into_iter().find(|p| p.name() == s)
}

pub fn parse_tier(s: &str) -> Option<Tier> {
    match s {
        "fast" => Some(Tier::Fast),
        "exhaustive" => Some(Tier::Exhaustive),
        "both" => Some(Tier::Both),
        _ => None,
    }
}

/// Runs the command. Errors become part of the report.
pub fn run(cfg: &RunConfig) -> RunOutcome {
    let mut head = Map::new();
    head.insert("command".into(), json!(cfg.command.name()));
    match execute(cfg) {
        Ok((body, exit_code)) => {
            head.extend(body);
            RunOutcome { report: Value::Object(head), exit_code }
        }
        Err(e) => {
            if let Value::Object(m) = error_json(&e) {
                head.extend(m);
            }
            RunOutcome { report: Value::Object(head), exit_code: e.exit_code() }
        }
    }
}

/// Runs the command and writes the report to the configured output.
/// Returns the exit status.
pub fn run_and_write(cfg: &RunConfig) -> i32 {
    let outcome = run(cfg);
    let text = outcome.render(cfg.pretty);
    match &cfg.output {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => outcome.exit_code,
            Err(source) => {
                let e = CliError::Io { path: path.display().to_string(), source };
                eprintln!("{e}");
                e.exit_code()
            }
        },
        None => {
            print!("{text}");
            outcome.exit_code
        }
    }
}

fn load_quandle(cfg: &RunConfig) -> Result<(FiniteQuandle, Option<String>), CliError> {
    match &cfg.input {
        None => Err(CliError::Usage("an input is required: pass --input or --builtin".into())),
        Some(InputSource::Builtin(spec)) => Ok((parse_builtin(spec)?, None)),
        Some(InputSource::File(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            match parse_input(&text)? {
                Structure::Quandle { quandle, name } => Ok((quandle, name)),
                Structure::Group(_) => Err(CliError::Usage(
                    "input is a group; use --builtin conj:@FILE or core:@FILE".into(),
                )),
            }
        }
    }
}

type Body = (Map<String, Value>, i32);

fn execute(cfg: &RunConfig) -> Result<Body, CliError> {
    if cfg.threads == 0 {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    if !cfg.command.needs_quandle() {
        if cfg.input.is_some() {
            return Err(CliError::Usage(format!("{} takes no input", cfg.command.name())));
        }
        return match cfg.command {
            Command::Census => run_census(cfg),
            _ => Ok(run_verify(cfg)),
        };
    }
    let property = cfg
        .property
        .ok_or_else(|| CliError::Usage(format!("{} requires --property", cfg.command.name())))?;
    let (q, name) = load_quandle(cfg)?;
    let mut body = Map::new();
    body.insert("property".into(), json!(property.name()));
    let mut quandle = quandle_json(&q);
    if let Some(name) = name {
        quandle["name"] = json!(name);
    }
    body.insert("quandle".into(), quandle);
    let answer = match cfg.command {
        Command::Check => {
            let v = decide(&q, property, &cfg.search)?;
            body.extend(verdict_fields(&v));
            v.answer
        }
        Command::Witness => {
            let v = decide(&q, property, &cfg.search)?;
            body.insert("answer".into(), json!(if v.answer { "yes" } else { "no" }));
            body.insert("witness".into(), v.witness.as_ref().map_or(Value::Null, witness_json));
            v.answer
        }
        _ => {
            let space = enumerate_parallel(&q, property, &cfg.search, cfg.threads)?;
            body.insert("kind".into(), json!(space.kind.name()));
            body.insert("count".into(), json!(space.len()));
            let members: Vec<Value> = space
                .members
                .iter()
                .map(|m| match m {
                    Member::Circular(c) => cyclic_json(c),
                    Member::Linear(o) => linear_json(o),
                })
                .collect();
            body.insert("members".into(), Value::Array(members));
            !space.is_empty()
        }
    };
    let code = if cfg.fail_on_no && !answer { 1 } else { 0 };
    Ok((body, code))
}

/// Splits the candidate scan across `threads` workers. The merged space
/// is sorted, so the result does not depend on the thread count.
pub fn enumerate_parallel(
    q: &FiniteQuandle,
    property: Property,
    cfg: &SearchConfig,
    threads: usize,
) -> Result<OrderSpace<Member>, CliError> {
    let kind = property.space_kind();
    let parts: Vec<_> = if threads <= 1 {
        vec![enumerate_space_part(q, kind, cfg, Partition::WHOLE)]
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|index| {
                    let part = Partition { index, count: threads };
                    s.spawn(move || enumerate_space_part(q, kind, cfg, part))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("enumeration worker panicked")).collect()
        })
    };
    let parts = parts.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(OrderSpace::merge(parts).expect("at least one part"))
}

fn run_census(cfg: &RunConfig) -> Result<Body, CliError> {
    let records = census(cfg.max_order, &cfg.search)?;
    let mut body = Map::new();
    body.insert("max_order".into(), json!(cfg.max_order));
    body.insert("count".into(), json!(records.len()));
    body.insert("records".into(), records.iter().map(census_record_json).collect());
    Ok((body, 0))
}

fn run_verify(cfg: &RunConfig) -> Body {
    let results = verify_paper(&cfg.search);
    let all = results.iter().all(|r| r.passed);
    let checks: Vec<Value> = results
        .into_iter()
        .map(|r| json!({ "name": r.name, "passed": r.passed, "detail": r.detail }))
        .collect();
    let mut body = Map::new();
    body.insert("passed".into(), json!(all));
    body.insert("checks".into(), Value::Array(checks));
    (body, if all { 0 } else { 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_right_circular_is_no() {
        let cfg = RunConfig::new(Command::Check)
            .with_builtin("dihedral:3")
            .with_property(Property::RightCircular);
        let out = run(&cfg);
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.report["answer"], "no");
        assert_eq!(out.report["certificate"]["kind"], "non-cyclic-action");
        assert_eq!(out.report["certificate"]["group_order"], 6);
    }

    #[test]
    fn enumerate_trivial_3_right() {
        let cfg = RunConfig::new(Command::Enumerate)
            .with_builtin("trivial:3")
            .with_property(Property::RightCircular);
        let out = run(&cfg);
        assert_eq!(out.report["count"], 2);
        assert_eq!(out.report["kind"], "RCO");
    }

    #[test]
    fn threads_do_not_change_the_report() {
        let mut cfg = RunConfig::new(Command::Enumerate)
            .with_builtin("trivial:5")
            .with_property(Property::RightOrder);
        let one = run(&cfg);
        cfg.threads = 3;
        assert_eq!(run(&cfg), one);
        assert_eq!(one.report["count"], 120);
    }

    #[test]
    fn fail_on_no() {
        let mut cfg = RunConfig::new(Command::Check)
            .with_builtin("dihedral:3")
            .with_property(Property::LeftCircular);
        cfg.fail_on_no = true;
        assert_eq!(run(&cfg).exit_code, 1);
        cfg.input = Some(InputSource::Builtin("trivial:2".into()));
        assert_eq!(run(&cfg).exit_code, 0);
    }

    #[test]
    fn missing_property_is_a_usage_error() {
        let out = run(&RunConfig::new(Command::Check).with_builtin("trivial:3"));
        assert_eq!(out.exit_code, 2);
        assert_eq!(out.report["error"]["kind"], "UsageError");
    }

    #[test]
    fn caps_give_exit_3() {
        let mut cfg = RunConfig::new(Command::Enumerate)
            .with_builtin("trivial:7")
            .with_property(Property::RightOrder);
        cfg.search.max_linear_n = 6;
        let out = run(&cfg);
        assert_eq!(out.exit_code, 3);
        assert_eq!(out.report["error"]["kind"], "ResourceLimit");

        let mut census = RunConfig::new(Command::Census);
        census.max_order = 6;
        assert_eq!(run(&census).exit_code, 3);
    }

    #[test]
    fn witness_only() {
        let cfg = RunConfig::new(Command::Witness)
            .with_builtin("trivial:3")
            .with_property(Property::RightCircular);
        let out = run(&cfg);
        assert_eq!(out.report["witness"]["arrangement"], json!([0, 1, 2]));
        assert!(out.report.get("certificate").is_none());
    }
}
