//! File formats and command dispatch for the `colfan` validator.
//!
//! Exit codes: 0 when the check passes, 1 when the verdict is false and
//! 2 for any input error (missing file, schema or semantic violation).

pub mod files;
pub mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use colfan_core::{
    check_fan_morphism, format_rational, has_k_form, is_monoid_cone, is_quasiprojective,
    lined_closure_real_form, monoid_has_k_form, validate_action, validate_colored_fan, ColoredCone,
    ColoredFan, GroupAction, RatVec, SphericalDatum, ValidationReport, Weight,
};

use files::{ActionFile, DatumFile, FanFile, MorphismFile, ThetaFile};
pub use report::{Report, Witness};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("schema error in {path}: {message}")]
    Schema { path: String, message: String },
    #[error("missing required input --{0}")]
    MissingInput(&'static str),
    #[error("invalid --lambda: {0}")]
    Lambda(String),
    #[error("{0}")]
    Semantic(String),
    #[error(transparent)]
    Core(#[from] colfan_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Command {
    Validate,
    Quasiproj,
    Kform,
    Monoid,
    MonoidKform,
    Morphism,
    Lined,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Validate,
        Command::Quasiproj,
        Command::Kform,
        Command::Monoid,
        Command::MonoidKform,
        Command::Morphism,
        Command::Lined,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Quasiproj => "quasiproj",
            Command::Kform => "kform",
            Command::Monoid => "monoid",
            Command::MonoidKform => "monoid-kform",
            Command::Morphism => "morphism",
            Command::Lined => "lined",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

/// Paths and literal arguments collected from the command line.
#[derive(Clone, Debug, Default)]
pub struct Inputs {
    pub datum: Option<PathBuf>,
    pub fan: Option<PathBuf>,
    pub action: Option<PathBuf>,
    pub morphism: Option<PathBuf>,
    pub lambda: Option<String>,
    pub theta: Option<PathBuf>,
    /// Also run the orbit-fan LP in `monoid-kform`.
    pub force_lp: bool,
}

fn required<'a>(p: &'a Option<PathBuf>, flag: &'static str) -> Result<&'a Path, CliError> {
    p.as_deref().ok_or(CliError::MissingInput(flag))
}

fn load_datum(inputs: &Inputs) -> Result<SphericalDatum, CliError> {
    files::read::<DatumFile>(required(&inputs.datum, "datum")?)?.to_datum()
}

fn load_fan(inputs: &Inputs, datum: &SphericalDatum) -> Result<ColoredFan, CliError> {
    files::read::<FanFile>(required(&inputs.fan, "fan")?)?.to_fan(datum)
}

fn load_action(inputs: &Inputs, datum: &SphericalDatum) -> Result<GroupAction, CliError> {
    files::read::<ActionFile>(required(&inputs.action, "action")?)?.to_action(datum)
}

fn first_failure(report: &ValidationReport) -> Option<String> {
    report
        .failures()
        .next()
        .map(|c| format!("{} violated by {}: {}", c.axiom, c.subject, c.detail))
}

/// A fan that is not a colored fan is an input error for every command
/// except `validate`.
fn require_valid_fan(datum: &SphericalDatum, fan: &ColoredFan) -> Result<(), CliError> {
    match first_failure(&validate_colored_fan(datum, fan)?) {
        Some(msg) => Err(CliError::Semantic(msg)),
        None => Ok(()),
    }
}

fn require_valid_action(datum: &SphericalDatum, action: &GroupAction) -> Result<(), CliError> {
    match first_failure(&validate_action(datum, action)?) {
        Some(msg) => Err(CliError::Semantic(msg)),
        None => Ok(()),
    }
}

/// The single maximal member of a simple fan.
fn single_cone(fan: &ColoredFan) -> Result<ColoredCone, CliError> {
    let max = colfan_core::maximal_cones(fan);
    match max.as_slice() {
        [i] => Ok(fan.cones()[*i].clone()),
        _ => Err(CliError::Semantic(format!(
            "expected a fan file with exactly one cone, found {} maximal cones",
            max.len()
        ))),
    }
}

fn absorb(report: &mut Report, checks: &ValidationReport) {
    for c in &checks.checks {
        report.axiom(&c.axiom, c.passed);
        if !c.passed {
            report.reasons.push(format!(
                "{} violated by {}: {}",
                c.axiom, c.subject, c.detail
            ));
        }
    }
    report.notes.extend(checks.notes.iter().cloned());
}

fn parse_lambda(csv: &str) -> Result<RatVec, CliError> {
    let coords = csv
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|e| CliError::Lambda(format!("{s:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RatVec::from_ints(&coords))
}

fn rational_values(v: &RatVec) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

/// Runs `cmd`; `Err` means an input error (exit code 2).
pub fn run_command(cmd: Command, inputs: &Inputs) -> Result<Report, CliError> {
    let name = cmd.name();
    match cmd {
        Command::Validate => {
            let datum = load_datum(inputs)?;
            let fan = load_fan(inputs, &datum)?;
            let mut checks = validate_colored_fan(&datum, &fan)?;
            if inputs.action.is_some() {
                let action = load_action(inputs, &datum)?;
                checks.merge(validate_action(&datum, &action)?);
            }
            let mut report = Report::new(name, checks.passed());
            absorb(&mut report, &checks);
            report
                .notes
                .push(format!("{} colored cones after face closure", fan.len()));
            Ok(report)
        }
        Command::Quasiproj => {
            let datum = load_datum(inputs)?;
            let fan = load_fan(inputs, &datum)?;
            require_valid_fan(&datum, &fan)?;
            let v = is_quasiprojective(&datum, &fan)?;
            let mut report = Report::new(name, v.verdict);
            report.axiom("quasiprojective", v.verdict);
            for form in v.witness.iter().flatten() {
                report.witnesses.push(Witness {
                    subject: form.cone.to_string(),
                    values: rational_values(&form.coefficients),
                });
            }
            if !v.verdict {
                report
                    .reasons
                    .push("no family of linear forms satisfies the support conditions".into());
            }
            report.notes = v.notes;
            Ok(report)
        }
        Command::Kform => {
            let datum = load_datum(inputs)?;
            let fan = load_fan(inputs, &datum)?;
            let action = load_action(inputs, &datum)?;
            require_valid_fan(&datum, &fan)?;
            require_valid_action(&datum, &action)?;
            let k = has_k_form(&datum, &action, &fan)?;
            let mut report = Report::new(name, k.verdict);
            report.axiom("invariant", k.invariant);
            if k.invariant {
                report.axiom("orbit fans quasiprojective", k.verdict);
            }
            report.reasons = k.reasons;
            report.notes = k.notes;
            report.notes.push(format!("group order {}", action.order()));
            Ok(report)
        }
        Command::Monoid => {
            let datum = load_datum(inputs)?;
            let cc = single_cone(&load_fan(inputs, &datum)?)?;
            let m = is_monoid_cone(&datum, &cc)?;
            let mut report = Report::new(name, m.verdict);
            absorb(&mut report, &m.checks);
            Ok(report)
        }
        Command::MonoidKform => {
            let datum = load_datum(inputs)?;
            let cc = single_cone(&load_fan(inputs, &datum)?)?;
            let action = load_action(inputs, &datum)?;
            require_valid_action(&datum, &action)?;
            let m = monoid_has_k_form(&datum, &action, &cc, inputs.force_lp)?;
            let mut report = Report::new(name, m.verdict);
            report.axiom("invariant", m.verdict);
            if let Some(lp) = m.lp_cross_check {
                report.axiom("lp cross-check agrees", lp == m.verdict);
            }
            if !m.verdict {
                report
                    .reasons
                    .push(format!("{cc} is not stable under the action"));
            }
            Ok(report)
        }
        Command::Morphism => {
            let datum = load_datum(inputs)?;
            let fan = load_fan(inputs, &datum)?;
            let morphism = files::read::<MorphismFile>(required(&inputs.morphism, "morphism")?)?
                .to_morphism()?;
            require_valid_fan(&datum, &fan)?;
            require_valid_fan(&morphism.target, &morphism.target_fan)?;
            let v = check_fan_morphism(
                &datum,
                &morphism.target,
                &morphism.data,
                &fan,
                &morphism.target_fan,
            )?;
            let mut report = Report::new(name, v.verdict);
            report.axiom("every cone maps into a target cone", v.verdict);
            for (cc, target) in fan.iter().zip(&v.assignment) {
                match target {
                    Some(j) => report.witnesses.push(Witness {
                        subject: cc.to_string(),
                        values: vec![morphism.target_fan.cones()[*j].to_string()],
                    }),
                    None => report
                        .reasons
                        .push(format!("no target cone contains the image of {cc}")),
                }
            }
            Ok(report)
        }
        Command::Lined => {
            let lambda = parse_lambda(
                inputs
                    .lambda
                    .as_deref()
                    .ok_or(CliError::MissingInput("lambda"))?,
            )?;
            let theta = files::read::<ThetaFile>(required(&inputs.theta, "theta")?)?.to_matrix()?;
            let verdict = lined_closure_real_form(&Weight(lambda.clone()), &theta)?;
            let mut report = Report::new(name, verdict);
            report.axiom("theta is an involution", true);
            report.axiom("theta sends lambda to -lambda", verdict);
            if !verdict {
                report
                    .reasons
                    .push(format!("theta does not send {lambda} to its negative"));
            }
            Ok(report)
        }
    }
}

/// Renders the outcome of `run_command` and its exit code. Input errors
/// produce an empty report body and the message to print on stderr.
pub fn render(outcome: &Result<Report, CliError>, json: bool) -> (String, i32) {
    match outcome {
        Ok(r) if json => (r.to_json() + "\n", r.exit_code()),
        Ok(r) => (r.to_text(), r.exit_code()),
        Err(e) => (format!("error: {e}\n"), e.exit_code()),
    }
}
