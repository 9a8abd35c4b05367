//! Command dispatch for the `folia` binary.

pub mod document;

use folia_core::blowup::{self, BlowupError};
use folia_core::projective::{self, ProjectiveError};
use folia_core::report::Fields;
use folia_core::theorems::{self, CheckOptions, TheoremError};
use folia_core::{CheckReport, GermError, Verdict};
use thiserror::Error;

pub use document::{parse_param, Document, DocumentError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Invariants,
    CheckBs,
    CheckLiu,
    CheckCota,
    CheckSecondType,
    Reduce,
    ProjectiveValidate,
    ProjectiveGlobal,
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error("this command needs a [{0}] block")]
    MissingBlock(&'static str),
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error(transparent)]
    Germ(#[from] GermError),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
    #[error(transparent)]
    Projective(#[from] ProjectiveError),
}

/// 0 on success, 1 on a failed check.
pub fn exit_code(report: &CheckReport) -> u8 {
    match report.verdict {
        Verdict::Fail => 1,
        Verdict::Pass | Verdict::NotApplicable => 0,
    }
}

/// Exit status for errors: the input could not be processed.
pub const INPUT_ERROR: u8 = 2;

pub fn run(
    command: Command,
    text: &str,
    overrides: &[(String, String)],
    opts: &CheckOptions,
) -> Result<CheckReport, RunError> {
    let doc = Document::parse(text, overrides)?;
    let mut report = match command {
        Command::Invariants => {
            let f = doc
                .foliation
                .as_ref()
                .ok_or(RunError::MissingBlock("foliation"))?;
            theorems::invariants(f, doc.balanced.as_ref(), opts)?
        }
        Command::CheckBs | Command::CheckLiu | Command::CheckCota | Command::CheckSecondType => {
            let f = doc
                .foliation
                .as_ref()
                .ok_or(RunError::MissingBlock("foliation"))?;
            let b = doc
                .balanced
                .as_ref()
                .ok_or(RunError::MissingBlock("divisor"))?;
            match command {
                Command::CheckBs => theorems::check_briancon_skoda(f, b, opts)?,
                Command::CheckLiu => theorems::check_liu(f, b, opts)?,
                Command::CheckCota => theorems::check_cota(f, b, opts)?,
                _ => theorems::check_second_type(f, b, opts)?,
            }
        }
        Command::Reduce => reduce(&doc, opts)?,
        Command::ProjectiveValidate => projective_validate(&doc)?,
        Command::ProjectiveGlobal => {
            let block = doc
                .projective
                .as_ref()
                .ok_or(RunError::MissingBlock("projective"))?;
            let foliation = block.foliation()?;
            let curve = block.curve.as_ref().ok_or(DocumentError::Missing {
                section: "projective",
                key: "curve",
            })?;
            projective::check_global_bound(&foliation, curve, &block.points, opts)?
        }
    };
    for (name, value) in &doc.params {
        report.input(name, value.to_string());
    }
    Ok(report)
}

fn reduce(doc: &Document, opts: &CheckOptions) -> Result<CheckReport, RunError> {
    let f = doc
        .foliation
        .as_ref()
        .ok_or(RunError::MissingBlock("foliation"))?;
    let mut report = CheckReport::new("reduce");
    report.input("P", f.p().to_string());
    report.input("Q", f.q().to_string());
    report.input("max blowups", opts.max_blowups);
    let tree = blowup::reduce(f, opts.max_blowups)?;
    report.set("blowups", tree.len());
    report.set("second type", blowup::second_type_verdict(&tree));
    report.set(
        "generalized curve",
        blowup::generalized_curve_verdict(&tree),
    );
    let h1: Vec<String> = tree
        .blowups
        .iter()
        .map(|b| {
            format!(
                "E{}: {}",
                b.component,
                blowup::h1_dimension(b.multiplicity, b.epsilon)
            )
        })
        .collect();
    report.set("h1 per blow-up", h1);
    let budgets: Vec<_> = blowup::dicritical_report(&tree)
        .iter()
        .map(|d| {
            Fields::new()
                .with("component", format!("E{}", d.component))
                .with("valence", d.valence)
                .with("budget", d.budget)
        })
        .collect();
    report.set("dicritical budgets", budgets);
    report.set("tree", tree.to_fields());
    report.assert(
        "every leaf is simple",
        tree.leaves.iter().all(|l| l.class.is_simple()),
        format!("{} leaves", tree.leaves.len()),
    );
    report.conclude();
    Ok(report)
}

fn projective_validate(doc: &Document) -> Result<CheckReport, RunError> {
    let block = doc
        .projective
        .as_ref()
        .ok_or(RunError::MissingBlock("projective"))?;
    let mut report = CheckReport::new("projective-validate");
    report.input("A", block.a.to_string());
    report.input("B", block.b.to_string());
    report.input("C", block.c.to_string());
    let foliation = match block.foliation() {
        Ok(f) => f,
        Err(ProjectiveError::Euler(residual)) => {
            report.assert(
                "Euler identity",
                false,
                format!("Ax + By + Cz = {residual}"),
            );
            report.conclude();
            return Ok(report);
        }
        Err(e) => return Err(e.into()),
    };
    report.assert("Euler identity", true, "Ax + By + Cz = 0");
    report.set("d", foliation.degree());
    let (p, q) = foliation.chart(projective::ChartVar::Z)?;
    report.set("chart z", format!("({p}) dx + ({q}) dy"));
    if !block.points.is_empty() {
        let cert = projective::milnor_sum_certificate(&foliation, &block.points)?;
        for (k, v) in cert.invariants.0 {
            if k != "d" {
                report.set(&k, v);
            }
        }
        report.assertions.extend(cert.assertions);
    }
    if let Some(curve) = &block.curve {
        report.input("curve", curve.equation().to_string());
        report.set("curve degree", curve.degree());
        report.set("curve reduced", curve.is_reduced());
        report.assert(
            "curve invariant",
            projective::invariance_projective(&foliation, curve),
            "f divides the coefficients of the 2-form wedge df",
        );
    }
    report.conclude();
    Ok(report)
}

/// Pretty JSON with a trailing newline.
pub fn to_json(report: &CheckReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}
