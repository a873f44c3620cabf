//! Text rendering of certificate replay reports.

use std::fmt::Write as _;

use rado_core::certificates::{
    AssumeStatus, CertifyReport, CheckOutcome, StepAction, TraceEvent,
};

fn indent(depth: usize) -> String {
    "  ".repeat(depth)
}

pub fn render_report(report: &CertifyReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "certificate: {} ({} branch, {})",
        report.certificate_id, report.branch, report.setting
    )
    .unwrap();
    writeln!(out, "range: n = {}", report.n).unwrap();

    for event in &report.run.trace {
        match event {
            TraceEvent::Assume { path, element, value, color, status } => {
                let note = match status {
                    AssumeStatus::Assumed => String::new(),
                    AssumeStatus::AlreadySet => format!(" (already {color})"),
                    AssumeStatus::Vacuous => {
                        format!(": impossible, {value} already carries the other color; case closes")
                    }
                };
                writeln!(
                    out,
                    "{}case {element} = {value} is {color}{note}",
                    indent(path.len()),
                )
                .unwrap();
            }
            TraceEvent::Step { path, step, x, y, z, conclusion, action, .. } => {
                let suffix = step.equation.suffix();
                let note = match action {
                    StepAction::Forced => String::new(),
                    StepAction::AlreadySet => format!(" (already {})", step.color),
                    StepAction::EarlyContradiction => format!(
                        ": already {}, monochromatic triple; branch closes",
                        step.color.opposite()
                    ),
                };
                writeln!(
                    out,
                    "{}({}, {}, {})_{} => {} is {}   [({}, {}, {}) => {}]{}",
                    indent(path.len() + 1),
                    step.x,
                    step.y,
                    step.z_form(),
                    suffix,
                    step.conclusion,
                    step.color,
                    x,
                    y,
                    z,
                    conclusion,
                    note,
                )
                .unwrap();
            }
            TraceEvent::Close { path, terminal, x, y, z } => {
                writeln!(
                    out,
                    "{}contradiction: ({}, {}, {})_{} = ({}, {}, {}) is monochromatic {}",
                    indent(path.len() + 1),
                    terminal.x,
                    terminal.y,
                    terminal.z_form(),
                    terminal.equation.suffix(),
                    x,
                    y,
                    z,
                    terminal.equation.color(),
                )
                .unwrap();
            }
        }
    }

    match &report.run.outcome {
        CheckOutcome::CertifiedUnsat => {
            writeln!(out, "result: CERTIFIED-UNSAT at n = {}", report.n).unwrap()
        }
        CheckOutcome::StepError(err) => writeln!(out, "result: STEP-ERROR {err}").unwrap(),
    }

    writeln!(out, "chain elements at these parameters:").unwrap();
    for diag in &report.elements {
        let status = if diag.in_range { "in range" } else { "OUT OF RANGE" };
        writeln!(out, "  {} = {}  [{}]", diag.form, diag.value, status).unwrap();
    }
    out
}
