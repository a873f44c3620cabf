//! Forcing-chain certificates for the upper bounds, and their checker.
//!
//! A certificate is a case-split tree over the colors of a few elements.
//! Each branch carries forcing steps: a triple `(x, y, z)` with
//! `x + y + shift = z` under one equation forces the one element not yet
//! pinned to the equation's color to take the opposite color. A branch
//! closes when a fully colored monochromatic triple appears. If every branch
//! closes, no valid coloring of `[alpha, n]` exists.
//!
//! Elements are linear forms in `(k, c, alpha)`; the checker instantiates
//! them at concrete rational parameters and walks the tree with an exact
//! color map keyed on evaluated values, so colliding elements are handled by
//! value, not by name.

mod form;
mod parse;

pub use form::LinearForm;
pub use parse::parse_certificate_tree;

use std::collections::BTreeMap;
use std::fmt;

use crate::equation::{Color, EquationKind};
use crate::error::RadoError;
use crate::formulas::{branch_of, finite_value, Branch, ParameterPair};
use crate::rational::{rat, Rational};

const LOW_BRANCH_CERT: &str = include_str!("../../certs/low_branch.cert");
const HIGH_BRANCH_CERT: &str = include_str!("../../certs/high_branch.cert");

/// One forcing step: the two premise elements of the triple carry the
/// equation's color, so `conclusion` must take `color` (the opposite).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingStep {
    pub x: LinearForm,
    pub y: LinearForm,
    pub equation: EquationKind,
    pub conclusion: LinearForm,
    pub color: Color,
}

impl ForcingStep {
    pub fn z_form(&self) -> LinearForm {
        &(&self.x + &self.y) + &shift_form(self.equation)
    }
}

/// The closing triple of a branch; `z = x + y + shift` is implied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalTriple {
    pub x: LinearForm,
    pub y: LinearForm,
    pub equation: EquationKind,
}

impl TerminalTriple {
    pub fn z_form(&self) -> LinearForm {
        &(&self.x + &self.y) + &shift_form(self.equation)
    }
}

pub fn shift_form(equation: EquationKind) -> LinearForm {
    match equation {
        EquationKind::CEquation => LinearForm::c(),
        EquationKind::KEquation => LinearForm::k(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertBranch {
    pub steps: Vec<ForcingStep>,
    pub tail: CertTail,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum CertTail {
    Contradiction(TerminalTriple),
    Split(Box<BranchNode>),
}

/// A case split on the color of one element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchNode {
    pub element: LinearForm,
    pub red: CertBranch,
    pub blue: CertBranch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Setting {
    Discrete,
    Continuous,
}

impl fmt::Display for Setting {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Setting::Discrete => "discrete",
            Setting::Continuous => "continuous",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateMeta {
    pub id: String,
    pub side_conditions: String,
    /// Steps whose printed source was restored during transcription.
    pub repair_notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub setting: Setting,
    pub branch: Branch,
    pub root: BranchNode,
    pub meta: CertificateMeta,
}

impl Certificate {
    /// The branch reached by taking `path` colors from the root.
    pub fn branch_at(&self, path: &[Color]) -> Option<&CertBranch> {
        let mut node = &self.root;
        let mut current: Option<&CertBranch> = None;
        for color in path {
            let next_node = match current {
                None => node,
                Some(branch) => match &branch.tail {
                    CertTail::Split(inner) => {
                        node = inner;
                        node
                    }
                    CertTail::Contradiction(_) => return None,
                },
            };
            current = Some(match color {
                Color::Red => &next_node.red,
                Color::Blue => &next_node.blue,
            });
        }
        current
    }

    fn branch_at_mut(&mut self, path: &[Color]) -> Option<&mut CertBranch> {
        let mut node = &mut self.root;
        for (i, color) in path.iter().enumerate() {
            let branch = match color {
                Color::Red => &mut node.red,
                Color::Blue => &mut node.blue,
            };
            if i + 1 == path.len() {
                return Some(branch);
            }
            node = match &mut branch.tail {
                CertTail::Split(inner) => inner,
                CertTail::Contradiction(_) => return None,
            };
        }
        None
    }

    /// Mutable access to one step, addressed by branch path and index.
    pub fn step_mut(&mut self, path: &[Color], index: usize) -> Option<&mut ForcingStep> {
        self.branch_at_mut(path)?.steps.get_mut(index)
    }

    /// Mutable access to a branch's terminal triple, when it has one.
    pub fn terminal_mut(&mut self, path: &[Color]) -> Option<&mut TerminalTriple> {
        match &mut self.branch_at_mut(path)?.tail {
            CertTail::Contradiction(t) => Some(t),
            CertTail::Split(_) => None,
        }
    }

    /// Every step in the tree with its branch path and index.
    pub fn all_steps(&self) -> Vec<(Vec<Color>, usize, &ForcingStep)> {
        let mut out = Vec::new();
        collect_steps(&self.root, &mut Vec::new(), &mut out);
        out
    }
}

fn collect_steps<'a>(
    node: &'a BranchNode,
    path: &mut Vec<Color>,
    out: &mut Vec<(Vec<Color>, usize, &'a ForcingStep)>,
) {
    for (color, branch) in [(Color::Red, &node.red), (Color::Blue, &node.blue)] {
        path.push(color);
        for (i, step) in branch.steps.iter().enumerate() {
            out.push((path.clone(), i, step));
        }
        if let CertTail::Split(inner) = &branch.tail {
            collect_steps(inner, path, out);
        }
        path.pop();
    }
}

/// Why a certificate step failed to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepReason {
    IdentityFails,
    OutOfRange,
    PremiseUncolored,
    PremiseWrongColor,
    /// The claimed conclusion color equals the equation's own color, which no
    /// forcing step can derive.
    UnsoundConclusion,
}

impl fmt::Display for StepReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepReason::IdentityFails => "identity-fails",
            StepReason::OutOfRange => "out-of-range",
            StepReason::PremiseUncolored => "premise-uncolored",
            StepReason::PremiseWrongColor => "premise-wrong-color",
            StepReason::UnsoundConclusion => "unsound-conclusion",
        })
    }
}

/// Where in a branch a failure occurred.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Assumption,
    Step(usize),
    Terminal,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Assumption => f.write_str("assumption"),
            Location::Step(i) => write!(f, "step {}", i + 1),
            Location::Terminal => f.write_str("terminal"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepError {
    pub path: Vec<Color>,
    pub location: Location,
    pub reason: StepReason,
    pub detail: String,
}

impl fmt::Display for StepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let path: Vec<&str> = self.path.iter().map(|c| c.name()).collect();
        write!(
            f,
            "branch [{}], {}: {} ({})",
            path.join("/"),
            self.location,
            self.reason,
            self.detail
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CheckOutcome {
    CertifiedUnsat,
    StepError(StepError),
}

impl CheckOutcome {
    pub fn is_certified(&self) -> bool {
        matches!(self, CheckOutcome::CertifiedUnsat)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssumeStatus {
    Assumed,
    AlreadySet,
    /// The assumed color contradicts an already forced color, so the case is
    /// impossible and the branch closes without walking its steps.
    Vacuous,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepAction {
    Forced,
    AlreadySet,
    /// The conclusion element already carries the equation's color: the
    /// triple is monochromatic and the branch closes here.
    EarlyContradiction,
}

/// One line of the checker's walk, for rendering traces.
#[derive(Debug, Clone, PartialEq, Eq)]
#[allow(clippy::large_enum_variant)]
pub enum TraceEvent {
    Assume {
        path: Vec<Color>,
        element: LinearForm,
        value: Rational,
        color: Color,
        status: AssumeStatus,
    },
    Step {
        path: Vec<Color>,
        index: usize,
        step: ForcingStep,
        x: Rational,
        y: Rational,
        z: Rational,
        conclusion: Rational,
        action: StepAction,
    },
    Close {
        path: Vec<Color>,
        terminal: TerminalTriple,
        x: Rational,
        y: Rational,
        z: Rational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckRun {
    pub outcome: CheckOutcome,
    pub trace: Vec<TraceEvent>,
}

struct Checker<'a> {
    c: &'a Rational,
    k: &'a Rational,
    alpha: Rational,
    n: &'a Rational,
    discrete: bool,
    trace: Vec<TraceEvent>,
}

type ColorMap = BTreeMap<Rational, Color>;

impl Checker<'_> {
    fn eval(&self, form: &LinearForm) -> Rational {
        form.eval(self.c, self.k, &self.alpha)
    }

    fn in_range(&self, value: &Rational) -> bool {
        *value >= self.alpha && value <= self.n && (!self.discrete || value.is_integer())
    }

    fn domain(&self) -> String {
        if self.discrete {
            format!("integers in [1, {}]", self.n)
        } else {
            format!("[{}, {}]", self.alpha, self.n)
        }
    }

    fn walk_node(
        &mut self,
        node: &BranchNode,
        map: &ColorMap,
        path: &mut Vec<Color>,
    ) -> Result<(), StepError> {
        for (color, branch) in [(Color::Red, &node.red), (Color::Blue, &node.blue)] {
            path.push(color);
            let value = self.eval(&node.element);
            if !self.in_range(&value) {
                let err = StepError {
                    path: path.clone(),
                    location: Location::Assumption,
                    reason: StepReason::OutOfRange,
                    detail: format!(
                        "case element {} = {} is outside {}",
                        node.element,
                        value,
                        self.domain()
                    ),
                };
                path.pop();
                return Err(err);
            }
            let status = match map.get(&value) {
                None => AssumeStatus::Assumed,
                Some(existing) if *existing == color => AssumeStatus::AlreadySet,
                Some(_) => AssumeStatus::Vacuous,
            };
            self.trace.push(TraceEvent::Assume {
                path: path.clone(),
                element: node.element.clone(),
                value: value.clone(),
                color,
                status,
            });
            if status != AssumeStatus::Vacuous {
                let mut extended = map.clone();
                extended.insert(value, color);
                let result = self.walk_branch(branch, extended, path);
                if let Err(err) = result {
                    path.pop();
                    return Err(err);
                }
            }
            path.pop();
        }
        Ok(())
    }

    fn walk_branch(
        &mut self,
        branch: &CertBranch,
        mut map: ColorMap,
        path: &mut Vec<Color>,
    ) -> Result<(), StepError> {
        let fail = |path: &[Color], location, reason, detail: String| StepError {
            path: path.to_vec(),
            location,
            reason,
            detail,
        };

        for (index, step) in branch.steps.iter().enumerate() {
            let location = Location::Step(index);
            let eq_color = step.equation.color();
            if step.color != eq_color.opposite() {
                return Err(fail(
                    path,
                    location,
                    StepReason::UnsoundConclusion,
                    format!(
                        "a {}-equation step can only force {}, not {}",
                        step.equation.suffix(),
                        eq_color.opposite(),
                        step.color
                    ),
                ));
            }
            let x = self.eval(&step.x);
            let y = self.eval(&step.y);
            let z = &x + &y + self.eval(&shift_form(step.equation));
            let conclusion = self.eval(&step.conclusion);
            if conclusion != x && conclusion != y && conclusion != z {
                return Err(fail(
                    path,
                    location,
                    StepReason::IdentityFails,
                    format!(
                        "conclusion {} = {} is not a member of the triple ({}, {}, {})",
                        step.conclusion, conclusion, x, y, z
                    ),
                ));
            }
            for value in [&x, &y, &z] {
                if !self.in_range(value) {
                    return Err(fail(
                        path,
                        location,
                        StepReason::OutOfRange,
                        format!("element {} is outside {}", value, self.domain()),
                    ));
                }
            }
            let mut premises = vec![x.clone(), y.clone(), z.clone()];
            premises.sort();
            premises.dedup();
            premises.retain(|v| *v != conclusion);
            for premise in &premises {
                match map.get(premise) {
                    None => {
                        return Err(fail(
                            path,
                            location,
                            StepReason::PremiseUncolored,
                            format!("premise {premise} has no color yet"),
                        ));
                    }
                    Some(col) if *col != eq_color => {
                        return Err(fail(
                            path,
                            location,
                            StepReason::PremiseWrongColor,
                            format!("premise {premise} must be {eq_color}, found {col}"),
                        ));
                    }
                    Some(_) => {}
                }
            }
            let action = match map.get(&conclusion) {
                None => {
                    map.insert(conclusion.clone(), step.color);
                    StepAction::Forced
                }
                Some(col) if *col == step.color => StepAction::AlreadySet,
                Some(_) => StepAction::EarlyContradiction,
            };
            self.trace.push(TraceEvent::Step {
                path: path.clone(),
                index,
                step: step.clone(),
                x,
                y,
                z,
                conclusion,
                action,
            });
            if action == StepAction::EarlyContradiction {
                return Ok(());
            }
        }

        match &branch.tail {
            CertTail::Contradiction(terminal) => {
                let eq_color = terminal.equation.color();
                let x = self.eval(&terminal.x);
                let y = self.eval(&terminal.y);
                let z = &x + &y + self.eval(&shift_form(terminal.equation));
                for value in [&x, &y, &z] {
                    if !self.in_range(value) {
                        return Err(fail(
                            path,
                            Location::Terminal,
                            StepReason::OutOfRange,
                            format!("element {} is outside {}", value, self.domain()),
                        ));
                    }
                }
                let mut members = vec![x.clone(), y.clone(), z.clone()];
                members.sort();
                members.dedup();
                for member in &members {
                    match map.get(member) {
                        None => {
                            return Err(fail(
                                path,
                                Location::Terminal,
                                StepReason::PremiseUncolored,
                                format!("terminal element {member} has no color yet"),
                            ));
                        }
                        Some(col) if *col != eq_color => {
                            return Err(fail(
                                path,
                                Location::Terminal,
                                StepReason::PremiseWrongColor,
                                format!("terminal element {member} must be {eq_color}, found {col}"),
                            ));
                        }
                        Some(_) => {}
                    }
                }
                self.trace.push(TraceEvent::Close {
                    path: path.clone(),
                    terminal: terminal.clone(),
                    x,
                    y,
                    z,
                });
                Ok(())
            }
            CertTail::Split(inner) => self.walk_node(inner, &map, path),
        }
    }
}

/// Walks every branch of `cert` at concrete parameters, maintaining a color
/// map over evaluated element values. Returns `CertifiedUnsat` iff all
/// branches close.
pub fn check_certificate(
    cert: &Certificate,
    c: &Rational,
    k: &Rational,
    alpha: &Rational,
    n: &Rational,
) -> Result<CheckRun, RadoError> {
    ParameterPair::new(c.clone(), k.clone(), Some(alpha.clone()))?;
    if cert.setting == Setting::Discrete {
        if *alpha != rat(1) {
            return Err(RadoError::params(
                "discrete certificates are checked at alpha = 1",
            ));
        }
        if !c.is_integer() || !k.is_integer() || !n.is_integer() {
            return Err(RadoError::params(
                "discrete certificates need integer c, k, n",
            ));
        }
    }
    let mut checker = Checker {
        c,
        k,
        alpha: alpha.clone(),
        n,
        discrete: cert.setting == Setting::Discrete,
        trace: Vec::new(),
    };
    let outcome = match checker.walk_node(&cert.root, &ColorMap::new(), &mut Vec::new()) {
        Ok(()) => CheckOutcome::CertifiedUnsat,
        Err(err) => CheckOutcome::StepError(err),
    };
    Ok(CheckRun {
        outcome,
        trace: checker.trace,
    })
}

fn map_branch(branch: &CertBranch, f: &impl Fn(&LinearForm) -> LinearForm) -> CertBranch {
    CertBranch {
        steps: branch
            .steps
            .iter()
            .map(|s| ForcingStep {
                x: f(&s.x),
                y: f(&s.y),
                equation: s.equation,
                conclusion: f(&s.conclusion),
                color: s.color,
            })
            .collect(),
        tail: match &branch.tail {
            CertTail::Contradiction(t) => CertTail::Contradiction(TerminalTriple {
                x: f(&t.x),
                y: f(&t.y),
                equation: t.equation,
            }),
            CertTail::Split(node) => CertTail::Split(Box::new(map_node(node, f))),
        },
    }
}

fn map_node(node: &BranchNode, f: &impl Fn(&LinearForm) -> LinearForm) -> BranchNode {
    BranchNode {
        element: f(&node.element),
        red: map_branch(&node.red, f),
        blue: map_branch(&node.blue, f),
    }
}

/// The four bundled certificates: discrete and continuous transcriptions of
/// the low-branch (`k <= 2c`) and high-branch (`k > 2c`) chains. Each chain
/// is stored once, parametrically in alpha; the discrete variants are the
/// alpha = 1 specialization.
pub fn builtin_certificates() -> Vec<Certificate> {
    let low = parse_certificate_tree(LOW_BRANCH_CERT).expect("bundled low-branch chain parses");
    let high = parse_certificate_tree(HIGH_BRANCH_CERT).expect("bundled high-branch chain parses");
    let one = rat(1);
    let at_unit_alpha = |form: &LinearForm| form.substitute_alpha(&one);

    vec![
        Certificate {
            setting: Setting::Discrete,
            branch: Branch::LowBranch,
            root: map_node(&low, &at_unit_alpha),
            meta: CertificateMeta {
                id: "discrete-low".into(),
                side_conditions: "integers 1 <= c <= k, c = k (mod 2), k <= 2c; colors [1, k+3c+5]"
                    .into(),
                repair_notes: vec![
                    "the blue-solution target is the k-equation x+y+k=z throughout; the source \
                     chain twice abbreviates it as x+y=z"
                        .into(),
                ],
            },
        },
        Certificate {
            setting: Setting::Discrete,
            branch: Branch::HighBranch,
            root: map_node(&high, &at_unit_alpha),
            meta: CertificateMeta {
                id: "discrete-high".into(),
                side_conditions: "integers 1 <= c <= k, c = k (mod 2), k > 2c; colors [1, 2k+c+4]"
                    .into(),
                repair_notes: vec![
                    "two steps of the (1 red, k-2c blue) case restored from the truncated `k-c+` \
                     of the source: (k-c+1, k-c+1, 2k-c+2)_c forcing k-c+1 blue, and \
                     (k-c+1, c+2, 2k+3)_k forcing 2k+3 red"
                        .into(),
                ],
            },
        },
        Certificate {
            setting: Setting::Continuous,
            branch: Branch::LowBranch,
            root: low.clone(),
            meta: CertificateMeta {
                id: "continuous-low".into(),
                side_conditions:
                    "1 <= c <= k, k <= 2c, alpha > 0 (same parity when c, k are integers); \
                     colors [alpha, k+3c+5*alpha]"
                        .into(),
                repair_notes: vec![],
            },
        },
        Certificate {
            setting: Setting::Continuous,
            branch: Branch::HighBranch,
            root: high.clone(),
            meta: CertificateMeta {
                id: "continuous-high".into(),
                side_conditions:
                    "1 <= c <= k, k > 2c, alpha > 0 (same parity when c, k are integers); \
                     colors [alpha, 2k+c+4*alpha]; needs k-2c >= alpha"
                        .into(),
                repair_notes: vec![
                    "(alpha red, k-2c red) case: third element of (alpha, k-2c, _)_c restored to \
                     k-c+alpha; the source prints k-2c+alpha, which breaks the sum identity"
                        .into(),
                    "(alpha red, k-2c blue) case: third element of (k-c+alpha, k-c+alpha, _)_c \
                     restored to 2k-c+2alpha; the source prints 2k-c+alpha"
                        .into(),
                    "(alpha red, k-2c blue) case: the step forcing 2k+3alpha red restored to \
                     (k-c+alpha, c+2alpha, 2k+3alpha)_k; the source prints \
                     (k-c+alpha, c+alpha, 2k+alpha)_k, which breaks the sum identity"
                        .into(),
                    "(alpha blue, k-2c blue) case: third element of the first step restored to \
                     2k+c+4alpha; the source prints 2k+c+4 with the alpha scaling missing"
                        .into(),
                ],
            },
        },
    ]
}

/// Diagnostic row for one chain element at concrete parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementDiagnostic {
    pub form: LinearForm,
    pub value: Rational,
    pub in_range: bool,
}

/// Report from [`certify_upper_bound`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyReport {
    pub certificate_id: String,
    pub setting: Setting,
    pub branch: Branch,
    pub n: Rational,
    pub run: CheckRun,
    pub elements: Vec<ElementDiagnostic>,
    pub all_elements_in_range: bool,
}

fn collect_forms(node: &BranchNode, out: &mut Vec<LinearForm>) {
    out.push(node.element.clone());
    for branch in [&node.red, &node.blue] {
        for step in &branch.steps {
            out.push(step.x.clone());
            out.push(step.y.clone());
            out.push(step.z_form());
            out.push(step.conclusion.clone());
        }
        match &branch.tail {
            CertTail::Contradiction(t) => {
                out.push(t.x.clone());
                out.push(t.y.clone());
                out.push(t.z_form());
            }
            CertTail::Split(inner) => collect_forms(inner, out),
        }
    }
}

/// Selects the bundled certificate matching the branch and setting, checks
/// it at `n` = the formula value, and reports where every chain element
/// lands relative to the domain. Out-of-range elements are reported, never
/// suppressed; they explain a failed check at extreme alpha.
pub fn certify_upper_bound(
    c: &Rational,
    k: &Rational,
    alpha: Option<&Rational>,
) -> Result<CertifyReport, RadoError> {
    let branch = branch_of(c, k)?;
    if branch == Branch::ParityInfinite {
        return Err(RadoError::params(format!(
            "c={c}, k={k} is parity-infinite: there is no finite upper bound to certify"
        )));
    }
    let setting = match alpha {
        Some(_) => Setting::Continuous,
        None => Setting::Discrete,
    };
    if setting == Setting::Discrete && (!c.is_integer() || !k.is_integer()) {
        return Err(RadoError::params(
            "discrete certification needs integer c and k; pass alpha for the continuous setting",
        ));
    }
    let alpha_value = alpha.cloned().unwrap_or_else(|| rat(1));
    let n = finite_value(branch, c, k, &alpha_value).expect("finite branch");
    let cert = builtin_certificates()
        .into_iter()
        .find(|cert| cert.setting == setting && cert.branch == branch)
        .expect("a bundled certificate exists for every finite branch");

    let run = check_certificate(&cert, c, k, &alpha_value, &n)?;

    let mut forms = Vec::new();
    collect_forms(&cert.root, &mut forms);
    forms.sort_by_key(|f| f.canonical());
    forms.dedup();
    let mut elements: Vec<ElementDiagnostic> = forms
        .into_iter()
        .map(|form| {
            let value = form.eval(c, k, &alpha_value);
            let in_range = value >= alpha_value
                && value <= n
                && (setting == Setting::Continuous || value.is_integer());
            ElementDiagnostic { form, value, in_range }
        })
        .collect();
    elements.sort_by(|a, b| a.value.cmp(&b.value).then_with(|| a.form.canonical().cmp(&b.form.canonical())));
    let all_elements_in_range = elements.iter().all(|e| e.in_range);

    Ok(CertifyReport {
        certificate_id: cert.meta.id.clone(),
        setting,
        branch,
        n,
        run,
        elements,
        all_elements_in_range,
    })
}

/// Canonical text for a certificate tree, in the same format the parser
/// accepts. Round-trips through [`parse_certificate_tree`].
pub fn write_certificate_tree(node: &BranchNode) -> String {
    let mut out = String::new();
    write_node(node, &mut out);
    out
}

fn write_node(node: &BranchNode, out: &mut String) {
    for (color, branch) in [(Color::Red, &node.red), (Color::Blue, &node.blue)] {
        out.push_str(&format!(
            "branch {} {} {{\n",
            node.element.canonical(),
            color.letter()
        ));
        for step in &branch.steps {
            out.push_str(&format!(
                "step {} {} {} => {} {}\n",
                step.x.canonical(),
                step.y.canonical(),
                step.equation.suffix(),
                step.conclusion.canonical(),
                step.color.letter()
            ));
        }
        match &branch.tail {
            CertTail::Contradiction(t) => {
                out.push_str(&format!(
                    "contra {} {} {}\n",
                    t.x.canonical(),
                    t.y.canonical(),
                    t.equation.suffix()
                ));
            }
            CertTail::Split(inner) => write_node(inner, out),
        }
        out.push_str("}\n");
    }
}
