//! Activities, constraints, declarative processes and traces.
//!
//! Constraint satisfaction is checked directly on sequences here. Nothing in
//! this module depends on the order-theoretic machinery, which lets the
//! brute-force oracle reuse it as an independent reference.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::set::{ActivitySet, MAX_ELEMENTS};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Activity {
    pub index: usize,
    pub name: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ConstraintKind {
    /// `Prec(a, b)`: if `b` occurs, `a` occurred before it.
    Prec,
    /// `Resp(a, b)`: if `a` occurs, `b` occurs after it.
    Resp,
    /// `Succ(a, b)`: both of the above.
    Succ,
}

impl ConstraintKind {
    pub fn keyword(self) -> &'static str {
        match self {
            ConstraintKind::Prec => "prec",
            ConstraintKind::Resp => "resp",
            ConstraintKind::Succ => "succ",
        }
    }

    fn from_keyword(word: &str) -> Option<Self> {
        match word {
            "prec" => Some(ConstraintKind::Prec),
            "resp" => Some(ConstraintKind::Resp),
            "succ" => Some(ConstraintKind::Succ),
            _ => None,
        }
    }
}

/// A binary constraint between two distinct activities, by index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Constraint {
    pub kind: ConstraintKind,
    pub source: usize,
    pub target: usize,
}

impl Constraint {
    pub fn new(kind: ConstraintKind, source: usize, target: usize) -> Self {
        Constraint {
            kind,
            source,
            target,
        }
    }

    pub fn prec(source: usize, target: usize) -> Self {
        Self::new(ConstraintKind::Prec, source, target)
    }

    pub fn resp(source: usize, target: usize) -> Self {
        Self::new(ConstraintKind::Resp, source, target)
    }

    pub fn succ(source: usize, target: usize) -> Self {
        Self::new(ConstraintKind::Succ, source, target)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("process declares no activities")]
    NoActivities,
    #[error("process declares {0} activities; at most {MAX_ELEMENTS} are supported")]
    TooManyActivities(usize),
    #[error("invalid activity name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidName(String),
    #[error("activity `{0}` declared twice")]
    DuplicateActivity(String),
    #[error("constraint refers to activity index {0}, which is not declared")]
    UnknownActivity(usize),
    #[error("constraint relates activity `{0}` to itself")]
    SelfConstraint(String),
}

/// Shape of a constraint list, used to pick a specialised trace path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProcessClass {
    PrecedenceOnly,
    ResponseOnly,
    SuccessorOnly,
    General,
}

impl ProcessClass {
    pub fn label(self) -> &'static str {
        match self {
            ProcessClass::PrecedenceOnly => "precedence-only",
            ProcessClass::ResponseOnly => "response-only",
            ProcessClass::SuccessorOnly => "successor-only",
            ProcessClass::General => "general",
        }
    }
}

impl fmt::Display for ProcessClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// An activity alphabet plus a deduplicated constraint list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeclarativeProcess {
    activities: Vec<Activity>,
    constraints: Vec<Constraint>,
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.bytes().all(|b| b.is_ascii_alphanumeric() || b == b'_')
}

impl DeclarativeProcess {
    /// Builds a validated process. Duplicate constraints are dropped, keeping
    /// the first occurrence.
    pub fn new<S: AsRef<str>>(
        names: &[S],
        constraints: impl IntoIterator<Item = Constraint>,
    ) -> Result<Self, ModelError> {
        if names.is_empty() {
            return Err(ModelError::NoActivities);
        }
        if names.len() > MAX_ELEMENTS {
            return Err(ModelError::TooManyActivities(names.len()));
        }
        let mut seen = HashSet::new();
        let mut activities = Vec::with_capacity(names.len());
        for (index, name) in names.iter().enumerate() {
            let name = name.as_ref();
            if !is_valid_name(name) {
                return Err(ModelError::InvalidName(name.to_owned()));
            }
            if !seen.insert(name) {
                return Err(ModelError::DuplicateActivity(name.to_owned()));
            }
            activities.push(Activity {
                index,
                name: name.to_owned(),
            });
        }
        let mut process = DeclarativeProcess {
            activities,
            constraints: Vec::new(),
        };
        let mut dedup = HashSet::new();
        for c in constraints {
            for end in [c.source, c.target] {
                if end >= process.activities.len() {
                    return Err(ModelError::UnknownActivity(end));
                }
            }
            if c.source == c.target {
                return Err(ModelError::SelfConstraint(
                    process.activities[c.source].name.clone(),
                ));
            }
            if dedup.insert(c) {
                process.constraints.push(c);
            }
        }
        Ok(process)
    }

    pub fn activities(&self) -> &[Activity] {
        &self.activities
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn len(&self) -> usize {
        self.activities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.activities.is_empty()
    }

    pub fn name(&self, index: usize) -> &str {
        &self.activities[index].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.activities.iter().position(|a| a.name == name)
    }

    /// The whole alphabet as a set.
    pub fn alphabet(&self) -> ActivitySet {
        ActivitySet::full(self.activities.len())
    }

    /// Canonical text form; [`parse_process`] reads it back unchanged.
    pub fn render(&self) -> String {
        let mut out = String::from("activities");
        for a in &self.activities {
            out.push(' ');
            out.push_str(&a.name);
        }
        out.push('\n');
        for c in &self.constraints {
            out.push_str(c.kind.keyword());
            out.push(' ');
            out.push_str(self.name(c.source));
            out.push(' ');
            out.push_str(self.name(c.target));
            out.push('\n');
        }
        out
    }

    /// Formats a trace as space-separated activity names, `-` for the empty trace.
    pub fn format_trace(&self, trace: &Trace) -> String {
        if trace.is_empty() {
            return "-".to_owned();
        }
        trace
            .iter()
            .map(|i| self.name(i))
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Formats a set as `{a,b,c}` in declaration order.
    pub fn format_set(&self, set: ActivitySet) -> String {
        let names: Vec<_> = set.iter().map(|i| self.name(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parses a trace written with activity names, e.g. `"b c a"`; `"-"` or
    /// the empty string give the empty trace. Mostly useful in tests.
    pub fn trace_from_names(&self, text: &str) -> Option<Trace> {
        let text = text.trim();
        if text.is_empty() || text == "-" {
            return Some(Trace::empty());
        }
        let items = text
            .split_whitespace()
            .map(|w| self.index_of(w))
            .collect::<Option<Vec<_>>>()?;
        Trace::new(items)
    }
}

/// A first-passage sequence of activity indices.
///
/// Traces order by length first, then lexicographically by index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Trace(Vec<usize>);

impl Trace {
    /// Returns `None` if an index repeats.
    pub fn new(items: Vec<usize>) -> Option<Self> {
        let mut seen = ActivitySet::EMPTY;
        for &i in &items {
            if i >= MAX_ELEMENTS || seen.contains(i) {
                return None;
            }
            seen.insert(i);
        }
        Some(Trace(items))
    }

    pub(crate) fn from_vec_unchecked(items: Vec<usize>) -> Self {
        debug_assert!(Trace::new(items.clone()).is_some());
        Trace(items)
    }

    pub fn empty() -> Self {
        Trace(Vec::new())
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// The set of activities occurring in the trace.
    pub fn image(&self) -> ActivitySet {
        self.0.iter().copied().collect()
    }

    pub fn position(&self, activity: usize) -> Option<usize> {
        self.0.iter().position(|&x| x == activity)
    }
}

impl Ord for Trace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Replaces every `Succ(a, b)` by `Prec(a, b)` and `Resp(a, b)`.
pub fn expand_successors(p: &DeclarativeProcess) -> DeclarativeProcess {
    let mut constraints = Vec::with_capacity(p.constraints.len());
    for &c in &p.constraints {
        match c.kind {
            ConstraintKind::Succ => {
                constraints.push(Constraint::prec(c.source, c.target));
                constraints.push(Constraint::resp(c.source, c.target));
            }
            _ => constraints.push(c),
        }
    }
    let mut seen = HashSet::new();
    constraints.retain(|c| seen.insert(*c));
    DeclarativeProcess {
        activities: p.activities.clone(),
        constraints,
    }
}

fn prec_holds(t: &Trace, a: usize, b: usize) -> bool {
    match t.position(b) {
        None => true,
        Some(pb) => t.position(a).is_some_and(|pa| pa < pb),
    }
}

fn resp_holds(t: &Trace, a: usize, b: usize) -> bool {
    match t.position(a) {
        None => true,
        Some(pa) => t.position(b).is_some_and(|pb| pa < pb),
    }
}

pub fn satisfies(t: &Trace, c: &Constraint) -> bool {
    let (a, b) = (c.source, c.target);
    match c.kind {
        ConstraintKind::Prec => prec_holds(t, a, b),
        ConstraintKind::Resp => resp_holds(t, a, b),
        ConstraintKind::Succ => prec_holds(t, a, b) && resp_holds(t, a, b),
    }
}

/// True iff `t` satisfies every constraint of `p`.
pub fn satisfies_all(t: &Trace, p: &DeclarativeProcess) -> bool {
    p.constraints.iter().all(|c| satisfies(t, c))
}

/// Classifies the constraint list as written (before successor expansion).
/// A constraint-free process counts as precedence-only.
pub fn classify(p: &DeclarativeProcess) -> ProcessClass {
    let mut kinds = p.constraints.iter().map(|c| c.kind);
    let Some(first) = kinds.next() else {
        return ProcessClass::PrecedenceOnly;
    };
    if kinds.any(|k| k != first) {
        return ProcessClass::General;
    }
    match first {
        ConstraintKind::Prec => ProcessClass::PrecedenceOnly,
        ConstraintKind::Resp => ProcessClass::ResponseOnly,
        ConstraintKind::Succ => ProcessClass::SuccessorOnly,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("no `activities` line")]
    NoActivities,
    #[error("more than {MAX_ELEMENTS} activities declared")]
    TooManyActivities,
    #[error("invalid activity name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidName(String),
    #[error("activity `{0}` declared twice")]
    DuplicateActivity(String),
    #[error("unknown activity `{0}`")]
    UnknownActivity(String),
    #[error("constraint relates activity `{0}` to itself")]
    SelfConstraint(String),
    #[error("`activities` line after the first constraint")]
    ActivitiesAfterConstraints,
    #[error("malformed line: {0}")]
    Malformed(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl ParseError {
    fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

/// Parses the line-oriented process format:
///
/// ```text
/// # comment
/// activities a b c
/// resp c a
/// prec b a
/// ```
///
/// One or more `activities` lines come first; constraint lines (`prec`,
/// `resp`, `succ`) follow.
pub fn parse_process(text: &str) -> Result<DeclarativeProcess, ParseError> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut constraints = Vec::new();
    let mut last_line = 0;

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        last_line = line_no;
        let line = raw.split('#').next().unwrap_or("");
        let mut words = line.split_whitespace();
        let Some(head) = words.next() else {
            continue;
        };
        let err = |kind| ParseError::new(line_no, kind);

        if head == "activities" {
            if !constraints.is_empty() {
                return Err(err(ParseErrorKind::ActivitiesAfterConstraints));
            }
            let before = names.len();
            for w in words {
                if !is_valid_name(w) {
                    return Err(err(ParseErrorKind::InvalidName(w.to_owned())));
                }
                if index.contains_key(w) {
                    return Err(err(ParseErrorKind::DuplicateActivity(w.to_owned())));
                }
                if names.len() == MAX_ELEMENTS {
                    return Err(err(ParseErrorKind::TooManyActivities));
                }
                index.insert(w.to_owned(), names.len());
                names.push(w.to_owned());
            }
            if names.len() == before {
                return Err(err(ParseErrorKind::Malformed(
                    "`activities` needs at least one name".to_owned(),
                )));
            }
            continue;
        }

        let Some(kind) = ConstraintKind::from_keyword(head) else {
            return Err(err(ParseErrorKind::Malformed(format!(
                "unknown keyword `{head}`"
            ))));
        };
        let args: Vec<&str> = words.collect();
        if args.len() != 2 {
            return Err(err(ParseErrorKind::Malformed(format!(
                "`{head}` takes exactly two activities, got {}",
                args.len()
            ))));
        }
        let lookup = |w: &str| {
            index
                .get(w)
                .copied()
                .ok_or_else(|| err(ParseErrorKind::UnknownActivity(w.to_owned())))
        };
        let (a, b) = (lookup(args[0])?, lookup(args[1])?);
        if a == b {
            return Err(err(ParseErrorKind::SelfConstraint(args[0].to_owned())));
        }
        constraints.push(Constraint::new(kind, a, b));
    }

    if names.is_empty() {
        return Err(ParseError::new(
            last_line.max(1),
            ParseErrorKind::NoActivities,
        ));
    }
    // Every failure mode of `new` was already reported with a line number.
    Ok(DeclarativeProcess::new(&names, constraints).expect("validated while parsing"))
}
