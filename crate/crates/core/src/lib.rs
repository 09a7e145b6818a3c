//! Enumerating and counting the first-passage traces of declarative processes
//! built from precedence, response and successor constraints.
//!
//! The traces of a process are assembled from two relations derived from its
//! constraints: the implied-occurrence preorder `≲occ` decides which sets of
//! activities can form a trace, and the order obligations `→ord` decide how
//! such a set may be arranged. A set `I` is a possible image iff it is a
//! down-set of `≲occ` and `⪯I = (→ord|I)⊕` is antisymmetric; the traces with
//! image `I` are exactly the linear extensions of `(I, ⪯I)`.
//!
//! ```
//! use dectrace::{parse_process, traces};
//!
//! let p = parse_process("activities a b c\nresp c a\nprec b a").unwrap();
//! let lines: Vec<_> = traces(&p).iter().map(|t| p.format_trace(t)).collect();
//! assert_eq!(lines, ["-", "b", "b a", "b c a", "c b a"]);
//! ```

pub mod linext;
pub mod model;
pub mod oracle;
pub mod possim;
pub mod quotient;
pub mod relations;
pub mod set;
pub mod traces;

pub use linext::{
    count_linear_extensions, linear_extensions, restrict_extension, LinextError, Poset,
};
pub use model::{
    classify, expand_successors, parse_process, satisfies, satisfies_all, Activity, Constraint,
    ConstraintKind, DeclarativeProcess, ModelError, ParseError, ParseErrorKind, ProcessClass,
    Trace,
};
pub use oracle::{brute_force_traces, subperms, OracleError};
pub use possim::{enumerate_possim, DownSet, Independence, PossimContext};
pub use quotient::{condense, expand_downset, QuotientPoset};
pub use relations::BinaryRelation;
pub use set::ActivitySet;
pub use traces::{
    count_traces, traces, traces_general, traces_precedence_only, traces_response_only,
    traces_successor_only, traces_with, Execution, TraceError,
};
