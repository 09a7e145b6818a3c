//! Brute-force reference: filter every permutation of every subset of the
//! alphabet by direct constraint checks.
//!
//! Only the `model` module is used here, so agreement with the order-theoretic
//! pipeline is a genuine cross-check.

use thiserror::Error;

use crate::model::{satisfies_all, DeclarativeProcess, Trace};
use crate::set::ActivitySet;

/// Largest alphabet the oracle accepts by default (8 letters give 109 601
/// candidate sequences).
pub const DEFAULT_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{size} activities exceed the brute-force limit of {limit}")]
    LimitExceeded { size: usize, limit: usize },
}

/// All duplicate-free sequences over `set`, sorted by length then
/// lexicographically.
pub fn subperms(set: ActivitySet, limit: usize) -> Result<Vec<Trace>, OracleError> {
    if set.len() > limit {
        return Err(OracleError::LimitExceeded {
            size: set.len(),
            limit,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(set.len());
    grow(set, &mut prefix, &mut out);
    out.sort();
    Ok(out)
}

fn grow(remaining: ActivitySet, prefix: &mut Vec<usize>, out: &mut Vec<Trace>) {
    out.push(Trace::new(prefix.clone()).expect("prefix has no repeats"));
    for x in remaining {
        prefix.push(x);
        grow(remaining.without(x), prefix, out);
        prefix.pop();
    }
}

pub fn brute_force_traces(p: &DeclarativeProcess) -> Result<Vec<Trace>, OracleError> {
    brute_force_traces_with_limit(p, DEFAULT_LIMIT)
}

/// Candidates are checked against the constraints as written; `Succ` is not
/// expanded.
pub fn brute_force_traces_with_limit(
    p: &DeclarativeProcess,
    limit: usize,
) -> Result<Vec<Trace>, OracleError> {
    Ok(subperms(p.alphabet(), limit)?
        .into_iter()
        .filter(|t| satisfies_all(t, p))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_process;

    fn names(p: &DeclarativeProcess, ts: &[Trace]) -> Vec<String> {
        ts.iter().map(|t| p.format_trace(t)).collect()
    }

    #[test]
    fn subperms_of_three() {
        let p = parse_process("activities a b c").unwrap();
        let all = subperms(p.alphabet(), DEFAULT_LIMIT).unwrap();
        assert_eq!(
            names(&p, &all),
            [
                "-", "a", "b", "c", "a b", "a c", "b a", "b c", "c a", "c b", "a b c", "a c b",
                "b a c", "b c a", "c a b", "c b a"
            ]
        );
    }

    #[test]
    fn subperms_small() {
        assert_eq!(
            subperms(ActivitySet::EMPTY, 8).unwrap(),
            vec![Trace::empty()]
        );
        assert_eq!(subperms(ActivitySet::full(2), 8).unwrap().len(), 5);
    }

    #[test]
    fn subperms_sizes_match_closed_form() {
        for n in 0..=8usize {
            let expected: usize = (0..=n).map(|k| ((n - k + 1)..=n).product::<usize>()).sum();
            assert_eq!(
                subperms(ActivitySet::full(n), 8).unwrap().len(),
                expected,
                "n = {n}"
            );
        }
    }

    #[test]
    fn limit_enforced() {
        assert_eq!(
            subperms(ActivitySet::full(9), 8),
            Err(OracleError::LimitExceeded { size: 9, limit: 8 })
        );
    }

    #[test]
    fn first_example() {
        let p = parse_process("activities a b c\nresp c a\nprec b a").unwrap();
        let ts = brute_force_traces(&p).unwrap();
        assert_eq!(names(&p, &ts), ["-", "b", "b a", "b c a", "c b a"]);
    }

    #[test]
    fn precedence_example() {
        let p = parse_process(
            "activities a b c d e f\nprec a c\nprec b c\nprec c d\nprec d e\nprec e d\nprec d f",
        )
        .unwrap();
        let ts = brute_force_traces(&p).unwrap();
        assert_eq!(
            names(&p, &ts),
            ["-", "a", "b", "a b", "b a", "a b c", "b a c"]
        );
    }

    #[test]
    fn successor_pair() {
        let p = parse_process("activities a b\nsucc a b").unwrap();
        let ts = brute_force_traces(&p).unwrap();
        assert_eq!(names(&p, &ts), ["-", "a b"]);
    }
}
