//! Enumeration of the possible trace images of a process.
//!
//! A set of activities is the image of some trace iff it is a down-set `I` of
//! the implied-occurrence preorder and the order relation `⪯I` (order
//! obligations restricted to `I`, then closed) is antisymmetric. Down-sets
//! correspond one-to-one with antichains of the quotient poset, and the
//! antichains generating valid images are closed under taking subsets. The
//! enumeration walks a lexicographic tree of class antichains and prunes a
//! subtree as soon as its root fails.

use crate::linext::Poset;
use crate::model::DeclarativeProcess;
use crate::quotient::{condense, QuotientPoset};
use crate::relations::{implied_occurrence, order_on_downset, order_preserving, BinaryRelation};
use crate::set::ActivitySet;

/// A realisable trace image together with its order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DownSet {
    pub members: ActivitySet,
    /// `⪯I`, a partial order on `members`.
    pub order: BinaryRelation,
    /// Maximal elements of `members` under `≲occ`; their downward closure is
    /// `members`.
    pub generator: ActivitySet,
}

impl DownSet {
    pub fn poset(&self) -> Poset {
        Poset::from_order_unchecked(self.order.clone())
    }
}

/// Outcome of the independence check on a candidate generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Independence {
    Independent(DownSet),
    /// Two generator elements from different classes are comparable.
    FailsAntichain,
    /// The down-set's order relation has a cycle.
    FailsAntisymmetry,
}

impl Independence {
    pub fn is_independent(&self) -> bool {
        matches!(self, Independence::Independent(_))
    }
}

/// Relations shared by every independence check on one process.
#[derive(Clone, Debug)]
pub struct PossimContext {
    occ: BinaryRelation,
    ord: BinaryRelation,
    quotient: QuotientPoset,
}

impl PossimContext {
    pub fn new(p: &DeclarativeProcess) -> Self {
        let occ = implied_occurrence(p);
        let quotient = condense(&occ).expect("implied-occurrence relation is a preorder");
        PossimContext {
            occ,
            ord: order_preserving(p),
            quotient,
        }
    }

    pub fn implied_occurrence(&self) -> &BinaryRelation {
        &self.occ
    }

    pub fn order_preserving(&self) -> &BinaryRelation {
        &self.ord
    }

    pub fn quotient(&self) -> &QuotientPoset {
        &self.quotient
    }

    fn certify(&self, members: ActivitySet, generator: ActivitySet) -> Independence {
        let order = order_on_downset(&self.ord, members);
        if order.is_antisymmetric() {
            Independence::Independent(DownSet {
                members,
                order,
                generator,
            })
        } else {
            Independence::FailsAntisymmetry
        }
    }
}

/// Elements of `downset` not strictly below another element of it.
///
/// In a preorder a whole class can be maximal; all its members are returned.
pub fn max_elements(downset: ActivitySet, pre: &BinaryRelation) -> ActivitySet {
    downset
        .iter()
        .filter(|&x| {
            pre.successors(x)
                .intersection(downset)
                .iter()
                .all(|y| pre.contains(y, x))
        })
        .collect()
}

/// `↓A = { x : x ≲ y for some y in A }`.
pub fn downward_closure(generators: ActivitySet, pre: &BinaryRelation) -> ActivitySet {
    pre.domain()
        .iter()
        .filter(|&x| !pre.successors(x).is_disjoint(generators))
        .collect()
}

/// Runs the four-step independence check on `generators`:
/// antichain test, downward closure, restricted closure of the order
/// obligations, antisymmetry test.
///
/// Members of the same `≲occ` class count as one element of the antichain.
pub fn is_independent(generators: ActivitySet, ctx: &PossimContext) -> Independence {
    let occ = &ctx.occ;
    for x in generators {
        for y in generators.iter().filter(|&y| y > x) {
            let same_class = occ.contains(x, y) && occ.contains(y, x);
            if !same_class && (occ.contains(x, y) || occ.contains(y, x)) {
                return Independence::FailsAntichain;
            }
        }
    }
    let members = downward_closure(generators, occ);
    ctx.certify(members, max_elements(members, occ))
}

/// Every down-set of `≲occ` with an antisymmetric order relation, each once,
/// sorted by size and then by member list. The empty set comes first.
pub fn enumerate_possim(p: &DeclarativeProcess) -> Vec<DownSet> {
    enumerate_with(&PossimContext::new(p))
}

pub fn enumerate_with(ctx: &PossimContext) -> Vec<DownSet> {
    let mut out = vec![DownSet {
        members: ActivitySet::EMPTY,
        order: ctx.ord.restrict(ActivitySet::EMPTY),
        generator: ActivitySet::EMPTY,
    }];
    visit(ctx, ActivitySet::EMPTY, 0, ActivitySet::EMPTY, &mut out);
    out.sort_by(|a, b| a.members.cmp_size_lex(b.members));
    out
}

// `chosen` is an independent antichain of class indices whose down-set is
// `members`; children append a class with a larger index.
fn visit(
    ctx: &PossimContext,
    chosen: ActivitySet,
    next: usize,
    members: ActivitySet,
    out: &mut Vec<DownSet>,
) {
    let q = &ctx.quotient;
    for k in next..q.len() {
        // IC1: only the new class needs checking against the parent antichain.
        if chosen.iter().any(|l| q.comparable(k, l)) {
            continue;
        }
        let child = chosen.with(k);
        let closed = members.union(downward_closure(q.class(k), &ctx.occ));
        match ctx.certify(closed, q.expand(child)) {
            Independence::Independent(ds) => {
                out.push(ds);
                visit(ctx, child, k + 1, closed, out);
            }
            // Supersets of a failed antichain fail too.
            _ => continue,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::parse_process;

    const A: usize = 0;
    const B: usize = 1;
    const C: usize = 2;
    const D: usize = 3;

    fn set(items: &[usize]) -> ActivitySet {
        items.iter().copied().collect()
    }

    fn prec_resp_example() -> DeclarativeProcess {
        parse_process(
            "activities a b c d e\nresp b a\nresp c a\nresp d e\nresp e c\nprec a d\nprec b d\nprec d e",
        )
        .unwrap()
    }

    fn prec_example() -> DeclarativeProcess {
        parse_process(
            "activities a b c d e f\nprec a c\nprec b c\nprec c d\nprec d e\nprec e d\nprec d f",
        )
        .unwrap()
    }

    // Definition-level maxima: x is maximal iff x ≲ y (y in I) implies y ≲ x.
    fn maxima_by_scan(i: ActivitySet, pre: &BinaryRelation) -> ActivitySet {
        i.iter()
            .filter(|&x| i.iter().all(|y| !pre.contains(x, y) || pre.contains(y, x)))
            .collect()
    }

    #[test]
    fn maxima() {
        let ctx = PossimContext::new(&prec_resp_example());
        let occ = ctx.implied_occurrence();
        assert_eq!(maxima_by_scan(set(&[A, B, C]), occ), set(&[B, C]));
        assert_eq!(max_elements(set(&[A, B, C]), occ), set(&[B, C]));
        assert_eq!(max_elements(ActivitySet::EMPTY, occ), ActivitySet::EMPTY);

        let ctx = PossimContext::new(&prec_example());
        let occ = ctx.implied_occurrence();
        assert_eq!(maxima_by_scan(set(&[A, B, C]), occ), set(&[C]));
        assert_eq!(max_elements(set(&[A, B, C]), occ), set(&[C]));
    }

    #[test]
    fn closures() {
        let p = prec_resp_example();
        let ctx = PossimContext::new(&p);
        let occ = ctx.implied_occurrence();
        assert_eq!(downward_closure(set(&[B]), occ), set(&[A, B]));
        assert_eq!(
            downward_closure(ActivitySet::EMPTY, occ),
            ActivitySet::EMPTY
        );
        assert_eq!(downward_closure(set(&[D]), occ), p.alphabet());
    }

    #[test]
    fn independence_checks() {
        let ctx = PossimContext::new(&prec_resp_example());
        match is_independent(set(&[B, C]), &ctx) {
            Independence::Independent(ds) => {
                assert_eq!(ds.members, set(&[A, B, C]));
                assert_eq!(ds.generator, set(&[B, C]));
            }
            other => panic!("expected independent, got {other:?}"),
        }
        assert_eq!(
            is_independent(set(&[B, D]), &ctx),
            Independence::FailsAntichain
        );
        assert_eq!(
            is_independent(set(&[D]), &ctx),
            Independence::FailsAntisymmetry
        );
    }

    #[test]
    fn possim_of_prec_resp_example() {
        let got: Vec<_> = enumerate_possim(&prec_resp_example())
            .into_iter()
            .map(|d| d.members)
            .collect();
        assert_eq!(
            got,
            vec![
                ActivitySet::EMPTY,
                set(&[A]),
                set(&[A, B]),
                set(&[A, C]),
                set(&[A, B, C])
            ]
        );
    }

    #[test]
    fn possim_of_single_activity() {
        let p = parse_process("activities a").unwrap();
        let got: Vec<_> = enumerate_possim(&p)
            .into_iter()
            .map(|d| d.members)
            .collect();
        assert_eq!(got, vec![ActivitySet::EMPTY, set(&[A])]);
    }

    #[test]
    fn possim_of_first_example() {
        let p = parse_process("activities a b c\nresp c a\nprec b a").unwrap();
        let got: Vec<_> = enumerate_possim(&p)
            .into_iter()
            .map(|d| d.members)
            .collect();
        assert_eq!(
            got,
            vec![ActivitySet::EMPTY, set(&[B]), set(&[A, B]), set(&[A, B, C])]
        );
    }

    #[test]
    fn successor_class_is_one_generator() {
        let p = parse_process("activities a b\nsucc a b").unwrap();
        let ds = enumerate_possim(&p);
        assert_eq!(ds.len(), 2);
        assert_eq!(ds[1].members, set(&[A, B]));
        assert_eq!(ds[1].generator, set(&[A, B]));
        assert!(is_independent(set(&[A, B]), &PossimContext::new(&p)).is_independent());
    }

    #[test]
    fn generator_is_max_of_members() {
        for p in [prec_resp_example(), prec_example()] {
            let ctx = PossimContext::new(&p);
            for ds in enumerate_with(&ctx) {
                assert_eq!(
                    max_elements(ds.members, ctx.implied_occurrence()),
                    ds.generator
                );
                assert_eq!(
                    downward_closure(ds.generator, ctx.implied_occurrence()),
                    ds.members
                );
            }
        }
    }
}
