//! Trace sets as unions of linear extensions over possible images.
//!
//! Every trace is `(I, π)` for exactly one possible image `I` and one linear
//! extension `π` of `(I, ⪯I)`, so trace sets are assembled image by image and
//! trace counts are sums of extension counts.
//!
//! Single-kind constraint sets get shortcuts:
//! - precedence-only: images are the down-sets of `M`, the alphabet minus
//!   everything in or above a cycle of `≲occ`, and `⪯I = ≲occ|I`;
//! - response-only: the same images, with `⪯I` the transpose of `≲occ|I`;
//! - successor-only: `≲occ` is an equivalence; images are unions of the
//!   classes whose own order is acyclic, ordered by the disjoint union of the
//!   class orders.

use rayon::prelude::*;
use thiserror::Error;

use crate::linext::{count_linear_extensions, linear_extensions, LinextError, Poset};
use crate::model::{classify, DeclarativeProcess, ProcessClass, Trace};
use crate::possim::{downward_closure, enumerate_possim};
use crate::quotient::condense;
use crate::relations::{implied_occurrence, order_on_downset, order_preserving, BinaryRelation};
use crate::set::ActivitySet;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("process is {found}, not {expected}")]
    WrongClass {
        expected: ProcessClass,
        found: ProcessClass,
    },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[default]
    Sequential,
    /// Generate extensions of different images on the rayon pool. Output is
    /// identical to the sequential run.
    Parallel,
}

fn require(p: &DeclarativeProcess, expected: ProcessClass) -> Result<(), TraceError> {
    let found = classify(p);
    // A constraint-free process belongs to every class.
    if found == expected || p.constraints().is_empty() {
        Ok(())
    } else {
        Err(TraceError::WrongClass { expected, found })
    }
}

fn extensions_of(images: Vec<Poset>, exec: Execution) -> Vec<Trace> {
    let mut out: Vec<Trace> = match exec {
        Execution::Sequential => images.iter().flat_map(linear_extensions).collect(),
        Execution::Parallel => images
            .par_iter()
            .map(linear_extensions)
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect(),
    };
    out.sort();
    out
}

/// `M`: the alphabet minus every activity lying in, or above, a class of
/// `≲occ` with at least two members.
pub fn maximal_image(occ: &BinaryRelation) -> ActivitySet {
    let cyclic: ActivitySet = occ
        .domain()
        .iter()
        .filter(|&b| {
            occ.successors(b)
                .without(b)
                .iter()
                .any(|c| occ.contains(c, b))
        })
        .collect();
    occ.domain()
        .iter()
        .filter(|&a| occ.predecessors(a).is_disjoint(cyclic))
        .collect()
}

/// Down-sets of a partial order, via a lexicographic tree over its antichains.
fn downsets(order: &BinaryRelation) -> Vec<ActivitySet> {
    fn walk(
        order: &BinaryRelation,
        elems: &[usize],
        chosen: ActivitySet,
        from: usize,
        out: &mut Vec<ActivitySet>,
    ) {
        for (pos, &x) in elems.iter().enumerate().skip(from) {
            if chosen
                .iter()
                .any(|y| order.contains(x, y) || order.contains(y, x))
            {
                continue;
            }
            let child = chosen.with(x);
            out.push(downward_closure(child, order));
            walk(order, elems, child, pos + 1, out);
        }
    }
    let elems = order.domain().to_vec();
    let mut out = vec![ActivitySet::EMPTY];
    walk(order, &elems, ActivitySet::EMPTY, 0, &mut out);
    out
}

fn general_images(p: &DeclarativeProcess) -> Vec<Poset> {
    enumerate_possim(p).iter().map(|d| d.poset()).collect()
}

fn single_kind_images(p: &DeclarativeProcess, transposed: bool) -> Vec<Poset> {
    let occ = implied_occurrence(p);
    let on_m = occ.restrict(maximal_image(&occ));
    downsets(&on_m)
        .into_iter()
        .map(|i| {
            let order = occ.restrict(i);
            let order = if transposed { order.transpose() } else { order };
            Poset::from_order_unchecked(order)
        })
        .collect()
}

/// The cores: `≲occ` classes whose restricted order relation is acyclic.
pub fn core_occurrence_classes(p: &DeclarativeProcess) -> Vec<ActivitySet> {
    let occ = implied_occurrence(p);
    let ord = order_preserving(p);
    condense(&occ)
        .expect("implied-occurrence relation is a preorder")
        .classes()
        .iter()
        .copied()
        .filter(|&k| order_on_downset(&ord, k).is_antisymmetric())
        .collect()
}

fn successor_images(p: &DeclarativeProcess) -> Vec<Poset> {
    let ord = order_preserving(p);
    let cores: Vec<(ActivitySet, BinaryRelation)> = core_occurrence_classes(p)
        .into_iter()
        .map(|k| (k, order_on_downset(&ord, k)))
        .collect();
    ActivitySet::full(cores.len())
        .subsets()
        .map(|pick| {
            let order = pick
                .iter()
                .fold(ord.restrict(ActivitySet::EMPTY), |acc, i| {
                    acc.union(&cores[i].1)
                });
            Poset::from_order_unchecked(order)
        })
        .collect()
}

/// Traces of any precedence/response/successor process, from its possible
/// images. Sorted by length, then lexicographically.
pub fn traces_general(p: &DeclarativeProcess) -> Vec<Trace> {
    extensions_of(general_images(p), Execution::Sequential)
}

pub fn traces_precedence_only(p: &DeclarativeProcess) -> Result<Vec<Trace>, TraceError> {
    require(p, ProcessClass::PrecedenceOnly)?;
    Ok(extensions_of(
        single_kind_images(p, false),
        Execution::Sequential,
    ))
}

pub fn traces_response_only(p: &DeclarativeProcess) -> Result<Vec<Trace>, TraceError> {
    require(p, ProcessClass::ResponseOnly)?;
    Ok(extensions_of(
        single_kind_images(p, true),
        Execution::Sequential,
    ))
}

pub fn traces_successor_only(p: &DeclarativeProcess) -> Result<Vec<Trace>, TraceError> {
    require(p, ProcessClass::SuccessorOnly)?;
    Ok(extensions_of(successor_images(p), Execution::Sequential))
}

/// All traces of `p`, using the cheapest path for its constraint class.
pub fn traces(p: &DeclarativeProcess) -> Vec<Trace> {
    traces_with(p, Execution::Sequential)
}

pub fn traces_with(p: &DeclarativeProcess, exec: Execution) -> Vec<Trace> {
    let images = match classify(p) {
        ProcessClass::PrecedenceOnly => single_kind_images(p, false),
        ProcessClass::ResponseOnly => single_kind_images(p, true),
        ProcessClass::SuccessorOnly => successor_images(p),
        ProcessClass::General => general_images(p),
    };
    extensions_of(images, exec)
}

/// Number of traces, summed over possible images without enumerating any
/// trace.
pub fn count_traces(p: &DeclarativeProcess) -> Result<u128, LinextError> {
    enumerate_possim(p).iter().try_fold(0u128, |acc, d| {
        acc.checked_add(count_linear_extensions(&d.poset())?)
            .ok_or(LinextError::CountOverflow)
    })
}
