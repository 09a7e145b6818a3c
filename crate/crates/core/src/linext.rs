//! Linear extensions of finite posets.

use std::collections::HashMap;

use thiserror::Error;

use crate::model::Trace;
use crate::relations::BinaryRelation;
use crate::set::ActivitySet;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinextError {
    #[error("order is not reflexive and transitive on the poset's elements")]
    NotAPreorder,
    #[error("order is not antisymmetric")]
    NotAntisymmetric,
    #[error("linear extension count overflows u128")]
    CountOverflow,
}

/// A finite poset over a subset of activity indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: ActivitySet,
    order: BinaryRelation,
    // strict predecessors of each element, within `elements`
    below: Vec<ActivitySet>,
}

impl Poset {
    /// `order` is restricted to `elements` and must be a partial order there.
    pub fn new(elements: ActivitySet, order: &BinaryRelation) -> Result<Self, LinextError> {
        let order = order.restrict(elements);
        if order.domain() != elements || !order.is_preorder() {
            return Err(LinextError::NotAPreorder);
        }
        if !order.is_antisymmetric() {
            return Err(LinextError::NotAntisymmetric);
        }
        Ok(Self::from_order_unchecked(order))
    }

    /// The poset on `0..size` generated by `pairs`.
    pub fn generated_by(
        size: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, LinextError> {
        let order = BinaryRelation::from_pairs(size, pairs).closure();
        Self::new(order.domain(), &order)
    }

    /// `order` must already be a partial order on its domain.
    pub(crate) fn from_order_unchecked(order: BinaryRelation) -> Self {
        debug_assert!(order.is_partial_order());
        let elements = order.domain();
        let mut below = vec![ActivitySet::EMPTY; order.size()];
        for (i, j) in order.pairs() {
            if i != j {
                below[j].insert(i);
            }
        }
        Poset {
            elements,
            order,
            below,
        }
    }

    pub fn elements(&self) -> ActivitySet {
        self.elements
    }

    pub fn order(&self) -> &BinaryRelation {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Induced subposet on `subset ∩ elements`.
    pub fn induced(&self, subset: ActivitySet) -> Poset {
        Poset::from_order_unchecked(self.order.restrict(subset))
    }

    /// Elements of `remaining` with no strict predecessor in `remaining`.
    fn minimal_in(&self, remaining: ActivitySet) -> impl Iterator<Item = usize> + '_ {
        remaining
            .iter()
            .filter(move |&x| self.below[x].is_disjoint(remaining))
    }

    /// True iff `seq` lists every element once, respecting the order.
    pub fn is_linear_extension(&self, seq: &Trace) -> bool {
        if seq.len() != self.elements.len() || seq.image() != self.elements {
            return false;
        }
        let mut placed = ActivitySet::EMPTY;
        for x in seq.iter() {
            if !self.below[x].is_subset(placed) {
                return false;
            }
            placed.insert(x);
        }
        true
    }
}

/// All linear extensions, in lexicographic order of element indices.
///
/// Built by repeatedly choosing a minimal remaining element, smallest index
/// first; every branch ends in an extension, so the work is proportional to
/// the output size times a polynomial in `|P|`.
pub fn linear_extensions(p: &Poset) -> Vec<Trace> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(p.len());
    extend(p, p.elements, &mut prefix, &mut out);
    out
}

fn extend(p: &Poset, remaining: ActivitySet, prefix: &mut Vec<usize>, out: &mut Vec<Trace>) {
    if remaining.is_empty() {
        out.push(Trace::from_vec_unchecked(prefix.clone()));
        return;
    }
    for x in p.minimal_in(remaining) {
        prefix.push(x);
        extend(p, remaining.without(x), prefix, out);
        prefix.pop();
    }
}

/// Number of linear extensions, by counting maximal chains in the lattice of
/// down-sets (memoised on the set of placed elements).
pub fn count_linear_extensions(p: &Poset) -> Result<u128, LinextError> {
    let mut memo = HashMap::new();
    count_from(p, ActivitySet::EMPTY, &mut memo)
}

fn count_from(
    p: &Poset,
    placed: ActivitySet,
    memo: &mut HashMap<ActivitySet, u128>,
) -> Result<u128, LinextError> {
    if placed == p.elements {
        return Ok(1);
    }
    if let Some(&n) = memo.get(&placed) {
        return Ok(n);
    }
    let remaining = p.elements.difference(placed);
    let mut total: u128 = 0;
    for x in p.minimal_in(remaining) {
        let sub = count_from(p, placed.with(x), memo)?;
        total = total.checked_add(sub).ok_or(LinextError::CountOverflow)?;
    }
    memo.insert(placed, total);
    Ok(total)
}

/// `t|_Q`: drops every item outside `subset`, keeping the order of the rest.
pub fn restrict_extension(t: &Trace, subset: ActivitySet) -> Trace {
    Trace::from_vec_unchecked(t.iter().filter(|&x| subset.contains(x)).collect())
}
