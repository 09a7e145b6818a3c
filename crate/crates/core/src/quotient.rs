//! Condensing a preorder to the partial order on its equivalence classes.

use thiserror::Error;

use crate::relations::BinaryRelation;
use crate::set::ActivitySet;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum QuotientError {
    #[error("relation is not a preorder")]
    NotAPreorder,
    #[error("class set {0:?} is not a down-set of the quotient order")]
    NotADownSet(ActivitySet),
}

/// Classes of mutually related elements, ordered by the induced partial order.
///
/// Class `k` is the class whose smallest member is the `k`-th smallest
/// representative, so indices follow declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoset {
    classes: Vec<ActivitySet>,
    class_of: Vec<Option<usize>>,
    order: BinaryRelation,
}

impl QuotientPoset {
    pub fn classes(&self) -> &[ActivitySet] {
        &self.classes
    }

    pub fn class(&self, k: usize) -> ActivitySet {
        self.classes[k]
    }

    /// Class index of `activity`, or `None` if it is outside the preorder's domain.
    pub fn class_of(&self, activity: usize) -> Option<usize> {
        self.class_of.get(activity).copied().flatten()
    }

    /// Partial order over class indices.
    pub fn order(&self) -> &BinaryRelation {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Every class index.
    pub fn all_classes(&self) -> ActivitySet {
        ActivitySet::full(self.classes.len())
    }

    pub fn comparable(&self, k: usize, l: usize) -> bool {
        self.order.contains(k, l) || self.order.contains(l, k)
    }

    pub fn is_downset(&self, class_set: ActivitySet) -> bool {
        class_set
            .iter()
            .all(|k| self.order.predecessors(k).is_subset(class_set))
    }

    /// Union of the classes in `class_set` (the map from quotient down-sets to
    /// down-sets of the original preorder).
    pub fn expand(&self, class_set: ActivitySet) -> ActivitySet {
        class_set
            .iter()
            .fold(ActivitySet::EMPTY, |acc, k| acc.union(self.classes[k]))
    }
}

/// Groups mutually related elements of a preorder into classes and orders
/// the classes.
pub fn condense(pre: &BinaryRelation) -> Result<QuotientPoset, QuotientError> {
    if !pre.is_preorder() {
        return Err(QuotientError::NotAPreorder);
    }
    let mut classes = Vec::new();
    let mut class_of = vec![None; pre.size()];
    for i in pre.domain() {
        if class_of[i].is_some() {
            continue;
        }
        let members: ActivitySet = pre
            .successors(i)
            .iter()
            .filter(|&j| pre.contains(j, i))
            .collect();
        for j in members {
            class_of[j] = Some(classes.len());
        }
        classes.push(members);
    }
    let reps: Vec<usize> = classes
        .iter()
        .map(|c| c.first().expect("classes are nonempty"))
        .collect();
    let mut order = BinaryRelation::empty(classes.len());
    for (k, &rk) in reps.iter().enumerate() {
        for (l, &rl) in reps.iter().enumerate() {
            if pre.contains(rk, rl) {
                order.insert(k, l);
            }
        }
    }
    Ok(QuotientPoset {
        classes,
        class_of,
        order,
    })
}

/// Maps a down-set of classes to the union of its classes.
pub fn expand_downset(
    q: &QuotientPoset,
    class_set: ActivitySet,
) -> Result<ActivitySet, QuotientError> {
    if !class_set.is_subset(q.all_classes()) || !q.is_downset(class_set) {
        return Err(QuotientError::NotADownSet(class_set));
    }
    Ok(q.expand(class_set))
}
