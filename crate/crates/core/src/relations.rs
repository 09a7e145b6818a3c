//! Binary relations over activity indices.
//!
//! A relation carries a ground-set size, a domain mask and one bit-row per
//! element: bit `j` of row `i` means `i` is related to `j`. Restriction keeps
//! global indices and narrows the domain, so relations built on different
//! subsets of the same alphabet stay directly comparable.

use std::fmt;

use crate::model::{ConstraintKind, DeclarativeProcess};
use crate::set::{ActivitySet, MAX_ELEMENTS};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryRelation {
    size: usize,
    domain: ActivitySet,
    rows: Vec<ActivitySet>,
}

impl BinaryRelation {
    /// The empty relation on `0..size`.
    pub fn empty(size: usize) -> Self {
        assert!(size <= MAX_ELEMENTS);
        BinaryRelation {
            size,
            domain: ActivitySet::full(size),
            rows: vec![ActivitySet::EMPTY; size],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut r = Self::empty(size);
        for i in 0..size {
            r.rows[i].insert(i);
        }
        r
    }

    pub fn from_pairs(size: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(size);
        for (i, j) in pairs {
            r.insert(i, j);
        }
        r
    }

    /// Ground-set size (indices run over `0..size`).
    pub fn size(&self) -> usize {
        self.size
    }

    /// Elements the relation is defined on.
    pub fn domain(&self) -> ActivitySet {
        self.domain
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.size && self.rows[i].contains(j)
    }

    /// Adds `(i, j)`; both endpoints must lie in the domain.
    pub fn insert(&mut self, i: usize, j: usize) {
        assert!(
            self.domain.contains(i) && self.domain.contains(j),
            "pair ({i}, {j}) outside the relation's domain"
        );
        self.rows[i].insert(j);
    }

    /// `{ j : (i, j) }`.
    pub fn successors(&self, i: usize) -> ActivitySet {
        self.rows[i]
    }

    /// `{ j : (j, i) }`.
    pub fn predecessors(&self, i: usize) -> ActivitySet {
        self.domain
            .iter()
            .filter(|&j| self.rows[j].contains(i))
            .collect()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.domain
            .iter()
            .flat_map(move |i| self.rows[i].iter().map(move |j| (i, j)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn is_subrelation(&self, other: &BinaryRelation) -> bool {
        self.size == other.size
            && self
                .rows
                .iter()
                .zip(&other.rows)
                .all(|(a, b)| a.is_subset(*b))
    }

    /// Union of two relations on the same ground set; domains are merged.
    pub fn union(&self, other: &BinaryRelation) -> BinaryRelation {
        assert_eq!(self.size, other.size, "ground sets differ");
        BinaryRelation {
            size: self.size,
            domain: self.domain.union(other.domain),
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.union(*b))
                .collect(),
        }
    }

    /// Reflexive-transitive closure on the domain (Floyd–Warshall over
    /// bit-rows).
    pub fn closure(&self) -> BinaryRelation {
        let mut rows = self.rows.clone();
        for k in self.domain {
            let row_k = rows[k];
            for i in self.domain {
                if rows[i].contains(k) {
                    rows[i] = rows[i].union(row_k);
                }
            }
        }
        for i in self.domain {
            rows[i].insert(i);
        }
        BinaryRelation {
            size: self.size,
            domain: self.domain,
            rows,
        }
    }

    pub fn transpose(&self) -> BinaryRelation {
        let mut rows = vec![ActivitySet::EMPTY; self.size];
        for (i, j) in self.pairs() {
            rows[j].insert(i);
        }
        BinaryRelation {
            size: self.size,
            domain: self.domain,
            rows,
        }
    }

    /// Keeps pairs with both endpoints in `subset`; the domain shrinks to
    /// `domain ∩ subset`.
    pub fn restrict(&self, subset: ActivitySet) -> BinaryRelation {
        let domain = self.domain.intersection(subset);
        let rows = (0..self.size)
            .map(|i| {
                if domain.contains(i) {
                    self.rows[i].intersection(domain)
                } else {
                    ActivitySet::EMPTY
                }
            })
            .collect();
        BinaryRelation {
            size: self.size,
            domain,
            rows,
        }
    }

    /// False iff some `i != j` has both `(i, j)` and `(j, i)`.
    pub fn is_antisymmetric(&self) -> bool {
        self.domain.iter().all(|i| {
            self.rows[i]
                .without(i)
                .iter()
                .all(|j| !self.rows[j].contains(i))
        })
    }

    pub fn is_reflexive(&self) -> bool {
        self.domain.iter().all(|i| self.rows[i].contains(i))
    }

    pub fn is_transitive(&self) -> bool {
        self.pairs()
            .all(|(i, j)| self.rows[j].is_subset(self.rows[i]))
    }

    pub fn is_preorder(&self) -> bool {
        self.is_reflexive() && self.is_transitive()
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_preorder() && self.is_antisymmetric()
    }

    /// Covering pairs `(i, j)` of a partial order: `i < j` with nothing strictly
    /// in between. Sorted by `(i, j)`.
    pub fn cover_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in self.domain {
            let above = self.rows[i].without(i);
            for j in above {
                let between = above
                    .without(j)
                    .iter()
                    .any(|k| self.rows[k].contains(j) && !self.rows[j].contains(k));
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryRelation")
            .field("size", &self.size)
            .field("domain", &self.domain)
            .field("pairs", &self.pairs().collect::<Vec<_>>())
            .finish()
    }
}

/// `≲occ`: closure of `{(a, b) : Prec(a, b) or Resp(b, a)}`. `a ≲occ b`
/// means every trace containing `b` also contains `a`.
///
/// `Succ(a, b)` is read as its expansion `Prec(a, b) ∧ Resp(a, b)`.
pub fn implied_occurrence(p: &DeclarativeProcess) -> BinaryRelation {
    let mut r = BinaryRelation::empty(p.len());
    for c in p.constraints() {
        let (a, b) = (c.source, c.target);
        match c.kind {
            ConstraintKind::Prec => r.insert(a, b),
            ConstraintKind::Resp => r.insert(b, a),
            ConstraintKind::Succ => {
                r.insert(a, b);
                r.insert(b, a);
            }
        }
    }
    r.closure()
}

/// `→ord`: `{(a, b) : Prec(a, b) or Resp(a, b)}`, deliberately not closed.
pub fn order_preserving(p: &DeclarativeProcess) -> BinaryRelation {
    BinaryRelation::from_pairs(
        p.len(),
        p.constraints().iter().map(|c| (c.source, c.target)),
    )
}

/// `⪯I`: restrict `→ord` to `downset` first, then close.
///
/// Closing first would be wrong in general: with `Prec(a,b), Resp(b,c)` the
/// closed relation orders `a` before `c`, yet `ca` is a trace.
pub fn order_on_downset(ord: &BinaryRelation, downset: ActivitySet) -> BinaryRelation {
    ord.restrict(downset).closure()
}
