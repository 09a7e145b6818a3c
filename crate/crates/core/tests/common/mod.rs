//! Test-only generators and reference implementations. Nothing here calls the
//! closure, quotient or linear-extension code under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

use dectrace::{ActivitySet, Constraint, ConstraintKind, DeclarativeProcess, Trace};
use rand::Rng;

pub const KINDS: [ConstraintKind; 3] = [
    ConstraintKind::Prec,
    ConstraintKind::Resp,
    ConstraintKind::Succ,
];

pub fn names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| ((b'a' + i as u8) as char).to_string())
        .collect()
}

/// `n` uniform in `1..=max_n`, `0..=max_constraints` constraints, each with a
/// kind drawn from `kinds` and a uniformly chosen ordered pair of distinct
/// activities.
pub fn random_process<R: Rng>(
    rng: &mut R,
    max_n: usize,
    max_constraints: usize,
    kinds: &[ConstraintKind],
) -> DeclarativeProcess {
    let n = rng.gen_range(1..=max_n);
    let m = rng.gen_range(0..=max_constraints);
    let mut cs = Vec::new();
    if n >= 2 {
        for _ in 0..m {
            let kind = kinds[rng.gen_range(0..kinds.len())];
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            cs.push(Constraint::new(kind, a, b));
        }
    }
    DeclarativeProcess::new(&names(n), cs).expect("generated process is valid")
}

/// Relation as a dense boolean matrix.
pub type Matrix = Vec<Vec<bool>>;

pub fn random_matrix<R: Rng>(rng: &mut R, n: usize, density: f64) -> Matrix {
    (0..n)
        .map(|_| (0..n).map(|_| rng.gen_bool(density)).collect())
        .collect()
}

/// Reflexive-transitive closure by repeated composition until nothing changes.
pub fn fixed_point_closure(r: &Matrix) -> Matrix {
    let n = r.len();
    let mut cur = r.clone();
    for (i, row) in cur.iter_mut().enumerate() {
        row[i] = true;
    }
    loop {
        let mut next = cur.clone();
        for i in 0..n {
            for j in 0..n {
                if (0..n).any(|k| cur[i][k] && cur[k][j]) {
                    next[i][j] = true;
                }
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Direct translation of the two relation definitions, as matrices.
pub fn occurrence_matrix(p: &DeclarativeProcess) -> Matrix {
    let n = p.len();
    let mut m = vec![vec![false; n]; n];
    for c in p.constraints() {
        let (a, b) = (c.source, c.target);
        match c.kind {
            ConstraintKind::Prec => m[a][b] = true,
            ConstraintKind::Resp => m[b][a] = true,
            ConstraintKind::Succ => {
                m[a][b] = true;
                m[b][a] = true;
            }
        }
    }
    fixed_point_closure(&m)
}

pub fn ord_matrix(p: &DeclarativeProcess) -> Matrix {
    let n = p.len();
    let mut m = vec![vec![false; n]; n];
    for c in p.constraints() {
        m[c.source][c.target] = true;
    }
    m
}

pub fn is_downset_matrix(pre: &Matrix, s: ActivitySet) -> bool {
    s.iter()
        .all(|b| (0..pre.len()).all(|a| !pre[a][b] || s.contains(a)))
}

/// Possible images by exhaustive subset filtering: every down-set of the
/// occurrence preorder whose restricted-then-closed order has no 2-cycle.
pub fn possim_by_filtering(p: &DeclarativeProcess) -> Vec<ActivitySet> {
    let n = p.len();
    let occ = occurrence_matrix(p);
    let ord = ord_matrix(p);
    ActivitySet::full(n)
        .subsets()
        .filter(|&s| is_downset_matrix(&occ, s))
        .filter(|&s| {
            let restricted: Matrix = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| ord[i][j] && s.contains(i) && s.contains(j))
                        .collect()
                })
                .collect();
            let closed = fixed_point_closure(&restricted);
            s.iter()
                .all(|i| s.iter().all(|j| i == j || !(closed[i][j] && closed[j][i])))
        })
        .collect()
}

/// Random partial order on `0..n`: pairs only go from lower to higher index
/// under a random relabelling, then closed.
pub fn random_poset_pairs<R: Rng>(rng: &mut R, n: usize, density: f64) -> Vec<(usize, usize)> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.gen_bool(density) {
                pairs.push((perm[i], perm[j]));
            }
        }
    }
    pairs
}

/// Permutations of `elements` respecting `le` (a closed order matrix).
pub fn extensions_by_filtering(elements: ActivitySet, le: &Matrix) -> BTreeSet<Trace> {
    let mut out = BTreeSet::new();
    permute(&elements.to_vec(), &mut Vec::new(), &mut out, le);
    out
}

fn permute(rest: &[usize], prefix: &mut Vec<usize>, out: &mut BTreeSet<Trace>, le: &Matrix) {
    if rest.is_empty() {
        let ok = prefix
            .iter()
            .enumerate()
            .all(|(pi, &x)| prefix[pi + 1..].iter().all(|&y| !le[y][x]));
        if ok {
            out.insert(Trace::new(prefix.clone()).unwrap());
        }
        return;
    }
    for k in 0..rest.len() {
        let mut next = rest.to_vec();
        let x = next.remove(k);
        prefix.push(x);
        permute(&next, prefix, out, le);
        prefix.pop();
    }
}

pub fn as_set(ts: &[Trace]) -> BTreeSet<Trace> {
    ts.iter().cloned().collect()
}
