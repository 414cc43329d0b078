//! Linear subgroups of the tropical torus (R^n under addition) cut out by
//! tropical linear equations: membership testing and recovery of the unique
//! partition whose diagonal subspace equals the subgroup.
//!
//! A point x lies in the subgroup G of an equation list when both x and -x
//! satisfy every equation max_i(a_i + x_i) = max_i(b_i + x_i) exactly.  Such
//! subgroups are always of the form V_rho = {x : x_i = x_j whenever i, j
//! share a block of rho}; the partition is found by exhaustive search with a
//! per-class criterion: V_rho is contained in G if and only if for every
//! equation and every block c, max_{i in c} a_i = max_{i in c} b_i (evaluate
//! members with one huge block value at a time to see necessity; sufficiency
//! is direct).  The passing set is closed under coarsening, so the meet of
//! all passing partitions is the answer.

use crate::scalar::{Rat, TropScalar};
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinsubError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the zero vector is not a member, so the equations do not define a group")]
    NotAGroup,
    #[error("n = {n} exceeds the partition-enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("meet of passing partitions fails the class criterion (theory violation)")]
    MeetAssertionFailure,
}

/// One tropical linear equation max_i(a_i + x_i) = max_i(b_i + x_i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropLinearEquation {
    pub a: Vec<TropScalar>,
    pub b: Vec<TropScalar>,
}

/// A partition of {0, ..., n-1} in canonical form: blocks ordered by their
/// least element, elements ascending within each block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Vec<usize>>) -> Partition {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        blocks.sort_by_key(|b| b[0]);
        let p = Partition { n, blocks };
        assert!(p.is_exact_cover(), "blocks must partition 0..n");
        p
    }

    /// Reconstruct from a class-id vector (class_of[i] = class of element i).
    pub fn from_class_ids(ids: &[usize]) -> Partition {
        let mut by_class: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, &c) in ids.iter().enumerate() {
            by_class.entry(c).or_default().push(i);
        }
        Partition::new(ids.len(), by_class.into_values().collect())
    }

    pub fn singletons(n: usize) -> Partition {
        Partition::new(n, (0..n).map(|i| vec![i]).collect())
    }

    fn is_exact_cover(&self) -> bool {
        let mut seen = vec![false; self.n];
        for b in &self.blocks {
            if b.is_empty() {
                return false;
            }
            for &e in b {
                if e >= self.n || seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn class_count(&self) -> usize {
        self.blocks.len()
    }

    /// class_of[i] = index of the block containing i.
    pub fn class_ids(&self) -> Vec<usize> {
        let mut ids = vec![0; self.n];
        for (c, b) in self.blocks.iter().enumerate() {
            for &e in b {
                ids[e] = c;
            }
        }
        ids
    }

    /// Common refinement: i, j together in the meet iff together in both.
    pub fn meet(&self, other: &Partition) -> Partition {
        assert_eq!(self.n, other.n, "meet of partitions of different sets");
        let a = self.class_ids();
        let b = other.class_ids();
        let mut key_to_class: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        let mut ids = vec![0; self.n];
        for i in 0..self.n {
            let next = key_to_class.len();
            let c = *key_to_class.entry((a[i], b[i])).or_insert(next);
            ids[i] = c;
        }
        Partition::from_class_ids(&ids)
    }

    /// 1-based blocks, for JSON and display.
    pub fn blocks_1based(&self) -> Vec<Vec<usize>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&e| e + 1).collect())
            .collect()
    }
}

fn eval_side(v: &[TropScalar], x: &[Rat], negate: bool) -> TropScalar {
    let mut best = TropScalar::Bottom;
    for (vi, xi) in v.iter().zip(x) {
        let term = match vi {
            TropScalar::Bottom => TropScalar::Bottom,
            TropScalar::Finite(c) => {
                TropScalar::Finite(if negate { c - xi } else { c + xi })
            }
        };
        best = best.trop_add(&term);
    }
    best
}

/// Is x in the subgroup? Both x and -x must satisfy every equation.
pub fn member(eqs: &[TropLinearEquation], x: &[Rat]) -> Result<bool, LinsubError> {
    for eq in eqs {
        for side in [&eq.a, &eq.b] {
            if side.len() != x.len() {
                return Err(LinsubError::DimensionMismatch {
                    expected: x.len(),
                    got: side.len(),
                });
            }
        }
        if eval_side(&eq.a, x, false) != eval_side(&eq.b, x, false)
            || eval_side(&eq.a, x, true) != eval_side(&eq.b, x, true)
        {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Does the diagonal subspace of this partition lie inside the subgroup?
/// Criterion: per equation and per block, the coefficient maxima agree.
fn partition_passes(eqs: &[TropLinearEquation], p: &Partition) -> bool {
    eqs.iter().all(|eq| {
        p.blocks().iter().all(|block| {
            let max_of = |v: &[TropScalar]| {
                block
                    .iter()
                    .map(|&i| v[i].clone())
                    .fold(TropScalar::Bottom, |m, t| m.trop_add(&t))
            };
            max_of(&eq.a) == max_of(&eq.b)
        })
    })
}

/// Visit every partition of {0, ..., n-1} as a restricted-growth string
/// (class ids); the visitor returns false to stop early.
fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize]) -> bool) {
    if n == 0 {
        f(&[]);
        return;
    }
    let mut ids = vec![0usize; n];
    fn rec(i: usize, maxid: usize, ids: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if i == ids.len() {
            return f(ids);
        }
        for c in 0..=maxid {
            ids[i] = c;
            if !rec(i + 1, maxid.max(c + 1), ids, f) {
                return false;
            }
        }
        true
    }
    rec(0, 0, &mut ids, f);
}

/// The unique partition rho with G = V_rho, where G is the subgroup of the
/// equation list.  `max_n` caps the Bell-number enumeration (default 10).
pub fn partition_of_group(
    n: usize,
    eqs: &[TropLinearEquation],
    max_n: usize,
) -> Result<Partition, LinsubError> {
    for eq in eqs {
        for side in [&eq.a, &eq.b] {
            if side.len() != n {
                return Err(LinsubError::DimensionMismatch { expected: n, got: side.len() });
            }
        }
    }
    if n > max_n {
        return Err(LinsubError::CapExceeded { n, cap: max_n });
    }
    if !member(eqs, &vec![Rat::from_integer(0.into()); n])? {
        return Err(LinsubError::NotAGroup);
    }
    let mut meet: Option<Partition> = None;
    for_each_partition(n, &mut |ids| {
        let p = Partition::from_class_ids(ids);
        if partition_passes(eqs, &p) {
            meet = Some(match meet.take() {
                None => p,
                Some(m) => m.meet(&p),
            });
        }
        // Nothing refines the discrete partition; stop once it is reached.
        meet.as_ref().map_or(true, |m| m.class_count() < n)
    });
    // The single-block partition passes whenever 0 is a member, so a passing
    // partition always exists.
    let meet = meet.expect("the one-block partition passes when 0 is a member");
    if !partition_passes(eqs, &meet) {
        return Err(LinsubError::MeetAssertionFailure);
    }
    Ok(meet)
}
