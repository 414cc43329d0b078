//! Matroids on {1, ..., n} presented by their bases: validation via the
//! exchange axiom, derived structure (rank function, closures, hyperplanes,
//! circuits), and the automorphism group.
//!
//! Derived data is computed on demand and cached; a `Matroid` is immutable
//! after validation, so the caches are single-assignment and thread-safe.

use crate::perm::{all_perms, Perm, PermGroup};
use crate::sets;
use std::collections::HashSet;
use std::sync::OnceLock;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatroidError {
    #[error("ground set size must be between 1 and 16, got {0}")]
    BadGroundSet(usize),
    #[error("rank {rank} out of range 0..={n}")]
    BadRank { rank: usize, n: usize },
    #[error("a matroid needs at least one basis")]
    NoBases,
    #[error("basis {0} does not have exactly rank-many elements")]
    BadBasisSize(String),
    #[error("basis {0} has an element outside 1..={1}")]
    ElementOutOfRange(String, usize),
    #[error("basis {0} is listed twice")]
    DuplicateBasis(String),
    #[error("exchange fails for B={b}, B'={b_prime}, u={u}: no v in B'\\B keeps B\\{{u}}+v a basis")]
    ExchangeFailure { b: String, b_prime: String, u: usize },
}

/// A matroid of rank d on {1, ..., n}, stored via its bases.
#[derive(Clone, Debug)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<u32>,
    basis_set: HashSet<u32>,
    hyperplanes: OnceLock<Vec<u32>>,
    circuits: OnceLock<Vec<u32>>,
    automorphisms: OnceLock<PermGroup>,
}

impl PartialEq for Matroid {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rank == other.rank && self.bases == other.bases
    }
}

impl Eq for Matroid {}

impl Matroid {
    /// Validate and construct: checks well-formedness and the basis exchange
    /// axiom for every triple (B, B', u).
    pub fn validate(n: usize, rank: usize, bases: Vec<u32>) -> Result<Matroid, MatroidError> {
        if n == 0 || n > 16 {
            return Err(MatroidError::BadGroundSet(n));
        }
        if rank > n {
            return Err(MatroidError::BadRank { rank, n });
        }
        if bases.is_empty() {
            return Err(MatroidError::NoBases);
        }
        let full = sets::full_mask(n);
        let mut canon = bases;
        canon.sort_by(|&a, &b| sets::cmp_lex(a, b));
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(MatroidError::DuplicateBasis(sets::display_1based(w[0])));
            }
        }
        for &b in &canon {
            if b & !full != 0 {
                return Err(MatroidError::ElementOutOfRange(sets::display_1based(b), n));
            }
            if sets::card(b) != rank {
                return Err(MatroidError::BadBasisSize(sets::display_1based(b)));
            }
        }
        let basis_set: HashSet<u32> = canon.iter().copied().collect();
        for &b in &canon {
            for &bp in &canon {
                let only_b = b & !bp;
                for u in sets::elems(only_b) {
                    let found = sets::elems(bp & !b)
                        .into_iter()
                        .any(|v| basis_set.contains(&(b & !(1 << u) | (1 << v))));
                    if !found {
                        return Err(MatroidError::ExchangeFailure {
                            b: sets::display_1based(b),
                            b_prime: sets::display_1based(bp),
                            u: u + 1,
                        });
                    }
                }
            }
        }
        Ok(Matroid {
            n,
            rank,
            bases: canon,
            basis_set,
            hyperplanes: OnceLock::new(),
            circuits: OnceLock::new(),
            automorphisms: OnceLock::new(),
        })
    }

    /// Validate from 1-based element lists (the JSON shape).
    pub fn validate_1based(n: usize, rank: usize, bases: &[Vec<usize>]) -> Result<Matroid, MatroidError> {
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let mut mask = 0u32;
            for &e in b {
                if e == 0 || e > 16 {
                    return Err(MatroidError::ElementOutOfRange(format!("{:?}", b), n));
                }
                mask |= 1 << (e - 1);
            }
            if sets::card(mask) != b.len() {
                return Err(MatroidError::DuplicateBasis(format!("{:?}", b)));
            }
            masks.push(mask);
        }
        Matroid::validate(n, rank, masks)
    }

    /// The uniform matroid U_{d,n}: every d-subset is a basis.
    pub fn uniform(rank: usize, n: usize) -> Matroid {
        Matroid::validate(n, rank, sets::k_subsets(n, rank))
            .expect("uniform matroids always satisfy exchange")
    }

    /// The free matroid on [n] (single basis, everything independent).
    pub fn free(n: usize) -> Matroid {
        Matroid::uniform(n, n)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Bases in lexicographic order of their element tuples.
    pub fn bases(&self) -> &[u32] {
        &self.bases
    }

    pub fn is_basis(&self, mask: u32) -> bool {
        self.basis_set.contains(&mask)
    }

    /// Index of a basis in the canonical order.
    pub fn basis_index(&self, mask: u32) -> Option<usize> {
        self.bases.binary_search_by(|&b| sets::cmp_lex(b, mask)).ok()
    }

    /// Matroid rank of an arbitrary subset: max |B ∩ S| over bases.
    pub fn rank_of(&self, mask: u32) -> usize {
        self.bases.iter().map(|&b| sets::card(b & mask)).max().unwrap_or(0)
    }

    pub fn is_independent(&self, mask: u32) -> bool {
        self.rank_of(mask) == sets::card(mask)
    }

    /// Closure: all elements whose addition does not raise the rank.
    pub fn closure(&self, mask: u32) -> u32 {
        let r = self.rank_of(mask);
        let mut out = mask;
        for e in 0..self.n {
            if !sets::contains(mask, e) && self.rank_of(mask | (1 << e)) == r {
                out |= 1 << e;
            }
        }
        out
    }

    /// All hyperplanes (flats of rank d-1), each the closure of a corank-1
    /// independent set; sorted lexicographically.
    pub fn hyperplanes(&self) -> &[u32] {
        self.hyperplanes.get_or_init(|| {
            if self.rank == 0 {
                return Vec::new();
            }
            let mut out: Vec<u32> = Vec::new();
            let mut seen: HashSet<u32> = HashSet::new();
            for s in sets::k_subsets(self.n, self.rank - 1) {
                if self.is_independent(s) {
                    let h = self.closure(s);
                    if seen.insert(h) {
                        out.push(h);
                    }
                }
            }
            out.sort_by(|&a, &b| sets::cmp_lex(a, b));
            out
        })
    }

    /// All circuits (minimal dependent sets), sorted lexicographically.
    pub fn circuits(&self) -> &[u32] {
        self.circuits.get_or_init(|| {
            let mut out = Vec::new();
            for k in 1..=(self.rank + 1).min(self.n) {
                for s in sets::k_subsets(self.n, k) {
                    if !self.is_independent(s)
                        && sets::elems(s)
                            .into_iter()
                            .all(|e| self.is_independent(s & !(1 << e)))
                    {
                        out.push(s);
                    }
                }
            }
            out.sort_by(|&a, &b| sets::cmp_lex(a, b));
            out
        })
    }

    /// No loops and no parallel pairs (no circuit of size 1 or 2).
    pub fn is_simple(&self) -> bool {
        (0..self.n).all(|e| self.rank_of(1 << e) == 1)
            && sets::k_subsets(self.n, 2).into_iter().all(|p| self.rank_of(p) == 2)
    }

    /// The automorphism group {σ : σ(ℬ) = ℬ}, by backtracking over images
    /// with hyperplane- and basis-preservation pruning.
    pub fn automorphisms(&self) -> &PermGroup {
        self.automorphisms.get_or_init(|| {
            let n = self.n;
            let hyp_set: HashSet<u32> = self.hyperplanes().iter().copied().collect();
            // Constraints grouped by the largest element they mention: once
            // positions 0..=p are assigned, any basis or hyperplane whose
            // maximum is p has a fully determined image.
            let mut bases_by_max: Vec<Vec<u32>> = vec![Vec::new(); n];
            for &b in &self.bases {
                if let Some(&m) = sets::elems(b).last() {
                    bases_by_max[m].push(b);
                }
            }
            let mut hyps_by_max: Vec<Vec<u32>> = vec![Vec::new(); n];
            for &h in self.hyperplanes() {
                if let Some(&m) = sets::elems(h).last() {
                    hyps_by_max[m].push(h);
                }
            }
            let mut found: Vec<Perm> = Vec::new();
            let mut img: Vec<usize> = Vec::new();
            let mut used = vec![false; n];
            self.search(&hyp_set, &bases_by_max, &hyps_by_max, &mut img, &mut used, &mut found);
            PermGroup::from_elements(n, found)
                .expect("basis-preserving permutations form a group")
        })
    }

    fn search(
        &self,
        hyp_set: &HashSet<u32>,
        bases_by_max: &[Vec<u32>],
        hyps_by_max: &[Vec<u32>],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        found: &mut Vec<Perm>,
    ) {
        let pos = img.len();
        if pos == self.n {
            let sigma = Perm::from_images(img.clone()).expect("backtracking builds bijections");
            // Authoritative check on the full basis list.
            if self.bases.iter().all(|&b| self.is_basis(sigma.apply_mask(b))) {
                found.push(sigma);
            }
            return;
        }
        for v in 0..self.n {
            if used[v] {
                continue;
            }
            img.push(v);
            used[v] = true;
            let partial = |mask: u32| -> u32 {
                let mut out = 0;
                for e in sets::elems(mask) {
                    out |= 1 << img[e];
                }
                out
            };
            let ok = bases_by_max[pos].iter().all(|&b| self.is_basis(partial(b)))
                && hyps_by_max[pos].iter().all(|&h| hyp_set.contains(&partial(h)));
            if ok {
                self.search(hyp_set, bases_by_max, hyps_by_max, img, used, found);
            }
            img.pop();
            used[v] = false;
        }
    }

    /// Naive automorphism filter over all n! permutations; the independent
    /// route used to cross-check the pruned search.
    pub fn automorphisms_naive(&self) -> Vec<Perm> {
        all_perms(self.n)
            .into_iter()
            .filter(|p| self.bases.iter().all(|&b| self.is_basis(p.apply_mask(b))))
            .collect()
    }
}
