//! The tropical linear space of a valuated matroid: generators (one per
//! hyperplane of the underlying matroid), membership, span testing by
//! residuation, the diagonal stabilizer as a partition subspace, and the
//! automorphism structure H ⋉ V with an explicit multiplicative section.

use crate::groups::{splitting_section, GroupError, MonomialMap};
use crate::linalg::{kernel, RationalMatrix};
use crate::linsub::Partition;
use crate::perm::PermGroup;
use crate::scalar::{Rat, TropScalar};
use crate::sets;
use crate::valuated::{indicator, ValuatedError, ValuatedMatroid};
use num::Zero;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TropSpaceError {
    #[error("underlying matroid is not simple")]
    NotSimple,
    #[error("vector length mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("partition does not match kernel dimension (theory violation): {0}")]
    PartitionAssertionFailure(String),
    #[error(transparent)]
    Section(#[from] GroupError),
}

impl From<ValuatedError> for TropSpaceError {
    fn from(e: ValuatedError) -> Self {
        match e {
            ValuatedError::NotSimple => TropSpaceError::NotSimple,
            other => panic!("unexpected valuated-matroid failure on a validated input: {other}"),
        }
    }
}

/// One generator of the tropical linear space: the vector
/// v_I = (w(I ∪ {i}))_i, tagged with its corank-1 independent set I and the
/// hyperplane I spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub independent_set: u32,
    pub hyperplane: u32,
    pub vector: Vec<TropScalar>,
}

/// The canonical generating set: exactly one generator per hyperplane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    pub n: usize,
    pub generators: Vec<Generator>,
}

/// A partition subspace V_ρ = {x : x_i = x_j whenever i ∼ j}, carried as the
/// partition plus the 0/1 indicator basis of its classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSubspace {
    pub partition: Partition,
    pub kernel_basis: Vec<Vec<Rat>>,
}

impl PartitionSubspace {
    /// Build directly from a partition (indicator basis derived).
    pub fn from_partition(partition: Partition) -> PartitionSubspace {
        let n = partition.n();
        let kernel_basis = partition
            .blocks()
            .iter()
            .map(|block| {
                let mut v = vec![Rat::zero(); n];
                for &i in block {
                    v[i] = Rat::from_integer(1.into());
                }
                v
            })
            .collect();
        PartitionSubspace { partition, kernel_basis }
    }

    /// Derive the partition from an arbitrary kernel basis: i ∼ j iff every
    /// basis vector agrees at i and j.  Fails (theory violation) unless the
    /// class count equals the kernel dimension.
    pub fn from_kernel(n: usize, raw_kernel: &[Vec<Rat>]) -> Result<PartitionSubspace, TropSpaceError> {
        let mut ids: Vec<usize> = vec![0; n];
        let mut keys: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
        for i in 0..n {
            let key: Vec<Rat> = raw_kernel.iter().map(|v| v[i].clone()).collect();
            let next = keys.len();
            ids[i] = *keys.entry(key).or_insert(next);
        }
        let partition = Partition::from_class_ids(&ids);
        if partition.class_count() != raw_kernel.len() {
            return Err(TropSpaceError::PartitionAssertionFailure(format!(
                "kernel dimension {} but {} coordinate classes",
                raw_kernel.len(),
                partition.class_count()
            )));
        }
        Ok(PartitionSubspace::from_partition(partition))
    }

    pub fn dim(&self) -> usize {
        self.kernel_basis.len()
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Is a diagonal vector in the subspace (constant on classes)?
    pub fn contains(&self, c: &[Rat]) -> bool {
        c.len() == self.n()
            && self
                .partition
                .blocks()
                .iter()
                .all(|block| block.iter().all(|&i| c[i] == c[block[0]]))
    }
}

/// The automorphism structure of a tropical linear space: the weak
/// automorphism group H, the partition subspace V of diagonal symmetries,
/// and a multiplicative section H → monomial maps.
#[derive(Clone, Debug)]
pub struct AutStructure {
    pub h: PermGroup,
    pub v: PartitionSubspace,
    pub section: BTreeMap<crate::perm::Perm, MonomialMap>,
}

/// One generator per hyperplane, the representative I being the
/// lexicographically least independent (d-1)-subset spanning it.
pub fn generators(vm: &ValuatedMatroid) -> Result<GeneratorSet, TropSpaceError> {
    let m = vm.matroid();
    if !m.is_simple() {
        return Err(TropSpaceError::NotSimple);
    }
    let n = m.n();
    let d = m.rank();
    let mut gens = Vec::new();
    for &h in m.hyperplanes() {
        let rep = sets::k_subsets(n, d.saturating_sub(1))
            .into_iter()
            .filter(|&s| s & !h == 0)
            .find(|&s| m.is_independent(s))
            .expect("every hyperplane is spanned by an independent corank-1 set");
        debug_assert_eq!(m.closure(rep), h);
        let vector: Vec<TropScalar> = (0..n)
            .map(|i| {
                if sets::contains(rep, i) {
                    TropScalar::Bottom
                } else {
                    vm.weight(rep | (1 << i))
                }
            })
            .collect();
        // Support must be exactly the complement of the hyperplane.
        for (i, entry) in vector.iter().enumerate() {
            assert_eq!(
                entry.is_bottom(),
                sets::contains(h, i),
                "generator support must be the hyperplane complement"
            );
        }
        gens.push(Generator { independent_set: rep, hyperplane: h, vector });
    }
    Ok(GeneratorSet { n, generators: gens })
}

/// Membership in the tropical linear space: for every (d+1)-subset S, the
/// terms {w(S∖{j}) + x_j : j ∈ S} must attain their maximum at least twice
/// (or be all-bottom).
pub fn contains(vm: &ValuatedMatroid, x: &[TropScalar]) -> Result<bool, TropSpaceError> {
    let m = vm.matroid();
    let n = m.n();
    if x.len() != n {
        return Err(TropSpaceError::DimensionMismatch { expected: n, got: x.len() });
    }
    for s in sets::k_subsets(n, m.rank() + 1) {
        let terms: Vec<TropScalar> = sets::elems(s)
            .into_iter()
            .map(|j| vm.weight(s & !(1 << j)).trop_mul(&x[j]))
            .collect();
        let best = terms.iter().fold(TropScalar::Bottom, |b, t| b.trop_add(t));
        if best.is_bottom() {
            continue;
        }
        if terms.iter().filter(|t| **t == best).count() < 2 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Residuation span test: the largest coefficients λ_r with
/// ⊕_r λ_r ⊗ v_r ≤ x are computed coordinate-free; x is in the span iff the
/// resulting combination equals x exactly, and then λ is returned.
pub fn in_span(x: &[TropScalar], gens: &GeneratorSet) -> Option<Vec<TropScalar>> {
    let n = gens.n;
    assert_eq!(x.len(), n, "vector length must match the generator set");
    let mut lambda = Vec::with_capacity(gens.generators.len());
    for g in &gens.generators {
        let mut best: Option<Rat> = None;
        let mut bottom = false;
        for i in 0..n {
            let TropScalar::Finite(vi) = &g.vector[i] else { continue };
            match &x[i] {
                TropScalar::Bottom => {
                    bottom = true;
                    break;
                }
                TropScalar::Finite(xi) => {
                    let q = xi - vi;
                    best = Some(match best {
                        None => q,
                        Some(b) => b.min(q),
                    });
                }
            }
        }
        lambda.push(if bottom {
            TropScalar::Bottom
        } else {
            best.map(TropScalar::Finite).unwrap_or(TropScalar::Bottom)
        });
    }
    // Evaluate the combination and compare exactly.
    let mut combo = vec![TropScalar::Bottom; n];
    for (l, g) in lambda.iter().zip(&gens.generators) {
        for i in 0..n {
            let term = l.trop_mul(&g.vector[i]);
            combo[i] = combo[i].trop_add(&term);
        }
    }
    if combo == x { Some(lambda) } else { None }
}

/// The diagonal stabilizer V = {c : Σ_{i∈B} c_i constant over bases,
/// i.e. diag(c) preserves the space}: computed as the kernel of the rows
/// e_B − e_{B0}, then converted to a partition subspace.
pub fn diagonal_stabilizer(vm: &ValuatedMatroid) -> Result<PartitionSubspace, TropSpaceError> {
    let m = vm.matroid();
    let n = m.n();
    let b0 = m.bases()[0];
    let rows: Vec<Vec<Rat>> = m
        .bases()
        .iter()
        .skip(1)
        .map(|&b| {
            let mut row = indicator(n, b);
            let neg = indicator(n, b0);
            for (r, s) in row.iter_mut().zip(neg) {
                *r -= s;
            }
            row
        })
        .collect();
    let a = RationalMatrix::from_rows_shaped(rows, n).expect("rows share width n");
    let raw = kernel(&a);
    let ps = PartitionSubspace::from_kernel(n, &raw)?;
    // The indicator basis must itself solve the homogeneous system.
    for v in &ps.kernel_basis {
        let image = a.mul_vec(v).expect("width n");
        assert!(image.iter().all(|e| e.is_zero()), "class indicators must lie in the kernel");
    }
    Ok(ps)
}

/// Apply a monomial map to a tropical vector (checked).
pub fn monomial_apply(m: &MonomialMap, x: &[TropScalar]) -> Result<Vec<TropScalar>, TropSpaceError> {
    if x.len() != m.degree() {
        return Err(TropSpaceError::DimensionMismatch { expected: m.degree(), got: x.len() });
    }
    Ok(m.apply(x))
}

/// The full automorphism structure: H = weak automorphism group, V =
/// diagonal stabilizer, and a multiplicative section obtained by correcting
/// the weak-automorphism witnesses through the coboundary solve.
pub fn aut_structure(vm: &ValuatedMatroid) -> Result<AutStructure, TropSpaceError> {
    let h = vm.weak_automorphism_group()?;
    let v = diagonal_stabilizer(vm)?;
    let mut lift = BTreeMap::new();
    for sigma in h.elements() {
        let witness = vm
            .is_weak_automorphism(sigma)?
            .expect("members of the weak automorphism group have witnesses");
        lift.insert(sigma.clone(), MonomialMap::new(sigma.clone(), witness.tau));
    }
    let section = splitting_section(&h, &v, &lift)?;
    // Structural invariants: the section projects onto H and its diagonals
    // are finite by construction; spot-check projection here.
    for (sigma, m) in &section {
        assert_eq!(&m.sigma, sigma, "section must project onto H");
    }
    Ok(AutStructure { h, v, section })
}
