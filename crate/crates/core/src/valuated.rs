//! Valuated matroids: a matroid together with a finite weight on each basis,
//! subject to the Dress-Wenzel exchange axiom.  Provides the weak
//! automorphism test (a permutation plus a diagonal witness), the full weak
//! automorphism group, and projective equivalence of valuations.

use crate::linalg::{solve_affine, RationalMatrix};
use crate::matroid::Matroid;
use crate::perm::{Perm, PermGroup};
use crate::scalar::{Rat, TropScalar};
use crate::sets;
use num::Zero;
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ValuatedError {
    #[error("weight support mismatch: {0}")]
    SupportMismatch(String),
    #[error("value exchange fails for B={b}, B'={b_prime}, u={u}: w(B)+w(B') exceeds every swap")]
    ExchangeValueFailure { b: String, b_prime: String, u: usize },
    #[error("{0} is not a permutation of the ground set")]
    BadPermutation(String),
    #[error("underlying matroid is not simple")]
    NotSimple,
}

/// A valuated matroid (M, w): finite rational weights on the bases of M,
/// satisfying the Dress-Wenzel exchange; non-bases implicitly weigh bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuatedMatroid {
    matroid: Matroid,
    weights: Vec<Rat>,
    by_mask: HashMap<u32, usize>,
}

/// Certificate that σ is a weak automorphism: for every basis B,
/// w(σ(B)) = w(B) + Σ_{i∈B} τ_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakAutWitness {
    pub sigma: Perm,
    pub tau: Vec<Rat>,
}

impl ValuatedMatroid {
    /// Validate and construct.  `weights` is aligned index-by-index with
    /// `matroid.bases()`; all entries must be finite.
    pub fn validate(matroid: Matroid, weights: Vec<TropScalar>) -> Result<Self, ValuatedError> {
        let vm = Self::attach(matroid, weights)?;
        vm.check_exchange()?;
        Ok(vm)
    }

    /// Construct without the exchange check (weights still must cover the
    /// bases exactly).  For deliberately experimental inputs.
    pub fn validate_skip_exchange(
        matroid: Matroid,
        weights: Vec<TropScalar>,
    ) -> Result<Self, ValuatedError> {
        Self::attach(matroid, weights)
    }

    fn attach(matroid: Matroid, weights: Vec<TropScalar>) -> Result<Self, ValuatedError> {
        if weights.len() != matroid.bases().len() {
            return Err(ValuatedError::SupportMismatch(format!(
                "{} weights for {} bases",
                weights.len(),
                matroid.bases().len()
            )));
        }
        let mut finite = Vec::with_capacity(weights.len());
        for (i, w) in weights.into_iter().enumerate() {
            match w {
                TropScalar::Finite(r) => finite.push(r),
                TropScalar::Bottom => {
                    return Err(ValuatedError::SupportMismatch(format!(
                        "basis {} weighs -inf; the support of w must be the whole basis set",
                        sets::display_1based(matroid.bases()[i])
                    )))
                }
            }
        }
        let by_mask: HashMap<u32, usize> =
            matroid.bases().iter().enumerate().map(|(i, &b)| (b, i)).collect();
        Ok(ValuatedMatroid { matroid, weights: finite, by_mask })
    }

    /// The trivial (all-zero) valuation on a matroid.
    pub fn trivial(matroid: Matroid) -> Self {
        let zeros = vec![TropScalar::one(); matroid.bases().len()];
        Self::validate(matroid, zeros).expect("the zero valuation satisfies exchange")
    }

    /// Dress-Wenzel: for all bases B, B' and u ∈ B∖B' there is v ∈ B'∖B with
    /// w(B) + w(B') ≤ w(B∖u∪v) + w(B'∖v∪u).
    fn check_exchange(&self) -> Result<(), ValuatedError> {
        let bases = self.matroid.bases();
        for &b in bases {
            for &bp in bases {
                for u in sets::elems(b & !bp) {
                    let lhs = TropScalar::Finite(
                        self.weight_of_basis(b).unwrap() + self.weight_of_basis(bp).unwrap(),
                    );
                    let best = sets::elems(bp & !b)
                        .into_iter()
                        .map(|v| {
                            let swapped_b = b & !(1 << u) | (1 << v);
                            let swapped_bp = bp & !(1 << v) | (1 << u);
                            self.weight(swapped_b).trop_mul(&self.weight(swapped_bp))
                        })
                        .fold(TropScalar::Bottom, |acc, t| acc.trop_add(&t));
                    if lhs > best {
                        return Err(ValuatedError::ExchangeValueFailure {
                            b: sets::display_1based(b),
                            b_prime: sets::display_1based(bp),
                            u: u + 1,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// The underlying matroid; its basis set is the support of w by
    /// construction.
    pub fn underlying_matroid(&self) -> &Matroid {
        &self.matroid
    }

    /// Weights aligned with `matroid().bases()`.
    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    /// w as a total function on d-subsets: bottom off the basis set.
    pub fn weight(&self, mask: u32) -> TropScalar {
        match self.by_mask.get(&mask) {
            Some(&i) => TropScalar::Finite(self.weights[i].clone()),
            None => TropScalar::Bottom,
        }
    }

    fn weight_of_basis(&self, mask: u32) -> Option<&Rat> {
        self.by_mask.get(&mask).map(|&i| &self.weights[i])
    }

    /// The projectively equivalent valuation w'(B) = w(B) + Σ_{i∈B} t_i.
    pub fn rescale(&self, t: &[Rat]) -> Self {
        assert_eq!(t.len(), self.matroid.n(), "rescaling vector length mismatch");
        let weights = self
            .matroid
            .bases()
            .iter()
            .zip(&self.weights)
            .map(|(&b, w)| {
                let shift = sets::elems(b).into_iter().fold(Rat::zero(), |s, i| s + &t[i]);
                TropScalar::Finite(w + shift)
            })
            .collect();
        Self::validate(self.matroid.clone(), weights)
            .expect("projective rescaling preserves exchange")
    }

    /// Decide whether σ is a weak automorphism; on success return the
    /// diagonal witness τ with w(σ(B)) = w(B) + Σ_{i∈B} τ_i for all bases.
    pub fn is_weak_automorphism(
        &self,
        sigma: &Perm,
    ) -> Result<Option<WeakAutWitness>, ValuatedError> {
        let n = self.matroid.n();
        if sigma.degree() != n {
            return Err(ValuatedError::BadPermutation(format!(
                "degree {} map on a ground set of size {}",
                sigma.degree(),
                n
            )));
        }
        // σ must fix the basis set before any weights are consulted.
        if !self
            .matroid
            .bases()
            .iter()
            .all(|&b| self.matroid.is_basis(sigma.apply_mask(b)))
        {
            return Ok(None);
        }
        let rows: Vec<Vec<Rat>> = self
            .matroid
            .bases()
            .iter()
            .map(|&b| indicator(n, b))
            .collect();
        let rhs: Vec<Rat> = self
            .matroid
            .bases()
            .iter()
            .enumerate()
            .map(|(i, &b)| {
                let image_w = self
                    .weight_of_basis(sigma.apply_mask(b))
                    .expect("image of a basis is a basis here");
                image_w - &self.weights[i]
            })
            .collect();
        let a = RationalMatrix::from_rows_shaped(rows, n).expect("rows share length n");
        let Some(sol) = solve_affine(&a, &rhs).expect("row/rhs lengths agree") else {
            return Ok(None);
        };
        let witness = WeakAutWitness { sigma: sigma.clone(), tau: sol.particular };
        debug_assert!(self.witness_holds(&witness));
        Ok(Some(witness))
    }

    /// Re-check a witness against every basis, exactly.
    pub fn witness_holds(&self, witness: &WeakAutWitness) -> bool {
        witness.sigma.degree() == self.matroid.n()
            && self.matroid.bases().iter().enumerate().all(|(i, &b)| {
                let Some(w_img) = self.weight_of_basis(witness.sigma.apply_mask(b)) else {
                    return false;
                };
                let shift: Rat = sets::elems(b)
                    .into_iter()
                    .fold(Rat::zero(), |s, k| s + &witness.tau[k]);
                *w_img == &self.weights[i] + shift
            })
    }

    /// The weak automorphism group Aut_w(M) ≤ Aut(M̲).  Requires a simple
    /// underlying matroid; the result is verified to be a group.
    pub fn weak_automorphism_group(&self) -> Result<PermGroup, ValuatedError> {
        if !self.matroid.is_simple() {
            return Err(ValuatedError::NotSimple);
        }
        let mut elements = Vec::new();
        for sigma in self.matroid.automorphisms().elements() {
            if self.is_weak_automorphism(sigma)?.is_some() {
                elements.push(sigma.clone());
            }
        }
        let group = PermGroup::from_elements(self.matroid.n(), elements)
            .expect("weak automorphisms are closed under composition and inverse");
        Ok(group)
    }

    /// Projective equivalence: find (α, τ) with
    /// w'(B) = α + w(B) + Σ_{i∈B} τ_i for all bases, if the underlying
    /// matroids agree and the system is consistent.
    pub fn projectively_equivalent(&self, other: &ValuatedMatroid) -> Option<(Rat, Vec<Rat>)> {
        if self.matroid != other.matroid {
            return None;
        }
        let n = self.matroid.n();
        // Unknowns: (α, τ_1, ..., τ_n).
        let rows: Vec<Vec<Rat>> = self
            .matroid
            .bases()
            .iter()
            .map(|&b| {
                let mut row = vec![Rat::zero(); n + 1];
                row[0] = Rat::from_integer(1.into());
                for i in sets::elems(b) {
                    row[i + 1] = Rat::from_integer(1.into());
                }
                row
            })
            .collect();
        let rhs: Vec<Rat> = other
            .weights
            .iter()
            .zip(&self.weights)
            .map(|(wp, w)| wp - w)
            .collect();
        let a = RationalMatrix::from_rows_shaped(rows, n + 1).expect("rows share length n+1");
        let sol = solve_affine(&a, &rhs).expect("row/rhs lengths agree")?;
        let mut it = sol.particular.into_iter();
        let alpha = it.next().expect("n+1 unknowns");
        Some((alpha, it.collect()))
    }
}

/// 0/1 indicator vector of a subset mask.
pub(crate) fn indicator(n: usize, mask: u32) -> Vec<Rat> {
    let mut row = vec![Rat::zero(); n];
    for i in sets::elems(mask) {
        row[i] = Rat::from_integer(1.into());
    }
    row
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratq};
    use crate::testutil::weighted_u24;

    #[test]
    fn weighted_u24_passes_exchange() {
        weighted_u24();
    }

    #[test]
    fn trivial_valuations_pass_exchange() {
        ValuatedMatroid::trivial(Matroid::uniform(2, 4));
        ValuatedMatroid::trivial(Matroid::free(3));
    }

    #[test]
    fn support_mismatches_are_rejected() {
        let m = Matroid::uniform(2, 4);
        let short = vec![TropScalar::one(); 5];
        assert!(matches!(
            ValuatedMatroid::validate(m.clone(), short),
            Err(ValuatedError::SupportMismatch(_))
        ));
        let mut w = vec![TropScalar::one(); 6];
        w[2] = TropScalar::Bottom;
        assert!(matches!(
            ValuatedMatroid::validate(m, w),
            Err(ValuatedError::SupportMismatch(_))
        ));
    }

    #[test]
    fn four_cycle_is_not_a_weak_automorphism_of_weighted_u24() {
        let vm = weighted_u24();
        let sigma = Perm::from_cycles(4, "(1 2 3 4)").unwrap();
        assert_eq!(vm.is_weak_automorphism(&sigma).unwrap(), None);
    }

    #[test]
    fn double_transposition_has_the_half_integer_witness() {
        let vm = weighted_u24();
        let sigma = Perm::from_cycles(4, "(1 3)(2 4)").unwrap();
        let w = vm.is_weak_automorphism(&sigma).unwrap().unwrap();
        assert_eq!(w.tau, vec![ratq(1, 2), ratq(1, 2), ratq(-1, 2), ratq(-1, 2)]);
        assert!(vm.witness_holds(&w));
    }

    #[test]
    fn identity_always_has_the_zero_witness() {
        let vm = weighted_u24();
        let w = vm.is_weak_automorphism(&Perm::identity(4)).unwrap().unwrap();
        assert_eq!(w.tau, vec![rat(0); 4]);
    }

    #[test]
    fn degree_mismatch_is_a_bad_permutation() {
        let vm = weighted_u24();
        assert!(matches!(
            vm.is_weak_automorphism(&Perm::identity(3)),
            Err(ValuatedError::BadPermutation(_))
        ));
    }

    #[test]
    fn trivial_valuation_collapses_to_matroid_automorphisms() {
        let vm = ValuatedMatroid::trivial(Matroid::uniform(2, 4));
        assert_eq!(vm.weak_automorphism_group().unwrap().order(), 24);
    }

    #[test]
    fn weak_group_requires_simplicity() {
        let m = Matroid::validate_1based(3, 1, &[vec![1], vec![2], vec![3]]).unwrap();
        let vm = ValuatedMatroid::trivial(m);
        assert_eq!(vm.weak_automorphism_group(), Err(ValuatedError::NotSimple));
    }

    #[test]
    fn projective_equivalence_finds_rescalings_and_rejects_others() {
        let vm = weighted_u24();
        let (alpha, tau) = vm.projectively_equivalent(&vm).unwrap();
        assert_eq!(alpha, rat(0));
        assert_eq!(tau, vec![rat(0); 4]);

        let trivial = ValuatedMatroid::trivial(Matroid::uniform(2, 4));
        assert_eq!(vm.projectively_equivalent(&trivial), None);

        let t = vec![rat(1), rat(-2), ratq(1, 3), rat(0)];
        let rescaled = vm.rescale(&t);
        let (_, tau) = vm.projectively_equivalent(&rescaled).unwrap();
        // Any witness must reproduce the rescaled weights exactly.
        let again = vm.rescale(&tau);
        let shifted: Vec<Rat> = again
            .weights()
            .iter()
            .zip(rescaled.weights())
            .map(|(a, b)| b - a)
            .collect();
        assert!(shifted.windows(2).all(|p| p[0] == p[1]), "difference must be constant");
    }
}
