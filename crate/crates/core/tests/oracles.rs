//! Independent derivations of every nontrivial expected value used across
//! the suites.  Each test computes its answer by a route different from the
//! library's implementation — direct arithmetic, combinatorial counting, or
//! a brute-force filter — and then freezes the agreed value.

mod common;

use common::*;
use num::Zero;
use tropmat_core::bmod::{congruence_closure, BPresentation};
use tropmat_core::cone::{realizable_permutations, Cone};
use tropmat_core::groups::{
    classify_weak_isomorphism, enumerate_homs, monomialize_torsion, FiniteGroup, MonomialMap,
};
use tropmat_core::perm::{all_perms, Perm};
use tropmat_core::scalar::{rat, Rat, TropScalar};
use tropmat_core::sets::mask_of;
use tropmat_core::valuated::{ValuatedError, ValuatedMatroid};
use tropmat_core::Matroid;

/// Finite weight of a 1-based pair, as an exact rational.
fn pair_weight(vm: &ValuatedMatroid, i: usize, j: usize) -> Rat {
    match vm.weight(mask_of(&[i - 1, j - 1])) {
        TropScalar::Finite(r) => r,
        TropScalar::Bottom => panic!("pair off support"),
    }
}

/// The three perfect matchings of {1,2,3,4} as pairs of pairs.
const MATCHINGS: [[(usize, usize); 2]; 3] =
    [[(1, 2), (3, 4)], [(1, 3), (2, 4)], [(1, 4), (2, 3)]];

/// Matching-sum route to the weak automorphism group of a rank-2 valuated
/// matroid on four elements: the six pair equations τ_i + τ_j = Δ_{ij} are
/// solvable exactly when the three matching sums of Δ agree, so σ is a weak
/// automorphism iff s(σM) − s(M) is the same for all three matchings, where
/// s(M) is the sum of the two pair weights of M.  No linear algebra.
fn matching_sum_weak_auts(vm: &ValuatedMatroid) -> Vec<Perm> {
    let s = |m: &[(usize, usize); 2]| -> Rat {
        &pair_weight(vm, m[0].0, m[0].1) + &pair_weight(vm, m[1].0, m[1].1)
    };
    all_perms(4)
        .into_iter()
        .filter(|sigma| {
            let diffs: Vec<Rat> = MATCHINGS
                .iter()
                .map(|m| {
                    let image = [
                        (sigma.apply(m[0].0 - 1) + 1, sigma.apply(m[0].1 - 1) + 1),
                        (sigma.apply(m[1].0 - 1) + 1, sigma.apply(m[1].1 - 1) + 1),
                    ];
                    &s(&image) - &s(m)
                })
                .collect();
            diffs[1] == diffs[0] && diffs[2] == diffs[0]
        })
        .collect()
}

#[test]
fn weighted_u24_weak_automorphism_group_by_matching_sums() {
    let vm = weighted_u24();
    let oracle = matching_sum_weak_auts(&vm);
    let group = vm.weak_automorphism_group().unwrap();
    assert_eq!(group.elements(), oracle.as_slice());
    // Frozen: the stabilizer of the pair partition {{1,2},{3,4}}, order 8.
    let images: Vec<Vec<usize>> =
        group.elements().iter().map(|p| p.images_1based()).collect();
    assert_eq!(
        images,
        vec![
            vec![1, 2, 3, 4],
            vec![1, 2, 4, 3],
            vec![2, 1, 3, 4],
            vec![2, 1, 4, 3],
            vec![3, 4, 1, 2],
            vec![3, 4, 2, 1],
            vec![4, 3, 1, 2],
            vec![4, 3, 2, 1],
        ]
    );
}

#[test]
fn trivial_valuations_make_every_matroid_automorphism_weak() {
    let vm = trivial_u24();
    let oracle = matching_sum_weak_auts(&vm);
    assert_eq!(oracle.len(), 24);
    assert_eq!(vm.weak_automorphism_group().unwrap().order(), 24);
}

#[test]
fn exchange_failure_regression_by_direct_arithmetic() {
    // Weights (0,-1,-1,-1,-1,0) on the U_{2,4} bases violate the three-term
    // exchange at B={1,2}, B'={3,4}, u=1: left side 0+0, both exchanged
    // products -1 + -1.
    let weights = finite(&[0, -1, -1, -1, -1, 0]);
    let lhs = rat(0) + rat(0);
    let best_swap = (rat(-1) + rat(-1)).max(rat(-1) + rat(-1));
    assert!(best_swap < lhs);
    let err = ValuatedMatroid::validate(Matroid::uniform(2, 4), weights).unwrap_err();
    assert_eq!(
        err,
        ValuatedError::ExchangeValueFailure {
            b: "{1,2}".to_string(),
            b_prime: "{3,4}".to_string(),
            u: 1,
        }
    );
}

#[test]
fn projective_equivalence_obstruction_by_matching_sums() {
    // A rescaling with global unit α forces s_w(M) − s_w'(M) to be the
    // constant 2α + Σ τ over the three matchings; for the weighted versus
    // trivial U_{2,4} the differences are (-3, 0, 0).
    let w = weighted_u24();
    let t = trivial_u24();
    let d = |m: &[(usize, usize); 2]| {
        &(&pair_weight(&w, m[0].0, m[0].1) + &pair_weight(&w, m[1].0, m[1].1))
            - &(&pair_weight(&t, m[0].0, m[0].1) + &pair_weight(&t, m[1].0, m[1].1))
    };
    let diffs: Vec<Rat> = MATCHINGS.iter().map(d).collect();
    assert_eq!(diffs, vec![rat(-3), rat(0), rat(0)]);
    assert!(w.projectively_equivalent(&t).is_none());
    // Self-equivalence and a genuine rescaling both succeed.
    assert!(w.projectively_equivalent(&w).is_some());
    let rescaled = w.rescale(&[rat(1), rat(-2), rat(5), ratq_third()]);
    assert!(w.projectively_equivalent(&rescaled).is_some());
}

fn ratq_third() -> Rat {
    tropmat_core::ratq(1, 3)
}

#[test]
fn automorphism_counts_of_the_corpus_matroids() {
    // K_4 is 3-connected, so its graphic matroid has exactly the 24 graph
    // automorphisms; the Fano plane has the simple group of order 168.  The
    // pruned search must agree with the plain n!-filter on small cases.
    let k = k4();
    assert_eq!(k.automorphisms().order(), 24);
    assert_eq!(k.automorphisms().elements(), k.automorphisms_naive().as_slice());
    let f = fano();
    assert_eq!(f.automorphisms().order(), 168);
    assert_eq!(f.automorphisms().elements(), f.automorphisms_naive().as_slice());
}

#[test]
fn square_cone_group_by_relation_preservation() {
    // The rays satisfy the single relation r1 + r3 = r2 + r4, so a realizing
    // map must preserve the pair partition {{1,3},{2,4}}; conversely every
    // such permutation is realized by a symmetry of the square.  Independent
    // route: filter S_4 by partition preservation.
    let rays: Vec<Vec<Rat>> = [[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]
        .iter()
        .map(|r| r.iter().map(|&x| rat(x)).collect())
        .collect();
    let sum = |a: &Vec<Rat>, b: &Vec<Rat>| -> Vec<Rat> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    };
    assert_eq!(sum(&rays[0], &rays[2]), sum(&rays[1], &rays[3]));
    let preserves = |sigma: &Perm| {
        let pair = |a: usize, b: usize| {
            let (x, y) = (sigma.apply(a), sigma.apply(b));
            (x.min(y), x.max(y))
        };
        let image = [pair(0, 2), pair(1, 3)];
        image.contains(&(0, 2)) && image.contains(&(1, 3))
    };
    let oracle: Vec<Perm> = all_perms(4).into_iter().filter(preserves).collect();
    assert_eq!(oracle.len(), 8);
    let cone = Cone::validate(3, rays).unwrap();
    let group = realizable_permutations(&cone).unwrap();
    assert_eq!(group.elements(), oracle.as_slice());
}

#[test]
fn hom_counts_into_the_weighted_u24_group_by_element_orders() {
    // H = the order-8 stabilizer computed above.  Its elements of order ≤ 2
    // are e, (12), (34), (12)(34), (13)(24), (14)(23): five involutions, so
    // |Hom(Z/2, H)| = 6.  No order-3 elements, so |Hom(Z/3, H)| = 1.
    // |Hom(V_4, H)| counts commuting pairs of order ≤ 2 elements: 28.
    let h = weighted_u24().weak_automorphism_group().unwrap();
    let involutions: Vec<&Perm> =
        h.elements().iter().filter(|p| p.order() <= 2).collect();
    assert_eq!(involutions.len(), 6);
    let commuting_pairs = involutions
        .iter()
        .flat_map(|a| involutions.iter().map(move |b| (*a, *b)))
        .filter(|(a, b)| a.compose(b) == b.compose(a))
        .count();
    assert_eq!(commuting_pairs, 28);

    let z2 = FiniteGroup::cyclic(2);
    let z3 = FiniteGroup::cyclic(3);
    let v4 = FiniteGroup::direct_product(&z2, &z2);

    let homs_z2 = enumerate_homs(&z2, &h);
    assert_eq!(homs_z2.len(), 6);
    assert_eq!(classify_weak_isomorphism(&homs_z2, &h).len(), 4);
    assert_eq!(naive_orbit_count(&homs_z2, &h), 4);

    let homs_z3 = enumerate_homs(&z3, &h);
    assert_eq!(homs_z3.len(), 1);
    assert_eq!(classify_weak_isomorphism(&homs_z3, &h).len(), 1);

    let homs_v4 = enumerate_homs(&v4, &h);
    assert_eq!(homs_v4.len(), 28);
    let classes = classify_weak_isomorphism(&homs_v4, &h).len();
    assert_eq!(classes, naive_orbit_count(&homs_v4, &h));
    assert_eq!(classes, 16);
}

#[test]
fn u13_flats_lattice_classes_enumerated_by_hand() {
    // Relations {1,2}≡{1,3}≡{2,3} force the top in as well (join {2,3} with
    // {1}): classes are ∅, {1}, {2}, {3}, and {12,13,23,123}.
    let p = BPresentation::from_1based(3, &[(vec![1, 2], vec![1, 3]), (vec![1, 3], vec![2, 3])])
        .unwrap();
    let m = congruence_closure(&p).unwrap();
    let expected_classes: [(u32, u32); 8] = [
        (0b000, 0b000),
        (0b001, 0b001),
        (0b010, 0b010),
        (0b100, 0b100),
        (0b011, 0b011),
        (0b101, 0b011),
        (0b110, 0b011),
        (0b111, 0b011),
    ];
    for (s, class) in expected_classes {
        assert_eq!(m.class_of(s), class, "class of {s:#05b}");
    }
    assert!(m.is_quasi_free());
}

#[test]
fn monomialization_of_the_swap_checked_by_hand_composition() {
    // g = ((1 2), c=(3,-3)).  With Λ = (-3, 0):
    //   diag(-Λ) ∘ g ∘ diag(Λ) has diagonal k ↦ -Λ_{σ(k)} + c_k + Λ_k,
    //   giving (-0 + 3 - 3, 3 - 3 + 0) = (0, 0): a pure swap.
    let g = MonomialMap::new(Perm::from_cycles(2, "(1 2)").unwrap(), vec![rat(3), rat(-3)]);
    let lambda = monomialize_torsion(std::slice::from_ref(&g), 200).unwrap();
    assert_eq!(lambda, vec![rat(-3), rat(0)]);
    for k in 0..2 {
        let diag = -&lambda[g.sigma.apply(k)] + &g.c[k] + &lambda[k];
        assert!(diag.is_zero());
    }
}

#[test]
fn splitting_correction_of_the_swap_lift_by_hand() {
    // Raw lift u with diagonal (3,0) on the swap has defect
    // δ(g,g) = (u_{σ(k)} + u_k) = (3,3); the corrected diagonal is
    // u − 3/2 = (3/2, −3/2), and the corrected map squares to the identity.
    let c = vec![tropmat_core::ratq(3, 2), tropmat_core::ratq(-3, 2)];
    let s = MonomialMap::new(Perm::from_cycles(2, "(1 2)").unwrap(), c);
    assert_eq!(s.compose(&s), MonomialMap::identity(2));
}
