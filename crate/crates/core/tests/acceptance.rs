//! Acceptance suite: twelve end-to-end criteria, each printing one
//! pass/fail line.  Every comparison is exact rational equality; there are
//! no tolerances anywhere.

mod common;

use common::*;
use num::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use tropmat_core::bmod::{congruence_closure, qm_boolean, BPresentation};
use tropmat_core::cone::{cone_diagonal_stabilizer, realizable_permutations, Cone};
use tropmat_core::groups::{
    classify_weak_isomorphism, diagonal_conjugator, enumerate_homs, monomialize_torsion,
    FiniteGroup, MonomialHom, MonomialMap,
};
use tropmat_core::linsub::Partition;
use tropmat_core::perm::Perm;
use tropmat_core::scalar::{ratq, Rat, TropScalar};
use tropmat_core::tropspace::{
    aut_structure, contains, diagonal_stabilizer, generators, in_span, PartitionSubspace,
};
use tropmat_core::valuated::ValuatedMatroid;
use tropmat_core::Matroid;

fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    let result = catch_unwind(AssertUnwindSafe(body));
    match &result {
        Ok(()) => println!("criterion {number:02} ({name}): pass"),
        Err(_) => println!("criterion {number:02} ({name}): FAIL"),
    }
    if let Err(e) = result {
        resume_unwind(e);
    }
}

fn rat(x: i64) -> Rat {
    tropmat_core::rat(x)
}

fn random_rat(rng: &mut ChaCha20Rng) -> Rat {
    ratq(rng.gen_range(-10i64..=10), rng.gen_range(1i64..=3))
}

fn random_trop(rng: &mut ChaCha20Rng) -> TropScalar {
    if rng.gen_range(0u8..5) == 0 {
        TropScalar::Bottom
    } else {
        TropScalar::Finite(random_rat(rng))
    }
}

#[test]
fn criterion_01_weighted_u24_witnesses() {
    criterion(1, "weighted U_{2,4} weak-automorphism witnesses", || {
        let vm = weighted_u24();
        let four_cycle = Perm::from_cycles(4, "(1 2 3 4)").unwrap();
        assert!(vm.is_weak_automorphism(&four_cycle).unwrap().is_none());
        let double_swap = Perm::from_cycles(4, "(1 3)(2 4)").unwrap();
        let witness = vm.is_weak_automorphism(&double_swap).unwrap().unwrap();
        assert_eq!(
            witness.tau,
            vec![ratq(1, 2), ratq(1, 2), ratq(-1, 2), ratq(-1, 2)]
        );
        assert!(vm.witness_holds(&witness));
    });
}

#[test]
fn criterion_02_weighted_u24_group_pinned() {
    criterion(2, "weighted U_{2,4} weak-automorphism group", || {
        let group = weighted_u24().weak_automorphism_group().unwrap();
        assert!(group.order() > 1 && group.order() < 24, "proper and nontrivial");
        assert!(group.contains(&Perm::from_cycles(4, "(1 3)(2 4)").unwrap()));
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
    });
}

#[test]
fn criterion_03_trivial_valuation_collapse() {
    criterion(3, "trivial-valuation collapse to matroid automorphisms", || {
        for (name, m) in simple_corpus() {
            let auts = m.automorphisms().clone();
            let weak = ValuatedMatroid::trivial(m).weak_automorphism_group().unwrap();
            assert_eq!(weak.elements(), auts.elements(), "corpus matroid {name}");
        }
        assert_eq!(fano().automorphisms().order(), 168);
    });
}

#[test]
fn criterion_04_membership_routes_agree_on_samples() {
    criterion(4, "bend membership equals residuation span", || {
        let mut rng = ChaCha20Rng::seed_from_u64(40);
        let corpus: Vec<ValuatedMatroid> = vec![
            weighted_u24(),
            trivial_u24(),
            ValuatedMatroid::validate(
                Matroid::uniform(2, 3),
                vec![
                    TropScalar::Finite(rat(1)),
                    TropScalar::Finite(rat(0)),
                    TropScalar::Finite(ratq(-1, 2)),
                ],
            )
            .unwrap(),
            ValuatedMatroid::trivial(Matroid::free(3)),
        ];
        for vm in &corpus {
            let n = vm.matroid().n();
            let gens = generators(vm).unwrap();
            let mut samples = 0usize;
            let mut disagreements = 0usize;
            let mut check = |x: &[TropScalar], must_be_member: bool| {
                let bend = contains(vm, x).unwrap();
                let span = in_span(x, &gens).is_some();
                if bend != span || (must_be_member && !bend) {
                    disagreements += 1;
                }
                samples += 1;
            };
            for g in &gens.generators {
                check(&g.vector, true);
            }
            for _ in 0..120 {
                // Random tropical combination of the generators.
                let mut x = vec![TropScalar::Bottom; n];
                for g in &gens.generators {
                    let lambda = random_trop(&mut rng);
                    for i in 0..n {
                        x[i] = x[i].trop_add(&lambda.trop_mul(&g.vector[i]));
                    }
                }
                check(&x, false);
            }
            for _ in 0..100 {
                let x: Vec<TropScalar> = (0..n).map(|_| random_trop(&mut rng)).collect();
                check(&x, false);
            }
            assert!(samples >= 200, "enough samples per matroid");
            assert_eq!(disagreements, 0, "routes must never disagree");
        }
    });
}

#[test]
fn criterion_05_partition_subspace_law() {
    criterion(5, "diagonal stabilizer is a partition subspace", || {
        for (name, m) in simple_corpus() {
            let ps = diagonal_stabilizer(&ValuatedMatroid::trivial(m)).unwrap();
            assert_eq!(ps.dim(), ps.partition.class_count(), "corpus matroid {name}");
        }
        let u24 = diagonal_stabilizer(&weighted_u24()).unwrap();
        assert_eq!(u24.partition.blocks_1based(), vec![vec![1, 2, 3, 4]]);
        let free = diagonal_stabilizer(&ValuatedMatroid::trivial(Matroid::free(3))).unwrap();
        assert_eq!(free.partition, Partition::singletons(3));
        let pp = diagonal_stabilizer(&ValuatedMatroid::trivial(parallel_classes())).unwrap();
        assert_eq!(pp.partition.blocks_1based(), vec![vec![1, 2], vec![3, 4]]);
    });
}

#[test]
fn criterion_06_semidirect_section_multiplicative() {
    criterion(6, "automorphism structure splits multiplicatively", || {
        for (vm, h_order, v_dim) in [
            (weighted_u24(), 8, 1),
            (trivial_u24(), 24, 1),
            (ValuatedMatroid::trivial(Matroid::free(3)), 6, 3),
        ] {
            let st = aut_structure(&vm).unwrap();
            assert_eq!(st.h.order(), h_order);
            assert_eq!(st.v.dim(), v_dim);
            for a in st.h.elements() {
                for b in st.h.elements() {
                    assert_eq!(
                        st.section[a].compose(&st.section[b]),
                        st.section[&a.compose(b)]
                    );
                }
            }
        }
    });
}

#[test]
fn criterion_07_conjugator_on_constructed_pairs() {
    criterion(7, "diagonal conjugators recover constructed twists", || {
        let mut rng = ChaCha20Rng::seed_from_u64(70);
        let gens = [
            Perm::from_cycles(3, "(1 2)").unwrap(),
            Perm::from_cycles(3, "(1 2 3)").unwrap(),
        ];
        let (group, elements) = FiniteGroup::from_perms(3, &gens).unwrap();
        for trial in 0..20 {
            let v = if trial % 2 == 0 {
                PartitionSubspace::from_partition(Partition::singletons(3))
            } else {
                PartitionSubspace::from_partition(Partition::new(3, vec![vec![0, 2], vec![1]]))
            };
            // D constant on the partition classes.
            let class_values: Vec<Rat> =
                (0..v.partition.class_count()).map(|_| random_rat(&mut rng)).collect();
            let d: Vec<Rat> = v
                .partition
                .class_ids()
                .iter()
                .map(|&c| class_values[c].clone())
                .collect();
            let alpha = MonomialHom::new(
                &group,
                elements.iter().map(|p| MonomialMap::new(p.clone(), vec![Rat::zero(); 3])).collect(),
            )
            .unwrap();
            let twist = MonomialMap::diagonal(d.clone());
            let twist_inv = twist.inverse();
            let beta = MonomialHom::new(
                &group,
                alpha
                    .images
                    .iter()
                    .map(|m| twist.compose(m).compose(&twist_inv))
                    .collect(),
            )
            .unwrap();
            let sol = diagonal_conjugator(&alpha, &beta, &v).unwrap().unwrap();
            for (ma, mb) in alpha.images.iter().zip(&beta.images) {
                for k in 0..3 {
                    let lhs = &ma.c[k];
                    let rhs = &mb.c[k] + &sol.d[ma.sigma.apply(k)] - &sol.d[k];
                    assert_eq!(*lhs, rhs, "conjugation identity at every (g, k)");
                }
            }
        }
    });
}

#[test]
fn criterion_08_classification_counts_agree() {
    criterion(8, "weak-isomorphism class counts match brute force", || {
        let h = weighted_u24().weak_automorphism_group().unwrap();
        let z2 = FiniteGroup::cyclic(2);
        let z3 = FiniteGroup::cyclic(3);
        let v4 = FiniteGroup::direct_product(&z2, &z2);
        for (g, expected_homs) in [(&z2, 6usize), (&z3, 1), (&v4, 28)] {
            let homs = enumerate_homs(g, &h);
            assert_eq!(homs.len(), expected_homs);
            let classes = classify_weak_isomorphism(&homs, &h);
            assert_eq!(classes.len(), naive_orbit_count(&homs, &h));
        }
    });
}

#[test]
fn criterion_09_qm_boolean_shadow() {
    criterion(9, "Boolean quotient modules are atomic with distinct atoms", || {
        let mut instances: Vec<(String, ValuatedMatroid)> = simple_corpus()
            .into_iter()
            .filter(|(_, m)| m.n() <= 6)
            .map(|(name, m)| (name.to_string(), ValuatedMatroid::trivial(m)))
            .collect();
        instances.push(("weighted U_{2,4}".to_string(), weighted_u24()));
        for (name, vm) in &instances {
            let n = vm.matroid().n();
            let module = congruence_closure(&qm_boolean(vm).unwrap()).unwrap();
            assert!(module.is_quasi_free(), "{name} must be atomic");
            let generator_classes: Vec<u32> =
                (0..n).map(|i| module.class_of(1 << i)).collect();
            let mut distinct = generator_classes.clone();
            distinct.sort_unstable();
            distinct.dedup();
            assert_eq!(distinct.len(), n, "{name} generator classes distinct");
            let irreducibles = module.join_irreducibles();
            for c in &generator_classes {
                assert!(irreducibles.contains(c), "{name} generators are atoms");
            }
        }
        // Rank-one uniform matroids collapse to a single nonzero class.
        let u14 = ValuatedMatroid::trivial(Matroid::uniform(1, 4));
        let module = congruence_closure(&qm_boolean(&u14).unwrap()).unwrap();
        assert_eq!(module.size(), 2);
    });
}

#[test]
fn criterion_10_flats_lattice_example() {
    criterion(10, "U_{1,3} flats-lattice congruence", || {
        let p = BPresentation::from_1based(
            3,
            &[(vec![1, 2], vec![1, 3]), (vec![1, 3], vec![2, 3])],
        )
        .unwrap();
        let module = congruence_closure(&p).unwrap();
        assert_eq!(module.size(), 5);
        assert!(module.is_quasi_free());
    });
}

#[test]
fn criterion_11_cone_suite() {
    criterion(11, "cone realizability and stabilizers", || {
        let square = Cone::validate(
            3,
            [[1, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]
                .iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
        .unwrap();
        let group = realizable_permutations(&square).unwrap();
        assert_eq!(group.order(), 8);
        assert!(!group.contains(&Perm::from_cycles(4, "(1 2)").unwrap()));
        let stab = cone_diagonal_stabilizer(&square).unwrap();
        assert_eq!(stab.partition.blocks_1based(), vec![vec![1, 2, 3, 4]]);

        for n in [3usize, 4] {
            let rays: Vec<Vec<Rat>> = (0..n)
                .map(|i| (0..n).map(|j| rat((i == j) as i64)).collect())
                .collect();
            let simplicial = Cone::validate(n, rays).unwrap();
            let mut factorial = 1usize;
            for k in 2..=n {
                factorial *= k;
            }
            assert_eq!(realizable_permutations(&simplicial).unwrap().order(), factorial);
            let stab = cone_diagonal_stabilizer(&simplicial).unwrap();
            assert_eq!(stab.partition, Partition::singletons(n));
        }
    });
}

#[test]
fn criterion_12_monomialization_of_random_torsion_groups() {
    criterion(12, "random conjugated permutation groups monomialize", || {
        let mut rng = ChaCha20Rng::seed_from_u64(120);
        let generator_pools: Vec<Vec<Perm>> = vec![
            vec![
                Perm::from_cycles(3, "(1 2)").unwrap(),
                Perm::from_cycles(3, "(1 2 3)").unwrap(),
            ],
            vec![
                Perm::from_cycles(4, "(1 2 3 4)").unwrap(),
                Perm::from_cycles(4, "(1 3)").unwrap(),
            ],
            vec![Perm::from_cycles(5, "(1 2 3 4 5)").unwrap()],
        ];
        for trial in 0..20 {
            let pool = &generator_pools[trial % generator_pools.len()];
            let n = pool[0].degree();
            let d: Vec<Rat> = (0..n).map(|_| random_rat(&mut rng)).collect();
            let twist = MonomialMap::diagonal(d.clone());
            let twist_inv = twist.inverse();
            let gens: Vec<MonomialMap> = pool
                .iter()
                .map(|p| {
                    twist
                        .compose(&MonomialMap::new(p.clone(), vec![Rat::zero(); n]))
                        .compose(&twist_inv)
                })
                .collect();
            let lambda = monomialize_torsion(&gens, 200).unwrap();
            // Independent purity check over the full generated group.
            let conj = MonomialMap::diagonal(lambda.clone());
            let conj_inv = conj.inverse();
            let mut closed: Vec<MonomialMap> = gens.clone();
            let mut frontier = gens.clone();
            while let Some(g) = frontier.pop() {
                for h in gens.clone() {
                    let prod = g.compose(&h);
                    if !closed.contains(&prod) {
                        closed.push(prod.clone());
                        frontier.push(prod);
                    }
                }
            }
            for g in &closed {
                let pure = conj_inv.compose(g).compose(&conj);
                assert!(
                    pure.c.iter().all(|x| x.is_zero()),
                    "conjugate must have exactly zero diagonal"
                );
            }
        }
    });
}
