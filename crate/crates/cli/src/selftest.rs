//! Seeded randomized self-checks.  Each check exercises a library law on
//! random instances with exact comparisons; the seed comes from
//! TROPMAT_SEED (default 0), so a failing run is reproducible verbatim.

use crate::failure::Failure;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use serde_json::{json, Value};
use tropmat_core::bmod::{congruence_closure, BPresentation};
use tropmat_core::groups::{monomialize_torsion, MonomialMap};
use tropmat_core::json;
use tropmat_core::matroid::Matroid;
use tropmat_core::perm::{Perm, PermGroup};
use tropmat_core::scalar::{rat, Rat, TropScalar};
use tropmat_core::tropspace::{contains, generators, in_span, GeneratorSet};
use tropmat_core::valuated::ValuatedMatroid;

pub fn run() -> Result<Value, Failure> {
    let seed = match std::env::var("TROPMAT_SEED") {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::usage("TROPMAT_SEED must be an unsigned integer"))?,
        Err(_) => 0,
    };
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let checks = [
        ("rescaling-invariance", rescaling_invariance(&mut rng)),
        ("membership-routes", membership_routes(&mut rng)),
        ("monomialize-purity", monomialize_purity(&mut rng)),
        ("congruence-closure-laws", closure_laws(&mut rng)),
    ];
    let mut entries = Vec::new();
    for (name, outcome) in checks {
        match outcome {
            Ok(samples) => entries.push(json::object(vec![
                ("name", json!(name)),
                ("passed", json!(true)),
                ("samples", json!(samples)),
            ])),
            Err(msg) => {
                return Err(Failure::validation(
                    "selftest-failure",
                    format!("{name} (seed {seed}): {msg}"),
                ))
            }
        }
    }
    Ok(json::object(vec![
        ("seed", json!(seed)),
        ("passed", json!(true)),
        ("checks", Value::Array(entries)),
    ]))
}

fn weighted_u24() -> ValuatedMatroid {
    let weights = [-2i64, 0, 0, 0, 0, -1]
        .into_iter()
        .map(|w| TropScalar::Finite(rat(w)))
        .collect();
    ValuatedMatroid::validate(Matroid::uniform(2, 4), weights).unwrap()
}

/// Projective rescaling must leave the weak automorphism group unchanged,
/// and every member must come with a verifying witness.
fn rescaling_invariance(rng: &mut ChaCha20Rng) -> Result<usize, String> {
    let base = weighted_u24();
    let base_group = base.weak_automorphism_group().map_err(|e| e.to_string())?;
    let samples = 10;
    for _ in 0..samples {
        let t: Vec<Rat> = (0..4).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
        let rescaled = base.rescale(&t);
        let group = rescaled.weak_automorphism_group().map_err(|e| e.to_string())?;
        if group.elements() != base_group.elements() {
            return Err(format!("group changed under rescaling by {t:?}"));
        }
        for sigma in group.elements() {
            let witness = rescaled
                .is_weak_automorphism(sigma)
                .map_err(|e| e.to_string())?
                .ok_or_else(|| format!("{sigma} lost its witness after rescaling"))?;
            if !rescaled.witness_holds(&witness) {
                return Err(format!("witness for {sigma} fails re-verification"));
            }
        }
    }
    Ok(samples)
}

fn random_vector(rng: &mut ChaCha20Rng, n: usize) -> Vec<TropScalar> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.2) {
                TropScalar::Bottom
            } else {
                TropScalar::Finite(rat(rng.gen_range(-6i64..=6)))
            }
        })
        .collect()
}

fn random_combination(rng: &mut ChaCha20Rng, gens: &GeneratorSet) -> Vec<TropScalar> {
    let mut acc = vec![TropScalar::Bottom; gens.n];
    loop {
        let mut used = false;
        for g in &gens.generators {
            if rng.gen_bool(0.4) {
                continue;
            }
            used = true;
            let lambda = TropScalar::Finite(rat(rng.gen_range(-5i64..=5)));
            for (slot, coord) in acc.iter_mut().zip(&g.vector) {
                *slot = slot.trop_add(&lambda.trop_mul(coord));
            }
        }
        if used {
            return acc;
        }
    }
}

/// Bend-relation membership and residuation span membership must agree on
/// every sampled vector, and tropical combinations of the generators must
/// always be members.
fn membership_routes(rng: &mut ChaCha20Rng) -> Result<usize, String> {
    let u23 = ValuatedMatroid::trivial(Matroid::uniform(2, 3));
    let instances = [weighted_u24(), u23];
    let mut samples = 0;
    for vm in &instances {
        let gens = generators(vm).map_err(|e| e.to_string())?;
        for i in 0..40 {
            let x = if i < 15 {
                random_combination(rng, &gens)
            } else {
                random_vector(rng, gens.n)
            };
            let bend = contains(vm, &x).map_err(|e| e.to_string())?;
            let span = in_span(&x, &gens).is_some();
            if bend != span {
                return Err(format!("routes disagree on {x:?}"));
            }
            if i < 15 && !bend {
                return Err(format!("combination {x:?} escaped the space"));
            }
            samples += 1;
        }
    }
    Ok(samples)
}

/// A permutation group conjugated by a random diagonal must monomialize
/// back to pure permutations.
fn monomialize_purity(rng: &mut ChaCha20Rng) -> Result<usize, String> {
    let s3 = PermGroup::closure(
        3,
        &[Perm::from_cycles(3, "(1 2)").unwrap(), Perm::from_cycles(3, "(1 2 3)").unwrap()],
    );
    let c4 = PermGroup::closure(4, &[Perm::from_cycles(4, "(1 2 3 4)").unwrap()]);
    let samples = 10;
    for round in 0..samples {
        let group = if round % 2 == 0 { &s3 } else { &c4 };
        let n = group.degree();
        let d: Vec<Rat> = (0..n).map(|_| rat(rng.gen_range(-8i64..=8))).collect();
        let twist = MonomialMap::diagonal(d);
        let twist_inv = twist.inverse();
        let maps: Vec<MonomialMap> = group
            .elements()
            .iter()
            .map(|sigma| {
                let pure = MonomialMap::new(sigma.clone(), vec![rat(0); n]);
                twist.compose(&pure).compose(&twist_inv)
            })
            .collect();
        let lambda = monomialize_torsion(&maps, 200).map_err(|e| e.to_string())?;
        let conj = MonomialMap::diagonal(lambda);
        let conj_inv = conj.inverse();
        for m in &maps {
            if !conj_inv.compose(m).compose(&conj).is_pure_permutation() {
                return Err(format!("residual diagonal after conjugating {m:?}"));
            }
        }
    }
    Ok(samples)
}

/// Congruence closure must fix its representatives, honor the seeded
/// relations, and give an associative join with a bottom element.
fn closure_laws(rng: &mut ChaCha20Rng) -> Result<usize, String> {
    let samples = 20;
    for _ in 0..samples {
        let n = rng.gen_range(3usize..=5);
        let full = 1u32 << n;
        let relations: Vec<(u32, u32)> = (0..rng.gen_range(0..=4))
            .map(|_| (rng.gen_range(1..full), rng.gen_range(1..full)))
            .collect();
        let p = BPresentation::new(n, relations.clone()).map_err(|e| e.to_string())?;
        let m = congruence_closure(&p).map_err(|e| e.to_string())?;
        for &r in m.elements() {
            if m.class_of(r) != r {
                return Err(format!("representative {r:#b} not fixed"));
            }
        }
        for &(l, r) in &relations {
            if m.class_of(l) != m.class_of(r) {
                return Err(format!("seeded relation {l:#b} = {r:#b} broken"));
            }
        }
        for _ in 0..20 {
            let (a, b, c) =
                (rng.gen_range(0..full), rng.gen_range(0..full), rng.gen_range(0..full));
            if m.join(m.join(a, b), c) != m.join(a, m.join(b, c)) {
                return Err(format!("join not associative at ({a:#b}, {b:#b}, {c:#b})"));
            }
            if m.join(a, 0) != m.class_of(a) {
                return Err(format!("empty set is not neutral at {a:#b}"));
            }
            if !m.leq(a, m.join(a, b)) {
                return Err(format!("join not an upper bound at ({a:#b}, {b:#b})"));
            }
        }
    }
    Ok(samples)
}
