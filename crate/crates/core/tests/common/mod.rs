//! Shared fixtures for the integration suites: the corpus of matroids and
//! valuated matroids every suite exercises.

#![allow(dead_code)]

use tropmat_core::groups::GroupHom;
use tropmat_core::perm::PermGroup;
use tropmat_core::{rat, Matroid, TropScalar, ValuatedMatroid};

/// U_{2,4} with weights (-2, 0, 0, 0, 0, -1) on the lexicographically
/// ordered bases {1,2},{1,3},{1,4},{2,3},{2,4},{3,4}.
pub fn weighted_u24() -> ValuatedMatroid {
    ValuatedMatroid::validate(Matroid::uniform(2, 4), finite(&[-2, 0, 0, 0, 0, -1])).unwrap()
}

pub fn trivial_u24() -> ValuatedMatroid {
    ValuatedMatroid::trivial(Matroid::uniform(2, 4))
}

/// Integer weights as finite tropical scalars.
pub fn finite(ws: &[i64]) -> Vec<TropScalar> {
    ws.iter().map(|&w| TropScalar::Finite(rat(w))).collect()
}

/// The graphic matroid of the complete graph on four vertices.  Edges are
/// numbered 1={1,2}, 2={1,3}, 3={1,4}, 4={2,3}, 5={2,4}, 6={3,4}; bases are
/// the 16 spanning trees (all 3-subsets except the four triangles).
pub fn k4() -> Matroid {
    let triangles = [vec![1, 2, 4], vec![1, 3, 5], vec![2, 3, 6], vec![4, 5, 6]];
    let mut bases = Vec::new();
    for a in 1..=6usize {
        for b in (a + 1)..=6 {
            for c in (b + 1)..=6 {
                let t = vec![a, b, c];
                if !triangles.contains(&t) {
                    bases.push(t);
                }
            }
        }
    }
    assert_eq!(bases.len(), 16);
    Matroid::validate_1based(6, 3, &bases).unwrap()
}

/// The Fano plane: seven points, seven lines, bases are the 28 non-collinear
/// triples.
pub fn fano() -> Matroid {
    let lines = [
        vec![1, 2, 3],
        vec![1, 4, 5],
        vec![1, 6, 7],
        vec![2, 4, 6],
        vec![2, 5, 7],
        vec![3, 4, 7],
        vec![3, 5, 6],
    ];
    let mut bases = Vec::new();
    for a in 1..=7usize {
        for b in (a + 1)..=7 {
            for c in (b + 1)..=7 {
                let t = vec![a, b, c];
                if !lines.contains(&t) {
                    bases.push(t);
                }
            }
        }
    }
    assert_eq!(bases.len(), 28);
    Matroid::validate_1based(7, 3, &bases).unwrap()
}

/// Rank-2 matroid on four elements with parallel classes {1,2} and {3,4}.
pub fn parallel_classes() -> Matroid {
    Matroid::validate_1based(4, 2, &[vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]).unwrap()
}

/// The simple corpus for small exhaustive claims (n ≤ 7).
pub fn simple_corpus() -> Vec<(&'static str, Matroid)> {
    vec![
        ("U_{2,3}", Matroid::uniform(2, 3)),
        ("U_{2,4}", Matroid::uniform(2, 4)),
        ("U_{3,5}", Matroid::uniform(3, 5)),
        ("U_{2,5}", Matroid::uniform(2, 5)),
        ("free on 3", Matroid::free(3)),
        ("free on 4", Matroid::free(4)),
        ("K_4 graphic", k4()),
        ("Fano", fano()),
    ]
}

/// Orbit count by the most naive route: conjugate each unvisited hom by
/// every single element of H and sweep out its full orbit.
pub fn naive_orbit_count(homs: &[GroupHom], h: &PermGroup) -> usize {
    let mut remaining: Vec<GroupHom> = homs.to_vec();
    let mut orbits = 0;
    while let Some(seed) = remaining.first().cloned() {
        orbits += 1;
        let mut orbit = vec![seed.clone()];
        let mut frontier = vec![seed];
        while let Some(a) = frontier.pop() {
            for phi in h.elements() {
                let phi_inv = phi.inverse();
                let conj = GroupHom {
                    images: a
                        .images
                        .iter()
                        .map(|p| phi.compose(p).compose(&phi_inv))
                        .collect(),
                };
                if !orbit.contains(&conj) {
                    orbit.push(conj.clone());
                    frontier.push(conj);
                }
            }
        }
        remaining.retain(|x| !orbit.contains(x));
    }
    orbits
}
