//! Fixtures shared by the benchmark suite: representative instances that
//! are large enough to time but small enough to run on every machine.

use tropmat_core::bmod::BPresentation;
use tropmat_core::cone::Cone;
use tropmat_core::linalg::RationalMatrix;
use tropmat_core::scalar::{rat, ratq, Rat, TropScalar};
use tropmat_core::{Matroid, ValuatedMatroid};

/// U_{2,4} with weights (-2, 0, 0, 0, 0, -1) on lexicographic bases.
pub fn weighted_u24() -> ValuatedMatroid {
    let weights = [-2i64, 0, 0, 0, 0, -1]
        .into_iter()
        .map(|w| TropScalar::Finite(rat(w)))
        .collect();
    ValuatedMatroid::validate(Matroid::uniform(2, 4), weights).unwrap()
}

/// The Fano plane: all 3-subsets of {1..7} except the seven lines.
pub fn fano() -> Matroid {
    let lines: [[usize; 3]; 7] = [
        [1, 2, 3],
        [1, 4, 5],
        [1, 6, 7],
        [2, 4, 6],
        [2, 5, 7],
        [3, 4, 7],
        [3, 5, 6],
    ];
    let mut bases = Vec::new();
    for a in 1..=7usize {
        for b in (a + 1)..=7 {
            for c in (b + 1)..=7 {
                if !lines.contains(&[a, b, c]) {
                    bases.push(vec![a, b, c]);
                }
            }
        }
    }
    Matroid::validate_1based(7, 3, &bases).unwrap()
}

/// The cone over the unit square: rays (±1, ±1, 1), ordered cyclically.
pub fn square_cone() -> Cone {
    let rays = [[1i64, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]
        .into_iter()
        .map(|r| r.into_iter().map(rat).collect())
        .collect();
    Cone::validate(3, rays).unwrap()
}

/// A presentation on ten generators whose closure has to propagate
/// identifications through several rounds.
pub fn mixing_presentation() -> BPresentation {
    let relations: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![1, 2], vec![3]),
        (vec![3, 4], vec![5, 6]),
        (vec![6, 7], vec![8]),
        (vec![8, 9], vec![10, 1]),
        (vec![2, 5], vec![7, 9]),
        (vec![1, 10], vec![4]),
    ];
    BPresentation::from_1based(10, &relations).unwrap()
}

/// A dense k-by-k rational system with a known solution.
pub fn dense_system(k: usize) -> (RationalMatrix, Vec<Rat>) {
    let rows: Vec<Vec<Rat>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| ratq((i * j % 7) as i64 - 3, (i + j) as i64 % 5 + 1))
                .collect()
        })
        .collect();
    let a = RationalMatrix::from_rows_shaped(rows, k).unwrap();
    let x0: Vec<Rat> = (0..k).map(|i| ratq(i as i64 - 11, 3)).collect();
    let b = a.mul_vec(&x0).expect("x0 matches the column count");
    (a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_well_formed() {
        assert_eq!(weighted_u24().matroid().bases().len(), 6);
        assert_eq!(fano().bases().len(), 28);
        assert_eq!(square_cone().n_rays(), 4);
        assert_eq!(mixing_presentation().n, 10);
        let (a, b) = dense_system(8);
        assert!(tropmat_core::solve_affine(&a, &b).unwrap().is_some());
    }
}
