//! Pointed polyhedral cones over ℚ given by extreme rays: validation,
//! the group of permutations realizable by invertible linear maps that
//! rescale rays, and the diagonal stabilizer as a partition subspace.

use crate::linalg::{feasible_mixed, feasible_strict, kernel, solve_affine, RationalMatrix};
use crate::perm::{all_perms, Perm, PermGroup};
use crate::scalar::Rat;
use crate::tropspace::{PartitionSubspace, TropSpaceError};
use num::Zero;

/// Ray-count cap for the brute-force permutation search (n! growth).
pub const CONE_RAY_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("ray {index} has dimension {got}, expected {expected}")]
    RayDimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("ray {0} is the zero vector")]
    ZeroRay(usize),
    #[error("cone contains a line (not pointed)")]
    ContainsLine,
    #[error("ray {0} is a nonnegative combination of the other rays")]
    NonExtremeRay(usize),
    #[error("{n} rays exceed the supported cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("stabilizer partition does not match solution dimension (theory violation): {0}")]
    PartitionAssertionFailure(String),
}

/// A pointed cone in ℚ^m listed by its extreme rays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cone {
    ambient_dim: usize,
    rays: Vec<Vec<Rat>>,
}

impl Cone {
    /// Validate: every ray nonzero of the right dimension, the cone pointed
    /// (a strictly separating functional exists), and every ray extreme
    /// (not a nonnegative combination of the others).
    pub fn validate(ambient_dim: usize, rays: Vec<Vec<Rat>>) -> Result<Cone, ConeError> {
        for (i, r) in rays.iter().enumerate() {
            if r.len() != ambient_dim {
                return Err(ConeError::RayDimensionMismatch {
                    index: i + 1,
                    expected: ambient_dim,
                    got: r.len(),
                });
            }
            if r.iter().all(|x| x.is_zero()) {
                return Err(ConeError::ZeroRay(i + 1));
            }
        }
        // Pointed iff some h has h . r > 0 for every ray r; otherwise a
        // nonnegative dependency among the rays produces a line.
        let forms: Vec<Vec<Rat>> = rays.clone();
        if feasible_strict(ambient_dim, &[], &forms)
            .expect("shape is consistent by construction")
            .is_none()
        {
            return Err(ConeError::ContainsLine);
        }
        // Extremality of ray i: no mu >= 0 over the others with
        // sum mu_j r_j = r_i.
        for i in 0..rays.len() {
            let others: Vec<&Vec<Rat>> = rays
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, r)| r)
                .collect();
            if others.is_empty() {
                continue;
            }
            let equalities: Vec<(Vec<Rat>, Rat)> = (0..ambient_dim)
                .map(|coord| {
                    let coeffs: Vec<Rat> = others.iter().map(|r| r[coord].clone()).collect();
                    (coeffs, rays[i][coord].clone())
                })
                .collect();
            let nonneg: Vec<(Vec<Rat>, Rat, bool)> = (0..others.len())
                .map(|j| {
                    let mut e = vec![Rat::zero(); others.len()];
                    e[j] = Rat::from_integer(1.into());
                    (e, Rat::zero(), false)
                })
                .collect();
            if feasible_mixed(others.len(), &equalities, &nonneg)
                .expect("shape is consistent by construction")
                .is_some()
            {
                return Err(ConeError::NonExtremeRay(i + 1));
            }
        }
        Ok(Cone { ambient_dim, rays })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Vec<Rat>] {
        &self.rays
    }

    pub fn n_rays(&self) -> usize {
        self.rays.len()
    }

    /// Matrix whose columns are the rays indexed by `idx`.
    fn column_matrix(&self, idx: &[usize]) -> RationalMatrix {
        let rows: Vec<Vec<Rat>> = (0..self.ambient_dim)
            .map(|coord| idx.iter().map(|&p| self.rays[p][coord].clone()).collect())
            .collect();
        RationalMatrix::from_rows_shaped(rows, idx.len()).expect("uniform ray dimension")
    }

    /// First linearly independent spanning subset of the rays, in input
    /// order, plus each ray's coordinates over that subset.
    fn spanning_data(&self) -> (Vec<usize>, Vec<Vec<Rat>>) {
        let mut span_idx: Vec<usize> = Vec::new();
        for i in 0..self.rays.len() {
            let in_span = !span_idx.is_empty()
                && solve_affine(&self.column_matrix(&span_idx), &self.rays[i])
                    .expect("shape is consistent by construction")
                    .is_some();
            if !in_span {
                span_idx.push(i);
            }
        }
        // Solve A gamma = r_j for each ray over the spanning columns.
        let a = self.column_matrix(&span_idx);
        let gammas: Vec<Vec<Rat>> = self
            .rays
            .iter()
            .map(|r| {
                let sol = solve_affine(&a, r)
                    .expect("shape is consistent by construction")
                    .expect("spanning subset spans every ray");
                assert!(sol.kernel_basis.is_empty(), "spanning rays are independent");
                sol.particular
            })
            .collect();
        (span_idx, gammas)
    }

    /// Equality rows, over unknowns λ ∈ ℚ^n, expressing that the linear map
    /// sending each spanning ray r_p to λ_p r_{σ(p)} also sends every other
    /// ray r_j to λ_j r_{σ(j)}.
    fn sigma_equalities(
        &self,
        sigma: &Perm,
        span_idx: &[usize],
        gammas: &[Vec<Rat>],
    ) -> Vec<(Vec<Rat>, Rat)> {
        let n = self.rays.len();
        let mut eqs = Vec::new();
        for j in 0..n {
            if span_idx.contains(&j) {
                continue;
            }
            for coord in 0..self.ambient_dim {
                let mut coeffs = vec![Rat::zero(); n];
                for (t, &p) in span_idx.iter().enumerate() {
                    coeffs[p] += &gammas[j][t] * &self.rays[sigma.apply(p)][coord];
                }
                coeffs[j] -= &self.rays[sigma.apply(j)][coord];
                eqs.push((coeffs, Rat::zero()));
            }
        }
        eqs
    }

    /// Check an exact witness: λ > 0 entrywise and the induced map sends
    /// every ray correctly; the image rays span the same subspace.
    fn verify_witness(&self, sigma: &Perm, lambda: &[Rat], span_idx: &[usize], gammas: &[Vec<Rat>]) {
        assert!(lambda.iter().all(|l| l > &Rat::zero()), "witness scalings must be positive");
        for j in 0..self.rays.len() {
            for coord in 0..self.ambient_dim {
                let mut image = Rat::zero();
                for (t, &p) in span_idx.iter().enumerate() {
                    image += &gammas[j][t] * &lambda[p] * &self.rays[sigma.apply(p)][coord];
                }
                assert_eq!(
                    image,
                    &lambda[j] * &self.rays[sigma.apply(j)][coord],
                    "witness must realize the permutation exactly"
                );
            }
        }
        let image_idx: Vec<usize> = span_idx.iter().map(|&p| sigma.apply(p)).collect();
        assert!(
            kernel(&self.column_matrix(&image_idx)).is_empty(),
            "realizing map must be invertible on the span"
        );
    }
}

/// All permutations of the rays realizable by an invertible linear map that
/// sends each ray to a positive multiple of its image ray.
pub fn realizable_permutations(cone: &Cone) -> Result<PermGroup, ConeError> {
    let n = cone.n_rays();
    if n > CONE_RAY_CAP {
        return Err(ConeError::CapExceeded { n, cap: CONE_RAY_CAP });
    }
    let (span_idx, gammas) = cone.spanning_data();
    let mut found = Vec::new();
    for sigma in all_perms(n) {
        let eqs = cone.sigma_equalities(&sigma, &span_idx, &gammas);
        let positive: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                let mut e = vec![Rat::zero(); n];
                e[i] = Rat::from_integer(1.into());
                e
            })
            .collect();
        if let Some(lambda) = feasible_strict(n, &eqs, &positive)
            .expect("shape is consistent by construction")
        {
            cone.verify_witness(&sigma, &lambda, &span_idx, &gammas);
            found.push(sigma);
        }
    }
    Ok(PermGroup::from_elements(n, found).expect("realizable permutations form a group"))
}

/// The diagonal stabilizer: scalings λ realizing the identity permutation.
/// The solution space of the consistency system is a partition subspace in
/// the λ coordinates, which is exactly the logarithmic-coordinate statement.
pub fn cone_diagonal_stabilizer(cone: &Cone) -> Result<PartitionSubspace, ConeError> {
    let n = cone.n_rays();
    let (span_idx, gammas) = cone.spanning_data();
    let eqs = cone.sigma_equalities(&Perm::identity(n), &span_idx, &gammas);
    let rows: Vec<Vec<Rat>> = eqs.into_iter().map(|(c, _)| c).collect();
    let a = RationalMatrix::from_rows_shaped(rows, n).expect("rows share width n");
    let raw = kernel(&a);
    let ps = PartitionSubspace::from_kernel(n, &raw).map_err(|e| match e {
        TropSpaceError::PartitionAssertionFailure(msg) => ConeError::PartitionAssertionFailure(msg),
        other => panic!("unexpected subspace failure: {other}"),
    })?;
    // The all-ones scaling (the identity map) must always be a solution.
    let ones = vec![Rat::from_integer(1.into()); n];
    let image = a.mul_vec(&ones).expect("width n");
    assert!(image.iter().all(|e| e.is_zero()), "identity scaling must stabilize the cone");
    Ok(ps)
}
