//! Exact computational tropical algebra: valuated matroids and their weak
//! automorphism groups, tropical linear spaces with their semidirect
//! automorphism structure, finite Boolean modules, partition subspaces of
//! linear tropical equations, polyhedral-cone symmetry groups, and the
//! classification machinery for monomial actions of finite groups.  All
//! arithmetic is over ℚ ∪ {−∞}; nothing is floating point.

pub mod bmod;
pub mod cone;
pub mod groups;
pub mod json;
pub mod linalg;
pub mod linsub;
pub mod matroid;
pub mod perm;
pub mod scalar;
pub mod sets;
pub mod tropspace;
pub mod valuated;

pub use bmod::{congruence_closure, qm_boolean, BModError, BPresentation, FiniteBModule};
pub use cone::{cone_diagonal_stabilizer, realizable_permutations, Cone, ConeError};
pub use groups::{
    classify_weak_isomorphism, diagonal_conjugator, enumerate_homs, monomialize_torsion,
    splitting_section, ConjugatorSolution, FiniteGroup, GroupError, GroupHom, MonomialHom,
    MonomialMap,
};
pub use linalg::{feasible_strict, kernel, solve_affine, AffineSolution, LinAlgError, RationalMatrix};
pub use linsub::{
    member, partition_of_group, LinsubError, Partition, TropLinearEquation,
};
pub use matroid::{Matroid, MatroidError};
pub use perm::{Perm, PermError, PermGroup};
pub use scalar::{rat, rat_parse, ratq, BoolScalar, Rat, ScalarError, TropScalar};
pub use tropspace::{
    aut_structure, contains, diagonal_stabilizer, generators, in_span, monomial_apply,
    AutStructure, Generator, GeneratorSet, PartitionSubspace, TropSpaceError,
};
pub use valuated::{ValuatedError, ValuatedMatroid, WeakAutWitness};
