//! Finite groups and their monomial representations: Cayley-table groups,
//! homomorphism enumeration into permutation groups, conjugacy
//! classification, splitting a lifted section into a homomorphism by an exact
//! coboundary solve, diagonal conjugators, and monomialization of finite
//! (torsion) monomial subgroups.

use crate::linalg::{solve_affine, RationalMatrix};
use crate::perm::{Perm, PermGroup};
use crate::scalar::{Rat, TropScalar};
use crate::tropspace::PartitionSubspace;
use num::Zero;
use std::collections::{BTreeMap, BTreeSet};

/// Largest group order accepted at load.
pub const GROUP_ORDER_CAP: usize = 200;

/// Closure cap for monomialize_torsion.
pub const TORSION_CLOSURE_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    BadGroup(String),
    #[error("homomorphism images do not respect the multiplication table: {0}")]
    BadHom(String),
    #[error("lift is not a section over H: {0}")]
    BadLift(String),
    #[error("the 2-cocycle of the lift is not constant on partition classes at ({sigma}, {rho})")]
    CocycleOutsideV { sigma: String, rho: String },
    #[error("coboundary system unsolvable (theory violation for a finite group)")]
    Unsolvable,
    #[error("permutation images differ at source element {0}, no diagonal conjugator can exist")]
    ImageMismatch(usize),
    #[error("generated monomial group exceeded {cap} elements; not a torsion subgroup")]
    NotTorsion { cap: usize },
}

/// A finite group as a Cayley table: elements are 0..order, `table[a][b]` is
/// the product a.b, and a designated generating sequence is kept for
/// backtracking enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<Vec<usize>>,
    identity: usize,
    inverses: Vec<usize>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    /// Verify associativity, identity, inverses, and that the designated
    /// generators generate, then construct.
    pub fn from_table(table: Vec<Vec<usize>>, generators: Vec<usize>) -> Result<Self, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::BadGroup("empty table".into()));
        }
        if order > GROUP_ORDER_CAP {
            return Err(GroupError::BadGroup(format!(
                "order {} exceeds the cap {}",
                order, GROUP_ORDER_CAP
            )));
        }
        for row in &table {
            if row.len() != order {
                return Err(GroupError::BadGroup("table is not square".into()));
            }
            if row.iter().any(|&v| v >= order) {
                return Err(GroupError::BadGroup("table entry out of range".into()));
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e][x] == x && table[x][e] == x))
            .ok_or_else(|| GroupError::BadGroup("no identity element".into()))?;
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(GroupError::BadGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let mut inverses = vec![usize::MAX; order];
        for a in 0..order {
            let inv = (0..order)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| GroupError::BadGroup(format!("element {a} has no inverse")))?;
            inverses[a] = inv;
        }
        for &g in &generators {
            if g >= order {
                return Err(GroupError::BadGroup(format!("generator {g} out of range")));
            }
        }
        let group = FiniteGroup { order, table, identity, inverses, generators };
        let reached = group.generated_set();
        if reached.len() != order {
            return Err(GroupError::BadGroup(format!(
                "generators reach only {} of {} elements",
                reached.len(),
                order
            )));
        }
        Ok(group)
    }

    /// The subgroup reachable from the designated generators.
    fn generated_set(&self) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut frontier = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in &self.generators {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    frontier.push(y);
                }
            }
        }
        (0..self.order).filter(|&x| seen[x]).collect()
    }

    /// The cyclic group Z/k with generator 1.
    pub fn cyclic(k: usize) -> FiniteGroup {
        assert!(k >= 1);
        let table = (0..k).map(|a| (0..k).map(|b| (a + b) % k).collect()).collect();
        let gens = if k == 1 { vec![] } else { vec![1] };
        FiniteGroup::from_table(table, gens).expect("cyclic tables are groups")
    }

    /// Direct product; element (a, b) is encoded as a * |B| + b.
    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> FiniteGroup {
        let n = a.order * b.order;
        let code = |x: usize, y: usize| x * b.order + y;
        let mut table = vec![vec![0usize; n]; n];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        table[code(x1, y1)][code(x2, y2)] =
                            code(a.table[x1][x2], b.table[y1][y2]);
                    }
                }
            }
        }
        let mut gens: Vec<usize> = a.generators.iter().map(|&g| code(g, b.identity)).collect();
        gens.extend(b.generators.iter().map(|&g| code(a.identity, g)));
        FiniteGroup::from_table(table, gens).expect("products of groups are groups")
    }

    /// Abstract group of a permutation closure; returns the group plus the
    /// sorted element list realizing each index as a permutation.
    pub fn from_perms(degree: usize, gens: &[Perm]) -> Result<(FiniteGroup, Vec<Perm>), GroupError> {
        let closure = PermGroup::closure(degree, gens);
        if closure.order() > GROUP_ORDER_CAP {
            return Err(GroupError::BadGroup(format!(
                "closure order {} exceeds the cap {}",
                closure.order(),
                GROUP_ORDER_CAP
            )));
        }
        let elements: Vec<Perm> = closure.elements().to_vec();
        let index: BTreeMap<&Perm, usize> = elements.iter().zip(0..).collect();
        let table: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let gen_idx: Vec<usize> = if gens.is_empty() {
            vec![]
        } else {
            gens.iter().map(|g| index[g]).collect()
        };
        let group = FiniteGroup::from_table(table, gen_idx)?;
        Ok((group, elements))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.table[x][a];
            k += 1;
        }
        k
    }

    /// For each element, a factorization chain reaching it from the identity:
    /// entry (prev, gen_index) with element = prev . generators[gen_index].
    fn words(&self) -> Vec<Option<(usize, usize)>> {
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.order];
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = std::collections::VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for (gi, &g) in self.generators.iter().enumerate() {
                let y = self.table[x][g];
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some((x, gi));
                    queue.push_back(y);
                }
            }
        }
        parent
    }
}

/// An invertible tropical monomial map: x maps to the vector with
/// result_{sigma(k)} = c_k + x_k.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialMap {
    pub sigma: Perm,
    pub c: Vec<Rat>,
}

impl MonomialMap {
    pub fn new(sigma: Perm, c: Vec<Rat>) -> MonomialMap {
        assert_eq!(sigma.degree(), c.len(), "diagonal length must match degree");
        MonomialMap { sigma, c }
    }

    pub fn identity(n: usize) -> MonomialMap {
        MonomialMap::new(Perm::identity(n), vec![Rat::zero(); n])
    }

    pub fn diagonal(c: Vec<Rat>) -> MonomialMap {
        MonomialMap::new(Perm::identity(c.len()), c)
    }

    pub fn degree(&self) -> usize {
        self.sigma.degree()
    }

    /// (sigma, c) . (rho, d) = (sigma rho, k -> c_{rho(k)} + d_k): apply the
    /// right factor first.
    pub fn compose(&self, other: &MonomialMap) -> MonomialMap {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        let c = (0..self.degree())
            .map(|k| &self.c[other.sigma.apply(k)] + &other.c[k])
            .collect();
        MonomialMap::new(self.sigma.compose(&other.sigma), c)
    }

    /// (sigma^{-1}, k -> -c_{sigma^{-1}(k)}).
    pub fn inverse(&self) -> MonomialMap {
        let inv = self.sigma.inverse();
        let c = (0..self.degree()).map(|k| -&self.c[inv.apply(k)]).collect();
        MonomialMap::new(inv, c)
    }

    pub fn is_pure_permutation(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }

    /// Apply to a tropical vector; panics on length mismatch (callers check).
    pub fn apply(&self, x: &[TropScalar]) -> Vec<TropScalar> {
        assert_eq!(x.len(), self.degree(), "vector length must match degree");
        let mut out = vec![TropScalar::Bottom; x.len()];
        for k in 0..x.len() {
            out[self.sigma.apply(k)] = TropScalar::Finite(self.c[k].clone()).trop_mul(&x[k]);
        }
        out
    }
}

/// A homomorphism from a Cayley-table group into permutations: `images[a]`
/// is the image of source element a.  Verified on the whole table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GroupHom {
    pub images: Vec<Perm>,
}

impl GroupHom {
    pub fn new(source: &FiniteGroup, images: Vec<Perm>) -> Result<GroupHom, GroupError> {
        verify_hom(source, &images, |a, b| a.compose(b))?;
        Ok(GroupHom { images })
    }
}

/// A homomorphism with monomial-map values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MonomialHom {
    pub images: Vec<MonomialMap>,
}

impl MonomialHom {
    pub fn new(source: &FiniteGroup, images: Vec<MonomialMap>) -> Result<MonomialHom, GroupError> {
        verify_hom(source, &images, |a, b| a.compose(b))?;
        Ok(MonomialHom { images })
    }
}

fn verify_hom<T: Clone + Eq + std::fmt::Debug>(
    source: &FiniteGroup,
    images: &[T],
    compose: impl Fn(&T, &T) -> T,
) -> Result<(), GroupError> {
    if images.len() != source.order() {
        return Err(GroupError::BadHom(format!(
            "{} images for a group of order {}",
            images.len(),
            source.order()
        )));
    }
    for a in 0..source.order() {
        for b in 0..source.order() {
            if compose(&images[a], &images[b]) != images[source.op(a, b)] {
                return Err(GroupError::BadHom(format!("fails at pair ({a}, {b})")));
            }
        }
    }
    Ok(())
}

/// All homomorphisms G -> H, by backtracking over generator images (pruned
/// by element-order divisibility) and verifying the full Cayley table.
/// Output is sorted by image list, hence deterministic.
pub fn enumerate_homs(g: &FiniteGroup, h: &PermGroup) -> Vec<GroupHom> {
    let words = g.words();
    let gen_orders: Vec<usize> = g.generators().iter().map(|&x| g.element_order(x)).collect();
    let mut homs: Vec<GroupHom> = Vec::new();
    let mut choice: Vec<Perm> = Vec::new();

    fn extend(
        g: &FiniteGroup,
        words: &[Option<(usize, usize)>],
        choice: &[Perm],
        degree: usize,
    ) -> Vec<Perm> {
        // Build phi on all elements from generator images along BFS words.
        let mut images: Vec<Option<Perm>> = vec![None; g.order()];
        images[g.identity()] = Some(Perm::identity(degree));
        // words form a BFS tree, so repeated sweeps settle quickly; a single
        // pass in BFS discovery order suffices because parents precede
        // children, but order of indices is arbitrary — iterate until filled.
        let mut remaining = g.order() - 1;
        while remaining > 0 {
            let mut progressed = false;
            for x in 0..g.order() {
                if images[x].is_some() {
                    continue;
                }
                if let Some((prev, gi)) = words[x] {
                    if let Some(prev_img) = images[prev].clone() {
                        images[x] = Some(prev_img.compose(&choice[gi]));
                        remaining -= 1;
                        progressed = true;
                    }
                }
            }
            assert!(progressed, "word chains must reach every element");
        }
        images.into_iter().map(|p| p.expect("filled above")).collect()
    }

    fn rec(
        g: &FiniteGroup,
        h: &PermGroup,
        words: &[Option<(usize, usize)>],
        gen_orders: &[usize],
        choice: &mut Vec<Perm>,
        homs: &mut Vec<GroupHom>,
    ) {
        if choice.len() == g.generators().len() {
            let images = extend(g, words, choice, h.degree());
            if verify_hom(g, &images, |a, b| a.compose(b)).is_ok()
                && images.iter().all(|p| h.contains(p))
            {
                homs.push(GroupHom { images });
            }
            return;
        }
        let slot = choice.len();
        for cand in h.elements() {
            // The image order must divide the generator order.
            if gen_orders[slot] % cand.order() != 0 {
                continue;
            }
            choice.push(cand.clone());
            rec(g, h, words, gen_orders, choice, homs);
            choice.pop();
        }
    }

    rec(g, h, &words, &gen_orders, &mut choice, &mut homs);
    homs.sort();
    homs.dedup();
    homs
}

/// Orbit representatives of homs under conjugation by H: alpha ~ phi alpha
/// phi^{-1}.  Returns the least representative of each orbit, sorted.
pub fn classify_weak_isomorphism(homs: &[GroupHom], h: &PermGroup) -> Vec<GroupHom> {
    let index: BTreeMap<&GroupHom, usize> = homs.iter().zip(0..).collect();
    let mut seen = vec![false; homs.len()];
    let mut reps = Vec::new();
    for start in 0..homs.len() {
        if seen[start] {
            continue;
        }
        let mut orbit_min = homs[start].clone();
        for phi in h.elements() {
            let inv = phi.inverse();
            let conj = GroupHom {
                images: homs[start]
                    .images
                    .iter()
                    .map(|p| phi.compose(p).compose(&inv))
                    .collect(),
            };
            let i = *index
                .get(&conj)
                .expect("conjugate of a homomorphism is a homomorphism in the list");
            seen[i] = true;
            if conj < orbit_min {
                orbit_min = conj;
            }
        }
        reps.push(orbit_min);
    }
    reps.sort();
    reps
}

/// Correct a lifted section of H into monomial maps to an honest
/// homomorphism, by an exact coboundary solve with values in the partition
/// subspace V.
///
/// The lift must be a section (lift(sigma).sigma == sigma) with lift(id) the
/// identity map.  The 2-cocycle defect
///     delta(sigma, rho)_k = u_sigma[rho(k)] + u_rho[k] - u_{sigma rho}[k]
/// must be constant on the classes of V (CocycleOutsideV otherwise); the
/// solve finds b: H -> V, b(id) = 0, with
///     b_sigma[rho(k)] + b_rho[k] - b_{sigma rho}[k] = delta(sigma, rho)_k,
/// and the corrected section is sigma -> (sigma, u_sigma - b_sigma).  The
/// result is verified multiplicative on every pair before returning.
pub fn splitting_section(
    h: &PermGroup,
    v: &PartitionSubspace,
    lift: &BTreeMap<Perm, MonomialMap>,
) -> Result<BTreeMap<Perm, MonomialMap>, GroupError> {
    let n = h.degree();
    let elements = h.elements();
    if lift.len() != elements.len() {
        return Err(GroupError::BadLift(format!(
            "lift covers {} of {} elements",
            lift.len(),
            elements.len()
        )));
    }
    for sigma in elements {
        let m = lift
            .get(sigma)
            .ok_or_else(|| GroupError::BadLift(format!("no lift for {}", sigma)))?;
        if &m.sigma != sigma {
            return Err(GroupError::BadLift(format!(
                "lift of {} projects to {}",
                sigma, m.sigma
            )));
        }
        if m.degree() != n {
            return Err(GroupError::BadLift("degree mismatch".into()));
        }
    }
    let id_lift = &lift[&Perm::identity(n)];
    if !id_lift.is_pure_permutation() {
        return Err(GroupError::BadLift("lift of the identity must have zero diagonal".into()));
    }

    let class_ids = v.partition.class_ids();
    let m = v.partition.class_count();
    let index: BTreeMap<&Perm, usize> = elements.iter().zip(0..).collect();
    // Unknowns: b(sigma) = sum over classes of beta_{sigma, class} * indicator;
    // b(identity) = 0 is built in by skipping its unknowns (identity is the
    // lex-least permutation, index 0).
    let unknowns = (elements.len() - 1) * m;
    let col = |sigma_idx: usize, class: usize| (sigma_idx - 1) * m + class;

    let mut rows: BTreeSet<(Vec<Rat>, Rat)> = BTreeSet::new();
    for sigma in elements {
        for rho in elements {
            let u_sigma = &lift[sigma].c;
            let u_rho = &lift[rho].c;
            let sigma_rho = sigma.compose(rho);
            let u_prod = &lift[&sigma_rho].c;
            let delta: Vec<Rat> = (0..n)
                .map(|k| &u_sigma[rho.apply(k)] + &u_rho[k] - &u_prod[k])
                .collect();
            // The defect must be constant on classes to lie in V.
            for block in v.partition.blocks() {
                if block.iter().any(|&i| delta[i] != delta[block[0]]) {
                    return Err(GroupError::CocycleOutsideV {
                        sigma: sigma.to_string(),
                        rho: rho.to_string(),
                    });
                }
            }
            let si = index[sigma];
            let ri = index[rho];
            let pi = index[&sigma_rho];
            for k in 0..n {
                let mut coeffs = vec![Rat::zero(); unknowns];
                if si != 0 {
                    coeffs[col(si, class_ids[rho.apply(k)])] += Rat::from_integer(1.into());
                }
                if ri != 0 {
                    coeffs[col(ri, class_ids[k])] += Rat::from_integer(1.into());
                }
                if pi != 0 {
                    coeffs[col(pi, class_ids[k])] -= Rat::from_integer(1.into());
                }
                rows.insert((coeffs, delta[k].clone()));
            }
        }
    }
    let (coeff_rows, rhs): (Vec<Vec<Rat>>, Vec<Rat>) = rows.into_iter().unzip();
    let a = RationalMatrix::from_rows_shaped(coeff_rows, unknowns)
        .expect("rows built with a common width");
    let beta = match solve_affine(&a, &rhs).expect("shapes agree") {
        Some(sol) => sol.particular,
        None => return Err(GroupError::Unsolvable),
    };

    let mut section = BTreeMap::new();
    for sigma in elements {
        let si = index[sigma];
        let b_sigma: Vec<Rat> = if si == 0 {
            vec![Rat::zero(); n]
        } else {
            (0..n).map(|k| beta[col(si, class_ids[k])].clone()).collect()
        };
        let u = &lift[sigma].c;
        let c: Vec<Rat> = (0..n).map(|k| &u[k] - &b_sigma[k]).collect();
        section.insert(sigma.clone(), MonomialMap::new(sigma.clone(), c));
    }
    // Hard verification: multiplicative on all |H|^2 pairs.
    for sigma in elements {
        for rho in elements {
            let lhs = section[sigma].compose(&section[rho]);
            let rhs = &section[&sigma.compose(rho)];
            assert_eq!(&lhs, rhs, "corrected section must be multiplicative");
        }
    }
    Ok(section)
}

/// The full solution set of a diagonal-conjugation problem.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugatorSolution {
    /// A particular conjugator d in V.
    pub d: Vec<Rat>,
    /// Basis of the ambiguity: adding any combination keeps d valid.
    pub kernel: Vec<Vec<Rat>>,
}

/// Find d in V with a_{g,k} = b_{g,k} + d_{sigma_g(k)} - d_k for all g, k:
/// conjugating beta by the diagonal d yields alpha.  The permutation parts
/// must agree elementwise (ImageMismatch).  None means inconsistent.
pub fn diagonal_conjugator(
    alpha: &MonomialHom,
    beta: &MonomialHom,
    v: &PartitionSubspace,
) -> Result<Option<ConjugatorSolution>, GroupError> {
    if alpha.images.len() != beta.images.len() {
        return Err(GroupError::ImageMismatch(alpha.images.len().min(beta.images.len())));
    }
    let n = v.partition.class_ids().len();
    for (g, (ma, mb)) in alpha.images.iter().zip(&beta.images).enumerate() {
        if ma.sigma != mb.sigma || ma.degree() != n {
            return Err(GroupError::ImageMismatch(g));
        }
    }
    let class_ids = v.partition.class_ids();
    let m = v.partition.class_count();
    // Unknowns: gamma per class; d_k = gamma_{class(k)}.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (ma, mb) in alpha.images.iter().zip(&beta.images) {
        for k in 0..n {
            let mut coeffs = vec![Rat::zero(); m];
            coeffs[class_ids[ma.sigma.apply(k)]] += Rat::from_integer(1.into());
            coeffs[class_ids[k]] -= Rat::from_integer(1.into());
            rows.push(coeffs);
            rhs.push(&ma.c[k] - &mb.c[k]);
        }
    }
    let a = RationalMatrix::from_rows_shaped(rows, m).expect("rows share width");
    let Some(sol) = solve_affine(&a, &rhs).expect("shapes agree") else {
        return Ok(None);
    };
    let expand = |gamma: &[Rat]| -> Vec<Rat> {
        (0..n).map(|k| gamma[class_ids[k]].clone()).collect()
    };
    let d = expand(&sol.particular);
    let kernel: Vec<Vec<Rat>> = sol.kernel_basis.iter().map(|g| expand(g)).collect();
    // Hard verification of the conjugation identity.
    let conj = MonomialMap::diagonal(d.clone());
    let conj_inv = conj.inverse();
    for (ma, mb) in alpha.images.iter().zip(&beta.images) {
        assert_eq!(
            conj.compose(mb).compose(&conj_inv),
            ma.clone(),
            "conjugator must transport beta to alpha"
        );
    }
    Ok(Some(ConjugatorSolution { d, kernel }))
}

/// Find a diagonal Lambda conjugating every element of the (finite) group
/// generated by `gens` to a pure permutation: solve
/// lambda_{sigma_g(k)} - lambda_k = c_{g,k} over the generators.
pub fn monomialize_torsion(gens: &[MonomialMap], cap: usize) -> Result<Vec<Rat>, GroupError> {
    assert!(!gens.is_empty(), "need at least one generator to fix the degree");
    let n = gens[0].degree();
    // Close under composition, bounded by the cap.
    let mut elements: BTreeSet<MonomialMap> = BTreeSet::new();
    elements.insert(MonomialMap::identity(n));
    let mut frontier: Vec<MonomialMap> = vec![MonomialMap::identity(n)];
    while let Some(x) = frontier.pop() {
        for g in gens {
            let prod = g.compose(&x);
            if elements.insert(prod.clone()) {
                if elements.len() > cap {
                    return Err(GroupError::NotTorsion { cap });
                }
                frontier.push(prod);
            }
        }
    }
    // Solve over the generators only: conjugation by a diagonal is a
    // homomorphism, so fixing the generators fixes the whole group.
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for g in gens {
        for k in 0..n {
            let mut coeffs = vec![Rat::zero(); n];
            coeffs[g.sigma.apply(k)] += Rat::from_integer(1.into());
            coeffs[k] -= Rat::from_integer(1.into());
            rows.push(coeffs);
            rhs.push(g.c[k].clone());
        }
    }
    let a = RationalMatrix::from_rows_shaped(rows, n).expect("rows share width");
    let lambda = solve_affine(&a, &rhs)
        .expect("shapes agree")
        .expect("finite monomial groups always monomialize")
        .particular;
    // Hard verification on every generated element.
    let conj = MonomialMap::diagonal(lambda.clone());
    let conj_inv = conj.inverse();
    for e in &elements {
        let pure = conj_inv.compose(e).compose(&conj);
        assert!(
            pure.is_pure_permutation(),
            "conjugation by Lambda must clear every diagonal"
        );
    }
    Ok(lambda)
}
