//! Finitely presented modules over the Boolean semifield, realized as
//! quotients of the free module 2^n by the congruence a relation set
//! generates.  Elements are canonical class representatives; joins, the
//! partial order, join-irreducibles, and the quasi-freeness test (atomic
//! irreducible set) all work on those representatives.

use crate::scalar::TropScalar;
use crate::sets;
use crate::valuated::ValuatedMatroid;
use std::collections::BTreeSet;

/// Ground-set size cap: the module has 2^n elements before quotienting.
pub const BMOD_GROUND_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BModError {
    #[error("ground set of size {n} exceeds the supported cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("relation mentions element {element} outside 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
}

/// A presentation: n generators and relations identifying pairs of subsets
/// (each subset standing for the join of its generators).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPresentation {
    pub n: usize,
    pub relations: Vec<(u32, u32)>,
}

impl BPresentation {
    pub fn new(n: usize, relations: Vec<(u32, u32)>) -> Result<BPresentation, BModError> {
        if n > BMOD_GROUND_CAP {
            return Err(BModError::CapExceeded { n, cap: BMOD_GROUND_CAP });
        }
        let full = sets::full_mask(n);
        for &(a, b) in &relations {
            for m in [a, b] {
                if m & !full != 0 {
                    let element = (0..32).find(|&i| sets::contains(m & !full, i)).unwrap() + 1;
                    return Err(BModError::ElementOutOfRange { element, n });
                }
            }
        }
        Ok(BPresentation { n, relations })
    }

    /// 1-based convenience constructor: relations as pairs of element lists.
    pub fn from_1based(n: usize, relations: &[(Vec<usize>, Vec<usize>)]) -> Result<BPresentation, BModError> {
        let mut rels = Vec::with_capacity(relations.len());
        for (a, b) in relations {
            rels.push((mask_1based(n, a)?, mask_1based(n, b)?));
        }
        BPresentation::new(n, rels)
    }
}

fn mask_1based(n: usize, elems: &[usize]) -> Result<u32, BModError> {
    let mut m = 0u32;
    for &e in elems {
        if e == 0 || e > n {
            return Err(BModError::ElementOutOfRange { element: e, n });
        }
        m |= 1 << (e - 1);
    }
    Ok(m)
}

/// The finite 𝔹-module presented by a `BPresentation`: a congruence on 2^n.
/// `class_of[s]` is the least subset congruent to s; `elements` lists the
/// distinct representatives in increasing mask order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteBModule {
    n: usize,
    class_of: Vec<u32>,
    elements: Vec<u32>,
}

struct Dsu {
    parent: Vec<u32>,
}

impl Dsu {
    fn new(size: usize) -> Dsu {
        Dsu { parent: (0..size as u32).collect() }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut r = x;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = x;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    /// Union keeping the smaller mask as root, so representatives are the
    /// least members of their classes.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}

/// Close the presentation's relations under join with arbitrary elements:
/// a ≡ b forces a∨z ≡ b∨z for every z, iterated to a fixed point.
pub fn congruence_closure(p: &BPresentation) -> Result<FiniteBModule, BModError> {
    if p.n > BMOD_GROUND_CAP {
        return Err(BModError::CapExceeded { n: p.n, cap: BMOD_GROUND_CAP });
    }
    let size = 1usize << p.n;
    let mut dsu = Dsu::new(size);
    let mut pairs: Vec<(u32, u32)> = p.relations.clone();
    // Seed with all single-generator joins; iterate because merging classes
    // can create new joinable pairs.
    loop {
        let mut changed = false;
        let todo = std::mem::take(&mut pairs);
        for (a, b) in todo {
            if dsu.union(a, b) {
                changed = true;
            }
            for z in 0..size as u32 {
                let (ja, jb) = (a | z, b | z);
                if dsu.find(ja) != dsu.find(jb) {
                    dsu.union(ja, jb);
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
        // Any two members of one class must stay join-compatible; re-derive
        // the pair list from the current classes and loop until stable.
        let mut reps: Vec<Vec<u32>> = vec![Vec::new(); size];
        for s in 0..size as u32 {
            reps[dsu.find(s) as usize].push(s);
        }
        for class in reps {
            for w in class.windows(2) {
                pairs.push((w[0], w[1]));
            }
        }
    }
    let mut class_of = vec![0u32; size];
    let mut elements = Vec::new();
    for s in 0..size as u32 {
        let r = dsu.find(s);
        class_of[s as usize] = r;
        if r == s {
            elements.push(s);
        }
    }
    Ok(FiniteBModule { n: p.n, class_of, elements })
}

impl FiniteBModule {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Canonical representative of an element's class.
    pub fn class_of(&self, s: u32) -> u32 {
        self.class_of[s as usize]
    }

    /// The distinct class representatives, in increasing mask order.
    pub fn elements(&self) -> &[u32] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// Join of two classes: the class of the union of representatives.
    pub fn join(&self, a: u32, b: u32) -> u32 {
        self.class_of(self.class_of(a) | self.class_of(b))
    }

    /// a ≤ b iff a ∨ b = b.
    pub fn leq(&self, a: u32, b: u32) -> bool {
        self.join(a, b) == self.class_of(b)
    }

    /// Join-irreducible elements: nonzero classes not the join of two
    /// strictly smaller classes.
    pub fn join_irreducibles(&self) -> Vec<u32> {
        self.elements
            .iter()
            .copied()
            .filter(|&e| {
                if self.class_of(e) == self.class_of(0) {
                    return false;
                }
                !self.elements.iter().any(|&a| {
                    self.elements.iter().any(|&b| {
                        self.join(a, b) == e
                            && self.class_of(a) != e
                            && self.class_of(b) != e
                    })
                })
            })
            .collect()
    }

    /// Quasi-free: every join-irreducible is an atom (minimal nonzero).
    pub fn is_quasi_free(&self) -> bool {
        let zero = self.class_of(0);
        self.join_irreducibles().iter().all(|&j| {
            !self
                .elements
                .iter()
                .any(|&e| e != zero && self.class_of(e) != j && self.leq(e, j))
        })
    }
}

/// The Boolean quotient module of a valuated matroid: generators are the
/// ground-set elements, and every (rank+1)-subset S contributes relations
/// supp(S) ≡ supp(S) ∖ {k} for each k in the support
/// supp(S) = {j ∈ S : w(S∖{j}) ≠ -inf}.
pub fn qm_boolean(vm: &ValuatedMatroid) -> Result<BPresentation, BModError> {
    let m = vm.matroid();
    let n = m.n();
    if n > BMOD_GROUND_CAP {
        return Err(BModError::CapExceeded { n, cap: BMOD_GROUND_CAP });
    }
    let mut relations = BTreeSet::new();
    for s in sets::k_subsets(n, m.rank() + 1) {
        let mut supp = 0u32;
        for j in sets::elems(s) {
            if !matches!(vm.weight(s & !(1 << j)), TropScalar::Bottom) {
                supp |= 1 << j;
            }
        }
        for k in sets::elems(supp) {
            relations.insert((supp, supp & !(1 << k)));
        }
    }
    BPresentation::new(n, relations.into_iter().collect())
}
