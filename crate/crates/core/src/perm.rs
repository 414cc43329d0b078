//! Permutations of a finite ground set and explicit permutation groups.

use std::collections::BTreeSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation: {0}")]
    BadPermutation(String),
}

/// A permutation of {0, ..., n-1}; `img[k]` is the image of k.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { img: (0..n).collect() }
    }

    /// Build from 0-based images, checking bijectivity.
    pub fn from_images(img: Vec<usize>) -> Result<Self, PermError> {
        let n = img.len();
        let mut seen = vec![false; n];
        for &v in &img {
            if v >= n || seen[v] {
                return Err(PermError::BadPermutation(format!(
                    "image list {:?} is not a bijection on 1..={}",
                    img.iter().map(|&x| x + 1).collect::<Vec<_>>(),
                    n
                )));
            }
            seen[v] = true;
        }
        Ok(Perm { img })
    }

    /// Build from a 1-based image list, e.g. [3,4,1,2].
    pub fn from_images_1based(img: &[usize]) -> Result<Self, PermError> {
        let shifted: Vec<usize> = img
            .iter()
            .map(|&v| {
                v.checked_sub(1).ok_or_else(|| {
                    PermError::BadPermutation(format!("image entries are 1-based, got {}", v))
                })
            })
            .collect::<Result<_, _>>()?;
        Perm::from_images(shifted)
    }

    /// Parse disjoint-cycle notation with 1-based entries, e.g. "(1 3)(2 4)"
    /// or "(1,2,3)".  The empty string or "()" is the identity.
    pub fn from_cycles(n: usize, s: &str) -> Result<Self, PermError> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        let body = s.trim();
        let mut rest = body;
        while !rest.is_empty() {
            let Some(open) = rest.find('(') else {
                if rest.trim().is_empty() {
                    break;
                }
                return Err(PermError::BadPermutation(format!(
                    "expected '(' in cycle notation {:?}",
                    s
                )));
            };
            if !rest[..open].trim().is_empty() {
                return Err(PermError::BadPermutation(format!(
                    "unexpected text before cycle in {:?}",
                    s
                )));
            }
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| PermError::BadPermutation(format!("unclosed cycle in {:?}", s)))?
                + open;
            let inner = &rest[open + 1..close];
            let entries: Vec<usize> = inner
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| {
                        PermError::BadPermutation(format!("bad cycle entry {:?} in {:?}", t, s))
                    })
                })
                .collect::<Result<_, _>>()?;
            for &v in &entries {
                if v == 0 || v > n {
                    return Err(PermError::BadPermutation(format!(
                        "cycle entry {} out of range 1..={}",
                        v, n
                    )));
                }
            }
            for (i, &v) in entries.iter().enumerate() {
                let from = v - 1;
                if moved[from] {
                    return Err(PermError::BadPermutation(format!(
                        "element {} appears twice in {:?}",
                        v, s
                    )));
                }
                moved[from] = true;
                let to = entries[(i + 1) % entries.len()] - 1;
                img[from] = to;
            }
            rest = &rest[close + 1..];
        }
        Perm::from_images(img)
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.img[k]
    }

    pub fn images(&self) -> &[usize] {
        &self.img
    }

    pub fn images_1based(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v + 1).collect()
    }

    /// Composition self . other: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in composition");
        Perm { img: other.img.iter().map(|&v| self.img[v]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0; self.img.len()];
        for (k, &v) in self.img.iter().enumerate() {
            img[v] = k;
        }
        Perm { img }
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(k, &v)| k == v)
    }

    /// Image of a subset mask.
    pub fn apply_mask(&self, mask: u32) -> u32 {
        let mut out = 0u32;
        for k in 0..self.degree() {
            if mask & (1 << k) != 0 {
                out |= 1 << self.img[k];
            }
        }
        out
    }

    pub fn order(&self) -> usize {
        let mut ord = 1usize;
        for c in self.cycles() {
            ord = num::integer::lcm(ord, c.len());
        }
        ord
    }

    /// Nontrivial cycles (0-based), each starting at its least element,
    /// ordered by that least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.img[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut k = self.img[start];
            while k != start {
                seen[k] = true;
                cyc.push(k);
                k = self.img[k];
            }
            out.push(cyc);
        }
        out
    }

    /// Disjoint-cycle string with 1-based entries; identity prints "()".
    pub fn cycles_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .into_iter()
            .map(|c| {
                let inner: Vec<String> = c.iter().map(|&e| (e + 1).to_string()).collect();
                format!("({})", inner.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycles_string())
    }
}

/// All n! permutations of degree n, in lexicographic order of image lists.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut img = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn rec(n: usize, img: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Perm>) {
        if img.len() == n {
            out.push(Perm { img: img.clone() });
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                img.push(v);
                rec(n, img, used, out);
                img.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut img, &mut used, &mut out);
    out
}

/// A finite permutation group given by its full, sorted element list plus a
/// small generating set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    generators: Vec<Perm>,
}

impl PermGroup {
    /// The group generated by `gens` (closure under composition).
    pub fn closure(degree: usize, gens: &[Perm]) -> PermGroup {
        let mut elements: BTreeSet<Perm> = BTreeSet::new();
        elements.insert(Perm::identity(degree));
        let mut frontier: Vec<Perm> = vec![Perm::identity(degree)];
        while let Some(g) = frontier.pop() {
            for h in gens {
                assert_eq!(h.degree(), degree, "generator degree mismatch");
                let prod = h.compose(&g);
                if elements.insert(prod.clone()) {
                    frontier.push(prod);
                }
            }
        }
        let elements: Vec<Perm> = elements.into_iter().collect();
        let generators = extract_generators(degree, &elements);
        PermGroup { degree, elements, generators }
    }

    /// Package an explicit element list as a group, verifying closure under
    /// composition and inverses.
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Result<PermGroup, PermError> {
        let set: BTreeSet<Perm> = elements.into_iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return Err(PermError::BadPermutation("element list lacks the identity".into()));
        }
        for g in &set {
            if g.degree() != degree {
                return Err(PermError::BadPermutation("element degree mismatch".into()));
            }
            if !set.contains(&g.inverse()) {
                return Err(PermError::BadPermutation(format!(
                    "element list not closed under inverse at {}",
                    g
                )));
            }
            for h in &set {
                if !set.contains(&g.compose(h)) {
                    return Err(PermError::BadPermutation(format!(
                        "element list not closed under composition at {} . {}",
                        g, h
                    )));
                }
            }
        }
        let elements: Vec<Perm> = set.into_iter().collect();
        let generators = extract_generators(degree, &elements);
        Ok(PermGroup { degree, elements, generators })
    }

    /// The full symmetric group on n points.
    pub fn symmetric(n: usize) -> PermGroup {
        let elements = all_perms(n);
        let generators = extract_generators(n, &elements);
        PermGroup { degree: n, elements, generators }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Sorted element list (lexicographic by image list).
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|g| other.contains(g))
    }
}

/// Greedy generator extraction: walk the sorted elements, keeping each one
/// that is not yet generated.  Deterministic, usually small.
fn extract_generators(degree: usize, elements: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: BTreeSet<Perm> = BTreeSet::new();
    span.insert(Perm::identity(degree));
    for g in elements {
        if !span.contains(g) {
            gens.push(g.clone());
            // regrow the span
            let mut frontier: Vec<Perm> = span.iter().cloned().collect();
            while let Some(x) = frontier.pop() {
                for h in &gens {
                    let prod = h.compose(&x);
                    if span.insert(prod.clone()) {
                        frontier.push(prod);
                    }
                }
            }
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_parsing_matches_image_lists() {
        let p = Perm::from_cycles(4, "(1 3)(2 4)").unwrap();
        assert_eq!(p.images_1based(), vec![3, 4, 1, 2]);
        let q = Perm::from_cycles(4, "(1,2,3,4)").unwrap();
        assert_eq!(q.images_1based(), vec![2, 3, 4, 1]);
        assert_eq!(Perm::from_cycles(3, "").unwrap(), Perm::identity(3));
        assert_eq!(Perm::from_cycles(3, "()").unwrap(), Perm::identity(3));
        assert!(Perm::from_cycles(3, "(1 4)").is_err());
        assert!(Perm::from_cycles(4, "(1 2)(2 3)").is_err());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let a = Perm::from_cycles(3, "(1 2)").unwrap();
        let b = Perm::from_cycles(3, "(2 3)").unwrap();
        // (1 2) after (2 3): 1 -> 2, 2 -> 3 -> 3... check via images.
        let c = a.compose(&b);
        assert_eq!(c.apply(0), 1); // 1 -> 1 -> 2
        assert_eq!(c.apply(1), 2); // 2 -> 3 -> 3
        assert_eq!(c.apply(2), 0); // 3 -> 2 -> 1
        assert_eq!(c, Perm::from_cycles(3, "(1 2 3)").unwrap());
    }

    #[test]
    fn inverse_and_order() {
        let p = Perm::from_cycles(4, "(1 2 3 4)").unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(p.order(), 4);
        assert_eq!(Perm::from_cycles(4, "(1 3)(2 4)").unwrap().order(), 2);
        assert_eq!(Perm::identity(5).order(), 1);
    }

    #[test]
    fn mask_images_follow_the_permutation() {
        let p = Perm::from_cycles(4, "(1 3)(2 4)").unwrap();
        let m = crate::sets::mask_of(&[0, 1]); // {1,2}
        assert_eq!(p.apply_mask(m), crate::sets::mask_of(&[2, 3])); // {3,4}
    }

    #[test]
    fn symmetric_group_has_factorial_order() {
        assert_eq!(PermGroup::symmetric(4).order(), 24);
        assert_eq!(PermGroup::symmetric(1).order(), 1);
    }

    #[test]
    fn closure_of_a_four_cycle_is_cyclic_of_order_four() {
        let g = PermGroup::closure(4, &[Perm::from_cycles(4, "(1 2 3 4)").unwrap()]);
        assert_eq!(g.order(), 4);
        assert!(g.contains(&Perm::from_cycles(4, "(1 3)(2 4)").unwrap()));
    }

    #[test]
    fn from_elements_rejects_non_groups() {
        let id = Perm::identity(3);
        let t = Perm::from_cycles(3, "(1 2 3)").unwrap();
        assert!(PermGroup::from_elements(3, vec![id.clone(), t.clone()]).is_err());
        let g = PermGroup::from_elements(3, vec![id, t.clone(), t.compose(&t)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.generators().len(), 1);
    }

    #[test]
    fn generators_regenerate_the_group() {
        let g = PermGroup::symmetric(4);
        let h = PermGroup::closure(4, g.generators());
        assert_eq!(h.order(), 24);
    }
}
