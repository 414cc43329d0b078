//! Subsets of a ground set {1, ..., n} stored as bit masks.
//!
//! Elements are 0-based internally (bit i stands for element i+1); the
//! 1-based view only appears when talking to humans or JSON.

/// All k-element subsets of {0, ..., n-1}, in lexicographic order of their
/// sorted element tuples: {1,2} < {1,3} < ... < {2,3} < ...
pub fn k_subsets(n: usize, k: usize) -> Vec<u32> {
    assert!(n <= 31, "ground sets are limited to 31 elements");
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, chosen: &mut Vec<usize>, out: &mut Vec<u32>) {
        if chosen.len() == k {
            out.push(mask_of(chosen));
            return;
        }
        let remaining = k - chosen.len();
        for e in start..=n.saturating_sub(remaining) {
            chosen.push(e);
            rec(n, k, e + 1, chosen, out);
            chosen.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, &mut chosen, &mut out);
    }
    out
}

pub fn mask_of(elems: &[usize]) -> u32 {
    elems.iter().fold(0u32, |m, &e| m | (1 << e))
}

/// The elements of a mask, ascending (0-based).
pub fn elems(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

pub fn card(mask: u32) -> usize {
    mask.count_ones() as usize
}

pub fn contains(mask: u32, e: usize) -> bool {
    mask & (1 << e) != 0
}

pub fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Lexicographic comparison of two masks as sorted element tuples
/// (prefix-shorter first), e.g. {1} < {1,2} < {1,3} < {2}.
pub fn cmp_lex(a: u32, b: u32) -> std::cmp::Ordering {
    elems(a).cmp(&elems(b))
}

/// Human-readable 1-based form "{1,3,4}".
pub fn display_1based(mask: u32) -> String {
    let inner: Vec<String> = elems(mask).iter().map(|e| (e + 1).to_string()).collect();
    format!("{{{}}}", inner.join(","))
}

/// 1-based element list, for JSON output.
pub fn elems_1based(mask: u32) -> Vec<usize> {
    elems(mask).into_iter().map(|e| e + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_subsets_of_four_in_lex_order() {
        let subs = k_subsets(4, 2);
        let as_elems: Vec<Vec<usize>> = subs.iter().map(|&m| elems(m)).collect();
        assert_eq!(
            as_elems,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }

    #[test]
    fn subset_counts_match_binomials() {
        assert_eq!(k_subsets(6, 3).len(), 20);
        assert_eq!(k_subsets(5, 0), vec![0]);
        assert_eq!(k_subsets(3, 4), Vec::<u32>::new());
    }

    #[test]
    fn lex_order_puts_prefixes_first() {
        use std::cmp::Ordering::*;
        assert_eq!(cmp_lex(mask_of(&[0]), mask_of(&[0, 1])), Less);
        assert_eq!(cmp_lex(mask_of(&[0, 3]), mask_of(&[1, 2])), Less);
        assert_eq!(cmp_lex(mask_of(&[2]), mask_of(&[1, 2])), Greater);
    }

    #[test]
    fn display_uses_one_based_elements() {
        assert_eq!(display_1based(mask_of(&[0, 2, 3])), "{1,3,4}");
        assert_eq!(display_1based(0), "{}");
    }
}
