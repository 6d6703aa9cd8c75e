//! Permutations as 0-based image lists.
//!
//! A permutation of degree d is a `Vec<usize>` of length d whose entry at
//! position i is the image of i.  This is the carrier type for group
//! generators, regular actions on graphs, and canonical relabelings.

/// A permutation given by its image list: `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

/// The identity permutation of the given degree.
pub fn identity(degree: usize) -> Perm {
    (0..degree).collect()
}

/// `true` iff `p` is a bijection on {0, …, p.len()−1}.
pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x >= p.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Composition "apply `p` first, then `q`": result[i] = q[p[i]].
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    debug_assert_eq!(p.len(), q.len());
    p.iter().map(|&x| q[x]).collect()
}

/// The inverse permutation.
pub fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x] = i;
    }
    inv
}
