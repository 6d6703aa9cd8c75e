//! Canonical labeling by individualization–refinement.
//!
//! The certificate of a graph is the graph6 string of its canonical form, so
//! two graphs are isomorphic iff their certificates are equal.  The search is
//! the usual backtracking scheme: refine an ordered partition until it is
//! equitable, branch on the first smallest non-singleton cell (vertices in
//! ascending order), and take the lexicographically minimal adjacency bit
//! string over the leaves.  Refinement keys combine edge counts with
//! common-neighbor counts toward each splitter cell — on a divisible design
//! graph the latter splits along the class partition as soon as one vertex is
//! individualized, which keeps the tree shallow.  Automorphisms discovered
//! from equal leaves prune sibling branches orbit-wise.

use crate::graph::Graph;
use crate::graph6;
use crate::perm::{self, Perm};

/// A canonical byte string identifying a graph's isomorphism class: the
/// graph6 encoding of the canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Certificate(pub String);

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Computes the canonical form of `g`: an isomorphic graph that is identical
/// for all members of the isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    let labeling = canonical_labeling(g);
    g.relabel(&perm::invert(&labeling))
}

/// The canonical certificate of `g` (graph6 of the canonical form).
pub fn canonical_certificate(g: &Graph) -> Certificate {
    Certificate(graph6::encode(&canonical_form(g)).expect("v ≤ 62"))
}

/// The canonical labeling: position p of the canonical form holds vertex
/// `labeling[p]` of `g`.
fn canonical_labeling(g: &Graph) -> Perm {
    let mut cells = vec![(0..g.v()).collect::<Vec<usize>>()];
    refine(g, &mut cells);
    let mut search = Search {
        g,
        best: None,
        auts: Vec::new(),
        max_auts: 64,
    };
    search.descend(&cells, &mut Vec::new());
    search.best.expect("search visits at least one leaf").1
}

struct Search<'a> {
    g: &'a Graph,
    /// Minimal packed adjacency bits seen so far, with the labeling.
    best: Option<(Vec<u64>, Perm)>,
    /// Automorphisms discovered from equal leaves, used for orbit pruning.
    auts: Vec<Perm>,
    max_auts: usize,
}

impl Search<'_> {
    fn descend(&mut self, cells: &[Vec<usize>], prefix: &mut Vec<usize>) {
        if let Some((best_bits, _)) = &self.best {
            // The leading singleton cells pin a prefix of the bit string; a
            // strictly larger prefix can never beat the incumbent.
            let r = cells.iter().take_while(|c| c.len() == 1).count();
            if prefix_exceeds(self.g, cells, r, best_bits) {
                return;
            }
        }

        let Some(branch) = branch_cell(cells) else {
            self.visit_leaf(cells);
            return;
        };

        let mut tried: Vec<usize> = Vec::new();
        for idx in 0..cells[branch].len() {
            let x = cells[branch][idx];
            if !tried.is_empty() && self.in_tried_orbit(x, &tried, prefix) {
                continue;
            }
            tried.push(x);
            let mut next = individualize(cells, branch, x);
            refine(self.g, &mut next);
            prefix.push(x);
            self.descend(&next, prefix);
            prefix.pop();
        }
    }

    fn visit_leaf(&mut self, cells: &[Vec<usize>]) {
        let labeling: Perm = cells.iter().map(|c| c[0]).collect();
        let bits = pack_bits(self.g, &labeling);
        match &self.best {
            None => self.best = Some((bits, labeling)),
            Some((best_bits, best_labeling)) => {
                if bits < *best_bits {
                    self.best = Some((bits, labeling));
                } else if bits == *best_bits && self.auts.len() < self.max_auts
                {
                    // Equal leaves differ by an automorphism: the map sending
                    // this leaf's labeling to the incumbent's.
                    let mut sigma = vec![0; self.g.v()];
                    for p in 0..self.g.v() {
                        sigma[labeling[p]] = best_labeling[p];
                    }
                    if sigma != perm::identity(self.g.v()) {
                        self.auts.push(sigma);
                    }
                }
            }
        }
    }

    /// `true` iff `x` lies in the orbit of an already-tried sibling under the
    /// discovered automorphisms that fix the individualized prefix pointwise.
    fn in_tried_orbit(
        &self,
        x: usize,
        tried: &[usize],
        prefix: &[usize],
    ) -> bool {
        let v = self.g.v();
        let mut root: Vec<usize> = (0..v).collect();
        fn find(root: &mut [usize], mut a: usize) -> usize {
            while root[a] != a {
                root[a] = root[root[a]];
                a = root[a];
            }
            a
        }
        for sigma in &self.auts {
            if prefix.iter().any(|&p| sigma[p] != p) {
                continue;
            }
            for a in 0..v {
                let (ra, rb) = (find(&mut root, a), find(&mut root, sigma[a]));
                if ra != rb {
                    root[ra] = rb;
                }
            }
        }
        let rx = find(&mut root, x);
        tried.iter().any(|&y| find(&mut root, y) == rx)
    }
}

/// First smallest non-singleton cell, if any.
fn branch_cell(cells: &[Vec<usize>]) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

/// Replaces cell `c` by [{x}, cell∖{x}].
fn individualize(cells: &[Vec<usize>], c: usize, x: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == c {
            out.push(vec![x]);
            out.push(cell.iter().copied().filter(|&y| y != x).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

/// Refines until equitable: repeatedly splits every cell by each current
/// cell as splitter, keying vertices by (edges into splitter, summed common
/// neighbors with splitter members).  Subcells are ordered by key, so the
/// result depends only on the isomorphism type and the incoming cell order.
fn refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    loop {
        let mut changed = false;
        let splitters: Vec<u64> = cells
            .iter()
            .map(|c| c.iter().fold(0u64, |m, &x| m | 1 << x))
            .collect();
        for smask in splitters {
            let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, u32, usize)> = cell
                    .iter()
                    .map(|&x| {
                        let edges = (g.row(x) & smask).count_ones();
                        let mut common = 0u32;
                        let mut rest = smask;
                        while rest != 0 {
                            let s = rest.trailing_zeros() as usize;
                            rest &= rest - 1;
                            if s != x {
                                common += (g.row(x) & g.row(s)).count_ones();
                            }
                        }
                        (edges, common, x)
                    })
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len()
                        || (keyed[i].0, keyed[i].1) != (keyed[start].0, keyed[start].1)
                    {
                        next.push(keyed[start..i].iter().map(|k| k.2).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
        }
        if !changed {
            return;
        }
    }
}

/// Packs the adjacency bits of `g` relabeled by `labeling` in graph6 order
/// (upper triangle, column-major), MSB-first per word, for lexicographic
/// comparison via slice ordering.
fn pack_bits(g: &Graph, labeling: &[usize]) -> Vec<u64> {
    let v = g.v();
    let nbits = v * (v - 1) / 2;
    let mut words = vec![0u64; nbits.div_ceil(64)];
    let mut t = 0;
    for j in 1..v {
        for i in 0..j {
            if g.has_edge(labeling[i], labeling[j]) {
                words[t / 64] |= 1 << (63 - t % 64);
            }
            t += 1;
        }
    }
    words
}

/// `true` iff the bit-string prefix fixed by the first `r` singleton cells is
/// strictly greater than the incumbent's prefix (so the subtree is dead).
fn prefix_exceeds(
    g: &Graph,
    cells: &[Vec<usize>],
    r: usize,
    best: &[u64],
) -> bool {
    if r < 2 {
        return false;
    }
    let head: Vec<usize> = cells[..r].iter().map(|c| c[0]).collect();
    let nbits = r * (r - 1) / 2;
    let mut t = 0;
    let mut word = 0u64;
    for j in 1..r {
        for i in 0..j {
            if g.has_edge(head[i], head[j]) {
                word |= 1 << (63 - t % 64);
            }
            t += 1;
            if t % 64 == 0 || t == nbits {
                let w = t.div_ceil(64) - 1;
                let valid = if t % 64 == 0 { 64 } else { t % 64 };
                let mask = if valid == 64 { !0u64 } else { !0u64 << (64 - valid) };
                match word.cmp(&(best[w] & mask)) {
                    std::cmp::Ordering::Greater => return true,
                    std::cmp::Ordering::Less => return false,
                    std::cmp::Ordering::Equal => {}
                }
                word = 0;
            }
        }
    }
    false
}
