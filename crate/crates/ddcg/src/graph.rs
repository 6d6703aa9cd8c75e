//! Simple undirected graphs as bitset adjacency matrices (v ≤ 64).
//!
//! Each adjacency row is a single `u64`, so common-neighbor counting is one
//! AND plus a popcount.  Also here: 0/1 bit matrices with Kronecker products
//! (all-ones blocks included), Cayley graph construction from connection
//! sets, the strong product with K₂, and regular-action verification — the
//! executable form of "Aut(Γ) contains a regular subgroup ⇔ Γ is Cayley".

use crate::group::FiniteGroup;
use crate::perm::{self, Perm};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graphs support at most 64 vertices, got {0}")]
    TooLarge(usize),
    #[error("connection set contains the identity")]
    IdentityInSet,
    #[error("connection set is not inverse-closed")]
    NotInverseClosed,
    #[error("permutation degree {actual} does not match vertex count {expected}")]
    DegreeMismatch { actual: usize, expected: usize },
    #[error("matrix is not a graph adjacency matrix (symmetric, zero diagonal)")]
    NotAdjacency,
}

/// A simple undirected graph on `v ≤ 64` vertices; `adj[i]` is the
/// neighborhood of vertex i as a bitset.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    v: usize,
    adj: Vec<u64>,
}

impl Graph {
    pub fn empty(v: usize) -> Result<Graph, GraphError> {
        if v == 0 || v > 64 {
            return Err(GraphError::TooLarge(v));
        }
        Ok(Graph { v, adj: vec![0; v] })
    }

    pub fn complete(v: usize) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(v)?;
        for i in 0..v {
            for j in 0..v {
                if i != j {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        Ok(g)
    }

    pub fn from_edges(
        v: usize,
        edges: &[(usize, usize)],
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::empty(v)?;
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        Ok(g)
    }

    pub fn v(&self) -> usize {
        self.v
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        assert!(a < self.v && b < self.v && a != b);
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Neighborhood of `x` as a bitset.
    #[inline]
    pub fn row(&self, x: usize) -> u64 {
        self.adj[x]
    }

    pub fn degree(&self, x: usize) -> usize {
        self.adj[x].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// `Some(k)` iff every vertex has degree k.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.v).all(|x| self.degree(x) == k).then_some(k)
    }

    /// |N(x) ∩ N(y)| by bitset intersection.  `x` and `y` must be distinct
    /// (the count would include the vertex itself otherwise).
    #[inline]
    pub fn common_neighbors(&self, x: usize, y: usize) -> usize {
        debug_assert!(x != y, "common_neighbors requires distinct vertices");
        (self.adj[x] & self.adj[y]).count_ones() as usize
    }

    /// The image graph under a vertex relabeling: has edge (p[a], p[b]) for
    /// every edge (a, b) of `self`.
    pub fn relabel(&self, p: &Perm) -> Graph {
        assert_eq!(p.len(), self.v);
        let mut g = Graph { v: self.v, adj: vec![0; self.v] };
        for a in 0..self.v {
            let mut row = self.adj[a];
            while row != 0 {
                let b = row.trailing_zeros() as usize;
                row &= row - 1;
                g.adj[p[a]] |= 1 << p[b];
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mask = if self.v == 64 { !0 } else { (1u64 << self.v) - 1 };
        let adj = (0..self.v)
            .map(|i| !self.adj[i] & mask & !(1 << i))
            .collect();
        Graph { v: self.v, adj }
    }

    pub fn to_matrix(&self) -> BitMatrix {
        BitMatrix { rows: self.v, cols: self.v, data: self.adj.clone() }
    }

    pub fn from_matrix(m: &BitMatrix) -> Result<Graph, GraphError> {
        if m.rows != m.cols || m.rows == 0 || m.rows > 64 {
            return Err(GraphError::NotAdjacency);
        }
        for i in 0..m.rows {
            if m.get(i, i) {
                return Err(GraphError::NotAdjacency);
            }
            for j in 0..i {
                if m.get(i, j) != m.get(j, i) {
                    return Err(GraphError::NotAdjacency);
                }
            }
        }
        Ok(Graph { v: m.rows, adj: m.data.clone() })
    }
}

/// A 0/1 matrix with ≤ 64 columns, one `u64` per row.  Used for Kronecker
/// products, where factors like all-ones blocks are not themselves graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zero(rows: usize, cols: usize) -> BitMatrix {
        assert!(cols <= 64);
        BitMatrix { rows, cols, data: vec![0; rows] }
    }

    pub fn identity(n: usize) -> BitMatrix {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn all_ones(n: usize) -> BitMatrix {
        let mut m = BitMatrix::zero(n, n);
        for i in 0..n {
            m.data[i] = if n == 64 { !0 } else { (1u64 << n) - 1 };
        }
        m
    }

    /// The permutation matrix with entry (i, p[i]) = 1.
    pub fn permutation(p: &Perm) -> BitMatrix {
        let mut m = BitMatrix::zero(p.len(), p.len());
        for (i, &j) in p.iter().enumerate() {
            m.set(i, j, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i] >> j & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.data[i] |= 1 << j;
        } else {
            self.data[i] &= !(1 << j);
        }
    }

    pub fn row_sum(&self, i: usize) -> usize {
        self.data[i].count_ones() as usize
    }
}

/// Kronecker product of 0/1 matrices: block (i, j) of the result is `b`
/// when a[i][j] = 1 and zero otherwise.
pub fn kronecker(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    assert!(cols <= 64, "kronecker product exceeds 64 columns");
    let mut m = BitMatrix::zero(rows, cols);
    for i1 in 0..a.rows {
        for i2 in 0..b.rows {
            let mut row = 0u64;
            for j1 in 0..a.cols {
                if a.get(i1, j1) {
                    row |= b.data[i2] << (j1 * b.cols);
                }
            }
            m.data[i1 * b.rows + i2] = row;
        }
    }
    m
}

/// An inverse-closed, identity-free subset of a group — the datum defining
/// an undirected Cayley graph.
#[derive(Debug, Clone)]
pub struct ConnectionSet<'g> {
    group: &'g FiniteGroup,
    elements: Vec<usize>,
}

impl<'g> ConnectionSet<'g> {
    pub fn new(
        group: &'g FiniteGroup,
        elements: &[usize],
    ) -> Result<ConnectionSet<'g>, GraphError> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if elements.contains(&0) {
            return Err(GraphError::IdentityInSet);
        }
        if !elements.iter().all(|&s| elements.binary_search(&group.inv(s)).is_ok())
        {
            return Err(GraphError::NotInverseClosed);
        }
        Ok(ConnectionSet { group, elements })
    }

    pub fn group(&self) -> &'g FiniteGroup {
        self.group
    }

    /// Elements in ascending index order.
    pub fn elements(&self) -> &[usize] {
        &self.elements
    }
}

/// The Cayley graph Cay(G, S): vertices are group elements, with g adjacent
/// to h iff g⁻¹h ∈ S (equivalently h = gs for some s ∈ S).  |S|-regular, and
/// every translation x ↦ g·x is an automorphism.
pub fn cayley_graph(s: &ConnectionSet) -> Graph {
    let group = s.group;
    let v = group.order();
    let mut graph = Graph::empty(v).expect("group orders stay within 64");
    for g in 0..v {
        let mut row = 0u64;
        for &x in &s.elements {
            row |= 1 << group.mul(g, x);
        }
        graph.adj[g] = row;
    }
    graph
}

/// The strong product of K₂ with `g`: each vertex doubles into an adjacent
/// twin pair, (s, i) ~ (t, j) iff (i = j and s ≠ t) or i ~ j.  Vertex (s, i)
/// has index s·v + i.
pub fn strong_product_k2(g: &Graph) -> Result<Graph, GraphError> {
    let v = g.v;
    let mut out = Graph::empty(2 * v)?;
    for i in 0..v {
        for s in 0..2 {
            // Copy both adjacency blocks, then join the twin.
            out.adj[s * v + i] =
                g.adj[i] | g.adj[i] << v | 1 << ((1 - s) * v + i);
        }
    }
    Ok(out)
}

/// `true` iff every permutation is an automorphism of `g` and the group they
/// generate has order exactly `g.v()` and acts transitively — i.e. the
/// permutations witness a regular subgroup of Aut(g), which by Sabidussi's
/// criterion certifies that `g` is a Cayley graph.
pub fn is_regular_action(g: &Graph, perms: &[Perm]) -> Result<bool, GraphError> {
    let v = g.v;
    for p in perms {
        if p.len() != v {
            return Err(GraphError::DegreeMismatch { actual: p.len(), expected: v });
        }
    }
    for p in perms {
        if !perm::is_permutation(p) || g.relabel(p) != *g {
            return Ok(false);
        }
    }
    // Permutation closure, capped just past v: blowing the cap means the
    // generated group is too large to act regularly.
    let mut elems: Vec<Perm> = vec![perm::identity(v)];
    let mut cursor = 0;
    while cursor < elems.len() {
        let current = elems[cursor].clone();
        for p in perms {
            let product = perm::compose(&current, p);
            if !elems.contains(&product) {
                elems.push(product);
                if elems.len() > v {
                    return Ok(false);
                }
            }
        }
        cursor += 1;
    }
    if elems.len() != v {
        return Ok(false);
    }
    let mut orbit = vec![false; v];
    for e in &elems {
        orbit[e[0]] = true;
    }
    Ok(orbit.iter().all(|&x| x))
}
