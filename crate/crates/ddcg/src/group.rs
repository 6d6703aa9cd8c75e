//! Finite groups of small order as multiplication tables.
//!
//! Groups are built by breadth-first closure of permutation generators; the
//! discovery order fixes the element indexing (identity at index 0), and all
//! downstream determinism — coset order, search order, report files — derives
//! from it.  Construction always validates the full set of group axioms.

use crate::perm::{self, Perm};
use std::collections::HashMap;
use thiserror::Error;

/// Errors from group construction and subgroup operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GroupError {
    /// The generated group has a different order than declared.
    #[error("generated group has order {actual}, declared {declared}")]
    OrderMismatch { actual: usize, declared: usize },
    /// Generators missing, of unequal degree, or not bijections.
    #[error("generators must be nonempty bijections of equal degree")]
    DegreeMismatch,
    /// A multiplication table failed validation (identity, Latin square,
    /// associativity, or inverses).
    #[error("invalid multiplication table: {0}")]
    InvalidTable(&'static str),
    /// The given subset is not a subgroup.
    #[error("subset is not a subgroup")]
    NotASubgroup,
}

/// An abstract finite group: multiplication table, inverses, element orders.
///
/// Element index 0 is always the identity.  The table is immutable after
/// construction, so values are freely shareable across threads.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u16>, // row-major: table[a*order + b] = a·b
    inv: Vec<u16>,
    elem_orders: Vec<u16>,
}

impl FiniteGroup {
    /// Enumerates the permutation group generated by `generators` via
    /// breadth-first products (identity first, generators in listed order)
    /// and returns its abstract multiplication table.  Fails if the generated
    /// order differs from `declared_order`.
    pub fn from_generators(
        generators: &[Perm],
        declared_order: usize,
        name: &str,
    ) -> Result<FiniteGroup, GroupError> {
        if generators.is_empty() || declared_order == 0 {
            return Err(GroupError::DegreeMismatch);
        }
        let degree = generators[0].len();
        for g in generators {
            if g.len() != degree || !perm::is_permutation(g) {
                return Err(GroupError::DegreeMismatch);
            }
        }

        // Breadth-first closure; elems[i] is the permutation of element i.
        let cap = declared_order.max(4096);
        let mut elems: Vec<Perm> = vec![perm::identity(degree)];
        let mut index: HashMap<Perm, usize> = HashMap::new();
        index.insert(elems[0].clone(), 0);
        let mut cursor = 0;
        while cursor < elems.len() {
            let current = elems[cursor].clone();
            for g in generators {
                let product = perm::compose(&current, g);
                if !index.contains_key(&product) {
                    index.insert(product.clone(), elems.len());
                    elems.push(product);
                    if elems.len() > cap {
                        return Err(GroupError::OrderMismatch {
                            actual: elems.len(),
                            declared: declared_order,
                        });
                    }
                }
            }
            cursor += 1;
        }
        if elems.len() != declared_order {
            return Err(GroupError::OrderMismatch {
                actual: elems.len(),
                declared: declared_order,
            });
        }

        let order = elems.len();
        let mut table = vec![0u16; order * order];
        for i in 0..order {
            for j in 0..order {
                let product = perm::compose(&elems[i], &elems[j]);
                table[i * order + j] = index[&product] as u16;
            }
        }
        FiniteGroup::from_table(name, order, table)
    }

    /// Wraps a raw multiplication table after validating the group axioms:
    /// identity at 0, Latin square rows and columns, associativity, inverses.
    /// The associativity check is the full order³ sweep for order ≤ 64;
    /// larger tables (only reachable via `direct_product`, where associativity
    /// is inherited from the factors) are spot-checked on 10⁶ random triples.
    pub fn from_table(
        name: &str,
        order: usize,
        table: Vec<u16>,
    ) -> Result<FiniteGroup, GroupError> {
        if order == 0 || table.len() != order * order {
            return Err(GroupError::InvalidTable("wrong dimensions"));
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        for j in 0..order {
            if at(0, j) != j || at(j, 0) != j {
                return Err(GroupError::InvalidTable("index 0 is not the identity"));
            }
        }
        for i in 0..order {
            let mut row = vec![false; order];
            let mut col = vec![false; order];
            for j in 0..order {
                let (r, c) = (at(i, j), at(j, i));
                if r >= order || c >= order || row[r] || col[c] {
                    return Err(GroupError::InvalidTable("not a Latin square"));
                }
                row[r] = true;
                col[c] = true;
            }
        }
        if order <= 64 {
            for a in 0..order {
                for b in 0..order {
                    let ab = at(a, b);
                    for c in 0..order {
                        if at(ab, c) != at(a, at(b, c)) {
                            return Err(GroupError::InvalidTable("not associative"));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64;
            for _ in 0..1_000_000 {
                state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
                let a = (state >> 33) as usize % order;
                let b = (state >> 17) as usize % order;
                let c = state as usize % order;
                if at(at(a, b), c) != at(a, at(b, c)) {
                    return Err(GroupError::InvalidTable("not associative"));
                }
            }
        }

        let mut inv = vec![0u16; order];
        for i in 0..order {
            // A Latin square row hits 0 exactly once.
            inv[i] = (0..order).find(|&j| at(i, j) == 0).unwrap() as u16;
        }
        let mut elem_orders = vec![0u16; order];
        for i in 0..order {
            let (mut o, mut x) = (1u16, i);
            while x != 0 {
                x = at(x, i);
                o += 1;
            }
            elem_orders[i] = o;
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            order,
            table,
            inv,
            elem_orders,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Product of elements `a·b`.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    /// Inverse of element `a`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// Multiplicative order of element `a`.
    pub fn element_order(&self, a: usize) -> usize {
        self.elem_orders[a] as usize
    }

    /// Sorted multiset of element orders — a cheap isomorphism invariant.
    pub fn order_spectrum(&self) -> Vec<usize> {
        let mut spectrum: Vec<usize> =
            self.elem_orders.iter().map(|&o| o as usize).collect();
        spectrum.sort_unstable();
        spectrum
    }

    /// `true` iff `subset` contains the identity and is closed under the
    /// product (inverses follow by finiteness).
    pub fn is_subgroup(&self, subset: &[usize]) -> bool {
        let mut member = vec![false; self.order];
        for &x in subset {
            if x >= self.order {
                return false;
            }
            member[x] = true;
        }
        if !member[0] {
            return false;
        }
        subset
            .iter()
            .all(|&a| subset.iter().all(|&b| member[self.mul(a, b)]))
    }

    /// The coset partition induced by `h`: the orbits of H under right
    /// multiplication, i.e. the blocks gH.  Blocks are sorted ascending
    /// internally and ordered by their minimum element, so the block
    /// containing 0 is H itself.
    pub fn right_cosets(&self, h: &[usize]) -> Result<Vec<Vec<usize>>, GroupError> {
        if !self.is_subgroup(h) {
            return Err(GroupError::NotASubgroup);
        }
        let mut assigned = vec![false; self.order];
        let mut blocks = Vec::with_capacity(self.order / h.len().max(1));
        for g in 0..self.order {
            if assigned[g] {
                continue;
            }
            let mut block: Vec<usize> = h.iter().map(|&x| self.mul(g, x)).collect();
            block.sort_unstable();
            for &x in &block {
                assigned[x] = true;
            }
            blocks.push(block);
        }
        Ok(blocks)
    }

    /// The regular representation by translations x ↦ g·x, one permutation
    /// per group element, in element order.  Every translation is an
    /// automorphism of every Cayley graph over this group.
    pub fn translations(&self) -> Vec<Perm> {
        (0..self.order)
            .map(|g| (0..self.order).map(|x| self.mul(g, x)).collect())
            .collect()
    }

    /// A short generating sequence: greedily extends by the smallest element
    /// outside the subgroup generated so far.
    pub fn generating_sequence(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut sub = vec![false; self.order];
        sub[0] = true;
        let mut size = 1;
        for i in 1..self.order {
            if sub[i] {
                continue;
            }
            gens.push(i);
            // Close the current subgroup together with i.
            sub[i] = true;
            size += 1;
            let mut changed = true;
            while changed {
                changed = false;
                for a in 0..self.order {
                    if !sub[a] {
                        continue;
                    }
                    for b in 0..self.order {
                        if !sub[b] {
                            continue;
                        }
                        let c = self.mul(a, b);
                        if !sub[c] {
                            sub[c] = true;
                            size += 1;
                            changed = true;
                        }
                    }
                }
            }
            if size == self.order {
                break;
            }
        }
        gens
    }

    /// The full automorphism group, as permutations of element indices, found
    /// by backtracking over images of a generating sequence (candidates must
    /// match element orders) with each partial map extended by closure.
    /// Deterministic output order.
    pub fn automorphisms(&self) -> Vec<Perm> {
        let gens = self.generating_sequence();
        let mut results = Vec::new();
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        self.aut_backtrack(&gens, 0, &map, &mut results);
        results
    }

    fn aut_backtrack(
        &self,
        gens: &[usize],
        depth: usize,
        map: &[usize],
        results: &mut Vec<Perm>,
    ) {
        if depth == gens.len() {
            if map.iter().all(|&x| x != usize::MAX) {
                results.push(map.to_vec());
            }
            return;
        }
        let g = gens[depth];
        for cand in 0..self.order {
            if self.elem_orders[cand] != self.elem_orders[g]
                || map.contains(&cand)
            {
                continue;
            }
            let mut next = map.to_vec();
            next[g] = cand;
            if self.close_map(&mut next, self) {
                self.aut_backtrack(gens, depth + 1, &next, results);
            }
        }
    }

    /// Extends a partial index map into `target` by closing under products:
    /// whenever a and b have images, a·b's image is forced.  Returns false on
    /// any conflict (product mismatch or lost injectivity).
    fn close_map(&self, map: &mut [usize], target: &FiniteGroup) -> bool {
        loop {
            let mut changed = false;
            for a in 0..self.order {
                if map[a] == usize::MAX {
                    continue;
                }
                for b in 0..self.order {
                    if map[b] == usize::MAX {
                        continue;
                    }
                    let c = self.mul(a, b);
                    let image = target.mul(map[a], map[b]);
                    if map[c] == usize::MAX {
                        map[c] = image;
                        changed = true;
                    } else if map[c] != image {
                        return false;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut used = vec![false; target.order];
        for &x in map.iter() {
            if x != usize::MAX {
                if used[x] {
                    return false;
                }
                used[x] = true;
            }
        }
        true
    }

    /// `true` iff an index bijection carrying one table to the other exists.
    /// Order check, then element-order-spectrum check, then generator-image
    /// backtracking.
    pub fn isomorphic(&self, other: &FiniteGroup) -> bool {
        if self.order != other.order {
            return false;
        }
        if self.order_spectrum() != other.order_spectrum() {
            return false;
        }
        let gens = self.generating_sequence();
        let mut map = vec![usize::MAX; self.order];
        map[0] = 0;
        self.iso_backtrack(other, &gens, 0, &map)
    }

    fn iso_backtrack(
        &self,
        other: &FiniteGroup,
        gens: &[usize],
        depth: usize,
        map: &[usize],
    ) -> bool {
        if depth == gens.len() {
            return map.iter().all(|&x| x != usize::MAX);
        }
        let g = gens[depth];
        for cand in 0..other.order {
            if other.elem_orders[cand] != self.elem_orders[g]
                || map.contains(&cand)
            {
                continue;
            }
            let mut next = map.to_vec();
            next[g] = cand;
            if self.close_map(&mut next, other)
                && self.iso_backtrack(other, gens, depth + 1, &next)
            {
                return true;
            }
        }
        false
    }

    /// Componentwise product on pairs; pair (i, j) gets index i·order₂ + j.
    ///
    /// Panics if the combined order exceeds 1024.
    pub fn direct_product(&self, other: &FiniteGroup) -> FiniteGroup {
        let order = self.order * other.order;
        assert!(order <= 1024, "direct product order {order} exceeds 1024");
        let mut table = vec![0u16; order * order];
        for i1 in 0..self.order {
            for j1 in 0..other.order {
                let a = i1 * other.order + j1;
                for i2 in 0..self.order {
                    for j2 in 0..other.order {
                        let b = i2 * other.order + j2;
                        let product =
                            self.mul(i1, i2) * other.order + other.mul(j1, j2);
                        table[a * order + b] = product as u16;
                    }
                }
            }
        }
        let name = format!("{}x{}", self.name, other.name);
        FiniteGroup::from_table(&name, order, table)
            .expect("componentwise product of valid tables is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Perm {
        (0..n).map(|i| (i + 1) % n).collect()
    }

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::from_generators(&[cycle(n)], n, &format!("Z{n}")).unwrap()
    }

    fn d8() -> FiniteGroup {
        // Rotation (0 1 2 3) and the reflection (1 3).
        let gens = vec![cycle(4), vec![0, 3, 2, 1]];
        FiniteGroup::from_generators(&gens, 8, "D8").unwrap()
    }

    fn e8() -> FiniteGroup {
        let gens = vec![
            vec![1, 0, 2, 3, 4, 5],
            vec![0, 1, 3, 2, 4, 5],
            vec![0, 1, 2, 3, 5, 4],
        ];
        FiniteGroup::from_generators(&gens, 8, "E8").unwrap()
    }

    /// The group of the worked 8-vertex example: Z₄×Z₂ with a = the 4-cycle
    /// generator and b = the 2-cycle generator.  BFS indices: e=0, a=1, b=2,
    /// a²=3, ab=4, a³=5, a²b=6, a³b=7.
    pub(crate) fn z4xz2() -> FiniteGroup {
        let gens = vec![vec![1, 2, 3, 0, 4, 5], vec![0, 1, 2, 3, 5, 4]];
        FiniteGroup::from_generators(&gens, 8, "Z4xZ2").unwrap()
    }

    #[test]
    fn closure_indexes_z4_by_powers() {
        let g = z(4);
        // BFS from e discovers g, g², g³ in order, so index of g² is 2.
        assert_eq!(g.mul(1, 1), 2);
        assert_eq!(g.mul(2, 2), 0);
        assert_eq!(g.inv(1), 3);
    }

    #[test]
    fn closure_d8_has_five_involutions() {
        let g = d8();
        let involutions = (0..8).filter(|&i| g.element_order(i) == 2).count();
        assert_eq!(involutions, 5);
        assert_ne!(g.mul(1, 2), g.mul(2, 1), "D8 is non-abelian");
    }

    #[test]
    fn closure_order_mismatch() {
        let err = FiniteGroup::from_generators(&[vec![1, 0]], 4, "bad");
        assert_eq!(
            err.unwrap_err(),
            GroupError::OrderMismatch { actual: 2, declared: 4 }
        );
    }

    #[test]
    fn closure_rejects_bad_generators() {
        assert_eq!(
            FiniteGroup::from_generators(&[], 1, "none").unwrap_err(),
            GroupError::DegreeMismatch
        );
        assert_eq!(
            FiniteGroup::from_generators(&[vec![0, 0]], 1, "notbij").unwrap_err(),
            GroupError::DegreeMismatch
        );
        assert_eq!(
            FiniteGroup::from_generators(&[vec![1, 0], vec![0]], 2, "deg")
                .unwrap_err(),
            GroupError::DegreeMismatch
        );
    }

    #[test]
    fn z4xz2_layout_matches_expected() {
        let g = z4xz2();
        assert_eq!(g.element_order(1), 4); // a
        assert_eq!(g.element_order(2), 2); // b
        assert_eq!(g.mul(1, 1), 3); // a² at index 3
        assert_eq!(g.mul(3, 1), 5); // a³ at index 5
        assert_eq!(g.mul(1, 2), 4); // ab at index 4
    }

    #[test]
    fn subgroup_examples() {
        let g = z4xz2();
        assert!(g.is_subgroup(&[0, 2])); // {e, b}
        assert!(g.is_subgroup(&[0]));
        let z4 = z(4);
        assert!(!z4.is_subgroup(&[0, 1])); // order-4 element, not closed
        assert!(!z4.is_subgroup(&[1, 3])); // missing identity
    }

    #[test]
    fn coset_examples() {
        let g = z4xz2();
        let blocks = g.right_cosets(&[0, 2]).unwrap();
        assert_eq!(blocks, vec![vec![0, 2], vec![1, 4], vec![3, 6], vec![5, 7]]);

        let whole: Vec<usize> = (0..8).collect();
        assert_eq!(g.right_cosets(&whole).unwrap().len(), 1);
        assert_eq!(g.right_cosets(&[0]).unwrap().len(), 8);
        assert_eq!(g.right_cosets(&[0, 1]), Err(GroupError::NotASubgroup));
    }

    #[test]
    fn cosets_partition_with_constant_size() {
        let g = d8();
        for h in [vec![0, 4], g.right_cosets(&[0]).unwrap()[0].clone()] {
            if !g.is_subgroup(&h) {
                continue;
            }
            let blocks = g.right_cosets(&h).unwrap();
            let mut seen = [false; 8];
            for b in &blocks {
                assert_eq!(b.len(), h.len());
                for &x in b {
                    assert!(!seen[x]);
                    seen[x] = true;
                }
            }
            assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(z(4).automorphisms().len(), 2);
        assert_eq!(z(2).automorphisms().len(), 1);
        assert_eq!(e8().automorphisms().len(), 168);
        assert_eq!(d8().automorphisms().len(), 8);
    }

    #[test]
    fn automorphisms_preserve_table() {
        for g in [z(6), d8(), z4xz2()] {
            for sigma in g.automorphisms() {
                for i in 0..g.order() {
                    for j in 0..g.order() {
                        assert_eq!(
                            sigma[g.mul(i, j)],
                            g.mul(sigma[i], sigma[j])
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn isomorphism_examples() {
        let e4 = FiniteGroup::from_generators(
            &[vec![1, 0, 2, 3], vec![0, 1, 3, 2]],
            4,
            "E4",
        )
        .unwrap();
        assert!(!z(4).isomorphic(&e4));

        // D8 from a different generating set: two reflections.
        let d8_alt = FiniteGroup::from_generators(
            &[vec![0, 3, 2, 1], vec![1, 0, 3, 2]],
            8,
            "D8alt",
        )
        .unwrap();
        assert!(d8().isomorphic(&d8_alt));

        let s3 =
            FiniteGroup::from_generators(&[cycle(3), vec![0, 2, 1]], 6, "S3")
                .unwrap();
        assert!(!z(6).isomorphic(&s3));
    }

    #[test]
    fn direct_product_examples() {
        let product = z(4).direct_product(&z(2));
        assert_eq!(product.order(), 8);
        assert!(product.isomorphic(&z4xz2()));

        let trivial = FiniteGroup::from_generators(&[vec![0]], 1, "Z1").unwrap();
        assert!(z(6).direct_product(&trivial).isomorphic(&z(6)));

        let e4 = z(2).direct_product(&z(2));
        assert!((1..4).all(|i| e4.element_order(i) == 2));

        assert!(z(3)
            .direct_product(&z(4))
            .isomorphic(&z(4).direct_product(&z(3))));
    }

    #[test]
    fn translations_form_the_group() {
        let g = d8();
        let t = g.translations();
        assert_eq!(t.len(), 8);
        // Translation by the identity is the identity permutation, and
        // translations compose like the table: t[a]∘t[b] maps x to a·(b·x)…
        // with our left-translation convention t[b] after t[a] is t[a·b]
        // applied as x ↦ (a·b)·x only when checked through the table.
        assert_eq!(t[0], perm::identity(8));
        for a in 0..8 {
            for x in 0..8 {
                assert_eq!(t[a][x], g.mul(a, x));
            }
        }
    }
}
