//! Isomorph-free exhaustive classification of divisible design Cayley
//! graphs.
//!
//! For every group of a given order and every admissible degree k, the
//! search walks all inverse-closed k-subsets of G∖{e} in lexicographic
//! order (on sorted index tuples), discards subsets that are not minimal in
//! their Aut(G)-orbit, and runs the SS⁻¹ profile test on the survivors.
//! Hits are cross-validated with `ddg_check`, reduced to canonical
//! certificates, and merged into per-parameter isomorphism classes with the
//! full list of acting groups.  Orbit pruning is lossless: an orbit's
//! lexicographic minimum is itself inverse-closed of the same size, so every
//! isomorphism class keeps at least one representative.
//!
//! (group, k) cells are independent; with the `parallel` feature they run on
//! a rayon worker pool.  Results are merged in a fixed cell order, so
//! reports are byte-identical regardless of worker count.

use crate::canon::{canonical_certificate, Certificate};
use crate::catalog::GroupCatalog;
use crate::ddg::theorem3_test;
use crate::graph::{cayley_graph, ConnectionSet};
use crate::group::FiniteGroup;
use crate::params::{admissible_tuples, DdgParams};
use crate::perm::Perm;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use thiserror::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest vertex count the classification covers; bounded by the group
/// catalog.
pub const MAX_ORDER: usize = 27;

/// Feasible proper parameter tuples that admit no divisible design Cayley
/// graph — confirmed by `certify_nonexistence`, listed so table output can
/// show their zero counts.
pub const NONEXISTENT_CANDIDATES: [DdgParams; 5] = [
    DdgParams { v: 15, k: 4, l1: 0, l2: 1, m: 5, n: 3 },
    DdgParams { v: 20, k: 9, l1: 0, l2: 4, m: 10, n: 2 },
    DdgParams { v: 24, k: 6, l1: 2, l2: 1, m: 3, n: 8 },
    DdgParams { v: 24, k: 10, l1: 6, l2: 3, m: 3, n: 8 },
    DdgParams { v: 27, k: 8, l1: 4, l2: 2, m: 9, n: 3 },
];

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifierError {
    #[error("the group catalog does not completely cover order {0}")]
    CatalogIncomplete(usize),
    #[error("orders above {MAX_ORDER} are out of scope, got {0}")]
    UnsupportedOrder(usize),
}

/// Knobs for a classification run.
#[derive(Debug, Clone, Copy)]
pub struct SearchOptions {
    /// Keep only structures with exactly these parameters.
    pub filter: Option<DdgParams>,
    /// Worker count for the parallel build (`None` = rayon's default);
    /// ignored by the sequential build.  Output never depends on it.
    pub jobs: Option<usize>,
    /// Aut(G)-orbit pruning of connection sets.  On by default; switching it
    /// off is only useful for the losslessness cross-check.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { filter: None, jobs: None, prune: true }
    }
}

/// One isomorphism class of divisible design Cayley graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub params: DdgParams,
    /// Canonical certificate of the isomorphism class.
    pub certificate: Certificate,
    /// graph6 of the canonical form (the certificate text).
    pub graph6: String,
    /// Names of all catalog groups admitting a regular action, in catalog
    /// order.
    pub groups: Vec<String>,
    /// First (catalog order, degree, lexicographic) connection set realizing
    /// the class.
    pub witness_group: String,
    pub witness_set: Vec<usize>,
}

impl ClassificationRecord {
    /// The report line:
    /// `v k l1 l2 m n ; <graph6> ; <group1,...> ; witness=<group>:<s1,...>`.
    pub fn render_line(&self) -> String {
        let set: Vec<String> =
            self.witness_set.iter().map(ToString::to_string).collect();
        format!(
            "{} ; {} ; {} ; witness={}:{}",
            self.params.report_fields(),
            self.graph6,
            self.groups.join(","),
            self.witness_group,
            set.join(",")
        )
    }
}

/// Search totals across all (group, k) cells.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub cells: u64,
    pub enumerated: u64,
    pub pruned: u64,
    pub kept: u64,
}

/// Per-cell audit line: how many connection sets one (group, k) cell saw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellLog {
    pub group: String,
    pub k: usize,
    pub enumerated: u64,
    pub pruned: u64,
    pub kept: u64,
}

/// Everything `classify_order` found, plus the audit trail.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub order: usize,
    pub records: Vec<ClassificationRecord>,
    pub stats: SearchStats,
    pub cells: Vec<CellLog>,
}

impl ClassificationReport {
    /// Deterministic text report: `#`-prefixed statistics, then one line per
    /// record sorted by (params, certificate).
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# divisible design Cayley graph classification, order {}",
            self.order
        );
        let _ = writeln!(
            out,
            "# cells searched: {} ; connection sets enumerated: {} ; \
             orbit-pruned: {} ; tested: {}",
            self.stats.cells,
            self.stats.enumerated,
            self.stats.pruned,
            self.stats.kept
        );
        let _ = writeln!(out, "# records: {}", self.records.len());
        for record in &self.records {
            let _ = writeln!(out, "{}", record.render_line());
        }
        out
    }
}

/// Outcome of a nonexistence search: the verdict plus one audit line per
/// (group, k) cell proving the search was exhaustive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonexistenceCertificate {
    pub params: DdgParams,
    pub nonexistent: bool,
    pub cells: Vec<CellLog>,
}

impl NonexistenceCertificate {
    pub fn render_log(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# nonexistence search for parameters {}",
            self.params.report_fields()
        );
        for cell in &self.cells {
            let _ = writeln!(
                out,
                "# group {} k={}: enumerated={} orbit-pruned={} tested={}",
                cell.group, cell.k, cell.enumerated, cell.pruned, cell.kept
            );
        }
        let _ = writeln!(
            out,
            "# verdict: {}",
            if self.nonexistent {
                "no divisible design Cayley graph with these parameters"
            } else {
                "realized — nonexistence refuted"
            }
        );
        out
    }
}

/// The inverse-closed atoms of a group: involutions as singletons and
/// {g, g⁻¹} pairs, as bitmasks sorted by least element.  Any inverse-closed
/// identity-free subset is a disjoint union of atoms.
struct Atoms {
    masks: Vec<u64>,
    sizes: Vec<usize>,
    /// Suffix counts of singleton and pair atoms, for exact-size pruning.
    ones_after: Vec<usize>,
    twos_after: Vec<usize>,
}

fn atoms_of(group: &FiniteGroup) -> Atoms {
    let v = group.order();
    let mut masks = Vec::new();
    let mut sizes = Vec::new();
    for g in 1..v {
        let gi = group.inv(g);
        if gi == g {
            masks.push(1u64 << g);
            sizes.push(1);
        } else if g < gi {
            masks.push(1u64 << g | 1u64 << gi);
            sizes.push(2);
        }
    }
    let count = masks.len();
    let mut ones_after = vec![0; count + 1];
    let mut twos_after = vec![0; count + 1];
    for i in (0..count).rev() {
        ones_after[i] = ones_after[i + 1] + usize::from(sizes[i] == 1);
        twos_after[i] = twos_after[i + 1] + usize::from(sizes[i] == 2);
    }
    Atoms { masks, sizes, ones_after, twos_after }
}

fn mask_elements(mask: u64) -> Vec<usize> {
    let mut elements = Vec::with_capacity(mask.count_ones() as usize);
    let mut m = mask;
    while m != 0 {
        elements.push(m.trailing_zeros() as usize);
        m &= m - 1;
    }
    elements
}

fn image_mask(mask: u64, aut: &Perm) -> u64 {
    let mut image = 0u64;
    let mut m = mask;
    while m != 0 {
        image |= 1u64 << aut[m.trailing_zeros() as usize];
        m &= m - 1;
    }
    image
}

/// `true` iff no automorphism maps the subset to a lexicographically smaller
/// one.  On sorted index tuples, "smaller" means the least element of the
/// symmetric difference lies in the image.
fn is_orbit_minimal(mask: u64, auts: &[Perm]) -> bool {
    for aut in auts {
        let image = image_mask(mask, aut);
        let diff = image ^ mask;
        if diff != 0 && image & (diff & diff.wrapping_neg()) != 0 {
            return false;
        }
    }
    true
}

struct EnumState<'a> {
    atoms: &'a Atoms,
    k: usize,
    auts: &'a [Perm],
    prune: bool,
    enumerated: u64,
    pruned: u64,
}

fn descend<F: FnMut(u64)>(
    st: &mut EnumState,
    f: &mut F,
    idx: usize,
    mask: u64,
    size: usize,
) {
    if size == st.k {
        st.enumerated += 1;
        if st.prune && !is_orbit_minimal(mask, st.auts) {
            st.pruned += 1;
        } else {
            f(mask);
        }
        return;
    }
    if idx == st.atoms.masks.len() {
        return;
    }
    let need = st.k - size;
    let ones = st.atoms.ones_after[idx];
    let twos = st.atoms.twos_after[idx];
    if need > ones + 2 * twos || (ones == 0 && need % 2 == 1) {
        return;
    }
    if st.atoms.sizes[idx] <= need {
        descend(
            st,
            f,
            idx + 1,
            mask | st.atoms.masks[idx],
            size + st.atoms.sizes[idx],
        );
    }
    descend(st, f, idx + 1, mask, size);
}

/// Visits every inverse-closed subset of G∖{e} (all sizes, the empty set
/// included), elements in ascending index order.  Exhaustive and unpruned —
/// the brute-force oracle the pruned search is checked against.
pub fn for_each_inverse_closed_subset<F: FnMut(&[usize])>(
    group: &FiniteGroup,
    mut f: F,
) {
    let atoms = atoms_of(group);
    let count = atoms.masks.len();
    assert!(count < 32, "subset sweep is meant for small orders");
    for choice in 0u32..1 << count {
        let mut mask = 0u64;
        for (i, atom) in atoms.masks.iter().enumerate() {
            if choice >> i & 1 == 1 {
                mask |= atom;
            }
        }
        f(&mask_elements(mask));
    }
}

/// The inverse-closed k-subsets of G∖{e} that are lexicographically minimal
/// in their Aut(G)-orbit, in lexicographic order of sorted index tuples.
pub fn enumerate_connection_sets(
    group: &FiniteGroup,
    k: usize,
) -> Vec<ConnectionSet<'_>> {
    let auts = group.automorphisms();
    let atoms = atoms_of(group);
    let mut state = EnumState {
        atoms: &atoms,
        k,
        auts: &auts,
        prune: true,
        enumerated: 0,
        pruned: 0,
    };
    let mut out = Vec::new();
    descend(
        &mut state,
        &mut |mask| {
            out.push(
                ConnectionSet::new(group, &mask_elements(mask))
                    .expect("enumerated subsets are valid connection sets"),
            );
        },
        0,
        0,
        0,
    );
    out
}

/// A single accepted structure inside one cell, before cross-group merging.
struct CellHit {
    params: DdgParams,
    certificate: Certificate,
    set: Vec<usize>,
}

fn search_cell(
    group: &FiniteGroup,
    auts: &[Perm],
    k: usize,
    filter: Option<DdgParams>,
    prune: bool,
) -> (CellLog, Vec<CellHit>) {
    let atoms = atoms_of(group);
    let mut state = EnumState {
        atoms: &atoms,
        k,
        auts,
        prune,
        enumerated: 0,
        pruned: 0,
    };
    let mut kept = 0u64;
    let mut hits = Vec::new();
    descend(
        &mut state,
        &mut |mask| {
            kept += 1;
            let elements = mask_elements(mask);
            let s = ConnectionSet::new(group, &elements)
                .expect("enumerated subsets are valid connection sets");
            for witness in theorem3_test(&s) {
                if !witness.params.proper_nontrivial() {
                    continue;
                }
                if filter.is_some_and(|want| want != witness.params) {
                    continue;
                }
                // Independent cross-validation: the profile test's verdict
                // must be visible in the graph itself.
                let graph = cayley_graph(&s);
                let confirmed = crate::ddg::ddg_check(&graph)
                    .into_iter()
                    .any(|st| st.proper && st.params == witness.params);
                assert!(
                    confirmed,
                    "profile test and graph check disagree: group {}, S = {:?}",
                    group.name(),
                    elements
                );
                hits.push(CellHit {
                    params: witness.params,
                    certificate: canonical_certificate(&graph),
                    set: elements.clone(),
                });
            }
        },
        0,
        0,
        0,
    );
    let log = CellLog {
        group: group.name().to_string(),
        k,
        enumerated: state.enumerated,
        pruned: state.pruned,
        kept,
    };
    (log, hits)
}

/// Classifies all divisible design Cayley graphs on `v` vertices over every
/// catalog group of order `v`.  Completeness rests on the profile-test
/// converse: the canonical class of the identity in any Cayley DDG is a
/// subgroup, so no realizing connection set can fail the test.
pub fn classify_order(
    catalog: &GroupCatalog,
    v: usize,
    options: &SearchOptions,
) -> Result<ClassificationReport, ClassifierError> {
    if v > MAX_ORDER {
        return Err(ClassifierError::UnsupportedOrder(v));
    }
    if !catalog.is_complete_for(v) {
        return Err(ClassifierError::CatalogIncomplete(v));
    }
    let groups = catalog.of_order(v);

    let degrees: Vec<usize> = match options.filter {
        Some(p) if p.v == v => vec![p.k],
        Some(_) => Vec::new(),
        None => {
            let mut ks: Vec<usize> = admissible_tuples(v)
                .into_iter()
                .filter(DdgParams::proper_nontrivial)
                .map(|t| t.k)
                .collect();
            ks.sort_unstable();
            ks.dedup();
            ks
        }
    };

    let auts: Vec<Vec<Perm>> =
        groups.iter().map(|g| g.automorphisms()).collect();
    let tasks: Vec<(usize, usize)> = (0..groups.len())
        .flat_map(|gi| degrees.iter().map(move |&k| (gi, k)))
        .collect();
    let run = |&(gi, k): &(usize, usize)| {
        search_cell(groups[gi], &auts[gi], k, options.filter, options.prune)
    };

    #[cfg(feature = "parallel")]
    let results: Vec<(CellLog, Vec<CellHit>)> = match options.jobs {
        None => tasks.par_iter().map(run).collect(),
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("worker pool construction")
            .install(|| tasks.par_iter().map(run).collect()),
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<(CellLog, Vec<CellHit>)> = tasks.iter().map(run).collect();

    // Deterministic reduction in task order (groups in catalog order, k
    // ascending, sets lexicographic): first hit per class = witness.
    type Accum = (BTreeSet<usize>, usize, Vec<usize>);
    let mut classes: BTreeMap<(DdgParams, Certificate), Accum> = BTreeMap::new();
    let mut stats = SearchStats::default();
    let mut cells = Vec::with_capacity(results.len());
    for (&(gi, _k), (log, hits)) in tasks.iter().zip(results) {
        stats.cells += 1;
        stats.enumerated += log.enumerated;
        stats.pruned += log.pruned;
        stats.kept += log.kept;
        cells.push(log);
        for hit in hits {
            classes
                .entry((hit.params, hit.certificate))
                .and_modify(|(members, _, _)| {
                    members.insert(gi);
                })
                .or_insert_with(|| {
                    (BTreeSet::from([gi]), gi, hit.set.clone())
                });
        }
    }

    let records = classes
        .into_iter()
        .map(|((params, certificate), (members, wg, wset))| {
            let graph6 = certificate.0.clone();
            ClassificationRecord {
                params,
                certificate,
                graph6,
                groups: members
                    .iter()
                    .map(|&gi| groups[gi].name().to_string())
                    .collect(),
                witness_group: groups[wg].name().to_string(),
                witness_set: wset,
            }
        })
        .collect();

    Ok(ClassificationReport { order: v, records, stats, cells })
}

/// Runs the exhaustive search restricted to `params` and reports whether it
/// came up empty, with the per-cell audit trail.
pub fn certify_nonexistence(
    catalog: &GroupCatalog,
    params: DdgParams,
    options: &SearchOptions,
) -> Result<NonexistenceCertificate, ClassifierError> {
    let opts = SearchOptions { filter: Some(params), ..*options };
    let report = classify_order(catalog, params.v, &opts)?;
    Ok(NonexistenceCertificate {
        params,
        nonexistent: report.records.is_empty(),
        cells: report.cells,
    })
}

/// Classifies every order up to `max_order` and renders the two summary
/// tables: per-parameter class counts (zero rows included for the known
/// nonexistent candidates) and one line per isomorphism class with its
/// acting groups.  Byte-deterministic.
pub fn emit_tables(
    catalog: &GroupCatalog,
    max_order: usize,
    options: &SearchOptions,
) -> Result<(String, String), ClassifierError> {
    if max_order > MAX_ORDER {
        return Err(ClassifierError::UnsupportedOrder(max_order));
    }
    let opts = SearchOptions { filter: None, ..*options };
    let mut reports = Vec::new();
    for v in 1..=max_order {
        reports.push(classify_order(catalog, v, &opts)?);
    }

    let mut counts: BTreeMap<DdgParams, usize> = BTreeMap::new();
    for report in &reports {
        for record in &report.records {
            *counts.entry(record.params).or_insert(0) += 1;
        }
    }
    for candidate in NONEXISTENT_CANDIDATES {
        if candidate.v <= max_order {
            counts.entry(candidate).or_insert(0);
        }
    }

    let mut table1 = String::new();
    let _ = writeln!(
        table1,
        "# proper divisible design Cayley graphs on at most {max_order} vertices"
    );
    let _ = writeln!(table1, "# columns: v k lambda1 lambda2 m n ddcg_count");
    for (params, count) in &counts {
        let _ = writeln!(table1, "{} {}", params.report_fields(), count);
    }

    let mut table2 = String::new();
    let _ = writeln!(
        table2,
        "# regular groups per divisible design Cayley graph class, orders up to {max_order}"
    );
    let _ = writeln!(
        table2,
        "# columns: v k lambda1 lambda2 m n ; graph6 ; groups ; witness"
    );
    for report in &reports {
        for record in &report.records {
            let _ = writeln!(table2, "{}", record.render_line());
        }
    }

    Ok((table1, table2))
}
