//! Acceptance gate: seven end-to-end criteria, one test function each.
//! Every test prints a `criterion N (<name>): pass|FAIL` line (visible under
//! `--nocapture`), then fails normally on any violated assertion.
//!
//! The expected values below are frozen from verified runs. The two least
//! obvious facts were re-proven by methods that share no code with the
//! classifier before being frozen: the dicyclic group of order 20 acts on
//! the (20,7,3,2,4,5) and (20,13,9,8,4,5) graphs (order-spectrum
//! identification of the catalog entry, then certificate equality with the
//! cyclic witness), and (24,8,4,2,4,6) has four isomorphism classes
//! (pairwise brute-force backtracking isomorphism tests on the witnesses,
//! no canonical forms involved).

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, resume_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;

use ddcg::classifier::{
    certify_nonexistence, classify_order, for_each_inverse_closed_subset, SearchOptions,
};
use ddcg::constructions::{
    hadamard_replace, kron_allones, kron_identity, paley_ddcg, DdcgConstruction, VkLambdaGraph,
};
use ddcg::graph::Graph;
use ddcg::graph6;
use ddcg::hadamard::graphical_registry;
use ddcg::perm::Perm;
use ddcg::{
    canonical_certificate, cayley_graph, ddg_check, is_regular_action, ss_profile, theorem3_test,
    ConnectionSet, DdgParams, GroupCatalog,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn criterion(number: usize, name: &str, body: impl FnOnce()) {
    let outcome = catch_unwind(AssertUnwindSafe(body));
    println!(
        "criterion {number} ({name}): {}",
        if outcome.is_ok() { "pass" } else { "FAIL" }
    );
    if let Err(panic) = outcome {
        resume_unwind(panic);
    }
}

/// A raw (v, k, λ₁, λ₂, m, n) tuple, convertible via [`params_of`].
type Tuple6 = (usize, usize, usize, usize, usize, usize);

/// Every proper parameter row on up to 27 vertices, in lexicographic order,
/// with its number of Cayley isomorphism classes. Zero counts are the five
/// certified-nonexistent candidates.
const TABLE1: [(usize, usize, usize, usize, usize, usize, usize); 26] = [
    (8, 4, 0, 2, 4, 2, 1),
    (10, 5, 4, 2, 5, 2, 1),
    (12, 5, 0, 2, 6, 2, 1),
    (12, 5, 1, 2, 4, 3, 1),
    (12, 6, 2, 3, 3, 4, 1),
    (12, 7, 3, 4, 4, 3, 1),
    (15, 4, 0, 1, 5, 3, 0),
    (18, 9, 6, 4, 6, 3, 1),
    (18, 9, 8, 4, 9, 2, 1),
    (20, 7, 3, 2, 4, 5, 1),
    (20, 7, 6, 2, 10, 2, 1),
    (20, 9, 0, 4, 10, 2, 0),
    (20, 13, 9, 8, 4, 5, 1),
    (20, 13, 12, 8, 10, 2, 1),
    (24, 6, 2, 1, 3, 8, 0),
    (24, 7, 0, 2, 8, 3, 1),
    (24, 8, 4, 2, 4, 6, 4),
    (24, 10, 2, 4, 12, 2, 3),
    (24, 10, 3, 4, 8, 3, 1),
    (24, 10, 6, 3, 3, 8, 0),
    (24, 14, 6, 8, 12, 2, 1),
    (24, 14, 7, 8, 8, 3, 1),
    (24, 16, 12, 10, 4, 6, 3),
    (26, 13, 12, 6, 13, 2, 1),
    (27, 8, 4, 2, 9, 3, 0),
    (27, 18, 9, 12, 9, 3, 2),
];

/// The ten order-24 groups acting on the (24,8,4,2,4,6) and
/// (24,16,12,10,4,6) families, as a union over the classes of each tuple.
const ORDER24_TEN: &[&str] = &[
    "(Z6xZ2):Z2",
    "D24",
    "S4",
    "Z12xZ2",
    "Z2x(Z3:Z4)",
    "Z2xA4",
    "Z2xZ2xS3",
    "Z3xD8",
    "Z4xS3",
    "Z6xZ2xZ2",
];

const ORDER20_ALL: &[&str] = &["D20", "Dic5", "Z10xZ2", "Z20", "Z5:Z4"];

/// Acting-group union per positive parameter tuple.
const TABLE2_UNIONS: [(Tuple6, &[&str]); 21] = [
    ((8, 4, 0, 2, 4, 2), &["D8", "E8", "Z4xZ2"]),
    ((10, 5, 4, 2, 5, 2), &["D10", "Z10"]),
    ((12, 5, 0, 2, 6, 2), &["A4"]),
    ((12, 5, 1, 2, 4, 3), &["A4", "D12", "Z12", "Z3:Z4", "Z6xZ2"]),
    ((12, 6, 2, 3, 3, 4), &["A4"]),
    ((12, 7, 3, 4, 4, 3), &["D12", "Z12", "Z3:Z4", "Z6xZ2"]),
    ((18, 9, 6, 4, 6, 3), &["E9:Z2", "Z3xS3"]),
    ((18, 9, 8, 4, 9, 2), &["E9:Z2", "Z3xS3", "Z6xZ3"]),
    ((20, 7, 3, 2, 4, 5), ORDER20_ALL),
    ((20, 7, 6, 2, 10, 2), &["Z5:Z4"]),
    ((20, 13, 9, 8, 4, 5), ORDER20_ALL),
    ((20, 13, 12, 8, 10, 2), &["Z5:Z4"]),
    ((24, 7, 0, 2, 8, 3), &["S4"]),
    ((24, 8, 4, 2, 4, 6), ORDER24_TEN),
    ((24, 10, 2, 4, 12, 2), &["S4"]),
    ((24, 10, 3, 4, 8, 3), &["S4"]),
    ((24, 14, 6, 8, 12, 2), &["S4"]),
    ((24, 14, 7, 8, 8, 3), &["S4"]),
    ((24, 16, 12, 10, 4, 6), ORDER24_TEN),
    ((26, 13, 12, 6, 13, 2), &["D26", "Z26"]),
    ((27, 18, 9, 12, 9, 3), &["E9:Z3", "Z9:Z3"]),
];

fn params_of(t: Tuple6) -> DdgParams {
    DdgParams::new(t.0, t.1, t.2, t.3, t.4, t.5)
}

#[test]
fn criterion_1_table1_class_counts() {
    criterion(1, "table1 class counts via the tables command", || {
        let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("acceptance_tables");
        std::fs::create_dir_all(&dir).unwrap();
        let output = Command::new(env!("CARGO_BIN_EXE_ddcg"))
            .args(["tables", "--max-order", "27", "--out-dir"])
            .arg(&dir)
            .output()
            .unwrap();
        assert!(
            output.status.success(),
            "tables run failed: {}",
            String::from_utf8_lossy(&output.stderr)
        );
        let table1 = std::fs::read_to_string(dir.join("table1.txt")).unwrap();
        let rows: Vec<Vec<usize>> = table1
            .lines()
            .filter(|line| !line.starts_with('#'))
            .map(|line| {
                line.split_whitespace()
                    .map(|f| f.parse().unwrap())
                    .collect()
            })
            .collect();
        let expected: Vec<Vec<usize>> = TABLE1
            .iter()
            .map(|&(v, k, l1, l2, m, n, count)| vec![v, k, l1, l2, m, n, count])
            .collect();
        assert_eq!(rows, expected);

        // Cross-check: one table2 record line per counted class.
        let table2 = std::fs::read_to_string(dir.join("table2.txt")).unwrap();
        let records = table2
            .lines()
            .filter(|line| !line.starts_with('#'))
            .count();
        let total: usize = TABLE1.iter().map(|row| row.6).sum();
        assert_eq!(records, total);
    });
}

#[test]
fn criterion_2_nonexistence_certificates() {
    criterion(2, "five nonexistence certificates", || {
        let catalog = GroupCatalog::builtin();
        for tuple in [
            (15, 4, 0, 1, 5, 3),
            (20, 9, 0, 4, 10, 2),
            (24, 6, 2, 1, 3, 8),
            (24, 10, 6, 3, 3, 8),
            (27, 8, 4, 2, 9, 3),
        ] {
            let p = params_of(tuple);
            let cert = certify_nonexistence(&catalog, p, &SearchOptions::default()).unwrap();
            assert!(cert.nonexistent, "{p} unexpectedly realized");
            // Exhaustiveness audit: one cell per catalog group of this order,
            // all searched at the requested degree.
            assert_eq!(cert.cells.len(), catalog.of_order(p.v).len());
            assert!(cert.cells.iter().all(|cell| cell.k == p.k));
            assert!(cert.cells.iter().all(|cell| cell.enumerated >= cell.pruned));
            let log = cert.render_log();
            assert!(log.contains("verdict: no divisible design Cayley graph"));
        }
    });
}

#[test]
fn criterion_3_table2_group_sets() {
    criterion(3, "acting-group sets per parameter tuple", || {
        let catalog = GroupCatalog::builtin();
        let options = SearchOptions::default();
        let mut by_tuple: BTreeMap<DdgParams, Vec<BTreeSet<String>>> = BTreeMap::new();
        for v in 1..=27 {
            let report = classify_order(&catalog, v, &options).unwrap();
            for record in report.records {
                let groups: BTreeSet<String> = record.groups.iter().cloned().collect();
                assert_eq!(groups.len(), record.groups.len());
                by_tuple.entry(record.params).or_default().push(groups);
            }
        }

        // Exactly the 21 positive tuples appear, with the counted number of
        // classes each, and the acting-group union frozen above.
        assert_eq!(by_tuple.len(), TABLE2_UNIONS.len());
        let counts: BTreeMap<DdgParams, usize> = TABLE1
            .iter()
            .map(|&(v, k, l1, l2, m, n, count)| (DdgParams::new(v, k, l1, l2, m, n), count))
            .collect();
        for (tuple, expected) in TABLE2_UNIONS {
            let p = params_of(tuple);
            let sets = by_tuple.get(&p).unwrap_or_else(|| panic!("no records for {p}"));
            assert_eq!(sets.len(), counts[&p], "class count mismatch at {p}");
            let union: BTreeSet<&str> = sets
                .iter()
                .flat_map(|set| set.iter().map(String::as_str))
                .collect();
            let want: BTreeSet<&str> = expected.iter().copied().collect();
            assert_eq!(union, want, "acting-group union mismatch at {p}");
        }

        // The three (24,16,12,10,4,6) classes, ordered by how many groups act,
        // carry these exact per-class sets.
        let mut sets16 = by_tuple[&DdgParams::new(24, 16, 12, 10, 4, 6)].clone();
        sets16.sort_by_key(BTreeSet::len);
        let eight: BTreeSet<&str> = ORDER24_TEN
            .iter()
            .copied()
            .filter(|name| !matches!(*name, "S4" | "Z2xA4"))
            .collect();
        assert_eq!(
            sets16[0].iter().map(String::as_str).collect::<BTreeSet<_>>(),
            BTreeSet::from(["(Z6xZ2):Z2", "D24", "Z2xZ2xS3", "Z4xS3"])
        );
        assert_eq!(sets16[1].iter().map(String::as_str).collect::<BTreeSet<_>>(), eight);
        assert_eq!(
            sets16[2].iter().map(String::as_str).collect::<BTreeSet<_>>(),
            ORDER24_TEN.iter().copied().collect::<BTreeSet<_>>()
        );
    });
}

#[test]
fn criterion_4_order8_replay() {
    criterion(4, "order-8 connection-set replay", || {
        let catalog = GroupCatalog::builtin();
        let position = catalog.position("Z4xZ2").unwrap();
        let group = catalog.groups()[position].clone();
        // In the catalog's breadth-first layout e, a, b, a2, ab, a3, a2b, a3b
        // the set {a, a2, a3, b} is {1, 3, 5, 2}.
        let s = ConnectionSet::new(&group, &[1, 2, 3, 5]).unwrap();

        // Profile SS^-1 = 4e + 2A + 0B: 4 at the identity, 2 on six elements,
        // 0 on the single element spanning the identity's class.
        let profile = ss_profile(&s);
        assert_eq!(profile.counts[0], 4);
        let mut others = profile.counts[1..].to_vec();
        others.sort_unstable();
        assert_eq!(others, [0, 2, 2, 2, 2, 2, 2]);

        let expected = DdgParams::new(8, 4, 0, 2, 4, 2);
        let witnesses = theorem3_test(&s);
        assert_eq!(witnesses.len(), 1);
        assert_eq!(witnesses[0].params, expected);
        assert_eq!(witnesses[0].subgroup, vec![0, 2]);
        assert_eq!(
            witnesses[0].partition,
            vec![vec![0, 2], vec![1, 4], vec![3, 6], vec![5, 7]]
        );

        let graph = cayley_graph(&s);
        assert!(ddg_check(&graph)
            .iter()
            .any(|st| st.proper && st.params == expected));
        assert!(is_regular_action(&graph, &group.translations()).unwrap());
    });
}

/// The construction's own parameter claim must be visible to the blind graph
/// checker: exactly as stated when proper, as the single-λ marker with
/// matching v, k and λ when the tuple degenerates (one class, singleton
/// classes, or λ₁ = λ₂).
fn check_output(c: &DdcgConstruction) {
    assert!(is_regular_action(&c.graph, &c.action).unwrap());
    let structures = ddg_check(&c.graph);
    let p = c.params;
    if p.m == 1 || p.n == 1 || p.l1 == p.l2 {
        let want = if p.n == 1 { p.l2 } else { p.l1 };
        assert!(structures
            .iter()
            .any(|st| !st.proper && st.params.v == p.v && st.params.k == p.k && st.params.l1 == want));
    } else {
        assert!(structures.iter().any(|st| st.proper && st.params == p));
    }
}

#[test]
fn criterion_5_construction_matrix() {
    criterion(5, "construction theorems as executable proofs", || {
        let k4 = VkLambdaGraph::k4();
        for t in 1..=4 {
            let c = kron_identity(&k4, t, None).unwrap();
            assert_eq!(c.params, DdgParams::new(4 * t, 3, 2, 0, t, 4));
            check_output(&c);
        }
        for n in 1..=3 {
            let c = kron_allones(&k4, n).unwrap();
            assert_eq!(c.params, DdgParams::new(4 * n, 3 * n, 3 * n, 2 * n, 4, n));
            check_output(&c);
        }
        for q in [5, 9, 13, 17, 25] {
            let c = paley_ddcg(q).unwrap();
            assert_eq!(c.params, DdgParams::new(2 * q, q, q - 1, (q - 1) / 2, q, 2));
            check_output(&c);
        }

        let registry = graphical_registry(4).unwrap();
        assert_eq!(registry.len(), 2);
        let bases = [
            VkLambdaGraph::k2(),
            VkLambdaGraph::empty2(),
            VkLambdaGraph::k3(),
        ];
        for entry in &registry {
            let u = entry.matrix.u();
            for base in &bases {
                let n = base.graph.v() as i64;
                let kp = base.k as i64;
                let lam = base.lambda as i64;
                let formula = [
                    4 * n * u * u,
                    2 * n * u * u + u * (n - 2 * kp),
                    4 * lam * u * u + u * (2 * u + 1) * (n - 2 * kp),
                    n * u * u + u * (n - 2 * kp),
                    4 * u * u,
                    n,
                ];
                assert!(formula.iter().all(|&x| x >= 0));
                let expected = DdgParams::new(
                    formula[0] as usize,
                    formula[1] as usize,
                    formula[2] as usize,
                    formula[3] as usize,
                    formula[4] as usize,
                    formula[5] as usize,
                );
                let c = hadamard_replace(&entry.matrix, &entry.action, base).unwrap();
                assert_eq!(c.params, expected);
                check_output(&c);
            }
        }
    });
}

#[test]
fn criterion_6_cross_validation_oracle() {
    criterion(6, "profile test vs graph check, exhaustive through order 12", || {
        let catalog = GroupCatalog::builtin();
        let mut checked = 0u64;
        for group in catalog.groups().iter().filter(|g| g.order() <= 12) {
            for_each_inverse_closed_subset(group, |elements| {
                let s = ConnectionSet::new(group, elements).unwrap();
                let from_profile: BTreeSet<DdgParams> =
                    theorem3_test(&s).into_iter().map(|w| w.params).collect();
                let from_graph: BTreeSet<DdgParams> = ddg_check(&cayley_graph(&s))
                    .into_iter()
                    .filter(|st| st.proper)
                    .map(|st| st.params)
                    .collect();
                assert_eq!(
                    from_profile,
                    from_graph,
                    "disagreement on {} with S = {elements:?}",
                    group.name()
                );
                checked += 1;
            });
        }
        assert!(checked > 1_000, "only {checked} subsets swept");
    });
}

fn random_graph(rng: &mut ChaCha8Rng, v: usize) -> Graph {
    let mut g = Graph::empty(v).unwrap();
    for x in 0..v {
        for y in 0..x {
            if rng.gen_bool(0.5) {
                g.add_edge(x, y);
            }
        }
    }
    g
}

fn random_perm(rng: &mut ChaCha8Rng, v: usize) -> Perm {
    let mut p: Perm = (0..v).collect();
    p.shuffle(rng);
    p
}

#[test]
fn criterion_7_property_suites() {
    criterion(7, "property suites", || {
        let catalog = GroupCatalog::builtin();

        // Group axioms hold in full for every catalog entry.
        for g in catalog.groups() {
            let v = g.order();
            assert!(v >= 1 && !g.name().is_empty());
            for x in 0..v {
                assert_eq!(g.mul(0, x), x);
                assert_eq!(g.mul(x, 0), x);
                assert_eq!(g.mul(x, g.inv(x)), 0);
            }
            for a in 0..v {
                for b in 0..v {
                    for c in 0..v {
                        assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                    }
                }
            }
        }

        // Known group counts at the densest orders.
        for (order, count) in [(8, 5), (12, 5), (16, 14), (18, 5), (20, 5), (24, 15), (27, 5)] {
            assert_eq!(catalog.of_order(order).len(), count);
            assert_eq!(GroupCatalog::expected_count(order), Some(count));
        }
        for v in 1..=27 {
            assert!(catalog.is_complete_for(v));
        }

        // Canonical certificates are invariant under 10^3 random relabelings.
        let mut rng = ChaCha8Rng::seed_from_u64(0xDDC6);
        for _ in 0..1_000 {
            let v = rng.gen_range(4..=16);
            let g = random_graph(&mut rng, v);
            let p = random_perm(&mut rng, v);
            assert_eq!(canonical_certificate(&g), canonical_certificate(&g.relabel(&p)));
        }

        // graph6 round-trips 10^3 random graphs.
        for _ in 0..1_000 {
            let v = rng.gen_range(1..=40);
            let g = random_graph(&mut rng, v);
            let text = graph6::encode(&g).unwrap();
            assert_eq!(graph6::decode(&text).unwrap(), g);
        }

        // Orbit pruning loses nothing on any order up to 10.
        for v in 1..=10 {
            let pruned = classify_order(&catalog, v, &SearchOptions::default()).unwrap();
            let unpruned = classify_order(
                &catalog,
                v,
                &SearchOptions { prune: false, ..SearchOptions::default() },
            )
            .unwrap();
            assert_eq!(pruned.records, unpruned.records);
        }

        // Reports are byte-identical whatever the worker count.
        for order in [12, 16] {
            let renders: Vec<String> = [None, Some(1), Some(2), Some(3)]
                .into_iter()
                .map(|jobs| {
                    classify_order(
                        &catalog,
                        order,
                        &SearchOptions { jobs, ..SearchOptions::default() },
                    )
                    .unwrap()
                    .render()
                })
                .collect();
            assert!(renders.windows(2).all(|pair| pair[0] == pair[1]));
        }
    });
}
