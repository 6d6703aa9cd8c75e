//! DDG parameter tuples (v, k, λ₁, λ₂, m, n) and their feasibility rules.

use std::fmt;

/// Parameters of a divisible design graph: v vertices, degree k, m classes
/// of size n, λ₁ common neighbors within a class and λ₂ across classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DdgParams {
    pub v: usize,
    pub k: usize,
    pub l1: usize,
    pub l2: usize,
    pub m: usize,
    pub n: usize,
}

impl DdgParams {
    pub fn new(v: usize, k: usize, l1: usize, l2: usize, m: usize, n: usize) -> Self {
        DdgParams { v, k, l1, l2, m, n }
    }

    /// Basic bounds plus the counting identity k² = k + λ₁(n−1) + λ₂n(m−1),
    /// which double-counts walks of length 2 from any fixed vertex.
    pub fn feasible(&self) -> bool {
        self.v == self.m * self.n
            && self.k >= 1
            && self.k < self.v
            && self.l1 <= self.k
            && self.l2 <= self.k
            && self.k * self.k
                == self.k + self.l1 * (self.n - 1) + self.l2 * self.n * (self.m - 1)
    }

    /// `true` iff the parameters describe a proper, nontrivial DDG in the
    /// sense the classifier reports: 0 < λ₂ < k, λ₁ < k, and λ₂ > 2k − v.
    ///
    /// Any two vertices of a k-regular graph on v vertices share at least
    /// 2k − v neighbors, so λ₂ ≥ 2k − v always holds. The three strict
    /// inequalities here cut the degenerate extremes off the admissible
    /// range: λ₂ = 0 gives disjoint unions of (n,k,λ₁)-graphs, λ₁ = k gives
    /// their complete-multipartite blowups, and λ₂ = 2k − v gives the
    /// complements of disjoint unions (for example K_{m×n} plus a perfect
    /// matching inside every class). Each family exists for trivial reasons
    /// whenever its one-class ingredient does, so the classifier skips them.
    pub fn proper_nontrivial(&self) -> bool {
        self.l2 > 0
            && self.l2 < self.k
            && self.l1 < self.k
            && self.v + self.l2 > 2 * self.k
    }

    /// Renders as space-separated `v k l1 l2 m n` (the report-file field
    /// order).
    pub fn report_fields(&self) -> String {
        format!(
            "{} {} {} {} {} {}",
            self.v, self.k, self.l1, self.l2, self.m, self.n
        )
    }

    /// Parses the `v,k,l1,l2,m,n` form used by command-line filters.
    pub fn parse_csv(text: &str) -> Option<DdgParams> {
        let fields: Vec<usize> = text
            .split(',')
            .map(|t| t.trim().parse().ok())
            .collect::<Option<_>>()?;
        match fields[..] {
            [v, k, l1, l2, m, n] => Some(DdgParams::new(v, k, l1, l2, m, n)),
            _ => None,
        }
    }
}

impl fmt::Display for DdgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.v, self.k, self.l1, self.l2, self.m, self.n
        )
    }
}

/// Every feasible parameter tuple on v vertices, in lexicographic order.
/// The classifier derives its admissible degrees from this scan instead of
/// hardcoding known tables, so existence is rediscovered independently.
pub fn admissible_tuples(v: usize) -> Vec<DdgParams> {
    let mut out = Vec::new();
    for k in 1..v {
        for m in 1..=v {
            if !v.is_multiple_of(m) {
                continue;
            }
            let n = v / m;
            for l1 in 0..=k {
                for l2 in 0..=k {
                    let p = DdgParams::new(v, k, l1, l2, m, n);
                    if p.feasible() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}
