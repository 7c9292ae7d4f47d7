//! Exhaustive enumeration of small connected positive-definite integer
//! symmetric matrices, bound-verification campaigns, spectrum scans, and
//! deterministic example generators.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::constructions::{density_sequence, MeasureKind};
use crate::error::Error;
use crate::matrices::{AnyMatrix, IntMatrix};
use crate::measures::lower_bound_B;
use crate::numerics::Rational;
use crate::spectra::is_positive_definite;

/// Search-space ceiling applied when a spec does not set its own.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dedupe {
    None,
    /// Keep one representative per simultaneous row/column permutation
    /// orbit: the matrix whose row-major entry tuple is least.
    PermutationCanonical,
}

/// Description of one enumeration box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumSpec {
    pub n: usize,
    /// Diagonal entries range over [1, diag_max].
    pub diag_max: i64,
    /// Off-diagonal entries range over [-off_max, off_max].
    pub off_max: i64,
    pub dedupe: Dedupe,
    pub require_connected: bool,
    pub require_pd: bool,
    /// Ceiling on the raw search-space size; enumeration refuses to start
    /// above it.
    pub budget: u64,
}

impl EnumSpec {
    pub fn new(n: usize, diag_max: i64, off_max: i64) -> Self {
        assert!(n >= 1 && diag_max >= 1 && off_max >= 1);
        EnumSpec {
            n,
            diag_max,
            off_max,
            dedupe: Dedupe::None,
            require_connected: true,
            require_pd: true,
            budget: DEFAULT_NODE_BUDGET,
        }
    }

    /// diag_max^n * (2*off_max + 1)^(n(n-1)/2), saturating.
    pub fn search_space(&self) -> u128 {
        let pairs = self.n * (self.n - 1) / 2;
        let mut space: u128 = 1;
        for _ in 0..self.n {
            space = space.saturating_mul(self.diag_max as u128);
        }
        for _ in 0..pairs {
            space = space.saturating_mul(2 * self.off_max as u128 + 1);
        }
        space
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.dedupe == Dedupe::PermutationCanonical && self.n > 6 {
            return Err(Error::DedupeUnsupported { n: self.n });
        }
        let nodes = self.search_space();
        if nodes > u128::from(self.budget) {
            return Err(Error::BudgetExceeded { nodes, budget: self.budget });
        }
        Ok(())
    }
}

/// All permutations of 0..n in a deterministic order.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    // Iterative Heap's algorithm.
    let mut counters = alloc::vec![0usize; n];
    out.push(current.clone());
    let mut i = 0;
    while i < n {
        if counters[i] < i {
            if i % 2 == 0 {
                current.swap(0, i);
            } else {
                current.swap(counters[i], i);
            }
            out.push(current.clone());
            counters[i] += 1;
            i = 0;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    out
}

/// Least matrix in the simultaneous row/column permutation orbit, by
/// row-major entry tuple. Refused above order 6, where the orbit walk stops
/// being a desk-scale object.
pub fn canonical_representative(m: &IntMatrix) -> Result<IntMatrix, Error> {
    let n = m.n();
    if n > 6 {
        return Err(Error::DedupeUnsupported { n });
    }
    let mut best: Option<Vec<BigInt>> = None;
    for perm in permutations(n) {
        let mut tuple = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                tuple.push(m.get(perm[i], perm[j]).clone());
            }
        }
        if best.as_ref().is_none_or(|b| tuple < *b) {
            best = Some(tuple);
        }
    }
    let tuple = best.expect("orbit is nonempty");
    Ok(IntMatrix::from_fn(n, |i, j| tuple[i * n + j].clone()))
}

/// Deterministic stream over one enumeration box, optionally restricted to
/// a window of the raw index space so workers can split the walk.
pub struct ClassEnumerator {
    spec: EnumSpec,
    cursor: u128,
    end: u128,
    perms: Vec<Vec<usize>>,
}

impl ClassEnumerator {
    /// Mixed-radix decode: diagonal digits first (most significant), then
    /// upper off-diagonal digits in row-major pair order.
    fn decode(&self, index: u128) -> (Vec<i64>, Vec<i64>) {
        let n = self.spec.n;
        let pairs = n * (n - 1) / 2;
        let off_base = 2 * self.spec.off_max as u128 + 1;
        let mut rem = index;
        let mut off = alloc::vec![0i64; pairs];
        for slot in (0..pairs).rev() {
            off[slot] = (rem % off_base) as i64 - self.spec.off_max;
            rem /= off_base;
        }
        let mut diag = alloc::vec![0i64; n];
        for slot in (0..n).rev() {
            diag[slot] = (rem % self.spec.diag_max as u128) as i64 + 1;
            rem /= self.spec.diag_max as u128;
        }
        (diag, off)
    }

    fn passes(&self, diag: &[i64], off: &[i64]) -> Option<IntMatrix> {
        let n = self.spec.n;
        // Principal 2x2 submatrix necessary condition: off^2 < d_i * d_j.
        let mut slot = 0;
        for i in 0..n {
            for j in i + 1..n {
                if off[slot] * off[slot] >= diag[i] * diag[j] {
                    return None;
                }
                slot += 1;
            }
        }
        let entry = |i: usize, j: usize| -> i64 {
            if i == j {
                diag[i]
            } else {
                let (lo, hi) = if i < j { (i, j) } else { (j, i) };
                off[lo * n - lo * (lo + 1) / 2 + (hi - lo - 1)]
            }
        };
        if self.spec.dedupe == Dedupe::PermutationCanonical {
            for perm in &self.perms[1..] {
                let mut ordering = core::cmp::Ordering::Equal;
                'compare: for i in 0..n {
                    for j in 0..n {
                        ordering = entry(perm[i], perm[j]).cmp(&entry(i, j));
                        if ordering != core::cmp::Ordering::Equal {
                            break 'compare;
                        }
                    }
                }
                if ordering == core::cmp::Ordering::Less {
                    return None;
                }
            }
        }
        if self.spec.require_connected && !connected(n, &entry) {
            return None;
        }
        let matrix = IntMatrix::from_fn(n, |i, j| BigInt::from(entry(i, j)));
        if self.spec.require_pd {
            let pd = is_positive_definite(&AnyMatrix::Int(matrix.clone()))
                .expect("integer verdicts never fail");
            if !pd {
                return None;
            }
        }
        Some(matrix)
    }
}

fn connected(n: usize, entry: &impl Fn(usize, usize) -> i64) -> bool {
    let mut seen = alloc::vec![false; n];
    let mut stack = alloc::vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if w != v && !seen[w] && entry(v, w) != 0 {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == n
}

impl Iterator for ClassEnumerator {
    type Item = IntMatrix;

    fn next(&mut self) -> Option<IntMatrix> {
        while self.cursor < self.end {
            let (diag, off) = self.decode(self.cursor);
            self.cursor += 1;
            if let Some(matrix) = self.passes(&diag, &off) {
                return Some(matrix);
            }
        }
        None
    }
}

/// Streams the symmetric integer matrices of the box that survive the
/// spec's filters, in a fixed deterministic order.
pub fn enumerate_class(spec: &EnumSpec) -> Result<ClassEnumerator, Error> {
    let space = spec.search_space();
    enumerate_class_range(spec, 0, space)
}

/// Restriction of the stream to raw indices in [start, end); concatenating
/// adjacent windows reproduces the full stream exactly.
pub fn enumerate_class_range(
    spec: &EnumSpec,
    start: u128,
    end: u128,
) -> Result<ClassEnumerator, Error> {
    spec.validate()?;
    let space = spec.search_space();
    Ok(ClassEnumerator {
        spec: spec.clone(),
        cursor: start,
        end: end.min(space),
        perms: permutations(spec.n),
    })
}

/// A minimizing matrix with both of its first two trace measures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremum {
    pub trace: BigInt,
    pub trace2: BigInt,
    pub matrix: IntMatrix,
}

/// One matrix whose iterated trace fell below the class bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub matrix: IntMatrix,
    pub k: u32,
    pub trace: BigInt,
    pub bound: BigInt,
}

/// Outcome of a bound-verification campaign over one enumeration box.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignReport {
    pub spec: EnumSpec,
    pub k_max: u32,
    pub count: u64,
    /// Least trace; ties broken by second trace, then entry tuple, so the
    /// minimizer does not depend on how the walk was split across workers.
    pub min_trace: Option<Extremum>,
    /// Least second trace; ties broken by trace, then entry tuple.
    pub min_trace2: Option<Extremum>,
    pub violations: Vec<Violation>,
    /// Distinct (trace/n, trace2/n) pairs over the enumerated class.
    pub spectrum: Vec<(Rational, Rational)>,
}

fn second_trace(m: &IntMatrix) -> BigInt {
    let mut sum = BigInt::ZERO;
    for i in 0..m.n() {
        for j in 0..m.n() {
            sum += m.get(i, j) * m.get(j, i);
        }
    }
    sum
}

fn entry_key(m: &IntMatrix) -> &[BigInt] {
    m.entries()
}

fn better_by_trace(candidate: &Extremum, best: &Extremum) -> bool {
    (&candidate.trace, &candidate.trace2, entry_key(&candidate.matrix))
        < (&best.trace, &best.trace2, entry_key(&best.matrix))
}

fn better_by_trace2(candidate: &Extremum, best: &Extremum) -> bool {
    (&candidate.trace2, &candidate.trace, entry_key(&candidate.matrix))
        < (&best.trace2, &best.trace, entry_key(&best.matrix))
}

/// Enumerates the box and checks every matrix against the class bounds
/// Tr >= 2n - 1 and Tr_{2^k} >= B(n, k) for k <= k_max, recording minima,
/// violations, and the exact spectrum of (trace/n, trace2/n) pairs.
pub fn verify_campaign(spec: &EnumSpec, k_max: u32) -> Result<CampaignReport, Error> {
    verify_campaign_range(spec, k_max, 0, spec.search_space())
}

/// Campaign over one worker window of the raw index space; reports from
/// adjacent windows merge into exactly the full-range report.
pub fn verify_campaign_range(
    spec: &EnumSpec,
    k_max: u32,
    start: u128,
    end: u128,
) -> Result<CampaignReport, Error> {
    let n = spec.n;
    let mut bounds = Vec::with_capacity(k_max as usize);
    for k in 1..=k_max {
        bounds.push((k, lower_bound_B(n, k)?));
    }
    let mut count = 0u64;
    let mut min_trace: Option<Extremum> = None;
    let mut min_trace2: Option<Extremum> = None;
    let mut violations = Vec::new();
    let mut spectrum = BTreeSet::new();
    for matrix in enumerate_class_range(spec, start, end)? {
        count += 1;
        let trace = matrix.trace();
        let trace2 = second_trace(&matrix);
        spectrum.insert((
            Rational::new(trace.clone(), BigInt::from(n)),
            Rational::new(trace2.clone(), BigInt::from(n)),
        ));
        let mut power = matrix.clone();
        for &(k, ref bound) in &bounds {
            power = power.mul(&power);
            let trace_k = power.trace();
            if &trace_k < bound {
                violations.push(Violation {
                    matrix: matrix.clone(),
                    k,
                    trace: trace_k,
                    bound: bound.clone(),
                });
            }
        }
        let candidate = Extremum { trace, trace2, matrix };
        if min_trace.as_ref().is_none_or(|best| better_by_trace(&candidate, best)) {
            min_trace = Some(candidate.clone());
        }
        if min_trace2.as_ref().is_none_or(|best| better_by_trace2(&candidate, best)) {
            min_trace2 = Some(candidate);
        }
    }
    Ok(CampaignReport {
        spec: spec.clone(),
        k_max,
        count,
        min_trace,
        min_trace2,
        violations,
        spectrum: spectrum.into_iter().collect(),
    })
}

/// Folds two window reports of the same campaign into one. Associative and
/// commutative, so the merged result is independent of worker count.
pub fn merge_reports(a: CampaignReport, b: CampaignReport) -> CampaignReport {
    assert_eq!(a.spec, b.spec, "reports describe different campaigns");
    assert_eq!(a.k_max, b.k_max, "reports describe different campaigns");
    let min_trace = match (a.min_trace, b.min_trace) {
        (Some(x), Some(y)) => Some(if better_by_trace(&y, &x) { y } else { x }),
        (x, y) => x.or(y),
    };
    let min_trace2 = match (a.min_trace2, b.min_trace2) {
        (Some(x), Some(y)) => Some(if better_by_trace2(&y, &x) { y } else { x }),
        (x, y) => x.or(y),
    };
    let mut violations = a.violations;
    violations.extend(b.violations);
    violations.sort_by(|x, y| {
        (x.k, entry_key(&x.matrix)).cmp(&(y.k, entry_key(&y.matrix)))
    });
    let mut spectrum: BTreeSet<(Rational, Rational)> = a.spectrum.into_iter().collect();
    spectrum.extend(b.spectrum);
    CampaignReport {
        spec: a.spec,
        k_max: a.k_max,
        count: a.count + b.count,
        min_trace,
        min_trace2,
        violations,
        spectrum: spectrum.into_iter().collect(),
    }
}

/// Distinct values of the absolute trace measure (k = 1) or absolute second
/// trace measure (k = 2) over the box, with how many matrices attain each.
pub fn spectrum_scan(spec: &EnumSpec, k: u32) -> Result<Vec<(Rational, u64)>, Error> {
    if !(k == 1 || k == 2) {
        return Err(Error::UnsupportedExponent { k });
    }
    let n = spec.n;
    let mut points: BTreeMap<Rational, u64> = BTreeMap::new();
    for matrix in enumerate_class(spec)? {
        let value = if k == 1 { matrix.trace() } else { second_trace(&matrix) };
        let point = Rational::new(value, BigInt::from(n));
        *points.entry(point).or_insert(0) += 1;
    }
    Ok(points.into_iter().collect())
}

fn rational_cell(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// CSV document for a density run: one row per order, exact rationals as
/// "num/den", kappa column filled for the second-trace family only.
pub fn density_report(
    r: &Rational,
    kind: MeasureKind,
    n_list: &[usize],
) -> Result<String, Error> {
    let mut out = String::from("n,abs_measure,gap,kappa\n");
    for point in density_sequence(r, kind, n_list)? {
        out.push_str(&format!(
            "{},{},{},{}\n",
            point.n,
            rational_cell(&point.abs_measure),
            rational_cell(&point.gap),
            point.kappa.map(|k| format!("{k}")).unwrap_or_default(),
        ));
    }
    Ok(out)
}

struct Rng(u64);

impl Rng {
    // splitmix64: tiny, deterministic, and good enough for test corpora.
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next() % bound
    }

    fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// Deterministic corpus of random symmetric integer matrices with orders in
/// [1, max_order] and entries in [-entry_bound, entry_bound].
pub fn symmetric_examples(
    count: usize,
    max_order: usize,
    entry_bound: i64,
    seed: u64,
) -> Vec<IntMatrix> {
    let mut rng = Rng(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = 1 + rng.below(max_order as u64) as usize;
        let mut rows = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let value = rng.int_in(-entry_bound, entry_bound);
                rows[i][j] = value;
                rows[j][i] = value;
            }
        }
        out.push(IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j])));
    }
    out
}

/// Deterministic corpus of integer matrices that symmetrize: entries
/// a_ij = g_ij * v_j with g symmetric and v positive, which is a symmetric
/// matrix conjugated by the diagonal scaling sqrt(v) that happens to stay
/// integer. Cross products a_ij * a_ji = g^2 v_i v_j are balanced around
/// every cycle by construction.
pub fn symmetrizable_examples(count: usize, seed: u64) -> Vec<IntMatrix> {
    const SCALES: [i64; 4] = [1, 2, 3, 5];
    let mut rng = Rng(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let n = 2 + rng.below(4) as usize;
        let mut v = alloc::vec![0i64; n];
        for slot in v.iter_mut() {
            *slot = SCALES[rng.below(SCALES.len() as u64) as usize];
        }
        let mut g = alloc::vec![alloc::vec![0i64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let value = rng.int_in(-2, 2);
                g[i][j] = value;
                g[j][i] = value;
            }
        }
        let mut diag = alloc::vec![0i64; n];
        for slot in diag.iter_mut() {
            *slot = rng.int_in(0, 5);
        }
        out.push(IntMatrix::from_fn(n, |i, j| {
            BigInt::from(if i == j { diag[i] } else { g[i][j] * v[j] })
        }));
    }
    out
}
