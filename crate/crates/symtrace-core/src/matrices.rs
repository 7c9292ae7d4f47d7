//! Matrix types, support graphs, and class-membership predicates.
//!
//! All indices in the public API are 0-based. Witnesses are normalized so a
//! report is deterministic: violating pairs are the lexicographically least,
//! cycles start at their least vertex and run toward the smaller neighbor.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::numerics::{is_perfect_square, RadicalScalar, Rational};

/// Dense square matrix with arbitrary-precision integer entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    /// Builds from rows; every row must have length `rows.len() >= 1`.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 0 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(IntMatrix { n, entries })
    }

    /// Builds an n x n matrix from an entry function. `n` must be >= 1.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    /// Convenience constructor from machine integers, mostly for tests and
    /// small fixtures.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let n = rows.len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n));
        IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j]))
    }

    pub fn identity(n: usize) -> Self {
        IntMatrix::from_fn(n, |i, j| if i == j { BigInt::one() } else { BigInt::ZERO })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn transpose(&self) -> Self {
        IntMatrix::from_fn(self.n, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// First pair (i, j), in row-major order with i < j, where a_ij != a_ji.
    pub fn symmetry_violation(&self) -> Option<(usize, usize)> {
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.get(i, j) != self.get(j, i) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_violation().is_none()
    }

    /// Matrix product; orders must match.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, other.n, "order mismatch in matrix product");
        let n = self.n;
        IntMatrix::from_fn(n, |i, j| {
            let mut acc = BigInt::ZERO;
            for k in 0..n {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    /// k-th power by repeated squaring; `pow(0)` is the identity.
    pub fn pow(&self, k: u64) -> IntMatrix {
        let mut result = IntMatrix::identity(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Embeds a symmetric integer matrix as a radical matrix
    /// (each entry v becomes sign(v) * sqrt(v^2)).
    pub fn to_radical(&self) -> Result<RadicalMatrix, Error> {
        if let Some(witness) = self.symmetry_violation() {
            return Err(Error::NotSymmetric { witness });
        }
        RadicalMatrix::from_fn(self.n, |i, j| RadicalScalar::from_integer(self.get(i, j)))
    }
}

/// Dense square matrix with exact rational entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 0 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row);
        }
        Ok(RatMatrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        assert!(n >= 1, "matrix order must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        RatMatrix { n, entries }
    }

    pub fn from_int(m: &IntMatrix) -> Self {
        RatMatrix::from_fn(m.n(), |i, j| Rational::from(m.get(i, j).clone()))
    }

    pub fn identity(n: usize) -> Self {
        RatMatrix::from_fn(n, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.n + j]
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.n, other.n, "order mismatch in matrix product");
        let n = self.n;
        RatMatrix::from_fn(n, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..n {
                acc += self.get(i, k) * other.get(k, j);
            }
            acc
        })
    }

    pub fn pow(&self, k: u64) -> RatMatrix {
        let mut result = RatMatrix::identity(self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// Symmetric square matrix whose entries are signed square roots.
/// Symmetry is enforced structurally: constructors reject asymmetric input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalMatrix {
    n: usize,
    entries: Vec<RadicalScalar>,
}

impl RadicalMatrix {
    pub fn from_rows(rows: Vec<Vec<RadicalScalar>>) -> Result<Self, Error> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { left: 0, right: 0 });
        }
        let mut entries = Vec::with_capacity(n * n);
        for row in &rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { left: n, right: row.len() });
            }
            entries.extend(row.iter().cloned());
        }
        let m = RadicalMatrix { n, entries };
        for i in 0..n {
            for j in i + 1..n {
                if m.get(i, j) != m.get(j, i) {
                    return Err(Error::NotSymmetric { witness: (i, j) });
                }
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        n: usize,
        mut f: impl FnMut(usize, usize) -> RadicalScalar,
    ) -> Result<Self, Error> {
        assert!(n >= 1, "matrix order must be at least 1");
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push((0..n).map(|j| f(i, j)).collect());
        }
        RadicalMatrix::from_rows(rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &RadicalScalar {
        &self.entries[i * self.n + j]
    }

    /// All entries integer-valued (every radicand a perfect square)?
    pub fn is_integer_valued(&self) -> bool {
        self.entries.iter().all(|e| e.as_integer().is_some())
    }

    /// The integer matrix this radical matrix represents, when every entry is
    /// integer-valued.
    pub fn as_int_matrix(&self) -> Option<IntMatrix> {
        let mut rows = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut row = Vec::with_capacity(self.n);
            for j in 0..self.n {
                row.push(self.get(i, j).as_integer()?);
            }
            rows.push(row);
        }
        Some(IntMatrix { n: self.n, entries: rows.into_iter().flatten().collect() })
    }
}

/// Either matrix class, for operations defined on both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyMatrix {
    Int(IntMatrix),
    Radical(RadicalMatrix),
}

impl AnyMatrix {
    pub fn n(&self) -> usize {
        match self {
            AnyMatrix::Int(m) => m.n(),
            AnyMatrix::Radical(m) => m.n(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            AnyMatrix::Int(m) => m.is_symmetric(),
            AnyMatrix::Radical(_) => true,
        }
    }

    fn entry_is_zero(&self, i: usize, j: usize) -> bool {
        match self {
            AnyMatrix::Int(m) => m.get(i, j).is_zero(),
            AnyMatrix::Radical(m) => m.get(i, j).is_zero(),
        }
    }
}

impl From<IntMatrix> for AnyMatrix {
    fn from(m: IntMatrix) -> Self {
        AnyMatrix::Int(m)
    }
}

impl From<RadicalMatrix> for AnyMatrix {
    fn from(m: RadicalMatrix) -> Self {
        AnyMatrix::Radical(m)
    }
}

/// Support graph of a square matrix: one vertex per index, a directed arc
/// (i, j) for each nonzero off-diagonal entry, and an undirected support edge
/// {i, j} wherever at least one of the two opposite entries is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGraph {
    n: usize,
    directed: Vec<(usize, usize)>,
    support: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

/// BFS spanning forest of a [`MatrixGraph`], rooted at the least vertex of
/// each connected component.
#[derive(Clone, Debug)]
pub struct SpanningForest {
    /// Parent of each vertex in its BFS tree; roots have `None`.
    pub parent: Vec<Option<usize>>,
    /// Depth of each vertex below its root.
    pub depth: Vec<usize>,
    /// Vertices in BFS visit order.
    pub order: Vec<usize>,
    /// Component roots, ascending.
    pub roots: Vec<usize>,
}

impl MatrixGraph {
    fn build(n: usize, mut nonzero: impl FnMut(usize, usize) -> bool) -> Self {
        let mut directed = Vec::new();
        let mut support = Vec::new();
        let mut adjacency = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && nonzero(i, j) {
                    directed.push((i, j));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if nonzero(i, j) || nonzero(j, i) {
                    support.push((i, j));
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        MatrixGraph { n, directed, support, adjacency }
    }

    pub fn of(m: &AnyMatrix) -> Self {
        MatrixGraph::build(m.n(), |i, j| !m.entry_is_zero(i, j))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn directed_edges(&self) -> &[(usize, usize)] {
        &self.directed
    }

    pub fn support_edges(&self) -> &[(usize, usize)] {
        &self.support
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn is_connected(&self) -> bool {
        self.bfs_forest().roots.len() == 1
    }

    /// BFS forest from the least vertex of each component; neighbor visits in
    /// ascending order, so the forest is deterministic.
    pub fn bfs_forest(&self) -> SpanningForest {
        let n = self.n;
        let mut parent = vec![None; n];
        let mut depth = vec![0usize; n];
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut roots = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            roots.push(root);
            seen[root] = true;
            let mut queue = VecDeque::new();
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                order.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        parent[w] = Some(v);
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        SpanningForest { parent, depth, order, roots }
    }
}

/// Support graph of either matrix kind.
pub fn graph_of(m: &AnyMatrix) -> MatrixGraph {
    MatrixGraph::of(m)
}

/// Connectivity of the support graph. Order-1 matrices are connected.
pub fn is_connected(m: &AnyMatrix) -> bool {
    graph_of(m).is_connected()
}

/// Least pair (i, j), i < j, violating sign symmetry: exactly one of the two
/// opposite entries zero, or their product negative. `None` means the matrix
/// is sign-symmetric.
pub fn sign_symmetry_violation(a: &IntMatrix) -> Option<(usize, usize)> {
    let n = a.n();
    for i in 0..n {
        for j in i + 1..n {
            let ij = a.get(i, j);
            let ji = a.get(j, i);
            if ij.is_zero() != ji.is_zero() || (ij * ji).is_negative() {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_sign_symmetric(a: &IntMatrix) -> bool {
    sign_symmetry_violation(a).is_none()
}

/// Rotates and orients a cycle so it starts at its least vertex and runs
/// toward the lexicographically smaller continuation.
fn normalize_cycle(cycle: Vec<usize>) -> Vec<usize> {
    let k = cycle.len();
    let min_pos = (0..k).min_by_key(|&p| cycle[p]).expect("cycle is nonempty");
    let forward: Vec<usize> = (0..k).map(|s| cycle[(min_pos + s) % k]).collect();
    let mut backward = Vec::with_capacity(k);
    backward.push(forward[0]);
    backward.extend(forward[1..].iter().rev().copied());
    if backward < forward {
        backward
    } else {
        forward
    }
}

/// Fundamental cycle of the non-tree edge {u, v}: the tree path from u to v,
/// closed by the edge itself. Vertices are distinct; length >= 3.
fn fundamental_cycle(forest: &SpanningForest, u: usize, v: usize) -> Vec<usize> {
    let mut up_u = Vec::new();
    let mut up_v = Vec::new();
    let (mut x, mut y) = (u, v);
    while forest.depth[x] > forest.depth[y] {
        up_u.push(x);
        x = forest.parent[x].expect("vertex above depth 0 has a parent");
    }
    while forest.depth[y] > forest.depth[x] {
        up_v.push(y);
        y = forest.parent[y].expect("vertex above depth 0 has a parent");
    }
    while x != y {
        up_u.push(x);
        up_v.push(y);
        x = forest.parent[x].expect("distinct branches meet at the root");
        y = forest.parent[y].expect("distinct branches meet at the root");
    }
    // Path u ... lca ... v; closing edge (v, u) is implicit.
    let mut cycle = up_u;
    cycle.push(x);
    cycle.extend(up_v.into_iter().rev());
    cycle
}

/// Walks every fundamental cycle of the support graph, applying `check`.
/// Returns the first (normalized) cycle where `check` is false.
fn first_bad_fundamental_cycle(
    graph: &MatrixGraph,
    mut check: impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let forest = graph.bfs_forest();
    for &(u, v) in graph.support_edges() {
        let is_tree_edge = forest.parent[v] == Some(u) || forest.parent[u] == Some(v);
        if is_tree_edge {
            continue;
        }
        let cycle = fundamental_cycle(&forest, u, v);
        if !check(&cycle) {
            return Some(normalize_cycle(cycle));
        }
    }
    None
}

/// First cycle (normalized) where the forward entry product differs from the
/// backward product, or `None` when every cycle balances.
///
/// Checking the fundamental cycles of a spanning forest suffices: the
/// forward/backward ratio is multiplicative over the cycle space, and
/// fundamental cycles generate it.
///
/// Requires sign symmetry; returns [`Error::NotSignSymmetric`] otherwise.
pub fn cycle_condition_violation(a: &IntMatrix) -> Result<Option<Vec<usize>>, Error> {
    if let Some(witness) = sign_symmetry_violation(a) {
        return Err(Error::NotSignSymmetric { witness });
    }
    let graph = MatrixGraph::of(&AnyMatrix::Int(a.clone()));
    Ok(first_bad_fundamental_cycle(&graph, |cycle| {
        let k = cycle.len();
        let mut forward = BigInt::one();
        let mut backward = BigInt::one();
        for s in 0..k {
            let (x, y) = (cycle[s], cycle[(s + 1) % k]);
            forward *= a.get(x, y);
            backward *= a.get(y, x);
        }
        forward == backward
    }))
}

pub fn satisfies_cycle_condition(a: &IntMatrix) -> Result<bool, Error> {
    Ok(cycle_condition_violation(a)?.is_none())
}

/// First cycle (normalized) whose radicand product is not a perfect square,
/// or `None` when every cycle product is rational.
///
/// As with the integer cycle condition, fundamental cycles suffice: squares
/// form a subgroup, and edges shared by two generating cycles contribute
/// squared factors.
pub fn rational_cycle_condition_violation(t: &RadicalMatrix) -> Option<Vec<usize>> {
    let graph = MatrixGraph::of(&AnyMatrix::Radical(t.clone()));
    first_bad_fundamental_cycle(&graph, |cycle| {
        let k = cycle.len();
        let mut product = BigInt::one();
        for s in 0..k {
            let (x, y) = (cycle[s], cycle[(s + 1) % k]);
            product *= t.get(x, y).radicand();
        }
        is_perfect_square(&product).is_some()
    })
}

pub fn satisfies_rational_cycle_condition(t: &RadicalMatrix) -> bool {
    rational_cycle_condition_violation(t).is_none()
}

/// Three-valued verdict for classification flags.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriState {
    Yes,
    No,
    /// The predicate does not apply to this matrix kind, or the exact
    /// machinery cannot decide it for this input.
    NotApplicable,
}

impl TriState {
    pub fn from_bool(b: bool) -> TriState {
        if b {
            TriState::Yes
        } else {
            TriState::No
        }
    }

    pub fn is_yes(self) -> bool {
        self == TriState::Yes
    }

    /// Strong three-valued conjunction: any No wins, else any NotApplicable.
    pub fn and(self, other: TriState) -> TriState {
        match (self, other) {
            (TriState::No, _) | (_, TriState::No) => TriState::No,
            (TriState::NotApplicable, _) | (_, TriState::NotApplicable) => TriState::NotApplicable,
            _ => TriState::Yes,
        }
    }
}

/// Evidence for a `No` flag in a [`ClassificationReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Violating entry pair (i, j).
    Pair(usize, usize),
    /// Violating vertex cycle.
    Cycle(Vec<usize>),
    /// Diagonal index with a non-square radicand.
    Diagonal(usize),
}

/// Full classification of one matrix against both matrix classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    pub symmetric: TriState,
    pub sign_symmetric: TriState,
    pub cycle_condition: TriState,
    pub rational_cycle_condition: TriState,
    pub connected: TriState,
    pub superdiagonal_nonzero: TriState,
    pub subdiagonal_nonzero: TriState,
    pub positive_definite: TriState,
    pub in_s_n: TriState,
    pub in_t_n: TriState,
    /// First violation encountered, when any flag is No.
    pub witness: Option<Witness>,
}

/// Classifies a matrix: individual predicates plus membership in the integer
/// symmetrizable class (positive definite, sign-symmetric, cycle condition,
/// nonzero super- and sub-diagonal) and the radical symmetric class (positive
/// definite, rational cycle condition, nonzero superdiagonal).
pub fn classify(m: &AnyMatrix) -> ClassificationReport {
    match m {
        AnyMatrix::Int(a) => classify_int(a),
        AnyMatrix::Radical(t) => classify_radical(t),
    }
}

fn superdiagonal_nonzero_int(a: &IntMatrix) -> bool {
    (0..a.n().saturating_sub(1)).all(|i| !a.get(i, i + 1).is_zero())
}

fn subdiagonal_nonzero_int(a: &IntMatrix) -> bool {
    (0..a.n().saturating_sub(1)).all(|i| !a.get(i + 1, i).is_zero())
}

fn classify_int(a: &IntMatrix) -> ClassificationReport {
    let n = a.n();
    let symmetric = TriState::from_bool(a.is_symmetric());
    let mut witness = None;

    let sign_witness = sign_symmetry_violation(a);
    let sign_symmetric = TriState::from_bool(sign_witness.is_none());
    if let Some((i, j)) = sign_witness {
        witness = Some(Witness::Pair(i, j));
    }

    // The cycle condition is only defined on sign-symmetric matrices.
    let cycle_condition = if sign_symmetric.is_yes() {
        match cycle_condition_violation(a).expect("sign symmetry was just verified") {
            None => TriState::Yes,
            Some(cycle) => {
                if witness.is_none() {
                    witness = Some(Witness::Cycle(cycle));
                }
                TriState::No
            }
        }
    } else {
        TriState::NotApplicable
    };

    let any = AnyMatrix::Int(a.clone());
    let connected = TriState::from_bool(is_connected(&any));
    let superdiagonal_nonzero = TriState::from_bool(superdiagonal_nonzero_int(a));
    let subdiagonal_nonzero = TriState::from_bool(subdiagonal_nonzero_int(a));

    let positive_definite = TriState::from_bool(
        crate::spectra::is_positive_definite(&any).expect("integer matrices never fail the check"),
    );

    let in_s_n = sign_symmetric
        .and(cycle_condition)
        .and(positive_definite)
        .and(superdiagonal_nonzero)
        .and(subdiagonal_nonzero);
    // A symmetric integer matrix embeds into the radical class; its cycle
    // products are integers, so the rational cycle condition is automatic.
    let in_t_n = symmetric.and(positive_definite).and(superdiagonal_nonzero);

    ClassificationReport {
        n,
        symmetric,
        sign_symmetric,
        cycle_condition,
        // Reserved for radical matrices; integer matrices satisfy it trivially.
        rational_cycle_condition: TriState::NotApplicable,
        connected,
        superdiagonal_nonzero,
        subdiagonal_nonzero,
        positive_definite,
        in_s_n,
        in_t_n,
        witness,
    }
}

fn classify_radical(t: &RadicalMatrix) -> ClassificationReport {
    let n = t.n();
    let mut witness = None;

    let rcc_witness = rational_cycle_condition_violation(t);
    let rational_cycle_condition = TriState::from_bool(rcc_witness.is_none());
    if let Some(cycle) = rcc_witness {
        witness = Some(Witness::Cycle(cycle));
    }

    let any = AnyMatrix::Radical(t.clone());
    let connected = TriState::from_bool(is_connected(&any));
    let superdiagonal_nonzero =
        TriState::from_bool((0..n.saturating_sub(1)).all(|i| !t.get(i, i + 1).is_zero()));

    // Decidable only through a rational similar form; otherwise the exact
    // machinery must decline rather than approximate.
    let positive_definite = match crate::spectra::is_positive_definite(&any) {
        Ok(verdict) => TriState::from_bool(verdict),
        Err(Error::IrrationalDiagonal { index }) => {
            if witness.is_none() {
                witness = Some(Witness::Diagonal(index));
            }
            TriState::NotApplicable
        }
        Err(_) => TriState::NotApplicable,
    };

    // Membership in the integer symmetrizable class requires integer entries.
    let in_s_n = if t.is_integer_valued() {
        positive_definite.and(superdiagonal_nonzero)
    } else {
        TriState::No
    };
    let in_t_n = rational_cycle_condition.and(positive_definite).and(superdiagonal_nonzero);

    ClassificationReport {
        n,
        symmetric: TriState::Yes,
        sign_symmetric: TriState::Yes,
        // Reserved for integer matrices; symmetric matrices balance trivially.
        cycle_condition: TriState::NotApplicable,
        rational_cycle_condition,
        connected,
        superdiagonal_nonzero,
        subdiagonal_nonzero: superdiagonal_nonzero,
        positive_definite,
        in_s_n,
        in_t_n,
        witness,
    }
}
