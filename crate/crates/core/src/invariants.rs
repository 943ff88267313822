//! Induced-subgraph invariants of switch-isomorphism classes.
//!
//! `sub_family(G, P)` is the family of vertex sets `Z` with `G↾Z ∼ P`, and
//! `count_sub` its size; both are invariant under `∼` up to relabeling.
//! The closed forms below count these for paths, cycles and their unions
//! against the complete and edgeless patterns.

use std::fmt;
use std::sync::OnceLock;

use crate::canonical::{switch_iso_key, ClassKey};
use crate::error::{GraphError, Result};
use crate::graph::{pair_count, Graph, VertexSet, MAX_VERTICES};
use crate::names::parse_expr;

/// A pattern for induced-subgraph counting: a whole `∼`-class on `k` vertices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PatternClass {
    key: ClassKey,
    name: Option<String>,
}

impl PatternClass {
    pub fn from_graph(g: &Graph) -> Result<Self> {
        Ok(PatternClass {
            key: switch_iso_key(g)?,
            name: None,
        })
    }

    /// Pattern given by a graph expression, named after it (`K3`, `L4`, ...).
    pub fn named(expr: &str) -> Result<Self> {
        Ok(Self::from_graph(&parse_expr(expr)?)?.with_name(expr))
    }

    pub fn complete(m: usize) -> Result<Self> {
        Ok(Self::from_graph(&Graph::complete(m)?)?.with_name(format!("K{m}")))
    }

    pub fn empty(m: usize) -> Result<Self> {
        Ok(Self::from_graph(&Graph::empty(m)?)?.with_name(format!("N{m}")))
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn k(&self) -> usize {
        self.key.n()
    }

    pub fn key(&self) -> ClassKey {
        self.key
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// The class of the complements of the members of this class.
    pub fn complement(&self) -> Result<Self> {
        let mut p = Self::from_graph(&self.key.graph().complement())?;
        p.name = self.name.as_ref().map(|n| format!("co({n})"));
        Ok(p)
    }
}

impl fmt::Debug for PatternClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => write!(f, "PatternClass({name})"),
            None => write!(f, "PatternClass({:?})", self.key),
        }
    }
}

/// Largest order whose keys are tabulated.
const CACHED_ORDER: usize = 4;

fn small_keys() -> &'static [Vec<ClassKey>] {
    static TABLE: OnceLock<Vec<Vec<ClassKey>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        (0..=CACHED_ORDER)
            .map(|k| {
                if k == 0 {
                    return Vec::new();
                }
                (0..1u128 << pair_count(k))
                    .map(|bits| switch_iso_key(&Graph::from_bits_unchecked(k, bits)).unwrap())
                    .collect()
            })
            .collect()
    })
}

fn small_key(g: &Graph) -> Result<ClassKey> {
    match g.n() {
        k @ 1..=CACHED_ORDER => Ok(small_keys()[k][g.bits() as usize]),
        _ => switch_iso_key(g),
    }
}

/// The `k`-subsets `Z` with `g↾Z` in the pattern class, by increasing mask.
/// `k = n` is allowed and yields either the whole vertex set or nothing.
pub fn sub_family(g: &Graph, pattern: &PatternClass) -> Result<Vec<VertexSet>> {
    let (n, k) = (g.n(), pattern.k());
    if k > n {
        return Err(GraphError::PatternTooLarge { k, n });
    }
    let mut family = Vec::new();
    for z in VertexSet::subsets_of_size(n, k) {
        if small_key(&g.induced(z)?)? == pattern.key {
            family.push(z);
        }
    }
    Ok(family)
}

/// `#(G; P)`, the size of [`sub_family`].
pub fn count_sub(g: &Graph, pattern: &PatternClass) -> Result<usize> {
    Ok(sub_family(g, pattern)?.len())
}

/// Intersection of every member of a nonempty family.
pub fn common_core(family: &[VertexSet]) -> Result<VertexSet> {
    let (first, rest) = family.split_first().ok_or(GraphError::EmptyFamily)?;
    Ok(rest.iter().fold(*first, |acc, z| acc.intersection(*z)))
}

/// `C(a, b)` with the convention that it vanishes when `b < 0` or `a < b`.
pub fn binomial(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

/// The two pattern families with closed-form counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedPattern {
    /// The class of `K_m`.
    Complete(usize),
    /// The class of `N_m`.
    Empty(usize),
}

impl ClosedPattern {
    pub fn order(self) -> usize {
        match self {
            ClosedPattern::Complete(m) | ClosedPattern::Empty(m) => m,
        }
    }

    pub fn to_pattern(self) -> Result<PatternClass> {
        match self {
            ClosedPattern::Complete(m) => PatternClass::complete(m),
            ClosedPattern::Empty(m) => PatternClass::empty(m),
        }
    }
}

impl fmt::Display for ClosedPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosedPattern::Complete(m) => write!(f, "K{m}"),
            ClosedPattern::Empty(m) => write!(f, "N{m}"),
        }
    }
}

fn nonneg(v: i64) -> u64 {
    debug_assert!(v >= 0, "closed form went negative: {v}");
    v.max(0) as u64
}

/// `#(L_n; K_m)` or `#(L_n; N_m)` in closed form.
///
/// For `N_m` the general binomial is used only from `m = 4` on; at `m = 3`
/// the class of `N_3` also holds the 2-edge path, which adds `n - 2`.
pub fn formula_path(n: usize, pattern: ClosedPattern) -> Result<u64> {
    let m = pattern.order();
    if n < 2 || m < 3 {
        return Err(GraphError::FormulaDomain(format!(
            "path formulas need n >= 2 and m >= 3, got n = {n}, m = {m}"
        )));
    }
    let (n, mi) = (n as i64, m as i64);
    Ok(nonneg(match pattern {
        ClosedPattern::Complete(3) => (n - 2) * (n - 3),
        ClosedPattern::Complete(4) => binomial(n - 3, 2),
        ClosedPattern::Complete(_) => 0,
        ClosedPattern::Empty(3) => (n - 2) + binomial(n - 2, 3),
        ClosedPattern::Empty(_) => binomial(n - mi + 1, mi),
    }))
}

/// `#(C_n; K_m)` or `#(C_n; N_m)` in closed form, for `n > 3`.
pub fn formula_cycle(n: usize, pattern: ClosedPattern) -> Result<u64> {
    let m = pattern.order();
    if n <= 3 || m < 3 {
        return Err(GraphError::FormulaDomain(format!(
            "cycle formulas need n > 3 and m >= 3, got n = {n}, m = {m}"
        )));
    }
    let (n, mi) = (n as i64, m as i64);
    Ok(nonneg(match pattern {
        ClosedPattern::Complete(3) => n * (n - 4),
        ClosedPattern::Complete(4) if n >= 5 => n * (n - 5) / 2,
        ClosedPattern::Complete(_) => 0,
        ClosedPattern::Empty(3) => n + n * (n - 4) * (n - 5) / 6,
        ClosedPattern::Empty(_) => n * binomial(n - mi - 1, mi - 1) / mi,
    }))
}

/// Disjoint union of paths and cycles padded with isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionShape {
    paths: Vec<usize>,
    cycles: Vec<usize>,
    total: usize,
}

impl UnionShape {
    pub fn new(paths: Vec<usize>, cycles: Vec<usize>, total: usize) -> Result<Self> {
        if let Some(p) = paths.iter().find(|&&p| p < 2) {
            return Err(GraphError::InvalidShape(format!("path of order {p} < 2")));
        }
        if let Some(c) = cycles.iter().find(|&&c| c < 3) {
            return Err(GraphError::InvalidShape(format!("cycle of order {c} < 3")));
        }
        let used: usize = paths.iter().chain(&cycles).sum();
        if used > total {
            return Err(GraphError::InvalidShape(format!(
                "components use {used} vertices but the total is {total}"
            )));
        }
        if total > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(total));
        }
        Ok(UnionShape {
            paths,
            cycles,
            total,
        })
    }

    pub fn paths(&self) -> &[usize] {
        &self.paths
    }

    pub fn cycles(&self) -> &[usize] {
        &self.cycles
    }

    pub fn total(&self) -> usize {
        self.total
    }

    /// Paths first, then cycles, then the isolated padding.
    pub fn realize(&self) -> Result<Graph> {
        let mut g = Graph::empty(0)?;
        for &p in &self.paths {
            g = g.disjoint_union(&Graph::path(p)?)?;
        }
        for &c in &self.cycles {
            g = g.disjoint_union(&Graph::cycle(c)?)?;
        }
        g.pad_to(self.total)
    }

    fn require_long_cycles(&self) -> Result<()> {
        match self.cycles.iter().find(|&&c| c <= 3) {
            Some(c) => Err(GraphError::InvalidShape(format!(
                "union formulas need cycles longer than 3, got {c}"
            ))),
            None => Ok(()),
        }
    }
}

/// `#(shape; K_3)`: one-edge triples, inside a component or an edge plus a
/// vertex elsewhere.
pub fn formula_union_k3(shape: &UnionShape) -> Result<u64> {
    shape.require_long_cycles()?;
    let n = shape.total as i64;
    let paths: i64 = shape
        .paths
        .iter()
        .map(|&p| {
            let p = p as i64;
            (p - 2) * (p - 3) + (p - 1) * (n - p)
        })
        .sum();
    let cycles: i64 = shape
        .cycles
        .iter()
        .map(|&l| {
            let l = l as i64;
            l * (l - 4) + l * (n - l)
        })
        .sum();
    Ok(nonneg(paths + cycles))
}

/// `#(shape; K_4)`: induced pairs of independent edges, within a component
/// or across two.
///
/// A 4-cycle contributes nothing on its own, the same as [`formula_cycle`].
pub fn formula_union_k4(shape: &UnionShape) -> Result<u64> {
    shape.require_long_cycles()?;
    let path_edges: Vec<i64> = shape.paths.iter().map(|&p| p as i64 - 1).collect();
    let cycle_edges: Vec<i64> = shape.cycles.iter().map(|&l| l as i64).collect();

    let mut total: i64 = shape.paths.iter().map(|&p| binomial(p as i64 - 3, 2)).sum();
    for &l in &shape.cycles {
        total += formula_cycle(l, ClosedPattern::Complete(4))? as i64;
    }
    total += pairwise_products(&path_edges);
    total += pairwise_products(&cycle_edges);
    total += path_edges.iter().sum::<i64>() * cycle_edges.iter().sum::<i64>();
    Ok(nonneg(total))
}

fn pairwise_products(xs: &[i64]) -> i64 {
    xs.iter()
        .enumerate()
        .flat_map(|(i, &a)| xs[i + 1..].iter().map(move |&b| a * b))
        .sum()
}
