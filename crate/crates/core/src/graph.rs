//! Simple graphs on at most 16 vertices stored as an edge bit set.
//!
//! The pair `(i, j)` with `i < j` lives at bit `j(j-1)/2 + i` (colex order).
//! This is the same order in which graph6 lists the upper triangle, so a
//! graph's bit set can be streamed straight into that format.

use std::fmt;

use crate::error::{GraphError, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 16;

/// Bit position of the unordered pair `{i, j}`.
#[inline]
pub const fn pair_index(i: usize, j: usize) -> usize {
    let (lo, hi) = if i < j { (i, j) } else { (j, i) };
    hi * (hi - 1) / 2 + lo
}

/// Number of unordered pairs on `n` vertices.
#[inline]
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

#[inline]
const fn low_mask(bits: usize) -> u128 {
    if bits >= 128 {
        u128::MAX
    } else {
        (1u128 << bits) - 1
    }
}

const STARS: [u128; MAX_VERTICES] = {
    let mut stars = [0u128; MAX_VERTICES];
    let mut v = 0;
    while v < MAX_VERTICES {
        let mut u = 0;
        while u < MAX_VERTICES {
            if u != v {
                stars[v] |= 1 << pair_index(u, v);
            }
            u += 1;
        }
        v += 1;
    }
    stars
};

/// Bits of every pair `{v, u}` with `u < n`.
#[inline]
pub(crate) fn star_bits(v: usize, n: usize) -> u128 {
    STARS[v] & low_mask(pair_count(n))
}

/// Bits of the edges of the complete bipartite graph between `side` and
/// its complement in `{0, .., n-1}`.
#[inline]
pub(crate) fn cut_bits(side: VertexSet, n: usize) -> u128 {
    side.iter().fold(0, |acc, v| acc ^ star_bits(v, n))
}

/// A set of vertices as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u16);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u16) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u16 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub const fn full(n: usize) -> Self {
        VertexSet(if n >= 16 { u16::MAX } else { (1u16 << n) - 1 })
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 16 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// `X \ self` where `X = {0, .., n-1}`.
    pub fn complement_in(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    /// Largest element plus one, or 0 for the empty set.
    pub fn bound(self) -> usize {
        16 - self.0.leading_zeros() as usize
    }

    /// Errors when some member is `>= n`.
    pub fn check_within(self, n: usize) -> Result<()> {
        if self.is_subset(Self::full(n)) {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: self.bound() - 1,
                n,
            })
        }
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// All subsets of `{0, .., n-1}` in increasing mask order.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
        (0..1u32 << n).map(|b| VertexSet(b as u16))
    }

    /// All `k`-subsets of `{0, .., n-1}` in increasing mask order.
    pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
        Self::all_subsets(n).filter(move |s| s.len() == k)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u16);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A simple undirected graph on the vertex set `{0, .., n-1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: u8,
    edges: u128,
}

impl Graph {
    /// Builds a graph from an edge list; repeated pairs collapse.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.edges |= 1 << pair_index(u, v);
        }
        Ok(g)
    }

    /// Wraps a raw edge bit set, rejecting bits beyond the `C(n,2)` pairs.
    pub fn from_bits(n: usize, edges: u128) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        if edges & !low_mask(pair_count(n)) != 0 {
            let bit = 127 - edges.leading_zeros() as usize;
            let mut hi = 1;
            while pair_count(hi + 1) <= bit {
                hi += 1;
            }
            return Err(GraphError::VertexOutOfRange { vertex: hi, n });
        }
        Ok(Graph { n: n as u8, edges })
    }

    pub(crate) fn from_bits_unchecked(n: usize, edges: u128) -> Self {
        debug_assert!(n <= MAX_VERTICES && edges & !low_mask(pair_count(n)) == 0);
        Graph { n: n as u8, edges }
    }

    pub fn empty(n: usize) -> Result<Self> {
        Self::from_bits(n, 0)
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph {
            n: n as u8,
            edges: low_mask(pair_count(n)),
        })
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self> {
        Self::new(n, (1..n).map(|v| (v - 1, v)))
    }

    /// The path plus the closing edge `(0, n-1)`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(GraphError::CycleTooShort(n));
        }
        let mut g = Self::path(n)?;
        g.edges |= 1 << pair_index(0, n - 1);
        Ok(g)
    }

    /// Complete bipartite graph between `side` and its complement.
    pub fn complete_bipartite(n: usize, side: VertexSet) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        side.check_within(n)?;
        Ok(Graph {
            n: n as u8,
            edges: cut_bits(side, n),
        })
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.edges
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn edge_count(&self) -> usize {
        self.edges.count_ones() as usize
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n() && v < self.n() && self.edges >> pair_index(u, v) & 1 == 1
    }

    /// Edges as `(i, j)` with `i < j`, in bit order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n();
        (1..n)
            .flat_map(move |j| (0..j).map(move |i| (i, j)))
            .filter(move |&(i, j)| self.edges >> pair_index(i, j) & 1 == 1)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        if v >= self.n() {
            return VertexSet::EMPTY;
        }
        (0..self.n()).filter(|&u| self.has_edge(u, v)).collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Bitwise exclusive-or of the edge sets.
    pub fn symmetric_difference(&self, other: &Graph) -> Result<Graph> {
        self.same_order(other)?;
        Ok(Graph {
            n: self.n,
            edges: self.edges ^ other.edges,
        })
    }

    pub fn intersection(&self, other: &Graph) -> Result<Graph> {
        self.same_order(other)?;
        Ok(Graph {
            n: self.n,
            edges: self.edges & other.edges,
        })
    }

    /// Places `other` after `self`, shifting its labels up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n();
        let n = shift + other.n();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut edges = self.edges;
        for (i, j) in other.edges() {
            edges |= 1 << pair_index(i + shift, j + shift);
        }
        Ok(Graph { n: n as u8, edges })
    }

    /// Pads with isolated vertices up to `n` vertices.
    pub fn pad_to(&self, n: usize) -> Result<Graph> {
        if n < self.n() {
            return Err(GraphError::SizeMismatch {
                left: self.n(),
                right: n,
            });
        }
        self.disjoint_union(&Graph::empty(n - self.n())?)
    }

    pub fn complement(&self) -> Graph {
        Graph {
            n: self.n,
            edges: !self.edges & low_mask(pair_count(self.n())),
        }
    }

    /// Subgraph induced on `subset`, relabelled by increasing original index.
    pub fn induced(&self, subset: VertexSet) -> Result<Graph> {
        subset.check_within(self.n())?;
        let verts: Vec<usize> = subset.iter().collect();
        let mut edges = 0u128;
        for (b, &v) in verts.iter().enumerate().skip(1) {
            for (a, &u) in verts[..b].iter().enumerate() {
                if self.edges >> pair_index(u, v) & 1 == 1 {
                    edges |= 1 << pair_index(a, b);
                }
            }
        }
        Ok(Graph {
            n: verts.len() as u8,
            edges,
        })
    }

    /// Image under the vertex map `v -> images[v]`.
    ///
    /// `images` must be a permutation of `0..n`; this is not checked here.
    pub fn relabel(&self, images: &[u8]) -> Graph {
        let mut edges = 0u128;
        for (i, j) in self.edges() {
            edges |= 1 << pair_index(images[i] as usize, images[j] as usize);
        }
        Graph { n: self.n, edges }
    }

    fn same_order(&self, other: &Graph) -> Result<()> {
        if self.n == other.n {
            Ok(())
        } else {
            Err(GraphError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (k, (i, j)) in self.edges().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{i}-{j}")?;
        }
        f.write_str("])")
    }
}
