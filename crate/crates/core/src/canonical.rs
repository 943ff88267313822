//! Isomorphism classes and switch-isomorphism classes as comparable keys.
//!
//! A canonical form is the numerically smallest edge bit set over all
//! relabelings. The switch-isomorphism key is the smallest canonical form
//! over a whole switching class.

use std::fmt;

use crate::error::{GraphError, Result};
use crate::graph::{pair_index, Graph, VertexSet, MAX_VERTICES};
use crate::switching::isolate;

/// Default largest order accepted by the permutation searches.
pub const DEFAULT_CANON_BOUND: usize = 8;
/// Hard ceiling for a configured bound.
pub const MAX_CANON_BOUND: usize = 10;

const PAIR: [[u8; MAX_VERTICES]; MAX_VERTICES] = {
    let mut t = [[0u8; MAX_VERTICES]; MAX_VERTICES];
    let mut i = 0;
    while i < MAX_VERTICES {
        let mut j = 0;
        while j < MAX_VERTICES {
            if i != j {
                t[i][j] = pair_index(i, j) as u8;
            }
            j += 1;
        }
        i += 1;
    }
    t
};

/// A bijection of `{0, .., n-1}`, `v -> images[v]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Rejects anything that is not a bijection.
    pub fn new(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut seen = VertexSet::EMPTY;
        for &v in &images {
            let v = v as usize;
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
            seen.insert(v);
        }
        if seen.len() != n {
            return Err(GraphError::BadExpression {
                expr: format!("{images:?}"),
                reason: "repeated image".into(),
            });
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn image(&self, v: usize) -> usize {
        self.images[v] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(v, &w)| v == w as usize)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&v| self.images[v as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.len()];
        for (v, &w) in self.images.iter().enumerate() {
            images[w as usize] = v as u8;
        }
        Permutation { images }
    }

    pub fn apply(&self, g: &Graph) -> Result<Graph> {
        if g.n() != self.len() {
            return Err(GraphError::SizeMismatch {
                left: g.n(),
                right: self.len(),
            });
        }
        Ok(g.relabel(&self.images))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// Canonical edge bit set of an isomorphism class or a switching-isomorphism
/// class. Keys order by `(n, bits)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassKey {
    n: u8,
    bits: u128,
}

impl ClassKey {
    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u128 {
        self.bits
    }

    /// The graph whose edge set is the key.
    pub fn graph(&self) -> Graph {
        Graph::from_bits_unchecked(self.n(), self.bits)
    }
}

impl fmt::Debug for ClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassKey(n={}, {:#x})", self.n, self.bits)
    }
}

/// Visits every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[u8])) {
    let mut p = [0u8; MAX_VERTICES];
    for (v, slot) in p.iter_mut().enumerate() {
        *slot = v as u8;
    }
    let mut c = [0usize; MAX_VERTICES];
    visit(&p[..n]);
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            visit(&p[..n]);
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn min_relabeling(g: &Graph) -> u128 {
    let edges: Vec<(u8, u8)> = g.edges().map(|(i, j)| (i as u8, j as u8)).collect();
    if edges.is_empty() {
        return 0;
    }
    let mut best = u128::MAX;
    for_each_permutation(g.n(), |p| {
        let mut bits = 0u128;
        for &(i, j) in &edges {
            bits |= 1 << PAIR[p[i as usize] as usize][p[j as usize] as usize];
        }
        best = best.min(bits);
    });
    best
}

/// Permutation searches with a configurable order bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Canonicalizer {
    bound: usize,
}

impl Default for Canonicalizer {
    fn default() -> Self {
        Canonicalizer {
            bound: DEFAULT_CANON_BOUND,
        }
    }
}

impl Canonicalizer {
    pub fn with_bound(bound: usize) -> Result<Self> {
        if bound > MAX_CANON_BOUND {
            return Err(GraphError::CanonBoundExceeded {
                n: bound,
                bound: MAX_CANON_BOUND,
            });
        }
        Ok(Canonicalizer { bound })
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.bound {
            Err(GraphError::CanonBoundExceeded {
                n,
                bound: self.bound,
            })
        } else {
            Ok(())
        }
    }

    /// Smallest edge bit set over all `n!` relabelings of `g`.
    pub fn canonical_form(&self, g: &Graph) -> Result<ClassKey> {
        self.check(g.n())?;
        Ok(ClassKey {
            n: g.n() as u8,
            bits: min_relabeling(g),
        })
    }

    /// Smallest canonical form over the switching class of `g`.
    ///
    /// With a fixed labeling, the smallest member of a switching class is the
    /// one in which the top vertex is isolated: the pairs through that vertex
    /// hold the most significant bits and switching can clear all of them.
    /// Minimizing over relabelings therefore reduces to minimizing, over the
    /// choice of vertex `v` to isolate, the canonical form of what remains
    /// after deleting `v`.
    pub fn switch_iso_key(&self, g: &Graph) -> Result<ClassKey> {
        self.check(g.n())?;
        let n = g.n();
        if n == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut best = u128::MAX;
        for v in 0..n {
            let rest = isolate(g, v)?.induced(VertexSet::singleton(v).complement_in(n))?;
            best = best.min(min_relabeling(&rest));
        }
        Ok(ClassKey {
            n: n as u8,
            bits: best,
        })
    }

    pub fn switch_iso_equivalent(&self, g1: &Graph, g2: &Graph) -> Result<bool> {
        if g1.n() != g2.n() {
            return Err(GraphError::SizeMismatch {
                left: g1.n(),
                right: g2.n(),
            });
        }
        Ok(self.switch_iso_key(g1)? == self.switch_iso_key(g2)?)
    }

    /// Some `f` with `f(g1) = g2`.
    pub fn isomorphic(&self, g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
        if g1.n() != g2.n() {
            return Err(GraphError::SizeMismatch {
                left: g1.n(),
                right: g2.n(),
            });
        }
        self.check(g1.n())?;
        if g1.edge_count() != g2.edge_count() || g1.degree_sequence() != g2.degree_sequence() {
            return Ok(None);
        }
        let mut found = None;
        Matcher::new(g1, g2).run(&mut |p| {
            found = Some(Permutation { images: p.to_vec() });
            false
        });
        Ok(found)
    }

    /// Every `f` with `f(g) = g`, in lexicographic order of images.
    pub fn automorphisms(&self, g: &Graph) -> Result<Vec<Permutation>> {
        self.check(g.n())?;
        let mut all = Vec::new();
        Matcher::new(g, g).run(&mut |p| {
            all.push(Permutation { images: p.to_vec() });
            true
        });
        Ok(all)
    }
}

/// Backtracking search for adjacency-preserving bijections `from -> to`,
/// assigning source vertices in index order to targets of equal degree.
struct Matcher<'a> {
    from: &'a Graph,
    to: &'a Graph,
    from_deg: Vec<usize>,
    to_deg: Vec<usize>,
    images: Vec<u8>,
    used: VertexSet,
}

impl<'a> Matcher<'a> {
    fn new(from: &'a Graph, to: &'a Graph) -> Self {
        Matcher {
            from,
            to,
            from_deg: (0..from.n()).map(|v| from.degree(v)).collect(),
            to_deg: (0..to.n()).map(|v| to.degree(v)).collect(),
            images: Vec::with_capacity(from.n()),
            used: VertexSet::EMPTY,
        }
    }

    /// Calls `emit` per complete match; stops once it returns `false`.
    fn run(&mut self, emit: &mut dyn FnMut(&[u8]) -> bool) -> bool {
        let v = self.images.len();
        if v == self.from.n() {
            return emit(&self.images);
        }
        for w in 0..self.to.n() {
            if self.used.contains(w) || self.from_deg[v] != self.to_deg[w] {
                continue;
            }
            let consistent = self
                .images
                .iter()
                .enumerate()
                .all(|(u, &img)| self.from.has_edge(u, v) == self.to.has_edge(img as usize, w));
            if !consistent {
                continue;
            }
            self.images.push(w as u8);
            self.used.insert(w);
            let go_on = self.run(emit);
            self.used.remove(w);
            self.images.pop();
            if !go_on {
                return false;
            }
        }
        true
    }
}

pub fn canonical_form(g: &Graph) -> Result<ClassKey> {
    Canonicalizer::default().canonical_form(g)
}

pub fn switch_iso_key(g: &Graph) -> Result<ClassKey> {
    Canonicalizer::default().switch_iso_key(g)
}

pub fn switch_iso_equivalent(g1: &Graph, g2: &Graph) -> Result<bool> {
    Canonicalizer::default().switch_iso_equivalent(g1, g2)
}

pub fn isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Permutation>> {
    Canonicalizer::default().isomorphic(g1, g2)
}

pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    Canonicalizer::default().automorphisms(g)
}
