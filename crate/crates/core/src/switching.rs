//! Seidel switching and local complementation.
//!
//! Switching `G` at `A` replaces `G` by `G ⊖ K(A, X∖A)`. The spanning complete
//! bipartite graphs form a subgroup of order `2^(n-1)` under `⊖`, and two
//! graphs are switch-equivalent when their symmetric difference lies in it.

use crate::error::{GraphError, Result};
use crate::graph::{cut_bits, star_bits, Graph, VertexSet};

/// Witness that a graph is the complete bipartite graph `K(side, X∖side)`.
///
/// The side is normalized so that it never contains vertex 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartitionWitness {
    side: VertexSet,
}

impl BipartitionWitness {
    /// Normalizes `side` in `{0, .., n-1}` by taking its complement when it holds vertex 0.
    pub fn normalized(side: VertexSet, n: usize) -> Self {
        let side = if side.contains(0) {
            side.complement_in(n)
        } else {
            side
        };
        BipartitionWitness { side }
    }

    pub fn side(&self) -> VertexSet {
        self.side
    }

    /// The witnessed bipartite graph on `n` vertices.
    pub fn graph(&self, n: usize) -> Result<Graph> {
        Graph::complete_bipartite(n, self.side)
    }
}

fn require_vertices(g: &Graph) -> Result<()> {
    if g.n() == 0 {
        Err(GraphError::EmptyVertexSet)
    } else {
        Ok(())
    }
}

fn require_same_order(g1: &Graph, g2: &Graph) -> Result<()> {
    if g1.n() == g2.n() {
        Ok(())
    } else {
        Err(GraphError::SizeMismatch {
            left: g1.n(),
            right: g2.n(),
        })
    }
}

/// `G ⊖ K(A, X∖A)`: toggles every pair with exactly one end in `A`.
pub fn switch(g: &Graph, side: VertexSet) -> Result<Graph> {
    side.check_within(g.n())?;
    Ok(Graph::from_bits_unchecked(
        g.n(),
        g.bits() ^ cut_bits(side, g.n()),
    ))
}

/// Local complementation at `a`: toggles the `n - 1` pairs through `a`.
pub fn local_complement(g: &Graph, a: usize) -> Result<Graph> {
    if a >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: a,
            n: g.n(),
        });
    }
    Ok(Graph::from_bits_unchecked(
        g.n(),
        g.bits() ^ star_bits(a, g.n()),
    ))
}

/// The unique member of the switching class of `g` in which `v` is isolated.
pub fn isolate(g: &Graph, v: usize) -> Result<Graph> {
    switch(g, g.neighbors(v))
}

/// Membership test for the spanning complete bipartite graphs.
///
/// Vertex 0 is on one side, so the other side must be exactly its
/// neighbourhood; the candidate is then checked bit for bit.
pub fn bipartite_witness(d: &Graph) -> Option<BipartitionWitness> {
    if d.n() == 0 {
        return Some(BipartitionWitness {
            side: VertexSet::EMPTY,
        });
    }
    let side = d.neighbors(0);
    (cut_bits(side, d.n()) == d.bits()).then_some(BipartitionWitness { side })
}

/// Returns `A` with `g2 = switch(g1, A)` when the graphs are switch-equivalent.
pub fn switch_equivalent(g1: &Graph, g2: &Graph) -> Result<Option<BipartitionWitness>> {
    require_same_order(g1, g2)?;
    require_vertices(g1)?;
    Ok(bipartite_witness(&g1.symmetric_difference(g2)?))
}

/// All `2^(n-1)` members of the switching class of `g`, one per side `A`
/// avoiding vertex 0, in increasing order of `A`.
pub fn switch_class(g: &Graph) -> Result<Vec<Graph>> {
    require_vertices(g)?;
    let n = g.n();
    Ok((0u32..1 << (n - 1))
        .map(|half| {
            let side = VertexSet::from_bits((half << 1) as u16);
            Graph::from_bits_unchecked(n, g.bits() ^ cut_bits(side, n))
        })
        .collect())
}

/// The vertices at which to locally complement, in increasing order, to
/// carry `g1` onto `g2`.
pub fn local_complement_path(g1: &Graph, g2: &Graph) -> Result<Option<Vec<usize>>> {
    Ok(switch_equivalent(g1, g2)?.map(|w| w.side().iter().collect()))
}

/// Switch-equivalence up to taking the complement of the second graph.
pub fn extended_equivalent(g1: &Graph, g2: &Graph) -> Result<bool> {
    Ok(switch_equivalent(g1, g2)?.is_some() || switch_equivalent(g1, &g2.complement())?.is_some())
}
