//! Enumeration of the switch-isomorphism types on `n` vertices.
//!
//! Two independent routes produce the same catalog:
//!
//! * **inductive**: every graph on `n` vertices is, up to switching and
//!   relabeling, a type `G0` on `n - 1` vertices plus a new vertex `w`
//!   joined to some `Z`. Switching at `{w}` swaps `Z` with its complement
//!   and automorphisms of `G0` permute the choices, so it is enough to try
//!   `|Z| <= n/2` and one `Z` per automorphism orbit. Candidates are then
//!   deduplicated by key.
//! * **transversal**: the graphs with vertex 0 isolated meet every switching
//!   class exactly once; bucket all of them by key.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;

use rayon::prelude::*;

use crate::canonical::{automorphisms, switch_iso_key, ClassKey, Permutation};
use crate::error::{GraphError, Result};
use crate::graph::{pair_count, Graph, VertexSet};
use crate::invariants::{count_sub, PatternClass};
use crate::names::named_graphs;
use crate::switching::isolate;

/// Default largest `n` for the transversal scan.
pub const TRANSVERSAL_LIMIT: usize = 7;

/// Enumeration route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Inductive,
    Transversal,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Inductive => "inductive",
            Method::Transversal => "transversal",
        })
    }
}

/// Induced-subgraph counts against the small patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct InvariantProfile {
    pub k3: usize,
    pub n3: usize,
    pub k4: usize,
    pub n4: usize,
    pub l4: usize,
}

/// Profile of `g`; needs at least 4 vertices.
pub fn profile(g: &Graph) -> Result<InvariantProfile> {
    let count = |expr: &str| -> Result<usize> { count_sub(g, &PatternClass::named(expr)?) };
    Ok(InvariantProfile {
        k3: count("K3")?,
        n3: count("N3")?,
        k4: count("K4")?,
        n4: count("N4")?,
        l4: count("L4")?,
    })
}

/// One switch-isomorphism type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeRecord {
    pub key: ClassKey,
    pub representative: Graph,
    pub name: Option<String>,
    pub aliases: Vec<String>,
    /// Absent below 4 vertices.
    pub profile: Option<InvariantProfile>,
}

impl TypeRecord {
    /// Display name, falling back to `type-n-k` for position `k` (from 1).
    pub fn label(&self, position: usize) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("type-{}-{}", self.key.n(), position + 1))
    }
}

/// All types on `n` vertices, sorted by key.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    n: usize,
    types: Vec<TypeRecord>,
    index: HashMap<ClassKey, usize>,
}

impl Catalog {
    /// Builds records for a key set: representatives, names and profiles.
    pub fn from_keys(n: usize, keys: BTreeSet<ClassKey>) -> Result<Self> {
        let mut names: HashMap<ClassKey, Vec<String>> = HashMap::new();
        for (name, g) in named_graphs(n) {
            names
                .entry(switch_iso_key(&g)?)
                .or_default()
                .push(name.to_string());
        }
        let types = keys
            .into_iter()
            .map(|key| {
                let representative = key.graph();
                let mut labels = names.remove(&key).unwrap_or_default().into_iter();
                Ok(TypeRecord {
                    key,
                    representative,
                    name: labels.next(),
                    aliases: labels.collect(),
                    profile: if n >= 4 {
                        Some(profile(&representative)?)
                    } else {
                        None
                    },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, types)
    }

    /// Checks ordering and key consistency of ready-made records.
    pub fn new(n: usize, types: Vec<TypeRecord>) -> Result<Self> {
        for t in &types {
            if t.key.n() != n || t.representative.n() != n {
                return Err(GraphError::CatalogMismatch {
                    found: t.key.n(),
                    wanted: n,
                });
            }
        }
        if types.windows(2).any(|w| w[0].key >= w[1].key) {
            return Err(GraphError::CorruptCatalog(
                "keys are not strictly increasing".into(),
            ));
        }
        let index = types.iter().enumerate().map(|(i, t)| (t.key, i)).collect();
        Ok(Catalog { n, types, index })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn types(&self) -> &[TypeRecord] {
        &self.types
    }

    pub fn len(&self) -> usize {
        self.types.len()
    }

    pub fn is_empty(&self) -> bool {
        self.types.is_empty()
    }

    pub fn keys(&self) -> BTreeSet<ClassKey> {
        self.types.iter().map(|t| t.key).collect()
    }

    pub fn position(&self, key: &ClassKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    pub fn get(&self, key: &ClassKey) -> Option<&TypeRecord> {
        self.position(key).map(|i| &self.types[i])
    }

    /// Record whose name or an alias is `name`.
    pub fn by_name(&self, name: &str) -> Option<&TypeRecord> {
        self.types
            .iter()
            .find(|t| t.name.as_deref() == Some(name) || t.aliases.iter().any(|a| a == name))
    }
}

/// The one type on a single vertex.
pub fn base_catalog() -> Result<Catalog> {
    Catalog::from_keys(1, BTreeSet::from([switch_iso_key(&Graph::empty(1)?)?]))
}

/// Smallest image of `z` under the automorphisms, as a mask.
fn orbit_min(z: VertexSet, auts: &[Permutation]) -> VertexSet {
    auts.iter()
        .map(|a| z.iter().map(|v| a.image(v)).collect::<VertexSet>())
        .min()
        .unwrap_or(z)
}

/// Candidates `G0 ⊖ K(w, Z)` for one type on `n - 1` vertices.
fn extensions(g0: &Graph, n: usize) -> Result<Vec<Graph>> {
    let auts = automorphisms(g0)?;
    let w = n - 1;
    let base = g0.pad_to(n)?;
    let mut out = Vec::new();
    for z in VertexSet::all_subsets(n - 1) {
        if z.len() > n / 2 || orbit_min(z, &auts) != z {
            continue;
        }
        out.push(Graph::new(n, base.edges().chain(z.iter().map(|v| (v, w))))?);
    }
    Ok(out)
}

/// Types on `n` vertices from the types on `n - 1`.
pub fn enumerate_types_inductive(n: usize, previous: &Catalog) -> Result<Catalog> {
    if n < 2 || previous.n() + 1 != n {
        return Err(GraphError::CatalogMismatch {
            found: previous.n(),
            wanted: n,
        });
    }
    let mut candidates = Vec::new();
    for t in previous.types() {
        candidates.extend(extensions(&t.representative, n)?);
    }
    let keys = candidates
        .par_iter()
        .map(switch_iso_key)
        .collect::<Result<BTreeSet<_>>>()?;
    Catalog::from_keys(n, keys)
}

/// Runs the inductive route from one vertex up to `n`.
pub fn catalog_inductive(n: usize) -> Result<Catalog> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    let mut cat = base_catalog()?;
    for m in 2..=n {
        cat = enumerate_types_inductive(m, &cat)?;
    }
    Ok(cat)
}

/// Number of graphs with vertex 0 isolated, `2^C(n-1, 2)`.
pub fn transversal_size(n: usize) -> u128 {
    1u128 << pair_count(n.saturating_sub(1))
}

/// The transversal member with index `bits` over the pairs among `1..n`.
pub fn transversal_graph(n: usize, bits: u128) -> Result<Graph> {
    Graph::empty(1)?.disjoint_union(&Graph::from_bits(n - 1, bits)?)
}

/// Keys of every transversal graph, with the scan size limited to `limit`.
pub fn enumerate_types_transversal_with_limit(n: usize, limit: usize) -> Result<Catalog> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    if n > limit {
        return Err(GraphError::TransversalLimit { n, limit });
    }
    let keys = (0..transversal_size(n) as u64)
        .into_par_iter()
        .map(|bits| switch_iso_key(&transversal_graph(n, bits as u128)?))
        .collect::<Result<BTreeSet<_>>>()?;
    Catalog::from_keys(n, keys)
}

pub fn enumerate_types_transversal(n: usize) -> Result<Catalog> {
    enumerate_types_transversal_with_limit(n, TRANSVERSAL_LIMIT)
}

pub fn catalog(n: usize, method: Method) -> Result<Catalog> {
    match method {
        Method::Inductive => catalog_inductive(n),
        Method::Transversal => enumerate_types_transversal(n),
    }
}

/// Number of switch-isomorphism types on `n` vertices.
pub fn mu(n: usize, method: Method) -> Result<usize> {
    Ok(catalog(n, method)?.len())
}

/// `2^(C(n,2) - n + 1)`, the number of switching classes on `n` labelled vertices.
pub fn switch_class_count(n: usize) -> Result<u128> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    Ok(1u128 << (pair_count(n) + 1 - n))
}

/// Counts switching classes by reducing all `2^C(n,2)` graphs to their
/// transversal member.
pub fn switch_classes_exhaustive(n: usize) -> Result<usize> {
    if n == 0 {
        return Err(GraphError::EmptyVertexSet);
    }
    if n > 6 {
        return Err(GraphError::TransversalLimit { n, limit: 6 });
    }
    let mut seen = HashSet::new();
    for bits in 0..1u128 << pair_count(n) {
        seen.insert(isolate(&Graph::from_bits(n, bits)?, 0)?);
    }
    Ok(seen.len())
}

/// The catalog entry of `g`.
pub fn type_of<'c>(g: &Graph, catalog: &'c Catalog) -> Result<&'c TypeRecord> {
    if g.n() != catalog.n() {
        return Err(GraphError::SizeMismatch {
            left: g.n(),
            right: catalog.n(),
        });
    }
    catalog
        .get(&switch_iso_key(g)?)
        .ok_or(GraphError::MissingType(catalog.n()))
}
