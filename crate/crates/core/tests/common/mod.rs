//! Law checks shared by the property tests and the acceptance run.
//!
//! Each law is a plain function returning `Err(description)` on the first
//! violation, so it can be driven exhaustively, from proptest, or from a
//! seeded generator.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use switchclass::graph::pair_count;
use switchclass::invariants::count_sub;
use switchclass::switching::{local_complement, switch, switch_equivalent, BipartitionWitness};
use switchclass::{Graph, PatternClass, VertexSet};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ok<T>(r: switchclass::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    (0u128..1 << pair_count(n)).map(move |bits| Graph::from_bits(n, bits).unwrap())
}

pub fn random_graph(rng: &mut impl Rng, n: usize) -> Graph {
    let bits = rng.gen::<u128>() & ((1u128 << pair_count(n)) - 1);
    Graph::from_bits(n, bits).unwrap()
}

pub fn random_set(rng: &mut impl Rng, n: usize) -> VertexSet {
    VertexSet::from_bits(rng.gen::<u16>() & ((1u16 << n) - 1))
}

/// `K_{A, X∖A}` built edge by edge.
pub fn cut_graph(n: usize, a: VertexSet) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a.contains(i) != a.contains(j) {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Symmetric difference is an elementary abelian group on graphs over `X`.
pub fn group_laws(g1: &Graph, g2: &Graph, g3: &Graph) -> Check {
    let n = g1.n();
    let e = Graph::empty(n).unwrap();
    let sd = |a: &Graph, b: &Graph| a.symmetric_difference(b).unwrap();
    ensure!(
        sd(g1, &sd(g2, g3)) == sd(&sd(g1, g2), g3),
        "associativity fails for {g1:?} {g2:?} {g3:?}"
    );
    ensure!(
        sd(g1, g2) == sd(g2, g1),
        "commutativity fails for {g1:?} {g2:?}"
    );
    ensure!(sd(g1, g1) == e, "G ⊖ G is not empty for {g1:?}");
    ensure!(sd(&e, g1) == *g1, "empty is not neutral for {g1:?}");
    let inter = g1.intersection(g2).unwrap().edge_count();
    ensure!(
        sd(g1, g2).edge_count() + 2 * inter == g1.edge_count() + g2.edge_count(),
        "edge count identity fails for {g1:?} {g2:?}"
    );
    Ok(())
}

/// Complete bipartite spanning graphs are closed under ⊖, and complementing
/// one gives two disjoint cliques.
pub fn bipartite_closure(n: usize, a: VertexSet, b: VertexSet) -> Check {
    let (ka, kb) = (cut_graph(n, a), cut_graph(n, b));
    let sum = ka.symmetric_difference(&kb).unwrap();
    let ab = a.symmetric_difference(b);
    ensure!(
        sum == cut_graph(n, ab),
        "K_A ⊖ K_B != K_(A⊖B) for n={n} A={a} B={b}"
    );
    let w = switchclass::switching::bipartite_witness(&sum);
    ensure!(
        w == Some(BipartitionWitness::normalized(ab, n)),
        "no normalized witness for K_(A⊖B), n={n} A={a} B={b}"
    );
    ensure!(
        ok(Graph::complete_bipartite(n, a))? == ka,
        "complete_bipartite disagrees at A={a}"
    );

    let kx = Graph::complete(n).unwrap();
    let cliques = kx.symmetric_difference(&ka).unwrap();
    for i in 0..n {
        for j in i + 1..n {
            let same_side = a.contains(i) == a.contains(j);
            ensure!(
                cliques.has_edge(i, j) == same_side,
                "K_X ⊖ K_A wrong at {i}-{j}, A={a}"
            );
        }
    }
    // K_A padded, switched at A, is the complement of K_(X∖A) padded.
    let mut ka_pad = Vec::new();
    let mut kc_pad = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a.contains(i) && a.contains(j) {
                ka_pad.push((i, j));
            }
            if !a.contains(i) && !a.contains(j) {
                kc_pad.push((i, j));
            }
        }
    }
    let lhs = Graph::new(n, ka_pad)
        .unwrap()
        .symmetric_difference(&ka)
        .unwrap();
    let rhs = Graph::new(n, kc_pad).unwrap().complement();
    ensure!(lhs == rhs, "complement identity fails for n={n} A={a}");
    Ok(())
}

/// ≈ is reflexive, symmetric and transitive, with composable witnesses.
pub fn equivalence_laws(g: &Graph, a: VertexSet, b: VertexSet, other: &Graph) -> Check {
    let n = g.n();
    ensure!(
        ok(switch_equivalent(g, g))? == Some(BipartitionWitness::normalized(VertexSet::EMPTY, n)),
        "not reflexive at {g:?}"
    );
    let g2 = ok(switch(g, a))?;
    let g3 = ok(switch(&g2, b))?;
    ensure!(
        ok(switch_equivalent(g, &g2))? == Some(BipartitionWitness::normalized(a, n)),
        "switch at {a} not detected from {g:?}"
    );
    ensure!(
        ok(switch_equivalent(&g2, g))?.is_some(),
        "not symmetric at {g:?} A={a}"
    );
    ensure!(
        ok(switch_equivalent(g, &g3))?
            == Some(BipartitionWitness::normalized(a.symmetric_difference(b), n)),
        "not transitive at {g:?} A={a} B={b}"
    );
    ensure!(
        ok(switch_equivalent(g, other))?.is_some() == ok(switch_equivalent(other, g))?.is_some(),
        "asymmetric answer for {g:?} {other:?}"
    );
    Ok(())
}

/// Transitivity on an arbitrary triple.
pub fn transitive_triple(g1: &Graph, g2: &Graph, g3: &Graph) -> Check {
    let e12 = ok(switch_equivalent(g1, g2))?.is_some();
    let e23 = ok(switch_equivalent(g2, g3))?.is_some();
    if e12 && e23 {
        ensure!(
            ok(switch_equivalent(g1, g3))?.is_some(),
            "not transitive: {g1:?} {g2:?} {g3:?}"
        );
    }
    Ok(())
}

/// Switching commutes with taking induced subgraphs.
pub fn restriction(g: &Graph, a: VertexSet, z: VertexSet) -> Check {
    if z.is_empty() {
        return Ok(());
    }
    let g2 = ok(switch(g, a))?;
    let (r1, r2) = (ok(g.induced(z))?, ok(g2.induced(z))?);
    ensure!(
        ok(switch_equivalent(&r1, &r2))?.is_some(),
        "restriction to {z} breaks ≈ for {g:?} switched at {a}"
    );
    Ok(())
}

/// Complementing both sides keeps ≈ with the same witness and keeps counts
/// against the complemented pattern.
pub fn complement_duality(g: &Graph, a: VertexSet, patterns: &[PatternClass]) -> Check {
    let g2 = ok(switch(g, a))?;
    let w = ok(switch_equivalent(g, &g2))?;
    let wc = ok(switch_equivalent(&g.complement(), &g2.complement()))?;
    ensure!(
        w.is_some() && w == wc,
        "complement changes the witness for {g:?} at {a}"
    );
    let gc = g.complement();
    for p in patterns.iter().filter(|p| p.k() <= g.n()) {
        let pc = ok(p.complement())?;
        ensure!(
            ok(count_sub(&gc, &pc))? == ok(count_sub(g, p))?,
            "count duality fails for {g:?} with a pattern of order {}",
            p.k()
        );
    }
    Ok(())
}

/// Local complementation over the elements of `A`, in the given order,
/// equals the switch at `A`.
pub fn mu_composition(g: &Graph, order: &[usize]) -> Check {
    let a: VertexSet = order.iter().copied().collect();
    let mut h = *g;
    for &v in order {
        h = ok(local_complement(&h, v))?;
    }
    ensure!(
        h == ok(switch(g, a))?,
        "μ over {order:?} differs from the switch for {g:?}"
    );
    Ok(())
}

pub fn duality_patterns() -> Vec<PatternClass> {
    ["K3", "N3", "K4", "N4", "L4", "L3^4", "C4"]
        .iter()
        .map(|p| PatternClass::named(p).unwrap())
        .collect()
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &x) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// A named law with its exhaustive and random drivers.
pub struct Suite {
    pub name: &'static str,
    pub exhaustive: fn(usize) -> Result<u64, String>,
    pub random: fn(&mut StdRng, usize) -> Check,
}

pub const SUITES: &[Suite] = &[
    Suite {
        name: "⊖ group laws",
        exhaustive: |n| {
            let gs: Vec<Graph> = all_graphs(n).collect();
            let mut cases = 0;
            for g1 in &gs {
                for g2 in &gs {
                    for g3 in &gs {
                        group_laws(g1, g2, g3)?;
                        cases += 1;
                    }
                }
            }
            Ok(cases)
        },
        random: |rng, n| {
            group_laws(
                &random_graph(rng, n),
                &random_graph(rng, n),
                &random_graph(rng, n),
            )
        },
    },
    Suite {
        name: "𝒟(X) closure",
        exhaustive: |n| {
            let mut cases = 0;
            for a in VertexSet::all_subsets(n) {
                for b in VertexSet::all_subsets(n) {
                    bipartite_closure(n, a, b)?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
        random: |rng, n| bipartite_closure(n, random_set(rng, n), random_set(rng, n)),
    },
    Suite {
        name: "≈ equivalence laws",
        exhaustive: |n| {
            let gs: Vec<Graph> = all_graphs(n).collect();
            let mut cases = 0;
            for g in &gs {
                for a in VertexSet::all_subsets(n) {
                    for b in VertexSet::all_subsets(n) {
                        equivalence_laws(g, a, b, g)?;
                        cases += 1;
                    }
                }
                for other in &gs {
                    equivalence_laws(g, VertexSet::EMPTY, VertexSet::EMPTY, other)?;
                    cases += 1;
                }
            }
            if n <= 4 {
                for g1 in &gs {
                    for g2 in &gs {
                        for g3 in &gs {
                            transitive_triple(g1, g2, g3)?;
                            cases += 1;
                        }
                    }
                }
            }
            Ok(cases)
        },
        random: |rng, n| {
            let g = random_graph(rng, n);
            let other = random_graph(rng, n);
            equivalence_laws(&g, random_set(rng, n), random_set(rng, n), &other)
        },
    },
    Suite {
        name: "restriction lemma",
        exhaustive: |n| {
            let mut cases = 0;
            for g in all_graphs(n) {
                for a in VertexSet::all_subsets(n) {
                    for z in VertexSet::all_subsets(n) {
                        restriction(&g, a, z)?;
                        cases += 1;
                    }
                }
            }
            Ok(cases)
        },
        random: |rng, n| {
            let g = random_graph(rng, n);
            restriction(&g, random_set(rng, n), random_set(rng, n))
        },
    },
    Suite {
        name: "complement dualities",
        exhaustive: |n| {
            let patterns = duality_patterns();
            let mut cases = 0;
            for g in all_graphs(n) {
                for a in VertexSet::all_subsets(n) {
                    complement_duality(&g, a, &patterns)?;
                    cases += 1;
                }
            }
            Ok(cases)
        },
        random: |rng, n| {
            thread_local! {
                static PATTERNS: Vec<PatternClass> = duality_patterns();
            }
            let g = random_graph(rng, n);
            let a = random_set(rng, n);
            PATTERNS.with(|p| complement_duality(&g, a, p))
        },
    },
    Suite {
        name: "μ composition = switch",
        exhaustive: |n| {
            let mut cases = 0;
            for g in all_graphs(n) {
                for a in VertexSet::all_subsets(n) {
                    let elems: Vec<usize> = a.iter().collect();
                    for order in permutations(&elems) {
                        mu_composition(&g, &order)?;
                        cases += 1;
                    }
                }
            }
            Ok(cases)
        },
        random: |rng, n| {
            let g = random_graph(rng, n);
            let mut order: Vec<usize> = random_set(rng, n).iter().collect();
            // Shuffle, and sometimes repeat a vertex: μ_a twice cancels.
            for i in (1..order.len()).rev() {
                order.swap(i, rng.gen_range(0..=i));
            }
            mu_composition(&g, &order)?;
            if let Some(&v) = order.first() {
                let mut twice = order.clone();
                twice.push(v);
                twice.push(v);
                mu_composition(&g, &twice)?;
            }
            Ok(())
        },
    },
];

/// Runs a suite exhaustively for `n ≤ 4` and on `random` seeded cases with
/// `5 ≤ n ≤ 8`; returns the two case counts.
pub fn run_suite(suite: &Suite, random: u64, seed: u64) -> Result<(u64, u64), String> {
    let mut exhaustive = 0;
    for n in 1..=4 {
        exhaustive += (suite.exhaustive)(n).map_err(|e| format!("n={n}: {e}"))?;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for i in 0..random {
        let n = rng.gen_range(5..=8);
        (suite.random)(&mut rng, n).map_err(|e| format!("random case {i}: {e}"))?;
    }
    Ok((exhaustive, random))
}

/// Number of `m`-sets whose triples all span an odd (`odd = true`) or even
/// number of edges. Graphs on the same vertex set are switching-equivalent
/// exactly when they have the same odd triples, so these are the `K_m` and
/// `N_m` class counts for `m ≥ 3`, computed without any canonical form.
pub fn parity_count(g: &Graph, m: usize, odd: bool) -> usize {
    let n = g.n();
    let parity = |i: usize, j: usize, k: usize| {
        (g.has_edge(i, j) as u8 + g.has_edge(i, k) as u8 + g.has_edge(j, k) as u8) % 2 == 1
    };
    VertexSet::subsets_of_size(n, m)
        .filter(|z| {
            let v: Vec<usize> = z.iter().collect();
            (0..m).all(|a| (a + 1..m).all(|b| (b + 1..m).all(|c| parity(v[a], v[b], v[c]) == odd)))
        })
        .count()
}
