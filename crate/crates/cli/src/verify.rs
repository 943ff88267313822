//! Closed-form counts checked against brute-force enumeration.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use switchclass::invariants::{
    count_sub, formula_cycle, formula_path, formula_union_k3, formula_union_k4, ClosedPattern,
    PatternClass, UnionShape,
};
use switchclass::Graph;

#[derive(Debug, Serialize)]
pub struct Line {
    pub formula: String,
    pub cases: usize,
    pub pass: bool,
    /// First disagreement, as (case, formula, brute force).
    pub mismatch: Option<(String, u64, u64)>,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "pass" } else { "FAIL" };
        write!(f, "{verdict}  {:<24} {:>4} cases", self.formula, self.cases)?;
        if let Some((case, want, got)) = &self.mismatch {
            write!(f, "  first mismatch {case}: formula {want}, counted {got}")?;
        }
        Ok(())
    }
}

struct Tally {
    line: Line,
}

impl Tally {
    fn new(formula: String) -> Self {
        Tally {
            line: Line {
                formula,
                cases: 0,
                pass: true,
                mismatch: None,
            },
        }
    }

    fn check(&mut self, case: impl FnOnce() -> String, formula: u64, counted: usize) {
        self.line.cases += 1;
        let counted = counted as u64;
        if formula != counted && self.line.pass {
            self.line.pass = false;
            self.line.mismatch = Some((case(), formula, counted));
        }
    }
}

const PATTERNS: [ClosedPattern; 6] = [
    ClosedPattern::Complete(3),
    ClosedPattern::Complete(4),
    ClosedPattern::Complete(5),
    ClosedPattern::Empty(3),
    ClosedPattern::Empty(4),
    ClosedPattern::Empty(5),
];

fn family(
    name: &str,
    ns: impl Iterator<Item = usize> + Clone,
    host: fn(usize) -> switchclass::Result<Graph>,
    formula: fn(usize, ClosedPattern) -> switchclass::Result<u64>,
) -> anyhow::Result<Vec<Line>> {
    let mut lines = Vec::new();
    for p in PATTERNS {
        let pattern = p.to_pattern()?;
        let mut t = Tally::new(format!("{name} {p}"));
        for n in ns.clone().filter(|&n| p.order() < n) {
            t.check(
                || format!("n={n}"),
                formula(n, p)?,
                count_sub(&host(n)?, &pattern)?,
            );
        }
        lines.push(t.line);
    }
    Ok(lines)
}

fn random_shape(rng: &mut StdRng, max_total: usize) -> anyhow::Result<UnionShape> {
    let total = rng.gen_range(4..=max_total);
    let (mut paths, mut cycles, mut used) = (Vec::new(), Vec::new(), 0);
    loop {
        let room = total - used;
        if room < 2 || (used > 0 && rng.gen_bool(0.3)) {
            break;
        }
        if room >= 4 && rng.gen_bool(0.5) {
            let c = rng.gen_range(4..=room);
            cycles.push(c);
            used += c;
        } else {
            let p = rng.gen_range(2..=room);
            paths.push(p);
            used += p;
        }
    }
    Ok(UnionShape::new(paths, cycles, total)?)
}

/// Runs every formula family up to `max_n` and `shapes` random unions.
pub fn run(max_n: usize, shapes: usize, seed: u64) -> anyhow::Result<Vec<Line>> {
    let mut lines = family("path", 2..=max_n, Graph::path, formula_path)?;
    lines.extend(family("cycle", 4..=max_n, Graph::cycle, formula_cycle)?);

    let k3 = PatternClass::complete(3)?;
    let k4 = PatternClass::complete(4)?;
    let mut t3 = Tally::new("union K3".to_string());
    let mut t4 = Tally::new("union K4".to_string());
    let mut rng = StdRng::seed_from_u64(seed);
    if max_n >= 4 {
        for _ in 0..shapes {
            let shape = random_shape(&mut rng, max_n)?;
            let g = shape.realize()?;
            let case = || format!("{shape:?}");
            t3.check(case, formula_union_k3(&shape)?, count_sub(&g, &k3)?);
            t4.check(case, formula_union_k4(&shape)?, count_sub(&g, &k4)?);
        }
    }
    lines.push(t3.line);
    lines.push(t4.line);
    Ok(lines)
}
