//! Small expression language for named graphs, and the fixed dictionary of
//! names used to label catalog entries.
//!
//! ```text
//! expr := term ('+' term)*          disjoint union, left to right
//! term := base ('^' int)?           pad with isolated vertices to int
//! base := atom | 'co(' expr ')' | '(' expr ')'
//! atom := ('K' | 'N' | 'L' | 'C') int
//! ```
//!
//! `K` complete, `N` edgeless, `L` path, `C` cycle; `co` is the complement.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

/// Parses a graph expression such as `co(L3^6)` or `(C3+L2)^6`.
pub fn parse_expr(text: &str) -> Result<Graph> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = Parser {
        src: compact.as_bytes(),
        pos: 0,
        text,
    };
    let g = p.expr()?;
    if p.pos != p.src.len() {
        return Err(p.fail("trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    text: &'a str,
}

impl Parser<'_> {
    fn fail(&self, reason: &str) -> GraphError {
        GraphError::BadExpression {
            expr: self.text.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.fail("expected a number"))
    }

    fn expr(&mut self) -> Result<Graph> {
        let mut g = self.term()?;
        while self.eat("+") {
            g = g.disjoint_union(&self.term()?)?;
        }
        Ok(g)
    }

    fn term(&mut self) -> Result<Graph> {
        let g = self.base()?;
        if self.eat("^") {
            let n = self.int()?;
            return g.pad_to(n);
        }
        Ok(g)
    }

    fn base(&mut self) -> Result<Graph> {
        if self.eat("co(") {
            let g = self.expr()?;
            if !self.eat(")") {
                return Err(self.fail("expected ')'"));
            }
            return Ok(g.complement());
        }
        if self.eat("(") {
            let g = self.expr()?;
            if !self.eat(")") {
                return Err(self.fail("expected ')'"));
            }
            return Ok(g);
        }
        let kind = self.peek().ok_or_else(|| self.fail("unexpected end"))?;
        self.pos += 1;
        let n = self.int()?;
        match kind {
            b'K' => Graph::complete(n),
            b'N' => Graph::empty(n),
            b'L' => Graph::path(n),
            b'C' => Graph::cycle(n),
            _ => {
                self.pos -= 1;
                Err(self.fail("expected K, N, L, C, co( or ("))
            }
        }
    }
}

/// Named graphs per order: the first name met for a class is its display
/// name, later ones are aliases.
const DICTIONARY: &[(usize, &[&str])] = &[
    (1, &["K1", "N1"]),
    (2, &["K2", "N2"]),
    (3, &["K3", "N3", "L2^3", "L3"]),
    (
        4,
        &["K4", "N4", "L4", "K3^4", "L2+L2", "L2^4", "L3^4", "C4"],
    ),
    (
        5,
        &[
            "K5", "N5", "C5", "L2^5", "co(L2^5)", "L3^5", "co(L3^5)", "K4^5", "K3^5", "L5",
        ],
    ),
    (
        6,
        &[
            "K6",
            "N6",
            "L2^6",
            "co(L2^6)",
            "C5^6",
            "(L2+L2)^6",
            "L3^6",
            "K3^6",
            "(L3+L2)^6",
            "L4^6",
            "co(L3^6)",
            "L3+L3",
            "C4^6",
            "L5^6",
            "L6",
            "C6",
            "K4^6",
            "C3+L3",
            "(C3+L2)^6",
            "co(C6)",
            "L2+L2+L2",
            "co(L2+L2+L2)",
        ],
    ),
];

/// The named graphs on `n` vertices, in dictionary order.
pub fn named_graphs(n: usize) -> Vec<(&'static str, Graph)> {
    DICTIONARY
        .iter()
        .filter(|(order, _)| *order == n)
        .flat_map(|(_, names)| names.iter())
        .map(|&name| (name, parse_expr(name).expect("dictionary entries parse")))
        .collect()
}
