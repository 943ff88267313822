//! Interchange formats: graph6 lines, edge lists, catalog reports and the
//! on-disk catalog cache.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::canonical::switch_iso_key;
use crate::classify::{Catalog, InvariantProfile, TypeRecord};
use crate::error::GraphError;
use crate::graph::{pair_count, Graph, MAX_VERTICES};

/// Identifier and version of the JSON report and cache schema.
pub const SCHEMA: &str = "switchclass/catalog";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("parse error at byte {offset}: {reason}")]
    Parse { offset: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error("schema mismatch: {0}")]
    Schema(String),
}

fn parse_err(offset: usize, reason: impl Into<String>) -> IoError {
    IoError::Parse {
        offset,
        reason: reason.into(),
    }
}

/// graph6 encoding of `g`.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let bits = pair_count(n);
    let mut out = String::with_capacity(1 + bits.div_ceil(6));
    out.push((n as u8 + 63) as char);
    for chunk in 0..bits.div_ceil(6) {
        let mut byte = 0u8;
        for k in 0..6 {
            let idx = chunk * 6 + k;
            byte <<= 1;
            if idx < bits && g.bits() >> idx & 1 == 1 {
                byte |= 1;
            }
        }
        out.push((byte + 63) as char);
    }
    out
}

/// Decodes one graph6 line; an optional `>>graph6<<` header and trailing
/// whitespace are ignored.
pub fn parse_graph6(line: &str) -> Result<Graph, IoError> {
    let header = ">>graph6<<";
    let skip = if line.starts_with(header) {
        header.len()
    } else {
        0
    };
    let body = line[skip..].trim_end().as_bytes();
    let first = *body
        .first()
        .ok_or_else(|| parse_err(skip, "empty graph6 line"))?;
    if !(63..=126).contains(&first) {
        return Err(parse_err(
            skip,
            format!("byte {first:#04x} outside 63..=126"),
        ));
    }
    if first == 126 {
        return Err(parse_err(
            skip,
            format!(
                "size extension implies more than 62 vertices; at most {MAX_VERTICES} supported"
            ),
        ));
    }
    let n = (first - 63) as usize;
    if n > MAX_VERTICES {
        return Err(parse_err(
            skip,
            format!("{n} vertices; at most {MAX_VERTICES} supported"),
        ));
    }
    let nbits = pair_count(n);
    let expected = 1 + nbits.div_ceil(6);
    if body.len() != expected {
        return Err(parse_err(
            skip + body.len().min(expected),
            format!(
                "expected {expected} bytes for n = {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut edges = 0u128;
    for (chunk, &byte) in body[1..].iter().enumerate() {
        let offset = skip + 1 + chunk;
        if !(63..=126).contains(&byte) {
            return Err(parse_err(
                offset,
                format!("byte {byte:#04x} outside 63..=126"),
            ));
        }
        let value = byte - 63;
        for k in 0..6 {
            if value >> (5 - k) & 1 == 1 {
                let idx = chunk * 6 + k;
                if idx >= nbits {
                    return Err(parse_err(offset, "nonzero padding bits"));
                }
                edges |= 1 << idx;
            }
        }
    }
    Ok(Graph::from_bits(n, edges)?)
}

/// `n m` header followed by one `u v` line per edge, 0-based.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph, IoError> {
    let mut offset = 0;
    let mut lines = Vec::new();
    for raw in text.split_inclusive('\n') {
        let content = raw.split('#').next().unwrap_or("").trim();
        if !content.is_empty() {
            lines.push((offset, content));
        }
        offset += raw.len();
    }
    let mut it = lines.into_iter();
    let (hoff, header) = it
        .next()
        .ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let [n, m] = two_ints(header, hoff)?;
    let mut edges = Vec::with_capacity(m);
    for (off, line) in it.by_ref().take(m) {
        let [u, v] = two_ints(line, off)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            text.len(),
            format!("header promised {m} edges, found {}", edges.len()),
        ));
    }
    if let Some((off, _)) = it.next() {
        return Err(parse_err(off, "more edge lines than the header declares"));
    }
    Ok(Graph::new(n, edges)?)
}

fn two_ints(line: &str, offset: usize) -> Result<[usize; 2], IoError> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(parse_err(
            offset,
            format!("expected two integers, got {line:?}"),
        ));
    }
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| parse_err(offset, format!("not a nonnegative integer: {s:?}")))
    };
    Ok([num(fields[0])?, num(fields[1])?])
}

/// Reads a graph given either as graph6 or as an edge list; a first
/// meaningful line made of two integers selects the edge-list reading.
pub fn parse_graph_text(text: &str) -> Result<Graph, IoError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| parse_err(0, "no graph in input"))?;
    let fields: Vec<&str> = first.split_whitespace().collect();
    if fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok()) {
        parse_edge_list(text)
    } else {
        parse_graph6(first)
    }
}

/// Output encodings for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Json,
    Csv,
}

/// One catalog entry as rendered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub position: usize,
    pub name: String,
    pub graph6: String,
    /// Edge bits of the class key in hex.
    pub key: String,
    pub aliases: Vec<String>,
    pub profile: Option<InvariantProfile>,
}

/// Rendered catalog; the JSON form is also the cache format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub version: u32,
    pub n: usize,
    pub count: usize,
    pub types: Vec<ReportRow>,
}

impl Report {
    pub fn from_catalog(cat: &Catalog) -> Self {
        let types = cat
            .types()
            .iter()
            .enumerate()
            .map(|(i, t)| ReportRow {
                position: i + 1,
                name: t.label(i),
                graph6: write_graph6(&t.representative),
                key: format!("{:x}", t.key.bits()),
                aliases: t.aliases.clone(),
                profile: t.profile,
            })
            .collect();
        Report {
            schema: SCHEMA.to_string(),
            version: SCHEMA_VERSION,
            n: cat.n(),
            count: cat.len(),
            types,
        }
    }

    /// Rebuilds the catalog, checking every row against its representative.
    pub fn to_catalog(&self) -> Result<Catalog, IoError> {
        if self.schema != SCHEMA || self.version != SCHEMA_VERSION {
            return Err(IoError::Schema(format!(
                "expected {SCHEMA} v{SCHEMA_VERSION}, found {} v{}",
                self.schema, self.version
            )));
        }
        let mut types = Vec::with_capacity(self.types.len());
        for (i, row) in self.types.iter().enumerate() {
            let representative = parse_graph6(&row.graph6)?;
            let key = switch_iso_key(&representative)?;
            if format!("{:x}", key.bits()) != row.key {
                return Err(IoError::Schema(format!(
                    "row {} key {} does not match its representative",
                    row.position, row.key
                )));
            }
            let placeholder = format!("type-{}-{}", self.n, i + 1);
            types.push(TypeRecord {
                key,
                representative,
                name: (row.name != placeholder).then(|| row.name.clone()),
                aliases: row.aliases.clone(),
                profile: row.profile,
            });
        }
        let cat = Catalog::new(self.n, types)?;
        if cat.len() != self.count {
            return Err(IoError::Schema(format!(
                "count {} but {} rows",
                self.count,
                cat.len()
            )));
        }
        Ok(cat)
    }

    pub fn render(&self, format: ReportFormat) -> Result<String, IoError> {
        match format {
            ReportFormat::Table => Ok(self.render_table()),
            ReportFormat::Json => Ok(serde_json::to_string_pretty(self)? + "\n"),
            ReportFormat::Csv => self.render_csv(),
        }
    }

    fn render_table(&self) -> String {
        let width = self
            .types
            .iter()
            .map(|r| r.name.len())
            .chain([4])
            .max()
            .unwrap_or(4);
        let g6width = self
            .types
            .iter()
            .map(|r| r.graph6.len())
            .chain([6])
            .max()
            .unwrap_or(6);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "n = {}: {} switch-isomorphism types",
            self.n, self.count
        );
        let _ = writeln!(
            out,
            "{:>3}  {:<width$}  {:<g6width$}  {:>3} {:>3} {:>3} {:>3} {:>3}  aliases",
            "#", "name", "graph6", "K3", "N3", "K4", "N4", "L4"
        );
        for r in &self.types {
            let counts = match r.profile {
                Some(p) => format!(
                    "{:>3} {:>3} {:>3} {:>3} {:>3}",
                    p.k3, p.n3, p.k4, p.n4, p.l4
                ),
                None => format!("{:>3} {:>3} {:>3} {:>3} {:>3}", "-", "-", "-", "-", "-"),
            };
            let _ = writeln!(
                out,
                "{:>3}  {:<width$}  {:<g6width$}  {}  {}",
                r.position,
                r.name,
                r.graph6,
                counts,
                r.aliases.join(", ")
            );
        }
        out.lines()
            .map(str::trim_end)
            .collect::<Vec<_>>()
            .join("\n")
            + "\n"
    }

    fn render_csv(&self) -> Result<String, IoError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "position", "name", "graph6", "key", "k3", "n3", "k4", "n4", "l4", "aliases",
        ])?;
        for r in &self.types {
            let counts: [String; 5] = match r.profile {
                Some(p) => [p.k3, p.n3, p.k4, p.n4, p.l4].map(|c| c.to_string()),
                None => Default::default(),
            };
            let mut record = vec![
                r.position.to_string(),
                r.name.clone(),
                r.graph6.clone(),
                r.key.clone(),
            ];
            record.extend(counts);
            record.push(r.aliases.join(";"));
            w.write_record(&record)?;
        }
        let bytes = w.into_inner().map_err(|e| IoError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// Path of the cached catalog for `n` under `dir`.
pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("catalog-n{n}-v{SCHEMA_VERSION}.json"))
}

pub fn save_catalog(dir: &Path, cat: &Catalog) -> Result<PathBuf, IoError> {
    fs::create_dir_all(dir)?;
    let path = cache_path(dir, cat.n());
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, Report::from_catalog(cat).render(ReportFormat::Json)?)?;
    fs::rename(&tmp, &path)?;
    Ok(path)
}

/// `Ok(None)` when no cache file exists for `n`.
pub fn load_catalog(dir: &Path, n: usize) -> Result<Option<Catalog>, IoError> {
    let path = cache_path(dir, n);
    let text = match fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(None),
        Err(e) => return Err(e.into()),
    };
    let report: Report = serde_json::from_str(&text)?;
    if report.n != n {
        return Err(IoError::Schema(format!(
            "{} holds n = {}, expected {n}",
            path.display(),
            report.n
        )));
    }
    report.to_catalog().map(Some)
}
