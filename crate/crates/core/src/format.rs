//! Line-based text formats for graphs, instances, labellings and orders.
//!
//! Graphs use a DIMACS-style block with 1-based vertices:
//!
//! ```text
//! c comment
//! p edge 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! An instance appends `k <v> <int>` / `u <v> <int>` lines (or
//! `k default <int>` / `u default <int>`) and one `sense dominate|pack`.
//! A labelled instance appends `label <base> <step> <levels>`, then
//! `t <v> <int|F>` (default `F`, or `t default ...`) and quota lines
//! `k <v> <int>` / `k default <int>`. An order is a single line
//! `order 3 1 2`. Lines starting with `c` or `#` are comments everywhere.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{GenInstance, Sense};
use crate::labelled::{Label, LabelledInstance};
use crate::ordering::{EliminationOrder, OrderKind};
use crate::scalar::Weight;

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn number<T: FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T> {
    let token = token.ok_or_else(|| err(line, format!("missing {what}")))?;
    token.parse().map_err(|_| err(line, format!("invalid {what} `{token}`")))
}

fn is_comment(tokens: &[&str]) -> bool {
    match tokens.first() {
        None => true,
        Some(t) => *t == "c" || t.starts_with('#'),
    }
}

/// Non-comment lines as `(1-based line number, tokens)`.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, t)| !is_comment(t))
}

#[derive(Default)]
struct GraphReader {
    header: Option<(usize, usize, usize)>,
    edges: Vec<(usize, usize)>,
    seen: HashSet<(usize, usize)>,
}

impl GraphReader {
    /// Consumes a graph line; returns false for lines it does not own.
    fn feed(&mut self, line: usize, t: &[&str]) -> Result<bool> {
        match t[0] {
            "p" => {
                if self.header.is_some() {
                    return Err(err(line, "second `p` header"));
                }
                if t.get(1) != Some(&"edge") || t.len() != 4 {
                    return Err(err(line, "expected `p edge <n> <m>`"));
                }
                let n = number(line, t.get(2).copied(), "vertex count")?;
                let m = number(line, t.get(3).copied(), "edge count")?;
                self.header = Some((line, n, m));
                Ok(true)
            }
            "e" => {
                let Some((_, n, _)) = self.header else {
                    return Err(err(line, "edge before `p` header"));
                };
                if t.len() != 3 {
                    return Err(err(line, "expected `e <u> <v>`"));
                }
                let a = vertex(line, t[1], n)?;
                let b = vertex(line, t[2], n)?;
                if a == b {
                    return Err(err(line, format!("self-loop on vertex {}", a + 1)));
                }
                if !self.seen.insert((a.min(b), a.max(b))) {
                    return Err(err(line, format!("duplicate edge {} {}", a + 1, b + 1)));
                }
                self.edges.push((a, b));
                Ok(true)
            }
            _ => Ok(false),
        }
    }

    fn finish(self, last_line: usize) -> Result<Graph> {
        let (line, n, m) = self.header.ok_or_else(|| err(last_line, "missing `p edge` header"))?;
        if self.edges.len() != m {
            return Err(err(line, format!("header declares {m} edges, found {}", self.edges.len())));
        }
        Graph::from_edges(n, self.edges)
    }

    fn n(&self) -> Option<usize> {
        self.header.map(|(_, n, _)| n)
    }
}

/// 1-based vertex token to 0-based index.
fn vertex(line: usize, token: &str, n: usize) -> Result<usize> {
    let v: usize = number(line, Some(token), "vertex")?;
    if v == 0 || v > n {
        return Err(err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut reader = GraphReader::default();
    let mut last = 0;
    for (line, t) in lines(text) {
        last = line;
        if !reader.feed(line, &t)? {
            return Err(err(line, format!("unexpected `{}` line in graph", t[0])));
        }
    }
    reader.finish(last)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (a, b) in g.edges() {
        let _ = writeln!(out, "e {} {}", a + 1, b + 1);
    }
    out
}

/// Per-vertex values with an optional default, filled in at the end.
struct VertexTable<T> {
    key: &'static str,
    values: Vec<Option<T>>,
    default: Option<T>,
}

impl<T: Clone + FromStr> VertexTable<T> {
    fn new(key: &'static str) -> Self {
        Self { key, values: Vec::new(), default: None }
    }

    fn feed(&mut self, line: usize, t: &[&str], n: Option<usize>) -> Result<()> {
        let n = n.ok_or_else(|| err(line, format!("`{}` line before `p` header", self.key)))?;
        self.values.resize(n, None);
        if t.len() != 3 {
            return Err(err(line, format!("expected `{} <v> <value>`", self.key)));
        }
        let value: T = number(line, Some(t[2]), self.key)?;
        if t[1] == "default" {
            if self.default.replace(value).is_some() {
                return Err(err(line, format!("second `{} default`", self.key)));
            }
        } else {
            let v = vertex(line, t[1], n)?;
            if self.values[v].replace(value).is_some() {
                return Err(err(line, format!("`{}` given twice for vertex {}", self.key, v + 1)));
            }
        }
        Ok(())
    }

    fn finish(mut self, n: usize, last_line: usize, fallback: Option<T>) -> Result<Vec<T>> {
        self.values.resize(n, None);
        let default = self.default.or(fallback);
        self.values
            .into_iter()
            .enumerate()
            .map(|(v, x)| {
                x.or_else(|| default.clone()).ok_or_else(|| {
                    err(last_line, format!("no `{}` for vertex {} and no default", self.key, v + 1))
                })
            })
            .collect()
    }
}

pub fn parse_instance<W: Weight>(text: &str) -> Result<GenInstance<W>> {
    let mut graph = GraphReader::default();
    let mut k = VertexTable::<W>::new("k");
    let mut u = VertexTable::<W>::new("u");
    let mut sense = None;
    let mut last = 0;
    for (line, t) in lines(text) {
        last = line;
        if graph.feed(line, &t)? {
            continue;
        }
        match t[0] {
            "k" => k.feed(line, &t, graph.n())?,
            "u" => u.feed(line, &t, graph.n())?,
            "sense" => {
                if t.len() != 2 {
                    return Err(err(line, "expected `sense dominate|pack`"));
                }
                let s: Sense = t[1].parse().map_err(|_| err(line, format!("unknown sense `{}`", t[1])))?;
                if sense.replace(s).is_some() {
                    return Err(err(line, "second `sense` line"));
                }
            }
            other => return Err(err(line, format!("unexpected `{other}` line in instance"))),
        }
    }
    let sense = sense.ok_or_else(|| err(last, "missing `sense` line"))?;
    let graph = graph.finish(last)?;
    let n = graph.n();
    let k = k.finish(n, last, None)?;
    let u = u.finish(n, last, None)?;
    GenInstance::new(graph, k, u, sense)
}

fn write_values<T: PartialEq + std::fmt::Display>(out: &mut String, key: &str, values: &[T]) {
    match values.first() {
        Some(first) if values.iter().all(|x| x == first) => {
            let _ = writeln!(out, "{key} default {first}");
        }
        _ => {
            for (v, x) in values.iter().enumerate() {
                let _ = writeln!(out, "{key} {} {x}", v + 1);
            }
        }
    }
}

pub fn serialize_instance<W: Weight>(inst: &GenInstance<W>) -> String {
    let mut out = serialize_graph(inst.graph());
    write_values(&mut out, "k", inst.k());
    write_values(&mut out, "u", inst.u());
    let _ = writeln!(out, "sense {}", inst.sense());
    out
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "F" {
            return Ok(Label::Free);
        }
        s.parse()
            .map(Label::Fixed)
            .map_err(|_| Error::InvalidInput(format!("invalid label `{s}`")))
    }
}

pub fn parse_labelled(text: &str) -> Result<LabelledInstance> {
    let mut graph = GraphReader::default();
    let mut labels = VertexTable::<Label>::new("t");
    let mut quota = VertexTable::<i64>::new("k");
    let mut range = None;
    let mut last = 0;
    for (line, t) in lines(text) {
        last = line;
        if graph.feed(line, &t)? {
            continue;
        }
        match t[0] {
            "t" => labels.feed(line, &t, graph.n())?,
            "k" => quota.feed(line, &t, graph.n())?,
            "label" => {
                if t.len() != 4 {
                    return Err(err(line, "expected `label <base> <step> <levels>`"));
                }
                let base: i64 = number(line, Some(t[1]), "base")?;
                let step: i64 = number(line, Some(t[2]), "step")?;
                let levels: i64 = number(line, Some(t[3]), "levels")?;
                if range.replace((base, step, levels)).is_some() {
                    return Err(err(line, "second `label` line"));
                }
            }
            other => return Err(err(line, format!("unexpected `{other}` line in labelled instance"))),
        }
    }
    let (base, step, levels) = range.ok_or_else(|| err(last, "missing `label` line"))?;
    let graph = graph.finish(last)?;
    let n = graph.n();
    let labels = labels.finish(n, last, Some(Label::Free))?;
    let quota = quota.finish(n, last, None)?;
    LabelledInstance::new(graph, base, step, levels, labels, quota)
}

pub fn serialize_labelled(l: &LabelledInstance) -> String {
    let mut out = serialize_graph(l.graph());
    let _ = writeln!(out, "label {} {} {}", l.base(), l.step(), l.levels());
    write_values(&mut out, "t", l.labels());
    write_values(&mut out, "k", l.quota());
    out
}

pub fn parse_order(text: &str, kind: OrderKind) -> Result<EliminationOrder> {
    let mut found = None;
    for (line, t) in lines(text) {
        if t[0] != "order" {
            return Err(err(line, format!("unexpected `{}` line in order file", t[0])));
        }
        if found.is_some() {
            return Err(err(line, "second `order` line"));
        }
        let vs = t[1..]
            .iter()
            .map(|tok| {
                let v: usize = number(line, Some(tok), "vertex")?;
                v.checked_sub(1).ok_or_else(|| err(line, "vertices are 1-based"))
            })
            .collect::<Result<Vec<_>>>()?;
        found = Some((line, vs));
    }
    let (line, vs) = found.ok_or_else(|| err(0, "missing `order` line"))?;
    EliminationOrder::new(vs, kind).map_err(|e| err(line, e.to_string()))
}

pub fn serialize_order(o: &EliminationOrder) -> String {
    let mut out = String::from("order");
    for v in o.vertices() {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
    out
}
