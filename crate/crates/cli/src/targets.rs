//! Target-graph specifications and colouring files.
//!
//! Targets are named on the command line in a compact grammar:
//!
//! * `P5`, `C4`, `K4` — path, cycle, complete graph on that many vertices;
//! * `K2,3` — complete multipartite with the listed part sizes;
//! * `3K2` — `m` disjoint copies of `K_n` (so `3K2` is a 3-edge matching);
//! * `edges:0-1,1-2` — explicit edge list, order inferred from the largest
//!   endpoint;
//! * `g6:...` — graph6, with the prefix making the intent explicit;
//! * any other string is tried as raw graph6 last.
//!
//! A colouring file describes a red/blue colouring of a complete graph in
//! two lines: the order `N`, then the red subgraph in graph6 on exactly
//! `N` vertices.  Blank lines and `#` comments are ignored.

use crate::graph6::parse_graph6;
use ramsey_core::{ColoredComplete, Graph};
use std::fs;
use std::path::Path;

fn parse_count(text: &str, what: &str) -> Result<usize, String> {
    text.parse::<usize>()
        .map_err(|_| format!("{what} must be a nonnegative integer, got {text:?}"))
}

fn union_of_cliques(copies: usize, order: usize) -> Result<Graph, String> {
    if copies == 0 || order == 0 {
        return Err("disjoint-union targets need positive counts on both sides".into());
    }
    let mut g = Graph::new(copies * order);
    for block in 0..copies {
        let base = block * order;
        for v in 1..order {
            for u in 0..v {
                g.add_edge(base + u, base + v);
            }
        }
    }
    Ok(g)
}

fn parse_edge_list(body: &str) -> Result<Graph, String> {
    let mut edges = Vec::new();
    let mut top = 0usize;
    for item in body.split(',') {
        let item = item.trim();
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| format!("edge {item:?} is not of the form u-v"))?;
        let u = parse_count(u.trim(), "edge endpoint")?;
        let v = parse_count(v.trim(), "edge endpoint")?;
        if u == v {
            return Err(format!("edge {item:?} is a self-loop"));
        }
        top = top.max(u).max(v);
        edges.push((u, v));
    }
    if edges.is_empty() {
        return Err("edge list is empty".into());
    }
    let mut g = Graph::new(top + 1);
    for (u, v) in edges {
        g.add_edge(u, v);
    }
    Ok(g)
}

fn parse_named(spec: &str) -> Option<Result<Graph, String>> {
    let split = spec.find(|c: char| !c.is_ascii_digit()).unwrap_or(spec.len());
    let (count, rest) = spec.split_at(split);
    let letter = rest.chars().next()?;
    if !matches!(letter, 'P' | 'C' | 'K') {
        return None;
    }
    let tail = &rest[1..];
    if !count.is_empty() {
        // A numeric multiplier: `3K2` = three disjoint copies of K_2.
        if letter != 'K' {
            return Some(Err(format!(
                "only complete graphs can be multiplied; {spec:?} is not mKn"
            )));
        }
        let copies = match parse_count(count, "copy count") {
            Ok(c) => c,
            Err(e) => return Some(Err(e)),
        };
        let order = match parse_count(tail, "clique order") {
            Ok(n) => n,
            Err(e) => return Some(Err(e)),
        };
        return Some(union_of_cliques(copies, order));
    }
    if letter == 'K' && tail.contains(',') {
        let mut parts = Vec::new();
        for part in tail.split(',') {
            match parse_count(part.trim(), "part size") {
                Ok(0) => return Some(Err("multipartite part sizes must be positive".into())),
                Ok(p) => parts.push(p),
                Err(e) => return Some(Err(e)),
            }
        }
        return Some(Ok(Graph::complete_multipartite(&parts)));
    }
    let n = match parse_count(tail, "order") {
        Ok(n) => n,
        Err(e) => return Some(Err(e)),
    };
    Some(match letter {
        'P' => {
            if n == 0 {
                Err("a path needs at least one vertex".into())
            } else {
                Ok(Graph::path(n))
            }
        }
        'C' => {
            if n < 3 {
                Err(format!("a cycle needs at least 3 vertices, got {n}"))
            } else {
                Ok(Graph::cycle(n))
            }
        }
        'K' => {
            if n == 0 {
                Err("a complete graph needs at least one vertex".into())
            } else {
                Ok(Graph::complete(n))
            }
        }
        _ => unreachable!(),
    })
}

/// Parses a target specification into its graph.
pub fn parse_target(spec: &str) -> Result<Graph, String> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err("target specification is empty".into());
    }
    if let Some(body) = spec.strip_prefix("g6:") {
        return parse_graph6(body).map_err(|e| format!("invalid graph6 target: {e}"));
    }
    if let Some(body) = spec.strip_prefix("edges:") {
        return parse_edge_list(body);
    }
    if let Some(result) = parse_named(spec) {
        return result.map_err(|e| format!("invalid target {spec:?}: {e}"));
    }
    parse_graph6(spec).map_err(|e| {
        format!("target {spec:?} is neither a named family (P/C/K/mKn), an edges: list, nor graph6: {e}")
    })
}

/// Reads a two-line colouring file: order, then the red subgraph in
/// graph6.  Blank lines and lines starting with `#` are skipped.
pub fn read_coloring(path: &Path) -> Result<ColoredComplete, String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read colouring file {}: {e}", path.display()))?;
    parse_coloring(&text).map_err(|e| format!("{}: {e}", path.display()))
}

/// Parses colouring-file text (see [`read_coloring`]).
pub fn parse_coloring(text: &str) -> Result<ColoredComplete, String> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|line| !line.is_empty() && !line.starts_with('#'));
    let order_line = lines.next().ok_or("missing order line")?;
    let order = parse_count(order_line, "board order")?;
    let red_line = lines.next().ok_or("missing red-subgraph line")?;
    let red = parse_graph6(red_line).map_err(|e| format!("red subgraph: {e}"))?;
    if red.order() != order {
        return Err(format!(
            "order line says {order} but the red subgraph has {} vertices",
            red.order()
        ));
    }
    if let Some(extra) = lines.next() {
        return Err(format!("unexpected extra line {extra:?}"));
    }
    Ok(ColoredComplete::from_red(red))
}

/// Renders a colouring in the file format [`read_coloring`] accepts.
pub fn write_coloring(coloring: &ColoredComplete) -> String {
    format!(
        "{}\n{}\n",
        coloring.order(),
        crate::graph6::emit_graph6(coloring.red())
    )
}
