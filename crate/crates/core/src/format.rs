//! Line-oriented text format for all five instance kinds.
//!
//! ```text
//! p (mbcut|skew|dfas|chain|wcut) <n> <m> <ℓ>
//! b <k_1> … <k_ℓ>
//! x <v> …            y <v> …
//! t <s_i> <t_i>
//! s <s> <t>          k <k>          w <w>
//! a <tail> <head> [c <color> …] [wt <weight>]
//! q <edge-id> …
//! ```
//!
//! `#` starts a comment. For `chain` the header's last field is the path
//! length bound; for `wcut` it must be 0.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Budgets, ColorSet, ColoredDigraph, Edge, EdgeId, Vertex, MAX_COLORS};
use crate::instance::{ChainInstance, CutInstance, DfasInstance, Instance, SkewInstance, WeightedCutInstance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    Cut,
    Skew,
    Dfas,
    Chain,
    Weighted,
}

struct Header {
    kind: Kind,
    n: usize,
    m: usize,
    ell: usize,
}

#[derive(Default)]
struct Records {
    budgets: Option<(usize, Vec<i64>)>,
    x: Vec<usize>,
    y: Vec<usize>,
    pairs: Vec<(usize, usize)>,
    st: Option<(usize, (usize, usize))>,
    k: Option<(usize, u64)>,
    w: Option<(usize, u64)>,
    edges: Vec<(usize, Edge, Option<u64>)>,
    paths: Vec<(usize, Vec<usize>)>,
}

fn int<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::syntax(line, format!("expected a non-negative integer, found `{tok}`")))
}

fn vertex(tok: &str, line: usize, n: usize) -> Result<usize> {
    let v: usize = int(tok, line)?;
    if v == 0 || v > n {
        return Err(Error::syntax(line, format!("vertex {v} not in 1..={n}")));
    }
    Ok(v)
}

fn once<T>(slot: &mut Option<(usize, T)>, value: T, line: usize, what: &str) -> Result<()> {
    if let Some((prev, _)) = slot {
        return Err(Error::syntax(
            line,
            format!("duplicate `{what}` line (first on line {prev})"),
        ));
    }
    *slot = Some((line, value));
    Ok(())
}

/// Parses an instance of any kind from its text form.
pub fn parse_instance(input: &[u8]) -> Result<Instance> {
    let text = std::str::from_utf8(input).map_err(|e| Error::syntax(0, format!("input is not UTF-8: {e}")))?;
    parse_str(text)
}

pub fn parse_str(text: &str) -> Result<Instance> {
    let mut header: Option<Header> = None;
    let mut rec = Records::default();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let toks: Vec<&str> = content.split_whitespace().collect();
        let Some((&tag, args)) = toks.split_first() else {
            continue;
        };
        if tag != "p" && header.is_none() {
            return Err(Error::syntax(line, "expected `p` header before any other record"));
        }
        match tag {
            "p" => {
                if header.is_some() {
                    return Err(Error::syntax(line, "duplicate `p` header"));
                }
                if args.len() != 4 {
                    return Err(Error::syntax(line, "header must be `p <kind> <n> <m> <ℓ>`"));
                }
                let kind = match args[0] {
                    "mbcut" => Kind::Cut,
                    "skew" => Kind::Skew,
                    "dfas" => Kind::Dfas,
                    "chain" => Kind::Chain,
                    "wcut" => Kind::Weighted,
                    other => return Err(Error::syntax(line, format!("unknown problem kind `{other}`"))),
                };
                let ell: usize = int(args[3], line)?;
                if kind != Kind::Chain && ell > MAX_COLORS {
                    return Err(Error::syntax(
                        line,
                        format!("ℓ={ell} exceeds the maximum of {MAX_COLORS}"),
                    ));
                }
                if kind == Kind::Weighted && ell != 0 {
                    return Err(Error::syntax(line, "wcut instances have ℓ=0"));
                }
                header = Some(Header {
                    kind,
                    n: int(args[1], line)?,
                    m: int(args[2], line)?,
                    ell,
                });
            }
            "b" => {
                let vals = args.iter().map(|t| int::<i64>(t, line)).collect::<Result<Vec<_>>>()?;
                once(&mut rec.budgets, vals, line, "b")?;
            }
            "x" | "y" => {
                let h = header.as_ref().unwrap();
                if args.is_empty() {
                    return Err(Error::syntax(line, format!("`{tag}` needs at least one vertex")));
                }
                for a in args {
                    let v = vertex(a, line, h.n)?;
                    if tag == "x" {
                        rec.x.push(v)
                    } else {
                        rec.y.push(v)
                    }
                }
            }
            "t" => {
                let h = header.as_ref().unwrap();
                if args.len() != 2 {
                    return Err(Error::syntax(line, "terminal pair must be `t <s> <t>`"));
                }
                rec.pairs
                    .push((vertex(args[0], line, h.n)?, vertex(args[1], line, h.n)?));
            }
            "s" => {
                let h = header.as_ref().unwrap();
                if args.len() != 2 {
                    return Err(Error::syntax(line, "terminals must be `s <s> <t>`"));
                }
                let st = (vertex(args[0], line, h.n)?, vertex(args[1], line, h.n)?);
                once(&mut rec.st, st, line, "s")?;
            }
            "k" | "w" => {
                if args.len() != 1 {
                    return Err(Error::syntax(line, format!("`{tag}` takes exactly one integer")));
                }
                let v: u64 = int(args[0], line)?;
                let slot = if tag == "k" { &mut rec.k } else { &mut rec.w };
                once(slot, v, line, tag)?;
            }
            "a" => {
                let h = header.as_ref().unwrap();
                rec.edges.push(parse_edge(args, line, h)?);
            }
            "q" => {
                if args.is_empty() {
                    return Err(Error::syntax(line, "`q` needs at least one edge id"));
                }
                let ids = args.iter().map(|t| int::<usize>(t, line)).collect::<Result<Vec<_>>>()?;
                rec.paths.push((line, ids));
            }
            other => return Err(Error::syntax(line, format!("unknown record `{other}`"))),
        }
    }

    let header = header.ok_or_else(|| Error::syntax(0, "missing `p` header"))?;
    assemble(header, rec)
}

fn parse_edge(args: &[&str], line: usize, h: &Header) -> Result<(usize, Edge, Option<u64>)> {
    if args.len() < 2 {
        return Err(Error::syntax(
            line,
            "edge must be `a <tail> <head> [c <color> …] [wt <w>]`",
        ));
    }
    let tail = vertex(args[0], line, h.n)?;
    let head = vertex(args[1], line, h.n)?;
    let mut colors = Vec::new();
    let mut weight = None;
    let mut rest = &args[2..];
    if rest.first() == Some(&"c") {
        rest = &rest[1..];
        while let Some(&tok) = rest.first() {
            if tok == "wt" {
                break;
            }
            let c: usize = int(tok, line)?;
            let limit = if h.kind == Kind::Chain { 0 } else { h.ell };
            if c == 0 || c > limit {
                return Err(Error::syntax(line, format!("color {c} exceeds ℓ={limit}")));
            }
            colors.push(c);
            rest = &rest[1..];
        }
        if colors.is_empty() {
            return Err(Error::syntax(line, "`c` must be followed by at least one color"));
        }
    }
    if rest.first() == Some(&"wt") {
        if rest.len() < 2 {
            return Err(Error::syntax(line, "`wt` must be followed by a weight"));
        }
        weight = Some(int(rest[1], line)?);
        rest = &rest[2..];
    }
    if let Some(tok) = rest.first() {
        return Err(Error::syntax(line, format!("trailing garbage `{tok}`")));
    }
    let edge = Edge {
        tail: Vertex::from_number(tail),
        head: Vertex::from_number(head),
        colors: ColorSet::from_colors(colors),
    };
    Ok((line, edge, weight))
}

fn require<T>(slot: Option<(usize, T)>, what: &str) -> Result<T> {
    slot.map(|(_, v)| v)
        .ok_or_else(|| Error::syntax(0, format!("missing `{what}` record")))
}

fn forbid(present: bool, what: &str, kind: &str) -> Result<()> {
    if present {
        Err(Error::syntax(
            0,
            format!("`{what}` records are not allowed in {kind} instances"),
        ))
    } else {
        Ok(())
    }
}

fn assemble(h: Header, rec: Records) -> Result<Instance> {
    if rec.edges.len() != h.m {
        return Err(Error::syntax(
            0,
            format!("header declares m={} but {} edges given", h.m, rec.edges.len()),
        ));
    }
    let weighted = h.kind == Kind::Weighted;
    if !weighted {
        if let Some((line, _, _)) = rec.edges.iter().find(|(_, _, w)| w.is_some()) {
            return Err(Error::syntax(*line, "`wt` is only allowed in wcut instances"));
        }
    }
    let weights: Vec<u64> = rec.edges.iter().map(|(_, _, w)| w.unwrap_or(1)).collect();
    let ell = match h.kind {
        Kind::Chain | Kind::Weighted => 0,
        _ => h.ell,
    };
    let graph = ColoredDigraph::new(h.n, ell, rec.edges.into_iter().map(|(_, e, _)| e).collect())?;
    let vs = |list: &[usize]| list.iter().map(|&v| Vertex::from_number(v)).collect::<Vec<_>>();
    let kind_name = match h.kind {
        Kind::Cut => "mbcut",
        Kind::Skew => "skew",
        Kind::Dfas => "dfas",
        Kind::Chain => "chain",
        Kind::Weighted => "wcut",
    };

    match h.kind {
        Kind::Cut | Kind::Skew | Kind::Dfas => {
            forbid(
                rec.st.is_some() || rec.k.is_some() || rec.w.is_some(),
                "s/k/w",
                kind_name,
            )?;
            forbid(!rec.paths.is_empty(), "q", kind_name)?;
            let budgets = Budgets::new(require(rec.budgets, "b")?);
            budgets.validate_top_level(h.ell)?;
            match h.kind {
                Kind::Cut => {
                    forbid(!rec.pairs.is_empty(), "t", kind_name)?;
                    Ok(Instance::Cut(CutInstance::new(graph, vs(&rec.x), vs(&rec.y), budgets)?))
                }
                Kind::Skew => {
                    forbid(!rec.x.is_empty() || !rec.y.is_empty(), "x/y", kind_name)?;
                    let pairs = rec
                        .pairs
                        .iter()
                        .map(|&(s, t)| (Vertex::from_number(s), Vertex::from_number(t)))
                        .collect();
                    Ok(Instance::Skew(SkewInstance::new(graph, budgets, pairs)?))
                }
                _ => {
                    forbid(
                        !rec.x.is_empty() || !rec.y.is_empty() || !rec.pairs.is_empty(),
                        "x/y/t",
                        kind_name,
                    )?;
                    Ok(Instance::Dfas(DfasInstance::new(graph, budgets)?))
                }
            }
        }
        Kind::Chain => {
            forbid(rec.budgets.is_some() || rec.w.is_some(), "b/w", kind_name)?;
            forbid(
                !rec.x.is_empty() || !rec.y.is_empty() || !rec.pairs.is_empty(),
                "x/y/t",
                kind_name,
            )?;
            let (s, t) = require(rec.st, "s")?;
            let k = require(rec.k, "k")? as usize;
            let mut paths = Vec::new();
            for (line, ids) in rec.paths {
                let mut path = Vec::new();
                for id in ids {
                    if id == 0 || id > h.m {
                        return Err(Error::syntax(line, format!("edge id {id} not in 1..={}", h.m)));
                    }
                    path.push(EdgeId::from_number(id));
                }
                paths.push(path);
            }
            Ok(Instance::Chain(ChainInstance::new(
                graph,
                Vertex::from_number(s),
                Vertex::from_number(t),
                paths,
                h.ell,
                k,
            )?))
        }
        Kind::Weighted => {
            forbid(rec.budgets.is_some(), "b", kind_name)?;
            forbid(!rec.paths.is_empty(), "q", kind_name)?;
            forbid(
                !rec.x.is_empty() || !rec.y.is_empty() || !rec.pairs.is_empty(),
                "x/y/t",
                kind_name,
            )?;
            let (s, t) = require(rec.st, "s")?;
            let k = require(rec.k, "k")? as usize;
            let w = require(rec.w, "w")?;
            Ok(Instance::Weighted(WeightedCutInstance::new(
                graph,
                weights,
                Vertex::from_number(s),
                Vertex::from_number(t),
                k,
                w,
            )?))
        }
    }
}

fn write_edges(out: &mut String, graph: &ColoredDigraph, weights: Option<&[u64]>) {
    for (i, e) in graph.edges().iter().enumerate() {
        write!(out, "a {} {}", e.tail.number(), e.head.number()).unwrap();
        if !e.colors.is_empty() {
            out.push_str(" c");
            for c in e.colors.iter() {
                write!(out, " {c}").unwrap();
            }
        }
        if let Some(ws) = weights {
            write!(out, " wt {}", ws[i]).unwrap();
        }
        out.push('\n');
    }
}

fn join<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn budget_line(b: &Budgets) -> String {
    if b.is_empty() {
        "b\n".to_string()
    } else {
        format!("b {}\n", join(&b.0))
    }
}

/// Canonical text form; re-parses to an identical instance.
pub fn write_instance(instance: &Instance) -> String {
    let mut out = String::new();
    let g = instance.graph();
    match instance {
        Instance::Cut(i) => {
            writeln!(out, "p mbcut {} {} {}", g.num_vertices(), g.num_edges(), g.num_colors()).unwrap();
            out.push_str(&budget_line(&i.budgets));
            writeln!(out, "x {}", join(i.x.iter().map(|v| v.number()))).unwrap();
            writeln!(out, "y {}", join(i.y.iter().map(|v| v.number()))).unwrap();
            write_edges(&mut out, g, None);
        }
        Instance::Skew(i) => {
            writeln!(out, "p skew {} {} {}", g.num_vertices(), g.num_edges(), g.num_colors()).unwrap();
            out.push_str(&budget_line(&i.budgets));
            for (s, t) in &i.pairs {
                writeln!(out, "t {} {}", s.number(), t.number()).unwrap();
            }
            write_edges(&mut out, g, None);
        }
        Instance::Dfas(i) => {
            writeln!(out, "p dfas {} {} {}", g.num_vertices(), g.num_edges(), g.num_colors()).unwrap();
            out.push_str(&budget_line(&i.budgets));
            write_edges(&mut out, g, None);
        }
        Instance::Chain(i) => {
            writeln!(out, "p chain {} {} {}", g.num_vertices(), g.num_edges(), i.max_path_len).unwrap();
            writeln!(out, "s {} {}", i.s.number(), i.t.number()).unwrap();
            writeln!(out, "k {}", i.k).unwrap();
            write_edges(&mut out, g, None);
            for p in &i.paths {
                writeln!(out, "q {}", join(p.iter().map(|e| e.number()))).unwrap();
            }
        }
        Instance::Weighted(i) => {
            writeln!(out, "p wcut {} {} 0", g.num_vertices(), g.num_edges()).unwrap();
            writeln!(out, "s {} {}", i.s.number(), i.t.number()).unwrap();
            writeln!(out, "k {}", i.k).unwrap();
            writeln!(out, "w {}", i.w).unwrap();
            write_edges(&mut out, g, Some(&i.weights));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_mbcut_file() {
        let inst = parse_str("p mbcut 2 1 1\nb 1\nx 1\ny 2\na 1 2 c 1\n").unwrap();
        let Instance::Cut(cut) = &inst else {
            panic!("wrong kind")
        };
        assert_eq!(cut.graph.num_edges(), 1);
        assert!(cut.graph.edges()[0].colors.contains(1));
        assert_eq!(cut.budgets.0, vec![1]);
        assert_eq!(write_instance(&inst), "p mbcut 2 1 1\nb 1\nx 1\ny 2\na 1 2 c 1\n");
    }

    #[test]
    fn color_out_of_range() {
        let err = parse_str("p mbcut 2 1 2\nb 1 1\nx 1\ny 2\na 1 2 c 3\n").unwrap_err();
        assert!(err.to_string().contains("color 3 exceeds ℓ=2"), "{err}");
        assert!(matches!(err, Error::Syntax { line: 5, .. }));
    }

    #[test]
    fn chain_path_line() {
        let text = "p chain 3 2 2\ns 1 3\nk 1\na 1 2\na 2 3\nq 1 2\n";
        let inst = parse_str(text).unwrap();
        assert_eq!(write_instance(&inst), text);
    }

    #[test]
    fn rejects_garbage_and_overlap() {
        assert!(parse_str("p mbcut 2 1 1\nb 1\nx 1\ny 2\na 1 2 c 1 zz\n").is_err());
        assert!(parse_str("p mbcut 2 1 1\nb 1\nx 1 2\ny 2\na 1 2 c 1\n").is_err());
        assert!(parse_str("p mbcut 2 1 1\nb 0\nx 1\ny 2\na 1 2 c 1\n").is_err());
        assert!(parse_str("p mbcut 2 2 1\nb 1\nx 1\ny 2\na 1 2 c 1\n").is_err());
        assert!(parse_str("b 1\np mbcut 2 1 1\n").is_err());
    }

    #[test]
    fn comments_and_weights() {
        let inst = parse_str("# weighted\np wcut 2 1 0\ns 1 2 # terminals\nk 1\nw 3\na 1 2 wt 3\n").unwrap();
        let Instance::Weighted(w) = inst else { panic!() };
        assert_eq!(w.weights, vec![3]);
        assert_eq!(w.w, 3);
    }
}
