//! Text formats: the `n m` edge list, graph6 and DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "el" => Ok(Format::EdgeList),
            "graph6" | "g6" => Ok(Format::Graph6),
            other => Err(Error::InvalidInput(format!("unknown graph format '{other}'"))),
        }
    }
}

pub fn parse_graph(text: &str, format: Format) -> Result<Graph> {
    match format {
        Format::EdgeList => parse_edgelist(text),
        Format::Graph6 => parse_graph6(text),
    }
}

/// Parses the `n m` header followed by `m` lines of `u v` (0-based).
/// Blank lines are ignored.
pub fn parse_edgelist(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing 'n m' header"))?;
    let [n, m] = two_numbers(hline, header)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (lineno, line) in lines {
        let [u, v] = two_numbers(lineno, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(lineno, format!("vertex out of range in '{line}'")));
        }
        if u == v {
            return Err(Error::parse(lineno, format!("self-loop at vertex {u}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(lineno, format!("duplicate edge {u}-{v}")));
        }
        g.insert(u, v);
        count += 1;
    }
    if count != m {
        return Err(Error::parse(hline, format!("header announces {m} edges, found {count}")));
    }
    Ok(g)
}

fn two_numbers(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize> {
        it.next()
            .ok_or_else(|| Error::parse(lineno, format!("expected two integers in '{line}'")))?
            .parse()
            .map_err(|_| Error::parse(lineno, format!("bad integer in '{line}'")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::parse(lineno, format!("trailing tokens in '{line}'")));
    }
    Ok(pair)
}

pub fn to_edgelist(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

/// Parses a single graph6 string (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::parse(1, "empty graph6 input"))?;
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::parse(1, format!("invalid graph6 byte {b:#x}")));
    }
    let data: Vec<u8> = bytes.iter().map(|b| b - 63).collect();

    let (n, rest) = match data.as_slice() {
        [] => return Err(Error::parse(1, "empty graph6 string")),
        [63, 63, tail @ ..] => {
            if tail.len() < 6 {
                return Err(Error::parse(1, "truncated graph6 size field"));
            }
            (tail[..6].iter().fold(0usize, |a, &b| (a << 6) | b as usize), &tail[6..])
        }
        [63, tail @ ..] => {
            if tail.len() < 3 {
                return Err(Error::parse(1, "truncated graph6 size field"));
            }
            (tail[..3].iter().fold(0usize, |a, &b| (a << 6) | b as usize), &tail[3..])
        }
        [b, tail @ ..] => (*b as usize, tail),
    };

    let bits = n * n.saturating_sub(1) / 2;
    if rest.len() != bits.div_ceil(6) {
        return Err(Error::parse(
            1,
            format!("graph6 body has {} bytes, expected {}", rest.len(), bits.div_ceil(6)),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if rest[k / 6] >> (5 - k % 6) & 1 == 1 {
                g.insert(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.push(63);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|s| ((n >> (6 * s)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push(acc << (6 - k));
    }
    out.iter().map(|&b| (b + 63) as char).collect()
}

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edgelist_examples() {
        let k3 = parse_edgelist("3 3\n0 1\n1 2\n2 0").unwrap();
        assert_eq!(k3, Graph::complete(3));
        let single = parse_edgelist("1 0").unwrap();
        assert_eq!(single.n(), 1);
        assert_eq!(single.m(), 0);
        match parse_edgelist("2 1\n0 0") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("expected self-loop parse error, got {other:?}"),
        }
    }

    #[test]
    fn edgelist_errors_carry_line_numbers() {
        assert!(matches!(parse_edgelist("3 2\n0 1\n1 0"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edgelist("3 1\n0 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edgelist("3 2\n0 1"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_edgelist("3 1\n0 5"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_edgelist(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn graph6_known_strings() {
        // Reference encodings from the public graph6 description.
        assert_eq!(parse_graph6("A_").unwrap(), Graph::path(2));
        assert_eq!(to_graph6(&Graph::complete(4)), "C~");
        assert_eq!(to_graph6(&Graph::cycle(5)), "Dhc");
        let petersen = parse_graph6("IheA@GUAo").unwrap();
        assert_eq!(petersen.n(), 10);
        assert_eq!(petersen.m(), 15);
        assert!((0..10).all(|v| petersen.degree(v) == 3));
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\u{7f}").is_err());
    }

    #[test]
    fn graph6_large_header() {
        let g = Graph::path(70);
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn dot_lists_nodes_and_edges() {
        let dot = to_dot(&Graph::path(2));
        assert_eq!(dot, "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (0usize..12).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
                move |bits| {
                    let mut g = Graph::new(n);
                    let mut k = 0;
                    for j in 1..n {
                        for i in 0..j {
                            if bits[k] {
                                g.insert(i, j);
                            }
                            k += 1;
                        }
                    }
                    g
                },
            )
        })
    }

    proptest! {
        #[test]
        fn formats_round_trip(g in arb_graph()) {
            prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edgelist(&to_edgelist(&g)).unwrap(), g);
        }
    }
}
