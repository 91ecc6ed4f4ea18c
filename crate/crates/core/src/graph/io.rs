//! Edge-list interchange format: header "n e", then e lines "u v" with
//! 0 <= u < v < n. The reader is strict: duplicate pairs, loops, reversed
//! pairs, out-of-range indices, bad counts, and trailing garbage are all
//! rejected.

use crate::error::{Error, Result};

use super::{Graph, MAX_EDGES};

pub fn parse_edge_list(input: &str) -> Result<Graph> {
    let mut lines = input.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::domain("empty edge-list input"))?;
    let (n, e) = parse_pair::<u32, u64>(header, "header")?;
    if e > MAX_EDGES {
        return Err(Error::resource(format!(
            "edge count {e} exceeds cap {MAX_EDGES}"
        )));
    }
    let mut g = Graph::empty(n)?;
    for i in 0..e {
        let line = lines
            .next()
            .ok_or_else(|| Error::domain(format!("expected {e} edge lines, got {i}")))?;
        let (u, v) = parse_pair::<u32, u32>(line, "edge line")?;
        g.check_new_edge(u, v)?;
        g.push_edge(u, v);
    }
    if let Some(extra) = lines.next() {
        return Err(Error::domain(format!(
            "trailing content after {e} edges: {extra:?}"
        )));
    }
    g.sort_adjacency();
    Ok(g)
}

pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Whitespace-separated unsigned integers, the format of order and
/// position files. Any whitespace separates (spaces, tabs, newlines);
/// an all-whitespace or empty input is the empty list; anything that is
/// not a decimal u64 is rejected.
pub fn parse_index_list(input: &str) -> Result<Vec<u64>> {
    input
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u64>()
                .map_err(|_| Error::domain(format!("bad index {tok:?} (expected a decimal u64)")))
        })
        .collect()
}

fn parse_pair<A: std::str::FromStr, B: std::str::FromStr>(line: &str, what: &str) -> Result<(A, B)> {
    let mut it = line.split(' ');
    let bad = || Error::domain(format!("malformed {what}: {line:?} (expected \"a b\")"));
    let a = it.next().ok_or_else(bad)?.parse::<A>().map_err(|_| bad())?;
    let b = it.next().ok_or_else(bad)?.parse::<B>().map_err(|_| bad())?;
    if it.next().is_some() {
        return Err(bad());
    }
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::power_path;

    #[test]
    fn round_trip() {
        let g = power_path(7, 2).unwrap();
        let text = format_edge_list(&g);
        assert!(text.starts_with("7 11\n0 1\n0 2\n"));
        let back = parse_edge_list(&text).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn rejects_malformed() {
        for bad in [
            "",                       // no header
            "3",                      // header missing edge count
            "3 1\n",                  // missing edge line
            "3 1\n0 1\n1 2\n",        // extra edge line
            "3 1\n0 1\nx",            // trailing garbage
            "3 1\n1 1\n",             // loop
            "3 1\n2 1\n",             // reversed
            "3 1\n0 3\n",             // out of range
            "3 2\n0 1\n0 1\n",        // duplicate
            "3 1\n0  1\n",            // double space
            "3 1\n 0 1\n",            // leading space
            "3 1\n0 1 2\n",           // three tokens
            "3 1\n0 -1\n",            // negative
            "3 1\n0 1.0\n",           // not an integer
        ] {
            assert!(parse_edge_list(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn empty_graph_round_trip() {
        let g = Graph::empty(4).unwrap();
        let text = format_edge_list(&g);
        assert_eq!(text, "4 0\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn no_final_newline_accepted() {
        assert!(parse_edge_list("2 1\n0 1").is_ok());
    }

    #[test]
    fn index_lists_accept_any_whitespace_shape() {
        assert_eq!(parse_index_list("3 1 4\n1 5").unwrap(), vec![3, 1, 4, 1, 5]);
        assert_eq!(parse_index_list("  7\t8  \n").unwrap(), vec![7, 8]);
        assert_eq!(parse_index_list("").unwrap(), Vec::<u64>::new());
        assert_eq!(parse_index_list("  \n \t").unwrap(), Vec::<u64>::new());
        for bad in ["1 x 2", "-1", "1.5", "0x10", "99999999999999999999"] {
            assert!(parse_index_list(bad).is_err(), "accepted {bad:?}");
        }
    }
}
