use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A factoring: k graphs F_1..F_k on a common vertex set 0..n.
///
/// The factors need not be edge-disjoint and need not cover anything; they
/// only share the vertex set. The combined graph (the union of all factor
/// edge sets) is derived lazily and cached.
#[derive(Clone)]
pub struct Factoring {
    n: usize,
    factors: Vec<Graph>,
    combined: OnceLock<Graph>,
}

impl Factoring {
    pub fn new(factors: Vec<Graph>) -> Result<Factoring> {
        let first = factors.first().ok_or(Error::NoFactors)?;
        let n = first.n();
        for (i, f) in factors.iter().enumerate() {
            if f.n() != n {
                return Err(Error::FactorSizeMismatch {
                    index: i + 1,
                    expected: n,
                    actual: f.n(),
                });
            }
        }
        Ok(Factoring {
            n,
            factors,
            combined: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.factors.len()
    }

    pub fn factor(&self, i: usize) -> &Graph {
        &self.factors[i]
    }

    pub fn factors(&self) -> &[Graph] {
        &self.factors
    }

    /// The union graph: same vertices, edge set the union over all factors.
    pub fn combined(&self) -> &Graph {
        self.combined.get_or_init(|| {
            let mut edges = Vec::new();
            for f in &self.factors {
                edges.extend(f.edges());
            }
            Graph::from_edges(self.n, &edges).expect("factor edges are in range")
        })
    }

    /// min over factors of the factor's minimum degree.
    pub fn min_degree(&self) -> usize {
        self.factors
            .iter()
            .map(Graph::min_degree)
            .min()
            .unwrap_or(0)
    }

    /// Parse the `sdfactoring 1` text format. Diagnostics carry 1-based line
    /// numbers of the original input (comments and blank lines included).
    pub fn parse(text: &str) -> Result<Factoring> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, raw)| {
                let content = match raw.find('#') {
                    Some(pos) => &raw[..pos],
                    None => raw,
                };
                (i + 1, content.trim())
            })
            .filter(|(_, content)| !content.is_empty())
            .collect();
        let mut cursor = 0usize;
        let total_raw_lines = text.lines().count();
        let next = |cursor: &mut usize, expect: &str| -> Result<(usize, &str)> {
            match lines.get(*cursor) {
                Some(&(no, content)) => {
                    *cursor += 1;
                    Ok((no, content))
                }
                None => Err(Error::Parse {
                    line: total_raw_lines + 1,
                    msg: format!("unexpected end of file, expected {expect}"),
                }),
            }
        };

        let (line, header) = next(&mut cursor, "header 'sdfactoring 1'")?;
        if header != "sdfactoring 1" {
            return Err(Error::Parse {
                line,
                msg: format!("expected header 'sdfactoring 1', found '{header}'"),
            });
        }
        let n = parse_keyed(next(&mut cursor, "'n <count>'")?, "n")?;
        let (k_line, k_decl) = next(&mut cursor, "'k <count>'")?;
        let k = parse_keyed((k_line, k_decl), "k")?;
        if k == 0 {
            return Err(Error::Parse {
                line: k_line,
                msg: "factor count k must be at least 1".into(),
            });
        }

        let mut factors = Vec::with_capacity(k);
        for fi in 1..=k {
            let (line, decl) = next(&mut cursor, "factor header")?;
            let words: Vec<&str> = decl.split_whitespace().collect();
            let ok = words.len() == 4 && words[0] == "factor" && words[2] == "m";
            let (idx, m) = if ok {
                match (words[1].parse::<usize>(), words[3].parse::<usize>()) {
                    (Ok(a), Ok(b)) => (a, b),
                    _ => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("malformed factor header '{decl}'"),
                        })
                    }
                }
            } else {
                return Err(Error::Parse {
                    line,
                    msg: format!("expected 'factor {fi} m <count>', found '{decl}'"),
                });
            };
            if idx != fi {
                return Err(Error::Parse {
                    line,
                    msg: format!("factor index {idx} out of order, expected {fi}"),
                });
            }
            let mut edges = Vec::with_capacity(m);
            let mut seen = std::collections::HashSet::with_capacity(m);
            for _ in 0..m {
                let (line, pair) = next(&mut cursor, "an edge line 'u v'")?;
                let mut it = pair.split_whitespace();
                let (u, v) = match (it.next(), it.next(), it.next()) {
                    (Some(a), Some(b), None) => match (a.parse::<usize>(), b.parse::<usize>()) {
                        (Ok(u), Ok(v)) => (u, v),
                        _ => {
                            return Err(Error::Parse {
                                line,
                                msg: format!("malformed edge line '{pair}'"),
                            })
                        }
                    },
                    _ => {
                        return Err(Error::Parse {
                            line,
                            msg: format!("malformed edge line '{pair}'"),
                        })
                    }
                };
                if u >= n || v >= n {
                    return Err(Error::Parse {
                        line,
                        msg: format!("vertex {} out of range (n = {n})", u.max(v)),
                    });
                }
                if u == v {
                    return Err(Error::Parse {
                        line,
                        msg: format!("self-loop at vertex {u}"),
                    });
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(Error::Parse {
                        line,
                        msg: format!("duplicate edge {} {} in factor {fi}", u.min(v), u.max(v)),
                    });
                }
                edges.push((u, v));
            }
            let graph = Graph::from_edges(n, &edges).expect("edges validated above");
            factors.push(graph);
        }
        if let Some(&(line, content)) = lines.get(cursor) {
            return Err(Error::Parse {
                line,
                msg: format!("unexpected content after factor {k}: '{content}'"),
            });
        }
        Factoring::new(factors)
    }

    /// Canonical serialization: normalized edges in sorted order, no comments.
    /// `parse(serialize(f)) == f` for every factoring.
    pub fn serialize(&self) -> String {
        let mut out = String::new();
        out.push_str("sdfactoring 1\n");
        let _ = writeln!(out, "n {}", self.n);
        let _ = writeln!(out, "k {}", self.k());
        for (i, f) in self.factors.iter().enumerate() {
            let edges = f.edges();
            let _ = writeln!(out, "factor {} m {}", i + 1, edges.len());
            for (u, v) in edges {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        out
    }
}

fn parse_keyed((line, content): (usize, &str), key: &str) -> Result<usize> {
    let mut it = content.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(k), Some(val), None) if k == key => val.parse().map_err(|_| Error::Parse {
            line,
            msg: format!("malformed count in '{content}'"),
        }),
        _ => Err(Error::Parse {
            line,
            msg: format!("expected '{key} <count>', found '{content}'"),
        }),
    }
}

impl PartialEq for Factoring {
    fn eq(&self, other: &Factoring) -> bool {
        self.factors == other.factors
    }
}

impl Eq for Factoring {}

impl std::fmt::Debug for Factoring {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Factoring(n={}, k={})", self.n, self.k())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_matchings() -> Factoring {
        let f1 = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let f2 = Graph::from_edges(4, &[(0, 2), (1, 3)]).unwrap();
        Factoring::new(vec![f1, f2]).unwrap()
    }

    #[test]
    fn combined_union() {
        let f = two_matchings();
        let g = f.combined();
        assert_eq!(g.m(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_spanning_cycle());
    }

    #[test]
    fn combined_of_identical_factors() {
        let c5 = Graph::cycle(5).unwrap();
        let f = Factoring::new(vec![c5.clone(), c5.clone()]).unwrap();
        assert_eq!(f.combined(), &c5);
    }

    #[test]
    fn combined_of_stars_has_full_degree() {
        let k = 3;
        let n = 8;
        let factors: Vec<_> = (0..k).map(|c| Graph::star(n, c).unwrap()).collect();
        let f = Factoring::new(factors).unwrap();
        assert_eq!(f.combined().max_degree(), n - 1);
    }

    #[test]
    fn mismatched_sizes_rejected() {
        let f1 = Graph::empty(4);
        let f2 = Graph::empty(5);
        match Factoring::new(vec![f1, f2]) {
            Err(Error::FactorSizeMismatch { index: 2, .. }) => {}
            other => panic!("expected size mismatch, got {other:?}"),
        }
        assert_eq!(Factoring::new(vec![]), Err(Error::NoFactors));
    }

    #[test]
    fn parse_minimal() {
        let text = "sdfactoring 1\nn 4\nk 2\nfactor 1 m 2\n0 1\n2 3\nfactor 2 m 2\n0 2\n1 3\n";
        let f = Factoring::parse(text).unwrap();
        assert_eq!(f, two_matchings());
    }

    #[test]
    fn parse_with_comments_and_blanks() {
        let text = "# instance\nsdfactoring 1\n\nn 4\nk 1\nfactor 1 m 1 # one edge\n1 0\n";
        let f = Factoring::parse(text).unwrap();
        assert_eq!(f.k(), 1);
        assert_eq!(f.factor(0).edges(), vec![(0, 1)]);
    }

    #[test]
    fn parse_diagnostics_name_lines() {
        let bad_header = "sdfactoring 2\nn 4\nk 1\nfactor 1 m 0\n";
        match Factoring::parse(bad_header) {
            Err(Error::Parse { line: 1, msg }) => assert!(msg.contains("sdfactoring")),
            other => panic!("{other:?}"),
        }
        let out_of_range = "sdfactoring 1\nn 4\nk 1\nfactor 1 m 1\n0 4\n";
        match Factoring::parse(out_of_range) {
            Err(Error::Parse { line: 5, msg }) => assert!(msg.contains("out of range")),
            other => panic!("{other:?}"),
        }
        let self_loop = "sdfactoring 1\nn 4\nk 1\nfactor 1 m 1\n2 2\n";
        match Factoring::parse(self_loop) {
            Err(Error::Parse { line: 5, msg }) => assert!(msg.contains("self-loop")),
            other => panic!("{other:?}"),
        }
        let dup = "sdfactoring 1\nn 4\nk 1\nfactor 1 m 2\n0 1\n1 0\n";
        match Factoring::parse(dup) {
            Err(Error::Parse { line: 6, msg }) => assert!(msg.contains("duplicate edge")),
            other => panic!("{other:?}"),
        }
        let missing_factor = "sdfactoring 1\nn 4\nk 2\nfactor 1 m 1\n0 1\n";
        match Factoring::parse(missing_factor) {
            Err(Error::Parse { line: 6, msg }) => assert!(msg.contains("end of file")),
            other => panic!("{other:?}"),
        }
        let trailing = "sdfactoring 1\nn 4\nk 1\nfactor 1 m 1\n0 1\n0 2\n";
        match Factoring::parse(trailing) {
            Err(Error::Parse { line: 6, msg }) => assert!(msg.contains("unexpected content")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn round_trip_identity() {
        let f = two_matchings();
        let text = f.serialize();
        let back = Factoring::parse(&text).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.serialize(), text);
    }
}
