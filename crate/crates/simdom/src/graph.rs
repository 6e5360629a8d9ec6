use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Above this vertex count the word-packed adjacency rows are skipped and all
/// queries fall back to the sorted neighbor lists.
pub const BITSET_ROW_LIMIT: usize = 4096;

/// Simple undirected graph on vertices 0..n.
///
/// Edges are normalized on ingest (u < v, duplicates collapsed), so equality
/// is structural equality. Two adjacency representations are kept in sync:
/// sorted neighbor lists always, and word-packed bitset rows for n up to
/// [`BITSET_ROW_LIMIT`]; both answer every query identically.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    rows: Option<Vec<VertexSet>>,
}

impl Graph {
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        Self::from_edges_with_limit(n, edges, BITSET_ROW_LIMIT)
    }

    /// Same as [`Graph::from_edges`] with an explicit bitset-row threshold.
    /// Exposed so tests can force the list-only representation.
    pub(crate) fn from_edges_with_limit(
        n: usize,
        edges: &[(usize, usize)],
        limit: usize,
    ) -> Result<Graph> {
        let mut norm: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { v: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { v });
            }
            norm.push((u.min(v), u.max(v)));
        }
        norm.sort_unstable();
        norm.dedup();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &norm {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let rows = if n <= limit {
            Some(
                adj.iter()
                    .map(|list| VertexSet::from_indices(n, list.iter().copied()))
                    .collect(),
            )
        } else {
            None
        };
        Ok(Graph {
            n,
            m: norm.len(),
            adj,
            rows,
        })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_edges(n, &[]).expect("edgeless graph is always valid")
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).expect("complete graph edges are valid")
    }

    pub fn cycle(n: usize) -> Result<Graph> {
        if n < 3 {
            return Err(Error::BadGraph {
                n,
                reason: "a cycle needs at least 3 vertices".into(),
            });
        }
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn path(n: usize) -> Result<Graph> {
        if n == 0 {
            return Err(Error::BadGraph {
                n,
                reason: "a path needs at least 1 vertex".into(),
            });
        }
        let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn star(n: usize, center: usize) -> Result<Graph> {
        if center >= n {
            return Err(Error::VertexOutOfRange { v: center, n });
        }
        let edges: Vec<_> = (0..n)
            .filter(|&v| v != center)
            .map(|v| (center, v))
            .collect();
        Graph::from_edges(n, &edges)
    }

    /// Disjoint union of `copies` copies of `block`, copy j occupying the
    /// index range [j*r, (j+1)*r).
    pub fn disjoint_copies(block: &Graph, copies: usize) -> Result<Graph> {
        if copies == 0 {
            return Err(Error::BadGraph {
                n: 0,
                reason: "need at least one copy".into(),
            });
        }
        let r = block.n;
        let n = r * copies;
        let mut edges = Vec::with_capacity(block.m * copies);
        for j in 0..copies {
            let off = j * r;
            for (u, v) in block.edges() {
                edges.push((u + off, v + off));
            }
        }
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Average degree 2m/n as an exact (numerator, denominator) pair.
    pub fn average_degree(&self) -> (usize, usize) {
        (2 * self.m, self.n)
    }

    /// ceil(2m/n), the ceiling of the average degree.
    pub fn average_degree_ceil(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            (2 * self.m).div_ceil(self.n)
        }
    }

    pub fn open_neighborhood(&self, v: usize) -> VertexSet {
        match &self.rows {
            Some(rows) => rows[v].clone(),
            None => VertexSet::from_indices(self.n, self.adj[v].iter().copied()),
        }
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.open_neighborhood(v);
        s.insert(v);
        s
    }

    /// Edges in normalized order (u < v, lexicographic).
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Connected components, each sorted ascending, ordered by lowest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = vec![start];
            while let Some(u) = queue.pop() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on `verts` (must be sorted, distinct, in range).
    /// Local vertex i corresponds to verts[i].
    pub fn induced(&self, verts: &[usize]) -> Graph {
        debug_assert!(verts.windows(2).all(|w| w[0] < w[1]));
        let mut edges = Vec::new();
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::from_edges(verts.len(), &edges).expect("induced edges are in range")
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * (self.n.saturating_sub(1)) / 2
    }

    /// True when the graph is a single spanning cycle.
    pub fn is_spanning_cycle(&self) -> bool {
        self.n >= 3 && self.adj.iter().all(|a| a.len() == 2) && self.is_connected()
    }

    /// True when the graph is a single spanning path (n = 1 counts).
    pub fn is_spanning_path(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        if self.n == 1 {
            return true;
        }
        let ones = self.adj.iter().filter(|a| a.len() == 1).count();
        let twos = self.adj.iter().filter(|a| a.len() == 2).count();
        ones == 2 && ones + twos == self.n && self.is_connected()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges()
        )
    }
}

/// Graph isomorphism by degree-pruned backtracking. Intended for the small
/// block graphs that factor structure detection works with.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n != b.n || a.m != b.m {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return false;
    }
    // order a's vertices by descending degree to fail fast
    let mut order: Vec<usize> = (0..a.n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(a.degree(v)));
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; b.n];
    fn go(
        a: &Graph,
        b: &Graph,
        order: &[usize],
        pos: usize,
        map: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let u = order[pos];
        for cand in 0..b.n() {
            if used[cand] || b.degree(cand) != a.degree(u) {
                continue;
            }
            let ok = order[..pos].iter().all(|&w| {
                let mapped = map[w];
                a.has_edge(u, w) == b.has_edge(cand, mapped)
            });
            if ok {
                map[u] = cand;
                used[cand] = true;
                if go(a, b, order, pos + 1, map, used) {
                    return true;
                }
                used[cand] = false;
                map[u] = usize::MAX;
            }
        }
        false
    }
    go(a, b, &order, 0, &mut map, &mut used)
}
