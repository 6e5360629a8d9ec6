//! Maximum bipartite matching via Hopcroft–Karp, deterministic by index
//! order.

pub struct BipartiteMatching {
    pub match_left: Vec<Option<usize>>,
    pub match_right: Vec<Option<usize>>,
    pub size: usize,
}

impl BipartiteMatching {
    pub fn is_perfect(&self, left: usize, right: usize) -> bool {
        self.size == left && self.size == right
    }
}

/// `adj[u]` lists the right-side neighbors of left vertex u.
pub fn hopcroft_karp(left: usize, right: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    debug_assert_eq!(adj.len(), left);
    debug_assert!(adj.iter().flatten().all(|&v| v < right));
    let mut match_left: Vec<Option<usize>> = vec![None; left];
    let mut match_right: Vec<Option<usize>> = vec![None; right];
    let mut size = 0;
    loop {
        // BFS layers from free left vertices
        let mut dist: Vec<Option<u32>> = vec![None; left];
        let mut queue = std::collections::VecDeque::new();
        for u in 0..left {
            if match_left[u].is_none() {
                dist[u] = Some(0);
                queue.push_back(u);
            }
        }
        let mut reachable_free = false;
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                match match_right[v] {
                    None => reachable_free = true,
                    Some(u2) => {
                        if dist[u2].is_none() {
                            dist[u2] = Some(dist[u].unwrap() + 1);
                            queue.push_back(u2);
                        }
                    }
                }
            }
        }
        if !reachable_free {
            break;
        }
        for u in 0..left {
            if match_left[u].is_none()
                && augment(u, adj, &mut match_left, &mut match_right, &mut dist)
            {
                size += 1;
            }
        }
    }
    BipartiteMatching {
        match_left,
        match_right,
        size,
    }
}

fn augment(
    u: usize,
    adj: &[Vec<usize>],
    match_left: &mut [Option<usize>],
    match_right: &mut [Option<usize>],
    dist: &mut [Option<u32>],
) -> bool {
    for &v in &adj[u] {
        let advance = match match_right[v] {
            None => true,
            Some(u2) => {
                dist[u2] == dist[u].map(|d| d + 1)
                    && augment(u2, adj, match_left, match_right, dist)
            }
        };
        if advance {
            match_left[u] = Some(v);
            match_right[v] = Some(u);
            return true;
        }
    }
    dist[u] = None;
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn perfect_matching_found() {
        // 0-{0,1}, 1-{0}, 2-{1,2}: perfect matching 0-1, 1-0, 2-2
        let m = hopcroft_karp(3, 3, &[vec![0, 1], vec![0], vec![1, 2]]);
        assert!(m.is_perfect(3, 3));
        assert_eq!(m.match_left, vec![Some(1), Some(0), Some(2)]);
    }

    #[test]
    fn maximum_but_not_perfect() {
        // both left vertices only see right 0
        let m = hopcroft_karp(2, 2, &[vec![0], vec![0]]);
        assert_eq!(m.size, 1);
        assert!(!m.is_perfect(2, 2));
    }

    #[test]
    fn matching_is_consistent() {
        let adj = vec![vec![0, 2], vec![0, 1], vec![1, 2], vec![2, 3]];
        let m = hopcroft_karp(4, 4, &adj);
        assert_eq!(m.size, 4);
        for (u, v) in m.match_left.iter().enumerate() {
            let v = v.unwrap();
            assert!(adj[u].contains(&v));
            assert_eq!(m.match_right[v], Some(u));
        }
    }
}
