//! Detection of factors that are disjoint unions of copies of one block
//! graph. The constructions' proofs rely on the structure, so each block is
//! verified by isomorphism rather than trusted from metadata.

use crate::error::{Error, Result};
use crate::graph::{are_isomorphic, Graph};

/// A factor decomposed into n/r copies of a common block of order r.
/// Blocks are the connected components, each sorted and listed by lowest
/// member.
#[derive(Debug, Clone)]
pub struct CopiesView {
    pub blocks: Vec<Vec<usize>>,
    /// Induced graph of the first block; every other block is isomorphic.
    pub block: Graph,
    pub r: usize,
}

impl CopiesView {
    pub fn count(&self) -> usize {
        self.blocks.len()
    }

    /// Induced graph of block i, with local indices following the sorted
    /// vertex list.
    pub fn block_graph(&self, g: &Graph, i: usize) -> Graph {
        g.induced(&self.blocks[i])
    }
}

/// Decompose into components and verify they are pairwise isomorphic.
pub fn copies_view(g: &Graph) -> Option<CopiesView> {
    let blocks = g.components();
    let first = blocks.first()?;
    let r = first.len();
    let block = g.induced(first);
    for b in &blocks {
        if b.len() != r || !are_isomorphic(&g.induced(b), &block) {
            return None;
        }
    }
    Some(CopiesView { blocks, block, r })
}

/// View of a disjoint union of complete blocks K_r, r ≥ 2.
pub fn kr_union_view(g: &Graph, index: usize) -> Result<CopiesView> {
    match copies_view(g) {
        Some(view) if view.r >= 2 && view.block.is_complete() => Ok(view),
        _ => Err(Error::Structure {
            index,
            expected: "a disjoint union of complete blocks of a common order r \u{2265} 2".into(),
        }),
    }
}

/// View of a disjoint union of cycles C_r for the given r.
pub fn cycle_union_view(g: &Graph, r: usize, index: usize) -> Result<CopiesView> {
    match copies_view(g) {
        Some(view) if view.r == r && view.block.is_spanning_cycle() => Ok(view),
        _ => Err(Error::Structure {
            index,
            expected: format!("a disjoint union of {r}-cycles"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangles_detected() {
        let g = Graph::disjoint_copies(&Graph::complete(3), 3).unwrap();
        let view = kr_union_view(&g, 0).unwrap();
        assert_eq!(view.r, 3);
        assert_eq!(view.count(), 3);
        assert_eq!(view.blocks[1], vec![3, 4, 5]);
        assert!(view.block_graph(&g, 2).is_complete());
    }

    #[test]
    fn scattered_triangles_detected() {
        // blocks need not be contiguous index ranges
        let g = Graph::from_edges(6, &[(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)]).unwrap();
        let view = kr_union_view(&g, 0).unwrap();
        assert_eq!(view.blocks, vec![vec![0, 2, 4], vec![1, 3, 5]]);
    }

    #[test]
    fn mixed_sizes_rejected() {
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        assert!(copies_view(&g).is_none());
        match kr_union_view(&g, 1) {
            Err(Error::Structure { index: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn same_order_different_blocks_rejected() {
        // a triangle and a path both on 3 vertices
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5)]).unwrap();
        assert!(copies_view(&g).is_none());
    }

    #[test]
    fn cycle_unions() {
        let g = Graph::disjoint_copies(&Graph::cycle(4).unwrap(), 2).unwrap();
        let view = cycle_union_view(&g, 4, 0).unwrap();
        assert_eq!(view.count(), 2);
        assert!(cycle_union_view(&g, 5, 0).is_err());
        // matchings are K_2-unions, not 4-cycle unions
        let m = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(cycle_union_view(&m, 4, 0).is_err());
        assert_eq!(kr_union_view(&m, 0).unwrap().r, 2);
    }
}
