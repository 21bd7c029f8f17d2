use std::collections::VecDeque;

use crate::mos::{GraphBuilder, MosGraph, VertexId};

use super::IngestError;

/// A BFS-extracted induced subgraph with its id remapping.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: MosGraph,
    /// `original[new_id]` is the vertex's id in the source graph.
    pub original: Vec<VertexId>,
}

/// Breadth-first extraction from `root` over out-edges (canonical adjacency
/// order), stopping after `limit` vertices. The result is the induced
/// subgraph with ids renumbered in visitation order.
pub fn extract_connected_subgraph(
    graph: &MosGraph,
    root: VertexId,
    limit: Option<usize>,
) -> Result<Subgraph, IngestError> {
    if !graph.contains(root) {
        return Err(IngestError::RootOutOfRange(root as u64 + 1));
    }
    let limit = limit.unwrap_or(usize::MAX);
    if limit == 0 {
        return Err(IngestError::InvalidParameter("vertex limit must be positive".into()));
    }
    const UNSEEN: u32 = u32::MAX;
    let mut new_id = vec![UNSEEN; graph.num_vertices()];
    let mut original = vec![root];
    new_id[root as usize] = 0;
    let mut queue = VecDeque::from([root]);
    'bfs: while let Some(u) = queue.pop_front() {
        for e in graph.out_edges(u) {
            let v = graph.head(e);
            if new_id[v as usize] == UNSEEN {
                if original.len() == limit {
                    break 'bfs;
                }
                new_id[v as usize] = original.len() as u32;
                original.push(v);
                queue.push_back(v);
            }
        }
    }

    let mut b = GraphBuilder::new(original.len(), graph.objectives().to_vec());
    for &old in &original {
        for e in graph.out_edges(old) {
            let h = new_id[graph.head(e) as usize];
            if h != UNSEEN {
                b.add_edge(new_id[old as usize], h, graph.cost(e));
            }
        }
    }
    for (k, v) in graph.metadata() {
        b.meta(k.clone(), v);
    }
    b.meta("subgraph_root", root + 1).meta("subgraph_vertices", original.len());
    Ok(Subgraph {
        graph: b.build()?,
        original,
    })
}
