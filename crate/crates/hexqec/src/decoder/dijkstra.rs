//! Dijkstra shortest paths on a detector graph, boundary included.
//!
//! The boundary node terminates paths: it is never expanded, so defects
//! cannot match "through" the boundary.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::graph::DetectorGraph;

/// Shortest-path tree from one source over integer edge weights.
pub struct ShortestPaths {
    pub source: u32,
    pub dist: Vec<i64>,
    /// predecessor edge index per node, or u32::MAX
    pub pred: Vec<u32>,
}

impl ShortestPaths {
    /// XOR of logical-flip bits along the path from `node` back to the
    /// source; `node` may be the boundary slot.
    pub fn path_flip(&self, graph: &DetectorGraph, node: usize) -> bool {
        let mut flip = false;
        let mut cur = node;
        while self.pred[cur] != u32::MAX {
            let e = &graph.edges[self.pred[cur] as usize];
            flip ^= e.flip;
            let bslot = graph.boundary_slot() as u32;
            let a = if e.a == super::graph::BOUNDARY { bslot } else { e.a };
            let b = if e.b == super::graph::BOUNDARY { bslot } else { e.b };
            cur = if cur == a as usize { b as usize } else { a as usize };
        }
        debug_assert_eq!(cur, self.source as usize);
        flip
    }
}

/// Exact shortest paths from `source` to every node and to the boundary.
pub fn dijkstra_paths(graph: &DetectorGraph, source: u32) -> ShortestPaths {
    let n = graph.node_count() + 1; // + boundary slot
    let bslot = graph.boundary_slot();
    let mut dist = vec![i64::MAX; n];
    let mut pred = vec![u32::MAX; n];
    let mut heap: BinaryHeap<Reverse<(i64, u32)>> = BinaryHeap::new();
    dist[source as usize] = 0;
    heap.push(Reverse((0, source)));
    while let Some(Reverse((d, u))) = heap.pop() {
        if d > dist[u as usize] {
            continue;
        }
        if u as usize == bslot {
            continue; // boundary absorbs, never relays
        }
        for &(v, ei) in &graph.adj[u as usize] {
            let nd = d + graph.edges[ei as usize].w_int;
            if nd < dist[v as usize] {
                dist[v as usize] = nd;
                pred[v as usize] = ei;
                heap.push(Reverse((nd, v)));
            }
        }
    }
    ShortestPaths {
        source,
        dist,
        pred,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::CheckType;
    use crate::decoder::graph::{DecoderMode, DetectorGraph, GraphEdge, BOUNDARY};

    fn toy_graph(edges: &[(u32, u32, i64, bool)], n_nodes: usize) -> DetectorGraph {
        let graph_edges: Vec<GraphEdge> = edges
            .iter()
            .map(|&(a, b, w, flip)| GraphEdge {
                a,
                b,
                p: 0.1,
                w: w as f64,
                w_int: w,
                flip,
                sources: vec![],
            })
            .collect();
        let mut adj = vec![Vec::new(); n_nodes + 1];
        for (ei, e) in graph_edges.iter().enumerate() {
            let b = if e.b == BOUNDARY { n_nodes as u32 } else { e.b };
            adj[e.a as usize].push((b, ei as u32));
            adj[b as usize].push((e.a, ei as u32));
        }
        DetectorGraph {
            sector: CheckType::Z,
            mode: DecoderMode::Aware,
            detector_ids: (0..n_nodes as u32).collect(),
            edges: graph_edges,
            adj,
        }
    }

    #[test]
    fn single_edge() {
        let g = toy_graph(&[(0, 1, 3, false)], 2);
        let sp = dijkstra_paths(&g, 0);
        assert_eq!(sp.dist[1], 3);
    }

    #[test]
    fn triangle_prefers_two_light_edges() {
        let g = toy_graph(&[(0, 1, 1, false), (1, 2, 1, true), (0, 2, 3, false)], 3);
        let sp = dijkstra_paths(&g, 0);
        assert_eq!(sp.dist[2], 2);
        assert!(sp.path_flip(&g, 2));
    }

    #[test]
    fn uniform_weights_give_hop_counts() {
        let g = toy_graph(
            &[(0, 1, 5, false), (1, 2, 5, false), (2, 3, 5, false)],
            4,
        );
        let sp = dijkstra_paths(&g, 0);
        assert_eq!(sp.dist[3], 15);
    }

    #[test]
    fn boundary_does_not_relay() {
        // 0—boundary and 1—boundary, but no 0—1 path through it
        let g = toy_graph(&[(0, BOUNDARY, 1, false), (1, BOUNDARY, 1, false)], 2);
        let sp = dijkstra_paths(&g, 0);
        assert_eq!(sp.dist[2], 1); // boundary slot
        assert_eq!(sp.dist[1], i64::MAX);
    }
}
