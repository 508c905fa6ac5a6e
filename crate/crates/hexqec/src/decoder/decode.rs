//! Syndrome decoding: Dijkstra-contracted minimum-weight perfect matching.

use thiserror::Error;

use super::blossom::min_weight_perfect_matching;
use super::dijkstra::dijkstra_paths;
use super::graph::DetectorGraph;
use crate::bits::BitVec;
use crate::engine::{FailureEstimate, ShotBatch};

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("syndrome has {got} detectors, graph expects {want}")]
    DimensionMismatch { got: usize, want: usize },
    #[error("active detector {0} is disconnected from the rest of the graph")]
    Disconnected(u32),
}

/// Matched defect pairs and the predicted logical flip.
#[derive(Clone, Debug)]
pub struct MatchingResult {
    /// matched pairs of sector-local detector nodes; `None` = boundary
    pub pairs: Vec<(u32, Option<u32>)>,
    pub total_weight: i64,
    pub predicted_flip: bool,
}

/// Decode one shot's detector bit-vector (global detector indexing).
pub fn decode_shot(graph: &DetectorGraph, syndrome: &BitVec) -> Result<MatchingResult, DecodeError> {
    let actives: Vec<u32> = graph
        .detector_ids
        .iter()
        .enumerate()
        .filter(|(_, &d)| syndrome.get(d as usize))
        .map(|(local, _)| local as u32)
        .collect();
    if actives.is_empty() {
        return Ok(MatchingResult {
            pairs: Vec::new(),
            total_weight: 0,
            predicted_flip: false,
        });
    }
    let a = actives.len();
    let bslot = graph.boundary_slot();
    let trees: Vec<_> = actives.iter().map(|&u| dijkstra_paths(graph, u)).collect();

    // complete graph over defects plus one virtual boundary copy each:
    // nodes 0..a are defects, a..2a their boundary twins
    let mut edges: Vec<(usize, usize, i64)> = Vec::with_capacity(a * (a + 1) / 2 + a);
    for i in 0..a {
        for j in i + 1..a {
            let d = trees[i].dist[actives[j] as usize];
            if d < i64::MAX {
                edges.push((i, j, d));
            }
        }
        let db = trees[i].dist[bslot];
        if db < i64::MAX {
            edges.push((i, a + i, db));
        } else if edges.iter().all(|&(u, v, _)| u != i && v != i) {
            return Err(DecodeError::Disconnected(actives[i]));
        }
        for j in i + 1..a {
            edges.push((a + i, a + j, 0));
        }
    }
    let pairs = min_weight_perfect_matching(2 * a, &edges);
    let mut out_pairs = Vec::new();
    let mut flip = false;
    let mut total = 0;
    for (u, v) in pairs {
        if u < a && v < a {
            out_pairs.push((actives[u], Some(actives[v])));
            flip ^= trees[u].path_flip(graph, actives[v] as usize);
            total += trees[u].dist[actives[v] as usize];
        } else if u < a {
            debug_assert_eq!(v, a + u);
            out_pairs.push((actives[u], None));
            flip ^= trees[u].path_flip(graph, bslot);
            total += trees[u].dist[bslot];
        }
        // boundary-boundary pairs carry nothing
    }
    Ok(MatchingResult {
        pairs: out_pairs,
        total_weight: total,
        predicted_flip: flip,
    })
}

/// Decode every shot of a batch and count prediction failures.
pub fn decode_batch(graph: &DetectorGraph, batch: &ShotBatch) -> Result<FailureEstimate, DecodeError> {
    use rayon::prelude::*;
    let failures = (0..batch.n_shots)
        .into_par_iter()
        .map(|i| {
            let result = decode_shot(graph, &batch.detectors[i])?;
            Ok((result.predicted_flip != batch.observed_flips.get(i)) as usize)
        })
        .collect::<Result<Vec<usize>, DecodeError>>()?;
    Ok(FailureEstimate {
        failures: failures.iter().sum(),
        shots: batch.n_shots,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::CheckType;
    use crate::decoder::graph::{DecoderMode, GraphEdge, BOUNDARY};

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
    fn empty_syndrome() {
        let g = toy_graph(&[(0, 1, 1, false)], 2);
        let r = decode_shot(&g, &BitVec::zeros(2)).unwrap();
        assert!(r.pairs.is_empty());
        assert!(!r.predicted_flip);
    }

    #[test]
    fn pair_across_logical_flips() {
        // chain: boundary —1— 0 —1(flip)— 1 —1— boundary
        let g = toy_graph(
            &[
                (0, BOUNDARY, 1, false),
                (0, 1, 1, true),
                (1, BOUNDARY, 1, false),
            ],
            2,
        );
        // both defects active: cheapest is the middle edge, picking up the flip
        let syn = BitVec::from_ones(2, [0, 1]);
        let r = decode_shot(&g, &syn).unwrap();
        assert_eq!(r.pairs.len(), 1);
        assert!(r.predicted_flip);
        // single defect: matches to boundary, no flip
        let syn = BitVec::from_ones(2, [0]);
        let r = decode_shot(&g, &syn).unwrap();
        assert_eq!(r.pairs, vec![(0, None)]);
        assert!(!r.predicted_flip);
    }

    #[test]
    fn boundary_wins_when_cheaper() {
        let g = toy_graph(
            &[
                (0, BOUNDARY, 1, true),
                (0, 1, 10, false),
                (1, BOUNDARY, 1, false),
            ],
            2,
        );
        let syn = BitVec::from_ones(2, [0, 1]);
        let r = decode_shot(&g, &syn).unwrap();
        assert_eq!(r.total_weight, 2);
        assert!(r.predicted_flip); // flip from node 0's boundary edge
    }
}
