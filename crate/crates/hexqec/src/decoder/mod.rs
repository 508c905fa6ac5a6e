//! Matching decoder: detector-graph construction from single-fault
//! enumeration, Dijkstra path weights, and exact minimum-weight perfect
//! matching.

pub mod blossom;
mod decode;
mod dijkstra;
mod graph;

pub use decode::{decode_batch, decode_shot, MatchingResult};
pub use dijkstra::{dijkstra_paths, ShortestPaths};
pub use graph::{build_detector_graph, edge_weight, DecoderMode, DetectorGraph, GraphEdge};
