//! Detector-graph construction by single-fault enumeration.
//!
//! A backward sensitivity sweep computes, for every circuit location and
//! Pauli component, the set of detectors (and the observable) flipped by a
//! fault there. Faults whose sector signature has one detector become
//! boundary edges, two become regular edges, and larger signatures are
//! decomposed into a chain through index-adjacent detectors. Coincident
//! signatures combine via the exclusive-or probability formula.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::bits::BitVec;
use crate::circuits::{CheckType, OpKind, ScheduledCircuit};
use crate::noise::{rate_cap, NoiseAssignment, PauliBias};

/// Probability floor for structurally present edges whose accumulated
/// probability is zero; keeps weights finite.
pub const EPSILON_FLOOR: f64 = 1e-14;

/// Fixed-point scale for integer edge weights used by Dijkstra and the
/// matcher.
pub const WEIGHT_SCALE: f64 = 65536.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecoderMode {
    /// edge probabilities from per-location rates
    Aware,
    /// per-location rates replaced by the lattice mean of their kind
    Naive,
}

impl DecoderMode {
    pub fn name(self) -> &'static str {
        match self {
            DecoderMode::Aware => "aware",
            DecoderMode::Naive => "naive",
        }
    }
}

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("edge probability {0} outside (0, 1)")]
    BadProbability(f64),
    #[error("assignment covers {got} locations, circuit has {want}")]
    AssignmentMismatch { got: usize, want: usize },
}

/// `w = ln((1−p)/p)`.
pub fn edge_weight(p: f64) -> Result<f64, GraphError> {
    if !(p > 0.0 && p < 1.0) {
        return Err(GraphError::BadProbability(p));
    }
    Ok(((1.0 - p) / p).ln())
}

#[derive(Clone, Debug)]
pub struct GraphEdge {
    /// sector-local node indices; `u32::MAX` is the boundary
    pub a: u32,
    pub b: u32,
    pub p: f64,
    pub w: f64,
    pub w_int: i64,
    pub flip: bool,
    /// contributing fault locations (operation indices)
    pub sources: Vec<u32>,
}

pub const BOUNDARY: u32 = u32::MAX;

/// Per-basis decoding graph.
#[derive(Clone, Debug)]
pub struct DetectorGraph {
    pub sector: CheckType,
    pub mode: DecoderMode,
    /// global detector index per sector-local node
    pub detector_ids: Vec<u32>,
    pub edges: Vec<GraphEdge>,
    /// adjacency: node -> (neighbor, edge index); boundary node is last
    pub(crate) adj: Vec<Vec<(u32, u32)>>,
}

impl DetectorGraph {
    pub fn node_count(&self) -> usize {
        self.detector_ids.len()
    }

    /// index used for the boundary in adjacency storage
    pub(crate) fn boundary_slot(&self) -> usize {
        self.detector_ids.len()
    }

    pub fn export_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# hexqec detector graph v1\n");
        let _ = writeln!(out, "sector {}", match self.sector {
            CheckType::X => "x",
            CheckType::Z => "z",
        });
        let _ = writeln!(out, "mode {}", self.mode.name());
        for (i, &d) in self.detector_ids.iter().enumerate() {
            let _ = writeln!(out, "node {i} detector {d}");
        }
        for e in &self.edges {
            let a = if e.a == BOUNDARY { "boundary".to_string() } else { e.a.to_string() };
            let b = if e.b == BOUNDARY { "boundary".to_string() } else { e.b.to_string() };
            let _ = writeln!(
                out,
                "edge {a} {b} {:.12e} {:.12e} {}",
                e.p, e.w, e.flip as u8
            );
        }
        out
    }
}

/// Sensitivity sets per qubit: which detectors (plus the observable bit at
/// the end) a Pauli error flips from the current position onward.
struct Sensitivity {
    x: Vec<BitVec>,
    z: Vec<BitVec>,
    width: usize,
}

impl Sensitivity {
    fn new(n_qubits: usize, width: usize) -> Self {
        Sensitivity {
            x: (0..n_qubits).map(|_| BitVec::zeros(width)).collect(),
            z: (0..n_qubits).map(|_| BitVec::zeros(width)).collect(),
            width,
        }
    }
}

/// Per-event detector membership (observable as the last bit), including
/// deflag responses for flag events.
fn event_tables(circuit: &ScheduledCircuit) -> Vec<BitVec> {
    let n_det = circuit.detectors.len();
    let width = n_det + 1;
    let mut tables = vec![BitVec::zeros(width); circuit.measurement_count()];
    for (di, det) in circuit.detectors.iter().enumerate() {
        for &e in &det.events {
            tables[e as usize].flip(di);
        }
    }
    for &e in &circuit.observable {
        tables[e as usize].flip(n_det);
    }
    for deflag in &circuit.deflags {
        let t = &mut tables[deflag.flag_event as usize];
        for &di in &deflag.detector_flips {
            t.flip(di as usize);
        }
        if deflag.observable_flip {
            t.flip(n_det);
        }
    }
    tables
}

/// All single-fault signatures of the circuit: `(location, probability
/// share denominator handled by caller, signature)` per Pauli variant.
struct FaultEnumeration {
    /// per location: list of (signature over detectors+obs, weight share)
    by_location: Vec<Vec<(BitVec, f64)>>,
}

fn enumerate_fault_signatures(circuit: &ScheduledCircuit, bias: &[PauliBias]) -> FaultEnumeration {
    let n_det = circuit.detectors.len();
    let width = n_det + 1;
    let tables = event_tables(circuit);
    let mut sens = Sensitivity::new(circuit.qubit_count() as usize, width);
    let mut by_location: Vec<Vec<(BitVec, f64)>> = vec![Vec::new(); circuit.ops().len()];

    // walk backwards; before processing op i the state describes errors
    // injected just after op i
    let mut next_meas = circuit.measurement_count();
    for (i, op) in circuit.ops().iter().enumerate().rev() {
        let a = op.a as usize;
        let variants = &mut by_location[i];
        match op.kind {
            OpKind::Cx => {
                let b = op.b as usize;
                let sx_a = &sens.x[a];
                let sx_b = &sens.x[b];
                let sz_a = &sens.z[a];
                let sz_b = &sens.z[b];
                let combine = |xa: bool, za: bool, xb: bool, zb: bool| {
                    let mut v = BitVec::zeros(width);
                    if xa {
                        v.xor_assign(sx_a);
                    }
                    if za {
                        v.xor_assign(sz_a);
                    }
                    if xb {
                        v.xor_assign(sx_b);
                    }
                    if zb {
                        v.xor_assign(sz_b);
                    }
                    v
                };
                match bias[i] {
                    PauliBias::Depolarizing => {
                        // 15 non-identity pairs, uniform share
                        for k in 1..16u32 {
                            let (pa, pb) = (k / 4, k % 4);
                            let (xa, za) = ((pa == 1 || pa == 2), (pa == 2 || pa == 3));
                            let (xb, zb) = ((pb == 1 || pb == 2), (pb == 2 || pb == 3));
                            variants.push((combine(xa, za, xb, zb), 1.0 / 15.0));
                        }
                    }
                    PauliBias::ZOnly => {
                        for k in 1..4u32 {
                            variants.push((
                                combine(false, k / 2 > 0, false, k % 2 > 0),
                                1.0 / 3.0,
                            ));
                        }
                    }
                    PauliBias::XOnly => {
                        for k in 1..4u32 {
                            variants.push((
                                combine(k / 2 > 0, false, k % 2 > 0, false),
                                1.0 / 3.0,
                            ));
                        }
                    }
                }
            }
            OpKind::Measure | OpKind::Initialize | OpKind::Reset => {
                // outcome / preparation flip
                let sig = if op.kind == OpKind::Measure {
                    tables[next_meas - 1].clone()
                } else {
                    sens.x[a].clone()
                };
                variants.push((sig, 1.0));
            }
            _ => {
                let sx = &sens.x[a];
                let sz = &sens.z[a];
                let make = |x: bool, z: bool| {
                    let mut v = BitVec::zeros(width);
                    if x {
                        v.xor_assign(sx);
                    }
                    if z {
                        v.xor_assign(sz);
                    }
                    v
                };
                match bias[i] {
                    PauliBias::Depolarizing => {
                        variants.push((make(true, false), 1.0 / 3.0));
                        variants.push((make(true, true), 1.0 / 3.0));
                        variants.push((make(false, true), 1.0 / 3.0));
                    }
                    PauliBias::ZOnly => variants.push((make(false, true), 1.0)),
                    PauliBias::XOnly => variants.push((make(true, false), 1.0)),
                }
            }
        }
        // backward update through op i
        match op.kind {
            OpKind::Cx => {
                let (a, b) = (op.a as usize, op.b as usize);
                // X_c → X_c X_t, Z_t → Z_c Z_t
                let (xa, xb) = twin(&mut sens.x, a, b);
                xa.xor_assign(xb);
                let (za, zb) = twin(&mut sens.z, a, b);
                zb.xor_assign(za);
            }
            OpKind::H => std::mem::swap(&mut sens.x[a], &mut sens.z[a]),
            OpKind::S => {
                let sz = sens.z[a].clone();
                sens.x[a].xor_assign(&sz);
            }
            OpKind::Measure => {
                next_meas -= 1;
                let t = tables[next_meas].clone();
                sens.x[a].xor_assign(&t);
            }
            OpKind::Initialize | OpKind::Reset => {
                sens.x[a].clear();
                sens.z[a].clear();
            }
            OpKind::Id | OpKind::X | OpKind::Y | OpKind::Z => {}
        }
    }
    FaultEnumeration { by_location }
}

fn twin<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &mut T) {
    assert!(i != j);
    if i < j {
        let (lo, hi) = v.split_at_mut(j);
        (&mut lo[i], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(i);
        (&mut hi[0], &mut lo[j])
    }
}

fn xor_combine(p: f64, q: f64) -> f64 {
    p * (1.0 - q) + q * (1.0 - p)
}

/// Build the decoding graph for one check sector.
pub fn build_detector_graph(
    circuit: &ScheduledCircuit,
    assignment: &NoiseAssignment,
    sector: CheckType,
    mode: DecoderMode,
) -> Result<DetectorGraph, GraphError> {
    if assignment.rates.len() != circuit.ops().len() {
        return Err(GraphError::AssignmentMismatch {
            got: assignment.rates.len(),
            want: circuit.ops().len(),
        });
    }
    let n_det = circuit.detectors.len();
    // sector-local node numbering
    let mut local = vec![u32::MAX; n_det];
    let mut detector_ids = Vec::new();
    for (i, d) in circuit.detectors.iter().enumerate() {
        if d.sector == sector {
            local[i] = detector_ids.len() as u32;
            detector_ids.push(i as u32);
        }
    }

    let enumeration = enumerate_fault_signatures(circuit, &assignment.bias);

    // accumulate probabilities per (node set, flip)
    type Key = Vec<u32>;
    let mut acc: HashMap<Key, [f64; 2]> = HashMap::new();
    let mut sources: HashMap<Key, Vec<u32>> = HashMap::new();
    for (loc, variants) in enumeration.by_location.iter().enumerate() {
        let rate = match mode {
            DecoderMode::Aware => assignment.rates[loc],
            DecoderMode::Naive => assignment.kind_mean(assignment.kind_of(loc)),
        };
        for (sig, share) in variants {
            let p = rate * share;
            let flip = sig.get(n_det);
            let mut nodes: Vec<u32> = sig
                .iter_ones()
                .take_while(|&b| b < n_det)
                .filter(|&b| local[b] != u32::MAX)
                .map(|b| local[b])
                .collect();
            if nodes.is_empty() {
                // invisible in this sector (may still flip the observable:
                // an undetectable logical error contributes no edge)
                continue;
            }
            nodes.sort_unstable();
            // decompose ≥3-detector signatures into an index-adjacent chain,
            // the full probability on each link, the flip on the first
            let links: Vec<(Key, bool)> = if nodes.len() <= 2 {
                vec![(nodes, flip)]
            } else {
                let mut links = Vec::new();
                for (k, w) in nodes.windows(2).enumerate() {
                    links.push((vec![w[0], w[1]], flip && k == 0));
                }
                links
            };
            for (key, flip) in links {
                let entry = acc.entry(key.clone()).or_insert([0.0, 0.0]);
                entry[flip as usize] = xor_combine(entry[flip as usize], p);
                if p > 0.0 {
                    let src = sources.entry(key).or_default();
                    if !src.contains(&(loc as u32)) {
                        src.push(loc as u32);
                    }
                }
            }
        }
    }

    let mut keys: Vec<Key> = acc.keys().cloned().collect();
    keys.sort_unstable();
    let mut edges = Vec::with_capacity(keys.len());
    for key in keys {
        let [p0, p1] = acc[&key];
        let p = xor_combine(p0, p1).clamp(EPSILON_FLOOR, 0.5);
        let flip = p1 > p0;
        let w = edge_weight(p)?;
        let (a, b) = match key.as_slice() {
            [a] => (*a, BOUNDARY),
            [a, b] => (*a, *b),
            _ => unreachable!(),
        };
        edges.push(GraphEdge {
            a,
            b,
            p,
            w,
            w_int: (w * WEIGHT_SCALE).round() as i64,
            flip,
            sources: sources.get(&key).cloned().unwrap_or_default(),
        });
    }

    let n_nodes = detector_ids.len();
    let mut adj: Vec<Vec<(u32, u32)>> = vec![Vec::new(); n_nodes + 1];
    for (ei, e) in edges.iter().enumerate() {
        let bslot = n_nodes as u32;
        let (a, b) = (
            e.a,
            if e.b == BOUNDARY { bslot } else { e.b },
        );
        adj[a as usize].push((b, ei as u32));
        adj[b as usize].push((a, ei as u32));
    }

    Ok(DetectorGraph {
        sector,
        mode,
        detector_ids,
        edges,
        adj,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{build_memory_experiment, build_rssc_cycle_layout, Basis, Schedule};
    use crate::engine::propagate_single_fault;
    use crate::noise::{assign_uniform, DEFAULT_PROBED};
    use crate::pauli::Pauli;

    #[test]
    fn weight_formula() {
        assert!(edge_weight(0.5).unwrap().abs() < 1e-15);
        assert!((edge_weight(0.1).unwrap() - 9f64.ln()).abs() < 1e-12);
        assert!(edge_weight(0.0).is_err());
        assert!(edge_weight(1.0).is_err());
    }

    #[test]
    fn xor_combine_matches_example() {
        // two faults with identical signature, p1=0.01 p2=0.02 → 0.0296
        assert!((xor_combine(0.01, 0.02) - 0.0296).abs() < 1e-12);
    }

    fn memory(basis: Basis) -> ScheduledCircuit {
        let layout = build_rssc_cycle_layout(3).unwrap();
        build_memory_experiment(&layout, Schedule::with_total(2, 4).unwrap(), basis)
    }

    #[test]
    fn signatures_match_forward_propagation() {
        // backward sensitivity sweep agrees with direct frame propagation
        // for a sample of single faults
        let c = memory(Basis::Z);
        let a = assign_uniform(&c, 1e-3, &DEFAULT_PROBED, 0.0).unwrap();
        let enumeration = enumerate_fault_signatures(&c, &a.bias);
        let n_det = c.detectors.len();
        let mut checked = 0;
        for (loc, op) in c.ops().iter().enumerate().step_by(7) {
            let variants: Vec<(Option<Pauli>, Option<Pauli>, bool)> = match op.kind {
                OpKind::Cx => (1..16u32)
                    .map(|k| {
                        let pick = |v: u32| match v {
                            1 => Some(Pauli::X),
                            2 => Some(Pauli::Y),
                            3 => Some(Pauli::Z),
                            _ => None,
                        };
                        (pick(k / 4), pick(k % 4), false)
                    })
                    .collect(),
                OpKind::Measure | OpKind::Initialize | OpKind::Reset => {
                    vec![(None, None, true)]
                }
                _ => vec![
                    (Some(Pauli::X), None, false),
                    (Some(Pauli::Y), None, false),
                    (Some(Pauli::Z), None, false),
                ],
            };
            for (vi, &(pa, pb, flip_out)) in variants.iter().enumerate() {
                let (det, flip) = propagate_single_fault(&c, loc, (pa, pb), flip_out);
                let sig = &enumeration.by_location[loc][vi].0;
                for di in 0..n_det {
                    assert_eq!(det.get(di), sig.get(di), "loc {loc} variant {vi} det {di}");
                }
                assert_eq!(flip, sig.get(n_det), "loc {loc} variant {vi} obs");
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn aware_and_naive_topology_identical() {
        let c = memory(Basis::Z);
        let a = assign_uniform(&c, 1e-3, &DEFAULT_PROBED, 0.0).unwrap();
        for sector in [CheckType::Z, CheckType::X] {
            let g1 = build_detector_graph(&c, &a, sector, DecoderMode::Aware).unwrap();
            let g2 = build_detector_graph(&c, &a, sector, DecoderMode::Naive).unwrap();
            assert_eq!(g1.edges.len(), g2.edges.len());
            for (e1, e2) in g1.edges.iter().zip(&g2.edges) {
                assert_eq!((e1.a, e1.b), (e2.a, e2.b));
            }
            // uniform rates: weights identical too
            for (e1, e2) in g1.edges.iter().zip(&g2.edges) {
                assert_eq!(e1.w_int, e2.w_int);
            }
        }
    }

    #[test]
    fn zero_rate_assignment_gets_floor_probability() {
        let c = memory(Basis::Z);
        let a = assign_uniform(&c, 0.0, &DEFAULT_PROBED, 0.0).unwrap();
        let g = build_detector_graph(&c, &a, CheckType::Z, DecoderMode::Aware).unwrap();
        assert!(!g.edges.is_empty());
        for e in &g.edges {
            assert_eq!(e.p, EPSILON_FLOOR);
        }
    }
}
