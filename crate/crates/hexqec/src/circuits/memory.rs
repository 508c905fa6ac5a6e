//! Memory-experiment assembly and detector definitions under
//! schedule-induced gauge fixing.
//!
//! For a basis-B experiment the cycle string is `(A^s B^s)^t` with A the
//! opposite check type, so the final transversal measurement directly
//! follows a B-type block. Detectors:
//!
//! - consecutive cycles inside a block compare each check to its previous
//!   outcome (gauge operators act as temporary stabilizers);
//! - consecutive blocks of the same type compare stabilizer values, each a
//!   product of the check outcomes that compose the stabilizer;
//! - the first block matching the initialization basis compares stabilizer
//!   values against the deterministic initial eigenvalues;
//! - the final data measurement reconstructs each matching-type check from
//!   data bits and compares it to the last cycle.

use super::{
    Basis, CheckType, CircuitBuilder, Deflag, Detector, OpKind, Schedule, ScheduledCircuit,
};
use crate::codes::SubsystemCode;

/// Result of emitting one gauge cycle: the measurement event id of each
/// check, plus flag measurement events with the check index they guard.
pub struct CycleRecord {
    pub check_events: Vec<u32>,
    pub flag_events: Vec<(u32, usize)>,
}

/// A code's cycle emitters plus the data the detector builder needs.
pub trait GaugeCycles {
    fn code(&self) -> &SubsystemCode;
    fn total_qubits(&self) -> u32;
    fn emit_cycle(&self, sector: CheckType, b: &mut CircuitBuilder) -> CycleRecord;
}

struct Block {
    sector: CheckType,
    cycles: Vec<CycleRecord>,
}

/// Build a full memory experiment for `basis` with schedule `(A^s B^s)^t`.
pub fn build_memory_experiment(
    cycles: &dyn GaugeCycles,
    schedule: Schedule,
    basis: Basis,
) -> ScheduledCircuit {
    let code = cycles.code();
    let n_data = code.n_data;
    let mut b = CircuitBuilder::new(cycles.total_qubits());

    b.tick();
    for q in 0..n_data {
        b.push(OpKind::Initialize, q, 0);
    }
    if basis == Basis::X {
        b.tick();
        for q in 0..n_data {
            b.push(OpKind::H, q, 0);
        }
    }

    let (first, second) = match basis {
        Basis::Z => (CheckType::X, CheckType::Z),
        Basis::X => (CheckType::Z, CheckType::X),
    };
    let mut blocks: Vec<Block> = Vec::new();
    for _ in 0..schedule.t {
        for sector in [first, second] {
            let mut block = Block {
                sector,
                cycles: Vec::new(),
            };
            for _ in 0..schedule.s {
                block.cycles.push(cycles.emit_cycle(sector, &mut b));
            }
            blocks.push(block);
        }
    }

    if basis == Basis::X {
        b.tick();
        for q in 0..n_data {
            b.push(OpKind::H, q, 0);
        }
    }
    b.tick();
    let final_events: Vec<u32> = (0..n_data).map(|q| b.push_measure(q)).collect();

    let mut circuit = b.finish();
    let final_event = |q: u32| final_events[q as usize];

    let sector_data = |sector: CheckType| -> (Vec<Vec<u32>>, &Vec<Vec<usize>>) {
        let (gauge, sets) = match sector {
            CheckType::X => (&code.gauge_x, &code.stab_x_decomp),
            CheckType::Z => (&code.gauge_z, &code.stab_z_decomp),
        };
        (
            gauge.iter().map(|g| g.support().collect()).collect(),
            sets,
        )
    };

    let mut detectors = Vec::new();
    let init_sector = match basis {
        Basis::Z => CheckType::Z,
        Basis::X => CheckType::X,
    };

    // consecutive cycles within a block: per-check repeats
    for block in &blocks {
        for w in block.cycles.windows(2) {
            for (&a, &bb) in w[0].check_events.iter().zip(&w[1].check_events) {
                detectors.push(Detector {
                    events: vec![a, bb],
                    sector: block.sector,
                });
            }
        }
    }
    // consecutive same-type blocks: stabilizer-product comparisons
    for sector in [CheckType::X, CheckType::Z] {
        let (_, sets) = sector_data(sector);
        let same: Vec<&Block> = blocks.iter().filter(|bl| bl.sector == sector).collect();
        for pair in same.windows(2) {
            let last = pair[0].cycles.last().unwrap();
            let first = pair[1].cycles.first().unwrap();
            for set in sets.iter() {
                let mut events = Vec::with_capacity(2 * set.len());
                for &ci in set {
                    events.push(last.check_events[ci]);
                }
                for &ci in set {
                    events.push(first.check_events[ci]);
                }
                detectors.push(Detector { events, sector });
            }
        }
        // initialization: first block of the init-matching type compares
        // stabilizer products to their deterministic initial values
        if sector == init_sector {
            if let Some(block) = same.first() {
                let first = block.cycles.first().unwrap();
                for set in sets.iter() {
                    let events = set.iter().map(|&ci| first.check_events[ci]).collect();
                    detectors.push(Detector { events, sector });
                }
            }
        }
    }
    // final transversal measurement: per-check comparison against the last
    // cycle of the final (basis-matching) block
    {
        let sector = init_sector;
        let (supports, _) = sector_data(sector);
        let last_block = blocks.last().unwrap();
        debug_assert_eq!(last_block.sector, sector);
        let last = last_block.cycles.last().unwrap();
        for (ci, support) in supports.iter().enumerate() {
            let mut events = vec![last.check_events[ci]];
            events.extend(support.iter().map(|&q| final_event(q)));
            detectors.push(Detector { events, sector });
        }
    }
    circuit.detectors = detectors;

    // logical observable: parity of the final data measurements along the
    // basis-matching logical representative
    let logical = match basis {
        Basis::Z => &code.logical_z,
        Basis::X => &code.logical_x,
    };
    circuit.observable = logical.support().map(final_event).collect();

    // deflags: a fired flag toggles its check's outcome before decoding
    let mut deflags = Vec::new();
    for block in &blocks {
        for cycle in &block.cycles {
            for &(flag_event, check_idx) in &cycle.flag_events {
                let check_event = cycle.check_events[check_idx];
                let detector_flips = circuit
                    .detectors
                    .iter()
                    .enumerate()
                    .filter(|(_, det)| det.events.contains(&check_event))
                    .map(|(i, _)| i as u32)
                    .collect();
                deflags.push(Deflag {
                    flag_event,
                    detector_flips,
                    observable_flip: false,
                });
            }
        }
    }
    circuit.deflags = deflags;

    circuit.meta = vec![
        ("code".into(), code.kind.name().into()),
        ("n_data".into(), code.n_data.to_string()),
        ("d".into(), code.distance.to_string()),
        ("basis".into(), basis.name().into()),
        ("s".into(), schedule.s.to_string()),
        ("t".into(), schedule.t.to_string()),
    ];
    circuit
}
