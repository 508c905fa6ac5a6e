//! Monte Carlo sampling: one tableau reference sample per circuit, then one
//! Pauli frame per shot with faults drawn location by location.

use rayon::prelude::*;
use thiserror::Error;

use crate::bits::BitVec;
use crate::circuits::{OpKind, ScheduledCircuit};
use crate::frame::PauliFrame;
use crate::noise::{channel_sample, FaultAction, NoiseAssignment};
use crate::pauli::{Pauli, PauliOperator};
use crate::rng::{stream_rng, Stream};
use crate::tableau::StabilizerTableau;

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("detector {0} is not deterministic under zero noise")]
    NondeterministicDetector(usize),
    #[error("assignment covers {got} locations, circuit has {want}")]
    AssignmentMismatch { got: usize, want: usize },
}

/// One noiseless execution with the intrinsically random gauge outcomes
/// fixed by a seeded tableau.
#[derive(Clone, Debug)]
pub struct ReferenceSample {
    pub bits: BitVec,
    pub seed: u64,
}

fn tableau_run(circuit: &ScheduledCircuit, seed: u64) -> BitVec {
    let mut tab = StabilizerTableau::new(circuit.qubit_count() as usize);
    let mut rng = stream_rng(seed, Stream::Reference, 0);
    let mut bits = BitVec::zeros(circuit.measurement_count());
    let mut m = 0;
    for op in circuit.ops() {
        match op.kind {
            OpKind::Cx => tab.cx(op.a as usize, op.b as usize),
            OpKind::H => tab.h(op.a as usize),
            OpKind::S => tab.s(op.a as usize),
            OpKind::Id | OpKind::X | OpKind::Y | OpKind::Z => {
                // Pauli gates act trivially on the reference distribution;
                // apply anyway so sign bookkeeping stays exact
                match op.kind {
                    OpKind::X => tab.x(op.a as usize),
                    OpKind::Y => tab.y(op.a as usize),
                    OpKind::Z => tab.z(op.a as usize),
                    _ => {}
                }
            }
            OpKind::Measure => {
                if tab.measure_z(op.a as usize, &mut rng) {
                    bits.set(m, true);
                }
                m += 1;
            }
            OpKind::Initialize | OpKind::Reset => tab.reset(op.a as usize, &mut rng),
        }
    }
    bits
}

/// Run the noiseless circuit and verify that every detector parity is
/// deterministic (identical across tableau seeds) and zero.
pub fn reference_sample(circuit: &ScheduledCircuit, seed: u64) -> Result<ReferenceSample, EngineError> {
    let bits = tableau_run(circuit, seed);
    let alt = tableau_run(circuit, seed.wrapping_add(0x9e3779b97f4a7c15));
    for (i, det) in circuit.detectors.iter().enumerate() {
        let parity = |b: &BitVec| {
            det.events
                .iter()
                .fold(false, |acc, &e| acc ^ b.get(e as usize))
        };
        if parity(&bits) || parity(&alt) {
            return Err(EngineError::NondeterministicDetector(i));
        }
    }
    Ok(ReferenceSample { bits, seed })
}

/// Detector records for a batch of shots, bit-packed per shot.
#[derive(Clone, Debug)]
pub struct ShotBatch {
    pub n_shots: usize,
    pub n_detectors: usize,
    /// row per shot
    pub detectors: Vec<BitVec>,
    /// observed logical flip per shot
    pub observed_flips: BitVec,
    pub seed: u64,
}

impl ShotBatch {
    /// Content hash for paired-decoding assertions.
    pub fn content_hash(&self) -> u64 {
        let mut h = 0xcbf29ce484222325u64;
        let mut mix = |w: u64| {
            h ^= w;
            h = h.wrapping_mul(0x100000001b3);
        };
        mix(self.n_shots as u64);
        for row in &self.detectors {
            for &w in row.as_words() {
                mix(w);
            }
        }
        for &w in self.observed_flips.as_words() {
            mix(w);
        }
        h
    }

    /// Raw export: a text descriptor plus one hex row per shot.
    pub fn export_text(&self) -> String {
        use std::fmt::Write as _;
        let mut out = String::new();
        out.push_str("# hexqec shot batch v1\n");
        let _ = writeln!(out, "shots {}", self.n_shots);
        let _ = writeln!(out, "detectors {}", self.n_detectors);
        let _ = writeln!(out, "seed {}", self.seed);
        let _ = writeln!(out, "hash {:016x}", self.content_hash());
        for (i, row) in self.detectors.iter().enumerate() {
            let _ = write!(out, "row");
            for w in row.as_words() {
                let _ = write!(out, " {w:016x}");
            }
            let _ = writeln!(out, " obs {}", self.observed_flips.get(i) as u8);
        }
        out
    }
}

struct ShotOutput {
    detectors: BitVec,
    flip: bool,
}

fn run_one_shot(
    circuit: &ScheduledCircuit,
    assignment: &NoiseAssignment,
    master_seed: u64,
    shot: usize,
) -> ShotOutput {
    let mut rng = stream_rng(master_seed, Stream::Shot, shot as u64);
    let mut frame = PauliFrame::identity(circuit.qubit_count() as usize);
    let mut flips = BitVec::zeros(circuit.measurement_count());
    let mut m = 0usize;
    for (loc, op) in circuit.ops().iter().enumerate() {
        let pre_flip = frame.apply(op);
        let rate = assignment.rates[loc];
        match channel_sample(op.kind, rate, assignment.bias[loc], &mut rng) {
            FaultAction::None => {}
            FaultAction::Pauli(a, b) => {
                if let Some(p) = a {
                    apply_single(&mut frame, op.a, p);
                }
                if let Some(p) = b {
                    apply_single(&mut frame, op.b, p);
                }
            }
            FaultAction::FlipOutcome => match op.kind {
                OpKind::Measure => {
                    flips.flip(m);
                }
                // faulty preparation = orthogonal state = X after reset
                _ => apply_single(&mut frame, op.a, Pauli::X),
            },
        }
        if let Some(f) = pre_flip {
            if f {
                flips.flip(m);
            }
            m += 1;
        }
    }
    evaluate(circuit, &flips)
}

#[inline]
fn apply_single(frame: &mut PauliFrame, q: u32, p: Pauli) {
    let q = q as usize;
    match p {
        Pauli::X => frame.x.flip(q),
        Pauli::Z => frame.z.flip(q),
        Pauli::Y => {
            frame.x.flip(q);
            frame.z.flip(q);
        }
    }
}

fn evaluate(circuit: &ScheduledCircuit, flips: &BitVec) -> ShotOutput {
    let mut det = BitVec::zeros(circuit.detectors.len());
    for (i, d) in circuit.detectors.iter().enumerate() {
        let parity = d
            .events
            .iter()
            .fold(false, |acc, &e| acc ^ flips.get(e as usize));
        if parity {
            det.set(i, true);
        }
    }
    let mut flip = circuit
        .observable
        .iter()
        .fold(false, |acc, &e| acc ^ flips.get(e as usize));
    for deflag in &circuit.deflags {
        if flips.get(deflag.flag_event as usize) {
            for &di in &deflag.detector_flips {
                det.flip(di as usize);
            }
            flip ^= deflag.observable_flip;
        }
    }
    ShotOutput {
        detectors: det,
        flip,
    }
}

/// Frame-based Monte Carlo: `n_shots` faulty executions of the circuit.
pub fn run_shots(
    circuit: &ScheduledCircuit,
    assignment: &NoiseAssignment,
    n_shots: usize,
    seed: u64,
) -> Result<ShotBatch, EngineError> {
    if assignment.rates.len() != circuit.ops().len() {
        return Err(EngineError::AssignmentMismatch {
            got: assignment.rates.len(),
            want: circuit.ops().len(),
        });
    }
    let outputs: Vec<ShotOutput> = (0..n_shots)
        .into_par_iter()
        .map(|shot| run_one_shot(circuit, assignment, seed, shot))
        .collect();
    let mut detectors = Vec::with_capacity(n_shots);
    let mut observed = BitVec::zeros(n_shots);
    for (i, o) in outputs.into_iter().enumerate() {
        detectors.push(o.detectors);
        if o.flip {
            observed.set(i, true);
        }
    }
    Ok(ShotBatch {
        n_shots,
        n_detectors: circuit.detectors.len(),
        detectors,
        observed_flips: observed,
        seed,
    })
}

/// Inject a fixed Pauli fault after operation `loc` and return the detector
/// signature and observable flip. The workhorse for decoder-graph building
/// and fault-distance scans.
pub fn propagate_single_fault(
    circuit: &ScheduledCircuit,
    loc: usize,
    fault: (Option<Pauli>, Option<Pauli>),
    outcome_flip: bool,
) -> (BitVec, bool) {
    let mut frame = PauliFrame::identity(circuit.qubit_count() as usize);
    let mut flips = BitVec::zeros(circuit.measurement_count());
    let mut m = 0usize;
    for (i, op) in circuit.ops().iter().enumerate() {
        let pre_flip = frame.apply(op);
        if i == loc {
            if outcome_flip {
                match op.kind {
                    OpKind::Measure => flips.flip(m),
                    _ => apply_single(&mut frame, op.a, Pauli::X),
                }
            }
            if let Some(p) = fault.0 {
                apply_single(&mut frame, op.a, p);
            }
            if let Some(p) = fault.1 {
                apply_single(&mut frame, op.b, p);
            }
        }
        if let Some(f) = pre_flip {
            if f {
                flips.flip(m);
            }
            m += 1;
        }
    }
    let out = evaluate(circuit, &flips);
    (out.detectors, out.flip)
}

/// Full per-shot tableau simulation with the same fault stream as
/// `run_shots`; the slow exact oracle.
pub fn run_shots_tableau(
    circuit: &ScheduledCircuit,
    assignment: &NoiseAssignment,
    reference: &ReferenceSample,
    n_shots: usize,
    seed: u64,
) -> Result<ShotBatch, EngineError> {
    if assignment.rates.len() != circuit.ops().len() {
        return Err(EngineError::AssignmentMismatch {
            got: assignment.rates.len(),
            want: circuit.ops().len(),
        });
    }
    let outputs: Vec<ShotOutput> = (0..n_shots)
        .into_par_iter()
        .map(|shot| {
            let mut fault_rng = stream_rng(seed, Stream::Shot, shot as u64);
            let mut tab_rng = stream_rng(reference.seed, Stream::Reference, 0);
            let mut tab = StabilizerTableau::new(circuit.qubit_count() as usize);
            let mut bits = BitVec::zeros(circuit.measurement_count());
            let mut m = 0usize;
            for (loc, op) in circuit.ops().iter().enumerate() {
                match op.kind {
                    OpKind::Cx => tab.cx(op.a as usize, op.b as usize),
                    OpKind::H => tab.h(op.a as usize),
                    OpKind::S => tab.s(op.a as usize),
                    OpKind::X => tab.x(op.a as usize),
                    OpKind::Y => tab.y(op.a as usize),
                    OpKind::Z => tab.z(op.a as usize),
                    OpKind::Id => {}
                    OpKind::Measure => {
                        if tab.measure_z(op.a as usize, &mut tab_rng) {
                            bits.set(m, true);
                        }
                    }
                    OpKind::Initialize | OpKind::Reset => tab.reset(op.a as usize, &mut tab_rng),
                }
                let rate = assignment.rates[loc];
                match channel_sample(op.kind, rate, assignment.bias[loc], &mut fault_rng) {
                    FaultAction::None => {}
                    FaultAction::Pauli(a, b) => {
                        if let Some(p) = a {
                            tab.apply_pauli(&PauliOperator::single(op.a, p));
                        }
                        if let Some(p) = b {
                            tab.apply_pauli(&PauliOperator::single(op.b, p));
                        }
                    }
                    FaultAction::FlipOutcome => match op.kind {
                        OpKind::Measure => {
                            bits.flip(m);
                        }
                        _ => tab.apply_pauli(&PauliOperator::single(op.a, Pauli::X)),
                    },
                }
                if op.kind == OpKind::Measure {
                    m += 1;
                }
            }
            let mut flips = bits;
            flips.xor_assign(&reference.bits);
            evaluate(circuit, &flips)
        })
        .collect();
    let mut detectors = Vec::with_capacity(n_shots);
    let mut observed = BitVec::zeros(n_shots);
    for (i, o) in outputs.into_iter().enumerate() {
        detectors.push(o.detectors);
        if o.flip {
            observed.set(i, true);
        }
    }
    Ok(ShotBatch {
        n_shots,
        n_detectors: circuit.detectors.len(),
        detectors,
        observed_flips: observed,
        seed,
    })
}

/// Binomial failure estimate for one basis.
#[derive(Clone, Copy, Debug)]
pub struct FailureEstimate {
    pub failures: usize,
    pub shots: usize,
}

impl FailureEstimate {
    pub fn rate(&self) -> f64 {
        self.failures as f64 / self.shots as f64
    }

    pub fn standard_error(&self) -> f64 {
        let p = self.rate();
        (p * (1.0 - p) / self.shots as f64).sqrt()
    }
}

/// Total logical error rate `p_x + p_z + 2·p_y` estimated as the sum of the
/// two per-basis failure rates, with the combined standard error.
pub fn logical_error_estimate(z_basis: FailureEstimate, x_basis: FailureEstimate) -> (f64, f64) {
    let total = z_basis.rate() + x_basis.rate();
    let se = (z_basis.standard_error().powi(2) + x_basis.standard_error().powi(2)).sqrt();
    (total, se)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{build_memory_experiment, build_rssc_cycle_layout, Basis, Schedule};
    use crate::noise::{assign_uniform, DEFAULT_PROBED};

    fn memory(d: u32, s: u32, total: u32, basis: Basis) -> ScheduledCircuit {
        let layout = build_rssc_cycle_layout(d).unwrap();
        build_memory_experiment(&layout, Schedule::with_total(s, total).unwrap(), basis)
    }

    #[test]
    fn zero_noise_all_detectors_quiet() {
        for basis in [Basis::Z, Basis::X] {
            let c = memory(3, 2, 4, basis);
            c.validate().unwrap();
            reference_sample(&c, 11).unwrap();
            let a = assign_uniform(&c, 0.0, &DEFAULT_PROBED, 0.0).unwrap();
            let batch = run_shots(&c, &a, 64, 5).unwrap();
            assert!(batch.detectors.iter().all(|d| d.count_ones() == 0));
            assert_eq!(batch.observed_flips.count_ones(), 0);
        }
    }

    #[test]
    fn reproducible_batches() {
        let c = memory(3, 2, 4, Basis::Z);
        let a = assign_uniform(&c, 2e-3, &DEFAULT_PROBED, 0.0).unwrap();
        let b1 = run_shots(&c, &a, 200, 42).unwrap();
        let b2 = run_shots(&c, &a, 200, 42).unwrap();
        assert_eq!(b1.content_hash(), b2.content_hash());
        let b3 = run_shots(&c, &a, 200, 43).unwrap();
        assert_ne!(b1.content_hash(), b3.content_hash());
    }

    #[test]
    fn estimates_sum() {
        let z = FailureEstimate {
            failures: 10,
            shots: 1000,
        };
        let x = FailureEstimate {
            failures: 20,
            shots: 1000,
        };
        let (total, se) = logical_error_estimate(z, x);
        assert!((total - 0.03).abs() < 1e-12);
        let expect =
            (z.standard_error().powi(2) + x.standard_error().powi(2)).sqrt();
        assert!((se - expect).abs() < 1e-15);
        let zero = FailureEstimate {
            failures: 0,
            shots: 100,
        };
        assert_eq!(logical_error_estimate(zero, zero).0, 0.0);
    }
}
