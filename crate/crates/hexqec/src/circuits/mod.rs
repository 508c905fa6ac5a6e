//! Scheduled Clifford circuits with fault locations, detectors and a logical
//! observable.

mod hhc;
mod memory;
mod rssc;

pub use hhc::{build_hhc_cycle, build_hhc_cycle_layout, HhcCycles};
pub use memory::{build_memory_experiment, CycleRecord, GaugeCycles};
pub use rssc::{build_rssc_cycle_layout, build_x_gauge_cycle, build_z_gauge_cycle, RsscCycles};

use std::fmt::Write as _;

use thiserror::Error;

/// Circuit operation kinds; `Id` marks an explicitly idle qubit in a tick.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    Cx,
    H,
    S,
    Id,
    X,
    Y,
    Z,
    Measure,
    Initialize,
    Reset,
}

impl OpKind {
    pub fn name(self) -> &'static str {
        match self {
            OpKind::Cx => "cx",
            OpKind::H => "h",
            OpKind::S => "s",
            OpKind::Id => "id",
            OpKind::X => "x",
            OpKind::Y => "y",
            OpKind::Z => "z",
            OpKind::Measure => "measure",
            OpKind::Initialize => "initialize",
            OpKind::Reset => "reset",
        }
    }

    pub fn is_two_qubit(self) -> bool {
        matches!(self, OpKind::Cx)
    }
}

/// One scheduled operation. `b` is meaningful only for two-qubit kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Operation {
    pub kind: OpKind,
    pub a: u32,
    pub b: u32,
    pub tick: u32,
}

impl Operation {
    pub fn qubits(&self) -> impl Iterator<Item = u32> {
        let two = self.kind.is_two_qubit();
        std::iter::once(self.a).chain(two.then_some(self.b))
    }
}

/// Measurement basis of a memory experiment.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    X,
    Z,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::X => "x",
            Basis::Z => "z",
        }
    }
}

/// Check sector a detector belongs to: Z-sector detectors come from Z-type
/// checks and catch X-component errors, and vice versa.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckType {
    X,
    Z,
}

/// Gauge-repetition schedule `(A^s B^s)^t` with `s·t` rounds of each type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Schedule {
    pub s: u32,
    pub t: u32,
}

#[derive(Debug, Error)]
pub enum ScheduleError {
    #[error("gauge repetition s must be in 1..=4, got {0}")]
    BadRepetition(u32),
    #[error("total rounds {total} not divisible by s={s}")]
    Indivisible { total: u32, s: u32 },
}

impl Schedule {
    pub fn new(s: u32, t: u32) -> Result<Self, ScheduleError> {
        if !(1..=4).contains(&s) {
            return Err(ScheduleError::BadRepetition(s));
        }
        Ok(Schedule { s, t })
    }

    /// Schedule with `s` repetitions and `total = s·t` rounds per type.
    pub fn with_total(s: u32, total: u32) -> Result<Self, ScheduleError> {
        if !(1..=4).contains(&s) {
            return Err(ScheduleError::BadRepetition(s));
        }
        if total % s != 0 {
            return Err(ScheduleError::Indivisible { total, s });
        }
        Ok(Schedule { s, t: total / s })
    }

    pub fn rounds_per_type(&self) -> u32 {
        self.s * self.t
    }
}

/// Parity of a set of measurement events that is zero in the noiseless
/// circuit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Detector {
    pub events: Vec<u32>,
    pub sector: CheckType,
}

/// Syndrome correction applied when a flag measurement fires: the detector
/// signature and observable flip of the hook-error hypothesis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Deflag {
    pub flag_event: u32,
    pub detector_flips: Vec<u32>,
    pub observable_flip: bool,
}

/// A time-ordered Clifford circuit with noise locations, detectors and one
/// logical observable. Fault-location ids are operation indices.
#[derive(Clone, Debug)]
pub struct ScheduledCircuit {
    n_qubits: u32,
    ops: Vec<Operation>,
    n_ticks: u32,
    /// measurement event index per op, where applicable
    meas_of_op: Vec<u32>,
    n_measurements: u32,
    pub detectors: Vec<Detector>,
    /// measurement events whose parity is the logical readout
    pub observable: Vec<u32>,
    pub deflags: Vec<Deflag>,
    /// free-form `key value` metadata echoed in exports
    pub meta: Vec<(String, String)>,
}

#[derive(Debug, Error)]
pub enum CircuitError {
    #[error("qubit {qubit} used twice in tick {tick}")]
    TickCollision { qubit: u32, tick: u32 },
    #[error("operation references qubit {0} outside the circuit")]
    QubitOutOfRange(u32),
    #[error("detector references measurement event {0} that does not exist")]
    BadDetectorEvent(u32),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl ScheduledCircuit {
    pub fn qubit_count(&self) -> u32 {
        self.n_qubits
    }

    pub fn ops(&self) -> &[Operation] {
        &self.ops
    }

    pub fn tick_count(&self) -> u32 {
        self.n_ticks
    }

    pub fn measurement_count(&self) -> usize {
        self.n_measurements as usize
    }

    /// Measurement event index of operation `op_idx` (must be a Measure op).
    pub fn measurement_of(&self, op_idx: usize) -> u32 {
        debug_assert_eq!(self.ops[op_idx].kind, OpKind::Measure);
        self.meas_of_op[op_idx]
    }

    /// One entry per noisy operation instance, in stable order.
    pub fn fault_locations(&self) -> impl Iterator<Item = (u32, OpKind, u32, u32)> + '_ {
        self.ops
            .iter()
            .enumerate()
            .map(|(i, op)| (i as u32, op.kind, op.a, op.b))
    }

    pub fn detectors_in_sector(&self, sector: CheckType) -> impl Iterator<Item = (usize, &Detector)> {
        self.detectors
            .iter()
            .enumerate()
            .filter(move |(_, d)| d.sector == sector)
    }

    /// Structural validation: tick-disjoint operands, in-range qubits and
    /// detector events.
    pub fn validate(&self) -> Result<(), CircuitError> {
        let mut seen: Vec<u32> = vec![u32::MAX; self.n_qubits as usize];
        for op in &self.ops {
            for q in op.qubits() {
                if q >= self.n_qubits {
                    return Err(CircuitError::QubitOutOfRange(q));
                }
                if seen[q as usize] == op.tick {
                    return Err(CircuitError::TickCollision {
                        qubit: q,
                        tick: op.tick,
                    });
                }
                seen[q as usize] = op.tick;
            }
        }
        for d in &self.detectors {
            for &e in &d.events {
                if e >= self.n_measurements {
                    return Err(CircuitError::BadDetectorEvent(e));
                }
            }
        }
        for &e in &self.observable {
            if e >= self.n_measurements {
                return Err(CircuitError::BadDetectorEvent(e));
            }
        }
        Ok(())
    }

    /// Line-oriented text export, bit-exact across runs.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# hexqec circuit v1\n");
        for (k, v) in &self.meta {
            let _ = writeln!(out, "# {k} {v}");
        }
        let _ = writeln!(out, "qubits {}", self.n_qubits);
        let mut tick = u32::MAX;
        for (i, op) in self.ops.iter().enumerate() {
            if op.tick != tick {
                out.push_str("tick\n");
                tick = op.tick;
            }
            match op.kind {
                OpKind::Cx => {
                    let _ = writeln!(out, "cx {} {}", op.a, op.b);
                }
                OpKind::Measure => {
                    let _ = writeln!(out, "measure {} -> m{}", op.a, self.meas_of_op[i]);
                }
                k => {
                    let _ = writeln!(out, "{} {}", k.name(), op.a);
                }
            }
        }
        for d in &self.detectors {
            let _ = write!(
                out,
                "detector {}",
                match d.sector {
                    CheckType::X => "x",
                    CheckType::Z => "z",
                }
            );
            for e in &d.events {
                let _ = write!(out, " m{e}");
            }
            out.push('\n');
        }
        let _ = write!(out, "observable");
        for e in &self.observable {
            let _ = write!(out, " m{e}");
        }
        out.push('\n');
        for f in &self.deflags {
            let _ = write!(out, "deflag m{}:", f.flag_event);
            for e in &f.detector_flips {
                let _ = write!(out, " d{e}");
            }
            if f.observable_flip {
                let _ = write!(out, " obs");
            }
            out.push('\n');
        }
        out
    }
}

/// Incremental circuit builder. Idle `id` locations are inserted for every
/// otherwise-unused qubit of each tick by `finish`.
pub struct CircuitBuilder {
    n_qubits: u32,
    ops: Vec<Operation>,
    tick: u32,
    started: bool,
    meas_count: u32,
}

impl CircuitBuilder {
    pub fn new(n_qubits: u32) -> Self {
        CircuitBuilder {
            n_qubits,
            ops: Vec::new(),
            tick: 0,
            started: false,
            meas_count: 0,
        }
    }

    pub fn tick(&mut self) -> u32 {
        if self.started {
            self.tick += 1;
        }
        self.started = true;
        self.tick
    }

    pub fn push(&mut self, kind: OpKind, a: u32, b: u32) {
        debug_assert!(self.started, "push before first tick");
        debug_assert!(kind != OpKind::Measure, "use push_measure");
        self.ops.push(Operation {
            kind,
            a,
            b,
            tick: self.tick,
        });
    }

    /// Append a measurement and return its event id. Event ids follow push
    /// order and survive idle padding.
    pub fn push_measure(&mut self, q: u32) -> u32 {
        debug_assert!(self.started, "push before first tick");
        self.ops.push(Operation {
            kind: OpKind::Measure,
            a: q,
            b: 0,
            tick: self.tick,
        });
        let id = self.meas_count;
        self.meas_count += 1;
        id
    }

    pub fn current_tick(&self) -> u32 {
        self.tick
    }

    pub fn op_count(&self) -> usize {
        self.ops.len()
    }

    /// Insert `id` locations for every qubit unused in each tick, keeping
    /// the relative order of existing operations.
    fn pad_idles(&mut self) {
        let n_ticks = if self.started { self.tick as usize + 1 } else { 0 };
        let n = self.n_qubits as usize;
        let mut by_tick: Vec<Vec<Operation>> = vec![Vec::new(); n_ticks];
        for op in self.ops.drain(..) {
            by_tick[op.tick as usize].push(op);
        }
        let mut busy = vec![false; n];
        for (t, list) in by_tick.iter_mut().enumerate() {
            busy.fill(false);
            for op in list.iter() {
                for q in op.qubits() {
                    busy[q as usize] = true;
                }
            }
            for q in 0..self.n_qubits {
                if !busy[q as usize] {
                    list.push(Operation {
                        kind: OpKind::Id,
                        a: q,
                        b: 0,
                        tick: t as u32,
                    });
                }
            }
        }
        self.ops = by_tick.into_iter().flatten().collect();
    }

    pub fn finish(mut self) -> ScheduledCircuit {
        self.pad_idles();
        let mut meas_of_op = vec![u32::MAX; self.ops.len()];
        let mut m = 0;
        for (i, op) in self.ops.iter().enumerate() {
            if op.kind == OpKind::Measure {
                meas_of_op[i] = m;
                m += 1;
            }
        }
        ScheduledCircuit {
            n_qubits: self.n_qubits,
            n_ticks: if self.started { self.tick + 1 } else { 0 },
            ops: self.ops,
            meas_of_op,
            n_measurements: m,
            detectors: Vec::new(),
            observable: Vec::new(),
            deflags: Vec::new(),
            meta: Vec::new(),
        }
    }
}
