//! Pauli-frame propagation.
//!
//! A frame records the accumulated Pauli error on every qubit as a pair of
//! bit vectors. Propagating through a Clifford operation conjugates the
//! frame; phases are irrelevant because only measurement-outcome flips are
//! observable.

use crate::bits::BitVec;
use crate::circuits::{OpKind, Operation, ScheduledCircuit};
use crate::pauli::PauliOperator;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliFrame {
    pub x: BitVec,
    pub z: BitVec,
}

impl PauliFrame {
    pub fn identity(n: usize) -> Self {
        PauliFrame {
            x: BitVec::zeros(n),
            z: BitVec::zeros(n),
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.x.any() && !self.z.any()
    }

    pub fn clear(&mut self) {
        self.x.clear();
        self.z.clear();
    }

    pub fn xor_pauli(&mut self, p: &PauliOperator) {
        for q in p.support() {
            match p.component(q).unwrap() {
                crate::pauli::Pauli::X => self.x.flip(q as usize),
                crate::pauli::Pauli::Z => self.z.flip(q as usize),
                crate::pauli::Pauli::Y => {
                    self.x.flip(q as usize);
                    self.z.flip(q as usize);
                }
            }
        }
    }

    /// Conjugate the frame through one circuit operation.
    ///
    /// Measurements report the outcome flip via the return value; reset and
    /// initialize clear the frame on their target.
    pub fn apply(&mut self, op: &Operation) -> Option<bool> {
        match op.kind {
            OpKind::Cx => {
                let (c, t) = (op.a as usize, op.b as usize);
                if self.x.get(c) {
                    self.x.flip(t);
                }
                if self.z.get(t) {
                    self.z.flip(c);
                }
                None
            }
            OpKind::H => {
                let q = op.a as usize;
                let (xb, zb) = (self.x.get(q), self.z.get(q));
                self.x.set(q, zb);
                self.z.set(q, xb);
                None
            }
            OpKind::S => {
                let q = op.a as usize;
                if self.x.get(q) {
                    self.z.flip(q);
                }
                None
            }
            OpKind::Id | OpKind::X | OpKind::Y | OpKind::Z => None,
            OpKind::Measure => Some(self.x.get(op.a as usize)),
            OpKind::Initialize | OpKind::Reset => {
                let q = op.a as usize;
                self.x.set(q, false);
                self.z.set(q, false);
                None
            }
        }
    }

    /// Propagate through a whole circuit with no faults, recording
    /// measurement flips relative to the fault-free reference.
    pub fn propagate(&mut self, circuit: &ScheduledCircuit) -> BitVec {
        let mut flips = BitVec::zeros(circuit.measurement_count());
        let mut m = 0;
        for op in circuit.ops() {
            if let Some(flip) = self.apply(op) {
                if flip {
                    flips.flip(m);
                }
                m += 1;
            }
        }
        flips
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{CircuitBuilder, OpKind};
    use crate::pauli::Pauli;

    fn op(kind: OpKind, a: u32, b: u32) -> Operation {
        Operation {
            kind,
            a,
            b,
            tick: 0,
        }
    }

    #[test]
    fn cnot_propagation() {
        // X on control spreads to target
        let mut f = PauliFrame::identity(2);
        f.xor_pauli(&PauliOperator::single(0, Pauli::X));
        f.apply(&op(OpKind::Cx, 0, 1));
        assert!(f.x.get(0) && f.x.get(1));
        // Z on target spreads to control
        let mut f = PauliFrame::identity(2);
        f.xor_pauli(&PauliOperator::single(1, Pauli::Z));
        f.apply(&op(OpKind::Cx, 0, 1));
        assert!(f.z.get(0) && f.z.get(1));
    }

    #[test]
    fn hadamard_swaps_components() {
        let mut f = PauliFrame::identity(1);
        f.xor_pauli(&PauliOperator::single(0, Pauli::X));
        f.apply(&op(OpKind::H, 0, 0));
        assert!(!f.x.get(0) && f.z.get(0));
    }

    #[test]
    fn identity_frame_stays_identity() {
        let mut b = CircuitBuilder::new(3);
        b.tick();
        b.push(OpKind::H, 0, 0);
        b.push(OpKind::Cx, 0, 1);
        b.tick();
        b.push(OpKind::S, 2, 0);
        b.push_measure(1);
        let c = b.finish();
        let mut f = PauliFrame::identity(3);
        let flips = f.propagate(&c);
        assert!(f.is_identity());
        assert_eq!(flips.count_ones(), 0);
    }

    #[test]
    fn circuit_then_inverse_restores_frame() {
        // CX/H/S conjugation through C then C⁻¹ is the identity on frames
        let fwd = [
            op(OpKind::H, 0, 0),
            op(OpKind::Cx, 0, 1),
            op(OpKind::S, 1, 0),
            op(OpKind::Cx, 1, 2),
        ];
        // S⁻¹ = S·S·S acts on frames like S
        let bwd = [
            op(OpKind::Cx, 1, 2),
            op(OpKind::S, 1, 0),
            op(OpKind::S, 1, 0),
            op(OpKind::S, 1, 0),
            op(OpKind::Cx, 0, 1),
            op(OpKind::H, 0, 0),
        ];
        let start = {
            let mut f = PauliFrame::identity(3);
            f.xor_pauli(&PauliOperator::parse("Y0 X1 Z2").unwrap());
            f
        };
        let mut f = start.clone();
        for o in fwd.iter().chain(bwd.iter()) {
            f.apply(o);
        }
        assert_eq!(f, start);
    }
}
