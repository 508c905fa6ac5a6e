//! Stabilizer tableau in the Aaronson–Gottesman style, used for reference
//! sampling and as the slow-but-exact oracle against the frame propagator.
//!
//! Rows are stored in an `i^p · ∏ X^x Z^z` normal form. In this form CX
//! conjugation is phase-free; H and S pick up the usual Y-sign corrections.

use rand::Rng;

use crate::bits::BitVec;
use crate::pauli::PauliOperator;

#[derive(Clone, Debug)]
struct Row {
    x: BitVec,
    z: BitVec,
    /// exponent of i in the normal form
    phase: u8,
}

impl Row {
    fn anticommutes(&self, x: &BitVec, z: &BitVec) -> bool {
        self.x.and_parity(z) ^ self.z.and_parity(x)
    }

    /// self ← self · other (right multiplication).
    fn mul_assign(&mut self, other: &Row) {
        // i^{p1}X^{x1}Z^{z1} · i^{p2}X^{x2}Z^{z2}
        //   = i^{p1+p2} (−1)^{|z1∧x2|} X^{x1⊕x2} Z^{z1⊕z2}
        let sign = self.z.and_parity(&other.x);
        self.phase = (self.phase + other.phase + if sign { 2 } else { 0 }) & 3;
        self.x.xor_assign(&other.x);
        self.z.xor_assign(&other.z);
    }
}

/// Pure stabilizer state on `n` qubits with destabilizer bookkeeping.
#[derive(Clone, Debug)]
pub struct StabilizerTableau {
    n: usize,
    /// rows 0..n are destabilizers, rows n..2n stabilizers
    rows: Vec<Row>,
}

impl StabilizerTableau {
    /// |0…0⟩: stabilizers Z_i, destabilizers X_i.
    pub fn new(n: usize) -> Self {
        let mut rows = Vec::with_capacity(2 * n);
        for i in 0..2 * n {
            let mut x = BitVec::zeros(n);
            let mut z = BitVec::zeros(n);
            if i < n {
                x.set(i, true);
            } else {
                z.set(i - n, true);
            }
            rows.push(Row { x, z, phase: 0 });
        }
        StabilizerTableau { n, rows }
    }

    pub fn qubit_count(&self) -> usize {
        self.n
    }

    pub fn h(&mut self, q: usize) {
        for row in &mut self.rows {
            let (xq, zq) = (row.x.get(q), row.z.get(q));
            if xq && zq {
                row.phase = (row.phase + 2) & 3;
            }
            row.x.set(q, zq);
            row.z.set(q, xq);
        }
    }

    pub fn s(&mut self, q: usize) {
        for row in &mut self.rows {
            if row.x.get(q) {
                row.phase = (row.phase + 1) & 3;
                row.z.flip(q);
            }
        }
    }

    pub fn cx(&mut self, c: usize, t: usize) {
        for row in &mut self.rows {
            if row.x.get(c) {
                row.x.flip(t);
            }
            if row.z.get(t) {
                row.z.flip(c);
            }
        }
    }

    /// Apply a Pauli gate: flips signs of anticommuting rows.
    pub fn x(&mut self, q: usize) {
        for row in &mut self.rows {
            if row.z.get(q) {
                row.phase = (row.phase + 2) & 3;
            }
        }
    }

    pub fn z(&mut self, q: usize) {
        for row in &mut self.rows {
            if row.x.get(q) {
                row.phase = (row.phase + 2) & 3;
            }
        }
    }

    pub fn y(&mut self, q: usize) {
        for row in &mut self.rows {
            if row.x.get(q) ^ row.z.get(q) {
                row.phase = (row.phase + 2) & 3;
            }
        }
    }

    pub fn apply_pauli(&mut self, p: &PauliOperator) {
        let x = p.x_bits(self.n);
        let z = p.z_bits(self.n);
        for row in &mut self.rows {
            if row.anticommutes(&x, &z) {
                row.phase = (row.phase + 2) & 3;
            }
        }
    }

    /// True iff measuring `obs` would give a deterministic outcome.
    pub fn is_deterministic(&self, obs: &PauliOperator) -> bool {
        let x = obs.x_bits(self.n);
        let z = obs.z_bits(self.n);
        !(self.n..2 * self.n).any(|i| self.rows[i].anticommutes(&x, &z))
    }

    /// Measure a Hermitian Pauli observable. Returns the outcome bit
    /// (eigenvalue `(−1)^bit`), collapsing the state when random.
    pub fn measure_pauli(&mut self, obs: &PauliOperator, rng: &mut impl Rng) -> bool {
        let ox = obs.x_bits(self.n);
        let oz = obs.z_bits(self.n);
        let ophase = {
            // Hermitian normal-form exponent: p ≡ |x∧z| (mod 2) required
            let ys = ox.and_parity(&oz);
            let p = obs.phase().i_exponent();
            debug_assert_eq!(p & 1, ys as u8 & 1, "non-Hermitian observable");
            p
        };
        let pivot = (self.n..2 * self.n).find(|&i| self.rows[i].anticommutes(&ox, &oz));
        match pivot {
            Some(p) => {
                let outcome = rng.random::<bool>();
                let pivot_row = self.rows[p].clone();
                for i in 0..2 * self.n {
                    if i != p && self.rows[i].anticommutes(&ox, &oz) {
                        self.rows[i].mul_assign(&pivot_row);
                    }
                }
                self.rows[p - self.n] = pivot_row;
                self.rows[p] = Row {
                    x: ox,
                    z: oz,
                    phase: (ophase + if outcome { 2 } else { 0 }) & 3,
                };
                outcome
            }
            None => {
                // deterministic: obs = ± product of stabilizers flagged by
                // anticommuting destabilizers
                let mut acc = Row {
                    x: BitVec::zeros(self.n),
                    z: BitVec::zeros(self.n),
                    phase: 0,
                };
                for i in 0..self.n {
                    if self.rows[i].anticommutes(&ox, &oz) {
                        let stab = self.rows[self.n + i].clone();
                        acc.mul_assign(&stab);
                    }
                }
                debug_assert_eq!(acc.x.as_words(), ox.as_words());
                debug_assert_eq!(acc.z.as_words(), oz.as_words());
                ((acc.phase + 4 - ophase) & 3) == 2
            }
        }
    }

    /// Measure qubit `q` in the Z basis.
    pub fn measure_z(&mut self, q: usize, rng: &mut impl Rng) -> bool {
        self.measure_pauli(&PauliOperator::single(q as u32, crate::pauli::Pauli::Z), rng)
    }

    /// Reset qubit `q` to |0⟩.
    pub fn reset(&mut self, q: usize, rng: &mut impl Rng) {
        if self.measure_z(q, rng) {
            self.x(q);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pauli::Pauli;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng() -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(7)
    }

    #[test]
    fn z_on_zero_state_deterministic() {
        let mut t = StabilizerTableau::new(2);
        let mut r = rng();
        assert!(!t.measure_z(0, &mut r));
        let zz = PauliOperator::from_support([0, 1], Pauli::Z);
        assert!(t.is_deterministic(&zz));
        assert!(!t.measure_pauli(&zz, &mut r));
    }

    #[test]
    fn x_measurement_random_then_repeatable() {
        let x0 = PauliOperator::single(0, Pauli::X);
        let mut seen = [false, false];
        for seed in 0..32 {
            let mut t = StabilizerTableau::new(1);
            let mut r = ChaCha8Rng::seed_from_u64(seed);
            assert!(!t.is_deterministic(&x0));
            let m1 = t.measure_pauli(&x0, &mut r);
            let m2 = t.measure_pauli(&x0, &mut r);
            assert_eq!(m1, m2);
            seen[m1 as usize] = true;
        }
        assert!(seen[0] && seen[1]);
    }

    #[test]
    fn bell_pair_correlations() {
        let mut t = StabilizerTableau::new(2);
        let mut r = rng();
        t.h(0);
        t.cx(0, 1);
        let zz = PauliOperator::from_support([0, 1], Pauli::Z);
        let xx = PauliOperator::from_support([0, 1], Pauli::X);
        assert!(!t.measure_pauli(&zz, &mut r));
        assert!(!t.measure_pauli(&xx, &mut r));
        // single-qubit Z now random but matched between the two qubits
        let m0 = t.measure_z(0, &mut r);
        let m1 = t.measure_z(1, &mut r);
        assert_eq!(m0, m1);
    }

    #[test]
    fn pauli_errors_flip_outcomes() {
        let mut t = StabilizerTableau::new(1);
        let mut r = rng();
        t.x(0);
        assert!(t.measure_z(0, &mut r));
        t.x(0);
        assert!(!t.measure_z(0, &mut r));
        // Z error is invisible in the Z basis
        t.z(0);
        assert!(!t.measure_z(0, &mut r));
    }

    #[test]
    fn s_gate_takes_x_to_y() {
        // measure Y on S|+⟩ → deterministic +1
        let mut t = StabilizerTableau::new(1);
        let mut r = rng();
        t.h(0);
        t.s(0);
        let y = PauliOperator::single(0, Pauli::Y);
        assert!(t.is_deterministic(&y));
        assert!(!t.measure_pauli(&y, &mut r));
    }

    #[test]
    fn reset_clears_state() {
        let mut t = StabilizerTableau::new(2);
        let mut r = rng();
        t.h(0);
        t.cx(0, 1);
        t.reset(0, &mut r);
        assert!(!t.measure_z(0, &mut r));
    }
}
