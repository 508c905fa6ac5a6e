//! Sparse multi-qubit Pauli operators with phase tracking.
//!
//! An operator is stored as `i^phase · ∏_q X_q^{x} Z_q^{z}` with one
//! `(x, z)` pair per supported qubit. `Y = i·XZ`, so the displayed phase of
//! an operator containing Y factors differs from the internal exponent.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::bits::BitVec;

/// Phase of a Pauli operator, an integer power of `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Phase {
    PlusOne,
    PlusI,
    MinusOne,
    MinusI,
}

impl Phase {
    pub fn from_i_exponent(e: u8) -> Phase {
        match e & 3 {
            0 => Phase::PlusOne,
            1 => Phase::PlusI,
            2 => Phase::MinusOne,
            _ => Phase::MinusI,
        }
    }

    pub fn i_exponent(self) -> u8 {
        match self {
            Phase::PlusOne => 0,
            Phase::PlusI => 1,
            Phase::MinusOne => 2,
            Phase::MinusI => 3,
        }
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Phase::PlusOne => write!(f, "+"),
            Phase::PlusI => write!(f, "+i"),
            Phase::MinusOne => write!(f, "-"),
            Phase::MinusI => write!(f, "-i"),
        }
    }
}

/// Single-qubit Pauli axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pauli {
    X,
    Y,
    Z,
}

impl Pauli {
    fn xz(self) -> (bool, bool) {
        match self {
            Pauli::X => (true, false),
            Pauli::Y => (true, true),
            Pauli::Z => (false, true),
        }
    }
}

#[derive(Debug, Error)]
pub enum PauliParseError {
    #[error("bad Pauli term {0:?}: expected e.g. X3, Y0, Z12")]
    BadTerm(String),
    #[error("duplicate qubit {0} in Pauli string")]
    DuplicateQubit(u32),
}

/// Sparse n-qubit Pauli operator with phase.
///
/// Terms are kept sorted by qubit index; qubits not listed act as identity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    /// (qubit, bits) with bit 0 = X component, bit 1 = Z component; never 0.
    terms: Vec<(u32, u8)>,
    /// Exponent of i in the `i^p ∏ X^x Z^z` normal form.
    phase_i: u8,
}

impl Default for PauliOperator {
    fn default() -> Self {
        Self::identity()
    }
}

impl PauliOperator {
    pub fn identity() -> Self {
        PauliOperator {
            terms: Vec::new(),
            phase_i: 0,
        }
    }

    pub fn single(qubit: u32, p: Pauli) -> Self {
        let (x, z) = p.xz();
        let bits = x as u8 | (z as u8) << 1;
        // Y = i·XZ
        let phase_i = if x && z { 1 } else { 0 };
        PauliOperator {
            terms: vec![(qubit, bits)],
            phase_i,
        }
    }

    /// Pure X (or Z) operator on a set of qubits, e.g. a CSS generator.
    pub fn from_support(qubits: impl IntoIterator<Item = u32>, p: Pauli) -> Self {
        let mut m: BTreeMap<u32, u8> = BTreeMap::new();
        let (x, z) = p.xz();
        let bits = x as u8 | (z as u8) << 1;
        let mut ys = 0u8;
        for q in qubits {
            m.insert(q, bits);
        }
        if x && z {
            ys = m.len() as u8;
        }
        PauliOperator {
            terms: m.into_iter().collect(),
            phase_i: ys & 3,
        }
    }

    pub fn phase(&self) -> Phase {
        Phase::from_i_exponent(self.phase_i)
    }

    pub fn is_identity(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.terms.len()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.terms.iter().map(|&(q, _)| q)
    }

    /// Component at `qubit`, if non-identity.
    pub fn component(&self, qubit: u32) -> Option<Pauli> {
        self.terms
            .binary_search_by_key(&qubit, |&(q, _)| q)
            .ok()
            .map(|i| match self.terms[i].1 {
                1 => Pauli::X,
                2 => Pauli::Z,
                _ => Pauli::Y,
            })
    }

    pub fn x_bits(&self, n: usize) -> BitVec {
        BitVec::from_ones(
            n,
            self.terms
                .iter()
                .filter(|&&(_, b)| b & 1 != 0)
                .map(|&(q, _)| q as usize),
        )
    }

    pub fn z_bits(&self, n: usize) -> BitVec {
        BitVec::from_ones(
            n,
            self.terms
                .iter()
                .filter(|&&(_, b)| b & 2 != 0)
                .map(|&(q, _)| q as usize),
        )
    }

    /// Product `self · other` with exact phase.
    pub fn mul(&self, other: &PauliOperator) -> PauliOperator {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut phase = (self.phase_i + other.phase_i) & 3;
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len()
                || (i < self.terms.len() && self.terms[i].0 <= other.terms[j].0);
            let take_right = i >= self.terms.len()
                || (j < other.terms.len() && other.terms[j].0 <= self.terms[i].0);
            if take_left && take_right {
                // same qubit: X^{x1}Z^{z1}·X^{x2}Z^{z2} = (-1)^{z1·x2} X^{x1⊕x2}Z^{z1⊕z2}
                let (q, a) = self.terms[i];
                let b = other.terms[j].1;
                if (a >> 1) & (b & 1) == 1 {
                    phase = (phase + 2) & 3;
                }
                let c = a ^ b;
                if c != 0 {
                    terms.push((q, c));
                }
                i += 1;
                j += 1;
            } else if take_left {
                terms.push(self.terms[i]);
                i += 1;
            } else {
                terms.push(other.terms[j]);
                j += 1;
            }
        }
        PauliOperator {
            terms,
            phase_i: phase,
        }
    }

    /// True iff `self` and `other` commute (symplectic inner product is even).
    pub fn commutes(&self, other: &PauliOperator) -> bool {
        let mut anti = 0u32;
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (qa, a) = self.terms[i];
            let (qb, b) = other.terms[j];
            if qa < qb {
                i += 1;
            } else if qb < qa {
                j += 1;
            } else {
                // anticommute componentwise iff x1·z2 + z1·x2 is odd
                let p = ((a & 1) & (b >> 1)) ^ (((a >> 1) & 1) & (b & 1));
                anti ^= p as u32;
                i += 1;
                j += 1;
            }
        }
        anti == 0
    }

    /// Parse a sparse Pauli string such as `"X3 X7 Z12"`. Phase prefixes are
    /// not part of the format; the result always has phase +1 per Y factor
    /// convention (i.e. `from_support`-style).
    pub fn parse(s: &str) -> Result<PauliOperator, PauliParseError> {
        let mut m: BTreeMap<u32, Pauli> = BTreeMap::new();
        for tok in s.split_whitespace() {
            let (axis, rest) = tok.split_at(1);
            let p = match axis {
                "X" | "x" => Pauli::X,
                "Y" | "y" => Pauli::Y,
                "Z" | "z" => Pauli::Z,
                _ => return Err(PauliParseError::BadTerm(tok.into())),
            };
            let q: u32 = rest
                .parse()
                .map_err(|_| PauliParseError::BadTerm(tok.into()))?;
            if m.insert(q, p).is_some() {
                return Err(PauliParseError::DuplicateQubit(q));
            }
        }
        let mut op = PauliOperator::identity();
        for (q, p) in m {
            op = op.mul(&PauliOperator::single(q, p));
        }
        // normalize phase to the +1 convention for parsed strings
        op.phase_i = op.terms.iter().filter(|&&(_, b)| b == 3).count() as u8 & 3;
        Ok(op)
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "{}I", self.phase());
        }
        // factor one i out of every Y = i·XZ term for display
        let ys = self.terms.iter().filter(|&&(_, b)| b == 3).count() as u8;
        let shown = Phase::from_i_exponent(self.phase_i.wrapping_sub(ys));
        if shown != Phase::PlusOne {
            write!(f, "{} ", shown)?;
        }
        let mut first = true;
        for &(q, b) in &self.terms {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let c = match b {
                1 => 'X',
                2 => 'Z',
                _ => 'Y',
            };
            write!(f, "{c}{q}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_qubit_relations() {
        let x = PauliOperator::single(0, Pauli::X);
        let y = PauliOperator::single(0, Pauli::Y);
        let z = PauliOperator::single(0, Pauli::Z);
        // X·Z = -i·Y
        let xz = x.mul(&z);
        assert_eq!(xz.component(0), Some(Pauli::Y));
        assert_eq!(xz.phase_i, (y.phase_i + 3) & 3); // -i relative to Y
        // I·P = P
        let id = PauliOperator::identity();
        assert_eq!(id.mul(&y), y);
        // X² = I
        assert!(x.mul(&x).is_identity());
        assert_eq!(x.mul(&x).phase(), Phase::PlusOne);
    }

    #[test]
    fn two_qubit_product() {
        // (X⊗X)·(Z⊗Z) = (−i)²·(Y⊗Y) = −(Y⊗Y)
        let xx = PauliOperator::from_support([0, 1], Pauli::X);
        let zz = PauliOperator::from_support([0, 1], Pauli::Z);
        let yy = PauliOperator::from_support([0, 1], Pauli::Y);
        let prod = xx.mul(&zz);
        assert_eq!(prod.component(0), Some(Pauli::Y));
        assert_eq!(prod.component(1), Some(Pauli::Y));
        // prod = -YY: phases differ by i^2
        assert_eq!(prod.phase_i, (yy.phase_i + 2) & 3);
    }

    #[test]
    fn commutation() {
        let x = PauliOperator::single(0, Pauli::X);
        let z = PauliOperator::single(0, Pauli::Z);
        assert!(!x.commutes(&z));
        let xx = PauliOperator::from_support([0, 1], Pauli::X);
        let zz = PauliOperator::from_support([0, 1], Pauli::Z);
        assert!(xx.commutes(&zz));
        assert!(xx.commutes(&PauliOperator::identity()));
    }

    #[test]
    fn commutes_matches_phase_difference() {
        // a·b and b·a differ by (−1)^{symplectic product}
        let ops = [
            PauliOperator::parse("X0 Z1").unwrap(),
            PauliOperator::parse("Y0 Y1 X2").unwrap(),
            PauliOperator::parse("Z0 Z2").unwrap(),
            PauliOperator::parse("X1").unwrap(),
        ];
        for a in &ops {
            for b in &ops {
                let ab = a.mul(b);
                let ba = b.mul(a);
                assert_eq!(ab.terms, ba.terms);
                let same_phase = ab.phase_i == ba.phase_i;
                assert_eq!(same_phase, a.commutes(b));
            }
        }
    }

    #[test]
    fn parse_display_roundtrip() {
        let op = PauliOperator::parse("X3 Z12 Y7").unwrap();
        assert_eq!(op.to_string(), "X3 Y7 Z12");
        assert_eq!(op.weight(), 3);
    }
}
