//! Subsystem-code construction and validation for the heavy-hex lattice.

mod hhc;
mod lattice;
mod rssc;

pub use hhc::build_hhc;
pub use lattice::{build_heavy_hex, build_hhc_lattice, HeavyHexLattice, VertexRole, Wiring};
pub use rssc::build_rssc;

use std::fmt::Write as _;

use thiserror::Error;

use crate::pauli::{Pauli, PauliOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CodeKind {
    Rssc,
    Hhc,
}

impl CodeKind {
    pub fn name(self) -> &'static str {
        match self {
            CodeKind::Rssc => "rssc",
            CodeKind::Hhc => "hhc",
        }
    }
}

#[derive(Debug, Error)]
pub enum CodeError {
    #[error("distance must be odd and ≥ 3, got {0}")]
    BadDistance(u32),
    #[error("brute-force budget exceeded: weight {weight} over {n} qubits")]
    BudgetExceeded { weight: usize, n: usize },
}

/// A CSS subsystem code: gauge generators, a stabilizer basis expressed as
/// products of gauge generators, and one logical operator pair.
#[derive(Clone, Debug)]
pub struct SubsystemCode {
    pub kind: CodeKind,
    pub distance: u32,
    pub n_data: u32,
    pub gauge_x: Vec<PauliOperator>,
    pub gauge_z: Vec<PauliOperator>,
    pub stab_x: Vec<PauliOperator>,
    pub stab_z: Vec<PauliOperator>,
    /// stabilizer basis elements as sets of `gauge_x` / `gauge_z` indices
    pub stab_x_decomp: Vec<Vec<usize>>,
    pub stab_z_decomp: Vec<Vec<usize>>,
    pub logical_x: PauliOperator,
    pub logical_z: PauliOperator,
    /// planar embedding coordinates per data qubit
    pub coords: Vec<(i32, i32)>,
    /// rank-computed number of gauge qubits
    pub gauge_qubits: u32,
}

impl SubsystemCode {
    /// Data qubits along the canonical logical-Z representative, site 0 at
    /// the corner shared with logical X.
    pub fn sites_along_logical_z(&self) -> Vec<u32> {
        let mut sites: Vec<u32> = self.logical_z.support().collect();
        // canonical logicals are grid strings; order along the operator
        sites.sort();
        sites
    }

    /// Plain-text export: header lines then one generator per line.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# hexqec code v1\n");
        let _ = writeln!(out, "kind {}", self.kind.name());
        let _ = writeln!(out, "distance {}", self.distance);
        let _ = writeln!(out, "data_qubits {}", self.n_data);
        let _ = writeln!(out, "gauge_qubits {}", self.gauge_qubits);
        let _ = writeln!(
            out,
            "counts gauge_x {} gauge_z {} stab_x {} stab_z {}",
            self.gauge_x.len(),
            self.gauge_z.len(),
            self.stab_x.len(),
            self.stab_z.len()
        );
        for g in &self.gauge_x {
            let _ = writeln!(out, "gauge_x {g}");
        }
        for g in &self.gauge_z {
            let _ = writeln!(out, "gauge_z {g}");
        }
        for (s, d) in self.stab_x.iter().zip(&self.stab_x_decomp) {
            let _ = write!(out, "stab_x {s} ; gauge");
            for i in d {
                let _ = write!(out, " {i}");
            }
            out.push('\n');
        }
        for (s, d) in self.stab_z.iter().zip(&self.stab_z_decomp) {
            let _ = write!(out, "stab_z {s} ; gauge");
            for i in d {
                let _ = write!(out, " {i}");
            }
            out.push('\n');
        }
        let _ = writeln!(out, "logical_x {}", self.logical_x);
        let _ = writeln!(out, "logical_z {}", self.logical_z);
        out
    }
}

/// GF(2) support masks for pure-type operators; data-qubit count is capped
/// at 128 which covers all supported distances.
pub(crate) fn support_mask(p: &PauliOperator) -> u128 {
    let mut m = 0u128;
    for q in p.support() {
        debug_assert!(q < 128);
        m |= 1u128 << q;
    }
    m
}

pub(crate) fn rank_gf2(masks: &[u128]) -> usize {
    let mut basis: Vec<u128> = Vec::new();
    for &m in masks {
        let mut v = m;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

pub(crate) fn in_span(v: u128, sorted_basis: &[u128]) -> bool {
    let mut v = v;
    for &b in sorted_basis {
        v = v.min(v ^ b);
    }
    v == 0
}

pub(crate) fn reduce_basis(masks: &[u128]) -> Vec<u128> {
    let mut basis: Vec<u128> = Vec::new();
    for &m in masks {
        let mut v = m;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

/// Greedy canonical stabilizer basis from central singles and pairs of
/// gauge generators. Returns (stabilizers, decompositions).
pub(crate) fn stabilizer_basis_from_pairs(
    own: &[PauliOperator],
    opposite: &[PauliOperator],
) -> (Vec<PauliOperator>, Vec<Vec<usize>>) {
    let own_masks: Vec<u128> = own.iter().map(support_mask).collect();
    let opp_masks: Vec<u128> = opposite.iter().map(support_mask).collect();
    let central = |m: u128| opp_masks.iter().all(|&o| (m & o).count_ones() % 2 == 0);
    let mut basis: Vec<u128> = Vec::new();
    let mut stabs = Vec::new();
    let mut decomp = Vec::new();
    let try_add = |m: u128, idxs: Vec<usize>, stabs: &mut Vec<PauliOperator>,
                       decomp: &mut Vec<Vec<usize>>, basis: &mut Vec<u128>| {
        let mut residual = m;
        for &b in basis.iter() {
            residual = residual.min(residual ^ b);
        }
        if !central(m) || residual == 0 {
            return;
        }
        basis.push(residual);
        basis.sort_unstable_by(|a, b| b.cmp(a));
        let mut op = PauliOperator::identity();
        for &i in &idxs {
            op = op.mul(&own[i]);
        }
        stabs.push(op);
        decomp.push(idxs);
    };
    for i in 0..own.len() {
        try_add(own_masks[i], vec![i], &mut stabs, &mut decomp, &mut basis);
    }
    for i in 0..own.len() {
        for j in i + 1..own.len() {
            try_add(
                own_masks[i] ^ own_masks[j],
                vec![i, j],
                &mut stabs,
                &mut decomp,
                &mut basis,
            );
        }
    }
    (stabs, decomp)
}

/// Stabilizer basis as arbitrary-size subsets of gauge generators; used for
/// the HHC whose Bacon-Shor stabilizers are longer products.
pub(crate) fn stabilizer_basis_from_subsets(
    own: &[PauliOperator],
    opposite: &[PauliOperator],
    subsets: &[Vec<usize>],
) -> (Vec<PauliOperator>, Vec<Vec<usize>>) {
    let opp_masks: Vec<u128> = opposite.iter().map(support_mask).collect();
    let mut stabs = Vec::new();
    let mut decomp = Vec::new();
    for idxs in subsets {
        let mut op = PauliOperator::identity();
        for &i in idxs {
            op = op.mul(&own[i]);
        }
        let m = support_mask(&op);
        assert!(
            opp_masks.iter().all(|&o| (m & o).count_ones() % 2 == 0),
            "proposed stabilizer is not central"
        );
        stabs.push(op);
        decomp.push(idxs.clone());
    }
    (stabs, decomp)
}

/// One validation finding; an empty report means the code is consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ValidationIssue {
    StabGaugeAnticommute { stab: String, gauge: String },
    StabPairAnticommute { a: String, b: String },
    LogicalPairCommutes,
    LogicalGaugeAnticommute { logical: String, gauge: String },
    StabNotInGaugeSpan { stab: String },
    WrongGaugeQubitCount { expected: u32, got: u32 },
    DecompositionMismatch { stab: String },
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub issues: Vec<ValidationIssue>,
}

impl ValidationReport {
    pub fn is_clean(&self) -> bool {
        self.issues.is_empty()
    }
}

/// Check commutation structure, ranks and logical properties of a code.
pub fn validate_code(code: &SubsystemCode) -> ValidationReport {
    let mut report = ValidationReport::default();
    let all_gauge = || code.gauge_x.iter().chain(code.gauge_z.iter());
    for s in code.stab_x.iter().chain(code.stab_z.iter()) {
        for g in all_gauge() {
            if !s.commutes(g) {
                report.issues.push(ValidationIssue::StabGaugeAnticommute {
                    stab: s.to_string(),
                    gauge: g.to_string(),
                });
            }
        }
    }
    let stabs: Vec<&PauliOperator> = code.stab_x.iter().chain(code.stab_z.iter()).collect();
    for (i, a) in stabs.iter().enumerate() {
        for b in stabs.iter().skip(i + 1) {
            if !a.commutes(b) {
                report.issues.push(ValidationIssue::StabPairAnticommute {
                    a: a.to_string(),
                    b: b.to_string(),
                });
            }
        }
    }
    if code.logical_x.commutes(&code.logical_z) {
        report.issues.push(ValidationIssue::LogicalPairCommutes);
    }
    for l in [&code.logical_x, &code.logical_z] {
        for g in all_gauge() {
            if !l.commutes(g) {
                report.issues.push(ValidationIssue::LogicalGaugeAnticommute {
                    logical: l.to_string(),
                    gauge: g.to_string(),
                });
            }
        }
    }
    // stabilizers must lie in the gauge span, and decompositions must match
    let gx: Vec<u128> = code.gauge_x.iter().map(support_mask).collect();
    let gz: Vec<u128> = code.gauge_z.iter().map(support_mask).collect();
    let bx = reduce_basis(&gx);
    let bz = reduce_basis(&gz);
    for (s, basis) in code
        .stab_x
        .iter()
        .map(|s| (s, &bx))
        .chain(code.stab_z.iter().map(|s| (s, &bz)))
    {
        if !in_span(support_mask(s), basis) {
            report.issues.push(ValidationIssue::StabNotInGaugeSpan {
                stab: s.to_string(),
            });
        }
    }
    for ((s, d), gauge) in code
        .stab_x
        .iter()
        .zip(&code.stab_x_decomp)
        .map(|sd| (sd, &code.gauge_x))
        .chain(
            code.stab_z
                .iter()
                .zip(&code.stab_z_decomp)
                .map(|sd| (sd, &code.gauge_z)),
        )
    {
        let mut acc = 0u128;
        for &i in d {
            acc ^= support_mask(&gauge[i]);
        }
        if acc != support_mask(s) {
            report.issues.push(ValidationIssue::DecompositionMismatch {
                stab: s.to_string(),
            });
        }
    }
    // gauge-qubit count from the symplectic rank of the anticommutation
    // matrix between Z and X generators
    let mut m_rows: Vec<u128> = Vec::new();
    for z in &gz {
        let mut row = 0u128;
        for (j, x) in gx.iter().enumerate() {
            if (z & x).count_ones() % 2 == 1 {
                row |= 1u128 << j;
            }
        }
        m_rows.push(row);
    }
    let g = rank_gf2(&m_rows) as u32;
    if g != code.gauge_qubits {
        report.issues.push(ValidationIssue::WrongGaugeQubitCount {
            expected: code.gauge_qubits,
            got: g,
        });
    }
    report
}

/// Result of the brute-force distance search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceResult {
    Distance(u32),
    ExceedsMaxWeight(u32),
}

/// Minimum weight of a dressed logical operator, searched over pure-type
/// Paulis up to `max_weight`. For CSS codes the distance is attained on a
/// pure type.
pub fn code_distance_bruteforce(
    code: &SubsystemCode,
    max_weight: u32,
) -> Result<DistanceResult, CodeError> {
    let n = code.n_data as usize;
    if max_weight as usize > 4 && n > 33 {
        return Err(CodeError::BudgetExceeded {
            weight: max_weight as usize,
            n,
        });
    }
    let sx: Vec<u128> = code.stab_x.iter().map(support_mask).collect();
    let sz: Vec<u128> = code.stab_z.iter().map(support_mask).collect();
    let lx = support_mask(&code.logical_x);
    let lz = support_mask(&code.logical_z);
    // Z-type candidate: commutes with X stabilizers, anticommutes with
    // bare logical X (and symmetrically)
    let check = |v: u128, opp_stabs: &[u128], bar: u128| {
        (v & bar).count_ones() % 2 == 1
            && opp_stabs.iter().all(|&s| (v & s).count_ones() % 2 == 0)
    };
    for w in 1..=max_weight {
        let mut found = false;
        let mut visit = |v: u128| {
            if check(v, &sx, lx) || check(v, &sz, lz) {
                found = true;
            }
        };
        combinations(n, w as usize, &mut visit);
        if found {
            return Ok(DistanceResult::Distance(w));
        }
    }
    Ok(DistanceResult::ExceedsMaxWeight(max_weight))
}

fn combinations(n: usize, w: usize, visit: &mut impl FnMut(u128)) {
    fn rec(start: usize, n: usize, left: usize, acc: u128, visit: &mut impl FnMut(u128)) {
        if left == 0 {
            visit(acc);
            return;
        }
        for q in start..=n - left {
            rec(q + 1, n, left - 1, acc | (1u128 << q), visit);
        }
    }
    rec(0, n, w, 0, visit);
}

/// Helper shared by the builders: pure-type generator from grid points.
pub(crate) fn css_op(qubits: impl IntoIterator<Item = u32>, p: Pauli) -> PauliOperator {
    PauliOperator::from_support(qubits, p)
}
