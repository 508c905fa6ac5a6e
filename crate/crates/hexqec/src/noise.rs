//! Per-location error-rate assignments for the four distribution
//! categories: uniform, folded-normal, reciprocal-normal and
//! location-specific ("bad site") noise.
//!
//! Rates are depolarizing-channel parameters: with probability `p` a gate
//! location applies a uniformly random non-identity Pauli on its output
//! qubits, and a measure/initialize/reset location flips its outcome or
//! preparation. Rates are capped at the channel's maximally-mixing point.

use std::fmt::Write as _;

use rand::Rng;
use rand_distr::{Distribution, Normal};
use thiserror::Error;

use crate::circuits::{OpKind, ScheduledCircuit};
use crate::pauli::Pauli;

pub const DEFAULT_PROBED: [OpKind; 3] = [OpKind::Cx, OpKind::H, OpKind::Id];

/// Physical cap for a location kind's error rate.
pub fn rate_cap(kind: OpKind) -> f64 {
    match kind {
        OpKind::Cx => 15.0 / 16.0,
        OpKind::Measure | OpKind::Initialize | OpKind::Reset => 0.5,
        _ => 0.75,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistKind {
    Uniform,
    FoldedNormal,
    ReciprocalNormal,
}

impl DistKind {
    pub fn name(self) -> &'static str {
        match self {
            DistKind::Uniform => "uniform",
            DistKind::FoldedNormal => "folded-normal",
            DistKind::ReciprocalNormal => "reciprocal-normal",
        }
    }
}

/// Parameters of a rate distribution. `alpha` scales the standard
/// deviation: `σ = α·⟨p_in⟩` for folded-normal rates, `σ = α·⟨T1⟩` for the
/// reciprocal-normal coherence-time model with rate `τ/|T1|`.
#[derive(Clone, Debug)]
pub struct DistributionSpec {
    pub kind: DistKind,
    pub mean: f64,
    pub alpha: f64,
    /// gate time; only used by the reciprocal-normal model
    pub tau: f64,
    /// mean coherence time, same unit as `tau`
    pub t1_mean: f64,
    /// truncation floor for |T1| draws
    pub t1_floor: f64,
    pub probed: Vec<OpKind>,
    pub background: f64,
}

impl DistributionSpec {
    pub fn uniform(p_in: f64) -> Self {
        DistributionSpec {
            kind: DistKind::Uniform,
            mean: p_in,
            alpha: 0.0,
            tau: 0.0,
            t1_mean: 1.0,
            t1_floor: 1.0,
            probed: DEFAULT_PROBED.to_vec(),
            background: 0.0,
        }
    }

    pub fn folded_normal(mean: f64, alpha: f64) -> Self {
        DistributionSpec {
            kind: DistKind::FoldedNormal,
            alpha,
            ..Self::uniform(mean)
        }
    }

    /// `tau` and `t1_mean` share a unit; the α=0 rate is `tau/t1_mean`.
    pub fn reciprocal_normal(tau: f64, t1_mean: f64, t1_floor: f64, alpha: f64) -> Self {
        DistributionSpec {
            kind: DistKind::ReciprocalNormal,
            mean: tau / t1_mean,
            alpha,
            tau,
            t1_mean,
            t1_floor,
            probed: DEFAULT_PROBED.to_vec(),
            background: 0.0,
        }
    }

    pub fn with_probed(mut self, probed: &[OpKind]) -> Self {
        self.probed = probed.to_vec();
        self
    }

    pub fn with_background(mut self, background: f64) -> Self {
        self.background = background;
        self
    }
}

/// Pauli restriction for injected errors at a location.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PauliBias {
    Depolarizing,
    ZOnly,
    XOnly,
}

#[derive(Debug, Error)]
pub enum NoiseError {
    #[error("rate {rate} outside [0, {cap}] for kind {kind}")]
    RateOutOfRange { rate: f64, cap: f64, kind: &'static str },
    #[error("site {0} is not a data qubit of the circuit")]
    UnknownSite(u32),
    #[error("assignment parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("assignment covers {got} locations, circuit has {want}")]
    LengthMismatch { got: usize, want: usize },
}

/// Map from fault location (operation index) to error rate, plus per-kind
/// lattice means for naive decoding.
#[derive(Clone, Debug)]
pub struct NoiseAssignment {
    pub rates: Vec<f64>,
    pub bias: Vec<PauliBias>,
    kinds: Vec<OpKind>,
    kind_means: Vec<(OpKind, f64)>,
    pub meta: String,
}

impl NoiseAssignment {
    fn new(circuit: &ScheduledCircuit, rates: Vec<f64>, meta: String) -> Self {
        let kinds: Vec<OpKind> = circuit.ops().iter().map(|o| o.kind).collect();
        let n = rates.len();
        let mut a = NoiseAssignment {
            rates,
            bias: vec![PauliBias::Depolarizing; n],
            kinds,
            kind_means: Vec::new(),
            meta,
        };
        a.recompute_means();
        a
    }

    pub fn recompute_means(&mut self) {
        let mut sums: Vec<(OpKind, f64, usize)> = Vec::new();
        for (&kind, &rate) in self.kinds.iter().zip(&self.rates) {
            match sums.iter_mut().find(|(k, _, _)| *k == kind) {
                Some((_, s, c)) => {
                    *s += rate;
                    *c += 1;
                }
                None => sums.push((kind, rate, 1)),
            }
        }
        self.kind_means = sums
            .into_iter()
            .map(|(k, s, c)| (k, s / c as f64))
            .collect();
    }

    pub fn kind_of(&self, loc: usize) -> OpKind {
        self.kinds[loc]
    }

    /// Arithmetic mean rate of all locations of `kind`.
    pub fn kind_mean(&self, kind: OpKind) -> f64 {
        self.kind_means
            .iter()
            .find(|(k, _)| *k == kind)
            .map(|(_, m)| *m)
            .unwrap_or(0.0)
    }

    /// Text export `location_id rate [bias]` with a metadata header.
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        out.push_str("# hexqec assignment v1\n");
        for line in self.meta.lines() {
            let _ = writeln!(out, "# {line}");
        }
        for (i, (&r, &b)) in self.rates.iter().zip(&self.bias).enumerate() {
            match b {
                PauliBias::Depolarizing => {
                    let _ = writeln!(out, "{i} {r:.17e}");
                }
                PauliBias::ZOnly => {
                    let _ = writeln!(out, "{i} {r:.17e} z");
                }
                PauliBias::XOnly => {
                    let _ = writeln!(out, "{i} {r:.17e} x");
                }
            }
        }
        out
    }

    /// Parse the `export_text` format against a circuit.
    pub fn import_text(circuit: &ScheduledCircuit, text: &str) -> Result<Self, NoiseError> {
        let mut rates = vec![0.0; circuit.ops().len()];
        let mut bias = vec![PauliBias::Depolarizing; circuit.ops().len()];
        let mut seen = 0usize;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let err = |msg: &str| NoiseError::Parse {
                line: lineno + 1,
                msg: msg.into(),
            };
            let idx: usize = parts
                .next()
                .ok_or_else(|| err("missing index"))?
                .parse()
                .map_err(|_| err("bad index"))?;
            let rate: f64 = parts
                .next()
                .ok_or_else(|| err("missing rate"))?
                .parse()
                .map_err(|_| err("bad rate"))?;
            if idx >= rates.len() {
                return Err(err("index out of range"));
            }
            rates[idx] = rate;
            bias[idx] = match parts.next() {
                None => PauliBias::Depolarizing,
                Some("z") => PauliBias::ZOnly,
                Some("x") => PauliBias::XOnly,
                Some(_) => return Err(err("bad bias tag")),
            };
            seen += 1;
        }
        if seen != rates.len() {
            return Err(NoiseError::LengthMismatch {
                got: seen,
                want: rates.len(),
            });
        }
        let mut a = NoiseAssignment::new(circuit, rates, "imported".into());
        a.bias = bias;
        Ok(a)
    }
}

/// Uniform rates: probed kinds get `p_in`, everything else `background`.
pub fn assign_uniform(
    circuit: &ScheduledCircuit,
    p_in: f64,
    probed: &[OpKind],
    background: f64,
) -> Result<NoiseAssignment, NoiseError> {
    for op in circuit.ops() {
        let r = if probed.contains(&op.kind) { p_in } else { background };
        let cap = rate_cap(op.kind);
        if !(0.0..=cap).contains(&r) {
            return Err(NoiseError::RateOutOfRange {
                rate: r,
                cap,
                kind: op.kind.name(),
            });
        }
    }
    let rates = circuit
        .ops()
        .iter()
        .map(|op| if probed.contains(&op.kind) { p_in } else { background })
        .collect();
    Ok(NoiseAssignment::new(
        circuit,
        rates,
        format!("dist uniform\np_in {p_in}\nbackground {background}"),
    ))
}

/// Independent |N(mean, (α·mean)²)| draw per probed location, frozen for
/// the instance.
pub fn sample_folded_normal(
    circuit: &ScheduledCircuit,
    spec: &DistributionSpec,
    rng: &mut impl Rng,
) -> NoiseAssignment {
    debug_assert_eq!(spec.kind, DistKind::FoldedNormal);
    let normal = Normal::new(spec.mean, spec.alpha * spec.mean).unwrap();
    let rates = circuit
        .ops()
        .iter()
        .map(|op| {
            if spec.probed.contains(&op.kind) {
                let draw: f64 = normal.sample(rng);
                draw.abs().min(rate_cap(op.kind))
            } else {
                spec.background
            }
        })
        .collect();
    NoiseAssignment::new(
        circuit,
        rates,
        format!(
            "dist folded-normal\nmean {}\nalpha {}\nbackground {}",
            spec.mean, spec.alpha, spec.background
        ),
    )
}

/// Rate `τ/|T1|` with `T1 ~ N(⟨T1⟩, (α⟨T1⟩)²)` and `|T1|` clamped to the
/// truncation floor.
pub fn sample_reciprocal_normal(
    circuit: &ScheduledCircuit,
    spec: &DistributionSpec,
    rng: &mut impl Rng,
) -> NoiseAssignment {
    debug_assert_eq!(spec.kind, DistKind::ReciprocalNormal);
    let normal = Normal::new(spec.t1_mean, spec.alpha * spec.t1_mean).unwrap();
    let rates = circuit
        .ops()
        .iter()
        .map(|op| {
            if spec.probed.contains(&op.kind) {
                let t1: f64 = normal.sample(rng);
                let t1 = t1.abs().max(spec.t1_floor);
                (spec.tau / t1).min(rate_cap(op.kind))
            } else {
                spec.background
            }
        })
        .collect();
    NoiseAssignment::new(
        circuit,
        rates,
        format!(
            "dist reciprocal-normal\ntau {}\nt1_mean {}\nt1_floor {}\nalpha {}\nbackground {}",
            spec.tau, spec.t1_mean, spec.t1_floor, spec.alpha, spec.background
        ),
    )
}

/// Elevate all h/id locations on the listed data qubits and all cx
/// locations touching them to `p_bad`, optionally with a Pauli bias.
pub fn apply_bad_sites(
    assignment: &NoiseAssignment,
    circuit: &ScheduledCircuit,
    sites: &[u32],
    p_bad: f64,
    bias: PauliBias,
) -> Result<NoiseAssignment, NoiseError> {
    let n_data = circuit
        .meta
        .iter()
        .find(|(k, _)| k == "n_data")
        .and_then(|(_, v)| v.parse::<u32>().ok());
    for &s in sites {
        if s >= circuit.qubit_count() || n_data.map(|n| s >= n).unwrap_or(false) {
            return Err(NoiseError::UnknownSite(s));
        }
    }
    let mut out = assignment.clone();
    for (i, op) in circuit.ops().iter().enumerate() {
        let touches = op.qubits().any(|q| sites.contains(&q));
        if !touches {
            continue;
        }
        let elevated = match op.kind {
            OpKind::H | OpKind::Id => true,
            OpKind::Cx => true,
            _ => false,
        };
        if elevated {
            let cap = rate_cap(op.kind);
            if !(0.0..=cap).contains(&p_bad) {
                return Err(NoiseError::RateOutOfRange {
                    rate: p_bad,
                    cap,
                    kind: op.kind.name(),
                });
            }
            out.rates[i] = p_bad;
            out.bias[i] = bias;
        }
    }
    out.recompute_means();
    out.meta = format!(
        "{}\nbad_sites {:?} p_bad {} bias {:?}",
        assignment.meta, sites, p_bad, bias
    );
    Ok(out)
}

/// A sampled fault at one location.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FaultAction {
    None,
    /// Pauli error on the location's output qubit(s); `None` = identity on
    /// that qubit (two-qubit locations only).
    Pauli(Option<Pauli>, Option<Pauli>),
    /// Flip the classical outcome (measure) or prepared state (init/reset).
    FlipOutcome,
}

const ONE_QUBIT_PAULIS: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];

/// Sample the channel at one location.
pub fn channel_sample(
    kind: OpKind,
    rate: f64,
    bias: PauliBias,
    rng: &mut impl Rng,
) -> FaultAction {
    if rate <= 0.0 || !rng.random_bool(rate) {
        return FaultAction::None;
    }
    match kind {
        OpKind::Measure | OpKind::Initialize | OpKind::Reset => FaultAction::FlipOutcome,
        OpKind::Cx => match bias {
            PauliBias::Depolarizing => {
                // uniform over the 15 non-identity two-qubit Paulis
                let k = rng.random_range(0..15u32) + 1;
                let a = k / 4;
                let b = k % 4;
                let pick = |v: u32| (v > 0).then(|| ONE_QUBIT_PAULIS[v as usize - 1]);
                FaultAction::Pauli(pick(a), pick(b))
            }
            PauliBias::ZOnly => {
                let k = rng.random_range(0..3u32) + 1;
                FaultAction::Pauli(
                    (k / 2 > 0).then_some(Pauli::Z),
                    (k % 2 > 0).then_some(Pauli::Z),
                )
            }
            PauliBias::XOnly => {
                let k = rng.random_range(0..3u32) + 1;
                FaultAction::Pauli(
                    (k / 2 > 0).then_some(Pauli::X),
                    (k % 2 > 0).then_some(Pauli::X),
                )
            }
        },
        _ => match bias {
            PauliBias::Depolarizing => {
                let k = rng.random_range(0..3usize);
                FaultAction::Pauli(Some(ONE_QUBIT_PAULIS[k]), None)
            }
            PauliBias::ZOnly => FaultAction::Pauli(Some(Pauli::Z), None),
            PauliBias::XOnly => FaultAction::Pauli(Some(Pauli::X), None),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuits::{Basis, Schedule};
    use crate::rng::{stream_rng, Stream};

    fn small_circuit() -> ScheduledCircuit {
        let layout = crate::circuits::build_rssc_cycle_layout(3).unwrap();
        crate::circuits::build_memory_experiment(
            &layout,
            Schedule::with_total(2, 4).unwrap(),
            Basis::Z,
        )
    }

    #[test]
    fn uniform_assignment() {
        let c = small_circuit();
        let a = assign_uniform(&c, 1e-3, &DEFAULT_PROBED, 0.0).unwrap();
        for (i, op) in c.ops().iter().enumerate() {
            let expect = if DEFAULT_PROBED.contains(&op.kind) { 1e-3 } else { 0.0 };
            assert_eq!(a.rates[i], expect);
        }
        assert!((a.kind_mean(OpKind::Cx) - 1e-3).abs() < 1e-12);
        assert_eq!(a.kind_mean(OpKind::Measure), 0.0);
        assert!(assign_uniform(&c, 1.5, &DEFAULT_PROBED, 0.0).is_err());
    }

    #[test]
    fn zero_rate_means_identity() {
        let mut rng = stream_rng(1, Stream::Shot, 0);
        for _ in 0..100 {
            assert_eq!(
                channel_sample(OpKind::Cx, 0.0, PauliBias::Depolarizing, &mut rng),
                FaultAction::None
            );
        }
    }

    #[test]
    fn one_qubit_channel_marginals() {
        // rate 0.75 → each Pauli with probability 1/4
        let mut rng = stream_rng(2, Stream::Shot, 0);
        let mut counts = [0usize; 4];
        let n = 1_000_000;
        for _ in 0..n {
            match channel_sample(OpKind::H, 0.75, PauliBias::Depolarizing, &mut rng) {
                FaultAction::None => counts[0] += 1,
                FaultAction::Pauli(Some(Pauli::X), None) => counts[1] += 1,
                FaultAction::Pauli(Some(Pauli::Y), None) => counts[2] += 1,
                FaultAction::Pauli(Some(Pauli::Z), None) => counts[3] += 1,
                other => panic!("unexpected {other:?}"),
            }
        }
        // 4σ band around n/4
        let sigma = (n as f64 * 0.25 * 0.75).sqrt();
        for &c in &counts {
            assert!((c as f64 - n as f64 / 4.0).abs() < 4.0 * sigma, "{counts:?}");
        }
    }

    #[test]
    fn two_qubit_channel_uniform_at_cap() {
        let mut rng = stream_rng(3, Stream::Shot, 0);
        let mut counts = std::collections::HashMap::new();
        let n = 160_000;
        for _ in 0..n {
            let f = channel_sample(OpKind::Cx, 15.0 / 16.0, PauliBias::Depolarizing, &mut rng);
            *counts.entry(format!("{f:?}")).or_insert(0usize) += 1;
        }
        assert_eq!(counts.len(), 16);
        let sigma = (n as f64 / 16.0).sqrt();
        for (_, &c) in counts.iter() {
            assert!((c as f64 - n as f64 / 16.0).abs() < 5.0 * sigma);
        }
    }

    #[test]
    fn folded_normal_stats() {
        let c = small_circuit();
        let spec = DistributionSpec::folded_normal(1e-3, 0.3);
        // α=0 reduces to uniform
        let spec0 = DistributionSpec::folded_normal(1e-3, 0.0);
        let mut rng = stream_rng(4, Stream::Assignment, 0);
        let a0 = sample_folded_normal(&c, &spec0, &mut rng);
        let u = assign_uniform(&c, 1e-3, &DEFAULT_PROBED, 0.0).unwrap();
        assert_eq!(a0.rates, u.rates);
        // all rates non-negative, mean within 3 SE (folding negligible at α=0.3)
        let mut rates = Vec::new();
        let mut rng = stream_rng(5, Stream::Assignment, 0);
        while rates.len() < 100_000 {
            let a = sample_folded_normal(&c, &spec, &mut rng);
            rates.extend(
                a.rates
                    .iter()
                    .zip(c.ops())
                    .filter(|(_, op)| DEFAULT_PROBED.contains(&op.kind))
                    .map(|(r, _)| *r),
            );
        }
        assert!(rates.iter().all(|&r| r >= 0.0));
        let mean: f64 = rates.iter().sum::<f64>() / rates.len() as f64;
        let se = 0.3e-3 / (rates.len() as f64).sqrt();
        assert!((mean - 1e-3).abs() < 3.0 * se, "mean {mean}");
    }

    #[test]
    fn reciprocal_normal_alpha_zero_and_monotonicity() {
        let c = small_circuit();
        let spec0 = DistributionSpec::reciprocal_normal(0.1, 100.0, 1.0, 0.0);
        let mut rng = stream_rng(6, Stream::Assignment, 0);
        let a0 = sample_reciprocal_normal(&c, &spec0, &mut rng);
        for (r, op) in a0.rates.iter().zip(c.ops()) {
            if DEFAULT_PROBED.contains(&op.kind) {
                assert!((r - 1e-3).abs() < 1e-15);
            }
        }
        // empirical mean non-decreasing in alpha
        let mut means = Vec::new();
        for (i, alpha) in [0.0, 0.1, 0.2, 0.3, 0.4, 0.5].iter().enumerate() {
            let spec = DistributionSpec::reciprocal_normal(0.1, 100.0, 1.0, *alpha);
            let mut rng = stream_rng(7, Stream::Assignment, i as u64);
            let mut total = 0.0;
            let mut count = 0usize;
            while count < 200_000 {
                let a = sample_reciprocal_normal(&c, &spec, &mut rng);
                for (r, op) in a.rates.iter().zip(c.ops()) {
                    if DEFAULT_PROBED.contains(&op.kind) {
                        total += r;
                        count += 1;
                    }
                }
            }
            means.push(total / count as f64);
        }
        for w in means.windows(2) {
            assert!(w[1] > w[0] - 2e-5, "means {means:?}");
        }
    }

    #[test]
    fn bad_sites_change_only_touching_locations() {
        let c = small_circuit();
        let base = assign_uniform(&c, 5e-4, &DEFAULT_PROBED, 0.0).unwrap();
        let with = apply_bad_sites(&base, &c, &[0], 0.5, PauliBias::Depolarizing).unwrap();
        for (i, op) in c.ops().iter().enumerate() {
            let touches = op.qubits().any(|q| q == 0)
                && matches!(op.kind, OpKind::H | OpKind::Id | OpKind::Cx);
            if touches {
                assert_eq!(with.rates[i], 0.5);
            } else {
                assert_eq!(with.rates[i], base.rates[i]);
            }
        }
        // empty site list leaves the assignment unchanged
        let same = apply_bad_sites(&base, &c, &[], 0.5, PauliBias::Depolarizing).unwrap();
        assert_eq!(same.rates, base.rates);
    }

    #[test]
    fn export_import_roundtrip() {
        let c = small_circuit();
        let base = assign_uniform(&c, 5e-4, &DEFAULT_PROBED, 0.0).unwrap();
        let a = apply_bad_sites(&base, &c, &[2], 0.25, PauliBias::ZOnly).unwrap();
        let text = a.export_text();
        let b = NoiseAssignment::import_text(&c, &text).unwrap();
        assert_eq!(a.rates, b.rates);
        assert_eq!(a.bias, b.bias);
    }

    #[test]
    fn assignments_are_deterministic() {
        let c = small_circuit();
        let spec = DistributionSpec::folded_normal(1e-3, 1.0);
        let a = sample_folded_normal(&c, &spec, &mut stream_rng(9, Stream::Assignment, 3));
        let b = sample_folded_normal(&c, &spec, &mut stream_rng(9, Stream::Assignment, 3));
        assert_eq!(a.rates, b.rates);
    }
}
