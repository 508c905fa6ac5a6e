//! Syndrome-extraction cycles for the heavy-hexagon code.
//!
//! Weight-2 X gauge pairs are measured directly by the flag qubit sitting
//! between the pair. Weight-4 Z plaquettes collect their parity through the
//! pair ancillas of their top and bottom edges into a dedicated syndrome
//! qubit; the collectors are measured afterwards as flags, and a fired flag
//! toggles the plaquette outcome during decoding (the simple deflagging
//! rule). Boundary Z pairs are measured directly.

use super::memory::{CycleRecord, GaugeCycles};
use super::{CheckType, CircuitBuilder, OpKind, ScheduledCircuit};
use crate::codes::{build_hhc, build_hhc_lattice, CodeError, HeavyHexLattice, SubsystemCode, Wiring};

pub struct HhcCycles {
    pub code: SubsystemCode,
    pub lattice: HeavyHexLattice,
    x_pair_aux: Vec<u32>,
    /// per Z plaquette: (d1,d2 top pair, d3,d4 bottom pair, top aux, bottom
    /// aux, syndrome qubit, face row parity odd)
    plaqs: Vec<PlaqWiring>,
    /// per boundary Z pair: (p, q, aux, row parity odd of its stage)
    z_arcs: Vec<(u32, u32, u32, bool)>,
}

#[derive(Clone, Copy, Debug)]
struct PlaqWiring {
    top: [u32; 2],
    bot: [u32; 2],
    top_aux: u32,
    bot_aux: u32,
    syndrome: u32,
    stage_a: bool,
}

pub fn build_hhc_cycle_layout(d: u32) -> Result<HhcCycles, CodeError> {
    let code = build_hhc(d)?;
    let lattice = build_hhc_lattice(d)?;
    let (x_pair_aux, z_plaq_aux, z_arc_aux) = match &lattice.wiring {
        Wiring::Hhc {
            x_pair_aux,
            z_plaq_aux,
            z_arc_aux,
        } => (x_pair_aux.clone(), z_plaq_aux.clone(), z_arc_aux.clone()),
        _ => unreachable!(),
    };
    let xpair = |r: u32, c: u32| ((r - 1) * (d - 1) + (c - 1)) as usize;
    let mut plaqs = Vec::new();
    let mut pi = 0;
    for r in 1..d {
        for c in 1..d {
            if (r + c) % 2 == 1 {
                let g = &code.gauge_z[pi];
                let s: Vec<u32> = g.support().collect();
                plaqs.push(PlaqWiring {
                    top: [s[0], s[1]],
                    bot: [s[2], s[3]],
                    top_aux: x_pair_aux[xpair(r, c)],
                    bot_aux: x_pair_aux[xpair(r + 1, c)],
                    syndrome: z_plaq_aux[pi],
                    stage_a: r % 2 == 1,
                });
                pi += 1;
            }
        }
    }
    let n_plaq = pi;
    let mut z_arcs = Vec::new();
    for (k, g) in code.gauge_z[n_plaq..].iter().enumerate() {
        let s: Vec<u32> = g.support().collect();
        // left arcs live on odd-row stages, right arcs on even-row stages
        let left = k < (d as usize - 1) / 2;
        z_arcs.push((s[0], s[1], z_arc_aux[k], left));
    }
    Ok(HhcCycles {
        code,
        lattice,
        x_pair_aux,
        plaqs,
        z_arcs,
    })
}

impl HhcCycles {
    fn emit_x(&self, b: &mut CircuitBuilder) -> CycleRecord {
        let d = self.code.distance;
        b.tick();
        for &a in &self.x_pair_aux {
            b.push(OpKind::Reset, a, 0);
        }
        b.tick();
        for &a in &self.x_pair_aux {
            b.push(OpKind::H, a, 0);
        }
        // pair in column c targets left data at layer (c−1)%3 and right at
        // (c+1)%3; adjacent pairs never collide on the shared data qubit
        for layer in 0..3u32 {
            b.tick();
            for (op, &a) in self.x_pair_aux.iter().enumerate() {
                let c = op as u32 % (d - 1) + 1;
                let s: Vec<u32> = self.code.gauge_x[op].support().collect();
                if (c - 1) % 3 == layer {
                    b.push(OpKind::Cx, a, s[0]);
                }
                if (c + 1) % 3 == layer {
                    b.push(OpKind::Cx, a, s[1]);
                }
            }
        }
        b.tick();
        for &a in &self.x_pair_aux {
            b.push(OpKind::H, a, 0);
        }
        b.tick();
        let mut check_events = vec![0u32; self.code.gauge_x.len()];
        for (op, &a) in self.x_pair_aux.iter().enumerate() {
            check_events[op] = b.push_measure(a);
        }
        CycleRecord {
            check_events,
            flag_events: Vec::new(),
        }
    }

    fn emit_z(&self, b: &mut CircuitBuilder) -> CycleRecord {
        let mut check_events = vec![0u32; self.code.gauge_z.len()];
        let mut flag_events = Vec::new();
        for stage_a in [true, false] {
            self.emit_z_stage(b, &mut check_events, &mut flag_events, stage_a);
        }
        CycleRecord {
            check_events,
            flag_events,
        }
    }

    fn emit_z_stage(
        &self,
        b: &mut CircuitBuilder,
        check_events: &mut [u32],
        flag_events: &mut Vec<(u32, usize)>,
        stage_a: bool,
    ) {
        let n_plaq = self.plaqs.len();
        let plaqs: Vec<(usize, &PlaqWiring)> = self
            .plaqs
            .iter()
            .enumerate()
            .filter(|(_, p)| p.stage_a == stage_a)
            .collect();
        let arcs: Vec<(usize, &(u32, u32, u32, bool))> = self
            .z_arcs
            .iter()
            .enumerate()
            .filter(|(_, a)| a.3 == stage_a)
            .collect();
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Reset, p.top_aux, 0);
            b.push(OpKind::Reset, p.bot_aux, 0);
            b.push(OpKind::Reset, p.syndrome, 0);
        }
        for (_, &(_, _, aux, _)) in &arcs {
            b.push(OpKind::Reset, aux, 0);
        }
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Cx, p.top[0], p.top_aux);
            b.push(OpKind::Cx, p.bot[0], p.bot_aux);
        }
        for (_, &(pq, _, aux, _)) in &arcs {
            b.push(OpKind::Cx, pq, aux);
        }
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Cx, p.top[1], p.top_aux);
            b.push(OpKind::Cx, p.bot[1], p.bot_aux);
        }
        for (_, &(_, q, aux, _)) in &arcs {
            b.push(OpKind::Cx, q, aux);
        }
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Cx, p.top_aux, p.syndrome);
        }
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Cx, p.bot_aux, p.syndrome);
        }
        // uncompute collectors so they can be measured as flags
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Cx, p.top[0], p.top_aux);
            b.push(OpKind::Cx, p.bot[0], p.bot_aux);
        }
        b.tick();
        for (_, p) in &plaqs {
            b.push(OpKind::Cx, p.top[1], p.top_aux);
            b.push(OpKind::Cx, p.bot[1], p.bot_aux);
        }
        b.tick();
        for (pi, p) in &plaqs {
            check_events[*pi] = b.push_measure(p.syndrome);
            flag_events.push((b.push_measure(p.top_aux), *pi));
            flag_events.push((b.push_measure(p.bot_aux), *pi));
        }
        for (k, &(_, _, aux, _)) in &arcs {
            check_events[n_plaq + k] = b.push_measure(aux);
        }
    }
}

impl GaugeCycles for HhcCycles {
    fn code(&self) -> &SubsystemCode {
        &self.code
    }

    fn total_qubits(&self) -> u32 {
        self.lattice.vertex_count() as u32
    }

    fn emit_cycle(&self, sector: CheckType, b: &mut CircuitBuilder) -> CycleRecord {
        match sector {
            CheckType::X => self.emit_x(b),
            CheckType::Z => self.emit_z(b),
        }
    }
}

/// Standalone HHC gauge cycle (both Z stages then nothing else).
pub fn build_hhc_cycle(d: u32, sector: CheckType) -> Result<ScheduledCircuit, CodeError> {
    let layout = build_hhc_cycle_layout(d)?;
    let mut b = CircuitBuilder::new(layout.total_qubits());
    layout.emit_cycle(sector, &mut b);
    let mut c = b.finish();
    c.meta.push(("code".into(), "hhc".into()));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_validate() {
        for d in [3, 5] {
            build_hhc_cycle(d, CheckType::X).unwrap().validate().unwrap();
            build_hhc_cycle(d, CheckType::Z).unwrap().validate().unwrap();
        }
    }

    #[test]
    fn z_cycle_measures_every_z_op_and_flags() {
        let layout = build_hhc_cycle_layout(3).unwrap();
        let c = build_hhc_cycle(3, CheckType::Z).unwrap();
        let measures = c
            .ops()
            .iter()
            .filter(|o| o.kind == OpKind::Measure)
            .count();
        // every Z check plus two flags per plaquette
        assert_eq!(
            measures,
            layout.code.gauge_z.len() + 2 * layout.plaqs.len()
        );
    }

    #[test]
    fn x_layers_collision_free() {
        for d in [3, 5, 7] {
            build_hhc_cycle(d, CheckType::X).unwrap().validate().unwrap();
        }
    }
}
