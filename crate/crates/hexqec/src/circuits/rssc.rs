//! Syndrome-extraction cycles for the RSSC on the heavy-hex lattice.
//!
//! X gauge operators are measured directly: one measurement qubit per
//! operator, CNOTs fanned out in three parallel layers. Z gauge triangles
//! are measured in two stages (left-edge then right-edge operators); each
//! stage routes the triangle parity through the face's two X-measurement
//! qubits, one collecting and one bridging through the center data qubit.
//! Boundary Z pairs use a dedicated bridge–measure–bridge chain and run
//! concurrently with the stage that leaves their column idle.

use super::memory::{CycleRecord, GaugeCycles};
use super::{CheckType, CircuitBuilder, OpKind, ScheduledCircuit};
use crate::codes::{build_heavy_hex, build_rssc, CodeError, HeavyHexLattice, SubsystemCode, Wiring};

pub struct RsscCycles {
    pub code: SubsystemCode,
    pub lattice: HeavyHexLattice,
    x_aux: Vec<u32>,
    z_arc_trios: Vec<[u32; 3]>,
    /// CNOT layer (0..3) per X op target, in sorted-support order
    x_layers: Vec<[u8; 3]>,
    faces: Vec<FaceWiring>,
    /// boundary Z pairs (low qubit, high qubit), left arcs then right
    z_arcs: Vec<(u32, u32)>,
}

#[derive(Clone, Copy, Debug)]
struct FaceWiring {
    top_left: u32,
    top_right: u32,
    bot_left: u32,
    bot_right: u32,
    center: u32,
    top_aux: u32,
    bot_aux: u32,
}

pub fn build_rssc_cycle_layout(d: u32) -> Result<RsscCycles, CodeError> {
    let code = build_rssc(d)?;
    let lattice = build_heavy_hex(d)?;
    let (x_aux, z_arc_trios) = match &lattice.wiring {
        Wiring::Rssc { x_aux, z_arc_trios } => (x_aux.clone(), z_arc_trios.clone()),
        _ => unreachable!(),
    };

    // Fixed conflict-free CNOT layers (sorted support = left, right, center):
    // top triangles (0,1,2), bottom triangles (2,1,0), top-row arcs (2,1),
    // bottom-row arcs (0,1). Distinctness per data qubit follows from the
    // face parity pattern and is asserted in tests.
    let n_faces = (d as usize - 1) * (d as usize - 1) / 2;
    let half_arcs = ((d - 1) / 2) as usize;
    let mut x_layers = Vec::with_capacity(code.gauge_x.len());
    for f in 0..n_faces {
        let _ = f;
        x_layers.push([0, 1, 2]);
        x_layers.push([2, 1, 0]);
    }
    for _ in 0..half_arcs {
        x_layers.push([2, 1, u8::MAX]);
    }
    for _ in 0..half_arcs {
        x_layers.push([0, 1, u8::MAX]);
    }

    let mut faces = Vec::with_capacity(n_faces);
    for f in 0..n_faces {
        let top: Vec<u32> = code.gauge_x[2 * f].support().collect();
        let bot: Vec<u32> = code.gauge_x[2 * f + 1].support().collect();
        let center = *top.last().unwrap();
        debug_assert_eq!(center, *bot.last().unwrap());
        faces.push(FaceWiring {
            top_left: top[0],
            top_right: top[1],
            bot_left: bot[0],
            bot_right: bot[1],
            center,
            top_aux: x_aux[2 * f],
            bot_aux: x_aux[2 * f + 1],
        });
    }
    let z_arcs: Vec<(u32, u32)> = code.gauge_z[2 * n_faces..]
        .iter()
        .map(|g| {
            let s: Vec<u32> = g.support().collect();
            (s[0], s[1])
        })
        .collect();

    Ok(RsscCycles {
        code,
        lattice,
        x_aux,
        z_arc_trios,
        x_layers,
        faces,
        z_arcs,
    })
}

impl RsscCycles {
    fn emit_x(&self, b: &mut CircuitBuilder) -> CycleRecord {
        b.tick();
        for &a in &self.x_aux {
            b.push(OpKind::Reset, a, 0);
        }
        b.tick();
        for &a in &self.x_aux {
            b.push(OpKind::H, a, 0);
        }
        for layer in 0..3u8 {
            b.tick();
            for (op, support) in self.code.gauge_x.iter().enumerate() {
                for (ti, q) in support.support().enumerate() {
                    if self.x_layers[op][ti] == layer {
                        b.push(OpKind::Cx, self.x_aux[op], q);
                    }
                }
            }
        }
        b.tick();
        for &a in &self.x_aux {
            b.push(OpKind::H, a, 0);
        }
        b.tick();
        let mut check_events = vec![0u32; self.code.gauge_x.len()];
        for (op, &a) in self.x_aux.iter().enumerate() {
            check_events[op] = b.push_measure(a);
        }
        CycleRecord {
            check_events,
            flag_events: Vec::new(),
        }
    }

    fn emit_z(&self, b: &mut CircuitBuilder) -> CycleRecord {
        let nf = self.faces.len();
        let n_arcs = self.z_arcs.len();
        let mut check_events = vec![0u32; self.code.gauge_z.len()];
        // left-edge stage runs the right boundary arcs, and vice versa
        self.emit_z_stage(b, &mut check_events, true, n_arcs / 2..n_arcs, nf);
        self.emit_z_stage(b, &mut check_events, false, 0..n_arcs / 2, nf);
        CycleRecord {
            check_events,
            flag_events: Vec::new(),
        }
    }

    fn emit_z_stage(
        &self,
        b: &mut CircuitBuilder,
        check_events: &mut [u32],
        left_stage: bool,
        arc_range: std::ops::Range<usize>,
        nf: usize,
    ) {
        // (near, far, center, collector, bridge): the collector gathers the
        // near qubit and, via the bridge and center, the rest of the parity
        let pieces: Vec<(u32, u32, u32, u32, u32)> = self
            .faces
            .iter()
            .map(|f| {
                if left_stage {
                    (f.top_left, f.bot_left, f.center, f.top_aux, f.bot_aux)
                } else {
                    (f.bot_right, f.top_right, f.center, f.bot_aux, f.top_aux)
                }
            })
            .collect();
        let arcs: Vec<(u32, u32, [u32; 3])> = arc_range
            .clone()
            .map(|a| {
                let (p, q) = self.z_arcs[a];
                (p, q, self.z_arc_trios[a])
            })
            .collect();

        b.tick();
        for f in &self.faces {
            b.push(OpKind::Reset, f.top_aux, 0);
            b.push(OpKind::Reset, f.bot_aux, 0);
        }
        for &(_, _, trio) in &arcs {
            for q in trio {
                b.push(OpKind::Reset, q, 0);
            }
        }
        b.tick();
        for &(near, _, _, coll, _) in &pieces {
            b.push(OpKind::Cx, near, coll);
        }
        for &(p, _, [b1, _, _]) in &arcs {
            b.push(OpKind::Cx, p, b1);
        }
        b.tick();
        for &(_, far, _, _, bridge) in &pieces {
            b.push(OpKind::Cx, far, bridge);
        }
        for &(_, q, [_, _, b2]) in &arcs {
            b.push(OpKind::Cx, q, b2);
        }
        b.tick();
        for &(_, _, t, _, bridge) in &pieces {
            b.push(OpKind::Cx, bridge, t);
        }
        for &(_, _, [b1, m, _]) in &arcs {
            b.push(OpKind::Cx, b1, m);
        }
        b.tick();
        for &(_, _, t, coll, _) in &pieces {
            b.push(OpKind::Cx, t, coll);
        }
        for &(_, _, [_, m, b2]) in &arcs {
            b.push(OpKind::Cx, b2, m);
        }
        b.tick();
        for &(_, _, t, _, bridge) in &pieces {
            b.push(OpKind::Cx, bridge, t);
        }
        for &(p, _, [b1, _, _]) in &arcs {
            b.push(OpKind::Cx, p, b1);
        }
        b.tick();
        for &(_, far, _, _, bridge) in &pieces {
            b.push(OpKind::Cx, far, bridge);
        }
        for &(_, q, [_, _, b2]) in &arcs {
            b.push(OpKind::Cx, q, b2);
        }
        b.tick();
        for (f, &(_, _, _, coll, _)) in pieces.iter().enumerate() {
            let zop = 2 * f + if left_stage { 0 } else { 1 };
            check_events[zop] = b.push_measure(coll);
        }
        for (k, &(_, _, [_, m, _])) in arc_range.zip(arcs.iter()) {
            check_events[2 * nf + k] = b.push_measure(m);
        }
    }
}

impl GaugeCycles for RsscCycles {
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

/// Standalone X gauge cycle fragment; measurement events follow the
/// canonical X gauge order.
pub fn build_x_gauge_cycle(d: u32) -> Result<ScheduledCircuit, CodeError> {
    let layout = build_rssc_cycle_layout(d)?;
    let mut b = CircuitBuilder::new(layout.total_qubits());
    layout.emit_x(&mut b);
    let mut c = b.finish();
    c.meta.push(("code".into(), "rssc".into()));
    c.meta.push(("fragment".into(), "x_gauge_cycle".into()));
    Ok(c)
}

/// Standalone Z gauge cycle fragment.
pub fn build_z_gauge_cycle(d: u32) -> Result<ScheduledCircuit, CodeError> {
    let layout = build_rssc_cycle_layout(d)?;
    let mut b = CircuitBuilder::new(layout.total_qubits());
    layout.emit_z(&mut b);
    let mut c = b.finish();
    c.meta.push(("code".into(), "rssc".into()));
    c.meta.push(("fragment".into(), "z_gauge_cycle".into()));
    Ok(c)
}
