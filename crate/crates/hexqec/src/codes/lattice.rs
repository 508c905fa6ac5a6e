//! Heavy-hex lattice construction: a degree-≤3 qubit graph together with
//! the wiring tables the circuit builders use.
//!
//! Data-qubit ids come first and match the code builders; auxiliary qubits
//! follow in a fixed order. Bulk RSSC Z triangles are measured through the
//! two X-measurement qubits of their face, so only the boundary Z pairs get
//! dedicated ancillas (three per pair), giving `d² + 2d − 3` ancillas and
//! `5d²/2 + d − 5/2` qubits in total.

use super::{CodeError, CodeKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexRole {
    Data,
    Measure,
    Flag,
}

#[derive(Clone, Debug)]
pub struct HeavyHexLattice {
    pub kind: CodeKind,
    pub d: u32,
    pub coords: Vec<(i32, i32)>,
    pub roles: Vec<VertexRole>,
    pub edges: Vec<(u32, u32)>,
    pub n_data: u32,
    pub wiring: Wiring,
}

/// Auxiliary-qubit assignments, aligned with the canonical gauge-generator
/// orders of the matching code builder.
#[derive(Clone, Debug)]
pub enum Wiring {
    Rssc {
        /// one measurement qubit per X gauge operator
        x_aux: Vec<u32>,
        /// (bridge, measure, bridge) per boundary Z pair
        z_arc_trios: Vec<[u32; 3]>,
    },
    Hhc {
        /// one measurement qubit per weight-2 X gauge pair
        x_pair_aux: Vec<u32>,
        /// one syndrome qubit per weight-4 Z plaquette
        z_plaq_aux: Vec<u32>,
        /// one measurement qubit per boundary Z pair
        z_arc_aux: Vec<u32>,
    },
}

impl HeavyHexLattice {
    pub fn vertex_count(&self) -> usize {
        self.coords.len()
    }

    pub fn max_degree(&self) -> usize {
        let mut deg = vec![0usize; self.vertex_count()];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg.into_iter().max().unwrap_or(0)
    }

    pub fn count_role(&self, role: VertexRole) -> usize {
        self.roles.iter().filter(|&&r| r == role).count()
    }
}

fn check_distance(d: u32) -> Result<(), CodeError> {
    if d < 3 || d % 2 == 0 {
        return Err(CodeError::BadDistance(d));
    }
    Ok(())
}

pub(crate) fn qid(r: u32, c: u32, d: u32) -> u32 {
    (r - 1) * d + (c - 1)
}

/// Faces carrying a center qubit: (r, c) with r + c even, row-major.
pub(crate) fn center_faces(d: u32) -> Vec<(u32, u32)> {
    let mut faces = Vec::new();
    for r in 1..d {
        for c in 1..d {
            if (r + c) % 2 == 0 {
                faces.push((r, c));
            }
        }
    }
    faces
}

/// Heavy-hex lattice hosting the distance-`d` RSSC.
pub fn build_heavy_hex(d: u32) -> Result<HeavyHexLattice, CodeError> {
    check_distance(d)?;
    let faces = center_faces(d);
    let n_grid = d * d;
    let n_data = n_grid + faces.len() as u32;

    let mut coords: Vec<(i32, i32)> = Vec::new();
    let mut roles = Vec::new();
    for r in 1..=d {
        for c in 1..=d {
            coords.push((2 * r as i32, 2 * c as i32));
            roles.push(VertexRole::Data);
        }
    }
    let mut center_of = std::collections::HashMap::new();
    for (i, &(r, c)) in faces.iter().enumerate() {
        center_of.insert((r, c), n_grid + i as u32);
        coords.push((2 * r as i32 + 1, 2 * c as i32 + 1));
        roles.push(VertexRole::Data);
    }

    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut x_aux = Vec::new();
    // X triangles: top then bottom edge of each center face
    for &(r, c) in &faces {
        let t = center_of[&(r, c)];
        for (row, dy) in [(r, 0i32), (r + 1, 2)] {
            let aux = coords.len() as u32;
            coords.push((2 * r as i32 + dy, 2 * c as i32 + 1));
            roles.push(VertexRole::Measure);
            edges.push((aux, qid(row, c, d)));
            edges.push((aux, qid(row, c + 1, d)));
            edges.push((aux, t));
            x_aux.push(aux);
        }
    }
    // X boundary pairs: top row (1,2m)-(1,2m+1), bottom row (d,2m-1)-(d,2m)
    for m in 1..=(d - 1) / 2 {
        let aux = coords.len() as u32;
        coords.push((1, 4 * m as i32 + 1));
        roles.push(VertexRole::Measure);
        edges.push((aux, qid(1, 2 * m, d)));
        edges.push((aux, qid(1, 2 * m + 1, d)));
        x_aux.push(aux);
    }
    for m in 1..=(d - 1) / 2 {
        let aux = coords.len() as u32;
        coords.push((2 * d as i32 + 1, 4 * m as i32 - 1));
        roles.push(VertexRole::Measure);
        edges.push((aux, qid(d, 2 * m - 1, d)));
        edges.push((aux, qid(d, 2 * m, d)));
        x_aux.push(aux);
    }
    // boundary Z pairs: left (2m,1)-(2m+1,1), right (2m-1,d)-(2m,d);
    // each measured through a bridge–measure–bridge chain
    let mut z_arc_trios = Vec::new();
    let arc_chain = |p: u32, q: u32, x0: i32, y0: i32, coords: &mut Vec<(i32, i32)>,
                         roles: &mut Vec<VertexRole>, edges: &mut Vec<(u32, u32)>| {
        let b1 = coords.len() as u32;
        coords.push((y0, x0));
        roles.push(VertexRole::Measure);
        let m = coords.len() as u32;
        coords.push((y0 + 1, x0));
        roles.push(VertexRole::Measure);
        let b2 = coords.len() as u32;
        coords.push((y0 + 2, x0));
        roles.push(VertexRole::Measure);
        edges.push((b1, p));
        edges.push((b1, m));
        edges.push((m, b2));
        edges.push((b2, q));
        [b1, m, b2]
    };
    for m in 1..=(d - 1) / 2 {
        let trio = arc_chain(
            qid(2 * m, 1, d),
            qid(2 * m + 1, 1, d),
            1,
            4 * m as i32,
            &mut coords,
            &mut roles,
            &mut edges,
        );
        z_arc_trios.push(trio);
    }
    for m in 1..=(d - 1) / 2 {
        let trio = arc_chain(
            qid(2 * m - 1, d, d),
            qid(2 * m, d, d),
            2 * d as i32 + 1,
            4 * m as i32 - 2,
            &mut coords,
            &mut roles,
            &mut edges,
        );
        z_arc_trios.push(trio);
    }

    Ok(HeavyHexLattice {
        kind: CodeKind::Rssc,
        d,
        coords,
        roles,
        edges,
        n_data,
        wiring: Wiring::Rssc { x_aux, z_arc_trios },
    })
}

/// Heavy-hex lattice hosting the distance-`d` HHC.
///
/// Weight-2 X gauge pairs get one measurement qubit between the pair; each
/// weight-4 Z plaquette gets one syndrome qubit and borrows the pair
/// ancillas of its top and bottom edges as collector flags.
pub fn build_hhc_lattice(d: u32) -> Result<HeavyHexLattice, CodeError> {
    check_distance(d)?;
    let n_data = d * d;
    let mut coords: Vec<(i32, i32)> = Vec::new();
    let mut roles = Vec::new();
    for r in 1..=d {
        for c in 1..=d {
            coords.push((2 * r as i32, 2 * c as i32));
            roles.push(VertexRole::Data);
        }
    }
    let mut edges = Vec::new();
    let mut x_pair_aux = Vec::new();
    for r in 1..=d {
        for c in 1..d {
            let aux = coords.len() as u32;
            coords.push((2 * r as i32, 2 * c as i32 + 1));
            roles.push(VertexRole::Flag);
            edges.push((aux, qid(r, c, d)));
            edges.push((aux, qid(r, c + 1, d)));
            x_pair_aux.push(aux);
        }
    }
    let mut z_plaq_aux = Vec::new();
    for r in 1..d {
        for c in 1..d {
            if (r + c) % 2 == 1 {
                let m = coords.len() as u32;
                coords.push((2 * r as i32 + 1, 2 * c as i32 + 1));
                roles.push(VertexRole::Measure);
                // syndrome connects to the two collector flags
                let top = x_pair_aux[((r - 1) * (d - 1) + (c - 1)) as usize];
                let bot = x_pair_aux[(r * (d - 1) + (c - 1)) as usize];
                edges.push((m, top));
                edges.push((m, bot));
                z_plaq_aux.push(m);
            }
        }
    }
    let mut z_arc_aux = Vec::new();
    for m in 1..=(d - 1) / 2 {
        let aux = coords.len() as u32;
        coords.push((4 * m as i32 - 1, 1));
        roles.push(VertexRole::Measure);
        edges.push((aux, qid(2 * m - 1, 1, d)));
        edges.push((aux, qid(2 * m, 1, d)));
        z_arc_aux.push(aux);
    }
    for m in 1..=(d - 1) / 2 {
        let aux = coords.len() as u32;
        coords.push((4 * m as i32 + 1, 2 * d as i32 + 1));
        roles.push(VertexRole::Measure);
        edges.push((aux, qid(2 * m, d, d)));
        edges.push((aux, qid(2 * m + 1, d, d)));
        z_arc_aux.push(aux);
    }
    Ok(HeavyHexLattice {
        kind: CodeKind::Hhc,
        d,
        coords,
        roles,
        edges,
        n_data,
        wiring: Wiring::Hhc {
            x_pair_aux,
            z_plaq_aux,
            z_arc_aux,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rssc_vertex_counts() {
        // total = 5d²/2 + d − 5/2; ancillas = d² + 2d − 3
        for (d, data, anc, total) in [(3, 11, 12, 23), (5, 33, 32, 65), (7, 67, 60, 127)] {
            let lat = build_heavy_hex(d).unwrap();
            assert_eq!(lat.n_data, data);
            assert_eq!(lat.count_role(VertexRole::Data), data as usize);
            assert_eq!(lat.vertex_count() - data as usize, anc);
            assert_eq!(lat.vertex_count(), total);
            assert_eq!((5 * d * d + 2 * d - 5) / 2, total as u32);
        }
    }

    #[test]
    fn degree_at_most_three() {
        for d in [3, 5, 7] {
            assert!(build_heavy_hex(d).unwrap().max_degree() <= 3);
            assert!(build_hhc_lattice(d).unwrap().max_degree() <= 3);
        }
    }

    #[test]
    fn coords_unique() {
        for d in [3, 5] {
            for lat in [build_heavy_hex(d).unwrap(), build_hhc_lattice(d).unwrap()] {
                let mut seen = std::collections::HashSet::new();
                for &xy in &lat.coords {
                    assert!(seen.insert(xy), "duplicate coordinate {xy:?}");
                }
            }
        }
    }

    #[test]
    fn rejects_bad_distance() {
        assert!(build_heavy_hex(2).is_err());
        assert!(build_heavy_hex(4).is_err());
        assert!(build_heavy_hex(1).is_err());
    }
}
