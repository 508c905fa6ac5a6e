//! Rotated subsystem surface code on the heavy-hex lattice.
//!
//! Center qubits sit on faces with even coordinate sum. Each such face
//! carries two X gauge triangles (top and bottom edge plus center) and two
//! Z gauge triangles (left and right edge plus center); weight-2 gauge
//! operators close the boundary rows and columns. Hexagonal bulk
//! stabilizers arise as products of two triangles from vertically (X) or
//! horizontally (Z) adjacent faces.

use super::lattice::{center_faces, qid};
use super::{css_op, stabilizer_basis_from_pairs, CodeError, CodeKind, SubsystemCode};
use crate::pauli::Pauli;

pub fn build_rssc(d: u32) -> Result<SubsystemCode, CodeError> {
    if d < 3 || d % 2 == 0 {
        return Err(CodeError::BadDistance(d));
    }
    let faces = center_faces(d);
    let n_grid = d * d;
    let n_data = n_grid + faces.len() as u32;
    let center = |i: usize| n_grid + i as u32;

    let mut gauge_x = Vec::new();
    let mut gauge_z = Vec::new();
    for (i, &(r, c)) in faces.iter().enumerate() {
        let t = center(i);
        gauge_x.push(css_op([qid(r, c, d), qid(r, c + 1, d), t], Pauli::X));
        gauge_x.push(css_op(
            [qid(r + 1, c, d), qid(r + 1, c + 1, d), t],
            Pauli::X,
        ));
        gauge_z.push(css_op([qid(r, c, d), qid(r + 1, c, d), t], Pauli::Z));
        gauge_z.push(css_op(
            [qid(r, c + 1, d), qid(r + 1, c + 1, d), t],
            Pauli::Z,
        ));
    }
    for m in 1..=(d - 1) / 2 {
        gauge_x.push(css_op([qid(1, 2 * m, d), qid(1, 2 * m + 1, d)], Pauli::X));
    }
    for m in 1..=(d - 1) / 2 {
        gauge_x.push(css_op([qid(d, 2 * m - 1, d), qid(d, 2 * m, d)], Pauli::X));
    }
    for m in 1..=(d - 1) / 2 {
        gauge_z.push(css_op([qid(2 * m, 1, d), qid(2 * m + 1, 1, d)], Pauli::Z));
    }
    for m in 1..=(d - 1) / 2 {
        gauge_z.push(css_op([qid(2 * m - 1, d, d), qid(2 * m, d, d)], Pauli::Z));
    }

    let (stab_x, stab_x_decomp) = stabilizer_basis_from_pairs(&gauge_x, &gauge_z);
    let (stab_z, stab_z_decomp) = stabilizer_basis_from_pairs(&gauge_z, &gauge_x);

    let logical_z = css_op((1..=d).map(|c| qid(1, c, d)), Pauli::Z);
    let logical_x = css_op((1..=d).map(|r| qid(r, 1, d)), Pauli::X);

    let mut coords = Vec::with_capacity(n_data as usize);
    for r in 1..=d {
        for c in 1..=d {
            coords.push((2 * r as i32, 2 * c as i32));
        }
    }
    for &(r, c) in &faces {
        coords.push((2 * r as i32 + 1, 2 * c as i32 + 1));
    }

    Ok(SubsystemCode {
        kind: CodeKind::Rssc,
        distance: d,
        n_data,
        gauge_x,
        gauge_z,
        stab_x,
        stab_z,
        stab_x_decomp,
        stab_z_decomp,
        logical_x,
        logical_z,
        coords,
        gauge_qubits: (d - 1) * (d - 1) / 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::{
        code_distance_bruteforce, validate_code, DistanceResult,
    };

    #[test]
    fn d3_generator_counts_and_weights() {
        let code = build_rssc(3).unwrap();
        assert_eq!(code.n_data, 11);
        assert_eq!(code.gauge_x.len(), 6);
        assert_eq!(code.gauge_z.len(), 6);
        for gauge in [&code.gauge_x, &code.gauge_z] {
            let w3 = gauge.iter().filter(|g| g.weight() == 3).count();
            let w2 = gauge.iter().filter(|g| g.weight() == 2).count();
            assert_eq!((w3, w2), (4, 2));
        }
        // 8 independent stabilizer generators for [[11,1]] with 2 gauge qubits
        assert_eq!(code.stab_x.len() + code.stab_z.len(), 8);
    }

    #[test]
    fn d3_explicit_generators() {
        let code = build_rssc(3).unwrap();
        let gx: Vec<String> = code.gauge_x.iter().map(|g| g.to_string()).collect();
        let gz: Vec<String> = code.gauge_z.iter().map(|g| g.to_string()).collect();
        // faces (1,1) and (2,2); centers are qubits 9 and 10
        assert_eq!(
            gx,
            ["X0 X1 X9", "X3 X4 X9", "X4 X5 X10", "X7 X8 X10", "X1 X2", "X6 X7"]
        );
        assert_eq!(
            gz,
            ["Z0 Z3 Z9", "Z1 Z4 Z9", "Z4 Z7 Z10", "Z5 Z8 Z10", "Z3 Z6", "Z2 Z5"]
        );
    }

    #[test]
    fn validates_clean_for_d3_d5_d7() {
        for d in [3, 5, 7] {
            let code = build_rssc(d).unwrap();
            let report = validate_code(&code);
            assert!(report.is_clean(), "d={d}: {:?}", report.issues);
            // generator counts: (d−1)² weight-3 and (d−1) weight-2 per type
            assert_eq!(code.gauge_x.len() as u32, d * (d - 1));
            // stabilizer generator count d²−1 after independence reduction
            assert_eq!((code.stab_x.len() + code.stab_z.len()) as u32, d * d - 1);
            assert_eq!(code.logical_x.weight() as u32, d);
            assert_eq!(code.logical_z.weight() as u32, d);
        }
    }

    #[test]
    fn d3_distance_is_three() {
        let code = build_rssc(3).unwrap();
        assert_eq!(
            code_distance_bruteforce(&code, 3).unwrap(),
            DistanceResult::Distance(3)
        );
    }

    #[test]
    fn d5_no_low_weight_logicals() {
        let code = build_rssc(5).unwrap();
        assert_eq!(
            code_distance_bruteforce(&code, 4).unwrap(),
            DistanceResult::ExceedsMaxWeight(4)
        );
    }

    #[test]
    fn deterministic_construction() {
        let a = build_rssc(5).unwrap();
        let b = build_rssc(5).unwrap();
        assert_eq!(a.export_text(), b.export_text());
    }

    #[test]
    fn corrupted_stabilizer_is_reported() {
        let mut code = build_rssc(3).unwrap();
        // corrupt one stabilizer's support
        code.stab_x[0] = css_op([0, 1], Pauli::X);
        let report = validate_code(&code);
        assert!(!report.is_clean());
    }

    #[test]
    fn sites_follow_logical_z() {
        let code = build_rssc(5).unwrap();
        // top row, site 0 at the corner shared with logical X
        assert_eq!(code.sites_along_logical_z(), vec![0, 1, 2, 3, 4]);
        let site0 = code.sites_along_logical_z()[0];
        assert!(code.logical_x.support().any(|q| q == site0));
    }
}
