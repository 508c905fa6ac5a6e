fn main() {
    let code = hexqec::build_rssc(5).unwrap();
    println!("stab_x {} stab_z {}", code.stab_x.len(), code.stab_z.len());
    for g in &code.gauge_x { println!("GX {g}"); }
    for g in &code.gauge_z { println!("GZ {g}"); }
    for s in &code.stab_x { println!("SX {s}"); }
}
