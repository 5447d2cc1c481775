use crate::kernel::{Algebra, Blade};

/// Basis of Cl*(2,0,1) in the order and naming of the reference table:
/// `E0 = e12` (origin), `E1 = e20`, `E2 = e01`, `I = e012`.
pub const REFERENCE_LABELS_2D: [&str; 8] = ["1", "e0", "e1", "e2", "E0", "E1", "E2", "I"];

const REFERENCE_BASIS_2D: [(Blade, f64); 8] = [
    (Blade(0b000), 1.0),
    (Blade(0b001), 1.0),
    (Blade(0b010), 1.0),
    (Blade(0b100), 1.0),
    (Blade(0b110), 1.0),
    (Blade(0b101), -1.0),
    (Blade(0b011), 1.0),
    (Blade(0b111), 1.0),
];

/// Expected products in the reference basis, row times column.
pub const REFERENCE_TABLE_2D: [[&str; 8]; 8] = [
    ["1", "e0", "e1", "e2", "E0", "E1", "E2", "I"],
    ["e0", "0", "E2", "-E1", "I", "0", "0", "0"],
    ["e1", "-E2", "1", "E0", "e2", "I", "-e0", "E1"],
    ["e2", "E1", "-E0", "1", "-e1", "e0", "I", "E2"],
    ["E0", "I", "-e2", "e1", "-1", "-E2", "E1", "-e0"],
    ["E1", "0", "I", "-e0", "E2", "0", "0", "0"],
    ["E2", "0", "e0", "I", "-E1", "0", "0", "0"],
    ["I", "0", "E1", "E2", "-e0", "0", "0", "0"],
];

fn signed(label: &str, s: f64) -> String {
    if s == 0.0 {
        "0".to_owned()
    } else if s > 0.0 {
        label.to_owned()
    } else {
        format!("-{label}")
    }
}

/// Products of the canonical basis blades, labelled like `-e013`.
pub fn cayley_table(alg: &Algebra) -> Vec<Vec<String>> {
    let blades = alg.blades();
    blades
        .iter()
        .map(|&a| {
            blades
                .iter()
                .map(|&b| {
                    let (s, m) = alg.blade_product(a, b);
                    signed(&m.name(), s)
                })
                .collect()
        })
        .collect()
}

/// The 2D table in the reference basis and labels.
pub fn reference_table_2d(alg: &Algebra) -> Vec<Vec<String>> {
    REFERENCE_BASIS_2D
        .iter()
        .map(|&(a, sa)| {
            REFERENCE_BASIS_2D
                .iter()
                .map(|&(b, sb)| {
                    let (s, m) = alg.blade_product(a, b);
                    let (idx, sm) = REFERENCE_BASIS_2D
                        .iter()
                        .enumerate()
                        .find(|(_, (blade, _))| *blade == m)
                        .map(|(i, (_, sign))| (i, *sign))
                        .expect("every blade has a reference label");
                    signed(REFERENCE_LABELS_2D[idx], s * sa * sb * sm)
                })
                .collect()
        })
        .collect()
}
