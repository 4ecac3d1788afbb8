//! The concrete towers for G1..G4.

use std::fmt;
use std::str::FromStr;

use super::builder::{build_tower, StepDef};
use super::Tower;
use crate::algebra::Field;
use crate::error::{Error, Result};
use crate::permgrp::catalog;

/// Which construction to use for a group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TowerPath {
    /// Masuda / elementary-symmetric constructions.
    Direct,
    /// Diagonalize over K(ζ3) and descend.
    Descent,
    /// Triangularize in characteristic 3 and use Artin–Schreier generators.
    ArtinSchreier,
}

impl fmt::Display for TowerPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerPath::Direct => "direct",
            TowerPath::Descent => "descent",
            TowerPath::ArtinSchreier => "artin-schreier",
        })
    }
}

impl FromStr for TowerPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<TowerPath> {
        match s.to_ascii_lowercase().as_str() {
            "direct" => Ok(TowerPath::Direct),
            "descent" | "zeta" => Ok(TowerPath::Descent),
            "artin-schreier" | "artin_schreier" | "as" => Ok(TowerPath::ArtinSchreier),
            _ => Err(Error::Parse(format!("unknown path `{s}` (expected direct, descent or artin-schreier)"))),
        }
    }
}

/// Tower for `group` ("G1".."G4") over `field` along `path`.
///
/// The descent path works over K(ζ3); a base field without ζ3 is extended
/// automatically.
pub fn tower_for(group: &str, field: Field, path: TowerPath) -> Result<Tower> {
    let g = group.to_ascii_uppercase();
    match (g.as_str(), path) {
        ("G1", TowerPath::Direct) => g1_tower(field),
        ("G2", TowerPath::Direct) => g2_tower(field),
        ("G3", TowerPath::Direct) => g3_tower_direct(field),
        ("G4", TowerPath::Direct) => g4_tower(field),
        ("G3", TowerPath::Descent) => {
            let f = if field.is_cyclo() { field } else { Field::cyclo_over(field)? };
            g3_descent_zeta(f)
        }
        ("G3", TowerPath::ArtinSchreier) => {
            if field.characteristic() != 3 || field.is_cyclo() {
                return Err(Error::WrongCharacteristic(format!(
                    "the Artin-Schreier path needs GF(3), got {}",
                    field.name()
                )));
            }
            g3_char3_tower()
        }
        ("G1" | "G2" | "G4", p) => Err(Error::Unsupported(format!("no {p} tower for {g}"))),
        _ => Err(Error::Unsupported(format!("no tower for group `{group}`"))),
    }
}

const MASUDA_LETS: &[(&str, &str)] = &[
    ("d1", "x1^2 + x2^2 + x3^2 - x1*x2 - x2*x3 - x3*x1"),
    ("d2", "x4^2 + x5^2 + x6^2 - x4*x5 - x5*x6 - x6*x4"),
];

const MASUDA_DEFS: &[&str] = &[
    "x1 + x2 + x3",
    "(x1^2*x2 + x2^2*x3 + x3^2*x1 - 3*x1*x2*x3) / d1",
    "(x1*x2^2 + x2*x3^2 + x3*x1^2 - 3*x1*x2*x3) / d1",
    "x4 + x5 + x6",
    "(x4^2*x5 + x5^2*x6 + x6^2*x4 - 3*x4*x5*x6) / d2",
    "(x4*x5^2 + x5*x6^2 + x6*x4^2 - 3*x4*x5*x6) / d2",
];

const MASUDA_AUX: &[(&str, &str, &str)] = &[
    ("x1", "x1", "T^3 - u1*T^2 + e2*T - e3"),
    ("x4", "x4", "T^3 - u4*T^2 + e5*T - e6"),
];

const MASUDA_CERT_LETS: &[(&str, &str)] = &[
    ("e2", "u1*(u2 + u3) - 3*(u2^2 - u2*u3 + u3^2)"),
    ("e3", "u1*u2*u3 - u2^3 - u3^3"),
    ("e5", "u4*(u5 + u6) - 3*(u5^2 - u5*u6 + u6^2)"),
    ("e6", "u4*u5*u6 - u5^3 - u6^3"),
    ("r2", "(u2^2 - u2*u3 + u3^2 - u1*u2 + u1*x1 + u2*x1 - u3*x1 - x1^2) / (x1 - u2)"),
    ("r5", "(u5^2 - u5*u6 + u6^2 - u4*u5 + u4*x4 + u5*x4 - u6*x4 - x4^2) / (x4 - u5)"),
];

const MASUDA_RECON: &[&str] = &["x1", "r2", "u1 - x1 - r2", "x4", "r5", "u4 - x4 - r5"];

const U_NAMES: &[&str] = &["u1", "u2", "u3", "u4", "u5", "u6"];

fn masuda_step<'a>(actions: &'a [(&'a str, &'a [&'a str])]) -> StepDef<'a> {
    StepDef {
        name: "C3xC3 (Masuda)",
        acting: &["sigma1", "sigma2"],
        new_names: U_NAMES,
        lets: MASUDA_LETS,
        defs: MASUDA_DEFS,
        aux: MASUDA_AUX,
        cert_lets: MASUDA_CERT_LETS,
        recon: MASUDA_RECON,
        actions,
    }
}

/// The symmetric-tensor step `a -> (a1+a4, a2+a5, a3+a6, a1a4, a1a5+a4a2, a1a6+a4a3)`
/// fixing the block swap, with auxiliary `a1`.
macro_rules! swap_step {
    ($old:expr, $new:expr, $defs:expr, $minpoly:expr, $recon:expr, $actions:expr) => {
        StepDef {
            name: "<tau>",
            acting: &["tau"],
            new_names: $new,
            lets: &[],
            defs: $defs,
            aux: &[($old, $old, $minpoly)],
            cert_lets: &[],
            recon: $recon,
            actions: $actions,
        }
    };
}

fn g1_defs() -> Vec<StepDef<'static>> {
    vec![
        StepDef {
            name: "S3xS3",
            acting: &["sigma1", "s12", "sigma2", "s45"],
            new_names: &["y1", "y2", "y3", "y4", "y5", "y6"],
            lets: &[],
            defs: &[
                "x1 + x2 + x3",
                "x1*x2 + x1*x3 + x2*x3",
                "x1*x2*x3",
                "x4 + x5 + x6",
                "x4*x5 + x4*x6 + x5*x6",
                "x4*x5*x6",
            ],
            aux: &[
                ("x1", "x1", "T^3 - y1*T^2 + y2*T - y3"),
                ("x2", "x2", "T^2 - (y1 - x1)*T + y3/x1"),
                ("x4", "x4", "T^3 - y4*T^2 + y5*T - y6"),
                ("x5", "x5", "T^2 - (y4 - x4)*T + y6/x4"),
            ],
            cert_lets: &[],
            recon: &["x1", "x2", "y1 - x1 - x2", "x4", "x5", "y4 - x4 - x5"],
            actions: &[("tau", &["y4", "y5", "y6", "y1", "y2", "y3"])],
        },
        swap_step!(
            "y1",
            &["z1", "z2", "z3", "z4", "z5", "z6"],
            &["y1 + y4", "y2 + y5", "y3 + y6", "y1*y4", "y1*y5 + y4*y2", "y1*y6 + y4*y3"],
            "T^2 - z1*T + z4",
            &[
                "y1",
                "(y1*z2 - z5)/(2*y1 - z1)",
                "(y1*z3 - z6)/(2*y1 - z1)",
                "z1 - y1",
                "z2 - (y1*z2 - z5)/(2*y1 - z1)",
                "z3 - (y1*z3 - z6)/(2*y1 - z1)",
            ],
            &[]
        ),
    ]
}

/// G1 = <σ1, τ, (12)> of order 72, over any field.
pub fn g1_tower(field: Field) -> Result<Tower> {
    build_tower("G1", &catalog().g1, field, &g1_defs(), Vec::new())
}

const V_NAMES: &[&str] = &["v1", "v2", "v3", "v4", "v5", "v6"];
const V_DEFS: &[&str] = &["u1 + u4", "u2 + u5", "u3 + u6", "u1*u4", "u1*u5 + u4*u2", "u1*u6 + u4*u3"];
const V_RECON: &[&str] = &[
    "u1",
    "(u1*v2 - v5)/(2*u1 - v1)",
    "(u1*v3 - v6)/(2*u1 - v1)",
    "v1 - u1",
    "v2 - (u1*v2 - v5)/(2*u1 - v1)",
    "v3 - (u1*v3 - v6)/(2*u1 - v1)",
];

const V5_NOTE: &str = "v5 is taken as u1*u5 + u4*u2, the tau-invariant companion of v6 = u1*u6 + u4*u3";

fn g4_defs<'a>(
    level1: &'a [(&'a str, &'a [&'a str])],
    level2: &'a [(&'a str, &'a [&'a str])],
) -> Vec<StepDef<'a>> {
    vec![masuda_step(level1), swap_step!("u1", V_NAMES, V_DEFS, "T^2 - v1*T + v4", V_RECON, level2)]
}

/// G4 = <σ1, τ> of order 18, over any field.
pub fn g4_tower(field: Field) -> Result<Tower> {
    let level1: &[(&str, &[&str])] = &[("tau", &["u4", "u5", "u6", "u1", "u2", "u3"])];
    build_tower("G4", &catalog().g4, field, &g4_defs(level1, &[]), vec![V5_NOTE.to_string()])
}

/// G3 = <σ1, τ, λ²> of order 36 through the G4 tower, over any field.
pub fn g3_tower_direct(field: Field) -> Result<Tower> {
    let level1: &[(&str, &[&str])] = &[
        ("tau", &["u4", "u5", "u6", "u1", "u2", "u3"]),
        ("lambda2", &["u1", "u3", "u2", "u4", "u6", "u5"]),
    ];
    let level2: &[(&str, &[&str])] = &[("lambda2", &["v1", "v3", "v2", "v4", "v6", "v5"])];
    let mut defs = g4_defs(level1, level2);
    defs.push(StepDef {
        name: "<lambda^2>",
        acting: &["lambda2"],
        new_names: &["f1", "f2", "f3", "f4", "f5", "f6"],
        lets: &[],
        defs: &["v1", "v4", "v2 + v3", "v5 + v6", "v2*v3", "v2*v6 + v3*v5"],
        aux: &[("v2", "v2", "T^2 - f3*T + f5")],
        cert_lets: &[("r3", "f3 - v2"), ("r6", "(f6 - r3*f4)/(v2 - r3)")],
        recon: &["f1", "v2", "r3", "f2", "f4 - r6", "r6"],
        actions: &[],
    });
    build_tower("G3", &catalog().g3, field, &defs, vec![V5_NOTE.to_string()])
}

/// G2 = <σ1, λ> of order 36. Characteristic 2 uses the Artin–Schreier-type
/// change of variables; otherwise the `w3 ↦ −1/w3` construction.
pub fn g2_tower(field: Field) -> Result<Tower> {
    let level1: &[(&str, &[&str])] = &[
        ("lambda2", &["u1", "u3", "u2", "u4", "u6", "u5"]),
        ("lambda", &["u4", "u5", "u6", "u1", "u3", "u2"]),
    ];
    let w_names: &[&str] = &["w1", "w2", "w3", "w4", "w5", "w6"];
    let f_names: &[&str] = &["f1", "f2", "f3", "f4", "f5", "f6"];
    let defs = if field.characteristic() == 2 {
        vec![
            masuda_step(level1),
            StepDef {
                name: "<lambda^2>",
                acting: &["lambda2"],
                new_names: w_names,
                lets: &[],
                defs: &["u1", "u2 + u3", "u2*u3", "u4", "u5 + u6", "u2*u6 + u3*u5"],
                aux: &[("u2", "u2", "T^2 - w2*T + w3")],
                cert_lets: &[("r3", "w2 - u2"), ("r6", "(w6 - r3*w5)/(u2 - r3)")],
                recon: &["w1", "u2", "r3", "w4", "w5 - r6", "r6"],
                actions: &[(
                    "lambda",
                    &["w4", "w5", "(w5^2*w3 + w6^2 + w2*w5*w6)/w2^2", "w1", "w2", "w6 + w2*w5"],
                )],
            },
            StepDef {
                name: "<lambda>",
                acting: &["lambda"],
                new_names: f_names,
                lets: &[
                    ("t1", "w1 + w4"),
                    ("t2", "w2 + w5"),
                    ("t3", "w5/w2*w3"),
                    ("t4", "w2*w1 + w5*w4"),
                    ("t5", "w5"),
                    ("t6", "w6"),
                    ("g4", "t2*t5 + t5^2"),
                ],
                defs: &["t1", "t4", "t2", "g4", "t6 + g4*t5/t2", "t3 + t6*(t6 + g4)/g4*t5/t2"],
                aux: &[("t5", "w5", "T^2 + f3*T - f4")],
                cert_lets: &[
                    ("a6", "f5 - f4*t5/f3"),
                    ("a3", "f6 - a6*(a6 + f4)/f4*t5/f3"),
                    ("b2", "f3 - t5"),
                    ("b1", "(f2 - t5*f1)/(b2 - t5)"),
                ],
                recon: &["b1", "b2", "a3*b2/t5", "f1 - b1", "t5", "a6"],
                actions: &[],
            },
        ]
    } else {
        vec![
            masuda_step(level1),
            StepDef {
                name: "<lambda^2>",
                acting: &["lambda2"],
                new_names: w_names,
                lets: &[],
                defs: &["u1", "u2 + u3", "(u2 - u3)/(u5 - u6)", "u4", "u5 + u6", "(u2 - u3)*(u5 - u6)"],
                aux: &[("d", "u2 - u3", "T^2 - w3*w6")],
                cert_lets: &[],
                recon: &["w1", "(w2 + d)/2", "(w2 - d)/2", "w4", "(w5 + d/w3)/2", "(w5 - d/w3)/2"],
                actions: &[("lambda", &["w4", "w5", "-1/w3", "w1", "w2", "-w6"])],
            },
            StepDef {
                name: "<lambda>",
                acting: &["lambda"],
                new_names: f_names,
                lets: &[("s3", "w3 + 1/w3")],
                defs: &["s3*(w1 - w4)", "s3*(w2 - w5)", "w3 - 1/w3", "w1 + w4", "w2 + w5", "s3*w6"],
                aux: &[("s3", "w3 + 1/w3", "T^2 - (f3^2 + 4)")],
                cert_lets: &[],
                recon: &[
                    "(f4 + f1/s3)/2",
                    "(f5 + f2/s3)/2",
                    "(s3 + f3)/2",
                    "(f4 - f1/s3)/2",
                    "(f5 - f2/s3)/2",
                    "f6/s3",
                ],
                actions: &[],
            },
        ]
    };
    build_tower("G2", &catalog().g2, field, &defs, Vec::new())
}

/// G3 over K(ζ3): diagonalize σ1, σ2 with ζ3-linear forms, take Kummer-type
/// invariants, then the block swap and λ².
pub fn g3_descent_zeta(field: Field) -> Result<Tower> {
    if !field.is_cyclo() {
        return Err(Error::NeedsCycloField);
    }
    let y_names: &[&str] = &["y1", "y2", "y3", "y4", "y5", "y6"];
    let z_names: &[&str] = &["z1", "z2", "z3", "z4", "z5", "z6"];
    let defs = vec![
        StepDef {
            name: "zeta-linearization",
            acting: &[],
            new_names: y_names,
            lets: &[],
            defs: &[
                "x1 + x2 + x3",
                "zeta^2*x1 + zeta*x2 + x3",
                "zeta*x1 + zeta^2*x2 + x3",
                "x4 + x5 + x6",
                "zeta^2*x4 + zeta*x5 + x6",
                "zeta*x4 + zeta^2*x5 + x6",
            ],
            aux: &[],
            cert_lets: &[],
            recon: &[
                "(y1 + zeta*y2 + zeta^2*y3)/3",
                "(y1 + zeta^2*y2 + zeta*y3)/3",
                "(y1 + y2 + y3)/3",
                "(y4 + zeta*y5 + zeta^2*y6)/3",
                "(y4 + zeta^2*y5 + zeta*y6)/3",
                "(y4 + y5 + y6)/3",
            ],
            actions: &[
                ("sigma1", &["y1", "zeta*y2", "zeta^2*y3", "y4", "y5", "y6"]),
                ("sigma2", &["y1", "y2", "y3", "y4", "zeta*y5", "zeta^2*y6"]),
                ("tau", &["y4", "y5", "y6", "y1", "y2", "y3"]),
                ("lambda2", &["y1", "y3", "y2", "y4", "y6", "y5"]),
            ],
        },
        StepDef {
            name: "C3xC3 (Kummer)",
            acting: &["sigma1", "sigma2"],
            new_names: z_names,
            lets: &[],
            defs: &["y1", "y2^2/y3", "y3^2/y2", "y4", "y5^2/y6", "y6^2/y5"],
            aux: &[("y2", "y2", "T^3 - z2^2*z3"), ("y5", "y5", "T^3 - z5^2*z6")],
            cert_lets: &[],
            recon: &["z1", "y2", "y2^2/z2", "z4", "y5", "y5^2/z5"],
            actions: &[
                ("tau", &["z4", "z5", "z6", "z1", "z2", "z3"]),
                ("lambda2", &["z1", "z3", "z2", "z4", "z6", "z5"]),
            ],
        },
        swap_step!(
            "z1",
            U_NAMES,
            &["z1 + z4", "z2 + z5", "z3 + z6", "z1*z4", "z1*z5 + z4*z2", "z1*z6 + z4*z3"],
            "T^2 - u1*T + u4",
            &[
                "z1",
                "(z1*u2 - u5)/(2*z1 - u1)",
                "(z1*u3 - u6)/(2*z1 - u1)",
                "u1 - z1",
                "u2 - (z1*u2 - u5)/(2*z1 - u1)",
                "u3 - (z1*u3 - u6)/(2*z1 - u1)",
            ],
            &[("lambda2", &["u1", "u3", "u2", "u4", "u6", "u5"])]
        ),
        StepDef {
            name: "<lambda^2>",
            acting: &["lambda2"],
            new_names: &["f1", "f2", "f3", "f4", "f5", "f6"],
            lets: &[],
            defs: &["u1", "u4", "u2 + u3", "u5 + u6", "u2*u3", "u2*u5 + u3*u6"],
            aux: &[("u2", "u2", "T^2 - f3*T + f5")],
            cert_lets: &[("r3", "f3 - u2"), ("r5", "(f6 - r3*f4)/(u2 - r3)")],
            recon: &["f1", "u2", "r3", "f2", "r5", "f4 - r5"],
            actions: &[],
        },
    ];
    build_tower("G3-descent", &catalog().g3, field, &defs, Vec::new())
}

/// G3 over GF(3): triangularize σ1, σ2 and use Artin–Schreier generators.
pub fn g3_char3_tower() -> Result<Tower> {
    let field = Field::Prime(3);
    let defs = vec![
        StepDef {
            name: "triangularization",
            acting: &[],
            new_names: &["y1", "y2", "y3", "y4", "y5", "y6"],
            lets: &[],
            defs: &["x1 + x2 + x3", "-x1 + x2", "x1", "x4 + x5 + x6", "-x4 + x5", "x4"],
            aux: &[],
            cert_lets: &[],
            recon: &["y3", "y2 + y3", "y1 - y2 - 2*y3", "y6", "y5 + y6", "y4 - y5 - 2*y6"],
            actions: &[
                ("sigma1", &["y1", "y2 + y1", "y3 + y2", "y4", "y5", "y6"]),
                ("sigma2", &["y1", "y2", "y3", "y4", "y5 + y4", "y6 + y5"]),
                ("tau", &["y4", "y5", "y6", "y1", "y2", "y3"]),
                ("lambda2", &["y1", "-y2", "y3 + y2", "y4", "-y5", "y6 + y5"]),
            ],
        },
        StepDef {
            name: "C3xC3 (Artin-Schreier)",
            acting: &["sigma1", "sigma2"],
            new_names: &["z1", "p2", "z3", "z4", "p5", "z6"],
            lets: &[("h1", "y2/y1"), ("h2", "y5/y4")],
            defs: &["y1", "h1^3 - h1", "y3/y1 + h1^2 - h1", "y4", "h2^3 - h2", "y6/y4 + h2^2 - h2"],
            aux: &[("z2", "y2/y1", "T^3 - T - p2"), ("z5", "y5/y4", "T^3 - T - p5")],
            cert_lets: &[],
            recon: &["z1", "z2*z1", "z1*(z3 - z2^2 + z2)", "z4", "z5*z4", "z4*(z6 - z5^2 + z5)"],
            actions: &[
                ("tau", &["z4", "p5", "z6", "z1", "p2", "z3"]),
                ("lambda2", &["z1", "-p2", "z3", "z4", "-p5", "z6"]),
            ],
        },
        swap_step!(
            "z1",
            U_NAMES,
            &["z1 + z4", "p2 + p5", "z3 + z6", "z1*z4", "z1*p5 + z4*p2", "z1*z6 + z4*z3"],
            "T^2 - u1*T + u4",
            &[
                "z1",
                "(z1*u2 - u5)/(2*z1 - u1)",
                "(z1*u3 - u6)/(2*z1 - u1)",
                "u1 - z1",
                "u2 - (z1*u2 - u5)/(2*z1 - u1)",
                "u3 - (z1*u3 - u6)/(2*z1 - u1)",
            ],
            &[("lambda2", &["u1", "-u2", "u3", "u4", "-u5", "u6"])]
        ),
        StepDef {
            name: "<lambda^2>",
            acting: &["lambda2"],
            new_names: &["f1", "f2", "f3", "f4", "f5", "f6"],
            lets: &[],
            defs: &["u1", "u2^2", "u3", "u4", "u2*u5", "u6"],
            aux: &[("u2", "u2", "T^2 - f2")],
            cert_lets: &[],
            recon: &["f1", "u2", "f3", "f4", "f5/u2", "f6"],
            actions: &[],
        },
    ];
    build_tower("G3-char3", &catalog().g3, field, &defs, Vec::new())
}
