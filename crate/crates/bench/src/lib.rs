//! Fixtures shared by the benchmarks.

use s6inv_core::genpoly::{generic_general, specialize, SpecializedSextic};
use s6inv_core::Field;

/// The general G1 form at a fixed parameter point.
pub fn general_sextic() -> SpecializedSextic {
    let q = Field::Rational;
    let g = generic_general(q).expect("char 0");
    let t: Vec<_> = [3, -7, 2, 11, -5].iter().map(|&k| q.from_int(k)).collect();
    specialize(&g, &t).expect("t3 is nonzero")
}
