//! Benchmark inputs shared by the criterion targets.

use jetforge_core::algebra::{parse_poly, Field, PolyRing};
use jetforge_core::groebner::Ideal;
use jetforge_core::jets::{fiber_ideal, jet_equations, VarietyDatum};

pub fn hypersurface(vars: &[&str], f: &str, field: Field) -> VarietyDatum {
    let r = PolyRing::new(vars.iter().copied(), field).expect("valid ring");
    VarietyDatum::hypersurface(parse_poly(&r, f).expect("valid polynomial")).expect("nonconstant")
}

/// Ideal of the `m`-jets lying over the origin.
pub fn origin_fiber(datum: &VarietyDatum, m: usize) -> Ideal {
    let zero = vec![datum.ring().field().zero(); datum.ambient_dim()];
    fiber_ideal(&jet_equations(datum, m).expect("jets"), &zero).expect("fiber")
}
