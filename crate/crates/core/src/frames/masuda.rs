//! The degree-3 cyclic invariants: elementary symmetric functions together
//! with the quotient generators u, v of the 3-cycle fixed field, their four
//! polynomial identities, and the twisted-transposition action on them.

use crate::algebra::{AlgebraError, CoeffField, RatFunc, VarTable};
use crate::group::{FieldHom, Perm};

use super::{elementary_symmetric, ActionTable, Frame, IdentityList};

/// Frame over x1, x2, x3 (and the parameter a) containing s1, s2, s3, the
/// two twisted cubic sums c1, c2, and the generators u, v, w = u/v.
pub fn build(field: CoeffField) -> Result<Frame, AlgebraError> {
    assert!(field.has_parameter_a(), "the twisted action needs a");
    let vars = VarTable::new(&field, &["x1", "x2", "x3"])?;
    let mut fr = Frame::new(field, &vars);
    let names = ["x1", "x2", "x3"];
    for k in 1..=3 {
        let e = elementary_symmetric(field, &vars, k, &names)?;
        fr.define(&format!("s{k}"), RatFunc::from_poly(e))?;
    }
    fr.define_expr("c1", "x1*x2^2 + x2*x3^2 + x3*x1^2")?;
    fr.define_expr("c2", "x1^2*x2 + x2^2*x3 + x3^2*x1")?;
    fr.define_expr("den_uv", "x1^2 + x2^2 + x3^2 - x1*x2 - x2*x3 - x3*x1")?;
    fr.define_expr("u", "(c1 - 3*x1*x2*x3)/den_uv")?;
    fr.define_expr("v", "(c2 - 3*x1*x2*x3)/den_uv")?;
    fr.define_expr("w", "u/v")?;
    Ok(fr)
}

/// The four displayed identities expressing s2, s3 and the cubic sums
/// through s1, u, v.
pub fn identities() -> IdentityList {
    IdentityList {
        label: "masuda-identities",
        entries: vec![
            ("s2", "s1*(u+v) - 3*(u^2 - u*v + v^2)"),
            ("s3", "s1*u*v - (u^3 + v^3)"),
            ("c1", "s1^2*u - 3*s1*u^2 + 3*(2*u - v)*(u^2 - u*v + v^2)"),
            ("c2", "s1^2*v - 3*s1*v^2 - 3*(u - 2*v)*(u^2 - u*v + v^2)"),
        ],
    }
}

/// The untwisted 3-cycle generating the fixed field that u, v live in.
pub fn sigma(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::permuting(&Perm::from_cycles(3, "(123)")?, frame.field(), frame.vars())
}

/// The twisted transposition tau = (12).
pub fn tau(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::twisted(&Perm::from_cycles(3, "(12)")?, frame.field(), frame.vars())
}

/// Displayed images of the symmetric functions and cubic sums under tau.
pub fn tau_symmetric_table() -> ActionTable {
    ActionTable {
        label: "n3-tau-on-symmetric-functions",
        entries: vec![
            ("s1", "a*s2/s3"),
            ("s2", "a^2*s1/s3"),
            ("s3", "a^3/s3"),
            ("c1", "a^3*c1/s3^2"),
            ("c2", "a^3*c2/s3^2"),
        ],
    }
}

/// The displayed tau-action on (s3, u, v).
pub fn tau_uv_table() -> ActionTable {
    ActionTable {
        label: "n3-tau-on-s3-u-v",
        entries: vec![
            ("s3", "a^3/s3"),
            ("u", "a*u/(u^2 - u*v + v^2)"),
            ("v", "a*v/(u^2 - u*v + v^2)"),
        ],
    }
}

/// The w = u/v change of variables: tau fixes w and acts on v alone.
pub fn tau_w_table() -> ActionTable {
    ActionTable {
        label: "n3-tau-on-s3-v-w",
        entries: vec![("s3", "a^3/s3"), ("v", "a/(v*(1 - w + w^2))"), ("w", "w")],
    }
}
