//! The degree-4 constructions: the Klein four-group invariants s1, s4, S, T,
//! U, the displayed expressions recovering x1, x2, x3, the quartic bounding
//! the degree over them, and the induced action of the twisted S4 on
//! (s4, S, T, U) together with the normalized elements N and P.

use crate::algebra::{AlgebraError, CoeffField, RatFunc, VarTable};
use crate::group::{FieldHom, Perm};

use super::{elementary_symmetric, ActionTable, Frame, IdentityList};

pub fn build(field: CoeffField) -> Result<Frame, AlgebraError> {
    assert!(field.has_parameter_a());
    let vars = VarTable::new(&field, &["x1", "x2", "x3", "x4"])?;
    let mut fr = Frame::new(field, &vars);
    let names = ["x1", "x2", "x3", "x4"];
    let s1 = elementary_symmetric(field, &vars, 1, &names)?;
    let s4 = elementary_symmetric(field, &vars, 4, &names)?;
    fr.define("s1", RatFunc::from_poly(s1))?;
    fr.define("s4", RatFunc::from_poly(s4))?;
    fr.define_expr("S", "(x1 + x2 - x3 - x4)/(x1*x2 - x3*x4)")?;
    fr.define_expr("T", "(x1 - x2 - x3 + x4)/(x1*x4 - x2*x3)")?;
    fr.define_expr("U", "(x1 - x2 + x3 - x4)/(x1*x3 - x2*x4)")?;
    fr.define_expr("u1", "S + T + U")?;
    fr.define_expr("u2", "S*T + T*U + S*U")?;
    fr.define_expr("u3", "S*T*U")?;
    // N and P as displayed, per characteristic.
    if field.characteristic() == 2 {
        fr.define_expr("N", "s4/(s4 + a^2)")?;
        fr.define_expr("P", "N + (S + T + U)/(S + T + U + a*S*T*U)")?;
    } else {
        fr.define_expr("N", "(s4 + a^2)/(s4 - a^2)")?;
        fr.define_expr("P", "N*(S + T + U + (S^2 + T^2 + U^2 - 2*(S*T + T*U + U*S))/(a*S*T*U))")?;
    }
    Ok(fr)
}

/// The displayed recovery of x1, x2, x3 from (s1, S, T, U, x4), the quartic
/// satisfied by x4, and the s4 formula.
pub fn recovery_identities() -> IdentityList {
    IdentityList {
        label: "v4-recovery",
        entries: vec![
            (
                "x1",
                "(4 - s1*T + (-2*u1 + s1*T*(S + U))*x4 + S*U*(1 - s1*T)*x4^2 + u3*x4^3)/(S - T + U - S*U*x4)",
            ),
            (
                "x2",
                "(4 - s1*U + (-2*u1 + s1*U*(T + S))*x4 + T*S*(1 - s1*U)*x4^2 + u3*x4^3)/(T - U + S - T*S*x4)",
            ),
            (
                "x3",
                "(4 - s1*S + (-2*u1 + s1*S*(U + T))*x4 + U*T*(1 - s1*S)*x4^2 + u3*x4^3)/(U - S + T - U*T*x4)",
            ),
            (
                "0",
                "u1^2 - 4*u2 + s1*u3 + (8 - s1*u1)*u3*x4 - (2*u1 - s1*u2)*u3*x4^2 - s1*u3^2*x4^3 + u3^2*x4^4",
            ),
            ("s4", "(u1^2 - 4*u2 + u3*s1)/u3^2"),
        ],
    }
}

pub fn sigma(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::twisted(&Perm::from_cycles(4, "(123)")?, frame.field(), frame.vars())
}

pub fn tau(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::twisted(&Perm::from_cycles(4, "(12)")?, frame.field(), frame.vars())
}

pub fn rho1(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::twisted(&Perm::from_cycles(4, "(12)(34)")?, frame.field(), frame.vars())
}

pub fn rho2(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::twisted(&Perm::from_cycles(4, "(13)(24)")?, frame.field(), frame.vars())
}

/// The displayed sigma-action on (s1, s4, S, T, U).
pub fn sigma_table() -> ActionTable {
    ActionTable {
        label: "n4-sigma-on-s-stu",
        entries: vec![("s1", "s1"), ("s4", "s4"), ("S", "T"), ("T", "U"), ("U", "S")],
    }
}

/// The displayed tau-action on (s4, S, T, U).
pub fn tau_table() -> ActionTable {
    ActionTable {
        label: "n4-tau-on-s4-stu",
        entries: vec![
            ("s4", "a^4/s4"),
            ("S", "(-S + T + U)/(a*T*U)"),
            ("T", "(S + T - U)/(a*S*T)"),
            ("U", "(S - T + U)/(a*S*U)"),
        ],
    }
}

/// Displayed images of N and P, per characteristic.
pub fn np_table(char2: bool) -> ActionTable {
    if char2 {
        ActionTable {
            label: "n4-np-char2",
            entries: vec![("N", "N + 1"), ("P", "P")],
        }
    } else {
        ActionTable {
            label: "n4-np",
            entries: vec![("N", "-N"), ("P", "P")],
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_fixed;

    #[test]
    fn recovery_identities_hold() {
        let fr = build(CoeffField::rationals_with_a()).unwrap();
        for (lhs, rhs) in recovery_identities().entries {
            let l = fr.expr(lhs).unwrap();
            let r = fr.expr(rhs).unwrap();
            assert!(l.equals(&r), "{lhs} recovery failed");
        }
    }

    #[test]
    fn stu_are_v4_invariant() {
        let fr = build(CoeffField::rationals_with_a()).unwrap();
        let gens = [rho1(&fr).unwrap(), rho2(&fr).unwrap()];
        for name in ["S", "T", "U", "s1", "s4"] {
            assert!(is_fixed(fr.get(name), &gens).unwrap(), "{name} not V4-fixed");
        }
    }

    #[test]
    fn sigma_and_tau_tables_hold() {
        let fr = build(CoeffField::rationals_with_a()).unwrap();
        let s = sigma(&fr).unwrap();
        for (name, expected) in sigma_table().entries {
            assert!(s.apply(fr.get(name)).unwrap().equals(&fr.expr(expected).unwrap()));
        }
        let t = tau(&fr).unwrap();
        for (name, expected) in tau_table().entries {
            assert!(
                t.apply(fr.get(name)).unwrap().equals(&fr.expr(expected).unwrap()),
                "tau({name}) mismatch"
            );
        }
    }

    #[test]
    fn n_and_p_transform_as_displayed_in_char_0() {
        let fr = build(CoeffField::rationals_with_a()).unwrap();
        let s = sigma(&fr).unwrap();
        let t = tau(&fr).unwrap();
        assert!(s.apply(fr.get("N")).unwrap().equals(fr.get("N")));
        assert!(s.apply(fr.get("P")).unwrap().equals(fr.get("P")));
        for (name, expected) in np_table(false).entries {
            assert!(
                t.apply(fr.get(name)).unwrap().equals(&fr.expr(expected).unwrap()),
                "tau({name}) mismatch"
            );
        }
    }

    #[test]
    fn n_and_p_transform_as_displayed_in_char_2() {
        let fr = build(CoeffField::prime_with_a(2).unwrap()).unwrap();
        let s = sigma(&fr).unwrap();
        let t = tau(&fr).unwrap();
        assert!(s.apply(fr.get("N")).unwrap().equals(fr.get("N")));
        assert!(s.apply(fr.get("P")).unwrap().equals(fr.get("P")));
        for (name, expected) in np_table(true).entries {
            assert!(
                t.apply(fr.get(name)).unwrap().equals(&fr.expr(expected).unwrap()),
                "tau({name}) mismatch in char 2"
            );
        }
    }
}
