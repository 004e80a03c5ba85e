//! The abstract field K(S, T, U) with the order-3 rotation and the twisted
//! involution, shown to generate a copy of S_3, and the displayed chains of
//! variable changes taking the fixed field down to a two-generator problem:
//! (f, g, h) -> (F, G, H) -> (A, B, C) -> (C, D, E) away from characteristic
//! 2, and (f, g, h) -> (A, B, C) in characteristic 2.

use crate::algebra::{AlgebraError, CoeffField, RatFunc, VarTable};
use crate::group::{FieldHom, Perm};

use super::{ActionTable, Frame};

pub fn build(field: CoeffField) -> Result<Frame, AlgebraError> {
    assert!(field.has_parameter_a());
    let vars = VarTable::new(&field, &["S", "T", "U"])?;
    let mut fr = Frame::new(field, &vars);
    fr.define_expr("f", "S + T + U")?;
    fr.define_expr("g", "(S*T^2 + T*U^2 + U*S^2 - 3*S*T*U)/(S^2 + T^2 + U^2 - S*T - T*U - U*S)")?;
    fr.define_expr("h", "(S^2*T + T^2*U + U^2*S - 3*S*T*U)/(S^2 + T^2 + U^2 - S*T - T*U - U*S)")?;
    if field.characteristic() == 2 {
        fr.define_expr("Y", "g^3 + f*g*h + h^3")?;
        fr.define_expr("A", "f/(g + h)")?;
        fr.define_expr("B", "g/h")?;
        fr.define_expr("C", "1/h")?;
    } else {
        fr.define_expr("X", "g^2 - g*h + h^2")?;
        fr.define_expr("Y", "g^3 - f*g*h + h^3")?;
        fr.define_expr("F", "g + h")?;
        fr.define_expr("G", "g - h")?;
        fr.define_expr("H", "f - (g + h)")?;
        fr.define_expr("A", "F/G")?;
        fr.define_expr("B", "G")?;
        fr.define_expr("C", "G/H")?;
        fr.define_expr("D", "1 - A*C + 7*C^2 + A*C^3")?;
        fr.define_expr("E", "2*C*(C^2 - 1)/B")?;
    }
    Ok(fr)
}

/// sigma: S -> T -> U -> S.
pub fn sigma(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    FieldHom::permuting(&Perm::from_cycles(3, "(123)")?, frame.field(), frame.vars())
}

/// tau: the displayed twisted involution of K(S, T, U).
pub fn tau(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    let f = frame.field();
    let s = frame.expr("(-S + T + U)/(a*T*U)")?;
    let t = frame.expr("(S + T - U)/(a*S*T)")?;
    let u = frame.expr("(S - T + U)/(a*S*U)")?;
    FieldHom::from_pairs(f, frame.vars(), &[("S", s), ("T", t), ("U", u)])
}

/// The displayed tau-action on (f, g, h), characteristic != 2.
pub fn fgh_table() -> ActionTable {
    ActionTable {
        label: "thm25-tau-on-fgh",
        entries: vec![
            ("f", "(f^2 - 4*f*(g + h) + 12*X)/(a*Y)"),
            (
                "g",
                "(-f^2*h*(f - 4*h) + 2*f*(f - 2*g - 8*h)*X + 24*X^2 - 8*g*Y)/(a*(f^2 - 2*f*(g + h) + 4*X)*Y)",
            ),
            (
                "h",
                "(-f^2*(f*g + 4*h^2) + 6*f*(f - 2*g)*X + 24*X^2 - 4*(f + 2*h)*Y)/(a*(f^2 - 2*f*(g + h) + 4*X)*Y)",
            ),
        ],
    }
}

/// The displayed tau-action on (F, G, H), characteristic != 2.
pub fn big_fgh_table() -> ActionTable {
    ActionTable {
        label: "thm25-tau-on-FGH",
        entries: vec![
            (
                "F",
                "4*(27*G^4 - 7*F*G^2*H + 5*G^2*H^2 - F*H^3)/(a*(4*F*G^2 - F^2*H + G^2*H)*(3*G^2 + H^2))",
            ),
            (
                "G",
                "4*G*(F*G^2 + 7*G^2*H - F*H^2 + H^3)/(a*(4*F*G^2 - F^2*H + G^2*H)*(3*G^2 + H^2))",
            ),
            (
                "H",
                "4*H*(F*G^2 + 7*G^2*H - F*H^2 + H^3)/(a*(4*F*G^2 - F^2*H + G^2*H)*(3*G^2 + H^2))",
            ),
        ],
    }
}

/// The displayed tau-action on (A, B, C), characteristic != 2.
pub fn abc_table() -> ActionTable {
    ActionTable {
        label: "thm25-tau-on-ABC",
        entries: vec![
            ("A", "(-A + 5*C - 7*A*C^2 + 27*C^3)/(1 - A*C + 7*C^2 + A*C^3)"),
            ("B", "4*(1 - A*C + 7*C^2 + A*C^3)/(a*B*(1 - A^2 + 4*A*C)*(1 + 3*C^2))"),
            ("C", "C"),
        ],
    }
}

/// The displayed tau-action on (C, D, E), characteristic != 2.
pub fn cde_table() -> ActionTable {
    ActionTable {
        label: "thm25-tau-on-CDE",
        entries: vec![
            ("C", "C"),
            ("D", "(1 + 3*C^2)^3/D"),
            ("E", "-a*(1 + 3*C^2)*(D + (1 + 3*C^2)^3/D - 2*(1 + 5*C^2 + 2*C^4))/E"),
        ],
    }
}

/// The characteristic-2 tau-action on (f, g, h), with Y = g^3 + fgh + h^3.
pub fn fgh_table_char2() -> ActionTable {
    ActionTable {
        label: "thm25-tau-on-fgh-char2",
        entries: vec![("f", "f^2/(a*Y)"), ("g", "f*h/(a*Y)"), ("h", "f*g/(a*Y)")],
    }
}

/// The characteristic-2 tau-action on (A, B, C).
pub fn abc_table_char2() -> ActionTable {
    ActionTable {
        label: "thm25-tau-on-ABC-char2",
        entries: vec![
            ("A", "A"),
            ("B", "1/B"),
            ("C", "(a/A)*(B + 1/B + A + 1)/C"),
        ],
    }
}
