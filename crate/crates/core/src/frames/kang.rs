//! The order-2 automorphism x -> a/x, y -> b/y with b = c(x + a/x) + d, and
//! its fixed elements s, t. The constants c, d are carried as extra fixed
//! variables so the check is uniform in them.

use crate::algebra::{AlgebraError, CoeffField, RatFunc, VarTable};
use crate::group::FieldHom;

use super::Frame;

pub fn build(field: CoeffField) -> Result<Frame, AlgebraError> {
    assert!(field.has_parameter_a());
    let vars = VarTable::new(&field, &["x", "y", "c", "d"])?;
    let mut fr = Frame::new(field, &vars);
    fr.define_expr("b", "c*(x + a/x) + d")?;
    fr.define_expr("s", "(x - a/x)/(x*y - a*b/(x*y))")?;
    fr.define_expr("t", "(y - b/y)/(x*y - a*b/(x*y))")?;
    // Trace elements pinning x and y to degree 2 over the fixed field.
    fr.define_expr("trace_x", "x + a/x")?;
    fr.define_expr("trace_y", "y + b/y")?;
    Ok(fr)
}

/// The automorphism sigma: x -> a/x, y -> b/y (c, d, a fixed).
pub fn sigma(frame: &Frame) -> Result<FieldHom, AlgebraError> {
    let f = frame.field();
    let x = RatFunc::var(f, frame.vars(), "x")?;
    let y = RatFunc::var(f, frame.vars(), "y")?;
    let a = RatFunc::var(f, frame.vars(), "a")?;
    let b = frame.get("b").clone();
    FieldHom::from_pairs(f, frame.vars(), &[("x", a.div(&x)?), ("y", b.div(&y)?)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::is_fixed;

    #[test]
    fn sigma_is_an_involution_and_fixes_s_t() {
        let fr = build(CoeffField::rationals_with_a()).unwrap();
        let s = sigma(&fr).unwrap();
        let sq = FieldHom::compose(&s, &s).unwrap();
        assert!(sq.same_map(&FieldHom::identity(fr.field(), fr.vars())));
        assert!(is_fixed(fr.get("s"), std::slice::from_ref(&s)).unwrap());
        assert!(is_fixed(fr.get("t"), std::slice::from_ref(&s)).unwrap());
    }

    #[test]
    fn x_and_y_satisfy_quadratics_over_the_fixed_field() {
        let fr = build(CoeffField::rationals_with_a()).unwrap();
        let s = sigma(&fr).unwrap();
        // The traces are fixed, and z^2 - trace*z + norm vanishes at z = x, y.
        assert!(is_fixed(fr.get("trace_x"), std::slice::from_ref(&s)).unwrap());
        assert!(is_fixed(fr.get("trace_y"), std::slice::from_ref(&s)).unwrap());
        assert!(fr.expr("x^2 - trace_x*x + a").unwrap().is_zero());
        assert!(fr.expr("y^2 - trace_y*y + b").unwrap().is_zero());
    }
}
