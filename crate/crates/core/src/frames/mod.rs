//! Named invariant constructions, organized into frames: a variable table
//! plus an ordered dictionary of defined elements, built in derivation order
//! so proof chains can be replayed step by step.

pub mod char2;
pub mod chains;
pub mod conic;
pub mod gbasis;
pub mod kang;
pub mod maeda;
pub mod masuda;
pub mod sym3;
pub mod v4;

use std::collections::HashMap;
use std::sync::Arc;

use crate::algebra::{parse_expr, AlgebraError, CoeffField, MultiPoly, RatFunc, VarTable};

/// A variable table plus named definitions, in insertion order.
#[derive(Clone, Debug)]
pub struct Frame {
    field: CoeffField,
    vars: Arc<VarTable>,
    defs: Vec<(String, RatFunc)>,
    index: HashMap<String, usize>,
}

impl Frame {
    pub fn new(field: CoeffField, vars: &Arc<VarTable>) -> Self {
        Frame { field, vars: vars.clone(), defs: Vec::new(), index: HashMap::new() }
    }

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    /// Define a new element; names are unique and must not shadow variables.
    pub fn define(&mut self, name: &str, value: RatFunc) -> Result<(), AlgebraError> {
        if self.index.contains_key(name) || self.vars.index_of(name).is_some() {
            return Err(AlgebraError::InvalidArgument(format!("name {name} already bound")));
        }
        self.index.insert(name.to_string(), self.defs.len());
        self.defs.push((name.to_string(), value));
        Ok(())
    }

    /// Define via the expression language; symbols resolve to earlier
    /// definitions first, then to table variables.
    pub fn define_expr(&mut self, name: &str, src: &str) -> Result<(), AlgebraError> {
        let v = self.expr(src)?;
        self.define(name, v)
    }

    /// Evaluate an expression over this frame without defining anything.
    pub fn expr(&self, src: &str) -> Result<RatFunc, AlgebraError> {
        let ast = parse_expr(src)?;
        let lookup = |s: &str| -> Option<RatFunc> {
            if let Some(&i) = self.index.get(s) {
                return Some(self.defs[i].1.clone());
            }
            RatFunc::var(self.field, &self.vars, s).ok()
        };
        ast.eval(self.field, &self.vars, &lookup)
    }

    pub fn get(&self, name: &str) -> &RatFunc {
        self.try_get(name)
            .unwrap_or_else(|| panic!("frame has no definition named {name}"))
    }

    pub fn try_get(&self, name: &str) -> Option<&RatFunc> {
        self.index.get(name).map(|&i| &self.defs[i].1)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.defs.iter().map(|(n, _)| n.as_str())
    }

    pub fn len(&self) -> usize {
        self.defs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.defs.is_empty()
    }

    /// Deterministic text dump, one `name = value` line per definition in
    /// insertion order; diffable across runs.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (n, v) in &self.defs {
            out.push_str(n);
            out.push_str(" = ");
            out.push_str(&v.to_string());
            out.push('\n');
        }
        out
    }
}

/// A displayed action table: for the named hom, each entry pairs a defined
/// element with the displayed image formula (expression text over the
/// frame). Keeping the displays as data lets a failed check say exactly
/// which displayed formula disagrees, and lets the mutation self-test
/// perturb a single displayed coefficient.
#[derive(Clone, Debug)]
pub struct ActionTable {
    pub label: &'static str,
    pub entries: Vec<(&'static str, &'static str)>,
}

/// A list of displayed identities `lhs == rhs`, both sides expression text
/// over the frame.
#[derive(Clone, Debug)]
pub struct IdentityList {
    pub label: &'static str,
    pub entries: Vec<(&'static str, &'static str)>,
}

/// The elementary symmetric polynomial e_k in the named variables.
pub fn elementary_symmetric(
    field: CoeffField,
    vars: &Arc<VarTable>,
    k: usize,
    names: &[&str],
) -> Result<MultiPoly, AlgebraError> {
    if k == 0 || k > names.len() {
        return Err(AlgebraError::InvalidArgument(format!(
            "elementary symmetric degree {k} out of range 1..={}",
            names.len()
        )));
    }
    let xs: Vec<MultiPoly> = names
        .iter()
        .map(|n| MultiPoly::var(field, vars, n))
        .collect::<Result<_, _>>()?;
    // e_k via the ascending product recurrence: after processing x, the
    // accumulator e[j] holds e_j of the variables seen so far.
    let mut e: Vec<MultiPoly> = vec![MultiPoly::zero(field, vars); k + 1];
    e[0] = MultiPoly::one(field, vars);
    for x in &xs {
        for j in (1..=k).rev() {
            let bump = e[j - 1].mul(x);
            e[j] = e[j].add(&bump);
        }
    }
    Ok(e.swap_remove(k))
}

/// e_k of arbitrary rational-function arguments.
pub fn elementary_symmetric_of(
    field: CoeffField,
    vars: &Arc<VarTable>,
    k: usize,
    xs: &[RatFunc],
) -> Result<RatFunc, AlgebraError> {
    if k == 0 || k > xs.len() {
        return Err(AlgebraError::InvalidArgument(format!(
            "elementary symmetric degree {k} out of range 1..={}",
            xs.len()
        )));
    }
    let mut e: Vec<RatFunc> = vec![RatFunc::zero(field, vars); k + 1];
    e[0] = RatFunc::one(field, vars);
    for x in xs {
        for j in (1..=k).rev() {
            let bump = e[j - 1].mul(x);
            e[j] = e[j].add(&bump);
        }
    }
    Ok(e.swap_remove(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Point;

    #[test]
    fn elementary_symmetric_examples() {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x1", "x2", "x3"]).unwrap();
        let names = ["x1", "x2", "x3"];
        let e1 = elementary_symmetric(f, &t, 1, &names).unwrap();
        let e3 = elementary_symmetric(f, &t, 3, &names).unwrap();
        let mut fr = Frame::new(f, &t);
        fr.define("e1", RatFunc::from_poly(e1)).unwrap();
        fr.define("e3", RatFunc::from_poly(e3)).unwrap();
        assert!(fr.get("e1").equals(&fr.expr("x1+x2+x3").unwrap()));
        assert!(fr.get("e3").equals(&fr.expr("x1*x2*x3").unwrap()));
        // e2 at (1,2,3) = 2 + 6 + 3 = 11
        let e2 = elementary_symmetric(f, &t, 2, &names).unwrap();
        let pt = Point::new(&[("x1", f.from_i64(1)), ("x2", f.from_i64(2)), ("x3", f.from_i64(3))]);
        assert_eq!(RatFunc::from_poly(e2).specialize(&pt).unwrap(), f.from_i64(11));
        // range errors
        assert!(elementary_symmetric(f, &t, 0, &names).is_err());
        assert!(elementary_symmetric(f, &t, 4, &names).is_err());
    }

    #[test]
    fn frame_dump_is_deterministic_and_ordered() {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y"]).unwrap();
        let mut fr = Frame::new(f, &t);
        fr.define_expr("s", "x+y").unwrap();
        fr.define_expr("p", "x*y").unwrap();
        fr.define_expr("r", "s^2-2*p").unwrap();
        assert_eq!(fr.dump(), "s = (x + y)\np = x*y\nr = (x^2 + y^2)\n");
        assert!(fr.define_expr("s", "x").is_err());
        assert!(fr.define_expr("x", "y").is_err());
    }
}
