//! Variable tables: the ordered set of indeterminates of one frame.
//!
//! The order is fixed at creation and defines the graded-lex monomial order.
//! When the field carries the parameter `a` it is appended as the final
//! variable; the distinguished square root `alpha` (with `alpha^2 = a`) sits
//! immediately before it.

use std::sync::Arc;

use super::field::CoeffField;
use super::AlgebraError;

pub const PARAM_NAME: &str = "a";
pub const ALPHA_NAME: &str = "alpha";

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarTable {
    names: Vec<String>,
    alpha: Option<usize>,
    param_a: Option<usize>,
}

impl VarTable {
    /// A table of the given main variables, plus `a` if the field has it.
    pub fn new(field: &CoeffField, main: &[&str]) -> Result<Arc<Self>, AlgebraError> {
        Self::build(field, main, false)
    }

    /// Like [`VarTable::new`] but also adjoining `alpha`; requires the field
    /// to carry the parameter `a`.
    pub fn with_alpha(field: &CoeffField, main: &[&str]) -> Result<Arc<Self>, AlgebraError> {
        if !field.has_parameter_a() {
            return Err(AlgebraError::InvalidField(
                "alpha requires the parameter a".into(),
            ));
        }
        Self::build(field, main, true)
    }

    fn build(field: &CoeffField, main: &[&str], alpha: bool) -> Result<Arc<Self>, AlgebraError> {
        let mut names: Vec<String> = Vec::with_capacity(main.len() + 2);
        for &m in main {
            if m.is_empty() {
                return Err(AlgebraError::InvalidArgument("empty variable name".into()));
            }
            if field.has_parameter_a() && m == PARAM_NAME {
                return Err(AlgebraError::InvalidArgument(format!(
                    "variable name {PARAM_NAME} is reserved for the parameter"
                )));
            }
            if m == ALPHA_NAME {
                return Err(AlgebraError::InvalidArgument(format!(
                    "variable name {ALPHA_NAME} is reserved"
                )));
            }
            if names.iter().any(|n| n == m) {
                return Err(AlgebraError::InvalidArgument(format!("duplicate variable {m}")));
            }
            names.push(m.to_string());
        }
        let alpha_idx = if alpha {
            names.push(ALPHA_NAME.to_string());
            Some(names.len() - 1)
        } else {
            None
        };
        let param_idx = if field.has_parameter_a() {
            names.push(PARAM_NAME.to_string());
            Some(names.len() - 1)
        } else {
            None
        };
        Ok(Arc::new(VarTable { names, alpha: alpha_idx, param_a: param_idx }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn alpha_index(&self) -> Option<usize> {
        self.alpha
    }

    pub fn param_index(&self) -> Option<usize> {
        self.param_a
    }

    /// Indices of the main variables (everything except `alpha` and `a`).
    pub fn main_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.names.len()).filter(|i| Some(*i) != self.alpha && Some(*i) != self.param_a)
    }

    /// Same names, but `alpha` demoted to an ordinary variable. Internal to
    /// gcd, which works in the fused free ring.
    pub(crate) fn clone_without_alpha(self: &Arc<Self>) -> Arc<Self> {
        Arc::new(VarTable { names: self.names.clone(), alpha: None, param_a: self.param_a })
    }
}

/// Shared-table equality: pointer fast path, then structural.
pub fn same_table(x: &Arc<VarTable>, y: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(x, y) || x == y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout_is_main_then_alpha_then_a() {
        let f = CoeffField::rationals_with_a();
        let t = VarTable::with_alpha(&f, &["x1", "x2"]).unwrap();
        let names: Vec<_> = t.names().collect();
        assert_eq!(names, ["x1", "x2", "alpha", "a"]);
        assert_eq!(t.alpha_index(), Some(2));
        assert_eq!(t.param_index(), Some(3));
        assert_eq!(t.main_indices().collect::<Vec<_>>(), [0, 1]);
    }

    #[test]
    fn reserved_and_duplicate_names_rejected() {
        let f = CoeffField::rationals_with_a();
        assert!(VarTable::new(&f, &["a"]).is_err());
        assert!(VarTable::new(&f, &["x", "x"]).is_err());
        assert!(VarTable::new(&CoeffField::rationals(), &["alpha"]).is_err());
        // alpha needs the parameter
        assert!(VarTable::with_alpha(&CoeffField::rationals(), &["x"]).is_err());
    }
}
