//! Substitution homomorphisms of rational function fields, including the
//! twisted permutation action: even permutations permute the variables,
//! odd ones send `x_i` to `a/x_{sigma(i)}`.

use std::fmt;
use std::sync::Arc;

use crate::algebra::{AlgebraError, CoeffField, RatFunc, VarTable};

use super::perm::Perm;

#[derive(Clone, Debug)]
pub struct FieldHom {
    field: CoeffField,
    vars: Arc<VarTable>,
    /// One image per table variable; identity entries are materialized.
    images: Vec<RatFunc>,
    /// Optional permutation provenance: (permutation, twisted?).
    perm_label: Option<(Perm, bool)>,
    /// True when the hom sends `alpha` to `-alpha`.
    alpha_flip: bool,
}

impl FieldHom {
    pub fn identity(field: CoeffField, vars: &Arc<VarTable>) -> Self {
        let images = vars
            .names()
            .map(|n| RatFunc::var(field, vars, n).expect("table variable"))
            .collect();
        FieldHom { field, vars: vars.clone(), images, perm_label: None, alpha_flip: false }
    }

    /// Build from explicit images; unlisted variables map to themselves.
    /// If `alpha` or `a` is remapped, the defining relation `alpha^2 = a`
    /// must be preserved.
    pub fn from_pairs(
        field: CoeffField,
        vars: &Arc<VarTable>,
        pairs: &[(&str, RatFunc)],
    ) -> Result<Self, AlgebraError> {
        let mut hom = Self::identity(field, vars);
        let mut touched_ext = false;
        for (name, img) in pairs {
            let idx = vars
                .index_of(name)
                .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
            if Some(idx) == vars.alpha_index() || Some(idx) == vars.param_index() {
                touched_ext = true;
            }
            hom.images[idx] = img.clone();
        }
        if touched_ext {
            if let Some(ai) = vars.alpha_index() {
                let pi = vars.param_index().expect("alpha implies a");
                let lhs = hom.images[ai].mul(&hom.images[ai]);
                if !lhs.equals(&hom.images[pi]) {
                    return Err(AlgebraError::InvalidArgument(
                        "images do not preserve alpha^2 = a".into(),
                    ));
                }
            }
        }
        Ok(hom)
    }

    /// The Galois flip `alpha -> -alpha`, fixing everything else.
    pub fn alpha_flip(field: CoeffField, vars: &Arc<VarTable>) -> Result<Self, AlgebraError> {
        let ai = vars
            .alpha_index()
            .ok_or_else(|| AlgebraError::InvalidArgument("table has no alpha".into()))?;
        let mut hom = Self::identity(field, vars);
        hom.images[ai] = hom.images[ai].neg();
        hom.alpha_flip = true;
        Ok(hom)
    }

    /// The twisted action of a permutation on the main variables, which are
    /// taken in table order as x_1, ..., x_n.
    pub fn twisted(perm: &Perm, field: CoeffField, vars: &Arc<VarTable>) -> Result<Self, AlgebraError> {
        if !field.has_parameter_a() {
            return Err(AlgebraError::InvalidField(
                "the twisted action needs the parameter a".into(),
            ));
        }
        let main: Vec<usize> = vars.main_indices().collect();
        if main.len() != perm.degree() {
            return Err(AlgebraError::InvalidArgument(format!(
                "permutation degree {} != {} main variables",
                perm.degree(),
                main.len()
            )));
        }
        let even = perm.is_even();
        let a = RatFunc::var(field, vars, "a")?;
        let mut hom = Self::identity(field, vars);
        for (i, &idx) in main.iter().enumerate() {
            let target = RatFunc::var(field, vars, vars.name(main[perm.apply(i + 1) - 1]))?;
            hom.images[idx] = if even { target } else { a.div(&target)? };
        }
        hom.perm_label = Some((perm.clone(), !even));
        Ok(hom)
    }

    /// Untwisted variable permutation (even or odd alike).
    pub fn permuting(perm: &Perm, field: CoeffField, vars: &Arc<VarTable>) -> Result<Self, AlgebraError> {
        let main: Vec<usize> = vars.main_indices().collect();
        if main.len() != perm.degree() {
            return Err(AlgebraError::InvalidArgument(format!(
                "permutation degree {} != {} main variables",
                perm.degree(),
                main.len()
            )));
        }
        let mut hom = Self::identity(field, vars);
        for (i, &idx) in main.iter().enumerate() {
            hom.images[idx] = RatFunc::var(field, vars, vars.name(main[perm.apply(i + 1) - 1]))?;
        }
        hom.perm_label = Some((perm.clone(), false));
        Ok(hom)
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn image(&self, idx: usize) -> &RatFunc {
        &self.images[idx]
    }

    pub fn image_of(&self, name: &str) -> Option<&RatFunc> {
        self.vars.index_of(name).map(|i| &self.images[i])
    }

    pub fn perm_label(&self) -> Option<&(Perm, bool)> {
        self.perm_label.as_ref()
    }

    /// Apply to an expression over the same table.
    pub fn apply(&self, e: &RatFunc) -> Result<RatFunc, AlgebraError> {
        let imgs: Vec<Option<RatFunc>> = self.images.iter().cloned().map(Some).collect();
        e.compose(&imgs, self.field, &self.vars)
    }

    /// `(outer . inner)(e) = outer(inner(e))`: each variable maps through
    /// `inner` first, then `outer`.
    pub fn compose(outer: &Self, inner: &Self) -> Result<Self, AlgebraError> {
        if outer.field != inner.field || outer.vars != inner.vars {
            return Err(AlgebraError::ContextMismatch);
        }
        let mut images = Vec::with_capacity(inner.images.len());
        for img in &inner.images {
            images.push(outer.apply(img)?);
        }
        let perm_label = match (&outer.perm_label, &inner.perm_label) {
            (Some((po, to)), Some((pi, ti))) => Some((po.compose(pi), to ^ ti)),
            _ => None,
        };
        Ok(FieldHom {
            field: outer.field,
            vars: outer.vars.clone(),
            images,
            perm_label,
            alpha_flip: outer.alpha_flip ^ inner.alpha_flip,
        })
    }

    /// Pointwise equality of the underlying field maps.
    pub fn same_map(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.images.iter().zip(other.images.iter()).all(|(x, y)| x.equals(y))
    }
}

impl fmt::Display for FieldHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.perm_label {
            Some((p, true)) => write!(f, "twisted {p}"),
            Some((p, false)) => write!(f, "{p}"),
            None if self.alpha_flip => write!(f, "alpha-flip"),
            None => write!(f, "hom"),
        }
    }
}

/// True iff `e` is fixed by every hom in `gens`.
pub fn is_fixed(e: &RatFunc, gens: &[FieldHom]) -> Result<bool, AlgebraError> {
    for h in gens {
        if !h.apply(e)?.equals(e) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(n: usize) -> (CoeffField, Arc<VarTable>) {
        let f = CoeffField::rationals_with_a();
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let t = VarTable::new(&f, &refs).unwrap();
        (f, t)
    }

    #[test]
    fn twisted_even_permutes_and_odd_inverts() {
        let (f, t) = ctx(3);
        let sigma = FieldHom::twisted(&Perm::from_cycles(3, "(123)").unwrap(), f, &t).unwrap();
        let x1 = RatFunc::var(f, &t, "x1").unwrap();
        let x2 = RatFunc::var(f, &t, "x2").unwrap();
        assert!(sigma.apply(&x1).unwrap().equals(&x2));

        let (f4, t4) = ctx(4);
        let tau = FieldHom::twisted(&Perm::from_cycles(4, "(12)").unwrap(), f4, &t4).unwrap();
        let a = RatFunc::var(f4, &t4, "a").unwrap();
        for (src, dst) in [("x1", "x2"), ("x2", "x1"), ("x3", "x3"), ("x4", "x4")] {
            let x = RatFunc::var(f4, &t4, src).unwrap();
            let y = RatFunc::var(f4, &t4, dst).unwrap();
            assert!(tau.apply(&x).unwrap().equals(&a.div(&y).unwrap()));
        }
    }

    #[test]
    fn twisted_transposition_squares_to_identity() {
        let (f, t) = ctx(2);
        let tau = FieldHom::twisted(&Perm::from_cycles(2, "(12)").unwrap(), f, &t).unwrap();
        let sq = FieldHom::compose(&tau, &tau).unwrap();
        assert!(sq.same_map(&FieldHom::identity(f, &t)));
    }

    #[test]
    fn product_of_two_odd_twists_is_the_even_untwisted_hom() {
        let (f, t) = ctx(3);
        let p12 = Perm::from_cycles(3, "(12)").unwrap();
        let p13 = Perm::from_cycles(3, "(13)").unwrap();
        let t12 = FieldHom::twisted(&p12, f, &t).unwrap();
        let t13 = FieldHom::twisted(&p13, f, &t).unwrap();
        let composed = FieldHom::compose(&t12, &t13).unwrap();
        let expect = FieldHom::twisted(&p12.compose(&p13), f, &t).unwrap();
        assert!(composed.same_map(&expect));
        assert!(p12.compose(&p13).is_even());
    }

    #[test]
    fn substitute_s1_under_all_inverting_map_gives_a_s2_over_s3() {
        // x_i -> a/x_i sends x1+x2+x3 to a(x2x3 + x1x3 + x1x2)/(x1x2x3).
        let (f, t) = ctx(3);
        let a = RatFunc::var(f, &t, "a").unwrap();
        let xs: Vec<RatFunc> = (1..=3).map(|i| RatFunc::var(f, &t, &format!("x{i}")).unwrap()).collect();
        let pairs: Vec<(String, RatFunc)> =
            (0..3).map(|i| (format!("x{}", i + 1), a.div(&xs[i]).unwrap())).collect();
        let pair_refs: Vec<(&str, RatFunc)> =
            pairs.iter().map(|(n, r)| (n.as_str(), r.clone())).collect();
        let h = FieldHom::from_pairs(f, &t, &pair_refs).unwrap();
        let s1 = xs[0].add(&xs[1]).add(&xs[2]);
        let s2 = xs[0].mul(&xs[1]).add(&xs[1].mul(&xs[2])).add(&xs[0].mul(&xs[2]));
        let s3 = xs[0].mul(&xs[1]).mul(&xs[2]);
        let got = h.apply(&s1).unwrap();
        assert!(got.equals(&a.mul(&s2).div(&s3).unwrap()));
        // s3 -> a^3/s3
        let got3 = h.apply(&s3).unwrap();
        assert!(got3.equals(&a.pow(3).unwrap().div(&s3).unwrap()));
    }

    #[test]
    fn identity_hom_fixes_everything() {
        let (f, t) = ctx(2);
        let e = RatFunc::var(f, &t, "x1")
            .unwrap()
            .div(&RatFunc::var(f, &t, "x2").unwrap())
            .unwrap();
        let id = FieldHom::identity(f, &t);
        assert!(id.apply(&e).unwrap().equals(&e));
        assert!(is_fixed(&e, &[id]).unwrap());
    }

    #[test]
    fn n2_fixed_field_generators() {
        // K(x1,x2)^{S2} contains x1 + a/x2 and a*x1/x2 under the twisted swap.
        let (f, t) = ctx(2);
        let tau = FieldHom::twisted(&Perm::from_cycles(2, "(12)").unwrap(), f, &t).unwrap();
        let x1 = RatFunc::var(f, &t, "x1").unwrap();
        let x2 = RatFunc::var(f, &t, "x2").unwrap();
        let a = RatFunc::var(f, &t, "a").unwrap();
        let e1 = x1.add(&a.div(&x2).unwrap());
        let e2 = a.mul(&x1).div(&x2).unwrap();
        assert!(is_fixed(&e1, &[tau.clone()]).unwrap());
        assert!(is_fixed(&e2, &[tau.clone()]).unwrap());
        assert!(!is_fixed(&x1, &[tau]).unwrap());
    }

    #[test]
    fn alpha_flip_preserves_the_defining_relation() {
        let f = CoeffField::rationals_with_a();
        let t = VarTable::with_alpha(&f, &["x1"]).unwrap();
        let rho = FieldHom::alpha_flip(f, &t).unwrap();
        let alpha = RatFunc::var(f, &t, "alpha").unwrap();
        let a = RatFunc::var(f, &t, "a").unwrap();
        let rel = alpha.mul(&alpha).sub(&a);
        assert!(rel.is_zero()); // alpha^2 reduces to a on construction
        assert!(rho.apply(&alpha).unwrap().equals(&alpha.neg()));
        // z = (alpha - x)/(alpha + x) maps to its reciprocal
        let x = RatFunc::var(f, &t, "x1").unwrap();
        let z = alpha.sub(&x).div(&alpha.add(&x)).unwrap();
        assert!(rho.apply(&z).unwrap().equals(&z.inv().unwrap()));
        // an explicit bad extension map is rejected
        assert!(FieldHom::from_pairs(f, &t, &[("alpha", alpha.add(&a))]).is_err());
    }
}
