//! Normalized quotients of multivariate polynomials: the universal element
//! of every function field in the suite.
//!
//! Invariants maintained by construction:
//!   1. the denominator is nonzero (zero numerator is stored as 0/1);
//!   2. numerator and denominator are coprime;
//!   3. the pair carries the canonical unit: over F_p the denominator is
//!      monic in graded-lex; over Q both are scaled to a jointly primitive
//!      integer pair with positive denominator leading coefficient.
//!
//! Equal field elements therefore have identical representations, and
//! equality is structural comparison.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, Integer, One, Zero};

use super::field::{Coef, CoeffField};
use super::gcd::{self, div_mono, min_exps};
use super::gf2e::Gf2e;
use super::poly::{Exps, MultiPoly};
use super::vars::{same_table, VarTable};
use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

/// A full assignment of coefficient values to variables, for exact
/// specialization.
#[derive(Clone, Debug, Default)]
pub struct Point {
    pub values: HashMap<String, Coef>,
}

impl Point {
    pub fn new(pairs: &[(&str, Coef)]) -> Self {
        Point { values: pairs.iter().map(|(n, c)| (n.to_string(), c.clone())).collect() }
    }

    fn to_slice(&self, vars: &Arc<VarTable>) -> Result<Vec<Coef>, AlgebraError> {
        vars.names()
            .map(|n| {
                self.values
                    .get(n)
                    .cloned()
                    .ok_or_else(|| AlgebraError::BadPoint(format!("no value for {n}")))
            })
            .collect()
    }
}

impl RatFunc {
    // ---- Constructors ----

    /// Normalize `num/den`. This is the only construction path; all the
    /// invariants above hold on return.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, AlgebraError> {
        if num.field() != den.field() || !same_table(num.vars(), den.vars()) {
            return Err(AlgebraError::ContextMismatch);
        }
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            let one = MultiPoly::one(den.field(), den.vars());
            return Ok(RatFunc { num, den: one });
        }
        // Monomial content is common and cheap to cancel.
        let mn = min_exps(&num);
        let md = min_exps(&den);
        let common: Exps = mn.iter().zip(md.iter()).map(|(&x, &y)| x.min(y)).collect();
        let mut num = div_mono(&num, &common);
        let mut den = div_mono(&den, &common);

        if !num.is_constant() && !den.is_constant() && !gcd::gcd_certified_one(&num, &den, 0x5eed) {
            let g = gcd::gcd(&num, &den);
            if !g.is_constant() {
                num = gcd::exact_div(&num, &g).expect("gcd divides numerator");
                den = gcd::exact_div(&den, &g).expect("gcd divides denominator");
            }
        }
        Ok(Self::canonical_scale(num, den))
    }

    /// Apply only the canonical unit scaling; callers must guarantee the
    /// pair is already coprime.
    fn canonical_scale(num: MultiPoly, den: MultiPoly) -> Self {
        let field = num.field();
        if field.characteristic() > 0 {
            let lc = den.leading_coef().expect("nonzero denominator").clone();
            let inv = field.inv(&lc).expect("unit leading coefficient");
            return RatFunc { num: num.scale(&inv), den: den.scale(&inv) };
        }
        // Char 0: clear to integers jointly, divide by the joint content,
        // make the denominator's leading integer positive.
        let l = num.denominator_lcm().lcm(&den.denominator_lcm());
        let ls = BigRational::from_integer(l);
        let num = num.scale_big(&ls);
        let den = den.scale_big(&ls);
        let mut content = num.integer_content().gcd(&den.integer_content());
        if content.is_zero() {
            content = BigInt::one();
        }
        if !den.leading_coef_sign_positive() {
            content = -content;
        }
        let s = BigRational::new(BigInt::one(), content);
        RatFunc { num: num.scale_big(&s), den: den.scale_big(&s) }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let one = MultiPoly::one(p.field(), p.vars());
        if p.is_zero() {
            return RatFunc { num: p, den: one };
        }
        Self::canonical_scale(p, one)
    }

    pub fn var(field: CoeffField, vars: &Arc<VarTable>, name: &str) -> Result<Self, AlgebraError> {
        Ok(Self::from_poly(MultiPoly::var(field, vars, name)?))
    }

    pub fn from_i64(field: CoeffField, vars: &Arc<VarTable>, n: i64) -> Self {
        Self::from_poly(MultiPoly::from_i64(field, vars, n))
    }

    pub fn from_ratio(
        field: CoeffField,
        vars: &Arc<VarTable>,
        n: i64,
        d: i64,
    ) -> Result<Self, AlgebraError> {
        let num = MultiPoly::from_i64(field, vars, n);
        let den = MultiPoly::from_i64(field, vars, d);
        Self::new(num, den)
    }

    pub fn zero(field: CoeffField, vars: &Arc<VarTable>) -> Self {
        Self::from_poly(MultiPoly::zero(field, vars))
    }

    pub fn one(field: CoeffField, vars: &Arc<VarTable>) -> Self {
        Self::from_poly(MultiPoly::one(field, vars))
    }

    // ---- Accessors ----

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn field(&self) -> CoeffField {
        self.num.field()
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.constant_value().is_some()
    }

    pub fn occurs(&self, var: usize) -> bool {
        self.num.occurs(var) || self.den.occurs(var)
    }

    /// Upper bound for the total degree of the cross-multiplied difference
    /// with another element (Schwartz-Zippel bookkeeping).
    pub fn cross_degree(&self, other: &Self) -> u32 {
        (self.num.total_degree() + other.den.total_degree())
            .max(other.num.total_degree() + self.den.total_degree())
    }

    // ---- Ring operations ----

    fn check_ctx(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.field() != rhs.field() || !same_table(self.vars(), rhs.vars()) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(())
    }

    /// Addition with denominator-gcd extraction: since both operands are in
    /// lowest terms, the only factor the result can share with its
    /// denominator lives inside g = gcd(den1, den2), so the final reduction
    /// is a gcd against g alone.
    pub fn add(&self, rhs: &Self) -> Self {
        self.check_ctx(rhs).expect("rational function context mismatch");
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let g = reduced_gcd(&self.den, &rhs.den);
        if g.is_constant() {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            if num.is_zero() {
                return Self::zero(self.field(), self.vars());
            }
            return Self::canonical_scale(num, self.den.mul(&rhs.den));
        }
        let d1p = gcd::exact_div(&self.den, &g).expect("gcd divides");
        let d2p = gcd::exact_div(&rhs.den, &g).expect("gcd divides");
        let t = self.num.mul(&d2p).add(&rhs.num.mul(&d1p));
        if t.is_zero() {
            return Self::zero(self.field(), self.vars());
        }
        let gp = reduced_gcd(&t, &g);
        let (num, g_rest) = if gp.is_constant() {
            (t, g)
        } else {
            (
                gcd::exact_div(&t, &gp).expect("gcd divides"),
                gcd::exact_div(&g, &gp).expect("gcd divides"),
            )
        };
        Self::canonical_scale(num, d1p.mul(&d2p).mul(&g_rest))
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        // Negation preserves coprimality; rescale to keep the canonical unit.
        Self::canonical_scale(self.num.neg(), self.den.clone())
    }

    /// Multiplication with cross-cancellation: gcd(num1, den2) and
    /// gcd(num2, den1) are divided out first, after which the product is
    /// already in lowest terms.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_ctx(rhs).expect("rational function context mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.field(), self.vars());
        }
        let g1 = reduced_gcd(&self.num, &rhs.den);
        let g2 = reduced_gcd(&rhs.num, &self.den);
        let n1 = divide_out(&self.num, &g1);
        let d2 = divide_out(&rhs.den, &g1);
        let n2 = divide_out(&rhs.num, &g2);
        let d1 = divide_out(&self.den, &g2);
        Self::canonical_scale(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.check_ctx(rhs)?;
        Ok(self.mul(&rhs.inv()?))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::canonical_scale(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one(self.field(), self.vars());
        let mut k = e.unsigned_abs();
        let mut b = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&b);
            }
            k >>= 1;
            if k > 0 {
                b = b.mul(&b);
            }
        }
        Ok(acc)
    }

    pub fn scale_i64(&self, n: i64) -> Self {
        self.mul(&Self::from_i64(self.field(), self.vars(), n))
    }

    /// Exact equality of field elements. With canonical forms this is
    /// structural; kept as a named operation for readability at call sites.
    pub fn equals(&self, rhs: &Self) -> bool {
        self == rhs
    }

    // ---- Calculus ----

    /// Formal partial derivative (quotient rule), normalized.
    pub fn derivative(&self, var: &str) -> Result<Self, AlgebraError> {
        let idx = self
            .vars()
            .index_of(var)
            .ok_or_else(|| AlgebraError::UnknownVariable(var.to_string()))?;
        let n = self.num.derivative(idx).mul(&self.den).sub(&self.num.mul(&self.den.derivative(idx)));
        Self::new(n, self.den.mul(&self.den))
    }

    // ---- Substitution ----

    /// Image under the map sending variable `i` to `images[i]` (which live
    /// in a possibly different table). Every variable occurring in `self`
    /// must have an image.
    pub fn compose(
        &self,
        images: &[Option<RatFunc>],
        field: CoeffField,
        vars: &Arc<VarTable>,
    ) -> Result<Self, AlgebraError> {
        assert_eq!(images.len(), self.vars().len());
        for i in 0..images.len() {
            if self.occurs(i) && images[i].is_none() {
                return Err(AlgebraError::MissingImage(self.vars().name(i).to_string()));
            }
        }
        let num = poly_image(&self.num, images, field, vars)?;
        let den = poly_image(&self.den, images, field, vars)?;
        if den.is_zero() {
            return Err(AlgebraError::SubstitutionUndefined(format!(
                "denominator {} vanishes identically under the substitution",
                self.den
            )));
        }
        num.div(&den)
    }

    // ---- Specialization ----

    /// Exact evaluation at a point of the same coefficient field.
    pub fn specialize(&self, pt: &Point) -> Result<Coef, AlgebraError> {
        let slice = pt.to_slice(self.vars())?;
        let d = self.den.eval_coef(&slice);
        if d.is_zero() {
            return Err(AlgebraError::BadPoint(format!("pole: {} vanishes", self.den)));
        }
        let n = self.num.eval_coef(&slice);
        self.field().div(&n, &d)
    }

    /// Evaluation of the residue image mod p; `None` signals a bad point
    /// (pole, or a rational coefficient with denominator divisible by p).
    pub fn eval_mod(&self, p: u64, point: &[u64]) -> Option<u64> {
        let d = self.den.eval_mod(p, point)?;
        if d == 0 {
            return None;
        }
        let n = self.num.eval_mod(p, point)?;
        Some(super::field::mul_mod(n, super::field::inv_mod(d, p), p))
    }

    /// Evaluation of a characteristic-2 element in `F_{2^16}`.
    pub fn eval_gf2e(&self, point: &[Gf2e]) -> Option<Gf2e> {
        let d = self.den.eval_gf2e(point);
        let dinv = d.inv()?;
        Some(self.num.eval_gf2e(point).mul(dinv))
    }
}

/// Gcd behind the coprimality certificate: monomial content first, then the
/// certified fast path, a full gcd only when a shared factor is plausible.
fn reduced_gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let field = p.field();
    if p.vars().alpha_index().is_some() {
        // Monomial reasoning needs the fused ring (a = alpha^2); the full
        // gcd does that internally.
        if gcd::gcd_certified_one(p, q, 0x5eed) {
            return MultiPoly::one(field, p.vars());
        }
        return gcd::gcd(p, q);
    }
    let mp = min_exps(p);
    let mq = min_exps(q);
    let common: Exps = mp.iter().zip(mq.iter()).map(|(&x, &y)| x.min(y)).collect();
    let mono = MultiPoly::from_terms(field, p.vars(), vec![(common, field.one())]);
    let ps = div_mono(p, &mp);
    let qs = div_mono(q, &mq);
    if ps.is_constant() || qs.is_constant() || gcd::gcd_certified_one(&ps, &qs, 0x5eed) {
        return mono;
    }
    gcd::gcd(&ps, &qs).mul(&mono)
}

fn divide_out(p: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    if g.is_constant() {
        return p.clone();
    }
    gcd::exact_div(p, g).expect("gcd divides")
}

/// Image of a polynomial under variable images, over a common denominator.
fn poly_image(
    p: &MultiPoly,
    images: &[Option<RatFunc>],
    field: CoeffField,
    vars: &Arc<VarTable>,
) -> Result<RatFunc, AlgebraError> {
    if p.is_zero() {
        return Ok(RatFunc::zero(field, vars));
    }
    let degs = p.degrees();
    let coef_image = |c: &Coef| -> Coef {
        match (c, field.characteristic()) {
            (Coef::Rat(_), 0) => c.clone(),
            (Coef::Mod(m), ch) if ch > 0 => Coef::Mod(*m),
            _ => panic!("field kind changed under substitution"),
        }
    };

    // num_pows[i][k], den_pows[i][k]: k-th powers of the image parts.
    // For term/term images (twisted actions, alpha flips) every power is a
    // single term, so the per-term loop below degenerates to a term map.
    let mut num_pows: Vec<Vec<MultiPoly>> = Vec::with_capacity(degs.len());
    let mut den_pows: Vec<Vec<MultiPoly>> = Vec::with_capacity(degs.len());
    for (i, &d) in degs.iter().enumerate() {
        let (n0, d0) = if d == 0 {
            (MultiPoly::one(field, vars), MultiPoly::one(field, vars))
        } else {
            let img = images[i].as_ref().expect("checked by caller");
            (img.num().clone(), img.den().clone())
        };
        let mut np = Vec::with_capacity(d as usize + 1);
        let mut dp = Vec::with_capacity(d as usize + 1);
        np.push(MultiPoly::one(field, vars));
        dp.push(MultiPoly::one(field, vars));
        for k in 1..=d as usize {
            np.push(np[k - 1].mul(&n0));
            dp.push(dp[k - 1].mul(&d0));
        }
        num_pows.push(np);
        den_pows.push(dp);
    }

    let common_den = den_pows
        .iter()
        .zip(degs.iter())
        .fold(MultiPoly::one(field, vars), |acc, (dp, &d)| acc.mul(&dp[d as usize]));

    let mut acc = MultiPoly::zero(field, vars);
    for (e, c) in p.terms() {
        let mut t = MultiPoly::constant(field, vars, coef_image(c));
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t = t.mul(&num_pows[i][k as usize]);
            }
            let co = degs[i] - k;
            if co > 0 {
                t = t.mul(&den_pows[i][co as usize]);
            }
        }
        acc = acc.add(&t);
    }
    RatFunc::new(acc, common_den)
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.constant_value().is_some_and(|c| c.is_one()) {
            if self.num.num_terms() > 1 {
                write!(f, "({})", self.num)
            } else {
                write!(f, "{}", self.num)
            }
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::CoeffField;

    fn setup() -> (CoeffField, Arc<VarTable>) {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y"]).unwrap();
        (f, t)
    }

    fn rvar(f: CoeffField, t: &Arc<VarTable>, n: &str) -> RatFunc {
        RatFunc::var(f, t, n).unwrap()
    }

    #[test]
    fn cancellation_to_lowest_terms() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        let one = RatFunc::one(f, &t);
        // (x^2 - 1)/(x - 1) = x + 1
        let r = x.mul(&x).sub(&one).div(&x.sub(&one)).unwrap();
        assert_eq!(r, x.add(&one));
        assert!(r.is_polynomial());
    }

    #[test]
    fn unit_cancellation_over_q() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        // (2x + 2)/2 = x + 1
        let two = RatFunc::from_i64(f, &t, 2);
        let r = x.scale_i64(2).add(&two).div(&two).unwrap();
        assert_eq!(r, x.add(&RatFunc::one(f, &t)));
    }

    #[test]
    fn common_factor_cancellation() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        let one = RatFunc::one(f, &t);
        // (x^2-1)/(x^2-2x+1) = (x+1)/(x-1)
        let num = x.pow(2).unwrap().sub(&one);
        let den = x.pow(2).unwrap().sub(&x.scale_i64(2)).add(&one);
        let r = num.div(&den).unwrap();
        let expect = x.add(&one).div(&x.sub(&one)).unwrap();
        assert_eq!(r, expect);
    }

    #[test]
    fn canonical_form_over_q_is_integer_primitive_positive() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        // x/2 stored as x over 2
        let half_x = x.mul(&RatFunc::from_ratio(f, &t, 1, 2).unwrap());
        assert_eq!(format!("{half_x}"), "(x)/(2)");
        // denominator sign pinned positive
        let r = x.div(&RatFunc::from_i64(f, &t, -3)).unwrap();
        assert_eq!(format!("{r}"), "(-x)/(3)");
    }

    #[test]
    fn specialize_masuda_u_at_123_is_7_thirds() {
        // u = (x1 x2^2 + x2 x3^2 + x3 x1^2 - 3 x1 x2 x3)
        //   / (x1^2 + x2^2 + x3^2 - x1 x2 - x2 x3 - x3 x1) at (1,2,3):
        // numerator 4 + 18 + 3 - 18 = 7, denominator 14 - 11 = 3.
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x1", "x2", "x3"]).unwrap();
        let [x1, x2, x3] = ["x1", "x2", "x3"].map(|n| RatFunc::var(f, &t, n).unwrap());
        let num = x1
            .mul(&x2.pow(2).unwrap())
            .add(&x2.mul(&x3.pow(2).unwrap()))
            .add(&x3.mul(&x1.pow(2).unwrap()))
            .sub(&x1.mul(&x2).mul(&x3).scale_i64(3));
        let den = x1
            .pow(2)
            .unwrap()
            .add(&x2.pow(2).unwrap())
            .add(&x3.pow(2).unwrap())
            .sub(&x1.mul(&x2))
            .sub(&x2.mul(&x3))
            .sub(&x3.mul(&x1));
        let u = num.div(&den).unwrap();
        let pt = Point::new(&[("x1", f.from_i64(1)), ("x2", f.from_i64(2)), ("x3", f.from_i64(3))]);
        assert_eq!(u.specialize(&pt).unwrap(), f.from_ratio(7, 3).unwrap());
    }

    #[test]
    fn pole_is_a_bad_point() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        let one = RatFunc::one(f, &t);
        let r = one.div(&x.sub(&one)).unwrap();
        let pt = Point::new(&[("x", f.from_i64(1)), ("y", f.from_i64(0))]);
        assert!(matches!(r.specialize(&pt), Err(AlgebraError::BadPoint(_))));
        let pt2 = Point::new(&[("x", f.from_i64(3)), ("y", f.from_i64(0))]);
        assert_eq!(r.specialize(&pt2).unwrap(), f.from_ratio(1, 2).unwrap());
    }

    #[test]
    fn zero_at_point() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        let y = rvar(f, &t, "y");
        let e = x.add(&y);
        let pt = Point::new(&[("x", f.from_i64(1)), ("y", f.from_i64(-1))]);
        assert!(e.specialize(&pt).unwrap().is_zero());
    }

    #[test]
    fn derivative_quotient_rule() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        let y = rvar(f, &t, "y");
        // d/dx (x^2 y) = 2xy
        assert_eq!(x.pow(2).unwrap().mul(&y).derivative("x").unwrap(), x.mul(&y).scale_i64(2));
        // d/dx (y/x) = -y/x^2
        let r = y.div(&x).unwrap().derivative("x").unwrap();
        assert_eq!(r, y.neg().div(&x.pow(2).unwrap()).unwrap());
        assert!(r.derivative("nope").is_err());
    }

    #[test]
    fn compose_substitutes_and_detects_vanishing_denominator() {
        let (f, t) = setup();
        let x = rvar(f, &t, "x");
        let y = rvar(f, &t, "y");
        // x -> 1/y in x + 1: (1 + y)/y
        let img = vec![Some(RatFunc::one(f, &t).div(&y).unwrap()), Some(y.clone())];
        let r = x.add(&RatFunc::one(f, &t)).compose(&img, f, &t).unwrap();
        assert_eq!(r, RatFunc::one(f, &t).add(&y).div(&y).unwrap());
        // 1/(x - 1) with x -> 1 is undefined
        let e = RatFunc::one(f, &t).div(&x.sub(&RatFunc::one(f, &t))).unwrap();
        let img2 = vec![Some(RatFunc::one(f, &t)), Some(y)];
        assert!(matches!(
            e.compose(&img2, f, &t),
            Err(AlgebraError::SubstitutionUndefined(_))
        ));
    }
}
