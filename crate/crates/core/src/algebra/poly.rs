//! Sparse multivariate polynomials with exact coefficients.
//!
//! Terms are kept sorted in descending graded-lex order (by the variable
//! order of the table), with no zero coefficients stored. When the table has
//! the element `alpha`, every stored `alpha` exponent is <= 1: each product
//! folds `alpha^2` into the parameter `a` on the spot, so the representation
//! is arithmetic in the quotient by `alpha^2 - a`.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use smallvec::SmallVec;

use super::field::{add_mod, mul_mod, Coef, CoeffField};
use super::gf2e::Gf2e;
use super::vars::{same_table, VarTable};
use super::AlgebraError;

/// Exponent vector, aligned to the variable table.
pub type Exps = SmallVec<[u16; 8]>;

/// Descending graded-lex comparison key.
pub fn cmp_grlex(x: &Exps, y: &Exps) -> Ordering {
    let dx: u32 = x.iter().map(|&e| e as u32).sum();
    let dy: u32 = y.iter().map(|&e| e as u32).sum();
    dx.cmp(&dy).then_with(|| x.cmp(y))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    field: CoeffField,
    vars: Arc<VarTable>,
    /// Sorted descending by `cmp_grlex`; no zero coefficients.
    terms: Vec<(Exps, Coef)>,
}

impl MultiPoly {
    // ---- Constructors ----

    pub fn zero(field: CoeffField, vars: &Arc<VarTable>) -> Self {
        MultiPoly { field, vars: vars.clone(), terms: Vec::new() }
    }

    pub fn constant(field: CoeffField, vars: &Arc<VarTable>, c: Coef) -> Self {
        let mut p = Self::zero(field, vars);
        if !c.is_zero() {
            p.terms.push((Self::unit_exps(vars), c));
        }
        p
    }

    pub fn from_i64(field: CoeffField, vars: &Arc<VarTable>, n: i64) -> Self {
        Self::constant(field, vars, field.from_i64(n))
    }

    pub fn one(field: CoeffField, vars: &Arc<VarTable>) -> Self {
        Self::from_i64(field, vars, 1)
    }

    pub fn var(field: CoeffField, vars: &Arc<VarTable>, name: &str) -> Result<Self, AlgebraError> {
        let idx = vars
            .index_of(name)
            .ok_or_else(|| AlgebraError::UnknownVariable(name.to_string()))?;
        let mut e = Self::unit_exps(vars);
        e[idx] = 1;
        Ok(MultiPoly { field, vars: vars.clone(), terms: vec![(e, field.one())] })
    }

    /// Build from raw terms; combines duplicates, drops zeros, alpha-reduces.
    pub fn from_terms(
        field: CoeffField,
        vars: &Arc<VarTable>,
        terms: impl IntoIterator<Item = (Exps, Coef)>,
    ) -> Self {
        let mut map: HashMap<Exps, Coef> = HashMap::new();
        for (mut e, c) in terms {
            if c.is_zero() {
                continue;
            }
            reduce_alpha_exps(vars, &mut e);
            match map.entry(e) {
                std::collections::hash_map::Entry::Occupied(mut o) => {
                    let s = field.add(o.get(), &c);
                    if s.is_zero() {
                        o.remove();
                    } else {
                        *o.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(v) => {
                    v.insert(c);
                }
            }
        }
        let mut terms: Vec<(Exps, Coef)> = map.into_iter().collect();
        terms.sort_unstable_by(|a, b| cmp_grlex(&b.0, &a.0));
        MultiPoly { field, vars: vars.clone(), terms }
    }

    fn unit_exps(vars: &Arc<VarTable>) -> Exps {
        SmallVec::from_elem(0u16, vars.len())
    }

    // ---- Accessors ----

    pub fn field(&self) -> CoeffField {
        self.field
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Coef)> {
        self.terms.iter().map(|(e, c)| (e, c))
    }

    /// Leading (greatest) term under graded-lex, if nonzero.
    pub fn leading_term(&self) -> Option<(&Exps, &Coef)> {
        self.terms.first().map(|(e, c)| (e, c))
    }

    pub fn leading_coef(&self) -> Option<&Coef> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn constant_value(&self) -> Option<&Coef> {
        match self.terms.len() {
            0 => None,
            1 if self.terms[0].0.iter().all(|&e| e == 0) => Some(&self.terms[0].1),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || self.constant_value().is_some()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.iter().map(|&x| x as u32).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.iter().map(|(e, _)| e[var]).max().unwrap_or(0)
    }

    /// Max exponent per variable.
    pub fn degrees(&self) -> Vec<u16> {
        let mut d = vec![0u16; self.vars.len()];
        for (e, _) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if x > d[i] {
                    d[i] = x;
                }
            }
        }
        d
    }

    pub fn occurs(&self, var: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[var] > 0)
    }

    fn check_ctx(&self, rhs: &Self) -> Result<(), AlgebraError> {
        if self.field != rhs.field || !same_table(&self.vars, &rhs.vars) {
            return Err(AlgebraError::ContextMismatch);
        }
        Ok(())
    }

    // ---- Ring operations ----

    pub fn add(&self, rhs: &Self) -> Self {
        self.check_ctx(rhs).expect("polynomial context mismatch");
        let mut out: Vec<(Exps, Coef)> = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            match cmp_grlex(&self.terms[i].0, &rhs.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(rhs.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let s = self.field.add(&self.terms[i].1, &rhs.terms[j].1);
                    if !s.is_zero() {
                        out.push((self.terms[i].0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        MultiPoly { field: self.field, vars: self.vars.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), self.field.neg(c))).collect();
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Coef) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, &self.vars);
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, x)| (e.clone(), self.field.mul(x, c)))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, exps: &Exps, c: &Coef) -> Self {
        if c.is_zero() {
            return Self::zero(self.field, &self.vars);
        }
        let mut terms: Vec<(Exps, Coef)> = Vec::with_capacity(self.terms.len());
        let mut needs_sort = false;
        for (e, x) in &self.terms {
            let mut ne: Exps = e.iter().zip(exps.iter()).map(|(&p, &q)| p + q).collect();
            let had_alpha = reduce_alpha_exps(&self.vars, &mut ne);
            needs_sort |= had_alpha;
            let nc = self.field.mul(x, c);
            if !nc.is_zero() {
                terms.push((ne, nc));
            }
        }
        if needs_sort {
            return Self::from_terms(self.field, &self.vars, terms);
        }
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.check_ctx(rhs).expect("polynomial context mismatch");
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.field, &self.vars);
        }
        if rhs.terms.len() == 1 {
            return self.mul_term(&rhs.terms[0].0, &rhs.terms[0].1);
        }
        if self.terms.len() == 1 {
            return rhs.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut map: HashMap<Exps, Coef> =
            HashMap::with_capacity(small.terms.len() * large.terms.len() / 2 + 1);
        for (es, cs) in &small.terms {
            for (el, cl) in &large.terms {
                let mut e: Exps = es.iter().zip(el.iter()).map(|(&p, &q)| p + q).collect();
                reduce_alpha_exps(&self.vars, &mut e);
                let c = self.field.mul(cs, cl);
                match map.entry(e) {
                    std::collections::hash_map::Entry::Occupied(mut o) => {
                        let s = self.field.add(o.get(), &c);
                        if s.is_zero() {
                            o.remove();
                        } else {
                            *o.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(v) => {
                        if !c.is_zero() {
                            v.insert(c);
                        }
                    }
                }
            }
        }
        let mut terms: Vec<(Exps, Coef)> = map.into_iter().collect();
        terms.sort_unstable_by(|a, b| cmp_grlex(&b.0, &a.0));
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.field, &self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Formal partial derivative.
    pub fn derivative(&self, var: usize) -> Self {
        let terms = self.terms.iter().filter_map(|(e, c)| {
            if e[var] == 0 {
                return None;
            }
            let mut ne = e.clone();
            ne[var] -= 1;
            let nc = self.field.mul(c, &self.field.from_i64(e[var] as i64));
            if nc.is_zero() {
                None
            } else {
                Some((ne, nc))
            }
        });
        // Dropping an exponent never reorders graded-lex within one variable,
        // but term collisions cannot happen either; order is preserved.
        let collected: Vec<_> = terms.collect();
        let mut out = MultiPoly { field: self.field, vars: self.vars.clone(), terms: collected };
        out.terms.sort_unstable_by(|a, b| cmp_grlex(&b.0, &a.0));
        out
    }

    /// Rewrite every `alpha^(2k+r)` as `a^k alpha^r`. Stored polynomials are
    /// already reduced; this is the public, idempotent entry point.
    pub fn reduce_alpha(&self) -> Self {
        Self::from_terms(self.field, &self.vars, self.terms.iter().cloned())
    }

    // ---- Univariate views (for gcd) ----

    /// Coefficients of `self` as a univariate polynomial in `var`, ascending
    /// degree; each coefficient has `var`-exponent zero.
    pub fn univariate_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var) as usize;
        let mut coeffs: Vec<Vec<(Exps, Coef)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut ne = e.clone();
            ne[var] = 0;
            coeffs[k].push((ne, c.clone()));
        }
        coeffs
            .into_iter()
            .map(|ts| {
                let mut ts = ts;
                ts.sort_unstable_by(|a, b| cmp_grlex(&b.0, &a.0));
                MultiPoly { field: self.field, vars: self.vars.clone(), terms: ts }
            })
            .collect()
    }

    pub fn from_univariate(var: usize, coeffs: &[MultiPoly], field: CoeffField, vars: &Arc<VarTable>) -> Self {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (e, x) in &c.terms {
                let mut ne = e.clone();
                ne[var] += k as u16;
                terms.push((ne, x.clone()));
            }
        }
        Self::from_terms(field, vars, terms)
    }

    // ---- Evaluation ----

    /// Evaluate at a point of the same coefficient field.
    pub fn eval_coef(&self, point: &[Coef]) -> Coef {
        assert_eq!(point.len(), self.vars.len());
        let mut acc = self.field.zero();
        let tables = power_tables(&self.degrees(), point, |x, y| self.field.mul(x, y), self.field.one());
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = self.field.mul(&t, &tables[i][k as usize]);
                }
            }
            acc = self.field.add(&acc, &t);
        }
        acc
    }

    /// Evaluate mod p, mapping rational coefficients through residues.
    /// `None` if some coefficient denominator vanishes mod p.
    pub fn eval_mod(&self, p: u64, point: &[u64]) -> Option<u64> {
        assert_eq!(point.len(), self.vars.len());
        let tables = power_tables(&self.degrees(), point, |x, y| mul_mod(*x, *y, p), 1u64 % p);
        let mut acc = 0u64;
        for (e, c) in &self.terms {
            let mut t = c.to_mod(p)?;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = mul_mod(t, tables[i][k as usize], p);
                }
            }
            acc = add_mod(acc, t, p);
        }
        Some(acc)
    }

    /// Evaluate a characteristic-2 polynomial in `F_{2^16}`.
    pub fn eval_gf2e(&self, point: &[Gf2e]) -> Gf2e {
        assert_eq!(self.field.characteristic(), 2);
        assert_eq!(point.len(), self.vars.len());
        let tables = power_tables(&self.degrees(), point, |x, y| x.mul(*y), Gf2e::ONE);
        let mut acc = Gf2e::ZERO;
        for (e, c) in &self.terms {
            let mut t = match c {
                Coef::Mod(1) => Gf2e::ONE,
                Coef::Mod(0) => continue,
                _ => unreachable!("char-2 coefficients are 0 or 1"),
            };
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(tables[i][k as usize]);
                }
            }
            acc = acc.add(t);
        }
        acc
    }

    // ---- Integer scaling support (char 0 canonical form) ----

    /// Least common multiple of the coefficient denominators (char 0 only).
    pub fn denominator_lcm(&self) -> BigInt {
        let mut l = BigInt::one();
        for (_, c) in &self.terms {
            if let Coef::Rat(r) = c {
                l = l.lcm(r.denom());
            }
        }
        l
    }

    /// Gcd of the integer numerators, assuming all denominators are 1.
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            if let Coef::Rat(r) = c {
                debug_assert!(r.denom().is_one());
                g = g.gcd(r.numer());
            }
        }
        g
    }

    pub fn scale_big(&self, s: &BigRational) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| match c {
                Coef::Rat(r) => (e.clone(), Coef::Rat(r * s)),
                Coef::Mod(_) => unreachable!("scale_big is char-0 only"),
            })
            .collect();
        MultiPoly { field: self.field, vars: self.vars.clone(), terms }
    }

    pub fn leading_coef_sign_positive(&self) -> bool {
        match self.leading_coef() {
            Some(Coef::Rat(r)) => r.numer().is_positive(),
            Some(Coef::Mod(_)) => true,
            None => true,
        }
    }
}

/// Fold `alpha^2 -> a` inside one exponent vector. Returns true if changed.
fn reduce_alpha_exps(vars: &Arc<VarTable>, e: &mut Exps) -> bool {
    if let Some(ai) = vars.alpha_index() {
        if e[ai] > 1 {
            let pi = vars.param_index().expect("alpha implies parameter a");
            e[pi] += e[ai] / 2;
            e[ai] %= 2;
            return true;
        }
    }
    false
}

fn power_tables<T: Clone>(degs: &[u16], point: &[T], mul: impl Fn(&T, &T) -> T, one: T) -> Vec<Vec<T>> {
    degs.iter()
        .zip(point.iter())
        .map(|(&d, x)| {
            let mut t = Vec::with_capacity(d as usize + 1);
            t.push(one.clone());
            for k in 1..=d as usize {
                let prev = t[k - 1].clone();
                t.push(mul(&prev, x));
            }
            t
        })
        .collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        self.vars.name(v).to_string()
                    } else {
                        format!("{}^{}", self.vars.name(v), k)
                    }
                })
                .collect();
            let (sign, mag) = coef_sign_mag(c);
            if i == 0 {
                if sign {
                    write!(f, "-")?;
                }
            } else if sign {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == "1" {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

fn coef_sign_mag(c: &Coef) -> (bool, String) {
    match c {
        Coef::Rat(r) => {
            if r.numer().is_negative() {
                (true, format!("{}", -r))
            } else {
                (false, format!("{r}"))
            }
        }
        Coef::Mod(m) => (false, format!("{m}")),
    }
}
