//! Multivariate polynomial gcd: primitive pseudo-remainder sequences with
//! content extraction, recursing on the variable of lowest degree.
//!
//! Two supporting pieces keep fraction normalization cheap at this scale:
//!
//! * a sound "gcd is constant" certificate via univariate specialization
//!   over a large prime field (if the specialized gcd has degree 0 in every
//!   shared variable and the leading coefficients survive, the true gcd is
//!   constant — no probability involved in that direction);
//! * monomial-content stripping before anything else.
//!
//! Tables containing `alpha` are first mapped through the ring isomorphism
//! `K[x, a, alpha]/(alpha^2 - a) = K[x, alphatilde]` (exponent fusing), so
//! all divisibility reasoning happens in an honest polynomial ring.

use std::sync::Arc;

use num::{BigInt, BigRational, One, Zero};

use super::field::{inv_mod, mul_mod, Coef, DEFAULT_SPECIALIZE_PRIME};
use super::poly::{Exps, MultiPoly};
use super::vars::VarTable;

/// A greatest common divisor, normalized (monic over F_p; integer-primitive
/// with positive leading coefficient over Q). `gcd(0, q)` is normalized `q`.
pub fn gcd(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let (fp, fq, table) = fuse_pair(p, q);
    let g = gcd_free(&fp, &fq);
    normalize_unit(&unfuse(&g, table.as_ref(), p.vars()))
}

/// Exact division `p / d`, or `None` when `d` does not divide `p`.
pub fn exact_div(p: &MultiPoly, d: &MultiPoly) -> Option<MultiPoly> {
    if d.is_zero() {
        return None;
    }
    let (fp, fd, table) = fuse_pair(p, d);
    let q = exact_div_free(&fp, &fd)?;
    Some(unfuse(&q, table.as_ref(), p.vars()))
}

/// Sound fast path: `true` guarantees gcd(p, q) is a constant. `false` is
/// inconclusive. Works per shared variable by specializing all others at
/// random points of a large prime field.
pub fn gcd_certified_one(p: &MultiPoly, q: &MultiPoly, seed: u64) -> bool {
    let ch = p.field().characteristic();
    let modulus = if ch == 0 { DEFAULT_SPECIALIZE_PRIME } else { ch };
    if modulus < 1000 {
        // Too few points for reliable leading-coefficient survival.
        return false;
    }
    let (fp, fq, _table) = fuse_pair(p, q);
    let dp = fp.degrees();
    let dq = fq.degrees();
    let nvars = dp.len();
    let mut state = seed ^ 0x9e37_79b9_7f4a_7c15;
    let mut next = move || {
        // splitmix64
        state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    };
    'vars: for v in 0..nvars {
        if dp[v] == 0 || dq[v] == 0 {
            continue; // cannot appear in the gcd
        }
        'attempt: for _ in 0..6 {
            let point: Vec<u64> = (0..nvars).map(|_| 1 + next() % (modulus - 1)).collect();
            let up = match specialize_univariate(&fp, v, &point, modulus) {
                Some(u) => u,
                None => return false,
            };
            let uq = match specialize_univariate(&fq, v, &point, modulus) {
                Some(u) => u,
                None => return false,
            };
            // Leading coefficients must survive or the bound is invalid.
            if up.len() != dp[v] as usize + 1 || uq.len() != dq[v] as usize + 1 {
                continue 'attempt;
            }
            if univariate_gcd_degree(&up, &uq, modulus) == 0 {
                continue 'vars;
            }
            return false; // shared factor plausible; caller runs the full gcd
        }
        return false;
    }
    true
}

fn specialize_univariate(p: &MultiPoly, v: usize, point: &[u64], modulus: u64) -> Option<Vec<u64>> {
    let coeffs = p.univariate_in(v);
    let mut out = Vec::with_capacity(coeffs.len());
    for c in &coeffs {
        out.push(c.eval_mod(modulus, point)?);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn univariate_gcd_degree(a: &[u64], b: &[u64], p: u64) -> usize {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    while !b.is_empty() {
        // a mod b
        let db = b.len() - 1;
        let lb_inv = inv_mod(b[db], p);
        while a.len() > db {
            let la = a.len() - 1;
            let f = mul_mod(*a.last().unwrap(), lb_inv, p);
            if f != 0 {
                for i in 0..=db {
                    let sub = mul_mod(f, b[i], p);
                    let idx = la - db + i;
                    a[idx] = (a[idx] + p - sub) % p;
                }
            }
            while a.last() == Some(&0) {
                a.pop();
            }
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

// ---- alpha fusing ----

fn fuse_pair(p: &MultiPoly, q: &MultiPoly) -> (MultiPoly, MultiPoly, Option<Arc<VarTable>>) {
    match p.vars().alpha_index() {
        None => (p.clone(), q.clone(), None),
        Some(_) => {
            let free = p.vars().clone_without_alpha();
            (fuse(p, &free), fuse(q, &free), Some(free))
        }
    }
}

/// Move `a`-exponents into the alpha column: `a^j alpha^k -> alphatilde^(2j+k)`.
fn fuse(p: &MultiPoly, free: &Arc<VarTable>) -> MultiPoly {
    let ai = p.vars().alpha_index().unwrap();
    let pi = p.vars().param_index().unwrap();
    let terms = p.terms().map(|(e, c)| {
        let mut ne: Exps = e.clone();
        ne[ai] += 2 * ne[pi];
        ne[pi] = 0;
        (ne, c.clone())
    });
    MultiPoly::from_terms(p.field(), free, terms.collect::<Vec<_>>())
}

/// Inverse of [`fuse`]: `from_terms` on the alpha table folds
/// `alphatilde^(2j+k)` back to `a^j alpha^k`.
fn unfuse(p: &MultiPoly, fused_table: Option<&Arc<VarTable>>, target: &Arc<VarTable>) -> MultiPoly {
    if fused_table.is_none() {
        return p.clone();
    }
    MultiPoly::from_terms(p.field(), target, p.terms().map(|(e, c)| (e.clone(), c.clone())).collect::<Vec<_>>())
}

// ---- free-ring gcd ----

fn gcd_free(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return q.clone();
    }
    if q.is_zero() {
        return p.clone();
    }
    let field = p.field();
    let vars = p.vars();

    // Monomial content first.
    let mp = min_exps(p);
    let mq = min_exps(q);
    let common: Exps = mp.iter().zip(mq.iter()).map(|(&x, &y)| x.min(y)).collect();
    let p1 = div_mono(p, &mp);
    let q1 = div_mono(q, &mq);

    let _ = vars;
    let core = gcd_primitive_free(&p1, &q1);
    core.mul_term(&common, &field.one())
}

fn gcd_primitive_free(p: &MultiPoly, q: &MultiPoly) -> MultiPoly {
    let field = p.field();
    let vars = p.vars();
    if p.is_constant() || q.is_constant() {
        return MultiPoly::one(field, vars);
    }
    let dp = p.degrees();
    let dq = q.degrees();
    // Main variable: lowest max-degree among variables occurring in both.
    let main = (0..vars.len())
        .filter(|&v| dp[v] > 0 && dq[v] > 0)
        .min_by_key(|&v| dp[v].max(dq[v]));
    let main = match main {
        Some(v) => v,
        None => return MultiPoly::one(field, vars), // no shared variable
    };

    let up = p.univariate_in(main);
    let uq = q.univariate_in(main);
    let cont_p = gcd_many_free(&up);
    let cont_q = gcd_many_free(&uq);
    let pp_p: Vec<MultiPoly> = up.iter().map(|c| exact_div_free(c, &cont_p).expect("content divides")).collect();
    let pp_q: Vec<MultiPoly> = uq.iter().map(|c| exact_div_free(c, &cont_q).expect("content divides")).collect();

    let prs = primitive_prs(pp_p, pp_q);
    let cont_g = gcd_free(&cont_p, &cont_q);

    let g = MultiPoly::from_univariate(main, &prs, field, vars);
    // Make the PRS tail primitive in the main variable as well.
    let g_cont = gcd_many_free(&g.univariate_in(main));
    let g_pp = exact_div_free(&g, &g_cont).expect("content divides");
    g_pp.mul(&cont_g)
}

fn gcd_many_free(polys: &[MultiPoly]) -> MultiPoly {
    assert!(!polys.is_empty());
    let nonzero: Vec<&MultiPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    let field = polys[0].field();
    let vars = polys[0].vars();
    let mut acc: Option<MultiPoly> = None;
    // Smallest first makes the folds cheap.
    let mut sorted = nonzero;
    sorted.sort_by_key(|p| p.num_terms());
    for p in sorted {
        acc = Some(match acc {
            None => p.clone(),
            Some(g) => gcd_free(&g, p),
        });
        if acc.as_ref().is_some_and(|g| g.is_constant()) {
            return MultiPoly::one(field, vars);
        }
    }
    match acc {
        None => MultiPoly::zero(field, vars),
        Some(g) => normalize_unit(&g),
    }
}

/// Primitive PRS on primitive inputs; returns the last nonzero remainder as
/// ascending coefficients in `main`.
fn primitive_prs(a: Vec<MultiPoly>, b: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let (mut a, mut b) = (trim(a), trim(b));
    if udeg(&a) < udeg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.is_empty() {
            return a;
        }
        let r = pseudo_rem(&a, &b);
        let r = trim(r);
        if r.is_empty() {
            return b;
        }
        let cont = gcd_many_free(&r);
        let r: Vec<MultiPoly> = r
            .iter()
            .map(|c| exact_div_free(c, &cont).expect("content divides"))
            .collect();
        a = b;
        b = trim(r);
    }
}

fn udeg(v: &[MultiPoly]) -> usize {
    v.len().saturating_sub(1)
}

fn trim(mut v: Vec<MultiPoly>) -> Vec<MultiPoly> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Pseudo-remainder of `a` by `b` (coefficient arithmetic in the poly ring).
/// Numeric content is stripped after each elimination; the result is only
/// similar to the strict pseudo-remainder, which is all the primitive PRS
/// needs.
fn pseudo_rem(a: &[MultiPoly], b: &[MultiPoly]) -> Vec<MultiPoly> {
    let db = udeg(b);
    let lead_b = b[db].clone();
    let mut r: Vec<MultiPoly> = a.to_vec();
    loop {
        r = trim(r);
        if r.is_empty() || udeg(&r) < db {
            return r;
        }
        let dr = udeg(&r);
        let lead_r = r[dr].clone();
        // r := lead_b * r - lead_r * x^(dr-db) * b
        for c in r.iter_mut() {
            *c = c.mul(&lead_b);
        }
        for i in 0..=db {
            r[dr - db + i] = r[dr - db + i].sub(&lead_r.mul(&b[i]));
        }
        strip_numeric_content(&mut r);
    }
}

/// Divide all coefficients by the joint rational content (char 0 only;
/// residue fields have no integer growth to control).
fn strip_numeric_content(r: &mut [MultiPoly]) {
    let Some(first) = r.iter().find(|c| !c.is_zero()) else { return };
    if first.field().characteristic() > 0 {
        return;
    }
    let mut l = BigInt::one();
    for c in r.iter() {
        l = l.lcm(&c.denominator_lcm());
    }
    let ls = BigRational::from_integer(l);
    let mut content = BigInt::zero();
    let scaled: Vec<MultiPoly> = r.iter().map(|c| c.scale_big(&ls)).collect();
    for c in &scaled {
        content = content.gcd(&c.integer_content());
    }
    if content.is_zero() || content.is_one() {
        return;
    }
    let s = BigRational::new(BigInt::one(), content);
    for (dst, c) in r.iter_mut().zip(scaled) {
        *dst = c.scale_big(&s);
    }
}

/// Term-by-term exact division in a free polynomial ring.
fn exact_div_free(p: &MultiPoly, d: &MultiPoly) -> Option<MultiPoly> {
    if d.is_zero() {
        return None;
    }
    if let Some(c) = d.constant_value() {
        let inv = p.field().inv(c).ok()?;
        return Some(p.scale(&inv));
    }
    let field = p.field();
    let vars = p.vars();
    let (de, dc) = d.leading_term().map(|(e, c)| (e.clone(), c.clone()))?;
    let dc_inv = field.inv(&dc).ok()?;
    let mut rem = p.clone();
    let mut quot: Vec<(Exps, Coef)> = Vec::new();
    while !rem.is_zero() {
        let (re, rc) = rem.leading_term().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        if !de.iter().zip(re.iter()).all(|(&d, &r)| d <= r) {
            return None;
        }
        let te: Exps = re.iter().zip(de.iter()).map(|(&r, &d)| r - d).collect();
        let tc = field.mul(&rc, &dc_inv);
        rem = rem.sub(&d.mul_term(&te, &tc));
        quot.push((te, tc));
    }
    Some(MultiPoly::from_terms(field, vars, quot))
}

/// Per-variable minimum exponent (the monomial content).
pub fn min_exps(p: &MultiPoly) -> Exps {
    let mut m: Option<Exps> = None;
    for (e, _) in p.terms() {
        match &mut m {
            None => m = Some(e.clone()),
            Some(acc) => {
                for (a, &b) in acc.iter_mut().zip(e.iter()) {
                    if b < *a {
                        *a = b;
                    }
                }
            }
        }
    }
    m.unwrap_or_else(|| Exps::from_elem(0, p.vars().len()))
}

pub fn div_mono(p: &MultiPoly, m: &Exps) -> MultiPoly {
    if m.iter().all(|&e| e == 0) {
        return p.clone();
    }
    let terms: Vec<(Exps, Coef)> = p
        .terms()
        .map(|(e, c)| {
            let ne: Exps = e.iter().zip(m.iter()).map(|(&x, &y)| x - y).collect();
            (ne, c.clone())
        })
        .collect();
    MultiPoly::from_terms(p.field(), p.vars(), terms)
}

/// Canonical unit normalization: monic over F_p; over Q, integer
/// coefficients, content 1, positive leading coefficient.
pub fn normalize_unit(p: &MultiPoly) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    if p.field().characteristic() > 0 {
        let lc = p.leading_coef().unwrap().clone();
        let inv = p.field().inv(&lc).expect("nonzero leading coefficient");
        return p.scale(&inv);
    }
    let l = p.denominator_lcm();
    let scaled = p.scale_big(&BigRational::from_integer(l));
    let mut content = scaled.integer_content();
    if content.is_zero() {
        content = BigInt::one();
    }
    if !scaled.leading_coef_sign_positive() {
        content = -content;
    }
    scaled.scale_big(&BigRational::new(BigInt::one(), content))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::CoeffField;
    use crate::algebra::vars::VarTable;

    fn vp(f: CoeffField, t: &Arc<VarTable>, n: &str) -> MultiPoly {
        MultiPoly::var(f, t, n).unwrap()
    }

    #[test]
    fn shared_linear_factor() {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y"]).unwrap();
        let x = vp(f, &t, "x");
        let y = vp(f, &t, "y");
        // gcd(x^2 - y^2, x^2 + 2xy + y^2) = x + y
        let p = x.pow(2).sub(&y.pow(2));
        let q = x.add(&y).pow(2);
        assert_eq!(gcd(&p, &q), x.add(&y));
    }

    #[test]
    fn gcd_with_zero_is_normalized_argument() {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y"]).unwrap();
        let x = vp(f, &t, "x");
        let z = MultiPoly::zero(f, &t);
        let p = x.scale(&f.from_ratio(-3, 2).unwrap());
        assert_eq!(gcd(&p, &z), x);
        assert_eq!(gcd(&z, &p), x);
    }

    #[test]
    fn gcd_over_f3_matches_bruteforce_factor_check() {
        // gcd(x^3 - x, x^2 - 1) over F_3. Independent oracle: enumerate all
        // monic univariate polynomials of degree <= 2 over F_3 and take the
        // highest-degree common divisor.
        let f = CoeffField::prime(3).unwrap();
        let t = VarTable::new(&f, &["x"]).unwrap();
        let x = vp(f, &t, "x");
        let p = x.pow(3).sub(&x);
        let q = x.pow(2).sub(&MultiPoly::one(f, &t));

        let mut best: Option<MultiPoly> = None;
        for c2 in 0..3i64 {
            for c1 in 0..3i64 {
                for c0 in 0..3i64 {
                    for deg in [1u32, 2] {
                        // monic of that degree
                        let mut cand = match deg {
                            1 => x.add(&MultiPoly::from_i64(f, &t, c0)),
                            _ => x
                                .pow(2)
                                .add(&x.scale(&f.from_i64(c1)))
                                .add(&MultiPoly::from_i64(f, &t, c0)),
                        };
                        if deg == 1 && (c1 != 0 || c2 != 0) {
                            continue;
                        }
                        if deg == 2 && c2 != 0 {
                            continue;
                        }
                        cand = normalize_unit(&cand);
                        if exact_div(&p, &cand).is_some() && exact_div(&q, &cand).is_some() {
                            let better = best
                                .as_ref()
                                .map(|b| cand.total_degree() > b.total_degree())
                                .unwrap_or(true);
                            if better {
                                best = Some(cand);
                            }
                        }
                    }
                }
            }
        }
        let expect = best.expect("common factor exists");
        assert_eq!(expect, q); // x^2 - 1 divides x^3 - x = x(x-1)(x+1)
        assert_eq!(gcd(&p, &q), expect);
    }

    #[test]
    fn exact_division_detects_non_divisors() {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y"]).unwrap();
        let x = vp(f, &t, "x");
        let y = vp(f, &t, "y");
        let p = x.pow(2).sub(&y.pow(2));
        assert_eq!(exact_div(&p, &x.sub(&y)).unwrap(), x.add(&y));
        assert!(exact_div(&p, &x.add(&MultiPoly::one(f, &t))).is_none());
    }

    #[test]
    fn certificate_agrees_with_truth_on_coprime_and_common_factor() {
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y", "z"]).unwrap();
        let x = vp(f, &t, "x");
        let y = vp(f, &t, "y");
        let z = vp(f, &t, "z");
        let common = x.add(&y).add(&z);
        let p = common.mul(&x.pow(2).add(&y));
        let q = common.mul(&y.pow(3).sub(&z));
        // has a common factor: certificate must not certify 1
        assert!(!gcd_certified_one(&p, &q, 7));
        let p2 = x.pow(2).add(&y);
        let q2 = y.pow(3).sub(&z);
        assert!(gcd_certified_one(&p2, &q2, 7));
        assert_eq!(gcd(&p, &q), common);
    }

    #[test]
    fn gcd_in_alpha_quotient_ring() {
        // (a - x^2) = (alpha - x)(alpha + x); share the factor alpha + x.
        let f = CoeffField::rationals_with_a();
        let t = VarTable::with_alpha(&f, &["x"]).unwrap();
        let x = vp(f, &t, "x");
        let alpha = vp(f, &t, "alpha");
        let p = alpha.pow(2).sub(&x.pow(2)); // a - x^2 after reduction
        let q = alpha.add(&x).mul(&x.add(&MultiPoly::one(f, &t)));
        let g = gcd(&p, &q);
        assert_eq!(g, alpha.add(&x));
        assert!(exact_div(&p, &g).is_some());
    }

    #[test]
    fn random_products_recover_the_common_factor() {
        // gcd(g*u, g*v) = g for random small polys with gcd(u, v) = 1.
        let f = CoeffField::rationals();
        let t = VarTable::new(&f, &["x", "y"]).unwrap();
        let x = vp(f, &t, "x");
        let y = vp(f, &t, "y");
        let mut state = 42u64;
        let mut rnd = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for _ in 0..25 {
            let mut rand_poly = || {
                let mut p = MultiPoly::from_i64(f, &t, rnd());
                p = p.add(&x.scale(&f.from_i64(rnd())));
                p = p.add(&y.scale(&f.from_i64(rnd())));
                p = p.add(&x.mul(&y).scale(&f.from_i64(rnd())));
                p
            };
            let g = {
                let p = rand_poly();
                if p.is_zero() {
                    continue;
                }
                normalize_unit(&p)
            };
            let u = x.pow(2).add(&rand_poly());
            let v = y.pow(3).add(&rand_poly());
            if !gcd(&u, &v).is_constant() {
                continue;
            }
            let got = gcd(&g.mul(&u), &g.mul(&v));
            assert_eq!(got, normalize_unit(&g));
        }
    }
}
