//! Base coefficient fields: the rationals and prime fields `F_p` (p < 2^63),
//! each optionally carrying the transcendental parameter `a`.
//!
//! The parameter `a` itself is represented as an ordinary last-position
//! variable of the enclosing [`VarTable`](super::vars::VarTable); the field
//! descriptor only records that the symbol is reserved.

use std::fmt;

use num::bigint::Sign;
use num::{BigInt, BigRational, One, Zero};

use super::AlgebraError;

/// Fixed 62-bit prime used for Schwartz-Zippel specialization of
/// characteristic-0 identities: 2^62 - 57.
pub const DEFAULT_SPECIALIZE_PRIME: u64 = 4_611_686_018_427_387_847;

/// Descriptor of a base coefficient field.
///
/// `characteristic` is 0 (the rationals) or an odd/even prime p fitting a
/// 64-bit word; when positive, it doubles as the modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct CoeffField {
    characteristic: u64,
    has_a: bool,
}

impl CoeffField {
    /// The rationals, no parameter.
    pub fn rationals() -> Self {
        CoeffField { characteristic: 0, has_a: false }
    }

    /// The rationals with the transcendental parameter `a` adjoined.
    pub fn rationals_with_a() -> Self {
        CoeffField { characteristic: 0, has_a: true }
    }

    /// The prime field `F_p`. Fails if `p` is not a prime below 2^63.
    pub fn prime(p: u64) -> Result<Self, AlgebraError> {
        if p >= (1 << 63) || !is_prime_u64(p) {
            return Err(AlgebraError::InvalidField(format!(
                "{p} is not a prime fitting a 63-bit word"
            )));
        }
        Ok(CoeffField { characteristic: p, has_a: false })
    }

    /// `F_p(a)`: the prime field with the parameter `a` adjoined.
    pub fn prime_with_a(p: u64) -> Result<Self, AlgebraError> {
        let mut f = Self::prime(p)?;
        f.has_a = true;
        Ok(f)
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    pub fn has_parameter_a(&self) -> bool {
        self.has_a
    }

    pub fn is_char_zero(&self) -> bool {
        self.characteristic == 0
    }

    // ---- Coefficient constructors ----

    pub fn zero(&self) -> Coef {
        self.from_i64(0)
    }

    pub fn one(&self) -> Coef {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Coef {
        match self.characteristic {
            0 => Coef::Rat(BigRational::from_integer(BigInt::from(n))),
            p => Coef::Mod((n as i128).rem_euclid(p as i128) as u64),
        }
    }

    /// Exact rational `n/d`; reduced mod p in positive characteristic.
    pub fn from_ratio(&self, n: i64, d: i64) -> Result<Coef, AlgebraError> {
        if d == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        let num = self.from_i64(n);
        let den = self.from_i64(d);
        self.div(&num, &den)
    }

    // ---- Arithmetic ----

    pub fn add(&self, x: &Coef, y: &Coef) -> Coef {
        match (x, y) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a + b),
            (Coef::Mod(a), Coef::Mod(b)) => Coef::Mod(add_mod(*a, *b, self.characteristic)),
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn sub(&self, x: &Coef, y: &Coef) -> Coef {
        self.add(x, &self.neg(y))
    }

    pub fn neg(&self, x: &Coef) -> Coef {
        match x {
            Coef::Rat(a) => Coef::Rat(-a),
            Coef::Mod(a) => {
                let p = self.characteristic;
                Coef::Mod(if *a == 0 { 0 } else { p - a })
            }
        }
    }

    pub fn mul(&self, x: &Coef, y: &Coef) -> Coef {
        match (x, y) {
            (Coef::Rat(a), Coef::Rat(b)) => Coef::Rat(a * b),
            (Coef::Mod(a), Coef::Mod(b)) => Coef::Mod(mul_mod(*a, *b, self.characteristic)),
            _ => panic!("mixed coefficient kinds"),
        }
    }

    pub fn inv(&self, x: &Coef) -> Result<Coef, AlgebraError> {
        if x.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(match x {
            Coef::Rat(a) => Coef::Rat(a.recip()),
            Coef::Mod(a) => Coef::Mod(inv_mod(*a, self.characteristic)),
        })
    }

    pub fn div(&self, x: &Coef, y: &Coef) -> Result<Coef, AlgebraError> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow(&self, x: &Coef, e: u32) -> Coef {
        let mut acc = self.one();
        let mut base = x.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// An exact coefficient: an arbitrary-precision rational in characteristic 0,
/// a reduced residue in characteristic p.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Coef {
    Rat(BigRational),
    Mod(u64),
}

impl Coef {
    pub fn is_zero(&self) -> bool {
        match self {
            Coef::Rat(a) => a.is_zero(),
            Coef::Mod(a) => *a == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Coef::Rat(a) => a.is_one(),
            Coef::Mod(a) => *a == 1,
        }
    }

    /// Residue image of the coefficient mod `p`. For rationals this maps
    /// num * den^-1; `None` when the denominator vanishes mod p.
    pub fn to_mod(&self, p: u64) -> Option<u64> {
        match self {
            Coef::Mod(a) => Some(*a),
            Coef::Rat(r) => {
                let n = bigint_mod(r.numer(), p);
                let d = bigint_mod(r.denom(), p);
                if d == 0 {
                    return None;
                }
                Some(mul_mod(n, inv_mod(d, p), p))
            }
        }
    }
}

impl fmt::Display for Coef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coef::Rat(a) => write!(f, "{a}"),
            Coef::Mod(a) => write!(f, "{a}"),
        }
    }
}

fn bigint_mod(n: &BigInt, p: u64) -> u64 {
    let m = n % BigInt::from(p);
    let m = if m.sign() == Sign::Minus { m + BigInt::from(p) } else { m };
    let (_, digits) = m.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

// ---- u64 modular arithmetic (p < 2^63) ----

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse mod a prime via Fermat.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Square root mod a prime by exhaustive search; intended for small p only
/// (singular-point checks involving 1/sqrt(a)).
pub fn sqrt_mod_bruteforce(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    (0..p).find(|r| mul_mod(*r, *r, p) == a)
}

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for w in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(w, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
