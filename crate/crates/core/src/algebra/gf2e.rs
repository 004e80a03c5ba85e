//! `F_{2^16}` as `F_2[T]` modulo an irreducible degree-16 polynomial.
//!
//! `F_2` itself is useless for Schwartz-Zippel specialization (two points),
//! so characteristic-2 identities are evaluated here instead. The modulus is
//! found by a deterministic search and certified irreducible by brute-force
//! trial division over all lower-degree polynomials, so the constant below is
//! self-checking rather than trusted.

use std::sync::OnceLock;

/// Bit i is the coefficient of T^i: x^16 + x^5 + x^3 + x + 1.
pub const GF2_16_MODULUS: u32 = 0x1_002B;

/// An element of F_{2^16} in the polynomial basis.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Gf2e(pub u16);

impl Gf2e {
    pub const ZERO: Gf2e = Gf2e(0);
    pub const ONE: Gf2e = Gf2e(1);

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, rhs: Gf2e) -> Gf2e {
        Gf2e(self.0 ^ rhs.0)
    }

    pub fn mul(self, rhs: Gf2e) -> Gf2e {
        let mut acc: u32 = 0;
        let mut a = self.0 as u32;
        let mut b = rhs.0 as u32;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if a & 0x1_0000 != 0 {
                a ^= GF2_16_MODULUS;
            }
        }
        Gf2e(acc as u16)
    }

    pub fn pow(self, mut e: u64) -> Gf2e {
        let mut acc = Gf2e::ONE;
        let mut base = self;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(base);
            }
            base = base.mul(base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Gf2e> {
        if self.is_zero() {
            None
        } else {
            // x^(2^16 - 2) = x^-1 in a field of order 2^16
            Some(self.pow((1 << 16) - 2))
        }
    }
}

// ---- polynomial-over-F2 helpers on bit masks (bit i = coeff of T^i) ----

fn poly_deg(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_deg(b);
    while a != 0 && poly_deg(a) >= db {
        a ^= b << (poly_deg(a) - db);
    }
    a
}

/// Brute-force irreducibility over F_2: no divisor of degree 1..=deg/2.
pub fn is_irreducible_gf2(p: u64) -> bool {
    let d = poly_deg(p);
    if d < 1 {
        return false;
    }
    for q_deg in 1..=(d / 2) {
        for low in 0..(1u64 << q_deg) {
            let q = (1u64 << q_deg) | low;
            if poly_rem(p, q) == 0 {
                return false;
            }
        }
    }
    true
}

/// The modulus actually used, verified irreducible once at first use.
pub fn checked_modulus() -> u32 {
    static CHECKED: OnceLock<u32> = OnceLock::new();
    *CHECKED.get_or_init(|| {
        assert!(
            is_irreducible_gf2(GF2_16_MODULUS as u64),
            "GF(2^16) modulus is not irreducible"
        );
        GF2_16_MODULUS
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_is_first_hit_of_deterministic_search() {
        // Search order: x^16 + low, low odd ascending (constant term must be 1).
        let mut first = None;
        for low in (1u64..256).step_by(2) {
            if is_irreducible_gf2((1 << 16) | low) {
                first = Some((1u64 << 16) | low);
                break;
            }
        }
        assert_eq!(first, Some(GF2_16_MODULUS as u64));
        assert_eq!(checked_modulus(), GF2_16_MODULUS);
    }

    #[test]
    fn reducible_polys_are_rejected() {
        // x^2 = x*x, x^2+1 = (x+1)^2
        assert!(!is_irreducible_gf2(0b100));
        assert!(!is_irreducible_gf2(0b101));
        // x^2+x+1 is the unique irreducible quadratic
        assert!(is_irreducible_gf2(0b111));
    }

    #[test]
    fn field_axioms_spot_checks() {
        let x = Gf2e(0x1234);
        let y = Gf2e(0xBEEF);
        let z = Gf2e(0x0F0F);
        assert_eq!(x.mul(y), y.mul(x));
        assert_eq!(x.mul(y.add(z)), x.mul(y).add(x.mul(z)));
        assert_eq!(x.add(x), Gf2e::ZERO);
        let xi = x.inv().unwrap();
        assert_eq!(x.mul(xi), Gf2e::ONE);
        // Frobenius: squaring is additive in char 2
        assert_eq!(x.add(y).mul(x.add(y)), x.mul(x).add(y.mul(y)));
    }

    #[test]
    fn fermat_in_the_extension() {
        let g = Gf2e(2); // the class of T
        assert_eq!(g.pow((1 << 16) - 1), Gf2e::ONE);
        for x in [Gf2e(3), Gf2e(0x1234), Gf2e(0xFFFF)] {
            assert_eq!(x.pow(1 << 16), x);
        }
    }
}
