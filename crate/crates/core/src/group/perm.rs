//! Permutations of {1..n} in one-line notation, with cycle-notation I/O.
//!
//! The cycle text format is whitespace-free products of parenthesized cycles
//! over the digits 1-9, e.g. `(24)(35)`; `1` denotes the identity. That is
//! exactly how coset representative lists are written in the source, so the
//! lists are transcribed literally and parsed rather than hand-converted.

use std::fmt;

use crate::algebra::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm {
    /// images[i] = image of i+1, values in 1..=n.
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (1..=n as u8).collect() }
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self, AlgebraError> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i as usize > n || seen[i as usize] {
                return Err(AlgebraError::InvalidArgument(format!(
                    "not a permutation of 1..={n}: {images:?}"
                )));
            }
            seen[i as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Parse cycle notation over digits 1-9; `1` is the identity.
    pub fn from_cycles(n: usize, text: &str) -> Result<Self, AlgebraError> {
        let bad = |msg: &str| AlgebraError::InvalidArgument(format!("cycle text {text:?}: {msg}"));
        if n > 9 {
            return Err(bad("only degrees up to 9 are supported"));
        }
        let mut images: Vec<u8> = (1..=n as u8).collect();
        if text == "1" {
            return Ok(Perm { images });
        }
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        while pos < chars.len() {
            if chars[pos] != '(' {
                return Err(bad("expected ("));
            }
            pos += 1;
            let mut cycle: Vec<u8> = Vec::new();
            while pos < chars.len() && chars[pos] != ')' {
                let d = chars[pos].to_digit(10).ok_or_else(|| bad("expected digit"))? as u8;
                if d == 0 || d as usize > n {
                    return Err(bad("digit out of range"));
                }
                if cycle.contains(&d) {
                    return Err(bad("repeated point in cycle"));
                }
                cycle.push(d);
                pos += 1;
            }
            if pos == chars.len() {
                return Err(bad("unclosed cycle"));
            }
            pos += 1; // ')'
            if cycle.len() < 2 {
                return Err(bad("cycle too short"));
            }
            // Disjoint cycles commute; the paper's products are disjoint.
            for w in 0..cycle.len() {
                let from = cycle[w] as usize;
                let to = cycle[(w + 1) % cycle.len()];
                if images[from - 1] != from as u8 {
                    return Err(bad("cycles are not disjoint"));
                }
                images[from - 1] = to;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the point i (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize
    }

    pub fn one_line(&self) -> &[u8] {
        &self.images
    }

    /// Composition acting left: `(self * rhs)(i) = self(rhs(i))`.
    pub fn compose(&self, rhs: &Perm) -> Perm {
        assert_eq!(self.degree(), rhs.degree());
        Perm { images: (1..=self.degree()).map(|i| self.apply(rhs.apply(i)) as u8).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.degree()];
        for i in 1..=self.degree() {
            images[self.apply(i) - 1] = i as u8;
        }
        Perm { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Parity by inversion count: +1 even, -1 odd.
    pub fn sign(&self) -> i8 {
        let mut inv = 0usize;
        for i in 0..self.images.len() {
            for j in i + 1..self.images.len() {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Disjoint cycle decomposition, smallest moved point first.
    pub fn cycles(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cyc = vec![start as u8];
            seen[start] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur] = true;
                cyc.push(cur as u8);
                cur = self.apply(cur);
            }
            out.push(cyc);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "1");
        }
        for c in cycles {
            write!(f, "(")?;
            for d in c {
                write!(f, "{d}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signs_of_small_cycles() {
        // 3-cycle is even, transposition odd, 5-cycle even (4 transpositions).
        assert_eq!(Perm::from_cycles(3, "(123)").unwrap().sign(), 1);
        assert_eq!(Perm::from_cycles(2, "(12)").unwrap().sign(), -1);
        assert_eq!(Perm::from_cycles(5, "(12345)").unwrap().sign(), 1);
        let five = Perm::from_cycles(5, "(12345)").unwrap();
        let by_transpositions = ["(12)", "(23)", "(34)", "(45)"]
            .iter()
            .map(|t| Perm::from_cycles(5, t).unwrap())
            .reduce(|a, b| a.compose(&b))
            .unwrap();
        // (12)(23)(34)(45): 1->2, 2->3, 3->4, 4->5, 5->1
        assert_eq!(by_transpositions, five);
    }

    #[test]
    fn cycle_roundtrip_matches_one_line() {
        let p = Perm::from_cycles(5, "(124)(35)").unwrap();
        assert_eq!(p.one_line(), &[2, 4, 5, 1, 3]);
        assert_eq!(format!("{p}"), "(124)(35)");
        let q = Perm::from_cycles(5, &format!("{p}")).unwrap();
        assert_eq!(p, q);
        assert_eq!(format!("{}", Perm::identity(4)), "1");
        assert_eq!(Perm::from_cycles(5, "1").unwrap(), Perm::identity(5));
    }

    #[test]
    fn compose_applies_right_then_left() {
        let s = Perm::from_cycles(3, "(12)").unwrap();
        let t = Perm::from_cycles(3, "(23)").unwrap();
        let st = s.compose(&t);
        // (st)(3) = s(t(3)) = s(2) = 1, so st = (123)
        assert_eq!(st.apply(3), 1);
        assert_eq!(st, Perm::from_cycles(3, "(123)").unwrap());
        assert!(s.compose(&s).is_identity());
        assert_eq!(s.inverse(), s);
    }

    #[test]
    fn sign_is_a_homomorphism_exhaustively_for_n_le_4() {
        for n in 1..=4 {
            let all = super::super::coset::symmetric_group(n);
            for p in &all {
                for q in &all {
                    assert_eq!(p.compose(q).sign(), p.sign() * q.sign());
                }
            }
        }
    }

    #[test]
    fn malformed_cycle_texts_are_rejected() {
        assert!(Perm::from_cycles(5, "(12").is_err());
        assert!(Perm::from_cycles(5, "(1)").is_err());
        assert!(Perm::from_cycles(5, "(16)").is_err());
        assert!(Perm::from_cycles(5, "(12)(13)").is_err()); // not disjoint
        assert!(Perm::from_cycles(5, "x").is_err());
    }
}
