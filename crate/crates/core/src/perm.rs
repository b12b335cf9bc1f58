//! Permutations of `{1..n}` stored as image tables.
//!
//! Points are 1-based in text and 0-based in memory. Products are read left
//! to right: `x * y` applies `x` first, so `i^(xy) = (i^x)^y`, conjugation is
//! `x^g = g⁻¹xg` and the commutator is `[x,y] = x⁻¹y⁻¹xy`.

use std::fmt;

use crate::arith::lcm;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from a 0-based image table.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            let i = i as usize;
            if i >= n || seen[i] {
                return Err(Error::NotBijection(n));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Unchecked constructor for tables produced by the crate's own algorithms.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 1-based images, as listed in the documentation
    /// (`[2,3,1,5,4]` is `(1 2 3)(4 5)`).
    pub fn from_one_based(images: &[u64]) -> Result<Self> {
        let mut v = Vec::with_capacity(images.len());
        for &i in images {
            if i == 0 || i as usize > images.len() {
                return Err(Error::PointOutOfRange {
                    point: i,
                    degree: images.len(),
                });
            }
            v.push((i - 1) as u32);
        }
        Self::from_images(v)
    }

    /// Builds the permutation with the given 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            for (k, &pt) in cycle.iter().enumerate() {
                if pt >= degree {
                    return Err(Error::PointOutOfRange {
                        point: pt as u64 + 1,
                        degree,
                    });
                }
                if seen[pt] {
                    return Err(Error::RepeatedPoint(pt as u64 + 1));
                }
                seen[pt] = true;
                images[pt] = cycle[(k + 1) % cycle.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    ///
    /// Cycles are parenthesised groups of whitespace-separated base-10
    /// points, optionally separated by whitespace. Points must be distinct
    /// and lie in `1..=degree`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut saw_cycle = false;
        let err = |position: usize, reason: &str| Error::Parse {
            position,
            reason: reason.to_string(),
        };
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos == bytes.len() {
                break;
            }
            if bytes[pos] != b'(' {
                return Err(err(pos, "expected `(`"));
            }
            pos += 1;
            let mut cycle = Vec::new();
            loop {
                while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                    pos += 1;
                }
                if pos == bytes.len() {
                    return Err(err(pos, "unterminated cycle"));
                }
                if bytes[pos] == b')' {
                    pos += 1;
                    break;
                }
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if start == pos {
                    return Err(err(pos, "expected a point or `)`"));
                }
                if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() && bytes[pos] != b')' {
                    return Err(err(pos, "points must be separated by whitespace"));
                }
                let point: u64 = text[start..pos]
                    .parse()
                    .map_err(|_| err(start, "point does not fit in 64 bits"))?;
                if point == 0 || point as usize > degree {
                    return Err(Error::PointOutOfRange { point, degree });
                }
                cycle.push(point as usize - 1);
            }
            saw_cycle = true;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
        }
        if !saw_cycle {
            return Err(err(0, "empty input; write `()` for the identity"));
        }
        Self::from_cycles(degree, &cycles)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Product `self * other` (apply `self`, then `other`). Degrees must agree.
    #[inline]
    pub fn mul(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&i| other.images[i as usize])
                .collect(),
        }
    }

    pub fn checked_mul(&self, other: &Permutation) -> Result<Permutation> {
        check_degrees(self, other)?;
        Ok(self.mul(other))
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exp: i64) -> Permutation {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            sq = sq.mul(&sq);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ * self * g`.
    pub fn conjugate(&self, g: &Permutation) -> Permutation {
        // (g⁻¹ x g) maps i^g to (i^x)^g
        let mut images = vec![0u32; self.images.len()];
        for (i, &xi) in self.images.iter().enumerate() {
            images[g.images[i] as usize] = g.images[xi as usize];
        }
        Permutation { images }
    }

    /// Cycles of length at least two, each starting at its least point, sorted
    /// by that point (0-based).
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.image(start);
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.image(j);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Least `k ≥ 1` with `self^k = 1`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut ord = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                len += 1;
                j = self.image(j);
            }
            ord = lcm(ord, len);
        }
        ord
    }

    /// First point (0-based) moved by `self`.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|(i, &j)| *i as u32 != j)
            .map(|(i, _)| i)
    }
}

pub(crate) fn check_degrees(x: &Permutation, y: &Permutation) -> Result<()> {
    if x.degree() != y.degree() {
        return Err(Error::DegreeMismatch {
            left: x.degree(),
            right: y.degree(),
        });
    }
    Ok(())
}

/// `[x, y] = x⁻¹y⁻¹xy`.
pub fn commutator(x: &Permutation, y: &Permutation) -> Result<Permutation> {
    check_degrees(x, y)?;
    Ok(commutator_unchecked(x, y))
}

#[inline]
pub(crate) fn commutator_unchecked(x: &Permutation, y: &Permutation) -> Permutation {
    x.inverse().mul(&x.conjugate(y))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, pt) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", pt + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[deg {}]", self, self.degree())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    #[test]
    fn parse_identity_and_cycles() {
        assert!(p("()", 4).is_identity());
        assert_eq!(p("()", 4).degree(), 4);
        let x = p("(1 2 3)(4 5)", 5);
        assert_eq!(x, Permutation::from_one_based(&[2, 3, 1, 5, 4]).unwrap());
        let six = p("(1 2 3 4 5 6)", 6);
        assert_eq!(six.order(), 6);
        assert_eq!(six.to_string(), "(1 2 3 4 5 6)");
        assert_eq!(p(" (3) ( 1  2 ) ", 3).to_string(), "(1 2)");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(1 2", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse("1 2", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            Permutation::parse("(1,2)", 3),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(Permutation::parse("", 3), Err(Error::Parse { .. })));
        assert_eq!(
            Permutation::parse("(1 4)", 3),
            Err(Error::PointOutOfRange {
                point: 4,
                degree: 3
            })
        );
        assert_eq!(
            Permutation::parse("(1 2)(2 3)", 3),
            Err(Error::RepeatedPoint(2))
        );
        assert!(Permutation::parse("(0 1)", 3).is_err());
    }

    #[test]
    fn commutator_by_hand() {
        let x = p("(1 2)", 3);
        let y = p("(1 3)", 3);
        // x⁻¹y⁻¹xy = (1 2)(1 3)(1 2)(1 3), multiplied left to right: 1->3, 3->2, 2->1
        assert_eq!(commutator(&x, &y).unwrap(), p("(1 3 2)", 3));
        assert!(commutator(&x, &x).unwrap().is_identity());
        assert!(commutator(&x, &p("()", 4)).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(p("()", 3).order(), 1);
        assert_eq!(p("(1 2 3)(4 5)", 5).order(), 6);
        assert_eq!(p("(1 4 3)(2 5 6)", 6).order(), 3);
    }

    #[test]
    fn exceptional_cycle_arithmetic() {
        // x = (1 2 3 4 5 6), x^phi = (1 4 2)(5 6), y = (4 5 6):
        // x⁻¹ y⁻¹ x^phi y = (1 4 3)(2 5 6), of order 3.
        let x = p("(1 2 3 4 5 6)", 6);
        let x_phi = p("(1 4 2)(5 6)", 6);
        let y = p("(4 5 6)", 6);
        let c = x.inverse().mul(&y.inverse()).mul(&x_phi).mul(&y);
        assert_eq!(c, p("(1 4 3)(2 5 6)", 6));
        assert_eq!(c.order(), 3);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn display_parse_roundtrip(x in arb_perm(9)) {
            prop_assert_eq!(Permutation::parse(&x.to_string(), 9).unwrap(), x);
        }

        #[test]
        fn group_laws(x in arb_perm(7), y in arb_perm(7), z in arb_perm(7)) {
            prop_assert_eq!(x.mul(&y).mul(&z), x.mul(&y.mul(&z)));
            prop_assert!(x.mul(&x.inverse()).is_identity());
            prop_assert_eq!(x.conjugate(&y), y.inverse().mul(&x).mul(&y));
            prop_assert!(x.pow(x.order() as i64).is_identity());
            prop_assert_eq!(x.pow(-3), x.inverse().pow(3));
        }
    }
}
