//! Finite fields `F_q` by lookup tables.
//!
//! An element of `F_{p^k}` is the integer `c₀ + c₁p + … + c_{k-1}p^{k-1}` for
//! the residue `c₀ + c₁x + …` modulo the fixed polynomial of [`modulus`].
//! In `F₄` this gives `0, 1, a = 2, a² = a + 1 = 3`.

use crate::arith::factorize;
use crate::error::{Error, Result};

pub type Fe = u16;

/// Largest supported field.
pub const MAX_FIELD_ORDER: usize = 256;

/// Fixed irreducible polynomial for `F_{p^k}`, coefficients from `x⁰`
/// upwards (monic). Prime fields use `x`.
///
/// | q  | polynomial      |
/// |----|-----------------|
/// | 4  | x² + x + 1      |
/// | 8  | x³ + x + 1      |
/// | 9  | x² + 1          |
/// | 16 | x⁴ + x + 1      |
/// | 25 | x² + 2          |
/// | 27 | x³ + 2x + 1     |
/// | 32 | x⁵ + x² + 1     |
/// | 49 | x² + 1          |
/// | 64 | x⁶ + x + 1      |
/// | 81 | x⁴ + x + 2      |
/// | 121| x² + 1          |
/// | 125| x³ + x + 1      |
/// | 128| x⁷ + x + 1      |
/// | 169| x² + 2          |
pub fn modulus(p: usize, k: usize) -> Option<&'static [usize]> {
    Some(match (p, k) {
        (_, 1) => &[0, 1],
        (2, 2) => &[1, 1, 1],
        (2, 3) => &[1, 1, 0, 1],
        (3, 2) => &[1, 0, 1],
        (2, 4) => &[1, 1, 0, 0, 1],
        (5, 2) => &[2, 0, 1],
        (3, 3) => &[1, 2, 0, 1],
        (2, 5) => &[1, 0, 1, 0, 0, 1],
        (7, 2) => &[1, 0, 1],
        (2, 6) => &[1, 1, 0, 0, 0, 0, 1],
        (3, 4) => &[2, 1, 0, 0, 1],
        (11, 2) => &[1, 0, 1],
        (5, 3) => &[1, 1, 0, 1],
        (2, 7) => &[1, 1, 0, 0, 0, 0, 0, 1],
        (13, 2) => &[2, 0, 1],
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub struct Field {
    q: usize,
    p: usize,
    k: usize,
    add: Vec<Fe>,
    mul: Vec<Fe>,
    neg: Vec<Fe>,
    inv: Vec<Fe>,
    primitive: Fe,
}

impl Field {
    pub fn new(q: usize) -> Result<Self> {
        let f = factorize(q as u128);
        let &[(p, k)] = f.as_slice() else {
            return Err(Error::BadParameter(format!("{q} is not a prime power")));
        };
        let (p, k) = (p as usize, k as usize);
        if q > MAX_FIELD_ORDER {
            return Err(Error::BadParameter(format!("field order {q} unsupported")));
        }
        let m = modulus(p, k).ok_or_else(|| Error::BadParameter(format!("no polynomial for F_{q}")))?;
        let digits = |mut e: usize| -> Vec<usize> {
            let mut d = vec![0; k];
            for c in d.iter_mut() {
                *c = e % p;
                e /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0usize, |acc, &c| acc * p + c);
        let mut add = vec![0; q * q];
        let mut mul = vec![0; q * q];
        for a in 0..q {
            let da = digits(a);
            for b in 0..q {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = encode(&s) as Fe;
                let mut prod = vec![0usize; 2 * k];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (i, mc) in m.iter().enumerate().take(k) {
                            let t = &mut prod[deg - k + i];
                            *t = (*t + (p - c) * mc) % p;
                        }
                        prod[deg] = 0;
                    }
                }
                mul[a * q + b] = encode(&prod[..k]) as Fe;
            }
        }
        let mut neg = vec![0; q];
        let mut inv = vec![0; q];
        for a in 0..q {
            for b in 0..q {
                if add[a * q + b] == 0 {
                    neg[a] = b as Fe;
                }
                if mul[a * q + b] == 1 {
                    inv[a] = b as Fe;
                }
            }
        }
        let mut field = Field {
            q,
            p,
            k,
            add,
            mul,
            neg,
            inv,
            primitive: 1,
        };
        field.primitive = (1..q as Fe)
            .find(|&g| field.mult_order(g) == q - 1)
            .expect("multiplicative group is cyclic");
        Ok(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        0..self.q as Fe
    }

    /// The least generator of the multiplicative group.
    pub fn primitive(&self) -> Fe {
        self.primitive
    }

    /// The class of `x` in an extension field (encoded as `p`); the primitive
    /// element in a prime field.
    pub fn generator(&self) -> Fe {
        if self.k == 1 {
            self.primitive
        } else {
            self.p as Fe
        }
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        self.add[a as usize * self.q + b as usize]
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        self.add(a, self.neg(b))
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.neg[a as usize]
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        self.mul[a as usize * self.q + b as usize]
    }

    /// Inverse; `inv(0)` is `0`.
    pub fn inv(&self, a: Fe) -> Fe {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: Fe, e: i64) -> Fe {
        let base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 1;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }

    /// `x ↦ x^p`.
    pub fn frobenius(&self, a: Fe) -> Fe {
        self.pow(a, self.p as i64)
    }

    pub fn mult_order(&self, a: Fe) -> usize {
        if a == 0 {
            return 0;
        }
        let mut x = a;
        let mut n = 1;
        while x != 1 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_square(&self, a: Fe) -> bool {
        a == 0 || self.elements().any(|x| self.mul(x, x) == a)
    }

    /// The element `n·1`.
    pub fn from_int(&self, n: i64) -> Fe {
        n.rem_euclid(self.p as i64) as Fe
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_relations() {
        let f = Field::new(4).unwrap();
        let a = f.generator();
        let a2 = f.mul(a, a);
        assert_eq!(a, 2);
        assert_eq!(a2, 3);
        assert_eq!(f.mul(a, a2), 1);
        assert_eq!(f.add(a, a2), 1);
        assert_eq!(f.frobenius(a), a2);
        assert_eq!(f.primitive(), a);
    }

    #[test]
    fn axioms_hold() {
        for q in [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169] {
            let f = Field::new(q).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), 0);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1, "q={q}");
                }
                for b in f.elements().step_by(3) {
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(5) {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c)),
                            "q={q}"
                        );
                        assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
                    }
                }
            }
            assert_eq!(f.mult_order(f.primitive()), q - 1);
            // Frobenius is additive and multiplicative
            let s = f.primitive();
            assert_eq!(f.frobenius(f.mul(s, s)), f.mul(f.frobenius(s), f.frobenius(s)));
        }
    }

    #[test]
    fn bad_orders() {
        assert!(Field::new(6).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(512).is_err());
    }
}
