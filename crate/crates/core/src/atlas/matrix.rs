use crate::error::{Error, Result};

use super::field::{Fe, Field};

/// Square matrix over a [`Field`], row-major. Vectors are rows and act by
/// `v ↦ vM`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<Fe>,
}

impl Matrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        Matrix { n, entries }
    }

    pub fn from_rows(rows: &[&[Fe]]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            entries: rows.iter().flat_map(|r| r.iter().copied()).collect(),
        }
    }

    pub fn diagonal(d: &[Fe]) -> Self {
        let mut m = Matrix::identity(d.len());
        for (i, &x) in d.iter().enumerate() {
            m.set(i, i, x);
        }
        m
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Fe {
        self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Fe) {
        self.entries[i * self.n + j] = x;
    }

    pub fn rows(&self) -> Vec<Vec<Fe>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        let n = self.n;
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = &mut out[i * n + j];
                    *t = f.add(*t, f.mul(a, other.get(k, j)));
                }
            }
        }
        Matrix { n, entries: out }
    }

    pub fn transpose(&self) -> Matrix {
        let mut m = self.clone();
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn map(&self, g: impl Fn(Fe) -> Fe) -> Matrix {
        Matrix {
            n: self.n,
            entries: self.entries.iter().map(|&x| g(x)).collect(),
        }
    }

    /// Entrywise Frobenius `x ↦ x^p`.
    pub fn frobenius(&self, f: &Field) -> Matrix {
        self.map(|x| f.frobenius(x))
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self, f: &Field) -> Result<Matrix> {
        let n = self.n;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0).ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let s = f.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, f.mul(s, a.get(col, j)));
                inv.set(col, j, f.mul(s, inv.get(col, j)));
            }
            for r in 0..n {
                let c = a.get(r, col);
                if r == col || c == 0 {
                    continue;
                }
                for j in 0..n {
                    a.set(r, j, f.sub(a.get(r, j), f.mul(c, a.get(col, j))));
                    inv.set(r, j, f.sub(inv.get(r, j), f.mul(c, inv.get(col, j))));
                }
            }
        }
        Ok(inv)
    }

    pub fn det(&self, f: &Field) -> Fe {
        let n = self.n;
        let mut a = self.clone();
        let mut det = 1;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a.get(r, col) != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                }
                det = f.neg(det);
            }
            let d = a.get(col, col);
            det = f.mul(det, d);
            let s = f.inv(d);
            for r in col + 1..n {
                let c = f.mul(a.get(r, col), s);
                if c == 0 {
                    continue;
                }
                for j in col..n {
                    a.set(r, j, f.sub(a.get(r, j), f.mul(c, a.get(col, j))));
                }
            }
        }
        det
    }

    /// Inverse transpose `M^{-T}`.
    pub fn inverse_transpose(&self, f: &Field) -> Result<Matrix> {
        Ok(self.inverse(f)?.transpose())
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.n)
    }

    pub fn order(&self, f: &Field) -> Result<u64> {
        self.inverse(f)?;
        let mut x = self.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = x.mul(f, self);
            k += 1;
        }
        Ok(k)
    }

    /// Row vector times matrix.
    pub fn apply(&self, f: &Field, v: &[Fe]) -> Vec<Fe> {
        let n = self.n;
        let mut out = vec![0; n];
        for (i, &x) in v.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(x, self.get(i, j)));
            }
        }
        out
    }

    /// Group commutator `A⁻¹B⁻¹AB`.
    pub fn commutator(&self, f: &Field, other: &Matrix) -> Result<Matrix> {
        Ok(self
            .inverse(f)?
            .mul(f, &other.inverse(f)?)
            .mul(f, self)
            .mul(f, other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_det_over_f4() {
        let f = Field::new(4).unwrap();
        let a = f.generator();
        let a2 = f.mul(a, a);
        let m = Matrix::from_rows(&[&[1, 0, 0], &[0, a, 1], &[0, 0, a2]]);
        let inv = m.inverse(&f).unwrap();
        assert!(m.mul(&f, &inv).is_identity());
        assert_eq!(m.det(&f), 1);
        assert_eq!(inv, Matrix::from_rows(&[&[1, 0, 0], &[0, a2, 1], &[0, 0, a]]));
        let s = Matrix::from_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(s.inverse(&f).unwrap_err(), Error::SingularMatrix);
        assert_eq!(s.det(&f), 0);
    }

    #[test]
    fn det_is_multiplicative() {
        let f = Field::new(9).unwrap();
        let w = f.primitive();
        let a = Matrix::from_rows(&[&[w, 1, 0], &[2, 0, w], &[1, 1, 1]]);
        let b = Matrix::from_rows(&[&[1, w, w], &[0, 2, 1], &[w, 0, 1]]);
        assert_eq!(a.mul(&f, &b).det(&f), f.mul(a.det(&f), b.det(&f)));
        let v = [1, w, 2];
        assert_eq!(a.mul(&f, &b).apply(&f, &v), b.apply(&f, &a.apply(&f, &v)));
    }
}
