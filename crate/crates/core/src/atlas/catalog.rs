//! Named parametric constructions.

use std::fmt;

use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

use super::exceptional::{m10, pgammal2_9, pgl2_9, psigmal2_9};
use super::field::Field;
use super::linear::{agl, agl1, asl, gl_on_vectors, pgl2, psl2, psl3_4, sl2_regular, sz8};
use super::psl34::Psl34Setting;
use super::small::{alt, cyclic, dihedral, direct_product, elem_abelian, extraspecial, sym};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum AtlasParam {
    Int(i64),
    /// `+` is `true`.
    Sign(bool),
    Id(AtlasId),
}

impl fmt::Display for AtlasParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtlasParam::Int(n) => write!(f, "{n}"),
            AtlasParam::Sign(true) => f.write_str("+"),
            AtlasParam::Sign(false) => f.write_str("-"),
            AtlasParam::Id(id) => write!(f, "{id}"),
        }
    }
}

/// A catalog name with parameters, written `name(p1,p2,…)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AtlasId {
    pub name: String,
    pub params: Vec<AtlasParam>,
}

impl fmt::Display for AtlasId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)?;
        if !self.params.is_empty() {
            f.write_str("(")?;
            for (i, p) in self.params.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl AtlasId {
    pub fn new(name: &str, params: Vec<AtlasParam>) -> Self {
        AtlasId {
            name: name.to_string(),
            params,
        }
    }

    pub fn plain(name: &str) -> Self {
        Self::new(name, Vec::new())
    }

    pub fn with_ints(name: &str, params: &[i64]) -> Self {
        Self::new(name, params.iter().map(|&n| AtlasParam::Int(n)).collect())
    }

    /// Parses `psl2(7)`, `extraspecial(3,+)`, `direct_product(sym(3),q8)`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut parser = IdParser {
            s: text.as_bytes(),
            pos: 0,
        };
        let id = parser.id()?;
        parser.skip_ws();
        if parser.pos != parser.s.len() {
            return Err(parser.err("trailing input"));
        }
        Ok(id)
    }

    fn int(&self, i: usize) -> Result<i64> {
        match self.params.get(i) {
            Some(AtlasParam::Int(n)) => Ok(*n),
            _ => Err(Error::BadParameter(format!("{self}: parameter {} must be an integer", i + 1))),
        }
    }

    fn usize_in(&self, i: usize, lo: usize, hi: usize) -> Result<usize> {
        let n = self.int(i)?;
        if n < lo as i64 || n > hi as i64 {
            return Err(Error::BadParameter(format!("{self}: parameter {} outside {lo}..={hi}", i + 1)));
        }
        Ok(n as usize)
    }

    fn sign(&self, i: usize) -> Result<bool> {
        match self.params.get(i) {
            Some(AtlasParam::Sign(s)) => Ok(*s),
            Some(AtlasParam::Int(1)) => Ok(true),
            Some(AtlasParam::Int(-1)) => Ok(false),
            _ => Err(Error::BadParameter(format!("{self}: parameter {} must be + or -", i + 1))),
        }
    }

    fn sub_id(&self, i: usize) -> Result<&AtlasId> {
        match self.params.get(i) {
            Some(AtlasParam::Id(id)) => Ok(id),
            _ => Err(Error::BadParameter(format!("{self}: parameter {} must be an atlas id", i + 1))),
        }
    }

    fn arity(&self, allowed: &[usize]) -> Result<()> {
        if allowed.contains(&self.params.len()) {
            Ok(())
        } else {
            Err(Error::BadParameter(format!("{self}: wrong number of parameters")))
        }
    }

    fn prime_power(&self, i: usize, hi: usize) -> Result<usize> {
        let q = self.usize_in(i, 2, hi)?;
        Field::new(q).map_err(|_| Error::BadParameter(format!("{self}: {q} is not a supported prime power")))?;
        Ok(q)
    }

    fn prime(&self, i: usize, hi: usize) -> Result<usize> {
        let p = self.usize_in(i, 2, hi)?;
        if !crate::arith::is_prime(p as u64) {
            return Err(Error::BadParameter(format!("{self}: {p} is not prime")));
        }
        Ok(p)
    }
}

struct IdParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl IdParser<'_> {
    fn err(&self, reason: &str) -> Error {
        Error::Spec(format!("atlas id at byte {}: {reason}", self.pos))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn id(&mut self) -> Result<AtlasId> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        if start == self.pos || !self.s[start].is_ascii_alphabetic() {
            return Err(self.err("expected a name"));
        }
        let name = std::str::from_utf8(&self.s[start..self.pos]).unwrap().to_ascii_lowercase();
        let mut params = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                params.push(self.param()?);
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(self.err("expected , or )")),
                }
            }
        }
        Ok(AtlasId { name, params })
    }

    fn param(&mut self) -> Result<AtlasParam> {
        match self.peek() {
            Some(b'+') => {
                self.pos += 1;
                Ok(AtlasParam::Sign(true))
            }
            Some(b'-') if !self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) => {
                self.pos += 1;
                Ok(AtlasParam::Sign(false))
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let start = self.pos;
                self.pos += 1;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let t = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
                t.parse().map(AtlasParam::Int).map_err(|_| self.err("bad integer"))
            }
            Some(_) => Ok(AtlasParam::Id(self.id()?)),
            None => Err(self.err("unexpected end")),
        }
    }
}

/// One line of `atlas list`.
pub struct CatalogEntry {
    pub signature: &'static str,
    pub description: &'static str,
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { signature: "cyclic(n)", description: "C_n on n points" },
    CatalogEntry { signature: "elem_abelian(p,k)", description: "C_p^k as k disjoint p-cycles" },
    CatalogEntry { signature: "dihedral(n)", description: "dihedral group of order n" },
    CatalogEntry { signature: "q8", description: "quaternion group, regular representation" },
    CatalogEntry { signature: "sym(n)", description: "symmetric group" },
    CatalogEntry { signature: "alt(n)", description: "alternating group" },
    CatalogEntry { signature: "s4", description: "sym(4)" },
    CatalogEntry { signature: "extraspecial(p,+|-[,r])", description: "p^(1+2r), regular representation" },
    CatalogEntry { signature: "sl2_3", description: "SL(2,3), regular representation" },
    CatalogEntry { signature: "sl2_5", description: "SL(2,5), regular representation" },
    CatalogEntry { signature: "sl2_9", description: "SL(2,9), regular representation" },
    CatalogEntry { signature: "sl2(q)", description: "SL(2,q), regular representation, q <= 11" },
    CatalogEntry { signature: "agl1(q)", description: "affine maps x -> ax+b on q points" },
    CatalogEntry { signature: "asl2_4", description: "F_4^2 x| SL(2,4) on 16 points" },
    CatalogEntry { signature: "agl(n,q)", description: "affine general linear group on q^n points" },
    CatalogEntry { signature: "asl(n,q)", description: "affine special linear group on q^n points" },
    CatalogEntry { signature: "agl2_3", description: "agl(2,3)" },
    CatalogEntry { signature: "gl2_3", description: "GL(2,3) on the 8 nonzero vectors" },
    CatalogEntry { signature: "psl2(q)", description: "PSL(2,q) on q+1 points, q <= 17" },
    CatalogEntry { signature: "pgl2(q)", description: "PGL(2,q) on q+1 points, q <= 17" },
    CatalogEntry { signature: "psl3_4", description: "PSL(3,4) on the 21 points of PG(2,4)" },
    CatalogEntry { signature: "m10", description: "PSL(2,9)<sigma.diag(w,1)> on 10 points" },
    CatalogEntry { signature: "pgl2_9", description: "PGL(2,9) on 10 points" },
    CatalogEntry { signature: "psigmal2_9", description: "PSigmaL(2,9) = S6 on 10 points" },
    CatalogEntry { signature: "pgammal2_9", description: "PGammaL(2,9) on 10 points" },
    CatalogEntry { signature: "s6_in_pgammal29", description: "the PSigmaL(2,9) copy of S6" },
    CatalogEntry { signature: "psl34_g1", description: "PSL(3,4)<delta,phi> on 42 points and lines" },
    CatalogEntry { signature: "psl34_g2", description: "PSL(3,4)<delta,beta> on 42 points and lines" },
    CatalogEntry { signature: "psl34_phi_ext", description: "PSL(3,4)<phi> on 42 points and lines" },
    CatalogEntry { signature: "sz8", description: "Sz(8) on the 65-point ovoid" },
    CatalogEntry { signature: "direct_product(id,id)", description: "direct product on disjoint points" },
];

/// A constructed group with its catalog order.
#[derive(Clone, Debug)]
pub struct AtlasGroup {
    pub id: AtlasId,
    pub group: FiniteGroup,
    pub expected_order: u128,
    pub notes: &'static str,
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

fn gl_order(n: usize, q: usize) -> u128 {
    let qn = (q as u128).pow(n as u32);
    (0..n).map(|i| qn - (q as u128).pow(i as u32)).product()
}

fn sl2_order(q: usize) -> u128 {
    let q = q as u128;
    q * (q * q - 1)
}

/// Order of the catalog group, from its formula.
pub fn expected_order(id: &AtlasId) -> Result<u128> {
    Ok(match id.name.as_str() {
        "cyclic" => id.usize_in(0, 1, 100_000)? as u128,
        "elem_abelian" => (id.prime(0, 97)? as u128).pow(id.usize_in(1, 1, 16)? as u32),
        "dihedral" => id.usize_in(0, 2, 100_000)? as u128,
        "q8" => 8,
        "sym" => factorial(id.usize_in(0, 1, 12)?),
        "s4" => 24,
        "alt" => {
            let n = id.usize_in(0, 1, 12)?;
            if n < 2 {
                1
            } else {
                factorial(n) / 2
            }
        }
        "extraspecial" => {
            let p = id.prime(0, 7)? as u128;
            let r = if id.params.len() > 2 { id.usize_in(2, 1, 3)? } else { 1 };
            p.pow(1 + 2 * r as u32)
        }
        "sl2_3" => 24,
        "sl2_5" => 120,
        "sl2_9" => 720,
        "sl2" => sl2_order(id.prime_power(0, 11)?),
        "agl1" => {
            let q = id.prime_power(0, 128)? as u128;
            q * (q - 1)
        }
        "asl2_4" => 960,
        "agl" | "asl" => {
            let n = id.usize_in(0, 1, 3)?;
            let q = id.prime_power(1, 9)?;
            let qn = (q as u128).pow(n as u32);
            let gl = gl_order(n, q);
            qn * if id.name == "agl" { gl } else { gl / (q as u128 - 1) }
        }
        "agl2_3" => 432,
        "gl2_3" => 48,
        "psl2" => {
            let q = id.prime_power(0, 17)?;
            sl2_order(q) / gcd(2, q as u128 - 1)
        }
        "pgl2" => sl2_order(id.prime_power(0, 17)?),
        "psl3_4" => 20160,
        "m10" | "pgl2_9" | "psigmal2_9" | "s6_in_pgammal29" => 720,
        "pgammal2_9" => 1440,
        "psl34_g1" | "psl34_g2" => 120960,
        "psl34_phi_ext" => 40320,
        "sz8" => 29120,
        "direct_product" => {
            id.arity(&[2])?;
            expected_order(id.sub_id(0)?)? * expected_order(id.sub_id(1)?)?
        }
        _ => return Err(Error::UnknownAtlasId(id.to_string())),
    })
}

fn construct(id: &AtlasId) -> Result<(FiniteGroup, &'static str)> {
    let g = match id.name.as_str() {
        "cyclic" => (cyclic(id.usize_in(0, 1, 100_000)?)?, "an n-cycle"),
        "elem_abelian" => (elem_abelian(id.prime(0, 97)?, id.usize_in(1, 1, 16)?)?, "disjoint p-cycles"),
        "dihedral" => (dihedral(id.usize_in(0, 2, 100_000)?)?, "symmetries of the n/2-gon"),
        "q8" => (extraspecial(2, false, 1)?, "regular representation"),
        "sym" => (sym(id.usize_in(0, 1, 12)?)?, "natural action"),
        "s4" => (sym(4)?, "natural action"),
        "alt" => (alt(id.usize_in(0, 1, 12)?)?, "natural action, generated by (1 2 i)"),
        "extraspecial" => {
            id.arity(&[2, 3])?;
            let p = id.prime(0, 7)?;
            let r = if id.params.len() > 2 { id.usize_in(2, 1, 3)? } else { 1 };
            (extraspecial(p, id.sign(1)?, r)?, "regular representation of a cocycle extension")
        }
        "sl2_3" => (sl2_regular(3)?, "regular representation"),
        "sl2_5" => (sl2_regular(5)?, "regular representation"),
        "sl2_9" => (sl2_regular(9)?, "regular representation"),
        "sl2" => (sl2_regular(id.prime_power(0, 11)?)?, "regular representation"),
        "agl1" => (agl1(id.prime_power(0, 128)?)?, "affine maps of F_q"),
        "asl2_4" => (asl(2, 4)?, "affine maps of F_4^2 with SL(2,4) linear part"),
        "agl" => (agl(id.usize_in(0, 1, 3)?, id.prime_power(1, 9)?)?, "affine maps"),
        "asl" => (asl(id.usize_in(0, 1, 3)?, id.prime_power(1, 9)?)?, "affine maps"),
        "agl2_3" => (agl(2, 3)?, "affine maps of F_3^2"),
        "gl2_3" => (gl_on_vectors(2, 3)?, "action on nonzero vectors"),
        "psl2" => (psl2(id.prime_power(0, 17)?)?, "projective line"),
        "pgl2" => (pgl2(id.prime_power(0, 17)?)?, "projective line"),
        "psl3_4" => (psl3_4()?, "points of PG(2,4)"),
        "m10" => (m10()?, "projective line over F_9"),
        "pgl2_9" => (pgl2_9()?, "projective line over F_9"),
        "psigmal2_9" | "s6_in_pgammal29" => (psigmal2_9()?, "projective line over F_9"),
        "pgammal2_9" => (pgammal2_9()?, "projective line over F_9"),
        "psl34_g1" => (Psl34Setting::new()?.g1()?, "points and lines of PG(2,4)"),
        "psl34_g2" => (Psl34Setting::new()?.g2()?, "points and lines of PG(2,4)"),
        "psl34_phi_ext" => (Psl34Setting::new()?.phi_ext()?, "points and lines of PG(2,4)"),
        "sz8" => (sz8()?, "ovoid in PG(3,8)"),
        "direct_product" => {
            id.arity(&[2])?;
            let a = build(id.sub_id(0)?)?;
            let b = build(id.sub_id(1)?)?;
            (direct_product(&a.group, &b.group), "disjoint union of actions")
        }
        _ => return Err(Error::UnknownAtlasId(id.to_string())),
    };
    Ok(g)
}

/// Builds a catalog group and checks its order against the catalog.
pub fn build(id: &AtlasId) -> Result<AtlasGroup> {
    let expected = expected_order(id)?;
    let (group, notes) = construct(id)?;
    if group.order() != expected {
        return Err(Error::Defect(format!(
            "{id}: constructed order {} differs from catalog order {expected}",
            group.order()
        )));
    }
    Ok(AtlasGroup {
        id: id.clone(),
        group,
        expected_order: expected,
        notes,
    })
}

/// `build` from text.
pub fn build_named(text: &str) -> Result<FiniteGroup> {
    Ok(build(&AtlasId::parse(text)?)?.group)
}
