//! Sparse multivariate polynomials with exact `i64` coefficients.
//!
//! Every generating function in this crate is a [`Poly`]. Terms live in a
//! `BTreeMap` keyed by exponent vectors, so iteration and serialization are
//! always in lexicographic exponent order and two equal polynomials have
//! byte-identical JSON.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector, one slot per declared variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn new(exponents: Vec<u16>) -> Self {
        Monomial(exponents)
    }

    pub fn constant(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, i64>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    vars: Vec<String>,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    e: Vec<u16>,
    c: i64,
}

fn var_list<S: AsRef<str>>(vars: &[S]) -> Vec<String> {
    vars.iter().map(|v| v.as_ref().to_string()).collect()
}

#[allow(clippy::should_implement_trait)]
impl Poly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        Poly {
            vars: var_list(vars),
            terms: BTreeMap::new(),
        }
    }

    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant<S: AsRef<str>>(vars: &[S], c: i64) -> Self {
        let mut p = Self::zero(vars);
        if c != 0 {
            p.terms.insert(Monomial::constant(p.vars.len()), c);
        }
        p
    }

    /// `c * prod vars[i]^exponents[i]`.
    pub fn monomial<S: AsRef<str>>(vars: &[S], exponents: &[u16], c: i64) -> Result<Self> {
        let mut p = Self::zero(vars);
        if exponents.len() != p.vars.len() {
            return Err(Error::Json(format!(
                "exponent vector of length {} for {} variables",
                exponents.len(),
                p.vars.len()
            )));
        }
        if c != 0 {
            p.terms.insert(Monomial(exponents.to_vec()), c);
        }
        Ok(p)
    }

    /// The polynomial consisting of the single variable `name`.
    pub fn var<S: AsRef<str>>(vars: &[S], name: &str) -> Result<Self> {
        let vars = var_list(vars);
        let idx = vars
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::VarMismatch(vars.clone(), vec![name.to_string()]))?;
        let mut e = vec![0; vars.len()];
        e[idx] = 1;
        Self::monomial(&vars, &e, 1)
    }

    /// Builds a polynomial from possibly repeated terms, summing coefficients
    /// and dropping zeros.
    pub fn from_terms<S, I>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Vec<u16>, i64)>,
    {
        let mut p = Self::zero(vars);
        for (e, c) in terms {
            if e.len() != p.vars.len() {
                return Err(Error::Json(format!(
                    "exponent vector of length {} for {} variables",
                    e.len(),
                    p.vars.len()
                )));
            }
            p.add_term(Monomial(e), c)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: i64) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().checked_add(c).ok_or(Error::Overflow)?;
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographic exponent) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, exponents: &[u16]) -> i64 {
        self.terms
            .get(&Monomial(exponents.to_vec()))
            .copied()
            .unwrap_or(0)
    }

    pub fn max_abs_coefficient(&self) -> u64 {
        self.terms
            .values()
            .map(|c| c.unsigned_abs())
            .max()
            .unwrap_or(0)
    }

    pub fn l1_norm(&self) -> u64 {
        self.terms.values().map(|c| c.unsigned_abs()).sum()
    }

    fn check_vars(&self, other: &Poly) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarMismatch(self.vars.clone(), other.vars.clone()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg()?)
    }

    pub fn neg(&self) -> Result<Poly> {
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| {
                c.checked_neg()
                    .map(|n| (m.clone(), n))
                    .ok_or(Error::Overflow)
            })
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(Poly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_vars(other)?;
        let mut out = Poly::zero(&self.vars);
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let c = ca.checked_mul(cb).ok_or(Error::Overflow)?;
                out.add_term(ma.mul(mb)?, c)?;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Poly> {
        Poly::constant(&self.vars, k).mul(self)
    }

    /// Left fold of [`Poly::mul`]; the empty product is `1`.
    pub fn product<'a, S, I>(vars: &[S], factors: I) -> Result<Poly>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = &'a Poly>,
    {
        factors
            .into_iter()
            .try_fold(Poly::one(vars), |acc, f| acc.mul(f))
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, point: &[i64]) -> Result<i64> {
        if point.len() != self.vars.len() {
            return Err(Error::VarMismatch(
                self.vars.clone(),
                vec![format!("<point of length {}>", point.len())],
            ));
        }
        let mut total: i64 = 0;
        for (m, &c) in &self.terms {
            let mut t = c;
            for (&x, &e) in point.iter().zip(&m.0) {
                let p = x.checked_pow(e as u32).ok_or(Error::Overflow)?;
                t = t.checked_mul(p).ok_or(Error::Overflow)?;
            }
            total = total.checked_add(t).ok_or(Error::Overflow)?;
        }
        Ok(total)
    }

    /// Renames variables, merging those sent to the same target (their
    /// exponents add). Unmapped variables keep their name. The new variable
    /// list is ordered by first appearance of each target.
    pub fn substitute_collapse(&self, mapping: &BTreeMap<String, String>) -> Result<Poly> {
        if let Some(unknown) = mapping.keys().find(|k| !self.vars.contains(k)) {
            return Err(Error::VarMismatch(self.vars.clone(), vec![unknown.clone()]));
        }
        let targets: Vec<&String> = self
            .vars
            .iter()
            .map(|v| mapping.get(v).unwrap_or(v))
            .collect();
        let mut new_vars: Vec<String> = Vec::new();
        for t in &targets {
            if !new_vars.contains(t) {
                new_vars.push((*t).clone());
            }
        }
        let slot: Vec<usize> = targets
            .iter()
            .map(|t| new_vars.iter().position(|v| v == *t).unwrap())
            .collect();
        let mut out = Poly::zero(&new_vars);
        for (m, &c) in &self.terms {
            let mut e = vec![0u16; new_vars.len()];
            for (i, &x) in m.0.iter().enumerate() {
                e[slot[i]] = e[slot[i]].checked_add(x).ok_or(Error::Overflow)?;
            }
            out.add_term(Monomial(e), c)?;
        }
        Ok(out)
    }

    /// Canonical JSON: `{"vars":[..],"terms":[{"e":[..],"c":..},..]}` with
    /// terms sorted lexicographically by exponent vector.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.repr()).expect("polynomial serialization cannot fail")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.repr()).expect("polynomial serialization cannot fail")
    }

    fn repr(&self) -> PolyRepr {
        PolyRepr {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, &c)| TermRepr { e: m.0.clone(), c })
                .collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Poly> {
        let repr: PolyRepr = serde_json::from_str(s)?;
        Self::from_repr(repr)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Poly> {
        let repr: PolyRepr = serde_json::from_value(v.clone())?;
        Self::from_repr(repr)
    }

    fn from_repr(repr: PolyRepr) -> Result<Poly> {
        let mut p = Poly::zero(&repr.vars);
        for t in repr.terms {
            if t.e.len() != p.vars.len() {
                return Err(Error::Json(format!(
                    "term {:?} does not match {} variables",
                    t.e,
                    p.vars.len()
                )));
            }
            let m = Monomial(t.e);
            if p.terms.contains_key(&m) {
                return Err(Error::Json(format!("duplicate term {:?}", m.0)));
            }
            p.add_term(m, t.c)?;
        }
        Ok(p)
    }

    /// Dense univariate coefficient list `[c_0, c_1, ..]`; `None` unless the
    /// polynomial has exactly one variable.
    pub fn univariate_coefficients(&self) -> Option<Vec<i64>> {
        if self.vars.len() != 1 {
            return None;
        }
        let deg = self
            .terms
            .keys()
            .map(|m| m.0[0] as usize)
            .max()
            .unwrap_or(0);
        let mut out = vec![0; deg + 1];
        for (m, &c) in &self.terms {
            out[m.0[0] as usize] = c;
        }
        Some(out)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> =
                m.0.iter()
                    .zip(&self.vars)
                    .filter(|(e, _)| **e > 0)
                    .map(|(&e, v)| {
                        if e == 1 {
                            v.clone()
                        } else {
                            format!("{v}^{e}")
                        }
                    })
                    .collect();
            let mag = c.unsigned_abs();
            if i == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
