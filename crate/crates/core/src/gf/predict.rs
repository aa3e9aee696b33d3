//! Closed-form products for the signed generating functions.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{CartanType, Family};

use super::StatProfile;

/// Which product to use for type `C`.
///
/// `Derived` specializes the four-variable type `B` identity at
/// `x1 = x2 = y = z = x`. `Printed` is
/// `(1 - x^ceil(n/2)) prod_{i=1}^{ceil(n/2)} (1 - x^{2i})^2`, kept for
/// comparison; it disagrees with brute force.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CForm {
    #[default]
    Derived,
    Printed,
}

/// `1 + c * m` for the monomial `m` with exponents `e`.
fn binomial(vars: &[&str], e: &[u16], c: i64) -> Poly {
    Poly::one(vars)
        .add(&Poly::monomial(vars, e, c).expect("exponent count matches"))
        .expect("same vars")
}

fn one_minus_x(k: usize) -> Poly {
    binomial(&["x"], &[k as u16], -1)
}

fn expand(vars: &[&str], factors: &[Poly]) -> Result<Poly> {
    Poly::product(vars, factors)
}

/// Factors of `prod_{i=2}^{n} (1 + (-1)^{i-1} x^floor(i/2))` in variable
/// `var`, the signed odd-length generating function of `S_n`.
fn type_a_factors(n: usize, var: &str) -> Vec<Poly> {
    (2..=n)
        .map(|i| binomial(&[var], &[(i / 2) as u16], if i % 2 == 0 { -1 } else { 1 }))
        .collect()
}

/// The signed odd-length generating function of `S_n`, in variable `var`.
pub fn type_a_gf(n: usize, var: &str) -> Poly {
    Poly::product(&[var], &type_a_factors(n, var)).expect("small product")
}

pub fn predicted_factors(ctype: CartanType, form: CForm) -> Result<Vec<Poly>> {
    let r = ctype.rank();
    let f = |ks: &[usize]| ks.iter().map(|&k| one_minus_x(k)).collect::<Vec<_>>();
    Ok(match ctype.family() {
        Family::A => type_a_factors(r + 1, "x"),
        Family::B => f(&(1..=r).collect::<Vec<_>>()),
        Family::C => {
            let n = r;
            let mut ks = Vec::new();
            match form {
                CForm::Derived if n.is_multiple_of(2) => {
                    ks.push(n / 2);
                    ks.extend((1..n / 2).map(|k| 2 * k));
                    ks.extend((1..=n / 2).map(|k| 2 * k));
                }
                CForm::Derived => {
                    ks.push(n.div_ceil(2));
                    for k in 1..=n / 2 {
                        ks.extend([2 * k, 2 * k]);
                    }
                }
                CForm::Printed => {
                    ks.push(n.div_ceil(2));
                    for k in 1..=n.div_ceil(2) {
                        ks.extend([2 * k, 2 * k]);
                    }
                }
            }
            f(&ks)
        }
        Family::D => {
            let mut v = type_a_factors(r, "x");
            v.extend(type_a_factors(r, "x"));
            v
        }
        Family::F => f(&[2, 2, 4, 4]),
        Family::E if r == 6 => f(&[2, 4, 6, 8]),
        Family::E if r == 7 => f(&[2, 3, 4, 5, 6, 7, 8]),
        _ => return Err(Error::NoPrediction(ctype)),
    })
}

/// The predicted signed odd-length generating function (type `C` uses
/// [`CForm::Derived`]).
pub fn predicted_gf(ctype: CartanType) -> Result<Poly> {
    predicted_gf_with(ctype, CForm::Derived)
}

pub fn predicted_gf_with(ctype: CartanType, form: CForm) -> Result<Poly> {
    expand(&["x"], &predicted_factors(ctype, form)?)
}

/// Product form such as `(1 - x^2)^2 (1 - x^4)^2`; constant factors are
/// dropped.
pub fn factored_display(ctype: CartanType, form: CForm) -> Result<String> {
    let factors = predicted_factors(ctype, form)?;
    let mut groups: Vec<(String, usize)> = Vec::new();
    for p in factors {
        if p.num_terms() < 2 {
            continue;
        }
        let s = p.to_string();
        match groups.iter_mut().find(|(g, _)| *g == s) {
            Some((_, k)) => *k += 1,
            None => groups.push((s, 1)),
        }
    }
    if groups.is_empty() {
        return Ok("1".into());
    }
    Ok(groups
        .iter()
        .map(|(s, k)| {
            if *k == 1 {
                format!("({s})")
            } else {
                format!("({s})^{k}")
            }
        })
        .collect::<Vec<_>>()
        .join(" "))
}

/// The multivariate identities over `B_n` and `D_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Four variables `(oneg, eneg, oinv, ensp)` over `B_n`, `n >= 1`.
    B4Var,
    /// `(oneg, oinv, onsp)` over `B_n`, `n >= 1`.
    BOoo,
    /// `(eneg, oinv, onsp)` over `B_n`, `n >= 1`.
    BEoo,
    /// `(oneg, eneg, oinv, onsp)` over `B_4`: a product that does not split
    /// into binomials.
    B4Nonfactor,
    /// `L_ooe` over `B_n`, `n >= 3`.
    UniOoe,
    /// `L_eoe` over `B_n`, `n >= 3`.
    UniEoe,
    /// `L_eoo` over `B_n`, `n >= 3`.
    UniEoo,
    /// `(oinv, onsp)` over `D_n`, `n >= 2`.
    DBivar,
    /// `(oinv, ensp)` over `D_n`, `n >= 2`.
    DOe,
    /// `L_oe` over `D_n`, `n >= 2`.
    DLoe,
}

impl TheoremId {
    pub const ALL: [TheoremId; 10] = [
        TheoremId::B4Var,
        TheoremId::BOoo,
        TheoremId::BEoo,
        TheoremId::B4Nonfactor,
        TheoremId::UniOoe,
        TheoremId::UniEoe,
        TheoremId::UniEoo,
        TheoremId::DBivar,
        TheoremId::DOe,
        TheoremId::DLoe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::B4Var => "B-4var",
            TheoremId::BOoo => "B-ooo",
            TheoremId::BEoo => "B-eoo",
            TheoremId::B4Nonfactor => "B4-nonfactor",
            TheoremId::UniOoe => "uni-ooe",
            TheoremId::UniEoe => "uni-eoe",
            TheoremId::UniEoo => "uni-eoo",
            TheoremId::DBivar => "D-bivar",
            TheoremId::DOe => "D-oe",
            TheoremId::DLoe => "D-loe",
        }
    }

    pub fn profile(self) -> StatProfile {
        match self {
            TheoremId::B4Var => StatProfile::B4Var,
            TheoremId::BOoo => StatProfile::BOoo,
            TheoremId::BEoo => StatProfile::BEoo,
            TheoremId::B4Nonfactor => StatProfile::BNonfactor,
            TheoremId::UniOoe => StatProfile::UniOoe,
            TheoremId::UniEoe => StatProfile::UniEoe,
            TheoremId::UniEoo => StatProfile::UniEoo,
            TheoremId::DBivar => StatProfile::DBivar,
            TheoremId::DOe => StatProfile::DOe,
            TheoremId::DLoe => StatProfile::DLoe,
        }
    }

    pub fn family(self) -> Family {
        match self {
            TheoremId::DBivar | TheoremId::DOe | TheoremId::DLoe => Family::D,
            _ => Family::B,
        }
    }

    /// Smallest and largest `n` the identity is stated for.
    pub fn range(self) -> (usize, Option<usize>) {
        match self {
            TheoremId::B4Var | TheoremId::BOoo | TheoremId::BEoo => (1, None),
            TheoremId::B4Nonfactor => (4, Some(4)),
            TheoremId::UniOoe | TheoremId::UniEoe | TheoremId::UniEoo => (3, None),
            TheoremId::DBivar | TheoremId::DOe | TheoremId::DLoe => (2, None),
        }
    }

    pub fn ctype(self, n: usize) -> Result<CartanType> {
        CartanType::new(self.family(), n)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownProfile(s.to_string()))
    }
}

/// Expanded right-hand side of identity `id` at rank `n`.
pub fn predicted_multivariate(id: TheoremId, n: usize) -> Result<Poly> {
    let (lo, hi) = id.range();
    if n < lo || hi.is_some_and(|h| n > h) {
        return Err(Error::OutOfStatedRange {
            theorem: id.name().into(),
            range: match hi {
                Some(h) if h == lo => format!("n = {lo}"),
                Some(h) => format!("{lo} <= n <= {h}"),
                None => format!("n >= {lo}"),
            },
            n,
        });
    }
    let vars = id.profile().vars();
    let m = |e: &[u16], c: i64| Poly::monomial(vars, e, c).expect("exponent count matches");
    let b = |e: &[u16], c: i64| binomial(vars, e, c);
    let even = n.is_multiple_of(2);
    let h = (n / 2) as u16;
    let factors: Vec<Poly> = match id {
        TheoremId::B4Var => {
            // vars x1, x2, y, z
            let mut f: Vec<Poly> = (1..n)
                .map(|i| {
                    b(
                        &[0, 0, i.div_ceil(2) as u16, 0],
                        if i % 2 == 0 { 1 } else { -1 },
                    )
                })
                .collect();
            if n >= 2 {
                f.extend((0..=(n - 2) / 2).map(|i| b(&[1, 1, 0, 2 * i as u16], -1)));
            }
            if !even {
                f.push(b(&[1, 0, 0, ((n - 1) / 2) as u16], -1));
            }
            f
        }
        TheoremId::BOoo | TheoremId::BEoo => {
            // vars x, y, z
            if id == TheoremId::BEoo && !even {
                return Ok(Poly::zero(vars));
            }
            let mut f = vec![b(&[1, 0, 0], -1)];
            for i in 1..=((n - 1) / 2) as u16 {
                f.push(b(&[1, 0, 2 * i], -1));
                f.push(b(&[0, 2 * i, 0], -1));
            }
            if even {
                f.push(if id == TheoremId::BOoo {
                    b(&[0, h, h], -1)
                } else {
                    m(&[0, 0, h], 1).sub(&m(&[0, h, 0], 1))?
                });
            }
            f
        }
        TheoremId::B4Nonfactor => {
            // (1-y^2)(1-x1 x2 z^2)(1 + x1x2y^2z^2 - x1x2z^2 - x2y^2z^2 + x1z^2 + x2y^2 - x1 - y^2)
            let last = Poly::from_terms(
                vars,
                [
                    (vec![0, 0, 0, 0], 1),
                    (vec![1, 1, 2, 2], 1),
                    (vec![1, 1, 0, 2], -1),
                    (vec![0, 1, 2, 2], -1),
                    (vec![1, 0, 0, 2], 1),
                    (vec![0, 1, 2, 0], 1),
                    (vec![1, 0, 0, 0], -1),
                    (vec![0, 0, 2, 0], -1),
                ],
            )?;
            vec![b(&[0, 0, 2, 0], -1), b(&[1, 1, 0, 2], -1), last]
        }
        TheoremId::UniOoe | TheoremId::UniEoe => {
            let top = if id == TheoremId::UniOoe {
                n.div_ceil(2)
            } else {
                n / 2
            };
            let mut f = vec![one_minus_x(top)];
            f.extend((1..n).map(one_minus_x));
            f
        }
        TheoremId::UniEoo | TheoremId::DOe | TheoremId::DLoe => return Ok(Poly::zero(vars)),
        TheoremId::DBivar => {
            let x = type_a_gf(n, "x");
            let y = type_a_gf(n, "y");
            let lift = |p: &Poly, slot: usize| {
                Poly::from_terms(
                    vars,
                    p.terms().map(|(e, c)| {
                        let mut v = vec![0u16; 2];
                        v[slot] = e.exponents()[0];
                        (v, c)
                    }),
                )
            };
            vec![lift(&x, 0)?, lift(&y, 1)?]
        }
    };
    expand(vars, &factors)
}
