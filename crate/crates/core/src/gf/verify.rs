//! Brute-force checks of the closed forms and restriction identities.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::{build_root_system, CartanType, Family};
use crate::weyl::{conjugate_simple_system, transport, CosetChain};

use super::predict::{predicted_gf_with, predicted_multivariate, CForm, TheoremId};
use super::{length_odd_length_gf, GfRequest, Restriction, SignMode, StatProfile};

#[derive(Debug, Clone, PartialEq)]
pub enum Check {
    /// Odd-length generating function against its product formula.
    OddLength { ctype: CartanType, form: CForm },
    /// A multivariate identity at rank `n`.
    Theorem { id: TheoremId, n: usize },
    /// The profile summed over a subset equals the sum over the group.
    Restriction {
        ctype: CartanType,
        profile: StatProfile,
        restriction: Restriction,
    },
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Check::OddLength {
                ctype,
                form: CForm::Derived,
            } => write!(f, "odd-length {ctype}"),
            Check::OddLength { ctype, .. } => write!(f, "odd-length {ctype} (literal C form)"),
            Check::Theorem { id, n } => write!(f, "{id} n={n}"),
            Check::Restriction {
                ctype,
                profile,
                restriction,
            } => write!(f, "{profile} {ctype} full = {restriction}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub label: String,
    pub pass: bool,
    pub computed: Poly,
    pub expected: Poly,
    /// `computed - expected`.
    pub diff: Poly,
}

impl VerifyReport {
    fn new(label: String, computed: Poly, expected: Poly) -> Result<Self> {
        let diff = computed.sub(&expected)?;
        Ok(VerifyReport {
            label,
            pass: diff.is_zero(),
            computed,
            expected,
            diff,
        })
    }

    pub fn nonzero_diff_terms(&self) -> usize {
        self.diff.num_terms()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pass {
            write!(f, "PASS  {}", self.label)
        } else {
            write!(
                f,
                "FAIL  {}  ({} differing terms; computed - expected = {})",
                self.label,
                self.diff.num_terms(),
                self.diff
            )
        }
    }
}

pub fn verify(check: &Check) -> Result<VerifyReport> {
    let label = check.to_string();
    match *check {
        Check::OddLength { ctype, form } => {
            let computed = GfRequest::new(ctype, StatProfile::OddLength).run()?.poly;
            VerifyReport::new(label, computed, predicted_gf_with(ctype, form)?)
        }
        Check::Theorem { id, n } => {
            let expected = predicted_multivariate(id, n)?;
            let computed = GfRequest::new(id.ctype(n)?, id.profile()).run()?.poly;
            VerifyReport::new(label, computed, expected)
        }
        Check::Restriction {
            ctype,
            profile,
            restriction,
        } => {
            let full = GfRequest::new(ctype, profile).run()?.poly;
            let part = GfRequest::new(ctype, profile)
                .restrict(restriction)
                .run()?
                .poly;
            VerifyReport::new(label, part, full)
        }
    }
}

fn window_type(family: Family, n: usize) -> Result<CartanType> {
    match family {
        Family::A => CartanType::new(Family::A, n - 1),
        f => CartanType::new(f, n),
    }
}

/// Checks for one classical family with window length up to `max_n`.
pub fn family_checks(family: Family, max_n: usize, form: CForm) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let lo = match family {
        Family::B => 1,
        Family::A | Family::C | Family::D => 2,
        _ => return Ok(out),
    };
    for n in lo..=max_n {
        let ctype = window_type(family, n)?;
        let f = if family == Family::C {
            form
        } else {
            CForm::Derived
        };
        out.push(Check::OddLength { ctype, form: f });
    }
    let theorems: Vec<TheoremId> = TheoremId::ALL
        .into_iter()
        .filter(|t| t.family() == family)
        .collect();
    for id in theorems {
        let (tlo, thi) = id.range();
        for n in tlo..=max_n.min(thi.unwrap_or(usize::MAX)) {
            out.push(Check::Theorem { id, n });
        }
    }
    let restrict = |ctype, profile, restriction| Check::Restriction {
        ctype,
        profile,
        restriction,
    };
    for n in lo..=max_n {
        let ctype = window_type(family, n)?;
        match family {
            Family::A => {
                out.push(restrict(
                    ctype,
                    StatProfile::OddLength,
                    Restriction::Unimodal,
                ));
                out.push(restrict(
                    ctype,
                    StatProfile::OddLength,
                    Restriction::Chessboard,
                ));
                out.push(restrict(
                    ctype,
                    StatProfile::OddLength,
                    Restriction::ChessboardUnimodal,
                ));
            }
            Family::D => {
                out.push(restrict(
                    ctype,
                    StatProfile::DBivar,
                    Restriction::Chessboard,
                ));
                out.push(restrict(
                    ctype,
                    StatProfile::DBivar,
                    Restriction::GoodChessboard,
                ));
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Runs [`family_checks`].
pub fn verify_family(family: Family, max_n: usize, form: CForm) -> Result<Vec<VerifyReport>> {
    family_checks(family, max_n, form)?
        .iter()
        .map(verify)
        .collect()
}

/// Odd-length check of a single type.
pub fn verify_type(ctype: CartanType, form: CForm) -> Result<VerifyReport> {
    verify(&Check::OddLength { ctype, form })
}

/// The desk-scale suite: classical types up to window length 8 (6 for the
/// multivariate and restriction identities), `F4`, `E6`, `E7`.
pub fn standard_suite() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for fam in [Family::A, Family::B, Family::C, Family::D] {
        let six = family_checks(fam, 6, CForm::Derived)?;
        out.extend(
            six.into_iter()
                .filter(|c| !matches!(c, Check::OddLength { .. })),
        );
        out.extend(
            family_checks(fam, 8, CForm::Derived)?
                .into_iter()
                .filter(|c| matches!(c, Check::OddLength { .. })),
        );
    }
    for t in ["F4", "E6", "E7"] {
        out.push(Check::OddLength {
            ctype: t.parse()?,
            form: CForm::Derived,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceReport {
    pub report: VerifyReport,
    /// Elements whose length differs between the two simple systems; nonzero
    /// shows the comparison is not between identical statistics.
    pub changed_lengths: usize,
}

/// Compares the signed `(l, L)` distribution for the standard simple system
/// with the one for `w(Delta)`, where `w` is the element at mixed-radix index
/// `conjugator` of the coset chain.
pub fn invariance_check(ctype: CartanType, conjugator: u64) -> Result<InvarianceReport> {
    let rs = build_root_system(ctype)?;
    let chain = CosetChain::new(&rs);
    if conjugator >= chain.order() {
        return Err(Error::IndexOutOfRange {
            index: conjugator as usize,
            rank: chain.order() as usize,
        });
    }
    let w = chain.element_at(conjugator);
    let conj = conjugate_simple_system(&rs, &w)?;
    let before = length_odd_length_gf(&rs, SignMode::Signed)?;
    let width = conj.num_odd_roots() + 1;
    let mut dense = vec![0i64; (conj.num_positive_roots() + 1) * width];
    let mut changed = 0;
    let mut err = None;
    chain.for_each_element(|tau| match transport(tau, &rs, &conj) {
        Ok(t) => {
            let l = t.length();
            if l != tau.length() {
                changed += 1;
            }
            let lo = t.odd_length(&conj).expect("same system");
            dense[l * width + lo] += t.sign();
        }
        Err(e) => err = Some(e),
    });
    if let Some(e) = err {
        return Err(e);
    }
    let after = Poly::from_terms(
        &["q", "x"],
        dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (vec![(i / width) as u16, (i % width) as u16], c)),
    )?;
    let label = format!("(l, L) over {ctype} invariant under conjugation by element #{conjugator}");
    Ok(InvarianceReport {
        report: VerifyReport::new(label, after, before)?,
        changed_lengths: changed,
    })
}
