//! Signed generating functions over Weyl groups.
//!
//! For a profile choosing statistics `st_1, .., st_k` and variables
//! `x_1, .., x_k`, the signed generating function over a domain `S` is
//! `sum over w in S of (-1)^l(w) x_1^st_1(w) .. x_k^st_k(w)`.
//! Classical groups are summed over windows; any group can be summed through
//! its action on roots.

mod kernel;
mod partition;
mod predict;
mod verify;
mod window;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::perm::StatisticId;
use crate::poly::Poly;
use crate::roots::{build_root_system, CartanType, Family, RootSystem};
use crate::weyl::{CosetChain, DEFAULT_BUDGET};

pub use kernel::OddLengthKernel;
pub use partition::{run_partitioned, Checkpoint, FaultHook, RunOptions};
pub use predict::{
    factored_display, predicted_factors, predicted_gf, predicted_gf_with, predicted_multivariate,
    type_a_gf, CForm, TheoremId,
};
pub use verify::{
    family_checks, invariance_check, standard_suite, verify, verify_family, verify_type, Check,
    InvarianceReport, VerifyReport,
};

/// A named choice of `(variable, statistic)` pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatProfile {
    /// `x <- L`, the odd length of the type.
    OddLength,
    /// `q <- l`, `x <- L`, through the root action.
    LengthOddLength,
    /// `x1 <- oneg`, `x2 <- eneg`, `y <- oinv`, `z <- ensp`.
    B4Var,
    /// `x <- oneg`, `y <- oinv`, `z <- onsp`.
    BOoo,
    /// `x <- eneg`, `y <- oinv`, `z <- onsp`.
    BEoo,
    /// `x1 <- oneg`, `x2 <- eneg`, `y <- oinv`, `z <- onsp`.
    BNonfactor,
    /// `x <- oinv`, `y <- onsp`.
    DBivar,
    /// `x <- oinv`, `y <- ensp`.
    DOe,
    /// `x <- L_oe`.
    DLoe,
    UniOoe,
    UniEoe,
    UniEoo,
}

impl StatProfile {
    pub const ALL: [StatProfile; 12] = [
        StatProfile::OddLength,
        StatProfile::LengthOddLength,
        StatProfile::B4Var,
        StatProfile::BOoo,
        StatProfile::BEoo,
        StatProfile::BNonfactor,
        StatProfile::DBivar,
        StatProfile::DOe,
        StatProfile::DLoe,
        StatProfile::UniOoe,
        StatProfile::UniEoe,
        StatProfile::UniEoo,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StatProfile::OddLength => "odd-length",
            StatProfile::LengthOddLength => "length-odd-length",
            StatProfile::B4Var => "B-4var",
            StatProfile::BOoo => "B-ooo",
            StatProfile::BEoo => "B-eoo",
            StatProfile::BNonfactor => "B-nonfactor",
            StatProfile::DBivar => "D-bivar",
            StatProfile::DOe => "D-oe",
            StatProfile::DLoe => "D-loe",
            StatProfile::UniOoe => "uni-ooe",
            StatProfile::UniEoe => "uni-eoe",
            StatProfile::UniEoo => "uni-eoo",
        }
    }

    pub fn vars(self) -> &'static [&'static str] {
        match self {
            StatProfile::OddLength | StatProfile::DLoe => &["x"],
            StatProfile::UniOoe | StatProfile::UniEoe | StatProfile::UniEoo => &["x"],
            StatProfile::LengthOddLength => &["q", "x"],
            StatProfile::B4Var | StatProfile::BNonfactor => &["x1", "x2", "y", "z"],
            StatProfile::BOoo | StatProfile::BEoo => &["x", "y", "z"],
            StatProfile::DBivar | StatProfile::DOe => &["x", "y"],
        }
    }

    pub fn supports(self, ctype: CartanType) -> bool {
        match self {
            StatProfile::OddLength | StatProfile::LengthOddLength => true,
            StatProfile::DBivar | StatProfile::DOe | StatProfile::DLoe => {
                ctype.family() == Family::D
            }
            _ => matches!(ctype.family(), Family::B | Family::C),
        }
    }

    /// Window statistics for each variable, or `None` for root-only
    /// profiles and non-classical types.
    pub fn window_stats(self, ctype: CartanType) -> Option<Vec<StatisticId>> {
        use StatisticId::*;
        if !ctype.is_classical() || !self.supports(ctype) {
            return None;
        }
        Some(match self {
            StatProfile::OddLength => vec![match ctype.family() {
                Family::A => LA,
                Family::B => LB,
                Family::C => LC,
                _ => LD,
            }],
            StatProfile::LengthOddLength => return None,
            StatProfile::B4Var => vec![Oneg, Eneg, Oinv, Ensp],
            StatProfile::BOoo => vec![Oneg, Oinv, Onsp],
            StatProfile::BEoo => vec![Eneg, Oinv, Onsp],
            StatProfile::BNonfactor => vec![Oneg, Eneg, Oinv, Onsp],
            StatProfile::DBivar => vec![Oinv, Onsp],
            StatProfile::DOe => vec![Oinv, Ensp],
            StatProfile::DLoe => vec![LOe],
            StatProfile::UniOoe => vec![LOoe],
            StatProfile::UniEoe => vec![LEoe],
            StatProfile::UniEoo => vec![LEoo],
        })
    }
}

impl fmt::Display for StatProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatProfile {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        StatProfile::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownProfile(s.to_string()))
    }
}

/// The subset of the group summed over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Restriction {
    Full,
    Unimodal,
    Chessboard,
    /// Chessboard and unimodal.
    ChessboardUnimodal,
    /// Type D only.
    GoodChessboard,
}

impl Restriction {
    pub const ALL: [Restriction; 5] = [
        Restriction::Full,
        Restriction::Unimodal,
        Restriction::Chessboard,
        Restriction::ChessboardUnimodal,
        Restriction::GoodChessboard,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Restriction::Full => "full",
            Restriction::Unimodal => "unimodal",
            Restriction::Chessboard => "chessboard",
            Restriction::ChessboardUnimodal => "chessboard-unimodal",
            Restriction::GoodChessboard => "good-chessboard",
        }
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Restriction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Restriction::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownRestriction(s.to_string()))
    }
}

/// `Unsigned` replaces `(-1)^l` by `1`; the result then counts elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignMode {
    #[default]
    Signed,
    Unsigned,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Method {
    /// Windows for classical types, roots otherwise.
    #[default]
    Auto,
    Windows,
    Roots,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GfResult {
    pub ctype: CartanType,
    pub profile: StatProfile,
    pub restriction: Restriction,
    pub poly: Poly,
    pub group_order: u64,
    pub method: Method,
    pub elapsed: Duration,
    pub parts_done: usize,
    pub parts_total: usize,
}

impl GfResult {
    pub fn is_complete(&self) -> bool {
        self.parts_done == self.parts_total
    }
}

#[derive(Debug, Clone)]
pub struct GfRequest {
    pub ctype: CartanType,
    pub profile: StatProfile,
    pub restriction: Restriction,
    pub sign: SignMode,
    pub method: Method,
    pub budget: u64,
}

impl GfRequest {
    pub fn new(ctype: CartanType, profile: StatProfile) -> Self {
        GfRequest {
            ctype,
            profile,
            restriction: Restriction::Full,
            sign: SignMode::Signed,
            method: Method::Auto,
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn restrict(mut self, r: Restriction) -> Self {
        self.restriction = r;
        self
    }

    pub fn method(mut self, m: Method) -> Self {
        self.method = m;
        self
    }

    pub fn sign(mut self, s: SignMode) -> Self {
        self.sign = s;
        self
    }

    pub fn budget(mut self, b: u64) -> Self {
        self.budget = b;
        self
    }

    pub fn run(&self) -> Result<GfResult> {
        let start = Instant::now();
        let t = self.ctype;
        if !self.profile.supports(t) {
            return Err(Error::UnsupportedProfile {
                profile: self.profile.name().into(),
                ctype: t,
            });
        }
        let order = t.group_order();
        if order > self.budget {
            return Err(Error::BudgetExceeded {
                order,
                budget: self.budget,
            });
        }
        let method = match self.method {
            Method::Auto if self.profile.window_stats(t).is_some() => Method::Windows,
            Method::Auto => Method::Roots,
            m => m,
        };
        let poly = match method {
            Method::Windows => {
                let stats = self
                    .profile
                    .window_stats(t)
                    .ok_or(Error::UnsupportedProfile {
                        profile: self.profile.name().into(),
                        ctype: t,
                    })?;
                if self.restriction == Restriction::GoodChessboard && t.family() != Family::D {
                    return Err(unsupported_restriction(self.restriction, t));
                }
                window::window_gf(t, &stats, self.profile.vars(), self.restriction, self.sign)?
            }
            _ => {
                if self.restriction != Restriction::Full {
                    return Err(unsupported_restriction(self.restriction, t));
                }
                let rs = build_root_system(t)?;
                match self.profile {
                    StatProfile::OddLength => OddLengthKernel::new(&rs).total(self.sign)?,
                    StatProfile::LengthOddLength => length_odd_length_gf(&rs, self.sign)?,
                    p => {
                        return Err(Error::UnsupportedProfile {
                            profile: p.name().into(),
                            ctype: t,
                        })
                    }
                }
            }
        };
        Ok(GfResult {
            ctype: t,
            profile: self.profile,
            restriction: self.restriction,
            poly,
            group_order: order,
            method,
            elapsed: start.elapsed(),
            parts_done: 1,
            parts_total: 1,
        })
    }
}

fn unsupported_restriction(r: Restriction, ctype: CartanType) -> Error {
    Error::UnsupportedRestriction {
        restriction: r.name().into(),
        ctype,
    }
}

/// Signed generating function of `profile` over `restriction`.
pub fn signed_gf(
    ctype: CartanType,
    profile: StatProfile,
    restriction: Restriction,
) -> Result<GfResult> {
    GfRequest::new(ctype, profile).restrict(restriction).run()
}

/// `sum (-1)^l(w) q^l(w) x^L(w)` over the group of `rs`, through the root
/// action.
pub fn length_odd_length_gf(rs: &RootSystem, sign: SignMode) -> Result<Poly> {
    let n = rs.num_positive_roots();
    let width = rs.num_odd_roots() + 1;
    let mut dense = vec![0i64; (n + 1) * width];
    let chain = CosetChain::new(rs);
    let odd = rs.odd_mask().to_vec();
    chain.for_each_element(|w| {
        let (mut l, mut lo) = (0, 0);
        for (r, &o) in w.images().iter().zip(&odd) {
            if r.is_negative() {
                l += 1;
                lo += usize::from(o);
            }
        }
        dense[l * width + lo] += match sign {
            SignMode::Signed => w.sign(),
            SignMode::Unsigned => 1,
        };
    });
    Poly::from_terms(
        &["q", "x"],
        dense
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| (vec![(i / width) as u16, (i % width) as u16], c)),
    )
}
