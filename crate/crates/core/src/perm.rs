//! Window-notation statistics on (signed) permutations.
//!
//! A [`SignedPermutation`] is the window `[w(1), .., w(n)]` of an element of
//! the hyperoctahedral group `B_n`; plain permutations (`S_n`) have no
//! negative entries and elements of `D_n` have an even number of them.
//! Positions are 1-based everywhere: `oneg` counts negative entries at odd
//! positions, and the odd/even refinements of `inv` and `nsp` count pairs
//! `i < j` with `j - i` odd/even.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(Error::InvalidWindow(format!(
                    "{window:?} is not a signed permutation of 1..{n}"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.window.len()
    }

    pub fn is_empty(&self) -> bool {
        self.window.is_empty()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn value(&self, i: usize) -> i32 {
        self.window[i - 1]
    }

    pub fn is_plain(&self) -> bool {
        self.window.iter().all(|&v| v > 0)
    }

    pub fn num_negatives(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    pub fn is_d_valid(&self) -> bool {
        self.num_negatives().is_multiple_of(2)
    }

    pub(crate) fn require_d_valid(&self) -> Result<()> {
        if self.is_d_valid() {
            Ok(())
        } else {
            Err(Error::InvalidWindow(format!(
                "{self} has an odd number of negative entries"
            )))
        }
    }

    /// 1-based position holding `v` or `-v`, and whether it holds `-v`.
    pub fn position_of(&self, v: u32) -> (usize, bool) {
        let i = self
            .window
            .iter()
            .position(|x| x.unsigned_abs() == v)
            .expect("value present in a valid window");
        (i + 1, self.window[i] < 0)
    }

    /// Applies the signed map `f` to every entry; `f` must be a signed
    /// permutation of values, which keeps the window valid.
    fn map_values(&self, f: impl Fn(i32) -> i32) -> Self {
        SignedPermutation {
            window: self.window.iter().map(|&v| f(v)).collect(),
        }
    }

    fn swap_positions(&self, i: usize, j: usize) -> Self {
        let mut w = self.window.clone();
        w.swap(i - 1, j - 1);
        SignedPermutation { window: w }
    }

    /// Composition `(self . other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::InvalidWindow(format!(
                "cannot compose windows of lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(SignedPermutation {
            window: other
                .window
                .iter()
                .map(|&v| {
                    let x = self.window[v.unsigned_abs() as usize - 1];
                    if v < 0 {
                        -x
                    } else {
                        x
                    }
                })
                .collect(),
        })
    }

    /// All windows of `S_n`, `B_n` or `D_n` in a fixed order.
    pub fn all(group: WindowGroup) -> impl Iterator<Item = SignedPermutation> {
        let n = group.n();
        let signs: u32 = if matches!(group, WindowGroup::Symmetric(_)) {
            0
        } else {
            n as u32
        };
        let perms = Permutations::new(n);
        perms.flat_map(move |p| {
            (0u64..1u64 << signs).filter_map(move |mask| {
                if matches!(group, WindowGroup::EvenSigned(_)) && mask.count_ones() % 2 == 1 {
                    return None;
                }
                let window = p
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                    .collect();
                Some(SignedPermutation { window })
            })
        })
    }
}

/// The three window groups: `S_n`, `B_n`, `D_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WindowGroup {
    Symmetric(usize),
    Signed(usize),
    EvenSigned(usize),
}

impl WindowGroup {
    pub fn n(self) -> usize {
        match self {
            WindowGroup::Symmetric(n) | WindowGroup::Signed(n) | WindowGroup::EvenSigned(n) => n,
        }
    }
}

/// Lexicographic permutations of `1..=n`.
struct Permutations {
    next: Option<Vec<i32>>,
}

impl Permutations {
    fn new(n: usize) -> Self {
        Permutations {
            next: Some((1..=n as i32).collect()),
        }
    }
}

impl Iterator for Permutations {
    type Item = Vec<i32>;

    fn next(&mut self) -> Option<Vec<i32>> {
        let cur = self.next.take()?;
        let mut a = cur.clone();
        if let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) {
            let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
            a.swap(i - 1, j);
            a[i..].reverse();
            self.next = Some(a);
        }
        Some(cur)
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.window.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;

    /// Parses `"3,-1,-4,-2,5"` (brackets and spaces are tolerated).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('[').trim_end_matches(']');
        if t.trim().is_empty() {
            return SignedPermutation::new(Vec::new());
        }
        let window = t
            .split(',')
            .map(|x| {
                x.trim().parse::<i32>().map_err(|_| {
                    Error::InvalidWindow(format!("cannot parse `{}` in `{s}`", x.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPermutation::new(window)
    }
}

/// Every base count from which the named statistics are assembled.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BaseCounts {
    pub inv: u32,
    pub oinv: u32,
    pub einv: u32,
    pub neg: u32,
    pub oneg: u32,
    pub eneg: u32,
    pub nsp: u32,
    pub onsp: u32,
    pub ensp: u32,
}

impl BaseCounts {
    pub fn of(w: &SignedPermutation) -> Self {
        let v = &w.window;
        let mut c = BaseCounts::default();
        for i in 0..v.len() {
            if v[i] < 0 {
                c.neg += 1;
                // position i + 1 is odd
                if i % 2 == 0 {
                    c.oneg += 1;
                } else {
                    c.eneg += 1;
                }
            }
            for j in i + 1..v.len() {
                let odd = (j - i) % 2 == 1;
                if v[i] > v[j] {
                    c.inv += 1;
                    if odd {
                        c.oinv += 1;
                    } else {
                        c.einv += 1;
                    }
                }
                if v[i] + v[j] < 0 {
                    c.nsp += 1;
                    if odd {
                        c.onsp += 1;
                    } else {
                        c.ensp += 1;
                    }
                }
            }
        }
        c
    }
}

/// Names of all statistics, base and composite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatisticId {
    Inv,
    Oinv,
    Einv,
    Neg,
    Oneg,
    Eneg,
    Nsp,
    Onsp,
    Ensp,
    LenA,
    LenB,
    LenD,
    LA,
    LB,
    LC,
    LD,
    LOoe,
    LEoe,
    LEoo,
    LOe,
}

impl StatisticId {
    pub const ALL: [StatisticId; 20] = [
        StatisticId::Inv,
        StatisticId::Oinv,
        StatisticId::Einv,
        StatisticId::Neg,
        StatisticId::Oneg,
        StatisticId::Eneg,
        StatisticId::Nsp,
        StatisticId::Onsp,
        StatisticId::Ensp,
        StatisticId::LenA,
        StatisticId::LenB,
        StatisticId::LenD,
        StatisticId::LA,
        StatisticId::LB,
        StatisticId::LC,
        StatisticId::LD,
        StatisticId::LOoe,
        StatisticId::LEoe,
        StatisticId::LEoo,
        StatisticId::LOe,
    ];

    pub fn name(self) -> &'static str {
        use StatisticId::*;
        match self {
            Inv => "inv",
            Oinv => "oinv",
            Einv => "einv",
            Neg => "neg",
            Oneg => "oneg",
            Eneg => "eneg",
            Nsp => "nsp",
            Onsp => "onsp",
            Ensp => "ensp",
            LenA => "len_A",
            LenB => "len_B",
            LenD => "len_D",
            LA => "L_A",
            LB => "L_B",
            LC => "L_C",
            LD => "L_D",
            LOoe => "L_ooe",
            LEoe => "L_eoe",
            LEoo => "L_eoo",
            LOe => "L_oe",
        }
    }

    pub fn from_counts(self, c: &BaseCounts) -> u32 {
        use StatisticId::*;
        match self {
            Inv | LenA => c.inv,
            Oinv | LA => c.oinv,
            Einv => c.einv,
            Neg => c.neg,
            Oneg => c.oneg,
            Eneg => c.eneg,
            Nsp => c.nsp,
            Onsp => c.onsp,
            Ensp => c.ensp,
            LenB => c.inv + c.neg + c.nsp,
            LenD => c.inv + c.nsp,
            LB => c.oneg + c.oinv + c.onsp,
            LC => c.neg + c.oinv + c.ensp,
            LD => c.oinv + c.onsp,
            LOoe => c.oneg + c.oinv + c.ensp,
            LEoe => c.eneg + c.oinv + c.ensp,
            LEoo => c.eneg + c.oinv + c.onsp,
            LOe => c.oinv + c.ensp,
        }
    }

    /// An upper bound on the statistic over windows of length `n`.
    pub fn max_value(self, n: usize) -> u32 {
        let n = n as u32;
        let pairs = n * n.saturating_sub(1) / 2;
        let c = BaseCounts {
            inv: pairs,
            oinv: pairs,
            einv: pairs,
            neg: n,
            oneg: n,
            eneg: n,
            nsp: pairs,
            onsp: pairs,
            ensp: pairs,
        };
        self.from_counts(&c)
    }
}

impl fmt::Display for StatisticId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = if s == "nneg" { "neg" } else { s };
        StatisticId::ALL
            .into_iter()
            .find(|id| id.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidWindow(format!("unknown statistic `{s}`")))
    }
}

pub fn compute_statistic(stat: StatisticId, w: &SignedPermutation) -> u32 {
    stat.from_counts(&BaseCounts::of(w))
}

/// `Des(w) = { i in [0, n-1] : w(i) > w(i+1) }` with `w(0) := -w(2)`.
pub fn descent_set_d(w: &SignedPermutation) -> Result<Vec<usize>> {
    w.require_d_valid()?;
    let n = w.len();
    let mut out = Vec::new();
    if n >= 2 && -w.value(2) > w.value(1) {
        out.push(0);
    }
    out.extend((1..n).filter(|&i| w.value(i) > w.value(i + 1)));
    Ok(out)
}

/// `w = coset_rep . parabolic_part` with `coset_rep` in `T_n` (increasing
/// window) and `parabolic_part` a plain permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionD {
    pub coset_rep: SignedPermutation,
    pub parabolic_part: SignedPermutation,
}

pub fn parabolic_decompose_d(w: &SignedPermutation) -> Result<DecompositionD> {
    w.require_d_valid()?;
    let mut sorted = w.window.clone();
    sorted.sort_unstable();
    let parabolic = w
        .window
        .iter()
        .map(|v| sorted.iter().position(|s| s == v).unwrap() as i32 + 1)
        .collect();
    Ok(DecompositionD {
        coset_rep: SignedPermutation { window: sorted },
        parabolic_part: SignedPermutation { window: parabolic },
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ElementClass {
    pub unimodal: bool,
    pub chessboard: bool,
    /// `None` for windows outside `D_n`.
    pub good_chessboard: Option<bool>,
}

pub fn has_peak(w: &SignedPermutation) -> bool {
    window_has_peak(&w.window)
}

pub fn is_chessboard(w: &SignedPermutation) -> bool {
    window_is_chessboard(&w.window)
}

pub(crate) fn window_has_peak(w: &[i32]) -> bool {
    w.windows(3).any(|t| t[0] < t[1] && t[1] > t[2])
}

/// Entry parities all agree with the positions, or all disagree.
pub(crate) fn window_is_chessboard(w: &[i32]) -> bool {
    let Some(&first) = w.first() else {
        return true;
    };
    // (v - i) mod 2 must be constant; position 1 fixes it
    let shift = (first - 1).rem_euclid(2);
    w.iter()
        .enumerate()
        .all(|(i, &v)| (v - (i as i32 + 1)).rem_euclid(2) == shift)
}

pub fn is_good_chessboard(w: &SignedPermutation) -> Result<bool> {
    let d = parabolic_decompose_d(w)?;
    Ok(is_chessboard(w) && is_chessboard(&d.coset_rep) && is_chessboard(&d.parabolic_part))
}

pub fn classify(w: &SignedPermutation) -> ElementClass {
    ElementClass {
        unimodal: !has_peak(w),
        chessboard: is_chessboard(w),
        good_chessboard: w.is_d_valid().then(|| is_good_chessboard(w).unwrap()),
    }
}

/// Swaps the neighbours of the peak of largest value.
pub fn peak_involution(w: &SignedPermutation) -> Result<SignedPermutation> {
    let r = (2..w.len())
        .filter(|&i| w.value(i - 1) < w.value(i) && w.value(i) > w.value(i + 1))
        .max_by_key(|&i| w.value(i))
        .ok_or(Error::NoPeak)?;
    Ok(w.swap_positions(r - 1, r + 1))
}

/// Swaps the neighbours of the position `a` of `+-n`, for `|a|` not `1`, `n`.
pub fn star_involution(w: &SignedPermutation) -> Result<SignedPermutation> {
    let n = w.len();
    let (a, _) = w.position_of(n as u32);
    if a == 1 || a == n {
        return Err(Error::NotApplicable);
    }
    Ok(w.swap_positions(a - 1, a + 1))
}

/// Sign-reversing involution on `D_n` preserving `oinv` and `ensp`: left
/// multiplication by `s_1` (values `1 <-> 2`) when the entries of absolute
/// value 1 and 2 sit at even distance with equal signs or at odd distance
/// with opposite signs, and by `s_0^D` (values `1 -> -2`, `2 -> -1`)
/// otherwise.
pub fn bar_involution_d(w: &SignedPermutation) -> Result<SignedPermutation> {
    w.require_d_valid()?;
    if w.len() < 2 {
        return Err(Error::InvalidWindow(format!("{w} needs n >= 2")));
    }
    let (p1, neg1) = w.position_of(1);
    let (p2, neg2) = w.position_of(2);
    let use_s1 = (p1.abs_diff(p2) + usize::from(neg1 != neg2)) % 2 == 0;
    Ok(if use_s1 {
        w.map_values(|v| match v {
            1 => 2,
            2 => 1,
            -1 => -2,
            -2 => -1,
            v => v,
        })
    } else {
        w.map_values(|v| match v {
            1 => -2,
            2 => -1,
            -1 => 2,
            -2 => 1,
            v => v,
        })
    })
}

/// For `w` outside `C(D_n)`: swaps the values `i`, `i + 1` for the least `i`
/// whose positions have equal parity.
pub fn chessboard_involution_d(w: &SignedPermutation) -> Result<SignedPermutation> {
    w.require_d_valid()?;
    let n = w.len() as u32;
    let i = (1..n)
        .find(|&i| (w.position_of(i).0 + w.position_of(i + 1).0).is_multiple_of(2))
        .ok_or(Error::IsChessboard)? as i32;
    Ok(w.map_values(|v| {
        if v.abs() == i {
            v.signum() * (i + 1)
        } else if v.abs() == i + 1 {
            v.signum() * i
        } else {
            v
        }
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extension {
    /// `[w(1), .., w(n-1), -n]`
    Tilde,
    /// `[n, w(1), .., w(n-1)]`
    Hat,
    /// `[-n, w(1), .., w(n-1)]`
    Check,
}

pub fn extend(w: &SignedPermutation, kind: Extension) -> SignedPermutation {
    let n = w.len() as i32 + 1;
    let mut window = Vec::with_capacity(n as usize);
    match kind {
        Extension::Tilde => {
            window.extend_from_slice(&w.window);
            window.push(-n);
        }
        Extension::Hat | Extension::Check => {
            window.push(if kind == Extension::Hat { n } else { -n });
            window.extend_from_slice(&w.window);
        }
    }
    SignedPermutation { window }
}

pub fn abs_map(w: &SignedPermutation) -> SignedPermutation {
    w.map_values(i32::abs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn st(id: StatisticId, s: &str) -> u32 {
        compute_statistic(id, &p(s))
    }

    #[test]
    fn worked_example() {
        let w = "3,-1,-4,-2,5";
        assert_eq!(st(StatisticId::Oneg, w), 1);
        assert_eq!(st(StatisticId::Oinv, w), 3);
        assert_eq!(st(StatisticId::Onsp, w), 2);
        assert_eq!(st(StatisticId::LB, w), 6);
        assert_eq!(st(StatisticId::Neg, w), 3);
        assert_eq!(st(StatisticId::Ensp, w), 2);
        assert_eq!(st(StatisticId::LC, w), 8);
    }

    #[test]
    fn identity_has_zero_statistics() {
        for id in StatisticId::ALL {
            assert_eq!(compute_statistic(id, &SignedPermutation::identity(6)), 0);
        }
    }

    #[test]
    fn small_signed_example() {
        assert_eq!(st(StatisticId::Nsp, "-2,1"), 1);
        assert_eq!(st(StatisticId::Onsp, "-2,1"), 1);
        assert_eq!(st(StatisticId::LenB, "-2,1"), 2);
    }

    #[test]
    fn parsing() {
        assert_eq!(p("[3, -1, -4, -2, 5]").to_string(), "[3,-1,-4,-2,5]");
        assert!("1,1".parse::<SignedPermutation>().is_err());
        assert!("1,3".parse::<SignedPermutation>().is_err());
        assert!("0,1".parse::<SignedPermutation>().is_err());
        assert!("1,x".parse::<SignedPermutation>().is_err());
        assert_eq!("nneg".parse::<StatisticId>().unwrap(), StatisticId::Neg);
        assert_eq!("L_B".parse::<StatisticId>().unwrap(), StatisticId::LB);
    }

    #[test]
    fn group_sizes() {
        assert_eq!(
            SignedPermutation::all(WindowGroup::Symmetric(4)).count(),
            24
        );
        assert_eq!(SignedPermutation::all(WindowGroup::Signed(3)).count(), 48);
        assert_eq!(
            SignedPermutation::all(WindowGroup::EvenSigned(3)).count(),
            24
        );
        assert!(SignedPermutation::all(WindowGroup::EvenSigned(4)).all(|w| w.is_d_valid()));
    }

    #[test]
    fn descents() {
        assert_eq!(descent_set_d(&p("1,2,3")).unwrap(), Vec::<usize>::new());
        assert_eq!(descent_set_d(&p("-2,-1,3")).unwrap(), vec![0]);
        assert!(descent_set_d(&p("2,1,3")).unwrap().contains(&1));
        assert!(descent_set_d(&p("-1,2,3")).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let d = parabolic_decompose_d(&p("-2,-1,3")).unwrap();
        assert_eq!(d.coset_rep, p("-2,-1,3"));
        assert_eq!(d.parabolic_part, SignedPermutation::identity(3));
        let d = parabolic_decompose_d(&p("-1,3,-2")).unwrap();
        assert_eq!(d.coset_rep, p("-2,-1,3"));
        assert_eq!(d.parabolic_part, p("2,3,1"));
        assert_eq!(
            d.coset_rep.compose(&d.parabolic_part).unwrap(),
            p("-1,3,-2")
        );
        let d = parabolic_decompose_d(&p("3,1,2")).unwrap();
        assert_eq!(d.coset_rep, SignedPermutation::identity(3));
        assert_eq!(d.parabolic_part, p("3,1,2"));
    }

    #[test]
    fn classification_examples() {
        let c = classify(&SignedPermutation::identity(4));
        assert!(c.unimodal && c.chessboard && c.good_chessboard == Some(true));
        let c = classify(&p("1,3,2"));
        assert!(!c.unimodal && !c.chessboard);
        assert!(classify(&p("2,1,4,3")).chessboard);
        assert_eq!(classify(&p("-1,2")).good_chessboard, None);
    }

    #[test]
    fn peak_examples() {
        let w = p("1,3,2");
        let v = peak_involution(&w).unwrap();
        assert_eq!(v, p("2,3,1"));
        assert_eq!(compute_statistic(StatisticId::Oinv, &v), 1);
        assert_eq!(compute_statistic(StatisticId::Inv, &v), 2);
        assert_eq!(peak_involution(&v).unwrap(), w);
        assert_eq!(peak_involution(&p("1,2,3")), Err(Error::NoPeak));
    }

    #[test]
    fn star_examples() {
        let w = p("1,3,2");
        let v = star_involution(&w).unwrap();
        assert_eq!(v, p("2,3,1"));
        assert_eq!(star_involution(&v).unwrap(), w);
        assert_eq!(star_involution(&p("3,1,2")), Err(Error::NotApplicable));
        assert_eq!(star_involution(&p("1,2,-3")), Err(Error::NotApplicable));
        assert_eq!(star_involution(&p("1,-3,2")).unwrap(), p("2,-3,1"));
    }

    #[test]
    fn bar_examples() {
        let v = bar_involution_d(&p("1,2,3")).unwrap();
        assert_eq!(v, p("-2,-1,3"));
        assert_eq!(compute_statistic(StatisticId::LenD, &v), 1);
        assert_eq!(bar_involution_d(&v).unwrap(), p("1,2,3"));
        assert_eq!(bar_involution_d(&p("1,3,2")).unwrap(), p("2,3,1"));
        assert!(bar_involution_d(&p("-1,3,2")).is_err());
    }

    #[test]
    fn chessboard_examples() {
        let w = p("2,3,1");
        let v = chessboard_involution_d(&w).unwrap();
        assert_eq!(v, p("1,3,2"));
        assert_eq!(chessboard_involution_d(&v).unwrap(), w);
        assert_eq!(
            chessboard_involution_d(&SignedPermutation::identity(4)),
            Err(Error::IsChessboard)
        );
    }

    #[test]
    fn extension_examples() {
        let one = SignedPermutation::identity(1);
        let t = extend(&one, Extension::Tilde);
        assert_eq!(t, p("1,-2"));
        assert_eq!(st(StatisticId::Oneg, "1,-2"), 0);
        assert_eq!(st(StatisticId::Eneg, "1,-2"), 1);
        assert_eq!(st(StatisticId::Onsp, "1,-2"), 1);
        assert_eq!(st(StatisticId::Oinv, "1,-2"), 1);
        assert_eq!(extend(&one, Extension::Hat), p("2,1"));
        assert_eq!(st(StatisticId::Oinv, "2,1"), 1);
        let c = extend(&one, Extension::Check);
        assert_eq!(c, p("-2,1"));
        let cc = BaseCounts::of(&c);
        assert_eq!((cc.oneg, cc.onsp, cc.oinv), (1, 1, 0));
    }

    #[test]
    fn abs_examples() {
        let w = p("-2,-1,3");
        let a = abs_map(&w);
        assert_eq!(a, p("2,1,3"));
        assert_eq!(st(StatisticId::Onsp, "-2,-1,3"), 1);
        assert_eq!(compute_statistic(StatisticId::Oinv, &a), 1);
        assert_eq!(abs_map(&p("3,1,2")), p("3,1,2"));
        assert_eq!(abs_map(&p("-1,-2")), p("1,2"));
    }
}
