//! Exhaustive checks shared by the integration tests and the acceptance
//! runner. Each returns the number of cases examined, or a description of
//! the first failure. Sums here go through the plain window iterator, not
//! the enumeration engine.

#![allow(dead_code)]

use std::collections::BTreeMap;

use oddlength::perm::{
    abs_map, bar_involution_d, chessboard_involution_d, classify, compute_statistic, extend,
    is_chessboard, is_good_chessboard, parabolic_decompose_d, peak_involution, star_involution,
    BaseCounts, Extension, SignedPermutation, StatisticId, WindowGroup,
};
use oddlength::{build_root_system, enumerate_group, CartanType, Error, Family};

use StatisticId::*;

pub type Check = Result<usize, String>;

fn st(id: StatisticId, w: &SignedPermutation) -> u32 {
    compute_statistic(id, w)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Involution laws: `f(f(w)) = w`, listed statistics unchanged, `length`
/// changes by exactly one.
fn involution_laws(
    domain: impl Iterator<Item = SignedPermutation>,
    f: impl Fn(&SignedPermutation) -> Option<SignedPermutation>,
    preserved: &[StatisticId],
    length: StatisticId,
    name: &str,
) -> Check {
    let mut count = 0;
    for w in domain {
        let Some(v) = f(&w) else { continue };
        count += 1;
        ensure(f(&v).as_ref() == Some(&w), || {
            format!("{name}: {w} -> {v} is not involutive")
        })?;
        for &s in preserved {
            ensure(st(s, &w) == st(s, &v), || {
                format!("{name}: {s} changes on {w} -> {v}")
            })?;
        }
        ensure(st(length, &w).abs_diff(st(length, &v)) == 1, || {
            format!("{name}: {length} does not change by 1 on {w} -> {v}")
        })?;
    }
    Ok(count)
}

pub fn peak(max_n: usize) -> Check {
    let mut total = 0;
    for n in 1..=max_n {
        total += involution_laws(
            SignedPermutation::all(WindowGroup::Symmetric(n)),
            |w| peak_involution(w).ok(),
            &[Oinv],
            Inv,
            "peak",
        )?;
        for w in SignedPermutation::all(WindowGroup::Symmetric(n)) {
            if let Ok(v) = peak_involution(&w) {
                ensure(is_chessboard(&w) == is_chessboard(&v), || {
                    format!("peak: chessboard property changes on {w}")
                })?;
            } else {
                ensure(classify(&w).unimodal, || {
                    format!("peak: {w} rejected but has a peak")
                })?;
            }
        }
    }
    Ok(total)
}

pub fn star(max_n: usize) -> Check {
    let mut total = 0;
    for n in 1..=max_n {
        total += involution_laws(
            SignedPermutation::all(WindowGroup::Signed(n)),
            |w| star_involution(w).ok(),
            &[Oneg, Eneg, Onsp, Ensp, Oinv],
            LenB,
            "star",
        )?;
        for w in SignedPermutation::all(WindowGroup::Signed(n)) {
            let (a, _) = w.position_of(n as u32);
            let applicable = a != 1 && a != n;
            ensure(star_involution(&w).is_ok() == applicable, || {
                format!("star: applicability wrong on {w}")
            })?;
        }
    }
    Ok(total)
}

pub fn bar(max_n: usize) -> Check {
    let mut total = 0;
    for n in 2..=max_n {
        let domain: Vec<_> = SignedPermutation::all(WindowGroup::EvenSigned(n)).collect();
        let hit = involution_laws(
            domain.iter().cloned(),
            |w| bar_involution_d(w).ok(),
            &[Ensp, Oinv],
            LenD,
            "bar",
        )?;
        ensure(hit == domain.len(), || {
            format!("bar: not defined on all of D{n}")
        })?;
        total += hit;
    }
    Ok(total)
}

pub fn chessboard(max_n: usize) -> Check {
    let mut total = 0;
    for n in 2..=max_n {
        total += involution_laws(
            SignedPermutation::all(WindowGroup::EvenSigned(n)),
            |w| chessboard_involution_d(w).ok(),
            &[Oinv, Onsp],
            LenD,
            "chessboard",
        )?;
        for w in SignedPermutation::all(WindowGroup::EvenSigned(n)) {
            let is_c = is_chessboard(&w);
            ensure(
                matches!(chessboard_involution_d(&w), Err(Error::IsChessboard)) == is_c,
                || format!("chessboard: domain wrong on {w}"),
            )?;
        }
    }
    Ok(total)
}

type Dist = BTreeMap<Vec<u32>, i64>;

/// Signed distribution of `stats` over the windows accepted by `keep`.
fn dist(
    group: WindowGroup,
    stats: &[StatisticId],
    length: StatisticId,
    keep: impl Fn(&SignedPermutation) -> bool,
) -> Dist {
    let mut d = Dist::new();
    for w in SignedPermutation::all(group).filter(|w| keep(w)) {
        let key = stats.iter().map(|&s| st(s, &w)).collect();
        *d.entry(key).or_default() += if st(length, &w) % 2 == 1 { -1 } else { 1 };
    }
    d.retain(|_, c| *c != 0);
    d
}

/// Signed `oinv` over `S_n` equals the sum over unimodal permutations, and
/// the same within chessboard permutations.
pub fn unimodal(max_n: usize) -> Check {
    let mut total = 0;
    for n in 1..=max_n {
        let g = WindowGroup::Symmetric(n);
        let full = dist(g, &[Oinv], Inv, |_| true);
        let uni = dist(g, &[Oinv], Inv, |w| classify(w).unimodal);
        ensure(full == uni, || format!("unimodal reduction fails for S{n}"))?;
        let ch = dist(g, &[Oinv], Inv, is_chessboard);
        let chu = dist(g, &[Oinv], Inv, |w| {
            is_chessboard(w) && classify(w).unimodal
        });
        ensure(ch == chu, || {
            format!("chessboard unimodal reduction fails for S{n}")
        })?;
        ensure(ch == full, || {
            format!("chessboard reduction fails for S{n}")
        })?;
        total += (1..=n).product::<usize>();
    }
    Ok(total)
}

/// Signed `(oinv, onsp)` over `D_n` equals the sum over chessboard elements
/// and over good chessboard elements.
pub fn d_restrictions(max_n: usize) -> Check {
    let mut total = 0;
    for n in 2..=max_n {
        let g = WindowGroup::EvenSigned(n);
        let full = dist(g, &[Oinv, Onsp], LenD, |_| true);
        let ch = dist(g, &[Oinv, Onsp], LenD, is_chessboard);
        ensure(full == ch, || {
            format!("chessboard restriction fails for D{n}")
        })?;
        let good = dist(g, &[Oinv, Onsp], LenD, |w| is_good_chessboard(w).unwrap());
        ensure(full == good, || {
            format!("good chessboard restriction fails for D{n}")
        })?;
        total += SignedPermutation::all(g).count();
    }
    Ok(total)
}

/// Additivity of `oinv`, `onsp` on good chessboard elements, and of the
/// type `D` length on all of `D_n`, over the factorization `D_n = T_n S_n`.
pub fn additivity(max_n: usize) -> Check {
    let mut total = 0;
    for n in 2..=max_n {
        for w in SignedPermutation::all(WindowGroup::EvenSigned(n)) {
            let d = parabolic_decompose_d(&w).map_err(|e| e.to_string())?;
            let (t, u) = (&d.coset_rep, &d.parabolic_part);
            ensure(t.compose(u).unwrap() == w, || {
                format!("decomposition of {w} does not recompose")
            })?;
            ensure(t.window().windows(2).all(|p| p[0] < p[1]), || {
                format!("coset part of {w} is not increasing")
            })?;
            ensure(u.is_plain(), || format!("parabolic part of {w} is signed"))?;
            ensure(st(LenD, &w) == st(LenD, t) + st(Inv, u), || {
                format!("length is not additive on {w}")
            })?;
            if is_good_chessboard(&w).unwrap() {
                for s in [Oinv, Onsp] {
                    ensure(st(s, &w) == st(s, t) + st(s, u), || {
                        format!("{s} is not additive on good chessboard {w}")
                    })?;
                }
                ensure(classify(&w).chessboard, || {
                    format!("good chessboard {w} is not chessboard")
                })?;
            }
            // |.| maps chessboard coset representatives onto unimodal ones
            if is_chessboard(t) {
                let a = abs_map(t);
                ensure(
                    st(Nsp, t) == st(Inv, &a) && st(Onsp, t) == st(Oinv, &a),
                    || format!("abs map statistics wrong on {t}"),
                )?;
            }
            total += 1;
        }
    }
    Ok(total)
}

/// Statistic changes under the three extensions, for `w` in `B_{n-1}`.
pub fn extensions(max_n: usize) -> Check {
    let mut total = 0;
    for n in 2..=max_n {
        let up = (n as u32 - 1).div_ceil(2);
        let down = (n as u32 - 1) / 2;
        let delta = u32::from(n % 2 == 0);
        for w in SignedPermutation::all(WindowGroup::Signed(n - 1)) {
            let c = BaseCounts::of(&w);
            let t = BaseCounts::of(&extend(&w, Extension::Tilde));
            let expect_t = BaseCounts {
                oneg: c.oneg + 1 - delta,
                eneg: c.eneg + delta,
                oinv: c.oinv + up,
                einv: c.einv + down,
                onsp: c.onsp + up,
                ensp: c.ensp + down,
                inv: c.inv + up + down,
                nsp: c.nsp + up + down,
                neg: c.neg + 1,
            };
            ensure(t == expect_t, || format!("tilde deltas wrong on {w}"))?;
            let h = BaseCounts::of(&extend(&w, Extension::Hat));
            ensure(
                h.oneg == c.eneg
                    && h.eneg == c.oneg
                    && h.oinv == c.oinv + up
                    && h.einv == c.einv + down
                    && h.onsp == c.onsp
                    && h.ensp == c.ensp,
                || format!("hat deltas wrong on {w}"),
            )?;
            let k = BaseCounts::of(&extend(&w, Extension::Check));
            ensure(
                k.oneg == c.eneg + 1
                    && k.eneg == c.oneg
                    && k.oinv == c.oinv
                    && k.einv == c.einv
                    && k.onsp == c.onsp + up
                    && k.ensp == c.ensp + down,
                || format!("check deltas wrong on {w}"),
            )?;
            total += 1;
        }
    }
    Ok(total)
}

/// Root-theoretic length and odd length against the window formulas, for
/// every element of the classical groups of rank `<= max_rank`.
pub fn cross_representation(max_rank: usize) -> Check {
    let mut total = 0;
    for fam in [Family::A, Family::B, Family::C, Family::D] {
        let lo = if fam == Family::D { 2 } else { 1 };
        for r in lo..=max_rank {
            let t = CartanType::new(fam, r).unwrap();
            let rs = build_root_system(t).unwrap();
            let (len, odd) = match fam {
                Family::A => (LenA, LA),
                Family::B => (LenB, LB),
                Family::C => (LenB, LC),
                _ => (LenD, LD),
            };
            for w in enumerate_group(&rs, 1 << 20).unwrap() {
                let win = w.to_window(&rs).map_err(|e| e.to_string())?;
                ensure(w.length() == st(len, &win) as usize, || {
                    format!("{t}: length mismatch on {win}")
                })?;
                ensure(w.odd_length(&rs).unwrap() == st(odd, &win) as usize, || {
                    format!("{t}: odd length mismatch on {win}")
                })?;
                total += 1;
            }
        }
    }
    Ok(total)
}
