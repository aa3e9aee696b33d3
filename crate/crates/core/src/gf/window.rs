//! Depth-first enumeration of windows with incremental statistics.

use crate::error::Result;
use crate::perm::{self, BaseCounts, SignedPermutation, StatisticId};
use crate::poly::Poly;
use crate::roots::{CartanType, Family};

use super::{Restriction, SignMode};

struct Walk<'a> {
    n: usize,
    signed: bool,
    even_signs: bool,
    restriction: Restriction,
    sign: SignMode,
    length: StatisticId,
    stats: &'a [StatisticId],
    strides: Vec<usize>,
    dense: Vec<i64>,
    window: Vec<i32>,
    used: u32,
}

impl Walk<'_> {
    fn place(&mut self, j: usize, counts: BaseCounts) {
        if j == self.n {
            self.leaf(&counts);
            return;
        }
        for a in 1..=self.n as i32 {
            if self.used >> a & 1 == 1 {
                continue;
            }
            for v in [a, -a] {
                if v < 0 && !self.signed {
                    continue;
                }
                let mut c = counts;
                if v < 0 {
                    c.neg += 1;
                    if j.is_multiple_of(2) {
                        c.oneg += 1;
                    } else {
                        c.eneg += 1;
                    }
                }
                for (i, &u) in self.window[..j].iter().enumerate() {
                    let odd = (j - i) % 2 == 1;
                    if u > v {
                        c.inv += 1;
                        if odd {
                            c.oinv += 1;
                        } else {
                            c.einv += 1;
                        }
                    }
                    if u + v < 0 {
                        c.nsp += 1;
                        if odd {
                            c.onsp += 1;
                        } else {
                            c.ensp += 1;
                        }
                    }
                }
                self.window[j] = v;
                self.used |= 1 << a;
                self.place(j + 1, c);
                self.used &= !(1 << a);
            }
        }
    }

    fn admits(&self) -> bool {
        let w = &self.window;
        match self.restriction {
            Restriction::Full => true,
            Restriction::Unimodal => !perm::window_has_peak(w),
            Restriction::Chessboard => perm::window_is_chessboard(w),
            Restriction::ChessboardUnimodal => {
                perm::window_is_chessboard(w) && !perm::window_has_peak(w)
            }
            Restriction::GoodChessboard => {
                perm::window_is_chessboard(w)
                    && perm::is_good_chessboard(
                        &SignedPermutation::new(w.clone()).expect("valid window"),
                    )
                    .expect("D-valid window")
            }
        }
    }

    fn leaf(&mut self, c: &BaseCounts) {
        if self.even_signs && c.neg % 2 == 1 {
            return;
        }
        if !self.admits() {
            return;
        }
        let idx: usize = self
            .stats
            .iter()
            .zip(&self.strides)
            .map(|(s, &k)| s.from_counts(c) as usize * k)
            .sum();
        let weight = match self.sign {
            SignMode::Signed if self.length.from_counts(c) % 2 == 1 => -1,
            _ => 1,
        };
        self.dense[idx] += weight;
    }
}

pub(super) fn window_gf(
    ctype: CartanType,
    stats: &[StatisticId],
    vars: &[&str],
    restriction: Restriction,
    sign: SignMode,
) -> Result<Poly> {
    let n = ctype.window_len().expect("classical type");
    let dims: Vec<usize> = stats.iter().map(|s| s.max_value(n) as usize + 1).collect();
    let mut strides = vec![1; dims.len()];
    for k in (0..dims.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * dims[k + 1];
    }
    let total: usize = dims.iter().product();
    let fam = ctype.family();
    let mut walk = Walk {
        n,
        signed: fam != Family::A,
        even_signs: fam == Family::D,
        restriction,
        sign,
        length: match fam {
            Family::A => StatisticId::LenA,
            Family::D => StatisticId::LenD,
            _ => StatisticId::LenB,
        },
        stats,
        strides: strides.clone(),
        dense: vec![0; total],
        window: vec![0; n],
        used: 0,
    };
    walk.place(0, BaseCounts::default());
    let terms = walk
        .dense
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(mut i, &c)| {
            let e: Vec<u16> = strides
                .iter()
                .map(|&k| {
                    let d = i / k;
                    i %= k;
                    d as u16
                })
                .collect();
            (e, c)
        });
    Poly::from_terms(vars, terms)
}
