//! Odd-length counting through the root action.
//!
//! Write `w = P u` with `P` a product of outer coset representatives and `u`
//! in a parabolic subgroup small enough to tabulate. For a positive root
//! `alpha`, `u(alpha) = +-beta`, and `w(alpha) < 0` iff `P(beta) < 0`
//! (plus sign) or `P(beta) > 0` (minus sign). With `N_P` the set of roots
//! `P` makes negative and, over odd `alpha`, `A_u` (resp. `B_u`) the set of
//! `beta` reached with a plus (resp. minus) sign,
//! `L(w) = |N_P & A_u| + |B_u| - |N_P & B_u|`.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::roots::RootSystem;
use crate::weyl::{CosetChain, WeylElement};

use super::SignMode;

/// Largest inner subgroup tabulated.
const INNER_CAP: u64 = 1 << 17;

#[derive(Debug, Clone, Copy)]
struct Inner {
    plus: u128,
    minus: u128,
    minus_count: u32,
    parity: bool,
}

#[derive(Debug, Clone)]
pub struct OddLengthKernel {
    chain: CosetChain,
    /// Levels `1..split` form the outer prefix of a part, `split..` the
    /// tabulated subgroup.
    split: usize,
    inner: Vec<Inner>,
    num_odd: usize,
}

impl OddLengthKernel {
    pub fn new(rs: &RootSystem) -> Self {
        let chain = CosetChain::new(rs);
        let depth = chain.depth();
        let split = (1..=depth)
            .find(|&s| chain.suborder(s) <= INNER_CAP)
            .unwrap_or(depth);
        let odd = rs.odd_mask().to_vec();
        let mut inner = Vec::with_capacity(chain.suborder(split) as usize);
        chain.for_each_product(chain.identity(), split, depth, |u| {
            let (mut plus, mut minus) = (0u128, 0u128);
            for (r, &o) in u.images().iter().zip(&odd) {
                if o {
                    if r.is_negative() {
                        minus |= 1 << r.index();
                    } else {
                        plus |= 1 << r.index();
                    }
                }
            }
            inner.push(Inner {
                plus,
                minus,
                minus_count: minus.count_ones(),
                parity: u.word_parity(),
            });
        });
        OddLengthKernel {
            chain,
            split,
            inner,
            num_odd: rs.num_odd_roots(),
        }
    }

    /// Number of work units: the outermost coset representatives.
    pub fn num_parts(&self) -> usize {
        self.chain.level(0).len()
    }

    pub fn chain(&self) -> &CosetChain {
        &self.chain
    }

    /// Signed counts by odd length over the elements with outermost
    /// representative `part`; entry `k` is the coefficient of `x^k`.
    pub fn run_part(&self, part: usize, sign: SignMode) -> Vec<i64> {
        let mut even = vec![0u64; self.num_odd + 1];
        let mut odd = vec![0u64; self.num_odd + 1];
        let head: &WeylElement = &self.chain.level(0)[part];
        self.chain.for_each_product(head, 1, self.split, |p| {
            let neg = p.negative_mask();
            let pp = p.word_parity();
            for u in &self.inner {
                let l = (neg & u.plus).count_ones() + u.minus_count - (neg & u.minus).count_ones();
                if pp ^ u.parity {
                    odd[l as usize] += 1;
                } else {
                    even[l as usize] += 1;
                }
            }
        });
        even.iter()
            .zip(&odd)
            .map(|(&e, &o)| match sign {
                SignMode::Signed => e as i64 - o as i64,
                SignMode::Unsigned => (e + o) as i64,
            })
            .collect()
    }

    /// The univariate polynomial with coefficients `counts`.
    pub fn to_poly(counts: &[i64]) -> Result<Poly> {
        Poly::from_terms(
            &["x"],
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(k, &c)| (vec![k as u16], c)),
        )
    }

    pub fn total(&self, sign: SignMode) -> Result<Poly> {
        let mut acc = vec![0i64; self.num_odd + 1];
        for part in 0..self.num_parts() {
            for (a, c) in acc.iter_mut().zip(self.run_part(part, sign)) {
                *a = a.checked_add(c).ok_or(Error::Overflow)?;
            }
        }
        Self::to_poly(&acc)
    }
}
