//! Weyl group elements as signed permutations of the positive roots.
//!
//! An element `w` stores `w(alpha_k)` for every positive root `alpha_k`, as a
//! [`SignedRoot`]. Length and odd length are then counts of negative images.
//! Whole groups are enumerated along the parabolic chain
//! `W = W_r > W_{r-1} > .. > W_0 = 1`, where `W_k` is generated by the first
//! `k` simple reflections: every element factors uniquely as
//! `r_0 r_1 .. r_{r-1}` with `r_d` a minimal left coset representative of
//! `W_{r-d-1}` in `W_{r-d}`.

use std::collections::{HashSet, VecDeque};
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::perm::SignedPermutation;
use crate::roots::{Family, RootSystem, SignedRoot};

/// Default cap on the number of elements materialized or walked by the
/// sequential entry points.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    images: Vec<SignedRoot>,
    parity: bool,
    rank: usize,
    system: u64,
}

impl PartialEq for WeylElement {
    /// An element is determined by its action on the simple roots, which sit
    /// at indices `0..rank`.
    fn eq(&self, other: &Self) -> bool {
        self.system == other.system && self.images[..self.rank] == other.images[..other.rank]
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.system.hash(state);
        self.images[..self.rank].hash(state);
    }
}

impl WeylElement {
    pub fn identity(rs: &RootSystem) -> Self {
        WeylElement {
            images: (0..rs.num_positive_roots())
                .map(SignedRoot::positive)
                .collect(),
            parity: false,
            rank: rs.rank(),
            system: rs.fingerprint(),
        }
    }

    pub fn simple_reflection(rs: &RootSystem, s: usize) -> Result<Self> {
        if s >= rs.rank() {
            return Err(Error::IndexOutOfRange {
                index: s,
                rank: rs.rank(),
            });
        }
        Ok(WeylElement {
            images: rs.reflection_table(s).to_vec(),
            parity: true,
            rank: rs.rank(),
            system: rs.fingerprint(),
        })
    }

    /// Builds an element from the images of all positive roots. The parity
    /// is recomputed from the sign flags.
    pub(crate) fn from_images(rs: &RootSystem, images: Vec<SignedRoot>) -> Self {
        let parity = images.iter().filter(|r| r.is_negative()).count() % 2 == 1;
        WeylElement {
            images,
            parity,
            rank: rs.rank(),
            system: rs.fingerprint(),
        }
    }

    pub fn images(&self) -> &[SignedRoot] {
        &self.images
    }

    /// `w(alpha_k)`.
    #[inline]
    pub fn image(&self, k: usize) -> SignedRoot {
        self.images[k]
    }

    /// `w` applied to a signed root.
    #[inline]
    pub fn act(&self, r: SignedRoot) -> SignedRoot {
        self.images[r.index()].signed_by(r)
    }

    /// Parity of any word for the element.
    pub fn word_parity(&self) -> bool {
        self.parity
    }

    /// `(-1)^l(w)`.
    pub fn sign(&self) -> i64 {
        if self.parity {
            -1
        } else {
            1
        }
    }

    pub fn system_fingerprint(&self) -> u64 {
        self.system
    }

    fn check_same(&self, other: &WeylElement) -> Result<()> {
        if self.system == other.system {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    fn check_system(&self, rs: &RootSystem) -> Result<()> {
        if self.system == rs.fingerprint() {
            Ok(())
        } else {
            Err(Error::SystemMismatch)
        }
    }

    /// `(self * other)(alpha) = self(other(alpha))`.
    pub fn multiply(&self, other: &WeylElement) -> Result<Self> {
        self.check_same(other)?;
        let mut out = self.clone();
        self.compose_into(other, &mut out);
        Ok(out)
    }

    /// Writes `self * other` into `out` without allocating.
    #[inline]
    pub(crate) fn compose_into(&self, other: &WeylElement, out: &mut WeylElement) {
        for (o, &v) in out.images.iter_mut().zip(&other.images) {
            *o = self.images[v.index()].signed_by(v);
        }
        out.parity = self.parity ^ other.parity;
    }

    pub fn inverse(&self) -> Self {
        let mut images = self.images.clone();
        for (k, &r) in self.images.iter().enumerate() {
            images[r.index()] = if r.is_negative() {
                SignedRoot::negative(k)
            } else {
                SignedRoot::positive(k)
            };
        }
        WeylElement {
            images,
            ..self.clone()
        }
    }

    /// Number of positive roots sent to negative roots.
    pub fn length(&self) -> usize {
        self.images.iter().filter(|r| r.is_negative()).count()
    }

    /// Number of odd-height positive roots sent to negative roots.
    pub fn odd_length(&self, rs: &RootSystem) -> Result<usize> {
        self.check_system(rs)?;
        Ok(self
            .images
            .iter()
            .zip(rs.odd_mask())
            .filter(|(r, &odd)| odd && r.is_negative())
            .count())
    }

    /// Bit `k` set iff `w(alpha_k) < 0`.
    pub fn negative_mask(&self) -> u128 {
        self.images
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_negative())
            .fold(0, |m, (k, _)| m | 1u128 << k)
    }

    /// The element of a classical group with the given window, acting by
    /// `w(e_i) = sign(w(i)) e_{|w(i)|}`.
    pub fn from_window(rs: &RootSystem, window: &SignedPermutation) -> Result<Self> {
        let ctype = rs.ctype();
        let n = ctype.window_len().ok_or(Error::TypeMismatch(ctype))?;
        if rs.euclidean(0).is_none() {
            return Err(Error::TypeMismatch(ctype));
        }
        if window.len() != n {
            return Err(Error::InvalidWindow(format!(
                "{ctype} needs a window of length {n}, got {window}"
            )));
        }
        match ctype.family() {
            Family::A if !window.is_plain() => {
                return Err(Error::InvalidWindow(format!(
                    "{window} has negative entries but {ctype} acts by plain permutations"
                )))
            }
            Family::D => window.require_d_valid()?,
            _ => {}
        }
        let w = window.window();
        let mut images = Vec::with_capacity(rs.num_positive_roots());
        for k in 0..rs.num_positive_roots() {
            let v = rs.euclidean(k).expect("classical");
            let mut u = vec![0i64; n];
            for (i, &c) in v.iter().enumerate() {
                let t = w[i];
                u[t.unsigned_abs() as usize - 1] += if t < 0 { -c } else { c };
            }
            images.push(
                rs.lookup_euclidean(&u)
                    .expect("signed permutations preserve the root system"),
            );
        }
        Ok(WeylElement::from_images(rs, images))
    }

    pub fn to_window(&self, rs: &RootSystem) -> Result<SignedPermutation> {
        self.check_system(rs)?;
        let ctype = rs.ctype();
        let n = ctype.window_len().ok_or(Error::TypeMismatch(ctype))?;
        if rs.euclidean(0).is_none() {
            return Err(Error::TypeMismatch(ctype));
        }
        let image_of = |v: Vec<i64>| -> Vec<i64> {
            let r = rs.lookup_euclidean(&v).expect("root vector");
            rs.euclidean_signed(self.act(r)).expect("classical")
        };
        let e = |i: usize, j: Option<(usize, i64)>, scale: i64| {
            let mut v = vec![0i64; n];
            v[i] = scale;
            if let Some((j, c)) = j {
                v[j] = c;
            }
            v
        };
        let mut window = Vec::with_capacity(n);
        for i in 0..n {
            // image of e_i, times 2
            let twice: Vec<i64> = match ctype.family() {
                Family::A => {
                    // w(e_j - e_i) = e_{w(j)} - e_{w(i)}: read off the -1
                    let j = if i == 0 { 1 } else { 0 };
                    let u = image_of(e(j, Some((i, -1)), 1));
                    let m = u.iter().position(|&c| c == -1).expect("A-type root");
                    window.push(m as i32 + 1);
                    continue;
                }
                Family::B => image_of(e(i, None, 1)).iter().map(|c| 2 * c).collect(),
                Family::C => image_of(e(i, None, 2)),
                _ => {
                    let j = if i == 0 { 1 } else { 0 };
                    let a = image_of(e(i, Some((j, -1)), 1));
                    let b = image_of(e(i, Some((j, 1)), 1));
                    a.iter().zip(&b).map(|(x, y)| x + y).collect()
                }
            };
            let m = twice.iter().position(|&c| c != 0).expect("nonzero image");
            window.push(if twice[m] < 0 {
                -(m as i32 + 1)
            } else {
                m as i32 + 1
            });
        }
        SignedPermutation::new(window)
    }
}

/// Minimal left coset representatives of `W_{k-1}` in `W_k`, by
/// breadth-first search from the identity (so in nondecreasing length).
fn coset_representatives(rs: &RootSystem, k: usize) -> Vec<WeylElement> {
    let kept: Vec<usize> = (0..k - 1).map(|s| rs.simple_root_index(s)).collect();
    let id = WeylElement::identity(rs);
    let mut seen: HashSet<WeylElement> = HashSet::new();
    seen.insert(id.clone());
    let mut out = vec![id.clone()];
    let mut queue = VecDeque::from([(id, 0usize)]);
    while let Some((r, len)) = queue.pop_front() {
        for t in 0..k {
            let table = rs.reflection_table(t);
            let images: Vec<SignedRoot> = r
                .images
                .iter()
                .map(|&v| table[v.index()].signed_by(v))
                .collect();
            let cand = WeylElement {
                images,
                parity: !r.parity,
                rank: r.rank,
                system: r.system,
            };
            if cand.length() != len + 1 || kept.iter().any(|&a| cand.images[a].is_negative()) {
                continue;
            }
            if seen.insert(cand.clone()) {
                out.push(cand.clone());
                queue.push_back((cand, len + 1));
            }
        }
    }
    out
}

/// The parabolic chain of a Weyl group, dropping the highest-numbered
/// generator at each step. Level `d` holds the representatives of
/// `W_{r-d-1}` in `W_{r-d}`.
#[derive(Debug, Clone)]
pub struct CosetChain {
    levels: Vec<Vec<WeylElement>>,
    identity: WeylElement,
}

impl CosetChain {
    pub fn new(rs: &RootSystem) -> Self {
        let r = rs.rank();
        CosetChain {
            levels: (0..r).map(|d| coset_representatives(rs, r - d)).collect(),
            identity: WeylElement::identity(rs),
        }
    }

    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn level(&self, d: usize) -> &[WeylElement] {
        &self.levels[d]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.identity
    }

    pub fn order(&self) -> u64 {
        self.levels.iter().map(|l| l.len() as u64).product()
    }

    /// Order of the product of levels `from..`, i.e. of `W_{r-from}`.
    pub fn suborder(&self, from: usize) -> u64 {
        self.levels[from..].iter().map(|l| l.len() as u64).product()
    }

    /// The element with mixed-radix index `index` (level 0 most significant).
    pub fn element_at(&self, mut index: u64) -> WeylElement {
        let mut digits = vec![0usize; self.depth()];
        for d in (0..self.depth()).rev() {
            let b = self.levels[d].len() as u64;
            digits[d] = (index % b) as usize;
            index /= b;
        }
        let mut w = self.identity.clone();
        let mut tmp = self.identity.clone();
        for (d, &i) in digits.iter().enumerate() {
            w.compose_into(&self.levels[d][i], &mut tmp);
            std::mem::swap(&mut w, &mut tmp);
        }
        w
    }

    /// Calls `f` on `prefix * r_from * .. * r_{to-1}` for every choice of
    /// representatives at levels `from..to`, in mixed-radix order.
    pub fn for_each_product<F: FnMut(&WeylElement)>(
        &self,
        prefix: &WeylElement,
        from: usize,
        to: usize,
        mut f: F,
    ) {
        let mut scratch: Vec<WeylElement> = vec![prefix.clone(); to - from + 1];
        self.walk(&mut scratch, from, to, &mut f);
    }

    fn walk<F: FnMut(&WeylElement)>(
        &self,
        scratch: &mut [WeylElement],
        d: usize,
        to: usize,
        f: &mut F,
    ) {
        if d == to {
            f(&scratch[0]);
            return;
        }
        let (head, tail) = scratch.split_at_mut(1);
        for r in &self.levels[d] {
            head[0].compose_into(r, &mut tail[0]);
            self.walk(tail, d + 1, to, f);
        }
    }

    /// Calls `f` on every element of the group.
    pub fn for_each_element<F: FnMut(&WeylElement)>(&self, f: F) {
        self.for_each_product(&self.identity, 0, self.depth(), f);
    }
}

/// Every element of the Weyl group, each exactly once.
pub fn enumerate_group(rs: &RootSystem, budget: u64) -> Result<Vec<WeylElement>> {
    let order = rs.ctype().group_order();
    if order > budget {
        return Err(Error::BudgetExceeded { order, budget });
    }
    let chain = CosetChain::new(rs);
    let mut out = Vec::with_capacity(order as usize);
    chain.for_each_element(|w| out.push(w.clone()));
    Ok(out)
}

/// The root system with simple roots `w(Delta)` and positive roots
/// `w(Phi+)`, coordinates and heights taken over the new simple basis.
pub fn conjugate_simple_system(rs: &RootSystem, w: &WeylElement) -> Result<RootSystem> {
    w.check_system(rs)?;
    let r = rs.rank();
    let columns: Vec<Vec<i64>> = (0..r)
        .map(|s| rs.ambient_signed(w.image(rs.simple_root_index(s))))
        .collect();
    let g0 = rs.reference_gram();
    let gram: Vec<Vec<i64>> = columns
        .iter()
        .map(|a| {
            columns
                .iter()
                .map(|b| {
                    (0..r)
                        .map(|i| (0..r).map(|j| a[i] * g0[i][j] * b[j]).sum::<i64>())
                        .sum()
                })
                .collect()
        })
        .collect();
    let n = rs.num_positive_roots();
    let mut coords = Vec::with_capacity(n);
    let mut ambient = Vec::with_capacity(n);
    let mut euclid = rs.euclidean(0).map(|_| Vec::with_capacity(n));
    for k in 0..n {
        let img = w.image(k);
        let v = rs.ambient_signed(img);
        let c = crate::roots::solve_integral(&columns, &v).ok_or(Error::NonTerminating(k))?;
        coords.push(c);
        ambient.push(v);
        if let Some(e) = euclid.as_mut() {
            e.push(rs.euclidean_signed(img).expect("classical"));
        }
    }
    RootSystem::assemble(rs.ctype(), gram, coords, ambient, g0.to_vec(), euclid)
}

/// The same group element `tau` of `from`, viewed in a system `to` that
/// shares its ambient space (e.g. one returned by
/// [`conjugate_simple_system`]).
pub fn transport(tau: &WeylElement, from: &RootSystem, to: &RootSystem) -> Result<WeylElement> {
    tau.check_system(from)?;
    let mut images = Vec::with_capacity(to.num_positive_roots());
    for k in 0..to.num_positive_roots() {
        let a = from
            .lookup_ambient(to.ambient(k))
            .ok_or(Error::SystemMismatch)?;
        let b = from.ambient_signed(tau.act(a));
        images.push(to.lookup_ambient(&b).ok_or(Error::SystemMismatch)?);
    }
    Ok(WeylElement::from_images(to, images))
}
