//! Crystallographic root systems, built by reflection closure from a Gram
//! matrix of simple roots.
//!
//! Classical types use the simple systems
//!
//! | type      | simple root 0 | simple roots 1.. |
//! |-----------|---------------|------------------|
//! | `A_{n-1}` | `e_2 - e_1`   | `e_{i+1} - e_i`  |
//! | `B_n`     | `e_1`         | `e_{i+1} - e_i`  |
//! | `C_n`     | `2e_1`        | `e_{i+1} - e_i`  |
//! | `D_n`     | `e_1 + e_2`   | `e_{i+1} - e_i`  |
//!
//! so that simple root `i` of `B_n`, `C_n`, `D_n` is the generator `s_i` of
//! the signed-permutation realization (`s_0` special, `s_i = (i, i+1)`), and
//! simple root `i` of `A_{n-1}` is `s_{i+1}`. Exceptional types use
//! Bourbaki numbering (node `k` of the diagram is index `k - 1`).
//!
//! Only positive roots are stored. A root is referenced by a [`SignedRoot`]:
//! an index into the positive roots together with a sign bit.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// More positive roots than any finite crystallographic system of rank <= 8
/// has (E8 has 120).
const CLOSURE_CAP: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// An irreducible Cartan type. For `A_{n-1}` the stored rank is `n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CartanType {
    family: Family,
    rank: usize,
}

impl CartanType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 2,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        // Keeps every positive-root index below the sign bit of `SignedRoot`.
        let small = rank <= 11;
        if ok && small {
            Ok(CartanType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    pub fn is_classical(self) -> bool {
        matches!(self.family, Family::A | Family::B | Family::C | Family::D)
    }

    /// Length of the window of the (signed) permutation realization:
    /// `n` for `A_{n-1}`, `B_n`, `C_n`, `D_n`.
    pub fn window_len(self) -> Option<usize> {
        match self.family {
            Family::A => Some(self.rank + 1),
            Family::B | Family::C | Family::D => Some(self.rank),
            _ => None,
        }
    }

    pub fn num_positive_roots(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    pub fn group_order(self) -> u64 {
        let n = self.rank as u64;
        let fact = |k: u64| (1..=k).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `"B5"`, `"e8"`, `"A_3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::UnknownType(s.to_string()))?;
        let rest = chars.as_str().trim_start_matches('_');
        let rank: usize = rest
            .parse()
            .map_err(|_| Error::UnknownType(s.to_string()))?;
        CartanType::new(family, rank)
    }
}

impl From<CartanType> for String {
    fn from(t: CartanType) -> String {
        t.to_string()
    }
}

impl TryFrom<String> for CartanType {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// A positive root `index` or its negative, packed in one byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedRoot(u8);

impl SignedRoot {
    const SIGN: u8 = 0x80;

    pub fn positive(index: usize) -> Self {
        debug_assert!(index < 128);
        SignedRoot(index as u8)
    }

    pub fn negative(index: usize) -> Self {
        debug_assert!(index < 128);
        SignedRoot(index as u8 | Self::SIGN)
    }

    #[inline]
    pub fn index(self) -> usize {
        (self.0 & !Self::SIGN) as usize
    }

    #[inline]
    pub fn is_negative(self) -> bool {
        self.0 & Self::SIGN != 0
    }

    #[must_use]
    pub fn negated(self) -> Self {
        SignedRoot(self.0 ^ Self::SIGN)
    }

    /// Flips the sign when `other` is negative; the sign rule of composing
    /// root actions.
    #[inline]
    #[must_use]
    pub fn signed_by(self, other: SignedRoot) -> Self {
        SignedRoot(self.0 ^ (other.0 & Self::SIGN))
    }
}

/// Coefficients of a root over the simple basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    ctype: CartanType,
    /// `(alpha_i, alpha_j)` for the simple roots, up to a common scale.
    gram: Vec<Vec<i64>>,
    roots: Vec<Root>,
    heights: Vec<u32>,
    odd_mask: Vec<bool>,
    reflections: Vec<Vec<SignedRoot>>,
    /// Coordinates of each positive root over the basis of the system this
    /// one was derived from; equal to `roots` for freshly built systems.
    ambient: Vec<Vec<i64>>,
    /// Gram matrix of that reference basis.
    reference_gram: Vec<Vec<i64>>,
    ambient_lookup: HashMap<Vec<i64>, SignedRoot>,
    /// `e`-basis vectors of positive roots, classical types only.
    euclid: Option<Vec<Vec<i64>>>,
    euclid_lookup: HashMap<Vec<i64>, SignedRoot>,
    fingerprint: u64,
}

/// Gram matrix of the simple roots and, for classical types, their vectors
/// in the standard basis `e_1..e_n`.
fn simple_data(t: CartanType) -> (Vec<Vec<i64>>, Option<Vec<Vec<i64>>>) {
    let r = t.rank();
    if let Some(n) = t.window_len() {
        let mut simple = Vec::with_capacity(r);
        let diff = |i: usize| {
            // e_{i+1} - e_i with 0-based positions i-1, i
            let mut v = vec![0; n];
            v[i] = 1;
            v[i - 1] = -1;
            v
        };
        match t.family() {
            Family::A => simple.extend((1..n).map(diff)),
            fam => {
                let mut first = vec![0; n];
                match fam {
                    Family::B => first[0] = 1,
                    Family::C => first[0] = 2,
                    _ => {
                        first[0] = 1;
                        first[1] = 1;
                    }
                }
                simple.push(first);
                simple.extend((1..n).map(diff));
            }
        }
        let gram = simple
            .iter()
            .map(|a| simple.iter().map(|b| dot(a, b)).collect())
            .collect();
        return (gram, Some(simple));
    }
    let mut g = vec![vec![0i64; r]; r];
    let mut edge = |i: usize, j: usize, v: i64| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match t.family() {
        Family::E => {
            edge(0, 2, -1);
            edge(1, 3, -1);
            for i in 2..r - 1 {
                edge(i, i + 1, -1);
            }
            for (i, row) in g.iter_mut().enumerate() {
                row[i] = 2;
            }
        }
        Family::F => {
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short (squared lengths 4, 2)
            edge(0, 1, -2);
            edge(1, 2, -2);
            edge(2, 3, -1);
            for (i, len) in [4, 4, 2, 2].into_iter().enumerate() {
                g[i][i] = len;
            }
        }
        Family::G => {
            // alpha_1 short, alpha_2 long
            edge(0, 1, -3);
            g[0][0] = 2;
            g[1][1] = 6;
        }
        _ => unreachable!(),
    }
    (g, None)
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `<alpha, alpha_j^vee> = 2 (alpha, alpha_j) / (alpha_j, alpha_j)`.
fn pairing(gram: &[Vec<i64>], coords: &[i64], j: usize) -> Result<i64> {
    let mut ip: i64 = 0;
    for (i, &c) in coords.iter().enumerate() {
        ip = c
            .checked_mul(gram[i][j])
            .and_then(|t| ip.checked_add(t))
            .ok_or(Error::Overflow)?;
    }
    let num = ip.checked_mul(2).ok_or(Error::Overflow)?;
    let den = gram[j][j];
    if den <= 0 || num % den != 0 {
        return Err(Error::NonTerminating(0));
    }
    Ok(num / den)
}

fn reflect(gram: &[Vec<i64>], coords: &[i64], j: usize) -> Result<Vec<i64>> {
    let p = pairing(gram, coords, j)?;
    let mut out = coords.to_vec();
    out[j] = out[j].checked_sub(p).ok_or(Error::Overflow)?;
    Ok(out)
}

fn unit(rank: usize, j: usize) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[j] = 1;
    v
}

/// Breadth-first closure of `seeds` under the simple reflections, keeping
/// only images with nonnegative coordinates. Returns the closed set in
/// discovery order.
pub(crate) fn positive_closure(gram: &[Vec<i64>], seeds: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let rank = gram.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut out = Vec::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone(), ()).is_none() {
            out.push(s.clone());
            queue.push_back(s.clone());
        }
    }
    while let Some(a) = queue.pop_front() {
        for j in 0..rank {
            let b = reflect(gram, &a, j)?;
            if b.iter().all(|&c| c >= 0) && b.iter().any(|&c| c > 0) && !seen.contains_key(&b) {
                if out.len() >= CLOSURE_CAP {
                    return Err(Error::NonTerminating(out.len()));
                }
                seen.insert(b.clone(), ());
                out.push(b.clone());
                queue.push_back(b);
            }
        }
    }
    Ok(out)
}

/// Solves `m * c = v` over the integers, `m` given by columns.
pub(crate) fn solve_integral(columns: &[Vec<i64>], v: &[i64]) -> Option<Vec<i64>> {
    let n = columns.len();
    let mut a: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            let mut row: Vec<Ratio<i64>> = columns.iter().map(|c| Ratio::from(c[i])).collect();
            row.push(Ratio::from(v[i]));
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != Ratio::from(0))?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        let pivot = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != col && row[col] != Ratio::from(0) {
                let f = row[col];
                for (x, &pv) in row[col..].iter_mut().zip(&pivot[col..]) {
                    *x -= pv * f;
                }
            }
        }
    }
    a.iter()
        .map(|row| row[n].is_integer().then(|| row[n].to_integer()))
        .collect()
}

impl RootSystem {
    pub fn new(ctype: CartanType) -> Result<Self> {
        build_root_system(ctype)
    }

    /// Sorts roots canonically and derives every table from the coordinates.
    pub(crate) fn assemble(
        ctype: CartanType,
        gram: Vec<Vec<i64>>,
        coords: Vec<Vec<i64>>,
        ambient: Vec<Vec<i64>>,
        reference_gram: Vec<Vec<i64>>,
        euclid: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let rank = gram.len();
        let mut order: Vec<usize> = (0..coords.len()).collect();
        order.sort_by(|&a, &b| {
            let ha: i64 = coords[a].iter().sum();
            let hb: i64 = coords[b].iter().sum();
            (ha, &coords[a]).cmp(&(hb, &coords[b]))
        });
        let roots: Vec<Root> = order
            .iter()
            .map(|&i| Root {
                coords: coords[i].clone(),
            })
            .collect();
        let ambient: Vec<Vec<i64>> = order.iter().map(|&i| ambient[i].clone()).collect();
        let euclid: Option<Vec<Vec<i64>>> =
            euclid.map(|e| order.iter().map(|&i| e[i].clone()).collect());
        let heights: Vec<u32> = roots.iter().map(|r| r.height() as u32).collect();
        let odd_mask = heights.iter().map(|h| h % 2 == 1).collect();

        let index: HashMap<&[i64], usize> = roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.coords.as_slice(), k))
            .collect();
        let mut reflections = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut table = Vec::with_capacity(roots.len());
            for r in &roots {
                let b = reflect(&gram, &r.coords, j)?;
                let img = if let Some(&k) = index.get(b.as_slice()) {
                    SignedRoot::positive(k)
                } else {
                    let nb: Vec<i64> = b.iter().map(|c| -c).collect();
                    match index.get(nb.as_slice()) {
                        Some(&k) => SignedRoot::negative(k),
                        None => return Err(Error::NonTerminating(roots.len())),
                    }
                };
                table.push(img);
            }
            reflections.push(table);
        }

        let mut ambient_lookup = HashMap::with_capacity(2 * roots.len());
        for (k, v) in ambient.iter().enumerate() {
            ambient_lookup.insert(v.clone(), SignedRoot::positive(k));
            ambient_lookup.insert(v.iter().map(|c| -c).collect(), SignedRoot::negative(k));
        }
        let mut euclid_lookup = HashMap::new();
        if let Some(e) = &euclid {
            for (k, v) in e.iter().enumerate() {
                euclid_lookup.insert(v.clone(), SignedRoot::positive(k));
                euclid_lookup.insert(v.iter().map(|c| -c).collect(), SignedRoot::negative(k));
            }
        }
        let mut h = std::collections::hash_map::DefaultHasher::new();
        ctype.hash(&mut h);
        ambient.hash(&mut h);
        let fingerprint = h.finish();

        Ok(RootSystem {
            ctype,
            gram,
            roots,
            heights,
            odd_mask,
            reflections,
            ambient,
            reference_gram,
            ambient_lookup,
            euclid,
            euclid_lookup,
            fingerprint,
        })
    }

    pub fn ctype(&self) -> CartanType {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn root(&self, k: usize) -> &Root {
        &self.roots[k]
    }

    pub fn heights(&self) -> &[u32] {
        &self.heights
    }

    pub fn max_height(&self) -> u32 {
        self.heights.iter().copied().max().unwrap_or(0)
    }

    pub fn odd_mask(&self) -> &[bool] {
        &self.odd_mask
    }

    pub fn is_odd(&self, k: usize) -> bool {
        self.odd_mask[k]
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }

    /// Index of simple root `s` among the positive roots. Height-one roots
    /// sort first, so this is always `< rank`.
    pub fn simple_root_index(&self, s: usize) -> usize {
        let u = unit(self.rank(), s);
        self.lookup(&u).expect("simple roots are positive roots")
    }

    /// Action of simple reflection `s` on the positive roots.
    pub fn reflection_table(&self, s: usize) -> &[SignedRoot] {
        &self.reflections[s]
    }

    pub fn lookup(&self, coords: &[i64]) -> Option<usize> {
        self.roots
            .binary_search_by(|r| {
                (r.height(), r.coords.as_slice()).cmp(&(coords.iter().sum(), coords))
            })
            .ok()
    }

    pub fn ambient(&self, k: usize) -> &[i64] {
        &self.ambient[k]
    }

    pub fn ambient_signed(&self, r: SignedRoot) -> Vec<i64> {
        let v = &self.ambient[r.index()];
        if r.is_negative() {
            v.iter().map(|c| -c).collect()
        } else {
            v.clone()
        }
    }

    pub fn lookup_ambient(&self, v: &[i64]) -> Option<SignedRoot> {
        self.ambient_lookup.get(v).copied()
    }

    pub(crate) fn reference_gram(&self) -> &[Vec<i64>] {
        &self.reference_gram
    }

    /// Standard-basis vector of positive root `k` (classical types).
    pub fn euclidean(&self, k: usize) -> Option<&[i64]> {
        self.euclid.as_ref().map(|e| e[k].as_slice())
    }

    pub fn euclidean_signed(&self, r: SignedRoot) -> Option<Vec<i64>> {
        self.euclidean(r.index()).map(|v| {
            if r.is_negative() {
                v.iter().map(|c| -c).collect()
            } else {
                v.to_vec()
            }
        })
    }

    pub fn lookup_euclidean(&self, v: &[i64]) -> Option<SignedRoot> {
        self.euclid_lookup.get(v).copied()
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn num_odd_roots(&self) -> usize {
        self.odd_mask.iter().filter(|&&o| o).count()
    }

    /// Re-runs closure from the stored positive roots.
    pub fn reclose(&self) -> Result<Vec<Vec<i64>>> {
        let seeds: Vec<Vec<i64>> = self.roots.iter().map(|r| r.coords.clone()).collect();
        positive_closure(&self.gram, &seeds)
    }
}

pub fn build_root_system(ctype: CartanType) -> Result<RootSystem> {
    let (gram, simple_vectors) = simple_data(ctype);
    let rank = ctype.rank();
    let seeds: Vec<Vec<i64>> = (0..rank).map(|j| unit(rank, j)).collect();
    let coords = positive_closure(&gram, &seeds)?;
    let euclid = simple_vectors.map(|sv| {
        coords
            .iter()
            .map(|c| {
                let mut v = vec![0; sv[0].len()];
                for (j, &cj) in c.iter().enumerate() {
                    for (x, s) in v.iter_mut().zip(&sv[j]) {
                        *x += cj * s;
                    }
                }
                v
            })
            .collect()
    });
    RootSystem::assemble(ctype, gram.clone(), coords.clone(), coords, gram, euclid)
}

/// Indices of the positive roots of odd height, in canonical order.
pub fn odd_roots(rs: &RootSystem) -> Vec<usize> {
    (0..rs.num_positive_roots())
        .filter(|&k| rs.is_odd(k))
        .collect()
}
