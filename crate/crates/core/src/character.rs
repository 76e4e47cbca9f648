//! Sparse elements of the group ring `Z[P]` and the Demazure operators on it.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::de::{Deserialize, Deserializer};
use serde::ser::{Serialize, SerializeSeq, Serializer};

use crate::error::{Error, Result};
use crate::root_system::{RootSystem, Weight, WeylWord};

/// Products with more term pairs than this are split across the rayon pool.
const PARALLEL_MUL_THRESHOLD: usize = 1 << 16;

/// `Σ c_μ e^μ` with finitely many nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct CharacterElt {
    rank: usize,
    terms: FxHashMap<Weight, i64>,
}

fn add_coeff(map: &mut FxHashMap<Weight, i64>, key: Weight, c: i64) -> Result<()> {
    let slot = map.entry(key).or_insert(0);
    *slot = slot.checked_add(c).ok_or(Error::Overflow("character coefficient"))?;
    Ok(())
}

impl CharacterElt {
    pub fn zero(rank: usize) -> Self {
        CharacterElt {
            rank,
            terms: FxHashMap::default(),
        }
    }

    /// `e^μ`
    pub fn monomial(mu: Weight) -> Self {
        Self::monomial_with(mu, 1)
    }

    pub fn monomial_with(mu: Weight, coefficient: i64) -> Self {
        let mut out = Self::zero(mu.rank());
        if coefficient != 0 {
            out.terms.insert(mu, coefficient);
        }
        out
    }

    /// `e^0`, the unit.
    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank))
    }

    /// Collects `(weight, coefficient)` pairs, merging repeated weights and
    /// dropping zeros.
    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut map = FxHashMap::default();
        for (w, c) in terms {
            if w.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: w.rank(),
                });
            }
            add_coeff(&mut map, w, c)?;
        }
        Ok(Self::from_map(rank, map))
    }

    fn from_map(rank: usize, mut terms: FxHashMap<Weight, i64>) -> Self {
        terms.retain(|_, c| *c != 0);
        CharacterElt { rank, terms }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `e^μ` (zero when absent).
    pub fn coefficient(&self, mu: &Weight) -> i64 {
        self.terms.get(mu).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &i64)> {
        self.terms.iter()
    }

    pub fn weights(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    /// Terms in canonical (lexicographic) order.
    pub fn sorted_terms(&self) -> Vec<(Weight, i64)> {
        let sorted: BTreeMap<&Weight, i64> = self.terms.iter().map(|(w, c)| (w, *c)).collect();
        sorted.into_iter().map(|(w, c)| (w.clone(), c)).collect()
    }

    /// Sum of coefficients, i.e. the dimension for a module character.
    pub fn total_dimension(&self) -> BigInt {
        self.terms.values().map(|&c| BigInt::from(c)).sum()
    }

    fn check_same_rank(&self, other: &CharacterElt) -> Result<()> {
        if self.rank != other.rank {
            Err(Error::RankMismatch {
                expected: self.rank,
                found: other.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &CharacterElt) -> Result<CharacterElt> {
        self.add_scaled(1, other)
    }

    pub fn checked_sub(&self, other: &CharacterElt) -> Result<CharacterElt> {
        self.add_scaled(-1, other)
    }

    /// `self + k·other`
    pub fn add_scaled(&self, k: i64, other: &CharacterElt) -> Result<CharacterElt> {
        let mut out = self.clone();
        out.add_scaled_in_place(k, other)?;
        Ok(out)
    }

    pub fn add_scaled_in_place(&mut self, k: i64, other: &CharacterElt) -> Result<()> {
        self.check_same_rank(other)?;
        for (w, &c) in &other.terms {
            let kc = c.checked_mul(k).ok_or(Error::Overflow("character coefficient"))?;
            add_coeff(&mut self.terms, w.clone(), kc)?;
        }
        self.terms.retain(|_, c| *c != 0);
        Ok(())
    }

    pub fn scale(&self, k: i64) -> Result<CharacterElt> {
        let terms = self
            .terms
            .iter()
            .map(|(w, &c)| {
                c.checked_mul(k)
                    .map(|kc| (w.clone(), kc))
                    .ok_or(Error::Overflow("character coefficient"))
            })
            .collect::<Result<FxHashMap<_, _>>>()?;
        Ok(Self::from_map(self.rank, terms))
    }

    /// `e^μ · self`
    pub fn shift(&self, mu: &Weight) -> Result<CharacterElt> {
        let terms = self
            .terms
            .iter()
            .map(|(w, &c)| Ok((w.checked_add(mu)?, c)))
            .collect::<Result<FxHashMap<_, _>>>()?;
        Ok(CharacterElt { rank: self.rank, terms })
    }

    /// Convolution product; realizes the tensor product of modules.
    pub fn mul(&self, other: &CharacterElt) -> Result<CharacterElt> {
        char_mul(self, other)
    }

    /// `◇`: `e^μ ↦ e^{−μ}`.
    pub fn diamond(&self) -> Result<CharacterElt> {
        diamond(self)
    }

    /// Applies `s_i` (1-based) to every weight.
    pub fn reflect(&self, rs: &RootSystem, i: usize) -> Result<CharacterElt> {
        rs.check_index(i)?;
        self.check_root_system(rs)?;
        let terms = self
            .terms
            .iter()
            .map(|(w, &c)| Ok((rs.reflect(i - 1, w)?, c)))
            .collect::<Result<FxHashMap<_, _>>>()?;
        Ok(CharacterElt { rank: self.rank, terms })
    }

    /// Invariance under every simple reflection.
    pub fn is_weyl_invariant(&self, rs: &RootSystem) -> Result<bool> {
        self.check_root_system(rs)?;
        for idx in 0..rs.rank() {
            for (w, &c) in &self.terms {
                if self.coefficient(&rs.reflect(idx, w)?) != c {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Terms with dominant weight.
    pub fn dominant_part(&self) -> FxHashMap<Weight, i64> {
        self.terms
            .iter()
            .filter(|(w, _)| w.is_dominant())
            .map(|(w, &c)| (w.clone(), c))
            .collect()
    }

    pub(crate) fn check_root_system(&self, rs: &RootSystem) -> Result<()> {
        if self.rank != rs.rank() {
            Err(Error::RankMismatch {
                expected: rs.rank(),
                found: self.rank,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Debug for CharacterElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for CharacterElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if *c == 1 {
                write!(f, "e^{w}")?;
            } else {
                write!(f, "{c}e^{w}")?;
            }
        }
        Ok(())
    }
}

/// Canonical form: a list of `[coords, coefficient]` pairs in lexicographic order.
impl Serialize for CharacterElt {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self.sorted_terms();
        let mut seq = serializer.serialize_seq(Some(terms.len()))?;
        for (w, c) in &terms {
            seq.serialize_element(&(w, c))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for CharacterElt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let pairs: Vec<(Weight, i64)> = Vec::deserialize(deserializer)?;
        let rank = pairs.first().map(|(w, _)| w.rank()).unwrap_or(0);
        CharacterElt::from_terms(rank, pairs).map_err(serde::de::Error::custom)
    }
}

fn mul_into(acc: &mut FxHashMap<Weight, i64>, left: &[(&Weight, &i64)], right: &CharacterElt) -> Result<()> {
    for (wa, &ca) in left {
        for (wb, &cb) in &right.terms {
            let c = ca.checked_mul(cb).ok_or(Error::Overflow("character product"))?;
            add_coeff(acc, wa.checked_add(wb)?, c)?;
        }
    }
    Ok(())
}

/// Product weights inside a box with at most this many cells are accumulated
/// in a dense array instead of a hash map.
const DENSE_MUL_MAX_CELLS: usize = 1 << 25;

/// Per-coordinate `[min, max]` of the weights of `a`.
fn bounding_box(a: &CharacterElt) -> Option<Vec<(i64, i64)>> {
    let mut iter = a.terms.keys();
    let first = iter.next()?;
    let mut bounds: Vec<(i64, i64)> = first.coords().iter().map(|&c| (c, c)).collect();
    for w in iter {
        for (b, &c) in bounds.iter_mut().zip(w.coords()) {
            b.0 = b.0.min(c);
            b.1 = b.1.max(c);
        }
    }
    Some(bounds)
}

/// Dense convolution over the box of possible product weights. With
/// mixed-radix indices relative to the box corner, the index of a sum is the
/// sum of the indices, so each term pair is one array update.
fn dense_mul(a: &CharacterElt, b: &CharacterElt) -> Result<Option<CharacterElt>> {
    let (Some(ba), Some(bb)) = (bounding_box(a), bounding_box(b)) else {
        return Ok(Some(CharacterElt::zero(a.rank)));
    };
    let mut lows = Vec::with_capacity(a.rank);
    let mut extents = Vec::with_capacity(a.rank);
    let mut cells: usize = 1;
    for (x, y) in ba.iter().zip(&bb) {
        let (Some(lo), Some(hi)) = (x.0.checked_add(y.0), x.1.checked_add(y.1)) else {
            return Ok(None);
        };
        let Some(extent) = hi.checked_sub(lo).and_then(|e| usize::try_from(e + 1).ok()) else {
            return Ok(None);
        };
        cells = match cells.checked_mul(extent) {
            Some(c) if c <= DENSE_MUL_MAX_CELLS => c,
            _ => return Ok(None),
        };
        lows.push(lo);
        extents.push(extent);
    }
    // index(w) = Σ (w_k − low_k) · stride_k; split the corner as a's low + b's low
    let mut strides = vec![1usize; a.rank];
    for k in (0..a.rank.saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * extents[k + 1];
    }
    let index = |w: &Weight, low: &[(i64, i64)]| -> usize {
        w.coords()
            .iter()
            .zip(low)
            .zip(&strides)
            .map(|((&c, l), &s)| (c - l.0) as usize * s)
            .sum()
    };
    let left: Vec<(usize, i64)> = a.terms.iter().map(|(w, &c)| (index(w, &ba), c)).collect();
    let right: Vec<(usize, i64)> = b.terms.iter().map(|(w, &c)| (index(w, &bb), c)).collect();
    let mut dense = vec![0i64; cells];
    for &(ia, ca) in &left {
        for &(ib, cb) in &right {
            let slot = &mut dense[ia + ib];
            *slot = ca
                .checked_mul(cb)
                .and_then(|p| slot.checked_add(p))
                .ok_or(Error::Overflow("character product"))?;
        }
    }
    let mut terms = FxHashMap::default();
    let mut coords = vec![0i64; a.rank];
    for (idx, &c) in dense.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut rest = idx;
        for k in 0..a.rank {
            coords[k] = lows[k] + (rest / strides[k]) as i64;
            rest %= strides[k];
        }
        terms.insert(Weight::new(&coords), c);
    }
    Ok(Some(CharacterElt { rank: a.rank, terms }))
}

/// Convolution product in `Z[P]`.
///
/// When the product weights fit a small enough box the sum is accumulated
/// densely. Otherwise large products are split by chunks of the left factor;
/// partial sums are merged afterwards, which gives the same map as the
/// sequential loop.
pub fn char_mul(a: &CharacterElt, b: &CharacterElt) -> Result<CharacterElt> {
    a.check_same_rank(b)?;
    if a.len().saturating_mul(b.len()) >= PARALLEL_MUL_THRESHOLD {
        if let Some(product) = dense_mul(a, b)? {
            return Ok(product);
        }
    }
    hash_mul(a, b)
}

fn hash_mul(a: &CharacterElt, b: &CharacterElt) -> Result<CharacterElt> {
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let left: Vec<(&Weight, &i64)> = large.terms.iter().collect();
    let mut acc = FxHashMap::default();
    if left.len().saturating_mul(small.len()) < PARALLEL_MUL_THRESHOLD {
        mul_into(&mut acc, &left, small)?;
    } else {
        let chunk = (left.len() / rayon::current_num_threads().max(1)).max(1);
        let partials = left
            .par_chunks(chunk)
            .map(|piece| {
                let mut part = FxHashMap::default();
                mul_into(&mut part, piece, small)?;
                Ok(part)
            })
            .collect::<Result<Vec<_>>>()?;
        for part in partials {
            for (w, c) in part {
                add_coeff(&mut acc, w, c)?;
            }
        }
    }
    Ok(CharacterElt::from_map(a.rank, acc))
}

/// `◇(e^μ) = e^{−μ}`, extended linearly.
pub fn diamond(a: &CharacterElt) -> Result<CharacterElt> {
    let terms = a
        .terms
        .iter()
        .map(|(w, &c)| Ok((w.checked_neg()?, c)))
        .collect::<Result<FxHashMap<_, _>>>()?;
    Ok(CharacterElt { rank: a.rank, terms })
}

/// Adds `c · D_i(e^λ)` to `out`, `idx` zero-based.
///
/// With `n = <λ, α_i∨>`: `n ≥ 0` gives the string `e^λ + e^{λ−α_i} + .. + e^{λ−nα_i}`,
/// `n = −1` gives zero, and `n ≤ −2` gives `−(e^{λ+α_i} + .. + e^{λ+(−n−1)α_i})`.
fn demazure_monomial_into(
    rs: &RootSystem,
    idx: usize,
    lambda: &Weight,
    c: i64,
    out: &mut FxHashMap<Weight, i64>,
) -> Result<()> {
    let alpha = &rs.simple_roots()[idx];
    let n = lambda.coords()[idx];
    if n >= 0 {
        let mut current = lambda.clone();
        add_coeff(out, current.clone(), c)?;
        for _ in 0..n {
            current = current.checked_sub(alpha)?;
            add_coeff(out, current.clone(), c)?;
        }
    } else if n <= -2 {
        let neg = c.checked_neg().ok_or(Error::Overflow("demazure operator"))?;
        let mut current = lambda.clone();
        for _ in 0..(-n - 1) {
            current = current.checked_add(alpha)?;
            add_coeff(out, current.clone(), neg)?;
        }
    }
    Ok(())
}

/// Characters with fewer terms than this stay on the sparse path.
const DENSE_DEMAZURE_MIN_TERMS: usize = 512;

/// `D_i` accumulated in a dense box. Every output weight lies on the segment
/// from some input `λ` to `s_i(λ)`, so the bounding box of the input together
/// with its reflection holds the result, and stepping by `α_i` is a fixed
/// index offset. Returns `None` when the box is too large or its bounds
/// overflow; the sparse path then takes over.
fn demazure_dense(rs: &RootSystem, idx: usize, a: &CharacterElt) -> Option<CharacterElt> {
    let rank = a.rank;
    let cartan = rs.cartan();
    let mut bounds: Vec<(i64, i64)> = vec![(i64::MAX, i64::MIN); rank];
    for w in a.terms.keys() {
        let n = w.coords()[idx];
        for (k, b) in bounds.iter_mut().enumerate() {
            let c = w.coords()[k];
            let r = c.checked_sub(n.checked_mul(cartan[k][idx])?)?;
            b.0 = b.0.min(c).min(r);
            b.1 = b.1.max(c).max(r);
        }
    }
    let mut strides = vec![0isize; rank];
    let mut cells: usize = 1;
    for k in (0..rank).rev() {
        strides[k] = isize::try_from(cells).ok()?;
        let extent = usize::try_from(bounds[k].1.checked_sub(bounds[k].0)?.checked_add(1)?).ok()?;
        cells = cells.checked_mul(extent).filter(|&c| c <= DENSE_MUL_MAX_CELLS)?;
    }
    let alpha_offset: isize = (0..rank).map(|k| cartan[k][idx] as isize * strides[k]).sum();

    let mut dense = vec![0i64; cells];
    for (w, &c) in &a.terms {
        let base: isize = w
            .coords()
            .iter()
            .zip(&bounds)
            .zip(&strides)
            .map(|((&x, b), &s)| (x - b.0) as isize * s)
            .sum();
        let n = w.coords()[idx];
        let (start, count, coeff) = if n >= 0 {
            (base, n + 1, c)
        } else if n <= -2 {
            (base + alpha_offset, -n - 1, c.checked_neg()?)
        } else {
            continue;
        };
        let step = if n >= 0 { -alpha_offset } else { alpha_offset };
        let mut pos = start;
        for _ in 0..count {
            let slot = &mut dense[pos as usize];
            *slot = slot.checked_add(coeff)?;
            pos += step;
        }
    }

    let mut terms = FxHashMap::default();
    let mut coords = vec![0i64; rank];
    for (pos, &c) in dense.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut rest = pos;
        for k in 0..rank {
            let s = strides[k] as usize;
            coords[k] = bounds[k].0 + (rest / s) as i64;
            rest %= s;
        }
        terms.insert(Weight::new(&coords), c);
    }
    Some(CharacterElt { rank, terms })
}

/// Sparse `D_i`, one monomial at a time.
fn demazure_sparse(rs: &RootSystem, idx: usize, a: &CharacterElt) -> Result<CharacterElt> {
    let mut out = FxHashMap::default();
    out.reserve(a.len() * 2);
    for (w, &c) in &a.terms {
        demazure_monomial_into(rs, idx, w, c, &mut out)?;
    }
    Ok(CharacterElt::from_map(a.rank, out))
}

/// `D_i(f) = (f − e^{−α_i} s_i(f)) / (1 − e^{−α_i})`, computed monomial by
/// monomial in closed form.
pub fn demazure_apply(rs: &RootSystem, i: usize, a: &CharacterElt) -> Result<CharacterElt> {
    rs.check_index(i)?;
    a.check_root_system(rs)?;
    if a.len() >= DENSE_DEMAZURE_MIN_TERMS {
        if let Some(out) = demazure_dense(rs, i - 1, a) {
            return Ok(out);
        }
    }
    demazure_sparse(rs, i - 1, a)
}

/// `D_w = D_i1 D_i2 ⋯ D_ik` for `w = [i1, .., ik]`; the last letter acts first.
///
/// Letters are applied as given. Only reduced words have a meaning
/// independent of the chosen expression.
pub fn demazure_word(rs: &RootSystem, word: &WeylWord, a: &CharacterElt) -> Result<CharacterElt> {
    for &i in word.letters() {
        rs.check_index(i)?;
    }
    let mut current = a.clone();
    for &i in word.letters().iter().rev() {
        current = demazure_apply(rs, i, &current)?;
    }
    Ok(current)
}

/// `D_{w0}` along the stored reduced word of the longest element.
pub fn demazure_longest(rs: &RootSystem, a: &CharacterElt) -> Result<CharacterElt> {
    demazure_word(rs, rs.w0_word(), a)
}
