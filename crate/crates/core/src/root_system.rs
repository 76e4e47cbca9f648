//! Root data for the simple types A–G.
//!
//! Weights are always written in the fundamental-weight basis, so the pairing
//! `<λ, α_i∨>` is just `λ[i]`. Simple roots are the columns of the Cartan
//! matrix `a_ij = <α_j, α_i∨>` (Bourbaki numbering).
//!
//! A Weyl word `[i1, .., ik]` stands for `s_i1 s_i2 ⋯ s_ik` and acts on a weight
//! by applying `s_ik` first.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Integer vector in the fundamental-weight basis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(SmallVec<[i64; 8]>);

impl Weight {
    pub fn new(coords: &[i64]) -> Self {
        Weight(SmallVec::from_slice(coords))
    }

    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    /// The constant vector `(c, .., c)`; `c = 1` gives ρ.
    pub fn constant(rank: usize, c: i64) -> Self {
        Weight(SmallVec::from_elem(c, rank))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, i64::checked_add)
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, i64::checked_sub)
    }

    /// `self + k·other`
    pub fn checked_add_scaled(&self, k: i64, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| b.checked_mul(k).and_then(|kb| a.checked_add(kb)))
    }

    /// `self − k·other`
    pub fn checked_sub_scaled(&self, k: i64, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| b.checked_mul(k).and_then(|kb| a.checked_sub(kb)))
    }

    pub fn checked_neg(&self) -> Result<Weight> {
        self.0
            .iter()
            .map(|c| c.checked_neg().ok_or(Error::Overflow("weight negation")))
            .collect::<Result<SmallVec<_>>>()
            .map(Weight)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> Option<i64>) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                found: other.rank(),
            });
        }
        self.0
            .iter()
            .zip(other.0.iter())
            .map(|(&a, &b)| f(a, b).ok_or(Error::Overflow("weight arithmetic")))
            .collect::<Result<SmallVec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(SmallVec::from_vec(v))
    }
}

/// Cartan type letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TypeLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            TypeLabel::A => 'A',
            TypeLabel::B => 'B',
            TypeLabel::C => 'C',
            TypeLabel::D => 'D',
            TypeLabel::E => 'E',
            TypeLabel::F => 'F',
            TypeLabel::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(TypeLabel::A),
            "B" => Ok(TypeLabel::B),
            "C" => Ok(TypeLabel::C),
            "D" => Ok(TypeLabel::D),
            "E" => Ok(TypeLabel::E),
            "F" => Ok(TypeLabel::F),
            "G" => Ok(TypeLabel::G),
            _ => Err(Error::InvalidType {
                label: s.to_string(),
                rank: 0,
                reason: "type letter must be one of A, B, C, D, E, F, G".into(),
            }),
        }
    }
}

/// A word in the simple reflections, letters in `1..=rank`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeylWord(pub Vec<usize>);

impl WeylWord {
    pub fn identity() -> Self {
        WeylWord(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }

    /// Reduced iff the word length equals the length of the element it
    /// represents, measured by re-sorting `w(ρ)` into the dominant chamber.
    pub fn is_reduced(&self, rs: &RootSystem) -> Result<bool> {
        let image = rs.apply_word(self, rs.rho())?;
        let (_, steps) = rs.dominant_representative(&image)?;
        Ok(steps == self.len())
    }
}

/// Immutable combinatorial data of one simple root system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: TypeLabel,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    /// `d_i` with `(α_i, α_j) = d_i a_ij`; short roots have `d_i = 1`.
    symmetrizer: Vec<i64>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Weight>,
    /// Positive roots in the simple-root basis.
    positive_root_coords: Vec<Vec<i64>>,
    /// Positive coroots in the simple-coroot basis.
    positive_coroot_coords: Vec<Vec<i64>>,
    rho: Weight,
    w0_word: WeylWord,
    /// `inv_num / inv_den` is the inverse Cartan matrix.
    inv_num: Vec<Vec<i64>>,
    inv_den: i64,
}

fn cartan_matrix(label: TypeLabel, rank: usize) -> Result<Vec<Vec<i64>>> {
    let invalid = |reason: &str| Error::InvalidType {
        label: label.to_string(),
        rank,
        reason: reason.to_string(),
    };
    let ok = match label {
        TypeLabel::A => rank >= 1,
        TypeLabel::B => rank >= 2,
        TypeLabel::C => rank >= 3,
        TypeLabel::D => rank >= 4,
        TypeLabel::E => (6..=8).contains(&rank),
        TypeLabel::F => rank == 4,
        TypeLabel::G => rank == 2,
    };
    if !ok {
        return Err(invalid(match label {
            TypeLabel::A => "type A needs rank >= 1",
            TypeLabel::B => "type B needs rank >= 2",
            TypeLabel::C => "type C needs rank >= 3",
            TypeLabel::D => "type D needs rank >= 4",
            TypeLabel::E => "type E needs rank 6, 7 or 8",
            TypeLabel::F => "type F needs rank 4",
            TypeLabel::G => "type G needs rank 2",
        }));
    }

    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize, a_ij: i64, a_ji: i64| {
        a[i][j] = a_ij;
        a[j][i] = a_ji;
    };
    match label {
        TypeLabel::A => {
            for i in 0..n.saturating_sub(1) {
                link(i, i + 1, -1, -1);
            }
        }
        TypeLabel::B => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n short
            link(n - 2, n - 1, -1, -2);
        }
        TypeLabel::C => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            // α_n long
            link(n - 2, n - 1, -2, -1);
        }
        TypeLabel::D => {
            for i in 0..n - 2 {
                link(i, i + 1, -1, -1);
            }
            link(n - 3, n - 1, -1, -1);
        }
        TypeLabel::E => {
            // 1-3-4-5-6-7-8 with 2 attached to 4
            link(0, 2, -1, -1);
            link(1, 3, -1, -1);
            for i in 2..n - 1 {
                link(i, i + 1, -1, -1);
            }
        }
        TypeLabel::F => {
            link(0, 1, -1, -1);
            // α_1, α_2 long; α_3, α_4 short
            link(1, 2, -1, -2);
            link(2, 3, -1, -1);
        }
        TypeLabel::G => {
            // α_1 short, α_2 long
            link(0, 1, -3, -1);
        }
    }
    Ok(a)
}

/// Smallest positive integers `d_i` with `d_i a_ij = d_j a_ji`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Option<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i]?;
        for j in 0..n {
            if i == j || cartan[i][j] == 0 {
                continue;
            }
            if cartan[j][i] == 0 {
                return None;
            }
            let dj = di * Ratio::new(cartan[i][j], cartan[j][i]);
            match d[j] {
                None => {
                    d[j] = Some(dj);
                    queue.push_back(j);
                }
                Some(existing) if existing != dj => return None,
                Some(_) => {}
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().collect::<Option<_>>()?;
    let lcm = d.iter().fold(1i64, |acc, r| num_integer_lcm(acc, *r.denom()));
    let ints: Vec<i64> = d.iter().map(|r| (r * lcm).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| num_integer_gcd(acc, x));
    Some(ints.into_iter().map(|x| x / g).collect())
}

fn num_integer_gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn num_integer_lcm(a: i64, b: i64) -> i64 {
    if a == 0 || b == 0 {
        0
    } else {
        (a / num_integer_gcd(a, b) * b).abs()
    }
}

/// Exact inverse via Gauss–Jordan over the rationals, returned as an integer
/// matrix over a common denominator.
fn inverse_over_common_denominator(m: &[Vec<i64>]) -> Option<(Vec<Vec<i64>>, i64)> {
    let n = m.len();
    let mut aug: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        Ratio::from_integer(m[i][j])
                    } else if j - n == i {
                        Ratio::one()
                    } else {
                        Ratio::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let p = aug[col][col];
        for x in aug[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !aug[r][col].is_zero() {
                let factor = aug[r][col];
                let pivot_row = aug[col].clone();
                for (x, p) in aug[r].iter_mut().zip(&pivot_row) {
                    *x -= *p * factor;
                }
            }
        }
    }
    let den = aug
        .iter()
        .flat_map(|row| row[n..].iter())
        .fold(1i64, |acc, r| num_integer_lcm(acc, *r.denom()));
    let num = aug
        .iter()
        .map(|row| row[n..].iter().map(|r| (r * den).to_integer()).collect())
        .collect();
    Some((num, den))
}

impl RootSystem {
    /// Builds the root system of type `label` and rank `rank`.
    pub fn new(label: TypeLabel, rank: usize) -> Result<Self> {
        let cartan = cartan_matrix(label, rank)?;
        let invalid = |reason: &str| Error::InvalidType {
            label: label.to_string(),
            rank,
            reason: reason.to_string(),
        };
        let symmetrizer = symmetrizer(&cartan).ok_or_else(|| invalid("Cartan matrix is not symmetrizable"))?;
        let (inv_num, inv_den) =
            inverse_over_common_denominator(&cartan).ok_or_else(|| invalid("singular Cartan matrix"))?;

        let simple_roots: Vec<Weight> = (0..rank)
            .map(|j| Weight::from((0..rank).map(|i| cartan[i][j]).collect::<Vec<_>>()))
            .collect();

        let mut rs = RootSystem {
            label,
            rank,
            cartan,
            symmetrizer,
            simple_roots,
            positive_roots: Vec::new(),
            positive_root_coords: Vec::new(),
            positive_coroot_coords: Vec::new(),
            rho: Weight::constant(rank, 1),
            w0_word: WeylWord::identity(),
            inv_num,
            inv_den,
        };
        rs.generate_positive_roots()?;
        rs.w0_word = rs.greedy_longest_word()?;
        Ok(rs)
    }

    /// Closes the simple roots under simple reflections and keeps the
    /// positive half, ordered by height then root coordinates.
    fn generate_positive_roots(&mut self) -> Result<()> {
        let n = self.rank;
        let mut seen: FxHashSet<Vec<i64>> = FxHashSet::default();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..n {
            let mut e = vec![0i64; n];
            e[i] = 1;
            seen.insert(e.clone());
            queue.push_back(e);
        }
        while let Some(c) = queue.pop_front() {
            let w = self.weight_of_root_coords(&c);
            for i in 0..n {
                let mut reflected = c.clone();
                reflected[i] -= w.coords()[i];
                if seen.insert(reflected.clone()) {
                    queue.push_back(reflected);
                }
            }
        }
        let mut positive: Vec<Vec<i64>> = seen.into_iter().filter(|c| c.iter().all(|&x| x >= 0)).collect();
        positive.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let coroots = positive
            .iter()
            .map(|c| {
                // (β,β)/2 in units where short simple roots have (α,α)/2 = 1
                let mut norm2 = 0i64;
                for j in 0..n {
                    for k in 0..n {
                        norm2 += c[j] * c[k] * self.symmetrizer[j] * self.cartan[j][k];
                    }
                }
                let d_beta = norm2 / 2;
                c.iter()
                    .zip(&self.symmetrizer)
                    .map(|(&cj, &dj)| cj * dj / d_beta)
                    .collect()
            })
            .collect();
        self.positive_roots = positive.iter().map(|c| self.weight_of_root_coords(c)).collect();
        self.positive_root_coords = positive;
        self.positive_coroot_coords = coroots;
        Ok(())
    }

    fn weight_of_root_coords(&self, c: &[i64]) -> Weight {
        let n = self.rank;
        Weight::from(
            (0..n)
                .map(|i| (0..n).map(|j| self.cartan[i][j] * c[j]).sum())
                .collect::<Vec<_>>(),
        )
    }

    /// From ρ, repeatedly reflect in the smallest index with a positive
    /// coordinate until nothing positive remains (that point is −ρ).
    fn greedy_longest_word(&self) -> Result<WeylWord> {
        let mut current = self.rho.clone();
        let mut letters = Vec::new();
        while let Some(i) = current.coords().iter().position(|&c| c > 0) {
            current = self.reflect(i, &current)?;
            letters.push(i + 1);
        }
        Ok(WeylWord(letters))
    }

    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.label, self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// `α_i` for `i` in `1..=rank`.
    pub fn simple_root(&self, i: usize) -> Result<&Weight> {
        self.check_index(i)?;
        Ok(&self.simple_roots[i - 1])
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn positive_coroot_coords(&self) -> &[Vec<i64>] {
        &self.positive_coroot_coords
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn two_rho(&self) -> Weight {
        Weight::constant(self.rank, 2)
    }

    /// The highest root (last in height order).
    pub fn highest_root(&self) -> &Weight {
        self.positive_roots.last().expect("root systems are nonempty")
    }

    pub fn w0_word(&self) -> &WeylWord {
        &self.w0_word
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank,
            })
        } else {
            Ok(())
        }
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank {
            Err(Error::RankMismatch {
                expected: self.rank,
                found: w.rank(),
            })
        } else {
            Ok(())
        }
    }

    /// `s_i` with a zero-based index and no range check.
    pub(crate) fn reflect(&self, idx: usize, w: &Weight) -> Result<Weight> {
        let n = w.coords()[idx];
        if n == 0 {
            return Ok(w.clone());
        }
        w.checked_sub_scaled(n, &self.simple_roots[idx])
    }

    /// `s_i(λ) = λ − <λ, α_i∨> α_i`.
    pub fn simple_reflection(&self, i: usize, w: &Weight) -> Result<Weight> {
        self.check_index(i)?;
        self.check_rank(w)?;
        self.reflect(i - 1, w)
    }

    pub fn apply_word(&self, word: &WeylWord, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        for &i in word.letters() {
            self.check_index(i)?;
        }
        let mut current = w.clone();
        for &i in word.letters().iter().rev() {
            current = self.reflect(i - 1, &current)?;
        }
        Ok(current)
    }

    /// `w · λ = w(λ + ρ) − ρ`.
    pub fn dot_action(&self, word: &WeylWord, w: &Weight) -> Result<Weight> {
        self.check_rank(w)?;
        let shifted = w.checked_add(&self.rho)?;
        self.apply_word(word, &shifted)?.checked_sub(&self.rho)
    }

    /// `den · c` where `c` are the (rational) simple-root coordinates of `w`.
    pub fn scaled_root_coords(&self, w: &Weight) -> Result<Vec<i64>> {
        let n = self.rank;
        (0..n)
            .map(|i| {
                (0..n).try_fold(0i64, |acc, j| {
                    self.inv_num[i][j]
                        .checked_mul(w.coords()[j])
                        .and_then(|x| acc.checked_add(x))
                        .ok_or(Error::Overflow("root coordinates"))
                })
            })
            .collect()
    }

    /// Common denominator of [`Self::scaled_root_coords`].
    pub fn root_coord_denominator(&self) -> i64 {
        self.inv_den
    }

    /// Height (sum of simple-root coordinates) times the common denominator.
    pub fn scaled_height(&self, w: &Weight) -> Result<i64> {
        Ok(self.scaled_root_coords(w)?.iter().sum())
    }

    /// Exact root coordinates, or `None` when `w` is outside the root lattice.
    pub fn root_coords(&self, w: &Weight) -> Result<Option<Vec<i64>>> {
        let scaled = self.scaled_root_coords(w)?;
        if scaled.iter().all(|c| c % self.inv_den == 0) {
            Ok(Some(scaled.into_iter().map(|c| c / self.inv_den).collect()))
        } else {
            Ok(None)
        }
    }

    /// `λ ≤ μ` iff `μ − λ` is a nonnegative integer combination of simple roots.
    pub fn dominance_leq(&self, lambda: &Weight, mu: &Weight) -> Result<bool> {
        let diff = mu.checked_sub(lambda)?;
        self.check_rank(&diff)?;
        Ok(match self.root_coords(&diff)? {
            Some(c) => c.iter().all(|&x| x >= 0),
            None => false,
        })
    }

    /// `λ* = −w0(λ)`.
    pub fn dual_weight(&self, w: &Weight) -> Result<Weight> {
        self.apply_word(&self.w0_word, w)?.checked_neg()
    }

    /// Invariant form scaled by the inverse-Cartan denominator:
    /// `den · (λ, μ) = Σ_i λ_i d_i (den·c(μ))_i`.
    pub fn scaled_inner_product(&self, lambda: &Weight, mu: &Weight) -> Result<i64> {
        let c = self.scaled_root_coords(mu)?;
        lambda
            .coords()
            .iter()
            .zip(&self.symmetrizer)
            .zip(&c)
            .try_fold(0i64, |acc, ((&l, &d), &ci)| {
                l.checked_mul(d)
                    .and_then(|x| x.checked_mul(ci))
                    .and_then(|x| acc.checked_add(x))
                    .ok_or(Error::Overflow("inner product"))
            })
    }

    /// `<λ, β∨>` for the positive root with the given index.
    pub fn coroot_pairing(&self, w: &Weight, root_index: usize) -> i64 {
        self.positive_coroot_coords[root_index]
            .iter()
            .zip(w.coords())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Sorts `w` into the dominant chamber by reflecting in the smallest
    /// index with a negative coordinate. Returns the dominant weight and the
    /// number of reflections used.
    pub fn dominant_representative(&self, w: &Weight) -> Result<(Weight, usize)> {
        self.check_rank(w)?;
        let mut current = w.clone();
        let mut steps = 0usize;
        while let Some(i) = current.coords().iter().position(|&c| c < 0) {
            current = self.reflect(i, &current)?;
            steps += 1;
        }
        Ok((current, steps))
    }

    /// All dominant `λ ≤ μ`, ordered by the height of `μ − λ` and then
    /// lexicographically.
    ///
    /// Walks downward from `μ` through dominant weights only, stepping by
    /// positive roots: between two comparable dominant weights there is
    /// always a chain of dominant weights whose consecutive differences are
    /// positive roots, so nothing is missed.
    pub fn enumerate_dominant_below(&self, mu: &Weight) -> Result<Vec<Weight>> {
        self.check_rank(mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        let mut seen: FxHashSet<Weight> = FxHashSet::default();
        let mut queue = VecDeque::from([mu.clone()]);
        seen.insert(mu.clone());
        while let Some(lambda) = queue.pop_front() {
            for beta in &self.positive_roots {
                let next = lambda.checked_sub(beta)?;
                if next.is_dominant() && !seen.contains(&next) {
                    seen.insert(next.clone());
                    queue.push_back(next);
                }
            }
        }
        let mut out: Vec<(i64, Weight)> = seen
            .into_iter()
            .map(|l| Ok((self.scaled_height(&mu.checked_sub(&l)?)?, l)))
            .collect::<Result<_>>()?;
        out.sort();
        Ok(out.into_iter().map(|(_, l)| l).collect())
    }
}
