//! Permutations in one-line notation, adjacent-transposition products,
//! reduced words, Lehmer codes, pattern containment and direct sums.
//!
//! Products follow one fixed convention throughout the crate: a word
//! `a_1 … a_k` is evaluated left to right starting from the identity,
//! and right multiplication by `s_i` swaps the entries in positions `i`
//! and `i + 1`. Left multiplication by `s_i` swaps the values `i` and
//! `i + 1`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagram::Partition;
use crate::error::{invalid, Error, Result};

/// The four patterns whose avoidance characterises `|SRT(w)| = |R(w)|`.
pub const FORBIDDEN_PATTERNS: [[usize; 4]; 4] =
    [[2, 4, 1, 3], [2, 4, 3, 1], [3, 1, 4, 2], [4, 1, 3, 2]];

/// A permutation of `{1, …, n}` stored as its one-line word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    word: Vec<usize>,
}

/// Which side a generator multiplies from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        if n == 0 {
            return Err(invalid("a permutation needs at least one entry"));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(invalid(format!(
                    "{word:?} is not a permutation of 1..{n}"
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The longest element `n … 2 1`.
    pub fn longest(n: usize) -> Self {
        assert!(n >= 1, "S_0 is not supported");
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Entry `w_i`, 1-based.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// Position of value `v`, i.e. `w^{-1}(v)`, 1-based.
    pub fn position_of(&self, v: usize) -> usize {
        self.word.iter().position(|&x| x == v).expect("value in range") + 1
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.size()];
        for (i, &v) in self.word.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { word: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.word;
        (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .sum()
    }

    pub fn lehmer_code(&self) -> LehmerCode {
        let w = &self.word;
        let entries = (0..w.len())
            .map(|i| w[i + 1..].iter().filter(|&&x| x < w[i]).count())
            .collect();
        LehmerCode { entries }
    }

    /// Positions `i` with `w_i < w_{i+1}`.
    pub fn ascents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.at(i) < self.at(i + 1))
            .collect()
    }

    /// Positions `i` with `w_i > w_{i+1}`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.size())
            .filter(|&i| self.at(i) > self.at(i + 1))
            .collect()
    }

    pub fn first_ascent(&self) -> Option<usize> {
        (1..self.size()).find(|&i| self.at(i) < self.at(i + 1))
    }

    pub fn multiply(&self, side: Side, i: usize) -> Result<Permutation> {
        let n = self.size();
        if i == 0 || i >= n {
            return Err(invalid(format!("generator s_{i} is out of range for S_{n}")));
        }
        let mut word = self.word.clone();
        match side {
            Side::Right => word.swap(i - 1, i),
            Side::Left => {
                for v in word.iter_mut() {
                    if *v == i {
                        *v = i + 1;
                    } else if *v == i + 1 {
                        *v = i;
                    }
                }
            }
        }
        Ok(Permutation { word })
    }

    /// `w · s_i`: swaps positions `i` and `i + 1`.
    pub fn mul_right(&self, i: usize) -> Result<Permutation> {
        self.multiply(Side::Right, i)
    }

    /// `s_i · w`: swaps values `i` and `i + 1`.
    pub fn mul_left(&self, i: usize) -> Result<Permutation> {
        self.multiply(Side::Left, i)
    }

    /// Embeds into `S_m` (`m ≥ n`) by appending fixed points.
    pub fn padded(&self, m: usize) -> Permutation {
        let mut word = self.word.clone();
        word.extend(self.size() + 1..=m.max(self.size()));
        Permutation { word }
    }

    /// Drops trailing fixed points, keeping at least one entry.
    pub fn trimmed(&self) -> Permutation {
        let mut word = self.word.clone();
        while word.len() > 1 && *word.last().unwrap() == word.len() {
            word.pop();
        }
        Permutation { word }
    }

    /// Equality up to trailing fixed points.
    pub fn same_as(&self, other: &Permutation) -> bool {
        self.trimmed() == other.trimmed()
    }

    /// First occurrence (lexicographic in positions) of `pattern`, as
    /// 1-based positions into `self`.
    pub fn find_pattern(&self, pattern: &[usize]) -> Option<Vec<usize>> {
        let k = pattern.len();
        let n = self.size();
        if k > n {
            return None;
        }
        if k == 0 {
            return Some(Vec::new());
        }
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            if self.order_isomorphic_at(&idx, pattern) {
                return Some(idx.iter().map(|i| i + 1).collect());
            }
            // advance to the next k-subset in lexicographic order
            let mut t = k;
            loop {
                if t == 0 {
                    return None;
                }
                t -= 1;
                if idx[t] < n - k + t {
                    break;
                }
                if t == 0 {
                    return None;
                }
            }
            idx[t] += 1;
            for s in t + 1..k {
                idx[s] = idx[s - 1] + 1;
            }
        }
    }

    fn order_isomorphic_at(&self, idx: &[usize], pattern: &[usize]) -> bool {
        for a in 0..idx.len() {
            for b in a + 1..idx.len() {
                let lhs = self.word[idx[a]] < self.word[idx[b]];
                if lhs != (pattern[a] < pattern[b]) {
                    return false;
                }
            }
        }
        true
    }

    pub fn contains_pattern(&self, pattern: &Permutation) -> bool {
        self.find_pattern(pattern.word()).is_some()
    }

    /// 132-avoiding.
    pub fn is_dominant(&self) -> bool {
        self.find_pattern(&[1, 3, 2]).is_none()
    }

    /// Avoids all of 2413, 2431, 3142 and 4132.
    pub fn is_equality_class(&self) -> bool {
        self.first_forbidden_pattern().is_none()
    }

    /// The first forbidden pattern (in the order 2413, 2431, 3142, 4132)
    /// that occurs, with its positions.
    pub fn first_forbidden_pattern(&self) -> Option<([usize; 4], Vec<usize>)> {
        FORBIDDEN_PATTERNS
            .iter()
            .find_map(|p| self.find_pattern(p).map(|pos| (*p, pos)))
    }

    /// `u ⊕ v`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let k = self.size();
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|v| v + k));
        Permutation { word }
    }

    /// Splits into indecomposable blocks `w^1 ⊕ … ⊕ w^k`.
    pub fn direct_sum_decompose(&self) -> Vec<Permutation> {
        let mut blocks = Vec::new();
        let mut start = 0;
        let mut max = 0;
        for (i, &v) in self.word.iter().enumerate() {
            max = max.max(v);
            if max == i + 1 {
                let word = self.word[start..=i].iter().map(|x| x - start).collect();
                blocks.push(Permutation { word });
                start = i + 1;
            }
        }
        blocks
    }

    pub fn is_indecomposable(&self) -> bool {
        self.direct_sum_decompose().len() == 1
    }

    /// All of `S_n` in lexicographic order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((1..=n).collect()),
        }
    }
}

/// Lexicographic iterator over `S_n`.
pub struct AllPermutations {
    next: Option<Vec<usize>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut w = current.clone();
        let n = w.len();
        if n >= 2 {
            if let Some(i) = (0..n - 1).rev().find(|&i| w[i] < w[i + 1]) {
                let j = (i + 1..n).rev().find(|&j| w[j] > w[i]).unwrap();
                w.swap(i, j);
                w[i + 1..].reverse();
                self.next = Some(w);
            }
        }
        Some(Permutation { word: current })
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(word: Vec<usize>) -> Result<Self> {
        Permutation::new(word)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Vec<usize> {
        p.word
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts contiguous digits (`"426315"`) or a comma/space separated
    /// list (`"4,2,6,3,1,5"`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let word: Vec<usize> = if s.contains(',') || s.contains(char::is_whitespace) {
            s.split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| invalid(format!("bad permutation entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| invalid(format!("bad permutation digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.size() <= 9 { "" } else { "," };
        let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// `c_i = #{j > i : w_j < w_i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LehmerCode {
    pub entries: Vec<usize>,
}

impl LehmerCode {
    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.entries.windows(2).all(|p| p[0] >= p[1])
    }

    /// The code read as a partition, when it is weakly decreasing.
    pub fn as_partition(&self) -> Option<Partition> {
        self.is_weakly_decreasing()
            .then(|| Partition::new(self.entries.clone()).expect("weakly decreasing"))
    }

    /// Inverse of [`Permutation::lehmer_code`].
    pub fn to_permutation(&self) -> Result<Permutation> {
        let n = self.entries.len();
        let mut unused: Vec<usize> = (1..=n).collect();
        let mut word = Vec::with_capacity(n);
        for (i, &c) in self.entries.iter().enumerate() {
            if c > n - 1 - i {
                return Err(invalid(format!(
                    "code entry c_{} = {c} exceeds {}",
                    i + 1,
                    n - 1 - i
                )));
            }
            word.push(unused.remove(c));
        }
        Permutation::new(word)
    }
}

impl fmt::Display for LehmerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// The unique permutation of `S_n` whose Lehmer code is `λ` padded with
/// zeros. It is 132-avoiding.
pub fn dominant_from_partition(lambda: &Partition, n: usize) -> Result<Permutation> {
    let parts = lambda.nonzero_parts();
    if n == 0 || parts.len() > n {
        return Err(invalid(format!("{lambda} does not fit in S_{n}")));
    }
    for (i, &p) in parts.iter().enumerate() {
        if p > n - 1 - i {
            return Err(invalid(format!("{lambda} does not fit in S_{n}")));
        }
    }
    let mut entries = parts.to_vec();
    entries.resize(n, 0);
    LehmerCode { entries }.to_permutation()
}

/// A word in the generators `s_1, …, s_{n-1}` of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ReducedWord {
    pub letters: Vec<usize>,
    pub n: usize,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>, n: usize) -> Result<Self> {
        if let Some(&a) = letters.iter().find(|&&a| a == 0 || a >= n) {
            return Err(invalid(format!("letter {a} is not a generator of S_{n}")));
        }
        Ok(ReducedWord { letters, n })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn evaluate(&self) -> Permutation {
        evaluate_word(&self.letters, self.n).expect("letters validated on construction")
    }

    pub fn is_reduced(&self) -> bool {
        self.evaluate().length() == self.len()
    }

    pub fn reversed(&self) -> ReducedWord {
        let mut letters = self.letters.clone();
        letters.reverse();
        ReducedWord { letters, n: self.n }
    }

    pub fn ends_with(&self, suffix: &[usize]) -> bool {
        self.letters.ends_with(suffix)
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|a| a.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({self} in S_{})", self.n)
    }
}

/// Product of the generators in `letters`, right-multiplied onto the
/// identity of `S_n` one at a time.
pub fn evaluate_word(letters: &[usize], n: usize) -> Result<Permutation> {
    if n == 0 {
        return Err(invalid("S_0 is not supported"));
    }
    let mut word: Vec<usize> = (1..=n).collect();
    for &a in letters {
        if a == 0 || a >= n {
            return Err(invalid(format!("letter {a} is not a generator of S_{n}")));
        }
        word.swap(a - 1, a);
    }
    Ok(Permutation { word })
}

/// Memoized `|R(w)| = Σ_{j descent} |R(w s_j)|`.
#[derive(Default)]
pub struct ReducedWordCounter {
    memo: HashMap<Vec<usize>, BigUint>,
}

impl ReducedWordCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&mut self, w: &Permutation) -> BigUint {
        if w.is_identity() {
            return BigUint::one();
        }
        if let Some(c) = self.memo.get(&w.word) {
            return c.clone();
        }
        let mut total = BigUint::zero();
        for j in w.descents() {
            let shorter = w.mul_right(j).expect("descent index in range");
            total += self.count(&shorter);
        }
        self.memo.insert(w.word.clone(), total.clone());
        total
    }
}

pub fn count_reduced_words(w: &Permutation) -> BigUint {
    ReducedWordCounter::new().count(w)
}

/// Default upper bound on the number of words `enumerate_reduced_words`
/// will materialise.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

/// All reduced words of `w` in lexicographic order.
pub fn enumerate_reduced_words(w: &Permutation, cap: usize) -> Result<Vec<ReducedWord>> {
    let total = count_reduced_words(w);
    if total > BigUint::from(cap) {
        return Err(Error::ResourceCap(format!(
            "{w} has {total} reduced words, above the cap of {cap}"
        )));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(w.length());
    collect_words(w, &mut prefix, &mut out);
    Ok(out)
}

fn collect_words(w: &Permutation, prefix: &mut Vec<usize>, out: &mut Vec<ReducedWord>) {
    if w.is_identity() {
        out.push(ReducedWord {
            letters: prefix.clone(),
            n: w.size(),
        });
        return;
    }
    // left descents: i + 1 appears before i
    for i in 1..w.size() {
        if w.position_of(i + 1) < w.position_of(i) {
            prefix.push(i);
            collect_words(&w.mul_left(i).unwrap(), prefix, out);
            prefix.pop();
        }
    }
}
