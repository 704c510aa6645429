//! Type `A_n` quivers, adapted reduced words, and orders on positive roots.
//!
//! A quiver of type `A_n` is an orientation of the Dynkin diagram
//! `1 — 2 — ⋯ — n`. We record it as the list of its `n-1` edge directions:
//! edge `m` joins vertices `m` and `m+1`, and points either right
//! (`R`: `m → m+1`) or left (`L`: `m ← m+1`).
//!
//! Each quiver `Q` determines a distinguished reduced word [`word_for_quiver`]
//! for the longest element `w0` of the symmetric group `S_{n+1}`, adapted to
//! `Q` in the sense of sink reflections: reading the word left to right, every
//! letter is a sink of the successively reflected quiver ([`is_compatible`]).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Direction of one edge of an `A_n` quiver.
///
/// Edge `m` joins vertices `m` and `m+1`; `R` orients it `m → m+1`,
/// `L` orients it `m ← m+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeDir {
    /// `m ← m+1`
    L,
    /// `m → m+1`
    R,
}

impl EdgeDir {
    /// The opposite orientation.
    #[must_use]
    pub fn flipped(self) -> Self {
        match self {
            EdgeDir::L => EdgeDir::R,
            EdgeDir::R => EdgeDir::L,
        }
    }
}

/// Error from parsing a quiver orientation string such as `"RLRL"`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverParseError {
    /// A character other than `L` or `R` appeared.
    #[error("invalid edge character {found:?} at position {pos}; expected 'L' or 'R'")]
    BadChar { pos: usize, found: char },
}

/// An orientation of the type `A_n` Dynkin diagram.
///
/// The rank `n` equals the number of edges plus one. The empty edge list is
/// the rank-1 quiver (a single vertex).
///
/// ```
/// use canbase::{EdgeDir, QuiverA};
///
/// let q: QuiverA = "RLRL".parse().unwrap();
/// assert_eq!(q.rank(), 5);
/// assert_eq!(q.edge(2), EdgeDir::L); // 2 ← 3
/// assert!(q.is_sink(2));
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuiverA {
    edges: Vec<EdgeDir>,
}

impl QuiverA {
    /// Quiver with the given edge directions; rank is `edges.len() + 1`.
    #[must_use]
    pub fn new(edges: Vec<EdgeDir>) -> Self {
        QuiverA { edges }
    }

    /// The linearly ordered quiver `1 ← 2 ← ⋯ ← n` (all edges `L`).
    ///
    /// Its adapted word is [`k_word`], and its module category underlies the
    /// Auslander–Reiten combinatorics in [`crate::ar`].
    #[must_use]
    pub fn linear(n: usize) -> Self {
        assert!(n >= 1, "rank must be at least 1");
        QuiverA {
            edges: vec![EdgeDir::L; n - 1],
        }
    }

    /// All `2^(n-1)` orientations of the `A_n` diagram, in lexicographic
    /// order with `L < R`.
    #[must_use]
    pub fn all(n: usize) -> Vec<Self> {
        assert!(n >= 1, "rank must be at least 1");
        let m = n - 1;
        (0..1u32 << m)
            .map(|bits| {
                let edges = (0..m)
                    .map(|e| {
                        if bits >> (m - 1 - e) & 1 == 1 {
                            EdgeDir::R
                        } else {
                            EdgeDir::L
                        }
                    })
                    .collect();
                QuiverA { edges }
            })
            .collect()
    }

    /// Number of vertices `n`.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.edges.len() + 1
    }

    /// Edge directions, edge `m` at index `m-1`.
    #[must_use]
    pub fn edges(&self) -> &[EdgeDir] {
        &self.edges
    }

    /// Direction of edge `m` (joining vertices `m` and `m+1`), `1 <= m < n`.
    #[must_use]
    pub fn edge(&self, m: usize) -> EdgeDir {
        assert!(
            (1..self.rank()).contains(&m),
            "edge index {m} out of range 1..{}",
            self.rank()
        );
        self.edges[m - 1]
    }

    /// Whether vertex `v` is a sink (every incident edge points into `v`).
    #[must_use]
    pub fn is_sink(&self, v: usize) -> bool {
        let n = self.rank();
        assert!((1..=n).contains(&v), "vertex {v} out of range 1..={n}");
        let left_ok = v == 1 || self.edge(v - 1) == EdgeDir::R;
        let right_ok = v == n || self.edge(v) == EdgeDir::L;
        left_ok && right_ok
    }

    /// The quiver with every edge incident to `v` reversed (the reflection
    /// functor move at a sink or source).
    #[must_use]
    pub fn reflected(&self, v: usize) -> Self {
        let n = self.rank();
        assert!((1..=n).contains(&v), "vertex {v} out of range 1..={n}");
        let mut edges = self.edges.clone();
        if v > 1 {
            edges[v - 2] = edges[v - 2].flipped();
        }
        if v < n {
            edges[v - 1] = edges[v - 1].flipped();
        }
        QuiverA { edges }
    }

    /// Edge numbers with direction `L`, ascending.
    #[must_use]
    pub fn left_edges(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&m| self.edge(m) == EdgeDir::L)
            .collect()
    }

    /// Edge numbers with direction `R`, ascending.
    #[must_use]
    pub fn right_edges(&self) -> Vec<usize> {
        (1..self.rank())
            .filter(|&m| self.edge(m) == EdgeDir::R)
            .collect()
    }
}

impl fmt::Display for QuiverA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.edges {
            f.write_str(match e {
                EdgeDir::L => "L",
                EdgeDir::R => "R",
            })?;
        }
        Ok(())
    }
}

impl FromStr for QuiverA {
    type Err = QuiverParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let edges = s
            .chars()
            .enumerate()
            .map(|(pos, c)| match c {
                'L' | 'l' => Ok(EdgeDir::L),
                'R' | 'r' => Ok(EdgeDir::R),
                found => Err(QuiverParseError::BadChar { pos, found }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(QuiverA { edges })
    }
}

/// Error from validating a word as a reduced word for the longest element.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    /// A letter was outside `1..=n`.
    #[error("letter {letter} at position {pos} is out of range 1..={rank}")]
    LetterOutOfRange { pos: usize, letter: usize, rank: usize },
    /// The word does not have the length `n(n+1)/2` of the longest element.
    #[error("word has length {found}, but reduced words for w0 in rank {rank} have length {expected}")]
    WrongLength {
        rank: usize,
        found: usize,
        expected: usize,
    },
    /// Some prefix already fails to be reduced; `prefix_len` is the length of
    /// the shortest non-reduced prefix.
    #[error("word is not reduced: the prefix of length {prefix_len} repeats a Weyl group element")]
    NotReduced { prefix_len: usize },
    /// The word is reduced but its product is not the longest element.
    #[error("word is reduced but its product is not the longest element w0")]
    NotLongest,
}

/// A validated reduced word for the longest element `w0` of `S_{n+1}`.
///
/// Letters are `1..=n`, the length is `n(n+1)/2`, every prefix is reduced,
/// and the product of the simple reflections is `w0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReducedWord {
    rank: usize,
    letters: Vec<usize>,
}

impl ReducedWord {
    /// Validate `letters` as a reduced word for `w0` in rank `rank`.
    ///
    /// ```
    /// use canbase::{ReducedWord, WordError};
    ///
    /// assert!(ReducedWord::new(2, vec![1, 2, 1]).is_ok());
    /// assert_eq!(
    ///     ReducedWord::new(2, vec![1, 1, 2]).unwrap_err(),
    ///     WordError::NotReduced { prefix_len: 2 },
    /// );
    /// assert_eq!(
    ///     ReducedWord::new(2, vec![1, 2]).unwrap_err(),
    ///     WordError::WrongLength { rank: 2, found: 2, expected: 3 },
    /// );
    /// ```
    pub fn new(rank: usize, letters: Vec<usize>) -> Result<Self, WordError> {
        assert!(rank >= 1, "rank must be at least 1");
        for (pos, &letter) in letters.iter().enumerate() {
            if !(1..=rank).contains(&letter) {
                return Err(WordError::LetterOutOfRange { pos, letter, rank });
            }
        }
        let expected = rank * (rank + 1) / 2;
        if letters.len() != expected {
            return Err(WordError::WrongLength {
                rank,
                found: letters.len(),
                expected,
            });
        }
        // Multiply simple reflections left to right through the permutation
        // w: {1..n+1} → {1..n+1}. Right multiplication by s_i increases
        // length exactly when w(i) < w(i+1).
        let mut w: Vec<usize> = (1..=rank + 1).collect();
        for (pos, &i) in letters.iter().enumerate() {
            if w[i - 1] > w[i] {
                return Err(WordError::NotReduced { prefix_len: pos + 1 });
            }
            w.swap(i - 1, i);
        }
        if !w.iter().enumerate().all(|(k, &v)| v == rank + 1 - k) {
            return Err(WordError::NotLongest);
        }
        Ok(ReducedWord { rank, letters })
    }

    /// Rank `n` of the ambient `A_n`.
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// The letters, each in `1..=n`.
    #[must_use]
    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    /// Word length `n(n+1)/2`.
    #[must_use]
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Reduced words are never empty (rank ≥ 1).
    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let strs: Vec<String> = self.letters.iter().map(|i| i.to_string()).collect();
        write!(f, "({})", strs.join(","))
    }
}

/// The reduced word for `w0` adapted to the quiver `Q`.
///
/// With `l_1 < ⋯ < l_a` the `L`-edges and `r_1 < ⋯ < r_b` the `R`-edges
/// of `Q`, the word is the concatenation
///
/// ```text
/// (l_1 ↘ 1)(l_2 ↘ 1)⋯(l_a ↘ 1) (n ↘ 1) (n ↘ n+1-r_b)⋯(n ↘ n+1-r_1)
/// ```
///
/// where `(p ↘ q)` denotes the descending run `p, p-1, …, q`.
///
/// ```
/// use canbase::{word_for_quiver, QuiverA};
///
/// let q: QuiverA = "RLRL".parse().unwrap();
/// assert_eq!(
///     word_for_quiver(&q).letters(),
///     &[2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 5],
/// );
/// ```
#[must_use]
pub fn word_for_quiver(q: &QuiverA) -> ReducedWord {
    let n = q.rank();
    let mut letters = Vec::with_capacity(n * (n + 1) / 2);
    for l in q.left_edges() {
        letters.extend((1..=l).rev());
    }
    letters.extend((1..=n).rev());
    for r in q.right_edges().into_iter().rev() {
        letters.extend((n + 1 - r..=n).rev());
    }
    ReducedWord::new(n, letters).expect("adapted word is a reduced word for w0")
}

/// The column word `k = (1, 2,1, 3,2,1, …, n,…,1)`, adapted to the linearly
/// ordered quiver [`QuiverA::linear`].
#[must_use]
pub fn k_word(n: usize) -> ReducedWord {
    assert!(n >= 1, "rank must be at least 1");
    let mut letters = Vec::with_capacity(n * (n + 1) / 2);
    for j in 1..=n {
        letters.extend((1..=j).rev());
    }
    ReducedWord::new(n, letters).expect("column word is a reduced word for w0")
}

/// Whether the word is adapted to `q`: reading left to right, each letter is
/// a sink of the successively reflected quiver.
///
/// ```
/// use canbase::{is_compatible, k_word, word_for_quiver, QuiverA};
///
/// let q: QuiverA = "RR".parse().unwrap();
/// assert!(is_compatible(&q, word_for_quiver(&q).letters()));
/// assert!(!is_compatible(&q, k_word(3).letters()));
/// ```
#[must_use]
pub fn is_compatible(q: &QuiverA, word: &[usize]) -> bool {
    let n = q.rank();
    let mut cur = q.clone();
    for &i in word {
        if !(1..=n).contains(&i) || !cur.is_sink(i) {
            return false;
        }
        cur = cur.reflected(i);
    }
    true
}

/// A positive root of `A_n`: the interval `[lo, hi]`, i.e.
/// `α_lo + α_{lo+1} + ⋯ + α_hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootInterval {
    lo: usize,
    hi: usize,
}

impl RootInterval {
    /// The root `[lo, hi]`; requires `1 <= lo <= hi`.
    #[must_use]
    pub fn new(lo: usize, hi: usize) -> Self {
        assert!(1 <= lo && lo <= hi, "bad interval [{lo},{hi}]");
        RootInterval { lo, hi }
    }

    /// Left endpoint.
    #[must_use]
    pub fn lo(self) -> usize {
        self.lo
    }

    /// Right endpoint.
    #[must_use]
    pub fn hi(self) -> usize {
        self.hi
    }

    /// Number of simple roots in the support.
    #[must_use]
    pub fn len(self) -> usize {
        self.hi - self.lo + 1
    }

    /// Intervals are never empty.
    #[must_use]
    pub fn is_empty(self) -> bool {
        false
    }

    /// Whether vertex `v` lies in the support `lo..=hi`.
    #[must_use]
    pub fn contains(self, v: usize) -> bool {
        (self.lo..=self.hi).contains(&v)
    }

    /// Index of this root in the column order
    /// `[1,1], [1,2], [2,2], [1,3], [2,3], [3,3], …`
    /// (all roots with `hi = j` listed by ascending `lo`, columns by
    /// ascending `j`). This is the coordinate order used by
    /// [`crate::Triangle`] and every cone in [`crate::cone`].
    #[must_use]
    pub fn triangle_index(self) -> usize {
        self.hi * (self.hi - 1) / 2 + self.lo - 1
    }

    /// Inverse of [`RootInterval::triangle_index`] in rank `n`.
    #[must_use]
    pub fn from_triangle_index(idx: usize, n: usize) -> Self {
        let mut hi = 1;
        while hi * (hi + 1) / 2 <= idx {
            hi += 1;
        }
        assert!(hi <= n, "triangle index {idx} out of range for rank {n}");
        let lo = idx - hi * (hi - 1) / 2 + 1;
        RootInterval::new(lo, hi)
    }

    /// All positive roots of `A_n` in column order.
    #[must_use]
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::with_capacity(n * (n + 1) / 2);
        for hi in 1..=n {
            for lo in 1..=hi {
                out.push(RootInterval::new(lo, hi));
            }
        }
        out
    }
}

impl fmt::Display for RootInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// The total order `α^1, …, α^N` on positive roots induced by a reduced word:
/// `α^j = s_{i_1} ⋯ s_{i_{j-1}} (α_{i_j})`.
///
/// Simple reflections act on root coefficient vectors through the `A_n`
/// Cartan matrix: `s_i(α) = α − ⟨α, α_i^∨⟩ α_i`. For a reduced word of `w0`
/// this enumerates every positive root exactly once.
///
/// ```
/// use canbase::{k_word, roots_order, RootInterval};
///
/// let order = roots_order(&k_word(3));
/// let pretty: Vec<String> = order.iter().map(|r| r.to_string()).collect();
/// assert_eq!(pretty, ["[1,1]", "[1,2]", "[2,2]", "[1,3]", "[2,3]", "[3,3]"]);
/// ```
#[must_use]
pub fn roots_order(word: &ReducedWord) -> Vec<RootInterval> {
    let n = word.rank();
    // Coefficient vector of a root in the basis of simple roots.
    let simple = |i: usize| -> Vec<i64> {
        let mut c = vec![0i64; n];
        c[i - 1] = 1;
        c
    };
    let pairing = |c: &[i64], i: usize| -> i64 {
        // ⟨α, α_i^∨⟩ with the A_n Cartan matrix.
        let mut v = 2 * c[i - 1];
        if i >= 2 {
            v -= c[i - 2];
        }
        if i < n {
            v -= c[i];
        }
        v
    };
    let mut out = Vec::with_capacity(word.len());
    for (j, &ij) in word.letters().iter().enumerate() {
        let mut c = simple(ij);
        for &i in word.letters()[..j].iter().rev() {
            let p = pairing(&c, i);
            c[i - 1] -= p;
        }
        out.push(coeffs_to_interval(&c));
    }
    out
}

fn coeffs_to_interval(c: &[i64]) -> RootInterval {
    let lo = c.iter().position(|&x| x == 1).expect("positive root") + 1;
    let hi = c.iter().rposition(|&x| x == 1).expect("positive root") + 1;
    assert!(
        c.iter()
            .enumerate()
            .all(|(k, &x)| x == i64::from((lo..=hi).contains(&(k + 1)))),
        "coefficient vector {c:?} is not an interval root"
    );
    RootInterval::new(lo, hi)
}

/// Lexicographic normal form of the commutation class of `word`.
///
/// Two positions are *dependent* when their letters differ by at most one
/// (equal letters included); commutation moves permute independent adjacent
/// positions. The normal form greedily emits, among the positions all of
/// whose earlier dependent positions are already emitted, the one with the
/// smallest letter. Two words are related by commutation moves exactly when
/// their normal forms agree.
#[must_use]
pub fn commutation_normal_form(word: &[usize]) -> Vec<usize> {
    let mut remaining: Vec<usize> = word.to_vec();
    let mut out = Vec::with_capacity(word.len());
    while !remaining.is_empty() {
        // A position is available when no earlier remaining position is
        // dependent on it. Among available positions letters are distinct
        // (equal letters are dependent), so the minimum is unique.
        let mut best: Option<(usize, usize)> = None; // (letter, index)
        'scan: for (idx, &letter) in remaining.iter().enumerate() {
            for &earlier in &remaining[..idx] {
                if earlier.abs_diff(letter) <= 1 {
                    continue 'scan;
                }
            }
            if best.is_none_or(|(bl, _)| letter < bl) {
                best = Some((letter, idx));
            }
        }
        let (letter, idx) = best.expect("nonempty word has an available position");
        remaining.remove(idx);
        out.push(letter);
    }
    out
}

/// Whether two words are related by a sequence of commutation moves
/// (swaps of adjacent letters differing by at least two).
///
/// ```
/// use canbase::commutation_equivalent;
///
/// assert!(commutation_equivalent(&[1, 3, 1], &[3, 1, 1]));
/// assert!(!commutation_equivalent(&[1, 2, 1], &[2, 1, 2]));
/// ```
#[must_use]
pub fn commutation_equivalent(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && commutation_normal_form(a) == commutation_normal_form(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, VecDeque};

    fn q(s: &str) -> QuiverA {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["", "L", "R", "RLRL", "LLLL", "RRRRR"] {
            assert_eq!(q(s).to_string(), s);
        }
        assert_eq!(
            "RXL".parse::<QuiverA>(),
            Err(QuiverParseError::BadChar { pos: 1, found: 'X' })
        );
    }

    #[test]
    fn all_quivers_count_and_order() {
        let all = QuiverA::all(3);
        let strs: Vec<String> = all.iter().map(|q| q.to_string()).collect();
        assert_eq!(strs, ["LL", "LR", "RL", "RR"]);
        assert_eq!(QuiverA::all(5).len(), 16);
        assert_eq!(QuiverA::all(1), vec![QuiverA::new(vec![])]);
    }

    #[test]
    fn sinks_and_reflections() {
        let rlrl = q("RLRL");
        // 1 → 2 ← 3 → 4 ← 5: sinks are 2 and 4.
        let sinks: Vec<usize> = (1..=5).filter(|&v| rlrl.is_sink(v)).collect();
        assert_eq!(sinks, [2, 4]);
        assert_eq!(rlrl.reflected(2), q("LRRL"));
        assert_eq!(rlrl.reflected(4), q("RLLR"));
        // Linear quiver: unique sink at 1.
        let lin = QuiverA::linear(4);
        let sinks: Vec<usize> = (1..=4).filter(|&v| lin.is_sink(v)).collect();
        assert_eq!(sinks, [1]);
    }

    #[test]
    fn adapted_word_examples() {
        assert_eq!(
            word_for_quiver(&q("RLRL")).letters(),
            [2, 1, 4, 3, 2, 1, 5, 4, 3, 2, 1, 5, 4, 3, 5]
        );
        assert_eq!(word_for_quiver(&q("RR")).letters(), [3, 2, 1, 3, 2, 3]);
        assert_eq!(word_for_quiver(&q("R")).letters(), [2, 1, 2]);
        assert_eq!(word_for_quiver(&q("LL")).letters(), [1, 2, 1, 3, 2, 1]);
        assert_eq!(word_for_quiver(&QuiverA::new(vec![])).letters(), [1]);
    }

    #[test]
    fn k_word_is_adapted_to_linear_quiver() {
        for n in 1..=6 {
            assert_eq!(k_word(n), word_for_quiver(&QuiverA::linear(n)));
        }
        assert_eq!(k_word(3).letters(), [1, 2, 1, 3, 2, 1]);
    }

    #[test]
    fn adapted_words_are_compatible() {
        for n in 1..=6 {
            for qv in QuiverA::all(n) {
                let w = word_for_quiver(&qv);
                assert!(is_compatible(&qv, w.letters()), "quiver {qv}");
            }
        }
    }

    #[test]
    fn k_word_not_compatible_with_other_orientations() {
        assert!(!is_compatible(&q("RR"), k_word(3).letters()));
        assert!(!is_compatible(&q("RL"), k_word(3).letters()));
        assert!(is_compatible(&q("LL"), k_word(3).letters()));
    }

    #[test]
    fn word_validation_errors() {
        assert_eq!(
            ReducedWord::new(2, vec![1, 2, 3]).unwrap_err(),
            WordError::LetterOutOfRange {
                pos: 2,
                letter: 3,
                rank: 2
            }
        );
        assert_eq!(
            ReducedWord::new(3, vec![1, 2, 1]).unwrap_err(),
            WordError::WrongLength {
                rank: 3,
                found: 3,
                expected: 6
            }
        );
        assert_eq!(
            ReducedWord::new(2, vec![2, 1, 1]).unwrap_err(),
            WordError::NotReduced { prefix_len: 3 }
        );
        // (1,2,1,2,3,1) has the non-reduced prefix (1,2,1,2) of length 4.
        assert_eq!(
            ReducedWord::new(3, vec![1, 2, 1, 2, 3, 1]).unwrap_err(),
            WordError::NotReduced { prefix_len: 4 }
        );
    }

    #[test]
    fn root_order_of_column_word() {
        let order = roots_order(&k_word(4));
        let expect: Vec<RootInterval> = RootInterval::all(4);
        assert_eq!(order, expect, "column word lists roots in column order");
    }

    #[test]
    fn root_order_of_rlrl_prefix() {
        let order = roots_order(&word_for_quiver(&q("RLRL")));
        let pretty: Vec<String> = order[..5].iter().map(|r| r.to_string()).collect();
        assert_eq!(pretty, ["[2,2]", "[1,2]", "[4,4]", "[2,4]", "[1,4]"]);
    }

    #[test]
    fn root_order_is_a_bijection_onto_positive_roots() {
        for n in 1..=5 {
            for qv in QuiverA::all(n) {
                let order = roots_order(&word_for_quiver(&qv));
                let seen: BTreeSet<RootInterval> = order.iter().copied().collect();
                assert_eq!(seen.len(), n * (n + 1) / 2);
                assert_eq!(seen, RootInterval::all(n).into_iter().collect());
            }
        }
    }

    #[test]
    fn triangle_index_round_trip() {
        for n in 1..=6 {
            for (idx, r) in RootInterval::all(n).into_iter().enumerate() {
                assert_eq!(r.triangle_index(), idx);
                assert_eq!(RootInterval::from_triangle_index(idx, n), r);
            }
        }
    }

    /// Breadth-first search over single commutation moves; exponential-size
    /// oracle used to validate the normal-form shortcut on small words.
    fn bfs_commutation_class(word: &[usize]) -> BTreeSet<Vec<usize>> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(w) = queue.pop_front() {
            for p in 0..w.len().saturating_sub(1) {
                if w[p].abs_diff(w[p + 1]) >= 2 {
                    let mut v = w.clone();
                    v.swap(p, p + 1);
                    if seen.insert(v.clone()) {
                        queue.push_back(v);
                    }
                }
            }
        }
        seen
    }

    #[test]
    fn commutation_normal_form_matches_bfs_oracle() {
        let words: Vec<Vec<usize>> = vec![
            vec![1, 2, 1, 3, 2, 1],
            vec![2, 1, 3, 2, 1, 3],
            vec![3, 1, 2, 3, 1, 2],
            word_for_quiver(&q("RL")).letters().to_vec(),
            word_for_quiver(&q("RR")).letters().to_vec(),
        ];
        for w in &words {
            let class = bfs_commutation_class(w);
            let nf = commutation_normal_form(w);
            for v in &class {
                assert_eq!(commutation_normal_form(v), nf, "word {v:?} in class of {w:?}");
                assert!(commutation_equivalent(v, w));
            }
            // The normal form itself belongs to the class.
            assert!(class.contains(&nf));
        }
        // Distinct classes stay distinct.
        assert!(!commutation_equivalent(&[1, 2, 1], &[2, 1, 2]));
        assert!(!commutation_equivalent(&[1, 2], &[1, 2, 1]));
    }

    #[test]
    fn adapted_words_of_distinct_quivers_are_inequivalent() {
        let quivers = QuiverA::all(4);
        for (i, qa) in quivers.iter().enumerate() {
            for qb in &quivers[i + 1..] {
                assert!(
                    !commutation_equivalent(
                        word_for_quiver(qa).letters(),
                        word_for_quiver(qb).letters()
                    ),
                    "{qa} vs {qb}"
                );
            }
        }
    }
}
