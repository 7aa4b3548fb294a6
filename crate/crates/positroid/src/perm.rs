//! The finite symmetric group `S_n`: permutations in one-line notation,
//! words in simple transpositions, Bruhat and k-Bruhat orders, Demazure
//! products and rank matrices.
//!
//! Everything is 1-based: `w.get(j)` is the image of `j`, and the simple
//! transposition `s_i` swaps `i` and `i+1`.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A permutation of `[n]` in one-line notation.
///
/// The derived ordering is lexicographic on the one-line notation, which
/// makes every enumeration in the crate deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    /// Builds `j -> images[j-1]`; the images must be a rearrangement of `1..=n`.
    pub fn new(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n == 0 || n > 255 {
            return Err(Error::Invalid(format!(
                "permutation size {n} out of range 1..=255"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in images {
            if v == 0 || v > n || seen[v] {
                return Err(Error::Invalid(format!(
                    "{images:?} is not a permutation of [{n}]"
                )));
            }
            seen[v] = true;
        }
        Ok(Perm(images.iter().map(|&v| v as u8).collect()))
    }

    pub fn identity(n: usize) -> Perm {
        Perm((1..=n as u8).collect())
    }

    /// The longest element `w0: j -> n+1-j`.
    pub fn longest(n: usize) -> Perm {
        Perm((1..=n as u8).rev().collect())
    }

    /// The simple transposition `s_i` in `S_n`.
    pub fn simple(n: usize, i: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} not in S_{n}");
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// The transposition exchanging `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
        let mut p = Perm::identity(n);
        p.0.swap(a - 1, b - 1);
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Image of `j` (1-based).
    pub fn get(&self, j: usize) -> usize {
        self.0[j - 1] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (j, &v) in self.0.iter().enumerate() {
            inv[v as usize - 1] = (j + 1) as u8;
        }
        Perm(inv)
    }

    /// `self ∘ other`, i.e. `j -> self(other(j))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.n() != other.n() {
            return Err(Error::Mismatch(format!(
                "composing permutations of sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(Perm(
            other.0.iter().map(|&j| self.0[j as usize - 1]).collect(),
        ))
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The sorted set `w([i]) = {w(1), ..., w(i)}`.
    pub fn prefix_set(&self, i: usize) -> Vec<usize> {
        let mut s: Vec<usize> = self.0[..i].iter().map(|&v| v as usize).collect();
        s.sort_unstable();
        s
    }

    /// Bruhat order via the componentwise comparison of every prefix set.
    pub fn bruhat_leq(&self, v: &Perm) -> bool {
        if self.n() != v.n() {
            return false;
        }
        let n = self.n();
        // Compare sorted prefixes incrementally.
        let mut a: Vec<u8> = Vec::with_capacity(n);
        let mut b: Vec<u8> = Vec::with_capacity(n);
        for i in 0..n.saturating_sub(1) {
            insert_sorted(&mut a, self.0[i]);
            insert_sorted(&mut b, v.0[i]);
            if a.iter().zip(&b).any(|(x, y)| x > y) {
                return false;
            }
        }
        true
    }

    /// `ℓ(w s_i) < ℓ(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// `ℓ(s_i w) < ℓ(w)`, i.e. `i+1` appears before `i` in one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: u8| self.0.iter().position(|&x| x == v).unwrap();
        pos(i as u8) > pos(i as u8 + 1)
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    /// `w s_i`: swaps positions `i` and `i+1`.
    pub fn times_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.0.swap(i - 1, i);
        p
    }

    /// `s_i w`: swaps the values `i` and `i+1`.
    pub fn simple_times(&self, i: usize) -> Perm {
        Perm(
            self.0
                .iter()
                .map(|&v| {
                    if v as usize == i {
                        v + 1
                    } else if v as usize == i + 1 {
                        v - 1
                    } else {
                        v
                    }
                })
                .collect(),
        )
    }

    /// Demazure product `w * s_i`.
    pub fn demazure_simple(&self, i: usize) -> Perm {
        if self.has_right_descent(i) {
            self.clone()
        } else {
            self.times_simple(i)
        }
    }

    /// True when the only possible descent is at position `k`.
    pub fn is_grassmannian(&self, k: usize) -> bool {
        (1..self.n()).all(|i| i == k || !self.has_right_descent(i))
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (1..=n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }

    /// Bruhat covers `v` of `self` (length one more), obtained by swapping
    /// positions `a < b` with `w(a) < w(b)` and no value in between at
    /// positions strictly between them. Returns `(a, b, cover)` in
    /// lexicographic order of `(a, b)`.
    pub fn upper_covers(&self) -> Vec<(usize, usize, Perm)> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let (x, y) = (self.0[a], self.0[b]);
                if x < y && !self.0[a + 1..b].iter().any(|&c| x < c && c < y) {
                    let mut p = self.clone();
                    p.0.swap(a, b);
                    out.push((a + 1, b + 1, p));
                }
            }
        }
        out
    }
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Componentwise comparison of two equal-size sorted sets:
/// `a ⪯ b` iff `a_r ≤ b_r` for every `r`.
pub fn set_leq(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| x <= y)
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Perm {
    type Err = Error;
    /// Accepts `"2143"` (single digits) or `"10,2,3,..."`.
    fn from_str(s: &str) -> Result<Perm> {
        let s = s.trim();
        let images: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::Parse(format!("bad permutation `{s}`")))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Parse(format!("bad permutation `{s}`")))?
        };
        Perm::new(&images)
    }
}

/// A word `s_{i_1} s_{i_2} ... s_{i_a}` in the simple transpositions of `S_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Word {
    n: usize,
    letters: Vec<usize>,
}

impl Word {
    pub fn new(n: usize, letters: Vec<usize>) -> Result<Word> {
        if let Some(&bad) = letters.iter().find(|&&i| i == 0 || i >= n) {
            return Err(Error::Invalid(format!(
                "letter {bad} out of range for S_{n}"
            )));
        }
        Ok(Word { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The ordinary product `s_{i_1} ⋯ s_{i_a}`.
    pub fn product(&self) -> Perm {
        self.letters
            .iter()
            .fold(Perm::identity(self.n), |w, &i| w.times_simple(i))
    }

    /// The Demazure product, folding `w -> w * s_i` left to right.
    pub fn demazure_product(&self) -> Perm {
        self.letters
            .iter()
            .fold(Perm::identity(self.n), |w, &i| w.demazure_simple(i))
    }

    pub fn is_reduced(&self) -> bool {
        self.product().length() == self.len()
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        assert_eq!(self.n, other.n);
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Word { n: self.n, letters }
    }

    /// Parses `"s2 s1 s2"`, `"2 1 2"` or `"(2,1,2)"`; `"e"` or `""` is empty.
    pub fn parse(n: usize, s: &str) -> Result<Word> {
        let cleaned: String = s
            .chars()
            .map(|c| {
                if c == '(' || c == ')' || c == ',' {
                    ' '
                } else {
                    c
                }
            })
            .collect();
        let mut letters = Vec::new();
        for tok in cleaned.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let t = tok.strip_prefix('s').unwrap_or(tok);
            letters.push(
                t.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad word letter `{tok}`")))?,
            );
        }
        Word::new(n, letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|i| format!("s{i}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Lexicographic iterator over all reduced words of a permutation.
///
/// A word is built from the left: the first letter of a reduced word for `w`
/// is a left descent `i` of `w`, and the rest is a reduced word for `s_i w`.
pub struct ReducedWords {
    n: usize,
    // Each frame: remaining permutation and next candidate letter.
    stack: Vec<(Perm, usize)>,
    prefix: Vec<usize>,
    done: bool,
}

impl ReducedWords {
    pub fn new(w: &Perm) -> ReducedWords {
        ReducedWords {
            n: w.n(),
            stack: vec![(w.clone(), 1)],
            prefix: Vec::new(),
            done: false,
        }
    }
}

impl Iterator for ReducedWords {
    type Item = Word;
    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            let Some((w, next)) = self.stack.last_mut() else {
                self.done = true;
                return None;
            };
            if w.is_identity() {
                let word = Word {
                    n: self.n,
                    letters: self.prefix.clone(),
                };
                self.stack.pop();
                self.prefix.pop();
                return Some(word);
            }
            let mut i = *next;
            while i < self.n && !w.has_left_descent(i) {
                i += 1;
            }
            if i >= self.n {
                self.stack.pop();
                self.prefix.pop();
                continue;
            }
            *next = i + 1;
            let child = w.simple_times(i);
            self.prefix.push(i);
            self.stack.push((child, 1));
        }
    }
}

/// Length above which [`reduced_words`] refuses to materialize the full list.
pub const REDUCED_WORDS_LIST_LIMIT: usize = 12;

/// All reduced words of `w`, in lexicographic order.
///
/// For `ℓ(w) > 12` use [`ReducedWords`] directly.
pub fn reduced_words(w: &Perm) -> Result<Vec<Word>> {
    if w.length() > REDUCED_WORDS_LIST_LIMIT {
        return Err(Error::TooLarge(format!(
            "{w} has length {}; use the ReducedWords iterator",
            w.length()
        )));
    }
    Ok(ReducedWords::new(w).collect())
}

/// One reduced word of `w` (the lexicographically first).
pub fn some_reduced_word(w: &Perm) -> Word {
    let mut letters = Vec::new();
    let mut cur = w.clone();
    while !cur.is_identity() {
        let i = (1..cur.n()).find(|&i| cur.has_left_descent(i)).unwrap();
        letters.push(i);
        cur = cur.simple_times(i);
    }
    Word { n: w.n(), letters }
}

/// The matrix `r[i][j] = #([i] ∩ w[j])` for `0 ≤ i, j ≤ n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankMatrix {
    n: usize,
    r: Vec<Vec<usize>>,
}

impl RankMatrix {
    pub fn of(w: &Perm) -> RankMatrix {
        let n = w.n();
        let mut r = vec![vec![0; n + 1]; n + 1];
        for j in 1..=n {
            let wj = w.get(j);
            for i in 0..=n {
                r[i][j] = r[i][j - 1] + usize::from(wj <= i);
            }
        }
        RankMatrix { n, r }
    }

    /// Wraps a raw table; use [`RankMatrix::is_valid`] to check the axioms.
    pub fn from_entries(r: Vec<Vec<usize>>) -> Result<RankMatrix> {
        let n = r
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::Invalid("empty table".into()))?;
        if r.iter().any(|row| row.len() != n + 1) {
            return Err(Error::Invalid("rank table must be square".into()));
        }
        Ok(RankMatrix { n, r })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.r[i][j]
    }

    pub fn entries(&self) -> &[Vec<usize>] {
        &self.r
    }

    /// Checks the characterization of rank matrices: unit steps along rows
    /// and columns, the boundary values, and the corner condition.
    pub fn is_valid(&self) -> bool {
        let n = self.n;
        let r = &self.r;
        for k in 0..=n {
            if r[k][0] != 0 || r[0][k] != 0 || r[k][n] != k || r[n][k] != k {
                return false;
            }
        }
        for i in 0..n {
            for j in 0..=n {
                if r[i + 1][j] < r[i][j] || r[i + 1][j] > r[i][j] + 1 {
                    return false;
                }
                if r[j][i + 1] < r[j][i] || r[j][i + 1] > r[j][i] + 1 {
                    return false;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let v = r[i + 1][j];
                if v == r[i + 1][j + 1] && v == r[i][j + 1] && r[i][j] != v {
                    return false;
                }
            }
        }
        true
    }

    /// Recovers the permutation: `w(j) = i` exactly where the mixed second
    /// difference at `(i, j)` is one.
    pub fn to_perm(&self) -> Result<Perm> {
        if !self.is_valid() {
            return Err(Error::Invalid("not a rank matrix".into()));
        }
        let n = self.n;
        let r = &self.r;
        let mut images = vec![0; n];
        for j in 1..=n {
            for i in 1..=n {
                if r[i][j] + r[i - 1][j - 1] == r[i - 1][j] + r[i][j - 1] + 1 {
                    images[j - 1] = i;
                }
            }
        }
        Perm::new(&images)
    }
}

/// Convenience wrapper for [`RankMatrix::of`].
pub fn rank_matrix(w: &Perm) -> RankMatrix {
    RankMatrix::of(w)
}

/// True when the Bruhat cover `v -> v'` (swapping positions `a < b`)
/// changes the coset `v (S_k × S_{n-k})`.
fn is_k_cover(a: usize, b: usize, k: usize) -> bool {
    a <= k && k < b
}

/// k-Bruhat order: a chain of Bruhat covers from `u` to `w`, each of which
/// changes the coset modulo `S_k × S_{n-k}`.
pub fn k_bruhat_leq(u: &Perm, w: &Perm, k: usize) -> bool {
    if u.n() != w.n() || k == 0 || k >= u.n() {
        return u == w;
    }
    if u == w {
        return true;
    }
    let target = w.length();
    if !u.bruhat_leq(w) {
        return false;
    }
    let mut seen = HashSet::new();
    let mut queue = VecDeque::from([u.clone()]);
    seen.insert(u.clone());
    while let Some(v) = queue.pop_front() {
        if v.length() >= target {
            continue;
        }
        for (a, b, c) in v.upper_covers() {
            if !is_k_cover(a, b, k) || !c.bruhat_leq(w) {
                continue;
            }
            if &c == w {
                return true;
            }
            if seen.insert(c.clone()) {
                queue.push_back(c);
            }
        }
    }
    false
}

/// A saturated chain in k-Bruhat order together with its edge labels: each
/// step is `v_i = (a_i b_i) v_{i-1}` (swapping the values `a_i < b_i`) and is
/// labeled by `b_i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct KChain {
    pub perms: Vec<Perm>,
    pub labels: Vec<usize>,
}

/// All saturated k-Bruhat chains from `u` to `w`, sorted; empty when
/// `u ⋠_k w`.
pub fn k_chains(u: &Perm, w: &Perm, k: usize) -> Vec<KChain> {
    let mut out = Vec::new();
    if u.n() != w.n() || !u.bruhat_leq(w) {
        return out;
    }
    let mut perms = vec![u.clone()];
    let mut labels = Vec::new();
    chains_rec(w, k, &mut perms, &mut labels, &mut out);
    out.sort();
    out
}

fn chains_rec(
    w: &Perm,
    k: usize,
    perms: &mut Vec<Perm>,
    labels: &mut Vec<usize>,
    out: &mut Vec<KChain>,
) {
    let v = perms.last().unwrap().clone();
    if &v == w {
        out.push(KChain {
            perms: perms.clone(),
            labels: labels.clone(),
        });
        return;
    }
    if v.length() >= w.length() {
        return;
    }
    for (a, b, c) in v.upper_covers() {
        if !is_k_cover(a, b, k) || !c.bruhat_leq(w) {
            continue;
        }
        labels.push(v.get(b));
        perms.push(c);
        chains_rec(w, k, perms, labels, out);
        perms.pop();
        labels.pop();
    }
}

/// The Bruhat interval `[u, w]` as a sorted set.
pub fn bruhat_interval(u: &Perm, w: &Perm) -> BTreeSet<Perm> {
    Perm::all(u.n())
        .into_iter()
        .filter(|v| u.bruhat_leq(v) && v.bruhat_leq(w))
        .collect()
}
