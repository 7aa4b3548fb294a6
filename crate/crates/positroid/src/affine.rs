//! Affine permutations and the four interchangeable indexings of positroid
//! cells: bounded affine permutations, cyclic rank matrices, Grassmann
//! necklaces and decorated permutations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{k_bruhat_leq, Perm};

/// A bijection `f: Z -> Z` with `f(i + n) = f(i) + n`, stored by its window
/// `[f(1), ..., f(n)]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePerm {
    window: Vec<i64>,
}

impl AffinePerm {
    pub fn new(window: Vec<i64>) -> Result<AffinePerm> {
        let n = window.len() as i64;
        if n == 0 {
            return Err(Error::Invalid("empty window".into()));
        }
        let mut seen = vec![false; n as usize];
        for &v in &window {
            let r = v.rem_euclid(n) as usize;
            if seen[r] {
                return Err(Error::Invalid(format!(
                    "window {window:?} repeats a residue mod {n}"
                )));
            }
            seen[r] = true;
        }
        let shift: i64 = window
            .iter()
            .enumerate()
            .map(|(j, &v)| v - (j as i64 + 1))
            .sum();
        if shift % n != 0 {
            return Err(Error::Invalid(format!(
                "window {window:?} has non-integral displacement"
            )));
        }
        Ok(AffinePerm { window })
    }

    /// The period.
    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    /// `f(i)` for any integer `i`.
    pub fn get(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n);
        let q = (i - 1 - r) / n;
        self.window[r as usize] + q * n
    }

    /// `(1/n) Σ_{j=1}^{n} (f(j) - j)`.
    pub fn displacement(&self) -> i64 {
        let n = self.n() as i64;
        let s: i64 = self
            .window
            .iter()
            .enumerate()
            .map(|(j, &v)| v - (j as i64 + 1))
            .sum();
        s / n
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &AffinePerm) -> Result<AffinePerm> {
        if self.n() != other.n() {
            return Err(Error::Mismatch(
                "affine permutations of different periods".into(),
            ));
        }
        AffinePerm::new(other.window.iter().map(|&j| self.get(j)).collect())
    }

    pub fn inverse(&self) -> AffinePerm {
        let n = self.n() as i64;
        let mut inv = vec![0; self.n()];
        for (j, &v) in self.window.iter().enumerate() {
            // f(j+1) = v, so f^{-1}(v) = j+1 and f^{-1}(v mod n) shifts accordingly.
            let r = (v - 1).rem_euclid(n);
            let q = (v - 1 - r) / n;
            inv[r as usize] = j as i64 + 1 - q * n;
        }
        AffinePerm { window: inv }
    }

    /// The shift `ζ_k(i) = i + k`.
    pub fn shift(n: usize, k: i64) -> AffinePerm {
        AffinePerm {
            window: (1..=n as i64).map(|i| i + k).collect(),
        }
    }

    /// `ω_k(i) = i + n` for `i ≡ 1..k`, `i` otherwise.
    pub fn omega(n: usize, k: usize) -> AffinePerm {
        AffinePerm {
            window: (1..=n as i64)
                .map(|i| if i <= k as i64 { i + n as i64 } else { i })
                .collect(),
        }
    }

    /// Embeds a finite permutation as an affine permutation of displacement 0.
    pub fn from_perm(w: &Perm) -> AffinePerm {
        AffinePerm {
            window: w.images().into_iter().map(|v| v as i64).collect(),
        }
    }

    /// `#{(i, j) : 1 ≤ i ≤ n, i < j, f(i) > f(j)}`, the Coxeter length on the
    /// displacement-zero subgroup.
    pub fn inversions(&self) -> usize {
        let n = self.n() as i64;
        let mut count = 0usize;
        for i in 1..=n {
            let fi = self.get(i);
            for jr in 1..=n {
                // j = jr + m n with j > i and f(jr) + m n < f(i).
                let mut m = if jr > i { 0 } else { (i - jr) / n + 1 };
                while self.get(jr) + m * n < fi {
                    count += 1;
                    m += 1;
                }
            }
        }
        count
    }

    /// True when `i ≤ f(i) ≤ i + n` for all `i`.
    pub fn is_bounded(&self) -> bool {
        let n = self.n() as i64;
        self.window
            .iter()
            .enumerate()
            .all(|(j, &v)| (j as i64 + 1) <= v && v <= j as i64 + 1 + n)
    }
}

impl fmt::Display for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for AffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for AffinePerm {
    type Err = Error;
    /// Accepts `"[4,3,6,5]"`, or `"[243]"` when every entry is a single digit.
    fn from_str(s: &str) -> Result<AffinePerm> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .unwrap_or(s.trim());
        let bad = || Error::Parse(format!("bad window `{s}`"));
        let window: Vec<i64> = if inner.contains(',') {
            inner
                .split(',')
                .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            inner
                .chars()
                .map(|c| c.to_digit(10).map(i64::from).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        AffinePerm::new(window)
    }
}

/// An affine permutation with `i ≤ f(i) ≤ i + n`; its displacement `k`
/// satisfies `0 ≤ k ≤ n` and it indexes a positroid cell of `G(k, n)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundedAffinePerm(AffinePerm);

impl BoundedAffinePerm {
    pub fn new(f: AffinePerm) -> Result<BoundedAffinePerm> {
        if !f.is_bounded() {
            return Err(Error::Invalid(format!("{f} is not bounded")));
        }
        Ok(BoundedAffinePerm(f))
    }

    pub fn from_window(window: Vec<i64>) -> Result<BoundedAffinePerm> {
        BoundedAffinePerm::new(AffinePerm::new(window)?)
    }

    pub fn affine(&self) -> &AffinePerm {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.n()
    }

    pub fn k(&self) -> usize {
        self.0.displacement() as usize
    }

    pub fn get(&self, i: i64) -> i64 {
        self.0.get(i)
    }

    pub fn window(&self) -> &[i64] {
        self.0.window()
    }

    /// `ω_k`, the bounded affine permutation of the top cell pair `(e, e)`.
    pub fn omega(n: usize, k: usize) -> BoundedAffinePerm {
        BoundedAffinePerm(AffinePerm::omega(n, k))
    }

    /// Every element of `Bound(k, n)`, sorted by window.
    pub fn all(k: usize, n: usize) -> Vec<BoundedAffinePerm> {
        let mut out = Vec::new();
        let mut window = Vec::with_capacity(n);
        let mut used = vec![false; n];
        enumerate_bounded(n, k, &mut window, &mut used, &mut out);
        out.sort();
        out
    }
}

fn enumerate_bounded(
    n: usize,
    k: usize,
    window: &mut Vec<i64>,
    used: &mut [bool],
    out: &mut Vec<BoundedAffinePerm>,
) {
    let i = window.len() as i64 + 1;
    if window.len() == n {
        let f = AffinePerm {
            window: window.clone(),
        };
        if f.displacement() == k as i64 {
            out.push(BoundedAffinePerm(f));
        }
        return;
    }
    for v in i..=i + n as i64 {
        let r = (v - 1).rem_euclid(n as i64) as usize;
        if used[r] {
            continue;
        }
        used[r] = true;
        window.push(v);
        enumerate_bounded(n, k, window, used, out);
        window.pop();
        used[r] = false;
    }
}

impl fmt::Display for BoundedAffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for BoundedAffinePerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl FromStr for BoundedAffinePerm {
    type Err = Error;
    fn from_str(s: &str) -> Result<BoundedAffinePerm> {
        BoundedAffinePerm::new(s.parse()?)
    }
}

/// `f = u ω_k w^{-1}` for a pair `u ⪯_k w`.
pub fn from_pair(u: &Perm, w: &Perm, k: usize) -> Result<BoundedAffinePerm> {
    if u.n() != w.n() {
        return Err(Error::Mismatch("pair of different sizes".into()));
    }
    if k > u.n() {
        return Err(Error::Invalid(format!("k = {k} exceeds n = {}", u.n())));
    }
    if !k_bruhat_leq(u, w, k) {
        return Err(Error::Precondition(format!(
            "{u} is not below {w} in {k}-Bruhat order"
        )));
    }
    let n = u.n() as i64;
    let winv = w.inverse();
    let window = (1..=u.n())
        .map(|i| {
            let j = winv.get(i);
            u.get(j) as i64 + if j <= k { n } else { 0 }
        })
        .collect();
    BoundedAffinePerm::from_window(window)
}

/// The unique pair `(u, w)` with `w` Grassmannian (descents only at `k`),
/// `u ⪯ w` and `u ω_k w^{-1} = f`, found by searching over the `k`-subsets
/// `w[k]`.
pub fn pair_from_f(f: &BoundedAffinePerm) -> Result<(Perm, Perm)> {
    let n = f.n();
    let k = f.k();
    for set in k_subsets(n, k) {
        let mut images = set.clone();
        images.extend((1..=n).filter(|x| !set.contains(x)));
        let w = Perm::new(&images)?;
        let u_images: Vec<i64> = (1..=n)
            .map(|m| f.get(w.get(m) as i64) - if m <= k { n as i64 } else { 0 })
            .collect();
        if u_images.iter().any(|&v| v < 1 || v > n as i64) {
            continue;
        }
        let u_vec: Vec<usize> = u_images.iter().map(|&v| v as usize).collect();
        let Ok(u) = Perm::new(&u_vec) else { continue };
        if u.bruhat_leq(&w) {
            return Ok((u, w));
        }
    }
    Err(Error::Invalid(format!("no pair represents {f}")))
}

/// All `k`-subsets of `[n]` in lexicographic order, as sorted vectors.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if n + 1 - x < k - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(1, n, k, &mut cur, &mut out);
    out
}

/// `ℓ(ζ_k^{-1} f)`, the inversion count after shifting to displacement 0.
pub fn affine_length(f: &BoundedAffinePerm) -> usize {
    let g = AffinePerm::shift(f.n(), -(f.k() as i64))
        .compose(f.affine())
        .expect("same period");
    g.inversions()
}

/// `k(n-k) - ℓ(f)`, the dimension of the open positroid cell.
pub fn positroid_dim(f: &BoundedAffinePerm) -> usize {
    let (n, k) = (f.n(), f.k());
    k * (n - k) - affine_length(f)
}

/// One fundamental domain of `r_{ij}(f) = k - #{a < i : f(a) > j}`:
/// columns `i = 1..n`, rows `i-1 ≤ j ≤ i+n-1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CyclicRankMatrix {
    n: usize,
    k: usize,
    // cols[i-1][t] = r_{i, i-1+t}, t = 0..=n.
    cols: Vec<Vec<i64>>,
}

impl CyclicRankMatrix {
    pub fn of(f: &BoundedAffinePerm) -> CyclicRankMatrix {
        let n = f.n() as i64;
        let k = f.k() as i64;
        let mut cols = Vec::with_capacity(f.n());
        for i in 1..=n {
            let mut col = Vec::with_capacity(f.n() + 1);
            for j in i - 1..=i + n - 1 {
                // Bounded: f(a) ≤ a + n, so only a > j - n can exceed j.
                let count = (j - n + 1..i).filter(|&a| f.get(a) > j).count() as i64;
                col.push(k - count);
            }
            cols.push(col);
        }
        CyclicRankMatrix {
            n: f.n(),
            k: f.k(),
            cols,
        }
    }

    /// Builds from an explicit table `cols[i-1][t] = r_{i, i-1+t}`.
    pub fn from_columns(n: usize, k: usize, cols: Vec<Vec<i64>>) -> Result<CyclicRankMatrix> {
        if cols.len() != n || cols.iter().any(|c| c.len() != n + 1) {
            return Err(Error::Invalid(
                "cyclic rank table has the wrong shape".into(),
            ));
        }
        Ok(CyclicRankMatrix { n, k, cols })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn columns(&self) -> &[Vec<i64>] {
        &self.cols
    }

    /// `r_{ij}` for arbitrary integers, using periodicity, `r = k` above the
    /// band and `r = j - i + 1` below it.
    pub fn get(&self, i: i64, j: i64) -> i64 {
        let n = self.n as i64;
        let r = (i - 1).rem_euclid(n);
        let shift = i - 1 - r;
        let (i0, j0) = (i - shift, j - shift);
        if j0 < i0 - 1 {
            j0 - i0 + 1
        } else if j0 > i0 + n - 1 {
            self.k as i64
        } else {
            self.cols[r as usize][(j0 - i0 + 1) as usize]
        }
    }

    /// Checks the characterizing conditions for the cyclic rank matrix of a
    /// bounded affine permutation.
    pub fn is_valid(&self) -> bool {
        let n = self.n as i64;
        let k = self.k as i64;
        for i in 1..=n {
            if self.get(i, i - 1) != 0 || self.get(i, i + n - 1) != k {
                return false;
            }
            for j in i - 2..=i + n {
                let r = self.get(i, j);
                let right = self.get(i, j + 1);
                let up = self.get(i - 1, j);
                if right < r || right > r + 1 || up < r || up > r + 1 {
                    return false;
                }
                if r == right && r == up && self.get(i - 1, j + 1) != r {
                    return false;
                }
            }
        }
        true
    }

    /// Recovers `f` from `f(i) = j` iff
    /// `r_{(i+1)(j-1)} + 1 = r_{i(j-1)} = r_{(i+1)j} = r_{ij}`, i.e. the mixed
    /// second difference of `r` at `(i, j)` is one.
    pub fn to_affine(&self) -> Result<BoundedAffinePerm> {
        if !self.is_valid() {
            return Err(Error::Invalid("not a cyclic rank matrix".into()));
        }
        let n = self.n as i64;
        let mut window = Vec::with_capacity(self.n);
        for i in 1..=n {
            let j = (i..=i + n).find(|&j| {
                let r = self.get(i + 1, j - 1);
                r + 1 == self.get(i, j - 1)
                    && r + 1 == self.get(i + 1, j)
                    && r + 1 == self.get(i, j)
            });
            window.push(j.ok_or_else(|| Error::Invalid(format!("no image recovered for {i}")))?);
        }
        BoundedAffinePerm::from_window(window)
    }
}

/// Convenience wrapper for [`CyclicRankMatrix::of`].
pub fn cyclic_rank_matrix(f: &BoundedAffinePerm) -> CyclicRankMatrix {
    CyclicRankMatrix::of(f)
}

/// `f ⪯ g` iff `r_{ij}(f) ≥ r_{ij}(g)` everywhere.
pub fn affine_bruhat_leq(f: &BoundedAffinePerm, g: &BoundedAffinePerm) -> bool {
    if f.n() != g.n() || f.k() != g.k() {
        return false;
    }
    let (rf, rg) = (CyclicRankMatrix::of(f), CyclicRankMatrix::of(g));
    rf.cols
        .iter()
        .zip(&rg.cols)
        .all(|(a, b)| a.iter().zip(b).all(|(x, y)| x >= y))
}

/// Grassmann necklace `(I_1, ..., I_n)`; each `I_i` is stored sorted.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannNecklace {
    n: usize,
    k: usize,
    sets: Vec<Vec<usize>>,
}

impl GrassmannNecklace {
    pub fn new(n: usize, sets: Vec<Vec<usize>>) -> Result<GrassmannNecklace> {
        if sets.len() != n || n == 0 {
            return Err(Error::Invalid(format!("necklace needs exactly {n} sets")));
        }
        let k = sets[0].len();
        let mut sorted = Vec::with_capacity(n);
        for s in sets {
            let mut s = s;
            s.sort_unstable();
            s.dedup();
            if s.len() != k || s.iter().any(|&x| x == 0 || x > n) {
                return Err(Error::Invalid(format!(
                    "necklace entry {s:?} is not a {k}-subset of [{n}]"
                )));
            }
            sorted.push(s);
        }
        for i in 1..=n {
            let next = &sorted[i % n];
            if sorted[i - 1].iter().any(|&x| x != i && !next.contains(&x)) {
                return Err(Error::Invalid(format!(
                    "necklace condition I_{i} \\ {{{i}}} ⊆ I_{} fails",
                    i % n + 1
                )));
            }
        }
        Ok(GrassmannNecklace { n, k, sets: sorted })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `I_i`, 1-based.
    pub fn get(&self, i: usize) -> &[usize] {
        &self.sets[i - 1]
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }
}

fn fmt_cyclic_set(set: &[usize], start: usize, n: usize) -> String {
    let mut v = set.to_vec();
    v.sort_by_key(|&x| (x + n - start) % n);
    let sep = if n > 9 { "," } else { "" };
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

impl fmt::Display for GrassmannNecklace {
    /// `124|234|346|456|562|612`: each `I_i` listed in cyclic order from `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .sets
            .iter()
            .enumerate()
            .map(|(i, s)| fmt_cyclic_set(s, i + 1, self.n))
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

impl fmt::Debug for GrassmannNecklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses a digit-string or comma-separated subset.
pub fn parse_subset(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad subset `{s}`"));
    if s.is_empty() || s == "-" {
        return Ok(Vec::new());
    }
    let v: Vec<usize> = if s.contains(',') {
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    Ok(v)
}

impl GrassmannNecklace {
    /// Parses `124|234|...`; `n` is the number of entries.
    pub fn parse(s: &str) -> Result<GrassmannNecklace> {
        let sets: Vec<Vec<usize>> = s
            .trim()
            .split('|')
            .map(parse_subset)
            .collect::<Result<_>>()?;
        GrassmannNecklace::new(sets.len(), sets)
    }
}

/// Reads `Ĩ_i = {j ∈ [i, i+n-1] : r_{ij} > r_{i(j-1)}}` off the rank matrix
/// and reduces modulo `n`.
pub fn necklace_from_f(f: &BoundedAffinePerm) -> GrassmannNecklace {
    let r = CyclicRankMatrix::of(f);
    let n = f.n() as i64;
    let sets = (1..=n)
        .map(|i| {
            let mut s: Vec<usize> = (i..=i + n - 1)
                .filter(|&j| r.get(i, j) > r.get(i, j - 1))
                .map(|j| ((j - 1).rem_euclid(n) + 1) as usize)
                .collect();
            s.sort_unstable();
            s
        })
        .collect();
    GrassmannNecklace {
        n: f.n(),
        k: f.k(),
        sets,
    }
}

/// Inverse of [`necklace_from_f`].
pub fn f_from_necklace(neck: &GrassmannNecklace) -> Result<BoundedAffinePerm> {
    let n = neck.n as i64;
    let mut window = Vec::with_capacity(neck.n);
    for i in 1..=neck.n {
        let cur = neck.get(i);
        let next = neck.get(i % neck.n + 1);
        let fi = if !cur.contains(&i) {
            i as i64
        } else if cur == next {
            i as i64 + n
        } else {
            let added: Vec<usize> = next.iter().copied().filter(|x| !cur.contains(x)).collect();
            let [c] = added.as_slice() else {
                return Err(Error::Invalid(format!(
                    "necklace step at {i} is not a single exchange"
                )));
            };
            // Lift c into (i, i + n).
            let c = *c as i64;
            if c > i as i64 {
                c
            } else {
                c + n
            }
        };
        window.push(fi);
    }
    let f = BoundedAffinePerm::from_window(window)?;
    if f.k() != neck.k || necklace_from_f(&f) != *neck {
        return Err(Error::Invalid(format!(
            "{neck} is not a Grassmann necklace"
        )));
    }
    Ok(f)
}

/// A permutation of `[n]` whose fixed points carry a color `±1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct DecoratedPerm {
    perm: Perm,
    colors: Vec<Option<i8>>,
}

impl DecoratedPerm {
    pub fn new(perm: Perm, colors: Vec<Option<i8>>) -> Result<DecoratedPerm> {
        if colors.len() != perm.n() {
            return Err(Error::Mismatch("one color slot per point".into()));
        }
        for i in 1..=perm.n() {
            let fixed = perm.get(i) == i;
            match colors[i - 1] {
                Some(c) if fixed && (c == 1 || c == -1) => {}
                None if !fixed => {}
                _ => {
                    return Err(Error::Invalid(format!(
                        "colors must be ±1 exactly on fixed points (position {i})"
                    )))
                }
            }
        }
        Ok(DecoratedPerm { perm, colors })
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    /// Color of `i` (1-based), defined on fixed points only.
    pub fn color(&self, i: usize) -> Option<i8> {
        self.colors[i - 1]
    }

    /// Anti-exceedances `#{i : σ(i) < i}` plus fixed points colored `+1`.
    pub fn k(&self) -> usize {
        (1..=self.perm.n())
            .filter(|&i| self.perm.get(i) < i || self.colors[i - 1] == Some(1))
            .count()
    }
}

impl fmt::Display for DecoratedPerm {
    /// One-line notation with fixed points marked `+`/`-`, e.g. `1-,4,3,2`
    /// becomes `1- 4 3 2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = (1..=self.perm.n())
            .map(|i| match self.colors[i - 1] {
                Some(1) => format!("{}+", self.perm.get(i)),
                Some(_) => format!("{}-", self.perm.get(i)),
                None => self.perm.get(i).to_string(),
            })
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for DecoratedPerm {
    type Err = Error;
    /// Parses the format produced by `Display`.
    fn from_str(s: &str) -> Result<DecoratedPerm> {
        let mut images = Vec::new();
        let mut colors = Vec::new();
        for tok in s.split_whitespace() {
            let (num, color) = if let Some(t) = tok.strip_suffix('+') {
                (t, Some(1))
            } else if let Some(t) = tok.strip_suffix('-') {
                (t, Some(-1))
            } else {
                (tok, None)
            };
            images.push(
                num.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad decorated entry `{tok}`")))?,
            );
            colors.push(color);
        }
        DecoratedPerm::new(Perm::new(&images)?, colors)
    }
}

pub fn decorated_from_f(f: &BoundedAffinePerm) -> DecoratedPerm {
    let n = f.n() as i64;
    let mut images = Vec::with_capacity(f.n());
    let mut colors = Vec::with_capacity(f.n());
    for i in 1..=n {
        let v = f.get(i);
        images.push(((v - 1).rem_euclid(n) + 1) as usize);
        colors.push(if v == i {
            Some(-1)
        } else if v == i + n {
            Some(1)
        } else {
            None
        });
    }
    DecoratedPerm {
        perm: Perm::new(&images).expect("residues of an affine permutation"),
        colors,
    }
}

pub fn f_from_decorated(d: &DecoratedPerm, k: usize) -> Result<BoundedAffinePerm> {
    let n = d.perm.n() as i64;
    let window = (1..=n)
        .map(|i| {
            let s = d.perm.get(i as usize) as i64;
            match d.colors[i as usize - 1] {
                Some(1) => i + n,
                Some(_) => i,
                None if s > i => s,
                None => s + n,
            }
        })
        .collect();
    let f = BoundedAffinePerm::from_window(window)?;
    if f.k() != k {
        return Err(Error::Invalid(format!(
            "decorated permutation has k = {}, not {k}",
            f.k()
        )));
    }
    Ok(f)
}
