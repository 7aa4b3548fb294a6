//! Gelfand–Tsetlin patterns, pipe-dream Demazure products and the
//! nonvanishing criteria for the Gelfand–Tsetlin degenerations of Schubert,
//! opposite Schubert and Richardson coordinate rings.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{Perm, Word};
use crate::tableaux::{Orientation, Tableau};

/// A Gelfand–Tsetlin pattern of size `n`: jagged rows where row `i` has
/// `n + 1 - i` entries and `g[i][j] ≥ g[i+1][j] ≥ g[i][j+1]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GtPattern {
    rows: Vec<Vec<i64>>,
}

impl GtPattern {
    /// Validates the staircase shape and the interlacing inequalities.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<GtPattern> {
        let n = rows.len();
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n - i {
                return Err(Error::Invalid(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    n - i
                )));
            }
        }
        let g = GtPattern { rows };
        for i in 1..n {
            for j in 1..=n - i {
                if !(g.get(i, j) >= g.get(i + 1, j) && g.get(i + 1, j) >= g.get(i, j + 1)) {
                    return Err(Error::Invalid(format!(
                        "interlacing fails at ({}, {j})",
                        i + 1
                    )));
                }
            }
        }
        Ok(g)
    }

    /// The all-zero pattern of size `n`.
    pub fn zero(n: usize) -> GtPattern {
        GtPattern {
            rows: (0..n).map(|i| vec![0; n - i]).collect(),
        }
    }

    /// Parses rows separated by `/`, e.g. `"3210/211/21/1"`; a row containing
    /// commas is split on them instead of digit by digit.
    pub fn parse(s: &str) -> Result<GtPattern> {
        let mut rows = Vec::new();
        for part in s.split('/').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = || Error::Parse(format!("bad pattern row `{part}`"));
            let row: Vec<i64> = if part.contains(',') {
                part.split(',')
                    .map(|t| t.trim().parse::<i64>().map_err(|_| bad()))
                    .collect::<Result<_>>()?
            } else {
                part.chars()
                    .map(|c| c.to_digit(10).map(i64::from).ok_or_else(bad))
                    .collect::<Result<_>>()?
            };
            rows.push(row);
        }
        GtPattern::new(rows)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Entry `g_{ij}`, 1-based, for `i + j ≤ n + 1`.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn top_row(&self) -> &[i64] {
        self.rows.first().map_or(&[], Vec::as_slice)
    }

    pub fn row_sums(&self) -> Vec<i64> {
        self.rows.iter().map(|r| r.iter().sum()).collect()
    }

    /// Whether the top row is strictly decreasing.
    pub fn has_strict_top(&self) -> bool {
        self.top_row().windows(2).all(|w| w[0] > w[1])
    }

    /// Coordinatewise sum; the pattern semigroup is closed under it.
    pub fn add(&self, other: &GtPattern) -> Result<GtPattern> {
        if self.n() != other.n() {
            return Err(Error::Mismatch(format!(
                "pattern sizes {} and {}",
                self.n(),
                other.n()
            )));
        }
        GtPattern::new(
            self.rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
                .collect(),
        )
    }

    /// `𝔓 = {(i, j) : g_{ij} = g_{(i+1)j}}`.
    pub fn vertical_equalities(&self) -> PipeDreamSet {
        let n = self.n();
        let cells = staircase(n)
            .filter(|&(i, j)| self.get(i, j) == self.get(i + 1, j))
            .collect();
        PipeDreamSet { n, cells }
    }

    /// `𝔔 = {(i, j) : g_{i(n+2-i-j)} = g_{(i+1)(n+1-i-j)}}`.
    pub fn diagonal_equalities(&self) -> PipeDreamSet {
        let n = self.n();
        let cells = staircase(n)
            .filter(|&(i, j)| self.get(i, n + 2 - i - j) == self.get(i + 1, n + 1 - i - j))
            .collect();
        PipeDreamSet { n, cells }
    }
}

impl fmt::Display for GtPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().any(|&x| !(0..=9).contains(&x));
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(i64::to_string).collect();
                s.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

impl FromStr for GtPattern {
    type Err = Error;
    fn from_str(s: &str) -> Result<GtPattern> {
        GtPattern::parse(s)
    }
}

/// Cells `(i, j)` with `i, j ≥ 1` and `i + j ≤ n`.
fn staircase(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |i| (1..=n - i).map(move |j| (i, j)))
}

/// A subset of the staircase `{(i, j) : i + j ≤ n}`, read as a pipe dream.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PipeDreamSet {
    n: usize,
    cells: BTreeSet<(usize, usize)>,
}

impl PipeDreamSet {
    pub fn new(n: usize, cells: impl IntoIterator<Item = (usize, usize)>) -> Result<PipeDreamSet> {
        let cells: BTreeSet<_> = cells.into_iter().collect();
        if let Some(&(i, j)) = cells.iter().find(|&&(i, j)| i == 0 || j == 0 || i + j > n) {
            return Err(Error::Invalid(format!(
                "cell ({i}, {j}) is outside the staircase of size {n}"
            )));
        }
        Ok(PipeDreamSet { n, cells })
    }

    /// The whole staircase.
    pub fn full(n: usize) -> PipeDreamSet {
        PipeDreamSet {
            n,
            cells: staircase(n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self) -> &BTreeSet<(usize, usize)> {
        &self.cells
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.cells.contains(&(i, j))
    }

    /// The word of `s_{i+j-1}` read bottom row to top row, each row left to
    /// right.
    pub fn word(&self) -> Word {
        let mut cells: Vec<_> = self.cells.iter().copied().collect();
        cells.sort_by_key(|&(i, j)| (std::cmp::Reverse(i), j));
        Word::new(self.n, cells.iter().map(|&(i, j)| i + j - 1).collect())
            .expect("staircase letters are in range")
    }

    /// `ū(𝔓)`: the Demazure product of [`PipeDreamSet::word`].
    pub fn ubar(&self) -> Perm {
        self.word().demazure_product()
    }
}

/// The exponent matrix of the antidiagonal initial term of `Π Δ_{I_c}`:
/// column `I = {i_1 < ⋯ < i_k}` contributes `z_{i_k 1} z_{i_{k-1} 2} ⋯ z_{i_1 k}`.
pub fn initial_exponent(columns: &[Vec<usize>], n: usize) -> Result<Vec<Vec<i64>>> {
    let mut a = vec![vec![0i64; n]; n];
    for col in columns {
        let mut c = col.clone();
        c.sort_unstable();
        c.dedup();
        if c.len() != col.len() || c.iter().any(|&x| x == 0 || x > n) {
            return Err(Error::Invalid(format!("{col:?} is not a subset of [{n}]")));
        }
        for (pos, &row) in c.iter().rev().enumerate() {
            a[row - 1][pos] += 1;
        }
    }
    Ok(a)
}

/// `γ(A)_{ij} = A_{ij} + A_{(i+1)j} + ⋯ + A_{nj}`, returned as a pattern when
/// it vanishes below the staircase and interlaces; `None` otherwise.
pub fn gamma(a: &[Vec<i64>]) -> Option<GtPattern> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut g = vec![vec![0i64; n]; n];
    for j in 0..n {
        let mut acc = 0;
        for i in (0..n).rev() {
            acc += a[i][j];
            g[i][j] = acc;
        }
    }
    for i in 0..n {
        // 0-based: the staircase is i + j ≤ n - 1.
        if g[i][n - i..].iter().any(|&x| x != 0) {
            return None;
        }
    }
    GtPattern::new((0..n).map(|i| g[i][..n - i].to_vec()).collect()).ok()
}

/// The pattern of a reverse SSYT with entries in `[n]`: row `k` is the shape
/// of the boxes with entries `≥ k`.
pub fn gt_from_reverse_ssyt(t: &Tableau, n: usize) -> Result<GtPattern> {
    if t.orientation() != Orientation::Reverse {
        return Err(Error::Invalid("expected a reverse tableau".into()));
    }
    if t.rows().iter().flatten().any(|&x| x > n) {
        return Err(Error::Invalid(format!("entries exceed {n}")));
    }
    let rows = (1..=n)
        .map(|k| {
            let mut row: Vec<i64> = t
                .rows()
                .iter()
                .map(|r| r.iter().filter(|&&x| x >= k).count() as i64)
                .take(n + 1 - k)
                .collect();
            row.resize(n + 1 - k, 0);
            row
        })
        .collect();
    GtPattern::new(rows)
}

/// Row sums `(α_1 + ⋯ + α_n, α_2 + ⋯ + α_n, …, α_n)` of the patterns of
/// weight `α`.
pub fn row_sums_for_weight(alpha: &[usize]) -> Vec<i64> {
    let mut out: Vec<i64> = alpha
        .iter()
        .rev()
        .scan(0i64, |acc, &a| {
            *acc += a as i64;
            Some(*acc)
        })
        .collect();
    out.reverse();
    out
}

/// All integer patterns with top row `lambda` (weakly decreasing), optionally
/// with prescribed row sums. Sorted.
pub fn enumerate_gt(lambda: &[i64], row_sums: Option<&[i64]>) -> Result<Vec<GtPattern>> {
    if lambda.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Invalid(format!(
            "{lambda:?} is not weakly decreasing"
        )));
    }
    let n = lambda.len();
    if let Some(s) = row_sums {
        if s.len() != n {
            return Err(Error::Mismatch(format!(
                "{} row sums for size {n}",
                s.len()
            )));
        }
        if n > 0 && s[0] != lambda.iter().sum::<i64>() {
            return Ok(Vec::new());
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![lambda.to_vec()];
    extend_rows(&mut rows, n, row_sums, &mut out);
    out.sort();
    Ok(out)
}

fn extend_rows(rows: &mut Vec<Vec<i64>>, n: usize, sums: Option<&[i64]>, out: &mut Vec<GtPattern>) {
    if rows.len() == n {
        out.push(GtPattern { rows: rows.clone() });
        return;
    }
    let above = rows.last().expect("top row present").clone();
    let target = sums.map(|s| s[rows.len()]);
    let mut row = vec![0i64; above.len() - 1];
    fill_row(&above, 0, 0, target, &mut row, &mut |r| {
        rows.push(r.to_vec());
        extend_rows(rows, n, sums, out);
        rows.pop();
    });
}

/// Chooses `row[j] ∈ [above[j+1], above[j]]` position by position, pruning on
/// the target sum.
fn fill_row(
    above: &[i64],
    j: usize,
    acc: i64,
    target: Option<i64>,
    row: &mut [i64],
    f: &mut dyn FnMut(&[i64]),
) {
    if j == row.len() {
        if target.is_none_or(|t| t == acc) {
            f(row);
        }
        return;
    }
    let (lo, hi) = (above[j + 1], above[j]);
    for v in lo..=hi {
        if let Some(t) = target {
            let min_rest: i64 = (j + 1..row.len()).map(|m| above[m + 1]).sum();
            let max_rest: i64 = (j + 1..row.len()).map(|m| above[m]).sum();
            if acc + v + min_rest > t || acc + v + max_rest < t {
                continue;
            }
        }
        row[j] = v;
        fill_row(above, j + 1, acc + v, target, row, f);
    }
}

fn check_size(g: &GtPattern, x: &Perm) -> Result<()> {
    if g.n() != x.n() {
        return Err(Error::Mismatch(format!(
            "pattern of size {} with a permutation in S_{}",
            g.n(),
            x.n()
        )));
    }
    Ok(())
}

/// Whether `χ^g` survives in the degeneration of the Schubert variety `X_u`:
/// `ū(𝔓) ⪰ u`.
pub fn nonzero_in_schubert(g: &GtPattern, u: &Perm) -> Result<bool> {
    check_size(g, u)?;
    Ok(u.bruhat_leq(&g.vertical_equalities().ubar()))
}

/// `w̄ = ū(𝔔) w₀`.
pub fn wbar(g: &GtPattern) -> Perm {
    let w0 = Perm::longest(g.n());
    g.diagonal_equalities()
        .ubar()
        .compose(&w0)
        .expect("same size")
}

/// Whether `χ^g` survives in the degeneration of the opposite Schubert
/// variety `X^w`: `ū(𝔔) w₀ ⪯ w`.
pub fn nonzero_in_opposite(g: &GtPattern, w: &Perm) -> Result<bool> {
    check_size(g, w)?;
    Ok(wbar(g).bruhat_leq(w))
}

/// The Richardson criterion, valid only for a strictly decreasing top row:
/// both one-sided criteria hold.
pub fn nonzero_in_richardson_strict(g: &GtPattern, u: &Perm, w: &Perm) -> Result<bool> {
    if !g.has_strict_top() {
        return Err(Error::Precondition(format!(
            "top row of {g} is not strictly decreasing"
        )));
    }
    Ok(nonzero_in_schubert(g, u)? && nonzero_in_opposite(g, w)?)
}

/// The involution `τ₀(g)_{ij} = g_{11} - g_{i(n+2-i-j)}` on patterns with
/// `g_{1n} = 0`.
pub fn tau0(g: &GtPattern) -> Result<GtPattern> {
    let n = g.n();
    if n == 0 {
        return Ok(g.clone());
    }
    if g.get(1, n) != 0 {
        return Err(Error::Precondition(format!(
            "g_1{n} = {} is not zero",
            g.get(1, n)
        )));
    }
    let top = g.get(1, 1);
    let rows = (1..=n)
        .map(|i| {
            (1..=n + 1 - i)
                .map(|j| top - g.get(i, n + 2 - i - j))
                .collect()
        })
        .collect();
    GtPattern::new(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{compositions, kostka, standard_count, Partition};

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }
    fn g(s: &str) -> GtPattern {
        GtPattern::parse(s).unwrap()
    }

    #[test]
    fn pattern_basics() {
        let x = g("3210/211/21/1");
        assert_eq!(x.n(), 4);
        assert_eq!(x.get(2, 3), 1);
        assert_eq!(x.row_sums(), vec![6, 4, 3, 1]);
        assert_eq!(x.to_string(), "3210/211/21/1");
        assert!(GtPattern::parse("3210/410/21/1").is_err());
        assert!(GtPattern::parse("321/2/1").is_err());
        assert_eq!(GtPattern::parse("10,2/5").unwrap().to_string(), "10,2/5");
    }

    #[test]
    fn gamma_of_initial_terms() {
        let a = initial_exponent(&[vec![3, 2], vec![1]], 3).unwrap();
        assert_eq!(a, vec![vec![1, 0, 0], vec![0, 1, 0], vec![1, 0, 0]]);
        assert_eq!(gamma(&a).unwrap(), g("210/11/1"));
        let b = initial_exponent(&[vec![3, 1], vec![2]], 3).unwrap();
        assert_eq!(gamma(&b).unwrap(), g("210/20/1"));
        assert_eq!(gamma(&vec![vec![0; 3]; 3]).unwrap(), GtPattern::zero(3));
        // Mass below the staircase.
        assert!(gamma(&[vec![0, 0], vec![0, 1]]).is_none());
    }

    #[test]
    fn gamma_is_additive_over_exponents() {
        let n = 4;
        let subsets: Vec<Vec<usize>> = (1u32..(1 << n))
            .map(|m| (1..=n).filter(|&i| m >> (i - 1) & 1 == 1).collect())
            .collect();
        for a in &subsets {
            for b in &subsets {
                let ea = initial_exponent(std::slice::from_ref(a), n).unwrap();
                let eb = initial_exponent(std::slice::from_ref(b), n).unwrap();
                let eab = initial_exponent(&[a.clone(), b.clone()], n).unwrap();
                let sum = gamma(&ea).unwrap().add(&gamma(&eb).unwrap()).unwrap();
                assert_eq!(gamma(&eab).unwrap(), sum);
            }
        }
    }

    #[test]
    fn reverse_tableau_patterns() {
        let t = Tableau::from_columns(&[vec![3, 2], vec![1]], Orientation::Reverse).unwrap();
        assert_eq!(gt_from_reverse_ssyt(&t, 3).unwrap(), g("210/11/1"));
        let empty = Tableau::new(Vec::new(), Orientation::Reverse).unwrap();
        assert_eq!(gt_from_reverse_ssyt(&empty, 3).unwrap(), GtPattern::zero(3));
        let s = Tableau::parse("12", Orientation::Semistandard).unwrap();
        assert!(gt_from_reverse_ssyt(&s, 3).is_err());
    }

    #[test]
    fn reverse_tableaux_biject_with_patterns() {
        // Reverse SSYT of shape λ with entries in [n] are reflections of SSYT;
        // their patterns are exactly the patterns with top row λ, and the row
        // sums encode the content.
        let n = 4;
        for lam in Partition::all(5, n) {
            let mut top: Vec<i64> = lam.parts().iter().map(|&x| x as i64).collect();
            top.resize(n, 0);
            let mut from_tableaux = Vec::new();
            for alpha in compositions(lam.size(), n) {
                for t in crate::tableaux::ssyt_with_content(&lam, &alpha) {
                    let r = t.reflect(n).unwrap();
                    let pat = gt_from_reverse_ssyt(&r, n).unwrap();
                    assert_eq!(pat.top_row(), &top[..]);
                    assert_eq!(pat.row_sums(), row_sums_for_weight(&r.content(n)));
                    from_tableaux.push(pat);
                }
            }
            from_tableaux.sort();
            assert_eq!(from_tableaux, enumerate_gt(&top, None).unwrap());
        }
    }

    #[test]
    fn polytope_vertices_and_small_counts() {
        let all = enumerate_gt(&[4, 2, 1], None).unwrap();
        for v in [
            "421/42/4", "421/41/4", "421/42/2", "421/22/2", "421/21/2", "421/41/1", "421/21/1",
        ] {
            assert!(all.contains(&g(v)), "{v}");
        }
        let w = enumerate_gt(&[2, 1, 0], Some(&row_sums_for_weight(&[1, 1, 1]))).unwrap();
        assert_eq!(w, vec![g("210/11/1"), g("210/20/1")]);
        assert_eq!(enumerate_gt(&[3, 3, 3, 3], None).unwrap().len(), 1);
        assert!(enumerate_gt(&[1, 2], None).is_err());
    }

    #[test]
    fn pattern_counts_are_kostka_numbers() {
        for n in 1..=5usize {
            for size in 0..=8 {
                for lam in Partition::all(size, n) {
                    let mut top: Vec<i64> = lam.parts().iter().map(|&x| x as i64).collect();
                    top.resize(n, 0);
                    let all = enumerate_gt(&top, None).unwrap();
                    if n <= 3 || size <= 5 {
                        for alpha in compositions(size, n) {
                            let c = enumerate_gt(&top, Some(&row_sums_for_weight(&alpha)))
                                .unwrap()
                                .len();
                            assert_eq!(c, kostka(&lam, &alpha), "{lam} {alpha:?}");
                        }
                    }
                    let total: usize = crate::tableaux::ssyt(&lam, n).len();
                    assert_eq!(all.len(), total, "{lam} n={n}");
                }
            }
        }
    }

    #[test]
    fn ubar_examples() {
        assert!(PipeDreamSet::new(3, []).unwrap().ubar().is_identity());
        assert_eq!(PipeDreamSet::new(3, [(1, 1)]).unwrap().ubar(), p("213"));
        for n in 1..=5 {
            assert_eq!(PipeDreamSet::full(n).ubar(), Perm::longest(n));
        }
        assert!(PipeDreamSet::new(3, [(2, 2)]).is_err());
        // Reading order: bottom row first, so (2,1) then (1,1) gives s2·s1.
        assert_eq!(
            PipeDreamSet::new(3, [(1, 1), (2, 1)])
                .unwrap()
                .word()
                .letters(),
            &[2, 1]
        );
    }

    #[test]
    fn schubert_criterion_examples() {
        let s1 = p("213");
        let s2 = p("132");
        for x in enumerate_gt(&[4, 2, 1], None).unwrap() {
            assert_eq!(
                nonzero_in_schubert(&x, &s1).unwrap(),
                x.get(1, 1) == x.get(2, 1)
            );
            assert_eq!(
                nonzero_in_schubert(&x, &s2).unwrap(),
                x.get(2, 1) == x.get(3, 1) || x.get(1, 2) == x.get(2, 2)
            );
            assert!(nonzero_in_schubert(&x, &Perm::identity(3)).unwrap());
        }
    }

    #[test]
    fn opposite_criterion_examples() {
        let w = p("4231");
        for x in enumerate_gt(&[3, 2, 1, 0], None).unwrap() {
            assert!(nonzero_in_opposite(&x, &Perm::longest(4)).unwrap());
            assert_eq!(
                nonzero_in_opposite(&x, &w).unwrap(),
                x.get(2, 2) == x.get(1, 3) || x.get(3, 2) == x.get(2, 3)
            );
        }
        assert!(!nonzero_in_opposite(&g("3210/220/21/1"), &w).unwrap());
    }

    #[test]
    fn richardson_criterion_examples() {
        let (u, w) = (p("1324"), p("4231"));
        let weight =
            enumerate_gt(&[3, 2, 1, 0], Some(&row_sums_for_weight(&[2, 1, 2, 1]))).unwrap();
        assert_eq!(weight.len(), 4);
        let verdict = |s: &str| nonzero_in_richardson_strict(&g(s), &u, &w).unwrap();
        assert!(verdict("3210/211/21/1"));
        assert!(verdict("3210/310/30/1"));
        assert!(!verdict("3210/310/21/1"));
        assert!(!nonzero_in_schubert(&g("3210/310/21/1"), &u).unwrap());
        assert!(!verdict("3210/220/21/1"));
        assert_eq!(
            weight
                .iter()
                .filter(|x| nonzero_in_richardson_strict(x, &u, &w).unwrap())
                .count(),
            2
        );
        for x in enumerate_gt(&[3, 2, 1, 0], None).unwrap() {
            assert!(
                nonzero_in_richardson_strict(&x, &Perm::identity(4), &Perm::longest(4)).unwrap()
            );
        }
        assert!(nonzero_in_richardson_strict(&g("2110/210/20/1"), &u, &w).is_err());
    }

    #[test]
    fn weak_top_row_regression() {
        // Without a strict top row the two one-sided criteria overcount: all
        // three patterns pass, but the weight space has dimension 2.
        let (u, w) = (p("1324"), p("4231"));
        let lam = Partition::new(vec![2, 1, 1]).unwrap();
        let pats = enumerate_gt(&[2, 1, 1, 0], Some(&row_sums_for_weight(&[1, 1, 1, 1]))).unwrap();
        assert_eq!(pats.len(), 3);
        for x in &pats {
            assert!(nonzero_in_schubert(x, &u).unwrap() && nonzero_in_opposite(x, &w).unwrap());
        }
        assert_eq!(standard_count(&lam, &[1, 1, 1, 1], &u, &w), 2);
    }

    #[test]
    fn strict_criterion_matches_standard_monomials() {
        let n = 4;
        let top = [3i64, 2, 1, 0];
        let lam = Partition::new(vec![3, 2, 1]).unwrap();
        let weights = compositions(6, n);
        let by_weight: Vec<Vec<GtPattern>> = weights
            .iter()
            .map(|a| enumerate_gt(&top, Some(&row_sums_for_weight(a))).unwrap())
            .collect();
        for u in Perm::all(n) {
            for w in Perm::all(n) {
                if !u.bruhat_leq(&w) {
                    continue;
                }
                for (alpha, pats) in weights.iter().zip(&by_weight) {
                    let gt = pats
                        .iter()
                        .filter(|x| nonzero_in_richardson_strict(x, &u, &w).unwrap())
                        .count();
                    assert_eq!(gt, standard_count(&lam, alpha, &u, &w), "{u} {w} {alpha:?}");
                }
            }
        }
    }

    #[test]
    fn tau0_examples() {
        assert_eq!(tau0(&GtPattern::zero(4)).unwrap(), GtPattern::zero(4));
        assert_eq!(tau0(&g("210/11/1")).unwrap(), g("210/11/1"));
        assert!(tau0(&g("321/21/1")).is_err());
        for top in [[3i64, 2, 1, 0], [2, 2, 0, 0], [4, 1, 1, 0]] {
            for x in enumerate_gt(&top, None).unwrap() {
                let t = tau0(&x).unwrap();
                assert_eq!(t.get(1, 1), x.get(1, 1));
                assert_eq!(tau0(&t).unwrap(), x);
            }
        }
    }

    #[test]
    fn tau0_exchanges_the_two_criteria() {
        // τ₀ carries 𝔓 to 𝔔, so the degeneration of X_u corresponds to that of
        // X^{u w₀}; the variant X^{w₀ u} fails.
        let n = 3;
        let w0 = Perm::longest(n);
        let mut right_fails = 0;
        let mut left_fails = 0;
        for top in [[2i64, 1, 0], [3, 1, 0], [2, 2, 0], [3, 2, 0]] {
            for x in enumerate_gt(&top, None).unwrap() {
                let t = tau0(&x).unwrap();
                assert_eq!(
                    t.diagonal_equalities().cells(),
                    x.vertical_equalities().cells()
                );
                for u in Perm::all(n) {
                    let lhs = nonzero_in_schubert(&x, &u).unwrap();
                    if lhs != nonzero_in_opposite(&t, &u.compose(&w0).unwrap()).unwrap() {
                        right_fails += 1;
                    }
                    if lhs != nonzero_in_opposite(&t, &w0.compose(&u).unwrap()).unwrap() {
                        left_fails += 1;
                    }
                }
            }
        }
        assert_eq!(right_fails, 0);
        assert!(left_fails > 0);
    }
}
