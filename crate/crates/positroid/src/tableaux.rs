//! Partitions, semistandard and reverse semistandard tableaux, Plücker
//! monomials, standard monomial theory for Richardson varieties via greedy
//! minimal lifts, Kostka numbers and the complexes `Δ_k(u, w)`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::{k_chains, set_leq, Perm};

/// A partition `λ₁ ≥ λ₂ ≥ ⋯ > 0`; trailing zeros are dropped on input.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|p| p[0] < p[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The `i`-th part (1-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// The transpose partition: column lengths.
    pub fn conjugate(&self) -> Partition {
        let m = self.part(1);
        Partition(
            (1..=m)
                .map(|c| self.0.iter().filter(|&&r| r >= c).count())
                .collect(),
        )
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all(size: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(size, size, max_len, &mut cur, &mut out);
        out
    }

    /// True when the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

fn partitions_rec(
    rest: usize,
    max: usize,
    max_len: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        partitions_rec(rest - p, p, max_len, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    /// Accepts `"(2,1,1,0)"`, `"2,1,1"` or `"2 1 1"`.
    fn from_str(s: &str) -> Result<Partition> {
        let parts: std::result::Result<Vec<usize>, _> = s
            .trim_matches(|c| c == '(' || c == ')')
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect();
        Partition::new(parts.map_err(|_| Error::Parse(format!("bad partition `{s}`")))?)
    }
}

/// Whether a tableau's rows and columns increase or decrease.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Orientation {
    /// Rows weakly increase, columns strictly increase.
    Semistandard,
    /// Rows weakly decrease, columns strictly decrease.
    Reverse,
}

/// A filled Young diagram, stored by rows.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
    orientation: Orientation,
}

impl Tableau {
    /// Validates the shape and the row and column conditions.
    pub fn new(rows: Vec<Vec<usize>>, orientation: Orientation) -> Result<Tableau> {
        let shape: Vec<usize> = rows.iter().map(Vec::len).collect();
        Partition::new(shape.clone())?;
        if shape.contains(&0) {
            return Err(Error::Invalid("empty row inside a tableau".into()));
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Invalid("tableau entries must be positive".into()));
        }
        let ok = |a: usize, b: usize, strict: bool| match (orientation, strict) {
            (Orientation::Semistandard, false) => a <= b,
            (Orientation::Semistandard, true) => a < b,
            (Orientation::Reverse, false) => a >= b,
            (Orientation::Reverse, true) => a > b,
        };
        for (r, row) in rows.iter().enumerate() {
            for c in 0..row.len() {
                if c + 1 < row.len() && !ok(row[c], row[c + 1], false) {
                    return Err(Error::Invalid(format!(
                        "row {} breaks the row condition",
                        r + 1
                    )));
                }
                if r + 1 < rows.len() && c < rows[r + 1].len() && !ok(row[c], rows[r + 1][c], true)
                {
                    return Err(Error::Invalid(format!(
                        "column {} breaks the column condition",
                        c + 1
                    )));
                }
            }
        }
        Ok(Tableau { rows, orientation })
    }

    /// Builds a tableau from its columns, each read top to bottom.
    pub fn from_columns(columns: &[Vec<usize>], orientation: Orientation) -> Result<Tableau> {
        let height = columns.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for col in columns {
            if col.len() > height {
                return Err(Error::Invalid("column lengths must weakly decrease".into()));
            }
            for (r, &x) in col.iter().enumerate() {
                rows[r].push(x);
            }
        }
        let t = Tableau::new(rows, orientation)?;
        if t.columns() != columns {
            return Err(Error::Invalid("column lengths must weakly decrease".into()));
        }
        Ok(t)
    }

    /// Parses rows separated by `/`, e.g. `"1123/23/4"`; a row containing
    /// commas is split on them instead of digit by digit.
    pub fn parse(s: &str, orientation: Orientation) -> Result<Tableau> {
        let mut rows = Vec::new();
        for part in s.split('/').map(str::trim).filter(|p| !p.is_empty()) {
            let row: std::result::Result<Vec<usize>, _> = if part.contains(',') {
                part.split(',').map(|t| t.trim().parse::<usize>()).collect()
            } else {
                part.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or(()))
                    .collect::<std::result::Result<Vec<_>, _>>()
                    .map_err(|_| "x".parse::<usize>().unwrap_err())
            };
            rows.push(row.map_err(|_| Error::Parse(format!("bad tableau row `{part}`")))?);
        }
        Tableau::new(rows, orientation)
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn shape(&self) -> Partition {
        Partition(self.rows.iter().map(Vec::len).collect())
    }

    /// Columns read top to bottom, left to right.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| self.rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }

    /// `α_j` = number of entries equal to `j`, for `j = 1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &x in self.rows.iter().flatten() {
            if x <= n {
                c[x - 1] += 1;
            }
        }
        c
    }

    /// The tableau with every entry `i` replaced by `n + 1 - i`, which swaps
    /// the two orientations.
    pub fn reflect(&self, n: usize) -> Result<Tableau> {
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| (n + 1).checked_sub(x).filter(|&y| y > 0))
                    .collect::<Option<Vec<_>>>()
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| Error::Invalid(format!("entries exceed {n}")))?;
        let o = match self.orientation {
            Orientation::Semistandard => Orientation::Reverse,
            Orientation::Reverse => Orientation::Semistandard,
        };
        Tableau::new(rows, o)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.rows.iter().flatten().any(|&x| x > 9);
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let s: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                s.join(if wide { "," } else { "" })
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// The Plücker monomial `Δ(T) = Π Δ_{I_c}` as the list of columns `I_c`,
/// each read top to bottom.
pub fn pluecker_monomial(t: &Tableau) -> Vec<Vec<usize>> {
    t.columns()
}

/// All semistandard tableaux of the given shape and content, built by adding
/// horizontal strips of `1`s, `2`s, ...; listed in a fixed deterministic order.
pub fn ssyt_with_content(shape: &Partition, content: &[usize]) -> Vec<Tableau> {
    if content.iter().sum::<usize>() != shape.size() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let rows = vec![Vec::new(); shape.len()];
    strips_rec(shape, content, 0, rows, &mut out);
    out
}

/// All semistandard tableaux of the given shape with entries in `[n]`.
pub fn ssyt(shape: &Partition, n: usize) -> Vec<Tableau> {
    compositions(shape.size(), n)
        .iter()
        .flat_map(|c| ssyt_with_content(shape, c))
        .collect()
}

/// All weak compositions of `total` into `parts` parts.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in (0..=total).rev() {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn strips_rec(
    shape: &Partition,
    content: &[usize],
    letter: usize,
    rows: Vec<Vec<usize>>,
    out: &mut Vec<Tableau>,
) {
    if letter == content.len() {
        if rows.iter().map(Vec::len).sum::<usize>() == shape.size() {
            let rows: Vec<Vec<usize>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
            out.push(Tableau::new(rows, Orientation::Semistandard).expect("strips build SSYT"));
        }
        return;
    }
    let cur: Vec<usize> = rows.iter().map(Vec::len).collect();
    // Row r may grow up to min(λ_r, current length of row r-1).
    let caps: Vec<usize> = (0..cur.len())
        .map(|r| {
            let above = if r == 0 { usize::MAX } else { cur[r - 1] };
            shape.part(r + 1).min(above) - cur[r]
        })
        .collect();
    let mut add = vec![0; cur.len()];
    distribute(&caps, content[letter], 0, &mut add, &mut |add| {
        let mut next = rows.clone();
        for (r, &a) in add.iter().enumerate() {
            next[r].extend(std::iter::repeat_n(letter + 1, a));
        }
        strips_rec(shape, content, letter + 1, next, out);
    });
}

fn distribute(
    caps: &[usize],
    rest: usize,
    r: usize,
    add: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if r == caps.len() {
        if rest == 0 {
            f(add);
        }
        return;
    }
    for a in 0..=caps[r].min(rest) {
        add[r] = a;
        distribute(caps, rest - a, r + 1, add, f);
    }
    add[r] = 0;
}

/// The Kostka number `K_{λα}`: the number of SSYT of shape `λ` and content `α`.
pub fn kostka(shape: &Partition, content: &[usize]) -> usize {
    ssyt_with_content(shape, content).len()
}

/// The Gale-minimal `r`-subset of `pool` (sorted) that dominates `lower`
/// componentwise, if any.
fn gale_min_above(pool: &[usize], lower: &[usize]) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(lower.len());
    let mut idx = 0;
    for &b in lower {
        while idx < pool.len() && (pool[idx] < b || out.last().is_some_and(|&l| pool[idx] <= l)) {
            idx += 1;
        }
        out.push(*pool.get(idx)?);
        idx += 1;
    }
    Some(out)
}

/// Fills positions `1..=k` of a permutation from the nested chain of
/// Gale-minimal subsets of `target` above `u[r]`.
fn lift_front(u: &Perm, target: &[usize]) -> Option<Vec<usize>> {
    let k = target.len();
    let mut prev: Vec<usize> = Vec::new();
    let mut images = Vec::with_capacity(k);
    for r in 1..=k {
        let jr = gale_min_above(target, &u.prefix_set(r))?;
        let new: Vec<usize> = jr.iter().copied().filter(|x| !prev.contains(x)).collect();
        if new.len() != 1 || !prev.iter().all(|x| jr.contains(x)) {
            return None;
        }
        images.push(new[0]);
        prev = jr;
    }
    Some(images)
}

/// The unique Bruhat-minimal `x` with `x ⪰ u` and `x[k] = J`, or `None` when
/// `u[k] ⋠ J`. Positions `1..=k` come from the nested meets `J_1 ⊂ ⋯ ⊂ J_k`;
/// positions `k+1..=n` come from the same construction applied to
/// `w₀ x w₀ ⪰ w₀ u w₀`, whose first `n - k` values are the reflection of
/// `[n] ∖ J`.
pub fn minimal_lift(u: &Perm, j: &[usize]) -> Option<Perm> {
    let n = u.n();
    let mut target = j.to_vec();
    target.sort_unstable();
    target.dedup();
    if target.len() != j.len() || target.iter().any(|&x| x == 0 || x > n) {
        return None;
    }
    let k = target.len();
    if !set_leq(&u.prefix_set(k), &target) {
        return None;
    }
    let front = lift_front(u, &target)?;
    // x ⪰ u iff w0 x w0 ⪰ w0 u w0, and (w0 x w0)(i) = n+1 - x(n+1-i).
    let conj = |p: &Perm| -> Perm {
        let imgs: Vec<usize> = (1..=n).map(|i| n + 1 - p.get(n + 1 - i)).collect();
        Perm::new(&imgs).expect("conjugate of a permutation")
    };
    let uc = conj(u);
    let mut back_target: Vec<usize> = (1..=n)
        .filter(|x| !target.contains(x))
        .map(|x| n + 1 - x)
        .collect();
    back_target.sort_unstable();
    let back = lift_front(&uc, &back_target)?;
    let mut images = front;
    images.extend(back.iter().rev().map(|&y| n + 1 - y));
    Perm::new(&images).ok()
}

/// The greedy lift of a sequence of columns starting from `u`: each step is
/// the minimal lift of the previous permutation. Returns the chain, or `None`
/// when some lift fails.
pub fn greedy_chain(columns: &[Vec<usize>], u: &Perm) -> Option<Vec<Perm>> {
    let mut out = Vec::with_capacity(columns.len());
    let mut x = u.clone();
    for col in columns {
        x = minimal_lift(&x, col)?;
        out.push(x.clone());
    }
    Some(out)
}

/// Whether the columns `I_1, ..., I_m` (cardinalities weakly decreasing) are
/// standard for `(u, w)`: some chain `u ⪯ v_1 ⪯ ⋯ ⪯ v_m ⪯ w` has
/// `v_j[|I_j|] = I_j`. Decided greedily by [`greedy_chain`].
pub fn is_standard_columns(columns: &[Vec<usize>], u: &Perm, w: &Perm) -> bool {
    if columns.windows(2).any(|c| c[0].len() < c[1].len()) {
        return false;
    }
    match greedy_chain(columns, u) {
        Some(chain) => chain.last().map_or(u.bruhat_leq(w), |x| x.bruhat_leq(w)),
        None => false,
    }
}

/// Standardness of a tableau. A reverse tableau asks instead for a chain
/// `w ⪰ v_1 ⪰ ⋯ ⪰ v_m ⪰ u`; it is decided by reflecting entries
/// `i -> n+1-i` and testing the pair `(w₀ w, w₀ u)`.
pub fn is_standard(t: &Tableau, u: &Perm, w: &Perm) -> bool {
    match t.orientation() {
        Orientation::Semistandard => is_standard_columns(&t.columns(), u, w),
        Orientation::Reverse => {
            let n = u.n();
            let w0 = Perm::longest(n);
            match t.reflect(n) {
                Ok(r) => is_standard_columns(
                    &r.columns(),
                    &w0.compose(w).expect("same size"),
                    &w0.compose(u).expect("same size"),
                ),
                Err(_) => false,
            }
        }
    }
}

/// The number of SSYT of the given shape and content that are standard for
/// `(u, w)`. The shape may carry trailing zeros.
pub fn standard_count(shape: &Partition, content: &[usize], u: &Perm, w: &Perm) -> usize {
    ssyt_with_content(shape, content)
        .iter()
        .filter(|t| is_standard(t, u, w))
        .count()
}

/// The mountain permutation `a_1 ⋯ a_{j} n b_1 ⋯` with increasing `a`'s
/// forming `I ∖ {n}` and the remaining values decreasing after `n`.
pub fn mountain(n: usize, set: &[usize]) -> Result<Perm> {
    if set.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::Invalid(format!("{set:?} is not a subset of [{n}]")));
    }
    let mut a: Vec<usize> = set.iter().copied().filter(|&x| x != n).collect();
    a.sort_unstable();
    a.dedup();
    let mut b: Vec<usize> = (1..n).filter(|x| !a.contains(x)).collect();
    b.reverse();
    let mut images = a;
    images.push(n);
    images.extend(b);
    Perm::new(&images)
}

/// The facets of `Δ_k(u, w)`: `{v_0[k], ..., v_m[k]}` over the saturated
/// k-Bruhat chains, deduplicated and sorted.
pub fn delta_k_facets(u: &Perm, w: &Perm, k: usize) -> Vec<BTreeSet<Vec<usize>>> {
    let facets: BTreeSet<BTreeSet<Vec<usize>>> = k_chains(u, w, k)
        .iter()
        .map(|c| c.perms.iter().map(|v| v.prefix_set(k)).collect())
        .collect();
    facets.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::bruhat_interval;
    use proptest::prelude::*;

    fn p(s: &str) -> Perm {
        s.parse().unwrap()
    }

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute force: the Bruhat-minimal elements of `{x ⪰ u, x[k] = J}`.
    fn brute_minimal(u: &Perm, j: &[usize]) -> Vec<Perm> {
        let k = j.len();
        let cands: Vec<Perm> = Perm::all(u.n())
            .into_iter()
            .filter(|x| u.bruhat_leq(x) && x.prefix_set(k) == j)
            .collect();
        cands
            .iter()
            .filter(|x| !cands.iter().any(|y| y != *x && y.bruhat_leq(x)))
            .cloned()
            .collect()
    }

    /// Brute force chain search: the set of `v` reachable after each column.
    fn brute_standard(columns: &[Vec<usize>], u: &Perm, w: &Perm) -> bool {
        let all = Perm::all(u.n());
        let mut reach: Vec<Perm> = vec![u.clone()];
        for col in columns {
            reach = all
                .iter()
                .filter(|v| {
                    v.prefix_set(col.len()) == *col && reach.iter().any(|r| r.bruhat_leq(v))
                })
                .cloned()
                .collect();
        }
        reach.iter().any(|v| v.bruhat_leq(w))
    }

    #[test]
    fn tableau_basics() {
        let t = Tableau::parse("1123/23/4", Orientation::Semistandard).unwrap();
        assert_eq!(
            pluecker_monomial(&t),
            vec![vec![1, 2, 4], vec![1, 3], vec![2], vec![3]]
        );
        assert_eq!(t.content(4), vec![2, 2, 2, 1]);
        assert_eq!(t.shape(), part("4,2,1"));
        assert_eq!(t.to_string(), "1123/23/4");
        assert!(Tableau::parse("21", Orientation::Semistandard).is_err());
        assert!(Tableau::parse("11/1", Orientation::Semistandard).is_err());
        assert!(Tableau::parse("32/1", Orientation::Reverse).is_ok());
        let empty = Tableau::parse("", Orientation::Semistandard).unwrap();
        assert!(pluecker_monomial(&empty).is_empty());
        let col = Tableau::from_columns(&[vec![1, 2, 3]], Orientation::Semistandard).unwrap();
        assert_eq!(pluecker_monomial(&col), vec![vec![1, 2, 3]]);
        assert_eq!(part("(3,1,0)").conjugate(), part("2,1,1"));
    }

    #[test]
    fn ssyt_counts() {
        let ts = ssyt_with_content(&part("2,1"), &[1, 1, 1]);
        let strs: BTreeSet<String> = ts.iter().map(|t| t.to_string()).collect();
        assert_eq!(
            strs,
            ["12/3", "13/2"].iter().map(|s| s.to_string()).collect()
        );
        assert_eq!(kostka(&part("2,2"), &[1, 1, 1, 1]), 2);
        assert_eq!(kostka(&part("3,2,1"), &[1; 6]), 16);
        assert_eq!(ssyt(&part("2,1"), 3).len(), 8);
    }

    #[test]
    fn minimal_lift_examples() {
        assert_eq!(minimal_lift(&p("1324"), &[1, 2, 4]), Some(p("1423")));
        assert_eq!(minimal_lift(&p("1423"), &[3]), Some(p("3412")));
        assert_eq!(
            minimal_lift(&Perm::identity(4), &[1, 2]),
            Some(Perm::identity(4))
        );
        assert_eq!(minimal_lift(&p("3124"), &[1, 2]), None);
    }

    #[test]
    fn minimal_lift_matches_brute_force() {
        for n in 1..=5 {
            for u in Perm::all(n) {
                for k in 1..=n {
                    for j in crate::affine::k_subsets(n, k) {
                        let brute = brute_minimal(&u, &j);
                        match minimal_lift(&u, &j) {
                            Some(x) => assert_eq!(brute, vec![x], "{u} {j:?}"),
                            None => assert!(brute.is_empty(), "{u} {j:?}"),
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn standardness_examples() {
        let (u, w) = (p("1324"), p("4231"));
        assert!(!is_standard_columns(&[vec![1, 2, 4], vec![3]], &u, &w));
        assert_eq!(standard_count(&part("2,1,1,0"), &[1, 1, 1, 1], &u, &w), 2);
        assert_eq!(standard_count(&part("3,2,1,0"), &[2, 1, 2, 1], &u, &w), 2);
        let e3 = Perm::identity(3);
        assert_eq!(
            standard_count(&part("2,1,0"), &[1, 1, 1], &e3, &Perm::longest(3)),
            2
        );
        // Δ12 Δ3 is standard exactly when u ⪯ 213 ⪯ 312 ⪯ w.
        for u in Perm::all(3) {
            for w in Perm::all(3) {
                if !u.bruhat_leq(&w) {
                    continue;
                }
                let expect = u.bruhat_leq(&p("213")) && p("312").bruhat_leq(&w);
                assert_eq!(is_standard_columns(&[vec![1, 2], vec![3]], &u, &w), expect);
                let expect = u.bruhat_leq(&p("132")) && p("231").bruhat_leq(&w);
                assert_eq!(is_standard_columns(&[vec![1, 3], vec![2]], &u, &w), expect);
            }
        }
    }

    #[test]
    fn greedy_agrees_with_chain_search() {
        for n in 2..=4 {
            for size in 1..=6 {
                for shape in Partition::all(size, n) {
                    for t in ssyt(&shape, n) {
                        let cols = t.columns();
                        for u in Perm::all(n) {
                            for w in bruhat_interval(&u, &Perm::longest(n)) {
                                assert_eq!(
                                    is_standard_columns(&cols, &u, &w),
                                    brute_standard(&cols, &u, &w)
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ssyt_is_standard_for_the_whole_flag_variety() {
        // Any sequence of columns with weakly decreasing sizes lifts to a
        // chain exactly when it forms an SSYT.
        for n in 2..=4 {
            let (e, w0) = (Perm::identity(n), Perm::longest(n));
            let subsets: Vec<Vec<usize>> = (1..=n)
                .flat_map(|k| crate::affine::k_subsets(n, k))
                .collect();
            for a in &subsets {
                for b in subsets.iter().filter(|b| b.len() <= a.len()) {
                    let cols = vec![a.clone(), b.clone()];
                    let is_ssyt = Tableau::from_columns(&cols, Orientation::Semistandard).is_ok();
                    assert_eq!(is_standard_columns(&cols, &e, &w0), is_ssyt, "{cols:?}");
                    if is_ssyt {
                        let chain = [mountain(n, a).unwrap(), mountain(n, b).unwrap()];
                        assert!(chain[0].bruhat_leq(&chain[1]), "{cols:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn mountains() {
        assert_eq!(mountain(4, &[2, 4]).unwrap(), p("2431"));
        assert_eq!(mountain(4, &[1, 3]).unwrap(), p("1342"));
        assert_eq!(mountain(4, &[1, 2]).unwrap(), p("1243"));
        for k in 1..=4 {
            for s in crate::affine::k_subsets(4, k) {
                assert_eq!(mountain(4, &s).unwrap().prefix_set(k), s);
            }
        }
    }

    #[test]
    fn reverse_tableaux() {
        let n = 3;
        let (e, w0) = (Perm::identity(n), Perm::longest(n));
        let t = Tableau::parse("32/1", Orientation::Reverse).unwrap();
        assert!(is_standard(&t, &e, &w0));
        // Reverse standardness asks for a chain w ⪰ v_1 ⪰ v_2 ⪰ u.
        for u in Perm::all(n) {
            for w in bruhat_interval(&u, &w0) {
                let cols: Vec<Vec<usize>> = t
                    .columns()
                    .into_iter()
                    .map(|mut c| {
                        c.sort_unstable();
                        c
                    })
                    .collect();
                let all = Perm::all(n);
                let exists = all.iter().any(|v1| {
                    v1.prefix_set(2) == cols[0]
                        && v1.bruhat_leq(&w)
                        && all.iter().any(|v2| {
                            v2.prefix_set(1) == cols[1] && v2.bruhat_leq(v1) && u.bruhat_leq(v2)
                        })
                });
                assert_eq!(is_standard(&t, &u, &w), exists, "{u} {w} {cols:?}");
            }
        }
    }

    #[test]
    fn delta_k_examples() {
        let set =
            |v: &[&[usize]]| -> BTreeSet<Vec<usize>> { v.iter().map(|s| s.to_vec()).collect() };
        assert_eq!(
            delta_k_facets(&p("2143"), &p("3412"), 2),
            vec![
                set(&[&[1, 2], &[1, 3], &[3, 4]]),
                set(&[&[1, 2], &[2, 4], &[3, 4]])
            ]
        );
        assert_eq!(
            delta_k_facets(&p("2134"), &p("3412"), 2),
            vec![
                set(&[&[1, 2], &[1, 3], &[2, 3], &[3, 4]]),
                set(&[&[1, 2], &[2, 3], &[2, 4], &[3, 4]])
            ]
        );
        assert_eq!(
            delta_k_facets(&p("2413"), &p("2413"), 2),
            vec![set(&[&[2, 4]])]
        );
    }

    #[test]
    fn delta_k_depends_only_on_positroid() {
        let (k, n) = (2, 4);
        let mut groups: std::collections::BTreeMap<Vec<i64>, Vec<BTreeSet<Vec<usize>>>> =
            Default::default();
        for u in Perm::all(n) {
            for w in Perm::all(n) {
                if !crate::perm::k_bruhat_leq(&u, &w, k) {
                    continue;
                }
                let f = crate::affine::from_pair(&u, &w, k).unwrap();
                let facets = delta_k_facets(&u, &w, k);
                match groups.get(f.window()) {
                    Some(prev) => assert_eq!(prev, &facets, "{u} {w}"),
                    None => {
                        groups.insert(f.window().to_vec(), facets);
                    }
                }
            }
        }
        assert_eq!(groups.len(), 33);
    }

    proptest! {
        #[test]
        fn standard_is_closed_under_subsequences(
            n in 3usize..=4,
            seed in 0u64..1000,
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let perms = Perm::all(n);
            let u = perms[rng.gen_range(0..perms.len())].clone();
            let w = perms[rng.gen_range(0..perms.len())].clone();
            let shape = Partition::new(vec![3, 2, 1]).unwrap();
            for t in ssyt(&shape, n).into_iter().filter(|t| is_standard(t, &u, &w)) {
                let cols = t.columns();
                for skip in 0..cols.len() {
                    let sub: Vec<Vec<usize>> = cols.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, c)| c.clone()).collect();
                    prop_assert!(is_standard_columns(&sub, &u, &w));
                }
            }
        }
    }
}
