//! Symmetric polynomials in the monomial and Schur bases, affine Stanley
//! symmetric functions, cohomology classes of positroid varieties, and
//! Bergeron–Sottile chain sums over k-Bruhat intervals.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

use crate::affine::{pair_from_f, positroid_dim, AffinePerm, BoundedAffinePerm};
use crate::error::{Error, Result};
use crate::perm::{k_chains, Perm};
use crate::poly::Poly;
use crate::scalar::Q;
use crate::tableaux::{compositions, kostka, Partition};

/// Coefficients indexed by partitions.
pub type CoeffMap = BTreeMap<Partition, i64>;

/// A symmetric polynomial in `nvars` variables, stored in the monomial basis
/// `m_λ` with `ℓ(λ) ≤ nvars`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SymFunc {
    nvars: usize,
    mono: CoeffMap,
}

fn exponent_key(e: &[u32]) -> Partition {
    let mut parts: Vec<usize> = e.iter().map(|&x| x as usize).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).expect("sorted exponents form a partition")
}

fn add_into(map: &mut CoeffMap, key: Partition, c: i64) {
    if c == 0 {
        return;
    }
    let slot = map.entry(key.clone()).or_insert(0);
    *slot = slot.checked_add(c).expect("coefficient overflow");
    if *slot == 0 {
        map.remove(&key);
    }
}

impl SymFunc {
    pub fn zero(nvars: usize) -> SymFunc {
        SymFunc {
            nvars,
            mono: CoeffMap::new(),
        }
    }

    pub fn one(nvars: usize) -> SymFunc {
        SymFunc {
            nvars,
            mono: CoeffMap::from([(Partition::empty(), 1)]),
        }
    }

    /// From the coefficients of all monomials `x^α`, checking symmetry: the
    /// coefficient must depend only on the sorted exponent vector.
    pub fn from_exponents(nvars: usize, terms: &BTreeMap<Vec<u32>, i64>) -> Result<SymFunc> {
        let mut mono = CoeffMap::new();
        for (e, &c) in terms {
            if e.len() != nvars {
                return Err(Error::Mismatch(format!(
                    "exponent {e:?} for {nvars} variables"
                )));
            }
            if c == 0 {
                continue;
            }
            let key = exponent_key(e);
            match mono.get(&key) {
                Some(&prev) if prev != c => {
                    return Err(Error::Invalid(format!(
                        "not symmetric: x^{e:?} has coefficient {c}, not {prev}"
                    )));
                }
                _ => {
                    mono.insert(key, c);
                }
            }
        }
        let f = SymFunc { nvars, mono };
        // Every rearrangement of each exponent must be present.
        let expected: usize = f.mono.keys().map(|l| arrangements(l, nvars)).sum();
        let present = terms.values().filter(|&&c| c != 0).count();
        if expected != present {
            return Err(Error::Invalid(
                "not symmetric: some rearranged monomials are missing".into(),
            ));
        }
        Ok(f)
    }

    /// From a polynomial in `nvars` variables.
    pub fn from_poly(p: &Poly, nvars: usize) -> Result<SymFunc> {
        let mut terms = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.len() > nvars && m[nvars..].iter().any(|&x| x > 0) {
                return Err(Error::Mismatch(format!(
                    "polynomial uses more than {nvars} variables"
                )));
            }
            let mut e = m.clone();
            e.resize(nvars, 0);
            let c = i64::try_from(c.clone())
                .map_err(|_| Error::TooLarge("coefficient exceeds i64".into()))?;
            terms.insert(e, c);
        }
        SymFunc::from_exponents(nvars, &terms)
    }

    /// From monomial-basis coefficients; partitions longer than `nvars`
    /// vanish.
    pub fn from_monomials(nvars: usize, coeffs: &CoeffMap) -> SymFunc {
        let mut mono = CoeffMap::new();
        for (l, &c) in coeffs {
            if l.len() <= nvars {
                add_into(&mut mono, l.clone(), c);
            }
        }
        SymFunc { nvars, mono }
    }

    /// `Σ c_λ s_λ(x_1, …, x_nvars)`.
    pub fn from_schur(nvars: usize, coeffs: &CoeffMap) -> SymFunc {
        let mut mono = CoeffMap::new();
        for (l, &c) in coeffs {
            if l.len() > nvars {
                continue;
            }
            for mu in Partition::all(l.size(), nvars) {
                let kc = kostka(l, mu.parts()) as i64;
                add_into(&mut mono, mu, c * kc);
            }
        }
        SymFunc { nvars, mono }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn monomial_coeffs(&self) -> &CoeffMap {
        &self.mono
    }

    pub fn is_zero(&self) -> bool {
        self.mono.is_empty()
    }

    /// Largest degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.mono.keys().map(Partition::size).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.mono.keys().map(Partition::size);
        sizes.next().is_none_or(|d| sizes.all(|s| s == d))
    }

    pub fn to_poly(&self) -> Poly {
        let mut out = Poly::constant(0);
        for (l, &c) in &self.mono {
            let mut e: Vec<u32> = l.parts().iter().map(|&p| p as u32).collect();
            e.resize(self.nvars, 0);
            e.sort_unstable();
            loop {
                out = out + Poly::monomial(&e, c);
                if !next_permutation(&mut e) {
                    break;
                }
            }
        }
        out
    }

    pub fn eval(&self, xs: &[Q]) -> Q {
        self.to_poly().eval(xs)
    }

    /// Coefficients in the Schur basis `s_λ(x_1, …, x_nvars)`, found by
    /// peeling off the lexicographically largest monomial term.
    pub fn schur_expand(&self) -> CoeffMap {
        let mut rest = self.mono.clone();
        let mut out = CoeffMap::new();
        while let Some((lead, &c)) = rest.iter().next_back() {
            let lead = lead.clone();
            for mu in Partition::all(lead.size(), self.nvars) {
                let kc = kostka(&lead, mu.parts()) as i64;
                add_into(&mut rest, mu, -c * kc);
            }
            add_into(&mut out, lead, c);
        }
        out
    }
}

impl std::ops::Add for SymFunc {
    type Output = SymFunc;
    fn add(mut self, o: SymFunc) -> SymFunc {
        assert_eq!(
            self.nvars, o.nvars,
            "adding symmetric functions in different variable sets"
        );
        for (l, c) in o.mono {
            add_into(&mut self.mono, l, c);
        }
        self
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_basis(&self.mono, "m"))
    }
}

/// Number of distinct rearrangements of `λ` padded to `nvars` entries.
fn arrangements(l: &Partition, nvars: usize) -> usize {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for i in 1..=nvars {
        *counts.entry(l.part(i)).or_insert(0) += 1;
    }
    let fact = |m: usize| (1..=m).product::<usize>();
    counts.values().fold(fact(nvars), |acc, &c| acc / fact(c))
}

fn next_permutation(v: &mut [u32]) -> bool {
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

/// Renders `c_λ b_λ` terms as `s21 + 2 s111 - s3`, or `0`.
pub fn format_basis(coeffs: &CoeffMap, basis: &str) -> String {
    if coeffs.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (l, &c) in coeffs.iter().rev() {
        let name = if l.is_empty() {
            format!("{basis}∅")
        } else if l.parts().iter().all(|&p| p < 10) {
            format!(
                "{basis}{}",
                l.parts().iter().map(|p| p.to_string()).collect::<String>()
            )
        } else {
            format!("{basis}{l}")
        };
        let sign = if c < 0 { "-" } else { "+" };
        if out.is_empty() {
            if c < 0 {
                out.push('-');
            }
        } else {
            out += &format!(" {sign} ");
        }
        if c.abs() != 1 {
            out += &format!("{} ", c.abs());
        }
        out += &name;
    }
    out
}

/// One `λ:c` line per term, partitions as comma lists (empty for `∅`).
pub fn format_coeff_lines(coeffs: &CoeffMap) -> String {
    coeffs
        .iter()
        .rev()
        .map(|(l, c)| {
            let parts: Vec<String> = l.parts().iter().map(|p| p.to_string()).collect();
            format!("{}:{c}\n", parts.join(","))
        })
        .collect()
}

/// The simple reflection `s_i` of the affine symmetric group, `1 ≤ i ≤ n`;
/// `s_n` exchanges `n` and `n + 1`.
pub fn affine_simple(n: usize, i: usize) -> AffinePerm {
    let mut w: Vec<i64> = (1..=n as i64).collect();
    if i < n {
        w.swap(i - 1, i);
    } else {
        w[0] = 0;
        w[n - 1] = n as i64 + 1;
    }
    AffinePerm::new(w).expect("simple reflections are affine permutations")
}

/// The `2^n - 1` cyclically decreasing elements with their lengths, one per
/// proper subset of `{s_1, …, s_n}`, identity first. Within a subset,
/// `s_{i+1}` precedes `s_i` (cyclically, `s_1` precedes `s_n`).
pub fn cyclically_decreasing(n: usize) -> Vec<(AffinePerm, usize)> {
    let mut out = Vec::with_capacity((1 << n) - 1);
    for mask in 0u32..(1u32 << n) - 1 {
        let has = |i: usize| mask >> ((i - 1) % n) & 1 == 1;
        // Start each maximal cyclic run at its top letter, then descend.
        let mut word = Vec::new();
        for top in 1..=n {
            if has(top) && !has(top % n + 1) {
                let mut i = top;
                while has(i) {
                    word.push(i);
                    i = if i == 1 { n } else { i - 1 };
                    if i == top {
                        break;
                    }
                }
            }
        }
        let c = word.iter().fold(AffinePerm::shift(n, 0), |acc, &i| {
            acc.compose(&affine_simple(n, i)).expect("same period")
        });
        out.push((c, word.len()));
    }
    out
}

type ExponentMap = BTreeMap<Vec<u32>, i64>;

/// The affine Stanley symmetric function `F_g(x_1, …, x_N)`: one monomial
/// `x_1^{ℓ(c_1)} ⋯ x_N^{ℓ(c_N)}` per factorization `g = c_1 ⋯ c_N` into
/// cyclically decreasing elements with lengths adding up to `ℓ(g)`. `N`
/// defaults to `ℓ(g)`.
pub fn affine_stanley(g: &AffinePerm, nvars: Option<usize>) -> Result<SymFunc> {
    if g.displacement() != 0 {
        return Err(Error::Precondition(format!(
            "{g} does not have displacement zero"
        )));
    }
    let n = g.n();
    let d = g.inversions();
    let nvars = nvars.unwrap_or(d);
    let cds = cyclically_decreasing(n);
    let mut memo = HashMap::new();
    let terms = factorizations(g, nvars, &cds, &mut memo);
    SymFunc::from_exponents(nvars, &terms)
}

fn factorizations(
    g: &AffinePerm,
    r: usize,
    cds: &[(AffinePerm, usize)],
    memo: &mut HashMap<(Vec<i64>, usize), Rc<ExponentMap>>,
) -> Rc<ExponentMap> {
    let key = (g.window().to_vec(), r);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let len = g.inversions();
    let mut out = ExponentMap::new();
    if r == 0 {
        if len == 0 {
            out.insert(Vec::new(), 1);
        }
    } else {
        for (c, lc) in cds {
            if *lc > len {
                continue;
            }
            let rest = c.inverse().compose(g).expect("same period");
            if rest.inversions() + lc != len {
                continue;
            }
            for (e, &cnt) in factorizations(&rest, r - 1, cds, memo).iter() {
                let mut full = Vec::with_capacity(r);
                full.push(*lc as u32);
                full.extend_from_slice(e);
                *out.entry(full).or_insert(0) += cnt;
            }
        }
    }
    let out = Rc::new(out);
    memo.insert(key, out.clone());
    out
}

/// Schur coefficients of the class of the positroid variety `Π_f` in the
/// cohomology of `G(k, n)`: the affine Stanley function of `g(i) = f(i) - k`
/// in `k` variables, with partitions outside the `k × (n - k)` box dropped.
pub fn positroid_class(f: &BoundedAffinePerm) -> Result<CoeffMap> {
    let (n, k) = (f.n(), f.k());
    let g = AffinePerm::shift(n, -(k as i64)).compose(f.affine())?;
    let schur = affine_stanley(&g, Some(k))?.schur_expand();
    Ok(schur
        .into_iter()
        .filter(|(l, _)| l.part(1) <= n - k)
        .collect())
}

/// Coefficient of `x^α` in the quasisymmetric `Q_{b_1 ⋯ b_m}`: one when every
/// descent `b_j > b_{j+1}` falls between different variables of the weakly
/// increasing index sequence `1^{α_1} 2^{α_2} ⋯`, zero otherwise.
pub fn q_coefficient(labels: &[usize], alpha: &[usize]) -> i64 {
    if alpha.iter().sum::<usize>() != labels.len() {
        return 0;
    }
    let idx: Vec<usize> = alpha
        .iter()
        .enumerate()
        .flat_map(|(v, &a)| std::iter::repeat_n(v, a))
        .collect();
    let ok = (1..labels.len()).all(|j| labels[j - 1] <= labels[j] || idx[j - 1] < idx[j]);
    i64::from(ok)
}

/// `Q_{b_1 ⋯ b_m}(x_1, …, x_N)` as its full table of exponent coefficients.
pub fn q_function(labels: &[usize], nvars: usize) -> BTreeMap<Vec<u32>, i64> {
    compositions(labels.len(), nvars)
        .into_iter()
        .filter_map(|a| {
            let c = q_coefficient(labels, &a);
            (c != 0).then(|| (a.iter().map(|&x| x as u32).collect(), c))
        })
        .collect()
}

/// `S_{[u,w]_k} = Σ Q_{b_1 ⋯ b_m}` over labeled saturated k-Bruhat chains
/// from `u` to `w`, in `N` variables (default: the chain length). Zero when
/// `u ⋠_k w`.
pub fn bergeron_sottile(u: &Perm, w: &Perm, k: usize, nvars: Option<usize>) -> Result<SymFunc> {
    if u.n() != w.n() {
        return Err(Error::Mismatch("permutations of different sizes".into()));
    }
    let m = w.length().saturating_sub(u.length());
    let nvars = nvars.unwrap_or(m);
    let mut total = BTreeMap::new();
    for chain in k_chains(u, w, k) {
        for (e, c) in q_function(&chain.labels, nvars) {
            *total.entry(e).or_insert(0) += c;
        }
    }
    SymFunc::from_exponents(nvars, &total)
}

/// The complement of `λ` in the `rows × cols` box, read in reverse:
/// `λ^∨_i = cols - λ_{rows + 1 - i}`. `None` if `λ` does not fit.
pub fn box_complement(l: &Partition, rows: usize, cols: usize) -> Option<Partition> {
    if l.len() > rows || l.part(1) > cols {
        return None;
    }
    Partition::new((1..=rows).map(|i| cols - l.part(rows + 1 - i)).collect()).ok()
}

/// Checks that the Bergeron–Sottile coefficient of every `s_λ` in the box with
/// `|λ| = dim Π_f` equals the coefficient of `s_{λ^∨}` in the class of `Π_f`.
pub fn duality_check(f: &BoundedAffinePerm) -> Result<bool> {
    let (n, k) = (f.n(), f.k());
    let (u, w) = pair_from_f(f)?;
    let dim = positroid_dim(f);
    let bs = bergeron_sottile(&u, &w, k, Some(k))?.schur_expand();
    let class = positroid_class(f)?;
    for l in Partition::all(dim, k) {
        let Some(comp) = box_complement(&l, k, n - k) else {
            continue;
        };
        let a = bs.get(&l).copied().unwrap_or(0);
        let b = class.get(&comp).copied().unwrap_or(0);
        if a != b {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;
    use crate::scalar::{q, qi};
    use proptest::prelude::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn coeffs(items: &[(&str, i64)]) -> CoeffMap {
        items.iter().map(|&(l, c)| (part(l), c)).collect()
    }

    fn aff(s: &str) -> AffinePerm {
        s.parse().unwrap()
    }

    fn perm(s: &str) -> Perm {
        s.parse().unwrap()
    }

    /// `s_λ(x) = det(x_i^{λ_j + N - j}) / det(x_i^{N - j})` at distinct
    /// points.
    fn bialternant(l: &Partition, xs: &[Q]) -> Q {
        let nn = xs.len();
        let pow = |x: &Q, e: usize| (0..e).fold(qi(1), |acc, _| acc * x);
        let num = Matrix::from_rows(
            xs.iter()
                .map(|x| (1..=nn).map(|j| pow(x, l.part(j) + nn - j)).collect())
                .collect(),
            &(),
        )
        .unwrap();
        let den = Matrix::from_rows(
            xs.iter()
                .map(|x| (1..=nn).map(|j| pow(x, nn - j)).collect())
                .collect(),
            &(),
        )
        .unwrap();
        num.det() / den.det()
    }

    #[test]
    fn cyclically_decreasing_elements() {
        for n in 2..=5 {
            let cds = cyclically_decreasing(n);
            assert_eq!(cds.len(), (1 << n) - 1);
            let distinct: std::collections::BTreeSet<Vec<i64>> =
                cds.iter().map(|(c, _)| c.window().to_vec()).collect();
            assert_eq!(distinct.len(), cds.len());
            for (c, l) in &cds {
                assert_eq!(c.inversions(), *l);
                assert_eq!(c.displacement(), 0);
            }
        }
        let cds = cyclically_decreasing(4);
        let s13 = affine_simple(4, 1).compose(&affine_simple(4, 3)).unwrap();
        assert!(cds.iter().any(|(c, _)| *c == s13));
        // s_1 before s_4 in the cyclic order: s_1 s_4 is present, s_4 s_1 is not.
        let s14 = affine_simple(4, 1).compose(&affine_simple(4, 4)).unwrap();
        let s41 = affine_simple(4, 4).compose(&affine_simple(4, 1)).unwrap();
        assert!(cds.iter().any(|(c, _)| *c == s14));
        assert!(!cds.iter().any(|(c, _)| *c == s41));
        assert_eq!(cyclically_decreasing(2).len(), 3);
    }

    #[test]
    fn stanley_of_small_words() {
        let s1s2 = affine_simple(3, 1).compose(&affine_simple(3, 2)).unwrap();
        let s2s1 = affine_simple(3, 2).compose(&affine_simple(3, 1)).unwrap();
        assert_eq!(
            affine_stanley(&s1s2, None).unwrap().schur_expand(),
            coeffs(&[("1,1", 1)])
        );
        assert_eq!(
            affine_stanley(&s2s1, None).unwrap().schur_expand(),
            coeffs(&[("2", 1)])
        );
        let id = AffinePerm::shift(3, 0);
        assert_eq!(affine_stanley(&id, None).unwrap(), SymFunc::one(0));
        assert!(affine_stanley(&AffinePerm::shift(3, 1), None).is_err());
    }

    #[test]
    fn non_schur_positive_stanley() {
        let g = aff("[-1,4,1,6]");
        let f = affine_stanley(&g, None).unwrap();
        assert_eq!(
            f.monomial_coeffs(),
            &coeffs(&[("1,1,1,1", 4), ("2,1,1", 2), ("2,2", 1)])
        );
        assert_eq!(
            f.schur_expand(),
            coeffs(&[("2,2", 1), ("2,1,1", 1), ("1,1,1,1", -1)])
        );
        // Eleven factorization shapes with four variables give these counts.
        let direct =
            SymFunc::from_monomials(4, &coeffs(&[("1,1,1,1", 4), ("2,1,1", 2), ("2,2", 1)]));
        assert_eq!(direct.schur_expand(), f.schur_expand());
    }

    #[test]
    fn stanley_of_321_avoiding_is_schur_positive() {
        for n in 2..=4 {
            for w in Perm::all(n) {
                let imgs = w.images();
                let has_321 = (0..n).any(|a| {
                    (a + 1..n).any(|b| (b + 1..n).any(|c| imgs[a] > imgs[b] && imgs[b] > imgs[c]))
                });
                if has_321 {
                    continue;
                }
                let st = affine_stanley(&AffinePerm::from_perm(&w), None).unwrap();
                assert!(st.schur_expand().values().all(|&c| c > 0), "{w}");
            }
        }
    }

    #[test]
    fn positroid_classes() {
        let class = |s: &str| positroid_class(&s.parse().unwrap()).unwrap();
        assert_eq!(class("[4,3,6,5]"), coeffs(&[("1,1", 1), ("2", 1)]));
        assert_eq!(class("[3,4,6,5]"), coeffs(&[("1", 1)]));
        assert_eq!(class("[1,6,3,8]"), coeffs(&[("2,2", 1)]));
        assert_eq!(class("[3,4,5,6]"), coeffs(&[("", 1)]));
    }

    #[test]
    fn bergeron_sottile_examples() {
        let bs = bergeron_sottile(&perm("2143"), &perm("3412"), 2, None).unwrap();
        assert_eq!(bs.schur_expand(), coeffs(&[("2", 1), ("1,1", 1)]));
        let bs = bergeron_sottile(&perm("2134"), &perm("3412"), 2, None).unwrap();
        assert_eq!(bs.schur_expand(), coeffs(&[("2,1", 1)]));
        let chains = k_chains(&perm("2134"), &perm("3412"), 2);
        let labels: Vec<Vec<usize>> = chains.iter().map(|c| c.labels.clone()).collect();
        assert_eq!(labels.len(), 2);
        assert!(labels.contains(&vec![3, 4, 3]) && labels.contains(&vec![3, 2, 4]));
        assert_eq!(
            bergeron_sottile(&perm("2143"), &perm("2143"), 2, None).unwrap(),
            SymFunc::one(0)
        );
        // 1234 and 2134 are not comparable in 2-Bruhat order.
        assert!(bergeron_sottile(&perm("2134"), &perm("1234"), 2, None)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn q_functions_by_hand() {
        // Q_34 = h_2, Q_43 = e_2.
        let q34 = SymFunc::from_exponents(3, &q_function(&[3, 4], 3)).unwrap();
        let q43 = SymFunc::from_exponents(3, &q_function(&[4, 3], 3)).unwrap();
        assert_eq!(q34.schur_expand(), coeffs(&[("2", 1)]));
        assert_eq!(q43.schur_expand(), coeffs(&[("1,1", 1)]));
        // Q_343 alone is only quasisymmetric.
        assert!(SymFunc::from_exponents(3, &q_function(&[3, 4, 3], 3)).is_err());
    }

    #[test]
    fn duality_on_examples_and_all_of_g24() {
        assert!(duality_check(&"[3,4,6,5]".parse().unwrap()).unwrap());
        assert!(duality_check(&BoundedAffinePerm::from_window(vec![3, 4, 5, 6]).unwrap()).unwrap());
        for f in BoundedAffinePerm::all(2, 4) {
            assert!(duality_check(&f).unwrap(), "{f}");
        }
        for f in BoundedAffinePerm::all(2, 5)
            .into_iter()
            .chain(BoundedAffinePerm::all(3, 5))
        {
            assert!(duality_check(&f).unwrap(), "{f}");
        }
    }

    #[test]
    fn degree_laws() {
        use crate::affine::affine_length;
        for f in BoundedAffinePerm::all(2, 4)
            .into_iter()
            .chain(BoundedAffinePerm::all(2, 5))
        {
            let g = AffinePerm::shift(f.n(), -(f.k() as i64))
                .compose(f.affine())
                .unwrap();
            let st = affine_stanley(&g, None).unwrap();
            assert!(st.is_homogeneous());
            assert_eq!(st.degree().unwrap_or(0), affine_length(&f), "{f}");
            let (u, w) = pair_from_f(&f).unwrap();
            let bs = bergeron_sottile(&u, &w, f.k(), None).unwrap();
            assert_eq!(bs.degree(), Some(positroid_dim(&f)), "{f}");
        }
    }

    #[test]
    fn schur_basis_matches_bialternant() {
        let xs = [qi(2), q(1, 3), qi(-5), q(7, 2)];
        for size in 0..=6 {
            for l in Partition::all(size, 4) {
                let s = SymFunc::from_schur(4, &CoeffMap::from([(l.clone(), 1)]));
                assert_eq!(s.eval(&xs), bialternant(&l, &xs), "{l}");
                assert_eq!(s.schur_expand(), CoeffMap::from([(l, 1)]));
            }
        }
        // h_2 = m_2 + m_11 = s_2.
        let h2 = SymFunc::from_monomials(3, &coeffs(&[("2", 1), ("1,1", 1)]));
        assert_eq!(h2.schur_expand(), coeffs(&[("2", 1)]));
    }

    #[test]
    fn non_symmetric_input_is_rejected() {
        let p = Poly::var(0) * Poly::var(0) + Poly::var(1);
        assert!(SymFunc::from_poly(&p, 2).is_err());
        let e2 =
            Poly::var(0) * Poly::var(1) + Poly::var(0) * Poly::var(2) + Poly::var(1) * Poly::var(2);
        assert_eq!(
            SymFunc::from_poly(&e2, 3).unwrap().schur_expand(),
            coeffs(&[("1,1", 1)])
        );
        assert_eq!(SymFunc::from_poly(&e2, 3).unwrap().to_poly(), e2);
    }

    #[test]
    fn formatting() {
        let c = coeffs(&[("2,2", 1), ("2,1,1", 1), ("1,1,1,1", -1)]);
        assert_eq!(format_basis(&c, "s"), "s22 + s211 - s1111");
        assert_eq!(format_coeff_lines(&c), "2,2:1\n2,1,1:1\n1,1,1,1:-1\n");
        assert_eq!(format_basis(&CoeffMap::new(), "s"), "0");
        assert_eq!(box_complement(&part("2,1"), 2, 2), Some(part("1")));
        assert_eq!(box_complement(&part("3"), 2, 2), None);
    }

    fn partition_map() -> impl Strategy<Value = (usize, CoeffMap)> {
        (1usize..=5).prop_flat_map(|nvars| {
            let all: Vec<Partition> = (0..=8).flat_map(|s| Partition::all(s, nvars)).collect();
            (
                Just(nvars),
                prop::collection::btree_map(prop::sample::select(all), -5i64..=5, 0..5)
                    .prop_map(|m| m.into_iter().filter(|(_, c)| *c != 0).collect()),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn schur_round_trip((nvars, map) in partition_map()) {
            prop_assert_eq!(SymFunc::from_schur(nvars, &map).schur_expand(), map);
        }

        #[test]
        fn stanley_is_symmetric(seed in 0u64..1000) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            // A random product of simple reflections in the affine group.
            let n = rng.gen_range(3..=4);
            let mut g = AffinePerm::shift(n, 0);
            for _ in 0..rng.gen_range(0..=5) {
                g = g.compose(&affine_simple(n, rng.gen_range(1..=n))).unwrap();
            }
            let f = affine_stanley(&g, Some(3)).unwrap();
            let p = f.to_poly();
            let xs: Vec<Q> = (0..3).map(|_| q(rng.gen_range(-9..=9), rng.gen_range(1..=5))).collect();
            let swapped = vec![xs[1].clone(), xs[0].clone(), xs[2].clone()];
            let rotated = vec![xs[2].clone(), xs[0].clone(), xs[1].clone()];
            prop_assert_eq!(p.eval(&xs), p.eval(&swapped));
            prop_assert_eq!(p.eval(&xs), p.eval(&rotated));
        }
    }
}
