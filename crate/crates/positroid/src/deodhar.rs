//! Bott–Samelson chains of flags, distinguished subwords (masks), Deodhar
//! pieces and their Marsh–Rietsch parametrization, chamber minors,
//! R-polynomials and unipeak words.
//!
//! Two families of `2 x 2` blocks are used, embedded in rows and columns
//! `i, i+1` by [`rho`]:
//!
//! * [`bs_parametrize`] uses the sign-free `z_i(t) = [[t, 1], [1, 0]]`;
//! * [`mr_parametrize`] uses `y_i(t) = [[1, 0], [t, 1]]`,
//!   `ṡ_i = [[0, -1], [1, 0]]` and `ż_i(u) = [[u, 1], [-1, 0]]`.
//!
//! The two conventions are never mixed inside one chain.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{schubert_cell, FlagPoint, Matrix};
use crate::perm::{bruhat_interval, Perm, Word};
use crate::poly::{Poly, UniPoly};
use crate::scalar::{Field, Fp, Prime, Ring};

/// Largest `q^a` that the finite-field sweeps will enumerate.
pub const SWEEP_LIMIT: u64 = 10_000_000;

/// The status of one position of a distinguished subword.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Step {
    /// Letter omitted and `v s_i > v`: a torus coordinate.
    Equal,
    /// Letter used and `v s_i > v`.
    Up,
    /// Letter used and `v s_i < v`: an affine coordinate.
    Down,
}

/// A distinguished subword of a word, with its sequence `v⁰ = e, v¹, ..., vᵃ`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mask {
    word: Word,
    steps: Vec<Step>,
    perms: Vec<Perm>,
}

impl Mask {
    /// Validates the steps: at a right descent of `v^{j-1}` the letter must be
    /// used (`Down`); elsewhere it is `Equal` or `Up`.
    pub fn new(word: Word, steps: Vec<Step>) -> Result<Mask> {
        if steps.len() != word.len() {
            return Err(Error::Mismatch(format!(
                "{} steps for a word of length {}",
                steps.len(),
                word.len()
            )));
        }
        let mut perms = vec![Perm::identity(word.n())];
        for (j, (&i, &st)) in word.letters().iter().zip(&steps).enumerate() {
            let v = perms.last().unwrap();
            let descent = v.has_right_descent(i);
            let next = match (st, descent) {
                (Step::Down, true) | (Step::Up, false) => v.times_simple(i),
                (Step::Equal, false) => v.clone(),
                _ => {
                    return Err(Error::Invalid(format!(
                        "step {:?} at position {} is not allowed after {v}",
                        st,
                        j + 1
                    )))
                }
            };
            perms.push(next);
        }
        Ok(Mask { word, steps, perms })
    }

    /// The mask using exactly the positions marked `true`.
    pub fn from_subword(word: Word, used: &[bool]) -> Result<Mask> {
        if used.len() != word.len() {
            return Err(Error::Mismatch(
                "subword flags do not match the word".into(),
            ));
        }
        let mut steps = Vec::with_capacity(used.len());
        let mut v = Perm::identity(word.n());
        for (&i, &u) in word.letters().iter().zip(used) {
            let descent = v.has_right_descent(i);
            steps.push(match (u, descent) {
                (true, true) => Step::Down,
                (true, false) => Step::Up,
                (false, false) => Step::Equal,
                (false, true) => {
                    return Err(Error::Invalid(format!(
                        "subword is not distinguished: s{i} must be used after {v}"
                    )))
                }
            });
            if u {
                v = v.times_simple(i);
            }
        }
        Mask::new(word, steps)
    }

    /// Parses `"s1 . s1"`: a dot omits the letter, `s<i>` (or `<i>`) uses it.
    pub fn parse(word: Word, s: &str) -> Result<Mask> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        if toks.len() != word.len() {
            return Err(Error::Parse(format!(
                "mask `{s}` has {} entries, word has {}",
                toks.len(),
                word.len()
            )));
        }
        let mut used = Vec::with_capacity(toks.len());
        for (tok, &i) in toks.iter().zip(word.letters()) {
            if *tok == "." || *tok == "•" {
                used.push(false);
                continue;
            }
            let t = tok.strip_prefix('s').unwrap_or(tok);
            match t.parse::<usize>() {
                Ok(x) if x == i => used.push(true),
                _ => {
                    return Err(Error::Parse(format!(
                        "mask entry `{tok}` does not match s{i}"
                    )))
                }
            }
        }
        Mask::from_subword(word, &used)
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// `v⁰, v¹, ..., vᵃ`.
    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// The final permutation `vᵃ`.
    pub fn end(&self) -> &Perm {
        self.perms.last().unwrap()
    }

    fn count(&self, s: Step) -> usize {
        self.steps.iter().filter(|&&x| x == s).count()
    }

    pub fn m_equal(&self) -> usize {
        self.count(Step::Equal)
    }

    pub fn m_up(&self) -> usize {
        self.count(Step::Up)
    }

    pub fn m_down(&self) -> usize {
        self.count(Step::Down)
    }

    /// `m_= + 2 m_↓`, the dimension of the piece.
    pub fn dimension(&self) -> usize {
        self.m_equal() + 2 * self.m_down()
    }

    /// The piece is `(q-1)^{m_=} q^{m_↓}` points over `F_q`.
    pub fn point_count(&self) -> UniPoly {
        UniPoly::torus_times_affine(self.m_equal(), self.m_down())
    }

    pub fn is_positive(&self) -> bool {
        self.m_down() == 0
    }
}

impl fmt::Display for Mask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .word
            .letters()
            .iter()
            .zip(&self.steps)
            .map(|(i, s)| match s {
                Step::Equal => ".".to_string(),
                _ => format!("s{i}"),
            })
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// All distinguished masks on `word` ending at `u`, in lexicographic order of
/// their steps.
pub fn distinguished_masks(word: &Word, u: &Perm) -> Vec<Mask> {
    let mut out = Vec::new();
    let mut steps = Vec::with_capacity(word.len());
    extend_masks(word, u, Perm::identity(word.n()), &mut steps, &mut out);
    out
}

fn extend_masks(word: &Word, u: &Perm, v: Perm, steps: &mut Vec<Step>, out: &mut Vec<Mask>) {
    let j = steps.len();
    if j == word.len() {
        if &v == u {
            out.push(Mask::new(word.clone(), steps.clone()).expect("valid by construction"));
        }
        return;
    }
    let i = word.letters()[j];
    if v.has_right_descent(i) {
        steps.push(Step::Down);
        extend_masks(word, u, v.times_simple(i), steps, out);
        steps.pop();
    } else {
        steps.push(Step::Equal);
        extend_masks(word, u, v.clone(), steps, out);
        steps.pop();
        steps.push(Step::Up);
        extend_masks(word, u, v.times_simple(i), steps, out);
        steps.pop();
    }
}

/// The unique mask with no `Down` steps: the rightmost reduced subword for
/// `u`, found by `vᵃ = u` and `v^{j-1} = v^j s` when `v^j s < v^j`.
pub fn positive_mask(word: &Word, u: &Perm) -> Result<Mask> {
    if !word.is_reduced() {
        return Err(Error::Precondition(format!("{word} is not reduced")));
    }
    let w = word.product();
    if !u.bruhat_leq(&w) {
        return Err(Error::Precondition(format!("{u} is not below {w}")));
    }
    let mut used = vec![false; word.len()];
    let mut v = u.clone();
    for (j, &i) in word.letters().iter().enumerate().rev() {
        if v.has_right_descent(i) {
            v = v.times_simple(i);
            used[j] = true;
        }
    }
    if !v.is_identity() {
        return Err(Error::Precondition(format!(
            "{u} is not a subword product of {word}"
        )));
    }
    Mask::from_subword(word.clone(), &used)
}

/// Embeds `[[a, b], [c, d]]` into rows and columns `i, i+1` of the identity.
pub fn rho<R: Ring>(n: usize, i: usize, block: [R; 4], ctx: &R::Ctx) -> Matrix<R> {
    let mut m = Matrix::identity(n, ctx);
    let [a, b, c, d] = block;
    m.set(i, i, a);
    m.set(i, i + 1, b);
    m.set(i + 1, i, c);
    m.set(i + 1, i + 1, d);
    m
}

/// `z_i(t) = ρ_i([[t, 1], [1, 0]])`.
pub fn z<R: Ring>(n: usize, i: usize, t: R, ctx: &R::Ctx) -> Matrix<R> {
    rho(n, i, [t, R::one(ctx), R::one(ctx), R::zero(ctx)], ctx)
}

/// `ż_i(u) = ρ_i([[u, 1], [-1, 0]])`.
pub fn z_dot<R: Ring>(n: usize, i: usize, u: R, ctx: &R::Ctx) -> Matrix<R> {
    rho(n, i, [u, R::one(ctx), -R::one(ctx), R::zero(ctx)], ctx)
}

/// `z̈_i(t) = ρ_i([[t, -1], [1, 0]])`, the `SL_2` variant of `z_i`.
pub fn z_ddot<R: Ring>(n: usize, i: usize, t: R, ctx: &R::Ctx) -> Matrix<R> {
    rho(n, i, [t, -R::one(ctx), R::one(ctx), R::zero(ctx)], ctx)
}

/// `ṡ_i = ρ_i([[0, -1], [1, 0]])`.
pub fn s_dot<R: Ring>(n: usize, i: usize, ctx: &R::Ctx) -> Matrix<R> {
    rho(
        n,
        i,
        [R::zero(ctx), -R::one(ctx), R::one(ctx), R::zero(ctx)],
        ctx,
    )
}

/// `y_i(t) = ρ_i([[1, 0], [t, 1]])`.
pub fn y<R: Ring>(n: usize, i: usize, t: R, ctx: &R::Ctx) -> Matrix<R> {
    rho(n, i, [R::one(ctx), R::zero(ctx), t, R::one(ctx)], ctx)
}

/// A chain of flags `F⁰ = eB₊, F¹, ..., Fᵃ` given by the partial products
/// `g⁰ = Id, g¹, ..., gᵃ`; consecutive flags differ only in subspace `i_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct BsChain<R: Ring> {
    word: Word,
    mats: Vec<Matrix<R>>,
}

impl<R: Ring> BsChain<R> {
    fn from_factors(word: &Word, factors: Vec<Matrix<R>>, ctx: &R::Ctx) -> BsChain<R> {
        let mut mats = vec![Matrix::identity(word.n(), ctx)];
        for h in factors {
            let next = mats.last().unwrap().mul(&h);
            mats.push(next);
        }
        BsChain {
            word: word.clone(),
            mats,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// `gʲ` for `j = 0..=a`.
    pub fn matrix(&self, j: usize) -> &Matrix<R> {
        &self.mats[j]
    }

    pub fn matrices(&self) -> &[Matrix<R>] {
        &self.mats
    }

    pub fn final_matrix(&self) -> &Matrix<R> {
        self.mats.last().unwrap()
    }
}

impl<F: Field> BsChain<F> {
    pub fn flag(&self, j: usize) -> FlagPoint<F> {
        FlagPoint::new(self.mats[j].clone()).expect("chain matrices are invertible")
    }

    pub fn final_flag(&self) -> FlagPoint<F> {
        self.flag(self.mats.len() - 1)
    }

    /// Builds a chain from flags given by arbitrary representatives, checking
    /// that consecutive flags differ exactly in subspace `i_j`.
    pub fn from_flags(word: &Word, flags: Vec<FlagPoint<F>>) -> Result<BsChain<F>> {
        if flags.len() != word.len() + 1 {
            return Err(Error::Mismatch("need one more flag than letters".into()));
        }
        if !flags[0].same_flag(&FlagPoint::of_perm(
            &Perm::identity(word.n()),
            flags[0].matrix().ctx(),
        )) {
            return Err(Error::Invalid(
                "chain must start at the standard flag".into(),
            ));
        }
        let chain = BsChain {
            word: word.clone(),
            mats: flags.into_iter().map(|f| f.matrix().clone()).collect(),
        };
        if !chain.is_open() {
            return Err(Error::Invalid(
                "consecutive flags are not in position s_i".into(),
            ));
        }
        Ok(chain)
    }

    /// True when each `F^{j-1}, F^j` pair agrees outside subspace `i_j` and
    /// differs there.
    pub fn is_open(&self) -> bool {
        let n = self.word.n();
        self.word.letters().iter().enumerate().all(|(j, &i)| {
            let (a, b) = (&self.mats[j], &self.mats[j + 1]);
            (1..n).all(|k| {
                let joined = join_columns(a, b, k);
                let r = joined.rank();
                if k == i {
                    r == k + 1
                } else {
                    r == k
                }
            })
        })
    }

    /// Canonical representatives of every flag, for comparing chains.
    pub fn canonical(&self) -> Vec<Matrix<F>> {
        (0..self.mats.len())
            .map(|j| self.flag(j).canonical())
            .collect()
    }
}

fn join_columns<F: Field>(a: &Matrix<F>, b: &Matrix<F>, k: usize) -> Matrix<F> {
    let n = a.rows();
    let mut m = Matrix::zeros(n, 2 * k, a.ctx());
    for r in 1..=n {
        for c in 1..=k {
            m.set(r, c, a.get(r, c).clone());
            m.set(r, k + c, b.get(r, c).clone());
        }
    }
    m
}

fn check_len(word: &Word, len: usize) -> Result<()> {
    if word.len() != len {
        return Err(Error::Mismatch(format!(
            "{len} parameters for a word of length {}",
            word.len()
        )));
    }
    Ok(())
}

/// `Fʲ = z_{i_1}(t_1) ⋯ z_{i_j}(t_j) B₊`.
pub fn bs_parametrize<R: Ring>(word: &Word, t: &[R], ctx: &R::Ctx) -> Result<BsChain<R>> {
    check_len(word, t.len())?;
    let n = word.n();
    let factors = word
        .letters()
        .iter()
        .zip(t)
        .map(|(&i, x)| z(n, i, x.clone(), ctx))
        .collect();
    Ok(BsChain::from_factors(word, factors, ctx))
}

/// As [`bs_parametrize`] with the `SL_2` blocks `z̈_i(t)`.
pub fn bs_parametrize_sl2<R: Ring>(word: &Word, t: &[R], ctx: &R::Ctx) -> Result<BsChain<R>> {
    check_len(word, t.len())?;
    let n = word.n();
    let factors = word
        .letters()
        .iter()
        .zip(t)
        .map(|(&i, x)| z_ddot(n, i, x.clone(), ctx))
        .collect();
    Ok(BsChain::from_factors(word, factors, ctx))
}

/// The Marsh–Rietsch chain of a mask: `h_j` is `y_{i_j}(t_j)` at `Equal`
/// positions, `ṡ_{i_j}` at `Up` positions and `ż_{i_j}(t_j)` at `Down`
/// positions. `params` is indexed by position; `Up` entries are ignored.
pub fn mr_parametrize<R: Ring>(mask: &Mask, params: &[R], ctx: &R::Ctx) -> Result<BsChain<R>> {
    check_len(&mask.word, params.len())?;
    let n = mask.word.n();
    let mut factors = Vec::with_capacity(params.len());
    for (j, ((&i, &st), t)) in mask
        .word
        .letters()
        .iter()
        .zip(&mask.steps)
        .zip(params)
        .enumerate()
    {
        factors.push(match st {
            Step::Equal => {
                if t.is_zero() {
                    return Err(Error::Invalid(format!(
                        "torus parameter at position {} must be nonzero",
                        j + 1
                    )));
                }
                y(n, i, t.clone(), ctx)
            }
            Step::Up => s_dot(n, i, ctx),
            Step::Down => z_dot(n, i, t.clone(), ctx),
        });
    }
    Ok(BsChain::from_factors(&mask.word, factors, ctx))
}

/// Reads the mask of a chain from the Schubert cells `X̊_{vʲ}` of its flags.
pub fn classify_bs_point<F: Field>(chain: &BsChain<F>) -> Result<Mask> {
    let perms: Vec<Perm> = (0..chain.mats.len())
        .map(|j| schubert_cell(&chain.flag(j)))
        .collect();
    if !perms[0].is_identity() {
        return Err(Error::Invalid(
            "chain does not start at the standard flag".into(),
        ));
    }
    let mut used = Vec::with_capacity(chain.word.len());
    for (j, &i) in chain.word.letters().iter().enumerate() {
        let (a, b) = (&perms[j], &perms[j + 1]);
        if a == b {
            used.push(false);
        } else if &a.times_simple(i) == b {
            used.push(true);
        } else {
            return Err(Error::Invalid(format!(
                "degenerate chain: cells {a} and {b} at position {}",
                j + 1
            )));
        }
    }
    Mask::from_subword(chain.word.clone(), &used)
}

/// `R_u^w(q)`, summed over the distinguished masks on the unipeak word of
/// `w`; zero when `u` is not below `w`.
pub fn r_polynomial(u: &Perm, w: &Perm) -> UniPoly {
    if !u.bruhat_leq(w) {
        return UniPoly::zero();
    }
    r_polynomial_with_word(&unipeak_word(w), u).expect("unipeak words are reduced")
}

/// `Σ (q-1)^{m_=} q^{m_↓}` over the distinguished masks on a reduced word.
pub fn r_polynomial_with_word(word: &Word, u: &Perm) -> Result<UniPoly> {
    if !word.is_reduced() {
        return Err(Error::Precondition(format!("{word} is not reduced")));
    }
    Ok(distinguished_masks(word, u)
        .iter()
        .fold(UniPoly::zero(), |acc, m| acc.add(&m.point_count())))
}

fn sweep_size(p: Prime, len: usize) -> Result<u64> {
    let mut total: u64 = 1;
    for _ in 0..len {
        total = total.saturating_mul(p.get());
        if total > SWEEP_LIMIT {
            return Err(Error::TooLarge(format!(
                "{}^{len} parameter values exceed the sweep limit {SWEEP_LIMIT}",
                p.get()
            )));
        }
    }
    Ok(total)
}

/// Every vector in `F_p^len`, in lexicographic order.
fn all_vectors(p: Prime, len: usize) -> Result<Vec<Vec<Fp>>> {
    let total = sweep_size(p, len)?;
    let q = p.get();
    Ok((0..total)
        .map(|mut idx| {
            let mut v = vec![Fp::new(0, p); len];
            for slot in v.iter_mut().rev() {
                *slot = Fp::new((idx % q) as i64, p);
                idx /= q;
            }
            v
        })
        .collect())
}

/// All chains of the open Bott–Samelson variety of `word` over `F_p`.
pub fn sweep_bs_chains(word: &Word, p: Prime) -> Result<Vec<BsChain<Fp>>> {
    all_vectors(p, word.len())?
        .into_iter()
        .map(|t| bs_parametrize(word, &t, &p))
        .collect()
}

/// All chains of the Deodhar piece of `mask` over `F_p`, via
/// [`mr_parametrize`].
pub fn mr_piece_chains(mask: &Mask, p: Prime) -> Result<Vec<BsChain<Fp>>> {
    let free: Vec<usize> = (0..mask.word.len())
        .filter(|&j| mask.steps[j] != Step::Up)
        .collect();
    let mut out = Vec::new();
    for vals in all_vectors(p, free.len())? {
        let mut params = vec![Fp::new(0, p); mask.word.len()];
        for (&j, v) in free.iter().zip(vals) {
            params[j] = v;
        }
        if free
            .iter()
            .any(|&j| mask.steps[j] == Step::Equal && params[j].is_zero())
        {
            continue;
        }
        out.push(mr_parametrize(mask, &params, &p)?);
    }
    Ok(out)
}

/// Hashable key of a flag over `F_p`: the entries of its canonical matrix.
pub fn flag_key(flag: &FlagPoint<Fp>) -> Vec<u64> {
    let c = flag.canonical();
    let n = c.rows();
    let mut out = Vec::with_capacity(n * n);
    for r in 1..=n {
        for col in 1..=n {
            out.push(c.get(r, col).value());
        }
    }
    out
}

/// The `F_p` points of the open Richardson `R̊_u^w = X̊_u ∩ X̊^w`, found by
/// sweeping the Bott–Samelson chart of a reduced word of `w` and keeping the
/// flags in the Schubert cell of `u`; sorted by [`flag_key`].
pub fn enumerate_open_richardson(u: &Perm, w: &Perm, p: Prime) -> Result<Vec<FlagPoint<Fp>>> {
    if u.n() != w.n() {
        return Err(Error::Mismatch("permutations of different sizes".into()));
    }
    if !u.bruhat_leq(w) {
        return Err(Error::Precondition(format!("{u} is not below {w}")));
    }
    let word = unipeak_word(w);
    let n = w.n();
    let mut out: Vec<(Vec<u64>, FlagPoint<Fp>)> = Vec::new();
    for t in all_vectors(p, word.len())? {
        let g = word
            .letters()
            .iter()
            .zip(&t)
            .fold(Matrix::identity(n, &p), |g: Matrix<Fp>, (&i, &x)| {
                g.mul(&z(n, i, x, &p))
            });
        let flag = FlagPoint::new(g).expect("product of invertible blocks");
        if &schubert_cell(&flag) == u {
            out.push((flag_key(&flag), flag));
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out.into_iter().map(|(_, f)| f).collect())
}

/// Left-justified minor: rows `J`, columns `1..|J|`.
pub fn flag_minor<R: Ring>(g: &Matrix<R>, rows: &[usize]) -> R {
    let cols: Vec<usize> = (1..=rows.len()).collect();
    g.minor_by_expansion(rows, &cols).expect("square minor")
}

fn flag_minor_field<F: Field>(g: &Matrix<F>, rows: &[usize]) -> F {
    let cols: Vec<usize> = (1..=rows.len()).collect();
    g.minor(rows, &cols).expect("square minor")
}

/// The chamber minors `Φʲ_k = Δ_{vʲ[k]}(Fʲ_k) / Δ_{wʲ[k]}(Fʲ_k)` for
/// `j = 0..=a` and `k = 0..=n`, where `wʲ = s_{i_1} ⋯ s_{i_j}`.
pub fn chamber_minors<F: Field>(chain: &BsChain<F>, mask: &Mask) -> Result<Vec<Vec<F>>> {
    if chain.word != mask.word {
        return Err(Error::Mismatch("chain and mask use different words".into()));
    }
    if !mask.word.is_reduced() {
        return Err(Error::Precondition(format!("{} is not reduced", mask.word)));
    }
    let n = mask.word.n();
    let mut w = Perm::identity(n);
    let mut table = Vec::with_capacity(chain.mats.len());
    for j in 0..chain.mats.len() {
        if j > 0 {
            w = w.times_simple(mask.word.letters()[j - 1]);
        }
        let g = &chain.mats[j];
        let v = &mask.perms[j];
        let mut row = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let num = flag_minor_field(g, &v.prefix_set(k));
            let den = flag_minor_field(g, &w.prefix_set(k));
            let q = den.inv().ok_or_else(|| {
                Error::Precondition(format!(
                    "Plücker coordinate {:?} vanishes on flag {j}",
                    w.prefix_set(k)
                ))
            })?;
            row.push(num * q);
        }
        table.push(row);
    }
    Ok(table)
}

/// Recovers each `Equal`-position parameter by
/// `t_j = Φʲ_{k+1} Φʲ_{k-1} / (Φ^{j-1}_k Φʲ_k)` with `k = i_j`; other
/// positions give `None`.
pub fn recover_torus_params<F: Field>(chain: &BsChain<F>, mask: &Mask) -> Result<Vec<Option<F>>> {
    let phi = chamber_minors(chain, mask)?;
    let mut out = Vec::with_capacity(mask.word.len());
    for (idx, (&k, &st)) in mask.word.letters().iter().zip(&mask.steps).enumerate() {
        let j = idx + 1;
        if st != Step::Equal {
            out.push(None);
            continue;
        }
        let num = phi[j][k + 1].clone() * phi[j][k - 1].clone();
        let den = phi[j - 1][k].clone() * phi[j][k].clone();
        let inv = den.inv().ok_or_else(|| {
            Error::Precondition(format!("chamber minor vanishes at position {j}"))
        })?;
        out.push(Some(num * inv));
    }
    Ok(out)
}

/// True when the chamber-minor formula returns `params` at every `Equal`
/// position of the mask.
pub fn verify_mr_formula<F: Field>(chain: &BsChain<F>, mask: &Mask, params: &[F]) -> bool {
    match recover_torus_params(chain, mask) {
        Ok(rec) => rec
            .iter()
            .zip(params)
            .all(|(r, p)| r.as_ref().is_none_or(|r| r == p)),
        Err(_) => false,
    }
}

/// Height of wire `k` of the unipeak diagram of `w` at `x/2`, doubled.
///
/// Wire `k` enters on the left at height `w(k)`, rises with slope one to its
/// peak at `(k - w(k), k + w(k))`, falls with slope minus one and leaves on
/// the right at height `k`.
fn peak_height2(w: &Perm, k: usize, x2: i64) -> i64 {
    let (k, wk) = (k as i64, w.get(k) as i64);
    if x2 <= -2 * wk {
        2 * wk
    } else if x2 <= 2 * (k - wk) {
        x2 + 4 * wk
    } else if x2 <= 2 * k {
        4 * k - x2
    } else {
        2 * k
    }
}

/// The unipeak reduced word of `w` from the peak construction. All crossings
/// lie at integer abscissae; crossings sharing an abscissa commute and are
/// listed from the bottom up.
pub fn unipeak_word(w: &Perm) -> Word {
    let n = w.n();
    let order_at = |x2: i64| -> Vec<usize> {
        let mut wires: Vec<usize> = (1..=n).collect();
        wires.sort_by_key(|&k| peak_height2(w, k, x2));
        wires
    };
    let mut letters = Vec::new();
    let mut before = order_at(-2 * n as i64 - 1);
    for x in -(n as i64)..=(n as i64) {
        let after = order_at(2 * x + 1);
        let mut pos = 0;
        while pos + 1 < n {
            if before[pos] != after[pos] {
                debug_assert_eq!(before[pos], after[pos + 1]);
                letters.push(pos + 1);
                pos += 2;
            } else {
                pos += 1;
            }
        }
        before = after;
    }
    Word::new(n, letters).expect("letters in range")
}

/// The wires of a word's wiring diagram, named by their height on the left:
/// entry `j` is the arrangement (position to wire) after `j` crossings.
fn wire_arrangements(word: &Word) -> Vec<Vec<usize>> {
    let mut cur: Vec<usize> = (1..=word.n()).collect();
    let mut out = vec![cur.clone()];
    for &i in word.letters() {
        cur.swap(i - 1, i);
        out.push(cur.clone());
    }
    out
}

/// True when every wire makes all of its upward crossings before any of its
/// downward crossings.
pub fn is_unipeak(word: &Word) -> bool {
    let mut descended = vec![false; word.n() + 1];
    let arr = wire_arrangements(word);
    for (j, &i) in word.letters().iter().enumerate() {
        let (lower, upper) = (arr[j][i - 1], arr[j][i]);
        if descended[lower] {
            return false;
        }
        descended[upper] = true;
    }
    true
}

/// A chamber of a wiring diagram: the region at height `height` between the
/// crossings at positions `start` and `end` of the word (`0` and `a + 1` for
/// the open ends). Its flag subspace is `Fʲ_height` for `start <= j < end`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Chamber {
    pub height: usize,
    pub start: usize,
    pub end: usize,
    /// The wires along the top of the chamber at its left and right ends,
    /// named by their heights on the left of the diagram.
    pub roof: (usize, usize),
}

/// Every chamber of the wiring diagram of `word`, by height then position.
pub fn chambers(word: &Word) -> Vec<Chamber> {
    let n = word.n();
    let a = word.len();
    let arr = wire_arrangements(word);
    let mut out = Vec::new();
    for d in 1..n {
        let mut cuts = vec![0];
        cuts.extend((1..=a).filter(|&j| word.letters()[j - 1] == d));
        cuts.push(a + 1);
        for pair in cuts.windows(2) {
            let (start, end) = (pair[0], pair[1]);
            out.push(Chamber {
                height: d,
                start,
                end,
                roof: (arr[start][d], arr[end - 1][d]),
            });
        }
    }
    out
}

/// The subspace attached to a chamber of the unipeak diagram of `w` for the
/// flag `F ∈ X̊^w`: `Span(e_1, ..., e_{i-1}) + F_{w⁻¹(j)-1}` with roof `(i, j)`.
pub fn unipeak_chamber_subspace<F: Field>(
    w: &Perm,
    flag: &FlagPoint<F>,
    chamber: &Chamber,
) -> Matrix<F> {
    let n = flag.n();
    let (i, j) = chamber.roof;
    let b = w.inverse().get(j) - 1;
    let g = flag.matrix();
    let mut m = Matrix::zeros(n, i - 1 + b, g.ctx());
    for c in 1..i {
        m.set(c, c, F::one(g.ctx()));
    }
    for c in 1..=b {
        for r in 1..=n {
            m.set(r, i - 1 + c, g.get(r, c).clone());
        }
    }
    m
}

/// Ranks of the blocks of `g` in rows `i..=i'` and columns `1..=j`, listed
/// for `i <= i'` and `j` in lexicographic order. On `X̊^w` this determines
/// the Deodhar piece of the unipeak word.
pub fn deodhar_rank_signature<F: Field>(g: &Matrix<F>) -> Vec<usize> {
    let n = g.rows();
    let mut out = Vec::new();
    for i in 1..=n {
        for i2 in i..=n {
            let rows: Vec<usize> = (i..=i2).collect();
            for j in 1..=n {
                let cols: Vec<usize> = (1..=j).collect();
                out.push(g.submatrix(&rows, &cols).expect("in range").rank());
            }
        }
    }
    out
}

/// The subsets `J` of size `k` with `v[k] = J` for some `u <= v <= w`: by the
/// positivity theorem, exactly the Plücker coordinates of `F_k` that are
/// positive on the totally nonnegative part of `R̊_u^w`.
pub fn positive_pluecker_support(u: &Perm, w: &Perm, k: usize) -> BTreeSet<Vec<usize>> {
    bruhat_interval(u, w)
        .iter()
        .map(|v| v.prefix_set(k))
        .collect()
}

fn positive_factors(mask: &Mask) -> Result<Vec<Matrix<Poly>>> {
    if !mask.is_positive() {
        return Err(Error::Precondition("mask has affine steps".into()));
    }
    let n = mask.word.n();
    Ok(mask
        .word
        .letters()
        .iter()
        .zip(&mask.steps)
        .enumerate()
        .map(|(j, (&i, &st))| match st {
            Step::Equal => y(n, i, Poly::var(j), &()),
            _ => s_dot(n, i, &()),
        })
        .collect())
}

fn all_flag_minors(g: &Matrix<Poly>) -> Vec<(Vec<usize>, Poly)> {
    let n = g.rows();
    (1..=n)
        .flat_map(|k| crate::affine::k_subsets(n, k))
        .map(|s| {
            let d = flag_minor(g, &s);
            (s, d)
        })
        .collect()
}

/// Per product, the pairs `(J, Δ_J)` over all nonempty `J`.
pub type MinorTable = Vec<Vec<(Vec<usize>, Poly)>>;

/// The left-justified minors of the suffix products `h_j h_{j+1} ⋯ h_a`
/// (`j = 1..=a+1`) of the positive parametrization, as polynomials in the
/// torus variables (`t_j` is variable `j - 1`). Entry `[j-1]` lists
/// `(J, Δ_J)` over all nonempty `J`.
pub fn suffix_minor_polynomials(mask: &Mask) -> Result<MinorTable> {
    let factors = positive_factors(mask)?;
    let a = factors.len();
    let mut out = vec![Vec::new(); a + 1];
    let mut g: Matrix<Poly> = Matrix::identity(mask.word.n(), &());
    for j in (0..=a).rev() {
        if j < a {
            g = factors[j].mul(&g);
        }
        out[j] = all_flag_minors(&g);
    }
    Ok(out)
}

/// As [`suffix_minor_polynomials`] for the prefix products `h_1 ⋯ h_j`
/// (`j = 0..=a`).
pub fn prefix_minor_polynomials(mask: &Mask) -> Result<MinorTable> {
    let factors = positive_factors(mask)?;
    let mut g: Matrix<Poly> = Matrix::identity(mask.word.n(), &());
    let mut out = vec![all_flag_minors(&g)];
    for h in factors {
        g = g.mul(&h);
        out.push(all_flag_minors(&g));
    }
    Ok(out)
}
