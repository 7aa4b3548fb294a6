//! Exact linear algebra: matrices over a ring, minors, Plücker vectors,
//! flags, Schubert and positroid cells read off from ranks, and
//! total-nonnegativity tests.

use std::fmt;

use crate::affine::{k_subsets, parse_subset, BoundedAffinePerm, CyclicRankMatrix};
use crate::error::{Error, Result};
use crate::perm::{Perm, RankMatrix};
use crate::scalar::{parse_q, qi, Field, OrderedField, Ring, Q};

/// Dense matrix with entries in a ring. Indices in the public API are
/// 1-based.
#[derive(Clone, PartialEq)]
pub struct Matrix<R: Ring> {
    rows: usize,
    cols: usize,
    data: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(rows: usize, cols: usize, ctx: &R::Ctx) -> Matrix<R> {
        Matrix {
            rows,
            cols,
            data: vec![R::zero(ctx); rows * cols],
            ctx: ctx.clone(),
        }
    }

    pub fn identity(n: usize, ctx: &R::Ctx) -> Matrix<R> {
        let mut m = Matrix::zeros(n, n, ctx);
        for i in 1..=n {
            m.set(i, i, R::one(ctx));
        }
        m
    }

    /// Permutation matrix with ones at `(w(j), j)`, so `w B₊` is its flag.
    pub fn permutation(w: &Perm, ctx: &R::Ctx) -> Matrix<R> {
        let mut m = Matrix::zeros(w.n(), w.n(), ctx);
        for j in 1..=w.n() {
            m.set(w.get(j), j, R::one(ctx));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<R>>, ctx: &R::Ctx) -> Result<Matrix<R>> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
            ctx: ctx.clone(),
        })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>], ctx: &R::Ctx) -> Result<Matrix<R>> {
        Matrix::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&v| R::from_i64(ctx, v)).collect())
                .collect(),
            ctx,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "index ({i},{j}) out of range"
        );
        &self.data[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(
            i >= 1 && i <= self.rows && j >= 1 && j <= self.cols,
            "index ({i},{j}) out of range"
        );
        self.data[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        (1..=self.cols).map(|j| self.get(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<R> {
        (1..=self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (1..=self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Matrix<R> {
        let mut t = Matrix::zeros(self.cols, self.rows, &self.ctx);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, o: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, o.rows, "matrix shapes do not compose");
        let mut out = Matrix::<R>::zeros(self.rows, o.cols, &self.ctx);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = &self.data[i * self.cols + l];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let idx = i * o.cols + j;
                    let prod = a.clone() * o.data[l * o.cols + j].clone();
                    out.data[idx] = out.data[idx].clone() + prod;
                }
            }
        }
        out
    }

    /// The submatrix on the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Matrix<R>> {
        if rows.iter().any(|&i| i == 0 || i > self.rows)
            || cols.iter().any(|&j| j == 0 || j > self.cols)
        {
            return Err(Error::Invalid(format!(
                "minor indices {rows:?} x {cols:?} out of range for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let mut m = Matrix::zeros(rows.len(), cols.len(), &self.ctx);
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a + 1, b + 1, self.get(i, j).clone());
            }
        }
        Ok(m)
    }

    /// The first `k` columns.
    pub fn leading_columns(&self, k: usize) -> Matrix<R> {
        let rows: Vec<usize> = (1..=self.rows).collect();
        let cols: Vec<usize> = (1..=k).collect();
        self.submatrix(&rows, &cols).expect("k within range")
    }

    pub fn map<S: Ring>(&self, ctx: &S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
            ctx: ctx.clone(),
        }
    }

    /// Determinant by cofactor expansion; works over any ring.
    pub fn det_by_expansion(&self) -> R {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let cols: Vec<usize> = (0..self.cols).collect();
        self.expand(0, &cols)
    }

    fn expand(&self, row: usize, cols: &[usize]) -> R {
        if cols.is_empty() {
            return R::one(&self.ctx);
        }
        let mut acc = R::zero(&self.ctx);
        for (pos, &c) in cols.iter().enumerate() {
            let a = &self.data[row * self.cols + c];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let term = a.clone() * self.expand(row + 1, &rest);
            acc = if pos % 2 == 0 { acc + term } else { acc - term };
        }
        acc
    }

    /// Minor on rows `I` and columns `J` by cofactor expansion.
    pub fn minor_by_expansion(&self, rows: &[usize], cols: &[usize]) -> Result<R> {
        if rows.len() != cols.len() {
            return Err(Error::Mismatch(
                "minor needs as many rows as columns".into(),
            ));
        }
        Ok(self.submatrix(rows, cols)?.det_by_expansion())
    }
}

impl<F: Field> Matrix<F> {
    /// Row-reduced echelon form and the pivot columns (1-based).
    pub fn rref(&self) -> (Matrix<F>, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.data[i * m.cols + c].is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = m.data[r * m.cols + c].inv().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.data[r * m.cols + j].clone() * inv.clone();
                m.data[r * m.cols + j] = v;
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * m.cols + c].clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = m.data[i * m.cols + j].clone()
                        - factor.clone() * m.data[r * m.cols + j].clone();
                    m.data[i * m.cols + j] = v;
                }
            }
            pivots.push(c + 1);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one(&self.ctx);
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.data[i * n + c].is_zero()) else {
                return F::zero(&self.ctx);
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m.data[c * n + c].clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("nonzero pivot");
            for i in c + 1..n {
                let factor = m.data[i * n + c].clone() * inv.clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.data[i * n + j].clone() - factor.clone() * m.data[c * n + j].clone();
                    m.data[i * n + j] = v;
                }
            }
        }
        det
    }

    /// Minor on rows `I` and columns `J`, taken in the given order, so an
    /// unsorted list yields the signed coordinate and a repeat yields zero.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Result<F> {
        if rows.len() != cols.len() {
            return Err(Error::Mismatch(
                "minor needs as many rows as columns".into(),
            ));
        }
        Ok(self.submatrix(rows, cols)?.det())
    }

    pub fn inverse(&self) -> Option<Matrix<F>> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n, &self.ctx);
        for i in 1..=n {
            for j in 1..=n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, F::one(&self.ctx));
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n {
            return None;
        }
        let rows: Vec<usize> = (1..=n).collect();
        let cols: Vec<usize> = (n + 1..=2 * n).collect();
        Some(r.submatrix(&rows, &cols).expect("in range"))
    }

    /// A basis of `{x : M x = 0}`, as the columns of the returned matrix.
    pub fn nullspace(&self) -> Matrix<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (1..=self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(self.cols, free.len(), &self.ctx);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(fc, b + 1, F::one(&self.ctx));
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(pc, b + 1, -r.get(pr + 1, fc).clone());
            }
        }
        basis
    }

    /// Solves `A x = b` for square invertible `A`.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        let inv = self.inverse()?;
        let col = Matrix::from_rows(b.iter().map(|v| vec![v.clone()]).collect(), &self.ctx).ok()?;
        Some(inv.mul(&col).col(1))
    }

    /// Rank of the rows `rows` (1-based) restricted to the first `cols` columns.
    fn block_rank(&self, rows: &[usize], cols: usize) -> usize {
        if rows.is_empty() || cols == 0 {
            return 0;
        }
        let cs: Vec<usize> = (1..=cols).collect();
        self.submatrix(rows, &cs).expect("in range").rank()
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    /// Rows separated by `;`, entries by `,`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (1..=self.rows)
            .map(|i| {
                (1..=self.cols)
                    .map(|j| self.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl<R: Ring> fmt::Debug for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl Matrix<Q> {
    /// Parses `"1,0;x,1/2"`-style text (no variables; entries are rationals).
    pub fn parse(s: &str) -> Result<Matrix<Q>> {
        let rows: Vec<Vec<Q>> = s
            .trim()
            .split(';')
            .map(|row| row.split(',').map(parse_q).collect::<Result<Vec<Q>>>())
            .collect::<Result<_>>()?;
        Matrix::from_rows(rows, &())
    }

    pub fn from_q_rows(rows: Vec<Vec<Q>>) -> Matrix<Q> {
        Matrix::from_rows(rows, &()).expect("rectangular rows")
    }
}

/// Plücker coordinates `Δ_I`, one per `k`-subset of `[n]` in lexicographic
/// order, treated projectively.
#[derive(Clone, PartialEq)]
pub struct PlueckerVector<R: Ring> {
    n: usize,
    k: usize,
    subsets: Vec<Vec<usize>>,
    values: Vec<R>,
}

impl<R: Ring> PlueckerVector<R> {
    /// Builds from values listed in lexicographic subset order.
    pub fn from_values(n: usize, k: usize, values: Vec<R>) -> Result<PlueckerVector<R>> {
        let subsets = k_subsets(n, k);
        if subsets.len() != values.len() {
            return Err(Error::Mismatch(format!(
                "expected {} Plücker coordinates, got {}",
                subsets.len(),
                values.len()
            )));
        }
        Ok(PlueckerVector {
            n,
            k,
            subsets,
            values,
        })
    }

    /// Builds by evaluating `f` on each sorted `k`-subset.
    pub fn from_fn(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> R) -> PlueckerVector<R> {
        let subsets = k_subsets(n, k);
        let values = subsets.iter().map(|s| f(s)).collect();
        PlueckerVector {
            n,
            k,
            subsets,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn iter(&self) -> impl Iterator<Item = (&[usize], &R)> {
        self.subsets.iter().map(Vec::as_slice).zip(&self.values)
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    /// `Δ_I` for an index list in any order: sorted value times the sign of
    /// the sorting permutation, zero on repeats.
    pub fn get(&self, index: &[usize]) -> R {
        let ctx = self.values[0].ctx();
        let mut sorted = index.to_vec();
        let mut sign = false;
        // Bubble sort to track the parity.
        for a in 0..sorted.len() {
            for b in 0..sorted.len() - 1 - a {
                if sorted[b] > sorted[b + 1] {
                    sorted.swap(b, b + 1);
                    sign = !sign;
                }
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return R::zero(&ctx);
        }
        match self.subsets.binary_search(&sorted) {
            Ok(pos) => {
                let v = self.values[pos].clone();
                if sign {
                    -v
                } else {
                    v
                }
            }
            Err(_) => R::zero(&ctx),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Ring::is_zero)
    }

    /// Subsets with nonzero coordinate.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(s, _)| s.to_vec())
            .collect()
    }
}

impl<F: Field> PlueckerVector<F> {
    /// Divides through by the lexicographically first nonzero coordinate.
    pub fn normalized(&self) -> Option<PlueckerVector<F>> {
        let first = self.values.iter().find(|v| !v.is_zero())?.clone();
        let inv = first.inv()?;
        Some(PlueckerVector {
            n: self.n,
            k: self.k,
            subsets: self.subsets.clone(),
            values: self
                .values
                .iter()
                .map(|v| v.clone() * inv.clone())
                .collect(),
        })
    }

    pub fn projectively_equal(&self, other: &PlueckerVector<F>) -> bool {
        if self.n != other.n || self.k != other.k {
            return false;
        }
        match (self.normalized(), other.normalized()) {
            (Some(a), Some(b)) => a.values == b.values,
            _ => false,
        }
    }
}

impl<R: Ring> fmt::Display for PlueckerVector<R> {
    /// One `I:value` line per coordinate, `I` as a digit string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { "," } else { "" };
        for (s, v) in self.iter() {
            let label: Vec<String> = s.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}:{}", label.join(sep), v)?;
        }
        Ok(())
    }
}

impl<R: Ring> fmt::Debug for PlueckerVector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl PlueckerVector<Q> {
    /// Parses `I:value` lines; unlisted subsets are zero. `n` defaults to
    /// the largest index that appears.
    pub fn parse(s: &str, n: Option<usize>) -> Result<PlueckerVector<Q>> {
        let mut entries = Vec::new();
        for line in s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
        {
            let (i, v) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("expected `I:value`, got `{line}`")))?;
            let mut set = parse_subset(i)?;
            set.sort_unstable();
            entries.push((set, parse_q(v)?));
        }
        let k = entries
            .first()
            .map(|(s, _)| s.len())
            .ok_or_else(|| Error::Parse("empty Plücker vector".into()))?;
        if entries.iter().any(|(s, _)| s.len() != k) {
            return Err(Error::Parse("Plücker labels of different sizes".into()));
        }
        let n = n.unwrap_or_else(|| {
            entries
                .iter()
                .flat_map(|(s, _)| s.iter().copied())
                .max()
                .unwrap_or(k)
        });
        let mut pv = PlueckerVector::from_fn(n, k, |_| qi(0));
        for (s, v) in entries {
            let pos = pv
                .subsets
                .binary_search(&s)
                .map_err(|_| Error::Parse(format!("label {s:?} is not a {k}-subset of [{n}]")))?;
            pv.values[pos] = v;
        }
        Ok(pv)
    }
}

/// All maximal minors of an `n x k` matrix.
pub fn pluecker<F: Field>(m: &Matrix<F>) -> PlueckerVector<F> {
    let cols: Vec<usize> = (1..=m.cols()).collect();
    PlueckerVector::from_fn(m.rows(), m.cols(), |rows| {
        m.minor(rows, &cols).expect("in range")
    })
}

/// Maximal minors over an arbitrary ring, by cofactor expansion.
pub fn pluecker_by_expansion<R: Ring>(m: &Matrix<R>) -> PlueckerVector<R> {
    let cols: Vec<usize> = (1..=m.cols()).collect();
    PlueckerVector::from_fn(m.rows(), m.cols(), |rows| {
        m.minor_by_expansion(rows, &cols).expect("in range")
    })
}

/// Builds an `n x k` matrix from the lexicographically first nonzero
/// coordinate `Δ_I`: rows `I` form the identity and row `r` has entry
/// `Δ_{I with I_a replaced by r} / Δ_I` in column `a`.
pub fn pluecker_to_matrix<F: Field>(d: &PlueckerVector<F>) -> Result<Matrix<F>> {
    let ctx = d.values[0].ctx();
    let pos = d
        .values
        .iter()
        .position(|v| !v.is_zero())
        .ok_or_else(|| Error::Invalid("zero Plücker vector".into()))?;
    let pivot = d.subsets[pos].clone();
    let inv = d.values[pos].inv().expect("nonzero");
    let mut m = Matrix::zeros(d.n, d.k, &ctx);
    for r in 1..=d.n {
        for a in 0..d.k {
            let mut idx = pivot.clone();
            idx[a] = r;
            m.set(r, a + 1, d.get(&idx) * inv.clone());
        }
    }
    Ok(m)
}

/// Whether `d` is the Plücker vector of a `k`-plane, tested by rebuilding a
/// matrix and re-expanding.
pub fn on_grassmannian<F: Field>(d: &PlueckerVector<F>) -> bool {
    match pluecker_to_matrix(d) {
        Ok(m) => pluecker(&m).projectively_equal(d),
        Err(_) => false,
    }
}

/// A complete flag `g B₊`: the `k`-th subspace is the span of the first `k`
/// columns of `g`.
#[derive(Clone, PartialEq, Debug)]
pub struct FlagPoint<F: Field> {
    g: Matrix<F>,
}

impl<F: Field> FlagPoint<F> {
    pub fn new(g: Matrix<F>) -> Result<FlagPoint<F>> {
        if g.rows() != g.cols() || g.det().is_zero() {
            return Err(Error::Invalid(
                "flag matrix must be square and invertible".into(),
            ));
        }
        Ok(FlagPoint { g })
    }

    pub fn of_perm(w: &Perm, ctx: &F::Ctx) -> FlagPoint<F> {
        FlagPoint {
            g: Matrix::permutation(w, ctx),
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.rows()
    }

    /// The `k`-dimensional subspace, as an `n x k` matrix.
    pub fn subspace(&self, k: usize) -> Matrix<F> {
        self.g.leading_columns(k)
    }

    pub fn pluecker(&self, k: usize) -> PlueckerVector<F> {
        pluecker(&self.subspace(k))
    }

    /// The unique representative of `g B₊` in which each column vanishes on
    /// the pivot rows of the earlier columns and has its own pivot (topmost
    /// remaining nonzero entry) equal to one.
    pub fn canonical(&self) -> Matrix<F> {
        let n = self.n();
        let mut out: Matrix<F> = Matrix::zeros(n, n, self.g.ctx());
        let mut pivots: Vec<usize> = Vec::with_capacity(n);
        for j in 1..=n {
            let mut col = self.g.col(j);
            for (i, &p) in pivots.iter().enumerate() {
                let c = col[p - 1].clone();
                if c.is_zero() {
                    continue;
                }
                for r in 1..=n {
                    col[r - 1] = col[r - 1].clone() - c.clone() * out.get(r, i + 1).clone();
                }
            }
            let p = (1..=n)
                .find(|&r| !col[r - 1].is_zero())
                .expect("invertible");
            let inv = col[p - 1].inv().expect("nonzero");
            for r in 1..=n {
                out.set(r, j, col[r - 1].clone() * inv.clone());
            }
            pivots.push(p);
        }
        out
    }

    pub fn same_flag(&self, other: &FlagPoint<F>) -> bool {
        self.canonical() == other.canonical()
    }
}

/// The `v` with `F ∈ B₋ v B₊ / B₊`: the upper-left `i x j` block of `g` has
/// rank `#([i] ∩ v[j])`.
pub fn schubert_cell<F: Field>(flag: &FlagPoint<F>) -> Perm {
    let n = flag.n();
    let mut r = vec![vec![0usize; n + 1]; n + 1];
    for (i, row) in r.iter_mut().enumerate().skip(1) {
        let rows: Vec<usize> = (1..=i).collect();
        for (j, e) in row.iter_mut().enumerate().skip(1) {
            *e = flag.g.block_rank(&rows, j);
        }
    }
    RankMatrix::from_entries(r)
        .and_then(|m| m.to_perm())
        .expect("rank table of an invertible matrix")
}

/// The `w` with `F ∈ B₊ w B₊ / B₊`: rows `i+1..n` and columns `1..j` of `g`
/// have rank `#([i+1, n] ∩ w[j])`.
pub fn opposite_schubert_cell<F: Field>(flag: &FlagPoint<F>) -> Perm {
    let n = flag.n();
    let mut r = vec![vec![0usize; n + 1]; n + 1];
    for (i, row) in r.iter_mut().enumerate() {
        let rows: Vec<usize> = (i + 1..=n).collect();
        for (j, e) in row.iter_mut().enumerate() {
            // #([i] ∩ w[j]) = j - #([i+1, n] ∩ w[j]).
            *e = j - flag.g.block_rank(&rows, j);
        }
    }
    RankMatrix::from_entries(r)
        .and_then(|m| m.to_perm())
        .expect("rank table of an invertible matrix")
}

/// The `w` with `dim(E_i ∩ F_j) = #([i] ∩ w[j])`.
pub fn relative_position<F: Field>(e: &FlagPoint<F>, f: &FlagPoint<F>) -> Result<Perm> {
    let n = e.n();
    if f.n() != n {
        return Err(Error::Mismatch("flags of different sizes".into()));
    }
    let mut r = vec![vec![0usize; n + 1]; n + 1];
    for (i, row) in r.iter_mut().enumerate() {
        for (j, entry) in row.iter_mut().enumerate() {
            let mut joined = Matrix::zeros(n, i + j, e.g.ctx());
            for a in 1..=n {
                for b in 1..=i {
                    joined.set(a, b, e.g.get(a, b).clone());
                }
                for b in 1..=j {
                    joined.set(a, i + b, f.g.get(a, b).clone());
                }
            }
            *entry = i + j - joined.rank();
        }
    }
    RankMatrix::from_entries(r)?.to_perm()
}

/// The bounded affine permutation of the positroid cell containing the
/// column span of `M`: `r_{ij}` is the rank of rows `i, ..., j` read
/// cyclically.
pub fn positroid_envelope<F: Field>(m: &Matrix<F>) -> Result<BoundedAffinePerm> {
    let (n, k) = (m.rows(), m.cols());
    if m.rank() != k {
        return Err(Error::Precondition(
            "positroid envelope needs a full-rank n x k matrix".into(),
        ));
    }
    let cols = (1..=n)
        .map(|i| {
            (0..=n)
                .map(|t| {
                    let rows: Vec<usize> = (0..t).map(|s| (i - 1 + s) % n + 1).collect();
                    m.block_rank(&rows, k) as i64
                })
                .collect()
        })
        .collect();
    CyclicRankMatrix::from_columns(n, k, cols)?.to_affine()
}

/// Nonnegative up to one global sign, and not identically zero.
pub fn is_tnn_pluecker<F: OrderedField>(d: &PlueckerVector<F>) -> bool {
    let Some(first) = d.values.iter().find(|v| !v.is_zero()) else {
        return false;
    };
    let negate = first.is_negative();
    d.values.iter().all(|v| {
        if negate {
            !v.is_positive()
        } else {
            !v.is_negative()
        }
    })
}

pub fn is_tnn_subspace<F: OrderedField>(m: &Matrix<F>) -> bool {
    is_tnn_pluecker(&pluecker(m))
}

/// Every subspace of the flag is totally nonnegative.
pub fn is_tnn_flag<F: OrderedField>(flag: &FlagPoint<F>) -> bool {
    (1..flag.n()).all(|k| is_tnn_subspace(&flag.subspace(k)))
}

/// `V ∩ {x_j = 0}` for the last coordinate `j` not identically zero on `V`,
/// returned with a basis of `V` extending one of `V'` by a last column.
fn peel_down<F: Field>(v: &Matrix<F>) -> Matrix<F> {
    let (n, k) = (v.rows(), v.cols());
    let j = (1..=n)
        .rev()
        .find(|&j| (1..=k).any(|c| !v.get(j, c).is_zero()))
        .expect("nonzero subspace");
    let pc = (1..=k).find(|&c| !v.get(j, c).is_zero()).expect("pivot");
    let inv = v.get(j, pc).inv().expect("nonzero");
    let pivot_col: Vec<F> = v.col(pc).into_iter().map(|x| x * inv.clone()).collect();
    let mut out = Matrix::zeros(n, k, v.ctx());
    for (b, c) in (1..=k)
        .filter(|&c| c != pc)
        .enumerate()
        .map(|(b, c)| (b + 1, c))
    {
        let factor = v.get(j, c).clone();
        for i in 1..=n {
            out.set(
                i,
                b,
                v.get(i, c).clone() - factor.clone() * pivot_col[i - 1].clone(),
            );
        }
    }
    for i in 1..=n {
        out.set(i, k, pivot_col[i - 1].clone());
    }
    out
}

/// `D(V) = {x : Σ (-1)^i x_i v_i = 0 for v ∈ V}`; inclusion reversing,
/// an involution, and it preserves total nonnegativity.
fn alternating_complement<F: Field>(v: &Matrix<F>) -> Matrix<F> {
    let n = v.rows();
    let mut alt = v.transpose();
    for c in 1..=v.cols() {
        for i in (2..=n).step_by(2) {
            let x = -alt.get(c, i).clone();
            alt.set(c, i, x);
        }
    }
    if v.cols() == 0 {
        return Matrix::identity(n, v.ctx());
    }
    alt.nullspace()
}

/// Extends a totally nonnegative `k`-plane to a totally nonnegative flag:
/// downward by repeatedly intersecting with the last nonvanishing coordinate
/// hyperplane, upward by the same step applied to the alternating
/// complement.
pub fn tnn_completion<F: OrderedField>(v: &Matrix<F>) -> Result<FlagPoint<F>> {
    let (n, k) = (v.rows(), v.cols());
    if v.rank() != k || (k > 0 && !is_tnn_subspace(v)) {
        return Err(Error::Precondition(
            "input is not a totally nonnegative subspace".into(),
        ));
    }
    // Downward: after peeling, the leading columns span each smaller space.
    let mut basis = v.clone();
    for d in (2..=k).rev() {
        let lead = basis.leading_columns(d);
        let peeled = peel_down(&lead);
        for c in 1..=d {
            for i in 1..=n {
                basis.set(i, c, peeled.get(i, c).clone());
            }
        }
    }
    // Upward: peel the complement and dualize back.
    let mut cols: Vec<Vec<F>> = (1..=k).map(|c| basis.col(c)).collect();
    let mut current = basis;
    for _ in k..n {
        let dual = alternating_complement(&current);
        let bigger = if dual.cols() <= 1 {
            Matrix::identity(n, v.ctx())
        } else {
            let peeled = peel_down(&dual);
            alternating_complement(&peeled.leading_columns(dual.cols() - 1))
        };
        let extra = (1..=bigger.cols())
            .map(|c| bigger.col(c))
            .find(|c| {
                let mut test = cols.clone();
                test.push(c.clone());
                columns_to_matrix(&test, n, v.ctx()).rank() == test.len()
            })
            .expect("larger space has a new direction");
        cols.push(extra);
        current = columns_to_matrix(&cols, n, v.ctx());
    }
    let flag = FlagPoint::new(columns_to_matrix(&cols, n, v.ctx()))?;
    debug_assert!(is_tnn_flag(&flag));
    Ok(flag)
}

fn columns_to_matrix<F: Field>(cols: &[Vec<F>], n: usize, ctx: &F::Ctx) -> Matrix<F> {
    let mut m = Matrix::zeros(n, cols.len(), ctx);
    for (c, col) in cols.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            m.set(i + 1, c + 1, x.clone());
        }
    }
    m
}

/// Searches the pencil of `d`-planes between a `(d-1)`-plane `lower` and a
/// `(d+1)`-plane `upper ⊃ lower` for a totally nonnegative one, sampling the
/// pencil at `a b₁ + c b₂` with `|a| ≤ bound`, `0 ≤ c ≤ bound` integers.
pub fn find_tnn_intermediate(
    lower: &Matrix<Q>,
    upper: &Matrix<Q>,
    bound: i64,
) -> Option<Matrix<Q>> {
    let n = lower.rows();
    let lower_cols: Vec<Vec<Q>> = (1..=lower.cols()).map(|c| lower.col(c)).collect();
    // Complete `lower` to a basis of `upper` with two extra vectors.
    let mut extra = Vec::new();
    let mut cols = lower_cols.clone();
    for c in 1..=upper.cols() {
        let mut test = cols.clone();
        test.push(upper.col(c));
        if columns_to_matrix(&test, n, &()).rank() == test.len() {
            cols = test;
            extra.push(upper.col(c));
        }
    }
    let [b1, b2] = extra.as_slice() else {
        return None;
    };
    for c in 0..=bound {
        for a in -bound..=bound {
            if c == 0 && a != 1 {
                continue;
            }
            let x: Vec<Q> = b1
                .iter()
                .zip(b2)
                .map(|(p, q)| qi(a) * p.clone() + qi(c) * q.clone())
                .collect();
            let mut test = lower_cols.clone();
            test.push(x);
            let m = columns_to_matrix(&test, n, &());
            if m.rank() == test.len() && is_tnn_subspace(&m) {
                return Some(m);
            }
        }
    }
    None
}
