//! Single-object verbs: `class`, `rpoly` and `tnn`.

use anyhow::{bail, Context, Result};
use positroid::affine::{pair_from_f, positroid_dim};
use positroid::deodhar::{
    distinguished_masks, enumerate_open_richardson, r_polynomial, r_polynomial_with_word,
};
use positroid::linalg::{
    find_tnn_intermediate, is_tnn_flag, is_tnn_subspace, pluecker, tnn_completion,
};
use positroid::perm::{reduced_words, some_reduced_word};
use positroid::symfunc::{bergeron_sottile, duality_check, format_basis, positroid_class};
use positroid::{BoundedAffinePerm, Matrix, Perm, Word};

use crate::report::Report;
use crate::FieldSel;

pub fn class(spec: &str, report: &mut Report) -> Result<()> {
    let f: BoundedAffinePerm = spec
        .parse()
        .with_context(|| format!("bad bounded affine permutation `{spec}`"))?;
    let (n, k) = (f.n(), f.k());
    let class = positroid_class(&f)?;
    let (u, w) = pair_from_f(&f)?;
    let bs = bergeron_sottile(&u, &w, k, None)?.schur_expand();
    let dual = duality_check(&f)?;
    report.spend(1)?;
    report.info(format!("window {f}"));
    report.info(format!("pair ({u},{w}) k {k}"));
    report.info(format!("class {}", format_basis(&class, "s")));
    report.info(format!("bergeron-sottile {}", format_basis(&bs, "s")));
    report.info(format!("duality {}", if dual { "OK" } else { "FAILED" }));
    let codim = k * (n - k) - positroid_dim(&f);
    report.check(
        "class.degree-is-codimension",
        class.keys().all(|l| l.size() == codim),
    );
    report.check("class.schur-positive", class.values().all(|&c| c > 0));
    report.check("class.duality", dual);
    Ok(())
}

pub fn rpoly(
    u: &str,
    w: &str,
    word: Option<&str>,
    field: FieldSel,
    report: &mut Report,
) -> Result<()> {
    let u: Perm = u
        .parse()
        .with_context(|| format!("bad permutation `{u}`"))?;
    let w: Perm = w
        .parse()
        .with_context(|| format!("bad permutation `{w}`"))?;
    if u.n() != w.n() {
        bail!("{u} and {w} have different sizes");
    }
    if !u.bruhat_leq(&w) {
        bail!("{u} is not below {w} in Bruhat order");
    }
    let word = match word {
        Some(s) => {
            let word = Word::parse(w.n(), s)?;
            if !word.is_reduced() || word.product() != w {
                bail!("`{s}` is not a reduced word for {w}");
            }
            word
        }
        None => some_reduced_word(&w),
    };
    let r = r_polynomial(&u, &w);
    let d = w.length() - u.length();
    report.info(format!("R_({u},{w})(q) = {r}"));
    report.info(format!("word {word}"));
    let masks = distinguished_masks(&word, &u);
    for m in &masks {
        report.info(format!(
            "mask {m} equal {} down {} count {}",
            m.m_equal(),
            m.m_down(),
            m.point_count()
        ));
    }
    let words = reduced_words(&w)?;
    report.spend(words.len() as u64)?;
    report.check("rpoly.palindromy", r.is_twisted_palindromic(d));
    report.check(
        "rpoly.word-independence",
        words
            .iter()
            .all(|wd| r_polynomial_with_word(wd, &u).ok().as_ref() == Some(&r)),
    );
    let sum_at = |q: i64| masks.iter().map(|m| m.point_count().eval(q)).sum::<i64>();
    report.check("rpoly.mask-sum", (2..=7).all(|q| sum_at(q) == r.eval(q)));
    if let FieldSel::P(p) = field {
        let q = p.get();
        report.spend(q.saturating_pow(w.length() as u32))?;
        let count = enumerate_open_richardson(&u, &w, p)?.len() as i64;
        report.info(format!("points over F_{q}: {count}"));
        report.check(
            format!("rpoly.point-count.q={q}"),
            count == r.eval(q as i64),
        );
    }
    Ok(())
}

pub enum TnnAction {
    Check(String),
    Complete(String),
    Intermediate {
        lower: String,
        upper: String,
        bound: i64,
    },
}

fn matrix(s: &str) -> Result<Matrix<positroid::Q>> {
    Matrix::parse(s)
        .with_context(|| format!("bad matrix `{s}` (rows separated by `;`, entries by `,`)"))
}

pub fn tnn(action: &TnnAction, field: FieldSel, report: &mut Report) -> Result<()> {
    if field != FieldSel::Q {
        bail!("total nonnegativity needs the rational field (--field q)");
    }
    report.spend(1)?;
    match action {
        TnnAction::Check(m) => {
            let m = matrix(m)?;
            report.info(format!("pluecker {}", pluecker(&m)));
            report.check("tnn.subspace", is_tnn_subspace(&m));
        }
        TnnAction::Complete(m) => {
            let m = matrix(m)?;
            let flag = tnn_completion(&m)?;
            report.info(format!("flag {}", flag.matrix()));
            report.check("tnn.completion.is-tnn", is_tnn_flag(&flag));
            report.check(
                "tnn.completion.contains-input",
                pluecker(&flag.subspace(m.cols())).projectively_equal(&pluecker(&m)),
            );
        }
        TnnAction::Intermediate {
            lower,
            upper,
            bound,
        } => {
            let (lo, up) = (matrix(lower)?, matrix(upper)?);
            match find_tnn_intermediate(&lo, &up, *bound) {
                Some(v) => report.info(format!("intermediate {v}")),
                None => report.info(format!(
                    "no totally nonnegative intermediate subspace at denominator <= {bound}"
                )),
            }
        }
    }
    Ok(())
}
