//! `convert`: any positroid representation to all of the others.

use anyhow::{bail, Context, Result};
use positroid::affine::{
    decorated_from_f, f_from_decorated, f_from_necklace, from_pair, necklace_from_f, pair_from_f,
    positroid_dim,
};
use positroid::{BoundedAffinePerm, CyclicRankMatrix, DecoratedPerm, GrassmannNecklace, Perm};

use crate::report::Report;

pub enum Source {
    Pair(String, String, String),
    Window(String, Option<String>),
    Necklace(String),
    Decorated(String),
}

pub fn parse_source(src: &Source) -> Result<BoundedAffinePerm> {
    Ok(match src {
        Source::Pair(u, w, k) => {
            let u: Perm = u
                .parse()
                .with_context(|| format!("in --pair, first permutation `{u}`"))?;
            let w: Perm = w
                .parse()
                .with_context(|| format!("in --pair, second permutation `{w}`"))?;
            let k: usize = k.parse().with_context(|| format!("in --pair, k = `{k}`"))?;
            from_pair(&u, &w, k).context("in --pair")?
        }
        Source::Window(s, k) => {
            let f: BoundedAffinePerm = s.parse().with_context(|| format!("in --window `{s}`"))?;
            if let Some(k) = k {
                let k: usize = k
                    .parse()
                    .with_context(|| format!("in --window, k = `{k}`"))?;
                if k != f.k() {
                    bail!("in --window: {f} has k = {}, not {k}", f.k());
                }
            }
            f
        }
        Source::Necklace(s) => {
            let neck =
                GrassmannNecklace::parse(s).with_context(|| format!("in --necklace `{s}`"))?;
            f_from_necklace(&neck).context("in --necklace")?
        }
        Source::Decorated(s) => {
            let d: DecoratedPerm = s.parse().with_context(|| format!("in --decorated `{s}`"))?;
            f_from_decorated(&d, d.k()).context("in --decorated")?
        }
    })
}

pub fn run(src: &Source, report: &mut Report) -> Result<()> {
    let f = parse_source(src)?;
    let (n, k) = (f.n(), f.k());
    report.info(format!("window {f}"));
    report.info(format!("n {n} k {k}"));
    let (u, w) = pair_from_f(&f)?;
    report.info(format!("pair ({u},{w})"));
    report.info(format!("necklace {}", necklace_from_f(&f)));
    report.info(format!("decorated {}", decorated_from_f(&f)));
    report.info(format!("dimension {}", positroid_dim(&f)));
    let r = CyclicRankMatrix::of(&f);
    report.info("cyclic rank matrix (row i lists r_ij for j = i..i+n-1)");
    for i in 1..=n as i64 {
        let row: Vec<String> = (i..i + n as i64).map(|j| r.get(i, j).to_string()).collect();
        report.info(format!("  {i}: {}", row.join(" ")));
    }
    report.spend(1)?;
    report.check(
        "convert.round-trip.pair",
        from_pair(&u, &w, k).ok().as_ref() == Some(&f),
    );
    report.check(
        "convert.round-trip.necklace",
        f_from_necklace(&necklace_from_f(&f)).ok().as_ref() == Some(&f),
    );
    report.check(
        "convert.round-trip.decorated",
        f_from_decorated(&decorated_from_f(&f), k).ok().as_ref() == Some(&f),
    );
    report.check(
        "convert.round-trip.rank-matrix",
        r.to_affine().ok().as_ref() == Some(&f),
    );
    Ok(())
}
