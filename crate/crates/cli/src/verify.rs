//! `verify`: seeded invariant suites, one `CHECK` line per identity.

use std::collections::BTreeSet;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use positroid::affine::{
    decorated_from_f, f_from_decorated, f_from_necklace, k_subsets, necklace_from_f, positroid_dim,
};
use positroid::deodhar::{
    classify_bs_point, distinguished_masks, enumerate_open_richardson, flag_key, flag_minor,
    mr_parametrize, mr_piece_chains, positive_mask, positive_pluecker_support, r_polynomial,
    sweep_bs_chains,
};
use positroid::gt::{enumerate_gt, nonzero_in_richardson_strict, row_sums_for_weight};
use positroid::linalg::{on_grassmannian, pluecker, pluecker_to_matrix, positroid_envelope};
use positroid::perm::{bruhat_interval, reduced_words};
use positroid::plabic::{reverse_twist, twist};
use positroid::scalar::{q, qi};
use positroid::symfunc::{duality_check, positroid_class};
use positroid::tableaux::{compositions, standard_count};
use positroid::{
    BoundedAffinePerm, CyclicRankMatrix, EdgeWeights, Partition, Perm, Prime, Ring, Q,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::Report;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// R-polynomials: mask sums against brute-force point counts.
    Rpoly,
    /// Plabic graph pipeline on one file.
    Plabic,
    /// Standard monomial counts against Gelfand-Tsetlin counts.
    Smt,
    /// Round trips between positroid representations.
    Bijections,
    /// Deodhar pieces partition every Bott-Samelson chart.
    Deodhar,
    /// Sign patterns of flag minors on positive Deodhar tori.
    Positivity,
    /// Cohomology classes: degree and duality.
    Classes,
}

pub struct Options {
    pub n: usize,
    pub k: Option<usize>,
    pub qs: Vec<u64>,
    pub file: Option<PathBuf>,
    pub samples: usize,
    pub seed: u64,
}

pub fn run(suite: Suite, opts: &Options, report: &mut Report) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    match suite {
        Suite::Rpoly => rpoly(opts, report),
        Suite::Plabic => plabic(opts, &mut rng, report),
        Suite::Smt => smt(opts, report),
        Suite::Bijections => bijections(opts, report),
        Suite::Deodhar => deodhar(opts, report),
        Suite::Positivity => positivity(opts, &mut rng, report),
        Suite::Classes => classes(opts, report),
    }
}

fn primes(opts: &Options) -> Result<Vec<Prime>> {
    opts.qs
        .iter()
        .map(|&q| Prime::new(q).with_context(|| format!("--q {q} is not a prime")))
        .collect()
}

fn intervals(n: usize) -> Vec<(Perm, Perm)> {
    Perm::all(n)
        .into_iter()
        .flat_map(|w| {
            bruhat_interval(&Perm::identity(n), &w)
                .into_iter()
                .map(move |u| (u, w.clone()))
        })
        .collect()
}

fn rpoly(opts: &Options, report: &mut Report) -> Result<()> {
    let ps = primes(opts)?;
    for (u, w) in intervals(opts.n) {
        let r = r_polynomial(&u, &w);
        let d = w.length() - u.length();
        report.check(
            format!("rpoly.{u}-{w}.palindromy"),
            r.is_twisted_palindromic(d),
        );
        let masks = distinguished_masks(&positroid::perm::some_reduced_word(&w), &u);
        for &p in &ps {
            let q = p.get();
            report.spend(q.saturating_pow(w.length() as u32))?;
            let brute = enumerate_open_richardson(&u, &w, p)?.len() as i64;
            let sum: i64 = masks.iter().map(|m| m.point_count().eval(q as i64)).sum();
            report.check(
                format!("rpoly.{u}-{w}.q={q}"),
                sum == brute && r.eval(q as i64) == brute,
            );
        }
    }
    Ok(())
}

fn random_weights(n: usize, rng: &mut ChaCha8Rng) -> Vec<Q> {
    (0..n)
        .map(|_| q(rng.gen_range(1..=30), rng.gen_range(1..=7)))
        .collect()
}

/// Whether `x` is plus or minus a power of two.
fn is_signed_power_of_two(x: &Q) -> bool {
    let mut y = if *x < qi(0) { -x.clone() } else { x.clone() };
    for _ in 0..128 {
        if y == qi(1) {
            return true;
        }
        y = if y > qi(1) { y / qi(2) } else { y * qi(2) };
    }
    false
}

fn plabic(opts: &Options, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    let Some(path) = &opts.file else {
        bail!("the plabic suite needs --file");
    };
    let (g, _) = crate::plabic::load(path)?;
    let pre = g.preprocess();
    let pg = &pre.graph;
    if !report.check("plabic.reduced", pg.is_reduced()?) {
        return Ok(());
    }
    let f = pg.trip_permutation()?;
    report.info(format!("trip permutation {f}"));
    report.check(
        "plabic.face-count",
        pg.faces().len() == positroid_dim(&f) + 1,
    );
    report.check(
        "plabic.face-labels.consistent",
        pg.face_labels()?.is_consistent(),
    );
    let support: BTreeSet<Vec<usize>> = pg.matching_counts().into_keys().collect();
    for trial in 0..opts.samples {
        report.spend(pg.num_edges() as u64)?;
        let vals = random_weights(pg.num_edges(), rng);
        let w = EdgeWeights::new(pg, vals.clone(), &())?;
        let d = pg.boundary_measurement(&w)?;
        let tag = format!("plabic.sample={trial}");
        report.check(
            format!("{tag}.measurement.grassmannian"),
            on_grassmannian(&d),
        );
        report.check(
            format!("{tag}.measurement.tnn"),
            d.iter().all(|(_, v)| *v >= qi(0)),
        );
        let nonzero: BTreeSet<Vec<usize>> = d.support().into_iter().collect();
        report.check(format!("{tag}.measurement.support"), nonzero == support);
        let m = pluecker_to_matrix(&d)?;
        report.check(format!("{tag}.envelope"), positroid_envelope(&m)? == f);
        let loops = (1..=m.rows()).any(|i| m.row(i).iter().all(Ring::is_zero));
        if f.k() > 0 && !loops {
            let back = reverse_twist(&twist(&m)?)?;
            report.check(
                format!("{tag}.twist.inverse"),
                pluecker(&back).projectively_equal(&d),
            );
            let base = pg.muller_speyer_composite(&w)?;
            let monomial = (0..pg.num_edges()).all(|e| {
                let mut v = vals.clone();
                v[e] = v[e].clone() * qi(2);
                let Ok(ws) = EdgeWeights::new(pg, v, &()) else {
                    return false;
                };
                let Ok(scaled) = pg.muller_speyer_composite(&ws) else {
                    return false;
                };
                scaled
                    .iter()
                    .zip(&base)
                    .all(|((_, a), (_, b))| is_signed_power_of_two(&(a.clone() / b.clone())))
            });
            report.check(format!("{tag}.composite.monomial"), monomial);
        }
    }
    Ok(())
}

fn smt(opts: &Options, report: &mut Report) -> Result<()> {
    let n = opts.n;
    let top: Vec<i64> = (0..n as i64).rev().collect();
    let lambda = Partition::new(top.iter().map(|&x| x as usize).collect())?;
    let weights = compositions(lambda.size(), n);
    let patterns = weights
        .iter()
        .map(|a| enumerate_gt(&top, Some(&row_sums_for_weight(a))))
        .collect::<positroid::Result<Vec<_>>>()?;
    for u in Perm::all(n) {
        for w in bruhat_interval(&u, &Perm::longest(n)) {
            report.spend(weights.len() as u64)?;
            let mut ok = true;
            for (a, pats) in weights.iter().zip(&patterns) {
                let gt = pats
                    .iter()
                    .map(|g| nonzero_in_richardson_strict(g, &u, &w))
                    .collect::<positroid::Result<Vec<bool>>>()?
                    .into_iter()
                    .filter(|&b| b)
                    .count();
                ok &= gt == standard_count(&lambda, a, &u, &w);
            }
            report.check(format!("smt.{u}-{w}"), ok);
        }
    }
    Ok(())
}

fn bijections(opts: &Options, report: &mut Report) -> Result<()> {
    for n in 1..=opts.n {
        let mut count = 0u64;
        let mut ok = true;
        for k in 0..=n {
            for f in BoundedAffinePerm::all(k, n) {
                count += 1;
                ok &= CyclicRankMatrix::of(&f).to_affine().ok().as_ref() == Some(&f);
                ok &= f_from_necklace(&necklace_from_f(&f)).ok().as_ref() == Some(&f);
                ok &= f_from_decorated(&decorated_from_f(&f), k).ok().as_ref() == Some(&f);
            }
        }
        report.spend(count)?;
        report.check(format!("bijections.n={n}.round-trip"), ok);
        // Decorated permutations: a derangement of the non-fixed points and
        // two colors for each fixed point.
        let mut derange = vec![1u64, 0];
        for m in 2..=n as u64 {
            derange.push((m - 1) * (derange[m as usize - 1] + derange[m as usize - 2]));
        }
        let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
        let expect: u64 = (0..=n as u64)
            .map(|j| (binom(n as u64, j) * derange[n - j as usize]) << j)
            .sum();
        report.info(format!("n = {n}: {count} bounded affine permutations"));
        report.check(format!("bijections.n={n}.count"), count == expect);
    }
    Ok(())
}

fn deodhar(opts: &Options, report: &mut Report) -> Result<()> {
    let n = opts.n;
    for p in primes(opts)? {
        let q = p.get();
        for w in Perm::all(n) {
            for word in reduced_words(&w)? {
                report.spend(q.saturating_pow(word.len() as u32))?;
                let key = |c: &positroid::BsChain<positroid::Fp>| -> Vec<Vec<u64>> {
                    (0..=word.len()).map(|j| flag_key(&c.flag(j))).collect()
                };
                let chart: BTreeSet<Vec<Vec<u64>>> =
                    sweep_bs_chains(&word, p)?.iter().map(key).collect();
                let mut covered = BTreeSet::new();
                let mut ok = true;
                for u in Perm::all(n) {
                    for m in distinguished_masks(&word, &u) {
                        for c in mr_piece_chains(&m, p)? {
                            ok &= classify_bs_point(&c)? == m;
                            ok &= covered.insert(key(&c));
                        }
                    }
                }
                let tag = if word.is_empty() {
                    "e".to_string()
                } else {
                    word.to_string().replace(' ', "")
                };
                report.check(format!("deodhar.{tag}.q={q}"), ok && covered == chart);
            }
        }
    }
    Ok(())
}

fn positivity(opts: &Options, rng: &mut ChaCha8Rng, report: &mut Report) -> Result<()> {
    let n = opts.n;
    for (u, w) in intervals(n) {
        let word = positroid::perm::some_reduced_word(&w);
        let mask = positive_mask(&word, &u)?;
        let support: Vec<BTreeSet<Vec<usize>>> = (0..=n)
            .map(|k| positive_pluecker_support(&u, &w, k))
            .collect();
        let mut ok = true;
        for _ in 0..opts.samples {
            report.spend(1u64 << n)?;
            let t = random_weights(word.len(), rng);
            let g = mr_parametrize(&mask, &t, &())?.final_matrix().clone();
            for k in 1..=n {
                for j in k_subsets(n, k) {
                    let d = flag_minor(&g, &j);
                    ok &= d >= qi(0) && (d > qi(0)) == support[k].contains(&j);
                }
            }
        }
        report.check(format!("positivity.{u}-{w}"), ok);
    }
    Ok(())
}

fn classes(opts: &Options, report: &mut Report) -> Result<()> {
    let n = opts.n;
    let ks: Vec<usize> = match opts.k {
        Some(k) if k <= n => vec![k],
        Some(k) => bail!("k = {k} exceeds n = {n}"),
        None => (0..=n).collect(),
    };
    for k in ks {
        for f in BoundedAffinePerm::all(k, n) {
            report.spend(1)?;
            let codim = k * (n - k) - positroid_dim(&f);
            let class = positroid_class(&f)?;
            report.check(
                format!("classes.{f}.degree"),
                class.iter().all(|(l, &c)| l.size() == codim && c > 0),
            );
            report.check(format!("classes.{f}.duality"), duality_check(&f)?);
        }
    }
    Ok(())
}
