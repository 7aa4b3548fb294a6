//! Acceptance suite: one PASS/FAIL line per criterion with its wall-clock
//! time against a pinned limit. All arithmetic is exact, so the only pinned
//! tolerances are the time limits. Exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use positroid::affine::{
    affine_length, decorated_from_f, f_from_decorated, f_from_necklace, necklace_from_f,
    CyclicRankMatrix,
};
use positroid::deodhar::{
    classify_bs_point, distinguished_masks, enumerate_open_richardson, flag_key, flag_minor,
    mr_parametrize, mr_piece_chains, positive_mask, positive_pluecker_support,
    prefix_minor_polynomials, r_polynomial, r_polynomial_with_word, recover_torus_params,
    sweep_bs_chains, Step,
};
use positroid::gt::{
    enumerate_gt, nonzero_in_opposite, nonzero_in_richardson_strict, nonzero_in_schubert,
    row_sums_for_weight, GtPattern,
};
use positroid::linalg::{
    find_tnn_intermediate, is_tnn_flag, is_tnn_subspace, on_grassmannian, pluecker,
    pluecker_to_matrix, tnn_completion, Matrix, PlueckerVector,
};
use positroid::perm::{bruhat_interval, reduced_words, some_reduced_word, Word};
use positroid::plabic::{bridge_graph, twist, EdgeWeights, PlabicGraph};
use positroid::scalar::{q, qi};
use positroid::symfunc::{
    affine_stanley, bergeron_sottile, duality_check, positroid_class, CoeffMap,
};
use positroid::tableaux::{
    compositions, is_standard_columns, kostka, minimal_lift, ssyt, standard_count, Orientation,
    Partition, Tableau,
};
use positroid::{AffinePerm, BoundedAffinePerm, Perm, Prime, Q};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

/// Name, time limit in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

const SEED: u64 = 20_240_601;

const BASIC_G24: &str = include_str!("../../../data/plabic/basic_g24.plabic");
const HEXAGON: &str = include_str!("../../../data/plabic/hexagon.plabic");
const DOUBLED_G12: &str = include_str!("../../../data/plabic/doubled_g12.plabic");

fn perm(s: &str) -> Perm {
    s.parse().unwrap()
}

fn set(s: &str) -> Vec<usize> {
    s.chars()
        .map(|c| c.to_digit(10).unwrap() as usize)
        .collect()
}

fn rand_pos_q(rng: &mut ChaCha8Rng) -> Q {
    q(rng.gen_range(1..=30), rng.gen_range(1..=7))
}

fn weights_by_id(g: &PlabicGraph, f: impl Fn(&str) -> Q) -> EdgeWeights<Q> {
    let vals = (0..g.num_edges()).map(|e| f(g.edge_id(e))).collect();
    EdgeWeights::new(g, vals, &()).unwrap()
}

fn basic_g24_measurement() -> Check {
    let (g, _) = PlabicGraph::parse(BASIC_G24).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let trials = 25;
    for _ in 0..trials {
        let vals: Vec<Q> = (0..6).map(|_| rand_pos_q(&mut rng)).collect();
        let idx = |id: &str| {
            ["p", "q", "r", "s", "t", "u"]
                .iter()
                .position(|&x| x == id)
                .unwrap()
        };
        let w = weights_by_id(&g, |id| vals[idx(id)].clone());
        let d = g.boundary_measurement(&w).map_err(|e| e.to_string())?;
        let x = |id: &str| vals[idx(id)].clone();
        let expect = [
            ("12", x("s") * x("t")),
            ("13", x("p") * x("r") + x("q") * x("s")),
            ("14", x("p") * x("u")),
            ("23", x("r") * x("t")),
            ("24", x("t") * x("u")),
            ("34", x("q") * x("u")),
        ];
        for (i, v) in expect {
            ensure!(d.get(&set(i)) == v, "D_{i} differs at weights {vals:?}");
        }
        ensure!(on_grassmannian(&d), "measurement off the Grassmannian");
    }
    Ok(format!(
        "{trials} random weightings, six formulas exact, all on G(2,4)"
    ))
}

fn hexagon_pipeline() -> Check {
    let (g, _) = PlabicGraph::parse(HEXAGON).map_err(|e| e.to_string())?;
    let xs: Vec<Q> = [2, 3, 5, 7, 11, 13].iter().map(|&v| qi(v)).collect();
    let x = |i: usize| xs[i - 1].clone();
    let w = weights_by_id(&g, |id| match id.strip_prefix('x') {
        Some(i) => x(i.parse().unwrap()),
        None => qi(1),
    });
    let d = g.boundary_measurement(&w).map_err(|e| e.to_string())?;
    let one = qi(1);
    let table = [
        ("123", qi(0)),
        ("345", qi(0)),
        ("156", qi(0)),
        ("234", x(1) * x(4)),
        ("456", x(3) * x(6)),
        ("126", x(2) * x(5)),
        ("124", x(2) * x(4)),
        ("245", x(1) * x(3)),
        ("346", x(4) * x(6)),
        ("146", x(3) * x(5)),
        ("256", x(2) * x(6)),
        ("236", x(1) * x(5)),
        ("134", x(4)),
        ("136", x(5)),
        ("356", x(6)),
        ("235", x(1)),
        ("125", x(2)),
        ("145", x(3)),
        ("135", one.clone()),
        ("246", x(1) * x(3) * x(5) + x(2) * x(4) * x(6)),
    ];
    for (i, v) in &table {
        ensure!(
            d.get(&set(i)) == *v,
            "Δ_{i} = {} expected {v}",
            d.get(&set(i))
        );
    }
    let pre = g.preprocess();
    let pg = &pre.graph;
    let f = pg.trip_permutation().map_err(|e| e.to_string())?;
    ensure!(f.window() == [3, 6, 5, 8, 7, 10], "trip permutation {f}");
    let labels: BTreeSet<Vec<usize>> = pg
        .face_labels()
        .map_err(|e| e.to_string())?
        .labels()
        .iter()
        .cloned()
        .collect();
    let want: BTreeSet<Vec<usize>> = ["124", "234", "346", "456", "256", "126", "246"]
        .iter()
        .map(|s| set(s))
        .collect();
    ensure!(labels == want, "face labels {labels:?}");
    // The displayed twist of the displayed matrix.
    let z = qi(0);
    let m = Matrix::from_rows(
        vec![
            vec![one.clone(), z.clone(), z.clone()],
            vec![x(1), x(2), z.clone()],
            vec![z.clone(), one.clone(), z.clone()],
            vec![z.clone(), x(3), x(4)],
            vec![z.clone(), z.clone(), one.clone()],
            vec![x(6), z.clone(), x(5)],
        ],
        &(),
    )
    .unwrap();
    ensure!(
        pluecker(&m).projectively_equal(&d),
        "displayed matrix has a different Plücker vector"
    );
    let t = twist(&m).map_err(|e| e.to_string())?;
    let tw = vec![
        vec![one.clone(), -x(1) / x(2), x(1) * x(3) / (x(2) * x(4))],
        vec![one.clone() / x(1), z.clone(), z.clone()],
        vec![x(3) * x(5) / (x(4) * x(6)), one.clone(), -x(3) / x(4)],
        vec![z.clone(), one.clone() / x(3), z.clone()],
        vec![-x(5) / x(6), x(1) * x(5) / (x(2) * x(6)), one.clone()],
        vec![z.clone(), z, one.clone() / x(5)],
    ];
    ensure!(t.to_rows() == tw, "twisted matrix differs");
    let comp = pg
        .muller_speyer_composite(&pre.lift_weights(&w))
        .map_err(|e| e.to_string())?;
    let got: std::collections::BTreeMap<Vec<usize>, Q> = comp.into_iter().collect();
    let mono = [
        ("124", one.clone() / (x(2) * x(4))),
        ("234", one.clone() / (x(1) * x(4))),
        ("346", one.clone() / (x(4) * x(6))),
        ("456", one.clone() / (x(3) * x(6))),
        ("256", one.clone() / (x(2) * x(6))),
        ("126", one.clone() / (x(2) * x(5))),
        ("246", one / (x(1) * x(3) * x(5))),
    ];
    let scale = got[&set("124")].clone() / mono[0].1.clone();
    for (i, v) in &mono {
        ensure!(
            got[&set(i)] == v.clone() * scale.clone(),
            "composite at {i}"
        );
    }
    // Invert the monomial map: write each x_i as a product of powers of the
    // ratios Δ_I / Δ_124 by solving the exponent system exactly.
    let exps: Vec<Vec<i64>> = ["24", "14", "46", "36", "26", "25", "135"]
        .iter()
        .map(|s| (1..=6).map(|i| -(set(s).contains(&i) as i64)).collect())
        .collect();
    let a = Matrix::from_q_rows(
        (0..6)
            .map(|i| (1..7).map(|r| qi(exps[r][i] - exps[0][i])).collect())
            .collect(),
    );
    ensure!(a.rank() == 6, "monomial map is not invertible");
    ensure!(
        a.det() == qi(1) || a.det() == qi(-1),
        "monomial map is not unimodular: det {}",
        a.det()
    );
    let ratios: Vec<Q> = mono[1..]
        .iter()
        .map(|(i, _)| got[&set(i)].clone() / got[&set("124")].clone())
        .collect();
    for i in 0..6 {
        let unit: Vec<Q> = (0..6).map(|j| qi((i == j) as i64)).collect();
        let e = a.solve(&unit).ok_or("exponent system has no solution")?;
        let mut val = qi(1);
        for (r, ej) in ratios.iter().zip(&e) {
            ensure!(ej.is_integer(), "non-integral exponent {ej}");
            let p = ej.to_integer().to_string().parse::<i32>().unwrap();
            let base = if p < 0 { qi(1) / r.clone() } else { r.clone() };
            for _ in 0..p.abs() {
                val *= base.clone();
            }
        }
        ensure!(val == x(i + 1), "x{} recovered as {val}", i + 1);
    }
    Ok("Plücker table, trips, labels, twist and composite all exact".into())
}

fn reducedness() -> Check {
    let parse = |s: &str| {
        PlabicGraph::parse(s)
            .map(|(g, _)| g.preprocess().graph)
            .map_err(|e| e.to_string())
    };
    ensure!(parse(HEXAGON)?.is_reduced().unwrap(), "hexagon not reduced");
    ensure!(
        parse(BASIC_G24)?.is_reduced().unwrap(),
        "basic G(2,4) graph not reduced"
    );
    ensure!(
        !parse(DOUBLED_G12)?.is_reduced().unwrap(),
        "doubled-edge graph reported reduced"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut got, mut cells) = (0, BTreeSet::new());
    while got < 200 {
        let n = rng.gen_range(2..=8);
        let lol: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let target = rng.gen_range(0..=6);
        let mut bridges = Vec::new();
        for _ in 0..30 {
            if bridges.len() == target {
                break;
            }
            let mut next = bridges.clone();
            next.push(rng.gen_range(1..=n));
            if bridge_graph(n, &lol, &next).unwrap().is_reduced().unwrap() {
                bridges = next;
            }
        }
        let g = bridge_graph(n, &lol, &bridges).unwrap();
        let bivalent = (0..g.num_vertices())
            .filter(|&v| g.boundary_position(v).is_none() && g.degree(v) == 2)
            .count();
        if g.num_edges() - bivalent > 14 {
            continue;
        }
        got += 1;
        let f = g.trip_permutation().map_err(|e| e.to_string())?;
        let k = f.k();
        let expect = k * (n - k) - affine_length(&f) + 1;
        ensure!(
            g.faces().len() == expect,
            "{f}: {} faces, expected {expect}",
            g.faces().len()
        );
        cells.insert(f.window().to_vec());
    }
    Ok(format!(
        "3 examples; 200 random reduced graphs over {} cells satisfy the face count",
        cells.len()
    ))
}

fn positroid_bijections() -> Check {
    let mut total = 0;
    for n in 1..=6usize {
        let mut count = 0;
        for k in 0..=n {
            for f in BoundedAffinePerm::all(k, n) {
                count += 1;
                ensure!(
                    CyclicRankMatrix::of(&f).to_affine().ok() == Some(f.clone()),
                    "rank matrix round trip {f}"
                );
                ensure!(
                    f_from_necklace(&necklace_from_f(&f)).ok() == Some(f.clone()),
                    "necklace round trip {f}"
                );
                ensure!(
                    f_from_decorated(&decorated_from_f(&f), k).ok() == Some(f.clone()),
                    "decorated round trip {f}"
                );
            }
        }
        // Decorated permutations: choose the fixed points, derange the rest,
        // two colors per fixed point.
        let mut derange = vec![1i64];
        for m in 1..=n {
            derange.push(if m == 1 {
                0
            } else {
                (m as i64 - 1) * (derange[m - 1] + derange[m - 2])
            });
        }
        let binom =
            |a: usize, b: usize| (0..b).fold(1i64, |acc, i| acc * (a - i) as i64 / (i as i64 + 1));
        let expect: i64 = (0..=n)
            .map(|j| binom(n, j) * derange[n - j] * (1 << j))
            .sum();
        ensure!(
            count as i64 == expect,
            "n = {n}: {count} bounded affine permutations, expected {expect}"
        );
        total += count;
    }
    let f: BoundedAffinePerm = "[1,4,7,6]".parse().unwrap();
    let r = CyclicRankMatrix::of(&f);
    // Rows j = 1..8 from the top, columns i = 1..8; entries shown for i <= j + 1.
    let table: [&[i64]; 8] = [
        &[0, 0],
        &[1, 1, 0],
        &[2, 2, 1, 0],
        &[2, 2, 2, 1, 0],
        &[2, 2, 2, 1, 0, 0],
        &[2, 2, 2, 1, 1, 1, 0],
        &[2, 2, 2, 2, 2, 2, 1, 0],
        &[2, 2, 2, 2, 2, 2, 2, 1],
    ];
    for (j, row) in table.iter().enumerate() {
        for (i, &v) in row.iter().enumerate() {
            let got = r.get(i as i64 + 1, j as i64 + 1);
            ensure!(got == v, "r_({},{}) = {got}, table says {v}", i + 1, j + 1);
        }
    }
    ensure!(
        necklace_from_f(&f).sets() == [vec![2, 3], vec![2, 3], vec![3, 4], vec![3, 4]],
        "necklace of [1,4,7,6]"
    );
    Ok(format!(
        "{total} bounded affine permutations round-trip; 8x8 table and necklace exact"
    ))
}

fn r_polynomials() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let primes = [Prime::new(2).unwrap(), Prime::new(3).unwrap()];
    let mut pairs: Vec<(Perm, Perm)> = Vec::new();
    for w in Perm::all(3) {
        for u in bruhat_interval(&Perm::identity(3), &w) {
            pairs.push((u, w.clone()));
        }
    }
    let s4: Vec<(Perm, Perm)> = Perm::all(4)
        .into_iter()
        .flat_map(|w| {
            bruhat_interval(&Perm::identity(4), &w)
                .into_iter()
                .map(move |u| (u, w.clone()))
        })
        .collect();
    let n3 = pairs.len();
    for _ in 0..50 {
        pairs.push(s4[rng.gen_range(0..s4.len())].clone());
    }
    for (u, w) in &pairs {
        let r = r_polynomial(u, w);
        let d = w.length() - u.length();
        ensure!(r.is_twisted_palindromic(d), "R_{u},{w} not palindromic");
        for word in reduced_words(w).unwrap() {
            ensure!(
                r_polynomial_with_word(&word, u).unwrap() == r,
                "R_{u},{w} depends on the word {word}"
            );
        }
        let word = some_reduced_word(w);
        for p in primes {
            let qv = p.get() as i64;
            let masks: i64 = distinguished_masks(&word, u)
                .iter()
                .map(|m| (qv - 1).pow(m.m_equal() as u32) * qv.pow(m.m_down() as u32))
                .sum();
            let brute = enumerate_open_richardson(u, w, p)
                .map_err(|e| e.to_string())?
                .len() as i64;
            ensure!(
                masks == brute && r.eval(qv) == brute,
                "{u} {w} q={qv}: masks {masks}, R {}, points {brute}",
                r.eval(qv)
            );
        }
    }
    Ok(format!(
        "{n3} intervals in S3 and 50 random in S4 match point counts at q = 2, 3"
    ))
}

fn deodhar_partition() -> Check {
    let word = Word::parse(3, "1 2 1").unwrap();
    let e = Perm::identity(3);
    let masks = distinguished_masks(&word, &e);
    ensure!(masks.len() == 2, "{} distinguished masks", masks.len());
    for qv in [2u64, 3] {
        let p = Prime::new(qv).unwrap();
        let qi = qv as i64;
        let mut sizes: Vec<i64> = Vec::new();
        let mut union = BTreeSet::new();
        for m in &masks {
            let piece = mr_piece_chains(m, p).map_err(|e| e.to_string())?;
            sizes.push(piece.len() as i64);
            for c in piece {
                ensure!(
                    union.insert(flag_key(&c.final_flag())),
                    "pieces overlap at q = {qv}"
                );
            }
        }
        sizes.sort();
        let mut want = vec![(qi - 1).pow(3), (qi - 1) * qi];
        want.sort();
        ensure!(sizes == want, "piece sizes {sizes:?} at q = {qv}");
        let all: BTreeSet<Vec<u64>> = enumerate_open_richardson(&e, &perm("321"), p)
            .unwrap()
            .iter()
            .map(flag_key)
            .collect();
        ensure!(
            union == all,
            "pieces do not cover the open Richardson variety at q = {qv}"
        );
        for w in Perm::all(3) {
            for wd in reduced_words(&w).unwrap() {
                let chart: BTreeSet<Vec<Vec<u64>>> = sweep_bs_chains(&wd, p)
                    .unwrap()
                    .iter()
                    .map(|c| (0..=wd.len()).map(|j| flag_key(&c.flag(j))).collect())
                    .collect();
                let mut covered = BTreeSet::new();
                for u in Perm::all(3) {
                    for m in distinguished_masks(&wd, &u) {
                        for c in mr_piece_chains(&m, p).unwrap() {
                            ensure!(
                                classify_bs_point(&c).unwrap() == m,
                                "{wd}: image of {m} classified elsewhere"
                            );
                            covered.insert(
                                (0..=wd.len())
                                    .map(|j| flag_key(&c.flag(j)))
                                    .collect::<Vec<_>>(),
                            );
                        }
                    }
                }
                ensure!(
                    covered == chart,
                    "{wd}: pieces do not cover the chart at q = {qv}"
                );
            }
        }
    }
    Ok("two pieces of sizes (q-1)^3 and (q-1)q; every S3 chart partitioned at q = 2, 3".into())
}

fn chamber_minors() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for wd in ["1 2 1", "2 1 2"] {
        let word = Word::parse(3, wd).unwrap();
        let mask = positive_mask(&word, &Perm::identity(3)).unwrap();
        ensure!(
            mask.steps().iter().all(|&s| s == Step::Equal),
            "mask for e is not all-equal"
        );
        for _ in 0..20 {
            let t: Vec<Q> = (0..3).map(|_| rand_pos_q(&mut rng)).collect();
            let chain = mr_parametrize(&mask, &t, &()).unwrap();
            let rec = recover_torus_params(&chain, &mask).map_err(|e| e.to_string())?;
            let rec: Vec<Q> = rec.into_iter().map(Option::unwrap).collect();
            ensure!(rec == t, "{wd}: recovered {rec:?} from {t:?}");
        }
    }
    Ok("40 parameter vectors recovered exactly".into())
}

fn standard_monomials() -> Check {
    let part = |s: &str| -> Partition { s.parse().unwrap() };
    let (u, w) = (perm("1324"), perm("4231"));
    ensure!(
        standard_count(&part("2,1,1,0"), &[1, 1, 1, 1], &u, &w) == 2,
        "count at (2,1,1,0)"
    );
    ensure!(
        standard_count(&part("3,2,1,0"), &[2, 1, 2, 1], &u, &w) == 2,
        "count at (3,2,1,0)"
    );
    ensure!(
        minimal_lift(&perm("1324"), &[1, 2, 4]) == Some(perm("1423")),
        "lift 1324 -> 1423"
    );
    ensure!(
        minimal_lift(&perm("1423"), &[3]) == Some(perm("3412")),
        "lift 1423 -> 3412"
    );
    let mut checked = 0;
    for n in 3..=4 {
        let (e, w0) = (Perm::identity(n), Perm::longest(n));
        for size in 1..=6 {
            for shape in Partition::all(size, n) {
                // Every filling by increasing columns; standard iff semistandard.
                let lens: Vec<usize> = shape.conjugate().parts().to_vec();
                let mut fillings: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
                for &len in &lens {
                    let subsets = positroid::affine::k_subsets(n, len);
                    fillings = fillings
                        .into_iter()
                        .flat_map(|f| {
                            subsets
                                .iter()
                                .map(move |s| [f.clone(), vec![s.clone()]].concat())
                        })
                        .collect();
                }
                for cols in fillings {
                    let is_ssyt = Tableau::from_columns(&cols, Orientation::Semistandard).is_ok();
                    ensure!(is_standard_columns(&cols, &e, &w0) == is_ssyt, "{cols:?}");
                    checked += 1;
                }
                for content in compositions(size, n) {
                    let s = standard_count(&shape, &content, &e, &w0);
                    ensure!(s == kostka(&shape, &content), "{shape} {content:?}");
                }
                ensure!(
                    standard_count_total(&shape, n) == ssyt(&shape, n).len(),
                    "{shape}"
                );
            }
        }
    }
    Ok(format!(
        "examples exact; {checked} column fillings classified; Kostka agreement"
    ))
}

fn standard_count_total(shape: &Partition, n: usize) -> usize {
    let (e, w0) = (Perm::identity(n), Perm::longest(n));
    compositions(shape.size(), n)
        .iter()
        .map(|c| standard_count(shape, c, &e, &w0))
        .sum()
}

fn gt_criteria() -> Check {
    let g = |s: &str| -> GtPattern { s.parse().unwrap() };
    let (u, w) = (perm("1324"), perm("4231"));
    let pats = enumerate_gt(&[3, 2, 1, 0], Some(&row_sums_for_weight(&[2, 1, 2, 1]))).unwrap();
    ensure!(pats.len() == 4, "{} patterns of weight 2121", pats.len());
    let pass: Vec<&GtPattern> = pats
        .iter()
        .filter(|x| nonzero_in_richardson_strict(x, &u, &w).unwrap())
        .collect();
    ensure!(pass.len() == 2, "{} patterns pass", pass.len());
    let third = g("3210/310/21/1");
    let fourth = g("3210/220/21/1");
    ensure!(
        !nonzero_in_schubert(&third, &u).unwrap() && nonzero_in_opposite(&third, &w).unwrap(),
        "third pattern"
    );
    ensure!(
        nonzero_in_schubert(&fourth, &u).unwrap() && !nonzero_in_opposite(&fourth, &w).unwrap(),
        "fourth pattern"
    );
    // Documented limitation: with a weak top row both one-sided criteria pass
    // on all three patterns though the weight space has dimension two.
    let weak = enumerate_gt(&[2, 1, 1, 0], Some(&row_sums_for_weight(&[1, 1, 1, 1]))).unwrap();
    let weak_pass = weak
        .iter()
        .filter(|x| nonzero_in_schubert(x, &u).unwrap() && nonzero_in_opposite(x, &w).unwrap())
        .count();
    ensure!(
        weak.len() == 3 && weak_pass == 3,
        "weak-λ regression changed: {weak_pass}/{}",
        weak.len()
    );
    ensure!(
        standard_count(&"2,1,1".parse().unwrap(), &[1, 1, 1, 1], &u, &w) == 2,
        "weak-λ true dimension"
    );
    let lam: Partition = "3,2,1".parse().unwrap();
    let weights = compositions(6, 4);
    let by_weight: Vec<Vec<GtPattern>> = weights
        .iter()
        .map(|a| enumerate_gt(&[3, 2, 1, 0], Some(&row_sums_for_weight(a))).unwrap())
        .collect();
    let mut pairs = 0;
    for u in Perm::all(4) {
        for w in bruhat_interval(&u, &Perm::longest(4)) {
            pairs += 1;
            for (a, pats) in weights.iter().zip(&by_weight) {
                let gt = pats
                    .iter()
                    .filter(|x| nonzero_in_richardson_strict(x, &u, &w).unwrap())
                    .count();
                let smt = standard_count(&lam, a, &u, &w);
                ensure!(gt == smt, "{u} {w} weight {a:?}: GT {gt}, SMT {smt}");
            }
        }
    }
    Ok(format!("2121 examples exact; weak-λ limitation 3 vs 2 asserted; {pairs} pairs in S4 agree weight by weight"))
}

fn positivity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut cells: Vec<(Perm, Perm)> = Vec::new();
    for w in Perm::all(3) {
        for u in bruhat_interval(&Perm::identity(3), &w) {
            cells.push((u, w.clone()));
        }
    }
    let s4: Vec<(Perm, Perm)> = Perm::all(4)
        .into_iter()
        .flat_map(|w| {
            bruhat_interval(&Perm::identity(4), &w)
                .into_iter()
                .map(move |u| (u, w.clone()))
        })
        .collect();
    for _ in 0..20 {
        cells.push(s4[rng.gen_range(0..s4.len())].clone());
    }
    let mut points = 0;
    for (u, w) in &cells {
        let n = u.n();
        let word = some_reduced_word(w);
        let mask = positive_mask(&word, u).unwrap();
        let support: Vec<BTreeSet<Vec<usize>>> = (0..=n)
            .map(|k| positive_pluecker_support(u, w, k))
            .collect();
        for _ in 0..100 {
            let t: Vec<Q> = (0..word.len()).map(|_| rand_pos_q(&mut rng)).collect();
            let g = mr_parametrize(&mask, &t, &())
                .unwrap()
                .final_matrix()
                .clone();
            for k in 1..=n {
                for j in positroid::affine::k_subsets(n, k) {
                    let d = flag_minor(&g, &j);
                    let positive = d > qi(0);
                    ensure!(d >= qi(0), "{u} {w}: Δ_{j:?} < 0");
                    ensure!(
                        positive == support[k].contains(&j),
                        "{u} {w}: Δ_{j:?} positivity mismatch"
                    );
                }
            }
            points += 1;
        }
    }
    let mut polys = 0;
    for n in 2..=4 {
        for w in Perm::all(n).into_iter().filter(|w| w.length() <= 4) {
            let word = some_reduced_word(&w);
            for u in bruhat_interval(&Perm::identity(n), &w) {
                let m = positive_mask(&word, &u).unwrap();
                for list in prefix_minor_polynomials(&m).unwrap() {
                    for (j, p) in list {
                        ensure!(p.has_nonnegative_coefficients(), "{w} {u} Δ_{j:?} = {p}");
                        polys += 1;
                    }
                }
            }
        }
    }
    let mut subspaces = 0;
    while subspaces < 100 {
        let n = rng.gen_range(2..=6);
        let lol: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
        let bridges: Vec<usize> = (0..rng.gen_range(0..=6))
            .map(|_| rng.gen_range(1..=n))
            .collect();
        let g = bridge_graph(n, &lol, &bridges).unwrap();
        if g.k() == 0 || g.k() == n {
            continue;
        }
        let wts: Vec<Q> = (0..g.num_edges()).map(|_| rand_pos_q(&mut rng)).collect();
        let d: PlueckerVector<Q> = g
            .boundary_measurement(&EdgeWeights::new(&g, wts, &()).unwrap())
            .unwrap();
        let v = pluecker_to_matrix(&d).map_err(|e| e.to_string())?;
        ensure!(
            is_tnn_subspace(&v),
            "measurement is not totally nonnegative"
        );
        let flag = tnn_completion(&v).map_err(|e| e.to_string())?;
        ensure!(is_tnn_flag(&flag), "completion is not totally nonnegative");
        ensure!(
            pluecker(&flag.subspace(g.k())).projectively_equal(&d),
            "completion misses the subspace"
        );
        subspaces += 1;
    }
    let v3 = Matrix::from_i64_rows(
        &[vec![1, 0, 0], vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]],
        &(),
    )
    .unwrap();
    let blocked = Matrix::from_i64_rows(&[vec![2], vec![1], vec![0], vec![1]], &()).unwrap();
    ensure!(
        find_tnn_intermediate(&blocked, &v3, 50).is_none(),
        "obstructed partial flag was completed"
    );
    let open = Matrix::from_i64_rows(&[vec![1], vec![2], vec![1], vec![0]], &()).unwrap();
    ensure!(
        find_tnn_intermediate(&open, &v3, 50).is_some(),
        "unobstructed partial flag was not completed"
    );
    Ok(format!(
        "{points} torus points over {} cells; {polys} prefix minors nonnegative; 100 completions; obstruction found",
        cells.len()
    ))
}

fn cohomology_classes() -> Check {
    let part = |s: &str| -> Partition { s.parse().unwrap() };
    let cm =
        |items: &[(&str, i64)]| -> CoeffMap { items.iter().map(|&(l, c)| (part(l), c)).collect() };
    let class = |s: &str| positroid_class(&s.parse().unwrap()).unwrap();
    ensure!(
        class("[4,3,6,5]") == cm(&[("1,1", 1), ("2", 1)]),
        "class of [4,3,6,5]"
    );
    ensure!(class("[3,4,6,5]") == cm(&[("1", 1)]), "class of [3,4,6,5]");
    ensure!(
        class("[1,6,3,8]") == cm(&[("2,2", 1)]),
        "class of [1,6,3,8]"
    );
    let g: AffinePerm = "[-1,4,1,6]".parse().unwrap();
    let st = affine_stanley(&g, None).unwrap();
    ensure!(
        st.monomial_coeffs() == &cm(&[("1,1,1,1", 4), ("2,1,1", 2), ("2,2", 1)]),
        "monomial expansion {st}"
    );
    ensure!(
        st.schur_expand() == cm(&[("2,2", 1), ("2,1,1", 1), ("1,1,1,1", -1)]),
        "Schur expansion"
    );
    let bs = bergeron_sottile(&perm("2143"), &perm("3412"), 2, None)
        .unwrap()
        .schur_expand();
    ensure!(
        bs == cm(&[("2", 1), ("1,1", 1)]),
        "BS polynomial of [2143, 3412]"
    );
    let bs = bergeron_sottile(&perm("2134"), &perm("3412"), 2, None)
        .unwrap()
        .schur_expand();
    ensure!(bs == cm(&[("2,1", 1)]), "BS polynomial of [2134, 3412]");
    let all = BoundedAffinePerm::all(2, 4);
    for f in &all {
        ensure!(duality_check(f).unwrap(), "duality fails at {f}");
    }
    Ok(format!(
        "examples exact; duality holds on all {} cells of G(2,4)",
        all.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("plabic boundary measurement", 1, basic_g24_measurement),
        ("hexagon pipeline", 1, hexagon_pipeline),
        ("reducedness and face counts", 30, reducedness),
        ("positroid bijections", 60, positroid_bijections),
        ("R-polynomials", 300, r_polynomials),
        ("Deodhar partition", 30, deodhar_partition),
        ("chamber minors", 1, chamber_minors),
        ("standard monomial theory", 60, standard_monomials),
        ("Gelfand-Tsetlin criteria", 120, gt_criteria),
        ("positivity", 300, positivity),
        ("cohomology classes", 120, cohomology_classes),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let in_time = took <= Duration::from_secs(*limit);
        let (verdict, detail) = match (&outcome, in_time) {
            (Ok(msg), true) => ("PASS", msg.clone()),
            (Ok(msg), false) => ("FAIL", format!("{msg}; over the time limit")),
            (Err(msg), _) => ("FAIL", msg.clone()),
        };
        if verdict == "FAIL" {
            failed += 1;
        }
        println!(
            "criterion {:>2} {verdict} {name} ({:.2}s, limit {limit}s): {detail}",
            i + 1,
            took.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
