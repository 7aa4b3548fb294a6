//! Benchmark fixtures and groups for the positroid library. The groups live
//! here so that `tests/` can check the fixtures they run on.

use std::hint::black_box;

use criterion::Criterion;
use positroid::deodhar::{enumerate_open_richardson, r_polynomial};
use positroid::linalg::pluecker_to_matrix;
use positroid::plabic::{twist, word_ladder};
use positroid::symfunc::{affine_stanley, positroid_class};
use positroid::tableaux::standard_count;
use positroid::{BoundedAffinePerm, EdgeWeights, Partition, Perm, PlabicGraph, Prime, Word};

/// The reduced ladder graph of the longest element of `S_m`, built from its
/// standard reduced word `(1)(2 1)(3 2 1)...`.
pub fn longest_ladder(m: usize) -> PlabicGraph {
    let letters: Vec<usize> = (1..m).flat_map(|j| (1..=j).rev()).collect();
    word_ladder(&Word::new(m, letters).expect("valid word"))
}

/// Weights `1, 2, 3, ...` in edge order.
pub fn counting_weights(g: &PlabicGraph) -> EdgeWeights<positroid::Q> {
    let vals = (1..=g.num_edges() as i64)
        .map(positroid::scalar::qi)
        .collect();
    EdgeWeights::new(g, vals, &()).expect("nonzero weights")
}

pub fn benchmarks(c: &mut Criterion) {
    let ladder = longest_ladder(4);
    let weights = counting_weights(&ladder);
    c.bench_function("plabic/trip_permutation/ladder_s4", |b| {
        b.iter(|| black_box(&ladder).trip_permutation().unwrap())
    });
    c.bench_function("plabic/boundary_measurement/ladder_s4", |b| {
        b.iter(|| {
            black_box(&ladder)
                .boundary_measurement(black_box(&weights))
                .unwrap()
        })
    });
    let m = pluecker_to_matrix(&ladder.boundary_measurement(&weights).unwrap()).unwrap();
    c.bench_function("plabic/twist/ladder_s4", |b| {
        b.iter(|| twist(black_box(&m)).unwrap())
    });

    let (e5, w5) = (Perm::identity(5), Perm::longest(5));
    c.bench_function("deodhar/r_polynomial/e_w0_s5", |b| {
        b.iter(|| r_polynomial(black_box(&e5), black_box(&w5)))
    });
    let p2 = Prime::new(2).unwrap();
    let (e3, w3) = (Perm::identity(3), Perm::longest(3));
    c.bench_function("deodhar/open_richardson_points/s3_q2", |b| {
        b.iter(|| enumerate_open_richardson(black_box(&e3), black_box(&w3), p2).unwrap())
    });

    c.bench_function("affine/bounded_all/g36", |b| {
        b.iter(|| BoundedAffinePerm::all(3, 6))
    });
    let f: BoundedAffinePerm = "[1,6,3,8]".parse().unwrap();
    c.bench_function("symfunc/positroid_class/1638", |b| {
        b.iter(|| positroid_class(black_box(&f)).unwrap())
    });
    let g: positroid::AffinePerm = "[-1,4,1,6]".parse().unwrap();
    c.bench_function("symfunc/affine_stanley/-1416", |b| {
        b.iter(|| affine_stanley(black_box(&g), None).unwrap())
    });

    let lambda: Partition = "3,2,1,0".parse().unwrap();
    let (u, w) = (
        "1324".parse::<Perm>().unwrap(),
        "4231".parse::<Perm>().unwrap(),
    );
    c.bench_function("tableaux/standard_count/3210", |b| {
        b.iter(|| standard_count(black_box(&lambda), &[2, 1, 2, 1], &u, &w))
    });
}
