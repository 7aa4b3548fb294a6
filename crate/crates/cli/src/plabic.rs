//! `plabic`: inspect a plabic graph file.

use std::path::Path;

use anyhow::{anyhow, Context, Result};
use positroid::affine::{decorated_from_f, necklace_from_f, positroid_dim};
use positroid::linalg::{on_grassmannian, pluecker_to_matrix};
use positroid::plabic::twist;
use positroid::scalar::q_to_fp;
use positroid::{EdgeWeights, PlabicGraph, Q};

use crate::report::Report;
use crate::FieldSel;

#[derive(Clone, Copy)]
pub enum Action {
    Check,
    Measure,
    Trips,
    Labels,
    Twist,
}

pub fn load(path: &Path) -> Result<(PlabicGraph, EdgeWeights<Q>)> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    PlabicGraph::parse(&text).with_context(|| format!("in {}", path.display()))
}

fn subset(s: &[usize]) -> String {
    let sep = if s.iter().any(|&x| x > 9) { "," } else { "" };
    s.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn run(action: Action, path: &Path, field: FieldSel, report: &mut Report) -> Result<()> {
    let (g, w) = load(path)?;
    report.spend(g.num_edges() as u64)?;
    report.info(format!(
        "n {} k {} vertices {} edges {} faces {}",
        g.n(),
        g.k(),
        g.num_vertices(),
        g.num_edges(),
        g.faces().len()
    ));
    let pre = g.preprocess();
    let pg = &pre.graph;
    match action {
        Action::Check => {
            report.info(format!("conforming boundary {}", g.is_conforming()));
            let reduced = pg.is_reduced()?;
            if report.check("plabic.reduced", reduced) {
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
            }
        }
        Action::Measure => match field {
            FieldSel::Q => {
                let d = g.boundary_measurement(&w)?;
                for (i, v) in d.iter() {
                    report.info(format!("D{} = {v}", subset(i)));
                }
                report.check("plabic.measurement.grassmannian", on_grassmannian(&d));
            }
            FieldSel::P(p) => {
                let vals = w
                    .values()
                    .iter()
                    .map(|x| {
                        q_to_fp(x, p)
                            .ok_or_else(|| anyhow!("weight {x} has no image modulo {}", p.get()))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let d = g.boundary_measurement(&EdgeWeights::new(&g, vals, &p)?)?;
                for (i, v) in d.iter() {
                    report.info(format!("D{} = {v}", subset(i)));
                }
                report.check("plabic.measurement.grassmannian", on_grassmannian(&d));
            }
        },
        Action::Trips => {
            for t in pg.trips()? {
                match (t.start, t.end) {
                    (Some(s), Some(e)) => report.info(format!("trip {s} -> {e}")),
                    _ => report.info(format!("closed trip of length {}", t.darts.len())),
                }
            }
            let f = pg.trip_permutation()?;
            report.info(format!("trip permutation {f}"));
            report.info(format!("decorated {}", decorated_from_f(&f)));
            report.info(format!("necklace {}", necklace_from_f(&f)));
        }
        Action::Labels => {
            let labels = pg.face_labels()?;
            for l in labels.labels() {
                report.info(format!("face {}", subset(l)));
            }
            report.info(format!("necklace {}", labels.necklace()));
            report.check("plabic.face-labels.consistent", labels.is_consistent());
        }
        Action::Twist => {
            let d = g.boundary_measurement(&w)?;
            let m = pluecker_to_matrix(&d)?;
            report.info(format!("matrix {m}"));
            report.info(format!("twist {}", twist(&m)?));
            for (l, v) in pg.muller_speyer_composite(&pre.lift_weights(&w))? {
                report.info(format!("composite D{} = {v}", subset(&l)));
            }
        }
    }
    Ok(())
}
