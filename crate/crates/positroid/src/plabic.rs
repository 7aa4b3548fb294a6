//! Plabic graphs as combinatorial embeddings in a disc: perfect matchings and
//! boundary measurements, zig-zag paths (trips), reducedness, face labels,
//! gauge fixing, the twist, and the composite of boundary measurement, twist
//! and face-label Plücker coordinates.
//!
//! Embeddings are rotation systems. Every vertex lists its incident edges in
//! clockwise order; boundary vertices are numbered `1..=n` clockwise around
//! the disc, and at a boundary vertex `i` the list starts with the edge
//! nearest to boundary vertex `i + 1`. Faces are traced with the boundary
//! circle added as arcs between consecutive boundary vertices.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::affine::{necklace_from_f, positroid_dim, BoundedAffinePerm, GrassmannNecklace};
use crate::error::{Error, Result};
use crate::linalg::{pluecker_to_matrix, Matrix, PlueckerVector};
use crate::perm::Word;
use crate::scalar::{parse_q, Field, Ring, Q};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Color {
    Black,
    White,
}

impl Color {
    fn parse(s: &str) -> Result<Color> {
        match s.to_ascii_lowercase().as_str() {
            "b" | "black" => Ok(Color::Black),
            "w" | "white" => Ok(Color::White),
            _ => Err(Error::Parse(format!("unknown color `{s}`"))),
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Color::Black => "black",
            Color::White => "white",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Vertex {
    id: String,
    color: Color,
    boundary: Option<usize>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct Edge {
    id: String,
    ends: [usize; 2],
}

/// A bipartite graph embedded in a disc, given combinatorially.
///
/// Half-edge `h` lies on edge `h / 2` at vertex `ends[h % 2]`; its twin is
/// `h ^ 1`. A half-edge doubles as the dart leaving its vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PlabicGraph {
    n: usize,
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    rotation: Vec<Vec<usize>>,
    boundary: Vec<usize>,
    faces: Vec<Face>,
    face_of_dart: Vec<usize>,
}

/// A face of the disc, recorded by the darts that have it on their left.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    darts: Vec<usize>,
    arcs: Vec<usize>,
}

impl Face {
    /// Half-edges of the graph whose dart has this face on its left, in
    /// boundary-walk order.
    pub fn darts(&self) -> &[usize] {
        &self.darts
    }

    /// The `i` such that this face borders the boundary arc from `i - 1` to
    /// `i`.
    pub fn arcs(&self) -> &[usize] {
        &self.arcs
    }
}

/// A directed traversal of one edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Dart {
    pub edge: usize,
    pub from: usize,
    pub to: usize,
}

/// A zig-zag path: from boundary to boundary, or a closed loop.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Trip {
    pub darts: Vec<Dart>,
    pub start: Option<usize>,
    pub end: Option<usize>,
}

impl Trip {
    pub fn is_closed(&self) -> bool {
        self.start.is_none()
    }
}

/// Edge weights indexed by edge position; all nonzero.
#[derive(Clone, PartialEq, Debug)]
pub struct EdgeWeights<R: Ring> {
    values: Vec<R>,
    ctx: R::Ctx,
}

impl<R: Ring> EdgeWeights<R> {
    pub fn new(g: &PlabicGraph, values: Vec<R>, ctx: &R::Ctx) -> Result<EdgeWeights<R>> {
        if values.len() != g.edges.len() {
            return Err(Error::Mismatch(format!(
                "{} weights for {} edges",
                values.len(),
                g.edges.len()
            )));
        }
        if let Some(e) = values.iter().position(Ring::is_zero) {
            return Err(Error::Invalid(format!(
                "edge `{}` has weight zero",
                g.edges[e].id
            )));
        }
        Ok(EdgeWeights {
            values,
            ctx: ctx.clone(),
        })
    }

    /// All weights equal to one.
    pub fn ones(g: &PlabicGraph, ctx: &R::Ctx) -> EdgeWeights<R> {
        EdgeWeights {
            values: vec![R::one(ctx); g.edges.len()],
            ctx: ctx.clone(),
        }
    }

    pub fn get(&self, e: usize) -> &R {
        &self.values[e]
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }
}

/// The graph after boundary normalization, with the origin of every edge.
#[derive(Clone, Debug)]
pub struct Preprocessed {
    pub graph: PlabicGraph,
    /// `Some(e)` for an edge of the input graph, `None` for an added edge.
    pub origin: Vec<Option<usize>>,
}

impl Preprocessed {
    /// Carries weights across; added edges get weight one.
    pub fn lift_weights<R: Ring>(&self, w: &EdgeWeights<R>) -> EdgeWeights<R> {
        EdgeWeights {
            values: self
                .origin
                .iter()
                .map(|o| o.map_or_else(|| R::one(&w.ctx), |e| w.values[e].clone()))
                .collect(),
            ctx: w.ctx.clone(),
        }
    }
}

impl PlabicGraph {
    /// Builds and validates a graph. `vertices` are `(id, color, boundary
    /// position)`, `edges` are `(id, end, end)`, and `rotations` give the
    /// clockwise edge order at each vertex. Rotations may be omitted where
    /// the order carries no information: degree at most one, or interior
    /// vertices of degree two.
    pub fn new(
        n: usize,
        vertices: Vec<(String, Color, Option<usize>)>,
        edges: Vec<(String, String, String)>,
        rotations: Vec<(String, Vec<String>)>,
    ) -> Result<PlabicGraph> {
        if n == 0 {
            return Err(Error::Invalid(
                "a plabic graph needs at least one boundary vertex".into(),
            ));
        }
        let mut vindex = HashMap::new();
        let mut verts = Vec::with_capacity(vertices.len());
        let mut boundary = vec![usize::MAX; n];
        for (id, color, pos) in vertices {
            if vindex.insert(id.clone(), verts.len()).is_some() {
                return Err(Error::Invalid(format!("duplicate vertex `{id}`")));
            }
            if let Some(p) = pos {
                if p == 0 || p > n || boundary[p - 1] != usize::MAX {
                    return Err(Error::Invalid(format!(
                        "bad or repeated boundary position {p}"
                    )));
                }
                boundary[p - 1] = verts.len();
            }
            verts.push(Vertex {
                id,
                color,
                boundary: pos,
            });
        }
        if let Some(p) = boundary.iter().position(|&v| v == usize::MAX) {
            return Err(Error::Invalid(format!(
                "no vertex at boundary position {}",
                p + 1
            )));
        }
        let mut eindex = HashMap::new();
        let mut es = Vec::with_capacity(edges.len());
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
        for (id, a, b) in edges {
            let lookup = |x: &str| {
                vindex.get(x).copied().ok_or_else(|| {
                    Error::Invalid(format!("edge `{id}` names unknown vertex `{x}`"))
                })
            };
            let (a, b) = (lookup(&a)?, lookup(&b)?);
            if verts[a].color == verts[b].color {
                return Err(Error::Invalid(format!(
                    "edge `{id}` joins two vertices of the same color"
                )));
            }
            if eindex.insert(id.clone(), es.len()).is_some() {
                return Err(Error::Invalid(format!("duplicate edge `{id}`")));
            }
            let e = es.len();
            incident[a].push(2 * e);
            incident[b].push(2 * e + 1);
            es.push(Edge { id, ends: [a, b] });
        }
        let mut rotation: Vec<Option<Vec<usize>>> = vec![None; verts.len()];
        for (vid, order) in rotations {
            let v = *vindex
                .get(&vid)
                .ok_or_else(|| Error::Invalid(format!("rotation for unknown vertex `{vid}`")))?;
            let mut halves = Vec::with_capacity(order.len());
            for eid in &order {
                let e = *eindex.get(eid).ok_or_else(|| {
                    Error::Invalid(format!("rotation at `{vid}` names unknown edge `{eid}`"))
                })?;
                let h = if es[e].ends[0] == v { 2 * e } else { 2 * e + 1 };
                if es[h / 2].ends[h % 2] != v {
                    return Err(Error::Invalid(format!(
                        "edge `{eid}` is not incident to `{vid}`"
                    )));
                }
                halves.push(h);
            }
            let mut a = halves.clone();
            let mut b = incident[v].clone();
            a.sort_unstable();
            b.sort_unstable();
            if a != b {
                return Err(Error::Invalid(format!(
                    "rotation at `{vid}` must list each incident edge once"
                )));
            }
            rotation[v] = Some(halves);
        }
        let rotation = rotation
            .into_iter()
            .enumerate()
            .map(|(v, r)| match r {
                Some(r) => Ok(r),
                None if incident[v].len() <= 1
                    || (incident[v].len() == 2 && verts[v].boundary.is_none()) =>
                {
                    Ok(incident[v].clone())
                }
                None => Err(Error::Invalid(format!(
                    "vertex `{}` needs a rotation",
                    verts[v].id
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        let mut g = PlabicGraph {
            n,
            vertices: verts,
            edges: es,
            rotation,
            boundary,
            faces: Vec::new(),
            face_of_dart: Vec::new(),
        };
        g.trace_faces()?;
        if g.k_signed() < 0 || g.k_signed() > n as i64 {
            return Err(Error::Invalid(format!(
                "k = {} is out of range",
                g.k_signed()
            )));
        }
        Ok(g)
    }

    /// Parses the text format: a header `n k`, then lines `V <id> <color>`,
    /// `B <id> <position>`, `E <id> <v1> <v2> [weight]` and
    /// `R <vertex> <edge ids in clockwise order>`. `#` starts a comment.
    pub fn parse(text: &str) -> Result<(PlabicGraph, EdgeWeights<Q>)> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty plabic file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| Error::Parse(format!("bad header `{header}`")))
            })
            .collect::<Result<_>>()?;
        let [n, k] = nums[..] else {
            return Err(Error::Parse(format!(
                "header must be `n k`, got `{header}`"
            )));
        };
        let mut vertices: Vec<(String, Color, Option<usize>)> = Vec::new();
        let mut edges = Vec::new();
        let mut weights = Vec::new();
        let mut rotations = Vec::new();
        for line in lines {
            let t: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("bad line `{line}`"));
            match t[0] {
                "V" if t.len() == 3 => vertices.push((t[1].to_string(), Color::parse(t[2])?, None)),
                "B" if t.len() == 3 => {
                    let pos: usize = t[2].parse().map_err(|_| bad())?;
                    let v = vertices
                        .iter_mut()
                        .find(|v| v.0 == t[1])
                        .ok_or_else(|| Error::Parse(format!("`B {}` before its `V` line", t[1])))?;
                    v.2 = Some(pos);
                }
                "E" if t.len() == 4 || t.len() == 5 => {
                    edges.push((t[1].to_string(), t[2].to_string(), t[3].to_string()));
                    weights.push(match t.get(4) {
                        Some(w) => parse_q(w)?,
                        None => Q::from_integer(1.into()),
                    });
                }
                "R" if t.len() >= 2 => {
                    rotations.push((
                        t[1].to_string(),
                        t[2..].iter().map(|s| s.to_string()).collect(),
                    ));
                }
                _ => return Err(bad()),
            }
        }
        let g = PlabicGraph::new(n, vertices, edges, rotations)?;
        if g.k() != k {
            return Err(Error::Invalid(format!(
                "header says k = {k} but the graph has k = {}",
                g.k()
            )));
        }
        let w = EdgeWeights::new(&g, weights, &())?;
        Ok((g, w))
    }

    /// Serializes to the text format read by [`PlabicGraph::parse`].
    pub fn to_text(&self, weights: Option<&EdgeWeights<Q>>) -> String {
        let mut out = format!("{} {}\n", self.n, self.k());
        for v in &self.vertices {
            out += &format!("V {} {}\n", v.id, v.color);
        }
        for v in &self.vertices {
            if let Some(p) = v.boundary {
                out += &format!("B {} {p}\n", v.id);
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            out += &format!(
                "E {} {} {}",
                edge.id, self.vertices[edge.ends[0]].id, self.vertices[edge.ends[1]].id
            );
            if let Some(w) = weights {
                out += &format!(" {}", w.values[e]);
            }
            out.push('\n');
        }
        for (v, rot) in self.rotation.iter().enumerate() {
            if rot.len() > 2 || (rot.len() == 2 && self.vertices[v].boundary.is_some()) {
                let ids: Vec<&str> = rot.iter().map(|&h| self.edges[h / 2].id.as_str()).collect();
                out += &format!("R {} {}\n", self.vertices[v].id, ids.join(" "));
            }
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn k_signed(&self) -> i64 {
        let mut k = 0i64;
        for v in &self.vertices {
            match (v.color, v.boundary) {
                (Color::White, None) => k += 1,
                (Color::Black, None) => k -= 1,
                (Color::White, Some(_)) => k += 1,
                (Color::Black, Some(_)) => {}
            }
        }
        k
    }

    /// `k = #white interior - #black interior + #white boundary`.
    pub fn k(&self) -> usize {
        self.k_signed() as usize
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_id(&self, v: usize) -> &str {
        &self.vertices[v].id
    }

    pub fn edge_id(&self, e: usize) -> &str {
        &self.edges[e].id
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn color(&self, v: usize) -> Color {
        self.vertices[v].color
    }

    /// Boundary position of `v`, if it is a boundary vertex.
    pub fn boundary_position(&self, v: usize) -> Option<usize> {
        self.vertices[v].boundary
    }

    /// The vertex at boundary position `i`.
    pub fn boundary_vertex(&self, i: usize) -> usize {
        self.boundary[i - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rotation[v].len()
    }

    pub fn edge_ends(&self, e: usize) -> [usize; 2] {
        self.edges[e].ends
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    /// The face on the left of the dart along half-edge `h`.
    pub fn face_left_of(&self, h: usize) -> usize {
        self.face_of_dart[h]
    }

    fn vertex_of(&self, h: usize) -> usize {
        self.edges[h / 2].ends[h % 2]
    }

    fn dart(&self, h: usize) -> Dart {
        Dart {
            edge: h / 2,
            from: self.vertex_of(h),
            to: self.vertex_of(h ^ 1),
        }
    }

    /// Traces faces of the disc and checks the Euler count. Arc half-edges
    /// are numbered after the graph's: arc `a` runs from boundary position
    /// `a + 1` (side 0) to position `a + 2` (side 1), cyclically.
    fn trace_faces(&mut self) -> Result<()> {
        let n = self.n;
        let ge = 2 * self.edges.len();
        let total = ge + 2 * n;
        let vertex_of = |h: usize| -> usize {
            if h < ge {
                self.edges[h / 2].ends[h % 2]
            } else {
                let a = (h - ge) / 2;
                let pos = if h % 2 == 0 { a } else { (a + 1) % n };
                self.boundary[pos]
            }
        };
        let mut rot = self.rotation.clone();
        for i in 0..n {
            let v = self.boundary[i];
            let incoming_arc = (i + n - 1) % n;
            rot[v].insert(0, ge + 2 * i);
            rot[v].push(ge + 2 * incoming_arc + 1);
        }
        let mut slot = vec![(0usize, 0usize); total];
        for (v, r) in rot.iter().enumerate() {
            for (p, &h) in r.iter().enumerate() {
                slot[h] = (v, p);
            }
        }
        let next = |h: usize| -> usize {
            let (v, p) = slot[h ^ 1];
            rot[v][(p + 1) % rot[v].len()]
        };

        // Connectivity of graph plus circle.
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([self.boundary[0]]);
        seen[self.boundary[0]] = true;
        while let Some(v) = queue.pop_front() {
            for &h in &rot[v] {
                let w = vertex_of(h ^ 1);
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::Invalid(format!(
                "vertex `{}` is not connected to the boundary",
                self.vertices[v].id
            )));
        }

        let mut orbit = vec![usize::MAX; total];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for start in 0..total {
            if orbit[start] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            let mut cyc = Vec::new();
            let mut h = start;
            while orbit[h] == usize::MAX {
                orbit[h] = id;
                cyc.push(h);
                h = next(h);
            }
            orbits.push(cyc);
        }
        let expected = 2 + self.edges.len() + n - self.vertices.len();
        if orbits.len() != expected {
            return Err(Error::Invalid(format!(
                "rotation system is not planar: {} face cycles, Euler count needs {expected}",
                orbits.len()
            )));
        }
        let outer = orbit[ge];
        if orbits[outer].iter().any(|&h| h < ge) {
            return Err(Error::Invalid("an edge runs outside the disc".into()));
        }
        let mut renumber = vec![usize::MAX; orbits.len()];
        let mut faces = Vec::new();
        for (id, cyc) in orbits.into_iter().enumerate() {
            if id == outer {
                continue;
            }
            renumber[id] = faces.len();
            let darts = cyc.iter().copied().filter(|&h| h < ge).collect();
            // The dart from position a + 2 back to a + 1 has the face between
            // them on its left; that face carries the label of a + 2.
            let mut arcs: Vec<usize> = cyc
                .iter()
                .filter(|&&h| h >= ge && h % 2 == 1)
                .map(|&h| ((h - ge) / 2 + 1) % n + 1)
                .collect();
            arcs.sort_unstable();
            faces.push(Face { darts, arcs });
        }
        self.face_of_dart = (0..ge).map(|h| renumber[orbit[h]]).collect();
        self.faces = faces;
        Ok(())
    }

    /// Boundary vertices all black with degree at most one.
    pub fn is_conforming(&self) -> bool {
        self.boundary
            .iter()
            .all(|&v| self.vertices[v].color == Color::Black && self.rotation[v].len() <= 1)
    }

    /// Normalizes the boundary: a white boundary vertex moves inside and gets
    /// a new black boundary pendant; a black boundary vertex of degree at
    /// least two moves inside and gets a pendant path through a new white
    /// vertex. Added edges have weight one under
    /// [`Preprocessed::lift_weights`], and matchings correspond bijectively
    /// with equal weights and boundaries.
    pub fn preprocess(&self) -> Preprocessed {
        let mut vertices: Vec<(String, Color, Option<usize>)> = Vec::new();
        let mut edges: Vec<(String, String, String)> = Vec::new();
        let mut origin = Vec::new();
        let mut rotations = Vec::new();
        let mut used: BTreeSet<String> = self.vertices.iter().map(|v| v.id.clone()).collect();
        used.extend(self.edges.iter().map(|e| e.id.clone()));
        let mut fresh = |base: &str| {
            let mut s = format!("{base}'");
            while used.contains(&s) {
                s.push('\'');
            }
            used.insert(s.clone());
            s
        };
        for e in &self.edges {
            edges.push((
                e.id.clone(),
                self.vertices[e.ends[0]].id.clone(),
                self.vertices[e.ends[1]].id.clone(),
            ));
            origin.push(Some(edges.len() - 1));
        }
        for (v, vert) in self.vertices.iter().enumerate() {
            let mut rot: Vec<String> = self.rotation[v]
                .iter()
                .map(|&h| self.edges[h / 2].id.clone())
                .collect();
            match (vert.boundary, vert.color, rot.len()) {
                (Some(pos), Color::White, _) => {
                    let b = fresh(&vert.id);
                    let e = fresh(&format!("{}-{}", vert.id, b));
                    vertices.push((vert.id.clone(), Color::White, None));
                    vertices.push((b.clone(), Color::Black, Some(pos)));
                    edges.push((e.clone(), vert.id.clone(), b));
                    origin.push(None);
                    rot.push(e);
                }
                (Some(pos), Color::Black, d) if d >= 2 => {
                    let w = fresh(&vert.id);
                    let b = fresh(&w);
                    let e1 = fresh(&format!("{}-{}", vert.id, w));
                    let e2 = fresh(&format!("{w}-{b}"));
                    vertices.push((vert.id.clone(), Color::Black, None));
                    vertices.push((w.clone(), Color::White, None));
                    vertices.push((b.clone(), Color::Black, Some(pos)));
                    edges.push((e1.clone(), vert.id.clone(), w.clone()));
                    edges.push((e2, w, b));
                    origin.push(None);
                    origin.push(None);
                    rot.push(e1);
                }
                _ => vertices.push((vert.id.clone(), vert.color, vert.boundary)),
            }
            rotations.push((vert.id.clone(), rot));
        }
        let graph = PlabicGraph::new(self.n, vertices, edges, rotations)
            .expect("boundary normalization keeps the graph valid");
        Preprocessed { graph, origin }
    }

    fn require_conforming(&self) -> Result<()> {
        if self.is_conforming() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "boundary vertices must be black of degree at most one; preprocess first".into(),
            ))
        }
    }

    /// Next dart of a zig-zag path after `h`, or `None` at the boundary.
    /// White vertices take the sharpest left turn (next clockwise), black
    /// vertices the sharpest right (previous clockwise).
    fn zigzag_next(&self, h: usize) -> Option<usize> {
        let arrive = h ^ 1;
        let v = self.vertex_of(arrive);
        if self.vertices[v].boundary.is_some() {
            return None;
        }
        let rot = &self.rotation[v];
        let p = rot
            .iter()
            .position(|&x| x == arrive)
            .expect("half-edge in rotation");
        let d = rot.len();
        Some(match self.vertices[v].color {
            Color::White => rot[(p + 1) % d],
            Color::Black => rot[(p + d - 1) % d],
        })
    }

    fn trips_raw(&self) -> Vec<(Vec<usize>, Option<usize>, Option<usize>)> {
        let mut used = vec![false; 2 * self.edges.len()];
        let mut out = Vec::new();
        for i in 1..=self.n {
            let v = self.boundary[i - 1];
            let Some(&first) = self.rotation[v].first() else {
                out.push((Vec::new(), Some(i), Some(i)));
                continue;
            };
            let mut path = vec![first];
            used[first] = true;
            let mut h = first;
            while let Some(nh) = self.zigzag_next(h) {
                path.push(nh);
                used[nh] = true;
                h = nh;
            }
            let end = self.vertices[self.vertex_of(h ^ 1)].boundary;
            out.push((path, Some(i), end));
        }
        for start in 0..used.len() {
            if used[start] {
                continue;
            }
            let mut path = Vec::new();
            let mut h = start;
            while !used[h] {
                used[h] = true;
                path.push(h);
                h = self
                    .zigzag_next(h)
                    .expect("closed trips avoid the boundary");
            }
            out.push((path, None, None));
        }
        out
    }

    /// All zig-zag paths: one from each boundary vertex, then closed loops.
    pub fn trips(&self) -> Result<Vec<Trip>> {
        self.require_conforming()?;
        Ok(self
            .trips_raw()
            .into_iter()
            .map(|(hs, start, end)| Trip {
                darts: hs.iter().map(|&h| self.dart(h)).collect(),
                start,
                end,
            })
            .collect())
    }

    /// Postnikov's criterion: no closed trips, no repeated edge on a trip
    /// between distinct endpoints, opposite orders of shared edges on any two
    /// trips, and trips from `i` to itself only at isolated vertices or
    /// lollipops.
    pub fn is_reduced(&self) -> Result<bool> {
        self.require_conforming()?;
        let trips = self.trips_raw();
        let mut positions: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.edges.len()];
        for (t, (hs, start, end)) in trips.iter().enumerate() {
            if start.is_none() {
                return Ok(false);
            }
            if start != end {
                let mut seen = BTreeSet::new();
                if hs.iter().any(|&h| !seen.insert(h / 2)) {
                    return Ok(false);
                }
            } else if let Some(&h) = hs.first() {
                let nb = self.vertex_of(h ^ 1);
                if self.rotation[nb].len() != 1 {
                    return Ok(false);
                }
            }
            for (p, &h) in hs.iter().enumerate() {
                positions[h / 2].push((t, p));
            }
        }
        // Shared edges of two trips must appear in opposite orders.
        let mut shared: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        for occ in &positions {
            for a in 0..occ.len() {
                for b in 0..occ.len() {
                    let ((ta, pa), (tb, pb)) = (occ[a], occ[b]);
                    if ta < tb {
                        shared.entry((ta, tb)).or_default().push((pa, pb));
                    }
                }
            }
        }
        for pairs in shared.values() {
            for x in pairs {
                for y in pairs {
                    if x.0 < y.0 && x.1 < y.1 {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// The bounded affine permutation read off the trips of a reduced graph:
    /// the trip from `i` ends at `f(i) mod n`, with `f(i) = i` at an isolated
    /// boundary vertex and `f(i) = i + n` at a lollipop.
    pub fn trip_permutation(&self) -> Result<BoundedAffinePerm> {
        if !self.is_reduced()? {
            return Err(Error::Precondition(
                "trip permutation is only defined here for reduced graphs".into(),
            ));
        }
        let n = self.n as i64;
        let window = self
            .trips_raw()
            .iter()
            .filter(|t| t.1.is_some())
            .map(|(hs, start, end)| {
                let (i, j) = (
                    start.expect("boundary trip") as i64,
                    end.expect("boundary trip") as i64,
                );
                if i == j {
                    if hs.is_empty() {
                        i
                    } else {
                        i + n
                    }
                } else if j > i {
                    j
                } else {
                    j + n
                }
            })
            .collect();
        BoundedAffinePerm::from_window(window)
    }

    /// Target face labels: `i ∈ I(F)` when `F` lies on the left of the trip
    /// ending at `i`. Checked against the Grassmann necklace on the boundary
    /// faces.
    pub fn face_labels(&self) -> Result<FaceLabeling> {
        let f = self.trip_permutation()?;
        let n = self.n;
        let nf = self.faces.len();
        let trips = self.trips_raw();
        let mut labels: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nf];
        for (hs, start, end) in trips.iter().filter(|t| t.1.is_some()) {
            let (src, i) = (start.expect("boundary trip"), end.expect("boundary trip"));
            let fsrc = f.get(src as i64);
            if fsrc == src as i64 {
                continue;
            }
            if fsrc == (src + n) as i64 {
                for l in labels.iter_mut() {
                    l.insert(i);
                }
                continue;
            }
            let on_trip: BTreeSet<usize> = hs.iter().map(|&h| h / 2).collect();
            let mut side = vec![0i8; nf];
            let mut queue = VecDeque::new();
            for &h in hs {
                for (face, mark) in [
                    (self.face_of_dart[h], 1i8),
                    (self.face_of_dart[h ^ 1], -1i8),
                ] {
                    if side[face] == 0 {
                        side[face] = mark;
                        queue.push_back(face);
                    } else if side[face] != mark {
                        return Err(Error::Invalid(format!(
                            "trip ending at {i} does not separate the faces"
                        )));
                    }
                }
            }
            while let Some(face) = queue.pop_front() {
                for &h in &self.faces[face].darts {
                    if on_trip.contains(&(h / 2)) {
                        continue;
                    }
                    let other = self.face_of_dart[h ^ 1];
                    if side[other] == 0 {
                        side[other] = side[face];
                        queue.push_back(other);
                    } else if side[other] != side[face] {
                        return Err(Error::Invalid(format!(
                            "trip ending at {i} does not separate the faces"
                        )));
                    }
                }
            }
            for (face, &s) in side.iter().enumerate() {
                if s == 0 {
                    return Err(Error::Invalid(format!(
                        "face {face} is unreachable from trip ending at {i}"
                    )));
                }
                if s > 0 {
                    labels[face].insert(i);
                }
            }
        }
        let labels: Vec<Vec<usize>> = labels
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let necklace = necklace_from_f(&f);
        for (face, l) in labels.iter().enumerate() {
            for &i in &self.faces[face].arcs {
                if l.as_slice() != necklace.get(i) {
                    return Err(Error::Invalid(format!(
                        "boundary face at {i} has label {l:?}, necklace says {:?}",
                        necklace.get(i)
                    )));
                }
            }
        }
        Ok(FaceLabeling {
            labels,
            necklace,
            dimension: positroid_dim(&f),
        })
    }

    /// Gauge-fixes weights to one on a spanning forest of the graph with all
    /// boundary vertices identified (boundary vertices are not rescaled).
    /// Edges listed in `preferred` enter the forest first.
    pub fn gauge_fix<F: Field>(
        &self,
        w: &EdgeWeights<F>,
        preferred: &[usize],
    ) -> Result<EdgeWeights<F>> {
        if w.values.len() != self.edges.len() {
            return Err(Error::Mismatch("weights do not match the graph".into()));
        }
        let nv = self.vertices.len();
        let mut parent: Vec<usize> = (0..nv).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let root = self.boundary[0];
        for &b in &self.boundary {
            let rb = find(&mut parent, b);
            parent[rb] = root;
        }
        let mut order: Vec<usize> = preferred
            .iter()
            .copied()
            .filter(|&e| e < self.edges.len())
            .collect();
        order.extend((0..self.edges.len()).filter(|e| !preferred.contains(e)));
        let mut tree: Vec<Vec<(usize, usize)>> = vec![Vec::new(); nv];
        for e in order {
            let [a, b] = self.edges[e].ends;
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra] = rb;
                tree[a].push((e, b));
                tree[b].push((e, a));
            }
        }
        let ctx = w.ctx.clone();
        let mut t: Vec<Option<F>> = vec![None; nv];
        let mut queue = VecDeque::new();
        for &b in &self.boundary {
            t[b] = Some(F::one(&ctx));
            queue.push_back(b);
        }
        loop {
            while let Some(v) = queue.pop_front() {
                let tv = t[v].clone().expect("assigned");
                for &(e, u) in &tree[v] {
                    if t[u].is_none() {
                        let denom = tv.clone() * w.values[e].clone();
                        t[u] = Some(denom.inv().expect("nonzero weights"));
                        queue.push_back(u);
                    }
                }
            }
            match t.iter().position(Option::is_none) {
                Some(v) => {
                    t[v] = Some(F::one(&ctx));
                    queue.push_back(v);
                }
                None => break,
            }
        }
        let values = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let [a, b] = edge.ends;
                t[a].clone().expect("assigned")
                    * t[b].clone().expect("assigned")
                    * w.values[e].clone()
            })
            .collect();
        Ok(EdgeWeights { values, ctx })
    }

    /// Whether two weightings differ by a gauge transformation.
    pub fn gauge_equivalent<F: Field>(
        &self,
        a: &EdgeWeights<F>,
        b: &EdgeWeights<F>,
    ) -> Result<bool> {
        Ok(self.gauge_fix(a, &[])?.values == self.gauge_fix(b, &[])?.values)
    }

    /// Calls `visit` with the edge set of every perfect matching: interior
    /// vertices covered once, boundary vertices at most once.
    pub fn for_each_matching(&self, mut visit: impl FnMut(&[usize])) {
        let mut covered = vec![false; self.vertices.len()];
        let mut chosen = Vec::new();
        self.match_rec(&mut covered, &mut chosen, &mut visit);
    }

    fn match_rec(
        &self,
        covered: &mut [bool],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        // Branch on the uncovered interior vertex with the fewest options.
        let mut best: Option<(usize, usize)> = None;
        for (v, vert) in self.vertices.iter().enumerate() {
            if vert.boundary.is_some() || covered[v] {
                continue;
            }
            let options = self.rotation[v]
                .iter()
                .filter(|&&h| !covered[self.vertex_of(h ^ 1)])
                .count();
            if best.is_none_or(|(_, c)| options < c) {
                best = Some((v, options));
            }
            if options == 0 {
                return;
            }
        }
        let Some((v, _)) = best else {
            visit(chosen);
            return;
        };
        covered[v] = true;
        for &h in &self.rotation[v] {
            let u = self.vertex_of(h ^ 1);
            if covered[u] {
                continue;
            }
            covered[u] = true;
            chosen.push(h / 2);
            self.match_rec(covered, chosen, visit);
            chosen.pop();
            covered[u] = false;
        }
        covered[v] = false;
    }

    /// `∂M`: covered black boundary vertices and uncovered white ones.
    pub fn matching_boundary(&self, matching: &[usize]) -> Vec<usize> {
        let mut covered = vec![false; self.vertices.len()];
        for &e in matching {
            for v in self.edges[e].ends {
                covered[v] = true;
            }
        }
        (1..=self.n)
            .filter(|&i| {
                let v = self.boundary[i - 1];
                match self.vertices[v].color {
                    Color::Black => covered[v],
                    Color::White => !covered[v],
                }
            })
            .collect()
    }

    /// Number of perfect matchings with each boundary.
    pub fn matching_counts(&self) -> BTreeMap<Vec<usize>, usize> {
        let mut out = BTreeMap::new();
        self.for_each_matching(|m| *out.entry(self.matching_boundary(m)).or_insert(0) += 1);
        out
    }

    /// `D_I = Σ_{∂M = I} Π_{e ∈ M} w(e)`.
    pub fn boundary_measurement<R: Ring>(&self, w: &EdgeWeights<R>) -> Result<PlueckerVector<R>> {
        if w.values.len() != self.edges.len() {
            return Err(Error::Mismatch("weights do not match the graph".into()));
        }
        let mut sums: BTreeMap<Vec<usize>, R> = BTreeMap::new();
        let mut any = false;
        self.for_each_matching(|m| {
            any = true;
            let weight = m
                .iter()
                .fold(R::one(&w.ctx), |acc, &e| acc * w.values[e].clone());
            let key = self.matching_boundary(m);
            let slot = sums.entry(key).or_insert_with(|| R::zero(&w.ctx));
            *slot = slot.clone() + weight;
        });
        if !any {
            return Err(Error::Invalid("the graph has no perfect matching".into()));
        }
        Ok(PlueckerVector::from_fn(self.n, self.k(), |i| {
            sums.get(i).cloned().unwrap_or_else(|| R::zero(&w.ctx))
        }))
    }

    /// The composite of boundary measurement, twist and the face-label
    /// Plücker coordinates: one value per face, as homogeneous coordinates.
    pub fn muller_speyer_composite<F: Field>(
        &self,
        w: &EdgeWeights<F>,
    ) -> Result<Vec<(Vec<usize>, F)>> {
        let labels = self.face_labels()?;
        let d = self.boundary_measurement(w)?;
        let m = pluecker_to_matrix(&d)?;
        let t = twist(&m)?;
        let cols: Vec<usize> = (1..=t.cols()).collect();
        labels
            .labels
            .iter()
            .map(|l| {
                let v = t.minor(l, &cols)?;
                if v.is_zero() {
                    return Err(Error::Invalid(format!("face coordinate Δ_{l:?} vanishes")));
                }
                Ok((l.clone(), v))
            })
            .collect()
    }
}

/// Face labels of a reduced graph, aligned with [`PlabicGraph::faces`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FaceLabeling {
    labels: Vec<Vec<usize>>,
    necklace: GrassmannNecklace,
    dimension: usize,
}

impl FaceLabeling {
    pub fn labels(&self) -> &[Vec<usize>] {
        &self.labels
    }

    pub fn necklace(&self) -> &GrassmannNecklace {
        &self.necklace
    }

    /// Dimension of the positroid cell; reduced graphs have one more face.
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Whether labels are pairwise distinct and number `dimension + 1`.
    pub fn is_consistent(&self) -> bool {
        let distinct: BTreeSet<&Vec<usize>> = self.labels.iter().collect();
        distinct.len() == self.labels.len() && self.labels.len() == self.dimension + 1
    }
}

/// The lexicographically first basis among the rows, scanning `order`.
fn greedy_basis<F: Field>(m: &Matrix<F>, order: impl Iterator<Item = usize>) -> Vec<usize> {
    let k = m.cols();
    let cols: Vec<usize> = (1..=k).collect();
    let mut basis: Vec<usize> = Vec::with_capacity(k);
    for r in order {
        if basis.len() == k {
            break;
        }
        let mut trial = basis.clone();
        trial.push(r);
        if m.submatrix(&trial, &cols).expect("in range").rank() == trial.len() {
            basis = trial;
        }
    }
    basis
}

fn twist_by<F: Field>(m: &Matrix<F>, forward: bool) -> Result<Matrix<F>> {
    let (n, k) = (m.rows(), m.cols());
    if m.rank() != k {
        return Err(Error::Precondition(
            "twist needs a full-rank n x k matrix".into(),
        ));
    }
    let ctx = m.ctx().clone();
    let mut out = Matrix::zeros(n, k, &ctx);
    let cols: Vec<usize> = (1..=k).collect();
    for i in 1..=n {
        if m.row(i).iter().all(Ring::is_zero) {
            return Err(Error::Precondition(format!("row {i} is zero")));
        }
        let set = if forward {
            greedy_basis(m, (0..n).map(|s| (i - 1 + s) % n + 1))
        } else {
            greedy_basis(m, (0..n).map(|s| (i - 1 + n - s) % n + 1))
        };
        let a = m.submatrix(&set, &cols)?;
        let rhs: Vec<F> = set
            .iter()
            .map(|&j| if j == i { F::one(&ctx) } else { F::zero(&ctx) })
            .collect();
        // Rows of `a` are the v_j, so w solves a w = e_i.
        let wv = a
            .solve(&rhs)
            .ok_or_else(|| Error::Invalid(format!("twist system at row {i} is singular")))?;
        for (c, x) in wv.into_iter().enumerate() {
            out.set(i, c + 1, x);
        }
    }
    Ok(out)
}

/// The twist: row `i` is the vector `w_i` with `w_i · v_i = 1` and
/// `w_i · v_j = 0` for `j ∈ I_i ∖ {i}`, where `v_j` are the rows of `m` and
/// `I_i` its Grassmann necklace.
pub fn twist<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    twist_by(m, true)
}

/// The same construction with the reverse Grassmann necklace (lex-first bases
/// in the order `i, i-1, …`); it inverts [`twist`] on the Grassmannian.
pub fn reverse_twist<F: Field>(m: &Matrix<F>) -> Result<Matrix<F>> {
    twist_by(m, false)
}

/// Grassmann necklace of the column span, read directly from the rows.
pub fn necklace_of_matrix<F: Field>(m: &Matrix<F>) -> Vec<Vec<usize>> {
    let n = m.rows();
    (1..=n)
        .map(|i| {
            let mut s = greedy_basis(m, (0..n).map(|s| (i - 1 + s) % n + 1));
            s.sort_unstable();
            s
        })
        .collect()
}

/// The reduced graph attached to a word `s_{i_1} ⋯ s_{i_a}` in `S_m`: `m`
/// horizontal lines joining boundary vertex `i` (left side, height `i`) to
/// `2m + 1 - i`, with one vertical rung per letter, white on top and black
/// below. Degree-two vertices are inserted where a line would join two
/// vertices of the same color. Reduced exactly when the word is.
pub fn word_ladder(word: &Word) -> PlabicGraph {
    let m = word.n();
    let letters = word.letters();
    let a = letters.len();
    // Nodes on line h, left to right: (column, color, rung).
    let mut lines: Vec<Vec<(usize, Color, Option<usize>)>> = vec![Vec::new(); m + 1];
    for (x, &j) in letters.iter().enumerate() {
        lines[j].push((x, Color::Black, Some(x)));
        lines[j + 1].push((x, Color::White, Some(x)));
    }
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let mut rotations = Vec::new();
    let mut counter = 0usize;
    let mut rung_ends: Vec<[String; 2]> = vec![[String::new(), String::new()]; a];
    for h in 1..=m {
        let left = format!("b{h}");
        let right = format!("b{}", 2 * m + 1 - h);
        vertices.push((left.clone(), Color::Black, Some(h)));
        vertices.push((right.clone(), Color::Black, Some(2 * m + 1 - h)));
        // Path: left boundary, line nodes, right boundary, with fillers.
        let mut path: Vec<(String, Color, Option<usize>)> = vec![(left, Color::Black, None)];
        for &(x, color, rung) in &lines[h] {
            let id = format!("v{h}_{x}");
            path.push((id, color, rung));
        }
        path.push((right, Color::Black, None));
        let mut filled: Vec<(String, Color, Option<usize>)> = Vec::new();
        for node in path {
            if let Some(prev) = filled.last() {
                if prev.1 == node.1 {
                    counter += 1;
                    let c = match node.1 {
                        Color::Black => Color::White,
                        Color::White => Color::Black,
                    };
                    filled.push((format!("d{counter}"), c, None));
                }
            }
            filled.push(node);
        }
        let mut line_edges = Vec::new();
        for w in filled.windows(2) {
            let id = format!("e{}_{}", w[0].0, w[1].0);
            edges.push((id.clone(), w[0].0.clone(), w[1].0.clone()));
            line_edges.push(id);
        }
        for (p, node) in filled.iter().enumerate() {
            if p == 0 || p + 1 == filled.len() {
                continue;
            }
            vertices.push((node.0.clone(), node.1, None));
            let (l, r) = (line_edges[p - 1].clone(), line_edges[p].clone());
            match node.2 {
                Some(x) => {
                    let rung = format!("r{x}");
                    let side = if node.1 == Color::White { 0 } else { 1 };
                    rung_ends[x][side] = node.0.clone();
                    // Clockwise: left, up, right, down.
                    let rot = if node.1 == Color::White {
                        vec![l, r, rung]
                    } else {
                        vec![l, rung, r]
                    };
                    rotations.push((node.0.clone(), rot));
                }
                None => rotations.push((node.0.clone(), vec![l, r])),
            }
        }
    }
    for (x, ends) in rung_ends.iter().enumerate() {
        edges.push((format!("r{x}"), ends[0].clone(), ends[1].clone()));
    }
    PlabicGraph::new(2 * m, vertices, edges, rotations).expect("ladder graphs are valid")
}

/// A graph built from lollipops by adding bridges near the boundary.
///
/// Boundary vertex `i` starts isolated, or attached to a white leaf when
/// `lollipops[i - 1]` is set. Each entry `i` of `bridges` then inserts a
/// white vertex on the strand at `i` and a black vertex on the strand at
/// `i % n + 1`, joined by an edge running alongside the boundary arc between
/// them. Bivalent vertices are added where colors would clash.
pub fn bridge_graph(n: usize, lollipops: &[bool], bridges: &[usize]) -> Result<PlabicGraph> {
    if lollipops.len() != n {
        return Err(Error::Mismatch(format!(
            "{} lollipop flags for n = {n}",
            lollipops.len()
        )));
    }
    if let Some(&i) = bridges.iter().find(|&&i| i == 0 || i > n) {
        return Err(Error::Invalid(format!("bridge position {i} out of range")));
    }
    let mut b = Builder::default();
    let boundary: Vec<usize> = (1..=n)
        .map(|i| b.vertex(format!("b{i}"), Color::Black, Some(i)))
        .collect();
    let mut attach: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if lollipops[i] {
            let l = b.vertex(format!("l{}", i + 1), Color::White, None);
            attach[i] = Some(b.edge(boundary[i], l));
        }
    }
    for &i in bridges {
        let (si, sj) = (i - 1, i % n);
        let x = b.vertex(format!("x{}", b.verts.len()), Color::White, None);
        let y = b.vertex(format!("y{}", b.verts.len()), Color::Black, None);
        // Strand i: boundary, x, then the old attachment (x's inward side).
        let x_in = b.splice(attach[si], x, Color::Black);
        let bx = b.edge(boundary[si], x);
        // Strand i+1: boundary, white filler, y, then the old attachment.
        let g = b.vertex(format!("g{}", b.verts.len()), Color::White, None);
        let y_in = b.splice(attach[sj], y, Color::White);
        let bg = b.edge(boundary[sj], g);
        let gy = b.edge(g, y);
        let bridge = b.edge(x, y);
        // Clockwise, looking inward from the boundary with i + 1 to the right.
        b.rot[x] = [Some(bx), Some(bridge), x_in]
            .into_iter()
            .flatten()
            .collect();
        b.rot[y] = [Some(gy), y_in, Some(bridge)]
            .into_iter()
            .flatten()
            .collect();
        attach[si] = Some(bx);
        attach[sj] = Some(bg);
    }
    b.finish(n)
}

#[derive(Default)]
struct Builder {
    verts: Vec<(String, Color, Option<usize>)>,
    edges: Vec<[usize; 2]>,
    rot: Vec<Vec<usize>>,
    dead_vertex: Vec<bool>,
    dead_edge: Vec<bool>,
}

impl Builder {
    fn vertex(&mut self, id: String, color: Color, pos: Option<usize>) -> usize {
        self.verts.push((id, color, pos));
        self.rot.push(Vec::new());
        self.dead_vertex.push(false);
        self.verts.len() - 1
    }

    /// Adds an edge, appending it to both rotations.
    fn edge(&mut self, a: usize, c: usize) -> usize {
        self.edges.push([a, c]);
        self.dead_edge.push(false);
        let e = self.edges.len() - 1;
        self.rot[a].push(e);
        self.rot[c].push(e);
        e
    }

    /// Re-targets the boundary end of edge `e` to `v`, through a bivalent
    /// vertex when the far end has the wrong color. A far leaf of `v`'s own
    /// color is absorbed into `v` instead. Returns the edge now incident to
    /// `v` on its inward side; the caller sets `v`'s rotation.
    fn splice(&mut self, e: Option<usize>, v: usize, far_color: Color) -> Option<usize> {
        let e = e?;
        // The boundary end is ends[0]: attachment edges are created boundary first.
        let far = self.edges[e][1];
        let old = self.edges[e][0];
        self.rot[old].retain(|&x| x != e);
        if self.rot[far].len() == 1
            && self.verts[far].2.is_none()
            && self.verts[far].1 == self.verts[v].1
        {
            self.dead_vertex[far] = true;
            self.dead_edge[e] = true;
            self.rot[far].clear();
            return None;
        }
        if self.verts[far].1 == far_color {
            self.edges[e][0] = v;
            self.rot[v].push(e);
            Some(e)
        } else {
            let f = self.vertex(format!("f{}", self.verts.len()), far_color, None);
            self.edges[e][0] = f;
            self.rot[f].push(e);
            Some(self.edge(f, v))
        }
    }

    fn finish(self, n: usize) -> Result<PlabicGraph> {
        let ids: Vec<String> = self.verts.iter().map(|v| v.0.clone()).collect();
        let edge_id = |e: usize| format!("e{e}");
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(e, _)| !self.dead_edge[*e])
            .map(|(e, [a, c])| (edge_id(e), ids[*a].clone(), ids[*c].clone()))
            .collect();
        let rotations = self
            .rot
            .iter()
            .enumerate()
            .filter(|(_, r)| r.len() >= 2)
            .map(|(v, r)| (ids[v].clone(), r.iter().map(|&e| edge_id(e)).collect()))
            .collect();
        let verts = self
            .verts
            .into_iter()
            .zip(self.dead_vertex)
            .filter_map(|(v, dead)| (!dead).then_some(v))
            .collect();
        PlabicGraph::new(n, verts, edges, rotations)
    }
}
