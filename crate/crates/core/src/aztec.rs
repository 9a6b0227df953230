//! Domino tilings of the Aztec diamond as a non-Hermitian projection DPP.
//!
//! Cells are unit squares indexed by their lower-left corner `(x, y)`; the
//! order-`n` diamond holds the cells with `|2x + 1| + |2y + 1| <= 2n`. Cell
//! `(x, y)` is black when `x + y` is even. The Kasteleyn matrix (black rows,
//! white columns) has weight 1 on horizontal and `i` on vertical dominoes, and
//! the edge kernel is `L(e, f) = Kast(b_e, w_e) Kast^{-1}(w_e, b_f)`.
//!
//! Labels: a vertical domino is W when `x + y + n` is odd for its lower cell
//! (the one at the westmost corner is W), otherwise E; a horizontal domino is
//! N when `x + y + n` is even for its left cell, otherwise S.

use std::collections::HashMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numlin::{DenseMatrix, Lu, Scalar, PIVOT_TOL};
use crate::samplers::{bernoulli_parameter, categorical, Force, LazyConditional, Outcome, Rng};

pub type CellId = (i64, i64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "h")]
    Horizontal,
    #[serde(rename = "v")]
    Vertical,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    N,
    S,
    E,
    W,
}

/// A domino position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    /// Left (horizontal) or lower (vertical) cell.
    pub cell: CellId,
    pub orientation: Orientation,
    pub label: Label,
    /// Row of the black cell in the Kasteleyn matrix.
    pub black: usize,
    /// Column of the white cell.
    pub white: usize,
}

impl Edge {
    pub fn cells(&self) -> [CellId; 2] {
        let (x, y) = self.cell;
        match self.orientation {
            Orientation::Horizontal => [(x, y), (x + 1, y)],
            Orientation::Vertical => [(x, y), (x, y + 1)],
        }
    }

    /// Kasteleyn weight.
    pub fn weight(&self) -> Complex64 {
        match self.orientation {
            Orientation::Horizontal => Complex64::new(1.0, 0.0),
            Orientation::Vertical => Complex64::new(0.0, 1.0),
        }
    }
}

pub fn in_diamond(n: usize, (x, y): CellId) -> bool {
    (2 * x + 1).abs() + (2 * y + 1).abs() <= 2 * n as i64
}

fn is_black((x, y): CellId) -> bool {
    (x + y).rem_euclid(2) == 0
}

fn label_of(n: usize, cell: CellId, orientation: Orientation) -> Label {
    let odd = (cell.0 + cell.1 + n as i64).rem_euclid(2) == 1;
    match (orientation, odd) {
        (Orientation::Vertical, true) => Label::W,
        (Orientation::Vertical, false) => Label::E,
        (Orientation::Horizontal, true) => Label::S,
        (Orientation::Horizontal, false) => Label::N,
    }
}

/// Cells and domino positions of the order-`n` diamond.
#[derive(Debug, Clone)]
pub struct AztecGraph {
    n: usize,
    blacks: Vec<CellId>,
    whites: Vec<CellId>,
    edges: Vec<Edge>,
    edge_index: HashMap<(CellId, Orientation), usize>,
}

impl AztecGraph {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidConfig("Aztec diamond order must be >= 1".into()));
        }
        let r = n as i64;
        let mut blacks = Vec::new();
        let mut whites = Vec::new();
        let mut black_id = HashMap::new();
        let mut white_id = HashMap::new();
        for y in -r..r {
            for x in -r..r {
                if in_diamond(n, (x, y)) {
                    if is_black((x, y)) {
                        black_id.insert((x, y), blacks.len());
                        blacks.push((x, y));
                    } else {
                        white_id.insert((x, y), whites.len());
                        whites.push((x, y));
                    }
                }
            }
        }
        let mut edges = Vec::new();
        let mut edge_index = HashMap::new();
        for y in -r..r {
            for x in -r..r {
                for (orientation, other) in [(Orientation::Horizontal, (x + 1, y)), (Orientation::Vertical, (x, y + 1))] {
                    if !in_diamond(n, (x, y)) || !in_diamond(n, other) {
                        continue;
                    }
                    let (b, w) = if is_black((x, y)) { ((x, y), other) } else { (other, (x, y)) };
                    let id = edges.len();
                    edges.push(Edge {
                        id,
                        cell: (x, y),
                        orientation,
                        label: label_of(n, (x, y), orientation),
                        black: black_id[&b],
                        white: white_id[&w],
                    });
                    edge_index.insert(((x, y), orientation), id);
                }
            }
        }
        Ok(Self {
            n,
            blacks,
            whites,
            edges,
            edge_index,
        })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn cell_count(&self) -> usize {
        self.blacks.len() + self.whites.len()
    }

    pub fn black_cells(&self) -> &[CellId] {
        &self.blacks
    }

    pub fn white_cells(&self) -> &[CellId] {
        &self.whites
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Domino with the given left/lower cell and orientation.
    pub fn edge_at(&self, cell: CellId, orientation: Orientation) -> Option<&Edge> {
        self.edge_index.get(&(cell, orientation)).map(|&i| &self.edges[i])
    }

    pub fn kasteleyn(&self) -> DenseMatrix<Complex64> {
        let mut k = DenseMatrix::zeros(self.blacks.len(), self.whites.len());
        for e in &self.edges {
            k[(e.black, e.white)] = e.weight();
        }
        k
    }
}

/// Edge kernel in factored form: `L(e, f) = a_e M(w_e, b_f)` with
/// `M = Kast^{-1}`.
#[derive(Debug, Clone)]
pub struct AztecKernel {
    graph: AztecGraph,
    inverse: DenseMatrix<Complex64>,
}

impl AztecKernel {
    pub fn new(n: usize) -> Result<Self> {
        let graph = AztecGraph::new(n)?;
        let lu = Lu::factor(&graph.kasteleyn());
        // The Aztec Kasteleyn matrix is never singular; failure here is a bug.
        assert!(!lu.is_singular(), "singular Kasteleyn matrix for n = {n}");
        let inverse = lu.inverse()?;
        Ok(Self { graph, inverse })
    }

    pub fn graph(&self) -> &AztecGraph {
        &self.graph
    }

    pub fn entry(&self, e: usize, f: usize) -> Complex64 {
        let (e, f) = (&self.graph.edges[e], &self.graph.edges[f]);
        e.weight() * self.inverse[(e.white, f.black)]
    }

    /// The full `|E| x |E|` kernel.
    pub fn dense(&self) -> DenseMatrix<Complex64> {
        let m = self.graph.edges.len();
        DenseMatrix::from_fn(m, m, |r, c| self.entry(r, c))
    }

    /// Exact uniform tiling by the projection sampler, run on the factored
    /// kernel: the rank-one update of `L` is a Schur update of `M`.
    pub fn sample_tiling(&self, rng: &mut Rng) -> Result<Tiling> {
        let g = &self.graph;
        let mut m = self.inverse.clone();
        let mut white_on = vec![true; g.whites.len()];
        let mut black_on = vec![true; g.blacks.len()];
        let r = g.blacks.len();
        let mut chosen = Vec::with_capacity(r);
        let mut weights = vec![0.0; g.edges.len()];
        for step in 0..r {
            for e in &g.edges {
                weights[e.id] = if white_on[e.white] && black_on[e.black] {
                    bernoulli_parameter(e.weight() * m[(e.white, e.black)], step)?
                } else {
                    0.0
                };
            }
            let j = categorical(&weights, (r - step) as f64, rng)
                .ok_or_else(|| Error::NumericalBreakdown(format!("no mass left at step {step}")))?;
            let e = g.edges[j];
            let pivot = m[(e.white, e.black)];
            if pivot.abs() < PIVOT_TOL {
                return Err(Error::NumericalBreakdown(format!("vanishing pivot at step {step}")));
            }
            white_on[e.white] = false;
            black_on[e.black] = false;
            let rows: Vec<usize> = (0..white_on.len()).filter(|&w| white_on[w]).collect();
            let cols: Vec<usize> = (0..black_on.len()).filter(|&b| black_on[b]).collect();
            let row_j: Vec<Complex64> = cols.iter().map(|&b| m[(e.white, b)]).collect();
            for &w in &rows {
                let f = m[(w, e.black)] / pivot;
                if f == Complex64::zero() {
                    continue;
                }
                for (ci, &b) in cols.iter().enumerate() {
                    let v = m[(w, b)] - f * row_j[ci];
                    m[(w, b)] = v;
                }
            }
            chosen.push(j);
        }
        let tiling = Tiling::from_edges(g, &chosen);
        tiling.validate(g)?;
        Ok(tiling)
    }

    /// Top DR path by partial sampling: starting at the westmost corner,
    /// observe only the W, E and S candidates that continue the path.
    pub fn sample_top_dr_path(&self, rng: &mut Rng) -> Result<DrPath> {
        let g = &self.graph;
        let n = g.n as i64;
        let mut obs = LazyConditional::new(|a: usize, b: usize| self.entry(a, b));
        let (mut x, mut y) = (-n, -1i64);
        let mut segments = Vec::new();
        while x < n {
            let candidates = [
                g.edge_at((x, y), Orientation::Vertical),
                g.edge_at((x, y - 1), Orientation::Vertical),
                g.edge_at((x, y), Orientation::Horizontal),
            ];
            let mut taken = None;
            for e in candidates.into_iter().flatten() {
                if obs.observe(e.id, Force::None, rng)? == Outcome::In {
                    taken = Some(*e);
                    break;
                }
            }
            let e = taken.ok_or(Error::DeadEnd((x, y)))?;
            let seg = Segment::through(&e);
            if seg.start != [x as f64, y as f64 + 0.5] {
                return Err(Error::MalformedTiling(format!("{:?} does not continue the path at ({x}, {y})", e.label)));
            }
            x = seg.end[0] as i64;
            y = (seg.end[1] - 0.5).round() as i64;
            segments.push(seg);
        }
        Ok(DrPath { segments })
    }
}

/// Dense edge kernel of the order-`n` diamond.
pub fn build_kernel(n: usize) -> Result<DenseMatrix<Complex64>> {
    Ok(AztecKernel::new(n)?.dense())
}

pub fn sample_tiling(n: usize, rng: &mut Rng) -> Result<Tiling> {
    AztecKernel::new(n)?.sample_tiling(rng)
}

pub fn sample_top_dr_path(n: usize, rng: &mut Rng) -> Result<DrPath> {
    AztecKernel::new(n)?.sample_top_dr_path(rng)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Domino {
    pub x: i64,
    pub y: i64,
    pub orientation: Orientation,
    pub label: Label,
}

/// A domino tiling, dominoes sorted by `(y, x, orientation)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tiling {
    pub n: usize,
    pub dominoes: Vec<Domino>,
}

impl Tiling {
    pub fn from_edges(g: &AztecGraph, ids: &[usize]) -> Self {
        let mut dominoes: Vec<Domino> = ids
            .iter()
            .map(|&i| {
                let e = &g.edges[i];
                Domino {
                    x: e.cell.0,
                    y: e.cell.1,
                    orientation: e.orientation,
                    label: e.label,
                }
            })
            .collect();
        dominoes.sort_by_key(|d| (d.y, d.x, d.orientation == Orientation::Vertical));
        Self { n: g.n, dominoes }
    }

    /// Checks that the dominoes cover every cell exactly once with the
    /// right labels.
    pub fn validate(&self, g: &AztecGraph) -> Result<()> {
        if self.dominoes.len() != self.n * (self.n + 1) {
            return Err(Error::MalformedTiling(format!("{} dominoes for n = {}", self.dominoes.len(), self.n)));
        }
        let mut seen = HashMap::new();
        for d in &self.dominoes {
            let e = g
                .edge_at((d.x, d.y), d.orientation)
                .ok_or_else(|| Error::MalformedTiling(format!("domino at ({}, {}) outside the diamond", d.x, d.y)))?;
            if e.label != d.label {
                return Err(Error::MalformedTiling(format!("wrong label at ({}, {})", d.x, d.y)));
            }
            for c in e.cells() {
                if seen.insert(c, ()).is_some() {
                    return Err(Error::MalformedTiling(format!("cell {c:?} covered twice")));
                }
            }
        }
        if seen.len() != g.cell_count() {
            return Err(Error::MalformedTiling("cells left uncovered".into()));
        }
        Ok(())
    }

    /// Header `aztec n=<n>` and one `x y h|v label` line per domino.
    pub fn to_text(&self) -> String {
        let mut s = format!("aztec n={}\n", self.n);
        for d in &self.dominoes {
            let o = match d.orientation {
                Orientation::Horizontal => 'h',
                Orientation::Vertical => 'v',
            };
            let _ = writeln!(s, "{} {} {} {:?}", d.x, d.y, o, d.label);
        }
        s
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("tiling serializes")
    }

    /// Parses [`Tiling::to_text`] output; `#` comment lines are skipped.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        let n = lines
            .next()
            .and_then(|h| h.strip_prefix("aztec n="))
            .and_then(|v| v.trim().parse().ok())
            .ok_or_else(|| Error::Parse("missing `aztec n=` header".into()))?;
        let mut dominoes = Vec::new();
        for line in lines.filter(|l| !l.trim().is_empty()) {
            let f: Vec<&str> = line.split_whitespace().collect();
            let bad = || Error::Parse(format!("bad domino line `{line}`"));
            if f.len() != 4 {
                return Err(bad());
            }
            let orientation = match f[2] {
                "h" => Orientation::Horizontal,
                "v" => Orientation::Vertical,
                _ => return Err(bad()),
            };
            let label = match f[3] {
                "N" => Label::N,
                "S" => Label::S,
                "E" => Label::E,
                "W" => Label::W,
                _ => return Err(bad()),
            };
            dominoes.push(Domino {
                x: f[0].parse().map_err(|_| bad())?,
                y: f[1].parse().map_err(|_| bad())?,
                orientation,
                label,
            });
        }
        Ok(Self { n, dominoes })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SegmentKind {
    /// +45 degrees through a W domino.
    Rise,
    /// -45 degrees through an E domino.
    Fall,
    /// Horizontal through an S domino.
    Flat,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub kind: SegmentKind,
    pub start: [f64; 2],
    pub end: [f64; 2],
}

impl Segment {
    fn through(e: &Edge) -> Self {
        let (x, y) = (e.cell.0 as f64, e.cell.1 as f64);
        match e.label {
            Label::W => Segment {
                kind: SegmentKind::Rise,
                start: [x, y + 0.5],
                end: [x + 1.0, y + 1.5],
            },
            Label::E => Segment {
                kind: SegmentKind::Fall,
                start: [x, y + 1.5],
                end: [x + 1.0, y + 0.5],
            },
            Label::S => Segment {
                kind: SegmentKind::Flat,
                start: [x, y + 0.5],
                end: [x + 2.0, y + 0.5],
            },
            // never on a path; callers reject it before drawing
            Label::N => Segment {
                kind: SegmentKind::Flat,
                start: [f64::NAN; 2],
                end: [f64::NAN; 2],
            },
        }
    }
}

/// One DR path, west to east.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrPath {
    pub segments: Vec<Segment>,
}

impl DrPath {
    pub fn kinds(&self) -> Vec<SegmentKind> {
        self.segments.iter().map(|s| s.kind).collect()
    }

    pub fn is_continuous(&self) -> bool {
        self.segments.windows(2).all(|w| w[0].end == w[1].start)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.segments).expect("path serializes")
    }
}

/// The `n` DR paths of a tiling, top path first.
pub fn classify_and_extract_paths(t: &Tiling) -> Result<Vec<DrPath>> {
    let n = t.n as i64;
    let mut cover: HashMap<CellId, Domino> = HashMap::new();
    for d in &t.dominoes {
        let second = match d.orientation {
            Orientation::Horizontal => (d.x + 1, d.y),
            Orientation::Vertical => (d.x, d.y + 1),
        };
        for c in [(d.x, d.y), second] {
            if cover.insert(c, *d).is_some() {
                return Err(Error::MalformedTiling(format!("cell {c:?} covered twice")));
            }
        }
    }
    let mut paths = Vec::with_capacity(t.n);
    for k in 0..n {
        let (mut x, mut y) = (-n + k, -k - 1);
        let end_x = n - k;
        let mut segments = Vec::new();
        while x < end_x {
            let d = cover.get(&(x, y)).ok_or(Error::DeadEnd((x, y)))?;
            let e = Edge {
                id: 0,
                cell: (d.x, d.y),
                orientation: d.orientation,
                label: d.label,
                black: 0,
                white: 0,
            };
            if d.label == Label::N {
                return Err(Error::MalformedTiling(format!("path {k} runs into an N domino at ({x}, {y})")));
            }
            let seg = Segment::through(&e);
            if seg.start != [x as f64, y as f64 + 0.5] {
                return Err(Error::MalformedTiling(format!("path {k} branches at ({x}, {y})")));
            }
            x = seg.end[0] as i64;
            y = (seg.end[1] - 0.5).round() as i64;
            segments.push(seg);
        }
        if y != -k - 1 {
            return Err(Error::MalformedTiling(format!("path {k} ends off its corner")));
        }
        paths.push(DrPath { segments });
    }
    Ok(paths)
}
