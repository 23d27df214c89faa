//! Filtered simplicial 2-complexes built from a gph grid.
//!
//! Two triangulations are produced per field: the flat grid rectangle (no
//! longitude seam) and the polar disk (seam closed, pole collapsed to a single
//! vertex). Every simplex carries the minimum of its vertex heights, so the
//! superlevel set `{h >= t}` is a subcomplex for every `t`.

use std::fmt::Write as _;

use crate::error::ComplexError;
use crate::field::GphField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Topology {
    Grid,
    Polar,
}

impl std::str::FromStr for Topology {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "grid" => Ok(Topology::Grid),
            "polar" => Ok(Topology::Polar),
            other => Err(format!("unknown topology {other:?} (grid|polar)")),
        }
    }
}

/// A simplex addressed by dimension and its index among simplices of that
/// dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexId {
    pub dim: u8,
    pub index: u32,
}

impl SimplexId {
    pub fn vertex(index: u32) -> Self {
        SimplexId { dim: 0, index }
    }
    pub fn edge(index: u32) -> Self {
        SimplexId { dim: 1, index }
    }
    pub fn triangle(index: u32) -> Self {
        SimplexId { dim: 2, index }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FilteredComplex {
    vertex_heights: Vec<f64>,
    edges: Vec<[u32; 2]>,
    triangles: Vec<[u32; 3]>,
    triangle_edges: Vec<[u32; 3]>,
    edge_heights: Vec<f64>,
    triangle_heights: Vec<f64>,
}

impl FilteredComplex {
    /// Builds a complex from vertex heights and simplex vertex lists. Vertex
    /// lists are normalized to ascending order; every triangle's edges must be
    /// listed.
    pub fn new(
        vertex_heights: Vec<f64>,
        edges: Vec<[u32; 2]>,
        triangles: Vec<[u32; 3]>,
    ) -> Result<Self, ComplexError> {
        if let Some(k) = vertex_heights.iter().position(|h| !h.is_finite()) {
            return Err(ComplexError::NonFiniteHeight(k));
        }
        let nv = vertex_heights.len();
        let check = |vs: &[u32]| -> Result<(), ComplexError> {
            for &v in vs {
                if v as usize >= nv {
                    return Err(ComplexError::VertexOutOfRange {
                        vertex: v as usize,
                        count: nv,
                    });
                }
            }
            Ok(())
        };

        let mut norm_edges = Vec::with_capacity(edges.len());
        for e in edges {
            check(&e)?;
            let e = if e[0] <= e[1] { e } else { [e[1], e[0]] };
            if e[0] == e[1] {
                return Err(ComplexError::Degenerate(vec![e[0] as usize, e[1] as usize]));
            }
            norm_edges.push(e);
        }
        let edge_keys: Vec<(u32, u64)> =
            norm_edges.iter().map(|e| (e[0], u64::from(e[1]))).collect();
        let edge_index = VertexIndex::new(nv, &edge_keys);
        if let Some(k) = edge_index.duplicate() {
            let e = norm_edges[k as usize];
            return Err(ComplexError::Duplicate(vec![e[0] as usize, e[1] as usize]));
        }

        let mut norm_tris = Vec::with_capacity(triangles.len());
        let mut triangle_edges = Vec::with_capacity(triangles.len());
        for mut t in triangles {
            check(&t)?;
            t.sort_unstable();
            let as_usize = |t: [u32; 3]| t.iter().map(|&v| v as usize).collect::<Vec<_>>();
            if t[0] == t[1] || t[1] == t[2] {
                return Err(ComplexError::Degenerate(as_usize(t)));
            }
            let mut face_ids = [0u32; 3];
            for (slot, face) in [[t[1], t[2]], [t[0], t[2]], [t[0], t[1]]]
                .into_iter()
                .enumerate()
            {
                face_ids[slot] = edge_index.get(face[0], u64::from(face[1])).ok_or(
                    ComplexError::MissingFace {
                        triangle: [t[0] as usize, t[1] as usize, t[2] as usize],
                        edge: [face[0] as usize, face[1] as usize],
                    },
                )?;
            }
            norm_tris.push(t);
            triangle_edges.push(face_ids);
        }
        let tri_keys: Vec<(u32, u64)> = norm_tris
            .iter()
            .map(|t| (t[0], (u64::from(t[1]) << 32) | u64::from(t[2])))
            .collect();
        if let Some(k) = VertexIndex::new(nv, &tri_keys).duplicate() {
            let t = norm_tris[k as usize];
            return Err(ComplexError::Duplicate(
                t.iter().map(|&v| v as usize).collect(),
            ));
        }

        let h = &vertex_heights;
        let edge_heights = norm_edges
            .iter()
            .map(|e| h[e[0] as usize].min(h[e[1] as usize]))
            .collect();
        let triangle_heights = norm_tris
            .iter()
            .map(|t| h[t[0] as usize].min(h[t[1] as usize]).min(h[t[2] as usize]))
            .collect();

        Ok(FilteredComplex {
            vertex_heights,
            edges: norm_edges,
            triangles: norm_tris,
            triangle_edges,
            edge_heights,
            triangle_heights,
        })
    }

    pub fn vertex_heights(&self) -> &[f64] {
        &self.vertex_heights
    }

    pub fn edges(&self) -> &[[u32; 2]] {
        &self.edges
    }

    pub fn triangles(&self) -> &[[u32; 3]] {
        &self.triangles
    }

    /// Edge ids of each triangle's three faces.
    pub fn triangle_edges(&self) -> &[[u32; 3]] {
        &self.triangle_edges
    }

    pub fn count(&self, dim: u8) -> usize {
        match dim {
            0 => self.vertex_heights.len(),
            1 => self.edges.len(),
            2 => self.triangles.len(),
            _ => 0,
        }
    }

    pub fn len(&self) -> usize {
        self.count(0) + self.count(1) + self.count(2)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.count(0) as i64 - self.count(1) as i64 + self.count(2) as i64
    }

    pub fn height(&self, s: SimplexId) -> f64 {
        let i = s.index as usize;
        match s.dim {
            0 => self.vertex_heights[i],
            1 => self.edge_heights[i],
            _ => self.triangle_heights[i],
        }
    }

    pub fn heights(&self, dim: u8) -> &[f64] {
        match dim {
            0 => &self.vertex_heights,
            1 => &self.edge_heights,
            _ => &self.triangle_heights,
        }
    }

    /// Vertex ids of a simplex.
    pub fn vertices(&self, s: SimplexId) -> Vec<u32> {
        let i = s.index as usize;
        match s.dim {
            0 => vec![s.index],
            1 => self.edges[i].to_vec(),
            _ => self.triangles[i].to_vec(),
        }
    }

    /// Codimension-one faces of a simplex.
    pub fn boundary(&self, s: SimplexId) -> Vec<SimplexId> {
        let i = s.index as usize;
        match s.dim {
            0 => Vec::new(),
            1 => self.edges[i]
                .iter()
                .map(|&v| SimplexId::vertex(v))
                .collect(),
            _ => self.triangle_edges[i]
                .iter()
                .map(|&e| SimplexId::edge(e))
                .collect(),
        }
    }

    /// Same combinatorics with every vertex height passed through `f`.
    pub fn map_heights(&self, f: impl Fn(f64) -> f64) -> Result<Self, ComplexError> {
        FilteredComplex::new(
            self.vertex_heights.iter().map(|&h| f(h)).collect(),
            self.edges.clone(),
            self.triangles.clone(),
        )
    }

    /// Debug dump as `dim,height,v0,v1,v2`, one row per simplex in id order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("dim,height,v0,v1,v2\n");
        for (v, h) in self.vertex_heights.iter().enumerate() {
            let _ = writeln!(out, "0,{h},{v},,");
        }
        for (e, h) in self.edges.iter().zip(&self.edge_heights) {
            let _ = writeln!(out, "1,{h},{},{},", e[0], e[1]);
        }
        for (t, h) in self.triangles.iter().zip(&self.triangle_heights) {
            let _ = writeln!(out, "2,{h},{},{},{}", t[0], t[1], t[2]);
        }
        out
    }
}

/// Simplices grouped by their lowest vertex, each group sorted by the packed
/// remaining vertices. Entries are `(rest, id)`.
struct VertexIndex {
    start: Vec<u32>,
    entries: Vec<(u64, u32)>,
}

impl VertexIndex {
    fn new(nv: usize, keys: &[(u32, u64)]) -> Self {
        let mut start = vec![0u32; nv + 1];
        for &(v, _) in keys {
            start[v as usize + 1] += 1;
        }
        for v in 0..nv {
            start[v + 1] += start[v];
        }
        let mut fill = start.clone();
        let mut entries = vec![(0u64, 0u32); keys.len()];
        for (id, &(v, rest)) in keys.iter().enumerate() {
            entries[fill[v as usize] as usize] = (rest, id as u32);
            fill[v as usize] += 1;
        }
        for v in 0..nv {
            entries[start[v] as usize..start[v + 1] as usize].sort_unstable();
        }
        VertexIndex { start, entries }
    }

    fn group(&self, v: u32) -> &[(u64, u32)] {
        &self.entries[self.start[v as usize] as usize..self.start[v as usize + 1] as usize]
    }

    fn get(&self, v: u32, rest: u64) -> Option<u32> {
        let g = self.group(v);
        g.binary_search_by_key(&rest, |&(r, _)| r)
            .ok()
            .map(|i| g[i].1)
    }

    /// Id of some simplex listed twice.
    fn duplicate(&self) -> Option<u32> {
        (0..self.start.len() as u32 - 1).find_map(|v| {
            self.group(v)
                .windows(2)
                .find(|w| w[0].0 == w[1].0)
                .map(|w| w[1].1)
        })
    }
}

pub fn build_complex(field: &GphField, topology: Topology) -> FilteredComplex {
    match topology {
        Topology::Grid => build_grid_complex(field),
        Topology::Polar => build_polar_complex(field),
    }
}

/// The flat rectangle: grid neighbours joined, no longitude wraparound, each
/// quad cut along the (i,j)-(i+1,j+1) diagonal.
pub fn build_grid_complex(field: &GphField) -> FilteredComplex {
    rectangle_complex(field.nlat(), field.nlon(), field.values().to_vec())
        .expect("grid triangulation is a valid complex")
}

/// Triangulated `nrows x ncols` rectangle over row-major vertex heights.
pub fn rectangle_complex(
    nrows: usize,
    ncols: usize,
    heights: Vec<f64>,
) -> Result<FilteredComplex, ComplexError> {
    if nrows == 0 || ncols == 0 || heights.len() != nrows * ncols {
        return Err(ComplexError::Shape {
            rows: nrows,
            cols: ncols,
            heights: heights.len(),
        });
    }
    let (nrows, ncols) = (nrows as u32, ncols as u32);
    let id = |i: u32, j: u32| i * ncols + j;
    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for i in 0..nrows {
        for j in 0..ncols - 1 {
            edges.push([id(i, j), id(i, j + 1)]);
        }
    }
    for i in 0..nrows - 1 {
        for j in 0..ncols {
            edges.push([id(i, j), id(i + 1, j)]);
        }
    }
    for i in 0..nrows - 1 {
        for j in 0..ncols - 1 {
            edges.push([id(i, j), id(i + 1, j + 1)]);
            triangles.push([id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
            triangles.push([id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
        }
    }
    FilteredComplex::new(heights, edges, triangles)
}

/// Height given to the collapsed pole: the mean of the northernmost row.
/// Summation runs over the sorted row so relabelling longitudes cannot move it.
pub fn pole_height(field: &GphField) -> f64 {
    let mut top = field.row(field.nlat() - 1).to_vec();
    top.sort_by(f64::total_cmp);
    top.iter().sum::<f64>() / top.len() as f64
}

/// The polar disk: longitude seam closed and the pole collapsed. A lat=90
/// row is replaced by the pole vertex; otherwise a pole vertex is appended
/// above the northernmost ring.
pub fn build_polar_complex(field: &GphField) -> FilteredComplex {
    let nlon = field.nlon() as u32;
    let has_pole_row = field.lats()[field.nlat() - 1] == 90.0;
    let rings = if has_pole_row {
        field.nlat() - 1
    } else {
        field.nlat()
    } as u32;
    let id = |i: u32, j: u32| i * nlon + (j % nlon);
    let pole = rings * nlon;

    let mut heights = field.values()[..(rings * nlon) as usize].to_vec();
    heights.push(pole_height(field));

    let mut edges = Vec::new();
    let mut triangles = Vec::new();
    for i in 0..rings {
        for j in 0..nlon {
            edges.push([id(i, j), id(i, j + 1)]);
        }
    }
    for i in 0..rings - 1 {
        for j in 0..nlon {
            edges.push([id(i, j), id(i + 1, j)]);
        }
    }
    for i in 0..rings - 1 {
        for j in 0..nlon {
            edges.push([id(i, j), id(i + 1, j + 1)]);
            triangles.push([id(i, j), id(i, j + 1), id(i + 1, j + 1)]);
            triangles.push([id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
        }
    }
    let top = rings - 1;
    for j in 0..nlon {
        edges.push([id(top, j), pole]);
    }
    for j in 0..nlon {
        triangles.push([id(top, j), id(top, j + 1), pole]);
    }
    FilteredComplex::new(heights, edges, triangles).expect("polar triangulation is a valid complex")
}

/// Maps `h` to an integer that sorts in the reverse of `f64::total_cmp`.
pub(crate) fn descending_bits(h: f64) -> u64 {
    let b = h.to_bits();
    let ascending = if b >> 63 == 1 { !b } else { b | (1 << 63) };
    !ascending
}

/// Simplices in reduction order: height descending, then dimension
/// ascending, then index ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct FiltrationOrder {
    order: Vec<SimplexId>,
    position: [Vec<u32>; 3],
}

impl FiltrationOrder {
    pub fn simplices(&self) -> &[SimplexId] {
        &self.order
    }

    pub fn position(&self, s: SimplexId) -> usize {
        self.position[s.dim as usize][s.index as usize] as usize
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

pub fn filtration_order(complex: &FilteredComplex) -> FiltrationOrder {
    // One integer key per simplex: descending height in the high word, then
    // dimension and index.
    let mut keyed: Vec<u128> = Vec::with_capacity(complex.len());
    for dim in 0..3u8 {
        for (k, &h) in complex.heights(dim).iter().enumerate() {
            let id = (u64::from(dim) << 32) | k as u64;
            keyed.push((u128::from(descending_bits(h)) << 64) | u128::from(id));
        }
    }
    keyed.sort_unstable();
    let order: Vec<SimplexId> = keyed
        .into_iter()
        .map(|key| SimplexId {
            dim: (key >> 32) as u8,
            index: key as u32,
        })
        .collect();
    let mut position = [
        vec![0u32; complex.count(0)],
        vec![0u32; complex.count(1)],
        vec![0u32; complex.count(2)],
    ];
    for (p, s) in order.iter().enumerate() {
        position[s.dim as usize][s.index as usize] = p as u32;
    }
    FiltrationOrder { order, position }
}
