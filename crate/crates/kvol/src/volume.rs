//! k-dimensional volumes of parallelopipeds, coordinate-subspace projections,
//! and the product-formula checks for parallelopipeds.
//!
//! Volumes come in two algebraically equal flavors: the frame-free Gram route
//! (square root of the Gram determinant of the edge tuple) and the coordinate
//! route (absolute determinant of the edge coordinates in an orthonormal
//! frame of the span). The product formula for two parallelopipeds spanning
//! the same subspace decomposes the product of their volumes over coordinate
//! projections, one term per index subset.

use crate::combinatorics::{enumerate_subsets, IndexSet};
use crate::error::{Error, Result};
use crate::exterior::{inner_product_gram, wedge_of_vectors};
use crate::linalg::{coordinate_matrix, determinant, full_rank, orthonormalize, Frame, Matrix};
use crate::report::CheckReport;

/// Relative tolerance for the de Gua right-corner triangle check.
pub const DE_GUA_TOLERANCE: f64 = 1e-10;

/// A k-dimensional parallelopiped in E^n: the set of clamped combinations of
/// the edge vectors, translated by the anchor.
///
/// The anchor only places the body in space; every volume in this module is
/// translation invariant and ignores it.
#[derive(Debug, Clone, PartialEq)]
pub struct Parallelopiped {
    edges: Vec<Vec<f64>>,
    anchor: Vec<f64>,
}

impl Parallelopiped {
    /// Anchored at the origin.
    pub fn new(edges: Vec<Vec<f64>>) -> Result<Self> {
        let ambient = check_edges(&edges)?;
        let anchor = vec![0.0; ambient];
        Ok(Self { edges, anchor })
    }

    pub fn with_anchor(edges: Vec<Vec<f64>>, anchor: Vec<f64>) -> Result<Self> {
        let ambient = check_edges(&edges)?;
        if anchor.len() != ambient {
            return Err(Error::Domain(format!(
                "anchor of dimension {} for edges in E^{}",
                anchor.len(),
                ambient
            )));
        }
        if anchor.iter().any(|a| !a.is_finite()) {
            return Err(Error::Domain("anchor contains a non-finite entry".into()));
        }
        Ok(Self { edges, anchor })
    }

    pub fn edges(&self) -> &[Vec<f64>] {
        &self.edges
    }

    pub fn anchor(&self) -> &[f64] {
        &self.anchor
    }

    /// Number of edges k.
    pub fn dim(&self) -> usize {
        self.edges.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.anchor.len()
    }
}

fn check_edges(edges: &[Vec<f64>]) -> Result<usize> {
    if edges.is_empty() {
        return Err(Error::Domain(
            "parallelopiped needs at least one edge".into(),
        ));
    }
    let ambient = edges[0].len();
    for e in edges {
        if e.len() != ambient {
            return Err(Error::Domain(format!(
                "edges mix ambient dimensions {} and {}",
                ambient,
                e.len()
            )));
        }
        if e.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("edge contains a non-finite entry".into()));
        }
    }
    if edges.len() > ambient {
        return Err(Error::Domain(format!(
            "{} edges cannot be independent in E^{}",
            edges.len(),
            ambient
        )));
    }
    Ok(ambient)
}

/// Copy of `v` with every coordinate outside `j` set to zero.
pub fn project(j: &IndexSet, v: &[f64]) -> Result<Vec<f64>> {
    if j.ambient() != v.len() {
        return Err(Error::Domain(format!(
            "index set over 1..={} against a vector of dimension {}",
            j.ambient(),
            v.len()
        )));
    }
    Ok(v.iter()
        .enumerate()
        .map(|(i, &x)| if j.contains(i + 1) { x } else { 0.0 })
        .collect())
}

/// Projects every vector of a tuple.
pub fn project_tuple(j: &IndexSet, xs: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    xs.iter().map(|x| project(j, x)).collect()
}

fn tuple_volume(edges: &[Vec<f64>]) -> Result<f64> {
    Ok(inner_product_gram(edges, edges)?.max(0.0).sqrt())
}

/// Frame-free volume: the square root of the Gram determinant of the edges,
/// clamped at zero. Dependent edges give 0.
pub fn volume_gram(p: &Parallelopiped) -> f64 {
    tuple_volume(&p.edges).expect("parallelopiped invariant guarantees a valid edge tuple")
}

/// Volume as the absolute determinant of the edge coordinates in `u`; the
/// edges must lie in the span of `u`.
pub fn volume_coordinate(p: &Parallelopiped, u: &Frame) -> Result<f64> {
    if p.dim() != u.dim() {
        return Err(Error::Domain(format!(
            "parallelopiped of dimension {} in a frame of dimension {}",
            p.dim(),
            u.dim()
        )));
    }
    Ok(determinant(&coordinate_matrix(u, &p.edges)?)?.abs())
}

/// Verifies the volume scaling law of a linear map between k-dimensional
/// subspaces: the image volume must equal |det| of the map's coordinate
/// matrix times the source volume.
///
/// `map` is the coordinate matrix of the linear map with respect to `u` and
/// `w`: row i holds the w-coordinates of the image of u_i.
pub fn scaling_check(
    map: &Matrix,
    p: &Parallelopiped,
    u: &Frame,
    w: &Frame,
    tolerance: f64,
) -> Result<CheckReport> {
    let k = u.dim();
    if map.rows() != k || map.cols() != w.dim() {
        return Err(Error::Domain(format!(
            "map matrix of shape {}x{} does not fit frames of dimensions {} and {}",
            map.rows(),
            map.cols(),
            k,
            w.dim()
        )));
    }
    if !map.is_square() {
        return Err(Error::Domain(
            "volume scaling needs equal source and target dimensions".into(),
        ));
    }
    if p.dim() != k {
        return Err(Error::Domain(format!(
            "parallelopiped of dimension {} in a source space of dimension {k}",
            p.dim()
        )));
    }
    let source_coords = coordinate_matrix(u, &p.edges)?;
    let image_coords = source_coords.mul(map)?;
    let image_edges: Vec<Vec<f64>> = (0..k)
        .map(|i| w.from_coords(image_coords.row(i)))
        .collect::<Result<_>>()?;
    let lhs = tuple_volume(&image_edges)?;
    let rhs = determinant(map)?.abs() * volume_gram(p);
    Ok(CheckReport::new(lhs, rhs, Vec::new(), tolerance))
}

/// Verifies the product formula for two parallelopipeds spanning the same
/// k-dimensional subspace: the product of their volumes equals the sum over
/// index subsets of the products of projected volumes.
///
/// The per-term contributions are the absolute wedge coordinates, which equal
/// the projected volumes subset by subset. Tuples that do not share a span
/// are rejected unless either tuple is degenerate, in which case both sides
/// vanish.
pub fn product_formula_parallelopipeds(
    x: &[Vec<f64>],
    y: &[Vec<f64>],
    tolerance: f64,
) -> Result<CheckReport> {
    if x.len() != y.len() {
        return Err(Error::Domain(format!(
            "tuples have different lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let px = Parallelopiped::new(x.to_vec())?;
    let py = Parallelopiped::new(y.to_vec())?;
    if px.ambient_dim() != py.ambient_dim() {
        return Err(Error::Domain(format!(
            "tuples live in different ambient dimensions {} and {}",
            px.ambient_dim(),
            py.ambient_dim()
        )));
    }

    let x_degenerate = !full_rank(&Matrix::from_rows(x)?)?;
    let y_degenerate = !full_rank(&Matrix::from_rows(y)?)?;
    if !x_degenerate && !y_degenerate {
        let span = orthonormalize(x)?;
        if span.dim() != x.len() || !y.iter().all(|yi| span.spans(yi)) {
            return Err(Error::Domain(
                "the two tuples must span the same k-dimensional subspace \
                 (parallel or identical bodies)"
                    .into(),
            ));
        }
    }

    let wx = wedge_of_vectors(x)?;
    let wy = wedge_of_vectors(y)?;
    let lhs = volume_gram(&px) * volume_gram(&py);
    let subsets = enumerate_subsets(px.ambient_dim(), x.len())?;
    let mut per_term = Vec::with_capacity(subsets.len());
    let mut rhs = 0.0;
    for (rank, j) in subsets.into_iter().enumerate() {
        let term = wx.coords()[rank].abs() * wy.coords()[rank].abs();
        rhs += term;
        per_term.push((j, term));
    }
    Ok(CheckReport::new(lhs, rhs, per_term, tolerance))
}

/// Verifies the right-corner triangle identity in E^3: for the triangle with
/// vertices (p,0,0), (0,q,0), (0,0,r), the squared area equals the sum of the
/// squared areas of its three coordinate-plane projections.
pub fn de_gua_check(p: f64, q: f64, r: f64, tolerance: f64) -> Result<CheckReport> {
    if !(p > 0.0 && q > 0.0 && r > 0.0) || !(p.is_finite() && q.is_finite() && r.is_finite()) {
        return Err(Error::Domain(format!(
            "leg lengths must be positive reals, got ({p}, {q}, {r})"
        )));
    }
    // Half the parallelogram spanned by Q - P and R - P.
    let edges = vec![vec![-p, q, 0.0], vec![-p, 0.0, r]];
    let area = 0.5 * tuple_volume(&edges)?;
    let lhs = area * area;
    let terms = [p * q / 2.0, p * r / 2.0, q * r / 2.0];
    let mut per_term = Vec::with_capacity(3);
    let mut rhs = 0.0;
    for (j, t) in enumerate_subsets(3, 2)?.into_iter().zip(terms) {
        rhs += t * t;
        per_term.push((j, t * t));
    }
    Ok(CheckReport::new(lhs, rhs, per_term, tolerance))
}
