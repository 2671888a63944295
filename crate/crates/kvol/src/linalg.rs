//! Dense real matrix kernels: determinants via partially pivoted LU, Gram
//! matrices, column minors, coordinate matrices with respect to orthonormal
//! frames, and Gram-Schmidt orthonormalization.
//!
//! Everything here is plain 64-bit floating point with explicit tolerances;
//! the matrices involved stay small (k up to about 12), so LU with partial
//! pivoting is accurate enough for every identity checked elsewhere.

use crate::combinatorics::IndexSet;
use crate::error::{Error, Result};

/// Orthonormality slack allowed in a [`Frame`]: every pairwise inner product
/// must satisfy |<u_i, u_j> - delta_ij| <= this bound.
pub const FRAME_ORTHO_TOL: f64 = 1e-10;

/// Relative residual allowed when expressing a vector in a frame's span.
pub const SPAN_REL_TOL: f64 = 1e-8;

/// Relative residual below which Gram-Schmidt drops a dependent vector.
pub const DEPENDENT_DROP_TOL: f64 = 1e-10;

/// Scale factor for the full-rank determinant threshold; the threshold itself
/// also carries the product of squared row norms so that well-conditioned
/// rescaling does not flip the verdict.
pub const RANK_DET_TOL: f64 = 1e-10;

/// Dot product of two equal-length vectors.
pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Euclidean norm.
pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn check_finite(entries: &[f64], what: &str) -> Result<()> {
    if entries.iter().any(|e| !e.is_finite()) {
        return Err(Error::Domain(format!("{what} contains a non-finite entry")));
    }
    Ok(())
}

fn check_tuple(tuple: &[Vec<f64>], what: &str) -> Result<usize> {
    let ambient = match tuple.first() {
        Some(v) => v.len(),
        None => return Err(Error::Domain(format!("{what} must not be empty"))),
    };
    for v in tuple {
        if v.len() != ambient {
            return Err(Error::Domain(format!(
                "{what} mixes ambient dimensions {} and {}",
                ambient,
                v.len()
            )));
        }
        check_finite(v, what)?;
    }
    Ok(ambient)
}

/// Dense row-major matrix of finite 64-bit reals.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<f64>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Domain(format!(
                "matrix needs {} entries for shape {}x{}, got {}",
                rows * cols,
                rows,
                cols,
                entries.len()
            )));
        }
        check_finite(&entries, "matrix")?;
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let cols = check_tuple(rows, "matrix rows")?;
        let entries = rows.iter().flatten().copied().collect();
        Self::new(rows.len(), cols, entries)
    }

    pub fn identity(k: usize) -> Self {
        let mut entries = vec![0.0; k * k];
        for i in 0..k {
            entries[i * k + i] = 1.0;
        }
        Self {
            rows: k,
            cols: k,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<f64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut entries = vec![0.0; self.entries.len()];
        for i in 0..self.rows {
            for j in 0..self.cols {
                entries[j * self.rows + i] = self.get(i, j);
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::Domain(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut entries = vec![0.0; self.rows * rhs.cols];
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a == 0.0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    entries[i * rhs.cols + j] += a * rhs.get(t, j);
                }
            }
        }
        Matrix::new(self.rows, rhs.cols, entries)
    }
}

/// Determinant via LU factorization with partial pivoting, the row-swap sign
/// tracked through the elimination.
pub fn determinant(m: &Matrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::Domain(format!(
            "determinant needs a square matrix, got {}x{}",
            m.rows, m.cols
        )));
    }
    check_finite(&m.entries, "matrix")?;
    let k = m.rows;
    if k == 0 {
        return Ok(1.0);
    }
    let mut a = m.entries.clone();
    let mut sign = 1.0;
    for col in 0..k {
        let mut pivot_row = col;
        let mut pivot_abs = a[col * k + col].abs();
        for r in col + 1..k {
            let candidate = a[r * k + col].abs();
            if candidate > pivot_abs {
                pivot_abs = candidate;
                pivot_row = r;
            }
        }
        if pivot_abs == 0.0 {
            return Ok(0.0);
        }
        if pivot_row != col {
            for j in 0..k {
                a.swap(col * k + j, pivot_row * k + j);
            }
            sign = -sign;
        }
        let pivot = a[col * k + col];
        for r in col + 1..k {
            let factor = a[r * k + col] / pivot;
            if factor == 0.0 {
                continue;
            }
            a[r * k + col] = 0.0;
            for j in col + 1..k {
                a[r * k + j] -= factor * a[col * k + j];
            }
        }
    }
    let mut det = sign;
    for i in 0..k {
        det *= a[i * k + i];
    }
    Ok(det)
}

/// The k x k matrix of pairwise dot products (x_i . y_j).
pub fn gram_matrix(x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<Matrix> {
    let ax = check_tuple(x, "left tuple")?;
    let ay = check_tuple(y, "right tuple")?;
    if ax != ay {
        return Err(Error::Domain(format!(
            "tuples live in different ambient dimensions {ax} and {ay}"
        )));
    }
    if x.len() != y.len() {
        return Err(Error::Domain(format!(
            "tuples have different lengths {} and {}",
            x.len(),
            y.len()
        )));
    }
    let k = x.len();
    let mut entries = Vec::with_capacity(k * k);
    for xi in x {
        for yj in y {
            entries.push(dot(xi, yj));
        }
    }
    Matrix::new(k, k, entries)
}

/// The k x k minor selecting the columns of `a` named by `j`, in increasing
/// order.
pub fn minor(a: &Matrix, j: &IndexSet) -> Result<Matrix> {
    if j.len() != a.rows {
        return Err(Error::Domain(format!(
            "minor needs |J| = {} column picks, got {}",
            a.rows,
            j.len()
        )));
    }
    if j.ambient() != a.cols {
        return Err(Error::Domain(format!(
            "index set over 1..={} does not match a matrix with {} columns",
            j.ambient(),
            a.cols
        )));
    }
    let k = a.rows;
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for &col in j.elements() {
            entries.push(a.get(i, col - 1));
        }
    }
    Matrix::new(k, k, entries)
}

/// An ordered orthonormal basis of a k-dimensional subspace of E^n, stored as
/// k rows of length n.
#[derive(Debug, Clone, PartialEq)]
pub struct Frame {
    ambient_dim: usize,
    vectors: Vec<Vec<f64>>,
}

impl Frame {
    /// Validates pairwise orthonormality within [`FRAME_ORTHO_TOL`].
    pub fn new(vectors: Vec<Vec<f64>>) -> Result<Self> {
        let ambient_dim = check_tuple(&vectors, "frame")?;
        if vectors.len() > ambient_dim {
            return Err(Error::Domain(format!(
                "{} frame vectors cannot be independent in dimension {}",
                vectors.len(),
                ambient_dim
            )));
        }
        for i in 0..vectors.len() {
            for j in i..vectors.len() {
                let expected = if i == j { 1.0 } else { 0.0 };
                let got = dot(&vectors[i], &vectors[j]);
                if (got - expected).abs() > FRAME_ORTHO_TOL {
                    return Err(Error::Domain(format!(
                        "frame rows {i} and {j} are not orthonormal: <u_{i},u_{j}> = {got}"
                    )));
                }
            }
        }
        Ok(Self {
            ambient_dim,
            vectors,
        })
    }

    /// Number of frame vectors (the subspace dimension k).
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn vectors(&self) -> &[Vec<f64>] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        &self.vectors[i]
    }

    /// Frame coordinates of `v` along with the norm of the part of `v`
    /// orthogonal to the span.
    pub fn coords_and_residual(&self, v: &[f64]) -> Result<(Vec<f64>, f64)> {
        if v.len() != self.ambient_dim {
            return Err(Error::Domain(format!(
                "vector of dimension {} against frame in E^{}",
                v.len(),
                self.ambient_dim
            )));
        }
        check_finite(v, "vector")?;
        let coords: Vec<f64> = self.vectors.iter().map(|u| dot(v, u)).collect();
        let mut residual = v.to_vec();
        for (c, u) in coords.iter().zip(&self.vectors) {
            for (r, ui) in residual.iter_mut().zip(u) {
                *r -= c * ui;
            }
        }
        Ok((coords, norm(&residual)))
    }

    /// Reconstructs the ambient vector with the given frame coordinates.
    pub fn from_coords(&self, coords: &[f64]) -> Result<Vec<f64>> {
        if coords.len() != self.dim() {
            return Err(Error::Domain(format!(
                "{} coordinates against a frame of dimension {}",
                coords.len(),
                self.dim()
            )));
        }
        let mut out = vec![0.0; self.ambient_dim];
        for (c, u) in coords.iter().zip(&self.vectors) {
            for (o, ui) in out.iter_mut().zip(u) {
                *o += c * ui;
            }
        }
        Ok(out)
    }

    /// Whether `v` lies in the span within [`SPAN_REL_TOL`] relative residual.
    pub fn spans(&self, v: &[f64]) -> bool {
        match self.coords_and_residual(v) {
            Ok((_, residual)) => residual <= SPAN_REL_TOL * norm(v),
            Err(_) => false,
        }
    }

    /// Whether the two frames span the same subspace within [`SPAN_REL_TOL`].
    pub fn spans_same(&self, other: &Frame) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() == other.dim()
            && other.vectors.iter().all(|w| self.spans(w))
    }
}

/// Row coordinates of each `v_i` with respect to the orthonormal frame `u`:
/// the m x k matrix with (i, j) entry v_i . u_j.
///
/// Vectors outside the span (relative residual above [`SPAN_REL_TOL`]) are
/// rejected; zero vectors are allowed and produce zero rows.
pub fn coordinate_matrix(u: &Frame, v: &[Vec<f64>]) -> Result<Matrix> {
    let ambient = check_tuple(v, "coordinate tuple")?;
    if ambient != u.ambient_dim() {
        return Err(Error::Domain(format!(
            "tuple in E^{} against frame in E^{}",
            ambient,
            u.ambient_dim()
        )));
    }
    let mut entries = Vec::with_capacity(v.len() * u.dim());
    for (i, vi) in v.iter().enumerate() {
        let scale = norm(vi);
        let (coords, residual) = u.coords_and_residual(vi)?;
        if residual > SPAN_REL_TOL * scale {
            return Err(Error::Domain(format!(
                "vector {i} lies outside the frame's span: residual norm {residual:.3e} \
                 against |v| = {scale:.3e}"
            )));
        }
        entries.extend(coords);
    }
    Matrix::new(v.len(), u.dim(), entries)
}

/// Coordinate matrix of the linear map sending u_i to `images[i]`, written
/// in the frame `w`: the k x m matrix whose i-th row holds the w-coordinates
/// of `images[i]`.
pub fn linear_map_matrix(u: &Frame, w: &Frame, images: &[Vec<f64>]) -> Result<Matrix> {
    if images.len() != u.dim() {
        return Err(Error::Domain(format!(
            "{} images for a frame of dimension {}",
            images.len(),
            u.dim()
        )));
    }
    coordinate_matrix(w, images)
}

/// Modified Gram-Schmidt with one re-orthogonalization pass.
///
/// Vectors whose residual after projection drops below
/// [`DEPENDENT_DROP_TOL`] times their original norm are dropped, so dependent
/// spanning sets simply produce a lower-dimensional frame.
pub fn orthonormalize(spanning: &[Vec<f64>]) -> Result<Frame> {
    check_tuple(spanning, "spanning tuple")?;
    let mut basis: Vec<Vec<f64>> = Vec::new();
    for v in spanning {
        let original_norm = norm(v);
        if original_norm == 0.0 {
            continue;
        }
        let mut w = v.clone();
        for _ in 0..2 {
            for u in &basis {
                let overlap = dot(&w, u);
                for (wi, ui) in w.iter_mut().zip(u) {
                    *wi -= overlap * ui;
                }
            }
        }
        let residual_norm = norm(&w);
        if residual_norm <= DEPENDENT_DROP_TOL * original_norm {
            continue;
        }
        for wi in w.iter_mut() {
            *wi /= residual_norm;
        }
        basis.push(w);
    }
    if basis.is_empty() {
        return Err(Error::Degenerate(
            "every spanning vector is numerically zero".into(),
        ));
    }
    Frame::new(basis)
}

fn rank_threshold(a: &Matrix) -> f64 {
    let mut tau = RANK_DET_TOL;
    for i in 0..a.rows() {
        tau *= dot(a.row(i), a.row(i)).max(1.0);
    }
    tau
}

/// Whether the k x n matrix has full row rank, decided by |Det(A A^T)|
/// against a threshold that scales with the squared row norms.
pub fn full_rank(a: &Matrix) -> Result<bool> {
    if a.rows > a.cols {
        return Err(Error::Domain(format!(
            "rank test expects k <= n, got shape {}x{}",
            a.rows, a.cols
        )));
    }
    let gram = a.mul(&a.transpose())?;
    Ok(determinant(&gram)?.abs() > rank_threshold(a))
}

/// The same rank decision reached through the compound-minor route: the sum
/// of squared k x k minor determinants over all column subsets, which equals
/// Det(A A^T), is compared against the identical threshold.
pub fn full_rank_by_minors(a: &Matrix) -> Result<bool> {
    if a.rows > a.cols {
        return Err(Error::Domain(format!(
            "rank test expects k <= n, got shape {}x{}",
            a.rows, a.cols
        )));
    }
    let mut sum = 0.0;
    for j in crate::combinatorics::enumerate_subsets(a.cols, a.rows)? {
        let d = determinant(&minor(a, &j)?)?;
        sum += d * d;
    }
    Ok(sum > rank_threshold(a))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, entries: &[f64]) -> Matrix {
        Matrix::new(rows, cols, entries.to_vec()).unwrap()
    }

    #[test]
    fn determinant_identity() {
        assert_eq!(determinant(&Matrix::identity(3)).unwrap(), 1.0);
    }

    #[test]
    fn determinant_2x2_by_cofactors() {
        // Cofactor expansion by hand: 2*2 - 1*1 = 3.
        let d = determinant(&mat(2, 2, &[2.0, 1.0, 1.0, 2.0])).unwrap();
        assert!((d - 3.0).abs() < 1e-14);
    }

    #[test]
    fn determinant_proportional_rows_is_zero() {
        let d = determinant(&mat(2, 2, &[1.0, 2.0, 2.0, 4.0])).unwrap();
        assert_eq!(d, 0.0);
    }

    #[test]
    fn determinant_rejects_non_square() {
        assert!(matches!(
            determinant(&mat(2, 3, &[1.0; 6])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn matrix_rejects_non_finite() {
        assert!(Matrix::new(1, 2, vec![1.0, f64::NAN]).is_err());
        assert!(Matrix::new(1, 2, vec![1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn gram_of_orthonormal_rows_is_identity() {
        let e1 = vec![1.0, 0.0, 0.0];
        let e2 = vec![0.0, 1.0, 0.0];
        let g = gram_matrix(&[e1.clone(), e2.clone()], &[e1, e2]).unwrap();
        assert_eq!(g, Matrix::identity(2));
    }

    #[test]
    fn gram_by_direct_dot_products() {
        let x = vec![vec![1.0, 0.0, 1.0], vec![0.0, 1.0, 1.0]];
        let g = gram_matrix(&x, &x).unwrap();
        assert_eq!(g, mat(2, 2, &[2.0, 1.0, 1.0, 2.0]));
    }

    #[test]
    fn gram_of_orthogonal_singletons() {
        let g = gram_matrix(&[vec![1.0, 0.0]], &[vec![0.0, 1.0]]).unwrap();
        assert_eq!(g.get(0, 0), 0.0);
    }

    #[test]
    fn gram_rejects_mismatched_dimensions() {
        assert!(gram_matrix(&[vec![1.0, 0.0]], &[vec![1.0, 0.0, 0.0]]).is_err());
    }

    #[test]
    fn minor_selects_columns() {
        let a = mat(2, 3, &[1.0, 0.0, 1.0, 0.0, 1.0, 1.0]);
        let j12 = IndexSet::new(vec![1, 2], 3).unwrap();
        let j23 = IndexSet::new(vec![2, 3], 3).unwrap();
        assert_eq!(minor(&a, &j12).unwrap(), Matrix::identity(2));
        assert_eq!(minor(&a, &j23).unwrap(), mat(2, 2, &[0.0, 1.0, 1.0, 1.0]));
    }

    #[test]
    fn minor_of_full_index_set_is_the_matrix() {
        let a = mat(2, 2, &[3.0, 1.0, 4.0, 1.0]);
        let j = IndexSet::new(vec![1, 2], 2).unwrap();
        assert_eq!(minor(&a, &j).unwrap(), a);
    }

    #[test]
    fn minor_rejects_wrong_size() {
        let a = mat(2, 3, &[1.0; 6]);
        let j = IndexSet::new(vec![1], 3).unwrap();
        assert!(minor(&a, &j).is_err());
    }

    #[test]
    fn coordinate_matrix_of_frame_in_itself_is_identity() {
        let u = orthonormalize(&[vec![1.0, 1.0, 0.0], vec![0.0, 1.0, 1.0]]).unwrap();
        let c = coordinate_matrix(&u, u.vectors()).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((c.get(i, j) - expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn coordinate_matrix_reads_off_axis_coordinates() {
        let u = Frame::new(vec![vec![1.0, 0.0, 0.0], vec![0.0, 1.0, 0.0]]).unwrap();
        let c = coordinate_matrix(&u, &[vec![3.0, 4.0, 0.0]]).unwrap();
        assert_eq!((c.get(0, 0), c.get(0, 1)), (3.0, 4.0));
    }

    #[test]
    fn coordinate_matrix_recovers_combination_coefficients() {
        let u = orthonormalize(&[vec![1.0, 2.0, 2.0], vec![2.0, 0.0, -1.0]]).unwrap();
        let mut v = vec![0.0; 3];
        for (vi, (u0, u1)) in v.iter_mut().zip(u.vector(0).iter().zip(u.vector(1))) {
            *vi = 2.0 * u0 + 5.0 * u1;
        }
        let c = coordinate_matrix(&u, &[v.clone()]).unwrap();
        assert!((c.get(0, 0) - 2.0).abs() < 1e-12);
        assert!((c.get(0, 1) - 5.0).abs() < 1e-12);
        // Reconstruct and compare.
        let back = u.from_coords(c.row(0)).unwrap();
        for (a, b) in back.iter().zip(&v) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn coordinate_matrix_reports_out_of_span_residual() {
        let u = Frame::new(vec![vec![1.0, 0.0, 0.0]]).unwrap();
        let err = coordinate_matrix(&u, &[vec![1.0, 1.0, 0.0]]).unwrap_err();
        match err {
            Error::Domain(msg) => assert!(msg.contains("residual"), "message was: {msg}"),
            other => panic!("expected domain error, got {other:?}"),
        }
    }

    #[test]
    fn coordinate_matrix_allows_zero_vectors() {
        let u = Frame::new(vec![vec![1.0, 0.0, 0.0]]).unwrap();
        let c = coordinate_matrix(&u, &[vec![0.0, 0.0, 0.0]]).unwrap();
        assert_eq!(c.get(0, 0), 0.0);
    }

    #[test]
    fn linear_map_matrix_identity_and_scaling() {
        let u = orthonormalize(&[vec![1.0, 1.0, 0.0], vec![0.0, 0.0, 2.0]]).unwrap();
        let id = linear_map_matrix(&u, &u, u.vectors()).unwrap();
        let doubled: Vec<Vec<f64>> = u
            .vectors()
            .iter()
            .map(|v| v.iter().map(|x| 2.0 * x).collect())
            .collect();
        let twice = linear_map_matrix(&u, &u, &doubled).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { 1.0 } else { 0.0 };
                assert!((id.get(i, j) - expected).abs() < 1e-12);
                assert!((twice.get(i, j) - 2.0 * expected).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn orthonormalize_axis_aligned() {
        let frame = orthonormalize(&[vec![2.0, 0.0, 0.0], vec![0.0, 3.0, 0.0]]).unwrap();
        assert_eq!(frame.vectors()[0], vec![1.0, 0.0, 0.0]);
        assert_eq!(frame.vectors()[1], vec![0.0, 1.0, 0.0]);
    }

    #[test]
    fn orthonormalize_hand_gram_schmidt() {
        let frame = orthonormalize(&[vec![1.0, 1.0, 0.0], vec![1.0, 0.0, 0.0]]).unwrap();
        assert_eq!(frame.dim(), 2);
        let s = 1.0 / 2.0f64.sqrt();
        for (got, want) in frame.vector(0).iter().zip([s, s, 0.0]) {
            assert!((got - want).abs() < 1e-14);
        }
    }

    #[test]
    fn orthonormalize_drops_collinear_vector() {
        let frame = orthonormalize(&[vec![1.0, 0.0], vec![2.0, 0.0]]).unwrap();
        assert_eq!(frame.dim(), 1);
        assert_eq!(frame.vectors()[0], vec![1.0, 0.0]);
    }

    #[test]
    fn orthonormalize_rejects_all_zero() {
        let err = orthonormalize(&[vec![0.0, 0.0], vec![0.0, 0.0]]).unwrap_err();
        assert!(matches!(err, Error::Degenerate(_)));
    }

    #[test]
    fn full_rank_examples() {
        let a = mat(2, 3, &[1.0, 0.0, 1.0, 0.0, 1.0, 1.0]);
        assert!(full_rank(&a).unwrap());
        assert!(full_rank_by_minors(&a).unwrap());

        let dependent = mat(2, 3, &[1.0, 2.0, 3.0, 2.0, 4.0, 6.0]);
        assert!(!full_rank(&dependent).unwrap());
        assert!(!full_rank_by_minors(&dependent).unwrap());

        assert!(full_rank(&Matrix::identity(4)).unwrap());
    }

    #[test]
    fn full_rank_rejects_wide_k() {
        let a = mat(3, 2, &[1.0; 6]);
        assert!(full_rank(&a).is_err());
    }

    #[test]
    fn frame_rejects_non_orthonormal_rows() {
        assert!(Frame::new(vec![vec![1.0, 0.0], vec![1.0, 0.0]]).is_err());
        assert!(Frame::new(vec![vec![2.0, 0.0]]).is_err());
    }
}
