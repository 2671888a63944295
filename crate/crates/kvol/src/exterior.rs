//! k-vectors over E^n and their inner product, computed two independent ways.
//!
//! A wedge of k vectors is stored densely by its coordinates in the subset
//! basis: the coordinate at subset J is the determinant of the k x k minor
//! picking columns J from the matrix whose rows are the input vectors. With
//! that basis orthonormal, the lifted inner product of two wedges is the
//! plain dot product of coordinate arrays; the same number is independently
//! available as the determinant of the Gram matrix of the two input tuples.
//! The agreement of the two routes is the Binet-Cauchy identity, which
//! [`binet_cauchy_check`] verifies term by term.

use crate::combinatorics::{binomial, enumerate_subsets};
use crate::error::{Error, Result};
use crate::linalg::{determinant, gram_matrix, minor, Matrix};
use crate::report::CheckReport;

/// Element of the k-vector space over E^n, as coordinates over the
/// lexicographically ordered subset basis.
#[derive(Debug, Clone, PartialEq)]
pub struct KVector {
    n: usize,
    k: usize,
    coords: Vec<f64>,
}

impl KVector {
    /// The zero k-vector.
    pub fn zero(n: usize, k: usize) -> Result<Self> {
        let dim = checked_dimension(n, k)?;
        Ok(Self {
            n,
            k,
            coords: vec![0.0; dim],
        })
    }

    pub fn from_coords(n: usize, k: usize, coords: Vec<f64>) -> Result<Self> {
        let dim = checked_dimension(n, k)?;
        if coords.len() != dim {
            return Err(Error::Domain(format!(
                "k-vector over E^{n} with k = {k} needs {dim} coordinates, got {}",
                coords.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Domain("k-vector coordinate is not finite".into()));
        }
        Ok(Self { n, k, coords })
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn grade(&self) -> usize {
        self.k
    }

    /// Coordinates in subset-rank order.
    pub fn coords(&self) -> &[f64] {
        &self.coords
    }

    pub fn add(&self, rhs: &KVector) -> Result<KVector> {
        self.check_shape(rhs)?;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a + b)
            .collect();
        Ok(KVector {
            n: self.n,
            k: self.k,
            coords,
        })
    }

    pub fn scale(&self, factor: f64) -> KVector {
        KVector {
            n: self.n,
            k: self.k,
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn norm(&self) -> f64 {
        self.coords.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    fn check_shape(&self, rhs: &KVector) -> Result<()> {
        if self.n != rhs.n || self.k != rhs.k {
            return Err(Error::Domain(format!(
                "k-vector shapes differ: (n={}, k={}) vs (n={}, k={})",
                self.n, self.k, rhs.n, rhs.k
            )));
        }
        Ok(())
    }
}

fn checked_dimension(n: usize, k: usize) -> Result<usize> {
    if n == 0 {
        return Err(Error::Domain("ambient dimension must be positive".into()));
    }
    if k > n {
        return Err(Error::Domain(format!(
            "grade {k} exceeds ambient dimension {n}"
        )));
    }
    let dim = binomial(n, k);
    if dim > crate::combinatorics::DEFAULT_SUBSET_CAP {
        return Err(Error::Resource(format!(
            "C({n},{k}) = {dim} coordinates exceed the subset cap"
        )));
    }
    Ok(dim as usize)
}

/// The wedge of a k-tuple of vectors in E^n.
///
/// The coordinate at subset J is the determinant of the minor of the row
/// matrix of the tuple picking columns J; a linearly dependent tuple wedges
/// to (numerically) the zero k-vector.
pub fn wedge_of_vectors(x: &[Vec<f64>]) -> Result<KVector> {
    if x.is_empty() {
        return Err(Error::Domain("wedge needs at least one vector".into()));
    }
    let a = Matrix::from_rows(x)?;
    let n = a.cols();
    let k = a.rows();
    checked_dimension(n, k)?;
    let subsets = enumerate_subsets(n, k)?;
    let mut coords = Vec::with_capacity(subsets.len());
    for j in &subsets {
        coords.push(determinant(&minor(&a, j)?)?);
    }
    Ok(KVector { n, k, coords })
}

/// Inner product of two k-vectors: the coordinate dot product over the
/// orthonormal subset basis.
pub fn inner_product(a: &KVector, b: &KVector) -> Result<f64> {
    a.check_shape(b)?;
    Ok(a.coords.iter().zip(&b.coords).map(|(x, y)| x * y).sum())
}

/// The same inner product computed without wedge coordinates, as the
/// determinant of the Gram matrix of the two tuples.
pub fn inner_product_gram(x: &[Vec<f64>], y: &[Vec<f64>]) -> Result<f64> {
    determinant(&gram_matrix(x, y)?)
}

/// Verifies `Det(A B^T) = sum over J of Det(A^[J]) Det(B^[J])` for two k x n
/// matrices, reporting each subset's contribution.
pub fn binet_cauchy_check(a: &Matrix, b: &Matrix, tolerance: f64) -> Result<CheckReport> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::Domain(format!(
            "matrix shapes differ: {}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    if a.rows() > a.cols() {
        return Err(Error::Domain(format!(
            "Binet-Cauchy needs k <= n, got shape {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let lhs = determinant(&a.mul(&b.transpose())?)?;
    let mut per_term = Vec::new();
    let mut rhs = 0.0;
    for j in enumerate_subsets(a.cols(), a.rows())? {
        let term = determinant(&minor(a, &j)?)? * determinant(&minor(b, &j)?)?;
        rhs += term;
        per_term.push((j, term));
    }
    Ok(CheckReport::new(lhs, rhs, per_term, tolerance))
}
