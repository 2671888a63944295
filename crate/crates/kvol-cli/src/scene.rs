//! Scene files: named vector tuples, matrices, subspaces and regions in one
//! TOML document.
//!
//! Spanning vectors of subspaces are orthonormalized on load, so scene
//! authors may list any independent spanning set. Regions live in the frame
//! coordinates of the subspace they reference and are described by a shape
//! name plus numeric parameters.

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use kvol::linalg::{orthonormalize, Frame, Matrix};
use kvol::measure::{AffineSubspace, RegionSpec};

pub const SUPPORTED_VERSION: u32 = 1;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneDoc {
    pub version: u32,
    #[serde(default)]
    pub tuples: BTreeMap<String, TupleEntry>,
    #[serde(default)]
    pub matrices: BTreeMap<String, MatrixEntry>,
    #[serde(default)]
    pub subspaces: BTreeMap<String, SubspaceEntry>,
    #[serde(default)]
    pub regions: BTreeMap<String, RegionEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TupleEntry {
    pub vectors: Vec<Vec<f64>>,
    /// Optional subspace whose frame is used for the coordinate volume.
    pub frame: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixEntry {
    pub rows: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceEntry {
    pub origin: Vec<f64>,
    pub spanning: Vec<Vec<f64>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RegionEntry {
    pub subspace: String,
    pub shape: String,
    pub params: Vec<f64>,
}

/// A parsed scene with name-based lookups. Lookup failures carry messages
/// suitable for stderr and exit code 2.
pub struct Scene {
    doc: SceneDoc,
}

impl Scene {
    pub fn load(path: &Path) -> Result<Scene, String> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| format!("cannot read scene file {}: {e}", path.display()))?;
        let doc: SceneDoc = toml::from_str(&text)
            .map_err(|e| format!("malformed scene file {}: {e}", path.display()))?;
        if doc.version != SUPPORTED_VERSION {
            return Err(format!(
                "scene file version {} is not supported (expected {SUPPORTED_VERSION})",
                doc.version
            ));
        }
        Ok(Scene { doc })
    }

    pub fn tuple(&self, name: &str) -> Result<&TupleEntry, String> {
        self.doc
            .tuples
            .get(name)
            .ok_or_else(|| format!("scene has no tuple named '{name}'"))
    }

    pub fn matrix(&self, name: &str) -> Result<Matrix, String> {
        let entry = self
            .doc
            .matrices
            .get(name)
            .ok_or_else(|| format!("scene has no matrix named '{name}'"))?;
        Matrix::from_rows(&entry.rows).map_err(|e| format!("matrix '{name}': {e}"))
    }

    pub fn frame(&self, name: &str) -> Result<Frame, String> {
        let entry = self
            .doc
            .subspaces
            .get(name)
            .ok_or_else(|| format!("scene has no subspace named '{name}'"))?;
        orthonormalize(&entry.spanning).map_err(|e| format!("subspace '{name}': {e}"))
    }

    pub fn subspace(&self, name: &str) -> Result<AffineSubspace, String> {
        let entry = self
            .doc
            .subspaces
            .get(name)
            .ok_or_else(|| format!("scene has no subspace named '{name}'"))?;
        let frame = self.frame(name)?;
        AffineSubspace::new(entry.origin.clone(), frame)
            .map_err(|e| format!("subspace '{name}': {e}"))
    }

    /// Region together with the subspace it lives in.
    pub fn region(&self, name: &str) -> Result<(RegionSpec, AffineSubspace), String> {
        let entry = self
            .doc
            .regions
            .get(name)
            .ok_or_else(|| format!("scene has no region named '{name}'"))?;
        let subspace = self.subspace(&entry.subspace)?;
        let region = build_region(&entry.shape, &entry.params, subspace.dim())
            .map_err(|e| format!("region '{name}': {e}"))?;
        Ok((region, subspace))
    }
}

/// Builds one of the supported shapes from its numeric parameters, in the
/// frame coordinates of a k-dimensional subspace.
pub fn build_region(shape: &str, params: &[f64], k: usize) -> Result<RegionSpec, String> {
    match shape {
        "disk" => {
            if params.len() != k + 1 {
                return Err(format!(
                    "disk in {k} frame coordinates needs {} parameters \
                     (center..., radius), got {}",
                    k + 1,
                    params.len()
                ));
            }
            RegionSpec::disk(params[..k].to_vec(), params[k]).map_err(|e| e.to_string())
        }
        "box" => {
            if params.len() != 2 * k {
                return Err(format!(
                    "box in {k} frame coordinates needs {} parameters \
                     (lower..., upper...), got {}",
                    2 * k,
                    params.len()
                ));
            }
            RegionSpec::box_region(params[..k].to_vec(), params[k..].to_vec())
                .map_err(|e| e.to_string())
        }
        "triangle" => {
            if k != 2 || params.len() != 6 {
                return Err(format!(
                    "triangle needs a 2-dimensional subspace and 6 parameters \
                     (ax, ay, bx, by, cx, cy), got k = {k} and {} parameters",
                    params.len()
                ));
            }
            RegionSpec::triangle(
                [params[0], params[1]],
                [params[2], params[3]],
                [params[4], params[5]],
            )
            .map_err(|e| e.to_string())
        }
        "annulus" => {
            if params.len() != k + 2 {
                return Err(format!(
                    "annulus in {k} frame coordinates needs {} parameters \
                     (center..., inner radius, outer radius), got {}",
                    k + 2,
                    params.len()
                ));
            }
            RegionSpec::annulus(params[..k].to_vec(), params[k], params[k + 1])
                .map_err(|e| e.to_string())
        }
        other => Err(format!(
            "unknown shape '{other}' (supported: disk, box, triangle, annulus)"
        )),
    }
}
