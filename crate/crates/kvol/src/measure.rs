//! Approximate k-dimensional volume of bounded regions in affine subspaces
//! via almost-disjoint box covers on dyadic grids.
//!
//! A region is an indicator over the coordinates of an orthonormal frame of
//! the subspace, together with a bounding box. Rasterization splits the
//! bounding box into a dyadic grid and classifies each cell by sampling the
//! indicator at the cell corners and center, producing an inner cover
//! (every sample inside) and an outer cover (some sample inside). Volumes of
//! covers add box by box; projected volumes onto coordinate subspaces pick up
//! one determinant factor per cover, which makes the product formula for two
//! covers in parallel subspaces an exact finite identity rather than a limit.

use std::collections::BTreeMap;

use crate::combinatorics::{enumerate_subsets, IndexSet};
use crate::error::{Error, Result};
use crate::linalg::{determinant, Frame, Matrix};
use crate::report::CheckReport;

/// Largest grid exponent accepted by [`rasterize`]: at most 2^12 cells along
/// any single axis.
pub const MAX_RESOLUTION: u32 = 12;

/// Ceiling on the total number of grid cells per rasterization.
pub const MAX_CELLS: u128 = 100_000_000;

/// Compensated (Neumaier) summation; keeps box-volume sums insensitive to
/// accumulation order well below the tolerances used by the checks.
pub(crate) fn neumaier_sum<I: IntoIterator<Item = f64>>(values: I) -> f64 {
    let mut sum = 0.0;
    let mut compensation = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    sum + compensation
}

/// A k-dimensional affine subspace of E^n: an origin point plus an
/// orthonormal frame of the direction space.
#[derive(Debug, Clone, PartialEq)]
pub struct AffineSubspace {
    origin: Vec<f64>,
    frame: Frame,
}

impl AffineSubspace {
    pub fn new(origin: Vec<f64>, frame: Frame) -> Result<Self> {
        if origin.len() != frame.ambient_dim() {
            return Err(Error::Domain(format!(
                "origin of dimension {} for a frame in E^{}",
                origin.len(),
                frame.ambient_dim()
            )));
        }
        if origin.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain("origin contains a non-finite entry".into()));
        }
        Ok(Self { origin, frame })
    }

    pub fn origin(&self) -> &[f64] {
        &self.origin
    }

    pub fn frame(&self) -> &Frame {
        &self.frame
    }

    /// Subspace dimension k.
    pub fn dim(&self) -> usize {
        self.frame.dim()
    }

    pub fn ambient_dim(&self) -> usize {
        self.frame.ambient_dim()
    }

    /// Ambient point of the given frame coordinates.
    pub fn to_ambient(&self, coords: &[f64]) -> Result<Vec<f64>> {
        let direction = self.frame.from_coords(coords)?;
        Ok(self
            .origin
            .iter()
            .zip(direction)
            .map(|(o, d)| o + d)
            .collect())
    }

    /// Whether the two subspaces are parallel or identical: equal dimension
    /// and the same direction space, origins unconstrained.
    pub fn parallel_to(&self, other: &AffineSubspace) -> bool {
        self.frame.spans_same(&other.frame)
    }
}

/// Axis-aligned box in frame coordinates with positive extent on every axis.
#[derive(Debug, Clone, PartialEq)]
pub struct UBox {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl UBox {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.len() != upper.len() || lower.is_empty() {
            return Err(Error::Domain(format!(
                "box bounds of lengths {} and {}",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::Domain("box bound is not finite".into()));
            }
            if lo >= hi {
                return Err(Error::Domain(format!(
                    "box needs lower < upper on every axis, got [{lo}, {hi}] on axis {i}"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    /// Product of the axis extents.
    pub fn volume(&self) -> f64 {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| hi - lo)
            .product()
    }

    /// Whether the open interiors of the two boxes intersect.
    pub fn interiors_overlap(&self, other: &UBox) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.lower
            .iter()
            .zip(&self.upper)
            .zip(other.lower.iter().zip(&other.upper))
            .all(|((alo, ahi), (blo, bhi))| alo < bhi && blo < ahi)
    }

    fn key(&self) -> Vec<u64> {
        self.lower
            .iter()
            .chain(&self.upper)
            .map(|x| x.to_bits())
            .collect()
    }
}

/// A finite almost-disjoint collection of boxes in an affine subspace.
#[derive(Debug, Clone)]
pub struct BoxCover {
    subspace: AffineSubspace,
    boxes: Vec<UBox>,
}

impl BoxCover {
    /// Validates that every box matches the subspace dimension and that box
    /// interiors are pairwise disjoint (quadratic in the number of boxes).
    pub fn new(subspace: AffineSubspace, boxes: Vec<UBox>) -> Result<Self> {
        for b in &boxes {
            if b.dim() != subspace.dim() {
                return Err(Error::Domain(format!(
                    "box of dimension {} in a subspace of dimension {}",
                    b.dim(),
                    subspace.dim()
                )));
            }
        }
        let cover = Self { subspace, boxes };
        if !cover.is_almost_disjoint() {
            return Err(Error::Domain(
                "box interiors overlap; the cover must be almost disjoint".into(),
            ));
        }
        Ok(cover)
    }

    /// Grid cells are almost disjoint by construction, so rasterization
    /// skips the quadratic validation.
    fn from_grid(subspace: AffineSubspace, boxes: Vec<UBox>) -> Self {
        Self { subspace, boxes }
    }

    pub fn subspace(&self) -> &AffineSubspace {
        &self.subspace
    }

    pub fn boxes(&self) -> &[UBox] {
        &self.boxes
    }

    /// Pairwise open-overlap test over all boxes.
    pub fn is_almost_disjoint(&self) -> bool {
        for i in 0..self.boxes.len() {
            for j in i + 1..self.boxes.len() {
                if self.boxes[i].interiors_overlap(&self.boxes[j]) {
                    return false;
                }
            }
        }
        true
    }
}

type Indicator = Box<dyn Fn(&[f64]) -> bool + Send + Sync>;

/// A bounded region of a subspace: a total indicator over frame coordinates
/// plus the box it lives in.
pub struct RegionSpec {
    indicator: Indicator,
    bounding_box: UBox,
}

impl RegionSpec {
    pub fn new(
        bounding_box: UBox,
        indicator: impl Fn(&[f64]) -> bool + Send + Sync + 'static,
    ) -> Self {
        Self {
            indicator: Box::new(indicator),
            bounding_box,
        }
    }

    /// The entire bounding box.
    pub fn whole_box(bounding_box: UBox) -> Self {
        Self::new(bounding_box, |_| true)
    }

    /// Closed ball of the given radius in frame coordinates.
    pub fn disk(center: Vec<f64>, radius: f64) -> Result<Self> {
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(Error::Domain(format!(
                "disk radius must be positive, got {radius}"
            )));
        }
        let lower: Vec<f64> = center.iter().map(|c| c - radius).collect();
        let upper: Vec<f64> = center.iter().map(|c| c + radius).collect();
        let bounding_box = UBox::new(lower, upper)?;
        let r2 = radius * radius;
        Ok(Self::new(bounding_box, move |t| {
            t.iter()
                .zip(&center)
                .map(|(x, c)| (x - c) * (x - c))
                .sum::<f64>()
                <= r2
        }))
    }

    /// Closed axis-aligned box region.
    pub fn box_region(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        let bounding_box = UBox::new(lower.clone(), upper.clone())?;
        Ok(Self::new(bounding_box, move |t| {
            t.iter()
                .zip(lower.iter().zip(&upper))
                .all(|(x, (lo, hi))| lo <= x && x <= hi)
        }))
    }

    /// Closed triangle in a 2-dimensional frame.
    pub fn triangle(a: [f64; 2], b: [f64; 2], c: [f64; 2]) -> Result<Self> {
        let doubled_area = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        if doubled_area == 0.0 || !doubled_area.is_finite() {
            return Err(Error::Domain("triangle vertices are collinear".into()));
        }
        let lower = vec![a[0].min(b[0]).min(c[0]), a[1].min(b[1]).min(c[1])];
        let upper = vec![a[0].max(b[0]).max(c[0]), a[1].max(b[1]).max(c[1])];
        let bounding_box = UBox::new(lower, upper)?;
        let side = |p: &[f64], from: [f64; 2], to: [f64; 2]| -> f64 {
            (to[0] - from[0]) * (p[1] - from[1]) - (to[1] - from[1]) * (p[0] - from[0])
        };
        Ok(Self::new(bounding_box, move |t| {
            let s1 = side(t, a, b);
            let s2 = side(t, b, c);
            let s3 = side(t, c, a);
            let any_neg = s1 < 0.0 || s2 < 0.0 || s3 < 0.0;
            let any_pos = s1 > 0.0 || s2 > 0.0 || s3 > 0.0;
            !(any_neg && any_pos)
        }))
    }

    /// Closed annulus between the two radii in frame coordinates.
    pub fn annulus(center: Vec<f64>, inner_radius: f64, outer_radius: f64) -> Result<Self> {
        if !inner_radius.is_finite()
            || !outer_radius.is_finite()
            || inner_radius < 0.0
            || outer_radius <= inner_radius
        {
            return Err(Error::Domain(format!(
                "annulus needs 0 <= inner < outer, got ({inner_radius}, {outer_radius})"
            )));
        }
        let lower: Vec<f64> = center.iter().map(|c| c - outer_radius).collect();
        let upper: Vec<f64> = center.iter().map(|c| c + outer_radius).collect();
        let bounding_box = UBox::new(lower, upper)?;
        let inner2 = inner_radius * inner_radius;
        let outer2 = outer_radius * outer_radius;
        Ok(Self::new(bounding_box, move |t| {
            let d2: f64 = t.iter().zip(&center).map(|(x, c)| (x - c) * (x - c)).sum();
            inner2 <= d2 && d2 <= outer2
        }))
    }

    pub fn contains(&self, coords: &[f64]) -> bool {
        (self.indicator)(coords)
    }

    pub fn bounding_box(&self) -> &UBox {
        &self.bounding_box
    }

    pub fn dim(&self) -> usize {
        self.bounding_box.dim()
    }
}

impl std::fmt::Debug for RegionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RegionSpec")
            .field("bounding_box", &self.bounding_box)
            .finish_non_exhaustive()
    }
}

/// Splits the region's bounding box into a 2^resolution-per-axis dyadic grid
/// and classifies cells by the indicator at the cell corners and center.
///
/// Returns the inner cover (every sample point inside the region) and the
/// outer cover (at least one sample point inside); the inner cover is a
/// subset of the outer one and both are almost disjoint by construction.
pub fn rasterize(
    region: &RegionSpec,
    subspace: &AffineSubspace,
    resolution: u32,
) -> Result<(BoxCover, BoxCover)> {
    let k = subspace.dim();
    if region.dim() != k {
        return Err(Error::Domain(format!(
            "region of dimension {} in a subspace of dimension {}",
            region.dim(),
            k
        )));
    }
    if resolution == 0 || resolution > MAX_RESOLUTION {
        return Err(Error::Domain(format!(
            "resolution must be in 1..={MAX_RESOLUTION}, got {resolution}"
        )));
    }
    let cells_per_axis = 1usize << resolution;
    let total = (cells_per_axis as u128).pow(k as u32);
    if total > MAX_CELLS {
        return Err(Error::Resource(format!(
            "grid of {cells_per_axis}^{k} = {total} cells exceeds the {MAX_CELLS}-cell cap"
        )));
    }
    let total = total as usize;
    let bb = region.bounding_box();
    let widths: Vec<f64> = bb
        .lower()
        .iter()
        .zip(bb.upper())
        .map(|(lo, hi)| (hi - lo) / cells_per_axis as f64)
        .collect();

    let mut inner_boxes = Vec::new();
    let mut outer_boxes = Vec::new();
    let mut index = vec![0usize; k];
    let mut lower = vec![0.0; k];
    let mut upper = vec![0.0; k];
    let mut sample = vec![0.0; k];
    for cell in 0..total {
        if cell > 0 {
            for axis in (0..k).rev() {
                index[axis] += 1;
                if index[axis] < cells_per_axis {
                    break;
                }
                index[axis] = 0;
            }
        }
        for axis in 0..k {
            lower[axis] = bb.lower()[axis] + index[axis] as f64 * widths[axis];
            upper[axis] = bb.lower()[axis] + (index[axis] + 1) as f64 * widths[axis];
        }

        let mut all_in = true;
        let mut any_in = false;
        for corner in 0..1usize << k {
            for axis in 0..k {
                sample[axis] = if corner >> axis & 1 == 1 {
                    upper[axis]
                } else {
                    lower[axis]
                };
            }
            if region.contains(&sample) {
                any_in = true;
            } else {
                all_in = false;
            }
        }
        for axis in 0..k {
            sample[axis] = bb.lower()[axis] + (index[axis] as f64 + 0.5) * widths[axis];
        }
        if region.contains(&sample) {
            any_in = true;
        } else {
            all_in = false;
        }

        if any_in {
            let cell_box = UBox {
                lower: lower.clone(),
                upper: upper.clone(),
            };
            if all_in {
                inner_boxes.push(cell_box.clone());
            }
            outer_boxes.push(cell_box);
        }
    }
    Ok((
        BoxCover::from_grid(subspace.clone(), inner_boxes),
        BoxCover::from_grid(subspace.clone(), outer_boxes),
    ))
}

/// Total volume of a cover: the sum of the box volumes. Empty covers have
/// volume 0.
pub fn cover_volume(cover: &BoxCover) -> f64 {
    neumaier_sum(cover.boxes.iter().map(UBox::volume))
}

/// Volume of the cover's image under the coordinate projection onto the
/// subspace named by `j`.
///
/// The projection restricted to the subspace has a single k x k coordinate
/// matrix whose (i, t) entry is component j_t of frame vector i, so the
/// projected volume is one determinant factor times the cover volume; a
/// projection that collapses the subspace contributes 0 automatically.
pub fn projected_cover_volume(cover: &BoxCover, j: &IndexSet) -> Result<f64> {
    let frame = cover.subspace.frame();
    let k = frame.dim();
    if j.len() != k {
        return Err(Error::Domain(format!(
            "projection subset of size {} for a subspace of dimension {k}",
            j.len()
        )));
    }
    if j.ambient() != frame.ambient_dim() {
        return Err(Error::Domain(format!(
            "index set over 1..={} in ambient dimension {}",
            j.ambient(),
            frame.ambient_dim()
        )));
    }
    let mut entries = Vec::with_capacity(k * k);
    for i in 0..k {
        for &col in j.elements() {
            entries.push(frame.vector(i)[col - 1]);
        }
    }
    let scale = determinant(&Matrix::new(k, k, entries)?)?.abs();
    Ok(scale * cover_volume(cover))
}

/// Product-formula report for two rasterized regions, with the inner/outer
/// volume bracket of each side alongside the inner-cover identity check.
#[derive(Debug, Clone)]
pub struct BracketReport {
    /// Identity check on the inner covers, with per-subset contributions.
    pub check: CheckReport,
    pub inner_volume_a: f64,
    pub outer_volume_a: f64,
    pub inner_volume_b: f64,
    pub outer_volume_b: f64,
}

impl BracketReport {
    pub fn bracket_width_a(&self) -> f64 {
        self.outer_volume_a - self.inner_volume_a
    }

    pub fn bracket_width_b(&self) -> f64 {
        self.outer_volume_b - self.inner_volume_b
    }

    /// Width of the bracket around the product of the two volumes.
    pub fn product_bracket_width(&self) -> f64 {
        self.outer_volume_a * self.outer_volume_b - self.inner_volume_a * self.inner_volume_b
    }
}

/// Verifies the product formula for two bounded regions of parallel (or
/// identical) affine subspaces at one grid resolution.
///
/// Both regions are rasterized; the identity between the product of
/// inner-cover volumes and the sum over subsets of projected inner-cover
/// volumes is exact for box unions, so its residual is floating-point noise
/// at any resolution, while the inner/outer brackets tighten as the
/// resolution grows.
pub fn product_formula_measurable(
    region_a: &RegionSpec,
    subspace_a: &AffineSubspace,
    region_b: &RegionSpec,
    subspace_b: &AffineSubspace,
    resolution: u32,
    tolerance: f64,
) -> Result<BracketReport> {
    if !subspace_a.parallel_to(subspace_b) {
        return Err(Error::Domain(
            "regions must lie in parallel or identical k-dimensional affine subspaces".into(),
        ));
    }
    let (inner_a, outer_a) = rasterize(region_a, subspace_a, resolution)?;
    let (inner_b, outer_b) = rasterize(region_b, subspace_b, resolution)?;

    let inner_volume_a = cover_volume(&inner_a);
    let outer_volume_a = cover_volume(&outer_a);
    let inner_volume_b = cover_volume(&inner_b);
    let outer_volume_b = cover_volume(&outer_b);

    let lhs = inner_volume_a * inner_volume_b;
    let subsets = enumerate_subsets(subspace_a.ambient_dim(), subspace_a.dim())?;
    let mut per_term = Vec::with_capacity(subsets.len());
    let mut terms = Vec::with_capacity(subsets.len());
    for j in subsets {
        let term = projected_cover_volume(&inner_a, &j)? * projected_cover_volume(&inner_b, &j)?;
        terms.push(term);
        per_term.push((j, term));
    }
    let rhs = neumaier_sum(terms);
    Ok(BracketReport {
        check: CheckReport::new(lhs, rhs, per_term, tolerance),
        inner_volume_a,
        outer_volume_a,
        inner_volume_b,
        outer_volume_b,
    })
}

/// Volume of the symmetric difference of two covers whose boxes come from a
/// common grid, so that equal cells carry bit-identical bounds.
pub fn symmetric_difference_volume(a: &BoxCover, b: &BoxCover) -> Result<f64> {
    if a.subspace.dim() != b.subspace.dim() {
        return Err(Error::Domain(format!(
            "covers of dimensions {} and {}",
            a.subspace.dim(),
            b.subspace.dim()
        )));
    }
    let mut only_in_a: BTreeMap<Vec<u64>, f64> =
        a.boxes.iter().map(|bx| (bx.key(), bx.volume())).collect();
    let mut only_in_b = Vec::new();
    for bx in &b.boxes {
        if only_in_a.remove(&bx.key()).is_none() {
            only_in_b.push(bx.volume());
        }
    }
    Ok(neumaier_sum(only_in_a.into_values().chain(only_in_b)))
}
