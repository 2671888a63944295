//! Enumeration, ranking and unranking of the k-element index subsets of
//! {1, ..., n} that label the subset basis of the k-vector space.
//!
//! Subsets are kept in lexicographic order of their element lists; that order
//! is the canonical layout for dense k-vector coordinates everywhere else in
//! the crate. Elements are 1-based, ranks are 0-based; the conversion between
//! the two conventions stays inside this module.

use std::fmt;

use crate::error::{Error, Result};

/// Default ceiling on C(n, k) for enumeration and dense coordinate arrays.
///
/// Keeps k-vector coordinate arrays at a desk-friendly size; raise it through
/// [`enumerate_subsets_with_cap`] if you know what you are doing.
pub const DEFAULT_SUBSET_CAP: u128 = 1_000_000;

/// A subset {j1 < j2 < ... < jk} of {1, ..., n}, with its ambient n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexSet {
    elements: Vec<usize>,
    ambient: usize,
}

impl IndexSet {
    /// Builds an index set, rejecting element lists that are not strictly
    /// increasing or that leave the range 1..=ambient.
    pub fn new(elements: Vec<usize>, ambient: usize) -> Result<Self> {
        for window in elements.windows(2) {
            if window[0] >= window[1] {
                return Err(Error::Domain(format!(
                    "index set elements must be strictly increasing, got {} before {}",
                    window[0], window[1]
                )));
            }
        }
        if let Some(&first) = elements.first() {
            if first < 1 {
                return Err(Error::Domain("index set elements are 1-based".into()));
            }
        }
        if let Some(&last) = elements.last() {
            if last > ambient {
                return Err(Error::Domain(format!(
                    "index set element {last} exceeds ambient dimension {ambient}"
                )));
            }
        }
        Ok(Self { elements, ambient })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Number of elements k.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, j: usize) -> bool {
        self.elements.binary_search(&j).is_ok()
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

/// Binomial coefficient C(n, k), saturating at `u128::MAX`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // Multiply before dividing; the running value is always an exact
        // binomial coefficient, so the division by i+1 is exact.
        acc = match acc.checked_mul((n - i) as u128) {
            Some(v) => v / (i as u128 + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// All C(n, k) index sets in lexicographic order, under the default cap.
pub fn enumerate_subsets(n: usize, k: usize) -> Result<Vec<IndexSet>> {
    enumerate_subsets_with_cap(n, k, DEFAULT_SUBSET_CAP)
}

/// All C(n, k) index sets in lexicographic order of their element lists.
///
/// This order is the canonical basis order for k-vector coordinates.
pub fn enumerate_subsets_with_cap(n: usize, k: usize, cap: u128) -> Result<Vec<IndexSet>> {
    if n == 0 {
        return Err(Error::Domain("ambient dimension must be positive".into()));
    }
    if k > n {
        return Err(Error::Domain(format!(
            "subset size {k} exceeds ambient dimension {n}"
        )));
    }
    let count = binomial(n, k);
    if count > cap {
        return Err(Error::Resource(format!(
            "C({n},{k}) = {count} exceeds the subset cap {cap}"
        )));
    }
    let count = count as usize;
    let mut out = Vec::with_capacity(count);
    if k == 0 {
        out.push(IndexSet {
            elements: Vec::new(),
            ambient: n,
        });
        return Ok(out);
    }
    // Odometer over strictly increasing k-tuples.
    let mut current: Vec<usize> = (1..=k).collect();
    loop {
        out.push(IndexSet {
            elements: current.clone(),
            ambient: n,
        });
        // Find the rightmost position that can still advance.
        let mut pos = k;
        while pos > 0 {
            pos -= 1;
            if current[pos] < n - (k - 1 - pos) {
                current[pos] += 1;
                for p in pos + 1..k {
                    current[p] = current[p - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                debug_assert_eq!(out.len(), count);
                return Ok(out);
            }
        }
    }
}

/// 0-based position of `set` in the lexicographic enumeration of subsets of
/// its own size and ambient; inverse of [`unrank_subset`].
pub fn rank_subset(set: &IndexSet) -> usize {
    let n = set.ambient;
    let k = set.len();
    let mut rank: u128 = 0;
    let mut prev = 0usize;
    for (i, &j) in set.elements.iter().enumerate() {
        for t in prev + 1..j {
            rank += binomial(n - t, k - i - 1);
        }
        prev = j;
    }
    usize::try_from(rank).expect("subset rank exceeds usize")
}

/// The index set at 0-based `rank` in the lexicographic enumeration.
pub fn unrank_subset(n: usize, k: usize, rank: usize) -> Result<IndexSet> {
    if n == 0 {
        return Err(Error::Domain("ambient dimension must be positive".into()));
    }
    if k > n {
        return Err(Error::Domain(format!(
            "subset size {k} exceeds ambient dimension {n}"
        )));
    }
    let count = binomial(n, k);
    if rank as u128 >= count {
        return Err(Error::Domain(format!(
            "rank {rank} out of range for C({n},{k}) = {count}"
        )));
    }
    let mut remaining = rank as u128;
    let mut elements = Vec::with_capacity(k);
    let mut t = 1usize;
    for i in 0..k {
        loop {
            let below = binomial(n - t, k - i - 1);
            if remaining < below {
                elements.push(t);
                t += 1;
                break;
            }
            remaining -= below;
            t += 1;
        }
    }
    Ok(IndexSet {
        elements,
        ambient: n,
    })
}
