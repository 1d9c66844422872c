//! Pre-wrap vertex intervals and paths.
//!
//! The interval machinery reasons over plain integers and reduces modulo
//! `n` only when a certificate is assembled, mirroring how the
//! constructions are stated.

use std::collections::BTreeSet;
use thiserror::Error;

/// The contiguous block `I(u, w) = {u, ..., w}` of pre-wrap vertex labels.
/// `I(u, u-1)` is the empty interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub u: i64,
    pub w: i64,
}

impl Interval {
    pub fn new(u: i64, w: i64) -> Self {
        assert!(w >= u - 1, "interval I({u},{w}) is malformed");
        Interval { u, w }
    }

    pub fn len(&self) -> i64 {
        self.w - self.u + 1
    }

    pub fn is_empty(&self) -> bool {
        self.w == self.u - 1
    }

    pub fn contains(&self, v: i64) -> bool {
        self.u <= v && v <= self.w
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.u..=self.w
    }
}

/// A walk given by its vertex sequence (pre-wrap labels). The constructions
/// only ever produce walks whose consecutive differences lie in
/// `{2, 3, -c'}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPath {
    vertices: Vec<i64>,
}

impl VertexPath {
    pub fn new(vertices: Vec<i64>) -> Self {
        VertexPath { vertices }
    }

    pub fn vertices(&self) -> &[i64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn first(&self) -> Option<i64> {
        self.vertices.first().copied()
    }

    pub fn last(&self) -> Option<i64> {
        self.vertices.last().copied()
    }

    pub fn push(&mut self, v: i64) {
        self.vertices.push(v);
    }

    /// Differences between consecutive vertices.
    pub fn steps(&self) -> impl Iterator<Item = i64> + '_ {
        self.vertices.windows(2).map(|w| w[1] - w[0])
    }
}

/// First reason a family of paths fails the disjoint-cover check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum PathViolation {
    #[error("vertex {vertex} appears more than once across the paths")]
    Overlap { vertex: i64 },
    #[error("required vertex {vertex} is not covered by any path")]
    MissingVertex { vertex: i64 },
    #[error("vertex {vertex} lies outside the required set")]
    ExtraVertex { vertex: i64 },
    #[error("path {index} does not run between its required endpoints")]
    WrongEndpoint { index: usize },
}

/// Checks that `paths` are pairwise vertex-disjoint, that their vertices
/// cover `required` exactly, and that the k-th path runs from
/// `endpoints[k].0` to `endpoints[k].1`.
pub fn verify_disjoint_paths(
    paths: &[VertexPath],
    required: &BTreeSet<i64>,
    endpoints: &[(i64, i64)],
) -> Result<(), PathViolation> {
    let mut seen = BTreeSet::new();
    for path in paths {
        for &v in path.vertices() {
            if !seen.insert(v) {
                return Err(PathViolation::Overlap { vertex: v });
            }
        }
    }
    if let Some(&v) = required.difference(&seen).next() {
        return Err(PathViolation::MissingVertex { vertex: v });
    }
    if let Some(&v) = seen.difference(required).next() {
        return Err(PathViolation::ExtraVertex { vertex: v });
    }
    for index in 0..paths.len().max(endpoints.len()) {
        let ok = match (paths.get(index), endpoints.get(index)) {
            (Some(path), Some(&(from, to))) => {
                path.first() == Some(from) && path.last() == Some(to)
            }
            _ => false,
        };
        if !ok {
            return Err(PathViolation::WrongEndpoint { index });
        }
    }
    Ok(())
}
