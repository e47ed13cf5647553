//! Sorted-set kernels.
//!
//! Both kernels are single-pass merges over strictly ascending inputs. With a
//! bound, only elements strictly below it are produced and the scan stops as
//! soon as the smaller head reaches the bound.

use alloc::vec::Vec;

use crate::graph::{VertexId, VertexList};

/// Appends `a ∩ b` (restricted to `< bound`) to `out`.
#[inline]
pub fn intersect_into(a: &[VertexId], b: &[VertexId], bound: Option<VertexId>, out: &mut Vec<VertexId>) {
    let limit = bound.unwrap_or(VertexId::MAX);
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        if x < y {
            if x >= limit {
                break;
            }
            i += 1;
        } else if y < x {
            if y >= limit {
                break;
            }
            j += 1;
        } else {
            if x >= limit {
                break;
            }
            out.push(x);
            i += 1;
            j += 1;
        }
    }
}

/// Appends `a ∖ b` (restricted to `< bound`) to `out`.
#[inline]
pub fn difference_into(a: &[VertexId], b: &[VertexId], bound: Option<VertexId>, out: &mut Vec<VertexId>) {
    let limit = bound.unwrap_or(VertexId::MAX);
    let mut j = 0;
    for &x in a {
        if x >= limit {
            break;
        }
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            out.push(x);
        }
    }
}

/// Appends the prefix of `a` below `bound` to `out`.
#[inline]
pub fn bounded_copy_into(a: &[VertexId], bound: Option<VertexId>, out: &mut Vec<VertexId>) {
    match bound {
        None => out.extend_from_slice(a),
        Some(limit) => out.extend(a.iter().copied().take_while(|&x| x < limit)),
    }
}

/// Sorted intersection of two vertex lists, optionally bounded.
pub fn intersect(a: &VertexList, b: &VertexList, bound: Option<VertexId>) -> VertexList {
    let mut out = Vec::with_capacity(a.len().min(b.len()));
    intersect_into(a.as_slice(), b.as_slice(), bound, &mut out);
    VertexList::from_sorted_unchecked(out)
}

/// Sorted difference `a ∖ b`, optionally bounded.
pub fn difference(a: &VertexList, b: &VertexList, bound: Option<VertexId>) -> VertexList {
    let mut out = Vec::with_capacity(a.len());
    difference_into(a.as_slice(), b.as_slice(), bound, &mut out);
    VertexList::from_sorted_unchecked(out)
}
