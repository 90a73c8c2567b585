//! Greedy decomposition of a path polygon into balanced monotone parts.
//!
//! Slabs are scanned in path order while the running corridor
//! `[max lower, min upper]` stays nonempty. When slab `i` would empty it,
//! slab `i - 1` is the cut slab. It is handed to the next part when slab
//! `i - 2` is a local minimum of the whole series and is not the first slab
//! of the current part; otherwise it closes the current part.

use alloc::vec::Vec;
use core::ops::Range;

use crate::error::{Error, Result};
use crate::geom::{OrthoPolygon, Point, Rect};
use crate::vdecomp::{local_minima, Slab, SlabSeries};

/// Which side receives a cut slab.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum CutPolicy {
    /// Defer the cut slab when the slab before it is a local minimum.
    #[default]
    DeferAfterLocalMinimum,
    /// Always keep the cut slab in the part being closed.
    KeepInCurrent,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Assignment {
    CurrentPart,
    NextPart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutReason {
    /// The slab before the cut slab is a local minimum.
    LocalMinimumBefore,
    Default,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CutReport {
    /// Series index of the cut slab.
    pub cut_slab: usize,
    pub assignment: Assignment,
    pub reason: CutReason,
}

/// A contiguous run of slabs that contains a corridor touching its leftmost
/// and rightmost walls.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedPart {
    pub index: usize,
    /// Slab indices into the series, in path order.
    pub slabs: Range<usize>,
    pub polygon: OrthoPolygon,
    pub corridor: Rect,
}

impl BalancedPart {
    pub fn corridor(&self) -> Rect {
        self.corridor
    }
}

/// Corridor of a run of slabs: x from the leftmost to the rightmost wall,
/// y from the highest lower edge to the lowest upper edge.
pub fn corridor(slabs: &[Slab]) -> Result<Rect> {
    let first = slabs.first().ok_or(Error::EmptyCorridor)?;
    let (mut x0, mut x1) = (first.rect.lo.x, first.rect.hi.x);
    let (mut lo, mut hi) = (first.lower(), first.upper());
    for s in &slabs[1..] {
        x0 = x0.min(s.rect.lo.x);
        x1 = x1.max(s.rect.hi.x);
        lo = lo.max(s.lower());
        hi = hi.min(s.upper());
    }
    if lo > hi {
        return Err(Error::EmptyCorridor);
    }
    Ok(Rect::new(Point::new(x0, lo), Point::new(x1, hi)))
}

pub fn partition_balanced(series: &SlabSeries) -> Result<(Vec<BalancedPart>, Vec<CutReport>)> {
    partition_with(series, CutPolicy::default())
}

pub fn partition_with(series: &SlabSeries, policy: CutPolicy) -> Result<(Vec<BalancedPart>, Vec<CutReport>)> {
    let (ranges, cuts) = balanced_ranges(series, policy)?;
    let slabs = series.slabs();
    let mut parts = Vec::with_capacity(ranges.len());
    for (index, range) in ranges.into_iter().enumerate() {
        let run = &slabs[range.clone()];
        let corridor = corridor(run)?;
        let rects: Vec<Rect> = run.iter().map(|s| s.rect).collect();
        parts.push(BalancedPart {
            index,
            slabs: range,
            polygon: OrthoPolygon::from_monotone_slabs(&rects),
            corridor,
        });
    }
    Ok((parts, cuts))
}

/// Slab ranges of the parts, without materializing part polygons.
pub fn balanced_ranges(series: &SlabSeries, policy: CutPolicy) -> Result<(Vec<Range<usize>>, Vec<CutReport>)> {
    if !series.is_path() {
        return Err(Error::NotPathPolygon);
    }
    let m = series.len();
    let mut is_min = alloc::vec![false; m];
    for i in local_minima(series)? {
        is_min[i] = true;
    }
    let mut ranges = Vec::new();
    let mut cuts = Vec::new();
    let mut start = 0;
    while start < m {
        let (mut min_u, mut max_l) = (series.upper(start), series.lower(start));
        let mut i = start + 1;
        while i < m {
            let (u, l) = (min_u.min(series.upper(i)), max_l.max(series.lower(i)));
            if u < l {
                break;
            }
            min_u = u;
            max_l = l;
            i += 1;
        }
        if i == m {
            ranges.push(start..m);
            break;
        }
        let cut = i - 1;
        let defer = policy == CutPolicy::DeferAfterLocalMinimum && cut >= start + 2 && is_min[cut - 1];
        let report = if defer {
            CutReport {
                cut_slab: cut,
                assignment: Assignment::NextPart,
                reason: CutReason::LocalMinimumBefore,
            }
        } else {
            CutReport {
                cut_slab: cut,
                assignment: Assignment::CurrentPart,
                reason: CutReason::Default,
            }
        };
        let end = if defer { cut } else { i };
        ranges.push(start..end);
        cuts.push(report);
        start = end;
    }
    Ok((ranges, cuts))
}

impl OrthoPolygon {
    /// Boundary of the union of slabs that form an x-monotone chain
    /// (consecutive slabs share a vertical segment of positive length).
    /// The slabs may be given left to right or right to left.
    pub fn from_monotone_slabs(slabs: &[Rect]) -> OrthoPolygon {
        assert!(!slabs.is_empty());
        let reversed;
        let rs: &[Rect] = if slabs.len() > 1 && slabs[0].lo.x > slabs[1].lo.x {
            reversed = slabs.iter().rev().copied().collect::<Vec<_>>();
            &reversed
        } else {
            slabs
        };
        let mut v = Vec::with_capacity(2 * rs.len() + 2);
        v.push(rs[0].lo);
        for (k, r) in rs.iter().enumerate() {
            let next = rs.get(k + 1).map(|n| n.lo.y);
            if next != Some(r.lo.y) {
                v.push(Point::new(r.hi.x, r.lo.y));
                if let Some(l) = next {
                    v.push(Point::new(r.hi.x, l));
                }
            }
        }
        v.push(rs[rs.len() - 1].hi);
        for k in (0..rs.len()).rev() {
            let r = rs[k];
            let prev = k.checked_sub(1).map(|p| rs[p].hi.y);
            if prev != Some(r.hi.y) {
                v.push(Point::new(r.lo.x, r.hi.y));
                if let Some(u) = prev {
                    v.push(Point::new(r.lo.x, u));
                }
            }
        }
        OrthoPolygon::from_ccw_unchecked(v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vdecomp::vertical_decompose;
    use alloc::vec;

    fn series(spans: &[(i64, i64)]) -> SlabSeries {
        SlabSeries::from_path(
            spans
                .iter()
                .enumerate()
                .map(|(i, &(l, u))| Rect::from_bounds(i as i64, l, i as i64 + 1, u))
                .collect(),
        )
    }

    fn ranges(s: &SlabSeries, policy: CutPolicy) -> Vec<Range<usize>> {
        balanced_ranges(s, policy).unwrap().0
    }

    #[test]
    fn square_is_one_part() {
        let p = OrthoPolygon::rectangle(Rect::from_bounds(0, 0, 4, 4)).unwrap();
        let (parts, cuts) = partition_balanced(&vertical_decompose(&p)).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(cuts.is_empty());
        assert_eq!(parts[0].corridor(), Rect::from_bounds(0, 0, 4, 4));
        assert_eq!(parts[0].polygon, p);
    }

    #[test]
    fn cross_corridor() {
        let s = series(&[(1, 2), (0, 3), (1, 2)]);
        let (parts, _) = partition_balanced(&s).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].corridor, Rect::from_bounds(0, 1, 3, 2));
    }

    #[test]
    fn breaks_when_corridor_empties() {
        // up-step then down-step: slab 2 lies entirely above slab 0's top
        let s = series(&[(0, 2), (0, 6), (4, 6)]);
        assert_eq!(ranges(&s, CutPolicy::default()), vec![0..2, 2..3]);
    }

    #[test]
    fn zero_height_corridor_is_balanced() {
        let s = series(&[(0, 2), (1, 3), (2, 4)]);
        let (parts, _) = partition_balanced(&s).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].corridor, Rect::from_bounds(0, 2, 3, 2));
    }

    #[test]
    fn defers_cut_after_local_minimum() {
        let s = series(&[(0, 4), (0, 2), (0, 5), (3, 8)]);
        let (r, cuts) = balanced_ranges(&s, CutPolicy::default()).unwrap();
        assert_eq!(r, vec![0..2, 2..4]);
        assert_eq!(
            cuts,
            vec![CutReport {
                cut_slab: 2,
                assignment: Assignment::NextPart,
                reason: CutReason::LocalMinimumBefore
            }]
        );
        assert_eq!(ranges(&s, CutPolicy::KeepInCurrent), vec![0..3, 3..4]);
    }

    #[test]
    fn first_slab_of_part_never_triggers_deferral() {
        // slab 0 would be the local minimum candidate but it starts the part
        let s = series(&[(0, 2), (0, 5), (3, 8)]);
        assert_eq!(ranges(&s, CutPolicy::default()), vec![0..2, 2..3]);
    }

    #[test]
    fn rejects_non_path() {
        let e = OrthoPolygon::new(
            [(0, 0), (5, 0), (5, 1), (1, 1), (1, 2), (5, 2), (5, 3), (1, 3), (1, 4), (5, 4), (5, 5), (0, 5)]
                .iter()
                .map(|&p| p.into())
                .collect(),
        )
        .unwrap();
        assert_eq!(partition_balanced(&vertical_decompose(&e)), Err(Error::NotPathPolygon));
    }

    #[test]
    fn corridor_errors_on_unbalanced_run() {
        let s = series(&[(0, 2), (0, 6), (4, 6)]);
        assert_eq!(corridor(s.slabs()), Err(Error::EmptyCorridor));
        assert_eq!(corridor(&s.slabs()[..2]), Ok(Rect::from_bounds(0, 0, 2, 2)));
    }

    #[test]
    fn monotone_slab_boundary() {
        let rects = [Rect::from_bounds(0, 0, 1, 4), Rect::from_bounds(1, 0, 2, 2), Rect::from_bounds(2, 1, 3, 5)];
        let p = OrthoPolygon::from_monotone_slabs(&rects);
        assert_eq!(OrthoPolygon::new(p.vertices().to_vec()).unwrap(), p);
        assert_eq!(p.area(), 4 + 2 + 4);
        let back: Vec<Rect> = rects.iter().rev().copied().collect();
        assert_eq!(OrthoPolygon::from_monotone_slabs(&back), p);
        let s = vertical_decompose(&p);
        assert_eq!(s.slabs().iter().map(|s| s.rect).collect::<Vec<_>>(), rects.to_vec());
    }
}
