//! Guard placement inside balanced parts.
//!
//! Every tooth edge needs a guard in its orthogonal shadow. Within a part the
//! shadow of a tooth crosses the whole corridor height, so the admissible
//! positions are `tooth x-range × corridor y-range`. Stabbing those x-ranges
//! with the fewest points gives the part's guard count.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{EdgeKind, HalfPoint, Normal, OrthoPolygon, Point, Rect};
use crate::partition::{partition_with, BalancedPart, CutPolicy, CutReport};
use crate::vdecomp::{vertical_decompose, SlabSeries};

/// Feasible placement rectangle for one guard.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosRegion {
    pub rect: Rect,
    /// Edge indices (into the part polygon) of the teeth this region serves.
    pub source_teeth: Vec<usize>,
    pub part_index: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GuardPlan {
    pub parts: Vec<BalancedPart>,
    pub cuts: Vec<CutReport>,
    pub regions: Vec<PosRegion>,
    /// Center of each region, on the doubled lattice.
    pub guards: Vec<HalfPoint>,
    pub per_part_gn: Vec<usize>,
    pub gn: usize,
}

/// One region per tooth of the part, lower chain first, before merging.
pub fn tooth_positions(part: &BalancedPart) -> Vec<PosRegion> {
    let poly = &part.polygon;
    let (y_lo, y_hi) = (part.corridor.lo.y, part.corridor.hi.y);
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for c in poly.classify_horizontal_edges() {
        if c.kind != EdgeKind::Tooth {
            continue;
        }
        let e = poly.edge(c.edge);
        let region = PosRegion {
            rect: Rect::new(Point::new(e.left().x, y_lo), Point::new(e.right().x, y_hi)),
            source_teeth: alloc::vec![c.edge],
            part_index: part.index,
        };
        match e.normal {
            Normal::Down => lower.push(region),
            _ => upper.push(region),
        }
    }
    lower.extend(upper);
    lower
}

/// Minimum stabbing: sort by left x (then right x) and keep a running
/// intersection; a region that misses it starts a new output region.
pub fn merge_positions(mut regions: Vec<PosRegion>) -> Vec<PosRegion> {
    regions.sort_by_key(|r| (r.rect.lo.x, r.rect.hi.x));
    let mut out: Vec<PosRegion> = Vec::new();
    for r in regions {
        if let Some(cur) = out.last_mut() {
            if let Some(meet) = cur.rect.intersection(&r.rect) {
                cur.rect = meet;
                cur.source_teeth.extend(r.source_teeth);
                continue;
            }
        }
        out.push(r);
    }
    out
}

pub fn plan_guards(p: &OrthoPolygon) -> Result<GuardPlan> {
    plan_guards_with(p, CutPolicy::default())
}

pub fn plan_guards_with(p: &OrthoPolygon, policy: CutPolicy) -> Result<GuardPlan> {
    let series = vertical_decompose(p);
    plan_series(&series, policy)
}

/// Guard plan for an already decomposed polygon.
pub fn plan_series(series: &SlabSeries, policy: CutPolicy) -> Result<GuardPlan> {
    if !series.is_path() {
        return Err(Error::NotPathPolygon);
    }
    let (parts, cuts) = partition_with(series, policy)?;
    Ok(guard_parts(parts, cuts))
}

/// Places guards in already partitioned parts.
pub fn guard_parts(parts: Vec<BalancedPart>, cuts: Vec<CutReport>) -> GuardPlan {
    let mut regions = Vec::new();
    let mut per_part_gn = Vec::with_capacity(parts.len());
    for part in &parts {
        let merged = merge_positions(tooth_positions(part));
        per_part_gn.push(merged.len());
        regions.extend(merged);
    }
    let guards: Vec<HalfPoint> = regions.iter().map(|r| r.rect.center()).collect();
    GuardPlan {
        gn: regions.len(),
        parts,
        cuts,
        regions,
        guards,
        per_part_gn,
    }
}
