//! JSON documents for polygons and guard plans.

use pathguard_core::partition::{Assignment, CutReason};
use pathguard_core::{GuardPlan, OrthoPolygon, Point, Rect};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolygonFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<[i64; 2]>,
}

impl PolygonFile {
    pub fn from_polygon(p: &OrthoPolygon, name: Option<String>) -> Self {
        PolygonFile {
            name,
            vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn polygon(&self) -> Result<OrthoPolygon, CliError> {
        let raw = self.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect();
        Ok(OrthoPolygon::new(raw)?)
    }

    /// Compact JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("polygon serializes");
        s.push('\n');
        s
    }
}

pub type RectJson = [[i64; 2]; 2];

fn rect_json(r: &Rect) -> RectJson {
    [[r.lo.x, r.lo.y], [r.hi.x, r.hi.y]]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegionJson {
    pub rect: RectJson,
    pub part: usize,
    pub teeth: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartJson {
    pub index: usize,
    /// Half-open slab range `[start, end)`.
    pub slabs: [usize; 2],
    pub corridor: RectJson,
    pub gn: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutJson {
    pub cut_slab: usize,
    pub assignment: String,
    pub reason: String,
}

/// Guard coordinates are on the doubled lattice; `scale` is always 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanFile {
    pub gn: usize,
    pub scale: u32,
    pub guards: Vec<[i64; 2]>,
    pub regions: Vec<RegionJson>,
    pub parts: Vec<PartJson>,
    pub cut_reports: Vec<CutJson>,
}

impl PlanFile {
    pub fn from_plan(plan: &GuardPlan) -> Self {
        PlanFile {
            gn: plan.gn,
            scale: 2,
            guards: plan.guards.iter().map(|g| [g.x2, g.y2]).collect(),
            regions: plan
                .regions
                .iter()
                .map(|r| RegionJson {
                    rect: rect_json(&r.rect),
                    part: r.part_index,
                    teeth: r.source_teeth.clone(),
                })
                .collect(),
            parts: plan
                .parts
                .iter()
                .zip(&plan.per_part_gn)
                .map(|(p, &gn)| PartJson {
                    index: p.index,
                    slabs: [p.slabs.start, p.slabs.end],
                    corridor: rect_json(&p.corridor),
                    gn,
                })
                .collect(),
            cut_reports: plan
                .cuts
                .iter()
                .map(|c| CutJson {
                    cut_slab: c.cut_slab,
                    assignment: match c.assignment {
                        Assignment::CurrentPart => "current_part",
                        Assignment::NextPart => "next_part",
                    }
                    .into(),
                    reason: match c.reason {
                        CutReason::LocalMinimumBefore => "rcut_minus_1_local_min",
                        CutReason::Default => "default",
                    }
                    .into(),
                })
                .collect(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let plan: PlanFile = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        if plan.scale != 2 || plan.gn != plan.guards.len() || plan.gn != plan.regions.len() {
            return Err(CliError::Parse("inconsistent plan document".into()));
        }
        Ok(plan)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("plan serializes");
        s.push('\n');
        s
    }
}
