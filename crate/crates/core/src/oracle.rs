//! Brute-force ground truth at pixel granularity.
//!
//! Visibility of a pixel interior from a fixed guard is all-or-nothing, so a
//! guard set covers the polygon iff every pixel is fully r-visible from one
//! guard. Candidates are the half-lattice points of the pixel grid: pixel
//! centers, grid vertices and grid-edge midpoints. Every other point sees
//! exactly what the candidate of its grid face sees.
//!
//! Containment here is evaluated on the grid itself (prefix sums over the
//! half-lattice), independently of the edge-based predicates in `geom`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{HalfPoint, OrthoPolygon, Rect};
use crate::vdecomp::PixelGrid;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Largest number of inside pixels the oracle accepts.
    pub max_pixels: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget { max_pixels: 400 }
    }
}

/// Closed containment on the half-lattice of a pixel grid.
struct HalfGrid {
    x_cuts: Vec<i64>,
    y_cuts: Vec<i64>,
    w: usize,
    h: usize,
    /// (w + 1) x (h + 1) prefix sums of outside half-lattice points.
    out_prefix: Vec<u32>,
}

impl HalfGrid {
    fn new(grid: &PixelGrid) -> Self {
        let (cols, rows) = (grid.cols(), grid.rows());
        let (w, h) = (2 * cols + 1, 2 * rows + 1);
        let cell = |i: isize, j: isize| {
            i >= 0 && j >= 0 && (i as usize) < cols && (j as usize) < rows && grid.is_inside(i as usize, j as usize)
        };
        let mut out_prefix = vec![0u32; (w + 1) * (h + 1)];
        for a in 0..w {
            for b in 0..h {
                // cells whose closure contains this half-lattice point
                let ci: &[isize] = &if a % 2 == 1 {
                    [(a / 2) as isize, (a / 2) as isize]
                } else {
                    [(a / 2) as isize - 1, (a / 2) as isize]
                };
                let cj: &[isize] = &if b % 2 == 1 {
                    [(b / 2) as isize, (b / 2) as isize]
                } else {
                    [(b / 2) as isize - 1, (b / 2) as isize]
                };
                let inside = ci.iter().any(|&i| cj.iter().any(|&j| cell(i, j)));
                let v = (!inside) as u32;
                out_prefix[(a + 1) * (h + 1) + b + 1] =
                    v + out_prefix[a * (h + 1) + b + 1] + out_prefix[(a + 1) * (h + 1) + b] - out_prefix[a * (h + 1) + b];
            }
        }
        HalfGrid {
            x_cuts: grid.x_cuts.clone(),
            y_cuts: grid.y_cuts.clone(),
            w,
            h,
            out_prefix,
        }
    }

    /// Half-lattice index of a doubled coordinate; `None` outside the grid.
    fn index(cuts: &[i64], v2: i64) -> Option<usize> {
        match cuts.binary_search_by(|c| (2 * c).cmp(&v2)) {
            Ok(i) => Some(2 * i),
            Err(i) if i == 0 || i == cuts.len() => None,
            Err(i) => Some(2 * i - 1),
        }
    }

    fn coord(cuts: &[i64], idx: usize) -> i64 {
        if idx.is_multiple_of(2) {
            2 * cuts[idx / 2]
        } else {
            cuts[idx / 2] + cuts[idx / 2 + 1]
        }
    }

    fn locate(&self, p: HalfPoint) -> Option<(usize, usize)> {
        Some((Self::index(&self.x_cuts, p.x2)?, Self::index(&self.y_cuts, p.y2)?))
    }

    /// True iff the closed index box `[a0, a1] x [b0, b1]` lies in the polygon.
    fn box_inside(&self, a0: usize, a1: usize, b0: usize, b1: usize) -> bool {
        let s = |a: usize, b: usize| self.out_prefix[a * (self.h + 1) + b];
        s(a1 + 1, b1 + 1) + s(a0, b0) == s(a0, b1 + 1) + s(a1 + 1, b0)
    }

    fn point_inside(&self, a: usize, b: usize) -> bool {
        self.box_inside(a, a, b, b)
    }

    /// Does the candidate at `(a, b)` see all of pixel `(i, j)`?
    fn sees_pixel(&self, (a, b): (usize, usize), (i, j): (usize, usize)) -> bool {
        self.box_inside(a.min(2 * i), a.max(2 * i + 2), b.min(2 * j), b.max(2 * j + 2))
    }
}

/// Fixed-width bit rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn zeros(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn ones(n: usize) -> Self {
        let mut b = Bits::zeros(n);
        for i in 0..n {
            b.set(i);
        }
        b
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }

    fn and_count(&self, other: &Bits) -> u32 {
        self.0.iter().zip(&other.0).map(|(a, b)| (a & b).count_ones()).sum()
    }

    fn minus(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & !b).collect())
    }

    fn union_with(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a |= b;
        }
    }

    fn ones_iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
        })
    }
}

/// Candidate-by-pixel full-visibility relation.
#[derive(Debug, Clone)]
pub struct VisibilityMatrix {
    pub candidates: Vec<HalfPoint>,
    pub pixels: Vec<Rect>,
    rows: Vec<Bits>,
}

impl VisibilityMatrix {
    pub fn covers(&self, candidate: usize, pixel: usize) -> bool {
        self.rows[candidate].get(pixel)
    }

    /// Pixels fully visible from a candidate.
    pub fn covered_by(&self, candidate: usize) -> impl Iterator<Item = usize> + '_ {
        self.rows[candidate].ones_iter()
    }
}

fn check_budget(grid: &PixelGrid, budget: OracleBudget) -> Result<()> {
    let pixels = grid.inside_count();
    if pixels > budget.max_pixels {
        return Err(Error::BudgetExceeded {
            pixels,
            budget: budget.max_pixels,
        });
    }
    Ok(())
}

pub fn pixel_visibility(p: &OrthoPolygon, budget: OracleBudget) -> Result<VisibilityMatrix> {
    let grid = PixelGrid::new(p);
    check_budget(&grid, budget)?;
    let hg = HalfGrid::new(&grid);
    let cells: Vec<(usize, usize)> = grid.inside_cells().collect();
    let pixels = cells.iter().map(|&(i, j)| grid.cell(i, j)).collect();
    let mut candidates = Vec::new();
    let mut rows = Vec::new();
    for a in 0..hg.w {
        for b in 0..hg.h {
            if !hg.point_inside(a, b) {
                continue;
            }
            let mut row = Bits::zeros(cells.len());
            for (k, &c) in cells.iter().enumerate() {
                if hg.sees_pixel((a, b), c) {
                    row.set(k);
                }
            }
            candidates.push(HalfPoint::new(HalfGrid::coord(&hg.x_cuts, a), HalfGrid::coord(&hg.y_cuts, b)));
            rows.push(row);
        }
    }
    Ok(VisibilityMatrix {
        candidates,
        pixels,
        rows,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverReport {
    pub covered: bool,
    pub uncovered_pixels: Vec<Rect>,
}

/// Checks that every pixel is fully r-visible from at least one guard.
pub fn verify_cover(p: &OrthoPolygon, guards: &[HalfPoint]) -> Result<CoverReport> {
    let grid = PixelGrid::new(p);
    let hg = HalfGrid::new(&grid);
    let located: Vec<(usize, usize)> = guards
        .iter()
        .map(|&g| match hg.locate(g) {
            Some((a, b)) if hg.point_inside(a, b) => Ok((a, b)),
            _ => Err(Error::PointOutside),
        })
        .collect::<Result<_>>()?;
    let uncovered_pixels: Vec<Rect> = grid
        .inside_cells()
        .filter(|&c| !located.iter().any(|&g| hg.sees_pixel(g, c)))
        .map(|(i, j)| grid.cell(i, j))
        .collect();
    Ok(CoverReport {
        covered: uncovered_pixels.is_empty(),
        uncovered_pixels,
    })
}

/// Exact minimum number of r-guards.
pub fn min_guards_exact(p: &OrthoPolygon, budget: OracleBudget) -> Result<usize> {
    Ok(min_guard_set_exact(p, budget)?.len())
}

/// A minimum guard set, as candidate points.
pub fn min_guard_set_exact(p: &OrthoPolygon, budget: OracleBudget) -> Result<Vec<HalfPoint>> {
    let m = pixel_visibility(p, budget)?;
    let chosen = SetCover::new(&m).solve();
    Ok(chosen.into_iter().map(|c| m.candidates[c]).collect())
}

struct SetCover {
    /// Surviving candidate ids (into the matrix) and their pixel rows.
    ids: Vec<usize>,
    rows: Vec<Bits>,
    /// For each pixel, the candidates (positions in `rows`) that see it.
    cols: Vec<Bits>,
    /// Pixels still relevant after dominance reduction.
    universe: Bits,
    npix: usize,
}

impl SetCover {
    fn new(m: &VisibilityMatrix) -> Self {
        let npix = m.pixels.len();
        // drop duplicate rows, then rows contained in another row
        let mut order: Vec<usize> = (0..m.rows.len()).collect();
        order.sort_by(|&a, &b| m.rows[b].count().cmp(&m.rows[a].count()).then(m.rows[a].cmp(&m.rows[b])));
        let mut ids: Vec<usize> = Vec::new();
        for c in order {
            if m.rows[c].is_zero() || ids.iter().any(|&k| m.rows[c].is_subset(&m.rows[k])) {
                continue;
            }
            ids.push(c);
        }
        let rows: Vec<Bits> = ids.iter().map(|&c| m.rows[c].clone()).collect();
        let mut cols = vec![Bits::zeros(rows.len()); npix];
        for (k, row) in rows.iter().enumerate() {
            for px in row.ones_iter() {
                cols[px].set(k);
            }
        }
        // a pixel whose candidate set contains another pixel's set is
        // covered whenever that other pixel is
        let mut universe = Bits::ones(npix);
        for a in 0..npix {
            for b in 0..npix {
                if a != b
                    && universe.get(b)
                    && cols[b].is_subset(&cols[a])
                    && (cols[a] != cols[b] || b < a)
                {
                    universe.0[a / 64] &= !(1 << (a % 64));
                    break;
                }
            }
        }
        SetCover {
            ids,
            rows,
            cols,
            universe,
            npix,
        }
    }

    fn greedy(&self) -> Vec<usize> {
        let mut left = self.universe.clone();
        let mut picked = Vec::new();
        while !left.is_zero() {
            let best = (0..self.rows.len()).max_by_key(|&k| (self.rows[k].and_count(&left), usize::MAX - k)).unwrap();
            picked.push(best);
            left = left.minus(&self.rows[best]);
        }
        picked
    }

    /// Pixels whose candidate sets are pairwise disjoint each need their own guard.
    fn packing_bound(&self, left: &Bits) -> usize {
        let mut pix: Vec<usize> = left.ones_iter().collect();
        pix.sort_by_key(|&p| self.cols[p].count());
        let mut used = Bits::zeros(self.rows.len());
        let mut bound = 0;
        for p in pix {
            if !self.cols[p].intersects(&used) {
                used.union_with(&self.cols[p]);
                bound += 1;
            }
        }
        bound
    }

    fn search(&self, left: &Bits, depth: usize, picked: &mut Vec<usize>) -> bool {
        if left.is_zero() {
            return true;
        }
        if depth == 0 || self.packing_bound(left) > depth {
            return false;
        }
        // branch on the hardest pixel; a pixel with one candidate forces it
        let pivot = left.ones_iter().min_by_key(|&p| self.cols[p].count()).unwrap();
        let mut options: Vec<usize> = self.cols[pivot].ones_iter().collect();
        options.sort_by_key(|&k| core::cmp::Reverse(self.rows[k].and_count(left)));
        for k in options {
            picked.push(k);
            if self.search(&left.minus(&self.rows[k]), depth - 1, picked) {
                return true;
            }
            picked.pop();
        }
        false
    }

    /// Iterative deepening from the packing bound up to the greedy size.
    fn solve(&self) -> Vec<usize> {
        debug_assert!(self.npix == 0 || !self.universe.is_zero());
        let greedy = self.greedy();
        let mut k = self.packing_bound(&self.universe);
        while k < greedy.len() {
            let mut picked = Vec::new();
            if self.search(&self.universe, k, &mut picked) {
                return picked.into_iter().map(|i| self.ids[i]).collect();
            }
            k += 1;
        }
        greedy.into_iter().map(|i| self.ids[i]).collect()
    }
}
