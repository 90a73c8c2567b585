//! Vertical decomposition into slabs, its dual graph, and the full pixel grid.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::geom::{OrthoPolygon, Point, Rect};

/// One rectangle of the vertical decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slab {
    pub rect: Rect,
    /// Position in the series, 0-based.
    pub index: usize,
}

impl Slab {
    /// y of the upper edge `u_i`.
    pub fn upper(&self) -> i64 {
        self.rect.hi.y
    }

    /// y of the lower edge `l_i`.
    pub fn lower(&self) -> i64 {
        self.rect.lo.y
    }

    pub fn height(&self) -> i64 {
        self.rect.height()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualShape {
    Path,
    Tree,
    Other,
}

/// Vertical segment shared by two consecutive slabs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SharedSegment {
    pub x: i64,
    pub y0: i64,
    pub y1: i64,
}

/// Slabs of a vertical decomposition.
///
/// When the dual graph is a path the slabs are stored in path order from the
/// first rectangle to the last one, and `shared[i]` is the doorway between
/// slab `i` and slab `i + 1`. The first rectangle is the path end whose
/// lower-left corner is lexicographically smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlabSeries {
    slabs: Vec<Slab>,
    links: Vec<(usize, usize)>,
    shared: Vec<SharedSegment>,
    shape: DualShape,
}

impl SlabSeries {
    pub fn slabs(&self) -> &[Slab] {
        &self.slabs
    }

    pub fn len(&self) -> usize {
        self.slabs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slabs.is_empty()
    }

    pub fn upper(&self, i: usize) -> i64 {
        self.slabs[i].upper()
    }

    pub fn lower(&self, i: usize) -> i64 {
        self.slabs[i].lower()
    }

    /// Dual graph edges as slab index pairs.
    pub fn links(&self) -> &[(usize, usize)] {
        &self.links
    }

    pub fn shared(&self) -> &[SharedSegment] {
        &self.shared
    }

    pub fn dual_shape(&self) -> DualShape {
        self.shape
    }

    pub fn is_path(&self) -> bool {
        self.shape == DualShape::Path
    }

    pub fn total_area(&self) -> i128 {
        self.slabs.iter().map(|s| s.rect.area()).sum()
    }

    /// Builds a series from slabs already in path order. Consecutive slabs
    /// must share a vertical segment of positive length.
    pub(crate) fn from_path(slabs: Vec<Rect>) -> Self {
        let slabs: Vec<Slab> = slabs
            .into_iter()
            .enumerate()
            .map(|(index, rect)| Slab { rect, index })
            .collect();
        let shared = slabs
            .windows(2)
            .map(|w| doorway(&w[0].rect, &w[1].rect).expect("consecutive slabs must touch"))
            .collect();
        let links = (1..slabs.len()).map(|i| (i - 1, i)).collect();
        SlabSeries {
            slabs,
            links,
            shared,
            shape: DualShape::Path,
        }
    }
}

fn doorway(a: &Rect, b: &Rect) -> Option<SharedSegment> {
    let x = if a.hi.x == b.lo.x {
        a.hi.x
    } else if b.hi.x == a.lo.x {
        a.lo.x
    } else {
        return None;
    };
    let (y0, y1) = (a.lo.y.max(b.lo.y), a.hi.y.min(b.hi.y));
    (y0 < y1).then_some(SharedSegment { x, y0, y1 })
}

struct Open {
    hi: i64,
    id: usize,
}

/// Sweeps vertical edges left to right, keeping the cross-section of the
/// polygon as a set of disjoint y-intervals. An interval touched by an edge
/// at the current x closes its slab; the recomputed intervals open new ones.
/// All edges at one x are applied together, so coincident vertical edges
/// need no special ordering.
pub fn vertical_decompose(p: &OrthoPolygon) -> SlabSeries {
    let mut walls: Vec<(i64, i64, i64)> = p
        .edges()
        .filter(|e| !e.is_horizontal())
        .map(|e| {
            let (a, b) = e.span();
            (e.level(), a, b)
        })
        .collect();
    walls.sort_unstable();

    let mut active: BTreeMap<i64, Open> = BTreeMap::new();
    // rects are created when a slab opens; hi.x is fixed when it closes
    let mut slabs: Vec<Rect> = Vec::with_capacity(p.len() / 2);
    let mut links: Vec<(usize, usize)> = Vec::new();

    let mut touched: Vec<(i64, i64)> = Vec::new();
    let mut marks: Vec<(i64, i8)> = Vec::new();
    let mut fresh: Vec<(i64, i64)> = Vec::new();
    let mut closed: Vec<(i64, i64, usize)> = Vec::new();
    let mut start = 0;
    while start < walls.len() {
        let x = walls[start].0;
        let mut end = start;
        while end < walls.len() && walls[end].0 == x {
            end += 1;
        }
        let group = &walls[start..end];
        start = end;

        touched.clear();
        for &(_, a, b) in group {
            for (&lo, open) in active.range(..=b).rev() {
                if open.hi < a {
                    break;
                }
                touched.push((lo, open.hi));
            }
        }
        touched.sort_unstable();
        touched.dedup();

        // new cross-section over the touched range = old XOR walls
        marks.clear();
        for &(lo, hi) in &touched {
            marks.push((lo, 1));
            marks.push((hi, -1));
        }
        for &(_, a, b) in group {
            marks.push((a, 2));
            marks.push((b, -2));
        }
        marks.sort_unstable();
        fresh.clear();
        let (mut old, mut wall) = (0i32, 0i32);
        let mut run_start: Option<i64> = None;
        let mut k = 0;
        while k < marks.len() {
            let y = marks[k].0;
            while k < marks.len() && marks[k].0 == y {
                match marks[k].1 {
                    1 => old += 1,
                    -1 => old -= 1,
                    2 => wall += 1,
                    _ => wall -= 1,
                }
                k += 1;
            }
            let inside = (old > 0) != (wall > 0);
            match (run_start, inside) {
                (None, true) => run_start = Some(y),
                (Some(s), false) => {
                    fresh.push((s, y));
                    run_start = None;
                }
                _ => {}
            }
        }

        closed.clear();
        for &(lo, hi) in &touched {
            let open = active.remove(&lo).expect("touched interval is active");
            slabs[open.id].hi.x = x;
            closed.push((lo, hi, open.id));
        }
        let first_new = slabs.len();
        for (k, &(lo, hi)) in fresh.iter().enumerate() {
            slabs.push(Rect::new(Point::new(x, lo), Point::new(x, hi)));
            active.insert(lo, Open { hi, id: first_new + k });
        }

        // both lists are sorted by y; doorways need positive overlap
        let (mut i, mut j) = (0, 0);
        while i < closed.len() && j < fresh.len() {
            let (a0, a1, id) = closed[i];
            let (b0, b1) = fresh[j];
            if a0.max(b0) < a1.min(b1) {
                links.push((id, first_new + j));
            }
            if a1 < b1 {
                i += 1;
            } else {
                j += 1;
            }
        }
    }
    debug_assert!(active.is_empty());
    finish(slabs, links)
}

fn finish(rects: Vec<Rect>, links: Vec<(usize, usize)>) -> SlabSeries {
    let m = rects.len();
    let mut degree = vec![0usize; m];
    let mut adj = vec![[usize::MAX; 2]; m];
    for &(a, b) in &links {
        for (u, v) in [(a, b), (b, a)] {
            if degree[u] < 2 {
                adj[u][degree[u]] = v;
            }
            degree[u] += 1;
        }
    }
    let tree = links.len() + 1 == m && connected(m, &links);
    let shape = match (tree, degree.iter().all(|&d| d <= 2)) {
        (true, true) => DualShape::Path,
        (true, false) => DualShape::Tree,
        _ => DualShape::Other,
    };

    if shape != DualShape::Path {
        let slabs = rects
            .into_iter()
            .enumerate()
            .map(|(index, rect)| Slab { rect, index })
            .collect();
        return SlabSeries {
            slabs,
            links,
            shared: Vec::new(),
            shape,
        };
    }

    let first = (0..m)
        .filter(|&i| degree[i] <= 1)
        .min_by_key(|&i| (rects[i].lo, rects[i].hi))
        .expect("a path has an end");
    let mut order = Vec::with_capacity(m);
    let (mut prev, mut cur) = (usize::MAX, first);
    loop {
        order.push(cur);
        match adj[cur].iter().copied().find(|&v| v != usize::MAX && v != prev) {
            Some(v) => {
                prev = cur;
                cur = v;
            }
            None => break,
        }
    }
    debug_assert_eq!(order.len(), m);
    SlabSeries::from_path(order.into_iter().map(|i| rects[i]).collect())
}

fn connected(m: usize, links: &[(usize, usize)]) -> bool {
    if m == 0 {
        return false;
    }
    let mut adj = vec![Vec::new(); m];
    for &(a, b) in links {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; m];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count == m
}

/// True iff the dual graph is a simple path (a single slab counts).
pub fn is_path_polygon(series: &SlabSeries) -> bool {
    series.is_path()
}

/// Slabs strictly shorter than both neighbours in the path order.
pub fn local_minima(series: &SlabSeries) -> Result<Vec<usize>> {
    if !series.is_path() {
        return Err(Error::NotPathPolygon);
    }
    let s = series.slabs();
    Ok((1..s.len().saturating_sub(1))
        .filter(|&i| s[i].height() < s[i - 1].height() && s[i].height() < s[i + 1].height())
        .collect())
}

/// Full decomposition by every vertex line, with each cell marked inside or
/// outside by parity of the horizontal edges spanning its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PixelGrid {
    pub x_cuts: Vec<i64>,
    pub y_cuts: Vec<i64>,
    /// Column-major: cell `(i, j)` is at `i * rows + j`.
    inside: Vec<bool>,
}

impl PixelGrid {
    pub fn new(p: &OrthoPolygon) -> Self {
        let mut x_cuts: Vec<i64> = p.vertices().iter().map(|v| v.x).collect();
        let mut y_cuts: Vec<i64> = p.vertices().iter().map(|v| v.y).collect();
        x_cuts.sort_unstable();
        x_cuts.dedup();
        y_cuts.sort_unstable();
        y_cuts.dedup();
        let (cols, rows) = (x_cuts.len() - 1, y_cuts.len() - 1);
        let mut inside = vec![false; cols * rows];
        let horizontals: Vec<(i64, i64, i64)> = p
            .edges()
            .filter(|e| e.is_horizontal())
            .map(|e| {
                let (a, b) = e.span();
                (a, b, e.level())
            })
            .collect();
        let mut levels: Vec<i64> = Vec::new();
        for i in 0..cols {
            let (x0, x1) = (x_cuts[i], x_cuts[i + 1]);
            levels.clear();
            levels.extend(horizontals.iter().filter(|h| h.0 <= x0 && x1 <= h.1).map(|h| h.2));
            levels.sort_unstable();
            for pair in levels.chunks_exact(2) {
                let j0 = y_cuts.binary_search(&pair[0]).unwrap();
                let j1 = y_cuts.binary_search(&pair[1]).unwrap();
                for j in j0..j1 {
                    inside[i * rows + j] = true;
                }
            }
        }
        PixelGrid {
            x_cuts,
            y_cuts,
            inside,
        }
    }

    pub fn cols(&self) -> usize {
        self.x_cuts.len() - 1
    }

    pub fn rows(&self) -> usize {
        self.y_cuts.len() - 1
    }

    pub fn is_inside(&self, i: usize, j: usize) -> bool {
        self.inside[i * self.rows() + j]
    }

    pub fn cell(&self, i: usize, j: usize) -> Rect {
        Rect::new(
            Point::new(self.x_cuts[i], self.y_cuts[j]),
            Point::new(self.x_cuts[i + 1], self.y_cuts[j + 1]),
        )
    }

    /// Inside cells as `(column, row)` pairs, column-major.
    pub fn inside_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let rows = self.rows();
        self.inside
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(move |(k, _)| (k / rows, k % rows))
    }

    pub fn inside_count(&self) -> usize {
        self.inside.iter().filter(|&&b| b).count()
    }

    pub fn inside_area(&self) -> i128 {
        self.inside_cells().map(|(i, j)| self.cell(i, j).area()).sum()
    }
}

pub fn pixel_grid(p: &OrthoPolygon) -> PixelGrid {
    PixelGrid::new(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> OrthoPolygon {
        OrthoPolygon::new(pts.iter().map(|&p| p.into()).collect()).unwrap()
    }

    fn rects(s: &SlabSeries) -> Vec<Rect> {
        s.slabs().iter().map(|s| s.rect).collect()
    }

    #[test]
    fn square_is_one_slab() {
        let s = vertical_decompose(&poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]));
        assert_eq!(rects(&s), vec![Rect::from_bounds(0, 0, 4, 4)]);
        assert!(is_path_polygon(&s));
        assert_eq!(local_minima(&s).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn ell_two_slabs() {
        let p = poly(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]);
        let s = vertical_decompose(&p);
        assert_eq!(rects(&s), vec![Rect::from_bounds(0, 0, 2, 4), Rect::from_bounds(2, 0, 4, 2)]);
        assert_eq!(s.len(), p.len() / 2 - 1);
        assert_eq!(s.shared(), &[SharedSegment { x: 2, y0: 0, y1: 2 }]);
        assert_eq!(s.total_area(), p.area());
    }

    #[test]
    fn dual_shapes() {
        // comb hanging from a bar: tall and short slabs alternate in a chain
        let p = poly(&[(0, 0), (1, 0), (1, 2), (2, 2), (2, 0), (3, 0), (3, 2), (4, 2), (4, 3), (0, 3)]);
        let s = vertical_decompose(&p);
        assert_eq!(s.total_area(), p.area());
        assert!(is_path_polygon(&s));
        // C shape: two arms attached to the same side of a bar, still a path
        let c = poly(&[(0, 0), (5, 0), (5, 1), (1, 1), (1, 4), (5, 4), (5, 5), (0, 5)]);
        let s = vertical_decompose(&c);
        assert!(is_path_polygon(&s));
        assert_eq!(s.len(), 3);
        // T shape: the stem slab touches three slabs
        let t = poly(&[(0, 2), (1, 2), (1, 0), (2, 0), (2, 2), (3, 2), (3, 3), (2, 3), (2, 5), (1, 5), (1, 3), (0, 3)]);
        let s = vertical_decompose(&t);
        assert_eq!(s.total_area(), t.area());
        assert!(is_path_polygon(&s));
        // E shape: a bar with three arms to the right is a star
        let e = poly(&[
            (0, 0),
            (5, 0),
            (5, 1),
            (1, 1),
            (1, 2),
            (5, 2),
            (5, 3),
            (1, 3),
            (1, 4),
            (5, 4),
            (5, 5),
            (0, 5),
        ]);
        let s = vertical_decompose(&e);
        assert_eq!(s.dual_shape(), DualShape::Tree);
        assert!(!is_path_polygon(&s));
        assert_eq!(local_minima(&s), Err(Error::NotPathPolygon));
    }

    #[test]
    fn cross_is_a_path() {
        let p = poly(&[(1, 0), (2, 0), (2, 1), (3, 1), (3, 2), (2, 2), (2, 3), (1, 3), (1, 2), (0, 2), (0, 1), (1, 1)]);
        let s = vertical_decompose(&p);
        assert!(is_path_polygon(&s));
        assert_eq!(
            rects(&s),
            vec![
                Rect::from_bounds(0, 1, 1, 2),
                Rect::from_bounds(1, 0, 2, 3),
                Rect::from_bounds(2, 1, 3, 2)
            ]
        );
    }

    #[test]
    fn local_minima_definition() {
        let series = |spans: &[(i64, i64)]| {
            SlabSeries::from_path(
                spans
                    .iter()
                    .enumerate()
                    .map(|(i, &(l, u))| Rect::from_bounds(i as i64, l, i as i64 + 1, u))
                    .collect(),
            )
        };
        assert_eq!(local_minima(&series(&[(0, 4), (0, 2), (0, 4)])).unwrap(), vec![1]);
        assert!(local_minima(&series(&[(0, 4), (0, 2), (1, 3), (0, 4)])).unwrap().is_empty());
    }

    #[test]
    fn coincident_vertical_edges() {
        // walls of the left slab and of the arm share x = 2
        let p = poly(&[(0, 0), (2, 0), (2, 1), (4, 1), (4, 3), (2, 3), (2, 4), (0, 4)]);
        let s = vertical_decompose(&p);
        assert_eq!(rects(&s), vec![Rect::from_bounds(0, 0, 2, 4), Rect::from_bounds(2, 1, 4, 3)]);
    }

    #[test]
    fn pixel_grids() {
        let sq = pixel_grid(&poly(&[(0, 0), (4, 0), (4, 4), (0, 4)]));
        assert_eq!((sq.cols(), sq.rows(), sq.inside_count()), (1, 1, 1));
        let l = pixel_grid(&poly(&[(0, 0), (4, 0), (4, 2), (2, 2), (2, 4), (0, 4)]));
        assert_eq!((l.cols(), l.rows(), l.inside_count()), (2, 2, 3));
        assert_eq!(l.inside_area(), 12);
        assert!(!l.is_inside(1, 1));
    }
}
