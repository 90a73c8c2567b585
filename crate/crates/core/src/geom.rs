//! Integer lattice geometry for orthogonal polygons.
//!
//! All predicates are exact and use closed-set semantics: a point on the
//! boundary is inside, and a rectangle touching the boundary from the inside
//! is contained.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::{Error, Result};
use crate::vdecomp::vertical_decompose;

/// Largest accepted absolute coordinate. Predicates evaluate on lattices
/// scaled by up to four, which must not overflow `i64`.
pub const COORD_LIMIT: i64 = 1 << 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub const fn doubled(self) -> HalfPoint {
        HalfPoint {
            x2: self.x * 2,
            y2: self.y * 2,
        }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Point { x, y }
    }
}

/// A point on the half-integer lattice, stored with doubled coordinates so
/// that midpoints of lattice segments stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPoint {
    pub x2: i64,
    pub y2: i64,
}

impl HalfPoint {
    pub const fn new(x2: i64, y2: i64) -> Self {
        HalfPoint { x2, y2 }
    }

    /// The lattice point, if both coordinates are integral.
    pub fn to_point(self) -> Option<Point> {
        (self.x2 % 2 == 0 && self.y2 % 2 == 0).then(|| Point::new(self.x2 / 2, self.y2 / 2))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

/// Unit normal of an edge, pointing from the interior to the exterior.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Normal {
    Left,
    Right,
    Up,
    Down,
}

/// A boundary edge, directed along the counterclockwise ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Edge {
    pub a: Point,
    pub b: Point,
    pub orientation: Orientation,
    pub normal: Normal,
}

impl Edge {
    fn between(a: Point, b: Point) -> Self {
        // interior lies to the left of a CCW ring, so the outward normal is
        // the right-hand perpendicular of the travel direction
        let (orientation, normal) = if a.y == b.y {
            let n = if b.x < a.x { Normal::Up } else { Normal::Down };
            (Orientation::Horizontal, n)
        } else {
            let n = if b.y > a.y { Normal::Right } else { Normal::Left };
            (Orientation::Vertical, n)
        };
        Edge {
            a,
            b,
            orientation,
            normal,
        }
    }

    pub fn is_horizontal(&self) -> bool {
        self.orientation == Orientation::Horizontal
    }

    /// Endpoint with the smaller x (horizontal edges).
    pub fn left(&self) -> Point {
        if self.a.x <= self.b.x {
            self.a
        } else {
            self.b
        }
    }

    pub fn right(&self) -> Point {
        if self.a.x <= self.b.x {
            self.b
        } else {
            self.a
        }
    }

    /// Endpoint with the larger y (vertical edges).
    pub fn top(&self) -> Point {
        if self.a.y >= self.b.y {
            self.a
        } else {
            self.b
        }
    }

    pub fn down(&self) -> Point {
        if self.a.y >= self.b.y {
            self.b
        } else {
            self.a
        }
    }

    /// The constant coordinate: y for horizontal edges, x for vertical ones.
    pub fn level(&self) -> i64 {
        match self.orientation {
            Orientation::Horizontal => self.a.y,
            Orientation::Vertical => self.a.x,
        }
    }

    /// Closed range of the varying coordinate.
    pub fn span(&self) -> (i64, i64) {
        match self.orientation {
            Orientation::Horizontal => (self.a.x.min(self.b.x), self.a.x.max(self.b.x)),
            Orientation::Vertical => (self.a.y.min(self.b.y), self.a.y.max(self.b.y)),
        }
    }

    pub fn as_rect(&self) -> Rect {
        Rect::spanned(self.a, self.b)
    }
}

/// Closed axis-aligned rectangle; zero width or height is allowed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rect {
    pub lo: Point,
    pub hi: Point,
}

impl Rect {
    /// Panics if `lo` is not componentwise below `hi`.
    pub fn new(lo: Point, hi: Point) -> Self {
        assert!(lo.x <= hi.x && lo.y <= hi.y, "inverted rectangle");
        Rect { lo, hi }
    }

    pub fn spanned(p: Point, q: Point) -> Self {
        Rect {
            lo: Point::new(p.x.min(q.x), p.y.min(q.y)),
            hi: Point::new(p.x.max(q.x), p.y.max(q.y)),
        }
    }

    pub fn from_bounds(x0: i64, y0: i64, x1: i64, y1: i64) -> Self {
        Rect::spanned(Point::new(x0, y0), Point::new(x1, y1))
    }

    pub fn width(&self) -> i64 {
        self.hi.x - self.lo.x
    }

    pub fn height(&self) -> i64 {
        self.hi.y - self.lo.y
    }

    pub fn area(&self) -> i128 {
        self.width() as i128 * self.height() as i128
    }

    pub fn contains(&self, p: Point) -> bool {
        self.lo.x <= p.x && p.x <= self.hi.x && self.lo.y <= p.y && p.y <= self.hi.y
    }

    pub fn contains_half(&self, p: HalfPoint) -> bool {
        2 * self.lo.x <= p.x2 && p.x2 <= 2 * self.hi.x && 2 * self.lo.y <= p.y2 && p.y2 <= 2 * self.hi.y
    }

    pub fn contains_rect(&self, other: &Rect) -> bool {
        self.contains(other.lo) && self.contains(other.hi)
    }

    /// Closed intersection; `None` when the rectangles are disjoint.
    pub fn intersection(&self, other: &Rect) -> Option<Rect> {
        let lo = Point::new(self.lo.x.max(other.lo.x), self.lo.y.max(other.lo.y));
        let hi = Point::new(self.hi.x.min(other.hi.x), self.hi.y.min(other.hi.y));
        (lo.x <= hi.x && lo.y <= hi.y).then_some(Rect { lo, hi })
    }

    /// Exact center on the doubled lattice.
    pub fn center(&self) -> HalfPoint {
        HalfPoint::new(self.lo.x + self.hi.x, self.lo.y + self.hi.y)
    }
}

/// Label of a horizontal edge by the interior angles at its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    /// Both endpoints convex (pi/2).
    Tooth,
    /// Both endpoints reflex (3pi/2).
    Dent,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeClass {
    /// Index into [`OrthoPolygon::edges`].
    pub edge: usize,
    pub kind: EdgeKind,
}

/// A simple orthogonal polygon with a counterclockwise vertex ring.
///
/// Edge `i` runs from vertex `i` to vertex `i + 1` (cyclically).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrthoPolygon {
    vertices: Vec<Point>,
}

impl OrthoPolygon {
    /// Validates a raw vertex ring and normalizes it to counterclockwise order.
    pub fn new(raw: Vec<Point>) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::OddStructure {
                reason: "fewer than four vertices",
            });
        }
        for p in &raw {
            for v in [p.x, p.y] {
                if !(-COORD_LIMIT..=COORD_LIMIT).contains(&v) {
                    return Err(Error::CoordinateRange { value: v });
                }
            }
        }
        let n = raw.len();
        for i in 0..n {
            let (a, b) = (raw[i], raw[(i + 1) % n]);
            if a == b {
                return Err(Error::DegenerateEdge { index: i });
            }
            if a.x != b.x && a.y != b.y {
                return Err(Error::NotRectilinear { index: i });
            }
        }
        if n < 4 {
            return Err(Error::OddStructure {
                reason: "fewer than four vertices",
            });
        }
        if n % 2 == 1 {
            return Err(Error::OddStructure {
                reason: "odd vertex count",
            });
        }
        for i in 0..n {
            let (a, b, c) = (raw[i], raw[(i + 1) % n], raw[(i + 2) % n]);
            if (a.y == b.y) == (b.y == c.y) {
                return Err(Error::OddStructure {
                    reason: "consecutive edges are parallel",
                });
            }
        }
        check_simple(&raw)?;
        let mut vertices = raw;
        if signed_area2(&vertices) < 0 {
            vertices.reverse();
        }
        Ok(OrthoPolygon { vertices })
    }

    /// Wraps a ring that is already known to be a valid CCW orthogonal polygon.
    pub(crate) fn from_ccw_unchecked(vertices: Vec<Point>) -> Self {
        debug_assert!(vertices.len() >= 4 && signed_area2(&vertices) > 0);
        OrthoPolygon { vertices }
    }

    /// Axis-aligned rectangle as a polygon.
    pub fn rectangle(r: Rect) -> Result<Self> {
        OrthoPolygon::new(alloc::vec![
            r.lo,
            Point::new(r.hi.x, r.lo.y),
            r.hi,
            Point::new(r.lo.x, r.hi.y),
        ])
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, i: usize) -> Edge {
        let n = self.vertices.len();
        Edge::between(self.vertices[i % n], self.vertices[(i + 1) % n])
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        (0..self.vertices.len()).map(move |i| self.edge(i))
    }

    pub fn area(&self) -> i128 {
        signed_area2(&self.vertices) / 2
    }

    pub fn bounding_box(&self) -> Rect {
        let mut r = Rect {
            lo: self.vertices[0],
            hi: self.vertices[0],
        };
        for p in &self.vertices {
            r.lo.x = r.lo.x.min(p.x);
            r.lo.y = r.lo.y.min(p.y);
            r.hi.x = r.hi.x.max(p.x);
            r.hi.y = r.hi.y.max(p.y);
        }
        r
    }

    /// Mirror across the diagonal `x = y` (re-normalized to CCW).
    pub fn transposed(&self) -> Self {
        let mut v: Vec<Point> = self.vertices.iter().map(|p| Point::new(p.y, p.x)).collect();
        v.reverse();
        OrthoPolygon::from_ccw_unchecked(v)
    }

    /// True when the interior angle at vertex `i` is pi/2.
    pub fn is_convex_vertex(&self, i: usize) -> bool {
        let n = self.vertices.len();
        let prev = self.vertices[(i + n - 1) % n];
        let cur = self.vertices[i % n];
        let next = self.vertices[(i + 1) % n];
        turn(prev, cur, next) == Ordering::Greater
    }

    /// Tooth/dent/plain label for every edge, using the angles at both ends.
    pub fn edge_kind(&self, i: usize) -> EdgeKind {
        let n = self.vertices.len();
        match (self.is_convex_vertex(i), self.is_convex_vertex((i + 1) % n)) {
            (true, true) => EdgeKind::Tooth,
            (false, false) => EdgeKind::Dent,
            _ => EdgeKind::Plain,
        }
    }

    pub fn classify_horizontal_edges(&self) -> Vec<EdgeClass> {
        (0..self.vertices.len())
            .filter(|&i| self.edge(i).is_horizontal())
            .map(|i| EdgeClass {
                edge: i,
                kind: self.edge_kind(i),
            })
            .collect()
    }

    pub fn contains_point(&self, p: Point) -> bool {
        self.contains_scaled(p.x, p.y, 1)
    }

    pub fn contains_half(&self, p: HalfPoint) -> bool {
        self.contains_scaled(p.x2, p.y2, 2)
    }

    /// Closed point location for a point given on the lattice scaled by `s`.
    fn contains_scaled(&self, px: i64, py: i64, s: i64) -> bool {
        let mut crossings = 0u32;
        for e in self.edges() {
            let level = e.level() * s;
            let (lo, hi) = e.span();
            let (lo, hi) = (lo * s, hi * s);
            match e.orientation {
                Orientation::Horizontal => {
                    if py == level && lo <= px && px <= hi {
                        return true;
                    }
                    // upward ray shifted infinitesimally right
                    if level > py && lo <= px && px < hi {
                        crossings += 1;
                    }
                }
                Orientation::Vertical => {
                    if px == level && lo <= py && py <= hi {
                        return true;
                    }
                }
            }
        }
        crossings % 2 == 1
    }

    /// True iff every point of the closed rectangle lies in the closed polygon.
    pub fn rect_inside(&self, r: &Rect) -> bool {
        self.rect_inside_doubled(
            HalfPoint::new(2 * r.lo.x, 2 * r.lo.y),
            HalfPoint::new(2 * r.hi.x, 2 * r.hi.y),
        )
    }

    /// [`rect_inside`](Self::rect_inside) for a rectangle with half-lattice corners.
    pub fn rect_inside_doubled(&self, lo: HalfPoint, hi: HalfPoint) -> bool {
        let (x0, x1) = (lo.x2.min(hi.x2), lo.x2.max(hi.x2));
        let (y0, y1) = (lo.y2.min(hi.y2), lo.y2.max(hi.y2));
        if x0 < x1 && y0 < y1 {
            // no edge may cross the open rectangle; then one probe decides
            for e in self.edges() {
                let level = 2 * e.level();
                let (a, b) = e.span();
                let (a, b) = (2 * a, 2 * b);
                let crosses = match e.orientation {
                    Orientation::Horizontal => y0 < level && level < y1 && a < x1 && b > x0,
                    Orientation::Vertical => x0 < level && level < x1 && a < y1 && b > y0,
                };
                if crosses {
                    return false;
                }
            }
            return self.contains_scaled(x0 + x1, y0 + y1, 4);
        }
        if x0 == x1 && y0 == y1 {
            return self.contains_scaled(x0, y0, 2);
        }
        self.segment_inside_doubled(x0, y0, x1, y1)
    }

    /// Axis-parallel segment test: membership is constant between the
    /// points where boundary edges meet the segment's line.
    fn segment_inside_doubled(&self, x0: i64, y0: i64, x1: i64, y1: i64) -> bool {
        let horizontal = y0 == y1;
        let (line, from, to) = if horizontal { (y0, x0, x1) } else { (x0, y0, y1) };
        let mut cuts: Vec<i64> = alloc::vec![from, to];
        for e in self.edges() {
            let level = 2 * e.level();
            let (a, b) = e.span();
            let (a, b) = (2 * a, 2 * b);
            let parallel = e.is_horizontal() == horizontal;
            if parallel {
                if level == line {
                    cuts.extend([a, b]);
                }
            } else if a <= line && line <= b {
                cuts.push(level);
            }
        }
        cuts.retain(|&c| from <= c && c <= to);
        cuts.sort_unstable();
        cuts.dedup();
        let probe = |along: i64, scale: i64| {
            let (px, py) = if horizontal {
                (along, line * scale / 2)
            } else {
                (line * scale / 2, along)
            };
            self.contains_scaled(px, py, scale)
        };
        cuts.iter().all(|&c| probe(c, 2)) && cuts.windows(2).all(|w| probe(w[0] + w[1], 4))
    }

    /// r-visibility: the rectangle spanned by `p` and `q` lies in the polygon.
    pub fn r_visible(&self, p: Point, q: Point) -> Result<bool> {
        self.r_visible_half(p.doubled(), q.doubled())
    }

    pub fn r_visible_half(&self, p: HalfPoint, q: HalfPoint) -> Result<bool> {
        if !self.contains_half(p) || !self.contains_half(q) {
            return Err(Error::PointOutside);
        }
        Ok(self.rect_inside_doubled(p, q))
    }

    /// Points joined to horizontal edge `edge` by a vertical segment inside
    /// the polygon, as the stack of decomposition slabs adjacent to the edge.
    pub fn orthogonal_shadow(&self, edge: usize) -> Result<Vec<Rect>> {
        let e = self.edge(edge);
        if !e.is_horizontal() {
            return Err(Error::NotHorizontalEdge { index: edge });
        }
        let (x0, x1) = e.span();
        let y = e.level();
        let series = vertical_decompose(self);
        let mut out: Vec<Rect> = series
            .slabs()
            .iter()
            .map(|s| s.rect)
            .filter(|r| {
                let on_edge = match e.normal {
                    Normal::Up => r.hi.y == y,
                    _ => r.lo.y == y,
                };
                on_edge && x0 <= r.lo.x && r.hi.x <= x1
            })
            .collect();
        out.sort_by_key(|r| r.lo.x);
        Ok(out)
    }

    /// Sufficient r-star test for ortho-convex polygons: the extreme vertical
    /// edges see each other weakly, and so do the extreme horizontal edges.
    pub fn is_r_star_ortho_convex(&self) -> Result<bool> {
        if (0..self.len()).any(|i| self.edge_kind(i) == EdgeKind::Dent) {
            return Err(Error::NotOrthoConvex);
        }
        Ok(extremes_weakly_visible(self) && extremes_weakly_visible(&self.transposed()))
    }
}

/// For an ortho-convex polygon, every point of the leftmost edge sees some
/// point of the rightmost edge (and back) iff both edges lie in the band of
/// full-width horizontal chords.
fn extremes_weakly_visible(p: &OrthoPolygon) -> bool {
    let series = vertical_decompose(p);
    let lo = series.slabs().iter().map(|s| s.rect.lo.y).max().unwrap();
    let hi = series.slabs().iter().map(|s| s.rect.hi.y).min().unwrap();
    if lo > hi {
        return false;
    }
    let bb = p.bounding_box();
    p.edges()
        .filter(|e| !e.is_horizontal() && (e.level() == bb.lo.x || e.level() == bb.hi.x))
        .all(|e| {
            let (a, b) = e.span();
            lo <= a && b <= hi
        })
}

/// Sign of the turn at `b`; `Greater` is a left turn.
fn turn(a: Point, b: Point, c: Point) -> Ordering {
    let (dx1, dy1) = ((b.x - a.x).signum(), (b.y - a.y).signum());
    let (dx2, dy2) = ((c.x - b.x).signum(), (c.y - b.y).signum());
    (dx1 * dy2 - dy1 * dx2).cmp(&0)
}

fn signed_area2(v: &[Point]) -> i128 {
    let n = v.len();
    (0..n)
        .map(|i| {
            let (a, b) = (v[i], v[(i + 1) % n]);
            a.x as i128 * b.y as i128 - b.x as i128 * a.y as i128
        })
        .sum()
}

/// Rejects rings whose edges meet anywhere other than at the shared vertex
/// of consecutive edges. Runs in O(n log n).
fn check_simple(v: &[Point]) -> Result<()> {
    let n = v.len();
    let edge = |i: usize| Edge::between(v[i], v[(i + 1) % n]);

    // repeated vertices
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_unstable_by_key(|&i| v[i]);
    for w in order.windows(2) {
        if v[w[0]] == v[w[1]] {
            let (a, b) = (w[0].min(w[1]), w[0].max(w[1]));
            return Err(Error::SelfIntersecting {
                first: (a + n - 1) % n,
                second: b,
            });
        }
    }

    // collinear overlap between parallel edges
    for horizontal in [true, false] {
        let mut group: Vec<(i64, i64, i64, usize)> = (0..n)
            .filter(|&i| edge(i).is_horizontal() == horizontal)
            .map(|i| {
                let e = edge(i);
                let (a, b) = e.span();
                (e.level(), a, b, i)
            })
            .collect();
        group.sort_unstable();
        for w in group.windows(2) {
            let (l0, _, b0, i0) = w[0];
            let (l1, a1, _, i1) = w[1];
            if l0 == l1 && a1 <= b0 {
                return Err(Error::SelfIntersecting {
                    first: i0.min(i1),
                    second: i0.max(i1),
                });
            }
        }
    }

    // horizontal/vertical contacts away from shared corners
    #[derive(PartialEq, Eq, PartialOrd, Ord)]
    enum Ev {
        Insert,
        Query,
        Remove,
    }
    let mut events: Vec<(i64, Ev, usize)> = Vec::with_capacity(3 * n / 2);
    for i in 0..n {
        let e = edge(i);
        if e.is_horizontal() {
            let (a, b) = e.span();
            events.push((a, Ev::Insert, i));
            events.push((b, Ev::Remove, i));
        } else {
            events.push((e.level(), Ev::Query, i));
        }
    }
    events.sort_unstable();
    let mut active: BTreeMap<i64, usize> = BTreeMap::new();
    for (_, ev, i) in events {
        let e = edge(i);
        match ev {
            Ev::Insert => {
                active.insert(e.level(), i);
            }
            Ev::Remove => {
                active.remove(&e.level());
            }
            Ev::Query => {
                let (a, b) = e.span();
                let prev = (i + n - 1) % n;
                let next = (i + 1) % n;
                for (_, &h) in active.range(a..=b) {
                    if h != prev && h != next {
                        return Err(Error::SelfIntersecting {
                            first: i.min(h),
                            second: i.max(h),
                        });
                    }
                }
            }
        }
    }
    Ok(())
}
