#![allow(dead_code)]

use pathguard_core::gen::{generate, GenSpec};
use pathguard_core::{HalfPoint, OrthoPolygon, PixelGrid, Rect};

pub fn random_polygon(seed: u64, slabs: usize) -> OrthoPolygon {
    generate(&GenSpec::random(seed, slabs)).unwrap()
}

/// Half-lattice points of the pixel grid in the interior of `r`; empty when
/// `r` is degenerate.
pub fn interior_samples(grid: &PixelGrid, r: &Rect) -> Vec<HalfPoint> {
    let axis = |cuts: &[i64], lo: i64, hi: i64| -> Vec<i64> {
        let mut v = Vec::new();
        for w in cuts.windows(2) {
            for c in [2 * w[0], w[0] + w[1], 2 * w[1]] {
                v.push(c);
            }
        }
        v.sort_unstable();
        v.dedup();
        v.into_iter().filter(|&c| 2 * lo < c && c < 2 * hi).collect()
    };
    let xs = axis(&grid.x_cuts, r.lo.x, r.hi.x);
    let ys = axis(&grid.y_cuts, r.lo.y, r.hi.y);
    xs.iter().flat_map(|&x| ys.iter().map(move |&y| HalfPoint::new(x, y))).collect()
}

/// Minimum number of points stabbing closed intervals, by exhaustive search
/// over subsets of right endpoints in increasing size.
pub fn brute_stab(intervals: &[(i64, i64)]) -> usize {
    if intervals.is_empty() {
        return 0;
    }
    let mut pts: Vec<i64> = intervals.iter().map(|i| i.1).collect();
    pts.sort_unstable();
    pts.dedup();
    for k in 1..=pts.len() {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let ok = intervals
                .iter()
                .all(|&(a, b)| idx.iter().any(|&i| a <= pts[i] && pts[i] <= b));
            if ok {
                return k;
            }
            // next combination
            let mut t = k;
            while t > 0 && idx[t - 1] == pts.len() - k + t - 1 {
                t -= 1;
            }
            if t == 0 {
                break;
            }
            idx[t - 1] += 1;
            for u in t..k {
                idx[u] = idx[u - 1] + 1;
            }
        }
    }
    unreachable!("the right endpoints always stab every interval")
}
