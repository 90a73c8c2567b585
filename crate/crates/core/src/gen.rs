//! Seeded generators for path polygons and named test families.
//!
//! Every generator builds the slab series first and derives the boundary
//! from it, so outputs are path polygons by construction.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geom::{OrthoPolygon, Rect};

/// Cut-slab configurations around a part boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GadgetCase {
    /// The slab before the cut is a local minimum; the following slab
    /// attaches on the opposite side of the cut slab.
    A,
    /// The slab before the cut is a local minimum; both neighbours attach
    /// on the same side of the cut slab.
    B,
    /// The slab after the cut is a local minimum, the one before is not.
    C,
    /// Neither neighbour of the cut slab is a local minimum.
    D,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    RandomPath,
    Comb(usize),
    Staircase(usize),
    Cross,
    CutGadget(GadgetCase),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub seed: u64,
    pub slab_count: usize,
    pub max_height: i64,
    pub max_width: i64,
    pub family: Family,
}

impl GenSpec {
    pub fn random(seed: u64, slab_count: usize) -> Self {
        GenSpec {
            seed,
            slab_count,
            max_height: 12,
            max_width: 4,
            family: Family::RandomPath,
        }
    }

    pub fn family(family: Family) -> Self {
        GenSpec {
            seed: 0,
            slab_count: 1,
            max_height: 1,
            max_width: 1,
            family,
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<OrthoPolygon> {
    let slabs = slab_chain(spec)?;
    Ok(OrthoPolygon::from_monotone_slabs(&slabs))
}

/// The slab series a spec describes, left to right.
pub fn slab_chain(spec: &GenSpec) -> Result<Vec<Rect>> {
    let unit = |spans: &[(i64, i64)]| -> Vec<Rect> {
        spans
            .iter()
            .enumerate()
            .map(|(i, &(l, u))| Rect::from_bounds(i as i64, l, i as i64 + 1, u))
            .collect()
    };
    Ok(match spec.family {
        Family::RandomPath => random_chain(spec)?,
        Family::Comb(k) => {
            if k == 0 {
                return Err(Error::InfeasibleSpec("comb needs at least one tooth"));
            }
            let spans: Vec<(i64, i64)> = (0..2 * k - 1).map(|j| if j % 2 == 0 { (0, 3) } else { (0, 1) }).collect();
            unit(&spans)
        }
        Family::Staircase(k) => {
            if k == 0 {
                return Err(Error::InfeasibleSpec("staircase needs at least one step"));
            }
            let spans: Vec<(i64, i64)> = (0..k as i64).map(|j| (j, j + 2)).collect();
            unit(&spans)
        }
        Family::Cross => unit(&[(1, 2), (0, 3), (1, 2)]),
        Family::CutGadget(case) => unit(match case {
            GadgetCase::A => &[(0, 4), (0, 2), (0, 5), (3, 8)],
            GadgetCase::B => &[(1, 5), (3, 5), (0, 7), (6, 10)],
            GadgetCase::C => &[(0, 1), (0, 2), (0, 5), (3, 4), (3, 9)],
            GadgetCase::D => &[(0, 1), (0, 2), (0, 5), (3, 8), (3, 10)],
        }),
    })
}

/// Bimodal heights make local minima frequent.
fn random_chain(spec: &GenSpec) -> Result<Vec<Rect>> {
    if spec.slab_count == 0 {
        return Err(Error::InfeasibleSpec("slab_count must be at least 1"));
    }
    if spec.max_width < 1 {
        return Err(Error::InfeasibleSpec("max_width must be at least 1"));
    }
    if spec.max_height < 2 {
        return Err(Error::InfeasibleSpec("max_height must be at least 2"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let short_max = (spec.max_height / 3).max(1);
    let tall_min = (spec.max_height / 2).max(2);
    let mut slabs: Vec<Rect> = Vec::with_capacity(spec.slab_count);
    let mut x = 0i64;
    let (mut pl, mut pu) = (0i64, 0i64);
    for i in 0..spec.slab_count {
        let width = rng.random_range(1..=spec.max_width);
        let (l, u) = loop {
            let h = if rng.random_bool(0.5) {
                rng.random_range(1..=short_max)
            } else {
                rng.random_range(tall_min..=spec.max_height)
            };
            if i == 0 {
                break (0, h);
            }
            // positive overlap with the previous span: l < pu and l + h > pl
            let l = rng.random_range(pl - h + 1..=pu - 1);
            if (l, l + h) != (pl, pu) {
                break (l, l + h);
            }
        };
        slabs.push(Rect::from_bounds(x, l, x + width, u));
        x += width;
        pl = l;
        pu = u;
    }
    Ok(slabs)
}
