mod common;

use common::{brute_stab, interior_samples, random_polygon};
use pathguard_core::oracle::{pixel_visibility, verify_cover, OracleBudget};
use pathguard_core::partition::corridor;
use pathguard_core::*;
use proptest::prelude::*;

fn polygon() -> impl Strategy<Value = OrthoPolygon> {
    (any::<u64>(), 1usize..14).prop_map(|(seed, n)| random_polygon(seed, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn visibility_is_symmetric_and_reflexive(p in polygon()) {
        let grid = pixel_grid(&p);
        let pts = interior_samples(&grid, &p.bounding_box());
        let inside: Vec<HalfPoint> = pts.into_iter().filter(|&q| p.contains_half(q)).step_by(3).collect();
        for &a in &inside {
            prop_assert!(p.r_visible_half(a, a).unwrap());
            for &b in inside.iter().step_by(5) {
                prop_assert_eq!(p.r_visible_half(a, b).unwrap(), p.r_visible_half(b, a).unwrap());
            }
        }
    }

    #[test]
    fn containment_agrees_with_pixel_oracle(p in polygon()) {
        let m = pixel_visibility(&p, OracleBudget { max_pixels: 2000 }).unwrap();
        for (c, &g) in m.candidates.iter().enumerate() {
            for (k, px) in m.pixels.iter().enumerate() {
                let lo = HalfPoint::new(g.x2.min(2 * px.lo.x), g.y2.min(2 * px.lo.y));
                let hi = HalfPoint::new(g.x2.max(2 * px.hi.x), g.y2.max(2 * px.hi.y));
                prop_assert_eq!(m.covers(c, k), p.rect_inside_doubled(lo, hi));
            }
        }
    }

    #[test]
    fn bounding_box_inside_only_for_rectangles(p in polygon()) {
        prop_assert_eq!(p.rect_inside(&p.bounding_box()), p.len() == 4);
    }

    #[test]
    fn tooth_outside_shadow_is_not_fully_seen(p in polygon()) {
        let grid = pixel_grid(&p);
        let centers: Vec<HalfPoint> = grid.inside_cells().map(|(i, j)| grid.cell(i, j).center()).collect();
        for c in p.classify_horizontal_edges() {
            let e = p.edge(c.edge);
            let shadow = p.orthogonal_shadow(c.edge).unwrap();
            prop_assert!(shadow.iter().any(|r| r.contains_rect(&e.as_rect())) || shadow.iter().any(|r| r.contains(e.a)));
            if c.kind != EdgeKind::Tooth {
                continue;
            }
            for &g in &centers {
                if shadow.iter().any(|r| r.contains_half(g)) {
                    continue;
                }
                let (a, b) = (e.a.doubled(), e.b.doubled());
                let lo = HalfPoint::new(g.x2.min(a.x2).min(b.x2), g.y2.min(a.y2));
                let hi = HalfPoint::new(g.x2.max(a.x2).max(b.x2), g.y2.max(a.y2));
                prop_assert!(!p.rect_inside_doubled(lo, hi));
            }
        }
    }

    #[test]
    fn slabs_tile_the_polygon(p in polygon()) {
        let s = vertical_decompose(&p);
        prop_assert!(s.is_path());
        prop_assert_eq!(s.total_area(), p.area());
        prop_assert!(s.len() < p.len() / 2);
        prop_assert_eq!(pixel_grid(&p).inside_area(), p.area());
        for (k, w) in s.slabs().windows(2).enumerate() {
            let seg = s.shared()[k];
            prop_assert!(seg.y0 < seg.y1);
            prop_assert!(seg.x == w[0].rect.hi.x || seg.x == w[0].rect.lo.x);
            for (a, b) in [(0, 1), (1, 0)] {
                if let Some(r) = w[a].rect.intersection(&w[b].rect) {
                    prop_assert_eq!(r.area(), 0);
                }
            }
        }
    }

    #[test]
    fn parts_are_balanced_monotone_and_stable(p in polygon()) {
        let s = vertical_decompose(&p);
        let (parts, cuts) = partition_balanced(&s).unwrap();
        prop_assert_eq!(cuts.len() + 1, parts.len());
        let mut next = 0;
        for part in &parts {
            prop_assert_eq!(part.slabs.start, next);
            next = part.slabs.end;
            prop_assert_eq!(part.corridor, corridor(&s.slabs()[part.slabs.clone()]).unwrap());
            prop_assert!(part.polygon.rect_inside(&part.corridor));
            let inner = vertical_decompose(&part.polygon);
            for w in inner.slabs().windows(2) {
                prop_assert!(w[0].rect.hi.x <= w[1].rect.lo.x);
            }
            let (again, _) = partition_balanced(&inner).unwrap();
            prop_assert_eq!(again.len(), 1);
            prop_assert_eq!(again[0].corridor, part.corridor);
            prop_assert_eq!(&again[0].polygon, &part.polygon);
        }
        prop_assert_eq!(next, s.len());
    }

    #[test]
    fn guard_plan_is_consistent(p in polygon()) {
        let plan = plan_guards(&p).unwrap();
        prop_assert_eq!(plan.gn, plan.guards.len());
        prop_assert_eq!(plan.gn, plan.regions.len());
        prop_assert_eq!(plan.gn, plan.per_part_gn.iter().sum::<usize>());
        for (g, r) in plan.guards.iter().zip(&plan.regions) {
            prop_assert!(r.rect.contains_half(*g));
            prop_assert!(plan.parts[r.part_index].corridor.contains_half(*g));
            prop_assert!(p.contains_half(*g));
        }
        for (i, part) in plan.parts.iter().enumerate() {
            let pre = tooth_positions(part);
            let xs: Vec<(i64, i64)> = pre.iter().map(|r| (r.rect.lo.x, r.rect.hi.x)).collect();
            if xs.len() <= 20 {
                prop_assert_eq!(plan.per_part_gn[i], brute_stab(&xs));
            }
            let solo = guards::plan_series(&vertical_decompose(&part.polygon), CutPolicy::default()).unwrap();
            prop_assert_eq!(solo.gn, plan.per_part_gn[i]);
        }
        for c in p.classify_horizontal_edges().into_iter().filter(|c| c.kind == EdgeKind::Tooth) {
            let shadow = p.orthogonal_shadow(c.edge).unwrap();
            prop_assert!(plan.guards.iter().any(|&g| shadow.iter().any(|r| r.contains_half(g))));
        }
        prop_assert!(verify_cover(&p, &plan.guards).unwrap().covered);
    }

    #[test]
    fn merge_matches_brute_stabbing(raw in prop::collection::vec((0i64..30, 0i64..8), 1..=20)) {
        let regions: Vec<PosRegion> = raw
            .iter()
            .enumerate()
            .map(|(k, &(a, w))| PosRegion { rect: Rect::from_bounds(a, 0, a + w, 1), source_teeth: vec![k], part_index: 0 })
            .collect();
        let xs: Vec<(i64, i64)> = raw.iter().map(|&(a, w)| (a, a + w)).collect();
        let merged = merge_positions(regions.clone());
        prop_assert_eq!(merged.len(), brute_stab(&xs));
        let mut seen: Vec<usize> = merged.iter().flat_map(|r| r.source_teeth.clone()).collect();
        seen.sort_unstable();
        prop_assert_eq!(seen, (0..raw.len()).collect::<Vec<_>>());
        for m in &merged {
            for &t in &m.source_teeth {
                prop_assert!(regions[t].rect.contains_rect(&m.rect));
            }
        }
        for w in merged.windows(2) {
            prop_assert!(w[0].rect.hi.x < w[1].rect.lo.x);
        }
    }
}

#[test]
fn partition_uses_few_parts() {
    // fewest contiguous balanced runs, by exhaustive DP
    for seed in 0..300 {
        let p = random_polygon(seed, 2 + seed as usize % 11);
        let s = vertical_decompose(&p);
        let m = s.len();
        let mut best = vec![usize::MAX; m + 1];
        best[0] = 0;
        for b in 1..=m {
            for a in 0..b {
                if best[a] != usize::MAX && corridor(&s.slabs()[a..b]).is_ok() {
                    best[b] = best[b].min(best[a] + 1);
                }
            }
        }
        let (parts, cuts) = partition_balanced(&s).unwrap();
        let deferred = cuts.iter().filter(|c| c.assignment == partition::Assignment::NextPart).count();
        assert!(parts.len() <= best[m] + deferred, "seed {seed}");
        let (keep, _) = partition_with(&s, CutPolicy::KeepInCurrent).unwrap();
        assert_eq!(keep.len(), best[m], "seed {seed}");
    }
}

#[test]
fn named_families() {
    use pathguard_core::gen::{generate, Family, GadgetCase, GenSpec};
    let gn = |f| plan_guards(&generate(&GenSpec::family(f)).unwrap()).unwrap().gn;
    assert_eq!(gn(Family::Cross), 1);
    assert_eq!(gn(Family::Staircase(1)), 1);
    for k in 1..=12 {
        assert_eq!(gn(Family::Comb(k)), k);
    }
    let cross = generate(&GenSpec::family(Family::Cross)).unwrap();
    assert!(cross.is_r_star_ortho_convex().unwrap());
    let stair = generate(&GenSpec::family(Family::Staircase(3))).unwrap();
    assert!(!stair.is_r_star_ortho_convex().unwrap());
    for case in [GadgetCase::A, GadgetCase::B] {
        let p = generate(&GenSpec::family(Family::CutGadget(case))).unwrap();
        let plan = plan_guards(&p).unwrap();
        assert_eq!(plan.cuts[0].assignment, partition::Assignment::NextPart);
        assert_eq!(plan_guards_with(&p, CutPolicy::KeepInCurrent).unwrap().gn, plan.gn + 1);
    }
}
