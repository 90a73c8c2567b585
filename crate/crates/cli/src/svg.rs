//! Static SVG rendering. The y axis is flipped so the polygon appears y-up.

use std::fmt::Write;

use pathguard_core::{GuardPlan, HalfPoint, OrthoPolygon, Rect, SlabSeries};

/// Doubled coordinate as a decimal ("3" or "3.5").
fn half(v2: i64) -> String {
    if v2 % 2 == 0 {
        format!("{}", v2 / 2)
    } else {
        format!("{}{}.5", if v2 == -1 { "-" } else { "" }, v2 / 2)
    }
}

fn rect_elem(out: &mut String, r: &Rect, class: &str) {
    let _ = writeln!(
        out,
        r#"<rect class="{class}" x="{}" y="{}" width="{}" height="{}"/>"#,
        r.lo.x,
        -r.hi.y,
        r.width(),
        r.height()
    );
}

pub fn render(p: &OrthoPolygon, slabs: Option<&SlabSeries>, plan: Option<&GuardPlan>) -> String {
    let bb = p.bounding_box();
    let pad = ((bb.width().max(bb.height()) as f64) * 0.05).max(1.0);
    let dot = ((bb.width().max(bb.height()) as f64) * 0.01).max(0.15);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{:.3} {:.3} {:.3} {:.3}">"#,
        bb.lo.x as f64 - pad,
        -bb.hi.y as f64 - pad,
        bb.width() as f64 + 2.0 * pad,
        bb.height() as f64 + 2.0 * pad
    );
    out.push_str(concat!(
        "<defs><pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"1\" height=\"1\" ",
        "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"1\" stroke=\"#2a7\" ",
        "stroke-width=\"0.3\"/></pattern></defs>\n",
        "<style>path,rect{vector-effect:non-scaling-stroke}",
        ".slab{fill:#eef;stroke:#99c;stroke-width:0.5}",
        ".corridor{fill:url(#hatch);stroke:#2a7;stroke-width:1}",
        ".pos{fill:#f80;fill-opacity:0.35;stroke:#f80;stroke-width:1}",
        ".boundary{fill:none;stroke:#000;stroke-width:1.5}",
        ".guard{fill:#d00}</style>\n"
    ));
    if let Some(s) = slabs {
        for slab in s.slabs() {
            rect_elem(&mut out, &slab.rect, "slab");
        }
    }
    if let Some(plan) = plan {
        for part in &plan.parts {
            rect_elem(&mut out, &part.corridor, "corridor");
        }
        for r in &plan.regions {
            rect_elem(&mut out, &r.rect, "pos");
        }
    }
    let mut d = String::new();
    for (i, v) in p.vertices().iter().enumerate() {
        let _ = write!(d, "{}{} {}", if i == 0 { "M" } else { " L" }, v.x, -v.y);
    }
    d.push_str(" Z");
    let _ = writeln!(out, r#"<path class="boundary" d="{d}"/>"#);
    if let Some(plan) = plan {
        for &HalfPoint { x2, y2 } in &plan.guards {
            let _ = writeln!(out, r#"<circle class="guard" cx="{}" cy="{}" r="{dot:.3}"/>"#, half(x2), half(-y2));
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::half;

    #[test]
    fn half_coordinates() {
        assert_eq!(half(6), "3");
        assert_eq!(half(7), "3.5");
        assert_eq!(half(-1), "-0.5");
        assert_eq!(half(-7), "-3.5");
        assert_eq!(half(0), "0");
    }
}
