//! SVG diagrams of lattice paths, parallelograms and reroutings.

use std::fmt::Write as _;

use goldman_core::geometry::{LatticePoint, PLPath, Polygon, RatPoint};
use goldman_core::goldman::ParallelogramPair;
use goldman_core::rat::{rat, to_f64, Rat};

/// Pixels per lattice unit.
const SCALE: f64 = 40.0;
/// Decimal places for every coordinate written.
const PRECISION: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    First,
    Second,
    ReroutePositive,
    RerouteNegative,
}

impl Style {
    fn class(self) -> &'static str {
        match self {
            Style::First => "path p1",
            Style::Second => "path p2",
            Style::ReroutePositive => "reroute reroute-plus",
            Style::RerouteNegative => "reroute reroute-minus",
        }
    }

    fn stroke(self) -> (&'static str, f64) {
        match self {
            Style::First => ("#1f4e99", 2.5),
            Style::Second => ("#b22222", 2.5),
            Style::ReroutePositive => ("#2e8b57", 1.5),
            Style::RerouteNegative => ("#d2691e", 1.5),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct RenderSpec {
    pub paths: Vec<(PLPath, Style)>,
    /// Closed loop whose enclosed region is filled.
    pub shaded: Option<PLPath>,
    pub parallelogram: Option<ParallelogramPair>,
    pub lattice_dots: bool,
}

struct View {
    min_x: i64,
    max_x: i64,
    min_y: i64,
    max_y: i64,
}

impl View {
    fn x(&self, x: Rat) -> String {
        format!("{:.*}", PRECISION, (to_f64(&x) - self.min_x as f64) * SCALE)
    }

    /// The y axis is flipped so that it points up.
    fn y(&self, y: Rat) -> String {
        format!("{:.*}", PRECISION, (self.max_y as f64 - to_f64(&y)) * SCALE)
    }

    fn point(&self, p: RatPoint) -> String {
        format!("{},{}", self.x(p.x), self.y(p.y))
    }

    fn points(&self, ps: &[RatPoint]) -> String {
        ps.iter().map(|&p| self.point(p)).collect::<Vec<_>>().join(" ")
    }

    fn width(&self) -> i64 {
        self.max_x - self.min_x
    }

    fn height(&self) -> i64 {
        self.max_y - self.min_y
    }
}

fn view_for(spec: &RenderSpec) -> View {
    let mut pts: Vec<RatPoint> = spec.paths.iter().flat_map(|(p, _)| p.vertices().to_vec()).collect();
    if let Some(s) = &spec.shaded {
        pts.extend_from_slice(s.vertices());
    }
    if let Some(pair) = &spec.parallelogram {
        for r in [&pair.parallelogram, &pair.pre_parallelogram] {
            pts.extend(r.vertices.iter().map(|v| v.to_rat()));
        }
    }
    let floor = |r: Rat| r.floor().to_integer() as i64;
    let ceil = |r: Rat| r.ceil().to_integer() as i64;
    let mut v = View {
        min_x: i64::MAX,
        max_x: i64::MIN,
        min_y: i64::MAX,
        max_y: i64::MIN,
    };
    for p in &pts {
        v.min_x = v.min_x.min(floor(p.x));
        v.max_x = v.max_x.max(ceil(p.x));
        v.min_y = v.min_y.min(floor(p.y));
        v.max_y = v.max_y.max(ceil(p.y));
    }
    if pts.is_empty() {
        (v.min_x, v.max_x, v.min_y, v.max_y) = (0, 0, 0, 0);
    }
    v.min_x -= 1;
    v.min_y -= 1;
    v.max_x += 1;
    v.max_y += 1;
    v
}

fn dot(out: &mut String, view: &View, p: LatticePoint, class: &str, r: f64, fill: &str) {
    let _ = writeln!(
        out,
        r#"  <circle class="{class}" cx="{}" cy="{}" r="{r:.1}" fill="{fill}"/>"#,
        view.x(rat(p.x)),
        view.y(rat(p.y))
    );
}

/// Renders the diagram as a standalone SVG document.
pub fn render_svg(spec: &RenderSpec) -> String {
    let view = view_for(spec);
    let (w, h) = (view.width() as f64 * SCALE, view.height() as f64 * SCALE);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        "<!-- coordinates: {SCALE} px per lattice unit, fixed precision {PRECISION} decimal places; \
         y axis flipped to point up; view box spans [{}, {}] x [{}, {}] including a one-unit margin -->",
        view.min_x, view.max_x, view.min_y, view.max_y
    );
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.0}" height="{h:.0}" viewBox="0 0 {w:.0} {h:.0}">"#
    );
    let _ = writeln!(out, r#"  <rect width="100%" height="100%" fill="white"/>"#);

    if spec.lattice_dots {
        for y in view.min_y..=view.max_y {
            for x in view.min_x..=view.max_x {
                dot(&mut out, &view, LatticePoint::new(x, y), "lattice", 1.5, "#bbbbbb");
            }
        }
    }

    if let Some(s) = &spec.shaded {
        let _ = writeln!(
            out,
            r##"  <polygon class="area" points="{}" fill="#f4c542" fill-opacity="0.4" fill-rule="nonzero" stroke="none"/>"##,
            view.points(s.vertices())
        );
    }

    if let Some(pair) = &spec.parallelogram {
        let corners = |vs: &[LatticePoint; 4]| vs.iter().map(|v| v.to_rat()).collect::<Vec<_>>();
        let _ = writeln!(
            out,
            r##"  <polygon class="parallelogram" points="{}" fill="none" stroke="#555555" stroke-width="1.5"/>"##,
            view.points(&corners(&pair.parallelogram.vertices))
        );
        let _ = writeln!(
            out,
            r##"  <polygon class="pre-parallelogram" points="{}" fill="none" stroke="#555555" stroke-width="1.5" stroke-dasharray="4 4"/>"##,
            view.points(&corners(&pair.pre_parallelogram.vertices))
        );
        if let Ok(poly) = Polygon::new(pair.parallelogram.vertices.to_vec()) {
            let pts = poly.lattice_points();
            for &p in &pts.boundary {
                dot(&mut out, &view, p, "boundary", 3.0, "#555555");
            }
            for &p in &pts.interior {
                dot(&mut out, &view, p, "interior", 4.0, "black");
            }
        }
    }

    for (p, style) in &spec.paths {
        let (stroke, width) = style.stroke();
        let _ = writeln!(
            out,
            r#"  <polyline class="{}" points="{}" fill="none" stroke="{stroke}" stroke-width="{width}" stroke-linejoin="round"/>"#,
            style.class(),
            view.points(p.vertices())
        );
    }

    out.push_str("</svg>\n");
    out
}
