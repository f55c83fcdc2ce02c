use std::fmt::Write;

use sixsplit_core::vec3::{self, Vec3};
use sixsplit_core::{Complex64, GeneralizedDisc, Pairing, PlaneView, SpherePoint};

pub const CANVAS: f64 = 1000.0;
pub const PALETTE: [&str; 3] = ["#d1495b", "#00798c", "#edae49"];
const INK: &str = "#333333";
const GUIDE: &str = "#9a9a9a";

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum View {
    Plane,
    Sphere,
}

fn f(x: f64) -> String {
    format!("{x:.2}")
}

fn point_color(pairing: Option<&Pairing>, i: usize) -> &'static str {
    pairing.and_then(|p| p.iter().position(|pair| pair.contains(&i))).map_or(INK, |k| PALETTE[k])
}

pub fn render_svg(points: &[SpherePoint; 6], discs: Option<&[GeneralizedDisc; 3]>, pairing: Option<&Pairing>, view: View) -> String {
    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="1000" height="1000" viewBox="0 0 1000 1000">"#
    )
    .unwrap();
    writeln!(svg, r#"<rect x="0" y="0" width="1000" height="1000" fill="white"/>"#).unwrap();
    match view {
        View::Plane => PlaneCanvas::fit(points).draw(&mut svg, points, discs, pairing),
        View::Sphere => draw_sphere(&mut svg, points, discs, pairing),
    }
    svg.push_str("</svg>\n");
    svg
}

struct PlaneCanvas {
    scale: f64,
}

impl PlaneCanvas {
    /// Square window centered at 0 holding every finite point and `Ω`.
    fn fit(points: &[SpherePoint; 6]) -> Self {
        let extent = points
            .iter()
            .filter_map(|p| p.as_finite())
            .map(|z| 1.15 * z.re.abs().max(z.im.abs()))
            .fold(3.5, f64::max);
        PlaneCanvas { scale: 0.5 * CANVAS / extent }
    }

    fn to_screen(&self, z: Complex64) -> (f64, f64) {
        (0.5 * CANVAS + self.scale * z.re, 0.5 * CANVAS - self.scale * z.im)
    }

    fn to_plane(&self, x: f64, y: f64) -> Complex64 {
        Complex64::new((x - 0.5 * CANVAS) / self.scale, (0.5 * CANVAS - y) / self.scale)
    }

    fn draw(&self, svg: &mut String, points: &[SpherePoint; 6], discs: Option<&[GeneralizedDisc; 3]>, pairing: Option<&Pairing>) {
        let (ox, oy) = self.to_screen(Complex64::new(0.0, 0.0));
        writeln!(svg, r#"<line x1="0" y1="{0}" x2="1000" y2="{0}" stroke="{GUIDE}" stroke-width="0.5"/>"#, f(oy)).unwrap();
        writeln!(svg, r#"<line x1="{0}" y1="0" x2="{0}" y2="1000" stroke="{GUIDE}" stroke-width="0.5"/>"#, f(ox)).unwrap();
        writeln!(
            svg,
            r#"<circle class="unit-circle" cx="{}" cy="{}" r="{}" fill="none" stroke="{GUIDE}" stroke-dasharray="6 4"/>"#,
            f(ox),
            f(oy),
            f(self.scale)
        )
        .unwrap();

        // Ω: the union of the radius-2 discs about ±1, meeting at ±√3 i
        let (tx, ty) = self.to_screen(Complex64::new(0.0, 3f64.sqrt()));
        let (bx, by) = self.to_screen(Complex64::new(0.0, -(3f64.sqrt())));
        let r = f(2.0 * self.scale);
        writeln!(
            svg,
            r#"<path class="omega" d="M {} {} A {r} {r} 0 1 1 {} {} A {r} {r} 0 1 1 {} {} Z" fill="none" stroke="{INK}" stroke-width="1.5"/>"#,
            f(tx),
            f(ty),
            f(bx),
            f(by),
            f(tx),
            f(ty)
        )
        .unwrap();

        if let Some(discs) = discs {
            for (k, d) in discs.iter().enumerate() {
                self.draw_disc(svg, k, d);
            }
        }

        for (i, p) in points.iter().enumerate() {
            let color = point_color(pairing, i);
            match p.as_finite() {
                Some(z) => {
                    let (x, y) = self.to_screen(z);
                    writeln!(svg, r#"<circle class="point" cx="{}" cy="{}" r="6" fill="{color}"/>"#, f(x), f(y)).unwrap();
                    writeln!(svg, r#"<text x="{}" y="{}" font-size="16" fill="{INK}">{i}</text>"#, f(x + 9.0), f(y - 9.0)).unwrap();
                }
                None => {
                    writeln!(svg, r#"<circle class="point" cx="930" cy="40" r="6" fill="{color}"/>"#).unwrap();
                    writeln!(svg, r#"<text x="945" y="46" font-size="16" fill="{INK}">∞ ({i})</text>"#).unwrap();
                }
            }
        }
    }

    fn draw_disc(&self, svg: &mut String, k: usize, d: &GeneralizedDisc) {
        let color = PALETTE[k];
        let style = format!(r#"fill="{color}" fill-opacity="0.18" stroke="{color}" stroke-width="2""#);
        match d.plane_view() {
            PlaneView::Disk { center, radius } => {
                let (x, y) = self.to_screen(center);
                writeln!(svg, r#"<circle class="disc" cx="{}" cy="{}" r="{}" {style}/>"#, f(x), f(y), f(radius * self.scale)).unwrap();
            }
            PlaneView::Codisk { center, radius } => {
                let (x, y) = self.to_screen(center);
                let r = f(radius * self.scale);
                writeln!(
                    svg,
                    r#"<path class="disc" d="M 0 0 H 1000 V 1000 H 0 Z M {} {y0} A {r} {r} 0 1 0 {} {y0} A {r} {r} 0 1 0 {} {y0} Z" fill-rule="evenodd" {style}/>"#,
                    f(x + radius * self.scale),
                    f(x - radius * self.scale),
                    f(x + radius * self.scale),
                    y0 = f(y)
                )
                .unwrap();
            }
            PlaneView::HalfPlane { normal, offset } => {
                let side = |x: f64, y: f64| (self.to_plane(x, y) * normal.conj()).re - offset;
                let (poly, cut) = clip_canvas(side);
                if poly.is_empty() {
                    writeln!(svg, r#"<path class="disc" d="" {style}/>"#).unwrap();
                    return;
                }
                let pts: Vec<String> = poly.iter().map(|&(x, y)| format!("{},{}", f(x), f(y))).collect();
                writeln!(
                    svg,
                    r#"<polygon class="disc" points="{}" fill="{color}" fill-opacity="0.18" stroke="none"/>"#,
                    pts.join(" ")
                )
                .unwrap();
                if let [(x1, y1), (x2, y2)] = cut[..] {
                    writeln!(
                        svg,
                        r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="{color}" stroke-width="2"/>"#,
                        f(x1),
                        f(y1),
                        f(x2),
                        f(y2)
                    )
                    .unwrap();
                }
            }
        }
    }
}

/// The canvas square cut down to `side ≥ 0`, plus the points where the
/// boundary line crosses its edges.
#[allow(clippy::type_complexity)]
fn clip_canvas(side: impl Fn(f64, f64) -> f64) -> (Vec<(f64, f64)>, Vec<(f64, f64)>) {
    let corners = [(0.0, 0.0), (CANVAS, 0.0), (CANVAS, CANVAS), (0.0, CANVAS)];
    let mut poly = Vec::new();
    let mut cut = Vec::new();
    for k in 0..4 {
        let (p, q) = (corners[k], corners[(k + 1) % 4]);
        let (sp, sq) = (side(p.0, p.1), side(q.0, q.1));
        if sp >= 0.0 {
            poly.push(p);
        }
        if (sp >= 0.0) != (sq >= 0.0) {
            let t = sp / (sp - sq);
            let x = (p.0 + t * (q.0 - p.0), p.1 + t * (q.1 - p.1));
            poly.push(x);
            cut.push(x);
        }
    }
    (poly, cut)
}

/// Camera for the orthographic sphere view: viewer direction, screen right
/// and screen up.
struct Camera {
    toward: Vec3,
    right: Vec3,
    up: Vec3,
}

const SPHERE_RADIUS: f64 = 440.0;

impl Camera {
    fn new() -> Self {
        let t: f64 = 0.35;
        Camera { toward: [0.0, -t.cos(), t.sin()], right: [1.0, 0.0, 0.0], up: [0.0, t.sin(), t.cos()] }
    }

    fn project(&self, x: &Vec3) -> (f64, f64, bool) {
        (
            0.5 * CANVAS + SPHERE_RADIUS * vec3::dot(x, &self.right),
            0.5 * CANVAS - SPHERE_RADIUS * vec3::dot(x, &self.up),
            vec3::dot(x, &self.toward) >= 0.0,
        )
    }

    /// Polylines of a circle on the sphere, split into front and back runs.
    fn circle(&self, center: &Vec3, radius: f64) -> Vec<(bool, Vec<(f64, f64)>)> {
        let a = vec3::normalize(&vec3::any_orthogonal(center)).expect("nonzero");
        let b = vec3::cross(center, &a);
        let mut runs: Vec<(bool, Vec<(f64, f64)>)> = Vec::new();
        let n = 240;
        for s in 0..=n {
            let th = std::f64::consts::TAU * s as f64 / n as f64;
            let rim = vec3::add(
                &vec3::scale(center, radius.cos()),
                &vec3::add(&vec3::scale(&a, radius.sin() * th.cos()), &vec3::scale(&b, radius.sin() * th.sin())),
            );
            let (x, y, front) = self.project(&rim);
            match runs.last_mut() {
                Some((f, run)) if *f == front => run.push((x, y)),
                _ => {
                    if let Some((_, run)) = runs.last() {
                        let joint = *run.last().expect("runs are nonempty");
                        runs.push((front, vec![joint, (x, y)]));
                    } else {
                        runs.push((front, vec![(x, y)]));
                    }
                }
            }
        }
        runs
    }
}

fn polyline(svg: &mut String, class: &str, run: &[(f64, f64)], color: &str, front: bool) {
    let pts: Vec<String> = run.iter().map(|&(x, y)| format!("{},{}", f(x), f(y))).collect();
    let dash = if front { "" } else { r#" stroke-dasharray="5 5" stroke-opacity="0.5""# };
    writeln!(svg, r#"<polyline class="{class}" points="{}" fill="none" stroke="{color}" stroke-width="2"{dash}/>"#, pts.join(" "))
        .unwrap();
}

fn draw_sphere(svg: &mut String, points: &[SpherePoint; 6], discs: Option<&[GeneralizedDisc; 3]>, pairing: Option<&Pairing>) {
    let cam = Camera::new();
    writeln!(svg, r#"<circle class="sphere" cx="500" cy="500" r="{SPHERE_RADIUS}" fill="none" stroke="{INK}" stroke-width="1.5"/>"#)
        .unwrap();
    for (front, run) in cam.circle(&[0.0, 0.0, 1.0], std::f64::consts::FRAC_PI_2) {
        polyline(svg, "equator", &run, GUIDE, front);
    }
    if let Some(discs) = discs {
        for (k, d) in discs.iter().enumerate() {
            let cap = d.to_cap();
            writeln!(svg, r#"<g class="disc">"#).unwrap();
            for (front, run) in cam.circle(&cap.center(), cap.angular_radius()) {
                polyline(svg, "cap", &run, PALETTE[k], front);
            }
            writeln!(svg, "</g>").unwrap();
        }
    }
    for (i, p) in points.iter().enumerate() {
        let color = point_color(pairing, i);
        let (x, y, front) = cam.project(&p.to_unit_vector());
        let fill = if front { color.to_string() } else { "white".to_string() };
        writeln!(
            svg,
            r#"<circle class="point" cx="{}" cy="{}" r="6" fill="{fill}" stroke="{color}" stroke-width="2"/>"#,
            f(x),
            f(y)
        )
        .unwrap();
        let label = if p.is_infinity() { format!("∞ ({i})") } else { i.to_string() };
        writeln!(svg, r#"<text x="{}" y="{}" font-size="16" fill="{INK}">{label}</text>"#, f(x + 9.0), f(y - 9.0)).unwrap();
    }
}
