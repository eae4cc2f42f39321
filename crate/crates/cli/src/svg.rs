//! SVG picture of a plane certificate: the input polygon, its image, and the
//! dilate the image fits in.

use std::fmt::Write;

use anyhow::bail;
use lattice_size::{IntVec, LatticePolytope, SizeCertificate, Target};

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 24.0;
/// Draw lattice dots only when the view spans at most this many units.
const MAX_GRID: i64 = 60;

struct View {
    min_x: i64,
    max_y: i64,
    scale: f64,
}

impl View {
    fn x(&self, x: i64) -> f64 {
        MARGIN + (x - self.min_x) as f64 * self.scale
    }

    fn y(&self, y: i64) -> f64 {
        MARGIN + (self.max_y - y) as f64 * self.scale
    }

    fn path(&self, pts: &[(i64, i64)]) -> String {
        pts.iter()
            .map(|&(x, y)| format!("{:.2},{:.2}", self.x(x), self.y(y)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn pairs(pts: &[IntVec]) -> Vec<(i64, i64)> {
    pts.iter().map(|p| (p.get(0), p.get(1))).collect()
}

pub fn render(p: &LatticePolytope, cert: &SizeCertificate) -> anyhow::Result<String> {
    if p.dim() != 2 {
        bail!("plots are only available for plane polygons");
    }
    let input = pairs(p.vertices()?);
    let image = p.transform(&cert.map)?;
    let output = pairs(image.vertices()?);
    let l = cert.value;
    let iw = image.coordinate_max()?;
    let outline: Vec<(i64, i64)> = match cert.target {
        Target::Simplex => vec![(0, 0), (l, 0), (0, l)],
        Target::Cube => vec![(0, 0), (l, 0), (l, l), (0, l)],
        // The strip 0 <= x <= w, cut to the image's height.
        Target::Width => vec![(0, 0), (l, 0), (l, iw.get(1)), (0, iw.get(1))],
    };

    let all: Vec<(i64, i64)> = input.iter().chain(&output).chain(&outline).copied().collect();
    let min_x = all.iter().map(|q| q.0).min().unwrap_or(0);
    let max_x = all.iter().map(|q| q.0).max().unwrap_or(0);
    let min_y = all.iter().map(|q| q.1).min().unwrap_or(0);
    let max_y = all.iter().map(|q| q.1).max().unwrap_or(0);
    let span = (max_x - min_x).max(max_y - min_y).max(1);
    let view = View {
        min_x,
        max_y,
        scale: (CANVAS - 2.0 * MARGIN) / span as f64,
    };

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">"#
    )?;
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#)?;
    if span <= MAX_GRID {
        writeln!(s, r##"<g fill="#999">"##)?;
        for x in min_x..=max_x {
            for y in min_y..=max_y {
                writeln!(s, r#"<circle cx="{:.2}" cy="{:.2}" r="1.5"/>"#, view.x(x), view.y(y))?;
            }
        }
        writeln!(s, "</g>")?;
    }
    writeln!(
        s,
        r##"<polygon points="{}" fill="none" stroke="#888" stroke-width="1.5" stroke-dasharray="6 4"/>"##,
        view.path(&outline)
    )?;
    writeln!(
        s,
        r##"<polygon points="{}" fill="#1f77b4" fill-opacity="0.15" stroke="#1f77b4" stroke-width="2"/>"##,
        view.path(&input)
    )?;
    writeln!(
        s,
        r##"<polygon points="{}" fill="#d62728" fill-opacity="0.15" stroke="#d62728" stroke-width="2"/>"##,
        view.path(&output)
    )?;
    writeln!(
        s,
        r#"<text x="{MARGIN}" y="16" font-family="monospace" font-size="12">{} = {} via {}</text>"#,
        cert.target,
        cert.value,
        cert.map.matrix()
    )?;
    writeln!(s, "</svg>")?;
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use lattice_size::{fixtures, size2d};

    #[test]
    fn renders_three_polygons() {
        let p = fixtures::skew_triangle();
        let cert = size2d::ls_sigma_fast(&p).unwrap();
        let svg = render(&p, &cert).unwrap();
        assert_eq!(svg.matches("<polygon").count(), 3);
        assert!(svg.contains("stroke-dasharray"));
        assert!(svg.contains("<circle"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }
}
