//! Minimal SVG writer for figure-style exports, plus the float-shadow
//! formatting shared with JSON output.

use std::fmt::Write as _;

/// Format a float shadow at 12 significant digits, the precision used for
/// every diagnostic float in JSON and SVG output.
pub fn shadow(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    format!("{x:.*e}", 11)
}

/// A drawing accumulated as SVG elements in abstract (mathematical, y-up)
/// coordinates; `finish` flips to screen coordinates.
pub struct Svg {
    body: String,
    min_x: f64,
    min_y: f64,
    max_x: f64,
    max_y: f64,
}

const SCALE: f64 = 160.0;

impl Svg {
    pub fn new() -> Self {
        Svg {
            body: String::new(),
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        }
    }

    fn touch(&mut self, x: f64, y: f64) {
        self.min_x = self.min_x.min(x);
        self.min_y = self.min_y.min(y);
        self.max_x = self.max_x.max(x);
        self.max_y = self.max_y.max(y);
    }

    pub fn polygon(&mut self, pts: &[(f64, f64)], stroke: &str, fill: &str) {
        let mut path = String::new();
        for (i, &(x, y)) in pts.iter().enumerate() {
            self.touch(x, y);
            let _ = write!(
                path,
                "{}{:.4},{:.4} ",
                if i == 0 { "M" } else { "L" },
                x * SCALE,
                -y * SCALE
            );
        }
        path.push('Z');
        let _ = writeln!(
            self.body,
            r#"<path d="{path}" stroke="{stroke}" fill="{fill}" stroke-width="1.5"/>"#
        );
    }

    pub fn line(&mut self, a: (f64, f64), b: (f64, f64), stroke: &str, dash: Option<&str>) {
        self.touch(a.0, a.1);
        self.touch(b.0, b.1);
        let dash = dash.map_or(String::new(), |d| format!(r#" stroke-dasharray="{d}""#));
        let _ = writeln!(
            self.body,
            r#"<line x1="{:.4}" y1="{:.4}" x2="{:.4}" y2="{:.4}" stroke="{stroke}" stroke-width="1.2"{dash}/>"#,
            a.0 * SCALE,
            -a.1 * SCALE,
            b.0 * SCALE,
            -b.1 * SCALE
        );
    }

    pub fn dot(&mut self, p: (f64, f64), fill: &str, label: Option<&str>) {
        self.touch(p.0, p.1);
        let _ = writeln!(
            self.body,
            r#"<circle cx="{:.4}" cy="{:.4}" r="4" fill="{fill}"/>"#,
            p.0 * SCALE,
            -p.1 * SCALE
        );
        if let Some(text) = label {
            let _ = writeln!(
                self.body,
                r#"<text x="{:.4}" y="{:.4}" font-size="12">{text}</text>"#,
                p.0 * SCALE + 6.0,
                -p.1 * SCALE - 6.0
            );
        }
    }

    pub fn finish(self) -> String {
        let pad = 0.15 * SCALE;
        let (w, h) = (
            (self.max_x - self.min_x) * SCALE + 2.0 * pad,
            (self.max_y - self.min_y) * SCALE + 2.0 * pad,
        );
        format!(
            concat!(
                r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{:.4} {:.4} {:.4} {:.4}">"#,
                "\n{}</svg>\n"
            ),
            self.min_x * SCALE - pad,
            -self.max_y * SCALE - pad,
            w,
            h,
            self.body
        )
    }
}

impl Default for Svg {
    fn default() -> Self {
        Self::new()
    }
}
