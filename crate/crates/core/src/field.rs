//! Complex fields on an `(x, t)` rectangle, with CSV and SVG output.

use std::fmt::Write as _;
use std::io::Write;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::grid::csv_writer;

/// A uniform axis `start + k·step`, `k < count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub start: f64,
    pub step: f64,
    pub count: usize,
}

impl Axis {
    pub fn new(start: f64, step: f64, count: usize) -> Result<Self> {
        if count < 2 || !(step > 0.0) || !start.is_finite() || !step.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "axis needs count >= 2 and a positive step, got start {start}, step {step}, count {count}"
            )));
        }
        Ok(Axis { start, step, count })
    }

    /// `count` points spanning `[a, b]` inclusive.
    pub fn linspace(a: f64, b: f64, count: usize) -> Result<Self> {
        if !(b > a) || count < 2 {
            return Err(Error::InvalidGrid(format!("degenerate range [{a}, {b}] x {count}")));
        }
        Axis::new(a, (b - a) / (count - 1) as f64, count)
    }

    #[inline]
    pub fn at(&self, k: usize) -> f64 {
        self.start + self.step * k as f64
    }

    pub fn end(&self) -> f64 {
        self.at(self.count - 1)
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.at(k))
    }
}

/// Field samples indexed `(x, t)`. `None` marks a cell masked at a
/// singularity or overflow.
#[derive(Debug, Clone, PartialEq)]
pub struct Field2D {
    x: Axis,
    t: Axis,
    values: Vec<Option<Complex64>>,
}

impl Field2D {
    /// Evaluates `f` on every cell in parallel.
    pub fn from_fn<F>(x: Axis, t: Axis, f: F) -> Result<Self>
    where
        F: Fn(f64, f64) -> Result<Option<Complex64>> + Sync,
    {
        let nt = t.count;
        let values = (0..x.count * nt)
            .into_par_iter()
            .map(|idx| {
                let v = f(x.at(idx / nt), t.at(idx % nt))?;
                Ok(v.filter(|z| z.re.is_finite() && z.im.is_finite()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Field2D { x, t, values })
    }

    pub fn all_masked(x: Axis, t: Axis) -> Self {
        Field2D { x, t, values: vec![None; x.count * t.count] }
    }

    pub fn x_axis(&self) -> Axis {
        self.x
    }

    pub fn t_axis(&self) -> Axis {
        self.t
    }

    pub fn get(&self, ix: usize, it: usize) -> Option<Complex64> {
        self.values[ix * self.t.count + it]
    }

    /// `(x, t, value)` for every cell, x-major.
    pub fn cells(&self) -> impl Iterator<Item = (f64, f64, Option<Complex64>)> + '_ {
        let nt = self.t.count;
        self.values.iter().enumerate().map(move |(idx, &v)| (self.x.at(idx / nt), self.t.at(idx % nt), v))
    }

    /// Values of the column at time index `it`.
    pub fn column(&self, it: usize) -> Vec<Option<Complex64>> {
        (0..self.x.count).map(|ix| self.get(ix, it)).collect()
    }

    pub fn masked_count(&self) -> usize {
        self.values.iter().filter(|v| v.is_none()).count()
    }

    /// Writes the `x,t,re,im,masked` schema; masked cells carry `NaN` values.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out);
        w.write_record(["x", "t", "re", "im", "masked"])?;
        for (x, t, v) in self.cells() {
            let (re, im, m) = match v {
                Some(z) => (z.re.to_string(), z.im.to_string(), "0"),
                None => ("NaN".to_string(), "NaN".to_string(), "1"),
            };
            w.write_record([x.to_string(), t.to_string(), re, im, m.to_string()])?;
        }
        w.flush().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(())
    }

    /// Heatmap of `Re f` with x across and t upwards. Masked cells are left
    /// out of the drawing and show as transparent.
    pub fn to_svg(&self, title: &str, cell_px: u32) -> String {
        let (nx, nt) = (self.x.count as u32, self.t.count as u32);
        let (w, h) = (nx * cell_px, nt * cell_px);
        let (lo, hi) = self
            .values
            .iter()
            .flatten()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), z| (lo.min(z.re), hi.max(z.re)));
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{}" viewBox="0 0 {w} {}">"#,
            h + 24,
            h + 24
        );
        let _ = writeln!(s, "<title>{}</title>", escape(title));
        let _ = writeln!(
            s,
            r#"<text x="2" y="{}" font-family="monospace" font-size="12">{} Re[f] in [{}, {}]</text>"#,
            h + 16,
            escape(title),
            fmt_num(lo),
            fmt_num(hi)
        );
        for ix in 0..self.x.count {
            for it in 0..self.t.count {
                let Some(z) = self.get(ix, it) else { continue };
                let u = if hi > lo { (z.re - lo) / (hi - lo) } else { 0.5 };
                let px = ix as u32 * cell_px;
                let py = (nt - 1 - it as u32) * cell_px;
                let _ = writeln!(
                    s,
                    r#"<rect x="{px}" y="{py}" width="{cell_px}" height="{cell_px}" fill="{}"/>"#,
                    colormap(u)
                );
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

fn fmt_num(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.4e}")
    } else {
        "n/a".to_string()
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Linear ramp through five stops, dark blue to yellow.
fn colormap(u: f64) -> String {
    const STOPS: [(f64, f64, f64); 5] = [
        (68.0, 1.0, 84.0),
        (59.0, 82.0, 139.0),
        (33.0, 145.0, 140.0),
        (94.0, 201.0, 98.0),
        (253.0, 231.0, 37.0),
    ];
    let u = u.clamp(0.0, 1.0) * (STOPS.len() - 1) as f64;
    let k = (u.floor() as usize).min(STOPS.len() - 2);
    let w = u - k as f64;
    let (a, b) = (STOPS[k], STOPS[k + 1]);
    let mix = |p: f64, q: f64| (p + (q - p) * w).round() as u8;
    format!("#{:02x}{:02x}{:02x}", mix(a.0, b.0), mix(a.1, b.1), mix(a.2, b.2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> Field2D {
        let x = Axis::linspace(0.0, 1.0, 3).unwrap();
        let t = Axis::linspace(0.0, 1.0, 2).unwrap();
        Field2D::from_fn(x, t, |x, t| Ok(if x == t { None } else { Some(Complex64::new(x - t, t)) })).unwrap()
    }

    #[test]
    fn axis_validation() {
        assert!(Axis::new(0.0, 0.0, 3).is_err());
        assert!(Axis::new(0.0, 1.0, 1).is_err());
        assert!(Axis::linspace(1.0, 1.0, 3).is_err());
        assert_eq!(Axis::linspace(0.0, 2.0, 3).unwrap().end(), 2.0);
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        small().write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "x,t,re,im,masked");
        assert_eq!(lines[1], "0,0,NaN,NaN,1");
        assert_eq!(lines[2], "0,1,-1,1,0");
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn svg_skips_masked_cells() {
        let f = small();
        let svg = f.to_svg("demo", 4);
        assert_eq!(svg.matches("<rect").count(), 6 - f.masked_count());
        assert_eq!(svg, f.to_svg("demo", 4));
        let empty = Field2D::all_masked(f.x_axis(), f.t_axis()).to_svg("none", 4);
        assert_eq!(empty.matches("<rect").count(), 0);
    }

    #[test]
    fn colormap_endpoints() {
        assert_eq!(colormap(0.0), "#440154");
        assert_eq!(colormap(1.0), "#fde725");
        assert_eq!(colormap(2.0), "#fde725");
    }
}
