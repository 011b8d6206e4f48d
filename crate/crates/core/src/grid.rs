use std::io::{Read, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Uniform samples of a complex-valued function. `start` doubles as the base
/// point of every differintegral taken on the grid.
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    start: f64,
    step: f64,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(start: f64, step: f64, values: Vec<Complex64>) -> Result<Self> {
        if !start.is_finite() {
            return Err(Error::InvalidGrid(format!("start {start} is not finite")));
        }
        if !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        if values.is_empty() {
            return Err(Error::InvalidGrid("no samples".into()));
        }
        if let Some(j) = values.iter().position(|v| !(v.re.is_finite() && v.im.is_finite())) {
            return Err(Error::InvalidGrid(format!("sample {j} is not finite")));
        }
        Ok(GridFunction { start, step, values })
    }

    pub fn from_fn(
        start: f64,
        step: f64,
        count: usize,
        f: impl Fn(f64) -> Complex64,
    ) -> Result<Self> {
        let values = (0..count).map(|j| f(start + step * j as f64)).collect();
        GridFunction::new(start, step, values)
    }

    pub fn from_real_fn(start: f64, step: f64, count: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        GridFunction::from_fn(start, step, count, |x| Complex64::new(f(x), 0.0))
    }

    /// `count` samples covering `[a, b]` inclusive.
    pub fn linspace(a: f64, b: f64, count: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if count < 2 || !(b > a) {
            return Err(Error::InvalidGrid(format!(
                "linspace needs b > a and at least 2 samples, got [{a}, {b}] x {count}"
            )));
        }
        let step = (b - a) / (count - 1) as f64;
        GridFunction::from_fn(a, step, count, f)
    }

    /// Samples covering `[a, b]` with a step as close as possible to `step`.
    pub fn with_step(a: f64, b: f64, step: f64, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        if !(step > 0.0) {
            return Err(Error::InvalidGrid(format!("step must be positive, got {step}")));
        }
        let count = ((b - a) / step).round() as usize + 1;
        GridFunction::linspace(a, b, count, f)
    }

    #[inline]
    pub fn start(&self) -> f64 {
        self.start
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn end(&self) -> f64 {
        self.x(self.len() - 1)
    }

    #[inline]
    pub fn x(&self, j: usize) -> f64 {
        self.start + self.step * j as f64
    }

    pub fn xs(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.len()).map(move |j| self.x(j))
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// Same grid, new samples.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != self.len() {
            return Err(Error::InvalidGrid(format!(
                "expected {} samples, got {}",
                self.len(),
                values.len()
            )));
        }
        GridFunction::new(self.start, self.step, values)
    }

    pub fn map(&self, f: impl Fn(f64, Complex64) -> Complex64) -> Result<Self> {
        let values = self.values.iter().enumerate().map(|(j, &v)| f(self.x(j), v)).collect();
        GridFunction::new(self.start, self.step, values)
    }

    pub fn same_grid(&self, other: &GridFunction) -> bool {
        self.len() == other.len()
            && (self.start - other.start).abs() <= 1e-12 * (1.0 + self.start.abs())
            && (self.step - other.step).abs() <= 1e-12 * self.step
    }

    pub fn contains(&self, x: f64) -> bool {
        let slack = 1e-9 * self.step;
        x >= self.start - slack && x <= self.end() + slack
    }

    /// Index of the node at `x`, if `x` is a node to within rounding.
    pub fn node_index(&self, x: f64) -> Option<usize> {
        let u = (x - self.start) / self.step;
        let j = u.round();
        if (u - j).abs() < 1e-9 && j >= 0.0 && (j as usize) < self.len() {
            Some(j as usize)
        } else {
            None
        }
    }

    /// Piecewise-linear interpolation inside the grid.
    pub fn interpolate(&self, x: f64) -> Result<Complex64> {
        if !self.contains(x) {
            return Err(Error::OutOfGrid { x, lo: self.start, hi: self.end() });
        }
        let n = self.len();
        if n == 1 {
            return Ok(self.values[0]);
        }
        let u = ((x - self.start) / self.step).clamp(0.0, (n - 1) as f64);
        let k = (u.floor() as usize).min(n - 2);
        let w = u - k as f64;
        Ok(self.values[k] * (1.0 - w) + self.values[k + 1] * w)
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Largest endpoint magnitude relative to the largest sample.
    pub fn edge_ratio(&self) -> f64 {
        let max = self.max_abs();
        if max == 0.0 {
            return 0.0;
        }
        let edge = self.values[0].norm().max(self.values[self.len() - 1].norm());
        edge / max
    }

    /// Composite trapezoid rule over the whole grid.
    pub fn integrate(&self) -> Complex64 {
        trapezoid(&self.values, self.step)
    }

    pub fn sup_distance(&self, other: &GridFunction) -> f64 {
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Writes the `x,re,im` CSV schema.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv_writer(out);
        w.write_record(["x", "re", "im"])?;
        for (j, v) in self.values.iter().enumerate() {
            w.write_record([self.x(j).to_string(), v.re.to_string(), v.im.to_string()])?;
        }
        w.flush().map_err(|e| Error::Csv(e.to_string()))?;
        Ok(())
    }

    pub fn read_csv<R: Read>(input: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().has_headers(true).from_reader(input);
        let header = r.headers()?.clone();
        if header.iter().collect::<Vec<_>>() != ["x", "re", "im"] {
            return Err(Error::Csv(format!("expected header x,re,im, got {header:?}")));
        }
        let mut xs = Vec::new();
        let mut values = Vec::new();
        for record in r.records() {
            let record = record?;
            let field = |i: usize| -> Result<f64> {
                record
                    .get(i)
                    .ok_or_else(|| Error::Csv("short row".into()))?
                    .parse::<f64>()
                    .map_err(|e| Error::Csv(e.to_string()))
            };
            xs.push(field(0)?);
            values.push(Complex64::new(field(1)?, field(2)?));
        }
        if xs.len() < 2 {
            return Err(Error::InvalidGrid("CSV grid needs at least two rows".into()));
        }
        let step = (xs[xs.len() - 1] - xs[0]) / (xs.len() - 1) as f64;
        for (j, &x) in xs.iter().enumerate() {
            if (x - (xs[0] + step * j as f64)).abs() > 1e-9 * (1.0 + x.abs()) {
                return Err(Error::InvalidGrid(format!("row {j} breaks uniform spacing")));
            }
        }
        GridFunction::new(xs[0], step, values)
    }
}

pub(crate) fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out)
}

pub(crate) fn trapezoid(values: &[Complex64], step: f64) -> Complex64 {
    match values.len() {
        0 | 1 => Complex64::new(0.0, 0.0),
        n => {
            let inner: Complex64 = values[1..n - 1].iter().sum();
            (inner + (values[0] + values[n - 1]) * 0.5) * step
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rejects_bad_grids() {
        assert!(GridFunction::new(0.0, 0.0, vec![Complex64::new(1.0, 0.0)]).is_err());
        assert!(GridFunction::new(0.0, 1.0, vec![]).is_err());
        assert!(GridFunction::new(0.0, 1.0, vec![Complex64::new(f64::NAN, 0.0)]).is_err());
    }

    #[test]
    fn interpolation_is_linear_between_nodes() {
        let g = GridFunction::linspace(0.0, 1.0, 11, |x| Complex64::new(2.0 * x, -x)).unwrap();
        let v = g.interpolate(0.37).unwrap();
        assert!((v - Complex64::new(0.74, -0.37)).norm() < 1e-14);
        assert!(g.interpolate(1.0).is_ok());
        assert!(matches!(g.interpolate(1.1), Err(Error::OutOfGrid { .. })));
    }

    #[test]
    fn csv_header_and_line_endings() {
        let g = GridFunction::linspace(0.0, 1.0, 3, |x| Complex64::new(x, 0.5)).unwrap();
        let mut buf = Vec::new();
        g.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "x,re,im\n0,0,0.5\n0.5,0.5,0.5\n1,1,0.5\n");
    }

    proptest! {
        #[test]
        fn csv_roundtrip(start in -10.0f64..10.0, step in 1e-3f64..1.0,
                         vals in prop::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 2..40)) {
            let values: Vec<_> = vals.iter().map(|&(a, b)| Complex64::new(a, b)).collect();
            let g = GridFunction::new(start, step, values).unwrap();
            let mut buf = Vec::new();
            g.write_csv(&mut buf).unwrap();
            let back = GridFunction::read_csv(buf.as_slice()).unwrap();
            prop_assert_eq!(back.values(), g.values());
            prop_assert!((back.step() - g.step()).abs() < 1e-9 * step);
        }
    }
}
