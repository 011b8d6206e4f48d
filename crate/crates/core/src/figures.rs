//! Presets regenerating the seven wave-equation figures as field data.
//!
//! Figures 1-4 are the light-cone initial-value solution with `g = sin`,
//! `h = cos` at `α = β = 0, ½, ¾, 1`; figures 5-7 are the `x,t` sine
//! solution at `α/β = ½, 3/2, 1`. Figure 1 (`α = β = 0`) has no
//! well-defined field and comes out fully masked.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::field::{Axis, Field2D};
use crate::numeric::Order;
use crate::{wave_uv, wave_xt};

pub const FIGURE_IDS: std::ops::RangeInclusive<u8> = 1..=7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FigureKind {
    /// Initial-value solution in light-cone variables.
    LightCone,
    /// Sine solution of `∂_t^β f = ∂_x^α f`.
    Damping,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureSpec {
    pub id: u8,
    pub kind: FigureKind,
    pub alpha: f64,
    pub beta: f64,
}

impl FigureSpec {
    pub fn get(id: u8) -> Result<Self> {
        use FigureKind::*;
        let (kind, alpha, beta) = match id {
            1 => (LightCone, 0.0, 0.0),
            2 => (LightCone, 0.5, 0.5),
            3 => (LightCone, 0.75, 0.75),
            4 => (LightCone, 1.0, 1.0),
            5 => (Damping, 0.5, 1.0),
            6 => (Damping, 1.5, 1.0),
            7 => (Damping, 1.0, 1.0),
            _ => return Err(Error::Domain(format!("unknown figure id {id}, expected 1-7"))),
        };
        Ok(FigureSpec { id, kind, alpha, beta })
    }

    pub fn title(&self) -> String {
        match self.kind {
            FigureKind::LightCone => format!("figure {}: alpha = beta = {}", self.id, self.alpha),
            FigureKind::Damping => {
                format!("figure {}: alpha = {}, beta = {}, ratio {}", self.id, self.alpha, self.beta, self.alpha / self.beta)
            }
        }
    }
}

/// Sampling for a figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FigureGrid {
    pub x: Axis,
    pub t: Axis,
    /// Step of the initial-data grid behind figures 1-4.
    pub ic_step: f64,
}

impl Default for FigureGrid {
    /// `[0, 4π]²` at 201 × 201.
    fn default() -> Self {
        let axis = Axis::linspace(0.0, 4.0 * PI, 201).expect("valid default axis");
        FigureGrid { x: axis, t: axis, ic_step: 1e-3 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Figure {
    pub spec: FigureSpec,
    pub field: Field2D,
}

impl Figure {
    pub fn csv(&self) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        self.field.write_csv(&mut buf)?;
        Ok(buf)
    }

    pub fn svg(&self) -> String {
        self.field.to_svg(&self.spec.title(), 3)
    }
}

pub fn render(id: u8, grid: &FigureGrid) -> Result<Figure> {
    let spec = FigureSpec::get(id)?;
    if !(grid.ic_step > 0.0) {
        return Err(Error::InvalidGrid(format!("initial-data step must be positive, got {}", grid.ic_step)));
    }
    let (alpha, beta) = (Order::new(spec.alpha)?, Order::new(spec.beta)?);
    let field = match spec.kind {
        FigureKind::LightCone if spec.alpha == 0.0 => Field2D::all_masked(grid.x, grid.t),
        FigureKind::LightCone => wave_uv::sincos_field(alpha, beta, grid.x, grid.t, grid.ic_step)?,
        FigureKind::Damping => wave_xt::sin_field(alpha, beta, grid.x, grid.t)?,
    };
    Ok(Figure { spec, field })
}
