//! Renders all seven figures as CSV and SVG.
//!
//!     cargo run --example figures [out-dir]

use std::fs;
use std::path::PathBuf;

use fracwave::figures::{render, FigureGrid, FIGURE_IDS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "figures".into()));
    fs::create_dir_all(&dir)?;
    let grid = FigureGrid::default();
    for id in FIGURE_IDS {
        let fig = render(id, &grid)?;
        fs::write(dir.join(format!("figure{id}.csv")), fig.csv()?)?;
        fs::write(dir.join(format!("figure{id}.svg")), fig.svg())?;
        println!("{} ({} masked)", fig.spec.title(), fig.field.masked_count());
    }
    println!("wrote {}", dir.display());
    Ok(())
}
