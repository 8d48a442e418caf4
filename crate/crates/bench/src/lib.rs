//! Shared setup helpers for the criterion benchmarks.

use golden_tonnetz::figure::FigureAtlas;
use golden_tonnetz::tonnetz::{build_window, LatticeVariant, TonnetzWindow};

/// The bundled triangle atlas every benchmark starts from.
pub fn atlas() -> FigureAtlas {
    FigureAtlas::triangle()
}

/// A fully merged golden window of the given extent.
pub fn window(columns: u32, rows: u32) -> TonnetzWindow {
    build_window(&atlas(), LatticeVariant::golden(), columns, rows)
        .expect("the golden variant builds at any extent")
}
