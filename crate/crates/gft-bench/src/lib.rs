//! Shared fixtures for the engine benchmarks.

use gft_core::DiskGrid;

/// Coarse plan sized so a full scan stays in the low milliseconds.
pub fn bench_grid() -> DiskGrid {
    DiskGrid { r_max: 0.99, radii: 20, angles: 120, refine: 1 }
}
