//! Capacity caps, overridable through environment variables.

use std::env;

fn read(var: &str, default: usize) -> usize {
    env::var(var)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(default)
}

/// Largest number of cells a construction may materialize
/// (`MOMA_MAX_CELLS`).
pub fn max_cells() -> usize {
    read("MOMA_MAX_CELLS", 2_000_000)
}

/// Largest word-length radius for ball enumeration (`MOMA_MAX_RADIUS`).
pub fn max_radius() -> u32 {
    read("MOMA_MAX_RADIUS", 8) as u32
}

/// Largest number of group elements a ball may hold (`MOMA_MAX_BALL`).
pub fn max_ball_elements() -> usize {
    read("MOMA_MAX_BALL", 1_000_000)
}

/// Largest ambient vertex count for cell-complex constructions; the real
/// moment-angle complex on m vertices has up to 3^m cells.
pub const MAX_AMBIENT_VERTICES: u32 = 20;
