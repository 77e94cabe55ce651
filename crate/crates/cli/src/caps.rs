//! Cap resolution. Later sources override earlier ones:
//! built-in defaults, then `COSMOFACE_CAPS`, then `--config`, then flags.

use std::fs;
use std::path::Path;

use cosmoface_core::{Error, Limits, Result};

pub const ENV_VAR: &str = "COSMOFACE_CAPS";

#[derive(Debug, Default, Clone, Copy)]
pub struct CapFlags {
    pub max_subgraphs: Option<usize>,
    pub max_cycles: Option<usize>,
    pub max_faces: Option<usize>,
    pub max_oracle_vertices: Option<usize>,
}

pub fn resolve(env: Option<&str>, config: Option<&Path>, flags: CapFlags) -> Result<Limits> {
    let mut limits = Limits::default();
    if let Some(text) = env {
        limits
            .apply_assignments(text)
            .map_err(|e| context(e, ENV_VAR))?;
    }
    if let Some(path) = config {
        let text = fs::read_to_string(path).map_err(|e| Error::Parse {
            line: 0,
            message: format!("cannot read config {}: {e}", path.display()),
        })?;
        limits
            .apply_assignments(&text)
            .map_err(|e| context(e, &path.display().to_string()))?;
    }
    let CapFlags {
        max_subgraphs,
        max_cycles,
        max_faces,
        max_oracle_vertices,
    } = flags;
    if let Some(v) = max_subgraphs {
        limits.max_subgraphs = v;
    }
    if let Some(v) = max_cycles {
        limits.max_cycles = v;
    }
    if let Some(v) = max_faces {
        limits.max_faces = v;
    }
    if let Some(v) = max_oracle_vertices {
        limits.max_oracle_vertices = v;
    }
    Ok(limits)
}

fn context(err: Error, source: &str) -> Error {
    match err {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{source}: {message}"),
        },
        other => other,
    }
}
