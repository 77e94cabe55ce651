use std::str::FromStr;

use crate::error::{Error, Result};

/// Enumeration caps. Exceeding any of them is an error, never a silent truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_subgraphs: usize,
    pub max_cycles: usize,
    pub max_faces: usize,
    /// Largest polytope vertex count the brute-force oracle will sweep (2^n subsets).
    pub max_oracle_vertices: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_subgraphs: 1_000_000,
            max_cycles: 100_000,
            max_faces: 1_000_000,
            max_oracle_vertices: 12,
        }
    }
}

impl Limits {
    /// Applies one `key=value` assignment.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let parse = |v: &str| {
            usize::from_str(v.trim()).map_err(|_| Error::Parse {
                line: 0,
                message: format!("invalid value `{v}` for `{key}`"),
            })
        };
        match key.trim() {
            "max_subgraphs" => self.max_subgraphs = parse(value)?,
            "max_cycles" => self.max_cycles = parse(value)?,
            "max_faces" => self.max_faces = parse(value)?,
            "max_oracle_vertices" => self.max_oracle_vertices = parse(value)?,
            other => {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("unknown cap `{other}`"),
                })
            }
        }
        Ok(())
    }

    /// Applies `key=value` pairs separated by newlines or commas; `#` starts a comment.
    pub fn apply_assignments(&mut self, text: &str) -> Result<()> {
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("");
            for part in line.split(',') {
                let part = part.trim();
                if part.is_empty() {
                    continue;
                }
                let (k, v) = part.split_once('=').ok_or_else(|| Error::Parse {
                    line: lineno + 1,
                    message: format!("expected key=value, got `{part}`"),
                })?;
                self.set(k, v).map_err(|e| match e {
                    Error::Parse { message, .. } => Error::Parse {
                        line: lineno + 1,
                        message,
                    },
                    other => other,
                })?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn assignments_override_defaults() {
        let mut limits = Limits::default();
        limits
            .apply_assignments("# caps\nmax_faces = 10\nmax_cycles=3, max_subgraphs=7\n")
            .unwrap();
        assert_eq!(limits.max_faces, 10);
        assert_eq!(limits.max_cycles, 3);
        assert_eq!(limits.max_subgraphs, 7);
        assert_eq!(limits.max_oracle_vertices, 12);
    }

    #[test]
    fn bad_key_is_rejected() {
        let mut limits = Limits::default();
        let err = limits.apply_assignments("\nmax_widgets=1").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
