use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use spiderweb_core::{io, Error, Graph};

use crate::GraphFormat;

#[derive(Debug, thiserror::Error)]
pub enum Failure {
    #[error("{0}")]
    Core(#[from] Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Invalid(String),
}

impl Failure {
    /// 2 for bad input, 3 for searches that gave up, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Undecided(_)) => 3,
            Failure::Core(
                Error::InvalidParameter(_)
                | Error::InvalidGraph(_)
                | Error::KindMismatch { .. }
                | Error::Parse(_),
            )
            | Failure::Io { .. }
            | Failure::Invalid(_) => 2,
            Failure::Core(_) => 1,
        }
    }
}

/// Where results go: an explicit file, a file named after the command in
/// the output directory, or stdout.
#[derive(Debug, Clone)]
pub struct Output {
    file: Option<PathBuf>,
    dir: Option<PathBuf>,
}

impl Output {
    pub fn new(file: Option<PathBuf>, dir: Option<PathBuf>) -> Self {
        Output { file, dir }
    }

    pub fn emit(&self, default_name: &str, text: &str) -> Result<(), Failure> {
        let path = match (&self.file, &self.dir) {
            (Some(f), _) => f.clone(),
            (None, Some(d)) => {
                fs::create_dir_all(d).map_err(|source| Failure::Io {
                    path: d.clone(),
                    source,
                })?;
                d.join(default_name)
            }
            (None, None) => {
                let mut stdout = std::io::stdout().lock();
                let mut result = stdout.write_all(text.as_bytes());
                if result.is_ok() && !text.ends_with('\n') {
                    result = stdout.write_all(b"\n");
                }
                return match result.and_then(|()| stdout.flush()) {
                    Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(Failure::Io {
                        path: PathBuf::from("<stdout>"),
                        source: e,
                    }),
                    _ => Ok(()),
                };
            }
        };
        fs::write(&path, text).map_err(|source| Failure::Io { path, source })
    }

    pub fn emit_graph(&self, stem: &str, g: &Graph, format: GraphFormat) -> Result<(), Failure> {
        match format {
            GraphFormat::Json => self.emit(&format!("{stem}.json"), &io::to_json(g)),
            GraphFormat::Dot => self.emit(&format!("{stem}.dot"), &io::to_dot(g)),
        }
    }
}

/// Reads a graph, as DOT when the extension says so and JSON otherwise.
pub fn read_graph(path: &Path) -> Result<Graph, Failure> {
    let text = fs::read_to_string(path).map_err(|source| Failure::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let g = if path.extension().is_some_and(|e| e == "dot" || e == "gv") {
        io::from_dot(&text)?
    } else {
        io::from_json(&text)?
    };
    Ok(g)
}
