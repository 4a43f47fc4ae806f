use thiserror::Error;

/// Errors for malformed input, domain violations and oracle size guards.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A parse problem in an input file, with its 1-based line number.
    #[error("format error at line {line}: {msg}")]
    Format { line: usize, msg: String },

    /// An operation was called outside its domain (bad vertex, empty graph, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// A brute-force oracle was asked to run beyond its hard size guard.
    #[error("size guard: {op} requires n <= {max}, got n = {n}")]
    SizeGuard {
        op: &'static str,
        n: usize,
        max: usize,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }
}
