use thiserror::Error;

/// Errors surfaced by constructors, the spec-file loader, and the CLI.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter is missing, malformed, or out of range. `field` names
    /// the offending input so the CLI can print a one-line diagnostic.
    #[error("invalid {field}: {message}")]
    Invalid { field: String, message: String },

    #[error("spec file {path}: {message}")]
    SpecFile { path: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Invalid {
            field: field.into(),
            message: message.into(),
        }
    }
}
