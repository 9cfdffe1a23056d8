use sensitivity_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum LabError {
    #[error("{0}")]
    Usage(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("asserted bound violated: {0}")]
    BoundViolation(String),
    #[error(transparent)]
    Core(#[from] CoreError),
}

impl LabError {
    /// 1 for usage errors, 2 for malformed input, 3 for a violated asserted bound.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Usage(_) => 1,
            LabError::Malformed(_) => 2,
            LabError::BoundViolation(_) => 3,
            LabError::Core(e) => match e {
                CoreError::Malformed(_)
                | CoreError::Io(_)
                | CoreError::ForeignSignature { .. }
                | CoreError::BitsOutOfRange { .. }
                | CoreError::ArityMismatch { .. } => 2,
                _ => 1,
            },
        }
    }
}

pub type Result<T, E = LabError> = std::result::Result<T, E>;
