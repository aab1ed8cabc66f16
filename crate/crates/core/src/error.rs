use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error("invalid simplicial polytope: {0}")]
    InvalidPolytope(String),
    #[error("NotBalanced: {0}")]
    NotBalanced(String),
    #[error("MatchingFailure: {0}")]
    MatchingFailure(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("SearchExhausted in {stage}{}", bipyramid.map(|b| format!(" (bipyramid {b})")).unwrap_or_default())]
    SearchExhausted {
        stage: &'static str,
        bipyramid: Option<usize>,
    },
    #[error("CellCertificationFailed: {0}")]
    CellCertificationFailed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// Tags a search failure with the bipyramid it happened in.
    pub fn in_bipyramid(self, id: usize) -> Self {
        match self {
            Error::SearchExhausted { stage, .. } => Error::SearchExhausted {
                stage,
                bipyramid: Some(id),
            },
            Error::CellCertificationFailed(msg) => Error::CellCertificationFailed(format!("bipyramid {id}: {msg}")),
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
