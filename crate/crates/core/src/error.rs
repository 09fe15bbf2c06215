use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("clustering failed: {0}")]
    Clustering(String),

    #[error("mining failed: {0}")]
    Mining(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("turn {turn}: {source}")]
    Turn {
        turn: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn parse(source_name: &str, line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            source_name: source_name.to_string(),
            line,
            message: message.into(),
        }
    }

    pub(crate) fn at_turn(self, turn: usize) -> Self {
        Error::Turn {
            turn,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
