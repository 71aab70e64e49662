use graceful_core::labeling::{IllegalMove, LabelingError};
use graceful_core::{GameError, GraphError, SolveError, StrategyError};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AppError {
    #[error("{0}")]
    BadInput(String),
    #[error("{0}")]
    Budget(String),
    #[error("illegal move: {0}")]
    Illegal(IllegalMove),
    #[error("it is {0}'s turn")]
    NotYourTurn(graceful_core::Player),
    #[error("the game is over")]
    GameOver,
    #[error("no session {0}")]
    UnknownSession(String),
    #[error("{0}")]
    Internal(String),
}

/// Error body shared by the CLI's JSON output and the service.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorJson {
    pub v: u32,
    pub error: ErrorBody,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorBody {
    pub code: String,
    pub message: String,
}

impl AppError {
    /// Process exit status for the CLI.
    pub fn exit_code(&self) -> i32 {
        match self {
            AppError::Budget(_) => 2,
            AppError::Internal(_) => 1,
            _ => 3,
        }
    }

    /// HTTP status for the service.
    pub fn status(&self) -> u16 {
        match self {
            AppError::BadInput(_) => 400,
            AppError::UnknownSession(_) => 404,
            AppError::Illegal(_) | AppError::NotYourTurn(_) | AppError::GameOver => 409,
            AppError::Budget(_) => 422,
            AppError::Internal(_) => 500,
        }
    }

    /// Machine-readable reason.
    pub fn code(&self) -> String {
        match self {
            AppError::BadInput(_) => "bad-input".into(),
            AppError::Budget(_) => "budget-exceeded".into(),
            AppError::Illegal(m) => m.code().into(),
            AppError::NotYourTurn(_) => "not-your-turn".into(),
            AppError::GameOver => "game-over".into(),
            AppError::UnknownSession(_) => "unknown-session".into(),
            AppError::Internal(_) => "internal".into(),
        }
    }

    pub fn to_json(&self) -> ErrorJson {
        ErrorJson {
            v: 1,
            error: ErrorBody {
                code: self.code(),
                message: self.to_string(),
            },
        }
    }
}

impl From<GraphError> for AppError {
    fn from(e: GraphError) -> Self {
        AppError::BadInput(e.to_string())
    }
}

impl From<LabelingError> for AppError {
    fn from(e: LabelingError) -> Self {
        match e {
            LabelingError::Illegal(m) => AppError::Illegal(m),
            LabelingError::BudgetExceeded { .. } => AppError::Budget(e.to_string()),
            _ => AppError::BadInput(e.to_string()),
        }
    }
}

impl From<SolveError> for AppError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::BudgetExceeded { .. } => AppError::Budget(e.to_string()),
            SolveError::GameOver => AppError::GameOver,
            SolveError::Labeling(l) => l.into(),
            _ => AppError::BadInput(e.to_string()),
        }
    }
}

impl From<GameError> for AppError {
    fn from(e: GameError) -> Self {
        match e {
            GameError::IllegalMove(m) => AppError::Illegal(m),
            GameError::NotYourTurn { expected } => AppError::NotYourTurn(expected),
            GameError::Labeling(l) => l.into(),
            _ => AppError::GameOver,
        }
    }
}

impl From<StrategyError> for AppError {
    fn from(e: StrategyError) -> Self {
        match e {
            StrategyError::BudgetExceeded { .. } => AppError::Budget(e.to_string()),
            StrategyError::GameOver => AppError::GameOver,
            StrategyError::Solver(s) => s.into(),
            StrategyError::Graph(g) => g.into(),
            StrategyError::Labeling(l) => l.into(),
            _ => AppError::BadInput(e.to_string()),
        }
    }
}
