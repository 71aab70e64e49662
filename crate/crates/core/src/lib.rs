//! Graph families, graceful labelings, and the maker-breaker Graceful game.

pub mod game;
pub mod graph;
pub mod labeling;
pub mod solver;
pub mod strategies;

pub use game::{GameError, GameState, Move, Player, Status};
pub use graph::{build_family, FamilySpec, Graph, GraphError, Permutation};
pub use labeling::{GracefulLabeling, LabelingError, PartialLabeling};
pub use solver::{solve, SolveError, SolveResult, Solver, SolverConfig};
pub use strategies::{
    scripted_move, verify_strategy, verify_strategy_with, StrategyError, StrategyId, StrategyVerdict,
    VerifyOptions,
};
