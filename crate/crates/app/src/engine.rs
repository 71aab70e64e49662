use std::fmt;
use std::str::FromStr;

use graceful_core::{scripted_move, FamilySpec, GameState, Move, Player, Solver, StrategyError, StrategyId};

use crate::AppError;

/// Who answers the human: the exact solver or a family script.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Engine {
    Solver,
    Scripted(StrategyId),
}

impl FromStr for Engine {
    type Err = AppError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().split_once(':') {
            None if s.trim() == "solver" => Ok(Engine::Solver),
            Some(("scripted", id)) => id.parse().map(Engine::Scripted).map_err(AppError::BadInput),
            _ => Err(AppError::BadInput(format!("unknown engine {s:?}; use solver or scripted:<strategy>"))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Engine::Solver => f.write_str("solver"),
            Engine::Scripted(id) => write!(f, "scripted:{id}"),
        }
    }
}

impl Engine {
    /// Rejects a script that does not cover the game it would play.
    pub fn check(&self, spec: &FamilySpec, first: Player, side: Player) -> Result<(), AppError> {
        let Engine::Scripted(id) = *self else {
            return Ok(());
        };
        if id.scripted_side() != side {
            return Err(AppError::BadInput(format!("{id} plays {}, the engine plays {side}", id.scripted_side())));
        }
        if !StrategyId::applicable(spec, first).contains(&id) {
            return Err(AppError::BadInput(format!("{id} does not cover {spec} with {first} first")));
        }
        Ok(())
    }

    /// The engine's move in `state`. Positions a script does not cover go to
    /// the solver.
    pub fn choose(&self, state: &GameState, solver: &mut Solver) -> Result<Move, AppError> {
        match *self {
            Engine::Solver => Ok(solver.best_move(state)?),
            Engine::Scripted(id) => match scripted_move(id, state) {
                Ok(mv) => Ok(mv),
                Err(StrategyError::OffScript(_)) => Ok(solver.best_move(state)?),
                Err(e) => Err(e.into()),
            },
        }
    }
}
