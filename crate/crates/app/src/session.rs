//! One game between a human and the engine. The CLI's `play` and the
//! service both drive games through this type.

use std::sync::Arc;
use std::time::{SystemTime, UNIX_EPOCH};

use graceful_core::game::StateJson;
use graceful_core::{build_family, FamilySpec, GameState, Move, Player, Solver, SolverConfig, Status};
use serde::{Deserialize, Serialize};

use crate::layout::layout;
use crate::{AppError, Engine};

pub struct Session {
    pub id: String,
    pub spec: FamilySpec,
    pub state: GameState,
    pub human: Player,
    pub engine: Engine,
    /// Seconds since the Unix epoch.
    pub created_at: u64,
    solver: Solver,
}

/// Wire format of a session.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionJson {
    pub v: u32,
    pub id: String,
    pub family: String,
    pub human: Player,
    pub engine: String,
    pub created_at: u64,
    pub state: StateJson,
    pub layout: Vec<[f64; 2]>,
    pub winner: Option<Player>,
}

/// What survives a restart: enough to replay the game.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionSnapshot {
    pub id: String,
    pub family: String,
    pub first: Player,
    pub human: Player,
    pub engine: String,
    pub created_at: u64,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct HintJson {
    pub v: u32,
    #[serde(rename = "move")]
    pub mv: Move,
    /// Winner under best play from the current position.
    pub winner: Player,
}

fn now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0)
}

impl Session {
    /// Starts a game and plays the engine's opening if it moves first.
    pub fn new(
        id: String,
        spec: FamilySpec,
        first: Player,
        human: Player,
        engine: Engine,
        budget: u64,
        precompute: bool,
    ) -> Result<Session, AppError> {
        engine.check(&spec, first, human.other())?;
        let graph = Arc::new(build_family(&spec)?);
        let config = SolverConfig {
            budget,
            ..SolverConfig::default()
        };
        let solver = Solver::with_config(Arc::clone(&graph), config)?;
        let state = GameState::new(graph, first)?;
        let mut session = Session {
            id,
            spec,
            state,
            human,
            engine,
            created_at: now(),
            solver,
        };
        if precompute {
            session.solver.winner(&session.state)?;
        }
        session.engine_turn()?;
        Ok(session)
    }

    /// Rebuilds a session by replaying its moves.
    pub fn restore(snap: &SessionSnapshot, budget: u64) -> Result<Session, AppError> {
        let spec: FamilySpec = snap.family.parse()?;
        let engine: Engine = snap.engine.parse()?;
        let graph = Arc::new(build_family(&spec)?);
        let config = SolverConfig {
            budget,
            ..SolverConfig::default()
        };
        Ok(Session {
            id: snap.id.clone(),
            state: GameState::replay(Arc::clone(&graph), snap.first, &snap.moves)?,
            solver: Solver::with_config(graph, config)?,
            spec,
            human: snap.human,
            engine,
            created_at: snap.created_at,
        })
    }

    pub fn snapshot(&self) -> SessionSnapshot {
        SessionSnapshot {
            id: self.id.clone(),
            family: self.spec.to_string(),
            first: self.state.first_player(),
            human: self.human,
            engine: self.engine.to_string(),
            created_at: self.created_at,
            moves: self.state.moves(),
        }
    }

    pub fn is_over(&self) -> bool {
        self.state.status() != Status::InProgress
    }

    /// Plays the engine's move if it is the engine's turn.
    pub fn engine_turn(&mut self) -> Result<Option<Move>, AppError> {
        if self.is_over() || self.state.to_move() == self.human {
            return Ok(None);
        }
        let mv = self.engine.choose(&self.state, &mut self.solver)?;
        self.state = self.state.play_move(mv)?;
        Ok(Some(mv))
    }

    /// Plays the human's move, then the engine's answer.
    pub fn human_move(&mut self, mv: Move) -> Result<Option<Move>, AppError> {
        if self.is_over() {
            return Err(AppError::GameOver);
        }
        self.state = self.state.play_as(self.human, mv)?;
        self.engine_turn()
    }

    /// An optimal move for the side to move.
    pub fn hint(&mut self) -> Result<HintJson, AppError> {
        if self.is_over() {
            return Err(AppError::GameOver);
        }
        let (winner, moves) = self.solver.optimal_moves(&self.state)?;
        Ok(HintJson {
            v: 1,
            mv: moves[0],
            winner,
        })
    }

    pub fn to_json(&self) -> SessionJson {
        SessionJson {
            v: 1,
            id: self.id.clone(),
            family: self.spec.to_string(),
            human: self.human,
            engine: self.engine.to_string(),
            created_at: self.created_at,
            state: self.state.to_json(),
            layout: layout(self.state.graph()),
            winner: self.state.status().winner(),
        }
    }
}
