//! Turn structure, legal moves and win attribution for the Graceful game.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphJson};
use crate::labeling::{IllegalMove, LabelingError, PartialLabeling};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Alice,
    Bob,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::Alice => Player::Bob,
            Player::Bob => Player::Alice,
        }
    }

    /// Single-letter tag used in winner tables.
    pub fn letter(self) -> char {
        match self {
            Player::Alice => 'A',
            Player::Bob => 'B',
        }
    }
}

impl fmt::Display for Player {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Player::Alice => "Alice",
            Player::Bob => "Bob",
        })
    }
}

impl FromStr for Player {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alice" | "a" => Ok(Player::Alice),
            "bob" | "b" => Ok(Player::Bob),
            _ => Err(format!("unknown player {s:?}")),
        }
    }
}

/// Assign `label` to `vertex`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Move {
    pub vertex: usize,
    pub label: usize,
}

impl Move {
    pub fn new(vertex: usize, label: usize) -> Move {
        Move { vertex, label }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}={}", self.vertex, self.label)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    InProgress,
    AliceWon,
    BobWon,
}

impl Status {
    pub fn winner(self) -> Option<Player> {
        match self {
            Status::InProgress => None,
            Status::AliceWon => Some(Player::Alice),
            Status::BobWon => Some(Player::Bob),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub player: Player,
    pub vertex: usize,
    pub label: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("illegal move: {0}")]
    IllegalMove(#[from] IllegalMove),
    #[error("it is {expected}'s turn")]
    NotYourTurn { expected: Player },
    #[error("the game is over")]
    GameOver,
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// An immutable game position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    graph: Arc<Graph>,
    labeling: PartialLabeling,
    first_player: Player,
    to_move: Player,
    history: Vec<HistoryEntry>,
}

impl GameState {
    pub fn new(graph: Arc<Graph>, first: Player) -> Result<GameState, GameError> {
        let labeling = PartialLabeling::empty(&graph)?;
        Ok(GameState {
            graph,
            labeling,
            first_player: first,
            to_move: first,
            history: Vec::new(),
        })
    }

    /// Replays `moves` from the empty position.
    pub fn replay(graph: Arc<Graph>, first: Player, moves: &[Move]) -> Result<GameState, GameError> {
        moves
            .iter()
            .try_fold(GameState::new(graph, first)?, |s, &mv| s.play_move(mv))
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn labeling(&self) -> &PartialLabeling {
        &self.labeling
    }

    pub fn first_player(&self) -> Player {
        self.first_player
    }

    pub fn to_move(&self) -> Player {
        self.to_move
    }

    pub fn history(&self) -> &[HistoryEntry] {
        &self.history
    }

    pub fn moves(&self) -> Vec<Move> {
        self.history.iter().map(|h| Move::new(h.vertex, h.label)).collect()
    }

    pub fn m(&self) -> usize {
        self.labeling.m()
    }

    pub fn is_legal(&self, mv: Move) -> bool {
        self.labeling.is_legal_move(&self.graph, mv.vertex, mv.label)
    }

    /// Every legal `(vertex, label)` pair, sorted; empty once the labeling is total.
    pub fn legal_moves(&self) -> Vec<Move> {
        let mut out = Vec::new();
        for v in self.labeling.free_vertices() {
            for l in self.labeling.free_labels().iter() {
                if self.labeling.is_legal_move(&self.graph, v, l) {
                    out.push(Move::new(v, l));
                }
            }
        }
        out
    }

    pub fn has_legal_move(&self) -> bool {
        let free = self.labeling.free_labels();
        self.labeling
            .free_vertices()
            .any(|v| free.iter().any(|l| self.labeling.is_legal_move(&self.graph, v, l)))
    }

    /// Alice has won once the labeling is total (every move kept edge labels
    /// distinct, so it is graceful); Bob has won once the mover is stuck.
    pub fn status(&self) -> Status {
        if self.labeling.is_total() {
            Status::AliceWon
        } else if !self.has_legal_move() {
            Status::BobWon
        } else {
            Status::InProgress
        }
    }

    /// Plays `mv` for whoever is to move.
    pub fn play_move(&self, mv: Move) -> Result<GameState, GameError> {
        if self.status() != Status::InProgress {
            return Err(GameError::GameOver);
        }
        let labeling = self.labeling.apply_move(&self.graph, mv.vertex, mv.label)?;
        let mut history = self.history.clone();
        history.push(HistoryEntry {
            player: self.to_move,
            vertex: mv.vertex,
            label: mv.label,
        });
        Ok(GameState {
            graph: Arc::clone(&self.graph),
            labeling,
            first_player: self.first_player,
            to_move: self.to_move.other(),
            history,
        })
    }

    /// Plays `mv` on behalf of `player`, rejecting out-of-turn requests.
    pub fn play_as(&self, player: Player, mv: Move) -> Result<GameState, GameError> {
        if self.status() != Status::InProgress {
            return Err(GameError::GameOver);
        }
        if player != self.to_move {
            return Err(GameError::NotYourTurn {
                expected: self.to_move,
            });
        }
        self.play_move(mv)
    }

    pub fn to_json(&self) -> StateJson {
        StateJson {
            v: 1,
            graph: self.graph.to_json(),
            labels: self.labeling.labels(),
            edge_labels: self
                .graph
                .edges()
                .iter()
                .map(|&(u, v)| match (self.labeling.label(u), self.labeling.label(v)) {
                    (Some(a), Some(b)) => Some(a.abs_diff(b)),
                    _ => None,
                })
                .collect(),
            first: self.first_player,
            to_move: self.to_move,
            history: self.history.clone(),
            status: self.status(),
        }
    }
}

/// Wire format for a game position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateJson {
    pub v: u32,
    pub graph: GraphJson,
    pub labels: Vec<Option<usize>>,
    /// Induced label per edge, in the order of `graph.edges`.
    pub edge_labels: Vec<Option<usize>>,
    pub first: Player,
    pub to_move: Player,
    pub history: Vec<HistoryEntry>,
    pub status: Status,
}
