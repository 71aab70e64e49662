//! Perfect-play solver.
//!
//! The game has two outcomes, so the search is a boolean negamax: a position
//! is an Alice win iff it is total, or Alice is to move and some child is an
//! Alice win, or Bob is to move and every child is. Positions are memoized
//! under a key that is canonical for the graph's automorphism group and for
//! the label complement `l ↦ m - l`; both maps preserve legality and the
//! final gracefulness of a labeling, so they preserve the game value.

use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{GameState, Move, Player, Status};
use crate::graph::{automorphisms, build_family, FamilySpec, Graph, GraphError};
use crate::labeling::{LabelingError, PartialLabeling, DEFAULT_BUDGET};

/// Largest vertex count the solver accepts; keys pack one byte per vertex.
pub const MAX_SOLVER_VERTICES: usize = 31;

const FREE: u8 = u8::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("node budget of {limit} exhausted after {nodes} expansions ({memo_entries} memo entries)")]
    BudgetExceeded {
        limit: u64,
        nodes: u64,
        memo_entries: usize,
    },
    #[error("the game is already over")]
    GameOver,
    #[error("graph has {0} vertices; the solver handles at most {MAX_SOLVER_VERTICES}")]
    TooLarge(usize),
    #[error("memo table belongs to a different graph (hash {found:#x}, expected {expected:#x})")]
    GraphMismatch { expected: u64, found: u64 },
    #[error("memo table version {0} is not supported")]
    BadVersion(u32),
    #[error("malformed memo table: {0}")]
    BadMemo(String),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum node expansions over the solver's lifetime.
    pub budget: u64,
    /// Transposition table on/off.
    pub memo: bool,
    /// Canonicalize keys under automorphisms and label complement.
    pub symmetry: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            budget: DEFAULT_BUDGET,
            memo: true,
            symmetry: true,
        }
    }
}

/// Canonical encoding of a position: per-vertex label bytes plus the mover.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateKey([u8; MAX_SOLVER_VERTICES + 1]);

impl StateKey {
    fn to_hex(self, n: usize) -> String {
        let mut s = String::with_capacity(2 * (n + 1));
        for b in self.0[..n].iter().chain(std::iter::once(&self.0[MAX_SOLVER_VERTICES])) {
            s.push_str(&format!("{b:02x}"));
        }
        s
    }

    fn from_hex(hex: &str, n: usize) -> Option<StateKey> {
        if hex.len() != 2 * (n + 1) {
            return None;
        }
        let mut bytes = [FREE; MAX_SOLVER_VERTICES + 1];
        for i in 0..=n {
            let b = u8::from_str_radix(hex.get(2 * i..2 * i + 2)?, 16).ok()?;
            if i == n {
                bytes[MAX_SOLVER_VERTICES] = b;
            } else {
                bytes[i] = b;
            }
        }
        Some(StateKey(bytes))
    }
}

/// Outcome of solving one position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveResult {
    pub winner: Player,
    /// Moves from the queried position that preserve its value for the mover.
    pub optimal_moves: Vec<Move>,
    pub nodes_expanded: u64,
    pub principal_variation: Vec<Move>,
}

/// A solver bound to one graph. The memo table persists across queries.
pub struct Solver {
    graph: Arc<Graph>,
    config: SolverConfig,
    /// Automorphisms as image arrays; identity only when symmetry is off.
    perms: Vec<Vec<usize>>,
    label_order: Vec<usize>,
    vertex_order: Vec<usize>,
    memo: FxHashMap<StateKey, bool>,
    nodes: u64,
}

impl Solver {
    pub fn new(graph: Arc<Graph>) -> Result<Solver, SolveError> {
        Solver::with_config(graph, SolverConfig::default())
    }

    pub fn with_config(graph: Arc<Graph>, config: SolverConfig) -> Result<Solver, SolveError> {
        let n = graph.n_vertices();
        if n > MAX_SOLVER_VERTICES {
            return Err(SolveError::TooLarge(n));
        }
        // fail early on graphs too big for label sets
        PartialLabeling::empty(&graph)?;
        let perms = if config.symmetry {
            match automorphisms(&graph) {
                Ok(group) => group.into_iter().map(|p| p.as_slice().to_vec()).collect(),
                // beyond the automorphism cap, fall back to the trivial group
                Err(GraphError::TooLarge { .. }) => vec![(0..n).collect()],
                Err(e) => return Err(SolveError::Labeling(e.into())),
            }
        } else {
            vec![(0..n).collect()]
        };
        let m = graph.n_edges();
        let mut label_order = Vec::with_capacity(m + 1);
        for i in 0..=m / 2 {
            label_order.push(i);
            if m - i != i {
                label_order.push(m - i);
            }
        }
        let mut vertex_order: Vec<usize> = (0..n).collect();
        vertex_order.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        Ok(Solver {
            graph,
            config,
            perms,
            label_order,
            vertex_order,
            memo: FxHashMap::default(),
            nodes: 0,
        })
    }

    pub fn graph(&self) -> &Arc<Graph> {
        &self.graph
    }

    pub fn config(&self) -> SolverConfig {
        self.config
    }

    pub fn nodes_expanded(&self) -> u64 {
        self.nodes
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Symmetry group size used for key canonicalization.
    pub fn group_order(&self) -> usize {
        self.perms.len()
    }

    /// Winner of the position under perfect play.
    pub fn winner(&mut self, state: &GameState) -> Result<Player, SolveError> {
        let mut lab = state.labeling().clone();
        let alice = self.alice_wins(&mut lab, state.to_move())?;
        Ok(if alice { Player::Alice } else { Player::Bob })
    }

    /// Game value of the position reached by `mover` being to move on `labeling`.
    pub fn winner_of(&mut self, labeling: &PartialLabeling, mover: Player) -> Result<Player, SolveError> {
        let mut lab = labeling.clone();
        let alice = self.alice_wins(&mut lab, mover)?;
        Ok(if alice { Player::Alice } else { Player::Bob })
    }

    /// Moves that keep the position's value for the mover, sorted by `(vertex, label)`.
    pub fn optimal_moves(&mut self, state: &GameState) -> Result<(Player, Vec<Move>), SolveError> {
        if state.status() != Status::InProgress {
            let winner = state.status().winner().expect("terminal");
            return Ok((winner, Vec::new()));
        }
        let mover = state.to_move();
        let mut lab = state.labeling().clone();
        let mut wins = Vec::new();
        let mut all = Vec::new();
        for mv in state.legal_moves() {
            lab.assign(&self.graph, mv.vertex, mv.label);
            let alice = self.alice_wins(&mut lab, mover.other());
            lab.unassign(&self.graph, mv.vertex);
            let child = if alice? { Player::Alice } else { Player::Bob };
            if child == mover {
                wins.push(mv);
            }
            all.push(mv);
        }
        if wins.is_empty() {
            Ok((mover.other(), all))
        } else {
            Ok((mover, wins))
        }
    }

    /// The lowest `(vertex, label)` optimal move.
    pub fn best_move(&mut self, state: &GameState) -> Result<Move, SolveError> {
        if state.status() != Status::InProgress {
            return Err(SolveError::GameOver);
        }
        let (_, moves) = self.optimal_moves(state)?;
        Ok(moves[0])
    }

    /// Full result for a position: winner, optimal set and one optimal line.
    pub fn solve_state(&mut self, state: &GameState) -> Result<SolveResult, SolveError> {
        let before = self.nodes;
        let (winner, optimal_moves) = self.optimal_moves(state)?;
        let mut principal_variation = Vec::new();
        let mut cursor = state.clone();
        while cursor.status() == Status::InProgress {
            let mv = self.best_move(&cursor)?;
            principal_variation.push(mv);
            cursor = cursor.play_move(mv).expect("optimal moves are legal");
        }
        Ok(SolveResult {
            winner,
            optimal_moves,
            nodes_expanded: self.nodes - before,
            principal_variation,
        })
    }

    fn key(&self, lab: &PartialLabeling, mover: Player) -> StateKey {
        let raw = lab.raw();
        let n = raw.len();
        let m = lab.m() as u8;
        let mut best = [FREE; MAX_SOLVER_VERTICES + 1];
        best[MAX_SOLVER_VERTICES] = mover as u8;
        if !self.config.symmetry {
            best[..n].copy_from_slice(raw);
            return StateKey(best);
        }
        let mut first = true;
        let mut img = [FREE; MAX_SOLVER_VERTICES];
        let mut img_c = [FREE; MAX_SOLVER_VERTICES];
        for perm in &self.perms {
            for v in 0..n {
                let l = raw[v];
                img[perm[v]] = l;
                img_c[perm[v]] = if l == FREE { FREE } else { m - l };
            }
            for cand in [&img, &img_c] {
                if first || cand[..n] < best[..n] {
                    best[..n].copy_from_slice(&cand[..n]);
                    first = false;
                }
            }
        }
        StateKey(best)
    }

    fn alice_wins(&mut self, lab: &mut PartialLabeling, mover: Player) -> Result<bool, SolveError> {
        if lab.is_total() {
            return Ok(true);
        }
        if !lab.may_complete(&self.graph) {
            return Ok(false);
        }
        let key = if self.config.memo {
            let key = self.key(lab, mover);
            if let Some(&v) = self.memo.get(&key) {
                return Ok(v);
            }
            Some(key)
        } else {
            None
        };
        self.nodes += 1;
        if self.nodes > self.config.budget {
            return Err(SolveError::BudgetExceeded {
                limit: self.config.budget,
                nodes: self.nodes,
                memo_entries: self.memo.len(),
            });
        }
        let graph = Arc::clone(&self.graph);
        let target = mover == Player::Alice;
        // the mover is stuck: Bob wins
        let mut value = false;
        let mut any_move = false;
        'outer: for li in 0..self.label_order.len() {
            let l = self.label_order[li];
            if lab.used_labels().contains(l) {
                continue;
            }
            for vi in 0..self.vertex_order.len() {
                let v = self.vertex_order[vi];
                if !lab.is_legal_move(&graph, v, l) {
                    continue;
                }
                any_move = true;
                lab.assign(&graph, v, l);
                let child = self.alice_wins(lab, mover.other());
                lab.unassign(&graph, v);
                if child? == target {
                    value = target;
                    break 'outer;
                }
                value = !target;
            }
        }
        if !any_move {
            value = false;
        }
        if let Some(key) = key {
            self.memo.insert(key, value);
        }
        Ok(value)
    }

    /// Serializable snapshot of the memo table.
    pub fn export_memo(&self) -> MemoDump {
        let n = self.graph.n_vertices();
        let mut entries: Vec<(String, bool)> =
            self.memo.iter().map(|(k, &v)| (k.to_hex(n), v)).collect();
        entries.sort();
        MemoDump {
            v: 1,
            graph_hash: self.graph.structure_hash(),
            symmetry: self.config.symmetry,
            entries,
        }
    }

    /// Loads a snapshot taken on the same graph with the same key scheme.
    pub fn import_memo(&mut self, dump: &MemoDump) -> Result<usize, SolveError> {
        if dump.v != 1 {
            return Err(SolveError::BadVersion(dump.v));
        }
        let expected = self.graph.structure_hash();
        if dump.graph_hash != expected {
            return Err(SolveError::GraphMismatch {
                expected,
                found: dump.graph_hash,
            });
        }
        if dump.symmetry != self.config.symmetry {
            return Err(SolveError::BadMemo("symmetry setting differs".into()));
        }
        let n = self.graph.n_vertices();
        for (hex, value) in &dump.entries {
            let key = StateKey::from_hex(hex, n)
                .ok_or_else(|| SolveError::BadMemo(format!("bad key {hex:?}")))?;
            self.memo.insert(key, *value);
        }
        Ok(dump.entries.len())
    }
}

/// Versioned memo-table file.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MemoDump {
    pub v: u32,
    pub graph_hash: u64,
    pub symmetry: bool,
    pub entries: Vec<(String, bool)>,
}

/// Solves the empty position of `graph` with `first` to move.
pub fn solve(graph: Arc<Graph>, first: Player, budget: u64) -> Result<SolveResult, SolveError> {
    let mut solver = Solver::with_config(
        Arc::clone(&graph),
        SolverConfig {
            budget,
            ..SolverConfig::default()
        },
    )?;
    let state = GameState::new(graph, first).map_err(|e| match e {
        crate::game::GameError::Labeling(l) => SolveError::Labeling(l),
        _ => SolveError::GameOver,
    })?;
    solver.solve_state(&state)
}

/// One row of the winners table: who wins with Alice or Bob moving first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub instance: FamilySpec,
    pub alice_first: Option<Player>,
    pub bob_first: Option<Player>,
    pub nodes_expanded: u64,
    /// Set when either solve failed; the other column may still be filled.
    pub error: Option<String>,
}

/// Solves each instance for both first players. Failures are kept in the row
/// and the run continues.
pub fn solve_table(specs: &[FamilySpec], budget: u64) -> Vec<TableRow> {
    specs
        .iter()
        .map(|spec| {
            let mut row = TableRow {
                instance: spec.clone(),
                alice_first: None,
                bob_first: None,
                nodes_expanded: 0,
                error: None,
            };
            let graph = match build_family(spec) {
                Ok(g) => Arc::new(g),
                Err(e) => {
                    row.error = Some(e.to_string());
                    return row;
                }
            };
            for first in [Player::Alice, Player::Bob] {
                match solve(Arc::clone(&graph), first, budget) {
                    Ok(r) => {
                        row.nodes_expanded += r.nodes_expanded;
                        match first {
                            Player::Alice => row.alice_first = Some(r.winner),
                            Player::Bob => row.bob_first = Some(r.winner),
                        }
                    }
                    Err(e) => row.error = Some(e.to_string()),
                }
            }
            row
        })
        .collect()
}

/// The desk-scale instances of the winners table, in display order.
pub fn table_instances() -> Vec<FamilySpec> {
    use FamilySpec::*;
    vec![
        Path { n: 1 },
        Path { n: 2 },
        Path { n: 3 },
        Path { n: 4 },
        Path { n: 5 },
        Path { n: 6 },
        Complete { n: 3 },
        Complete { n: 4 },
        Cycle { n: 4 },
        Cycle { n: 6 },
        Cycle { n: 7 },
        Star { q: 2 },
        Star { q: 3 },
        Star { q: 4 },
        CompleteBipartite { p: 2, q: 2 },
        CompleteBipartite { p: 2, q: 3 },
        Caterpillar { legs: vec![1, 2] },
        Caterpillar { legs: vec![2, 2] },
        Wheel { n: 3 },
        Wheel { n: 4 },
        Wheel { n: 5 },
        Helm { n: 3 },
        Gear { n: 3 },
        Hypercube { n: 2 },
        PathPower { n: 4, k: 2 },
        PathPower { n: 5, k: 2 },
        Prism { r: 3 },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn graph(spec: FamilySpec) -> Arc<Graph> {
        Arc::new(build_family(&spec).unwrap())
    }

    fn winner(spec: FamilySpec, first: Player) -> Player {
        solve(graph(spec), first, DEFAULT_BUDGET).unwrap().winner
    }

    #[test]
    fn small_winners() {
        assert_eq!(winner(FamilySpec::Path { n: 3 }, Player::Bob), Player::Bob);
        assert_eq!(winner(FamilySpec::Complete { n: 3 }, Player::Bob), Player::Alice);
        assert_eq!(winner(FamilySpec::Path { n: 1 }, Player::Alice), Player::Alice);
        assert_eq!(winner(FamilySpec::Cycle { n: 5 }, Player::Alice), Player::Bob);
        assert_eq!(winner(FamilySpec::Cycle { n: 5 }, Player::Bob), Player::Bob);
        assert_eq!(winner(FamilySpec::Wheel { n: 4 }, Player::Alice), Player::Bob);
    }

    #[test]
    fn k3_alice_opens_with_an_extreme_label() {
        let g = graph(FamilySpec::Complete { n: 3 });
        let state = GameState::new(Arc::clone(&g), Player::Alice).unwrap();
        let mut solver = Solver::new(g).unwrap();
        let (w, moves) = solver.optimal_moves(&state).unwrap();
        assert_eq!(w, Player::Alice);
        assert!(moves.iter().all(|m| m.label == 0 || m.label == 3));
        // oracle: every vertex with labels 0 and 3
        assert_eq!(moves.len(), 6);
        let best = solver.best_move(&state).unwrap();
        assert!(best.label == 0 || best.label == 3);
    }

    #[test]
    fn w4_bob_center_n_is_optimal() {
        let g = graph(FamilySpec::Wheel { n: 4 });
        let state = GameState::new(Arc::clone(&g), Player::Bob).unwrap();
        let mut solver = Solver::new(g).unwrap();
        let (w, moves) = solver.optimal_moves(&state).unwrap();
        assert_eq!(w, Player::Bob);
        assert!(moves.contains(&Move::new(4, 4)));
    }

    #[test]
    fn forced_position_best_move() {
        let g = graph(FamilySpec::Complete { n: 3 });
        let s = GameState::replay(Arc::clone(&g), Player::Bob, &[Move::new(0, 1), Move::new(1, 0)]).unwrap();
        let mut solver = Solver::new(g).unwrap();
        assert_eq!(solver.best_move(&s).unwrap(), Move::new(2, 3));
    }

    #[test]
    fn principal_variation_reaches_the_predicted_outcome() {
        for spec in [FamilySpec::Path { n: 3 }, FamilySpec::Complete { n: 3 }, FamilySpec::Cycle { n: 4 }] {
            for first in [Player::Alice, Player::Bob] {
                let g = graph(spec.clone());
                let res = solve(Arc::clone(&g), first, DEFAULT_BUDGET).unwrap();
                let end = GameState::replay(g, first, &res.principal_variation).unwrap();
                assert_eq!(end.status().winner(), Some(res.winner), "{spec} {first}");
            }
        }
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let g = graph(FamilySpec::Wheel { n: 5 });
        let err = solve(g, Player::Alice, 5).unwrap_err();
        assert!(matches!(err, SolveError::BudgetExceeded { limit: 5, .. }));
    }

    #[test]
    fn best_move_on_finished_game() {
        let g = graph(FamilySpec::Path { n: 1 });
        let s = GameState::replay(Arc::clone(&g), Player::Alice, &[Move::new(0, 0)]).unwrap();
        let mut solver = Solver::new(g).unwrap();
        assert_eq!(solver.best_move(&s), Err(SolveError::GameOver));
    }

    #[test]
    fn memo_dump_round_trip_and_hash_check() {
        let g = graph(FamilySpec::Cycle { n: 4 });
        let mut solver = Solver::new(Arc::clone(&g)).unwrap();
        let s = GameState::new(Arc::clone(&g), Player::Alice).unwrap();
        solver.winner(&s).unwrap();
        let dump = solver.export_memo();
        let text = serde_json::to_string(&dump).unwrap();
        let back: MemoDump = serde_json::from_str(&text).unwrap();
        let mut fresh = Solver::new(Arc::clone(&g)).unwrap();
        assert_eq!(fresh.import_memo(&back).unwrap(), solver.memo_len());
        assert_eq!(fresh.winner(&s).unwrap(), Player::Bob);

        let other = graph(FamilySpec::Path { n: 4 });
        let mut wrong = Solver::new(other).unwrap();
        assert!(matches!(wrong.import_memo(&back), Err(SolveError::GraphMismatch { .. })));
    }
}
