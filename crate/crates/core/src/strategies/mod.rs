//! Scripted winning strategies and their exhaustive verifier.
//!
//! A script answers for one side. For Bob, answers are tried in this order:
//! a position with no graceful completion is already won, so any legal move
//! will do; if one of the labels 0 and m is placed and the other unused, Bob
//! makes the edge label m impossible when he can; then the family script;
//! then any move that leaves a position without graceful completion. Alice
//! scripts fall back to the least move that keeps a completion available.
//! Anything else is off script.

use std::cell::RefCell;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::game::{GameState, Move, Player, Status};
use crate::graph::{build_family, FamilySpec, Graph, GraphError};
use crate::labeling::{has_graceful_completion, LabelingError, PartialLabeling, DEFAULT_BUDGET};
use crate::solver::{SolveError, Solver, SolverConfig};

mod alice;
mod bipartite;
mod ctx;
mod paths;
mod pathpower;
mod prism;
mod trees;
mod wheels;

use ctx::Ctx;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StrategyId {
    AliceP1p2,
    AliceP3First,
    AliceK3,
    AliceStarFirst,
    BobPath,
    BobP3First,
    BobK4,
    BobCycle,
    BobBipartite,
    BobCaterpillar,
    BobWheelFirst,
    BobWheelW3w4w5,
    BobGear,
    BobHelm,
    BobWeb,
    BobHypercube,
    BobPrism,
    BobPathpower2,
}

impl StrategyId {
    pub const ALL: [StrategyId; 18] = [
        StrategyId::AliceP1p2,
        StrategyId::AliceP3First,
        StrategyId::AliceK3,
        StrategyId::AliceStarFirst,
        StrategyId::BobPath,
        StrategyId::BobP3First,
        StrategyId::BobK4,
        StrategyId::BobCycle,
        StrategyId::BobBipartite,
        StrategyId::BobCaterpillar,
        StrategyId::BobWheelFirst,
        StrategyId::BobWheelW3w4w5,
        StrategyId::BobGear,
        StrategyId::BobHelm,
        StrategyId::BobWeb,
        StrategyId::BobHypercube,
        StrategyId::BobPrism,
        StrategyId::BobPathpower2,
    ];

    /// Command-line name.
    pub fn name(self) -> &'static str {
        match self {
            StrategyId::AliceP1p2 => "alice-p1p2",
            StrategyId::AliceP3First => "alice-p3-first",
            StrategyId::AliceK3 => "alice-k3",
            StrategyId::AliceStarFirst => "alice-star",
            StrategyId::BobPath => "bob-path",
            StrategyId::BobP3First => "bob-p3-first",
            StrategyId::BobK4 => "bob-k4",
            StrategyId::BobCycle => "bob-cycle",
            StrategyId::BobBipartite => "bob-bipartite",
            StrategyId::BobCaterpillar => "bob-caterpillar",
            StrategyId::BobWheelFirst => "bob-wheel-first",
            StrategyId::BobWheelW3w4w5 => "bob-wheel-small",
            StrategyId::BobGear => "bob-gear",
            StrategyId::BobHelm => "bob-helm",
            StrategyId::BobWeb => "bob-web",
            StrategyId::BobHypercube => "bob-hypercube",
            StrategyId::BobPrism => "bob-prism",
            StrategyId::BobPathpower2 => "bob-pathpower2",
        }
    }

    pub fn scripted_side(self) -> Player {
        match self {
            StrategyId::AliceP1p2
            | StrategyId::AliceP3First
            | StrategyId::AliceK3
            | StrategyId::AliceStarFirst => Player::Alice,
            _ => Player::Bob,
        }
    }

    /// The first player the strategy is stated for; `None` means either.
    pub fn required_first(self) -> Option<Player> {
        match self {
            StrategyId::AliceP3First | StrategyId::AliceStarFirst => Some(Player::Alice),
            StrategyId::BobP3First | StrategyId::BobWheelFirst => Some(Player::Bob),
            _ => None,
        }
    }

    /// Whether the strategy covers `spec`.
    pub fn applies_to(self, spec: &FamilySpec) -> bool {
        use FamilySpec as F;
        match (self, spec) {
            (StrategyId::AliceP1p2, F::Path { n }) => *n <= 2,
            (StrategyId::AliceP3First, F::Path { n }) => *n == 3,
            (StrategyId::AliceK3, F::Complete { n }) | (StrategyId::AliceK3, F::Cycle { n }) => *n == 3,
            (StrategyId::AliceStarFirst, F::Star { .. }) => true,
            (StrategyId::AliceStarFirst, F::CompleteBipartite { p, q }) => *p == 1 || *q == 1,
            (StrategyId::BobPath, F::Path { n }) => *n >= 4,
            (StrategyId::BobP3First, F::Path { n }) => *n == 3,
            (StrategyId::BobK4, F::Complete { n }) => *n == 4,
            (StrategyId::BobK4, F::Wheel { n }) => *n == 3,
            (StrategyId::BobCycle, F::Cycle { n }) => *n >= 4,
            (StrategyId::BobBipartite, F::CompleteBipartite { p, q }) => *p >= 2 && *q >= 2,
            (StrategyId::BobCaterpillar, F::Caterpillar { .. }) => build_family(spec)
                .map(|g| g.diameter().is_some_and(|d| d >= 3))
                .unwrap_or(false),
            (StrategyId::BobWheelFirst, F::Wheel { .. }) => true,
            (StrategyId::BobWheelW3w4w5, F::Wheel { n }) => (3..=5).contains(n),
            (StrategyId::BobGear, F::Gear { .. }) => true,
            (StrategyId::BobHelm, F::Helm { .. }) => true,
            (StrategyId::BobWeb, F::Web { .. }) => true,
            (StrategyId::BobHypercube, F::Hypercube { n }) => *n >= 2,
            (StrategyId::BobPrism, F::Prism { .. }) => true,
            (StrategyId::BobPathpower2, F::PathPower { n, k }) => *k == 2 && *n >= 4,
            _ => false,
        }
    }

    /// Strategies applicable to `spec` with `first` moving first.
    pub fn applicable(spec: &FamilySpec, first: Player) -> Vec<StrategyId> {
        StrategyId::ALL
            .into_iter()
            .filter(|id| id.applies_to(spec) && id.required_first().is_none_or(|p| p == first))
            .collect()
    }

    fn script(self) -> fn(&Ctx) -> Option<Move> {
        match self {
            StrategyId::AliceP1p2 => alice::p1p2,
            StrategyId::AliceP3First => alice::p3_first,
            StrategyId::AliceK3 => alice::k3,
            StrategyId::AliceStarFirst => alice::star_first,
            StrategyId::BobPath => paths::bob_path,
            StrategyId::BobP3First => paths::bob_p3_first,
            StrategyId::BobK4 => paths::bob_k4,
            StrategyId::BobCycle => paths::bob_cycle,
            StrategyId::BobBipartite => bipartite::bob_bipartite,
            StrategyId::BobCaterpillar => trees::bob_caterpillar,
            StrategyId::BobWheelFirst => wheels::bob_wheel_first,
            StrategyId::BobWheelW3w4w5 => wheels::bob_wheel_small,
            StrategyId::BobGear => wheels::bob_gear,
            StrategyId::BobHelm => wheels::bob_helm,
            StrategyId::BobWeb => wheels::bob_web,
            StrategyId::BobHypercube => bipartite::bob_hypercube,
            StrategyId::BobPrism => prism::bob_prism,
            StrategyId::BobPathpower2 => pathpower::bob_pathpower2,
        }
    }
}

impl fmt::Display for StrategyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyId {
    type Err = String;

    /// Accepts `bob-wheel-small` as well as `BOB_WHEEL_W3W4W5` style names.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        let alias = match key.as_str() {
            "alice-star-first" => "alice-star",
            "bob-wheel-w3w4w5" => "bob-wheel-small",
            other => other,
        };
        StrategyId::ALL
            .into_iter()
            .find(|id| id.name() == alias)
            .ok_or_else(|| format!("unknown strategy {s:?}"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StrategyError {
    #[error("strategy {id} does not apply here: {reason}")]
    NotApplicable { id: StrategyId, reason: String },
    #[error("position is not covered by the {0} script")]
    OffScript(StrategyId),
    #[error("the game is already over")]
    GameOver,
    #[error("verification budget of {limit} positions exhausted")]
    BudgetExceeded { limit: u64 },
    #[error(transparent)]
    Solver(#[from] SolveError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
}

/// Where a scripted move came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MoveSource {
    /// The family script.
    Script,
    /// Making the edge label m impossible once 0 or m is placed.
    EdgeM,
    /// The position already has no graceful completion.
    Dead,
    /// A move that leaves no graceful completion.
    Refutation,
    /// Alice's least move that keeps a graceful completion.
    FollowUp,
}

/// Caches "does some graceful labeling extend this position" answers.
pub struct CompletionOracle {
    cache: FxHashMap<Vec<u8>, bool>,
    budget: u64,
    exhausted: bool,
}

impl CompletionOracle {
    pub fn new(budget: u64) -> CompletionOracle {
        CompletionOracle {
            cache: FxHashMap::default(),
            budget,
            exhausted: false,
        }
    }

    /// Budget overruns answer `true` (nothing proven) and are reported later.
    pub fn completable(&mut self, g: &Graph, lab: &PartialLabeling) -> bool {
        if let Some(&v) = self.cache.get(lab.raw()) {
            return v;
        }
        let v = match has_graceful_completion(g, lab, self.budget) {
            Ok(v) => v,
            Err(_) => {
                self.exhausted = true;
                return true;
            }
        };
        self.cache.insert(lab.raw().to_vec(), v);
        v
    }

    fn take_exhausted(&mut self) -> bool {
        std::mem::take(&mut self.exhausted)
    }
}

impl Default for CompletionOracle {
    fn default() -> Self {
        CompletionOracle::new(DEFAULT_BUDGET)
    }
}

fn check_applicable(id: StrategyId, s: &GameState) -> Result<(), StrategyError> {
    let not = |reason: String| Err(StrategyError::NotApplicable { id, reason });
    match s.graph().family() {
        Some(spec) if id.applies_to(spec) => {}
        Some(spec) => return not(format!("{spec} is outside the strategy's hypothesis")),
        None => return not("graph has no family".into()),
    }
    if let Some(p) = id.required_first() {
        if s.first_player() != p {
            return not(format!("stated for {p} moving first"));
        }
    }
    if s.to_move() != id.scripted_side() {
        return not(format!("it is {}'s turn", s.to_move()));
    }
    Ok(())
}

/// The scripted side's move in `s`.
pub fn scripted_move(id: StrategyId, s: &GameState) -> Result<Move, StrategyError> {
    let oracle = RefCell::new(CompletionOracle::default());
    scripted_move_with(id, s, &oracle).map(|(mv, _)| mv)
}

/// As [`scripted_move`], reusing `oracle` and reporting the move's source.
pub fn scripted_move_with(
    id: StrategyId,
    s: &GameState,
    oracle: &RefCell<CompletionOracle>,
) -> Result<(Move, MoveSource), StrategyError> {
    check_applicable(id, s)?;
    if s.status() != Status::InProgress {
        return Err(StrategyError::GameOver);
    }
    let c = Ctx::new(s, oracle);
    let found = match id.scripted_side() {
        Player::Bob => bob_layers(id, &c),
        Player::Alice => alice_layers(id, &c),
    };
    if oracle.borrow_mut().take_exhausted() {
        return Err(StrategyError::BudgetExceeded {
            limit: oracle.borrow().budget,
        });
    }
    found.ok_or(StrategyError::OffScript(id))
}

fn bob_layers(id: StrategyId, c: &Ctx) -> Option<(Move, MoveSource)> {
    if !c.completable(c.s.labeling()) {
        return c.s.legal_moves().first().map(|&mv| (mv, MoveSource::Dead));
    }
    if let Some(mv) = edge_m_blocker(c) {
        return Some((mv, MoveSource::EdgeM));
    }
    if let Some(mv) = (id.script())(c).filter(|mv| c.legal(mv.vertex, mv.label)) {
        return Some((mv, MoveSource::Script));
    }
    c.first_killing(c.s.legal_moves())
        .map(|mv| (mv, MoveSource::Refutation))
}

fn alice_layers(id: StrategyId, c: &Ctx) -> Option<(Move, MoveSource)> {
    if let Some(mv) = (id.script())(c).filter(|mv| c.legal(mv.vertex, mv.label)) {
        return Some((mv, MoveSource::Script));
    }
    c.s.legal_moves()
        .into_iter()
        .find(|mv| !c.kills(*mv))
        .map(|mv| (mv, MoveSource::FollowUp))
}

/// With 0 (resp. m) on `v` and m (resp. 0) unused, the edge label m needs the
/// other extreme next to `v`: put it out of reach, or fill `v`'s last free
/// neighbor with something else.
fn edge_m_blocker(c: &Ctx) -> Option<Move> {
    let m = c.m;
    for (placed, missing) in [(0, m), (m, 0)] {
        let Some(v) = c.at(placed) else { continue };
        if c.used(missing) {
            continue;
        }
        if let Some(mv) = c.away_from(v, missing) {
            return Some(mv);
        }
        if let [w] = c.free_nbrs(v)[..] {
            if let Some(mv) = c.least_label(w, |l| l != missing) {
                return Some(mv);
            }
        }
    }
    None
}

/// Outcome of exhaustively checking a strategy against every opponent reply.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyVerdict {
    pub strategy: StrategyId,
    pub instance: FamilySpec,
    pub first: Player,
    pub holds: bool,
    /// Finished lines: terminal positions, plus positions Bob has already won
    /// because no graceful completion exists.
    pub lines_checked: u64,
    /// Scripted-side turns answered by the solver instead of the script.
    pub offscript_count: u64,
    /// Scripted-side turns answered by a one-move refutation search.
    pub refutation_count: u64,
    pub counterexample: Option<Vec<Move>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Maximum positions visited.
    pub budget: u64,
    /// Per-query budget for completion checks.
    pub completion_budget: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: 50_000_000,
            completion_budget: DEFAULT_BUDGET,
        }
    }
}

pub fn verify_strategy(id: StrategyId, spec: &FamilySpec, first: Player) -> Result<StrategyVerdict, StrategyError> {
    verify_strategy_with(id, spec, first, VerifyOptions::default())
}

pub fn verify_strategy_with(
    id: StrategyId,
    spec: &FamilySpec,
    first: Player,
    opts: VerifyOptions,
) -> Result<StrategyVerdict, StrategyError> {
    let graph = Arc::new(build_family(spec)?);
    let root = GameState::new(Arc::clone(&graph), first).map_err(|e| match e {
        crate::game::GameError::Labeling(l) => StrategyError::Labeling(l),
        _ => StrategyError::GameOver,
    })?;
    if !id.applies_to(spec) {
        return Err(StrategyError::NotApplicable {
            id,
            reason: format!("{spec} is outside the strategy's hypothesis"),
        });
    }
    if let Some(p) = id.required_first() {
        if p != first {
            return Err(StrategyError::NotApplicable {
                id,
                reason: format!("stated for {p} moving first"),
            });
        }
    }
    let mut v = Verifier {
        id,
        side: id.scripted_side(),
        graph,
        oracle: RefCell::new(CompletionOracle::new(opts.completion_budget)),
        solver: None,
        budget: opts.budget,
        visited: 0,
        lines: 0,
        offscript: 0,
        refutations: 0,
    };
    let counterexample = v.explore(&root)?;
    Ok(StrategyVerdict {
        strategy: id,
        instance: spec.clone(),
        first,
        holds: counterexample.is_none(),
        lines_checked: v.lines,
        offscript_count: v.offscript,
        refutation_count: v.refutations,
        counterexample,
    })
}

struct Verifier {
    id: StrategyId,
    side: Player,
    graph: Arc<Graph>,
    oracle: RefCell<CompletionOracle>,
    solver: Option<Solver>,
    budget: u64,
    visited: u64,
    lines: u64,
    offscript: u64,
    refutations: u64,
}

impl Verifier {
    /// Returns a losing line for the scripted side, if any.
    fn explore(&mut self, s: &GameState) -> Result<Option<Vec<Move>>, StrategyError> {
        self.visited += 1;
        if self.visited > self.budget {
            return Err(StrategyError::BudgetExceeded { limit: self.budget });
        }
        if let Some(winner) = s.status().winner() {
            self.lines += 1;
            return Ok((winner != self.side).then(|| s.moves()));
        }
        let completable = self.oracle.borrow_mut().completable(&self.graph, s.labeling());
        if self.oracle.borrow_mut().take_exhausted() {
            return Err(StrategyError::BudgetExceeded {
                limit: self.oracle.borrow().budget,
            });
        }
        if !completable {
            self.lines += 1;
            return Ok(match self.side {
                Player::Bob => None,
                Player::Alice => Some(play_out(s)),
            });
        }
        if s.to_move() == self.side {
            let mv = match scripted_move_with(self.id, s, &self.oracle) {
                Ok((mv, source)) => {
                    if source == MoveSource::Refutation {
                        self.refutations += 1;
                    }
                    mv
                }
                Err(StrategyError::OffScript(_)) => {
                    self.offscript += 1;
                    self.solver_move(s)?
                }
                Err(e) => return Err(e),
            };
            let next = s.play_move(mv).expect("scripted moves are legal");
            self.explore(&next)
        } else {
            for mv in s.legal_moves() {
                let next = s.play_move(mv).expect("legal move");
                if let Some(line) = self.explore(&next)? {
                    return Ok(Some(line));
                }
            }
            Ok(None)
        }
    }

    fn solver_move(&mut self, s: &GameState) -> Result<Move, StrategyError> {
        if self.solver.is_none() {
            self.solver = Some(Solver::with_config(Arc::clone(&self.graph), SolverConfig::default())?);
        }
        Ok(self.solver.as_mut().expect("just built").best_move(s)?)
    }
}

/// Any continuation to the end of the game.
fn play_out(s: &GameState) -> Vec<Move> {
    let mut cur = s.clone();
    while let Some(&mv) = cur.legal_moves().first() {
        cur = cur.play_move(mv).expect("legal move");
    }
    cur.moves()
}

/// Opening moves for Alice that the blocker rules show to be losing.
pub fn forbidden_first_labels(g: &Graph) -> Result<Vec<Move>, StrategyError> {
    let spec = g.family().ok_or(StrategyError::NotApplicable {
        id: StrategyId::BobPath,
        reason: "graph has no family".into(),
    })?;
    let n = g.n_vertices();
    let m = g.n_edges();
    let mut out = Vec::new();
    // an extreme label next to a vertex with a non-neighbor
    for v in 0..n {
        if g.degree(v) + 1 < n {
            out.push(Move::new(v, 0));
            out.push(Move::new(v, m));
        }
    }
    let every_label = |out: &mut Vec<Move>, v: usize| out.extend((0..=m).map(|l| Move::new(v, l)));
    match *spec {
        FamilySpec::Wheel { n: k } => out.push(Move::new(k, k)),
        FamilySpec::Caterpillar { .. } => {
            // spine vertices carrying a leaf
            for v in 0..n {
                if g.degree(v) > 1 && g.neighbors(v).any(|u| g.degree(u) == 1) {
                    every_label(&mut out, v);
                }
            }
        }
        FamilySpec::Helm { n: k } => {
            for v in 1..=k {
                every_label(&mut out, v);
            }
        }
        FamilySpec::Web { n: k, .. } => {
            for v in k + 1..=2 * k {
                every_label(&mut out, v);
            }
        }
        _ => {}
    }
    out.sort();
    out.dedup();
    Ok(out)
}
