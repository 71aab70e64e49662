//! Checks shared by the topic suites and the acceptance run. Each check
//! returns a short summary on success and a description of the first
//! violation otherwise.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use graceful_core::graph::automorphisms;
use graceful_core::labeling::{enumerate_graceful, EnumerationMode, DEFAULT_BUDGET};
use graceful_core::strategies::forbidden_first_labels;
use graceful_core::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub type Check = Result<String, String>;

pub fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e:?}"))
}

pub fn arc(s: &str) -> Arc<Graph> {
    Arc::new(build_family(&spec(s)).unwrap())
}

pub fn player(c: char) -> Player {
    match c {
        'A' => Player::Alice,
        _ => Player::Bob,
    }
}

/// Desk-scale winners table: instance, Alice-first winner, Bob-first winner.
pub const TABLE: [(&str, char, char); 27] = [
    ("path(1)", 'A', 'A'),
    ("path(2)", 'A', 'A'),
    ("path(3)", 'A', 'B'),
    ("path(4)", 'B', 'B'),
    ("path(5)", 'B', 'B'),
    ("path(6)", 'B', 'B'),
    ("complete(3)", 'A', 'A'),
    ("complete(4)", 'B', 'B'),
    ("cycle(4)", 'B', 'B'),
    ("cycle(6)", 'B', 'B'),
    ("cycle(7)", 'B', 'B'),
    ("star(2)", 'A', 'B'),
    ("star(3)", 'A', 'B'),
    ("star(4)", 'A', 'B'),
    ("bipartite(2,2)", 'B', 'B'),
    ("bipartite(2,3)", 'B', 'B'),
    ("caterpillar(1,2)", 'B', 'B'),
    ("caterpillar(2,2)", 'B', 'B'),
    ("wheel(3)", 'B', 'B'),
    ("wheel(4)", 'B', 'B'),
    ("wheel(5)", 'B', 'B'),
    ("helm(3)", 'B', 'B'),
    ("gear(3)", 'B', 'B'),
    ("hypercube(2)", 'B', 'B'),
    ("pathpower(4,2)", 'B', 'B'),
    ("pathpower(5,2)", 'B', 'B'),
    ("prism(3)", 'B', 'B'),
];

/// Strategy instances expected to hold, with the first player.
pub fn verification_cases() -> Vec<(StrategyId, &'static str, Player)> {
    use Player::{Alice, Bob};
    use StrategyId as S;
    let mut out = Vec::new();
    let both = |out: &mut Vec<_>, id, s| {
        out.push((id, s, Alice));
        out.push((id, s, Bob));
    };
    for s in ["path(4)", "path(5)", "path(6)", "path(7)"] {
        both(&mut out, S::BobPath, s);
    }
    for s in ["cycle(4)", "cycle(6)", "cycle(7)"] {
        both(&mut out, S::BobCycle, s);
    }
    for s in ["star(2)", "star(3)", "star(4)"] {
        out.push((S::AliceStarFirst, s, Alice));
    }
    for s in ["bipartite(2,2)", "bipartite(2,3)"] {
        both(&mut out, S::BobBipartite, s);
    }
    for s in ["caterpillar(1,2)", "caterpillar(2,2)", "caterpillar(2,0,2)"] {
        both(&mut out, S::BobCaterpillar, s);
    }
    for s in ["wheel(3)", "wheel(4)", "wheel(5)"] {
        both(&mut out, S::BobWheelW3w4w5, s);
    }
    out.push((S::BobWheelFirst, "wheel(6)", Bob));
    both(&mut out, S::BobGear, "gear(3)");
    both(&mut out, S::BobHelm, "helm(3)");
    both(&mut out, S::BobWeb, "web(2,3)");
    both(&mut out, S::BobHypercube, "hypercube(2)");
    both(&mut out, S::BobHypercube, "hypercube(3)");
    for s in ["prism(3)", "prism(4)"] {
        both(&mut out, S::BobPrism, s);
    }
    for s in ["pathpower(4,2)", "pathpower(5,2)", "pathpower(6,2)", "pathpower(7,2)"] {
        both(&mut out, S::BobPathpower2, s);
    }
    out
}

/// A state reached by random legal play from the empty board.
pub fn random_state(g: &Arc<Graph>, rng: &mut StdRng) -> GameState {
    let first = if rng.gen_bool(0.5) { Player::Alice } else { Player::Bob };
    let mut s = GameState::new(Arc::clone(g), first).unwrap();
    let depth = rng.gen_range(0..=g.n_vertices());
    for _ in 0..depth {
        let moves = s.legal_moves();
        if moves.is_empty() {
            break;
        }
        s = s.play_move(moves[rng.gen_range(0..moves.len())]).unwrap();
    }
    s
}

fn plain_solver(g: &Arc<Graph>) -> Solver {
    let config = SolverConfig {
        symmetry: false,
        ..SolverConfig::default()
    };
    Solver::with_config(Arc::clone(g), config).unwrap()
}

/// Table instances small enough for the symmetry invariants.
pub fn invariant_families(max_m: usize, max_n: usize) -> Vec<Arc<Graph>> {
    TABLE
        .iter()
        .map(|(s, _, _)| arc(s))
        .filter(|g| g.n_edges() <= max_m && g.n_vertices() <= max_n && g.n_edges() > 0)
        .collect()
}

/// Replacing every label l by m - l keeps the game value.
pub fn complement_symmetry(states: usize, seed: u64) -> Check {
    let graphs = invariant_families(9, 64);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut solvers: Vec<Solver> = graphs.iter().map(plain_solver).collect();
    for k in 0..states {
        let gi = k % graphs.len();
        let s = random_state(&graphs[gi], &mut rng);
        let solver = &mut solvers[gi];
        let a = solver.winner_of(s.labeling(), s.to_move()).map_err(|e| e.to_string())?;
        let b = solver
            .winner_of(&s.labeling().complemented(), s.to_move())
            .map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{:?} moves {:?}: {a:?} vs complement {b:?}", graphs[gi].family(), s.moves()));
        }
    }
    Ok(format!("{states} states over {} graphs", graphs.len()))
}

/// Relabeling vertices by an automorphism keeps the game value.
pub fn automorphism_invariance(states: usize, seed: u64) -> Check {
    let graphs = invariant_families(usize::MAX, 8);
    let autos: Vec<Vec<Permutation>> = graphs.iter().map(|g| automorphisms(g).unwrap()).collect();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut solvers: Vec<Solver> = graphs.iter().map(plain_solver).collect();
    for k in 0..states {
        let gi = k % graphs.len();
        let s = random_state(&graphs[gi], &mut rng);
        let perm = &autos[gi][rng.gen_range(0..autos[gi].len())];
        let solver = &mut solvers[gi];
        let a = solver.winner_of(s.labeling(), s.to_move()).map_err(|e| e.to_string())?;
        let b = solver
            .winner_of(&s.labeling().permuted(perm), s.to_move())
            .map_err(|e| e.to_string())?;
        if a != b {
            return Err(format!("{:?} moves {:?} perm {:?}", graphs[gi].family(), s.moves(), perm.as_slice()));
        }
    }
    Ok(format!("{states} states over {} graphs", graphs.len()))
}

/// Smallest adjacency bit string over vertex orders that list vertices by
/// ascending degree.
fn canonical_edges(n: usize, edges: &[(usize, usize)]) -> Vec<bool> {
    let mut deg = vec![0; n];
    for &(u, v) in edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in edges {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    let mut best: Option<Vec<bool>> = None;
    permute_groups(&mut order, 0, &deg, &mut |ord| {
        let bits: Vec<bool> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .map(|(i, j)| adj[ord[i]][ord[j]])
            .collect();
        if best.as_ref().is_none_or(|b| bits < *b) {
            best = Some(bits);
        }
    });
    best.unwrap_or_default()
}

/// Visits every order obtained by permuting within runs of equal degree.
fn permute_groups(order: &mut Vec<usize>, at: usize, deg: &[usize], f: &mut impl FnMut(&[usize])) {
    if at == order.len() {
        f(order);
        return;
    }
    let end = (at..order.len()).find(|&i| deg[order[i]] != deg[order[at]]).unwrap_or(order.len());
    permute_run(order, at, end, deg, f);
}

fn permute_run(order: &mut Vec<usize>, i: usize, end: usize, deg: &[usize], f: &mut impl FnMut(&[usize])) {
    if i == end {
        permute_groups(order, end, deg, f);
        return;
    }
    for j in i..end {
        order.swap(i, j);
        permute_run(order, i + 1, end, deg, f);
        order.swap(i, j);
    }
}

fn connected(n: usize, edges: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(u) = stack.pop() {
        for &(a, b) in edges {
            let w = if a == u { b } else if b == u { a } else { continue };
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Every connected graph with at least one and at most `max_m` edges, one per
/// isomorphism class.
pub fn small_connected_graphs(max_m: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 2..=max_m + 1 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let mut keep = |edges: Vec<(usize, usize)>| {
            if connected(n, &edges) && seen.insert((n, canonical_edges(n, &edges))) {
                out.push(Graph::from_edges(n, &edges).unwrap());
            }
        };
        if n == max_m + 1 {
            // only trees remain; walk Pruefer sequences
            let mut seq = vec![0; n - 2];
            loop {
                keep(pruefer_edges(&seq, n));
                let Some(i) = (0..seq.len()).rev().find(|&i| seq[i] + 1 < n) else { break };
                seq[i] += 1;
                for s in &mut seq[i + 1..] {
                    *s = 0;
                }
            }
            continue;
        }
        let p = pairs.len();
        for mask in 0u32..(1 << p) {
            let m = mask.count_ones() as usize;
            if m + 1 < n || m > max_m {
                continue;
            }
            keep((0..p).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect());
        }
    }
    out
}

fn pruefer_edges(seq: &[usize], n: usize) -> Vec<(usize, usize)> {
    let mut degree = vec![1; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::new();
    for &s in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(s), leaf.max(s)));
        degree[leaf] -= 1;
        degree[s] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// Winners agree with the transposition table on and off.
pub fn memo_agreement(max_m: usize) -> Check {
    let graphs = small_connected_graphs(max_m);
    for g in &graphs {
        let g = Arc::new(g.clone());
        for first in [Player::Alice, Player::Bob] {
            let state = GameState::new(Arc::clone(&g), first).unwrap();
            let mut on = Solver::new(Arc::clone(&g)).unwrap();
            let mut off = Solver::with_config(
                Arc::clone(&g),
                SolverConfig {
                    memo: false,
                    symmetry: false,
                    ..SolverConfig::default()
                },
            )
            .unwrap();
            let a = on.winner(&state).map_err(|e| e.to_string())?;
            let b = off.winner(&state).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("edges {:?}, {first:?} first: memo {a:?}, plain {b:?}", g.edges()));
            }
        }
    }
    Ok(format!("{} graphs", graphs.len()))
}

/// A graph without graceful labelings is a Bob win for either first player.
pub fn empty_enumeration_is_bob(specs: &[&str]) -> Check {
    let mut hits = 0;
    for s in specs {
        let g = arc(s);
        if !enumerate_graceful(&g, EnumerationMode::Raw, DEFAULT_BUDGET).unwrap().is_empty() {
            continue;
        }
        hits += 1;
        for first in [Player::Alice, Player::Bob] {
            let r = solve(Arc::clone(&g), first, DEFAULT_BUDGET).map_err(|e| e.to_string())?;
            if r.winner != Player::Bob {
                return Err(format!("{s}, {first:?} first: {:?}", r.winner));
            }
        }
    }
    Ok(format!("{hits} non-graceful graphs"))
}

fn bob_valued(solver: &mut Solver, s: &GameState) -> bool {
    solver.winner(s).unwrap() == Player::Bob
}

/// Alice's 0 or m on a vertex with a free non-neighbor loses, whether she
/// opens or answers Bob's first move (as long as Bob has not placed the
/// partner label).
pub fn partner_label_blocker(s: &str) -> Check {
    let g = arc(s);
    let m = g.n_edges();
    let mut solver = Solver::new(Arc::clone(&g)).unwrap();
    let mut roots = vec![GameState::new(Arc::clone(&g), Player::Alice).unwrap()];
    let bob = GameState::new(Arc::clone(&g), Player::Bob).unwrap();
    roots.extend(bob.legal_moves().into_iter().map(|mv| bob.play_move(mv).unwrap()));
    let mut checked = 0;
    for root in roots {
        let lab = root.labeling();
        for mv in root.legal_moves() {
            let partner = if mv.label == 0 { m } else if mv.label == m { 0 } else { continue };
            if lab.vertex_with(partner).is_some() {
                continue;
            }
            let far = lab.free_vertices().any(|u| u != mv.vertex && !g.is_adjacent(u, mv.vertex));
            if !far {
                continue;
            }
            checked += 1;
            if !bob_valued(&mut solver, &root.play_move(mv).unwrap()) {
                return Err(format!("{s}: {:?} then Alice {mv:?}", root.moves()));
            }
        }
    }
    Ok(format!("{checked} moves"))
}

/// After Bob opens with 0 (or m) on a vertex with one neighbor or two
/// non-neighbors, Alice loses unless she puts the partner label next to it.
pub fn opening_zero_blocker(s: &str) -> Check {
    let g = arc(s);
    let m = g.n_edges();
    let mut solver = Solver::new(Arc::clone(&g)).unwrap();
    let root = GameState::new(Arc::clone(&g), Player::Bob).unwrap();
    let mut checked = 0;
    {
        for bob in root.legal_moves() {
            let partner = if bob.label == 0 { m } else if bob.label == m { 0 } else { continue };
            let lab = root.labeling();
            if lab.vertex_with(partner).is_some() {
                continue;
            }
            let v = bob.vertex;
            let free: Vec<usize> = lab.free_vertices().filter(|&u| u != v).collect();
            let near = free.iter().filter(|&&u| g.is_adjacent(u, v)).count();
            let far = free.len() - near;
            if near != 1 && far < 2 {
                continue;
            }
            let after = root.play_move(bob).unwrap();
            for reply in after.legal_moves() {
                if reply.label == partner && g.is_adjacent(reply.vertex, v) {
                    continue;
                }
                checked += 1;
                if !bob_valued(&mut solver, &after.play_move(reply).unwrap()) {
                    return Err(format!("{s}: {:?} then Alice {reply:?}", after.moves()));
                }
            }
        }
    }
    Ok(format!("{checked} replies"))
}

/// Every opening the blocker rules rule out is a Bob win.
pub fn forbidden_openings(s: &str) -> Check {
    let g = arc(s);
    let mut solver = Solver::new(Arc::clone(&g)).unwrap();
    let root = GameState::new(Arc::clone(&g), Player::Alice).unwrap();
    let moves = forbidden_first_labels(&g).map_err(|e| e.to_string())?;
    for mv in &moves {
        if !root.is_legal(*mv) {
            continue;
        }
        if !bob_valued(&mut solver, &root.play_move(*mv).unwrap()) {
            return Err(format!("{s}: opening {mv:?}"));
        }
    }
    Ok(format!("{} openings", moves.len()))
}

/// K_{2,q}, Bob first: after his 0 on the two-vertex side, every reply but m
/// next to it loses.
pub fn forcing_chain(s: &str) -> Check {
    let g = arc(s);
    let m = g.n_edges();
    let mut solver = Solver::new(Arc::clone(&g)).unwrap();
    let root = GameState::new(Arc::clone(&g), Player::Bob).unwrap();
    let opening = scripted_move(StrategyId::BobBipartite, &root).map_err(|e| e.to_string())?;
    if opening.label != 0 {
        return Err(format!("{s}: opening {opening:?}"));
    }
    let after = root.play_move(opening).unwrap();
    let mut survivors = Vec::new();
    for reply in after.legal_moves() {
        if !bob_valued(&mut solver, &after.play_move(reply).unwrap()) {
            survivors.push(reply);
        }
    }
    if survivors.iter().any(|r| r.label != m || !g.is_adjacent(r.vertex, opening.vertex)) {
        return Err(format!("{s}: non-losing replies {survivors:?}"));
    }
    Ok(format!("{} non-losing replies, all m", survivors.len()))
}
