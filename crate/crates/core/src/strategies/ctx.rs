//! Read-only view of a position for the scripts, plus vertex/label remapping.

use std::cell::RefCell;
use std::sync::Arc;

use crate::game::{GameState, Move, Player};
use crate::graph::Graph;
use crate::labeling::PartialLabeling;

use super::CompletionOracle;

pub(crate) struct Ctx<'a> {
    pub s: &'a GameState,
    pub g: &'a Graph,
    pub m: usize,
    moves: Vec<Move>,
    oracle: &'a RefCell<CompletionOracle>,
}

impl<'a> Ctx<'a> {
    pub fn new(s: &'a GameState, oracle: &'a RefCell<CompletionOracle>) -> Ctx<'a> {
        Ctx {
            s,
            g: s.graph(),
            m: s.m(),
            moves: s.moves(),
            oracle,
        }
    }

    pub fn n(&self) -> usize {
        self.g.n_vertices()
    }

    pub fn ply(&self) -> usize {
        self.moves.len()
    }

    pub fn mv(&self, i: usize) -> Move {
        self.moves[i]
    }

    pub fn first(&self) -> Player {
        self.s.first_player()
    }

    pub fn is_free(&self, v: usize) -> bool {
        self.s.labeling().is_free(v)
    }

    pub fn used(&self, l: usize) -> bool {
        l <= self.m && self.s.labeling().used_labels().contains(l)
    }

    pub fn at(&self, l: usize) -> Option<usize> {
        if l > self.m {
            return None;
        }
        self.s.labeling().vertex_with(l)
    }

    pub fn legal(&self, v: usize, l: usize) -> bool {
        v < self.n() && l <= self.m && self.s.is_legal(Move::new(v, l))
    }

    pub fn adj(&self, u: usize, v: usize) -> bool {
        self.g.is_adjacent(u, v)
    }

    pub fn nbrs(&self, v: usize) -> Vec<usize> {
        self.g.neighbors(v).collect()
    }

    pub fn free_nbrs(&self, v: usize) -> Vec<usize> {
        self.g.neighbors(v).filter(|&u| self.is_free(u)).collect()
    }

    /// `(v, l)` for the first `v` in `vs` where it is legal.
    pub fn first_legal(&self, vs: impl IntoIterator<Item = usize>, l: usize) -> Option<Move> {
        vs.into_iter().find(|&v| self.legal(v, l)).map(|v| Move::new(v, l))
    }

    /// `l` on the least vertex where it is legal.
    pub fn anywhere(&self, l: usize) -> Option<Move> {
        self.first_legal(0..self.n(), l)
    }

    /// `l` on the least free vertex other than `v` and not adjacent to it.
    pub fn away_from(&self, v: usize, l: usize) -> Option<Move> {
        self.first_legal((0..self.n()).filter(|&x| x != v && !self.adj(x, v)), l)
    }

    /// Least legal label on `v` that satisfies `ok`.
    pub fn least_label(&self, v: usize, ok: impl Fn(usize) -> bool) -> Option<Move> {
        (0..=self.m)
            .find(|&l| ok(l) && self.legal(v, l))
            .map(|l| Move::new(v, l))
    }

    pub fn completable(&self, lab: &PartialLabeling) -> bool {
        self.oracle.borrow_mut().completable(self.g, lab)
    }

    /// Whether `mv` leaves a position no graceful labeling extends.
    pub fn kills(&self, mv: Move) -> bool {
        match self.s.labeling().apply_move(self.g, mv.vertex, mv.label) {
            Ok(next) => !self.completable(&next),
            Err(_) => false,
        }
    }

    /// First candidate that is legal and leaves a dead position.
    pub fn first_killing(&self, candidates: impl IntoIterator<Item = Move>) -> Option<Move> {
        candidates
            .into_iter()
            .find(|mv| self.legal(mv.vertex, mv.label) && self.kills(*mv))
    }

    /// Runs `script` on the position seen through the automorphism `perm`
    /// (vertex `v` becomes `perm[v]`) and, if `comp`, the label complement,
    /// then maps its answer back.
    pub fn under(
        &self,
        perm: Option<&[usize]>,
        comp: bool,
        script: impl FnOnce(&Ctx) -> Option<Move>,
    ) -> Option<Move> {
        let m = self.m;
        let fwd_label = |l: usize| if comp { m - l } else { l };
        let mapped: Vec<Move> = self
            .moves
            .iter()
            .map(|mv| Move::new(perm.map_or(mv.vertex, |p| p[mv.vertex]), fwd_label(mv.label)))
            .collect();
        let view = GameState::replay(Arc::clone(self.s.graph_arc()), self.first(), &mapped).ok()?;
        let ctx = Ctx::new(&view, self.oracle);
        let mv = script(&ctx)?;
        let v = match perm {
            Some(p) => p.iter().position(|&x| x == mv.vertex)?,
            None => mv.vertex,
        };
        Some(Move::new(v, fwd_label(mv.label)))
    }
}

/// Vertices of a path graph in order, starting at the lower-index end.
pub(crate) fn path_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n_vertices();
    if n == 1 {
        return Some(vec![0]);
    }
    if g.n_edges() != n - 1 || !g.is_connected() || (0..n).any(|v| g.degree(v) > 2) {
        return None;
    }
    let start = (0..n).find(|&v| g.degree(v) == 1)?;
    walk(g, start, n)
}

/// Vertices of a cycle graph in cyclic order from vertex 0, heading to its
/// lower-index neighbor.
pub(crate) fn cycle_order(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n_vertices();
    if n < 3 || !g.is_connected() || (0..n).any(|v| g.degree(v) != 2) {
        return None;
    }
    walk(g, 0, n)
}

fn walk(g: &Graph, start: usize, n: usize) -> Option<Vec<usize>> {
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while order.len() < n {
        let next = g.neighbors(cur).find(|&u| u != prev && !order.contains(&u))?;
        prev = cur;
        cur = next;
        order.push(cur);
    }
    Some(order)
}
