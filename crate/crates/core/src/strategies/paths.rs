//! Bob on paths, P3, K4 and cycles.

use crate::game::{Move, Player};

use super::ctx::{cycle_order, path_order, Ctx};

pub(super) fn bob_path(c: &Ctx) -> Option<Move> {
    let p = path_order(c.g)?;
    path_script(c, &p)
}

/// The path script over an explicit vertex order; caterpillars that are
/// paths reuse it.
pub(super) fn path_script(c: &Ctx, p: &[usize]) -> Option<Move> {
    let n = p.len();
    let m = c.m;
    if n < 4 {
        return None;
    }
    if n > 4 && c.first() == Player::Alice && c.mv(0).label == m - 1 {
        // a 0 next to m - 1 would hand Alice the edge m - 1
        return c.under(None, true, |c| path_script_plain(c, p));
    }
    path_script_plain(c, p)
}

fn path_script_plain(c: &Ctx, p: &[usize]) -> Option<Move> {
    let n = p.len();
    let m = c.m;
    let pos = |v: usize| p.iter().position(|&x| x == v);
    match c.first() {
        Player::Bob => match c.ply() {
            0 => Some(Move::new(p[0], 0)),
            2 if c.mv(1) == Move::new(p[1], m) => c.least_label(p[2], |l| l != 1),
            _ => None,
        },
        Player::Alice => {
            let a = c.mv(0);
            let j = pos(a.vertex)?;
            match c.ply() {
                1 if n == 4 => {
                    let target = match j {
                        0 => p[1],
                        1 => p[0],
                        2 => p[3],
                        _ => p[2],
                    };
                    Some(Move::new(target, 0))
                }
                1 => {
                    // a neighbor with no free neighbor of its own ends the game at once
                    let v = c
                        .nbrs(a.vertex)
                        .into_iter()
                        .min_by_key(|&v| (c.free_nbrs(v).len(), v))?;
                    Some(Move::new(v, 0))
                }
                3 if n > 4 && a.label != 1 => {
                    let zero = c.mv(1).vertex;
                    let reply = c.mv(2);
                    if reply.label != m || !c.adj(reply.vertex, zero) {
                        return None;
                    }
                    c.away_from(reply.vertex, 1)
                }
                _ => None,
            }
        }
    }
}

/// Middle vertex of P3 takes 1: the edge label 2 is then out of reach.
pub(super) fn bob_p3_first(c: &Ctx) -> Option<Move> {
    let p = path_order(c.g)?;
    (c.ply() == 0).then(|| Move::new(p[1], 1))
}

/// No graceful labeling of K4 uses the label 3.
pub(super) fn bob_k4(c: &Ctx) -> Option<Move> {
    if c.used(3) {
        return None;
    }
    c.anywhere(3)
}

pub(super) fn bob_cycle(c: &Ctx) -> Option<Move> {
    let cyc = cycle_order(c.g)?;
    cycle_script(c, &cyc)
}

/// The cycle script over an explicit cyclic order; C4-shaped graphs from
/// other families reuse it.
pub(super) fn cycle_script(c: &Ctx, cyc: &[usize]) -> Option<Move> {
    let n = cyc.len();
    let m = c.m;
    if n < 4 {
        return None;
    }
    let at = |k: usize| cyc[k % n];
    let pos = |v: usize| cyc.iter().position(|&x| x == v);
    match c.first() {
        // C4 has no graceful labeling using both 1 and 3
        Player::Bob if n == 4 => match c.ply() {
            0 => Some(Move::new(at(0), 1)),
            _ if c.used(1) => c.anywhere(3),
            _ => c.anywhere(1),
        },
        Player::Bob => match c.ply() {
            0 => Some(Move::new(at(0), 0)),
            2 => {
                let a = c.mv(1);
                if a.label != m {
                    return None;
                }
                match pos(a.vertex)? {
                    1 => Some(Move::new(at(2), m - 1)),
                    k if k == n - 1 => Some(Move::new(at(n - 2), m - 1)),
                    _ => None,
                }
            }
            _ => None,
        },
        Player::Alice => {
            let a = c.mv(0);
            let j = pos(a.vertex)?;
            let i = a.label;
            if n == 4 {
                // C4 has two graceful labelings, complementary, without 1 and 3 together
                return match (c.ply(), i) {
                    (1, 1) => c.anywhere(3),
                    (1, 3) => c.anywhere(1),
                    (1, 2) => Some(Move::new(at(j + 2), 1)),
                    _ => None,
                };
            }
            match c.ply() {
                1 if i == 1 => Some(Move::new(at(j + 1), 0)),
                1 => Some(Move::new(at(j + 3), 0)),
                3 if i != 1 => {
                    let reply = c.mv(2);
                    if reply.label != m {
                        return None;
                    }
                    if reply.vertex == at(j + 4) {
                        Some(Move::new(at(j + 2), 1))
                    } else if reply.vertex == at(j + 2) {
                        Some(Move::new(at(j + 4), 1))
                    } else {
                        None
                    }
                }
                _ => None,
            }
        }
    }
}
