//! Bob on complete bipartite graphs and hypercubes.
//!
//! Both scripts run the same forcing chain: with 0 on `w`, Bob labels free
//! neighbors of `w` with 1, 2, ... while Alice must answer m - 1, m - 2, ...
//! next to `w` to keep the large edge labels reachable.

use crate::game::{Move, Player};
use crate::graph::FamilySpec;

use super::ctx::{cycle_order, Ctx};
use super::paths::cycle_script;

/// Vertices on the same side as `v`.
fn side_of(c: &Ctx, v: usize) -> Vec<usize> {
    let colors = c.g.bipartition().unwrap_or_default();
    (0..c.n()).filter(|&u| colors.get(u) == colors.get(v)).collect()
}

fn other_side(c: &Ctx, v: usize) -> Vec<usize> {
    let colors = c.g.bipartition().unwrap_or_default();
    (0..c.n()).filter(|&u| colors.get(u) != colors.get(v)).collect()
}

fn least_free(c: &Ctx, vs: &[usize]) -> Option<usize> {
    vs.iter().copied().find(|&v| c.is_free(v))
}

pub(super) fn bob_bipartite(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::CompleteBipartite { p, q }) = c.g.family() else {
        return None;
    };
    if p == 2 && q == 2 {
        return cycle_script(c, &cycle_order(c.g)?);
    }
    let m = c.m;
    match c.first() {
        Player::Bob => {
            if c.ply() == 0 {
                return Some(Move::new(0, 0));
            }
            let ys = other_side(c, c.mv(0).vertex);
            let next = c.ply() / 2;
            let reply = c.mv(c.ply() - 1);
            if reply.label != m + 1 - next || !ys.contains(&reply.vertex) {
                return None;
            }
            least_free(c, &ys).map(|y| Move::new(y, next))
        }
        Player::Alice => {
            let a = c.mv(0);
            let xs = side_of(c, a.vertex);
            let i = a.label;
            if xs.len() == 2 {
                let low = i <= m / 2;
                if !low {
                    return c.under(None, true, bipartite_two_row);
                }
                return bipartite_two_row(c);
            }
            if 2 * i > m {
                // upper half, including i = m - k, by the complement
                return c.under(None, true, bipartite_wide);
            }
            bipartite_wide(c)
        }
    }
}

/// Alice opened on a side with two vertices, with a label at most m / 2.
fn bipartite_two_row(c: &Ctx) -> Option<Move> {
    let a = c.mv(0);
    let i = a.label;
    let ys = other_side(c, a.vertex);
    match c.ply() {
        1 => least_free(c, &ys).map(|y| Move::new(y, 0)),
        3 if i != 1 => least_free(c, &ys).map(|y| Move::new(y, 2 * i - 1)),
        _ => None,
    }
}

/// Alice opened on a side with at least three vertices; either `x < i < m - x`
/// or `i = k <= x`.
fn bipartite_wide(c: &Ctx) -> Option<Move> {
    let a = c.mv(0);
    let i = a.label;
    let m = c.m;
    let xs = side_of(c, a.vertex);
    let ys = other_side(c, a.vertex);
    let x = if xs.len().is_multiple_of(2) {
        (xs.len() - 2) / 2
    } else {
        (xs.len() - 1) / 2
    };
    if c.ply() == 1 {
        return least_free(c, &ys).map(|y| Move::new(y, 0));
    }
    let next = (c.ply() - 1) / 2;
    let reply = c.mv(c.ply() - 1);
    if reply.label != m + 1 - next || !xs.contains(&reply.vertex) {
        return None;
    }
    if i <= x && next == i {
        return least_free(c, &ys).map(|y| Move::new(y, m - 2 * i));
    }
    least_free(c, &xs).map(|v| Move::new(v, next))
}

pub(super) fn bob_hypercube(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::Hypercube { n }) = c.g.family() else {
        return None;
    };
    if n == 2 {
        return cycle_script(c, &cycle_order(c.g)?);
    }
    let m = c.m;
    let h = n / 2;
    match c.first() {
        Player::Bob => {
            if c.ply() == 0 {
                return Some(Move::new(0, 0));
            }
            let w = c.mv(0).vertex;
            let next = c.ply() / 2;
            let reply = c.mv(c.ply() - 1);
            if reply.label != m + 1 - next || !c.adj(reply.vertex, w) {
                return None;
            }
            match c.free_nbrs(w).first() {
                Some(&u) => Some(Move::new(u, next)),
                None => c.away_from(c.mv(1).vertex, next),
            }
        }
        Player::Alice => {
            let i = c.mv(0).label;
            if i == m - 1 || (i > m - h && i != m) {
                // i = m - 1 and i = m - k by the complement of the low cases
                if i == m - 1 {
                    return c.under(None, true, cube_case_one);
                }
                return cube_chain(c, ChainKind::HighLabel);
            }
            match i {
                1 => cube_case_one(c),
                _ if i <= h => cube_chain(c, ChainKind::LowLabel),
                _ => cube_chain(c, ChainKind::Middle),
            }
        }
    }
}

/// Alice opened with 1: 0 far from her vertex, then m - 1 on the other side.
fn cube_case_one(c: &Ctx) -> Option<Move> {
    let v1 = c.mv(0).vertex;
    let ys = other_side(c, v1);
    match c.ply() {
        1 => ys
            .iter()
            .copied()
            .find(|&y| c.is_free(y) && !c.adj(y, v1))
            .map(|y| Move::new(y, 0)),
        3 => c.first_legal(ys, c.m - 1),
        _ => None,
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ChainKind {
    /// 2 <= i <= n/2
    LowLabel,
    /// n/2 < i < m - n/2
    Middle,
    /// i = m - k with 2 <= k <= n/2
    HighLabel,
}

fn cube_chain(c: &Ctx, kind: ChainKind) -> Option<Move> {
    let Some(&FamilySpec::Hypercube { n }) = c.g.family() else {
        return None;
    };
    let m = c.m;
    let v1 = c.mv(0).vertex;
    let i = c.mv(0).label;
    if c.ply() == 1 {
        let xs = side_of(c, v1);
        let ys = other_side(c, v1);
        let w = match kind {
            ChainKind::LowLabel => ys.into_iter().find(|&y| c.adj(y, v1)),
            ChainKind::Middle if n % 2 == 1 => ys.into_iter().find(|&y| c.adj(y, v1)),
            ChainKind::Middle => xs.into_iter().find(|&x| x != v1),
            ChainKind::HighLabel => ys.into_iter().find(|&y| !c.adj(y, v1)),
        }?;
        return Some(Move::new(w, 0));
    }
    let w = c.mv(1).vertex;
    let next = (c.ply() - 1) / 2;
    let reply = c.mv(c.ply() - 1);
    if reply.label != m + 1 - next || !c.adj(reply.vertex, w) {
        return None;
    }
    if kind == ChainKind::LowLabel && next == i {
        return c.first_legal(other_side(c, v1), m - i);
    }
    c.free_nbrs(w).first().map(|&u| Move::new(u, next))
}
