//! Bob on caterpillars of diameter at least 3.

use crate::game::{Move, Player};

use super::ctx::{path_order, Ctx};
use super::paths::path_script;

struct Shape {
    /// Non-leaf vertices in path order.
    spine: Vec<usize>,
    /// Leaves of each spine vertex, ascending.
    legs: Vec<Vec<usize>>,
}

impl Shape {
    fn of(c: &Ctx) -> Option<Shape> {
        let g = c.g;
        let inner: Vec<usize> = (0..c.n()).filter(|&v| g.degree(v) > 1).collect();
        let start = *inner
            .iter()
            .find(|&&v| g.neighbors(v).filter(|u| inner.contains(u)).count() <= 1)?;
        let mut spine = vec![start];
        while let Some(next) = g
            .neighbors(*spine.last()?)
            .find(|u| inner.contains(u) && !spine.contains(u))
        {
            spine.push(next);
        }
        if spine.len() != inner.len() {
            return None;
        }
        let legs = spine
            .iter()
            .map(|&s| g.neighbors(s).filter(|&u| g.degree(u) == 1).collect())
            .collect();
        Some(Shape { spine, legs })
    }

    fn spine_pos(&self, v: usize) -> Option<usize> {
        self.spine.iter().position(|&s| s == v)
    }

    /// Spine index of the leaf's support.
    fn support_of(&self, leaf: usize) -> Option<usize> {
        self.legs.iter().position(|l| l.contains(&leaf))
    }
}

pub(super) fn bob_caterpillar(c: &Ctx) -> Option<Move> {
    if let Some(p) = path_order(c.g) {
        return path_script(c, &p);
    }
    let sh = Shape::of(c)?;
    let m = c.m;
    let leaf_of = |k: usize| sh.legs[k].iter().copied().find(|&u| c.is_free(u));
    match c.first() {
        Player::Bob => match c.ply() {
            0 => {
                let leaf = (0..c.n()).find(|&v| c.g.degree(v) == 1)?;
                Some(Move::new(leaf, 0))
            }
            2 => {
                let support = c.nbrs(c.mv(0).vertex)[0];
                (c.mv(1) == Move::new(support, m)).then(|| c.away_from(support, 1))?
            }
            _ => None,
        },
        Player::Alice => {
            let a = c.mv(0);
            let i = a.label;
            if let Some(k) = sh.spine_pos(a.vertex) {
                if !sh.legs[k].is_empty() {
                    return (c.ply() == 1).then(|| leaf_of(k).map(|u| Move::new(u, 0)))?;
                }
                return leafless_spine(c, &sh, k);
            }
            let k = sh.support_of(a.vertex)?;
            let two = sh.spine.len() == 2;
            if two && sh.legs[k].len() == 1 && sh.legs[1 - k].len() >= 2 && i != 1 {
                // the lone leaf: its support takes 1 or 0 by the parity of m
                let l = if m.is_multiple_of(2) { 1 } else { 0 };
                return (c.ply() == 1).then(|| Move::new(sh.spine[k], l));
            }
            let q = (0..sh.spine.len()).find(|&q| q != k && !sh.legs[q].is_empty())?;
            match c.ply() {
                1 => leaf_of(q).map(|u| Move::new(u, 0)),
                3 => follow_support(c, sh.spine[q], i),
                _ => None,
            }
        }
    }
}

/// Alice's m landed on the support of Bob's 0: 1 goes out of reach of it.
fn follow_support(c: &Ctx, support: usize, i: usize) -> Option<Move> {
    if i == 1 || c.mv(2) != Move::new(support, c.m) {
        return None;
    }
    c.away_from(support, 1)
}

fn leafless_spine(c: &Ctx, sh: &Shape, k: usize) -> Option<Move> {
    let i = c.mv(0).label;
    let s = sh.spine.len();
    let leaf_of = |q: usize| sh.legs[q].iter().copied().find(|&u| c.is_free(u));
    if s == 3 && k == 1 {
        return match c.ply() {
            1 => leaf_of(0).map(|u| Move::new(u, 0)),
            3 if c.mv(2) == Move::new(sh.spine[0], c.m) => {
                if i != 1 {
                    c.away_from(sh.spine[0], 1)
                } else {
                    Some(Move::new(sh.spine[2], 2))
                }
            }
            _ => None,
        };
    }
    let q = (0..s).find(|&q| q != k && q + 1 != k && k + 1 != q && !sh.legs[q].is_empty())?;
    match c.ply() {
        1 => leaf_of(q).map(|u| Move::new(u, 0)),
        3 => follow_support(c, sh.spine[q], i),
        _ => None,
    }
}
