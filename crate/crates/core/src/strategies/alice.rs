//! Alice's strategies on P1, P2, P3, K3 and stars.

use crate::game::{Move, Player};

use super::ctx::{path_order, Ctx};

pub(super) fn p1p2(c: &Ctx) -> Option<Move> {
    (c.ply() == 0).then(|| Move::new(0, 0))
}

/// An end of P3 takes label 1; every reply then completes.
pub(super) fn p3_first(c: &Ctx) -> Option<Move> {
    let p = path_order(c.g)?;
    (c.ply() == 0).then(|| Move::new(p[0], 1))
}

/// K3 needs 0 and 3 on two of its vertices.
pub(super) fn k3(c: &Ctx) -> Option<Move> {
    match (c.first(), c.ply()) {
        (Player::Alice, 0) => Some(Move::new(0, 0)),
        (Player::Bob, 1) => {
            let want = match c.mv(0).label {
                0 | 2 => 3,
                _ => 0,
            };
            c.anywhere(want)
        }
        _ => None,
    }
}

/// 0 on the center: every leaf label then is its own edge label.
pub(super) fn star_first(c: &Ctx) -> Option<Move> {
    if c.ply() != 0 {
        return None;
    }
    let center = (0..c.n()).max_by_key(|&v| (c.g.degree(v), std::cmp::Reverse(v)))?;
    Some(Move::new(center, 0))
}
