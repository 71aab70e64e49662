//! Bob on squares of paths P_n^2, vertices in path order.

use crate::game::{Move, Player};
use crate::graph::FamilySpec;

use super::ctx::Ctx;

pub(super) fn bob_pathpower2(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::PathPower { n, k: 2 }) = c.g.family() else {
        return None;
    };
    if n < 4 {
        return None;
    }
    let m = c.m;
    let h = m.div_ceil(2);
    if c.first() == Player::Bob {
        return match c.ply() {
            0 => Some(Move::new(0, 0)),
            2 => match c.mv(1) {
                r if r == Move::new(1, m) => Some(Move::new(3, m - 1)),
                r if r == Move::new(2, m) => Some(Move::new(3, h)),
                _ => None,
            },
            4 if c.mv(3) == Move::new(1, m - 1) => c.least_label(4, |l| l != 2),
            _ => None,
        };
    }
    if n <= 5 && (c.mv(0).label == 0 || c.mv(0).label == m) {
        // an extreme label on a vertex seeing every other one is not ruled out
        return None;
    }
    if c.mv(0).vertex < n / 2 {
        let mirror: Vec<usize> = (0..n).rev().collect();
        return c.under(Some(&mirror), false, |c| alice_first(c, n));
    }
    alice_first(c, n)
}

/// Alice opened on the upper half of the path.
fn alice_first(c: &Ctx, n: usize) -> Option<Move> {
    let a = c.mv(0);
    let (j, i) = (a.vertex, a.label);
    let m = c.m;
    let h = m.div_ceil(2);
    match n {
        4 => match (c.ply(), j) {
            (1, 2) => Some(Move::new(1, 1)),
            (1, 3) if (1..=4).contains(&i) => c.anywhere(5 - i),
            _ => None,
        },
        5 => square5(c),
        6..=9 if j == 3 || j == 4 => {
            if c.ply() == 1 {
                return Some(Move::new(0, if i == 1 { m } else { 0 }));
            }
            if c.ply() != 3 {
                return None;
            }
            let r = c.mv(2);
            match (j, i) {
                (3, 1) if r.label == 0 && (r.vertex == 1 || r.vertex == 2) => {
                    Some(Move::new(5, m - 1))
                }
                (3, _) if i == m - 1 => Some(Move::new(5, 1)),
                (3, _) => {
                    let other = match r.vertex {
                        1 => 2,
                        2 => 1,
                        _ => return None,
                    };
                    c.first_killing((2..=m - 2).map(|l| Move::new(other, l)))
                }
                (_, 1) => Some(Move::new(3, (m - 1) / 2)),
                (_, _) if i == m - 1 => Some(Move::new(3, m.div_ceil(2))),
                _ => {
                    // i - 1 as stated; when that leaves Alice a 1 on v3, a killing label instead
                    let stated = Move::new(5, i - 1);
                    let others = (0..=m).filter(|&l| l != i - 1).map(|l| Move::new(5, l));
                    c.first_killing(std::iter::once(stated).chain(others)).or(Some(stated))
                }
            }
        }
        _ => {
            let high = i == 1 || i == h;
            match c.ply() {
                1 => Some(Move::new(0, if high { m } else { 0 })),
                3 => {
                    let r = c.mv(2);
                    let (want, shift) = if high { (0, h - 1) } else { (m, h) };
                    match (r.vertex, r.label) {
                        (1, l) if l == want => Some(Move::new(2, shift)),
                        (2, l) if l == want => Some(Move::new(3, shift)),
                        _ => None,
                    }
                }
                _ => None,
            }
        }
    }
}

/// P_5^2, m = 7.
fn square5(c: &Ctx) -> Option<Move> {
    let a = c.mv(0);
    let (j, i) = (a.vertex, a.label);
    if c.ply() == 1 {
        return match (j, i) {
            (2, 1) => c.anywhere(2),
            (2, 6) => c.anywhere(5),
            (3 | 4, 6) => Some(Move::new(0, 0)),
            _ => Some(Move::new(0, 7)),
        };
    }
    if c.ply() != 3 {
        return None;
    }
    let r = c.mv(2);
    let rv = (r.vertex, r.label);
    match (j, i) {
        (2, 4 | 5) => Some(Move::new(4, 6)),
        (3, 6) => match rv {
            (1, 7) => Some(Move::new(4, 1)),
            (2, 7) => Some(Move::new(1, 2)),
            _ => None,
        },
        (3, _) => match rv {
            (1, 0) => c.first_killing((2..=5).map(|l| Move::new(2, l))),
            (2, 0) => {
                let both = [i + 1, i - 1].map(|l| Move::new(4, l));
                c.first_killing(both)
                    .or_else(|| both.into_iter().find(|mv| c.legal(mv.vertex, mv.label)))
            }
            _ => None,
        },
        (4, 6) => match rv {
            (1, 7) => Some(Move::new(3, 5)),
            (2, 7) => Some(Move::new(1, 5)),
            _ => None,
        },
        (4, 3) => match rv {
            (1, 0) => Some(Move::new(2, 4)),
            (2, 0) => Some(Move::new(3, 4)),
            _ => None,
        },
        (4, _) => match rv {
            (1, 0) => Some(Move::new(2, 3)),
            (2, 0) => Some(Move::new(1, if i == 4 { 2 } else { 3 })),
            _ => None,
        },
        _ => None,
    }
}
