//! Bob on wheels, gears, helms and webs.

use crate::game::{Move, Player};
use crate::graph::FamilySpec;

use super::ctx::Ctx;
use super::paths::bob_k4;

fn wheel_n(c: &Ctx) -> Option<usize> {
    match c.g.family() {
        Some(&FamilySpec::Wheel { n }) => Some(n),
        _ => None,
    }
}

/// Bob opens by putting n on the center.
pub(super) fn bob_wheel_first(c: &Ctx) -> Option<Move> {
    let n = wheel_n(c)?;
    (c.ply() == 0).then(|| Move::new(n, n))
}

pub(super) fn bob_wheel_small(c: &Ctx) -> Option<Move> {
    let n = wheel_n(c)?;
    if c.first() == Player::Bob {
        return bob_wheel_first(c);
    }
    match n {
        3 => bob_k4(c),
        4 => wheel4(c),
        5 => {
            if c.mv(0).vertex == 5 && c.mv(0).label == 9 {
                return c.under(None, true, wheel5);
            }
            wheel5(c)
        }
        _ => None,
    }
}

fn wheel4(c: &Ctx) -> Option<Move> {
    let a = c.mv(0);
    let i = a.label;
    let rim = |k: usize| k % 4;
    if a.vertex == 4 {
        return match (c.ply(), i) {
            (1, 0 | 2 | 6 | 8) => c.anywhere(4),
            (1, 1 | 7) => c.anywhere(3),
            _ => None,
        };
    }
    let x = a.vertex;
    match c.ply() {
        1 if i == 4 => Some(Move::new(4, 0)),
        1 => Some(Move::new(4, 4)),
        3 if i == 4 && c.mv(2) == Move::new(rim(x + 2), 8) => Some(Move::new(rim(x + 1), 1)),
        _ => None,
    }
}

fn wheel5(c: &Ctx) -> Option<Move> {
    let a = c.mv(0);
    let i = a.label;
    let rim = |k: usize| k % 5;
    if a.vertex != 5 {
        let x = a.vertex;
        return match c.ply() {
            1 if i != 5 => Some(Move::new(5, 5)),
            1 => Some(Move::new(rim(x + 4), 0)),
            3 if i == 5 && c.mv(2) == Move::new(rim(x + 3), 10) => Some(Move::new(rim(x + 2), 9)),
            _ => None,
        };
    }
    match (c.ply(), i) {
        (1, 0 | 10) => c.anywhere(5),
        (1, 1) => Some(Move::new(0, 9)),
        (1, _) => Some(Move::new(0, 0)),
        (3, 1) => [1, 4]
            .into_iter()
            .find(|&y| {
                let other = if y == 1 { 2 } else { 3 };
                c.is_free(y) && c.is_free(other)
            })
            .map(|y| Move::new(y, 10)),
        (3, 2) => match c.mv(2) {
            r if r == Move::new(1, 10) => Some(Move::new(3, 1)),
            r if r == Move::new(4, 10) => Some(Move::new(2, 1)),
            _ => None,
        },
        (3, _) => match c.mv(2) {
            r if r == Move::new(1, 10) => Some(Move::new(4, 1)),
            r if r == Move::new(4, 10) => Some(Move::new(1, 1)),
            _ => None,
        },
        _ => None,
    }
}

pub(super) fn bob_gear(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::Gear { n }) = c.g.family() else {
        return None;
    };
    let m = 3 * n;
    let center = n;
    let v = |j: usize| j % n;
    let w = |j: usize| n + 1 + j % n;
    let is_w = |u: usize| u > n;
    if c.first() == Player::Bob {
        return match c.ply() {
            0 => Some(Move::new(w(0), 0)),
            2 => match c.mv(1) {
                r if r == Move::new(v(0), m) => Some(Move::new(v(1), 1)),
                r if r == Move::new(v(1), m) => Some(Move::new(v(0), 1)),
                _ => None,
            },
            _ => None,
        };
    }
    if n == 3 {
        return gear3(c);
    }
    let a = c.mv(0);
    let i = a.label;
    let reply = (c.ply() == 3).then(|| c.mv(2));
    let other_of = |r: Move, l: usize, pair: [usize; 2]| -> Option<usize> {
        if r.label != l {
            return None;
        }
        match pair.iter().position(|&u| u == r.vertex)? {
            0 => Some(pair[1]),
            _ => Some(pair[0]),
        }
    };
    if is_w(a.vertex) {
        let j = a.vertex - n - 1;
        return match c.ply() {
            1 => Some(Move::new(w(j + 2), 0)),
            3 => {
                let o = other_of(reply?, m, [v(j + 2), v(j + 3)])?;
                Some(Move::new(o, if i != 1 { 1 } else { m - 2 }))
            }
            _ => None,
        };
    }
    if a.vertex == center {
        return match (c.ply(), i == m - 1) {
            (1, false) => Some(Move::new(v(0), 0)),
            (1, true) => Some(Move::new(v(0), m)),
            (3, false) => {
                let o = other_of(reply?, m, [w(n - 1), w(0)])?;
                if i != 1 {
                    Some(Move::new(o, 1))
                } else {
                    c.first_legal((0..n).map(w).filter(|&u| u != o), m - 1)
                }
            }
            (3, true) => {
                let o = other_of(reply?, 0, [w(n - 1), w(0)])?;
                Some(Move::new(o, 2))
            }
            _ => None,
        };
    }
    let j = a.vertex;
    match c.ply() {
        1 if i == m - 1 => Some(Move::new(w(j), m)),
        1 => Some(Move::new(w(j), 0)),
        3 if i != 1 && i != m - 1 => Some(Move::new(w(j + n - 1), 1)),
        _ => None,
    }
}

fn gear3(c: &Ctx) -> Option<Move> {
    let n = 3;
    let m = 9;
    let center = 3;
    let v = |j: usize| j % n;
    let w = |j: usize| n + 1 + j % n;
    // the subdivision vertex between two rim vertices
    let joining = |a: usize, b: usize| if b == v(a + 1) { w(a) } else { w(b) };
    let a = c.mv(0);
    let i = a.label;
    if a.vertex == center {
        return match (c.ply(), i) {
            (1, 1..=4) => Some(Move::new(v(0), 0)),
            (1, 5..=8) => Some(Move::new(v(0), 9)),
            _ => None,
        };
    }
    if a.vertex < n {
        let j = a.vertex;
        return match c.ply() {
            1 => Some(Move::new(center, 0)),
            3 => {
                let r = c.mv(2);
                if r.label != m || r.vertex >= n {
                    return None;
                }
                let third = (0..n).find(|&u| u != j && u != r.vertex)?;
                match i {
                    1 => Some(Move::new(joining(j, third), 8)),
                    8 => Some(Move::new(joining(j, third), 1)),
                    _ => Some(Move::new(third, 1)),
                }
            }
            _ => None,
        };
    }
    let j = a.vertex - n - 1;
    if i == 8 {
        return match c.ply() {
            1 => Some(Move::new(w(j + 2), 0)),
            3 => [5, 6, 7]
                .into_iter()
                .find(|&l| c.legal(center, l))
                .map(|l| Move::new(center, l)),
            _ => None,
        };
    }
    match c.ply() {
        1 => Some(Move::new(v(j + 1), 0)),
        3 => {
            let r = c.mv(2);
            if r == Move::new(center, m) {
                if i >= 2 {
                    Some(Move::new(w(j + 1), 1))
                } else {
                    Some(Move::new(w(j + 2), 8))
                }
            } else if r == Move::new(w(j + 1), m) {
                c.first_killing((0..=m).map(|l| Move::new(center, l)))
            } else {
                None
            }
        }
        _ => None,
    }
}

pub(super) fn bob_helm(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::Helm { n }) = c.g.family() else {
        return None;
    };
    let m = c.m;
    if c.first() == Player::Bob {
        return match c.ply() {
            0 => Some(Move::new(n + 1, 0)),
            2 if c.mv(1) == Move::new(1, m) => c.away_from(1, 1),
            _ => None,
        };
    }
    let a = c.mv(0);
    let i = a.label;
    match a.vertex {
        0 => match c.ply() {
            1 if i == 1 => Some(Move::new(n + 1, m)),
            1 => Some(Move::new(n + 1, 0)),
            3 if i == 1 && c.mv(2) == Move::new(1, 0) => c.away_from(1, m - 1),
            3 if i != 1 && c.mv(2) == Move::new(1, m) => c.away_from(1, 1),
            _ => None,
        },
        k if k <= n => (c.ply() == 1).then(|| Move::new(n + k, 0)),
        x => {
            let k = x - n;
            let p = (1..=n).find(|&p| p != k)?;
            match c.ply() {
                1 => Some(Move::new(n + p, 0)),
                3 if i != 1 && c.mv(2) == Move::new(p, m) => c.away_from(p, 1),
                _ => None,
            }
        }
    }
}

pub(super) fn bob_web(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::Web { n, .. }) = c.g.family() else {
        return None;
    };
    let m = c.m;
    // pendant p hangs off the outer ring vertex n + p
    let follow = |p: usize| {
        (c.mv(c.ply() - 1) == Move::new(n + p, m)).then(|| c.away_from(n + p, 1))?
    };
    if c.first() == Player::Bob {
        return match c.ply() {
            0 => Some(Move::new(1, 0)),
            2 => follow(1),
            _ => None,
        };
    }
    let a = c.mv(0);
    let i = a.label;
    let p = match a.vertex {
        0 => 1,
        k if k <= n => (1..=n).find(|&p| p != k)?,
        x if x <= 2 * n => {
            return (c.ply() == 1).then(|| Move::new(x - n, 0));
        }
        x => {
            let k = (x - 1) % n + 1;
            (1..=n).find(|&p| p != k)?
        }
    };
    match c.ply() {
        1 => Some(Move::new(p, 0)),
        3 if i != 1 => follow(p),
        _ => None,
    }
}
