//! Bob on prisms C_r x K_2.

use crate::game::{Move, Player};
use crate::graph::FamilySpec;

use super::ctx::Ctx;

pub(super) fn bob_prism(c: &Ctx) -> Option<Move> {
    let Some(&FamilySpec::Prism { r }) = c.g.family() else {
        return None;
    };
    if r == 3 {
        return prism3(c);
    }
    let m = c.m;
    match c.first() {
        Player::Bob => match c.ply() {
            0 => Some(Move::new(0, 0)),
            2 => {
                let a = c.mv(1);
                if a.label != m {
                    return None;
                }
                c.free_nbrs(a.vertex).first().map(|&u| Move::new(u, m - 1))
            }
            4 => {
                let u = c.mv(2).vertex;
                let z = c.mv(0).vertex;
                c.first_legal(
                    (0..c.n()).filter(|&x| x != z && x != u && !c.adj(x, z) && !c.adj(x, u)),
                    m - 2,
                )
            }
            _ => None,
        },
        Player::Alice => {
            let i = c.mv(0).label;
            if i == m - 1 {
                return c.under(None, true, prism_alice);
            }
            prism_alice(c)
        }
    }
}

fn prism_alice(c: &Ctx) -> Option<Move> {
    let a = c.mv(0);
    let x = a.vertex;
    let i = a.label;
    let m = c.m;
    match c.ply() {
        1 => c.nbrs(x).into_iter().min().map(|w| Move::new(w, 0)),
        3 if i == 1 => {
            let u = c.mv(2).vertex;
            c.first_legal(c.free_nbrs(x).into_iter().filter(|&y| !c.adj(y, u)), m - 1)
        }
        3 if (2..=m - 2).contains(&i) => {
            let w = c.mv(1).vertex;
            c.first_legal(c.free_nbrs(w), 1)
        }
        _ => None,
    }
}

/// The triangular prism, m = 9.
fn prism3(c: &Ctx) -> Option<Move> {
    const ELL: [usize; 9] = [0, 3, 3, 0, 5, 3, 2, 3, 6];
    match c.first() {
        Player::Bob => match c.ply() {
            0 => Some(Move::new(0, 0)),
            2 => {
                let a = c.mv(1);
                match (a.vertex, a.label) {
                    (3, 9) => c.anywhere(3),
                    (1 | 2, 9) => c.first_legal(c.free_nbrs(a.vertex), 6),
                    _ => None,
                }
            }
            _ => None,
        },
        Player::Alice => {
            let a = c.mv(0);
            if c.ply() != 1 || a.label == 0 || a.label >= 9 {
                return None;
            }
            c.first_legal(c.free_nbrs(a.vertex), ELL[a.label])
        }
    }
}
