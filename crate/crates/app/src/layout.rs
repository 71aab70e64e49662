//! Fixed drawing coordinates per family, in the unit square.

use std::f64::consts::TAU;

use graceful_core::{FamilySpec, Graph};

type Point = [f64; 2];

fn on_circle(k: usize, of: usize, radius: f64, shift: f64) -> Point {
    let a = TAU * (k as f64 + shift) / of as f64 - TAU / 4.0;
    [0.5 + radius * a.cos(), 0.5 + radius * a.sin()]
}

fn row(k: usize, of: usize, y: f64) -> Point {
    let x = if of <= 1 { 0.5 } else { 0.05 + 0.9 * k as f64 / (of - 1) as f64 };
    [x, y]
}

/// Coordinates for every vertex of `g`, indexed like its vertices.
pub fn layout(g: &Graph) -> Vec<Point> {
    let n = g.n_vertices();
    let Some(spec) = g.family() else {
        return (0..n).map(|v| on_circle(v, n, 0.45, 0.0)).collect();
    };
    match *spec {
        FamilySpec::Path { .. } | FamilySpec::PathPower { .. } => (0..n).map(|v| row(v, n, 0.5)).collect(),
        FamilySpec::Cycle { .. } | FamilySpec::Complete { .. } => {
            (0..n).map(|v| on_circle(v, n, 0.45, 0.0)).collect()
        }
        FamilySpec::CompleteBipartite { p, q } => (0..p)
            .map(|v| row(v, p, 0.2))
            .chain((0..q).map(|v| row(v, q, 0.8)))
            .collect(),
        FamilySpec::Star { q } => std::iter::once([0.5, 0.5])
            .chain((0..q).map(|v| on_circle(v, q, 0.45, 0.0)))
            .collect(),
        FamilySpec::Caterpillar { ref legs } => {
            let s = legs.len();
            let leaves: usize = legs.iter().sum();
            (0..s).map(|j| row(j, s, 0.3)).chain((0..leaves).map(|i| row(i, leaves, 0.75))).collect()
        }
        FamilySpec::Wheel { n: k } => (0..k)
            .map(|v| on_circle(v, k, 0.45, 0.0))
            .chain(std::iter::once([0.5, 0.5]))
            .collect(),
        FamilySpec::Gear { n: k } => (0..k)
            .map(|v| on_circle(v, k, 0.45, 0.0))
            .chain(std::iter::once([0.5, 0.5]))
            .chain((0..k).map(|j| on_circle(j, k, 0.45 * (TAU / (2 * k) as f64).cos(), 0.5)))
            .collect(),
        FamilySpec::Helm { n: k } => std::iter::once([0.5, 0.5])
            .chain((0..k).map(|v| on_circle(v, k, 0.28, 0.0)))
            .chain((0..k).map(|v| on_circle(v, k, 0.45, 0.0)))
            .collect(),
        FamilySpec::Web { t, n: k } => {
            // pendants outermost, then rings 1..=t inward
            let step = 0.45 / (t + 1) as f64;
            std::iter::once([0.5, 0.5])
                .chain((0..=t).flat_map(|l| (0..k).map(move |v| on_circle(v, k, 0.45 - l as f64 * step, 0.0))))
                .collect()
        }
        FamilySpec::Hypercube { n: d } => {
            let mut seen = vec![0usize; d + 1];
            let per: Vec<usize> = (0..=d).map(|w| (0..n).filter(|v| v.count_ones() as usize == w).count()).collect();
            (0..n)
                .map(|v| {
                    let w = v.count_ones() as usize;
                    let i = seen[w];
                    seen[w] += 1;
                    let [y, _] = row(w, d + 1, 0.0);
                    [row(i, per[w], 0.0)[0], y]
                })
                .collect()
        }
        FamilySpec::Prism { r } => (0..r)
            .map(|v| on_circle(v, r, 0.45, 0.0))
            .chain((0..r).map(|v| on_circle(v, r, 0.22, 0.0)))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::CATALOG;
    use graceful_core::build_family;

    #[test]
    fn one_point_per_vertex_inside_the_square() {
        for info in CATALOG {
            let g = build_family(&info.example.parse().unwrap()).unwrap();
            let pts = layout(&g);
            assert_eq!(pts.len(), g.n_vertices(), "{}", info.example);
            for p in &pts {
                assert!((0.0..=1.0).contains(&p[0]) && (0.0..=1.0).contains(&p[1]), "{} {p:?}", info.example);
            }
        }
    }

    #[test]
    fn wheel_center_in_the_middle() {
        let g = build_family(&FamilySpec::Wheel { n: 5 }).unwrap();
        assert_eq!(layout(&g)[5], [0.5, 0.5]);
    }

    #[test]
    fn distinct_points() {
        for info in CATALOG {
            let g = build_family(&info.example.parse().unwrap()).unwrap();
            let pts = layout(&g);
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    let d = (pts[i][0] - pts[j][0]).hypot(pts[i][1] - pts[j][1]);
                    assert!(d > 1e-6, "{}: {i} and {j}", info.example);
                }
            }
        }
    }
}
