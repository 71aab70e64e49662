//! Partial and complete vertex labelings, the legality rule, and exhaustive
//! enumeration of graceful labelings.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{automorphisms, BitIter, Graph, GraphError, Permutation};

/// Largest edge count a labeling can carry; labels and edge labels live in a `u128`.
pub const MAX_EDGES: usize = 127;

/// Default node-expansion budget for enumeration and completion search.
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

const FREE: u8 = u8::MAX;

/// Why a move was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IllegalMove {
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("label {0} is out of range")]
    LabelOutOfRange(usize),
    #[error("vertex {0} is already labeled")]
    VertexOccupied(usize),
    #[error("label {0} is already used")]
    DuplicateLabel(usize),
    #[error("edge label {0} would appear twice")]
    EdgeLabelClash(usize),
}

impl IllegalMove {
    /// Machine-readable reason code.
    pub fn code(&self) -> &'static str {
        match self {
            IllegalMove::NoSuchVertex(_) => "no-such-vertex",
            IllegalMove::LabelOutOfRange(_) => "label-out-of-range",
            IllegalMove::VertexOccupied(_) => "vertex-occupied",
            IllegalMove::DuplicateLabel(_) => "duplicate-label",
            IllegalMove::EdgeLabelClash(_) => "edge-label-clash",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("illegal move: {0}")]
    Illegal(#[from] IllegalMove),
    #[error("labeling has {got} entries but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },
    #[error("labeling is not graceful")]
    NotGraceful,
    #[error("graph has {0} edges, more than {MAX_EDGES}")]
    TooManyEdges(usize),
    #[error("search budget of {limit} node expansions exhausted")]
    BudgetExceeded { limit: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Bit set over labels `0..=127`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct LabelSet(pub u128);

impl LabelSet {
    /// `{0, ..., m}`.
    pub fn upto(m: usize) -> LabelSet {
        if m >= 127 {
            LabelSet(u128::MAX)
        } else {
            LabelSet((1u128 << (m + 1)) - 1)
        }
    }

    #[inline]
    pub fn contains(self, l: usize) -> bool {
        l < 128 && self.0 >> l & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, l: usize) {
        self.0 |= 1 << l;
    }

    #[inline]
    pub fn remove(&mut self, l: usize) {
        self.0 &= !(1 << l);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl DoubleEndedIterator<Item = usize> {
        (0..128usize).filter(move |&l| self.0 >> l & 1 == 1)
    }
}

/// An injective partial map vertex → label together with the set of induced edge labels.
///
/// Values are never shared mutably; [`PartialLabeling::apply_move`] returns a fresh value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialLabeling {
    m: usize,
    labels: Vec<u8>,
    used_labels: LabelSet,
    used_edges: LabelSet,
    labeled: usize,
}

impl PartialLabeling {
    pub fn empty(g: &Graph) -> Result<PartialLabeling, LabelingError> {
        let m = g.n_edges();
        if m > MAX_EDGES {
            return Err(LabelingError::TooManyEdges(m));
        }
        Ok(PartialLabeling {
            m,
            labels: vec![FREE; g.n_vertices()],
            used_labels: LabelSet::default(),
            used_edges: LabelSet::default(),
            labeled: 0,
        })
    }

    /// Builds a labeling from per-vertex optional labels, checking every invariant.
    pub fn from_labels(g: &Graph, labels: &[Option<usize>]) -> Result<PartialLabeling, LabelingError> {
        if labels.len() != g.n_vertices() {
            return Err(LabelingError::SizeMismatch {
                expected: g.n_vertices(),
                got: labels.len(),
            });
        }
        let mut state = PartialLabeling::empty(g)?;
        for (v, l) in labels.iter().enumerate() {
            if let Some(l) = *l {
                state.check(g, v, l)?;
                state.assign(g, v, l);
            }
        }
        Ok(state)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    #[inline]
    pub fn label(&self, v: usize) -> Option<usize> {
        match self.labels[v] {
            FREE => None,
            l => Some(l as usize),
        }
    }

    #[inline]
    pub fn is_free(&self, v: usize) -> bool {
        self.labels[v] == FREE
    }

    pub fn labels(&self) -> Vec<Option<usize>> {
        (0..self.labels.len()).map(|v| self.label(v)).collect()
    }

    /// Raw per-vertex bytes, `u8::MAX` marking a free vertex.
    pub fn raw(&self) -> &[u8] {
        &self.labels
    }

    pub fn used_labels(&self) -> LabelSet {
        self.used_labels
    }

    pub fn used_edge_labels(&self) -> LabelSet {
        self.used_edges
    }

    pub fn free_labels(&self) -> LabelSet {
        LabelSet(LabelSet::upto(self.m).0 & !self.used_labels.0)
    }

    pub fn n_labeled(&self) -> usize {
        self.labeled
    }

    pub fn is_total(&self) -> bool {
        self.labeled == self.labels.len()
    }

    /// Bitmask of free vertices.
    pub fn free_mask(&self) -> u64 {
        self.labels
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == FREE)
            .fold(0, |acc, (v, _)| acc | 1 << v)
    }

    pub fn free_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.free_mask())
    }

    /// Vertex carrying label `l`, if any.
    pub fn vertex_with(&self, l: usize) -> Option<usize> {
        self.labels.iter().position(|&x| x as usize == l && x != FREE)
    }

    /// Checks the move, reporting the first reason it is illegal.
    pub fn check(&self, g: &Graph, v: usize, l: usize) -> Result<(), IllegalMove> {
        if v >= self.labels.len() {
            return Err(IllegalMove::NoSuchVertex(v));
        }
        if l > self.m {
            return Err(IllegalMove::LabelOutOfRange(l));
        }
        if self.labels[v] != FREE {
            return Err(IllegalMove::VertexOccupied(v));
        }
        if self.used_labels.contains(l) {
            return Err(IllegalMove::DuplicateLabel(l));
        }
        let mut fresh = LabelSet::default();
        for u in g.neighbors(v) {
            if let Some(a) = self.label(u) {
                let d = a.abs_diff(l);
                if self.used_edges.contains(d) || fresh.contains(d) {
                    return Err(IllegalMove::EdgeLabelClash(d));
                }
                fresh.insert(d);
            }
        }
        Ok(())
    }

    /// Total legality predicate.
    #[inline]
    pub fn is_legal_move(&self, g: &Graph, v: usize, l: usize) -> bool {
        if v >= self.labels.len() || l > self.m || self.labels[v] != FREE || self.used_labels.contains(l) {
            return false;
        }
        let mut seen = self.used_edges.0;
        let mut nb = g.neighbor_mask(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let a = self.labels[u];
            if a != FREE {
                let bit = 1u128 << (a as usize).abs_diff(l);
                if seen & bit != 0 {
                    return false;
                }
                seen |= bit;
            }
        }
        true
    }

    /// Returns the labeling extended by `v ↦ l`; `self` is left untouched.
    pub fn apply_move(&self, g: &Graph, v: usize, l: usize) -> Result<PartialLabeling, IllegalMove> {
        self.check(g, v, l)?;
        let mut next = self.clone();
        next.assign(g, v, l);
        Ok(next)
    }

    /// In-place extension. The caller guarantees legality.
    #[inline]
    pub fn assign(&mut self, g: &Graph, v: usize, l: usize) {
        debug_assert!(self.is_legal_move(g, v, l));
        let mut nb = g.neighbor_mask(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let a = self.labels[u];
            if a != FREE {
                self.used_edges.insert((a as usize).abs_diff(l));
            }
        }
        self.labels[v] = l as u8;
        self.used_labels.insert(l);
        self.labeled += 1;
    }

    /// Undoes [`PartialLabeling::assign`].
    #[inline]
    pub fn unassign(&mut self, g: &Graph, v: usize) {
        let l = self.labels[v] as usize;
        debug_assert!(self.labels[v] != FREE);
        self.labels[v] = FREE;
        let mut nb = g.neighbor_mask(v);
        while nb != 0 {
            let u = nb.trailing_zeros() as usize;
            nb &= nb - 1;
            let a = self.labels[u];
            if a != FREE {
                self.used_edges.remove((a as usize).abs_diff(l));
            }
        }
        self.used_labels.remove(l);
        self.labeled -= 1;
    }

    /// Label-complement `l ↦ m - l` applied to every assigned vertex.
    pub fn complemented(&self) -> PartialLabeling {
        let mut out = self.clone();
        out.used_labels = LabelSet::default();
        for x in out.labels.iter_mut() {
            if *x != FREE {
                *x = (self.m - *x as usize) as u8;
                out.used_labels.insert(*x as usize);
            }
        }
        out
    }

    /// Relabels vertices by `perm`: vertex `perm(v)` receives the label of `v`.
    pub fn permuted(&self, perm: &Permutation) -> PartialLabeling {
        let mut out = self.clone();
        for v in 0..self.labels.len() {
            out.labels[perm.image(v)] = self.labels[v];
        }
        out
    }

    /// Cheap necessary condition for a graceful completion: every missing edge
    /// label must still be producible by some edge with a free endpoint.
    pub fn may_complete(&self, g: &Graph) -> bool {
        let free_vertices = self.labels.len() - self.labeled;
        let free_labels = self.free_labels();
        if free_labels.len() < free_vertices {
            return false;
        }
        let mut anchor = 0u128;
        let mut free_free_edge = false;
        for &(u, v) in g.edges() {
            match (self.labels[u] == FREE, self.labels[v] == FREE) {
                (true, true) => free_free_edge = true,
                (false, true) => anchor |= 1 << self.labels[u],
                (true, false) => anchor |= 1 << self.labels[v],
                (false, false) => {}
            }
        }
        let free = free_labels.0;
        let missing = LabelSet::upto(self.m).0 & !self.used_edges.0 & !1;
        let mut rest = missing;
        while rest != 0 {
            let d = rest.trailing_zeros();
            rest &= rest - 1;
            let via_anchor = ((anchor << d) | (anchor >> d)) & free;
            let via_pair = free_free_edge && (free & (free >> d)) != 0;
            if via_anchor == 0 && !via_pair {
                return false;
            }
        }
        true
    }
}

/// A total labeling; position `v` holds the label of vertex `v`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GracefulLabeling(pub Vec<usize>);

impl GracefulLabeling {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Relabels vertices by `perm`: `f ∘ perm⁻¹`.
    pub fn permuted(&self, perm: &Permutation) -> GracefulLabeling {
        let mut out = vec![0; self.0.len()];
        for (v, &l) in self.0.iter().enumerate() {
            out[perm.image(v)] = l;
        }
        GracefulLabeling(out)
    }
}

impl fmt::Display for GracefulLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `true` iff `f` is injective into `0..=m` and its `m` induced edge labels are distinct.
pub fn is_graceful(g: &Graph, f: &GracefulLabeling) -> Result<bool, LabelingError> {
    if f.len() != g.n_vertices() {
        return Err(LabelingError::SizeMismatch {
            expected: g.n_vertices(),
            got: f.len(),
        });
    }
    let m = g.n_edges();
    let mut seen = vec![false; m + 1];
    for &l in f.as_slice() {
        if l > m || std::mem::replace(&mut seen[l], true) {
            return Ok(false);
        }
    }
    let mut edge_seen = vec![false; m + 1];
    for &(u, v) in g.edges() {
        let d = f.0[u].abs_diff(f.0[v]);
        if d == 0 || std::mem::replace(&mut edge_seen[d], true) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The complementary labeling `v ↦ m - f(v)`.
pub fn complement(f: &GracefulLabeling, m: usize) -> GracefulLabeling {
    GracefulLabeling(f.0.iter().map(|&l| m - l).collect())
}

/// Smallest threshold `k` separating the endpoint labels of every edge, if any.
pub fn alpha_threshold(g: &Graph, f: &GracefulLabeling) -> Result<Option<usize>, LabelingError> {
    if !is_graceful(g, f)? {
        return Err(LabelingError::NotGraceful);
    }
    let m = g.n_edges();
    let k = (0..=m).find(|&k| {
        g.edges().iter().all(|&(u, v)| {
            let (a, b) = (f.0[u], f.0[v]);
            (a <= k && k < b) || (b <= k && k < a)
        })
    });
    Ok(k)
}

/// `true` iff `f` is an α-labeling of `g`.
pub fn is_alpha(g: &Graph, f: &GracefulLabeling) -> Result<bool, LabelingError> {
    Ok(alpha_threshold(g, f)?.is_some())
}

/// Lexicographically least image of `f` under the group `autos`.
pub fn canonical_form(f: &GracefulLabeling, autos: &[Permutation]) -> GracefulLabeling {
    autos
        .iter()
        .map(|p| f.permuted(p))
        .min()
        .unwrap_or_else(|| f.clone())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EnumerationMode {
    Raw,
    UpToAutomorphism,
}

/// Every graceful labeling of `g`, either all of them or one canonical
/// representative per automorphism orbit. Complements are not identified.
pub fn enumerate_graceful(
    g: &Graph,
    mode: EnumerationMode,
    budget: u64,
) -> Result<Vec<GracefulLabeling>, LabelingError> {
    let start = PartialLabeling::empty(g)?;
    let raw = enumerate_completions(g, &start, budget)?;
    match mode {
        EnumerationMode::Raw => Ok(raw),
        EnumerationMode::UpToAutomorphism => {
            let autos = automorphisms(g)?;
            let reps: BTreeSet<GracefulLabeling> =
                raw.iter().map(|f| canonical_form(f, &autos)).collect();
            Ok(reps.into_iter().collect())
        }
    }
}

/// Every graceful labeling extending `partial`, sorted.
pub fn enumerate_completions(
    g: &Graph,
    partial: &PartialLabeling,
    budget: u64,
) -> Result<Vec<GracefulLabeling>, LabelingError> {
    let mut search = CompletionSearch::new(g, partial, budget);
    let mut out = Vec::new();
    search.run(&mut |f| {
        out.push(f);
        true
    })?;
    out.sort();
    Ok(out)
}

/// Whether some graceful labeling extends `partial`.
pub fn has_graceful_completion(
    g: &Graph,
    partial: &PartialLabeling,
    budget: u64,
) -> Result<bool, LabelingError> {
    Ok(find_graceful_completion(g, partial, budget)?.is_some())
}

/// First graceful labeling extending `partial` in search order.
pub fn find_graceful_completion(
    g: &Graph,
    partial: &PartialLabeling,
    budget: u64,
) -> Result<Option<GracefulLabeling>, LabelingError> {
    let mut search = CompletionSearch::new(g, partial, budget);
    let mut found = None;
    search.run(&mut |f| {
        found = Some(f);
        false
    })?;
    Ok(found)
}

/// Depth-first backtracking over the free vertices in a fixed order, trying
/// every free label with incremental legality checks.
struct CompletionSearch<'g> {
    g: &'g Graph,
    state: PartialLabeling,
    order: Vec<usize>,
    budget: u64,
    nodes: u64,
}

impl<'g> CompletionSearch<'g> {
    fn new(g: &'g Graph, partial: &PartialLabeling, budget: u64) -> Self {
        CompletionSearch {
            g,
            state: partial.clone(),
            order: completion_order(g, partial),
            budget,
            nodes: 0,
        }
    }

    /// Runs the search; `visit` returns `false` to stop early.
    fn run(&mut self, visit: &mut dyn FnMut(GracefulLabeling) -> bool) -> Result<(), LabelingError> {
        if !self.state.is_total() && !self.state.may_complete(self.g) {
            return Ok(());
        }
        self.descend(0, visit).map(|_| ())
    }

    fn descend(
        &mut self,
        depth: usize,
        visit: &mut dyn FnMut(GracefulLabeling) -> bool,
    ) -> Result<bool, LabelingError> {
        if depth == self.order.len() {
            let f = GracefulLabeling(self.state.raw().iter().map(|&l| l as usize).collect());
            return Ok(visit(f));
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(LabelingError::BudgetExceeded { limit: self.budget });
        }
        let v = self.order[depth];
        let mut free = self.state.free_labels().0;
        while free != 0 {
            let l = free.trailing_zeros() as usize;
            free &= free - 1;
            if !self.state.is_legal_move(self.g, v, l) {
                continue;
            }
            self.state.assign(self.g, v, l);
            let keep_going = if depth + 1 == self.order.len() || self.state.may_complete(self.g) {
                self.descend(depth + 1, visit)?
            } else {
                true
            };
            self.state.unassign(self.g, v);
            if !keep_going {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Free vertices ordered so each one has as many already-placed neighbors as
/// possible; ties go to higher degree, then lower index.
fn completion_order(g: &Graph, partial: &PartialLabeling) -> Vec<usize> {
    let mut placed = !partial.free_mask();
    let mut remaining = partial.free_mask();
    let mut order = Vec::with_capacity(remaining.count_ones() as usize);
    while remaining != 0 {
        let v = BitIter(remaining)
            .max_by_key(|&v| {
                let links = (g.neighbor_mask(v) & placed).count_ones();
                (links, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        order.push(v);
        placed |= 1 << v;
        remaining &= !(1 << v);
    }
    order
}

/// Wire format for labelings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub labels: Vec<Option<usize>>,
}

/// Parses one labeling per non-comment line, comma separated, optionally in
/// parentheses. `order[i]` names the vertex that the `i`-th tuple entry labels.
pub fn parse_golden(text: &str, order: &[usize]) -> Result<Vec<GracefulLabeling>, String> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let inner = line.trim_start_matches('(').trim_end_matches(')');
        let values = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| format!("line {}: {e}", lineno + 1))?;
        if values.len() != order.len() {
            return Err(format!(
                "line {}: expected {} values, got {}",
                lineno + 1,
                order.len(),
                values.len()
            ));
        }
        let mut labels = vec![0; order.len()];
        for (pos, &v) in order.iter().enumerate() {
            labels[v] = values[pos];
        }
        out.push(GracefulLabeling(labels));
    }
    Ok(out)
}

/// Inverse of [`parse_golden`].
pub fn format_golden(labelings: &[GracefulLabeling], order: &[usize]) -> String {
    let mut out = String::new();
    for f in labelings {
        let row: Vec<String> = order.iter().map(|&v| f.0[v].to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_family, FamilySpec};

    fn fam(spec: FamilySpec) -> Graph {
        build_family(&spec).unwrap()
    }

    fn partial(g: &Graph, pairs: &[(usize, usize)]) -> PartialLabeling {
        let mut s = PartialLabeling::empty(g).unwrap();
        for &(v, l) in pairs {
            s = s.apply_move(g, v, l).unwrap();
        }
        s
    }

    #[test]
    fn legality_on_triangle() {
        let k3 = fam(FamilySpec::Complete { n: 3 });
        let s = partial(&k3, &[(0, 1), (1, 0)]);
        assert!(!s.is_legal_move(&k3, 2, 2));
        assert!(s.is_legal_move(&k3, 2, 3));
        assert_eq!(s.check(&k3, 2, 2), Err(IllegalMove::EdgeLabelClash(1)));
        let empty = PartialLabeling::empty(&k3).unwrap();
        for v in 0..3 {
            for l in 0..=3 {
                assert!(empty.is_legal_move(&k3, v, l));
            }
        }
    }

    #[test]
    fn apply_move_errors_are_distinguished() {
        let k3 = fam(FamilySpec::Complete { n: 3 });
        let s = partial(&k3, &[(0, 1), (1, 0)]);
        assert_eq!(s.apply_move(&k3, 2, 1), Err(IllegalMove::DuplicateLabel(1)));
        assert_eq!(s.apply_move(&k3, 0, 3), Err(IllegalMove::VertexOccupied(0)));
        assert_eq!(s.apply_move(&k3, 2, 2), Err(IllegalMove::EdgeLabelClash(1)));
        assert_eq!(s.apply_move(&k3, 2, 9), Err(IllegalMove::LabelOutOfRange(9)));
        // the input is untouched
        assert_eq!(s.n_labeled(), 2);
    }

    #[test]
    fn p2_completes_gracefully() {
        let p2 = fam(FamilySpec::Path { n: 2 });
        let s = partial(&p2, &[(0, 0), (1, 1)]);
        assert!(s.is_total());
        let f = GracefulLabeling(s.labels().into_iter().map(Option::unwrap).collect());
        assert!(is_graceful(&p2, &f).unwrap());
    }

    #[test]
    fn graceful_examples() {
        let k4 = fam(FamilySpec::Complete { n: 4 });
        assert!(is_graceful(&k4, &GracefulLabeling(vec![5, 6, 0, 2])).unwrap());
        let g3 = fam(FamilySpec::Gear { n: 3 });
        // (center, ring) = (4, 0, 6, 5, 8, 1, 9), ring read w2, v0, w0, v1, w1, v2
        let order = [3, 6, 0, 4, 1, 5, 2];
        let f = parse_golden("4,0,6,5,8,1,9", &order).unwrap().remove(0);
        assert!(is_graceful(&g3, &f).unwrap());
        assert!(!is_graceful(&k4, &GracefulLabeling(vec![0; 4])).unwrap());
        assert!(matches!(
            is_graceful(&k4, &GracefulLabeling(vec![0; 3])),
            Err(LabelingError::SizeMismatch { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(
            complement(&GracefulLabeling(vec![2, 1, 4, 0]), 4),
            GracefulLabeling(vec![2, 3, 0, 4])
        );
        assert_eq!(
            complement(&GracefulLabeling(vec![5, 6, 0, 2]), 6),
            GracefulLabeling(vec![1, 0, 6, 4])
        );
        let f = GracefulLabeling(vec![3, 0, 7, 1]);
        assert_eq!(complement(&complement(&f, 9), 9), f);
    }

    #[test]
    fn alpha_examples() {
        let p4 = fam(FamilySpec::Path { n: 4 });
        assert_eq!(alpha_threshold(&p4, &GracefulLabeling(vec![1, 2, 0, 3])).unwrap(), Some(1));
        let k3 = fam(FamilySpec::Complete { n: 3 });
        assert!(!is_alpha(&k3, &GracefulLabeling(vec![0, 1, 3])).unwrap());
        let p2 = fam(FamilySpec::Path { n: 2 });
        assert_eq!(alpha_threshold(&p2, &GracefulLabeling(vec![0, 1])).unwrap(), Some(0));
        assert_eq!(
            is_alpha(&k3, &GracefulLabeling(vec![0, 1, 2])),
            Err(LabelingError::NotGraceful)
        );
    }

    #[test]
    fn canonical_form_examples() {
        let f = GracefulLabeling(vec![3, 1, 2, 0]);
        assert_eq!(canonical_form(&f, &[Permutation::identity(4)]), f);
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        let autos = automorphisms(&c4).unwrap();
        let a = GracefulLabeling(vec![2, 1, 4, 0]);
        let rot = Permutation::new(vec![1, 2, 3, 0]).unwrap();
        let b = a.permuted(&rot);
        assert_ne!(a, b);
        // oracle: minimum over all 8 images, computed independently of canonical_form
        let mut images: Vec<Vec<usize>> = autos
            .iter()
            .map(|p| {
                let mut img = vec![0; 4];
                for v in 0..4 {
                    img[p.as_slice()[v]] = a.0[v];
                }
                img
            })
            .collect();
        images.sort();
        assert_eq!(canonical_form(&a, &autos).0, images[0]);
        assert_eq!(canonical_form(&a, &autos), canonical_form(&b, &autos));
        let once = canonical_form(&a, &autos);
        assert_eq!(canonical_form(&once, &autos), once);
    }

    #[test]
    fn enumeration_examples() {
        let c5 = fam(FamilySpec::Cycle { n: 5 });
        assert!(enumerate_graceful(&c5, EnumerationMode::Raw, DEFAULT_BUDGET)
            .unwrap()
            .is_empty());
        let k4 = fam(FamilySpec::Complete { n: 4 });
        let reps = enumerate_graceful(&k4, EnumerationMode::UpToAutomorphism, DEFAULT_BUDGET).unwrap();
        assert_eq!(reps.len(), 2);
    }

    #[test]
    fn enumeration_budget_is_an_error() {
        let c8 = fam(FamilySpec::Cycle { n: 8 });
        assert_eq!(
            enumerate_graceful(&c8, EnumerationMode::Raw, 10),
            Err(LabelingError::BudgetExceeded { limit: 10 })
        );
    }

    #[test]
    fn completion_respects_prefix() {
        let c4 = fam(FamilySpec::Cycle { n: 4 });
        let s = partial(&c4, &[(0, 1)]);
        for f in enumerate_completions(&c4, &s, DEFAULT_BUDGET).unwrap() {
            assert_eq!(f.0[0], 1);
            assert!(is_graceful(&c4, &f).unwrap());
        }
        // no graceful C4 labeling uses both 1 and 3
        let s = partial(&c4, &[(0, 1), (2, 3)]);
        assert!(!has_graceful_completion(&c4, &s, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn may_complete_detects_unreachable_top_edge() {
        let p4 = fam(FamilySpec::Path { n: 4 });
        // 0 on v0, and v1 (its only neighbor) gets something other than m
        let s = partial(&p4, &[(0, 0), (1, 1)]);
        assert!(!s.may_complete(&p4));
        assert!(partial(&p4, &[(0, 0), (1, 3)]).may_complete(&p4));
    }

    #[test]
    fn golden_round_trip_respects_order() {
        let order = [2, 0, 1];
        let parsed = parse_golden("# c\n(5, 6, 7)\n", &order).unwrap();
        assert_eq!(parsed[0].0, vec![6, 7, 5]);
        assert_eq!(format_golden(&parsed, &order), "5,6,7\n");
    }
}
