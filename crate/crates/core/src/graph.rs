//! Simple graphs and the family generators used throughout the engine.
//!
//! Every generator fixes a vertex layout so that strategies can address
//! vertices by role:
//!
//! | family            | layout                                                        |
//! |-------------------|---------------------------------------------------------------|
//! | path, cycle       | `v_i = i`                                                     |
//! | complete          | `v_i = i`                                                     |
//! | bipartite `p,q`   | `X = 0..p`, `Y = p..p+q`                                      |
//! | star `q`          | center `0`, leaves `1..=q`                                    |
//! | caterpillar       | spine `0..s`, then the leaves of each spine vertex in order   |
//! | wheel `n`         | rim `v_0..v_{n-1} = 0..n`, center `v_n = n`                   |
//! | gear `n`          | rim `0..n`, center `n`, `w_j = n+1+j` between `v_j`, `v_{j+1}` |
//! | helm `n`          | center `0`, cycle `1..=n`, pendant of `k` is `n+k`            |
//! | web `t,n`         | center `0`, pendants `1..=n`, ring `l` vertex `k` is `l*n+k`  |
//! | hypercube `n`     | bit strings `0..2^n`                                          |
//! | prism `r`         | `v_{p,q} = p + q*r`                                           |
//! | path power `n,k`  | `v_i = i`                                                     |

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count any [`Graph`] may have. Adjacency is kept as `u64` rows.
pub const MAX_VERTICES: usize = 64;

/// Default vertex cap for [`automorphisms`].
pub const AUTOMORPHISM_CAP: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("graph has {n} vertices, more than the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("cannot parse family spec {0:?}")]
    BadFamily(String),
}

/// A graph family together with its parameters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { p: usize, q: usize },
    Star { q: usize },
    /// Leaf counts `k_1..k_s` hanging off a spine of length `s`.
    Caterpillar { legs: Vec<usize> },
    Wheel { n: usize },
    Gear { n: usize },
    Helm { n: usize },
    Web { t: usize, n: usize },
    Hypercube { n: usize },
    Prism { r: usize },
    PathPower { n: usize, k: usize },
}

impl FamilySpec {
    /// Short family keyword, as used on the command line and in JSON.
    pub fn keyword(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Complete { .. } => "complete",
            FamilySpec::CompleteBipartite { .. } => "bipartite",
            FamilySpec::Star { .. } => "star",
            FamilySpec::Caterpillar { .. } => "caterpillar",
            FamilySpec::Wheel { .. } => "wheel",
            FamilySpec::Gear { .. } => "gear",
            FamilySpec::Helm { .. } => "helm",
            FamilySpec::Web { .. } => "web",
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::Prism { .. } => "prism",
            FamilySpec::PathPower { .. } => "pathpower",
        }
    }

    pub fn params(&self) -> Vec<usize> {
        match self {
            FamilySpec::Path { n }
            | FamilySpec::Cycle { n }
            | FamilySpec::Complete { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Gear { n }
            | FamilySpec::Helm { n }
            | FamilySpec::Hypercube { n } => vec![*n],
            FamilySpec::Star { q } => vec![*q],
            FamilySpec::Prism { r } => vec![*r],
            FamilySpec::CompleteBipartite { p, q } => vec![*p, *q],
            FamilySpec::Web { t, n } => vec![*t, *n],
            FamilySpec::PathPower { n, k } => vec![*n, *k],
            FamilySpec::Caterpillar { legs } => legs.clone(),
        }
    }

    /// Builds a spec from a keyword and its parameter list.
    pub fn from_parts(keyword: &str, params: &[usize]) -> Result<FamilySpec, GraphError> {
        let bad = || GraphError::BadFamily(format!("{keyword}{params:?}"));
        let one = || match params {
            [a] => Ok(*a),
            _ => Err(bad()),
        };
        let two = || match params {
            [a, b] => Ok((*a, *b)),
            _ => Err(bad()),
        };
        let spec = match keyword.to_ascii_lowercase().as_str() {
            "path" | "p" => FamilySpec::Path { n: one()? },
            "cycle" | "c" => FamilySpec::Cycle { n: one()? },
            "complete" | "k" => FamilySpec::Complete { n: one()? },
            "bipartite" | "complete-bipartite" | "kpq" => {
                let (p, q) = two()?;
                FamilySpec::CompleteBipartite { p, q }
            }
            "star" => FamilySpec::Star { q: one()? },
            "caterpillar" | "cat" => FamilySpec::Caterpillar {
                legs: params.to_vec(),
            },
            "wheel" | "w" => FamilySpec::Wheel { n: one()? },
            "gear" | "g" => FamilySpec::Gear { n: one()? },
            "helm" | "h" => FamilySpec::Helm { n: one()? },
            "web" => {
                let (t, n) = two()?;
                FamilySpec::Web { t, n }
            }
            "hypercube" | "q" => FamilySpec::Hypercube { n: one()? },
            "prism" => FamilySpec::Prism { r: one()? },
            "pathpower" | "path-power" => {
                let (n, k) = two()?;
                FamilySpec::PathPower { n, k }
            }
            _ => return Err(bad()),
        };
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let fail = |msg: &str| Err(GraphError::InvalidParams(format!("{self}: {msg}")));
        match self {
            FamilySpec::Path { n } | FamilySpec::Complete { n } if *n < 1 => fail("n >= 1"),
            FamilySpec::Cycle { n }
            | FamilySpec::Wheel { n }
            | FamilySpec::Gear { n }
            | FamilySpec::Helm { n }
                if *n < 3 =>
            {
                fail("n >= 3")
            }
            FamilySpec::CompleteBipartite { p, q } if *p < 1 || *q < 1 => fail("p, q >= 1"),
            FamilySpec::Star { q } if *q < 1 => fail("q >= 1"),
            FamilySpec::Caterpillar { legs } if legs.is_empty() => fail("spine length >= 1"),
            FamilySpec::Web { t, n } if *t < 2 || *n < 3 => fail("t >= 2 and n >= 3"),
            FamilySpec::Hypercube { n } if *n < 1 => fail("n >= 1"),
            FamilySpec::Prism { r } if *r < 3 => fail("r >= 3"),
            FamilySpec::PathPower { n, k } if *n < 1 || *k < 1 => fail("n >= 1 and k >= 1"),
            _ => Ok(()),
        }
    }

    /// Vertex and edge counts from the closed forms, without building the graph.
    pub fn expected_size(&self) -> (usize, usize) {
        match *self {
            FamilySpec::Path { n } => (n, n.saturating_sub(1)),
            FamilySpec::Cycle { n } => (n, n),
            FamilySpec::Complete { n } => (n, n * (n - 1) / 2),
            FamilySpec::CompleteBipartite { p, q } => (p + q, p * q),
            FamilySpec::Star { q } => (q + 1, q),
            FamilySpec::Caterpillar { ref legs } => {
                let s = legs.len();
                let leaves: usize = legs.iter().sum();
                (s + leaves, s - 1 + leaves)
            }
            FamilySpec::Wheel { n } => (n + 1, 2 * n),
            FamilySpec::Gear { n } => (2 * n + 1, 3 * n),
            FamilySpec::Helm { n } => (2 * n + 1, 3 * n),
            FamilySpec::Web { t, n } => (n * (t + 1) + 1, n * (2 * t + 1)),
            FamilySpec::Hypercube { n } => (1 << n, n << (n - 1)),
            FamilySpec::Prism { r } => (2 * r, 3 * r),
            FamilySpec::PathPower { n, k } => {
                let k = k.min(n.saturating_sub(1));
                // sum over d = 1..=k of (n - d)
                (n, k * n - k * (k + 1) / 2)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params().iter().map(|p| p.to_string()).collect();
        write!(f, "{}({})", self.keyword(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Parses `keyword(a,b,...)`, e.g. `wheel(4)` or `caterpillar(2,0,2)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GraphError::BadFamily(s.to_string());
        let (keyword, rest) = s.split_once('(').ok_or_else(bad)?;
        let inner = rest.strip_suffix(')').ok_or_else(bad)?;
        let params = inner
            .split(',')
            .map(|p| p.trim())
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        FamilySpec::from_parts(keyword.trim(), &params)
    }
}

impl Serialize for FamilySpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FamilySpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An immutable simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<u64>,
    family: Option<FamilySpec>,
    names: Vec<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let names = (0..n).map(|i| format!("v{i}")).collect();
        Graph::with_names(n, edges, names, None)
    }

    pub fn with_names(
        n: usize,
        edges: &[(usize, usize)],
        names: Vec<String>,
        family: Option<FamilySpec>,
    ) -> Result<Graph, GraphError> {
        if n == 0 {
            return Err(GraphError::InvalidGraph("graph has no vertices".into()));
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge {
                n,
                cap: MAX_VERTICES,
            });
        }
        if names.len() != n {
            return Err(GraphError::InvalidGraph(format!(
                "{} names for {n} vertices",
                names.len()
            )));
        }
        let mut adj = vec![0u64; n];
        let mut list = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidGraph(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(GraphError::InvalidGraph(format!("self-loop at {u}")));
            }
            if adj[u] >> v & 1 == 1 {
                return Err(GraphError::InvalidGraph(format!("duplicate edge ({u},{v})")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        Ok(Graph {
            n,
            edges: list,
            adj,
            family,
            names,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    /// Edge count `m`; labels range over `0..=m`.
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn family(&self) -> Option<&FamilySpec> {
        self.family.as_ref()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    /// Looks a vertex up by its role name.
    pub fn vertex_named(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Breadth-first distances from `src`; `None` for unreachable vertices.
    pub fn distances_from(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Diameter of a connected graph, `None` if disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            for d in self.distances_from(v) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.distances_from(0).iter().all(Option::is_some)
    }

    /// Two-colors the graph if it is bipartite; `side[v]` is 0 or 1.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if side[start] != u8::MAX {
                continue;
            }
            side[start] = 0;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for w in self.neighbors(u) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// The `k`-th power: same vertices, `u ~ v` iff their distance is at most `k`.
    pub fn power(&self, k: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            let dist = self.distances_from(u);
            for (v, d) in dist.iter().enumerate().skip(u + 1) {
                if matches!(d, Some(d) if *d <= k) {
                    edges.push((u, v));
                }
            }
        }
        Graph::with_names(self.n, &edges, self.names.clone(), None)
            .expect("power of a simple graph is simple")
    }

    /// Returns `true` if `perm` maps edges onto edges.
    pub fn preserves_adjacency(&self, perm: &Permutation) -> bool {
        perm.len() == self.n
            && self
                .edges
                .iter()
                .all(|&(u, v)| self.is_adjacent(perm.image(u), perm.image(v)))
    }

    /// Graphviz rendering, one line per edge.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v} [label=\"{}\"];\n", self.names[v]));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// Same as [`Graph::to_dot`], but vertex labels show the assigned numbers.
    pub fn to_dot_labeled(&self, labels: &[Option<usize>]) -> String {
        let mut out = String::from("graph G {\n");
        for v in 0..self.n {
            let text = match labels.get(v).copied().flatten() {
                Some(l) => format!("{}={l}", self.names[v]),
                None => self.names[v].clone(),
            };
            out.push_str(&format!("  {v} [label=\"{text}\"];\n"));
        }
        for &(u, v) in &self.edges {
            match (labels.get(u).copied().flatten(), labels.get(v).copied().flatten()) {
                (Some(a), Some(b)) => {
                    out.push_str(&format!("  {u} -- {v} [label=\"{}\"];\n", a.abs_diff(b)))
                }
                _ => out.push_str(&format!("  {u} -- {v};\n")),
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            v: 1,
            n: self.n,
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            family: self.family.as_ref().map(|f| f.to_string()),
            names: self.names.clone(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = json.edges.iter().map(|e| (e[0], e[1])).collect();
        let family = match &json.family {
            Some(f) => Some(f.parse()?),
            None => None,
        };
        let names = if json.names.is_empty() {
            (0..json.n).map(|i| format!("v{i}")).collect()
        } else {
            json.names.clone()
        };
        let g = Graph::with_names(json.n, &edges, names, family.clone())?;
        if let Some(f) = family {
            let built = build_family(&f)?;
            if built.edges != g.edges {
                return Err(GraphError::InvalidGraph(format!(
                    "edge list does not match family {f}"
                )));
            }
        }
        Ok(g)
    }

    /// Stable 64-bit FNV-1a digest of the vertex count and sorted edge list.
    pub fn structure_hash(&self) -> u64 {
        const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
        const PRIME: u64 = 0x0100_0000_01b3;
        let mut h = OFFSET;
        let mut feed = |x: u64| {
            for b in x.to_le_bytes() {
                h ^= u64::from(b);
                h = h.wrapping_mul(PRIME);
            }
        };
        feed(self.n as u64);
        for &(u, v) in &self.edges {
            feed(u as u64);
            feed(v as u64);
        }
        h
    }
}

/// Wire format for graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    #[serde(default = "schema_version")]
    pub v: u32,
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default)]
    pub family: Option<String>,
    #[serde(default)]
    pub names: Vec<String>,
}

fn schema_version() -> u32 {
    1
}

/// Iterates the set bits of a `u64`.
#[derive(Debug, Clone, Copy)]
pub struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// A vertex bijection; position `i` holds the image of vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((0..n).collect())
    }

    /// Wraps `mapping` after checking it is a bijection on `0..len`.
    pub fn new(mapping: Vec<usize>) -> Result<Permutation, GraphError> {
        let mut seen = vec![false; mapping.len()];
        for &x in &mapping {
            if x >= mapping.len() || std::mem::replace(&mut seen[x], true) {
                return Err(GraphError::InvalidParams(format!(
                    "{mapping:?} is not a permutation"
                )));
            }
        }
        Ok(Permutation(mapping))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

/// All adjacency-preserving bijections of `g`, capped at [`AUTOMORPHISM_CAP`] vertices.
pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>, GraphError> {
    automorphisms_with_cap(g, AUTOMORPHISM_CAP)
}

/// Backtracking over vertex images, pruned by degree and by adjacency to
/// already-mapped vertices. Output is sorted, identity first.
pub fn automorphisms_with_cap(g: &Graph, cap: usize) -> Result<Vec<Permutation>, GraphError> {
    let n = g.n_vertices();
    if n > cap {
        return Err(GraphError::TooLarge { n, cap });
    }
    let mut out = Vec::new();
    let mut image = vec![usize::MAX; n];
    let mut used = 0u64;
    extend_automorphism(g, 0, &mut image, &mut used, &mut out);
    out.sort();
    Ok(out)
}

fn extend_automorphism(
    g: &Graph,
    v: usize,
    image: &mut [usize],
    used: &mut u64,
    out: &mut Vec<Permutation>,
) {
    let n = g.n_vertices();
    if v == n {
        out.push(Permutation(image.to_vec()));
        return;
    }
    for w in 0..n {
        if *used >> w & 1 == 1 || g.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = (0..v).all(|u| g.is_adjacent(u, v) == g.is_adjacent(image[u], w));
        if !consistent {
            continue;
        }
        image[v] = w;
        *used |= 1 << w;
        extend_automorphism(g, v + 1, image, used, out);
        *used &= !(1 << w);
    }
    image[v] = usize::MAX;
}

/// Builds a member of one of the supported families.
pub fn build_family(spec: &FamilySpec) -> Result<Graph, GraphError> {
    spec.validate()?;
    let (n, _) = spec.expected_size();
    if n > MAX_VERTICES {
        return Err(GraphError::TooLarge {
            n,
            cap: MAX_VERTICES,
        });
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let names: Vec<String> = match *spec {
        FamilySpec::Path { n } => {
            edges.extend((1..n).map(|i| (i - 1, i)));
            indexed("v", n)
        }
        FamilySpec::Cycle { n } => {
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            indexed("v", n)
        }
        FamilySpec::Complete { n } => {
            for u in 0..n {
                edges.extend((u + 1..n).map(|v| (u, v)));
            }
            indexed("v", n)
        }
        FamilySpec::CompleteBipartite { p, q } => {
            for x in 0..p {
                edges.extend((0..q).map(|y| (x, p + y)));
            }
            (0..p)
                .map(|i| format!("x{i}"))
                .chain((0..q).map(|j| format!("y{j}")))
                .collect()
        }
        FamilySpec::Star { q } => {
            edges.extend((1..=q).map(|j| (0, j)));
            std::iter::once("center".to_string())
                .chain((1..=q).map(|j| format!("leaf:{j}")))
                .collect()
        }
        FamilySpec::Caterpillar { ref legs } => {
            let s = legs.len();
            edges.extend((1..s).map(|i| (i - 1, i)));
            let mut nm: Vec<String> = (1..=s).map(|j| format!("spine:{j}")).collect();
            let mut next = s;
            for (j, &k) in legs.iter().enumerate() {
                for t in 1..=k {
                    edges.push((j, next));
                    nm.push(format!("leaf:{}:{t}", j + 1));
                    next += 1;
                }
            }
            nm
        }
        FamilySpec::Wheel { n } => {
            edges.extend((0..n).map(|j| (j, (j + 1) % n)));
            edges.extend((0..n).map(|j| (j, n)));
            (0..n)
                .map(|j| format!("cycle:{j}"))
                .chain(std::iter::once("center".to_string()))
                .collect()
        }
        FamilySpec::Gear { n } => {
            edges.extend((0..n).map(|j| (j, n)));
            for j in 0..n {
                let w = n + 1 + j;
                edges.push((j, w));
                edges.push(((j + 1) % n, w));
            }
            (0..n)
                .map(|j| format!("cycle:{j}"))
                .chain(std::iter::once("center".to_string()))
                .chain((0..n).map(|j| format!("sub:{j}")))
                .collect()
        }
        FamilySpec::Helm { n } => {
            edges.extend((1..=n).map(|k| (0, k)));
            edges.extend((1..=n).map(|k| (k, k % n + 1)));
            edges.extend((1..=n).map(|k| (k, n + k)));
            std::iter::once("center".to_string())
                .chain((1..=n).map(|k| format!("cycle:{k}")))
                .chain((1..=n).map(|k| format!("pendant:{k}")))
                .collect()
        }
        FamilySpec::Web { t, n } => {
            let at = |layer: usize, k: usize| layer * n + k;
            for k in 1..=n {
                edges.push((k, at(1, k)));
            }
            for layer in 1..=t {
                for k in 1..=n {
                    edges.push((at(layer, k), at(layer, k % n + 1)));
                }
            }
            for layer in 1..t {
                for k in 1..=n {
                    edges.push((at(layer, k), at(layer + 1, k)));
                }
            }
            for k in 1..=n {
                edges.push((at(t, k), 0));
            }
            let mut nm = vec!["center".to_string()];
            nm.extend((1..=n).map(|k| format!("pendant:{k}")));
            for layer in 1..=t {
                nm.extend((1..=n).map(|k| format!("ring{layer}:{k}")));
            }
            nm
        }
        FamilySpec::Hypercube { n } => {
            let size = 1usize << n;
            for u in 0..size {
                for b in 0..n {
                    let v = u ^ (1 << b);
                    if u < v {
                        edges.push((u, v));
                    }
                }
            }
            (0..size).map(|u| format!("q{u:0width$b}", width = n)).collect()
        }
        FamilySpec::Prism { r } => {
            for q in 0..2 {
                edges.extend((0..r).map(|p| (p + q * r, (p + 1) % r + q * r)));
            }
            edges.extend((0..r).map(|p| (p, p + r)));
            (0..2)
                .flat_map(|q| (0..r).map(move |p| format!("v{p},{q}")))
                .collect()
        }
        FamilySpec::PathPower { n, k } => {
            return path_power(n, k);
        }
    };
    Graph::with_names(n, &edges, names, Some(spec.clone()))
}

/// `P_n^k`: vertices `0..n`, `{i, j}` an edge iff `0 < |i - j| <= k`.
pub fn path_power(n: usize, k: usize) -> Result<Graph, GraphError> {
    let spec = FamilySpec::PathPower { n, k };
    spec.validate()?;
    let path = build_family(&FamilySpec::Path { n })?;
    let pow = path.power(k);
    Graph::with_names(n, pow.edges(), pow.names.clone(), Some(spec))
}

fn indexed(prefix: &str, n: usize) -> Vec<String> {
    (0..n).map(|i| format!("{prefix}{i}")).collect()
}
