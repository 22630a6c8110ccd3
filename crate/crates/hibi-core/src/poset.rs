//! Finite posets and the augmented cover graph with a global bottom and top.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::PosetError;

/// Reserved name of the adjoined bottom vertex.
pub const BOT: &str = "bot";
/// Reserved name of the adjoined top vertex.
pub const TOP: &str = "top";

/// Index into the canonical vertex order of a [`HasseHat`].
pub type VertexId = usize;
/// Zero-based index into the canonical edge order of a [`HasseHat`].
/// Edge `i` is reported to users as `e_{i+1}`.
pub type EdgeId = usize;

/// A validated finite poset given by elements and cover relations.
///
/// Immutable after construction: the cover graph is acyclic, transitively
/// reduced, and free of duplicate or reserved names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    elements: Vec<String>,
    /// Cover pairs as element indices, sorted by (lower name, upper name).
    covers: Vec<(usize, usize)>,
}

impl Poset {
    /// Validates and constructs a poset from element names and cover pairs
    /// `(lower, upper)`.
    pub fn new<S: AsRef<str>>(elements: &[S], covers: &[(S, S)]) -> Result<Poset, PosetError> {
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut names: Vec<String> = Vec::with_capacity(elements.len());
        for el in elements {
            let name = el.as_ref();
            if name.is_empty()
                || name == BOT
                || name == TOP
                || name.contains(|c: char| c.is_whitespace() || c == ',' || c == ':')
            {
                return Err(PosetError::ReservedName(name.to_string()));
            }
            if index.insert(name.to_string(), names.len()).is_some() {
                return Err(PosetError::DuplicateElement(name.to_string()));
            }
            names.push(name.to_string());
        }

        let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(covers.len());
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for (lo, hi) in covers {
            let (lo, hi) = (lo.as_ref(), hi.as_ref());
            let li = *index
                .get(lo)
                .ok_or_else(|| PosetError::UnknownElement(lo.to_string()))?;
            let hi_i = *index
                .get(hi)
                .ok_or_else(|| PosetError::UnknownElement(hi.to_string()))?;
            if li == hi_i {
                return Err(PosetError::SelfCover(lo.to_string()));
            }
            if !seen.insert((li, hi_i)) {
                return Err(PosetError::DuplicateCover {
                    lower: lo.to_string(),
                    upper: hi.to_string(),
                });
            }
            pairs.push((li, hi_i));
        }

        // Acyclicity by Kahn's algorithm on the cover digraph.
        let n = names.len();
        let mut indeg = alloc::vec![0usize; n];
        let mut out: Vec<Vec<usize>> = alloc::vec![Vec::new(); n];
        for &(l, u) in &pairs {
            out[l].push(u);
            indeg[u] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut removed = 0usize;
        while let Some(v) = queue.pop() {
            removed += 1;
            for &u in &out[v] {
                indeg[u] -= 1;
                if indeg[u] == 0 {
                    queue.push(u);
                }
            }
        }
        if removed != n {
            let witness = (0..n)
                .find(|&v| indeg[v] > 0)
                .map(|v| names[v].clone())
                .unwrap_or_default();
            return Err(PosetError::CycleDetected(witness));
        }

        // Transitive reduction: a cover may not be implied by a longer chain.
        for &(l, u) in &pairs {
            let mut stack: Vec<usize> = out[l].iter().copied().filter(|&w| w != u).collect();
            let mut visited: BTreeSet<usize> = stack.iter().copied().collect();
            while let Some(w) = stack.pop() {
                if w == u {
                    return Err(PosetError::TransitiveCover {
                        lower: names[l].clone(),
                        upper: names[u].clone(),
                    });
                }
                for &x in &out[w] {
                    if visited.insert(x) {
                        stack.push(x);
                    }
                }
            }
        }

        pairs.sort_by(|a, b| {
            (names[a.0].as_str(), names[a.1].as_str()).cmp(&(names[b.0].as_str(), names[b.1].as_str()))
        });
        Ok(Poset {
            elements: names,
            covers: pairs,
        })
    }

    /// Number of elements `|P|`.
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[String] {
        &self.elements
    }

    /// Cover pairs as `(lower, upper)` names, in canonical order.
    pub fn cover_names(&self) -> impl Iterator<Item = (&str, &str)> {
        self.covers
            .iter()
            .map(move |&(l, u)| (self.elements[l].as_str(), self.elements[u].as_str()))
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }
}

/// An undirected edge of the augmented cover graph, oriented by the order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub lower: VertexId,
    pub upper: VertexId,
}

/// The cover graph of the poset with adjoined `bot` and `top`, with a fixed
/// canonical vertex order and edge indexing.
///
/// Vertices are ordered by (corank, name) where the corank of a vertex is the
/// length of the longest chain from it up to `top`; edges are ordered by
/// (corank of lower endpoint, lower name, upper name). Both orders are pure
/// functions of the input, so every derived result is reproducible.
#[derive(Clone, Debug)]
pub struct HasseHat {
    names: Vec<String>,
    coranks: Vec<usize>,
    heights: Vec<usize>,
    bot: VertexId,
    top: VertexId,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
    /// x-coordinate of each vertex: `bot` is 0, element `i` is `i + 1`,
    /// `top` carries no coordinate.
    coord: Vec<Option<usize>>,
    dim: usize,
}

/// Builds the augmented cover graph of `p`.
pub fn build_hat(p: &Poset) -> HasseHat {
    let n_el = p.size();
    // Provisional ids: 0..n_el elements, n_el = bot, n_el + 1 = top.
    let bot0 = n_el;
    let top0 = n_el + 1;
    let total = n_el + 2;

    let mut up: Vec<Vec<usize>> = alloc::vec![Vec::new(); total];
    let mut down: Vec<Vec<usize>> = alloc::vec![Vec::new(); total];
    for &(l, u) in p.covers() {
        up[l].push(u);
        down[u].push(l);
    }
    for v in 0..n_el {
        if down[v].is_empty() {
            up[bot0].push(v);
            down[v].push(bot0);
        }
        if up[v].is_empty() {
            up[v].push(top0);
            down[top0].push(v);
        }
    }
    if n_el == 0 {
        up[bot0].push(top0);
        down[top0].push(bot0);
    }

    // Longest chain up to top (corank) and down to bot (height), by DFS with
    // memoization on the acyclic up/down graphs.
    fn longest(v: usize, next: &[Vec<usize>], memo: &mut [Option<usize>]) -> usize {
        if let Some(m) = memo[v] {
            return m;
        }
        let best = next[v]
            .iter()
            .map(|&u| 1 + longest(u, next, memo))
            .max()
            .unwrap_or(0);
        memo[v] = Some(best);
        best
    }
    let mut memo_up = alloc::vec![None; total];
    let mut memo_down = alloc::vec![None; total];
    let corank0: Vec<usize> = (0..total).map(|v| longest(v, &up, &mut memo_up)).collect();
    let height0: Vec<usize> = (0..total)
        .map(|v| longest(v, &down, &mut memo_down))
        .collect();

    let name0 = |v: usize| -> &str {
        if v == bot0 {
            BOT
        } else if v == top0 {
            TOP
        } else {
            &p.elements()[v]
        }
    };

    // Canonical vertex order.
    let mut order: Vec<usize> = (0..total).collect();
    order.sort_by(|&a, &b| (corank0[a], name0(a)).cmp(&(corank0[b], name0(b))));
    let mut new_id = alloc::vec![0usize; total];
    for (id, &v0) in order.iter().enumerate() {
        new_id[v0] = id;
    }

    // Canonical edge order.
    let mut raw_edges: Vec<(usize, usize)> = Vec::new();
    for v in 0..total {
        for &u in &up[v] {
            raw_edges.push((v, u));
        }
    }
    raw_edges.sort_by(|&(al, au), &(bl, bu)| {
        (corank0[al], name0(al), name0(au)).cmp(&(corank0[bl], name0(bl), name0(bu)))
    });

    let names: Vec<String> = order.iter().map(|&v0| name0(v0).to_string()).collect();
    let coranks: Vec<usize> = order.iter().map(|&v0| corank0[v0]).collect();
    let heights: Vec<usize> = order.iter().map(|&v0| height0[v0]).collect();
    let coord: Vec<Option<usize>> = order
        .iter()
        .map(|&v0| {
            if v0 == top0 {
                None
            } else if v0 == bot0 {
                Some(0)
            } else {
                Some(v0 + 1)
            }
        })
        .collect();
    let edges: Vec<Edge> = raw_edges
        .iter()
        .map(|&(l, u)| Edge {
            lower: new_id[l],
            upper: new_id[u],
        })
        .collect();

    let mut adj: Vec<Vec<(VertexId, EdgeId)>> = alloc::vec![Vec::new(); total];
    for (e, edge) in edges.iter().enumerate() {
        adj[edge.lower].push((edge.upper, e));
        adj[edge.upper].push((edge.lower, e));
    }
    for list in adj.iter_mut() {
        list.sort_by_key(|&(_, e)| e);
    }

    HasseHat {
        names,
        coranks,
        heights,
        bot: new_id[bot0],
        top: new_id[top0],
        edges,
        adj,
        coord,
        dim: n_el + 1,
    }
}

impl HasseHat {
    /// Dimension `d = |P| + 1`; the tree coordinates live in `R^d`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Total number of edges `n`.
    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.names.len()
    }

    pub fn bot(&self) -> VertexId {
        self.bot
    }

    pub fn top(&self) -> VertexId {
        self.top
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name)
    }

    pub fn corank(&self, v: VertexId) -> usize {
        self.coranks[v]
    }

    pub fn height(&self, v: VertexId) -> usize {
        self.heights[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Neighbors of `v` with the joining edge, in canonical edge order.
    pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
        &self.adj[v]
    }

    /// Looks up the edge with the given endpoints, in either order.
    pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
        self.adj[a].iter().find(|&&(u, _)| u == b).map(|&(_, e)| e)
    }

    pub fn is_edge(&self, a: VertexId, b: VertexId) -> bool {
        self.edge_between(a, b).is_some()
    }

    /// Resolves an edge given its endpoint names, in either order.
    pub fn edge_by_names(&self, a: &str, b: &str) -> Option<EdgeId> {
        let va = self.vertex_by_name(a)?;
        let vb = self.vertex_by_name(b)?;
        self.edge_between(va, vb)
    }

    /// Human-readable edge label `lower:upper`.
    pub fn edge_label(&self, e: EdgeId) -> String {
        let edge = self.edges[e];
        alloc::format!(
            "{}:{}",
            self.names[edge.lower],
            self.names[edge.upper]
        )
    }

    /// The linear form attached to an edge, as a vector of length `dim` over
    /// the coordinates (bot, elements...): `x_lower - x_upper`, where `top`
    /// contributes nothing.
    pub fn sigma(&self, e: EdgeId) -> Vec<i64> {
        let mut v = alloc::vec![0i64; self.dim];
        let edge = self.edges[e];
        if let Some(c) = self.coord[edge.lower] {
            v[c] += 1;
        }
        if let Some(c) = self.coord[edge.upper] {
            v[c] -= 1;
        }
        v
    }
}

/// True when all maximal chains of the augmented graph from `bot` to `top`
/// have the same length; equivalently the graph is graded by height.
pub fn is_pure(p: &Poset) -> bool {
    let hat = build_hat(p);
    hat.edges()
        .iter()
        .all(|e| hat.height(e.upper) == hat.height(e.lower) + 1)
}
