//! Spanning trees, fundamental cycles, and chordless circuits of the
//! augmented cover graph.

use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::TreeError;
use crate::poset::{EdgeId, HasseHat, VertexId};

/// A spanning tree of the augmented cover graph.
///
/// The tree has exactly `dim` edges over `dim + 1` vertices. The remaining
/// edges ("cotree" edges) index the class-group coordinates, in ascending
/// canonical edge order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTree {
    tree_edges: Vec<EdgeId>,
    cotree_edges: Vec<EdgeId>,
    in_tree: Vec<bool>,
}

impl SpanningTree {
    /// Tree edges in ascending canonical order; position `i` is the slot of
    /// the `i`-th cell coordinate.
    pub fn tree_edges(&self) -> &[EdgeId] {
        &self.tree_edges
    }

    /// Cotree edges in ascending canonical order; position `j` is the slot of
    /// the `j`-th class coordinate.
    pub fn cotree_edges(&self) -> &[EdgeId] {
        &self.cotree_edges
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.in_tree[e]
    }

    /// Cell-coordinate slot of a tree edge.
    pub fn slot(&self, e: EdgeId) -> Option<usize> {
        if self.in_tree[e] {
            self.tree_edges.binary_search(&e).ok()
        } else {
            None
        }
    }
}

/// Validates a requested spanning tree, or constructs the default one: the
/// breadth-first tree from `bot` under the canonical edge order.
pub fn choose_spanning_tree(
    hat: &HasseHat,
    requested: Option<&[EdgeId]>,
) -> Result<SpanningTree, TreeError> {
    let d = hat.dim();
    let nv = hat.num_vertices();
    let edges = match requested {
        Some(req) => {
            let set: BTreeSet<EdgeId> = req.iter().copied().collect();
            if set.len() != d || req.len() != d {
                return Err(TreeError::WrongSize {
                    expected: d,
                    got: req.len(),
                });
            }
            if let Some(&bad) = req.iter().find(|&&e| e >= hat.num_edges()) {
                return Err(TreeError::UnknownEdge(bad.to_string()));
            }
            // Union-find over vertices: d edges on d + 1 vertices form a
            // spanning tree exactly when they are acyclic.
            let mut parent: Vec<usize> = (0..nv).collect();
            fn find(parent: &mut [usize], mut v: usize) -> usize {
                while parent[v] != v {
                    parent[v] = parent[parent[v]];
                    v = parent[v];
                }
                v
            }
            for &e in &set {
                let edge = hat.edges()[e];
                let (a, b) = (find(&mut parent, edge.lower), find(&mut parent, edge.upper));
                if a == b {
                    return Err(TreeError::HasCycle);
                }
                parent[a] = b;
            }
            let root = find(&mut parent, 0);
            if (0..nv).any(|v| find(&mut parent, v) != root) {
                return Err(TreeError::NotSpanning);
            }
            set.into_iter().collect::<Vec<_>>()
        }
        None => {
            let mut visited = alloc::vec![false; nv];
            let mut tree = Vec::with_capacity(d);
            let mut queue = alloc::vec![hat.bot()];
            visited[hat.bot()] = true;
            let mut head = 0;
            while head < queue.len() {
                let v = queue[head];
                head += 1;
                for &(u, e) in hat.neighbors(v) {
                    if !visited[u] {
                        visited[u] = true;
                        tree.push(e);
                        queue.push(u);
                    }
                }
            }
            debug_assert_eq!(tree.len(), d);
            tree.sort_unstable();
            tree
        }
    };

    let mut in_tree = alloc::vec![false; hat.num_edges()];
    for &e in &edges {
        in_tree[e] = true;
    }
    let cotree: Vec<EdgeId> = (0..hat.num_edges()).filter(|&e| !in_tree[e]).collect();
    Ok(SpanningTree {
        tree_edges: edges,
        cotree_edges: cotree,
        in_tree,
    })
}

/// The unique cycle formed by a cotree edge and the tree path between its
/// endpoints, oriented so the cotree edge is traversed upward last.
///
/// Stored as the vertex sequence starting at the upper endpoint of the cotree
/// edge and ending at its lower endpoint; `y_plus`/`y_minus` split the tree
/// edges of the cycle by traversal direction (with, respectively, against the
/// order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalCycle {
    pub cotree_edge: EdgeId,
    pub vertices: Vec<VertexId>,
    pub y_plus: Vec<EdgeId>,
    pub y_minus: Vec<EdgeId>,
}

/// Computes the fundamental cycle of one cotree edge.
pub fn fundamental_cycle(hat: &HasseHat, tree: &SpanningTree, cotree_edge: EdgeId) -> FundamentalCycle {
    debug_assert!(!tree.contains(cotree_edge));
    let edge = hat.edges()[cotree_edge];
    // Tree path from the upper endpoint down to the lower endpoint.
    let path = tree_path(hat, tree, edge.upper, edge.lower);
    let mut y_plus = Vec::new();
    let mut y_minus = Vec::new();
    for pair in path.windows(2) {
        let e = hat
            .edge_between(pair[0], pair[1])
            .expect("consecutive path vertices are adjacent");
        if hat.edges()[e].lower == pair[0] {
            y_plus.push(e);
        } else {
            y_minus.push(e);
        }
    }
    FundamentalCycle {
        cotree_edge,
        vertices: path,
        y_plus,
        y_minus,
    }
}

/// Fundamental cycles of every cotree edge, in class-coordinate order.
pub fn fundamental_cycles(hat: &HasseHat, tree: &SpanningTree) -> Vec<FundamentalCycle> {
    tree.cotree_edges()
        .iter()
        .map(|&e| fundamental_cycle(hat, tree, e))
        .collect()
}

fn tree_path(hat: &HasseHat, tree: &SpanningTree, from: VertexId, to: VertexId) -> Vec<VertexId> {
    let nv = hat.num_vertices();
    let mut prev: Vec<Option<VertexId>> = alloc::vec![None; nv];
    let mut visited = alloc::vec![false; nv];
    visited[from] = true;
    let mut queue = alloc::vec![from];
    let mut head = 0;
    while head < queue.len() {
        let v = queue[head];
        head += 1;
        if v == to {
            break;
        }
        for &(u, e) in hat.neighbors(v) {
            if tree.contains(e) && !visited[u] {
                visited[u] = true;
                prev[u] = Some(v);
                queue.push(u);
            }
        }
    }
    let mut path = alloc::vec![to];
    let mut cur = to;
    while let Some(p) = prev[cur] {
        path.push(p);
        cur = p;
    }
    debug_assert_eq!(*path.last().unwrap(), from);
    path.reverse();
    path
}

/// A chordless cycle of the augmented cover graph in canonical form: the
/// smallest vertex first, direction fixed so the second vertex is smaller
/// than the last.
///
/// `x_plus`/`x_minus` split all cycle edges by traversal direction; the
/// restriction to cotree edges depends on a tree and is computed on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    pub vertices: Vec<VertexId>,
    pub x_plus: Vec<EdgeId>,
    pub x_minus: Vec<EdgeId>,
}

impl Circuit {
    /// Restriction of the edge partition to cotree edges.
    pub fn z_partition(&self, tree: &SpanningTree) -> (Vec<EdgeId>, Vec<EdgeId>) {
        let zp = self
            .x_plus
            .iter()
            .copied()
            .filter(|&e| !tree.contains(e))
            .collect();
        let zm = self
            .x_minus
            .iter()
            .copied()
            .filter(|&e| !tree.contains(e))
            .collect();
        (zp, zm)
    }
}

/// Enumerates all chordless cycles of the graph, each exactly once up to
/// rotation and reflection.
///
/// Depth-first chordless-path extension: paths grow from their minimal
/// vertex, interior vertices are kept non-adjacent to everything but their
/// path neighbors, and closures are only taken back to the start. Reflections
/// are ruled out by requiring the second vertex to be smaller than the last.
pub fn enumerate_circuits(hat: &HasseHat) -> Vec<Circuit> {
    let nv = hat.num_vertices();
    let mut out: Vec<Circuit> = Vec::new();
    let mut path: Vec<VertexId> = Vec::new();
    let mut on_path = alloc::vec![false; nv];
    for s in 0..nv {
        path.clear();
        path.push(s);
        on_path.fill(false);
        on_path[s] = true;
        extend(hat, s, &mut path, &mut on_path, &mut out);
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

fn extend(
    hat: &HasseHat,
    start: VertexId,
    path: &mut Vec<VertexId>,
    on_path: &mut [bool],
    out: &mut Vec<Circuit>,
) {
    let last = *path.last().unwrap();
    for &(u, _) in hat.neighbors(last) {
        if u <= start || on_path[u] {
            continue;
        }
        // A chord from u back into the path interior rules out this vertex
        // for every cycle extending the current path.
        let interior = &path[1..path.len().saturating_sub(1).max(1)];
        if interior.iter().any(|&v| hat.is_edge(u, v)) {
            continue;
        }
        if path.len() >= 2 && hat.is_edge(u, start) {
            // u closes a cycle back to the start; longer paths through u
            // would carry that edge as a chord, so emit and stop here.
            if path.len() + 1 >= 4 && path[1] < u {
                path.push(u);
                out.push(make_circuit(hat, path));
                path.pop();
            }
            continue;
        }
        path.push(u);
        on_path[u] = true;
        extend(hat, start, path, on_path, out);
        path.pop();
        on_path[u] = false;
    }
}

fn make_circuit(hat: &HasseHat, vertices: &[VertexId]) -> Circuit {
    let mut x_plus = Vec::new();
    let mut x_minus = Vec::new();
    let m = vertices.len();
    for i in 0..m {
        let (a, b) = (vertices[i], vertices[(i + 1) % m]);
        let e = hat.edge_between(a, b).expect("cycle edge");
        if hat.edges()[e].lower == a {
            x_plus.push(e);
        } else {
            x_minus.push(e);
        }
    }
    Circuit {
        vertices: vertices.to_vec(),
        x_plus,
        x_minus,
    }
}
