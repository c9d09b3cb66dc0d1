//! Undirected simple graphs on dense vertex ids and per-endpoint port labelings.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::hash::{Hash, Hasher};
use std::iter::FusedIterator;
use std::slice;

use crate::error::{Error, Result};

/// Undirected simple graph on vertices `0..n`.
///
/// Neighbors of every vertex are kept sorted ascending. A `Graph` is
/// immutable once built; construction validates symmetry and loop-freedom.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adjacency: Adjacency,
}

#[derive(Clone, Debug)]
enum Adjacency {
    /// The neighbors of `u` are `neighbors[offsets[u]..offsets[u + 1]]`.
    Lists {
        offsets: Vec<usize>,
        neighbors: Vec<usize>,
    },
    /// `u` is adjacent to `u + s mod n` for each of the `m` sorted steps `s`.
    /// `window` holds `[s - n for s in steps] ++ steps` in wrapping
    /// arithmetic, so the sorted neighbors of `u` are a length-`m` slice of
    /// it shifted by `u`.
    Circulant { window: Vec<usize>, m: usize },
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut seen = BTreeSet::new();
        let mut degree = vec![0usize; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::DuplicateEdge(u, v));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        // Edges come out of the set in lexicographic order, so filling each
        // row in that order leaves it sorted: the smaller partners of `u`
        // arrive (as first endpoints) before its larger ones.
        let mut fill = offsets.clone();
        let mut neighbors = vec![0; offsets[n]];
        for &(u, v) in &seen {
            neighbors[fill[u]] = v;
            fill[u] += 1;
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        let g = Graph {
            n,
            adjacency: Adjacency::Lists { offsets, neighbors },
        };
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    /// The graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    /// The circulant on `n` vertices with the given steps, which must be
    /// sorted, distinct, in `[1, n - 1]` and closed under `s -> n - s`.
    pub(crate) fn circulant(n: usize, steps: impl Iterator<Item = usize> + Clone) -> Self {
        let mut window: Vec<usize> = steps.clone().map(|s| s.wrapping_sub(n)).collect();
        let m = window.len();
        window.extend(steps);
        Graph {
            n,
            adjacency: Adjacency::Circulant { window, m },
        }
    }

    fn check_invariants(&self) -> bool {
        (0..self.n()).all(|u| {
            let nb: Vec<usize> = self.neighbors(u).collect();
            nb.windows(2).all(|w| w[0] < w[1])
                && nb.iter().all(|&v| v != u && v < self.n() && self.has_edge(v, u))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        match &self.adjacency {
            Adjacency::Lists { neighbors, .. } => neighbors.len() / 2,
            Adjacency::Circulant { m, .. } => self.n * m / 2,
        }
    }

    /// Neighbors of `u`, ascending.
    pub fn neighbors(&self, u: usize) -> Neighbors<'_> {
        match &self.adjacency {
            Adjacency::Lists { offsets, neighbors } => Neighbors {
                inner: neighbors[offsets[u]..offsets[u + 1]].iter(),
                shift: 0,
            },
            Adjacency::Circulant { window, m } => {
                assert!(u < self.n, "vertex {u} out of range");
                // Steps s >= n - u wrap around and come first.
                let steps = &window[*m..];
                let start = steps.partition_point(|&s| s < self.n - u);
                Neighbors {
                    inner: window[start..start + m].iter(),
                    shift: u,
                }
            }
        }
    }

    pub fn degree(&self, u: usize) -> usize {
        match &self.adjacency {
            Adjacency::Lists { offsets, .. } => offsets[u + 1] - offsets[u],
            Adjacency::Circulant { m, .. } => {
                assert!(u < self.n, "vertex {u} out of range");
                *m
            }
        }
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let n = self.n;
        if u >= n || v >= n {
            return false;
        }
        match &self.adjacency {
            Adjacency::Lists { offsets, neighbors } => neighbors[offsets[u]..offsets[u + 1]]
                .binary_search(&v)
                .is_ok(),
            Adjacency::Circulant { window, m } => {
                window[*m..].binary_search(&((v + n - u) % n)).is_ok()
            }
        }
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n()).all(|u| self.degree(u) == k).then_some(k)
    }

    /// Connected components, each sorted ascending, listed by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut components = Vec::new();
        let mut queue = VecDeque::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut component = Vec::new();
            while let Some(u) = queue.pop_front() {
                component.push(u);
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        queue.push_back(v);
                    }
                }
            }
            component.sort_unstable();
            components.push(component);
        }
        components
    }

    pub fn component_count(&self) -> usize {
        self.connected_components().len()
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        // Every vertex enters the stack at most once, so a fixed buffer of n
        // slots suffices and the inner loop can run without branches. One
        // allocation holds both the stack and the seen flags.
        let mut buf = vec![0usize; 2 * n];
        let (stack, seen) = buf.split_at_mut(n);
        seen[0] = 1;
        let mut top = 1;
        let mut reached = 1;
        while reached < n && top > 0 {
            top -= 1;
            let u = stack[top];
            for v in self.neighbors(u) {
                let new = seen[v] == 0;
                seen[v] = 1;
                stack[top] = v;
                top += usize::from(new);
                reached += usize::from(new);
            }
        }
        reached == n
    }

    /// Row-major 0/1 adjacency matrix in natural vertex order.
    pub fn adjacency_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut mat = vec![vec![0u8; n]; n];
        for (u, v) in self.edges() {
            mat[u][v] = 1;
            mat[v][u] = 1;
        }
        mat
    }

    /// Relabels vertex `u` as `perm[u]`. `perm` must be a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph> {
        check_permutation(perm, self.n())?;
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n(), &edges)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.edge_count() == other.edge_count()
            && (0..self.n).all(|u| self.neighbors(u).eq(other.neighbors(u)))
    }
}

impl Eq for Graph {}

impl Hash for Graph {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        for u in 0..self.n {
            state.write_usize(self.degree(u));
            self.neighbors(u).for_each(|v| state.write_usize(v));
        }
    }
}

/// Iterator over the neighbors of one vertex, ascending.
#[derive(Clone, Debug)]
pub struct Neighbors<'a> {
    inner: slice::Iter<'a, usize>,
    shift: usize,
}

impl Iterator for Neighbors<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        self.inner.next().map(|&t| t.wrapping_add(self.shift))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        self.inner.size_hint()
    }
}

impl DoubleEndedIterator for Neighbors<'_> {
    fn next_back(&mut self) -> Option<usize> {
        self.inner.next_back().map(|&t| t.wrapping_add(self.shift))
    }
}

impl ExactSizeIterator for Neighbors<'_> {}

impl FusedIterator for Neighbors<'_> {}

pub(crate) fn check_permutation(perm: &[usize], n: usize) -> Result<()> {
    let mut hit = vec![false; n];
    if perm.len() != n {
        return Err(Error::InvalidOrdering(n));
    }
    for &p in perm {
        if p >= n || std::mem::replace(&mut hit[p], true) {
            return Err(Error::InvalidOrdering(n));
        }
    }
    Ok(())
}

/// Edge labels per endpoint: `label(u, v)` is the label of edge `uv` at `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortLabeling {
    n: usize,
    labels: BTreeMap<(usize, usize), usize>,
}

impl PortLabeling {
    /// Builds a labeling from `(u, v, label)` port entries. Labels must lie in
    /// `[1, n - 1]` and each directed pair may appear once.
    pub fn new(n: usize, ports: impl IntoIterator<Item = (usize, usize, usize)>) -> Result<Self> {
        let mut labels = BTreeMap::new();
        for (u, v, label) in ports {
            if label == 0 || label >= n {
                return Err(Error::InvalidLabel { n, label });
            }
            if labels.insert((u, v), label).is_some() {
                return Err(Error::DuplicateEdge(u, v));
            }
        }
        Ok(PortLabeling { n, labels })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, u: usize, v: usize) -> Option<usize> {
        self.labels.get(&(u, v)).copied()
    }

    /// All `(u, v, label)` ports in lexicographic `(u, v)` order.
    pub fn ports(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.labels.iter().map(|(&(u, v), &l)| (u, v, l))
    }

    /// Distinct labels used, ascending.
    pub fn distinct_labels(&self) -> BTreeSet<usize> {
        self.labels.values().copied().collect()
    }

    /// Checks that the labeling covers both orientations of every edge of `g`
    /// and nothing else.
    pub fn check_against(&self, g: &Graph) -> Result<()> {
        if self.n != g.n() {
            return Err(Error::LabelingMismatch(format!(
                "labeling is over {} vertices, graph has {}",
                self.n,
                g.n()
            )));
        }
        if self.labels.len() != 2 * g.edge_count() {
            return Err(Error::LabelingMismatch(format!(
                "{} ports labeled, graph has {}",
                self.labels.len(),
                2 * g.edge_count()
            )));
        }
        for (u, v) in g.edges() {
            for (a, b) in [(u, v), (v, u)] {
                if !self.labels.contains_key(&(a, b)) {
                    return Err(Error::LabelingMismatch(format!(
                        "port ({a}, {b}) is unlabeled"
                    )));
                }
            }
        }
        Ok(())
    }
}
