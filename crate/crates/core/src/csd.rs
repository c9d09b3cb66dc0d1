//! Local orientations and chordal senses of direction.
//!
//! A cyclic ordering assigns every vertex a rank in `0..n`; the chordal
//! labeling it induces labels edge `uv` at `u` with `rank(v) - rank(u) mod n`.
//! The labeling is minimal when a `k`-regular graph uses exactly `k` labels.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{check_permutation, Graph, PortLabeling};

/// Bijection from vertex ids onto ranks `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclicOrdering {
    rank: Vec<usize>,
    vertex: Vec<usize>,
}

impl CyclicOrdering {
    pub fn new(rank: Vec<usize>) -> Result<Self> {
        check_permutation(&rank, rank.len())?;
        let mut vertex = vec![0; rank.len()];
        for (u, &r) in rank.iter().enumerate() {
            vertex[r] = u;
        }
        Ok(CyclicOrdering { rank, vertex })
    }

    pub fn identity(n: usize) -> Self {
        let rank: Vec<usize> = (0..n).collect();
        CyclicOrdering {
            vertex: rank.clone(),
            rank,
        }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    pub fn rank(&self, u: usize) -> usize {
        self.rank[u]
    }

    /// Vertex holding rank `r`.
    pub fn vertex_at(&self, r: usize) -> usize {
        self.vertex[r]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Adds `shift` to every rank, modulo `n`.
    pub fn rotated(&self, shift: usize) -> Self {
        let n = self.len();
        let rank = self.rank.iter().map(|&r| (r + shift) % n).collect();
        CyclicOrdering::new(rank).expect("rotation of a bijection")
    }

    /// Rotation that gives vertex 0 rank 0.
    pub fn normalized(&self) -> Self {
        if self.is_empty() {
            return self.clone();
        }
        let n = self.len();
        self.rotated((n - self.rank[0]) % n)
    }
}

/// Unordered label pairs `{l, n - l}` found on the edges of a chordal labeling.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelPairStructure {
    /// Pairs as `(min, max)`.
    pub pairs: BTreeSet<(usize, usize)>,
    /// Whether the pair `{n/2, n/2}` occurs.
    pub self_symmetric: bool,
}

impl LabelPairStructure {
    /// Pairs with two distinct labels.
    pub fn two_element_pairs(&self) -> usize {
        self.pairs.iter().filter(|(a, b)| a != b).count()
    }
}

/// Symmetry function: the far-end label of an edge whose near-end label is `gamma`.
pub fn psi(n: usize, gamma: usize) -> Result<usize> {
    if gamma == 0 || gamma >= n {
        return Err(Error::InvalidLabel { n, label: gamma });
    }
    Ok(n - gamma)
}

pub fn is_local_orientation(g: &Graph, lab: &PortLabeling) -> Result<bool> {
    lab.check_against(g)?;
    Ok((0..g.n()).all(|u| {
        let near: BTreeSet<_> = g.neighbors(u).map(|v| lab.label(u, v)).collect();
        near.len() == g.degree(u)
    }))
}

/// Chordal labeling induced by `ord`.
///
/// # Panics
/// If `ord` does not cover exactly the vertices of `g`.
pub fn induced_labeling(g: &Graph, ord: &CyclicOrdering) -> PortLabeling {
    let n = g.n();
    assert_eq!(ord.len(), n, "ordering and graph sizes differ");
    let ports = g.edges().flat_map(|(u, v)| {
        let (ru, rv) = (ord.rank(u), ord.rank(v));
        [(u, v, (rv + n - ru) % n), (v, u, (ru + n - rv) % n)]
    });
    PortLabeling::new(n, ports).expect("distinct ranks give labels in [1, n-1]")
}

/// True iff `lab` is exactly the labeling induced by `ord`.
pub fn verify_csd(g: &Graph, lab: &PortLabeling, ord: &CyclicOrdering) -> Result<bool> {
    lab.check_against(g)?;
    if ord.len() != g.n() {
        return Err(Error::InvalidOrdering(g.n()));
    }
    let n = g.n();
    Ok(g.edges().all(|(u, v)| {
        let (ru, rv) = (ord.rank(u), ord.rank(v));
        lab.label(u, v) == Some((rv + n - ru) % n) && lab.label(v, u) == Some((ru + n - rv) % n)
    }))
}

/// Recovers a cyclic ordering under which `lab` is chordal.
///
/// Ranks are propagated along edges inside each component, which fixes them
/// up to a per-component offset; offsets are then chosen by backtracking so
/// that the components tile `0..n`. Vertex 0 always receives rank 0.
pub fn recover_ordering(g: &Graph, lab: &PortLabeling) -> Result<CyclicOrdering> {
    lab.check_against(g)?;
    let n = g.n();
    let mut rel: Vec<Option<usize>> = vec![None; n];
    let mut shapes: Vec<Vec<(usize, usize)>> = Vec::new();
    let mut queue = VecDeque::new();

    for comp in g.connected_components() {
        let root = comp[0];
        rel[root] = Some(0);
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            let ru = rel[u].expect("queued vertices are ranked");
            for v in g.neighbors(u) {
                let out = lab.label(u, v).expect("checked");
                let back = lab.label(v, u).expect("checked");
                if !(out + back).is_multiple_of(n) {
                    return Err(Error::NotACsd(format!(
                        "edge {u}-{v} carries labels {out} and {back}, which do not sum to {n}"
                    )));
                }
                let rv = (ru + out) % n;
                match rel[v] {
                    None => {
                        rel[v] = Some(rv);
                        queue.push_back(v);
                    }
                    Some(r) if r != rv => {
                        return Err(Error::NotACsd(format!(
                            "vertex {v} is forced to ranks {r} and {rv}"
                        )));
                    }
                    Some(_) => {}
                }
            }
        }
        let mut taken = vec![false; n];
        let mut shape = Vec::with_capacity(comp.len());
        for &u in &comp {
            let r = rel[u].expect("component fully ranked");
            if std::mem::replace(&mut taken[r], true) {
                return Err(Error::NotACsd(format!(
                    "two vertices of the component of {root} share relative rank {r}"
                )));
            }
            shape.push((u, r));
        }
        shapes.push(shape);
    }

    let mut offsets = vec![0usize; shapes.len()];
    let mut occupied = vec![false; n];
    if !place_components(&shapes, 0, &mut offsets, &mut occupied) {
        return Err(Error::NotACsd(
            "component rank patterns cannot be arranged on one cycle".into(),
        ));
    }
    let mut rank = vec![0usize; n];
    for (shape, &off) in shapes.iter().zip(&offsets) {
        for &(u, r) in shape {
            rank[u] = (r + off) % n;
        }
    }
    let ord = CyclicOrdering::new(rank).expect("tiling gives a bijection");
    debug_assert!(verify_csd(g, lab, &ord).unwrap_or(false));
    Ok(ord)
}

fn same_pattern(a: &[(usize, usize)], b: &[(usize, usize)]) -> bool {
    a.len() == b.len() && {
        let pa: BTreeSet<_> = a.iter().map(|&(_, r)| r).collect();
        let pb: BTreeSet<_> = b.iter().map(|&(_, r)| r).collect();
        pa == pb
    }
}

fn place_components(
    shapes: &[Vec<(usize, usize)>],
    i: usize,
    offsets: &mut [usize],
    occupied: &mut [bool],
) -> bool {
    if i == shapes.len() {
        return true;
    }
    let n = occupied.len();
    // Component 0 is pinned so vertex 0 gets rank 0. Consecutive components
    // with identical patterns are interchangeable, so their offsets increase.
    let range = if i == 0 {
        0..1
    } else if same_pattern(&shapes[i - 1], &shapes[i]) {
        offsets[i - 1] + 1..n
    } else {
        0..n
    };
    for off in range {
        if shapes[i].iter().any(|&(_, r)| occupied[(r + off) % n]) {
            continue;
        }
        for &(_, r) in &shapes[i] {
            occupied[(r + off) % n] = true;
        }
        offsets[i] = off;
        if place_components(shapes, i + 1, offsets, occupied) {
            return true;
        }
        for &(_, r) in &shapes[i] {
            occupied[(r + off) % n] = false;
        }
    }
    false
}

/// Checks that `lab` is a minimal chordal sense of direction of `g`, returning
/// the degree. Failures other than a graph/labeling mismatch are reported as
/// [`Error::NotAnMcsd`] with the reason.
pub fn check_mcsd(g: &Graph, lab: &PortLabeling) -> Result<usize> {
    lab.check_against(g)?;
    let k = g
        .regular_degree()
        .ok_or_else(|| Error::NotAnMcsd("graph is not regular".into()))?;
    if !is_local_orientation(g, lab)? {
        return Err(Error::NotAnMcsd(
            "labeling is not a local orientation".into(),
        ));
    }
    recover_ordering(g, lab).map_err(|e| Error::NotAnMcsd(e.to_string()))?;
    let used = lab.distinct_labels().len();
    if used != k {
        return Err(Error::NotAnMcsd(format!(
            "{used} distinct labels used on a {k}-regular graph"
        )));
    }
    Ok(k)
}

pub fn is_mcsd(g: &Graph, lab: &PortLabeling) -> Result<bool> {
    match check_mcsd(g, lab) {
        Ok(_) => Ok(true),
        Err(Error::NotAnMcsd(_)) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn label_pair_structure(g: &Graph, lab: &PortLabeling) -> Result<LabelPairStructure> {
    recover_ordering(g, lab)?;
    let n = g.n();
    let mut out = LabelPairStructure::default();
    for (u, v) in g.edges() {
        let a = lab.label(u, v).expect("checked");
        let b = lab.label(v, u).expect("checked");
        out.pairs.insert((a.min(b), a.max(b)));
        if 2 * a == n {
            out.self_symmetric = true;
        }
    }
    Ok(out)
}
