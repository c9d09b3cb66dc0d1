//! Deciding whether a regular graph is circulant, equivalently whether it
//! admits a minimal chordal sense of direction.
//!
//! Every reduced label set of the right degree is a candidate; the graph is
//! circulant iff it is isomorphic to the circulant built from some
//! candidate. Candidates proportional to one already rejected are skipped,
//! which is sound because proportional sets build isomorphic graphs.

use std::collections::BTreeMap;

use itertools::Itertools;
use rayon::prelude::*;

use crate::circulant::{circulant_graph, ReducedLabelSet};
use crate::csd::{check_mcsd, induced_labeling, CyclicOrdering};
use crate::equivalence::canonicalize;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count accepted by [`oracle_mcsd`].
pub const ORACLE_MAX_N: usize = 9;

/// Certificate that a graph is circulant: under `ordering`, the induced
/// chordal labeling is minimal and reduces to `labels`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub ordering: CyclicOrdering,
    pub labels: ReducedLabelSet,
}

impl Witness {
    pub fn check(&self, g: &Graph) -> Result<()> {
        if self.ordering.len() != g.n() || self.labels.n() != g.n() {
            return Err(Error::InvalidOrdering(g.n()));
        }
        let lab = induced_labeling(g, &self.ordering);
        check_mcsd(g, &lab)?;
        let reduced = ReducedLabelSet::from_full_labels(g.n(), lab.distinct_labels())?;
        if reduced != self.labels {
            return Err(Error::NotAnMcsd(format!(
                "ordering induces {reduced}, witness claims {}",
                self.labels
            )));
        }
        Ok(())
    }
}

/// Vertex bijection `G -> H` preserving adjacency both ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoMapping {
    map: Vec<usize>,
}

impl IsoMapping {
    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, u: usize) -> usize {
        self.map[u]
    }

    pub fn is_isomorphism(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.n();
        if h.n() != n || self.map.len() != n || g.edge_count() != h.edge_count() {
            return false;
        }
        let mut hit = vec![false; n];
        if self
            .map
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut hit[v], true))
        {
            return false;
        }
        g.edges().all(|(u, v)| h.has_edge(self.map[u], self.map[v]))
    }
}

/// Reduced label sets of degree `k` at modulus `n`, in lexicographic order.
/// With `dedup`, only the canonical member of each proportionality class is
/// produced.
pub fn enumerate_candidates(
    n: usize,
    k: usize,
    dedup: bool,
) -> Result<impl Iterator<Item = ReducedLabelSet>> {
    if n < 3 {
        return Err(Error::Infeasible(format!("n = {n} is below 3")));
    }
    if k >= n {
        return Err(Error::Infeasible(format!(
            "degree {k} needs more than {n} vertices"
        )));
    }
    if k % 2 == 1 && n % 2 == 1 {
        return Err(Error::Infeasible(format!(
            "odd degree {k} with odd n = {n}"
        )));
    }
    let below_half = n.div_ceil(2) - 1;
    let half = (k % 2 == 1).then_some(n / 2);
    Ok((1..=below_half)
        .combinations(k / 2)
        .map(move |mut gammas| {
            gammas.extend(half);
            ReducedLabelSet::new(n, gammas).expect("labels in range")
        })
        .filter(move |ls| !dedup || canonicalize(ls) == *ls))
}

// ---------------------------------------------------------------------------
// Isomorphism: invariant prefilter, then individualization and refinement.
// ---------------------------------------------------------------------------

fn vertex_invariants(g: &Graph) -> Vec<(usize, Vec<usize>, usize)> {
    (0..g.n())
        .map(|u| {
            let nb: Vec<usize> = g.neighbors(u).collect();
            let mut degs: Vec<usize> = nb.iter().map(|&v| g.degree(v)).collect();
            degs.sort_unstable();
            let triangles = nb
                .iter()
                .enumerate()
                .map(|(i, &v)| nb[i + 1..].iter().filter(|&&w| g.has_edge(v, w)).count())
                .sum();
            (g.degree(u), degs, triangles)
        })
        .collect()
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

fn color_count(colors: &[usize]) -> usize {
    histogram(colors).len()
}

/// Joint colour refinement of both graphs until stable. Returns `None` as soon
/// as the colour histograms differ.
fn refine(
    g: &Graph,
    h: &Graph,
    mut cg: Vec<usize>,
    mut ch: Vec<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let signature = |graph: &Graph, colors: &[usize], u: usize| {
        let mut nb: Vec<usize> = graph.neighbors(u).map(|v| colors[v]).collect();
        nb.sort_unstable();
        (colors[u], nb)
    };
    let mut classes = color_count(&cg);
    loop {
        if histogram(&cg) != histogram(&ch) {
            return None;
        }
        let sg: Vec<_> = (0..g.n()).map(|u| signature(g, &cg, u)).collect();
        let sh: Vec<_> = (0..h.n()).map(|u| signature(h, &ch, u)).collect();
        let mut ids = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = ids.len();
            ids.entry(s).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| ids[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| ids[s]).collect();
        let next_classes = color_count(&ng);
        cg = ng;
        ch = nh;
        if next_classes == classes {
            return (histogram(&cg) == histogram(&ch)).then_some((cg, ch));
        }
        classes = next_classes;
    }
}

fn search(g: &Graph, h: &Graph, cg: Vec<usize>, ch: Vec<usize>) -> Option<Vec<usize>> {
    let n = g.n();
    let hist = histogram(&cg);
    let Some(u) = (0..n).find(|&u| hist[&cg[u]] > 1) else {
        let mut by_color = BTreeMap::new();
        for (v, &c) in ch.iter().enumerate() {
            by_color.insert(c, v);
        }
        let map: Vec<usize> = cg.iter().map(|c| by_color[c]).collect();
        return g
            .edges()
            .all(|(a, b)| h.has_edge(map[a], map[b]))
            .then_some(map);
    };
    let fresh = cg.iter().chain(&ch).max().map_or(0, |m| m + 1);
    for v in (0..n).filter(|&v| ch[v] == cg[u]) {
        let mut cg2 = cg.clone();
        let mut ch2 = ch.clone();
        cg2[u] = fresh;
        ch2[v] = fresh;
        if let Some((cg2, ch2)) = refine(g, h, cg2, ch2) {
            if let Some(map) = search(g, h, cg2, ch2) {
                return Some(map);
            }
        }
    }
    None
}

/// An isomorphism `g -> h`, if one exists. Vertices of `g` are individualized
/// in ascending order and their candidate images tried ascending, so the
/// result is the lexicographically least isomorphism.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<IsoMapping> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    let ig = vertex_invariants(g);
    let ih = vertex_invariants(h);
    let mut keys: Vec<_> = ig.iter().chain(&ih).collect();
    keys.sort();
    keys.dedup();
    let color = |inv: &(usize, Vec<usize>, usize)| keys.binary_search(&inv).expect("present");
    let cg: Vec<usize> = ig.iter().map(color).collect();
    let ch: Vec<usize> = ih.iter().map(color).collect();
    let (cg, ch) = refine(g, h, cg, ch)?;
    let map = IsoMapping {
        map: search(g, h, cg, ch)?,
    };
    assert!(
        map.is_isomorphism(g, h),
        "search returned a non-isomorphism"
    );
    Some(map)
}

// ---------------------------------------------------------------------------
// Recognition
// ---------------------------------------------------------------------------

/// Outcome of [`recognize_report`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recognition {
    pub n: usize,
    pub k: Option<usize>,
    pub witness: Option<Witness>,
    /// Candidate label sets decided, counting those rejected through a
    /// proportional representative or the component-count filter.
    pub candidates_tested: usize,
    /// Isomorphism searches actually run.
    pub isomorphism_tests: usize,
}

fn witness_from(g: &Graph, labels: ReducedLabelSet, map: &IsoMapping) -> Witness {
    let ordering = CyclicOrdering::new(map.map().to_vec())
        .expect("isomorphism is a bijection")
        .normalized();
    let w = Witness { ordering, labels };
    if let Err(e) = w.check(g) {
        panic!("recognition produced an invalid witness: {e}");
    }
    w
}

pub fn recognize(g: &Graph) -> Option<Witness> {
    recognize_report(g, 1).witness
}

/// Full recognition run. With `jobs > 1` candidates are tested on a thread
/// pool; the reported witness and counters match the sequential run.
pub fn recognize_report(g: &Graph, jobs: usize) -> Recognition {
    let n = g.n();
    let k = g.regular_degree();
    let mut report = Recognition {
        n,
        k,
        witness: None,
        candidates_tested: 0,
        isomorphism_tests: 0,
    };
    let Some(k) = k else { return report };
    let Ok(candidates) = enumerate_candidates(n, k, false) else {
        return report;
    };
    let candidates: Vec<ReducedLabelSet> = candidates.collect();
    let components = g.component_count();
    // Indices of candidates that need an isomorphism test.
    let to_test: Vec<usize> = candidates
        .iter()
        .enumerate()
        .filter(|(_, c)| canonicalize(c) == **c && c.component_count() == components)
        .map(|(i, _)| i)
        .collect();

    let test = |&i: &usize| {
        let c = &candidates[i];
        isomorphism(g, &circulant_graph(c)).map(|m| (i, m))
    };
    let found = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| to_test.par_iter().find_map_first(test))
    } else {
        to_test.iter().find_map(test)
    };

    match found {
        Some((i, map)) => {
            report.candidates_tested = i + 1;
            report.isomorphism_tests = to_test.iter().filter(|&&j| j <= i).count();
            report.witness = Some(witness_from(g, candidates[i].clone(), &map));
        }
        None => {
            report.candidates_tested = candidates.len();
            report.isomorphism_tests = to_test.len();
        }
    }
    report
}

/// Brute-force decision straight from the definition: try every cyclic
/// ordering with vertex 0 at rank 0 and count the labels it induces.
pub fn oracle_mcsd(g: &Graph) -> Result<Option<Witness>> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::DomainExceeded {
            n,
            max: ORACLE_MAX_N,
        });
    }
    let Some(k) = g.regular_degree() else {
        return Ok(None);
    };
    if n < 3 {
        return Ok(None);
    }
    let edges: Vec<(usize, usize)> = g.edges().collect();
    for perm in (1..n).permutations(n - 1) {
        let mut rank = Vec::with_capacity(n);
        rank.push(0);
        rank.extend(perm);
        let mut used = 0u32;
        for &(u, v) in &edges {
            let d = (rank[v] + n - rank[u]) % n;
            used |= 1 << d | 1 << (n - d);
        }
        if used.count_ones() as usize == k {
            let labels =
                ReducedLabelSet::from_full_labels(n, (1..n).filter(|&l| used >> l & 1 == 1))?;
            let ordering = CyclicOrdering::new(rank)?;
            return Ok(Some(Witness { ordering, labels }));
        }
    }
    Ok(None)
}

/// The Petersen graph: outer 5-cycle, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::new(10, &edges).expect("valid")
}
