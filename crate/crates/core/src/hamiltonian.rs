//! Hamiltonian cycles in connected graphs carrying a minimal chordal labeling.
//!
//! Constructions work on ranks. The cycles of the 2-factor labeled `gi` are
//! the residue classes modulo `d = gcd(gi, n)`, each of length `n / d`. A
//! Hamiltonian path inside one such cycle must end next to where it started,
//! so leaving a class through its path changes the rank by `+gi` or `-gi`
//! relative to the entry. Stitching the classes together with jump edges
//! closes into a Hamiltonian cycle exactly when the signed sum of these
//! offsets and the jumps vanishes modulo `n`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::csd::{check_mcsd, recover_ordering};
use crate::error::{Error, Result};
use crate::graph::{Graph, PortLabeling};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianCycle {
    /// Vertices in visiting order; the closing edge runs from the last back to the first.
    pub order: Vec<usize>,
    /// Reduced label (`<= n/2`) of each traversed edge, including the closing one.
    pub labels_used: Vec<usize>,
}

/// How a cycle was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// A single label coprime to `n`.
    SingleLabel,
    /// 2-factor cycles of one label joined by edges of a coprime label.
    Stitch,
    /// 2-factor cycles joined alternately by `n/2` edges and another label.
    HalfAlternating,
    /// Exhaustive search.
    Backtracking,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::SingleLabel => "a",
            Strategy::Stitch => "b",
            Strategy::HalfAlternating => "c",
            Strategy::Backtracking => "d",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.tag())
    }
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().trim_start_matches('(').trim_end_matches(')') {
            "a" => Ok(Strategy::SingleLabel),
            "b" => Ok(Strategy::Stitch),
            "c" => Ok(Strategy::HalfAlternating),
            "d" => Ok(Strategy::Backtracking),
            other => Err(Error::Parse {
                line: 0,
                message: format!("unknown strategy {other:?}"),
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub cycle: HamiltonianCycle,
    pub strategy: Strategy,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body: Vec<String> = self.cycle.order.iter().map(usize::to_string).collect();
        writeln!(f, "{}", body.join(" "))?;
        writeln!(f, "strategy: {}", self.strategy)
    }
}

/// Parses the two-line form written by [`Construction`]'s `Display`.
pub fn parse_construction(text: &str) -> Result<(Vec<usize>, Strategy)> {
    let mut lines = text.lines();
    let order = lines
        .next()
        .unwrap_or_default()
        .split_whitespace()
        .map(|t| {
            t.parse().map_err(|_| Error::Parse {
                line: 1,
                message: format!("bad vertex {t:?}"),
            })
        })
        .collect::<Result<Vec<usize>>>()?;
    let strategy = lines
        .next()
        .and_then(|l| l.strip_prefix("strategy:"))
        .ok_or_else(|| Error::Parse {
            line: 2,
            message: "expected \"strategy: (x)\"".into(),
        })?
        .parse()?;
    Ok((order, strategy))
}

/// Rank sequence `0, gamma, 2 gamma, ...` modulo `n`.
pub fn ham_single(n: usize, gamma: usize) -> Result<Vec<usize>> {
    if gamma == 0 || gamma >= n {
        return Err(Error::InvalidLabel { n, label: gamma });
    }
    if gamma.gcd(&n) != 1 {
        return Err(Error::NotCoprime { n, gamma });
    }
    Ok((0..n).map(|t| t * gamma % n).collect())
}

/// Visits the classes modulo `gcd(gi, n)` in the order fixed by `jumps`,
/// crossing each class along a Hamiltonian path of its `gi`-cycle. Returns
/// `None` when the classes repeat or no choice of path directions closes the
/// cycle.
fn stitch_classes(n: usize, gi: usize, jumps: &[usize]) -> Option<Vec<usize>> {
    let d = gi.gcd(&n);
    let len = n / d;
    if jumps.len() != d {
        return None;
    }
    let mut class_seen = vec![false; d];
    let mut class = 0;
    for &j in jumps {
        if std::mem::replace(&mut class_seen[class], true) {
            return None;
        }
        class = (class + j) % d;
    }
    if class != 0 {
        return None;
    }
    // Exiting a class at entry + s*gi with s = +1 for all but `reversed`
    // visits: closing needs gi*(d - 2*reversed) + sum(jumps) = 0 (mod n).
    let jump_total = jumps.iter().fold(0, |acc, &j| (acc + j) % n);
    let reversed = (0..=d).find(|&b| {
        let plus = gi * (d - b) % n;
        let minus = gi * b % n;
        (plus + n - minus + jump_total).is_multiple_of(n)
    })?;

    let mut ranks = Vec::with_capacity(n);
    let mut entry = 0;
    for (t, &j) in jumps.iter().enumerate() {
        // Walking -gi from the entry for len-1 steps exits at entry + gi;
        // walking +gi exits at entry - gi.
        let step = if t < reversed { gi } else { n - gi };
        let mut r = entry;
        for _ in 0..len {
            ranks.push(r);
            r = (r + step) % n;
        }
        let exit = *ranks.last().expect("nonempty");
        entry = (exit + j) % n;
    }
    debug_assert_eq!(entry, 0);
    Some(ranks)
}

/// Rank sequence of a Hamiltonian cycle built from the `gi`-cycles joined by
/// `gj` edges. Requires `gcd(gi, gj) = 1` and `gcd(gi, n) > 1`.
pub fn ham_stitch(n: usize, gi: usize, gj: usize) -> Result<Vec<usize>> {
    for g in [gi, gj] {
        if g == 0 || g >= n {
            return Err(Error::InvalidPair(format!(
                "label {g} outside [1, {}]",
                n - 1
            )));
        }
    }
    if gi.gcd(&gj) != 1 {
        return Err(Error::InvalidPair(format!("gcd({gi}, {gj}) > 1")));
    }
    let d = gi.gcd(&n);
    if d == 1 {
        return Err(Error::InvalidPair(format!(
            "{gi} is coprime to {n}; a single label suffices"
        )));
    }
    stitch_classes(n, gi, &vec![gj; d]).ok_or(Error::StitchInfeasible { n, gi, gj })
}

pub fn validate_hamiltonian(g: &Graph, cycle: &HamiltonianCycle) -> bool {
    let n = g.n();
    let order = &cycle.order;
    if order.len() != n || n < 3 {
        return false;
    }
    let mut seen = vec![false; n];
    for &u in order {
        if u >= n || std::mem::replace(&mut seen[u], true) {
            return false;
        }
    }
    (0..n).all(|i| g.has_edge(order[i], order[(i + 1) % n]))
}

fn finish(g: &Graph, lab: &PortLabeling, order: Vec<usize>, strategy: Strategy) -> Construction {
    let n = g.n();
    assert!(
        validate_hamiltonian(
            g,
            &HamiltonianCycle {
                order: order.clone(),
                labels_used: Vec::new()
            }
        ),
        "construction {strategy} produced an invalid cycle"
    );
    let labels_used = (0..order.len())
        .map(|i| {
            let l = lab
                .label(order[i], order[(i + 1) % order.len()])
                .expect("consecutive vertices are adjacent");
            l.min(n - l)
        })
        .collect();
    let cycle = HamiltonianCycle { order, labels_used };
    Construction { cycle, strategy }
}

/// Finds a Hamiltonian cycle of a connected graph with a minimal chordal
/// labeling. Strategies are tried in the fixed order
/// single label, stitch, half-alternating, backtracking.
pub fn hamiltonian_cycle(g: &Graph, lab: &PortLabeling) -> Result<Construction> {
    lab.check_against(g)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    check_mcsd(g, lab)?;
    let n = g.n();
    let ord = recover_ordering(g, lab)?;
    let to_vertices =
        |ranks: Vec<usize>| -> Vec<usize> { ranks.into_iter().map(|r| ord.vertex_at(r)).collect() };

    let full: Vec<usize> = lab.distinct_labels().into_iter().collect();
    let reduced: Vec<usize> = full.iter().copied().filter(|&l| 2 * l <= n).collect();
    let half = reduced.last().copied().filter(|&l| 2 * l == n);

    if let Some(ranks) = reduced.iter().find_map(|&gamma| ham_single(n, gamma).ok()) {
        return Ok(finish(g, lab, to_vertices(ranks), Strategy::SingleLabel));
    }

    let factor_labels: Vec<usize> = reduced
        .iter()
        .copied()
        .filter(|&l| Some(l) != half)
        .collect();
    for &gi in &factor_labels {
        for &gj in &factor_labels {
            if gi.gcd(&gj) != 1 {
                continue;
            }
            if let Ok(ranks) = ham_stitch(n, gi, gj) {
                return Ok(finish(g, lab, to_vertices(ranks), Strategy::Stitch));
            }
        }
    }

    if let Some(h) = half {
        for &gi in &factor_labels {
            let d = gi.gcd(&n);
            let mut patterns = vec![vec![h; d]];
            for &gj in full.iter().filter(|&&l| l != gi && l != n - gi && l != h) {
                patterns.push((0..d).map(|t| if t % 2 == 0 { h } else { gj }).collect());
                patterns.push((0..d).map(|t| if t % 2 == 0 { gj } else { h }).collect());
            }
            if let Some(ranks) = patterns.iter().find_map(|p| stitch_classes(n, gi, p)) {
                return Ok(finish(
                    g,
                    lab,
                    to_vertices(ranks),
                    Strategy::HalfAlternating,
                ));
            }
        }
    }

    let order = backtrack(g).expect("connected circulant graphs are Hamiltonian");
    Ok(finish(g, lab, order, Strategy::Backtracking))
}

/// Depth-first search from vertex 0 in ascending neighbor order. A branch is
/// cut when some unvisited vertex keeps fewer than two usable neighbors.
fn backtrack(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 3 {
        return None;
    }
    struct Search<'a> {
        g: &'a Graph,
        path: Vec<usize>,
        on_path: Vec<bool>,
        // Neighbors of each vertex that are not interior path vertices.
        usable: Vec<usize>,
    }

    impl Search<'_> {
        fn extend(&mut self) -> bool {
            let n = self.g.n();
            let end = *self.path.last().expect("path starts at 0");
            if self.path.len() == n {
                return self.g.has_edge(end, self.path[0]);
            }
            for v in self.g.neighbors(end) {
                if self.on_path[v] {
                    continue;
                }
                let end_becomes_interior = self.path.len() > 1;
                if end_becomes_interior {
                    for w in self.g.neighbors(end) {
                        self.usable[w] -= 1;
                    }
                }
                self.path.push(v);
                self.on_path[v] = true;
                let viable = !end_becomes_interior
                    || self
                        .g
                        .neighbors(end)
                        .all(|w| self.on_path[w] || self.usable[w] >= 2);
                if viable && self.extend() {
                    return true;
                }
                self.on_path[v] = false;
                self.path.pop();
                if end_becomes_interior {
                    for w in self.g.neighbors(end) {
                        self.usable[w] += 1;
                    }
                }
            }
            false
        }
    }

    let mut search = Search {
        g,
        path: vec![0],
        on_path: vec![false; n],
        usable: (0..n).map(|u| g.degree(u)).collect(),
    };
    search.on_path[0] = true;
    search.extend().then_some(search.path)
}
