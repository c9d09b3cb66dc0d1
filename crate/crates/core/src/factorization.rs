//! Splitting a minimally labeled regular graph into its labeled 2-factors and,
//! for odd degree, the perfect matching labeled `n/2`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::csd::{check_mcsd, recover_ordering, CyclicOrdering};
use crate::error::{Error, Result};
use crate::graph::{Graph, PortLabeling};

/// The cycles of one labeled 2-factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub gamma: usize,
    pub cycles: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub factors: Vec<Factor>,
    /// Edges labeled `n/2`, present iff the degree is odd.
    pub matching: Option<Vec<(usize, usize)>>,
}

/// Smallest `b > 0` with `b * a = 0 (mod n)`, i.e. `n / gcd(a, n)`.
pub fn additive_order(n: usize, a: usize) -> Result<usize> {
    if a == 0 || a >= n {
        return Err(Error::InvalidLabel { n, label: a });
    }
    Ok(n / a.gcd(&n))
}

/// Whether rank `rv` is reachable from rank `ru` by repeated `+gamma` steps.
pub fn same_cycle_rank(n: usize, gamma: usize, ru: usize, rv: usize) -> bool {
    let diff = (rv % n + n - ru % n) % n;
    diff.is_multiple_of(gamma.gcd(&n))
}

/// Orders a cycle so it starts at its minimum-rank vertex.
fn rotate_to_min_rank(cycle: &mut [usize], ord: &CyclicOrdering) {
    if let Some(pos) = (0..cycle.len()).min_by_key(|&i| ord.rank(cycle[i])) {
        cycle.rotate_left(pos);
    }
}

fn factor_cycles(
    g: &Graph,
    lab: &PortLabeling,
    ord: &CyclicOrdering,
    gamma: usize,
) -> Result<Vec<Vec<usize>>> {
    let n = g.n();
    if gamma == 0 || gamma >= n {
        return Err(Error::InvalidLabel { n, label: gamma });
    }
    if 2 * gamma == n {
        return Err(Error::NotATwoFactor(gamma));
    }
    if 2 * gamma > n {
        return Err(Error::InvalidLabel { n, label: gamma });
    }
    if !lab.ports().any(|(_, _, l)| l == gamma) {
        return Err(Error::UnknownLabel(gamma));
    }
    // Follow the gamma-labeled port out of every vertex.
    let step: Vec<usize> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .find(|&v| lab.label(u, v) == Some(gamma))
                .expect("every vertex of an MCSD has each label once")
        })
        .collect();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for r in 0..n {
        let start = ord.vertex_at(r);
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut u = start;
        while !seen[u] {
            seen[u] = true;
            cycle.push(u);
            u = step[u];
        }
        debug_assert_eq!(u, start);
        rotate_to_min_rank(&mut cycle, ord);
        cycles.push(cycle);
    }
    Ok(cycles)
}

/// Cycles of the 2-factor whose edges carry label `gamma`, found by leaving
/// each vertex through its `gamma` port. Each cycle starts at its lowest-rank
/// vertex; cycles are listed by that rank.
pub fn two_factor(g: &Graph, lab: &PortLabeling, gamma: usize) -> Result<Vec<Vec<usize>>> {
    check_mcsd(g, lab)?;
    let ord = recover_ordering(g, lab)?;
    factor_cycles(g, lab, &ord, gamma)
}

/// Edges labeled `n/2` at both ends, as `(u, v)` with `u < v`.
pub fn half_matching(g: &Graph, lab: &PortLabeling) -> Result<Vec<(usize, usize)>> {
    let k = check_mcsd(g, lab)?;
    if k % 2 == 0 {
        return Err(Error::NoMatchingLabel);
    }
    Ok(matching_edges(g, lab))
}

fn matching_edges(g: &Graph, lab: &PortLabeling) -> Vec<(usize, usize)> {
    let n = g.n();
    g.edges()
        .filter(|&(u, v)| lab.label(u, v).is_some_and(|l| 2 * l == n))
        .collect()
}

pub fn decompose(g: &Graph, lab: &PortLabeling) -> Result<Decomposition> {
    let k = check_mcsd(g, lab)?;
    let ord = recover_ordering(g, lab)?;
    let n = g.n();
    let factors = lab
        .distinct_labels()
        .into_iter()
        .filter(|&l| 2 * l < n)
        .map(|gamma| factor_cycles(g, lab, &ord, gamma).map(|cycles| Factor { gamma, cycles }))
        .collect::<Result<Vec<_>>>()?;
    let matching = (k % 2 == 1).then(|| matching_edges(g, lab));
    let d = Decomposition { factors, matching };
    debug_assert!(d.check(g).is_ok());
    Ok(d)
}

impl Decomposition {
    /// Checks that every factor is a 2-factor of equal-length cycles and that
    /// factors plus matching partition the edges of `g`.
    pub fn check(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = g.n();
        let mut covered = std::collections::BTreeSet::new();
        let mut cover = |u: usize, v: usize| -> std::result::Result<(), String> {
            if !g.has_edge(u, v) {
                return Err(format!("{u}-{v} is not an edge"));
            }
            if !covered.insert((u.min(v), u.max(v))) {
                return Err(format!("edge {u}-{v} covered twice"));
            }
            Ok(())
        };
        for f in &self.factors {
            let mut seen = vec![false; n];
            let len = f.cycles.first().map_or(0, Vec::len);
            for c in &f.cycles {
                if c.len() != len || c.len() < 3 {
                    return Err(format!("factor {} has uneven or short cycles", f.gamma));
                }
                for (i, &u) in c.iter().enumerate() {
                    if std::mem::replace(&mut seen[u], true) {
                        return Err(format!("factor {} visits {u} twice", f.gamma));
                    }
                    cover(u, c[(i + 1) % c.len()])?;
                }
            }
            if seen.contains(&false) {
                return Err(format!("factor {} does not span", f.gamma));
            }
        }
        if let Some(m) = &self.matching {
            let mut seen = vec![false; n];
            for &(u, v) in m {
                if std::mem::replace(&mut seen[u], true) || std::mem::replace(&mut seen[v], true) {
                    return Err("matching is not a matching".into());
                }
                cover(u, v)?;
            }
            if seen.contains(&false) {
                return Err("matching is not perfect".into());
            }
        }
        if covered.len() != g.edge_count() {
            return Err(format!(
                "{} of {} edges covered",
                covered.len(),
                g.edge_count()
            ));
        }
        Ok(())
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for factor in &self.factors {
            write!(f, "{}: ", factor.gamma)?;
            for c in &factor.cycles {
                let body: Vec<String> = c.iter().map(usize::to_string).collect();
                write!(f, "({})", body.join(" "))?;
            }
            writeln!(f)?;
        }
        if let Some(m) = &self.matching {
            f.write_str("matching: ")?;
            for (u, v) in m {
                write!(f, "({u} {v})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn parse_groups(s: &str) -> Result<Vec<Vec<usize>>> {
    let bad = || Error::Parse {
        line: 0,
        message: format!("malformed cycle list {s:?}"),
    };
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(bad)?;
    inner
        .split(")(")
        .map(|grp| {
            grp.split_whitespace()
                .map(|t| t.parse().map_err(|_| bad()))
                .collect()
        })
        .collect()
}

impl FromStr for Decomposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut factors = Vec::new();
        let mut matching = None;
        for (i, line) in s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
            let at_line = |e: Error| match e {
                Error::Parse { message, .. } => Error::Parse {
                    line: i + 1,
                    message,
                },
                other => other,
            };
            let (head, rest) = line.split_once(':').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: "expected \"label: (...)\"".into(),
            })?;
            let groups = parse_groups(rest).map_err(at_line)?;
            if head.trim() == "matching" {
                let edges = groups
                    .into_iter()
                    .map(|g| match g[..] {
                        [u, v] => Ok((u, v)),
                        _ => Err(Error::Parse {
                            line: i + 1,
                            message: "matching entries are vertex pairs".into(),
                        }),
                    })
                    .collect::<Result<Vec<_>>>()?;
                matching = Some(edges);
            } else {
                let gamma = head.trim().parse().map_err(|_| Error::Parse {
                    line: i + 1,
                    message: format!("bad label {head:?}"),
                })?;
                factors.push(Factor {
                    gamma,
                    cycles: groups,
                });
            }
        }
        Ok(Decomposition { factors, matching })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{build_circulant, ReducedLabelSet};

    fn circ(n: usize, gammas: &[usize]) -> (Graph, PortLabeling) {
        build_circulant(&ReducedLabelSet::new(n, gammas.to_vec()).unwrap())
    }

    #[test]
    fn orders() {
        assert_eq!(additive_order(5, 2), Ok(5));
        assert_eq!(additive_order(12, 4), Ok(3));
        for n in 2..30 {
            assert_eq!(additive_order(n, n - 1), Ok(n));
        }
        assert!(additive_order(5, 0).is_err());
    }

    #[test]
    fn same_cycle() {
        assert!(same_cycle_rank(12, 4, 0, 8));
        assert!(!same_cycle_rank(12, 4, 0, 1));
        assert!(same_cycle_rank(12, 5, 7, 7));
    }

    #[test]
    fn factor_of_label_four() {
        let (g, lab) = circ(12, &[1, 4]);
        let cycles = two_factor(&g, &lab, 4).unwrap();
        assert_eq!(
            cycles,
            vec![vec![0, 4, 8], vec![1, 5, 9], vec![2, 6, 10], vec![3, 7, 11]]
        );
        let (g, lab) = circ(5, &[2]);
        assert_eq!(two_factor(&g, &lab, 2).unwrap(), vec![vec![0, 2, 4, 1, 3]]);
    }

    #[test]
    fn factor_errors() {
        let (g, lab) = circ(10, &[1, 2, 5]);
        assert_eq!(two_factor(&g, &lab, 5), Err(Error::NotATwoFactor(5)));
        assert_eq!(two_factor(&g, &lab, 3), Err(Error::UnknownLabel(3)));
        let (g, lab) = circ(7, &[1, 3]);
        assert_eq!(half_matching(&g, &lab), Err(Error::NoMatchingLabel));
    }

    #[test]
    fn matchings() {
        let (g, lab) = circ(10, &[1, 2, 5]);
        assert_eq!(
            half_matching(&g, &lab).unwrap(),
            (0..5).map(|u| (u, u + 5)).collect::<Vec<_>>()
        );
        let (g, lab) = circ(4, &[1, 2]);
        assert_eq!(half_matching(&g, &lab).unwrap(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn decompositions() {
        let (g, lab) = circ(10, &[1, 2, 5]);
        let d = decompose(&g, &lab).unwrap();
        assert_eq!(d.factors.len(), 2);
        assert_eq!(d.factors[0].cycles, vec![(0..10).collect::<Vec<_>>()]);
        assert_eq!(
            d.factors[1].cycles,
            vec![vec![0, 2, 4, 6, 8], vec![1, 3, 5, 7, 9]]
        );
        assert_eq!(d.matching.as_ref().map(Vec::len), Some(5));
        d.check(&g).unwrap();

        let (g, lab) = circ(5, &[1, 2]);
        let d = decompose(&g, &lab).unwrap();
        assert!(d.matching.is_none());
        assert!(d
            .factors
            .iter()
            .all(|f| f.cycles.len() == 1 && f.cycles[0].len() == 5));

        let (g, lab) = circ(12, &[3, 4]);
        let d = decompose(&g, &lab).unwrap();
        let shape: Vec<_> = d
            .factors
            .iter()
            .map(|f| (f.gamma, f.cycles.len(), f.cycles[0].len()))
            .collect();
        assert_eq!(shape, vec![(3, 3, 4), (4, 4, 3)]);
    }

    #[test]
    fn not_an_mcsd() {
        let g = Graph::new(3, &[(0, 1), (1, 2)]).unwrap();
        let lab = PortLabeling::new(3, [(0, 1, 1), (1, 0, 2), (1, 2, 1), (2, 1, 2)]).unwrap();
        assert!(matches!(decompose(&g, &lab), Err(Error::NotAnMcsd(_))));
    }

    #[test]
    fn text_roundtrip() {
        let (g, lab) = circ(10, &[1, 2, 5]);
        let d = decompose(&g, &lab).unwrap();
        let text = d.to_string();
        assert!(text.starts_with("1: (0 1 2 3 4 5 6 7 8 9)\n2: (0 2 4 6 8)(1 3 5 7 9)\n"));
        assert!(text.ends_with("matching: (0 5)(1 6)(2 7)(3 8)(4 9)\n"));
        assert_eq!(text.parse::<Decomposition>().unwrap(), d);
    }
}
