//! Circulant graphs built from reduced label sets.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{Graph, PortLabeling};

/// The labels `<= n/2` of a minimal chordal labeling, which is also the
/// generator set (up to inverses) of the matching circulant graph.
///
/// Textual form: `"n: g1,g2,...,gj"`, for example `"10: 1,2,5"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedLabelSet {
    n: usize,
    gammas: Vec<usize>,
}

impl ReducedLabelSet {
    /// Validates and sorts `gammas`. Requires `n >= 3` and distinct labels in
    /// `[1, n/2]`.
    pub fn new(n: usize, mut gammas: Vec<usize>) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidLabelSet(format!(
                "modulus must be at least 3, got {n}"
            )));
        }
        gammas.sort_unstable();
        if let Some(w) = gammas.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidLabelSet(format!("label {} repeated", w[0])));
        }
        if let Some(&g) = gammas.iter().find(|&&g| g == 0 || 2 * g > n) {
            return Err(Error::InvalidLabelSet(format!(
                "label {g} outside [1, {}]",
                n / 2
            )));
        }
        Ok(ReducedLabelSet { n, gammas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn gammas(&self) -> &[usize] {
        &self.gammas
    }

    pub fn contains_half(&self) -> bool {
        self.gammas.last().is_some_and(|&g| 2 * g == self.n)
    }

    /// Labels strictly below `n/2`; each one spans a 2-factor.
    pub fn factor_labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.gammas.iter().copied().filter(move |&g| 2 * g < self.n)
    }

    /// Degree of the generated graph.
    pub fn degree(&self) -> usize {
        2 * self.factor_labels().count() + usize::from(self.contains_half())
    }

    /// Every label of the full labeling: the reduced labels and their
    /// partners `n - g`, ascending.
    pub fn full_labels(&self) -> Vec<usize> {
        self.steps().collect()
    }

    fn steps(&self) -> impl Iterator<Item = usize> + Clone + '_ {
        // gammas are ascending and <= n/2, so their partners descend from
        // n - 1 down to n/2; only n/2 itself can coincide with its partner.
        let skip = usize::from(self.contains_half());
        let partners = self.gammas.iter().rev().skip(skip).map(|&g| self.n - g);
        self.gammas.iter().copied().chain(partners)
    }

    /// Number of connected components of the generated graph:
    /// `gcd(g1, ..., gj, n)`.
    pub fn component_count(&self) -> usize {
        let mut d = self.n;
        for &g in &self.gammas {
            if d == 1 {
                break;
            }
            d = d.gcd(&g);
        }
        d
    }

    /// Reduces a set of labels in `[1, n-1]` (closed under `l -> n - l`) to
    /// the labels `<= n/2`.
    pub fn from_full_labels(n: usize, labels: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut reduced: Vec<usize> = labels.into_iter().map(|l| l.min(n - l)).collect();
        reduced.sort_unstable();
        reduced.dedup();
        Self::new(n, reduced)
    }
}

impl fmt::Display for ReducedLabelSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.n)?;
        for (i, g) in self.gammas.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromStr for ReducedLabelSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::InvalidLabelSet(format!("{msg} in {s:?}"));
        let (n, rest) = s
            .split_once(':')
            .ok_or_else(|| bad("expected \"n: g1,g2,...\""))?;
        let n = n.trim().parse().map_err(|_| bad("bad modulus"))?;
        let rest = rest.trim();
        let gammas = if rest.is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|t| t.trim().parse().map_err(|_| bad("bad label")))
                .collect::<Result<Vec<usize>>>()?
        };
        ReducedLabelSet::new(n, gammas)
    }
}

/// The circulant graph generated by `ls` on its own, without labels.
pub fn circulant_graph(ls: &ReducedLabelSet) -> Graph {
    Graph::circulant(ls.n, ls.steps())
}

/// Builds the circulant graph of `ls` together with its canonical minimal
/// chordal labeling, `label(u, v) = v - u mod n`.
pub fn build_circulant(ls: &ReducedLabelSet) -> (Graph, PortLabeling) {
    let g = circulant_graph(ls);
    let n = ls.n;
    let ports = (0..n).flat_map(|u| g.neighbors(u).map(move |v| (u, v, (v + n - u) % n)));
    let lab = PortLabeling::new(n, ports.collect::<Vec<_>>()).expect("labels in [1, n-1]");
    (g, lab)
}

/// Whether the circulant generated by `ls` is connected.
pub fn connectivity_by_gcd(ls: &ReducedLabelSet) -> bool {
    ls.component_count() == 1
}

/// True iff every row `i` of `mat` is row 0 cyclically shifted right by `i`.
pub fn is_circulant_matrix(mat: &[Vec<u8>]) -> Result<bool> {
    let n = mat.len();
    if let Some((i, row)) = mat.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(Error::InvalidMatrix(format!(
            "row {i} has {} entries, expected {n}",
            row.len()
        )));
    }
    if mat.iter().flatten().any(|&x| x > 1) {
        return Err(Error::InvalidMatrix("entries must be 0 or 1".into()));
    }
    Ok((1..n).all(|i| (0..n).all(|j| mat[i][j] == mat[0][(j + n - i) % n])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csd::is_mcsd;

    fn ls(n: usize, g: &[usize]) -> ReducedLabelSet {
        ReducedLabelSet::new(n, g.to_vec()).unwrap()
    }

    #[test]
    fn validation() {
        assert!(ReducedLabelSet::new(2, vec![1]).is_err());
        assert!(ReducedLabelSet::new(10, vec![6]).is_err());
        assert!(ReducedLabelSet::new(10, vec![0]).is_err());
        assert!(ReducedLabelSet::new(10, vec![2, 2]).is_err());
        assert!(ReducedLabelSet::new(9, vec![5]).is_err());
        assert_eq!(ls(10, &[5, 1, 2]).gammas(), &[1, 2, 5]);
    }

    #[test]
    fn degree_and_full_labels() {
        let s = ls(10, &[1, 2, 5]);
        assert_eq!(s.degree(), 5);
        assert!(s.contains_half());
        assert_eq!(s.full_labels(), vec![1, 2, 5, 8, 9]);
        assert_eq!(ls(7, &[1, 3]).degree(), 4);
    }

    #[test]
    fn text_form() {
        let s: ReducedLabelSet = "10: 1,2,5".parse().unwrap();
        assert_eq!(s, ls(10, &[1, 2, 5]));
        assert_eq!(s.to_string(), "10: 1,2,5");
        assert_eq!("7:".parse::<ReducedLabelSet>().unwrap().to_string(), "7: ");
        assert!("10 1,2".parse::<ReducedLabelSet>().is_err());
        assert!("10: 1,x".parse::<ReducedLabelSet>().is_err());
    }

    #[test]
    fn builds_examples() {
        let (g, lab) = build_circulant(&ls(5, &[1]));
        assert_eq!((g.edge_count(), g.regular_degree()), (5, Some(2)));
        assert!(is_mcsd(&g, &lab).unwrap());

        let (g, lab) = build_circulant(&ls(10, &[1, 2, 5]));
        assert_eq!((g.edge_count(), g.regular_degree()), (25, Some(5)));
        assert_eq!(lab.label(3, 8), Some(5));
        assert_eq!(lab.label(0, 9), Some(9));
        assert!(is_mcsd(&g, &lab).unwrap());

        let (g, _) = build_circulant(&ls(4, &[1, 2]));
        assert_eq!((g.edge_count(), g.regular_degree()), (6, Some(3)));
    }

    #[test]
    fn gcd_connectivity() {
        assert!(!connectivity_by_gcd(&ls(6, &[2])));
        assert!(connectivity_by_gcd(&ls(6, &[2, 3])));
        assert!(circulant_graph(&ls(6, &[2, 3])).is_connected());
        assert!(connectivity_by_gcd(&ls(10, &[1, 2, 5])));
    }

    #[test]
    fn circulant_matrices() {
        let mat = circulant_graph(&ls(5, &[1])).adjacency_matrix();
        assert!(is_circulant_matrix(&mat).unwrap());
        let swapped = circulant_graph(&ls(5, &[1]))
            .permuted(&[1, 0, 2, 3, 4])
            .unwrap()
            .adjacency_matrix();
        assert!(!is_circulant_matrix(&swapped).unwrap());
        assert!(is_circulant_matrix(&vec![vec![0; 4]; 4]).unwrap());
        assert!(is_circulant_matrix(&[vec![0, 1], vec![1]]).is_err());
        assert!(is_circulant_matrix(&[vec![0, 2], vec![2, 0]]).is_err());
    }
}
