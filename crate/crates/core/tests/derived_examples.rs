//! Worked examples, each checked against a value computed here by hand
//! arithmetic or exhaustive search rather than by the library itself.

use std::collections::BTreeSet;

use mcsd::circulant::{build_circulant, circulant_graph, is_circulant_matrix, ReducedLabelSet};
use mcsd::csd::{
    induced_labeling, label_pair_structure, recover_ordering, verify_csd, CyclicOrdering,
};
use mcsd::equivalence::{canonicalize, proportional, transform_labels, Multiplier};
use mcsd::factorization::{additive_order, decompose, half_matching, same_cycle_rank, two_factor};
use mcsd::hamiltonian::{
    ham_stitch, hamiltonian_cycle, validate_hamiltonian, HamiltonianCycle, Strategy,
};
use mcsd::recognition::{enumerate_candidates, isomorphism, petersen, recognize};
use mcsd::{Error, Graph, PortLabeling};
use num_integer::Integer;

fn ls(n: usize, gammas: &[usize]) -> ReducedLabelSet {
    ReducedLabelSet::new(n, gammas.to_vec()).unwrap()
}

/// Orbits of `u -> u + step mod n`, each listed from its smallest member.
fn orbits(n: usize, step: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut u = start;
        while !seen[u] {
            seen[u] = true;
            cycle.push(u);
            u = (u + step) % n;
        }
        out.push(cycle);
    }
    out
}

/// Components found by a plain queue search, independent of `Graph`'s own.
fn bfs_components(g: &Graph) -> usize {
    let mut seen = vec![false; g.n()];
    let mut count = 0;
    for root in 0..g.n() {
        if seen[root] {
            continue;
        }
        count += 1;
        let mut queue = vec![root];
        seen[root] = true;
        while let Some(u) = queue.pop() {
            for v in (0..g.n()).filter(|&v| g.has_edge(u, v)) {
                if !seen[v] {
                    seen[v] = true;
                    queue.push(v);
                }
            }
        }
    }
    count
}

#[test]
fn two_components_of_step_two_on_six() {
    let g = circulant_graph(&ls(6, &[2]));
    let expected = orbits(6, 2);
    assert_eq!(expected, vec![vec![0, 2, 4], vec![1, 3, 5]]);
    assert_eq!(g.connected_components(), expected);
}

#[test]
fn swapped_ranks_break_the_c5_labeling() {
    let g = circulant_graph(&ls(5, &[1]));
    let lab = induced_labeling(&g, &CyclicOrdering::identity(5));
    let swapped = CyclicOrdering::new(vec![1, 0, 2, 3, 4]).unwrap();
    // Under the swap, edge 1-2 now runs from rank 0 to rank 2, label 2 at 1.
    let recomputed = (swapped.rank(2) + 5 - swapped.rank(1)) % 5;
    assert_eq!(recomputed, 2);
    assert_eq!(lab.label(1, 2), Some(1));
    assert!(!verify_csd(&g, &lab, &swapped).unwrap());
}

#[test]
fn ordering_recovered_from_7_1_3_is_the_identity() {
    let g = circulant_graph(&ls(7, &[1, 3]));
    let lab = induced_labeling(&g, &CyclicOrdering::identity(7));
    let ord = recover_ordering(&g, &lab).unwrap();
    let shift = (7 - ord.rank(0)) % 7;
    assert_eq!(ord.rotated(shift), CyclicOrdering::identity(7));
}

#[test]
fn c4_with_all_ports_labeled_one_is_not_chordal() {
    let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
    let ports = g.edges().flat_map(|(u, v)| [(u, v, 1), (v, u, 1)]);
    let lab = PortLabeling::new(4, ports.collect::<Vec<_>>()).unwrap();
    // Labels 1 and 1 do not sum to 0 mod 4, so the ends of every edge disagree.
    assert!(matches!(recover_ordering(&g, &lab), Err(Error::NotACsd(_))));
}

#[test]
fn disconnected_6_2_gets_odd_offsets_for_the_second_component() {
    let (g, lab) = build_circulant(&ls(6, &[2]));
    let ord = recover_ordering(&g, &lab).unwrap();
    assert!(verify_csd(&g, &lab, &ord).unwrap());
    let even: BTreeSet<usize> = [0, 2, 4].iter().map(|&u| ord.rank(u) % 2).collect();
    let odd: BTreeSet<usize> = [1, 3, 5].iter().map(|&u| ord.rank(u) % 2).collect();
    assert_eq!(even.len(), 1);
    assert_eq!(odd.len(), 1);
    assert_ne!(even, odd);
}

#[test]
fn pairs_of_7_1_3() {
    let (g, lab) = build_circulant(&ls(7, &[1, 3]));
    let s = label_pair_structure(&g, &lab).unwrap();
    let expected: BTreeSet<_> = [1, 3].iter().map(|&x| (x, 7 - x)).collect();
    assert_eq!(s.pairs, expected);
    assert!(!s.self_symmetric);
}

#[test]
fn six_two_three_is_connected_by_search() {
    let g = circulant_graph(&ls(6, &[2, 3]));
    assert_eq!(bfs_components(&g), 1);
    assert!(g.is_connected());
}

#[test]
fn swapping_rows_of_a_circulant_matrix() {
    let mut mat = circulant_graph(&ls(5, &[1])).adjacency_matrix();
    mat.swap(0, 1);
    for row in mat.iter_mut() {
        row.swap(0, 1);
    }
    let shifted_ok = (1..5).all(|i| (0..5).all(|j| mat[i][j] == mat[0][(j + 5 - i) % 5]));
    assert!(!shifted_ok);
    assert!(!is_circulant_matrix(&mat).unwrap());
}

#[test]
fn additive_order_of_4_mod_12() {
    let by_steps = (1..=12).find(|b| b * 4 % 12 == 0).unwrap();
    assert_eq!(by_steps, 3);
    assert_eq!(additive_order(12, 4).unwrap(), by_steps);
}

#[test]
fn same_cycle_for_step_4_mod_12() {
    let reach = |from: usize, to: usize| (0..12).any(|t| (from + t * 4) % 12 == to);
    assert!(reach(0, 8));
    assert!(!reach(0, 1));
    assert!(same_cycle_rank(12, 4, 0, 8));
    assert!(!same_cycle_rank(12, 4, 0, 1));
}

#[test]
fn factor_of_4_in_12_3_4() {
    let (g, lab) = build_circulant(&ls(12, &[3, 4]));
    let expected = orbits(12, 4);
    assert_eq!(
        expected,
        vec![vec![0, 4, 8], vec![1, 5, 9], vec![2, 6, 10], vec![3, 7, 11]]
    );
    assert_eq!(two_factor(&g, &lab, 4).unwrap(), expected);
}

#[test]
fn half_matchings() {
    let (g, lab) = build_circulant(&ls(10, &[1, 2, 5]));
    let expected: Vec<_> = (0..5).map(|u| (u, u + 5)).collect();
    assert_eq!(half_matching(&g, &lab).unwrap(), expected);

    let (g, lab) = build_circulant(&ls(4, &[1, 2]));
    assert_eq!(half_matching(&g, &lab).unwrap(), vec![(0, 2), (1, 3)]);
}

#[test]
fn decomposition_shapes_follow_gcd() {
    for (n, gammas) in [(10, vec![1, 2, 5]), (12, vec![3, 4])] {
        let (g, lab) = build_circulant(&ls(n, &gammas));
        let d = decompose(&g, &lab).unwrap();
        for f in &d.factors {
            let c = f.gamma.gcd(&n);
            assert_eq!(f.cycles.len(), c, "n={n} gamma={}", f.gamma);
            assert!(f.cycles.iter().all(|cy| cy.len() == n / c));
        }
        let expected_factors: Vec<usize> = gammas.iter().copied().filter(|&x| 2 * x < n).collect();
        assert_eq!(
            d.factors.iter().map(|f| f.gamma).collect::<Vec<_>>(),
            expected_factors
        );
        assert_eq!(
            d.matching.map(|m| m.len()),
            (n % 2 == 0 && gammas.contains(&(n / 2))).then_some(n / 2)
        );
    }
}

/// Every `b` in `[0, d]` solving `gi (d - 2b) + d gj = 0 mod n`.
fn stitch_solutions(n: usize, gi: usize, gj: usize) -> Vec<usize> {
    let d = gi.gcd(&n) as i64;
    let (n, gi, gj) = (n as i64, gi as i64, gj as i64);
    (0..=d)
        .filter(|&b| (gi * (d - 2 * b) + d * gj).rem_euclid(n) == 0)
        .map(|b| b as usize)
        .collect()
}

fn is_ham_cycle(n: usize, gammas: &[usize], ranks: &[usize]) -> bool {
    let g = circulant_graph(&ls(n, gammas));
    validate_hamiltonian(
        &g,
        &HamiltonianCycle {
            order: ranks.to_vec(),
            labels_used: Vec::new(),
        },
    )
}

#[test]
fn stitch_12_4_3() {
    assert!(stitch_solutions(12, 4, 3).contains(&2));
    let ranks = ham_stitch(12, 4, 3).unwrap();
    assert!(is_ham_cycle(12, &[3, 4], &ranks));
}

#[test]
fn stitch_30_6_5() {
    assert_eq!(stitch_solutions(30, 6, 5), vec![3]);
    let ranks = ham_stitch(30, 6, 5).unwrap();
    assert!(is_ham_cycle(30, &[5, 6], &ranks));
}

#[test]
fn strategies_for_small_circulants() {
    let (g, lab) = build_circulant(&ls(12, &[3, 4]));
    let c = hamiltonian_cycle(&g, &lab).unwrap();
    assert_eq!(c.strategy, Strategy::Stitch);
    assert!(validate_hamiltonian(&g, &c.cycle));

    let (g, lab) = build_circulant(&ls(6, &[2, 3]));
    let c = hamiltonian_cycle(&g, &lab).unwrap();
    assert_eq!(c.strategy, Strategy::HalfAlternating);
    assert!(validate_hamiltonian(&g, &c.cycle));
    assert!(c.cycle.labels_used.contains(&3));
    assert!(c.cycle.labels_used.contains(&2));
}

/// Multiplies every label by `alpha` and folds into `[1, n/2]`.
fn fold_multiply(n: usize, gammas: &[usize], alpha: usize) -> Vec<usize> {
    let mut out: Vec<usize> = gammas
        .iter()
        .map(|&g| {
            let x = g * alpha % n;
            x.min(n - x)
        })
        .collect();
    out.sort_unstable();
    out
}

#[test]
fn transforming_3_4_5_by_3() {
    assert_eq!(fold_multiply(10, &[3, 4, 5], 3), vec![1, 2, 5]);
    let m = Multiplier::new(10, 3).unwrap();
    assert_eq!(
        transform_labels(&ls(10, &[3, 4, 5]), m).unwrap(),
        ls(10, &[1, 2, 5])
    );
}

#[test]
fn proportional_1_and_2_mod_5() {
    let alpha = (1..5)
        .find(|&a| fold_multiply(5, &[1], a) == vec![2])
        .unwrap();
    assert_eq!(alpha, 2);
    assert_eq!(
        proportional(5, &ls(5, &[1]), &ls(5, &[2])).unwrap(),
        Some(Multiplier::new(5, 2).unwrap())
    );
}

fn brute_canonical(n: usize, gammas: &[usize]) -> Vec<usize> {
    (1..n)
        .filter(|a| a.gcd(&n) == 1)
        .map(|a| fold_multiply(n, gammas, a))
        .min()
        .unwrap()
}

#[test]
fn canonical_forms() {
    assert_eq!(brute_canonical(10, &[3, 4, 5]), vec![1, 2, 5]);
    assert_eq!(canonicalize(&ls(10, &[3, 4, 5])), ls(10, &[1, 2, 5]));
    assert_eq!(brute_canonical(12, &[2, 4]), vec![2, 4]);
    assert_eq!(canonicalize(&ls(12, &[2, 4])), ls(12, &[2, 4]));
}

#[test]
fn candidates_for_degree_2_on_5() {
    let all: Vec<_> = enumerate_candidates(5, 2, false).unwrap().collect();
    assert_eq!(all, vec![ls(5, &[1]), ls(5, &[2])]);
    let dedup: Vec<_> = enumerate_candidates(5, 2, true).unwrap().collect();
    assert_eq!(dedup, vec![ls(5, &[1])]);
}

#[test]
fn petersen_matches_no_candidate() {
    let p = petersen();
    let candidates: Vec<_> = (1..=4).map(|a| ls(10, &[a, 5])).collect();
    assert_eq!(
        enumerate_candidates(10, 3, false)
            .unwrap()
            .collect::<Vec<_>>(),
        candidates
    );
    for c in &candidates {
        assert!(isomorphism(&p, &circulant_graph(c)).is_none(), "{c}");
    }
    assert!(recognize(&p).is_none());
}

#[test]
fn permuted_12_3_4_is_recognized_up_to_proportionality() {
    let g = circulant_graph(&ls(12, &[3, 4]));
    let perm = [7, 2, 11, 0, 5, 9, 1, 4, 10, 3, 8, 6];
    let h = g.permuted(&perm).unwrap();
    let w = recognize(&h).unwrap();
    w.check(&h).unwrap();
    let units = (1..12).filter(|a: &usize| a.gcd(&12) == 1);
    let images: BTreeSet<Vec<usize>> = units.map(|a| fold_multiply(12, &[3, 4], a)).collect();
    assert!(images.contains(w.labels.gammas()), "{}", w.labels);
}
