use num_bigint::BigUint;
use opturan::graph::{count_cycles, count_paths, Mop};
use opturan::numeral::{build_numeral_graph, gamma_count, sequence_to_path, PermittedSequence};
use opturan::tree::{count_subtrees_k, weak_dual};
use proptest::prelude::*;

/// A random triangulation: split each sub-polygon at a chosen apex.
fn triangulation(n: usize, picks: &[usize]) -> Vec<(usize, usize)> {
    let mut chords = Vec::new();
    let mut stack = vec![(0, n - 1)];
    let mut i = 0;
    while let Some((lo, hi)) = stack.pop() {
        if hi - lo < 2 {
            continue;
        }
        let apex = lo + 1 + picks[i % picks.len()] % (hi - lo - 1);
        i += 1;
        for (a, b) in [(lo, apex), (apex, hi)] {
            if b - a >= 2 {
                chords.push((a, b));
                stack.push((a, b));
            }
        }
    }
    chords
}

fn arb_mop() -> impl Strategy<Value = Mop> {
    (3usize..=12, proptest::collection::vec(0usize..1000, 12))
        .prop_map(|(n, picks)| Mop::new(n, triangulation(n, &picks)).expect("random triangulation is valid"))
}

fn rotate(m: &Mop, r: usize, reflect: bool) -> Mop {
    let n = m.n();
    let map = |v: usize| if reflect { (r + n - v) % n } else { (v + r) % n };
    Mop::new(n, m.chords().iter().map(|&(a, b)| (map(a), map(b)))).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_triangulations_are_maximal(m in arb_mop()) {
        prop_assert_eq!(m.edge_count(), 2 * m.n() - 3);
        prop_assert_eq!(m.triangles().len(), m.n() - 2);
        prop_assert_eq!(weak_dual(&m).n(), m.n() - 2);
        prop_assert!(weak_dual(&m).max_degree() <= 3);
    }

    #[test]
    fn cycles_are_dual_subtrees(m in arb_mop(), k in 3usize..=12) {
        prop_assume!(k <= m.n());
        let cycles = count_cycles(&m.graph(), k);
        prop_assert_eq!(BigUint::from(cycles), count_subtrees_k(&weak_dual(&m), k - 2));
    }

    #[test]
    fn dihedral_images_share_canonical_form(m in arb_mop(), r in 0usize..12, reflect: bool) {
        let image = rotate(&m, r % m.n(), reflect);
        prop_assert_eq!(image.canonical_form(), m.canonical_form());
        prop_assert!(image.is_isomorphic(&m));
        // path counts are a graph invariant
        prop_assert_eq!(count_paths(&image.graph(), 3), count_paths(&m.graph(), 3));
    }

    #[test]
    fn mop_json_round_trip(m in arb_mop()) {
        let text = serde_json::to_string(&m).unwrap();
        let back: Mop = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, m);
    }

    #[test]
    fn gamma_grows_with_the_cap(len in 0usize..14, t in 2usize..8) {
        prop_assert!(gamma_count(len, t).unwrap() <= gamma_count(len, t + 1).unwrap());
    }

    #[test]
    fn random_sequences_give_valid_paths(
        steps in proptest::collection::vec(0usize..3, 6),
        digits in proptest::collection::vec(10usize..12, 6),
        lead in (10usize..12, 10usize..12),
    ) {
        let (base, t, k) = (12usize, 3usize, 10usize);
        prop_assume!(lead.0 != lead.1);
        // walk: stay, climb by one, or drop to zero
        let mut values = vec![0usize];
        for &s in &steps[1..k - 2 * t] {
            let prev = *values.last().unwrap();
            values.push(match s {
                0 => prev,
                1 => (prev + 1).min(t - 2),
                _ => 0,
            });
        }
        let seq = PermittedSequence::new(values, t).unwrap();
        let a = lead.0 * base * base + digits[0] * base + digits[1];
        let b = lead.1 * base * base + digits[2] * base + digits[3];
        let path = sequence_to_path(a, b, &seq, base, t, k).unwrap();
        let g = build_numeral_graph(base, t).unwrap();
        prop_assert_eq!(path.len(), k + 1);
        prop_assert_eq!(path[0], a);
        prop_assert_eq!(path[k], b);
        for w in path.windows(2) {
            prop_assert!(g.graph().has_edge(w[0], w[1]));
        }
    }
}
