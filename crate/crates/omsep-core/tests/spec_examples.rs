//! Worked examples pinned as tests: published counts, derived oracles,
//! and the small lemmas the engine is expected to reproduce exactly.

use num_bigint::BigInt;
use omsep_core::construct::*;
use omsep_core::graphsep::{self, *};
use omsep_core::matroid::OrientedMatroid;
use omsep_core::ratmat::{rat, rat_int, Rat};
use omsep_core::separation::*;
use omsep_core::signed_set::mask;
use omsep_core::tilings::*;
use omsep_core::{GroundSet, Sign, SignedSet};

fn planar(points: &[(Rat, Rat)]) -> VectorConfiguration {
    VectorConfiguration::new(
        3,
        points
            .iter()
            .map(|(x, y)| vec![x.clone(), y.clone(), rat_int(1)])
            .collect(),
    )
}

#[test]
fn independent_set_counts() {
    assert_eq!(
        alternating(5, 2).independent_sets().len(),
        16,
        "1 + 5 + 10"
    );
    assert_eq!(
        alternating(5, 3).independent_sets().len(),
        26,
        "1 + 5 + 10 + 10"
    );
    let free = OrientedMatroid::new(GroundSet::numeric(4), vec![]).unwrap();
    assert_eq!(free.rank(), 4);
}

#[test]
fn tutte_against_forest_enumeration() {
    // Direct forest count of K4: subsets of edges with no cycle.
    let k4 = graphsep::k4();
    let m = k4.matroid().unwrap();
    let cycles = k4.cycles().unwrap();
    let cycle_masks: Vec<u64> = cycles
        .iter()
        .map(|c| c.iter().fold(0u64, |a, &(e, _)| a | (1 << e)))
        .collect();
    let mut forests = 0u64;
    for s in 0..(1u64 << 6) {
        if cycle_masks.iter().all(|c| c & !s != 0) {
            forests += 1;
        }
    }
    assert_eq!(forests, 38);
    assert_eq!(m.tutte_eval(2, 1), BigInt::from(38));
    // |Ind| = T(2,1) and |B| = T(1,1) across a corpus.
    for m in [alternating(6, 3), alternating(5, 2), graphsep::k23().matroid().unwrap()] {
        assert_eq!(
            BigInt::from(m.independent_sets().len() as u64),
            m.tutte_eval(2, 1)
        );
        assert_eq!(BigInt::from(m.bases().len() as u64), m.tutte_eval(1, 1));
    }
}

#[test]
fn duality_statements() {
    // (C^{6,2})^* ≅ C^{6,4}, explicitly via reorienting {2,4,6}.
    let d = alternating(6, 2).dual();
    let c64 = alternating(6, 4);
    assert!(d.is_isomorphic(&c64).is_some());
    assert_eq!(d.reorient(mask(&[1, 3, 5])).circuits(), c64.circuits());
    // Involution and the double-dual identity on cocircuits.
    assert_eq!(&d.dual(), &alternating(6, 2));
    let c52 = alternating(5, 2);
    assert_eq!(c52.dual().dual().circuits(), c52.circuits());
    // dual(M_{K4}) has rank 3 (corank of the graphic matroid).
    let mk4 = graphsep::k4().matroid().unwrap();
    assert_eq!(mk4.dual().rank(), 3);
    // C^{6,4} has no coloops.
    assert_eq!(alternating(6, 4).coloops(), 0);
}

#[test]
fn minors_of_alternating() {
    // delete(C^{n,2}, n) = C^{n-1,2}.
    let m = alternating(5, 2);
    let deleted = m.delete(4).unwrap();
    assert_eq!(deleted.circuits(), alternating(4, 2).circuits());
    // Contract and delete commute for distinct elements.
    let a = m.contract(1).unwrap().delete(2).unwrap();
    let b = m.delete(3).unwrap().contract(1).unwrap();
    assert_eq!(a.circuits(), b.circuits());
    // rank(M/e) = rank(M) - 1 for non-loops.
    assert_eq!(m.contract(0).unwrap().rank(), m.rank() - 1);
}

#[test]
fn census_small_and_stability() {
    let classes4 = census_rank3_simple(4).unwrap();
    assert_eq!(
        classes4.iter().filter(|m| m.is_uniform()).count(),
        1,
        "one uniform class on four elements"
    );
    // Census members are stable under the isomorphism predicate: a
    // scrambled copy matches its own class and nothing else.
    let classes5 = census_rank3_simple(5).unwrap();
    assert_eq!(classes5.len(), 4);
    for (i, m) in classes5.iter().enumerate() {
        let scrambled = m.relabel(&[3, 0, 4, 1, 2]).reorient(mask(&[0, 2]));
        for (j, other) in classes5.iter().enumerate() {
            assert_eq!(
                other.is_isomorphic(&scrambled).is_some(),
                i == j,
                "class {i} vs {j}"
            );
        }
    }
}

#[test]
fn chirotope_roundtrips() {
    // from_vectors = circuits ∘ chirotope on full-rank configurations.
    let configs = vec![
        planar(&[
            (rat_int(0), rat_int(0)),
            (rat_int(4), rat_int(0)),
            (rat_int(3), rat_int(2)),
            (rat_int(2), rat_int(4)),
            (rat_int(1), rat_int(2)),
            (rat_int(2), rat(4, 3)),
        ]),
        VectorConfiguration::new(
            2,
            (1..=5).map(|t| vec![rat_int(1), rat_int(t)]).collect(),
        ),
    ];
    for config in &configs {
        let direct = from_vectors(config).unwrap();
        let chi = chirotope_from_config(config).unwrap();
        let via_chirotope = circuits_from_chirotope(&chi).unwrap();
        assert_eq!(direct.circuits(), via_chirotope.circuits());
        // And the circuit-side chirotope matches up to global sign.
        let back = chirotope_of(&direct).unwrap();
        let flipped: Vec<Sign> = chi.signs.iter().map(|s| -*s).collect();
        assert!(back.signs == chi.signs || back.signs == flipped);
    }
}

#[test]
fn positroid_verdicts() {
    assert!(is_positively_orientable(&alternating(6, 3)).is_some());
    // Any rank-2 simple matroid is positively orientable.
    assert!(is_positively_orientable(&alternating(6, 2)).is_some());
    let m13 = from_vectors(&planar(&[
        (rat_int(0), rat_int(0)),
        (rat_int(4), rat_int(0)),
        (rat_int(3), rat_int(2)),
        (rat_int(2), rat_int(4)),
        (rat_int(1), rat_int(2)),
        (rat_int(2), rat(4, 3)),
    ]))
    .unwrap();
    assert!(is_positively_orientable(&m13).is_none());
    // The geometric convex-position criterion: sufficient for positive
    // orientability, and matching the drawn diagram.
    let convex = planar(&[
        (rat_int(0), rat_int(0)),
        (rat_int(2), rat_int(0)),
        (rat_int(3), rat_int(2)),
        (rat_int(1), rat_int(3)),
        (rat_int(-1), rat_int(1)),
    ]);
    assert!(convex_position_criterion(&convex).unwrap());
    assert!(is_positively_orientable(&from_vectors(&convex).unwrap()).is_some());
    // A triangle with an interior point is drawn non-convexly, yet the
    // matroid is still isomorphic to a positroid: a reorientation sends
    // the interior point across infinity. Being a positroid is not
    // reorientation-invariant; being isomorphic to one is.
    let interior = planar(&[
        (rat_int(0), rat_int(0)),
        (rat_int(4), rat_int(0)),
        (rat_int(2), rat_int(3)),
        (rat_int(2), rat_int(1)),
    ]);
    assert!(!convex_position_criterion(&interior).unwrap());
    assert!(is_positively_orientable(&from_vectors(&interior).unwrap()).is_some());
    // The published non-positroid diagram fails both.
    let m13_config = planar(&[
        (rat_int(0), rat_int(0)),
        (rat_int(4), rat_int(0)),
        (rat_int(3), rat_int(2)),
        (rat_int(2), rat_int(4)),
        (rat_int(1), rat_int(2)),
        (rat_int(2), rat(4, 3)),
    ]);
    assert!(!convex_position_criterion(&m13_config).unwrap());
}

#[test]
fn k4_figure_obstruction() {
    // The four published K4 orientations are separated, yet no
    // colocalization extends their sign map.
    let m = graphsep::k4().matroid().unwrap();
    let s0 = Collection::new(vec![
        mask(&[2, 3, 4]),
        mask(&[1]),
        mask(&[0, 4, 5]),
        mask(&[0, 1, 2, 3, 5]),
    ]);
    assert!(is_collection_separated(&m, &s0));
    let sigma0 = sigma_of(&m, &s0).unwrap();
    let all = enumerate_colocalizations(&m, 10_000).unwrap();
    assert!(!all.is_empty());
    assert_eq!(all.iter().filter(|s| sigma0.leq(s)).count(), 0);
}

#[test]
fn balanced_graph_components() {
    // Every maximal-by-size collection meets every cycle-reversal
    // component exactly once.
    let m = graphsep::k23().matroid().unwrap();
    assert!(m.is_balanced());
    let graph = mutation_graph(&m);
    let colls = max_by_size_collections(&m, 100).unwrap();
    assert!(!colls.is_empty());
    for s in &colls {
        for comp in 0..graph.component_count {
            let members = graph.members(comp);
            assert_eq!(
                s.sets.iter().filter(|v| members.contains(v)).count(),
                1
            );
        }
    }
}

#[test]
fn flip_graph_statements() {
    // Flip connectivity of alternating matroids.
    assert!(is_flip_connected(&alternating(5, 2), 1000).unwrap());
    assert!(is_flip_connected(&alternating(4, 2), 1000).unwrap());
    // |S(σ) ∩ D| is invariant under flips for mutation-closed domains.
    let m = alternating(4, 2);
    let graph = mutation_graph(&m);
    let sigmas = enumerate_colocalizations(&m, 100).unwrap();
    for (i, a) in sigmas.iter().enumerate() {
        for b in sigmas.iter().skip(i + 1) {
            let diff = a
                .values
                .iter()
                .zip(&b.values)
                .filter(|(x, y)| x != y)
                .count();
            if diff != 1 {
                continue;
            }
            let (sa, sb) = (
                collection_of(&m, a).unwrap(),
                collection_of(&m, b).unwrap(),
            );
            for comp in 0..graph.component_count {
                let members = graph.members(comp);
                let ca = sa.sets.iter().filter(|v| members.contains(v)).count();
                let cb = sb.sets.iter().filter(|v| members.contains(v)).count();
                assert_eq!(ca, cb);
            }
        }
    }
}

#[test]
fn domain_restriction_check_reports() {
    let report = domain_restriction_conjecture_check(&alternating(4, 2), 100).unwrap();
    assert!(report.counterexamples.is_empty());
    assert!(report.confirmations > 0);
}

#[test]
fn dual_alternating_separation_lemma() {
    // The non-separated pairs of (C^{5,2})^* are exactly the
    // prefix/suffix pairs ([1,l], [m+1,n]) with |l - m| ≤ 1.
    let d = alternating(5, 2).dual();
    let mut nonsep = Vec::new();
    for i in 0..32u64 {
        for j in i + 1..32 {
            if !pair_separated(&d, i, j) {
                nonsep.push((i, j));
            }
        }
    }
    let prefix = |k: usize| -> u64 { (1u64 << k) - 1 };
    let suffix = |k: usize| -> u64 { 0b11111 & !((1u64 << k) - 1) };
    let mut expected = Vec::new();
    for l in 0..=5usize {
        for m in 0..=5usize {
            if (l as i64 - m as i64).abs() <= 1 {
                let (a, b) = (prefix(l), suffix(m));
                if a != b {
                    expected.push((a.min(b), a.max(b)));
                }
            }
        }
    }
    expected.sort_unstable();
    expected.dedup();
    nonsep.sort_unstable();
    assert_eq!(nonsep, expected);
}

#[test]
fn lifting_tope_oracle() {
    // Independent check of the lifting: tope pairs of the lifted matroid
    // count |Ind(M)|, and the tope description recovers S(σ).
    let m = alternating(4, 2);
    let sigmas = enumerate_colocalizations(&m, 100).unwrap();
    assert_eq!(sigmas.len(), 8);
    for sigma in &sigmas {
        let lifted = lifting_circuits(&m, sigma).unwrap();
        assert_eq!(lifted.rank(), m.rank() + 1);
        assert!(lifted.is_simple(), "general position liftings are simple");
        let topes = lifted.topes();
        assert_eq!(topes.len() / 2, 11, "|T|/2 = |Ind(C^{{4,2}})|");
        let s = collection_of(&m, sigma).unwrap();
        let g_bit = 1u64 << m.n_elements();
        let full = lifted.ground().full_mask();
        let mut from_topes: Vec<u64> = topes
            .iter()
            .filter(|t| t.plus & g_bit == 0 && t.support() == full & !lifted.loops())
            .map(|t| t.plus & (g_bit - 1))
            .collect();
        from_topes.sort_unstable();
        from_topes.dedup();
        assert_eq!(from_topes, s.sets);
    }
    // Degenerate case: the free matroid lifts to a free matroid plus a
    // coloop.
    let free = OrientedMatroid::new(GroundSet::numeric(3), vec![]).unwrap();
    let sigma = omsep_core::SignMap { values: vec![] };
    let lifted = lifting_circuits(&free, &sigma).unwrap();
    assert_eq!(lifted.rank(), 4);
    assert_eq!(lifted.circuits().len(), 0);
}

#[test]
fn extension_lemma_on_subcollections() {
    // σ_S ≤ σ for separated S implies S ⊆ S(σ).
    let m = alternating(5, 2);
    let sigmas = enumerate_colocalizations(&m, 100).unwrap();
    for sigma in sigmas.iter().take(6) {
        let full = collection_of(&m, sigma).unwrap();
        for step in 2..5 {
            let sub = Collection::new(full.sets.iter().step_by(step).copied().collect());
            let ss = sigma_of(&m, &sub).expect("subcollections stay separated");
            assert!(ss.leq(sigma));
            assert!(sub.sets.iter().all(|s| full.contains(*s)));
        }
    }
}

#[test]
fn separation_preserved_by_collection_minors() {
    // S separated ⇒ S - e is (M - e)-separated and S / e is
    // (M / e)-separated, under the minor reindexing.
    let m = alternating(5, 3);
    let shift = |mask_: u64, e: usize| -> u64 {
        (mask_ & ((1u64 << e) - 1)) | ((mask_ >> (e + 1)) << e)
    };
    let sigmas = enumerate_colocalizations(&m, 10).unwrap();
    for sigma in &sigmas {
        let s = collection_of(&m, sigma).unwrap();
        for e in 0..5 {
            let del = Collection::new(s.delete(e).sets.iter().map(|&x| shift(x, e)).collect());
            let con = Collection::new(s.contract(e).sets.iter().map(|&x| shift(x, e)).collect());
            assert!(is_collection_separated(&m.delete(e).unwrap(), &del));
            assert!(is_collection_separated(&m.contract(e).unwrap(), &con));
        }
    }
}

#[test]
fn polytopality_of_graph_components() {
    for g in [
        graphsep::k23(),
        graphsep::k4(),
        tree_of_triangulation(5, vec![(0, 2), (0, 3)]).unwrap().skeleton(),
    ] {
        for component in cycle_reversal_components(&g).unwrap() {
            let report = polytopality_check(&g, &component).unwrap();
            assert!(report.passed(), "{:?}", report.failures);
        }
    }
}

#[test]
fn coherence_routes_agree() {
    // Tree route, graphical-matroid route, and the realized-configuration
    // route agree; all dependence coefficients for graphical matroids are
    // 1 so the two arrangements coincide.
    let tree = tree_of_triangulation(5, vec![(0, 2), (0, 3)]).unwrap();
    let sk = tree.skeleton();
    let mg = sk.matroid().unwrap();
    let mut cols = Vec::new();
    for &(t, h) in &sk.edges {
        let mut v = vec![rat_int(0); sk.vertices];
        v[t] = rat_int(1);
        v[h] = rat_int(-1);
        cols.push(v);
    }
    let config = VectorConfiguration::new(sk.vertices, cols);
    assert_eq!(
        from_vectors(&config).unwrap().circuits(),
        mg.circuits(),
        "cycle enumeration matches the vector route"
    );
    let sigmas = enumerate_colocalizations(&mg, 1000).unwrap();
    let coherent = sigmas
        .iter()
        .filter(|s| is_coherent_graphical(&mg, s).unwrap().is_some())
        .count();
    // The pentagon fan has tree T_{0,1}: every colocalization coherent.
    assert_eq!(tree.as_t_ab(), Some((0, 1)));
    assert_eq!(BigInt::from(sigmas.len() as u64), coherent_count(0, 1));
    assert_eq!(coherent, sigmas.len());
    for sigma in sigmas.iter().take(10) {
        assert_eq!(
            is_coherent_graphical(&mg, sigma).unwrap().is_some(),
            is_coherent_realized(&config, &mg, sigma).unwrap().is_some()
        );
    }
}

#[test]
fn arrangement_sign_vectors_separate_colocalizations() {
    // Each coherent colocalization of T_{a,b} is a region: the witness λ,
    // translated to arrangement coordinates, produces a distinct sign
    // vector on the hyperplane normals, and the count matches the closed
    // formula.
    let (a, b) = (1usize, 1usize);
    let tree = t_ab(a, b).unwrap();
    let hyperplanes = arrangement_hyperplanes(a, b);
    assert_eq!(hyperplanes.len(), tree.subtrees.len());
    let triples = las_vergnas_triples(&tree);
    let k = tree.subtrees.len();
    let mut sign_vectors: std::collections::BTreeSet<Vec<Sign>> = Default::default();
    let mut total = 0usize;
    'outer: for bits_ in 0..(1u32 << k) {
        let values: Vec<Sign> = (0..k)
            .map(|i| {
                if bits_ & (1 << i) == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        let gamma = GammaMap { values };
        for &(t1, t2, t3) in &triples {
            let g2 = gamma.value_on(&tree, t2);
            if !g2.is_zero()
                && g2 != gamma.value_on(&tree, t1)
                && g2 != gamma.value_on(&tree, t3)
            {
                continue 'outer;
            }
        }
        total += 1;
        let mu = is_coherent_tree(&tree, &gamma)
            .unwrap()
            .expect("T_{a,b} colocalizations are coherent");
        // μ gives λ on tree vertices; the subtree sums realize the γ signs
        // and hence a full arrangement sign vector.
        let sv: Vec<Sign> = tree
            .subtrees
            .iter()
            .map(|&sub| {
                let sum: Rat = omsep_core::signed_set::bits(sub)
                    .map(|v| mu[v].clone())
                    .sum();
                use num_traits::Signed;
                if sum.is_positive() {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        assert_eq!(
            sv,
            gamma.values,
            "witness must land in the region of its colocalization"
        );
        sign_vectors.insert(sv);
    }
    use num_traits::ToPrimitive;
    let formula = coherent_count(a, b).to_usize().unwrap();
    assert_eq!(total, formula);
    assert_eq!(sign_vectors.len(), formula);
}

#[test]
fn purity_invariant_under_simple_operations() {
    // Adding a loop, a coloop, or a parallel element preserves the purity
    // verdict.
    let base = alternating(5, 2);
    let base_pure = purity_check(&base, 10).unwrap().is_pure();
    assert!(base_pure);
    // Loop: a new element forming a one-element circuit.
    let mut circuits: Vec<SignedSet> = base.circuits().to_vec();
    circuits.push(SignedSet::new(1 << 5, 0));
    let with_loop = OrientedMatroid::new(GroundSet::numeric(6), circuits).unwrap();
    assert_eq!(purity_check(&with_loop, 10).unwrap().is_pure(), base_pure);
    // Coloop: a new element in no circuit.
    let with_coloop =
        OrientedMatroid::new(GroundSet::numeric(6), base.circuits().to_vec()).unwrap();
    assert_eq!(purity_check(&with_coloop, 10).unwrap().is_pure(), base_pure);
    // Parallel copy of element 0 via the vector construction.
    let mut cols: Vec<Vec<Rat>> = (1..=5).map(|t| vec![rat_int(1), rat_int(t)]).collect();
    cols.push(cols[0].clone());
    let with_parallel = from_vectors(&VectorConfiguration::new(2, cols)).unwrap();
    assert_eq!(
        purity_check(&with_parallel, 10).unwrap().is_pure(),
        base_pure
    );
    // Non-pure side: K4 plus a parallel edge stays non-pure.
    let k4 = graphsep::k4();
    let mut edges = k4.edges.clone();
    edges.push(edges[0]);
    let bigger = from_digraph(&DirectedGraph::new(4, edges)).unwrap();
    assert!(!purity_check(&bigger, 10).unwrap().is_pure());
    // Minors of pure matroids stay pure.
    let pure6 = alternating(6, 3);
    for e in 0..6 {
        assert!(purity_check(&pure6.delete(e).unwrap(), 10).unwrap().is_pure());
        assert!(purity_check(&pure6.contract(e).unwrap(), 10).unwrap().is_pure());
    }
}

#[test]
fn epsilon_profile_lemma_on_dual_alternating() {
    // Separated collections on (C^{6,2})^* produce admissible ε-profiles;
    // complete collections with maximal profiles are the Type III ones.
    let m = alternating(6, 2).dual();
    let full = m.ground().full_mask();
    let cycle = corank2_circuit_cycle(&m, full).unwrap();
    let sigmas = enumerate_colocalizations(&m, 100).unwrap();
    assert_eq!(sigmas.len(), 12, "2n colocalizations in corank 2");
    for sigma in &sigmas {
        let s = collection_of(&m, sigma).unwrap();
        let eps = epsilon_profile(&m, &s, &cycle).unwrap();
        assert!(epsilon_profile_admissible(&eps));
        assert_eq!(
            eps.iter().filter(|e| e.is_zero()).count(),
            1,
            "maximal by size ⇒ exactly one zero"
        );
    }
    // A non-maximal separated collection keeps the lemma but gains zeros.
    let partial = Collection::new(vec![0, mask(&[0])]);
    let eps = epsilon_profile(&m, &partial, &cycle).unwrap();
    assert!(epsilon_profile_admissible(&eps));
    assert!(eps.iter().filter(|e| e.is_zero()).count() > 1);
}

#[test]
fn vinberg_zero_subtrees_are_certified() {
    // D̂_5: the designed cross-fork sets plus the two same-fork sets are
    // the only zero subtrees of the generic labeling.
    let tree = triangulation_from_tree(&d_hat_tree(5).unwrap()).unwrap();
    let (lambda, gamma) = vinberg_noncoherent_gamma(&tree, VinbergKind::DHat).unwrap();
    let n = tree.n_nodes();
    use num_traits::Zero;
    let zero_subtrees: Vec<u64> = tree
        .subtrees
        .iter()
        .copied()
        .filter(|&s| {
            let total: Rat = omsep_core::signed_set::bits(s).map(|v| lambda[v].clone()).sum();
            total.is_zero()
        })
        .collect();
    assert_eq!(zero_subtrees.len(), 6);
    for &s in &zero_subtrees {
        // Each zero subtree contains all interior vertices and two leaves.
        let leaves: Vec<usize> = (0..n).filter(|&v| tree.degree(v) == 1).collect();
        let leaf_count = leaves.iter().filter(|&&l| s & (1 << l) != 0).count();
        assert_eq!(leaf_count, 2);
    }
    assert!(is_g_colocalization(&tree, &gamma));
    assert!(is_coherent_tree(&tree, &gamma).unwrap().is_none());
}
