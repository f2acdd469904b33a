mod common;

use facelattice::oracle::{brute_force_lattice, gen_cross, gen_cube, gen_cyclic, gen_simplex};
use facelattice::{
    build_face_lattice, build_face_lattice_with_stats, dualize, parse_incidence, BuildOptions,
    FaceLattice, HasseDiagram, Incidence, Node,
};
use proptest::prelude::*;

fn build(inc: &Incidence, restrict: bool, auto_dualize: bool) -> FaceLattice {
    build_face_lattice(inc, &BuildOptions { restrict, auto_dualize }).unwrap()
}

/// The lattice of the transpose, read off `lattice` by sending each face to
/// the facets containing it.
fn mirrored(lattice: &FaceLattice, inc: &Incidence) -> FaceLattice {
    let d = lattice.dim();
    let nodes = lattice
        .nodes()
        .iter()
        .map(|node| Node {
            dim: d - 1 - node.dim,
            label: (0..inc.facet_count())
                .filter(|&f| node.label.iter().all(|&v| inc.contains(f, v)))
                .collect(),
        })
        .collect();
    let arcs = lattice.arcs().iter().map(|&(c, p)| (p, c)).collect();
    HasseDiagram::from_parts(nodes, arcs, lattice.top().unwrap(), Some(lattice.root()))
}

#[test]
fn all_option_combinations_agree() {
    for (name, inc) in common::oracle_instances() {
        let reference = build(&inc, true, true).canonical_form();
        for (restrict, dualize) in [(true, false), (false, true), (false, false)] {
            assert_eq!(
                build(&inc, restrict, dualize).canonical_form(),
                reference,
                "{name} restrict={restrict} dualize={dualize}"
            );
        }
    }
}

#[test]
fn transpose_gives_the_opposite_lattice() {
    for (name, inc) in common::oracle_instances() {
        let lattice = build(&inc, true, false);
        let dual = build(&dualize(&inc), true, false);
        assert_eq!(
            mirrored(&lattice, &inc).canonical_form(),
            dual.canonical_form(),
            "{name}"
        );
    }
}

#[test]
fn cross_polytopes_are_opposite_to_cubes() {
    for d in 1..=5 {
        let cube = gen_cube(d).unwrap();
        let cross = gen_cross(d).unwrap();
        assert_eq!(
            mirrored(&build(&cube, true, true), &cube).canonical_form(),
            build(&cross, true, true).canonical_form()
        );
        let mut f = build(&cube, true, true).f_vector();
        f.reverse();
        assert_eq!(build(&cross, true, true).f_vector(), f);
    }
    let octahedron = gen_cross(3).unwrap();
    assert_eq!(octahedron.vertex_count(), 6);
    assert_eq!(octahedron.facet_count(), 8);
    assert_eq!(octahedron.alpha(), 24);
}

#[test]
fn f_vectors_of_known_polytopes() {
    assert_eq!(build(&gen_cube(4).unwrap(), true, true).f_vector(), vec![16, 32, 24, 8]);
    assert_eq!(build(&gen_simplex(4).unwrap(), true, true).f_vector(), vec![5, 10, 10, 5]);
    assert_eq!(build(&gen_cyclic(4, 8).unwrap(), true, true).f_vector(), vec![8, 28, 40, 20]);
    let fixtures = common::fixtures();
    let f: Vec<Vec<usize>> = fixtures
        .iter()
        .map(|(_, inc)| build(inc, true, true).f_vector())
        .collect();
    assert_eq!(
        f,
        vec![vec![5, 5], vec![2], vec![6, 9, 5], vec![5, 8, 5], vec![20, 30, 12]]
    );
}

#[test]
fn repeated_builds_are_identical() {
    for (name, inc) in common::oracle_instances() {
        let a = build(&inc, true, true);
        let b = build(&inc, true, true);
        assert_eq!(a.nodes(), b.nodes(), "{name}");
        assert_eq!(a.arcs(), b.arcs(), "{name}");
    }
}

#[test]
fn non_polytope_input_is_rejected() {
    let inc = parse_incidence("4 3\n0\n1 2\n1\n2\n").unwrap();
    let err = build_face_lattice(&inc, &BuildOptions::default()).unwrap_err();
    assert!(matches!(err, facelattice::Error::Contract(_)), "{err}");
}

#[test]
fn dualized_runs_are_reported() {
    let (_, stats) = build_face_lattice_with_stats(&gen_cube(4).unwrap(), &BuildOptions::default())
        .unwrap();
    assert!(stats.dualized);
    let (_, stats) =
        build_face_lattice_with_stats(&gen_cross(4).unwrap(), &BuildOptions::default()).unwrap();
    assert!(!stats.dualized);
    assert!(stats.closures > 0 && stats.work > 0);
}

fn facet_lists() -> impl Strategy<Value = (usize, Vec<Vec<usize>>)> {
    (1usize..12).prop_flat_map(|n| {
        let row = proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 1..=n);
        (Just(n), proptest::collection::vec(row, 1..10))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cyclic_polytopes_match_the_oracle(n in 4usize..=10, d_offset in 0usize..8) {
        let d = 2 + d_offset % (n - 2);
        let inc = gen_cyclic(d, n).unwrap();
        let oracle = brute_force_lattice(&inc).unwrap();
        for (restrict, dualize) in [(true, true), (false, false)] {
            prop_assert_eq!(build(&inc, restrict, dualize).canonical_form(), oracle.canonical_form());
        }
    }

    #[test]
    fn incidence_text_round_trips((n, rows) in facet_lists()) {
        let inc = Incidence::from_facets(n, rows).unwrap();
        let text = inc.to_string();
        prop_assert_eq!(parse_incidence(&text).unwrap(), inc.clone());
        prop_assert_eq!(dualize(&dualize(&inc)), inc.clone());
        let alpha: usize = (0..inc.facet_count()).map(|f| inc.facet(f).len()).sum();
        prop_assert_eq!(inc.alpha(), alpha);
        prop_assert_eq!(dualize(&inc).alpha(), alpha);
    }
}
