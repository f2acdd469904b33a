mod common;

use facelattice::oracle::brute_force_covectors;
use facelattice::om::topes;
use facelattice::{
    build_covector_lattice, build_face_lattice, join_covectors, parse_incidence, BuildOptions,
    Covector, HasseDiagram, Node, Sign, SignVector,
};

#[test]
fn joins_are_least_upper_bounds() {
    for (name, cc) in common::om_fixtures() {
        let mut elements: Vec<Covector> = brute_force_covectors(cc.ground_size(), cc.vectors())
            .into_iter()
            .map(Covector::Vector)
            .collect();
        elements.push(Covector::Top);
        let below = |a: &Covector, b: &Covector| match (a, b) {
            (_, Covector::Top) => true,
            (Covector::Top, _) => false,
            (Covector::Vector(x), Covector::Vector(y)) => x.conforms_to(y),
        };
        for x in elements.iter().filter_map(Covector::as_vector) {
            for y in elements.iter().filter_map(Covector::as_vector) {
                let (cx, cy) = (Covector::Vector(x.clone()), Covector::Vector(y.clone()));
                let upper: Vec<&Covector> = elements
                    .iter()
                    .filter(|z| below(&cx, z) && below(&cy, z))
                    .collect();
                let least: Vec<&Covector> = upper
                    .iter()
                    .copied()
                    .filter(|z| upper.iter().all(|u| below(z, u)))
                    .collect();
                assert_eq!(least.len(), 1, "{name}: {x} and {y}");
                assert_eq!(&join_covectors(x, y).unwrap(), least[0], "{name}: {x} ∨ {y}");
            }
        }
    }
}

#[test]
fn nonnegative_covectors_of_a_point_set_give_its_face_lattice() {
    let (_, cc) = common::om_fixtures()
        .into_iter()
        .find(|(name, _)| name == "square_points")
        .unwrap();
    let lattice = build_covector_lattice(&cc).unwrap();
    assert_eq!(topes(&lattice).len(), 14);

    let keep: Vec<usize> = (0..lattice.node_count())
        .filter(|&id| match &lattice.node(id).label {
            Covector::Vector(v) => v.signs().iter().all(|&s| s != Sign::Minus),
            Covector::Top => false,
        })
        .collect();
    let index = |id: usize| keep.iter().position(|&k| k == id);
    let nodes: Vec<Node<Vec<usize>>> = keep
        .iter()
        .map(|&id| {
            let node = lattice.node(id);
            let v = node.label.as_vector().unwrap();
            Node {
                dim: 1 - node.dim,
                label: (0..v.len()).filter(|&i| v.signs()[i] == Sign::Zero).collect(),
            }
        })
        .collect();
    let arcs: Vec<(usize, usize)> = lattice
        .arcs()
        .iter()
        .filter_map(|&(c, p)| Some((index(p)?, index(c)?)))
        .collect();
    let zero = nodes.iter().position(|n| n.label.len() == 4).unwrap();
    let full_support = nodes.iter().position(|n| n.label.is_empty()).unwrap();
    let opposite = HasseDiagram::from_parts(nodes, arcs, full_support, Some(zero));

    let square = parse_incidence(common::SQUARE).unwrap();
    let faces = build_face_lattice(&square, &BuildOptions::default()).unwrap();
    assert_eq!(opposite.canonical_form(), faces.canonical_form());
}

#[test]
fn missing_negatives_are_completed() {
    let cc = facelattice::parse_cocircuits("3 3\n+0+\n0+-\n-0-\n").unwrap();
    assert_eq!(cc.len(), 4);
    let lattice = build_covector_lattice(&cc).unwrap();
    let v: SignVector = "0-+".parse().unwrap();
    assert!(lattice
        .nodes()
        .iter()
        .any(|n| n.label.as_vector() == Some(&v)));
}
