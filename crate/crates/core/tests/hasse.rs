mod common;

use std::collections::BTreeSet;

use dyck_heyting::{DyckWord, HeightSeqA, HeightSeqB, HeytingPath, LatticeSnapshot, Params, WordKind};

fn edge_set<P: HeytingPath>(
    snap: &LatticeSnapshot<P>,
    nodes: &[P],
    edges: &[(usize, usize)],
) -> BTreeSet<(usize, usize)> {
    let id = |v: usize| snap.id_of(&nodes[v - 1]).expect("node is an element");
    edges.iter().map(|&(lo, hi)| (id(lo), id(hi))).collect()
}

#[test]
fn type_a_hasse_diagram_matches_reference() {
    let snap = LatticeSnapshot::<HeightSeqA>::enumerate(Params::A { n: 4 }).unwrap();
    let nodes: Vec<HeightSeqA> = common::A4_NODES
        .iter()
        .map(|(h, _)| HeightSeqA::new(h.split(',').map(|x| x.parse().unwrap()).collect()).unwrap())
        .collect();
    let drawn = edge_set(&snap, &nodes, &common::A4_EDGES);
    let computed: BTreeSet<(usize, usize)> = snap.covers().iter().copied().collect();
    assert_eq!(drawn, computed);
    for (p, (_, regular)) in nodes.iter().zip(common::A4_NODES) {
        assert_eq!(p.is_regular(), regular, "{p}");
    }
}

#[test]
fn type_b_hasse_diagram_matches_reference() {
    let snap = LatticeSnapshot::<HeightSeqB>::enumerate(Params::B { n: 3 }).unwrap();
    let nodes: Vec<HeightSeqB> = common::B3_NODES
        .iter()
        .map(|(pts, _)| {
            let word = DyckWord::new(common::decode_points(pts), WordKind::B).unwrap();
            HeightSeqB::from_word(&word).unwrap()
        })
        .collect();
    assert_eq!(nodes.iter().collect::<BTreeSet<_>>().len(), 20);
    let drawn = edge_set(&snap, &nodes, &common::B3_EDGES);
    let computed: BTreeSet<(usize, usize)> = snap.covers().iter().copied().collect();
    assert_eq!(drawn, computed);
    for (p, (_, regular)) in nodes.iter().zip(common::B3_NODES) {
        assert_eq!(p.is_regular(), regular, "{p}");
    }
}
