#![allow(dead_code)]
//! Reference Hasse diagrams of type A at n = 4 and type B at n = 3: node
//! labels, regular flags, and cover edges between 1-based node numbers.

use dyck_heyting::Step;

/// Type A, semilength 4: node heights and whether the node is regular.
pub const A4_NODES: [(&str, bool); 14] = [
    ("1,2,3,4", true),
    ("2,2,3,4", true),
    ("1,3,3,4", true),
    ("1,2,4,4", true),
    ("2,3,3,4", false),
    ("2,2,4,4", true),
    ("1,3,4,4", false),
    ("3,3,3,4", true),
    ("2,3,4,4", false),
    ("1,4,4,4", true),
    ("3,3,4,4", false),
    ("2,4,4,4", false),
    ("3,4,4,4", false),
    ("4,4,4,4", true),
];

pub const A4_EDGES: [(usize, usize); 21] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (2, 6),
    (3, 5),
    (3, 7),
    (4, 6),
    (4, 7),
    (5, 9),
    (6, 9),
    (7, 9),
    (5, 8),
    (7, 10),
    (8, 11),
    (9, 11),
    (9, 12),
    (10, 12),
    (11, 13),
    (12, 13),
    (13, 14),
];

/// Type B, semilength 3: each node is drawn as the list of lattice points
/// after each step, `x/y/x/y/...` in units of 0.4.
pub const B3_NODES: [(&str, bool); 20] = [
    ("0/.4/.4/.4/.4/.8/.8/.8/.8/1.2/1.2/1.2", true),
    ("0/.4/0/.8/.4/.8/.8/.8/.8/1.2/1.2/1.2", true),
    ("0/.4/.4/.4/.4/.8/.4/1.2/.8/1.2/1.2/1.2", true),
    ("0/.4/.4/.4/.4/.8/.8/.8/.8/1.2/.8/1.6", true),
    ("0/.4/0/.8/.4/.8/.4/1.2/.8/1.2/1.2/1.2", false),
    ("0/.4/0/.8/.4/.8/.8/.8/.8/1.2/.8/1.6", true),
    ("0/.4/.4/.4/.4/.8/.4/1.2/.8/1.2/.8/1.6", false),
    ("0/.4/0/.8/0/1.2/.4/1.2/.8/1.2/1.2/1.2", true),
    ("0/.4/0/.8/.4/.8/.4/1.2/.8/1.2/.8/1.6", false),
    ("0/.4/.4/.4/.4/.8/.4/1.2/.4/1.6/.8/1.6", false),
    ("0/.4/0/.8/0/1.2/.4/1.2/.8/1.2/.8/1.6", false),
    ("0/.4/0/.8/.4/.8/.4/1.2/.4/1.6/.8/1.6", false),
    ("0/.4/.4/.4/.4/.8/.4/1.2/.4/1.6/.4/2", true),
    ("0/.4/0/.8/0/1.2/.4/1.2/.4/1.6/.8/1.6", false),
    ("0/.4/0/.8/.4/.8/.4/1.2/.4/1.6/.4/2", false),
    ("0/.4/0/.8/0/1.2/0/1.6/.4/1.6/.8/1.6", false),
    ("0/.4/0/.8/0/1.2/.4/1.2/.4/1.6/.4/2", false),
    ("0/.4/0/.8/0/1.2/0/1.6/.4/1.6/.4/2", false),
    ("0/.4/0/.8/0/1.2/0/1.6/0/2/.4/2", false),
    ("0/.4/0/.8/0/1.2/0/1.6/0/2/0/2.4", true),
];

pub const B3_EDGES: [(usize, usize); 30] = [
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 5),
    (2, 6),
    (3, 5),
    (3, 7),
    (4, 6),
    (4, 7),
    (5, 8),
    (5, 9),
    (6, 9),
    (7, 9),
    (7, 10),
    (8, 11),
    (9, 11),
    (9, 12),
    (10, 12),
    (10, 13),
    (11, 14),
    (12, 14),
    (12, 15),
    (13, 15),
    (14, 16),
    (14, 17),
    (15, 17),
    (16, 18),
    (17, 18),
    (18, 19),
    (19, 20),
];

/// Steps of a path drawn as a point list starting after the origin.
pub fn decode_points(points: &str) -> Vec<Step> {
    let coords: Vec<i64> =
        points.split('/').map(|c| (c.parse::<f64>().expect("coordinate") / 0.4).round() as i64).collect();
    let mut prev = (0, 0);
    coords
        .chunks(2)
        .map(|xy| {
            let step = if xy[1] > prev.1 { Step::U } else { Step::R };
            prev = (xy[0], xy[1]);
            step
        })
        .collect()
}
