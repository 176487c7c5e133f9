//! Values produced by `tools/oracle.py` (box enumeration of roots and
//! networkx typing of induced subgraphs), frozen here.

use ade_quiver::bordism::enumerate_configurations;
use ade_quiver::{AdeType, RootSystem};

/// (type, number of roots, maximal root, number of configurations, largest configuration)
const TABLE: [(&str, usize, &[i64], usize, usize); 16] = [
    ("A1", 2, &[1], 2, 1),
    ("A2", 6, &[1, 1], 3, 1),
    ("A3", 12, &[1, 1, 1], 5, 2),
    ("A4", 20, &[1, 1, 1, 1], 7, 2),
    ("A5", 30, &[1, 1, 1, 1, 1], 11, 3),
    ("A6", 42, &[1, 1, 1, 1, 1, 1], 15, 3),
    ("A7", 56, &[1, 1, 1, 1, 1, 1, 1], 22, 4),
    ("A8", 72, &[1, 1, 1, 1, 1, 1, 1, 1], 30, 4),
    ("D4", 24, &[1, 2, 1, 1], 7, 3),
    ("D5", 40, &[1, 2, 2, 1, 1], 12, 3),
    ("D6", 60, &[1, 2, 2, 2, 1, 1], 19, 4),
    ("D7", 84, &[1, 2, 2, 2, 2, 1, 1], 27, 4),
    ("D8", 112, &[1, 2, 2, 2, 2, 2, 1, 1], 42, 5),
    ("E6", 72, &[1, 2, 3, 2, 1, 2], 17, 3),
    ("E7", 126, &[2, 3, 4, 3, 2, 1, 2], 29, 4),
    ("E8", 240, &[2, 4, 6, 5, 4, 3, 2, 3], 41, 4),
];

fn t(s: &str) -> AdeType {
    s.parse().unwrap()
}

#[test]
fn root_counts_and_maximal_roots() {
    for (label, count, maximal, _, _) in TABLE {
        let rs = RootSystem::generate(t(label));
        assert_eq!(rs.roots().len(), count, "{label}");
        assert_eq!(rs.maximal(), maximal, "{label}");
    }
}

#[test]
fn configuration_counts() {
    for (label, _, _, configs, largest) in TABLE {
        let all = enumerate_configurations(t(label));
        assert_eq!(all.len(), configs, "{label}");
        assert_eq!(all.iter().map(Vec::len).max(), Some(largest), "{label}");
    }
}

#[test]
fn small_configuration_lists() {
    let cases: [(&str, &[&[&str]]); 3] = [
        ("A3", &[&[], &["A1"], &["A1", "A1"], &["A2"], &["A3"]]),
        ("A4", &[&[], &["A1"], &["A1", "A1"], &["A1", "A2"], &["A2"], &["A3"], &["A4"]]),
        ("D4", &[&[], &["A1"], &["A1", "A1"], &["A1", "A1", "A1"], &["A2"], &["A3"], &["D4"]]),
    ];
    for (label, expected) in cases {
        let got: Vec<Vec<String>> = enumerate_configurations(t(label))
            .into_iter()
            .map(|c| c.iter().map(ToString::to_string).collect())
            .collect();
        let want: Vec<Vec<String>> =
            expected.iter().map(|c| c.iter().map(|s| s.to_string()).collect()).collect();
        assert_eq!(got, want, "{label}");
    }
}
