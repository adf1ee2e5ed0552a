//! graph6 codes and edge sets produced by an independent encoder
//! (networkx `to_graph6_bytes`).

use edgegp::graph6::{parse_graph6, parse_graph6_lines, write_graph6, HEADER};
use edgegp::Graph;

struct Case {
    name: &'static str,
    n: usize,
    code: &'static str,
    edges: &'static [(usize, usize)],
}

const CORPUS: &[Case] = &[
    Case {
        name: "petersen",
        n: 10,
        code: "IheA@GUAo",
        edges: &[(0, 1), (0, 4), (0, 5), (1, 2), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8), (4, 9), (5, 7), (5, 8), (6, 8), (6, 9), (7, 9)],
    },
    Case {
        name: "k1",
        n: 1,
        code: "@",
        edges: &[],
    },
    Case {
        name: "k6",
        n: 6,
        code: "E~~w",
        edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5)],
    },
    Case {
        name: "p62",
        n: 62,
        code: "}hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????_",
        edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 13), (13, 14), (14, 15), (15, 16), (16, 17), (17, 18), (18, 19), (19, 20), (20, 21), (21, 22), (22, 23), (23, 24), (24, 25), (25, 26), (26, 27), (27, 28), (28, 29), (29, 30), (30, 31), (31, 32), (32, 33), (33, 34), (34, 35), (35, 36), (36, 37), (37, 38), (38, 39), (39, 40), (40, 41), (41, 42), (42, 43), (43, 44), (44, 45), (45, 46), (46, 47), (47, 48), (48, 49), (49, 50), (50, 51), (51, 52), (52, 53), (53, 54), (54, 55), (55, 56), (56, 57), (57, 58), (58, 59), (59, 60), (60, 61)],
    },
    Case {
        name: "empty7",
        n: 7,
        code: "F????",
        edges: &[],
    },
    Case {
        name: "gnp9",
        n: 9,
        code: "HgWpW?I",
        edges: &[(0, 1), (1, 2), (1, 4), (2, 4), (2, 5), (2, 6), (3, 5), (4, 6), (4, 8), (5, 6), (6, 8)],
    },
    Case {
        name: "gnp13",
        n: 13,
        code: "LZYYuZ]mbM]TYH",
        edges: &[(0, 2), (0, 5), (0, 7), (0, 8), (0, 9), (0, 11), (1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (1, 8), (1, 10), (1, 11), (1, 12), (2, 3), (2, 4), (2, 9), (2, 10), (2, 11), (2, 12), (3, 5), (3, 6), (3, 8), (3, 9), (3, 11), (4, 5), (4, 6), (4, 7), (4, 8), (4, 9), (4, 12), (5, 7), (5, 8), (5, 10), (6, 8), (6, 9), (6, 10), (6, 11), (7, 10), (8, 11), (8, 12), (10, 11), (11, 12)],
    },
    Case {
        name: "gnp20",
        n: 20,
        code: "S_??A??_?D_?O?AI_AG?cE?A?G?C?gOAG",
        edges: &[(0, 1), (0, 9), (0, 17), (1, 7), (1, 12), (3, 16), (4, 13), (4, 16), (4, 19), (6, 10), (6, 18), (8, 10), (8, 13), (9, 10), (9, 14), (9, 15), (10, 13), (10, 17), (12, 13), (12, 15), (13, 14), (13, 19), (15, 18), (17, 18), (17, 19)],
    },
    Case {
        name: "gnp33",
        n: 33,
        code: "`?CD??_?OO??E?c??@???_?@??O?GAO@?????A?AC?W???@ACA_?CA??H_??I????????C??B??@??GAOCY??BC?K",
        edges: &[(0, 6), (0, 13), (0, 16), (1, 17), (1, 19), (1, 22), (2, 6), (2, 8), (3, 4), (3, 12), (3, 13), (4, 10), (4, 12), (4, 19), (4, 24), (5, 27), (5, 29), (6, 22), (7, 9), (7, 26), (7, 27), (7, 31), (9, 24), (9, 25), (10, 14), (10, 21), (10, 26), (10, 31), (11, 18), (11, 26), (12, 32), (13, 32), (14, 19), (14, 30), (15, 17), (16, 22), (16, 24), (16, 25), (17, 22), (17, 32), (18, 24), (18, 31), (22, 23), (22, 31), (23, 31), (24, 29), (25, 29), (25, 31), (28, 32), (29, 30), (29, 32)],
    },
    Case {
        name: "gnp62",
        n: 62,
        code: "}????A?G?_@?G???I?@??A?K?????????A?????@O?????????O???O?????????????D????O???A??A???G@@??A???_?A??????????????@??C_A??Q??g?????AE???????????????O?????O?G?????G@??C?`???G?@C?G?o?CO??OC???_O????G???A???C????A@???@???_??????O??C???????????COCC?@?@??A??C@?@??????@??G?C??H?C??G_??O????????????????@?????@???_??G??@??DC???",
        edges: &[(0, 8), (0, 38), (0, 47), (0, 54), (1, 14), (1, 29), (2, 9), (2, 12), (2, 15), (2, 22), (2, 57), (2, 61), (3, 10), (3, 14), (3, 38), (3, 50), (3, 51), (4, 11), (4, 16), (4, 22), (4, 32), (4, 33), (5, 43), (5, 57), (6, 20), (6, 55), (7, 34), (7, 44), (8, 47), (9, 37), (9, 46), (10, 46), (10, 50), (12, 37), (13, 31), (13, 32), (13, 56), (14, 16), (14, 45), (14, 54), (14, 55), (15, 16), (15, 52), (15, 57), (17, 38), (19, 24), (19, 25), (19, 32), (19, 38), (19, 39), (20, 48), (21, 49), (22, 37), (23, 44), (23, 60), (23, 61), (24, 33), (24, 39), (24, 46), (25, 30), (25, 39), (26, 54), (26, 55), (27, 28), (27, 29), (28, 46), (28, 56), (29, 36), (29, 45), (29, 47), (32, 44), (32, 57), (33, 45), (34, 42), (34, 50), (35, 53), (36, 47), (36, 57), (37, 44), (39, 41), (39, 53), (39, 61), (41, 43), (41, 56), (41, 61), (42, 60), (43, 54), (44, 45), (45, 61), (46, 48), (46, 51), (46, 59), (47, 53), (55, 57)],
    },
];

fn sorted_edges(g: &Graph) -> Vec<(usize, usize)> {
    let mut e = g.edges().to_vec();
    e.sort_unstable();
    e
}

#[test]
fn decodes_reference_codes() {
    for case in CORPUS {
        let g = parse_graph6(case.code).unwrap_or_else(|e| panic!("{}: {e}", case.name));
        assert_eq!(g.vertex_count(), case.n, "{}", case.name);
        assert_eq!(sorted_edges(&g), case.edges, "{}", case.name);
    }
}

#[test]
fn encodes_reference_codes() {
    for case in CORPUS {
        let g = Graph::new(case.n, case.edges.iter().copied()).unwrap();
        assert_eq!(write_graph6(&g), case.code, "{}", case.name);
    }
}

#[test]
fn stream_with_header() {
    let codes: Vec<&str> = CORPUS.iter().map(|c| c.code).collect();
    let text = format!("{HEADER}{}\n", codes.join("\n"));
    let graphs = parse_graph6_lines(&text).unwrap();
    assert_eq!(graphs.len(), CORPUS.len());
    for (g, case) in graphs.iter().zip(CORPUS) {
        assert_eq!(write_graph6(g), case.code);
    }
}
