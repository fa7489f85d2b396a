use star_spectra::enumerate::{enumerate_graphs, GraphClass};

#[test]
fn larger_known_counts() {
    let want = [
        (7, GraphClass::All, 1044),
        (8, GraphClass::All, 12346),
        (9, GraphClass::All, 274668),
        (9, GraphClass::Connected, 261080),
        (7, GraphClass::Connected, 853),
        (8, GraphClass::Connected, 11117),
        (7, GraphClass::Bipartite, 88),
        (8, GraphClass::Bipartite, 303),
        (9, GraphClass::Bipartite, 1119),
        (10, GraphClass::Bipartite, 5479),
        (7, GraphClass::ConnectedBipartite, 44),
        (8, GraphClass::ConnectedBipartite, 182),
        (9, GraphClass::ConnectedBipartite, 730),
        (10, GraphClass::ConnectedBipartite, 4032),
    ];
    for (n, class, count) in want {
        assert_eq!(enumerate_graphs(n, class).unwrap().len(), count, "n = {n}, {class}");
    }
}
