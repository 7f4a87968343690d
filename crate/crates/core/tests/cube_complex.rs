use std::collections::BTreeMap;

use cumulant_core::cube::{
    cell_boundary, cell_to_map, cells, cells_by_dimension, census, cumulant_graph,
    euler_characteristic, hypercube_isomorphism, verify_cell, vertex_sum, CubeCell, SquareType,
};
use cumulant_core::cumulants::CumulantContext;
use cumulant_core::hom::{
    cumulant_map, iterated, maps_equal_on_truncation, morphism_component, SignConvention,
    TruncationGrid,
};

const A: SignConvention = SignConvention::A;

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn graphs_are_hypercube_skeletons() {
    for n in 2..=8 {
        let g = cumulant_graph(n).unwrap();
        assert_eq!(g.vertices.len(), 1 << (n - 1));
        assert_eq!(g.edges.len(), (n - 1) << (n - 2));
        assert!(g.is_regular(n - 1), "n={n}");
        assert!(g.is_connected());
        assert!(g.signs_alternate());
        assert!(hypercube_isomorphism(n).unwrap().verify(&g), "n={n}");
    }
}

#[test]
fn isomorphism_examples() {
    let iso = hypercube_isomorphism(3).unwrap();
    let find = |s: &str| {
        iso.pairs
            .iter()
            .find(|(c, _)| c.to_string() == s)
            .map(|(_, cuts)| cuts.iter().copied().collect::<Vec<_>>())
            .unwrap()
    };
    assert_eq!(find("(1,1,1)"), vec![1, 2]);
    assert_eq!(find("(3)"), Vec::<usize>::new());
}

#[test]
fn cell_counts_and_euler_characteristic() {
    for n in 2..=8 {
        let counts = cells_by_dimension(n).unwrap();
        for (k, &c) in counts.iter().enumerate() {
            assert_eq!(c, binomial(n - 1, k) << (n - 1 - k));
        }
        assert_eq!(cells(n).unwrap().len(), 3usize.pow(n as u32 - 1));
        assert_eq!(euler_characteristic(n).unwrap(), 1);
    }
    assert_eq!(cells_by_dimension(4).unwrap(), vec![8, 12, 6, 1]);
}

#[test]
fn boundary_squared_cancels() {
    for n in 2..=6 {
        for cell in cells(n).unwrap().iter().filter(|c| c.dimension() >= 2) {
            let mut total: BTreeMap<CubeCell, i64> = BTreeMap::new();
            for (s, facet) in cell_boundary(cell).unwrap() {
                assert_eq!(facet.dimension() + 1, cell.dimension());
                for (t, f) in cell_boundary(&facet).unwrap() {
                    *total.entry(f).or_default() += (s * t) as i64;
                }
            }
            assert!(total.values().all(|&v| v == 0), "{cell}");
        }
    }
}

#[test]
fn edges_match_single_bit_flips_of_one_cells() {
    for n in 2..=6 {
        let g = cumulant_graph(n).unwrap();
        let one_cells: Vec<String> = cells(n)
            .unwrap()
            .into_iter()
            .filter(|c| c.dimension() == 1)
            .map(|c| c.to_string())
            .collect();
        let mut edge_cells: Vec<String> = g.edges.iter().map(|e| e.cell.clone()).collect();
        edge_cells.sort();
        let mut expected = one_cells;
        expected.sort();
        assert_eq!(edge_cells, expected);
    }
}

#[test]
fn named_cells() {
    let grid = TruncationGrid::new(3);
    let m = cell_to_map(3, &"FF".parse().unwrap(), A).unwrap();
    assert!(maps_equal_on_truncation(&m, &morphism_component(3), grid)
        .unwrap()
        .passed());
    // p_3 = -I_3 under the desuspension sign
    assert!(maps_equal_on_truncation(&m, &iterated(3).neg(), grid)
        .unwrap()
        .passed());
}

#[test]
fn vertices_sum_to_the_cumulant() {
    let ctx = CumulantContext::integration();
    for n in 2..=4 {
        let v = maps_equal_on_truncation(
            &vertex_sum(n, A).unwrap(),
            &cumulant_map(&ctx, n),
            TruncationGrid::new(if n == 4 { 3 } else { 4 }),
        )
        .unwrap();
        assert!(v.passed(), "n={n}: {v:?}");
    }
}

#[test]
fn every_cell_verifies_up_to_four_inputs() {
    for n in 2..=4 {
        let (c, verdicts) = census(n, 3, A).unwrap();
        for v in &verdicts {
            assert!(v.passed(), "{v:?}");
        }
        assert_eq!(c.checks_passed, c.checks_total);
        if n == 4 {
            assert!(c.square_types[&SquareType::SingleBlock] > 0);
            assert!(c.square_types[&SquareType::TwoBlocks] > 0);
        }
    }
}

#[test]
fn top_cell_of_four_inputs() {
    let v = verify_cell(4, &"FFF".parse().unwrap(), 3, A).unwrap();
    assert!(v.passed(), "{v:?}");
}

#[test]
fn dot_export() {
    let dot = cumulant_graph(3).unwrap().to_dot();
    assert_eq!(dot.matches(" -- ").count(), 4);
    assert!(dot.contains("label=\"p2(a,bc)\""));
    assert!(dot.contains("label=\"(1,2)\""));
}
