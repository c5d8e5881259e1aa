#![allow(dead_code)]

use bentgraph_core::bits::BitMatrix;
use bentgraph_core::graph::DenseGraph;
use bentgraph_core::BooleanFunction;
use rand::Rng;

pub fn random_function(n: usize, rng: &mut impl Rng) -> BooleanFunction {
    BooleanFunction::from_fn(n, |_| rng.gen())
}

pub fn random_invertible(n: usize, rng: &mut impl Rng) -> BitMatrix {
    loop {
        let a = BitMatrix::from_fn(n, n, |_, _| rng.gen());
        if a.rank() == n {
            return a;
        }
    }
}

pub fn random_graph(v: usize, p: f64, rng: &mut impl Rng) -> DenseGraph {
    let mut edges = Vec::new();
    for i in 0..v {
        for j in i + 1..v {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    DenseGraph::from_edges(v, edges).unwrap()
}

pub fn random_permutation(v: usize, rng: &mut impl Rng) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..v).collect();
    p.shuffle(rng);
    p
}

/// `Σ_y (-1)^{f(y) + <x, y>}` summed term by term.
pub fn walsh_direct(f: &BooleanFunction, x: usize) -> i32 {
    (0..f.len())
        .map(|y| if (f.value(y) ^ ((x & y).count_ones() & 1) as u8) == 0 { 1 } else { -1 })
        .sum()
}
