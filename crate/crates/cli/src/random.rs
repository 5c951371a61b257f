//! Seeded random layers.
//!
//! Each of the nodes `1..=8` is present with probability 1/2. Each pair of
//! present nodes (self-loops included) carries an edge with probability 0.4,
//! with multiplicity uniform in `1..=3` and a uniform non-empty subset of the
//! five colors `c1..c5`.

use multilayer_order::{ColorUniverse, Layer};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const MAX_NODE: u32 = 8;
pub const EDGE_PROBABILITY: f64 = 0.4;
pub const MAX_MULTIPLICITY: u64 = 3;
pub const COLORS: [&str; 5] = ["c1", "c2", "c3", "c4", "c5"];

pub fn universe() -> ColorUniverse {
    ColorUniverse::new(COLORS)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_layer<R: Rng>(rng: &mut R, universe: &ColorUniverse) -> Layer {
    let nodes: Vec<u32> = (1..=MAX_NODE).filter(|_| rng.gen_bool(0.5)).collect();
    let mut layer = Layer::new(universe.clone()).with_nodes(nodes.iter().copied());
    for (a, &u) in nodes.iter().enumerate() {
        for &v in &nodes[a..] {
            if rng.gen_bool(EDGE_PROBABILITY) {
                let mult = rng.gen_range(1..=MAX_MULTIPLICITY);
                let mask: u8 = rng.gen_range(1..1 << COLORS.len());
                let colors = (0..COLORS.len()).filter(|i| mask & (1 << i) != 0).map(|i| COLORS[i]);
                layer.insert_edge(u, v, mult, colors).expect("each pair visited once");
            }
        }
    }
    layer
}
