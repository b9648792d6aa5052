//! Counter-keyed random streams: the draw for sample `i` depends only on
//! `(seed, i)`, never on how many other samples were drawn or in which order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal, Uniform};

use crate::Real;

/// Generator for the `index`-th stream under `seed`.
pub fn stream(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Uniform direction on `S^{dim-1}` for sample `index`.
pub fn unit_direction<T: Real>(seed: u64, index: u64, dim: usize) -> Vec<T> {
    let mut rng = stream(seed, index);
    loop {
        let g: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(&mut rng)).collect();
        let r = g.iter().map(|x| x * x).sum::<f64>().sqrt();
        if r > 1e-150 {
            return g.into_iter().map(|x| T::lit(x / r)).collect();
        }
    }
}

/// `count` uniform reals in `[lo, hi)` from stream `index`.
pub fn uniform_vec(seed: u64, index: u64, count: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = stream(seed, index);
    let dist = Uniform::new(lo, hi).expect("valid range");
    (0..count).map(|_| dist.sample(&mut rng)).collect()
}

/// Standard normal draws from stream `index`.
pub fn normal_vec(seed: u64, index: u64, count: usize) -> Vec<f64> {
    let mut rng = stream(seed, index);
    (0..count).map(|_| StandardNormal.sample(&mut rng)).collect()
}
