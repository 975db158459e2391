//! Seeded sampling for law checks.
//!
//! Sample `i` of a run with seed `s` draws from its own SplitMix64 stream
//! seeded with `s ^ (i * 0x9E3779B97F4A7C15)`, so the operands of each sample
//! depend only on `(s, i)` and samples can be evaluated in any order or in
//! parallel.
//!
//! A coefficient is `n/d` with `n = -9 + (next() % 19)` and
//! `d = 1 + (next() % 9)`, numerator drawn first. Coefficients are drawn in
//! index order, and the operands of one sample are drawn one after another
//! from the same stream.

use crate::scalar::rat;
use crate::{Element, Rational};

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

/// SplitMix64 generator.
#[derive(Debug, Clone)]
pub struct RandomStream {
    state: u64,
}

impl RandomStream {
    pub fn new(seed: u64) -> Self {
        RandomStream { state: seed }
    }

    /// Independent stream for sample `index` of a run seeded with `seed`.
    pub fn for_sample(seed: u64, index: u64) -> Self {
        RandomStream::new(seed ^ index.wrapping_mul(GOLDEN_GAMMA))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(GOLDEN_GAMMA);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn next_rational(&mut self) -> Rational {
        let n = (self.next_u64() % 19) as i64 - 9;
        let d = (self.next_u64() % 9) as i64 + 1;
        rat(n, d)
    }
}

pub fn sample_element(level: usize, stream: &mut RandomStream) -> Element {
    let coeffs = (0..1usize << level)
        .map(|_| stream.next_rational())
        .collect();
    Element::new(level, coeffs).expect("coefficient count matches level")
}

/// Draws until the element is nonzero.
pub fn sample_nonzero(level: usize, stream: &mut RandomStream) -> Element {
    loop {
        let x = sample_element(level, stream);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Draws `dim` coefficients as a plain vector.
pub fn sample_coeffs(dim: usize, stream: &mut RandomStream) -> Vec<Rational> {
    (0..dim).map(|_| stream.next_rational()).collect()
}
