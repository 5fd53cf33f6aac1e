//! Deterministic randomness helpers shared by unit tests.

use crate::scalar::{Ctx, Scalar};
use crate::sextic::{MobiusMap, Sextic};

/// Small deterministic xorshift RNG for reproducible test cases.
pub struct TestRng(u64);

impl TestRng {
    pub fn new(seed: u64) -> Self {
        TestRng(seed.wrapping_mul(0x9e3779b97f4a7c15) | 1)
    }

    /// Uniform-ish draw in (−1, 1).
    pub fn f64(&mut self) -> f64 {
        self.0 ^= self.0 << 13;
        self.0 ^= self.0 >> 7;
        self.0 ^= self.0 << 17;
        (self.0 >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }

    /// Complex scalar with components in (−2, 2).
    pub fn scalar(&mut self, c: &Ctx) -> Scalar {
        c.from_f64(self.f64() * 2.0, self.f64() * 2.0)
    }

    /// Complex scalar bounded away from zero.
    pub fn scalar_nonzero(&mut self, c: &Ctx) -> Scalar {
        loop {
            let s = self.scalar(c);
            if s.abs() > 0.2 {
                return s;
            }
        }
    }

    pub fn sextic(&mut self, c: &Ctx) -> Sextic {
        Sextic::new((0..7).map(|_| self.scalar(c)).collect())
    }

    /// Random Möbius map with determinant bounded away from zero.
    pub fn mobius(&mut self, c: &Ctx) -> MobiusMap {
        loop {
            let m = MobiusMap::new(
                self.scalar(c),
                self.scalar(c),
                self.scalar(c),
                self.scalar(c),
            );
            if let Ok(m) = m {
                if m.det().abs() > 0.1 {
                    return m;
                }
            }
        }
    }
}
