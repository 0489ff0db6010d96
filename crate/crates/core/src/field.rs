//! Exact arithmetic in the prime field F_p.
//!
//! All polynomial coefficients in this crate live in F_p for a runtime
//! modulus p. The default modulus is 32749, large enough that the random
//! choices made by the probabilistic Segre routine fail with negligible
//! probability at desk scale.

use crate::error::{Error, Result};

/// The default characteristic used throughout the crate.
pub const DEFAULT_PRIME: u64 = 32749;

/// A prime field F_p with 2 <= p < 2^31.
///
/// The upper bound keeps every product of two canonical residues inside
/// 64-bit arithmetic, so one reduction per multiplication suffices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldContext {
    p: u64,
}

/// A canonical residue in `[0, p-1]`.
///
/// Values are only created through [`FieldContext`] methods, which keeps
/// the reduction invariant airtight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement(u64);

impl FieldElement {
    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldContext {
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) {
            return Err(Error::ModulusOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldContext { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Reduces an arbitrary integer to its canonical residue.
    pub fn element(&self, v: u64) -> FieldElement {
        FieldElement(v % self.p)
    }

    /// Canonical residue of a signed integer.
    pub fn element_from_i64(&self, v: i64) -> FieldElement {
        let m = self.p as i64;
        FieldElement(v.rem_euclid(m) as u64)
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1 % self.p)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.p { s - self.p } else { s })
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.p - b.0
        })
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.p - a.0 })
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        // a, b < 2^31 so the product fits in u64.
        FieldElement(a.0 * b.0 % self.p)
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(p-2) = a^-1 for prime p.
        Ok(self.pow(a, self.p - 2))
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// A uniform random residue, drawn by rejection so every residue is
    /// exactly equally likely. With `nonzero` set the draw is repeated
    /// until it lands outside zero.
    pub fn random(&self, rng: &mut SplitMix64, nonzero: bool) -> FieldElement {
        // Largest multiple of p representable in u64; draws at or above it
        // are rejected to kill modulo bias.
        let zone = u64::MAX - u64::MAX % self.p;
        loop {
            let r = rng.next_u64();
            if r >= zone {
                continue;
            }
            let v = r % self.p;
            if nonzero && v == 0 {
                continue;
            }
            return FieldElement(v);
        }
    }
}

/// SplitMix64, the 64-bit mixing generator of Steele, Lea and Flood.
///
/// The state advances by the increment 0x9E3779B97F4A7C15 and the output
/// mixer uses the constants 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB with
/// shifts 30/27/31. Spelled out here so runs are reproducible across
/// platforms and toolchain versions with nothing but the seed.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}
