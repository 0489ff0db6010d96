//! Degrees of Segre classes by generic residuation.
//!
//! Given a homogeneous ideal cutting out a proper subscheme Z of P^k, the
//! driver samples general elements f_1,...,f_k of the graded piece I(m)
//! (m the largest generator degree), and for each codimension step d the
//! scheme cut by (f_1,...,f_d) decomposes into Z and a residual R whose
//! degree satisfies a Bezout-type balance
//!
//! ```text
//! m^d = deg R + sum_{i=0..p} C(d, p-i) m^(p-i) deg s_i,   p = d-(k-n)
//! ```
//!
//! Solving the balance for increasing d yields deg s_0,...,deg s_n. The
//! residual ideal is obtained by saturating (f_1,...,f_d), either with
//! respect to one extra general element of I(m) (the default, one basis
//! run per step) or with respect to the whole input ideal (iterated
//! quotients, the reference strategy).
//!
//! The binomial transform of the Segre degrees by powers of the
//! hyperplane section gives the Chern-Fulton degrees; for smooth Z the
//! top one is the topological Euler characteristic.

use std::fmt;
use std::time::{Duration, Instant};

use crate::arith::{binomial, checked_pow};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::field::SplitMix64;
use crate::gb::{buchberger, saturate_by_element, saturate_by_ideal, GroebnerBasis, Ideal};
use crate::hilbert::{dim_degree, dim_degree_of_basis};
use crate::poly::{monomials_of_degree, Polynomial};

/// How the residual ideal is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SaturationStrategy {
    /// Saturate by one extra random element of I(m); a single basis run.
    #[default]
    SingleElement,
    /// Saturate by the whole input ideal via iterated quotients.
    FullIdeal,
}

impl fmt::Display for SaturationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SaturationStrategy::SingleElement => write!(f, "single"),
            SaturationStrategy::FullIdeal => write!(f, "full"),
        }
    }
}

impl std::str::FromStr for SaturationStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(SaturationStrategy::SingleElement),
            "full" => Ok(SaturationStrategy::FullIdeal),
            _ => Err(Error::InvalidConfig("unknown saturation strategy")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct SegreConfig {
    pub seed: u64,
    pub strategy: SaturationStrategy,
    /// Number of runs with derived seeds that must agree (consistency
    /// voting). 1 disables voting.
    pub repeats: u32,
    pub caps: Caps,
}

impl SegreConfig {
    pub fn with_seed(seed: u64) -> Self {
        SegreConfig {
            seed,
            strategy: SaturationStrategy::default(),
            repeats: 1,
            caps: Caps::default(),
        }
    }
}

/// The computed Segre degrees together with their provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegreResult {
    /// Ambient projective dimension.
    pub k: i64,
    /// Dimension of the subscheme (-1 for the empty scheme).
    pub n: i64,
    /// Largest generator degree; the sampling degree.
    pub m: u32,
    /// deg s_0, ..., deg s_n.
    pub segre_degrees: Vec<i64>,
    /// deg R for d = k-n, ..., k.
    pub residual_degrees: Vec<i64>,
    pub seed: u64,
    pub strategy: SaturationStrategy,
}

/// A result plus wall-clock time per codimension step.
#[derive(Debug, Clone)]
pub struct SegreRun {
    pub result: SegreResult,
    pub step_times: Vec<Duration>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernFultonResult {
    /// deg c'_0, ..., deg c'_n.
    pub chern_fulton_degrees: Vec<i64>,
    /// deg c'_n; the topological Euler characteristic when the scheme is
    /// smooth. 0 for the empty scheme.
    pub euler: i64,
}

/// A uniformly random element of the graded piece I(m), built as a random
/// coefficient combination of the spanning set { x^a * g : g generator,
/// deg(x^a g) = m }.
///
/// The draw order (generators in their stored order, monomials in
/// descending ring order, one field draw per pair) is fixed, so a seed
/// pins the polynomial exactly.
pub fn sample_graded_element(
    ideal: &Ideal,
    m: u32,
    rng: &mut SplitMix64,
    caps: &Caps,
) -> Result<Polynomial> {
    if !ideal.is_homogeneous() {
        let bad = ideal
            .generators()
            .iter()
            .position(|g| !g.is_homogeneous())
            .unwrap_or(0);
        return Err(Error::NonHomogeneous(bad));
    }
    let ring = ideal.ring();
    let field = *ring.field();
    let mut acc = Polynomial::zero(ring);
    for g in ideal.generators() {
        let deg = g.total_degree().expect("generators are nonzero");
        if deg > m {
            return Err(Error::DegreeTooSmall {
                requested: m,
                generator: deg,
            });
        }
        for mono in monomials_of_degree(ring, m - deg, caps.max_monomials)? {
            let c = field.random(rng, false);
            if !c.is_zero() {
                acc = acc.add(&g.mul_term(c, &mono)?)?;
            }
        }
    }
    Ok(acc)
}

/// Computes the degrees of the Segre classes of the subscheme cut out by
/// a homogeneous ideal.
///
/// With `repeats > 1` the whole computation reruns with derived seeds and
/// all runs must agree, turning silent bad luck in the random choices
/// into a reportable error.
pub fn segre_degrees(ideal: &Ideal, cfg: &SegreConfig) -> Result<SegreRun> {
    if cfg.repeats < 1 {
        return Err(Error::InvalidConfig("repeats must be at least 1"));
    }
    if !ideal.is_homogeneous() {
        let bad = ideal
            .generators()
            .iter()
            .position(|g| !g.is_homogeneous())
            .unwrap_or(0);
        return Err(Error::NonHomogeneous(bad));
    }
    let caps = &cfg.caps;
    let input_gb = buchberger(ideal, caps)?;
    if input_gb.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let m = ideal.max_generator_degree();
    let (n, _) = dim_degree_of_basis(&input_gb, caps)?;

    // Run r samples with the r-th output of a seed stream, decorrelating
    // the repeats while keeping everything pinned to cfg.seed.
    let mut seed_stream = SplitMix64::new(cfg.seed);
    let seeds: Vec<u64> = (0..cfg.repeats).map(|_| seed_stream.next_u64()).collect();

    let first = run_once(ideal, &input_gb, m, n, seeds[0], cfg)?;
    for &seed in &seeds[1..] {
        let other = run_once(ideal, &input_gb, m, n, seed, cfg)?;
        if other.0 != first.0 || other.1 != first.1 {
            return Err(Error::InconsistentRuns {
                runs: vec![
                    (first.0.clone(), first.1.clone()),
                    (other.0.clone(), other.1.clone()),
                ],
            });
        }
    }

    let (segre, residuals, step_times) = first;
    let result = SegreResult {
        k: ideal.ring().num_vars() as i64 - 1,
        n,
        m,
        segre_degrees: segre,
        residual_degrees: residuals,
        seed: cfg.seed,
        strategy: cfg.strategy,
    };
    if !verify_bezout_identity(&result) {
        return Err(Error::Internal(
            "solved Segre degrees fail the degree balance".into(),
        ));
    }
    Ok(SegreRun {
        result,
        step_times,
    })
}

type RunOutput = (Vec<i64>, Vec<i64>, Vec<Duration>);

fn run_once(
    ideal: &Ideal,
    _input_gb: &GroebnerBasis,
    m: u32,
    n: i64,
    seed: u64,
    cfg: &SegreConfig,
) -> Result<RunOutput> {
    let caps = &cfg.caps;
    let ring = ideal.ring();
    let k = ring.num_vars() as i64 - 1;

    if n < 0 {
        // Empty scheme: no Segre classes, nothing to sample.
        return Ok((Vec::new(), Vec::new(), Vec::new()));
    }

    let mut rng = SplitMix64::new(seed);
    let mut samples: Vec<Polynomial> = Vec::with_capacity(k as usize);
    for _ in 0..k {
        samples.push(sample_graded_element(ideal, m, &mut rng, caps)?);
    }
    let h = match cfg.strategy {
        SaturationStrategy::SingleElement => {
            Some(sample_graded_element(ideal, m, &mut rng, caps)?)
        }
        SaturationStrategy::FullIdeal => None,
    };
    if samples.iter().any(Polynomial::is_zero) || h.as_ref().is_some_and(Polynomial::is_zero) {
        return Err(Error::DegenerateSample(
            "a random element of the graded piece came out zero; \
             retry with another seed or a larger field"
                .into(),
        ));
    }

    let m_int = m as i64;
    let mut segre: Vec<i64> = Vec::with_capacity(n as usize + 1);
    let mut residuals: Vec<i64> = Vec::with_capacity(n as usize + 1);
    let mut times: Vec<Duration> = Vec::with_capacity(n as usize + 1);
    for d in (k - n)..=k {
        let start = Instant::now();
        let j = Ideal::new(ring, samples[..d as usize].to_vec())?;
        let residual_ideal = match cfg.strategy {
            SaturationStrategy::SingleElement => {
                saturate_by_element(&j, h.as_ref().expect("sampled above"), caps)?
            }
            SaturationStrategy::FullIdeal => saturate_by_ideal(&j, ideal, caps)?,
        };
        let (_, deg_r) = dim_degree(&residual_ideal, caps)?;

        // deg s_p = m^d - deg R - sum_{i<p} C(d, p-i) m^(p-i) deg s_i
        let p = (d - (k - n)) as usize;
        let mut rhs = checked_pow(m_int, d as u32)?
            .checked_sub(deg_r)
            .ok_or(Error::ArithmeticOverflow("degree balance"))?;
        for (i, s_i) in segre.iter().enumerate().take(p) {
            let term = binomial(d, (p - i) as i64)?
                .checked_mul(checked_pow(m_int, (p - i) as u32)?)
                .and_then(|x| x.checked_mul(*s_i))
                .ok_or(Error::ArithmeticOverflow("degree balance"))?;
            rhs = rhs
                .checked_sub(term)
                .ok_or(Error::ArithmeticOverflow("degree balance"))?;
        }
        segre.push(rhs);
        residuals.push(deg_r);
        times.push(start.elapsed());
    }

    // s_0 is the cycle class of the top-dimensional part of a nonempty
    // scheme, a positive sum of variety degrees; anything else means the
    // choices were not general.
    if segre.first().copied().unwrap_or(1) <= 0 {
        return Err(Error::DegenerateSample(
            "leading Segre degree came out nonpositive; the random choices \
             were not general, retry with another seed"
                .into(),
        ));
    }
    Ok((segre, residuals, times))
}

/// Re-checks the degree balance m^d = deg R + sum C(d, p-i) m^(p-i) s_i
/// for every step of a result, in wide arithmetic.
pub fn verify_bezout_identity(res: &SegreResult) -> bool {
    if res.segre_degrees.len() != res.residual_degrees.len() {
        return false;
    }
    if res.n >= 0 && res.segre_degrees.len() as i64 != res.n + 1 {
        return false;
    }
    let m = res.m as i128;
    for (step, deg_r) in res.residual_degrees.iter().enumerate() {
        let d = res.k - res.n + step as i64;
        let p = step; // p = d - (k - n)
        let mut rhs = *deg_r as i128;
        for (i, s_i) in res.segre_degrees.iter().enumerate().take(p + 1) {
            let Ok(b) = binomial(d, (p - i) as i64) else {
                return false;
            };
            rhs += b as i128 * m.pow((p - i) as u32) * *s_i as i128;
        }
        if m.pow(d as u32) != rhs {
            return false;
        }
    }
    true
}

/// The binomial transform taking Segre degrees to Chern-Fulton degrees:
/// deg c'_i = sum_{p<=i} C(k+1, i-p) deg s_p. The inverse transform is
/// applied as a cross-check before returning.
pub fn chern_fulton(res: &SegreResult) -> Result<ChernFultonResult> {
    let kp1 = res.k + 1;
    let s = &res.segre_degrees;
    let mut c: Vec<i64> = Vec::with_capacity(s.len());
    for i in 0..s.len() {
        let mut acc = 0i64;
        for (p, s_p) in s.iter().enumerate().take(i + 1) {
            let term = binomial(kp1, (i - p) as i64)?
                .checked_mul(*s_p)
                .ok_or(Error::ArithmeticOverflow("Chern-Fulton transform"))?;
            acc = acc
                .checked_add(term)
                .ok_or(Error::ArithmeticOverflow("Chern-Fulton transform"))?;
        }
        c.push(acc);
    }
    // Invert: s_i = c_i - sum_{p<i} C(k+1, i-p) s_p, and compare.
    let mut s_back: Vec<i64> = Vec::with_capacity(c.len());
    for (i, c_i) in c.iter().enumerate() {
        let mut acc = *c_i;
        for (p, s_p) in s_back.iter().enumerate().take(i) {
            acc -= binomial(kp1, (i - p) as i64)? * s_p;
        }
        s_back.push(acc);
    }
    if s_back != *s {
        return Err(Error::Internal(
            "binomial transform failed to invert".into(),
        ));
    }
    Ok(ChernFultonResult {
        euler: c.last().copied().unwrap_or(0),
        chern_fulton_degrees: c,
    })
}
