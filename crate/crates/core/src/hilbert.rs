//! Dimension and degree of a projective scheme via the Hilbert series of
//! an initial ideal.
//!
//! For a monomial ideal M in v variables the Hilbert series of the
//! quotient ring is N(t)/(1-t)^v with an integer numerator N. Cancelling
//! every (1-t) factor leaves N'(t) with N'(1) nonzero; the remaining pole
//! order is the Krull dimension and N'(1) is the degree. The numerator is
//! computed with the usual pivot recursion
//!     N(M) = N(M minus last) - t^deg(last) * N((M minus last) : last)
//! where "last" is the lexicographically last minimal generator.

use std::collections::HashMap;
use std::sync::Arc;

use crate::arith::binomial;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::gb::{buchberger, GroebnerBasis, Ideal};
use crate::poly::{Monomial, PolynomialRing};

/// A monomial ideal held by its minimal generators: no generator divides
/// another, and the list is sorted (lexicographically by exponent
/// vector) so equal ideals have equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Arc<PolynomialRing>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Builds the ideal, minimalizing and sorting the given generators.
    pub fn new(ring: &Arc<PolynomialRing>, generators: Vec<Monomial>) -> Self {
        let mut gens = generators;
        gens.sort();
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        // Sorted order is not degree-compatible, so check divisibility in
        // both directions.
        'outer: for m in gens {
            for g in &minimal {
                if g.divides(&m) {
                    continue 'outer;
                }
            }
            minimal.retain(|g| !m.divides(g));
            minimal.push(m);
        }
        minimal.sort();
        MonomialIdeal {
            ring: Arc::clone(ring),
            generators: minimal,
        }
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    /// True when a monomial lies in the ideal.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }
}

/// Leading monomials of a reduced basis, as a monomial ideal. The
/// reduced-basis property makes them minimal already.
pub fn initial_ideal(gb: &GroebnerBasis) -> MonomialIdeal {
    let gens = gb
        .elements()
        .iter()
        .map(|e| e.leading_monomial().expect("basis elements are nonzero").clone())
        .collect();
    MonomialIdeal::new(gb.ring(), gens)
}

/// An integer polynomial in one variable t, dense in ascending powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    fn zero() -> Self {
        IntPoly(Vec::new())
    }

    fn one() -> Self {
        IntPoly(vec![1])
    }

    fn trim(&mut self) {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn coefficient(&self, power: usize) -> i64 {
        self.0.get(power).copied().unwrap_or(0)
    }

    pub fn eval_at_one(&self) -> Result<i64> {
        let mut acc = 0i64;
        for &c in &self.0 {
            acc = acc
                .checked_add(c)
                .ok_or(Error::ArithmeticOverflow("numerator evaluation"))?;
        }
        Ok(acc)
    }

    /// `self - t^shift * other`.
    fn sub_shifted(&self, other: &IntPoly, shift: usize) -> Result<IntPoly> {
        let len = self.0.len().max(other.0.len() + shift);
        let mut out = vec![0i64; len];
        out[..self.0.len()].copy_from_slice(&self.0);
        for (i, &c) in other.0.iter().enumerate() {
            out[i + shift] = out[i + shift]
                .checked_sub(c)
                .ok_or(Error::ArithmeticOverflow("numerator coefficient"))?;
        }
        let mut poly = IntPoly(out);
        poly.trim();
        Ok(poly)
    }

    /// Divides by (1 - t); only valid when 1 is a root.
    fn divide_by_one_minus_t(&self) -> IntPoly {
        debug_assert_eq!(self.eval_at_one().unwrap_or(1), 0);
        let mut out = vec![0i64; self.0.len().saturating_sub(1)];
        let mut carry = 0i64;
        for (i, slot) in out.iter_mut().enumerate() {
            carry += self.0[i];
            *slot = carry;
        }
        let mut poly = IntPoly(out);
        poly.trim();
        poly
    }
}

/// Hilbert numerator data: the raw numerator N(t), the reduced numerator
/// N'(t) with all (1-t) factors cancelled, and the Krull dimension of the
/// quotient ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    pub numerator: IntPoly,
    pub reduced_numerator: IntPoly,
    pub krull_dim: usize,
}

impl HilbertData {
    /// The coefficient of t^d in the power series N(t)/(1-t)^v, i.e. the
    /// vector-space dimension of the degree-d graded piece.
    pub fn series_coefficient(&self, num_vars: usize, d: usize) -> Result<i64> {
        let v = num_vars as i64;
        let mut acc = 0i64;
        for (i, &c) in self.numerator.coefficients().iter().enumerate() {
            if i > d {
                break;
            }
            let b = binomial((d - i) as i64 + v - 1, v - 1)?;
            acc = acc
                .checked_add(c.checked_mul(b).ok_or(Error::ArithmeticOverflow("series"))?)
                .ok_or(Error::ArithmeticOverflow("series"))?;
        }
        Ok(acc)
    }
}

/// Computes the Hilbert numerator of a monomial ideal.
pub fn hilbert_numerator(ideal: &MonomialIdeal, caps: &Caps) -> Result<HilbertData> {
    let mut memo: HashMap<Vec<Monomial>, IntPoly> = HashMap::new();
    let mut nodes = 0usize;
    let numerator = numerator_recursive(
        ideal.ring(),
        ideal.generators().to_vec(),
        &mut memo,
        &mut nodes,
        caps,
    )?;
    let v = ideal.ring().num_vars() - ideal.ring().aux_index().map_or(0, |_| 1);
    let mut reduced = numerator.clone();
    let mut cancelled = 0usize;
    if reduced.is_zero() {
        // Unit ideal: zero series, dimension 0 by convention.
        return Ok(HilbertData {
            numerator,
            reduced_numerator: IntPoly::zero(),
            krull_dim: 0,
        });
    }
    while reduced.eval_at_one()? == 0 {
        reduced = reduced.divide_by_one_minus_t();
        cancelled += 1;
    }
    if cancelled > v {
        return Err(Error::Internal(
            "numerator had more (1-t) factors than variables".into(),
        ));
    }
    Ok(HilbertData {
        numerator,
        reduced_numerator: reduced,
        krull_dim: v - cancelled,
    })
}

fn numerator_recursive(
    ring: &Arc<PolynomialRing>,
    gens: Vec<Monomial>,
    memo: &mut HashMap<Vec<Monomial>, IntPoly>,
    nodes: &mut usize,
    caps: &Caps,
) -> Result<IntPoly> {
    *nodes += 1;
    if *nodes > caps.max_hilbert_nodes {
        return Err(Error::ResourceExceeded {
            what: "Hilbert recursion",
            reached: *nodes,
            cap: caps.max_hilbert_nodes,
        });
    }
    if gens.is_empty() {
        return Ok(IntPoly::one());
    }
    if gens.len() == 1 {
        if gens[0].is_one() {
            return Ok(IntPoly::zero());
        }
        // S/(m): N = 1 - t^deg(m).
        return IntPoly::one().sub_shifted(&IntPoly::one(), gens[0].degree() as usize);
    }
    if let Some(hit) = memo.get(&gens) {
        return Ok(hit.clone());
    }
    // Pivot on the lexicographically last minimal generator.
    let mut rest = gens.clone();
    let pivot = rest.pop().expect("at least two generators");
    let rest_ideal = MonomialIdeal::new(ring, rest.clone());
    // (m) : p is generated by lcm(m, p)/p.
    let colon: Vec<Monomial> = rest
        .iter()
        .map(|m| m.lcm(&pivot).try_div(&pivot).expect("lcm divisible by pivot"))
        .collect();
    let colon_ideal = MonomialIdeal::new(ring, colon);
    let n_rest = numerator_recursive(ring, rest_ideal.generators().to_vec(), memo, nodes, caps)?;
    let n_colon = numerator_recursive(ring, colon_ideal.generators().to_vec(), memo, nodes, caps)?;
    let result = n_rest.sub_shifted(&n_colon, pivot.degree() as usize)?;
    memo.insert(gens, result.clone());
    Ok(result)
}

/// Projective dimension and degree of the scheme cut out by a homogeneous
/// ideal. The unit ideal (empty scheme) reports dimension -1 and degree 0.
///
/// The input does not need to be saturated: an irrelevant-primary
/// component only contributes a Krull-dimension-0 piece, which never
/// dominates the series.
pub fn dim_degree(ideal: &Ideal, caps: &Caps) -> Result<(i64, i64)> {
    if !ideal.is_homogeneous() {
        let bad = ideal
            .generators()
            .iter()
            .position(|g| !g.is_homogeneous())
            .unwrap_or(0);
        return Err(Error::NonHomogeneous(bad));
    }
    let gb = buchberger(ideal, caps)?;
    dim_degree_of_basis(&gb, caps)
}

/// Same as [`dim_degree`] for a basis that is already computed.
pub fn dim_degree_of_basis(gb: &GroebnerBasis, caps: &Caps) -> Result<(i64, i64)> {
    let data = hilbert_numerator(&initial_ideal(gb), caps)?;
    let proj_dim = data.krull_dim as i64 - 1;
    let degree = if data.krull_dim == 0 {
        0
    } else {
        data.reduced_numerator.eval_at_one()?
    };
    Ok((proj_dim, degree))
}
