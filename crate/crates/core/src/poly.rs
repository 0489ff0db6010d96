//! Sparse multivariate polynomials over F_p with grevlex and block
//! elimination orders.
//!
//! Exponents are stored densely as small integers (at most 2^15 per
//! variable, enforced on every multiplication). Terms are kept strictly
//! sorted in the ring's monomial order with no zero coefficients, so the
//! empty term list is the zero polynomial and representations are
//! canonical.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{FieldContext, FieldElement};

/// Per-variable exponent limit. Anything above this is treated as an
/// error rather than allowed to wrap.
pub const MAX_EXPONENT: u32 = 1 << 15;

type Exps = SmallVec<[u16; 16]>;

/// Monomial orders used by the engine.
///
/// `Grevlex` is the order for all user-facing computations. `Block` exists
/// for the elimination tricks in the `gb` module: the auxiliary variable
/// (always the last one in the ring) is compared first, then grevlex on
/// the remaining block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Grevlex,
    Block,
}

/// The ambient polynomial ring: named variables over a prime field with a
/// fixed monomial order. Immutable once built; shared via `Arc`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialRing {
    vars: Vec<String>,
    field: FieldContext,
    order: MonomialOrder,
    /// Index of the auxiliary elimination variable, when present. It is
    /// always the last variable and only `Block`-ordered rings have one.
    aux: Option<usize>,
}

impl PolynomialRing {
    /// A grevlex ring with the given variable names.
    pub fn new(vars: Vec<String>, field: FieldContext) -> Result<Arc<Self>> {
        Self::build(vars, field, MonomialOrder::Grevlex, None)
    }

    /// A block-order ring whose last variable is the elimination variable.
    pub fn new_block(vars: Vec<String>, field: FieldContext) -> Result<Arc<Self>> {
        let aux = vars.len().checked_sub(1).ok_or(Error::EmptyGeneratorList)?;
        Self::build(vars, field, MonomialOrder::Block, Some(aux))
    }

    fn build(
        vars: Vec<String>,
        field: FieldContext,
        order: MonomialOrder,
        aux: Option<usize>,
    ) -> Result<Arc<Self>> {
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(PolynomialRing {
            vars,
            field,
            order,
            aux,
        }))
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn field(&self) -> &FieldContext {
        &self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn aux_index(&self) -> Option<usize> {
        self.aux
    }

    pub fn same_ring(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other) || **self == **other
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        if exps.len() != self.vars.len() {
            return Err(Error::DimensionMismatch(exps.len(), self.vars.len()));
        }
        let mut v: Exps = SmallVec::with_capacity(exps.len());
        let mut deg = 0u32;
        for &e in exps {
            if e > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(e as u64));
            }
            deg += e;
            v.push(e as u16);
        }
        Ok(Monomial { exps: v, deg })
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0u16, self.vars.len()),
            deg: 0,
        }
    }

    pub fn var_monomial(&self, index: usize) -> Monomial {
        let mut exps: Exps = SmallVec::from_elem(0u16, self.vars.len());
        exps[index] = 1;
        Monomial { exps, deg: 1 }
    }
}

/// A power product of the ring variables with its total degree cached.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
    deg: u32,
}

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::DimensionMismatch(self.exps.len(), other.exps.len()));
        }
        let mut exps: Exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            let s = a as u32 + b as u32;
            if s > MAX_EXPONENT {
                return Err(Error::ExponentOverflow(s as u64));
            }
            exps.push(s as u16);
        }
        Ok(Monomial {
            exps,
            deg: self.deg + other.deg,
        })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self
                .exps
                .iter()
                .zip(&other.exps)
                .all(|(&a, &b)| a <= b)
    }

    /// `self / other`, or `None` when not divisible.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial {
            exps,
            deg: self.deg - other.deg,
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: Exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, deg }
    }

    /// True when the two monomials have disjoint support, i.e. their lcm
    /// is their product (Buchberger's product criterion).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Same monomial with one extra variable of exponent 0 appended.
    pub(crate) fn extended(&self) -> Monomial {
        let mut exps = self.exps.clone();
        exps.push(0);
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Drops the last exponent, which must be 0.
    pub(crate) fn restricted(&self) -> Monomial {
        debug_assert_eq!(*self.exps.last().unwrap(), 0);
        let mut exps = self.exps.clone();
        exps.pop();
        Monomial {
            exps,
            deg: self.deg,
        }
    }

    /// Exponent of the last variable.
    pub(crate) fn last_exponent(&self) -> u32 {
        *self.exps.last().unwrap() as u32
    }
}

/// Compares two monomials under `order`.
///
/// Grevlex: higher total degree wins; on ties the last nonzero entry of
/// the exponent difference decides, negative meaning greater. The block
/// order compares the last (auxiliary) exponent first and then falls back
/// to grevlex on the remaining variables.
pub fn monomial_compare(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Result<Ordering> {
    if a.exps.len() != b.exps.len() {
        return Err(Error::DimensionMismatch(a.exps.len(), b.exps.len()));
    }
    Ok(cmp_monomials(a, b, order))
}

/// Infallible comparison for same-ring monomials (the hot path).
pub(crate) fn cmp_monomials(a: &Monomial, b: &Monomial, order: MonomialOrder) -> Ordering {
    match order {
        MonomialOrder::Grevlex => grevlex(&a.exps, &b.exps, a.deg, b.deg),
        MonomialOrder::Block => {
            let last = a.exps.len() - 1;
            let (ta, tb) = (a.exps[last], b.exps[last]);
            match ta.cmp(&tb) {
                Ordering::Equal => grevlex(
                    &a.exps[..last],
                    &b.exps[..last],
                    a.deg - ta as u32,
                    b.deg - tb as u32,
                ),
                ord => ord,
            }
        }
    }
}

fn grevlex(a: &[u16], b: &[u16], deg_a: u32, deg_b: u32) -> Ordering {
    match deg_a.cmp(&deg_b) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                if a[i] != b[i] {
                    // Last nonzero entry of a - b negative means a greater.
                    return b[i].cmp(&a[i]);
                }
            }
            Ordering::Equal
        }
        ord => ord,
    }
}

/// One coefficient-monomial pair. Coefficients are never zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: FieldElement,
    pub monomial: Monomial,
}

/// A sparse polynomial with terms strictly decreasing in the ring order.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: Arc<PolynomialRing>,
    terms: Vec<Term>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_ring(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<PolynomialRing>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolynomialRing>, c: FieldElement) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![Term {
                coeff: c,
                monomial: ring.one_monomial(),
            }],
        }
    }

    pub fn one(ring: &Arc<PolynomialRing>) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn variable(ring: &Arc<PolynomialRing>, index: usize) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: vec![Term {
                coeff: ring.field().one(),
                monomial: ring.var_monomial(index),
            }],
        }
    }

    /// Builds a polynomial from arbitrary (coefficient, monomial) pairs,
    /// normalizing to the canonical sorted zero-free form.
    pub fn from_term_list(
        ring: &Arc<PolynomialRing>,
        terms: Vec<(FieldElement, Monomial)>,
    ) -> Result<Self> {
        let n = ring.num_vars();
        for (_, m) in &terms {
            if m.exps.len() != n {
                return Err(Error::DimensionMismatch(m.exps.len(), n));
            }
        }
        let order = ring.order();
        let mut terms: Vec<(FieldElement, Monomial)> = terms;
        terms.sort_by(|x, y| cmp_monomials(&y.1, &x.1, order));
        let field = *ring.field();
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for (c, m) in terms {
            match out.last_mut() {
                Some(t) if t.monomial == m => {
                    t.coeff = field.add(t.coeff, c);
                }
                _ => out.push(Term {
                    coeff: c,
                    monomial: m,
                }),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Ok(Polynomial {
            ring: Arc::clone(ring),
            terms: out,
        })
    }

    pub(crate) fn from_sorted_terms(ring: &Arc<PolynomialRing>, terms: Vec<Term>) -> Self {
        debug_assert!(terms.windows(2).all(|w| cmp_monomials(
            &w[0].monomial,
            &w[1].monomial,
            ring.order()
        ) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// True when the polynomial is a nonzero constant.
    pub fn is_unit_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    /// Total degree and homogeneity in one pass. The zero polynomial has
    /// no degree (`None`, the minus-infinity marker) and counts as
    /// homogeneous by convention.
    pub fn degree_info(&self) -> (Option<u32>, bool) {
        match self.terms.first() {
            None => (None, true),
            Some(_) => {
                let mut max = 0u32;
                let mut min = u32::MAX;
                for t in &self.terms {
                    max = max.max(t.monomial.degree());
                    min = min.min(t.monomial.degree());
                }
                (Some(max), max == min)
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.degree_info().0
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree_info().1
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring.same_ring(&other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn neg(&self) -> Polynomial {
        let field = *self.ring.field();
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: field.neg(t.coeff),
                monomial: t.monomial.clone(),
            })
            .collect();
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    fn merge(&self, other: &Polynomial, subtract: bool) -> Polynomial {
        let field = *self.ring.field();
        let order = self.ring.order();
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match cmp_monomials(&a.monomial, &b.monomial, order) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if subtract { field.neg(b.coeff) } else { b.coeff };
                    out.push(Term {
                        coeff: c,
                        monomial: b.monomial.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if subtract {
                        field.sub(a.coeff, b.coeff)
                    } else {
                        field.add(a.coeff, b.coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            monomial: a.monomial.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            let c = if subtract { field.neg(b.coeff) } else { b.coeff };
            out.push(Term {
                coeff: c,
                monomial: b.monomial.clone(),
            });
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        }
    }

    /// Multiplies by a single term. The term order is preserved, so no
    /// re-sort is needed.
    pub fn mul_term(&self, coeff: FieldElement, monomial: &Monomial) -> Result<Polynomial> {
        if coeff.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = *self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let c = field.mul(t.coeff, coeff);
            if !c.is_zero() {
                terms.push(Term {
                    coeff: c,
                    monomial: t.monomial.try_mul(monomial)?,
                });
            }
        }
        Ok(Polynomial {
            ring: Arc::clone(&self.ring),
            terms,
        })
    }

    pub fn scale(&self, coeff: FieldElement) -> Polynomial {
        let one = self.ring.one_monomial();
        self.mul_term(coeff, &one)
            .expect("scaling by a constant cannot overflow")
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let field = *self.ring.field();
        let mut products: Vec<(FieldElement, Monomial)> =
            Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push((
                    field.mul(a.coeff, b.coeff),
                    a.monomial.try_mul(&b.monomial)?,
                ));
            }
        }
        Polynomial::from_term_list(&self.ring, products)
    }

    /// Leading-coefficient-one rescaling of a nonzero polynomial.
    pub fn monic(&self) -> Result<Polynomial> {
        let field = *self.ring.field();
        let lead = self.leading_term().ok_or(Error::DivisionByZero)?;
        if lead.coeff == field.one() {
            return Ok(self.clone());
        }
        let inv = field.inv(lead.coeff)?;
        Ok(self.scale(inv))
    }
}

/// All monomials of total degree `d` in the non-auxiliary variables,
/// listed in descending ring order. The count is binom(v-1+d, d) for v
/// non-auxiliary variables; `cap` guards the enumeration.
pub fn monomials_of_degree(
    ring: &Arc<PolynomialRing>,
    d: u32,
    cap: usize,
) -> Result<Vec<Monomial>> {
    let nv = ring.num_vars() - ring.aux_index().map_or(0, |_| 1);
    if nv == 0 {
        return Err(Error::Internal("ring has no non-auxiliary variables".into()));
    }
    let count = crate::arith::binomial((nv as u64 - 1 + d as u64) as i64, d as i64)
        .map_err(|_| Error::ArithmeticOverflow("monomial count"))?;
    if count < 0 || count as u128 > cap as u128 {
        return Err(Error::ResourceExceeded {
            what: "monomial enumeration",
            reached: count.try_into().unwrap_or(usize::MAX),
            cap,
        });
    }
    if d > MAX_EXPONENT {
        return Err(Error::ExponentOverflow(d as u64));
    }
    let total = ring.num_vars();
    let mut out = Vec::with_capacity(count as usize);
    let mut current: Vec<u32> = vec![0; total];
    enumerate(&mut out, &mut current, 0, nv, d, ring)?;
    let order = ring.order();
    out.sort_by(|a, b| cmp_monomials(b, a, order));
    Ok(out)
}

fn enumerate(
    out: &mut Vec<Monomial>,
    current: &mut [u32],
    var: usize,
    nv: usize,
    remaining: u32,
    ring: &Arc<PolynomialRing>,
) -> Result<()> {
    if var == nv - 1 {
        current[var] = remaining;
        out.push(ring.monomial(current)?);
        current[var] = 0;
        return Ok(());
    }
    for e in (0..=remaining).rev() {
        current[var] = e;
        enumerate(out, current, var + 1, nv, remaining - e, ring)?;
    }
    current[var] = 0;
    Ok(())
}

// Canonical text rendering: terms joined by " + " / " - ", coefficients
// shown balanced (values above p/2 print as negatives), "^" powers and
// "*" separators, e.g. "3*x0^2*x1 - x2^3".
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.field().modulus();
        for (i, t) in self.terms.iter().enumerate() {
            let v = t.coeff.value();
            let (neg, mag) = if v > p / 2 { (true, p - v) } else { (false, v) };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || t.monomial.is_one() {
                factors.push(mag.to_string());
            }
            for (vi, e) in t.monomial.exponents().enumerate() {
                if e == 1 {
                    factors.push(self.ring.vars[vi].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.ring.vars[vi], e));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
