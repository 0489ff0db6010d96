//! Buchberger Groebner engine: reduced bases, normal forms, ideal
//! quotients and the two saturation strategies.
//!
//! Everything here is deterministic. Pair selection follows the normal
//! strategy (smallest lcm degree first, ties broken by the lcm exponent
//! vector and the pair indices), reduction always uses the first divisor
//! in the supplied order, and bases are normalized to the unique reduced
//! monic form, so outputs are bit-reproducible.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::poly::{cmp_monomials, Monomial, Polynomial, PolynomialRing, Term};

/// A finitely generated ideal: a nonempty list of nonzero generators.
#[derive(Debug, Clone, PartialEq)]
pub struct Ideal {
    ring: Arc<PolynomialRing>,
    generators: Vec<Polynomial>,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(ring: &Arc<PolynomialRing>, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGeneratorList);
        }
        for (i, g) in generators.iter().enumerate() {
            if !g.ring().same_ring(ring) {
                return Err(Error::RingMismatch);
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator(i));
            }
        }
        let homogeneous = generators.iter().all(Polynomial::is_homogeneous);
        Ok(Ideal {
            ring: Arc::clone(ring),
            generators,
            homogeneous,
        })
    }

    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    /// Largest total degree among the generators.
    pub fn max_generator_degree(&self) -> u32 {
        self.generators
            .iter()
            .map(|g| g.total_degree().expect("generators are nonzero"))
            .max()
            .expect("generator list is nonempty")
    }
}

/// The unique reduced monic Groebner basis of an ideal, elements sorted
/// by leading monomial descending. Two ideals in the same ring are equal
/// exactly when these element lists coincide.
#[derive(Debug, Clone, PartialEq)]
pub struct GroebnerBasis {
    ring: Arc<PolynomialRing>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<PolynomialRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit_constant()
    }

    /// The basis viewed as an ideal with the basis elements as generators.
    pub fn to_ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.elements.clone()).expect("basis elements are valid generators")
    }
}

/// Fully reduces `f` against `divisors`: repeatedly cancels the largest
/// reducible term using the first divisor (in slice order) whose leading
/// monomial divides it. Zero divisors are skipped.
fn reduce_full(f: &Polynomial, divisors: &[&Polynomial], max_terms: usize) -> Result<Polynomial> {
    let ring = f.ring();
    let field = *ring.field();
    let mut done: Vec<Term> = Vec::new();
    let mut work = f.clone();
    while let Some(lead) = work.leading_term() {
        let lead = lead.clone();
        let mut reduced = false;
        for g in divisors {
            let Some(glt) = g.leading_term() else { continue };
            if let Some(quot) = lead.monomial.try_div(&glt.monomial) {
                let factor = field.mul(lead.coeff, field.inv(glt.coeff)?);
                let scaled = g.mul_term(factor, &quot)?;
                work = work.sub(&scaled)?;
                reduced = true;
                break;
            }
        }
        if !reduced {
            // Irreducible leading term: everything still in `work` is
            // smaller, so the output stays sorted.
            done.push(lead.clone());
            work = Polynomial::from_sorted_terms(ring, work.terms()[1..].to_vec());
        }
        if work.num_terms() + done.len() > max_terms {
            return Err(Error::ResourceExceeded {
                what: "reduction term count",
                reached: work.num_terms() + done.len(),
                cap: max_terms,
            });
        }
    }
    Ok(Polynomial::from_sorted_terms(ring, done))
}

/// Normal form of `f` modulo the list `divisors`.
///
/// The result has no term divisible by the leading monomial of any
/// divisor, and `f - normal_form(f, divisors)` lies in the ideal the
/// divisors generate. Deterministic: the largest reducible term is always
/// cancelled with the first applicable divisor in list order.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let refs: Vec<&Polynomial> = divisors.iter().collect();
    reduce_full(f, &refs, usize::MAX).expect("reduction of in-range inputs cannot fail")
}

/// The S-polynomial of two nonzero polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let field = *f.ring().field();
    let flt = f.leading_term().ok_or(Error::DivisionByZero)?;
    let glt = g.leading_term().ok_or(Error::DivisionByZero)?;
    let lcm = flt.monomial.lcm(&glt.monomial);
    let mf = lcm.try_div(&flt.monomial).expect("lcm is divisible");
    let mg = lcm.try_div(&glt.monomial).expect("lcm is divisible");
    let a = f.mul_term(field.inv(flt.coeff)?, &mf)?;
    let b = g.mul_term(field.inv(glt.coeff)?, &mg)?;
    a.sub(&b)
}

type PairKey = (u32, Monomial, usize, usize);

fn pair_key(basis: &[Polynomial], i: usize, j: usize) -> PairKey {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    (lcm.degree(), lcm, i, j)
}

/// Computes the reduced monic Groebner basis of an ideal under its ring's
/// order, using Buchberger's algorithm with the product and chain
/// criteria and normal-strategy pair selection.
pub fn buchberger(ideal: &Ideal, caps: &Caps) -> Result<GroebnerBasis> {
    let ring = ideal.ring();
    let mut basis: Vec<Polynomial> = Vec::with_capacity(ideal.generators().len());
    for g in ideal.generators() {
        basis.push(g.monic()?);
    }
    // A constant generator makes the whole thing the unit ideal.
    if basis.iter().any(Polynomial::is_unit_constant) {
        return Ok(GroebnerBasis {
            ring: Arc::clone(ring),
            elements: vec![Polynomial::one(ring)],
        });
    }

    let mut pending: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending_pairs: HashSet<(usize, usize)> = HashSet::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            pending.insert(pair_key(&basis, i, j));
            pending_pairs.insert((i, j));
        }
    }

    while let Some((_, lcm, i, j)) = pending.pop_first() {
        pending_pairs.remove(&(i, j));
        let lmi = basis[i].leading_monomial().unwrap();
        let lmj = basis[j].leading_monomial().unwrap();
        // Product criterion: coprime leading monomials reduce to zero.
        if lmi.coprime(lmj) {
            continue;
        }
        // Chain criterion: some k with LM(k) | lcm(i,j) whose pairs with
        // both i and j were already treated.
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].leading_monomial().unwrap().divides(&lcm)
                && !pending_pairs.contains(&norm_pair(i, k))
                && !pending_pairs.contains(&norm_pair(j, k))
        });
        if chain {
            continue;
        }

        let s = s_polynomial(&basis[i], &basis[j])?;
        let refs: Vec<&Polynomial> = basis.iter().collect();
        let remainder = reduce_full(&s, &refs, caps.max_terms)?;
        if remainder.is_zero() {
            continue;
        }
        let remainder = remainder.monic()?;
        if remainder.is_unit_constant() {
            return Ok(GroebnerBasis {
                ring: Arc::clone(ring),
                elements: vec![Polynomial::one(ring)],
            });
        }
        if basis.len() + 1 > caps.max_basis {
            return Err(Error::ResourceExceeded {
                what: "basis size",
                reached: basis.len() + 1,
                cap: caps.max_basis,
            });
        }
        let new_index = basis.len();
        basis.push(remainder);
        for k in 0..new_index {
            pending.insert(pair_key(&basis, k, new_index));
            pending_pairs.insert((k, new_index));
        }
        if pending.len() > caps.max_pairs {
            return Err(Error::ResourceExceeded {
                what: "pair queue",
                reached: pending.len(),
                cap: caps.max_pairs,
            });
        }
    }

    Ok(GroebnerBasis {
        ring: Arc::clone(ring),
        elements: reduce_basis(basis, ring, caps)?,
    })
}

fn norm_pair(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Minimizes and interreduces a basis whose S-pairs all reduce to zero,
/// producing the unique reduced monic form sorted by leading monomial
/// descending.
fn reduce_basis(
    mut basis: Vec<Polynomial>,
    ring: &Arc<PolynomialRing>,
    caps: &Caps,
) -> Result<Vec<Polynomial>> {
    let order = ring.order();
    basis.retain(|g| !g.is_zero());
    basis.sort_by(|a, b| {
        cmp_monomials(
            a.leading_monomial().unwrap(),
            b.leading_monomial().unwrap(),
            order,
        )
    });
    // Ascending scan: a divisor is never larger than its multiple, so
    // keep-first minimization is sound.
    let mut kept: Vec<Polynomial> = Vec::new();
    'next: for g in basis {
        for h in &kept {
            if h
                .leading_monomial()
                .unwrap()
                .divides(g.leading_monomial().unwrap())
            {
                continue 'next;
            }
        }
        kept.push(g);
    }
    // Tail-reduce each element against the others. Leading monomials are
    // pairwise non-divisible now, so they survive reduction.
    for idx in 0..kept.len() {
        let g = std::mem::replace(&mut kept[idx], Polynomial::zero(ring));
        let refs: Vec<&Polynomial> = kept.iter().collect();
        let reduced = reduce_full(&g, &refs, caps.max_terms)?;
        kept[idx] = reduced.monic()?;
    }
    kept.sort_by(|a, b| {
        cmp_monomials(
            b.leading_monomial().unwrap(),
            a.leading_monomial().unwrap(),
            order,
        )
    });
    Ok(kept)
}

/// True exactly when the two ideals have identical reduced bases.
pub fn ideal_equals(a: &Ideal, b: &Ideal, caps: &Caps) -> Result<bool> {
    if !a.ring().same_ring(b.ring()) {
        return Err(Error::RingMismatch);
    }
    if a.generators() == b.generators() {
        return Ok(true);
    }
    Ok(buchberger(a, caps)?.elements() == buchberger(b, caps)?.elements())
}

/// True exactly when the reduced basis is `{1}`.
pub fn is_unit_ideal(ideal: &Ideal, caps: &Caps) -> Result<bool> {
    if ideal.generators().iter().any(Polynomial::is_unit_constant) {
        return Ok(true);
    }
    // A homogeneous ideal with no constant generator is the unit ideal
    // only if a generator has degree 0, already covered above.
    if ideal.is_homogeneous() {
        return Ok(false);
    }
    Ok(buchberger(ideal, caps)?.is_unit())
}

/// Membership test against a precomputed basis.
pub fn in_ideal(f: &Polynomial, gb: &GroebnerBasis) -> bool {
    normal_form(f, gb.elements()).is_zero()
}

// ---------------------------------------------------------------------
// Elimination machinery. Quotients, intersections and saturations all go
// through one construction: adjoin an auxiliary variable t (the most
// significant block of the order), compute a basis, keep the t-free
// elements.
// ---------------------------------------------------------------------

fn extended_ring(ring: &Arc<PolynomialRing>) -> Result<Arc<PolynomialRing>> {
    let mut vars = ring.variables().to_vec();
    let mut name = String::from("t");
    let mut counter = 0u32;
    while vars.contains(&name) {
        name = format!("t{counter}");
        counter += 1;
    }
    vars.push(name);
    PolynomialRing::new_block(vars, *ring.field())
}

fn lift(f: &Polynomial, ext: &Arc<PolynomialRing>) -> Polynomial {
    // Appending a zero exponent leaves the relative order of t-free
    // monomials unchanged under the block order.
    let terms = f
        .terms()
        .iter()
        .map(|t| Term {
            coeff: t.coeff,
            monomial: t.monomial.extended(),
        })
        .collect();
    Polynomial::from_sorted_terms(ext, terms)
}

fn involves_aux(f: &Polynomial) -> bool {
    // Under the block order any monomial containing t beats every t-free
    // monomial, so the leading term decides.
    f.leading_monomial()
        .map(|m| m.last_exponent() > 0)
        .unwrap_or(false)
}

fn restrict(f: &Polynomial, base: &Arc<PolynomialRing>) -> Polynomial {
    debug_assert!(f.terms().iter().all(|t| t.monomial.last_exponent() == 0));
    let terms = f
        .terms()
        .iter()
        .map(|t| Term {
            coeff: t.coeff,
            monomial: t.monomial.restricted(),
        })
        .collect();
    Polynomial::from_sorted_terms(base, terms)
}

/// Basis of the extended ideal, restricted to the t-free elements and
/// mapped back to the base ring.
fn eliminate(ext_gens: Vec<Polynomial>, ext: &Arc<PolynomialRing>, base: &Arc<PolynomialRing>, caps: &Caps) -> Result<Vec<Polynomial>> {
    let gb = buchberger(&Ideal::new(ext, ext_gens)?, caps)?;
    let kept: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter(|e| !involves_aux(e))
        .map(|e| restrict(e, base))
        .collect();
    if kept.is_empty() {
        return Err(Error::Internal(
            "elimination produced the zero ideal".into(),
        ));
    }
    Ok(kept)
}

/// Exact division by a single nonzero polynomial. Errors if a nonzero
/// remainder shows up; callers only use this where divisibility is
/// guaranteed, so failure indicates an engine bug.
fn div_exact(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let ring = f.ring();
    let field = *ring.field();
    let glt = g.leading_term().ok_or(Error::DivisionByZero)?;
    let inv_lc = field.inv(glt.coeff)?;
    let mut quotient: Vec<Term> = Vec::new();
    let mut work = f.clone();
    while let Some(lead) = work.leading_term() {
        let Some(quot_mono) = lead.monomial.try_div(&glt.monomial) else {
            return Err(Error::Internal(format!(
                "exact division failed: remainder led by {:?}",
                lead.monomial
            )));
        };
        let factor = field.mul(lead.coeff, inv_lc);
        let scaled = g.mul_term(factor, &quot_mono)?;
        work = work.sub(&scaled)?;
        // Quotient terms come out strictly decreasing.
        quotient.push(Term {
            coeff: factor,
            monomial: quot_mono,
        });
    }
    Ok(Polynomial::from_sorted_terms(ring, quotient))
}

/// Intersection of two ideals via `t*A + (1-t)*B` and elimination of t.
pub fn intersect(a: &Ideal, b: &Ideal, caps: &Caps) -> Result<Ideal> {
    if !a.ring().same_ring(b.ring()) {
        return Err(Error::RingMismatch);
    }
    let base = a.ring();
    let ext = extended_ring(base)?;
    let t = Polynomial::variable(&ext, ext.num_vars() - 1);
    let mut gens: Vec<Polynomial> = Vec::with_capacity(a.generators().len() + b.generators().len());
    for g in a.generators() {
        gens.push(t.mul(&lift(g, &ext))?);
    }
    for g in b.generators() {
        let lifted = lift(g, &ext);
        gens.push(lifted.sub(&t.mul(&lifted)?)?);
    }
    Ideal::new(base, eliminate(gens, &ext, base, caps)?)
}

/// The ideal quotient `J : (f)` of a principal divisor, computed as the
/// intersection of `J` with `(f)` (auxiliary-variable elimination)
/// followed by exact division of each generator by `f`.
pub fn ideal_quotient(j: &Ideal, f: &Polynomial, caps: &Caps) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !f.ring().same_ring(j.ring()) {
        return Err(Error::RingMismatch);
    }
    // J : (c) = J for a unit.
    if f.is_unit_constant() {
        return Ok(j.clone());
    }
    let principal = Ideal::new(j.ring(), vec![f.clone()])?;
    let inter = intersect(j, &principal, caps)?;
    let mut quotients = Vec::with_capacity(inter.generators().len());
    for g in inter.generators() {
        quotients.push(div_exact(g, f)?);
    }
    Ideal::new(j.ring(), quotients)
}

/// `J : I`, computed as the intersection of the principal quotients
/// `J : (g)` over the generators `g` of `I`.
pub fn quotient_by_ideal(j: &Ideal, i: &Ideal, caps: &Caps) -> Result<Ideal> {
    if !j.ring().same_ring(i.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut acc: Option<Ideal> = None;
    for g in i.generators() {
        let q = ideal_quotient(j, g, caps)?;
        acc = Some(match acc {
            None => q,
            Some(current) => intersect(&current, &q, caps)?,
        });
    }
    Ok(acc.expect("ideal has at least one generator"))
}

/// Saturation `J : I^inf` by iterated quotients.
///
/// Quotients only grow (`K` is contained in `K : I`), so the chain
/// stabilizes exactly when `K : I` is contained back in `K`; membership of
/// the new generators against the current basis detects that without an
/// extra basis computation. The returned ideal carries its reduced basis
/// as generators.
pub fn saturate_by_ideal(j: &Ideal, i: &Ideal, caps: &Caps) -> Result<Ideal> {
    if !j.ring().same_ring(i.ring()) {
        return Err(Error::RingMismatch);
    }
    let mut current = j.clone();
    let mut current_gb = buchberger(&current, caps)?;
    loop {
        let next = quotient_by_ideal(&current, i, caps)?;
        let stabilized = next
            .generators()
            .iter()
            .all(|g| in_ideal(g, &current_gb));
        if stabilized {
            return Ok(current_gb.to_ideal());
        }
        current = next;
        current_gb = buchberger(&current, caps)?;
    }
}

/// Saturation `J : (h)^inf` in a single basis run: compute a block-order
/// basis of `J + (t*h - 1)` and keep the t-free elements. The result is
/// homogeneous whenever `J` and `h` are.
pub fn saturate_by_element(j: &Ideal, h: &Polynomial, caps: &Caps) -> Result<Ideal> {
    if h.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if !h.ring().same_ring(j.ring()) {
        return Err(Error::RingMismatch);
    }
    let base = j.ring();
    let ext = extended_ring(base)?;
    let t = Polynomial::variable(&ext, ext.num_vars() - 1);
    let mut gens: Vec<Polynomial> = j.generators().iter().map(|g| lift(g, &ext)).collect();
    gens.push(t.mul(&lift(h, &ext))?.sub(&Polynomial::one(&ext))?);
    Ideal::new(base, eliminate(gens, &ext, base, caps)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldContext;

    fn ring_xyz(p: u64) -> Arc<PolynomialRing> {
        PolynomialRing::new(
            vec!["x".into(), "y".into(), "z".into()],
            FieldContext::new(p).unwrap(),
        )
        .unwrap()
    }

    fn var(r: &Arc<PolynomialRing>, i: usize) -> Polynomial {
        Polynomial::variable(r, i)
    }

    fn pow(f: &Polynomial, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(f.ring());
        for _ in 0..e {
            acc = acc.mul(f).unwrap();
        }
        acc
    }

    /// The point scheme (x^2, y^2, xy) in three variables.
    fn point_scheme(r: &Arc<PolynomialRing>) -> Ideal {
        let x = var(r, 0);
        let y = var(r, 1);
        Ideal::new(
            r,
            vec![
                x.mul(&x).unwrap(),
                y.mul(&y).unwrap(),
                x.mul(&y).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let r = ring_xyz(7);
        let x = var(&r, 0);
        let y = var(&r, 1);
        // x^2 mod {x} = 0
        let x2 = x.mul(&x).unwrap();
        assert!(normal_form(&x2, &[x.clone()]).is_zero());
        // (x^2 + y) mod {x^2} = y
        let f = x2.add(&y).unwrap();
        assert_eq!(normal_form(&f, &[x2.clone()]), y);
        // (xy + 1) mod {y - 1} = x + 1
        let xy1 = x.mul(&y).unwrap().add(&Polynomial::one(&r)).unwrap();
        let ym1 = y.sub(&Polynomial::one(&r)).unwrap();
        let expect = x.add(&Polynomial::one(&r)).unwrap();
        assert_eq!(normal_form(&xy1, &[ym1]), expect);
    }

    #[test]
    fn buchberger_monomial_ideal_is_fixed() {
        let r = ring_xyz(7);
        let ideal = point_scheme(&r);
        let gb = buchberger(&ideal, &Caps::default()).unwrap();
        let rendered: Vec<String> = gb.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(rendered, vec!["x^2", "x*y", "y^2"]);
    }

    #[test]
    fn buchberger_eliminates_linear_pair() {
        let r = ring_xyz(7);
        let x = var(&r, 0);
        let y = var(&r, 1);
        let ideal = Ideal::new(
            &r,
            vec![x.sub(&y).unwrap(), x.add(&y).unwrap()],
        )
        .unwrap();
        let gb = buchberger(&ideal, &Caps::default()).unwrap();
        assert_eq!(gb.elements(), &[x, y]);
    }

    fn twisted_cubic(r: &Arc<PolynomialRing>) -> Ideal {
        // x1^2 - x0 x2, x1 x2 - x0 x3, x2^2 - x1 x3
        let v: Vec<Polynomial> = (0..4).map(|i| var(r, i)).collect();
        let g0 = v[1].mul(&v[1]).unwrap().sub(&v[0].mul(&v[2]).unwrap()).unwrap();
        let g1 = v[1].mul(&v[2]).unwrap().sub(&v[0].mul(&v[3]).unwrap()).unwrap();
        let g2 = v[2].mul(&v[2]).unwrap().sub(&v[1].mul(&v[3]).unwrap()).unwrap();
        Ideal::new(r, vec![g0, g1, g2]).unwrap()
    }

    fn p3_ring() -> Arc<PolynomialRing> {
        PolynomialRing::new(
            (0..4).map(|i| format!("x{i}")).collect(),
            FieldContext::new(32749).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn twisted_cubic_generators_are_already_reduced() {
        let r = p3_ring();
        let ideal = twisted_cubic(&r);
        let gb = buchberger(&ideal, &Caps::default()).unwrap();
        assert_eq!(gb.elements().len(), 3);
        for g in ideal.generators() {
            assert!(gb.elements().contains(g));
        }
        // Brute-force S-pair oracle: every S-polynomial reduces to zero.
        for i in 0..gb.elements().len() {
            for j in (i + 1)..gb.elements().len() {
                let s = s_polynomial(&gb.elements()[i], &gb.elements()[j]).unwrap();
                assert!(normal_form(&s, gb.elements()).is_zero());
            }
        }
    }

    #[test]
    fn ideal_equality_examples() {
        let r = ring_xyz(7);
        let caps = Caps::default();
        let x = var(&r, 0);
        let y = var(&r, 1);
        let a = Ideal::new(&r, vec![x.clone(), y.clone()]).unwrap();
        let b = Ideal::new(&r, vec![x.add(&y).unwrap(), y.clone()]).unwrap();
        assert!(ideal_equals(&a, &b, &caps).unwrap());
        let c = Ideal::new(&r, vec![x.clone()]).unwrap();
        let d = Ideal::new(&r, vec![x.mul(&x).unwrap()]).unwrap();
        assert!(!ideal_equals(&c, &d, &caps).unwrap());
        // (x^2, xy, y^2) equals (x, y)^2 given as expanded products.
        let sq = Ideal::new(
            &r,
            vec![
                x.mul(&x).unwrap(),
                x.mul(&y).unwrap(),
                y.mul(&x).unwrap(),
                y.mul(&y).unwrap(),
            ],
        )
        .unwrap();
        assert!(ideal_equals(&point_scheme(&r), &sq, &caps).unwrap());
    }

    #[test]
    fn unit_ideal_detection() {
        let r = ring_xyz(7);
        let caps = Caps::default();
        let x = var(&r, 0);
        let y = var(&r, 1);
        let with_unit = Ideal::new(
            &r,
            vec![x.clone(), x.add(&Polynomial::one(&r)).unwrap()],
        )
        .unwrap();
        assert!(is_unit_ideal(&with_unit, &caps).unwrap());
        let proper = Ideal::new(&r, vec![x, y]).unwrap();
        assert!(!is_unit_ideal(&proper, &caps).unwrap());
    }

    #[test]
    fn principal_quotients() {
        let r = ring_xyz(7);
        let caps = Caps::default();
        let x = var(&r, 0);
        let y = var(&r, 1);
        let x2 = x.mul(&x).unwrap();
        let xy = x.mul(&y).unwrap();
        // (x^2) : x = (x)
        let q = ideal_quotient(&Ideal::new(&r, vec![x2]).unwrap(), &x, &caps).unwrap();
        assert!(ideal_equals(&q, &Ideal::new(&r, vec![x.clone()]).unwrap(), &caps).unwrap());
        // (xy) : x = (y)
        let q = ideal_quotient(&Ideal::new(&r, vec![xy]).unwrap(), &x, &caps).unwrap();
        assert!(ideal_equals(&q, &Ideal::new(&r, vec![y]).unwrap(), &caps).unwrap());
    }

    #[test]
    fn quotient_by_unit_and_self() {
        let r = ring_xyz(7);
        let caps = Caps::default();
        let x = var(&r, 0);
        let y = var(&r, 1);
        let j = Ideal::new(
            &r,
            vec![
                x.mul(&x).unwrap().mul(&y).unwrap(),
                x.mul(&y).unwrap().mul(&y).unwrap(),
            ],
        )
        .unwrap();
        let unit = Ideal::new(&r, vec![Polynomial::one(&r)]).unwrap();
        // J : (1) = J
        let q = quotient_by_ideal(&j, &unit, &caps).unwrap();
        assert!(ideal_equals(&q, &j, &caps).unwrap());
        // J : J is the unit ideal.
        let q = quotient_by_ideal(&j, &j, &caps).unwrap();
        assert!(is_unit_ideal(&q, &caps).unwrap());
    }

    /// General degree-2 element of the point scheme ideal, with fixed
    /// coefficients that are generic enough for the quotient chain.
    fn general_member(r: &Arc<PolynomialRing>, coeffs: [u64; 3]) -> Polynomial {
        let f = *r.field();
        let ideal = point_scheme(r);
        let mut acc = Polynomial::zero(r);
        for (g, c) in ideal.generators().iter().zip(coeffs) {
            acc = acc.add(&g.scale(f.element(c))).unwrap();
        }
        acc
    }

    #[test]
    fn point_scheme_quotient_chain() {
        // For general f1, f2 of degree 2 inside (x^2, y^2, xy):
        // (f1,f2) : I = (x, y) and ((f1,f2) : I) : I = (1),
        // so the saturation is the unit ideal and the residual is empty.
        let r = ring_xyz(32749);
        let caps = Caps::default();
        let i = point_scheme(&r);
        let f1 = general_member(&r, [3, 5, 11]);
        let f2 = general_member(&r, [7, 2, 19]);
        let j = Ideal::new(&r, vec![f1, f2]).unwrap();

        let q1 = quotient_by_ideal(&j, &i, &caps).unwrap();
        let xy = Ideal::new(&r, vec![var(&r, 0), var(&r, 1)]).unwrap();
        assert!(ideal_equals(&q1, &xy, &caps).unwrap());

        let q2 = quotient_by_ideal(&q1, &i, &caps).unwrap();
        assert!(is_unit_ideal(&q2, &caps).unwrap());

        let sat = saturate_by_ideal(&j, &i, &caps).unwrap();
        assert!(is_unit_ideal(&sat, &caps).unwrap());
    }

    #[test]
    fn cusp_lines_saturation() {
        // I = (x^2 y, x y^2); a general cubic f1 = xy(ax + by) saturates
        // to the line (ax + by), both with the full ideal and with the
        // single element h = x^2 y.
        let r = ring_xyz(32749);
        let caps = Caps::default();
        let f = *r.field();
        let x = var(&r, 0);
        let y = var(&r, 1);
        let x2y = x.mul(&x).unwrap().mul(&y).unwrap();
        let xy2 = x.mul(&y).unwrap().mul(&y).unwrap();
        let i = Ideal::new(&r, vec![x2y.clone(), xy2.clone()]).unwrap();
        let (a, b) = (f.element(17), f.element(23));
        let f1 = x2y.scale(a).add(&xy2.scale(b)).unwrap();
        let j = Ideal::new(&r, vec![f1]).unwrap();

        let line = Ideal::new(&r, vec![x.scale(a).add(&y.scale(b)).unwrap()]).unwrap();
        let sat_full = saturate_by_ideal(&j, &i, &caps).unwrap();
        assert!(ideal_equals(&sat_full, &line, &caps).unwrap());

        let sat_single = saturate_by_element(&j, &x2y, &caps).unwrap();
        assert!(ideal_equals(&sat_single, &line, &caps).unwrap());
        assert!(sat_single.is_homogeneous());
    }

    #[test]
    fn saturate_by_element_examples() {
        let r = ring_xyz(7);
        let caps = Caps::default();
        let x = var(&r, 0);
        let y = var(&r, 1);
        // (x^2) : x^inf = (1)
        let j = Ideal::new(&r, vec![x.mul(&x).unwrap()]).unwrap();
        let s = saturate_by_element(&j, &x, &caps).unwrap();
        assert!(is_unit_ideal(&s, &caps).unwrap());
        // (xy) : x^inf = (y)
        let j = Ideal::new(&r, vec![x.mul(&y).unwrap()]).unwrap();
        let s = saturate_by_element(&j, &x, &caps).unwrap();
        assert!(ideal_equals(&s, &Ideal::new(&r, vec![y]).unwrap(), &caps).unwrap());
    }

    #[test]
    fn saturation_by_unit_ideal_is_identity() {
        let r = ring_xyz(7);
        let caps = Caps::default();
        let x = var(&r, 0);
        let j = Ideal::new(&r, vec![x.mul(&x).unwrap()]).unwrap();
        let unit = Ideal::new(&r, vec![Polynomial::one(&r)]).unwrap();
        let s = saturate_by_ideal(&j, &unit, &caps).unwrap();
        assert!(ideal_equals(&s, &j, &caps).unwrap());
    }

    #[test]
    fn reducedness_and_monicity_of_output() {
        let r = ring_xyz(32749);
        let caps = Caps::default();
        let x = var(&r, 0);
        let y = var(&r, 1);
        let z = var(&r, 2);
        let f1 = pow(&x, 2).add(&y.mul(&z).unwrap()).unwrap();
        let f2 = x.mul(&y).unwrap().add(&pow(&z, 2)).unwrap();
        let f3 = pow(&y, 3).sub(&pow(&z, 3)).unwrap();
        let gb = buchberger(&Ideal::new(&r, vec![f1, f2, f3]).unwrap(), &caps).unwrap();
        for (i, g) in gb.elements().iter().enumerate() {
            assert_eq!(g.leading_term().unwrap().coeff.value(), 1);
            let others: Vec<Polynomial> = gb
                .elements()
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, h)| h.clone())
                .collect();
            assert_eq!(&normal_form(g, &others), g);
        }
        // All S-pairs of the output reduce to zero.
        for i in 0..gb.elements().len() {
            for j in (i + 1)..gb.elements().len() {
                let s = s_polynomial(&gb.elements()[i], &gb.elements()[j]).unwrap();
                assert!(normal_form(&s, gb.elements()).is_zero());
            }
        }
    }

    #[test]
    fn quotient_multiply_back_membership() {
        let r = ring_xyz(32749);
        let caps = Caps::default();
        let i = point_scheme(&r);
        let f1 = general_member(&r, [3, 5, 11]);
        let f2 = general_member(&r, [7, 2, 19]);
        let j = Ideal::new(&r, vec![f1, f2]).unwrap();
        let jgb = buchberger(&j, &caps).unwrap();
        for g in i.generators() {
            let q = ideal_quotient(&j, g, &caps).unwrap();
            for h in q.generators() {
                assert!(in_ideal(&h.mul(g).unwrap(), &jgb));
            }
        }
    }

    #[test]
    fn resource_caps_trip() {
        let r = ring_xyz(32749);
        let caps = Caps {
            max_basis: 2,
            ..Caps::default()
        };
        let x = var(&r, 0);
        let y = var(&r, 1);
        let z = var(&r, 2);
        let f1 = pow(&x, 2).add(&y.mul(&z).unwrap()).unwrap();
        let f2 = x.mul(&y).unwrap().add(&pow(&z, 2)).unwrap();
        let f3 = pow(&y, 3).sub(&pow(&z, 3)).unwrap();
        let err = buchberger(&Ideal::new(&r, vec![f1, f2, f3]).unwrap(), &caps).unwrap_err();
        assert!(matches!(err, Error::ResourceExceeded { .. }));
    }

    #[test]
    fn ideal_construction_guards() {
        let r = ring_xyz(7);
        assert_eq!(
            Ideal::new(&r, vec![]).unwrap_err(),
            Error::EmptyGeneratorList
        );
        assert_eq!(
            Ideal::new(&r, vec![Polynomial::zero(&r)]).unwrap_err(),
            Error::ZeroGenerator(0)
        );
    }
}
