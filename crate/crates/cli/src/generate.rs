//! Generators for the example family: rational normal curves, Segre
//! embeddings, determinantal schemes of random linear forms, and the two
//! small plane schemes used throughout the test corpus.

use std::sync::Arc;

use segre_core::{FieldContext, Ideal, Polynomial, PolynomialRing, SplitMix64};

use crate::error::CliError;

fn ring(num_vars: usize, p: u64) -> Result<Arc<PolynomialRing>, CliError> {
    let field = FieldContext::new(p)
        .map_err(|e| CliError::Validation(format!("characteristic {p}: {e}")))?;
    Ok(PolynomialRing::new(
        (0..num_vars).map(|i| format!("x{i}")).collect(),
        field,
    )?)
}

fn plane_ring(p: u64) -> Result<Arc<PolynomialRing>, CliError> {
    let field = FieldContext::new(p)
        .map_err(|e| CliError::Validation(format!("characteristic {p}: {e}")))?;
    Ok(PolynomialRing::new(
        vec!["x".into(), "y".into(), "z".into()],
        field,
    )?)
}

/// 2x2 minors of the 2x`k` catalecticant matrix `[x0..x_(k-1); x1..x_k]`:
/// the rational normal curve of degree k in P^k.
pub fn rational_normal_curve(k: usize, p: u64) -> Result<Ideal, CliError> {
    if !(2..=20).contains(&k) {
        return Err(CliError::Validation(format!(
            "rnc degree must lie in 2..=20, got {k}"
        )));
    }
    let ring = ring(k + 1, p)?;
    let x: Vec<Polynomial> = (0..=k).map(|i| Polynomial::variable(&ring, i)).collect();
    let mut gens = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            // x_i x_{j+1} - x_{i+1} x_j, normalized monic
            let minor = x[i].mul(&x[j + 1])?.sub(&x[i + 1].mul(&x[j])?)?;
            gens.push(minor.monic()?);
        }
    }
    Ok(Ideal::new(&ring, gens)?)
}

/// 2x2 minors of the (a+1)x(b+1) matrix of Segre coordinates
/// `x_(i(b+1)+j)`: the image of P^a x P^b in P^((a+1)(b+1)-1).
pub fn segre_embedding(a: usize, b: usize, p: u64) -> Result<Ideal, CliError> {
    if !(1..=5).contains(&a) || !(1..=5).contains(&b) {
        return Err(CliError::Validation(format!(
            "segre factors must lie in 1..=5, got {a} {b}"
        )));
    }
    let cols = b + 1;
    let ring = ring((a + 1) * (b + 1), p)?;
    let entry = |i: usize, j: usize| Polynomial::variable(&ring, i * cols + j);
    let mut gens = Vec::new();
    for i1 in 0..=a {
        for i2 in (i1 + 1)..=a {
            for j1 in 0..=b {
                for j2 in (j1 + 1)..=b {
                    let minor = entry(i1, j1)
                        .mul(&entry(i2, j2))?
                        .sub(&entry(i1, j2).mul(&entry(i2, j1))?)?;
                    gens.push(minor.monic()?);
                }
            }
        }
    }
    Ok(Ideal::new(&ring, gens)?)
}

/// r x r minors of a `rows` x `cols` matrix of seeded random linear
/// forms. The ambient dimension is the expected codimension
/// (rows-r+1)(cols-r+1) plus two, so the scheme generically is a surface,
/// the shape of the determinantal benchmark family.
pub fn generic_minors(
    r: usize,
    rows: usize,
    cols: usize,
    p: u64,
    seed: u64,
) -> Result<Ideal, CliError> {
    if !(1..=8).contains(&rows) || !(1..=8).contains(&cols) {
        return Err(CliError::Validation(format!(
            "matrix sides must lie in 1..=8, got {rows} x {cols}"
        )));
    }
    if r < 1 || r > rows.min(cols) {
        return Err(CliError::Validation(format!(
            "minor size {r} must lie in 1..=min({rows}, {cols})"
        )));
    }
    let k = (rows - r + 1) * (cols - r + 1) + 2;
    let ring = ring(k + 1, p)?;
    let field = *ring.field();
    let mut rng = SplitMix64::new(seed);
    let mut matrix: Vec<Vec<Polynomial>> = Vec::with_capacity(rows);
    for _ in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for _ in 0..cols {
            let mut form = Polynomial::zero(&ring);
            for v in 0..=k {
                let c = field.random(&mut rng, false);
                if !c.is_zero() {
                    form = form.add(&Polynomial::variable(&ring, v).scale(c))?;
                }
            }
            row.push(form);
        }
        matrix.push(row);
    }
    let mut gens = Vec::new();
    let row_sets = subsets(rows, r);
    let col_sets = subsets(cols, r);
    for rs in &row_sets {
        for cs in &col_sets {
            let d = determinant(&matrix, rs, cs, &ring)?;
            if !d.is_zero() {
                gens.push(d.monic()?);
            }
        }
    }
    if gens.is_empty() {
        return Err(CliError::Validation(
            "all minors vanished; try another seed".into(),
        ));
    }
    Ok(Ideal::new(&ring, gens)?)
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn walk(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            walk(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    walk(0, n, k, &mut cur, &mut out);
    out
}

/// Cofactor expansion along the first selected row.
fn determinant(
    matrix: &[Vec<Polynomial>],
    rows: &[usize],
    cols: &[usize],
    ring: &Arc<PolynomialRing>,
) -> Result<Polynomial, CliError> {
    if rows.len() == 1 {
        return Ok(matrix[rows[0]][cols[0]].clone());
    }
    let mut acc = Polynomial::zero(ring);
    let rest_rows = &rows[1..];
    for (idx, &c) in cols.iter().enumerate() {
        let rest_cols: Vec<usize> = cols
            .iter()
            .copied()
            .filter(|&cc| cc != c)
            .collect();
        let minor = determinant(matrix, rest_rows, &rest_cols, ring)?;
        let contribution = matrix[rows[0]][c].mul(&minor)?;
        acc = if idx % 2 == 0 {
            acc.add(&contribution)?
        } else {
            acc.sub(&contribution)?
        };
    }
    Ok(acc)
}

/// (x^2, y^2, xy): a degree-3 point scheme supported at one point of P^2.
pub fn point_scheme(p: u64) -> Result<Ideal, CliError> {
    let ring = plane_ring(p)?;
    let x = Polynomial::variable(&ring, 0);
    let y = Polynomial::variable(&ring, 1);
    Ok(Ideal::new(
        &ring,
        vec![x.mul(&x)?, y.mul(&y)?, x.mul(&y)?],
    )?)
}

/// (x^2 y, x y^2): two lines with an embedded point at their crossing.
pub fn cusp_lines(p: u64) -> Result<Ideal, CliError> {
    let ring = plane_ring(p)?;
    let x = Polynomial::variable(&ring, 0);
    let y = Polynomial::variable(&ring, 1);
    Ok(Ideal::new(
        &ring,
        vec![x.mul(&x)?.mul(&y)?, x.mul(&y)?.mul(&y)?],
    )?)
}

/// A dense random plane curve of the given degree.
pub fn random_plane_curve(degree: u32, p: u64, seed: u64) -> Result<Ideal, CliError> {
    if !(1..=20).contains(&degree) {
        return Err(CliError::Validation(format!(
            "curve degree must lie in 1..=20, got {degree}"
        )));
    }
    let ring = plane_ring(p)?;
    let field = *ring.field();
    let mut rng = SplitMix64::new(seed);
    let monos = segre_core::monomials_of_degree(&ring, degree, 100_000)?;
    let terms: Vec<_> = monos
        .into_iter()
        .map(|m| (field.random(&mut rng, true), m))
        .collect();
    let f = Polynomial::from_term_list(&ring, terms)?;
    Ok(Ideal::new(&ring, vec![f])?)
}

/// A dense random hypersurface of the given degree in P^k.
pub fn random_hypersurface(k: usize, degree: u32, p: u64, seed: u64) -> Result<Ideal, CliError> {
    if !(1..=10).contains(&k) || !(1..=20).contains(&degree) {
        return Err(CliError::Validation(format!(
            "hypersurface parameters out of range: k={k}, degree={degree}"
        )));
    }
    let ring = ring(k + 1, p)?;
    let field = *ring.field();
    let mut rng = SplitMix64::new(seed);
    let monos = segre_core::monomials_of_degree(&ring, degree, 1_000_000)?;
    let terms: Vec<_> = monos
        .into_iter()
        .map(|m| (field.random(&mut rng, true), m))
        .collect();
    let f = Polynomial::from_term_list(&ring, terms)?;
    Ok(Ideal::new(&ring, vec![f])?)
}
