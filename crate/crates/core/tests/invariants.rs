//! Cross-module invariants of the residual pipeline, exercised on the
//! small corpus: saturation-strategy equivalence, seed invariance, the
//! hypersurface law, generator-presentation invariance, quotient
//! monotonicity and two-path membership checks.

use std::sync::Arc;

use segre_core::{
    buchberger, chern_fulton, dim_degree, ideal_equals, in_ideal, normal_form, quotient_by_ideal,
    sample_graded_element, saturate_by_element, saturate_by_ideal, segre_degrees,
    verify_bezout_identity, Caps, FieldContext, Ideal, Polynomial, PolynomialRing,
    SaturationStrategy, SegreConfig, SplitMix64,
};

fn ring(names: &[&str]) -> Arc<PolynomialRing> {
    PolynomialRing::new(
        names.iter().map(|s| s.to_string()).collect(),
        FieldContext::new(32749).unwrap(),
    )
    .unwrap()
}

fn pn_ring(k: usize) -> Arc<PolynomialRing> {
    PolynomialRing::new(
        (0..=k).map(|i| format!("x{i}")).collect(),
        FieldContext::new(32749).unwrap(),
    )
    .unwrap()
}

fn var(r: &Arc<PolynomialRing>, i: usize) -> Polynomial {
    Polynomial::variable(r, i)
}

fn point_scheme() -> Ideal {
    let r = ring(&["x", "y", "z"]);
    let x = var(&r, 0);
    let y = var(&r, 1);
    Ideal::new(
        &r,
        vec![x.mul(&x).unwrap(), y.mul(&y).unwrap(), x.mul(&y).unwrap()],
    )
    .unwrap()
}

fn cusp_lines() -> Ideal {
    let r = ring(&["x", "y", "z"]);
    let x = var(&r, 0);
    let y = var(&r, 1);
    Ideal::new(
        &r,
        vec![
            x.mul(&x).unwrap().mul(&y).unwrap(),
            x.mul(&y).unwrap().mul(&y).unwrap(),
        ],
    )
    .unwrap()
}

fn conic_xy() -> Ideal {
    let r = ring(&["x", "y", "z"]);
    let x = var(&r, 0);
    let y = var(&r, 1);
    Ideal::new(&r, vec![x.mul(&y).unwrap()]).unwrap()
}

fn rnc(k: usize) -> Ideal {
    let r = pn_ring(k);
    let x: Vec<Polynomial> = (0..=k).map(|i| var(&r, i)).collect();
    let mut gens = Vec::new();
    for i in 0..k {
        for j in (i + 1)..k {
            let minor = x[i]
                .mul(&x[j + 1])
                .unwrap()
                .sub(&x[i + 1].mul(&x[j]).unwrap())
                .unwrap();
            gens.push(minor.monic().unwrap());
        }
    }
    Ideal::new(&r, gens).unwrap()
}

fn quadric_surface() -> Ideal {
    let r = pn_ring(3);
    let g = var(&r, 0)
        .mul(&var(&r, 3))
        .unwrap()
        .sub(&var(&r, 1).mul(&var(&r, 2)).unwrap())
        .unwrap();
    Ideal::new(&r, vec![g]).unwrap()
}

fn random_hypersurface(k: usize, degree: u32, seed: u64) -> Ideal {
    let r = pn_ring(k);
    let field = *r.field();
    let mut rng = SplitMix64::new(seed);
    let terms: Vec<_> = segre_core::monomials_of_degree(&r, degree, 100_000)
        .unwrap()
        .into_iter()
        .map(|m| (field.random(&mut rng, true), m))
        .collect();
    let f = Polynomial::from_term_list(&r, terms).unwrap();
    Ideal::new(&r, vec![f]).unwrap()
}

fn corpus() -> Vec<(&'static str, Ideal)> {
    vec![
        ("point-scheme", point_scheme()),
        ("cusp-lines", cusp_lines()),
        ("conic-xy", conic_xy()),
        ("rnc3", rnc(3)),
        ("rnc4", rnc(4)),
        ("quadric", quadric_surface()),
    ]
}

#[test]
fn strategies_agree_on_the_corpus() {
    for (name, ideal) in corpus() {
        let mut single = SegreConfig::with_seed(42);
        single.strategy = SaturationStrategy::SingleElement;
        let mut full = SegreConfig::with_seed(42);
        full.strategy = SaturationStrategy::FullIdeal;
        let a = segre_degrees(&ideal, &single).unwrap();
        let b = segre_degrees(&ideal, &full).unwrap();
        assert_eq!(
            a.result.segre_degrees, b.result.segre_degrees,
            "{name}: strategies disagree"
        );
        assert_eq!(
            a.result.residual_degrees, b.result.residual_degrees,
            "{name}: residuals disagree"
        );
    }
}

#[test]
fn five_seeds_give_identical_answers() {
    for (name, ideal) in corpus() {
        let mut results = Vec::new();
        for seed in [1u64, 7, 42, 1234, 987654321] {
            let run = segre_degrees(&ideal, &SegreConfig::with_seed(seed)).unwrap();
            assert!(verify_bezout_identity(&run.result), "{name} seed {seed}");
            results.push((run.result.segre_degrees, run.result.residual_degrees));
        }
        for other in &results[1..] {
            assert_eq!(&results[0], other, "{name}: seeds disagree");
        }
    }
}

#[test]
fn hypersurface_law() {
    // A general degree-m hypersurface in P^k has deg s_i = (-1)^i m^(i+1).
    for k in 2..=4usize {
        for m in 1..=3u32 {
            let ideal = random_hypersurface(k, m, 1000 + (k as u64) * 10 + m as u64);
            let run = segre_degrees(&ideal, &SegreConfig::with_seed(5)).unwrap();
            let expect: Vec<i64> = (0..k as u32)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * (m as i64).pow(i + 1)
                })
                .collect();
            assert_eq!(
                run.result.segre_degrees, expect,
                "hypersurface k={k} m={m}"
            );
            assert!(run.result.residual_degrees.iter().all(|&d| d == 0));
        }
    }
}

#[test]
fn leading_segre_degree_matches_top_dimensional_degree() {
    // On reduced corpus members, deg s_0 equals the degree of the scheme
    // after saturating away irrelevant components.
    let caps = Caps::default();
    for (name, ideal) in [
        ("conic-xy", conic_xy()),
        ("rnc3", rnc(3)),
        ("rnc4", rnc(4)),
        ("quadric", quadric_surface()),
    ] {
        let run = segre_degrees(&ideal, &SegreConfig::with_seed(42)).unwrap();
        let r = ideal.ring();
        let irrelevant = Ideal::new(
            r,
            (0..r.num_vars()).map(|i| var(r, i)).collect(),
        )
        .unwrap();
        let saturated = saturate_by_ideal(&ideal, &irrelevant, &caps).unwrap();
        let (_, degree) = dim_degree(&saturated, &caps).unwrap();
        assert_eq!(
            run.result.segre_degrees[0], degree,
            "{name}: s_0 vs top-dimensional degree"
        );
    }
}

#[test]
fn redundant_generators_change_nothing() {
    let caps = Caps::default();
    for (name, ideal) in [("point-scheme", point_scheme()), ("rnc3", rnc(3))] {
        let baseline = segre_degrees(&ideal, &SegreConfig::with_seed(42)).unwrap();
        // Append a random combination of the generators of the top degree.
        let m = ideal.max_generator_degree();
        let mut rng = SplitMix64::new(77);
        let redundant = sample_graded_element(&ideal, m, &mut rng, &caps).unwrap();
        let mut gens = ideal.generators().to_vec();
        gens.push(redundant);
        let padded = Ideal::new(ideal.ring(), gens).unwrap();
        assert!(ideal_equals(&ideal, &padded, &caps).unwrap());
        let run = segre_degrees(&padded, &SegreConfig::with_seed(42)).unwrap();
        assert_eq!(
            run.result.segre_degrees, baseline.result.segre_degrees,
            "{name}: redundant generator changed the answer"
        );
    }
}

#[test]
fn chern_fulton_round_trips_and_euler_values() {
    let cubic = segre_degrees(&rnc(3), &SegreConfig::with_seed(42)).unwrap();
    let cf = chern_fulton(&cubic.result).unwrap();
    assert_eq!(cf.chern_fulton_degrees, vec![3, 2]);
    assert_eq!(cf.euler, 2);

    let rnc4 = segre_degrees(&rnc(4), &SegreConfig::with_seed(42)).unwrap();
    assert_eq!(rnc4.result.segre_degrees, vec![4, -18]);
    let cf = chern_fulton(&rnc4.result).unwrap();
    assert_eq!(cf.euler, 2);

    let quadric = segre_degrees(&quadric_surface(), &SegreConfig::with_seed(42)).unwrap();
    let cf = chern_fulton(&quadric.result).unwrap();
    assert_eq!(cf.chern_fulton_degrees, vec![2, 4, 4]);
    assert_eq!(cf.euler, 4);
}

fn check_quotient_chain(name: &str, ideal: &Ideal) {
    let caps = Caps::default();
    // J generated by a general element of the top graded piece.
    let m = ideal.max_generator_degree();
    let mut rng = SplitMix64::new(3);
    let f1 = sample_graded_element(ideal, m, &mut rng, &caps).unwrap();
    let j = Ideal::new(ideal.ring(), vec![f1]).unwrap();

    let fixed_point = saturate_by_ideal(&j, ideal, &caps).unwrap();
    let fixed_gb = buchberger(&fixed_point, &caps).unwrap();

    let mut current = j.clone();
    for _ in 0..8 {
        let next = quotient_by_ideal(&current, ideal, &caps).unwrap();
        // Monotone: every generator of the previous step is a member.
        let next_gb = buchberger(&next, &caps).unwrap();
        for g in current.generators() {
            assert!(in_ideal(g, &next_gb), "{name}: chain failed to grow");
        }
        // Every step stays inside the fixed point.
        for g in next.generators() {
            assert!(in_ideal(g, &fixed_gb), "{name}: chain escaped the saturation");
        }
        if ideal_equals(&next, &current, &caps).unwrap() {
            assert!(ideal_equals(&next, &fixed_point, &caps).unwrap());
            return;
        }
        current = next;
    }
    panic!("{name}: saturation chain did not stabilize in 8 steps");
}

#[test]
fn quotient_chain_is_monotone_to_the_fixed_point() {
    check_quotient_chain("point-scheme", &point_scheme());
    check_quotient_chain("cusp-lines", &cusp_lines());
}

/// Division with a seed-shuffled divisor preference: an independent
/// reduction path for membership testing.
fn normal_form_shuffled(f: &Polynomial, divisors: &[Polynomial], seed: u64) -> Polynomial {
    let mut order: Vec<usize> = (0..divisors.len()).collect();
    let mut rng = SplitMix64::new(seed);
    for i in (1..order.len()).rev() {
        let j = (rng.next_u64() % (i as u64 + 1)) as usize;
        order.swap(i, j);
    }
    let shuffled: Vec<Polynomial> = order.into_iter().map(|i| divisors[i].clone()).collect();
    normal_form(f, &shuffled)
}

#[test]
fn membership_agrees_across_reduction_paths() {
    let caps = Caps::default();
    let ideal = rnc(3);
    let gb = buchberger(&ideal, &caps).unwrap();
    let r = ideal.ring();
    let mut rng = SplitMix64::new(9);
    for round in 0..20u64 {
        // A member: random combination h_i * g_i.
        let mut member = Polynomial::zero(r);
        for g in ideal.generators() {
            let c = r.field().random(&mut rng, false);
            let mono = r.var_monomial((rng.next_u64() % r.num_vars() as u64) as usize);
            member = member.add(&g.mul_term(c, &mono).unwrap()).unwrap();
        }
        assert!(normal_form(&member, gb.elements()).is_zero());
        assert!(normal_form_shuffled(&member, gb.elements(), round).is_zero());

        // A non-member: member plus a variable.
        let outside = member.add(&var(r, (round % 4) as usize)).unwrap();
        assert!(!normal_form(&outside, gb.elements()).is_zero());
        assert!(!normal_form_shuffled(&outside, gb.elements(), round).is_zero());
    }
}

#[test]
fn single_element_saturation_matches_full_on_sampled_residuals() {
    // The two saturation routes may differ as ideals but must cut out
    // schemes of the same dimension and degree for the sampled J.
    let caps = Caps::default();
    for (name, ideal) in corpus() {
        let m = ideal.max_generator_degree();
        let k = ideal.ring().num_vars() - 1;
        let mut rng = SplitMix64::new(1234);
        let samples: Vec<Polynomial> = (0..k)
            .map(|_| sample_graded_element(&ideal, m, &mut rng, &caps).unwrap())
            .collect();
        let h = sample_graded_element(&ideal, m, &mut rng, &caps).unwrap();
        let (n, _) = dim_degree(&ideal, &caps).unwrap();
        for d in (k as i64 - n)..=(k as i64) {
            let j = Ideal::new(ideal.ring(), samples[..d as usize].to_vec()).unwrap();
            let by_element = saturate_by_element(&j, &h, &caps).unwrap();
            let by_ideal = saturate_by_ideal(&j, &ideal, &caps).unwrap();
            let dd_element = dim_degree(&by_element, &caps).unwrap();
            let dd_ideal = dim_degree(&by_ideal, &caps).unwrap();
            assert_eq!(dd_element, dd_ideal, "{name} at codimension step {d}");
        }
    }
}
