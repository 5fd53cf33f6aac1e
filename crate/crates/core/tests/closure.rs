//! Differential-closure spot checks: on points of each persistent variety,
//! the directional derivative of every generator along the translation flow
//! vanishes at the generator's jet scale — the numeric shadow of the ideals
//! being closed under differentiation. Also the transient-ideal sanity
//! check: the discriminant generator vanishes exactly when the root finder
//! reports a repeated root.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::Float;
use sextic_core::catalog::catalog_sextic;
use sextic_core::classify::{
    ideal_eval, ideal_generators, sample_root_locus, ClassLabel, IdealName,
};
use sextic_core::covariant::HilbertBasis;
use sextic_core::flow::y_derivatives;
use sextic_core::repspace::{qrs_from_y, sextic_from_y, xy_from_qrs, y_from_sextic, Var};
use sextic_core::scalar::{Ctx, Jet, Mag, Scalar};
use sextic_core::sextic::{mobius_apply, roots_with_multiplicity, MobiusMap, Sextic};

fn ctx() -> Ctx {
    Ctx::new(64, 1e-30)
}

fn rnd_scalar(rng: &mut StdRng, c: &Ctx) -> Scalar {
    c.from_f64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

fn rnd_mobius(rng: &mut StdRng, c: &Ctx) -> MobiusMap {
    loop {
        if let Ok(m) = MobiusMap::new(
            rnd_scalar(rng, c),
            rnd_scalar(rng, c),
            rnd_scalar(rng, c),
            rnd_scalar(rng, c),
        ) {
            if m.det().abs() > 0.3 {
                return m;
            }
        }
    }
}

/// A random point on the variety of the given persistent ideal.
fn sample_variety(name: IdealName, rng: &mut StdRng, c: &Ctx) -> Sextic {
    match name {
        IdealName::I6 => sample_root_locus(&[6], rng, c),
        IdealName::I51 => sample_root_locus(&[5, 1], rng, c),
        IdealName::I33 => sample_root_locus(&[3, 3], rng, c),
        IdealName::I411 => sample_root_locus(&[4, 1, 1], rng, c),
        IdealName::I3111 => sample_root_locus(&[3, 1, 1, 1], rng, c),
        IdealName::I3111Cr => {
            // Möbius orbit of the canonical form z³(z³ − 1).
            let mut coeffs: Vec<Scalar> = (0..7).map(|_| c.zero()).collect();
            coeffs[6] = c.one();
            coeffs[3] = c.int(-1);
            let p = Sextic::new(coeffs);
            mobius_apply(&p, &rnd_mobius(rng, c))
        }
        IdealName::IM6Cr => loop {
            // Multi-ratio λ₄ = λ₅λ₆ with the persistence condition solved
            // for λ₆: (λ₅²−λ₅+1)λ₆² − (λ₅²+1)λ₆ + (λ₅²−λ₅+1) = 0.
            let l5 = rnd_scalar(rng, c);
            let a = &(&(&l5 * &l5) - &l5) + &c.one();
            if a.abs() < 0.1 {
                continue;
            }
            let b = &(&l5 * &l5) + &c.one();
            let disc = &(&b * &b) - &(&(&a * &a)).scale_ratio(4, 1);
            let l6 = &(&b + &disc.sqrt()) / &a.scale_ratio(2, 1);
            let map = |l: &Scalar| &(&c.one() - l) / &(&c.one() + l);
            let one_plus = |l: &Scalar| (&c.one() + l).abs();
            let l56 = &l5 * &l6;
            if one_plus(&l5) < 0.1 || one_plus(&l6) < 0.1 || one_plus(&l56) < 0.1 {
                continue;
            }
            let roots = [
                c.int(-1),
                c.zero(),
                c.one(),
                map(&l56),
                map(&l5),
                map(&l6),
            ];
            let mut distinct = true;
            for i in 0..6 {
                for j in (i + 1)..6 {
                    if (&roots[i] - &roots[j]).abs() < 0.05 {
                        distinct = false;
                    }
                }
            }
            if !distinct {
                continue;
            }
            let lead = rnd_scalar(rng, c);
            if lead.abs() < 0.4 {
                continue;
            }
            let mut coeffs = vec![lead];
            for r in &roots {
                let mut next = vec![c.zero(); coeffs.len() + 1];
                for (k, ck) in coeffs.iter().enumerate() {
                    next[k + 1] = &next[k + 1] + ck;
                    next[k] = &next[k] - &(ck * r);
                }
                coeffs = next;
            }
            break Sextic::new(coeffs);
        },
        IdealName::IJac => {
            // The rank-2 representative family at a random complex point,
            // pushed around by a random Möbius map.
            let point = [
                c.from_f64(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0)),
                c.from_f64(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0)),
                c.from_f64(rng.gen_range(0.5..2.0), rng.gen_range(-1.0..1.0)),
            ];
            let p = catalog_sextic(ClassLabel::I, &point, c).unwrap();
            mobius_apply(&p, &rnd_mobius(rng, c))
        }
        other => panic!("no variety sampler for {other:?}"),
    }
}

#[test]
fn generator_derivatives_vanish_on_persistent_varieties() {
    let c = ctx();
    let mut rng = StdRng::seed_from_u64(0xC105);
    let ideals = [
        IdealName::I6,
        IdealName::I51,
        IdealName::I33,
        IdealName::I411,
        IdealName::I3111,
        IdealName::I3111Cr,
        IdealName::IM6Cr,
        IdealName::IJac,
    ];
    for name in ideals {
        for trial in 0..50 {
            let p = sample_variety(name, &mut rng, &c);
            let y = y_from_sextic(&p, &c);
            // the ideal vanishes at the sampled point
            let eval = ideal_eval(name, &y, &c);
            assert!(
                eval.vanishes,
                "{name:?} must vanish on its sampled variety point (trial {trial}, ratio {:.3e})",
                eval.worst_ratio()
            );
            // random S exercises that the S-terms drop out of the closure
            let mut sp = qrs_from_y(&y, &c);
            sp.set(Var::S1, rnd_scalar(&mut rng, &c));
            sp.set(Var::S2, rnd_scalar(&mut rng, &c));
            sp.set(Var::S3, rnd_scalar(&mut rng, &c));
            let vel = [
                rnd_scalar(&mut rng, &c),
                rnd_scalar(&mut rng, &c),
                rnd_scalar(&mut rng, &c),
            ];
            let dy = y_derivatives(&sp, &c);
            let (_, y_check) = xy_from_qrs(&sp, &c);
            let ydot: Vec<Scalar> = (0..7)
                .map(|m| {
                    let mut acc = c.zero();
                    for j in 0..3 {
                        acc = &acc + &(&dy[j][m] * &vel[j]);
                    }
                    acc
                })
                .collect();
            let p_val = sextic_from_y(&y_check, &c);
            let pdot = sextic_from_y(&ydot.clone().try_into().unwrap(), &c);
            let jets: Vec<Jet<Scalar>> = (0..7)
                .map(|k| Jet::new(p_val.coeff(k).clone(), pdot.coeff(k).clone()))
                .collect();
            let basis = HilbertBasis::compute(&jets);
            let gens = ideal_generators(name, &basis);
            let mag_jets: Vec<Jet<Mag>> = (0..7)
                .map(|k| {
                    Jet::new(
                        Mag(p_val.coeff(k).abs().to_f64()),
                        Mag(pdot.coeff(k).abs().to_f64()),
                    )
                })
                .collect();
            let mag_basis = HilbertBasis::compute(&mag_jets);
            let mag_gens = ideal_generators(name, &mag_basis);
            for (gen, mag_gen) in gens.iter().zip(&mag_gens) {
                let mut residual = Float::new(c.prec.bits());
                for coeff in gen {
                    let a = coeff.d.abs();
                    if a > residual {
                        residual = a;
                    }
                }
                let scale = mag_gen.iter().map(|m| m.d.0).fold(0.0, f64::max);
                let threshold = Float::with_val(c.prec.bits(), scale) * c.tol.tol_rel;
                assert!(
                    residual <= threshold,
                    "{name:?} generator derivative {residual} over scale {scale:e} (trial {trial})"
                );
            }
        }
    }
}

#[test]
fn discriminant_agrees_with_root_finder_across_strata() {
    let c = ctx();
    let mut rng = StdRng::seed_from_u64(0xD15C);
    let strata: [&[u32]; 8] = [
        &[1, 1, 1, 1, 1, 1],
        &[2, 1, 1, 1, 1],
        &[2, 2, 1, 1],
        &[3, 1, 1, 1],
        &[2, 2, 2],
        &[3, 2, 1],
        &[4, 2],
        &[6],
    ];
    let mut checked = 0;
    while checked < 200 {
        let partition = strata[rng.gen_range(0..strata.len())];
        let p = sample_root_locus(partition, &mut rng, &c);
        let y = y_from_sextic(&p, &c);
        let disc = ideal_eval(IdealName::I21111, &y, &c);
        let rs = roots_with_multiplicity(&p, &c);
        let has_repeat = rs.partition.iter().any(|&m| m > 1);
        assert_eq!(
            disc.vanishes, has_repeat,
            "discriminant vs root finder disagree on {partition:?}"
        );
        checked += 1;
    }
}
