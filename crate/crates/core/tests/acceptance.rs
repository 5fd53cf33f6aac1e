//! Acceptance suite: one test per criterion, each printing a PASS line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Criteria:
//! 1. class-table reproduction over the catalog at 3 points per system
//! 2. covariance law for all 26 basis covariants over random Möbius maps
//! 3. root-loci suite: each partition ideal vanishes on its stratum and
//!    rejects every one-step-finer stratum
//! 4. independent termwise transvectant oracle
//! 5. the restricted-derivative and Hessian-derivative identities
//! 6. flow invariance of class verdicts plus the [42] → [411] transience
//! 7. conformal invariance of verdicts and the S-normalization contract
//! 8. the inversion-matrix encoding against the direct closed forms

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::{Complex, Float};
use sextic_core::catalog::{catalog_y, reproduce_table3, CATALOG};
use sextic_core::classify::{
    classify, ideal_eval, one_step_refinements, partition_ideal, sample_root_locus, ClassLabel,
    IdealName, ALL_PARTITIONS,
};
use sextic_core::conformal::{dot3, normalize_s, qrs_under_inversion};
use sextic_core::covariant::{covariance_check, transvectant, CovName};
use sextic_core::flow::{
    hatted_derivatives_yp3, hessian_closure_check, hessian_tail_factor, integrate_checkpoints,
    ladder_combos, y_derivatives, Path,
};
use sextic_core::repspace::{
    qrs_from_y, sextic_from_y, xy_from_qrs, y_from_sextic, StructurePoint, Var, YSeptet,
};
use sextic_core::scalar::{Ctx, Scalar};
use sextic_core::sextic::{
    mobius_apply, roots_with_multiplicity_cfg, MobiusMap, RootConfig, Sextic,
};
use std::time::Instant;

fn ctx() -> Ctx {
    Ctx::new(64, 1e-30)
}

fn rnd_scalar(rng: &mut StdRng, c: &Ctx) -> Scalar {
    c.from_f64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

/// Random map with bounded condition: |det| at least half the squared entry
/// scale, so the induced root map distorts chordal separations by a bounded
/// factor and verdicts stay inside the tolerance's resolving power.
fn rnd_mobius(rng: &mut StdRng, c: &Ctx) -> MobiusMap {
    loop {
        let entries = [
            rnd_scalar(rng, c),
            rnd_scalar(rng, c),
            rnd_scalar(rng, c),
            rnd_scalar(rng, c),
        ];
        let mut m2 = 0f64;
        for e in &entries {
            let a = e.abs().to_f64();
            m2 = m2.max(a * a);
        }
        let [a, b, cc, d] = entries;
        if let Ok(m) = MobiusMap::new(a, b, cc, d) {
            if m.det().abs().to_f64() > 0.5 * m2.max(0.05) {
                return m;
            }
        }
    }
}

fn rnd_sp(rng: &mut StdRng, c: &Ctx) -> StructurePoint {
    StructurePoint::from_vals((0..10).map(|_| rnd_scalar(rng, c)).collect())
}

fn y_norm(y: &YSeptet) -> Float {
    Scalar::max_abs(y.as_slice())
}

#[test]
fn acceptance_1_table3_reproduction() {
    let c = ctx();
    let started = Instant::now();
    let report = reproduce_table3(&c).expect("catalog evaluation succeeds");
    let elapsed = started.elapsed();
    assert!(report.ok(), "vanishing-matrix failures: {:?}", report.failures);
    for (row, entry) in CATALOG.iter().enumerate() {
        assert_eq!(
            report.matrix[row],
            entry.label.vanishing_pattern(),
            "row {} drifted",
            entry.label
        );
    }
    assert!(
        elapsed.as_secs_f64() < 30.0,
        "table reproduction took {elapsed:?}, budget 30 s"
    );
    println!(
        "PASS criterion 1: 10×9 vanishing matrix reproduced at 3 points/system in {:.2?}",
        elapsed
    );
}

#[test]
fn acceptance_2_covariance_suite() {
    let c = ctx();
    let started = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x2001);
    for name in CovName::ALL {
        assert_eq!(
            2 * name.weight(),
            6 * name.degree() - name.order(),
            "{name:?} weight must equal (6d−k)/2"
        );
    }
    let pairs = 50;
    for _ in 0..pairs {
        let p = Sextic::new((0..7).map(|_| rnd_scalar(&mut rng, &c)).collect());
        let m = rnd_mobius(&mut rng, &c);
        for name in CovName::ALL {
            let r = covariance_check(&p, &m, name, &c);
            assert!(
                r.abs() < 1e-25,
                "{name:?} covariance residual {} over budget",
                r.abs()
            );
        }
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 60.0,
        "covariance suite took {elapsed:?}, budget 60 s"
    );
    println!(
        "PASS criterion 2: 26 covariants × {pairs} random maps, residual < 1e-25, in {:.2?}",
        elapsed
    );
}

#[test]
fn acceptance_3_root_loci_suite() {
    let c = ctx();
    let mut rng = StdRng::seed_from_u64(0x3001);
    let samples = 100;
    let mut vanish_checks = 0usize;
    let mut reject_checks = 0usize;
    for partition in ALL_PARTITIONS {
        let Some(ideal) = partition_ideal(partition) else {
            continue; // six distinct roots carry no ideal
        };
        for _ in 0..samples {
            let p = sample_root_locus(partition, &mut rng, &c);
            let y = y_from_sextic(&p, &c);
            let eval = ideal_eval(ideal, &y, &c);
            assert!(
                eval.vanishes,
                "{ideal:?} must vanish on its stratum {partition:?} (ratio {:.3e})",
                eval.worst_ratio()
            );
            vanish_checks += 1;
        }
        for finer in one_step_refinements(partition) {
            for _ in 0..samples {
                let p = sample_root_locus(&finer, &mut rng, &c);
                let y = y_from_sextic(&p, &c);
                let eval = ideal_eval(ideal, &y, &c);
                assert!(
                    !eval.vanishes,
                    "{ideal:?} must reject the finer stratum {finer:?} (ratio {:.3e})",
                    eval.worst_ratio()
                );
                reject_checks += 1;
            }
        }
    }
    println!(
        "PASS criterion 3: {vanish_checks} vanishing + {reject_checks} rejection checks, zero misclassifications"
    );
}

/// Independent termwise transvectant: explicit k-th derivatives and naive
/// convolution over plain rug complexes, kept apart from the library path.
fn oracle_transvectant(q: &[Complex], rp: &[Complex], r: usize, prec: u32) -> Vec<Complex> {
    let m = q.len() - 1;
    let n = rp.len() - 1;
    let deriv_k = |poly: &[Complex], k: usize| -> Vec<Complex> {
        let mut cur: Vec<Complex> = poly.to_vec();
        for _ in 0..k {
            cur = cur
                .iter()
                .enumerate()
                .skip(1)
                .map(|(j, v)| Complex::with_val(prec, v * Float::with_val(prec, j as u32)))
                .collect();
            if cur.is_empty() {
                cur.push(Complex::new(prec));
            }
        }
        cur
    };
    let binom = |nn: i64, kk: i64| -> i64 {
        if kk < 0 || kk > nn {
            return 0;
        }
        let kk = kk.min(nn - kk);
        let mut acc = 1i64;
        for j in 0..kk {
            acc = acc * (nn - j) / (j + 1);
        }
        acc
    };
    let r_fact: i64 = (1..=r as i64).product::<i64>().max(1);
    let out_len = m + n - 2 * r + 1;
    let mut acc = vec![Complex::new(prec); out_len];
    for k in 0..=r {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        let coeff = sign
            * r_fact
            * binom((m - r + k) as i64, k as i64)
            * binom((n - k) as i64, (r - k) as i64);
        if coeff == 0 {
            continue;
        }
        let dq = deriv_k(q, r - k);
        let dr = deriv_k(rp, k);
        for (a, qa) in dq.iter().enumerate() {
            for (b, rb) in dr.iter().enumerate() {
                if a + b < out_len {
                    let term = Complex::with_val(prec, qa * rb) * coeff;
                    acc[a + b] += term;
                }
            }
        }
    }
    acc
}

#[test]
fn acceptance_4_transvectant_oracle() {
    let c = ctx();
    let prec = 300u32;
    let mut rng = StdRng::seed_from_u64(0x4001);
    for trial in 0..200 {
        let m = rng.gen_range(2..=6usize);
        let n = rng.gen_range(2..=6usize);
        let r = rng.gen_range(0..=m.min(n));
        let q: Vec<Scalar> = (0..=m).map(|_| rnd_scalar(&mut rng, &c)).collect();
        let rp: Vec<Scalar> = (0..=n).map(|_| rnd_scalar(&mut rng, &c)).collect();
        let got = transvectant(&q, &rp, r).unwrap();
        let qc: Vec<Complex> = q.iter().map(|s| s.as_complex().clone()).collect();
        let rc: Vec<Complex> = rp.iter().map(|s| s.as_complex().clone()).collect();
        let expect = oracle_transvectant(&qc, &rc, r, prec);
        let mut scale = Float::with_val(prec, 1e-30);
        for g in &got {
            let a = g.abs();
            if a > scale {
                scale = a;
            }
        }
        for (a, b) in got.iter().zip(&expect) {
            let diff = Scalar::from_complex(Complex::with_val(prec, a.as_complex() - b)).abs();
            let rel = diff / scale.clone();
            assert!(rel < 1e-25, "trial {trial}: oracle mismatch {rel}");
        }
    }
    // pinned values
    let z6 = Sextic::monomial(&c, c.one(), 6);
    let t = transvectant(z6.coeffs(), z6.coeffs(), 2).unwrap();
    assert!(Scalar::max_abs(&t) < 1e-55, "(z⁶, z⁶)⁽²⁾ must vanish");
    let mut v: Vec<Scalar> = (0..7).map(|_| c.zero()).collect();
    v[0] = c.one();
    v[6] = c.one();
    let p = Sextic::new(v);
    let t6 = transvectant(p.coeffs(), p.coeffs(), 6).unwrap();
    assert_eq!(t6.len(), 1);
    assert!((&t6[0] - &c.int(1_036_800)).abs() < 1e-40);
    println!("PASS criterion 4: termwise oracle matches on 200 triples; pinned values hold");
}

#[test]
fn acceptance_5_derivative_identities() {
    let c = ctx();
    let mut rng = StdRng::seed_from_u64(0x5001);
    // (a) restricted-derivative identities at S = 0, 100 points
    for _ in 0..100 {
        let mut sp = rnd_sp(&mut rng, &c);
        sp.set(Var::S1, c.zero());
        sp.set(Var::S2, c.zero());
        sp.set(Var::S3, c.zero());
        let (_, y) = xy_from_qrs(&sp, &c);
        let dy = y_derivatives(&sp, &c);
        let top: [Scalar; 3] = std::array::from_fn(|j| dy[j][6].clone());
        let got = ladder_combos(&top, &c);
        let want = hatted_derivatives_yp3(&y, &c);
        let scale = {
            let n = y_norm(&y);
            n.clone() * n + 1u32
        };
        for k in 0..3 {
            let resid = (&got[k] - &want[k]).abs() / scale.clone();
            assert!(resid < 1e-20, "restricted identity {k} residual {resid}");
        }
    }
    // (b) Hessian-component identities at 50 random full points
    for _ in 0..50 {
        let sp = rnd_sp(&mut rng, &c);
        let res = hessian_closure_check(&sp, &c);
        for (k, r) in res.iter().enumerate() {
            assert!(r.abs() < 1e-20, "hessian identity {k} residual {}", r.abs());
        }
    }
    // (c) the cubic tail vanishes on multiplicity-six points
    for _ in 0..20 {
        let p = sample_root_locus(&[6], &mut rng, &c);
        let y = y_from_sextic(&p, &c);
        let tail = hessian_tail_factor(&y, &c);
        let n = y_norm(&y);
        let scale = n.clone() * n.clone() * n * 1e4;
        assert!(tail.abs() < scale * 1e-20, "tail must vanish on [6] points");
    }
    println!("PASS criterion 5: restricted-derivative and Hessian identities hold (100 + 50 + 20 points)");
}

#[test]
fn acceptance_6_flow_invariance() {
    let base = ctx();
    // Checkpoint classification runs at a looser tolerance matched to the
    // integrator's truncation error; vanishing residuals stay 8+ orders
    // below it and non-vanishing ones 12+ orders above.
    let check = Ctx::new(64, 1e-12);
    let mut rng = StdRng::seed_from_u64(0x6001);
    let point = [base.int(1), base.int(1), base.int(1)];
    for entry in &CATALOG {
        let y0 = catalog_y(entry.label, &point, &base).unwrap();
        let sp0 = qrs_from_y(&y0, &base);
        for _path in 0..5 {
            let mut waypoints = vec![[base.zero(), base.zero(), base.zero()]];
            let mut cur = [0f64; 6];
            for _ in 0..10 {
                for slot in cur.iter_mut() {
                    *slot += rng.gen_range(-0.004..0.004);
                }
                waypoints.push([
                    base.from_f64(cur[0], cur[1]),
                    base.from_f64(cur[2], cur[3]),
                    base.from_f64(cur[4], cur[5]),
                ]);
            }
            let path = Path::new(waypoints, 24);
            let checkpoints = integrate_checkpoints(&sp0, &path, &base).unwrap();
            assert_eq!(checkpoints.len(), 11);
            for (k, sp) in checkpoints.iter().enumerate().skip(1) {
                let (_, y) = xy_from_qrs(sp, &base);
                let verdict = classify(&y, &check).unwrap();
                assert_eq!(
                    verdict.label, entry.label,
                    "class {} drifted at checkpoint {k}",
                    entry.label
                );
            }
        }
    }
    // [42] transience: start on the [42] locus of the [411]-class system.
    let locus_point = [base.i(), base.one(), base.int(3)];
    let y42 = catalog_y(ClassLabel::V, &locus_point, &base).unwrap();
    let sp42 = qrs_from_y(&y42, &base);
    assert!(ideal_eval(IdealName::I42, &y42, &base).vanishes);
    let p0 = sextic_from_y(&y42, &base);
    let rs0 = roots_with_multiplicity_cfg(&p0, &base, RootConfig { cluster_eps: 1e-4 });
    assert_eq!(rs0.partition, vec![4, 2]);
    assert_eq!(classify(&y42, &check).unwrap().label, ClassLabel::V);
    let step = Path::new(
        vec![
            [base.zero(), base.zero(), base.zero()],
            [base.ratio(1, 25), base.ratio(1, 40), base.ratio(-1, 30)],
        ],
        64,
    );
    let sp_end = sextic_core::flow::integrate(&sp42, &step, &base).unwrap();
    let (_, y_end) = xy_from_qrs(&sp_end, &base);
    let p_end = sextic_from_y(&y_end, &base);
    let rs_end = roots_with_multiplicity_cfg(&p_end, &base, RootConfig { cluster_eps: 1e-4 });
    assert_eq!(rs_end.partition, vec![4, 1, 1], "double root must split");
    assert!(
        !ideal_eval(IdealName::I42, &y_end, &check).vanishes,
        "transient ideal must fail after the step"
    );
    assert_eq!(classify(&y_end, &check).unwrap().label, ClassLabel::V);
    println!("PASS criterion 6: class verdicts stable over 10×5 paths × 10 checkpoints; [42] → [411] transience observed");
}

#[test]
fn acceptance_7_conformal_invariance() {
    let c = ctx();
    // A möbius map can compress the relative distance between a generic
    // point and a deep variety by many orders (observed: down to ~1e-31
    // from 1e-9 for the rank-3 Jacobian generator), so verdict invariance
    // is checked at a resolution whose tolerance band sits well below the
    // worst orbit compression and well above roundoff.
    let fine = Ctx::new(128, 1e-45);
    let mut rng = StdRng::seed_from_u64(0x7001);
    let point = [c.int(1), c.int(1), c.int(1)];
    // classify ∘ möbius = classify, 50 maps per class representative
    for entry in &CATALOG {
        let y = catalog_y(entry.label, &point, &fine).unwrap();
        for _ in 0..50 {
            let m = rnd_mobius(&mut rng, &fine);
            let p = sextic_from_y(&y, &fine);
            let y2 = y_from_sextic(&mobius_apply(&p, &m), &fine);
            let verdict = classify(&y2, &fine).unwrap();
            assert_eq!(
                verdict.label, entry.label,
                "class {} not möbius-invariant",
                entry.label
            );
        }
    }
    // normalize_s drives S below 1e-25 and returns (Q, R) exactly
    for _ in 0..100 {
        let sp = rnd_sp(&mut rng, &c);
        let (moves, out) = normalize_s(&sp, &c).unwrap();
        let scale = sp.norm() + 1u32;
        for v in [Var::S1, Var::S2, Var::S3] {
            assert!(
                out.get(v).abs() / scale.clone() < 1e-25,
                "S residual over budget"
            );
        }
        for v in [
            Var::R12_1,
            Var::R12_2,
            Var::R13_1,
            Var::R13_3,
            Var::R23_2,
            Var::R23_3,
            Var::Q123,
        ] {
            let d = (out.get(v) - sp.get(v)).abs() / scale.clone();
            assert!(d < 1e-25, "(Q,R) drifted by {d}");
        }
        assert!(!moves.is_empty());
    }
    println!("PASS criterion 7: verdicts möbius-invariant (10×50); S-normalization meets 1e-25 on 100 points");
}

#[test]
fn acceptance_8_inversion_matrix_oracle() {
    let c = ctx();
    let mut rng = StdRng::seed_from_u64(0x8001);
    let mut done = 0;
    while done < 50 {
        let sp = rnd_sp(&mut rng, &c);
        let u = [
            rnd_scalar(&mut rng, &c),
            rnd_scalar(&mut rng, &c),
            rnd_scalar(&mut rng, &c),
        ];
        if dot3(&u).abs() < 0.2 {
            continue;
        }
        let direct = qrs_under_inversion(&sp, &u, &c).unwrap();
        let (_, y_direct) = xy_from_qrs(&direct, &c);
        let (_, y0) = xy_from_qrs(&sp, &c);
        // matrix route, raw (no scalar correction)
        let m = sextic_core::conformal::inversion_matrix(&u, &c).unwrap();
        let p = sextic_from_y(&y0, &c);
        let y_matrix = y_from_sextic(&mobius_apply(&p, &m), &c);
        // documented scalar: (u·u)⁸
        let scalar = dot3(&u).pow_i64(8);
        let scale = Scalar::max_abs(y_matrix.as_slice()) + Float::with_val(c.prec.bits(), 1e-20);
        for k in 0..7 {
            let expect = &y_direct[k] * &scalar;
            let resid = (&y_matrix[k] - &expect).abs() / scale.clone();
            assert!(
                resid < 1e-18,
                "matrix action deviates from the closed forms: {resid}"
            );
        }
        done += 1;
    }
    println!("PASS criterion 8: matrix encoding matches direct inversion forms on 50 pairs (scalar (u·u)⁸)");
}
