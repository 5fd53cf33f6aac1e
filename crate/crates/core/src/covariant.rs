//! Transvectants and the 26-covariant Hilbert basis of a binary sextic.
//!
//! Everything here is written over the [`Ring`] trait so the same generator
//! code runs with plain scalars, with first-order jets (for directional
//! derivatives along the translation flow), and with magnitude bounds (for
//! tolerance scales). Polynomials are coefficient vectors of length
//! `formal order + 1`, low degree first; trailing zeros are meaningful and
//! are kept, because the transvectant's binomial weights depend on the
//! formal order, not the visible degree.

use crate::error::Error;
use crate::scalar::{Ctx, Jet, Mag, Ring, Scalar};
use crate::sextic::{apply_form, mobius_apply, MobiusMap, Sextic};
use crate::Result;
use rug::Float;

/// c(n, k) as i64; small arguments only.
fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1i64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

fn factorial(r: i64) -> i64 {
    (1..=r).product::<i64>().max(1)
}

/// Sum of two equal-length coefficient vectors.
pub fn poly_add<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    assert_eq!(a.len(), b.len(), "formal orders must match");
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

/// Product of two forms; formal orders add.
pub fn poly_mul<T: Ring>(a: &[T], b: &[T]) -> Vec<T> {
    let zero = a[0].zero_like();
    let mut out = vec![zero; a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        for (j, bj) in b.iter().enumerate() {
            out[i + j] = out[i + j].plus(&ai.times(bj));
        }
    }
    out
}

/// Rescale every coefficient by num/den.
pub fn poly_scale<T: Ring>(a: &[T], num: i64, den: i64) -> Vec<T> {
    a.iter().map(|x| x.scale(num, den)).collect()
}

/// Formal derivative; the formal order drops by one.
fn poly_deriv<T: Ring>(a: &[T]) -> Vec<T> {
    if a.len() == 1 {
        return vec![a[0].zero_like()];
    }
    a.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c.scale(k as i64, 1))
        .collect()
}

/// The r-th transvectant of forms with formal orders m = q.len()−1 and
/// n = rp.len()−1:
///
/// (Q, R)⁽ʳ⁾ = r! Σₖ (−1)ᵏ C(m−r+k, k) C(n−k, r−k) Q⁽ʳ⁻ᵏ⁾ R⁽ᵏ⁾
///
/// equivalently Σₖ (−1)ᵏ C(r,k) · [(m−r+k)!/(m−r)!] · [(n−k)!/(n−r)!]
/// Q⁽ʳ⁻ᵏ⁾R⁽ᵏ⁾, the omega-process expansion in inhomogeneous form. The naive
/// sum has formal order m+n−r, but its top r coefficients cancel
/// identically; the result is returned at the true formal order m+n−2r.
pub fn transvectant<T: Ring>(q: &[T], rp: &[T], r: usize) -> Result<Vec<T>> {
    let m = q.len() - 1;
    let n = rp.len() - 1;
    if r > m.min(n) {
        return Err(Error::TransvectantIndex { r, m, n });
    }
    let out_len = m + n - 2 * r + 1;
    let zero = q[0].zero_like();
    let mut acc = vec![zero; out_len];
    let r_fact = factorial(r as i64);
    let mut dq: Vec<Vec<T>> = vec![q.to_vec()];
    let mut dr: Vec<Vec<T>> = vec![rp.to_vec()];
    for j in 1..=r {
        dq.push(poly_deriv(&dq[j - 1]));
        dr.push(poly_deriv(&dr[j - 1]));
    }
    for k in 0..=r {
        let mut c = r_fact
            * binom((m - r + k) as i64, k as i64)
            * binom((n - k) as i64, (r - k) as i64);
        if k % 2 == 1 {
            c = -c;
        }
        if c == 0 {
            continue;
        }
        let term = poly_mul(&dq[r - k], &dr[k]);
        for (t, slot) in acc.iter_mut().enumerate() {
            *slot = slot.plus(&term[t].scale(c, 1));
        }
    }
    Ok(acc)
}

/// The 26 basis covariants, named per their degree letter and the weight of
/// the highest-weight vector (half the formal order in z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::upper_case_acronyms)]
pub enum CovName {
    A3,
    B4,
    B2,
    B0,
    C6,
    C4,
    C3,
    C1,
    D5,
    D3,
    D2,
    D0,
    E4,
    E2,
    E1,
    F3a,
    F0,
    F3b,
    G2,
    G1,
    H1,
    I2,
    J1,
    J0,
    L1,
    O0,
}

impl CovName {
    pub const ALL: [CovName; 26] = [
        CovName::A3,
        CovName::B4,
        CovName::B2,
        CovName::B0,
        CovName::C6,
        CovName::C4,
        CovName::C3,
        CovName::C1,
        CovName::D5,
        CovName::D3,
        CovName::D2,
        CovName::D0,
        CovName::E4,
        CovName::E2,
        CovName::E1,
        CovName::F3a,
        CovName::F0,
        CovName::F3b,
        CovName::G2,
        CovName::G1,
        CovName::H1,
        CovName::I2,
        CovName::J1,
        CovName::J0,
        CovName::L1,
        CovName::O0,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&n| n == self).unwrap()
    }

    pub fn label(self) -> &'static str {
        match self {
            CovName::A3 => "A3",
            CovName::B4 => "B4",
            CovName::B2 => "B2",
            CovName::B0 => "B0",
            CovName::C6 => "C6",
            CovName::C4 => "C4",
            CovName::C3 => "C3",
            CovName::C1 => "C1",
            CovName::D5 => "D5",
            CovName::D3 => "D3",
            CovName::D2 => "D2",
            CovName::D0 => "D0",
            CovName::E4 => "E4",
            CovName::E2 => "E2",
            CovName::E1 => "E1",
            CovName::F3a => "F3_1",
            CovName::F0 => "F0",
            CovName::F3b => "F3_2",
            CovName::G2 => "G2",
            CovName::G1 => "G1",
            CovName::H1 => "H1",
            CovName::I2 => "I2",
            CovName::J1 => "J1",
            CovName::J0 => "J0",
            CovName::L1 => "L1",
            CovName::O0 => "O0",
        }
    }

    pub fn from_label(s: &str) -> Option<CovName> {
        CovName::ALL.iter().copied().find(|n| n.label() == s)
    }

    /// Degree in the sextic's coefficients (the letter's alphabet position).
    pub fn degree(self) -> u32 {
        match self {
            CovName::A3 => 1,
            CovName::B4 | CovName::B2 | CovName::B0 => 2,
            CovName::C6 | CovName::C4 | CovName::C3 | CovName::C1 => 3,
            CovName::D5 | CovName::D3 | CovName::D2 | CovName::D0 => 4,
            CovName::E4 | CovName::E2 | CovName::E1 => 5,
            CovName::F3a | CovName::F0 | CovName::F3b => 6,
            CovName::G2 | CovName::G1 => 7,
            CovName::H1 => 8,
            CovName::I2 => 9,
            CovName::J1 | CovName::J0 => 10,
            CovName::L1 => 12,
            CovName::O0 => 15,
        }
    }

    /// Formal order in z: twice the highest weight in the subscript.
    pub fn order(self) -> u32 {
        match self {
            CovName::A3 => 6,
            CovName::B4 => 8,
            CovName::B2 => 4,
            CovName::B0 => 0,
            CovName::C6 => 12,
            CovName::C4 => 8,
            CovName::C3 => 6,
            CovName::C1 => 2,
            CovName::D5 => 10,
            CovName::D3 => 6,
            CovName::D2 => 4,
            CovName::D0 => 0,
            CovName::E4 => 8,
            CovName::E2 => 4,
            CovName::E1 => 2,
            CovName::F3a | CovName::F3b => 6,
            CovName::F0 => 0,
            CovName::G2 => 4,
            CovName::G1 => 2,
            CovName::H1 => 2,
            CovName::I2 => 4,
            CovName::J1 => 2,
            CovName::J0 => 0,
            CovName::L1 => 2,
            CovName::O0 => 0,
        }
    }

    /// Covariant weight m = (6d − k)/2.
    pub fn weight(self) -> u32 {
        (6 * self.degree() - self.order()) / 2
    }
}

/// The full basis evaluated at one sextic, over any coefficient ring.
#[derive(Clone, Debug)]
pub struct HilbertBasis<T> {
    entries: Vec<Vec<T>>,
}

impl<T: Ring> HilbertBasis<T> {
    /// Evaluate all 26 covariants of the form with coefficient vector `p`
    /// (length 7, z⁰ first).
    pub fn compute(p: &[T]) -> Self {
        assert_eq!(p.len(), 7);
        let tv = |a: &[T], b: &[T], r: usize| transvectant(a, b, r).expect("orders fixed");
        let a3 = p.to_vec();
        let b4 = tv(&a3, &a3, 2);
        let b2 = tv(&a3, &a3, 4);
        let b0 = tv(&a3, &a3, 6);
        let c6 = poly_scale(&tv(&a3, &b4, 1), 1, 2);
        let c4 = poly_scale(&tv(&a3, &b2, 1), 1, 2);
        let c3 = poly_add(
            &poly_scale(&tv(&a3, &b2, 2), 1, 6),
            &poly_scale(&poly_mul(&a3, &b0), 5, 1),
        );
        let c1 = poly_scale(&tv(&a3, &b2, 4), 1, 6);
        let d5 = poly_scale(&tv(&a3, &c3, 1), 2, 3);
        let d3 = tv(&a3, &c1, 1);
        let d2 = tv(&a3, &c1, 2);
        let d0 = poly_scale(&tv(&a3, &c3, 6), 1, 15);
        let e4 = tv(&a3, &d2, 1);
        let e2 = tv(&a3, &d2, 3);
        let e1 = tv(&a3, &d2, 4);
        let f3a = tv(&a3, &e1, 1);
        let f0 = tv(&c1, &c1, 2);
        let f3b = poly_add(
            &poly_scale(&f3a, -5, 2),
            &poly_scale(&tv(&a3, &e2, 2), 1, 2),
        );
        let g2 = poly_scale(&tv(&b2, &e1, 1), 1, 2);
        let g1 = tv(&c1, &d2, 2);
        let h1 = poly_scale(&tv(&a3, &g2, 4), -1, 12);
        let i2 = tv(&a3, &h1, 2);
        let j1 = tv(&a3, &i2, 4);
        let j0 = tv(&c1, &g1, 2);
        let l1 = poly_add(
            &poly_scale(&tv(&b2, &j1, 2), 1, 6),
            &poly_scale(&poly_mul(&b0, &j1), 1, 3),
        );
        let o0 = tv(&l1, &c1, 2);
        let entries = vec![
            a3, b4, b2, b0, c6, c4, c3, c1, d5, d3, d2, d0, e4, e2, e1, f3a, f0, f3b, g2, g1,
            h1, i2, j1, j0, l1, o0,
        ];
        for (name, e) in CovName::ALL.iter().zip(&entries) {
            debug_assert_eq!(e.len() as u32, name.order() + 1, "{:?}", name);
        }
        HilbertBasis { entries }
    }

    pub fn get(&self, name: CovName) -> &[T] {
        &self.entries[name.index()]
    }
}

/// A named covariant with its metadata, evaluated at one sextic.
#[derive(Clone, Debug)]
pub struct Covariant {
    pub name: CovName,
    pub degree: u32,
    pub order: u32,
    pub weight: u32,
    pub poly: Vec<Scalar>,
}

/// All 26 basis covariants of p, with metadata attached. The relation
/// 6·degree = order + 2·weight holds for every entry by construction.
pub fn hilbert_basis(p: &Sextic) -> Vec<Covariant> {
    let basis = HilbertBasis::compute(p.coeffs());
    CovName::ALL
        .iter()
        .map(|&name| Covariant {
            name,
            degree: name.degree(),
            order: name.order(),
            weight: name.weight(),
            poly: basis.get(name).to_vec(),
        })
        .collect()
}

/// Magnitude bounds for the 26 covariants of a sextic whose Y-tuple has
/// max-norm `y_norm`: the basis evaluated over [`Mag`] with the worst-case
/// coefficient magnitudes |cₘ| = √C(6,m)·y_norm.
pub fn magnitude_basis(y_norm: f64) -> HilbertBasis<Mag> {
    let p: Vec<Mag> = (0..7)
        .map(|m| Mag((binom(6, m) as f64).sqrt() * y_norm))
        .collect();
    HilbertBasis::compute(&p)
}

/// Magnitude bounds evaluated at the actual coefficient magnitudes of one
/// sextic: the total term magnitude flowing through the same expression
/// tree.
pub fn magnitude_basis_for(p: &Sextic) -> HilbertBasis<Mag> {
    let mags: Vec<Mag> = p.coeffs().iter().map(|c| Mag(c.abs().to_f64())).collect();
    HilbertBasis::compute(&mags)
}

/// First-order sensitivity bounds: the basis over [`Jet<Mag>`] with values
/// at the actual coefficient magnitudes and a uniform unit-relative
/// perturbation √C(6,m)·y_norm in the derivative slot. The derivative
/// component of a generator bounds |∇g|·‖Y‖ — the change of g under a
/// full-size relative perturbation of the input — and is the tolerance
/// scale for vanishing verdicts: |g| ≤ tol_rel · scale means the point is
/// within relative distance tol_rel of the generator's zero set, to first
/// order. The scale is ∝ ‖Y‖^degree under rescaling.
pub fn sensitivity_basis_for(p: &Sextic, y_norm: f64) -> HilbertBasis<Jet<Mag>> {
    let jets: Vec<Jet<Mag>> = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, c)| {
            Jet::new(
                Mag(c.abs().to_f64()),
                Mag((binom(6, m as i64) as f64).sqrt() * y_norm),
            )
        })
        .collect();
    HilbertBasis::compute(&jets)
}

/// Covariance residual for one basis element: the max-coefficient difference
/// between Δ^m times the Möbius-transformed covariant and the covariant of
/// the transformed sextic, relative to the larger of the two sides.
pub fn covariance_check(p: &Sextic, m: &MobiusMap, name: CovName, ctx: &Ctx) -> Scalar {
    let basis = HilbertBasis::compute(p.coeffs());
    let q = basis.get(name);
    let det_pow = m.det().pow_i64(name.weight() as i64);
    let lhs: Vec<Scalar> = apply_form(q, m).iter().map(|c| c * &det_pow).collect();
    let transformed = mobius_apply(p, m);
    let basis_t = HilbertBasis::compute(transformed.coeffs());
    let rhs: Vec<Scalar> = basis_t.get(name).to_vec();
    let mut scale = Scalar::max_abs(&lhs);
    let rhs_scale = Scalar::max_abs(&rhs);
    if rhs_scale > scale {
        scale = rhs_scale;
    }
    let mut worst = Float::new(ctx.prec.bits());
    for (a, b) in lhs.iter().zip(&rhs) {
        let d = (a - b).abs();
        if d > worst {
            worst = d;
        }
    }
    if scale.is_zero() {
        return ctx.zero();
    }
    let rel = worst / scale;
    Scalar::from_complex(rug::Complex::with_val(ctx.prec.bits(), (rel, 0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::TestRng;

    fn ctx() -> Ctx {
        Ctx::default()
    }

    fn sc(c: &Ctx, coeffs: &[(usize, f64, f64)]) -> Sextic {
        let mut s = Sextic::zero(c);
        let mut v: Vec<Scalar> = s.coeffs().to_vec();
        for &(k, re, im) in coeffs {
            v[k] = c.from_f64(re, im);
        }
        s = Sextic::new(v);
        s
    }

    #[test]
    fn transvectant_r0_is_product() {
        let c = ctx();
        let mut rng = TestRng::new(3);
        let q: Vec<Scalar> = (0..5).map(|_| rng.scalar(&c)).collect();
        let r: Vec<Scalar> = (0..4).map(|_| rng.scalar(&c)).collect();
        let t = transvectant(&q, &r, 0).unwrap();
        let prod = poly_mul(&q, &r);
        for (a, b) in t.iter().zip(&prod) {
            assert!((a - b).abs() < 1e-55);
        }
    }

    #[test]
    fn transvectant_z6_z6_2_vanishes() {
        let c = ctx();
        let p = sc(&c, &[(6, 1.0, 0.0)]);
        let t = transvectant(p.coeffs(), p.coeffs(), 2).unwrap();
        for coeff in &t {
            assert!(coeff.abs() < 1e-55);
        }
    }

    #[test]
    fn transvectant_z6_plus_1_order_6() {
        let c = ctx();
        let p = sc(&c, &[(0, 1.0, 0.0), (6, 1.0, 0.0)]);
        let t = transvectant(p.coeffs(), p.coeffs(), 6).unwrap();
        assert_eq!(t.len(), 1);
        assert!((&t[0] - &c.int(1_036_800)).abs() < 1e-45);
    }

    #[test]
    fn transvectant_index_out_of_range() {
        let c = ctx();
        let q: Vec<Scalar> = vec![c.one(), c.one(), c.one()];
        assert!(matches!(
            transvectant(&q, &q, 3),
            Err(Error::TransvectantIndex { r: 3, m: 2, n: 2 })
        ));
    }

    #[test]
    fn transvectant_antisymmetry() {
        let c = ctx();
        let mut rng = TestRng::new(11);
        for r in 0..=4usize {
            let q: Vec<Scalar> = (0..7).map(|_| rng.scalar(&c)).collect();
            let s: Vec<Scalar> = (0..5).map(|_| rng.scalar(&c)).collect();
            let a = transvectant(&q, &s, r).unwrap();
            let b = transvectant(&s, &q, r).unwrap();
            let sign = if r % 2 == 0 { 1 } else { -1 };
            for (x, y) in a.iter().zip(&b) {
                let diff = (x - &y.scale_ratio(sign, 1)).abs();
                assert!(diff < 1e-45, "antisymmetry residual {diff} at r={r}");
            }
        }
    }

    #[test]
    fn transvectant_bilinearity() {
        let c = ctx();
        let mut rng = TestRng::new(21);
        let q1: Vec<Scalar> = (0..7).map(|_| rng.scalar(&c)).collect();
        let q2: Vec<Scalar> = (0..7).map(|_| rng.scalar(&c)).collect();
        let s: Vec<Scalar> = (0..7).map(|_| rng.scalar(&c)).collect();
        let alpha = rng.scalar(&c);
        let combo: Vec<Scalar> = q1
            .iter()
            .zip(&q2)
            .map(|(a, b)| a + &(&alpha * b))
            .collect();
        let lhs = transvectant(&combo, &s, 3).unwrap();
        let t1 = transvectant(&q1, &s, 3).unwrap();
        let t2 = transvectant(&q2, &s, 3).unwrap();
        for ((l, a), b) in lhs.iter().zip(&t1).zip(&t2) {
            let rhs = a + &(&alpha * b);
            assert!((l - &rhs).abs() < 1e-40);
        }
    }

    #[test]
    fn degree_order_weight_relation_all_entries() {
        for name in CovName::ALL {
            assert_eq!(
                6 * name.degree(),
                name.order() + 2 * name.weight(),
                "{name:?}"
            );
        }
        assert_eq!(CovName::A3.weight(), 0);
        assert_eq!(CovName::B4.weight(), 2);
        assert_eq!(CovName::O0.degree(), 15);
        assert_eq!(CovName::O0.weight(), 45);
    }

    #[test]
    fn basis_of_i_z6_leaves_only_a3() {
        let c = ctx();
        let p = sc(&c, &[(6, 0.0, 1.0)]);
        let basis = hilbert_basis(&p);
        for cov in &basis {
            let norm = Scalar::max_abs(&cov.poly);
            if cov.name == CovName::A3 {
                assert!((&cov.poly[6] - &c.i()).abs() < 1e-60);
            } else {
                assert!(norm < 1e-40, "{:?} should vanish on iz⁶", cov.name);
            }
        }
    }

    #[test]
    fn basis_of_zero_polynomial_vanishes() {
        let c = ctx();
        let basis = hilbert_basis(&Sextic::zero(&c));
        for cov in &basis {
            assert!(Scalar::max_abs(&cov.poly).is_zero());
        }
    }

    #[test]
    fn hessian_top_coefficient_matches_y_expansion() {
        // p with Y₊₃ = Y₊₁ = 1: c₄ = √15, c₆ = 1; B₄'s z⁸ coefficient is 120√15.
        let c = ctx();
        let mut v: Vec<Scalar> = (0..7).map(|_| c.zero()).collect();
        v[4] = c.sqrt_int(15);
        v[6] = c.one();
        let p = Sextic::new(v);
        let basis = HilbertBasis::compute(p.coeffs());
        let b4 = basis.get(CovName::B4);
        let expect = c.sqrt_int(15).scale_ratio(120, 1);
        assert!((&b4[8] - &expect).abs() < 1e-45);
    }

    #[test]
    fn covariance_identity_map_is_exact() {
        let c = ctx();
        let mut rng = TestRng::new(17);
        let p = rng.sextic(&c);
        let m = MobiusMap::identity(&c);
        for name in [CovName::A3, CovName::C3, CovName::J0] {
            let r = covariance_check(&p, &m, name, &c);
            assert!(r.is_zero() || r.abs() < 1e-60);
        }
    }

    #[test]
    fn covariance_a3_and_b4_random_maps() {
        let c = ctx();
        let mut rng = TestRng::new(23);
        for _ in 0..5 {
            let p = rng.sextic(&c);
            let m = rng.mobius(&c);
            let ra = covariance_check(&p, &m, CovName::A3, &c);
            assert!(ra.abs() < 1e-40, "A3 residual {}", ra.abs());
            let rb = covariance_check(&p, &m, CovName::B4, &c);
            assert!(rb.abs() < 1e-40, "B4 residual {}", rb.abs());
        }
    }

    #[test]
    fn covariance_full_basis_spot_check() {
        let c = ctx();
        let mut rng = TestRng::new(29);
        let p = rng.sextic(&c);
        let m = rng.mobius(&c);
        for name in CovName::ALL {
            let r = covariance_check(&p, &m, name, &c);
            assert!(r.abs() < 1e-30, "{name:?} residual {}", r.abs());
        }
    }

    #[test]
    fn magnitude_basis_scales_by_degree() {
        let b1 = magnitude_basis(1.0);
        let b2 = magnitude_basis(2.0);
        for name in CovName::ALL {
            let m1 = b1.get(name).iter().map(|m| m.0).fold(0.0, f64::max);
            let m2 = b2.get(name).iter().map(|m| m.0).fold(0.0, f64::max);
            let expect = m1 * 2f64.powi(name.degree() as i32);
            assert!(
                (m2 - expect).abs() <= 1e-9 * expect.abs(),
                "{name:?}: {m2} vs {expect}"
            );
        }
    }
}
