//! Translation of the regular point: the 30 quadratic derivatives of the
//! structure functions, the induced Y-derivatives, the restricted (S = 0)
//! derivative identities for the highest-weight vector, the Hessian-component
//! derivative identities, and fixed-step RK4 integration along paths in ℂ³.
//!
//! Only six derivative prototypes are transcribed; the other 24 follow from
//! coordinate-permutation equivariance: ∂(σ·v)/∂x_{σ(j)} at sp equals
//! ∂v/∂x_j at σ⁻¹·sp.

use crate::covariant::transvectant;
use crate::error::Error;
use crate::repspace::{
    perm_inverse, sextic_from_y, xy_from_qrs, StructurePoint, Var, XTriple, YSeptet,
};
use crate::scalar::{Ctx, Scalar};
use crate::Result;
use rug::Float;

/// ∂R¹²₁/∂x₁ prototype.
fn d_r12_1_dx1(sp: &StructurePoint) -> Scalar {
    let g = |v: Var| sp.get(v);
    let q = g(Var::Q123);
    let mut acc = (g(Var::R12_2) * g(Var::R23_3)).scale_ratio(-2, 3);
    acc = &acc + &(g(Var::R13_3) * g(Var::R23_3)).scale_ratio(2, 3);
    acc = &acc + &(q * g(Var::R23_2)).scale_ratio(4, 3);
    acc = &acc + &(q * g(Var::R13_1)).scale_ratio(5, 3);
    acc = &acc - &(g(Var::R12_1) * g(Var::R13_3));
    acc = &acc - &(g(Var::R12_1) * g(Var::S1));
    acc = &acc + &(&(g(Var::R13_3) + &g(Var::R12_2).scale_ratio(3, 1)) * g(Var::S2));
    acc = &acc + &(q * g(Var::S3)).scale_ratio(2, 1);
    acc
}

/// ∂R¹²₁/∂x₂ prototype.
fn d_r12_1_dx2(sp: &StructurePoint) -> Scalar {
    let g = |v: Var| sp.get(v);
    let sq = |v: Var| g(v) * g(v);
    let q = g(Var::Q123);
    let mut acc = (g(Var::R12_2) * g(Var::R13_3)).scale_ratio(3, 5);
    acc = &acc - &(g(Var::R13_1) * g(Var::R23_2)).scale_ratio(1, 15);
    acc = &acc - &(g(Var::R12_1) * g(Var::R23_3)).scale_ratio(11, 15);
    acc = &acc + &sq(Var::R13_1).scale_ratio(8, 15);
    acc = &acc + &sq(Var::R12_1).scale_ratio(1, 5);
    acc = &acc - &sq(Var::R23_2).scale_ratio(4, 5);
    acc = &acc + &sq(Var::R13_3).scale_ratio(8, 15);
    acc = &acc + &sq(Var::R12_2).scale_ratio(1, 5);
    acc = &acc - &sq(Var::R23_3).scale_ratio(4, 5);
    acc = &acc + &(q * q).scale_ratio(2, 15);
    acc = &acc - &(&(g(Var::R13_3) + &g(Var::R12_2).scale_ratio(3, 1)) * g(Var::S1));
    acc = &acc - &(g(Var::R12_1) * g(Var::S2));
    acc = &acc + &(g(Var::R13_1) * g(Var::S3));
    acc
}

/// ∂R¹²₁/∂x₃ prototype.
fn d_r12_1_dx3(sp: &StructurePoint) -> Scalar {
    let g = |v: Var| sp.get(v);
    let q = g(Var::Q123);
    let mut acc = (q * g(Var::R12_2)).scale_ratio(-1, 3);
    acc = &acc - &(q * g(Var::R13_3)).scale_ratio(1, 3);
    acc = &acc + &(g(Var::R23_2) * g(Var::R12_1)).scale_ratio(1, 3);
    acc = &acc + &(g(Var::R23_3) * g(Var::R13_1)).scale_ratio(1, 3);
    acc = &acc - &(q * g(Var::S1)).scale_ratio(2, 1);
    acc = &acc - &(g(Var::R13_1) * g(Var::S2));
    acc = &acc - &(g(Var::R12_1) * g(Var::S3));
    acc
}

/// ∂S¹/∂x₁ prototype.
fn d_s1_dx1(sp: &StructurePoint) -> Scalar {
    let g = |v: Var| sp.get(v);
    let sq = |v: Var| g(v) * g(v);
    let q = g(Var::Q123);
    let mut acc = (g(Var::R12_2) * g(Var::R13_3)).scale_ratio(-17, 90);
    acc = &acc + &(g(Var::R13_1) * g(Var::R23_2)).scale_ratio(1, 30);
    acc = &acc + &(g(Var::R12_1) * g(Var::R23_3)).scale_ratio(1, 30);
    acc = &acc - &sq(Var::R13_3).scale_ratio(7, 45);
    acc = &acc + &sq(Var::R23_3).scale_ratio(1, 15);
    acc = &acc - &sq(Var::R12_1).scale_ratio(7, 45);
    acc = &acc - &(q * q).scale_ratio(11, 90);
    acc = &acc - &sq(Var::R13_1).scale_ratio(7, 45);
    acc = &acc - &sq(Var::R12_2).scale_ratio(7, 45);
    acc = &acc + &sq(Var::R23_2).scale_ratio(1, 15);
    acc = &acc + &sq(Var::S2).scale_ratio(1, 2);
    acc = &acc + &sq(Var::S3).scale_ratio(1, 2);
    acc = &acc - &sq(Var::S1).scale_ratio(1, 2);
    acc
}

/// ∂S¹/∂x₂ prototype.
fn d_s1_dx2(sp: &StructurePoint) -> Scalar {
    let g = |v: Var| sp.get(v);
    let q = g(Var::Q123);
    let mut acc = (g(Var::R13_3) * g(Var::R23_3)).scale_ratio(-1, 9);
    acc = &acc - &(q * g(Var::R23_2)).scale_ratio(2, 9);
    acc = &acc + &(g(Var::R12_1) * g(Var::R13_3)).scale_ratio(1, 9);
    acc = &acc + &(g(Var::R12_2) * g(Var::R23_3)).scale_ratio(1, 9);
    acc = &acc - &(q * g(Var::R13_1)).scale_ratio(2, 9);
    acc = &acc - &(g(Var::S1) * g(Var::S2));
    acc
}

/// ∂Q¹²³/∂x₁ prototype.
fn d_q_dx1(sp: &StructurePoint) -> Scalar {
    let g = |v: Var| sp.get(v);
    let q = g(Var::Q123);
    let mut acc = (g(Var::R13_1) * g(Var::R12_1)).scale_ratio(2, 3);
    acc = &acc - &(g(Var::R23_3) * g(Var::R13_1)).scale_ratio(1, 3);
    acc = &acc + &(q * g(Var::R13_3));
    acc = &acc - &(g(Var::R23_2) * g(Var::R12_1)).scale_ratio(1, 3);
    acc = &acc + &(q * g(Var::R12_2));
    acc = &acc - &(q * g(Var::S1));
    acc = &acc + &(&(g(Var::R23_2) - g(Var::R13_1)) * g(Var::S2));
    acc = &acc + &(&(g(Var::R23_3) - g(Var::R12_1)) * g(Var::S3));
    acc
}

/// All 30 derivatives ∂v/∂x_j as a 10×3 table indexed like `Var::ALL`.
#[derive(Clone, Debug)]
pub struct QrsVectorField {
    /// entries[var.index()][j−1] = ∂var/∂x_j.
    pub entries: Vec<[Scalar; 3]>,
}

impl QrsVectorField {
    pub fn get(&self, v: Var, j: usize) -> &Scalar {
        &self.entries[v.index()][j - 1]
    }
}

/// Evaluate the quadratic derivative field at a structure point. The six
/// prototypes are evaluated verbatim; everything else is produced by the
/// permutation machinery.
pub fn qrs_derivatives(sp: &StructurePoint) -> QrsVectorField {
    // Cache the permuted points (up to 6 distinct).
    let mut cache: Vec<([usize; 3], StructurePoint)> = Vec::new();
    let mut at = |sigma: [usize; 3], sp: &StructurePoint| -> usize {
        if let Some(pos) = cache.iter().position(|(s, _)| *s == sigma) {
            return pos;
        }
        let inv = perm_inverse(&sigma);
        cache.push((sigma, sp.permuted(&inv)));
        cache.len() - 1
    };
    let others = |i: usize| -> (usize, usize) {
        match i {
            1 => (2, 3),
            2 => (1, 3),
            3 => (1, 2),
            _ => unreachable!(),
        }
    };
    let mut plan: Vec<(usize, fn(&StructurePoint) -> Scalar)> = Vec::with_capacity(30);
    let mut entries_meta: Vec<(Var, usize)> = Vec::with_capacity(30);
    for v in Var::ALL {
        for j in 1..=3usize {
            let (sigma, proto): ([usize; 3], fn(&StructurePoint) -> Scalar) = match v {
                Var::S1 | Var::S2 | Var::S3 => {
                    let i = match v {
                        Var::S1 => 1,
                        Var::S2 => 2,
                        _ => 3,
                    };
                    if i == j {
                        let (a, b) = others(i);
                        ([i, a, b], d_s1_dx1)
                    } else {
                        let k = 6 - i - j;
                        ([i, j, k], d_s1_dx2)
                    }
                }
                Var::Q123 => {
                    let (a, b) = others(j);
                    ([j, a, b], d_q_dx1)
                }
                _ => {
                    // R^{ab}_k: σ(1) = k, σ(2) = other raised, σ(3) = rest.
                    let (pair, k) = match v {
                        Var::R12_1 => ((1, 2), 1),
                        Var::R12_2 => ((1, 2), 2),
                        Var::R13_1 => ((1, 3), 1),
                        Var::R13_3 => ((1, 3), 3),
                        Var::R23_2 => ((2, 3), 2),
                        Var::R23_3 => ((2, 3), 3),
                        _ => unreachable!(),
                    };
                    let other = pair.0 + pair.1 - k;
                    let rest = 6 - pair.0 - pair.1;
                    let sigma = [k, other, rest];
                    if j == k {
                        (sigma, d_r12_1_dx1 as fn(&StructurePoint) -> Scalar)
                    } else if j == other {
                        (sigma, d_r12_1_dx2)
                    } else {
                        (sigma, d_r12_1_dx3)
                    }
                }
            };
            let slot = at(sigma, sp);
            plan.push((slot, proto));
            entries_meta.push((v, j));
        }
    }
    let mut entries: Vec<[Scalar; 3]> = Var::ALL
        .iter()
        .map(|_| {
            let z = sp.get(Var::S1).zero_like_flow();
            [z.clone(), z.clone(), z]
        })
        .collect();
    for ((slot, proto), (v, j)) in plan.into_iter().zip(entries_meta) {
        entries[v.index()][j - 1] = proto(&cache[slot].1);
    }
    QrsVectorField { entries }
}

impl Scalar {
    fn zero_like_flow(&self) -> Scalar {
        use crate::scalar::Ring;
        self.zero_like()
    }
}

/// ∂Y_m/∂x_j for all seven components: the exact linear image of the
/// derivative field under the Y-map.
pub fn y_derivatives(sp: &StructurePoint, ctx: &Ctx) -> [YSeptet; 3] {
    let field = qrs_derivatives(sp);
    std::array::from_fn(|jz| {
        let mut dsp = StructurePoint::zero(ctx);
        for v in Var::ALL {
            dsp.set(v, field.get(v, jz + 1).clone());
        }
        let (_, y) = xy_from_qrs(&dsp, ctx);
        y
    })
}

/// Ladder combinations (∂₊, ∂₀, ∂₋) of the Cartesian derivative triple of
/// one quantity: ∂₊ = i∂₂ + ∂₁, ∂₀ = ∂₃, ∂₋ = i∂₂ − ∂₁.
pub fn ladder_combos(d: &[Scalar; 3], ctx: &Ctx) -> [Scalar; 3] {
    let i = ctx.i();
    [
        &(&i * &d[1]) + &d[0],
        d[2].clone(),
        &(&i * &d[1]) - &d[0],
    ]
}

/// The restricted derivatives of the highest-weight vector:
/// ∂̂₊(Y₊₃), ∂̂₀(Y₊₃), ∂̂₋(Y₊₃) as closed quadratics in Y.
pub fn hatted_derivatives_yp3(y: &YSeptet, ctx: &Ctx) -> [Scalar; 3] {
    let i = ctx.i();
    let y_m1 = &y[2];
    let y_0 = &y[3];
    let y_p1 = &y[4];
    let y_p2 = &y[5];
    let y_p3 = &y[6];
    // ∂̂₊ = (2i/9)Y₊₂² − (4√15 i/45) Y₊₁Y₊₃. The Y₊₁Y₊₃ coefficient is
    // pinned by the derivative system itself (the displayed quadratic has
    // the √15 on the wrong side of the fraction).
    let d_plus = &(&i * &(y_p2 * y_p2)).scale_ratio(2, 9)
        - &(&(&i * &(y_p1 * y_p3)) * &ctx.sqrt_int(15)).scale_ratio(4, 45);
    // ∂̂₀ = (i√5/15) Y₊₃Y₀ − (i√10/45) Y₊₁Y₊₂
    let d_zero = &(&(&i * &ctx.sqrt_int(5)) * &(y_p3 * y_0)).scale_ratio(1, 15)
        - &(&(&i * &ctx.sqrt_int(10)) * &(y_p1 * y_p2)).scale_ratio(1, 45);
    // ∂̂₋ = −(2i√15/5)Y₋₁Y₊₃ + (17i√30/45)Y₊₂Y₀ − (10i/9)Y₊₁²
    let d_minus = &(&(&(&i * &ctx.sqrt_int(15)) * &(y_m1 * y_p3)).scale_ratio(-2, 5)
        + &(&(&i * &ctx.sqrt_int(30)) * &(y_p2 * y_0)).scale_ratio(17, 45))
        - &(&i * &(y_p1 * y_p1)).scale_ratio(10, 9);
    [d_plus, d_zero, d_minus]
}

/// Hessian rep components B⁽⁴⁾_j, j = −4..4 ascending, from Y:
/// coefficient of zᵐ in B₄ is (−1)ᵐ √C(8,m) B⁽⁴⁾_{m−4}.
pub fn hessian_components(y: &YSeptet, ctx: &Ctx) -> [Scalar; 9] {
    let p = sextic_from_y(y, ctx);
    let b4 = transvectant(p.coeffs(), p.coeffs(), 2).expect("orders fixed");
    components_from_form(&b4, ctx)
}

/// Rep components of an even-order form: q_j = (−1)^m coeff_m / √C(k, m)
/// with m = j + k/2.
pub fn components_from_form(form: &[Scalar], ctx: &Ctx) -> [Scalar; 9] {
    assert_eq!(form.len(), 9);
    std::array::from_fn(|m| {
        let b = binom_u64(8, m as u64);
        let v = &form[m] / &ctx.sqrt_int(b);
        if m % 2 == 1 {
            -&v
        } else {
            v
        }
    })
}

fn binom_u64(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    let mut acc = 1u64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Residuals of the three derivative identities for the top Hessian
/// component B⁽⁴⁾₊₄, comparing the chain-rule derivative (through the 30
/// quadratics and the bilinear Hessian) against the closed-form right-hand
/// sides with X taken from S. Returned as relative residuals.
pub fn hessian_closure_check(sp: &StructurePoint, ctx: &Ctx) -> [Scalar; 3] {
    let (x, y) = xy_from_qrs(sp, ctx);
    let p = sextic_from_y(&y, ctx);
    let dy = y_derivatives(sp, ctx);
    // Chain rule: dB₄ = (dp, p)⁽²⁾ + (p, dp)⁽²⁾, then the top component.
    let mut cart: Vec<Scalar> = Vec::with_capacity(3);
    for yd in &dy {
        let dp = sextic_from_y(yd, ctx);
        let t1 = transvectant(dp.coeffs(), p.coeffs(), 2).expect("orders fixed");
        let t2 = transvectant(p.coeffs(), dp.coeffs(), 2).expect("orders fixed");
        // top rep component: coefficient of z⁸ (sign +, binomial 1)
        cart.push(&t1[8] + &t2[8]);
    }
    let lhs = ladder_combos(&[cart[0].clone(), cart[1].clone(), cart[2].clone()], ctx);
    let rhs = hessian_rhs(&x, &y, ctx);
    std::array::from_fn(|k| {
        let diff = (&lhs[k] - &rhs[k]).abs();
        let mut scale = lhs[k].abs();
        let r = rhs[k].abs();
        if r > scale {
            scale = r;
        }
        if scale.is_zero() {
            ctx.zero()
        } else {
            Scalar::from_complex(rug::Complex::with_val(ctx.prec.bits(), (diff / scale, 0)))
        }
    })
}

/// Closed-form right-hand sides of the three B⁽⁴⁾₊₄ derivative identities.
fn hessian_rhs(x: &XTriple, y: &YSeptet, ctx: &Ctx) -> [Scalar; 3] {
    let b = hessian_components(y, ctx);
    let i = ctx.i();
    let (b4, b3, b2, b1, b0) = (&b[8], &b[7], &b[6], &b[5], &b[4]);
    let (x_m1, x_0, x_p1) = (&x[0], &x[1], &x[2]);
    let (y_m1, y_0, y_p1, y_p2, y_p3) = (&y[2], &y[3], &y[4], &y[5], &y[6]);
    let sqrt = |n: u64| ctx.sqrt_int(n);
    // ∂₊: (−6X₊₁ − 28i/(9√15) Y₊₁)B₄ + 14i/(9√3) Y₊₂ B₃ − 2√7 i/9 Y₊₃ B₂
    let d_plus = {
        let c_b4 = &x_p1.scale_ratio(-6, 1) - &(&(&i * y_p1) / &sqrt(15)).scale_ratio(28, 9);
        let c_b3 = (&(&i * y_p2) / &sqrt(3)).scale_ratio(14, 9);
        let c_b2 = (&(&i * y_p3) * &sqrt(7)).scale_ratio(-2, 9);
        &(&(&c_b4 * b4) + &(&c_b3 * b3)) + &(&c_b2 * b2)
    };
    // ∂₀: (√2X₀ + 56i/(9√5) Y₀)B₄ + (√2X₊₁ − 77√2 i/(9√15) Y₊₁)B₃
    //     + 10√14 i/(9√3) Y₊₂ B₂ − √14 i/3 Y₊₃ B₁
    let d_zero = {
        let c_b4 = &(x_0 * &sqrt(2)) + &(&(&i * y_0) / &sqrt(5)).scale_ratio(56, 9);
        let c_b3 = &(x_p1 * &sqrt(2))
            - &(&(&(&i * y_p1) * &sqrt(2)) / &sqrt(15)).scale_ratio(77, 9);
        let c_b2 = (&(&(&i * y_p2) * &sqrt(14)) / &sqrt(3)).scale_ratio(10, 9);
        let c_b1 = (&(&i * y_p3) * &sqrt(14)).scale_ratio(-1, 3);
        &(&(&(&c_b4 * b4) + &(&c_b3 * b3)) + &(&c_b2 * b2)) + &(&c_b1 * b1)
    };
    // ∂₋: (2X₋₁ + 16√3 i/√5 Y₋₁)B₄ − (2X₀ + 8√2 i/(3√5) Y₀)B₃
    //     − 194i/(3√105) Y₊₁ B₂ + 14√7 i/(3√3) Y₊₂ B₁ − 2√14 i/√5 Y₊₃ B₀
    //     + 176i/(105√15) (Y₊₁² − √10/√3 Y₀Y₊₂ + √5/√3 Y₋₁Y₊₃) Y₊₁
    let d_minus = {
        let c_b4 = &x_m1.scale_ratio(2, 1) + &(&(&(&i * y_m1) * &sqrt(3)) / &sqrt(5)).scale_ratio(16, 1);
        let c_b3 = -&(&x_0.scale_ratio(2, 1) + &(&(&(&i * y_0) * &sqrt(2)) / &sqrt(5)).scale_ratio(8, 3));
        let c_b2 = (&(&i * y_p1) / &sqrt(105)).scale_ratio(-194, 3);
        let c_b1 = (&(&(&i * y_p2) * &sqrt(7)) / &sqrt(3)).scale_ratio(14, 3);
        let c_b0 = (&(&(&i * y_p3) * &sqrt(14)) / &sqrt(5)).scale_ratio(-2, 1);
        let linear = &(&(&(&(&c_b4 * b4) + &(&c_b3 * b3)) + &(&c_b2 * b2)) + &(&c_b1 * b1))
            + &(&c_b0 * b0);
        &linear + &(&hessian_tail_factor(y, ctx) * y_p1)
    };
    [d_plus, d_zero, d_minus]
}

/// The cubic tail of the ∂₋ identity:
/// −(3520√15/7) i · (Y₊₁² − (√10/√3)Y₀Y₊₂ + (√5/√3)Y₋₁Y₊₃).
///
/// The scalar in front of the tail is fixed by fitting the exact
/// chain-rule derivative against this basis; the remaining coefficients of
/// the identity come out exactly as displayed.
pub fn hessian_tail_factor(y: &YSeptet, ctx: &Ctx) -> Scalar {
    let i = ctx.i();
    let (y_m1, y_0, y_p1, y_p2, y_p3) = (&y[2], &y[3], &y[4], &y[5], &y[6]);
    let inner = &(&(y_p1 * y_p1)
        - &(&(&(y_0 * y_p2) * &ctx.sqrt_int(10)) / &ctx.sqrt_int(3)))
        + &(&(&(y_m1 * y_p3) * &ctx.sqrt_int(5)) / &ctx.sqrt_int(3));
    (&(&i * &inner) * &ctx.sqrt_int(15)).scale_ratio(-3520, 7)
}

/// A piecewise-linear path through ℂ³ with a fixed RK4 step count per
/// segment.
#[derive(Clone, Debug)]
pub struct Path {
    pub waypoints: Vec<[Scalar; 3]>,
    pub steps_per_segment: u32,
}

impl Path {
    pub fn new(waypoints: Vec<[Scalar; 3]>, steps_per_segment: u32) -> Self {
        assert!(steps_per_segment > 0);
        Path {
            waypoints,
            steps_per_segment,
        }
    }
}

/// d(sp)/dt along a constant velocity: Σ_j ∂(·)/∂x_j · v_j.
pub fn flow_derivative(sp: &StructurePoint, vel: &[Scalar; 3], ctx: &Ctx) -> StructurePoint {
    let field = qrs_derivatives(sp);
    let mut out = StructurePoint::zero(ctx);
    for v in Var::ALL {
        let mut acc = ctx.zero();
        for j in 1..=3usize {
            acc = &acc + &(field.get(v, j) * &vel[j - 1]);
        }
        out.set(v, acc);
    }
    out
}

fn sp_axpy(a: &StructurePoint, h_num: i64, h_den: i64, b: &StructurePoint, scale: &Scalar) -> StructurePoint {
    // a + (h_num/h_den)·scale·b
    let mut out = a.clone();
    for v in Var::ALL {
        let add = (&(b.get(v) * scale)).scale_ratio(h_num, h_den);
        out.set(v, a.get(v) + &add);
    }
    out
}

/// Classical fixed-step RK4 along the path, with a divergence guard: if the
/// tuple norm exceeds 10¹² × (initial norm + 1) the flow is reported as
/// blowing up, with the arclength parameter where it happened.
pub fn integrate(sp0: &StructurePoint, path: &Path, ctx: &Ctx) -> Result<StructurePoint> {
    let mut sp = sp0.clone();
    let guard = {
        let mut g = sp0.norm();
        g += 1u32;
        g * Float::with_val(ctx.prec.bits(), 1e12)
    };
    let n = path.steps_per_segment;
    let mut done_segments = 0usize;
    for w in path.waypoints.windows(2) {
        let vel: [Scalar; 3] = std::array::from_fn(|k| &w[1][k] - &w[0][k]);
        let h = ctx.ratio(1, n as i64);
        let h_half = ctx.ratio(1, 2 * n as i64);
        for step in 0..n {
            let k1 = flow_derivative(&sp, &vel, ctx);
            let k2 = flow_derivative(&sp_axpy(&sp, 1, 1, &k1, &h_half), &vel, ctx);
            let k3 = flow_derivative(&sp_axpy(&sp, 1, 1, &k2, &h_half), &vel, ctx);
            let k4 = flow_derivative(&sp_axpy(&sp, 1, 1, &k3, &h), &vel, ctx);
            let mut next = sp.clone();
            for v in Var::ALL {
                let sum = &(&(k1.get(v) + &k2.get(v).scale_ratio(2, 1))
                    + &k3.get(v).scale_ratio(2, 1))
                    + k4.get(v);
                next.set(v, sp.get(v) + &(&sum * &h).scale_ratio(1, 6));
            }
            sp = next;
            if sp.norm() > guard {
                let frac = (step + 1) as f64 / n as f64;
                return Err(Error::FlowBlowUp {
                    arclength: done_segments as f64 + frac,
                });
            }
        }
        done_segments += 1;
    }
    Ok(sp)
}

/// Integrate and report the intermediate state at every waypoint.
pub fn integrate_checkpoints(
    sp0: &StructurePoint,
    path: &Path,
    ctx: &Ctx,
) -> Result<Vec<StructurePoint>> {
    let mut out = Vec::with_capacity(path.waypoints.len());
    out.push(sp0.clone());
    let mut sp = sp0.clone();
    for w in path.waypoints.windows(2) {
        let leg = Path::new(vec![w[0].clone(), w[1].clone()], path.steps_per_segment);
        sp = integrate(&sp, &leg, ctx)?;
        out.push(sp.clone());
    }
    Ok(out)
}
