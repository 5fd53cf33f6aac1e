//! The conformal group acting on structure data: inversion in the sphere,
//! dilations, rotations, coordinate permutations, the induced 2×2 matrix
//! action on the classifying sextic, and the normalization sending S to
//! zero while fixing (Q, R).
//!
//! The inversion of the 10-tuple is given by three closed-form components
//! (S¹, R¹²₁, Q¹²³); the rest follow by index permutation, exactly as for
//! the derivative field. The same transformation, restricted to Y, is
//! encoded by a fractional-linear matrix: the matrix route reproduces the
//! direct formulas up to the overall scalar (u·u)⁸, which [`apply_move_y`]
//! divides back out.

use crate::error::Error;
use crate::repspace::{
    ladder_matrix, perm_inverse, qrs_from_xy, sextic_from_y, xy_from_qrs, y_from_sextic,
    LadderOp, StructurePoint, Var, YSeptet,
};
use crate::scalar::{Ctx, Scalar};
use crate::sextic::{mobius_apply, MobiusMap};
use crate::Result;

/// u·u = u₁² + u₂² + u₃².
pub fn dot3(u: &[Scalar; 3]) -> Scalar {
    &(&(&u[0] * &u[0]) + &(&u[1] * &u[1])) + &(&u[2] * &u[2])
}

/// The 2×2 matrix encoding inversion at u on the classifying sextic:
/// (u·u)^(2/3) · (u₃, −u₁+iu₂; −u₁−iu₂, −u₃) in (a, b; c, d) layout, acting
/// through p(z) ↦ (cz+d)⁶ p((az+b)/(cz+d)). The slot assignment of the two
/// off-diagonal entries is pinned by requiring the action to reproduce the
/// closed-form (R, Q) inversion through the Y-map (up to (u·u)⁸); both
/// assignments agree for axis-aligned centers.
pub fn inversion_matrix(u: &[Scalar; 3], ctx: &Ctx) -> Result<MobiusMap> {
    let uu = dot3(u);
    if uu.is_zero() {
        return Err(Error::NullCenter);
    }
    let kappa = uu.pow_ratio(2, 3);
    let i = ctx.i();
    let a = &kappa * &u[2];
    let b = &kappa * &(&(&i * &u[1]) - &u[0]);
    let c = &kappa * &(-&(&u[0] + &(&i * &u[1])));
    let d = -&(&kappa * &u[2]);
    MobiusMap::new(a, b, c, d)
}

/// S̃¹ under inversion at u (the closed form; other components follow by
/// permutation).
fn s1_inverted(u: &[Scalar; 3], s: &[Scalar; 3]) -> Scalar {
    let uu = dot3(u);
    let uu2 = &uu * &uu;
    let u1 = &u[0];
    let u2 = &u[1];
    let u3 = &u[2];
    let num1 = &(&(u1 * u1) - &(u2 * u2)) - &(u3 * u3);
    let mut acc = -&(&(&num1 * &s[0]) / &uu2);
    acc = &acc - &(&(&(u1 * u2).scale_ratio(2, 1) * &s[1]) / &uu2);
    acc = &acc - &(&(&(u3 * u1).scale_ratio(2, 1) * &s[2]) / &uu2);
    acc = &acc + &(&u1.scale_ratio(2, 1) / &uu);
    acc
}

/// The transformed S-vector under inversion at u, including the
/// inhomogeneous 2uᵢ/(u·u) term.
pub fn s_under_inversion(s: &[Scalar; 3], u: &[Scalar; 3], _ctx: &Ctx) -> Result<[Scalar; 3]> {
    if dot3(u).is_zero() {
        return Err(Error::NullCenter);
    }
    let out: [Scalar; 3] = std::array::from_fn(|idx| {
        // σ(1) = idx+1; prototype evaluated on permuted data.
        let i = idx + 1;
        let (a, b) = match i {
            1 => (2, 3),
            2 => (1, 3),
            _ => (1, 2),
        };
        let sigma = [i, a, b];
        let inv = perm_inverse(&sigma);
        let pu: [Scalar; 3] = std::array::from_fn(|k| u[sigma[k] - 1].clone());
        let ps: [Scalar; 3] = std::array::from_fn(|k| s[sigma[k] - 1].clone());
        let _ = inv;
        s1_inverted(&pu, &ps)
    });
    Ok(out)
}

/// R̃¹²₁ under inversion at u (closed form).
fn r12_1_inverted(u: &[Scalar; 3], sp: &StructurePoint) -> Scalar {
    let uu = dot3(u);
    let uu4 = (&uu * &uu).pow_i64(2);
    let u1 = &u[0];
    let u2 = &u[1];
    let u3 = &u[2];
    let p2 = |x: &Scalar| x * x;
    let p4 = |x: &Scalar| p2(x).pow_i64(2);
    let p6 = |x: &Scalar| p2(x).pow_i64(3);
    let (u1_2, u2_2, u3_2) = (p2(u1), p2(u2), p2(u3));
    let (u1_4, u2_4, u3_4) = (p4(u1), p4(u2), p4(u3));
    let (u1_6, u2_6, u3_6) = (p6(u1), p6(u2), p6(u3));
    let g = |v: Var| sp.get(v);

    // coefficient of R¹³₃
    let c_r13_3 = {
        let inner = &(&(&(&(&(&u3_2 * &u2_2).scale_ratio(6, 1)
            - &(&u2_2 * &u1_2).scale_ratio(2, 1))
            + &u2_4)
            + &u1_4)
            - &(&u3_2 * &u1_2).scale_ratio(10, 1))
            + &u3_4.scale_ratio(5, 1);
        (&(u2 * u1) * &inner).scale_ratio(2, 1)
    };
    // coefficient of R¹²₂
    let c_r12_2 = {
        let inner = &(&(&(&(&(&u3_2 * &u2_2).scale_ratio(2, 1) - &u3_4)
            - &(&u3_2 * &u1_2).scale_ratio(2, 1))
            - &(&u2_2 * &u1_2).scale_ratio(10, 1))
            + &u1_4.scale_ratio(3, 1))
            + &u2_4.scale_ratio(3, 1);
        (&(u2 * u1) * &inner).scale_ratio(2, 1)
    };
    // coefficient of R²³₂
    let c_r23_2 = {
        let inner = &(&u3_2.scale_ratio(2, 1) - &u2_2.scale_ratio(2, 1)) + &u1_2;
        (&(&(u3 * &u1_2) * u2) * &inner).scale_ratio(8, 1)
    };
    // coefficient of R¹²₁
    let c_r12_1 = {
        &(&(&(&(&(&(&(&(&(-&u2_6) - &(&u1_4 * &u2_2).scale_ratio(15, 1))
            + &(&u1_2 * &u2_4).scale_ratio(15, 1))
            + &u1_6)
            + &u3_6)
            - &(&u2_4 * &u3_2))
            + &(&u2_2 * &u3_4))
            - &(&u1_2 * &u3_4))
            + &(&(&u1_2 * &u3_2) * &u2_2).scale_ratio(6, 1))
            - &(&u1_4 * &u3_2)
    };
    // coefficient of R¹³₁
    let c_r13_1 = {
        let inner = &(&(&(&(&u3_4 - &(&u3_2 * &u1_2).scale_ratio(10, 1))
            + &(&u3_2 * &u2_2).scale_ratio(2, 1))
            - &(&u2_2 * &u1_2).scale_ratio(6, 1))
            + &u1_4.scale_ratio(5, 1))
            + &u2_4;
        (&(u3 * u2) * &inner).scale_ratio(-2, 1)
    };
    // coefficient of R²³₃
    let c_r23_3 = {
        let inner = &(&(&(&(&u3_2 * &u2_2).scale_ratio(6, 1) - &(&u3_2 * &u1_2))
            - &u2_4)
            - &u3_4)
            + &(&u2_2 * &u1_2);
        (&u1_2 * &inner).scale_ratio(-4, 1)
    };
    // coefficient of Q¹²³
    let c_q = {
        let inner = &(&(&(&u2_4.scale_ratio(3, 1) + &(&u3_2 * &u2_2).scale_ratio(2, 1))
            - &(&u2_2 * &u1_2).scale_ratio(8, 1))
            + &u1_4)
            - &u3_4;
        (&(u3 * u1) * &inner).scale_ratio(4, 1)
    };
    let sum = &(&(&(&(&(&(&(&c_r13_3 * g(Var::R13_3)) + &(&c_r12_2 * g(Var::R12_2)))
        + &(&c_r23_2 * g(Var::R23_2)))
        + &(&c_r12_1 * g(Var::R12_1)))
        + &(&c_r13_1 * g(Var::R13_1)))
        + &(&c_r23_3 * g(Var::R23_3)))
        + &(&c_q * g(Var::Q123)));
    sum / &uu4
}

/// Q̃¹²³ under inversion at u (closed form).
fn q123_inverted(u: &[Scalar; 3], sp: &StructurePoint) -> Scalar {
    let uu = dot3(u);
    let uu4 = (&uu * &uu).pow_i64(2);
    let u1 = &u[0];
    let u2 = &u[1];
    let u3 = &u[2];
    let p2 = |x: &Scalar| x * x;
    let p4 = |x: &Scalar| p2(x).pow_i64(2);
    let p6 = |x: &Scalar| p2(x).pow_i64(3);
    let (u1_2, u2_2, u3_2) = (p2(u1), p2(u2), p2(u3));
    let (u1_4, u2_4, u3_4) = (p4(u1), p4(u2), p4(u3));
    let (u1_6, u2_6, u3_6) = (p6(u1), p6(u2), p6(u3));
    let g = |v: Var| sp.get(v);
    // pattern: coefficient of R^{ab}_k is 2·u_c·u_k·(5 u_d⁴ − u_c⁴ − 10 u_d²u_c² + u_k-ish…)
    let coeff = |ua: &Scalar, ub: &Scalar, five: &Scalar, minus: &Scalar, ten: (&Scalar, &Scalar), plus: &Scalar| -> Scalar {
        let inner = &(&(&five.scale_ratio(5, 1) - minus) - &(&(ten.0 * ten.1)).scale_ratio(10, 1)) + plus;
        (&(ua * ub) * &inner).scale_ratio(2, 1)
    };
    let c_r12_1 = coeff(u3, u1, &u2_4, &u3_4, (&u1_2, &u2_2), &u1_4);
    let c_r12_2 = coeff(u3, u2, &u1_4, &u3_4, (&u2_2, &u1_2), &u2_4);
    let c_r23_2 = coeff(u1, u2, &u3_4, &u1_4, (&u2_2, &u3_2), &u2_4);
    let c_r23_3 = coeff(u1, u3, &u2_4, &u1_4, (&u3_2, &u2_2), &u3_4);
    let c_r13_3 = coeff(u2, u3, &u1_4, &u2_4, (&u3_2, &u1_2), &u3_4);
    let c_r13_1 = coeff(u2, u1, &u3_4, &u2_4, (&u1_2, &u3_2), &u1_4);
    let c_q = {
        let inner = &(&(&(&(&(&(&(&(&(&u2_2 * &u3_4).scale_ratio(-5, 1)
            - &(&u1_2 * &u2_4).scale_ratio(5, 1))
            + &(&(&u1_2 * &u3_2) * &u2_2).scale_ratio(30, 1))
            - &(&u2_4 * &u3_2).scale_ratio(5, 1))
            - &(&u1_2 * &u3_4).scale_ratio(5, 1))
            - &(&u1_4 * &u2_2).scale_ratio(5, 1))
            - &(&u1_4 * &u3_2).scale_ratio(5, 1))
            + &u1_6)
            + &u2_6)
            + &u3_6;
        -&inner
    };
    let sum = &(&(&(&(&(&(&(&c_r12_1 * g(Var::R12_1)) + &(&c_r12_2 * g(Var::R12_2)))
        + &(&c_r23_2 * g(Var::R23_2)))
        + &(&c_r23_3 * g(Var::R23_3)))
        + &(&c_r13_3 * g(Var::R13_3)))
        + &(&c_r13_1 * g(Var::R13_1)))
        + &(&c_q * g(Var::Q123)));
    sum / &uu4
}

/// The full inversion of the 10-tuple at center u: three closed-form
/// components plus permutation equivariance.
pub fn qrs_under_inversion(sp: &StructurePoint, u: &[Scalar; 3], ctx: &Ctx) -> Result<StructurePoint> {
    if dot3(u).is_zero() {
        return Err(Error::NullCenter);
    }
    let mut out = StructurePoint::zero(ctx);
    let s = sp.s_vec();
    let s_new = s_under_inversion(&s, u, ctx)?;
    out.set(Var::S1, s_new[0].clone());
    out.set(Var::S2, s_new[1].clone());
    out.set(Var::S3, s_new[2].clone());
    // R components: prototype R¹²₁ with σ(1) = k, σ(2) = other, σ(3) = rest.
    for (v, k, other) in [
        (Var::R12_1, 1usize, 2usize),
        (Var::R12_2, 2, 1),
        (Var::R13_1, 1, 3),
        (Var::R13_3, 3, 1),
        (Var::R23_2, 2, 3),
        (Var::R23_3, 3, 2),
    ] {
        let rest = 6 - k - other;
        let sigma = [k, other, rest];
        let inv = perm_inverse(&sigma);
        let pu: [Scalar; 3] = std::array::from_fn(|idx| u[sigma[idx] - 1].clone());
        let psp = sp.permuted(&inv);
        out.set(v, r12_1_inverted(&pu, &psp));
    }
    out.set(Var::Q123, q123_inverted(u, sp));
    Ok(out)
}

/// One conformal move.
#[derive(Clone, Debug)]
pub enum ConformalMove {
    /// Inversion in the sphere conjugated with translation to center u.
    Inversion { center: [Scalar; 3] },
    /// x ↦ δx; every structure component scales by δ.
    Dilation { factor: Scalar },
    /// exp(θ J_axis), axis ∈ {1, 2, 3}.
    Rotation { axis: u8, angle: Scalar },
    /// Coordinate relabeling.
    IndexPermutation { sigma: [usize; 3] },
}

/// Apply one move to the full 10-tuple.
pub fn apply_move_qrs(sp: &StructurePoint, mv: &ConformalMove, ctx: &Ctx) -> Result<StructurePoint> {
    match mv {
        ConformalMove::Inversion { center } => qrs_under_inversion(sp, center, ctx),
        ConformalMove::Dilation { factor } => Ok(sp.map(|v| v * factor)),
        ConformalMove::Rotation { axis, angle } => {
            let (x, y) = xy_from_qrs(sp, ctx);
            let x_rot = rotate_multiplet(&x, 1, *axis, angle, ctx);
            let y_rot = rotate_multiplet(&y, 3, *axis, angle, ctx);
            let x_arr: [Scalar; 3] = x_rot.try_into().unwrap();
            let y_arr: YSeptet = y_rot.try_into().unwrap();
            Ok(qrs_from_xy(&x_arr, &y_arr, ctx))
        }
        ConformalMove::IndexPermutation { sigma } => Ok(sp.permuted(sigma)),
    }
}

/// Apply one move to the Y-septet alone (the S-block is untouched by Y).
/// Inversions use the matrix encoding divided by its (u·u)⁸ scalar;
/// dilations scale by δ; rotations exponentiate the spin-3 ladder matrices;
/// permutations act through the linear (R, Q) relabeling.
pub fn apply_move_y(y: &YSeptet, mv: &ConformalMove, ctx: &Ctx) -> Result<YSeptet> {
    match mv {
        ConformalMove::Inversion { center } => {
            let m = inversion_matrix(center, ctx)?;
            let p = sextic_from_y(y, ctx);
            let image = mobius_apply(&p, &m);
            let uu = dot3(center);
            let scale = uu.pow_i64(8).recip();
            let scaled = crate::sextic::Sextic::new(
                image.coeffs().iter().map(|c| c * &scale).collect(),
            );
            Ok(y_from_sextic(&scaled, ctx))
        }
        ConformalMove::Dilation { factor } => Ok(std::array::from_fn(|k| &y[k] * factor)),
        ConformalMove::Rotation { axis, angle } => {
            let rot = rotate_multiplet(y.as_slice(), 3, *axis, angle, ctx);
            Ok(rot.try_into().unwrap())
        }
        ConformalMove::IndexPermutation { sigma } => {
            let sp = crate::repspace::qrs_from_y(y, ctx);
            let (_, y2) = xy_from_qrs(&sp.permuted(sigma), ctx);
            Ok(y2)
        }
    }
}

/// Apply a move sequence to Y, left to right.
pub fn apply_moves_y(y: &YSeptet, moves: &[ConformalMove], ctx: &Ctx) -> Result<YSeptet> {
    let mut cur = y.clone();
    for mv in moves {
        cur = apply_move_y(&cur, mv, ctx)?;
    }
    Ok(cur)
}

/// The induced 2×2 matrix of a move on the classifying sextic, together
/// with the scalar by which the matrix route overshoots the physical
/// Y-action: physical = matrix-route / scalar. Index permutations have no
/// fractional-linear encoding and report an input error.
pub fn induced_mobius(mv: &ConformalMove, ctx: &Ctx) -> Result<(MobiusMap, Scalar)> {
    match mv {
        ConformalMove::Inversion { center } => {
            let m = inversion_matrix(center, ctx)?;
            Ok((m, dot3(center).pow_i64(8)))
        }
        ConformalMove::Dilation { factor } => {
            let m = MobiusMap::new(factor.clone(), ctx.zero(), ctx.zero(), factor.clone())?;
            Ok((m, factor.pow_i64(5)))
        }
        ConformalMove::Rotation { axis, angle } => {
            Ok((rotation_mobius(*axis, angle, ctx), ctx.one()))
        }
        ConformalMove::IndexPermutation { .. } => Err(Error::InvalidInput(
            "index permutations have no fractional-linear encoding".into(),
        )),
    }
}

/// exp(θ j_axis) as a 2×2 matrix: cos(θ/2)·1 + 2 sin(θ/2)·j_axis with
/// j₁ = (0, i/2; i/2, 0), j₂ = (0, −1/2; 1/2, 0), j₃ = (−i/2, 0; 0, i/2).
pub fn rotation_mobius(axis: u8, angle: &Scalar, ctx: &Ctx) -> MobiusMap {
    let half = angle.scale_ratio(1, 2);
    let c = half.cos();
    let s = half.sin();
    let i = ctx.i();
    let (a, b, cc, d) = match axis {
        1 => (
            c.clone(),
            &i * &s,
            &i * &s,
            c.clone(),
        ),
        2 => (
            c.clone(),
            -&s,
            s.clone(),
            c.clone(),
        ),
        3 => (
            &c - &(&i * &s),
            ctx.zero(),
            ctx.zero(),
            &c + &(&i * &s),
        ),
        _ => panic!("axis must be 1, 2, or 3"),
    };
    MobiusMap { a, b, c: cc, d }
}

/// exp(θ J_axis) applied to a spin-l multiplet.
pub fn rotate_multiplet(v: &[Scalar], l: u32, axis: u8, angle: &Scalar, ctx: &Ctx) -> Vec<Scalar> {
    let gen = rotation_generator(l, axis, ctx);
    let m = mat_exp(&scale_matrix(&gen, angle), ctx);
    mat_vec(&m, v, ctx)
}

/// The J_axis generator matrix on the spin-l representation:
/// J₁ = −i(J₊+J₋)/2, J₂ = (J₋−J₊)/2, J₃ = −i J₀.
pub fn rotation_generator(l: u32, axis: u8, ctx: &Ctx) -> Vec<Vec<Scalar>> {
    let jp = ladder_matrix(LadderOp::Plus, l, ctx);
    let j0 = ladder_matrix(LadderOp::Zero, l, ctx);
    let jm = ladder_matrix(LadderOp::Minus, l, ctx);
    let dim = jp.len();
    let i = ctx.i();
    let mut out = vec![vec![ctx.zero(); dim]; dim];
    for r in 0..dim {
        for c in 0..dim {
            out[r][c] = match axis {
                1 => -&(&i * &(&jp[r][c] + &jm[r][c])).scale_ratio(1, 2),
                2 => (&jm[r][c] - &jp[r][c]).scale_ratio(1, 2),
                3 => -&(&i * &j0[r][c]),
                _ => panic!("axis must be 1, 2, or 3"),
            };
        }
    }
    out
}

fn scale_matrix(m: &[Vec<Scalar>], s: &Scalar) -> Vec<Vec<Scalar>> {
    m.iter()
        .map(|row| row.iter().map(|v| v * s).collect())
        .collect()
}

fn mat_vec(m: &[Vec<Scalar>], v: &[Scalar], ctx: &Ctx) -> Vec<Scalar> {
    m.iter()
        .map(|row| {
            let mut acc = ctx.zero();
            for (a, b) in row.iter().zip(v) {
                acc = &acc + &(a * b);
            }
            acc
        })
        .collect()
}

fn mat_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], ctx: &Ctx) -> Vec<Vec<Scalar>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut acc = ctx.zero();
                    for k in 0..n {
                        acc = &acc + &(&a[i][k] * &b[k][j]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Matrix exponential by scaling-and-squaring with a Taylor series.
pub fn mat_exp(m: &[Vec<Scalar>], ctx: &Ctx) -> Vec<Vec<Scalar>> {
    let n = m.len();
    // crude norm: max row sum of |entries|
    let mut norm = 0f64;
    for row in m {
        let s: f64 = row.iter().map(|v| v.abs().to_f64()).sum();
        norm = norm.max(s);
    }
    let mut squarings = 0u32;
    let mut scaled_norm = norm;
    while scaled_norm > 0.25 {
        scaled_norm /= 2.0;
        squarings += 1;
    }
    let scaled: Vec<Vec<Scalar>> = m
        .iter()
        .map(|row| row.iter().map(|v| v.scale_ratio(1, 1i64 << squarings)).collect())
        .collect();
    // exp(scaled) by Taylor
    let mut result: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { ctx.one() } else { ctx.zero() })
                .collect()
        })
        .collect();
    let mut term = result.clone();
    let terms = 8 + (ctx.prec.digits() as i64) / 2 + 20;
    for k in 1..=terms {
        term = mat_mul(&term, &scaled, ctx);
        term = term
            .iter()
            .map(|row| row.iter().map(|v| v.scale_ratio(1, k)).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                result[i][j] = &result[i][j] + &term[i][j];
            }
        }
    }
    for _ in 0..squarings {
        result = mat_mul(&result, &result, ctx);
    }
    result
}

/// Normalization sending S to 0 while returning (Q, R) to their original
/// values exactly. One inversion + dilation pair per nonzero S-component;
/// each inversion is a conformal reflection, so when (Q, R) ≠ 0 the pair is
/// followed by a dilation by −1 folded into the dilation factor and a
/// rotation by π about the same axis, which undoes the reflection parity on
/// the 7-dimensional block without touching the progress made on S.
pub fn normalize_s(sp: &StructurePoint, ctx: &Ctx) -> Result<(Vec<ConformalMove>, StructurePoint)> {
    let mut moves: Vec<ConformalMove> = Vec::new();
    let mut work = sp.clone();
    let rq_nonzero = [
        Var::R12_1,
        Var::R12_2,
        Var::R13_1,
        Var::R13_3,
        Var::R23_2,
        Var::R23_3,
        Var::Q123,
    ]
    .iter()
    .any(|&v| !sp.get(v).is_zero());
    let pi = Scalar::from_complex(rug::Complex::with_val(
        ctx.prec.bits(),
        (rug::Float::with_val(ctx.prec.bits(), rug::float::Constant::Pi), 0),
    ));
    for axis in 1..=3u8 {
        let s_i = work.get(Var::s(axis as usize)).clone();
        if s_i.is_zero() {
            continue;
        }
        let half = s_i.scale_ratio(1, 2);
        let mut center = [ctx.zero(), ctx.zero(), ctx.zero()];
        center[(axis - 1) as usize] = half.clone();
        let delta_base = &half * &half;
        let step: Vec<ConformalMove> = if rq_nonzero {
            vec![
                ConformalMove::Inversion { center },
                ConformalMove::Dilation {
                    factor: -&delta_base,
                },
                ConformalMove::Rotation {
                    axis,
                    angle: pi.clone(),
                },
            ]
        } else {
            vec![
                ConformalMove::Inversion { center },
                ConformalMove::Dilation { factor: delta_base },
            ]
        };
        for mv in step {
            work = apply_move_qrs(&work, &mv, ctx)?;
            moves.push(mv);
        }
    }
    Ok((moves, work))
}
