//! Maps between the variable systems: the structure-function 10-tuple
//! (Q, R, S), the A-coefficients of the potential PDE, the rotation-adapted
//! X ∈ ℂ³ and Y ∈ ℂ⁷, the classifying sextic, and the so(3, ℂ) ladder
//! operators acting on those representations.
//!
//! Index conventions: X and Y are stored ascending in the J₀ eigenvalue, so
//! `x[0] = X₋₁ … x[2] = X₊₁` and `y[0] = Y₋₃ … y[6] = Y₊₃`. The classifying
//! sextic has coefficient of zᵐ equal to (−1)ᵐ √C(6,m) · Y_{m−3}.

use crate::scalar::{Ctx, Scalar};
use crate::sextic::Sextic;

/// The ten structure-function labels. Raised R-indices are symmetric, so six
/// R-components suffice; Q carries all three indices and is fixed by every
/// coordinate permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
#[allow(non_camel_case_types)]
pub enum Var {
    S1,
    S2,
    S3,
    R12_1,
    R12_2,
    R13_1,
    R13_3,
    R23_2,
    R23_3,
    Q123,
}

impl Var {
    pub const ALL: [Var; 10] = [
        Var::S1,
        Var::S2,
        Var::S3,
        Var::R12_1,
        Var::R12_2,
        Var::R13_1,
        Var::R13_3,
        Var::R23_2,
        Var::R23_3,
        Var::Q123,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|&v| v == self).unwrap()
    }

    pub fn label(self) -> &'static str {
        match self {
            Var::S1 => "S1",
            Var::S2 => "S2",
            Var::S3 => "S3",
            Var::R12_1 => "R12_1",
            Var::R12_2 => "R12_2",
            Var::R13_1 => "R13_1",
            Var::R13_3 => "R13_3",
            Var::R23_2 => "R23_2",
            Var::R23_3 => "R23_3",
            Var::Q123 => "Q123",
        }
    }

    /// S-variable for coordinate i ∈ {1,2,3}.
    pub fn s(i: usize) -> Var {
        match i {
            1 => Var::S1,
            2 => Var::S2,
            3 => Var::S3,
            _ => panic!("coordinate index out of range"),
        }
    }

    /// R-variable with raised pair {a, b} and lower index k ∈ {a, b}.
    pub fn r(a: usize, b: usize, k: usize) -> Var {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        assert!(k == lo || k == hi, "lower index must be one of the raised pair");
        match (lo, hi, k) {
            (1, 2, 1) => Var::R12_1,
            (1, 2, 2) => Var::R12_2,
            (1, 3, 1) => Var::R13_1,
            (1, 3, 3) => Var::R13_3,
            (2, 3, 2) => Var::R23_2,
            (2, 3, 3) => Var::R23_3,
            _ => panic!("invalid R indices ({lo},{hi},{k})"),
        }
    }

    /// Image of the label under a coordinate permutation σ (σ[i−1] is the
    /// image of coordinate i).
    pub fn permute(self, sigma: &[usize; 3]) -> Var {
        let map = |i: usize| sigma[i - 1];
        match self {
            Var::S1 => Var::s(map(1)),
            Var::S2 => Var::s(map(2)),
            Var::S3 => Var::s(map(3)),
            Var::R12_1 => Var::r(map(1), map(2), map(1)),
            Var::R12_2 => Var::r(map(1), map(2), map(2)),
            Var::R13_1 => Var::r(map(1), map(3), map(1)),
            Var::R13_3 => Var::r(map(1), map(3), map(3)),
            Var::R23_2 => Var::r(map(2), map(3), map(2)),
            Var::R23_3 => Var::r(map(2), map(3), map(3)),
            Var::Q123 => Var::Q123,
        }
    }
}

/// Compose permutations: (a ∘ b)(i) = a[b(i)].
pub fn perm_compose(a: &[usize; 3], b: &[usize; 3]) -> [usize; 3] {
    [a[b[0] - 1], a[b[1] - 1], a[b[2] - 1]]
}

pub fn perm_inverse(sigma: &[usize; 3]) -> [usize; 3] {
    let mut inv = [0usize; 3];
    for (i, &img) in sigma.iter().enumerate() {
        inv[img - 1] = i + 1;
    }
    inv
}

/// All six coordinate permutations.
pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

/// The 10-tuple (S¹,S²,S³, R¹²₁,R¹²₂,R¹³₁,R¹³₃,R²³₂,R²³₃, Q¹²³) at a
/// regular point.
#[derive(Clone, Debug)]
pub struct StructurePoint {
    vals: Vec<Scalar>,
}

impl StructurePoint {
    pub fn zero(ctx: &Ctx) -> Self {
        StructurePoint {
            vals: (0..10).map(|_| ctx.zero()).collect(),
        }
    }

    pub fn from_vals(vals: Vec<Scalar>) -> Self {
        assert_eq!(vals.len(), 10);
        StructurePoint { vals }
    }

    pub fn get(&self, v: Var) -> &Scalar {
        &self.vals[v.index()]
    }

    pub fn set(&mut self, v: Var, x: Scalar) {
        self.vals[v.index()] = x;
    }

    pub fn vals(&self) -> &[Scalar] {
        &self.vals
    }

    pub fn s_vec(&self) -> [Scalar; 3] {
        [
            self.get(Var::S1).clone(),
            self.get(Var::S2).clone(),
            self.get(Var::S3).clone(),
        ]
    }

    /// Max-norm over all ten components.
    pub fn norm(&self) -> rug::Float {
        Scalar::max_abs(&self.vals)
    }

    /// The permuted tuple: (σ·sp) holds at label σ(v) the value sp holds
    /// at v.
    pub fn permuted(&self, sigma: &[usize; 3]) -> StructurePoint {
        let mut out = self.clone();
        for v in Var::ALL {
            out.vals[v.permute(sigma).index()] = self.vals[v.index()].clone();
        }
        out
    }

    pub fn map(&self, f: impl Fn(&Scalar) -> Scalar) -> StructurePoint {
        StructurePoint {
            vals: self.vals.iter().map(f).collect(),
        }
    }
}

/// The fifteen first-order PDE coefficients A^{ij}_k for
/// (ij) ∈ {22, 33, 12, 13, 23}, k ∈ {1, 2, 3}.
#[derive(Clone, Debug)]
pub struct ACoefficients {
    /// Rows in the order [A²², A³³, A¹², A¹³, A²³], columns k = 1..3.
    pub rows: [[Scalar; 3]; 5],
}

impl ACoefficients {
    fn row_index(pair: (usize, usize)) -> usize {
        match pair {
            (2, 2) => 0,
            (3, 3) => 1,
            (1, 2) => 2,
            (1, 3) => 3,
            (2, 3) => 4,
            _ => panic!("A-coefficient pair out of chart"),
        }
    }

    pub fn get(&self, pair: (usize, usize), k: usize) -> &Scalar {
        let (a, b) = pair;
        let pair = if a <= b { (a, b) } else { (b, a) };
        &self.rows[Self::row_index(pair)][k - 1]
    }

    /// Coefficient of ∂V/∂x_k in V_{ij} for i ≠ j (symmetric in i, j).
    pub fn off_diag(&self, i: usize, j: usize, k: usize) -> Scalar {
        self.get((i, j), k).clone()
    }

    /// Coefficient of ∂V/∂x_k in V_{ii} − V_{jj}, defined for all i ≠ j.
    /// The chart stores V₂₂ − V₁₁ and V₃₃ − V₁₁; the rest are differences.
    pub fn diag_diff(&self, i: usize, j: usize, k: usize) -> Scalar {
        let ctx_zero = self.rows[0][0].zero_like_ref();
        let col = |ii: usize| -> Scalar {
            match ii {
                1 => ctx_zero.clone(),
                2 => self.get((2, 2), k).clone(),
                3 => self.get((3, 3), k).clone(),
                _ => panic!("index out of range"),
            }
        };
        &col(i) - &col(j)
    }

    /// Residuals of the five linear relations among the A^{ij}_k.
    pub fn linear_relation_residuals(&self) -> [Scalar; 5] {
        let a = |p: (usize, usize), k: usize| self.get(p, k).clone();
        [
            &(&a((2, 2), 1) - &a((1, 2), 2)) - &(&a((3, 3), 1) - &a((1, 3), 3)),
            &(&a((2, 3), 3) - &a((1, 2), 1)) - &a((3, 3), 2),
            &(&a((2, 3), 2) - &a((1, 3), 1)) - &a((2, 2), 3),
            &a((1, 2), 3) - &a((1, 3), 2),
            &a((1, 2), 3) - &a((2, 3), 1),
        ]
    }
}

impl Scalar {
    fn zero_like_ref(&self) -> Scalar {
        use crate::scalar::Ring;
        self.zero_like()
    }
}

/// The A-coefficients parameterized by the structure functions.
pub fn a_from_qrs(sp: &StructurePoint) -> ACoefficients {
    let g = |v: Var| sp.get(v);
    let s1 = g(Var::S1);
    let s2 = g(Var::S2);
    let s3 = g(Var::S3);
    let r12_1 = g(Var::R12_1);
    let r12_2 = g(Var::R12_2);
    let r13_1 = g(Var::R13_1);
    let r13_3 = g(Var::R13_3);
    let r23_2 = g(Var::R23_2);
    let r23_3 = g(Var::R23_3);
    let q = g(Var::Q123);
    let a22 = [
        &(&s1.scale_ratio(6, 1) + &r12_2.scale_ratio(2, 1)) + r13_3,
        &(&s2.scale_ratio(-6, 1) - &r12_1.scale_ratio(2, 1)) - r23_3,
        r23_2 - r13_1,
    ];
    let a33 = [
        &(&s1.scale_ratio(6, 1) + r12_2) + &r13_3.scale_ratio(2, 1),
        &r12_1.neg() + r23_3,
        &(&s3.scale_ratio(-6, 1) - r23_2) - &r13_1.scale_ratio(2, 1),
    ];
    let a12 = [
        r12_1 - &s2.scale_ratio(3, 1),
        r12_2 - &s1.scale_ratio(3, 1),
        q.clone(),
    ];
    let a13 = [
        r13_1 - &s3.scale_ratio(3, 1),
        q.clone(),
        r13_3 - &s1.scale_ratio(3, 1),
    ];
    let a23 = [
        q.clone(),
        r23_2 - &s3.scale_ratio(3, 1),
        r23_3 - &s2.scale_ratio(3, 1),
    ];
    ACoefficients {
        rows: [a22, a33, a12, a13, a23],
    }
}

/// X ∈ ℂ³ ascending in m: [X₋₁, X₀, X₊₁].
pub type XTriple = [Scalar; 3];
/// Y ∈ ℂ⁷ ascending in m: [Y₋₃, …, Y₊₃].
pub type YSeptet = [Scalar; 7];

/// The rotation-adapted image (X, Y) of a structure point.
pub fn xy_from_qrs(sp: &StructurePoint, ctx: &Ctx) -> (XTriple, YSeptet) {
    let g = |v: Var| sp.get(v);
    let i = ctx.i();
    let s1 = g(Var::S1);
    let s2 = g(Var::S2);
    let s3 = g(Var::S3);
    let x = [
        &(&i * s2) - s1,                  // X₋₁ = iS₂ − S₁
        -&(s3 * &ctx.sqrt_int(2)),        // X₀ = −√2 S₃
        &(&i * s2) + s1,                  // X₊₁ = iS₂ + S₁
    ];
    let r12_1 = g(Var::R12_1);
    let r12_2 = g(Var::R12_2);
    let r13_1 = g(Var::R13_1);
    let r13_3 = g(Var::R13_3);
    let r23_2 = g(Var::R23_2);
    let r23_3 = g(Var::R23_3);
    let q = g(Var::Q123);
    let re_part = r12_1 + &r23_3.scale_ratio(1, 4);
    let im_part = r12_2 + &r13_3.scale_ratio(1, 4);
    let y_p3 = &re_part + &(&i * &im_part);
    let y_m3 = &re_part - &(&i * &im_part);
    let sqrt6_4 = ctx.sqrt_int(6).scale_ratio(1, 4);
    let diff_r = &(&i * &(r13_1 - r23_2)) - &q.scale_ratio(2, 1);
    let sum_r = &(&i * &(r13_1 - r23_2)) + &q.scale_ratio(2, 1);
    let y_p2 = &sqrt6_4 * &diff_r;
    let y_m2 = &sqrt6_4 * &sum_r;
    let sqrt15_4 = ctx.sqrt_int(15).scale_ratio(1, 4);
    let y_p1 = &sqrt15_4 * &(r23_3 - &(&i * r13_3));
    let y_m1 = &sqrt15_4 * &(r23_3 + &(&i * r13_3));
    let y_0 = -&(&(&i * &ctx.sqrt_int(5).scale_ratio(1, 2)) * &(r13_1 + r23_2));
    let y = [y_m3, y_m2, y_m1, y_0, y_p1, y_p2, y_p3];
    (x, y)
}

/// Inverse of [`xy_from_qrs`]: recover the structure point from (X, Y).
pub fn qrs_from_xy(x: &XTriple, y: &YSeptet, ctx: &Ctx) -> StructurePoint {
    let i = ctx.i();
    let half = |v: Scalar| v.scale_ratio(1, 2);
    let s1 = half(&x[2] - &x[0]);
    let s2 = half(-&(&i * &(&x[2] + &x[0])));
    let s3 = -&(&x[1] / &ctx.sqrt_int(2));
    let sqrt15 = ctx.sqrt_int(15);
    let sqrt6 = ctx.sqrt_int(6);
    let sqrt5 = ctx.sqrt_int(5);
    let sum_y1 = &y[4] + &y[2];
    let diff_y1 = &y[4] - &y[2];
    let r23_3 = &sum_y1.scale_ratio(2, 1) / &sqrt15;
    let r13_3 = &(&i * &diff_y1).scale_ratio(2, 1) / &sqrt15;
    let r12_1 = &half(&y[6] + &y[0]) - &(&sum_y1 / &sqrt15.scale_ratio(2, 1));
    let r12_2 = &half(-&(&i * &(&y[6] - &y[0]))) - &(&(&i * &diff_y1) / &sqrt15.scale_ratio(2, 1));
    let q = &(&y[1] - &y[5]) / &sqrt6;
    let y0_term = &(&i * &y[3]) / &sqrt5;
    let y2_term = &(&i * &(&y[5] + &y[1])) / &sqrt6;
    let r13_1 = &y0_term - &y2_term;
    let r23_2 = &y0_term + &y2_term;
    let mut sp = StructurePoint::zero(ctx);
    sp.set(Var::S1, s1);
    sp.set(Var::S2, s2);
    sp.set(Var::S3, s3);
    sp.set(Var::R12_1, r12_1);
    sp.set(Var::R12_2, r12_2);
    sp.set(Var::R13_1, r13_1);
    sp.set(Var::R13_3, r13_3);
    sp.set(Var::R23_2, r23_2);
    sp.set(Var::R23_3, r23_3);
    sp.set(Var::Q123, q);
    sp
}

/// The (R, Q) part of a structure point from Y alone (S set to zero).
pub fn qrs_from_y(y: &YSeptet, ctx: &Ctx) -> StructurePoint {
    let x = [ctx.zero(), ctx.zero(), ctx.zero()];
    qrs_from_xy(&x, y, ctx)
}

/// The classifying sextic: coefficient of zᵐ is (−1)ᵐ √C(6,m) · Y_{m−3}.
pub fn sextic_from_y(y: &YSeptet, ctx: &Ctx) -> Sextic {
    const BINOM6: [u64; 7] = [1, 6, 15, 20, 15, 6, 1];
    let coeffs: Vec<Scalar> = (0..7)
        .map(|m| {
            let c = &y[m] * &ctx.sqrt_int(BINOM6[m]);
            if m % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect();
    Sextic::new(coeffs)
}

/// Inverse of [`sextic_from_y`].
pub fn y_from_sextic(p: &Sextic, ctx: &Ctx) -> YSeptet {
    const BINOM6: [u64; 7] = [1, 6, 15, 20, 15, 6, 1];
    let mut y: Vec<Scalar> = Vec::with_capacity(7);
    for m in 0..7 {
        let v = p.coeff(m) / &ctx.sqrt_int(BINOM6[m]);
        y.push(if m % 2 == 1 { -&v } else { v });
    }
    y.try_into().unwrap()
}

/// Full (X, Y) → sextic convenience for classification entry points.
pub fn sextic_from_qrs(sp: &StructurePoint, ctx: &Ctx) -> Sextic {
    let (_, y) = xy_from_qrs(sp, ctx);
    sextic_from_y(&y, ctx)
}

/// Ladder operators of the normalized spin-l representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LadderOp {
    Plus,
    Zero,
    Minus,
}

/// Apply a ladder operator to a (2l+1)-vector stored ascending in m.
pub fn ladder_apply(op: LadderOp, l: u32, v: &[Scalar], ctx: &Ctx) -> Vec<Scalar> {
    let dim = (2 * l + 1) as usize;
    assert_eq!(v.len(), dim);
    let mut out: Vec<Scalar> = (0..dim).map(|_| ctx.zero()).collect();
    let li = l as i64;
    for (idx, val) in v.iter().enumerate() {
        let m = idx as i64 - li;
        match op {
            LadderOp::Plus => {
                // J₊ f_m = √((l−m)(l+m+1)) f_{m+1}
                if m < li {
                    let c = ctx.sqrt_int(((li - m) * (li + m + 1)) as u64);
                    out[idx + 1] = &out[idx + 1] + &(val * &c);
                }
            }
            LadderOp::Zero => {
                out[idx] = &out[idx] + &val.scale_ratio(m, 1);
            }
            LadderOp::Minus => {
                // J₋ f_m = √((l+m)(l−m+1)) f_{m−1}
                if m > -li {
                    let c = ctx.sqrt_int(((li + m) * (li - m + 1)) as u64);
                    out[idx - 1] = &out[idx - 1] + &(val * &c);
                }
            }
        }
    }
    out
}

/// Dense matrix of a ladder operator on the spin-l representation.
pub fn ladder_matrix(op: LadderOp, l: u32, ctx: &Ctx) -> Vec<Vec<Scalar>> {
    let dim = (2 * l + 1) as usize;
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(dim);
    for idx in 0..dim {
        let mut e: Vec<Scalar> = (0..dim).map(|_| ctx.zero()).collect();
        e[idx] = ctx.one();
        cols.push(ladder_apply(op, l, &e, ctx));
    }
    // cols[j][i] = M[i][j]; transpose into row-major.
    (0..dim)
        .map(|i| (0..dim).map(|j| cols[j][i].clone()).collect())
        .collect()
}

/// First-derivative data of a spin-l multiplet: value and the three
/// Cartesian partials of each component.
#[derive(Clone, Debug)]
pub struct MultipletJet {
    pub l: u32,
    /// Component values ascending in m.
    pub values: Vec<Scalar>,
    /// partials[idx][j] = ∂f_m/∂x_{j+1} with idx = m + l.
    pub partials: Vec<[Scalar; 3]>,
}

/// A linear combination of first derivatives Σ (α ∂₊ + β ∂₀ + γ ∂₋) f_m,
/// used to build and to J₊-test the derived highest-weight vectors.
#[derive(Clone, Debug)]
pub struct DerivExpr {
    /// (component index, coefficients of ∂₊, ∂₀, ∂₋).
    pub terms: Vec<(usize, [Scalar; 3])>,
}

impl DerivExpr {
    fn single(idx: usize, which: usize, coeff: Scalar, ctx: &Ctx) -> DerivExpr {
        let mut c = [ctx.zero(), ctx.zero(), ctx.zero()];
        c[which] = coeff;
        DerivExpr {
            terms: vec![(idx, c)],
        }
    }

    fn push(&mut self, idx: usize, which: usize, coeff: Scalar, ctx: &Ctx) {
        let mut c = [ctx.zero(), ctx.zero(), ctx.zero()];
        c[which] = coeff;
        self.terms.push((idx, c));
    }

    /// Evaluate against derivative data: ∂₊ = i∂₂ + ∂₁, ∂₀ = ∂₃,
    /// ∂₋ = i∂₂ − ∂₁.
    pub fn eval(&self, jet: &MultipletJet, ctx: &Ctx) -> Scalar {
        let i = ctx.i();
        let mut acc = ctx.zero();
        for (idx, coeffs) in &self.terms {
            let p = &jet.partials[*idx];
            let d_plus = &(&i * &p[1]) + &p[0];
            let d_zero = p[2].clone();
            let d_minus = &(&i * &p[1]) - &p[0];
            acc = &acc + &(&coeffs[0] * &d_plus);
            acc = &acc + &(&coeffs[1] * &d_zero);
            acc = &acc + &(&coeffs[2] * &d_minus);
        }
        acc
    }

    /// J₊ applied formally, using J₊∂_β = ∂_β J₊ + [J₊, ∂_β] with
    /// [J₊,∂₊] = 0, [J₊,∂₀] = −∂₊, [J₊,∂₋] = −2∂₀, and the normalized
    /// spin-l action on components.
    pub fn apply_j_plus(&self, l: u32, ctx: &Ctx) -> DerivExpr {
        let li = l as i64;
        let mut out = DerivExpr { terms: vec![] };
        for (idx, coeffs) in &self.terms {
            let m = *idx as i64 - li;
            // ∂_β (J₊ f_m): raise the component.
            if m < li {
                let c = ctx.sqrt_int(((li - m) * (li + m + 1)) as u64);
                for which in 0..3 {
                    if !coeffs[which].is_zero() {
                        out.push(idx + 1, which, &coeffs[which] * &c, ctx);
                    }
                }
            }
            // Commutator terms.
            if !coeffs[1].is_zero() {
                out.push(*idx, 0, -&coeffs[1], ctx); // [J₊,∂₀] = −∂₊
            }
            if !coeffs[2].is_zero() {
                out.push(*idx, 1, coeffs[2].scale_ratio(-2, 1), ctx); // [J₊,∂₋] = −2∂₀
            }
        }
        out
    }
}

/// The three derived highest-weight expressions built from the partial
/// derivatives of a spin-l multiplet:
/// g_{l+1} = ∂₊f_l, g_l = ∂₀f_l + (1/2l)∂₊(J₋f_l),
/// g_{l−1} = ∂₋f_l + (1/l)∂₀(J₋f_l) + (1/(2l(2l−1)))∂₊(J₋²f_l).
pub fn derived_highest_weight_exprs(l: u32, ctx: &Ctx) -> [DerivExpr; 3] {
    assert!(l >= 1, "derived multiplets need l ≥ 1; for l = 0 only ∂₊f₀");
    let li = l as i64;
    let top = (2 * l) as usize;
    let g_up = DerivExpr::single(top, 0, ctx.one(), ctx);
    // J₋ f_l = √(2l) f_{l−1}; J₋² f_l = √(2l)·√(2(2l−1)) f_{l−2}.
    let c1 = ctx.sqrt_int((2 * li) as u64);
    let mut g_mid = DerivExpr::single(top, 1, ctx.one(), ctx);
    g_mid.push(top - 1, 0, c1.scale_ratio(1, 2 * li), ctx);
    let mut g_dn = DerivExpr::single(top, 2, ctx.one(), ctx);
    g_dn.push(top - 1, 1, c1.scale_ratio(1, li), ctx);
    if l >= 1 {
        let c2 = &c1 * &ctx.sqrt_int((2 * (2 * li - 1)) as u64);
        g_dn.push(top - 2, 0, c2.scale_ratio(1, 2 * li * (2 * li - 1)), ctx);
    }
    [g_up, g_mid, g_dn]
}

/// Values of the three derived highest-weight vectors at a data point.
pub fn derived_highest_weights(jet: &MultipletJet, ctx: &Ctx) -> [Scalar; 3] {
    let exprs = derived_highest_weight_exprs(jet.l, ctx);
    [
        exprs[0].eval(jet, ctx),
        exprs[1].eval(jet, ctx),
        exprs[2].eval(jet, ctx),
    ]
}

/// J₊-annihilation residuals of the three derived vectors, evaluated from
/// the same derivative data via the commutator table.
pub fn derived_j_plus_residuals(jet: &MultipletJet, ctx: &Ctx) -> [Scalar; 3] {
    let exprs = derived_highest_weight_exprs(jet.l, ctx);
    [
        exprs[0].apply_j_plus(jet.l, ctx).eval(jet, ctx),
        exprs[1].apply_j_plus(jet.l, ctx).eval(jet, ctx),
        exprs[2].apply_j_plus(jet.l, ctx).eval(jet, ctx),
    ]
}
