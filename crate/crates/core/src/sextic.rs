//! Binary sextics: degree-≤6 complex polynomials in one variable with the
//! projective (binary-form) point of view.
//!
//! A [`Sextic`] always stores seven coefficients; a visible degree below six
//! means the form has a root at infinity of multiplicity `6 − deg`. The
//! Möbius action is the fractional-linear substitution
//! p(z) ↦ (cz+d)⁶ p((az+b)/(cz+d)), and root structures are computed by
//! Aberth–Ehrlich iteration followed by single-linkage clustering in the
//! chordal metric on ℂP¹, so that large finite roots and the formal roots at
//! infinity merge as they should.

use crate::error::Error;
use crate::scalar::{Ctx, Scalar};
use crate::Result;
use rug::ops::{CompleteRound, Pow};
use rug::{Complex, Float};

/// A binary form of degree ≤ 6: coefficients of z⁰ … z⁶.
#[derive(Clone, Debug, PartialEq)]
pub struct Sextic {
    coeffs: Vec<Scalar>,
}

impl Sextic {
    /// Build from exactly seven coefficients, z⁰ first.
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        assert_eq!(coeffs.len(), 7, "a sextic stores exactly 7 coefficients");
        Sextic { coeffs }
    }

    pub fn zero(ctx: &Ctx) -> Self {
        Sextic {
            coeffs: (0..7).map(|_| ctx.zero()).collect(),
        }
    }

    /// c · z^k as a sextic (k ≤ 6).
    pub fn monomial(ctx: &Ctx, c: Scalar, k: usize) -> Self {
        let mut s = Sextic::zero(ctx);
        s.coeffs[k] = c;
        s
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Scalar {
        &self.coeffs[k]
    }

    /// Max-norm of the coefficient vector.
    pub fn coeff_norm(&self) -> Float {
        Scalar::max_abs(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    /// Visible degree under the tolerance policy: the largest k whose
    /// coefficient does not pass the zero test at the coefficient max-norm
    /// scale. `None` for the zero polynomial.
    pub fn degree(&self, ctx: &Ctx) -> Option<usize> {
        let scale = self.coeff_norm();
        if scale.is_zero() {
            return None;
        }
        (0..7)
            .rev()
            .find(|&k| !ctx.tol.zero_test(&self.coeffs[k], 1, &scale))
    }

    /// p evaluated at z by Horner's rule.
    pub fn eval(&self, z: &Scalar) -> Scalar {
        let mut acc = self.coeffs[6].clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * z) + c;
        }
        acc
    }
}

/// A 2×2 complex matrix (a b; c d) acting on forms through
/// q(z) ↦ (cz+d)^k q((az+b)/(cz+d)). Construction rejects det = 0.
#[derive(Clone, Debug)]
pub struct MobiusMap {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl MobiusMap {
    pub fn new(a: Scalar, b: Scalar, c: Scalar, d: Scalar) -> Result<Self> {
        let m = MobiusMap { a, b, c, d };
        if m.det().is_zero() {
            return Err(Error::SingularMobius);
        }
        Ok(m)
    }

    pub fn identity(ctx: &Ctx) -> Self {
        MobiusMap {
            a: ctx.one(),
            b: ctx.zero(),
            c: ctx.zero(),
            d: ctx.one(),
        }
    }

    pub fn det(&self) -> Scalar {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Matrix product; `self.compose(&rhs)` is the map that acts like `self`
    /// first and `rhs` second under the right-action law of [`mobius_apply`].
    pub fn compose(&self, rhs: &MobiusMap) -> MobiusMap {
        MobiusMap {
            a: &(&self.a * &rhs.a) + &(&self.b * &rhs.c),
            b: &(&self.a * &rhs.b) + &(&self.b * &rhs.d),
            c: &(&self.c * &rhs.a) + &(&self.d * &rhs.c),
            d: &(&self.c * &rhs.b) + &(&self.d * &rhs.d),
        }
    }

    /// The fractional-linear image of a finite point; `None` means infinity.
    pub fn apply_point(&self, z: &Scalar) -> Option<Scalar> {
        let den = &(&self.c * z) + &self.d;
        if den.is_zero() {
            return None;
        }
        Some((&(&self.a * z) + &self.b) / den)
    }
}

/// (cz+d)^k q((az+b)/(cz+d)) for a form q of formal order k = q.len() − 1.
pub fn apply_form(q: &[Scalar], m: &MobiusMap) -> Vec<Scalar> {
    let k = q.len() - 1;
    let prec = q[0].prec();
    let zero = Scalar::from_complex(Complex::new(prec));
    let pow_ab = power_table(&m.a, &m.b, k, prec);
    let pow_cd = power_table(&m.c, &m.d, k, prec);
    let mut out = vec![zero; k + 1];
    for (j, qj) in q.iter().enumerate() {
        if qj.is_zero() {
            continue;
        }
        for (s, p1) in pow_ab[j].iter().enumerate() {
            let partial = qj * p1;
            for (t, p2) in pow_cd[k - j].iter().enumerate() {
                out[s + t] = &out[s + t] + &(&partial * p2);
            }
        }
    }
    out
}

/// Coefficient table of (hi·z + lo)^j for j = 0..=up_to.
fn power_table(hi: &Scalar, lo: &Scalar, up_to: usize, prec: u32) -> Vec<Vec<Scalar>> {
    let one = Scalar::from_complex(Complex::with_val(prec, (1, 0)));
    let zero = Scalar::from_complex(Complex::new(prec));
    let mut table = Vec::with_capacity(up_to + 1);
    table.push(vec![one]);
    for j in 1..=up_to {
        let prev = &table[j - 1];
        let mut next = vec![zero.clone(); j + 1];
        for (i, ci) in prev.iter().enumerate() {
            next[i] = &next[i] + &(ci * lo);
            next[i + 1] = &next[i + 1] + &(ci * hi);
        }
        table.push(next);
    }
    table
}

/// Möbius action on a sextic (formal order 6).
pub fn mobius_apply(p: &Sextic, m: &MobiusMap) -> Sextic {
    Sextic::new(apply_form(p.coeffs(), m))
}

/// A point of ℂ ∪ {∞}.
#[derive(Clone, Debug)]
pub enum RootLoc {
    Finite(Scalar),
    Infinity,
}

impl RootLoc {
    pub fn is_infinite(&self) -> bool {
        matches!(self, RootLoc::Infinity)
    }

    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            RootLoc::Finite(z) => Some(z),
            RootLoc::Infinity => None,
        }
    }

    /// Chordal distance on ℂP¹.
    pub fn chordal(&self, other: &RootLoc, prec: u32) -> Float {
        match (self, other) {
            (RootLoc::Infinity, RootLoc::Infinity) => Float::new(prec),
            (RootLoc::Finite(z), RootLoc::Infinity) | (RootLoc::Infinity, RootLoc::Finite(z)) => {
                let n = z.abs().square() + 1u32;
                n.sqrt().recip()
            }
            (RootLoc::Finite(a), RootLoc::Finite(b)) => {
                let num = (a - b).abs();
                let da = (a.abs().square() + 1u32).sqrt();
                let db = (b.abs().square() + 1u32).sqrt();
                num / (da * db)
            }
        }
    }
}

/// Roots of a sextic with multiplicities. Multiplicities sum to 6 for any
/// nonzero form (infinity carries the degree deficiency); the zero
/// polynomial is reported as the partition [0].
#[derive(Clone, Debug)]
pub struct RootStructure {
    /// Multiplicities sorted descending; `[0]` for the zero polynomial.
    pub partition: Vec<u32>,
    /// Root locations with multiplicities, finite roots sorted by (re, im),
    /// infinity last.
    pub roots: Vec<(RootLoc, u32)>,
}

impl RootStructure {
    pub fn is_partition(&self, parts: &[u32]) -> bool {
        self.partition == parts
    }
}

/// Configuration for root extraction.
#[derive(Clone, Copy, Debug)]
pub struct RootConfig {
    /// Chordal clustering radius for merging near-coincident roots.
    pub cluster_eps: f64,
}

impl Default for RootConfig {
    fn default() -> Self {
        RootConfig { cluster_eps: 1e-15 }
    }
}

/// Numerically computed projective roots with multiplicity clustering.
pub fn roots_with_multiplicity(p: &Sextic, ctx: &Ctx) -> RootStructure {
    roots_with_multiplicity_cfg(p, ctx, RootConfig::default())
}

/// As [`roots_with_multiplicity`] with an explicit clustering radius.
pub fn roots_with_multiplicity_cfg(p: &Sextic, ctx: &Ctx, cfg: RootConfig) -> RootStructure {
    if p.is_zero() {
        return RootStructure {
            partition: vec![0],
            roots: vec![],
        };
    }
    let deg = p.degree(ctx).unwrap_or(0);
    let work_bits = ctx.prec.bits();
    let mut members: Vec<RootLoc> = Vec::with_capacity(6);
    for _ in deg..6 {
        members.push(RootLoc::Infinity);
    }
    if deg > 0 {
        let coeffs: Vec<Complex> = p.coeffs[..=deg]
            .iter()
            .map(|c| c.as_complex().clone())
            .collect();
        let loose = aberth(&coeffs, work_bits, ctx.prec.digits());
        let loose_locs: Vec<RootLoc> = loose
            .iter()
            .map(|z| RootLoc::Finite(Scalar::from_complex(z.clone())))
            .collect();
        // Loose grouping only supplies multiplicity guesses for refinement.
        let loose_eps = 1e-8f64.max(cfg.cluster_eps);
        let groups = single_linkage(&loose_locs, loose_eps, work_bits);
        let refine_bits = work_bits * 4;
        let hi_coeffs: Vec<Complex> = p.coeffs[..=deg]
            .iter()
            .map(|c| Complex::with_val(refine_bits, c.as_complex()))
            .collect();
        for group in groups {
            let m = group.len() as u32;
            let mut mean = Complex::new(refine_bits);
            for idx in &group {
                mean += &loose[*idx];
            }
            mean /= m;
            let z = newton_multiplicity(&hi_coeffs, mean, m, refine_bits);
            let z = Scalar::from_complex(z).with_prec(work_bits);
            for _ in 0..m {
                members.push(RootLoc::Finite(z.clone()));
            }
        }
    }
    // Final clustering at the requested radius, in the chordal metric.
    let groups = single_linkage(&members, cfg.cluster_eps, work_bits);
    let mut roots: Vec<(RootLoc, u32)> = Vec::new();
    for group in groups {
        let mult = group.len() as u32;
        let loc = if group.iter().any(|&i| members[i].is_infinite()) {
            RootLoc::Infinity
        } else {
            let mut mean = Complex::new(work_bits);
            for &i in &group {
                mean += members[i].finite().unwrap().as_complex();
            }
            mean /= mult;
            RootLoc::Finite(Scalar::from_complex(mean))
        };
        roots.push((loc, mult));
    }
    roots.sort_by(|x, y| root_order(&x.0, &y.0));
    let mut partition: Vec<u32> = roots.iter().map(|r| r.1).collect();
    partition.sort_unstable_by(|a, b| b.cmp(a));
    RootStructure { partition, roots }
}

fn root_order(a: &RootLoc, b: &RootLoc) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match (a, b) {
        (RootLoc::Infinity, RootLoc::Infinity) => Ordering::Equal,
        (RootLoc::Infinity, _) => Ordering::Greater,
        (_, RootLoc::Infinity) => Ordering::Less,
        (RootLoc::Finite(x), RootLoc::Finite(y)) => x
            .re()
            .partial_cmp(y.re())
            .unwrap_or(Ordering::Equal)
            .then(x.im().partial_cmp(y.im()).unwrap_or(Ordering::Equal)),
    }
}

/// Single-linkage clustering under the chordal metric; returns index groups.
fn single_linkage(points: &[RootLoc], eps: f64, prec: u32) -> Vec<Vec<usize>> {
    let n = points.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while parent[root] != root {
            root = parent[root];
        }
        let mut cur = i;
        while parent[cur] != root {
            let next = parent[cur];
            parent[cur] = root;
            cur = next;
        }
        root
    }
    let eps_f = Float::with_val(prec, eps);
    for i in 0..n {
        for j in (i + 1)..n {
            if points[i].chordal(&points[j], prec) <= eps_f {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri] = rj;
                }
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        groups.entry(r).or_default().push(i);
    }
    groups.into_values().collect()
}

fn cabs(z: &Complex, prec: u32) -> Float {
    let re = Float::with_val(prec, z.real());
    let im = Float::with_val(prec, z.imag());
    (re.square() + im.square()).sqrt()
}

fn poly_eval_c(coeffs: &[Complex], z: &Complex, prec: u32) -> Complex {
    let mut acc = Complex::with_val(prec, coeffs.last().unwrap());
    for c in coeffs.iter().rev().skip(1) {
        acc *= z;
        acc += c;
    }
    acc
}

fn poly_derivative_c(coeffs: &[Complex], prec: u32) -> Vec<Complex> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| Complex::with_val(prec, c * Float::with_val(prec, k as u32)))
        .collect()
}

fn is_zero_c(z: &Complex) -> bool {
    z.real().is_zero() && z.imag().is_zero()
}

/// Simultaneous Aberth–Ehrlich iteration on the deflated polynomial.
fn aberth(coeffs: &[Complex], prec: u32, digits: u32) -> Vec<Complex> {
    let n = coeffs.len() - 1;
    if n == 0 {
        return vec![];
    }
    if n == 1 {
        let z = -(&coeffs[0] / &coeffs[1]).complete((prec, prec));
        return vec![z];
    }
    let deriv = poly_derivative_c(coeffs, prec);
    // Initial guesses on a circle just outside the Cauchy root bound.
    let lead = cabs(&coeffs[n], prec);
    let mut bound = Float::new(prec);
    for c in &coeffs[..n] {
        let q = cabs(c, prec) / lead.clone();
        if q > bound {
            bound = q;
        }
    }
    let radius = Float::with_val(prec, 1.0) + bound;
    let pi2 = Float::with_val(prec, rug::float::Constant::Pi) * 2u32;
    let mut z: Vec<Complex> = (0..n)
        .map(|k| {
            let angle = pi2.clone() * Float::with_val(prec, k as f64 + 0.37) / (n as f64)
                + Float::with_val(prec, 0.5);
            let (s, c) = angle.sin_cos(Float::new(prec));
            Complex::with_val(prec, (radius.clone() * c, radius.clone() * s))
        })
        .collect();
    let eps = Float::with_val(prec, 10).pow(-(digits as i32) + 6);
    let max_iter = 80 + 60 * n as u32;
    for _ in 0..max_iter {
        let mut worst = Float::new(prec);
        for i in 0..n {
            let pz = poly_eval_c(coeffs, &z[i], prec);
            if is_zero_c(&pz) {
                continue;
            }
            let dpz = poly_eval_c(&deriv, &z[i], prec);
            let ratio = if is_zero_c(&dpz) {
                // Stationary point: nudge instead of dividing by zero.
                Complex::with_val(prec, (1e-3, 1e-3))
            } else {
                (&pz / &dpz).complete((prec, prec))
            };
            let mut sum = Complex::new(prec);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    let diff = (&z[i] - zj).complete((prec, prec));
                    if !is_zero_c(&diff) {
                        sum += diff.recip();
                    }
                }
            }
            let denom = Complex::with_val(prec, 1u32) - (&ratio * &sum).complete((prec, prec));
            let w = if is_zero_c(&denom) { ratio } else { ratio / denom };
            let rel = cabs(&w, prec) / (cabs(&z[i], prec) + 1u32);
            if rel > worst {
                worst = rel;
            }
            z[i] -= w;
        }
        if worst < eps {
            break;
        }
    }
    z
}

/// Newton refinement adapted to an m-fold root: z ← z − m·p(z)/p′(z).
fn newton_multiplicity(coeffs: &[Complex], seed: Complex, m: u32, prec: u32) -> Complex {
    let mut z = Complex::with_val(prec, &seed);
    let deriv = poly_derivative_c(coeffs, prec);
    for _ in 0..8 {
        let pz = poly_eval_c(coeffs, &z, prec);
        if is_zero_c(&pz) {
            break;
        }
        let dpz = poly_eval_c(&deriv, &z, prec);
        if is_zero_c(&dpz) {
            break;
        }
        let step = (&pz / &dpz).complete((prec, prec)) * m;
        z -= step;
    }
    z
}

/// The multi-ratio λ = (η₁−η₂)(η₃−η₄) / ((η₂−η₃)(η₄−η₁)), with a point at
/// infinity handled by cancelling the two factors that contain it.
pub fn multiratio(eta: &[RootLoc; 4], ctx: &Ctx) -> Result<Scalar> {
    let inf_count = eta.iter().filter(|e| e.is_infinite()).count();
    if inf_count > 1 {
        return Err(Error::DegenerateMultiRatio);
    }
    let diff = |i: usize, j: usize| -> Scalar {
        match (&eta[i], &eta[j]) {
            (RootLoc::Finite(a), RootLoc::Finite(b)) => a - b,
            _ => unreachable!("cancelled factors are never evaluated"),
        }
    };
    // The two factors containing an infinite point cancel to −1.
    let (num, den, sign) = if eta[0].is_infinite() {
        (diff(2, 3), diff(1, 2), -1)
    } else if eta[1].is_infinite() {
        (diff(2, 3), diff(3, 0), -1)
    } else if eta[2].is_infinite() {
        (diff(0, 1), diff(3, 0), -1)
    } else if eta[3].is_infinite() {
        (diff(0, 1), diff(1, 2), -1)
    } else {
        (
            &diff(0, 1) * &diff(2, 3),
            &diff(1, 2) * &diff(3, 0),
            1,
        )
    };
    if den.is_zero() {
        return Err(Error::DegenerateMultiRatio);
    }
    let _ = ctx;
    Ok((num / den).scale_ratio(sign, 1))
}

/// The six-point multi-ratio (η₁−η₂)(η₅−η₃)(η₄−η₆) / ((η₂−η₅)(η₃−η₄)(η₆−η₁)).
pub fn m6_value(eta: &[RootLoc; 6], ctx: &Ctx) -> Result<Scalar> {
    let prec = ctx.prec.bits();
    let floor = Float::with_val(prec, 1e-12);
    for i in 0..6 {
        for j in (i + 1)..6 {
            if eta[i].chordal(&eta[j], prec) <= floor {
                return Err(Error::RepeatedRoots);
            }
        }
    }
    let num_pairs = [(0usize, 1usize), (4, 2), (3, 5)];
    let den_pairs = [(1usize, 4usize), (2, 3), (5, 0)];
    let mut num = ctx.one();
    let mut den = ctx.one();
    let mut sign = 1i64;
    for &(i, j) in &num_pairs {
        match (&eta[i], &eta[j]) {
            (RootLoc::Finite(a), RootLoc::Finite(b)) => num = &num * &(a - b),
            // An infinite point cancels against its denominator factor,
            // contributing −1 (the two factors carry it with opposite sign).
            _ => sign = -sign,
        }
    }
    for &(i, j) in &den_pairs {
        if let (RootLoc::Finite(a), RootLoc::Finite(b)) = (&eta[i], &eta[j]) {
            den = &den * &(a - b);
        }
    }
    if den.is_zero() {
        return Err(Error::DegenerateMultiRatio);
    }
    Ok((num / den).scale_ratio(sign, 1))
}

/// True iff the six-point multi-ratio equals −1 under the tolerance policy,
/// for the given ordering of the roots.
pub fn m6_test(eta: &[RootLoc; 6], ctx: &Ctx) -> Result<bool> {
    let v = m6_value(eta, ctx)?;
    let shifted = &v + &ctx.one();
    let one = Float::with_val(ctx.prec.bits(), 1);
    Ok(ctx.tol.zero_test(&shifted, 0, &one))
}
