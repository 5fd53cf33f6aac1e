//! The classifying ideals and the ten-class verdict.
//!
//! Each ideal is a finite list of generators, every generator a polynomial
//! combination of Hilbert-basis covariants; a class is decided purely by
//! which of the nine persistent (differentially closed) ideals vanish at the
//! Y-point. The transient ideals are kept for diagnostics and tests.
//!
//! Vanishing is decided per generator: the max coefficient magnitude is
//! compared against tol_rel times the generator's magnitude bound, computed
//! by running the same generator code over the [`Mag`] semiring with every
//! Y-component replaced by ‖Y‖∞. That scale is proportional to ‖Y‖∞^degree,
//! so verdicts are invariant under rescaling Y.

use crate::covariant::{sensitivity_basis_for, poly_add, poly_mul, poly_scale, CovName, HilbertBasis};
use crate::error::Error;
use crate::repspace::{sextic_from_y, YSeptet};
use crate::scalar::{Ctx, Ring, Scalar};
use crate::sextic::{
    roots_with_multiplicity, RootLoc, RootStructure, Sextic,
};
use crate::Result;
use rand::Rng;
use rug::Float;

/// Names of the classifying ideals (coincident-root loci and the two
/// multi-ratio/Jacobian loci).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdealName {
    I0,
    I6,
    I51,
    I42,
    I33,
    I411,
    I321,
    I222,
    I3111,
    I3111Cr,
    I2211,
    I21111,
    IM6Cr,
    IJac,
    IRank1,
}

impl IdealName {
    pub const ALL: [IdealName; 15] = [
        IdealName::I0,
        IdealName::I6,
        IdealName::I51,
        IdealName::I42,
        IdealName::I33,
        IdealName::I411,
        IdealName::I321,
        IdealName::I222,
        IdealName::I3111,
        IdealName::I3111Cr,
        IdealName::I2211,
        IdealName::I21111,
        IdealName::IM6Cr,
        IdealName::IJac,
        IdealName::IRank1,
    ];

    /// The nine differentially closed ideals that drive classification, in
    /// class-table column order.
    pub const PERSISTENT: [IdealName; 9] = [
        IdealName::I0,
        IdealName::I6,
        IdealName::I51,
        IdealName::I411,
        IdealName::I33,
        IdealName::I3111,
        IdealName::I3111Cr,
        IdealName::IM6Cr,
        IdealName::IJac,
    ];

    pub fn label(self) -> &'static str {
        match self {
            IdealName::I0 => "I[0]",
            IdealName::I6 => "I[6]",
            IdealName::I51 => "I[51]",
            IdealName::I42 => "I[42]",
            IdealName::I33 => "I[33]",
            IdealName::I411 => "I[411]",
            IdealName::I321 => "I[321]",
            IdealName::I222 => "I[222]",
            IdealName::I3111 => "I[3111]",
            IdealName::I3111Cr => "I[3111]+CR",
            IdealName::I2211 => "I[2211]",
            IdealName::I21111 => "I[21111]",
            IdealName::IM6Cr => "I[M6+CR]",
            IdealName::IJac => "I[Jac]",
            IdealName::IRank1 => "I[Rank1]",
        }
    }

    pub fn from_label(s: &str) -> Option<IdealName> {
        IdealName::ALL.iter().copied().find(|n| n.label() == s)
    }

    /// Whether the ideal is persistent (closed under translation).
    pub fn persistent(self) -> bool {
        IdealName::PERSISTENT.contains(&self)
    }
}

/// Metadata of one generator.
#[derive(Clone, Copy, Debug)]
pub struct GenDef {
    pub label: &'static str,
    pub degree: u32,
    pub order: u32,
}

/// Generator metadata for an ideal, matching [`ideal_generators`] order.
pub fn ideal_generator_defs(name: IdealName) -> Vec<GenDef> {
    let d = |label, degree, order| GenDef {
        label,
        degree,
        order,
    };
    match name {
        IdealName::I0 => vec![d("A3", 1, 6)],
        IdealName::I6 => vec![d("B4", 2, 8), d("B2", 2, 4), d("B0", 2, 0)],
        IdealName::I51 => vec![d("B2", 2, 4), d("B0", 2, 0)],
        IdealName::I42 => vec![
            d("B0", 2, 0),
            d("C1", 3, 2),
            d("27B4^2-50B2A3^2", 4, 16),
            d("20C3A3+B4B2", 4, 12),
            d("D0", 4, 0),
        ],
        IdealName::I33 => vec![d("C6", 3, 12), d("C4", 3, 8), d("33B0A3-5C3", 3, 6)],
        IdealName::I411 => vec![d("B0", 2, 0), d("C1", 3, 2), d("D0", 4, 0)],
        IdealName::I321 => vec![
            d("11B0^2-25D0", 4, 0),
            d("3C1B0-5E1", 5, 2),
            d("75(2610D2+827B2B0)A3^2-100(125C3B2+144C1B4)A3+3125C4^2+5184B4^2B0", 6, 16),
            d("300(61B0^2-115D0)A3^2-20(5C1B2+22C3B0)A3-B4(7B2B0-270D2)", 6, 12),
            d("41B0^3-75D0B0-125F0", 6, 0),
        ],
        IdealName::I222 => vec![
            d("50B2A3^2-27B4^2", 4, 16),
            d("160B0A3^2-B4B2-20C3A3", 4, 12),
            d("-3B4B0+25C1A3", 4, 8),
            d("B2B0+90D2", 4, 4),
            d("43B0^2-75D0", 4, 0),
        ],
        IdealName::I3111 => vec![
            d("11B0^2-25D0", 4, 0),
            d("3C1B0-5E1", 5, 2),
            d("8B0^3-125F0", 6, 0),
        ],
        IdealName::I3111Cr => vec![
            d("3600C1A3+288B4B0-125B2^2", 4, 8),
            d("B2B0-10D2", 4, 4),
            d("11B0^2-25D0", 4, 0),
        ],
        IdealName::I2211 => vec![d(
            "50(10F3_2+2D3B0+55F3_1)A3-4(43B0^2-75D0)C6+75E2B4",
            7,
            12,
        )],
        IdealName::I21111 => vec![d(
            "5393B0^5-20125D0B0^3+18750D0^2B0-31875F0B0^2+56250F0D0+28125J0",
            10,
            0,
        )],
        IdealName::IM6Cr => vec![
            d(
                "360(49C1B0-48E1)A3-193B2^2B0-1896C3C1+288D0B4+3276D2B2",
                6,
                8,
            ),
            d("97B0^3-275D0B0+375F0", 6, 0),
        ],
        IdealName::IJac => vec![d(
            "2521B0^5-9625D0B0^3+6250D0^2B0-7500F0B0^2+65625F0D0-84375J0",
            10,
            0,
        )],
        IdealName::IRank1 => vec![
            d("(125F0+49B0^3-125D0B0)H1-20(-25D0+14B0^2)J1+150L1B0", 14, 2),
            d("2521B0^5-9625D0B0^3+6250D0^2B0-7500F0B0^2+65625F0D0-84375J0", 10, 0),
        ],
    }
}

/// Sum of rational multiples of forms of equal formal order.
fn lc<T: Ring>(terms: &[(i64, i64, Vec<T>)]) -> Vec<T> {
    let mut acc = poly_scale(&terms[0].2, terms[0].0, terms[0].1);
    for (num, den, poly) in &terms[1..] {
        acc = poly_add(&acc, &poly_scale(poly, *num, *den));
    }
    acc
}

/// The generator polynomials of an ideal, evaluated from a Hilbert basis.
pub fn ideal_generators<T: Ring>(name: IdealName, b: &HilbertBasis<T>) -> Vec<Vec<T>> {
    use CovName::*;
    let g = |n: CovName| b.get(n).to_vec();
    let mul = poly_mul::<T>;
    match name {
        IdealName::I0 => vec![g(A3)],
        IdealName::I6 => vec![g(B4), g(B2), g(B0)],
        IdealName::I51 => vec![g(B2), g(B0)],
        IdealName::I42 => vec![
            g(B0),
            g(C1),
            lc(&[
                (27, 1, mul(&g(B4), &g(B4))),
                (-50, 1, mul(&g(B2), &mul(&g(A3), &g(A3)))),
            ]),
            lc(&[(20, 1, mul(&g(C3), &g(A3))), (1, 1, mul(&g(B4), &g(B2)))]),
            g(D0),
        ],
        IdealName::I33 => vec![
            g(C6),
            g(C4),
            lc(&[(33, 1, mul(&g(B0), &g(A3))), (-5, 1, g(C3))]),
        ],
        IdealName::I411 => vec![g(B0), g(C1), g(D0)],
        IdealName::I321 => {
            let a3_sq = mul(&g(A3), &g(A3));
            vec![
                lc(&[(11, 1, mul(&g(B0), &g(B0))), (-25, 1, g(D0))]),
                lc(&[(3, 1, mul(&g(C1), &g(B0))), (-5, 1, g(E1))]),
                lc(&[
                    (195750, 1, mul(&g(D2), &a3_sq)),
                    (62025, 1, mul(&mul(&g(B2), &g(B0)), &a3_sq)),
                    (-12500, 1, mul(&mul(&g(C3), &g(B2)), &g(A3))),
                    (-14400, 1, mul(&mul(&g(C1), &g(B4)), &g(A3))),
                    (3125, 1, mul(&g(C4), &g(C4))),
                    (5184, 1, mul(&mul(&g(B4), &g(B4)), &g(B0))),
                ]),
                lc(&[
                    (18300, 1, mul(&mul(&g(B0), &g(B0)), &a3_sq)),
                    (-34500, 1, mul(&g(D0), &a3_sq)),
                    (-100, 1, mul(&mul(&g(C1), &g(B2)), &g(A3))),
                    (-440, 1, mul(&mul(&g(C3), &g(B0)), &g(A3))),
                    (-7, 1, mul(&g(B4), &mul(&g(B2), &g(B0)))),
                    (270, 1, mul(&g(B4), &g(D2))),
                ]),
                lc(&[
                    (41, 1, mul(&mul(&g(B0), &g(B0)), &g(B0))),
                    (-75, 1, mul(&g(D0), &g(B0))),
                    (-125, 1, g(F0)),
                ]),
            ]
        }
        IdealName::I222 => {
            let a3_sq = mul(&g(A3), &g(A3));
            vec![
                lc(&[(50, 1, mul(&g(B2), &a3_sq)), (-27, 1, mul(&g(B4), &g(B4)))]),
                lc(&[
                    (160, 1, mul(&g(B0), &a3_sq)),
                    (-1, 1, mul(&g(B4), &g(B2))),
                    (-20, 1, mul(&g(C3), &g(A3))),
                ]),
                lc(&[
                    (-3, 1, mul(&g(B4), &g(B0))),
                    (25, 1, mul(&g(C1), &g(A3))),
                ]),
                lc(&[(1, 1, mul(&g(B2), &g(B0))), (90, 1, g(D2))]),
                lc(&[(43, 1, mul(&g(B0), &g(B0))), (-75, 1, g(D0))]),
            ]
        }
        IdealName::I3111 => vec![
            lc(&[(11, 1, mul(&g(B0), &g(B0))), (-25, 1, g(D0))]),
            lc(&[(3, 1, mul(&g(C1), &g(B0))), (-5, 1, g(E1))]),
            lc(&[
                (8, 1, mul(&mul(&g(B0), &g(B0)), &g(B0))),
                (-125, 1, g(F0)),
            ]),
        ],
        IdealName::I3111Cr => vec![
            lc(&[
                (3600, 1, mul(&g(C1), &g(A3))),
                (288, 1, mul(&g(B4), &g(B0))),
                (-125, 1, mul(&g(B2), &g(B2))),
            ]),
            lc(&[(1, 1, mul(&g(B2), &g(B0))), (-10, 1, g(D2))]),
            lc(&[(11, 1, mul(&g(B0), &g(B0))), (-25, 1, g(D0))]),
        ],
        IdealName::I2211 => vec![lc(&[
            (500, 1, mul(&g(F3b), &g(A3))),
            (100, 1, mul(&mul(&g(D3), &g(B0)), &g(A3))),
            (2750, 1, mul(&g(F3a), &g(A3))),
            (-172, 1, mul(&mul(&g(B0), &g(B0)), &g(C6))),
            (300, 1, mul(&g(D0), &g(C6))),
            (75, 1, mul(&g(E2), &g(B4))),
        ])],
        IdealName::I21111 => {
            let b0_2 = mul(&g(B0), &g(B0));
            let b0_3 = mul(&b0_2, &g(B0));
            let b0_5 = mul(&b0_3, &b0_2);
            vec![lc(&[
                (5393, 1, b0_5),
                (-20125, 1, mul(&g(D0), &b0_3)),
                (18750, 1, mul(&mul(&g(D0), &g(D0)), &g(B0))),
                (-31875, 1, mul(&g(F0), &b0_2)),
                (56250, 1, mul(&g(F0), &g(D0))),
                (28125, 1, g(J0)),
            ])]
        }
        IdealName::IM6Cr => vec![
            lc(&[
                (17640, 1, mul(&mul(&g(C1), &g(B0)), &g(A3))),
                (-17280, 1, mul(&g(E1), &g(A3))),
                (-193, 1, mul(&mul(&g(B2), &g(B2)), &g(B0))),
                (-1896, 1, mul(&g(C3), &g(C1))),
                (288, 1, mul(&g(D0), &g(B4))),
                (3276, 1, mul(&g(D2), &g(B2))),
            ]),
            lc(&[
                (97, 1, mul(&mul(&g(B0), &g(B0)), &g(B0))),
                (-275, 1, mul(&g(D0), &g(B0))),
                (375, 1, g(F0)),
            ]),
        ],
        IdealName::IJac => vec![j0_jac(b)],
        IdealName::IRank1 => {
            let b0_2 = mul(&g(B0), &g(B0));
            let b0_3 = mul(&b0_2, &g(B0));
            let coeff_h1 = lc(&[
                (125, 1, g(F0)),
                (49, 1, b0_3),
                (-125, 1, mul(&g(D0), &g(B0))),
            ]);
            let n1 = lc(&[
                (1, 1, mul(&coeff_h1, &g(H1))),
                (500, 1, mul(&g(D0), &g(J1))),
                (-280, 1, mul(&b0_2, &g(J1))),
                (150, 1, mul(&g(L1), &g(B0))),
            ]);
            vec![n1, j0_jac(b)]
        }
    }
}

/// The rank-3 Jacobian locus generator
/// 2521B₀⁵ − 9625D₀B₀³ + 6250D₀²B₀ − 7500F₀B₀² + 65625F₀D₀ − 84375J₀.
fn j0_jac<T: Ring>(b: &HilbertBasis<T>) -> Vec<T> {
    use CovName::*;
    let g = |n: CovName| b.get(n).to_vec();
    let mul = poly_mul::<T>;
    let b0_2 = mul(&g(B0), &g(B0));
    let b0_3 = mul(&b0_2, &g(B0));
    let b0_5 = mul(&b0_3, &b0_2);
    lc(&[
        (2521, 1, b0_5),
        (-9625, 1, mul(&g(D0), &b0_3)),
        (6250, 1, mul(&mul(&g(D0), &g(D0)), &g(B0))),
        (-7500, 1, mul(&g(F0), &b0_2)),
        (65625, 1, mul(&g(F0), &g(D0))),
        (-84375, 1, j0_cov(b)),
    ])
}

fn j0_cov<T: Ring>(b: &HilbertBasis<T>) -> Vec<T> {
    b.get(CovName::J0).to_vec()
}

/// Result of evaluating one ideal at a Y-point.
#[derive(Clone, Debug)]
pub struct IdealEval {
    pub name: IdealName,
    /// Per-generator max coefficient magnitude.
    pub residuals: Vec<Float>,
    /// Per-generator tolerance scale (magnitude bound at ‖Y‖∞).
    pub scales: Vec<Float>,
    pub vanishes: bool,
}

impl IdealEval {
    /// Max over generators of residual/scale (∞ treated as 0-scale zero).
    pub fn worst_ratio(&self) -> f64 {
        self.residuals
            .iter()
            .zip(&self.scales)
            .map(|(r, s)| {
                if s.is_zero() {
                    if r.is_zero() {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    (r.to_f64()) / (s.to_f64())
                }
            })
            .fold(0.0, f64::max)
    }
}

/// Evaluate the named ideal at Y using a precomputed basis, or compute one.
pub fn ideal_eval(name: IdealName, y: &YSeptet, ctx: &Ctx) -> IdealEval {
    let p = sextic_from_y(y, ctx);
    let basis = HilbertBasis::compute(p.coeffs());
    ideal_eval_with_basis(name, y, &basis, ctx)
}

/// As [`ideal_eval`], reusing a Hilbert basis computed once per Y.
pub fn ideal_eval_with_basis(
    name: IdealName,
    y: &YSeptet,
    basis: &HilbertBasis<Scalar>,
    ctx: &Ctx,
) -> IdealEval {
    let p = sextic_from_y(y, ctx);
    let y_norm = Scalar::max_abs(y.as_slice());
    let sens = sensitivity_basis_for(&p, y_norm.to_f64());
    let gens = ideal_generators(name, basis);
    let gens_mag = ideal_generators(name, &sens);
    let mut residuals = Vec::with_capacity(gens.len());
    let mut scales = Vec::with_capacity(gens.len());
    let mut vanishes = true;
    for (gen, gen_mag) in gens.iter().zip(&gens_mag) {
        let r = Scalar::max_abs(gen);
        let s = gen_mag.iter().map(|m| m.d.0).fold(0.0, f64::max);
        let s = Float::with_val(ctx.prec.bits(), s);
        if s.is_zero() {
            if !r.is_zero() {
                vanishes = false;
            }
        } else {
            let threshold = s.clone() * Float::with_val(ctx.prec.bits(), ctx.tol.tol_rel);
            if r > threshold {
                vanishes = false;
            }
        }
        residuals.push(r);
        scales.push(s);
    }
    IdealEval {
        name,
        residuals,
        scales,
        vanishes,
    }
}

/// The ten conformal classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    S,
    I,
    II,
    IV,
    V,
    VI,
    VII,
    O,
    OO,
    A,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 10] = [
        ClassLabel::S,
        ClassLabel::I,
        ClassLabel::II,
        ClassLabel::IV,
        ClassLabel::V,
        ClassLabel::VI,
        ClassLabel::VII,
        ClassLabel::O,
        ClassLabel::OO,
        ClassLabel::A,
    ];

    pub fn label(self) -> &'static str {
        match self {
            ClassLabel::S => "S",
            ClassLabel::I => "I",
            ClassLabel::II => "II",
            ClassLabel::IV => "IV",
            ClassLabel::V => "V",
            ClassLabel::VI => "VI",
            ClassLabel::VII => "VII",
            ClassLabel::O => "O",
            ClassLabel::OO => "OO",
            ClassLabel::A => "A",
        }
    }

    pub fn from_label(s: &str) -> Option<ClassLabel> {
        ClassLabel::ALL.iter().copied().find(|c| c.label() == s)
    }

    /// The vanishing pattern over the nine persistent ideals, in
    /// [`IdealName::PERSISTENT`] order.
    pub fn vanishing_pattern(self) -> [bool; 9] {
        let set: &[IdealName] = match self {
            ClassLabel::S => &[],
            ClassLabel::I => &[IdealName::IJac],
            ClassLabel::II => &[IdealName::I3111, IdealName::IJac],
            ClassLabel::IV => &[IdealName::IM6Cr, IdealName::IJac],
            ClassLabel::V => &[
                IdealName::I411,
                IdealName::I3111,
                IdealName::IM6Cr,
                IdealName::IJac,
            ],
            ClassLabel::VI => &[
                IdealName::I3111,
                IdealName::I3111Cr,
                IdealName::IM6Cr,
                IdealName::IJac,
            ],
            ClassLabel::VII => &[
                IdealName::I51,
                IdealName::I411,
                IdealName::I3111,
                IdealName::I3111Cr,
                IdealName::IM6Cr,
                IdealName::IJac,
            ],
            ClassLabel::O => &IdealName::PERSISTENT,
            ClassLabel::OO => &[
                IdealName::I33,
                IdealName::I3111,
                IdealName::I3111Cr,
                IdealName::IM6Cr,
                IdealName::IJac,
            ],
            ClassLabel::A => &[
                IdealName::I6,
                IdealName::I51,
                IdealName::I411,
                IdealName::I33,
                IdealName::I3111,
                IdealName::I3111Cr,
                IdealName::IM6Cr,
                IdealName::IJac,
            ],
        };
        std::array::from_fn(|k| set.contains(&IdealName::PERSISTENT[k]))
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// Point diagnostics carried with a verdict.
#[derive(Clone, Debug)]
pub struct Diagnostics {
    pub root_structure: RootStructure,
    /// Multi-ratios of the roots in sorted order: for a [3111] structure the
    /// single λ (simple roots first, triple root last); for six distinct
    /// roots the triple (λ₄, λ₅, λ₆).
    pub multiratios: Vec<Scalar>,
    /// True iff the symmetric six-point multi-ratio invariant O₀ vanishes.
    pub m6: bool,
}

/// A full classification verdict.
#[derive(Clone, Debug)]
pub struct ClassVerdict {
    pub label: ClassLabel,
    /// Vanishing over the nine persistent ideals, table order.
    pub vanishing: [bool; 9],
    /// Worst residual ratio per persistent ideal (residual / scale).
    pub residual_ratios: [f64; 9],
    pub diagnostics: Diagnostics,
}

/// Classify a Y-point by evaluating the nine persistent ideals and matching
/// the vanishing pattern against the class table. An unmatched pattern is an
/// error carrying the residual ratios.
pub fn classify(y: &YSeptet, ctx: &Ctx) -> Result<ClassVerdict> {
    let p = sextic_from_y(y, ctx);
    let basis = HilbertBasis::compute(p.coeffs());
    let evals: Vec<IdealEval> = IdealName::PERSISTENT
        .iter()
        .map(|&n| ideal_eval_with_basis(n, y, &basis, ctx))
        .collect();
    let pattern: [bool; 9] = std::array::from_fn(|k| evals[k].vanishes);
    let ratios: [f64; 9] = std::array::from_fn(|k| evals[k].worst_ratio());
    let label = ClassLabel::ALL
        .iter()
        .copied()
        .find(|c| c.vanishing_pattern() == pattern)
        .ok_or_else(|| Error::InconsistentPattern {
            residuals: ratios.to_vec(),
        })?;
    let diagnostics = diagnostics_for(y, &basis, ctx);
    Ok(ClassVerdict {
        label,
        vanishing: pattern,
        residual_ratios: ratios,
        diagnostics,
    })
}

fn diagnostics_for(y: &YSeptet, basis: &HilbertBasis<Scalar>, ctx: &Ctx) -> Diagnostics {
    let p = sextic_from_y(y, ctx);
    let rs = roots_with_multiplicity(&p, ctx);
    let y_norm = Scalar::max_abs(y.as_slice());
    let sens = sensitivity_basis_for(&p, y_norm.to_f64());
    let o0 = basis.get(CovName::O0);
    let o0_scale = sens.get(CovName::O0)[0].d.0;
    let m6 = if o0_scale == 0.0 {
        o0[0].is_zero()
    } else {
        let threshold = Float::with_val(ctx.prec.bits(), o0_scale) * ctx.tol.tol_rel;
        o0[0].abs() <= threshold
    };
    let multiratios = multiratio_diagnostics(&rs, ctx);
    Diagnostics {
        root_structure: rs,
        multiratios,
        m6,
    }
}

/// Multi-ratio diagnostics from a root structure (best effort; empty when a
/// multi-ratio is not defined for the structure).
fn multiratio_diagnostics(rs: &RootStructure, ctx: &Ctx) -> Vec<Scalar> {
    use crate::sextic::multiratio;
    if rs.partition == [3, 1, 1, 1] {
        let triple = rs.roots.iter().find(|r| r.1 == 3).map(|r| r.0.clone());
        let simple: Vec<RootLoc> = rs
            .roots
            .iter()
            .filter(|r| r.1 == 1)
            .map(|r| r.0.clone())
            .collect();
        if let (Some(t), true) = (triple, simple.len() == 3) {
            if let Ok(lam) = multiratio(&[simple[0].clone(), simple[1].clone(), simple[2].clone(), t], ctx)
            {
                return vec![lam];
            }
        }
        return vec![];
    }
    if rs.partition == [1, 1, 1, 1, 1, 1] {
        let eta: Vec<RootLoc> = rs.roots.iter().map(|r| r.0.clone()).collect();
        let mut out = Vec::new();
        for last in [3usize, 4, 5] {
            if let Ok(lam) = multiratio(
                &[eta[0].clone(), eta[1].clone(), eta[2].clone(), eta[last].clone()],
                ctx,
            ) {
                out.push(lam);
            }
        }
        return out;
    }
    vec![]
}

/// One node of the degeneration order with its annotations.
#[derive(Clone, Copy, Debug)]
pub struct HasseNode {
    pub label: ClassLabel,
    pub factor_structure: &'static str,
    pub bocher_bracket: Option<&'static str>,
    pub hilbert_dim: u32,
}

/// The fixed ten-node degeneration digraph; arrows run from the more
/// degenerate class to the less degenerate one.
#[derive(Clone, Debug)]
pub struct HasseDiagram {
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<(ClassLabel, ClassLabel)>,
}

impl HasseDiagram {
    pub fn node(&self, label: ClassLabel) -> &HasseNode {
        self.nodes.iter().find(|n| n.label == label).unwrap()
    }

    pub fn has_edge(&self, from: ClassLabel, to: ClassLabel) -> bool {
        self.edges.contains(&(from, to))
    }
}

/// The static degeneration partial order with per-class metadata.
pub fn hasse_order() -> HasseDiagram {
    use ClassLabel::*;
    let n = |label, fs, bb: Option<&'static str>, d| HasseNode {
        label,
        factor_structure: fs,
        bocher_bracket: bb,
        hilbert_dim: d,
    };
    HasseDiagram {
        nodes: vec![
            n(O, "[0]", None, 0),
            n(A, "[6]", None, 2),
            n(VII, "[51]", Some("(5)"), 3),
            n(OO, "[33]", None, 3),
            n(V, "[411]", Some("(23)"), 4),
            n(VI, "[3111]+CR", Some("(41)"), 4),
            n(IV, "M6=-1", Some("(311)"), 5),
            n(II, "[3111]", Some("(221)"), 5),
            n(I, "J0Jac=0", Some("(2111)"), 6),
            n(S, "[111111]", Some("(11111)"), 7),
        ],
        edges: vec![
            (O, A),
            (A, VII),
            (A, OO),
            (VII, V),
            (VII, VI),
            (OO, VI),
            (V, IV),
            (V, II),
            (VI, IV),
            (VI, II),
            (IV, I),
            (II, I),
            (I, S),
        ],
    }
}

/// Ideal attached to a root-multiplicity partition, when one exists.
pub fn partition_ideal(partition: &[u32]) -> Option<IdealName> {
    match partition {
        [0] => Some(IdealName::I0),
        [6] => Some(IdealName::I6),
        [5, 1] => Some(IdealName::I51),
        [4, 2] => Some(IdealName::I42),
        [4, 1, 1] => Some(IdealName::I411),
        [3, 3] => Some(IdealName::I33),
        [3, 2, 1] => Some(IdealName::I321),
        [3, 1, 1, 1] => Some(IdealName::I3111),
        [2, 2, 2] => Some(IdealName::I222),
        [2, 2, 1, 1] => Some(IdealName::I2211),
        [2, 1, 1, 1, 1] => Some(IdealName::I21111),
        _ => None,
    }
}

/// The twelve root structures: the eleven partitions of six plus [0].
pub const ALL_PARTITIONS: [&[u32]; 12] = [
    &[0],
    &[6],
    &[5, 1],
    &[4, 2],
    &[4, 1, 1],
    &[3, 3],
    &[3, 2, 1],
    &[3, 1, 1, 1],
    &[2, 2, 2],
    &[2, 2, 1, 1],
    &[2, 1, 1, 1, 1],
    &[1, 1, 1, 1, 1, 1],
];

/// Partitions one refinement step finer than `partition` (those that merge
/// into it by adding two parts). `[0]` refines to `[6]`.
pub fn one_step_refinements(partition: &[u32]) -> Vec<Vec<u32>> {
    if partition == [0] {
        return vec![vec![6]];
    }
    let mut out: Vec<Vec<u32>> = Vec::new();
    for (idx, &p) in partition.iter().enumerate() {
        for a in 1..=(p / 2) {
            let mut parts: Vec<u32> = partition
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != idx)
                .map(|(_, &q)| q)
                .collect();
            parts.push(a);
            parts.push(p - a);
            parts.sort_unstable_by(|x, y| y.cmp(x));
            if !out.contains(&parts) {
                out.push(parts);
            }
        }
    }
    out
}

/// Random sextic with the given root-multiplicity partition: well-separated
/// random root locations in a disk, random leading coefficient bounded away
/// from zero. The partition [0] yields the zero polynomial.
pub fn sample_root_locus<R: Rng>(partition: &[u32], rng: &mut R, ctx: &Ctx) -> Sextic {
    if partition == [0] {
        return Sextic::zero(ctx);
    }
    assert_eq!(partition.iter().sum::<u32>(), 6, "partition must sum to 6");
    let n_locs = partition.len();
    let mut locs: Vec<Scalar> = Vec::with_capacity(n_locs);
    while locs.len() < n_locs {
        let cand = ctx.from_f64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if locs.iter().all(|l| (l - &cand).abs() > 0.7) {
            locs.push(cand);
        }
    }
    let lead = loop {
        let c = ctx.from_f64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
        if c.abs() > 0.5 {
            break c;
        }
    };
    let mut coeffs = vec![lead];
    for (loc, &mult) in locs.iter().zip(partition) {
        for _ in 0..mult {
            let mut next = vec![ctx.zero(); coeffs.len() + 1];
            for (k, ck) in coeffs.iter().enumerate() {
                next[k + 1] = &next[k + 1] + ck;
                next[k] = &next[k] - &(ck * loc);
            }
            coeffs = next;
        }
    }
    while coeffs.len() < 7 {
        coeffs.push(ctx.zero());
    }
    Sextic::new(coeffs)
}
