//! Arbitrary-precision complex scalars and the scale-aware tolerance policy.
//!
//! Every quantity in the pipeline is a [`Scalar`]: a complex number backed by
//! MPFR reals at a fixed working precision. Arithmetic is closed and
//! deterministic at that precision. Vanishing decisions are never made by
//! comparing against a bare epsilon; they go through [`Tolerance::zero_test`],
//! which compares against a scale derived from the magnitude of the input
//! data raised to the degree of the polynomial being tested.

use rug::float::prec_min;
use rug::ops::{CompleteRound, Pow};
use rug::{Complex, Float};

/// Working precision, stored both as decimal digits (the user-facing knob)
/// and as the MPFR bit count actually used.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Precision {
    digits: u32,
    bits: u32,
}

impl Precision {
    /// Precision from a decimal digit count. A few guard bits are added on
    /// top of the digit-to-bit conversion.
    pub fn from_digits(digits: u32) -> Self {
        let digits = digits.max(8);
        // log2(10) = 3.3219...; 32 guard bits absorb rounding in long chains.
        let bits = ((digits as f64) * 3.321_928_094_887_362).ceil() as u32 + 32;
        Precision {
            digits,
            bits: bits.max(prec_min() as u32),
        }
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision::from_digits(64)
    }
}

/// Relative-tolerance policy for vanishing decisions.
///
/// `zero_test(x, d, s)` holds iff |x| ≤ `tol_rel` · s^d, with the convention
/// 0^0 = 1, and with s = 0, d > 0 demanding that x be exactly zero. The scale
/// s is the max-norm of the input tuple the tested polynomial was built from,
/// so scaling the input by c rescales both sides by |c|^d and verdicts are
/// unchanged.
#[derive(Clone, Copy, Debug)]
pub struct Tolerance {
    pub tol_rel: f64,
}

impl Tolerance {
    pub fn new(tol_rel: f64) -> Self {
        Tolerance { tol_rel }
    }

    /// Scale-aware zero test: |x| ≤ tol_rel · y_norm^degree.
    pub fn zero_test(&self, x: &Scalar, degree: u32, y_norm: &Float) -> bool {
        if y_norm.is_zero() {
            if degree > 0 {
                return x.is_zero();
            }
            // 0^0 = 1: fall through with scale 1.
            let threshold = Float::with_val(x.prec(), self.tol_rel);
            return x.abs() <= threshold;
        }
        let scale = y_norm.pow(degree).complete(y_norm.prec());
        let threshold = scale * Float::with_val(y_norm.prec(), self.tol_rel);
        x.abs() <= threshold
    }

    /// Zero test against an explicit scale (no degree exponentiation).
    pub fn zero_test_scaled(&self, x: &Scalar, scale: &Float) -> bool {
        if scale.is_zero() {
            return x.is_zero();
        }
        let threshold = (scale * self.tol_rel).complete(scale.prec());
        x.abs() <= threshold
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { tol_rel: 1e-30 }
    }
}

/// Shared numeric context: precision plus tolerance policy.
#[derive(Clone, Copy, Debug)]
pub struct Ctx {
    pub prec: Precision,
    pub tol: Tolerance,
}

impl Ctx {
    pub fn new(digits: u32, tol_rel: f64) -> Self {
        Ctx {
            prec: Precision::from_digits(digits),
            tol: Tolerance::new(tol_rel),
        }
    }

    fn bits(&self) -> u32 {
        self.prec.bits()
    }

    pub fn zero(&self) -> Scalar {
        Scalar(Complex::new(self.bits()))
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// The imaginary unit.
    pub fn i(&self) -> Scalar {
        Scalar(Complex::with_val(self.bits(), (0, 1)))
    }

    pub fn int(&self, n: i64) -> Scalar {
        Scalar(Complex::with_val(self.bits(), (n, 0)))
    }

    /// The exact rational n/d rounded at working precision.
    pub fn ratio(&self, n: i64, d: i64) -> Scalar {
        let num = Float::with_val(self.bits(), n);
        Scalar(Complex::with_val(self.bits(), (num / d, 0)))
    }

    /// √n for a nonnegative integer n, as a real scalar.
    pub fn sqrt_int(&self, n: u64) -> Scalar {
        let f = Float::with_val(self.bits(), n).sqrt();
        Scalar(Complex::with_val(self.bits(), (f, 0)))
    }

    pub fn from_f64(&self, re: f64, im: f64) -> Scalar {
        Scalar(Complex::with_val(self.bits(), (re, im)))
    }

    /// Parse a real decimal string into a real scalar.
    pub fn parse_real(&self, s: &str) -> Option<Scalar> {
        let valid = Float::parse(s).ok()?;
        let f = Float::with_val(self.bits(), valid);
        Some(Scalar(Complex::with_val(self.bits(), (f, 0))))
    }

    /// Complex scalar from two decimal strings.
    pub fn parse_complex(&self, re: &str, im: &str) -> Option<Scalar> {
        let re = Float::with_val(self.bits(), Float::parse(re).ok()?);
        let im = Float::with_val(self.bits(), Float::parse(im).ok()?);
        Some(Scalar(Complex::with_val(self.bits(), (re, im))))
    }

    /// Zero as a bare Float at working precision.
    pub fn float_zero(&self) -> Float {
        Float::new(self.bits())
    }
}

impl Default for Ctx {
    fn default() -> Self {
        Ctx::new(64, 1e-30)
    }
}

/// A complex number at fixed working precision.
///
/// Arithmetic between scalars of different precision produces a result at the
/// larger of the two precisions; in practice every scalar in a computation
/// carries the context precision.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar(Complex);

impl Scalar {
    pub fn from_complex(c: Complex) -> Self {
        Scalar(c)
    }

    /// Copy of this scalar rounded to a different bit precision.
    pub fn with_prec(&self, bits: u32) -> Scalar {
        Scalar(Complex::with_val(bits, &self.0))
    }

    pub fn as_complex(&self) -> &Complex {
        &self.0
    }

    pub fn prec(&self) -> u32 {
        self.0.prec().0
    }

    pub fn re(&self) -> &Float {
        self.0.real()
    }

    pub fn im(&self) -> &Float {
        self.0.imag()
    }

    pub fn is_zero(&self) -> bool {
        self.0.real().is_zero() && self.0.imag().is_zero()
    }

    pub fn conj(&self) -> Scalar {
        Scalar(self.0.conj_ref().complete(self.0.prec()))
    }

    /// |self| as a Float.
    pub fn abs(&self) -> Float {
        self.0.abs_ref().complete((self.prec(), self.prec())).into_real_imag().0
    }

    pub fn neg(&self) -> Scalar {
        Scalar((-&self.0).complete(self.0.prec()))
    }

    /// Multiplication by the imaginary unit (exact).
    pub fn mul_i(&self) -> Scalar {
        Scalar(self.0.mul_i_ref(false).complete(self.0.prec()))
    }

    pub fn recip(&self) -> Scalar {
        Scalar(self.0.recip_ref().complete(self.0.prec()))
    }

    /// Integer power (exponent may be negative).
    pub fn pow_i64(&self, e: i64) -> Scalar {
        Scalar((&self.0).pow(e as i32).complete(self.0.prec()))
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Scalar {
        Scalar(self.0.sqrt_ref().complete(self.0.prec()))
    }

    pub fn cos(&self) -> Scalar {
        Scalar(self.0.cos_ref().complete(self.0.prec()))
    }

    pub fn sin(&self) -> Scalar {
        Scalar(self.0.sin_ref().complete(self.0.prec()))
    }

    /// Principal-branch power with rational exponent n/d.
    pub fn pow_ratio(&self, n: i64, d: i64) -> Scalar {
        let prec = self.prec();
        let e = Float::with_val(prec, n) / Float::with_val(prec, d);
        Scalar((&self.0).pow(&e).complete(self.0.prec()))
    }

    /// self · n/d for integer n, d (d ≠ 0).
    pub fn scale_ratio(&self, n: i64, d: i64) -> Scalar {
        let mut out = (&self.0 * n).complete(self.0.prec());
        out /= d;
        Scalar(out)
    }

    /// Max-norm over a slice of scalars, at the precision of the first entry.
    pub fn max_abs(values: &[Scalar]) -> Float {
        let prec = values.first().map(|s| s.prec()).unwrap_or(64);
        let mut m = Float::new(prec);
        for v in values {
            let a = v.abs();
            if a > m {
                m = a;
            }
        }
        m
    }

    /// Decimal rendering of (re, im) with `digits` significant digits,
    /// suitable for embedding in JSON output.
    pub fn to_decimal_parts(&self, digits: usize) -> (String, String) {
        (
            float_to_decimal(self.0.real(), digits),
            float_to_decimal(self.0.imag(), digits),
        )
    }
}

/// Render a Float as a plain decimal string (JSON-number compatible).
pub fn float_to_decimal(f: &Float, digits: usize) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let (sign, mantissa, exp) = f.to_sign_string_exp(10, Some(digits));
    // rug returns mantissa digits and a decimal exponent with an implied
    // leading decimal point: 0.mantissa × 10^exp.
    let mut digits_str = mantissa.trim_end_matches('0').to_string();
    if digits_str.is_empty() {
        return "0".to_string();
    }
    let point_exp = exp.unwrap_or(1) - 1; // value = d.igits × 10^point_exp
    let head = digits_str.remove(0);
    let body = if digits_str.is_empty() {
        format!("{head}")
    } else {
        format!("{head}.{digits_str}")
    };
    let s = if point_exp == 0 {
        body
    } else {
        format!("{body}e{point_exp}")
    };
    if sign {
        format!("-{s}")
    } else {
        s
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl std::ops::$trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let prec = self.0.prec().0.max(rhs.0.prec().0);
                Scalar((&self.0 $op &rhs.0).complete((prec, prec)))
            }
        }
        impl std::ops::$trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl std::ops::$trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl std::ops::$trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

scalar_binop!(Add, add, +);
scalar_binop!(Sub, sub, -);
scalar_binop!(Mul, mul, *);
scalar_binop!(Div, div, /);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl std::ops::Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl std::fmt::Display for Scalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (re, im) = self.to_decimal_parts(20);
        write!(f, "({re}, {im})")
    }
}

/// Coefficient ring abstraction for the covariant machinery.
///
/// The Hilbert-basis construction and the classifying-ideal generators only
/// ever add, subtract, multiply, and rescale by integer ratios, so they are
/// written once over this trait and instantiated with [`Scalar`] (values),
/// with first-order jets (directional derivatives along the translation
/// flow), and with [`Mag`] (magnitude bounds used as tolerance scales).
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn scale(&self, num: i64, den: i64) -> Self;
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        Scalar(Complex::new(self.0.prec()))
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn scale(&self, num: i64, den: i64) -> Self {
        self.scale_ratio(num, den)
    }
}

/// First-order jet over any coefficient ring: value plus one directional
/// derivative, with the product rule baked into multiplication. Running the
/// covariant machinery over `Jet<Scalar>` yields exact directional
/// derivatives of every generator along a flow direction; `Jet<Mag>` yields
/// the matching magnitude bounds for tolerance scales.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T> {
    pub v: T,
    pub d: T,
}

impl<T: Ring> Jet<T> {
    pub fn new(v: T, d: T) -> Self {
        Jet { v, d }
    }

    /// Constant jet (zero derivative).
    pub fn constant(v: T) -> Self {
        let d = v.zero_like();
        Jet { v, d }
    }
}

impl<T: Ring> Ring for Jet<T> {
    fn zero_like(&self) -> Self {
        Jet {
            v: self.v.zero_like(),
            d: self.d.zero_like(),
        }
    }
    fn plus(&self, rhs: &Self) -> Self {
        Jet {
            v: self.v.plus(&rhs.v),
            d: self.d.plus(&rhs.d),
        }
    }
    fn minus(&self, rhs: &Self) -> Self {
        Jet {
            v: self.v.minus(&rhs.v),
            d: self.d.minus(&rhs.d),
        }
    }
    fn times(&self, rhs: &Self) -> Self {
        Jet {
            v: self.v.times(&rhs.v),
            d: self.v.times(&rhs.d).plus(&self.d.times(&rhs.v)),
        }
    }
    fn scale(&self, num: i64, den: i64) -> Self {
        Jet {
            v: self.v.scale(num, den),
            d: self.d.scale(num, den),
        }
    }
}

/// Magnitude-bound semiring: tracks an upper bound for the absolute value of
/// the corresponding [`Scalar`] computation, with subtraction mapped to
/// addition of bounds. Evaluating a generator over `Mag` with every input set
/// to the input max-norm yields the tolerance scale for that generator.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mag(pub f64);

impl Ring for Mag {
    fn zero_like(&self) -> Self {
        Mag(0.0)
    }
    fn plus(&self, rhs: &Self) -> Self {
        Mag(self.0 + rhs.0)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Mag(self.0 + rhs.0)
    }
    fn times(&self, rhs: &Self) -> Self {
        Mag(self.0 * rhs.0)
    }
    fn scale(&self, num: i64, den: i64) -> Self {
        Mag(self.0 * (num.unsigned_abs() as f64) / (den.unsigned_abs() as f64))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> Ctx {
        Ctx::default()
    }

    #[test]
    fn zero_test_exact_zero() {
        let c = ctx();
        let one = Float::with_val(c.prec.bits(), 1);
        assert!(c.tol.zero_test(&c.zero(), 2, &one));
    }

    #[test]
    fn zero_test_below_threshold() {
        let c = ctx();
        let x = c.from_f64(1e-40, 0.0);
        let one = Float::with_val(c.prec.bits(), 1);
        assert!(c.tol.zero_test(&x, 2, &one));
    }

    #[test]
    fn zero_test_above_threshold() {
        let c = ctx();
        let x = c.one();
        let five = Float::with_val(c.prec.bits(), 5);
        assert!(!c.tol.zero_test(&x, 0, &five));
    }

    #[test]
    fn zero_test_zero_scale_positive_degree() {
        let c = ctx();
        let zero_scale = c.float_zero();
        assert!(c.tol.zero_test(&c.zero(), 3, &zero_scale));
        assert!(!c.tol.zero_test(&c.from_f64(1e-200, 0.0), 3, &zero_scale));
    }

    #[test]
    fn addition_roundtrip_accuracy() {
        // (a+b)-b recovers a to within 10^-(digits-4) relative error.
        let c = ctx();
        let mut rng = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            rng = rng.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((rng >> 11) as f64 / (1u64 << 53) as f64) * 4.0 - 2.0
        };
        for _ in 0..50 {
            let a = c.from_f64(next(), next());
            let b = c.from_f64(next(), next());
            let back = &(&a + &b) - &b;
            let err = (&back - &a).abs();
            let scale = a.abs().max(&Float::with_val(c.prec.bits(), 1e-30));
            let rel = err / scale;
            assert!(rel < 1e-60, "relative error too large: {rel}");
        }
    }

    #[test]
    fn zero_test_rescaling_invariance() {
        let c = ctx();
        let mut state = 1u64;
        let mut next = || {
            state = state.wrapping_mul(2862933555777941757).wrapping_add(3037000493);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for trial in 0..50u32 {
            let x = c.from_f64(next() * 1e-29, next() * 1e-29);
            let degree = 1 + trial % 4;
            let y = Float::with_val(c.prec.bits(), 0.5 + next());
            let factor = 0.1 + next() * 9.9;
            // x -> c^d x, y -> |c| y
            let mut xc = x.clone();
            for _ in 0..degree {
                xc = &xc * &c.from_f64(factor, 0.0);
            }
            let yc = y.clone() * Float::with_val(c.prec.bits(), factor);
            assert_eq!(
                c.tol.zero_test(&x, degree, &y),
                c.tol.zero_test(&xc, degree, &yc),
            );
        }
    }

    #[test]
    fn decimal_rendering_roundtrips() {
        let c = ctx();
        let x = c.ratio(-355, 113);
        let (re, _) = x.to_decimal_parts(30);
        let back = c.parse_real(&re).unwrap();
        let err = (&back - &x).abs();
        assert!(err < 1e-25);
    }
}
