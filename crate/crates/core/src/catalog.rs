//! The ten representative systems: potentials (display only), their
//! classifying sextics as closed forms of the regular point, and the
//! class-table reproduction harness.

use crate::classify::{classify, ClassLabel, IdealName};
use crate::error::Error;
use crate::repspace::{y_from_sextic, YSeptet};
use crate::scalar::{Ctx, Scalar};
use crate::sextic::Sextic;
use crate::Result;

/// Static description of one representative system.
#[derive(Clone, Copy, Debug)]
pub struct CatalogEntry {
    pub label: ClassLabel,
    /// The representative potential, for display.
    pub potential: &'static str,
    /// Human-readable pole description; empty when the closed form is
    /// globally defined.
    pub poles: &'static str,
    /// Whether the classifying sextic is a printed closed form of the
    /// regular point (class S instead carries a pinned generic sextic).
    pub has_closed_form: bool,
}

/// All ten entries in class-table row order.
pub const CATALOG: [CatalogEntry; 10] = [
    CatalogEntry {
        label: ClassLabel::S,
        potential: "a/(1+x1^2+x2^2+x3^2)^2 + b/x1^2 + c/x2^2 + d/x3^2 + e/(-1+x1^2+x2^2+x3^2)^2",
        poles: "",
        has_closed_form: false,
    },
    CatalogEntry {
        label: ClassLabel::I,
        potential: "a(x1^2+x2^2+x3^2) + b/x1^2 + c/x2^2 + d/x3^2 + e",
        poles: "x1 != 0, x2 != 0, x3 != 0",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::II,
        potential: "a(x1^2+x2^2+x3^2) + b(x1-ix2)/(x1+ix2)^3 + c/(x1+ix2)^2 + d/x3^2 + e",
        poles: "x3 != 0, x1+ix2 != 0",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::IV,
        potential: "a(4x1^2+x2^2+x3^2) + b x1 + c/x2^2 + d/x3^2 + e",
        poles: "x2 != 0, x3 != 0",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::V,
        potential: "a(4x3^2+x1^2+x2^2) + b x3 + c/(x1+ix2)^2 + d(x1-ix2)/(x1+ix2)^3 + e",
        poles: "x1+ix2 != 0",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::VI,
        potential: "a(x3^2-2(x1-ix2)^3+4(x1^2+x2^2)) + b(2x1+2ix2-3(x1-ix2)^2) + c(x1-ix2) + d/x3^2 + e",
        poles: "x3 != 0",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::VII,
        potential: "a(x1+ix2) + b(3(x1+ix2)^2+x3) + c(16(x1+ix2)^3+(x1-ix2)+12x3(x1+ix2)) + d(5(x1+ix2)^4+(x1^2+x2^2+x3^2)+6(x1+ix2)^2 x3) + e",
        poles: "",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::O,
        potential: "a(x1^2+x2^2+x3^2) + b x1 + c x2 + d x3 + e",
        poles: "",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::OO,
        potential: "a(4x1^2+4x2^2+x3^2) + b x1 + c x2 + d/x3^2 + e",
        poles: "x3 != 0",
        has_closed_form: true,
    },
    CatalogEntry {
        label: ClassLabel::A,
        potential: "a((x1-ix2)^3+6(x1^2+x2^2+x3^2)) + b((x1-ix2)^2+2(x1+ix2)) + c(x1-ix2) + d x3 + e",
        poles: "",
        has_closed_form: true,
    },
];

pub fn entry(label: ClassLabel) -> &'static CatalogEntry {
    CATALOG.iter().find(|e| e.label == label).unwrap()
}

/// The pinned generic sextic for the fully regular class (six distinct
/// roots, nonvanishing O₀ and Jacobian generator; checked by the test
/// suite).
pub const SYSTEM_S_FIXTURE: &str = include_str!("../fixtures/system_s.json");

fn system_s_sextic(ctx: &Ctx) -> Sextic {
    // Tiny fixed-format parse of the fixture: seven [re, im] integer pairs.
    let text = SYSTEM_S_FIXTURE;
    let start = text.find("\"coeffs\"").expect("fixture has coeffs");
    let mut nums: Vec<i64> = Vec::with_capacity(14);
    let mut cur = String::new();
    for ch in text[start..].chars() {
        if ch.is_ascii_digit() || ch == '-' {
            cur.push(ch);
        } else if !cur.is_empty() {
            nums.push(cur.parse().expect("integer fixture entry"));
            cur.clear();
        }
    }
    assert!(nums.len() >= 14, "fixture must hold 7 coefficient pairs");
    let coeffs: Vec<Scalar> = (0..7)
        .map(|k| {
            let re = ctx.int(nums[2 * k]);
            let im = ctx.int(nums[2 * k + 1]).mul_i();
            &re + &im
        })
        .collect();
    Sextic::new(coeffs)
}

fn check_pole(denom: &Scalar, scale: &rug::Float, label: &'static str, what: &'static str, ctx: &Ctx) -> Result<()> {
    if ctx.tol.zero_test(denom, 1, scale) {
        return Err(Error::Pole {
            label,
            constraint: what,
        });
    }
    Ok(())
}

/// The classifying sextic of a representative system at a regular point.
pub fn catalog_sextic(label: ClassLabel, point: &[Scalar; 3], ctx: &Ctx) -> Result<Sextic> {
    let scale = Scalar::max_abs(point.as_slice());
    let i = ctx.i();
    let x1 = &point[0];
    let x2 = &point[1];
    let x3 = &point[2];
    let w = x1 + &(&i * x2); // x₁ + ix₂
    let wbar = x1 - &(&i * x2); // x₁ − ix₂
    let mut coeffs: Vec<Scalar> = (0..7).map(|_| ctx.zero()).collect();
    match label {
        ClassLabel::O => {}
        ClassLabel::A => {
            // p = i z⁶
            coeffs[6] = i.clone();
        }
        ClassLabel::VII => {
            // p = 24i ((x₁+ix₂) z − 3/2) z⁵
            coeffs[6] = (&i * &w).scale_ratio(24, 1);
            coeffs[5] = i.scale_ratio(-36, 1);
        }
        ClassLabel::OO => {
            // p = (6i/x₃) z³
            check_pole(x3, &scale, "OO", "x3", ctx)?;
            coeffs[3] = &i.scale_ratio(6, 1) / x3;
        }
        ClassLabel::V => {
            // p = (9i/w) z² + 3i (x₁−ix₂)/w² z
            check_pole(&w, &scale, "V", "x1+ix2", ctx)?;
            coeffs[2] = &i.scale_ratio(9, 1) / &w;
            coeffs[1] = &(&i.scale_ratio(3, 1) * &wbar) / &(&w * &w);
        }
        ClassLabel::VI => {
            // p = 3i (z³ + 2/x₃) z³
            check_pole(x3, &scale, "VI", "x3", ctx)?;
            coeffs[6] = i.scale_ratio(3, 1);
            coeffs[3] = &i.scale_ratio(6, 1) / x3;
        }
        ClassLabel::II => {
            // p = (6i/x₃) z³ + (9i/w) z² + 3i(x₁−ix₂)/w²
            check_pole(x3, &scale, "II", "x3", ctx)?;
            check_pole(&w, &scale, "II", "x1+ix2", ctx)?;
            coeffs[3] = &i.scale_ratio(6, 1) / x3;
            coeffs[2] = &i.scale_ratio(9, 1) / &w;
            coeffs[0] = &(&i.scale_ratio(3, 1) * &wbar) / &(&w * &w);
        }
        ClassLabel::IV => {
            // p = (3/(4x₂)) (z²+1)³ + (6i/x₃) z³
            check_pole(x2, &scale, "IV", "x2", ctx)?;
            check_pole(x3, &scale, "IV", "x3", ctx)?;
            let c_even = &ctx.ratio(3, 4) / x2;
            coeffs[0] = c_even.clone();
            coeffs[2] = c_even.scale_ratio(3, 1);
            coeffs[4] = c_even.scale_ratio(3, 1);
            coeffs[6] = c_even;
            coeffs[3] = &i.scale_ratio(6, 1) / x3;
        }
        ClassLabel::I => {
            // p = (6i/x₃) z³ + (3/(4x₂)) (1+z²)³ − (3i/(4x₁)) (1−z²)³
            check_pole(x1, &scale, "I", "x1", ctx)?;
            check_pole(x2, &scale, "I", "x2", ctx)?;
            check_pole(x3, &scale, "I", "x3", ctx)?;
            let c2 = &ctx.ratio(3, 4) / x2;
            let c1 = &(&i.scale_ratio(3, 1) / x1).scale_ratio(1, 4);
            // (1+z²)³ = 1 + 3z² + 3z⁴ + z⁶; (1−z²)³ = 1 − 3z² + 3z⁴ − z⁶
            coeffs[0] = &c2 - c1;
            coeffs[2] = &c2.scale_ratio(3, 1) + &c1.scale_ratio(3, 1);
            coeffs[4] = &c2.scale_ratio(3, 1) - &c1.scale_ratio(3, 1);
            coeffs[6] = &c2 + c1;
            coeffs[3] = &i.scale_ratio(6, 1) / x3;
        }
        ClassLabel::S => {
            return Ok(system_s_sextic(ctx));
        }
    }
    Ok(Sextic::new(coeffs))
}

/// The Y-septet of a representative system at a point.
pub fn catalog_y(label: ClassLabel, point: &[Scalar; 3], ctx: &Ctx) -> Result<YSeptet> {
    Ok(y_from_sextic(&catalog_sextic(label, point, ctx)?, ctx))
}

/// Three fixed sample points admissible for every system.
pub fn sample_points(ctx: &Ctx) -> [[Scalar; 3]; 3] {
    [
        [ctx.int(1), ctx.int(1), ctx.int(1)],
        [ctx.int(2), ctx.int(-1), ctx.int(1)],
        [ctx.ratio(1, 2), ctx.int(3), ctx.int(-2)],
    ]
}

/// One row failure in the class-table reproduction.
#[derive(Clone, Debug)]
pub struct Table3Failure {
    pub label: ClassLabel,
    pub point_index: usize,
    pub ideal: IdealName,
    pub expected_vanish: bool,
    pub residual_ratio: f64,
}

/// Result of reproducing the 10×9 vanishing matrix at the sample points.
#[derive(Clone, Debug)]
pub struct Table3Report {
    /// matrix[row][col]: row in catalog order, col in persistent-ideal
    /// order; true = vanishes (at every sample point).
    pub matrix: [[bool; 9]; 10],
    pub failures: Vec<Table3Failure>,
}

impl Table3Report {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Classify every catalog system at the three sample points and compare the
/// vanishing pattern with the expected class-table row.
pub fn reproduce_table3(ctx: &Ctx) -> Result<Table3Report> {
    let mut matrix = [[false; 9]; 10];
    let mut failures = Vec::new();
    for (row, entry) in CATALOG.iter().enumerate() {
        let expected = entry.label.vanishing_pattern();
        matrix[row] = expected;
        for (pi, point) in sample_points(ctx).iter().enumerate() {
            let y = catalog_y(entry.label, point, ctx)?;
            let verdict = classify(&y, ctx)?;
            for (col, &ideal) in IdealName::PERSISTENT.iter().enumerate() {
                if verdict.vanishing[col] != expected[col] {
                    failures.push(Table3Failure {
                        label: entry.label,
                        point_index: pi,
                        ideal,
                        expected_vanish: expected[col],
                        residual_ratio: verdict.residual_ratios[col],
                    });
                }
            }
            if verdict.label != entry.label {
                failures.push(Table3Failure {
                    label: entry.label,
                    point_index: pi,
                    ideal: IdealName::I0,
                    expected_vanish: false,
                    residual_ratio: f64::NAN,
                });
            }
        }
    }
    Ok(Table3Report { matrix, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{hasse_order, ideal_eval, IdealName};
    use crate::covariant::{sensitivity_basis_for, CovName, HilbertBasis};
    use crate::sextic::roots_with_multiplicity;
    use rug::Float;

    fn ctx() -> Ctx {
        Ctx::default()
    }

    #[test]
    fn printed_form_examples() {
        let c = ctx();
        let any = [c.int(3), c.int(-2), c.int(5)];
        let p_o = catalog_sextic(ClassLabel::O, &any, &c).unwrap();
        assert!(p_o.is_zero());
        // OO at (0,0,2) → 3i z³
        let p_oo = catalog_sextic(ClassLabel::OO, &[c.zero(), c.zero(), c.int(2)], &c).unwrap();
        assert!((p_oo.coeff(3) - &c.i().scale_ratio(3, 1)).abs() < 1e-55);
        for k in [0, 1, 2, 4, 5, 6] {
            assert!(p_oo.coeff(k).is_zero());
        }
        // VII: 24i(wz − 3/2)z⁵
        let pt = [c.int(1), c.int(2), c.int(0)];
        let p_vii = catalog_sextic(ClassLabel::VII, &pt, &c).unwrap();
        let w = &c.int(1) + &(&c.i() * &c.int(2));
        assert!((p_vii.coeff(6) - &(&c.i() * &w).scale_ratio(24, 1)).abs() < 1e-50);
        assert!((p_vii.coeff(5) + &c.i().scale_ratio(36, 1)).abs() < 1e-50);
    }

    #[test]
    fn pole_errors() {
        let c = ctx();
        let origin = [c.zero(), c.zero(), c.zero()];
        assert!(matches!(
            catalog_sextic(ClassLabel::OO, &origin, &c),
            Err(Error::Pole { label: "OO", .. })
        ));
        // II at x1 = i, x2 = 1 has w = 2i ≠ 0 but x3 = 0 is a pole
        let p = [c.i(), c.one(), c.zero()];
        assert!(matches!(
            catalog_sextic(ClassLabel::II, &p, &c),
            Err(Error::Pole { label: "II", .. })
        ));
        // V at w = 0
        let p2 = [c.i(), c.int(-1), c.one()];
        let w_zero = &p2[0] + &(&c.i() * &p2[1]);
        assert!(w_zero.is_zero());
        assert!(matches!(
            catalog_sextic(ClassLabel::V, &p2, &c),
            Err(Error::Pole { label: "V", .. })
        ));
    }

    #[test]
    fn catalog_classifies_to_own_labels() {
        let c = ctx();
        for entry in &CATALOG {
            for point in sample_points(&c) {
                let y = catalog_y(entry.label, &point, &c).unwrap();
                let v = classify(&y, &c).unwrap();
                assert_eq!(v.label, entry.label, "system {} misclassified", entry.label);
            }
        }
    }

    #[test]
    fn table3_reproduction() {
        let c = ctx();
        let report = reproduce_table3(&c).unwrap();
        assert!(report.ok(), "failures: {:?}", report.failures);
        // spot rows: O all vanish; V row per table
        let row_o = report.matrix[7];
        assert!(row_o.iter().all(|&b| b));
        let row_v = report.matrix[4];
        let expected = ClassLabel::V.vanishing_pattern();
        assert_eq!(row_v, expected);
    }

    #[test]
    fn root_structures_match_degeneration_metadata() {
        let c = ctx();
        let h = hasse_order();
        for entry in &CATALOG {
            let point = [c.ratio(7, 5), c.ratio(-9, 7), c.ratio(13, 11)];
            let p = catalog_sextic(entry.label, &point, &c).unwrap();
            let rs = roots_with_multiplicity(&p, &c);
            let fs = h.node(entry.label).factor_structure;
            let expected: Vec<u32> = match fs {
                "[0]" => vec![0],
                "[6]" => vec![6],
                "[51]" => vec![5, 1],
                "[33]" => vec![3, 3],
                "[411]" => vec![4, 1, 1],
                "[3111]+CR" | "[3111]" => vec![3, 1, 1, 1],
                "M6=-1" | "J0Jac=0" | "[111111]" => vec![1, 1, 1, 1, 1, 1],
                other => panic!("unknown factor structure {other}"),
            };
            assert_eq!(
                rs.partition, expected,
                "system {} root structure mismatch",
                entry.label
            );
        }
    }

    #[test]
    fn system_iv_satisfies_m6() {
        let c = ctx();
        let point = [c.int(1), c.int(1), c.int(1)];
        let y = catalog_y(ClassLabel::IV, &point, &c).unwrap();
        let v = classify(&y, &c).unwrap();
        assert_eq!(v.label, ClassLabel::IV);
        assert!(v.diagnostics.m6, "system IV must satisfy the M6 condition");
    }

    #[test]
    fn system_v_on_42_locus_keeps_class() {
        // x₁ = i·x₂ makes x₁ − ix₂ = 0: the [42] configuration.
        let c = ctx();
        let point = [c.i(), c.one(), c.int(3)];
        let y = catalog_y(ClassLabel::V, &point, &c).unwrap();
        let v = classify(&y, &c).unwrap();
        assert_eq!(v.label, ClassLabel::V);
        assert_eq!(v.diagnostics.root_structure.partition, vec![4, 2]);
        assert!(ideal_eval(IdealName::I42, &y, &c).vanishes);
    }

    #[test]
    fn system_vi_multiratio_is_sixth_root() {
        // λ² − λ + 1 = 0 for the [3111] multi-ratio of system VI.
        let c = ctx();
        let point = [c.int(2), c.int(-1), c.ratio(5, 3)];
        let y = catalog_y(ClassLabel::VI, &point, &c).unwrap();
        let v = classify(&y, &c).unwrap();
        assert_eq!(v.label, ClassLabel::VI);
        assert_eq!(v.diagnostics.multiratios.len(), 1);
        let lam = &v.diagnostics.multiratios[0];
        let residual = &(&(lam * lam) - lam) + &c.one();
        assert!(
            residual.abs() < 1e-25,
            "multi-ratio must satisfy λ²−λ+1 = 0, residual {}",
            residual.abs()
        );
    }

    #[test]
    fn system_i_jacobian_vanishes_but_not_m6() {
        let c = ctx();
        let point = [c.int(1), c.int(2), c.int(-1)];
        let y = catalog_y(ClassLabel::I, &point, &c).unwrap();
        assert!(ideal_eval(IdealName::IJac, &y, &c).vanishes);
        assert!(!ideal_eval(IdealName::IM6Cr, &y, &c).vanishes);
        // O₀ is checked at a complex point: at real points the six roots of
        // this system form three antipodal pairs under z ↦ −1/z and O₀ has
        // a genuine zero there, without affecting the class verdict.
        let cpt = [c.from_f64(1.0, 0.5), c.from_f64(2.0, -1.0), c.from_f64(-1.0, 0.25)];
        let p = catalog_sextic(ClassLabel::I, &cpt, &c).unwrap();
        let yc = y_from_sextic(&p, &c);
        assert!(ideal_eval(IdealName::IJac, &yc, &c).vanishes);
        let basis = HilbertBasis::compute(p.coeffs());
        let y_norm = Scalar::max_abs(yc.as_slice());
        let sens = sensitivity_basis_for(&p, y_norm.to_f64());
        let scale = Float::with_val(c.prec.bits(), sens.get(CovName::O0)[0].d.0);
        assert!(!c.tol.zero_test_scaled(&basis.get(CovName::O0)[0], &scale));
    }

    #[test]
    fn system_s_fixture_is_generic() {
        let c = ctx();
        let p = system_s_sextic(&c);
        let y = y_from_sextic(&p, &c);
        let v = classify(&y, &c).unwrap();
        assert_eq!(v.label, ClassLabel::S);
        assert_eq!(
            v.diagnostics.root_structure.partition,
            vec![1, 1, 1, 1, 1, 1]
        );
        assert!(!v.diagnostics.m6);
    }
}
