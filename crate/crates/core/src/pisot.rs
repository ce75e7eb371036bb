//! The Pisot test, the one numerically-certified operation in the crate.
//!
//! The conjugates of the designated real root are located by Aberth-Ehrlich
//! simultaneous iteration in double precision; a posteriori Weierstrass
//! residual disks then enclose the true roots. A modulus is classified only
//! when its whole disk clears the unit circle by the requested margin, so an
//! `Indeterminate` verdict is a first-class result rather than a guess.

use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::algebraic::AlgebraicReal;
use crate::error::{Error, Result};
use crate::factor;
use crate::poly::IntPolynomial;

/// Outcome of the Pisot test.
#[derive(Debug, Clone, PartialEq)]
pub enum PisotStatus {
    /// All conjugates are certified inside the open unit disk.
    Pisot,
    /// Some conjugate is certified outside the closed unit disk; its modulus
    /// bounds are the witness.
    NotPisot { witness_modulus: (f64, f64) },
    /// Some conjugate's disk comes within `margin` of the unit circle.
    Indeterminate { near_unit_modulus: (f64, f64) },
}

/// Certificate accompanying the status: one enclosure per conjugate
/// (excluding the designated root), as `(modulus_lower, modulus_upper)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PisotCertificate {
    pub status: PisotStatus,
    pub conjugate_moduli: Vec<(f64, f64)>,
}

/// Default certification margin around the unit circle.
pub fn default_margin() -> BigRational {
    BigRational::new(1.into(), 1_000_000.into())
}

/// Tests whether `root` (a real root of irreducible monic `p`, > 1) is a
/// Pisot number: all other roots of `p` must have modulus < 1.
pub fn is_pisot(p: &IntPolynomial, root: &AlgebraicReal, margin: &BigRational) -> Result<PisotCertificate> {
    if root.defining() != p {
        return Err(Error::Precondition(String::from("root does not belong to the given polynomial")));
    }
    if !p.is_monic() {
        return Err(Error::Precondition(String::from("Pisot test requires a monic polynomial")));
    }
    if !factor::is_irreducible(p)? {
        return Err(Error::Precondition(String::from("Pisot test requires an irreducible polynomial")));
    }
    let one = BigRational::from_integer(1.into());
    if root.lo() <= &one {
        return Err(Error::Precondition(String::from("designated root must exceed 1")));
    }
    let margin_f = margin.to_f64().unwrap_or(0.0);
    if margin_f <= 0.0 {
        return Err(Error::Precondition(String::from("margin must be positive")));
    }

    let disks = root_disks(p)?;
    // Disjointness makes each disk contain exactly one true root.
    for i in 0..disks.len() {
        for j in i + 1..disks.len() {
            let dist = (disks[i].0 - disks[j].0).norm();
            if dist <= disks[i].1 + disks[j].1 {
                return Err(Error::CannotCertify(String::from(
                    "residual disks overlap; roots too close for double-precision isolation",
                )));
            }
        }
    }

    // Identify the disk holding the designated real root.
    let lo_f = root.lo().to_f64().unwrap_or(f64::NAN);
    let hi_f = root.hi().to_f64().unwrap_or(f64::NAN);
    let mut designated = None;
    for (idx, (z, r)) in disks.iter().enumerate() {
        let real_range = (z.re - r, z.re + r);
        if z.im.abs() <= *r && real_range.1 >= lo_f && real_range.0 <= hi_f {
            if designated.is_some() {
                return Err(Error::CannotCertify(String::from(
                    "two residual disks meet the isolating interval",
                )));
            }
            designated = Some(idx);
        }
    }
    let designated = designated.ok_or_else(|| {
        Error::CannotCertify(String::from("no residual disk meets the isolating interval"))
    })?;

    let mut moduli = Vec::new();
    let mut status = PisotStatus::Pisot;
    for (idx, (z, r)) in disks.iter().enumerate() {
        if idx == designated {
            continue;
        }
        let lower = (z.norm() - r).max(0.0);
        let upper = z.norm() + r;
        moduli.push((lower, upper));
        if upper < 1.0 - margin_f {
            continue;
        }
        if lower > 1.0 + margin_f {
            if status == PisotStatus::Pisot {
                status = PisotStatus::NotPisot { witness_modulus: (lower, upper) };
            }
        } else {
            status = PisotStatus::Indeterminate { near_unit_modulus: (lower, upper) };
            break;
        }
    }
    Ok(PisotCertificate { status, conjugate_moduli: moduli })
}

/// Aberth-Ehrlich followed by Weierstrass residual disks
/// `D(z_i, n |p(z_i)| / prod_{j != i} |z_i - z_j|)`; the union of the disks
/// contains every root, and a disk disjoint from the others contains exactly
/// one. Radii carry a x4 slack for double-precision rounding.
pub fn root_disks(p: &IntPolynomial) -> Result<Vec<(Complex64, f64)>> {
    let n = p.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let coeffs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_f64().ok_or_else(|| Error::CannotCertify(String::from("coefficient exceeds f64"))))
        .collect::<Result<_>>()?;
    let zs = aberth(&coeffs);
    let mut disks = Vec::with_capacity(n);
    for (i, &z) in zs.iter().enumerate() {
        let mut denom = Complex64::new(1.0, 0.0);
        for (j, &w) in zs.iter().enumerate() {
            if i != j {
                denom *= z - w;
            }
        }
        if denom.norm() == 0.0 {
            return Err(Error::CannotCertify(String::from("coincident approximations")));
        }
        let w_i = eval_complex(&coeffs, z) / denom;
        let radius = 4.0 * (n as f64) * w_i.norm() + 1e-290;
        disks.push((z, radius));
    }
    Ok(disks)
}

fn eval_complex(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

fn eval_derivative(coeffs: &[f64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for k in (1..coeffs.len()).rev() {
        acc = acc * z + coeffs[k] * (k as f64);
    }
    acc
}

fn aberth(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let radius = 1.0 + coeffs[..n].iter().map(|c| libm::fabs(*c)).fold(0.0, f64::max);
    let mut zs: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = core::f64::consts::TAU * (k as f64) / (n as f64) + 0.7;
            let mag = radius * (0.55 + 0.45 * ((k + 1) as f64) / (n as f64));
            Complex64::new(mag * libm::cos(angle), mag * libm::sin(angle))
        })
        .collect();
    for _ in 0..600 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let z = zs[i];
            let pv = eval_complex(coeffs, z);
            let dv = eval_derivative(coeffs, z);
            if dv.norm() == 0.0 {
                continue;
            }
            let newton = pv / dv;
            let mut sum = Complex64::new(0.0, 0.0);
            for (j, &w) in zs.iter().enumerate() {
                if j != i {
                    sum += (z - w).inv();
                }
            }
            let denom = Complex64::new(1.0, 0.0) - newton * sum;
            let step = if denom.norm() > 1e-12 { newton / denom } else { newton };
            zs[i] = z - step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-15 * radius {
            break;
        }
    }
    zs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraic::width_10_pow_neg;
    use crate::silver::SilverPolynomial;

    fn silver_root(bits: &[u8]) -> (IntPolynomial, AlgebraicReal) {
        let sp = SilverPolynomial::new(bits.to_vec()).unwrap();
        let root = sp.silver_number(&width_10_pow_neg(12));
        (sp.to_polynomial(), root)
    }

    #[test]
    fn golden_is_pisot() {
        let (p, root) = silver_root(&[1, 1]);
        let cert = is_pisot(&p, &root, &default_margin()).unwrap();
        assert_eq!(cert.status, PisotStatus::Pisot);
        // The other root is -1/phi, modulus ~0.618.
        assert_eq!(cert.conjugate_moduli.len(), 1);
        let (lo, hi) = cert.conjugate_moduli[0];
        assert!(lo < 0.619 && hi > 0.617);
    }

    #[test]
    fn tribonacci_is_pisot() {
        let (p, root) = silver_root(&[1, 1, 1]);
        let cert = is_pisot(&p, &root, &default_margin()).unwrap();
        assert_eq!(cert.status, PisotStatus::Pisot);
    }

    #[test]
    fn sqrt_phi_not_pisot() {
        // x^4 - x^2 - 1: conjugate -sqrt(phi) has modulus ~1.272 > 1.
        let (p, root) = silver_root(&[0, 1, 0, 1]);
        let cert = is_pisot(&p, &root, &default_margin()).unwrap();
        assert!(matches!(cert.status, PisotStatus::NotPisot { .. }));
    }

    #[test]
    fn reducible_input_rejected() {
        let sp = SilverPolynomial::new(alloc::vec![0, 1, 1, 1]).unwrap(); // x^4 - x^2 - x - 1
        let root = sp.silver_number(&width_10_pow_neg(10));
        assert!(is_pisot(&sp.to_polynomial(), &root, &default_margin()).is_err());
    }

    #[test]
    fn all_distinguished_up_to_ten_are_pisot() {
        for n in 2..=10 {
            let (p, root) = silver_root(&alloc::vec![1u8; n]);
            let cert = is_pisot(&p, &root, &default_margin()).unwrap();
            assert_eq!(cert.status, PisotStatus::Pisot, "N = {n}");
        }
    }
}
