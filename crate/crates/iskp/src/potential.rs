//! The improved screened Kratzer interaction and the forms of it that the
//! closed-form solution actually sees.
//!
//! V(r) = -2*De*(a/r - b/(2 r^2)) * (1 + cbar + exp(-(alpha+delta) r)),
//! with a = re and b = re^2. cbar in {-1, 0, 1} switches family members:
//! cbar = -1 is the purely screened interaction, cbar = 0 the improved
//! screened Kratzer proper, cbar = +1 a deepened variant.
//!
//! The closed form is exact not for V itself but for the equation obtained by
//! replacing 1/r with s*exp(-s r)/(1-exp(-s r)) (s = alpha + delta). That
//! replacement maps V onto a rational function of sigma = exp(-s r), kept in
//! [`GreeneAldrichForm`]; the finite-difference oracle consumes exactly this
//! form so that closed-form correctness is tested in isolation from the
//! approximation error.

use crate::molecules::Molecule;

/// Strength constants of the interaction, all positive for bound wells:
/// p1 = 2 De re (1+cbar), p2 = De re^2 (1+cbar), p3 = 2 De re, p4 = De re^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    pub de: f64,
    pub re: f64,
    pub cbar: i8,
    /// s = alpha + delta, the effective screening in 1/A.
    pub s: f64,
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
}

impl PotentialParams {
    pub fn new(mol: &Molecule, cbar: i8, delta: f64) -> Self {
        let c = f64::from(cbar);
        PotentialParams {
            de: mol.de,
            re: mol.re,
            cbar,
            s: mol.alpha + delta,
            p1: 2.0 * mol.de * mol.re * (1.0 + c),
            p2: mol.de * mol.re * mol.re * (1.0 + c),
            p3: 2.0 * mol.de * mol.re,
            p4: mol.de * mol.re * mol.re,
        }
    }

    /// The raw interaction in eV at r (Angstrom).
    pub fn v_raw(&self, r: f64) -> f64 {
        let c = f64::from(self.cbar);
        let shape = self.re / r - (self.re * self.re) / (2.0 * r * r);
        -2.0 * self.de * shape * (1.0 + c + (-self.s * r).exp())
    }
}

/// The radial equation the closed form solves, written as
/// W(r) = (s^2/k) * (A sigma^2 - B sigma + C) / (1 - sigma)^2, sigma = e^{-s r}.
///
/// A, B, C are dimensionless; gamma = (m+xi)^2 - 1/4 carries the centrifugal
/// term plus the flux shift, and the three field terms z1 = 2 m w, z2 = w^2,
/// z3 = -2 xi w enter through the caller (see `spectrum::SpectrumParams`).
/// W(r) -> (s^2/k) * C as r -> infinity: that limit is the continuum threshold
/// of this effective problem, and equals the spectrum's Q.
#[derive(Debug, Clone, Copy)]
pub struct GreeneAldrichForm {
    pub s: f64,
    /// 2*mu/hbar^2, 1/(eV*A^2).
    pub k: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl GreeneAldrichForm {
    /// Effective potential in eV at r; diverges like a repulsive wall as
    /// r -> 0 whenever A - B + C > 0 (true for all parameter sets here:
    /// A - B + C = gamma + 1/4 + Delta2 + Delta4 >= Delta4 > 0).
    pub fn w(&self, r: f64) -> f64 {
        let sig = (-self.s * r).exp();
        let om = 1.0 - sig;
        (self.s * self.s / self.k) * (self.a * sig * sig - self.b * sig + self.c) / (om * om)
    }

    /// Continuum threshold W(inf) in eV.
    pub fn threshold(&self) -> f64 {
        self.s * self.s / self.k * self.c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::molecules::H2;

    #[test]
    fn minimum_sits_near_re_for_weak_screening() {
        // With cbar = 0 the unscreened part is a Kratzer well with minimum at
        // re; screening shifts it, but for H2 the minimum must stay within
        // a few tenths of an Angstrom of re and be negative.
        let p = PotentialParams::new(&H2, 0, 0.0);
        let mut best = (0.0, f64::INFINITY);
        let mut r = 0.3;
        while r < 3.0 {
            let v = p.v_raw(r);
            if v < best.1 {
                best = (r, v);
            }
            r += 1e-4;
        }
        assert!(best.1 < -4.0, "well depth {}", best.1);
        assert!((best.0 - H2.re).abs() < 0.3, "minimum at {}", best.0);
    }

    #[test]
    fn screened_member_vanishes_at_large_r() {
        let p = PotentialParams::new(&H2, -1, 0.0);
        assert!(p.v_raw(50.0).abs() < 1e-30);
        // cbar = -1 kills the strength constants tied to (1 + cbar)
        assert_eq!(p.p1, 0.0);
        assert_eq!(p.p2, 0.0);
    }
}
