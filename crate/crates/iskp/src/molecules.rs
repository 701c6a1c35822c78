//! Spectroscopic constants for the supported diatomics and the unit bridge
//! between them and the radial equation.

use crate::error::{IskpError, Result};
use serde::{Deserialize, Serialize};

/// hbar*c in eV*Angstrom.
pub const HBARC_EV_ANGSTROM: f64 = 1973.269;
/// One atomic mass unit in eV/c^2.
pub const AMU_EV: f64 = 931.5e6;

/// Dissociation energy De (eV), equilibrium bond length re (A),
/// reduced mass mu (amu), screening parameter alpha (1/A).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Molecule {
    pub name: &'static str,
    pub de: f64,
    pub re: f64,
    pub mu: f64,
    pub alpha: f64,
}

impl Molecule {
    /// k = 2*mu/hbar^2 in 1/(eV*A^2). Multiplying an energy in eV by k gives
    /// the 1/A^2 coefficient that enters the radial equation.
    pub fn k(&self) -> f64 {
        2.0 * self.mu * AMU_EV / (HBARC_EV_ANGSTROM * HBARC_EV_ANGSTROM)
    }
}

pub const H2: Molecule = Molecule {
    name: "H2",
    de: 4.7446,
    re: 0.7416,
    mu: 0.50391,
    alpha: 1.9426,
};

pub const HCL: Molecule = Molecule {
    name: "HCl",
    de: 4.619030905,
    re: 1.2746,
    mu: 0.9801045,
    alpha: 1.8677,
};

pub const LIH: Molecule = Molecule {
    name: "LiH",
    de: 2.515287,
    re: 1.5956,
    mu: 0.8801221,
    alpha: 1.128,
};

pub const BUILTIN: [Molecule; 3] = [H2, HCL, LIH];

/// Environment variable that overrides the molecule database with a JSON file
/// of `{name: {de, re, mu, alpha}}` entries.
pub const DB_ENV_VAR: &str = "ISKP_MOLECULE_DB";

#[derive(Debug, Clone)]
pub struct MoleculeDb {
    entries: Vec<(String, Molecule)>,
}

#[derive(Deserialize)]
struct DbEntry {
    de: f64,
    re: f64,
    mu: f64,
    alpha: f64,
}

impl MoleculeDb {
    /// Built-in constants, overridden by the `ISKP_MOLECULE_DB` file if set.
    pub fn load() -> Result<Self> {
        match std::env::var(DB_ENV_VAR) {
            Ok(path) if !path.is_empty() => Self::from_path(&path),
            _ => Ok(Self::builtin()),
        }
    }

    pub fn builtin() -> Self {
        MoleculeDb {
            entries: BUILTIN.iter().map(|m| (m.name.to_string(), *m)).collect(),
        }
    }

    pub fn from_path(path: &str) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| IskpError::BadMoleculeDb {
            path: path.to_string(),
            reason: e.to_string(),
        })?;
        let raw: std::collections::BTreeMap<String, DbEntry> =
            serde_json::from_str(&text).map_err(|e| IskpError::BadMoleculeDb {
                path: path.to_string(),
                reason: e.to_string(),
            })?;
        let mut entries = Vec::new();
        for (name, e) in raw {
            if !(e.de > 0.0 && e.re > 0.0 && e.mu > 0.0 && e.alpha > 0.0) {
                return Err(IskpError::BadMoleculeDb {
                    path: path.to_string(),
                    reason: format!("non-positive constant for {name}"),
                });
            }
            let leaked: &'static str = Box::leak(name.clone().into_boxed_str());
            entries.push((
                name,
                Molecule {
                    name: leaked,
                    de: e.de,
                    re: e.re,
                    mu: e.mu,
                    alpha: e.alpha,
                },
            ));
        }
        Ok(MoleculeDb { entries })
    }

    pub fn get(&self, name: &str) -> Result<Molecule> {
        self.entries
            .iter()
            .find(|(n, _)| n.eq_ignore_ascii_case(name))
            .map(|(_, m)| *m)
            .ok_or_else(|| IskpError::UnknownMolecule(name.to_string()))
    }

    pub fn names(&self) -> Vec<&str> {
        self.entries.iter().map(|(n, _)| n.as_str()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_values() {
        assert!((H2.k() - 241.09779887296583).abs() < 1e-10);
        assert!((HCL.k() - 468.9350035035795).abs() < 1e-10);
        assert!((LIH.k() - 421.09801561678137).abs() < 1e-10);
    }

    #[test]
    fn lookup_is_case_insensitive() {
        let db = MoleculeDb::builtin();
        assert_eq!(db.get("h2").unwrap().name, "H2");
        assert_eq!(db.get("HCL").unwrap().name, "HCl");
        assert!(matches!(
            db.get("NaCl"),
            Err(IskpError::UnknownMolecule(_))
        ));
    }
}
