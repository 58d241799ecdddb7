//! Single-algebra reports for the `analyze` command.

use std::fmt::Write as _;
use std::str::FromStr;

use prefrat_core::chief::{chief_series, classify_all};
use prefrat_core::conjugacy::{verify_conjugacy_theorem, ConjugacyOutcome};
use prefrat_core::exactalg::Subspace;
use prefrat_core::interval::SubalgebraLattice;
use prefrat_core::prefrattini::prefrattini_set;
use prefrat_core::{Error, LieAlgebra};
use serde::Serialize;

use crate::report::{matrix, subspace_text, vector_text};
use crate::verify::Limits;

type Matrix = Vec<Vec<u8>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Info,
    Chief,
    Frattini,
    Prefrattini,
    OmegaMin,
    Conjugacy,
}

impl FromStr for What {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "info" => What::Info,
            "chief" => What::Chief,
            "frattini" => What::Frattini,
            "prefrattini" => What::Prefrattini,
            "omega-min" => What::OmegaMin,
            "conjugacy" => What::Conjugacy,
            _ => {
                return Err(format!(
                    "unknown report {s:?}; expected info, chief, frattini, prefrattini, omega-min or conjugacy"
                ))
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InfoReport {
    pub p: u8,
    pub dim: usize,
    pub basis: Vec<String>,
    pub solvable: bool,
    pub completely_solvable: bool,
    pub derived: Matrix,
    pub nilpotent_residual: Matrix,
    /// Nilpotency class of the residual, when it is nilpotent.
    pub residual_class: Option<usize>,
    pub subalgebra_count: usize,
    pub maximal_subalgebras: Vec<Matrix>,
    pub frattini: Matrix,
    pub u: Matrix,
    pub u_interval_complemented: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub index: usize,
    pub dim: usize,
    pub u_frattini: bool,
    pub complements: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChiefReport {
    pub u: Matrix,
    pub series: Vec<Matrix>,
    pub factors: Vec<FactorReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrattiniReport {
    pub u: Matrix,
    pub maximal_containing: Vec<Matrix>,
    pub phi: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PrefrattiniReport {
    pub u: Matrix,
    /// Indices (1-based) of the factors that are not `U`-Frattini.
    pub index_set: Vec<usize>,
    pub members: Vec<Matrix>,
    pub common_dim: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OmegaMinReport {
    pub u: Matrix,
    pub members: Vec<Matrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub member: Matrix,
    /// Matrix (acting on row vectors) carrying the first member onto `member`.
    pub map: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjugacyAnalysis {
    pub u: Matrix,
    /// `conjugate`, `not-conjugate` or `hypothesis-violated`.
    pub outcome: &'static str,
    pub p: u8,
    pub residual_class: Option<usize>,
    pub group_order: Option<usize>,
    pub members: Vec<Matrix>,
    pub witnesses: Vec<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "what", rename_all = "kebab-case")]
pub enum Analysis {
    Info(InfoReport),
    Chief(ChiefReport),
    Frattini(FrattiniReport),
    Prefrattini(PrefrattiniReport),
    OmegaMin(OmegaMinReport),
    Conjugacy(ConjugacyAnalysis),
}

fn matrices(v: &[Subspace]) -> Vec<Matrix> {
    v.iter().map(matrix).collect()
}

/// Compute the `what` report for `u`, which must be a subalgebra.
pub fn analyze(algebra: &LieAlgebra, u: &Subspace, what: What, limits: Limits) -> Result<Analysis, Error> {
    algebra.ensure_subalgebra(u)?;
    let lattice = SubalgebraLattice::with_budget(algebra, limits.subspace_budget)?;
    let series = || chief_series(algebra);
    Ok(match what {
        What::Info => {
            let residual = algebra.nilpotent_residual();
            let full = algebra.full_space();
            Analysis::Info(InfoReport {
                p: algebra.field().p(),
                dim: algebra.dim(),
                basis: algebra.labels().to_vec(),
                solvable: algebra.is_solvable(),
                completely_solvable: algebra.is_completely_solvable(),
                derived: matrix(&algebra.product_space(&full, &full)),
                nilpotent_residual: matrix(&residual),
                residual_class: algebra.nilpotency_class(&residual).ok(),
                subalgebra_count: lattice.len(),
                maximal_subalgebras: lattice.maximal_subalgebras().map(matrix).collect(),
                frattini: matrix(&lattice.phi_of(&algebra.zero_space())?),
                u: matrix(u),
                u_interval_complemented: lattice.is_upper_complemented(u)?,
            })
        }
        What::Chief => {
            let series = series()?;
            let factors = classify_all(&lattice, &series, u)?
                .into_iter()
                .map(|c| FactorReport {
                    index: c.index,
                    dim: c.factor_dim,
                    u_frattini: c.u_frattini,
                    complements: matrices(&c.complements),
                })
                .collect();
            Analysis::Chief(ChiefReport {
                u: matrix(u),
                series: matrices(series.ideals()),
                factors,
            })
        }
        What::Frattini => Analysis::Frattini(FrattiniReport {
            u: matrix(u),
            maximal_containing: matrices(&lattice.maximal_containing(u)?),
            phi: matrix(&lattice.phi_of(u)?),
        }),
        What::Prefrattini => {
            let pi = prefrattini_set(&lattice, u, &series()?)?;
            Analysis::Prefrattini(PrefrattiniReport {
                u: matrix(u),
                index_set: pi.index_set,
                members: matrices(&pi.members),
                common_dim: pi.common_dim,
            })
        }
        What::OmegaMin => Analysis::OmegaMin(OmegaMinReport {
            u: matrix(u),
            members: matrices(&lattice.omega_min(u)?),
        }),
        What::Conjugacy => {
            let report = verify_conjugacy_theorem(&lattice, u, &series()?, limits.group_cap)?;
            let residual = algebra.nilpotent_residual();
            let (outcome, witnesses) = match &report.outcome {
                ConjugacyOutcome::Conjugate { witnesses } => (
                    "conjugate",
                    witnesses
                        .iter()
                        .map(|(s, m)| Witness {
                            member: matrix(s),
                            map: m.rows().to_vec(),
                        })
                        .collect(),
                ),
                ConjugacyOutcome::NotConjugate { .. } => ("not-conjugate", Vec::new()),
                ConjugacyOutcome::HypothesisViolated { .. } => ("hypothesis-violated", Vec::new()),
            };
            Analysis::Conjugacy(ConjugacyAnalysis {
                u: matrix(u),
                outcome,
                p: algebra.field().p(),
                residual_class: algebra.nilpotency_class(&residual).ok(),
                group_order: report.group_order,
                members: matrices(&report.prefrattini),
                witnesses,
            })
        }
    })
}

impl Analysis {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Human-readable rendering using the basis labels.
    pub fn to_text(&self, labels: &[String]) -> String {
        let sp = |m: &Matrix| subspace_text(labels, m);
        let mut out = String::new();
        match self {
            Analysis::Info(r) => {
                let _ = writeln!(out, "GF({}), dimension {}, basis {}", r.p, r.dim, r.basis.join(" "));
                let _ = writeln!(out, "solvable: {}", r.solvable);
                let _ = writeln!(out, "completely solvable: {}", r.completely_solvable);
                let _ = writeln!(out, "derived algebra: {}", sp(&r.derived));
                let class = r.residual_class.map_or("not nilpotent".to_string(), |c| format!("class {c}"));
                let _ = writeln!(out, "nilpotent residual: {} ({class})", sp(&r.nilpotent_residual));
                let _ = writeln!(out, "subalgebras: {}", r.subalgebra_count);
                let _ = writeln!(out, "maximal subalgebras: {}", r.maximal_subalgebras.len());
                for m in &r.maximal_subalgebras {
                    let _ = writeln!(out, "  {}", sp(m));
                }
                let _ = writeln!(out, "Frattini subalgebra: {}", sp(&r.frattini));
                let _ = writeln!(out, "U = {}: upper interval complemented: {}", sp(&r.u), r.u_interval_complemented);
            }
            Analysis::Chief(r) => {
                let _ = writeln!(out, "U = {}", sp(&r.u));
                let _ = writeln!(out, "chief series:");
                for (i, a) in r.series.iter().enumerate() {
                    let _ = writeln!(out, "  A{i} = {}", sp(a));
                }
                let dims: Vec<String> = r.factors.iter().map(|f| f.dim.to_string()).collect();
                let _ = writeln!(out, "factor dimensions: {}", dims.join(","));
                for f in &r.factors {
                    let kind = if f.u_frattini { "U-Frattini" } else { "complemented" };
                    let _ = writeln!(
                        out,
                        "  factor {}: dim {}, {kind}, {} maximal complements",
                        f.index,
                        f.dim,
                        f.complements.len()
                    );
                }
            }
            Analysis::Frattini(r) => {
                let _ = writeln!(out, "U = {}", sp(&r.u));
                let _ = writeln!(out, "maximal subalgebras containing U: {}", r.maximal_containing.len());
                for m in &r.maximal_containing {
                    let _ = writeln!(out, "  {}", sp(m));
                }
                let _ = writeln!(out, "phi(U, L) = {}", sp(&r.phi));
            }
            Analysis::Prefrattini(r) => {
                let _ = writeln!(out, "U = {}", sp(&r.u));
                let _ = writeln!(out, "complemented factors: {:?}", r.index_set);
                let dim = r.common_dim.map_or("mixed".to_string(), |d| d.to_string());
                let _ = writeln!(out, "{} prefrattini subalgebras, dimension {dim}", r.members.len());
                for m in &r.members {
                    let _ = writeln!(out, "  {}", sp(m));
                }
            }
            Analysis::OmegaMin(r) => {
                let _ = writeln!(out, "U = {}", sp(&r.u));
                let _ = writeln!(out, "{} minimal members of Omega(U, L)", r.members.len());
                for m in &r.members {
                    let _ = writeln!(out, "  {}", sp(m));
                }
            }
            Analysis::Conjugacy(r) => {
                let _ = writeln!(out, "U = {}", sp(&r.u));
                let class = r.residual_class.map_or("not nilpotent".to_string(), |c| format!("class {c}"));
                let _ = writeln!(out, "nilpotent residual: {class}, p = {}", r.p);
                if let Some(order) = r.group_order {
                    let _ = writeln!(out, "inner automorphism group order: {order}");
                }
                let _ = writeln!(out, "outcome: {} ({} members)", r.outcome, r.members.len());
                for w in &r.witnesses {
                    let images: Vec<String> = w.map.iter().map(|v| vector_text(labels, v)).collect();
                    let _ = writeln!(out, "  {} via [{}]", sp(&w.member), images.join("; "));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use prefrat_core::corpus::{abelian, example_sec2};
    use prefrat_core::exactalg::PrimeField;

    #[test]
    fn example_prefrattini_and_chief() {
        let l = example_sec2(2).unwrap().algebra;
        let zero = l.zero_space();
        let Analysis::Prefrattini(r) = analyze(&l, &zero, What::Prefrattini, Limits::default()).unwrap() else {
            panic!("wrong report");
        };
        assert_eq!(r.members.len(), 4);
        assert_eq!(r.common_dim, Some(1));
        let Analysis::Chief(c) = analyze(&l, &zero, What::Chief, Limits::default()).unwrap() else {
            panic!("wrong report");
        };
        let flags: Vec<(usize, bool)> = c.factors.iter().map(|f| (f.dim, f.u_frattini)).collect();
        assert_eq!(flags, vec![(2, false), (1, true), (1, false), (1, false)]);
    }

    #[test]
    fn abelian_omega_min_is_zero() {
        let l = abelian(PrimeField::new(2).unwrap(), 2).algebra;
        let Analysis::OmegaMin(r) = analyze(&l, &l.zero_space(), What::OmegaMin, Limits::default()).unwrap() else {
            panic!("wrong report");
        };
        assert_eq!(r.members, vec![Vec::<Vec<u8>>::new()]);
    }

    #[test]
    fn non_subalgebra_u_is_rejected() {
        let l = example_sec2(2).unwrap().algebra;
        let u = Subspace::span(l.field(), 5, [[0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]).unwrap();
        assert!(matches!(
            analyze(&l, &u, What::Info, Limits::default()),
            Err(Error::NotSubalgebra { .. })
        ));
    }
}
