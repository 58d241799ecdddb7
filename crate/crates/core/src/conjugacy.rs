//! Inner automorphisms `exp(ad x)` over GF(p), the group `I(L : I)` they
//! generate for a nilpotent ideal `I`, and conjugacy of subalgebras under it.
//!
//! Maps act on row vectors, so `S φ` is the image of `S` and compositions read
//! left to right. The derivation is `ad x : y ↦ [x, y]`.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::chief::ChiefSeries;
use crate::error::{Error, Result};
use crate::exactalg::{LinearMap, Subspace};
use crate::interval::SubalgebraLattice;
use crate::liecore::LieAlgebra;
use crate::prefrattini::prefrattini_set;

/// Default cap on the number of group elements (or orbit points) explored.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerAutomorphism {
    pub map: LinearMap,
    /// The `x` with `map = exp(ad x)`, or `None` for a composite.
    pub generator: Option<Vec<u8>>,
}

impl InnerAutomorphism {
    pub fn apply(&self, v: &[u8]) -> Vec<u8> {
        self.map.apply(v)
    }

    pub fn image(&self, s: &Subspace) -> Subspace {
        self.map.image(s)
    }
}

/// `φ([b_i, b_j]) = [φ(b_i), φ(b_j)]` on all basis pairs, and `φ` invertible.
pub fn is_automorphism(algebra: &LieAlgebra, map: &LinearMap) -> bool {
    if !map.is_invertible() || map.source_dim() != algebra.dim() {
        return false;
    }
    let n = algebra.dim();
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let lhs = map.apply(algebra.structure(i, j));
            let rhs = algebra.bracket(&map.rows()[i], &map.rows()[j]);
            lhs == rhs
        })
    })
}

/// `exp(ad x) = Σ_{r<p} (ad x)^r / r!`, requiring `(ad x)^p = 0` and checking
/// the result is an automorphism.
pub fn exp_ad(algebra: &LieAlgebra, x: &[u8]) -> Result<InnerAutomorphism> {
    if x.len() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: x.len(),
        });
    }
    let field = algebra.field();
    let p = field.p() as usize;
    let ad = algebra.ad(x);
    let mut power = LinearMap::identity(field, algebra.dim());
    let mut sum = LinearMap::zero(field, algebra.dim(), algebra.dim());
    for r in 0..p {
        let coeff = field.inv_factorial(r).expect("r < p");
        sum = sum.add(&power.scale(coeff));
        power = power.then(&ad);
    }
    if !power.is_zero() {
        return Err(Error::NotExponentiable);
    }
    if !is_automorphism(algebra, &sum) {
        return Err(Error::NotAutomorphism);
    }
    Ok(InnerAutomorphism {
        map: sum,
        generator: Some(x.to_vec()),
    })
}

/// `exp(ad x)` for every `x` in `ideal`, deduplicated by matrix, after
/// checking that `ideal` is a nilpotent ideal of class below `p`.
pub fn inner_generators(algebra: &LieAlgebra, ideal: &Subspace) -> Result<Vec<InnerAutomorphism>> {
    algebra.ensure_ideal(ideal)?;
    let p = algebra.field().p();
    let class = algebra
        .nilpotency_class(ideal)
        .map_err(|_| Error::Hypothesis { class: None, p })?;
    if class >= p as usize {
        return Err(Error::Hypothesis {
            class: Some(class),
            p,
        });
    }
    let mut seen = BTreeSet::new();
    let mut gens = Vec::new();
    for x in ideal.elements() {
        let g = exp_ad(algebra, &x)?;
        if seen.insert(g.map.clone()) {
            gens.push(g);
        }
    }
    Ok(gens)
}

/// `I(L : I)`: closure under composition of the `exp(ad x)`, `x ∈ I`, in BFS
/// order starting from the identity.
pub fn inner_group(algebra: &LieAlgebra, ideal: &Subspace, cap: usize) -> Result<Vec<InnerAutomorphism>> {
    let gens = inner_generators(algebra, ideal)?;
    let identity = LinearMap::identity(algebra.field(), algebra.dim());
    let mut seen = BTreeSet::new();
    seen.insert(identity.clone());
    let mut group = alloc::vec![InnerAutomorphism {
        map: identity,
        generator: Some(alloc::vec![0; algebra.dim()]),
    }];
    let mut head = 0;
    while head < group.len() {
        let current = group[head].map.clone();
        head += 1;
        for g in &gens {
            let next = current.then(&g.map);
            if seen.insert(next.clone()) {
                if group.len() >= cap {
                    return Err(Error::Resource {
                        what: "inner automorphism group",
                        limit: cap,
                    });
                }
                let generator = if current == LinearMap::identity(algebra.field(), algebra.dim()) {
                    g.generator.clone()
                } else {
                    None
                };
                group.push(InnerAutomorphism {
                    map: next,
                    generator,
                });
            }
        }
    }
    Ok(group)
}

/// First element of `group` (in its order) mapping `s1` onto `s2`.
pub fn are_conjugate<'g>(
    s1: &Subspace,
    s2: &Subspace,
    group: &'g [InnerAutomorphism],
) -> Option<&'g InnerAutomorphism> {
    if s1.dim() != s2.dim() {
        return None;
    }
    group.iter().find(|g| &g.image(s1) == s2)
}

/// Orbit of `s` under the group generated by `gens`, each point paired with
/// a map carrying `s` onto it (BFS order).
pub fn orbit(
    s: &Subspace,
    gens: &[InnerAutomorphism],
    cap: usize,
) -> Result<Vec<(Subspace, LinearMap)>> {
    let field = s.field();
    let mut seen: BTreeMap<Subspace, usize> = BTreeMap::new();
    let mut points = alloc::vec![(s.clone(), LinearMap::identity(field, s.ambient()))];
    seen.insert(s.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(idx) = queue.pop_front() {
        let (point, path) = points[idx].clone();
        for g in gens {
            let image = g.image(&point);
            if seen.contains_key(&image) {
                continue;
            }
            if points.len() >= cap {
                return Err(Error::Resource {
                    what: "orbit enumeration",
                    limit: cap,
                });
            }
            seen.insert(image.clone(), points.len());
            queue.push_back(points.len());
            points.push((image, path.then(&g.map)));
        }
    }
    Ok(points)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConjugacyOutcome {
    /// Every member is the image of the first under the paired map.
    Conjugate { witnesses: Vec<(Subspace, LinearMap)> },
    NotConjugate { first: Subspace, other: Subspace },
    /// `L^∞` is not nilpotent of class below `p`; `class` is `None` when it is
    /// not nilpotent at all.
    HypothesisViolated { class: Option<usize>, p: u8 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyReport {
    pub prefrattini: Vec<Subspace>,
    /// Order of `I(L : L^∞)` when the full group was built.
    pub group_order: Option<usize>,
    pub outcome: ConjugacyOutcome,
}

/// Check that `Π(U, L)` is a single orbit under `I(L : L^∞)`.
///
/// Builds the group when it fits under `cap`, otherwise falls back to the
/// orbit of the first member under the generators.
pub fn verify_conjugacy_theorem(
    lattice: &SubalgebraLattice,
    u: &Subspace,
    series: &ChiefSeries,
    cap: usize,
) -> Result<ConjugacyReport> {
    let algebra = lattice.algebra();
    let residual = algebra.nilpotent_residual();
    let p = algebra.field().p();
    let prefrattini = prefrattini_set(lattice, u, series)?.members;
    match algebra.nilpotency_class(&residual) {
        Ok(c) if c < p as usize => {}
        Ok(c) => {
            return Ok(ConjugacyReport {
                prefrattini,
                group_order: None,
                outcome: ConjugacyOutcome::HypothesisViolated { class: Some(c), p },
            })
        }
        Err(_) => {
            return Ok(ConjugacyReport {
                prefrattini,
                group_order: None,
                outcome: ConjugacyOutcome::HypothesisViolated { class: None, p },
            })
        }
    }
    let first = prefrattini[0].clone();
    let (group_order, witnesses) = match inner_group(algebra, &residual, cap) {
        Ok(group) => {
            let mut witnesses = Vec::new();
            for t in &prefrattini {
                match are_conjugate(&first, t, &group) {
                    Some(g) => witnesses.push((t.clone(), g.map.clone())),
                    None => {
                        return Ok(ConjugacyReport {
                            prefrattini: prefrattini.clone(),
                            group_order: Some(group.len()),
                            outcome: ConjugacyOutcome::NotConjugate {
                                first,
                                other: t.clone(),
                            },
                        })
                    }
                }
            }
            (Some(group.len()), witnesses)
        }
        Err(Error::Resource { .. }) => {
            let gens = inner_generators(algebra, &residual)?;
            let orb: BTreeMap<Subspace, LinearMap> =
                orbit(&first, &gens, cap)?.into_iter().collect();
            let mut witnesses = Vec::new();
            for t in &prefrattini {
                match orb.get(t) {
                    Some(m) => witnesses.push((t.clone(), m.clone())),
                    None => {
                        return Ok(ConjugacyReport {
                            prefrattini: prefrattini.clone(),
                            group_order: None,
                            outcome: ConjugacyOutcome::NotConjugate {
                                first,
                                other: t.clone(),
                            },
                        })
                    }
                }
            }
            (None, witnesses)
        }
        Err(e) => return Err(e),
    };
    Ok(ConjugacyReport {
        prefrattini,
        group_order,
        outcome: ConjugacyOutcome::Conjugate { witnesses },
    })
}
