//! The verification harness: runs each structural check over a set of test
//! subalgebras `U` and reports one row per `(algebra, U, check)`.

use std::cell::OnceCell;
use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use prefrat_core::chief::{
    all_chief_series, chief_series, classify_all, is_u_frattini, jordan_profile, minimal_ideals,
    ChiefSeries, DEFAULT_NODE_BUDGET,
};
use prefrat_core::conjugacy::{verify_conjugacy_theorem, ConjugacyOutcome, DEFAULT_GROUP_CAP};
use prefrat_core::exactalg::Subspace;
use prefrat_core::interval::{SubalgebraLattice, DEFAULT_SUBSPACE_BUDGET};
use prefrat_core::prefrattini::{
    avoids, covers, dimension_formula_check, phi_intersection_check, prefrattini_set,
    verify_prefrat_theorem, PrefrattiniResult,
};
use prefrat_core::{Error, LieAlgebra, QuotientPresentation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Serialize, Serializer};

use crate::report::matrix;

/// Enumeration limits, overridable through the environment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// `PREFRAT_SUBSPACE_BUDGET`: most subspaces a lattice may enumerate.
    pub subspace_budget: usize,
    /// `PREFRAT_NODE_BUDGET`: most search nodes when listing chief series.
    pub node_budget: usize,
    /// `PREFRAT_GROUP_CAP`: most elements of an inner automorphism group.
    pub group_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            subspace_budget: DEFAULT_SUBSPACE_BUDGET,
            node_budget: DEFAULT_NODE_BUDGET,
            group_cap: DEFAULT_GROUP_CAP,
        }
    }
}

impl Limits {
    pub fn from_env() -> Result<Self, String> {
        let mut limits = Limits::default();
        for (var, slot) in [
            ("PREFRAT_SUBSPACE_BUDGET", &mut limits.subspace_budget),
            ("PREFRAT_NODE_BUDGET", &mut limits.node_budget),
            ("PREFRAT_GROUP_CAP", &mut limits.group_cap),
        ] {
            if let Ok(value) = std::env::var(var) {
                *slot = value
                    .trim()
                    .parse()
                    .map_err(|_| format!("{var}: expected a non-negative integer, got {value:?}"))?;
            }
        }
        Ok(limits)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Check {
    Axioms,
    OmegaPhiFixed,
    OmegaIdealSum,
    OmegaRestriction,
    ComplementCriterion,
    OmegaMinQuotient,
    CompletelySolvable,
    JordanHolder,
    TwoMinimalIdeals,
    FrattiniComplemented,
    PiInOmega,
    OmegaMinInPi,
    PrefratTheorem,
    Dimension,
    CoverAvoid,
    SeriesIndependence,
    QuotientStability,
    PhiIntersection,
    Conjugacy,
}

impl Check {
    pub const ALL: [Check; 19] = [
        Check::Axioms,
        Check::OmegaPhiFixed,
        Check::OmegaIdealSum,
        Check::OmegaRestriction,
        Check::ComplementCriterion,
        Check::OmegaMinQuotient,
        Check::CompletelySolvable,
        Check::JordanHolder,
        Check::TwoMinimalIdeals,
        Check::FrattiniComplemented,
        Check::PiInOmega,
        Check::OmegaMinInPi,
        Check::PrefratTheorem,
        Check::Dimension,
        Check::CoverAvoid,
        Check::SeriesIndependence,
        Check::QuotientStability,
        Check::PhiIntersection,
        Check::Conjugacy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Axioms => "axioms",
            Check::OmegaPhiFixed => "omega-phi-fixed",
            Check::OmegaIdealSum => "omega-ideal-sum",
            Check::OmegaRestriction => "omega-restriction",
            Check::ComplementCriterion => "complement-criterion",
            Check::OmegaMinQuotient => "omega-min-quotient",
            Check::CompletelySolvable => "completely-solvable",
            Check::JordanHolder => "jordan-holder",
            Check::TwoMinimalIdeals => "two-minimal-ideals",
            Check::FrattiniComplemented => "frattini-complemented",
            Check::PiInOmega => "pi-in-omega",
            Check::OmegaMinInPi => "omega-min-in-pi",
            Check::PrefratTheorem => "prefrat-theorem",
            Check::Dimension => "dimension",
            Check::CoverAvoid => "cover-avoid",
            Check::SeriesIndependence => "series-independence",
            Check::QuotientStability => "quotient-stability",
            Check::PhiIntersection => "phi-intersection",
            Check::Conjugacy => "conjugacy",
        }
    }

    /// Parses `all` or a comma-separated list of check names.
    pub fn parse_list(text: &str) -> Result<Vec<Check>, String> {
        if text.trim() == "all" {
            return Ok(Check::ALL.to_vec());
        }
        let mut out = Vec::new();
        for part in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let check = part.parse()?;
            if !out.contains(&check) {
                out.push(check);
            }
        }
        if out.is_empty() {
            return Err("no checks selected".into());
        }
        Ok(out)
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
                format!("unknown check {s:?}; known checks: {}", known.join(", "))
            })
    }
}

/// Which subalgebras `U` to test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum USelection {
    Zero,
    AllSubalgebras,
    /// `count` subalgebras drawn without replacement, reproducibly from `seed`.
    Sample { count: usize, seed: u64 },
    /// An explicit list; each must be a subalgebra.
    Given(Vec<Subspace>),
}

impl USelection {
    /// Parses `zero`, `all-subalgebras` or `sample:N`.
    pub fn parse(text: &str, seed: u64) -> Result<Self, String> {
        match text {
            "zero" => Ok(USelection::Zero),
            "all-subalgebras" => Ok(USelection::AllSubalgebras),
            _ => {
                let count = text
                    .strip_prefix("sample:")
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| {
                        format!("unknown U mode {text:?}; expected zero, all-subalgebras or sample:N")
                    })?;
                Ok(USelection::Sample { count, seed })
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    SkippedHypothesis,
    SkippedResource,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedHypothesis => "SKIPPED(hypothesis)",
            Status::SkippedResource => "SKIPPED(resource)",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.label())
    }
}

/// One report row. Only the first five fields are part of the JSON schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    pub algebra: String,
    pub u: Vec<Vec<u8>>,
    pub check: &'static str,
    pub status: Status,
    /// Basis matrices of the subspaces behind a failure (empty otherwise).
    pub witnesses: Vec<Vec<Vec<u8>>>,
    #[serde(skip)]
    pub detail: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped_hypothesis: usize,
    pub skipped_resource: usize,
}

impl Summary {
    pub fn of(rows: &[Row]) -> Self {
        let mut s = Summary::default();
        for r in rows {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::SkippedHypothesis => s.skipped_hypothesis += 1,
                Status::SkippedResource => s.skipped_resource += 1,
            }
        }
        s
    }
}

/// Outcome of one check before it is attached to a row.
#[derive(Clone, Debug)]
struct Verdict {
    status: Status,
    witnesses: Vec<Subspace>,
    detail: String,
}

impl Verdict {
    fn pass() -> Self {
        Verdict {
            status: Status::Pass,
            witnesses: Vec::new(),
            detail: String::new(),
        }
    }

    fn fail(detail: impl Into<String>, witnesses: Vec<Subspace>) -> Self {
        Verdict {
            status: Status::Fail,
            witnesses,
            detail: detail.into(),
        }
    }

    fn hypothesis(detail: impl Into<String>) -> Self {
        Verdict {
            status: Status::SkippedHypothesis,
            witnesses: Vec::new(),
            detail: detail.into(),
        }
    }
}

type CheckResult = Result<Verdict, Error>;

/// `L/A` with its lattice and canonical chief series.
struct QuotientContext {
    presentation: QuotientPresentation,
    lattice: SubalgebraLattice,
    series: ChiefSeries,
}

/// A subalgebra `M` as an algebra in its own right.
struct RestrictedContext {
    /// Pivot columns of `M`'s canonical basis: coordinates of `v ∈ M` are `v[pivots]`.
    pivots: Vec<usize>,
    embedding: prefrat_core::LinearMap,
    lattice: SubalgebraLattice,
}

/// Everything computed once per algebra and shared by the checks.
pub struct AlgebraContext {
    pub name: String,
    lattice: SubalgebraLattice,
    series: ChiefSeries,
    ideals: Vec<Subspace>,
    minimal: Vec<Subspace>,
    limits: Limits,
    all_series: OnceCell<Result<Vec<ChiefSeries>, Error>>,
    quotients: RefCell<BTreeMap<Subspace, Rc<QuotientContext>>>,
    restrictions: RefCell<BTreeMap<Subspace, Rc<RestrictedContext>>>,
    prefrattini: RefCell<BTreeMap<Subspace, Rc<PrefrattiniResult>>>,
}

impl AlgebraContext {
    /// Fails with the axiom violation, non-solvability, or a resource error.
    pub fn new(name: &str, algebra: &LieAlgebra, limits: Limits) -> Result<Self, ContextError> {
        if let Err(v) = algebra.validate() {
            return Err(ContextError::Axioms(format!("{v:?}")));
        }
        if !algebra.is_solvable() {
            return Err(ContextError::Axioms("algebra is not solvable".into()));
        }
        let lattice = SubalgebraLattice::with_budget(algebra, limits.subspace_budget)
            .map_err(ContextError::Core)?;
        let series = chief_series(algebra).map_err(ContextError::Core)?;
        Ok(AlgebraContext {
            name: name.to_string(),
            ideals: lattice.ideals(),
            minimal: minimal_ideals(algebra),
            lattice,
            series,
            limits,
            all_series: OnceCell::new(),
            quotients: RefCell::new(BTreeMap::new()),
            restrictions: RefCell::new(BTreeMap::new()),
            prefrattini: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn lattice(&self) -> &SubalgebraLattice {
        &self.lattice
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.lattice.algebra()
    }

    pub fn series(&self) -> &ChiefSeries {
        &self.series
    }

    fn all_series(&self) -> Result<&[ChiefSeries], Error> {
        self.all_series
            .get_or_init(|| all_chief_series(self.algebra(), self.limits.node_budget))
            .as_deref()
            .map_err(Clone::clone)
    }

    fn quotient(&self, ideal: &Subspace) -> Result<Rc<QuotientContext>, Error> {
        if let Some(q) = self.quotients.borrow().get(ideal) {
            return Ok(q.clone());
        }
        let presentation = self.algebra().quotient(ideal)?;
        let lattice =
            SubalgebraLattice::with_budget(presentation.algebra(), self.limits.subspace_budget)?;
        let series = chief_series(presentation.algebra())?;
        let q = Rc::new(QuotientContext {
            presentation,
            lattice,
            series,
        });
        self.quotients.borrow_mut().insert(ideal.clone(), q.clone());
        Ok(q)
    }

    fn restriction(&self, m: &Subspace) -> Result<Rc<RestrictedContext>, Error> {
        if let Some(r) = self.restrictions.borrow().get(m) {
            return Ok(r.clone());
        }
        let (algebra, embedding) = self.algebra().restrict(m)?;
        let lattice = SubalgebraLattice::with_budget(&algebra, self.limits.subspace_budget)?;
        let r = Rc::new(RestrictedContext {
            pivots: m.pivots(),
            embedding,
            lattice,
        });
        self.restrictions.borrow_mut().insert(m.clone(), r.clone());
        Ok(r)
    }

    fn prefrattini(&self, u: &Subspace) -> Result<Rc<PrefrattiniResult>, Error> {
        if let Some(p) = self.prefrattini.borrow().get(u) {
            return Ok(p.clone());
        }
        let p = Rc::new(prefrattini_set(&self.lattice, u, &self.series)?);
        self.prefrattini.borrow_mut().insert(u.clone(), p.clone());
        Ok(p)
    }

    /// The test subalgebras for `selection`, in lattice order.
    pub fn select_u(&self, selection: &USelection) -> Result<Vec<Subspace>, Error> {
        Ok(match selection {
            USelection::Zero => vec![self.algebra().zero_space()],
            USelection::AllSubalgebras => self.lattice.members().to_vec(),
            USelection::Sample { count, seed } => {
                let members = self.lattice.members();
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                let mut picked =
                    rand::seq::index::sample(&mut rng, members.len(), (*count).min(members.len()))
                        .into_vec();
                picked.sort_unstable();
                picked.into_iter().map(|i| members[i].clone()).collect()
            }
            USelection::Given(us) => {
                for u in us {
                    self.algebra().ensure_subalgebra(u)?;
                }
                us.clone()
            }
        })
    }

    /// Run `checks` for one test subalgebra.
    pub fn run_checks(&self, u: &Subspace, checks: &[Check]) -> Vec<Row> {
        checks
            .iter()
            .map(|&check| {
                let verdict = match self.dispatch(check, u) {
                    Ok(v) => v,
                    Err(e @ Error::Resource { .. }) => Verdict {
                        status: Status::SkippedResource,
                        witnesses: Vec::new(),
                        detail: e.to_string(),
                    },
                    Err(e @ Error::Hypothesis { .. }) => Verdict::hypothesis(e.to_string()),
                    Err(e) => Verdict::fail(e.to_string(), Vec::new()),
                };
                Row {
                    algebra: self.name.clone(),
                    u: matrix(u),
                    check: check.name(),
                    status: verdict.status,
                    witnesses: verdict.witnesses.iter().map(matrix).collect(),
                    detail: verdict.detail,
                }
            })
            .collect()
    }

    fn dispatch(&self, check: Check, u: &Subspace) -> CheckResult {
        match check {
            Check::Axioms => self.check_axioms(),
            Check::OmegaPhiFixed => self.check_omega_phi_fixed(u),
            Check::OmegaIdealSum => self.check_omega_ideal_sum(u),
            Check::OmegaRestriction => self.check_omega_restriction(u),
            Check::ComplementCriterion => self.check_complement_criterion(u),
            Check::OmegaMinQuotient => self.check_omega_min_quotient(u),
            Check::CompletelySolvable => self.check_completely_solvable(u),
            Check::JordanHolder => self.check_jordan_holder(u),
            Check::TwoMinimalIdeals => self.check_two_minimal_ideals(u),
            Check::FrattiniComplemented => self.check_frattini_complemented(u),
            Check::PiInOmega => self.check_pi_in_omega(u),
            Check::OmegaMinInPi => self.check_omega_min_in_pi(u),
            Check::PrefratTheorem => self.check_prefrat_theorem(u),
            Check::Dimension => self.check_dimension(u),
            Check::CoverAvoid => self.check_cover_avoid(u),
            Check::SeriesIndependence => self.check_series_independence(u),
            Check::QuotientStability => self.check_quotient_stability(u),
            Check::PhiIntersection => self.check_phi_intersection(u),
            Check::Conjugacy => self.check_conjugacy(u),
        }
    }

    fn check_axioms(&self) -> CheckResult {
        let algebra = self.algebra();
        if let Err(v) = algebra.validate() {
            return Ok(Verdict::fail(format!("{v:?}"), Vec::new()));
        }
        if !algebra.is_solvable() {
            return Ok(Verdict::fail("not solvable", Vec::new()));
        }
        Ok(Verdict::pass())
    }

    /// Every `S ∈ Ω(U, L)` other than `L` is `φ(S, L)`, and contains `φ(U, L)`.
    fn check_omega_phi_fixed(&self, u: &Subspace) -> CheckResult {
        let phi_u = self.lattice.phi_of(u)?;
        for s in self.lattice.omega(u)? {
            if !s.is_full() {
                let phi_s = self.lattice.phi_of(&s)?;
                if phi_s != s {
                    return Ok(Verdict::fail("S in Omega differs from phi(S, L)", vec![s, phi_s]));
                }
            }
            if !s.contains(&phi_u) {
                return Ok(Verdict::fail("phi(U, L) not inside S in Omega", vec![s, phi_u]));
            }
        }
        Ok(Verdict::pass())
    }

    /// `S ∈ Ω(U, L)` and `I` an ideal give `S + I ∈ Ω(U, L)`.
    fn check_omega_ideal_sum(&self, u: &Subspace) -> CheckResult {
        for s in self.lattice.omega(u)? {
            for i in &self.ideals {
                let t = s.sum(i);
                if !self.lattice.is_upper_complemented(&t)? {
                    return Ok(Verdict::fail("S + I not in Omega", vec![s, i.clone(), t]));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// For a minimal ideal `A` complemented by a maximal `M ⊇ U`:
    /// `Ω(U, M) = {S ∈ Ω(U, L) : S ⊆ M}`.
    fn check_omega_restriction(&self, u: &Subspace) -> CheckResult {
        let omega = self.lattice.omega(u)?;
        for a in &self.minimal {
            for m in self.lattice.maximal_containing(u)? {
                if m.contains(a) {
                    continue;
                }
                let r = self.restriction(&m)?;
                let u_in_m = Subspace::span(
                    u.field(),
                    m.dim(),
                    u.basis()
                        .iter()
                        .map(|v| r.pivots.iter().map(|&c| v[c]).collect::<Vec<u8>>()),
                )?;
                let inner: BTreeSet<Subspace> = r
                    .lattice
                    .omega(&u_in_m)?
                    .iter()
                    .map(|s| r.embedding.image(s))
                    .collect();
                let outer: BTreeSet<Subspace> =
                    omega.iter().filter(|s| m.contains(s)).cloned().collect();
                if let Some(d) = inner.symmetric_difference(&outer).next() {
                    return Ok(Verdict::fail(
                        "Omega(U, M) differs from the members of Omega(U, L) inside M",
                        vec![a.clone(), m.clone(), d.clone()],
                    ));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// For a minimal ideal `A` the three conditions agree: some `S ∈ Ω_min`
    /// misses `A`; some maximal `M ⊇ U` misses `A`; every `S ∈ Ω_min` lies in
    /// a complement of `A`.
    fn check_complement_criterion(&self, u: &Subspace) -> CheckResult {
        let omega_min = self.lattice.omega_min(u)?;
        let maxes = self.lattice.maximal_containing(u)?;
        for a in &self.minimal {
            let complements: Vec<&Subspace> = self
                .lattice
                .members()
                .iter()
                .filter(|c| c.intersect(a).is_zero() && c.sum(a).is_full())
                .collect();
            let some_s_misses = omega_min.iter().any(|s| !s.contains(a));
            let some_m_misses = maxes.iter().any(|m| !m.contains(a));
            let all_in_complement = omega_min
                .iter()
                .all(|s| complements.iter().any(|c| c.contains(s)));
            if some_s_misses != some_m_misses || some_m_misses != all_in_complement {
                return Ok(Verdict::fail(
                    format!(
                        "conditions disagree: S misses A = {some_s_misses}, \
                         M misses A = {some_m_misses}, S in complement = {all_in_complement}"
                    ),
                    vec![a.clone()],
                ));
            }
        }
        Ok(Verdict::pass())
    }

    /// `S ∈ Ω(U, L)_min` and an ideal `A` give `S + A ∈ Ω(U + A, L)_min`,
    /// both in `L` and after projecting to `L/A`.
    fn check_omega_min_quotient(&self, u: &Subspace) -> CheckResult {
        let omega_min = self.lattice.omega_min(u)?;
        for a in &self.ideals {
            let ua = u.sum(a);
            let upstairs = self.lattice.omega_min(&ua)?;
            let q = self.quotient(a)?;
            let u_bar = q.presentation.project(&ua);
            let downstairs = q.lattice.omega_min(&u_bar)?;
            for s in &omega_min {
                let t = s.sum(a);
                if !upstairs.contains(&t) {
                    return Ok(Verdict::fail(
                        "S + A not in Omega(U + A, L)_min",
                        vec![s.clone(), a.clone()],
                    ));
                }
                if !downstairs.contains(&q.presentation.project(&t)) {
                    return Ok(Verdict::fail(
                        "(S + A)/A not in Omega((U + A)/A, L/A)_min",
                        vec![s.clone(), a.clone()],
                    ));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// For completely solvable `L`: `Ω(U, L)_min = Π(U, L) = {φ(U, L)}`.
    fn check_completely_solvable(&self, u: &Subspace) -> CheckResult {
        if !self.algebra().is_completely_solvable() {
            return Ok(Verdict::hypothesis("L^2 is not nilpotent"));
        }
        let phi = self.lattice.phi_of(u)?;
        let omega_min = self.lattice.omega_min(u)?;
        if omega_min != [phi.clone()] {
            let mut w = vec![phi];
            w.extend(omega_min);
            return Ok(Verdict::fail("Omega_min is not {phi(U, L)}", w));
        }
        let pi = self.prefrattini(u)?;
        if pi.members != [phi.clone()] {
            let mut w = vec![phi];
            w.extend(pi.members.iter().cloned());
            return Ok(Verdict::fail("Pi is not {phi(U, L)}", w));
        }
        Ok(Verdict::pass())
    }

    /// The `(dimension, U-Frattini)` multiset is the same for every chief series.
    fn check_jordan_holder(&self, u: &Subspace) -> CheckResult {
        let all = self.all_series()?;
        let reference = jordan_profile(&self.lattice, &self.series, u)?;
        for s in all {
            let profile = jordan_profile(&self.lattice, s, u)?;
            if profile != reference {
                return Ok(Verdict::fail(
                    format!("profile {profile:?} differs from {reference:?}"),
                    s.ideals().to_vec(),
                ));
            }
        }
        Ok(Verdict::pass())
    }

    /// For distinct minimal ideals `A₁, A₂` with `A = A₁ + A₂`, the factors
    /// `{A₁, A/A₁}` and `{A₂, A/A₂}` carry the same `(dim, U-Frattini)` pairs.
    fn check_two_minimal_ideals(&self, u: &Subspace) -> CheckResult {
        if self.minimal.len() < 2 {
            return Ok(Verdict::hypothesis("fewer than two minimal ideals"));
        }
        let zero = self.algebra().zero_space();
        let profile = |a: &Subspace, sum: &Subspace| -> Result<Vec<(usize, bool)>, Error> {
            let mut v = vec![
                (a.dim(), is_u_frattini(&self.lattice, &zero, a, u)?),
                (sum.dim() - a.dim(), is_u_frattini(&self.lattice, a, sum, u)?),
            ];
            v.sort();
            Ok(v)
        };
        for (n, a1) in self.minimal.iter().enumerate() {
            for a2 in &self.minimal[n + 1..] {
                let sum = a1.sum(a2);
                if profile(a1, &sum)? != profile(a2, &sum)? {
                    return Ok(Verdict::fail(
                        "factor pairing fails",
                        vec![a1.clone(), a2.clone()],
                    ));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// A factor is `U`-Frattini exactly when no subalgebra containing
    /// `U + A_{i-1}` complements it; every member of `𝓜_i` is such a complement.
    fn check_frattini_complemented(&self, u: &Subspace) -> CheckResult {
        for c in classify_all(&self.lattice, &self.series, u)? {
            let (lower, upper) = (self.series.term(c.index - 1), self.series.term(c.index));
            let base = u.sum(lower);
            let is_complement = |m: &Subspace| m.sum(upper).is_full() && &m.intersect(upper) == lower;
            for m in &c.complements {
                if !is_complement(m) {
                    return Ok(Verdict::fail(
                        format!("member of M_{} is not a complement of the factor", c.index),
                        vec![m.clone()],
                    ));
                }
            }
            let complemented = self
                .lattice
                .members()
                .iter()
                .any(|m| m.contains(&base) && is_complement(m));
            if c.u_frattini == complemented || c.u_frattini != c.complements.is_empty() {
                return Ok(Verdict::fail(
                    format!(
                        "factor {}: U-Frattini = {}, complemented = {complemented}, |M_i| = {}",
                        c.index,
                        c.u_frattini,
                        c.complements.len()
                    ),
                    vec![lower.clone(), upper.clone()],
                ));
            }
        }
        Ok(Verdict::pass())
    }

    fn check_pi_in_omega(&self, u: &Subspace) -> CheckResult {
        let omega = self.lattice.omega(u)?;
        for b in &self.prefrattini(u)?.members {
            if !omega.contains(b) {
                return Ok(Verdict::fail("Pi member not in Omega", vec![b.clone()]));
            }
        }
        Ok(Verdict::pass())
    }

    fn check_omega_min_in_pi(&self, u: &Subspace) -> CheckResult {
        let pi = self.prefrattini(u)?;
        for s in self.lattice.omega_min(u)? {
            if !pi.members.contains(&s) {
                return Ok(Verdict::fail("Omega_min member not in Pi", vec![s]));
            }
        }
        Ok(Verdict::pass())
    }

    fn check_prefrat_theorem(&self, u: &Subspace) -> CheckResult {
        let report = verify_prefrat_theorem(&self.lattice, u, &self.series)?;
        if report.equal() {
            return Ok(Verdict::pass());
        }
        let mut w = report.only_in_omega_min.clone();
        w.extend(report.only_in_prefrattini.iter().cloned());
        Ok(Verdict::fail(
            format!(
                "{} only in Omega_min, {} only in Pi",
                report.only_in_omega_min.len(),
                report.only_in_prefrattini.len()
            ),
            w,
        ))
    }

    fn check_dimension(&self, u: &Subspace) -> CheckResult {
        let d = dimension_formula_check(&self.lattice, u, &self.series)?;
        if d.holds() {
            return Ok(Verdict::pass());
        }
        let pi = self.prefrattini(u)?;
        let w = pi
            .members
            .iter()
            .filter(|m| m.dim() != d.expected)
            .cloned()
            .collect();
        Ok(Verdict::fail(
            format!("expected dimension {}, found {:?}", d.expected, d.actual),
            w,
        ))
    }

    /// Each `Π` member covers the `U`-Frattini factors and avoids the others.
    fn check_cover_avoid(&self, u: &Subspace) -> CheckResult {
        let classes = classify_all(&self.lattice, &self.series, u)?;
        for b in &self.prefrattini(u)?.members {
            for c in &classes {
                let ok = if c.u_frattini {
                    covers(b, &self.series, c.index)?
                } else {
                    avoids(b, &self.series, c.index)?
                };
                if !ok {
                    let verb = if c.u_frattini { "cover" } else { "avoid" };
                    return Ok(Verdict::fail(
                        format!("member does not {verb} factor {}", c.index),
                        vec![b.clone()],
                    ));
                }
            }
        }
        Ok(Verdict::pass())
    }

    fn check_series_independence(&self, u: &Subspace) -> CheckResult {
        let reference = self.prefrattini(u)?;
        for s in self.all_series()? {
            let other = prefrattini_set(&self.lattice, u, s)?;
            if other.members != reference.members {
                let w = other
                    .members
                    .iter()
                    .filter(|m| !reference.members.contains(m))
                    .chain(reference.members.iter().filter(|m| !other.members.contains(m)))
                    .cloned()
                    .collect();
                return Ok(Verdict::fail("Pi depends on the chief series", w));
            }
        }
        Ok(Verdict::pass())
    }

    /// `(S + A)/A ∈ Π((U + A)/A, L/A)` for every ideal `A` and `S ∈ Π(U, L)`.
    fn check_quotient_stability(&self, u: &Subspace) -> CheckResult {
        let pi = self.prefrattini(u)?;
        for a in &self.ideals {
            let q = self.quotient(a)?;
            let u_bar = q.presentation.project(&u.sum(a));
            let below = prefrattini_set(&q.lattice, &u_bar, &q.series)?;
            for s in &pi.members {
                if !below.members.contains(&q.presentation.project(&s.sum(a))) {
                    return Ok(Verdict::fail(
                        "(S + A)/A not in Pi of the quotient",
                        vec![s.clone(), a.clone()],
                    ));
                }
            }
        }
        Ok(Verdict::pass())
    }

    fn check_phi_intersection(&self, u: &Subspace) -> CheckResult {
        let r = phi_intersection_check(&self.lattice, u, &self.series)?;
        if r.equal() {
            Ok(Verdict::pass())
        } else {
            Ok(Verdict::fail(
                "phi(U, L) differs from the intersection of Pi",
                vec![r.phi, r.intersection],
            ))
        }
    }

    fn check_conjugacy(&self, u: &Subspace) -> CheckResult {
        let report = verify_conjugacy_theorem(&self.lattice, u, &self.series, self.limits.group_cap)?;
        Ok(match report.outcome {
            ConjugacyOutcome::Conjugate { .. } => Verdict::pass(),
            ConjugacyOutcome::NotConjugate { first, other } => {
                Verdict::fail("Pi members in different orbits", vec![first, other])
            }
            ConjugacyOutcome::HypothesisViolated { class, p } => {
                Verdict::hypothesis(Error::Hypothesis { class, p }.to_string())
            }
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContextError {
    /// The axioms or solvability fail; the string describes how.
    Axioms(String),
    Core(Error),
}

impl fmt::Display for ContextError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ContextError::Axioms(why) => write!(f, "axiom check failed: {why}"),
            ContextError::Core(e) => write!(f, "{e}"),
        }
    }
}

/// Run `checks` on `algebra` for every selected `U`.
///
/// An algebra that fails the axioms gets a single failing `axioms` row; one
/// whose lattice exceeds the budget gets a `SKIPPED(resource)` row per check.
pub fn verify_algebra(
    name: &str,
    algebra: &LieAlgebra,
    selection: &USelection,
    checks: &[Check],
    limits: Limits,
) -> Vec<Row> {
    let zero = matrix(&algebra.zero_space());
    let row = |check: Check, status: Status, detail: String| Row {
        algebra: name.to_string(),
        u: zero.clone(),
        check: check.name(),
        status,
        witnesses: Vec::new(),
        detail,
    };
    let ctx = match AlgebraContext::new(name, algebra, limits) {
        Ok(ctx) => ctx,
        Err(ContextError::Axioms(why)) => return vec![row(Check::Axioms, Status::Fail, why)],
        Err(ContextError::Core(e)) => {
            let status = match e {
                Error::Resource { .. } => Status::SkippedResource,
                _ => Status::Fail,
            };
            return checks.iter().map(|&c| row(c, status, e.to_string())).collect();
        }
    };
    let us = match ctx.select_u(selection) {
        Ok(us) => us,
        Err(e) => return checks.iter().map(|&c| row(c, Status::Fail, e.to_string())).collect(),
    };
    us.iter().flat_map(|u| ctx.run_checks(u, checks)).collect()
}
