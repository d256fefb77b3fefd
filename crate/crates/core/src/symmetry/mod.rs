//! Symmetry groups `Σ_p` and `Γ_f` as closed subgroups of the torus.

mod conditions;
mod oracle;
mod sigma;

pub use conditions::{
    apply_mstar, bd_gate_subgroup, fiber_condition_vectors, is_mstar_stable, mstar, mstar_closure,
    satisfies_level_one, term_condition_vectors, ConditionSet, Mat2,
};
pub use oracle::{brute_force_group, is_prime_u64, RootField};
pub use sigma::{base_condition_vectors, sigma_group, sigma_order, sigma_torus_group, SigmaGroup, SigmaOrder};

use num_complex::Complex64;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::algebra::{annihilator, Poly1, RationalTurn, SkewPoly, SymmetryGroup, TurnPair};
use crate::error::Result;
use crate::numerics::{bd_modulus_deviation, sample_julia_base, GreenEvaluator};
use crate::skew::{normalize, CentroidData, NormalizedSkew, SkewProduct, DEFAULT_ITERATE_BUDGET};

/// Which sufficient condition certifies `Γ_f = E_f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Justification {
    /// Normal form and `q` has no nonconstant polynomial factor in `z`.
    #[serde(rename = "Cor-i")]
    CorI,
    /// Normal form and `b_d = z^l`.
    #[serde(rename = "Cor-ii")]
    CorII,
    /// `p = z^δ` and `b_d = z^l`.
    #[serde(rename = "Cor-iii")]
    CorIII,
    /// Guaranteed lower bound and numeric upper bound coincide.
    #[serde(rename = "Type-iii-lower-bound")]
    TypeIiiLowerBound,
}

impl Justification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Justification::CorI => "Cor-i",
            Justification::CorII => "Cor-ii",
            Justification::CorIII => "Cor-iii",
            Justification::TypeIiiLowerBound => "Type-iii-lower-bound",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Exact(Justification),
    CandidateUpperBound,
    BoundsPair { lower: SymmetryGroup, upper: SymmetryGroup },
}

impl Status {
    pub fn is_exact(&self) -> bool {
        matches!(self, Status::Exact(_))
    }

    pub fn label(&self) -> &'static str {
        match self {
            Status::Exact(_) => "Exact",
            Status::CandidateUpperBound => "CandidateUpperBound",
            Status::BoundsPair { .. } => "BoundsPair",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryConfig {
    pub modulus_samples: usize,
    pub modulus_tol: f64,
    pub seed: u64,
    /// Rotations tried when `Σ_p` is the whole circle.
    pub max_candidate_order: i64,
}

impl Default for SymmetryConfig {
    fn default() -> Self {
        SymmetryConfig { modulus_samples: 2000, modulus_tol: 1e-6, seed: 0, max_candidate_order: 64 }
    }
}

/// Outcome of the `|b_d ∘ σ| = |b_d|` filter over `Σ_p`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ModulusFilter {
    pub samples: usize,
    pub tol: f64,
    pub seed: u64,
    pub candidates: usize,
    pub passing: usize,
    /// Order of the cyclic `μ`-factor of the upper bound; `None` for `S¹`.
    pub mu_order: Option<i64>,
}

#[derive(Clone, Debug)]
pub struct SymmetryReport {
    pub normalized: NormalizedSkew,
    pub sigma: SigmaGroup,
    pub conditions: Option<ConditionSet>,
    pub group: SymmetryGroup,
    pub status: Status,
    pub modulus_filter: Option<ModulusFilter>,
    pub advice: Option<String>,
}

/// `||b_d(σ(z))| - |b_d(z)||` maximized over sampled `z ∈ J_p`, with
/// `σ(z) = μ(z - ζ) + ζ`. Passes when below `tol`.
pub fn modulus_filter(f: &SkewProduct, mu: Complex64, sample_count: usize, tol: f64, seed: u64) -> Result<(bool, f64)> {
    let eval = GreenEvaluator::new(f);
    let samples = sample_julia_base(&eval, sample_count, seed)?;
    let zeta = crate::skew::centroids(f).zeta.to_complex64();
    let dev = bd_modulus_deviation(&eval, zeta, mu, &samples);
    Ok((dev <= tol, dev))
}

/// `{μ ∈ Σ_p passing the modulus filter} × S¹`, closed up to a subgroup.
fn modulus_upper_bound(f: &SkewProduct, sigma: SigmaOrder, cfg: &SymmetryConfig) -> Result<(SymmetryGroup, ModulusFilter)> {
    let eval = GreenEvaluator::new(f);
    let samples = sample_julia_base(&eval, cfg.modulus_samples, cfg.seed)?;
    let zeta = crate::skew::centroids(f).zeta.to_complex64();
    let candidates: Vec<RationalTurn> = match sigma {
        SigmaOrder::Finite(m) => (0..m).map(|k| RationalTurn::new(k, m)).collect(),
        SigmaOrder::Infinite => RationalTurn::all_up_to_order(cfg.max_candidate_order),
    };
    let m = eval.map();
    let passing: Vec<&RationalTurn> = candidates
        .iter()
        .filter(|t| {
            let mu = t.to_complex();
            samples.iter().all(|&z| (m.b_d(mu * (z - zeta) + zeta).norm() - m.b_d(z).norm()).abs() <= cfg.modulus_tol)
        })
        .collect();
    let order = passing.iter().fold(1i64, |acc, t| acc.lcm(&t.order()));
    let mu_order = match sigma {
        SigmaOrder::Infinite if passing.len() == candidates.len() => None,
        _ => Some(order),
    };
    let filter = ModulusFilter {
        samples: samples.len(),
        tol: cfg.modulus_tol,
        seed: cfg.seed,
        candidates: candidates.len(),
        passing: passing.len(),
        mu_order,
    };
    Ok((SymmetryGroup::mu_cyclic_times_circle(mu_order), filter))
}

/// The `z`-content of `q` (gcd of all `w`-coefficients) is a constant.
pub fn has_constant_content(f: &SkewProduct) -> bool {
    let mut g = Poly1::zero();
    for m in 0..=f.d() {
        if let Some(b) = f.q().w_coeff_poly(m) {
            g = g.gcd(&b);
        } else {
            return false;
        }
    }
    g.is_constant()
}

pub fn symmetry_group(f: &SkewProduct) -> Result<SymmetryReport> {
    symmetry_group_with(f, &SymmetryConfig::default())
}

pub fn symmetry_group_with(f: &SkewProduct, cfg: &SymmetryConfig) -> Result<SymmetryReport> {
    let normalized = normalize(f);
    let sigma = sigma_group(f.p())?;
    let Some(t) = normalized.translated.clone() else {
        let (upper, filter) = modulus_upper_bound(f, sigma.order, cfg)?;
        return Ok(SymmetryReport {
            normalized,
            sigma,
            conditions: None,
            group: upper,
            status: Status::CandidateUpperBound,
            modulus_filter: Some(filter),
            advice: Some("fiber centroid is not a Laurent polynomial; verify candidates numerically".into()),
        });
    };
    let conditions = ConditionSet::new(&t);
    let e_f = annihilator(&conditions.lattice);
    // For a Laurent centered map the upper bound `Γ ⊆ E_f` still holds, but
    // the lower bound needs `0 ∉ J_p`, which `p̃ = z^δ` guarantees.
    let exact = if t.b_d().is_monomial() && t.p().is_monomial() {
        Some(Justification::CorIII)
    } else if t.b_d().is_monomial() && t.is_polynomial() {
        Some(Justification::CorII)
    } else if t.is_polynomial() && has_constant_content(&t) {
        Some(Justification::CorI)
    } else {
        None
    };
    let (group, status, modulus_filter, advice) = match exact {
        Some(j) => (e_f, Status::Exact(j), None, None),
        None if t.b_d().is_monomial() => (
            e_f,
            Status::CandidateUpperBound,
            None,
            Some("Laurent normal form: verify candidates numerically".into()),
        ),
        None => {
            let (upper, filter) = modulus_upper_bound(&t, sigma.order, cfg)?;
            if !t.is_polynomial() {
                (upper, Status::CandidateUpperBound, Some(filter), Some("verify candidates numerically".into()))
            } else if upper == e_f {
                (e_f, Status::Exact(Justification::TypeIiiLowerBound), Some(filter), None)
            } else {
                let s = Status::BoundsPair { lower: e_f.clone(), upper };
                (e_f, s, Some(filter), Some("group lies between the reported bounds".into()))
            }
        }
    };
    Ok(SymmetryReport { normalized, sigma, conditions: Some(conditions), group, status, modulus_filter, advice })
}

/// A symmetry `(μ, ν)` in exact rational-turn form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub mu: RationalTurn,
    pub nu: RationalTurn,
}

impl SymmetryElement {
    pub fn new(g: TurnPair) -> Self {
        SymmetryElement { mu: g.0, nu: g.1 }
    }

    pub fn pair(&self) -> TurnPair {
        (self.mu, self.nu)
    }

    /// `γ_n = T^n(γ)` with `T(μ, ν) = (μ^δ, μ^l ν^d)`.
    pub fn level(&self, n: u32, delta: u32, d: u32, l: u32) -> SymmetryElement {
        let mut g = *self;
        for _ in 0..n {
            g = SymmetryElement {
                mu: g.mu.pow(delta as i64),
                nu: g.mu.pow(l as i64).compose(&g.nu.pow(d as i64)),
            };
        }
        g
    }

    /// Exact `γ(z, w) = (μ(z - ζ) + ζ, ν(w - ζ_z) + ζ_{σ(z)})` when `μ, ν`
    /// are Gaussian rationals and `ζ_z` is a polynomial.
    pub fn realize(&self, c: &CentroidData) -> Option<(Poly1, SkewPoly)> {
        let mu = self.mu.to_exact()?;
        let nu = self.nu.to_exact()?;
        if !c.zeta_z.is_polynomial() {
            return None;
        }
        let zz = c.zeta_z.num();
        let mut sigma = Poly1::monomial(mu.clone(), 1);
        sigma.add_term(0, &(&c.zeta - &(&mu * &c.zeta)));
        let second = SkewPoly::w()
            .sub(&SkewPoly::from_z_poly(zz))
            .scale(&nu)
            .add(&SkewPoly::from_z_poly(&zz.compose(&sigma)));
        Some((sigma, second))
    }

    pub fn to_complex(&self) -> (Complex64, Complex64) {
        (self.mu.to_complex(), self.nu.to_complex())
    }
}

/// Checks `f ∘ γ = γ_1 ∘ f` by exact composition.
pub fn check_realized(f: &SkewProduct, g: &SymmetryElement) -> Option<bool> {
    let c = crate::skew::centroids(f);
    let (sigma, gw) = g.realize(&c)?;
    let g1 = g.level(1, f.delta(), f.d(), f.l());
    let (sigma1, gw1) = g1.realize(&c)?;
    let lhs_p = f.p().compose(&sigma);
    let rhs_p = sigma1.compose(f.p());
    let lhs_q = f.q().compose(&sigma, &gw, DEFAULT_ITERATE_BUDGET).ok()?;
    let rhs_q = gw1.compose(f.p(), f.q(), DEFAULT_ITERATE_BUDGET).ok()?;
    Some(lhs_p == rhs_p && lhs_q == rhs_q)
}
