//! Gorenstein algebras, Gorenstein-projective modules and their totally
//! acyclic witnesses, including constructions over Morita rings with zero
//! bimodule maps.

mod certificate;
mod construct;
mod window;

pub use certificate::{verify_window, CertificateError, WindowCertificate};
pub use construct::{
    char_gproj_tuple, gproj_two_paths, silp_spli_report, theorem_a_construct, CharGproj,
    SilpSpliReport, ConstructedTuple,
};
pub use window::{left_approximation, totally_acyclic_window, AcyclicWindow};

use alloc::sync::Arc;
use core::fmt;

use crate::algebra::{opposite_algebra, Algebra};
use crate::module::{
    inj_dim, proj_dim, Bimodule, CoverStrategy, Dim, FreeResolution, Module, ModuleError,
};
use crate::morita::{MoritaData, MoritaError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinError {
    /// The algebra has no certified Gorenstein verdict.
    NotKnownGorenstein,
    /// The left `add Λ`-approximation of a module that should be
    /// Gorenstein-projective is not injective.
    ApproximationNotInjective { step: usize },
    NotGproj,
    /// A constructed window fails its own invariant check.
    WindowInvalid,
    HypothesisFailed(&'static str),
    PreconditionFailed(&'static str),
    NonIdempotent,
    FAeNonzero,
    /// The two evaluation paths of a Gorenstein-projectivity test differ.
    Disagreement { base: bool, ring: bool },
    Certificate(CertificateError),
    Module(ModuleError),
    Morita(MoritaError),
}

impl fmt::Display for GorensteinError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GorensteinError::NotKnownGorenstein => write!(f, "algebra is not known to be Gorenstein"),
            GorensteinError::ApproximationNotInjective { step } => {
                write!(f, "left approximation at step {step} is not injective")
            }
            GorensteinError::NotGproj => write!(f, "module is not Gorenstein-projective"),
            GorensteinError::WindowInvalid => write!(f, "constructed window fails its invariants"),
            GorensteinError::HypothesisFailed(w) => write!(f, "hypothesis failed: {w}"),
            GorensteinError::PreconditionFailed(w) => write!(f, "precondition failed: {w}"),
            GorensteinError::NonIdempotent => write!(f, "element is not idempotent"),
            GorensteinError::FAeNonzero => write!(f, "fAe is nonzero"),
            GorensteinError::Disagreement { base, ring } => {
                write!(f, "evaluation paths disagree: base {base}, ring {ring}")
            }
            GorensteinError::Certificate(e) => write!(f, "certificate rejected: {e}"),
            GorensteinError::Module(e) => write!(f, "{e}"),
            GorensteinError::Morita(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for GorensteinError {}

impl From<ModuleError> for GorensteinError {
    fn from(e: ModuleError) -> Self {
        GorensteinError::Module(e)
    }
}

impl From<MoritaError> for GorensteinError {
    fn from(e: MoritaError) -> Self {
        GorensteinError::Morita(e)
    }
}

impl From<CertificateError> for GorensteinError {
    fn from(e: CertificateError) -> Self {
        GorensteinError::Certificate(e)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GorensteinVerdict {
    Gorenstein(usize),
    Inconclusive { bound: usize },
}

#[derive(Clone, Debug)]
pub struct GorensteinReport {
    pub algebra: Arc<Algebra>,
    /// `id _ΛΛ`.
    pub left_id: Dim,
    /// `id Λ_Λ`.
    pub right_id: Dim,
    pub verdict: GorensteinVerdict,
}

impl GorensteinReport {
    pub fn dimension(&self) -> Option<usize> {
        match self.verdict {
            GorensteinVerdict::Gorenstein(n) => Some(n),
            GorensteinVerdict::Inconclusive { .. } => None,
        }
    }

    /// For an Artin algebra both injective dimensions agree once finite.
    pub fn sides_agree(&self) -> bool {
        match (self.left_id, self.right_id) {
            (Dim::Finite(l), Dim::Finite(r)) => l == r,
            _ => true,
        }
    }
}

/// `id _ΛΛ` and `id Λ_Λ` up to `bound`.
pub fn gorenstein_dimension(a: &Arc<Algebra>, bound: usize) -> GorensteinReport {
    let left_id = inj_dim(&Module::regular(a), bound);
    let right_id = inj_dim(&Module::regular(&opposite_algebra(a)), bound);
    let verdict = match (left_id, right_id) {
        (Dim::Finite(l), Dim::Finite(r)) => {
            debug_assert_eq!(l, r, "injective dimensions of an Artin algebra differ");
            GorensteinVerdict::Gorenstein(l.max(r))
        }
        _ => GorensteinVerdict::Inconclusive { bound },
    };
    GorensteinReport {
        algebra: a.clone(),
        left_id,
        right_id,
        verdict,
    }
}

/// `Ext^i(x, Λ) = 0` for `1 ≤ i ≤ n` over an `n`-Gorenstein algebra.
pub fn is_gproj(report: &GorensteinReport, x: &Module) -> Result<bool, GorensteinError> {
    let n = report.dimension().ok_or(GorensteinError::NotKnownGorenstein)?;
    if n == 0 || x.dim() == 0 {
        return Ok(true);
    }
    let reg = Module::regular(&report.algebra);
    let x = x.rebase(&report.algebra)?;
    let res = FreeResolution::new(&x, n + 1, CoverStrategy::Greedy);
    for i in 1..=n {
        if res.ext(i, &reg)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `silp Λ = id _ΛΛ`.
pub fn silp(a: &Arc<Algebra>, bound: usize) -> Dim {
    inj_dim(&Module::regular(a), bound)
}

/// `spli Λ = pd _Λ D(Λ_Λ)`.
pub fn spli(a: &Arc<Algebra>, bound: usize) -> Dim {
    let op = opposite_algebra(a);
    proj_dim(&Module::regular(&op).dual_over(a), bound)
}

/// Projective and injective dimensions of the four one-sided bimodules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityReport {
    pub pd_m_a: Dim,
    pub pd_a_n: Dim,
    pub id_a_n: Dim,
    pub pd_n_b: Dim,
    pub pd_b_m: Dim,
    pub id_b_m: Dim,
    /// `pd M_A < ∞` and `pd _AN < ∞`.
    pub cond1: bool,
    /// `pd N_B < ∞` and `pd _BM < ∞`.
    pub cond2: bool,
    /// `pd M_A < ∞` and `id _AN < ∞`.
    pub cond3: bool,
    /// `pd N_B < ∞` and `id _BM < ∞`.
    pub cond4: bool,
}

impl CompatibilityReport {
    /// `cond1` or `cond3`, and `cond2` or `cond4`.
    pub fn hypotheses_hold(&self) -> bool {
        (self.cond1 || self.cond3) && (self.cond2 || self.cond4)
    }

    /// Names of the conditions that fail, for reports.
    pub fn failing(&self) -> alloc::vec::Vec<&'static str> {
        let mut out = alloc::vec::Vec::new();
        for (ok, name) in [
            (self.pd_m_a.is_finite(), "pd M_A"),
            (self.pd_a_n.is_finite(), "pd _AN"),
            (self.id_a_n.is_finite(), "id _AN"),
            (self.pd_n_b.is_finite(), "pd N_B"),
            (self.pd_b_m.is_finite(), "pd _BM"),
            (self.id_b_m.is_finite(), "id _BM"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

fn right_module(b: &Bimodule) -> Module {
    b.as_right_module_over(&opposite_algebra(b.right_algebra()))
}

/// Evaluates the finite-dimension forms of the compatibility conditions up
/// to `bound`.
pub fn compatibility_check(d: &MoritaData, bound: usize) -> CompatibilityReport {
    let pd_m_a = proj_dim(&right_module(d.m()), bound);
    let pd_n_b = proj_dim(&right_module(d.n()), bound);
    let an = d.n().as_left_module();
    let bm = d.m().as_left_module();
    let pd_a_n = proj_dim(&an, bound);
    let pd_b_m = proj_dim(&bm, bound);
    let id_a_n = inj_dim(&an, bound);
    let id_b_m = inj_dim(&bm, bound);
    CompatibilityReport {
        cond1: pd_m_a.is_finite() && pd_a_n.is_finite(),
        cond2: pd_n_b.is_finite() && pd_b_m.is_finite(),
        cond3: pd_m_a.is_finite() && id_a_n.is_finite(),
        cond4: pd_n_b.is_finite() && id_b_m.is_finite(),
        pd_m_a,
        pd_a_n,
        id_a_n,
        pd_n_b,
        pd_b_m,
        id_b_m,
    }
}

/// `(A N; N A)` with `N = Ae ⊗_k fA` and zero bimodule maps, after checking
/// that `e`, `f` are idempotent, `fAe = 0` and `N ⊗_A N = 0`.
pub fn morita_from_idempotents(
    a: &Arc<Algebra>,
    e: &[u64],
    f: &[u64],
) -> Result<MoritaData, GorensteinError> {
    if e.len() != a.dim() || f.len() != a.dim() || !a.is_idempotent(e) || !a.is_idempotent(f) {
        return Err(GorensteinError::NonIdempotent);
    }
    for i in 0..a.dim() {
        let fb = a.mul(f, &a.basis_vector(i));
        if a.mul(&fb, e).iter().any(|&c| c != 0) {
            return Err(GorensteinError::FAeNonzero);
        }
    }
    let d = MoritaData::from_idempotents(a, e, f)?;
    if d.m_tensor_n().dim() != 0 || d.n_tensor_m().dim() != 0 {
        return Err(GorensteinError::HypothesisFailed("N ⊗_A N is nonzero"));
    }
    Ok(d)
}
