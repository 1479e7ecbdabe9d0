//! Gorenstein-projective tuples and Gorenstein Morita rings with zero
//! bimodule maps.

use alloc::vec;
use alloc::vec::Vec;

use super::{
    compatibility_check, gorenstein_dimension, is_gproj, silp, totally_acyclic_window,
    verify_window, AcyclicWindow, CompatibilityReport, GorensteinError, GorensteinReport,
    WindowCertificate,
};
use crate::algebra::opposite_algebra;
use crate::linalg::{Mat, Subspace};
use crate::module::{
    find_isomorphism, is_projective, proj_dim, same_algebra, tensor_over, Bimodule, Dim, Module,
    ModuleHom, Tensor,
};
use crate::morita::{
    homological_embedding_check, t_a, t_b, tuple_to_module, MoritaData, MoritaTuple, Side,
};

/// A constructed Gorenstein-projective tuple with its certificate.
#[derive(Clone, Debug)]
pub struct ConstructedTuple {
    pub tuple: MoritaTuple,
    /// `F` of the tuple, a module over the Morita ring.
    pub module: Module,
    pub compatibility: CompatibilityReport,
    pub ring: GorensteinReport,
    pub window: AcyclicWindow,
    pub certificate: WindowCertificate,
}

fn require_gproj(report: &GorensteinReport, m: &Module, what: &'static str) -> Result<(), GorensteinError> {
    if is_gproj(report, m)? {
        Ok(())
    } else {
        Err(GorensteinError::HypothesisFailed(what))
    }
}

fn report_for(a: &alloc::sync::Arc<crate::algebra::Algebra>, other: &GorensteinReport, bound: usize) -> GorensteinReport {
    if same_algebra(a, &other.algebra) {
        other.clone()
    } else {
        gorenstein_dimension(a, bound)
    }
}

/// Builds `(X, Y, t∘(Id_M⊗π_X), s∘(Id_N⊗π_Y))` from a Gorenstein-projective
/// `B`-module `z`, a monomorphism `s: N⊗_B Z -> X` with Gorenstein-projective
/// cokernel, and a monomorphism `t: M⊗_A Coker s -> Y` with `Coker t ≅ Z`.
///
/// `t` must be defined on `M ⊗_A C` where `(C, π_X) = s.cokernel()`. The
/// isomorphism `Coker t -> Z` is searched for when not supplied. The
/// output carries a verified window of the given width over the ring.
pub fn theorem_a_construct(
    d: &MoritaData,
    z: &Module,
    s: &ModuleHom,
    t: &ModuleHom,
    iso: Option<&ModuleHom>,
    bound: usize,
    width: usize,
) -> Result<ConstructedTuple, GorensteinError> {
    if !d.has_zero_bimaps() {
        return Err(GorensteinError::HypothesisFailed("φ = ψ = 0"));
    }
    let compatibility = compatibility_check(d, bound);
    if !compatibility.hypotheses_hold() {
        return Err(GorensteinError::HypothesisFailed("compatibility conditions"));
    }
    let rep_a = gorenstein_dimension(d.a(), bound);
    let rep_b = report_for(d.b(), &rep_a, bound);
    let nz = tensor_over(d.n(), z)?;
    if *s.source() != nz.module || !same_algebra(s.target().algebra(), d.a()) {
        return Err(GorensteinError::HypothesisFailed("s is not defined on N ⊗_B Z"));
    }
    if !s.is_equivariant() || !s.is_injective() {
        return Err(GorensteinError::HypothesisFailed("s is not a monomorphism"));
    }
    require_gproj(&rep_b, z, "Z is not Gorenstein-projective")?;
    let (cs, pi_x) = s.cokernel();
    require_gproj(&rep_a, &cs, "Coker s is not Gorenstein-projective")?;
    let mc = tensor_over(d.m(), &cs)?;
    if *t.source() != mc.module || !same_algebra(t.target().algebra(), d.b()) {
        return Err(GorensteinError::HypothesisFailed("t is not defined on M ⊗_A Coker s"));
    }
    if !t.is_equivariant() || !t.is_injective() {
        return Err(GorensteinError::HypothesisFailed("t is not a monomorphism"));
    }
    let (ct, pt) = t.cokernel();
    let iso = match iso {
        Some(h) => {
            if h.source().dim() != ct.dim()
                || *h.target() != *z
                || !h.retarget(&ct, z).is_equivariant()
                || !h.is_isomorphism()
            {
                return Err(GorensteinError::HypothesisFailed("supplied map is not an isomorphism Coker t -> Z"));
            }
            h.retarget(&ct, z)
        }
        None => find_isomorphism(&ct, z)
            .ok_or(GorensteinError::HypothesisFailed("Coker t is not isomorphic to Z"))?,
    };
    let pi_y = iso.after(&pt);
    let x = s.target().clone();
    let y = t.target().clone();
    let mx = tensor_over(d.m(), &x)?;
    let ny = tensor_over(d.n(), &y)?;
    let f = t.after(&mx.map_right(&pi_x, &mc));
    let g = s.after(&ny.map_right(&pi_y, &nz));
    let tuple = MoritaTuple::new(d, x, y, f.matrix().clone(), g.matrix().clone())?;
    let module = tuple_to_module(d, &tuple);
    let ring = gorenstein_dimension(&d.ring().algebra, bound);
    if !is_gproj(&ring, &module)? {
        return Err(GorensteinError::NotGproj);
    }
    let window = totally_acyclic_window(&ring, &module, width)?;
    let certificate = window.certificate();
    verify_window(&certificate)?;
    Ok(ConstructedTuple {
        tuple,
        module,
        compatibility,
        ring,
        window,
        certificate,
    })
}

fn is_regular_bimodule(b: &Bimodule, a: &alloc::sync::Arc<crate::algebra::Algebra>) -> bool {
    let r = Bimodule::regular(a);
    b.left_action() == r.left_action() && b.right_action() == r.right_action()
}

/// `Λ ⊗_Λ Y -> Y`, `λ ⊗ y ↦ λy`.
fn multiplication(t: &Tensor, y: &Module) -> ModuleHom {
    let f = y.field();
    let dy = y.dim();
    let mut cols = Vec::with_capacity(y.algebra().dim() * dy);
    for i in 0..y.algebra().dim() {
        for j in 0..dy {
            cols.push(y.act(i).col(j));
        }
    }
    t.descend(&Mat::from_columns(f, dy, &cols), y)
}

fn image_of(h: &ModuleHom, s: &Subspace) -> Subspace {
    let vecs: Vec<Vec<u64>> = s.basis().iter().map(|v| h.matrix().apply(v)).collect();
    Subspace::spanned_by(h.matrix().field(), h.target().dim(), &vecs)
}

fn same_subspace(a: &Subspace, b: &Subspace) -> bool {
    a.contains_subspace(b) && b.contains_subspace(a)
}

/// The two evaluations of a Gorenstein-projectivity test for a tuple:
/// over the base algebras (`X` and `Y`) and over the ring (`F(t)`).
pub fn gproj_two_paths(
    d: &MoritaData,
    base: &GorensteinReport,
    ring: &GorensteinReport,
    t: &MoritaTuple,
) -> Result<(bool, bool), GorensteinError> {
    if !same_algebra(d.a(), &base.algebra) || !same_algebra(d.b(), &base.algebra) {
        return Err(GorensteinError::PreconditionFailed("base report must cover A = B"));
    }
    let on_base = is_gproj(base, &t.x)? && is_gproj(base, &t.y)?;
    let on_ring = is_gproj(ring, &tuple_to_module(d, t))?;
    Ok((on_base, on_ring))
}

/// Outcome of the characterisation of Gorenstein-projective tuples over
/// `Δ_(0,0) = (Λ Λ; Λ Λ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharGproj {
    pub gproj: bool,
    pub x_gproj: bool,
    pub y_gproj: bool,
    pub ring_gproj: bool,
    pub explanation: &'static str,
}

/// For `Im f = Ker g`, `Im g = Ker f` with `Im f` Gorenstein-projective:
/// the tuple is Gorenstein-projective iff `X` and `Y` are, cross-checked
/// against the test over the ring.
pub fn char_gproj_tuple(
    d: &MoritaData,
    base: &GorensteinReport,
    ring: &GorensteinReport,
    t: &MoritaTuple,
) -> Result<CharGproj, GorensteinError> {
    let a = d.a();
    if !same_algebra(a, d.b())
        || !is_regular_bimodule(d.n(), a)
        || !is_regular_bimodule(d.m(), a)
        || !d.has_zero_bimaps()
    {
        return Err(GorensteinError::PreconditionFailed("data is not Δ_(0,0)"));
    }
    let mu_x = multiplication(t.mx(), &t.x);
    let mu_y = multiplication(t.ny(), &t.y);
    let im_f = t.f.image_subspace();
    let ker_g = image_of(&mu_y, &t.g.kernel_subspace());
    if !same_subspace(&im_f, &ker_g) {
        return Err(GorensteinError::PreconditionFailed("Im f ≠ Ker g"));
    }
    let im_g = t.g.image_subspace();
    let ker_f = image_of(&mu_x, &t.f.kernel_subspace());
    if !same_subspace(&im_g, &ker_f) {
        return Err(GorensteinError::PreconditionFailed("Im g ≠ Ker f"));
    }
    let (imf_mod, _) = t.y.submodule(&im_f);
    if !is_gproj(base, &imf_mod)? {
        return Err(GorensteinError::PreconditionFailed("Im f is not Gorenstein-projective"));
    }
    let x_gproj = is_gproj(base, &t.x)?;
    let y_gproj = is_gproj(base, &t.y)?;
    let ring_gproj = is_gproj(ring, &tuple_to_module(d, t))?;
    let on_base = x_gproj && y_gproj;
    if on_base != ring_gproj {
        return Err(GorensteinError::Disagreement {
            base: on_base,
            ring: ring_gproj,
        });
    }
    let explanation = match (x_gproj, y_gproj) {
        (true, true) => "X and Y are Gorenstein-projective",
        (false, true) => "X is not Gorenstein-projective",
        (true, false) => "Y is not Gorenstein-projective",
        (false, false) => "neither X nor Y is Gorenstein-projective",
    };
    Ok(CharGproj {
        gproj: on_base,
        x_gproj,
        y_gproj,
        ring_gproj,
        explanation,
    })
}

/// Hypotheses and bounds for `silp Λ_(0,0) < ∞`.
#[derive(Clone, Debug)]
pub struct SilpSpliReport {
    /// `pd _BM`.
    pub kappa: usize,
    /// `pd _AN`.
    pub lambda: usize,
    /// `silp B`.
    pub mu: usize,
    /// `silp A`.
    pub nu: usize,
    /// `N ⊗_B M = 0` and `M ⊗_A N = 0`.
    pub embeddings_closed: bool,
    /// Sampled Ext comparisons for `Z_A` and `Z_B` all agree.
    pub embeddings_sampled: bool,
    pub id_t_a: Dim,
    pub id_t_b: Dim,
    /// `max{κ+μ, ν} + 1`.
    pub bound_t_a: usize,
    /// `max{λ+ν, μ} + 1`.
    pub bound_t_b: usize,
    pub ring: GorensteinReport,
}

impl SilpSpliReport {
    pub fn bounds_hold(&self) -> bool {
        matches!(self.id_t_a, Dim::Finite(v) if v <= self.bound_t_a)
            && matches!(self.id_t_b, Dim::Finite(v) if v <= self.bound_t_b)
    }

    /// `silp Λ_(0,0) = max(id T_A(A), id T_B(B))`.
    pub fn silp_ring(&self) -> Option<usize> {
        Some(self.id_t_a.finite()?.max(self.id_t_b.finite()?))
    }
}

fn finite_or(d: Dim, what: &'static str) -> Result<usize, GorensteinError> {
    d.finite().ok_or(GorensteinError::HypothesisFailed(what))
}

fn right_projective(b: &Bimodule) -> bool {
    is_projective(&b.as_right_module_over(&opposite_algebra(b.right_algebra())))
}

/// Checks the hypotheses of the `silp` bound, computes
/// `id T_A(A)` and `id T_B(B)` over the ring and compares them with
/// `max{κ+μ, ν} + 1` and `max{λ+ν, μ} + 1`.
pub fn silp_spli_report(d: &MoritaData, bound: usize) -> Result<SilpSpliReport, GorensteinError> {
    if !d.has_zero_bimaps() {
        return Err(GorensteinError::HypothesisFailed("φ = ψ = 0"));
    }
    if !right_projective(d.m()) {
        return Err(GorensteinError::HypothesisFailed("M_A is projective"));
    }
    if !right_projective(d.n()) {
        return Err(GorensteinError::HypothesisFailed("N_B is projective"));
    }
    let kappa = finite_or(proj_dim(&d.m().as_left_module(), bound), "pd _BM is finite")?;
    let lambda = finite_or(proj_dim(&d.n().as_left_module(), bound), "pd _AN is finite")?;
    let embeddings_closed = d.n_tensor_m().dim() == 0 && d.m_tensor_n().dim() == 0;
    if !embeddings_closed {
        return Err(GorensteinError::HypothesisFailed("Z_A and Z_B are homological embeddings"));
    }
    let nu = finite_or(silp(d.a(), bound), "silp A is finite")?;
    let mu = finite_or(silp(d.b(), bound), "silp B is finite")?;
    let samples = |a: &alloc::sync::Arc<crate::algebra::Algebra>| -> Result<Vec<(Module, Module)>, GorensteinError> {
        let top = Module::top(a)?;
        let reg = Module::regular(a);
        Ok(vec![(top.clone(), reg.clone()), (top.clone(), top), (reg.clone(), reg)])
    };
    let n_max = 2;
    let ea = homological_embedding_check(d, Side::A, &samples(d.a())?, n_max)?;
    let eb = homological_embedding_check(d, Side::B, &samples(d.b())?, n_max)?;
    let bound_t_a = (kappa + mu).max(nu) + 1;
    let bound_t_b = (lambda + nu).max(mu) + 1;
    let ta = tuple_to_module(d, &t_a(d, &Module::regular(d.a()))?);
    let tb = tuple_to_module(d, &t_b(d, &Module::regular(d.b()))?);
    let id_t_a = crate::module::inj_dim(&ta, bound_t_a);
    let id_t_b = crate::module::inj_dim(&tb, bound_t_b);
    let ring = gorenstein_dimension(&d.ring().algebra, bound.max(bound_t_a).max(bound_t_b));
    Ok(SilpSpliReport {
        kappa,
        lambda,
        mu,
        nu,
        embeddings_closed,
        embeddings_sampled: ea.all_agree() && eb.all_agree(),
        id_t_a,
        id_t_b,
        bound_t_a,
        bound_t_b,
        ring,
    })
}
