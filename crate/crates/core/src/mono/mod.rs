//! The monomorphism category `mono(Λ)`: tuples `(X, Y, f, 0)` over
//! `Δ_(0,0) = (Λ Λ; Λ Λ)` with `f` injective, equivalently triples over the
//! triangular algebra `T₂(Λ) = (Λ 0; Λ Λ)`.

mod resolution;
mod stable;

pub use resolution::{gorenstein_subcat_resolution, projective_cover, GprojResolution};
pub use stable::{
    functor_category_report, stable_endomorphism_algebra, stable_hom, stable_hom_mono,
    BundleSource, FunctorCategoryReport, StableAlgebraBundle,
};

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, AlgebraError, Violation};
use crate::gorenstein::{gorenstein_dimension, is_gproj, GorensteinError, GorensteinReport, GorensteinVerdict};
use crate::linalg::{solve, Mat};
use crate::module::{
    hom_space, is_projective, proj_dim, same_algebra, tensor_over, Bimodule, Dim, Module, ModuleError,
    ModuleHom,
};
use crate::morita::{tuple_to_module, MoritaData, MoritaError, MoritaTuple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoError {
    NotMonomorphism,
    /// The tuple has `g ≠ 0` or lives over other data.
    NotInMono(&'static str),
    NotKnownGorenstein,
    HypothesisFailed(&'static str),
    /// The base and triangular evaluations of Gorenstein-projectivity differ.
    Disagreement { base: bool, ring: bool },
    /// A functor-category claim fails on the computed values.
    AssertionFailed {
        claim: &'static str,
        gamma: GorensteinVerdict,
        end_gldim: Dim,
    },
    InvalidAlgebra(Violation),
    Module(ModuleError),
    Morita(MoritaError),
    Algebra(AlgebraError),
}

impl fmt::Display for MonoError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoError::NotMonomorphism => write!(f, "structure map is not a monomorphism"),
            MonoError::NotInMono(w) => write!(f, "not an object of mono(Λ): {w}"),
            MonoError::NotKnownGorenstein => write!(f, "base algebra is not known to be Gorenstein"),
            MonoError::HypothesisFailed(w) => write!(f, "hypothesis failed: {w}"),
            MonoError::Disagreement { base, ring } => {
                write!(f, "Gorenstein-projectivity paths disagree: base {base}, triangular {ring}")
            }
            MonoError::AssertionFailed { claim, gamma, end_gldim } => write!(
                f,
                "assertion '{claim}' fails: Γ verdict {gamma:?}, gldim End {end_gldim:?}"
            ),
            MonoError::InvalidAlgebra(v) => write!(f, "stable algebra fails validation: {v}"),
            MonoError::Module(e) => write!(f, "{e}"),
            MonoError::Morita(e) => write!(f, "{e}"),
            MonoError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MonoError {}

impl From<ModuleError> for MonoError {
    fn from(e: ModuleError) -> Self {
        MonoError::Module(e)
    }
}

impl From<MoritaError> for MonoError {
    fn from(e: MoritaError) -> Self {
        MonoError::Morita(e)
    }
}

impl From<AlgebraError> for MonoError {
    fn from(e: AlgebraError) -> Self {
        MonoError::Algebra(e)
    }
}

impl From<GorensteinError> for MonoError {
    fn from(e: GorensteinError) -> Self {
        match e {
            GorensteinError::NotKnownGorenstein => MonoError::NotKnownGorenstein,
            GorensteinError::Module(e) => MonoError::Module(e),
            GorensteinError::Morita(e) => MonoError::Morita(e),
            _ => MonoError::HypothesisFailed("Gorenstein-projectivity test failed"),
        }
    }
}

/// The base algebra together with `Δ_(0,0)`, the triangular data and their
/// Gorenstein verdicts.
#[derive(Clone, Debug)]
pub struct MonoContext {
    base: Arc<Algebra>,
    delta: MoritaData,
    tri: MoritaData,
    base_report: GorensteinReport,
    tri_report: GorensteinReport,
}

impl MonoContext {
    /// Computes the Gorenstein verdicts of `Λ` and `T₂(Λ)` up to `bound`.
    pub fn new(base: &Arc<Algebra>, bound: usize) -> Result<MonoContext, MonoError> {
        let delta = MoritaData::delta(base, false)?;
        let tri = MoritaData::lower_triangular(base, base, Bimodule::regular(base))?;
        let base_report = gorenstein_dimension(base, bound);
        let tri_report = gorenstein_dimension(&tri.ring().algebra, bound + 1);
        Ok(MonoContext {
            base: base.clone(),
            delta,
            tri,
            base_report,
            tri_report,
        })
    }

    pub fn base(&self) -> &Arc<Algebra> {
        &self.base
    }

    /// `Δ_(0,0)`.
    pub fn delta(&self) -> &MoritaData {
        &self.delta
    }

    /// `(Λ 0; Λ Λ)`, whose ring is `T₂(Λ)`.
    pub fn triangular(&self) -> &MoritaData {
        &self.tri
    }

    pub fn t2(&self) -> &Arc<Algebra> {
        &self.tri.ring().algebra
    }

    pub fn base_report(&self) -> &GorensteinReport {
        &self.base_report
    }

    pub fn t2_report(&self) -> &GorensteinReport {
        &self.tri_report
    }

    /// `T₁(X) = (X, X, id)`.
    pub fn t1(&self, x: &Module) -> Result<MonoObject, MonoError> {
        MonoObject::from_map(self, &ModuleHom::identity(x))
    }

    /// `Z₂(Y) = (0, Y, 0)`.
    pub fn z2(&self, y: &Module) -> Result<MonoObject, MonoError> {
        MonoObject::from_map(self, &ModuleHom::zero(&Module::zero(&self.base), y))
    }

    /// The `T₂(Λ)`-module of an object.
    pub fn module(&self, obj: &MonoObject) -> Module {
        tuple_to_module(&self.tri, &mono_to_mon(self, obj))
    }
}

/// `x ↦ 1 ⊗ x` for `Λ ⊗_Λ X`.
fn unit_map(t: &MoritaTuple) -> Mat {
    let a = t.x.algebra();
    let fld = a.field();
    let mut m = Mat::zeros(fld, t.mx().dim(), t.x.dim());
    for k in 0..t.x.dim() {
        let mut col = alloc::vec![0u64; t.mx().dim()];
        for (l, &u) in a.unit().iter().enumerate() {
            if u != 0 {
                for (c, v) in col.iter_mut().zip(t.mx().pure(l, k)) {
                    *c = fld.add(*c, fld.mul(u, v));
                }
            }
        }
        for (r, v) in col.into_iter().enumerate() {
            m.set(r, k, v);
        }
    }
    m
}

/// Multiplication `Λ ⊗_Λ X -> X` on pure tensors.
fn multiplication_on_pure(x: &Module) -> Mat {
    let a = x.algebra();
    let d = x.dim();
    let cols: Vec<Vec<u64>> = (0..a.dim() * d).map(|p| x.act(p / d).col(p % d)).collect();
    Mat::from_columns(x.field(), d, &cols)
}

/// An object `(X, Y, f, 0)` of `mono(Λ)` with `f` injective.
#[derive(Clone, Debug)]
pub struct MonoObject {
    tuple: MoritaTuple,
    map: ModuleHom,
}

impl PartialEq for MonoObject {
    fn eq(&self, o: &Self) -> bool {
        self.tuple == o.tuple
    }
}

impl MonoObject {
    /// Checks that the tuple lives over `Δ_(0,0)`, has `g = 0` and an
    /// injective structure map.
    pub fn from_tuple(ctx: &MonoContext, t: &MoritaTuple) -> Result<MonoObject, MonoError> {
        if !same_algebra(t.x.algebra(), &ctx.base) || !same_algebra(t.y.algebra(), &ctx.base) {
            return Err(MonoError::NotInMono("tuple is over another algebra"));
        }
        if !t.g.matrix().is_zero() {
            return Err(MonoError::NotInMono("g is nonzero"));
        }
        t.validate(&ctx.delta)?;
        let plain = t.f.matrix().dot(&unit_map(t));
        let map = ModuleHom::new_unchecked(t.x.clone(), t.y.clone(), plain);
        if !map.is_injective() {
            return Err(MonoError::NotMonomorphism);
        }
        Ok(MonoObject { tuple: t.clone(), map })
    }

    /// The object of an injective module map `f: X -> Y`.
    pub fn from_map(ctx: &MonoContext, f: &ModuleHom) -> Result<MonoObject, MonoError> {
        f.check_equivariant()?;
        if !f.is_injective() {
            return Err(MonoError::NotMonomorphism);
        }
        let (x, y) = (f.source().clone(), f.target().clone());
        let fld = x.field();
        let mx = tensor_over(ctx.delta.m(), &x)?;
        let fm = mx.descend(&f.matrix().dot(&multiplication_on_pure(&x)), &y);
        let ny_dim = tensor_over(ctx.delta.n(), &y)?.dim();
        let t = MoritaTuple::new(&ctx.delta, x.clone(), y, fm.matrix().clone(), Mat::zeros(fld, x.dim(), ny_dim))?;
        Ok(MonoObject { tuple: t, map: f.clone() })
    }

    /// The underlying tuple over `Δ_(0,0)`.
    pub fn tuple(&self) -> &MoritaTuple {
        &self.tuple
    }

    pub fn x(&self) -> &Module {
        &self.tuple.x
    }

    pub fn y(&self) -> &Module {
        &self.tuple.y
    }

    /// The structure map as a module map `X -> Y`.
    pub fn map(&self) -> &ModuleHom {
        &self.map
    }

    pub fn cokernel(&self) -> (Module, ModuleHom) {
        self.map.cokernel()
    }

    pub fn dim(&self) -> usize {
        self.tuple.dim()
    }

    /// `self ⊕ other`.
    pub fn oplus(&self, ctx: &MonoContext, other: &MonoObject) -> Result<MonoObject, MonoError> {
        MonoObject::from_tuple(ctx, &self.tuple.oplus(&ctx.delta, &other.tuple))
    }
}

/// `(X, Y, f, 0)` over `Δ_(0,0)` as the triple `(X, Y, f)` over `(Λ 0; Λ Λ)`.
pub fn mono_to_mon(ctx: &MonoContext, obj: &MonoObject) -> MoritaTuple {
    let t = &obj.tuple;
    let fld = t.x.field();
    MoritaTuple::new_unchecked(&ctx.tri, t.x.clone(), t.y.clone(), t.f.matrix().clone(), Mat::zeros(fld, t.x.dim(), 0))
        .expect("same tensor M ⊗ X on both sides")
}

/// A triple over `(Λ 0; Λ Λ)` with injective structure map as an object of
/// `mono(Λ)`.
pub fn mon_to_mono(ctx: &MonoContext, t: &MoritaTuple) -> Result<MonoObject, MonoError> {
    if !same_algebra(t.x.algebra(), &ctx.base) || !same_algebra(t.y.algebra(), &ctx.base) {
        return Err(MonoError::NotInMono("triple is over another algebra"));
    }
    t.validate(&ctx.tri)?;
    let fld = t.x.field();
    let ny = tensor_over(ctx.delta.n(), &t.y)?;
    let d = MoritaTuple::new_unchecked(&ctx.delta, t.x.clone(), t.y.clone(), t.f.matrix().clone(), Mat::zeros(fld, t.x.dim(), ny.dim()))?;
    MonoObject::from_tuple(ctx, &d)
}

/// Whether `f` admits a retraction `r` with `r ∘ f = id`.
pub fn is_split_mono(f: &ModuleHom) -> bool {
    let (x, y) = (f.source(), f.target());
    if x.dim() == 0 {
        return true;
    }
    let homs = hom_space(y, x).expect("same algebra");
    if homs.is_empty() {
        return false;
    }
    let fld = x.field();
    let cols: Vec<Vec<u64>> = homs.iter().map(|r| r.after(f).matrix().vec_cols()).collect();
    let a = Mat::from_columns(fld, x.dim() * x.dim(), &cols);
    let b = Mat::column(fld, &Mat::identity(fld, x.dim()).vec_cols());
    solve(&a, &b).is_ok()
}

/// A module is injective iff its dual over the opposite algebra is projective.
pub fn is_injective(m: &Module) -> bool {
    is_projective(&m.dual())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjInj {
    Projective,
    Injective,
    Both,
    Neither,
}

/// Projective objects are `T₁(P) ⊕ Z₂(Q)`, injective ones `T₁(I) ⊕ Z₂(J)`:
/// `X` projective (injective), `f` split and `Coker f` projective (injective).
pub fn classify_proj_inj(obj: &MonoObject) -> ProjInj {
    let split = is_split_mono(&obj.map);
    let (c, _) = obj.cokernel();
    let proj = split && is_projective(obj.x()) && is_projective(&c);
    let inj = split && is_injective(obj.x()) && is_injective(&c);
    match (proj, inj) {
        (true, true) => ProjInj::Both,
        (true, false) => ProjInj::Projective,
        (false, true) => ProjInj::Injective,
        (false, false) => ProjInj::Neither,
    }
}

/// `X`, `Y` and `Coker f` Gorenstein-projective over `Λ`, cross-checked with
/// Gorenstein-projectivity of the triple over `T₂(Λ)`.
pub fn gproj_mono_test(ctx: &MonoContext, obj: &MonoObject) -> Result<bool, MonoError> {
    let rep = &ctx.base_report;
    if rep.dimension().is_none() || ctx.tri_report.dimension().is_none() {
        return Err(MonoError::NotKnownGorenstein);
    }
    let (c, _) = obj.cokernel();
    let base = is_gproj(rep, obj.x())? && is_gproj(rep, obj.y())? && is_gproj(rep, &c)?;
    let ring = is_gproj(&ctx.tri_report, &ctx.module(obj))?;
    if base != ring {
        return Err(MonoError::Disagreement { base, ring });
    }
    Ok(base)
}

/// Membership in `𝒞 = {pd X < ∞}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Membership {
    Yes(usize),
    No,
    Inconclusive { bound: usize },
}

/// Decides membership from `pd X` up to `bound`; a bound alone never yields
/// [`Membership::No`].
pub fn in_subcategory_c(obj: &MonoObject, bound: usize) -> Membership {
    match proj_dim(obj.x(), bound) {
        Dim::Finite(d) => Membership::Yes(d),
        Dim::AtLeast(_) => Membership::Inconclusive { bound },
    }
}

/// As [`in_subcategory_c`], but over an `n`-Gorenstein base a finite
/// projective dimension is at most `n`, so `pd X > n` certifies
/// non-membership.
pub fn in_subcategory_c_certified(ctx: &MonoContext, obj: &MonoObject) -> Result<Membership, MonoError> {
    let n = ctx.base_report.dimension().ok_or(MonoError::NotKnownGorenstein)?;
    Ok(match proj_dim(obj.x(), n) {
        Dim::Finite(d) => Membership::Yes(d),
        Dim::AtLeast(_) => Membership::No,
    })
}

/// `Ωⁿ(𝒞)`: `f` split, `X` projective and `Y` Gorenstein-projective.
pub fn omega_nc_membership(ctx: &MonoContext, obj: &MonoObject) -> Result<bool, MonoError> {
    if ctx.base_report.dimension().is_none() {
        return Err(MonoError::NotKnownGorenstein);
    }
    Ok(is_split_mono(&obj.map) && is_projective(obj.x()) && is_gproj(&ctx.base_report, obj.y())?)
}

/// Dimension of `Hom(s, t)` in `mono(Λ)`.
pub fn mono_hom_dim(ctx: &MonoContext, s: &MonoObject, t: &MonoObject) -> usize {
    hom_space(&ctx.module(s), &ctx.module(t)).expect("same algebra").len()
}
