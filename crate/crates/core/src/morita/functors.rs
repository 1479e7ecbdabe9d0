//! The recollement functors between `mod A`, `mod B` and the tuple category.

use alloc::vec::Vec;

use super::{phi_map, psi_map, MoritaData, MoritaError, MoritaTuple, TupleHom};
use crate::linalg::{Mat, Subspace};
use crate::module::{same_algebra, tensor_over, HomModule, Module, ModuleHom};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctorName {
    TA,
    TB,
    UA,
    UB,
    HA,
    HB,
    ZA,
    ZB,
    QA,
    QB,
    PA,
    PB,
}

impl FunctorName {
    pub const ALL: [FunctorName; 12] = [
        FunctorName::TA,
        FunctorName::TB,
        FunctorName::UA,
        FunctorName::UB,
        FunctorName::HA,
        FunctorName::HB,
        FunctorName::ZA,
        FunctorName::ZB,
        FunctorName::QA,
        FunctorName::QB,
        FunctorName::PA,
        FunctorName::PB,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctorName::TA => "T_A",
            FunctorName::TB => "T_B",
            FunctorName::UA => "U_A",
            FunctorName::UB => "U_B",
            FunctorName::HA => "H_A",
            FunctorName::HB => "H_B",
            FunctorName::ZA => "Z_A",
            FunctorName::ZB => "Z_B",
            FunctorName::QA => "Q_A",
            FunctorName::QB => "Q_B",
            FunctorName::PA => "P_A",
            FunctorName::PB => "P_B",
        }
    }

    pub fn parse(s: &str) -> Option<FunctorName> {
        FunctorName::ALL.into_iter().find(|f| f.as_str() == s)
    }

    /// Whether the functor takes tuples (as opposed to modules) as input.
    pub fn on_tuples(self) -> bool {
        matches!(
            self,
            FunctorName::UA | FunctorName::UB | FunctorName::QA | FunctorName::QB | FunctorName::PA | FunctorName::PB
        )
    }

    fn needs_zero(self) -> bool {
        matches!(
            self,
            FunctorName::ZA | FunctorName::ZB | FunctorName::QA | FunctorName::QB | FunctorName::PA | FunctorName::PB
        )
    }
}

#[derive(Clone, Debug)]
pub enum FunctorArg {
    Module(Module),
    Tuple(MoritaTuple),
    ModuleHom(ModuleHom),
    TupleHom(TupleHom),
}

#[derive(Clone, Debug)]
pub enum FunctorValue {
    Module(Module),
    Tuple(MoritaTuple),
    ModuleHom(ModuleHom),
    TupleHom(TupleHom),
}

impl FunctorValue {
    pub fn into_tuple(self) -> Option<MoritaTuple> {
        match self {
            FunctorValue::Tuple(t) => Some(t),
            _ => None,
        }
    }

    pub fn into_module(self) -> Option<Module> {
        match self {
            FunctorValue::Module(m) => Some(m),
            _ => None,
        }
    }

    pub fn into_tuple_hom(self) -> Option<TupleHom> {
        match self {
            FunctorValue::TupleHom(h) => Some(h),
            _ => None,
        }
    }

    pub fn into_module_hom(self) -> Option<ModuleHom> {
        match self {
            FunctorValue::ModuleHom(h) => Some(h),
            _ => None,
        }
    }
}

fn over_a(d: &MoritaData, x: &Module) -> Result<(), MoritaError> {
    if same_algebra(x.algebra(), d.a()) {
        Ok(())
    } else {
        Err(MoritaError::TypeMismatch)
    }
}

fn over_b(d: &MoritaData, y: &Module) -> Result<(), MoritaError> {
    if same_algebra(y.algebra(), d.b()) {
        Ok(())
    } else {
        Err(MoritaError::TypeMismatch)
    }
}

/// `T_A(X) = (X, M ⊗_A X, Id, Ψ_X)`.
pub fn t_a(d: &MoritaData, x: &Module) -> Result<MoritaTuple, MoritaError> {
    over_a(d, x)?;
    let mx = tensor_over(d.m(), x)?;
    let y = mx.module.clone();
    let ny = tensor_over(d.n(), &y)?;
    let f = ModuleHom::identity(&y);
    let g = psi_map(d, x, &mx, &ny);
    Ok(MoritaTuple::from_parts(x.clone(), y, f, g, mx, ny))
}

/// `T_A(a) = (a, Id_M ⊗ a)`.
pub fn t_a_map(d: &MoritaData, a: &ModuleHom) -> Result<TupleHom, MoritaError> {
    let s = t_a(d, a.source())?;
    let t = t_a(d, a.target())?;
    let b = s.mx().map_right(a, t.mx());
    Ok(TupleHom::new_unchecked(&s, &t, a.clone(), b))
}

/// `T_B(Y) = (N ⊗_B Y, Y, Φ_Y, Id)`.
pub fn t_b(d: &MoritaData, y: &Module) -> Result<MoritaTuple, MoritaError> {
    over_b(d, y)?;
    let ny = tensor_over(d.n(), y)?;
    let x = ny.module.clone();
    let mx = tensor_over(d.m(), &x)?;
    let f = phi_map(d, y, &ny, &mx);
    let g = ModuleHom::identity(&x);
    Ok(MoritaTuple::from_parts(x, y.clone(), f, g, mx, ny))
}

pub fn t_b_map(d: &MoritaData, b: &ModuleHom) -> Result<TupleHom, MoritaError> {
    let s = t_b(d, b.source())?;
    let t = t_b(d, b.target())?;
    let a = s.ny().map_right(b, t.ny());
    Ok(TupleHom::new_unchecked(&s, &t, a, b.clone()))
}

/// `H_A(X) = (X, Hom_A(N, X), adjoint of Ψ_X, evaluation)`.
pub fn h_a(d: &MoritaData, x: &Module) -> Result<MoritaTuple, MoritaError> {
    Ok(h_a_with_hom(d, x)?.0)
}

fn h_a_with_hom(d: &MoritaData, x: &Module) -> Result<(MoritaTuple, HomModule), MoritaError> {
    over_a(d, x)?;
    let hom = HomModule::new(d.n(), x)?;
    let (ny, g) = hom.evaluation()?;
    let mx = tensor_over(d.m(), x)?;
    let nmx = tensor_over(d.n(), &mx.module)?;
    let psi_x = psi_map(d, x, &mx, &nmx);
    let f = hom.adjoint(&mx.module, &nmx, &psi_x);
    Ok((MoritaTuple::from_parts(x.clone(), hom.module.clone(), f, g, mx, ny), hom))
}

/// `H_B(Y) = (Hom_B(M, Y), Y, evaluation, adjoint of Φ_Y)`.
pub fn h_b(d: &MoritaData, y: &Module) -> Result<MoritaTuple, MoritaError> {
    Ok(h_b_with_hom(d, y)?.0)
}

fn h_b_with_hom(d: &MoritaData, y: &Module) -> Result<(MoritaTuple, HomModule), MoritaError> {
    over_b(d, y)?;
    let hom = HomModule::new(d.m(), y)?;
    let (mx, f) = hom.evaluation()?;
    let ny = tensor_over(d.n(), y)?;
    let mny = tensor_over(d.m(), &ny.module)?;
    let phi_y = phi_map(d, y, &ny, &mny);
    let g = hom.adjoint(&ny.module, &mny, &phi_y);
    Ok((MoritaTuple::from_parts(hom.module.clone(), y.clone(), f, g, mx, ny), hom))
}

/// `Z_A(X) = (X, 0, 0, 0)`; requires `φ = ψ = 0`.
pub fn z_a(d: &MoritaData, x: &Module) -> Result<MoritaTuple, MoritaError> {
    d.require_zero()?;
    over_a(d, x)?;
    let fld = x.field();
    let y = Module::zero(d.b());
    let mx = tensor_over(d.m(), x)?;
    let ny = tensor_over(d.n(), &y)?;
    let f = ModuleHom::zero(&mx.module, &y);
    let g = ModuleHom::new_unchecked(ny.module.clone(), x.clone(), Mat::zeros(fld, x.dim(), 0));
    Ok(MoritaTuple::from_parts(x.clone(), y, f, g, mx, ny))
}

pub fn z_a_map(d: &MoritaData, a: &ModuleHom) -> Result<TupleHom, MoritaError> {
    let s = z_a(d, a.source())?;
    let t = z_a(d, a.target())?;
    Ok(TupleHom::new_unchecked(&s, &t, a.clone(), ModuleHom::zero(&s.y, &t.y)))
}

/// `Z_B(Y) = (0, Y, 0, 0)`; requires `φ = ψ = 0`.
pub fn z_b(d: &MoritaData, y: &Module) -> Result<MoritaTuple, MoritaError> {
    d.require_zero()?;
    over_b(d, y)?;
    let x = Module::zero(d.a());
    let mx = tensor_over(d.m(), &x)?;
    let ny = tensor_over(d.n(), y)?;
    let f = ModuleHom::zero(&mx.module, y);
    let g = ModuleHom::zero(&ny.module, &x);
    Ok(MoritaTuple::from_parts(x, y.clone(), f, g, mx, ny))
}

pub fn z_b_map(d: &MoritaData, b: &ModuleHom) -> Result<TupleHom, MoritaError> {
    let s = z_b(d, b.source())?;
    let t = z_b(d, b.target())?;
    Ok(TupleHom::new_unchecked(&s, &t, ModuleHom::zero(&s.x, &t.x), b.clone()))
}

/// `Q_A(X, Y, f, g) = Coker g`.
pub fn q_a(d: &MoritaData, t: &MoritaTuple) -> Result<(Module, ModuleHom), MoritaError> {
    d.require_zero()?;
    Ok(t.g.cokernel())
}

/// `Q_B(X, Y, f, g) = Coker f`.
pub fn q_b(d: &MoritaData, t: &MoritaTuple) -> Result<(Module, ModuleHom), MoritaError> {
    d.require_zero()?;
    Ok(t.f.cokernel())
}

/// Vectors `v` of `target` whose image under every `v ↦ h(l ⊗ v)` vanishes.
fn annihilated(h: &ModuleHom, t: &crate::module::Tensor, v: &Module) -> (Module, ModuleHom) {
    let fld = v.field();
    let rows = t.left_dim;
    let dt = h.target().dim();
    let mut big = Mat::zeros(fld, rows * dt, v.dim());
    for l in 0..rows {
        for j in 0..v.dim() {
            let img = h.matrix().apply(&t.pure(l, j));
            for (r, x) in img.into_iter().enumerate() {
                big.set(l * dt + r, j, x);
            }
        }
    }
    v.submodule(&Subspace::kernel_of(&big))
}

/// `P_A(X, Y, f, g) = {x : f(m ⊗ x) = 0 for all m}`, the kernel of the
/// adjoint `X -> Hom_B(M, Y)` of `f`.
pub fn p_a(d: &MoritaData, t: &MoritaTuple) -> Result<(Module, ModuleHom), MoritaError> {
    d.require_zero()?;
    Ok(annihilated(&t.f, t.mx(), &t.x))
}

/// `P_B(X, Y, f, g) = {y : g(n ⊗ y) = 0 for all n}`.
pub fn p_b(d: &MoritaData, t: &MoritaTuple) -> Result<(Module, ModuleHom), MoritaError> {
    d.require_zero()?;
    Ok(annihilated(&t.g, t.ny(), &t.y))
}

fn induced_on_cokernels(
    h: &ModuleHom,
    s: &(Module, ModuleHom),
    t: &(Module, ModuleHom),
) -> Result<ModuleHom, MoritaError> {
    s.1.factor_through_epi(&t.1.after(h))
        .ok_or(MoritaError::InvariantViolation("map does not descend to cokernels"))
}

fn induced_on_kernels(
    h: &ModuleHom,
    s: &(Module, ModuleHom),
    t: &(Module, ModuleHom),
) -> Result<ModuleHom, MoritaError> {
    t.1.factor_through_mono(&h.after(&s.1))
        .ok_or(MoritaError::InvariantViolation("map does not restrict to kernels"))
}

/// Applies one of the twelve functors to an object or a morphism.
pub fn apply_functor(name: FunctorName, d: &MoritaData, arg: &FunctorArg) -> Result<FunctorValue, MoritaError> {
    if name.needs_zero() {
        d.require_zero()?;
    }
    use FunctorName as F;
    match (name, arg) {
        (F::TA, FunctorArg::Module(x)) => Ok(FunctorValue::Tuple(t_a(d, x)?)),
        (F::TB, FunctorArg::Module(y)) => Ok(FunctorValue::Tuple(t_b(d, y)?)),
        (F::HA, FunctorArg::Module(x)) => Ok(FunctorValue::Tuple(h_a(d, x)?)),
        (F::HB, FunctorArg::Module(y)) => Ok(FunctorValue::Tuple(h_b(d, y)?)),
        (F::ZA, FunctorArg::Module(x)) => Ok(FunctorValue::Tuple(z_a(d, x)?)),
        (F::ZB, FunctorArg::Module(y)) => Ok(FunctorValue::Tuple(z_b(d, y)?)),
        (F::UA, FunctorArg::Tuple(t)) => Ok(FunctorValue::Module(t.x.clone())),
        (F::UB, FunctorArg::Tuple(t)) => Ok(FunctorValue::Module(t.y.clone())),
        (F::QA, FunctorArg::Tuple(t)) => Ok(FunctorValue::Module(q_a(d, t)?.0)),
        (F::QB, FunctorArg::Tuple(t)) => Ok(FunctorValue::Module(q_b(d, t)?.0)),
        (F::PA, FunctorArg::Tuple(t)) => Ok(FunctorValue::Module(p_a(d, t)?.0)),
        (F::PB, FunctorArg::Tuple(t)) => Ok(FunctorValue::Module(p_b(d, t)?.0)),
        (F::TA, FunctorArg::ModuleHom(a)) => Ok(FunctorValue::TupleHom(t_a_map(d, a)?)),
        (F::TB, FunctorArg::ModuleHom(b)) => Ok(FunctorValue::TupleHom(t_b_map(d, b)?)),
        (F::ZA, FunctorArg::ModuleHom(a)) => Ok(FunctorValue::TupleHom(z_a_map(d, a)?)),
        (F::ZB, FunctorArg::ModuleHom(b)) => Ok(FunctorValue::TupleHom(z_b_map(d, b)?)),
        (F::HA, FunctorArg::ModuleHom(a)) => {
            let (s, hs) = h_a_with_hom(d, a.source())?;
            let (t, ht) = h_a_with_hom(d, a.target())?;
            let b = hs.map_target(a, &ht);
            Ok(FunctorValue::TupleHom(TupleHom::new_unchecked(&s, &t, a.clone(), b)))
        }
        (F::HB, FunctorArg::ModuleHom(b)) => {
            let (s, hs) = h_b_with_hom(d, b.source())?;
            let (t, ht) = h_b_with_hom(d, b.target())?;
            let a = hs.map_target(b, &ht);
            Ok(FunctorValue::TupleHom(TupleHom::new_unchecked(&s, &t, a, b.clone())))
        }
        (F::UA, FunctorArg::TupleHom(h)) => Ok(FunctorValue::ModuleHom(h.a.clone())),
        (F::UB, FunctorArg::TupleHom(h)) => Ok(FunctorValue::ModuleHom(h.b.clone())),
        (F::QA, FunctorArg::TupleHom(h)) => {
            let (s, t) = (q_a(d, &h.source)?, q_a(d, &h.target)?);
            Ok(FunctorValue::ModuleHom(induced_on_cokernels(&h.a, &s, &t)?))
        }
        (F::QB, FunctorArg::TupleHom(h)) => {
            let (s, t) = (q_b(d, &h.source)?, q_b(d, &h.target)?);
            Ok(FunctorValue::ModuleHom(induced_on_cokernels(&h.b, &s, &t)?))
        }
        (F::PA, FunctorArg::TupleHom(h)) => {
            let (s, t) = (p_a(d, &h.source)?, p_a(d, &h.target)?);
            Ok(FunctorValue::ModuleHom(induced_on_kernels(&h.a, &s, &t)?))
        }
        (F::PB, FunctorArg::TupleHom(h)) => {
            let (s, t) = (p_b(d, &h.source)?, p_b(d, &h.target)?);
            Ok(FunctorValue::ModuleHom(induced_on_kernels(&h.b, &s, &t)?))
        }
        _ => Err(MoritaError::TypeMismatch),
    }
}

/// A verified short exact sequence `0 -> left -> middle -> right -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExactTuples {
    pub label: &'static str,
    pub inclusion: TupleHom,
    pub projection: TupleHom,
}

impl ShortExactTuples {
    pub fn dims(&self) -> [usize; 3] {
        [
            self.inclusion.source.dim(),
            self.inclusion.target.dim(),
            self.projection.target.dim(),
        ]
    }
}

fn exact(label: &'static str, u: TupleHom, v: TupleHom) -> Result<ShortExactTuples, MoritaError> {
    if !super::is_short_exact_tuples(&u, &v) {
        return Err(MoritaError::ExactnessFailure(label));
    }
    Ok(ShortExactTuples {
        label,
        inclusion: u,
        projection: v,
    })
}

/// The four canonical sequences for an `A`-module `x` and a `B`-module `y`:
///
/// ```text
/// 0 -> Z_B(M⊗X) -> T_A(X) -> Z_A(X) -> 0
/// 0 -> Z_A(N⊗Y) -> T_B(Y) -> Z_B(Y) -> 0
/// 0 -> Z_A(X) -> H_A(X) -> Z_B(Hom_A(N,X)) -> 0
/// 0 -> Z_B(Y) -> H_B(Y) -> Z_A(Hom_B(M,Y)) -> 0
/// ```
pub fn canonical_sequences(d: &MoritaData, x: &Module, y: &Module) -> Result<Vec<ShortExactTuples>, MoritaError> {
    d.require_zero()?;
    let mut out = Vec::with_capacity(4);

    let ta = t_a(d, x)?;
    let left = z_b(d, &ta.y)?;
    let right = z_a(d, x)?;
    let u = TupleHom::new_unchecked(&left, &ta, ModuleHom::zero(&left.x, &ta.x), ModuleHom::identity(&ta.y));
    let v = TupleHom::new_unchecked(&ta, &right, ModuleHom::identity(x), ModuleHom::zero(&ta.y, &right.y));
    out.push(exact("0 -> Z_B(M⊗X) -> T_A(X) -> Z_A(X) -> 0", u, v)?);

    let tb = t_b(d, y)?;
    let left = z_a(d, &tb.x)?;
    let right = z_b(d, y)?;
    let u = TupleHom::new_unchecked(&left, &tb, ModuleHom::identity(&tb.x), ModuleHom::zero(&left.y, &tb.y));
    let v = TupleHom::new_unchecked(&tb, &right, ModuleHom::zero(&tb.x, &right.x), ModuleHom::identity(y));
    out.push(exact("0 -> Z_A(N⊗Y) -> T_B(Y) -> Z_B(Y) -> 0", u, v)?);

    let ha = h_a(d, x)?;
    let left = z_a(d, x)?;
    let right = z_b(d, &ha.y)?;
    let u = TupleHom::new_unchecked(&left, &ha, ModuleHom::identity(x), ModuleHom::zero(&left.y, &ha.y));
    let v = TupleHom::new_unchecked(&ha, &right, ModuleHom::zero(&ha.x, &right.x), ModuleHom::identity(&ha.y));
    out.push(exact("0 -> Z_A(X) -> H_A(X) -> Z_B(Hom_A(N,X)) -> 0", u, v)?);

    let hb = h_b(d, y)?;
    let left = z_b(d, y)?;
    let right = z_a(d, &hb.x)?;
    let u = TupleHom::new_unchecked(&left, &hb, ModuleHom::zero(&left.x, &hb.x), ModuleHom::identity(y));
    let v = TupleHom::new_unchecked(&hb, &right, ModuleHom::identity(&hb.x), ModuleHom::zero(&hb.y, &right.y));
    out.push(exact("0 -> Z_B(Y) -> H_B(Y) -> Z_A(Hom_B(M,Y)) -> 0", u, v)?);

    Ok(out)
}
