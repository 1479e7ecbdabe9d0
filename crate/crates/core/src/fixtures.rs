//! Small named examples used by tests, the acceptance suite and the CLI.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{path_algebra, truncated_polynomial, Algebra, Quiver};
use crate::field::PrimeField;
use crate::linalg::{Mat, Subspace};
use crate::module::{Module, ModuleHom};
use crate::mono::{MonoContext, MonoObject};
use crate::morita::{MoritaData, MoritaTuple};

pub fn gf101() -> PrimeField {
    PrimeField::new(101).expect("101 is prime")
}

/// `k[x]/(x²)` over GF(101), basis `{1, x}`.
pub fn dual_numbers() -> Arc<Algebra> {
    truncated_polynomial(gf101(), 2)
}

/// Path algebra of `0 -> 1` over GF(101), basis `{e0, e1, α}`.
pub fn a2() -> Arc<Algebra> {
    path_algebra(gf101(), &Quiver::new(2, vec![(0, 1)])).expect("acyclic")
}

/// `k[x_1, ..., x_n] / (x_1, ..., x_n)²` over GF(101), basis `{1, x_1, ..., x_n}`.
/// For `n ≥ 2` it is not Gorenstein.
pub fn radical_square_zero(n: usize) -> Arc<Algebra> {
    let d = n + 1;
    let mut mult = vec![0u64; d * d * d];
    for i in 0..d {
        mult[i * d + i] = 1;
        mult[(i * d) * d + i] = 1;
    }
    let mut unit = vec![0u64; d];
    unit[0] = 1;
    Algebra::new(gf101(), d, mult, unit).expect("commutative local algebra")
}

/// The one-dimensional module where basis element `i` acts by `weights[i]`.
fn one_dim(a: &Arc<Algebra>, weights: &[u64]) -> Module {
    let f = a.field();
    let action = weights.iter().map(|&w| Mat::from_vec(f, 1, 1, vec![w]).expect("1x1")).collect();
    Module::new(a.clone(), 1, action).expect("one-dimensional module")
}

/// `k = Λ/(x)` over the dual numbers.
pub fn dual_simple(a: &Arc<Algebra>) -> Module {
    one_dim(a, &[1, 0])
}

/// The simple modules `S0` (projective) and `S1` (projective dimension 1)
/// of the A₂ path algebra.
pub fn a2_simples() -> [Module; 2] {
    let a = a2();
    [one_dim(&a, &[1, 0, 0]), one_dim(&a, &[0, 1, 0])]
}

/// `Λ e_v` for the A₂ path algebra.
pub fn a2_projective(v: usize) -> Module {
    let a = a2();
    let e = a.basis_vector(v);
    projective_summand(&a, &e)
}

/// `Λ e` for an idempotent `e`.
pub fn projective_summand(a: &Arc<Algebra>, e: &[u64]) -> Module {
    let reg = Module::regular(a);
    let r = a.right_mult_by(e);
    let span = Subspace::column_space(&r);
    reg.submodule(&span).0
}

/// Vertex idempotents of a path algebra, in vertex order.
pub fn vertex_idempotents(a: &Arc<Algebra>, vertices: usize) -> Vec<Vec<u64>> {
    (0..vertices).map(|v| a.basis_vector(v)).collect()
}

/// `Δ_(0,0) = (Λ Λ; Λ Λ)` over the dual numbers.
pub fn delta_dual() -> MoritaData {
    MoritaData::delta(&dual_numbers(), false).expect("Δ_(0,0) is a Morita ring")
}

/// Morita data `(A N; N A)` over A₂ with `N = Ae0 ⊗_k e1A`, so `N ⊗_A N = 0`.
pub fn a2_morita() -> MoritaData {
    let a = a2();
    MoritaData::from_idempotents(&a, &a.basis_vector(0), &a.basis_vector(1)).expect("e1·A·e0 = 0")
}

/// The tuple `(Λ, Λ, c_f·, c_g·)` over `Δ = (Λ Λ; Λ Λ)` for a commutative
/// `Λ`, where `f(m ⊗ y) = c_f·m·y` and `g(n ⊗ x) = c_g·n·x`.
pub fn regular_tuple(d: &MoritaData, cf: &[u64], cg: &[u64]) -> Result<MoritaTuple, crate::morita::MoritaError> {
    let a = d.a();
    let fld = a.field();
    let dim = a.dim();
    let on_pure = |c: &[u64]| {
        let cols: Vec<Vec<u64>> = (0..dim * dim)
            .map(|k| a.mul(c, &a.mul(&a.basis_vector(k / dim), &a.basis_vector(k % dim))))
            .collect();
        Mat::from_columns(fld, dim, &cols)
    };
    let reg = Module::regular(a);
    let mx = crate::module::tensor_over(d.m(), &reg)?;
    let ny = crate::module::tensor_over(d.n(), &reg)?;
    let f = on_pure(cf).dot(&mx.lift);
    let g = on_pure(cg).dot(&ny.lift);
    MoritaTuple::new(d, reg.clone(), reg, f, g)
}

/// The five indecomposables of `mono(k[x]/(x²))`: `(0→k)`, `(0→Λ)`,
/// `(k→k)`, `(Λ→Λ)` and `(k→Λ)`, with `k ↪ Λ` onto the socle.
pub fn dual_mono_indecomposables(ctx: &MonoContext) -> Vec<MonoObject> {
    let a = ctx.base();
    let fld = a.field();
    let k = dual_simple(a);
    let reg = Module::regular(a);
    let zero = Module::zero(a);
    let socle = Mat::from_vec(fld, 2, 1, vec![0, 1]).expect("2x1");
    let maps = [
        ModuleHom::zero(&zero, &k),
        ModuleHom::zero(&zero, &reg),
        ModuleHom::identity(&k),
        ModuleHom::identity(&reg),
        ModuleHom::new(k.clone(), reg.clone(), socle).expect("socle inclusion"),
    ];
    maps.iter()
        .map(|f| MonoObject::from_map(ctx, f).expect("monomorphism"))
        .collect()
}
