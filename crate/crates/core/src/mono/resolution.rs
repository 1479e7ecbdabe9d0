//! Projective covers in `mono(Λ)` by gluing `T₁` and `Z₂` covers, and
//! resolutions by Gorenstein-projective objects.

use alloc::vec;
use alloc::vec::Vec;

use super::{gproj_mono_test, in_subcategory_c, Membership, MonoContext, MonoError, MonoObject};
use crate::linalg::{solve, Mat};
use crate::module::{free_cover, Module, ModuleHom};
use crate::morita::{tuple_kernel_cokernel, TupleHom};

/// The cover `(F, F ⊕ F′, incl) -> (X, Y, f)` with `F -> X` a free cover of
/// `X` and `F′ -> Y` a lift of a free cover of `Coker f`.
pub fn projective_cover(ctx: &MonoContext, obj: &MonoObject) -> Result<(MonoObject, TupleHom), MonoError> {
    let base = ctx.base();
    let fld = base.field();
    let d = base.dim();
    let y = obj.y();
    let p = free_cover(obj.x()).map;
    let (_, pi) = obj.cokernel();
    let q = free_cover(pi.target()).map;
    let s = q.source().dim() / d.max(1);
    let mut lift = Mat::zeros(fld, y.dim(), q.source().dim());
    for g in 0..s {
        let mut c = vec![0u64; pi.target().dim()];
        for (b, &u) in base.unit().iter().enumerate() {
            if u != 0 {
                for (ci, v) in c.iter_mut().zip(q.matrix().col(g * d + b)) {
                    *ci = fld.add(*ci, fld.mul(u, v));
                }
            }
        }
        let yg = solve(pi.matrix(), &Mat::column(fld, &c)).map_err(crate::module::ModuleError::from)?.col(0);
        for b in 0..d {
            let col = y.act(b).apply(&yg);
            for (r, v) in col.into_iter().enumerate() {
                lift.set(r, g * d + b, v);
            }
        }
    }
    let sum = Module::direct_sum(base, &[p.source().clone(), q.source().clone()]);
    let cover = MonoObject::from_map(ctx, &sum.inclusions[0])?;
    let fp = obj.map().after(&p);
    let b = Mat::hstack(&[fp.matrix(), &lift]).map_err(crate::module::ModuleError::from)?;
    let h = TupleHom::new(cover.tuple(), obj.tuple(), p.matrix().clone(), b)?;
    debug_assert!(h.a.is_surjective() && h.b.is_surjective());
    Ok((cover, h))
}

/// `0 -> G_m -> ... -> G_0 -> obj -> 0` with every `G_j` in `Gproj(mono(Λ))`.
#[derive(Clone, Debug)]
pub struct GprojResolution {
    pub object: MonoObject,
    pub terms: Vec<MonoObject>,
    /// `G_0 -> obj`.
    pub augmentation: TupleHom,
    /// `differentials[j - 1]: G_j -> G_{j-1}`.
    pub differentials: Vec<TupleHom>,
}

fn component_exact(maps: &[&ModuleHom]) -> bool {
    let (Some(first), Some(last)) = (maps.first(), maps.last()) else {
        return true;
    };
    if !first.is_injective() || !last.is_surjective() {
        return false;
    }
    maps.windows(2).all(|w| {
        let (inn, out) = (w[0], w[1]);
        out.matrix().dot(inn.matrix()).is_zero() && inn.rank() + out.rank() == out.source().dim()
    })
}

impl GprojResolution {
    pub fn length(&self) -> usize {
        self.terms.len() - 1
    }

    /// Exactness on both components by ranks, and membership of every term.
    pub fn verify(&self, ctx: &MonoContext) -> Result<bool, MonoError> {
        let mut maps: Vec<&TupleHom> = self.differentials.iter().rev().collect();
        maps.push(&self.augmentation);
        let a: Vec<&ModuleHom> = maps.iter().map(|h| &h.a).collect();
        let b: Vec<&ModuleHom> = maps.iter().map(|h| &h.b).collect();
        if !component_exact(&a) || !component_exact(&b) || maps.iter().any(|h| h.validate().is_err()) {
            return Ok(false);
        }
        for t in &self.terms {
            if !gproj_mono_test(ctx, t)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Resolves an object of `𝒞` by projective covers until the syzygy is
/// Gorenstein-projective, which happens by step `n` over an `n`-Gorenstein
/// base. Membership in `𝒞` is required up to `bound`.
pub fn gorenstein_subcat_resolution(
    ctx: &MonoContext,
    obj: &MonoObject,
    bound: usize,
) -> Result<GprojResolution, MonoError> {
    let n = ctx.base_report().dimension().ok_or(MonoError::NotKnownGorenstein)?;
    if !matches!(in_subcategory_c(obj, bound), Membership::Yes(_)) {
        return Err(MonoError::HypothesisFailed("pd X is not certified finite"));
    }
    let mut terms = Vec::new();
    let mut maps = Vec::new();
    let mut current = obj.clone();
    let mut into_prev = TupleHom::identity(obj.tuple());
    for j in 0..=n {
        if gproj_mono_test(ctx, &current)? {
            terms.push(current);
            maps.push(into_prev);
            break;
        }
        if j == n {
            return Err(MonoError::HypothesisFailed("n-th syzygy is not Gorenstein-projective"));
        }
        let (cover, p) = projective_cover(ctx, &current)?;
        maps.push(into_prev.after(&p));
        terms.push(cover);
        let kc = tuple_kernel_cokernel(ctx.delta(), &p)?;
        current = MonoObject::from_tuple(ctx, &kc.kernel)?;
        into_prev = kc.inclusion;
    }
    let mut maps = maps.into_iter();
    let augmentation = maps.next().expect("at least one term");
    let res = GprojResolution {
        object: obj.clone(),
        terms,
        augmentation,
        differentials: maps.collect(),
    };
    if !res.verify(ctx)? {
        return Err(MonoError::HypothesisFailed("resolution fails verification"));
    }
    Ok(res)
}
