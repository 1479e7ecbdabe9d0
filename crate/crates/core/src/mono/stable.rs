//! Stable Hom spaces and stable endomorphism algebras of additive generators.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{MonoContext, MonoError, MonoObject};
use crate::algebra::{quotient_by_ideal, validate_algebra, zero_algebra, Algebra};
use crate::gorenstein::{gorenstein_dimension, GorensteinReport, GorensteinVerdict};
use crate::linalg::{solve, Mat, Subspace};
use crate::module::{free_cover, global_dimension, hom_space, same_algebra, Dim, Module, ModuleError, ModuleHom};

/// Span of the maps `x -> y` factoring through a projective, as flattened
/// matrices. Every such map factors through the free cover of `y`.
fn projective_factoring(x: &Module, y: &Module) -> Subspace {
    let cover = free_cover(y).map;
    let through = hom_space(x, cover.source()).expect("same algebra");
    let vecs: Vec<Vec<u64>> = through.iter().map(|h| cover.after(h).matrix().vec_cols()).collect();
    Subspace::spanned_by(x.field(), x.dim() * y.dim(), &vecs)
}

/// `dim Hom(x, y)` modulo maps factoring through projectives.
pub fn stable_hom(x: &Module, y: &Module) -> Result<usize, ModuleError> {
    if !same_algebra(x.algebra(), y.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let homs = hom_space(x, y)?;
    if homs.is_empty() {
        return Ok(0);
    }
    Ok(homs.len() - projective_factoring(x, y).dim())
}

/// [`stable_hom`] in `mono(Λ)`, computed over `T₂(Λ)`: the projectives of
/// `mono(Λ)` are exactly the projective `T₂(Λ)`-modules.
pub fn stable_hom_mono(ctx: &MonoContext, x: &MonoObject, y: &MonoObject) -> usize {
    stable_hom(&ctx.module(x), &ctx.module(y)).expect("same algebra")
}

/// `End(G)` for `G = ⊕ objects`, its ideal of projectively trivial maps and
/// the stable quotient `Γ`.
#[derive(Clone, Debug)]
pub struct StableAlgebraBundle {
    pub generators: Vec<Module>,
    /// The caller's claim that `generators` additively generate the category.
    pub generation_asserted: bool,
    pub sum: Module,
    /// Basis of `End(G)`; the algebra product is composition, `b_i b_j = E_i ∘ E_j`.
    pub end_basis: Vec<ModuleHom>,
    pub end_algebra: Arc<Algebra>,
    /// In coordinates of `end_basis`.
    pub ideal: Subspace,
    pub stable: Arc<Algebra>,
}

impl StableAlgebraBundle {
    pub fn end_dim(&self) -> usize {
        self.end_basis.len()
    }

    pub fn ideal_dim(&self) -> usize {
        self.ideal.dim()
    }

    /// `Γ = 0`, as for a projective generator.
    pub fn is_degenerate(&self) -> bool {
        self.stable.dim() == 0
    }
}

/// Builds `End(⊕ objects)`, the ideal spanned by composites through the free
/// cover, and `Γ` as the quotient algebra.
pub fn stable_endomorphism_algebra(
    objects: &[Module],
    generation_asserted: bool,
) -> Result<StableAlgebraBundle, MonoError> {
    let first = objects.first().ok_or(MonoError::HypothesisFailed("empty generator list"))?;
    let alg = first.algebra().clone();
    if objects.iter().any(|o| !same_algebra(o.algebra(), &alg)) {
        return Err(ModuleError::AlgebraMismatch.into());
    }
    let fld = alg.field();
    let sum = Module::direct_sum(&alg, objects).module;
    let g = sum.dim();
    let basis = hom_space(&sum, &sum)?;
    let m = basis.len();
    if m == 0 {
        let z = zero_algebra(fld);
        return Ok(StableAlgebraBundle {
            generators: objects.to_vec(),
            generation_asserted,
            sum,
            end_basis: basis,
            end_algebra: z.clone(),
            ideal: Subspace::zero(fld, 0),
            stable: z,
        });
    }
    let cols: Vec<Vec<u64>> = basis.iter().map(|e| e.matrix().vec_cols()).collect();
    let bm = Mat::from_columns(fld, g * g, &cols);
    let coords = |h: &Mat| -> Result<Vec<u64>, MonoError> {
        let c = solve(&bm, &Mat::column(fld, &h.vec_cols())).map_err(ModuleError::from)?;
        Ok(c.col(0))
    };
    let mut mult = Vec::with_capacity(m * m * m);
    for ei in &basis {
        for ej in &basis {
            mult.extend(coords(ei.after(ej).matrix())?);
        }
    }
    let unit = coords(&Mat::identity(fld, g))?;
    let end_algebra = Algebra::new(fld, m, mult, unit)?;
    let factoring = projective_factoring(&sum, &sum);
    let gens = factoring
        .basis()
        .iter()
        .map(|v| coords(&Mat::unvec_cols(fld, g, g, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let ideal = Subspace::spanned_by(fld, m, &gens);
    if !end_algebra.is_two_sided_ideal(&ideal) {
        return Err(MonoError::HypothesisFailed("projectively trivial maps do not form an ideal"));
    }
    let stable = if ideal.dim() == m {
        zero_algebra(fld)
    } else {
        quotient_by_ideal(&end_algebra, &ideal)?.0
    };
    validate_algebra(&stable).map_err(MonoError::InvalidAlgebra)?;
    Ok(StableAlgebraBundle {
        generators: objects.to_vec(),
        generation_asserted,
        sum,
        end_basis: basis,
        end_algebra,
        ideal,
        stable,
    })
}

/// Where a bundle's generator comes from, which fixes the claim to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BundleSource {
    /// The stable category of `𝒞` over an `n`-Gorenstein base: `Γ` is
    /// at most `3n`-Gorenstein.
    CBar { n: usize },
    /// The stable category of `Ωⁿ(𝒞)`: `Γ` is selfinjective.
    OmegaBar,
    /// An additive generator of `mono(Λ)`: `gldim End ≤ 2`.
    MonoGenerator,
}

#[derive(Clone, Debug)]
pub struct FunctorCategoryReport {
    pub source: BundleSource,
    pub gamma: GorensteinReport,
    /// `id Γ = 0` on both sides.
    pub frobenius: bool,
    pub end_gldim: Dim,
}

/// Gorenstein verdict of `Γ`, the Frobenius flag and `gldim End(G)`, with
/// the claim for `source` asserted on the computed values.
pub fn functor_category_report(
    bundle: &StableAlgebraBundle,
    source: BundleSource,
    bound: usize,
) -> Result<FunctorCategoryReport, MonoError> {
    let gamma = gorenstein_dimension(&bundle.stable, bound);
    let frobenius = gamma.left_id == Dim::Finite(0) && gamma.right_id == Dim::Finite(0);
    let end_gldim = global_dimension(&bundle.end_algebra, bound)?;
    let (ok, claim) = match source {
        BundleSource::CBar { n } => (
            matches!(gamma.verdict, GorensteinVerdict::Gorenstein(d) if d <= 3 * n),
            "Γ is at most 3n-Gorenstein",
        ),
        BundleSource::OmegaBar => (frobenius, "Γ is selfinjective"),
        BundleSource::MonoGenerator => (matches!(end_gldim, Dim::Finite(d) if d <= 2), "gldim End(G) ≤ 2"),
    };
    if !ok {
        return Err(MonoError::AssertionFailed {
            claim,
            gamma: gamma.verdict,
            end_gldim,
        });
    }
    Ok(FunctorCategoryReport {
        source,
        gamma,
        frobenius,
        end_gldim,
    })
}
