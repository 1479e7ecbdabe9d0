//! Left modules, homomorphisms, bimodules, and the homological engine.
//!
//! A module over `A` of dimension `d` stores one `d x d` matrix per basis
//! element of `A`; vectors are columns, so `ρ(b_i) ρ(b_j) = Σ_k c_ijk ρ(b_k)`.
//! A homomorphism `h: M -> N` is a `dim N x dim M` matrix with
//! `h ρ_M(b) = ρ_N(b) h`. Composition is ordinary function composition:
//! `g.after(&f)` is `g ∘ f`.

mod bimodule;
mod hom;
mod resolution;
mod tensor;

pub use bimodule::Bimodule;
pub use hom::{find_isomorphism, hom_space, HomModule};
pub use resolution::{
    ext_dim, free_cover, global_dimension, inj_dim, is_projective, proj_dim, syzygy, tor_dim,
    CoverStrategy, Dim, FreeCover, FreeResolution,
};
pub(crate) use resolution::{split_summand, summand_space};
pub use tensor::{tensor_bimodules, tensor_over, BiTensor, Tensor};

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{opposite_algebra, Algebra, AlgebraError};
use crate::field::PrimeField;
use crate::linalg::{LinalgError, Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleError {
    AlgebraMismatch,
    DimensionMismatch { expected: usize, got: usize },
    /// Action matrices violate the module law for the basis pair `(i, j)`.
    ActionLaw { i: usize, j: usize },
    UnitNotIdentity,
    /// A homomorphism fails to commute with the action of basis element `b`.
    NotEquivariant { b: usize },
    /// Left and right actions of a bimodule fail to commute.
    ActionsDoNotCommute { left: usize, right: usize },
    BoundTooSmall { needed: usize, got: usize },
    Linalg(LinalgError),
    Algebra(AlgebraError),
}

impl fmt::Display for ModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleError::AlgebraMismatch => write!(f, "objects live over different algebras"),
            ModuleError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            ModuleError::ActionLaw { i, j } => {
                write!(f, "action matrices violate the module law on basis pair ({i},{j})")
            }
            ModuleError::UnitNotIdentity => write!(f, "the unit does not act as the identity"),
            ModuleError::NotEquivariant { b } => {
                write!(f, "map does not commute with basis element {b}")
            }
            ModuleError::ActionsDoNotCommute { left, right } => write!(
                f,
                "left action of {left} and right action of {right} do not commute"
            ),
            ModuleError::BoundTooSmall { needed, got } => {
                write!(f, "resolution length {got} too small, need {needed}")
            }
            ModuleError::Linalg(e) => write!(f, "{e}"),
            ModuleError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for ModuleError {}

impl From<LinalgError> for ModuleError {
    fn from(e: LinalgError) -> Self {
        ModuleError::Linalg(e)
    }
}

impl From<AlgebraError> for ModuleError {
    fn from(e: AlgebraError) -> Self {
        ModuleError::Algebra(e)
    }
}

/// Whether two algebra handles denote the same algebra.
pub fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A finite-dimensional left module.
#[derive(Clone)]
pub struct Module {
    algebra: Arc<Algebra>,
    dim: usize,
    action: Arc<Vec<Mat>>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over dim-{} algebra)", self.dim, self.algebra.dim())
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && same_algebra(&self.algebra, &other.algebra)
            && self.action == other.action
    }
}

impl Eq for Module {}

/// Checks `ρ(b_i)ρ(b_j) = Σ_k c_ijk ρ(b_k)` and `ρ(1) = I`.
pub fn check_action(a: &Algebra, dim: usize, action: &[Mat]) -> Result<(), ModuleError> {
    if action.len() != a.dim() {
        return Err(ModuleError::DimensionMismatch {
            expected: a.dim(),
            got: action.len(),
        });
    }
    for m in action {
        if m.shape() != (dim, dim) {
            return Err(ModuleError::DimensionMismatch {
                expected: dim,
                got: m.rows(),
            });
        }
    }
    let unit = combine(a.field(), dim, action, a.unit());
    if a.dim() > 0 && unit != Mat::identity(a.field(), dim) {
        return Err(ModuleError::UnitNotIdentity);
    }
    for i in 0..a.dim() {
        for j in 0..a.dim() {
            let lhs = action[i].dot(&action[j]);
            let rhs = combine(a.field(), dim, action, a.basis_product(i, j));
            if lhs != rhs {
                return Err(ModuleError::ActionLaw { i, j });
            }
        }
    }
    Ok(())
}

pub(crate) fn combine(field: PrimeField, dim: usize, mats: &[Mat], x: &[u64]) -> Mat {
    let mut m = Mat::zeros(field, dim, dim);
    for (i, &c) in x.iter().enumerate() {
        if c != 0 {
            m.add_scaled(c, &mats[i]);
        }
    }
    m
}

impl Module {
    /// Builds a module, checking the action laws.
    pub fn new(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Result<Module, ModuleError> {
        check_action(&algebra, dim, &action)?;
        Ok(Module::new_unchecked(algebra, dim, action))
    }

    pub fn new_unchecked(algebra: Arc<Algebra>, dim: usize, action: Vec<Mat>) -> Module {
        Module {
            algebra,
            dim,
            action: Arc::new(action),
        }
    }

    pub fn zero(algebra: &Arc<Algebra>) -> Module {
        let f = algebra.field();
        Module::new_unchecked(
            algebra.clone(),
            0,
            (0..algebra.dim()).map(|_| Mat::zeros(f, 0, 0)).collect(),
        )
    }

    /// The regular module `Λ`.
    pub fn regular(algebra: &Arc<Algebra>) -> Module {
        Module::new_unchecked(
            algebra.clone(),
            algebra.dim(),
            (0..algebra.dim()).map(|i| algebra.left_mult(i).clone()).collect(),
        )
    }

    /// The free module `Λ^rank`; generator `g` spans coordinates
    /// `g*dim..(g+1)*dim`.
    pub fn free(algebra: &Arc<Algebra>, rank: usize) -> Module {
        let f = algebra.field();
        let action = (0..algebra.dim())
            .map(|i| {
                let l = algebra.left_mult(i);
                Mat::block_diag(f, &vec![l; rank])
            })
            .collect();
        Module::new_unchecked(algebra.clone(), rank * algebra.dim(), action)
    }

    /// Top of the regular module, `Λ / rad Λ`.
    pub fn top(algebra: &Arc<Algebra>) -> Result<Module, ModuleError> {
        let rad = algebra.radical()?.clone();
        Ok(Module::regular(algebra).quotient(&rad).0)
    }

    #[inline]
    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.algebra.field()
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Action matrix of basis element `i`.
    #[inline]
    pub fn act(&self, i: usize) -> &Mat {
        &self.action[i]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    /// Action matrix of an arbitrary algebra element.
    pub fn act_by(&self, x: &[u64]) -> Mat {
        combine(self.field(), self.dim, &self.action, x)
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        check_action(&self.algebra, self.dim, &self.action)
    }

    /// Smallest submodule containing the given vectors.
    pub fn submodule_generated(&self, vectors: &[Vec<u64>]) -> Subspace {
        let mut s = Subspace::zero(self.field(), self.dim);
        let mut queue = VecDeque::new();
        for v in vectors {
            if s.insert(v) {
                queue.push_back(v.clone());
            }
        }
        let gens = self.algebra.generators().to_vec();
        while let Some(v) = queue.pop_front() {
            for &g in &gens {
                let w = self.action[g].apply(&v);
                if s.insert(&w) {
                    queue.push_back(w);
                }
            }
        }
        s
    }

    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.basis()
            .iter()
            .all(|v| self.action.iter().all(|m| s.contains(&m.apply(v))))
    }

    /// The submodule on a closed subspace, in the echelon basis of `s`,
    /// together with its inclusion.
    pub fn submodule(&self, s: &Subspace) -> (Module, ModuleHom) {
        debug_assert!(self.is_submodule(s));
        let basis = s.basis_matrix();
        let coords = s.coordinate_map();
        let action = self
            .action
            .iter()
            .map(|m| coords.dot(&m.dot(&basis)))
            .collect();
        let sub = Module::new_unchecked(self.algebra.clone(), s.dim(), action);
        let inc = ModuleHom::new_unchecked(sub.clone(), self.clone(), basis);
        (sub, inc)
    }

    /// Quotient by a closed subspace, with basis indexed by the complement
    /// coordinates of `s`, together with the projection.
    pub fn quotient(&self, s: &Subspace) -> (Module, ModuleHom) {
        debug_assert!(self.is_submodule(s));
        let q = s.quotient_map();
        let lift = s.quotient_lift();
        let action = self.action.iter().map(|m| q.dot(&m.dot(&lift))).collect();
        let quo = Module::new_unchecked(self.algebra.clone(), q.rows(), action);
        let proj = ModuleHom::new_unchecked(self.clone(), quo.clone(), q);
        (quo, proj)
    }

    /// Direct sum with canonical inclusions and projections.
    pub fn direct_sum(algebra: &Arc<Algebra>, parts: &[Module]) -> DirectSum {
        let f = algebra.field();
        let dim: usize = parts.iter().map(|m| m.dim).sum();
        let action = (0..algebra.dim())
            .map(|i| {
                let blocks: Vec<&Mat> = parts.iter().map(|m| &m.action[i]).collect();
                Mat::block_diag(f, &blocks)
            })
            .collect();
        let sum = Module::new_unchecked(algebra.clone(), dim, action);
        let mut inclusions = Vec::new();
        let mut projections = Vec::new();
        let mut off = 0;
        for m in parts {
            let mut inc = Mat::zeros(f, dim, m.dim);
            inc.set_block(off, 0, &Mat::identity(f, m.dim));
            projections.push(ModuleHom::new_unchecked(sum.clone(), m.clone(), inc.transpose()));
            inclusions.push(ModuleHom::new_unchecked(m.clone(), sum.clone(), inc));
            off += m.dim;
        }
        DirectSum {
            module: sum,
            inclusions,
            projections,
        }
    }

    /// `self ⊕ other`.
    pub fn oplus(&self, other: &Module) -> Module {
        Module::direct_sum(&self.algebra, &[self.clone(), other.clone()]).module
    }

    /// The contragredient dual, a module over the opposite algebra.
    pub fn dual(&self) -> Module {
        self.dual_over(&opposite_algebra(&self.algebra))
    }

    /// The dual over a caller-supplied copy of the opposite algebra.
    pub fn dual_over(&self, op: &Arc<Algebra>) -> Module {
        Module::new_unchecked(
            op.clone(),
            self.dim,
            self.action.iter().map(|m| m.transpose()).collect(),
        )
    }

    /// Same action matrices viewed over an equal algebra handle.
    pub fn rebase(&self, algebra: &Arc<Algebra>) -> Result<Module, ModuleError> {
        if !same_algebra(&self.algebra, algebra) {
            return Err(ModuleError::AlgebraMismatch);
        }
        Ok(Module {
            algebra: algebra.clone(),
            dim: self.dim,
            action: self.action.clone(),
        })
    }
}

/// Output of [`Module::direct_sum`].
#[derive(Clone, Debug)]
pub struct DirectSum {
    pub module: Module,
    pub inclusions: Vec<ModuleHom>,
    pub projections: Vec<ModuleHom>,
}

/// A module homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleHom {
    source: Module,
    target: Module,
    matrix: Mat,
}

/// Kernel, cokernel and image of a homomorphism with structural maps.
#[derive(Clone, Debug)]
pub struct KernelCokernel {
    pub kernel: Module,
    pub inclusion: ModuleHom,
    pub cokernel: Module,
    pub projection: ModuleHom,
    pub image: Module,
    /// `source -> image`.
    pub onto_image: ModuleHom,
    /// `image -> target`.
    pub image_inclusion: ModuleHom,
}

impl ModuleHom {
    /// Builds a homomorphism, checking shapes and equivariance.
    pub fn new(source: Module, target: Module, matrix: Mat) -> Result<ModuleHom, ModuleError> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(ModuleError::AlgebraMismatch);
        }
        if matrix.shape() != (target.dim, source.dim) {
            return Err(ModuleError::DimensionMismatch {
                expected: target.dim * source.dim,
                got: matrix.rows() * matrix.cols(),
            });
        }
        let h = ModuleHom::new_unchecked(source, target, matrix);
        h.check_equivariant()?;
        Ok(h)
    }

    pub fn new_unchecked(source: Module, target: Module, matrix: Mat) -> ModuleHom {
        debug_assert_eq!(matrix.shape(), (target.dim, source.dim));
        ModuleHom {
            source,
            target,
            matrix,
        }
    }

    pub fn identity(m: &Module) -> ModuleHom {
        ModuleHom::new_unchecked(m.clone(), m.clone(), Mat::identity(m.field(), m.dim))
    }

    pub fn zero(source: &Module, target: &Module) -> ModuleHom {
        ModuleHom::new_unchecked(
            source.clone(),
            target.clone(),
            Mat::zeros(source.field(), target.dim, source.dim),
        )
    }

    #[inline]
    pub fn source(&self) -> &Module {
        &self.source
    }

    #[inline]
    pub fn target(&self) -> &Module {
        &self.target
    }

    #[inline]
    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn check_equivariant(&self) -> Result<(), ModuleError> {
        for b in 0..self.source.algebra.dim() {
            if self.matrix.dot(self.source.act(b)) != self.target.act(b).dot(&self.matrix) {
                return Err(ModuleError::NotEquivariant { b });
            }
        }
        Ok(())
    }

    pub fn is_equivariant(&self) -> bool {
        self.check_equivariant().is_ok()
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &ModuleHom) -> ModuleHom {
        assert_eq!(first.target.dim, self.source.dim, "composable maps");
        ModuleHom::new_unchecked(
            first.source.clone(),
            self.target.clone(),
            self.matrix.dot(&first.matrix),
        )
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        ModuleHom::new_unchecked(
            self.source.clone(),
            self.target.clone(),
            self.matrix.add(&other.matrix).expect("same shape"),
        )
    }

    pub fn scale(&self, c: u64) -> ModuleHom {
        ModuleHom::new_unchecked(self.source.clone(), self.target.clone(), self.matrix.scale(c))
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.dim
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.dim
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dim == self.target.dim && self.is_injective()
    }

    /// Inverse of an isomorphism.
    pub fn inverse(&self) -> Option<ModuleHom> {
        let inv = self.matrix.inverse()?;
        Some(ModuleHom::new_unchecked(self.target.clone(), self.source.clone(), inv))
    }

    /// Same matrix between replacement source and target of equal dimensions.
    pub fn retarget(&self, source: &Module, target: &Module) -> ModuleHom {
        assert_eq!(source.dim, self.source.dim);
        assert_eq!(target.dim, self.target.dim);
        ModuleHom::new_unchecked(source.clone(), target.clone(), self.matrix.clone())
    }

    pub fn kernel_subspace(&self) -> Subspace {
        Subspace::kernel_of(&self.matrix)
    }

    pub fn image_subspace(&self) -> Subspace {
        Subspace::column_space(&self.matrix)
    }

    pub fn kernel_cokernel(&self) -> KernelCokernel {
        let (kernel, inclusion) = self.source.submodule(&self.kernel_subspace());
        let im = self.image_subspace();
        let (cokernel, projection) = self.target.quotient(&im);
        let (image, image_inclusion) = self.target.submodule(&im);
        let onto = im.coordinate_map().dot(&self.matrix);
        let onto_image = ModuleHom::new_unchecked(self.source.clone(), image.clone(), onto);
        KernelCokernel {
            kernel,
            inclusion,
            cokernel,
            projection,
            image,
            onto_image,
            image_inclusion,
        }
    }

    /// Kernel with inclusion.
    pub fn kernel(&self) -> (Module, ModuleHom) {
        self.source.submodule(&self.kernel_subspace())
    }

    /// Cokernel with projection.
    pub fn cokernel(&self) -> (Module, ModuleHom) {
        self.target.quotient(&self.image_subspace())
    }

    /// The unique `h` with `h ∘ self = g`, for `self` surjective and `g`
    /// vanishing on `ker self`.
    pub fn factor_through_epi(&self, g: &ModuleHom) -> Option<ModuleHom> {
        let x = crate::linalg::solve(&self.matrix.transpose(), &g.matrix.transpose()).ok()?;
        let h = x.transpose();
        if h.dot(&self.matrix) != g.matrix {
            return None;
        }
        Some(ModuleHom::new_unchecked(self.target.clone(), g.target.clone(), h))
    }

    /// Some `h` with `self ∘ h = g`, for `self` injective and
    /// `im g ⊆ im self`.
    pub fn factor_through_mono(&self, g: &ModuleHom) -> Option<ModuleHom> {
        let h = crate::linalg::solve(&self.matrix, &g.matrix).ok()?;
        Some(ModuleHom::new_unchecked(g.source.clone(), self.source.clone(), h))
    }
}

/// Whether `0 -> a -f-> b -g-> c -> 0` is exact, by ranks.
pub fn is_short_exact(f: &ModuleHom, g: &ModuleHom) -> bool {
    f.target.dim == g.source.dim
        && g.matrix.dot(&f.matrix).is_zero()
        && f.is_injective()
        && g.is_surjective()
        && f.source.dim + g.target.dim == f.target.dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::truncated_polynomial;
    use crate::fixtures;

    #[test]
    fn free_modules() {
        let d = truncated_polynomial(fixtures::gf101(), 2);
        assert_eq!(Module::free(&d, 0).dim(), 0);
        assert_eq!(Module::free(&d, 1).dim(), 2);
        let a2 = fixtures::a2();
        let f3 = Module::free(&a2, 3);
        assert_eq!(f3.dim(), 9);
        assert!(f3.validate().is_ok());
    }

    #[test]
    fn kernel_cokernel_of_x() {
        let d = fixtures::dual_numbers();
        let reg = Module::regular(&d);
        let x = ModuleHom::new(reg.clone(), reg.clone(), d.right_mult(1).clone()).unwrap();
        let kc = x.kernel_cokernel();
        assert_eq!(kc.kernel.dim(), 1);
        assert_eq!(kc.cokernel.dim(), 1);
        assert_eq!(kc.image.dim(), 1);
        assert!(kc.inclusion.is_equivariant());
        assert!(kc.projection.is_equivariant());
        assert_eq!(kc.image_inclusion.after(&kc.onto_image), x);
        let id = ModuleHom::identity(&reg).kernel_cokernel();
        assert_eq!((id.kernel.dim(), id.cokernel.dim()), (0, 0));
        let z = ModuleHom::zero(&reg, &reg).kernel_cokernel();
        assert_eq!((z.kernel.dim(), z.cokernel.dim()), (2, 2));
    }

    #[test]
    fn duals() {
        let a2 = fixtures::a2();
        let reg = Module::regular(&a2);
        let dd = reg.dual().dual();
        assert_eq!(dd.actions(), reg.actions());
        assert_eq!(Module::zero(&a2).dual().dim(), 0);
        assert!(reg.dual().validate().is_ok());
    }
}
