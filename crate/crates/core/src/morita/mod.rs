//! Morita rings `Λ = (A N; M B)` and their module tuples `(X, Y, f, g)`.
//!
//! The ring basis is ordered `A | N | M | B`. A tuple stores `f` on
//! `M ⊗_A X` and `g` on `N ⊗_B Y`, with the tensor products kept alongside
//! so that induced maps can be formed without recomputing them.

mod embedding;
mod functors;
mod triangular;

pub use embedding::{
    ext_formula_trivial_extension, homological_embedding_check, stratifying_check, EmbeddingReport,
    ExtComparison, Side, Stratifying, StratifyingIdeal,
};
pub use functors::{
    apply_functor, canonical_sequences, h_a, h_b, p_a, p_b, q_a, q_b, t_a, t_a_map, t_b, t_b_map,
    z_a, z_a_map, z_b, z_b_map, FunctorArg, FunctorName, FunctorValue, ShortExactTuples,
};
pub use triangular::{triangular_restriction, Restriction};

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{Algebra, AlgebraError, Violation};
use crate::linalg::{Mat, Subspace};
use crate::module::{
    hom_space, is_short_exact, same_algebra, tensor_bimodules, tensor_over, BiTensor, Bimodule,
    Module, ModuleError, ModuleHom, Tensor,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MoritaError {
    /// `φ` or `ψ` is not a bimodule map.
    NotBilinear(&'static str),
    /// One of the two associativity conditions linking `φ` and `ψ` fails.
    CompatibilityViolation(&'static str),
    AssociativityFailure(Violation),
    /// A tuple or tuple morphism violates its defining diagrams.
    InvariantViolation(&'static str),
    RequiresZeroBimaps,
    TypeMismatch,
    PreconditionFailed(&'static str),
    ExactnessFailure(&'static str),
    Module(ModuleError),
    Algebra(AlgebraError),
}

impl fmt::Display for MoritaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoritaError::NotBilinear(w) => write!(f, "{w} is not a bimodule homomorphism"),
            MoritaError::CompatibilityViolation(w) => write!(f, "compatibility condition fails: {w}"),
            MoritaError::AssociativityFailure(v) => write!(f, "Morita ring is not associative: {v}"),
            MoritaError::InvariantViolation(w) => write!(f, "invariant violated: {w}"),
            MoritaError::RequiresZeroBimaps => write!(f, "operation requires φ = ψ = 0"),
            MoritaError::TypeMismatch => write!(f, "argument has the wrong type for this functor"),
            MoritaError::PreconditionFailed(w) => write!(f, "precondition failed: {w}"),
            MoritaError::ExactnessFailure(w) => write!(f, "sequence not exact: {w}"),
            MoritaError::Module(e) => write!(f, "{e}"),
            MoritaError::Algebra(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for MoritaError {}

impl From<ModuleError> for MoritaError {
    fn from(e: ModuleError) -> Self {
        MoritaError::Module(e)
    }
}

impl From<AlgebraError> for MoritaError {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::Invalid(v) => MoritaError::AssociativityFailure(v),
            e => MoritaError::Algebra(e),
        }
    }
}

/// The four blocks of the ring basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Block {
    A,
    N,
    M,
    B,
}

/// A Morita ring built as structure constants.
#[derive(Clone, Debug)]
pub struct MoritaRing {
    pub algebra: Arc<Algebra>,
    /// Block dimensions in basis order `A, N, M, B`.
    pub dims: [usize; 4],
    /// `e = (1_A, 0, 0, 0)`.
    pub e: Vec<u64>,
    /// `f = (0, 0, 0, 1_B)`.
    pub f: Vec<u64>,
}

impl MoritaRing {
    pub fn offset(&self, b: Block) -> usize {
        let d = self.dims;
        match b {
            Block::A => 0,
            Block::N => d[0],
            Block::M => d[0] + d[1],
            Block::B => d[0] + d[1] + d[2],
        }
    }

    /// Basis index of element `i` of a block.
    pub fn index(&self, b: Block, i: usize) -> usize {
        self.offset(b) + i
    }
}

/// Morita context `(A, B, N, M, φ, ψ)` with `N` an `(A, B)`-bimodule and
/// `M` a `(B, A)`-bimodule. `φ` is a matrix on `M ⊗_A N`, `ψ` on `N ⊗_B M`.
#[derive(Clone, Debug)]
pub struct MoritaData {
    a: Arc<Algebra>,
    b: Arc<Algebra>,
    n: Bimodule,
    m: Bimodule,
    phi: Mat,
    psi: Mat,
    mn: BiTensor,
    nm: BiTensor,
    ring: MoritaRing,
}

fn bimodule_map_ok(t: &BiTensor, target: &Bimodule, map: &Mat) -> bool {
    let s = &t.bimodule;
    s.left_action()
        .iter()
        .zip(target.left_action())
        .all(|(l, lt)| map.dot(l) == lt.dot(map))
        && s
            .right_action()
            .iter()
            .zip(target.right_action())
            .all(|(r, rt)| map.dot(r) == rt.dot(map))
}

impl MoritaData {
    /// Checks bilinearity of `φ`, `ψ` and the two compatibility conditions,
    /// then builds the ring. `None` stands for the zero map.
    pub fn new(
        a: Arc<Algebra>,
        b: Arc<Algebra>,
        n: Bimodule,
        m: Bimodule,
        phi: Option<Mat>,
        psi: Option<Mat>,
    ) -> Result<MoritaData, MoritaError> {
        if !same_algebra(n.left_algebra(), &a)
            || !same_algebra(n.right_algebra(), &b)
            || !same_algebra(m.left_algebra(), &b)
            || !same_algebra(m.right_algebra(), &a)
        {
            return Err(ModuleError::AlgebraMismatch.into());
        }
        let fld = a.field();
        let mn = tensor_bimodules(&m, &n)?;
        let nm = tensor_bimodules(&n, &m)?;
        let phi = phi.unwrap_or_else(|| Mat::zeros(fld, b.dim(), mn.dim()));
        let psi = psi.unwrap_or_else(|| Mat::zeros(fld, a.dim(), nm.dim()));
        if phi.shape() != (b.dim(), mn.dim()) || psi.shape() != (a.dim(), nm.dim()) {
            return Err(ModuleError::DimensionMismatch {
                expected: b.dim() * mn.dim(),
                got: phi.rows() * phi.cols(),
            }
            .into());
        }
        if !bimodule_map_ok(&mn, &Bimodule::regular(&b), &phi) {
            return Err(MoritaError::NotBilinear("φ"));
        }
        if !bimodule_map_ok(&nm, &Bimodule::regular(&a), &psi) {
            return Err(MoritaError::NotBilinear("ψ"));
        }
        let mut d = MoritaData {
            a,
            b,
            n,
            m,
            phi,
            psi,
            mn,
            nm,
            ring: MoritaRing {
                algebra: crate::algebra::zero_algebra(fld),
                dims: [0; 4],
                e: Vec::new(),
                f: Vec::new(),
            },
        };
        d.check_compatibility()?;
        d.ring = d.build()?;
        Ok(d)
    }

    /// `Δ = (Λ Λ; Λ Λ)` with `φ = ψ` either zero or the multiplication map.
    pub fn delta(lambda: &Arc<Algebra>, multiplication: bool) -> Result<MoritaData, MoritaError> {
        let reg = Bimodule::regular(lambda);
        let map = if multiplication {
            let t = tensor_bimodules(&reg, &reg)?;
            Some(multiplication_map(lambda, &t))
        } else {
            None
        };
        MoritaData::new(lambda.clone(), lambda.clone(), reg.clone(), reg, map.clone(), map)
    }

    /// Triangular data `(A N; 0 B)`.
    pub fn upper_triangular(a: &Arc<Algebra>, b: &Arc<Algebra>, n: Bimodule) -> Result<MoritaData, MoritaError> {
        MoritaData::new(a.clone(), b.clone(), n, Bimodule::zero(b, a), None, None)
    }

    /// Triangular data `(A 0; M B)`.
    pub fn lower_triangular(a: &Arc<Algebra>, b: &Arc<Algebra>, m: Bimodule) -> Result<MoritaData, MoritaError> {
        MoritaData::new(a.clone(), b.clone(), Bimodule::zero(a, b), m, None, None)
    }

    /// `(A N; N A)` with `N = Ae ⊗_k fA` and `φ = ψ = 0`.
    pub fn from_idempotents(a: &Arc<Algebra>, e: &[u64], f: &[u64]) -> Result<MoritaData, MoritaError> {
        let n = idempotent_bimodule(a, e, f);
        MoritaData::new(a.clone(), a.clone(), n.clone(), n, None, None)
    }

    pub fn a(&self) -> &Arc<Algebra> {
        &self.a
    }

    pub fn b(&self) -> &Arc<Algebra> {
        &self.b
    }

    pub fn n(&self) -> &Bimodule {
        &self.n
    }

    pub fn m(&self) -> &Bimodule {
        &self.m
    }

    pub fn phi(&self) -> &Mat {
        &self.phi
    }

    pub fn psi(&self) -> &Mat {
        &self.psi
    }

    /// `M ⊗_A N`.
    pub fn m_tensor_n(&self) -> &BiTensor {
        &self.mn
    }

    /// `N ⊗_B M`.
    pub fn n_tensor_m(&self) -> &BiTensor {
        &self.nm
    }

    pub fn ring(&self) -> &MoritaRing {
        &self.ring
    }

    pub fn has_zero_bimaps(&self) -> bool {
        self.phi.is_zero() && self.psi.is_zero()
    }

    pub(crate) fn require_zero(&self) -> Result<(), MoritaError> {
        if self.has_zero_bimaps() {
            Ok(())
        } else {
            Err(MoritaError::RequiresZeroBimaps)
        }
    }

    /// `φ(m_i ⊗ n_j) ∈ B`.
    pub fn phi_at(&self, i: usize, j: usize) -> Vec<u64> {
        self.phi.apply(&self.mn.pure(i, j))
    }

    /// `ψ(n_i ⊗ m_j) ∈ A`.
    pub fn psi_at(&self, i: usize, j: usize) -> Vec<u64> {
        self.psi.apply(&self.nm.pure(i, j))
    }

    fn check_compatibility(&self) -> Result<(), MoritaError> {
        if self.has_zero_bimaps() {
            return Ok(());
        }
        let (dn, dm) = (self.n.dim(), self.m.dim());
        for i in 0..dm {
            for j in 0..dn {
                let ph = self.m.left_by(&self.phi_at(i, j));
                for k in 0..dm {
                    let lhs = ph.col(k);
                    let rhs = self.m.right_by(&self.psi_at(j, k)).col(i);
                    if lhs != rhs {
                        return Err(MoritaError::CompatibilityViolation("φ(m⊗n)m′ = mψ(n⊗m′)"));
                    }
                }
            }
        }
        for i in 0..dn {
            for j in 0..dm {
                let ps = self.n.left_by(&self.psi_at(i, j));
                for k in 0..dn {
                    let lhs = self.n.right_by(&self.phi_at(j, k)).col(i);
                    let rhs = ps.col(k);
                    if lhs != rhs {
                        return Err(MoritaError::CompatibilityViolation("nφ(m⊗n′) = ψ(n⊗m)n′"));
                    }
                }
            }
        }
        Ok(())
    }

    fn build(&self) -> Result<MoritaRing, MoritaError> {
        let fld = self.a.field();
        let dims = [self.a.dim(), self.n.dim(), self.m.dim(), self.b.dim()];
        let total: usize = dims.iter().sum();
        let off = [0, dims[0], dims[0] + dims[1], dims[0] + dims[1] + dims[2]];
        let mut c = alloc::vec![0u64; total * total * total];
        let mut put = |i: usize, j: usize, base: usize, v: &[u64]| {
            for (k, &x) in v.iter().enumerate() {
                if x != 0 {
                    c[(i * total + j) * total + base + k] = x;
                }
            }
        };
        let (oa, on, om, ob) = (off[0], off[1], off[2], off[3]);
        for i in 0..dims[0] {
            for j in 0..dims[0] {
                put(oa + i, oa + j, oa, self.a.basis_product(i, j));
            }
            let l = &self.n.left_action()[i];
            for j in 0..dims[1] {
                put(oa + i, on + j, on, &l.col(j));
            }
        }
        for i in 0..dims[1] {
            for j in 0..dims[2] {
                put(on + i, om + j, oa, &self.psi_at(i, j));
            }
            for j in 0..dims[3] {
                put(on + i, ob + j, on, &self.n.right_action()[j].col(i));
            }
        }
        for i in 0..dims[2] {
            for j in 0..dims[0] {
                put(om + i, oa + j, om, &self.m.right_action()[j].col(i));
            }
            for j in 0..dims[1] {
                put(om + i, on + j, ob, &self.phi_at(i, j));
            }
        }
        for i in 0..dims[3] {
            let l = &self.m.left_action()[i];
            for j in 0..dims[2] {
                put(ob + i, om + j, om, &l.col(j));
            }
            for j in 0..dims[3] {
                put(ob + i, ob + j, ob, self.b.basis_product(i, j));
            }
        }
        let mut e = alloc::vec![0u64; total];
        e[..dims[0]].copy_from_slice(self.a.unit());
        let mut f = alloc::vec![0u64; total];
        f[ob..].copy_from_slice(self.b.unit());
        let unit: Vec<u64> = e.iter().zip(&f).map(|(x, y)| fld.add(*x, *y)).collect();
        let algebra = Algebra::new(fld, total, c, unit)?;
        Ok(MoritaRing { algebra, dims, e, f })
    }

    /// Swaps the roles of `A` and `B`.
    pub fn swapped(&self) -> Result<MoritaData, MoritaError> {
        MoritaData::new(
            self.b.clone(),
            self.a.clone(),
            self.m.clone(),
            self.n.clone(),
            Some(self.psi.clone()),
            Some(self.phi.clone()),
        )
    }
}

/// The `(A, A)`-bimodule `Ae ⊗_k fA`, with basis index `i * dim fA + j`.
pub fn idempotent_bimodule(a: &Arc<Algebra>, e: &[u64], f: &[u64]) -> Bimodule {
    let fld = a.field();
    let ae = Subspace::column_space(&a.right_mult_by(e));
    let fa = Subspace::column_space(&a.left_mult_by(f));
    let restrict = |s: &Subspace, m: &Mat| s.coordinate_map().dot(&m.dot(&s.basis_matrix()));
    let (id_l, id_r) = (Mat::identity(fld, ae.dim()), Mat::identity(fld, fa.dim()));
    let left = (0..a.dim()).map(|i| restrict(&ae, a.left_mult(i)).kron(&id_r)).collect();
    let right = (0..a.dim()).map(|i| id_l.kron(&restrict(&fa, a.right_mult(i)))).collect();
    Bimodule::new_unchecked(a.clone(), a.clone(), ae.dim() * fa.dim(), left, right)
}

/// The ring built from Morita data.
pub fn build_morita_algebra(d: &MoritaData) -> MoritaRing {
    d.ring.clone()
}

/// Matrix of `Λ ⊗_Λ Λ -> Λ`, `x ⊗ y ↦ xy`.
pub fn multiplication_map(lambda: &Algebra, t: &BiTensor) -> Mat {
    let fld = lambda.field();
    let cols: Vec<Vec<u64>> = (0..t.dim())
        .map(|k| {
            let (i, j) = t.representative(k);
            lambda.basis_product(i, j).to_vec()
        })
        .collect();
    Mat::from_columns(fld, lambda.dim(), &cols)
}

/// `Ψ_X: N ⊗_B (M ⊗_A X) -> X`, `n ⊗ m ⊗ x ↦ ψ(n⊗m)x`.
pub(crate) fn psi_map(d: &MoritaData, x: &Module, mx: &Tensor, nmx: &Tensor) -> ModuleHom {
    let fld = x.field();
    let dmx = mx.dim();
    let mut on_pure = Mat::zeros(fld, x.dim(), d.n.dim() * dmx);
    if !d.psi.is_zero() {
        for l in 0..d.n.dim() {
            for j in 0..dmx {
                let (i, k) = mx.representative(j);
                let col = x.act_by(&d.psi_at(l, i)).col(k);
                for (r, v) in col.into_iter().enumerate() {
                    on_pure.set(r, l * dmx + j, v);
                }
            }
        }
    }
    nmx.descend(&on_pure, x)
}

/// `Φ_Y: M ⊗_A (N ⊗_B Y) -> Y`, `m ⊗ n ⊗ y ↦ φ(m⊗n)y`.
pub(crate) fn phi_map(d: &MoritaData, y: &Module, ny: &Tensor, mny: &Tensor) -> ModuleHom {
    let fld = y.field();
    let dny = ny.dim();
    let mut on_pure = Mat::zeros(fld, y.dim(), d.m.dim() * dny);
    if !d.phi.is_zero() {
        for l in 0..d.m.dim() {
            for j in 0..dny {
                let (i, k) = ny.representative(j);
                let col = y.act_by(&d.phi_at(l, i)).col(k);
                for (r, v) in col.into_iter().enumerate() {
                    on_pure.set(r, l * dny + j, v);
                }
            }
        }
    }
    mny.descend(&on_pure, y)
}

/// An object `(X, Y, f, g)` of the tuple category.
#[derive(Clone, Debug)]
pub struct MoritaTuple {
    pub x: Module,
    pub y: Module,
    /// `f: M ⊗_A X -> Y`.
    pub f: ModuleHom,
    /// `g: N ⊗_B Y -> X`.
    pub g: ModuleHom,
    mx: Tensor,
    ny: Tensor,
}

impl PartialEq for MoritaTuple {
    fn eq(&self, o: &Self) -> bool {
        self.x == o.x && self.y == o.y && self.f.matrix() == o.f.matrix() && self.g.matrix() == o.g.matrix()
    }
}

impl MoritaTuple {
    /// Builds and validates a tuple from the matrices of `f` and `g`.
    pub fn new(d: &MoritaData, x: Module, y: Module, f: Mat, g: Mat) -> Result<MoritaTuple, MoritaError> {
        let t = MoritaTuple::new_unchecked(d, x, y, f, g)?;
        t.validate(d)?;
        Ok(t)
    }

    /// Builds the tensor products but checks only shapes.
    pub fn new_unchecked(d: &MoritaData, x: Module, y: Module, f: Mat, g: Mat) -> Result<MoritaTuple, MoritaError> {
        if !same_algebra(x.algebra(), &d.a) || !same_algebra(y.algebra(), &d.b) {
            return Err(ModuleError::AlgebraMismatch.into());
        }
        let mx = tensor_over(&d.m, &x)?;
        let ny = tensor_over(&d.n, &y)?;
        if f.shape() != (y.dim(), mx.dim()) || g.shape() != (x.dim(), ny.dim()) {
            return Err(MoritaError::InvariantViolation("shape of f or g"));
        }
        let f = ModuleHom::new_unchecked(mx.module.clone(), y.clone(), f);
        let g = ModuleHom::new_unchecked(ny.module.clone(), x.clone(), g);
        Ok(MoritaTuple { x, y, f, g, mx, ny })
    }

    pub(crate) fn from_parts(x: Module, y: Module, f: ModuleHom, g: ModuleHom, mx: Tensor, ny: Tensor) -> MoritaTuple {
        MoritaTuple { x, y, f, g, mx, ny }
    }

    /// `(0, 0, 0, 0)`.
    pub fn zero(d: &MoritaData) -> MoritaTuple {
        let fld = d.a.field();
        MoritaTuple::new_unchecked(d, Module::zero(&d.a), Module::zero(&d.b), Mat::zeros(fld, 0, 0), Mat::zeros(fld, 0, 0))
            .expect("zero tuple")
    }

    /// `M ⊗_A X`.
    pub fn mx(&self) -> &Tensor {
        &self.mx
    }

    /// `N ⊗_B Y`.
    pub fn ny(&self) -> &Tensor {
        &self.ny
    }

    pub fn dim(&self) -> usize {
        self.x.dim() + self.y.dim()
    }

    /// Equivariance of `f`, `g` and commutativity of both defining squares.
    pub fn validate(&self, d: &MoritaData) -> Result<(), MoritaError> {
        self.f.check_equivariant().map_err(|_| MoritaError::InvariantViolation("f is not B-linear"))?;
        self.g.check_equivariant().map_err(|_| MoritaError::InvariantViolation("g is not A-linear"))?;
        let nmx = tensor_over(&d.n, &self.mx.module)?;
        let psi_x = psi_map(d, &self.x, &self.mx, &nmx);
        let id_f = nmx.map_right(&self.f, &self.ny);
        if self.g.after(&id_f).matrix() != psi_x.matrix() {
            return Err(MoritaError::InvariantViolation("Ψ_X = g ∘ (Id_N ⊗ f)"));
        }
        let mny = tensor_over(&d.m, &self.ny.module)?;
        let phi_y = phi_map(d, &self.y, &self.ny, &mny);
        let id_g = mny.map_right(&self.g, &self.mx);
        if self.f.after(&id_g).matrix() != phi_y.matrix() {
            return Err(MoritaError::InvariantViolation("Φ_Y = f ∘ (Id_M ⊗ g)"));
        }
        Ok(())
    }

    /// Direct sum of tuples.
    pub fn oplus(&self, d: &MoritaData, other: &MoritaTuple) -> MoritaTuple {
        let x = self.x.oplus(&other.x);
        let y = self.y.oplus(&other.y);
        let fld = x.field();
        let mx = tensor_over(&d.m, &x).expect("same algebra");
        let ny = tensor_over(&d.n, &y).expect("same algebra");
        // Tensor with a direct sum: route through the inclusions.
        let fmat = split_map(fld, &mx, &[&self.mx, &other.mx], &[&self.f, &other.f], &[self.x.dim(), other.x.dim()], self.y.dim() + other.y.dim(), &[0, self.y.dim()]);
        let gmat = split_map(fld, &ny, &[&self.ny, &other.ny], &[&self.g, &other.g], &[self.y.dim(), other.y.dim()], self.x.dim() + other.x.dim(), &[0, self.x.dim()]);
        let f = ModuleHom::new_unchecked(mx.module.clone(), y.clone(), fmat);
        let g = ModuleHom::new_unchecked(ny.module.clone(), x.clone(), gmat);
        MoritaTuple { x, y, f, g, mx, ny }
    }
}

/// The map on `M ⊗ (X_1 ⊕ X_2)` acting as `f_i` on the `i`-th summand and
/// landing in block `i` of the target.
fn split_map(
    fld: crate::field::PrimeField,
    whole: &Tensor,
    parts: &[&Tensor],
    maps: &[&ModuleHom],
    part_dims: &[usize],
    target_dim: usize,
    target_offsets: &[usize],
) -> Mat {
    let dx: usize = part_dims.iter().sum();
    let mut on_pure = Mat::zeros(fld, target_dim, whole.left_dim * dx);
    let mut off = 0;
    for (p, (t, h)) in parts.iter().zip(maps).enumerate() {
        for i in 0..whole.left_dim {
            for j in 0..part_dims[p] {
                let v = h.matrix().apply(&t.pure(i, j));
                for (r, x) in v.into_iter().enumerate() {
                    on_pure.set(target_offsets[p] + r, i * dx + off + j, x);
                }
            }
        }
        off += part_dims[p];
    }
    on_pure.dot(&whole.lift)
}

/// A morphism `(a, b)` of tuples.
#[derive(Clone, Debug)]
pub struct TupleHom {
    pub source: MoritaTuple,
    pub target: MoritaTuple,
    pub a: ModuleHom,
    pub b: ModuleHom,
}

impl TupleHom {
    pub fn new(source: &MoritaTuple, target: &MoritaTuple, a: Mat, b: Mat) -> Result<TupleHom, MoritaError> {
        let a = ModuleHom::new(source.x.clone(), target.x.clone(), a)?;
        let b = ModuleHom::new(source.y.clone(), target.y.clone(), b)?;
        let h = TupleHom {
            source: source.clone(),
            target: target.clone(),
            a,
            b,
        };
        h.validate()?;
        Ok(h)
    }

    pub(crate) fn new_unchecked(source: &MoritaTuple, target: &MoritaTuple, a: ModuleHom, b: ModuleHom) -> TupleHom {
        TupleHom {
            source: source.clone(),
            target: target.clone(),
            a,
            b,
        }
    }

    pub fn identity(t: &MoritaTuple) -> TupleHom {
        TupleHom::new_unchecked(t, t, ModuleHom::identity(&t.x), ModuleHom::identity(&t.y))
    }

    pub fn zero(s: &MoritaTuple, t: &MoritaTuple) -> TupleHom {
        TupleHom::new_unchecked(s, t, ModuleHom::zero(&s.x, &t.x), ModuleHom::zero(&s.y, &t.y))
    }

    /// `f′ ∘ (Id_M ⊗ a) = b ∘ f` and `g′ ∘ (Id_N ⊗ b) = a ∘ g`.
    pub fn validate(&self) -> Result<(), MoritaError> {
        let (s, t) = (&self.source, &self.target);
        let id_a = s.mx.map_right(&self.a, &t.mx);
        if t.f.after(&id_a).matrix() != self.b.after(&s.f).matrix() {
            return Err(MoritaError::InvariantViolation("f′ ∘ (Id_M ⊗ a) = b ∘ f"));
        }
        let id_b = s.ny.map_right(&self.b, &t.ny);
        if t.g.after(&id_b).matrix() != self.a.after(&s.g).matrix() {
            return Err(MoritaError::InvariantViolation("g′ ∘ (Id_N ⊗ b) = a ∘ g"));
        }
        Ok(())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &TupleHom) -> TupleHom {
        TupleHom::new_unchecked(&first.source, &self.target, self.a.after(&first.a), self.b.after(&first.b))
    }

    pub fn is_isomorphism(&self) -> bool {
        self.a.is_isomorphism() && self.b.is_isomorphism()
    }

    /// The module map `F(a, b) = diag(a, b)`.
    pub fn to_module_hom(&self, d: &MoritaData) -> ModuleHom {
        let fld = self.a.matrix().field();
        let m = Mat::block_diag(fld, &[self.a.matrix(), self.b.matrix()]);
        ModuleHom::new_unchecked(tuple_to_module(d, &self.source), tuple_to_module(d, &self.target), m)
    }
}

/// `F(X, Y, f, g) = X ⊕ Y` with `(a n; m b)(x, y) = (ax + g(n⊗y), by + f(m⊗x))`.
pub fn tuple_to_module(d: &MoritaData, t: &MoritaTuple) -> Module {
    let r = &d.ring;
    let fld = d.a.field();
    let (dx, dy) = (t.x.dim(), t.y.dim());
    let dv = dx + dy;
    let mut action = Vec::with_capacity(r.algebra.dim());
    for i in 0..d.a.dim() {
        let mut m = Mat::zeros(fld, dv, dv);
        m.set_block(0, 0, t.x.act(i));
        action.push(m);
    }
    for l in 0..d.n.dim() {
        let cols: Vec<Vec<u64>> = (0..dy).map(|k| t.g.matrix().apply(&t.ny.pure(l, k))).collect();
        let mut m = Mat::zeros(fld, dv, dv);
        m.set_block(0, dx, &Mat::from_columns(fld, dx, &cols));
        action.push(m);
    }
    for l in 0..d.m.dim() {
        let cols: Vec<Vec<u64>> = (0..dx).map(|k| t.f.matrix().apply(&t.mx.pure(l, k))).collect();
        let mut m = Mat::zeros(fld, dv, dv);
        m.set_block(dx, 0, &Mat::from_columns(fld, dy, &cols));
        action.push(m);
    }
    for i in 0..d.b.dim() {
        let mut m = Mat::zeros(fld, dv, dv);
        m.set_block(dx, dx, t.y.act(i));
        action.push(m);
    }
    Module::new_unchecked(r.algebra.clone(), dv, action)
}

/// Recovers `(eV, fV, f, g)` from a module over the ring, together with the
/// isomorphism `V -> X ⊕ Y`.
pub fn module_to_tuple(d: &MoritaData, v: &Module) -> Result<(MoritaTuple, ModuleHom), MoritaError> {
    let r = &d.ring;
    if !same_algebra(v.algebra(), &r.algebra) {
        return Err(ModuleError::AlgebraMismatch.into());
    }
    let fld = d.a.field();
    let pe = v.act_by(&r.e);
    let pf = v.act_by(&r.f);
    let sx = Subspace::column_space(&pe);
    let sy = Subspace::column_space(&pf);
    let (bx, cx) = (sx.basis_matrix(), sx.coordinate_map());
    let (by, cy) = (sy.basis_matrix(), sy.coordinate_map());
    let xa = (0..d.a.dim())
        .map(|i| cx.dot(&v.act(r.index(Block::A, i)).dot(&bx)))
        .collect();
    let yb = (0..d.b.dim())
        .map(|i| cy.dot(&v.act(r.index(Block::B, i)).dot(&by)))
        .collect();
    let x = Module::new_unchecked(d.a.clone(), sx.dim(), xa);
    let y = Module::new_unchecked(d.b.clone(), sy.dim(), yb);
    let mx = tensor_over(&d.m, &x)?;
    let ny = tensor_over(&d.n, &y)?;
    let mut fp = Mat::zeros(fld, y.dim(), d.m.dim() * x.dim());
    for l in 0..d.m.dim() {
        let img = cy.dot(&v.act(r.index(Block::M, l)).dot(&bx));
        fp.set_block(0, l * x.dim(), &img);
    }
    let mut gp = Mat::zeros(fld, x.dim(), d.n.dim() * y.dim());
    for l in 0..d.n.dim() {
        let img = cx.dot(&v.act(r.index(Block::N, l)).dot(&by));
        gp.set_block(0, l * y.dim(), &img);
    }
    let f = ModuleHom::new_unchecked(mx.module.clone(), y.clone(), fp.dot(&mx.lift));
    let g = ModuleHom::new_unchecked(ny.module.clone(), x.clone(), gp.dot(&ny.lift));
    let t = MoritaTuple { x, y, f, g, mx, ny };
    t.validate(d)?;
    let iso = Mat::vstack(&[&cx.dot(&pe), &cy.dot(&pf)]).map_err(ModuleError::from)?;
    let iso = ModuleHom::new_unchecked(v.clone(), tuple_to_module(d, &t), iso);
    Ok((t, iso))
}

/// Basis of the morphisms `s -> t`.
pub fn tuple_hom_space(s: &MoritaTuple, t: &MoritaTuple) -> Result<Vec<TupleHom>, MoritaError> {
    let fld = s.x.field();
    let ha = hom_space(&s.x, &t.x)?;
    let hb = hom_space(&s.y, &t.y)?;
    let len1 = t.y.dim() * s.mx.dim();
    let len2 = t.x.dim() * s.ny.dim();
    let mut cols = Vec::with_capacity(ha.len() + hb.len());
    for a in &ha {
        let id_a = s.mx.map_right(a, &t.mx);
        let mut v = t.f.after(&id_a).matrix().scale(fld.neg(1)).vec_cols();
        v.extend(a.after(&s.g).matrix().vec_cols());
        cols.push(v);
    }
    for b in &hb {
        let id_b = s.ny.map_right(b, &t.ny);
        let mut v = b.after(&s.f).matrix().vec_cols();
        v.extend(t.g.after(&id_b).matrix().scale(fld.neg(1)).vec_cols());
        cols.push(v);
    }
    if cols.is_empty() {
        return Ok(Vec::new());
    }
    let sys = Mat::from_columns(fld, len1 + len2, &cols);
    let ker = Subspace::kernel_of(&sys);
    let mut out = Vec::with_capacity(ker.dim());
    for c in ker.basis() {
        let mut am = Mat::zeros(fld, t.x.dim(), s.x.dim());
        for (h, &k) in ha.iter().zip(c) {
            if k != 0 {
                am.add_scaled(k, h.matrix());
            }
        }
        let mut bm = Mat::zeros(fld, t.y.dim(), s.y.dim());
        for (h, &k) in hb.iter().zip(&c[ha.len()..]) {
            if k != 0 {
                bm.add_scaled(k, h.matrix());
            }
        }
        out.push(TupleHom::new_unchecked(
            s,
            t,
            ModuleHom::new_unchecked(s.x.clone(), t.x.clone(), am),
            ModuleHom::new_unchecked(s.y.clone(), t.y.clone(), bm),
        ));
    }
    Ok(out)
}

/// Kernel and cokernel of a tuple morphism with their structure maps.
#[derive(Clone, Debug)]
pub struct TupleKernelCokernel {
    pub kernel: MoritaTuple,
    pub inclusion: TupleHom,
    pub cokernel: MoritaTuple,
    pub projection: TupleHom,
}

pub fn tuple_kernel_cokernel(d: &MoritaData, h: &TupleHom) -> Result<TupleKernelCokernel, MoritaError> {
    let (s, t) = (&h.source, &h.target);
    let (ka, c) = h.a.kernel();
    let (kb, dd) = h.b.kernel();
    let mka = tensor_over(&d.m, &ka)?;
    let nkb = tensor_over(&d.n, &kb)?;
    let fk = s.f.after(&mka.map_right(&c, &s.mx));
    let hk = dd
        .factor_through_mono(&fk)
        .ok_or(MoritaError::InvariantViolation("kernel map h"))?;
    let gk = s.g.after(&nkb.map_right(&dd, &s.ny));
    let jk = c
        .factor_through_mono(&gk)
        .ok_or(MoritaError::InvariantViolation("kernel map j"))?;
    let kernel = MoritaTuple {
        x: ka,
        y: kb,
        f: hk,
        g: jk,
        mx: mka,
        ny: nkb,
    };
    kernel.validate(d)?;
    let inclusion = TupleHom::new_unchecked(&kernel, s, c, dd);

    let (ca, pa) = h.a.cokernel();
    let (cb, pb) = h.b.cokernel();
    let mca = tensor_over(&d.m, &ca)?;
    let ncb = tensor_over(&d.n, &cb)?;
    let id_pa = t.mx.map_right(&pa, &mca);
    let fc = id_pa
        .factor_through_epi(&pb.after(&t.f))
        .ok_or(MoritaError::InvariantViolation("cokernel map f"))?;
    let id_pb = t.ny.map_right(&pb, &ncb);
    let gc = id_pb
        .factor_through_epi(&pa.after(&t.g))
        .ok_or(MoritaError::InvariantViolation("cokernel map g"))?;
    let cokernel = MoritaTuple {
        x: ca,
        y: cb,
        f: fc,
        g: gc,
        mx: mca,
        ny: ncb,
    };
    cokernel.validate(d)?;
    let projection = TupleHom::new_unchecked(t, &cokernel, pa, pb);
    Ok(TupleKernelCokernel {
        kernel,
        inclusion,
        cokernel,
        projection,
    })
}

/// Exactness of `0 -> s -u-> t -v-> r -> 0`, checked on both components.
pub fn is_short_exact_tuples(u: &TupleHom, v: &TupleHom) -> bool {
    u.validate().is_ok() && v.validate().is_ok() && is_short_exact(&u.a, &v.a) && is_short_exact(&u.b, &v.b)
}

#[cfg(test)]
mod tests;
