use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{hom_space, same_algebra, Module, ModuleError, ModuleHom};
use crate::algebra::{opposite_algebra, Algebra};
use crate::linalg::{solve, Mat, Subspace};

/// A dimension that is either known or exceeds the search bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Dim {
    Finite(usize),
    /// No value up to and including the bound was found.
    AtLeast(usize),
}

impl Dim {
    pub fn finite(self) -> Option<usize> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::AtLeast(_) => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Dim::Finite(_))
    }
}

impl fmt::Display for Dim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{n}"),
            Dim::AtLeast(b) => write!(f, ">{b}"),
        }
    }
}

/// How generators are chosen when covering a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverStrategy {
    /// Scan the vectors `e·v` for the algebra's orthogonal idempotents `e`,
    /// keeping one only if it enlarges the image modulo the radical; each
    /// kept generator `e·v` spans a summand `Λe`. With primitive
    /// idempotents this is a projective cover.
    Greedy,
    /// Every basis vector generates a free summand `Λ`.
    FullBasis,
}

/// A surjection `Λ^rank -> M`.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub rank: usize,
    /// Images of the free generators.
    pub generators: Vec<Vec<u64>>,
    pub map: ModuleHom,
}

/// A projective resolution `P_L -> ... -> P_0 -> M -> 0`.
///
/// `P_i = ⊕_g Λe_g` sits inside `Λ^{r_i}`, where coordinate `g*dim Λ + b`
/// is `b_b` in summand `g`. The differential `d_i: P_i -> P_{i-1}` is stored
/// by the images of the generators `e_g`; matrices on the ambient `Λ^{r_i}`
/// send `x` in summand `g` to `x·gen_g` and are exact only on `P_i`.
#[derive(Clone, Debug)]
pub struct FreeResolution {
    algebra: Arc<Algebra>,
    module: Module,
    strategy: CoverStrategy,
    ranks: Vec<usize>,
    augmentation: Vec<Vec<u64>>,
    differentials: Vec<Vec<Vec<u64>>>,
    /// Idempotent of each generator, per stage.
    idempotents: Vec<Vec<Vec<u64>>>,
    /// `P_i ⊂ Λ^{r_i}`.
    summands: Vec<Subspace>,
    kernels: Vec<Subspace>,
}

/// Applies `b_b` to an element of `Λ^r` given in block coordinates.
pub(crate) fn act_free(a: &Algebra, b: usize, v: &[u64]) -> Vec<u64> {
    let d = a.dim();
    let l = a.left_mult(b);
    let mut out = Vec::with_capacity(v.len());
    for block in v.chunks(d) {
        out.extend(l.apply(block));
    }
    out
}

/// `x·v` for an element `x` of the algebra, given the basis action.
fn act_elem(a: &Algebra, ambient: usize, x: &[u64], v: &[u64], act: &dyn Fn(usize, &[u64]) -> Vec<u64>) -> Vec<u64> {
    let f = a.field();
    let mut w = vec![0u64; ambient];
    for (b, &c) in x.iter().enumerate() {
        if c != 0 {
            f.axpy(&mut w, c, &act(b, v));
        }
    }
    w
}

/// Generators with their idempotents.
fn choose_generators(
    a: &Algebra,
    ambient: usize,
    candidates: &[Vec<u64>],
    act: &dyn Fn(usize, &[u64]) -> Vec<u64>,
    idempotents: &[Vec<u64>],
    strategy: CoverStrategy,
) -> Vec<(Vec<u64>, Vec<u64>)> {
    if strategy == CoverStrategy::FullBasis {
        return candidates
            .iter()
            .map(|c| (c.clone(), a.unit().to_vec()))
            .collect();
    }
    let f = a.field();
    let mut t = Subspace::zero(f, ambient);
    if let Ok(rad) = a.radical() {
        for r in rad.basis() {
            for v in candidates {
                t.insert(&act_elem(a, ambient, r, v, act));
            }
        }
    }
    let mut gens = Vec::new();
    for e in idempotents {
        for v in candidates {
            if t.is_full() {
                return gens;
            }
            let c = act_elem(a, ambient, e, v, act);
            if t.contains(&c) {
                continue;
            }
            for b in 0..a.dim() {
                t.insert(&act(b, &c));
            }
            gens.push((c, e.clone()));
        }
    }
    gens
}

/// The inclusion `P -> Λ^r` of `P = ⊕_g Λe_g` (spanning `s`) and the
/// retraction `x ↦ (x_g·e_g)_g`.
pub(crate) fn split_summand(a: &Arc<Algebra>, p: &Module, s: &Subspace, idempotents: &[Vec<u64>]) -> (ModuleHom, ModuleHom) {
    let free = Module::free(a, idempotents.len());
    let parts: Vec<Mat> = idempotents.iter().map(|e| a.right_mult_by(e)).collect();
    let refs: Vec<&Mat> = parts.iter().collect();
    let mut proj = Mat::block_diag(a.field(), &refs);
    if proj.rows() == 0 {
        proj = Mat::zeros(a.field(), 0, 0);
    }
    let retract = s.coordinate_map().dot(&proj);
    (
        ModuleHom::new_unchecked(p.clone(), free.clone(), s.basis_matrix()),
        ModuleHom::new_unchecked(free, p.clone(), retract),
    )
}

/// `⊕_g Λe_g ⊂ Λ^r`.
pub(crate) fn summand_space(a: &Algebra, idempotents: &[Vec<u64>]) -> Subspace {
    let d = a.dim();
    let r = idempotents.len();
    if idempotents.iter().all(|e| e.as_slice() == a.unit()) {
        return Subspace::full(a.field(), r * d);
    }
    let mut vecs = Vec::new();
    for (g, e) in idempotents.iter().enumerate() {
        for v in Subspace::column_space(&a.right_mult_by(e)).basis() {
            let mut w = vec![0u64; r * d];
            w[g * d..(g + 1) * d].copy_from_slice(v);
            vecs.push(w);
        }
    }
    Subspace::spanned_by(a.field(), r * d, &vecs)
}

/// Kernel of `m` restricted to the subspace `s`.
fn kernel_on(m: &Mat, s: &Subspace) -> Subspace {
    if s.is_full() {
        return Subspace::kernel_of(m);
    }
    let b = s.basis_matrix();
    let k = Subspace::kernel_of(&m.dot(&b));
    let vecs: Vec<Vec<u64>> = k.basis().iter().map(|v| b.apply(v)).collect();
    Subspace::spanned_by(m.field(), s.ambient(), &vecs)
}

/// Basis matrix of `⊕_g ρ(e_g)·V ⊂ V^r` for action matrices `rho(e_g)`.
fn corner_cochains(field: crate::field::PrimeField, dim: usize, rho: &[Mat]) -> Mat {
    let parts: Vec<Mat> = rho
        .iter()
        .map(|m| Subspace::column_space(m).basis_matrix())
        .collect();
    let refs: Vec<&Mat> = parts.iter().collect();
    let out = Mat::block_diag(field, &refs);
    if out.rows() == 0 && !rho.is_empty() {
        return Mat::zeros(field, rho.len() * dim, 0);
    }
    out
}

impl FreeResolution {
    /// Resolution with `length` differentials.
    pub fn new(m: &Module, length: usize, strategy: CoverStrategy) -> FreeResolution {
        let a = m.algebra().clone();
        let candidates: Vec<Vec<u64>> = (0..m.dim()).map(|i| basis(m.dim(), i)).collect();
        let gens = choose_generators(
            &a,
            m.dim(),
            &candidates,
            &|b, v| m.act(b).apply(v),
            a.idempotents(),
            strategy,
        );
        let (gens, idems): (Vec<_>, Vec<_>) = gens.into_iter().unzip();
        let summand = summand_space(&a, &idems);
        let mut res = FreeResolution {
            algebra: a.clone(),
            module: m.clone(),
            strategy,
            ranks: vec![gens.len()],
            augmentation: gens,
            differentials: Vec::new(),
            idempotents: vec![idems],
            summands: vec![summand],
            kernels: Vec::new(),
        };
        let eps = res.augmentation_matrix();
        debug_assert_eq!(eps.rank(), m.dim());
        let k = kernel_on(&eps, &res.summands[0]);
        res.kernels.push(k);
        for _ in 0..length {
            res.extend();
        }
        res
    }

    /// Adds one more differential.
    pub fn extend(&mut self) {
        let a = self.algebra.clone();
        let prev = self.kernels.last().expect("kernel of last stage");
        let gens = choose_generators(
            &a,
            prev.ambient(),
            prev.basis(),
            &|b, v| act_free(&a, b, v),
            a.idempotents(),
            self.strategy,
        );
        let (gens, idems): (Vec<_>, Vec<_>) = gens.into_iter().unzip();
        self.ranks.push(gens.len());
        self.differentials.push(gens);
        self.summands.push(summand_space(&a, &idems));
        self.idempotents.push(idems);
        let i = self.differentials.len();
        let dm = self.differential_matrix(i);
        let k = kernel_on(&dm, &self.summands[i]);
        debug_assert_eq!(self.summands[i].dim() - k.dim(), prev.dim());
        self.kernels.push(k);
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    /// Number of differentials.
    pub fn length(&self) -> usize {
        self.differentials.len()
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self, i: usize) -> usize {
        self.ranks[i]
    }

    /// Images in `M` of the generators of `F_0`.
    pub fn augmentation_generators(&self) -> &[Vec<u64>] {
        &self.augmentation
    }

    /// Images in `F_{i-1}` of the generators of `F_i`, for `i >= 1`.
    pub fn differential_generators(&self, i: usize) -> &[Vec<u64>] {
        &self.differentials[i - 1]
    }

    /// Idempotents `e_g` with `P_i = ⊕_g Λe_g`.
    pub fn summand_idempotents(&self, i: usize) -> &[Vec<u64>] {
        &self.idempotents[i]
    }

    /// `P_i` as a subspace of `Λ^{r_i}`.
    pub fn summand_space(&self, i: usize) -> &Subspace {
        &self.summands[i]
    }

    /// `P_i` as a module.
    pub fn projective(&self, i: usize) -> Module {
        let free = Module::free(&self.algebra, self.ranks[i]);
        if self.summands[i].is_full() {
            return free;
        }
        free.submodule(&self.summands[i]).0
    }

    /// The split pair `P_i -> Λ^{r_i} -> P_i`: the inclusion, and the
    /// retraction `x ↦ (x_g·e_g)_g`.
    pub fn splitting(&self, i: usize) -> (ModuleHom, ModuleHom) {
        let p = self.projective(i);
        split_summand(&self.algebra, &p, &self.summands[i], &self.idempotents[i])
    }

    /// Kernel of `P_i -> P_{i-1}` (of the augmentation when `i = 0`).
    pub fn kernel(&self, i: usize) -> &Subspace {
        &self.kernels[i]
    }

    /// Matrix of `ε: F_0 -> M`.
    pub fn augmentation_matrix(&self) -> Mat {
        let d = self.algebra.dim();
        let m = &self.module;
        let mut cols = Vec::with_capacity(self.ranks[0] * d);
        for g in &self.augmentation {
            for b in 0..d {
                cols.push(m.act(b).apply(g));
            }
        }
        Mat::from_columns(m.field(), m.dim(), &cols)
    }

    /// Matrix of `d_i: F_i -> F_{i-1}` for `i >= 1`.
    pub fn differential_matrix(&self, i: usize) -> Mat {
        let a = &self.algebra;
        let d = a.dim();
        let mut cols = Vec::with_capacity(self.ranks[i] * d);
        for g in &self.differentials[i - 1] {
            for b in 0..d {
                cols.push(act_free(a, b, g));
            }
        }
        Mat::from_columns(a.field(), self.ranks[i - 1] * d, &cols)
    }

    /// `d_i: P_i -> P_{i-1}` (`i >= 1`), or the augmentation `P_0 -> M` for
    /// `i = 0`, in the bases of [`Self::projective`].
    pub fn differential(&self, i: usize) -> ModuleHom {
        let src = self.projective(i);
        let b = self.summands[i].basis_matrix();
        if i == 0 {
            let m = self.augmentation_matrix().dot(&b);
            return ModuleHom::new_unchecked(src, self.module.clone(), m);
        }
        let tgt = self.projective(i - 1);
        let m = self.summands[i - 1]
            .coordinate_map()
            .dot(&self.differential_matrix(i).dot(&b));
        ModuleHom::new_unchecked(src, tgt, m)
    }

    /// Basis of `Hom(P_i, N) = ⊕_g e_g N` inside `N^{r_i}`.
    pub fn hom_cochains(&self, i: usize, n: &Module) -> Mat {
        let rho: Vec<Mat> = self.idempotents[i].iter().map(|e| n.act_by(e)).collect();
        corner_cochains(n.field(), n.dim(), &rho)
    }

    /// Basis of `m ⊗ P_i = ⊕_g m e_g` inside `m^{r_i}`.
    pub fn tensor_chains(&self, i: usize, right_action: &[Mat], dm: usize) -> Mat {
        let f = self.algebra.field();
        let rho: Vec<Mat> = self.idempotents[i]
            .iter()
            .map(|e| super::combine(f, dm, right_action, e))
            .collect();
        corner_cochains(f, dm, &rho)
    }

    /// Coefficient `c_{jk} ∈ Λ` of generator `k` of `F_{i-1}` in `d_i(gen_j)`.
    fn coefficient(&self, i: usize, j: usize, k: usize) -> &[u64] {
        let d = self.algebra.dim();
        &self.differentials[i - 1][j][k * d..(k + 1) * d]
    }

    /// Matrix of `Hom(d_{i+1}, N): N^{r_i} -> N^{r_{i+1}}`; on the cochains
    /// of [`Self::hom_cochains`] it is the Hom complex differential.
    pub fn hom_differential(&self, i: usize, n: &Module) -> Mat {
        let f = self.algebra.field();
        let dn = n.dim();
        let (ri, rj) = (self.ranks[i], self.ranks[i + 1]);
        let mut m = Mat::zeros(f, rj * dn, ri * dn);
        for j in 0..rj {
            for k in 0..ri {
                let c = self.coefficient(i + 1, j, k);
                if c.iter().any(|&x| x != 0) {
                    m.set_block(j * dn, k * dn, &n.act_by(c));
                }
            }
        }
        m
    }

    /// Matrix of `m ⊗ d_i: m^{r_i} -> m^{r_{i-1}}` for a right module `m`
    /// given by its right-action matrices.
    pub fn tensor_differential(&self, i: usize, right_action: &[Mat], dm: usize) -> Mat {
        let f = self.algebra.field();
        let (ri, rk) = (self.ranks[i], self.ranks[i - 1]);
        let mut m = Mat::zeros(f, rk * dm, ri * dm);
        for j in 0..ri {
            for k in 0..rk {
                let c = self.coefficient(i, j, k);
                if c.iter().any(|&x| x != 0) {
                    m.set_block(k * dm, j * dm, &super::combine(f, dm, right_action, c));
                }
            }
        }
        m
    }

    /// `dim Ext^i(M, N)`; needs `i < length`.
    pub fn ext(&self, i: usize, n: &Module) -> Result<usize, ModuleError> {
        if i >= self.length() {
            return Err(ModuleError::BoundTooSmall {
                needed: i + 1,
                got: self.length(),
            });
        }
        if !same_algebra(&self.algebra, n.algebra()) {
            return Err(ModuleError::AlgebraMismatch);
        }
        let c = self.hom_cochains(i, n);
        let out = self.hom_differential(i, n).dot(&c).rank();
        let inc = if i == 0 {
            0
        } else {
            self.hom_differential(i - 1, n)
                .dot(&self.hom_cochains(i - 1, n))
                .rank()
        };
        Ok(c.cols() - out - inc)
    }

    /// `dim Tor_i(m, M)` for a right module `m`; needs `i < length`.
    pub fn tor(&self, i: usize, right_action: &[Mat], dm: usize) -> Result<usize, ModuleError> {
        if i >= self.length() {
            return Err(ModuleError::BoundTooSmall {
                needed: i + 1,
                got: self.length(),
            });
        }
        let c = self.tensor_chains(i, right_action, dm);
        let out = if i == 0 {
            0
        } else {
            self.tensor_differential(i, right_action, dm).dot(&c).rank()
        };
        let inc = self
            .tensor_differential(i + 1, right_action, dm)
            .dot(&self.tensor_chains(i + 1, right_action, dm))
            .rank();
        Ok(c.cols() - out - inc)
    }

    /// `Ω^k M` as a submodule of `F_{k-1}`; `Ω^0 M = M`.
    pub fn syzygy(&self, k: usize) -> Module {
        if k == 0 {
            return self.module.clone();
        }
        let free = Module::free(&self.algebra, self.ranks[k - 1]);
        free.submodule(&self.kernels[k - 1]).0
    }

    /// Checks `d∘d = 0` and exactness at every stage by ranks.
    pub fn verify(&self) -> bool {
        let mut prev = self.differential(0);
        if !prev.is_surjective() || !prev.is_equivariant() {
            return false;
        }
        for i in 1..=self.length() {
            let d = self.differential(i);
            if !d.is_equivariant() || !prev.after(&d).is_zero() {
                return false;
            }
            let kernel_dim = prev.source().dim() - prev.rank();
            if d.rank() != kernel_dim {
                return false;
            }
            prev = d;
        }
        true
    }
}

/// Greedy free cover.
pub fn free_cover(m: &Module) -> FreeCover {
    let a = m.algebra();
    let candidates: Vec<Vec<u64>> = (0..m.dim()).map(|i| basis(m.dim(), i)).collect();
    let gens: Vec<Vec<u64>> = choose_generators(
        a,
        m.dim(),
        &candidates,
        &|b, v| m.act(b).apply(v),
        &[a.unit().to_vec()],
        CoverStrategy::Greedy,
    )
    .into_iter()
    .map(|(g, _)| g)
    .collect();
    let d = a.dim();
    let mut cols = Vec::with_capacity(gens.len() * d);
    for g in &gens {
        for b in 0..d {
            cols.push(m.act(b).apply(g));
        }
    }
    let map = ModuleHom::new_unchecked(
        Module::free(a, gens.len()),
        m.clone(),
        Mat::from_columns(m.field(), m.dim(), &cols),
    );
    FreeCover {
        rank: gens.len(),
        generators: gens,
        map,
    }
}

fn basis(n: usize, i: usize) -> Vec<u64> {
    let mut e = vec![0u64; n];
    e[i] = 1;
    e
}

/// `Ω^k m`.
pub fn syzygy(m: &Module, k: usize) -> Module {
    if k == 0 {
        return m.clone();
    }
    FreeResolution::new(m, k - 1, CoverStrategy::Greedy).syzygy(k)
}

/// Whether `m` is projective: `Ext^1(m, Λ/rad Λ) = 0` when the radical is
/// available, otherwise whether the free cover `p: F -> m` splits.
pub fn is_projective(m: &Module) -> bool {
    if m.dim() == 0 {
        return true;
    }
    if let Ok(top) = Module::top(m.algebra()) {
        let res = FreeResolution::new(m, 2, CoverStrategy::Greedy);
        return res.ext(1, &top).expect("length 2") == 0;
    }
    let cover = free_cover(m);
    let free = cover.map.source().clone();
    let sections = hom_space(m, &free).expect("same algebra");
    if sections.is_empty() {
        return false;
    }
    let f = m.field();
    let cols: Vec<Vec<u64>> = sections
        .iter()
        .map(|s| cover.map.after(s).matrix().vec_cols())
        .collect();
    let a = Mat::from_columns(f, m.dim() * m.dim(), &cols);
    let b = Mat::column(f, &Mat::identity(f, m.dim()).vec_cols());
    solve(&a, &b).is_ok()
}

/// Projective dimension up to `bound`.
///
/// With the radical available, `pd M <= k` iff `Ext^{k+1}(M, Λ/rad Λ) = 0`;
/// otherwise the syzygies are tested for projectivity one by one.
pub fn proj_dim(m: &Module, bound: usize) -> Dim {
    let a = m.algebra();
    match Module::top(a) {
        Ok(top) => {
            let mut res = FreeResolution::new(m, 1, CoverStrategy::Greedy);
            for k in 0..=bound {
                while res.length() < k + 2 {
                    res.extend();
                }
                if res.ext(k + 1, &top).expect("length ensured") == 0 {
                    return Dim::Finite(k);
                }
            }
            Dim::AtLeast(bound)
        }
        Err(_) => {
            let res = FreeResolution::new(m, bound, CoverStrategy::Greedy);
            for k in 0..=bound {
                if is_projective(&res.syzygy(k)) {
                    return Dim::Finite(k);
                }
            }
            Dim::AtLeast(bound)
        }
    }
}

/// Injective dimension: the projective dimension of the dual over the
/// opposite algebra.
pub fn inj_dim(m: &Module, bound: usize) -> Dim {
    proj_dim(&m.dual(), bound)
}

/// `dim Ext^i(m, n)` from a greedy resolution of the given length.
pub fn ext_dim(
    m: &Module,
    n: &Module,
    i: usize,
    resolution_length: usize,
) -> Result<usize, ModuleError> {
    if i >= resolution_length {
        return Err(ModuleError::BoundTooSmall {
            needed: i + 1,
            got: resolution_length,
        });
    }
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    FreeResolution::new(m, i + 1, CoverStrategy::Greedy).ext(i, n)
}

/// `dim Tor_i(m, n)` for a right module `m`, given as a module over the
/// opposite of `n`'s algebra.
pub fn tor_dim(
    m: &Module,
    n: &Module,
    i: usize,
    resolution_length: usize,
) -> Result<usize, ModuleError> {
    if i >= resolution_length {
        return Err(ModuleError::BoundTooSmall {
            needed: i + 1,
            got: resolution_length,
        });
    }
    if **m.algebra() != *opposite_algebra(n.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    FreeResolution::new(n, i + 1, CoverStrategy::Greedy).tor(i, m.actions(), m.dim())
}

/// Global dimension as the projective dimension of `Λ / rad Λ`.
pub fn global_dimension(a: &Arc<Algebra>, bound: usize) -> Result<Dim, ModuleError> {
    let top = Module::top(a)?;
    Ok(proj_dim(&top, bound))
}
