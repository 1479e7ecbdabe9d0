use alloc::vec::Vec;

use super::{same_algebra, Bimodule, Module, ModuleError, ModuleHom};
use crate::field::PrimeField;
use crate::linalg::{Mat, Subspace};

/// `M ⊗_A X` as a quotient of `M ⊗_k X`.
///
/// The pure tensor `m_i ⊗ x_j` sits at coordinate `i * right_dim + j` of
/// `M ⊗_k X`; `q` maps onto the quotient basis and `lift` is the section
/// choosing complement coordinates.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub module: Module,
    pub q: Mat,
    pub lift: Mat,
    pub left_dim: usize,
    pub right_dim: usize,
    reps: Vec<usize>,
}

/// `M ⊗_A N` for bimodules `_B M_A` and `_A N_C`, a `(B, C)`-bimodule.
#[derive(Clone, Debug)]
pub struct BiTensor {
    pub bimodule: Bimodule,
    pub q: Mat,
    pub lift: Mat,
    pub left_dim: usize,
    pub right_dim: usize,
    reps: Vec<usize>,
}

/// The relations `m·a ⊗ v − m ⊗ a·v` over the generators `a` of the middle
/// algebra.
fn relations(
    field: PrimeField,
    dm: usize,
    m_right: &[Mat],
    dx: usize,
    x_left: &[Mat],
    gens: &[usize],
) -> Subspace {
    let n = dm * dx;
    let mut rel = Subspace::zero(field, n);
    let mut v = alloc::vec![0u64; n];
    for &g in gens {
        let r = &m_right[g];
        let l = &x_left[g];
        for i in 0..dm {
            for j in 0..dx {
                if rel.is_full() {
                    return rel;
                }
                v.iter_mut().for_each(|x| *x = 0);
                for k in 0..dm {
                    let c = r.get(k, i);
                    if c != 0 {
                        v[k * dx + j] = field.add(v[k * dx + j], c);
                    }
                }
                for l2 in 0..dx {
                    let c = l.get(l2, j);
                    if c != 0 {
                        v[i * dx + l2] = field.sub(v[i * dx + l2], c);
                    }
                }
                rel.insert(&v);
            }
        }
    }
    rel
}

/// `M ⊗_A X` for a bimodule `_B M_A` and a left `A`-module `X`.
pub fn tensor_over(m: &Bimodule, x: &Module) -> Result<Tensor, ModuleError> {
    if !same_algebra(m.right_algebra(), x.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let f = m.field();
    let (dm, dx) = (m.dim(), x.dim());
    let rel = relations(
        f,
        dm,
        m.right_action(),
        dx,
        x.actions(),
        x.algebra().generators(),
    );
    let q = rel.quotient_map();
    let lift = rel.quotient_lift();
    let id_x = Mat::identity(f, dx);
    let action = m
        .left_action()
        .iter()
        .map(|l| q.dot(&l.kron(&id_x).dot(&lift)))
        .collect();
    let module = Module::new_unchecked(m.left_algebra().clone(), q.rows(), action);
    Ok(Tensor {
        module,
        q,
        lift,
        left_dim: dm,
        right_dim: dx,
        reps: rel.complement(),
    })
}

/// `M ⊗_A N` for bimodules `_B M_A` and `_A N_C`.
pub fn tensor_bimodules(m: &Bimodule, n: &Bimodule) -> Result<BiTensor, ModuleError> {
    if !same_algebra(m.right_algebra(), n.left_algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let f = m.field();
    let (dm, dn) = (m.dim(), n.dim());
    let rel = relations(
        f,
        dm,
        m.right_action(),
        dn,
        n.left_action(),
        n.left_algebra().generators(),
    );
    let q = rel.quotient_map();
    let lift = rel.quotient_lift();
    let id_n = Mat::identity(f, dn);
    let id_m = Mat::identity(f, dm);
    let left: Vec<Mat> = m
        .left_action()
        .iter()
        .map(|l| q.dot(&l.kron(&id_n).dot(&lift)))
        .collect();
    let right: Vec<Mat> = n
        .right_action()
        .iter()
        .map(|r| q.dot(&id_m.kron(r).dot(&lift)))
        .collect();
    let bimodule = Bimodule::new_unchecked(
        m.left_algebra().clone(),
        n.right_algebra().clone(),
        q.rows(),
        left,
        right,
    );
    Ok(BiTensor {
        bimodule,
        q,
        lift,
        left_dim: dm,
        right_dim: dn,
        reps: rel.complement(),
    })
}

impl Tensor {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// Class of `m_i ⊗ x_j`.
    pub fn pure(&self, i: usize, j: usize) -> Vec<u64> {
        self.q.col(i * self.right_dim + j)
    }

    /// The pure tensor `(i, j)` whose class is basis vector `k`.
    pub fn representative(&self, k: usize) -> (usize, usize) {
        let r = self.reps[k];
        (r / self.right_dim, r % self.right_dim)
    }

    /// `Id_M ⊗ h: M ⊗ X -> M ⊗ X'`, where `target` is `M ⊗ X'`.
    pub fn map_right(&self, h: &ModuleHom, target: &Tensor) -> ModuleHom {
        let f = self.module.field();
        let k = Mat::identity(f, self.left_dim).kron(h.matrix());
        ModuleHom::new_unchecked(
            self.module.clone(),
            target.module.clone(),
            target.q.dot(&k.dot(&self.lift)),
        )
    }

    /// Descends a map given on `M ⊗_k X` (columns indexed by pure tensors).
    pub fn descend(&self, on_pure: &Mat, target: &Module) -> ModuleHom {
        ModuleHom::new_unchecked(self.module.clone(), target.clone(), on_pure.dot(&self.lift))
    }

    /// Whether a map on `M ⊗_k X` vanishes on the tensor relations.
    pub fn is_balanced(&self, on_pure: &Mat) -> bool {
        on_pure.dot(&self.lift).dot(&self.q) == *on_pure
    }
}

impl BiTensor {
    pub fn dim(&self) -> usize {
        self.bimodule.dim()
    }

    pub fn pure(&self, i: usize, j: usize) -> Vec<u64> {
        self.q.col(i * self.right_dim + j)
    }

    /// The pure tensor `(i, j)` whose class is basis vector `k`.
    pub fn representative(&self, k: usize) -> (usize, usize) {
        let r = self.reps[k];
        (r / self.right_dim, r % self.right_dim)
    }
}
