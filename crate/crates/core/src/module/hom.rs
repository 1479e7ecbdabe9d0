use alloc::vec;
use alloc::vec::Vec;

use super::resolution::{CoverStrategy, FreeResolution};
use super::tensor::{tensor_over, Tensor};
use super::{same_algebra, Bimodule, Module, ModuleError, ModuleHom};
use crate::field::PrimeField;
use crate::linalg::{solve, Mat, Subspace};

/// Echelon form of a family of matrices of the same shape, flattened
/// column-major.
fn echelon(field: PrimeField, rows: usize, cols: usize, mats: &[Mat]) -> (Subspace, Vec<Mat>) {
    let vecs: Vec<Vec<u64>> = mats.iter().map(Mat::vec_cols).collect();
    let space = Subspace::spanned_by(field, rows * cols, &vecs);
    let basis = space
        .basis()
        .iter()
        .map(|v| Mat::unvec_cols(field, rows, cols, v))
        .collect();
    (space, basis)
}

/// Matrices of a basis of `Hom(m, n)`, computed from a presentation of `m`.
fn hom_matrices(m: &Module, n: &Module) -> Result<Vec<Mat>, ModuleError> {
    if !same_algebra(m.algebra(), n.algebra()) {
        return Err(ModuleError::AlgebraMismatch);
    }
    let f = m.field();
    if m.dim() == 0 || n.dim() == 0 {
        return Ok(Vec::new());
    }
    let a = m.algebra();
    let d = a.dim();
    let res = FreeResolution::new(m, 1, CoverStrategy::Greedy);
    let r0 = res.rank(0);
    let dn = n.dim();
    let cochains = res.hom_cochains(0, n);
    let tuples: Vec<Vec<u64>> = Subspace::kernel_of(&res.hom_differential(0, n).dot(&cochains))
        .basis()
        .iter()
        .map(|c| cochains.apply(c))
        .collect();
    let section = solve(&res.augmentation_matrix(), &Mat::identity(f, m.dim()))?;
    let mut out = Vec::with_capacity(tuples.len());
    for t in &tuples {
        let mut w = Mat::zeros(f, dn, r0 * d);
        for g in 0..r0 {
            let ng = &t[g * dn..(g + 1) * dn];
            for b in 0..d {
                let col = n.act(b).apply(ng);
                for (r, &x) in col.iter().enumerate() {
                    w.set(r, g * d + b, x);
                }
            }
        }
        out.push(w.dot(&section));
    }
    Ok(echelon(f, dn, m.dim(), &out).1)
}

/// A basis of `Hom(m, n)` in reduced echelon form (matrices flattened
/// column-major).
pub fn hom_space(m: &Module, n: &Module) -> Result<Vec<ModuleHom>, ModuleError> {
    Ok(hom_matrices(m, n)?
        .into_iter()
        .map(|h| ModuleHom::new_unchecked(m.clone(), n.clone(), h))
        .collect())
}

/// Some isomorphism `m -> n`, if one is found.
///
/// Tries basis homomorphisms, then a deterministic sequence of
/// combinations, then a bounded grid of small coefficients.
pub fn find_isomorphism(m: &Module, n: &Module) -> Option<ModuleHom> {
    if m.dim() != n.dim() || !same_algebra(m.algebra(), n.algebra()) {
        return None;
    }
    if m.dim() == 0 {
        return Some(ModuleHom::zero(m, n));
    }
    let basis = hom_space(m, n).ok()?;
    if basis.is_empty() {
        return None;
    }
    let f = m.field();
    for h in &basis {
        if h.is_isomorphism() {
            return Some(h.clone());
        }
    }
    let combo = |c: &[u64]| {
        let mut acc = Mat::zeros(f, n.dim(), m.dim());
        for (h, &x) in basis.iter().zip(c) {
            if x != 0 {
                acc.add_scaled(x, h.matrix());
            }
        }
        ModuleHom::new_unchecked(m.clone(), n.clone(), acc)
    };
    let k = basis.len();
    for t in 1..=12u64 {
        let c: Vec<u64> = (0..k).map(|i| f.pow(f.reduce(i as u64 + 2), t)).collect();
        let h = combo(&c);
        if h.is_isomorphism() {
            return Some(h);
        }
    }
    let base = 3u64.min(f.modulus());
    let cap = 1usize << 14;
    let mut c = vec![0u64; k];
    for _ in 0..cap {
        let mut i = 0;
        loop {
            if i == k {
                return None;
            }
            c[i] += 1;
            if c[i] < base {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        let h = combo(&c);
        if h.is_isomorphism() {
            return Some(h);
        }
    }
    None
}

/// `Hom_B(M, Y)` as a left `A`-module, for a bimodule `_B M_A` and a left
/// `B`-module `Y`, with `(a·h)(m) = h(m·a)`.
#[derive(Clone, Debug)]
pub struct HomModule {
    pub module: Module,
    /// Basis homomorphisms as `dim Y x dim M` matrices.
    pub basis: Vec<Mat>,
    space: Subspace,
    bimodule: Bimodule,
    target: Module,
}

impl HomModule {
    pub fn new(m: &Bimodule, y: &Module) -> Result<HomModule, ModuleError> {
        let f = m.field();
        let hs = hom_matrices(&m.as_left_module(), y)?;
        let (space, basis) = echelon(f, y.dim(), m.dim(), &hs);
        let k = basis.len();
        let action = m
            .right_action()
            .iter()
            .map(|r| {
                let cols: Vec<Vec<u64>> = basis
                    .iter()
                    .map(|h| space.coords(&h.dot(r).vec_cols()).expect("closed under action"))
                    .collect();
                Mat::from_columns(f, k, &cols)
            })
            .collect();
        let module = Module::new_unchecked(m.right_algebra().clone(), k, action);
        Ok(HomModule {
            module,
            basis,
            space,
            bimodule: m.clone(),
            target: y.clone(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn bimodule(&self) -> &Bimodule {
        &self.bimodule
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    /// Coordinates of a homomorphism matrix.
    pub fn coords(&self, h: &Mat) -> Option<Vec<u64>> {
        self.space.coords(&h.vec_cols())
    }

    /// The homomorphism with the given coordinates.
    pub fn element(&self, c: &[u64]) -> Mat {
        let f = self.target.field();
        let mut acc = Mat::zeros(f, self.target.dim(), self.bimodule.dim());
        for (h, &x) in self.basis.iter().zip(c) {
            if x != 0 {
                acc.add_scaled(x, h);
            }
        }
        acc
    }

    /// Evaluation `M ⊗_A Hom_B(M, Y) -> Y`, with the tensor product it lives on.
    pub fn evaluation(&self) -> Result<(Tensor, ModuleHom), ModuleError> {
        let f = self.target.field();
        let t = tensor_over(&self.bimodule, &self.module)?;
        let (dm, dh) = (self.bimodule.dim(), self.dim());
        let mut e = Mat::zeros(f, self.target.dim(), dm * dh);
        for (j, h) in self.basis.iter().enumerate() {
            for i in 0..dm {
                for r in 0..self.target.dim() {
                    e.set(r, i * dh + j, h.get(r, i));
                }
            }
        }
        let ev = t.descend(&e, &self.target);
        Ok((t, ev))
    }

    /// Adjoint `X -> Hom_B(M, Y)` of a map `M ⊗_A X -> Y`, where `t` is
    /// `M ⊗_A X`.
    pub fn adjoint(&self, x: &Module, t: &Tensor, map: &ModuleHom) -> ModuleHom {
        let f = self.target.field();
        let (dm, dx) = (t.left_dim, t.right_dim);
        let mut cols = Vec::with_capacity(dx);
        for j in 0..dx {
            let mut h = Mat::zeros(f, self.target.dim(), dm);
            for i in 0..dm {
                let img = map.matrix().apply(&t.pure(i, j));
                for (r, &v) in img.iter().enumerate() {
                    h.set(r, i, v);
                }
            }
            cols.push(self.coords(&h).expect("adjoint lands in Hom"));
        }
        ModuleHom::new_unchecked(x.clone(), self.module.clone(), Mat::from_columns(f, self.dim(), &cols))
    }

    /// `Hom_B(M, g): Hom_B(M, Y) -> Hom_B(M, Y')`, where `other` is the Hom
    /// module into `Y'`.
    pub fn map_target(&self, g: &ModuleHom, other: &HomModule) -> ModuleHom {
        let f = self.target.field();
        let cols: Vec<Vec<u64>> = self
            .basis
            .iter()
            .map(|h| other.coords(&g.matrix().dot(h)).expect("composite is a homomorphism"))
            .collect();
        ModuleHom::new_unchecked(
            self.module.clone(),
            other.module.clone(),
            Mat::from_columns(f, other.dim(), &cols),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn hom_dimensions_over_a2() {
        let a = fixtures::a2();
        let [s1, s2] = fixtures::a2_simples();
        let p1 = fixtures::a2_projective(0);
        let p2 = fixtures::a2_projective(1);
        let dims = |m: &Module, n: &Module| hom_space(m, n).unwrap().len();
        assert_eq!(dims(&p1, &p1), 1);
        assert_eq!(dims(&p2, &p1), 0);
        assert_eq!(dims(&p1, &p2), 1);
        assert_eq!(dims(&s1, &s2), 0);
        assert_eq!(dims(&s1, &s1), 1);
        let reg = Module::regular(&a);
        assert_eq!(dims(&reg, &reg), 3);
        for h in hom_space(&reg, &reg).unwrap() {
            assert!(h.is_equivariant());
        }
    }

    #[test]
    fn regular_end_is_algebra_dim() {
        let d = fixtures::dual_numbers();
        let reg = Module::regular(&d);
        assert_eq!(hom_space(&reg, &reg).unwrap().len(), 2);
        let iso = find_isomorphism(&reg, &reg).unwrap();
        assert!(iso.is_isomorphism() && iso.is_equivariant());
    }

    #[test]
    fn hom_module_of_regular_bimodule() {
        let a = fixtures::a2();
        let reg = Bimodule::regular(&a);
        let y = fixtures::a2_projective(1);
        let h = HomModule::new(&reg, &y).unwrap();
        assert_eq!(h.dim(), y.dim());
        assert!(h.module.validate().is_ok());
        let (t, ev) = h.evaluation().unwrap();
        assert_eq!(t.dim(), y.dim());
        assert!(ev.is_equivariant());
        assert!(ev.is_isomorphism());
    }
}
