//! Finite windows of totally acyclic complexes.

use alloc::vec::Vec;

use super::certificate::WindowCertificate;
use super::{is_gproj, GorensteinError, GorensteinReport};
use crate::linalg::{Mat, Subspace};
use crate::module::{
    hom_space, is_projective, split_summand, summand_space, CoverStrategy, FreeResolution, Module, ModuleHom,
};

/// `P^{-w} -> ... -> P^0 -> P^1 -> ... -> P^w` with `d^0 = λ∘κ` through the
/// marked module `X = Coker d^{-1}`.
#[derive(Clone, Debug)]
pub struct AcyclicWindow {
    pub width: usize,
    /// `terms[k]` is `P^{k-w}`.
    pub terms: Vec<Module>,
    /// `differentials[k]` is `d^{k-w}: P^{k-w} -> P^{k-w+1}`.
    pub differentials: Vec<ModuleHom>,
    /// Split pairs `P -> Λ^r -> P`, one per term.
    pub splittings: Vec<(ModuleHom, ModuleHom)>,
    pub cocycle: Module,
    pub kappa: ModuleHom,
    pub lambda: ModuleHom,
}

impl AcyclicWindow {
    /// `P^i` for `-w ≤ i ≤ w`.
    pub fn term(&self, i: isize) -> &Module {
        &self.terms[(i + self.width as isize) as usize]
    }

    /// `d^i` for `-w ≤ i < w`.
    pub fn differential(&self, i: isize) -> &ModuleHom {
        &self.differentials[(i + self.width as isize) as usize]
    }

    /// Checks the window invariants with the module layer: projective
    /// terms, equivariance, `d∘d = 0`, exactness and exactness of
    /// `Hom(-, Λ)` at interior positions.
    pub fn check(&self) -> bool {
        let w = self.width as isize;
        if self.terms.len() != 2 * self.width + 1 || self.differentials.len() != 2 * self.width {
            return false;
        }
        if !self.terms.iter().all(is_projective) {
            return false;
        }
        if !self.differentials.iter().all(|d| d.is_equivariant()) {
            return false;
        }
        if !self.kappa.is_surjective() || !self.lambda.is_injective() {
            return false;
        }
        if self.lambda.after(&self.kappa).matrix() != self.differential(0).matrix() {
            return false;
        }
        let a = self.cocycle.algebra();
        let reg = Module::regular(a);
        for i in (-w + 1)..w {
            let (din, dout) = (self.differential(i - 1), self.differential(i));
            if !dout.after(din).is_zero() {
                return false;
            }
            if din.rank() + dout.rank() != self.term(i).dim() {
                return false;
            }
            let hom_in = hom_space(self.term(i), &reg).expect("same algebra");
            let hom_out = hom_space(self.term(i + 1), &reg).expect("same algebra");
            let restrict = |hs: &[ModuleHom], d: &ModuleHom| {
                let cols: Vec<Vec<u64>> = hs.iter().map(|h| h.after(d).matrix().vec_cols()).collect();
                Mat::from_columns(a.field(), reg.dim() * d.source().dim(), &cols).rank()
            };
            if hom_in.len() - restrict(&hom_in, din) != restrict(&hom_out, dout) {
                return false;
            }
        }
        true
    }

    /// Flat, replayable form of the window.
    pub fn certificate(&self) -> WindowCertificate {
        WindowCertificate::from_window(self)
    }
}

/// `x -> P` with `P = ⊕_g Λe_g` for generators `h_g ∈ Hom(x, Λe_g)` of
/// `Hom(x, Λ)` as a right `Λ`-module, chosen greedily modulo
/// `Hom(x, Λ)·rad Λ`; every map `x -> Λ` factors through it.
pub fn left_approximation(x: &Module) -> ModuleHom {
    approximation_with_splitting(x).0
}

fn approximation_with_splitting(x: &Module) -> (ModuleHom, (ModuleHom, ModuleHom)) {
    let a = x.algebra();
    let f = a.field();
    let d = a.dim();
    let homs = hom_space(x, &Module::regular(a)).expect("same algebra");
    let mut span = Subspace::zero(f, d * x.dim());
    if let Ok(rad) = a.radical() {
        for r in rad.basis() {
            let m = a.right_mult_by(r);
            for h in &homs {
                span.insert(&m.dot(h.matrix()).vec_cols());
            }
        }
    }
    let mut gens: Vec<Mat> = Vec::new();
    let mut idems: Vec<Vec<u64>> = Vec::new();
    for e in a.idempotents() {
        let re = a.right_mult_by(e);
        for h in &homs {
            let c = re.dot(h.matrix());
            if span.contains(&c.vec_cols()) {
                continue;
            }
            for j in 0..d {
                span.insert(&a.right_mult(j).dot(&c).vec_cols());
            }
            gens.push(c);
            idems.push(e.clone());
        }
    }
    let stacked = if gens.is_empty() {
        Mat::zeros(f, 0, x.dim())
    } else {
        let refs: Vec<&Mat> = gens.iter().collect();
        Mat::vstack(&refs).expect("equal widths")
    };
    let s = summand_space(a, &idems);
    let p = Module::free(a, idems.len()).submodule(&s).0;
    let map = ModuleHom::new_unchecked(x.clone(), p.clone(), s.coordinate_map().dot(&stacked));
    (map, split_summand(a, &p, &s, &idems))
}

/// A window of width `width ≥ 1` around a Gorenstein-projective `x`: the
/// projective resolution on the right, iterated left approximations on
/// the left.
pub fn totally_acyclic_window(
    report: &GorensteinReport,
    x: &Module,
    width: usize,
) -> Result<AcyclicWindow, GorensteinError> {
    if width == 0 {
        return Err(GorensteinError::PreconditionFailed("window width must be positive"));
    }
    let x = x.rebase(&report.algebra)?;
    if !is_gproj(report, &x)? {
        return Err(GorensteinError::NotGproj);
    }
    let res = FreeResolution::new(&x, width, CoverStrategy::Greedy);
    let mut terms = Vec::with_capacity(2 * width + 1);
    let mut differentials = Vec::with_capacity(2 * width);
    let mut splittings = Vec::with_capacity(2 * width + 1);
    for k in (0..=width).rev() {
        terms.push(res.projective(k));
        splittings.push(res.splitting(k));
        if k > 0 {
            differentials.push(res.differential(k));
        }
    }
    let kappa = res.differential(0);
    let mut lambda = None;
    let mut cur = x.clone();
    let mut to_cur = kappa.clone();
    for step in 1..=width {
        if step > 1 && !is_gproj(report, &cur)? {
            return Err(GorensteinError::NotGproj);
        }
        let (approx, split) = approximation_with_splitting(&cur);
        if !approx.is_injective() {
            return Err(GorensteinError::ApproximationNotInjective { step });
        }
        differentials.push(approx.after(&to_cur));
        let p = approx.target().clone();
        splittings.push(split);
        terms.push(p);
        if step == 1 {
            lambda = Some(approx.clone());
        }
        let (c, pi) = approx.cokernel();
        cur = c;
        to_cur = pi;
    }
    let window = AcyclicWindow {
        width,
        terms,
        differentials,
        splittings,
        cocycle: x,
        kappa,
        lambda: lambda.expect("width is positive"),
    };
    if !window.check() {
        return Err(GorensteinError::WindowInvalid);
    }
    Ok(window)
}
