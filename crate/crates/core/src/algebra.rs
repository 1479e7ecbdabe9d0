//! Finite-dimensional associative unital algebras given by structure constants.
//!
//! Path algebras compose left to right: for arrows `a: u -> v` and `b: v -> w`
//! the product `a·b` is the path "a then b", and `e_u·a = a = a·e_v`.

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::field::PrimeField;
use crate::linalg::{Mat, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// Structure constant array or unit vector has the wrong length or range.
    Shape,
    /// `(b_i b_j) b_k != b_i (b_j b_k)`.
    Associativity { i: usize, j: usize, k: usize },
    LeftUnit { i: usize },
    RightUnit { i: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape => write!(f, "structure constants or unit have the wrong shape"),
            Violation::Associativity { i, j, k } => {
                write!(f, "associativity fails on basis triple ({i},{j},{k})")
            }
            Violation::LeftUnit { i } => write!(f, "1·b_{i} != b_{i}"),
            Violation::RightUnit { i } => write!(f, "b_{i}·1 != b_{i}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    Invalid(Violation),
    CyclicQuiver,
    BadVertex { arrow: usize },
    UnitInIdeal,
    RadicalNotNilpotent,
    BadVector { expected: usize, got: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::Invalid(v) => write!(f, "invalid algebra: {v}"),
            AlgebraError::CyclicQuiver => write!(f, "quiver has an oriented cycle"),
            AlgebraError::BadVertex { arrow } => write!(f, "arrow {arrow} has an invalid endpoint"),
            AlgebraError::UnitInIdeal => write!(f, "the ideal contains the unit"),
            AlgebraError::RadicalNotNilpotent => write!(
                f,
                "trace-form radical is not nilpotent (characteristic must exceed the dimension)"
            ),
            AlgebraError::BadVector { expected, got } => {
                write!(f, "vector of length {got}, expected {expected}")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

/// An associative unital algebra over GF(p) with basis `b_0..b_{dim-1}`.
pub struct Algebra {
    field: PrimeField,
    dim: usize,
    mult: Vec<u64>,
    unit: Vec<u64>,
    left: Vec<Mat>,
    right: Vec<Mat>,
    generators: Vec<usize>,
    radical: Result<Subspace, AlgebraError>,
    idempotents: Vec<Vec<u64>>,
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Algebra")
            .field("p", &self.field.modulus())
            .field("dim", &self.dim)
            .finish()
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.dim == other.dim
            && self.unit == other.unit
            && self.mult == other.mult
    }
}

impl Eq for Algebra {}

/// A quiver with vertices `0..vertices` and arrows `(source, target)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: usize,
    pub arrows: Vec<(usize, usize)>,
}

/// A path in a quiver: a vertex (trivial path) or a nonempty arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Path {
    Trivial(usize),
    Arrows(Vec<usize>),
}

impl Algebra {
    /// Builds and validates an algebra.
    pub fn new(
        field: PrimeField,
        dim: usize,
        mult: Vec<u64>,
        unit: Vec<u64>,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        let a = Algebra::new_unchecked(field, dim, mult, unit)?;
        validate_algebra(&a).map_err(AlgebraError::Invalid)?;
        Ok(a)
    }

    /// Builds an algebra without checking the associativity and unit laws.
    /// Use [`validate_algebra`] to check them.
    pub fn new_unchecked(
        field: PrimeField,
        dim: usize,
        mult: Vec<u64>,
        unit: Vec<u64>,
    ) -> Result<Arc<Algebra>, AlgebraError> {
        let p = field.modulus();
        if mult.len() != dim * dim * dim
            || unit.len() != dim
            || mult.iter().chain(&unit).any(|&x| x >= p)
        {
            return Err(AlgebraError::Invalid(Violation::Shape));
        }
        let idx = |i: usize, j: usize, k: usize| (i * dim + j) * dim + k;
        let left = (0..dim)
            .map(|i| Mat::from_fn(field, dim, dim, |k, j| mult[idx(i, j, k)]))
            .collect();
        let right = (0..dim)
            .map(|i| Mat::from_fn(field, dim, dim, |k, j| mult[idx(j, i, k)]))
            .collect();
        let mut a = Algebra {
            field,
            dim,
            mult,
            unit,
            left,
            right,
            generators: Vec::new(),
            radical: Err(AlgebraError::RadicalNotNilpotent),
            idempotents: Vec::new(),
        };
        a.generators = a.compute_generators();
        a.radical = a.compute_radical();
        a.idempotents = a.compute_idempotents();
        Ok(Arc::new(a))
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    /// Flat structure constants, index `(i*dim + j)*dim + k`.
    pub fn structure_constants(&self) -> &[u64] {
        &self.mult
    }

    #[inline]
    pub fn c(&self, i: usize, j: usize, k: usize) -> u64 {
        self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Coefficients of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[u64] {
        let s = (i * self.dim + j) * self.dim;
        &self.mult[s..s + self.dim]
    }

    /// Left multiplication by `b_i`: column `j` holds `b_i b_j`.
    pub fn left_mult(&self, i: usize) -> &Mat {
        &self.left[i]
    }

    /// Right multiplication by `b_i`: column `j` holds `b_j b_i`.
    pub fn right_mult(&self, i: usize) -> &Mat {
        &self.right[i]
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_mult_by(&self, x: &[u64]) -> Mat {
        self.combine(&self.left, x)
    }

    /// Right multiplication by an arbitrary element.
    pub fn right_mult_by(&self, x: &[u64]) -> Mat {
        self.combine(&self.right, x)
    }

    fn combine(&self, mats: &[Mat], x: &[u64]) -> Mat {
        let mut m = Mat::zeros(self.field, self.dim, self.dim);
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                m.add_scaled(c, &mats[i]);
            }
        }
        m
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u64> {
        let mut v = vec![0; self.dim];
        v[i] = 1;
        v
    }

    pub fn zero_vector(&self) -> Vec<u64> {
        vec![0; self.dim]
    }

    /// Product of two elements.
    pub fn mul(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut out = vec![0u64; self.dim];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                f.axpy(&mut out, f.mul(xi, yj), self.basis_product(i, j));
            }
        }
        out
    }

    pub fn is_idempotent(&self, x: &[u64]) -> bool {
        x.len() == self.dim && self.mul(x, x) == x
    }

    /// Basis indices that generate the algebra together with the unit.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    fn compute_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = Subspace::zero(self.field, self.dim);
        if self.dim == 0 {
            return gens;
        }
        span.insert(&self.unit);
        for i in 0..self.dim {
            if span.contains(&self.basis_vector(i)) {
                continue;
            }
            gens.push(i);
            // Close under right multiplication by generators: the span of all
            // words in the generators.
            let mut queue: VecDeque<Vec<u64>> = span.basis().iter().cloned().collect();
            if span.insert(&self.basis_vector(i)) {
                queue.push_back(self.basis_vector(i));
            }
            while let Some(v) = queue.pop_front() {
                for &g in &gens {
                    let w = self.right[g].apply(&v);
                    if span.insert(&w) {
                        queue.push_back(w);
                    }
                }
            }
            if span.is_full() {
                break;
            }
        }
        gens
    }

    fn compute_radical(&self) -> Result<Subspace, AlgebraError> {
        let f = self.field;
        let n = self.dim;
        // Tr(L_{b_k}) and the trace form T[x][y] = Tr(L_{b_x b_y}).
        let tr: Vec<u64> = (0..n).map(|k| self.left[k].trace()).collect();
        let t = Mat::from_fn(f, n, n, |x, y| {
            let mut s = 0;
            for (k, &tk) in tr.iter().enumerate() {
                s = f.mul_add(s, self.c(x, y, k), tk);
            }
            s
        });
        let rad = Subspace::kernel_of(&t);
        if !self.is_two_sided_ideal(&rad) {
            return Err(AlgebraError::RadicalNotNilpotent);
        }
        let mut power = rad.clone();
        while power.dim() > 0 {
            let mut next = Subspace::zero(f, n);
            for x in power.basis() {
                for y in rad.basis() {
                    next.insert(&self.mul(x, y));
                }
            }
            if next.dim() == power.dim() {
                return Err(AlgebraError::RadicalNotNilpotent);
            }
            power = next;
        }
        Ok(rad)
    }

    /// A complete set of orthogonal idempotents summing to 1.
    ///
    /// Primitive whenever `A / rad A` is a product of copies of the field
    /// (every basic algebra over a splitting field); otherwise some members
    /// may still decompose further.
    pub fn idempotents(&self) -> &[Vec<u64>] {
        &self.idempotents
    }

    fn compute_idempotents(&self) -> Vec<Vec<u64>> {
        if self.dim == 0 {
            return Vec::new();
        }
        // Idempotent basis vectors that already form a complete orthogonal
        // set (vertices of a path algebra) are kept as the starting point.
        let basis_idem: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| self.basis_vector(i))
            .filter(|v| self.is_idempotent(v))
            .collect();
        let mut start = vec![self.unit.clone()];
        if self.is_complete_orthogonal(&basis_idem) {
            start = basis_idem;
        }
        let Ok(rad) = self.radical.as_ref() else {
            return start;
        };
        let mut done = Vec::new();
        let mut work = start;
        while let Some(e) = work.pop() {
            match self.split_idempotent(&e, rad) {
                Some(parts) => work.extend(parts),
                None => done.push(e),
            }
        }
        done.sort();
        done
    }

    fn is_complete_orthogonal(&self, es: &[Vec<u64>]) -> bool {
        if es.is_empty() {
            return false;
        }
        let f = self.field;
        let mut sum = vec![0u64; self.dim];
        for (i, e) in es.iter().enumerate() {
            f.axpy(&mut sum, 1, e);
            for (j, g) in es.iter().enumerate() {
                if i != j && self.mul(e, g).iter().any(|&x| x != 0) {
                    return false;
                }
            }
        }
        sum == self.unit
    }

    /// Splits `e` into orthogonal idempotents using an element of `eAe`
    /// whose image modulo the radical has a split, squarefree minimal
    /// polynomial of degree at least two.
    fn split_idempotent(&self, e: &[u64], rad: &Subspace) -> Option<Vec<Vec<u64>>> {
        let f = self.field;
        let ebar = rad.reduce(e);
        if ebar.iter().all(|&x| x == 0) {
            return None;
        }
        let corner: Vec<Vec<u64>> = (0..self.dim)
            .map(|i| self.mul(&self.mul(e, &self.basis_vector(i)), e))
            .collect();
        let mut candidates = corner.clone();
        let mut mix = vec![0u64; self.dim];
        for (i, c) in corner.iter().enumerate() {
            f.axpy(&mut mix, f.reduce(i as u64 + 1), c);
        }
        candidates.push(mix);
        for z in candidates {
            // Minimal polynomial of z modulo the radical, in the corner with unit e.
            let mut powers = vec![ebar.clone()];
            let mut span = Subspace::zero(f, self.dim);
            span.insert(&ebar);
            let mut cur = e.to_vec();
            let poly = loop {
                cur = self.mul(&cur, &z);
                let red = rad.reduce(&cur);
                if span.contains(&red) {
                    let basis = Mat::from_columns(f, self.dim, &powers);
                    let c = crate::linalg::solve(&basis, &Mat::column(f, &red)).ok()?;
                    let mut p: Vec<u64> = (0..powers.len()).map(|i| f.neg(c.get(i, 0))).collect();
                    p.push(1);
                    break p;
                }
                span.insert(&red);
                powers.push(red);
            };
            let deg = poly.len() - 1;
            if deg < 2 {
                continue;
            }
            let roots = crate::poly::roots(f, &poly);
            if roots.len() != deg {
                continue;
            }
            // Lagrange idempotents ∏_{μ≠λ} (z − μe)/(λ − μ), lifted in turn.
            let mut parts = Vec::with_capacity(deg);
            let mut rest = e.to_vec();
            for (k, &lam) in roots.iter().enumerate() {
                if k + 1 == deg {
                    parts.push(rest.clone());
                    break;
                }
                let mut x = e.to_vec();
                for &mu in &roots {
                    if mu == lam {
                        continue;
                    }
                    let mut factor = z.clone();
                    f.axpy(&mut factor, f.neg(mu), e);
                    let s = f.inv(f.sub(lam, mu));
                    x = self.mul(&x, &factor).into_iter().map(|c| f.mul(c, s)).collect();
                }
                let x = self.mul(&self.mul(&rest, &x), &rest);
                let lifted = self.lift_idempotent(&x);
                rest = rest.iter().zip(&lifted).map(|(&a, &b)| f.sub(a, b)).collect();
                parts.push(lifted);
            }
            return Some(parts);
        }
        None
    }

    /// Lifts an element that is idempotent modulo the radical by iterating
    /// `x ↦ 3x² − 2x³`.
    fn lift_idempotent(&self, x: &[u64]) -> Vec<u64> {
        let f = self.field;
        let mut x = x.to_vec();
        for _ in 0..64 {
            let x2 = self.mul(&x, &x);
            if x2 == x {
                break;
            }
            let x3 = self.mul(&x2, &x);
            x = x2
                .iter()
                .zip(&x3)
                .map(|(&a, &b)| f.sub(f.mul(3, a), f.mul(2, b)))
                .collect();
        }
        x
    }

    /// Jacobson radical via the trace form. Requires `p > dim`.
    pub fn radical(&self) -> Result<&Subspace, AlgebraError> {
        self.radical.as_ref().map_err(|e| e.clone())
    }

    /// Whether a subspace is closed under multiplication by basis elements on
    /// both sides.
    pub fn is_two_sided_ideal(&self, s: &Subspace) -> bool {
        s.basis().iter().all(|v| {
            (0..self.dim)
                .all(|i| s.contains(&self.left[i].apply(v)) && s.contains(&self.right[i].apply(v)))
        })
    }

    /// Two-sided ideal generated by the given vectors.
    pub fn ideal_closure(&self, gens: &[Vec<u64>]) -> Result<Subspace, AlgebraError> {
        let mut s = Subspace::zero(self.field, self.dim);
        let mut queue = VecDeque::new();
        for g in gens {
            if g.len() != self.dim {
                return Err(AlgebraError::BadVector {
                    expected: self.dim,
                    got: g.len(),
                });
            }
            if s.insert(g) {
                queue.push_back(g.clone());
            }
        }
        while let Some(v) = queue.pop_front() {
            for i in 0..self.dim {
                for w in [self.left[i].apply(&v), self.right[i].apply(&v)] {
                    if s.insert(&w) {
                        queue.push_back(w);
                    }
                }
            }
        }
        Ok(s)
    }
}

/// Checks associativity and the unit laws, returning the first failure.
pub fn validate_algebra(a: &Algebra) -> Result<(), Violation> {
    let n = a.dim;
    for i in 0..n {
        if a.left_mult_by(&a.unit).col(i) != a.basis_vector(i) {
            return Err(Violation::LeftUnit { i });
        }
        if a.right_mult_by(&a.unit).col(i) != a.basis_vector(i) {
            return Err(Violation::RightUnit { i });
        }
    }
    for i in 0..n {
        for j in 0..n {
            let bij = a.basis_product(i, j);
            for k in 0..n {
                let lhs = a.right[k].apply(bij);
                let rhs = a.left[i].apply(a.basis_product(j, k));
                if lhs != rhs {
                    return Err(Violation::Associativity { i, j, k });
                }
            }
        }
    }
    Ok(())
}

impl Quiver {
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Quiver {
        Quiver { vertices, arrows }
    }

    /// All paths in basis order: by length, then lexicographic on arrow indices.
    pub fn paths(&self) -> Result<Vec<Path>, AlgebraError> {
        for (a, &(s, t)) in self.arrows.iter().enumerate() {
            if s >= self.vertices || t >= self.vertices {
                return Err(AlgebraError::BadVertex { arrow: a });
            }
        }
        let mut out: Vec<Path> = (0..self.vertices).map(Path::Trivial).collect();
        let mut layer: Vec<Vec<usize>> = (0..self.arrows.len()).map(|a| vec![a]).collect();
        let mut len = 1;
        while !layer.is_empty() {
            if len > self.vertices {
                return Err(AlgebraError::CyclicQuiver);
            }
            let mut next = Vec::new();
            for p in &layer {
                let end = self.arrows[*p.last().unwrap()].1;
                for (a, &(s, _)) in self.arrows.iter().enumerate() {
                    if s == end {
                        let mut q = p.clone();
                        q.push(a);
                        next.push(q);
                    }
                }
            }
            next.sort();
            out.extend(layer.into_iter().map(Path::Arrows));
            layer = next;
            len += 1;
        }
        Ok(out)
    }

    fn source(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => self.arrows[a[0]].0,
        }
    }

    fn target(&self, p: &Path) -> usize {
        match p {
            Path::Trivial(v) => *v,
            Path::Arrows(a) => self.arrows[*a.last().unwrap()].1,
        }
    }

    fn concat(&self, p: &Path, q: &Path) -> Option<Path> {
        if self.target(p) != self.source(q) {
            return None;
        }
        Some(match (p, q) {
            (Path::Trivial(_), _) => q.clone(),
            (_, Path::Trivial(_)) => p.clone(),
            (Path::Arrows(a), Path::Arrows(b)) => {
                let mut c = a.clone();
                c.extend_from_slice(b);
                Path::Arrows(c)
            }
        })
    }
}

/// Path algebra of an acyclic quiver.
pub fn path_algebra(field: PrimeField, q: &Quiver) -> Result<Arc<Algebra>, AlgebraError> {
    let paths = q.paths()?;
    let n = paths.len();
    let mut mult = vec![0u64; n * n * n];
    for (i, p) in paths.iter().enumerate() {
        for (j, r) in paths.iter().enumerate() {
            if let Some(c) = q.concat(p, r) {
                let k = paths.iter().position(|x| *x == c).expect("closed under concat");
                mult[(i * n + j) * n + k] = 1;
            }
        }
    }
    let mut unit = vec![0u64; n];
    for u in unit.iter_mut().take(q.vertices) {
        *u = 1;
    }
    Algebra::new(field, n, mult, unit)
}

/// Quotient of `a` by the two-sided ideal generated by `ideal_gens`, with the
/// projection matrix `a -> a/I`.
pub fn quotient_algebra(
    a: &Algebra,
    ideal_gens: &[Vec<u64>],
) -> Result<(Arc<Algebra>, Mat), AlgebraError> {
    let ideal = a.ideal_closure(ideal_gens)?;
    quotient_by_ideal(a, &ideal)
}

/// Quotient by an ideal already known to be two-sided.
pub fn quotient_by_ideal(a: &Algebra, ideal: &Subspace) -> Result<(Arc<Algebra>, Mat), AlgebraError> {
    if a.dim > 0 && ideal.contains(&a.unit) {
        return Err(AlgebraError::UnitInIdeal);
    }
    let comp = ideal.complement();
    let proj = ideal.quotient_map();
    let m = comp.len();
    let mut mult = Vec::with_capacity(m * m * m);
    for &ci in &comp {
        for &cj in &comp {
            mult.extend(proj.apply(a.basis_product(ci, cj)));
        }
    }
    let unit = proj.apply(&a.unit);
    let q = Algebra::new(a.field, m, mult, unit)?;
    Ok((q, proj))
}

/// Opposite algebra: `c'[i][j][k] = c[j][i][k]`.
pub fn opposite_algebra(a: &Algebra) -> Arc<Algebra> {
    let n = a.dim;
    let mut mult = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                mult[(i * n + j) * n + k] = a.c(j, i, k);
            }
        }
    }
    Algebra::new_unchecked(a.field, n, mult, a.unit.clone()).expect("shape preserved")
}

/// Direct product `a × b`, basis of `a` followed by basis of `b`.
pub fn product_algebra(a: &Algebra, b: &Algebra) -> Result<Arc<Algebra>, AlgebraError> {
    let (na, nb) = (a.dim, b.dim);
    let n = na + nb;
    let mut mult = vec![0u64; n * n * n];
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                mult[(i * n + j) * n + k] = a.c(i, j, k);
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                mult[((na + i) * n + na + j) * n + na + k] = b.c(i, j, k);
            }
        }
    }
    let mut unit = a.unit.clone();
    unit.extend_from_slice(&b.unit);
    Algebra::new(a.field, n, mult, unit)
}

/// `k[x]/(x^n)` with basis `1, x, ..., x^{n-1}`.
pub fn truncated_polynomial(field: PrimeField, n: usize) -> Arc<Algebra> {
    let mut mult = vec![0u64; n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                mult[(i * n + j) * n + i + j] = 1;
            }
        }
    }
    let mut unit = vec![0u64; n];
    if n > 0 {
        unit[0] = 1;
    }
    Algebra::new(field, n, mult, unit).expect("truncated polynomial ring is an algebra")
}

/// The zero ring.
pub fn zero_algebra(field: PrimeField) -> Arc<Algebra> {
    Algebra::new_unchecked(field, 0, Vec::new(), Vec::new()).expect("empty shape")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    fn a2() -> Arc<Algebra> {
        path_algebra(gf(), &Quiver::new(2, vec![(0, 1)])).unwrap()
    }

    #[test]
    fn dual_numbers_validate() {
        let d = truncated_polynomial(gf(), 2);
        assert_eq!(validate_algebra(&d), Ok(()));
        assert_eq!(d.radical().unwrap().dim(), 1);
        assert_eq!(d.radical().unwrap().basis()[0], vec![0, 1]);
    }

    #[test]
    fn tampered_constant_is_reported() {
        let d = truncated_polynomial(gf(), 3);
        let mut mult = d.structure_constants().to_vec();
        // x·x² = x instead of 0, so (x·x)·x != x·(x·x).
        mult[(3 + 2) * 3 + 1] = 1;
        let bad = Algebra::new_unchecked(gf(), 3, mult.clone(), vec![1, 0, 0]).unwrap();
        assert_eq!(
            validate_algebra(&bad),
            Err(Violation::Associativity { i: 1, j: 1, k: 1 })
        );
        assert!(Algebra::new(gf(), 3, mult, vec![1, 0, 0]).is_err());
    }

    #[test]
    fn path_algebra_a2() {
        let a = a2();
        assert_eq!(a.dim(), 3);
        // basis e1, e2, alpha
        assert_eq!(a.basis_product(0, 2), &[0, 0, 1]);
        assert_eq!(a.basis_product(2, 1), &[0, 0, 1]);
        assert_eq!(a.basis_product(2, 0), &[0, 0, 0]);
        assert_eq!(a.basis_product(2, 2), &[0, 0, 0]);
        assert_eq!(a.radical().unwrap().basis(), &[vec![0, 0, 1]]);
    }

    #[test]
    fn trivial_quivers() {
        let k = path_algebra(gf(), &Quiver::new(1, vec![])).unwrap();
        assert_eq!(k.dim(), 1);
        let kk = path_algebra(gf(), &Quiver::new(2, vec![])).unwrap();
        assert_eq!(kk.basis_product(0, 1), &[0, 0]);
        assert_eq!(kk.radical().unwrap().dim(), 0);
        assert_eq!(
            path_algebra(gf(), &Quiver::new(1, vec![(0, 0)])).unwrap_err(),
            AlgebraError::CyclicQuiver
        );
        assert_eq!(
            path_algebra(gf(), &Quiver::new(2, vec![(0, 1), (1, 0)])).unwrap_err(),
            AlgebraError::CyclicQuiver
        );
    }

    #[test]
    fn quotients() {
        let k3 = truncated_polynomial(gf(), 3);
        let (q, proj) = quotient_algebra(&k3, &[]).unwrap();
        assert_eq!(*q, *k3);
        assert_eq!(proj, Mat::identity(gf(), 3));
        let (q, _) = quotient_algebra(&k3, &[vec![0, 0, 1]]).unwrap();
        assert_eq!(*q, *truncated_polynomial(gf(), 2));
        assert_eq!(
            quotient_algebra(&k3, &[vec![1, 1, 0]]).unwrap_err(),
            AlgebraError::UnitInIdeal
        );
    }

    #[test]
    fn opposites() {
        let d = truncated_polynomial(gf(), 2);
        assert_eq!(*opposite_algebra(&d), *d);
        let a = a2();
        let op = opposite_algebra(&a);
        assert_eq!(*opposite_algebra(&op), *a);
        assert_eq!(validate_algebra(&op), Ok(()));
        // Reversed quiver 2 -> 1: basis e1, e2, beta with beta = e2·beta·e1.
        let rev = path_algebra(gf(), &Quiver::new(2, vec![(1, 0)])).unwrap();
        assert_eq!(*op, *rev);
    }

    #[test]
    fn product_and_semisimple_radical() {
        let k = truncated_polynomial(gf(), 1);
        let kk = product_algebra(&k, &k).unwrap();
        assert_eq!(kk.radical().unwrap().dim(), 0);
        let (q, _) = quotient_by_ideal(&a2(), a2().radical().unwrap()).unwrap();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.radical().unwrap().dim(), 0);
    }

    #[test]
    fn generators_are_small() {
        assert_eq!(truncated_polynomial(gf(), 4).generators(), &[1]);
        assert_eq!(a2().generators().len(), 2);
    }

    #[test]
    fn vertex_idempotents_are_found() {
        let a = a2();
        assert_eq!(a.idempotents(), &[vec![0, 1, 0], vec![1, 0, 0]]);
        let d = truncated_polynomial(gf(), 3);
        assert_eq!(d.idempotents(), &[vec![1, 0, 0]]);
    }

    #[test]
    fn idempotents_are_split_without_basis_hints() {
        // k × k with basis {1, u}, u = (1, -1): no basis vector but 1 is idempotent.
        let f = gf();
        let m1 = f.neg(1);
        let p = product_algebra(&truncated_polynomial(f, 1), &truncated_polynomial(f, 1)).unwrap();
        let change = Mat::from_vec(f, 2, 2, vec![1, 1, 1, m1]).unwrap();
        let inv = change.inverse().unwrap();
        let mut mult = vec![0u64; 8];
        for i in 0..2 {
            for j in 0..2 {
                let prod = p.mul(&change.col(i), &change.col(j));
                let c = inv.apply(&prod);
                mult[(i * 2 + j) * 2..(i * 2 + j) * 2 + 2].copy_from_slice(&c);
            }
        }
        let b = Algebra::new(f, 2, mult, vec![1, 0]).unwrap();
        let es = b.idempotents();
        assert_eq!(es.len(), 2);
        assert!(b.is_complete_orthogonal(es));
        let opp = opposite_algebra(&a2());
        assert_eq!(opp.idempotents().len(), 2);
    }
}
