//! Flat window certificates and a replay verifier that uses only field
//! arithmetic and dense linear algebra.

use alloc::vec::Vec;
use core::fmt;

use super::window::AcyclicWindow;
use crate::field::PrimeField;
use crate::linalg::Mat;

/// All matrices are row-major. Terms are listed from `P^{-w}` to `P^w`;
/// `differentials[k]` maps term `k` to term `k + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowCertificate {
    pub modulus: u64,
    pub algebra_dim: usize,
    /// Index `(i*dim + j)*dim + k` is the coefficient of `b_k` in `b_i b_j`.
    pub structure_constants: Vec<u64>,
    pub unit: Vec<u64>,
    pub width: usize,
    pub term_dims: Vec<usize>,
    /// Per term, the action matrices of `b_0, ..., b_{n-1}` concatenated.
    pub term_actions: Vec<Vec<u64>>,
    pub differentials: Vec<Vec<u64>>,
    /// Rank `r` of the free module each term splits off.
    pub free_ranks: Vec<usize>,
    /// `P -> Λ^r`.
    pub embeddings: Vec<Vec<u64>>,
    /// `Λ^r -> P`, a left inverse of the embedding.
    pub retractions: Vec<Vec<u64>>,
    pub cocycle_dim: usize,
    pub cocycle_actions: Vec<u64>,
    /// `κ: P^0 -> X`.
    pub kappa: Vec<u64>,
    /// `λ: X -> P^1`.
    pub lambda: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateError {
    Malformed(&'static str),
    /// Position `-1` denotes the cocycle.
    NotAModule { term: isize },
    NotEquivariant(&'static str, isize),
    NotProjective { term: isize },
    NotAComplex { at: isize },
    NotExact { at: isize },
    DualNotExact { at: isize },
    BadFactorization,
}

impl fmt::Display for CertificateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateError::Malformed(w) => write!(f, "malformed certificate: {w}"),
            CertificateError::NotAModule { term } => write!(f, "term {term} is not a module"),
            CertificateError::NotEquivariant(w, i) => write!(f, "{w} at {i} is not a module map"),
            CertificateError::NotProjective { term } => write!(f, "term {term} has no splitting into a free module"),
            CertificateError::NotAComplex { at } => write!(f, "d∘d ≠ 0 at {at}"),
            CertificateError::NotExact { at } => write!(f, "not exact at {at}"),
            CertificateError::DualNotExact { at } => write!(f, "Hom(-, Λ) not exact at {at}"),
            CertificateError::BadFactorization => write!(f, "d^0 ≠ λ∘κ or κ, λ degenerate"),
        }
    }
}

impl core::error::Error for CertificateError {}

fn row_major(m: &Mat) -> Vec<u64> {
    m.data().to_vec()
}

fn actions_flat(m: &crate::module::Module) -> Vec<u64> {
    m.actions().iter().flat_map(|a| a.data().iter().copied()).collect()
}

impl WindowCertificate {
    pub fn from_window(w: &AcyclicWindow) -> WindowCertificate {
        let a = w.cocycle.algebra();
        WindowCertificate {
            modulus: a.field().modulus(),
            algebra_dim: a.dim(),
            structure_constants: a.structure_constants().to_vec(),
            unit: a.unit().to_vec(),
            width: w.width,
            term_dims: w.terms.iter().map(|t| t.dim()).collect(),
            term_actions: w.terms.iter().map(actions_flat).collect(),
            differentials: w.differentials.iter().map(|d| row_major(d.matrix())).collect(),
            free_ranks: w
                .splittings
                .iter()
                .map(|(i, _)| if a.dim() == 0 { 0 } else { i.target().dim() / a.dim() })
                .collect(),
            embeddings: w.splittings.iter().map(|(i, _)| row_major(i.matrix())).collect(),
            retractions: w.splittings.iter().map(|(_, r)| row_major(r.matrix())).collect(),
            cocycle_dim: w.cocycle.dim(),
            cocycle_actions: actions_flat(&w.cocycle),
            kappa: row_major(w.kappa.matrix()),
            lambda: row_major(w.lambda.matrix()),
        }
    }
}

struct Replay {
    field: PrimeField,
    n: usize,
    c: Vec<u64>,
    unit: Vec<u64>,
    left: Vec<Mat>,
}

impl Replay {
    fn mat(&self, rows: usize, cols: usize, data: &[u64], what: &'static str) -> Result<Mat, CertificateError> {
        Mat::from_vec(self.field, rows, cols, data.to_vec()).map_err(|_| CertificateError::Malformed(what))
    }

    fn actions(&self, dim: usize, data: &[u64]) -> Result<Vec<Mat>, CertificateError> {
        if data.len() != self.n * dim * dim {
            return Err(CertificateError::Malformed("action array length"));
        }
        (0..self.n)
            .map(|i| self.mat(dim, dim, &data[i * dim * dim..(i + 1) * dim * dim], "action entries"))
            .collect()
    }

    /// `ρ(b_i) ρ(b_j) = Σ_k c_ijk ρ(b_k)` and `ρ(1) = I`.
    fn is_module(&self, dim: usize, rho: &[Mat]) -> bool {
        let f = self.field;
        for i in 0..self.n {
            for j in 0..self.n {
                let mut rhs = Mat::zeros(f, dim, dim);
                for k in 0..self.n {
                    let c = self.c[(i * self.n + j) * self.n + k];
                    if c != 0 {
                        rhs.add_scaled(c, &rho[k]);
                    }
                }
                if rho[i].dot(&rho[j]) != rhs {
                    return false;
                }
            }
        }
        let mut one = Mat::zeros(f, dim, dim);
        for (k, &u) in self.unit.iter().enumerate() {
            if u != 0 {
                one.add_scaled(u, &rho[k]);
            }
        }
        one == Mat::identity(f, dim)
    }

    fn free(&self, r: usize) -> Vec<Mat> {
        self.left
            .iter()
            .map(|l| {
                let mut m = Mat::zeros(self.field, r * self.n, r * self.n);
                for g in 0..r {
                    m.set_block(g * self.n, g * self.n, l);
                }
                m
            })
            .collect()
    }

    fn equivariant(&self, h: &Mat, src: &[Mat], tgt: &[Mat]) -> bool {
        src.iter().zip(tgt).all(|(s, t)| h.dot(s) == t.dot(h))
    }

    /// `x ↦ x_g·b_j` on `Λ^r`, restricted to the block `g`: the matrix of
    /// right multiplication by `b_j`.
    fn right_mult(&self, j: usize) -> Mat {
        let n = self.n;
        Mat::from_fn(self.field, n, n, |k, i| self.c[(i * n + j) * n + k])
    }

    /// Columns span `Hom(P, Λ)` inside the column-major `n × dim` matrices:
    /// the maps `x ↦ x_g·b_j` on `Λ^r` composed with `emb · then`. The
    /// checked splitting of `emb` makes these span all of `Hom(P, Λ)`.
    fn hom_span(&self, rank: usize, emb: &Mat, then: &Mat) -> Mat {
        let n = self.n;
        let through = emb.dot(then);
        let mut cols = Vec::with_capacity(rank * n);
        for j in 0..n {
            let rj = self.right_mult(j);
            for g in 0..rank {
                cols.push(rj.dot(&through.block(g * n, 0, n, through.cols())).vec_cols());
            }
        }
        Mat::from_columns(self.field, n * then.cols(), &cols)
    }

}

/// Replays every window invariant from the flat data.
pub fn verify_window(cert: &WindowCertificate) -> Result<(), CertificateError> {
    let field = PrimeField::new(cert.modulus).map_err(|_| CertificateError::Malformed("modulus"))?;
    let n = cert.algebra_dim;
    let w = cert.width;
    let terms = 2 * w + 1;
    if w == 0 {
        return Err(CertificateError::Malformed("width must be positive"));
    }
    if cert.structure_constants.len() != n * n * n || cert.unit.len() != n {
        return Err(CertificateError::Malformed("algebra arrays"));
    }
    if cert.structure_constants.iter().chain(&cert.unit).any(|&x| x >= cert.modulus) {
        return Err(CertificateError::Malformed("algebra entries"));
    }
    if cert.term_dims.len() != terms
        || cert.term_actions.len() != terms
        || cert.free_ranks.len() != terms
        || cert.embeddings.len() != terms
        || cert.retractions.len() != terms
        || cert.differentials.len() != 2 * w
    {
        return Err(CertificateError::Malformed("array counts"));
    }
    let left = (0..n)
        .map(|i| {
            Mat::from_fn(field, n, n, |k, j| cert.structure_constants[(i * n + j) * n + k])
        })
        .collect();
    let r = Replay {
        field,
        n,
        c: cert.structure_constants.clone(),
        unit: cert.unit.clone(),
        left,
    };
    let pos = |k: usize| k as isize - w as isize;
    let dims = &cert.term_dims;

    let mut rhos = Vec::with_capacity(terms);
    for k in 0..terms {
        let rho = r.actions(dims[k], &cert.term_actions[k])?;
        if !r.is_module(dims[k], &rho) {
            return Err(CertificateError::NotAModule { term: pos(k) });
        }
        let rank = cert.free_ranks[k];
        let free = r.free(rank);
        let emb = r.mat(rank * n, dims[k], &cert.embeddings[k], "embedding")?;
        let ret = r.mat(dims[k], rank * n, &cert.retractions[k], "retraction")?;
        if !r.equivariant(&emb, &rho, &free)
            || !r.equivariant(&ret, &free, &rho)
            || ret.dot(&emb) != Mat::identity(field, dims[k])
        {
            return Err(CertificateError::NotProjective { term: pos(k) });
        }
        rhos.push(rho);
    }

    let mut ds = Vec::with_capacity(2 * w);
    for k in 0..2 * w {
        let d = r.mat(dims[k + 1], dims[k], &cert.differentials[k], "differential")?;
        if !r.equivariant(&d, &rhos[k], &rhos[k + 1]) {
            return Err(CertificateError::NotEquivariant("differential", pos(k)));
        }
        ds.push(d);
    }

    let dx = cert.cocycle_dim;
    let rx = r.actions(dx, &cert.cocycle_actions)?;
    if !r.is_module(dx, &rx) {
        return Err(CertificateError::NotAModule { term: -1 });
    }
    let kappa = r.mat(dx, dims[w], &cert.kappa, "kappa")?;
    let lambda = r.mat(dims[w + 1], dx, &cert.lambda, "lambda")?;
    if !r.equivariant(&kappa, &rhos[w], &rx) {
        return Err(CertificateError::NotEquivariant("kappa", 0));
    }
    if !r.equivariant(&lambda, &rx, &rhos[w + 1]) {
        return Err(CertificateError::NotEquivariant("lambda", 0));
    }
    if kappa.rank() != dx || lambda.rank() != dx || lambda.dot(&kappa) != ds[w] {
        return Err(CertificateError::BadFactorization);
    }

    let embs: Vec<Mat> = (0..terms)
        .map(|k| r.mat(cert.free_ranks[k] * n, dims[k], &cert.embeddings[k], "embedding"))
        .collect::<Result<_, _>>()?;
    let hom_dim = |k: usize| r.hom_span(cert.free_ranks[k], &embs[k], &Mat::identity(field, dims[k])).rank();
    // Rank of `H ↦ H∘d_k` on `Hom(P_{k+1}, Λ)`.
    let pullback_rank = |k: usize| r.hom_span(cert.free_ranks[k + 1], &embs[k + 1], &ds[k]).rank();
    for k in 1..2 * w {
        let (din, dout) = (&ds[k - 1], &ds[k]);
        if !dout.dot(din).is_zero() {
            return Err(CertificateError::NotAComplex { at: pos(k) });
        }
        if din.rank() + dout.rank() != dims[k] {
            return Err(CertificateError::NotExact { at: pos(k) });
        }
        if hom_dim(k) - pullback_rank(k - 1) != pullback_rank(k) {
            return Err(CertificateError::DualNotExact { at: pos(k) });
        }
    }
    Ok(())
}
