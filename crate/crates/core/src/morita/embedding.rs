//! Stratifying ideals and homological embeddings `Z_A`, `Z_B`.

use alloc::vec::Vec;

use super::{tuple_to_module, z_a, z_b, MoritaData, MoritaError};
use crate::algebra::opposite_algebra;
use crate::module::{
    is_projective, tensor_over, Bimodule, CoverStrategy, FreeResolution, Module,
};

/// Which idempotent ideal of the Morita ring is examined: `ΛeΛ` for
/// `e = (1_A, 0, 0, 0)` or `ΛfΛ` for `f = (0, 0, 0, 1_B)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StratifyingIdeal {
    E,
    F,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stratifying {
    /// Injectivity holds and `Tor_i` vanishes for `1 ≤ i ≤ verified_up_to`.
    Stratifying { verified_up_to: usize },
    NotInjective { rank: usize, dim: usize },
    TorNonzero { degree: usize, dim: usize },
    /// Everything checked vanishes, but certainty beyond the bound was demanded.
    Inconclusive { verified_up_to: usize },
}

impl Stratifying {
    pub fn is_stratifying(&self) -> bool {
        matches!(self, Stratifying::Stratifying { .. })
    }
}

/// `ΛeΛ` is stratifying iff `φ` is injective and `Tor^A_i(M, N) = 0` for
/// `i > 0`; `ΛfΛ` likewise with `ψ` and `Tor^B_i(N, M)`.
///
/// Tor is checked for `1 ≤ i ≤ tor_bound`. With `require_certain`, a
/// vanishing result that is not backed by a finite projective resolution
/// within the bound is reported as inconclusive.
pub fn stratifying_check(
    d: &MoritaData,
    which: StratifyingIdeal,
    tor_bound: usize,
    require_certain: bool,
) -> Result<Stratifying, MoritaError> {
    let (map, right, left) = match which {
        StratifyingIdeal::E => (d.phi(), d.m(), d.n()),
        StratifyingIdeal::F => (d.psi(), d.n(), d.m()),
    };
    let rank = map.rank();
    if rank < map.cols() {
        return Ok(Stratifying::NotInjective {
            rank,
            dim: map.cols(),
        });
    }
    let left_mod = left.as_left_module();
    let res = FreeResolution::new(&left_mod, tor_bound + 1, CoverStrategy::Greedy);
    for i in 1..=tor_bound {
        let t = res.tor(i, right.right_action(), right.dim())?;
        if t != 0 {
            return Ok(Stratifying::TorNonzero { degree: i, dim: t });
        }
    }
    // A resolution that stops within the bound makes the vanishing certain.
    let terminates = res.ranks().iter().skip(1).take(tor_bound + 1).any(|&r| r == 0) || left_mod.dim() == 0;
    if require_certain && !terminates {
        return Ok(Stratifying::Inconclusive {
            verified_up_to: tor_bound,
        });
    }
    Ok(Stratifying::Stratifying {
        verified_up_to: tor_bound,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// One Ext comparison between the base algebra and the Morita ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtComparison {
    pub pair: usize,
    pub degree: usize,
    pub base: usize,
    pub morita: usize,
}

impl ExtComparison {
    pub fn agrees(&self) -> bool {
        self.base == self.morita
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddingReport {
    pub side: Side,
    /// `N ⊗_B M = 0` for side `A`, `M ⊗_A N = 0` for side `B`.
    pub condition: bool,
    /// Dimension of the tensor product in the condition.
    pub tensor_dim: usize,
    pub comparisons: Vec<ExtComparison>,
    /// First `(pair, degree)` where the dimensions differ.
    pub first_divergence: Option<(usize, usize)>,
}

impl EmbeddingReport {
    pub fn all_agree(&self) -> bool {
        self.first_divergence.is_none()
    }
}

/// Compares `dim Ext^n` over the base algebra with `dim Ext^n` between the
/// `Z`-images over the Morita ring, for each sample pair and `n ≤ n_max`.
pub fn homological_embedding_check(
    d: &MoritaData,
    side: Side,
    samples: &[(Module, Module)],
    n_max: usize,
) -> Result<EmbeddingReport, MoritaError> {
    d.require_zero()?;
    let tensor_dim = match side {
        Side::A => d.n_tensor_m().dim(),
        Side::B => d.m_tensor_n().dim(),
    };
    let z = |m: &Module| match side {
        Side::A => z_a(d, m),
        Side::B => z_b(d, m),
    };
    let mut comparisons = Vec::new();
    let mut first_divergence = None;
    for (p, (x, y)) in samples.iter().enumerate() {
        let zx = tuple_to_module(d, &z(x)?);
        let zy = tuple_to_module(d, &z(y)?);
        let base = FreeResolution::new(x, n_max + 1, CoverStrategy::Greedy);
        let lam = FreeResolution::new(&zx, n_max + 1, CoverStrategy::Greedy);
        for n in 0..=n_max {
            let c = ExtComparison {
                pair: p,
                degree: n,
                base: base.ext(n, y)?,
                morita: lam.ext(n, &zy)?,
            };
            if !c.agrees() && first_divergence.is_none() {
                first_divergence = Some((p, n));
            }
            comparisons.push(c);
        }
    }
    Ok(EmbeddingReport {
        side,
        condition: tensor_dim == 0,
        tensor_dim,
        comparisons,
        first_divergence,
    })
}

fn right_projective(b: &Bimodule) -> bool {
    let op = opposite_algebra(b.right_algebra());
    is_projective(&b.as_right_module_over(&op))
}

/// `dim Ext^n(Z(Y), Z(Y'))` over `Λ_(0,0)` by the direct-sum formula
/// `Σ_{j ≤ n/2} dim Ext^{n-2j}(W_j, Y')`, where `W_0 = Y` and
/// `W_{j+1} = M ⊗_A N ⊗_B W_j` (side `B`) or `N ⊗_B M ⊗_A W_j` (side `A`).
pub fn ext_formula_trivial_extension(
    d: &MoritaData,
    side: Side,
    y: &Module,
    y2: &Module,
    n: usize,
) -> Result<usize, MoritaError> {
    d.require_zero()?;
    if !right_projective(d.m()) {
        return Err(MoritaError::PreconditionFailed("M_A is not projective"));
    }
    if !right_projective(d.n()) {
        return Err(MoritaError::PreconditionFailed("N_B is not projective"));
    }
    let (first, second) = match side {
        Side::B => (d.m(), d.n()),
        Side::A => (d.n(), d.m()),
    };
    let mut w = y.clone();
    let mut total = 0;
    for j in 0..=n / 2 {
        if j > 0 {
            let inner = tensor_over(second, &w)?;
            w = tensor_over(first, &inner.module)?.module;
        }
        let deg = n - 2 * j;
        let r = FreeResolution::new(&w, deg + 1, CoverStrategy::Greedy);
        total += r.ext(deg, y2).map_err(MoritaError::from)?;
    }
    Ok(total)
}

