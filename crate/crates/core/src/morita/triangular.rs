//! Restriction from `Λ_(0,0)` to the triangular rings with `N := 0` or `M := 0`.

use super::{MoritaData, MoritaError, MoritaTuple};
use crate::module::{tensor_over, Bimodule, ModuleHom};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    /// `G(X, Y, f, g) = (Coker g, Y, h)` over `(A 0; M B)`.
    G,
    /// `G′(X, Y, f, g) = (X, Coker f, h)` over `(A N; 0 B)`.
    GPrime,
}

/// Applies `G` or `G′`; returns the triangular data together with the tuple.
pub fn triangular_restriction(
    d: &MoritaData,
    t: &MoritaTuple,
    which: Restriction,
) -> Result<(MoritaData, MoritaTuple), MoritaError> {
    d.require_zero()?;
    match which {
        Restriction::G => {
            let tri = MoritaData::new(
                d.a().clone(),
                d.b().clone(),
                Bimodule::zero(d.a(), d.b()),
                d.m().clone(),
                None,
                None,
            )?;
            let (cx, pi) = t.g.cokernel();
            let mc = tensor_over(d.m(), &cx)?;
            let id_pi = t.mx().map_right(&pi, &mc);
            let h = id_pi
                .factor_through_epi(&t.f)
                .ok_or(MoritaError::InvariantViolation("f does not vanish on M ⊗ Im g"))?;
            let ny = tensor_over(tri.n(), &t.y)?;
            let g = ModuleHom::zero(&ny.module, &cx);
            let out = MoritaTuple::from_parts(cx, t.y.clone(), h, g, mc, ny);
            out.validate(&tri)?;
            Ok((tri, out))
        }
        Restriction::GPrime => {
            let tri = MoritaData::new(
                d.a().clone(),
                d.b().clone(),
                d.n().clone(),
                Bimodule::zero(d.b(), d.a()),
                None,
                None,
            )?;
            let (cy, pi) = t.f.cokernel();
            let nc = tensor_over(d.n(), &cy)?;
            let id_pi = t.ny().map_right(&pi, &nc);
            let h = id_pi
                .factor_through_epi(&t.g)
                .ok_or(MoritaError::InvariantViolation("g does not vanish on N ⊗ Im f"))?;
            let mx = tensor_over(tri.m(), &t.x)?;
            let f = ModuleHom::zero(&mx.module, &cy);
            let out = MoritaTuple::from_parts(t.x.clone(), cy, f, h, mx, nc);
            out.validate(&tri)?;
            Ok((tri, out))
        }
    }
}
