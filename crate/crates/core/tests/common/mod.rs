//! Seeded random modules, tuples and mono objects for the property suites.
#![allow(dead_code)]

use std::sync::Arc;

use morita_core::algebra::Algebra;
use morita_core::fixtures;
use morita_core::module::{hom_space, Module, ModuleHom};
use morita_core::mono::{MonoContext, MonoObject};
use morita_core::morita::{
    h_a, h_b, t_a, t_b, tuple_hom_space, tuple_kernel_cokernel, z_a, z_b, MoritaData, MoritaTuple, TupleHom,
};
use morita_core::Mat;
use proptest::test_runner::{Config as ProptestConfig, RngSeed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Proptest settings with a fixed seed so runs are reproducible.
pub fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        rng_seed: RngSeed::Fixed(0x6d6f_7269_7461),
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The test algebras: `k[x]/(x²)` and the A₂ path algebra.
pub fn test_algebras() -> Vec<(&'static str, Arc<Algebra>)> {
    vec![("dual", fixtures::dual_numbers()), ("a2", fixtures::a2())]
}

pub fn random_vector(r: &mut ChaCha8Rng, p: u64, n: usize) -> Vec<u64> {
    (0..n).map(|_| r.gen_range(0..p)).collect()
}

pub fn random_invertible(r: &mut ChaCha8Rng, field: morita_core::PrimeField, n: usize) -> (Mat, Mat) {
    loop {
        let m = Mat::from_vec(field, n, n, random_vector(r, field.modulus(), n * n)).unwrap();
        if let Some(inv) = m.inverse() {
            return (m, inv);
        }
    }
}

/// `m` transported along a random change of basis.
pub fn conjugate(r: &mut ChaCha8Rng, m: &Module) -> Module {
    let (p, q) = random_invertible(r, m.field(), m.dim());
    let action = m.actions().iter().map(|a| p.dot(a).dot(&q)).collect();
    Module::new(m.algebra().clone(), m.dim(), action).unwrap()
}

/// A nonzero submodule or quotient of `Λ^r` generated by random vectors,
/// in a random basis. Dimensions stay at most `2·dim Λ`.
pub fn random_module(r: &mut ChaCha8Rng, a: &Arc<Algebra>) -> Module {
    loop {
        let rank = r.gen_range(1..=2);
        let free = Module::free(a, rank);
        let p = a.field().modulus();
        let gens: Vec<Vec<u64>> = (0..r.gen_range(0..=2))
            .map(|_| {
                let mut v = random_vector(r, p, free.dim());
                // Sparse vectors reach proper submodules more often.
                for x in v.iter_mut() {
                    if r.gen_bool(0.5) {
                        *x = 0;
                    }
                }
                v
            })
            .collect();
        let s = free.submodule_generated(&gens);
        let m = match r.gen_range(0..3) {
            0 => free.submodule(&s).0,
            1 => free.quotient(&s).0,
            // Quotients by radical vectors are rarely projective.
            _ => free.quotient(&free.submodule_generated(&radical_vectors(r, a, rank))).0,
        };
        if m.dim() > 0 {
            return conjugate(r, &m);
        }
    }
}

fn radical_vectors(r: &mut ChaCha8Rng, a: &Arc<Algebra>, rank: usize) -> Vec<Vec<u64>> {
    let rad = a.radical().expect("radical");
    let p = a.field().modulus();
    let d = a.dim();
    (0..r.gen_range(0..=rank))
        .map(|_| {
            let mut v = vec![0u64; rank * d];
            for g in 0..rank {
                for b in rad.basis() {
                    let c = r.gen_range(0..p);
                    for (i, x) in b.iter().enumerate() {
                        v[g * d + i] = (v[g * d + i] + c * x) % p;
                    }
                }
            }
            v
        })
        .collect()
}

/// A random element of the span of `maps`.
pub fn random_combination(r: &mut ChaCha8Rng, maps: &[ModuleHom]) -> Option<ModuleHom> {
    let first = maps.first()?;
    let p = first.source().field().modulus();
    let mut acc = ModuleHom::zero(first.source(), first.target());
    for h in maps {
        acc = acc.add(&h.scale(r.gen_range(0..p)));
    }
    Some(acc)
}

fn random_tuple_hom(r: &mut ChaCha8Rng, s: &MoritaTuple, t: &MoritaTuple) -> TupleHom {
    let basis = tuple_hom_space(s, t).unwrap();
    let p = s.x.field().modulus();
    let mut acc = TupleHom::zero(s, t);
    for h in &basis {
        let c = r.gen_range(0..p);
        acc = TupleHom::new(s, t, acc.a.add(&h.a.scale(c)).matrix().clone(), acc.b.add(&h.b.scale(c)).matrix().clone())
            .unwrap();
    }
    acc
}

/// Image of a random module under one of the six functors into tuples.
pub fn random_functor_image(r: &mut ChaCha8Rng, d: &MoritaData) -> MoritaTuple {
    let which = r.gen_range(0..6);
    let side_a = matches!(which, 0 | 2 | 4);
    let m = random_module(r, if side_a { d.a() } else { d.b() });
    match which {
        0 => t_a(d, &m),
        1 => t_b(d, &m),
        2 => h_a(d, &m),
        3 => h_b(d, &m),
        4 => z_a(d, &m),
        _ => z_b(d, &m),
    }
    .unwrap()
}

/// A valid nonzero tuple built from functor images by direct sums, kernels and
/// cokernels of random morphisms.
pub fn random_tuple(r: &mut ChaCha8Rng, d: &MoritaData) -> MoritaTuple {
    loop {
        let s = random_functor_image(r, d);
        let t = random_functor_image(r, d);
        let t = match r.gen_range(0..4) {
            0 => s,
            1 => s.oplus(d, &t),
            2 => tuple_kernel_cokernel(d, &random_tuple_hom(r, &s, &t)).unwrap().kernel,
            _ => tuple_kernel_cokernel(d, &random_tuple_hom(r, &s, &t)).unwrap().cokernel,
        };
        t.validate(d).unwrap();
        if t.dim() > 0 {
            return t;
        }
    }
}

/// `(X ⊂ Y)` for a random `Y` and the submodule generated by random vectors.
pub fn random_mono(r: &mut ChaCha8Rng, ctx: &MonoContext) -> MonoObject {
    let a = ctx.base();
    let y = random_module(r, a);
    let p = a.field().modulus();
    let gens: Vec<Vec<u64>> = (0..r.gen_range(1..=2)).map(|_| random_vector(r, p, y.dim())).collect();
    let (_, incl) = y.submodule(&y.submodule_generated(&gens));
    MonoObject::from_map(ctx, &incl).unwrap()
}

/// A random morphism of mono objects.
pub fn random_mono_hom(r: &mut ChaCha8Rng, s: &MonoObject, t: &MonoObject) -> TupleHom {
    random_tuple_hom(r, s.tuple(), t.tuple())
}

pub fn hom_dim(a: &Module, b: &Module) -> usize {
    hom_space(a, b).unwrap().len()
}
