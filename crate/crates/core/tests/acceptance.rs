//! Acceptance suite: one line per criterion, nonzero exit on any failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use morita_core::algebra::opposite_algebra;
use morita_core::fixtures;
use morita_core::gorenstein::{
    gorenstein_dimension, is_gproj, silp_spli_report, theorem_a_construct, totally_acyclic_window,
    verify_window, GorensteinError, GorensteinVerdict, WindowCertificate,
};
use morita_core::linalg::Mat;
use morita_core::module::{
    ext_dim, hom_space, tensor_over, Bimodule, CoverStrategy, Dim, FreeResolution, HomModule, Module,
    ModuleHom,
};
use morita_core::mono::{
    functor_category_report, gorenstein_subcat_resolution, gproj_mono_test, in_subcategory_c,
    omega_nc_membership, stable_endomorphism_algebra, BundleSource, Membership, MonoContext,
};
use morita_core::morita::{
    ext_formula_trivial_extension, homological_embedding_check, tuple_to_module, z_b, MoritaData, Side,
};
use rand::Rng;

mod common;
use common::{hom_dim, random_module, random_mono, random_tuple, rng, test_algebras};

const BOUND: usize = 8;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn delta_a2() -> MoritaData {
    MoritaData::delta(&fixtures::a2(), false).unwrap()
}

fn injective_into(src: &Module, tgt: &Module) -> ModuleHom {
    hom_space(src, tgt)
        .unwrap()
        .into_iter()
        .find(|h| h.is_injective())
        .expect("an injective map exists")
}

/// Shifts one entry of `d^0`, which must then differ from `λ∘κ`, and zeroes
/// the width.
fn tampering_detected(cert: &WindowCertificate, seed: u64) -> bool {
    let mut r = rng(seed);
    let mut ok = true;
    let d0 = &cert.differentials[cert.width];
    if !d0.is_empty() {
        let mut bad = cert.clone();
        let i = r.gen_range(0..d0.len());
        bad.differentials[cert.width][i] = (d0[i] + r.gen_range(1..cert.modulus)) % cert.modulus;
        ok &= verify_window(&bad).is_err();
    }
    let mut bad = cert.clone();
    bad.width = 0;
    ok && verify_window(&bad).is_err()
}

fn c1_gorenstein_transfer() -> Outcome {
    let mut seen = Vec::new();
    for (name, a, expected) in [("k[x]/(x²)", fixtures::dual_numbers(), 0), ("A₂", fixtures::a2(), 1)] {
        let d = MoritaData::delta(&a, false).unwrap();
        let base = gorenstein_dimension(&a, BOUND).verdict;
        let ring = gorenstein_dimension(&d.ring().algebra, BOUND).verdict;
        ensure!(base == GorensteinVerdict::Gorenstein(expected), "{name}: base verdict {base:?}");
        ensure!(ring == base, "{name}: Δ verdict {ring:?} differs from {base:?}");
        seen.push(format!("{name} -> {expected}"));
    }
    Ok(seen.join(", "))
}

fn c2_strongly_gproj() -> Outcome {
    let d = fixtures::delta_dual();
    let ring = gorenstein_dimension(&d.ring().algebra, BOUND);
    let t = fixtures::regular_tuple(&d, &[0, 1], &[0, 1]).unwrap();
    let v = tuple_to_module(&d, &t);
    ensure!(is_gproj(&ring, &v).unwrap(), "F(Λ,Λ,x,x) is not Gorenstein-projective");
    let w = totally_acyclic_window(&ring, &v, 3).map_err(|e| format!("{e:?}"))?;
    let cert = w.certificate();
    ensure!(cert.width == 3, "width {}", cert.width);
    verify_window(&cert).map_err(|e| format!("certificate rejected: {e:?}"))?;
    ensure!(tampering_detected(&cert, 2), "tampered certificate accepted");
    Ok("gproj, width-3 certificate verifies".into())
}

fn c3_gproj_over_delta() -> Outcome {
    let mut summary = Vec::new();
    for (name, d) in [("k[x]/(x²)", fixtures::delta_dual()), ("A₂", delta_a2())] {
        let base = gorenstein_dimension(d.a(), BOUND);
        let ring = gorenstein_dimension(&d.ring().algebra, BOUND);
        let mut r = rng(3);
        let (mut yes, mut no) = (0, 0);
        for i in 0..24 {
            let t = random_tuple(&mut r, &d);
            let parts = is_gproj(&base, &t.x).unwrap() && is_gproj(&base, &t.y).unwrap();
            let whole = is_gproj(&ring, &tuple_to_module(&d, &t)).unwrap();
            ensure!(parts == whole, "{name}: disagreement on tuple {i}");
            if whole {
                yes += 1;
            } else {
                no += 1;
            }
        }
        summary.push(format!("{name}: 24 tuples ({yes} gproj, {no} not)"));
    }
    Ok(summary.join("; "))
}

fn c4_ext_formula() -> Outcome {
    let d = fixtures::delta_dual();
    let k = fixtures::dual_simple(d.a());
    let zk = tuple_to_module(&d, &z_b(&d, &k).unwrap());
    let res = FreeResolution::new(&zk, 7, CoverStrategy::Greedy);
    ensure!(res.verify(), "resolution does not verify");
    let mut direct = Vec::new();
    for n in 0..=6 {
        let e = res.ext(n, &zk).unwrap();
        let formula = ext_formula_trivial_extension(&d, Side::B, &k, &k, n).unwrap();
        ensure!(e == formula, "n = {n}: direct {e}, formula {formula}");
        direct.push(e);
    }
    ensure!(direct[2] == 2, "n = 2 gives {}", direct[2]);
    ensure!(direct[3] == 2, "n = 3 gives {}", direct[3]);
    Ok(format!("dims {direct:?} for n = 0..6"))
}

fn c5_homological_embedding() -> Outcome {
    let d = fixtures::a2_morita();
    let [s0, s1] = fixtures::a2_simples();
    let reg = Module::regular(d.a());
    let samples = [(s0.clone(), s1.clone()), (s1.clone(), s0), (s1.clone(), reg.clone()), (reg, s1)];
    let mut lines = Vec::new();
    for side in [Side::A, Side::B] {
        let rep = homological_embedding_check(&d, side, &samples, 6).map_err(|e| format!("{e:?}"))?;
        ensure!(rep.condition, "{side:?}: tensor condition fails");
        ensure!(rep.all_agree(), "{side:?}: divergence at {:?}", rep.first_divergence);
        lines.push(format!("A₂ side {side:?} embeds"));
    }

    let dd = fixtures::delta_dual();
    let k = fixtures::dual_simple(dd.b());
    let rep = homological_embedding_check(&dd, Side::B, &[(k.clone(), k)], 6).map_err(|e| format!("{e:?}"))?;
    ensure!(!rep.condition, "Δ over k[x]/(x²): condition holds");
    ensure!(rep.first_divergence.map(|(_, n)| n) == Some(2), "first divergence {:?}", rep.first_divergence);
    lines.push("Δ over k[x]/(x²) diverges at n = 2".into());
    Ok(lines.join("; "))
}

fn c6_construction() -> Outcome {
    let d = fixtures::delta_dual();
    let a = d.a().clone();
    let k = fixtures::dual_simple(&a);
    let reg = Module::regular(&a);
    let nk = tensor_over(d.n(), &k).unwrap();
    let s = injective_into(&nk.module, &reg);
    let (cs, _) = s.cokernel();
    let mc = tensor_over(d.m(), &cs).unwrap();

    let t = injective_into(&mc.module, &reg);
    let out = theorem_a_construct(&d, &k, &s, &t, None, BOUND, 2).map_err(|e| format!("sequences: {e:?}"))?;
    verify_window(&out.certificate).map_err(|e| format!("sequences: {e:?}"))?;
    ensure!(is_gproj(&out.ring, &out.module).unwrap(), "sequences: output not gproj");

    let y = Module::direct_sum(&a, &[mc.module.clone(), k.clone()]);
    let t = y.inclusions[0].clone();
    let out = theorem_a_construct(&d, &k, &s, &t, None, BOUND, 2).map_err(|e| format!("triangular: {e:?}"))?;
    verify_window(&out.certificate).map_err(|e| format!("triangular: {e:?}"))?;
    ensure!(is_gproj(&out.ring, &out.module).unwrap(), "triangular: output not gproj");

    let zero = ModuleHom::zero(&nk.module, &k);
    let mck = tensor_over(d.m(), &k).unwrap();
    let id = ModuleHom::identity(&mck.module);
    match theorem_a_construct(&d, &k, &zero, &id, None, BOUND, 1) {
        Err(GorensteinError::HypothesisFailed(_)) => {}
        other => return Err(format!("non-mono s: {:?}", other.map(|_| "certificate"))),
    }
    let dual = fixtures::dual_numbers();
    let acts = vec![Mat::from_vec(dual.field(), 1, 1, vec![1]).unwrap(), Mat::from_vec(dual.field(), 1, 1, vec![0]).unwrap()];
    let kb = Bimodule::new(dual.clone(), dual.clone(), 1, acts.clone(), acts).unwrap();
    let bad = MoritaData::new(dual.clone(), dual.clone(), kb.clone(), kb, None, None).unwrap();
    let z = Module::zero(&dual);
    let nz = tensor_over(bad.n(), &z).unwrap();
    let s = ModuleHom::zero(&nz.module, &k);
    match theorem_a_construct(&bad, &z, &s, &id, None, BOUND, 1) {
        Err(GorensteinError::HypothesisFailed(_)) => {}
        other => return Err(format!("incompatible data: {:?}", other.map(|_| "certificate"))),
    }
    Ok("both inputs certified, two violations rejected".into())
}

fn c7_gproj_mono() -> Outcome {
    let mut summary = Vec::new();
    for (name, a) in test_algebras() {
        let ctx = MonoContext::new(&a, BOUND).unwrap();
        let mut r = rng(7);
        let (mut yes, mut no) = (0, 0);
        for i in 0..24 {
            let o = random_mono(&mut r, &ctx);
            let via_base = gproj_mono_test(&ctx, &o).unwrap();
            let via_t2 = is_gproj(ctx.t2_report(), &ctx.module(&o)).unwrap();
            ensure!(via_base == via_t2, "{name}: disagreement on object {i}");
            if via_base {
                yes += 1;
            } else {
                no += 1;
            }
        }
        summary.push(format!("{name}: 24 objects ({yes} gproj, {no} not)"));
    }
    Ok(summary.join("; "))
}

fn c8_subcategory_resolutions() -> Outcome {
    let ctx = MonoContext::new(&fixtures::a2(), BOUND).unwrap();
    let n = ctx.base_report().dimension().ok_or("A₂ not Gorenstein")?;
    ensure!(n == 1, "A₂ is {n}-Gorenstein");
    let mut r = rng(8);
    let (mut checked, mut longest) = (0, 0);
    while checked < 12 {
        let o = random_mono(&mut r, &ctx);
        let Membership::Yes(_) = in_subcategory_c(&o, BOUND) else {
            return Err("object outside 𝒞 over a hereditary algebra".into());
        };
        let res = gorenstein_subcat_resolution(&ctx, &o, BOUND).map_err(|e| format!("{e:?}"))?;
        ensure!(res.verify(&ctx).unwrap(), "object {checked}: resolution does not verify");
        ensure!(res.length() <= n, "object {checked}: length {}", res.length());
        longest = longest.max(res.length());
        checked += 1;
    }
    Ok(format!("{checked} objects, longest resolution {longest}"))
}

fn c9_silp_spli() -> Outcome {
    let rep = silp_spli_report(&fixtures::a2_morita(), BOUND).map_err(|e| format!("{e:?}"))?;
    let (Dim::Finite(ia), Dim::Finite(ib)) = (rep.id_t_a, rep.id_t_b) else {
        return Err(format!("id T_A(A) = {:?}, id T_B(B) = {:?}", rep.id_t_a, rep.id_t_b));
    };
    ensure!(rep.bound_t_a == (rep.kappa + rep.mu).max(rep.nu) + 1, "bound for T_A");
    ensure!(rep.bound_t_b == (rep.lambda + rep.nu).max(rep.mu) + 1, "bound for T_B");
    ensure!(ia <= rep.bound_t_a && ib <= rep.bound_t_b, "bounds fail: {ia} vs {}, {ib} vs {}", rep.bound_t_a, rep.bound_t_b);
    ensure!(rep.bounds_hold(), "bounds_hold disagrees");
    let GorensteinVerdict::Gorenstein(g) = rep.ring.verdict else {
        return Err(format!("ring verdict {:?}", rep.ring.verdict));
    };
    Ok(format!(
        "κ,λ,μ,ν = {},{},{},{}; id T_A(A) = {ia} ≤ {}, id T_B(B) = {ib} ≤ {}; ring {g}-Gorenstein",
        rep.kappa, rep.lambda, rep.mu, rep.nu, rep.bound_t_a, rep.bound_t_b
    ))
}

fn c10_functor_categories() -> Outcome {
    let ctx = MonoContext::new(&fixtures::dual_numbers(), BOUND).unwrap();
    let objs = fixtures::dual_mono_indecomposables(&ctx);
    ensure!(objs.len() == 5, "{} indecomposables", objs.len());

    let in_c: Vec<Module> = objs
        .iter()
        .filter(|o| matches!(in_subcategory_c(o, BOUND), Membership::Yes(_)))
        .map(|o| ctx.module(o))
        .collect();
    let cbar = stable_endomorphism_algebra(&in_c, true).map_err(|e| format!("{e:?}"))?;
    let rep = functor_category_report(&cbar, BundleSource::CBar { n: 0 }, BOUND).map_err(|e| format!("𝒞̄: {e:?}"))?;
    ensure!(rep.gamma.verdict == GorensteinVerdict::Gorenstein(0), "𝒞̄: {:?}", rep.gamma.verdict);

    let mut omega = Vec::new();
    for o in &objs {
        if omega_nc_membership(&ctx, o).unwrap() {
            omega.push(ctx.module(o));
        }
    }
    let obar = stable_endomorphism_algebra(&omega, true).map_err(|e| format!("{e:?}"))?;
    ensure!(obar.stable.dim() == 1, "Ω⁰(𝒞)-bar: dim Γ = {}", obar.stable.dim());
    let rep = functor_category_report(&obar, BundleSource::OmegaBar, BOUND).map_err(|e| format!("Ω⁰(𝒞)-bar: {e:?}"))?;
    ensure!(rep.frobenius, "Ω⁰(𝒞)-bar: not Frobenius");

    let all: Vec<Module> = objs.iter().map(|o| ctx.module(o)).collect();
    let gen = stable_endomorphism_algebra(&all, true).map_err(|e| format!("{e:?}"))?;
    let rep = functor_category_report(&gen, BundleSource::MonoGenerator, BOUND).map_err(|e| format!("mono: {e:?}"))?;
    let Dim::Finite(gl) = rep.end_gldim else {
        return Err(format!("gldim End = {:?}", rep.end_gldim));
    };
    ensure!(gl <= 2, "gldim End = {gl}");
    Ok(format!("𝒞̄ Gorenstein(0); Ω⁰(𝒞)-bar Γ ≅ k Frobenius; gldim End = {gl}"))
}

fn c11_self_consistency() -> Outcome {
    let mut checks = 0usize;
    for (name, a) in test_algebras() {
        let op = opposite_algebra(&a);
        let mut r = rng(11);
        for _ in 0..6 {
            let m = random_module(&mut r, &a);
            let n = random_module(&mut r, &a);
            let greedy = FreeResolution::new(&m, 6, CoverStrategy::Greedy);
            let full = FreeResolution::new(&m, 6, CoverStrategy::FullBasis);
            ensure!(greedy.verify() && full.verify(), "{name}: resolution does not verify");
            let right = FreeResolution::new(&n.dual_over(&op), 5, CoverStrategy::Greedy);
            let dm = m.dual_over(&op);
            for i in 0..=4 {
                let g = greedy.ext(i, &n).unwrap();
                ensure!(g == full.ext(i, &n).unwrap(), "{name}: Ext^{i} depends on the resolution");
                ensure!(g == right.ext(i, &dm).unwrap(), "{name}: Ext^{i} not symmetric under duality");
                ensure!(g == ext_dim(&m, &n, i, 6).unwrap(), "{name}: ext_dim disagrees in degree {i}");
                checks += 3;
            }
        }
    }

    let mut r = rng(12);
    let dual = fixtures::dual_numbers();
    let d = fixtures::a2_morita();
    let reg = Bimodule::regular(&dual);
    for _ in 0..6 {
        for (m, a, b) in [(d.m(), d.a(), d.b()), (d.n(), d.b(), d.a()), (&reg, &dual, &dual)] {
            let x = random_module(&mut r, a);
            let y = random_module(&mut r, b);
            let mx = tensor_over(m, &x).unwrap();
            let hy = HomModule::new(m, &y).unwrap();
            ensure!(hom_dim(&mx.module, &y) == hom_dim(&x, &hy.module), "tensor-Hom adjunction fails");
            checks += 1;
        }
    }

    for (i, d) in [fixtures::delta_dual(), delta_a2()].into_iter().enumerate() {
        let ring = gorenstein_dimension(&d.ring().algebra, BOUND);
        let mut r = rng(13 + i as u64);
        let mut replayed = 0;
        while replayed < 4 {
            let v = tuple_to_module(&d, &random_tuple(&mut r, &d));
            if !is_gproj(&ring, &v).unwrap() {
                ensure!(totally_acyclic_window(&ring, &v, 2).is_err(), "window for a non-gproj module");
                continue;
            }
            let cert = totally_acyclic_window(&ring, &v, 2).map_err(|e| format!("{e:?}"))?.certificate();
            verify_window(&cert).map_err(|e| format!("replay: {e:?}"))?;
            ensure!(tampering_detected(&cert, replayed), "tampered certificate accepted");
            replayed += 1;
            checks += 1;
        }
    }
    Ok(format!("{checks} checks"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("Gorenstein transfer to Δ", c1_gorenstein_transfer),
        ("strongly Gorenstein-projective tuple", c2_strongly_gproj),
        ("Gproj characterization over Δ", c3_gproj_over_delta),
        ("Ext formula over the trivial extension", c4_ext_formula),
        ("homological embedding criterion", c5_homological_embedding),
        ("Gproj tuple construction", c6_construction),
        ("Gproj(mono) characterization", c7_gproj_mono),
        ("Gorenstein subcategory resolutions", c8_subcategory_resolutions),
        ("silp/spli bounds", c9_silp_spli),
        ("coherent functor categories", c10_functor_categories),
        ("engine self-consistency", c11_self_consistency),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} pass ({secs:.2}s) {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.2}s) {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
