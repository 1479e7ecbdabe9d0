//! Task execution and the JSON report.

use std::path::Path;

use morita_core::algebra::validate_algebra;
use morita_core::gorenstein::{
    gorenstein_dimension, is_gproj, silp_spli_report, theorem_a_construct, totally_acyclic_window, verify_window,
    GorensteinError, GorensteinReport, GorensteinVerdict,
};
use morita_core::module::{ext_dim, Dim, Module};
use morita_core::mono::{
    classify_proj_inj, functor_category_report, gproj_mono_test, in_subcategory_c, omega_nc_membership,
    stable_endomorphism_algebra, BundleSource, Membership, MonoContext, MonoError, MonoObject,
};
use morita_core::morita::{
    ext_formula_trivial_extension, homological_embedding_check, stratifying_check, tuple_to_module, z_a, z_b,
    MoritaData, Side, Stratifying, StratifyingIdeal,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cert;
use crate::manifest::{Ambient, IdealSpec, Manifest, SideSpec, SourceSpec, TaskKind, TaskSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Serialize)]
pub struct TaskReport {
    pub task: String,
    pub kind: &'static str,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    pub values: Value,
    pub certificates: Vec<String>,
    pub message: String,
}

pub fn dim_json(d: Dim) -> Value {
    match d {
        Dim::Finite(n) => json!(n),
        Dim::AtLeast(b) => json!({ "at_least": b }),
    }
}

fn verdict_json(v: GorensteinVerdict) -> Value {
    match v {
        GorensteinVerdict::Gorenstein(n) => json!(n),
        GorensteinVerdict::Inconclusive { bound } => json!({ "at_least": bound }),
    }
}

fn report_json(r: &GorensteinReport) -> Value {
    json!({
        "left_id": dim_json(r.left_id),
        "right_id": dim_json(r.right_id),
        "dimension": verdict_json(r.verdict),
    })
}

struct Outcome {
    verdict: Verdict,
    bound: Option<usize>,
    values: Value,
    certificates: Vec<String>,
    message: String,
}

impl Outcome {
    fn new(verdict: Verdict, values: Value, message: impl Into<String>) -> Outcome {
        Outcome {
            verdict,
            bound: None,
            values,
            certificates: Vec::new(),
            message: message.into(),
        }
    }

    fn pass(values: Value, message: impl Into<String>) -> Outcome {
        Outcome::new(Verdict::Pass, values, message)
    }

    fn fail(values: Value, message: impl Into<String>) -> Outcome {
        Outcome::new(Verdict::Fail, values, message)
    }

    fn inconclusive(bound: usize, values: Value, message: impl Into<String>) -> Outcome {
        Outcome {
            bound: Some(bound),
            ..Outcome::new(Verdict::Inconclusive, values, message)
        }
    }

    fn error(e: impl std::fmt::Display) -> Outcome {
        Outcome::fail(json!({}), e.to_string())
    }
}

/// Runs every task in id order. Certificates are written into `cert_dir`.
pub fn run_all(m: &Manifest, cert_dir: &Path) -> Vec<TaskReport> {
    let mut tasks: Vec<&TaskSpec> = m.tasks.iter().collect();
    tasks.sort_by(|a, b| a.id.cmp(&b.id));
    tasks.into_iter().map(|t| run(m, t, cert_dir)).collect()
}

pub fn run(m: &Manifest, t: &TaskSpec, cert_dir: &Path) -> TaskReport {
    let o = match &t.kind {
        TaskKind::Validate {} => validate(m),
        TaskKind::Gorenstein { algebra, morita, bound } => {
            let a = match (algebra, morita) {
                (Some(a), _) => m.algebras[a].clone(),
                (_, Some(d)) => m.morita[d].ring().algebra.clone(),
                _ => unreachable!("checked at load time"),
            };
            gorenstein(&gorenstein_dimension(&a, *bound))
        }
        TaskKind::Gproj { morita, tuple, bound, width } => {
            gproj(&m.morita[morita], &m.tuples[tuple].1, *bound, *width, &t.id, cert_dir)
        }
        TaskKind::ThmA { morita, z, s, t: tm, iso, bound, width } => thm_a(
            &m.morita[morita],
            &m.modules[z],
            &m.maps[s],
            &m.maps[tm],
            iso.as_ref().map(|i| &m.maps[i]),
            *bound,
            *width,
            &t.id,
            cert_dir,
        ),
        TaskKind::Stratifying {
            morita,
            ideal,
            tor_bound,
            require_certain,
        } => stratifying(&m.morita[morita], *ideal, *tor_bound, *require_certain),
        TaskKind::HomEmbedding { morita, side, samples, n_max } => {
            let samples: Vec<(Module, Module)> = samples
                .iter()
                .map(|(x, y)| (m.modules[x].clone(), m.modules[y].clone()))
                .collect();
            hom_embedding(&m.morita[morita], *side, samples, *n_max)
        }
        TaskKind::ExtTable {
            module,
            target,
            resolution_length,
            formula,
        } => ext_table(
            &m.modules[module],
            &m.modules[target],
            *resolution_length,
            formula.as_ref().map(|f| (&m.morita[&f.morita], f.side)),
        ),
        TaskKind::SilpSpli { morita, bound } => silp_spli(&m.morita[morita], *bound),
        TaskKind::MonoAnalyze { algebra, objects, bound } => mono_analyze(m, algebra, objects, *bound),
        TaskKind::StableEndo {
            algebra,
            objects,
            ambient,
            generation_asserted,
            bound,
        } => stable_endo(m, algebra, objects, *ambient, *generation_asserted, *bound, None),
        TaskKind::FunctorReport {
            algebra,
            objects,
            ambient,
            generation_asserted,
            source,
            n,
            bound,
        } => stable_endo(m, algebra, objects, *ambient, *generation_asserted, *bound, Some((*source, *n))),
    };
    TaskReport {
        task: t.id.clone(),
        kind: t.kind.name(),
        verdict: o.verdict,
        bound: o.bound,
        values: o.values,
        certificates: o.certificates,
        message: o.message,
    }
}

fn validate(m: &Manifest) -> Outcome {
    for (name, a) in &m.algebras {
        if let Err(v) = validate_algebra(a) {
            return Outcome::fail(json!({ "object": name }), format!("algebra '{name}': {v}"));
        }
    }
    for (name, d) in &m.morita {
        if let Err(v) = validate_algebra(&d.ring().algebra) {
            return Outcome::fail(json!({ "object": name }), format!("Morita ring '{name}': {v}"));
        }
    }
    for (name, (d, t)) in &m.tuples {
        if let Err(e) = t.validate(&m.morita[d]) {
            return Outcome::fail(json!({ "object": name }), format!("tuple '{name}': {e}"));
        }
    }
    Outcome::pass(
        json!({
            "modulus": m.field.modulus(),
            "algebras": m.algebras.len(),
            "modules": m.modules.len(),
            "maps": m.maps.len(),
            "bimodules": m.bimodules.len(),
            "morita": m.morita.len(),
            "tuples": m.tuples.len(),
            "mono_objects": m.mono_objects.len(),
        }),
        "all objects satisfy their axioms",
    )
}

fn gorenstein(r: &GorensteinReport) -> Outcome {
    let values = report_json(r);
    match r.verdict {
        GorensteinVerdict::Gorenstein(n) => Outcome::pass(values, format!("{n}-Gorenstein")),
        GorensteinVerdict::Inconclusive { bound } => {
            Outcome::inconclusive(bound, values, "injective dimensions exceed the bound")
        }
    }
}

fn write_cert(c: &morita_core::gorenstein::WindowCertificate, id: &str, dir: &Path) -> Result<String, String> {
    let name = format!("{id}.cert.json");
    cert::write(&dir.join(&name), c).map_err(|e| format!("cannot write certificate: {e}"))?;
    Ok(name)
}

fn gproj(d: &MoritaData, t: &morita_core::morita::MoritaTuple, bound: usize, width: usize, id: &str, dir: &Path) -> Outcome {
    let ring = gorenstein_dimension(&d.ring().algebra, bound);
    let module = tuple_to_module(d, t);
    let mut values = json!({ "ring": report_json(&ring), "dim": module.dim() });
    if let GorensteinVerdict::Inconclusive { bound } = ring.verdict {
        return Outcome::inconclusive(bound, values, "Morita ring not certified Gorenstein");
    }
    match is_gproj(&ring, &module) {
        Ok(false) => Outcome::fail(values, "tuple is not Gorenstein-projective"),
        Err(e) => Outcome::error(e),
        Ok(true) => {
            let window = match totally_acyclic_window(&ring, &module, width) {
                Ok(w) => w,
                Err(e) => return Outcome::error(e),
            };
            let c = window.certificate();
            if let Err(e) = verify_window(&c) {
                return Outcome::error(e);
            }
            values["width"] = json!(width);
            let mut o = Outcome::pass(values, "tuple is Gorenstein-projective");
            match write_cert(&c, id, dir) {
                Ok(n) => o.certificates.push(n),
                Err(e) => return Outcome::error(e),
            }
            o
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn thm_a(
    d: &MoritaData,
    z: &Module,
    s: &morita_core::module::ModuleHom,
    t: &morita_core::module::ModuleHom,
    iso: Option<&morita_core::module::ModuleHom>,
    bound: usize,
    width: usize,
    id: &str,
    dir: &Path,
) -> Outcome {
    match theorem_a_construct(d, z, s, t, iso, bound, width) {
        Ok(out) => {
            let values = json!({
                "x_dim": out.tuple.x.dim(),
                "y_dim": out.tuple.y.dim(),
                "module_dim": out.module.dim(),
                "ring": report_json(&out.ring),
                "width": width,
            });
            let mut o = Outcome::pass(values, "constructed a Gorenstein-projective tuple");
            match write_cert(&out.certificate, id, dir) {
                Ok(n) => o.certificates.push(n),
                Err(e) => return Outcome::error(e),
            }
            o
        }
        Err(GorensteinError::NotKnownGorenstein) => {
            Outcome::inconclusive(bound, json!({}), "Morita ring not certified Gorenstein")
        }
        Err(e) => Outcome::error(e),
    }
}

fn stratifying(d: &MoritaData, ideal: IdealSpec, tor_bound: usize, require_certain: bool) -> Outcome {
    let which = match ideal {
        IdealSpec::E => StratifyingIdeal::E,
        IdealSpec::F => StratifyingIdeal::F,
    };
    match stratifying_check(d, which, tor_bound, require_certain) {
        Ok(Stratifying::Stratifying { verified_up_to }) => {
            Outcome::pass(json!({ "verified_up_to": verified_up_to }), "ideal is stratifying")
        }
        Ok(Stratifying::NotInjective { rank, dim }) => Outcome::fail(
            json!({ "rank": rank, "dim": dim }),
            "bimodule map is not injective",
        ),
        Ok(Stratifying::TorNonzero { degree, dim }) => Outcome::fail(
            json!({ "degree": degree, "dim": dim }),
            format!("Tor_{degree} is nonzero"),
        ),
        Ok(Stratifying::Inconclusive { verified_up_to }) => Outcome::inconclusive(
            verified_up_to,
            json!({ "verified_up_to": verified_up_to }),
            "Tor vanishes up to the bound but the resolution does not terminate",
        ),
        Err(e) => Outcome::error(e),
    }
}

fn side(s: SideSpec) -> Side {
    match s {
        SideSpec::A => Side::A,
        SideSpec::B => Side::B,
    }
}

fn hom_embedding(d: &MoritaData, s: SideSpec, mut samples: Vec<(Module, Module)>, n_max: usize) -> Outcome {
    if samples.is_empty() {
        let alg = match s {
            SideSpec::A => d.a(),
            SideSpec::B => d.b(),
        };
        match Module::top(alg) {
            Ok(t) => samples.push((t.clone(), t)),
            Err(e) => return Outcome::error(e),
        }
    }
    match homological_embedding_check(d, side(s), &samples, n_max) {
        Ok(r) => {
            let values = json!({
                "condition": r.condition,
                "tensor_dim": r.tensor_dim,
                "comparisons": r.comparisons.iter().map(|c| json!({
                    "pair": c.pair, "degree": c.degree, "base": c.base, "morita": c.morita,
                })).collect::<Vec<_>>(),
                "first_divergence": r.first_divergence.map(|(p, n)| json!({ "pair": p, "n": n })),
            });
            match r.first_divergence {
                Some((p, n)) => Outcome::fail(values, format!("Ext dimensions differ for pair {p} at n = {n}")),
                None if !r.condition => Outcome::fail(values, "tensor condition fails; sampled Ext dimensions agree"),
                None => Outcome::pass(values, format!("Ext dimensions agree up to n = {n_max}")),
            }
        }
        Err(e) => Outcome::error(e),
    }
}

fn ext_table(x: &Module, y: &Module, len: usize, formula: Option<(&MoritaData, SideSpec)>) -> Outcome {
    let table: Result<Vec<usize>, _> = (0..len).map(|i| ext_dim(x, y, i, len)).collect();
    let table = match table {
        Ok(t) => t,
        Err(e) => return Outcome::error(e),
    };
    let mut values = json!({ "ext": table });
    let Some((d, s)) = formula else {
        return Outcome::pass(values, format!("Ext^i for 0 ≤ i < {len}"));
    };
    let z = |m: &Module| match s {
        SideSpec::A => z_a(d, m),
        SideSpec::B => z_b(d, m),
    };
    let (zx, zy) = match (z(x), z(y)) {
        (Ok(a), Ok(b)) => (tuple_to_module(d, &a), tuple_to_module(d, &b)),
        (Err(e), _) | (_, Err(e)) => return Outcome::error(e),
    };
    let mut by_formula = Vec::new();
    let mut direct = Vec::new();
    for n in 0..len {
        match (ext_formula_trivial_extension(d, side(s), x, y, n), ext_dim(&zx, &zy, n, len)) {
            (Ok(a), Ok(b)) => {
                by_formula.push(a);
                direct.push(b);
            }
            (Err(e), _) => return Outcome::error(e),
            (_, Err(e)) => return Outcome::error(e),
        }
    }
    values["formula"] = json!(by_formula);
    values["ring"] = json!(direct);
    match by_formula.iter().zip(&direct).position(|(a, b)| a != b) {
        Some(n) => Outcome::fail(values, format!("formula and ring Ext differ at n = {n}")),
        None => Outcome::pass(values, "formula matches Ext over the Morita ring"),
    }
}

fn silp_spli(d: &MoritaData, bound: usize) -> Outcome {
    match silp_spli_report(d, bound) {
        Ok(r) => {
            let values = json!({
                "kappa": r.kappa,
                "lambda": r.lambda,
                "mu": r.mu,
                "nu": r.nu,
                "embeddings_closed": r.embeddings_closed,
                "embeddings_sampled": r.embeddings_sampled,
                "id_t_a": dim_json(r.id_t_a),
                "id_t_b": dim_json(r.id_t_b),
                "bound_t_a": r.bound_t_a,
                "bound_t_b": r.bound_t_b,
                "silp_ring": r.silp_ring(),
            });
            if r.bounds_hold() {
                Outcome::pass(values, "injective dimensions within the predicted bounds")
            } else if !r.id_t_a.is_finite() || !r.id_t_b.is_finite() {
                Outcome::inconclusive(bound, values, "injective dimension exceeds the search bound")
            } else {
                Outcome::fail(values, "injective dimension exceeds the predicted bound")
            }
        }
        Err(e) => Outcome::error(e),
    }
}

fn mono_objects(ctx: &MonoContext, m: &Manifest, names: &[String]) -> Result<Vec<MonoObject>, MonoError> {
    names
        .iter()
        .map(|n| MonoObject::from_map(ctx, &m.mono_objects[n].map))
        .collect()
}

fn membership_json(mb: Membership) -> Value {
    match mb {
        Membership::Yes(pd) => json!({ "member": true, "pd_x": pd }),
        Membership::No => json!({ "member": false }),
        Membership::Inconclusive { bound } => json!({ "member": null, "pd_x": { "at_least": bound } }),
    }
}

fn mono_analyze(m: &Manifest, algebra: &str, names: &[String], bound: usize) -> Outcome {
    let ctx = match MonoContext::new(&m.algebras[algebra], bound) {
        Ok(c) => c,
        Err(e) => return Outcome::error(e),
    };
    let objs = match mono_objects(&ctx, m, names) {
        Ok(o) => o,
        Err(e) => return Outcome::error(e),
    };
    let mut rows = Vec::new();
    let mut unknown = false;
    for (name, obj) in names.iter().zip(&objs) {
        let gproj = match gproj_mono_test(&ctx, obj) {
            Ok(g) => json!(g),
            Err(MonoError::NotKnownGorenstein) => {
                unknown = true;
                Value::Null
            }
            Err(e) => return Outcome::fail(json!({ "object": name }), e.to_string()),
        };
        let omega = match omega_nc_membership(&ctx, obj) {
            Ok(b) => json!(b),
            Err(_) => Value::Null,
        };
        rows.push(json!({
            "object": name,
            "x_dim": obj.x().dim(),
            "y_dim": obj.y().dim(),
            "class": format!("{:?}", classify_proj_inj(obj)).to_lowercase(),
            "gproj": gproj,
            "subcategory_c": membership_json(in_subcategory_c(obj, bound)),
            "omega": omega,
        }));
    }
    let values = json!({
        "base": report_json(ctx.base_report()),
        "t2": report_json(ctx.t2_report()),
        "objects": rows,
    });
    if unknown {
        Outcome::inconclusive(bound, values, "Gorenstein-projectivity needs a Gorenstein base")
    } else {
        Outcome::pass(values, "base and T₂ tests agree on every object")
    }
}

fn stable_endo(
    m: &Manifest,
    algebra: &str,
    names: &[String],
    ambient: Ambient,
    generation_asserted: bool,
    bound: usize,
    functor: Option<(SourceSpec, Option<usize>)>,
) -> Outcome {
    let base = &m.algebras[algebra];
    let ctx = match ambient {
        Ambient::Mono => match MonoContext::new(base, bound) {
            Ok(c) => Some(c),
            Err(e) => return Outcome::error(e),
        },
        Ambient::Modules => None,
    };
    let modules: Vec<Module> = match &ctx {
        Some(ctx) => match mono_objects(ctx, m, names) {
            Ok(o) => o.iter().map(|x| ctx.module(x)).collect(),
            Err(e) => return Outcome::error(e),
        },
        None => names.iter().map(|n| m.modules[n].clone()).collect(),
    };
    let bundle = match stable_endomorphism_algebra(&modules, generation_asserted) {
        Ok(b) => b,
        Err(e) => return Outcome::error(e),
    };
    let mut values = json!({
        "end_dim": bundle.end_dim(),
        "ideal_dim": bundle.ideal_dim(),
        "stable_dim": bundle.stable.dim(),
        "degenerate": bundle.is_degenerate(),
        "generation_asserted": generation_asserted,
    });
    let Some((source, n)) = functor else {
        return Outcome::pass(values, "stable endomorphism algebra built");
    };
    let source = match source {
        SourceSpec::Cbar => {
            let n = match n {
                Some(n) => n,
                None => match gorenstein_dimension(base, bound).dimension() {
                    Some(n) => n,
                    None => return Outcome::inconclusive(bound, values, "base not certified Gorenstein"),
                },
            };
            BundleSource::CBar { n }
        }
        SourceSpec::Omega => BundleSource::OmegaBar,
        SourceSpec::MonoGenerator => BundleSource::MonoGenerator,
    };
    match functor_category_report(&bundle, source, bound) {
        Ok(r) => {
            values["gamma"] = report_json(&r.gamma);
            values["frobenius"] = json!(r.frobenius);
            values["end_gldim"] = dim_json(r.end_gldim);
            Outcome::pass(values, "claimed bound holds")
        }
        Err(MonoError::AssertionFailed { claim, gamma, end_gldim }) => {
            values["gamma"] = verdict_json(gamma);
            values["end_gldim"] = dim_json(end_gldim);
            let undetermined = match source {
                BundleSource::MonoGenerator => !end_gldim.is_finite(),
                _ => matches!(gamma, GorensteinVerdict::Inconclusive { .. }),
            };
            if undetermined {
                Outcome::inconclusive(bound, values, format!("cannot decide within the bound: {claim}"))
            } else {
                Outcome::fail(values, format!("assertion failed: {claim}"))
            }
        }
        Err(e) => Outcome::error(e),
    }
}
