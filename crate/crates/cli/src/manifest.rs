//! Manifest schema and all-or-nothing loading into resolved objects.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::Arc;

use morita_core::algebra::{path_algebra, quotient_algebra, truncated_polynomial, Algebra, Quiver};
use morita_core::fixtures::projective_summand;
use morita_core::module::{same_algebra, tensor_over, Bimodule, Module, ModuleHom};
use morita_core::morita::{apply_functor, idempotent_bimodule, FunctorArg, FunctorName, MoritaData, MoritaTuple};
use morita_core::{Mat, PrimeField};
use serde::Deserialize;

pub const SCHEMA_VERSION: u32 = 1;

/// Bounds not given in a task default to this value.
pub const DEFAULT_BOUND: usize = 8;

fn default_bound() -> usize {
    DEFAULT_BOUND
}

fn default_width() -> usize {
    3
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifestFile {
    pub schema_version: u32,
    pub field: FieldSpec,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub maps: BTreeMap<String, MapSpec>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
    #[serde(default)]
    pub morita: BTreeMap<String, MoritaSpec>,
    #[serde(default)]
    pub tuples: BTreeMap<String, TupleSpec>,
    /// Objects of `mono(Λ)`, each named by an injective map.
    #[serde(default)]
    pub mono_objects: BTreeMap<String, String>,
    #[serde(default)]
    pub tasks: Vec<serde_json::Value>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub modulus: u64,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum AlgebraSpec {
    /// Index `(i*dim + j)*dim + k` is the coefficient of `b_k` in `b_i b_j`.
    StructureConstants { dim: usize, constants: Vec<u64>, unit: Vec<u64> },
    /// `k[x]/(x^n)`.
    TruncatedPolynomial { n: usize },
    /// Path algebra modulo the ideal generated by `relations`, given in the
    /// path basis.
    Quiver {
        vertices: usize,
        arrows: Vec<(usize, usize)>,
        #[serde(default)]
        relations: Vec<Vec<u64>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    /// Action matrices of `b_0, ..., b_{n-1}`, each row-major, concatenated.
    Action { algebra: String, dim: usize, matrices: Vec<u64> },
    /// One-dimensional module where `b_i` acts by `weights[i]`.
    OneDim { algebra: String, weights: Vec<u64> },
    Regular { algebra: String },
    Free { algebra: String, rank: usize },
    /// `Λ / rad Λ`.
    Top { algebra: String },
    /// `Λe` for an idempotent `e`.
    Projective { algebra: String, idempotent: Vec<u64> },
    /// `B ⊗ X` for a declared bimodule `B` and module `X`, in the canonical
    /// tensor basis.
    Tensor { bimodule: String, module: String },
    /// The cokernel of a declared map.
    Cokernel { map: String },
}

impl ModuleSpec {
    fn module_deps(&self) -> Vec<&str> {
        match self {
            ModuleSpec::Tensor { module, .. } => vec![module.as_str()],
            _ => Vec::new(),
        }
    }

    fn map_deps(&self) -> Vec<&str> {
        match self {
            ModuleSpec::Cokernel { map } => vec![map.as_str()],
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapSpec {
    pub source: String,
    pub target: String,
    /// Row-major, `dim target × dim source`.
    pub matrix: Vec<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum BimoduleSpec {
    Regular { algebra: String },
    Zero { left: String, right: String },
    /// `Ae ⊗_k fA`.
    Idempotent { algebra: String, e: Vec<u64>, f: Vec<u64> },
    Action {
        left: String,
        right: String,
        dim: usize,
        left_matrices: Vec<u64>,
        right_matrices: Vec<u64>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum MoritaSpec {
    /// `(Λ Λ; Λ Λ)` with zero or multiplication bimodule maps.
    Delta {
        algebra: String,
        #[serde(default)]
        multiplication: bool,
    },
    /// `(A N; N A)` with `N = Ae ⊗_k fA` and zero maps.
    Idempotents { algebra: String, e: Vec<u64>, f: Vec<u64> },
    General {
        a: String,
        b: String,
        n: String,
        m: String,
        /// Row-major on `M ⊗_A N`; absent means zero.
        #[serde(default)]
        phi: Option<Vec<u64>>,
        #[serde(default)]
        psi: Option<Vec<u64>>,
    },
}

#[derive(Debug, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum TupleSpec {
    /// `f` on `M ⊗_A X` and `g` on `N ⊗_B Y`, row-major in the tensor bases.
    Explicit {
        morita: String,
        x: String,
        y: String,
        f: Vec<u64>,
        g: Vec<u64>,
    },
    /// `(Λ, Λ, c_f·, c_g·)` over `Δ` for a commutative `Λ`.
    Regular { morita: String, cf: Vec<u64>, cg: Vec<u64> },
    /// One of `T_A`, `T_B`, `H_A`, `H_B`, `Z_A`, `Z_B` applied to a module.
    Functor { morita: String, functor: String, module: String },
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum SideSpec {
    A,
    B,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum IdealSpec {
    E,
    F,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "snake_case")]
pub enum Ambient {
    #[default]
    Mono,
    Modules,
}

#[derive(Clone, Copy, Debug, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum SourceSpec {
    Cbar,
    Omega,
    MonoGenerator,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormulaSpec {
    pub morita: String,
    pub side: SideSpec,
}

#[derive(Clone, Debug)]
pub struct TaskSpec {
    pub id: String,
    pub kind: TaskKind,
}

pub const TASK_KINDS: [&str; 11] = [
    "validate",
    "gorenstein",
    "gproj",
    "thm-a",
    "stratifying",
    "hom-embedding",
    "ext-table",
    "silp-spli",
    "mono-analyze",
    "stable-endo",
    "functor-report",
];

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum TaskKind {
    Validate {},
    Gorenstein {
        #[serde(default)]
        algebra: Option<String>,
        #[serde(default)]
        morita: Option<String>,
        #[serde(default = "default_bound")]
        bound: usize,
    },
    Gproj {
        morita: String,
        tuple: String,
        #[serde(default = "default_bound")]
        bound: usize,
        #[serde(default = "default_width")]
        width: usize,
    },
    ThmA {
        morita: String,
        z: String,
        s: String,
        t: String,
        #[serde(default)]
        iso: Option<String>,
        #[serde(default = "default_bound")]
        bound: usize,
        #[serde(default = "default_width")]
        width: usize,
    },
    Stratifying {
        morita: String,
        ideal: IdealSpec,
        #[serde(default = "default_bound")]
        tor_bound: usize,
        #[serde(default)]
        require_certain: bool,
    },
    HomEmbedding {
        morita: String,
        side: SideSpec,
        /// Pairs of module names; empty means `(top, top)`.
        #[serde(default)]
        samples: Vec<(String, String)>,
        #[serde(default = "default_bound")]
        n_max: usize,
    },
    ExtTable {
        module: String,
        target: String,
        #[serde(default = "default_bound")]
        resolution_length: usize,
        #[serde(default)]
        formula: Option<FormulaSpec>,
    },
    SilpSpli {
        morita: String,
        #[serde(default = "default_bound")]
        bound: usize,
    },
    MonoAnalyze {
        algebra: String,
        objects: Vec<String>,
        #[serde(default = "default_bound")]
        bound: usize,
    },
    StableEndo {
        algebra: String,
        objects: Vec<String>,
        #[serde(default)]
        ambient: Ambient,
        #[serde(default = "default_true")]
        generation_asserted: bool,
        #[serde(default = "default_bound")]
        bound: usize,
    },
    FunctorReport {
        algebra: String,
        objects: Vec<String>,
        #[serde(default)]
        ambient: Ambient,
        #[serde(default = "default_true")]
        generation_asserted: bool,
        source: SourceSpec,
        /// Gorenstein dimension of the base for `cbar`; computed if absent.
        #[serde(default)]
        n: Option<usize>,
        #[serde(default = "default_bound")]
        bound: usize,
    },
}

impl TaskKind {
    pub fn name(&self) -> &'static str {
        match self {
            TaskKind::Validate {} => "validate",
            TaskKind::Gorenstein { .. } => "gorenstein",
            TaskKind::Gproj { .. } => "gproj",
            TaskKind::ThmA { .. } => "thm-a",
            TaskKind::Stratifying { .. } => "stratifying",
            TaskKind::HomEmbedding { .. } => "hom-embedding",
            TaskKind::ExtTable { .. } => "ext-table",
            TaskKind::SilpSpli { .. } => "silp-spli",
            TaskKind::MonoAnalyze { .. } => "mono-analyze",
            TaskKind::StableEndo { .. } => "stable-endo",
            TaskKind::FunctorReport { .. } => "functor-report",
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub enum LoadError {
    Io(String),
    Parse { line: usize, column: usize, message: String },
    Version(u32),
    UnknownTask { id: String, kind: String },
    Validation { object: String, reason: String },
}

impl fmt::Display for LoadError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LoadError::Io(e) => write!(f, "cannot read manifest: {e}"),
            LoadError::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            LoadError::Version(v) => {
                write!(f, "unsupported schema_version {v} (expected {SCHEMA_VERSION})")
            }
            LoadError::UnknownTask { id, kind } => write!(f, "task '{id}' has unknown kind '{kind}'"),
            LoadError::Validation { object, reason } => write!(f, "invalid object '{object}': {reason}"),
        }
    }
}

impl std::error::Error for LoadError {}

fn invalid(object: &str, reason: impl fmt::Display) -> LoadError {
    LoadError::Validation {
        object: object.to_string(),
        reason: reason.to_string(),
    }
}

/// A mono object: the algebra it lives over and its structure map.
#[derive(Clone, Debug)]
pub struct MonoEntry {
    pub algebra: String,
    pub map: ModuleHom,
}

/// A validated manifest with every reference resolved.
#[derive(Debug)]
pub struct Manifest {
    pub field: PrimeField,
    pub algebras: BTreeMap<String, Arc<Algebra>>,
    pub modules: BTreeMap<String, Module>,
    pub maps: BTreeMap<String, ModuleHom>,
    pub bimodules: BTreeMap<String, Bimodule>,
    pub morita: BTreeMap<String, MoritaData>,
    pub tuples: BTreeMap<String, (String, MoritaTuple)>,
    pub mono_objects: BTreeMap<String, MonoEntry>,
    pub tasks: Vec<TaskSpec>,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, kind: &str, name: &str, owner: &str) -> Result<&'a T, LoadError> {
    map.get(name)
        .ok_or_else(|| invalid(owner, format!("unknown {kind} '{name}'")))
}

fn check_entries(field: PrimeField, v: &[u64], owner: &str) -> Result<(), LoadError> {
    match v.iter().find(|&&x| x >= field.modulus()) {
        Some(x) => Err(invalid(owner, format!("entry {x} is not reduced modulo {}", field.modulus()))),
        None => Ok(()),
    }
}

fn matrix(field: PrimeField, rows: usize, cols: usize, v: &[u64], owner: &str) -> Result<Mat, LoadError> {
    check_entries(field, v, owner)?;
    Mat::from_vec(field, rows, cols, v.to_vec())
        .map_err(|_| invalid(owner, format!("expected {} entries for a {rows}×{cols} matrix, got {}", rows * cols, v.len())))
}

fn matrices(field: PrimeField, count: usize, dim: usize, v: &[u64], owner: &str) -> Result<Vec<Mat>, LoadError> {
    if v.len() != count * dim * dim {
        return Err(invalid(
            owner,
            format!("expected {} action entries, got {}", count * dim * dim, v.len()),
        ));
    }
    (0..count)
        .map(|i| matrix(field, dim, dim, &v[i * dim * dim..(i + 1) * dim * dim], owner))
        .collect()
}

fn vector(field: PrimeField, a: &Algebra, v: &[u64], owner: &str) -> Result<(), LoadError> {
    check_entries(field, v, owner)?;
    if v.len() != a.dim() {
        return Err(invalid(owner, format!("vector of length {}, expected {}", v.len(), a.dim())));
    }
    Ok(())
}

fn idempotent(field: PrimeField, a: &Algebra, e: &[u64], owner: &str) -> Result<(), LoadError> {
    vector(field, a, e, owner)?;
    if !a.is_idempotent(e) {
        return Err(invalid(owner, "element is not idempotent"));
    }
    Ok(())
}

fn build_algebra(field: PrimeField, name: &str, spec: &AlgebraSpec) -> Result<Arc<Algebra>, LoadError> {
    match spec {
        AlgebraSpec::StructureConstants { dim, constants, unit } => {
            check_entries(field, constants, name)?;
            check_entries(field, unit, name)?;
            Algebra::new(field, *dim, constants.clone(), unit.clone()).map_err(|e| invalid(name, e))
        }
        AlgebraSpec::TruncatedPolynomial { n } => {
            if *n == 0 {
                return Err(invalid(name, "n must be positive"));
            }
            Ok(truncated_polynomial(field, *n))
        }
        AlgebraSpec::Quiver { vertices, arrows, relations } => {
            let p = path_algebra(field, &Quiver::new(*vertices, arrows.clone())).map_err(|e| invalid(name, e))?;
            if relations.is_empty() {
                return Ok(p);
            }
            for r in relations {
                vector(field, &p, r, name)?;
            }
            quotient_algebra(&p, relations).map(|(q, _)| q).map_err(|e| invalid(name, e))
        }
    }
}

struct Scope<'a> {
    algebras: &'a BTreeMap<String, Arc<Algebra>>,
    bimodules: &'a BTreeMap<String, Bimodule>,
    modules: &'a BTreeMap<String, Module>,
    maps: &'a BTreeMap<String, ModuleHom>,
}

fn build_module(field: PrimeField, name: &str, spec: &ModuleSpec, sc: &Scope) -> Result<Module, LoadError> {
    let alg = |a: &str| lookup(sc.algebras, "algebra", a, name);
    match spec {
        ModuleSpec::Tensor { bimodule, module } => {
            let b = lookup(sc.bimodules, "bimodule", bimodule, name)?;
            let x = lookup(sc.modules, "module", module, name)?;
            tensor_over(b, x).map(|t| t.module).map_err(|e| invalid(name, e))
        }
        ModuleSpec::Cokernel { map } => Ok(lookup(sc.maps, "map", map, name)?.cokernel().0),
        ModuleSpec::Action { algebra, dim, matrices: m } => {
            let a = alg(algebra)?;
            let action = matrices(field, a.dim(), *dim, m, name)?;
            Module::new(a.clone(), *dim, action).map_err(|e| invalid(name, e))
        }
        ModuleSpec::OneDim { algebra, weights } => {
            let a = alg(algebra)?;
            let action = matrices(field, a.dim(), 1, weights, name)?;
            Module::new(a.clone(), 1, action).map_err(|e| invalid(name, e))
        }
        ModuleSpec::Regular { algebra } => Ok(Module::regular(alg(algebra)?)),
        ModuleSpec::Free { algebra, rank } => Ok(Module::free(alg(algebra)?, *rank)),
        ModuleSpec::Top { algebra } => Module::top(alg(algebra)?).map_err(|e| invalid(name, e)),
        ModuleSpec::Projective { algebra, idempotent: e } => {
            let a = alg(algebra)?;
            idempotent(field, a, e, name)?;
            Ok(projective_summand(a, e))
        }
    }
}

fn build_bimodule(field: PrimeField, name: &str, spec: &BimoduleSpec, algebras: &BTreeMap<String, Arc<Algebra>>) -> Result<Bimodule, LoadError> {
    let alg = |a: &str| lookup(algebras, "algebra", a, name);
    match spec {
        BimoduleSpec::Regular { algebra } => Ok(Bimodule::regular(alg(algebra)?)),
        BimoduleSpec::Zero { left, right } => Ok(Bimodule::zero(alg(left)?, alg(right)?)),
        BimoduleSpec::Idempotent { algebra, e, f } => {
            let a = alg(algebra)?;
            idempotent(field, a, e, name)?;
            idempotent(field, a, f, name)?;
            Ok(idempotent_bimodule(a, e, f))
        }
        BimoduleSpec::Action {
            left,
            right,
            dim,
            left_matrices,
            right_matrices,
        } => {
            let (l, r) = (alg(left)?, alg(right)?);
            let la = matrices(field, l.dim(), *dim, left_matrices, name)?;
            let ra = matrices(field, r.dim(), *dim, right_matrices, name)?;
            Bimodule::new(l.clone(), r.clone(), *dim, la, ra).map_err(|e| invalid(name, e))
        }
    }
}

fn build_morita(
    field: PrimeField,
    name: &str,
    spec: &MoritaSpec,
    algebras: &BTreeMap<String, Arc<Algebra>>,
    bimodules: &BTreeMap<String, Bimodule>,
) -> Result<MoritaData, LoadError> {
    let alg = |a: &str| lookup(algebras, "algebra", a, name);
    match spec {
        MoritaSpec::Delta { algebra, multiplication } => {
            MoritaData::delta(alg(algebra)?, *multiplication).map_err(|e| invalid(name, e))
        }
        MoritaSpec::Idempotents { algebra, e, f } => {
            let a = alg(algebra)?;
            idempotent(field, a, e, name)?;
            idempotent(field, a, f, name)?;
            MoritaData::from_idempotents(a, e, f).map_err(|e| invalid(name, e))
        }
        MoritaSpec::General { a, b, n, m, phi, psi } => {
            let (aa, bb) = (alg(a)?, alg(b)?);
            let nn = lookup(bimodules, "bimodule", n, name)?.clone();
            let mm = lookup(bimodules, "bimodule", m, name)?.clone();
            let zero = MoritaData::new(aa.clone(), bb.clone(), nn.clone(), mm.clone(), None, None).map_err(|e| invalid(name, e))?;
            if phi.is_none() && psi.is_none() {
                return Ok(zero);
            }
            let phi = phi
                .as_ref()
                .map(|v| matrix(field, bb.dim(), zero.m_tensor_n().dim(), v, name))
                .transpose()?;
            let psi = psi
                .as_ref()
                .map(|v| matrix(field, aa.dim(), zero.n_tensor_m().dim(), v, name))
                .transpose()?;
            MoritaData::new(aa.clone(), bb.clone(), nn, mm, phi, psi).map_err(|e| invalid(name, e))
        }
    }
}

fn build_tuple(
    field: PrimeField,
    name: &str,
    spec: &TupleSpec,
    morita: &BTreeMap<String, MoritaData>,
    modules: &BTreeMap<String, Module>,
) -> Result<(String, MoritaTuple), LoadError> {
    match spec {
        TupleSpec::Explicit { morita: dn, x, y, f, g } => {
            let d = lookup(morita, "morita block", dn, name)?;
            let x = lookup(modules, "module", x, name)?.clone();
            let y = lookup(modules, "module", y, name)?.clone();
            let mx = tensor_over(d.m(), &x).map_err(|e| invalid(name, e))?.dim();
            let ny = tensor_over(d.n(), &y).map_err(|e| invalid(name, e))?.dim();
            let fm = matrix(field, y.dim(), mx, f, name)?;
            let gm = matrix(field, x.dim(), ny, g, name)?;
            let t = MoritaTuple::new(d, x, y, fm, gm).map_err(|e| invalid(name, e))?;
            Ok((dn.clone(), t))
        }
        TupleSpec::Regular { morita: dn, cf, cg } => {
            let d = lookup(morita, "morita block", dn, name)?;
            vector(field, d.a(), cf, name)?;
            vector(field, d.a(), cg, name)?;
            let t = morita_core::fixtures::regular_tuple(d, cf, cg).map_err(|e| invalid(name, e))?;
            Ok((dn.clone(), t))
        }
        TupleSpec::Functor { morita: dn, functor, module } => {
            let d = lookup(morita, "morita block", dn, name)?;
            let m = lookup(modules, "module", module, name)?;
            let f = FunctorName::parse(functor)
                .filter(|f| matches!(f, FunctorName::TA | FunctorName::TB | FunctorName::HA | FunctorName::HB | FunctorName::ZA | FunctorName::ZB))
                .ok_or_else(|| invalid(name, format!("'{functor}' is not a functor from modules to tuples")))?;
            let t = apply_functor(f, d, &FunctorArg::Module(m.clone()))
                .map_err(|e| invalid(name, e))?
                .into_tuple()
                .ok_or_else(|| invalid(name, "functor did not produce a tuple"))?;
            Ok((dn.clone(), t))
        }
    }
}

/// Modules may be cokernels of maps, so modules and maps are built in
/// dependency order. A reference that never resolves is reported.
fn build_modules_and_maps(
    field: PrimeField,
    file: &ManifestFile,
    algebras: &BTreeMap<String, Arc<Algebra>>,
    bimodules: &BTreeMap<String, Bimodule>,
) -> Result<(BTreeMap<String, Module>, BTreeMap<String, ModuleHom>), LoadError> {
    let mut modules = BTreeMap::new();
    let mut maps = BTreeMap::new();
    loop {
        let mut progress = false;
        for (name, spec) in &file.modules {
            if modules.contains_key(name) {
                continue;
            }
            let ready = spec.module_deps().iter().all(|d| modules.contains_key(*d) || !file.modules.contains_key(*d))
                && spec.map_deps().iter().all(|d| maps.contains_key(*d) || !file.maps.contains_key(*d));
            if ready {
                let sc = Scope {
                    algebras,
                    bimodules,
                    modules: &modules,
                    maps: &maps,
                };
                let m = build_module(field, name, spec, &sc)?;
                modules.insert(name.clone(), m);
                progress = true;
            }
        }
        for (name, spec) in &file.maps {
            if maps.contains_key(name) {
                continue;
            }
            let known = |d: &String| modules.contains_key(d) || !file.modules.contains_key(d);
            if known(&spec.source) && known(&spec.target) {
                let s = lookup(&modules, "module", &spec.source, name)?;
                let t = lookup(&modules, "module", &spec.target, name)?;
                let m = matrix(field, t.dim(), s.dim(), &spec.matrix, name)?;
                let h = ModuleHom::new(s.clone(), t.clone(), m).map_err(|e| invalid(name, e))?;
                maps.insert(name.clone(), h);
                progress = true;
            }
        }
        if modules.len() == file.modules.len() && maps.len() == file.maps.len() {
            return Ok((modules, maps));
        }
        if !progress {
            let stuck = file
                .modules
                .keys()
                .find(|n| !modules.contains_key(*n))
                .or_else(|| file.maps.keys().find(|n| !maps.contains_key(*n)))
                .expect("something is unresolved");
            return Err(invalid(stuck, "cyclic module and map references"));
        }
    }
}

fn parse_tasks(raw: Vec<serde_json::Value>) -> Result<Vec<TaskSpec>, LoadError> {
    raw.into_iter()
        .enumerate()
        .map(|(i, mut v)| {
            let owner = format!("tasks[{i}]");
            let obj = v.as_object_mut().ok_or_else(|| invalid(&owner, "task is not an object"))?;
            let id = match obj.remove("id") {
                Some(serde_json::Value::String(s)) => s,
                _ => return Err(invalid(&owner, "missing string field 'id'")),
            };
            let kind = obj.get("kind").and_then(|k| k.as_str()).unwrap_or_default().to_string();
            if !TASK_KINDS.contains(&kind.as_str()) {
                return Err(LoadError::UnknownTask { id, kind });
            }
            let kind: TaskKind = serde_json::from_value(v).map_err(|e| invalid(&id, e))?;
            Ok(TaskSpec { id, kind })
        })
        .collect()
}

fn algebra_name(algebras: &BTreeMap<String, Arc<Algebra>>, a: &Arc<Algebra>) -> Option<String> {
    algebras
        .iter()
        .find(|(_, b)| same_algebra(a, b))
        .map(|(n, _)| n.clone())
}

impl Manifest {
    pub fn load(path: &Path) -> Result<Manifest, LoadError> {
        let text = std::fs::read_to_string(path).map_err(|e| LoadError::Io(e.to_string()))?;
        Manifest::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Manifest, LoadError> {
        let file: ManifestFile = serde_json::from_str(text).map_err(|e| LoadError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        Manifest::resolve(file)
    }

    fn resolve(file: ManifestFile) -> Result<Manifest, LoadError> {
        if file.schema_version != SCHEMA_VERSION {
            return Err(LoadError::Version(file.schema_version));
        }
        let field = PrimeField::new(file.field.modulus).map_err(|e| invalid("field", e))?;
        let mut algebras = BTreeMap::new();
        for (name, spec) in &file.algebras {
            algebras.insert(name.clone(), build_algebra(field, name, spec)?);
        }
        let mut bimodules = BTreeMap::new();
        for (name, spec) in &file.bimodules {
            bimodules.insert(name.clone(), build_bimodule(field, name, spec, &algebras)?);
        }
        let (modules, maps) = build_modules_and_maps(field, &file, &algebras, &bimodules)?;
        let mut morita = BTreeMap::new();
        for (name, spec) in &file.morita {
            morita.insert(name.clone(), build_morita(field, name, spec, &algebras, &bimodules)?);
        }
        let mut tuples = BTreeMap::new();
        for (name, spec) in &file.tuples {
            tuples.insert(name.clone(), build_tuple(field, name, spec, &morita, &modules)?);
        }
        let mut mono_objects = BTreeMap::new();
        for (name, map) in &file.mono_objects {
            let h = lookup(&maps, "map", map, name)?;
            if !h.is_injective() {
                return Err(invalid(name, "structure map is not a monomorphism"));
            }
            let algebra = algebra_name(&algebras, h.source().algebra())
                .ok_or_else(|| invalid(name, "map is over an undeclared algebra"))?;
            mono_objects.insert(name.clone(), MonoEntry { algebra, map: h.clone() });
        }
        let m = Manifest {
            field,
            algebras,
            modules,
            maps,
            bimodules,
            morita,
            tuples,
            mono_objects,
            tasks: parse_tasks(file.tasks)?,
        };
        m.check_tasks()?;
        Ok(m)
    }

    fn check_tasks(&self) -> Result<(), LoadError> {
        let mut seen = std::collections::BTreeSet::new();
        for t in &self.tasks {
            let id = t.id.as_str();
            if !seen.insert(id) {
                return Err(invalid(id, "duplicate task id"));
            }
            let alg = |n: &str| lookup(&self.algebras, "algebra", n, id).map(|_| ());
            let md = |n: &str| lookup(&self.morita, "morita block", n, id).map(|_| ());
            let module = |n: &str| lookup(&self.modules, "module", n, id).map(|_| ());
            let map = |n: &str| lookup(&self.maps, "map", n, id).map(|_| ());
            let objects = |a: &str, objs: &[String], ambient: Ambient| -> Result<(), LoadError> {
                alg(a)?;
                if objs.is_empty() {
                    return Err(invalid(id, "empty object list"));
                }
                for o in objs {
                    let over = match ambient {
                        Ambient::Mono => {
                            let e = lookup(&self.mono_objects, "mono object", o, id)?;
                            self.algebras[e.algebra.as_str()].clone()
                        }
                        Ambient::Modules => lookup(&self.modules, "module", o, id)?.algebra().clone(),
                    };
                    if !same_algebra(&over, &self.algebras[a]) {
                        return Err(invalid(id, format!("object '{o}' is not over '{a}'")));
                    }
                }
                Ok(())
            };
            match &t.kind {
                TaskKind::Validate {} => {}
                TaskKind::Gorenstein { algebra, morita, .. } => match (algebra, morita) {
                    (Some(a), None) => alg(a)?,
                    (None, Some(d)) => md(d)?,
                    _ => return Err(invalid(id, "give exactly one of 'algebra' and 'morita'")),
                },
                TaskKind::Gproj { morita, tuple, width, .. } => {
                    md(morita)?;
                    let (owner, _) = lookup(&self.tuples, "tuple", tuple, id)?;
                    if owner != morita {
                        return Err(invalid(id, format!("tuple '{tuple}' is over '{owner}'")));
                    }
                    if *width == 0 {
                        return Err(invalid(id, "width must be positive"));
                    }
                }
                TaskKind::ThmA { morita, z, s, t, iso, width, .. } => {
                    md(morita)?;
                    module(z)?;
                    map(s)?;
                    map(t)?;
                    if let Some(i) = iso {
                        map(i)?;
                    }
                    if *width == 0 {
                        return Err(invalid(id, "width must be positive"));
                    }
                }
                TaskKind::Stratifying { morita, .. } | TaskKind::SilpSpli { morita, .. } => md(morita)?,
                TaskKind::HomEmbedding { morita, samples, .. } => {
                    md(morita)?;
                    for (x, y) in samples {
                        module(x)?;
                        module(y)?;
                    }
                }
                TaskKind::ExtTable { module: m, target, resolution_length, formula } => {
                    module(m)?;
                    module(target)?;
                    if *resolution_length == 0 {
                        return Err(invalid(id, "resolution_length must be positive"));
                    }
                    if let Some(f) = formula {
                        md(&f.morita)?;
                    }
                }
                TaskKind::MonoAnalyze { algebra, objects: objs, .. } => objects(algebra, objs, Ambient::Mono)?,
                TaskKind::StableEndo { algebra, objects: objs, ambient, .. }
                | TaskKind::FunctorReport { algebra, objects: objs, ambient, .. } => objects(algebra, objs, *ambient)?,
            }
        }
        Ok(())
    }

}
