use super::*;
use alloc::vec;
use alloc::vec::Vec;
use crate::algebra::{product_algebra, validate_algebra};
use crate::fixtures;
use crate::module::{ext_dim, find_isomorphism, global_dimension, Dim};

fn x_elem(d: &MoritaData) -> Vec<u64> {
    d.a().basis_vector(1)
}

fn delta_tuples(d: &MoritaData) -> Vec<MoritaTuple> {
    let a = d.a();
    let k = fixtures::dual_simple(a);
    let reg = Module::regular(a);
    let x = x_elem(d);
    let zero = a.zero_vector();
    vec![
        t_a(d, &k).unwrap(),
        t_a(d, &reg).unwrap(),
        t_b(d, &k).unwrap(),
        h_a(d, &k).unwrap(),
        h_b(d, &reg).unwrap(),
        z_a(d, &k).unwrap(),
        z_b(d, &reg).unwrap(),
        fixtures::regular_tuple(d, &x, &x).unwrap(),
        fixtures::regular_tuple(d, &x, &zero).unwrap(),
        MoritaTuple::zero(d),
    ]
}

#[test]
fn delta_ring_has_dimension_eight() {
    let d = fixtures::delta_dual();
    let r = d.ring();
    assert_eq!(r.algebra.dim(), 8);
    assert!(validate_algebra(&r.algebra).is_ok());
    let alg = &r.algebra;
    let sum: Vec<u64> = r.e.iter().zip(&r.f).map(|(a, b)| (a + b) % 101).collect();
    assert_eq!(sum, alg.unit());
    assert!(alg.mul(&r.e, &r.f).iter().all(|&x| x == 0));
    assert!(alg.is_idempotent(&r.e) && alg.is_idempotent(&r.f));
}

#[test]
fn zero_bimodules_give_product() {
    let a = fixtures::a2();
    let b = fixtures::dual_numbers();
    let d = MoritaData::new(a.clone(), b.clone(), Bimodule::zero(&a, &b), Bimodule::zero(&b, &a), None, None).unwrap();
    let p = product_algebra(&a, &b).unwrap();
    assert_eq!(*d.ring().algebra, *p);
}

#[test]
fn upper_triangular_over_k_is_a2() {
    let k = crate::algebra::truncated_polynomial(fixtures::gf101(), 1);
    let d = MoritaData::upper_triangular(&k, &k, Bimodule::regular(&k)).unwrap();
    let r = &d.ring().algebra;
    assert_eq!(r.dim(), 3);
    assert_eq!(global_dimension(r, 4).unwrap(), Dim::Finite(1));
}

#[test]
fn multiplication_map_makes_a_ring() {
    let d = MoritaData::delta(&fixtures::dual_numbers(), true).unwrap();
    assert!(validate_algebra(&d.ring().algebra).is_ok());
    assert!(!d.has_zero_bimaps());
}

#[test]
fn incompatible_maps_are_rejected() {
    // φ = multiplication, ψ = 0 breaks nφ(m⊗n′) = ψ(n⊗m)n′.
    let lam = fixtures::dual_numbers();
    let reg = Bimodule::regular(&lam);
    let t = tensor_bimodules(&reg, &reg).unwrap();
    let mu = multiplication_map(&lam, &t);
    let err = MoritaData::new(lam.clone(), lam.clone(), reg.clone(), reg, Some(mu), None).unwrap_err();
    assert!(matches!(err, MoritaError::CompatibilityViolation(_)));
}

#[test]
fn non_bilinear_map_is_rejected() {
    let lam = fixtures::dual_numbers();
    let reg = Bimodule::regular(&lam);
    let t = tensor_bimodules(&reg, &reg).unwrap();
    // Sends the class of x to 1 and the class of 1 to 0: not left linear.
    let mut bad = Mat::zeros(lam.field(), 2, t.dim());
    bad.set(0, 1, 1);
    let err = MoritaData::new(lam.clone(), lam.clone(), reg.clone(), reg, Some(bad), None).unwrap_err();
    assert_eq!(err, MoritaError::NotBilinear("φ"));
}

#[test]
fn strongly_gorenstein_tuple_has_dimension_four() {
    let d = fixtures::delta_dual();
    let x = x_elem(&d);
    let t = fixtures::regular_tuple(&d, &x, &x).unwrap();
    let m = tuple_to_module(&d, &t);
    assert_eq!(m.dim(), 4);
    assert!(m.validate().is_ok());
}

#[test]
fn invalid_tuple_is_rejected() {
    // (Λ, Λ, 1, 1) has g ∘ (Id ⊗ f) = Id ≠ Ψ = 0.
    let d = fixtures::delta_dual();
    let one = d.a().unit().to_vec();
    assert!(matches!(
        fixtures::regular_tuple(&d, &one, &one),
        Err(MoritaError::InvariantViolation(_))
    ));
}

#[test]
fn module_round_trip() {
    let d = fixtures::delta_dual();
    for t in delta_tuples(&d) {
        let m = tuple_to_module(&d, &t);
        assert!(m.validate().is_ok());
        let (back, iso) = module_to_tuple(&d, &m).unwrap();
        assert_eq!(back.dim(), t.dim());
        assert!(iso.is_isomorphism() && iso.is_equivariant());
        assert!(find_isomorphism(&tuple_to_module(&d, &back), &m).is_some());
    }
    let zero = module_to_tuple(&d, &Module::zero(&d.ring().algebra)).unwrap().0;
    assert_eq!(zero.dim(), 0);
}

#[test]
fn regular_module_splits_into_t_a_and_t_b() {
    for d in [fixtures::delta_dual(), fixtures::a2_morita()] {
        let reg = Module::regular(&d.ring().algebra);
        let sum = t_a(&d, &Module::regular(d.a())).unwrap().oplus(&d, &t_b(&d, &Module::regular(d.b())).unwrap());
        sum.validate(&d).unwrap();
        assert!(find_isomorphism(&reg, &tuple_to_module(&d, &sum)).is_some());
        let (t, _) = module_to_tuple(&d, &reg).unwrap();
        assert_eq!(t.x.dim(), d.a().dim() + d.n().dim());
    }
}

#[test]
fn t_a_of_a_is_projective_summand() {
    let d = fixtures::a2_morita();
    let t = t_a(&d, &Module::regular(d.a())).unwrap();
    let pe = fixtures::projective_summand(&d.ring().algebra, &d.ring().e);
    assert!(find_isomorphism(&tuple_to_module(&d, &t), &pe).is_some());
}

#[test]
fn green_equivalence_preserves_hom() {
    let d = fixtures::delta_dual();
    let ts = delta_tuples(&d);
    for s in &ts {
        for t in &ts {
            let th = tuple_hom_space(s, t).unwrap();
            for h in &th {
                h.validate().unwrap();
            }
            let mh = hom_space(&tuple_to_module(&d, s), &tuple_to_module(&d, t)).unwrap();
            assert_eq!(th.len(), mh.len());
        }
    }
}

#[test]
fn adjunctions_match_hom_dimensions() {
    let d = fixtures::delta_dual();
    let a = d.a();
    let mods = [fixtures::dual_simple(a), Module::regular(a)];
    for x in &mods {
        let ta = t_a(&d, x).unwrap();
        let ha = h_a(&d, x).unwrap();
        let tb = t_b(&d, x).unwrap();
        let hb = h_b(&d, x).unwrap();
        for t in [&ta, &ha, &tb, &hb] {
            t.validate(&d).unwrap();
        }
        for t in delta_tuples(&d) {
            let dim = |s: &MoritaTuple, t: &MoritaTuple| tuple_hom_space(s, t).unwrap().len();
            assert_eq!(dim(&ta, &t), hom_space(x, &t.x).unwrap().len());
            assert_eq!(dim(&t, &ha), hom_space(&t.x, x).unwrap().len());
            assert_eq!(dim(&tb, &t), hom_space(x, &t.y).unwrap().len());
            assert_eq!(dim(&t, &hb), hom_space(&t.y, x).unwrap().len());
        }
    }
}

#[test]
fn adjunctions_on_a2_data() {
    let d = fixtures::a2_morita();
    let [s0, s1] = fixtures::a2_simples();
    for x in [s0, s1, Module::regular(d.a())] {
        let ha = h_a(&d, &x).unwrap();
        let hb = h_b(&d, &x).unwrap();
        ha.validate(&d).unwrap();
        hb.validate(&d).unwrap();
        let ta = t_a(&d, &x).unwrap();
        assert_eq!(ta.x, x);
        let m = tuple_to_module(&d, &ha);
        assert!(m.validate().is_ok());
    }
}

#[test]
fn functors_preserve_identity_and_composition() {
    let d = fixtures::delta_dual();
    let a = d.a();
    let reg = Module::regular(a);
    let x = ModuleHom::new(reg.clone(), reg.clone(), a.right_mult(1).clone()).unwrap();
    let id = ModuleHom::identity(&reg);
    for name in [FunctorName::TA, FunctorName::TB, FunctorName::HA, FunctorName::HB, FunctorName::ZA, FunctorName::ZB] {
        let apply = |h: &ModuleHom| {
            apply_functor(name, &d, &FunctorArg::ModuleHom(h.clone()))
                .unwrap()
                .into_tuple_hom()
                .unwrap()
        };
        let fi = apply(&id);
        fi.validate().unwrap();
        assert!(fi.a.matrix() == &Mat::identity(a.field(), fi.a.source().dim()));
        assert!(fi.b.matrix() == &Mat::identity(a.field(), fi.b.source().dim()));
        let fx = apply(&x);
        fx.validate().unwrap();
        let fxx = apply(&x.after(&x));
        let comp = fx.after(&fx);
        assert_eq!(fxx.a.matrix(), comp.a.matrix());
        assert_eq!(fxx.b.matrix(), comp.b.matrix());
    }
}

#[test]
fn functor_type_errors() {
    let d = fixtures::delta_dual();
    let k = fixtures::dual_simple(d.a());
    let t = t_a(&d, &k).unwrap();
    assert!(matches!(
        apply_functor(FunctorName::UA, &d, &FunctorArg::Module(k.clone())),
        Err(MoritaError::TypeMismatch)
    ));
    assert!(matches!(
        apply_functor(FunctorName::TA, &d, &FunctorArg::Tuple(t)),
        Err(MoritaError::TypeMismatch)
    ));
    let dm = MoritaData::delta(d.a(), true).unwrap();
    assert!(matches!(
        apply_functor(FunctorName::ZA, &dm, &FunctorArg::Module(k)),
        Err(MoritaError::RequiresZeroBimaps)
    ));
    assert_eq!(FunctorName::parse("H_B"), Some(FunctorName::HB));
}

#[test]
fn unit_component_and_cokernel_functor() {
    let d = fixtures::delta_dual();
    for x in [fixtures::dual_simple(d.a()), Module::regular(d.a())] {
        let t = t_a(&d, &x).unwrap();
        let ux = apply_functor(FunctorName::UA, &d, &FunctorArg::Tuple(t)).unwrap().into_module().unwrap();
        assert_eq!(ux, x);
    }
    let x = x_elem(&d);
    let zero = d.a().zero_vector();
    let t = fixtures::regular_tuple(&d, &x, &zero).unwrap();
    let q = q_b(&d, &t).unwrap().0;
    assert_eq!(q.dim(), t.f.cokernel().0.dim());
    assert_eq!(q.dim(), 1);
    // P_B of (Λ, Λ, x, x) is {y : x·y = 0} = (x).
    let t = fixtures::regular_tuple(&d, &x, &x).unwrap();
    assert_eq!(p_b(&d, &t).unwrap().0.dim(), 1);
    assert_eq!(p_a(&d, &t).unwrap().0.dim(), 1);
    assert_eq!(q_a(&d, &t).unwrap().0.dim(), 1);
}

#[test]
fn recollement_kernel() {
    let d = fixtures::delta_dual();
    for t in delta_tuples(&d) {
        let in_image = t.x.dim() == 0;
        assert_eq!(in_image, t == z_b(&d, &t.y).unwrap());
    }
}

#[test]
fn kernels_and_cokernels() {
    let d = fixtures::delta_dual();
    let x = Module::regular(d.a());
    let ta = t_a(&d, &x).unwrap();
    let kc = tuple_kernel_cokernel(&d, &TupleHom::identity(&ta)).unwrap();
    assert_eq!(kc.kernel.dim(), 0);
    assert_eq!(kc.cokernel.dim(), 0);
    let za = z_a(&d, &x).unwrap();
    let h = TupleHom::new(&ta, &za, Mat::identity(x.field(), 2), Mat::zeros(x.field(), 0, 2)).unwrap();
    let kc = tuple_kernel_cokernel(&d, &h).unwrap();
    assert_eq!(kc.kernel.x.dim(), 0);
    assert_eq!(kc.kernel.y.dim(), ta.y.dim());
    assert!(find_isomorphism(&kc.kernel.y, &ta.y).is_some());
    assert!(is_short_exact_tuples(&kc.inclusion, &h));
}

#[test]
fn kernel_of_non_split_map() {
    let d = fixtures::delta_dual();
    let x = x_elem(&d);
    let t = fixtures::regular_tuple(&d, &x, &x).unwrap();
    let mult = d.a().right_mult(1).clone();
    let h = TupleHom::new(&t, &t, mult.clone(), mult).unwrap();
    let kc = tuple_kernel_cokernel(&d, &h).unwrap();
    assert_eq!((kc.kernel.x.dim(), kc.kernel.y.dim()), (1, 1));
    assert_eq!((kc.cokernel.x.dim(), kc.cokernel.y.dim()), (1, 1));
    let f = tuple_to_module(&d, &kc.kernel);
    assert!(f.validate().is_ok());
}

#[test]
fn canonical_sequences_over_delta() {
    let d = fixtures::delta_dual();
    let reg = Module::regular(d.a());
    let seqs = canonical_sequences(&d, &reg, &reg).unwrap();
    assert_eq!(seqs.len(), 4);
    assert_eq!(seqs[0].dims(), [2, 4, 2]);
    for s in &seqs {
        assert_eq!(s.dims()[0] + s.dims()[2], s.dims()[1]);
    }
    let zero = Module::zero(d.a());
    for s in canonical_sequences(&d, &zero, &zero).unwrap() {
        assert_eq!(s.dims(), [0, 0, 0]);
    }
}

#[test]
fn canonical_sequences_over_a2_data() {
    let d = fixtures::a2_morita();
    let [s0, s1] = fixtures::a2_simples();
    for x in [&s0, &s1] {
        for y in [&s0, &s1] {
            assert_eq!(canonical_sequences(&d, x, y).unwrap().len(), 4);
        }
    }
}

#[test]
fn stratifying_examples() {
    let a = fixtures::a2();
    let lam = fixtures::dual_numbers();
    let tri = MoritaData::lower_triangular(&a, &lam, Bimodule::zero(&lam, &a)).unwrap();
    assert!(stratifying_check(&tri, StratifyingIdeal::E, 4, false).unwrap().is_stratifying());
    let d = fixtures::delta_dual();
    assert_eq!(
        stratifying_check(&d, StratifyingIdeal::E, 4, false).unwrap(),
        Stratifying::NotInjective { rank: 0, dim: 2 }
    );
    let dm = MoritaData::delta(&lam, true).unwrap();
    assert!(stratifying_check(&dm, StratifyingIdeal::E, 4, true).unwrap().is_stratifying());
    assert!(stratifying_check(&dm, StratifyingIdeal::F, 4, true).unwrap().is_stratifying());
}

#[test]
fn stratifying_detects_tor() {
    // A = B = k[x]/(x²), M = N = k, φ = ψ = (1 ↦ x): both maps are
    // injective but Tor_1(k, k) ≠ 0.
    let lam = fixtures::dual_numbers();
    let k = fixtures::dual_simple(&lam);
    let kk = Bimodule::new(lam.clone(), lam.clone(), 1, k.actions().to_vec(), k.actions().to_vec()).unwrap();
    let soc = Mat::from_vec(lam.field(), 2, 1, vec![0, 1]).unwrap();
    let d = MoritaData::new(lam.clone(), lam.clone(), kk.clone(), kk, Some(soc.clone()), Some(soc)).unwrap();
    for which in [StratifyingIdeal::E, StratifyingIdeal::F] {
        assert_eq!(
            stratifying_check(&d, which, 3, false).unwrap(),
            Stratifying::TorNonzero { degree: 1, dim: 1 }
        );
    }
}

#[test]
fn homological_embedding_dual_numbers_diverges_at_two() {
    let d = fixtures::delta_dual();
    let k = fixtures::dual_simple(d.a());
    let r = homological_embedding_check(&d, Side::B, &[(k.clone(), k)], 4).unwrap();
    assert!(!r.condition);
    assert_eq!(r.first_divergence, Some((0, 2)));
    let c = &r.comparisons[2];
    assert_eq!((c.base, c.morita), (1, 2));
}

#[test]
fn homological_embedding_a2_data() {
    let d = fixtures::a2_morita();
    let [s0, s1] = fixtures::a2_simples();
    let reg = Module::regular(d.a());
    let samples = [(s0.clone(), s1.clone()), (s1.clone(), s0.clone()), (s1.clone(), reg.clone()), (reg, s1)];
    for side in [Side::A, Side::B] {
        let r = homological_embedding_check(&d, side, &samples, 6).unwrap();
        assert!(r.condition);
        assert!(r.all_agree(), "{:?}", r.first_divergence);
    }
}

#[test]
fn ext_formula_matches_direct_computation() {
    let d = fixtures::delta_dual();
    let k = fixtures::dual_simple(d.a());
    let zk = tuple_to_module(&d, &z_b(&d, &k).unwrap());
    let expected = [1, 1, 2, 2, 3, 3, 4];
    for (n, &e) in expected.iter().enumerate() {
        assert_eq!(ext_formula_trivial_extension(&d, Side::B, &k, &k, n).unwrap(), e);
        assert_eq!(ext_dim(&zk, &zk, n, n + 1).unwrap(), e);
    }
    assert_eq!(ext_formula_trivial_extension(&d, Side::A, &k, &k, 3).unwrap(), 2);
}

#[test]
fn ext_formula_precondition() {
    let lam = fixtures::dual_numbers();
    let k1 = crate::algebra::truncated_polynomial(fixtures::gf101(), 1);
    let k = fixtures::dual_simple(&lam);
    let one = vec![Mat::identity(lam.field(), 1)];
    let m = Bimodule::new(k1.clone(), lam.clone(), 1, one, k.actions().to_vec()).unwrap();
    let d = MoritaData::lower_triangular(&lam, &k1, m).unwrap();
    let y = Module::regular(&k1);
    assert!(matches!(
        ext_formula_trivial_extension(&d, Side::B, &y, &y, 1),
        Err(MoritaError::PreconditionFailed(_))
    ));
}

#[test]
fn ext_isomorphism_for_t_a() {
    // M_A projective: Ext^n(T_A X, t) = Ext^n_A(X, U_A t).
    let d = fixtures::delta_dual();
    let k = fixtures::dual_simple(d.a());
    let ta = tuple_to_module(&d, &t_a(&d, &k).unwrap());
    for t in delta_tuples(&d) {
        let tm = tuple_to_module(&d, &t);
        for n in 0..3 {
            assert_eq!(ext_dim(&ta, &tm, n, n + 1).unwrap(), ext_dim(&k, &t.x, n, n + 1).unwrap());
        }
    }
}

#[test]
fn triangular_restrictions() {
    let d = fixtures::delta_dual();
    let x = x_elem(&d);
    let t = fixtures::regular_tuple(&d, &x, &x).unwrap();
    let (tri, g) = triangular_restriction(&d, &t, Restriction::G).unwrap();
    assert!(tri.n().is_zero());
    assert_eq!((g.x.dim(), g.y.dim()), (1, 2));
    assert_eq!(g.f.rank(), 1);
    assert!(g.f.is_injective());

    let zero = d.a().zero_vector();
    let t0 = fixtures::regular_tuple(&d, &x, &zero).unwrap();
    let (_, g0) = triangular_restriction(&d, &t0, Restriction::G).unwrap();
    assert_eq!(g0.x.dim(), 2);
    assert_eq!(g0.f.matrix(), t0.f.matrix());

    let tb = t_b(&d, &Module::regular(d.b())).unwrap();
    let (_, gb) = triangular_restriction(&d, &tb, Restriction::G).unwrap();
    assert_eq!(gb.x.dim(), 0);

    let (tri2, gp) = triangular_restriction(&d, &t, Restriction::GPrime).unwrap();
    assert!(tri2.m().is_zero());
    assert_eq!((gp.x.dim(), gp.y.dim()), (2, 1));
}

#[test]
fn swapped_data_is_isomorphic_ring() {
    let d = fixtures::a2_morita();
    let s = d.swapped().unwrap();
    assert_eq!(s.ring().algebra.dim(), d.ring().algebra.dim());
    assert_eq!(global_dimension(&s.ring().algebra, 6).unwrap(), global_dimension(&d.ring().algebra, 6).unwrap());
}
