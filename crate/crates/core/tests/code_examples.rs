use qeclab::channels::{
    build_recovery, channel_from_model, kl_correctable, kl_detectable, kl_witness, single_unitary, verify_recovery,
};
use qeclab::codes::{
    classify, clifford_code, dicke_code, is_partitioning, partition_violation, product_code, stabilizer_code,
    stabilizer_to_clifford,
};
use qeclab::linalg::{self, CMat};
use qeclab::models::{family_c2_x_d2n, family_odd, gen_pauli_model, pauli_model, perm_product_model};
use qeclab::search::{enumerate_weak_stabilizer_codes, q3_probe};
use qeclab::{Caps, CodeSpace, PhaseFunction};

fn caps() -> Caps {
    Caps::default()
}

fn family_code(n: usize) -> (qeclab::CliffordFamily, CodeSpace) {
    let fam = family_c2_x_d2n(n, &caps()).unwrap();
    let w = clifford_code(&fam.model, &fam.l, &fam.rho).unwrap();
    (fam, w)
}

#[test]
fn c2_x_d4_code_is_the_first_coordinate_plane() {
    let (_, w) = family_code(2);
    let plane = CodeSpace::new(linalg::identity(4).columns(0, 2).into_owned()).unwrap();
    assert!(w.same_space(&plane));
}

#[test]
fn odd_family_code_dimension() {
    let fam = family_odd(3, &caps()).unwrap();
    let w = clifford_code(&fam.model, &fam.l, &fam.rho).unwrap();
    assert_eq!((w.dim(), fam.model.dim()), (3, 6));
    assert_eq!(fam.l.order(), 18);
}

#[test]
fn detectable_scalars_follow_the_logical_and_stabilizer_groups() {
    let (fam, w) = family_code(2);
    let g = fam.model.group();
    for x in g.elements() {
        let c = kl_detectable(&w, fam.model.matrix(x)).unwrap();
        if !fam.l.contains(x) {
            assert!(c.unwrap().norm() < 1e-9, "element {x}");
        } else if x != g.identity() {
            assert!(c.is_none(), "element {x}");
        } else {
            assert!((c.unwrap() - linalg::c(1.0, 0.0)).norm() < 1e-12);
        }
    }
    assert!((kl_detectable(&w, &linalg::identity(4)).unwrap().unwrap() - linalg::c(1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn clifford_codes_partition() {
    for n in 2..=3 {
        let (fam, w) = family_code(n);
        assert!(is_partitioning(&fam.model, &w).unwrap());
    }
    let m = gen_pauli_model(3, &caps()).unwrap();
    for code in enumerate_weak_stabilizer_codes(&m, &caps()).unwrap() {
        if m.group().is_normal(&code.subgroup) {
            let (_, w) = stabilizer_to_clifford(&m, &code.subgroup, &code.phase).unwrap();
            assert!(is_partitioning(&m, &w).unwrap());
        }
    }
    assert!(is_partitioning(&m, &CodeSpace::whole(3)).unwrap());
}

#[test]
fn dicke_code_is_not_partitioning() {
    let model = perm_product_model(&gen_pauli_model(2, &caps()).unwrap(), 2, &caps()).unwrap();
    let w = dicke_code(2).unwrap();
    assert!(partition_violation(&model, &w).unwrap().is_some());
    // X on the first qubit: (x₁, x₂, τ) = (X, 1, id), X being element 2
    let x1 = (2 * 4) * 2;
    let moved = model.matrix(x1) * w.basis();
    let p = w.projector();
    let q = linalg::identity(4) - p;
    assert!(linalg::frob(&(p * &moved)) > 1e-3);
    assert!(linalg::frob(&(q * &moved)) > 1e-3);
    // |00⟩ goes to |10⟩
    let e00 = CMat::from_fn(4, 1, |i, _| linalg::c(if i == 0 { 1.0 } else { 0.0 }, 0.0));
    let image = model.matrix(x1) * e00;
    assert!((image[(2, 0)] - linalg::c(1.0, 0.0)).norm() < 1e-12);
    let r = classify(&model, &w, &caps()).unwrap();
    assert!(r.flags.is_weak_stabilizer && !r.flags.is_clifford);
    assert!(r.logical.len() < 24);
}

#[test]
fn bell_code_as_clifford_code() {
    let m = pauli_model(2, &caps()).unwrap();
    let n = m.group().subgroup_generated(&[10, 5]).unwrap();
    let (l, w) = stabilizer_to_clifford(&m, &n, &PhaseFunction::constant_one(n.clone())).unwrap();
    assert_eq!(w.dim(), 1);
    assert_eq!(l.order() * m.dim(), w.dim() * m.group().order());
    let r = classify(&m, &w, &caps()).unwrap();
    assert_eq!(r.logical, l.members());
    assert!(r.flags.is_clifford && r.flags.is_stabilizer);

    let t = m.group().trivial();
    let (l, w) = stabilizer_to_clifford(&m, &t, &PhaseFunction::constant_one(t.clone())).unwrap();
    assert_eq!(l.order(), 16);
    assert!(w.same_space(&CodeSpace::whole(4)));
}

#[test]
fn product_codes() {
    let (fam, w1) = family_code(2);
    let whole = CodeSpace::whole(4);
    let (model, w) = product_code(&fam.model, &w1, &fam.model, &whole, &caps()).unwrap();
    let a = classify(&fam.model, &w1, &caps()).unwrap();
    let b = classify(&model, &w, &caps()).unwrap();
    assert_eq!(a.flags, b.flags);

    let m = pauli_model(2, &caps()).unwrap();
    let n = m.group().subgroup_generated(&[10, 5]).unwrap();
    let bell = stabilizer_code(&m, &n, &PhaseFunction::constant_one(n.clone())).unwrap().unwrap();
    let (model, w) = product_code(&m, &bell, &m, &bell, &caps()).unwrap();
    assert_eq!((w.dim(), model.dim()), (1, 16));
    let r = classify(&model, &w, &caps()).unwrap();
    assert!(r.flags.is_stabilizer);
}

#[test]
fn single_error_channels_on_the_c2_x_d4_code() {
    let (fam, w) = family_code(2);
    let g = fam.model.group();
    for x in g.elements().filter(|&x| !fam.l.contains(x)) {
        let n = single_unitary(&fam.model, x, 0.8).unwrap();
        assert!(kl_correctable(&w, &n).unwrap());
        let r = build_recovery(&w, &n).unwrap();
        assert!(verify_recovery(&w, &n, &r).unwrap() < 1e-7);
    }
    let uniform = channel_from_model(&fam.model, &vec![1.0 / 16.0; 16]).unwrap();
    assert!(!kl_correctable(&w, &uniform).unwrap());
    assert!(kl_witness(&w, &uniform).unwrap().is_some());
    assert!(build_recovery(&w, &uniform).is_err());
}

#[test]
fn odd_family_code_is_not_a_probe_hit() {
    let fam = family_odd(3, &caps()).unwrap();
    let w = clifford_code(&fam.model, &fam.l, &fam.rho).unwrap();
    let r = classify(&fam.model, &w, &caps()).unwrap();
    assert_eq!(r.logical.len() * r.stabilizer.len(), 18);
    let hits = q3_probe(&fam.model, &caps()).unwrap();
    assert!(hits.iter().all(|h| h.logical != fam.l.members()));
    assert!(q3_probe(&gen_pauli_model(2, &caps()).unwrap(), &caps()).unwrap().is_empty());
}

#[test]
fn stabilizer_codes_need_normal_subgroups() {
    let (fam, _) = family_code(2);
    let g = fam.model.group();
    let h = g.subgroup_generated(&[4]).unwrap();
    assert!(!g.is_normal(&h));
    assert!(stabilizer_code(&fam.model, &h, &PhaseFunction::constant_one(h.clone())).is_err());
}
