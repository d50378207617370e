use std::fs;
use std::path::PathBuf;
use std::sync::Arc;

use qeclab::channels::ChannelJson;
use qeclab::cocycle::CocycleJson;
use qeclab::codes::CodeJson;
use qeclab::group::GroupJson;
use qeclab::io::parse_phase_map;
use qeclab::projrep::RepJson;
use qeclab::{Caps, Cocycle, CodeSpace, FiniteGroup, GroupSpec, KrausChannel, ModelSpec, Phase, ProjectiveRep};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut paths: Vec<_> = fs::read_dir(&dir).unwrap().map(|e| e.unwrap().path()).collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths.iter().map(|p| fs::read_to_string(p).unwrap()).collect()
}

#[test]
fn spec_seeds_parse_and_build() {
    let caps = Caps::default();
    for s in seeds("group_spec") {
        s.parse::<GroupSpec>().unwrap().build(&caps).unwrap();
    }
    for s in seeds("model_spec") {
        s.parse::<ModelSpec>().unwrap().build(&caps).unwrap();
    }
}

#[test]
fn json_seeds_decode() {
    for s in seeds("group_json") {
        FiniteGroup::from_json(serde_json::from_str::<GroupJson>(&s).unwrap()).unwrap();
    }
    let d4 = Arc::new(FiniteGroup::dihedral(4, &Caps::default()).unwrap());
    let c: CocycleJson = serde_json::from_str(&seeds("cocycle_json")[0]).unwrap();
    assert!(Cocycle::from_json(d4, c).unwrap().verify());
    for s in seeds("code_json") {
        CodeSpace::from_json(&serde_json::from_str::<CodeJson>(&s).unwrap()).unwrap();
    }
    for s in seeds("channel_json") {
        KrausChannel::from_json(&serde_json::from_str::<ChannelJson>(&s).unwrap()).unwrap();
    }
    for s in seeds("phase_file") {
        parse_phase_map(&s).unwrap();
    }
    let g = Arc::new(FiniteGroup::from_json(serde_json::from_str(&seeds("group_json")[0]).unwrap()).unwrap());
    let rho: RepJson = serde_json::from_str(&seeds("rep_json")[0]).unwrap();
    assert!(ProjectiveRep::from_json(g, &rho).unwrap().is_irreducible());
}

#[test]
fn cocycle_files_must_satisfy_the_identity() {
    let d4 = Arc::new(FiniteGroup::dihedral(4, &Caps::default()).unwrap());
    let c: CocycleJson = serde_json::from_str(&seeds("cocycle_json")[1]).unwrap();
    assert!(Cocycle::from_json(d4, c).is_err());
}

#[test]
fn oversized_headers_are_rejected_without_allocating() {
    let code = format!(r#"{{"ambient_dim":{},"basis":[[[1,0]]]}}"#, usize::MAX);
    assert!(CodeSpace::from_json(&serde_json::from_str(&code).unwrap()).is_err());
    let channel = format!(r#"{{"ambient_dim":{},"kraus":[[[1,0]]]}}"#, usize::MAX / 2);
    assert!(KrausChannel::from_json(&serde_json::from_str(&channel).unwrap()).is_err());
    let g = Arc::new(FiniteGroup::cyclic(2, &Caps::default()).unwrap());
    let rep = format!(r#"{{"dim":{},"matrices":[[[1,0]],[[1,0]]]}}"#, 1usize << 40);
    assert!(ProjectiveRep::from_json(g, &serde_json::from_str(&rep).unwrap()).is_err());
}

#[test]
fn phase_denominators_are_bounded() {
    assert!(serde_json::from_str::<Phase>("[1, 16777216]").is_ok());
    assert!(serde_json::from_str::<Phase>("[1, 16777217]").is_err());
    assert!(serde_json::from_str::<Phase>("[1, 0]").is_err());
    let a: Phase = serde_json::from_str("[16777215, 16777216]").unwrap();
    let b: Phase = serde_json::from_str("[16777212, 16777213]").unwrap();
    assert_eq!(a * b * b.inverse(), a);
    assert_eq!(Phase::new(i64::MIN, u64::MAX).unwrap().den() > 0, true);
}

#[test]
fn huge_permutation_products_fail_before_enumerating() {
    let caps = Caps::default();
    for s in ["permsd(cyclic:58,3333333331)", "permsd(cyclic:1,25)"] {
        assert!(s.parse::<GroupSpec>().unwrap().build(&caps).is_err(), "{s}");
    }
    assert!("permprod(genpauli:1,30)".parse::<ModelSpec>().unwrap().build(&caps).is_err());
}
