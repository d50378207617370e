#![no_main]

use std::sync::Arc;

use libfuzzer_sys::fuzz_target;
use qeclab::projrep::RepJson;
use qeclab::{Caps, FiniteGroup, ProjectiveRep};

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<RepJson>(data) else { return };
    if json.dim > 8 {
        return;
    }
    let caps = Caps::default();
    let g = Arc::new(FiniteGroup::direct_product(&FiniteGroup::cyclic(2, &caps).unwrap(), &FiniteGroup::cyclic(2, &caps).unwrap(), &caps).unwrap());
    if let Ok(rho) = ProjectiveRep::from_json(g, &json) {
        assert!(rho.cocycle().verify());
        let _ = rho.is_irreducible();
    }
});
