#![no_main]

use std::sync::Arc;

use libfuzzer_sys::fuzz_target;
use qeclab::cocycle::CocycleJson;
use qeclab::{Caps, Cocycle, FiniteGroup};

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<CocycleJson>(data) else { return };
    let g = Arc::new(FiniteGroup::dihedral(4, &Caps::default()).unwrap());
    if let Ok(c) = Cocycle::from_json(g.clone(), json) {
        assert!(c.verify());
        let _ = c.find_trivializing_phase();
    }
});
