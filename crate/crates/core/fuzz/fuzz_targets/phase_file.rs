#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::io::{phase_function_to_json, read_phase_function};
use qeclab::{Caps, FiniteGroup};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let g = FiniteGroup::cyclic(6, &Caps::default()).unwrap();
    let h = g.subgroup_generated(&[2]).unwrap();
    if let Ok(f) = read_phase_function(text, h.clone()) {
        let back = read_phase_function(&phase_function_to_json(&f), h).expect("exported phases import");
        assert_eq!(back.values(), f.values());
    }
});
