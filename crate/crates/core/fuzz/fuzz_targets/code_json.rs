#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::codes::CodeJson;
use qeclab::CodeSpace;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<CodeJson>(data) else { return };
    if let Ok(w) = CodeSpace::from_json(&json) {
        let back = CodeSpace::from_json(&w.to_json()).expect("exported codes import");
        assert!(back.same_space(&w));
    }
});
