#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::channels::{channel_from_model, Distribution};
use qeclab::models::pauli_model;
use qeclab::Caps;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let dist = match text.parse::<Distribution>() {
        Ok(d) => d,
        Err(_) => match serde_json::from_str::<Vec<f64>>(text) {
            Ok(p) => Distribution::Explicit(p),
            Err(_) => return,
        },
    };
    let m = pauli_model(1, &Caps::default()).unwrap();
    if let Ok(p) = dist.probabilities(m.group()) {
        let _ = channel_from_model(&m, &p);
    }
});
