#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::channels::ChannelJson;
use qeclab::KrausChannel;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<ChannelJson>(data) else { return };
    if let Ok(n) = KrausChannel::from_json(&json) {
        let rho = qeclab::linalg::identity(n.ambient_dim()) / qeclab::linalg::c(n.ambient_dim() as f64, 0.0);
        assert!((n.apply(&rho).trace().re - 1.0).abs() < 1e-6);
    }
});
