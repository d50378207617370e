#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::group::GroupJson;
use qeclab::FiniteGroup;

fuzz_target!(|data: &[u8]| {
    let Ok(json) = serde_json::from_slice::<GroupJson>(data) else { return };
    if json.order > 64 {
        return;
    }
    if let Ok(g) = FiniteGroup::from_json(json) {
        let back = FiniteGroup::from_json(g.to_json()).expect("exported tables import");
        assert_eq!(back.order(), g.order());
    }
});
