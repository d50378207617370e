#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::{Caps, ModelSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = text.parse::<ModelSpec>() else { return };
    let again: ModelSpec = spec.to_string().parse().expect("printed specs parse");
    assert_eq!(again, spec);
    let caps = Caps { max_order: 64, max_dim: 16, max_table_order: 256, max_perm_product: 256, max_search_dim: 8 };
    if let Ok(m) = spec.build(&caps) {
        assert!(m.cocycle().verify());
    }
});
