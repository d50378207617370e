#![no_main]

use libfuzzer_sys::fuzz_target;
use qeclab::{Caps, GroupSpec};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = text.parse::<GroupSpec>() else { return };
    let again: GroupSpec = spec.to_string().parse().expect("printed specs parse");
    assert_eq!(again, spec);
    let caps = Caps { max_order: 64, max_dim: 16, max_table_order: 256, max_perm_product: 256, max_search_dim: 8 };
    if let Ok(g) = spec.build(&caps) {
        assert!(g.associativity_violation().is_none());
    }
});
