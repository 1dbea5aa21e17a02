#![no_main]

use libfuzzer_sys::fuzz_target;
use sol3::cli::parse_range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok((lo, hi)) = parse_range(text) {
        assert!(lo.is_finite() && hi.is_finite() && lo < hi);
    }
});
