#![no_main]

use libfuzzer_sys::fuzz_target;
use sol3::cli::parse_curve;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(curve) = parse_curve(text) else {
        return;
    };
    let printed = curve.to_string();
    let reparsed = parse_curve(&printed).expect("printed curve parses");
    assert_eq!(reparsed, curve, "{printed}");
    let _ = curve.value(0.5);
    let _ = curve.eval(-1.25);
});
