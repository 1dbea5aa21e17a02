#![no_main]

use libfuzzer_sys::fuzz_target;
use sol3::cli::parse_solution;
use sol3::surface::mean_curvature;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(spec) = parse_solution(text) else {
        return;
    };
    let printed = spec.to_string();
    let reparsed = parse_solution(&printed).expect("printed solution parses");
    assert_eq!(reparsed, spec, "{printed}");
    if let Ok(imm) = spec.materialize() {
        let _ = mean_curvature(&imm, 0.3, 0.7);
    }
});
