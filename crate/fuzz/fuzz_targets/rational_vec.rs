#![no_main]

use libfuzzer_sys::fuzz_target;
use tperf_core::polytope::RationalVec;

fuzz_target!(|s: &str| {
    if let Ok(x) = RationalVec::from_json(s) {
        assert_eq!(RationalVec::from_json(&x.to_json()).unwrap(), x);
    }
});
