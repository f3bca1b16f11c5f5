#![no_main]

use libfuzzer_sys::fuzz_target;
use tperf_core::graph::formats::{from_dimacs, to_dimacs};

fuzz_target!(|s: &str| {
    if let Ok(g) = from_dimacs(s) {
        assert_eq!(from_dimacs(&to_dimacs(&g)).unwrap(), g);
    }
});
