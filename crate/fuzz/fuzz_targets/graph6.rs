#![no_main]

use libfuzzer_sys::fuzz_target;
use tperf_core::graph::formats::{from_graph6, parse_graph6_lines, to_graph6};

fuzz_target!(|s: &str| {
    if let Ok(g) = from_graph6(s) {
        assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
    }
    let _ = parse_graph6_lines(s);
});
