#![no_main]

use libfuzzer_sys::fuzz_target;
use tperf_core::graph::{gen_antiweb, AntiwebSpec, NamedGraph};
use tperf_core::tminor::{replay, steps_from_json};

// Replays arbitrary step lists against a few fixed hosts; any error is fine, a
// panic is not.
fuzz_target!(|s: &str| {
    let Ok(steps) = steps_from_json(s) else {
        return;
    };
    let hosts = [
        NamedGraph::K4FigC.graph(),
        NamedGraph::MmG.graph(),
        gen_antiweb(AntiwebSpec::new(13, 4).unwrap()),
    ];
    for g in &hosts {
        if let Ok(h) = replay(g, &steps) {
            assert!(h.n() <= g.n());
            assert!(h.edge_count() <= g.edge_count());
        }
    }
});
