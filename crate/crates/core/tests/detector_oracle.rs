//! Detector/naive-enumerator equivalence on small plane graphs.

mod common;
#[path = "common/naive.rs"]
mod naive;

use std::collections::BTreeSet;

use distcolor::configs::{detect_all, ALL_THEOREMS};
use distcolor::io;

fn compare(pg: &distcolor::PlaneGraph) {
    for t in ALL_THEOREMS {
        if !common::theorem_applies(pg, t) {
            continue;
        }
        let mine: BTreeSet<naive::Occ> = detect_all(pg, t)
            .unwrap()
            .iter()
            .map(naive::witness_key)
            .collect();
        let theirs = naive::naive_detect(pg, t);
        if mine != theirs {
            let missing: Vec<_> = theirs.difference(&mine).collect();
            let spurious: Vec<_> = mine.difference(&theirs).collect();
            panic!(
                "detector mismatch under {} on {}\nmissing from detect_all: {missing:?}\nspurious in detect_all: {spurious:?}",
                t.name(),
                io::plane_graph_to_json(pg)
            );
        }
    }
}

#[test]
fn exhaustive_small_equivalence() {
    for pg in common::exhaustive_plane_corpus(7) {
        compare(&pg);
    }
}

#[test]
fn random_up_to_twelve_equivalence() {
    let mut count = 0;
    for pg in common::random_plane_corpus(600, 0x5EED) {
        if pg.graph().vertex_count() <= 12 {
            compare(&pg);
            count += 1;
        }
    }
    assert!(count >= 30, "too few small random graphs: {count}");
}
