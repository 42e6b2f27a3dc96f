//! Early stress probe: unavoidability and charge conservation over the
//! exhaustive small corpus and a random sample. The full budgeted runs live
//! in the acceptance suite; this probe exists to localize disagreements
//! between the detectors and the rule engines quickly.

mod common;

use distcolor::charge::rat;
use distcolor::configs::ALL_THEOREMS;
use distcolor::discharge::{run_rules, verify_unavoidability, VerificationOutcome};
use distcolor::io;

#[test]
fn exhaustive_small_unavoidability() {
    let corpus = common::exhaustive_plane_corpus(7);
    assert!(corpus.len() > 300, "corpus too small: {}", corpus.len());
    let mut checked = 0usize;
    for pg in &corpus {
        for t in ALL_THEOREMS {
            if !common::theorem_applies(pg, t) {
                continue;
            }
            checked += 1;
            let rep = run_rules(pg, t).unwrap();
            assert_eq!(rep.initial.total(), rat(-8));
            assert_eq!(rep.final_.total(), rat(-8));
            match verify_unavoidability(pg, t).unwrap() {
                VerificationOutcome::ConfigFound(ws) => assert!(!ws.is_empty()),
                VerificationOutcome::Anomaly(rep) => panic!(
                    "anomaly under {} on {}:\n{}",
                    t.name(),
                    io::plane_graph_to_json(pg),
                    rep.to_json()
                ),
            }
        }
    }
    assert!(checked > 1000, "too few checks ran: {checked}");
}

#[test]
fn random_sample_unavoidability() {
    let corpus = common::random_plane_corpus(150, 0xABCD);
    for pg in &corpus {
        for t in ALL_THEOREMS {
            if !common::theorem_applies(pg, t) {
                continue;
            }
            match verify_unavoidability(pg, t).unwrap() {
                VerificationOutcome::ConfigFound(_) => {}
                VerificationOutcome::Anomaly(rep) => panic!(
                    "anomaly under {} on {}:\n{}",
                    t.name(),
                    io::plane_graph_to_json(pg),
                    rep.to_json()
                ),
            }
        }
    }
}
