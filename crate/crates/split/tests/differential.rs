mod common;

use common::uniform_six;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sixsplit::split_six;
use sixsplit_certify::{oracle_search, verify_split, DEFAULT_EPSILON};

#[test]
fn pipeline_certifies_whenever_oracle_does() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut oracle_hits = 0;
    for _ in 0..1000 {
        let pts = uniform_six(&mut rng);
        if oracle_search(&pts, 20_000, 0).unwrap().is_some() {
            oracle_hits += 1;
        }
        let split = split_six(&pts).expect("pipeline split");
        assert!(verify_split(&pts, &split.discs, &split.pairing, DEFAULT_EPSILON).pass);
    }
    assert!(oracle_hits > 900);
}
