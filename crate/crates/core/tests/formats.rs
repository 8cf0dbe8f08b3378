//! Text formats round-trip on seeded random inputs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tsid_core::covers::hypercube_cover;
use tsid_core::format::{parse_bcv, parse_dgf, parse_trn, write_bcv, write_dgf, write_trn};
use tsid_core::{Digraph, Tournament};

fn random_digraph(rng: &mut impl Rng) -> Digraph {
    let n = rng.gen_range(0..40);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match rng.gen_range(0..3) {
                0 => edges.push((i, j)),
                1 => edges.push((j, i)),
                _ => {}
            }
        }
    }
    Digraph::from_edges(n, edges).unwrap()
}

#[test]
fn thousand_seeded_round_trips() {
    for seed in 0..1000u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_digraph(&mut rng);
        let text = write_dgf(&d);
        assert_eq!(parse_dgf(&text).unwrap(), d, "seed {seed}");
        assert_eq!(write_dgf(&parse_dgf(&text).unwrap()), text);

        let t = Tournament::random(rng.gen_range(0..70), &mut rng);
        let text = write_trn(&t);
        assert_eq!(parse_trn(&text).unwrap(), t, "seed {seed}");
        assert_eq!(write_trn(&parse_trn(&text).unwrap()), text);
    }
}

#[test]
fn headers_and_blank_lines_are_skipped() {
    let d = parse_dgf("# family: star\n\n3 2\n0 1\n\n0 2\n").unwrap();
    assert_eq!(d, Digraph::from_edges(3, [(0, 1), (0, 2)]).unwrap());
    assert_eq!(parse_trn("# host\n3\n110\n").unwrap().to_bit_string(), "110");
}

#[test]
fn hypercube_covers_round_trip() {
    for r in 1..=5 {
        for k in 1..=r {
            let (_, c) = hypercube_cover(r, k).unwrap();
            assert_eq!(parse_bcv(&write_bcv(&c)).unwrap(), c);
        }
    }
}
