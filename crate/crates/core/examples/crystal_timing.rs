//! Times the path crystal against Freudenthal on every μ of a catalog datum up to a
//! dimension bound: `cargo run --release --example crystal_timing -- A2 10000`.

use adlv_core::crystal::{path_character, seed_path, Seed};
use adlv_core::repthy::{dominant_up_to_dim, freudenthal, weyl_dimension};
use adlv_core::rootdata::catalog::by_label;
use std::time::Instant;

fn main() {
    let mut args = std::env::args().skip(1);
    let label = args.next().unwrap_or("A2".into());
    let max: u128 = args.next().map(|s| s.parse().unwrap()).unwrap_or(10_000);
    let d = by_label(&label).unwrap();
    let mus = dominant_up_to_dim(&d, max);
    let (mut tc, mut tf, mut elems) = (0.0, 0.0, 0u128);
    for mu in &mus {
        let p = d.dynkin(mu);
        let t = Instant::now();
        let path = seed_path(&d, &p, Seed::Fundamental).unwrap();
        let c = path_character(&d, &path, u128::MAX).unwrap();
        tc += t.elapsed().as_secs_f64();
        let t = Instant::now();
        let f = freudenthal(&d, &p);
        tf += t.elapsed().as_secs_f64();
        assert_eq!(c.len(), f.len());
        for w in f {
            assert_eq!(c[&w.depth], w.mult, "{p:?}");
        }
        elems += weyl_dimension(&d, &p);
    }
    println!("{label} {} reps {elems} elems crystal {tc:.2}s ({:.3}us/elem) freudenthal {tf:.2}s", mus.len(), tc * 1e6 / elems as f64);
}
