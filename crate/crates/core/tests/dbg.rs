use lme_core::liealg::*;
use std::time::Instant;

#[test]
fn so_heavy_cells() {
    let opts = KernelOptions::default();
    for (d, n, want) in [
        (3usize, 5usize, 6usize),
        (3, 6, 15),
        (3, 7, 36),
        (3, 8, 91),
        (4, 5, 0),
        (4, 6, 25),
        (4, 7, 0),
        (5, 5, 1),
        (6, 5, 0),
        (7, 4, 3),
    ] {
        let t0 = Instant::now();
        let basis = so_trivial_subspace(d, n, &opts).unwrap();
        println!("d={d} N={n}: dim={} want={want} in {:?}", basis.len(), t0.elapsed());
        assert_eq!(basis.len(), want, "d={d} N={n}");
    }
}
