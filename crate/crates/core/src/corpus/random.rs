use rand::Rng;

use crate::graph::Graph;

/// Uniform random labeled tree (random attachment).
pub fn random_tree(rng: &mut impl Rng, n: usize) -> Graph {
    let mut g = Graph::new(n);
    for v in 1..n {
        g.insert(rng.gen_range(0..v), v);
    }
    g
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.insert(u, v);
            }
        }
    }
    g
}

/// Random 2-connected graph on `n >= 3` vertices: a cycle grown by open
/// ears, then `extra` random chords.
pub fn random_two_connected(rng: &mut impl Rng, n: usize, extra: usize) -> Graph {
    assert!(n >= 3, "2-connected graphs need at least 3 vertices");
    let start = rng.gen_range(3..=n);
    let mut g = Graph::cycle(start);
    while g.n() < n {
        let len = rng.gen_range(1..=(n - g.n()));
        let a = rng.gen_range(0..g.n());
        let mut b = rng.gen_range(0..g.n());
        while b == a {
            b = rng.gen_range(0..g.n());
        }
        let mut prev = a;
        for _ in 0..len {
            let x = g.add_vertex();
            g.insert(prev, x);
            prev = x;
        }
        g.insert(prev, b);
    }
    for _ in 0..extra {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v {
            g.insert(u, v);
        }
    }
    g
}

/// Random 2-connected blocks and bridges glued at cut vertices along a
/// random tree skeleton, with at most `max_n` vertices in total.
pub fn block_glued(rng: &mut impl Rng, max_n: usize) -> Graph {
    assert!(max_n >= 1);
    let mut g = Graph::new(1);
    loop {
        let room = max_n - g.n();
        if room == 0 || (g.n() > 1 && rng.gen_bool(0.15)) {
            break;
        }
        let at = rng.gen_range(0..g.n());
        let size = rng.gen_range(1..=room.min(7));
        if size == 1 {
            let x = g.add_vertex();
            g.insert(at, x);
            continue;
        }
        let chords = rng.gen_range(0..=size);
        let block = random_two_connected(rng, size + 1, chords);
        // Block vertex 0 is identified with `at`.
        let base = g.n();
        for _ in 1..block.n() {
            g.add_vertex();
        }
        let map = |v: usize| if v == 0 { at } else { base + v - 1 };
        for (u, v) in block.edges() {
            g.insert(map(u), map(v));
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{block_cut_forest, is_k_connected};
    use rand::SeedableRng;

    #[test]
    fn generators_have_their_shapes() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let n = rng.gen_range(3..14);
            let chords = rng.gen_range(0..5);
            let g = random_two_connected(&mut rng, n, chords);
            assert_eq!(g.n(), n);
            assert!(is_k_connected(&g, 2));
            let t = random_tree(&mut rng, n);
            assert!(t.is_tree());
            let b = block_glued(&mut rng, 40);
            assert!(b.n() <= 40 && b.is_connected());
            let bcf = block_cut_forest(&b);
            assert!(bcf.forest_graph().is_forest());
        }
    }
}
