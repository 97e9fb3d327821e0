//! Seeded random configurations: property-test fodder and verify-suite
//! inputs. Everything here is deterministic in the seed and valid by
//! construction.

use rand::prelude::*;
use rand::rngs::StdRng;

use crate::config::{BrauerConfiguration, ConfigBuilder};

struct Growth {
    polygons: Vec<(String, Vec<String>)>,
    vertex_germs: Vec<(String, Vec<(String, usize)>)>,
    fresh: usize,
}

impl Growth {
    fn new() -> Self {
        Growth { polygons: Vec::new(), vertex_germs: Vec::new(), fresh: 0 }
    }

    fn fresh_vertex(&mut self) -> String {
        self.fresh += 1;
        format!("n{}", self.fresh)
    }

    fn vertices(&self) -> Vec<String> {
        self.vertex_germs.iter().map(|(v, _)| v.clone()).collect()
    }

    fn add_polygon(&mut self, id: &str, corners: Vec<String>) {
        for (slot, v) in corners.iter().enumerate() {
            match self.vertex_germs.iter_mut().find(|(w, _)| w == v) {
                Some((_, germs)) => germs.push((id.to_string(), slot)),
                None => self
                    .vertex_germs
                    .push((v.clone(), vec![(id.to_string(), slot)])),
            }
        }
        self.polygons.push((id.to_string(), corners));
    }

    fn valency(&self, v: &str) -> usize {
        self.vertex_germs
            .iter()
            .find(|(w, _)| w == v)
            .map(|(_, g)| g.len())
            .unwrap_or(0)
    }

    fn build(mut self, rng: &mut StdRng, multiplicity: impl Fn(&mut StdRng) -> u32) -> BrauerConfiguration {
        let mut b = ConfigBuilder::new();
        for (v, _) in &self.vertex_germs {
            b = b.vertex(v, multiplicity(rng));
        }
        for (id, corners) in &self.polygons {
            b = b.polygon_owned(id, corners);
        }
        for (v, germs) in &mut self.vertex_germs {
            germs.shuffle(rng);
            b = b.ordering_owned(v, germs);
        }
        b.build().expect("generated configuration is valid by construction")
    }
}

/// Connected Brauer multigraph: 2-gons only (loops and parallel edges
/// allowed), multiplicities sampled from 1..=3.
pub fn random_brauer_multigraph(seed: u64, max_edges: usize) -> BrauerConfiguration {
    let mut rng = StdRng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(1));
    let mut g = Growth::new();
    let n = rng.gen_range(1..=max_edges.max(1));
    g.add_polygon("e1", vec!["v1".into(), "v2".into()]);
    for i in 2..=n {
        let pool = g.vertices();
        let a = pool.choose(&mut rng).unwrap().clone();
        let b = if rng.gen_bool(0.5) {
            pool.choose(&mut rng).unwrap().clone()
        } else {
            g.fresh_vertex()
        };
        g.add_polygon(&format!("e{i}"), vec![a, b]);
    }
    g.build(&mut rng, |rng| rng.gen_range(1..=3))
}

/// Connected multiplicity-free configuration with at most one larger
/// polygon (3- or 4-gon); pendant edges are added wherever that polygon
/// would otherwise sit at a truncated vertex.
pub fn random_multfree_config(seed: u64, max_polygons: usize) -> BrauerConfiguration {
    let mut rng = StdRng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(2));
    let mut g = Growth::new();
    let budget = max_polygons.max(2);
    let core = rng.gen_range(2..=budget.saturating_sub(4).max(2));
    let big_at = rng.gen_bool(0.4).then(|| rng.gen_range(1..core));
    g.add_polygon("p1", vec!["v1".into(), "v2".into()]);
    for i in 1..core {
        let size = if big_at == Some(i) { rng.gen_range(3..=4) } else { 2 };
        let pool = g.vertices();
        let mut corners = vec![pool.choose(&mut rng).unwrap().clone()];
        for _ in 1..size {
            if rng.gen_bool(0.4) {
                corners.push(pool.choose(&mut rng).unwrap().clone());
            } else {
                corners.push(g.fresh_vertex());
            }
        }
        g.add_polygon(&format!("p{}", i + 1), corners);
    }
    // a larger polygon must not sit at a valency-one vertex
    let lonely: Vec<String> = g
        .polygons
        .iter()
        .filter(|(_, cs)| cs.len() > 2)
        .flat_map(|(_, cs)| cs.clone())
        .filter(|v| g.valency(v) == 1)
        .collect();
    for (k, v) in lonely.into_iter().enumerate() {
        let w = g.fresh_vertex();
        g.add_polygon(&format!("r{}", k + 1), vec![v, w]);
    }
    g.build(&mut rng, |_| 1)
}

/// Multiplicity-free tree with exactly one 3-gon: the triangle, one pendant
/// edge per corner, then random further pendant edges up to the cap.
pub fn random_one_triangle_tree(seed: u64, max_polygons: usize) -> BrauerConfiguration {
    let mut rng = StdRng::seed_from_u64(seed.wrapping_mul(0x9e37_79b9).wrapping_add(3));
    let mut g = Growth::new();
    g.add_polygon("t", vec!["c1".into(), "c2".into(), "c3".into()]);
    for i in 1..=3 {
        let w = g.fresh_vertex();
        g.add_polygon(&format!("e{i}"), vec![format!("c{i}"), w]);
    }
    let extra = rng.gen_range(0..=max_polygons.max(4) - 4);
    for i in 1..=extra {
        let pool = g.vertices();
        let v = pool.choose(&mut rng).unwrap().clone();
        let w = g.fresh_vertex();
        g.add_polygon(&format!("e{}", i + 3), vec![v, w]);
    }
    g.build(&mut rng, |_| 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, TameCase, Verdict};
    use crate::format::serialize;

    #[test]
    fn generators_are_deterministic() {
        for seed in [0u64, 7, 123] {
            assert_eq!(
                serialize(&random_brauer_multigraph(seed, 8)),
                serialize(&random_brauer_multigraph(seed, 8))
            );
            assert_eq!(
                serialize(&random_multfree_config(seed, 8)),
                serialize(&random_multfree_config(seed, 8))
            );
            assert_eq!(
                serialize(&random_one_triangle_tree(seed, 10)),
                serialize(&random_one_triangle_tree(seed, 10))
            );
        }
    }

    #[test]
    fn multigraphs_are_tame_graph_algebras() {
        for seed in 0..25u64 {
            let cfg = random_brauer_multigraph(seed, 8);
            assert!(cfg.polygons().iter().all(|p| p.size() == 2));
            assert!(matches!(
                classify(&cfg).unwrap(),
                Verdict::Tame(TameCase::BrauerGraph)
            ));
        }
    }

    #[test]
    fn multfree_configs_stay_in_budget() {
        for seed in 0..25u64 {
            let cfg = random_multfree_config(seed, 8);
            let a = cfg.analyze();
            assert!(a.is_multiplicity_free);
            assert!(cfg.polygons().len() <= 8, "seed {seed} overflowed");
        }
    }

    #[test]
    fn triangle_trees_fit_the_reduction_shape() {
        for seed in 0..25u64 {
            let cfg = random_one_triangle_tree(seed, 10);
            let a = cfg.analyze();
            assert!(a.is_multiplicity_free);
            assert!(a.is_tree);
            assert_eq!(a.max_polygon_size, 3);
            assert_eq!(
                cfg.polygons().iter().filter(|p| p.size() == 3).count(),
                1
            );
            assert!(cfg.polygons().len() <= 10);
        }
    }
}
