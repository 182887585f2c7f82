use std::collections::BTreeMap;
use std::time::Instant;

use diagforge::families::{generate_points, instantiate, list_families, ProjPoint};

#[test]
fn every_family_generates_exact_points() {
    for spec in list_families() {
        let t = Instant::now();
        let inst =
            instantiate(spec.id, &BTreeMap::new()).unwrap_or_else(|e| panic!("{}: {e}", spec.id));
        let gen = generate_points(&inst, &[1, 2, 3, 4, 5]);
        let mut digits = vec![];
        for g in &gen {
            let p: &ProjPoint = g
                .point
                .as_ref()
                .unwrap_or_else(|e| panic!("{} m={}: {e}", spec.id, g.m));
            assert!(inst.surface.eval_int(p) == num_traits::Zero::zero());
            assert!(!p.is_trivial());
            digits.push(p.digits());
        }
        println!(
            "{} order={:?} digits={digits:?} {:?}",
            spec.id,
            inst.seed_order,
            t.elapsed()
        );
    }
}
