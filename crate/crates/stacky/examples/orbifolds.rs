//! Orbifold curves: Euler weights, uniformization, triangle groups,
//! footballs and graphs of groups.

use stacky::algebra::cyclic;
use stacky::fpgroup::hom_profile;
use stacky::algebra::catalog::minimal_panel;
use stacky::orbifold::{football, graph_of_groups_pi1, triangle_group, DMCurve, OrbifoldCurve};

fn main() -> stacky::Result<()> {
    for orders in [vec![2, 3, 5], vec![2, 4, 4], vec![2, 3, 7], vec![4, 6]] {
        let c = OrbifoldCurve::compact(0, orders)?;
        println!("{c}: weight {} -> {}", c.euler_weight(), c.uniformization());
    }
    let open = OrbifoldCurve::new(0, vec![2, 2], 1)?;
    println!("{open}: {}", open.uniformization());

    for (p, q, r) in [(2, 2, 7), (2, 3, 5), (3, 3, 3), (2, 3, 7)] {
        println!("triangle ({p},{q},{r}): {}", triangle_group(p, q, r)?);
    }

    let f = football(4, 6)?;
    println!("football (4,6): pi1 = Z_{}, universal cover P{:?}", f.pi1.order(), f.cover);

    let base = OrbifoldCurve::new(1, vec![2], 1)?;
    let gerbe = DMCurve::trivial_gerbe(base.clone(), cyclic(2));
    let pres = graph_of_groups_pi1(&gerbe)?;
    println!("Z2-gerbe over {base}: {} generators, {} relators", pres.num_generators(), pres.relators().len());
    let counts: Vec<u64> = hom_profile(&pres, &minimal_panel()[..4])?.entries.iter().map(|e| e.count).collect();
    println!("  hom counts into Z2, Z3, Z4, Z2^2: {counts:?}");
    Ok(())
}
