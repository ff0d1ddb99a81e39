//! Finitely presented groups: parsing, abelianization, homomorphism
//! counts and Todd-Coxeter.

use stacky::algebra::catalog::minimal_panel;
use stacky::fpgroup::{finite_quotient, hom_profile, parse_presentation, todd_coxeter, CosetResult};
use stacky::orbifold::triangle_presentation;

fn main() -> stacky::Result<()> {
    let p = parse_presentation("< a, b | a^2, b^3, (a*b)^5 >").expect("well-formed presentation");
    let (free, torsion) = p.abelianization();
    println!("{} generators; abelianization Z^{free} + {:?}", p.num_generators(), torsion.factors());

    match todd_coxeter(&p, &[], 100_000) {
        CosetResult::Index(n) => println!("order by coset enumeration: {n}"),
        CosetResult::Unknown => println!("coset enumeration did not finish"),
    }
    let index = todd_coxeter(&p, &[vec![1]], 100_000);
    println!("index of <a>: {index:?}");

    let t = triangle_presentation(2, 3, 4);
    let q = finite_quotient(&t)?.expect("the (2,3,4) triangle group is finite");
    println!("(2,3,4) triangle group has order {}", q.group.order());

    for e in hom_profile(&t, &minimal_panel())?.entries {
        println!("  |Hom(G, {})| = {}", e.target, e.count);
    }
    Ok(())
}
