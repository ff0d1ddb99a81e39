//! Finite groups: the catalog, centers, automorphisms and characters.

use stacky::algebra::catalog::{describe, dihedral, quaternion, small_groups};
use stacky::algebra::{abelianization, automorphisms, center, is_isomorphic, quotient, CharacterGroup};

fn main() -> stacky::Result<()> {
    println!("catalog: {} groups of order at most 24", small_groups().len());

    let q8 = quaternion();
    let z = center(&q8);
    println!("Z(Q8) = {:?}, Q8^ab = {:?}", z.group.factors(), abelianization(&q8).factors());

    let d4 = dihedral(4);
    let aut = automorphisms(&d4)?;
    println!("|Aut(D4)| = {}, |Inn(D4)| = {}", aut.order(), aut.inner().len());
    println!("Aut(D4) orbits on Z(D4): {:?}", aut.center_orbits());

    let (q, _) = quotient(&q8, &z.basis);
    println!("Q8 / Z(Q8) is {}", describe(&q).name);
    println!("Q8 ~ D4? {}", is_isomorphic(&q8, &d4)?.is_some());

    let chars = CharacterGroup::new(&d4);
    println!("D4 has {} characters; images of the 2nd power map: {}", chars.order(), chars.power_image(2).len());
    Ok(())
}
