//! Gerbes over stacky discs and weighted projective lines.

use stacky::algebra::catalog::{dihedral, quaternion};
use stacky::algebra::{cyclic, FinAbGroup};
use stacky::gerbe::{
    classify_over_p, dinfty_extension, dn_trivial_band_classes, gamma_construct, gerbe_group, mayer_vietoris_check,
    recover_class, PGerbeClass,
};

fn main() -> stacky::Result<()> {
    let z4 = cyclic(4);
    let classes = dn_trivial_band_classes(&z4, 2)?;
    println!("Z4-gerbes over a disc with a Z2 point: {:?}", classes.iter().map(|c| c.a).collect::<Vec<_>>());
    for c in &classes {
        let ext = gerbe_group(&z4, 2, c.a)?;
        println!("  a={} local group of order {}, recovered class {}", c.a, ext.group.order(), recover_class(&z4, &ext, 2)?);
    }

    let d4 = dihedral(4);
    let identity: Vec<usize> = d4.elements().collect();
    let ext = dinfty_extension(&d4, &identity, 3)?;
    println!("trivial D4 band over D_3: extends {} in {} ways", ext.extends, ext.count);

    let q8 = quaternion();
    let orbits = classify_over_p(&q8, 2, 3)?;
    for orbit in &orbits {
        println!("Q8-gerbe over P(2,3), a={} orbit {:?}: pi1 = {}", orbit.a, orbit.orbit, orbit.pi1.name);
    }
    let central = orbits.last().expect("the identity is central").a;
    let cls = PGerbeClass::new(&q8, 2, 3, central)?;
    let g = gamma_construct(&cls)?;
    println!("pushout order {}, certified isomorphic to H/<a>: {}", g.pushout.order(), g.certificate.is_some());

    let a = FinAbGroup::from_cyclic_orders(&[2, 4]);
    println!("Mayer-Vietoris for Z2+Z4 at (3,5): {}", mayer_vietoris_check(&a, 3, 5)?);
    Ok(())
}
