//! Weighted projective 2-groups and spherical Deligne-Mumford curves.

use stacky::algebra::catalog::{abelian, dihedral};
use stacky::algebra::{cyclic, CharacterGroup};
use stacky::wpgl::{
    class_size_dd, classify_spherical_mn, pgl_descriptor, reconstruct, to_pair_k_chi, Pgl2Image,
};

fn main() -> stacky::Result<()> {
    for (m, n) in [(2, 3), (2, 4), (4, 6), (3, 3)] {
        let d = pgl_descriptor(m, n)?;
        println!("PGL({m},{n}): {:?}, pi1 {:?}, pi2 = Z_{}", d.case, d.pi1, d.pi2_order);
    }

    let gamma = cyclic(4);
    let cls = classify_spherical_mn(&gamma, 2, 4)?;
    println!("maps Z4 -> PGL(2,4): {} classes", cls.count);
    let c = &cls.classes[1];
    let pair = to_pair_k_chi(&gamma, cls.d, c)?;
    let r = reconstruct(&pair.k, &pair.mu, &pair.chi, 2, 4)?;
    println!("  class {:?}/{}: K = {}, base {}", c.chi, c.cocycle_class, c.k.name, r.base_descriptor());
    println!("  rho o iota is the power map on mu_12: {}", r.rho_iota_is_power_map(12));

    let d2 = dihedral(2);
    let v4 = abelian(&[2, 2]);
    let chi = (0..4).collect();
    let img = Pgl2Image::new(&v4, &d2, chi)?;
    for d in [1, 2, 3, 4] {
        let rep = class_size_dd(&v4, &img, d)?;
        println!("Z2^2 onto D2 in PGL({d},{d}): |D| = {}", rep.d_order);
    }
    println!("characters of Z2^2: {}", CharacterGroup::new(&v4).order());
    Ok(())
}
