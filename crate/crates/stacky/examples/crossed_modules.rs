//! Crossed modules, 2-groups, butterflies and the torsor action.

use stacky::algebra::catalog::{abelian, dihedral};
use stacky::algebra::cyclic;
use stacky::twogroup::{
    butterfly_module, h2, hom_classes_split, roundtrip_check, to_2group, torsor_act, butterflies_isomorphic,
    CrossedModule, GammaModule,
};
use stacky::algebra::FinAbGroup;

fn main() -> stacky::Result<()> {
    let h = h2(&GammaModule::trivial(&abelian(&[2, 2]), &FinAbGroup::cyclic(2)))?;
    println!("H2(Z2^2, Z2) = {:?}", h.group().factors());

    let d4 = dihedral(4);
    let center: Vec<usize> = d4.elements().filter(|&z| d4.elements().all(|x| d4.mul(x, z) == d4.mul(z, x))).collect();
    let x = CrossedModule::normal_inclusion(&d4, &center)?;
    let t = to_2group(&x)?;
    println!("[Z(D4) -> D4]: {} arrows, round trip ok: {}", t.num_arrows(), roundtrip_check(&x)?);

    // [Z2 -> Z2] with zero boundary: pi1 = pi2 = Z2
    let y = CrossedModule::from_fn(cyclic(2), cyclic(2), vec![0, 0], |g, _| g)?;
    let sigma = y.sections()?.remove(0);
    let classes = hom_classes_split(&cyclic(2), &y, &sigma)?;
    for c in &classes {
        println!("  chi {:?}, class {:?}, |E| = {}, exponent {}", c.chi, c.class, c.butterfly.e.order(), c.butterfly.e.exponent());
    }
    let b = &classes[0].butterfly;
    let module = butterfly_module(b, &y, &y.homotopy_groups())?;
    let coh = h2(&module)?;
    let moved = torsor_act(b, &y, &coh.representatives()[1])?;
    println!("twisting the split class lands on class 1: {}", butterflies_isomorphic(&moved, &classes[1].butterfly));
    Ok(())
}
