//! Finite quotients witnessing that orbifold fundamental groups are
//! nontrivial: Heisenberg groups and PSL(2,q).

use stacky::orbifold::{heisenberg_witness, psl2_witness};

fn main() -> stacky::Result<()> {
    for n in [2, 3, 5] {
        let w = heisenberg_witness(n)?;
        println!("Heis({n}): order {}, certifies central order {n}: {}", w.group.order(), w.certifies(n));
    }
    for (m, n, p) in [(2, 3, 7), (3, 3, 4), (2, 5, 5)] {
        match psl2_witness(m, n, p, 50)? {
            Some(w) => println!("({m},{n},{p}) realized in PSL(2,{}) with orders {:?}", w.q, w.orders()),
            None => println!("({m},{n},{p}): no witness with q <= 50"),
        }
    }
    Ok(())
}
