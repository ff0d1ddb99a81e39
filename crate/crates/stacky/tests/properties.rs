//! Invariants as properties over random small inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use stacky::algebra::catalog::small_groups;
use stacky::algebra::{abelianization, cyclic, smith_normal_form, CharacterGroup, FinAbGroup, IntMatrix};
use stacky::fpgroup::{free_reduce, invert};
use stacky::gerbe::{mayer_vietoris_check, rs_pair};
use stacky::orbifold::{football, OrbifoldCurve, Uniformization};
use stacky::twogroup::{coboundary, h2, is_cocycle, GammaModule};
use stacky::wpgl::{pgl_descriptor, PglCase};

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4, 1usize..4).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-12i64..12, c), r))
}

fn identity_of(n: usize) -> IntMatrix {
    IntMatrix::identity(n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_normal_form_is_a_unimodular_diagonalization(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert_eq!(s.u.mul(&s.u_inv), identity_of(m.rows()));
        prop_assert_eq!(s.v.mul(&s.v_inv), identity_of(m.cols()));
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if i != j {
                    prop_assert!(s.d.get(i, j).is_zero());
                }
            }
        }
        let diag = s.diagonal();
        prop_assert!(diag.iter().all(|x| !x.is_negative()));
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && w[1].is_multiple_of(&w[0])));
        }
        // the first invariant factor is the gcd of all entries
        let g = rows.iter().flatten().fold(BigInt::zero(), |acc, &x| acc.gcd(&BigInt::from(x)));
        prop_assert_eq!(diag[0].clone(), g);
    }

    #[test]
    fn compact_uniformization_follows_the_euler_weight(genus in 0u32..3, orders in prop::collection::vec(2u64..9, 0..5)) {
        let c = OrbifoldCurve::compact(genus, orders).unwrap();
        let w = c.euler_weight();
        let zero = num_rational::Ratio::from_integer(0);
        match c.uniformization() {
            Uniformization::Hyperbolic => prop_assert!(w > zero),
            Uniformization::Euclidean => prop_assert!(w == zero),
            Uniformization::Spherical { .. } => prop_assert!(w < zero),
        }
    }

    #[test]
    fn football_group_is_cyclic_of_gcd_order(m in 1u64..40, n in 1u64..40) {
        let f = football(m, n).unwrap();
        prop_assert_eq!(f.pi1.order(), m.gcd(&n));
        let d = m.gcd(&n);
        prop_assert_eq!(f.cover, (m / d, n / d));
    }

    #[test]
    fn free_reduction_is_idempotent_and_inverses_cancel(w in prop::collection::vec(prop_oneof![-3i32..=-1, 1i32..=3], 0..20)) {
        let r = free_reduce(&w);
        prop_assert_eq!(free_reduce(&r), r.clone());
        prop_assert!(r.windows(2).all(|p| p[0] != -p[1]));
        let mut both = w.clone();
        both.extend(invert(&w));
        prop_assert!(free_reduce(&both).is_empty());
    }

    #[test]
    fn rs_pair_solves_the_bezout_identity(a in 1u64..30, b in 1u64..30) {
        prop_assume!(a.gcd(&b) == 1);
        let (r, s) = rs_pair(a, b).unwrap();
        prop_assert_eq!(s * a as i64 + r * b as i64, 1);
    }

    #[test]
    fn pgl_case_tags_match_divisibility(m in 1u64..30, n in 1u64..30) {
        let p = pgl_descriptor(m, n).unwrap();
        let d = m.gcd(&n);
        prop_assert_eq!(p.d, d);
        prop_assert_eq!(p.pi2_order, d);
        let expected = if m == n { PglCase::Equal } else if m % n == 0 || n % m == 0 { PglCase::Dividing } else { PglCase::NonDividing };
        prop_assert_eq!(p.case, expected);
        prop_assert_eq!(p.s * m as i64 + p.r * n as i64, d as i64);
    }

    #[test]
    fn characters_are_counted_by_the_abelianization(i in 0usize..74) {
        let g = &small_groups()[i % small_groups().len()];
        let chars = CharacterGroup::new(g);
        prop_assert_eq!(chars.order(), abelianization(g).order());
        let all = chars.all();
        prop_assert_eq!(all.len() as u64, chars.order());
        for c in all.iter().take(4) {
            prop_assert_eq!(g.order() % c.image_order() as usize, 0);
            prop_assert_eq!(c.kernel().len() * c.image_order() as usize, g.order());
        }
    }

    #[test]
    fn mayer_vietoris_is_exact(orders in prop::collection::vec(2u64..7, 1..3), m in 1u64..8, n in 1u64..8) {
        prop_assume!(m.gcd(&n) == 1);
        let a = FinAbGroup::from_cyclic_orders(&orders);
        prop_assert!(mayer_vietoris_check(&a, m, n).unwrap());
    }

    #[test]
    fn coboundaries_vanish_and_shift_nothing(n in 1usize..6, m in 1u64..6, seed in prop::collection::vec(0u64..6, 6)) {
        let module = GammaModule::trivial(&cyclic(n), &FinAbGroup::cyclic(m));
        let coh = h2(&module).unwrap();
        let a = module.module().clone();
        let elements = a.elements();
        let f: Vec<_> = (0..n).map(|g| if g == 0 { a.zero() } else { elements[seed[g % 6] as usize % elements.len()].clone() }).collect();
        let b = coboundary(&module, &f);
        prop_assert!(is_cocycle(&module, &b));
        prop_assert!(coh.class_of(&b).unwrap().iter().all(|&x| x == 0));
        for (i, rep) in coh.representatives().iter().enumerate() {
            let moved = rep.add(&module, &b);
            prop_assert_eq!(coh.group().index_of(&coh.class_of(&moved).unwrap()), i);
        }
    }
}

#[test]
fn crossed_module_homotopy_groups_have_complementary_orders() {
    use stacky::algebra::homomorphisms;
    use stacky::twogroup::CrossedModule;
    for g in small_groups().iter().filter(|g| g.order() <= 12) {
        for a in small_groups().iter().filter(|a| a.is_abelian() && a.order() <= 6) {
            for phi in homomorphisms(a, g).unwrap() {
                // central images with trivial action give a crossed module
                let central = phi.iter().all(|&y| g.elements().all(|x| g.mul(x, y) == g.mul(y, x)));
                if !central {
                    continue;
                }
                let x = CrossedModule::from_fn(a.clone(), g.clone(), phi.clone(), |e, _| e).unwrap();
                let hg = x.homotopy_groups();
                let mut image = phi.clone();
                image.sort_unstable();
                image.dedup();
                assert_eq!(hg.pi1.order() * image.len(), g.order());
                assert_eq!(hg.pi2.group.order() as usize * image.len(), a.order());
            }
        }
    }
}
