use std::collections::HashSet;

use proptest::prelude::*;

use super::named::*;
use super::*;
use crate::limits::Limits;

fn perm(degree: usize, cycles: &[&[usize]]) -> Permutation {
    let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
    Permutation::from_cycles(degree, &cycles).unwrap()
}

fn group(degree: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
    let gens = gens.iter().map(|g| perm(degree, g)).collect();
    FiniteGroup::generate("G", degree, gens, &Limits::default()).unwrap()
}

fn a5() -> FiniteGroup {
    group(5, &[&[&[0, 1, 2, 3, 4]], &[&[0, 1, 2]]])
}

#[test]
fn closure_orders() {
    assert_eq!(a5().order(), 60);
    assert_eq!(group(4, &[&[&[0, 1]], &[&[0, 1, 2, 3]]]).order(), 24);
    let trivial = FiniteGroup::generate("1", 3, vec![Permutation::identity(3)], &Limits::default())
        .unwrap();
    assert_eq!(trivial.order(), 1);
}

#[test]
fn closure_cap_reports_partial_count() {
    let limits = Limits {
        closure_cap: 10,
        ..Limits::default()
    };
    let err = FiniteGroup::generate("A5", 5, a5().generators().to_vec(), &limits).unwrap_err();
    match err {
        crate::Error::SizeLimit { reached, limit, .. } => {
            assert_eq!(limit, 10);
            assert_eq!(reached, 10);
        }
        e => panic!("unexpected {e}"),
    }
}

#[test]
fn element_orders() {
    let g = a5();
    assert_eq!(g.element_order(g.identity()), 1);
    let five = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
    assert_eq!(g.element_order(five), 5);
    let dbl = g.index_of(&perm(5, &[&[0, 1], &[2, 3]])).unwrap();
    assert_eq!(g.element_order(dbl), 2);
}

#[test]
fn counts_by_order() {
    let g = a5();
    // direct count over the 60 permutations
    let direct = g.elements().iter().filter(|p| p.order() == 2).count();
    assert_eq!(direct, 15);
    assert_eq!(g.count_elements_of_order(Period::Finite(2)), 15);
    assert_eq!(g.count_elements_of_order(Period::Infinite), 60);
    assert_eq!(g.count_elements_of_order(Period::Finite(1)), 1);
    let total: usize = (1..=g.exponent())
        .filter(|m| g.exponent().is_multiple_of(*m))
        .map(|m| g.count_elements_of_order(Period::Finite(m)))
        .sum();
    assert_eq!(total, 60);
}

#[test]
fn class_partitions() {
    let sizes = |g: &FiniteGroup| -> Vec<usize> {
        g.conjugacy_classes().iter().map(|c| c.size()).collect()
    };
    assert_eq!(sizes(&a5()), vec![1, 15, 20, 12, 12]);
    assert_eq!(sizes(&cyclic(6).unwrap()), vec![1; 6]);
    assert_eq!(sizes(&symmetric(3).unwrap()), vec![1, 3, 2]);
}

#[test]
fn generated_subgroups() {
    let g = a5();
    assert!(g.subgroup_generated(&[]).is_trivial());
    let five = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
    let three = g.index_of(&perm(5, &[&[0, 1, 2]])).unwrap();
    assert_eq!(g.subgroup_generated(&[five]).order(), 5);
    assert_eq!(g.subgroup_generated(&[five, three]).order(), 60);
}

#[test]
fn cores() {
    let g = a5();
    let five = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
    let three = g.index_of(&perm(5, &[&[0, 1, 2]])).unwrap();
    for h in [g.subgroup_generated(&[five]), g.subgroup_generated(&[three])] {
        assert!(g.core(&h).is_trivial());
    }
    // D4 on the square 0-1-2-3: rotations are normal, a diagonal reflection is not.
    let d4 = group(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]]);
    let rot = d4.subgroup_generated(&[d4.index_of(&perm(4, &[&[0, 1, 2, 3]])).unwrap()]);
    assert_eq!(d4.core(&rot), rot);
    let refl = d4.subgroup_generated(&[d4.index_of(&perm(4, &[&[0, 1], &[2, 3]])).unwrap()]);
    assert!(d4.core(&refl).is_trivial());
}

#[test]
fn automorphism_orders() {
    assert_eq!(a5().automorphisms(&Limits::default()).unwrap().len(), 120);
    assert_eq!(cyclic(6).unwrap().automorphisms(&Limits::default()).unwrap().len(), 2);
    assert_eq!(trivial().automorphisms(&Limits::default()).unwrap().len(), 1);
}

#[test]
fn automorphisms_of_a5_are_conjugations_by_s5() {
    let g = a5();
    let s5 = symmetric(5).unwrap();
    let mut from_s5: HashSet<Vec<u32>> = HashSet::new();
    for s in s5.elements() {
        let table = g
            .elements()
            .iter()
            .map(|x| g.index_of(&s.inverse().then(x).then(s)).unwrap() as u32)
            .collect();
        from_s5.insert(table);
    }
    let found: HashSet<Vec<u32>> = g
        .automorphisms(&Limits::default())
        .unwrap()
        .iter()
        .map(|a| a.image_table().to_vec())
        .collect();
    assert_eq!(from_s5.len(), 120);
    assert_eq!(found, from_s5);
}

#[test]
fn automorphism_cap() {
    let limits = Limits {
        automorphism_cap: 50,
        ..Limits::default()
    };
    assert!(a5().automorphisms(&limits).is_err());
}

#[test]
fn direct_products() {
    let l = Limits::default();
    let p = direct_product(&a5(), &cyclic(2).unwrap(), &l).unwrap();
    assert_eq!(p.order(), 120);
    let c6 = direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap(), &l).unwrap();
    assert_eq!(c6.order(), 6);
    assert!((0..6).any(|e| c6.element_order(e) == 6));
    let copy = direct_product(&a5(), &trivial(), &l).unwrap();
    assert_eq!(copy.order(), 60);
    assert_eq!(copy.conjugacy_classes().len(), 5);
}

#[test]
fn square_classes() {
    let s3 = symmetric(3).unwrap();
    let sq = s3.square_class_map();
    assert_eq!(sq[0], 0);
    assert_eq!(sq[1], 0); // transpositions
    let g = a5();
    let sq = g.square_class_map();
    // (0 1 2 3 4)^2 = (0 2 4 1 3) lies in the other class of 5-cycles
    let c = g.index_of(&perm(5, &[&[0, 1, 2, 3, 4]])).unwrap();
    let c2 = g.index_of(&perm(5, &[&[0, 2, 4, 1, 3]])).unwrap();
    assert_eq!(g.mul(c, c), c2);
    assert_ne!(g.class_of(c), g.class_of(c2));
    assert_eq!(sq[g.class_of(c)], g.class_of(c2));
}

#[test]
fn centre_and_simplicity() {
    assert!(a5().centre().is_trivial());
    assert!(a5().is_nonabelian_simple());
    assert!(!symmetric(4).unwrap().is_nonabelian_simple());
    assert!(!cyclic(5).unwrap().is_nonabelian_simple());
    assert_eq!(dihedral(4).unwrap().centre().order(), 2);
    assert!(psl2(7).unwrap().is_nonabelian_simple());
    assert_eq!(psl2(13).unwrap().order(), 1092);
}

#[test]
fn multiplication_table_matches_composition() {
    let g = psl2(7).unwrap();
    for a in (0..g.order()).step_by(7) {
        for b in (0..g.order()).step_by(5) {
            let direct = g.index_of(&g.element(a).then(g.element(b))).unwrap();
            assert_eq!(g.mul(a, b), direct);
        }
    }
}

fn small_groups() -> Vec<FiniteGroup> {
    vec![
        trivial(),
        cyclic(12).unwrap(),
        symmetric(3).unwrap(),
        klein_four(),
        dihedral(5).unwrap(),
        alternating(4).unwrap(),
        symmetric(4).unwrap(),
        a5(),
    ]
}

#[test]
fn class_equation_holds() {
    for g in small_groups() {
        let classes = g.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.size()).sum::<usize>(), g.order());
        for c in classes {
            assert_eq!(g.order() % c.size(), 0);
            assert!(c.members.iter().all(|&m| g.element_order(m) == c.element_order));
        }
    }
}

#[test]
fn automorphisms_form_a_group() {
    let l = Limits::default();
    for g in small_groups() {
        let auts = g.automorphisms(&l).unwrap();
        let set: HashSet<&Automorphism> = auts.iter().collect();
        for a in auts {
            assert_eq!(a.apply(0), 0);
            assert!(set.contains(&a.inverse()));
            for b in auts.iter().take(6) {
                assert!(set.contains(&a.then(b)));
            }
        }
    }
}

#[test]
fn product_class_counts_multiply() {
    let l = Limits::default();
    let pairs = [(symmetric(3).unwrap(), cyclic(4).unwrap()), (a5(), cyclic(2).unwrap())];
    for (a, b) in pairs {
        let p = direct_product(&a, &b, &l).unwrap();
        assert_eq!(p.order(), a.order() * b.order());
        assert_eq!(
            p.conjugacy_classes().len(),
            a.conjugacy_classes().len() * b.conjugacy_classes().len()
        );
    }
}

proptest! {
    #[test]
    fn cores_are_normal_and_contained(seed in 0usize..60, other in 0usize..60) {
        let g = symmetric(4).unwrap();
        let h = g.subgroup_generated(&[seed % 24, other % 24]);
        let core = g.core(&h);
        prop_assert!(g.is_normal(&core));
        prop_assert!(core.is_subgroup_of(&h));
        if g.is_normal(&h) {
            prop_assert_eq!(core, h);
        }
    }

    #[test]
    fn pow_agrees_with_repeated_product(e in 0usize..60, k in -12i64..12) {
        let g = a5();
        let mut acc = g.identity();
        let step = if k < 0 { g.inv(e) } else { e };
        for _ in 0..k.unsigned_abs() {
            acc = g.mul(acc, step);
        }
        prop_assert_eq!(g.pow(e, k), acc);
    }
}
