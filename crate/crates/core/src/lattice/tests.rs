use std::collections::HashSet;

use super::*;
use crate::groups::named::*;
use crate::groups::{direct_product, Permutation};

fn lim() -> Limits {
    Limits::default()
}

fn lattice(g: &FiniteGroup) -> SubgroupLattice {
    all_subgroups(g, &lim()).unwrap()
}

/// Subgroups generated by at most two elements, by brute force.
fn two_generated_subgroups(g: &FiniteGroup) -> HashSet<Vec<usize>> {
    let mut out = HashSet::new();
    for x in 0..g.order() {
        for y in x..g.order() {
            out.insert(g.subgroup_generated(&[x, y]).members().to_vec());
        }
    }
    out
}

fn elementary_abelian(p: usize, d: usize) -> FiniteGroup {
    let mut g = cyclic(p).unwrap();
    for _ in 1..d {
        g = direct_product(&g, &cyclic(p).unwrap(), &lim()).unwrap();
    }
    g
}

#[test]
fn subgroup_counts() {
    assert_eq!(lattice(&cyclic(12).unwrap()).len(), 6);
    assert_eq!(lattice(&trivial()).len(), 1);
    let a5 = lattice(&alternating(5).unwrap());
    assert_eq!(a5.len(), 59);
    assert_eq!(a5.classes().len(), 9);
}

#[test]
fn agrees_with_pair_closures() {
    // every subgroup of these groups is generated by two elements
    for g in [
        cyclic(12).unwrap(),
        symmetric(3).unwrap(),
        dihedral(5).unwrap(),
        alternating(4).unwrap(),
        symmetric(4).unwrap(),
        alternating(5).unwrap(),
    ] {
        let l = lattice(&g);
        let found: HashSet<Vec<usize>> =
            l.subgroups().iter().map(|s| s.members().to_vec()).collect();
        assert_eq!(found.len(), l.len());
        assert_eq!(found, two_generated_subgroups(&g), "{}", g.name());
    }
}

#[test]
fn lattice_shape() {
    let g = symmetric(4).unwrap();
    let l = lattice(&g);
    assert!(l.subgroup(0).is_trivial());
    assert_eq!(l.subgroup(l.whole_index()).order(), 24);
    for (i, s) in l.subgroups().iter().enumerate() {
        assert_eq!(g.subgroup_generated(s.generators()), *s);
        for &c in l.covers(i) {
            assert!(l.contains(c, i));
            assert!(l.subgroup(c).order() > s.order());
        }
    }
    for c in l.classes() {
        let profile = |i: usize| {
            let mut v: Vec<u64> = l.subgroup(i).members().iter().map(|&e| g.element_order(e)).collect();
            v.sort_unstable();
            v
        };
        let p0 = profile(c.representative);
        for &m in &c.members {
            assert_eq!(l.subgroup(m).order(), c.order);
            assert_eq!(profile(m), p0);
        }
    }
    assert_eq!(l.classes().iter().map(|c| c.size()).sum::<usize>(), l.len());
}

#[test]
fn lattice_cap() {
    let limits = Limits {
        lattice_cap: 100,
        ..lim()
    };
    assert!(all_subgroups(&symmetric(5).unwrap(), &limits).is_err());
}

#[test]
fn cyclic_moebius_matches_closed_form() {
    for n in 1..=60usize {
        let g = cyclic(n).unwrap();
        let l = lattice(&g);
        let mu = l.moebius(&lim()).unwrap();
        assert_eq!(l.len(), (1..=n).filter(|d| n % d == 0).count());
        for i in 0..l.len() {
            let m = l.subgroup(i).order() as u64;
            assert_eq!(
                mu.get(i) as i64,
                moebius_cyclic_closed_form(n as u64, m).unwrap(),
                "C{n}, subgroup of order {m}"
            );
        }
    }
}

#[test]
fn c12_values() {
    let l = lattice(&cyclic(12).unwrap());
    let mu = l.moebius(&lim()).unwrap();
    let by_order = |o: usize| mu.get((0..l.len()).find(|&i| l.subgroup(i).order() == o).unwrap());
    assert_eq!(by_order(6), -1);
    assert_eq!(by_order(2), 1);
    assert_eq!(by_order(4), -1);
    assert_eq!(by_order(1), 0);
    assert_eq!(by_order(12), 1);
}

#[test]
fn elementary_abelian_moebius_matches_closed_form() {
    for (p, d) in [(2usize, 2usize), (2, 3), (3, 2)] {
        let g = elementary_abelian(p, d);
        let l = lattice(&g);
        let mu = l.moebius(&lim()).unwrap();
        let total = (p as u64).pow(d as u32);
        for i in 0..l.len() {
            let order = l.subgroup(i).order() as u64;
            let k = (total / order).ilog(p as u64);
            assert_eq!(
                mu.get(i),
                moebius_elementary_abelian_closed_form(p as u64, d as u32, k).unwrap()
            );
        }
        for k in 0..=d as u32 {
            let index = (p as u64).pow(k);
            let count = l
                .subgroups()
                .iter()
                .filter(|s| total / s.order() as u64 == index)
                .count();
            assert_eq!(count as u128, gaussian_binomial(p as u64, d as u32, k).unwrap());
        }
    }
    let v4 = lattice(&klein_four());
    assert_eq!(v4.moebius(&lim()).unwrap().get(0), 2);
}

#[test]
fn moebius_satisfies_recursion_and_is_class_function() {
    for g in [symmetric(4).unwrap(), alternating(5).unwrap(), dihedral(6).unwrap()] {
        let l = lattice(&g);
        let mu = l.moebius(&lim()).unwrap();
        let top = l.whole_index();
        assert_eq!(mu.get(top), 1);
        for h in 0..l.len() {
            let s: i128 = (0..l.len()).filter(|&k| l.contains(k, h)).map(|k| mu.get(k)).sum();
            assert_eq!(s, i128::from(h == top));
        }
        for c in l.classes() {
            assert!(c.members.iter().all(|&m| mu.get(m) == mu.get(c.representative)));
        }
    }
}

#[test]
fn generating_pairs_by_inversion() {
    // sum of mu(H)|H|^2 counts generating pairs; compare with a direct count
    for g in [
        symmetric(3).unwrap(),
        alternating(4).unwrap(),
        dihedral(5).unwrap(),
        symmetric(4).unwrap(),
        alternating(5).unwrap(),
    ] {
        let l = lattice(&g);
        let mu = l.moebius(&lim()).unwrap();
        let by_mu: i128 = (0..l.len())
            .map(|i| mu.get(i) * (l.subgroup(i).order() as i128).pow(2))
            .sum();
        let n = g.order();
        let direct = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| g.generates(&[x, y]))
            .count();
        assert_eq!(by_mu, direct as i128, "{}", g.name());
    }
}

#[test]
fn hall_support_property() {
    for g in [symmetric(4).unwrap(), alternating(5).unwrap(), cyclic(12).unwrap(), dihedral(4).unwrap()] {
        let l = lattice(&g);
        let mu = l.moebius(&lim()).unwrap();
        let phi = frattini(&l);
        for h in 0..l.len() {
            if mu.get(h) != 0 {
                assert_eq!(l.maximal_closure(h), h);
                assert!(phi.is_subgroup_of(l.subgroup(h)));
            }
        }
    }
}

#[test]
fn frattini_subgroups() {
    assert_eq!(frattini(&lattice(&cyclic(12).unwrap())).order(), 2);
    assert!(frattini(&lattice(&alternating(5).unwrap())).is_trivial());
    assert!(frattini(&lattice(&trivial())).is_trivial());
    assert_eq!(frattini(&lattice(&dihedral(4).unwrap())).order(), 2);
}

#[test]
fn corefree_classes() {
    let a5 = alternating(5).unwrap();
    assert_eq!(corefree_class_count(&a5, &lattice(&a5)), 8);
    let c6 = cyclic(6).unwrap();
    assert_eq!(corefree_class_count(&c6, &lattice(&c6)), 1);
    let t = trivial();
    assert_eq!(corefree_class_count(&t, &lattice(&t)), 1);
}

fn restrict(p: &Permutation, from: usize, to: usize) -> Permutation {
    Permutation::from_images((from..to).map(|i| p.image(i) - from).collect()).unwrap()
}

#[test]
fn coprime_products_factor() {
    let pairs = [
        (symmetric(3).unwrap(), cyclic(5).unwrap()),
        (cyclic(4).unwrap(), cyclic(3).unwrap()),
    ];
    for (g1, g2) in pairs {
        let g = direct_product(&g1, &g2, &lim()).unwrap();
        let (l, l1, l2) = (lattice(&g), lattice(&g1), lattice(&g2));
        let (mu, mu1, mu2) = (
            l.moebius(&lim()).unwrap(),
            l1.moebius(&lim()).unwrap(),
            l2.moebius(&lim()).unwrap(),
        );
        assert_eq!(l.len(), l1.len() * l2.len());
        let (d1, d) = (g1.degree(), g.degree());
        for i in 0..l.len() {
            let h = l.subgroup(i);
            let project = |grp: &FiniteGroup, a: usize, b: usize| {
                let idx: Vec<usize> = h
                    .members()
                    .iter()
                    .map(|&e| grp.index_of(&restrict(g.element(e), a, b)).unwrap())
                    .collect();
                grp.subgroup_generated(&idx)
            };
            let h1 = project(&g1, 0, d1);
            let h2 = project(&g2, d1, d);
            assert_eq!(h.order(), h1.order() * h2.order());
            let (i1, i2) = (l1.index_of(&h1).unwrap(), l2.index_of(&h2).unwrap());
            assert_eq!(mu.get(i), mu1.get(i1) * mu2.get(i2));
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let g = symmetric(5).unwrap();
    let a = all_subgroups(&g, &lim()).unwrap();
    let b = all_subgroups(&g, &Limits::sequential()).unwrap();
    assert_eq!(a.subgroups(), b.subgroups());
    assert_eq!(a.classes(), b.classes());
    assert_eq!(a.moebius(&lim()).unwrap(), b.moebius(&Limits::sequential()).unwrap());
    assert_eq!(a.len(), 156);
    assert_eq!(a.classes().len(), 19);
}
