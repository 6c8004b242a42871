use num_bigint::BigUint;

use super::*;
use crate::groups::named::*;
use crate::io::{data_dir, load_named};

fn lim() -> Limits {
    Limits::default()
}

fn ctx_of(g: FiniteGroup) -> Context {
    Context::new(g, None, lim())
}

fn shipped(name: &str) -> Context {
    let (g, t) = load_named(&data_dir(), name, &lim()).unwrap();
    Context::new(g, t, lim())
}

/// Ordered generating `k`-tuples by direct search.
fn generating_tuples(g: &FiniteGroup, k: usize, keep: impl Fn(&[usize]) -> bool) -> usize {
    let n = g.order();
    let mut t = vec![0usize; k];
    let mut count = 0;
    loop {
        if keep(&t) && g.generates(&t) {
            count += 1;
        }
        let mut i = 0;
        while i < k {
            t[i] += 1;
            if t[i] < n {
                break;
            }
            t[i] = 0;
            i += 1;
        }
        if i == k {
            return count;
        }
    }
}

#[test]
fn a5_oriented_hypermaps() {
    let ctx = shipped("A5");
    let h = Parent::oriented_hypermaps();
    let brute = generating_tuples(&ctx.group, 2, |_| true);
    assert_eq!(brute, 2280);
    assert_eq!(epi_count(&ctx, &h.presentation, Method::Auto).unwrap(), BigUint::from(2280u32));
    assert_eq!(r_count(&ctx, &h.presentation, Method::Auto).unwrap(), BigUint::from(19u32));
    assert_eq!(r_count(&ctx, &h.presentation, Method::Oracle).unwrap(), BigUint::from(19u32));
    assert_eq!(ctx.corefree_class_count().unwrap(), 8);
    assert_eq!(m_count(&ctx, &h.presentation, Method::Auto).unwrap(), BigUint::from(152u32));
    let set = enumerate_regular_objects(&ctx, &h, true).unwrap();
    assert_eq!(set.r(), 19);
    assert_eq!(set.aut_order, 120);
    assert_eq!(set.epi_count, BigUint::from(2280u32));
}

#[test]
fn a5_oriented_maps_match_direct_search() {
    let ctx = shipped("A5");
    let g = &ctx.group;
    let parent = Parent::oriented_maps(None);
    let brute = generating_tuples(g, 2, |t| g.element_order(t[1]) <= 2);
    let r = r_count(&ctx, &parent.presentation, Method::Auto).unwrap();
    assert_eq!(r, BigUint::from(brute / 120));
    let set = enumerate_regular_objects(&ctx, &parent, true).unwrap();
    assert_eq!(set.r() * 120, brute);
}

#[test]
fn cyclic_generating_pairs() {
    // Ordered generating pairs of C_n number J_2(n) = n² Π (1 - 1/p²).
    for n in [1usize, 2, 6, 12, 30] {
        let mut j2 = (n * n) as u64;
        for p in crate::cyclotomic::prime_factors(n as u64) {
            j2 = j2 / (p * p) * (p * p - 1);
        }
        let phi = crate::cyclotomic::euler_phi(n as u64);
        let ctx = ctx_of(cyclic(n).unwrap());
        let h = Parent::oriented_hypermaps();
        assert_eq!(epi_count(&ctx, &h.presentation, Method::Auto).unwrap(), BigUint::from(j2), "n = {n}");
        let set = enumerate_regular_objects(&ctx, &h, true).unwrap();
        assert_eq!(set.r() as u64, j2 / phi, "n = {n}");
    }
}

#[test]
fn trivial_group_has_one_object_for_every_parent() {
    let ctx = ctx_of(trivial());
    for spec in ["H+", "M+", "M", "H", "free:3", "triangle:2,3,7", "surface:2", "nonorientable:3"] {
        let parent = Parent::parse(spec).unwrap();
        assert_eq!(r_count(&ctx, &parent.presentation, Method::Auto).unwrap(), BigUint::from(1u32), "{spec}");
        assert_eq!(enumerate_regular_objects(&ctx, &parent, true).unwrap().r(), 1, "{spec}");
    }
}

#[test]
fn hom_counts_split_over_images() {
    // Every homomorphism is an epimorphism onto its image.
    let parent = Parent::parse("free:2").unwrap();
    for g in [cyclic(12).unwrap(), symmetric(3).unwrap(), alternating(4).unwrap()] {
        let ctx = ctx_of(g);
        let g = &ctx.group;
        let lattice = ctx.lattice().unwrap();
        let mut total = BigUint::from(0u32);
        for (i, h) in lattice.subgroups().iter().enumerate() {
            let sub = g.subgroup_as_group(h, format!("H{i}"), &lim()).unwrap();
            total += epi_count(&ctx_of(sub), &parent.presentation, Method::Auto).unwrap();
        }
        let all = homcount::hom_count(g, &parent.presentation, None, false, Method::Auto, &lim()).unwrap();
        assert_eq!(total, all.value, "{}", g.name());
    }
}

#[test]
fn c2_maps_by_both_routes() {
    // Any nonzero triple in C2³ generates and the map relation holds trivially.
    let ctx = ctx_of(cyclic(2).unwrap());
    let parent = Parent::maps(None);
    assert_eq!(r_count(&ctx, &parent.presentation, Method::Auto).unwrap(), BigUint::from(7u32));
    assert_eq!(enumerate_regular_objects(&ctx, &parent, true).unwrap().r(), 7);
}

#[test]
fn l2_7_hypermaps_match_the_closed_form() {
    let ctx = shipped("L2_7");
    let h = Parent::oriented_hypermaps();
    let expected = l2p_formula(7).unwrap();
    assert_eq!(expected, BigInt::from(57));
    let r = r_count(&ctx, &h.presentation, Method::Auto).unwrap();
    assert_eq!(BigInt::from(r), expected);
    assert_eq!(enumerate_regular_objects(&ctx, &h, true).unwrap().r(), 57);
}

#[test]
fn closed_form_values() {
    // (p+1)(p²-2p-1)/4 by hand: 5 -> 21, 7 -> 68, 11 -> 294, 13 -> 497
    assert_eq!(l2p_formula(5).unwrap(), BigInt::from(19));
    assert_eq!(l2p_formula(7).unwrap(), BigInt::from(68 - 11));
    assert_eq!(l2p_formula(11).unwrap(), BigInt::from(294 - 40));
    assert_eq!(l2p_formula(13).unwrap(), BigInt::from(497 - 2));
    assert_eq!(l2p_formula(31).unwrap(), BigInt::from(8 * (961 - 62 - 1) - 49));
    assert!(l2p_formula(3).is_err());
    assert!(l2p_formula(9).is_err());
}

#[test]
fn canonical_forms_are_orbit_minima() {
    let g = symmetric(4).unwrap();
    let auts = g.automorphisms(&lim()).unwrap().to_vec();
    let canon = Canonicalizer::new(&g, &auts);
    for a in 0..g.order() {
        for b in (0..g.order()).step_by(5) {
            let t = [a, b];
            let min = auts.iter().map(|f| vec![f.apply(a), f.apply(b)]).min().unwrap();
            assert_eq!(canon.canonical(&t), min);
        }
    }
}

#[test]
fn sequential_and_parallel_agree() {
    let par = shipped("S4");
    let (g, t) = load_named(&data_dir(), "S4", &Limits::sequential()).unwrap();
    let seq = Context::new(g, t, Limits::sequential());
    let p = Parent::triangle(2, 3, 4).unwrap();
    assert_eq!(
        r_count(&par, &p.presentation, Method::Auto).unwrap(),
        r_count(&seq, &p.presentation, Method::Auto).unwrap()
    );
    let a = enumerate_regular_objects(&par, &p, true).unwrap();
    let b = enumerate_regular_objects(&seq, &p, true).unwrap();
    assert_eq!(a.classes, b.classes);
}
