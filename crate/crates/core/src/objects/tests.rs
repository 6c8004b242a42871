use num_bigint::{BigInt, BigUint};
use num_traits::Pow;

use super::*;
use crate::enumerate::{enumerate_regular_objects, r_count, Context, RegularObjectSet};
use crate::groups::named::*;
use crate::groups::direct_product;
use crate::homcount::Method;
use crate::io::{data_dir, load_named};
use crate::limits::Limits;

fn lim() -> Limits {
    Limits::default()
}

fn shipped(name: &str) -> Context {
    let (g, t) = load_named(&data_dir(), name, &lim()).unwrap();
    Context::new(g, t, lim())
}

fn listed(ctx: &Context, parent: &str) -> RegularObjectSet {
    enumerate_regular_objects(ctx, &Parent::parse(parent).unwrap(), true).unwrap()
}

fn invariants(ctx: &Context, set: &RegularObjectSet) -> Vec<ObjectInvariants> {
    set.classes.iter().map(|c| object_invariants(&ctx.group, &set.parent, c).unwrap()).collect()
}

fn find(invs: &[ObjectInvariants], t: &[u64]) -> usize {
    invs.iter().position(|i| i.type_periods == t).unwrap_or_else(|| panic!("no object of type {t:?}"))
}

fn by_name<'a>(ops: &'a [OperationSpec], name: &str) -> &'a OperationSpec {
    ops.iter().find(|o| o.name == name).unwrap()
}

fn int(n: i64) -> Option<BigInt> {
    Some(BigInt::from(n))
}

#[test]
fn platonic_solids_in_a5() {
    let ctx = shipped("A5");
    let set = listed(&ctx, "M+");
    let mut got: Vec<(Vec<u64>, BigInt)> = invariants(&ctx, &set)
        .into_iter()
        .map(|i| (i.type_periods, i.genus.unwrap()))
        .collect();
    got.sort();
    let want = vec![
        (vec![3, 5], BigInt::from(0)),
        (vec![5, 3], BigInt::from(0)),
        (vec![5, 5], BigInt::from(4)),
    ];
    assert_eq!(got, want);
}

#[test]
fn hemi_solids_have_expected_petrie_lengths() {
    let ctx = shipped("A5");
    let set = listed(&ctx, "M");
    let invs = invariants(&ctx, &set);
    assert_eq!(invs.len(), 3);
    for (t, petrie, v, e, f) in [([3, 5], 5, 6, 15, 10), ([5, 3], 5, 10, 15, 6), ([5, 5], 3, 6, 15, 6)] {
        let i = &invs[find(&invs, &t)];
        assert_eq!(i.petrie_length, Some(petrie));
        assert_eq!(i.vertices, Some(BigUint::from(v as u32)));
        assert_eq!(i.edges, Some(BigUint::from(e as u32)));
        assert_eq!(i.faces, Some(BigUint::from(f as u32)));
        assert_eq!(i.orientable, Some(false));
        assert_eq!(i.euler_characteristic, int(v - e + f));
    }
}

#[test]
fn hypermap_counts() {
    let g = alternating(5).unwrap();
    let x = g.index_of(&crate::groups::Permutation::from_cycles(5, &[vec![0, 1, 2, 3, 4]]).unwrap()).unwrap();
    // find y of order 2 with xy of order 3
    let y = (0..g.order())
        .find(|&y| g.element_order(y) == 2 && g.element_order(g.mul(x, y)) == 3)
        .unwrap();
    let i = hypermap_invariants(&g, &[x, y]).unwrap();
    assert_eq!(i.type_periods, vec![5, 2, 3]);
    assert_eq!((i.vertices, i.edges, i.faces), (Some(12u32.into()), Some(30u32.into()), Some(20u32.into())));
    assert_eq!(i.genus, int(0));
    let t = trivial();
    assert_eq!(hypermap_invariants(&t, &[0, 0]).unwrap().genus, int(0));
}

#[test]
fn covering_genus() {
    assert_eq!(covering_invariants(&alternating(5).unwrap(), 2).genus, int(61));
    assert_eq!(covering_invariants(&trivial(), 3).genus, int(3));
    assert_eq!(covering_invariants(&cyclic(2).unwrap(), 2).genus, int(3));
}

#[test]
fn nonorientable_coverings() {
    // The orientable double cover of the projective plane is the sphere.
    let c2 = cyclic(2).unwrap();
    let i = nonorientable_covering_invariants(&c2, 1, &[1]).unwrap();
    assert_eq!((i.orientable, i.genus), (Some(true), int(0)));
    // Klein bottle covered by the torus through a1 -> t, a2 -> t.
    let i = nonorientable_covering_invariants(&c2, 2, &[1, 1]).unwrap();
    assert_eq!((i.orientable, i.genus), (Some(true), int(1)));
    // a1 -> t, a2 -> 1 gives a Klein bottle again.
    let i = nonorientable_covering_invariants(&c2, 2, &[1, 0]).unwrap();
    assert_eq!((i.orientable, i.genus), (Some(false), int(2)));
}

#[test]
fn oriented_map_operations() {
    let ctx = shipped("A5");
    let set = listed(&ctx, "M+");
    let invs = invariants(&ctx, &set);
    let ico = find(&invs, &[3, 5]);
    let dode = find(&invs, &[5, 3]);
    let great = find(&invs, &[5, 5]);
    let ops = omega_generators(&set.parent).unwrap();
    let dual = apply_operation(&ctx, &set.parent, &set.classes[ico], by_name(&ops, "dual")).unwrap();
    assert_eq!(dual, set.classes[dode]);
    let m5 = Parent::parse("M+:5").unwrap();
    let h = h_operations(m5.category, 5).unwrap();
    let h2 = apply_operation(&ctx, &m5, &set.classes[ico], by_name(&h, "H2")).unwrap();
    assert_eq!(h2, set.classes[great]);
    let h1 = apply_operation(&ctx, &m5, &set.classes[ico], by_name(&h, "H1")).unwrap();
    assert_eq!(h1, set.classes[ico]);
    // a dart-form operation does not act on flag triples
    let flags = Parent::maps(None);
    assert!(apply_operation(&ctx, &flags, &set.classes[ico], &ops[0]).is_err());
}

#[test]
fn nielsen_orbits_of_a5_hypermaps() {
    let ctx = shipped("A5");
    let set = listed(&ctx, "H+");
    let ops = omega_generators(&set.parent).unwrap();
    let orbits = omega_orbits(&ctx, &set, &ops).unwrap();
    let mut sizes: Vec<usize> = orbits.iter().map(Vec::len).collect();
    sizes.sort();
    assert_eq!(sizes, vec![9, 10]);
    for orbit in &orbits {
        let orders: Vec<u64> = orbit.iter().map(|&i| commutator_order(&ctx, &set.classes[i]).unwrap()).collect();
        assert!(orders.iter().all(|&o| o == orders[0]));
        assert_eq!(orders[0], if orbit.len() == 9 { 3 } else { 5 });
    }
    // redundant generators give the same partition
    let mut more = ops.clone();
    more.push(OperationSpec::new("invert-both", set.parent.category, &["A", "B"]));
    more.push(OperationSpec::new("multiply-left", set.parent.category, &["ba", "b"]));
    assert_eq!(omega_orbits(&ctx, &set, &more).unwrap(), orbits);
    // every single move preserves the commutator order
    for c in &set.classes {
        for op in &more {
            let d = apply_operation(&ctx, &set.parent, c, op).unwrap();
            assert_eq!(commutator_order(&ctx, &d).unwrap(), commutator_order(&ctx, c).unwrap());
        }
    }
}

#[test]
fn abelian_groups_form_one_orbit() {
    let c5 = cyclic(5).unwrap();
    let c5x5 = direct_product(&c5, &c5, &lim()).unwrap();
    // r = |GL_2(5)| / |GL_2(5)| for C5 x C5, and J_2(n)/φ(n) for C_n
    for (g, r) in [(c5x5, 1), (cyclic(6).unwrap(), 12), (cyclic(12).unwrap(), 24)] {
        let ctx = Context::new(g, None, lim());
        let set = listed(&ctx, "H+");
        assert_eq!(set.r(), r);
        let orbits = omega_orbits(&ctx, &set, &omega_generators(&set.parent).unwrap()).unwrap();
        assert_eq!(orbits.len(), 1);
        assert!(set.classes.iter().all(|c| commutator_order(&ctx, c).unwrap() == 1));
    }
}

#[test]
fn map_operations_on_a5() {
    let ctx = shipped("A5");
    let set = listed(&ctx, "M");
    let invs = invariants(&ctx, &set);
    let trinity = omega_generators(&set.parent).unwrap();
    assert_eq!(omega_orbits(&ctx, &set, &trinity).unwrap(), vec![vec![0, 1, 2]]);
    let h = h_operations(set.parent.category, 15).unwrap();
    assert_eq!(h.len(), 8);
    // k = 5 misses the valency 3 maps, so H3 leaves the set
    let bad = h_operations(set.parent.category, 5).unwrap();
    let err = set.classes.iter().find_map(|c| apply_operation(&ctx, &set.parent, c, &bad[2]).err());
    assert!(matches!(err, Some(Error::Argument(_))));
    let m3 = Parent::parse("M:3").unwrap();
    assert!(matches!(h_operations(m3.category, 5), Err(Error::Argument(_))));
    let m1 = find(&invs, &[3, 5]);
    let m2 = find(&invs, &[5, 3]);
    let m3 = find(&invs, &[5, 5]);
    let mut orbits = omega_orbits(&ctx, &set, &h).unwrap();
    orbits.sort_by_key(Vec::len);
    let mut pair = vec![m1, m3];
    pair.sort();
    assert_eq!(orbits, vec![vec![m2], pair]);
    let report = invariance_report(&ctx, &set, InvarianceTarget::Class(m2), &h).unwrap();
    assert!(report.iter().all(|(_, fixed)| *fixed));
    let report = invariance_report(&ctx, &set, InvarianceTarget::Class(m1), &h).unwrap();
    assert!(!report.iter().find(|(n, _)| n == "H2").unwrap().1);
    let mut all = trinity.clone();
    all.extend(h);
    let report = invariance_report(&ctx, &set, InvarianceTarget::UniversalCover, &all).unwrap();
    assert!(report.iter().all(|(_, fixed)| *fixed));
}

#[test]
fn duality_and_petrie_identities() {
    for name in ["A5", "S4", "S5", "A4"] {
        let ctx = shipped(name);
        let set = listed(&ctx, "M");
        let ops = omega_generators(&set.parent).unwrap();
        let (dual, petrie) = (by_name(&ops, "dual"), by_name(&ops, "petrie"));
        for c in &set.classes {
            let before = object_invariants(&ctx.group, &set.parent, c).unwrap();
            let d = apply_operation(&ctx, &set.parent, c, dual).unwrap();
            let di = object_invariants(&ctx.group, &set.parent, &d).unwrap();
            assert_eq!(di.type_periods, vec![before.type_periods[1], before.type_periods[0]]);
            let p = apply_operation(&ctx, &set.parent, c, petrie).unwrap();
            let pi = object_invariants(&ctx.group, &set.parent, &p).unwrap();
            assert_eq!((&pi.vertices, &pi.edges), (&before.vertices, &before.edges));
            assert_eq!(pi.type_periods[0], before.petrie_length.unwrap());
            // (dual petrie)^3 fixes every object
            let mut t = c.clone();
            for _ in 0..3 {
                t = apply_operation(&ctx, &set.parent, &t, petrie).unwrap();
                t = apply_operation(&ctx, &set.parent, &t, dual).unwrap();
            }
            assert_eq!(&t, c, "{name}");
        }
    }
}

#[test]
fn euler_and_genus_are_consistent() {
    for name in ["S3", "D4", "A4", "S4", "A5", "C6"] {
        let ctx = shipped(name);
        for parent in ["H+", "M+", "M", "H", "triangle:2,3,4"] {
            let set = listed(&ctx, parent);
            for i in invariants(&ctx, &set) {
                let euler = i.euler_characteristic.clone().unwrap();
                if let Some(genus) = &i.genus {
                    let back = if i.orientable.unwrap() { BigInt::from(2) - 2 * genus } else { BigInt::from(2) - genus };
                    assert_eq!(back, euler, "{name} {parent}");
                    assert!(genus >= &BigInt::from(0));
                }
                // V - E + F needs four flags on every edge
                let four = i.edges.as_ref().is_some_and(|e| e * 4u32 == BigUint::from(ctx.group.order()));
                if parent == "M" && i.genus.is_some() && four {
                    let (v, e, f) = (i.vertices.unwrap(), i.edges.unwrap(), i.faces.unwrap());
                    assert_eq!(BigInt::from(v) - BigInt::from(e) + BigInt::from(f), euler);
                }
            }
        }
    }
}

#[test]
fn degenerate_maps() {
    // r0 = r2 with r1 trivial in C2: the surface has boundary
    let ctx = Context::new(cyclic(2).unwrap(), None, lim());
    let i = map_invariants(&ctx.group, &[1, 0, 1]).unwrap();
    assert_eq!(i.genus, None);
    let set = listed(&ctx, "M");
    let ops = omega_generators(&set.parent).unwrap();
    let pos = set.position(&[1, 1, 1]).unwrap();
    let report = invariance_report(&ctx, &set, InvarianceTarget::Class(pos), &ops).unwrap();
    assert!(report.iter().find(|(n, _)| n == "dual").unwrap().1);
}

#[test]
fn universal_covers_of_a5() {
    let ctx = shipped("A5");
    let set = listed(&ctx, "M+");
    let u = universal_cover_summary(&ctx, &set).unwrap();
    assert_eq!(u.cover_group_order, BigUint::from(216000u32));
    assert_eq!(u.agreeing_methods, vec![OrderMethod::DirectClosure, OrderMethod::SimplePower]);
    assert_eq!(u.type_periods, vec![15, 15]);
    assert_eq!(u.genus, int(39601));

    let set = listed(&ctx, "M");
    let u = universal_cover_summary(&ctx, &set).unwrap();
    assert_eq!(u.cover_group_order, BigUint::from(216000u32));
    assert_eq!((u.type_periods.clone(), u.petrie_length), (vec![15, 15], Some(15)));
    assert_eq!(u.orientable, Some(false));
    assert_eq!(u.genus, int(39602));

    let set = listed(&ctx, "H+");
    let u = universal_cover_summary(&ctx, &set).unwrap();
    let order = BigUint::from(60u32).pow(19u32);
    assert_eq!(u.order_method, OrderMethod::SimplePower);
    assert_eq!(u.cover_group_order, order);
    assert_eq!(u.type_periods, vec![30, 30, 30]);
    // 1 + (e - 3)/(2e) |G|^r with e = 30
    let expected = BigInt::from(1) + BigInt::from(order) * 9 / 20;
    assert_eq!(u.genus, Some(expected));
}

#[test]
fn universal_covers_of_cyclic_groups() {
    for n in 2..=8usize {
        let ctx = Context::new(cyclic(n).unwrap(), None, lim());
        let set = listed(&ctx, "H+");
        let u = universal_cover_summary(&ctx, &set).unwrap();
        assert!(u.agreeing_methods.contains(&OrderMethod::AbelianRule));
        assert_eq!(u.cover_group_order, BigUint::from(n * n));
        assert_eq!(u.genus, int(((n - 1) * (n - 2) / 2) as i64));
    }
    // closure and the abelian rule agree where both run
    let ctx = Context::new(cyclic(3).unwrap(), None, lim());
    let u = universal_cover_summary(&ctx, &listed(&ctx, "H+")).unwrap();
    assert_eq!(u.agreeing_methods, vec![OrderMethod::DirectClosure, OrderMethod::AbelianRule]);
}

#[test]
fn cover_order_divides_the_power() {
    for name in ["S3", "D4", "A4", "C6", "V4"] {
        let ctx = shipped(name);
        for parent in ["H+", "M", "M+"] {
            let set = listed(&ctx, parent);
            let u = universal_cover_summary(&ctx, &set).unwrap();
            let power = BigUint::from(ctx.group.order()).pow(set.r() as u32);
            assert_eq!(&power % &u.cover_group_order, BigUint::from(0u32), "{name} {parent}");
        }
    }
}

#[test]
fn upper_bound() {
    let ctx = shipped("A5");
    assert_eq!(epi_upper_bound(&ctx).unwrap(), BigUint::from(30u32));
    let ctx = Context::new(trivial(), None, lim());
    assert_eq!(epi_upper_bound(&ctx).unwrap(), BigUint::from(1u32));
    let h = Parent::oriented_hypermaps();
    for name in ["C12", "S3", "D5", "A4", "S4", "V4", "S5"] {
        let ctx = shipped(name);
        let r = r_count(&ctx, &h.presentation, Method::Auto).unwrap();
        assert!(r <= epi_upper_bound(&ctx).unwrap(), "{name}");
    }
}
