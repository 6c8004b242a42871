//! Counting by Möbius inversion against direct enumeration, across parents.

use num_bigint::BigUint;
use regenum::enumerate::{enumerate_regular_objects, r_count, Context};
use regenum::homcount::{Method, Parent};
use regenum::io::{data_dir, load_named};
use regenum::objects::{object_invariants, omega_generators, omega_orbits};
use regenum::Limits;

const GROUPS: [&str; 12] = ["C1", "C2", "C6", "C8", "V4", "S3", "D4", "D5", "A4", "S4", "C12", "D6"];
const PARENTS: [&str; 10] = [
    "H+",
    "M+",
    "M+:4",
    "M",
    "M:3",
    "H",
    "triangle:2,3,4",
    "surface:1",
    "nonorientable:2",
    "free:3",
];

fn context(name: &str) -> Context {
    let (g, t) = load_named(&data_dir(), name, &Limits::default()).unwrap();
    Context::new(g, t, Limits::default())
}

#[test]
fn counting_and_enumeration_agree() {
    for name in GROUPS {
        let ctx = context(name);
        for spec in PARENTS {
            let parent = Parent::parse(spec).unwrap();
            let set = enumerate_regular_objects(&ctx, &parent, false).unwrap();
            let r = r_count(&ctx, &parent.presentation, Method::Auto).unwrap();
            assert_eq!(r, BigUint::from(set.r()), "{name} {spec}");
            for c in &set.classes {
                object_invariants(&ctx.group, &parent, c).unwrap();
            }
        }
    }
}

#[test]
fn oracle_only_counts_match() {
    for name in ["S3", "A4", "D4"] {
        let ctx = context(name);
        for spec in ["H+", "M", "triangle:2,3,3", "surface:1"] {
            let p = Parent::parse(spec).unwrap();
            let auto = r_count(&ctx, &p.presentation, Method::Auto).unwrap();
            let oracle = r_count(&ctx, &p.presentation, Method::Oracle).unwrap();
            assert_eq!(auto, oracle, "{name} {spec}");
        }
    }
}

#[test]
fn orbits_partition_the_objects() {
    for name in ["S4", "A4", "D5"] {
        let ctx = context(name);
        for spec in ["H+", "M+", "M", "H", "M:4"] {
            let set = enumerate_regular_objects(&ctx, &Parent::parse(spec).unwrap(), true).unwrap();
            let ops = omega_generators(&set.parent).unwrap();
            let orbits = omega_orbits(&ctx, &set, &ops).unwrap();
            let mut all: Vec<usize> = orbits.concat();
            all.sort();
            assert_eq!(all, (0..set.r()).collect::<Vec<_>>(), "{name} {spec}");
        }
    }
}
