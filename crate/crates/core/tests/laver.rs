mod common;

use common::rng;
use rand::Rng;
use shelfbraid::laver::{build_cyclic, load_or_build, project_element, LaverTable};
use shelfbraid::quotient::{perm_shelf_op, Perm};
use shelfbraid::Shelf;

#[test]
fn projection_is_a_homomorphism_exhaustively() {
    for n in 0..=6 {
        let big = LaverTable::laver(n + 1);
        let small = LaverTable::laver(n);
        assert_eq!(big.project().unwrap(), small);
        let m = small.size();
        for x in 1..=big.size() {
            for y in 1..=big.size() {
                let image = project_element(big.get(x, y), m);
                assert_eq!(image, small.get(project_element(x, m), project_element(y, m)), "A{}: {x} > {y}", n + 1);
            }
        }
    }
}

#[test]
fn projection_is_a_homomorphism_on_samples() {
    let mut r = rng(61);
    for n in 7..=9 {
        let big = LaverTable::laver(n + 1);
        let small = LaverTable::laver(n);
        let m = small.size();
        for _ in 0..100_000 {
            let (x, y) = (r.gen_range(1..=big.size()), r.gen_range(1..=big.size()));
            let image = project_element(big.get(x, y), m);
            assert_eq!(image, small.get(project_element(x, m), project_element(y, m)));
        }
    }
}

#[test]
fn row_periods_are_powers_of_two() {
    for n in 0..=10 {
        let table = LaverTable::laver(n);
        for x in 1..=table.size() {
            assert!(table.row_period(x).is_power_of_two(), "A{n} row {x}");
        }
        assert_eq!(table.row_period(table.size()), table.size());
    }
}

#[test]
fn tables_exist_for_every_size() {
    for n in 1..=40 {
        let table = build_cyclic(n);
        for x in 1..=n {
            assert_eq!(table.get(x, 1), x % n + 1);
            for y in 1..n {
                assert_eq!(table.get(x, y + 1), table.get(table.get(x, y), table.get(x, 1)));
            }
        }
    }
}

#[test]
fn no_morphism_onto_a2_from_permutations() {
    let a2 = LaverTable::laver(2);
    let l3 = a2.powers(1, 3).1;
    let l2 = a2.powers(1, 2).1;
    assert_ne!(a2.get(1, l3), a2.get(l3, l2));
    let id = Perm::identity();
    let (p3, p2) = (id.left_power(3), id.left_power(2));
    assert_eq!(perm_shelf_op(&id, &p3), perm_shelf_op(&p3, &p2));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let built = load_or_build(8, dir.path()).unwrap();
    assert_eq!(built, LaverTable::laver(8));
    assert_eq!(load_or_build(8, dir.path()).unwrap(), built);
    let csv = LaverTable::laver(2).to_csv();
    assert_eq!(csv, "2,4,2,4\n3,4,3,4\n4,4,4,4\n1,2,3,4\n");
}

#[test]
fn large_table_is_a_shelf_on_samples() {
    let table = LaverTable::laver(14);
    let mut r = rng(62);
    let n = table.size();
    for _ in 0..100_000 {
        let (x, y, z) = (r.gen_range(1..=n), r.gen_range(1..=n), r.gen_range(1..=n));
        assert_eq!(table.get(x, table.get(y, z)), table.get(table.get(x, y), table.get(x, z)));
    }
}
