use kvertex::conifold::{compose_conifold, conifold_theorem_check, final_seed, theorem_seed, z_conifold};
use kvertex::partitions::Partition;

#[test]
fn theorem_holds_at_small_orders() {
    let r = conifold_theorem_check(3, 2, 2).unwrap();
    assert_eq!(r.composition, Ok(()));
    assert!(r.passed(), "{r:?}");
}

#[test]
fn vacuum_is_the_partition_function() {
    let k = compose_conifold(3, 2, 2).unwrap();
    let vac = k.body.coeff(&(Partition::empty(), Partition::empty()));
    assert!(vac.same_as(&z_conifold(3, 2).unwrap()));
}

#[test]
fn seeds_with_and_without_the_partition_function() {
    let k = compose_conifold(3, 2, 2).unwrap();
    assert!(k.body.plethystic_log().unwrap().same_as(&final_seed(3, 2, 2)));
    let z = z_conifold(3, 2).unwrap();
    let seed = k.body.scale(&z.inverse().unwrap()).plethystic_log().unwrap();
    assert!(seed.same_as(&theorem_seed(3, 2, 2)));
}
