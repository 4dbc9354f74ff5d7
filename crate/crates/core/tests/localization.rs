use kvertex::localization::{check_polarization, fixed_point_ed, fixed_point_elambda, FixedPoint};
use kvertex::partitions::{enumerate_upto, Partition};
use kvertex::scalars::Monomial;

#[test]
fn elambda_polarization_and_ranks() {
    for l in enumerate_upto(6) {
        let fp = fixed_point_elambda(&l);
        assert!(check_polarization(&fp).passed(), "{l}");
        assert_eq!(fp.t_half_vir.rank(), -(l.size() as i64), "{l}");
        assert_eq!(fp.t_half_hilb.rank(), 2 * l.size() as i64, "{l}");
        assert_eq!(fp.t_hilb.rank(), 4 * l.size() as i64, "{l}");
        assert_eq!(fp.label, FixedPoint::Elambda(l.clone()));
    }
}

#[test]
fn ohat_kappa_power_tracks_size() {
    for l in enumerate_upto(5) {
        let fp = fixed_point_elambda(&l);
        let m = fp.ohat_monomial.mul(Monomial::kappa().pow(l.size() as i32));
        // what remains is a product of (xz)^{-1} and y^{-1}
        let [x, y, z] = m.exponents();
        assert_eq!(x, z, "{l}");
        assert!(x <= 0 && y <= 0, "{l}");
    }
}

#[test]
fn ed_json_has_expected_fields() {
    let j = fixed_point_ed(2).unwrap().to_json();
    assert_eq!(j["label"], "E_2");
    assert_eq!(j["rank_t_half_vir"], -4);
    assert!(fixed_point_ed(-1).is_err());
    let empty = fixed_point_elambda(&Partition::empty());
    assert_eq!(empty.t_vir.rank(), 0);
}
