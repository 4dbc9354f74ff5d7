//! Fixed-point data for the two example families: the points `E_d` on the
//! Hilbert scheme of a curve and the points `E_λ` labelled by partitions.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde_json::json;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::scalars::{bracket_of, Character, LaurentPoly, Monomial, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FixedPoint {
    Ed(u32),
    Elambda(Partition),
}

impl fmt::Display for FixedPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedPoint::Ed(d) => write!(f, "E_{d}"),
            FixedPoint::Elambda(l) => write!(f, "E_({l})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointData {
    pub label: FixedPoint,
    pub t_hilb: Character,
    pub t_vir: Character,
    pub t_half_hilb: Character,
    pub t_half_vir: Character,
    /// The stalk is `coeff · monomial`.
    pub ohat_coeff: BigRational,
    pub ohat_monomial: Monomial,
}

impl FixedPointData {
    pub fn ohat_stalk(&self) -> RatFunc {
        RatFunc::from(LaurentPoly::term(self.ohat_coeff.clone(), self.ohat_monomial))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "label": self.label.to_string(),
            "t_hilb": self.t_hilb.to_string(),
            "t_vir": self.t_vir.to_string(),
            "t_half_hilb": self.t_half_hilb.to_string(),
            "t_half_vir": self.t_half_vir.to_string(),
            "rank_t_half_vir": self.t_half_vir.rank(),
            "ohat_stalk": self.ohat_stalk().to_string(),
        })
    }
}

impl fmt::Display for FixedPointData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "fixed point: {}", self.label)?;
        writeln!(f, "t_hilb: {}", self.t_hilb)?;
        writeln!(f, "t_vir: {}", self.t_vir)?;
        writeln!(f, "t_half_hilb: {}", self.t_half_hilb)?;
        writeln!(f, "t_half_vir: {}", self.t_half_vir)?;
        writeln!(f, "rank t_half_vir: {}", self.t_half_vir.rank())?;
        write!(f, "ohat stalk: {}", self.ohat_stalk())
    }
}

fn xyz() -> Monomial {
    Monomial::x().mul(Monomial::y()).mul(Monomial::z())
}

fn poly(m: Monomial) -> LaurentPoly {
    LaurentPoly::monomial(m)
}

fn one_minus(m: Monomial) -> RatFunc {
    RatFunc::from(&LaurentPoly::one() - &poly(m))
}

pub fn fixed_point_ed(d: i64) -> Result<FixedPointData> {
    if d <= 0 {
        return Err(Error::InvalidArgument(format!("E_d needs d >= 1, got {d}")));
    }
    let di = d as i32;
    let y = Monomial::y();
    let mut t_hilb = Character::new();
    let mut t_vir = Character::new();
    for i in 1..=di {
        t_hilb.add_term(y.pow(i), 1);
        t_hilb.add_term(xyz().mul(y.pow(-i)), 1);
        t_vir.add_term(y.pow(i), 1);
    }
    // (1 − y^{−d})/(1 − y^{−1}) · (1 − (1 − y^d)/(1 − y) · (1 − xz))
    let a = one_minus(y.pow(-di)).div(&one_minus(y.inv()))?;
    let b = one_minus(y.pow(di)).div(&one_minus(y))?;
    let half_hilb = &a * &(&RatFunc::one() - &(&b * &one_minus(Monomial::xz())));
    // −xz · {y^d}²/{y}²
    let ratio = bracket_of(y.pow(di))?.div(&bracket_of(y)?)?;
    let half_vir = (&ratio * &ratio)
        .mul_monomial(Monomial::xz())
        .scale(&-BigRational::one());
    Ok(FixedPointData {
        label: FixedPoint::Ed(d as u32),
        t_hilb,
        t_vir,
        t_half_hilb: Character::from_ratfunc(&half_hilb)?,
        t_half_vir: Character::from_ratfunc(&half_vir)?,
        ohat_coeff: BigRational::one(),
        ohat_monomial: Monomial::from_doubled(0, -di * di, 0),
    })
}

/// Arms-legs data. The Hilbert-side half is taken to be twice the
/// `(xz)^{−a} y^{l+1}` half of the virtual tangent space.
pub fn fixed_point_elambda(lambda: &Partition) -> FixedPointData {
    let mut t_vir = Character::new();
    let mut half = Character::new();
    let mut ohat = Monomial::kappa().pow(-(lambda.size() as i32));
    for c in lambda.cells() {
        let a = lambda.arm(c).expect("cell of λ") as i32;
        let l = lambda.leg(c).expect("cell of λ") as i32;
        let inner = Monomial::xz().pow(-a).mul(Monomial::y().pow(l + 1));
        half.add_term(inner, 1);
        t_vir.add_term(inner, 1);
        t_vir.add_term(Monomial::xz().pow(a + 1).mul(Monomial::y().pow(-l)), 1);
        ohat = ohat
            .mul(Monomial::xz().pow(-(c.coarm() as i32)))
            .mul(Monomial::y().pow(-(c.coleg() as i32)));
    }
    FixedPointData {
        label: FixedPoint::Elambda(lambda.clone()),
        t_hilb: t_vir.scale(2),
        t_vir,
        t_half_hilb: half.scale(2),
        t_half_vir: -&half,
        ohat_coeff: BigRational::one(),
        ohat_monomial: ohat,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolarizationReport {
    /// `T_Hilb = T½_Hilb + xyz·(T½_Hilb)^∨`.
    pub hilb: bool,
    /// `T_vir = T½_vir − xyz·(T½_vir)^∨ + T½_Hilb`.
    pub vir: bool,
}

impl PolarizationReport {
    pub fn passed(&self) -> bool {
        self.hilb && self.vir
    }
}

pub fn check_polarization(fp: &FixedPointData) -> PolarizationReport {
    let w = xyz();
    let hilb = &fp.t_half_hilb + &fp.t_half_hilb.dual().mul_monomial(w);
    let vir = &(&fp.t_half_vir - &fp.t_half_vir.dual().mul_monomial(w)) + &fp.t_half_hilb;
    PolarizationReport {
        hilb: hilb == fp.t_hilb,
        vir: vir == fp.t_vir,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::enumerate_upto;

    #[test]
    fn ed_examples() {
        let e1 = fixed_point_ed(1).unwrap();
        assert_eq!(e1.t_vir, Character::monomial(Monomial::y()));
        assert_eq!(e1.ohat_monomial, Monomial::from_doubled(0, -1, 0));
        assert_eq!(fixed_point_ed(2).unwrap().t_half_vir.rank(), -4);
        assert_eq!(
            fixed_point_ed(3).unwrap().ohat_monomial,
            Monomial::from_doubled(0, -9, 0)
        );
        assert!(fixed_point_ed(0).is_err());
    }

    #[test]
    fn ed_ranks_and_polarization() {
        for d in 1..=8 {
            let fp = fixed_point_ed(d).unwrap();
            assert_eq!(fp.t_half_vir.rank(), -d * d);
            assert!(check_polarization(&fp).passed(), "d = {d}");
        }
    }

    #[test]
    fn elambda_examples() {
        let one = fixed_point_elambda(&"1".parse().unwrap());
        assert_eq!(
            one.t_vir,
            Character::from_terms([(Monomial::y(), 1), (Monomial::xz(), 1)])
        );
        assert_eq!(one.ohat_monomial, Monomial::kappa().inv());
        let two = fixed_point_elambda(&"2".parse().unwrap());
        assert_eq!(two.ohat_monomial, Monomial::kappa().pow(-2).mul(Monomial::xz().inv()));
        assert_eq!(fixed_point_elambda(&"2,1".parse().unwrap()).t_half_vir.rank(), -3);
    }

    #[test]
    fn elambda_invariants() {
        for l in enumerate_upto(6) {
            let fp = fixed_point_elambda(&l);
            assert_eq!(fp.t_half_vir.rank(), -(l.size() as i64));
            assert_eq!(fp.t_hilb, fp.t_vir.scale(2));
            assert!(check_polarization(&fp).passed(), "{l}");
        }
    }
}
