use std::fmt;

/// A torus character `x^{a/2} y^{b/2} z^{c/2}` stored with doubled exponents.
///
/// Half-integer powers such as `y^{1/2}` and `κ = (xyz)^{1/2}` are ordinary
/// monomials here, so `κ² = xyz` holds structurally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub ex2: i32,
    pub ey2: i32,
    pub ez2: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ex2: 0, ey2: 0, ez2: 0 };

    pub const fn from_doubled(ex2: i32, ey2: i32, ez2: i32) -> Self {
        Monomial { ex2, ey2, ez2 }
    }

    pub const fn x() -> Self {
        Monomial::from_doubled(2, 0, 0)
    }

    pub const fn y() -> Self {
        Monomial::from_doubled(0, 2, 0)
    }

    pub const fn z() -> Self {
        Monomial::from_doubled(0, 0, 2)
    }

    pub const fn xz() -> Self {
        Monomial::from_doubled(2, 0, 2)
    }

    /// `κ = (xyz)^{1/2}`.
    pub const fn kappa() -> Self {
        Monomial::from_doubled(1, 1, 1)
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial::from_doubled(self.ex2 + other.ex2, self.ey2 + other.ey2, self.ez2 + other.ez2)
    }

    pub fn inv(self) -> Monomial {
        Monomial::from_doubled(-self.ex2, -self.ey2, -self.ez2)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn div(self, other: Monomial) -> Monomial {
        self.mul(other.inv())
    }

    pub fn pow(self, n: i32) -> Monomial {
        Monomial::from_doubled(self.ex2 * n, self.ey2 * n, self.ez2 * n)
    }

    /// Square root, defined only when every doubled exponent is even.
    pub fn sqrt(self) -> Option<Monomial> {
        if self.ex2 % 2 == 0 && self.ey2 % 2 == 0 && self.ez2 % 2 == 0 {
            Some(Monomial::from_doubled(self.ex2 / 2, self.ey2 / 2, self.ez2 / 2))
        } else {
            None
        }
    }

    pub fn min(self, other: Monomial) -> Monomial {
        Monomial::from_doubled(
            self.ex2.min(other.ex2),
            self.ey2.min(other.ey2),
            self.ez2.min(other.ez2),
        )
    }

    /// Exponent-wise `self >= other`.
    pub fn divisible_by(self, other: Monomial) -> bool {
        self.ex2 >= other.ex2 && self.ey2 >= other.ey2 && self.ez2 >= other.ez2
    }

    pub fn exponents(self) -> [i32; 3] {
        [self.ex2, self.ey2, self.ez2]
    }

    /// Writes `self = w^g` with `g` maximal; returns `(w, g)`. `g = 0` for the unit.
    pub fn primitive_root(self) -> (Monomial, u32) {
        let g = gcd(
            gcd(self.ex2.unsigned_abs(), self.ey2.unsigned_abs()),
            self.ez2.unsigned_abs(),
        );
        if g == 0 {
            return (Monomial::ONE, 0);
        }
        let gi = g as i32;
        (Monomial::from_doubled(self.ex2 / gi, self.ey2 / gi, self.ez2 / gi), g)
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn fmt_exponent(f: &mut fmt::Formatter<'_>, var: char, doubled: i32) -> fmt::Result {
    if doubled == 2 {
        write!(f, "{var}")
    } else if doubled % 2 == 0 {
        write!(f, "{var}^{{{}}}", doubled / 2)
    } else {
        write!(f, "{var}^{{{}/2}}", doubled)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (var, e) in [('x', self.ex2), ('y', self.ey2), ('z', self.ez2)] {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            fmt_exponent(f, var, e)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_squared_is_xyz() {
        let k = Monomial::kappa();
        let xyz = Monomial::x().mul(Monomial::y()).mul(Monomial::z());
        assert_eq!(k.pow(2), xyz);
    }

    #[test]
    fn display_halves() {
        assert_eq!(Monomial::kappa().to_string(), "x^{1/2}*y^{1/2}*z^{1/2}");
        assert_eq!(Monomial::y().pow(-3).to_string(), "y^{-3}");
        assert_eq!(Monomial::xz().to_string(), "x*z");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn primitive_root_of_powers() {
        assert_eq!(
            Monomial::y().pow(3).primitive_root(),
            (Monomial::from_doubled(0, 1, 0), 6)
        );
        assert_eq!(Monomial::kappa().pow(2).primitive_root(), (Monomial::kappa(), 2));
        assert_eq!(Monomial::ONE.primitive_root().1, 0);
    }
}
