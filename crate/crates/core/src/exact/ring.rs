use std::fmt::Debug;

use num_traits::{One, Zero};

use super::rational::Rational;

/// A commutative ring with a Q-algebra structure.
///
/// The method names avoid `add`/`mul` so they never collide with the
/// operator traits that the concrete types also implement.
///
/// `zero`, `one` and `is_zero` come from the `num_traits` supertraits;
/// `is_zero` must hold only for the exact additive identity.
pub trait Ring: Clone + PartialEq + Debug + Send + Sync + Zero + One + 'static {
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn scaled(&self, c: &Rational) -> Self;

    fn from_rational(c: &Rational) -> Self {
        Self::one().scaled(c)
    }
}

pub trait Field: Ring {
    fn inverse(&self) -> Option<Self>;
}

impl Ring for Rational {
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        if Zero::is_zero(self) || Zero::is_zero(rhs) {
            return Zero::zero();
        }
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn scaled(&self, c: &Rational) -> Self {
        self.times(c)
    }
    fn from_rational(c: &Rational) -> Self {
        c.clone()
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(num_traits::Inv::inv(self.clone()))
        }
    }
}
