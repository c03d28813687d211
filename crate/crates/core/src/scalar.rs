//! The coefficient field every algebraic container is generic over.
//!
//! Anything that behaves like an ordered field with exact arithmetic works;
//! in practice that means `num_rational::Ratio<T>` for some integer `T`.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Num, Signed};

pub trait Scalar:
    Clone + PartialEq + PartialOrd + Debug + Display + FromStr + Num + Signed
{
    fn from_i64(n: i64) -> Self;

    fn is_integral(&self) -> bool;
}

impl<T> Scalar for Ratio<T>
where
    T: Clone + Integer + Signed + From<i64> + Debug + Display + FromStr,
{
    fn from_i64(n: i64) -> Self {
        Ratio::from_integer(T::from(n))
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}
