//! Coordinate scalar abstraction.
//!
//! Every solver works on squared distances, so only ring operations and a
//! total order on non-NaN values are required. Floats and machine integers
//! both qualify; integer coordinates give exact arithmetic as long as the
//! squared distances do not overflow.

use std::fmt::{Debug, Display};

use num_traits::{Num, NumCast, ToPrimitive};

pub trait Scalar:
    Num + NumCast + ToPrimitive + Copy + PartialOrd + Debug + Display + Send + Sync + 'static
{
    /// `false` for NaN and the infinities; always `true` for integers.
    fn is_finite_value(self) -> bool;
}

macro_rules! impl_float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            #[inline]
            fn is_finite_value(self) -> bool {
                self.is_finite()
            }
        }
    )*};
}

macro_rules! impl_int_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            #[inline]
            fn is_finite_value(self) -> bool {
                true
            }
        }
    )*};
}

impl_float_scalar!(f32, f64);
impl_int_scalar!(i32, i64, i128);

/// Total order for scalars known to be finite.
#[inline]
pub(crate) fn cmp_scalar<T: Scalar>(a: T, b: T) -> std::cmp::Ordering {
    a.partial_cmp(&b).expect("non-finite scalar in comparison")
}
