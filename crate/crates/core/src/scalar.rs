//! Integer weight types.
//!
//! Every quantity in a domination or packing instance (quotas, caps, function
//! values) is a nonnegative integer. The core is generic over the unsigned
//! primitive used to store them.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{NumCast, PrimInt, Unsigned};

use crate::error::{Error, Result};

/// Unsigned primitive integer usable as a quota, cap or function value.
pub trait Weight:
    PrimInt + Unsigned + Hash + Debug + Display + FromStr + Default + Send + Sync + 'static
{
    /// Converts from a signed wide integer, failing on negative or oversized input.
    fn from_i64(value: i64) -> Result<Self> {
        <Self as NumCast>::from(value).ok_or(Error::Overflow(value as i128))
    }

    fn from_usize(value: usize) -> Result<Self> {
        <Self as NumCast>::from(value).ok_or(Error::Overflow(value as i128))
    }

    /// Widens to `i128` for value-map arithmetic.
    fn wide(self) -> i128 {
        // every supported primitive fits
        self.to_i128().expect("weight fits in i128")
    }

    fn to_index(self) -> usize {
        self.to_usize().expect("weight fits in usize")
    }
}

impl<T> Weight for T where
    T: PrimInt + Unsigned + Hash + Debug + Display + FromStr + Default + Send + Sync + 'static
{
}

/// Sum of a slice of weights, widened.
pub(crate) fn wide_sum<W: Weight>(values: impl IntoIterator<Item = W>) -> i128 {
    values.into_iter().map(Weight::wide).sum()
}

/// Narrows a wide value back to `W`.
pub(crate) fn narrow<W: Weight>(value: i128) -> Result<W> {
    <W as NumCast>::from(value).ok_or(Error::Overflow(value))
}
