//! Extended non-negative reals for arrow lengths and geodesic distances.
//!
//! Unreachable pairs carry a tagged [`Ext::Infinite`] sentinel rather than a
//! large finite float, so reachability logic stays exact.

use std::cmp::Ordering;
use std::ops::Add;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Ext<T> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> Ext<T> {
    pub fn zero() -> Self {
        Ext::Finite(T::zero())
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Ext::Finite(_))
    }

    pub fn finite(self) -> Option<T> {
        match self {
            Ext::Finite(v) => Some(v),
            Ext::Infinite => None,
        }
    }

    /// Total order with `Infinite` above every finite value.
    pub fn total_cmp(self, other: Self) -> Ordering {
        match (self, other) {
            (Ext::Infinite, Ext::Infinite) => Ordering::Equal,
            (Ext::Infinite, Ext::Finite(_)) => Ordering::Greater,
            (Ext::Finite(_), Ext::Infinite) => Ordering::Less,
            (Ext::Finite(a), Ext::Finite(b)) => a.partial_cmp(&b).unwrap_or(Ordering::Equal),
        }
    }
}

impl<T: Scalar> Add for Ext<T> {
    type Output = Ext<T>;

    fn add(self, rhs: Ext<T>) -> Ext<T> {
        match (self, rhs) {
            (Ext::Finite(a), Ext::Finite(b)) => Ext::Finite(a + b),
            _ => Ext::Infinite,
        }
    }
}
