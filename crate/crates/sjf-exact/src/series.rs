//! Truncated formal power series in one variable.

use crate::error::ExactError;
use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

/// Coefficients `c_0, …, c_J` of a power series modulo `X^{J+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries<T> {
    coeffs: Vec<T>,
}

pub trait Coefficient:
    Clone + PartialEq + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
}

impl<T> Coefficient for T where
    T: Clone + PartialEq + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

impl<T: Coefficient> FormalSeries<T> {
    /// The series `Σ coeffs[i] X^i` truncated at order `order`.
    pub fn new(mut coeffs: Vec<T>, order: usize) -> Self {
        coeffs.resize(order + 1, T::zero());
        FormalSeries { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::new(vec![T::one()], order)
    }

    /// Truncation order `J`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs.iter().take(order + 1).cloned().collect(), order)
    }

    pub fn add(&self, other: &Self) -> Self {
        let j = self.order().min(other.order());
        Self::new((0..=j).map(|i| self.coeffs[i].clone() + other.coeffs[i].clone()).collect(), j)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let j = self.order().min(other.order());
        Self::new((0..=j).map(|i| self.coeffs[i].clone() - other.coeffs[i].clone()).collect(), j)
    }

    pub fn scale(&self, s: &T) -> Self {
        FormalSeries { coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let j = self.order().min(other.order());
        let mut out = vec![T::zero(); j + 1];
        for (a, ca) in self.coeffs.iter().enumerate().take(j + 1) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in other.coeffs.iter().enumerate().take(j + 1 - a) {
                out[a + b] = out[a + b].clone() + ca.clone() * cb.clone();
            }
        }
        FormalSeries { coeffs: out }
    }

    /// The inverse modulo `X^{J+1}`; requires constant term 1.
    pub fn reciprocal(&self) -> Result<Self, ExactError> {
        if !self.coeffs[0].is_one() {
            return Err(ExactError::ConstantTermNotOne);
        }
        let j = self.order();
        let mut inv = vec![T::zero(); j + 1];
        inv[0] = T::one();
        for m in 1..=j {
            let mut acc = T::zero();
            for i in 1..=m {
                acc = acc + self.coeffs[i].clone() * inv[m - i].clone();
            }
            inv[m] = -acc;
        }
        Ok(FormalSeries { coeffs: inv })
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }
}
