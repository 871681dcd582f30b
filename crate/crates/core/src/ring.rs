use std::cmp::Ordering;

use crate::error::AlgebraError;
use crate::field::PrimeField;
use crate::monomial::{Monomial, RingOrder};

/// The ambient ring `F_p[x1..xn]` together with its term order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    num_vars: usize,
    order: RingOrder,
}

impl Ring {
    pub fn new(characteristic: u32, num_vars: usize, order: RingOrder) -> Result<Self, AlgebraError> {
        let field = PrimeField::new(characteristic)?;
        if num_vars == 0 {
            return Err(AlgebraError::NoVariables);
        }
        if let RingOrder::Elimination(k) = order {
            if k == 0 || k >= num_vars {
                return Err(AlgebraError::BadEliminationBlock { block: k, num_vars });
            }
        }
        Ok(Ring {
            field,
            num_vars,
            order,
        })
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.field.characteristic()
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    #[inline]
    pub fn order(&self) -> RingOrder {
        self.order
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.num_vars)
    }

    pub fn var(&self, index: usize) -> Monomial {
        Monomial::pure_power(self.num_vars, index, 1)
    }
}
