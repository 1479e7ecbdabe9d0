use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{check_action, combine, Module, ModuleError};
use crate::algebra::{opposite_algebra, Algebra};
use crate::field::PrimeField;
use crate::linalg::Mat;

/// An `(A, B)`-bimodule. `right_action[i]` is the matrix of `m ↦ m·b_i`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    left: Arc<Algebra>,
    right: Arc<Algebra>,
    dim: usize,
    left_action: Arc<Vec<Mat>>,
    right_action: Arc<Vec<Mat>>,
}

impl PartialEq for Bimodule {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && super::same_algebra(&self.left, &other.left)
            && super::same_algebra(&self.right, &other.right)
            && self.left_action == other.left_action
            && self.right_action == other.right_action
    }
}

impl Eq for Bimodule {}

impl Bimodule {
    /// Builds a bimodule, checking both module laws and that the actions commute.
    pub fn new(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Mat>,
        right_action: Vec<Mat>,
    ) -> Result<Bimodule, ModuleError> {
        check_action(&left, dim, &left_action)?;
        let op = opposite_algebra(&right);
        check_action(&op, dim, &right_action)?;
        for (i, l) in left_action.iter().enumerate() {
            for (j, r) in right_action.iter().enumerate() {
                if l.dot(r) != r.dot(l) {
                    return Err(ModuleError::ActionsDoNotCommute { left: i, right: j });
                }
            }
        }
        Ok(Bimodule::new_unchecked(left, right, dim, left_action, right_action))
    }

    pub fn new_unchecked(
        left: Arc<Algebra>,
        right: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Mat>,
        right_action: Vec<Mat>,
    ) -> Bimodule {
        Bimodule {
            left,
            right,
            dim,
            left_action: Arc::new(left_action),
            right_action: Arc::new(right_action),
        }
    }

    /// `A` as an `(A, A)`-bimodule.
    pub fn regular(a: &Arc<Algebra>) -> Bimodule {
        Bimodule::new_unchecked(
            a.clone(),
            a.clone(),
            a.dim(),
            (0..a.dim()).map(|i| a.left_mult(i).clone()).collect(),
            (0..a.dim()).map(|i| a.right_mult(i).clone()).collect(),
        )
    }

    pub fn zero(left: &Arc<Algebra>, right: &Arc<Algebra>) -> Bimodule {
        let f = left.field();
        Bimodule::new_unchecked(
            left.clone(),
            right.clone(),
            0,
            (0..left.dim()).map(|_| Mat::zeros(f, 0, 0)).collect(),
            (0..right.dim()).map(|_| Mat::zeros(f, 0, 0)).collect(),
        )
    }

    #[inline]
    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left
    }

    #[inline]
    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.left.field()
    }

    pub fn left_action(&self) -> &[Mat] {
        &self.left_action
    }

    pub fn right_action(&self) -> &[Mat] {
        &self.right_action
    }

    /// Left action of an arbitrary element of `A`.
    pub fn left_by(&self, x: &[u64]) -> Mat {
        combine(self.field(), self.dim, &self.left_action, x)
    }

    /// Right action of an arbitrary element of `B`.
    pub fn right_by(&self, x: &[u64]) -> Mat {
        combine(self.field(), self.dim, &self.right_action, x)
    }

    pub fn validate(&self) -> Result<(), ModuleError> {
        Bimodule::new(
            self.left.clone(),
            self.right.clone(),
            self.dim,
            self.left_action.to_vec(),
            self.right_action.to_vec(),
        )
        .map(|_| ())
    }

    /// The underlying left `A`-module.
    pub fn as_left_module(&self) -> Module {
        Module::new_unchecked(self.left.clone(), self.dim, self.left_action.to_vec())
    }

    /// The underlying right `B`-module, as a left module over `B^op`.
    pub fn as_right_module(&self) -> Module {
        self.as_right_module_over(&opposite_algebra(&self.right))
    }

    pub fn as_right_module_over(&self, op: &Arc<Algebra>) -> Module {
        Module::new_unchecked(op.clone(), self.dim, self.right_action.to_vec())
    }

    /// The same bimodule with sides exchanged, an `(B^op, A^op)`-bimodule.
    pub fn flip(&self) -> Bimodule {
        Bimodule::new_unchecked(
            opposite_algebra(&self.right),
            opposite_algebra(&self.left),
            self.dim,
            self.right_action.to_vec(),
            self.left_action.to_vec(),
        )
    }

    /// Whether the subspace spanned by the bimodule is zero.
    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }
}
