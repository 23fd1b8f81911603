//! The integral group ring: finite formal integer combinations of group
//! elements, and dense matrices over it.
//!
//! Terms are kept in a sorted map under the canonical element order
//! (length-lexicographic for words, lexicographic for vectors), with zero
//! coefficients dropped, so equality of values is equality in the ring.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::group::{GroupDescriptor, GroupElement};

/// An element of the group ring Z[G].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElement {
    descriptor: GroupDescriptor,
    terms: BTreeMap<GroupElement, BigInt>,
}

impl GroupRingElement {
    pub fn zero(descriptor: GroupDescriptor) -> Self {
        GroupRingElement {
            descriptor,
            terms: BTreeMap::new(),
        }
    }

    /// The ring identity 1·e.
    pub fn one(descriptor: GroupDescriptor) -> Self {
        Self::from_element(GroupElement::identity(descriptor))
    }

    /// A single group element with coefficient 1.
    pub fn from_element(g: GroupElement) -> Self {
        Self::from_term(g, BigInt::one())
    }

    pub fn from_term(g: GroupElement, coefficient: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !coefficient.is_zero() {
            terms.insert(g.clone(), coefficient);
        }
        GroupRingElement {
            descriptor: g.descriptor(),
            terms,
        }
    }

    /// Builds an element from (element, coefficient) pairs, merging
    /// duplicates and dropping zero totals.
    pub fn from_terms<I>(descriptor: GroupDescriptor, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (GroupElement, BigInt)>,
    {
        let mut out = GroupRingElement::zero(descriptor);
        for (g, k) in terms {
            out.add_term(&g, &k)?;
        }
        Ok(out)
    }

    fn add_term(&mut self, g: &GroupElement, k: &BigInt) -> Result<()> {
        if g.descriptor() != self.descriptor {
            return Err(g.descriptor().mismatch(&self.descriptor));
        }
        if k.is_zero() {
            return Ok(());
        }
        let entry = self.terms.entry(g.clone()).or_insert_with(BigInt::zero);
        *entry += k;
        if entry.is_zero() {
            self.terms.remove(g);
        }
        Ok(())
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&GroupElement, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, g: &GroupElement) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        if self.descriptor != other.descriptor {
            return Err(self.descriptor.mismatch(&other.descriptor));
        }
        let mut out = self.clone();
        for (g, k) in other.terms() {
            out.add_term(g, k)?;
        }
        Ok(out)
    }

    pub fn neg(&self) -> GroupRingElement {
        GroupRingElement {
            descriptor: self.descriptor,
            terms: self
                .terms
                .iter()
                .map(|(g, k)| (g.clone(), -k))
                .collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        self.add(&other.neg())
    }

    /// Convolution product.
    pub fn mul(&self, other: &GroupRingElement) -> Result<GroupRingElement> {
        if self.descriptor != other.descriptor {
            return Err(self.descriptor.mismatch(&other.descriptor));
        }
        let mut out = GroupRingElement::zero(self.descriptor);
        for (g, a) in self.terms() {
            for (h, b) in other.terms() {
                out.add_term(&g.mul(h)?, &(a * b))?;
            }
        }
        Ok(out)
    }

    /// Left multiplication by a single group element.
    pub fn left_mul_element(&self, g: &GroupElement) -> Result<GroupRingElement> {
        GroupRingElement::from_element(g.clone()).mul(self)
    }

    /// The augmentation Z[G] -> Z sending every group element to 1: the sum
    /// of the coefficients.
    pub fn augment(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (g, k)) in self.terms.iter().enumerate() {
            if i == 0 {
                if *k == BigInt::one() {
                    write!(f, "{g}")?;
                } else if *k == -BigInt::one() {
                    write!(f, "-{g}")?;
                } else {
                    write!(f, "{k}·{g}")?;
                }
            } else {
                let abs = k.magnitude();
                let sign = if k < &BigInt::zero() { "-" } else { "+" };
                if abs.is_one() {
                    write!(f, " {sign} {g}")?;
                } else {
                    write!(f, " {sign} {abs}·{g}")?;
                }
            }
        }
        Ok(())
    }
}

/// A dense matrix with group-ring entries, all over one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingMatrix {
    descriptor: GroupDescriptor,
    rows: usize,
    cols: usize,
    entries: Vec<GroupRingElement>,
}

impl GroupRingMatrix {
    /// The zero matrix.
    pub fn zeros(descriptor: GroupDescriptor, rows: usize, cols: usize) -> Self {
        GroupRingMatrix {
            descriptor,
            rows,
            cols,
            entries: vec![GroupRingElement::zero(descriptor); rows * cols],
        }
    }

    pub fn identity(descriptor: GroupDescriptor, n: usize) -> Self {
        let mut m = Self::zeros(descriptor, n, n);
        for i in 0..n {
            m.set(i, i, GroupRingElement::one(descriptor));
        }
        m
    }

    pub fn from_entries(
        descriptor: GroupDescriptor,
        rows: usize,
        cols: usize,
        entries: Vec<GroupRingElement>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.descriptor() != descriptor) {
            return Err(e.descriptor().mismatch(&descriptor));
        }
        Ok(GroupRingMatrix {
            descriptor,
            rows,
            cols,
            entries,
        })
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &GroupRingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: GroupRingElement) {
        assert_eq!(value.descriptor(), self.descriptor);
        self.entries[i * self.cols + j] = value;
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Result<GroupRingElement> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut out = GroupRingElement::zero(self.descriptor);
        for i in 0..self.rows {
            out = out.add(self.get(i, i))?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn free(rank: usize) -> GroupDescriptor {
        GroupDescriptor::free(rank).unwrap()
    }

    fn w(letters: &[i32]) -> GroupElement {
        GroupElement::word(free(1), letters).unwrap()
    }

    #[test]
    fn add_cancels_to_zero() {
        let a = GroupRingElement::from_element(w(&[1]));
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn one_is_identity() {
        let b = GroupRingElement::from_terms(
            free(1),
            [
                (w(&[1]), BigInt::from(2)),
                (w(&[-1]), BigInt::from(-5)),
            ],
        )
        .unwrap();
        assert_eq!(GroupRingElement::one(free(1)).mul(&b).unwrap(), b);
        assert_eq!(b.mul(&GroupRingElement::one(free(1))).unwrap(), b);
    }

    #[test]
    fn telescoping_product() {
        // (e + x)(e - x) = e - x^2 in the rank-1 free group
        let e = GroupRingElement::one(free(1));
        let x = GroupRingElement::from_element(w(&[1]));
        let lhs = e.add(&x).unwrap().mul(&e.sub(&x).unwrap()).unwrap();
        let expected = e
            .sub(&GroupRingElement::from_element(w(&[1, 1])))
            .unwrap();
        assert_eq!(lhs, expected);
    }

    #[test]
    fn trace_sums_diagonal_only() {
        let d = free(1);
        assert!(GroupRingMatrix::zeros(d, 0, 0).trace().unwrap().is_zero());

        let e_plus_x = GroupRingElement::one(d)
            .add(&GroupRingElement::from_element(w(&[1])))
            .unwrap();
        let m =
            GroupRingMatrix::from_entries(d, 1, 1, vec![e_plus_x.clone()]).unwrap();
        assert_eq!(m.trace().unwrap(), e_plus_x);

        let mut m = GroupRingMatrix::zeros(d, 2, 2);
        m.set(0, 0, GroupRingElement::one(d));
        m.set(1, 1, GroupRingElement::from_element(w(&[1])));
        m.set(0, 1, GroupRingElement::from_element(w(&[1, 1])));
        m.set(1, 0, GroupRingElement::from_term(w(&[-1]), BigInt::from(7)));
        assert_eq!(m.trace().unwrap(), e_plus_x);
    }

    #[test]
    fn trace_rejects_non_square() {
        assert!(matches!(
            GroupRingMatrix::zeros(free(1), 2, 3).trace(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
    }

    #[test]
    fn augment_examples() {
        let d = free(1);
        assert_eq!(GroupRingElement::zero(d).augment(), BigInt::zero());
        let s = GroupRingElement::from_terms(
            d,
            [
                (w(&[]), BigInt::one()),
                (w(&[1]), BigInt::one()),
                (w(&[1, 1]), BigInt::one()),
            ],
        )
        .unwrap();
        assert_eq!(s.augment(), BigInt::from(3));
        let t = GroupRingElement::from_terms(
            d,
            [(w(&[]), BigInt::from(2)), (w(&[1]), BigInt::from(-5))],
        )
        .unwrap();
        assert_eq!(t.augment(), BigInt::from(-3));
    }

    fn arb_ring_elem() -> impl Strategy<Value = GroupRingElement> {
        prop::collection::vec(
            (prop::collection::vec(prop_oneof![Just(1i32), Just(-1i32), Just(2), Just(-2)], 0..4), -4i64..=4),
            0..4,
        )
        .prop_map(|terms| {
            GroupRingElement::from_terms(
                free(2),
                terms.into_iter().map(|(letters, k)| {
                    (
                        GroupElement::word(free(2), &letters).unwrap(),
                        BigInt::from(k),
                    )
                }),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn augment_is_a_ring_homomorphism(a in arb_ring_elem(), b in arb_ring_elem()) {
            prop_assert_eq!(a.add(&b).unwrap().augment(), a.augment() + b.augment());
            prop_assert_eq!(a.mul(&b).unwrap().augment(), a.augment() * b.augment());
        }

        #[test]
        fn mul_distributes_over_add(a in arb_ring_elem(), b in arb_ring_elem(), c in arb_ring_elem()) {
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }
    }
}
