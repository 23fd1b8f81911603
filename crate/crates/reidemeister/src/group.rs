//! Words in free groups, vectors in free-abelian groups, and the
//! homomorphisms between them.
//!
//! Free-group elements are freely reduced words stored as signed generator
//! indices (negative = inverse), free-abelian elements are integer vectors.
//! Both are canonical forms, so equality of values is equality in the group.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Which group a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupDescriptor {
    /// Free group of the given rank.
    Free { rank: usize },
    /// Free abelian group Z^rank.
    FreeAbelian { rank: usize },
}

impl GroupDescriptor {
    pub fn free(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(GroupDescriptor::Free { rank })
    }

    pub fn free_abelian(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::InvalidRank);
        }
        Ok(GroupDescriptor::FreeAbelian { rank })
    }

    pub fn rank(&self) -> usize {
        match *self {
            GroupDescriptor::Free { rank } | GroupDescriptor::FreeAbelian { rank } => rank,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, GroupDescriptor::FreeAbelian { .. })
    }

    pub(crate) fn mismatch(&self, other: &GroupDescriptor) -> Error {
        Error::DescriptorMismatch {
            left: format!("{self:?}"),
            right: format!("{other:?}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Payload {
    Word(Vec<i32>),
    Vector(Vec<BigInt>),
}

/// An element of a free or free-abelian group, in canonical form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupElement {
    descriptor: GroupDescriptor,
    payload: Payload,
}

/// Order on letters: x1 < x1^{-1} < x2 < x2^{-1} < ...
fn letter_key(letter: i32) -> (u32, bool) {
    (letter.unsigned_abs(), letter < 0)
}

/// Freely reduces a letter sequence by cancelling adjacent inverse pairs.
fn reduce_letters<I: IntoIterator<Item = i32>>(letters: I) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for letter in letters {
        if out.last() == Some(&-letter) {
            out.pop();
        } else {
            out.push(letter);
        }
    }
    out
}

impl GroupElement {
    /// The identity element.
    pub fn identity(descriptor: GroupDescriptor) -> Self {
        let payload = match descriptor {
            GroupDescriptor::Free { .. } => Payload::Word(Vec::new()),
            GroupDescriptor::FreeAbelian { rank } => {
                Payload::Vector(vec![BigInt::zero(); rank])
            }
        };
        GroupElement {
            descriptor,
            payload,
        }
    }

    /// Builds the freely reduced word with the given letters. This is the
    /// free-reduction entry point: any letter sequence is accepted and the
    /// unique reduced form is returned.
    pub fn word(descriptor: GroupDescriptor, letters: &[i32]) -> Result<Self> {
        let GroupDescriptor::Free { rank } = descriptor else {
            return Err(Error::DescriptorMismatch {
                left: "word payload".into(),
                right: format!("{descriptor:?}"),
            });
        };
        for &letter in letters {
            let index = letter.unsigned_abs() as usize;
            if letter == 0 || index > rank {
                return Err(Error::IndexOutOfRange {
                    index: letter as i64,
                    rank,
                });
            }
        }
        Ok(GroupElement {
            descriptor,
            payload: Payload::Word(reduce_letters(letters.iter().copied())),
        })
    }

    /// Builds a free-abelian element from its coordinate vector.
    pub fn vector(descriptor: GroupDescriptor, coords: Vec<BigInt>) -> Result<Self> {
        let GroupDescriptor::FreeAbelian { rank } = descriptor else {
            return Err(Error::DescriptorMismatch {
                left: "vector payload".into(),
                right: format!("{descriptor:?}"),
            });
        };
        if coords.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in rank {rank}",
                coords.len()
            )));
        }
        Ok(GroupElement {
            descriptor,
            payload: Payload::Vector(coords),
        })
    }

    /// The `index`-th generator (1-based).
    pub fn generator(descriptor: GroupDescriptor, index: usize) -> Result<Self> {
        Self::generator_power(descriptor, index, 1)
    }

    /// The `index`-th generator raised to `exponent`.
    pub fn generator_power(
        descriptor: GroupDescriptor,
        index: usize,
        exponent: i64,
    ) -> Result<Self> {
        let rank = descriptor.rank();
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange {
                index: index as i64,
                rank,
            });
        }
        match descriptor {
            GroupDescriptor::Free { .. } => {
                let letter = if exponent >= 0 {
                    index as i32
                } else {
                    -(index as i32)
                };
                Ok(GroupElement {
                    descriptor,
                    payload: Payload::Word(vec![letter; exponent.unsigned_abs() as usize]),
                })
            }
            GroupDescriptor::FreeAbelian { rank } => {
                let mut coords = vec![BigInt::zero(); rank];
                coords[index - 1] = BigInt::from(exponent);
                Ok(GroupElement {
                    descriptor,
                    payload: Payload::Vector(coords),
                })
            }
        }
    }

    pub fn descriptor(&self) -> GroupDescriptor {
        self.descriptor
    }

    /// Letters of a word element, if this is a free-group element.
    pub fn letters(&self) -> Option<&[i32]> {
        match &self.payload {
            Payload::Word(w) => Some(w),
            Payload::Vector(_) => None,
        }
    }

    /// Coordinates of a vector element, if this is free-abelian.
    pub fn coords(&self) -> Option<&[BigInt]> {
        match &self.payload {
            Payload::Vector(v) => Some(v),
            Payload::Word(_) => None,
        }
    }

    pub fn is_identity(&self) -> bool {
        match &self.payload {
            Payload::Word(w) => w.is_empty(),
            Payload::Vector(v) => v.iter().all(Zero::is_zero),
        }
    }

    /// Word length for words, L1 norm for vectors.
    pub fn length(&self) -> usize {
        match &self.payload {
            Payload::Word(w) => w.len(),
            Payload::Vector(v) => v
                .iter()
                .map(|c| c.abs().try_into().unwrap_or(usize::MAX))
                .sum(),
        }
    }

    /// Image under the abelianization: the exponent-sum vector.
    pub fn exponent_sums(&self) -> Vec<BigInt> {
        match &self.payload {
            Payload::Word(w) => {
                let mut sums = vec![BigInt::zero(); self.descriptor.rank()];
                for &letter in w {
                    let index = letter.unsigned_abs() as usize - 1;
                    if letter > 0 {
                        sums[index] += 1;
                    } else {
                        sums[index] -= 1;
                    }
                }
                sums
            }
            Payload::Vector(v) => v.clone(),
        }
    }

    /// Group multiplication: concatenate-and-reduce for words, coordinate
    /// sum for vectors.
    pub fn mul(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.descriptor != other.descriptor {
            return Err(self.descriptor.mismatch(&other.descriptor));
        }
        let payload = match (&self.payload, &other.payload) {
            (Payload::Word(a), Payload::Word(b)) => {
                let mut out = a.clone();
                for &letter in b {
                    if out.last() == Some(&-letter) {
                        out.pop();
                    } else {
                        out.push(letter);
                    }
                }
                Payload::Word(out)
            }
            (Payload::Vector(a), Payload::Vector(b)) => {
                Payload::Vector(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            _ => unreachable!("equal descriptors imply equal payload kinds"),
        };
        Ok(GroupElement {
            descriptor: self.descriptor,
            payload,
        })
    }

    /// Group inverse.
    pub fn inv(&self) -> GroupElement {
        let payload = match &self.payload {
            Payload::Word(w) => Payload::Word(w.iter().rev().map(|l| -l).collect()),
            Payload::Vector(v) => Payload::Vector(v.iter().map(|c| -c).collect()),
        };
        GroupElement {
            descriptor: self.descriptor,
            payload,
        }
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.descriptor
            .cmp(&other.descriptor)
            .then_with(|| match (&self.payload, &other.payload) {
                // length-lexicographic on words
                (Payload::Word(a), Payload::Word(b)) => {
                    a.len().cmp(&b.len()).then_with(|| {
                        for (x, y) in a.iter().zip(b.iter()) {
                            let c = letter_key(*x).cmp(&letter_key(*y));
                            if c != Ordering::Equal {
                                return c;
                            }
                        }
                        Ordering::Equal
                    })
                }
                // plain lexicographic on vectors
                (Payload::Vector(a), Payload::Vector(b)) => a.cmp(b),
                (Payload::Word(_), Payload::Vector(_)) => Ordering::Less,
                (Payload::Vector(_), Payload::Word(_)) => Ordering::Greater,
            })
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.payload {
            Payload::Word(w) => {
                if w.is_empty() {
                    return write!(f, "e");
                }
                for (i, letter) in w.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    if *letter > 0 {
                        write!(f, "x{letter}")?;
                    } else {
                        write!(f, "X{}", -letter)?;
                    }
                }
                Ok(())
            }
            Payload::Vector(v) => {
                write!(f, "(")?;
                for (i, coord) in v.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{coord}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// A homomorphism between free / free-abelian groups, given by generator
/// images. A free-abelian source requires an abelian target (arbitrary
/// images on Z^n do not define a homomorphism into a free group).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Homomorphism {
    source: GroupDescriptor,
    target: GroupDescriptor,
    images: Vec<GroupElement>,
}

impl Homomorphism {
    pub fn new(
        source: GroupDescriptor,
        target: GroupDescriptor,
        images: Vec<GroupElement>,
    ) -> Result<Self> {
        if images.len() != source.rank() {
            return Err(Error::InvalidHomomorphism(format!(
                "{} generator images for source rank {}",
                images.len(),
                source.rank()
            )));
        }
        if let Some(image) = images.iter().find(|im| im.descriptor() != target) {
            return Err(image.descriptor().mismatch(&target));
        }
        if source.is_abelian() && !target.is_abelian() {
            return Err(Error::InvalidHomomorphism(
                "free-abelian source requires a free-abelian target".into(),
            ));
        }
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    /// The identity homomorphism.
    pub fn identity(descriptor: GroupDescriptor) -> Self {
        let images = (1..=descriptor.rank())
            .map(|i| GroupElement::generator(descriptor, i).expect("valid index"))
            .collect();
        Homomorphism {
            source: descriptor,
            target: descriptor,
            images,
        }
    }

    /// Z^cols -> Z^rows given by an integer matrix (column j = image of the
    /// j-th generator).
    pub fn from_matrix(matrix: &IntMatrix) -> Result<Self> {
        let source = GroupDescriptor::free_abelian(matrix.cols())?;
        let target = GroupDescriptor::free_abelian(matrix.rows())?;
        let images = (0..matrix.cols())
            .map(|j| GroupElement::vector(target, matrix.column(j)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Homomorphism {
            source,
            target,
            images,
        })
    }

    pub fn source(&self) -> GroupDescriptor {
        self.source
    }

    pub fn target(&self) -> GroupDescriptor {
        self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    /// Applies the homomorphism: substitute generator images and reduce.
    pub fn apply(&self, g: &GroupElement) -> Result<GroupElement> {
        if g.descriptor() != self.source {
            return Err(g.descriptor().mismatch(&self.source));
        }
        match &g.payload {
            Payload::Word(w) => {
                let mut acc = GroupElement::identity(self.target);
                for &letter in w {
                    let image = &self.images[letter.unsigned_abs() as usize - 1];
                    let factor = if letter > 0 { image.clone() } else { image.inv() };
                    acc = acc.mul(&factor)?;
                }
                Ok(acc)
            }
            Payload::Vector(v) => {
                // abelian target by construction: matrix-vector product
                let coords = self.abelianized_matrix().mul_vec(v)?;
                GroupElement::vector(self.target, coords)
            }
        }
    }

    /// The induced map on abelianizations as a target.rank x source.rank
    /// integer matrix (column j = exponent sums of the j-th image).
    pub fn abelianized_matrix(&self) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.target.rank(), self.source.rank());
        for (j, image) in self.images.iter().enumerate() {
            for (i, value) in image.exponent_sums().into_iter().enumerate() {
                m.set(i, j, value);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn free(rank: usize) -> GroupDescriptor {
        GroupDescriptor::free(rank).unwrap()
    }

    fn abelian(rank: usize) -> GroupDescriptor {
        GroupDescriptor::free_abelian(rank).unwrap()
    }

    fn w(rank: usize, letters: &[i32]) -> GroupElement {
        GroupElement::word(free(rank), letters).unwrap()
    }

    fn v(coords: &[i64]) -> GroupElement {
        GroupElement::vector(
            abelian(coords.len()),
            coords.iter().map(|&c| BigInt::from(c)).collect(),
        )
        .unwrap()
    }

    #[test]
    fn reduction_cancels_inverse_pairs() {
        assert!(w(2, &[1, -1]).is_identity());
        assert!(w(2, &[1, 2, -2, -1]).is_identity());
        assert_eq!(w(2, &[1, 2, -1]).letters().unwrap(), &[1, 2, -1]);
    }

    #[test]
    fn word_rejects_out_of_range_index() {
        assert!(matches!(
            GroupElement::word(free(2), &[3]),
            Err(Error::IndexOutOfRange { index: 3, rank: 2 })
        ));
        assert!(GroupElement::word(free(2), &[0]).is_err());
    }

    #[test]
    fn mul_and_inv_examples() {
        let x1 = w(2, &[1]);
        assert!(x1.mul(&x1.inv()).unwrap().is_identity());
        assert_eq!(v(&[1, 2]).mul(&v(&[3, -1])).unwrap(), v(&[4, 1]));
        // (x1 x2)(x2^{-1} x3)
        assert_eq!(
            w(3, &[1, 2]).mul(&w(3, &[-2, 3])).unwrap(),
            w(3, &[1, 3])
        );
        assert_eq!(w(2, &[1, 2]).inv(), w(2, &[-2, -1]));
        assert_eq!(v(&[2, -3]).inv(), v(&[-2, 3]));
        assert!(GroupElement::identity(free(2)).inv().is_identity());
    }

    #[test]
    fn mul_rejects_mismatched_descriptors() {
        assert!(matches!(
            w(2, &[1]).mul(&w(3, &[1])),
            Err(Error::DescriptorMismatch { .. })
        ));
    }

    #[test]
    fn hom_apply_examples() {
        let id = Homomorphism::identity(free(2));
        let g = w(2, &[1, -2, 1]);
        assert_eq!(id.apply(&g).unwrap(), g);

        // circle degree 2 as a 1x1 matrix
        let deg2 =
            Homomorphism::from_matrix(&IntMatrix::from_rows(&[vec![2]]).unwrap()).unwrap();
        assert_eq!(deg2.apply(&v(&[1])).unwrap(), v(&[2]));

        // x -> xy, y -> x applied to xy gives xyx
        let h = Homomorphism::new(
            free(2),
            free(2),
            vec![w(2, &[1, 2]), w(2, &[1])],
        )
        .unwrap();
        assert_eq!(h.apply(&w(2, &[1, 2])).unwrap(), w(2, &[1, 2, 1]));
    }

    #[test]
    fn abelian_source_needs_abelian_target() {
        // word image matches the free target, but the abelian source rules
        // the homomorphism out
        let err = Homomorphism::new(abelian(1), free(1), vec![w(1, &[1])]);
        assert!(matches!(err, Err(Error::InvalidHomomorphism(_))));
        // image from the wrong group entirely
        let err = Homomorphism::new(
            abelian(1),
            free(1),
            vec![GroupElement::vector(abelian(1), vec![BigInt::one()]).unwrap()],
        );
        assert!(matches!(err, Err(Error::DescriptorMismatch { .. })));
    }

    #[test]
    fn abelianized_matrix_counts_exponents() {
        let h = Homomorphism::new(
            free(2),
            free(2),
            vec![w(2, &[1, 2, -1]), w(2, &[2, 2])],
        )
        .unwrap();
        let m = h.abelianized_matrix();
        assert_eq!(*m.get(0, 0), BigInt::zero());
        assert_eq!(*m.get(1, 0), BigInt::one());
        assert_eq!(*m.get(0, 1), BigInt::zero());
        assert_eq!(*m.get(1, 1), BigInt::from(2));
    }

    #[test]
    fn word_ordering_is_length_lex() {
        let e = GroupElement::identity(free(2));
        assert!(e < w(2, &[1]));
        assert!(w(2, &[1]) < w(2, &[-1]));
        assert!(w(2, &[-1]) < w(2, &[2]));
        assert!(w(2, &[2]) < w(2, &[1, 1]));
        assert!(w(2, &[1, 1]) < w(2, &[1, 2]));
    }

    fn arb_letters(rank: usize) -> impl Strategy<Value = Vec<i32>> {
        let r = rank as i32;
        prop::collection::vec((1..=r).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]), 0..12)
    }

    proptest! {
        #[test]
        fn word_times_inverse_is_identity(letters in arb_letters(3)) {
            let g = w(3, &letters);
            prop_assert!(g.mul(&g.inv()).unwrap().is_identity());
            prop_assert!(g.inv().mul(&g).unwrap().is_identity());
        }

        #[test]
        fn reduce_of_concat_with_inverse(letters in arb_letters(3)) {
            let mut doubled = letters.clone();
            doubled.extend(letters.iter().rev().map(|l| -l));
            prop_assert!(w(3, &doubled).is_identity());
        }

        #[test]
        fn mul_associative(a in arb_letters(3), b in arb_letters(3), c in arb_letters(3)) {
            let (a, b, c) = (w(3, &a), w(3, &b), w(3, &c));
            prop_assert_eq!(
                a.mul(&b).unwrap().mul(&c).unwrap(),
                a.mul(&b.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn identity_laws(a in arb_letters(3)) {
            let a = w(3, &a);
            let e = GroupElement::identity(free(3));
            prop_assert_eq!(a.mul(&e).unwrap(), a.clone());
            prop_assert_eq!(e.mul(&a).unwrap(), a);
        }

        #[test]
        fn hom_is_multiplicative(a in arb_letters(2), b in arb_letters(2)) {
            let h = Homomorphism::new(
                free(2),
                free(2),
                vec![w(2, &[1, 2]), w(2, &[-1])],
            ).unwrap();
            let (a, b) = (w(2, &a), w(2, &b));
            prop_assert_eq!(
                h.apply(&a.mul(&b).unwrap()).unwrap(),
                h.apply(&a).unwrap().mul(&h.apply(&b).unwrap()).unwrap()
            );
        }
    }
}
