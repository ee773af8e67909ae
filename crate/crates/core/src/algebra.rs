//! Arithmetic in monoid algebras `R[M]` over ℤ, ℚ and ℤ/m.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{fmt_vec, Error, Result};
use crate::linalg::{add, neg, scale, IntVec};
use crate::monoid::{AffineMonoid, DifferenceExtension};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffRing {
    Integers,
    Rationals,
    IntegersMod(u64),
}

impl CoeffRing {
    pub fn integers_mod(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(CoeffRing::IntegersMod(m))
    }

    /// The canonical representative of `c`, or an error if `c` is not in the ring.
    pub fn normalize(&self, c: &BigRational) -> Result<BigRational> {
        match self {
            CoeffRing::Rationals => Ok(c.clone()),
            _ if !c.is_integer() => Err(Error::InvalidCoefficient(c.to_string())),
            CoeffRing::Integers => Ok(c.clone()),
            CoeffRing::IntegersMod(m) => Ok(BigRational::from_integer(
                c.to_integer().mod_floor(&BigInt::from(*m)),
            )),
        }
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "ZZ"),
            CoeffRing::Rationals => write!(f, "QQ"),
            CoeffRing::IntegersMod(m) => write!(f, "ZZ/{m}"),
        }
    }
}

/// An element `Σ c_m e_m` of `R[M]`; zero coefficients are never stored.
#[derive(Clone, Debug)]
pub struct AlgebraElement {
    ring: CoeffRing,
    monoid: Arc<AffineMonoid>,
    terms: BTreeMap<IntVec, BigRational>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring
            && same_monoid(&self.monoid, &other.monoid)
            && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

fn same_monoid(a: &Arc<AffineMonoid>, b: &Arc<AffineMonoid>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl AlgebraElement {
    pub fn zero(ring: CoeffRing, monoid: Arc<AffineMonoid>) -> Self {
        Self {
            ring,
            monoid,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: CoeffRing, monoid: Arc<AffineMonoid>) -> Self {
        let zero = vec![BigInt::zero(); monoid.ambient_rank()];
        Self::from_terms(ring, monoid, vec![(zero, BigRational::one())]).expect("e_0 is valid")
    }

    /// The image of `c` under the structural map `R → R[M]`.
    pub fn constant(ring: CoeffRing, monoid: Arc<AffineMonoid>, c: BigRational) -> Result<Self> {
        let zero = vec![BigInt::zero(); monoid.ambient_rank()];
        Self::from_terms(ring, monoid, vec![(zero, c)])
    }

    /// Sums repeated keys, checks membership and coefficients, prunes zeros.
    pub fn from_terms(
        ring: CoeffRing,
        monoid: Arc<AffineMonoid>,
        terms: Vec<(IntVec, BigRational)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ring, monoid);
        for (key, c) in terms {
            if !out.monoid.contains(&key) {
                return Err(Error::NotInMonoid(key));
            }
            let c = ring.normalize(&c)?;
            out.accumulate(key, c);
        }
        Ok(out)
    }

    pub fn from_i64_terms(
        ring: CoeffRing,
        monoid: Arc<AffineMonoid>,
        terms: &[(&[i64], i64)],
    ) -> Result<Self> {
        let terms = terms
            .iter()
            .map(|(k, c)| {
                (
                    crate::linalg::ivec(k),
                    BigRational::from_integer((*c).into()),
                )
            })
            .collect();
        Self::from_terms(ring, monoid, terms)
    }

    fn accumulate(&mut self, key: IntVec, c: BigRational) {
        let sum = match self.terms.remove(&key) {
            Some(old) => old + c,
            None => c,
        };
        let sum = self
            .ring
            .normalize(&sum)
            .expect("ring closed under addition");
        if !sum.is_zero() {
            self.terms.insert(key, sum);
        }
    }

    pub fn ring(&self) -> CoeffRing {
        self.ring
    }

    pub fn monoid(&self) -> &Arc<AffineMonoid> {
        &self.monoid
    }

    pub fn terms(&self) -> &BTreeMap<IntVec, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &[BigInt]) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch);
        }
        if !same_monoid(&self.monoid, &other.monoid) {
            return Err(Error::MonoidMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.accumulate(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(self.ring, self.monoid.clone());
        for (k, c) in &self.terms {
            out.accumulate(k.clone(), -c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.ring, self.monoid.clone());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.accumulate(add(a, b), x * y);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.ring, self.monoid.clone()), |acc, _| {
            acc.multiply(self).expect("same ring and monoid")
        })
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| format!("{c}*e{}", fmt_vec(k)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `e_m`.
pub fn exp_map(ring: CoeffRing, monoid: Arc<AffineMonoid>, m: &[BigInt]) -> Result<AlgebraElement> {
    AlgebraElement::from_terms(ring, monoid, vec![(m.to_vec(), BigRational::one())])
}

pub fn multiply(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
    a.multiply(b)
}

/// The coefficient sum, a ring morphism `R[M] → R` retracting the structural map.
pub fn augmentation(a: &AlgebraElement) -> BigRational {
    let sum = a.terms.values().fold(BigRational::zero(), |acc, c| acc + c);
    a.ring.normalize(&sum).expect("ring closed under addition")
}

/// The image of `a` under `R[M] → R[M − T]`.
pub fn localization_image(a: &AlgebraElement, ext: &DifferenceExtension) -> Result<AlgebraElement> {
    if *a.monoid != ext.base {
        return Err(Error::MonoidMismatch);
    }
    Ok(AlgebraElement {
        ring: a.ring,
        monoid: Arc::new(ext.result.clone()),
        terms: a.terms.clone(),
    })
}

/// Writes `b ∈ R[M − T]` as `image(a) · e_{−t}^k` with `a ∈ R[M]` and `t = ΣT`.
pub fn fraction_form(
    b: &AlgebraElement,
    ext: &DifferenceExtension,
) -> Result<(AlgebraElement, u64)> {
    if *b.monoid != ext.result {
        return Err(Error::MonoidMismatch);
    }
    let n = ext.base.ambient_rank();
    let t = ext
        .inverted
        .iter()
        .fold(vec![BigInt::zero(); n], |acc, x| add(&acc, x));
    let mut k = 0u64;
    for key in b.terms.keys() {
        let mut j = 0u64;
        let mut x = key.clone();
        while !ext.base.contains(&x) {
            x = add(&x, &t);
            j += 1;
        }
        k = k.max(j);
    }
    let shift = scale(&BigInt::from(k), &t);
    let terms = b
        .terms
        .iter()
        .map(|(key, c)| (add(key, &shift), c.clone()))
        .collect();
    let a = AlgebraElement::from_terms(b.ring, Arc::new(ext.base.clone()), terms)?;
    Ok((a, k))
}

/// The inverse `e_{−t}` of `e_t` in `R[M − T]`, for `t` one of the inverted elements.
pub fn inverse_of_inverted(
    ring: CoeffRing,
    ext: &DifferenceExtension,
    t: &[BigInt],
) -> Result<AlgebraElement> {
    if !ext.inverted.iter().any(|x| x.as_slice() == t) {
        return Err(Error::NotInMonoid(neg(t)));
    }
    exp_map(ring, Arc::new(ext.result.clone()), &neg(t))
}

/// The coefficient ring morphisms base change is implemented for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffMorphism {
    IntegersToMod(u64),
    IntegersToRationals,
    /// `ℤ/from → ℤ/to`, defined when `to` divides `from`.
    ModToMod {
        from: u64,
        to: u64,
    },
}

impl CoeffMorphism {
    pub fn source(&self) -> CoeffRing {
        match self {
            CoeffMorphism::IntegersToMod(_) | CoeffMorphism::IntegersToRationals => {
                CoeffRing::Integers
            }
            CoeffMorphism::ModToMod { from, .. } => CoeffRing::IntegersMod(*from),
        }
    }

    pub fn target(&self) -> Result<CoeffRing> {
        match self {
            CoeffMorphism::IntegersToMod(m) => CoeffRing::integers_mod(*m),
            CoeffMorphism::IntegersToRationals => Ok(CoeffRing::Rationals),
            CoeffMorphism::ModToMod { from, to } => {
                CoeffRing::integers_mod(*from)?;
                let target = CoeffRing::integers_mod(*to)?;
                if from % to != 0 {
                    return Err(Error::UnsupportedMorphism(format!(
                        "ZZ/{from} -> ZZ/{to}: {to} does not divide {from}"
                    )));
                }
                Ok(target)
            }
        }
    }
}

/// `R[M] → R′[M]`, applying the coefficient morphism termwise.
pub fn base_change(a: &AlgebraElement, morphism: CoeffMorphism) -> Result<AlgebraElement> {
    if a.ring != morphism.source() {
        return Err(Error::UnsupportedMorphism(format!(
            "{:?} does not start at {}",
            morphism, a.ring
        )));
    }
    let target = morphism.target()?;
    let mut out = AlgebraElement::zero(target, a.monoid.clone());
    for (k, c) in &a.terms {
        out.accumulate(k.clone(), target.normalize(c)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::Polycone;
    use crate::linalg::ivec;
    use crate::monoid::{dual_monoid, monoid_of_differences};

    fn n2() -> Arc<AffineMonoid> {
        Arc::new(AffineMonoid::from_i64(2, &[&[1, 0], &[0, 1]]).unwrap())
    }

    fn int(x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    #[test]
    fn exp_is_multiplicative() {
        let m = n2();
        let zz = CoeffRing::Integers;
        let one = exp_map(zz, m.clone(), &ivec(&[0, 0])).unwrap();
        assert_eq!(one, AlgebraElement::one(zz, m.clone()));
        let a = exp_map(zz, m.clone(), &ivec(&[1, 0])).unwrap();
        let b = exp_map(zz, m.clone(), &ivec(&[0, 1])).unwrap();
        assert_eq!(
            a.multiply(&b).unwrap(),
            exp_map(zz, m.clone(), &ivec(&[1, 1])).unwrap()
        );
        assert_eq!(
            exp_map(zz, m, &ivec(&[-1, 0])).unwrap_err(),
            Error::NotInMonoid(ivec(&[-1, 0]))
        );
    }

    #[test]
    fn characteristic_two() {
        let m = n2();
        let f2 = CoeffRing::integers_mod(2).unwrap();
        let e = exp_map(f2, m.clone(), &ivec(&[1, 0])).unwrap();
        assert!(e.add(&e).unwrap().is_zero());
        let s = e.add(&exp_map(f2, m, &ivec(&[0, 1])).unwrap()).unwrap();
        let sq = s.multiply(&s).unwrap();
        assert_eq!(sq.terms().len(), 2);
        assert_eq!(sq.coefficient(&ivec(&[1, 1])), int(0));
    }

    #[test]
    fn binomial_square() {
        let m = n2();
        let s =
            AlgebraElement::from_i64_terms(CoeffRing::Integers, m, &[(&[1, 0], 1), (&[0, 1], 1)])
                .unwrap();
        let sq = s.multiply(&s).unwrap();
        assert_eq!(sq.coefficient(&ivec(&[2, 0])), int(1));
        assert_eq!(sq.coefficient(&ivec(&[1, 1])), int(2));
        assert_eq!(sq.coefficient(&ivec(&[0, 2])), int(1));
        assert_eq!(
            sq.multiply(&AlgebraElement::one(
                CoeffRing::Integers,
                sq.monoid().clone()
            ))
            .unwrap(),
            sq
        );
    }

    #[test]
    fn mismatches_and_bad_moduli() {
        let m = n2();
        let a = AlgebraElement::one(CoeffRing::Integers, m.clone());
        let b = AlgebraElement::one(CoeffRing::Rationals, m);
        assert_eq!(a.multiply(&b), Err(Error::RingMismatch));
        let other = Arc::new(AffineMonoid::from_i64(2, &[&[1, 0]]).unwrap());
        let c = AlgebraElement::one(CoeffRing::Integers, other);
        assert_eq!(a.add(&c), Err(Error::MonoidMismatch));
        assert_eq!(CoeffRing::integers_mod(1), Err(Error::InvalidModulus(1)));
        assert!(AlgebraElement::constant(
            CoeffRing::Integers,
            a.monoid().clone(),
            BigRational::new(1.into(), 2.into())
        )
        .is_err());
    }

    #[test]
    fn augmentation_values() {
        let m = n2();
        let a = AlgebraElement::from_i64_terms(
            CoeffRing::Integers,
            m.clone(),
            &[(&[1, 0], 2), (&[0, 1], 3)],
        )
        .unwrap();
        assert_eq!(augmentation(&a), int(5));
        assert_eq!(
            augmentation(&AlgebraElement::one(CoeffRing::Integers, m)),
            int(1)
        );
    }

    #[test]
    fn localization_makes_units() {
        let n = AffineMonoid::from_i64(1, &[&[1]]).unwrap();
        let ext = monoid_of_differences(&n, &[ivec(&[1])]).unwrap();
        let zz = CoeffRing::Integers;
        let e1 = exp_map(zz, Arc::new(n), &ivec(&[1])).unwrap();
        let image = localization_image(&e1, &ext).unwrap();
        let inv = inverse_of_inverted(zz, &ext, &ivec(&[1])).unwrap();
        assert_eq!(
            image.multiply(&inv).unwrap(),
            AlgebraElement::one(zz, inv.monoid().clone())
        );

        let ext = monoid_of_differences(&n2(), &[ivec(&[1, 1])]).unwrap();
        let inv = inverse_of_inverted(zz, &ext, &ivec(&[1, 1])).unwrap();
        let b = AlgebraElement::from_i64_terms(
            zz,
            inv.monoid().clone(),
            &[(&[-1, 0], 1), (&[0, 2], 4)],
        )
        .unwrap();
        let (a, k) = fraction_form(&b, &ext).unwrap();
        assert_eq!(k, 1);
        let back = localization_image(&a, &ext)
            .unwrap()
            .multiply(&inv.pow(k as u32))
            .unwrap();
        assert_eq!(back, b);
    }

    #[test]
    fn base_changes() {
        let m = Arc::new(dual_monoid(
            &Polycone::from_i64_rays(2, &[&[1, 0], &[0, 1]]).unwrap(),
        ));
        let a =
            AlgebraElement::from_i64_terms(CoeffRing::Integers, m, &[(&[1, 0], 1), (&[0, 1], 2)])
                .unwrap();
        let r = base_change(&a, CoeffMorphism::IntegersToMod(2)).unwrap();
        assert_eq!(r.terms().len(), 1);
        let q = base_change(&a, CoeffMorphism::IntegersToRationals).unwrap();
        assert_eq!(q.terms().len(), 2);
        assert!(base_change(&q, CoeffMorphism::IntegersToMod(2)).is_err());
        let m6 = base_change(&a, CoeffMorphism::IntegersToMod(6)).unwrap();
        assert!(base_change(&m6, CoeffMorphism::ModToMod { from: 6, to: 3 }).is_ok());
        assert!(base_change(&m6, CoeffMorphism::ModToMod { from: 6, to: 4 }).is_err());
    }
}
