//! Cayley-Dickson elements.
//!
//! A level-`n` element is stored as a flat vector of `2^n` coefficients. The
//! pair view `(left ; right)` is positional: the left half holds the
//! coefficients of the level-`n-1` element `left`, the right half those of
//! `right`, and the element reads `left + right * u` where `u = e_{2^(n-1)}`
//! is the newly adjoined unit. With this layout `e_1 = i`, `e_2 = j`,
//! `e_3 = k`, `e_4 = l`, `e_5 = I = i*l`, and so on, and every embedding
//! `x -> (x ; 0)` preserves basis indices.

use std::fmt;
use std::ops::Neg;

use num_traits::{Inv, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Names for the first sixteen basis units (`e0` through `e15`).
///
/// `l` is the ASCII stand-in for the octonion unit usually written as a
/// script ell.
pub const BASIS_NAMES: [&str; 16] = [
    "1", "i", "j", "k", "l", "I", "J", "K", "L", "iL", "jL", "kL", "lL", "IL", "JL", "KL",
];

/// Index of a named unit, if `name` is one of [`BASIS_NAMES`].
pub fn basis_index_of(name: &str) -> Option<usize> {
    BASIS_NAMES.iter().position(|n| *n == name)
}

/// Pair products suggested by the complex, quaternion and octonion formulas.
///
/// For `x = (v1 ; v2)` and `y = (w1 ; w2)`:
///
/// * `Cm`: `(v1 w1 - v2 w2 ; v1 w2 + v2 w1)`
/// * `Qm`: `(v1 w1 - v2 conj(w2) ; v1 w2 + v2 conj(w1))`
/// * `Om`: `(v1 w1 - conj(w2) v2 ; w2 v1 + v2 conj(w1))`, the Cayley-Dickson
///   product
///
/// Only the outermost pair product is affected; products of halves always use
/// the Cayley-Dickson product. `Cm` and `Qm` exist to reproduce the
/// counterexamples that rule them out.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductVariant {
    Cm,
    Qm,
    #[default]
    Om,
}

impl ProductVariant {
    pub fn name(self) -> &'static str {
        match self {
            ProductVariant::Cm => "cm",
            ProductVariant::Qm => "qm",
            ProductVariant::Om => "om",
        }
    }
}

impl std::str::FromStr for ProductVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "cm" => Ok(ProductVariant::Cm),
            "qm" => Ok(ProductVariant::Qm),
            "om" => Ok(ProductVariant::Om),
            _ => Err(Error::Usage(format!("unknown product variant {s:?}"))),
        }
    }
}

/// An element of the level-`n` Cayley-Dickson algebra over `T`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CdElement<T> {
    level: usize,
    coeffs: Vec<T>,
}

fn check_level(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LevelMismatch { left, right })
    }
}

impl<T: Scalar> CdElement<T> {
    pub fn new(level: usize, coeffs: Vec<T>) -> Result<Self> {
        let dim = dim_of(level)?;
        if coeffs.len() != dim {
            return Err(Error::Dimension(format!(
                "level {level} needs {dim} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(CdElement { level, coeffs })
    }

    pub fn zero(level: usize) -> Self {
        CdElement {
            level,
            coeffs: vec![T::zero(); 1 << level],
        }
    }

    pub fn one(level: usize) -> Self {
        Self::scalar(level, T::one())
    }

    /// `a * 1` at the given level.
    pub fn scalar(level: usize, a: T) -> Self {
        let mut x = Self::zero(level);
        x.coeffs[0] = a;
        x
    }

    /// The unit `e_index`.
    pub fn basis(level: usize, index: usize) -> Result<Self> {
        Self::signed_basis(level, index, false)
    }

    /// `e_index`, or `-e_index` when `negative`.
    pub fn signed_basis(level: usize, index: usize, negative: bool) -> Result<Self> {
        let dim = dim_of(level)?;
        if index >= dim {
            return Err(Error::Dimension(format!(
                "basis index {index} out of range for level {level} (dimension {dim})"
            )));
        }
        let mut x = Self::zero(level);
        x.coeffs[index] = if negative { -T::one() } else { T::one() };
        Ok(x)
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `1`.
    pub fn real(&self) -> &T {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Splits `(left ; right)` into its two halves. `None` at level 0.
    pub fn split(&self) -> Option<(Self, Self)> {
        if self.level == 0 {
            return None;
        }
        let (l, r) = self.coeffs.split_at(self.dim() / 2);
        let level = self.level - 1;
        Some((
            CdElement {
                level,
                coeffs: l.to_vec(),
            },
            CdElement {
                level,
                coeffs: r.to_vec(),
            },
        ))
    }

    /// Builds `(left ; right)` one level up.
    pub fn from_halves(left: Self, right: Self) -> Result<Self> {
        check_level(left.level, right.level)?;
        let mut coeffs = left.coeffs;
        coeffs.extend(right.coeffs);
        Ok(CdElement {
            level: left.level + 1,
            coeffs,
        })
    }

    /// Embeds `x` as `(x ; 0)` one level up.
    pub fn promote(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(2 * self.dim(), T::zero());
        CdElement {
            level: self.level + 1,
            coeffs,
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_level(self.level, other.level)?;
        Ok(self.zip_with(other, |a, b| a.clone() + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        check_level(self.level, other.level)?;
        Ok(self.zip_with(other, |a, b| a.clone() - b))
    }

    pub fn scale(&self, a: &T) -> Self {
        self.map(|c| a.clone() * c)
    }

    /// `conj((v1 ; v2)) = (conj(v1) ; -v2)`; negates every coefficient but
    /// the real one.
    pub fn conj(&self) -> Self {
        CdElement {
            level: self.level,
            coeffs: conj_slice(&self.coeffs),
        }
    }

    /// The Cayley-Dickson product
    /// `(v1 ; v2)(w1 ; w2) = (v1 w1 - conj(w2) v2 ; w2 v1 + v2 conj(w1))`.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_level(self.level, other.level)?;
        Ok(CdElement {
            level: self.level,
            coeffs: mul_slices(&self.coeffs, &other.coeffs),
        })
    }

    /// Pair product per `variant`. Requires level at least 1.
    pub fn mul_variant(&self, variant: ProductVariant, other: &Self) -> Result<Self> {
        check_level(self.level, other.level)?;
        if self.level == 0 {
            return Err(Error::Dimension(
                "product variants act on pairs and need level >= 1".into(),
            ));
        }
        if variant == ProductVariant::Om {
            return self.try_mul(other);
        }
        let h = self.dim() / 2;
        let (v1, v2) = self.coeffs.split_at(h);
        let (w1, w2) = other.coeffs.split_at(h);
        let (left, right) = match variant {
            ProductVariant::Cm => (
                sub_slices(&mul_slices(v1, w1), &mul_slices(v2, w2)),
                add_slices(&mul_slices(v1, w2), &mul_slices(v2, w1)),
            ),
            ProductVariant::Qm => (
                sub_slices(&mul_slices(v1, w1), &mul_slices(v2, &conj_slice(w2))),
                add_slices(&mul_slices(v1, w2), &mul_slices(v2, &conj_slice(w1))),
            ),
            ProductVariant::Om => unreachable!(),
        };
        let mut coeffs = left;
        coeffs.extend(right);
        Ok(CdElement {
            level: self.level,
            coeffs,
        })
    }

    /// Coefficient-wise dot product.
    pub fn try_dot(&self, other: &Self) -> Result<T> {
        check_level(self.level, other.level)?;
        Ok(dot_slices(&self.coeffs, &other.coeffs))
    }

    /// The norm (squared Euclidean length), computed by halving:
    /// `||(v1 ; v2)|| = ||v1|| + ||v2||`, `||a|| = a * a` for scalars.
    pub fn norm(&self) -> T {
        norm_slice(&self.coeffs)
    }

    fn map(&self, f: impl Fn(&T) -> T) -> Self {
        CdElement {
            level: self.level,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&T, &T) -> T) -> Self {
        CdElement {
            level: self.level,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }
}

impl<T: Scalar + Inv<Output = T>> CdElement<T> {
    /// `x^-1 = (1 / ||x||) conj(x)`.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.conj().scale(&n.inv()))
    }
}

impl<T: Scalar> Neg for &CdElement<T> {
    type Output = CdElement<T>;

    fn neg(self) -> CdElement<T> {
        self.map(|c| -c.clone())
    }
}

impl<T: Scalar> Neg for CdElement<T> {
    type Output = CdElement<T>;

    fn neg(self) -> CdElement<T> {
        CdElement {
            level: self.level,
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

fn dim_of(level: usize) -> Result<usize> {
    if level >= usize::BITS as usize - 1 {
        return Err(Error::Dimension(format!("level {level} is too large")));
    }
    Ok(1 << level)
}

fn conj_slice<T: Scalar>(x: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(x.len());
    out.push(x[0].clone());
    out.extend(x[1..].iter().map(|c| -c.clone()));
    out
}

fn add_slices<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(a, b)| a.clone() + b).collect()
}

fn sub_slices<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    x.iter().zip(y).map(|(a, b)| a.clone() - b).collect()
}

fn dot_slices<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter()
        .zip(y)
        .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b)
}

fn norm_slice<T: Scalar>(x: &[T]) -> T {
    if x.len() == 1 {
        return x[0].clone() * &x[0];
    }
    let (l, r) = x.split_at(x.len() / 2);
    norm_slice(l) + norm_slice(r)
}

fn mul_slices<T: Scalar>(x: &[T], y: &[T]) -> Vec<T> {
    let n = x.len();
    if n == 1 {
        return vec![x[0].clone() * &y[0]];
    }
    // Basis-heavy workloads hit this constantly.
    if x.iter().all(Zero::is_zero) || y.iter().all(Zero::is_zero) {
        return vec![T::zero(); n];
    }
    let h = n / 2;
    let (v1, v2) = x.split_at(h);
    let (w1, w2) = y.split_at(h);
    let mut left = mul_slices(v1, w1);
    for (a, b) in left.iter_mut().zip(mul_slices(&conj_slice(w2), v2)) {
        *a = std::mem::replace(a, T::zero()) - b;
    }
    let mut right = mul_slices(w2, v1);
    for (a, b) in right.iter_mut().zip(mul_slices(v2, &conj_slice(w1))) {
        *a = std::mem::replace(a, T::zero()) + b;
    }
    left.extend(right);
    left
}

impl<T: Scalar + Signed + fmt::Display> CdElement<T> {
    /// Canonical text: `-1/2*e3 + e10`, `0` for zero. With `pretty` the units
    /// use [`BASIS_NAMES`] where available and the real part is bare.
    pub fn to_text(&self, pretty: bool) -> String {
        let mut out = String::new();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let mag = c.abs();
            let unit = if pretty && idx < BASIS_NAMES.len() {
                if idx == 0 {
                    None
                } else {
                    Some(BASIS_NAMES[idx].to_string())
                }
            } else {
                Some(format!("e{idx}"))
            };
            match unit {
                None => out.push_str(&mag.to_string()),
                Some(u) if mag.is_one() => out.push_str(&u),
                Some(u) => {
                    out.push_str(&mag.to_string());
                    out.push('*');
                    out.push_str(&u);
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<T: Scalar + Signed + fmt::Display> fmt::Display for CdElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text(f.alternate()))
    }
}

impl<T: fmt::Debug> fmt::Debug for CdElement<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "L{}{:?}", self.level, self.coeffs)
    }
}

impl<T: Scalar> CdElement<T> {
    /// Converts coefficients into another scalar type.
    pub fn map_scalar<U: Scalar>(&self, f: impl Fn(&T) -> U) -> CdElement<U> {
        CdElement {
            level: self.level,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    type E = CdElement<Rational>;

    fn el(level: usize, c: &[i64]) -> E {
        E::new(level, c.iter().map(|&n| int(n)).collect()).unwrap()
    }

    fn e(level: usize, idx: usize) -> E {
        E::basis(level, idx).unwrap()
    }

    #[test]
    fn make_element() {
        assert_eq!(el(0, &[3]).coeffs(), &[int(3)]);
        assert_eq!(el(1, &[1, 0]), E::one(1));
        assert_eq!(el(2, &[0, 1, 0, 0]), e(2, 1));
        assert!(matches!(
            E::new(2, vec![int(1); 3]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn basis_range() {
        assert!(matches!(E::basis(2, 4), Err(Error::Dimension(_))));
        assert_eq!(e(4, 8).coeffs()[8], int(1));
    }

    #[test]
    fn level_mismatch() {
        assert_eq!(
            e(2, 1).try_mul(&e(3, 1)),
            Err(Error::LevelMismatch { left: 2, right: 3 })
        );
        assert!(e(2, 1).try_add(&e(1, 1)).is_err());
        assert!(e(2, 1).try_dot(&e(1, 1)).is_err());
    }

    #[test]
    fn promote_keeps_index_and_norm() {
        assert_eq!(el(0, &[3]).promote(), el(1, &[3, 0]));
        assert_eq!(e(2, 1).promote(), e(3, 1));
        let x = el(2, &[1, -2, 3, 4]);
        assert_eq!(x.promote().norm(), x.norm());
    }

    #[test]
    fn add_neg_scale() {
        assert_eq!(
            el(1, &[1, 2]).try_add(&el(1, &[3, 4])).unwrap(),
            el(1, &[4, 6])
        );
        let x = el(2, &[1, -2, 3, 0]);
        assert_eq!(x.try_add(&E::zero(2)).unwrap(), x);
        assert!(x.try_add(&-&x).unwrap().is_zero());
        assert_eq!(-el(1, &[1, -2]), el(1, &[-1, 2]));
        assert_eq!(-E::zero(3), E::zero(3));
        assert_eq!(-(-x.clone()), x);
        assert_eq!(x.scale(&int(1)), x);
        let y = E::new(1, vec![rat(1, 2), int(3)]).unwrap();
        assert_eq!(y.scale(&int(2)), el(1, &[1, 6]));
        assert_eq!(x.scale(&int(2)).scale(&rat(1, 3)), x.scale(&rat(2, 3)));
        assert_eq!(-&x, x.scale(&int(-1)));
    }

    #[test]
    fn conj_examples() {
        assert_eq!(el(0, &[5]).conj(), el(0, &[5]));
        assert_eq!(el(2, &[1, 2, 3, 4]).conj(), el(2, &[1, -2, -3, -4]));
        let x = el(3, &[1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(x.conj().conj(), x);
        let (l, r) = x.split().unwrap();
        assert_eq!(x.conj(), E::from_halves(l.conj(), -r).unwrap());
    }

    #[test]
    fn quaternion_and_octonion_products() {
        let k = e(2, 1).try_mul(&e(2, 2)).unwrap();
        assert_eq!(k, e(2, 3));
        assert_eq!(e(2, 2).try_mul(&e(2, 1)).unwrap(), -e(2, 3));
        let (l, big_i, big_j, big_k) = (e(3, 4), e(3, 5), e(3, 6), e(3, 7));
        assert_eq!(l.try_mul(&big_i.try_mul(&big_j).unwrap()).unwrap(), big_k);
        assert_eq!(l.try_mul(&big_i).unwrap().try_mul(&big_j).unwrap(), -big_k);
    }

    #[test]
    fn sedenion_zero_divisor() {
        let x = e(4, 3).try_add(&e(4, 10)).unwrap();
        let y = e(4, 6).try_sub(&e(4, 15)).unwrap();
        assert!(x.try_mul(&y).unwrap().is_zero());
        assert_eq!(x.norm(), int(2));
        assert_eq!(y.norm(), int(2));
    }

    #[test]
    fn variant_counterexamples() {
        let v = E::from_halves(el(1, &[1, 0]), el(1, &[0, 1])).unwrap();
        let w = E::from_halves(el(1, &[1, 0]), el(1, &[0, -1])).unwrap();
        assert!(v.mul_variant(ProductVariant::Cm, &w).unwrap().is_zero());
        assert!(!v.mul_variant(ProductVariant::Om, &w).unwrap().is_zero());

        let v = E::from_halves(-e(2, 1), e(2, 2)).unwrap();
        let w = E::from_halves(e(2, 1), e(2, 2)).unwrap();
        assert!(v.mul_variant(ProductVariant::Qm, &w).unwrap().is_zero());
        assert!(!v.mul_variant(ProductVariant::Om, &w).unwrap().is_zero());
    }

    #[test]
    fn variants_agree_on_real_pairs() {
        let v = el(1, &[3, -2]);
        let w = el(1, &[5, 7]);
        let om = v.try_mul(&w).unwrap();
        assert_eq!(v.mul_variant(ProductVariant::Cm, &w).unwrap(), om);
        assert_eq!(v.mul_variant(ProductVariant::Qm, &w).unwrap(), om);
    }

    #[test]
    fn variant_needs_pairs() {
        assert!(matches!(
            el(0, &[1]).mul_variant(ProductVariant::Cm, &el(0, &[2])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn dot_and_norm() {
        assert_eq!(e(3, 1).try_dot(&e(3, 2)).unwrap(), int(0));
        assert_eq!(E::zero(4).norm(), int(0));
        let x = el(2, &[1, 2, 3, 4]);
        assert_eq!(x.norm(), x.try_dot(&x).unwrap());
        assert_eq!(x.norm(), int(30));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(E::one(3).inverse().unwrap(), E::one(3));
        assert_eq!(E::zero(2).inverse(), Err(Error::DivisionByZero));
        let x = e(4, 3).try_add(&e(4, 10)).unwrap();
        let half = rat(-1, 2);
        assert_eq!(x.inverse().unwrap(), x.scale(&half));
        let y = e(4, 6).try_sub(&e(4, 15)).unwrap();
        let expect = e(4, 6)
            .scale(&rat(-1, 2))
            .try_add(&e(4, 15).scale(&rat(1, 2)))
            .unwrap();
        assert_eq!(y.inverse().unwrap(), expect);
    }

    #[test]
    fn text_forms() {
        let x = E::new(2, vec![int(0), rat(3, 2), int(0), rat(-1, 2)]).unwrap();
        assert_eq!(x.to_string(), "3/2*e1 - 1/2*e3");
        assert_eq!(E::zero(3).to_string(), "0");
        let y = el(4, &[2, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]);
        assert_eq!(y.to_string(), "2*e0 - e3 + e10");
        assert_eq!(format!("{y:#}"), "2 - k + jL");
        assert_eq!(format!("{:#}", -E::one(1)), "-1");
    }

    #[test]
    fn generic_over_integers() {
        let i = CdElement::<i64>::basis(2, 1).unwrap();
        let j = CdElement::<i64>::basis(2, 2).unwrap();
        assert_eq!(i.try_mul(&j).unwrap(), CdElement::basis(2, 3).unwrap());
        let x = CdElement::<i64>::new(3, vec![1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        let y = CdElement::<i64>::new(3, vec![-3, 1, 4, -1, 5, -9, 2, 6]).unwrap();
        assert_eq!(x.try_mul(&y).unwrap().norm(), x.norm() * y.norm());
    }

    #[test]
    fn names() {
        assert_eq!(basis_index_of("k"), Some(3));
        assert_eq!(basis_index_of("I"), Some(5));
        assert_eq!(basis_index_of("L"), Some(8));
        assert_eq!(basis_index_of("KL"), Some(15));
        assert_eq!(basis_index_of("m"), None);
    }
}
