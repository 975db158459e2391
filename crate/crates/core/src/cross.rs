//! Cross products in three and seven dimensions.
//!
//! A pure vector `a` in `Q^3` (or `Q^7`) is identified with the quaternion
//! (octonion) `a_1 e_1 + ... + a_d e_d`. For pure `a`, `b`:
//!
//! ```text
//! embed(a) * embed(b) = -(a . b) * 1 + embed(a x b)
//! ```
//!
//! so the cross product is the imaginary part of the product and the dot
//! product is the negated real part.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::random::{sample_coeffs, RandomStream};
use crate::{Element, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureVector {
    comps: Vec<Rational>,
}

impl PureVector {
    pub fn new(comps: Vec<Rational>) -> Result<Self> {
        match comps.len() {
            3 | 7 => Ok(PureVector { comps }),
            n => Err(Error::Dimension(format!(
                "cross products exist in dimensions 3 and 7, not {n}"
            ))),
        }
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[Rational] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Result<Rational> {
        check_dims(self, other)?;
        Ok(self
            .comps
            .iter()
            .zip(&other.comps)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b))
    }

    /// Squared length.
    pub fn norm(&self) -> Rational {
        self.comps
            .iter()
            .fold(Rational::zero(), |acc, a| acc + a * a)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dims(self, other)?;
        Ok(PureVector {
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, s: &Rational) -> Self {
        PureVector {
            comps: self.comps.iter().map(|a| a * s).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        PureVector {
            comps: self.comps.iter().map(|a| -a).collect(),
        }
    }
}

impl std::fmt::Display for PureVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl Serialize for PureVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn check_dims(a: &PureVector, b: &PureVector) -> Result<()> {
    if a.dim() == b.dim() {
        Ok(())
    } else {
        Err(Error::Dimension(format!(
            "vector dimensions differ: {} vs {}",
            a.dim(),
            b.dim()
        )))
    }
}

fn level_for(dim: usize) -> usize {
    if dim == 3 {
        2
    } else {
        3
    }
}

/// `(0, a_1, ..., a_d)` as a quaternion (d = 3) or octonion (d = 7).
pub fn embed_pure(v: &PureVector) -> Element {
    let mut coeffs = Vec::with_capacity(v.dim() + 1);
    coeffs.push(Rational::zero());
    coeffs.extend(v.comps.iter().cloned());
    Element::new(level_for(v.dim()), coeffs).expect("dimension 3 or 7 embeds at level 2 or 3")
}

/// Imaginary part of a quaternion or octonion.
pub fn project(x: &Element) -> Result<PureVector> {
    match x.level() {
        2 | 3 => PureVector::new(x.coeffs()[1..].to_vec()),
        l => Err(Error::Dimension(format!(
            "no pure-vector projection at level {l}"
        ))),
    }
}

pub fn cross(a: &PureVector, b: &PureVector) -> Result<PureVector> {
    check_dims(a, b)?;
    let p = embed_pure(a).try_mul(&embed_pure(b))?;
    project(&p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct JacobiOutcome {
    pub holds: bool,
    pub witness: Option<[PureVector; 3]>,
}

/// Outcome of [`cross_identities_check`]. Each flag covers every sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub dim: usize,
    pub samples: u64,
    pub seed: u64,
    /// `(a x b) . a = 0` and `(a x b) . b = 0`.
    pub orthogonality: bool,
    /// `a x b = -(b x a)`.
    pub anticommutativity: bool,
    /// `(a + s c) x b = a x b + s (c x b)` and the mirrored law.
    pub bilinearity: bool,
    /// `||a x b|| = ||a|| ||b|| - (a . b)^2`.
    pub lagrange: bool,
    /// `embed(a) embed(b) = -(a . b) 1 + embed(a x b)`.
    pub decomposition: bool,
    /// `a x (b x c) + b x (c x a) + c x (a x b) = 0`; holds for dimension 3
    /// only.
    pub jacobi: JacobiOutcome,
}

impl CrossReport {
    /// All identities that hold in both dimensions.
    pub fn identities_hold(&self) -> bool {
        self.orthogonality
            && self.anticommutativity
            && self.bilinearity
            && self.lagrange
            && self.decomposition
    }
}

struct Sample {
    a: PureVector,
    b: PureVector,
    c: PureVector,
    s: Rational,
}

fn draw(dim: usize, seed: u64, index: u64) -> Sample {
    let mut stream = RandomStream::for_sample(seed, index);
    let mut v = || PureVector::new(sample_coeffs(dim, &mut stream)).expect("dim is 3 or 7");
    let (a, b, c) = (v(), v(), v());
    let s = stream.next_rational();
    Sample { a, b, c, s }
}

/// `a x (b x c) + b x (c x a) + c x (a x b)`.
pub fn jacobi_sum(a: &PureVector, b: &PureVector, c: &PureVector) -> Result<PureVector> {
    let t1 = cross(a, &cross(b, c)?)?;
    let t2 = cross(b, &cross(c, a)?)?;
    let t3 = cross(c, &cross(a, b)?)?;
    t1.add(&t2)?.add(&t3)
}

fn check_sample(smp: &Sample) -> [bool; 6] {
    let Sample { a, b, c, s } = smp;
    let ab = cross(a, b).expect("same dim");
    let ba = cross(b, a).expect("same dim");
    let dot_ab = a.dot(b).expect("same dim");
    let orth = ab.dot(a).expect("same dim").is_zero() && ab.dot(b).expect("same dim").is_zero();
    let anti = ab == ba.neg();
    let left = cross(&a.add(&c.scale(s)).expect("same dim"), b).expect("same dim");
    let left_expect = ab
        .add(&cross(c, b).expect("same dim").scale(s))
        .expect("same dim");
    let right = cross(a, &b.add(&c.scale(s)).expect("same dim")).expect("same dim");
    let right_expect = ab
        .add(&cross(a, c).expect("same dim").scale(s))
        .expect("same dim");
    let bilinear = left == left_expect && right == right_expect;
    let lagrange = ab.norm() == a.norm() * b.norm() - dot_ab.clone() * &dot_ab;
    let product = embed_pure(a).try_mul(&embed_pure(b)).expect("same level");
    let decomposed = Element::scalar(product.level(), -dot_ab)
        .try_add(&embed_pure(&ab))
        .expect("same level");
    let decomposition = product == decomposed;
    let jacobi = jacobi_sum(a, b, c).expect("same dim").is_zero();
    [orth, anti, bilinear, lagrange, decomposition, jacobi]
}

/// Checks the cross-product identities on `samples` seeded random triples.
///
/// The Jacobi witness is the first failing triple in sample order.
pub fn cross_identities_check(dim: usize, samples: u64, seed: u64) -> Result<CrossReport> {
    if dim != 3 && dim != 7 {
        return Err(Error::Dimension(format!(
            "cross products exist in dimensions 3 and 7, not {dim}"
        )));
    }
    let results: Vec<[bool; 6]> = (0..samples)
        .into_par_iter()
        .map(|i| check_sample(&draw(dim, seed, i)))
        .collect();
    let all = |k: usize| results.iter().all(|r| r[k]);
    let jacobi_witness = results.iter().position(|r| !r[5]).map(|i| {
        let Sample { a, b, c, .. } = draw(dim, seed, i as u64);
        [a, b, c]
    });
    Ok(CrossReport {
        dim,
        samples,
        seed,
        orthogonality: all(0),
        anticommutativity: all(1),
        bilinearity: all(2),
        lagrange: all(3),
        decomposition: all(4),
        jacobi: JacobiOutcome {
            holds: jacobi_witness.is_none(),
            witness: jacobi_witness,
        },
    })
}
