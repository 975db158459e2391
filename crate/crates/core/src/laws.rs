//! Composition-algebra laws as executable checks.
//!
//! Every [`LawId`] names one identity over a fixed number of operands. A law
//! is evaluated exactly on concrete operands by [`eval_law`]; [`run_check`]
//! drives it over an exhaustive signed-basis enumeration or over seeded random
//! samples and reports the first violation; [`property_matrix`] collects the
//! four structural properties (composition, associativity, commutativity,
//! trivial conjugation) level by level.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::random::{sample_element, sample_nonzero, RandomStream};
use crate::scalar::rat;
use crate::{Element, IntElement, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LawId {
    /// `||xy|| = ||x|| ||y||`
    Composition,
    /// `(xy)z = x(yz)`
    LeftAssociative,
    /// `xy = yx`
    Commutative,
    /// `conj(x) = x`
    TrivialConjugation,
    /// `x(xy) = (xx)y`
    LeftAlternative,
    /// `(yx)x = y(xx)`
    RightAlternative,
    /// `(xy)x = x(yx)`
    Flexible,
    /// `(xy).(xz) = ||x|| (y.z)`
    ScalingLeft,
    /// `(xz).(yz) = (x.y) ||z||`
    ScalingRight,
    /// `(uy).(xz) + (uz).(xy) = 2 (u.x)(y.z)`
    Exchange,
    /// `y.(conj(x) z) = z.(xy)`
    ConjugateLaw1,
    /// `x.(z conj(y)) = z.(xy)`
    ConjugateLaw2,
    /// `conj(conj(x)) = x`
    ConjInvolution,
    /// `conj(xy) = conj(y) conj(x)`
    ConjAntiAutomorphism,
    /// `x.y = (||x+y|| - ||x|| - ||y||) / 2`
    Polarization,
    /// `||x|| = x.x`
    NormSelfDot,
    /// `||x|| >= 0`
    NormNonneg,
    /// `||x|| = 0` exactly when `x = 0`
    NormZeroIffZero,
    /// `x^-1 x = 1 = x x^-1` for nonzero `x`
    InverseLaw,
    /// `xy = 0` exactly when `x = 0` or `y = 0`
    ZeroProduct,
    /// `(v1;v2).(w1;w2) = v1.w1 + v2.w2`
    DotDoubling,
    /// `conj((v1;v2)) = (conj(v1) ; -v2)`
    ConjDoubling,
    /// `(v1;v2)(w1;w2) = (v1 w1 - conj(w2) v2 ; w2 v1 + v2 conj(w1))`
    ProductDoubling,
    /// `||(v1;v2)|| = ||v1|| + ||v2||`
    NormDoubling,
    /// `(x;0)(y;0) = (xy;0)` and `||(x;0)|| = ||x|| = ||(0;x)||`, one level up
    EmbeddingHom,
    /// `(x;0)(0;1) = (0;x)`, one level up
    PairUnitShift,
}

impl LawId {
    pub const ALL: [LawId; 26] = [
        LawId::Composition,
        LawId::LeftAssociative,
        LawId::Commutative,
        LawId::TrivialConjugation,
        LawId::LeftAlternative,
        LawId::RightAlternative,
        LawId::Flexible,
        LawId::ScalingLeft,
        LawId::ScalingRight,
        LawId::Exchange,
        LawId::ConjugateLaw1,
        LawId::ConjugateLaw2,
        LawId::ConjInvolution,
        LawId::ConjAntiAutomorphism,
        LawId::Polarization,
        LawId::NormSelfDot,
        LawId::NormNonneg,
        LawId::NormZeroIffZero,
        LawId::InverseLaw,
        LawId::ZeroProduct,
        LawId::DotDoubling,
        LawId::ConjDoubling,
        LawId::ProductDoubling,
        LawId::NormDoubling,
        LawId::EmbeddingHom,
        LawId::PairUnitShift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LawId::Composition => "composition",
            LawId::LeftAssociative => "left-associative",
            LawId::Commutative => "commutative",
            LawId::TrivialConjugation => "trivial-conjugation",
            LawId::LeftAlternative => "left-alternative",
            LawId::RightAlternative => "right-alternative",
            LawId::Flexible => "flexible",
            LawId::ScalingLeft => "scaling-left",
            LawId::ScalingRight => "scaling-right",
            LawId::Exchange => "exchange",
            LawId::ConjugateLaw1 => "conjugate-law1",
            LawId::ConjugateLaw2 => "conjugate-law2",
            LawId::ConjInvolution => "conj-involution",
            LawId::ConjAntiAutomorphism => "conj-anti-automorphism",
            LawId::Polarization => "polarization",
            LawId::NormSelfDot => "norm-self-dot",
            LawId::NormNonneg => "norm-nonneg",
            LawId::NormZeroIffZero => "norm-zero-iff-zero",
            LawId::InverseLaw => "inverse-law",
            LawId::ZeroProduct => "zero-product",
            LawId::DotDoubling => "dot-doubling",
            LawId::ConjDoubling => "conj-doubling",
            LawId::ProductDoubling => "product-doubling",
            LawId::NormDoubling => "norm-doubling",
            LawId::EmbeddingHom => "embedding-hom",
            LawId::PairUnitShift => "pair-unit-shift",
        }
    }

    /// Number of element operands.
    pub fn arity(self) -> usize {
        use LawId::*;
        match self {
            TrivialConjugation | ConjInvolution | NormSelfDot | NormNonneg | NormZeroIffZero
            | InverseLaw | ConjDoubling | NormDoubling | PairUnitShift => 1,
            Composition | Commutative | LeftAlternative | RightAlternative | Flexible
            | ConjAntiAutomorphism | Polarization | ZeroProduct | DotDoubling | ProductDoubling
            | EmbeddingHom => 2,
            LeftAssociative | ScalingLeft | ScalingRight | ConjugateLaw1 | ConjugateLaw2 => 3,
            Exchange => 4,
        }
    }

    /// Doubling laws split their operands into halves and need level >= 1.
    pub fn min_level(self) -> usize {
        match self {
            LawId::DotDoubling
            | LawId::ConjDoubling
            | LawId::ProductDoubling
            | LawId::NormDoubling => 1,
            _ => 0,
        }
    }

    fn needs_nonzero(self) -> bool {
        self == LawId::InverseLaw
    }

    /// Laws whose violations need composite operands; exhaustive mode adds
    /// two-term signed basis sums for these.
    fn uses_two_term_operands(self) -> bool {
        matches!(self, LawId::Composition | LawId::ZeroProduct)
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        LawId::ALL
            .into_iter()
            .find(|l| l.name() == key || l.name().replace('-', "") == key)
            .ok_or_else(|| Error::Usage(format!("unknown law {s:?}")))
    }
}

/// Outcome of one evaluation. `witness` is present exactly when the law fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
}

/// Evaluates `law` on `operands` exactly.
pub fn eval_law(law: LawId, operands: &[Element]) -> Result<Verdict> {
    validate(law, operands)?;
    let holds = law_holds(law, operands);
    Ok(Verdict {
        holds,
        witness: (!holds).then(|| operands.to_vec()),
    })
}

/// True when `witness` is a genuine violation of `law`.
pub fn reverify(law: LawId, witness: &[Element]) -> bool {
    matches!(eval_law(law, witness), Ok(Verdict { holds: false, .. }))
}

fn validate(law: LawId, operands: &[Element]) -> Result<()> {
    if operands.len() != law.arity() {
        return Err(Error::Usage(format!(
            "{law} takes {} operand(s), got {}",
            law.arity(),
            operands.len()
        )));
    }
    let level = operands[0].level();
    if let Some(other) = operands.iter().find(|x| x.level() != level) {
        return Err(Error::Usage(format!(
            "{law}: operands at different levels ({level} and {})",
            other.level()
        )));
    }
    if level < law.min_level() {
        return Err(Error::Usage(format!(
            "{law} needs level >= {}",
            law.min_level()
        )));
    }
    if law.needs_nonzero() && operands[0].is_zero() {
        return Err(Error::Usage(format!("{law} needs a nonzero operand")));
    }
    Ok(())
}

// Operands are validated, so every level check below succeeds.
fn mul(x: &Element, y: &Element) -> Element {
    x.try_mul(y).expect("operands share a level")
}

fn dot(x: &Element, y: &Element) -> Rational {
    x.try_dot(y).expect("operands share a level")
}

fn add(x: &Element, y: &Element) -> Element {
    x.try_add(y).expect("operands share a level")
}

fn law_holds(law: LawId, ops: &[Element]) -> bool {
    use LawId::*;
    match law {
        Composition => mul(&ops[0], &ops[1]).norm() == ops[0].norm() * ops[1].norm(),
        LeftAssociative => {
            let (x, y, z) = (&ops[0], &ops[1], &ops[2]);
            mul(&mul(x, y), z) == mul(x, &mul(y, z))
        }
        Commutative => mul(&ops[0], &ops[1]) == mul(&ops[1], &ops[0]),
        TrivialConjugation => ops[0].conj() == ops[0],
        LeftAlternative => {
            let (x, y) = (&ops[0], &ops[1]);
            mul(x, &mul(x, y)) == mul(&mul(x, x), y)
        }
        RightAlternative => {
            let (x, y) = (&ops[0], &ops[1]);
            mul(&mul(y, x), x) == mul(y, &mul(x, x))
        }
        Flexible => {
            let (x, y) = (&ops[0], &ops[1]);
            mul(&mul(x, y), x) == mul(x, &mul(y, x))
        }
        ScalingLeft => {
            let (x, y, z) = (&ops[0], &ops[1], &ops[2]);
            dot(&mul(x, y), &mul(x, z)) == x.norm() * dot(y, z)
        }
        ScalingRight => {
            let (x, y, z) = (&ops[0], &ops[1], &ops[2]);
            dot(&mul(x, z), &mul(y, z)) == dot(x, y) * z.norm()
        }
        Exchange => {
            let (u, x, y, z) = (&ops[0], &ops[1], &ops[2], &ops[3]);
            let lhs = dot(&mul(u, y), &mul(x, z)) + dot(&mul(u, z), &mul(x, y));
            lhs == rat(2, 1) * dot(u, x) * dot(y, z)
        }
        ConjugateLaw1 => {
            let (x, y, z) = (&ops[0], &ops[1], &ops[2]);
            dot(y, &mul(&x.conj(), z)) == dot(z, &mul(x, y))
        }
        ConjugateLaw2 => {
            let (x, y, z) = (&ops[0], &ops[1], &ops[2]);
            dot(x, &mul(z, &y.conj())) == dot(z, &mul(x, y))
        }
        ConjInvolution => ops[0].conj().conj() == ops[0],
        ConjAntiAutomorphism => {
            let (x, y) = (&ops[0], &ops[1]);
            mul(x, y).conj() == mul(&y.conj(), &x.conj())
        }
        Polarization => {
            let (x, y) = (&ops[0], &ops[1]);
            let rhs = (add(x, y).norm() - x.norm() - y.norm()) * rat(1, 2);
            dot(x, y) == rhs
        }
        NormSelfDot => ops[0].norm() == dot(&ops[0], &ops[0]),
        NormNonneg => !ops[0].norm().is_negative(),
        NormZeroIffZero => ops[0].norm().is_zero() == ops[0].is_zero(),
        InverseLaw => {
            let x = &ops[0];
            let inv = x.inverse().expect("validated nonzero");
            let one = Element::one(x.level());
            mul(&inv, x) == one && mul(x, &inv) == one
        }
        ZeroProduct => {
            let (x, y) = (&ops[0], &ops[1]);
            mul(x, y).is_zero() == (x.is_zero() || y.is_zero())
        }
        DotDoubling => {
            let ((v1, v2), (w1, w2)) = (halves(&ops[0]), halves(&ops[1]));
            dot(&ops[0], &ops[1]) == dot(&v1, &w1) + dot(&v2, &w2)
        }
        ConjDoubling => {
            let (v1, v2) = halves(&ops[0]);
            let expect = Element::from_halves(v1.conj(), -v2).expect("halves share a level");
            ops[0].conj() == expect
        }
        ProductDoubling => {
            let ((v1, v2), (w1, w2)) = (halves(&ops[0]), halves(&ops[1]));
            let left = mul(&v1, &w1)
                .try_sub(&mul(&w2.conj(), &v2))
                .expect("same level");
            let right = add(&mul(&w2, &v1), &mul(&v2, &w1.conj()));
            let expect = Element::from_halves(left, right).expect("halves share a level");
            mul(&ops[0], &ops[1]) == expect
        }
        NormDoubling => {
            let (v1, v2) = halves(&ops[0]);
            ops[0].norm() == v1.norm() + v2.norm()
        }
        EmbeddingHom => {
            let (x, y) = (&ops[0], &ops[1]);
            let zero = Element::zero(x.level());
            let right_embed = Element::from_halves(zero, x.clone()).expect("same level");
            mul(&x.promote(), &y.promote()) == mul(x, y).promote()
                && x.promote().norm() == x.norm()
                && right_embed.norm() == x.norm()
                && dot(
                    &x.promote(),
                    &Element::from_halves(Element::zero(y.level()), y.clone()).expect("same level"),
                )
                .is_zero()
        }
        PairUnitShift => {
            let x = &ops[0];
            let zero = Element::zero(x.level());
            let unit =
                Element::from_halves(zero.clone(), Element::one(x.level())).expect("same level");
            let shifted = Element::from_halves(zero, x.clone()).expect("same level");
            mul(&x.promote(), &unit) == shifted
        }
    }
}

// Exhaustive operands have coefficients in {-1, 0, 1}, so the laws that scan
// the large two-term space are decided in machine integers.
fn to_int(x: &Element) -> IntElement {
    x.map_scalar(|c| c.to_integer().try_into().expect("unit coefficient"))
}

fn int_law_holds(law: LawId, ops: &[&IntElement]) -> Option<bool> {
    if !matches!(law, LawId::Composition | LawId::ZeroProduct) {
        return None;
    }
    let (x, y) = (ops[0], ops[1]);
    let xy = x.try_mul(y).expect("operands share a level");
    Some(match law {
        LawId::Composition => xy.norm() == x.norm() * y.norm(),
        _ => xy.is_zero() == (x.is_zero() || y.is_zero()),
    })
}

fn halves(x: &Element) -> (Element, Element) {
    x.split().expect("level >= 1 validated")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckMode {
    ExhaustiveBasis,
    Random,
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::ExhaustiveBasis => "exhaustive-basis",
            CheckMode::Random => "random",
        })
    }
}

impl FromStr for CheckMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exhaustive-basis" | "exhaustive" => Ok(CheckMode::ExhaustiveBasis),
            "random" => Ok(CheckMode::Random),
            _ => Err(Error::Usage(format!("unknown check mode {s:?}"))),
        }
    }
}

/// Result of [`run_check`].
///
/// In exhaustive mode `samples` is the number of operand tuples in the
/// enumerated space. `elapsed` is `None` once stripped for reproducible
/// output.
#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: LawId,
    pub level: usize,
    pub mode: CheckMode,
    pub samples: u64,
    pub seed: u64,
    pub holds: bool,
    pub witness: Option<Vec<Element>>,
    pub elapsed: Option<Duration>,
}

impl LawReport {
    pub fn without_timing(mut self) -> Self {
        self.elapsed = None;
        self
    }
}

impl Serialize for LawReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LawReport", 8)?;
        st.serialize_field("law", &self.law)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("mode", &self.mode)?;
        st.serialize_field("samples", &self.samples)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("holds", &self.holds)?;
        st.serialize_field("witness", &witness_strings(&self.witness))?;
        st.serialize_field("elapsed_ms", &self.elapsed.map(|d| d.as_millis() as u64))?;
        st.end()
    }
}

fn witness_strings(w: &Option<Vec<Element>>) -> Option<Vec<String>> {
    w.as_ref()
        .map(|ops| ops.iter().map(ToString::to_string).collect())
}

/// Operands enumerated in exhaustive mode, in `(sign, index)` order with `+`
/// first, followed (for composite-sensitive laws) by `s_a e_a + s_b e_b` for
/// `a < b` with sign pairs `++, +-, -+, --`.
pub fn exhaustive_operands(level: usize, two_term: bool) -> Vec<Element> {
    let dim = 1usize << level;
    let mut out = Vec::new();
    for negative in [false, true] {
        for idx in 0..dim {
            out.push(Element::signed_basis(level, idx, negative).expect("index in range"));
        }
    }
    if two_term {
        let signs = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
        for a in 0..dim {
            for b in a + 1..dim {
                for (sa, sb) in signs {
                    let mut c = vec![Rational::zero(); dim];
                    c[a] = rat(sa, 1);
                    c[b] = rat(sb, 1);
                    out.push(Element::new(level, c).expect("dimension matches"));
                }
            }
        }
    }
    out
}

fn random_operands(law: LawId, level: usize, seed: u64, index: u64) -> Vec<Element> {
    let mut stream = RandomStream::for_sample(seed, index);
    (0..law.arity())
        .map(|k| {
            if k == 0 && law.needs_nonzero() {
                sample_nonzero(level, &mut stream)
            } else {
                sample_element(level, &mut stream)
            }
        })
        .collect()
}

/// Checks `law` at `level`.
///
/// Exhaustive mode walks every operand tuple from [`exhaustive_operands`] in
/// lexicographic order (first operand slowest); random mode evaluates samples
/// `0..samples`. Either way the witness is the first violation in that order,
/// independent of how many threads do the work.
pub fn run_check(
    law: LawId,
    level: usize,
    mode: CheckMode,
    samples: u64,
    seed: u64,
) -> Result<LawReport> {
    if level < law.min_level() {
        return Err(Error::Usage(format!(
            "{law} needs level >= {}",
            law.min_level()
        )));
    }
    let start = Instant::now();
    let (space, witness) = match mode {
        CheckMode::ExhaustiveBasis => {
            let cands = exhaustive_operands(level, law.uses_two_term_operands());
            let n = cands.len();
            let total = n
                .checked_pow(law.arity() as u32)
                .ok_or_else(|| Error::Usage("exhaustive space too large".into()))?;
            let tuple = |mut t: usize| {
                let mut idx = vec![0; law.arity()];
                for slot in idx.iter_mut().rev() {
                    *slot = t % n;
                    t /= n;
                }
                idx
            };
            let ints: Vec<IntElement> = cands.iter().map(to_int).collect();
            let holds = |idx: &Vec<usize>| {
                let int_ops: Vec<&IntElement> = idx.iter().map(|&i| &ints[i]).collect();
                int_law_holds(law, &int_ops).unwrap_or_else(|| {
                    let ops: Vec<Element> = idx.iter().map(|&i| cands[i].clone()).collect();
                    law_holds(law, &ops)
                })
            };
            let witness = (0..total)
                .into_par_iter()
                .map(tuple)
                .find_first(|idx| !holds(idx))
                .map(|idx| idx.iter().map(|&i| cands[i].clone()).collect());
            (total as u64, witness)
        }
        CheckMode::Random => {
            if samples == 0 {
                return Err(Error::Usage("random mode needs at least one sample".into()));
            }
            let witness = (0..samples)
                .into_par_iter()
                .map(|i| random_operands(law, level, seed, i))
                .find_first(|ops| !law_holds(law, ops));
            (samples, witness)
        }
    };
    Ok(LawReport {
        law,
        level,
        mode,
        samples: space,
        seed,
        holds: witness.is_none(),
        witness,
        elapsed: Some(start.elapsed()),
    })
}

/// One property at one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyCell {
    pub holds: bool,
    #[serde(serialize_with = "ser_witness")]
    pub witness: Option<Vec<Element>>,
}

fn ser_witness<S: Serializer>(
    w: &Option<Vec<Element>>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    witness_strings(w).serialize(s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyRow {
    pub level: usize,
    pub composition: PropertyCell,
    pub associative: PropertyCell,
    pub commutative: PropertyCell,
    pub trivial_conj: PropertyCell,
}

impl PropertyRow {
    /// `[composition, associative, commutative, trivial_conj]`.
    pub fn flags(&self) -> [bool; 4] {
        [
            self.composition.holds,
            self.associative.holds,
            self.commutative.holds,
            self.trivial_conj.holds,
        ]
    }

    fn cells(&self) -> [(LawId, &PropertyCell); 4] {
        [
            (LawId::Composition, &self.composition),
            (LawId::LeftAssociative, &self.associative),
            (LawId::Commutative, &self.commutative),
            (LawId::TrivialConjugation, &self.trivial_conj),
        ]
    }
}

/// An observed instance of "property at level n+1 implies property at n".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implication {
    /// `1a`, `2a` or `3a`.
    pub item: &'static str,
    pub lower_level: usize,
    pub premise: bool,
    pub conclusion: bool,
}

impl Implication {
    pub fn holds(&self) -> bool {
        !self.premise || self.conclusion
    }
}

/// Per-level property table. Serializes as the array of rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyMatrix {
    pub rows: Vec<PropertyRow>,
    pub implications: Vec<Implication>,
}

impl PropertyMatrix {
    pub fn implications_hold(&self) -> bool {
        self.implications.iter().all(Implication::holds)
    }

    /// Every failing cell carries a witness that re-evaluates to a violation.
    pub fn witnesses_reverify(&self) -> bool {
        self.rows.iter().all(|row| {
            row.cells()
                .iter()
                .all(|(law, cell)| match (&cell.holds, &cell.witness) {
                    (true, None) => true,
                    (false, Some(w)) => reverify(*law, w),
                    _ => false,
                })
        })
    }
}

impl Serialize for PropertyMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(s)
    }
}

fn property_cell(law: LawId, level: usize, samples: u64, seed: u64) -> Result<PropertyCell> {
    let mut report = run_check(law, level, CheckMode::ExhaustiveBasis, 0, seed)?;
    if report.holds && samples > 0 {
        report = run_check(law, level, CheckMode::Random, samples, seed)?;
    }
    Ok(PropertyCell {
        holds: report.holds,
        witness: report.witness,
    })
}

/// Builds the property matrix for levels `0..=max_level`, each property
/// checked exhaustively over signed basis operands and then on `samples`
/// random operand tuples.
pub fn property_matrix(max_level: usize, samples: u64, seed: u64) -> Result<PropertyMatrix> {
    if max_level < 1 {
        return Err(Error::Usage("property matrix needs max level >= 1".into()));
    }
    let mut rows = Vec::with_capacity(max_level + 1);
    for level in 0..=max_level {
        rows.push(PropertyRow {
            level,
            composition: property_cell(LawId::Composition, level, samples, seed)?,
            associative: property_cell(LawId::LeftAssociative, level, samples, seed)?,
            commutative: property_cell(LawId::Commutative, level, samples, seed)?,
            trivial_conj: property_cell(LawId::TrivialConjugation, level, samples, seed)?,
        });
    }
    let mut implications = Vec::new();
    for pair in rows.windows(2) {
        let [lo, hi] = pair else { unreachable!() };
        let [c1, a1, m1, _] = hi.flags();
        let [_, a0, m0, t0] = lo.flags();
        let n = lo.level;
        implications.push(Implication {
            item: "1a",
            lower_level: n,
            premise: c1,
            conclusion: a0,
        });
        implications.push(Implication {
            item: "2a",
            lower_level: n,
            premise: c1 && a1,
            conclusion: a0 && m0,
        });
        implications.push(Implication {
            item: "3a",
            lower_level: n,
            premise: c1 && a1 && m1,
            conclusion: a0 && m0 && t0,
        });
    }
    Ok(PropertyMatrix { rows, implications })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn e(level: usize, idx: usize) -> Element {
        Element::basis(level, idx).unwrap()
    }

    #[test]
    fn names_round_trip() {
        for law in LawId::ALL {
            assert_eq!(law.name().parse::<LawId>().unwrap(), law);
            let json = serde_json::to_string(&law).unwrap();
            assert_eq!(json, format!("\"{}\"", law.name()));
        }
        assert_eq!(
            "LeftAssociative".parse::<LawId>().unwrap(),
            LawId::LeftAssociative
        );
        assert!("moufang".parse::<LawId>().is_err());
    }

    #[test]
    fn exchange_on_units() {
        let one = Element::one(2);
        let v = eval_law(
            LawId::Exchange,
            &[one.clone(), one.clone(), one.clone(), one],
        )
        .unwrap();
        assert!(v.holds);
        assert_eq!(v.witness, None);
    }

    #[test]
    fn quaternions_do_not_commute() {
        let v = eval_law(LawId::Commutative, &[e(2, 1), e(2, 2)]).unwrap();
        assert!(!v.holds);
        assert_eq!(v.witness.unwrap(), vec![e(2, 1), e(2, 2)]);
    }

    #[test]
    fn octonions_left_alternative() {
        let r = run_check(LawId::LeftAlternative, 3, CheckMode::Random, 50, 3).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn usage_errors() {
        assert!(matches!(
            eval_law(LawId::Commutative, &[e(2, 1)]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            eval_law(LawId::Commutative, &[e(2, 1), e(3, 1)]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            eval_law(LawId::InverseLaw, &[Element::zero(2)]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            eval_law(LawId::NormDoubling, &[Element::one(0)]),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            run_check(LawId::DotDoubling, 0, CheckMode::Random, 5, 1),
            Err(Error::Usage(_))
        ));
        assert!(matches!(
            run_check(LawId::Flexible, 1, CheckMode::Random, 0, 1),
            Err(Error::Usage(_))
        ));
        assert!(property_matrix(0, 1, 1).is_err());
    }

    #[test]
    fn exhaustive_space_sizes() {
        assert_eq!(exhaustive_operands(2, false).len(), 8);
        assert_eq!(exhaustive_operands(4, true).len(), 32 + 4 * 120);
        let r = run_check(LawId::LeftAssociative, 2, CheckMode::ExhaustiveBasis, 0, 0).unwrap();
        assert!(r.holds);
        assert_eq!(r.samples, 512);
    }

    #[test]
    fn composition_at_octonions_holds_exhaustively() {
        let r = run_check(LawId::Composition, 3, CheckMode::ExhaustiveBasis, 0, 0).unwrap();
        assert!(r.holds, "{:?}", r.witness);
    }

    #[test]
    fn composition_fails_for_sedenions() {
        let r = run_check(LawId::Composition, 4, CheckMode::ExhaustiveBasis, 0, 0).unwrap();
        assert!(!r.holds);
        assert!(reverify(LawId::Composition, r.witness.as_ref().unwrap()));
        let x = e(4, 3).try_add(&e(4, 10)).unwrap();
        let y = e(4, 6).try_sub(&e(4, 15)).unwrap();
        assert!(!eval_law(LawId::Composition, &[x, y]).unwrap().holds);
    }

    #[test]
    fn pure_basis_never_breaks_composition() {
        let cands = exhaustive_operands(4, false);
        for x in &cands {
            for y in &cands {
                assert!(
                    eval_law(LawId::Composition, &[x.clone(), y.clone()])
                        .unwrap()
                        .holds
                );
            }
        }
    }

    #[test]
    fn octonions_are_not_associative() {
        let r = run_check(LawId::LeftAssociative, 3, CheckMode::ExhaustiveBasis, 0, 0).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert!(w
            .iter()
            .all(|x| x.coeffs().iter().filter(|c| !c.is_zero()).count() == 1));
        let v = eval_law(LawId::LeftAssociative, &[e(3, 4), e(3, 5), e(3, 6)]).unwrap();
        assert!(!v.holds);
    }

    #[test]
    fn trivial_conjugation_only_for_reals() {
        for level in 0..5 {
            let r = run_check(
                LawId::TrivialConjugation,
                level,
                CheckMode::ExhaustiveBasis,
                0,
                0,
            )
            .unwrap();
            assert_eq!(r.holds, level == 0);
        }
    }

    #[test]
    fn random_witness_is_first_violation() {
        let r = run_check(LawId::Commutative, 2, CheckMode::Random, 100, 11).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        let first = (0..100)
            .map(|i| random_operands(LawId::Commutative, 2, 11, i))
            .find(|ops| !law_holds(LawId::Commutative, ops))
            .unwrap();
        assert_eq!(w, first);
    }

    #[test]
    fn report_json_shape() {
        let r = run_check(LawId::Commutative, 2, CheckMode::ExhaustiveBasis, 0, 9)
            .unwrap()
            .without_timing();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(
            json,
            r#"{"law":"commutative","level":2,"mode":"exhaustive-basis","samples":64,"seed":9,"holds":false,"witness":["e1","e2"],"elapsed_ms":null}"#
        );
    }

    #[test]
    fn dot_nondegenerate() {
        // x.u = 0 for every basis u forces x = 0.
        let x = Element::new(2, vec![int(0), int(0), rat(1, 3), int(0)]).unwrap();
        assert!((0..4).any(|i| !dot(&x, &e(2, i)).is_zero()));
    }
}
