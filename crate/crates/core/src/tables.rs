//! Basis multiplication tables, the known counterexamples, and zero-divisor
//! search.

use std::fmt::Write as _;

use num_traits::Zero;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::element::BASIS_NAMES;
use crate::error::{Error, Result};
use crate::scalar::{int, rat};
use crate::{Element, IntElement, ProductVariant, Rational};

/// Largest level accepted by [`gen_table`].
pub const MAX_TABLE_LEVEL: usize = 6;

/// `sign * e_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignedUnit {
    pub negative: bool,
    pub index: usize,
}

impl SignedUnit {
    pub fn pos(index: usize) -> Self {
        SignedUnit {
            negative: false,
            index,
        }
    }

    pub fn neg(index: usize) -> Self {
        SignedUnit {
            negative: true,
            index,
        }
    }

    pub fn sign(self) -> i8 {
        if self.negative {
            -1
        } else {
            1
        }
    }

    fn label(self, names: bool) -> String {
        let unit = if names {
            BASIS_NAMES[self.index].to_string()
        } else {
            format!("e{}", self.index)
        };
        if self.negative {
            format!("-{unit}")
        } else {
            unit
        }
    }
}

impl Serialize for SignedUnit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("SignedUnit", 2)?;
        st.serialize_field("sign", if self.negative { "-" } else { "+" })?;
        st.serialize_field("index", &self.index)?;
        st.end()
    }
}

/// `entries[s][t]` is the signed unit equal to `e_s * e_t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisTable {
    pub level: usize,
    pub entries: Vec<Vec<SignedUnit>>,
}

impl BasisTable {
    pub fn get(&self, s: usize, t: usize) -> SignedUnit {
        self.entries[s][t]
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }
}

fn as_signed_unit(x: &IntElement) -> Option<SignedUnit> {
    let mut found = None;
    for (idx, &c) in x.coeffs().iter().enumerate() {
        match c {
            0 => {}
            1 | -1 if found.is_none() => {
                found = Some(SignedUnit {
                    negative: c < 0,
                    index: idx,
                })
            }
            _ => return None,
        }
    }
    found
}

/// Multiplies every pair of basis units with the Cayley-Dickson product.
pub fn gen_table(level: usize) -> Result<BasisTable> {
    if level > MAX_TABLE_LEVEL {
        return Err(Error::Usage(format!(
            "table level {level} exceeds the maximum of {MAX_TABLE_LEVEL}"
        )));
    }
    let dim = 1usize << level;
    let units: Vec<IntElement> = (0..dim)
        .map(|i| IntElement::basis(level, i).expect("index in range"))
        .collect();
    let entries = (0..dim)
        .into_par_iter()
        .map(|s| {
            (0..dim)
                .map(|t| {
                    let p = units[s].try_mul(&units[t]).expect("same level");
                    as_signed_unit(&p).expect("basis products are signed basis units")
                })
                .collect()
        })
        .collect();
    Ok(BasisTable { level, entries })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Text,
    Json,
}

/// Renders a table.
///
/// Text output lists the imaginary units only, with a header row and column,
/// right-aligned in ASCII. JSON output is the full signed-index matrix as
/// `{"level": n, "entries": [[{"sign": "+", "index": 0}, ...], ...]}`.
pub fn render_table(table: &BasisTable, format: TableFormat, names: bool) -> Result<String> {
    if names && table.level > 4 {
        return Err(Error::Usage(
            "unit names are only defined up to level 4".into(),
        ));
    }
    match format {
        TableFormat::Json => Ok(serde_json::to_string(table).expect("table serializes")),
        TableFormat::Text => Ok(render_text(table, names)),
    }
}

fn render_text(table: &BasisTable, names: bool) -> String {
    let dim = table.dim();
    if dim == 1 {
        return "(no imaginary units)\n".to_string();
    }
    let header: Vec<String> = (1..dim).map(|i| SignedUnit::pos(i).label(names)).collect();
    let cells: Vec<Vec<String>> = (1..dim)
        .map(|s| (1..dim).map(|t| table.get(s, t).label(names)).collect())
        .collect();
    let width = header
        .iter()
        .chain(cells.iter().flatten())
        .map(String::len)
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    let _ = write!(out, "{:>width$} |", "");
    for h in &header {
        let _ = write!(out, " {h:>width$}");
    }
    out.push('\n');
    out.push_str(&"-".repeat(width + 1));
    out.push('+');
    out.push_str(&"-".repeat((width + 1) * header.len()));
    out.push('\n');
    for (h, row) in header.iter().zip(&cells) {
        let _ = write!(out, "{h:>width$} |");
        for c in row {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    }
    out
}

/// One recomputed counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleCheck {
    pub name: &'static str,
    pub description: &'static str,
    pub passed: bool,
    pub computed: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub checks: Vec<CounterexampleCheck>,
}

impl CounterexampleReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn el(level: usize, terms: &[(usize, Rational)]) -> Element {
    let mut c = vec![int(0); 1 << level];
    for (idx, v) in terms {
        c[*idx] = v.clone();
    }
    Element::new(level, c).expect("dimension matches")
}

/// Recomputes the known failures: the two rejected pair products and the
/// sedenion zero divisor with its norms and inverses.
///
/// Returns the full report when everything reproduces, or
/// [`Error::CounterexampleMismatch`] for the first check that does not.
pub fn verify_counterexamples() -> Result<CounterexampleReport> {
    let mut checks = Vec::new();

    // Complex halves: v1 = w1 = 1, v2 = i, w2 = -i. The `i` of the right half
    // is coefficient 2 + 1 = 3.
    let v = el(2, &[(0, int(1)), (3, int(1))]);
    let w = el(2, &[(0, int(1)), (3, int(-1))]);
    let p = v.mul_variant(ProductVariant::Cm, &w)?;
    checks.push(CounterexampleCheck {
        name: "cm-complex-pair",
        description: "naive pair product of (1 ; i) and (1 ; -i) over complex halves",
        passed: p.is_zero() && v.norm() * w.norm() != int(0),
        computed: p.to_string(),
    });

    // Quaternion halves: v1 = -i, v2 = j, w1 = i, w2 = j.
    let v = el(3, &[(1, int(-1)), (6, int(1))]);
    let w = el(3, &[(1, int(1)), (6, int(1))]);
    let p = v.mul_variant(ProductVariant::Qm, &w)?;
    checks.push(CounterexampleCheck {
        name: "qm-quaternion-pair",
        description: "right-conjugate pair product of (-i ; j) and (i ; j) over quaternion halves",
        passed: p.is_zero() && v.norm() * w.norm() != int(0),
        computed: p.to_string(),
    });

    let x = el(4, &[(3, int(1)), (10, int(1))]);
    let y = el(4, &[(6, int(1)), (15, int(-1))]);
    let p = x.try_mul(&y)?;
    checks.push(CounterexampleCheck {
        name: "sedenion-zero-product",
        description: "(k + jL)(J - KL) = 0",
        passed: p.is_zero(),
        computed: p.to_string(),
    });
    let norms = (x.norm(), y.norm());
    checks.push(CounterexampleCheck {
        name: "sedenion-norms",
        description: "||k + jL|| = ||J - KL|| = 2",
        passed: norms == (int(2), int(2)),
        computed: format!("{} {}", norms.0, norms.1),
    });
    let xi = x.inverse()?;
    checks.push(CounterexampleCheck {
        name: "sedenion-inverse-x",
        description: "(k + jL)^-1 = -1/2 k - 1/2 jL",
        passed: xi == el(4, &[(3, rat(-1, 2)), (10, rat(-1, 2))]),
        computed: xi.to_string(),
    });
    let yi = y.inverse()?;
    checks.push(CounterexampleCheck {
        name: "sedenion-inverse-y",
        description: "(J - KL)^-1 = -1/2 J + 1/2 KL",
        passed: yi == el(4, &[(6, rat(-1, 2)), (15, rat(1, 2))]),
        computed: yi.to_string(),
    });

    if let Some(bad) = checks.iter().find(|c| !c.passed) {
        return Err(Error::CounterexampleMismatch {
            name: bad.name.to_string(),
            computed: bad.computed.clone(),
        });
    }
    Ok(CounterexampleReport { checks })
}

/// Nonzero `x`, `y` with `x * y = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisorCert {
    pub x: Element,
    pub y: Element,
    pub level: usize,
}

impl ZeroDivisorCert {
    pub fn verify(&self) -> bool {
        !self.x.is_zero()
            && !self.y.is_zero()
            && self.x.level() == self.level
            && self.y.level() == self.level
            && self
                .x
                .try_mul(&self.y)
                .map(|p| p.is_zero())
                .unwrap_or(false)
            && !(self.x.norm() * self.y.norm()).is_zero()
    }
}

impl Serialize for ZeroDivisorCert {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ZeroDivisorCert", 3)?;
        st.serialize_field("x", &self.x.to_string())?;
        st.serialize_field("y", &self.y.to_string())?;
        st.serialize_field("level", &self.level)?;
        st.end()
    }
}

/// Search candidates: `e_a` for every `a`, then `e_a + e_b` and `e_a - e_b`
/// for `a < b` when `max_terms == 2`. Each is the representative of its
/// `{x, -x}` class with first nonzero coefficient positive.
pub fn search_candidates(level: usize, max_terms: usize) -> Vec<IntElement> {
    let dim = 1usize << level;
    let mut out: Vec<IntElement> = (0..dim)
        .map(|i| IntElement::basis(level, i).expect("index in range"))
        .collect();
    if max_terms >= 2 {
        for a in 0..dim {
            for b in a + 1..dim {
                for sb in [1, -1] {
                    let mut c = vec![0i64; dim];
                    c[a] = 1;
                    c[b] = sb;
                    out.push(IntElement::new(level, c).expect("dimension matches"));
                }
            }
        }
    }
    out
}

/// Every ordered pair of candidates (see [`search_candidates`]) whose product
/// vanishes, in candidate order.
///
/// Products are taken over `i64`: candidate coefficients are in `{-1, 0, 1}`,
/// so every intermediate stays tiny. Hits are re-verified over the rationals.
pub fn find_zero_divisors(level: usize, max_terms: usize) -> Result<Vec<ZeroDivisorCert>> {
    if level < 1 {
        return Err(Error::Usage("zero-divisor search needs level >= 1".into()));
    }
    if !(1..=2).contains(&max_terms) {
        return Err(Error::Usage("max terms must be 1 or 2".into()));
    }
    if level > MAX_TABLE_LEVEL {
        return Err(Error::Usage(format!(
            "zero-divisor search level {level} exceeds the maximum of {MAX_TABLE_LEVEL}"
        )));
    }
    let cands = search_candidates(level, max_terms);
    let hits: Vec<(usize, usize)> = (0..cands.len())
        .into_par_iter()
        .flat_map_iter(|a| {
            let cands = &cands;
            (0..cands.len()).filter_map(move |b| {
                let p = cands[a].try_mul(&cands[b]).expect("same level");
                p.is_zero().then_some((a, b))
            })
        })
        .collect();
    let to_rational = |x: &IntElement| x.map_scalar(|&c| int(c));
    let certs: Vec<ZeroDivisorCert> = hits
        .into_iter()
        .map(|(a, b)| ZeroDivisorCert {
            x: to_rational(&cands[a]),
            y: to_rational(&cands[b]),
            level,
        })
        .collect();
    debug_assert!(certs.iter().all(ZeroDivisorCert::verify));
    Ok(certs)
}
