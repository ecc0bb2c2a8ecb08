//! Reference multiplication tables shipped with the crate, and the code that
//! recomputes each row.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use crate::class_algebra::{convolve_c_classes, f_constant, product_expansion, q_polynomial, ClassVector};
use crate::error::{Error, Result};
use crate::numbers::{big, format_rational, parse_rational};
use crate::partitions::Partition;

/// The checked-in fixture.
pub const FIXTURE: &str = include_str!("../data/golden.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// Stable product in the `a_ρ` basis.
    ABasisScaled,
    /// Product in the `A_ρ` basis, truncated when a level is given.
    ABasis,
    /// Product of class sums `C_{ρ;n}` at a fixed `n`.
    Classes,
    /// Class-sum product with coefficients polynomial in `n`.
    ClassPolynomial,
}

/// A coefficient is a number, or a polynomial given by its monomial
/// coefficients `[c₀, c₁, …]` without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Number(BigRational),
    Polynomial(Vec<BigRational>),
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Number(q) => f.write_str(&format_rational(q)),
            Coefficient::Polynomial(cs) => {
                let cs: Vec<String> = cs.iter().map(format_rational).collect();
                write!(f, "[{}]", cs.join(","))
            }
        }
    }
}

pub type Terms = BTreeMap<Partition, Coefficient>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRow {
    pub section: String,
    pub kind: RowKind,
    pub lhs: Partition,
    pub rhs: Partition,
    pub level: Option<usize>,
    pub terms: Terms,
}

impl GoldenRow {
    /// Recomputes the row from the structure constants.
    pub fn compute(&self) -> Result<Terms> {
        let (s, t) = (&self.lhs, &self.rhs);
        let number = |q: BigRational| Coefficient::Number(q);
        let out = match self.kind {
            RowKind::ABasisScaled => product_expansion(s, t)
                .keys()
                .map(|rho| Ok((rho.clone(), number(big(f_constant(s, t, rho)?).into()))))
                .collect::<Result<_>>()?,
            RowKind::ABasis => ClassVector::basis(s.clone())
                .multiply(&ClassVector::basis(t.clone()), self.level)
                .terms()
                .map(|(rho, c)| (rho.clone(), number(c.clone())))
                .collect(),
            RowKind::Classes => {
                let n = self
                    .level
                    .ok_or_else(|| Error::Internal(format!("class row {s:?} * {t:?} needs a level")))?;
                convolve_c_classes(s, t, n)?
                    .terms()
                    .map(|(rho, c)| (rho.clone(), number(c.clone())))
                    .collect()
            }
            RowKind::ClassPolynomial => {
                let rhos: BTreeSet<Partition> = product_expansion(s, t)
                    .keys()
                    .map(Partition::strip_ones)
                    .collect();
                let mut out = Terms::new();
                for rho in rhos {
                    let q = q_polynomial(s, t, &rho)?;
                    if !q.is_zero() {
                        out.insert(rho, Coefficient::Polynomial(trimmed(q.monomial_coeffs())));
                    }
                }
                out
            }
        };
        Ok(out)
    }

    /// The entries on which the fixture and the computation disagree.
    pub fn diff(&self) -> Result<Vec<Mismatch>> {
        let computed = self.compute()?;
        let keys: BTreeSet<&Partition> = self.terms.keys().chain(computed.keys()).collect();
        Ok(keys
            .into_iter()
            .filter(|k| self.terms.get(*k) != computed.get(*k))
            .map(|k| Mismatch {
                rho: k.clone(),
                expected: self.terms.get(k).cloned(),
                computed: computed.get(k).cloned(),
            })
            .collect())
    }

    pub fn label(&self) -> String {
        let kind = match self.kind {
            RowKind::ABasisScaled => "a",
            RowKind::ABasis => "A",
            RowKind::Classes => "C",
            RowKind::ClassPolynomial => "Cpoly",
        };
        let level = self.level.map(|n| format!(" @{n}")).unwrap_or_default();
        format!("{kind} {:?} * {:?}{level}", self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub rho: Partition,
    pub expected: Option<Coefficient>,
    pub computed: Option<Coefficient>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |c: &Option<Coefficient>| c.as_ref().map_or("0".to_string(), |c| c.to_string());
        write!(
            f,
            "{:?}: expected {} computed {}",
            self.rho,
            show(&self.expected),
            show(&self.computed)
        )
    }
}

fn trimmed(mut cs: Vec<BigRational>) -> Vec<BigRational> {
    while cs.last().is_some_and(Zero::is_zero) {
        cs.pop();
    }
    cs
}

/// Rows of the shipped fixture.
pub fn rows() -> Result<Vec<GoldenRow>> {
    parse(FIXTURE)
}

/// Rows of one `[section]` of the shipped fixture.
pub fn section(name: &str) -> Result<Vec<GoldenRow>> {
    Ok(rows()?.into_iter().filter(|r| r.section == name).collect())
}

pub fn parse(text: &str) -> Result<Vec<GoldenRow>> {
    let mut section = String::new();
    let mut rows = Vec::new();
    for (number, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            section = name.to_string();
            continue;
        }
        let row = parse_row(line, &section)
            .map_err(|e| Error::Internal(format!("golden line {}: {e}", number + 1)))?;
        rows.push(row);
    }
    Ok(rows)
}

fn parse_row(line: &str, section: &str) -> Result<GoldenRow> {
    let bad = |why: &str| Error::Internal(format!("{why} in {line:?}"));
    let (head, body) = line.split_once('=').ok_or_else(|| bad("missing '='"))?;
    let mut words = head.split_whitespace();
    let kind = match words.next() {
        Some("a") => RowKind::ABasisScaled,
        Some("A") => RowKind::ABasis,
        Some("C") => RowKind::Classes,
        Some("Cpoly") => RowKind::ClassPolynomial,
        _ => return Err(bad("unknown row kind")),
    };
    let lhs: Partition = words.next().ok_or_else(|| bad("missing lhs"))?.parse()?;
    if words.next() != Some("*") {
        return Err(bad("missing '*'"));
    }
    let rhs: Partition = words.next().ok_or_else(|| bad("missing rhs"))?.parse()?;
    let level = match words.next() {
        None => None,
        Some(w) => Some(
            w.strip_prefix('@')
                .and_then(|n| n.parse().ok())
                .ok_or_else(|| bad("bad level"))?,
        ),
    };
    let mut terms = Terms::new();
    for term in body.split('|') {
        let (coef, rho) = term.trim().split_once(' ').ok_or_else(|| bad("bad term"))?;
        let rho: Partition = rho.trim().parse()?;
        let coef = match coef.strip_prefix('[').and_then(|c| c.strip_suffix(']')) {
            Some(list) => Coefficient::Polynomial(trimmed(
                list.split(',')
                    .map(|c| parse_rational(c).ok_or_else(|| bad("bad coefficient")))
                    .collect::<Result<_>>()?,
            )),
            None => Coefficient::Number(parse_rational(coef).ok_or_else(|| bad("bad coefficient"))?),
        };
        if terms.insert(rho, coef).is_some() {
            return Err(bad("repeated partition"));
        }
    }
    Ok(GoldenRow {
        section: section.to_string(),
        kind,
        lhs,
        rhs,
        level,
        terms,
    })
}
