//! Declarative storage for unipotent character formulas.
//!
//! General unipotent character formulas are external input, not derived
//! here: a fixture file lists, per labelled module, the symmetrized
//! standard-module summands.  A validator checks each fixture's torus combo
//! for integrality and, for `U(columns;signs)` labels, compares its
//! diminutive projection against the generating-function engine.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::kmult::diminutive_table;
use crate::liecore::{dominant, BlockKind, RootFamily, Weight, WeylBlock, WeylSubgroupSpec};
use crate::orbits::{Family, Orbit};
use crate::parameters::{NormalForm, SignVector};

use super::{diminutive_projection, formula_combo, Summand, SymmetrizedFormula};

/// The fixtures shipped with the crate: the unipotent formulas of the
/// worked Sp(8) family.
const BUILTIN: &str = include_str!("../../fixtures/sp8_unipotent.json");

#[derive(Deserialize)]
struct RawSummand {
    coeff: (i64, i64),
    lambda_left: Vec<i64>,
    lambda_right_base: Vec<i64>,
    subgroup: Vec<(String, usize)>,
}

#[derive(Deserialize)]
struct RawFixture {
    group: String,
    rank: usize,
    label: String,
    summands: Vec<RawSummand>,
}

/// A labelled collection of unipotent character formulas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureSet {
    entries: BTreeMap<String, SymmetrizedFormula>,
}

impl FixtureSet {
    /// The fixtures shipped with the crate.
    pub fn builtin() -> FixtureSet {
        FixtureSet::from_json_str(BUILTIN).expect("builtin fixtures are valid")
    }

    /// Parse and validate a fixture file.
    pub fn from_json_str(data: &str) -> Result<FixtureSet> {
        let raw: Vec<RawFixture> =
            serde_json::from_str(data).map_err(|e| Error::BadFixture(e.to_string()))?;
        let mut entries = BTreeMap::new();
        for fixture in raw {
            if fixture.group != "Sp" {
                return Err(Error::BadFixture(format!(
                    "fixture {}: only Sp fixtures are supported",
                    fixture.label
                )));
            }
            let formula = convert(&fixture)?;
            formula.validate()?;
            if entries.insert(fixture.label.clone(), formula).is_some() {
                return Err(Error::BadFixture(format!("duplicate label {}", fixture.label)));
            }
        }
        let set = FixtureSet { entries };
        set.validate()?;
        Ok(set)
    }

    pub fn get(&self, label: &str) -> Option<&SymmetrizedFormula> {
        self.entries.get(label)
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.entries.keys().map(String::as_str)
    }

    /// Canonical label of the unipotent module attached to an orbit's
    /// columns and a character.
    pub fn unipotent_label(p_star: &Orbit, eps: &SignVector) -> String {
        let cols: Vec<String> = p_star.columns().iter().map(u32::to_string).collect();
        format!("U({};{})", cols.join(","), eps)
    }

    /// Stored formula for a unipotent parameter, if present.
    pub fn unipotent(&self, p_star: &Orbit, eps: &SignVector) -> Option<&SymmetrizedFormula> {
        self.get(&FixtureSet::unipotent_label(p_star, eps))
    }

    /// Check every entry: expansion must have an integral torus combo, and
    /// `U(...)` labels must reproduce the generating-function diminutive row
    /// of their normal form.
    pub fn validate(&self) -> Result<()> {
        for (label, formula) in &self.entries {
            let combo = formula_combo(formula)
                .map_err(|e| Error::BadFixture(format!("fixture {label}: {e}")))?;
            if let Some((orbit, eps)) = parse_unipotent_label(label) {
                let mut nf = NormalForm::new(orbit.group());
                for (i, &e) in eps.0.iter().enumerate() {
                    nf.push_string(orbit.fcol(2 * i), orbit.fcol(2 * i + 1), e);
                }
                let expected = diminutive_table(&nf).values;
                let got = diminutive_projection(&combo)?;
                if got != expected {
                    return Err(Error::BadFixture(format!(
                        "fixture {label}: diminutive projection {got:?} != {expected:?}"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn parse_unipotent_label(label: &str) -> Option<(Orbit, SignVector)> {
    let inner = label.strip_prefix("U(")?.strip_suffix(')')?;
    let (cols, eps) = inner.split_once(';')?;
    let columns: Vec<u32> = cols
        .split(',')
        .map(|c| c.trim().parse().ok())
        .collect::<Option<_>>()?;
    let orbit = Orbit::new(Family::Symplectic, &columns).ok()?;
    let eps: SignVector = eps.parse().ok()?;
    Some((orbit, eps))
}

fn convert(raw: &RawFixture) -> Result<SymmetrizedFormula> {
    let mut summands = Vec::new();
    for s in &raw.summands {
        if s.coeff.1 == 0 {
            return Err(Error::BadFixture(format!(
                "fixture {}: zero denominator",
                raw.label
            )));
        }
        let blocks = s
            .subgroup
            .iter()
            .map(|(kind, r)| {
                let kind = match kind.as_str() {
                    "A" => BlockKind::A,
                    "C" => BlockKind::C,
                    "D" => BlockKind::D,
                    other => {
                        return Err(Error::BadFixture(format!(
                            "fixture {}: unknown block type {other}",
                            raw.label
                        )))
                    }
                };
                Ok(WeylBlock::from_subscript(kind, *r))
            })
            .collect::<Result<Vec<_>>>()?;
        summands.push(Summand {
            coeff: Rational64::new(s.coeff.0, s.coeff.1),
            lambda_left: Weight::from_doubled(s.lambda_left.clone()),
            lambda_right_base: Weight::from_doubled(s.lambda_right_base.clone()),
            subgroup: WeylSubgroupSpec::new(blocks),
        });
    }
    let inf_char = summands
        .first()
        .map_or_else(|| Weight::zero(raw.rank), |s| dominant(RootFamily::C, &s.lambda_left));
    Ok(SymmetrizedFormula { rank: raw.rank, summands, inf_char })
}
