//! Weyl-subgroup-symmetrized character formulas, their restriction to the
//! maximal compact subgroup, and K-type multiplicity evaluation.
//!
//! A standard module X(λ_L; λ_R) restricts to K as the full torus-induced
//! character Ind_T^K(C_{λ_L−λ_R}); a symmetrized formula is a rational
//! combination of sign-alternating sums of standard modules over
//! block-product Weyl subgroups.  Expanding and collecting at dominant
//! representatives yields an integer combination of torus-induced terms,
//! against which K-type multiplicities are evaluated with the weight
//! multiplicity engine.

mod fixtures;

pub use fixtures::FixtureSet;

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::kmult;
use crate::liecore::{
    dominant, weight_multiplicity, KType, RootFamily, Weight, WeylBlock, WeylSubgroupSpec,
};
use crate::orbits::{ColumnParity, Family, Orbit};
use crate::parameters::{
    distinguished_epsilon, module_param, param_group, GlString, Sign, SignVector,
};

/// One principal-series term X(λ_L; λ_R) with a rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardModuleTerm {
    pub coeff: Rational64,
    pub lambda_left: Weight,
    pub lambda_right: Weight,
}

/// One symmetrized summand: coeff · Σ_w sgn(w) X(λ_L; w·base).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Summand {
    pub coeff: Rational64,
    pub lambda_left: Weight,
    pub lambda_right_base: Weight,
    pub subgroup: WeylSubgroupSpec,
}

/// A rational combination of symmetrized standard-module sums in a fixed
/// rank, with the common infinitesimal character as metadata.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetrizedFormula {
    pub rank: usize,
    pub summands: Vec<Summand>,
    pub inf_char: Weight,
}

impl SymmetrizedFormula {
    /// Check that every summand has consistent ranks and that every λ_L lies
    /// in the signed-permutation orbit of the infinitesimal character.
    pub fn validate(&self) -> Result<()> {
        for s in &self.summands {
            for w in [&s.lambda_left, &s.lambda_right_base] {
                if w.rank() != self.rank {
                    return Err(Error::RankMismatch { expected: self.rank, got: w.rank() });
                }
            }
            if s.subgroup.rank() != self.rank {
                return Err(Error::RankMismatch { expected: self.rank, got: s.subgroup.rank() });
            }
            if dominant(RootFamily::C, &s.lambda_left) != self.inf_char {
                return Err(Error::BadFixture(format!(
                    "summand infinitesimal character {} differs from {}",
                    dominant(RootFamily::C, &s.lambda_left),
                    self.inf_char
                )));
            }
        }
        Ok(())
    }
}

/// An integer combination of torus-induced characters Ind_T^K(C_λ), keyed by
/// the dominant representative of λ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusCharCombo {
    pub rank: usize,
    terms: BTreeMap<Weight, i64>,
}

impl TorusCharCombo {
    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coeff(&self, w: &Weight) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl fmt::Display for TorusCharCombo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (w, c)) in self.terms().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(f, "{c:+} Ind_T^K(C_{w})")?;
        }
        Ok(())
    }
}

/// Expand every symmetrized summand into plain standard-module terms, one
/// per Weyl element, without collecting.
pub fn expand_symmetrized(formula: &SymmetrizedFormula) -> Vec<StandardModuleTerm> {
    let mut out = Vec::new();
    for s in &formula.summands {
        for w in s.subgroup.elements() {
            out.push(StandardModuleTerm {
                coeff: s.coeff * Rational64::from_integer(w.sign),
                lambda_left: s.lambda_left.clone(),
                lambda_right: w.apply(&s.lambda_right_base),
            });
        }
    }
    out
}

/// Collect standard-module terms into a torus combo: each term contributes
/// its coefficient at the dominant representative of λ_L − λ_R.  The result
/// must come out integral.
pub fn restrict_to_torus_combo(terms: &[StandardModuleTerm]) -> Result<TorusCharCombo> {
    let rank = terms.first().map_or(0, |t| t.lambda_left.rank());
    let mut acc: BTreeMap<Weight, Rational64> = BTreeMap::new();
    for t in terms {
        if t.lambda_left.rank() != rank || t.lambda_right.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, got: t.lambda_right.rank() });
        }
        let mu = dominant(RootFamily::C, &t.lambda_left.sub(&t.lambda_right));
        *acc.entry(mu).or_insert_with(Rational64::zero) += t.coeff;
    }
    let mut out = BTreeMap::new();
    for (w, c) in acc {
        if c.is_zero() {
            continue;
        }
        if !c.denom().is_one() {
            return Err(Error::NonIntegralResult { num: *c.numer(), den: *c.denom() });
        }
        out.insert(w, *c.numer());
    }
    Ok(TorusCharCombo { rank, terms: out })
}

/// Pointwise difference of two combos.
pub fn combo_difference(a: &TorusCharCombo, b: &TorusCharCombo) -> Result<TorusCharCombo> {
    if a.rank != b.rank && !(a.is_empty() || b.is_empty()) {
        return Err(Error::RankMismatch { expected: a.rank, got: b.rank });
    }
    let mut terms = a.terms.clone();
    for (w, c) in b.terms() {
        let e = terms.entry(w.clone()).or_insert(0);
        *e -= c;
        if *e == 0 {
            terms.remove(w);
        }
    }
    Ok(TorusCharCombo { rank: a.rank.max(b.rank), terms })
}

/// The alternating-sum building block contributed by one GL factor of an
/// induced parameter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaFragment {
    /// Doubled coordinates, aligned with `blocks`.
    pub lambda_left: Vec<i64>,
    pub lambda_right_base: Vec<i64>,
    pub blocks: Vec<WeylBlock>,
}

impl FormulaFragment {
    pub fn rank(&self) -> usize {
        self.lambda_left.len()
    }
}

/// The fragment of the character formula carried by one λ[x,y]^± string on
/// GL((x+y)/2): a descending coordinate string, symmetrized over the block's
/// symmetric group; minus strings split into a determinant part of y
/// coordinates (whose base string is shifted down by one) and a spherical
/// |det|-twisted part of (x−y)/2 coordinates.
pub fn gl_block_formula(string: &GlString) -> FormulaFragment {
    let x = i64::from(string.x);
    let y = i64::from(string.y);
    let descending = |start: i64, len: i64| -> Vec<i64> {
        (0..len).map(|k| start - 2 * k).collect()
    };
    match string.sign {
        Sign::Plus => {
            let m = (x + y) / 2;
            let coords = descending(x, m);
            FormulaFragment {
                lambda_left: coords.clone(),
                lambda_right_base: coords,
                blocks: blocks_of(&[m as usize]),
            }
        }
        Sign::Minus => {
            let half = (x - y) / 2;
            let mut ll = descending(y, y);
            let mut base = descending(y - 2, y);
            let twist = descending(x, half);
            ll.extend(&twist);
            base.extend(&twist);
            FormulaFragment {
                lambda_left: ll,
                lambda_right_base: base,
                blocks: blocks_of(&[y as usize, half as usize]),
            }
        }
    }
}

fn blocks_of(lens: &[usize]) -> Vec<WeylBlock> {
    lens.iter()
        .filter(|&&l| l > 0)
        .map(|&l| WeylBlock { kind: crate::liecore::BlockKind::A, len: l })
        .collect()
}

/// Induction in stages: wrap GL fragments around a tail formula.  The tail's
/// coordinates come first, then the fragments' in order; subgroups
/// concatenate blockwise and coefficients carry over from the tail.
pub fn induce_formula(
    fragments: &[FormulaFragment],
    tail: &SymmetrizedFormula,
) -> Result<SymmetrizedFormula> {
    tail.validate()?;
    for f in fragments {
        let block_len: usize = f.blocks.iter().map(|b| b.len).sum();
        if f.lambda_right_base.len() != f.rank() || block_len != f.rank() {
            return Err(Error::RankMismatch { expected: f.rank(), got: block_len });
        }
    }
    let rank = tail.rank + fragments.iter().map(|f| f.rank()).sum::<usize>();
    let summands = tail
        .summands
        .iter()
        .map(|s| {
            let mut ll = s.lambda_left.doubled().to_vec();
            let mut base = s.lambda_right_base.doubled().to_vec();
            let mut blocks = s.subgroup.blocks.clone();
            for f in fragments {
                ll.extend(&f.lambda_left);
                base.extend(&f.lambda_right_base);
                blocks.extend(f.blocks.iter().copied());
            }
            Summand {
                coeff: s.coeff,
                lambda_left: Weight::from_doubled(ll),
                lambda_right_base: Weight::from_doubled(base),
                subgroup: WeylSubgroupSpec::new(blocks),
            }
        })
        .collect::<Vec<_>>();
    let inf_char = dominant(
        RootFamily::C,
        &summands.first().map_or_else(|| Weight::zero(rank), |s| s.lambda_left.clone()),
    );
    let formula = SymmetrizedFormula { rank, summands, inf_char };
    formula.validate()?;
    Ok(formula)
}

/// Multiplicity of a K-type in a torus combo: Σ_λ coeff(λ)·m_μ(λ), using
/// type-C weight multiplicities (the engine covers symplectic groups; an
/// orthogonal det tag is rejected).
pub fn ktype_multiplicity(combo: &TorusCharCombo, mu: &KType) -> Result<i64> {
    if mu.det_tag.is_some() {
        return Err(Error::UnsupportedFamily { family: "O".to_string() });
    }
    if mu.highest_weight.rank() != combo.rank {
        return Err(Error::RankMismatch {
            expected: combo.rank,
            got: mu.highest_weight.rank(),
        });
    }
    let mut total = 0i64;
    for (lam, c) in combo.terms() {
        total += c * weight_multiplicity(RootFamily::C, &mu.highest_weight, lam) as i64;
    }
    Ok(total)
}

/// Full torus combo of a formula (expand, then restrict).
pub fn formula_combo(f: &SymmetrizedFormula) -> Result<TorusCharCombo> {
    restrict_to_torus_combo(&expand_symmetrized(f))
}

/// Assemble the character formula of the orbit-closure model: sum, over the
/// Norm set of the orbit, of each distinguished module induced from its
/// minus strings and stored unipotent tail; non-generic orbits wrap their
/// removed column pairs around the generic part's formula.
pub fn assemble_r_obar(o: &Orbit, fixtures: &FixtureSet) -> Result<SymmetrizedFormula> {
    if o.family() != Family::Symplectic {
        return Err(Error::UnsupportedFamily { family: o.family().name().to_string() });
    }
    if o.parity() != ColumnParity::Even {
        return Err(Error::NotEvenGeneric);
    }
    if !o.is_generic() {
        let decomposition = o.generic_part();
        let inner = assemble_r_obar(&decomposition.generic_orbit, fixtures)?;
        let fragments: Vec<FormulaFragment> = decomposition
            .removed_pairs
            .iter()
            .map(|&g| gl_block_formula(&GlString { x: g, y: g, sign: Sign::Plus }))
            .collect();
        return induce_formula(&fragments, &inner);
    }
    let mut summands = Vec::new();
    let rank = o.group().rank() as usize;
    for p in crate::degeneration::norm_set(o).members {
        let eps = distinguished_epsilon(&p);
        let m = module_param(&p, &eps)?;
        let tail = fixtures
            .unipotent(&m.p_star, &m.epsilon)
            .ok_or_else(|| Error::MissingFixture {
                label: FixtureSet::unipotent_label(&m.p_star, &m.epsilon),
            })?;
        let fragments: Vec<FormulaFragment> =
            m.minus_strings.iter().map(gl_block_formula).collect();
        let induced = induce_formula(&fragments, tail)?;
        summands.extend(induced.summands);
    }
    let inf_char = dominant(
        RootFamily::C,
        &summands.first().map_or_else(|| Weight::zero(rank), |s| s.lambda_left.clone()),
    );
    let formula = SymmetrizedFormula { rank, summands, inf_char };
    formula.validate()?;
    Ok(formula)
}

/// The character formula of the unipotent orbit model: TRIV pair fragments
/// for the τ indices wrapped around the reduced orbit's all-plus tail, which
/// is exactly the distinguished assembly of the same orbit's own column
/// data.  Only needed at the ambient orbit itself.
pub fn assemble_b_orbit(o: &Orbit, fixtures: &FixtureSet) -> Result<SymmetrizedFormula> {
    if o.family() != Family::Symplectic {
        return Err(Error::UnsupportedFamily { family: o.family().name().to_string() });
    }
    let reduced = o.reduced();
    let eps = SignVector::all_plus(param_group(&reduced).exponents.len());
    let tail = fixtures.unipotent(&reduced, &eps).ok_or_else(|| Error::MissingFixture {
        label: FixtureSet::unipotent_label(&reduced, &eps),
    })?;
    let fragments: Vec<FormulaFragment> = o
        .tau()
        .iter()
        .map(|i| gl_block_formula(&GlString { x: o.fcol(2 * i), y: o.fcol(2 * i), sign: Sign::Plus }))
        .collect();
    induce_formula(&fragments, tail)
}

/// Project a combo onto the diminutive K-types of Sp(2n): multiplicities at
/// μ = (1^{2k}) for k = 0..⌊n/2⌋.
pub fn diminutive_projection(combo: &TorusCharCombo) -> Result<Vec<i64>> {
    let n = combo.rank;
    (0..=n / 2)
        .map(|k| {
            let mut coords = vec![1i64; 2 * k];
            coords.resize(n, 0);
            ktype_multiplicity(combo, &KType::plain(Weight::from_ints(&coords)))
        })
        .collect()
}

/// Convenience: the diminutive table the generating-function engine assigns
/// to an orbit's closure model, for cross-checks.
pub fn kmult_gamma_values(o: &Orbit) -> Vec<i64> {
    kmult::diminutive_table(&crate::parameters::gamma_normal_form(o)).values
}
