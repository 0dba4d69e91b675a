//! Candidate composition-factor parameters attached to Norm-set members.
//!
//! For a member `P` of a Norm set we compute the even-equal-pair index set
//! `τ₀(P)`, the stripped orbit `P*`, the two-group of characters of the
//! parameter group, the distinguished character, and the compact normal form
//! (TRIV/DET blocks plus an orthogonal tail) that drives the diminutive
//! multiplicity engine.

use std::fmt;

use serde::Serialize;
use serde_json::json;

use crate::error::{Error, Result};
use crate::orbits::{ColSize, Family, GroupType, IndexSet, Orbit};

/// A plus/minus sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl std::str::FromStr for Sign {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" => Ok(Sign::Minus),
            other => Err(format!("expected `+` or `-`, got `{other}`")),
        }
    }
}

/// Exponent vector (a_0,…,a_t) of the elementary abelian parameter group:
/// slot i is free exactly when a_i = 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamGroupSpec {
    pub exponents: Vec<u8>,
}

impl ParamGroupSpec {
    pub fn order(&self) -> usize {
        1 << self.exponents.iter().filter(|&&a| a == 1).count()
    }
}

/// A character of the parameter group: one sign per slot, `+` forced where
/// the exponent is 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignVector(pub Vec<Sign>);

impl SignVector {
    pub fn all_plus(len: usize) -> Self {
        SignVector(vec![Sign::Plus; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for SignVector {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        s.chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' => Ok(Sign::Minus),
                other => Err(format!("invalid sign character `{other}`")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(SignVector)
    }
}

/// The inducing datum on one GL factor: the string λ[x,y] with a spherical
/// (+) or determinant-twisted (−) character.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GlString {
    pub x: u32,
    pub y: u32,
    pub sign: Sign,
}

impl GlString {
    /// Number of torus coordinates the string occupies.
    pub fn size(&self) -> u32 {
        (self.x + self.y) / 2
    }
}

impl fmt::Display for GlString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "la[{},{}]^{}", self.x, self.y, self.sign)
    }
}

/// The full parameter of one candidate composition factor M(P, ε).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleParam {
    pub source: Orbit,
    pub tau0: IndexSet,
    pub p_star: Orbit,
    pub epsilon: SignVector,
    /// One λ[d,d]^− per index of τ₀(P), in index order.
    pub minus_strings: Vec<GlString>,
}

impl ModuleParam {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "P": self.source.columns(),
            "tau0": self.tau0.iter().collect::<Vec<_>>(),
            "Pstar": self.p_star.columns(),
            "epsilon": self.epsilon.to_string(),
            "minus_strings": self.minus_strings.iter().map(|s| [s.x, s.y]).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for ModuleParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({};{})", self.source, self.epsilon)
    }
}

/// One block of a compact normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Block {
    /// Trivial character of U(m): contributes paired exterior degrees.
    Triv(u32),
    /// Determinant character of U(m): forces the top exterior degree.
    Det(u32),
}

impl Block {
    pub fn size(&self) -> u32 {
        match *self {
            Block::Triv(m) | Block::Det(m) => m,
        }
    }
}

/// Tail factor of an orthogonal normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Tail {
    pub size: u32,
    pub sign: Sign,
}

/// Compact normal form of a module: unitary-group blocks plus an optional
/// orthogonal tail, inside a fixed ambient group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub blocks: Vec<Block>,
    pub tail: Option<Tail>,
    pub ambient: GroupType,
}

impl NormalForm {
    pub fn new(ambient: GroupType) -> Self {
        NormalForm { blocks: Vec::new(), tail: None, ambient }
    }

    /// Append a block, dropping it when the size is zero.
    pub fn push_block(&mut self, b: Block) {
        if b.size() > 0 {
            self.blocks.push(b);
        }
    }

    /// Append the translation of λ[x,y]^±: plus strings give TRIV((x+y)/2)
    /// (covering the odd x = y case as TRIV(x)), minus strings give
    /// DET(y) + TRIV((x−y)/2).
    pub fn push_string(&mut self, x: u32, y: u32, sign: Sign) {
        debug_assert!(x >= y && (x + y) % 2 == 0, "invalid string ({x},{y})");
        match sign {
            Sign::Plus => self.push_block(Block::Triv((x + y) / 2)),
            Sign::Minus => {
                self.push_block(Block::Det(y));
                self.push_block(Block::Triv((x - y) / 2));
            }
        }
    }

    pub fn set_tail(&mut self, size: u32, sign: Sign) {
        self.tail = Some(Tail { size, sign });
    }

    /// Coordinates accounted for: 2·Σ block sizes + tail size.
    pub fn total_size(&self) -> u32 {
        2 * self.blocks.iter().map(|b| b.size()).sum::<u32>()
            + self.tail.map_or(0, |t| t.size)
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            match b {
                Block::Triv(m) => write!(f, "TRIV({m})")?,
                Block::Det(m) => write!(f, "DET({m})")?,
            }
        }
        write!(f, "]")?;
        if let Some(t) = self.tail {
            write!(f, " + TAIL_O({},{})", t.size, t.sign)?;
        }
        write!(f, " in {}", self.ambient)
    }
}

/// Indices i ≥ 1 with `d_{2i-1} = d_{2i}` even: the equal pairs that peel off
/// as determinant strings.
pub fn tau0(p: &Orbit) -> IndexSet {
    let mi = p.max_index();
    (1..=mi / 2)
        .filter(|&i| {
            2 * i <= mi && p.col(2 * i - 1) == p.col(2 * i) && p.fcol(2 * i) % 2 == 0
        })
        .collect()
}

/// The orbit P* obtained by deleting one equal pair per τ₀ index.
pub fn p_star(p: &Orbit) -> Orbit {
    let values: Vec<u32> = tau0(p).iter().map(|i| p.fcol(2 * i)).collect();
    let mut need: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
    for &v in &values {
        *need.entry(v).or_insert(0) += 2;
    }
    let mut remaining = Vec::new();
    for &c in p.columns() {
        match need.get_mut(&c) {
            Some(n) if *n > 0 => *n -= 1,
            _ => remaining.push(c),
        }
    }
    Orbit::new(p.family(), &remaining).expect("removing τ₀ pairs preserves validity")
}

/// Exponents (a_0,…,a_t) of the parameter group of P, read off P*: slot i is
/// free iff `d*_{2i+1}` is even and positive.
pub fn param_group(p: &Orbit) -> ParamGroupSpec {
    let ps = p_star(p);
    let mi = ps.max_index();
    let t = (mi.max(1) - 1) / 2;
    let exponents = (0..=t)
        .map(|i| {
            let d = ps.fcol(2 * i + 1);
            u8::from(d % 2 == 0 && d > 0)
        })
        .collect();
    ParamGroupSpec { exponents }
}

/// All characters of a parameter group, in lexicographic order with `+`
/// before `-`.
pub fn characters(spec: &ParamGroupSpec) -> Vec<SignVector> {
    let free: Vec<usize> = spec
        .exponents
        .iter()
        .enumerate()
        .filter_map(|(i, &a)| (a == 1).then_some(i))
        .collect();
    (0..1usize << free.len())
        .map(|mask| {
            let mut signs = vec![Sign::Plus; spec.exponents.len()];
            for (k, &slot) in free.iter().enumerate() {
                if mask >> (free.len() - 1 - k) & 1 == 1 {
                    signs[slot] = Sign::Minus;
                }
            }
            SignVector(signs)
        })
        .collect()
}

/// The distinguished character of the parameter group of P: in each free
/// slot, the parity of the number of τ₀ pair sizes caught between the slot's
/// two P* columns (both comparisons non-strict; the orthogonal `d*_0` is ∞).
pub fn distinguished_epsilon(p: &Orbit) -> SignVector {
    let removed: Vec<u32> = tau0(p).iter().map(|i| p.fcol(2 * i)).collect();
    let ps = p_star(p);
    let spec = param_group(p);
    let signs = spec
        .exponents
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if a == 0 {
                return Sign::Plus;
            }
            let hi = ps.col(2 * i);
            let lo = ps.fcol(2 * i + 1);
            let count = removed
                .iter()
                .filter(|&&v| hi >= ColSize::Finite(v) && v >= lo)
                .count();
            if count % 2 == 1 {
                Sign::Minus
            } else {
                Sign::Plus
            }
        })
        .collect();
    SignVector(signs)
}

/// Assemble the parameter of the candidate module M(P, ε).
pub fn module_param(p: &Orbit, eps: &SignVector) -> Result<ModuleParam> {
    let spec = param_group(p);
    if eps.len() != spec.exponents.len() {
        return Err(Error::IncompatibleSign { index: eps.len().min(spec.exponents.len()) });
    }
    for (i, (&s, &a)) in eps.0.iter().zip(&spec.exponents).enumerate() {
        if a == 0 && s == Sign::Minus {
            return Err(Error::IncompatibleSign { index: i });
        }
    }
    let t0 = tau0(p);
    let minus_strings = t0
        .iter()
        .map(|i| {
            let d = p.fcol(2 * i);
            GlString { x: d, y: d, sign: Sign::Minus }
        })
        .collect();
    Ok(ModuleParam {
        source: p.clone(),
        tau0: t0,
        p_star: p_star(p),
        epsilon: eps.clone(),
        minus_strings,
    })
}

/// Compact normal form of a candidate module: DET(d) per minus string, then
/// the unipotent part of P* translated pair by pair with the character's
/// signs (orthogonal groups put the first column into the tail).
pub fn normal_form(m: &ModuleParam) -> NormalForm {
    let mut nf = NormalForm::new(m.source.group());
    for s in &m.minus_strings {
        nf.push_block(Block::Det(s.y));
    }
    let ps = &m.p_star;
    if m.source.family() == Family::Symplectic {
        for (i, &e) in m.epsilon.0.iter().enumerate() {
            nf.push_string(ps.fcol(2 * i), ps.fcol(2 * i + 1), e);
        }
    } else {
        nf.set_tail(ps.fcol(1), m.epsilon.0[0]);
        for (i, &e) in m.epsilon.0.iter().enumerate().skip(1) {
            nf.push_string(ps.fcol(2 * i), ps.fcol(2 * i + 1), e);
        }
    }
    debug_assert_eq!(nf.total_size(), m.source.dimension());
    nf
}

/// The all-plus normal form attached directly to the orbit's own columns
/// (the model of the functions on the orbit closure).
pub fn gamma_normal_form(o: &Orbit) -> NormalForm {
    let mut nf = NormalForm::new(o.group());
    let cols = o.columns();
    if o.family() == Family::Symplectic {
        for pair in cols.chunks(2) {
            nf.push_string(pair[0], pair[1], Sign::Plus);
        }
    } else {
        nf.set_tail(cols[0], Sign::Plus);
        for pair in cols[1..].chunks(2) {
            nf.push_string(pair[0], pair[1], Sign::Plus);
        }
    }
    nf
}

/// Normal form of the unipotent model attached to the orbit itself:
/// TRIV(c_{2i}) per τ index, then the all-plus form of the reduced orbit.
pub fn b_orbit_normal_form(o: &Orbit) -> NormalForm {
    let mut nf = NormalForm::new(o.group());
    for i in o.tau().iter() {
        nf.push_block(Block::Triv(o.fcol(2 * i)));
    }
    let inner = gamma_normal_form(&o.reduced());
    nf.blocks.extend(inner.blocks);
    nf.tail = inner.tail;
    nf
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(cols: &[u32]) -> Orbit {
        Orbit::new(Family::Symplectic, cols).unwrap()
    }

    fn sv(s: &str) -> SignVector {
        s.parse().unwrap()
    }

    #[test]
    fn tau0_examples() {
        assert_eq!(tau0(&sp(&[8, 8, 4, 4, 4, 4])), [2].into_iter().collect());
        assert_eq!(tau0(&sp(&[8, 8, 5, 5, 2, 2, 2, 0])), [3].into_iter().collect());
        assert!(tau0(&sp(&[8, 8, 5, 5, 3, 3])).is_empty());
    }

    #[test]
    fn p_star_examples() {
        assert_eq!(p_star(&sp(&[8, 8, 4, 4, 4, 4])), sp(&[8, 8, 4, 4]));
        assert_eq!(p_star(&sp(&[8, 6, 6, 4, 4, 4])), sp(&[8, 4]));
        assert_eq!(p_star(&sp(&[8, 8, 5, 5, 3, 3])), sp(&[8, 8, 5, 5, 3, 3]));
    }

    #[test]
    fn param_group_examples() {
        assert_eq!(param_group(&sp(&[8, 8, 4, 4, 4, 4])).exponents, vec![1, 1]);
        let big = sp(&[8, 6, 6, 4, 4, 2, 2, 0]);
        assert_eq!(tau0(&big), [1, 2, 3].into_iter().collect());
        assert_eq!(p_star(&big), sp(&[8, 0]));
        assert_eq!(param_group(&big).exponents, vec![0]);
        assert_eq!(param_group(&sp(&[8, 8, 5, 5, 2, 2, 2, 0])).exponents, vec![1, 0, 0]);
    }

    #[test]
    fn character_enumeration() {
        let list = characters(&ParamGroupSpec { exponents: vec![1, 1] });
        assert_eq!(
            list.iter().map(|e| e.to_string()).collect::<Vec<_>>(),
            vec!["++", "+-", "-+", "--"]
        );
        assert_eq!(characters(&ParamGroupSpec { exponents: vec![0] }), vec![sv("+")]);
        let list = characters(&ParamGroupSpec { exponents: vec![1, 0, 0] });
        assert_eq!(list, vec![sv("+++"), sv("-++")]);
    }

    #[test]
    fn distinguished_examples() {
        assert_eq!(distinguished_epsilon(&sp(&[8, 8, 4, 4, 4, 4])), sv("+-"));
        assert_eq!(distinguished_epsilon(&sp(&[8, 6, 6, 6, 2, 2, 2, 0])), sv("-+"));
        assert_eq!(distinguished_epsilon(&sp(&[8, 8, 5, 5, 2, 2, 2, 0])), sv("+++"));
        assert_eq!(distinguished_epsilon(&sp(&[8, 8, 5, 5, 3, 3])), sv("+++"));
    }

    #[test]
    fn module_param_examples() {
        let m = module_param(&sp(&[8, 8, 4, 4, 4, 4]), &sv("+-")).unwrap();
        assert_eq!(m.minus_strings, vec![GlString { x: 4, y: 4, sign: Sign::Minus }]);
        assert_eq!(m.p_star, sp(&[8, 8, 4, 4]));

        let m = module_param(&sp(&[8, 6, 6, 4, 4, 2, 2, 0]), &sv("+")).unwrap();
        assert_eq!(
            m.minus_strings.iter().map(|s| s.x).collect::<Vec<_>>(),
            vec![6, 4, 2]
        );
        assert_eq!(m.p_star, sp(&[8, 0]));

        let m = module_param(&sp(&[8, 8, 5, 5, 3, 3]), &sv("+++")).unwrap();
        assert!(m.minus_strings.is_empty());

        assert_eq!(
            module_param(&sp(&[8, 8, 5, 5, 2, 2, 2, 0]), &sv("+-+")),
            Err(Error::IncompatibleSign { index: 1 })
        );
    }

    #[test]
    fn normal_form_examples() {
        let m = module_param(&sp(&[8, 8, 5, 5, 2, 2, 2, 0]), &sv("-++")).unwrap();
        let nf = normal_form(&m);
        assert_eq!(nf.blocks, vec![Block::Det(2), Block::Det(8), Block::Triv(5), Block::Triv(1)]);
        assert_eq!(nf.ambient, GroupType { family: Family::Symplectic, dimension: 32 });

        let m = module_param(&sp(&[8, 8, 4, 4, 4, 4]), &sv("+-")).unwrap();
        let nf = normal_form(&m);
        assert_eq!(nf.blocks, vec![Block::Det(4), Block::Triv(8), Block::Det(4)]);
        assert_eq!(nf.total_size(), 32);

        let m = module_param(&sp(&[8, 6, 4, 2]), &sv("++")).unwrap();
        assert_eq!(normal_form(&m).blocks, vec![Block::Triv(7), Block::Triv(3)]);
    }

    #[test]
    fn gamma_forms() {
        let o = Orbit::new(Family::EvenOrthogonal, &[6, 6, 2]).unwrap();
        let nf = gamma_normal_form(&o);
        assert_eq!(nf.blocks, vec![Block::Triv(4)]);
        assert_eq!(nf.tail, Some(Tail { size: 6, sign: Sign::Plus }));
        assert_eq!(nf.ambient.dimension, 14);

        assert_eq!(
            gamma_normal_form(&sp(&[6, 2, 2, 2])).blocks,
            vec![Block::Triv(4), Block::Triv(2)]
        );
        assert_eq!(
            gamma_normal_form(&sp(&[4, 2, 2, 0])).blocks,
            vec![Block::Triv(3), Block::Triv(1)]
        );
    }

    #[test]
    fn b_orbit_forms() {
        assert_eq!(
            b_orbit_normal_form(&sp(&[4, 2, 2, 0])).blocks,
            vec![Block::Triv(2), Block::Triv(2)]
        );
        assert_eq!(b_orbit_normal_form(&sp(&[2, 2])).blocks, vec![Block::Triv(2)]);
        let big = sp(&[9, 9, 9, 9, 8, 6, 6, 6, 5, 5, 4, 2, 2, 2, 2, 0]);
        let nf = b_orbit_normal_form(&big);
        // τ pairs contribute TRIV(9), TRIV(6), TRIV(2), TRIV(2); the reduced
        // orbit (9,9,8,6,5,5,4,0) contributes its all-plus blocks.
        assert_eq!(nf.blocks[..4], [Block::Triv(9), Block::Triv(6), Block::Triv(2), Block::Triv(2)]);
        assert_eq!(nf.total_size(), big.dimension());
    }

    #[test]
    fn distinguished_is_unique_among_characters() {
        for cols in [
            vec![8, 6, 6, 4, 4, 2, 2, 0],
            vec![8, 8, 4, 4, 4, 4],
            vec![8, 8, 5, 5, 2, 2, 2, 0],
        ] {
            let p = sp(&cols);
            let eps = distinguished_epsilon(&p);
            let list = characters(&param_group(&p));
            assert_eq!(list.iter().filter(|&e| *e == eps).count(), 1);
        }
    }

    #[test]
    fn module_param_json() {
        let m = module_param(&sp(&[8, 8, 4, 4, 4, 4]), &sv("+-")).unwrap();
        let v = m.to_json();
        assert_eq!(v["epsilon"], "+-");
        assert_eq!(v["Pstar"], serde_json::json!([8, 8, 4, 4]));
        assert_eq!(v["minus_strings"], serde_json::json!([[4, 4]]));
    }
}
