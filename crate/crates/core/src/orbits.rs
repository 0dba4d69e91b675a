//! Classical nilpotent orbits encoded by column sizes.
//!
//! An orbit of `Sp(2n,C)` or `O(m,C)` is stored as the weakly decreasing list
//! of column sizes of its partition.  Symplectic lists have even length and
//! are indexed `c_0..c_{2p+1}`; orthogonal lists have odd length, indexed
//! `c_1..c_{2p+1}`, with the formal `c_0 = ∞` never stored.  Construction
//! canonicalizes trailing zeros and enforces the pairing constraints.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Group family tag.  The serialized names match the JSON/CLI interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "Sp")]
    Symplectic,
    #[serde(rename = "Oeven")]
    EvenOrthogonal,
    #[serde(rename = "Oodd")]
    OddOrthogonal,
}

impl Family {
    pub fn is_orthogonal(self) -> bool {
        !matches!(self, Family::Symplectic)
    }

    /// Required parity of the column sum (0 = even, 1 = odd).
    pub fn sum_parity(self) -> u32 {
        match self {
            Family::OddOrthogonal => 1,
            _ => 0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Symplectic => "Sp",
            Family::EvenOrthogonal => "Oeven",
            Family::OddOrthogonal => "Oodd",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Sp" | "sp" => Ok(Family::Symplectic),
            "Oeven" | "oeven" | "O_even" => Ok(Family::EvenOrthogonal),
            "Oodd" | "oodd" | "O_odd" => Ok(Family::OddOrthogonal),
            other => Err(format!("unknown group family `{other}` (expected Sp, Oeven or Oodd)")),
        }
    }
}

/// A concrete classical group: family plus the dimension of its standard
/// representation (2n for Sp(2n), m for O(m)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupType {
    pub family: Family,
    pub dimension: u32,
}

impl GroupType {
    pub fn new(family: Family, dimension: u32) -> Result<Self> {
        if dimension % 2 != family.sum_parity() {
            return Err(Error::SizeMismatch { family: family.name().to_string(), total: dimension });
        }
        Ok(GroupType { family, dimension })
    }

    /// Rank of the maximal torus: n for Sp(2n) and O(2n+δ).
    pub fn rank(&self) -> u32 {
        self.dimension / 2
    }

    pub fn delta(&self) -> u32 {
        self.dimension % 2
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Symplectic => write!(f, "Sp({})", self.dimension),
            _ => write!(f, "O({})", self.dimension),
        }
    }
}

/// A column size, with the formal unbounded value used for the orthogonal
/// `c_0` and in degeneration quadruples.  `Unbounded` compares greater than
/// every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ColSize {
    Finite(u32),
    Unbounded,
}

impl ColSize {
    pub fn finite(self) -> Option<u32> {
        match self {
            ColSize::Finite(v) => Some(v),
            ColSize::Unbounded => None,
        }
    }
}

impl fmt::Display for ColSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColSize::Finite(v) => write!(f, "{v}"),
            ColSize::Unbounded => write!(f, "inf"),
        }
    }
}

/// A sorted set of positive indices, used for the equal-pair index sets
/// attached to an orbit.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexSet(pub BTreeSet<usize>);

impl IndexSet {
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        IndexSet(iter.into_iter().collect())
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Intermediate struct for validated deserialization.
#[derive(Deserialize)]
struct RawOrbit {
    group: Family,
    columns: Vec<u32>,
}

/// A validated nilpotent orbit in canonical column form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawOrbit")]
pub struct Orbit {
    #[serde(rename = "group")]
    family: Family,
    columns: Vec<u32>,
}

impl TryFrom<RawOrbit> for Orbit {
    type Error = Error;
    fn try_from(raw: RawOrbit) -> Result<Self> {
        Orbit::new(raw.group, &raw.columns)
    }
}

impl Orbit {
    /// Validate and canonicalize a column list: weak descent, canonical
    /// trailing-zero padding (even length for Sp, odd for O), pairing
    /// constraints, and sum parity for the family.
    pub fn new(family: Family, columns: &[u32]) -> Result<Self> {
        for (i, w) in columns.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::NotDecreasing { index: i + 1 });
            }
        }
        let mut cols: Vec<u32> = columns.to_vec();
        while cols.last() == Some(&0) {
            cols.pop();
        }
        let total: u32 = cols.iter().sum();
        if total % 2 != family.sum_parity() {
            return Err(Error::SizeMismatch { family: family.name().to_string(), total });
        }
        let want_even_len = family == Family::Symplectic;
        if (cols.len() % 2 == 0) != want_even_len {
            cols.push(0);
        }
        // Pairing constraint: adjacent columns grouped from the front for Sp
        // (pairs at list positions (0,1),(2,3),…) and with the first column
        // unpaired for O (pairs at (1,2),(3,4),…) must have even sums.
        let first_pair = if want_even_len { 0 } else { 1 };
        let mut k = first_pair;
        while k + 1 < cols.len() {
            if (cols[k] + cols[k + 1]) % 2 != 0 {
                return Err(Error::ParityPairViolation { index: k });
            }
            k += 2;
        }
        Ok(Orbit { family, columns: cols })
    }

    /// Build an orbit from the row form of its partition (transposing to
    /// columns first).
    pub fn from_rows(family: Family, rows: &[u32]) -> Result<Self> {
        let mut rows: Vec<u32> = rows.to_vec();
        rows.sort_unstable_by(|a, b| b.cmp(a));
        let width = rows.first().copied().unwrap_or(0);
        let columns: Vec<u32> =
            (0..width).map(|i| rows.iter().filter(|&&r| r > i).count() as u32).collect();
        Orbit::new(family, &columns)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn dimension(&self) -> u32 {
        self.columns.iter().sum()
    }

    pub fn group(&self) -> GroupType {
        GroupType { family: self.family, dimension: self.dimension() }
    }

    /// Largest pair-convention index `2p+1` of the column list.
    pub fn max_index(&self) -> usize {
        if self.family == Family::Symplectic {
            self.columns.len().saturating_sub(1)
        } else {
            self.columns.len()
        }
    }

    /// Column at a pair-convention index: `c_0 = ∞` for orthogonal orbits, finite
    /// otherwise.  Panics if the index exceeds `max_index`.
    pub fn col(&self, i: usize) -> ColSize {
        if self.family == Family::Symplectic {
            ColSize::Finite(self.columns[i])
        } else if i == 0 {
            ColSize::Unbounded
        } else {
            ColSize::Finite(self.columns[i - 1])
        }
    }

    /// Finite column at pair-convention index `i ≥ 1` (or any index for Sp).
    pub fn fcol(&self, i: usize) -> u32 {
        self.col(i).finite().expect("finite column index")
    }

    /// Number of columns of the given size.
    pub fn column_multiplicity(&self, size: u32) -> usize {
        self.columns.iter().filter(|&&c| c == size).count()
    }

    /// Indices `i ≥ 1` with `c_{2i-1} = c_{2i}` (equal pairs straddling the
    /// natural pair grouping).
    pub fn tau(&self) -> IndexSet {
        let mi = self.max_index();
        (1..=mi / 2)
            .filter(|&i| 2 * i <= mi && self.col(2 * i - 1) == self.col(2 * i))
            .collect()
    }

    /// The reduced orbit: delete one equal pair of columns for each index in
    /// `tau`.
    pub fn reduced(&self) -> Orbit {
        let values: Vec<u32> = self.tau().iter().map(|i| self.fcol(2 * i)).collect();
        self.remove_pairs(&values)
    }

    fn remove_pairs(&self, pair_values: &[u32]) -> Orbit {
        let mut need: std::collections::HashMap<u32, usize> = std::collections::HashMap::new();
        for &v in pair_values {
            *need.entry(v).or_insert(0) += 2;
        }
        let mut remaining = Vec::with_capacity(self.columns.len());
        for &c in &self.columns {
            match need.get_mut(&c) {
                Some(n) if *n > 0 => *n -= 1,
                _ => remaining.push(c),
            }
        }
        Orbit::new(self.family, &remaining).expect("removing equal column pairs preserves validity")
    }

    /// True iff no column value is repeated three or more times.
    pub fn is_generic(&self) -> bool {
        self.columns
            .iter()
            .filter(|&&c| c > 0)
            .all(|&c| self.column_multiplicity(c) <= 2)
    }

    /// Decompose into a generic orbit plus the removed equal column pairs
    /// (as few pairs as possible).
    pub fn generic_part(&self) -> GenericDecomposition {
        let mut removed = Vec::new();
        let mut seen = BTreeSet::new();
        for &c in &self.columns {
            if c == 0 || !seen.insert(c) {
                continue;
            }
            let mult = self.column_multiplicity(c);
            if mult > 2 {
                let keep = if mult % 2 == 1 { 1 } else { 2 };
                for _ in 0..(mult - keep) / 2 {
                    removed.push(c);
                }
            }
        }
        removed.sort_unstable_by(|a, b| b.cmp(a));
        let generic_orbit = self.remove_pairs(&removed);
        GenericDecomposition { removed_pairs: removed, generic_orbit }
    }

    /// Parity classification of the positive columns.
    pub fn parity(&self) -> ColumnParity {
        let mut even = false;
        let mut odd = false;
        for &c in self.columns.iter().filter(|&&c| c > 0) {
            if c % 2 == 0 {
                even = true;
            } else {
                odd = true;
            }
        }
        match (even, odd) {
            (_, false) => ColumnParity::Even,
            (false, true) => ColumnParity::Odd,
            (true, true) => ColumnParity::Mixed,
        }
    }
}

impl fmt::Display for Orbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.columns.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ColumnParity {
    Even,
    Odd,
    Mixed,
}

/// Result of `generic_part`: the removed pair sizes and the generic orbit
/// they leave behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericDecomposition {
    /// Sizes of the removed pairs, weakly decreasing (one entry per pair).
    pub removed_pairs: Vec<u32>,
    pub generic_orbit: Orbit,
}
