//! Weights in standard coordinates, stored exactly as doubled integers so
//! that half-integral entries need no rational arithmetic.

use std::fmt;

/// Classical root-system family (A uses n coordinates for gl(n); B, C, D use
/// the usual signed coordinates).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RootFamily {
    A,
    B,
    C,
    D,
}

impl std::str::FromStr for RootFamily {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "A" | "a" => Ok(RootFamily::A),
            "B" | "b" => Ok(RootFamily::B),
            "C" | "c" => Ok(RootFamily::C),
            "D" | "d" => Ok(RootFamily::D),
            other => Err(format!("unknown root family `{other}`")),
        }
    }
}

/// A weight vector; coordinates are stored as twice their value, so integral
/// and half-integral weights live in one exact representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    pub fn from_ints(v: &[i64]) -> Self {
        Weight { doubled: v.iter().map(|&x| 2 * x).collect() }
    }

    /// Construct from coordinates already scaled by 2.
    pub fn from_doubled(v: Vec<i64>) -> Self {
        Weight { doubled: v }
    }

    pub fn zero(rank: usize) -> Self {
        Weight { doubled: vec![0; rank] }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn rank(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|&x| x % 2 == 0)
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight {
            doubled: self.doubled.iter().zip(&other.doubled).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, &x) in self.doubled.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            if x % 2 == 0 {
                write!(f, "{}", x / 2)?;
            } else {
                write!(f, "{x}/2")?;
            }
        }
        write!(f, ")")
    }
}

/// Dominant representative of a weight under the family's Weyl group:
/// type A sorts descending; B and C sort absolute values descending; D sorts
/// absolute values descending and keeps a sign on the last coordinate when
/// the number of negative entries is odd (the connected SO(2n) chamber).
pub fn dominant(family: RootFamily, w: &Weight) -> Weight {
    let mut v: Vec<i64> = w.doubled().to_vec();
    match family {
        RootFamily::A => {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        RootFamily::B | RootFamily::C => {
            for x in v.iter_mut() {
                *x = x.abs();
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
        RootFamily::D => {
            let negatives = v.iter().filter(|&&x| x < 0).count();
            let has_zero = v.iter().any(|&x| x == 0);
            for x in v.iter_mut() {
                *x = x.abs();
            }
            v.sort_unstable_by(|a, b| b.cmp(a));
            if negatives % 2 == 1 && !has_zero {
                if let Some(last) = v.last_mut() {
                    *last = -*last;
                }
            }
        }
    }
    Weight::from_doubled(v)
}

/// A K-type label: a dominant highest weight plus the ±1 tag distinguishing
/// the two constituents for disconnected orthogonal groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KType {
    pub highest_weight: Weight,
    pub det_tag: Option<i8>,
}

impl KType {
    pub fn plain(highest_weight: Weight) -> Self {
        KType { highest_weight, det_tag: None }
    }
}
