//! Enumeration of Weyl groups and their block-product subgroups as signed
//! permutations with determinant signs.

use itertools::Itertools;

use super::weight::{RootFamily, Weight};

/// Kind of one factor of a block-product subgroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockKind {
    /// Symmetric group on the block's coordinates.
    A,
    /// Signed permutations (hyperoctahedral group).
    C,
    /// Evenly-signed permutations.
    D,
}

/// One factor acting on `len` consecutive coordinates.  Note that a factor
/// written with a Lie-type subscript `X_r` acts on `r+1` coordinates for
/// type A and on `r` coordinates for types C and D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WeylBlock {
    pub kind: BlockKind,
    pub len: usize,
}

impl WeylBlock {
    pub fn order(&self) -> usize {
        let fact: usize = (1..=self.len).product();
        match self.kind {
            BlockKind::A => fact,
            BlockKind::C => fact << self.len,
            BlockKind::D => {
                if self.len == 0 {
                    1
                } else {
                    fact << (self.len - 1)
                }
            }
        }
    }

    /// Block from the subscript notation: `("A", r)` is the symmetric group
    /// on r+1 coordinates, `("C", r)` and `("D", r)` act on r coordinates.
    pub fn from_subscript(kind: BlockKind, r: usize) -> Self {
        let len = match kind {
            BlockKind::A => r + 1,
            _ => r,
        };
        WeylBlock { kind, len }
    }
}

/// An ordered product of blocks covering consecutive coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylSubgroupSpec {
    pub blocks: Vec<WeylBlock>,
}

/// A signed permutation: `apply` sends coordinate vector `v` to the vector
/// with entries `signs[k] * v[source[k]]`; `sign` is the determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    source: Vec<usize>,
    signs: Vec<i64>,
    pub sign: i64,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement { source: (0..rank).collect(), signs: vec![1; rank], sign: 1 }
    }

    pub fn apply_doubled(&self, v: &[i64]) -> Vec<i64> {
        self.source.iter().zip(&self.signs).map(|(&s, &sg)| sg * v[s]).collect()
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        Weight::from_doubled(self.apply_doubled(w.doubled()))
    }
}

fn perm_parity(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

fn block_elements(block: &WeylBlock) -> Vec<WeylElement> {
    let n = block.len;
    let mut out = Vec::with_capacity(block.order());
    for perm in (0..n).permutations(n) {
        let p_sign = perm_parity(&perm);
        let sign_patterns: Vec<Vec<i64>> = match block.kind {
            BlockKind::A => vec![vec![1; n]],
            BlockKind::C | BlockKind::D => (0..1u32 << n)
                .map(|mask| {
                    (0..n).map(|k| if mask >> k & 1 == 1 { -1 } else { 1 }).collect()
                })
                .filter(|signs: &Vec<i64>| {
                    block.kind == BlockKind::C
                        || signs.iter().filter(|&&s| s < 0).count() % 2 == 0
                })
                .collect(),
        };
        for signs in sign_patterns {
            let det: i64 = p_sign * signs.iter().product::<i64>();
            out.push(WeylElement { source: perm.clone(), signs, sign: det });
        }
    }
    out
}

impl WeylSubgroupSpec {
    pub fn new(blocks: Vec<WeylBlock>) -> Self {
        WeylSubgroupSpec { blocks }
    }

    /// The full Weyl group of a classical family in the given coordinate
    /// rank.
    pub fn full(family: RootFamily, rank: usize) -> Self {
        let kind = match family {
            RootFamily::A => BlockKind::A,
            RootFamily::B | RootFamily::C => BlockKind::C,
            RootFamily::D => BlockKind::D,
        };
        WeylSubgroupSpec::new(vec![WeylBlock { kind, len: rank }])
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(|b| b.len).sum()
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(|b| b.order()).product()
    }

    /// All elements, as signed permutations of the full coordinate range.
    pub fn elements(&self) -> Vec<WeylElement> {
        let mut acc = vec![WeylElement::identity(0)];
        let mut offset = 0;
        for block in &self.blocks {
            let locals = block_elements(block);
            let mut next = Vec::with_capacity(acc.len() * locals.len());
            for base in &acc {
                for loc in &locals {
                    let mut source = base.source.clone();
                    let mut signs = base.signs.clone();
                    source.extend(loc.source.iter().map(|&s| s + offset));
                    signs.extend(&loc.signs);
                    next.push(WeylElement { source, signs, sign: base.sign * loc.sign });
                }
            }
            acc = next;
            offset += block.len;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_groups() {
        // C_1 = {±1}.
        let c1 = WeylSubgroupSpec::new(vec![WeylBlock { kind: BlockKind::C, len: 1 }]);
        let els = c1.elements();
        assert_eq!(els.len(), 2);
        let mut signs: Vec<i64> = els.iter().map(|e| e.sign).collect();
        signs.sort_unstable();
        assert_eq!(signs, vec![-1, 1]);

        // A_1 (subscript) = S_2 on two coordinates.
        let a1 = WeylSubgroupSpec::new(vec![WeylBlock::from_subscript(BlockKind::A, 1)]);
        assert_eq!(a1.elements().len(), 2);

        // C_2 × D_1 × C_1 has 8·1·2 = 16 elements.
        let spec = WeylSubgroupSpec::new(vec![
            WeylBlock { kind: BlockKind::C, len: 2 },
            WeylBlock { kind: BlockKind::D, len: 1 },
            WeylBlock { kind: BlockKind::C, len: 1 },
        ]);
        assert_eq!(spec.order(), 16);
        assert_eq!(spec.elements().len(), 16);
    }

    #[test]
    fn signs_sum_to_zero_and_multiply() {
        for spec in [
            WeylSubgroupSpec::full(RootFamily::C, 3),
            WeylSubgroupSpec::full(RootFamily::D, 3),
            WeylSubgroupSpec::full(RootFamily::A, 4),
            WeylSubgroupSpec::new(vec![
                WeylBlock { kind: BlockKind::C, len: 2 },
                WeylBlock::from_subscript(BlockKind::A, 1),
            ]),
        ] {
            let els = spec.elements();
            assert_eq!(els.len(), spec.order());
            assert_eq!(els.iter().map(|e| e.sign).sum::<i64>(), 0);
        }
    }

    #[test]
    fn action_and_determinant() {
        let spec = WeylSubgroupSpec::full(RootFamily::C, 2);
        let w = Weight::from_ints(&[2, 1]);
        let mut images: Vec<Vec<i64>> =
            spec.elements().iter().map(|e| e.apply(&w).doubled().to_vec()).collect();
        images.sort();
        images.dedup();
        // Free orbit of a regular weight: 8 distinct images.
        assert_eq!(images.len(), 8);
        // Identity has sign +1 and fixes the weight.
        let id = WeylElement::identity(2);
        assert_eq!(id.apply(&w), w);
        assert_eq!(id.sign, 1);
    }
}
