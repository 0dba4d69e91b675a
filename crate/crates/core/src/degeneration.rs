//! Fundamental degenerations and the Norm set of an orbit.
//!
//! A fundamental degeneration acts on a quadruple of columns
//! `b0 ≥ b1 = b2 ≥ b3` of a common parity (`b0` may be unbounded) and
//! produces a column quadruple of the same total size that is larger in the
//! closure order.  Iterating the move over every applicable site generates
//! the Norm set of the starting orbit.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::orbits::{ColSize, Orbit};

/// A degeneration quadruple `b0 ≥ b1 = b2 ≥ b3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quad {
    pub b0: ColSize,
    pub b1: u32,
    pub b2: u32,
    pub b3: u32,
}

impl Quad {
    pub fn new(b0: ColSize, b1: u32, b2: u32, b3: u32) -> Self {
        Quad { b0, b1, b2, b3 }
    }

    fn validate(&self) -> Result<()> {
        let err = |reason: &str| Error::NotDegenerable { reason: reason.to_string() };
        if self.b1 != self.b2 {
            return Err(err("middle columns b1, b2 differ"));
        }
        if self.b1 == 0 {
            return Err(err("middle columns are zero"));
        }
        if self.b0 < ColSize::Finite(self.b1) || self.b2 < self.b3 {
            return Err(err("columns are not weakly decreasing"));
        }
        if let ColSize::Finite(b0) = self.b0 {
            if b0 % 2 != self.b1 % 2 {
                return Err(err("mixed parity"));
            }
        }
        if self.b1 % 2 != self.b3 % 2 {
            return Err(err("mixed parity"));
        }
        Ok(())
    }
}

/// Apply the four-case degeneration move to a quadruple.  Returns the new
/// column list (length 4, or 2 when the two smallest outputs are both zero
/// and get omitted); an unbounded `b0` passes through unchanged in first
/// position.
pub fn fundamental_degeneration(q: &Quad) -> Result<Vec<ColSize>> {
    let (n0, rest) = degenerate_raw(q)?;
    let mut out = vec![n0, ColSize::Finite(rest[0])];
    if !(rest[1] == 0 && rest[2] == 0) {
        out.push(ColSize::Finite(rest[1]));
        out.push(ColSize::Finite(rest[2]));
    }
    Ok(out)
}

/// The degeneration move without zero-omission: new `b0` plus the three
/// remaining columns.
fn degenerate_raw(q: &Quad) -> Result<(ColSize, [u32; 3])> {
    q.validate()?;
    let b0_gt = q.b0 > ColSize::Finite(q.b1);
    let b2_gt = q.b2 > q.b3;
    let bump = |c: ColSize, by: u32| match c {
        ColSize::Finite(v) => ColSize::Finite(v + by),
        ColSize::Unbounded => ColSize::Unbounded,
    };
    Ok(match (b0_gt, b2_gt) {
        (true, true) => (q.b0, [q.b1 + 2, q.b2 - 2, q.b3]),
        (false, true) => (bump(q.b0, 1), [q.b1 + 1, q.b2 - 2, q.b3]),
        (true, false) => (q.b0, [q.b1 + 2, q.b2 - 1, q.b3 - 1]),
        (false, false) => (bump(q.b0, 1), [q.b1 + 1, q.b2 - 1, q.b3 - 1]),
    })
}

/// A degeneration site: the maximal equal run `c_{2i+1} = … = c_{2j}` of
/// positive columns, described by the pair `(i, j)` with `i < j` allowed to
/// coincide only through `2i+1 < 2j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Site {
    pub i: usize,
    pub j: usize,
}

impl Site {
    /// First pair-convention index covered by the run.
    pub fn start(&self) -> usize {
        2 * self.i + 1
    }

    /// Last pair-convention index covered by the run.
    pub fn end(&self) -> usize {
        2 * self.j
    }
}

impl fmt::Display for Site {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c_{}..c_{}", self.start(), self.end())
    }
}

/// All degeneration sites of an orbit, in increasing position order.
pub fn degeneration_sites(o: &Orbit) -> Vec<Site> {
    let mi = o.max_index();
    let lo = if o.family().is_orthogonal() { 1 } else { 0 };
    let mut sites = Vec::new();
    let mut i = lo;
    while i <= mi {
        let mut j = i;
        while j + 1 <= mi && o.col(j + 1) == o.col(i) {
            j += 1;
        }
        if o.col(i) > ColSize::Finite(0) {
            let start = if i % 2 == 1 { i } else { i + 1 };
            let end = if j % 2 == 0 { j } else { j - 1 };
            if start >= 1 && start < end {
                sites.push(Site { i: (start - 1) / 2, j: end / 2 });
            }
        }
        i = j + 1;
    }
    sites
}

/// Apply the degeneration at one site, returning the resulting orbit.
pub fn apply_degeneration(o: &Orbit, site: &Site) -> Result<Orbit> {
    let s = site.start();
    let e = site.end();
    let q = Quad::new(o.col(s - 1), o.fcol(s), o.fcol(e), o.fcol(e + 1));
    let (n0, rest) = degenerate_raw(&q)?;
    let offset = if o.family().is_orthogonal() { 1 } else { 0 };
    let mut cols: Vec<u32> = o.columns().to_vec();
    if let ColSize::Finite(v) = n0 {
        cols[s - 1 - offset] = v;
    }
    cols[s - offset] = rest[0];
    cols[e - offset] = rest[1];
    cols[e + 1 - offset] = rest[2];
    debug_assert!(
        cols.windows(2).all(|w| w[0] >= w[1]),
        "degeneration output must stay weakly decreasing: {cols:?}"
    );
    Orbit::new(o.family(), &cols)
}

/// A provenance edge of the Norm set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormEdge {
    pub parent: Orbit,
    pub child: Orbit,
    pub site: Site,
}

/// The closure of an orbit under fundamental degenerations, with provenance
/// edges.  `members` is in breadth-first discovery order (sites scanned left
/// to right), which matches the usual way the set is listed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormSet {
    pub source: Orbit,
    pub members: Vec<Orbit>,
    pub edges: Vec<NormEdge>,
}

/// Enumerate the Norm set of an orbit.
pub fn norm_set(o: &Orbit) -> NormSet {
    let mut seen: BTreeSet<Orbit> = BTreeSet::new();
    seen.insert(o.clone());
    let mut members = vec![o.clone()];
    let mut edges = Vec::new();
    let mut frontier = vec![o.clone()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for parent in frontier {
            for site in degeneration_sites(&parent) {
                let child = apply_degeneration(&parent, &site)
                    .expect("sites are degenerable by construction");
                edges.push(NormEdge { parent: parent.clone(), child: child.clone(), site });
                if seen.insert(child.clone()) {
                    members.push(child.clone());
                    next.push(child);
                }
            }
        }
        frontier = next;
    }
    NormSet { source: o.clone(), members, edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::Family;

    fn sp(cols: &[u32]) -> Orbit {
        Orbit::new(Family::Symplectic, cols).unwrap()
    }

    fn fin(q: (u32, u32, u32, u32)) -> Quad {
        Quad::new(ColSize::Finite(q.0), q.1, q.2, q.3)
    }

    fn deg(q: (u32, u32, u32, u32)) -> Vec<u32> {
        fundamental_degeneration(&fin(q))
            .unwrap()
            .into_iter()
            .map(|c| c.finite().unwrap())
            .collect()
    }

    #[test]
    fn degeneration_cases() {
        assert_eq!(deg((8, 6, 6, 4)), vec![8, 8, 4, 4]);
        assert_eq!(deg((4, 2, 2, 0)), vec![4, 4]);
        assert_eq!(deg((4, 4, 4, 4)), vec![5, 5, 3, 3]);
        assert_eq!(deg((6, 4, 4, 4)), vec![6, 6, 3, 3]);
    }

    #[test]
    fn degeneration_with_unbounded_head() {
        let out = fundamental_degeneration(&Quad::new(ColSize::Unbounded, 6, 6, 2)).unwrap();
        assert_eq!(
            out,
            vec![ColSize::Unbounded, ColSize::Finite(8), ColSize::Finite(4), ColSize::Finite(2)]
        );
    }

    #[test]
    fn degeneration_rejections() {
        assert!(matches!(
            fundamental_degeneration(&fin((6, 4, 2, 2))),
            Err(Error::NotDegenerable { .. })
        ));
        assert!(matches!(
            fundamental_degeneration(&fin((5, 4, 4, 2))),
            Err(Error::NotDegenerable { .. })
        ));
    }

    #[test]
    fn site_enumeration() {
        let s = degeneration_sites(&sp(&[8, 6, 6, 4, 4, 2, 2, 0]));
        assert_eq!(s.len(), 3);
        assert_eq!(
            s.iter().map(|x| (x.start(), x.end())).collect::<Vec<_>>(),
            vec![(1, 2), (3, 4), (5, 6)]
        );
        assert!(degeneration_sites(&sp(&[8, 8, 5, 5, 3, 3])).is_empty());
        let s = degeneration_sites(&sp(&[8, 6, 6, 6, 2, 2, 2, 0]));
        assert_eq!(
            s.iter().map(|x| (x.start(), x.end())).collect::<Vec<_>>(),
            vec![(1, 2), (5, 6)]
        );
    }

    #[test]
    fn orthogonal_sites_use_unbounded_head() {
        // (6,6,2) in O(14): the 6,6 run starts at index 1, so the quad
        // takes c_0 = ∞.
        let o = Orbit::new(Family::EvenOrthogonal, &[6, 6, 2]).unwrap();
        let s = degeneration_sites(&o);
        assert_eq!(s.iter().map(|x| (x.start(), x.end())).collect::<Vec<_>>(), vec![(1, 2)]);
        let child = apply_degeneration(&o, &s[0]).unwrap();
        assert_eq!(child, Orbit::new(Family::EvenOrthogonal, &[8, 4, 2]).unwrap());
    }

    #[test]
    fn norm_set_eight_members() {
        let ns = norm_set(&sp(&[8, 6, 6, 4, 4, 2, 2, 0]));
        let expect: Vec<Orbit> = [
            vec![8, 6, 6, 4, 4, 2, 2, 0],
            vec![8, 8, 4, 4, 4, 2, 2, 0],
            vec![8, 6, 6, 6, 2, 2, 2, 0],
            vec![8, 6, 6, 4, 4, 4],
            vec![8, 8, 5, 5, 2, 2, 2, 0],
            vec![8, 8, 4, 4, 4, 4],
            vec![8, 6, 6, 6, 3, 3],
            vec![8, 8, 5, 5, 3, 3],
        ]
        .iter()
        .map(|c| sp(c))
        .collect();
        assert_eq!(ns.members, expect);
        // A Norm member need not be generic.
        assert!(!sp(&[8, 8, 4, 4, 4, 2, 2, 0]).is_generic());
        assert!(ns.members.contains(&sp(&[8, 8, 4, 4, 4, 2, 2, 0])));
    }

    #[test]
    fn norm_set_trivial_and_small() {
        assert_eq!(norm_set(&sp(&[8, 6, 4, 2])).members, vec![sp(&[8, 6, 4, 2])]);
        let ns = norm_set(&sp(&[4, 2, 2, 0]));
        assert_eq!(ns.members, vec![sp(&[4, 2, 2, 0]), sp(&[4, 4])]);
        assert_eq!(ns.edges.len(), 1);
    }

    #[test]
    fn members_preserve_size_and_family() {
        for m in norm_set(&sp(&[8, 6, 6, 4, 4, 2, 2, 0])).members {
            assert_eq!(m.dimension(), 32);
            assert_eq!(m.family(), Family::Symplectic);
        }
    }
}
