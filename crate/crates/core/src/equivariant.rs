//! Shift orbits of interval modules on the integer line.
//!
//! For a period `m`, the shift `i ↦ i + m` acts on intervals of `ℤ`; the sum
//! of all translates of one interval is a single indecomposable object of the
//! shift-equivariant category. Such orbits are named by a canonical
//! representative whose anchor lies in `[0, m)`:
//!
//! * `Finite { a, len }` is the orbit of `[a, a + len − 1]`,
//! * `LeftRay { d }` the orbit of `(−∞, d]`,
//! * `RightRay { c }` the orbit of `[c, +∞)`.
//!
//! The full line is fixed by every shift and has no basic orbit, so it is
//! not an [`OrbitInterval`].

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::ext::{interval_ext, DiscreteInterval, QuiverSpec, RepSpec};
use crate::linalg::{Matrix, PrimeField};
use crate::{Error, Result};

/// Largest period the bitset enumerator accepts: the candidate pool has
/// `m² + m` members and must fit in 128 bits.
pub const MAX_ENUMERATION_PERIOD: usize = 10;

/// Variant order is the canonical order: rays before finite orbits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitClass {
    LeftRay { d: usize },
    RightRay { c: usize },
    Finite { a: usize, len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitInterval {
    m: usize,
    class: OrbitClass,
}

fn normalize(x: i64, m: usize) -> usize {
    x.rem_euclid(m as i64) as usize
}

impl OrbitInterval {
    pub fn finite(m: usize, a: i64, len: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPeriod);
        }
        if len == 0 {
            return Err(Error::InvalidInterval("finite orbit needs positive length"));
        }
        Ok(OrbitInterval {
            m,
            class: OrbitClass::Finite {
                a: normalize(a, m),
                len,
            },
        })
    }

    pub fn left_ray(m: usize, d: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPeriod);
        }
        Ok(OrbitInterval {
            m,
            class: OrbitClass::LeftRay { d: normalize(d, m) },
        })
    }

    pub fn right_ray(m: usize, c: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPeriod);
        }
        Ok(OrbitInterval {
            m,
            class: OrbitClass::RightRay { c: normalize(c, m) },
        })
    }

    /// The orbit of an arbitrary integer interval; `None` for the full line.
    pub fn from_interval(m: usize, iv: &DiscreteInterval) -> Result<Option<Self>> {
        Ok(Some(match (iv.lo(), iv.hi()) {
            (Some(a), Some(b)) => Self::finite(m, a, (b - a + 1) as usize)?,
            (None, Some(d)) => Self::left_ray(m, d)?,
            (Some(c), None) => Self::right_ray(m, c)?,
            (None, None) => return Ok(None),
        }))
    }

    pub fn period(&self) -> usize {
        self.m
    }

    pub fn class(&self) -> OrbitClass {
        self.class
    }

    pub fn is_ray(&self) -> bool {
        !matches!(self.class, OrbitClass::Finite { .. })
    }

    pub fn representative(&self) -> DiscreteInterval {
        match self.class {
            OrbitClass::Finite { a, len } => {
                DiscreteInterval::new(Some(a as i64), Some(a as i64 + len as i64 - 1))
                    .expect("positive length")
            }
            OrbitClass::LeftRay { d } => DiscreteInterval::left_ray(d as i64),
            OrbitClass::RightRay { c } => DiscreteInterval::right_ray(c as i64),
        }
    }

    /// Extent used to bound the shifts that can interact; rays count as one
    /// full period.
    fn span(&self) -> usize {
        match self.class {
            OrbitClass::Finite { len, .. } => len,
            _ => self.m,
        }
    }

    /// Reflection through zero, `[a, b] ↦ [−b, −a]`.
    pub fn star(&self) -> Self {
        let m = self.m;
        let class = match self.class {
            OrbitClass::Finite { a, len } => OrbitClass::Finite {
                a: normalize(-(a as i64) - len as i64 + 1, m),
                len,
            },
            OrbitClass::LeftRay { d } => OrbitClass::RightRay {
                c: normalize(-(d as i64), m),
            },
            OrbitClass::RightRay { c } => OrbitClass::LeftRay {
                d: normalize(-(c as i64), m),
            },
        };
        OrbitInterval { m, class }
    }
}

impl fmt::Display for OrbitInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.class {
            OrbitClass::LeftRay { d } => write!(f, "lray({d})"),
            OrbitClass::RightRay { c } => write!(f, "rray({c})"),
            OrbitClass::Finite { a, len } => write!(f, "fin({a},{len})"),
        }
    }
}

/// Translates of `second` by multiples of `m` that can meet `first`.
fn shift_bound(first_span: usize, second_span: usize, m: usize) -> i64 {
    ((first_span + second_span) / m + 2) as i64
}

/// Number of shifts `k` with `Ext¹(first, second + k·m) ≠ 0`, taking the
/// given intervals as representatives. This is the dimension of Ext¹ from
/// the orbit of `first` to the orbit of `second`.
pub fn directed_ext_between(
    first: &DiscreteInterval,
    second: &DiscreteInterval,
    m: usize,
    bound: i64,
) -> usize {
    (-bound..=bound)
        .map(|k| interval_ext(first, &second.shifted(k * m as i64)))
        .sum()
}

fn check_period(o1: &OrbitInterval, o2: &OrbitInterval) -> Result<()> {
    if o1.m != o2.m {
        return Err(Error::PeriodMismatch(o1.m, o2.m));
    }
    Ok(())
}

/// `dim Ext¹(T_{O1}, T_{O2})` between orbit sums. From a left ray to a right
/// ray infinitely many translates contribute; the count returned there is
/// only a positive lower bound.
pub fn orbit_ext(o1: &OrbitInterval, o2: &OrbitInterval) -> Result<usize> {
    check_period(o1, o2)?;
    let bound = shift_bound(o1.span(), o2.span(), o1.m);
    Ok(directed_ext_between(
        &o1.representative(),
        &o2.representative(),
        o1.m,
        bound,
    ))
}

/// True when Ext¹ between the two orbit sums is nonzero in either direction.
pub fn orbit_obstructed(o1: &OrbitInterval, o2: &OrbitInterval) -> Result<bool> {
    Ok(orbit_ext(o1, o2)? > 0 || orbit_ext(o2, o1)? > 0)
}

/// No nonzero translate of the orbit extends it. Finite orbits of length at
/// least `m` fail; rays always pass.
pub fn self_rigid(o: &OrbitInterval) -> bool {
    let r = o.representative();
    let m = o.m as i64;
    let bound = shift_bound(o.span(), o.span(), o.m);
    (-bound..=bound)
        .filter(|&k| k != 0)
        .all(|k| interval_ext(&r, &r.shifted(k * m)) == 0)
}

/// A basic equivariant representation: distinct orbits, canonically sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitSet {
    m: usize,
    orbits: Vec<OrbitInterval>,
}

impl OrbitSet {
    /// Sorts and removes repeated orbits.
    pub fn new(m: usize, orbits: impl IntoIterator<Item = OrbitInterval>) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPeriod);
        }
        let mut orbits: Vec<OrbitInterval> = orbits.into_iter().collect();
        if let Some(o) = orbits.iter().find(|o| o.m != m) {
            return Err(Error::PeriodMismatch(m, o.m));
        }
        orbits.sort();
        orbits.dedup();
        Ok(OrbitSet { m, orbits })
    }

    pub fn period(&self) -> usize {
        self.m
    }

    pub fn orbits(&self) -> &[OrbitInterval] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn contains(&self, o: &OrbitInterval) -> bool {
        self.orbits.binary_search(o).is_ok()
    }

    pub fn has_left_rays(&self) -> bool {
        self.orbits
            .iter()
            .any(|o| matches!(o.class, OrbitClass::LeftRay { .. }))
    }

    pub fn has_right_rays(&self) -> bool {
        self.orbits
            .iter()
            .any(|o| matches!(o.class, OrbitClass::RightRay { .. }))
    }

    /// Every orbit self-rigid and no pair obstructed.
    pub fn is_rigid(&self) -> bool {
        self.orbits.iter().all(self_rigid)
            && self.orbits.iter().enumerate().all(|(k, a)| {
                self.orbits[k + 1..]
                    .iter()
                    .all(|b| !orbit_obstructed(a, b).expect("same period"))
            })
    }

    /// Rigid, and no orbit of the candidate pool can be added.
    pub fn is_maximal_rigid(&self) -> bool {
        self.is_rigid()
            && candidate_pool(self.m).iter().all(|c| {
                self.contains(c)
                    || !self_rigid(c)
                    || self
                        .orbits
                        .iter()
                        .any(|o| orbit_obstructed(o, c).expect("same period"))
            })
    }

    pub fn star(&self) -> OrbitSet {
        OrbitSet::new(self.m, self.orbits.iter().map(OrbitInterval::star)).expect("same period")
    }
}

impl fmt::Display for OrbitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, o) in self.orbits.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{o}")?;
        }
        write!(f, "}}")
    }
}

pub fn star(s: &OrbitSet) -> OrbitSet {
    s.star()
}

/// All orbits that can occur in a rigid set: every ray, and finite orbits of
/// length at most `m − 1`. Canonically sorted.
pub fn candidate_pool(m: usize) -> Vec<OrbitInterval> {
    let mut pool = Vec::with_capacity(m * m + m);
    for d in 0..m {
        pool.push(OrbitInterval {
            m,
            class: OrbitClass::LeftRay { d },
        });
    }
    for c in 0..m {
        pool.push(OrbitInterval {
            m,
            class: OrbitClass::RightRay { c },
        });
    }
    for a in 0..m {
        for len in 1..m {
            pool.push(OrbitInterval {
                m,
                class: OrbitClass::Finite { a, len },
            });
        }
    }
    pool.sort();
    pool
}

/// Checks the law that bounds the candidate pool: every finite orbit of
/// length `m..=2m` fails self-rigidity and every pool member passes.
pub fn verify_pool_bound(m: usize) -> Result<()> {
    for a in 0..m as i64 {
        for len in m..=2 * m {
            let o = OrbitInterval::finite(m, a, len)?;
            if self_rigid(&o) {
                return Err(Error::PoolBound(format!(
                    "{o} is self-rigid for period {m}"
                )));
            }
        }
    }
    if let Some(o) = candidate_pool(m).iter().find(|o| !self_rigid(o)) {
        return Err(Error::PoolBound(format!(
            "{o} is not self-rigid for period {m}"
        )));
    }
    Ok(())
}

/// Whether every left ray obstructs every right ray for this period.
pub fn mixed_rays_obstructed(m: usize) -> bool {
    (0..m as i64).all(|d| {
        (0..m as i64).all(|c| {
            let l = OrbitInterval::left_ray(m, d).expect("m > 0");
            let r = OrbitInterval::right_ray(m, c).expect("m > 0");
            orbit_obstructed(&l, &r).expect("same period")
        })
    })
}

/// One top-level branch of the clique search: chosen members `r`,
/// remaining candidates `p`, and excluded members `x`, as pool bitsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Branch {
    r: u128,
    p: u128,
    x: u128,
}

/// Exhaustive search for maximal rigid orbit sets.
///
/// Rigid sets are exactly the cliques of the compatibility graph on the
/// candidate pool, so maximal rigid sets are its maximal cliques. They are
/// enumerated by Bron–Kerbosch with pivoting over `u128` bitsets. The search
/// splits into independent top-level [`Branch`]es which may be expanded in
/// any order; [`MaximalRigidSearch::run`] expands them sequentially.
#[derive(Debug, Clone)]
pub struct MaximalRigidSearch {
    m: usize,
    pool: Vec<OrbitInterval>,
    adj: Vec<u128>,
}

impl MaximalRigidSearch {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroPeriod);
        }
        if m > MAX_ENUMERATION_PERIOD {
            return Err(Error::PeriodTooLarge(m, MAX_ENUMERATION_PERIOD));
        }
        verify_pool_bound(m)?;
        let pool = candidate_pool(m);
        let mut adj = alloc::vec![0u128; pool.len()];
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                if !orbit_obstructed(&pool[i], &pool[j])? {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
        }
        Ok(MaximalRigidSearch { m, pool, adj })
    }

    pub fn period(&self) -> usize {
        self.m
    }

    pub fn pool(&self) -> &[OrbitInterval] {
        &self.pool
    }

    fn all(&self) -> u128 {
        if self.pool.len() == 128 {
            u128::MAX
        } else {
            (1u128 << self.pool.len()) - 1
        }
    }

    fn pivot(&self, p: u128, x: u128) -> usize {
        let mut best = (0u32, usize::MAX);
        let mut cand = p | x;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            let score = (p & self.adj[u]).count_ones();
            if best.1 == usize::MAX || score > best.0 {
                best = (score, u);
            }
        }
        best.1
    }

    /// Top-level branches, in a fixed order.
    pub fn branches(&self) -> Vec<Branch> {
        let (mut p, mut x) = (self.all(), 0u128);
        let mut out = Vec::new();
        if p == 0 {
            return out;
        }
        let u = self.pivot(p, x);
        let mut cand = p & !self.adj[u];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u128 << v;
            cand &= !bit;
            out.push(Branch {
                r: bit,
                p: p & self.adj[v],
                x: x & self.adj[v],
            });
            p &= !bit;
            x |= bit;
        }
        out
    }

    /// All maximal cliques below one branch, as canonically sorted sets.
    pub fn expand(&self, branch: &Branch) -> Vec<OrbitSet> {
        let mut found = Vec::new();
        self.bron_kerbosch(branch.r, branch.p, branch.x, &mut found);
        let mut sets: Vec<OrbitSet> = found.into_iter().map(|r| self.to_set(r)).collect();
        for s in &sets {
            assert!(self.maximal_by_scan(s), "non-maximal clique {s}");
        }
        sets.sort();
        sets
    }

    fn bron_kerbosch(&self, r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let u = self.pivot(p, x);
        let mut cand = p & !self.adj[u];
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let bit = 1u128 << v;
            cand &= !bit;
            self.bron_kerbosch(r | bit, p & self.adj[v], x & self.adj[v], out);
            p &= !bit;
            x |= bit;
        }
    }

    fn to_set(&self, bits: u128) -> OrbitSet {
        let orbits = (0..self.pool.len())
            .filter(|&i| bits >> i & 1 == 1)
            .map(|i| self.pool[i]);
        OrbitSet::new(self.m, orbits).expect("pool shares the period")
    }

    /// Scans the whole pool: every non-member conflicts with some member.
    fn maximal_by_scan(&self, s: &OrbitSet) -> bool {
        self.pool.iter().enumerate().all(|(i, c)| {
            s.contains(c)
                || s.orbits.iter().any(|o| {
                    let j = self.pool.binary_search(o).expect("member of pool");
                    self.adj[i] >> j & 1 == 0
                })
        })
    }

    /// Expands every branch and merges the results in canonical order.
    pub fn run(&self) -> Vec<OrbitSet> {
        let mut all: Vec<OrbitSet> = self
            .branches()
            .iter()
            .flat_map(|b| self.expand(b))
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

/// All maximal rigid orbit sets for period `m`, canonically sorted.
pub fn enumerate_maximal_rigid(m: usize) -> Result<Vec<OrbitSet>> {
    Ok(MaximalRigidSearch::new(m)?.run())
}

/// Push-down of one finite orbit to the cyclic quiver with `m` vertices.
fn fold_orbit(o: &OrbitInterval, quiver: QuiverSpec, field: PrimeField) -> Result<RepSpec> {
    let OrbitClass::Finite { a, len } = o.class else {
        return Err(Error::InfiniteFold);
    };
    let m = o.m;
    let points: Vec<usize> = (a..a + len).collect();
    let mut dims = alloc::vec![0usize; m];
    for &p in &points {
        dims[p % m] += 1;
    }
    // position of a lattice point among the points with its residue
    let index = |p: usize| (p - a) / m;
    let arrows = quiver.arrows();
    let mut mats: Vec<Matrix> = arrows
        .iter()
        .map(|ar| Matrix::zeros(dims[ar.head], dims[ar.tail]))
        .collect();
    for &p in points.iter().take(len.saturating_sub(1)) {
        let q = p + 1;
        let head = q % m;
        let k = arrows
            .iter()
            .position(|ar| ar.head == head)
            .expect("each vertex has one incoming arrow");
        mats[k].set(index(q), index(p), 1);
    }
    RepSpec::new(quiver, field, dims, mats)
}

/// The representation of the cyclic quiver obtained by reducing lattice
/// points modulo `m`, summed over the set. Rays have no finite push-down.
pub fn fold_to_cyclic(s: &OrbitSet, field: PrimeField) -> Result<RepSpec> {
    let quiver = QuiverSpec::cyclic(s.m)?;
    s.orbits
        .iter()
        .try_fold(RepSpec::zero(quiver, field), |acc, o| {
            if o.is_ray() {
                return Err(Error::InfiniteFold);
            }
            acc.direct_sum(&fold_orbit(o, quiver, field)?)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::hom_ext_dims;
    use alloc::vec;

    fn fin(m: usize, a: i64, len: usize) -> OrbitInterval {
        OrbitInterval::finite(m, a, len).unwrap()
    }
    fn lray(m: usize, d: i64) -> OrbitInterval {
        OrbitInterval::left_ray(m, d).unwrap()
    }
    fn rray(m: usize, c: i64) -> OrbitInterval {
        OrbitInterval::right_ray(m, c).unwrap()
    }

    #[test]
    fn obstruction_examples() {
        for m in 1..6 {
            let o = fin(m, 0, m);
            assert!(orbit_obstructed(&o, &o).unwrap());
        }
        assert!(!orbit_obstructed(&lray(2, 0), &lray(2, 1)).unwrap());
        for m in 1..6 {
            for d in 0..m as i64 {
                for c in 0..m as i64 {
                    assert!(orbit_obstructed(&lray(m, d), &rray(m, c)).unwrap());
                }
            }
        }
        assert_eq!(
            orbit_obstructed(&lray(2, 0), &lray(3, 0)),
            Err(Error::PeriodMismatch(2, 3))
        );
    }

    #[test]
    fn self_rigid_examples() {
        assert!(self_rigid(&fin(2, 0, 1)));
        assert!(!self_rigid(&fin(2, 0, 2)));
        assert!(self_rigid(&lray(1, 0)));
        for m in 1..8 {
            for len in 1..3 * m {
                assert_eq!(self_rigid(&fin(m, 0, len)), len < m, "m={m} len={len}");
            }
        }
    }

    #[test]
    fn pool_bound_holds() {
        for m in 1..=MAX_ENUMERATION_PERIOD {
            verify_pool_bound(m).unwrap();
            assert!(mixed_rays_obstructed(m));
        }
    }

    #[test]
    fn enumerate_small_periods() {
        let m1 = enumerate_maximal_rigid(1).unwrap();
        assert_eq!(
            m1,
            vec![
                OrbitSet::new(1, [lray(1, 0)]).unwrap(),
                OrbitSet::new(1, [rray(1, 0)]).unwrap()
            ]
        );
        let m2 = enumerate_maximal_rigid(2).unwrap();
        assert_eq!(m2.len(), 6);
        let hat3 = OrbitSet::new(2, [lray(2, 0), lray(2, 1)]).unwrap();
        assert!(m2.contains(&hat3));
        assert_eq!(enumerate_maximal_rigid(3).unwrap().len(), 20);
        assert!(matches!(
            enumerate_maximal_rigid(MAX_ENUMERATION_PERIOD + 1),
            Err(Error::PeriodTooLarge(..))
        ));
        assert_eq!(enumerate_maximal_rigid(0), Err(Error::ZeroPeriod));
    }

    #[test]
    fn branches_cover_sequential_result() {
        let search = MaximalRigidSearch::new(4).unwrap();
        let mut merged: Vec<OrbitSet> = search
            .branches()
            .iter()
            .rev()
            .flat_map(|b| search.expand(b))
            .collect();
        merged.sort();
        assert_eq!(merged, search.run());
    }

    #[test]
    fn star_examples() {
        let s = OrbitSet::new(1, [lray(1, 0)]).unwrap();
        assert_eq!(s.star(), OrbitSet::new(1, [rray(1, 0)]).unwrap());
        assert_eq!(fin(5, 1, 3).star(), fin(5, -3, 3));
        for s in enumerate_maximal_rigid(3).unwrap() {
            assert_eq!(s.star().star(), s);
            assert!(s.star().is_maximal_rigid());
        }
    }

    #[test]
    fn fold_examples() {
        let f = PrimeField::F2;
        let s = OrbitSet::new(2, [fin(2, 0, 1)]).unwrap();
        let r = fold_to_cyclic(&s, f).unwrap();
        assert_eq!(r.dims(), &[1, 0]);
        assert!(r.mats().iter().all(|m| m.rows() * m.cols() == 0));

        let s = OrbitSet::new(2, [fin(2, 0, 2)]).unwrap();
        let r = fold_to_cyclic(&s, f).unwrap();
        assert_eq!(r.dims(), &[1, 1]);
        // arrow a1 : 0 → 1 is the identity, arrow a2 : 1 → 0 is zero
        assert_eq!(r.mats()[0], Matrix::identity(1));
        assert_eq!(r.mats()[1], Matrix::zeros(1, 1));

        let s = OrbitSet::new(2, [lray(2, 0)]).unwrap();
        assert_eq!(fold_to_cyclic(&s, f), Err(Error::InfiniteFold));
    }

    #[test]
    fn fold_long_orbit_wraps() {
        // [1, 5] over period 3 visits 1,2,0,1,2
        let s = OrbitSet::new(3, [fin(3, 1, 5)]).unwrap();
        let r = fold_to_cyclic(&s, PrimeField::F2).unwrap();
        assert_eq!(r.dims(), &[1, 2, 2]);
        let (hom, ext) = hom_ext_dims(&r, &r).unwrap();
        let o = fin(3, 1, 5);
        assert_eq!(ext, orbit_ext(&o, &o).unwrap());
        assert!(hom >= 1);
    }
}
