//! Grid-anchored representations of the continuous line with shift.
//!
//! A grid `a_0 = 0 < a_1 < … < a_{n−1} < 1`, extended by `a_{i+n} = a_i + 1`,
//! cuts the line into gaps `(a_s, a_{s+1})`. A representation of type α is
//! described finitely by
//!
//! * orbits of intervals whose finite ends are grid points, and
//! * one twin family per gap: for every `x` in the gap either the pair
//!   `[x, e|, (x, e|` reaching right to a fixed far end `e`, or the pair
//!   `|e, x), |e, x]` reaching left.
//!
//! Families are kept intensional. Every predicate used here depends only on
//! the relative order of endpoints, so sampling two ordered points per gap
//! decides rigidity exactly.
//!
//! [`tau`] forgets the families and records each grid end on the doubled
//! lattice (`a_i` closed on the left ↦ `2i`, open on the left ↦ `2i + 1`,
//! closed on the right ↦ `2i`, open on the right ↦ `2i − 1`).
//! [`expand_fibers`] goes back: over each maximal rigid lattice orbit set it
//! finds one family per gap and direction, giving `2^n` preimages.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::binom;
use crate::equivariant::{enumerate_maximal_rigid, OrbitInterval, OrbitSet};
use crate::ext::DiscreteInterval;
use crate::interval::{is_compatible, Boundary, Endpoint, Frac, Interval};
use crate::{Error, Result};

/// Grid positions in `[0, 1)`; only their count matters to the logic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlphaGrid {
    positions: Vec<Frac>,
}

impl AlphaGrid {
    pub fn new(positions: Vec<Frac>) -> Result<Self> {
        if positions.is_empty() {
            return Err(Error::InvalidAlpha("grid needs at least one point".into()));
        }
        if positions[0] != Frac::ZERO {
            return Err(Error::InvalidAlpha("grid must start at 0".into()));
        }
        if positions.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidAlpha("grid positions must increase".into()));
        }
        if positions.iter().any(|p| p.num() >= p.den()) {
            return Err(Error::InvalidAlpha(
                "grid positions must lie below 1".into(),
            ));
        }
        Ok(AlphaGrid { positions })
    }

    /// `a_i = i / n`.
    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidAlpha("grid needs at least one point".into()));
        }
        let positions = (0..n as u32)
            .map(|i| Frac::new(i, n as u32))
            .collect::<Result<Vec<_>>>()?;
        Self::new(positions)
    }

    pub fn n(&self) -> usize {
        self.positions.len()
    }

    pub fn positions(&self) -> &[Frac] {
        &self.positions
    }
}

/// Orbit of an interval whose finite ends are grid points `a_i`.
/// `None` marks an infinite end. Stored with its anchor in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridIntervalOrbit {
    lo: Option<i64>,
    lo_b: Boundary,
    hi: Option<i64>,
    hi_b: Boundary,
}

impl GridIntervalOrbit {
    pub fn new(lo: Option<i64>, lo_b: Boundary, hi: Option<i64>, hi_b: Boundary) -> Result<Self> {
        let lo_b = if lo.is_none() { Boundary::Open } else { lo_b };
        let hi_b = if hi.is_none() { Boundary::Open } else { hi_b };
        match (lo, hi) {
            (None, None) => return Err(Error::InvalidInterval("the full line has no basic orbit")),
            (Some(a), Some(b)) => match a.cmp(&b) {
                Ordering::Less => {}
                Ordering::Equal if lo_b.is_closed() && hi_b.is_closed() => {}
                _ => return Err(Error::InvalidInterval("empty grid interval")),
            },
            _ => {}
        }
        Ok(GridIntervalOrbit { lo, lo_b, hi, hi_b })
    }

    pub fn lo(&self) -> Option<i64> {
        self.lo
    }

    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn lo_boundary(&self) -> Boundary {
        self.lo_b
    }

    pub fn hi_boundary(&self) -> Boundary {
        self.hi_b
    }

    fn shifted(&self, delta: i64) -> Self {
        GridIntervalOrbit {
            lo: self.lo.map(|x| x + delta),
            hi: self.hi.map(|x| x + delta),
            ..*self
        }
    }

    /// Translate so the anchor (finite lower end, else upper end) is in `[0, n)`.
    fn normalized(&self, n: usize) -> Self {
        let anchor = self.lo.or(self.hi).expect("not the full line");
        self.shifted(anchor.rem_euclid(n as i64) - anchor)
    }

    /// The concrete interval of the representative translated by `delta`
    /// grid indices.
    pub fn interval(&self, delta: i64) -> Interval {
        let lo = self
            .lo
            .map_or(Endpoint::NegInf, |i| Endpoint::Grid(i + delta));
        let hi = self
            .hi
            .map_or(Endpoint::PosInf, |i| Endpoint::Grid(i + delta));
        Interval::new(lo, self.lo_b, hi, self.hi_b).expect("validated on construction")
    }

    /// Lattice image of the representative.
    pub fn lattice(&self) -> DiscreteInterval {
        let lo = self.lo.map(|i| {
            if self.lo_b.is_closed() {
                2 * i
            } else {
                2 * i + 1
            }
        });
        let hi = self.hi.map(|j| {
            if self.hi_b.is_closed() {
                2 * j
            } else {
                2 * j - 1
            }
        });
        DiscreteInterval::new(lo, hi).expect("grid interval maps to a nonempty lattice interval")
    }

    /// Inverse of [`GridIntervalOrbit::lattice`].
    pub fn from_lattice(iv: &DiscreteInterval) -> Result<Self> {
        let lo = iv
            .lo()
            .map(|p| (p.div_euclid(2), Boundary::from_closed(p.rem_euclid(2) == 0)));
        let hi = iv.hi().map(|q| {
            (
                (q + 1).div_euclid(2),
                Boundary::from_closed(q.rem_euclid(2) == 0),
            )
        });
        Self::new(
            lo.map(|x| x.0),
            lo.map_or(Boundary::Open, |x| x.1),
            hi.map(|x| x.0),
            hi.map_or(Boundary::Open, |x| x.1),
        )
    }
}

impl fmt::Display for GridIntervalOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.interval(0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Right,
}

/// A twin family over the gap `(a_gap, a_{gap+1})`.
///
/// `Right`: `[x, far|` and `(x, far|` for every `x` in the gap.
/// `Left`: `|far, x)` and `|far, x]`.
/// The `far_b` flag is the boundary at `far`. `far` is normally a grid point
/// or an infinity; other endpoints are representable so that the validator
/// can reject them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    gap: i64,
    direction: Direction,
    far: Endpoint,
    far_b: Boundary,
}

impl FamilySpec {
    pub fn new(gap: i64, direction: Direction, far: Endpoint, far_b: Boundary) -> Self {
        let far_b = if far.is_infinite() {
            Boundary::Open
        } else {
            far_b
        };
        FamilySpec {
            gap,
            direction,
            far,
            far_b,
        }
    }

    pub fn right(gap: i64, far: Endpoint, far_b: Boundary) -> Self {
        Self::new(gap, Direction::Right, far, far_b)
    }

    pub fn left(gap: i64, far: Endpoint, far_b: Boundary) -> Self {
        Self::new(gap, Direction::Left, far, far_b)
    }

    pub fn gap(&self) -> i64 {
        self.gap
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn far(&self) -> Endpoint {
        self.far
    }

    pub fn far_boundary(&self) -> Boundary {
        self.far_b
    }

    fn shifted(&self, delta: i64) -> Self {
        FamilySpec {
            gap: self.gap + delta,
            far: self.far.shifted(delta),
            ..*self
        }
    }

    fn normalized(&self, n: usize) -> Self {
        self.shifted(self.gap.rem_euclid(n as i64) - self.gap)
    }

    /// The two members at the point with offset `t` in this family's gap,
    /// translated by `delta` grid indices.
    pub fn members(&self, t: Frac, delta: i64) -> Result<[Interval; 2]> {
        let x = Endpoint::gap(self.gap + delta, t)?;
        let far = self.far.shifted(delta);
        let (closed, open) = match self.direction {
            Direction::Right => (
                Interval::new(x, Boundary::Closed, far, self.far_b),
                Interval::new(x, Boundary::Open, far, self.far_b),
            ),
            Direction::Left => (
                Interval::new(far, self.far_b, x, Boundary::Closed),
                Interval::new(far, self.far_b, x, Boundary::Open),
            ),
        };
        Ok([closed?, open?])
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let x = format!("x{}", self.gap);
        match self.direction {
            Direction::Right => {
                let r = if self.far_b.is_closed() { ']' } else { ')' };
                write!(f, "|{x},{}{r}", self.far)
            }
            Direction::Left => {
                let l = if self.far_b.is_closed() { '[' } else { '(' };
                write!(f, "{l}{},{x}|", self.far)
            }
        }
    }
}

/// A candidate representation of type α.
///
/// Equality and order ignore the displayed grid positions: two values are
/// equal when they have the same `n`, orbit multiset and families.
#[derive(Debug, Clone)]
pub struct AlphaRep {
    grid: AlphaGrid,
    orbits: Vec<GridIntervalOrbit>,
    families: Vec<FamilySpec>,
}

impl AlphaRep {
    /// Normalizes every orbit and family into the fundamental period and
    /// sorts both lists. Repeated orbits are kept.
    pub fn new(grid: AlphaGrid, orbits: Vec<GridIntervalOrbit>, families: Vec<FamilySpec>) -> Self {
        let n = grid.n();
        let mut orbits: Vec<_> = orbits.iter().map(|o| o.normalized(n)).collect();
        let mut families: Vec<_> = families.iter().map(|f| f.normalized(n)).collect();
        orbits.sort();
        families.sort();
        AlphaRep {
            grid,
            orbits,
            families,
        }
    }

    pub fn grid(&self) -> &AlphaGrid {
        &self.grid
    }

    pub fn n(&self) -> usize {
        self.grid.n()
    }

    pub fn orbits(&self) -> &[GridIntervalOrbit] {
        &self.orbits
    }

    pub fn families(&self) -> &[FamilySpec] {
        &self.families
    }

    fn key(&self) -> (usize, &[GridIntervalOrbit], &[FamilySpec]) {
        (self.n(), &self.orbits, &self.families)
    }
}

impl PartialEq for AlphaRep {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for AlphaRep {}

impl PartialOrd for AlphaRep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlphaRep {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for AlphaRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n())?;
        for o in &self.orbits {
            write!(f, " {o}")?;
        }
        for fam in &self.families {
            write!(f, " {fam}")?;
        }
        Ok(())
    }
}

/// One of the eight endpoint sets attached to a point `c` inside a gap:
/// the far ends `d` of summands `|c, d|` (right side, `d ≥ a_{s+1}`) or
/// `|d, c|` (left side, `d ≤ a_s`) with the given boundary at `c` and `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EndpointSet {
    pub side: Direction,
    pub near_closed: bool,
    pub far_closed: bool,
}

impl fmt::Display for EndpointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (nl, nr) = if self.near_closed {
            ('[', ']')
        } else {
            ('(', ')')
        };
        let (fl, fr) = if self.far_closed {
            ('[', ']')
        } else {
            ('(', ')')
        };
        match self.side {
            Direction::Right => write!(f, "{nl}c,d{fr}"),
            Direction::Left => write!(f, "{fl}d,c{nr}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    /// A family member is not a valid interval at a sample point.
    MalformedFamily(String),
    /// Some far end of the given set is not a grid point or infinity.
    EndpointNotGrid(EndpointSet),
    /// The closed-at-`c` and open-at-`c` sets differ.
    TwinMismatch(EndpointSet),
    /// Number of anchored families at a point differs from one.
    FamilyCount(usize),
    /// Endpoint sets differ between two points of the same gap.
    NotUniform,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub gap: i64,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gap {}: ", self.gap)?;
        match &self.kind {
            ViolationKind::MalformedFamily(why) => write!(f, "malformed family ({why})"),
            ViolationKind::EndpointNotGrid(s) => {
                write!(f, "far ends of {s} summands are not all grid points")
            }
            ViolationKind::TwinMismatch(s) => write!(f, "{s} summands have no open twin"),
            ViolationKind::FamilyCount(k) => write!(f, "{k} anchored families, expected 1"),
            ViolationKind::NotUniform => write!(f, "summands vary inside the gap"),
        }
    }
}

/// Default sample offsets inside each gap.
pub const SAMPLE_OFFSETS: [Frac; 2] = [Frac::ONE_THIRD, Frac::TWO_THIRDS];

/// Far-end sets at one point, indexed `[side][near_closed][far_closed]`.
type EndpointSets = [[[Vec<Endpoint>; 2]; 2]; 2];

fn side_index(d: Direction) -> usize {
    match d {
        Direction::Left => 0,
        Direction::Right => 1,
    }
}

fn endpoint_sets_at(
    rep: &AlphaRep,
    gap: i64,
    t: Frac,
) -> core::result::Result<EndpointSets, Violation> {
    let n = rep.n() as i64;
    let c = Endpoint::Gap(gap, t);
    let mut sets: EndpointSets = Default::default();
    let malformed = |e: Error| Violation {
        gap,
        kind: ViolationKind::MalformedFamily(format!("{e}")),
    };
    let mut touching: Vec<Interval> = Vec::new();
    for fam in &rep.families {
        if fam.gap == gap {
            touching.extend(fam.members(t, 0).map_err(malformed)?);
        }
        // a family whose far end sits at c contributes a continuum of summands
        if let Endpoint::Gap(g, _) = fam.far {
            let delta = (gap - g).div_euclid(n) * n;
            if (gap - g).rem_euclid(n) == 0 && fam.far.shifted(delta) == c {
                for s in SAMPLE_OFFSETS {
                    touching.extend(fam.members(s, delta).map_err(malformed)?);
                }
            }
        }
    }
    for iv in touching {
        if iv.lo() == c && iv.hi() >= Endpoint::Grid(gap + 1) {
            sets[1][iv.lo_boundary().is_closed() as usize][iv.hi_boundary().is_closed() as usize]
                .push(iv.hi());
        }
        if iv.hi() == c && iv.lo() <= Endpoint::Grid(gap) {
            sets[0][iv.hi_boundary().is_closed() as usize][iv.lo_boundary().is_closed() as usize]
                .push(iv.lo());
        }
    }
    for side in sets.iter_mut() {
        for near in side.iter_mut() {
            for set in near.iter_mut() {
                set.sort();
                set.dedup();
            }
        }
    }
    Ok(sets)
}

/// Checks the two defining conditions of type α at two sample points in
/// every gap of the fundamental period, reporting the first failure.
pub fn validate_type_alpha(rep: &AlphaRep) -> core::result::Result<(), Violation> {
    for gap in 0..rep.n() as i64 {
        let mut per_sample = Vec::with_capacity(2);
        for t in SAMPLE_OFFSETS {
            let sets = endpoint_sets_at(rep, gap, t)?;
            for side in [Direction::Left, Direction::Right] {
                for far_closed in [true, false] {
                    let s = side_index(side);
                    let closed = &sets[s][1][far_closed as usize];
                    let open = &sets[s][0][far_closed as usize];
                    for (near_closed, set) in [(true, closed), (false, open)] {
                        if set.iter().any(|d| !(d.is_grid() || d.is_infinite())) {
                            return Err(Violation {
                                gap,
                                kind: ViolationKind::EndpointNotGrid(EndpointSet {
                                    side,
                                    near_closed,
                                    far_closed,
                                }),
                            });
                        }
                    }
                    if closed != open {
                        return Err(Violation {
                            gap,
                            kind: ViolationKind::TwinMismatch(EndpointSet {
                                side,
                                near_closed: true,
                                far_closed,
                            }),
                        });
                    }
                }
            }
            let count: usize = (0..2)
                .flat_map(|s| (0..2).map(move |fc| (s, fc)))
                .map(|(s, fc)| sets[s][1][fc].len())
                .sum();
            if count != 1 {
                return Err(Violation {
                    gap,
                    kind: ViolationKind::FamilyCount(count),
                });
            }
            per_sample.push(sets);
        }
        if per_sample[0] != per_sample[1] {
            return Err(Violation {
                gap,
                kind: ViolationKind::NotUniform,
            });
        }
    }
    Ok(())
}

/// Grid index range touched by an endpoint, for the shift horizon.
fn index_of(e: Endpoint) -> Option<i64> {
    match e {
        Endpoint::Grid(i) => Some(i),
        Endpoint::Gap(g, _) => Some(g),
        _ => None,
    }
}

/// Number of periods to translate by so that every interaction between
/// concrete representatives is seen.
fn horizon(items: &[Interval], n: usize) -> i64 {
    let idx = items
        .iter()
        .flat_map(|iv| [index_of(iv.lo()), index_of(iv.hi())])
        .flatten();
    let (mut lo, mut hi) = (i64::MAX, i64::MIN);
    for i in idx {
        lo = lo.min(i);
        hi = hi.max(i + 1);
    }
    if lo > hi {
        return 1;
    }
    (hi - lo) / n as i64 + 2
}

/// Every `a ∈ left` is compatible with every translate of every `b ∈ right`.
fn compatible_under_shifts(left: &[Interval], right: &[Interval], n: usize, bound: i64) -> bool {
    let n = n as i64;
    (-bound..=bound).all(|k| {
        left.iter()
            .all(|a| right.iter().all(|b| is_compatible(a, &b.shifted(k * n))))
    })
}

fn concrete_items(rep: &AlphaRep, samples: &[Frac]) -> Result<Vec<Interval>> {
    let mut items: Vec<Interval> = rep.orbits.iter().map(|o| o.interval(0)).collect();
    for fam in &rep.families {
        for &t in samples {
            items.extend(fam.members(t, 0)?);
        }
    }
    Ok(items)
}

/// Rigidity with families sampled at the given offsets.
pub fn alpha_is_rigid_sampled(rep: &AlphaRep, samples: &[Frac]) -> Result<bool> {
    let items = concrete_items(rep, samples)?;
    let bound = horizon(&items, rep.n());
    Ok(compatible_under_shifts(&items, &items, rep.n(), bound))
}

/// Rigidity of a representation that has passed [`validate_type_alpha`]:
/// every pair among orbit representatives and sampled family members,
/// under all relevant translates, is compatible.
pub fn alpha_is_rigid(rep: &AlphaRep) -> bool {
    alpha_is_rigid_sampled(rep, &SAMPLE_OFFSETS).unwrap_or(false)
}

/// Reduction to the doubled lattice with period `2n`: families vanish and
/// grid ends are recorded as lattice points. Repeated images collapse.
pub fn tau(rep: &AlphaRep) -> Result<OrbitSet> {
    let m = 2 * rep.n();
    let orbits = rep
        .orbits
        .iter()
        .map(|o| {
            OrbitInterval::from_interval(m, &o.lattice())
                .map(|x| x.expect("grid orbits are never the full line"))
        })
        .collect::<Result<Vec<_>>>()?;
    OrbitSet::new(m, orbits)
}

fn family_candidates(gap: i64, direction: Direction, n: usize) -> Vec<FamilySpec> {
    let reach = 2 * n as i64;
    let mut out = Vec::new();
    let fars: Vec<i64> = match direction {
        Direction::Right => (gap + 1..=gap + reach).collect(),
        Direction::Left => (gap - reach + 1..=gap).collect(),
    };
    for far in fars {
        for b in [Boundary::Open, Boundary::Closed] {
            out.push(FamilySpec::new(gap, direction, Endpoint::Grid(far), b));
        }
    }
    let inf = match direction {
        Direction::Right => Endpoint::PosInf,
        Direction::Left => Endpoint::NegInf,
    };
    out.push(FamilySpec::new(gap, direction, inf, Boundary::Open));
    out
}

/// All representations of type α over `lattice_set`, a maximal rigid orbit
/// set of period `2n`. The grid part is its inverse lattice image, and for
/// each gap and direction exactly one family keeps the result rigid. Returns
/// the `2^n` combinations ordered by direction vector (gap 0 first,
/// `Left` before `Right`).
pub fn expand_fibers(lattice_set: &OrbitSet, grid: &AlphaGrid) -> Result<Vec<AlphaRep>> {
    let n = grid.n();
    if lattice_set.period() != 2 * n {
        return Err(Error::PeriodMismatch(lattice_set.period(), 2 * n));
    }
    let base: Vec<GridIntervalOrbit> = lattice_set
        .orbits()
        .iter()
        .map(|o| GridIntervalOrbit::from_lattice(&o.representative()))
        .collect::<Result<_>>()?;
    let base_rep = AlphaRep::new(grid.clone(), base.clone(), Vec::new());
    let base_items = concrete_items(&base_rep, &[])?;

    let mut chosen: Vec<[FamilySpec; 2]> = Vec::with_capacity(n);
    for gap in 0..n as i64 {
        let mut pair = [FamilySpec::left(0, Endpoint::NegInf, Boundary::Open); 2];
        for (slot, direction) in [Direction::Left, Direction::Right].into_iter().enumerate() {
            let survivors: Vec<FamilySpec> = family_candidates(gap, direction, n)
                .into_iter()
                .filter(|fam| {
                    let mut members = Vec::with_capacity(4);
                    for t in SAMPLE_OFFSETS {
                        match fam.members(t, 0) {
                            Ok(m) => members.extend(m),
                            Err(_) => return false,
                        }
                    }
                    let mut all = members.clone();
                    all.extend_from_slice(&base_items);
                    let bound = horizon(&all, n);
                    compatible_under_shifts(&members, &all, n, bound)
                })
                .collect();
            if survivors.len() != 1 {
                return Err(Error::FiberAnomaly(format!(
                    "over {lattice_set}: gap {gap} {direction:?} admits {} families",
                    survivors.len()
                )));
            }
            pair[slot] = survivors[0];
        }
        chosen.push(pair);
    }

    let mut out = Vec::with_capacity(1 << n);
    for mask in 0..1usize << n {
        let families = (0..n)
            .map(|g| chosen[g][mask >> (n - 1 - g) & 1])
            .collect::<Vec<_>>();
        let rep = AlphaRep::new(grid.clone(), base.clone(), families);
        if let Err(v) = validate_type_alpha(&rep) {
            return Err(Error::FiberAnomaly(format!(
                "{rep} is not of type alpha: {v}"
            )));
        }
        if !alpha_is_rigid(&rep) {
            return Err(Error::FiberAnomaly(format!("{rep} is not rigid")));
        }
        if tau(&rep)? != *lattice_set {
            return Err(Error::FiberAnomaly(format!(
                "{rep} does not reduce to {lattice_set}"
            )));
        }
        out.push(rep);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    Formula,
    Enumerate,
}

/// Every maximal rigid representation of type α for an `n`-point grid, in
/// the order of the lattice sets they lie over.
pub fn enumerate_alpha(n: usize) -> Result<Vec<AlphaRep>> {
    let grid = AlphaGrid::uniform(n)?;
    let mut out = Vec::new();
    for lattice_set in enumerate_maximal_rigid(2 * n)? {
        out.extend(expand_fibers(&lattice_set, &grid)?);
    }
    Ok(out)
}

pub fn count_alpha(n: usize, mode: CountMode) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidAlpha("grid needs at least one point".into()));
    }
    match mode {
        CountMode::Formula => binom::alpha_count(n as u64).ok_or(Error::Overflow),
        CountMode::Enumerate => {
            let grid = AlphaGrid::uniform(n)?;
            let mut total = 0u128;
            for lattice_set in enumerate_maximal_rigid(2 * n)? {
                total += expand_fibers(&lattice_set, &grid)?.len() as u128;
            }
            Ok(total)
        }
    }
}

/// Shorthand used by tests and fixtures: `vec!` of grid orbits.
pub fn grid_orbits(
    spec: &[(Option<i64>, bool, Option<i64>, bool)],
) -> Result<Vec<GridIntervalOrbit>> {
    spec.iter()
        .map(|&(lo, lc, hi, hc)| {
            GridIntervalOrbit::new(lo, Boundary::from_closed(lc), hi, Boundary::from_closed(hc))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use Boundary::*;

    fn grid1() -> AlphaGrid {
        AlphaGrid::uniform(1).unwrap()
    }

    /// (0,1) ⊕ (−∞,1) ⊕ ⊕_x ([x,1) ⊕ (x,1))
    fn m1() -> AlphaRep {
        AlphaRep::new(
            grid1(),
            grid_orbits(&[
                (Some(0), false, Some(1), false),
                (None, false, Some(1), false),
            ])
            .unwrap(),
            vec![FamilySpec::right(0, Endpoint::Grid(1), Open)],
        )
    }

    #[test]
    fn grid_validation() {
        assert!(AlphaGrid::new(vec![Frac::HALF]).is_err());
        assert!(AlphaGrid::new(vec![Frac::ZERO, Frac::HALF, Frac::HALF]).is_err());
        assert!(AlphaGrid::new(vec![Frac::ZERO, Frac::new(1, 1).unwrap()]).is_err());
        assert_eq!(AlphaGrid::uniform(3).unwrap().n(), 3);
    }

    #[test]
    fn orbit_normalization() {
        let o = GridIntervalOrbit::new(None, Open, Some(1), Open).unwrap();
        let rep = AlphaRep::new(grid1(), vec![o], vec![]);
        assert_eq!(rep.orbits()[0].hi(), Some(0));
        assert!(GridIntervalOrbit::new(None, Open, None, Open).is_err());
        assert!(GridIntervalOrbit::new(Some(0), Open, Some(0), Closed).is_err());
    }

    #[test]
    fn m1_is_valid_and_rigid() {
        assert_eq!(validate_type_alpha(&m1()), Ok(()));
        assert!(alpha_is_rigid(&m1()));
    }

    #[test]
    fn far_end_off_grid_is_rejected() {
        let mut rep = m1();
        rep.families = vec![FamilySpec::right(0, Endpoint::Gap(1, Frac::HALF), Open)];
        let v = validate_type_alpha(&rep).unwrap_err();
        assert!(matches!(
            v.kind,
            ViolationKind::EndpointNotGrid(EndpointSet {
                side: Direction::Right,
                ..
            })
        ));
    }

    #[test]
    fn two_families_in_one_gap_are_rejected() {
        let mut rep = m1();
        rep.families
            .push(FamilySpec::left(0, Endpoint::Grid(0), Open));
        let v = validate_type_alpha(&rep).unwrap_err();
        assert_eq!(v.kind, ViolationKind::FamilyCount(2));
        assert_eq!(v.gap, 0);
    }

    #[test]
    fn empty_gap_is_rejected() {
        let mut rep = m1();
        rep.families.clear();
        assert_eq!(
            validate_type_alpha(&rep).unwrap_err().kind,
            ViolationKind::FamilyCount(0)
        );
    }

    #[test]
    fn closed_far_end_breaks_m1() {
        let mut rep = m1();
        rep.families = vec![FamilySpec::right(0, Endpoint::Grid(1), Closed)];
        assert_eq!(validate_type_alpha(&rep), Ok(()));
        assert!(!alpha_is_rigid(&rep));
    }

    #[test]
    fn tau_examples() {
        let hat1 = OrbitSet::new(
            2,
            [
                OrbitInterval::finite(2, 1, 1).unwrap(),
                OrbitInterval::left_ray(2, 1).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(tau(&m1()).unwrap(), hat1);

        let m3 = AlphaRep::new(
            grid1(),
            grid_orbits(&[(Some(0), true, Some(0), true), (None, false, Some(0), true)]).unwrap(),
            vec![FamilySpec::left(0, Endpoint::NegInf, Open)],
        );
        let hat2 = OrbitSet::new(
            2,
            [
                OrbitInterval::finite(2, 0, 1).unwrap(),
                OrbitInterval::left_ray(2, 0).unwrap(),
            ],
        )
        .unwrap();
        assert_eq!(tau(&m3).unwrap(), hat2);

        let single = grid_orbits(&[(Some(0), true, Some(1), false)]).unwrap()[0];
        assert_eq!(single.lattice(), DiscreteInterval::finite(0, 1).unwrap());
    }

    #[test]
    fn lattice_round_trip() {
        for lo in -3..3 {
            for len in 0..4 {
                for lc in [false, true] {
                    for hc in [false, true] {
                        let Ok(o) = GridIntervalOrbit::new(
                            Some(lo),
                            Boundary::from_closed(lc),
                            Some(lo + len),
                            Boundary::from_closed(hc),
                        ) else {
                            continue;
                        };
                        assert_eq!(GridIntervalOrbit::from_lattice(&o.lattice()).unwrap(), o);
                    }
                }
            }
        }
    }

    #[test]
    fn fibers_over_first_lattice_set() {
        let hat1 = tau(&m1()).unwrap();
        let fiber = expand_fibers(&hat1, &grid1()).unwrap();
        assert_eq!(fiber.len(), 2);
        assert!(fiber.contains(&m1()));
        let m2 = AlphaRep::new(
            grid1(),
            m1().orbits.clone(),
            vec![FamilySpec::left(0, Endpoint::Grid(0), Open)],
        );
        assert!(fiber.contains(&m2));
    }

    #[test]
    fn counts_small() {
        assert_eq!(count_alpha(1, CountMode::Enumerate).unwrap(), 12);
        assert_eq!(count_alpha(1, CountMode::Formula).unwrap(), 12);
        assert_eq!(count_alpha(2, CountMode::Enumerate).unwrap(), 280);
        assert!(count_alpha(0, CountMode::Formula).is_err());
    }
}
