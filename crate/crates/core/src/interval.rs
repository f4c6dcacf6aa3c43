//! Symbolic intervals of the real line.
//!
//! Points are never floating point. A point is either a grid point `a_i`,
//! a point strictly inside the gap `(a_g, a_{g+1})` addressed by a rational
//! offset in `(0, 1)`, or one of the two infinities. Only the relative order
//! of endpoints and the open/closed flags matter to the predicates below.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A reduced fraction `num / den`, used both for offsets inside a gap and for
/// displayed grid positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    num: u32,
    den: u32,
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Frac {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidFraction("zero denominator"));
        }
        let g = gcd(num, den).max(1);
        Ok(Frac {
            num: num / g,
            den: den / g,
        })
    }

    pub const ZERO: Frac = Frac { num: 0, den: 1 };
    pub const HALF: Frac = Frac { num: 1, den: 2 };
    pub const ONE_THIRD: Frac = Frac { num: 1, den: 3 };
    pub const TWO_THIRDS: Frac = Frac { num: 2, den: 3 };

    pub fn num(self) -> u32 {
        self.num
    }

    pub fn den(self) -> u32 {
        self.den
    }

    /// True for `0 < self < 1`.
    pub fn is_proper(self) -> bool {
        self.num > 0 && self.num < self.den
    }
}

impl Ord for Frac {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl PartialOrd for Frac {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Frac {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s, "1"),
        };
        let p = p
            .parse::<u32>()
            .map_err(|_| Error::InvalidFraction("bad numerator"))?;
        let q = q
            .parse::<u32>()
            .map_err(|_| Error::InvalidFraction("bad denominator"))?;
        Frac::new(p, q)
    }
}

/// A point of the extended real line, addressed relative to the grid.
///
/// Order: `NegInf < Grid(i) < Gap(i, t) < Grid(i + 1) < PosInf`, and
/// `Gap(i, s) < Gap(i, t)` iff `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    NegInf,
    Grid(i64),
    /// A point strictly inside `(a_g, a_{g+1})`; the offset lies in `(0, 1)`.
    Gap(i64, Frac),
    PosInf,
}

impl Endpoint {
    pub fn gap(g: i64, offset: Frac) -> Result<Self> {
        if !offset.is_proper() {
            return Err(Error::InvalidFraction("gap offset must lie in (0, 1)"));
        }
        Ok(Endpoint::Gap(g, offset))
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Endpoint::NegInf | Endpoint::PosInf)
    }

    pub fn is_grid(self) -> bool {
        matches!(self, Endpoint::Grid(_))
    }

    /// Translate by `delta` grid indices. Infinities are fixed.
    pub fn shifted(self, delta: i64) -> Self {
        match self {
            Endpoint::Grid(i) => Endpoint::Grid(i + delta),
            Endpoint::Gap(g, t) => Endpoint::Gap(g + delta, t),
            inf => inf,
        }
    }

    fn rank(self) -> u8 {
        match self {
            Endpoint::NegInf => 0,
            Endpoint::Grid(_) | Endpoint::Gap(..) => 1,
            Endpoint::PosInf => 2,
        }
    }
}

/// Total order on endpoints.
pub fn compare_endpoints(p: Endpoint, q: Endpoint) -> Ordering {
    use Endpoint::*;
    match (p, q) {
        (Grid(i), Grid(j)) => i.cmp(&j),
        (Gap(i, s), Gap(j, t)) => i.cmp(&j).then(s.cmp(&t)),
        (Grid(i), Gap(j, _)) => {
            if i <= j {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (Gap(i, _), Grid(j)) => {
            if i < j {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        _ => p.rank().cmp(&q.rank()),
    }
}

impl Ord for Endpoint {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_endpoints(*self, *other)
    }
}

impl PartialOrd for Endpoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Boundary {
    Open,
    Closed,
}

impl Boundary {
    pub fn from_closed(closed: bool) -> Self {
        if closed {
            Boundary::Closed
        } else {
            Boundary::Open
        }
    }

    pub fn is_closed(self) -> bool {
        self == Boundary::Closed
    }
}

/// An interval `|lo, hi|` with independent open/closed ends.
///
/// Infinite ends are always stored as [`Boundary::Open`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Endpoint,
    lo_b: Boundary,
    hi: Endpoint,
    hi_b: Boundary,
}

impl Interval {
    pub fn new(lo: Endpoint, lo_b: Boundary, hi: Endpoint, hi_b: Boundary) -> Result<Self> {
        if lo == Endpoint::PosInf {
            return Err(Error::InvalidInterval("lower end is +inf"));
        }
        if hi == Endpoint::NegInf {
            return Err(Error::InvalidInterval("upper end is -inf"));
        }
        let lo_b = if lo.is_infinite() {
            Boundary::Open
        } else {
            lo_b
        };
        let hi_b = if hi.is_infinite() {
            Boundary::Open
        } else {
            hi_b
        };
        match lo.cmp(&hi) {
            Ordering::Less => {}
            Ordering::Equal if lo_b.is_closed() && hi_b.is_closed() => {}
            Ordering::Equal => return Err(Error::InvalidInterval("degenerate non-closed point")),
            Ordering::Greater => return Err(Error::InvalidInterval("lower end above upper end")),
        }
        Ok(Interval { lo, lo_b, hi, hi_b })
    }

    pub fn closed(lo: Endpoint, hi: Endpoint) -> Result<Self> {
        Self::new(lo, Boundary::Closed, hi, Boundary::Closed)
    }

    pub fn open(lo: Endpoint, hi: Endpoint) -> Result<Self> {
        Self::new(lo, Boundary::Open, hi, Boundary::Open)
    }

    pub fn lo(&self) -> Endpoint {
        self.lo
    }

    pub fn hi(&self) -> Endpoint {
        self.hi
    }

    pub fn lo_boundary(&self) -> Boundary {
        self.lo_b
    }

    pub fn hi_boundary(&self) -> Boundary {
        self.hi_b
    }

    pub fn shifted(&self, delta: i64) -> Self {
        Interval {
            lo: self.lo.shifted(delta),
            hi: self.hi.shifted(delta),
            ..*self
        }
    }

    /// Point-set containment `other ⊆ self`.
    pub fn contains(&self, other: &Interval) -> bool {
        let lo_ok = match self.lo.cmp(&other.lo) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_b.is_closed() || !other.lo_b.is_closed(),
            Ordering::Greater => false,
        };
        let hi_ok = match self.hi.cmp(&other.hi) {
            Ordering::Greater => true,
            Ordering::Equal => self.hi_b.is_closed() || !other.hi_b.is_closed(),
            Ordering::Less => false,
        };
        lo_ok && hi_ok
    }

    /// `self` lies entirely to the left of `other` with at least one point
    /// between them that neither contains.
    fn separated_before(&self, other: &Interval) -> bool {
        match self.hi.cmp(&other.lo) {
            Ordering::Less => true,
            Ordering::Equal => !self.hi_b.is_closed() && !other.lo_b.is_closed(),
            Ordering::Greater => false,
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => f.write_str("-inf"),
            Endpoint::PosInf => f.write_str("+inf"),
            Endpoint::Grid(i) => write!(f, "a{i}"),
            Endpoint::Gap(g, t) => write!(f, "a{g}+{t}"),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.lo_b.is_closed() { '[' } else { '(' };
        let r = if self.hi_b.is_closed() { ']' } else { ')' };
        write!(f, "{l}{},{}{r}", self.lo, self.hi)
    }
}

/// Compatibility of two intervals: nested, separated by a gap, or touching
/// at a single point that both leave open.
pub fn is_compatible(i: &Interval, j: &Interval) -> bool {
    i.contains(j) || j.contains(i) || i.separated_before(j) || j.separated_before(i)
}

/// A finite direct sum of interval modules is rigid iff every pair of its
/// summands is compatible. Repeated summands are allowed.
pub fn is_rigid_list(items: &[Interval]) -> bool {
    items
        .iter()
        .enumerate()
        .all(|(k, a)| items[k + 1..].iter().all(|b| is_compatible(a, b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use Boundary::*;
    use Endpoint::*;

    fn frac(p: u32, q: u32) -> Frac {
        Frac::new(p, q).unwrap()
    }

    fn iv(lo: Endpoint, lb: Boundary, hi: Endpoint, hb: Boundary) -> Interval {
        Interval::new(lo, lb, hi, hb).unwrap()
    }

    #[test]
    fn endpoint_order_examples() {
        assert_eq!(compare_endpoints(NegInf, Grid(0)), Ordering::Less);
        assert_eq!(
            compare_endpoints(Gap(0, Frac::HALF), Gap(0, Frac::HALF)),
            Ordering::Equal
        );
        assert_eq!(
            compare_endpoints(Gap(0, frac(2, 3)), Grid(1)),
            Ordering::Less
        );
        assert_eq!(
            compare_endpoints(Gap(0, frac(2, 3)), Grid(0)),
            Ordering::Greater
        );
        assert_eq!(
            compare_endpoints(PosInf, Gap(100, frac(1, 9))),
            Ordering::Greater
        );
        assert_eq!(
            compare_endpoints(Gap(0, frac(1, 3)), Gap(0, frac(2, 3))),
            Ordering::Less
        );
    }

    #[test]
    fn frac_parse_and_reduce() {
        let f: Frac = "2/4".parse().unwrap();
        assert_eq!(f, Frac::HALF);
        assert_eq!(f.to_string(), "1/2");
        assert!("1/0".parse::<Frac>().is_err());
        assert!(Endpoint::gap(0, Frac::ZERO).is_err());
        assert!(Endpoint::gap(0, frac(1, 1)).is_err());
    }

    #[test]
    fn interval_invariants() {
        assert!(Interval::new(Grid(1), Closed, Grid(0), Closed).is_err());
        assert!(Interval::new(Grid(0), Open, Grid(0), Closed).is_err());
        assert!(Interval::new(PosInf, Open, PosInf, Open).is_err());
        assert!(Interval::new(Grid(0), Closed, NegInf, Open).is_err());
        let point = iv(Grid(0), Closed, Grid(0), Closed);
        assert_eq!(point.lo(), point.hi());
        // infinite ends normalise to open
        let ray = iv(NegInf, Closed, Grid(1), Open);
        assert_eq!(ray, iv(NegInf, Open, Grid(1), Open));
    }

    #[test]
    fn compatibility_examples() {
        let open01 = iv(Grid(0), Open, Grid(1), Open);
        let ray = iv(NegInf, Open, Grid(1), Open);
        assert!(is_compatible(&open01, &ray));

        let a = iv(Grid(0), Closed, Grid(1), Open);
        let b = iv(Grid(1), Open, Grid(2), Closed);
        assert!(is_compatible(&a, &b));

        let a = iv(Grid(0), Closed, Grid(1), Closed);
        let b = iv(Grid(1), Closed, Grid(2), Closed);
        assert!(!is_compatible(&a, &b));

        let a = iv(Grid(0), Closed, Grid(2), Closed);
        let b = iv(Grid(1), Closed, Grid(3), Closed);
        assert!(!is_compatible(&a, &b));
    }

    /// Touching at a shared endpoint: only open/open is compatible.
    #[test]
    fn touching_truth_table() {
        for (hb, lb, expected) in [
            (Open, Open, true),
            (Open, Closed, false),
            (Closed, Open, false),
            (Closed, Closed, false),
        ] {
            let a = iv(Grid(0), Closed, Grid(1), hb);
            let b = iv(Grid(1), lb, Grid(2), Closed);
            assert_eq!(is_compatible(&a, &b), expected, "{a} {b}");
            assert_eq!(is_compatible(&b, &a), expected, "{b} {a}");
        }
    }

    /// Containment at a shared left end for each pair of boundary flags.
    #[test]
    fn nesting_truth_table() {
        for (outer_b, inner_b, expected) in [
            (Closed, Closed, true),
            (Closed, Open, true),
            (Open, Open, true),
            (Open, Closed, false),
        ] {
            let outer = iv(Grid(0), outer_b, Grid(3), Closed);
            let inner = iv(Grid(0), inner_b, Grid(2), Closed);
            assert_eq!(outer.contains(&inner), expected);
        }
        // [0,1) vs (0,1]: neither contains the other, they overlap
        let a = iv(Grid(0), Closed, Grid(1), Open);
        let b = iv(Grid(0), Open, Grid(1), Closed);
        assert!(!is_compatible(&a, &b));
    }

    #[test]
    fn rigid_list_examples() {
        let x = Gap(0, Frac::HALF);
        let m1 = [
            iv(Grid(0), Open, Grid(1), Open),
            iv(NegInf, Open, Grid(1), Open),
            iv(x, Closed, Grid(1), Open),
            iv(x, Open, Grid(1), Open),
        ];
        assert!(is_rigid_list(&m1));
        assert!(is_rigid_list(&[iv(Grid(0), Closed, Grid(0), Closed)]));
        assert!(!is_rigid_list(&[
            iv(Grid(0), Closed, Grid(1), Closed),
            iv(Grid(1), Closed, Grid(2), Closed),
        ]));
        // repeated summands are rigid
        let p = iv(Grid(0), Closed, Grid(1), Closed);
        assert!(is_rigid_list(&[p, p]));
    }

    #[test]
    fn point_interval_next_to_open_interval() {
        let point = iv(Grid(1), Closed, Grid(1), Closed);
        let right = iv(Grid(1), Open, Grid(2), Open);
        assert!(!is_compatible(&point, &right));
        let left = iv(Grid(0), Open, Grid(1), Open);
        assert!(!is_compatible(&point, &left));
        let wide = iv(Grid(0), Open, Grid(2), Open);
        assert!(is_compatible(&point, &wide));
    }
}
