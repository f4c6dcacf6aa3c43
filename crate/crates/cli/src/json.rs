//! JSON forms of intervals, quiver representations, orbit sets and
//! representations of type α.

use std::collections::BTreeMap;

use qrigid_core::alpha::{AlphaGrid, AlphaRep, Direction, FamilySpec, GridIntervalOrbit};
use qrigid_core::equivariant::{OrbitClass, OrbitInterval, OrbitSet};
use qrigid_core::ext::{QuiverShape, QuiverSpec, RepSpec};
use qrigid_core::interval::{Boundary, Endpoint, Frac, Interval};
use qrigid_core::linalg::{Matrix, PrimeField};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("{0}")]
    Core(#[from] qrigid_core::Error),
    #[error("{0}")]
    Field(String),
}

type Result<T> = std::result::Result<T, FormatError>;

fn field_error(msg: impl Into<String>) -> FormatError {
    FormatError::Field(msg.into())
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum EndpointJson {
    Grid { i: i64 },
    Gap { g: i64, t: String },
    Ninf,
    Pinf,
}

impl From<Endpoint> for EndpointJson {
    fn from(e: Endpoint) -> Self {
        match e {
            Endpoint::NegInf => EndpointJson::Ninf,
            Endpoint::Grid(i) => EndpointJson::Grid { i },
            Endpoint::Gap(g, t) => EndpointJson::Gap {
                g,
                t: t.to_string(),
            },
            Endpoint::PosInf => EndpointJson::Pinf,
        }
    }
}

impl TryFrom<&EndpointJson> for Endpoint {
    type Error = FormatError;

    fn try_from(e: &EndpointJson) -> Result<Self> {
        Ok(match e {
            EndpointJson::Ninf => Endpoint::NegInf,
            EndpointJson::Pinf => Endpoint::PosInf,
            EndpointJson::Grid { i } => Endpoint::Grid(*i),
            EndpointJson::Gap { g, t } => Endpoint::gap(*g, t.parse::<Frac>()?)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IntervalJson {
    pub lo: EndpointJson,
    #[serde(default)]
    pub lo_closed: bool,
    pub hi: EndpointJson,
    #[serde(default)]
    pub hi_closed: bool,
}

impl From<&Interval> for IntervalJson {
    fn from(iv: &Interval) -> Self {
        IntervalJson {
            lo: iv.lo().into(),
            lo_closed: iv.lo_boundary().is_closed(),
            hi: iv.hi().into(),
            hi_closed: iv.hi_boundary().is_closed(),
        }
    }
}

impl TryFrom<&IntervalJson> for Interval {
    type Error = FormatError;

    fn try_from(j: &IntervalJson) -> Result<Self> {
        Ok(Interval::new(
            (&j.lo).try_into()?,
            Boundary::from_closed(j.lo_closed),
            (&j.hi).try_into()?,
            Boundary::from_closed(j.hi_closed),
        )?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "shape", rename_all = "lowercase")]
pub enum QuiverJson {
    Linear { lo: i64, hi: i64 },
    Cyclic { m: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RepJson {
    pub quiver: QuiverJson,
    #[serde(default = "default_prime")]
    pub p: u32,
    pub dims: Vec<usize>,
    /// Arrow matrices keyed `a<label>`; missing arrows are zero.
    #[serde(default)]
    pub mats: BTreeMap<String, Vec<Vec<i64>>>,
}

fn default_prime() -> u32 {
    2
}

impl From<&RepSpec> for RepJson {
    fn from(rep: &RepSpec) -> Self {
        let quiver = match rep.quiver().shape() {
            QuiverShape::LinearWindow { lo, hi } => QuiverJson::Linear { lo, hi },
            QuiverShape::Cyclic { m } => QuiverJson::Cyclic { m },
        };
        let mats = rep
            .quiver()
            .arrows()
            .iter()
            .zip(rep.mats())
            .map(|(a, m)| {
                let rows = (0..m.rows())
                    .map(|r| m.row(r).iter().map(|&x| x as i64).collect())
                    .collect();
                (format!("a{}", a.label), rows)
            })
            .collect();
        RepJson {
            quiver,
            p: rep.field().modulus(),
            dims: rep.dims().to_vec(),
            mats,
        }
    }
}

impl TryFrom<&RepJson> for RepSpec {
    type Error = FormatError;

    fn try_from(j: &RepJson) -> Result<Self> {
        let quiver = match j.quiver {
            QuiverJson::Linear { lo, hi } => QuiverSpec::linear(lo, hi)?,
            QuiverJson::Cyclic { m } => QuiverSpec::cyclic(m)?,
        };
        let field = PrimeField::new(j.p)?;
        if j.dims.len() != quiver.vertex_count() {
            return Err(field_error(format!(
                "{} dimensions for {} vertices",
                j.dims.len(),
                quiver.vertex_count()
            )));
        }
        let arrows = quiver.arrows();
        let known: Vec<String> = arrows.iter().map(|a| format!("a{}", a.label)).collect();
        if let Some(extra) = j.mats.keys().find(|k| !known.contains(k)) {
            return Err(field_error(format!("unknown arrow {extra}")));
        }
        let mats = arrows
            .iter()
            .zip(&known)
            .map(|(a, key)| {
                let (rows, cols) = (j.dims[a.head], j.dims[a.tail]);
                match j.mats.get(key) {
                    None => Ok(Matrix::zeros(rows, cols)),
                    Some(data) => {
                        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                            return Err(field_error(format!("arrow {key} must be {rows}x{cols}")));
                        }
                        Ok(Matrix::from_rows(data, cols, field)?)
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepSpec::new(quiver, field, j.dims.clone(), mats)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum OrbitJson {
    Lray { d: i64 },
    Rray { c: i64 },
    Fin { a: i64, len: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitSetJson {
    pub m: usize,
    pub orbits: Vec<OrbitJson>,
}

impl From<&OrbitSet> for OrbitSetJson {
    fn from(s: &OrbitSet) -> Self {
        let orbits = s
            .orbits()
            .iter()
            .map(|o| match o.class() {
                OrbitClass::LeftRay { d } => OrbitJson::Lray { d: d as i64 },
                OrbitClass::RightRay { c } => OrbitJson::Rray { c: c as i64 },
                OrbitClass::Finite { a, len } => OrbitJson::Fin { a: a as i64, len },
            })
            .collect();
        OrbitSetJson {
            m: s.period(),
            orbits,
        }
    }
}

impl TryFrom<&OrbitSetJson> for OrbitSet {
    type Error = FormatError;

    fn try_from(j: &OrbitSetJson) -> Result<Self> {
        let m = j.m;
        let orbits = j
            .orbits
            .iter()
            .map(|o| match *o {
                OrbitJson::Lray { d } => OrbitInterval::left_ray(m, d),
                OrbitJson::Rray { c } => OrbitInterval::right_ray(m, c),
                OrbitJson::Fin { a, len } => OrbitInterval::finite(m, a, len),
            })
            .collect::<qrigid_core::Result<Vec<_>>>()?;
        Ok(OrbitSet::new(m, orbits)?)
    }
}

/// A grid index or one of the tokens `"ninf"`, `"pinf"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexJson {
    Index(i64),
    Token(String),
}

impl IndexJson {
    fn finite(self_: Option<i64>, inf: &str) -> Self {
        match self_ {
            Some(i) => IndexJson::Index(i),
            None => IndexJson::Token(inf.to_string()),
        }
    }

    fn parse(&self, inf: &str) -> Result<Option<i64>> {
        match self {
            IndexJson::Index(i) => Ok(Some(*i)),
            IndexJson::Token(t) if t == inf => Ok(None),
            IndexJson::Token(t) => Err(field_error(format!(
                "expected an integer or \"{inf}\", got \"{t}\""
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridOrbitJson {
    pub lo: IndexJson,
    #[serde(default)]
    pub lo_closed: bool,
    pub hi: IndexJson,
    #[serde(default)]
    pub hi_closed: bool,
}

/// A far end: grid index, infinity token, or a full endpoint object (which
/// lets off-grid far ends reach the validator).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FarJson {
    Index(i64),
    Token(String),
    Point(EndpointJson),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FamilyJson {
    pub gap: i64,
    pub dir: String,
    pub far: FarJson,
    #[serde(default)]
    pub far_closed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlphaRepJson {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub positions: Option<Vec<String>>,
    pub orbits: Vec<GridOrbitJson>,
    pub families: Vec<FamilyJson>,
}

impl From<&AlphaRep> for AlphaRepJson {
    fn from(rep: &AlphaRep) -> Self {
        let orbits = rep
            .orbits()
            .iter()
            .map(|o| GridOrbitJson {
                lo: IndexJson::finite(o.lo(), "ninf"),
                lo_closed: o.lo_boundary().is_closed(),
                hi: IndexJson::finite(o.hi(), "pinf"),
                hi_closed: o.hi_boundary().is_closed(),
            })
            .collect();
        let families = rep
            .families()
            .iter()
            .map(|f| FamilyJson {
                gap: f.gap(),
                dir: match f.direction() {
                    Direction::Left => "left".into(),
                    Direction::Right => "right".into(),
                },
                far: match f.far() {
                    Endpoint::Grid(i) => FarJson::Index(i),
                    Endpoint::NegInf => FarJson::Token("ninf".into()),
                    Endpoint::PosInf => FarJson::Token("pinf".into()),
                    gap => FarJson::Point(gap.into()),
                },
                far_closed: f.far_boundary().is_closed(),
            })
            .collect();
        AlphaRepJson {
            n: rep.n(),
            positions: None,
            orbits,
            families,
        }
    }
}

impl TryFrom<&AlphaRepJson> for AlphaRep {
    type Error = FormatError;

    fn try_from(j: &AlphaRepJson) -> Result<Self> {
        let grid = match &j.positions {
            None => AlphaGrid::uniform(j.n)?,
            Some(ps) => {
                let ps = ps
                    .iter()
                    .map(|p| p.parse::<Frac>())
                    .collect::<qrigid_core::Result<Vec<_>>>()?;
                if ps.len() != j.n {
                    return Err(field_error(format!(
                        "{} positions for n = {}",
                        ps.len(),
                        j.n
                    )));
                }
                AlphaGrid::new(ps)?
            }
        };
        let orbits = j
            .orbits
            .iter()
            .map(|o| {
                Ok(GridIntervalOrbit::new(
                    o.lo.parse("ninf")?,
                    Boundary::from_closed(o.lo_closed),
                    o.hi.parse("pinf")?,
                    Boundary::from_closed(o.hi_closed),
                )?)
            })
            .collect::<Result<Vec<_>>>()?;
        let families = j
            .families
            .iter()
            .map(|f| {
                let direction = match f.dir.as_str() {
                    "left" => Direction::Left,
                    "right" => Direction::Right,
                    other => return Err(field_error(format!("unknown direction \"{other}\""))),
                };
                let far = match &f.far {
                    FarJson::Index(i) => Endpoint::Grid(*i),
                    FarJson::Token(t) if t == "ninf" => Endpoint::NegInf,
                    FarJson::Token(t) if t == "pinf" => Endpoint::PosInf,
                    FarJson::Token(t) => {
                        return Err(field_error(format!("unknown far end \"{t}\"")))
                    }
                    FarJson::Point(e) => e.try_into()?,
                };
                Ok(FamilySpec::new(
                    f.gap,
                    direction,
                    far,
                    Boundary::from_closed(f.far_closed),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlphaRep::new(grid, orbits, families))
    }
}

pub fn alpha_rep_from_str(s: &str) -> Result<AlphaRep> {
    let j: AlphaRepJson = serde_json::from_str(s)?;
    (&j).try_into()
}

pub fn alpha_reps_from_str(s: &str) -> Result<Vec<AlphaRep>> {
    let js: Vec<AlphaRepJson> = serde_json::from_str(s)?;
    js.iter().map(|j| j.try_into()).collect()
}

pub fn rep_from_str(s: &str) -> Result<RepSpec> {
    let j: RepJson = serde_json::from_str(s)?;
    (&j).try_into()
}

pub fn orbit_set_from_str(s: &str) -> Result<OrbitSet> {
    let j: OrbitSetJson = serde_json::from_str(s)?;
    (&j).try_into()
}

pub fn orbit_sets_from_str(s: &str) -> Result<Vec<OrbitSet>> {
    let js: Vec<OrbitSetJson> = serde_json::from_str(s)?;
    js.iter().map(|j| j.try_into()).collect()
}

pub fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data serializes")
}
