//! Hom and Ext¹ between representations of quivers without relations.
//!
//! Path algebras are hereditary, so for finite-dimensional representations
//! `M` and `N` the map
//!
//! ```text
//! D : ⊕_v Hom(M_v, N_v) → ⊕_α Hom(M_t(α), N_h(α)),   D(f)_α = N_α f_t(α) − f_h(α) M_α
//! ```
//!
//! has `ker D = Hom(M, N)` and `coker D = Ext¹(M, N)`.
//!
//! Arrows always point from `i − 1` to `i` (cyclically for [`QuiverShape::Cyclic`]);
//! arrow `a_i` is the one with head `i`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::linalg::{Matrix, PrimeField};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuiverShape {
    /// Vertices `lo..=hi`, arrows `i − 1 → i` for `lo < i <= hi`.
    LinearWindow { lo: i64, hi: i64 },
    /// Vertices `0..m`, arrows `i − 1 → i (mod m)` labelled `1..=m`.
    Cyclic { m: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: i64,
    pub tail: usize,
    pub head: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuiverSpec {
    shape: QuiverShape,
}

impl QuiverSpec {
    pub fn linear(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidQuiver("window lower end above upper end"));
        }
        Ok(QuiverSpec {
            shape: QuiverShape::LinearWindow { lo, hi },
        })
    }

    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidQuiver(
                "cyclic quiver needs at least one vertex",
            ));
        }
        Ok(QuiverSpec {
            shape: QuiverShape::Cyclic { m },
        })
    }

    pub fn shape(&self) -> QuiverShape {
        self.shape
    }

    pub fn vertex_count(&self) -> usize {
        match self.shape {
            QuiverShape::LinearWindow { lo, hi } => (hi - lo + 1) as usize,
            QuiverShape::Cyclic { m } => m,
        }
    }

    pub fn arrows(&self) -> Vec<Arrow> {
        match self.shape {
            QuiverShape::LinearWindow { lo, hi } => (lo + 1..=hi)
                .map(|i| Arrow {
                    label: i,
                    tail: (i - 1 - lo) as usize,
                    head: (i - lo) as usize,
                })
                .collect(),
            QuiverShape::Cyclic { m } => (1..=m)
                .map(|i| Arrow {
                    label: i as i64,
                    tail: i - 1,
                    head: i % m,
                })
                .collect(),
        }
    }
}

/// A finite-dimensional representation over `F_p`; `mats[k]` belongs to
/// `quiver.arrows()[k]` and has shape `dims[head] × dims[tail]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepSpec {
    quiver: QuiverSpec,
    field: PrimeField,
    dims: Vec<usize>,
    mats: Vec<Matrix>,
}

impl RepSpec {
    pub fn new(
        quiver: QuiverSpec,
        field: PrimeField,
        dims: Vec<usize>,
        mats: Vec<Matrix>,
    ) -> Result<Self> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::MalformedRepresentation(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        let arrows = quiver.arrows();
        if mats.len() != arrows.len() {
            return Err(Error::MalformedRepresentation(format!(
                "{} matrices for {} arrows",
                mats.len(),
                arrows.len()
            )));
        }
        for (a, m) in arrows.iter().zip(&mats) {
            if m.rows() != dims[a.head] || m.cols() != dims[a.tail] {
                return Err(Error::MalformedRepresentation(format!(
                    "arrow a{} has shape {}x{}, expected {}x{}",
                    a.label,
                    m.rows(),
                    m.cols(),
                    dims[a.head],
                    dims[a.tail]
                )));
            }
            if !m.entries_below(field.modulus()) {
                return Err(Error::MalformedRepresentation(format!(
                    "arrow a{} has entries outside F_{}",
                    a.label,
                    field.modulus()
                )));
            }
        }
        Ok(RepSpec {
            quiver,
            field,
            dims,
            mats,
        })
    }

    /// The zero representation.
    pub fn zero(quiver: QuiverSpec, field: PrimeField) -> Self {
        let dims = alloc::vec![0; quiver.vertex_count()];
        let mats = quiver
            .arrows()
            .iter()
            .map(|_| Matrix::zeros(0, 0))
            .collect();
        RepSpec {
            quiver,
            field,
            dims,
            mats,
        }
    }

    pub fn quiver(&self) -> QuiverSpec {
        self.quiver
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn mats(&self) -> &[Matrix] {
        &self.mats
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Direct sum: block-diagonal at every vertex and arrow.
    pub fn direct_sum(&self, other: &RepSpec) -> Result<RepSpec> {
        if self.quiver != other.quiver {
            return Err(Error::QuiverMismatch);
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(RepSpec {
            quiver: self.quiver,
            field: self.field,
            dims: self
                .dims
                .iter()
                .zip(&other.dims)
                .map(|(a, b)| a + b)
                .collect(),
            mats: self
                .mats
                .iter()
                .zip(&other.mats)
                .map(|(a, b)| a.block_diag(b))
                .collect(),
        })
    }
}

/// `(dim Hom(M, N), dim Ext¹(M, N))`.
pub fn hom_ext_dims(m: &RepSpec, n: &RepSpec) -> Result<(usize, usize)> {
    if m.quiver != n.quiver {
        return Err(Error::QuiverMismatch);
    }
    if m.field != n.field {
        return Err(Error::FieldMismatch);
    }
    let field = m.field;
    let arrows = m.quiver.arrows();

    // variable (v, r, c) is entry (r, c) of f_v : M_v → N_v
    let mut var_offset = Vec::with_capacity(m.dims.len() + 1);
    let mut acc = 0;
    for (dm, dn) in m.dims.iter().zip(&n.dims) {
        var_offset.push(acc);
        acc += dm * dn;
    }
    let vars = acc;
    let var = |v: usize, r: usize, c: usize| var_offset[v] + r * m.dims[v] + c;

    let eqs: usize = arrows.iter().map(|a| n.dims[a.head] * m.dims[a.tail]).sum();
    let mut d = Matrix::zeros(eqs, vars);
    let mut row = 0;
    for (k, a) in arrows.iter().enumerate() {
        let (mt, nh) = (m.dims[a.tail], n.dims[a.head]);
        let (m_alpha, n_alpha) = (&m.mats[k], &n.mats[k]);
        for r in 0..nh {
            for c in 0..mt {
                // + Σ_s N_α[r][s] f_t[s][c]
                for s in 0..n.dims[a.tail] {
                    let coef = n_alpha.get(r, s);
                    if coef != 0 {
                        let col = var(a.tail, s, c);
                        d.set(row, col, field.add(d.get(row, col), coef));
                    }
                }
                // − Σ_s f_h[r][s] M_α[s][c]
                for s in 0..m.dims[a.head] {
                    let coef = m_alpha.get(s, c);
                    if coef != 0 {
                        let col = var(a.head, r, s);
                        d.set(row, col, field.sub(d.get(row, col), coef));
                    }
                }
                row += 1;
            }
        }
    }
    let rank = d.rank(field);
    Ok((vars - rank, eqs - rank))
}

/// `⟨dM, dN⟩ = Σ_v dM_v dN_v − Σ_α dM_t(α) dN_h(α)`.
pub fn euler_form(quiver: &QuiverSpec, dm: &[usize], dn: &[usize]) -> Result<i64> {
    let nv = quiver.vertex_count();
    if dm.len() != nv || dn.len() != nv {
        return Err(Error::MalformedRepresentation(format!(
            "dimension vectors of length {} and {} for {nv} vertices",
            dm.len(),
            dn.len()
        )));
    }
    let diag: i64 = dm.iter().zip(dn).map(|(a, b)| (a * b) as i64).sum();
    let off: i64 = quiver
        .arrows()
        .iter()
        .map(|a| (dm[a.tail] * dn[a.head]) as i64)
        .sum();
    Ok(diag - off)
}

/// An interval of the integer line; `None` marks an infinite end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DiscreteInterval {
    lo: Option<i64>,
    hi: Option<i64>,
}

impl DiscreteInterval {
    pub fn new(lo: Option<i64>, hi: Option<i64>) -> Result<Self> {
        if let (Some(a), Some(b)) = (lo, hi) {
            if a > b {
                return Err(Error::InvalidInterval("lower end above upper end"));
            }
        }
        Ok(DiscreteInterval { lo, hi })
    }

    pub fn finite(lo: i64, hi: i64) -> Result<Self> {
        Self::new(Some(lo), Some(hi))
    }

    /// `(−∞, d]`
    pub fn left_ray(d: i64) -> Self {
        DiscreteInterval {
            lo: None,
            hi: Some(d),
        }
    }

    /// `[c, +∞)`
    pub fn right_ray(c: i64) -> Self {
        DiscreteInterval {
            lo: Some(c),
            hi: None,
        }
    }

    pub fn full() -> Self {
        DiscreteInterval { lo: None, hi: None }
    }

    pub fn lo(&self) -> Option<i64> {
        self.lo
    }

    pub fn hi(&self) -> Option<i64> {
        self.hi
    }

    pub fn is_finite(&self) -> bool {
        self.lo.is_some() && self.hi.is_some()
    }

    pub fn shifted(&self, delta: i64) -> Self {
        DiscreteInterval {
            lo: self.lo.map(|x| x + delta),
            hi: self.hi.map(|x| x + delta),
        }
    }

    pub fn contains_point(&self, x: i64) -> bool {
        self.lo.is_none_or(|a| a <= x) && self.hi.is_none_or(|b| x <= b)
    }
}

impl fmt::Display for DiscreteInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.lo {
            Some(a) => write!(f, "[{a},")?,
            None => f.write_str("(-inf,")?,
        }
        match self.hi {
            Some(b) => write!(f, "{b}]"),
            None => f.write_str("+inf)"),
        }
    }
}

/// The interval module of `interval` clipped to a linear window: one
/// dimensional on the overlap with identity maps between consecutive points.
pub fn interval_to_rep(
    window: QuiverSpec,
    interval: DiscreteInterval,
    field: PrimeField,
) -> Result<RepSpec> {
    let QuiverShape::LinearWindow { lo, hi } = window.shape else {
        return Err(Error::InvalidQuiver(
            "interval modules need a linear window",
        ));
    };
    let dims: Vec<usize> = (lo..=hi)
        .map(|x| interval.contains_point(x) as usize)
        .collect();
    let mats = window
        .arrows()
        .iter()
        .map(|a| {
            let (dt, dh) = (dims[a.tail], dims[a.head]);
            if dt == 1 && dh == 1 {
                Matrix::identity(1)
            } else {
                Matrix::zeros(dh, dt)
            }
        })
        .collect();
    RepSpec::new(window, field, dims, mats)
}

/// `dim Ext¹(T_I, T_J)` for interval modules on the integer line with
/// arrows `i − 1 → i`.
///
/// Nonzero (and then equal to one) exactly when `lo(I) < lo(J) <= hi(I) + 1`
/// and `hi(I) < hi(J)`, with `hi(I)` and `lo(J)` finite. Right rays are
/// projective and left rays injective, so they give zero as first and second
/// argument respectively.
pub fn interval_ext(i: &DiscreteInterval, j: &DiscreteInterval) -> usize {
    let (Some(hi_i), Some(lo_j)) = (i.hi, j.lo) else {
        return 0;
    };
    let starts_before = i.lo.is_none_or(|lo_i| lo_i < lo_j);
    let ends_before = j.hi.is_none_or(|hi_j| hi_i < hi_j);
    (starts_before && lo_j <= hi_i + 1 && ends_before) as usize
}
