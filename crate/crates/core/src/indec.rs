//! Interval modules of type-A quivers, indecomposability certificates and a
//! barcode oracle for equioriented paths.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{saturating_pow, Limits};
use crate::linalg::{increment, FieldSpec, Matrix};
use crate::quiver::Quiver;
use crate::rep::{hom_basis, Rep};

/// The vertices `lo..=hi` of a type-A path. Serialized as `[lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Interval {
    lo: usize,
    hi: usize,
}

impl Interval {
    pub fn new(lo: usize, hi: usize) -> Result<Interval> {
        if lo > hi {
            return Err(Error::Input(format!("interval [{lo},{hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    pub fn contains(&self, v: usize) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    /// The interval module: `F_p` on `lo..=hi`, identities on interior arrows.
    pub fn rep(&self, quiver: &Arc<Quiver>, field: FieldSpec) -> Result<Rep> {
        quiver.check_type_a()?;
        if self.hi >= quiver.vertex_count() {
            return Err(Error::Input(format!("interval {self} leaves a quiver with {} vertices", quiver.vertex_count())));
        }
        let dims: Vec<usize> = (0..quiver.vertex_count()).map(|v| self.contains(v) as usize).collect();
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, t)| {
                if self.contains(s) && self.contains(t) {
                    Matrix::identity(field, 1)
                } else {
                    Matrix::zeros(field, dims[t], dims[s])
                }
            })
            .collect();
        Rep::new(quiver.clone(), field, dims, maps)
    }
}

impl TryFrom<[usize; 2]> for Interval {
    type Error = Error;

    fn try_from([lo, hi]: [usize; 2]) -> Result<Interval> {
        Interval::new(lo, hi)
    }
}

impl From<Interval> for [usize; 2] {
    fn from(i: Interval) -> [usize; 2] {
        [i.lo, i.hi]
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M[{},{}]", self.lo, self.hi)
    }
}

/// Every interval module of a type-A quiver, ordered by `(lo, hi)`.
pub fn type_a_intervals(quiver: &Arc<Quiver>, field: FieldSpec) -> Result<Vec<(Interval, Rep)>> {
    quiver.check_type_a()?;
    let n = quiver.vertex_count();
    let mut out = Vec::with_capacity(n * (n + 1) / 2);
    for lo in 0..n {
        for hi in lo..n {
            let i = Interval { lo, hi };
            out.push((i, i.rep(quiver, field)?));
        }
    }
    Ok(out)
}

/// True iff `End(x)` has no idempotents besides `0` and `1`. The zero
/// representation is not indecomposable.
pub fn is_indecomposable(x: &Rep, limits: &Limits) -> Result<bool> {
    if x.is_zero() {
        return Ok(false);
    }
    let basis = hom_basis(x, x)?;
    if basis.len() == 1 {
        return Ok(true);
    }
    let p = x.field().p();
    Limits::check(
        format!("idempotent search in an endomorphism ring of dimension {}", basis.len()),
        saturating_pow(p as u64, basis.len() as u64),
        limits.endomorphism_search,
    )?;
    let zero = crate::rep::RepMorphism::zero(x, x)?;
    let mut coeffs = vec![0u32; basis.len()];
    while increment(&mut coeffs, p) {
        let e = basis.iter().zip(&coeffs).try_fold(zero.clone(), |acc, (b, &c)| acc.add(&b.scale(c)))?;
        if !e.is_zero() && !e.is_identity() && e.compose(&e)? == e {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Interval multiplicities of a representation of an equioriented `A_n`,
/// from the ranks of the composite maps between vertices.
pub fn barcode_equioriented(x: &Rep) -> Result<BTreeMap<Interval, usize>> {
    let q = x.quiver();
    if !q.is_equioriented() {
        return Err(Error::UnsupportedShape("barcode needs an equioriented type-A quiver".into()));
    }
    let n = q.vertex_count();
    let field = x.field();
    // rank[i][j] for i <= j: rank of the composite along the segment i..=j
    let mut rank = vec![vec![0usize; n]; n];
    for i in 0..n {
        let mut acc = Matrix::identity(field, x.dim(i));
        rank[i][i] = x.dim(i);
        for j in i + 1..n {
            let a = q.arrow_between(j - 1, j).expect("type-A path");
            let m = x.map(a);
            acc = if q.arrows()[a].0 == j - 1 { m.mul(&acc) } else { acc.mul(m) };
            rank[i][j] = acc.rank();
        }
    }
    let r = |i: isize, j: usize| -> isize {
        if i < 0 || j >= n {
            0
        } else {
            rank[i as usize][j] as isize
        }
    };
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            let ii = i as isize;
            let m = r(ii, j) - r(ii - 1, j) - r(ii, j + 1) + r(ii - 1, j + 1);
            debug_assert!(m >= 0);
            if m > 0 {
                out.insert(Interval { lo: i, hi: j }, m as usize);
            }
        }
    }
    Ok(out)
}
