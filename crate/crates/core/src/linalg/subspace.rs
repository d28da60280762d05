use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{FieldSpec, Matrix, MatrixJson};
use crate::error::{Error, Result};
use crate::limits::{saturating_pow, Limits};

/// A subspace of `F_p^n`, stored by its reduced row-echelon basis.
///
/// The RREF basis is the unique representative of the subspace, so two
/// values compare equal exactly when they describe the same subspace.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceJson {
    pub ambient_dim: usize,
    pub basis: MatrixJson,
}

impl Subspace {
    /// Span of the rows of `rows`.
    pub fn span(rows: &Matrix) -> Subspace {
        Subspace { basis: rows.rref().0 }
    }

    /// Span of the columns of `cols`.
    pub fn column_span(cols: &Matrix) -> Subspace {
        Subspace::span(&cols.transpose())
    }

    pub fn zero(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace { basis: Matrix::zeros(field, 0, ambient_dim) }
    }

    pub fn full(field: FieldSpec, ambient_dim: usize) -> Subspace {
        Subspace { basis: Matrix::identity(field, ambient_dim) }
    }

    pub fn from_json(json: &SubspaceJson, field: FieldSpec) -> Result<Subspace> {
        let m = Matrix::from_json(&json.basis, field)?;
        if m.cols() != json.ambient_dim {
            return Err(Error::Dimension(format!(
                "basis has {} columns but ambient_dim is {}",
                m.cols(),
                json.ambient_dim
            )));
        }
        Ok(Subspace::span(&m))
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson { ambient_dim: self.ambient_dim(), basis: self.basis.to_json() }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim()
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Canonical basis as columns (`ambient_dim x dim`): the matrix of the inclusion.
    pub fn basis_columns(&self) -> Matrix {
        self.basis.transpose()
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| self.basis.row(r).iter().position(|&x| x != 0).expect("RREF rows are nonzero"))
            .collect()
    }

    /// Coordinates that are not pivots; they index a complement of the subspace.
    pub fn free_columns(&self) -> Vec<usize> {
        let pivots = self.pivots();
        (0..self.ambient_dim()).filter(|c| !pivots.contains(c)).collect()
    }

    /// Remainder of `v` after clearing every pivot coordinate with basis rows.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.ambient_dim(), "vector length mismatch");
        let f = self.field();
        let mut out = v.to_vec();
        for (r, c) in self.pivots().into_iter().enumerate() {
            let factor = out[c];
            if factor == 0 {
                continue;
            }
            for (k, &b) in self.basis.row(r).iter().enumerate() {
                out[k] = f.sub(out[k], f.mul(factor, b));
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots().into_iter().map(|c| v[c]).collect())
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim() != other.ambient_dim() || self.field() != other.field() {
            return Err(Error::Dimension(format!(
                "subspaces of F_{}^{} and F_{}^{}",
                self.field().p(),
                self.ambient_dim(),
                other.field().p(),
                other.ambient_dim()
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let stacked = Matrix::vstack(self.field(), self.ambient_dim(), &[&self.basis, &other.basis]);
        Ok(Subspace::span(&stacked))
    }

    /// Intersection via the kernel of `[A^T | -B^T]`: each kernel vector `(x, y)`
    /// gives the common vector `x A = y B`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let f = self.field();
        let n = self.ambient_dim();
        let a = self.dim();
        let system = Matrix::hstack(
            f,
            n,
            &[&self.basis_columns(), &other.basis_columns().scale(f.neg(1))],
        );
        let kernel = kernel_basis(&system);
        let coeffs = kernel.basis().select_cols(&(0..a).collect::<Vec<_>>());
        Ok(Subspace::span(&coeffs.mul(&self.basis)))
    }

    /// True iff `other` is a subspace of `self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_same_ambient(other)?;
        Ok((0..other.dim()).all(|r| self.contains_vector(other.basis.row(r))))
    }

    /// Annihilator in the dual space, in dual-basis coordinates.
    pub fn annihilator(&self) -> Subspace {
        kernel_basis(&self.basis)
    }

    /// Projection `F^n -> F^n / self` in the coordinates given by [`free_columns`](Self::free_columns).
    pub fn quotient_projection(&self) -> Matrix {
        let free = self.free_columns();
        let n = self.ambient_dim();
        let mut proj = Matrix::zeros(self.field(), free.len(), n);
        for j in 0..n {
            let mut e = vec![0; n];
            e[j] = 1;
            let red = self.reduce(&e);
            for (i, &c) in free.iter().enumerate() {
                proj.set(i, j, red[c]);
            }
        }
        proj
    }

    /// A section of [`quotient_projection`](Self::quotient_projection): unit vectors on the free columns.
    pub fn quotient_section(&self) -> Matrix {
        let free = self.free_columns();
        let mut sec = Matrix::zeros(self.field(), self.ambient_dim(), free.len());
        for (i, &c) in free.iter().enumerate() {
            sec.set(c, i, 1);
        }
        sec
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by `(ambient_dim, dim, basis entries)`; used only for deterministic listings.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient_dim()
            .cmp(&other.ambient_dim())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u32]> = (0..self.dim()).map(|r| self.basis.row(r)).collect();
        write!(f, "span{rows:?} < F_{}^{}", self.field().p(), self.ambient_dim())
    }
}

/// Null space `{v : m v = 0}` as a subspace of `F^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let f = m.field();
    let (r, pivots) = m.rref();
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Matrix::zeros(f, free.len(), n);
    for (i, &fc) in free.iter().enumerate() {
        basis.set(i, fc, 1);
        for (row, &pc) in pivots.iter().enumerate() {
            basis.set(i, pc, f.neg(r.get(row, fc)));
        }
    }
    Subspace::span(&basis)
}

/// Column space of `m` as a subspace of `F^rows`.
pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::column_span(m)
}

pub fn subspace_sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn subspace_intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn subspace_contains(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.contains(b)
}

pub fn annihilator(a: &Subspace) -> Subspace {
    a.annihilator()
}

/// Every subspace of `F_p^n`, each once, sorted by `(dim, basis entries)`.
///
/// Generated directly as RREF matrices: choose the pivot columns, then fill
/// every non-pivot entry to the right of each pivot freely.
pub fn enumerate_subspaces(ambient_dim: usize, field: FieldSpec, limits: &Limits) -> Result<Vec<Subspace>> {
    let n = ambient_dim;
    Limits::check(
        format!("subspaces of F_{}^{}", field.p(), n),
        saturating_pow(field.p() as u64, (n * n) as u64),
        limits.subspace_work,
    )?;
    let mut out = Vec::new();
    for k in 0..=n {
        for pivots in combinations(n, k) {
            let free_slots: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| ((pc + 1)..n).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let mut template = Matrix::zeros(field, k, n);
            for (r, &pc) in pivots.iter().enumerate() {
                template.set(r, pc, 1);
            }
            let mut digits = vec![0u32; free_slots.len()];
            loop {
                let mut m = template.clone();
                for (&(r, c), &d) in free_slots.iter().zip(&digits) {
                    m.set(r, c, d);
                }
                out.push(Subspace { basis: m });
                if !increment(&mut digits, field.p()) {
                    break;
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Odometer step over `0..base` digits; false once it wraps around.
pub(crate) fn increment(digits: &mut [u32], base: u32) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    fn span(p: u32, rows: &[&[i64]]) -> Subspace {
        Subspace::span(&Matrix::from_rows(f(p), rows).unwrap())
    }

    /// All vectors of F_p^n, used as a brute-force oracle.
    fn all_vectors(p: u32, n: usize) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        let mut d = vec![0u32; n];
        loop {
            out.push(d.clone());
            if !increment(&mut d, p) {
                break;
            }
        }
        out
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&Matrix::identity(f(2), 2)).is_zero());
        assert!(kernel_basis(&Matrix::zeros(f(2), 2, 2)).is_full());
        let m = Matrix::from_rows(f(2), &[&[1, 1]]).unwrap();
        let k = kernel_basis(&m);
        // oracle: exhaustive scan of F_2^2
        let solutions: Vec<Vec<u32>> =
            all_vectors(2, 2).into_iter().filter(|v| m.apply(v).iter().all(|&x| x == 0)).collect();
        assert_eq!(solutions, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(k, span(2, &[&[1, 1]]));
    }

    #[test]
    fn image_examples() {
        assert!(image_basis(&Matrix::identity(f(3), 3)).is_full());
        assert!(image_basis(&Matrix::zeros(f(3), 3, 2)).is_zero());
        let col = Matrix::from_rows(f(2), &[&[1], &[1]]).unwrap();
        assert_eq!(image_basis(&col), span(2, &[&[1, 1]]));
    }

    #[test]
    fn sum_intersect_contains() {
        let e1 = span(2, &[&[1, 0]]);
        let e2 = span(2, &[&[0, 1]]);
        assert!(e1.sum(&e2).unwrap().is_full());
        assert!(e1.intersect(&e2).unwrap().is_zero());
        let diag = span(2, &[&[1, 1]]);
        let full = span(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(diag.intersect(&full).unwrap(), diag);
        assert!(full.contains(&diag).unwrap());
        assert!(!diag.contains(&e1).unwrap());
        assert!(matches!(e1.sum(&Subspace::zero(f(2), 3)), Err(Error::Dimension(_))));
        assert!(e1.contains(&Subspace::zero(f(3), 2)).is_err());
    }

    #[test]
    fn annihilator_examples() {
        assert!(Subspace::zero(f(5), 2).annihilator().is_full());
        assert!(Subspace::full(f(5), 2).annihilator().is_zero());
        let w = span(2, &[&[1, 1]]);
        // oracle: functionals phi with phi(1,1) = 0
        let killers: Vec<Vec<u32>> =
            all_vectors(2, 2).into_iter().filter(|phi| (phi[0] + phi[1]) % 2 == 0).collect();
        assert_eq!(killers, vec![vec![0, 0], vec![1, 1]]);
        assert_eq!(w.annihilator(), span(2, &[&[1, 1]]));
    }

    #[test]
    fn enumeration_counts() {
        let l = Limits::default();
        let one = enumerate_subspaces(1, f(2), &l).unwrap();
        assert_eq!(one, vec![Subspace::zero(f(2), 1), Subspace::full(f(2), 1)]);
        assert_eq!(enumerate_subspaces(2, f(2), &l).unwrap().len(), 5);
        assert_eq!(enumerate_subspaces(2, f(3), &l).unwrap().len(), 6);
        assert_eq!(enumerate_subspaces(0, f(3), &l).unwrap().len(), 1);
    }

    /// Gaussian binomial coefficient, computed from its product formula.
    fn gaussian_binomial(n: u32, k: u32, q: u128) -> u128 {
        let mut num = 1u128;
        let mut den = 1u128;
        for i in 0..k {
            num *= q.pow(n - i) - 1;
            den *= q.pow(i + 1) - 1;
        }
        num / den
    }

    #[test]
    fn enumeration_matches_gaussian_binomials() {
        let l = Limits::default();
        for (p, n) in [(2u32, 3usize), (2, 4), (3, 3), (5, 2)] {
            let subs = enumerate_subspaces(n, f(p), &l).unwrap();
            for k in 0..=n {
                let count = subs.iter().filter(|s| s.dim() == k).count() as u128;
                assert_eq!(count, gaussian_binomial(n as u32, k as u32, p as u128), "p={p} n={n} k={k}");
            }
            let mut dedup = subs.clone();
            dedup.dedup();
            assert_eq!(dedup.len(), subs.len());
        }
    }

    #[test]
    fn enumeration_capacity_guard() {
        let l = Limits::default();
        assert!(enumerate_subspaces(7, f(2), &l).unwrap_err().is_capacity());
        assert!(enumerate_subspaces(4, f(7), &l).unwrap_err().is_capacity());
        let tight = Limits { subspace_work: 1 << 9, ..l };
        assert!(enumerate_subspaces(3, f(2), &tight).is_ok());
        assert!(enumerate_subspaces(4, f(2), &tight).unwrap_err().is_capacity());
    }

    #[test]
    fn double_annihilator_on_small_spaces() {
        let l = Limits::default();
        for p in [2, 3] {
            for n in 0..=3 {
                for s in enumerate_subspaces(n, f(p), &l).unwrap() {
                    assert_eq!(s.annihilator().annihilator(), s);
                    assert_eq!(s.annihilator().dim(), n - s.dim());
                }
            }
        }
    }

    #[test]
    fn quotient_projection_kills_subspace() {
        let w = span(3, &[&[1, 2, 0]]);
        let proj = w.quotient_projection();
        assert_eq!(proj.shape(), (2, 3));
        assert!(proj.mul(&w.basis_columns()).is_zero());
        assert!(proj.mul(&w.quotient_section()).is_identity());
    }

    #[test]
    fn subspace_json() {
        let w = span(3, &[&[1, 2, 0]]);
        let j = w.to_json();
        assert_eq!(Subspace::from_json(&j, f(3)).unwrap(), w);
    }
}
