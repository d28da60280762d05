//! Representations of a finite acyclic quiver over `F_p`: objects, morphisms,
//! subobjects, quotients, direct sums and duality.

use std::cmp::Ordering;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::linalg::{enumerate_subspaces, image_basis, kernel_basis, FieldSpec, Matrix, MatrixJson, Subspace};
use crate::quiver::Quiver;

/// A representation: a vector space `F_p^{dims[v]}` per vertex and a matrix
/// of shape `dims[target] x dims[source]` per arrow.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rep {
    quiver: Arc<Quiver>,
    field: FieldSpec,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// Wire form: `{"dims":[...],"arrows":[Matrix,...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepJson {
    pub dims: Vec<usize>,
    pub arrows: Vec<MatrixJson>,
}

impl Rep {
    pub fn new(quiver: Arc<Quiver>, field: FieldSpec, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Rep> {
        if dims.len() != quiver.vertex_count() {
            return Err(Error::Dimension(format!(
                "{} vertex dimensions for {} vertices",
                dims.len(),
                quiver.vertex_count()
            )));
        }
        if maps.len() != quiver.arrow_count() {
            return Err(Error::Dimension(format!(
                "{} arrow maps for {} arrows",
                maps.len(),
                quiver.arrow_count()
            )));
        }
        for (a, (&(s, t), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.shape() != (dims[t], dims[s]) || m.field() != field {
                return Err(Error::Dimension(format!(
                    "arrow {a} ({s}->{t}) needs a {}x{} matrix over F_{}, got {}x{} over F_{}",
                    dims[t],
                    dims[s],
                    field.p(),
                    m.rows(),
                    m.cols(),
                    m.field().p()
                )));
            }
        }
        Ok(Rep { quiver, field, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>, field: FieldSpec) -> Rep {
        let dims = vec![0; quiver.vertex_count()];
        let maps = quiver.arrows().iter().map(|_| Matrix::zeros(field, 0, 0)).collect();
        Rep { quiver, field, dims, maps }
    }

    pub fn from_json(json: &RepJson, quiver: Arc<Quiver>, field: FieldSpec) -> Result<Rep> {
        let maps = json.arrows.iter().map(|m| Matrix::from_json(m, field)).collect::<Result<_>>()?;
        Rep::new(quiver, field, json.dims.clone(), maps)
    }

    pub fn to_json(&self) -> RepJson {
        RepJson { dims: self.dims.clone(), arrows: self.maps.iter().map(Matrix::to_json).collect() }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn same_category(&self, other: &Rep) -> bool {
        self.field == other.field && (Arc::ptr_eq(&self.quiver, &other.quiver) || self.quiver == other.quiver)
    }

    pub(crate) fn check_same_category(&self, other: &Rep) -> Result<()> {
        if self.same_category(other) {
            Ok(())
        } else {
            Err(Error::Mismatch(format!(
                "representations over F_{} and F_{} of different or unequal quivers",
                self.field.p(),
                other.field.p()
            )))
        }
    }

    /// Composite of the arrow maps along `path`, starting at vertex `from`.
    pub fn path_map(&self, from: usize, path: &[usize]) -> Matrix {
        let mut acc = Matrix::identity(self.field, self.dims[from]);
        let mut at = from;
        for &a in path {
            let (s, t) = self.quiver.arrows()[a];
            assert_eq!(s, at, "path is not composable");
            acc = self.maps[a].mul(&acc);
            at = t;
        }
        acc
    }

    pub fn identity(&self) -> RepMorphism {
        RepMorphism {
            source: self.clone(),
            target: self.clone(),
            components: self.dims.iter().map(|&d| Matrix::identity(self.field, d)).collect(),
        }
    }
}

/// A family of per-vertex matrices commuting with every arrow map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RepMorphism {
    source: Rep,
    target: Rep,
    components: Vec<Matrix>,
}

impl RepMorphism {
    pub fn new(source: Rep, target: Rep, components: Vec<Matrix>) -> Result<RepMorphism> {
        source.check_same_category(&target)?;
        if components.len() != source.dims.len() {
            return Err(Error::Dimension(format!(
                "{} components for {} vertices",
                components.len(),
                source.dims.len()
            )));
        }
        for (v, c) in components.iter().enumerate() {
            if c.shape() != (target.dims[v], source.dims[v]) || c.field() != source.field {
                return Err(Error::Dimension(format!(
                    "component at vertex {v} must be {}x{}, got {}x{}",
                    target.dims[v],
                    source.dims[v],
                    c.rows(),
                    c.cols()
                )));
            }
        }
        let m = RepMorphism { source, target, components };
        if let Some(a) = m.first_broken_square() {
            return Err(Error::NotMorphism(format!("square at arrow {a} does not commute")));
        }
        Ok(m)
    }

    /// Constructor for components that are correct by construction; checked in debug builds.
    pub(crate) fn new_unchecked(source: Rep, target: Rep, components: Vec<Matrix>) -> RepMorphism {
        let m = RepMorphism { source, target, components };
        debug_assert!(m.first_broken_square().is_none(), "intertwining violated");
        m
    }

    fn first_broken_square(&self) -> Option<usize> {
        self.source.quiver.arrows().iter().enumerate().find_map(|(a, &(s, t))| {
            let lhs = self.target.maps[a].mul(&self.components[s]);
            let rhs = self.components[t].mul(&self.source.maps[a]);
            (lhs != rhs).then_some(a)
        })
    }

    pub fn zero(source: &Rep, target: &Rep) -> Result<RepMorphism> {
        source.check_same_category(target)?;
        let components = (0..source.dims.len())
            .map(|v| Matrix::zeros(source.field, target.dims[v], source.dims[v]))
            .collect();
        Ok(RepMorphism { source: source.clone(), target: target.clone(), components })
    }

    pub fn source(&self) -> &Rep {
        &self.source
    }

    pub fn target(&self) -> &Rep {
        &self.target
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix {
        &self.components[v]
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &RepMorphism) -> Result<RepMorphism> {
        if inner.target != self.source {
            return Err(Error::Mismatch("composition of non-composable morphisms".into()));
        }
        let components = self.components.iter().zip(&inner.components).map(|(g, f)| g.mul(f)).collect();
        Ok(RepMorphism { source: inner.source.clone(), target: self.target.clone(), components })
    }

    pub fn add(&self, other: &RepMorphism) -> Result<RepMorphism> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::Mismatch("sum of morphisms with different endpoints".into()));
        }
        let components = self.components.iter().zip(&other.components).map(|(a, b)| a.add(b)).collect();
        Ok(RepMorphism { source: self.source.clone(), target: self.target.clone(), components })
    }

    pub fn scale(&self, s: u32) -> RepMorphism {
        RepMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            components: self.components.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.components.iter().all(Matrix::is_identity)
    }

    pub fn is_mono(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.cols())
    }

    pub fn is_epi(&self) -> bool {
        self.components.iter().all(|c| c.rank() == c.rows())
    }

    pub fn is_iso(&self) -> bool {
        self.is_mono() && self.is_epi()
    }

    pub fn kernel(&self) -> Subrep {
        let spaces = self.components.iter().map(kernel_basis).collect();
        Subrep::new_unchecked(self.source.clone(), spaces)
    }

    pub fn image(&self) -> Subrep {
        let spaces = self.components.iter().map(image_basis).collect();
        Subrep::new_unchecked(self.target.clone(), spaces)
    }

    /// Image of a subrepresentation of the source.
    pub fn push_forward(&self, w: &Subrep) -> Result<Subrep> {
        if w.ambient != self.source {
            return Err(Error::Mismatch("push-forward of a subobject of another object".into()));
        }
        let spaces =
            self.components.iter().zip(&w.spaces).map(|(c, s)| image_basis(&c.mul(&s.basis_columns()))).collect();
        Ok(Subrep::new_unchecked(self.target.clone(), spaces))
    }

    /// Preimage of a subrepresentation of the target.
    pub fn pull_back(&self, u: &Subrep) -> Result<Subrep> {
        if u.ambient != self.target {
            return Err(Error::Mismatch("pull-back of a subobject of another object".into()));
        }
        let spaces = self
            .components
            .iter()
            .zip(&u.spaces)
            .map(|(c, s)| kernel_basis(&s.quotient_projection().mul(c)))
            .collect();
        Ok(Subrep::new_unchecked(self.source.clone(), spaces))
    }
}

/// An arrow-invariant choice of subspace at every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subrep {
    ambient: Rep,
    spaces: Vec<Subspace>,
}

impl Subrep {
    pub fn new(ambient: Rep, spaces: Vec<Subspace>) -> Result<Subrep> {
        if spaces.len() != ambient.dims.len() {
            return Err(Error::InvalidSubrep(format!(
                "{} subspaces for {} vertices",
                spaces.len(),
                ambient.dims.len()
            )));
        }
        for (v, s) in spaces.iter().enumerate() {
            if s.ambient_dim() != ambient.dims[v] || s.field() != ambient.field {
                return Err(Error::InvalidSubrep(format!("subspace at vertex {v} lives in the wrong space")));
            }
        }
        let w = Subrep { ambient, spaces };
        if let Some(a) = w.first_escaping_arrow() {
            return Err(Error::InvalidSubrep(format!("not invariant under arrow {a}")));
        }
        Ok(w)
    }

    pub(crate) fn new_unchecked(ambient: Rep, spaces: Vec<Subspace>) -> Subrep {
        let w = Subrep { ambient, spaces };
        debug_assert!(w.first_escaping_arrow().is_none(), "subrepresentation not invariant");
        w
    }

    fn first_escaping_arrow(&self) -> Option<usize> {
        self.ambient.quiver.arrows().iter().enumerate().find_map(|(a, &(s, t))| {
            let moved = self.ambient.maps[a].mul(&self.spaces[s].basis_columns());
            let stays = (0..moved.cols()).all(|c| self.spaces[t].contains_vector(&moved.column(c)));
            (!stays).then_some(a)
        })
    }

    pub fn zero(ambient: &Rep) -> Subrep {
        let spaces = ambient.dims.iter().map(|&d| Subspace::zero(ambient.field, d)).collect();
        Subrep { ambient: ambient.clone(), spaces }
    }

    pub fn full(ambient: &Rep) -> Subrep {
        let spaces = ambient.dims.iter().map(|&d| Subspace::full(ambient.field, d)).collect();
        Subrep { ambient: ambient.clone(), spaces }
    }

    pub fn ambient(&self) -> &Rep {
        &self.ambient
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    pub fn space(&self, v: usize) -> &Subspace {
        &self.spaces[v]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.spaces.iter().all(Subspace::is_zero)
    }

    pub fn is_full(&self) -> bool {
        self.spaces.iter().all(Subspace::is_full)
    }

    fn check_same_ambient(&self, other: &Subrep) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::Mismatch("subobjects of different objects".into()));
        }
        Ok(())
    }

    /// True iff `other ≤ self` vertexwise.
    pub fn contains(&self, other: &Subrep) -> Result<bool> {
        self.check_same_ambient(other)?;
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            if !a.contains(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subrep) -> Result<Subrep> {
        self.check_same_ambient(other)?;
        let spaces = self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.sum(b)).collect::<Result<_>>()?;
        Ok(Subrep::new_unchecked(self.ambient.clone(), spaces))
    }

    pub fn intersect(&self, other: &Subrep) -> Result<Subrep> {
        self.check_same_ambient(other)?;
        let spaces = self.spaces.iter().zip(&other.spaces).map(|(a, b)| a.intersect(b)).collect::<Result<_>>()?;
        Ok(Subrep::new_unchecked(self.ambient.clone(), spaces))
    }

    /// Vertexwise annihilator, a subrepresentation of [`dual_rep`] of the ambient.
    /// Corresponds to the quotient `ambient / self` under duality.
    pub fn annihilator(&self) -> Subrep {
        let spaces = self.spaces.iter().map(Subspace::annihilator).collect();
        Subrep::new_unchecked(dual_rep(&self.ambient), spaces)
    }
}

impl PartialOrd for Subrep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic in the per-vertex canonical bases.
impl Ord for Subrep {
    fn cmp(&self, other: &Self) -> Ordering {
        self.spaces.cmp(&other.spaces)
    }
}

/// A basis of `Hom(X, Y)`: the null space of the linear system of all
/// intertwining constraints, in the canonical order of that null space.
pub fn hom_basis(x: &Rep, y: &Rep) -> Result<Vec<RepMorphism>> {
    x.check_same_category(y)?;
    let f = x.field;
    let n = x.dims.len();
    let mut offset = vec![0usize; n + 1];
    for v in 0..n {
        offset[v + 1] = offset[v] + y.dims[v] * x.dims[v];
    }
    let unknowns = offset[n];
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (a, &(s, t)) in x.quiver.arrows().iter().enumerate() {
        let (xa, ya) = (&x.maps[a], &y.maps[a]);
        // (Y_a C_s - C_t X_a)[i][j] = 0
        for i in 0..y.dims[t] {
            for j in 0..x.dims[s] {
                let mut row = vec![0u32; unknowns];
                for k in 0..y.dims[s] {
                    let idx = offset[s] + k * x.dims[s] + j;
                    row[idx] = f.add(row[idx], ya.get(i, k));
                }
                for k in 0..x.dims[t] {
                    let idx = offset[t] + i * x.dims[t] + k;
                    row[idx] = f.sub(row[idx], xa.get(k, j));
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::new(f, rows.len(), unknowns, rows.concat())?;
    let kernel = kernel_basis(&system);
    Ok((0..kernel.dim())
        .map(|r| {
            let v = kernel.basis().row(r);
            let components = (0..n)
                .map(|u| {
                    Matrix::new(f, y.dims[u], x.dims[u], v[offset[u]..offset[u + 1]].to_vec())
                        .expect("slice has the component's size")
                })
                .collect();
            RepMorphism::new_unchecked(x.clone(), y.clone(), components)
        })
        .collect())
}

/// True iff some linear combination of a basis of `Hom(x, y)` is invertible.
/// Searches `p^dim Hom` combinations under the endomorphism-search bound.
pub fn are_isomorphic(x: &Rep, y: &Rep, limits: &Limits) -> Result<bool> {
    x.check_same_category(y)?;
    if x.dims != y.dims {
        return Ok(false);
    }
    let basis = hom_basis(x, y)?;
    if basis.iter().any(RepMorphism::is_iso) {
        return Ok(true);
    }
    let p = x.field.p();
    Limits::check(
        "isomorphism search",
        crate::limits::saturating_pow(p as u64, basis.len() as u64),
        limits.endomorphism_search,
    )?;
    let zero = RepMorphism::zero(x, y)?;
    let mut coeffs = vec![0u32; basis.len()];
    while crate::linalg::increment(&mut coeffs, p) {
        let f = basis.iter().zip(&coeffs).try_fold(zero.clone(), |acc, (g, &c)| acc.add(&g.scale(c)))?;
        if f.is_iso() {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn kernel_subrep(f: &RepMorphism) -> Subrep {
    f.kernel()
}

pub fn image_subrep(f: &RepMorphism) -> Subrep {
    f.image()
}

/// Realizes a subrepresentation as an object with its inclusion. Arrow maps
/// are written in the canonical bases of the vertex subspaces.
pub fn sub_to_rep(w: &Subrep) -> (Rep, RepMorphism) {
    let x = &w.ambient;
    let f = x.field;
    let dims = w.dims();
    let maps = x
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| {
            let mut m = Matrix::zeros(f, dims[t], dims[s]);
            for i in 0..dims[s] {
                let image = x.maps[a].apply(w.spaces[s].basis().row(i));
                let coords = w.spaces[t].coordinates(&image).expect("subrepresentation is invariant");
                for (r, c) in coords.into_iter().enumerate() {
                    m.set(r, i, c);
                }
            }
            m
        })
        .collect();
    let sub = Rep { quiver: x.quiver.clone(), field: f, dims, maps };
    let components = w.spaces.iter().map(Subspace::basis_columns).collect();
    let inclusion = RepMorphism::new_unchecked(sub.clone(), x.clone(), components);
    (sub, inclusion)
}

/// Quotient `X / w`; each vertex quotient uses the non-pivot coordinates of
/// the canonical basis of `w` as its basis.
pub fn quotient_rep(x: &Rep, w: &Subrep) -> Result<(Rep, RepMorphism)> {
    if &w.ambient != x {
        return Err(Error::InvalidSubrep("subrepresentation of a different object".into()));
    }
    if let Some(a) = w.first_escaping_arrow() {
        return Err(Error::InvalidSubrep(format!("not invariant under arrow {a}")));
    }
    let f = x.field;
    let projections: Vec<Matrix> = w.spaces.iter().map(Subspace::quotient_projection).collect();
    let sections: Vec<Matrix> = w.spaces.iter().map(Subspace::quotient_section).collect();
    let dims = projections.iter().map(Matrix::rows).collect();
    let maps = x
        .quiver
        .arrows()
        .iter()
        .enumerate()
        .map(|(a, &(s, t))| projections[t].mul(&x.maps[a]).mul(&sections[s]))
        .collect();
    let q = Rep { quiver: x.quiver.clone(), field: f, dims, maps };
    let projection = RepMorphism::new_unchecked(x.clone(), q.clone(), projections);
    Ok((q, projection))
}

/// A direct sum with its biproduct structure maps.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub sum: Rep,
    pub inclusions: Vec<RepMorphism>,
    pub projections: Vec<RepMorphism>,
}

pub fn direct_sum(quiver: &Arc<Quiver>, field: FieldSpec, parts: &[Rep]) -> Result<DirectSum> {
    let probe = Rep::zero(quiver.clone(), field);
    for p in parts {
        probe.check_same_category(p)?;
    }
    let n = quiver.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..quiver.arrow_count())
        .map(|a| {
            let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.maps[a]).collect();
            Matrix::block_diagonal(field, &blocks)
        })
        .collect();
    let sum = Rep { quiver: quiver.clone(), field, dims, maps };
    let mut inclusions = Vec::with_capacity(parts.len());
    let mut projections = Vec::with_capacity(parts.len());
    let mut offsets = vec![0usize; n];
    for p in parts {
        let mut inc = Vec::with_capacity(n);
        let mut proj = Vec::with_capacity(n);
        for v in 0..n {
            let mut i = Matrix::zeros(field, sum.dims[v], p.dims[v]);
            i.paste(offsets[v], 0, &Matrix::identity(field, p.dims[v]));
            proj.push(i.transpose());
            inc.push(i);
            offsets[v] += p.dims[v];
        }
        inclusions.push(RepMorphism::new_unchecked(p.clone(), sum.clone(), inc));
        projections.push(RepMorphism::new_unchecked(sum.clone(), p.clone(), proj));
    }
    Ok(DirectSum { sum, inclusions, projections })
}

/// All subrepresentations of `x`, canonical and sorted.
pub fn enumerate_subreps(x: &Rep, limits: &Limits) -> Result<Vec<Subrep>> {
    let per_vertex: Vec<Vec<Subspace>> =
        x.dims.iter().map(|&d| enumerate_subspaces(d, x.field, limits)).collect::<Result<_>>()?;
    let product = per_vertex.iter().fold(1u128, |acc, v| acc.saturating_mul(v.len() as u128));
    Limits::check("subrepresentation candidates", product, limits.subrep_product)?;
    let mut out = Vec::new();
    let mut chosen: Vec<Subspace> = Vec::with_capacity(x.dims.len());
    choose_invariant(x, &per_vertex, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn choose_invariant(x: &Rep, options: &[Vec<Subspace>], chosen: &mut Vec<Subspace>, out: &mut Vec<Subrep>) {
    let v = chosen.len();
    if v == options.len() {
        out.push(Subrep { ambient: x.clone(), spaces: chosen.clone() });
        return;
    }
    for cand in &options[v] {
        chosen.push(cand.clone());
        // only arrows with both endpoints already fixed
        let ok = x.quiver.arrows().iter().enumerate().all(|(a, &(s, t))| {
            if s > v || t > v {
                return true;
            }
            let moved = x.maps[a].mul(&chosen[s].basis_columns());
            (0..moved.cols()).all(|c| chosen[t].contains_vector(&moved.column(c)))
        });
        if ok {
            choose_invariant(x, options, chosen, out);
        }
        chosen.pop();
    }
}

/// Vertexwise dual over the opposite quiver: same dimensions, transposed arrow maps.
pub fn dual_rep(x: &Rep) -> Rep {
    Rep {
        quiver: Arc::new(x.quiver.opposite()),
        field: x.field,
        dims: x.dims.clone(),
        maps: x.maps.iter().map(Matrix::transpose).collect(),
    }
}

/// Dual of `f: X -> Y`, a morphism `dual(Y) -> dual(X)`.
pub fn dual_morphism(f: &RepMorphism) -> RepMorphism {
    RepMorphism::new_unchecked(
        dual_rep(&f.target),
        dual_rep(&f.source),
        f.components.iter().map(Matrix::transpose).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    fn a2() -> Arc<Quiver> {
        Arc::new(Quiver::linear(2))
    }

    /// Interval module on `0 -> 1` supported on `lo..=hi`.
    fn interval(q: &Arc<Quiver>, f: FieldSpec, lo: usize, hi: usize) -> Rep {
        let dims: Vec<usize> = (0..q.vertex_count()).map(|v| (lo <= v && v <= hi) as usize).collect();
        let maps = q.arrows().iter().map(|&(s, t)| {
            let mut m = Matrix::zeros(f, dims[t], dims[s]);
            if dims[s] == 1 && dims[t] == 1 {
                m.set(0, 0, 1);
            }
            m
        });
        Rep::new(q.clone(), f, dims.clone(), maps.collect()).unwrap()
    }

    /// Brute-force count of intertwiners by scanning every component tuple.
    fn count_morphisms(x: &Rep, y: &Rep) -> usize {
        let f = x.field();
        let sizes: Vec<usize> = (0..x.dims().len()).map(|v| x.dim(v) * y.dim(v)).collect();
        let total: usize = sizes.iter().sum();
        let mut digits = vec![0u32; total];
        let mut count = 0;
        loop {
            let mut off = 0;
            let comps: Vec<Matrix> = (0..sizes.len())
                .map(|v| {
                    let m = Matrix::new(f, y.dim(v), x.dim(v), digits[off..off + sizes[v]].to_vec()).unwrap();
                    off += sizes[v];
                    m
                })
                .collect();
            if RepMorphism::new(x.clone(), y.clone(), comps).is_ok() {
                count += 1;
            }
            if !crate::linalg::increment(&mut digits, f.p()) {
                break;
            }
        }
        count
    }

    #[test]
    fn hom_dimensions_match_brute_force() {
        let q = a2();
        let (s_top, s_bot, p) = (interval(&q, f2(), 0, 0), interval(&q, f2(), 1, 1), interval(&q, f2(), 0, 1));
        assert_eq!(hom_basis(&s_top, &s_top).unwrap().len(), 1);
        // P -> top simple: X_0 free, X_1 = 0
        assert_eq!(hom_basis(&p, &s_top).unwrap().len(), 1);
        assert_eq!(count_morphisms(&p, &s_top), 2);
        assert!(hom_basis(&s_top, &s_bot).unwrap().is_empty());
        assert_eq!(count_morphisms(&s_top, &s_bot), 1);
        for x in [&s_top, &s_bot, &p] {
            for y in [&s_top, &s_bot, &p] {
                let d = hom_basis(x, y).unwrap().len();
                assert_eq!(2usize.pow(d as u32), count_morphisms(x, y));
            }
        }
    }

    #[test]
    fn identity_of_simple_spans_end() {
        let q = a2();
        let s = interval(&q, f2(), 1, 1);
        let basis = hom_basis(&s, &s).unwrap();
        assert_eq!(basis.len(), 1);
        assert!(basis[0].is_identity());
    }

    #[test]
    fn kernel_and_image_examples() {
        let q = a2();
        let p = interval(&q, f2(), 0, 1);
        assert!(kernel_subrep(&p.identity()).is_zero());
        let zero = RepMorphism::zero(&p, &p).unwrap();
        assert!(image_subrep(&zero).is_zero());
        let top = interval(&q, f2(), 0, 0);
        let g = &hom_basis(&p, &top).unwrap()[0];
        let im = image_subrep(g);
        assert!(im.is_full());
        assert_eq!(kernel_subrep(g).dims(), vec![0, 1]);
    }

    #[test]
    fn sub_and_quotient_examples() {
        let q = a2();
        let f = f2();
        let p = interval(&q, f, 0, 1);
        let (whole, inc) = sub_to_rep(&Subrep::full(&p));
        assert_eq!(whole, p);
        assert!(inc.is_iso());
        let (z, _) = sub_to_rep(&Subrep::zero(&p));
        assert!(z.is_zero());
        let radical = Subrep::new(p.clone(), vec![Subspace::zero(f, 1), Subspace::full(f, 1)]).unwrap();
        let (r, inc) = sub_to_rep(&radical);
        assert_eq!(r, interval(&q, f, 1, 1));
        assert!(inc.is_mono());
        let (quot, proj) = quotient_rep(&p, &radical).unwrap();
        assert_eq!(quot, interval(&q, f, 0, 0));
        assert!(proj.is_epi());
        assert_eq!(proj.kernel(), radical);
        let (same, _) = quotient_rep(&p, &Subrep::zero(&p)).unwrap();
        assert_eq!(same, p);
        let (none, _) = quotient_rep(&p, &Subrep::full(&p)).unwrap();
        assert!(none.is_zero());
    }

    #[test]
    fn non_invariant_subspaces_rejected() {
        let q = a2();
        let f = f2();
        let p = interval(&q, f, 0, 1);
        let bad = Subrep::new(p.clone(), vec![Subspace::full(f, 1), Subspace::zero(f, 1)]);
        assert!(matches!(bad, Err(Error::InvalidSubrep(_))));
    }

    #[test]
    fn direct_sum_examples() {
        let q = a2();
        let f = f2();
        let empty = direct_sum(&q, f, &[]).unwrap();
        assert!(empty.sum.is_zero());
        let p = interval(&q, f, 0, 1);
        let single = direct_sum(&q, f, &[p.clone()]).unwrap();
        assert_eq!(single.sum, p);
        assert!(single.inclusions[0].is_identity());
        let ds = direct_sum(&q, f, &[interval(&q, f, 0, 0), interval(&q, f, 1, 1)]).unwrap();
        assert_eq!(ds.sum.dims(), &[1, 1]);
        assert!(ds.sum.map(0).is_zero());
        for (j, pj) in ds.projections.iter().enumerate() {
            for (k, ik) in ds.inclusions.iter().enumerate() {
                let c = pj.compose(ik).unwrap();
                assert_eq!(c.is_identity(), j == k);
                assert_eq!(c.is_zero(), j != k);
            }
        }
    }

    #[test]
    fn subrep_enumeration_examples() {
        let q = a2();
        let f = f2();
        let l = Limits::default();
        assert_eq!(enumerate_subreps(&interval(&q, f, 1, 1), &l).unwrap().len(), 2);
        let subs = enumerate_subreps(&interval(&q, f, 0, 1), &l).unwrap();
        let dims: Vec<Vec<usize>> = subs.iter().map(Subrep::dims).collect();
        assert_eq!(dims, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
        assert_eq!(enumerate_subreps(&Rep::zero(q, f), &l).unwrap().len(), 1);
    }

    #[test]
    fn duality_examples() {
        let q = a2();
        let f = f2();
        assert!(dual_rep(&Rep::zero(q.clone(), f)).is_zero());
        let p = interval(&q, f, 0, 1);
        let dp = dual_rep(&p);
        assert_eq!(dp.quiver().arrows(), &[(1, 0)]);
        assert!(dp.map(0).is_identity());
        assert_eq!(dual_rep(&dp), p);
        let radical = Subrep::new(p.clone(), vec![Subspace::zero(f, 1), Subspace::full(f, 1)]).unwrap();
        let (_, inc) = sub_to_rep(&radical);
        let d = dual_morphism(&inc);
        assert!(d.is_epi());
        assert_eq!(d.source(), &dp);
        assert_eq!(d.target(), &dual_rep(&interval(&q, f, 1, 1)));
    }

    #[test]
    fn morphism_validation() {
        let q = a2();
        let f = f2();
        let p = interval(&q, f, 0, 1);
        let top = interval(&q, f, 0, 0);
        // the inclusion of the top simple into P is not a morphism
        let bad = RepMorphism::new(top.clone(), p.clone(), vec![Matrix::identity(f, 1), Matrix::zeros(f, 1, 0)]);
        assert!(matches!(bad, Err(Error::NotMorphism(_))));
        let other_field = interval(&q, FieldSpec::new(3).unwrap(), 0, 0);
        assert!(hom_basis(&top, &other_field).is_err());
    }
}
