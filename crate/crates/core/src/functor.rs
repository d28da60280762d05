//! Additive functors between representation categories: restriction and left
//! Kan extension along a full subquiver, relabelling along a quiver
//! isomorphism, composites, and opposites through vertexwise duality.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::quiver::Quiver;
use crate::rep::{dual_morphism, dual_rep, Rep, RepMorphism};

#[derive(Debug, Clone)]
pub enum Functor {
    Restriction(Arc<SubquiverInclusion>),
    Lan(Arc<SubquiverInclusion>),
    Relabel(Arc<Relabelling>),
    /// Apply the first functor, then the second.
    Composite(Box<Functor>, Box<Functor>),
    /// `X ↦ dual(F(dual X))` between the opposite categories.
    Opposite(Box<Functor>),
}

/// The full subquiver of `big` on `subset`, renumbered `0..k` as `small`.
#[derive(Debug)]
pub struct SubquiverInclusion {
    big: Arc<Quiver>,
    small: Arc<Quiver>,
    subset: Vec<usize>,
    /// Big-quiver index of each small arrow.
    origin: Vec<usize>,
    /// Per big vertex `q`, the objects `(i, path S[i] -> q)` of the comma category.
    comma: Vec<Vec<(usize, Vec<usize>)>>,
}

impl SubquiverInclusion {
    /// The subset must induce a type-A quiver.
    pub fn new(big: Quiver, subset: &[usize]) -> Result<Arc<SubquiverInclusion>> {
        let (small, origin) = big.induced_subquiver(subset)?;
        small.check_type_a().map_err(|e| Error::UnsupportedShape(format!("subset {subset:?}: {e}")))?;
        let comma = (0..big.vertex_count())
            .map(|q| {
                subset
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &s)| big.paths(s, q).into_iter().map(move |p| (i, p)))
                    .collect()
            })
            .collect();
        Ok(Arc::new(SubquiverInclusion {
            big: Arc::new(big),
            small: Arc::new(small),
            subset: subset.to_vec(),
            origin,
            comma,
        }))
    }

    pub fn big(&self) -> &Arc<Quiver> {
        &self.big
    }

    pub fn small(&self) -> &Arc<Quiver> {
        &self.small
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    fn restrict(&self, b: &Rep) -> Result<Rep> {
        check_over(b, &self.big)?;
        let dims = self.subset.iter().map(|&v| b.dim(v)).collect();
        let maps = self.origin.iter().map(|&a| b.map(a).clone()).collect();
        Rep::new(self.small.clone(), b.field(), dims, maps)
    }

    fn restrict_morphism(&self, f: &RepMorphism) -> Result<RepMorphism> {
        let source = self.restrict(f.source())?;
        let target = self.restrict(f.target())?;
        let comps = self.subset.iter().map(|&v| f.component(v).clone()).collect();
        RepMorphism::new(source, target, comps)
    }

    /// Colimit presentation of `Lan V` at every big vertex.
    fn present(&self, v: &Rep) -> Result<Vec<Presentation>> {
        check_over(v, &self.small)?;
        let f = v.field();
        Ok(self
            .comma
            .iter()
            .map(|objects| {
                let mut offsets = Vec::with_capacity(objects.len() + 1);
                offsets.push(0);
                for (i, _) in objects {
                    offsets.push(offsets.last().unwrap() + v.dim(*i));
                }
                let total = *offsets.last().unwrap();
                let mut relations: Vec<Vec<u32>> = Vec::new();
                for (idx, (i, p)) in objects.iter().enumerate() {
                    for (b, &(s, t)) in self.small.arrows().iter().enumerate() {
                        if s != *i || p.first() != Some(&self.origin[b]) {
                            continue;
                        }
                        let to = objects
                            .iter()
                            .position(|(j, q)| *j == t && q[..] == p[1..])
                            .expect("comma category is closed under factorization");
                        for r in 0..v.dim(s) {
                            let mut row = vec![0u32; total];
                            row[offsets[idx] + r] = 1;
                            for (k, x) in v.map(b).column(r).into_iter().enumerate() {
                                let c = offsets[to] + k;
                                row[c] = f.sub(row[c], x);
                            }
                            relations.push(row);
                        }
                    }
                }
                let rel = Matrix::new(f, relations.len(), total, relations.concat()).expect("rows have full length");
                let space = Subspace::span(&rel);
                Presentation {
                    offsets,
                    projection: space.quotient_projection(),
                    section: space.quotient_section(),
                }
            })
            .collect())
    }

    fn lan(&self, v: &Rep) -> Result<Rep> {
        Ok(self.lan_with(v)?.0)
    }

    fn lan_with(&self, v: &Rep) -> Result<(Rep, Vec<Presentation>)> {
        let pres = self.present(v)?;
        let f = v.field();
        let dims = pres.iter().map(|p| p.projection.rows()).collect();
        let maps = self
            .big
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, &(q0, q1))| {
                let (p0, p1) = (&pres[q0], &pres[q1]);
                let mut shift = Matrix::zeros(f, *p1.offsets.last().unwrap(), *p0.offsets.last().unwrap());
                for (idx, (i, path)) in self.comma[q0].iter().enumerate() {
                    let extended: Vec<usize> = path.iter().copied().chain([a]).collect();
                    let to = self.comma[q1]
                        .iter()
                        .position(|(j, q)| j == i && *q == extended)
                        .expect("extended path is a comma object");
                    shift.paste(p1.offsets[to], p0.offsets[idx], &Matrix::identity(f, v.dim(*i)));
                }
                p1.projection.mul(&shift).mul(&p0.section)
            })
            .collect();
        Ok((Rep::new(self.big.clone(), f, dims, maps)?, pres))
    }

    fn lan_morphism(&self, g: &RepMorphism) -> Result<RepMorphism> {
        let (source, ps) = self.lan_with(g.source())?;
        let (target, pt) = self.lan_with(g.target())?;
        let f = g.source().field();
        let comps = self
            .comma
            .iter()
            .enumerate()
            .map(|(q, objects)| {
                let blocks: Vec<&Matrix> = objects.iter().map(|(i, _)| g.component(*i)).collect();
                pt[q].projection.mul(&Matrix::block_diagonal(f, &blocks)).mul(&ps[q].section)
            })
            .collect();
        RepMorphism::new(source, target, comps)
    }

    /// `V -> res(Lan V)`: insertion at the trivial path.
    pub(crate) fn unit(&self, v: &Rep) -> Result<RepMorphism> {
        let (lan, pres) = self.lan_with(v)?;
        let target = self.restrict(&lan)?;
        let comps = self
            .subset
            .iter()
            .enumerate()
            .map(|(i, &q)| {
                let idx = self.comma[q].iter().position(|(j, p)| *j == i && p.is_empty()).expect("trivial path");
                let mut ins = Matrix::zeros(v.field(), *pres[q].offsets.last().unwrap(), v.dim(i));
                ins.paste(pres[q].offsets[idx], 0, &Matrix::identity(v.field(), v.dim(i)));
                pres[q].projection.mul(&ins)
            })
            .collect();
        RepMorphism::new(v.clone(), target, comps)
    }

    /// `Lan(res B) -> B`: each comma object acts through its path in `B`.
    pub(crate) fn counit(&self, b: &Rep) -> Result<RepMorphism> {
        let restricted = self.restrict(b)?;
        let (lan, pres) = self.lan_with(&restricted)?;
        let comps = self
            .comma
            .iter()
            .enumerate()
            .map(|(q, objects)| {
                let blocks: Vec<Matrix> = objects.iter().map(|(i, p)| b.path_map(self.subset[*i], p)).collect();
                let refs: Vec<&Matrix> = blocks.iter().collect();
                Matrix::hstack(b.field(), b.dim(q), &refs).mul(&pres[q].section)
            })
            .collect();
        RepMorphism::new(lan, b.clone(), comps)
    }
}

struct Presentation {
    offsets: Vec<usize>,
    projection: Matrix,
    section: Matrix,
}

/// A quiver isomorphism `source -> target` given on vertices.
#[derive(Debug)]
pub struct Relabelling {
    source: Arc<Quiver>,
    target: Arc<Quiver>,
    vertex_map: Vec<usize>,
    arrow_map: Vec<usize>,
}

impl Relabelling {
    /// `map[v]` is the image of source vertex `v`. Parallel arrows are matched in index order.
    pub fn new(source: Quiver, target: Quiver, map: &[usize]) -> Result<Arc<Relabelling>> {
        let n = source.vertex_count();
        let mut seen = vec![false; n];
        if map.len() != n || target.vertex_count() != n || map.iter().any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
        {
            return Err(Error::Adjunction(format!("{map:?} is not a bijection of {n} vertices")));
        }
        if source.arrow_count() != target.arrow_count() {
            return Err(Error::Adjunction("quivers have different numbers of arrows".into()));
        }
        let mut used = vec![false; target.arrow_count()];
        let mut arrow_map = Vec::with_capacity(source.arrow_count());
        for &(s, t) in source.arrows() {
            let b = target
                .arrows()
                .iter()
                .enumerate()
                .position(|(b, &e)| !used[b] && e == (map[s], map[t]))
                .ok_or_else(|| Error::Adjunction(format!("arrow {s}->{t} has no image under {map:?}")))?;
            used[b] = true;
            arrow_map.push(b);
        }
        Ok(Arc::new(Relabelling {
            source: Arc::new(source),
            target: Arc::new(target),
            vertex_map: map.to_vec(),
            arrow_map,
        }))
    }

    /// The target quiver obtained by renaming the vertices of `source` along `map`.
    pub fn image(source: Quiver, map: &[usize]) -> Result<Arc<Relabelling>> {
        if map.len() != source.vertex_count() || map.iter().any(|&v| v >= source.vertex_count()) {
            return Err(Error::Adjunction(format!("{map:?} is not a bijection of the vertices")));
        }
        let arrows = source.arrows().iter().map(|&(s, t)| (map[s], map[t])).collect();
        let target = Quiver::new(source.vertex_count(), arrows)?;
        Relabelling::new(source, target, map)
    }

    pub fn inverse(&self) -> Arc<Relabelling> {
        let mut inv = vec![0; self.vertex_map.len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            inv[w] = v;
        }
        let mut arrow_inv = vec![0; self.arrow_map.len()];
        for (a, &b) in self.arrow_map.iter().enumerate() {
            arrow_inv[b] = a;
        }
        Arc::new(Relabelling {
            source: self.target.clone(),
            target: self.source.clone(),
            vertex_map: inv,
            arrow_map: arrow_inv,
        })
    }

    pub fn source(&self) -> &Arc<Quiver> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Quiver> {
        &self.target
    }

    fn apply(&self, x: &Rep) -> Result<Rep> {
        check_over(x, &self.source)?;
        let mut dims = vec![0; x.dims().len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            dims[w] = x.dim(v);
        }
        let mut maps = vec![Matrix::zeros(x.field(), 0, 0); x.maps().len()];
        for (a, &b) in self.arrow_map.iter().enumerate() {
            maps[b] = x.map(a).clone();
        }
        Rep::new(self.target.clone(), x.field(), dims, maps)
    }

    fn apply_morphism(&self, f: &RepMorphism) -> Result<RepMorphism> {
        let mut comps = vec![Matrix::zeros(f.source().field(), 0, 0); f.components().len()];
        for (v, &w) in self.vertex_map.iter().enumerate() {
            comps[w] = f.component(v).clone();
        }
        RepMorphism::new(self.apply(f.source())?, self.apply(f.target())?, comps)
    }
}

fn check_over(x: &Rep, q: &Quiver) -> Result<()> {
    if x.quiver().as_ref() == q {
        Ok(())
    } else {
        Err(Error::Mismatch("functor applied to a representation of another quiver".into()))
    }
}

impl Functor {
    pub fn source(&self) -> Quiver {
        match self {
            Functor::Restriction(s) => (**s.big()).clone(),
            Functor::Lan(s) => (**s.small()).clone(),
            Functor::Relabel(r) => (**r.source()).clone(),
            Functor::Composite(first, _) => first.source(),
            Functor::Opposite(f) => f.source().opposite(),
        }
    }

    pub fn target(&self) -> Quiver {
        match self {
            Functor::Restriction(s) => (**s.small()).clone(),
            Functor::Lan(s) => (**s.big()).clone(),
            Functor::Relabel(r) => (**r.target()).clone(),
            Functor::Composite(_, second) => second.target(),
            Functor::Opposite(f) => f.target().opposite(),
        }
    }

    pub fn apply(&self, x: &Rep) -> Result<Rep> {
        match self {
            Functor::Restriction(s) => s.restrict(x),
            Functor::Lan(s) => s.lan(x),
            Functor::Relabel(r) => r.apply(x),
            Functor::Composite(first, second) => second.apply(&first.apply(x)?),
            Functor::Opposite(f) => Ok(dual_rep(&f.apply(&dual_rep(x))?)),
        }
    }

    pub fn apply_morphism(&self, g: &RepMorphism) -> Result<RepMorphism> {
        match self {
            Functor::Restriction(s) => s.restrict_morphism(g),
            Functor::Lan(s) => s.lan_morphism(g),
            Functor::Relabel(r) => r.apply_morphism(g),
            Functor::Composite(first, second) => second.apply_morphism(&first.apply_morphism(g)?),
            Functor::Opposite(f) => Ok(dual_morphism(&f.apply_morphism(&dual_morphism(g))?)),
        }
    }

    pub fn then(self, next: Functor) -> Functor {
        Functor::Composite(Box::new(self), Box::new(next))
    }

    pub fn opposite(self) -> Functor {
        match self {
            Functor::Opposite(f) => *f,
            f => Functor::Opposite(Box::new(f)),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Functor::Restriction(s) => format!("res{:?}", s.subset()),
            Functor::Lan(s) => format!("Lan{:?}", s.subset()),
            Functor::Relabel(r) => format!("relabel{:?}", r.vertex_map),
            Functor::Composite(a, b) => format!("{}∘{}", b.describe(), a.describe()),
            Functor::Opposite(f) => format!("({})^op", f.describe()),
        }
    }
}
