//! JSON file formats. Vertex and variable indices on the wire are 1-based
//! wherever the in-memory value is 0-based.

use serde::{de::DeserializeOwned, Deserialize, Serialize};
use thiserror::Error;

use crate::abp::{Edge, NcAbp};
use crate::algebra::{
    common_kind, AlgebraError, DensePoly, Field, FieldKind, LinearForm, Scalar, WaringPoint, Zeta6,
    Q,
};
use crate::graph::SimpleGraph;
use crate::tableau::Tableau;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid {what}: {detail}")]
    Invalid { what: &'static str, detail: String },
}

fn invalid(what: &'static str, e: impl std::fmt::Display) -> FormatError {
    FormatError::Invalid {
        what,
        detail: e.to_string(),
    }
}

fn parse<T: DeserializeOwned>(s: &str) -> Result<T, FormatError> {
    Ok(serde_json::from_str(s)?)
}

/// Compact JSON followed by a newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("wire types always serialize");
    s.push('\n');
    s
}

/// A value over whichever field its scalars belong to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Dual<T, U> {
    Rational(T),
    Zeta6(U),
}

impl<T, U> Dual<T, U> {
    pub fn kind(&self) -> FieldKind {
        match self {
            Dual::Rational(_) => FieldKind::Rational,
            Dual::Zeta6(_) => FieldKind::Zeta6,
        }
    }
}

pub type AnyPoly = Dual<DensePoly<Q>, DensePoly<Zeta6>>;
pub type AnyPoint = Dual<WaringPoint<Q>, WaringPoint<Zeta6>>;
pub type AnyAbp = Dual<NcAbp<Q>, NcAbp<Zeta6>>;

fn scalars<F: Field>(v: &[Scalar]) -> Result<Vec<F>, AlgebraError> {
    v.iter().map(F::from_scalar).collect()
}

// Tableau

#[derive(Serialize, Deserialize)]
struct Content {
    n: usize,
    d: usize,
}

#[derive(Serialize, Deserialize)]
struct TableauFile {
    rows: Vec<Vec<u32>>,
    content: Content,
}

pub fn tableau_from_json(s: &str) -> Result<Tableau, FormatError> {
    let f: TableauFile = parse(s)?;
    Tableau::new(f.rows, f.content.n, f.content.d).map_err(|e| invalid("tableau", e))
}

pub fn tableau_to_json(t: &Tableau) -> String {
    to_json(&TableauFile {
        rows: t.rows().to_vec(),
        content: Content { n: t.n(), d: t.d() },
    })
}

// Polynomials

#[derive(Serialize, Deserialize)]
struct PolyTerm {
    alpha: Vec<u32>,
    c: Scalar,
}

#[derive(Serialize, Deserialize)]
struct PolyFile {
    d: u32,
    m: usize,
    terms: Vec<PolyTerm>,
}

fn poly_from_file<F: Field>(f: &PolyFile) -> Result<DensePoly<F>, FormatError> {
    let terms = f
        .terms
        .iter()
        .map(|t| Ok((t.alpha.clone(), F::from_scalar(&t.c)?)))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    Ok(DensePoly::from_terms(f.d, f.m, terms)?)
}

pub fn poly_from_json(s: &str) -> Result<AnyPoly, FormatError> {
    let f: PolyFile = parse(s)?;
    Ok(match common_kind(f.terms.iter().map(|t| &t.c))? {
        FieldKind::Rational => Dual::Rational(poly_from_file(&f)?),
        FieldKind::Zeta6 => Dual::Zeta6(poly_from_file(&f)?),
    })
}

pub fn poly_to_json<F: Field>(p: &DensePoly<F>) -> String {
    to_json(&PolyFile {
        d: p.degree(),
        m: p.nvars(),
        terms: p
            .terms()
            .map(|(a, c)| PolyTerm {
                alpha: a.clone(),
                c: c.to_scalar(),
            })
            .collect(),
    })
}

// Waring points

#[derive(Serialize, Deserialize)]
struct PointTerm {
    c: Scalar,
    form: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct PointFile {
    d: u32,
    m: usize,
    terms: Vec<PointTerm>,
}

fn point_from_file<F: Field>(f: &PointFile) -> Result<WaringPoint<F>, FormatError> {
    let terms = f
        .terms
        .iter()
        .map(|t| Ok((F::from_scalar(&t.c)?, LinearForm::new(scalars(&t.form)?))))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    Ok(WaringPoint::new(f.d, f.m, terms)?)
}

pub fn point_from_json(s: &str) -> Result<AnyPoint, FormatError> {
    let f: PointFile = parse(s)?;
    let all = f
        .terms
        .iter()
        .flat_map(|t| std::iter::once(&t.c).chain(&t.form));
    Ok(match common_kind(all)? {
        FieldKind::Rational => Dual::Rational(point_from_file(&f)?),
        FieldKind::Zeta6 => Dual::Zeta6(point_from_file(&f)?),
    })
}

pub fn point_to_json<F: Field>(p: &WaringPoint<F>) -> String {
    to_json(&PointFile {
        d: p.d,
        m: p.m,
        terms: p
            .terms
            .iter()
            .map(|(c, l)| PointTerm {
                c: c.to_scalar(),
                form: l.coeffs.iter().map(Field::to_scalar).collect(),
            })
            .collect(),
    })
}

// ABPs

#[derive(Serialize, Deserialize)]
struct EdgeFile {
    from: usize,
    to: usize,
    label: Vec<Scalar>,
}

#[derive(Serialize, Deserialize)]
struct AbpFile {
    d: u32,
    m: usize,
    layers: Vec<usize>,
    edges: Vec<Vec<EdgeFile>>,
}

fn abp_from_file<F: Field>(f: &AbpFile) -> Result<NcAbp<F>, FormatError> {
    let mut edges = Vec::with_capacity(f.edges.len());
    for layer in &f.edges {
        let mut out = Vec::with_capacity(layer.len());
        for e in layer {
            if e.from == 0 || e.to == 0 {
                return Err(invalid("abp", "vertex indices are 1-based"));
            }
            out.push(Edge {
                from: e.from - 1,
                to: e.to - 1,
                label: LinearForm::new(scalars(&e.label)?),
            });
        }
        edges.push(out);
    }
    NcAbp::new(f.d, f.m, f.layers.clone(), edges).map_err(|e| invalid("abp", e))
}

pub fn abp_from_json(s: &str) -> Result<AnyAbp, FormatError> {
    let f: AbpFile = parse(s)?;
    let all = f.edges.iter().flatten().flat_map(|e| &e.label);
    Ok(match common_kind(all)? {
        FieldKind::Rational => Dual::Rational(abp_from_file(&f)?),
        FieldKind::Zeta6 => Dual::Zeta6(abp_from_file(&f)?),
    })
}

pub fn abp_to_json<F: Field>(a: &NcAbp<F>) -> String {
    to_json(&AbpFile {
        d: a.degree(),
        m: a.nvars(),
        layers: a.layers().to_vec(),
        edges: (0..a.degree() as usize)
            .map(|k| {
                a.edges(k)
                    .iter()
                    .map(|e| EdgeFile {
                        from: e.from + 1,
                        to: e.to + 1,
                        label: e.label.coeffs.iter().map(Field::to_scalar).collect(),
                    })
                    .collect()
            })
            .collect(),
    })
}

// Graphs and decompositions

#[derive(Serialize, Deserialize)]
struct GraphFile {
    n: u32,
    edges: Vec<(u32, u32)>,
}

pub fn graph_from_json(s: &str) -> Result<SimpleGraph, FormatError> {
    let f: GraphFile = parse(s)?;
    SimpleGraph::new(f.n, f.edges).map_err(|e| invalid("graph", e))
}

pub fn graph_to_json(g: &SimpleGraph) -> String {
    to_json(&GraphFile {
        n: g.n(),
        edges: g.edges().collect(),
    })
}

pub use crate::treedec::TreeDecomposition;

/// Tree edges index into `bags` from 0.
pub fn decomposition_from_json(s: &str) -> Result<TreeDecomposition, FormatError> {
    let f: TreeDecomposition = parse(s)?;
    Ok(TreeDecomposition::new(f.bags, f.tree_edges))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abp::x2y_width_two;

    #[test]
    fn tableau_round_trip() {
        let s = r#"{"rows":[[1,1],[2,2]],"content":{"n":2,"d":2}}"#;
        let t = tableau_from_json(s).unwrap();
        assert_eq!(tableau_from_json(&tableau_to_json(&t)).unwrap(), t);
        assert!(tableau_from_json(r#"{"rows":[[1,1],[2]],"content":{"n":2,"d":2}}"#).is_err());
        assert!(matches!(tableau_from_json("{"), Err(FormatError::Json(_))));
    }

    #[test]
    fn poly_and_point_dispatch() {
        let p = poly_from_json(r#"{"d":2,"m":2,"terms":[{"alpha":[1,1],"c":"1/2"}]}"#).unwrap();
        assert_eq!(p.kind(), FieldKind::Rational);
        let z = poly_from_json(r#"{"d":1,"m":1,"terms":[{"alpha":[1],"c":{"a":"0","b":"1"}}]}"#)
            .unwrap();
        assert_eq!(z.kind(), FieldKind::Zeta6);
        assert!(poly_from_json(r#"{"d":2,"m":2,"terms":[{"alpha":[1,0],"c":"1"}]}"#).is_err());
        if let Dual::Rational(p) = p {
            assert_eq!(
                poly_from_json(&poly_to_json(&p)).unwrap(),
                Dual::Rational(p)
            );
        }
        let s = r#"{"d":2,"m":2,"terms":[{"c":"1","form":["1","0"]},{"c":"1","form":["0","1"]}]}"#;
        let Dual::Rational(pt) = point_from_json(s).unwrap() else {
            panic!()
        };
        assert_eq!(
            point_from_json(&point_to_json(&pt)).unwrap(),
            Dual::Rational(pt)
        );
        let mixed = r#"{"d":1,"m":1,"terms":[{"c":"1","form":[{"a":"1","b":"0"}]}]}"#;
        assert!(matches!(
            point_from_json(mixed),
            Err(FormatError::Algebra(AlgebraError::MixedFields))
        ));
    }

    #[test]
    fn abp_round_trip_is_one_based() {
        let a = x2y_width_two::<Q>();
        let s = abp_to_json(&a);
        assert!(s.contains("\"from\":1"));
        assert!(!s.contains("\"from\":0"));
        assert_eq!(abp_from_json(&s).unwrap(), Dual::Rational(a));
    }

    #[test]
    fn graph_and_decomposition() {
        let g = graph_from_json(r#"{"n":3,"edges":[[1,2],[2,3]]}"#).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);
        assert!(graph_from_json(r#"{"n":2,"edges":[[1,3]]}"#).is_err());
        let td = decomposition_from_json(r#"{"bags":[[2,1],[2,3]],"tree_edges":[[0,1]]}"#).unwrap();
        assert_eq!(td.bags[0], vec![1, 2]);
    }
}
