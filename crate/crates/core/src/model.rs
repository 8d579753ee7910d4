//! Decorated JSJ graphs: Seifert pieces on the vertices, gluing matrices on
//! the edges.
//!
//! An edge stores its matrix once, in the `from -> to` direction. The matrix
//! `(α β; γ δ)` encodes the relations `h_from = h_to^α · ē^γ` and
//! `e = h_to^β · ē^δ`, where `e` is the boundary curve on the `from` side
//! and `ē` the one on the `to` side. The opposite direction is always
//! derived with [`GluingMatrix::reverse_end`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

/// An exceptional fibre with invariants `(p, q)`, relator `a^p h^q`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConePoint {
    pub p: BigInt,
    pub q: BigInt,
}

impl ConePoint {
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>) -> Self {
        ConePoint { p: p.into(), q: q.into() }
    }
}

/// Base orbifold of a major piece. The boundary count is the vertex degree
/// and is not stored here.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BaseOrbifold {
    /// Orientable genus, or number of crosscaps when non-orientable.
    pub genus: u32,
    pub orientable: bool,
    pub cones: Vec<ConePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeifertPiece {
    Major(BaseOrbifold),
    /// The orientable I-bundle over the Klein bottle. Its boundary basis is
    /// (central fibre `x²`, secondary fibre `y`) of `<x, y | x y x⁻¹ y>`.
    Minor,
}

impl SeifertPiece {
    pub fn major(genus: u32, orientable: bool, cones: Vec<ConePoint>) -> Self {
        SeifertPiece::Major(BaseOrbifold { genus, orientable, cones })
    }

    pub fn is_minor(&self) -> bool {
        matches!(self, SeifertPiece::Minor)
    }

    pub fn base(&self) -> Option<&BaseOrbifold> {
        match self {
            SeifertPiece::Major(b) => Some(b),
            SeifertPiece::Minor => None,
        }
    }

    /// Whether the canonical fibre is central. Minor pieces count as
    /// orientable: their central fibre has quotient the infinite dihedral
    /// group, an orientable orbifold group.
    pub fn has_orientable_base(&self) -> bool {
        match self {
            SeifertPiece::Major(b) => b.orientable,
            SeifertPiece::Minor => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GluingMatrix {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub delta: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// The matrix does not have determinant −1.
    Determinant(BigInt),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Determinant(d) => write!(f, "gluing matrix has determinant {d}, expected -1"),
        }
    }
}

impl GluingMatrix {
    pub fn new(
        alpha: impl Into<BigInt>,
        beta: impl Into<BigInt>,
        gamma: impl Into<BigInt>,
        delta: impl Into<BigInt>,
    ) -> Self {
        GluingMatrix { alpha: alpha.into(), beta: beta.into(), gamma: gamma.into(), delta: delta.into() }
    }

    pub fn det(&self) -> BigInt {
        &self.alpha * &self.delta - &self.beta * &self.gamma
    }

    /// The matrix of the same edge read in the opposite direction.
    pub fn reverse_end(&self) -> Result<GluingMatrix, ModelError> {
        let det = self.det();
        if det != BigInt::from(-1) {
            return Err(ModelError::Determinant(det));
        }
        Ok(self.inverse_unchecked())
    }

    /// `(−δ β; γ −α)`, the inverse when the determinant is −1.
    pub(crate) fn inverse_unchecked(&self) -> GluingMatrix {
        GluingMatrix {
            alpha: -&self.delta,
            beta: self.beta.clone(),
            gamma: self.gamma.clone(),
            delta: -&self.alpha,
        }
    }

    pub fn negated(&self) -> GluingMatrix {
        GluingMatrix {
            alpha: -&self.alpha,
            beta: -&self.beta,
            gamma: -&self.gamma,
            delta: -&self.delta,
        }
    }

    pub fn mirrored(&self) -> GluingMatrix {
        GluingMatrix {
            alpha: self.alpha.clone(),
            beta: -&self.beta,
            gamma: -&self.gamma,
            delta: self.delta.clone(),
        }
    }

    /// `A · (1 k; 0 1)`: a Dehn twist on the `from` side, `δ ↦ δ + kγ`.
    pub fn twist_from_side(&self, k: &BigInt) -> GluingMatrix {
        GluingMatrix {
            alpha: self.alpha.clone(),
            beta: &self.beta + k * &self.alpha,
            gamma: self.gamma.clone(),
            delta: &self.delta + k * &self.gamma,
        }
    }

    /// `(1 −k; 0 1) · A`: a Dehn twist on the `to` side. The reverse
    /// matrix's `δ` (which is `−α`) moves by `kγ`.
    pub fn twist_to_side(&self, k: &BigInt) -> GluingMatrix {
        GluingMatrix {
            alpha: &self.alpha - k * &self.gamma,
            beta: &self.beta - k * &self.delta,
            gamma: self.gamma.clone(),
            delta: self.delta.clone(),
        }
    }
}

impl fmt::Display for GluingMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {}; {} {})", self.alpha, self.beta, self.gamma, self.delta)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub id: String,
    pub from: String,
    pub to: String,
    pub matrix: GluingMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EndSide {
    From,
    To,
}

impl EndSide {
    pub fn as_str(self) -> &'static str {
        match self {
            EndSide::From => "from",
            EndSide::To => "to",
        }
    }

    pub fn opposite(self) -> EndSide {
        match self {
            EndSide::From => EndSide::To,
            EndSide::To => EndSide::From,
        }
    }
}

/// One end of an edge: the edge's index in [`GraphManifold::edges`] plus
/// which side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeEnd {
    pub edge: usize,
    pub side: EndSide,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphManifold {
    pub name: String,
    pub vertices: BTreeMap<String, SeifertPiece>,
    pub edges: Vec<Edge>,
}

impl GraphManifold {
    pub fn new(name: impl Into<String>) -> Self {
        GraphManifold { name: name.into(), vertices: BTreeMap::new(), edges: Vec::new() }
    }

    pub fn with_vertex(mut self, id: &str, piece: SeifertPiece) -> Self {
        self.vertices.insert(id.to_string(), piece);
        self
    }

    pub fn with_edge(mut self, id: &str, from: &str, to: &str, matrix: GluingMatrix) -> Self {
        self.edges.push(Edge { id: id.to_string(), from: from.to_string(), to: to.to_string(), matrix });
        self
    }

    pub fn piece(&self, v: &str) -> &SeifertPiece {
        self.vertices.get(v).unwrap_or_else(|| panic!("unknown vertex {v:?}"))
    }

    pub fn edge_index(&self, id: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn end_vertex(&self, end: EdgeEnd) -> &str {
        let e = &self.edges[end.edge];
        match end.side {
            EndSide::From => &e.from,
            EndSide::To => &e.to,
        }
    }

    pub fn end_neighbor(&self, end: EdgeEnd) -> &str {
        self.end_vertex(EdgeEnd { edge: end.edge, side: end.side.opposite() })
    }

    /// The gluing matrix read outward from this end's vertex.
    pub fn end_matrix(&self, end: EdgeEnd) -> GluingMatrix {
        let m = &self.edges[end.edge].matrix;
        match end.side {
            EndSide::From => m.clone(),
            EndSide::To => m.inverse_unchecked(),
        }
    }

    /// Edge ends based at `v`, sorted by (neighbour id, edge id, side).
    /// A loop contributes both of its ends.
    pub fn ends_at(&self, v: &str) -> Vec<EdgeEnd> {
        let mut ends: Vec<EdgeEnd> = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.from == v {
                ends.push(EdgeEnd { edge: i, side: EndSide::From });
            }
            if e.to == v {
                ends.push(EdgeEnd { edge: i, side: EndSide::To });
            }
        }
        ends.sort_by(|a, b| {
            let ka = (self.end_neighbor(*a), &self.edges[a.edge].id, a.side);
            let kb = (self.end_neighbor(*b), &self.edges[b.edge].id, b.side);
            ka.cmp(&kb)
        });
        ends
    }

    pub fn degree(&self, v: &str) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.from == v) + usize::from(e.to == v))
            .sum()
    }

    /// Every vertex reachable from the first one (trivially true when empty).
    pub fn is_connected(&self) -> bool {
        let Some(start) = self.vertices.keys().next() else {
            return true;
        };
        let mut seen: BTreeSet<&str> = BTreeSet::new();
        let mut stack = alloc::vec![start.as_str()];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for e in &self.edges {
                if e.from == v && !seen.contains(e.to.as_str()) {
                    stack.push(&e.to);
                }
                if e.to == v && !seen.contains(e.from.as_str()) {
                    stack.push(&e.from);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// lcm of every cone order and every `|γ|`.
    pub fn modulus(&self) -> BigInt {
        let mut m = BigInt::one();
        for piece in self.vertices.values() {
            if let SeifertPiece::Major(b) = piece {
                for c in &b.cones {
                    m = m.lcm(&c.p.abs());
                }
            }
        }
        for e in &self.edges {
            if !e.matrix.gamma.is_zero() {
                m = m.lcm(&e.matrix.gamma.abs());
            }
        }
        m
    }
}

// ---------------------------------------------------------------------------
// Validation

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleCode {
    Det,
    GammaZero,
    MinorAdj,
    MinorAlpha,
    ChiNonneg,
    Connected,
    Gcd,
    Degree,
    ConeOrder,
    NonorientableGenus,
    Endpoint,
}

impl RuleCode {
    pub fn as_str(self) -> &'static str {
        match self {
            RuleCode::Det => "DET",
            RuleCode::GammaZero => "GAMMA_ZERO",
            RuleCode::MinorAdj => "MINOR_ADJ",
            RuleCode::MinorAlpha => "MINOR_ALPHA",
            RuleCode::ChiNonneg => "CHI_NONNEG",
            RuleCode::Connected => "CONNECTED",
            RuleCode::Gcd => "GCD",
            RuleCode::Degree => "DEGREE",
            RuleCode::ConeOrder => "CONE_ORDER",
            RuleCode::NonorientableGenus => "NONORIENTABLE_GENUS",
            RuleCode::Endpoint => "ENDPOINT",
        }
    }
}

impl fmt::Display for RuleCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    Graph,
    Vertex(String),
    Edge(String),
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Location::Graph => f.write_str("graph"),
            Location::Vertex(v) => write!(f, "vertex {v}"),
            Location::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Violation {
    pub code: RuleCode,
    pub location: Location,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn has(&self, code: RuleCode) -> bool {
        self.violations.iter().any(|v| v.code == code)
    }
}

/// Checks every structural invariant. Violations come back sorted, so the
/// result does not depend on edge order.
pub fn validate(m: &GraphManifold) -> ValidationReport {
    let mut out: Vec<Violation> = Vec::new();
    let mut push = |code, location, message: String| out.push(Violation { code, location, message });

    for (id, piece) in &m.vertices {
        let deg = m.degree(id);
        let loc = || Location::Vertex(id.clone());
        match piece {
            SeifertPiece::Minor => {
                if deg != 1 {
                    push(RuleCode::Degree, loc(), format!("minor piece has degree {deg}, expected 1"));
                }
            }
            SeifertPiece::Major(base) => {
                if deg == 0 {
                    push(RuleCode::Degree, loc(), "vertex has no incident edges".to_string());
                }
                if !base.orientable && base.genus == 0 {
                    push(
                        RuleCode::NonorientableGenus,
                        loc(),
                        "non-orientable base needs at least one crosscap".to_string(),
                    );
                }
                let mut cones_ok = true;
                for (i, c) in base.cones.iter().enumerate() {
                    if c.p < BigInt::from(2) {
                        cones_ok = false;
                        push(RuleCode::ConeOrder, loc(), format!("cone {i} has order {} < 2", c.p));
                    } else if !c.p.gcd(&c.q).is_one() {
                        push(RuleCode::Gcd, loc(), format!("cone {i} ({}, {}) is not coprime", c.p, c.q));
                    }
                }
                if deg >= 1 && cones_ok {
                    let chi = euler_char_of(base, deg);
                    if !chi.is_negative() {
                        push(
                            RuleCode::ChiNonneg,
                            loc(),
                            format!("base orbifold Euler characteristic {chi} is not negative"),
                        );
                    }
                }
            }
        }
    }

    for e in &m.edges {
        let loc = || Location::Edge(e.id.clone());
        let det = e.matrix.det();
        if det != BigInt::from(-1) {
            push(RuleCode::Det, loc(), format!("determinant is {det}, expected -1"));
        }
        if e.matrix.gamma.is_zero() {
            push(RuleCode::GammaZero, loc(), "fibres match across the torus (gamma = 0)".to_string());
        }
        let from = m.vertices.get(&e.from);
        let to = m.vertices.get(&e.to);
        for (end, piece) in [(&e.from, from), (&e.to, to)] {
            if piece.is_none() {
                push(RuleCode::Endpoint, loc(), format!("unknown vertex {end:?}"));
            }
        }
        let (Some(from), Some(to)) = (from, to) else { continue };
        if from.is_minor() && to.is_minor() && e.from != e.to {
            push(RuleCode::MinorAdj, loc(), "two minor pieces are adjacent".to_string());
        }
        if e.from != e.to {
            // α of the major-to-minor direction must not vanish.
            if to.is_minor() && e.matrix.alpha.is_zero() {
                push(RuleCode::MinorAlpha, loc(), format!("alpha = 0 at minor end {}", e.to));
            }
            if from.is_minor() && e.matrix.delta.is_zero() {
                push(RuleCode::MinorAlpha, loc(), format!("alpha = 0 at minor end {}", e.from));
            }
        }
    }

    if m.edges.is_empty() {
        push(RuleCode::Connected, Location::Graph, "graph has no edges".to_string());
    } else if !m.is_connected() {
        push(RuleCode::Connected, Location::Graph, "graph is not connected".to_string());
    }

    out.sort();
    ValidationReport { ok: out.is_empty(), violations: out }
}

pub(crate) fn euler_char_of(base: &BaseOrbifold, degree: usize) -> Rational {
    let genus_term = if base.orientable { 2 * i64::from(base.genus) } else { i64::from(base.genus) };
    let mut chi = Rational::from(2 - genus_term - degree as i64);
    for c in &base.cones {
        chi -= &(Rational::from(1) - Rational::new(BigInt::one(), c.p.clone()));
    }
    chi
}

// ---------------------------------------------------------------------------
// Orientation reversal and signatures

/// Reverses the orientation of the whole manifold.
pub fn mirror(m: &GraphManifold) -> GraphManifold {
    let vertices = m
        .vertices
        .iter()
        .map(|(id, piece)| {
            let piece = match piece {
                SeifertPiece::Minor => SeifertPiece::Minor,
                SeifertPiece::Major(b) => SeifertPiece::Major(BaseOrbifold {
                    genus: b.genus,
                    orientable: b.orientable,
                    cones: b.cones.iter().map(|c| ConePoint { p: c.p.clone(), q: -&c.q }).collect(),
                }),
            };
            (id.clone(), piece)
        })
        .collect();
    let edges = m
        .edges
        .iter()
        .map(|e| Edge { matrix: e.matrix.mirrored(), ..e.clone() })
        .collect();
    GraphManifold { name: m.name.clone(), vertices, edges }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PieceKind {
    Major,
    Minor,
}

/// Homeomorphism-invariant data at a vertex, used to prune graph
/// isomorphism search. `genus`/`orientable` are `None` for minor pieces.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub kind: PieceKind,
    pub genus: Option<u32>,
    pub orientable: Option<bool>,
    pub cone_orders: Vec<BigInt>,
    pub degree: usize,
    pub gammas: Vec<BigInt>,
}

pub fn vertex_signature(m: &GraphManifold, v: &str) -> Signature {
    let mut gammas: Vec<BigInt> = m.ends_at(v).iter().map(|end| m.edges[end.edge].matrix.gamma.abs()).collect();
    gammas.sort();
    let degree = m.degree(v);
    match m.piece(v) {
        SeifertPiece::Minor => Signature {
            kind: PieceKind::Minor,
            genus: None,
            orientable: None,
            cone_orders: Vec::new(),
            degree,
            gammas,
        },
        SeifertPiece::Major(b) => {
            let mut cone_orders: Vec<BigInt> = b.cones.iter().map(|c| c.p.clone()).collect();
            cone_orders.sort();
            Signature {
                kind: PieceKind::Major,
                genus: Some(b.genus),
                orientable: Some(b.orientable),
                cone_orders,
                degree,
                gammas,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn codes(m: &GraphManifold) -> Vec<RuleCode> {
        validate(m).violations.iter().map(|v| v.code).collect()
    }

    #[test]
    fn fixtures_validate() {
        for m in [fixtures::w1(), fixtures::n2(), fixtures::tri(), fixtures::min()] {
            let rep = validate(&m);
            assert!(rep.ok, "{}: {:?}", m.name, rep.violations);
        }
    }

    #[test]
    fn gamma_zero_and_det() {
        let mut m = fixtures::w1();
        m.edges[0].matrix = GluingMatrix::new(2, 1, 0, 2);
        assert!(codes(&m).contains(&RuleCode::GammaZero));

        m.edges[0].matrix = GluingMatrix::new(1, 1, 5, 2);
        let rep = validate(&m);
        assert!(rep.has(RuleCode::Det));
        assert!(rep.violations[0].message.contains("-3"));
        assert_eq!(rep.violations[0].location, Location::Edge("e".into()));
    }

    #[test]
    fn minor_alpha() {
        let mut m = fixtures::min();
        m.edges[0].matrix = GluingMatrix::new(0, 1, 1, 0);
        assert!(codes(&m).contains(&RuleCode::MinorAlpha));

        // Same edge stored minor -> major: the relevant entry is −δ.
        let mut m = fixtures::min();
        let e = &mut m.edges[0];
        core::mem::swap(&mut e.from, &mut e.to);
        e.matrix = GluingMatrix::new(1, 1, 3, 2).reverse_end().unwrap();
        assert!(validate(&m).ok);
        e_set(&mut m, GluingMatrix::new(0, 1, 1, 0));
        assert!(codes(&m).contains(&RuleCode::MinorAlpha));
    }

    fn e_set(m: &mut GraphManifold, a: GluingMatrix) {
        m.edges[0].matrix = a;
    }

    #[test]
    fn minor_adjacent_and_degree() {
        let m = GraphManifold::new("mm")
            .with_vertex("a", SeifertPiece::Minor)
            .with_vertex("b", SeifertPiece::Minor)
            .with_edge("e", "a", "b", GluingMatrix::new(1, 1, 3, 2));
        assert!(codes(&m).contains(&RuleCode::MinorAdj));

        let m = GraphManifold::new("loop")
            .with_vertex("a", SeifertPiece::Minor)
            .with_edge("e", "a", "a", GluingMatrix::new(1, 1, 3, 2));
        assert!(codes(&m).contains(&RuleCode::Degree));
    }

    #[test]
    fn chi_gcd_connected() {
        let m = GraphManifold::new("disc")
            .with_vertex("a", SeifertPiece::major(0, true, alloc::vec![]))
            .with_vertex("b", SeifertPiece::major(0, true, alloc::vec![ConePoint::new(4, 2), ConePoint::new(3, 1), ConePoint::new(3, 1)]))
            .with_vertex("c", SeifertPiece::major(1, true, alloc::vec![]));
        let m = m.with_edge("e", "a", "b", GluingMatrix::new(0, 1, 1, 0));
        let c = codes(&m);
        assert!(c.contains(&RuleCode::ChiNonneg));
        assert!(c.contains(&RuleCode::Gcd));
        assert!(c.contains(&RuleCode::Connected));
        assert!(c.contains(&RuleCode::Degree));
    }

    #[test]
    fn reverse_end_examples() {
        let r = GluingMatrix::new(2, 1, 5, 2).reverse_end().unwrap();
        assert_eq!(r, GluingMatrix::new(-2, 1, 5, -2));
        let s = GluingMatrix::new(0, 1, 1, 0);
        assert_eq!(s.reverse_end().unwrap(), s);
        assert_eq!(GluingMatrix::new(1, 1, 3, 2).reverse_end().unwrap(), GluingMatrix::new(-2, 1, 3, -1));
        assert!(matches!(GluingMatrix::new(1, 1, 5, 2).reverse_end(), Err(ModelError::Determinant(_))));
    }

    #[test]
    fn mirror_examples() {
        let w1 = fixtures::w1();
        assert_eq!(mirror(&mirror(&w1)), w1);
        let cones = &mirror(&w1).piece("x").base().unwrap().cones.clone();
        assert_eq!(cones, &alloc::vec![ConePoint::new(5, -1), ConePoint::new(5, -1)]);
    }

    #[test]
    fn signatures() {
        let w1 = fixtures::w1();
        let s = vertex_signature(&w1, "x");
        assert_eq!(s.kind, PieceKind::Major);
        assert_eq!((s.genus, s.orientable, s.degree), (Some(0), Some(true), 1));
        assert_eq!(s.cone_orders, alloc::vec![BigInt::from(5), BigInt::from(5)]);
        assert_eq!(s.gammas, alloc::vec![BigInt::from(5)]);

        let s = vertex_signature(&fixtures::min(), "y");
        assert_eq!((s.kind, s.genus, s.orientable, s.degree), (PieceKind::Minor, None, None, 1));
        assert!(s.cone_orders.is_empty());
        assert_eq!(s.gammas, alloc::vec![BigInt::from(3)]);

        let s = vertex_signature(&fixtures::tri(), "v1");
        assert_eq!(s.cone_orders, alloc::vec![BigInt::from(2)]);
        assert_eq!((s.degree, s.gammas.len()), (2, 2));
    }

    #[test]
    fn ends_sorted_by_neighbour() {
        let tri = fixtures::tri();
        let ends = tri.ends_at("v1");
        let nbrs: Vec<&str> = ends.iter().map(|e| tri.end_neighbor(*e)).collect();
        assert_eq!(nbrs, alloc::vec!["v2", "v3"]);
    }
}
