//! Numerical invariants of a decorated graph and the moves that preserve
//! the underlying manifold.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::model::{euler_char_of, EndSide, GraphManifold, SeifertPiece};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvariantError {
    /// The operation needs base orbifold data, which minor pieces lack.
    MinorPiece,
    UnknownVertex(String),
    UnknownEdge(String),
    /// A twist target is not a cone of the vertex or not an end at it.
    BadTarget(String),
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::MinorPiece => f.write_str("minor pieces carry no base orbifold"),
            InvariantError::UnknownVertex(v) => write!(f, "unknown vertex {v:?}"),
            InvariantError::UnknownEdge(e) => write!(f, "unknown edge {e:?}"),
            InvariantError::BadTarget(msg) => write!(f, "invalid twist target: {msg}"),
        }
    }
}

pub fn orbifold_euler_char(piece: &SeifertPiece, degree: usize) -> Result<Rational, InvariantError> {
    match piece {
        SeifertPiece::Minor => Err(InvariantError::MinorPiece),
        SeifertPiece::Major(base) => Ok(euler_char_of(base, degree)),
    }
}

/// `τ(v) = Σ δ/γ − Σ q/p`, the sum running over edge ends at `v` with each
/// matrix read outward from `v`.
///
/// At a minor vertex this is `δ/γ` of its single end with no cone term.
/// Panics if `v` is not a vertex of `m`.
pub fn total_slope(m: &GraphManifold, v: &str) -> Rational {
    let mut tau = Rational::zero();
    for end in m.ends_at(v) {
        let a = m.end_matrix(end);
        tau += &Rational::new(a.delta, a.gamma);
    }
    if let SeifertPiece::Major(base) = m.piece(v) {
        for c in &base.cones {
            tau -= &Rational::new(c.q.clone(), c.p.clone());
        }
    }
    tau
}

pub fn all_slopes_zero(m: &GraphManifold) -> bool {
    m.vertices.keys().all(|v| total_slope(m, v).is_zero())
}

/// Two-colouring of the JSJ graph. `red` always holds the smallest vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub red: BTreeSet<String>,
    pub blue: BTreeSet<String>,
}

impl Bipartition {
    /// `+1` on the red class, `−1` on the blue class.
    pub fn exponent(&self, v: &str) -> i8 {
        if self.red.contains(v) {
            1
        } else {
            -1
        }
    }
}

/// `None` when an odd cycle (a loop included) exists.
pub fn bipartition(m: &GraphManifold) -> Option<Bipartition> {
    let mut colour: BTreeMap<&str, bool> = BTreeMap::new();
    for start in m.vertices.keys() {
        if colour.contains_key(start.as_str()) {
            continue;
        }
        colour.insert(start, true);
        let mut stack = alloc::vec![start.as_str()];
        while let Some(v) = stack.pop() {
            let c = colour[v];
            for e in &m.edges {
                let other = if e.from == v {
                    e.to.as_str()
                } else if e.to == v {
                    e.from.as_str()
                } else {
                    continue;
                };
                match colour.get(other) {
                    Some(&oc) if oc == c => return None,
                    Some(_) => {}
                    None => {
                        colour.insert(other, !c);
                        stack.push(other);
                    }
                }
            }
        }
    }
    let mut red = BTreeSet::new();
    let mut blue = BTreeSet::new();
    for (v, c) in colour {
        if c {
            red.insert(String::from(v));
        } else {
            blue.insert(String::from(v));
        }
    }
    Some(Bipartition { red, blue })
}

/// Reverses the fibre and base orientation of the piece at `v`: every matrix
/// with exactly one end at `v` is negated. Loops at `v` and all cone data are
/// unchanged, and so is every total slope.
pub fn fiber_flip(m: &GraphManifold, v: &str) -> GraphManifold {
    let mut out = m.clone();
    for e in &mut out.edges {
        if (e.from == v) != (e.to == v) {
            e.matrix = e.matrix.negated();
        }
    }
    out
}

/// Where one half of a paired Dehn twist lands.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TwistTarget {
    /// Index into the vertex's cone list: `q ↦ q + k·p`.
    Cone(usize),
    /// An edge end based at the vertex: `δ ↦ δ + k·γ` read from the vertex.
    EdgeEnd { edge: String, side: EndSide },
}

impl TwistTarget {
    // Change in τ produced by a unit twist on this target.
    fn slope_weight(&self) -> i64 {
        match self {
            TwistTarget::Cone(_) => -1,
            TwistTarget::EdgeEnd { .. } => 1,
        }
    }
}

/// Applies a Dehn twist of `k` on `target_a` and the compensating twist on
/// `target_b`, so that `τ(v)` is unchanged.
///
/// A cone target contributes `+k` to `Σ q/p`; an edge target contributes
/// `+k` to `Σ δ/γ`. So a cone paired with an edge end is twisted by the same
/// `k`, while two targets of the same kind are twisted by opposite amounts.
pub fn twist_move(
    m: &GraphManifold,
    v: &str,
    target_a: &TwistTarget,
    target_b: &TwistTarget,
    k: &BigInt,
) -> Result<GraphManifold, InvariantError> {
    let piece = m.vertices.get(v).ok_or_else(|| InvariantError::UnknownVertex(v.into()))?;
    if piece.is_minor() {
        return Err(InvariantError::MinorPiece);
    }
    if target_a == target_b {
        return Err(InvariantError::BadTarget("the two targets coincide".into()));
    }
    let k_b = if target_a.slope_weight() == target_b.slope_weight() { -k } else { k.clone() };
    let mut out = m.clone();
    apply_twist(&mut out, v, target_a, k)?;
    apply_twist(&mut out, v, target_b, &k_b)?;
    Ok(out)
}

fn apply_twist(m: &mut GraphManifold, v: &str, target: &TwistTarget, k: &BigInt) -> Result<(), InvariantError> {
    match target {
        TwistTarget::Cone(i) => {
            let Some(SeifertPiece::Major(base)) = m.vertices.get_mut(v) else {
                return Err(InvariantError::MinorPiece);
            };
            let n = base.cones.len();
            let cone = base
                .cones
                .get_mut(*i)
                .ok_or_else(|| InvariantError::BadTarget(alloc::format!("cone {i} of {n} at {v}")))?;
            cone.q += k * &cone.p;
        }
        TwistTarget::EdgeEnd { edge, side } => {
            let idx = m.edge_index(edge).ok_or_else(|| InvariantError::UnknownEdge(edge.clone()))?;
            let e = &mut m.edges[idx];
            let at = match side {
                EndSide::From => &e.from,
                EndSide::To => &e.to,
            };
            if at != v {
                return Err(InvariantError::BadTarget(alloc::format!(
                    "the {} end of {edge} is at {at}, not {v}",
                    side.as_str()
                )));
            }
            e.matrix = match side {
                EndSide::From => e.matrix.twist_from_side(k),
                EndSide::To => e.matrix.twist_to_side(k),
            };
        }
    }
    Ok(())
}

/// Whether the fundamental group of the piece is residually `p` (`p` prime):
/// every cone order is a power of `p`, and the base is orientable unless
/// `p = 2`. A minor piece has the Klein-bottle group with no cones, which is
/// residually 2 only.
pub fn is_residually_p(piece: &SeifertPiece, p: u64) -> bool {
    match piece {
        SeifertPiece::Minor => p == 2,
        SeifertPiece::Major(base) => {
            (p == 2 || base.orientable) && base.cones.iter().all(|c| is_power_of(&c.p, p))
        }
    }
}

fn is_power_of(n: &BigInt, p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let p = BigInt::from(p);
    let mut n = n.clone();
    if n <= BigInt::one() {
        return false;
    }
    while (&n % &p).is_zero() {
        n /= &p;
    }
    n.is_one()
}

/// Vertex ids whose total slope is non-zero, in id order.
pub fn nonzero_slopes(m: &GraphManifold) -> Vec<String> {
    m.vertices.keys().filter(|v| !total_slope(m, v).is_zero()).cloned().collect()
}
