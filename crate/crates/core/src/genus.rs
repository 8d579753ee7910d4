//! κ-scaled partners and the finite profinite genus.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::decider::{bounded_modulus, check_homeomorphic, DecideError};
use crate::invariants::{all_slopes_zero, bipartition, total_slope, Bipartition};
use crate::kappa::{gcd, signed_power, units};
use crate::model::{EdgeEnd, EndSide, GluingMatrix, GraphManifold, SeifertPiece};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScaleError {
    NotBipartite,
    MinorPiece,
    NonzeroSlope,
    NotUnit { kappa: u64, modulus: u64 },
    Modulus(DecideError),
}

impl fmt::Display for ScaleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScaleError::NotBipartite => f.write_str("graph is not bipartite"),
            ScaleError::MinorPiece => f.write_str("manifold has a minor piece"),
            ScaleError::NonzeroSlope => f.write_str("some total slope is nonzero"),
            ScaleError::NotUnit { kappa, modulus } => write!(f, "{kappa} is not a unit modulo {modulus}"),
            ScaleError::Modulus(e) => write!(f, "{e}"),
        }
    }
}

fn residue(x: &BigInt, n: u64) -> u64 {
    x.mod_floor(&BigInt::from(n)).to_u64().expect("residue fits")
}

fn scaled(k: u64, x: &BigInt, n: u64) -> u64 {
    ((k as u128 * residue(x, n) as u128) % n as u128) as u64
}

// Least absolute residue in (−n/2, n/2].
fn least_abs(r: u64, n: u64) -> BigInt {
    if 2 * r > n {
        BigInt::from(r) - BigInt::from(n)
    } else {
        BigInt::from(r)
    }
}

/// Scales the Seifert data of `m` by `κ` on the red class and by `κ⁻¹` on the
/// blue class of `bip`, then restores zero slopes by a twist at the first end
/// of each vertex.
pub fn construct_scaled(m: &GraphManifold, kappa: u64, bip: &Bipartition) -> Result<GraphManifold, ScaleError> {
    if bipartition(m).is_none() {
        return Err(ScaleError::NotBipartite);
    }
    if m.vertices.values().any(SeifertPiece::is_minor) {
        return Err(ScaleError::MinorPiece);
    }
    if !all_slopes_zero(m) {
        return Err(ScaleError::NonzeroSlope);
    }
    let modulus = bounded_modulus(&m.modulus()).map_err(ScaleError::Modulus)?;
    if modulus > 1 && gcd(kappa % modulus, modulus) != 1 {
        return Err(ScaleError::NotUnit { kappa, modulus });
    }

    let mut out = m.clone();
    out.name = format!("{}-k{}", m.name, kappa);
    for (v, piece) in out.vertices.iter_mut() {
        let SeifertPiece::Major(base) = piece else { unreachable!() };
        let s = bip.exponent(v);
        for c in base.cones.iter_mut() {
            let p = c.p.to_u64().expect("cone order below modulus cap");
            c.q = BigInt::from(scaled(signed_power(kappa, s, p), &c.q, p));
        }
    }

    // New outward δ per end: index 0 = From, 1 = To.
    let mut delta: Vec<[BigInt; 2]> = Vec::with_capacity(m.edges.len());
    for (i, e) in m.edges.iter().enumerate() {
        let n = e.matrix.gamma.abs().to_u64().expect("gamma below modulus cap");
        let mut pair = [BigInt::zero(), BigInt::zero()];
        for (slot, side) in [EndSide::From, EndSide::To].into_iter().enumerate() {
            let end = EdgeEnd { edge: i, side };
            let outward = m.end_matrix(end);
            let s = bip.exponent(m.end_vertex(end));
            pair[slot] = least_abs(scaled(signed_power(kappa, s, n), &outward.delta, n), n);
        }
        delta.push(pair);
    }
    let slot = |side: EndSide| if side == EndSide::From { 0 } else { 1 };

    // Slope excess is an integer once the residues match; cancel it on the
    // first end at each vertex.
    for v in m.vertices.keys() {
        let mut tau = crate::rational::Rational::zero();
        for end in m.ends_at(v) {
            let gamma = &m.edges[end.edge].matrix.gamma;
            tau += &crate::rational::Rational::new(delta[end.edge][slot(end.side)].clone(), gamma.clone());
        }
        for c in &out.piece(v).base().expect("major").cones {
            tau -= &crate::rational::Rational::new(c.q.clone(), c.p.clone());
        }
        assert!(tau.is_integer(), "slope excess at {v} is not integral");
        let excess = tau.numer().clone();
        if let Some(first) = m.ends_at(v).into_iter().next() {
            let gamma = &m.edges[first.edge].matrix.gamma;
            delta[first.edge][slot(first.side)] -= &excess * gamma;
        }
    }

    for (e, [d_from, d_to]) in out.edges.iter_mut().zip(delta) {
        let gamma = e.matrix.gamma.clone();
        let alpha = -d_to;
        let num = &alpha * &d_from + BigInt::one();
        let (beta, rem) = num.div_rem(&gamma);
        assert!(rem.is_zero(), "non-integral beta on edge {}", e.id);
        e.matrix = GluingMatrix { alpha, beta, gamma, delta: d_from };
    }
    debug_assert!(out.vertices.keys().all(|v| total_slope(&out, v).is_zero()));
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RigidityReason {
    NonBipartite,
    NonzeroSlope,
    MinorPiece,
    TrivialUnitGroup,
    GenusCollapse,
    NotRigid,
}

impl RigidityReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RigidityReason::NonBipartite => "NON_BIPARTITE",
            RigidityReason::NonzeroSlope => "NONZERO_SLOPE",
            RigidityReason::MinorPiece => "MINOR_PIECE",
            RigidityReason::TrivialUnitGroup => "TRIVIAL_UNIT_GROUP",
            RigidityReason::GenusCollapse => "GENUS_COLLAPSE",
            RigidityReason::NotRigid => "NOT_RIGID",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusResult {
    /// Pairwise non-homeomorphic; the input comes first.
    pub representatives: Vec<GraphManifold>,
    /// Scale factor that produced each representative (1 for the input).
    pub kappas: Vec<u64>,
    /// Modulus of the unit search, when one was run.
    pub modulus: Option<u64>,
    pub rigid: bool,
    pub reason: RigidityReason,
}

fn rigid(m: &GraphManifold, reason: RigidityReason, modulus: Option<u64>) -> GenusResult {
    GenusResult { representatives: alloc::vec![m.clone()], kappas: alloc::vec![1], modulus, rigid: true, reason }
}

/// Representatives of the profinite genus of `m`, up to homeomorphism.
pub fn profinite_genus(m: &GraphManifold) -> Result<GenusResult, DecideError> {
    let Some(bip) = bipartition(m) else {
        return Ok(rigid(m, RigidityReason::NonBipartite, None));
    };
    if m.vertices.values().any(SeifertPiece::is_minor) {
        return Ok(rigid(m, RigidityReason::MinorPiece, None));
    }
    if !all_slopes_zero(m) {
        return Ok(rigid(m, RigidityReason::NonzeroSlope, None));
    }
    let modulus = bounded_modulus(&m.modulus())?;
    if modulus <= 2 {
        return Ok(rigid(m, RigidityReason::TrivialUnitGroup, Some(modulus)));
    }

    let mut representatives = alloc::vec![m.clone()];
    let mut kappas = alloc::vec![1];
    for kappa in units(modulus).into_iter().filter(|&k| k != 1) {
        let n = construct_scaled(m, kappa, &bip).expect("preconditions checked above");
        if representatives.iter().all(|r| check_homeomorphic(r, &n).is_none()) {
            representatives.push(n);
            kappas.push(kappa);
        }
    }
    let rigid = representatives.len() == 1;
    let reason = if rigid { RigidityReason::GenusCollapse } else { RigidityReason::NotRigid };
    Ok(GenusResult { representatives, kappas, modulus: Some(modulus), rigid, reason })
}

pub fn is_profinitely_rigid(m: &GraphManifold) -> Result<(bool, RigidityReason), DecideError> {
    profinite_genus(m).map(|g| (g.rigid, g.reason))
}
