//! Homeomorphism and profinite-isomorphism decisions for graph manifolds.
//!
//! Both deciders work on candidate graph isomorphisms that preserve
//! [`vertex_signature`]. For a candidate, fibre orientations of the second
//! manifold are chosen so that every `γ` agrees; the remaining conditions are
//! then integrality of Dehn twists (homeomorphism) or congruences on a unit
//! `κ` (profinite isomorphism, bipartite graphs with vanishing slopes only).

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::ControlFlow;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::invariants::{all_slopes_zero, bipartition, Bipartition};
use crate::kappa::{inverse_mod, kappa_solutions, scale_residue, signed_power, KappaConstraint};
use crate::model::{mirror, vertex_signature, ConePoint, EndSide, GluingMatrix, GraphManifold, SeifertPiece};
use crate::rational::Rational;

/// Largest modulus the κ search will enumerate.
pub const MAX_MODULUS: u64 = 10_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecideError {
    ModulusTooLarge(BigInt),
}

impl fmt::Display for DecideError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecideError::ModulusTooLarge(m) => {
                write!(f, "unit search modulo {m} exceeds the limit of {MAX_MODULUS}")
            }
        }
    }
}

/// Where an edge of the first manifold goes. `reversed` is set when the
/// image's stored direction runs against the source's.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeImage {
    pub edge: String,
    pub reversed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IsoCandidate {
    pub vertex_map: BTreeMap<String, String>,
    pub edge_map: BTreeMap<String, EdgeImage>,
}

impl IsoCandidate {
    pub fn inverse(&self, m1: &GraphManifold) -> IsoCandidate {
        let _ = m1;
        IsoCandidate {
            vertex_map: self.vertex_map.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
            edge_map: self
                .edge_map
                .iter()
                .map(|(a, img)| (img.edge.clone(), EdgeImage { edge: a.clone(), reversed: img.reversed }))
                .collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Candidate enumeration

fn pair_key(a: usize, b: usize) -> (usize, usize) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

struct GraphIndex<'a> {
    ids: Vec<&'a String>,
    // Edge indices sorted by edge id, grouped by unordered endpoint pair.
    groups: BTreeMap<(usize, usize), Vec<usize>>,
    counts: BTreeMap<(usize, usize), usize>,
}

impl<'a> GraphIndex<'a> {
    fn new(m: &'a GraphManifold) -> Self {
        let ids: Vec<&String> = m.vertices.keys().collect();
        let pos: BTreeMap<&str, usize> = ids.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut order: Vec<usize> = (0..m.edges.len()).collect();
        order.sort_by(|&a, &b| m.edges[a].id.cmp(&m.edges[b].id));
        let mut groups: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for i in order {
            let e = &m.edges[i];
            let key = pair_key(pos[e.from.as_str()], pos[e.to.as_str()]);
            groups.entry(key).or_default().push(i);
        }
        let counts = groups.iter().map(|(k, v)| (*k, v.len())).collect();
        GraphIndex { ids, groups, counts }
    }

    fn count(&self, a: usize, b: usize) -> usize {
        self.counts.get(&pair_key(a, b)).copied().unwrap_or(0)
    }
}

/// Visits every incidence-preserving bijection whose matched vertices have
/// equal signatures, in lexicographic order of vertex ids, then edge ids.
/// Loops are visited in both orientations.
pub fn for_each_iso_candidate<F>(m1: &GraphManifold, m2: &GraphManifold, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&IsoCandidate) -> ControlFlow<()>,
{
    if m1.vertices.len() != m2.vertices.len() || m1.edges.len() != m2.edges.len() {
        return ControlFlow::Continue(());
    }
    let g1 = GraphIndex::new(m1);
    let g2 = GraphIndex::new(m2);
    let sig1: Vec<_> = g1.ids.iter().map(|v| vertex_signature(m1, v)).collect();
    let sig2: Vec<_> = g2.ids.iter().map(|v| vertex_signature(m2, v)).collect();
    let n = g1.ids.len();
    let mut assign: Vec<usize> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    assign_vertices(m1, m2, &g1, &g2, &sig1, &sig2, &mut assign, &mut used, &mut visit)
}

#[allow(clippy::too_many_arguments)]
fn assign_vertices<F>(
    m1: &GraphManifold,
    m2: &GraphManifold,
    g1: &GraphIndex,
    g2: &GraphIndex,
    sig1: &[crate::model::Signature],
    sig2: &[crate::model::Signature],
    assign: &mut Vec<usize>,
    used: &mut [bool],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&IsoCandidate) -> ControlFlow<()>,
{
    let i = assign.len();
    if i == sig1.len() {
        return assign_edges(m1, m2, g1, g2, assign, visit);
    }
    for j in 0..sig2.len() {
        if used[j] || sig1[i] != sig2[j] {
            continue;
        }
        assign.push(j);
        let consistent = (0..=i).all(|k| g1.count(i, k) == g2.count(j, assign[k]));
        if consistent {
            used[j] = true;
            let flow = assign_vertices(m1, m2, g1, g2, sig1, sig2, assign, used, visit);
            used[j] = false;
            if flow.is_break() {
                assign.pop();
                return flow;
            }
        }
        assign.pop();
    }
    ControlFlow::Continue(())
}

fn assign_edges<F>(
    m1: &GraphManifold,
    m2: &GraphManifold,
    g1: &GraphIndex,
    g2: &GraphIndex,
    assign: &[usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&IsoCandidate) -> ControlFlow<()>,
{
    let vertex_map: BTreeMap<String, String> =
        g1.ids.iter().zip(assign).map(|(a, &j)| ((*a).clone(), g2.ids[j].clone())).collect();
    // Source edges in group order; each paired with its target group.
    let mut slots: Vec<(usize, &[usize])> = Vec::new();
    for (&(a, b), edges) in &g1.groups {
        let target = g2.groups.get(&pair_key(assign[a], assign[b])).map(Vec::as_slice).unwrap_or(&[]);
        for &e in edges {
            slots.push((e, target));
        }
    }
    let mut chosen: Vec<EdgeImage> = Vec::with_capacity(slots.len());
    let mut used: BTreeSet<usize> = BTreeSet::new();
    edge_recurse(m1, m2, g1, &vertex_map, &slots, &mut chosen, &mut used, visit)
}

#[allow(clippy::too_many_arguments)]
fn edge_recurse<F>(
    m1: &GraphManifold,
    m2: &GraphManifold,
    g1: &GraphIndex,
    vertex_map: &BTreeMap<String, String>,
    slots: &[(usize, &[usize])],
    chosen: &mut Vec<EdgeImage>,
    used: &mut BTreeSet<usize>,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&IsoCandidate) -> ControlFlow<()>,
{
    let t = chosen.len();
    if t == slots.len() {
        let edge_map = slots
            .iter()
            .zip(chosen.iter())
            .map(|((e, _), img)| (m1.edges[*e].id.clone(), img.clone()))
            .collect();
        let cand = IsoCandidate { vertex_map: vertex_map.clone(), edge_map };
        return visit(&cand);
    }
    let (e, targets) = slots[t];
    let src = &m1.edges[e];
    let _ = g1;
    for &e2 in targets {
        if used.contains(&e2) {
            continue;
        }
        let img = &m2.edges[e2];
        let orientations: &[bool] = if src.from == src.to {
            &[false, true]
        } else if vertex_map[&src.from] == img.from {
            &[false]
        } else {
            &[true]
        };
        for &reversed in orientations {
            used.insert(e2);
            chosen.push(EdgeImage { edge: img.id.clone(), reversed });
            let flow = edge_recurse(m1, m2, g1, vertex_map, slots, chosen, used, visit);
            chosen.pop();
            used.remove(&e2);
            flow?;
        }
    }
    ControlFlow::Continue(())
}

/// All signature-preserving graph isomorphisms from `m1` to `m2`.
pub fn iso_candidates(m1: &GraphManifold, m2: &GraphManifold) -> Vec<IsoCandidate> {
    let mut out = Vec::new();
    let _ = for_each_iso_candidate(m1, m2, |c| {
        out.push(c.clone());
        ControlFlow::Continue(())
    });
    out
}

// ---------------------------------------------------------------------------
// Fibre orientation alignment

struct Alignment {
    /// Sign per vertex of `m1` (the flip is applied at its image).
    vertex_sign: BTreeMap<String, i8>,
    /// Extra sign per edge, only ever −1 on edges touching a non-orientable base.
    edge_sign: Vec<i8>,
    /// Image matrices read in the source edge's direction, after flips and
    /// edge signs; their `γ` equals the source's.
    aligned: Vec<GluingMatrix>,
}

impl Alignment {
    fn flips(&self, cand: &IsoCandidate) -> BTreeSet<String> {
        self.vertex_sign
            .iter()
            .filter(|(_, &s)| s < 0)
            .map(|(v, _)| cand.vertex_map[v].clone())
            .collect()
    }

    fn edge_signs(&self, m1: &GraphManifold) -> BTreeMap<String, i8> {
        m1.edges
            .iter()
            .zip(&self.edge_sign)
            .filter(|(e, _)| !(m1.piece(&e.from).has_orientable_base() && m1.piece(&e.to).has_orientable_base()))
            .map(|(e, &s)| (e.id.clone(), s))
            .collect()
    }
}

fn image_matrix(m2: &GraphManifold, img: &EdgeImage) -> GluingMatrix {
    let e = &m2.edges[m2.edge_index(&img.edge).expect("candidate edge exists")];
    if img.reversed {
        e.matrix.inverse_unchecked()
    } else {
        e.matrix.clone()
    }
}

/// Chooses fibre orientations on `m2` so that every `γ` matches `m1`.
/// Orientable-orientable edges constrain the product of the two vertex
/// signs; edges touching a non-orientable base take a free edge sign.
fn align(m1: &GraphManifold, m2: &GraphManifold, cand: &IsoCandidate) -> Option<Alignment> {
    let mut raw: Vec<GluingMatrix> = Vec::with_capacity(m1.edges.len());
    let mut sigma: Vec<i8> = Vec::with_capacity(m1.edges.len());
    for e in &m1.edges {
        let a = image_matrix(m2, &cand.edge_map[&e.id]);
        if a.gamma.abs() != e.matrix.gamma.abs() {
            return None;
        }
        sigma.push(if a.gamma == e.matrix.gamma { 1 } else { -1 });
        raw.push(a);
    }
    let constrained = |i: usize| {
        let e = &m1.edges[i];
        m1.piece(&e.from).has_orientable_base() && m1.piece(&e.to).has_orientable_base()
    };

    let mut sign: BTreeMap<String, i8> = BTreeMap::new();
    for root in m1.vertices.keys() {
        if sign.contains_key(root) {
            continue;
        }
        sign.insert(root.clone(), 1);
        let mut stack = vec![root.clone()];
        while let Some(v) = stack.pop() {
            let sv = sign[&v];
            for (i, e) in m1.edges.iter().enumerate() {
                if !constrained(i) || (e.from != v && e.to != v) {
                    continue;
                }
                if e.from == e.to {
                    if sigma[i] < 0 {
                        return None;
                    }
                    continue;
                }
                let other = if e.from == v { &e.to } else { &e.from };
                let want = sv * sigma[i];
                match sign.get(other) {
                    Some(&s) if s != want => return None,
                    Some(_) => {}
                    None => {
                        sign.insert(other.clone(), want);
                        stack.push(other.clone());
                    }
                }
            }
        }
    }

    let mut edge_sign = Vec::with_capacity(m1.edges.len());
    let mut aligned = Vec::with_capacity(m1.edges.len());
    for (i, e) in m1.edges.iter().enumerate() {
        let product = if e.from == e.to { 1 } else { sign[&e.from] * sign[&e.to] };
        edge_sign.push(if constrained(i) { 1 } else { sigma[i] * product });
        aligned.push(if sigma[i] < 0 { raw[i].negated() } else { raw[i].clone() });
    }
    Some(Alignment { vertex_sign: sign, edge_sign, aligned })
}

/// Matches each cone of `c1` to an unused cone of `c2` with the same order
/// whose `q` is congruent to `target(cone)` modulo `p`.
fn match_cones(c1: &[ConePoint], c2: &[ConePoint], target: impl Fn(&ConePoint) -> BigInt) -> Option<Vec<usize>> {
    if c1.len() != c2.len() {
        return None;
    }
    let mut used = vec![false; c2.len()];
    let mut out = Vec::with_capacity(c1.len());
    for c in c1 {
        let want = target(c).mod_floor(&c.p);
        let j = (0..c2.len()).find(|&j| !used[j] && c2[j].p == c.p && c2[j].q.mod_floor(&c.p) == want)?;
        used[j] = true;
        out.push(j);
    }
    Some(out)
}

fn cones_of(piece: &SeifertPiece) -> &[ConePoint] {
    piece.base().map(|b| b.cones.as_slice()).unwrap_or(&[])
}

// ---------------------------------------------------------------------------
// Homeomorphism

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomeoWitness {
    pub iso: IsoCandidate,
    /// The second manifold was mirrored before matching.
    pub mirrored: bool,
    /// Vertices of the second manifold whose fibre orientation is reversed.
    pub flips: BTreeSet<String>,
    /// Extra sign per edge of the first manifold that touches a
    /// non-orientable base.
    pub edge_signs: BTreeMap<String, i8>,
    /// For each vertex of the first manifold: cone `i` goes to cone
    /// `cone_matchings[v][i]` of the image vertex.
    pub cone_matchings: BTreeMap<String, Vec<usize>>,
    /// Dehn twist `r` per edge end of the first manifold.
    pub twists: BTreeMap<(String, EndSide), BigInt>,
}

fn exact_div(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let (q, r) = a.div_rem(b);
    r.is_zero().then_some(q)
}

fn homeo_for_candidate(m1: &GraphManifold, n: &GraphManifold, cand: &IsoCandidate, mirrored: bool) -> Option<HomeoWitness> {
    let al = align(m1, n, cand)?;
    let mut twists: BTreeMap<(String, EndSide), BigInt> = BTreeMap::new();
    for (i, e) in m1.edges.iter().enumerate() {
        let a = &e.matrix;
        let b = &al.aligned[i];
        let r_from = if m1.piece(&e.from).is_minor() {
            (a.delta == b.delta).then(BigInt::zero)?
        } else {
            exact_div(&(&a.delta - &b.delta), &a.gamma)?
        };
        let r_to = if m1.piece(&e.to).is_minor() {
            (a.alpha == b.alpha).then(BigInt::zero)?
        } else {
            exact_div(&(&b.alpha - &a.alpha), &a.gamma)?
        };
        twists.insert((e.id.clone(), EndSide::From), r_from);
        twists.insert((e.id.clone(), EndSide::To), r_to);
    }

    let mut cone_matchings = BTreeMap::new();
    for (v, piece) in &m1.vertices {
        let SeifertPiece::Major(base) = piece else { continue };
        let image = n.piece(&cand.vertex_map[v]);
        let c2 = cones_of(image);
        let matching = match_cones(&base.cones, c2, |c| c.q.clone())?;
        let mut excess = Rational::zero();
        for (c, &j) in base.cones.iter().zip(&matching) {
            excess += &Rational::new(&c.q - &c2[j].q, c.p.clone());
        }
        let mut twist_sum = BigInt::zero();
        for end in m1.ends_at(v) {
            twist_sum += &twists[&(m1.edges[end.edge].id.clone(), end.side)];
        }
        if Rational::from_integer(twist_sum) != excess {
            return None;
        }
        cone_matchings.insert(v.clone(), matching);
    }

    Some(HomeoWitness {
        iso: cand.clone(),
        mirrored,
        flips: al.flips(cand),
        edge_signs: al.edge_signs(m1),
        cone_matchings,
        twists,
    })
}

/// Searches for a homeomorphism from `m1` to `m2` (orientation may be
/// reversed), returning the first witness in canonical order.
pub fn check_homeomorphic(m1: &GraphManifold, m2: &GraphManifold) -> Option<HomeoWitness> {
    for mirrored in [false, true] {
        let n = if mirrored { mirror(m2) } else { m2.clone() };
        let mut found = None;
        let _ = for_each_iso_candidate(m1, &n, |cand| match homeo_for_candidate(m1, &n, cand, mirrored) {
            Some(w) => {
                found = Some(w);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

// ---------------------------------------------------------------------------
// Profinite isomorphism

/// Which class of the second manifold's bipartition receives the first
/// manifold's red class. Red vertices are scaled by `κ`, blue by `κ⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteOrientation {
    pub scaled_class: BTreeSet<String>,
    pub image_is_red: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfiniteWitness {
    pub iso: IsoCandidate,
    pub flips: BTreeSet<String>,
    pub edge_signs: BTreeMap<String, i8>,
    pub kappa: u64,
    pub modulus: u64,
    pub orientation: BipartiteOrientation,
    pub cone_matchings: BTreeMap<String, Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Homeomorphic(HomeoWitness),
    Equivalent(ProfiniteWitness),
    Distinct,
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Homeomorphic(_) => "homeomorphic",
            Verdict::Equivalent(_) => "equivalent",
            Verdict::Distinct => "distinct",
        }
    }

    pub fn is_distinct(&self) -> bool {
        matches!(self, Verdict::Distinct)
    }
}

pub(crate) fn bounded_modulus(m: &BigInt) -> Result<u64, DecideError> {
    m.to_u64().filter(|&v| v <= MAX_MODULUS).ok_or_else(|| DecideError::ModulusTooLarge(m.clone()))
}

fn residue_u64(x: &BigInt, n: u64) -> i64 {
    x.mod_floor(&BigInt::from(n)).to_i64().expect("residue fits")
}

// Cone condition at every vertex: q' ≡ κ^s q (mod p) under some matching.
fn cones_scale(
    m1: &GraphManifold,
    m2: &GraphManifold,
    cand: &IsoCandidate,
    bip: &Bipartition,
    kappa: u64,
) -> Option<BTreeMap<String, Vec<usize>>> {
    let mut out = BTreeMap::new();
    for (v, piece) in &m1.vertices {
        let c1 = cones_of(piece);
        let c2 = cones_of(m2.piece(&cand.vertex_map[v]));
        let s = bip.exponent(v);
        let matching = match_cones(c1, c2, |c| {
            let p = c.p.to_u64().expect("cone order below modulus cap");
            let k = signed_power(kappa, s, p);
            BigInt::from(scale_residue(k, residue_u64(&c.q, p), p))
        })?;
        out.insert(v.clone(), matching);
    }
    Some(out)
}

fn profinite_for_candidate(
    m1: &GraphManifold,
    m2: &GraphManifold,
    cand: &IsoCandidate,
    bip1: &Bipartition,
    bip2: &Bipartition,
    modulus: u64,
) -> Option<ProfiniteWitness> {
    let al = align(m1, m2, cand)?;
    let mut constraints = Vec::new();
    for (i, e) in m1.edges.iter().enumerate() {
        let n = e.matrix.gamma.abs().to_u64().expect("gamma below modulus cap");
        if n == 1 {
            continue;
        }
        let a = &e.matrix;
        let b = &al.aligned[i];
        // δ and α are units mod γ because αδ ≡ −1.
        let pairs = [(&a.delta, &b.delta, bip1.exponent(&e.from)), (&a.alpha, &b.alpha, bip1.exponent(&e.to))];
        for (src, img, s) in pairs {
            let src_inv = inverse_mod(residue_u64(src, n) as u64, n).expect("unit modulo gamma");
            let r = scale_residue(src_inv, residue_u64(img, n), n);
            constraints.push(KappaConstraint::new(r as i64, n, s));
        }
    }
    let kappas = kappa_solutions(&constraints, modulus);
    for kappa in kappas {
        if let Some(cone_matchings) = cones_scale(m1, m2, cand, bip1, kappa) {
            let image_of_red = bip1.red.iter().next().map(|v| cand.vertex_map[v].clone());
            let image_is_red = image_of_red.map(|v| bip2.red.contains(&v)).unwrap_or(true);
            return Some(ProfiniteWitness {
                iso: cand.clone(),
                flips: al.flips(cand),
                edge_signs: al.edge_signs(m1),
                kappa,
                modulus,
                orientation: BipartiteOrientation { scaled_class: bip1.red.clone(), image_is_red },
                cone_matchings,
            });
        }
    }
    None
}

/// Decides whether `m1` and `m2` are homeomorphic, have isomorphic profinite
/// completions without being homeomorphic, or neither.
pub fn check_profinite_iso(m1: &GraphManifold, m2: &GraphManifold) -> Result<Verdict, DecideError> {
    if let Some(w) = check_homeomorphic(m1, m2) {
        return Ok(Verdict::Homeomorphic(w));
    }
    let (Some(bip1), Some(bip2)) = (bipartition(m1), bipartition(m2)) else {
        return Ok(Verdict::Distinct);
    };
    if !all_slopes_zero(m1) || !all_slopes_zero(m2) {
        return Ok(Verdict::Distinct);
    }
    let modulus = bounded_modulus(&m1.modulus().lcm(&m2.modulus()))?;
    let mut found = None;
    let _ = for_each_iso_candidate(m1, m2, |cand| {
        match profinite_for_candidate(m1, m2, cand, &bip1, &bip2, modulus) {
            Some(w) => {
                found = Some(w);
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        }
    });
    Ok(match found {
        Some(w) => Verdict::Equivalent(w),
        None => Verdict::Distinct,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::invariants::{fiber_flip, twist_move, TwistTarget};
    use num_traits::One;

    #[test]
    fn candidate_counts() {
        assert_eq!(iso_candidates(&fixtures::w1(), &fixtures::w1()).len(), 2);
        assert_eq!(iso_candidates(&fixtures::tri(), &fixtures::tri()).len(), 6);
        assert_eq!(iso_candidates(&fixtures::w1(), &fixtures::tri()).len(), 0);
        assert_eq!(iso_candidates(&fixtures::min(), &fixtures::w1()).len(), 0);
    }

    #[test]
    fn candidates_are_deterministic_and_start_with_identity() {
        let a = iso_candidates(&fixtures::tri(), &fixtures::tri());
        let b = iso_candidates(&fixtures::tri(), &fixtures::tri());
        assert_eq!(a, b);
        assert!(a[0].vertex_map.iter().all(|(k, v)| k == v));
    }

    #[test]
    fn loops_are_tried_in_both_directions() {
        let m = GraphManifold::new("loop")
            .with_vertex("a", SeifertPiece::major(0, true, vec![ConePoint::new(2, 1), ConePoint::new(3, 1)]))
            .with_edge("e", "a", "a", GluingMatrix::new(0, 1, 1, 0));
        let cands = iso_candidates(&m, &m);
        assert_eq!(cands.len(), 2);
        assert!(cands[1].edge_map["e"].reversed);
    }

    #[test]
    fn reflexive() {
        for m in fixtures::all() {
            let w = check_homeomorphic(&m, &m).expect("reflexive");
            assert!(w.twists.values().all(Zero::is_zero), "{}", m.name);
            assert!(!w.mirrored);
        }
    }

    #[test]
    fn twisted_w1_is_homeomorphic() {
        let w1 = fixtures::w1();
        let edge = TwistTarget::EdgeEnd { edge: "e".into(), side: EndSide::From };
        let t = twist_move(&w1, "x", &TwistTarget::Cone(0), &edge, &BigInt::one()).unwrap();
        let w = check_homeomorphic(&w1, &t).expect("twist is a homeomorphism");
        assert!(w.twists.values().any(|r| !r.is_zero()));
        assert!(matches!(check_profinite_iso(&w1, &t), Ok(Verdict::Homeomorphic(_))));
    }

    #[test]
    fn w1_n2_equivalent_not_homeomorphic() {
        let (w1, n2) = (fixtures::w1(), fixtures::n2());
        assert!(check_homeomorphic(&w1, &n2).is_none());
        let Verdict::Equivalent(w) = check_profinite_iso(&w1, &n2).unwrap() else { panic!() };
        assert_eq!((w.kappa, w.modulus), (2, 5));
        let Verdict::Equivalent(w) = check_profinite_iso(&n2, &w1).unwrap() else { panic!() };
        assert_eq!((w.kappa, w.modulus), (3, 5));
    }

    #[test]
    fn distinct_examples() {
        assert_eq!(check_profinite_iso(&fixtures::w1(), &fixtures::w1_delta3()), Ok(Verdict::Distinct));
        assert_eq!(check_profinite_iso(&fixtures::tri(), &fixtures::tri_flipped_cone()), Ok(Verdict::Distinct));
        assert_eq!(check_profinite_iso(&fixtures::w1(), &fixtures::tri()), Ok(Verdict::Distinct));
    }

    #[test]
    fn flips_and_mirror_keep_homeomorphism() {
        for m in fixtures::all() {
            let v = m.vertices.keys().next().unwrap().clone();
            let f = fiber_flip(&m, &v);
            assert!(check_homeomorphic(&m, &f).is_some(), "{}", m.name);
            let mm = mirror(&m);
            let w = check_homeomorphic(&m, &mm).expect("mirror");
            assert!(w.mirrored || check_homeomorphic(&m, &m).is_some());
        }
    }

    #[test]
    fn minor_side_twist_is_not_free() {
        // Changing α at the minor end by a multiple of γ is not a Dehn twist
        // of the minor piece.
        let m = fixtures::min();
        let mut n = m.clone();
        n.edges[0].matrix = GluingMatrix::new(4, 3, 3, 2);
        assert_eq!(n.edges[0].matrix.det(), BigInt::from(-1));
        assert!(check_homeomorphic(&m, &n).is_none());

        // The major side keeps its freedom.
        let edge = TwistTarget::EdgeEnd { edge: "e".into(), side: EndSide::From };
        let t = twist_move(&m, "x", &edge, &TwistTarget::Cone(1), &BigInt::from(2)).unwrap();
        assert!(check_homeomorphic(&m, &t).is_some());
    }

    #[test]
    fn nonorientable_edge_sign_is_free() {
        let nonor = |cones: &[(i64, i64)]| {
            SeifertPiece::major(1, false, cones.iter().map(|&(p, q)| ConePoint::new(p, q)).collect())
        };
        let m = GraphManifold::new("no")
            .with_vertex("a", nonor(&[(3, 1)]))
            .with_vertex("b", SeifertPiece::major(0, true, vec![ConePoint::new(3, 1), ConePoint::new(3, 1)]))
            .with_edge("e", "a", "b", GluingMatrix::new(1, 1, 3, 2));
        let mut n = m.clone();
        n.edges[0].matrix = n.edges[0].matrix.negated();
        let w = check_homeomorphic(&m, &n).expect("sign ambiguity at a non-orientable base");
        assert_eq!(w.edge_signs.get("e"), Some(&-1));
    }
}
