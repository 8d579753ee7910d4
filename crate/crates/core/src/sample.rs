//! Random manifolds and random homeomorphism-preserving move sequences.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::invariants::{bipartition, fiber_flip, total_slope, twist_move, TwistTarget};
use crate::model::{mirror, validate, ConePoint, EndSide, GluingMatrix, GraphManifold, SeifertPiece};

#[derive(Clone, Copy, Debug)]
pub struct SampleParams {
    pub max_vertices: usize,
    pub max_cone_order: i64,
    pub max_entry: i64,
}

impl Default for SampleParams {
    fn default() -> Self {
        SampleParams { max_vertices: 5, max_cone_order: 7, max_entry: 9 }
    }
}

/// A gluing matrix with determinant −1, `γ ≠ 0` and entries bounded by `bound`.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> GluingMatrix {
    loop {
        let gamma = loop {
            let g = rng.gen_range(-bound..=bound);
            if g != 0 {
                break g;
            }
        };
        let delta = rng.gen_range(-bound..=bound);
        if delta.gcd(&gamma) != 1 {
            continue;
        }
        let alphas: Vec<i64> = (-bound..=bound)
            .filter(|a| (a * delta + 1) % gamma == 0 && ((a * delta + 1) / gamma).abs() <= bound)
            .collect();
        if let Some(&alpha) = alphas.choose(rng) {
            return GluingMatrix::new(alpha, (alpha * delta + 1) / gamma, gamma, delta);
        }
    }
}

fn random_cone<R: Rng + ?Sized>(rng: &mut R, max_p: i64) -> ConePoint {
    let p = rng.gen_range(2..=max_p);
    loop {
        let q = rng.gen_range(-p..=p);
        if q != 0 && q.gcd(&p) == 1 {
            return ConePoint::new(p, q);
        }
    }
}

fn vertex_id(i: usize) -> String {
    format!("v{i}")
}

// A random spanning tree plus up to two extra edges. With `bipartite`, every
// vertex takes the opposite colour of its tree parent and extra edges join
// opposite colours only; loops are then excluded.
fn random_edges<R: Rng + ?Sized>(rng: &mut R, n: usize, bipartite: bool) -> Vec<(usize, usize)> {
    let mut pairs = Vec::new();
    let mut colour = alloc::vec![false; n];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        colour[i] = !colour[j];
        pairs.push(if rng.gen_bool(0.5) { (i, j) } else { (j, i) });
    }
    for _ in 0..rng.gen_range(0..=2usize) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if bipartite && colour[a] == colour[b] {
            continue;
        }
        pairs.push((a, b));
    }
    if n == 1 && pairs.is_empty() {
        pairs.push((0, 0));
    }
    pairs
}

fn ensure_hyperbolic<R: Rng + ?Sized>(rng: &mut R, m: &mut GraphManifold, max_p: i64) {
    let ids: Vec<String> = m.vertices.keys().cloned().collect();
    for v in ids {
        let degree = m.degree(&v);
        let Some(SeifertPiece::Major(base)) = m.vertices.get_mut(&v) else { continue };
        while !crate::model::euler_char_of(base, degree).is_negative() {
            base.cones.push(random_cone(rng, max_p));
        }
    }
}

/// A random manifold that passes [`validate`]. Minor pieces appear only at
/// leaves.
pub fn random_manifold<R: Rng + ?Sized>(rng: &mut R, params: SampleParams) -> GraphManifold {
    loop {
        let n = rng.gen_range(1..=params.max_vertices);
        let pairs = random_edges(rng, n, false);
        let mut m = GraphManifold::new("random");
        let degree = |v: usize| pairs.iter().map(|&(a, b)| usize::from(a == v) + usize::from(b == v)).sum::<usize>();
        for v in 0..n {
            let neighbour_major = pairs
                .iter()
                .find_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
                .is_some_and(|u| degree(u) > 1);
            let piece = if n > 1 && degree(v) == 1 && neighbour_major && rng.gen_bool(0.25) {
                SeifertPiece::Minor
            } else {
                let orientable = rng.gen_bool(0.8);
                let genus = if orientable { rng.gen_range(0..=1) } else { rng.gen_range(1..=2) };
                let cones = (0..rng.gen_range(0..=3)).map(|_| random_cone(rng, params.max_cone_order)).collect();
                SeifertPiece::major(genus, orientable, cones)
            };
            m = m.with_vertex(&vertex_id(v), piece);
        }
        for (k, &(a, b)) in pairs.iter().enumerate() {
            m = m.with_edge(&format!("e{k}"), &vertex_id(a), &vertex_id(b), random_matrix(rng, params.max_entry));
        }
        ensure_hyperbolic(rng, &mut m, params.max_cone_order);
        if validate(&m).ok {
            return m;
        }
    }
}

/// A random manifold with a bipartite graph, no minor pieces and every total
/// slope zero.
pub fn random_zero_slope<R: Rng + ?Sized>(rng: &mut R, params: SampleParams) -> GraphManifold {
    loop {
        let n = rng.gen_range(2..=params.max_vertices.max(2));
        let pairs = random_edges(rng, n, true);
        let mut m = GraphManifold::new("random-bipartite");
        for v in 0..n {
            let genus = if rng.gen_bool(0.2) { 1 } else { 0 };
            m = m.with_vertex(&vertex_id(v), SeifertPiece::major(genus, true, Vec::new()));
        }
        for (k, &(a, b)) in pairs.iter().enumerate() {
            m = m.with_edge(&format!("e{k}"), &vertex_id(a), &vertex_id(b), random_matrix(rng, params.max_entry));
        }

        let ids: Vec<String> = m.vertices.keys().cloned().collect();
        for v in &ids {
            let mut cones = Vec::new();
            for end in m.ends_at(v) {
                let a = m.end_matrix(end);
                let p = a.gamma.abs();
                if p > BigInt::from(1) {
                    let q = (&a.delta * a.gamma.signum()).mod_floor(&p);
                    cones.push(ConePoint { p, q });
                }
            }
            for _ in 0..rng.gen_range(0..=1) {
                let c = random_cone(rng, params.max_cone_order);
                cones.push(ConePoint { p: c.p.clone(), q: -&c.q });
                cones.push(c);
            }
            let SeifertPiece::Major(base) = m.vertices.get_mut(v).unwrap() else { unreachable!() };
            base.cones = cones;
            while !crate::model::euler_char_of(base, m_degree(&pairs, v)).is_negative() {
                base.cones.push(ConePoint::new(2, 1));
                base.cones.push(ConePoint::new(2, -1));
            }
        }
        for v in &ids {
            let tau = total_slope(&m, v);
            assert!(tau.is_integer());
            if tau.is_zero() {
                continue;
            }
            let end = m.ends_at(v)[0];
            let k = -tau.numer().clone();
            let idx = end.edge;
            m.edges[idx].matrix = match end.side {
                EndSide::From => m.edges[idx].matrix.twist_from_side(&k),
                EndSide::To => m.edges[idx].matrix.twist_to_side(&k),
            };
        }
        if validate(&m).ok && bipartition(&m).is_some() && crate::invariants::all_slopes_zero(&m) {
            return m;
        }
    }
}

fn m_degree(pairs: &[(usize, usize)], v: &str) -> usize {
    let i: usize = v[1..].parse().expect("generated id");
    pairs.iter().map(|&(a, b)| usize::from(a == i) + usize::from(b == i)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    Flip(String),
    Twist { vertex: String, a: TwistTarget, b: TwistTarget, k: i64 },
    Mirror,
}

/// One random fibre flip, paired twist or mirror; the result is homeomorphic
/// to `m`.
pub fn random_move<R: Rng + ?Sized>(rng: &mut R, m: &GraphManifold) -> (Move, GraphManifold) {
    let ids: Vec<&String> = m.vertices.keys().collect();
    loop {
        match rng.gen_range(0..3) {
            0 => {
                let v = ids.choose(rng).unwrap().as_str();
                return (Move::Flip(v.into()), fiber_flip(m, v));
            }
            1 => {
                let majors: Vec<&&String> = ids.iter().filter(|v| !m.piece(v).is_minor()).collect();
                let Some(v) = majors.choose(rng) else { continue };
                let mut targets: Vec<TwistTarget> = Vec::new();
                let cones = m.piece(v).base().map_or(0, |b| b.cones.len());
                targets.extend((0..cones).map(TwistTarget::Cone));
                targets.extend(
                    m.ends_at(v)
                        .into_iter()
                        .map(|e| TwistTarget::EdgeEnd { edge: m.edges[e.edge].id.clone(), side: e.side }),
                );
                if targets.len() < 2 {
                    continue;
                }
                let chosen: Vec<TwistTarget> = targets.choose_multiple(rng, 2).cloned().collect();
                let k = loop {
                    let k = rng.gen_range(-2i64..=2);
                    if k != 0 {
                        break k;
                    }
                };
                let out = twist_move(m, v, &chosen[0], &chosen[1], &BigInt::from(k)).expect("valid twist");
                let mv = Move::Twist { vertex: (**v).clone(), a: chosen[0].clone(), b: chosen[1].clone(), k };
                return (mv, out);
            }
            _ => return (Move::Mirror, mirror(m)),
        }
    }
}

/// Up to `max_len` random moves.
pub fn random_moves<R: Rng + ?Sized>(rng: &mut R, m: &GraphManifold, max_len: usize) -> (Vec<Move>, GraphManifold) {
    let len = rng.gen_range(0..=max_len);
    let mut cur = m.clone();
    let mut moves = Vec::with_capacity(len);
    for _ in 0..len {
        let (mv, next) = random_move(rng, &cur);
        moves.push(mv);
        cur = next;
    }
    (moves, cur)
}

/// Largest absolute matrix entry; used to keep samples small.
pub fn max_entry(m: &GraphManifold) -> i64 {
    m.edges
        .iter()
        .flat_map(|e| [&e.matrix.alpha, &e.matrix.beta, &e.matrix.gamma, &e.matrix.delta])
        .map(|x| x.abs().to_i64().unwrap_or(i64::MAX))
        .max()
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn samples_are_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let m = random_manifold(&mut rng, SampleParams::default());
            assert!(validate(&m).ok);
            assert!(m.vertices.len() <= 5);
            assert!(max_entry(&m) <= 9);
            let z = random_zero_slope(&mut rng, SampleParams { max_vertices: 4, ..SampleParams::default() });
            assert!(validate(&z).ok && bipartition(&z).is_some());
        }
    }

    #[test]
    fn moves_keep_validity() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let m = random_manifold(&mut rng, SampleParams::default());
            let (_, n) = random_moves(&mut rng, &m, 5);
            assert!(validate(&n).ok);
        }
    }
}
