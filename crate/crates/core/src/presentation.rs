//! Finite presentations of the fundamental group of a graph manifold.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::model::{EndSide, GraphManifold, SeifertPiece};

/// `generator^exponent`, with `generator` an index into
/// [`Presentation::generators`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub generator: usize,
    pub exponent: BigInt,
}

impl Syllable {
    pub fn new(generator: usize, exponent: impl Into<BigInt>) -> Self {
        Syllable { generator, exponent: exponent.into() }
    }
}

pub type Word = Vec<Syllable>;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Presentation {
    pub generators: Vec<String>,
    pub relators: Vec<Word>,
}

impl Presentation {
    /// Free group on the given names.
    pub fn free<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Self {
        Presentation { generators: names.into_iter().map(Into::into).collect(), relators: Vec::new() }
    }

    pub fn with_relator(mut self, word: Word) -> Self {
        self.relators.push(word);
        self
    }

    fn add_generator(&mut self, name: String) -> usize {
        self.generators.push(name);
        self.generators.len() - 1
    }

    fn add_relator(&mut self, word: Word) {
        self.relators.push(reduce(word));
    }
}

/// Merges adjacent syllables on the same generator and drops zero exponents.
pub fn reduce(word: Word) -> Word {
    let mut out: Word = Vec::with_capacity(word.len());
    for s in word {
        if s.exponent.is_zero() {
            continue;
        }
        match out.last_mut() {
            Some(last) if last.generator == s.generator => {
                last.exponent += s.exponent;
                if last.exponent.is_zero() {
                    out.pop();
                }
            }
            _ => out.push(s),
        }
    }
    out
}

pub fn inverse(word: &[Syllable]) -> Word {
    word.iter().rev().map(|s| Syllable { generator: s.generator, exponent: -&s.exponent }).collect()
}

/// `word^k`. Single-syllable words scale their exponent; longer words are
/// repeated.
fn power(word: &[Syllable], k: &BigInt) -> Word {
    if word.len() == 1 {
        return vec![Syllable { generator: word[0].generator, exponent: &word[0].exponent * k }];
    }
    let base = if k.is_negative() { inverse(word) } else { word.to_vec() };
    let n = k.abs().to_usize().expect("word power too large");
    let mut out = Vec::with_capacity(base.len() * n);
    for _ in 0..n {
        out.extend(base.iter().cloned());
    }
    out
}

fn g(i: usize) -> Word {
    vec![Syllable::new(i, 1)]
}

fn concat(parts: &[&[Syllable]]) -> Word {
    parts.iter().flat_map(|p| p.iter().cloned()).collect()
}

/// Fibre and section words of one boundary torus.
#[derive(Clone, Debug)]
struct Boundary {
    fibre: Word,
    section: Word,
}

fn vertex_generators(p: &mut Presentation, m: &GraphManifold, v: &str) -> BTreeMap<(usize, EndSide), Boundary> {
    let ends = m.ends_at(v);
    let mut boundaries = BTreeMap::new();
    match m.piece(v) {
        SeifertPiece::Minor => {
            let x = p.add_generator(format!("kx_{v}"));
            let y = p.add_generator(format!("ky_{v}"));
            p.add_relator(vec![Syllable::new(x, 1), Syllable::new(y, 1), Syllable::new(x, -1), Syllable::new(y, 1)]);
            let b = Boundary { fibre: vec![Syllable::new(x, 2)], section: g(y) };
            for end in ends {
                boundaries.insert((end.edge, end.side), b.clone());
            }
        }
        SeifertPiece::Major(base) => {
            let a: Vec<usize> = (1..=base.cones.len()).map(|i| p.add_generator(format!("a{i}_{v}"))).collect();
            let e: Vec<usize> = (1..ends.len().max(1)).map(|i| p.add_generator(format!("e{i}_{v}"))).collect();
            let mut surface: Vec<(usize, Option<usize>)> = Vec::new();
            for i in 1..=base.genus as usize {
                let u = p.add_generator(format!("u{i}_{v}"));
                let w = base.orientable.then(|| p.add_generator(format!("v{i}_{v}")));
                surface.push((u, w));
            }
            let h = p.add_generator(format!("h_{v}"));

            for (c, &ai) in base.cones.iter().zip(&a) {
                p.add_relator(vec![Syllable { generator: ai, exponent: c.p.clone() }, Syllable {
                    generator: h,
                    exponent: c.q.clone(),
                }]);
            }
            let commute = |x: usize| vec![Syllable::new(h, -1), Syllable::new(x, -1), Syllable::new(h, 1), Syllable::new(x, 1)];
            for &x in a.iter().chain(&e) {
                p.add_relator(commute(x));
            }
            for &(u, w) in &surface {
                match w {
                    Some(w) => {
                        p.add_relator(commute(u));
                        p.add_relator(commute(w));
                    }
                    None => p.add_relator(vec![
                        Syllable::new(u, 1),
                        Syllable::new(h, 1),
                        Syllable::new(u, -1),
                        Syllable::new(h, 1),
                    ]),
                }
            }

            let mut product: Word = Vec::new();
            product.extend(a.iter().map(|&x| Syllable::new(x, 1)));
            product.extend(e.iter().map(|&x| Syllable::new(x, 1)));
            for &(u, w) in &surface {
                match w {
                    Some(w) => product.extend([
                        Syllable::new(u, -1),
                        Syllable::new(w, -1),
                        Syllable::new(u, 1),
                        Syllable::new(w, 1),
                    ]),
                    None => product.push(Syllable::new(u, 2)),
                }
            }
            let e0 = reduce(inverse(&product));
            for (k, end) in ends.iter().enumerate() {
                let section = if k == 0 { e0.clone() } else { g(e[k - 1]) };
                boundaries.insert((end.edge, end.side), Boundary { fibre: g(h), section });
            }
        }
    }
    boundaries
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut c = x;
    while parent[c] != r {
        let next = parent[c];
        parent[c] = r;
        c = next;
    }
    r
}

/// Builds the standard presentation: vertex groups in vertex id order, then
/// one stable letter per edge outside a greedy spanning tree (edges taken in
/// id order; loops never join the tree).
pub fn build_presentation(m: &GraphManifold) -> Presentation {
    let mut p = Presentation::default();
    let mut boundaries: BTreeMap<(usize, EndSide), Boundary> = BTreeMap::new();
    for v in m.vertices.keys() {
        boundaries.extend(vertex_generators(&mut p, m, v));
    }

    let index: BTreeMap<&str, usize> = m.vertices.keys().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let mut parent: Vec<usize> = (0..index.len()).collect();
    let mut order: Vec<usize> = (0..m.edges.len()).collect();
    order.sort_by(|&a, &b| m.edges[a].id.cmp(&m.edges[b].id));

    let mut edge_relators: Vec<(usize, Option<usize>)> = Vec::new();
    let mut stable = Vec::new();
    for &i in &order {
        let e = &m.edges[i];
        let (rx, ry) = (find(&mut parent, index[e.from.as_str()]), find(&mut parent, index[e.to.as_str()]));
        if rx != ry {
            parent[rx] = ry;
            edge_relators.push((i, None));
        } else {
            stable.push(i);
        }
    }
    for &i in &stable {
        let t = p.add_generator(format!("t_{}", m.edges[i].id));
        edge_relators.push((i, Some(t)));
    }
    edge_relators.sort_by(|a, b| m.edges[a.0].id.cmp(&m.edges[b.0].id));

    for (i, t) in edge_relators {
        let a = &m.edges[i].matrix;
        let bx = &boundaries[&(i, EndSide::From)];
        let by = &boundaries[&(i, EndSide::To)];
        let conj = |w: &[Syllable]| -> Word {
            match t {
                Some(t) => concat(&[&[Syllable::new(t, -1)], w, &[Syllable::new(t, 1)]]),
                None => w.to_vec(),
            }
        };
        let fibre_rel = concat(&[
            &conj(&inverse(&bx.fibre)),
            &power(&by.fibre, &a.alpha),
            &power(&by.section, &a.gamma),
        ]);
        let section_rel = concat(&[
            &conj(&inverse(&bx.section)),
            &power(&by.fibre, &a.beta),
            &power(&by.section, &a.delta),
        ]);
        p.add_relator(fibre_rel);
        p.add_relator(section_rel);
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn generator_counts() {
        let w1 = build_presentation(&fixtures::w1());
        assert_eq!(w1.generators, ["a1_x", "a2_x", "h_x", "a1_y", "a2_y", "h_y"]);
        assert_eq!(w1.relators.len(), 10);
        let tri = build_presentation(&fixtures::tri());
        assert_eq!(tri.generators.len(), 10);
        assert_eq!(tri.generators.last().map(String::as_str), Some("t_e31"));
        let min = build_presentation(&fixtures::min());
        assert_eq!(min.generators, ["a1_x", "a2_x", "h_x", "kx_y", "ky_y"]);
    }

    #[test]
    fn stable_output() {
        for m in fixtures::all() {
            assert_eq!(build_presentation(&m), build_presentation(&m.clone()));
        }
    }

    #[test]
    fn relators_reference_valid_generators() {
        for m in fixtures::all() {
            let p = build_presentation(&m);
            for r in &p.relators {
                assert!(r.iter().all(|s| s.generator < p.generators.len() && !s.exponent.is_zero()));
            }
        }
    }

    #[test]
    fn w1_edge_relator() {
        // h_x^-1 h_y^2 (a1_y a2_y)^-5
        let p = build_presentation(&fixtures::w1());
        let r = &p.relators[8];
        assert_eq!(r[0], Syllable::new(2, -1));
        assert_eq!(r[1], Syllable::new(5, 2));
        assert_eq!(r.len(), 2 + 10);
    }

    #[test]
    fn reduction() {
        let w = vec![Syllable::new(0, 1), Syllable::new(0, -1), Syllable::new(1, 2), Syllable::new(1, 0)];
        assert_eq!(reduce(w), vec![Syllable::new(1, 2)]);
    }
}
