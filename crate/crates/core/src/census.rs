//! Homomorphism counts into small permutation groups and low-index subgroup
//! counts. Equal profinite completions force equal counts, so these are a
//! cheap necessary check on decider verdicts.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::model::GraphManifold;
use crate::presentation::{build_presentation, Presentation};
use crate::rational::Rational;

pub const DEFAULT_BUDGET: u64 = 200_000_000;

/// Upper bound on search nodes visited by a single count.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub nodes: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { nodes: DEFAULT_BUDGET }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExceeded {
    pub limit: u64,
}

impl fmt::Display for BudgetExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "search exceeded the budget of {} nodes", self.limit)
    }
}

/// A permutation group on `0..degree`, given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupSpec {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl FiniteGroupSpec {
    pub fn new(name: &str, degree: usize, generators: Vec<Vec<usize>>) -> Self {
        for g in &generators {
            let mut seen = vec![false; degree];
            assert_eq!(g.len(), degree, "permutation of wrong degree in {name}");
            for &i in g {
                assert!(i < degree && !seen[i], "not a permutation in {name}");
                seen[i] = true;
            }
        }
        FiniteGroupSpec { name: name.into(), degree, generators }
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            let mut swap: Vec<usize> = (0..n).collect();
            swap.swap(0, 1);
            gens.push(swap);
            gens.push((0..n).map(|i| (i + 1) % n).collect());
        }
        FiniteGroupSpec::new(&alloc::format!("S{n}"), n, gens)
    }
}

/// Cyclic groups of order 2 to 5, S3, the dihedral group of order 8, A4 and
/// the affine group of order 20.
pub fn builtin_catalogue() -> Vec<FiniteGroupSpec> {
    let cycle = |n: usize| (0..n).map(|i| (i + 1) % n).collect::<Vec<_>>();
    vec![
        FiniteGroupSpec::new("Z2", 2, vec![cycle(2)]),
        FiniteGroupSpec::new("Z3", 3, vec![cycle(3)]),
        FiniteGroupSpec::new("Z4", 4, vec![cycle(4)]),
        FiniteGroupSpec::new("Z5", 5, vec![cycle(5)]),
        FiniteGroupSpec::new("S3", 3, vec![cycle(3), vec![1, 0, 2]]),
        FiniteGroupSpec::new("D8", 4, vec![cycle(4), vec![2, 1, 0, 3]]),
        FiniteGroupSpec::new("A4", 4, vec![vec![1, 2, 0, 3], vec![1, 0, 3, 2]]),
        FiniteGroupSpec::new("F20", 5, vec![cycle(5), vec![0, 2, 4, 1, 3]]),
    ]
}

/// A finite group as a multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    pub elements: Vec<Vec<usize>>,
    mul: Vec<usize>,
    // pow[g * order + k] = g^k for 0 ≤ k < order.
    pow: Vec<usize>,
}

impl FiniteGroup {
    /// Closure of the generators under composition.
    pub fn closure(spec: &FiniteGroupSpec) -> Self {
        let identity: Vec<usize> = (0..spec.degree).collect();
        let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        let mut elements = vec![identity.clone()];
        index.insert(identity, 0);
        let mut i = 0;
        while i < elements.len() {
            for g in &spec.generators {
                let next: Vec<usize> = elements[i].iter().map(|&x| g[x]).collect();
                if !index.contains_key(&next) {
                    index.insert(next.clone(), elements.len());
                    elements.push(next);
                }
            }
            i += 1;
        }
        let n = elements.len();
        let mut mul = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                let c: Vec<usize> = elements[a].iter().map(|&x| elements[b][x]).collect();
                mul[a * n + b] = index[&c];
            }
        }
        let mut pow = vec![0; n * n];
        for g in 0..n {
            let mut acc = 0;
            for k in 0..n {
                pow[g * n + k] = acc;
                acc = mul[acc * n + g];
            }
        }
        FiniteGroup { elements, mul, pow }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn pow(&self, g: usize, k: &BigInt) -> usize {
        let n = self.order();
        let e = k.mod_floor(&BigInt::from(n)).to_usize().expect("reduced exponent");
        self.pow[g * n + e]
    }
}

// Relator with exponents already reduced modulo the group order.
struct Compiled {
    syllables: Vec<(usize, usize)>,
}

/// Number of homomorphisms from the presented group to the group generated by
/// `spec`.
pub fn count_homs(p: &Presentation, spec: &FiniteGroupSpec, budget: Budget) -> Result<u64, BudgetExceeded> {
    count_homs_into(p, &FiniteGroup::closure(spec), budget)
}

pub fn count_homs_into(p: &Presentation, group: &FiniteGroup, budget: Budget) -> Result<u64, BudgetExceeded> {
    let n = group.order();
    let gens = p.generators.len();
    let mut occurrences = vec![0usize; gens];
    let mut relators: Vec<Compiled> = Vec::new();
    for r in &p.relators {
        let syllables: Vec<(usize, usize)> = r
            .iter()
            .map(|s| (s.generator, s.exponent.mod_floor(&BigInt::from(n)).to_usize().unwrap()))
            .filter(|&(_, e)| e != 0)
            .collect();
        for &(g, _) in &syllables {
            occurrences[g] += 1;
        }
        relators.push(Compiled { syllables });
    }

    // Generators absent from every relator map freely.
    let mut free_factor: u64 = 1;
    let mut active: Vec<usize> = Vec::new();
    for g in 0..gens {
        if occurrences[g] == 0 {
            free_factor = free_factor.checked_mul(n as u64).expect("hom count overflows u64");
        } else {
            active.push(g);
        }
    }

    // Most frequent first, then whichever completes the most relators.
    let mut order: Vec<usize> = Vec::with_capacity(active.len());
    let mut placed = vec![false; gens];
    while order.len() < active.len() {
        let best = active
            .iter()
            .copied()
            .filter(|&g| !placed[g])
            .max_by_key(|&g| {
                let completes = relators
                    .iter()
                    .filter(|r| {
                        r.syllables.iter().any(|&(x, _)| x == g)
                            && r.syllables.iter().all(|&(x, _)| x == g || placed[x])
                    })
                    .count();
                (completes, occurrences[g], core::cmp::Reverse(g))
            })
            .expect("unplaced generator remains");
        placed[best] = true;
        order.push(best);
    }
    let depth_of: BTreeMap<usize, usize> = order.iter().enumerate().map(|(d, &g)| (g, d)).collect();
    let mut checks: Vec<Vec<usize>> = vec![Vec::new(); order.len()];
    for (i, r) in relators.iter().enumerate() {
        if r.syllables.is_empty() {
            continue;
        }
        let d = r.syllables.iter().map(|(g, _)| depth_of[g]).max().unwrap();
        checks[d].push(i);
    }

    let mut search = Search { group, relators: &relators, order: &order, checks: &checks, image: vec![0; gens], nodes: 0, limit: budget.nodes };
    let count = search.run(0)?;
    Ok(count.checked_mul(free_factor).expect("hom count overflows u64"))
}

struct Search<'a> {
    group: &'a FiniteGroup,
    relators: &'a [Compiled],
    order: &'a [usize],
    checks: &'a [Vec<usize>],
    image: Vec<usize>,
    nodes: u64,
    limit: u64,
}

impl Search<'_> {
    fn holds(&self, r: &Compiled) -> bool {
        let mut acc = 0;
        for &(g, e) in &r.syllables {
            acc = self.group.mul(acc, self.group.pow[self.image[g] * self.group.order() + e]);
        }
        acc == 0
    }

    fn run(&mut self, depth: usize) -> Result<u64, BudgetExceeded> {
        if depth == self.order.len() {
            return Ok(1);
        }
        let g = self.order[depth];
        let mut total = 0u64;
        for x in 0..self.group.order() {
            self.nodes += 1;
            if self.nodes > self.limit {
                return Err(BudgetExceeded { limit: self.limit });
            }
            self.image[g] = x;
            if self.checks[depth].iter().all(|&i| self.holds(&self.relators[i])) {
                total += self.run(depth + 1)?;
            }
        }
        Ok(total)
    }
}

/// Number of subgroups of index `n`, from homomorphism counts into the
/// symmetric groups of degree at most `n`.
pub fn count_index_subgroups(p: &Presentation, n: usize, budget: Budget) -> Result<u64, BudgetExceeded> {
    assert!(n >= 1, "index must be positive");
    let mut factorial = vec![BigInt::from(1u32)];
    for k in 1..=n {
        let next = &factorial[k - 1] * BigInt::from(k);
        factorial.push(next);
    }
    let mut homs = vec![BigInt::zero()];
    for k in 1..=n {
        homs.push(BigInt::from(count_homs(p, &FiniteGroupSpec::symmetric(k), budget)?));
    }
    // a_k = h_k/(k−1)! − Σ_{j<k} h_{k−j}/(k−j)! · a_j
    let mut a: Vec<Rational> = vec![Rational::zero()];
    for k in 1..=n {
        let mut value = Rational::new(homs[k].clone(), factorial[k - 1].clone());
        for j in 1..k {
            value -= &(&Rational::new(homs[k - j].clone(), factorial[k - j].clone()) * &a[j]);
        }
        a.push(value);
    }
    let result = &a[n];
    assert!(result.is_integer() && !result.is_negative(), "subgroup count is not a natural number");
    Ok(result.numer().to_u64().expect("subgroup count fits u64"))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusEntry {
    pub group: String,
    pub count: Result<u64, BudgetExceeded>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CensusVector {
    pub entries: Vec<CensusEntry>,
}

impl CensusVector {
    /// Names of groups whose counts are both known and different.
    pub fn differences(&self, other: &CensusVector) -> Vec<String> {
        self.entries
            .iter()
            .zip(&other.entries)
            .filter(|(a, b)| matches!((&a.count, &b.count), (Ok(x), Ok(y)) if x != y))
            .map(|(a, _)| a.group.clone())
            .collect()
    }
}

/// Hom counts of the fundamental group of `m` into each catalogue group, each
/// with its own budget.
pub fn hom_census(m: &GraphManifold, catalogue: &[FiniteGroupSpec], budget: Budget) -> CensusVector {
    let p = build_presentation(m);
    CensusVector {
        entries: catalogue
            .iter()
            .map(|spec| CensusEntry { group: spec.name.clone(), count: count_homs(&p, spec, budget) })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::Syllable;

    fn cyclic(n: i64) -> Presentation {
        Presentation::free(["a"]).with_relator(vec![Syllable::new(0, n)])
    }

    #[test]
    fn catalogue_orders() {
        let orders: Vec<usize> = builtin_catalogue().iter().map(|s| FiniteGroup::closure(s).order()).collect();
        assert_eq!(orders, [2, 3, 4, 5, 6, 8, 12, 20]);
        assert_eq!(FiniteGroup::closure(&FiniteGroupSpec::symmetric(4)).order(), 24);
        assert_eq!(FiniteGroup::closure(&FiniteGroupSpec::symmetric(1)).order(), 1);
    }

    #[test]
    fn hom_examples() {
        let cat = builtin_catalogue();
        let b = Budget::default();
        assert_eq!(count_homs(&cyclic(2), &cat[0], b), Ok(2));
        assert_eq!(count_homs(&cyclic(3), &cat[0], b), Ok(1));
        assert_eq!(count_homs(&Presentation::free(["a", "b"]), &cat[4], b), Ok(36));
        assert_eq!(count_homs(&cyclic(6), &cat[4], b), Ok(6));
    }

    #[test]
    fn trivial_group_has_one_hom() {
        let trivial = FiniteGroupSpec::new("1", 1, vec![]);
        let p = build_presentation(&crate::fixtures::w1());
        assert_eq!(count_homs(&p, &trivial, Budget::default()), Ok(1));
    }

    #[test]
    fn subgroup_examples() {
        let b = Budget::default();
        assert_eq!(count_index_subgroups(&Presentation::free(["a"]), 3, b), Ok(1));
        let f2 = Presentation::free(["a", "b"]);
        assert_eq!(count_index_subgroups(&f2, 1, b), Ok(1));
        assert_eq!(count_index_subgroups(&f2, 2, b), Ok(3));
        assert_eq!(count_index_subgroups(&f2, 3, b), Ok(13));
    }

    #[test]
    fn budget_is_reported() {
        let f3 = Presentation::free(["a", "b", "c"]).with_relator(vec![
            Syllable::new(0, 1),
            Syllable::new(1, 1),
            Syllable::new(2, 1),
        ]);
        let s4 = FiniteGroupSpec::symmetric(4);
        assert_eq!(count_homs(&f3, &s4, Budget { nodes: 10 }), Err(BudgetExceeded { limit: 10 }));
        assert_eq!(count_homs(&f3, &s4, Budget::default()), Ok(24 * 24));
    }
}
