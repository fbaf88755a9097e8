//! Brute-force structural oracles over the element enumeration.
//!
//! Subgroups are index sets into the parent's sorted element list, so two
//! subgroups are equal exactly when their member lists are. Normality is
//! always checked by conjugating members, never assumed.

use num_bigint::BigUint;

use crate::arith::{is_pi_number, p_part, PrimeSet};
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

/// A subgroup of an enumerated group, as sorted element indices.
/// Equality compares member sets only; the generators are whatever produced it.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn trivial(g: &Group) -> Result<Subgroup> {
        generate(g, &[])
    }

    pub fn whole(g: &Group) -> Result<Subgroup> {
        let n = g.size()?;
        Ok(Subgroup {
            members: (0..n).collect(),
            mask: vec![true; n],
            generators: g.generator_indices()?.to_vec(),
        })
    }

    /// Validates an index set: must contain the identity and be closed under
    /// products.
    pub fn from_indices(g: &Group, indices: &[usize]) -> Result<Subgroup> {
        let n = g.size()?;
        let mut mask = vec![false; n];
        for &i in indices {
            if i >= n {
                return Err(Error::NotSubgroup);
            }
            mask[i] = true;
        }
        if !mask[0] {
            return Err(Error::NotSubgroup);
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask[i]).collect();
        for &a in &members {
            for &b in &members {
                if !mask[g.mul(a, b)] {
                    return Err(Error::NotSubgroup);
                }
            }
        }
        let sub = generate(g, &members)?;
        debug_assert_eq!(sub.members, members);
        Ok(sub)
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn order_big(&self) -> BigUint {
        BigUint::from(self.members.len())
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, i: usize) -> bool {
        self.mask.get(i).copied().unwrap_or(false)
    }

    pub fn is_subset(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&i| other.contains(i))
    }

    pub fn intersection(&self, g: &Group, other: &Subgroup) -> Result<Subgroup> {
        let common: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&i| other.contains(i))
            .collect();
        generate(g, &common)
    }

    pub fn is_abelian(&self, g: &Group) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn elements<'g>(&'g self, g: &'g Group) -> impl Iterator<Item = &'g Permutation> + 'g {
        self.members.iter().map(move |&i| g.element(i))
    }

    fn check_parent(&self, g: &Group) -> Result<()> {
        if self.mask.len() != g.size()? {
            return Err(Error::NotSubgroup);
        }
        Ok(())
    }
}

/// Closure of `gens` under products: breadth-first over right
/// multiplication.
fn close(g: &Group, gens: &[usize], n: usize) -> (Vec<usize>, Vec<bool>) {
    let mut mask = vec![false; n];
    mask[0] = true;
    let mut members = vec![0usize];
    let mut head = 0;
    while head < members.len() {
        let x = members[head];
        head += 1;
        for &s in gens {
            let y = g.mul(x, s);
            if !mask[y] {
                mask[y] = true;
                members.push(y);
            }
        }
    }
    members.sort_unstable();
    (members, mask)
}

/// The subgroup generated by a set of element indices. Only elements not
/// already reached are kept as generators.
pub fn generate(g: &Group, candidates: &[usize]) -> Result<Subgroup> {
    let n = g.size()?;
    let mut gens: Vec<usize> = Vec::new();
    let (mut members, mut mask) = close(g, &gens, n);
    for &c in candidates {
        if !mask[c] {
            gens.push(c);
            (members, mask) = close(g, &gens, n);
        }
    }
    Ok(Subgroup {
        members,
        mask,
        generators: gens,
    })
}

fn index_all(g: &Group, elems: &[Permutation]) -> Result<Vec<usize>> {
    elems
        .iter()
        .map(|x| g.index_of(x).ok_or(Error::NotInGroup))
        .collect()
}

/// Conjugacy classes in order of their least member; the representative is
/// that least member.
#[derive(Clone, Debug)]
pub struct ConjugacyClassSet {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    inverse_pairing: Vec<usize>,
}

impl ConjugacyClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, k: usize) -> usize {
        self.classes[k][0]
    }

    pub fn members(&self, k: usize) -> &[usize] {
        &self.classes[k]
    }

    pub fn size(&self, k: usize) -> usize {
        self.classes[k].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    /// Index of the class containing the inverses of class `k`.
    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_pairing[k]
    }
}

pub fn conjugacy_classes(g: &Group) -> Result<ConjugacyClassSet> {
    let n = g.size()?;
    let gens = g.generator_indices()?;
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let k = classes.len();
        class_of[start] = k;
        let mut orbit = vec![start];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for &s in gens {
                let y = g.conjugate(x, s);
                if class_of[y] == usize::MAX {
                    class_of[y] = k;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    let inverse_pairing = classes.iter().map(|c| class_of[g.inv(c[0])]).collect();
    Ok(ConjugacyClassSet {
        classes,
        class_of,
        inverse_pairing,
    })
}

/// `C_G(S)` for a set of group elements.
pub fn centralizer(g: &Group, s: &[Permutation]) -> Result<Subgroup> {
    let idx = index_all(g, s)?;
    centralizer_of_indices(g, &idx)
}

pub fn centralizer_of_indices(g: &Group, s: &[usize]) -> Result<Subgroup> {
    let n = g.size()?;
    let members: Vec<usize> = (0..n)
        .filter(|&x| s.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
        .collect();
    generate(g, &members)
}

pub fn centre(g: &Group) -> Result<Subgroup> {
    let gens = g.generator_indices()?.to_vec();
    centralizer_of_indices(g, &gens)
}

/// `N_G(H) = { x : x^-1 H x = H }`.
pub fn normalizer(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    h.check_parent(g)?;
    let n = g.size()?;
    let members: Vec<usize> = (0..n)
        .filter(|&x| h.members.iter().all(|&y| h.contains(g.conjugate(y, x))))
        .collect();
    generate(g, &members)
}

/// Every member conjugated by every generator of `g` stays inside.
pub fn is_normal(g: &Group, h: &Subgroup) -> Result<bool> {
    h.check_parent(g)?;
    let gens = g.generator_indices()?;
    Ok(h.members
        .iter()
        .all(|&y| gens.iter().all(|&s| h.contains(g.conjugate(y, s)))))
}

/// Closure of all commutators `[x, y]`, `x` in `a`, `y` in `b`.
fn commutator_closure(g: &Group, a: &[usize], b: &[usize]) -> Result<Subgroup> {
    let n = g.size()?;
    let mut seen = vec![false; n];
    let mut comms = Vec::new();
    for &x in a {
        for &y in b {
            let c = g.commutator(x, y);
            if !seen[c] {
                seen[c] = true;
                comms.push(c);
            }
        }
    }
    generate(g, &comms)
}

pub fn derived_subgroup(g: &Group) -> Result<Subgroup> {
    let all: Vec<usize> = (0..g.size()?).collect();
    commutator_closure(g, &all, &all)
}

/// Derived subgroup of a subgroup `h`, i.e. `h'`.
pub fn derived_subgroup_of(g: &Group, h: &Subgroup) -> Result<Subgroup> {
    h.check_parent(g)?;
    commutator_closure(g, &h.members, &h.members)
}

/// `[N, G]` for a normal subgroup `n`.
pub fn commutator_subgroup_of(n: &Subgroup, g: &Group) -> Result<Subgroup> {
    if !is_normal(g, n)? {
        return Err(Error::NotNormal);
    }
    let all: Vec<usize> = (0..g.size()?).collect();
    commutator_closure(g, &n.members, &all)
}

/// Last term of the lower central series: iterate `K -> [K, G]`.
pub fn lower_central_last(g: &Group) -> Result<Subgroup> {
    let mut k = Subgroup::whole(g)?;
    loop {
        let next = commutator_subgroup_of(&k, g)?;
        if next == k {
            return Ok(k);
        }
        k = next;
    }
}

/// Last term of the upper central series: `Z_{i+1} = { x : [x, g] in Z_i for
/// all g }`, starting from the trivial subgroup.
pub fn hypercentre(g: &Group) -> Result<Subgroup> {
    let n = g.size()?;
    let mut z = Subgroup::trivial(g)?;
    loop {
        let members: Vec<usize> = (0..n)
            .filter(|&x| (0..n).all(|y| z.contains(g.commutator(x, y))))
            .collect();
        let next = generate(g, &members)?;
        if next == z {
            return Ok(z);
        }
        z = next;
    }
}

fn require_prime(p: u64) -> Result<PrimeSet> {
    PrimeSet::singleton(p)
}

fn elements_where(g: &Group, pred: impl Fn(u64) -> bool) -> Result<Vec<usize>> {
    Ok((0..g.size()?)
        .filter(|&i| pred(g.element_order(i)))
        .collect())
}

/// `O^p(G)`: generated by the elements of order prime to `p`.
pub fn core_subgroup_op(g: &Group, p: u64) -> Result<Subgroup> {
    require_prime(p)?;
    let elems = elements_where(g, |o| o % p != 0)?;
    generate(g, &elems)
}

/// `O^{p'}(G)`: generated by the `p`-elements.
pub fn core_subgroup_op_prime(g: &Group, p: u64) -> Result<Subgroup> {
    let single = require_prime(p)?;
    let elems = elements_where(g, |o| is_pi_number(&o, &single).unwrap())?;
    generate(g, &elems)
}

/// A Sylow `p`-subgroup, grown deterministically: start from the trivial
/// subgroup and repeatedly adjoin the least-index `p`-element of `N_G(P)`
/// outside `P`.
pub fn sylow_subgroup(g: &Group, p: u64) -> Result<Subgroup> {
    let single = require_prime(p)?;
    let target = p_part(&g.size()?, p)?;
    let p_elements = elements_where(g, |o| is_pi_number(&o, &single).unwrap())?;
    let mut sylow = Subgroup::trivial(g)?;
    while sylow.order() < target {
        let norm = normalizer(g, &sylow)?;
        let next = p_elements
            .iter()
            .copied()
            .find(|&x| norm.contains(x) && !sylow.contains(x))
            .expect("a non-Sylow p-subgroup has p-elements in its normalizer outside it");
        let mut gens = sylow.generators.clone();
        gens.push(next);
        sylow = generate(g, &gens)?;
    }
    Ok(sylow)
}

/// The set of π-elements, if it is a subgroup. When it is, it is the unique
/// normal Hall π-subgroup.
pub fn pi_elements_form_subgroup(g: &Group, pi: &PrimeSet) -> Result<Option<Subgroup>> {
    let elems = elements_where(g, |o| is_pi_number(&o, pi).unwrap())?;
    let generated = generate(g, &elems)?;
    Ok((generated.order() == elems.len()).then_some(generated))
}

/// Primes dividing the order of an enumerated group.
pub fn order_primes(g: &Group) -> Result<PrimeSet> {
    PrimeSet::of(&g.size()?)
}

#[derive(Clone, Debug)]
pub enum DirectProductWitness {
    /// The normal Sylow `p`-subgroup and the normal `p`-complement.
    Factors {
        sylow: Subgroup,
        complement: Subgroup,
    },
    /// The `p`-elements do not form a subgroup.
    SylowNotNormal,
    /// The `p'`-elements do not form a subgroup.
    NoNormalComplement,
}

/// Decides whether `G = P x N` with `P` a `p`-group and `N` a `p'`-group.
pub fn is_direct_product_p(g: &Group, p: u64) -> Result<(bool, DirectProductWitness)> {
    let single = require_prime(p)?;
    let universe = order_primes(g)?.union(&single);
    let Some(sylow) = pi_elements_form_subgroup(g, &single)? else {
        return Ok((false, DirectProductWitness::SylowNotNormal));
    };
    let Some(complement) = pi_elements_form_subgroup(g, &single.complement_in(&universe))? else {
        return Ok((false, DirectProductWitness::NoNormalComplement));
    };
    Ok((true, DirectProductWitness::Factors { sylow, complement }))
}

/// Normal Hall π-subgroup contained in the centre.
pub fn has_central_hall(g: &Group, pi: &PrimeSet) -> Result<bool> {
    let Some(hall) = pi_elements_form_subgroup(g, pi)? else {
        return Ok(false);
    };
    Ok(hall.is_subset(&centre(g)?))
}

pub fn has_normal_abelian_hall(g: &Group, pi: &PrimeSet) -> Result<bool> {
    Ok(pi_elements_form_subgroup(g, pi)?.is_some_and(|h| h.is_abelian(g)))
}

/// For all distinct primes `q, r != p` dividing |G|, every `q`-element
/// commutes with every `r`-element.
pub fn q_r_elements_commute(g: &Group, p: u64) -> Result<bool> {
    require_prime(p)?;
    let primes: Vec<u64> = order_primes(g)?
        .iter()
        .copied()
        .filter(|&q| q != p)
        .collect();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &q in &primes {
        let single = PrimeSet::singleton(q)?;
        classes.push(elements_where(g, |o| {
            o > 1 && is_pi_number(&o, &single).unwrap()
        })?);
    }
    for i in 0..primes.len() {
        for j in i + 1..primes.len() {
            for &x in &classes[i] {
                for &y in &classes[j] {
                    if g.mul(x, y) != g.mul(y, x) {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
