//! Permutation groups given by generators.
//!
//! Construction runs a deterministic Schreier–Sims pass to get a base and
//! strong generating set, hence the exact order and a membership test. Groups
//! whose order is at most the enumeration cap also carry every element, sorted
//! lexicographically by image array, and all structural queries work on
//! indices into that list. The identity is always index 0.

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::perm::Permutation;

pub const DEFAULT_ENUMERATION_CAP: usize = 20_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 1024;

#[derive(Clone, Debug)]
struct Level {
    base: u32,
    orbit: Vec<u32>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
}

#[derive(Clone, Debug)]
struct StabChain {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl StabChain {
    fn new(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
        };
        for g in generators {
            let (residue, depth) = chain.sift(g, 0);
            if !residue.is_identity() {
                chain.add_strong(residue, depth);
            }
        }
        chain.complete();
        chain
    }

    /// Strips `g` through the levels from `start` on. Returns the residue and
    /// the level where stripping stopped (`levels.len()` if it ran through).
    fn sift(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(start) {
            let x = h.apply(level.base);
            match &level.transversal[x as usize] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    /// Adds a strong generator fixing the first `depth` base points.
    fn add_strong(&mut self, g: Permutation, depth: usize) {
        if depth == self.levels.len() {
            let base = g
                .first_moved_point()
                .expect("nontrivial residue moves a point");
            self.levels.push(Level {
                base,
                orbit: Vec::new(),
                transversal: Vec::new(),
            });
        }
        self.strong.push(g);
        for i in 0..=depth {
            self.rebuild_level(i);
        }
    }

    fn level_generators(&self, i: usize) -> Vec<&Permutation> {
        let fixed: Vec<u32> = self.levels[..i].iter().map(|l| l.base).collect();
        self.strong
            .iter()
            .filter(|s| fixed.iter().all(|&b| s.apply(b) == b))
            .collect()
    }

    fn rebuild_level(&mut self, i: usize) {
        let gens: Vec<Permutation> = self.level_generators(i).into_iter().cloned().collect();
        let base = self.levels[i].base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; self.degree];
        transversal[base as usize] = Some(Permutation::identity(self.degree));
        let mut orbit = vec![base];
        let mut head = 0;
        while head < orbit.len() {
            let x = orbit[head];
            head += 1;
            for s in &gens {
                let y = s.apply(x);
                if transversal[y as usize].is_none() {
                    let u = transversal[x as usize].as_ref().unwrap().then(s);
                    transversal[y as usize] = Some(u);
                    orbit.push(y);
                }
            }
        }
        let level = &mut self.levels[i];
        level.orbit = orbit;
        level.transversal = transversal;
    }

    /// Sifts Schreier generators level by level, bottom up, until every one of
    /// them strips to the identity.
    fn complete(&mut self) {
        'restart: loop {
            for i in (0..self.levels.len()).rev() {
                let gens: Vec<Permutation> =
                    self.level_generators(i).into_iter().cloned().collect();
                let orbit = self.levels[i].orbit.clone();
                for &x in &orbit {
                    for s in &gens {
                        let level = &self.levels[i];
                        let u = level.transversal[x as usize].as_ref().unwrap();
                        let v = level.transversal[s.apply(x) as usize].as_ref().unwrap();
                        let schreier = u.then(s).then(&v.inverse());
                        if schreier.is_identity() {
                            continue;
                        }
                        let (residue, depth) = self.sift(&schreier, i + 1);
                        if !residue.is_identity() {
                            self.add_strong(residue, depth);
                            continue 'restart;
                        }
                    }
                }
            }
            return;
        }
    }

    fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * l.orbit.len())
    }

    fn contains(&self, g: &Permutation) -> bool {
        self.sift(g, 0).0.is_identity()
    }

    fn elements(&self) -> Vec<Permutation> {
        let mut elems = vec![Permutation::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for x in &elems {
                for &pt in &level.orbit {
                    next.push(x.then(level.transversal[pt as usize].as_ref().unwrap()));
                }
            }
            elems = next;
        }
        elems
    }
}

#[derive(Clone, Debug)]
struct Elements {
    perms: Vec<Permutation>,
    inverse: Vec<u32>,
    orders: Vec<u64>,
    generators: Vec<usize>,
    table: Option<Vec<u32>>,
}

/// A finite permutation group. Immutable once built.
#[derive(Clone, Debug)]
pub struct Group {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
    order: BigUint,
    cap: usize,
    elements: Option<Elements>,
}

impl Group {
    /// Builds the group generated by `generators` on `degree` points. An empty
    /// generator list gives the trivial group.
    pub fn build(
        degree: usize,
        generators: Vec<Permutation>,
        enumeration_cap: usize,
    ) -> Result<Group> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let chain = StabChain::new(degree, &generators);
        let order = chain.order();
        let elements = match order.to_usize() {
            Some(n) if n <= enumeration_cap => Some(Self::index_elements(&chain, &generators)),
            _ => None,
        };
        Ok(Group {
            degree,
            generators,
            chain,
            order,
            cap: enumeration_cap,
            elements,
        })
    }

    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Group> {
        Self::build(degree, generators, DEFAULT_ENUMERATION_CAP)
    }

    pub fn trivial(degree: usize) -> Group {
        Self::new(degree, Vec::new()).expect("no generators to mismatch")
    }

    fn index_elements(chain: &StabChain, generators: &[Permutation]) -> Elements {
        let mut perms = chain.elements();
        perms.sort_unstable();
        let find = |p: &Permutation| perms.binary_search(p).expect("closed under products");
        let inverse = perms.iter().map(|p| find(&p.inverse()) as u32).collect();
        let orders = perms.iter().map(Permutation::order).collect();
        let gens = generators.iter().map(&find).collect();
        let n = perms.len();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = Vec::with_capacity(n * n);
            for a in &perms {
                for b in &perms {
                    t.push(find(&a.then(b)) as u32);
                }
            }
            t
        });
        Elements {
            perms,
            inverse,
            orders,
            generators: gens,
            table,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn enumeration_cap(&self) -> usize {
        self.cap
    }

    /// Base points of the stabilizer chain.
    pub fn base(&self) -> Vec<u32> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// Basic orbit lengths; their product is the order.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.chain.strong
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.chain.contains(g)
    }

    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    fn enumeration(&self) -> Result<&Elements> {
        self.elements.as_ref().ok_or_else(|| Error::TooLarge {
            order: self.order.to_string(),
            cap: self.cap,
        })
    }

    /// All elements in lexicographic order of their image arrays.
    pub fn elements(&self) -> Result<&[Permutation]> {
        Ok(&self.enumeration()?.perms)
    }

    pub fn enumerate_elements(&self) -> Result<Vec<Permutation>> {
        self.elements().map(<[_]>::to_vec)
    }

    /// Order as a machine word; fails above the enumeration cap.
    pub fn size(&self) -> Result<usize> {
        Ok(self.enumeration()?.perms.len())
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements.as_ref().expect("enumerated group").perms[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.elements.as_ref()?.perms.binary_search(g).ok()
    }

    /// Indices of the defining generators.
    pub fn generator_indices(&self) -> Result<&[usize]> {
        Ok(&self.enumeration()?.generators)
    }

    /// Index of the product `element(a)` then `element(b)`.
    ///
    /// Index-level operations panic on a group that is not enumerated; every
    /// public structural entry point checks `size()` first.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let e = self.elements.as_ref().expect("enumerated group");
        match &e.table {
            Some(t) => t[a * e.perms.len() + b] as usize,
            None => e
                .perms
                .binary_search(&e.perms[a].then(&e.perms[b]))
                .expect("closed under products"),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.elements.as_ref().expect("enumerated group").inverse[a] as usize
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.elements.as_ref().expect("enumerated group").orders[a]
    }

    /// `a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    /// `g^-1 x g`
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn exponent(&self) -> Result<u64> {
        use num_integer::Integer;
        Ok(self
            .enumeration()?
            .orders
            .iter()
            .fold(1u64, |acc, o| acc.lcm(o)))
    }

    /// The direct product acting on disjoint point sets, `self` on the first
    /// `self.degree()` points.
    pub fn direct_product(&self, other: &Group) -> Result<Group> {
        let degree = self.degree + other.degree;
        let mut gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.shifted(0, degree))
            .collect();
        gens.extend(
            other
                .generators
                .iter()
                .map(|g| g.shifted(self.degree, degree)),
        );
        Group::build(degree, gens, self.cap.max(other.cap))
    }
}
