//! Integer arithmetic shared by every layer: prime sets, π-parts and
//! factorization.
//!
//! Everything here is generic over [`Natural`], so the same code runs on
//! machine words (`u64`, `u128`) and on unbounded [`BigUint`] values. Group
//! orders are always carried as `BigUint`; the word-sized instantiations exist
//! for cheap cross-checks.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{FromPrimitive, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unsigned integer type the arithmetic layer can run on.
pub trait Natural:
    Clone + Ord + fmt::Debug + fmt::Display + Integer + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_word(n: u64) -> Self {
        Self::from_u64(n).expect("u64 fits every Natural")
    }
}

impl<T> Natural for T where
    T: Clone
        + Ord
        + fmt::Debug
        + fmt::Display
        + Integer
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
{
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` pairs in
/// increasing prime order. `factorize(1)` is empty.
pub fn factorize<N: Natural>(n: &N) -> Result<Vec<(u64, u32)>> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let mut rest = n.clone();
    let mut out = Vec::new();
    let mut d = 2u64;
    loop {
        let dn = N::from_word(d);
        if dn.clone() * dn.clone() > rest {
            break;
        }
        let mut e = 0;
        while rest.is_multiple_of(&dn) {
            rest = rest / dn.clone();
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if !rest.is_one() {
        let p = rest
            .to_u64()
            .expect("prime factors of desk-scale orders fit in a word");
        out.push((p, 1));
    }
    Ok(out)
}

/// The part of `n` supported on the primes of `pi`, i.e. `n_π`.
pub fn pi_part<N: Natural>(n: &N, pi: &PrimeSet) -> Result<N> {
    if n.is_zero() {
        return Err(Error::Zero);
    }
    let mut rest = n.clone();
    let mut part = N::one();
    for &p in pi.iter() {
        let pn = N::from_word(p);
        while rest.is_multiple_of(&pn) {
            rest = rest / pn.clone();
            part = part * pn.clone();
        }
    }
    Ok(part)
}

/// `n_p` for a single prime.
pub fn p_part<N: Natural>(n: &N, p: u64) -> Result<N> {
    pi_part(n, &PrimeSet::singleton(p)?)
}

/// `n_{p'}`, the part of `n` coprime to `p`.
pub fn p_prime_part<N: Natural>(n: &N, p: u64) -> Result<N> {
    let pp = p_part(n, p)?;
    Ok(n.clone() / pp)
}

/// True iff every prime factor of `n` lies in `pi`.
pub fn is_pi_number<N: Natural>(n: &N, pi: &PrimeSet) -> Result<bool> {
    Ok(&pi_part(n, pi)? == n)
}

pub fn divides<N: Natural>(d: &N, n: &N) -> bool {
    if d.is_zero() {
        return n.is_zero();
    }
    n.is_multiple_of(d)
}

/// A finite set of primes, kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(BTreeSet<u64>);

impl PrimeSet {
    pub fn empty() -> Self {
        PrimeSet(BTreeSet::new())
    }

    pub fn new<I: IntoIterator<Item = u64>>(primes: I) -> Result<Self> {
        let mut set = BTreeSet::new();
        for p in primes {
            if !is_prime(p) {
                return Err(Error::NotPrime(p));
            }
            set.insert(p);
        }
        Ok(PrimeSet(set))
    }

    pub fn singleton(p: u64) -> Result<Self> {
        Self::new([p])
    }

    /// The primes dividing `n`.
    pub fn of<N: Natural>(n: &N) -> Result<Self> {
        Ok(PrimeSet(
            factorize(n)?.into_iter().map(|(p, _)| p).collect(),
        ))
    }

    pub fn iter(&self) -> impl Iterator<Item = &u64> + '_ {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.0.contains(&p)
    }

    pub fn is_subset(&self, other: &PrimeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    /// `universe \ self`; the π′ of a prime set relative to the primes of |G|.
    pub fn complement_in(&self, universe: &PrimeSet) -> PrimeSet {
        PrimeSet(universe.0.difference(&self.0).copied().collect())
    }

    pub fn union(&self, other: &PrimeSet) -> PrimeSet {
        PrimeSet(self.0.union(&other.0).copied().collect())
    }

    /// All subsets of size at most `bound`, ordered by size and then
    /// lexicographically.
    pub fn subsets_up_to(&self, bound: usize) -> Vec<PrimeSet> {
        let primes: Vec<u64> = self.0.iter().copied().collect();
        let mut out = vec![PrimeSet::empty()];
        let mut layer = vec![(Vec::<u64>::new(), 0usize)];
        for _ in 0..bound.min(primes.len()) {
            let mut next = Vec::new();
            for (chosen, start) in &layer {
                for (i, &p) in primes.iter().enumerate().skip(*start) {
                    let mut c = chosen.clone();
                    c.push(p);
                    next.push((c, i + 1));
                }
            }
            out.extend(
                next.iter()
                    .map(|(c, _)| PrimeSet(c.iter().copied().collect())),
            );
            layer = next;
        }
        out
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(s: PrimeSet) -> Self {
        s.0.into_iter().collect()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

pub fn big(n: u64) -> BigUint {
    BigUint::from(n)
}
