//! The arithmetic invariants read off character degrees and class sizes:
//! `u_π(G)`, `w_G` and `|S_π(G)|`.
//!
//! A degree or class size counts as a π-number when its π-part is itself.
//! Every degree and class size divides |G|, so it is enough for π to range
//! over subsets of the primes of |G|.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_pi_number, Natural, PrimeSet};
use crate::chardeg::DegreeFrequency;
use crate::structure::ConjugacyClassSet;

/// `u_π(G) = sum of m_G(n) n^2` over degrees `n` that are π-numbers.
pub fn u_pi<N: Natural>(m: &DegreeFrequency, pi: &PrimeSet) -> N {
    m.entries()
        .iter()
        .filter(|&&(d, _)| is_pi_number(&d, pi).expect("degrees are positive"))
        .fold(N::zero(), |acc, &(d, mult)| {
            let d = N::from_word(d);
            acc + N::from_word(mult) * d.clone() * d
        })
}

/// The function `w_G`: for each class size, the number of classes of that
/// size. Counting classes directly keeps the values integral.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassSizeFrequency {
    entries: Vec<(u64, u64)>,
}

impl ClassSizeFrequency {
    pub fn from_sizes<I: IntoIterator<Item = u64>>(sizes: I) -> Self {
        let mut counts = BTreeMap::new();
        for s in sizes {
            *counts.entry(s).or_insert(0u64) += 1;
        }
        ClassSizeFrequency {
            entries: counts.into_iter().collect(),
        }
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn count(&self, size: u64) -> u64 {
        self.entries
            .iter()
            .find(|&&(s, _)| s == size)
            .map_or(0, |&(_, c)| c)
    }

    /// Number of central elements.
    pub fn central_count(&self) -> u64 {
        self.count(1)
    }

    /// `|S_π(G)|`: total size of the classes whose size is a π-number.
    pub fn s_pi<N: Natural>(&self, pi: &PrimeSet) -> N {
        self.entries
            .iter()
            .filter(|&&(s, _)| is_pi_number(&s, pi).expect("class sizes are positive"))
            .fold(N::zero(), |acc, &(s, c)| {
                acc + N::from_word(s) * N::from_word(c)
            })
    }

    pub fn total<N: Natural>(&self) -> N {
        self.entries.iter().fold(N::zero(), |acc, &(s, c)| {
            acc + N::from_word(s) * N::from_word(c)
        })
    }
}

impl fmt::Display for ClassSizeFrequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (s, c)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}:{c}")?;
        }
        write!(f, "}}")
    }
}

pub fn class_size_frequency(c: &ConjugacyClassSet) -> ClassSizeFrequency {
    ClassSizeFrequency::from_sizes(c.sizes().into_iter().map(|s| s as u64))
}

pub fn s_pi_size<N: Natural>(c: &ConjugacyClassSet, pi: &PrimeSet) -> N {
    class_size_frequency(c).s_pi(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;
    use crate::chardeg::character_degrees;
    use crate::standard::standard_group;
    use crate::structure::conjugacy_classes;
    use num_bigint::BigUint;

    fn set(v: &[u64]) -> PrimeSet {
        PrimeSet::new(v.iter().copied()).unwrap()
    }

    #[test]
    fn u_pi_examples() {
        let hol = DegreeFrequency::from_pairs(&[(1, 6), (6, 1)]);
        assert_eq!(u_pi::<u64>(&hol, &set(&[2])), 6);
        assert_eq!(u_pi::<u64>(&hol, &set(&[3])), 6);
        assert_eq!(u_pi::<BigUint>(&hol, &set(&[2, 3])), big(42));

        let abelian = DegreeFrequency::from_pairs(&[(1, 15)]);
        for pi in [set(&[]), set(&[3]), set(&[3, 5])] {
            assert_eq!(u_pi::<u64>(&abelian, &pi), 15);
        }

        // u_{2'}(S3): only the odd degrees 1, 1 count.
        let s3 = DegreeFrequency::from_pairs(&[(1, 2), (2, 1)]);
        assert_eq!(u_pi::<u64>(&s3, &set(&[3])), 2);
    }

    #[test]
    fn class_size_examples() {
        let s3 = conjugacy_classes(&standard_group("symmetric", 3).unwrap()).unwrap();
        let w = class_size_frequency(&s3);
        assert_eq!(w.entries(), &[(1, 1), (2, 1), (3, 1)]);
        assert_eq!(s_pi_size::<u64>(&s3, &set(&[3])), 4);

        let q8 = conjugacy_classes(&standard_group("quaternion", 8).unwrap()).unwrap();
        let w = class_size_frequency(&q8);
        assert_eq!(w.entries(), &[(1, 2), (2, 3)]);
        assert_eq!(w.total::<u64>(), 8);
        // p-group: the p'-sized classes are the central ones.
        assert_eq!(w.s_pi::<u64>(&set(&[])), 2);

        let a4 = conjugacy_classes(&standard_group("alternating", 4).unwrap()).unwrap();
        assert_eq!(s_pi_size::<u64>(&a4, &set(&[2])), 9);

        let c7 = conjugacy_classes(&standard_group("cyclic", 7).unwrap()).unwrap();
        assert_eq!(class_size_frequency(&c7).entries(), &[(1, 7)]);
    }

    #[test]
    fn extremes_and_monotonicity() {
        for (f, n) in [
            ("symmetric", 4),
            ("sl_2_3", 3),
            ("holomorph_cyclic_prime", 7),
            ("alternating", 5),
        ] {
            let g = standard_group(f, n).unwrap();
            let order = g.size().unwrap() as u64;
            let m = character_degrees(&g).unwrap();
            let w = class_size_frequency(&conjugacy_classes(&g).unwrap());
            let primes = PrimeSet::of(&order).unwrap();
            assert_eq!(u_pi::<u64>(&m, &primes), order);
            assert_eq!(w.s_pi::<u64>(&primes), order);
            assert_eq!(u_pi::<u64>(&m, &PrimeSet::empty()), m.linear_count());
            assert_eq!(w.s_pi::<u64>(&PrimeSet::empty()), w.central_count());
            let subsets = primes.subsets_up_to(primes.len());
            for a in &subsets {
                for b in &subsets {
                    if a.is_subset(b) {
                        assert!(u_pi::<u64>(&m, a) <= u_pi::<u64>(&m, b));
                        assert!(w.s_pi::<u64>(a) <= w.s_pi::<u64>(b));
                    }
                }
                assert_eq!(big(u_pi::<u64>(&m, a)), u_pi::<BigUint>(&m, a));
                assert_eq!(big(w.s_pi::<u64>(a)), w.s_pi::<BigUint>(a));
            }
        }
    }
}
