//! Named families of groups with fixed, documented generators.

use std::fmt;
use std::str::FromStr;

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::Group;
use crate::perm::Permutation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `cyclic(n)`: the n-cycle on n points.
    Cyclic,
    /// `dihedral(n)`: order 2n on n points, rotation plus `x -> -x mod n`.
    Dihedral,
    /// `symmetric(n)`: the n-cycle and the transposition (0 1).
    Symmetric,
    /// `alternating(n)`: the 3-cycles (0 1 k) for 2 <= k < n.
    Alternating,
    /// `quaternion(n)`: the dicyclic group of order n (n = 8 is Q8) in its
    /// right regular representation.
    Quaternion,
    /// `holomorph_cyclic_prime(p)`: `x -> x + 1` and `x -> r x` on Z/p, with r
    /// the least primitive root.
    HolomorphCyclicPrime,
    /// `sl_2_3(3)`: SL(2,3) on the 8 nonzero row vectors of F_3^2.
    Sl23,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Cyclic,
        Family::Dihedral,
        Family::Symmetric,
        Family::Alternating,
        Family::Quaternion,
        Family::HolomorphCyclicPrime,
        Family::Sl23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cyclic => "cyclic",
            Family::Dihedral => "dihedral",
            Family::Symmetric => "symmetric",
            Family::Alternating => "alternating",
            Family::Quaternion => "quaternion",
            Family::HolomorphCyclicPrime => "holomorph_cyclic_prime",
            Family::Sl23 => "sl_2_3",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

pub fn standard_group(family: &str, parameter: u64) -> Result<Group> {
    build(family.parse()?, parameter)
}

pub fn build(family: Family, n: u64) -> Result<Group> {
    let invalid = |reason| Error::InvalidParameter {
        family: family.name().to_string(),
        parameter: n,
        reason,
    };
    let cycle = |degree: usize| -> Permutation {
        let pts: Vec<u32> = (0..degree as u32).collect();
        Permutation::from_cycles(degree, &[&pts]).unwrap()
    };
    let images = |v: Vec<u32>| Permutation::from_images(v).unwrap();

    match family {
        Family::Cyclic => {
            if n == 0 {
                return Err(invalid("must be at least 1"));
            }
            Group::new(n as usize, vec![cycle(n as usize)])
        }
        Family::Dihedral => {
            if n < 3 {
                return Err(invalid("must be at least 3"));
            }
            let reflection = images((0..n).map(|x| ((n - x) % n) as u32).collect());
            Group::new(n as usize, vec![cycle(n as usize), reflection])
        }
        Family::Symmetric => {
            if n == 0 {
                return Err(invalid("must be at least 1"));
            }
            let d = n as usize;
            let mut gens = vec![cycle(d)];
            if d >= 2 {
                gens.push(Permutation::from_cycles(d, &[&[0, 1]])?);
            }
            Group::new(d, gens)
        }
        Family::Alternating => {
            if n == 0 {
                return Err(invalid("must be at least 1"));
            }
            let d = n as usize;
            let gens = (2..d as u32)
                .map(|k| Permutation::from_cycles(d, &[&[0, 1, k]]))
                .collect::<Result<Vec<_>>>()?;
            Group::new(d, gens)
        }
        Family::Quaternion => {
            if n < 8 || n % 4 != 0 {
                return Err(invalid("must be a multiple of 4, at least 8"));
            }
            // Elements a^i b^j are numbered i + 2m j with a^2m = 1, b^2 = a^m,
            // b^-1 a b = a^-1; generators act by right multiplication.
            let m = n / 4;
            let two_m = 2 * m;
            let right_a = (0..n)
                .map(|x| {
                    let (i, j) = (x % two_m, x / two_m);
                    if j == 0 {
                        (i + 1) % two_m
                    } else {
                        (i + two_m - 1) % two_m + two_m
                    }
                })
                .map(|y| y as u32)
                .collect();
            let right_b = (0..n)
                .map(|x| {
                    let (i, j) = (x % two_m, x / two_m);
                    if j == 0 {
                        i + two_m
                    } else {
                        (i + m) % two_m
                    }
                })
                .map(|y| y as u32)
                .collect();
            Group::new(n as usize, vec![images(right_a), images(right_b)])
        }
        Family::HolomorphCyclicPrime => {
            if !is_prime(n) {
                return Err(invalid("must be prime"));
            }
            let r = primitive_root(n);
            let scale = images((0..n).map(|x| (x * r % n) as u32).collect());
            Group::new(n as usize, vec![cycle(n as usize), scale])
        }
        Family::Sl23 => {
            if n != 3 {
                return Err(invalid("only the field of order 3 is supported"));
            }
            let vectors: Vec<(u64, u64)> = (0..3)
                .flat_map(|a| (0..3).map(move |b| (a, b)))
                .filter(|&v| v != (0, 0))
                .collect();
            let act = |m: [[u64; 2]; 2]| {
                images(
                    vectors
                        .iter()
                        .map(|&(a, b)| {
                            let w = (
                                (a * m[0][0] + b * m[1][0]) % 3,
                                (a * m[0][1] + b * m[1][1]) % 3,
                            );
                            vectors.iter().position(|&v| v == w).unwrap() as u32
                        })
                        .collect(),
                )
            };
            Group::new(8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
        }
    }
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    (2..p)
        .find(|&r| {
            let mut x = 1;
            (1..p - 1).all(|_| {
                x = x * r % p;
                x != 1
            })
        })
        .expect("every prime has a primitive root")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn order(family: &str, n: u64) -> BigUint {
        standard_group(family, n).unwrap().order().clone()
    }

    #[test]
    fn orders() {
        assert_eq!(order("holomorph_cyclic_prime", 7), BigUint::from(42u32));
        assert_eq!(order("holomorph_cyclic_prime", 5), BigUint::from(20u32));
        assert_eq!(order("dihedral", 4), BigUint::from(8u32));
        assert_eq!(order("dihedral", 6), BigUint::from(12u32));
        assert_eq!(order("alternating", 4), BigUint::from(12u32));
        assert_eq!(order("alternating", 5), BigUint::from(60u32));
        assert_eq!(order("symmetric", 5), BigUint::from(120u32));
        assert_eq!(order("symmetric", 1), BigUint::from(1u32));
        assert_eq!(order("cyclic", 12), BigUint::from(12u32));
        assert_eq!(order("quaternion", 8), BigUint::from(8u32));
        assert_eq!(order("quaternion", 12), BigUint::from(12u32));
        assert_eq!(order("quaternion", 16), BigUint::from(16u32));
        assert_eq!(order("sl_2_3", 3), BigUint::from(24u32));
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q8 = standard_group("quaternion", 8).unwrap();
        let involutions = (0..8).filter(|&i| q8.element_order(i) == 2).count();
        assert_eq!(involutions, 1);
        let order4 = (0..8).filter(|&i| q8.element_order(i) == 4).count();
        assert_eq!(order4, 6);
    }

    #[test]
    fn errors() {
        assert_eq!(
            standard_group("mathieu", 11).unwrap_err(),
            Error::UnknownFamily("mathieu".into())
        );
        assert!(matches!(
            standard_group("holomorph_cyclic_prime", 9),
            Err(Error::InvalidParameter { .. })
        ));
        assert!(standard_group("quaternion", 10).is_err());
        assert!(standard_group("dihedral", 2).is_err());
        assert!(standard_group("sl_2_3", 5).is_err());
    }
}
