//! Irreducible character degrees by the Dixon–Schneider method.
//!
//! The class multiplication coefficients give commuting matrices whose
//! common eigenvectors over `F_l`, with `l = 1 mod exp(G)`, are the central
//! characters reduced mod `l`. From a normalized eigenvector `w` (so `w_0 = 1`
//! at the identity class) the degree satisfies
//!
//! ```text
//! chi(1)^2 = |G| / sum_j w_j w_{j*} / |K_j|   (mod l)
//! ```
//!
//! and `l > 2 sqrt|G|` makes the square root in `(0, sqrt|G|]` unique.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::field::{Matrix, PrimeField};
use crate::group::Group;
use crate::structure::{conjugacy_classes, ConjugacyClassSet};

/// Structure constants of the class algebra: `coefficient(i, j, k)` counts
/// pairs `(x, y)` in `K_i x K_j` with `x y = z_k` for the representative
/// `z_k` of class `k`.
#[derive(Clone, Debug)]
pub struct ClassAlgebraData {
    classes: usize,
    coefficients: Vec<u64>,
    class_sizes: Vec<u64>,
    inverse_class: Vec<usize>,
    group_order: u64,
    exponent: u64,
    dixon_prime: u64,
}

impl ClassAlgebraData {
    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn coefficient(&self, i: usize, j: usize, k: usize) -> u64 {
        let r = self.classes;
        self.coefficients[(i * r + j) * r + k]
    }

    pub fn class_size(&self, k: usize) -> u64 {
        self.class_sizes[k]
    }

    pub fn inverse_class(&self, k: usize) -> usize {
        self.inverse_class[k]
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn dixon_prime(&self) -> u64 {
        self.dixon_prime
    }

    /// `(M_i)[j][k] = a[i][j][k]` reduced mod `l`.
    fn matrix(&self, i: usize, field: PrimeField) -> Matrix {
        (0..self.classes)
            .map(|j| {
                (0..self.classes)
                    .map(|k| field.reduce(self.coefficient(i, j, k)))
                    .collect()
            })
            .collect()
    }
}

pub fn class_algebra(g: &Group, classes: &ConjugacyClassSet) -> Result<ClassAlgebraData> {
    let n = g.size()?;
    let r = classes.len();
    let mut coefficients = vec![0u64; r * r * r];
    for k in 0..r {
        let z = classes.representative(k);
        for i in 0..r {
            for &x in classes.members(i) {
                let j = classes.class_of(g.mul(g.inv(x), z));
                coefficients[(i * r + j) * r + k] += 1;
            }
        }
    }
    let exponent = g.exponent()?;
    let order = n as u64;
    Ok(ClassAlgebraData {
        classes: r,
        coefficients,
        class_sizes: classes.sizes().into_iter().map(|s| s as u64).collect(),
        inverse_class: (0..r).map(|k| classes.inverse_class(k)).collect(),
        group_order: order,
        exponent,
        dixon_prime: dixon_prime(exponent, order, 100 * order)?,
    })
}

/// Least prime `l = 1 mod exponent` with `l > 2 sqrt(order)`, searched up to
/// `bound`.
pub fn dixon_prime(exponent: u64, order: u64, bound: u64) -> Result<u64> {
    admissible_primes(exponent, order, bound)
        .next()
        .ok_or(Error::DixonPrimeNotFound {
            exponent,
            order,
            bound,
        })
}

/// The admissible prime after `after`.
pub fn next_admissible_prime(exponent: u64, order: u64, after: u64, bound: u64) -> Result<u64> {
    admissible_primes(exponent, order, bound)
        .find(|&l| l > after)
        .ok_or(Error::DixonPrimeNotFound {
            exponent,
            order,
            bound,
        })
}

fn admissible_primes(exponent: u64, order: u64, bound: u64) -> impl Iterator<Item = u64> {
    (1..)
        .map(move |m| m * exponent + 1)
        .take_while(move |&l| l <= bound)
        .filter(move |&l| (l as u128) * (l as u128) > 4 * order as u128 && is_prime(l))
}

/// The function `m_G`: sorted `(degree, multiplicity)` pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeFrequency {
    entries: Vec<(u64, u64)>,
}

impl DegreeFrequency {
    pub fn from_degrees<I: IntoIterator<Item = u64>>(degrees: I) -> Self {
        let mut counts = BTreeMap::new();
        for d in degrees {
            *counts.entry(d).or_insert(0u64) += 1;
        }
        DegreeFrequency {
            entries: counts.into_iter().collect(),
        }
    }

    pub fn from_pairs(pairs: &[(u64, u64)]) -> Self {
        DegreeFrequency::from_degrees(
            pairs
                .iter()
                .flat_map(|&(d, m)| std::iter::repeat_n(d, m as usize)),
        )
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn multiplicity(&self, degree: u64) -> u64 {
        self.entries
            .iter()
            .find(|&&(d, _)| d == degree)
            .map_or(0, |&(_, m)| m)
    }

    /// Number of irreducible characters, i.e. of conjugacy classes.
    pub fn character_count(&self) -> u64 {
        self.entries.iter().map(|&(_, m)| m).sum()
    }

    /// `sum m(n) n^2`, which is |G|.
    pub fn sum_of_squares(&self) -> u128 {
        self.entries
            .iter()
            .map(|&(d, m)| m as u128 * d as u128 * d as u128)
            .sum()
    }

    /// Number of linear characters, which is |G : G'|.
    pub fn linear_count(&self) -> u64 {
        self.multiplicity(1)
    }
}

impl fmt::Display for DegreeFrequency {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, m)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{m}")?;
        }
        write!(f, "}}")
    }
}

pub fn character_degrees(g: &Group) -> Result<DegreeFrequency> {
    let classes = conjugacy_classes(g)?;
    let data = class_algebra(g, &classes)?;
    degrees_mod_prime(&data, data.dixon_prime)
}

/// Runs the eigenspace split and degree recovery modulo a given admissible
/// prime.
pub fn degrees_mod_prime(data: &ClassAlgebraData, prime: u64) -> Result<DegreeFrequency> {
    let field = PrimeField::new(prime);
    let vectors = common_eigenvectors(data, field)?;
    let order = data.group_order;
    let mut degrees = Vec::with_capacity(vectors.len());
    for w in vectors {
        let mut s = 0u64;
        for j in 0..data.classes {
            let term = field.mul(w[j], w[data.inverse_class[j]]);
            s = field.add(
                s,
                field.mul(term, field.inv(field.reduce(data.class_sizes[j]))),
            );
        }
        if s == 0 {
            return Err(Error::DegreeRecovery {
                prime,
                reason: "vanishing norm",
            });
        }
        let square = field.mul(field.reduce(order), field.inv(s));
        degrees.push(recover_degree(field, square, order)?);
    }
    Ok(DegreeFrequency::from_degrees(degrees))
}

/// The unique square root of `square` lying in `(0, sqrt(order)]`.
fn recover_degree(field: PrimeField, square: u64, order: u64) -> Result<u64> {
    let prime = field.modulus();
    let candidates: Vec<u64> = field
        .sqrt(square)
        .into_iter()
        .filter(|&d| d > 0 && (d as u128) * (d as u128) <= order as u128)
        .collect();
    match candidates.as_slice() {
        [d] => Ok(*d),
        [] => Err(Error::DegreeRecovery {
            prime,
            reason: "no square root in range",
        }),
        _ => Err(Error::DegreeRecovery {
            prime,
            reason: "ambiguous square root",
        }),
    }
}

/// Splits `F_l^r` into common one-dimensional eigenspaces of all `M_i`,
/// cycling through `M_0 .. M_{r-1}` in order. Each returned vector is scaled
/// so its identity-class entry is 1.
fn common_eigenvectors(data: &ClassAlgebraData, field: PrimeField) -> Result<Vec<Vec<u64>>> {
    let r = data.classes;
    let identity: Vec<Vec<u64>> = (0..r)
        .map(|i| (0..r).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    let mut stalled_passes = 0;
    'passes: loop {
        for i in 0..r {
            if spaces.iter().all(|s| s.len() == 1) {
                break 'passes;
            }
            let m = data.matrix(i, field);
            let mut next = Vec::with_capacity(spaces.len());
            let mut split = false;
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                let parts = split_space(field, &m, space)?;
                split |= parts.len() > 1;
                next.extend(parts);
            }
            spaces = next;
            stalled_passes = if split { 0 } else { stalled_passes + 1 };
            if stalled_passes > r {
                return Err(Error::EigenspaceSplit {
                    found: spaces.len(),
                    expected: r,
                });
            }
        }
    }
    spaces
        .into_iter()
        .map(|s| {
            let v = s.into_iter().next().unwrap();
            if v[0] == 0 {
                return Err(Error::DegreeRecovery {
                    prime: field.modulus(),
                    reason: "eigenvector vanishes at the identity class",
                });
            }
            let scale = field.inv(v[0]);
            Ok(v.into_iter().map(|x| field.mul(x, scale)).collect())
        })
        .collect()
}

/// Eigenspaces of `m` restricted to the invariant subspace spanned by the rows
/// of `basis`.
fn split_space(
    field: PrimeField,
    m: &Matrix,
    mut basis: Vec<Vec<u64>>,
) -> Result<Vec<Vec<Vec<u64>>>> {
    let d = basis.len();
    let pivots = field.rref(&mut basis);
    debug_assert_eq!(pivots.len(), d);
    // Column t of the restriction holds the coordinates of m b_t; with an
    // echelon basis those are the entries at the pivot columns.
    let images: Vec<Vec<u64>> = basis.iter().map(|b| field.mat_vec(m, b)).collect();
    let restricted: Matrix = (0..d)
        .map(|s| (0..d).map(|t| images[t][pivots[s]]).collect())
        .collect();
    let eigenvalues = field.roots(&field.charpoly(&restricted));
    let mut parts = Vec::with_capacity(eigenvalues.len());
    let mut total = 0;
    for lambda in eigenvalues {
        let shifted: Matrix = (0..d)
            .map(|s| {
                (0..d)
                    .map(|t| {
                        let diag = if s == t { lambda } else { 0 };
                        field.sub(restricted[s][t], diag)
                    })
                    .collect()
            })
            .collect();
        let coords = field.nullspace(&shifted, d);
        total += coords.len();
        let vectors: Vec<Vec<u64>> = coords
            .iter()
            .map(|c| {
                let mut v = vec![0u64; basis[0].len()];
                for (s, &cs) in c.iter().enumerate() {
                    for (x, &b) in v.iter_mut().zip(&basis[s]) {
                        *x = field.add(*x, field.mul(cs, b));
                    }
                }
                v
            })
            .collect();
        parts.push(vectors);
    }
    if total != d {
        return Err(Error::EigenspaceSplit {
            found: total,
            expected: d,
        });
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::standard::standard_group;

    fn std(f: &str, n: u64) -> Group {
        standard_group(f, n).unwrap()
    }

    fn degrees(g: &Group) -> DegreeFrequency {
        character_degrees(g).unwrap()
    }

    #[test]
    fn s3_class_algebra() {
        let g = std("symmetric", 3);
        let c = conjugacy_classes(&g).unwrap();
        let data = class_algebra(&g, &c).unwrap();
        let t = (0..c.len()).find(|&k| c.size(k) == 3).unwrap();
        assert_eq!(data.coefficient(t, t, 0), 3);
        assert_eq!(data.exponent(), 6);
        assert_eq!(data.dixon_prime(), 7);
    }

    #[test]
    fn class_algebra_identities() {
        for g in [
            std("symmetric", 4),
            std("holomorph_cyclic_prime", 7),
            std("sl_2_3", 3),
            std("quaternion", 8),
        ] {
            let c = conjugacy_classes(&g).unwrap();
            let a = class_algebra(&g, &c).unwrap();
            let r = a.classes();
            for i in 0..r {
                for j in 0..r {
                    let lhs: u64 = (0..r)
                        .map(|k| a.coefficient(i, j, k) * a.class_size(k))
                        .sum();
                    assert_eq!(lhs, a.class_size(i) * a.class_size(j));
                    for k in 0..r {
                        assert_eq!(a.coefficient(0, j, k), u64::from(j == k));
                        let (ii, jj, kk) =
                            (a.inverse_class(i), a.inverse_class(j), a.inverse_class(k));
                        assert_eq!(a.coefficient(i, j, k), a.coefficient(jj, ii, kk));
                    }
                }
            }
        }
    }

    #[test]
    fn dixon_prime_search() {
        assert_eq!(dixon_prime(6, 6, 600).unwrap(), 7);
        assert_eq!(dixon_prime(42, 42, 4200).unwrap(), 43);
        // 1 mod 2 and above 2 sqrt(12) ~ 6.93
        assert_eq!(dixon_prime(2, 12, 1200).unwrap(), 7);
        assert_eq!(next_admissible_prime(6, 6, 7, 600).unwrap(), 13);
        assert_eq!(
            dixon_prime(6, 6, 6),
            Err(Error::DixonPrimeNotFound {
                exponent: 6,
                order: 6,
                bound: 6
            })
        );
    }

    #[test]
    fn degree_examples() {
        assert_eq!(
            degrees(&std("holomorph_cyclic_prime", 7)),
            DegreeFrequency::from_pairs(&[(1, 6), (6, 1)])
        );
        assert_eq!(
            degrees(&std("cyclic", 10)),
            DegreeFrequency::from_pairs(&[(1, 10)])
        );
        assert_eq!(
            degrees(&std("symmetric", 3)),
            DegreeFrequency::from_pairs(&[(1, 2), (2, 1)])
        );
        assert_eq!(
            degrees(&std("alternating", 4)),
            DegreeFrequency::from_pairs(&[(1, 3), (3, 1)])
        );
        assert_eq!(
            degrees(&std("sl_2_3", 3)),
            DegreeFrequency::from_pairs(&[(1, 3), (2, 3), (3, 1)])
        );
        assert_eq!(
            degrees(&Group::trivial(1)),
            DegreeFrequency::from_pairs(&[(1, 1)])
        );
    }

    #[test]
    fn next_prime_gives_same_degrees() {
        let g = std("symmetric", 4);
        let c = conjugacy_classes(&g).unwrap();
        let data = class_algebra(&g, &c).unwrap();
        let l2 = next_admissible_prime(data.exponent(), 24, data.dixon_prime(), 2400).unwrap();
        assert!(l2 > data.dixon_prime());
        assert_eq!(
            degrees_mod_prime(&data, data.dixon_prime()).unwrap(),
            degrees_mod_prime(&data, l2).unwrap()
        );
    }

    #[test]
    fn display() {
        assert_eq!(
            DegreeFrequency::from_pairs(&[(1, 6), (6, 1)]).to_string(),
            "{1:6, 6:1}"
        );
    }
}
