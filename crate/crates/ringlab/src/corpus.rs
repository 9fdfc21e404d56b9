//! Deterministic corpus generation: the builtin ring families swept by the
//! verification driver, and seeded random polynomial systems.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{PolySystem, Polynomial, Term};
use crate::ring::{RingDescriptor, RingElement, RingHandle};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default)]
pub struct CorpusSpec {
    /// Quotient rings of the integers up to this modulus.
    pub quotient_int_max: u64,
    /// Coefficient primes for the polynomial quotient family.
    pub poly_primes: Vec<u64>,
    /// Largest degree of the monic moduli.
    pub poly_max_degree: u32,
    /// Products of up to this many base rings.
    pub product_max_arity: usize,
    /// Upper bound on the number of elements of a product.
    pub product_max_size: u64,
    /// Localized integer rings, one per prime set.
    pub semilocal_sets: Vec<Vec<u64>>,
    /// Points allowed in the labeled poset sweep.
    pub poset_point_bound: usize,
    /// Seed recorded in every randomized report.
    pub seed: u64,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            quotient_int_max: 60,
            poly_primes: vec![2, 3],
            poly_max_degree: 3,
            product_max_arity: 3,
            product_max_size: 200,
            semilocal_sets: vec![vec![2], vec![2, 3], vec![2, 3, 5]],
            poset_point_bound: 5,
            seed: 0x52494e47,
        }
    }
}

pub fn builtin() -> CorpusSpec {
    CorpusSpec::default()
}

fn descriptor_size(desc: &RingDescriptor) -> u64 {
    match desc {
        RingDescriptor::QuotientInt { modulus } => *modulus,
        RingDescriptor::PolyQuotient { p, modulus_poly } => {
            p.pow(modulus_poly.len() as u32 - 1)
        }
        RingDescriptor::Product { factors } => factors.iter().map(descriptor_size).product(),
        _ => 0,
    }
}

impl CorpusSpec {
    /// The base finite rings: integer quotients and polynomial quotients.
    pub fn base_descriptors(&self) -> Vec<RingDescriptor> {
        let mut out = Vec::new();
        for n in 2..=self.quotient_int_max {
            out.push(RingDescriptor::QuotientInt { modulus: n });
        }
        for &p in &self.poly_primes {
            for deg in 1..=self.poly_max_degree {
                // all monic moduli of the given degree
                let combos = p.pow(deg);
                for mut code in 0..combos {
                    let mut coeffs = Vec::with_capacity(deg as usize + 1);
                    for _ in 0..deg {
                        coeffs.push(code % p);
                        code /= p;
                    }
                    coeffs.push(1);
                    out.push(RingDescriptor::PolyQuotient {
                        p,
                        modulus_poly: coeffs,
                    });
                }
            }
        }
        out
    }

    /// Base rings plus all sorted multisets of 2..=arity of them whose
    /// product stays within the size bound.
    pub fn finite_descriptors(&self) -> Vec<RingDescriptor> {
        let base = self.base_descriptors();
        let mut out = base.clone();
        // pairs
        if self.product_max_arity >= 2 {
            for i in 0..base.len() {
                let si = descriptor_size(&base[i]);
                for j in i..base.len() {
                    let sj = descriptor_size(&base[j]);
                    if si * sj > self.product_max_size {
                        continue;
                    }
                    out.push(RingDescriptor::Product {
                        factors: vec![base[i].clone(), base[j].clone()],
                    });
                    if self.product_max_arity >= 3 {
                        for k in j..base.len() {
                            let sk = descriptor_size(&base[k]);
                            if si * sj * sk > self.product_max_size {
                                continue;
                            }
                            out.push(RingDescriptor::Product {
                                factors: vec![
                                    base[i].clone(),
                                    base[j].clone(),
                                    base[k].clone(),
                                ],
                            });
                        }
                    }
                }
            }
        }
        out
    }

    /// Localized integer rings and the product of the first multi-prime one
    /// with itself.
    pub fn semilocal_descriptors(&self) -> Vec<RingDescriptor> {
        let mut out = Vec::new();
        for primes in &self.semilocal_sets {
            out.push(RingDescriptor::SemilocalInt {
                primes: primes.clone(),
            });
        }
        if let Some(primes) = self.semilocal_sets.iter().find(|s| s.len() >= 2) {
            let factor = RingDescriptor::SemilocalInt {
                primes: primes.clone(),
            };
            out.push(RingDescriptor::Product {
                factors: vec![factor.clone(), factor],
            });
        }
        out
    }

    pub fn all_descriptors(&self) -> Vec<RingDescriptor> {
        let mut out = self.finite_descriptors();
        out.extend(self.semilocal_descriptors());
        out
    }
}

/// Seeded random systems over a finite ring: at most 2 variables, at most 2
/// equations, total degree at most 3 per term.
pub fn random_systems(ring: &RingHandle, count: usize, seed: u64) -> Result<Vec<PolySystem>> {
    let n = ring.size().expect("random systems need a finite ring");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let vars = rng.gen_range(1..=2usize);
        let eqs = rng.gen_range(1..=2usize);
        let mut polys = Vec::with_capacity(eqs);
        for _ in 0..eqs {
            let term_count = rng.gen_range(1..=4usize);
            let mut terms = Vec::with_capacity(term_count);
            for _ in 0..term_count {
                let mut exps = vec![0u32; vars];
                let mut budget = 3u32;
                for e in exps.iter_mut() {
                    *e = rng.gen_range(0..=budget);
                    budget -= *e;
                }
                terms.push(Term {
                    coeff: RingElement::Int(rng.gen_range(0..n)),
                    exps,
                });
            }
            polys.push(Polynomial::new(ring, vars, terms)?);
        }
        out.push(PolySystem { vars, polys });
    }
    Ok(out)
}

/// Derives a per-ring stream from the corpus seed so each ring sees an
/// independent deterministic sequence.
pub fn ring_seed(base: u64, index: usize) -> u64 {
    base.wrapping_mul(0x9e3779b97f4a7c15)
        .wrapping_add(index as u64)
}

/// All labeled posets on up to `bound` points, as order matrices given by
/// their strict relations. Enumeration assigns one of three states to each
/// unordered pair and keeps the transitive antisymmetric ones.
pub fn labeled_posets(bound: usize) -> Vec<(usize, Vec<(usize, usize)>)> {
    let mut out = Vec::new();
    for n in 0..=bound {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        let mut states = vec![0u8; pairs.len()];
        loop {
            let mut le = vec![vec![false; n]; n];
            for i in 0..n {
                le[i][i] = true;
            }
            for (slot, &(i, j)) in pairs.iter().enumerate() {
                match states[slot] {
                    1 => le[i][j] = true,
                    2 => le[j][i] = true,
                    _ => {}
                }
            }
            // transitivity check
            let mut transitive = true;
            'check: for i in 0..n {
                for j in 0..n {
                    if !le[i][j] {
                        continue;
                    }
                    for k in 0..n {
                        if le[j][k] && !le[i][k] {
                            transitive = false;
                            break 'check;
                        }
                    }
                }
            }
            if transitive {
                let mut relations = Vec::new();
                for i in 0..n {
                    for j in 0..n {
                        if i != j && le[i][j] {
                            relations.push((i, j));
                        }
                    }
                }
                out.push((n, relations));
            }
            // advance the ternary counter
            let mut slot = 0;
            loop {
                if slot == states.len() {
                    break;
                }
                states[slot] += 1;
                if states[slot] < 3 {
                    break;
                }
                states[slot] = 0;
                slot += 1;
            }
            if slot == states.len() {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::ring_from_descriptor;

    #[test]
    fn base_family_counts() {
        let spec = builtin();
        let base = spec.base_descriptors();
        // 59 integer quotients; monic moduli: 2+4+8 over F2, 3+9+27 over F3
        assert_eq!(base.len(), 59 + 14 + 39);
    }

    #[test]
    fn products_respect_size_bound() {
        let spec = builtin();
        for desc in spec.finite_descriptors() {
            assert!(descriptor_size(&desc) <= spec.product_max_size);
        }
    }

    #[test]
    fn semilocal_family_includes_the_square() {
        let spec = builtin();
        let descs = spec.semilocal_descriptors();
        assert_eq!(descs.len(), 4);
        assert!(matches!(descs[3], RingDescriptor::Product { .. }));
    }

    #[test]
    fn random_systems_are_deterministic() {
        let ring = ring_from_descriptor(&RingDescriptor::QuotientInt { modulus: 6 }).unwrap();
        let a = random_systems(&ring, 5, 42).unwrap();
        let b = random_systems(&ring, 5, 42).unwrap();
        assert_eq!(a, b);
        let c = random_systems(&ring, 5, 43).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn poset_counts_match_the_labeled_series() {
        // labeled posets on 0..4 points: 1, 1, 3, 19, 219
        let posets = labeled_posets(4);
        let count = |n: usize| posets.iter().filter(|(m, _)| *m == n).count();
        assert_eq!(count(0), 1);
        assert_eq!(count(1), 1);
        assert_eq!(count(2), 3);
        assert_eq!(count(3), 19);
        assert_eq!(count(4), 219);
    }
}
