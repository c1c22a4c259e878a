//! Power products.
//!
//! Exponents are stored sparsely as `(variable index, exponent)` pairs,
//! sorted by index, with zero exponents omitted. Indices refer to positions
//! in the active [`crate::VariableOrdering`], so `Ord` on monomials is the
//! lexicographic order induced by that ordering: the monomial with the larger
//! exponent on the highest differing variable compares greater.

use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: Vec<(u32, u32)>,
}

impl Monomial {
    /// The empty power product, i.e. 1.
    pub fn unit() -> Self {
        Monomial { exps: Vec::new() }
    }

    pub fn variable(index: u32) -> Self {
        Monomial { exps: alloc::vec![(index, 1)] }
    }

    pub fn power(index: u32, exp: u32) -> Self {
        if exp == 0 {
            Monomial::unit()
        } else {
            Monomial { exps: alloc::vec![(index, exp)] }
        }
    }

    /// Builds from arbitrary pairs; merges repeats and drops zeros.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        let mut exps: Vec<(u32, u32)> = Vec::with_capacity(pairs.len());
        for &(v, e) in pairs {
            if e == 0 {
                continue;
            }
            match exps.iter_mut().find(|(u, _)| *u == v) {
                Some((_, acc)) => *acc += e,
                None => exps.push((v, e)),
            }
        }
        exps.sort_unstable_by_key(|&(v, _)| v);
        Monomial { exps }
    }

    pub fn is_unit(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.exps
            .iter()
            .find(|&&(v, _)| v == index)
            .map_or(0, |&(_, e)| e)
    }

    pub fn exponents(&self) -> &[(u32, u32)] {
        &self.exps
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&(_, e)| e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    Ordering::Less => {
                        exps.push((v, e));
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push((w, f));
                        j += 1;
                    }
                    Ordering::Equal => {
                        exps.push((v, e + f));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    exps.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    exps.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { exps }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().all(|&(v, e)| other.exponent(v) >= e)
    }

    /// `other / self`, if exact.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(other.exps.len());
        let mut i = 0;
        for &(v, e) in &other.exps {
            let mut needed = 0;
            while i < self.exps.len() && self.exps[i].0 <= v {
                if self.exps[i].0 == v {
                    needed = self.exps[i].1;
                } else {
                    // a divisor variable missing from `other`
                    return None;
                }
                i += 1;
            }
            if needed > e {
                return None;
            }
            if e - needed > 0 {
                exps.push((v, e - needed));
            }
        }
        if i < self.exps.len() {
            return None;
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exps = Vec::with_capacity(self.exps.len() + other.exps.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exps.len() || j < other.exps.len() {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    Ordering::Less => {
                        exps.push((v, e));
                        i += 1;
                    }
                    Ordering::Greater => {
                        exps.push((w, f));
                        j += 1;
                    }
                    Ordering::Equal => {
                        exps.push((v, e.max(f)));
                        i += 1;
                        j += 1;
                    }
                },
                (Some(&p), None) => {
                    exps.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    exps.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        Monomial { exps }
    }

    /// Whether the two power products share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .all(|&(v, _)| other.exponent(v) == 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // Walk both sparse lists; the first position (highest variable, i.e.
        // smallest index) where the exponents differ decides.
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.exps.get(i), other.exps.get(j)) {
                (Some(&(v, e)), Some(&(w, f))) => match v.cmp(&w) {
                    // `self` has a nonzero exponent on a higher variable.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match e.cmp(&f) {
                            Ordering::Equal => {}
                            ne => return ne,
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (None, None) => return Ordering::Equal,
            }
        }
    }
}
