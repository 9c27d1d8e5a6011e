use crate::error::{Error, Result};
use crate::graph::BitMatrix;

use super::Poset;

/// Partial linear extension: distinct elements listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ple(pub Vec<usize>);

impl Ple {
    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LocalRealizer {
    ples: Vec<Ple>,
}

impl LocalRealizer {
    pub fn new(ples: Vec<Ple>) -> Self {
        LocalRealizer { ples }
    }

    pub fn ples(&self) -> &[Ple] {
        &self.ples
    }

    /// `μ_x`: number of ples containing each element.
    pub fn frequencies(&self, n: usize) -> Vec<usize> {
        let mut mu = vec![0; n];
        for ple in &self.ples {
            for &x in ple.elements() {
                if x < n {
                    mu[x] += 1;
                }
            }
        }
        mu
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `earlier` precedes `later` in the ple although `later ≺ earlier`.
    Reversal {
        ple: usize,
        earlier: usize,
        later: usize,
    },
    /// An element occurs twice in one ple.
    Repeated { ple: usize, element: usize },
    /// `x ≺ y` but no ple places `x` before `y`.
    MissingComparable { x: usize, y: usize },
    /// `x`, `y` incomparable but no ple places `x` before `y`.
    MissingIncomparable { x: usize, y: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizerReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
    pub mu: usize,
    pub mu_per_element: Vec<usize>,
}

/// Checks both local realizer conditions and that every ple is a linear
/// extension of the subposet on its elements.
pub fn verify_local_realizer(p: &Poset, r: &LocalRealizer) -> Result<RealizerReport> {
    let n = p.n();
    for ple in r.ples() {
        if let Some(&x) = ple.elements().iter().find(|&&x| x >= n) {
            return Err(Error::VertexOutOfRange { vertex: x, n });
        }
    }
    let words = n.div_ceil(64);
    // before[y] holds every x placed before y in some ple
    let mut before = BitMatrix::new(n);
    let mut violations = Vec::new();
    let mut prefix = vec![0u64; words];
    for (idx, ple) in r.ples().iter().enumerate() {
        prefix.iter_mut().for_each(|w| *w = 0);
        for &y in ple.elements() {
            if (prefix[y / 64] >> (y % 64)) & 1 == 1 {
                violations.push(Violation::Repeated {
                    ple: idx,
                    element: y,
                });
                continue;
            }
            for (w, (&pre, &up)) in prefix.iter().zip(p.above(y)).enumerate() {
                let mut bad = pre & up;
                while bad != 0 {
                    let z = w * 64 + bad.trailing_zeros() as usize;
                    bad &= bad - 1;
                    violations.push(Violation::Reversal {
                        ple: idx,
                        earlier: z,
                        later: y,
                    });
                }
            }
            for (w, &pre) in prefix.iter().enumerate() {
                let mut bits = pre;
                while bits != 0 {
                    before.set(y, w * 64 + bits.trailing_zeros() as usize);
                    bits &= bits - 1;
                }
            }
            prefix[y / 64] |= 1 << (y % 64);
        }
    }
    for x in 0..n {
        for y in 0..n {
            if x == y || before.get(y, x) || p.less(y, x) {
                continue;
            }
            violations.push(if p.less(x, y) {
                Violation::MissingComparable { x, y }
            } else {
                Violation::MissingIncomparable { x, y }
            });
        }
    }
    let mu_per_element = r.frequencies(n);
    Ok(RealizerReport {
        valid: violations.is_empty(),
        violations,
        mu: mu_per_element.iter().copied().max().unwrap_or(0),
        mu_per_element,
    })
}

/// Wraps a family of linear extensions as a local realizer. Each sequence
/// must list all elements once and respect the order.
pub fn realizer_from_linear_extensions(p: &Poset, exts: &[Vec<usize>]) -> Result<LocalRealizer> {
    let n = p.n();
    for (index, ext) in exts.iter().enumerate() {
        let mut seen = vec![false; n];
        for &x in ext {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidParameter(format!(
                    "sequence {index} repeats element {x}"
                )));
            }
        }
        if ext.len() != n {
            return Err(Error::InvalidParameter(format!(
                "sequence {index} has {} of {n} elements",
                ext.len()
            )));
        }
        for (i, &x) in ext.iter().enumerate() {
            if let Some(&y) = ext[i + 1..].iter().find(|&&y| p.less(y, x)) {
                return Err(Error::NotAnExtension { index, x, y });
            }
        }
    }
    Ok(LocalRealizer::new(exts.iter().cloned().map(Ple).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{crown_local_realizer, crown_poset};

    #[test]
    fn chain_and_antichain() {
        let chain = Poset::chain(2);
        let r = LocalRealizer::new(vec![Ple(vec![0, 1])]);
        let rep = verify_local_realizer(&chain, &r).unwrap();
        assert!(rep.valid);
        assert_eq!(rep.mu, 1);

        let anti = Poset::antichain(2);
        let rep = verify_local_realizer(&anti, &r).unwrap();
        assert!(!rep.valid);
        assert_eq!(
            rep.violations,
            vec![Violation::MissingIncomparable { x: 1, y: 0 }]
        );
    }

    #[test]
    fn reversal_and_repeats_flagged() {
        let chain = Poset::chain(3);
        let r = LocalRealizer::new(vec![Ple(vec![0, 1, 2]), Ple(vec![2, 0, 0])]);
        let rep = verify_local_realizer(&chain, &r).unwrap();
        assert!(rep.violations.contains(&Violation::Reversal {
            ple: 1,
            earlier: 2,
            later: 0
        }));
        assert!(rep
            .violations
            .contains(&Violation::Repeated { ple: 1, element: 0 }));
        let r = LocalRealizer::new(vec![Ple(vec![0, 7])]);
        assert!(verify_local_realizer(&chain, &r).is_err());
    }

    #[test]
    fn crowns() {
        for n in [2, 3, 4, 50] {
            let p = crown_poset(n).unwrap();
            let r = crown_local_realizer(n).unwrap();
            assert_eq!(r.ples().len(), n + 2);
            let rep = verify_local_realizer(&p, &r).unwrap();
            assert!(rep.valid, "{:?}", rep.violations);
            assert_eq!(rep.mu, 3);
        }
        assert!(crown_poset(1).is_err());
    }

    #[test]
    fn classical_realizers() {
        let chain = Poset::chain(3);
        let r = realizer_from_linear_extensions(&chain, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(verify_local_realizer(&chain, &r).unwrap().mu, 1);

        let anti = Poset::antichain(2);
        let r = realizer_from_linear_extensions(&anti, &[vec![0, 1], vec![1, 0]]).unwrap();
        let rep = verify_local_realizer(&anti, &r).unwrap();
        assert!(rep.valid);
        assert_eq!(rep.mu, 2);

        assert_eq!(
            realizer_from_linear_extensions(&chain, &[vec![1, 0, 2]]),
            Err(Error::NotAnExtension {
                index: 0,
                x: 1,
                y: 0
            })
        );
        assert!(realizer_from_linear_extensions(&chain, &[vec![0, 1]]).is_err());
    }
}
