//! 1-factorizations of complete graphs on the layers of an extension.
//!
//! Nodes are labelled `1..=k` in text and in [`OneFactorization::pairs`];
//! internally every factor is a partner table over `0..k`.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

/// An ordered list of `k - 1` edge-disjoint perfect matchings covering `K_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneFactorization {
    k: usize,
    /// `factors[c][v]` is the partner of node `v` (0-based) in factor `c`.
    factors: Vec<Vec<usize>>,
}

impl OneFactorization {
    /// Validates factors given as 1-based node pairs.
    pub fn from_pairs(k: usize, factors: Vec<Vec<(usize, usize)>>) -> Result<Self> {
        Self::from_pairs_at(k, factors, |_| 0)
    }

    fn from_pairs_at(
        k: usize,
        factors: Vec<Vec<(usize, usize)>>,
        line_of: impl Fn(usize) -> usize,
    ) -> Result<Self> {
        let invalid = |c: usize, msg: String| {
            let line = line_of(c);
            if line == 0 {
                Error::InvalidFactorization(msg)
            } else {
                Error::InvalidFactorization(format!("line {line}: {msg}"))
            }
        };
        if k < 2 || k % 2 == 1 {
            return Err(Error::InvalidFactorization(format!("k must be even and at least 2, got {k}")));
        }
        let mut used = BTreeSet::new();
        let mut tables = Vec::with_capacity(factors.len());
        for (c, pairs) in factors.into_iter().enumerate() {
            let mut partner = vec![usize::MAX; k];
            for (a, b) in pairs {
                if a == 0 || b == 0 || a > k || b > k {
                    return Err(invalid(c, format!("edge {a}-{b} has a node outside 1..={k}")));
                }
                if a == b {
                    return Err(invalid(c, format!("loop {a}-{b}")));
                }
                let (x, y) = (a - 1, b - 1);
                if partner[x] != usize::MAX || partner[y] != usize::MAX {
                    return Err(invalid(c, format!("factor {} is not a matching at edge {a}-{b}", c + 1)));
                }
                if !used.insert((x.min(y), x.max(y))) {
                    return Err(invalid(c, format!("duplicate edge {a}-{b}")));
                }
                partner[x] = y;
                partner[y] = x;
            }
            if let Some(v) = partner.iter().position(|&p| p == usize::MAX) {
                return Err(invalid(c, format!("factor {} does not cover node {}", c + 1, v + 1)));
            }
            tables.push(partner);
        }
        if tables.len() != k - 1 {
            return Err(Error::InvalidFactorization(format!(
                "union is not complete: {} factors, expected {}",
                tables.len(),
                k - 1
            )));
        }
        Ok(Self { k, factors: tables })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Partner of 0-based node `v` in 0-based factor `c`.
    pub fn partner(&self, c: usize, v: usize) -> usize {
        self.factors[c][v]
    }

    /// Factors as sorted lists of 1-based pairs `(a, b)` with `a < b`.
    pub fn pairs(&self) -> Vec<Vec<(usize, usize)>> {
        self.factors
            .iter()
            .map(|t| {
                (0..self.k)
                    .filter(|&v| v < t[v])
                    .map(|v| (v + 1, t[v] + 1))
                    .collect()
            })
            .collect()
    }

    /// The layer graph: `K_k` with each edge tagged by its factor (0-based).
    pub fn layer_graph(&self) -> (SimpleGraph, Vec<(usize, usize, usize)>) {
        let mut g = SimpleGraph::new(self.k);
        let mut tagged = Vec::new();
        for (c, t) in self.factors.iter().enumerate() {
            for v in (0..self.k).filter(|&v| v < t[v]) {
                g.insert_edge(v, t[v]);
                tagged.push((v, t[v], c));
            }
        }
        (g, tagged)
    }

    /// Whether the union of factors `a` and `b` is a single cycle through all nodes.
    pub fn pair_is_hamiltonian(&self, a: usize, b: usize) -> bool {
        let (fa, fb) = (&self.factors[a], &self.factors[b]);
        // alternate the two matchings from node 0 until returning
        let mut v = 0;
        let mut steps = 0;
        loop {
            v = fb[fa[v]];
            steps += 2;
            if v == 0 {
                return steps == self.k;
            }
        }
    }

    /// Checks that every pair of factors forms a Hamiltonian cycle, returning
    /// the first failing pair (0-based) otherwise.
    pub fn check_perfect(&self) -> std::result::Result<(), (usize, usize)> {
        let n = self.factors.len();
        for a in 0..n {
            for b in a + 1..n {
                if !self.pair_is_hamiltonian(a, b) {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    pub fn is_perfect(&self) -> bool {
        self.check_perfect().is_ok()
    }

    /// The classical perfect 1-factorization of `K_k` for prime `k - 1`.
    ///
    /// Over `Z_{k-1}` plus a point at infinity (labelled `k`), factor `i` is
    /// `{inf, i}` together with `{i + j, i - j}` for `1 <= j <= (k - 2) / 2`.
    pub fn prime_case(k: usize) -> Result<Self> {
        if k < 4 || k % 2 == 1 {
            return Err(Error::NotPrime(format!("k must be even and at least 4, got {k}")));
        }
        let p = k - 1;
        if !is_prime(p) {
            return Err(Error::NotPrime(format!("k - 1 = {p} is not prime")));
        }
        let factors = (0..p)
            .map(|i| {
                let mut pairs = vec![(i + 1, k)];
                for j in 1..=(k - 2) / 2 {
                    let a = (i + j) % p;
                    let b = (i + p - j) % p;
                    pairs.push((a.min(b) + 1, a.max(b) + 1));
                }
                pairs
            })
            .collect();
        Self::from_pairs(k, factors)
    }

    /// Parses the FAC format: `fac <k>` followed by `k - 1` lines of `a-b` pairs.
    ///
    /// Blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
        let mut words = header.split_whitespace();
        if words.next() != Some("fac") {
            return Err(Error::parse(hline, 1, "expected header `fac <k>`"));
        }
        let k: usize = words
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| Error::parse(hline, 5, "expected layer count after `fac`"))?;
        if words.next().is_some() {
            return Err(Error::parse(hline, 1, "trailing tokens in header"));
        }
        let mut factors = Vec::new();
        let mut line_numbers = Vec::new();
        for (lineno, line) in lines {
            let mut pairs = Vec::new();
            for token in line.split_whitespace() {
                let column = line.find(token).unwrap_or(0) + 1;
                let parsed = token
                    .split_once('-')
                    .and_then(|(a, b)| Some((a.parse::<usize>().ok()?, b.parse::<usize>().ok()?)));
                match parsed {
                    Some(pair) => pairs.push(pair),
                    None => return Err(Error::parse(lineno, column, format!("expected pair `a-b`, got `{token}`"))),
                }
            }
            if pairs.len() != k / 2 {
                return Err(Error::parse(
                    lineno,
                    1,
                    format!("factor has {} pairs, expected {}", pairs.len(), k / 2),
                ));
            }
            factors.push(pairs);
            line_numbers.push(lineno);
        }
        Self::from_pairs_at(k, factors, |c| line_numbers.get(c).copied().unwrap_or(0))
    }

    /// Writes the FAC format.
    pub fn to_fac(&self) -> String {
        let mut out = format!("fac {}\n", self.k);
        for pairs in self.pairs() {
            let line: Vec<String> = pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for OneFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_fac())
    }
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}
