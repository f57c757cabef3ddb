// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Standard graph families.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

/// A named graph family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle(usize),
    Path(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    /// `K_{1,n-1}`: `n` vertices in total, vertex 0 is the center.
    Star(usize),
    Petersen,
    /// `K_m` with the edge `0-1` subdivided by the new vertex `m`.
    SubdividedComplete(usize),
    /// `G(n, p)`; each pair is drawn independently in lexicographic order
    /// from a ChaCha8 stream seeded with `seed`.
    Random {
        n: usize,
        p: Rational,
        seed: u64,
    },
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::BadParam(format!("order {n} exceeds {MAX_ORDER}")));
    }
    Ok(())
}

pub fn generate(family: &Family) -> Result<Graph> {
    match *family {
        Family::Cycle(n) => {
            if n < 3 {
                return Err(Error::BadParam(format!("cycle needs n >= 3, got {n}")));
            }
            check_order(n)?;
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path(n) => {
            if n == 0 {
                return Err(Error::BadParam("path needs n >= 1".into()));
            }
            check_order(n)?;
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Complete(n) => {
            if n == 0 {
                return Err(Error::BadParam("complete graph needs n >= 1".into()));
            }
            check_order(n)?;
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(Error::BadParam(format!("K_{{{a},{b}}} needs both sides nonempty")));
            }
            check_order(a + b)?;
            Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
        }
        Family::Star(n) => {
            if n == 0 {
                return Err(Error::BadParam("star needs n >= 1".into()));
            }
            check_order(n)?;
            Graph::new(n, (1..n).map(|v| (0, v)))
        }
        Family::Petersen => {
            let outer = (0..5).map(|i| (i, (i + 1) % 5));
            let spokes = (0..5).map(|i| (i, i + 5));
            let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
            Graph::new(10, outer.chain(spokes).chain(inner))
        }
        Family::SubdividedComplete(m) => {
            if m < 2 {
                return Err(Error::BadParam(format!("subdivided_complete needs m >= 2, got {m}")));
            }
            check_order(m + 1)?;
            let k = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).filter(|&e| e != (0, 1));
            Graph::new(m + 1, k.chain([(0, m), (1, m)]))
        }
        Family::Random { n, p, seed } => {
            check_order(n)?;
            if p < Rational::zero() || p > Rational::one() {
                return Err(Error::BadParam(format!("edge probability {p} outside [0, 1]")));
            }
            let (num, den) = (*p.numer() as u64, *p.denom() as u64);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut pairs = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_range(0..den) < num {
                        pairs.push((u, v));
                    }
                }
            }
            Graph::new(n, pairs)
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a}:{b}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::Petersen => write!(f, "petersen"),
            Family::SubdividedComplete(m) => write!(f, "subdivided_complete:{m}"),
            Family::Random { n, p, seed } => write!(f, "random:{n}:{}:{seed}", rational::to_string(p)),
        }
    }
}

/// Accepts `name`, `name:a:b` and `name(a,b)`, e.g. `cycle:5`,
/// `complete_bipartite(2,3)`, `random:8:1/2:7`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let s = s.trim();
        let (name, args): (&str, Vec<&str>) = if let Some(open) = s.find('(') {
            let inner = s[open + 1..]
                .strip_suffix(')')
                .ok_or_else(|| Error::BadParam(format!("unbalanced parentheses in {s:?}")))?;
            (&s[..open], inner.split(',').map(str::trim).filter(|a| !a.is_empty()).collect())
        } else {
            let mut parts = s.split(':');
            (parts.next().unwrap_or(""), parts.collect())
        };
        let bad = || Error::BadParam(format!("cannot parse graph family {s:?}"));
        let num = |i: usize| -> Result<usize> { args.get(i).and_then(|a| a.parse().ok()).ok_or_else(bad) };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let family = match name.to_ascii_lowercase().replace('-', "_").as_str() {
            "cycle" => {
                arity(1)?;
                Family::Cycle(num(0)?)
            }
            "path" => {
                arity(1)?;
                Family::Path(num(0)?)
            }
            "complete" => {
                arity(1)?;
                Family::Complete(num(0)?)
            }
            "complete_bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(num(0)?, num(1)?)
            }
            "star" => {
                arity(1)?;
                Family::Star(num(0)?)
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "subdivided_complete" => {
                arity(1)?;
                Family::SubdividedComplete(num(0)?)
            }
            "random" => {
                arity(3)?;
                let p = rational::parse(args[1]).ok_or_else(bad)?;
                let seed = args[2].parse().map_err(|_| bad())?;
                Family::Random { n: num(0)?, p, seed }
            }
            _ => return Err(bad()),
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    #[test]
    fn cycle_five_is_two_regular() {
        let g = generate(&Family::Cycle(5)).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.degrees().iter().all(|&d| d == 2));
    }

    #[test]
    fn subdivided_complete_twelve() {
        let g = generate(&Family::SubdividedComplete(12)).unwrap();
        assert_eq!(g.n(), 13);
        let mut d = g.degrees();
        d.sort_unstable();
        assert_eq!(d[0], 2);
        assert!(d[1..].iter().all(|&x| x == 11));
        assert_eq!(g.degree(12), 2);
    }

    #[test]
    fn random_is_deterministic() {
        let f = Family::Random { n: 8, p: frac(1, 2), seed: 7 };
        assert_eq!(generate(&f).unwrap(), generate(&f).unwrap());
        let other = Family::Random { n: 8, p: frac(1, 2), seed: 8 };
        assert_ne!(generate(&f).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn bad_params() {
        assert!(matches!(generate(&Family::Cycle(2)), Err(Error::BadParam(_))));
        assert!(matches!(generate(&Family::Star(0)), Err(Error::BadParam(_))));
        assert!(matches!(generate(&Family::Random { n: 4, p: frac(3, 2), seed: 0 }), Err(Error::BadParam(_))));
    }

    #[test]
    fn petersen_shape() {
        let g = generate(&Family::Petersen).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree(), g.min_degree()), (10, 15, 3, 3));
    }

    #[test]
    fn parses_family_names() {
        assert_eq!("cycle:5".parse::<Family>().unwrap(), Family::Cycle(5));
        assert_eq!("complete_bipartite(2, 3)".parse::<Family>().unwrap(), Family::CompleteBipartite(2, 3));
        assert_eq!("Petersen".parse::<Family>().unwrap(), Family::Petersen);
        let r: Family = "random:8:1/2:7".parse().unwrap();
        assert_eq!(r, Family::Random { n: 8, p: frac(1, 2), seed: 7 });
        assert_eq!(r.to_string().parse::<Family>().unwrap(), r);
        assert!("cycle".parse::<Family>().is_err());
        assert!("hypercube:3".parse::<Family>().is_err());
    }
}
