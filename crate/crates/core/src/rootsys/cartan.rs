//! Bourbaki Cartan matrices and recognition of a Cartan matrix up to node
//! relabeling.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Letter {
    pub const ALL: [Letter; 7] = [
        Letter::A,
        Letter::B,
        Letter::C,
        Letter::D,
        Letter::E,
        Letter::F,
        Letter::G,
    ];

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'A',
            Letter::B => 'B',
            Letter::C => 'C',
            Letter::D => 'D',
            Letter::E => 'E',
            Letter::F => 'F',
            Letter::G => 'G',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        Letter::ALL
            .into_iter()
            .find(|l| l.as_char() == c.to_ascii_uppercase())
    }
}

/// Isomorphism class of a simple complex root system.
///
/// `D3` is admitted (it is `A3` with a different node numbering) because the
/// orthogonal families reach it; every other bound is the usual one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    letter: Letter,
    rank: usize,
}

impl SimpleType {
    pub fn new(letter: Letter, rank: usize) -> Result<Self> {
        let ok = match letter {
            Letter::A => rank >= 1,
            Letter::B | Letter::C => rank >= 2,
            Letter::D => rank >= 3,
            Letter::E => (6..=8).contains(&rank),
            Letter::F => rank == 4,
            Letter::G => rank == 2,
        };
        if ok {
            Ok(Self { letter, rank })
        } else {
            Err(Error::InvalidType {
                letter: letter.as_char(),
                rank,
            })
        }
    }

    pub fn letter(self) -> Letter {
        self.letter
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of roots, from the closed-form count.
    pub fn root_count(self) -> usize {
        let n = self.rank;
        match self.letter {
            Letter::A => n * (n + 1),
            Letter::B | Letter::C => 2 * n * n,
            Letter::D => 2 * n * (n - 1),
            Letter::E => match n {
                6 => 72,
                7 => 126,
                _ => 240,
            },
            Letter::F => 48,
            Letter::G => 12,
        }
    }

    /// Bourbaki Cartan matrix, `C[i][j] = 2<a_i,a_j>/<a_j,a_j>`.
    ///
    /// Orientation: `B_n` has `a_n` short, `C_n` has `a_n` long, `F4` has
    /// `a_1, a_2` long, `G2` has `a_1` short. `D_n` hangs `a_{n-1}` and `a_n`
    /// off `a_{n-2}`; `E_n` hangs `a_2` off `a_4` of the chain `a_1 a_3 a_4 ...`.
    pub fn cartan_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut simple = |i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.letter {
            Letter::A | Letter::B | Letter::C => {
                for i in 0..n.saturating_sub(1) {
                    simple(i, i + 1);
                }
            }
            Letter::D => {
                for i in 0..n - 2 {
                    simple(i, i + 1);
                }
                simple(n - 3, n - 1);
            }
            Letter::E => {
                simple(0, 2);
                simple(1, 3);
                for i in 2..n - 1 {
                    simple(i, i + 1);
                }
            }
            Letter::F => {
                simple(0, 1);
                simple(2, 3);
            }
            Letter::G => {}
        }
        match self.letter {
            Letter::B => c[n - 2][n - 1] = -2,
            Letter::C => c[n - 1][n - 2] = -2,
            Letter::F => {
                c[1][2] = -2;
                c[2][1] = -1;
            }
            Letter::G => {
                c[0][1] = -1;
                c[1][0] = -3;
            }
            _ => {}
        }
        c
    }

    /// Involution of the node set induced by `-w0`, in Bourbaki numbering.
    pub fn duality_involution(self) -> Vec<usize> {
        let n = self.rank;
        let mut p: Vec<usize> = (0..n).collect();
        match self.letter {
            Letter::A => p.reverse(),
            Letter::D if n % 2 == 1 => p.swap(n - 2, n - 1),
            Letter::E if n == 6 => {
                p.swap(0, 5);
                p.swap(2, 4);
            }
            _ => {}
        }
        p
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter.as_char(), self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        let letter = chars
            .next()
            .and_then(Letter::from_char)
            .ok_or_else(|| Error::Parse(format!("bad type letter in {s:?}")))?;
        let rank = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad type rank in {s:?}")))?;
        Self::new(letter, rank)
    }
}

impl Serialize for SimpleType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SimpleType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Candidate order for recognition. `A` precedes `D` so `D3` is reported as
/// `A3`, and `C` precedes `B` so the rank-two double bond is reported as `C2`.
const RECOGNITION_ORDER: [Letter; 7] = [
    Letter::A,
    Letter::C,
    Letter::B,
    Letter::D,
    Letter::E,
    Letter::F,
    Letter::G,
];

/// Identifies a connected Cartan matrix.
///
/// Returns the type together with `map`, where `map[k]` is the input index
/// playing the role of Bourbaki node `k`.
pub fn recognize(cartan: &[Vec<i64>]) -> Option<(SimpleType, Vec<usize>)> {
    let n = cartan.len();
    if n == 0 || cartan.iter().any(|r| r.len() != n) {
        return None;
    }
    for letter in RECOGNITION_ORDER {
        let Ok(t) = SimpleType::new(letter, n) else {
            continue;
        };
        let canon = t.cartan_matrix();
        let mut map = Vec::with_capacity(n);
        let mut used = vec![false; n];
        if extend_isomorphism(&canon, cartan, &mut map, &mut used) {
            return Some((t, map));
        }
    }
    None
}

fn extend_isomorphism(
    canon: &[Vec<i64>],
    target: &[Vec<i64>],
    map: &mut Vec<usize>,
    used: &mut [bool],
) -> bool {
    let k = map.len();
    if k == canon.len() {
        return true;
    }
    for cand in 0..target.len() {
        if used[cand] {
            continue;
        }
        let consistent = target[cand][cand] == canon[k][k]
            && (0..k).all(|l| {
                target[cand][map[l]] == canon[k][l] && target[map[l]][cand] == canon[l][k]
            });
        if consistent {
            used[cand] = true;
            map.push(cand);
            if extend_isomorphism(canon, target, map, used) {
                return true;
            }
            map.pop();
            used[cand] = false;
        }
    }
    false
}

/// Connected components of the Dynkin graph restricted to `nodes`, each
/// sorted ascending.
pub fn components(cartan: &[Vec<i64>], nodes: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; cartan.len()];
    let in_set: Vec<bool> = (0..cartan.len()).map(|i| nodes.contains(&i)).collect();
    let mut out = Vec::new();
    for &start in nodes {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..cartan.len() {
                if in_set[j] && !seen[j] && cartan[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SimpleType {
        s.parse().unwrap()
    }

    #[test]
    fn bounds() {
        assert!(SimpleType::new(Letter::A, 0).is_err());
        assert!(SimpleType::new(Letter::B, 1).is_err());
        assert!(SimpleType::new(Letter::D, 2).is_err());
        assert!(SimpleType::new(Letter::E, 9).is_err());
        assert!(SimpleType::new(Letter::F, 3).is_err());
        assert!(SimpleType::new(Letter::G, 3).is_err());
        assert!(SimpleType::new(Letter::D, 3).is_ok());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(t("e6").to_string(), "E6");
        assert!("X3".parse::<SimpleType>().is_err());
        assert!("A".parse::<SimpleType>().is_err());
    }

    #[test]
    fn recognizes_every_type_under_relabeling() {
        for s in ["A1", "A4", "B3", "C4", "D5", "E6", "E7", "E8", "F4", "G2"] {
            let ty = t(s);
            let c = ty.cartan_matrix();
            let n = c.len();
            // Reverse the node order.
            let perm: Vec<usize> = (0..n).rev().collect();
            let shuffled: Vec<Vec<i64>> = (0..n)
                .map(|i| (0..n).map(|j| c[perm[i]][perm[j]]).collect())
                .collect();
            let (found, map) = recognize(&shuffled).unwrap();
            assert_eq!(found, ty, "{s}");
            for k in 0..n {
                for l in 0..n {
                    assert_eq!(shuffled[map[k]][map[l]], c[k][l]);
                }
            }
        }
    }

    #[test]
    fn low_rank_coincidences() {
        assert_eq!(recognize(&t("D3").cartan_matrix()).unwrap().0, t("A3"));
        assert_eq!(recognize(&t("B2").cartan_matrix()).unwrap().0, t("C2"));
    }

    #[test]
    fn disconnected_is_unrecognized() {
        let c = vec![vec![2, 0], vec![0, 2]];
        assert!(recognize(&c).is_none());
    }

    #[test]
    fn duality() {
        assert_eq!(t("A3").duality_involution(), vec![2, 1, 0]);
        assert_eq!(t("D5").duality_involution(), vec![0, 1, 2, 4, 3]);
        assert_eq!(t("D4").duality_involution(), vec![0, 1, 2, 3]);
        assert_eq!(t("E6").duality_involution(), vec![5, 1, 4, 3, 2, 0]);
        assert_eq!(t("E7").duality_involution(), (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn components_of_black_sets() {
        let c = t("A5").cartan_matrix();
        assert_eq!(components(&c, &[0, 2, 4]), vec![vec![0], vec![2], vec![4]]);
        assert_eq!(components(&c, &[1, 2, 4]), vec![vec![1, 2], vec![4]]);
    }
}
