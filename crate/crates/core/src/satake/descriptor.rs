//! Names of the non-compact real simple Lie algebras without complex structure.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::restricted::RestrictedType;
use crate::rootsys::{Letter, SimpleType};

/// A real form, identified by family and parameters.
///
/// Pairs `(p, q)` are stored with `p <= q`; the parser swaps reversed input.
/// `SuStar { k }` is `su*(2k)` and `SoStar { n }` is `so*(2n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RealFormDescriptor {
    SlR { n: usize },
    SuStar { k: usize },
    SuPq { p: usize, q: usize },
    SoPq { p: usize, q: usize },
    SpR { n: usize },
    SpPq { p: usize, q: usize },
    SoStar { n: usize },
    G2Split,
    F4Split,
    F4Minus20,
    E6Split,
    E6Quasisplit,
    E6Minus14,
    E6Minus26,
    E7Split,
    E7Minus5,
    E7Minus25,
    E8Split,
    E8Minus24,
}

use RealFormDescriptor::*;

const EXCEPTIONAL: [(RealFormDescriptor, &str); 12] = [
    (G2Split, "g2(2)"),
    (F4Split, "f4(4)"),
    (F4Minus20, "f4(-20)"),
    (E6Split, "e6(6)"),
    (E6Quasisplit, "e6(2)"),
    (E6Minus14, "e6(-14)"),
    (E6Minus26, "e6(-26)"),
    (E7Split, "e7(7)"),
    (E7Minus5, "e7(-5)"),
    (E7Minus25, "e7(-25)"),
    (E8Split, "e8(8)"),
    (E8Minus24, "e8(-24)"),
];

impl RealFormDescriptor {
    /// Family tag, e.g. `so_pq` or `e6_m26`.
    pub fn family(&self) -> &'static str {
        match self {
            SlR { .. } => "sl_R",
            SuStar { .. } => "su_star",
            SuPq { .. } => "su_pq",
            SoPq { .. } => "so_pq",
            SpR { .. } => "sp_R",
            SpPq { .. } => "sp_pq",
            SoStar { .. } => "so_star",
            G2Split => "g2_2",
            F4Split => "f4_4",
            F4Minus20 => "f4_m20",
            E6Split => "e6_6",
            E6Quasisplit => "e6_2",
            E6Minus14 => "e6_m14",
            E6Minus26 => "e6_m26",
            E7Split => "e7_7",
            E7Minus5 => "e7_m5",
            E7Minus25 => "e7_m25",
            E8Split => "e8_8",
            E8Minus24 => "e8_m24",
        }
    }

    pub fn canonical_name(&self) -> String {
        self.to_string()
    }

    pub fn check_bounds(&self) -> Result<()> {
        let fail = |bound: &str| {
            Err(Error::OutOfRangeParams {
                form: self.to_string(),
                bound: bound.to_string(),
            })
        };
        match *self {
            SlR { n } if n < 2 => fail("sl(n,R) needs n >= 2"),
            SuStar { k } if k < 2 => fail("su*(2k) needs k >= 2"),
            SuPq { p, q } if p < 1 || p > q => fail("su(p,q) needs 1 <= p <= q"),
            SoPq { p, q } if p < 1 || p > q => fail("so(p,q) needs 1 <= p <= q"),
            SoPq { p, q } if p + q < 5 => fail("so(p,q) needs p + q >= 5"),
            SpR { n } if n < 1 => fail("sp(n,R) needs n >= 1"),
            SpPq { p, q } if p < 1 || p > q => fail("sp(p,q) needs 1 <= p <= q"),
            SoStar { n } if n < 3 => fail("so*(2n) needs n >= 3"),
            _ => Ok(()),
        }
    }

    /// Type of the complexification.
    pub fn complex_type(&self) -> Result<SimpleType> {
        self.check_bounds()?;
        let (letter, rank) = match *self {
            SlR { n } => (Letter::A, n - 1),
            SuStar { k } => (Letter::A, 2 * k - 1),
            SuPq { p, q } => (Letter::A, p + q - 1),
            SoPq { p, q } if (p + q) % 2 == 1 => (Letter::B, (p + q - 1) / 2),
            SoPq { p, q } => (Letter::D, (p + q) / 2),
            SpR { n: 1 } => (Letter::A, 1),
            SpR { n } => (Letter::C, n),
            SpPq { p, q } => (Letter::C, p + q),
            SoStar { n } => (Letter::D, n),
            G2Split => (Letter::G, 2),
            F4Split | F4Minus20 => (Letter::F, 4),
            E6Split | E6Quasisplit | E6Minus14 | E6Minus26 => (Letter::E, 6),
            E7Split | E7Minus5 | E7Minus25 => (Letter::E, 7),
            E8Split | E8Minus24 => (Letter::E, 8),
        };
        SimpleType::new(letter, rank)
    }

    /// Reference list of Hermitian symmetric pairs, including `sl(2,R) = su(1,1)`.
    ///
    /// Kept for cross-checking only; the crate derives the Hermitian property
    /// from the restricted root system.
    pub fn hermitian_expected(&self) -> bool {
        matches!(
            self,
            SuPq { .. }
                | SoPq { p: 2, .. }
                | SpR { .. }
                | SoStar { .. }
                | E6Minus14
                | E7Minus25
                | SlR { n: 2 }
        )
    }

    /// Reference restricted root system type, with the recognizer's
    /// conventions (`B1 = C1 -> A1`, `B2 -> C2`, `D3 -> A3`).
    pub fn restricted_expected(&self) -> RestrictedType {
        let reduced = |letter, rank| RestrictedType::reduced(letter, rank);
        match *self {
            SlR { n } => reduced(Letter::A, n - 1),
            SuStar { k } => reduced(Letter::A, k - 1),
            SuPq { p, q } | SpPq { p, q } if p < q => RestrictedType::bc(p),
            SuPq { p, .. } | SpPq { p, .. } => reduced(Letter::C, p),
            SoPq { p, q } if p < q => reduced(Letter::B, p),
            SoPq { p, .. } => reduced(Letter::D, p),
            SpR { n } => reduced(Letter::C, n),
            SoStar { n } if n % 2 == 0 => reduced(Letter::C, n / 2),
            SoStar { n } => RestrictedType::bc(n / 2),
            G2Split => reduced(Letter::G, 2),
            F4Split | E6Quasisplit | E7Minus5 | E8Minus24 => reduced(Letter::F, 4),
            F4Minus20 => RestrictedType::bc(1),
            E6Split => reduced(Letter::E, 6),
            E6Minus14 => RestrictedType::bc(2),
            E6Minus26 => reduced(Letter::A, 2),
            E7Split => reduced(Letter::E, 7),
            E7Minus25 => reduced(Letter::C, 3),
            E8Split => reduced(Letter::E, 8),
        }
    }

    /// Membership in the list `su*(2k), so(n,1), sp(p,q), e6(-26), f4(-20)`.
    pub fn in_no_min_meeting_list(&self) -> bool {
        matches!(
            self,
            SuStar { .. } | SoPq { p: 1, .. } | SpPq { .. } | E6Minus26 | F4Minus20
        )
    }

    /// All descriptors whose complexification has rank at most `max_rank`,
    /// in family order.
    pub fn enumerate(max_rank: usize) -> Vec<RealFormDescriptor> {
        let mut out = Vec::new();
        for n in 2..=max_rank + 1 {
            out.push(SlR { n });
        }
        for k in 2..=max_rank.div_ceil(2) {
            out.push(SuStar { k });
        }
        for sum in 2..=max_rank + 1 {
            for p in 1..=sum / 2 {
                out.push(SuPq { p, q: sum - p });
            }
        }
        for sum in 5..=2 * max_rank + 1 {
            let rank = if sum % 2 == 1 { (sum - 1) / 2 } else { sum / 2 };
            if rank > max_rank {
                continue;
            }
            for p in 1..=sum / 2 {
                out.push(SoPq { p, q: sum - p });
            }
        }
        for n in 1..=max_rank {
            out.push(SpR { n });
        }
        for sum in 2..=max_rank {
            for p in 1..=sum / 2 {
                out.push(SpPq { p, q: sum - p });
            }
        }
        for n in 3..=max_rank {
            out.push(SoStar { n });
        }
        for (d, _) in EXCEPTIONAL {
            if d.complex_type().map(SimpleType::rank).unwrap_or(usize::MAX) <= max_rank {
                out.push(d);
            }
        }
        out
    }
}

impl fmt::Display for RealFormDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SlR { n } => write!(f, "sl({n},R)"),
            SuStar { k } => write!(f, "su*({})", 2 * k),
            SuPq { p, q } => write!(f, "su({p},{q})"),
            SoPq { p, q } => write!(f, "so({p},{q})"),
            SpR { n } => write!(f, "sp({n},R)"),
            SpPq { p, q } => write!(f, "sp({p},{q})"),
            SoStar { n } => write!(f, "so*({})", 2 * n),
            other => {
                let name = EXCEPTIONAL
                    .iter()
                    .find(|(d, _)| *d == other)
                    .map(|(_, s)| *s)
                    .expect("every exceptional form is listed");
                f.write_str(name)
            }
        }
    }
}

fn parse_count(token: &str, whole: &str) -> Result<usize> {
    token.parse().map_err(|_| {
        Error::Parse(format!(
            "`{token}` is not a nonnegative integer in `{whole}`"
        ))
    })
}

fn ordered(p: usize, q: usize) -> (usize, usize) {
    (p.min(q), p.max(q))
}

impl FromStr for RealFormDescriptor {
    type Err = Error;

    /// Parses names such as `sl(3,R)`, `SU*(6)`, `so(4,1)`, `e6(-26)`.
    /// Bounds are checked; reversed pairs are normalized to `p <= q`.
    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        if let Some(&(d, _)) = EXCEPTIONAL.iter().find(|(_, name)| *name == lower) {
            return Ok(d);
        }
        let open = lower
            .find('(')
            .ok_or_else(|| Error::Parse(format!("missing `(` in `{s}`")))?;
        if !lower.ends_with(')') {
            return Err(Error::Parse(format!("missing closing `)` in `{s}`")));
        }
        let head = &lower[..open];
        let args: Vec<&str> = lower[open + 1..lower.len() - 1].split(',').collect();
        let even_half = |token: &str| -> Result<usize> {
            let m = parse_count(token, s)?;
            if m % 2 == 1 {
                return Err(Error::Parse(format!("`{token}` must be even in `{s}`")));
            }
            Ok(m / 2)
        };
        let d = match (head, args.as_slice()) {
            ("sl", [n, "r"]) => SlR {
                n: parse_count(n, s)?,
            },
            ("sp", [n, "r"]) => SpR {
                n: parse_count(n, s)?,
            },
            ("su*", [m]) => SuStar { k: even_half(m)? },
            ("so*", [m]) => SoStar { n: even_half(m)? },
            ("su" | "so" | "sp", [p, q]) => {
                let (p, q) = ordered(parse_count(p, s)?, parse_count(q, s)?);
                match head {
                    "su" => SuPq { p, q },
                    "so" => SoPq { p, q },
                    _ => SpPq { p, q },
                }
            }
            ("sl" | "su" | "so" | "sp" | "su*" | "so*", _) => {
                return Err(Error::Parse(format!(
                    "wrong arguments `{}` for `{head}` in `{s}`",
                    &lower[open..]
                )))
            }
            (h, _) if h.len() == 2 && matches!(&h[..1], "g" | "f" | "e") => {
                return Err(Error::Parse(format!(
                    "`{}` is not a real form of {}",
                    &lower[open..],
                    h.to_ascii_uppercase()
                )))
            }
            _ => return Err(Error::Parse(format!("unknown family `{head}` in `{s}`"))),
        };
        d.check_bounds()?;
        Ok(d)
    }
}

impl Serialize for RealFormDescriptor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RealFormDescriptor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<RealFormDescriptor> {
        s.parse()
    }

    #[test]
    fn parses_grammar() {
        assert_eq!(parse("sl(3,R)").unwrap(), SlR { n: 3 });
        assert_eq!(parse("SU*(6)").unwrap(), SuStar { k: 3 });
        assert_eq!(parse("su(2,1)").unwrap(), SuPq { p: 1, q: 2 });
        assert_eq!(parse("so(4,1)").unwrap(), SoPq { p: 1, q: 4 });
        assert_eq!(parse("so*(10)").unwrap(), SoStar { n: 5 });
        assert_eq!(parse("sp(2,r)").unwrap(), SpR { n: 2 });
        assert_eq!(parse("sp(1,3)").unwrap(), SpPq { p: 1, q: 3 });
        assert_eq!(parse("E6(-26)").unwrap(), E6Minus26);
        assert_eq!(parse("f4(-20)").unwrap(), F4Minus20);
    }

    #[test]
    fn canonical_names_round_trip() {
        for d in RealFormDescriptor::enumerate(8) {
            assert_eq!(parse(&d.canonical_name()).unwrap(), d);
        }
    }

    #[test]
    fn bound_violations() {
        assert!(matches!(
            parse("sl(1,R)"),
            Err(Error::OutOfRangeParams { .. })
        ));
        assert!(matches!(
            parse("su*(2)"),
            Err(Error::OutOfRangeParams { .. })
        ));
        assert!(matches!(
            parse("so(1,3)"),
            Err(Error::OutOfRangeParams { .. })
        ));
        assert!(matches!(
            parse("so(2,2)"),
            Err(Error::OutOfRangeParams { .. })
        ));
        assert!(matches!(
            parse("so*(4)"),
            Err(Error::OutOfRangeParams { .. })
        ));
        assert!(matches!(
            parse("su(0,3)"),
            Err(Error::OutOfRangeParams { .. })
        ));
    }

    #[test]
    fn parse_errors_name_the_token() {
        let msg = parse("su*(5)").unwrap_err().to_string();
        assert!(msg.contains("`5`"), "{msg}");
        let msg = parse("xx(3,R)").unwrap_err().to_string();
        assert!(msg.contains("`xx`"), "{msg}");
        let msg = parse("sl(a,R)").unwrap_err().to_string();
        assert!(msg.contains("`a`"), "{msg}");
        assert!(parse("e6(7)").is_err());
        assert!(parse("sl 3").is_err());
    }

    #[test]
    fn complex_types() {
        let ty = |s: &str| parse(s).unwrap().complex_type().unwrap().to_string();
        assert_eq!(ty("sl(4,R)"), "A3");
        assert_eq!(ty("su*(8)"), "A7");
        assert_eq!(ty("so(1,4)"), "B2");
        assert_eq!(ty("so(1,5)"), "D3");
        assert_eq!(ty("so*(8)"), "D4");
        assert_eq!(ty("sp(1,R)"), "A1");
        assert_eq!(ty("sp(2,3)"), "C5");
        assert_eq!(ty("e7(-25)"), "E7");
    }

    #[test]
    fn enumeration_respects_rank() {
        let all = RealFormDescriptor::enumerate(8);
        assert!(all.iter().all(|d| d.complex_type().unwrap().rank() <= 8));
        assert!(all.contains(&E8Minus24));
        assert!(all.contains(&SoPq { p: 8, q: 9 }));
        assert!(!all.contains(&SoPq { p: 9, q: 9 }));
        let small = RealFormDescriptor::enumerate(2);
        assert!(small.contains(&G2Split));
        assert!(!small.contains(&F4Split));
    }
}
