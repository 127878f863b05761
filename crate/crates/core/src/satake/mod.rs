//! Satake diagrams of the real forms and the involution each one induces on
//! the root lattice.

mod descriptor;
mod involution;

use std::collections::BTreeSet;

pub use descriptor::RealFormDescriptor;
pub use involution::{satake_involution, validate_satake, SatakeInvolution, ValidationReport};

use crate::error::Result;
use crate::rootsys::RootSystem;

/// Dynkin diagram with black nodes and arrows, tagged with the real form it
/// is meant to describe.
///
/// Constructing one with [`SatakeDiagram::from_parts`] performs no checks, so
/// corrupted diagrams can be represented and diagnosed by [`validate_satake`].
#[derive(Debug, Clone)]
pub struct SatakeDiagram {
    descriptor: RealFormDescriptor,
    rs: RootSystem,
    black: BTreeSet<usize>,
    arrows: Vec<(usize, usize)>,
    hermitian_expected: bool,
}

impl SatakeDiagram {
    pub fn from_parts(
        descriptor: RealFormDescriptor,
        rs: RootSystem,
        black: BTreeSet<usize>,
        arrows: Vec<(usize, usize)>,
    ) -> Self {
        Self {
            hermitian_expected: descriptor.hermitian_expected(),
            descriptor,
            rs,
            black,
            arrows,
        }
    }

    pub fn descriptor(&self) -> RealFormDescriptor {
        self.descriptor
    }

    pub fn name(&self) -> String {
        self.descriptor.canonical_name()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn black(&self) -> &BTreeSet<usize> {
        &self.black
    }

    pub fn is_black(&self, i: usize) -> bool {
        self.black.contains(&i)
    }

    pub fn white(&self) -> Vec<usize> {
        (0..self.rank()).filter(|i| !self.is_black(*i)).collect()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    /// Node joined to `i` by an arrow, if any.
    pub fn arrow_partner(&self, i: usize) -> Option<usize> {
        self.arrows.iter().find_map(|&(a, b)| {
            if a == i {
                Some(b)
            } else if b == i {
                Some(a)
            } else {
                None
            }
        })
    }

    /// White nodes grouped by arrows: singletons and arrow pairs, ordered by
    /// smallest node.
    pub fn white_classes(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        for i in self.white() {
            match self.arrow_partner(i) {
                Some(j) if j < i => {}
                Some(j) => out.push(vec![i, j]),
                None => out.push(vec![i]),
            }
        }
        out
    }

    pub fn hermitian_expected(&self) -> bool {
        self.hermitian_expected
    }

    pub fn is_split(&self) -> bool {
        self.black.is_empty() && self.arrows.is_empty()
    }

    /// Copy with a different black set; arrows touching newly black nodes
    /// are kept as they are.
    pub fn with_black(&self, black: BTreeSet<usize>) -> Self {
        Self {
            black,
            ..self.clone()
        }
    }

    pub fn with_arrows(&self, arrows: Vec<(usize, usize)>) -> Self {
        Self {
            arrows,
            ..self.clone()
        }
    }
}

/// Standard Satake diagram of `d`, in Bourbaki numbering (0-based here).
pub fn build_satake(d: RealFormDescriptor) -> Result<SatakeDiagram> {
    use RealFormDescriptor::*;
    let ty = d.complex_type()?;
    let r = ty.rank();
    let range = |a: usize, b: usize| (a..b).collect::<BTreeSet<usize>>();
    let evens_below = |b: usize| (0..b).step_by(2).collect::<BTreeSet<usize>>();
    let (black, arrows): (BTreeSet<usize>, Vec<(usize, usize)>) = match d {
        SlR { .. } | SpR { .. } | G2Split | F4Split | E6Split | E7Split | E8Split => {
            (BTreeSet::new(), vec![])
        }
        SuStar { .. } => (evens_below(r), vec![]),
        SuPq { p, q } => {
            let arrows = (0..p)
                .filter(|&i| i != r - 1 - i)
                .map(|i| (i, r - 1 - i))
                .collect();
            let black = if p < q {
                range(p, r - p)
            } else {
                BTreeSet::new()
            };
            (black, arrows)
        }
        SoPq { p, q } if (p + q) % 2 == 1 => (range(p, r), vec![]),
        SoPq { p, .. } if p + 1 == r => (BTreeSet::new(), vec![(r - 2, r - 1)]),
        SoPq { p, .. } => (range(p.min(r), r), vec![]),
        SpPq { p, .. } => {
            let mut black = evens_below(2 * p);
            black.extend(2 * p..r);
            (black, vec![])
        }
        SoStar { n } if n % 2 == 0 => (evens_below(n - 1), vec![]),
        SoStar { n } => (evens_below(n - 2), vec![(n - 2, n - 1)]),
        F4Minus20 => (range(0, 3), vec![]),
        E6Quasisplit => (BTreeSet::new(), vec![(0, 5), (2, 4)]),
        E6Minus14 => (range(2, 5), vec![(0, 5)]),
        E6Minus26 => (range(1, 5), vec![]),
        E7Minus5 => (BTreeSet::from([1, 4, 6]), vec![]),
        E7Minus25 | E8Minus24 => (range(1, 5), vec![]),
    };
    Ok(SatakeDiagram::from_parts(
        d,
        RootSystem::new(ty),
        black,
        arrows,
    ))
}

/// Every catalog diagram with complex rank at most `max_rank`, isomorphic
/// duplicates included.
pub fn catalog(max_rank: usize) -> Vec<SatakeDiagram> {
    RealFormDescriptor::enumerate(max_rank)
        .into_iter()
        .map(|d| build_satake(d).expect("enumerated descriptors are in range"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sd(name: &str) -> SatakeDiagram {
        build_satake(name.parse().unwrap()).unwrap()
    }

    #[test]
    fn split_forms_have_no_decoration() {
        for name in ["sl(5,R)", "sp(3,R)", "so(3,4)", "so(4,4)", "e7(7)", "g2(2)"] {
            assert!(sd(name).is_split(), "{name}");
        }
    }

    #[test]
    fn su_star_4() {
        let d = sd("su*(4)");
        assert_eq!(d.root_system().simple_type().to_string(), "A3");
        assert_eq!(d.black(), &BTreeSet::from([0, 2]));
        assert!(d.arrows().is_empty());
    }

    #[test]
    fn su_pq() {
        let d = sd("su(1,2)");
        assert!(d.black().is_empty());
        assert_eq!(d.arrows(), &[(0, 1)]);
        let d = sd("su(2,5)");
        assert_eq!(d.black(), &BTreeSet::from([2, 3]));
        assert_eq!(d.arrows(), &[(0, 5), (1, 4)]);
        let d = sd("su(3,3)");
        assert!(d.black().is_empty());
        assert_eq!(d.arrows(), &[(0, 4), (1, 3)]);
        assert!(sd("su(1,1)").is_split());
    }

    #[test]
    fn sp_pq() {
        let d = sd("sp(1,1)");
        assert_eq!(d.root_system().simple_type().to_string(), "C2");
        assert_eq!(d.black(), &BTreeSet::from([0]));
        let d = sd("sp(2,3)");
        assert_eq!(d.black(), &BTreeSet::from([0, 2, 4]));
        assert_eq!(d.white(), vec![1, 3]);
    }

    #[test]
    fn orthogonal_and_star() {
        assert_eq!(sd("so(2,7)").black(), &BTreeSet::from([2, 3]));
        assert_eq!(sd("so(1,5)").black(), &BTreeSet::from([1, 2]));
        assert_eq!(sd("so(3,5)").arrows(), &[(2, 3)]);
        assert_eq!(sd("so*(8)").black(), &BTreeSet::from([0, 2]));
        let d = sd("so*(10)");
        assert_eq!(d.black(), &BTreeSet::from([0, 2]));
        assert_eq!(d.arrows(), &[(3, 4)]);
    }

    #[test]
    fn exceptional() {
        let d = sd("f4(-20)");
        assert_eq!(d.black(), &BTreeSet::from([0, 1, 2]));
        assert_eq!(d.white(), vec![3]);
        // chain-with-tail labels {2,3,4,6} black are Bourbaki {3,4,5,2}
        let d = sd("e6(-26)");
        assert_eq!(d.black(), &BTreeSet::from([1, 2, 3, 4]));
        assert_eq!(d.white(), vec![0, 5]);
        assert!(d.arrows().is_empty());
    }

    #[test]
    fn white_classes_group_arrows() {
        assert_eq!(sd("e6(-14)").white_classes(), vec![vec![0, 5], vec![1]]);
        assert_eq!(sd("su(2,2)").white_classes(), vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn catalog_is_complete_for_small_rank() {
        let names: Vec<String> = catalog(2).iter().map(SatakeDiagram::name).collect();
        for n in [
            "sl(2,R)", "sl(3,R)", "su(1,1)", "su(1,2)", "so(1,4)", "so(2,3)", "sp(1,R)", "sp(2,R)",
            "sp(1,1)", "g2(2)",
        ] {
            assert!(names.iter().any(|x| x == n), "{n} missing from {names:?}");
        }
        assert_eq!(names.len(), 10);
    }
}
