//! Restricted roots `r(a) = (a + tau* a) / 2`, their multiplicities, and the
//! criteria read off the restricted root system.
//!
//! Restricted roots stay in the ambient simple-root coordinates (inside the
//! `tau*`-fixed subspace) so the complex Gram form serves for every pairing.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratmat::{add, is_zero, rat, scale, to_rat_vec, Rat, RatVec};
use crate::rootsys::{cartan, Letter, SimpleType};
use crate::satake::{satake_involution, SatakeDiagram, SatakeInvolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RestrictedKind {
    Reduced(Letter),
    /// Non-reduced: some `xi` and `2 xi` are both roots.
    BC,
}

/// Type label of a restricted root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RestrictedType {
    pub kind: RestrictedKind,
    pub rank: usize,
}

impl RestrictedType {
    /// Reduced label, folded onto the names the recognizer reports:
    /// `B1 = C1 -> A1`, `B2 -> C2`, `D3 -> A3`.
    pub fn reduced(letter: Letter, rank: usize) -> Self {
        let letter = match (letter, rank) {
            (Letter::B | Letter::C, 1) => Letter::A,
            (Letter::B, 2) => Letter::C,
            (Letter::D, 3) => Letter::A,
            _ => letter,
        };
        Self {
            kind: RestrictedKind::Reduced(letter),
            rank,
        }
    }

    pub fn bc(rank: usize) -> Self {
        Self {
            kind: RestrictedKind::BC,
            rank,
        }
    }

    pub fn is_reduced(&self) -> bool {
        matches!(self.kind, RestrictedKind::Reduced(_))
    }
}

impl fmt::Display for RestrictedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RestrictedKind::Reduced(l) => write!(f, "{}{}", l.as_char(), self.rank),
            RestrictedKind::BC => write!(f, "BC{}", self.rank),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RestrictedRootSystem {
    source: SatakeDiagram,
    involution: SatakeInvolution,
    mult: BTreeMap<RatVec, usize>,
    positive: BTreeSet<RatVec>,
    simple: Vec<RatVec>,
    highest: RatVec,
    highest_mult: usize,
    type_label: RestrictedType,
}

impl RestrictedRootSystem {
    pub fn source(&self) -> &SatakeDiagram {
        &self.source
    }

    pub fn involution(&self) -> &SatakeInvolution {
        &self.involution
    }

    /// Distinct nonzero restricted roots.
    pub fn elements(&self) -> impl Iterator<Item = &RatVec> {
        self.mult.keys()
    }

    pub fn len(&self) -> usize {
        self.mult.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mult.is_empty()
    }

    pub fn contains(&self, xi: &[Rat]) -> bool {
        self.mult.contains_key(xi)
    }

    /// Number of roots restricting to `xi` (0 when `xi` is not a restricted root).
    pub fn mult(&self, xi: &[Rat]) -> usize {
        self.mult.get(xi).copied().unwrap_or(0)
    }

    pub fn multiplicities(&self) -> &BTreeMap<RatVec, usize> {
        &self.mult
    }

    pub fn positive(&self) -> &BTreeSet<RatVec> {
        &self.positive
    }

    /// Indecomposable positive restricted roots.
    pub fn simple(&self) -> &[RatVec] {
        &self.simple
    }

    pub fn real_rank(&self) -> usize {
        self.simple.len()
    }

    /// The highest restricted root `lambda = r(phi)`.
    pub fn highest(&self) -> &[Rat] {
        &self.highest
    }

    /// `dim_R g_lambda`.
    pub fn highest_mult(&self) -> usize {
        self.highest_mult
    }

    pub fn type_label(&self) -> RestrictedType {
        self.type_label
    }

    pub fn inner(&self, a: &[Rat], b: &[Rat]) -> Rat {
        self.source.root_system().inner(a, b)
    }

    /// `2<v,w>/<w,w>`.
    pub fn pairing(&self, v: &[Rat], w: &[Rat]) -> Rat {
        rat(2) * self.inner(v, w) / self.inner(w, w)
    }

    pub fn restrict(&self, v: &[Rat]) -> RatVec {
        restrict_with(&self.involution, v)
    }

    /// Dominant restricted roots of maximal length; a single element when the
    /// system is irreducible.
    pub fn dominant_longest(&self) -> Vec<RatVec> {
        let dominant: Vec<&RatVec> = self
            .mult
            .keys()
            .filter(|xi| self.simple.iter().all(|s| self.inner(xi, s) >= Rat::zero()))
            .collect();
        let Some(max) = dominant.iter().map(|xi| self.inner(xi, xi)).max() else {
            return vec![];
        };
        dominant
            .into_iter()
            .filter(|xi| self.inner(xi, xi) == max)
            .cloned()
            .collect()
    }
}

fn restrict_with(inv: &SatakeInvolution, v: &[Rat]) -> RatVec {
    scale(&add(v, &inv.tau(v)), Rat::new(1, 2))
}

/// Restriction of `v` to `a*`.
pub fn restrict(sd: &SatakeDiagram, v: &[Rat]) -> Result<RatVec> {
    Ok(restrict_with(&satake_involution(sd)?, v))
}

/// Positive elements of `set` that are not a sum of two positive elements.
fn indecomposables(positive: &BTreeSet<RatVec>) -> Vec<RatVec> {
    positive
        .iter()
        .filter(|xi| {
            !positive
                .iter()
                .any(|eta| positive.contains(&crate::ratmat::sub(xi, eta)))
        })
        .cloned()
        .collect()
}

pub fn restricted_root_system(sd: &SatakeDiagram) -> Result<RestrictedRootSystem> {
    let involution = satake_involution(sd)?;
    let rs = sd.root_system();
    let mut mult: BTreeMap<RatVec, usize> = BTreeMap::new();
    let mut positive = BTreeSet::new();
    for (k, root) in rs.roots().iter().enumerate() {
        let xi = restrict_with(&involution, &to_rat_vec(root));
        if is_zero(&xi) {
            continue;
        }
        if k < rs.positive_roots().len() {
            positive.insert(xi.clone());
        }
        *mult.entry(xi).or_insert(0) += 1;
    }
    let simple = indecomposables(&positive);
    let highest = restrict_with(&involution, &rs.highest_rat());
    let highest_mult = mult.get(&highest).copied().unwrap_or(0);
    let mut rrs = RestrictedRootSystem {
        source: sd.clone(),
        involution,
        mult,
        positive,
        simple,
        highest,
        highest_mult,
        type_label: RestrictedType::reduced(Letter::A, 0),
    };
    rrs.type_label = classify_restricted_type(&rrs)?;
    Ok(rrs)
}

/// Recognizes the reduced part `{xi : 2 xi not a root}` by its Cartan matrix
/// and labels the system `BC` when some `xi` and `2 xi` both occur.
pub fn classify_restricted_type(rrs: &RestrictedRootSystem) -> Result<RestrictedType> {
    let name = rrs.source.name();
    let unrecognized = |why: String| Error::UnrecognizedSystem(format!("{name}: {why}"));
    if rrs.is_empty() {
        return Err(unrecognized("no restricted roots".into()));
    }
    let doubled = |xi: &RatVec| rrs.contains(&scale(xi, rat(2)));
    let non_reduced = rrs.elements().any(doubled);
    let reduced_positive: BTreeSet<RatVec> = rrs
        .positive
        .iter()
        .filter(|xi| !doubled(xi))
        .cloned()
        .collect();
    let simple = indecomposables(&reduced_positive);
    let mut matrix = vec![vec![0i64; simple.len()]; simple.len()];
    for (i, a) in simple.iter().enumerate() {
        for (j, b) in simple.iter().enumerate() {
            let c = rrs.pairing(a, b);
            if !c.is_integer() {
                return Err(unrecognized(format!("non-integral Cartan entry {c}")));
            }
            matrix[i][j] = c.to_integer();
        }
    }
    let (ty, _) = cartan::recognize(&matrix)
        .ok_or_else(|| unrecognized(format!("Cartan matrix {matrix:?}")))?;
    let reduced_count = rrs.elements().filter(|xi| !doubled(xi)).count();
    if reduced_count != ty.root_count() {
        return Err(unrecognized(format!(
            "{reduced_count} reduced roots for recognized type {ty}"
        )));
    }
    if non_reduced {
        let c_like = matches!(ty.letter(), Letter::C) || ty == SimpleType::new(Letter::A, 1)?;
        if !c_like {
            return Err(unrecognized(format!("non-reduced system over {ty}")));
        }
        Ok(RestrictedType::bc(ty.rank()))
    } else {
        Ok(RestrictedType::reduced(ty.letter(), ty.rank()))
    }
}

/// Type `C` or `BC`, counting `A1` as `C1` and `B2` as `C2`.
pub fn is_c_or_bc(rrs: &RestrictedRootSystem) -> bool {
    let t = rrs.type_label;
    match t.kind {
        RestrictedKind::BC | RestrictedKind::Reduced(Letter::C) => true,
        RestrictedKind::Reduced(Letter::A) => t.rank == 1,
        RestrictedKind::Reduced(Letter::B) => t.rank == 2,
        _ => false,
    }
}

/// Some restricted root `xi` has `2<lambda,xi>/<xi,xi>` odd.
pub fn parity_criterion(rrs: &RestrictedRootSystem) -> bool {
    rrs.elements().any(|xi| {
        let c = rrs.pairing(&rrs.highest, xi);
        c.is_integer() && c.to_integer() % 2 != 0
    })
}

/// Hermitian type, derived as `dim g_lambda = 1` and restricted type `C`/`BC`.
pub fn is_hermitian(sd: &SatakeDiagram) -> Result<bool> {
    let rrs = restricted_root_system(sd)?;
    Ok(rrs.highest_mult == 1 && is_c_or_bc(&rrs))
}
