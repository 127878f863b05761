//! Simple complex root systems built from Cartan data.
//!
//! Roots are integer coordinate vectors in the basis of simple roots. The
//! Gram form is normalized so that long roots have squared length 2.

pub mod cartan;

use std::collections::{BTreeSet, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

pub use cartan::{Letter, SimpleType};

use crate::error::{Error, Result};
use crate::ratmat::{rat, to_rat_vec, Rat, RatMatrix};

#[derive(Debug, Clone)]
pub struct RootSystem {
    simple_type: SimpleType,
    cartan: Vec<Vec<i64>>,
    gram: RatMatrix,
    /// Positive roots by nondecreasing height, then their negatives in the same order.
    roots: Vec<Vec<i64>>,
    positive: usize,
    highest: Vec<i64>,
    index: HashMap<Vec<i64>, usize>,
}

/// Builds the root system of type `letter`/`rank`, rejecting out-of-range ranks.
pub fn build_root_system(letter: Letter, rank: usize) -> Result<RootSystem> {
    Ok(RootSystem::new(SimpleType::new(letter, rank)?))
}

impl RootSystem {
    pub fn new(simple_type: SimpleType) -> Self {
        let cartan = simple_type.cartan_matrix();
        let gram = symmetrize(&cartan);
        let positives = positive_roots_by_closure(&cartan);
        let highest = positives
            .iter()
            .max_by_key(|r| r.iter().sum::<i64>())
            .cloned()
            .expect("nonempty root system");
        let positive = positives.len();
        let mut roots = positives.clone();
        roots.extend(
            positives
                .iter()
                .map(|r| r.iter().map(|x| -x).collect::<Vec<_>>()),
        );
        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        Self {
            simple_type,
            cartan,
            gram,
            roots,
            positive,
            highest,
            index,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// Integer Cartan matrix entries `C[i][j] = 2<a_i,a_j>/<a_j,a_j>`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> RatMatrix {
        RatMatrix::from_int_rows(&self.cartan).expect("square")
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.positive]
    }

    /// Coordinates of the highest root.
    pub fn highest(&self) -> &[i64] {
        &self.highest
    }

    pub fn highest_rat(&self) -> Vec<Rat> {
        to_rat_vec(&self.highest)
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.index.contains_key(v)
    }

    /// True when `v` has integer coordinates forming a root.
    pub fn is_root_rat(&self, v: &[Rat]) -> bool {
        crate::ratmat::to_int_vec(v).is_some_and(|iv| self.is_root(&iv))
    }

    pub fn simple_root(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.rank()];
        v[i] = Rat::one();
        v
    }

    pub fn inner(&self, v: &[Rat], w: &[Rat]) -> Rat {
        self.gram.form(v, w)
    }

    pub fn norm2(&self, v: &[Rat]) -> Rat {
        self.inner(v, v)
    }

    /// Value of `v` on the coroot of `w`: `2<v,w>/<w,w>`.
    pub fn pairing(&self, v: &[Rat], w: &[Rat]) -> Result<Rat> {
        let ww = self.norm2(w);
        if ww.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(rat(2) * self.inner(v, w) / ww)
    }
}

/// Symmetric form `B` with `2 B_ij / B_jj = C_ij` and longest roots of length 2.
fn symmetrize(cartan: &[Vec<i64>]) -> RatMatrix {
    let n = cartan.len();
    // half squared lengths d_i, propagated along edges: C_ij d_j = C_ji d_i
    let mut d: Vec<Option<Rat>> = vec![None; n];
    d[0] = Some(Rat::one());
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        let di = d[i].expect("visited");
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                d[j] = Some(di * rat(cartan[j][i]) / rat(cartan[i][j]));
                stack.push(j);
            }
        }
    }
    let d: Vec<Rat> = d
        .into_iter()
        .map(|x| x.expect("connected diagram"))
        .collect();
    let max = d.iter().copied().max().expect("nonempty");
    let mut g = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            g[(i, j)] = rat(cartan[i][j]) * d[j] / max;
        }
    }
    g
}

/// Positive roots by closure over root strings, starting from the simple roots.
fn positive_roots_by_closure(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::HashSet<Vec<i64>> = roots.iter().cloned().collect();
    let mut next = 0;
    while next < roots.len() {
        let beta = roots[next].clone();
        next += 1;
        for i in 0..n {
            // beta - p a_i, ..., beta + q a_i is the a_i-string through beta
            let mut p = 0;
            let mut down = beta.clone();
            loop {
                down[i] -= 1;
                if known.contains(&down) {
                    p += 1;
                } else {
                    break;
                }
            }
            let beta_on_coroot: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
            let q = p - beta_on_coroot;
            if q > 0 {
                let mut up = beta.clone();
                up[i] += 1;
                if known.insert(up.clone()) {
                    roots.push(up);
                }
            }
        }
    }
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), std::cmp::Reverse(r.clone())));
    roots
}

/// Values `a_i(H)` of a semisimple element on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedDynkinDiagram {
    simple_type: SimpleType,
    weights: Vec<Rat>,
}

impl WeightedDynkinDiagram {
    pub fn new(simple_type: SimpleType, weights: Vec<Rat>) -> Result<Self> {
        if weights.len() != simple_type.rank() {
            return Err(Error::DimensionMismatch(format!(
                "{} weights for a rank {} diagram",
                weights.len(),
                simple_type.rank()
            )));
        }
        Ok(Self {
            simple_type,
            weights,
        })
    }

    pub fn from_ints(simple_type: SimpleType, weights: &[i64]) -> Result<Self> {
        Self::new(simple_type, to_rat_vec(weights))
    }

    pub fn simple_type(&self) -> SimpleType {
        self.simple_type
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn integer_weights(&self) -> Option<Vec<i64>> {
        crate::ratmat::to_int_vec(&self.weights)
    }

    /// Every weight is 0, 1 or 2.
    pub fn is_nilpotent_shaped(&self) -> bool {
        self.weights
            .iter()
            .all(|w| *w == rat(0) || *w == rat(1) || *w == rat(2))
    }

    /// `a(H)` for a root given in simple-root coordinates.
    pub fn evaluate(&self, root: &[i64]) -> Rat {
        root.iter()
            .zip(&self.weights)
            .map(|(c, w)| rat(*c) * w)
            .sum()
    }
}

#[derive(Serialize, Deserialize)]
struct WddRepr {
    simple_type: SimpleType,
    weights: Vec<i64>,
}

impl Serialize for WeightedDynkinDiagram {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let weights = self
            .integer_weights()
            .ok_or_else(|| serde::ser::Error::custom("non-integral weights"))?;
        WddRepr {
            simple_type: self.simple_type,
            weights,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for WeightedDynkinDiagram {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WddRepr::deserialize(d)?;
        Self::from_ints(r.simple_type, &r.weights).map_err(serde::de::Error::custom)
    }
}

/// Diagram of the minimal nilpotent orbit: `a_i -> 2<a_i,phi>/<phi,phi>`.
pub fn min_orbit_wdd(rs: &RootSystem) -> WeightedDynkinDiagram {
    let phi = rs.highest_rat();
    let weights = (0..rs.rank())
        .map(|i| {
            rs.pairing(&rs.simple_root(i), &phi)
                .expect("phi is nonzero")
        })
        .collect();
    WeightedDynkinDiagram {
        simple_type: rs.simple_type(),
        weights,
    }
}

/// Simple nodes joined to the lowest-root node of the extended diagram.
pub fn extended_neighbors(rs: &RootSystem) -> Result<BTreeSet<usize>> {
    if rs.rank() < 2 {
        return Err(Error::RankTooSmall);
    }
    let phi = rs.highest_rat();
    Ok((0..rs.rank())
        .filter(|&i| !rs.inner(&phi, &rs.simple_root(i)).is_zero())
        .collect())
}

/// Dimension of the nilpotent orbit whose neutral element has diagram `w`:
/// `dim g - dim g_0 - dim g_1` for the grading by `a(H)`.
pub fn orbit_dim_from_wdd(rs: &RootSystem, w: &WeightedDynkinDiagram) -> Result<usize> {
    if w.simple_type() != rs.simple_type() {
        return Err(Error::TypeMismatch(format!(
            "{} diagram for a {} root system",
            w.simple_type(),
            rs.simple_type()
        )));
    }
    if w.integer_weights().is_none() {
        return Err(Error::NonIntegralWeights);
    }
    let (mut zero, mut one) = (0, 0);
    for r in rs.roots() {
        let v = w.evaluate(r);
        if v.is_zero() {
            zero += 1;
        } else if v == rat(1) {
            one += 1;
        }
    }
    let rank = rs.rank();
    Ok((rs.roots().len() + rank) - (rank + zero) - one)
}
