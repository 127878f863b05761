//! The involution `theta* = -w0(black) . p~` of a Satake diagram.
//!
//! `w0(black)`, the longest element of the Weyl group of the black nodes, is
//! applied without Weyl words: it acts on `span(black)` as minus the duality
//! of the black components and as the identity on the Gram-orthogonal
//! complement of that span.

use num_traits::Zero;

use super::SatakeDiagram;
use crate::error::{Error, Result};
use crate::ratmat::{gram_split, to_int_vec, to_rat_vec, Rat, RatMatrix, RatVec};
use crate::rootsys::cartan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SatakeInvolution {
    theta_star: RatMatrix,
    tau_star: RatMatrix,
    p_tilde: Vec<usize>,
}

impl SatakeInvolution {
    /// Matrix of `theta*` on simple-root coordinates (column `j` is the image of `a_j`).
    pub fn theta_star(&self) -> &RatMatrix {
        &self.theta_star
    }

    /// `tau* = -theta*`, the involution induced by complex conjugation.
    pub fn tau_star(&self) -> &RatMatrix {
        &self.tau_star
    }

    /// Node involution: arrows on white nodes, component duality on black ones.
    pub fn p_tilde(&self) -> &[usize] {
        &self.p_tilde
    }

    pub fn theta(&self, v: &[Rat]) -> RatVec {
        self.theta_star.mul_vec(v)
    }

    pub fn tau(&self, v: &[Rat]) -> RatVec {
        self.tau_star.mul_vec(v)
    }

    /// Applies `p~` extended linearly.
    pub fn permute(&self, v: &[Rat]) -> RatVec {
        let mut out = vec![Rat::zero(); v.len()];
        for (i, x) in v.iter().enumerate() {
            out[self.p_tilde[i]] = *x;
        }
        out
    }
}

/// Outcome of [`validate_satake`]: one line per failed check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }
}

fn structural_failures(sd: &SatakeDiagram) -> Vec<String> {
    let n = sd.rank();
    let mut out = Vec::new();
    if let Some(&b) = sd.black().iter().find(|&&b| b >= n) {
        out.push(format!("black node {} out of range", b + 1));
    }
    if sd.black().len() >= n {
        out.push("all nodes black (compact form)".into());
    }
    let mut seen = vec![0usize; n];
    for &(a, b) in sd.arrows() {
        if a >= n || b >= n {
            out.push(format!("arrow {}<->{} out of range", a + 1, b + 1));
            continue;
        }
        if a == b {
            out.push(format!("fixed-point arrow on node {}", a + 1));
        }
        for x in [a, b] {
            if sd.is_black(x) {
                out.push(format!("arrow touches black node {}", x + 1));
            }
            seen[x] += 1;
        }
    }
    for (i, &c) in seen.iter().enumerate() {
        if c > 1 {
            out.push(format!("node {} lies on {c} arrows", i + 1));
        }
    }
    out
}

/// Builds `p~` and `theta*` without checking the involution invariants.
fn construct(sd: &SatakeDiagram) -> std::result::Result<SatakeInvolution, String> {
    let rs = sd.root_system();
    let n = rs.rank();
    let mut p_tilde: Vec<usize> = (0..n).collect();
    for &(a, b) in sd.arrows() {
        p_tilde[a] = b;
        p_tilde[b] = a;
    }
    let black: Vec<usize> = sd.black().iter().copied().collect();
    for comp in cartan::components(rs.cartan(), &black) {
        let sub: Vec<Vec<i64>> = comp
            .iter()
            .map(|&i| comp.iter().map(|&j| rs.cartan()[i][j]).collect())
            .collect();
        let (ty, map) = cartan::recognize(&sub)
            .ok_or_else(|| format!("black component {comp:?} is not a Dynkin diagram"))?;
        for (k, l) in ty.duality_involution().into_iter().enumerate() {
            p_tilde[comp[map[k]]] = comp[map[l]];
        }
    }

    let black_basis: Vec<RatVec> = black.iter().map(|&b| rs.simple_root(b)).collect();
    let mut columns = Vec::with_capacity(n);
    for i in 0..n {
        let (inside, perp) = gram_split(rs.gram(), &black_basis, &rs.simple_root(p_tilde[i]))
            .map_err(|e| e.to_string())?;
        // w0 on the black span is -duality; inside is supported on black coordinates
        let mut w0 = perp;
        for &b in &black {
            w0[p_tilde[b]] -= inside[b];
        }
        columns.push(w0.iter().map(|x| -x).collect::<RatVec>());
    }
    let theta_star = RatMatrix::from_columns(&columns).map_err(|e| e.to_string())?;
    Ok(SatakeInvolution {
        tau_star: theta_star.neg(),
        theta_star,
        p_tilde,
    })
}

fn invariant_failures(sd: &SatakeDiagram, inv: &SatakeInvolution) -> Vec<String> {
    let rs = sd.root_system();
    let n = rs.rank();
    let mut out = Vec::new();

    if inv.theta_star.mul(&inv.theta_star) != RatMatrix::identity(n) {
        out.push("theta* is not an involution".into());
    }

    let images: Vec<RatVec> = rs
        .roots()
        .iter()
        .map(|r| inv.theta(&to_rat_vec(r)))
        .collect();
    if let Some((r, _)) = rs
        .roots()
        .iter()
        .zip(&images)
        .find(|(_, img)| !rs.is_root_rat(img))
    {
        out.push(format!(
            "theta* does not preserve the root set (root {r:?})"
        ));
    }

    for &b in sd.black() {
        if b < n && inv.theta(&rs.simple_root(b)) != rs.simple_root(b) {
            out.push(format!("theta* moves black node {}", b + 1));
        }
    }

    for i in sd.white() {
        let e = rs.simple_root(i);
        let diff: RatVec = inv
            .theta(&e)
            .iter()
            .zip(rs.simple_root(inv.p_tilde[i]))
            .map(|(t, p)| -t - p)
            .collect();
        let ok = to_int_vec(&diff).is_some_and(|d| {
            d.iter()
                .enumerate()
                .all(|(j, &c)| c >= 0 && (c == 0 || sd.is_black(j)))
        });
        if !ok {
            out.push(format!(
                "-theta*(a{}) - p~(a{}) is not a nonnegative combination of black roots",
                i + 1,
                i + 1
            ));
        }
    }

    // alpha - tau* alpha = alpha + theta* alpha
    if let Some(r) = rs.roots().iter().zip(&images).find_map(|(r, img)| {
        let d: RatVec = to_rat_vec(r).iter().zip(img).map(|(a, b)| a + b).collect();
        rs.is_root_rat(&d).then_some(r)
    }) {
        out.push(format!("tau* is not normal (root {r:?})"));
    }

    let phi = rs.highest_rat();
    if inv.permute(&phi) != phi {
        out.push("p~ does not fix the highest root".into());
    }

    if inv
        .p_tilde
        .iter()
        .enumerate()
        .any(|(i, &j)| inv.p_tilde[j] != i)
    {
        out.push("p~ is not an involution".into());
    }
    out
}

/// Runs every structural and involution check, collecting all failures.
pub fn validate_satake(sd: &SatakeDiagram) -> ValidationReport {
    let mut failures = structural_failures(sd);
    if failures.is_empty() {
        match construct(sd) {
            Ok(inv) => failures.extend(invariant_failures(sd, &inv)),
            Err(e) => failures.push(e),
        }
    }
    ValidationReport { failures }
}

/// The involution of a diagram, or `InconsistentDiagram` naming the first
/// violated invariant.
pub fn satake_involution(sd: &SatakeDiagram) -> Result<SatakeInvolution> {
    let inconsistent = |reason: String| Error::InconsistentDiagram {
        form: sd.name(),
        reason,
    };
    if let Some(f) = structural_failures(sd).into_iter().next() {
        return Err(inconsistent(f));
    }
    let inv = construct(sd).map_err(inconsistent)?;
    match invariant_failures(sd, &inv).into_iter().next() {
        Some(f) => Err(inconsistent(f)),
        None => Ok(inv),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::ratmat::rat;
    use crate::satake::{build_satake, catalog};

    fn sd(name: &str) -> SatakeDiagram {
        build_satake(name.parse().unwrap()).unwrap()
    }

    fn image(inv: &SatakeInvolution, i: usize, n: usize) -> Vec<i64> {
        let mut e = vec![rat(0); n];
        e[i] = rat(1);
        to_int_vec(&inv.theta(&e)).unwrap()
    }

    #[test]
    fn split_is_minus_identity() {
        let inv = satake_involution(&sd("sl(4,R)")).unwrap();
        assert_eq!(inv.theta_star(), &RatMatrix::identity(3).neg());
        assert_eq!(inv.tau_star(), &RatMatrix::identity(3));
    }

    #[test]
    fn su_star_4() {
        let inv = satake_involution(&sd("su*(4)")).unwrap();
        assert_eq!(image(&inv, 0, 3), vec![1, 0, 0]);
        assert_eq!(image(&inv, 1, 3), vec![-1, -1, -1]);
        assert_eq!(image(&inv, 2, 3), vec![0, 0, 1]);
    }

    #[test]
    fn su_1_2_swaps() {
        let inv = satake_involution(&sd("su(1,2)")).unwrap();
        assert_eq!(image(&inv, 0, 2), vec![0, -1]);
        assert_eq!(image(&inv, 1, 2), vec![-1, 0]);
        assert_eq!(inv.p_tilde(), &[1, 0]);
    }

    #[test]
    fn black_duality_is_applied() {
        // su(1,4): black a2 a3 form an A2 component, reversed by p~
        let inv = satake_involution(&sd("su(1,4)")).unwrap();
        assert_eq!(inv.p_tilde(), &[3, 2, 1, 0]);
        // e6(-26): black D4 component has trivial duality
        let inv = satake_involution(&sd("e6(-26)")).unwrap();
        assert_eq!(inv.p_tilde(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn every_catalog_entry_validates() {
        for d in catalog(8) {
            let report = validate_satake(&d);
            assert!(report.is_valid(), "{}: {:?}", d.name(), report.failures);
        }
    }

    #[test]
    fn corrupted_black_set_breaks_root_preservation() {
        let bad = sd("su*(4)").with_black(BTreeSet::from([0, 1]));
        let report = validate_satake(&bad);
        assert!(
            report
                .failures
                .iter()
                .any(|f| f.contains("does not preserve the root set")),
            "{:?}",
            report.failures
        );
        assert!(matches!(
            satake_involution(&bad),
            Err(Error::InconsistentDiagram { .. })
        ));
    }

    #[test]
    fn missing_arrow_breaks_normality() {
        let bad = sd("su(1,3)").with_arrows(vec![]);
        let report = validate_satake(&bad);
        assert!(
            report.failures.iter().any(|f| f.contains("not normal")),
            "{:?}",
            report.failures
        );
    }

    #[test]
    fn structural_failures_reported() {
        let d = sd("su(1,2)");
        let report = validate_satake(&d.with_arrows(vec![(0, 0)]));
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("fixed-point arrow")));
        let report = validate_satake(&sd("su(1,4)").with_arrows(vec![(0, 3), (1, 3)]));
        assert!(report.failures.iter().any(|f| f.contains("black node")));
        assert!(report
            .failures
            .iter()
            .any(|f| f.contains("lies on 2 arrows")));
        let report = validate_satake(&d.with_black(BTreeSet::from([0, 1])).with_arrows(vec![]));
        assert!(report.failures.iter().any(|f| f.contains("compact")));
    }
}
