//! Exhaustive invariant sweep over the catalog.
//!
//! Every check recomputes what it needs and reports failures by name instead
//! of stopping, so one run lists every broken invariant of every entry.

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::golden::reference_row;
use crate::orbits::{conditions_from, count_from, direct_from, linear_system_from};
use crate::ratmat::{add, rat, scale, to_rat_vec};
use crate::restricted::{is_c_or_bc, parity_criterion, restricted_root_system};
use crate::rootsys::{
    extended_neighbors, min_orbit_wdd, orbit_dim_from_wdd, Letter, RootSystem, SimpleType,
};
use crate::satake::{catalog, validate_satake, SatakeDiagram};

/// One violated invariant.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// Canonical name of the real form, or the complex type for root-system checks.
    pub entry: String,
    pub invariant: &'static str,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.entry, self.invariant, self.detail)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifySummary {
    pub entries: usize,
    pub types: usize,
    /// Sorted by entry, then invariant.
    pub failures: Vec<Failure>,
}

impl VerifySummary {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Collector {
    entry: String,
    out: Vec<Failure>,
}

impl Collector {
    fn new(entry: String) -> Self {
        Self { entry, out: vec![] }
    }

    fn check(&mut self, ok: bool, invariant: &'static str, detail: impl FnOnce() -> String) {
        if !ok {
            self.out.push(Failure {
                entry: self.entry.clone(),
                invariant,
                detail: detail(),
            });
        }
    }
}

/// Dual Coxeter number, from the standard table.
fn dual_coxeter(ty: SimpleType) -> usize {
    let n = ty.rank();
    match ty.letter() {
        Letter::A | Letter::C => n + 1,
        Letter::B => 2 * n - 1,
        Letter::D => 2 * n - 2,
        Letter::E => [12, 18, 30][n - 6],
        Letter::F => 9,
        Letter::G => 4,
    }
}

/// Every simple type of rank at most `max_rank` (`B`/`C` from rank 2, `D` from 4).
pub fn simple_types(max_rank: usize) -> Vec<SimpleType> {
    let mut out = Vec::new();
    let mut push = |l, r| {
        if let Ok(t) = SimpleType::new(l, r) {
            out.push(t)
        }
    };
    for r in 1..=max_rank {
        push(Letter::A, r);
    }
    for l in [Letter::B, Letter::C] {
        for r in 2..=max_rank {
            push(l, r);
        }
    }
    for r in 4..=max_rank {
        push(Letter::D, r);
    }
    for (l, r) in [
        (Letter::G, 2),
        (Letter::F, 4),
        (Letter::E, 6),
        (Letter::E, 7),
        (Letter::E, 8),
    ] {
        if r <= max_rank {
            push(l, r);
        }
    }
    out
}

/// Root-system invariants of one complex type.
pub fn check_root_system(ty: SimpleType) -> Vec<Failure> {
    let rs = RootSystem::new(ty);
    let mut c = Collector::new(ty.to_string());
    c.check(rs.roots().len() == ty.root_count(), "root-count", || {
        format!("{} roots, expected {}", rs.roots().len(), ty.root_count())
    });

    let phi = rs.highest();
    let dominant_maximal: Vec<&Vec<i64>> = rs
        .positive_roots()
        .iter()
        .filter(|r| {
            (0..rs.rank()).all(|i| {
                let mut s = (*r).clone();
                s[i] += 1;
                !rs.is_root(&s)
            })
        })
        .collect();
    c.check(dominant_maximal == [phi], "highest-root", || {
        format!("maximal positive roots {dominant_maximal:?}")
    });

    let min = min_orbit_wdd(&rs);
    let weights = min.integer_weights().unwrap_or_default();
    if ty.rank() >= 2 {
        let support: Vec<usize> = (0..rs.rank()).filter(|&i| weights[i] != 0).collect();
        let nbrs: Vec<usize> = extended_neighbors(&rs)
            .map(|s| s.into_iter().collect())
            .unwrap_or_default();
        c.check(support == nbrs, "min-orbit-support", || {
            format!("support {support:?}, extended neighbors {nbrs:?}")
        });
        c.check(
            weights.iter().all(|&w| w == 0 || w == 1),
            "min-orbit-weights",
            || format!("weights {weights:?}"),
        );
    }

    let expected = 2 * dual_coxeter(ty) - 2;
    match orbit_dim_from_wdd(&rs, &min) {
        Ok(d) => c.check(d == expected, "min-orbit-dimension", || {
            format!("dimension {d}, expected {expected}")
        }),
        Err(e) => c.check(false, "min-orbit-dimension", || e.to_string()),
    }
    c.out
}

/// Every invariant of one catalog entry. Checks that need the involution are
/// skipped once the diagram itself is invalid.
pub fn check_entry(sd: &SatakeDiagram) -> Vec<Failure> {
    let mut c = Collector::new(sd.name());
    for f in validate_satake(sd).failures {
        c.check(false, "satake-involution", || f);
    }
    if !c.out.is_empty() {
        return c.out;
    }
    let rrs = match restricted_root_system(sd) {
        Ok(r) => r,
        Err(e) => {
            c.check(false, "restricted-root-system", || e.to_string());
            return c.out;
        }
    };
    let rs = sd.root_system();
    let inv = rrs.involution();

    // restricted root system
    let compact = rs
        .roots()
        .iter()
        .filter(|r| rrs.restrict(&to_rat_vec(r)).iter().all(Zero::is_zero))
        .count();
    let black_supported = rs
        .roots()
        .iter()
        .filter(|r| r.iter().enumerate().all(|(i, x)| *x == 0 || sd.is_black(i)))
        .count();
    c.check(compact == black_supported, "compact-roots", || {
        format!("{compact} roots restrict to zero, {black_supported} supported on black nodes")
    });
    let total: usize = rrs.multiplicities().values().sum();
    c.check(
        total + compact == rs.roots().len(),
        "multiplicity-sum",
        || format!("multiplicities sum to {total} with {compact} compact roots"),
    );
    let symmetric = rrs.multiplicities().iter().all(|(xi, m)| {
        let neg = scale(xi, rat(-1));
        rrs.mult(&neg) == *m && rrs.positive().contains(xi) != rrs.positive().contains(&neg)
    });
    c.check(symmetric, "restricted-negation", || {
        "multiplicities or positivity not symmetric under negation".into()
    });
    c.check(
        rrs.simple().len() == sd.white_classes().len(),
        "restricted-simple-roots",
        || {
            format!(
                "{} simple restricted roots for {} white classes",
                rrs.simple().len(),
                sd.white_classes().len()
            )
        },
    );
    let real_rank = rrs.real_rank();
    c.check(
        sd.black().len() + sd.arrows().len() + real_rank == rs.rank(),
        "compact-basis-size",
        || {
            format!(
                "{} black + {} arrows with real rank {real_rank}",
                sd.black().len(),
                sd.arrows().len()
            )
        },
    );
    let expected = sd.descriptor().restricted_expected();
    c.check(rrs.type_label() == expected, "restricted-type", || {
        format!("computed {}, reference {expected}", rrs.type_label())
    });

    // highest restricted root
    let lambda = rrs.highest().to_vec();
    let dominant = rrs.dominant_longest();
    c.check(
        dominant == [lambda.clone()],
        "highest-restricted-root",
        || format!("r(phi) = {lambda:?}, dominant longest {dominant:?}"),
    );
    let extendable = rrs
        .positive()
        .iter()
        .any(|eta| rrs.contains(&add(&lambda, eta)));
    c.check(!extendable, "highest-restricted-root", || {
        "lambda plus a positive restricted root is a restricted root".into()
    });
    let phi = rs.highest_rat();
    let tau_phi = inv.tau(&phi);
    let mult = rrs.highest_mult();
    let (np, nl) = (rs.norm2(&phi), rs.norm2(&lambda));
    let norm_ok = if mult >= 2 {
        np == rat(2) * nl
    } else {
        np == nl
    };
    c.check(norm_ok, "highest-root-norms", || {
        format!("<phi,phi> = {np}, <lambda,lambda> = {nl}, dim g_lambda = {mult}")
    });
    if mult >= 2 {
        let ip = rs.inner(&phi, &tau_phi);
        c.check(ip.is_zero(), "phi-orthogonal-to-tau-phi", || {
            format!("<phi,tau phi> = {ip}")
        });
    }
    c.check((mult >= 2) == (tau_phi != phi), "real-highest-root", || {
        format!("dim g_lambda = {mult}, tau* phi = phi: {}", tau_phi == phi)
    });

    // parity and Hermitian type
    let c_or_bc = is_c_or_bc(&rrs);
    let parity = parity_criterion(&rrs);
    c.check(parity != c_or_bc, "parity-criterion", || {
        format!("parity {parity}, type {}", rrs.type_label())
    });
    let hermitian = mult == 1 && c_or_bc;
    c.check(
        hermitian == sd.hermitian_expected(),
        "hermitian-type",
        || {
            format!(
                "computed {hermitian}, reference {}",
                sd.hermitian_expected()
            )
        },
    );

    // O_min,g
    let direct = direct_from(&rrs);
    match linear_system_from(&rrs) {
        Ok(sol) => c.check(sol.wdd == direct, "two-method-agreement", || {
            format!(
                "direct {:?}, linear system {:?}",
                direct.weights(),
                sol.wdd.weights()
            )
        }),
        Err(e) => c.check(false, "two-method-agreement", || e.to_string()),
    }
    let weights = direct.integer_weights();
    let in_range = weights
        .as_ref()
        .is_some_and(|w| w.iter().all(|x| (0..=2).contains(x)));
    c.check(in_range, "min-g-weights", || {
        format!("weights {:?}", direct.weights())
    });
    let matches = sd.black().iter().all(|&b| direct.weights()[b].is_zero())
        && sd
            .arrows()
            .iter()
            .all(|&(a, b)| direct.weights()[a] == direct.weights()[b]);
    c.check(matches, "min-g-matches-satake", || {
        format!("weights {:?}", direct.weights())
    });
    let min = min_orbit_wdd(rs);
    if mult == 1 {
        c.check(direct == min, "min-g-equals-min", || {
            format!("dim g_lambda = 1 but weights {:?}", direct.weights())
        });
    }

    let conditions = conditions_from(&rrs);
    c.check(conditions.all_equal(), "conditions-agree", || {
        format!("{conditions:?}")
    });

    let count = count_from(&rrs);
    c.check(
        count == if hermitian { 2 } else { 1 },
        "orbit-count",
        || format!("count {count}, hermitian {hermitian}"),
    );

    let min_meets = !conditions.c_ii;
    if in_range {
        let dg = orbit_dim_from_wdd(rs, &direct).unwrap_or(0);
        let dm = orbit_dim_from_wdd(rs, &min).unwrap_or(0);
        c.check(
            dg >= dm && (dg == dm) == min_meets,
            "dimension-monotone",
            || format!("dim O_min,g = {dg}, dim O_min = {dm}, O_min meets: {min_meets}"),
        );
        match reference_row(sd.descriptor()) {
            Some(row) => {
                let got = weights.clone().unwrap_or_default();
                c.check(got == row.weights && dg == row.dim, "reference-row", || {
                    format!(
                        "computed {got:?} dim {dg}, reference {:?} dim {}",
                        row.weights, row.dim
                    )
                });
            }
            None => c.check(min_meets, "reference-row", || {
                "O_min misses the form but it has no reference row".into()
            }),
        }
    }
    c.out
}

/// Runs [`check_root_system`] on `types` and [`check_entry`] on `entries`.
pub fn verify(entries: &[SatakeDiagram], types: &[SimpleType]) -> VerifySummary {
    let mut failures: Vec<Failure> = types.iter().flat_map(|t| check_root_system(*t)).collect();
    failures.extend(entries.iter().flat_map(check_entry));
    failures.sort();
    VerifySummary {
        entries: entries.len(),
        types: types.len(),
        failures,
    }
}

/// The full sweep up to complex rank `max_rank`.
pub fn verify_catalog(max_rank: usize) -> VerifySummary {
    verify(&catalog(max_rank), &simple_types(max_rank))
}

/// All single edits of a diagram: toggle one node's color, drop one arrow,
/// or add one arrow between two unpaired white nodes.
pub fn single_mutations(sd: &SatakeDiagram) -> Vec<(String, SatakeDiagram)> {
    let mut out = Vec::new();
    for i in 0..sd.rank() {
        let mut black = sd.black().clone();
        let what = if black.remove(&i) {
            "whiten"
        } else {
            black.insert(i);
            "blacken"
        };
        out.push((format!("{what} node {}", i + 1), sd.with_black(black)));
    }
    for k in 0..sd.arrows().len() {
        let mut arrows = sd.arrows().to_vec();
        let (a, b) = arrows.remove(k);
        out.push((
            format!("drop arrow {}<->{}", a + 1, b + 1),
            sd.with_arrows(arrows),
        ));
    }
    let free: Vec<usize> = sd
        .white()
        .into_iter()
        .filter(|&i| sd.arrow_partner(i).is_none())
        .collect();
    for (x, &a) in free.iter().enumerate() {
        for &b in &free[x + 1..] {
            let mut arrows = sd.arrows().to_vec();
            arrows.push((a, b));
            out.push((
                format!("add arrow {}<->{}", a + 1, b + 1),
                sd.with_arrows(arrows),
            ));
        }
    }
    out
}
