//! Minimal nilpotent orbits meeting a real form.
//!
//! `O_min` is the minimal nilpotent orbit of the complexification, with
//! neutral element `H_phi`. `O_min,g` is the smallest nilpotent orbit meeting
//! the real form; its neutral element is the coroot `A_lambda` of the highest
//! restricted root. Its diagram is computed two ways: directly from `lambda`,
//! and by solving for `A_lambda` against a basis of the compact part of the
//! Cartan subalgebra.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ratmat::{rat, rat_solve, Rat, RatMatrix};
use crate::restricted::{
    is_c_or_bc, parity_criterion, restricted_root_system, RestrictedRootSystem,
};
use crate::rootsys::{
    extended_neighbors, min_orbit_wdd, orbit_dim_from_wdd, Letter, WeightedDynkinDiagram,
};
use crate::satake::{RealFormDescriptor, SatakeDiagram};

/// Black nodes carry weight 0 and arrow-joined nodes carry equal weights.
pub fn wdd_matches_satake(w: &WeightedDynkinDiagram, sd: &SatakeDiagram) -> Result<bool> {
    if w.simple_type() != sd.root_system().simple_type() {
        return Err(Error::TypeMismatch(format!(
            "{} diagram against the {} Satake diagram of {}",
            w.simple_type(),
            sd.root_system().simple_type(),
            sd.name()
        )));
    }
    let ws = w.weights();
    let blacks_zero = sd.black().iter().all(|&b| ws[b].is_zero());
    let arrows_equal = sd.arrows().iter().all(|&(a, b)| ws[a] == ws[b]);
    Ok(blacks_zero && arrows_equal)
}

/// Whether `O_min` meets the real form.
pub fn min_meets_real_form(sd: &SatakeDiagram) -> bool {
    wdd_matches_satake(&min_orbit_wdd(sd.root_system()), sd).expect("same root system")
}

/// Some black node is joined to the lowest-root node of the extended
/// diagram. Rank-one forms have no such node.
pub fn black_extended_criterion(sd: &SatakeDiagram) -> bool {
    match extended_neighbors(sd.root_system()) {
        Ok(nbrs) => nbrs.iter().any(|i| sd.is_black(*i)),
        Err(_) => false,
    }
}

pub(crate) fn direct_from(rrs: &RestrictedRootSystem) -> WeightedDynkinDiagram {
    let rs = rrs.source().root_system();
    let lambda = rrs.highest();
    let weights = (0..rs.rank())
        .map(|i| rrs.pairing(&rs.simple_root(i), lambda))
        .collect();
    WeightedDynkinDiagram::new(rs.simple_type(), weights).expect("rank matches")
}

/// `a_i(A_lambda) = 2<a_i, lambda>/<lambda, lambda>`.
pub fn min_g_wdd_direct(sd: &SatakeDiagram) -> Result<WeightedDynkinDiagram> {
    Ok(direct_from(&restricted_root_system(sd)?))
}

/// Solution of the square system `X + H_im = 2 H_phi`, where `X` matches the
/// Satake diagram (one unknown per white arrow class) and `H_im` is expanded
/// over the coroots of black nodes and the differences `H_a - H_b` of arrow
/// pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystemSolution {
    /// White arrow classes with the weight of `X = H_phi + tau H_phi` on them.
    pub class_weights: Vec<(Vec<usize>, Rat)>,
    /// Coefficients of `H_im` over black coroots, then arrow differences.
    pub coefficients: Vec<Rat>,
    /// `<phi,phi> / (2 <lambda,lambda>)`, so that `A_lambda = scale * X`.
    pub scale: Rat,
    pub wdd: WeightedDynkinDiagram,
}

pub(crate) fn linear_system_from(rrs: &RestrictedRootSystem) -> Result<LinearSystemSolution> {
    let sd = rrs.source();
    let rs = sd.root_system();
    let n = rs.rank();
    let cartan = rs.cartan();
    let classes = sd.white_classes();
    let black: Vec<usize> = sd.black().iter().copied().collect();
    let unknowns = classes.len() + black.len() + sd.arrows().len();
    if unknowns != n {
        return Err(Error::InconsistentDiagram {
            form: sd.name(),
            reason: format!("{unknowns} unknowns for {n} equations"),
        });
    }

    let mut m = RatMatrix::zeros(n, n);
    for (c, class) in classes.iter().enumerate() {
        for &i in class {
            m[(i, c)] = rat(1);
        }
    }
    let offset = classes.len();
    for i in 0..n {
        // a_i(H_aj) = C[i][j]
        for (k, &b) in black.iter().enumerate() {
            m[(i, offset + k)] = rat(cartan[i][b]);
        }
        for (k, &(a, b)) in sd.arrows().iter().enumerate() {
            m[(i, offset + black.len() + k)] = rat(cartan[i][a] - cartan[i][b]);
        }
    }
    let h_phi = min_orbit_wdd(rs);
    let rhs: Vec<Rat> = h_phi.weights().iter().map(|w| rat(2) * w).collect();
    let x = rat_solve(&m, &rhs)?;

    let phi = rs.highest_rat();
    let lambda = rrs.highest();
    let scale = rs.norm2(&phi) / (rat(2) * rs.norm2(lambda));
    let mut weights = vec![Rat::zero(); n];
    for (c, class) in classes.iter().enumerate() {
        for &i in class {
            weights[i] = scale * x[c];
        }
    }
    Ok(LinearSystemSolution {
        class_weights: classes
            .into_iter()
            .zip(x[..offset].iter().copied())
            .collect(),
        coefficients: x[offset..].to_vec(),
        scale,
        wdd: WeightedDynkinDiagram::new(rs.simple_type(), weights)?,
    })
}

pub fn solve_min_g_linear_system(sd: &SatakeDiagram) -> Result<LinearSystemSolution> {
    linear_system_from(&restricted_root_system(sd)?)
}

pub fn min_g_wdd_linear_system(sd: &SatakeDiagram) -> Result<WeightedDynkinDiagram> {
    Ok(solve_min_g_linear_system(sd)?.wdd)
}

/// `dim_C O_min,g`.
pub fn min_g_dimension(sd: &SatakeDiagram) -> Result<usize> {
    orbit_dim_from_wdd(sd.root_system(), &min_g_wdd_direct(sd)?)
}

pub(crate) fn count_from(rrs: &RestrictedRootSystem) -> u8 {
    if rrs.highest_mult() >= 2 || parity_criterion(rrs) {
        1
    } else {
        2
    }
}

/// Number of minimal real nilpotent orbits in `g` (equivalently, of minimal
/// nilpotent `K_C`-orbits in `p_C`).
pub fn count_minimal_real_orbits(sd: &SatakeDiagram) -> Result<u8> {
    Ok(count_from(&restricted_root_system(sd)?))
}

/// The equivalent conditions characterizing `O_min,g != O_min`, each
/// computed by its own route.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitConditions {
    /// `O_min,g != O_min`, by diagram inequality.
    pub c_i: bool,
    /// `O_min` does not meet `g`.
    pub c_ii: bool,
    /// `dim g_lambda >= 2`.
    pub c_iv: bool,
    /// `phi` is not real (`tau* phi != phi`).
    pub c_v: bool,
    /// The diagram of `O_min` fails to match the Satake diagram.
    pub c_vi: bool,
    /// A black node is adjacent to the extended node.
    pub c_vii: bool,
    /// The form is one of `su*(2k), so(n,1), sp(p,q), e6(-26), f4(-20)`.
    pub c_xii: bool,
}

impl OrbitConditions {
    /// `O_min` does not meet `p_C`; identical to `c_ii`.
    pub fn c_iii(&self) -> bool {
        self.c_ii
    }

    pub fn as_array(&self) -> [(&'static str, bool); 7] {
        [
            ("i", self.c_i),
            ("ii", self.c_ii),
            ("iv", self.c_iv),
            ("v", self.c_v),
            ("vi", self.c_vi),
            ("vii", self.c_vii),
            ("xii", self.c_xii),
        ]
    }

    pub fn all_equal(&self) -> bool {
        let v = self.as_array();
        v.iter().all(|(_, b)| *b == v[0].1)
    }

    pub fn all_true(&self) -> bool {
        self.as_array().iter().all(|(_, b)| *b)
    }
}

pub(crate) fn conditions_from(rrs: &RestrictedRootSystem) -> OrbitConditions {
    let sd = rrs.source();
    let rs = sd.root_system();
    let min_wdd = min_orbit_wdd(rs);
    let phi = rs.highest_rat();
    let matches = wdd_matches_satake(&min_wdd, sd).expect("same root system");
    OrbitConditions {
        c_i: direct_from(rrs) != min_wdd,
        c_ii: !min_meets_real_form(sd),
        c_iv: rrs.highest_mult() >= 2,
        c_v: rrs.involution().tau(&phi) != phi,
        c_vi: !matches,
        c_vii: black_extended_criterion(sd),
        c_xii: sd.descriptor().in_no_min_meeting_list(),
    }
}

pub fn orbit_conditions(sd: &SatakeDiagram) -> Result<OrbitConditions> {
    Ok(conditions_from(&restricted_root_system(sd)?))
}

/// Node labels of the chain-with-branch E6 drawing (`a1..a5` along the
/// chain, `a6` below the middle) and of the F4 drawing, indexed by Bourbaki
/// node.
pub fn paper_labels(d: RealFormDescriptor) -> Option<Vec<usize>> {
    let ty = d.complex_type().ok()?;
    match (ty.letter(), ty.rank()) {
        (Letter::E, 6) => Some(vec![1, 6, 2, 3, 4, 5]),
        (Letter::F, 4) => Some(vec![1, 2, 3, 4]),
        _ => None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub descriptor: RealFormDescriptor,
    /// Diagram of `O_min`.
    pub min_wdd: WeightedDynkinDiagram,
    pub min_meets: bool,
    /// Diagram of `O_min,g`.
    pub min_g_wdd: WeightedDynkinDiagram,
    pub min_g_dim: usize,
    pub g_lambda_dim: usize,
    pub minimal_real_orbit_count: u8,
    pub hermitian: bool,
    pub conditions: OrbitConditions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub paper_labels: Option<Vec<usize>>,
}

pub fn orbit_report(sd: &SatakeDiagram) -> Result<OrbitReport> {
    let rrs = restricted_root_system(sd)?;
    let rs = sd.root_system();
    let min_g_wdd = direct_from(&rrs);
    Ok(OrbitReport {
        descriptor: sd.descriptor(),
        min_wdd: min_orbit_wdd(rs),
        min_meets: min_meets_real_form(sd),
        min_g_dim: orbit_dim_from_wdd(rs, &min_g_wdd)?,
        min_g_wdd,
        g_lambda_dim: rrs.highest_mult(),
        minimal_real_orbit_count: count_from(&rrs),
        hermitian: rrs.highest_mult() == 1 && is_c_or_bc(&rrs),
        conditions: conditions_from(&rrs),
        paper_labels: paper_labels(sd.descriptor()),
    })
}
