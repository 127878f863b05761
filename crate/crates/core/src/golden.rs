//! Reference diagrams and dimensions of `O_min,g` for the five families where
//! it differs from `O_min`, written out independently of the computation.

use serde::{Deserialize, Serialize};

use crate::satake::RealFormDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceRow {
    pub descriptor: RealFormDescriptor,
    /// Weights in Bourbaki order.
    pub weights: Vec<i64>,
    pub dim: usize,
}

fn pattern(len: usize, entries: &[(usize, i64)]) -> Vec<i64> {
    let mut w = vec![0; len];
    for &(i, x) in entries {
        w[i] = x;
    }
    w
}

/// The reference row for `d`, or `None` when `O_min,g = O_min`.
///
/// The orthogonal family is parametrized as `so(n-1,1)`, stored here as
/// `so(1,q)` with `n = q + 1`.
pub fn reference_row(d: RealFormDescriptor) -> Option<ReferenceRow> {
    use RealFormDescriptor::*;
    let (weights, dim) = match d {
        SuStar { k: 2 } => (vec![0, 2, 0], 8),
        SuStar { k } => (pattern(2 * k - 1, &[(1, 1), (2 * k - 3, 1)]), 8 * k - 8),
        SoPq { p: 1, q } if q >= 4 => {
            let n = q + 1;
            (pattern(n / 2, &[(0, 2)]), 2 * n - 4)
        }
        SpPq { p: 1, q: 1 } => (vec![0, 2], 6),
        SpPq { p, q } => (pattern(p + q, &[(1, 1)]), 4 * (p + q) - 2),
        E6Minus26 => (pattern(6, &[(0, 1), (5, 1)]), 32),
        F4Minus20 => (vec![0, 0, 0, 1], 22),
        _ => return None,
    };
    Some(ReferenceRow {
        descriptor: d,
        weights,
        dim,
    })
}

/// Representative parameters for each family: `su*(2k)` for `k = 2..=6`,
/// `so(n-1,1)` for `n = 5..=12`, `sp(p,q)` for `1 <= p <= q <= 5`, then the
/// two exceptional forms.
pub fn representatives() -> Vec<RealFormDescriptor> {
    use RealFormDescriptor::*;
    let mut out: Vec<RealFormDescriptor> = (2..=6).map(|k| SuStar { k }).collect();
    out.extend((5..=12).map(|n| SoPq { p: 1, q: n - 1 }));
    for p in 1..=5 {
        out.extend((p..=5).map(|q| SpPq { p, q }));
    }
    out.extend([E6Minus26, F4Minus20]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_have_the_right_length() {
        for d in representatives() {
            let row = reference_row(d).unwrap();
            assert_eq!(row.weights.len(), d.complex_type().unwrap().rank(), "{d}");
        }
        assert_eq!(representatives().len(), 5 + 8 + 15 + 2);
    }

    #[test]
    fn forms_meeting_o_min_have_no_row() {
        for name in ["sl(4,R)", "su(2,3)", "e7(-25)", "so(2,5)"] {
            assert!(reference_row(name.parse().unwrap()).is_none(), "{name}");
        }
    }
}
