use std::fmt::Write;

use crate::orbits::OrbitReport;
use crate::satake::build_satake;

/// Graphviz rendering of the Satake diagram of `report.descriptor`, each node
/// labeled with its weight in the diagram of `O_min,g`.
///
/// Black nodes are filled, arrows are dashed edges, and multiple bonds are
/// drawn as parallel strokes pointing from the long root to the short one.
#[allow(clippy::needless_range_loop)]
pub fn emit_dot(report: &OrbitReport) -> String {
    let sd = build_satake(report.descriptor).expect("report comes from a valid descriptor");
    let cartan = sd.root_system().cartan();
    let weights = report
        .min_g_wdd
        .integer_weights()
        .expect("weights of a nilpotent orbit are integral");
    let mut s = String::new();
    let _ = writeln!(s, "graph \"{}\" {{", report.descriptor);
    let _ = writeln!(s, "  node [shape=circle];");
    for (i, w) in weights.iter().enumerate() {
        let style = if sd.is_black(i) {
            ", style=filled, fillcolor=black, fontcolor=white"
        } else {
            ""
        };
        let _ = writeln!(s, "  a{} [label=\"{w}\"{style}];", i + 1);
    }
    let n = cartan.len();
    for i in 0..n {
        for j in i + 1..n {
            let bond = cartan[i][j] * cartan[j][i];
            match bond {
                0 => {}
                1 => {
                    let _ = writeln!(s, "  a{} -- a{};", i + 1, j + 1);
                }
                _ => {
                    // |C[i][j]| > 1 means a_j is the short root
                    let (long, short) = if cartan[i][j].abs() > 1 {
                        (i, j)
                    } else {
                        (j, i)
                    };
                    let color = vec!["black"; bond as usize].join(":");
                    let _ = writeln!(
                        s,
                        "  a{} -- a{} [color=\"{color}\", dir=forward];",
                        long + 1,
                        short + 1
                    );
                }
            }
        }
    }
    for &(a, b) in sd.arrows() {
        let _ = writeln!(
            s,
            "  a{} -- a{} [style=dashed, constraint=false];",
            a + 1,
            b + 1
        );
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbits::orbit_report;

    fn dot(name: &str) -> String {
        emit_dot(&orbit_report(&build_satake(name.parse().unwrap()).unwrap()).unwrap())
    }

    #[test]
    fn sl2() {
        let d = dot("sl(2,R)");
        assert!(d.contains("a1 [label=\"2\"];"));
        assert!(!d.contains("filled") && !d.contains("--"));
    }

    #[test]
    fn su_star_4() {
        let d = dot("su*(4)");
        assert!(d.contains("a1 [label=\"0\", style=filled"));
        assert!(d.contains("a2 [label=\"2\"];"));
        assert!(d.contains("a3 [label=\"0\", style=filled"));
        assert!(d.contains("a1 -- a2;") && d.contains("a2 -- a3;"));
    }

    #[test]
    fn e6_minus_26() {
        let d = dot("e6(-26)");
        assert_eq!(d.matches("style=filled").count(), 4);
        assert!(d.contains("a1 [label=\"1\"];") && d.contains("a6 [label=\"1\"];"));
        // branch node a2 hangs off a4
        assert!(d.contains("a2 -- a4;"));
    }

    #[test]
    fn bonds_and_arrows() {
        let d = dot("f4(-20)");
        assert!(d.contains("a2 -- a3 [color=\"black:black\", dir=forward];"));
        let d = dot("g2(2)");
        assert!(d.contains("a2 -- a1 [color=\"black:black:black\", dir=forward];"));
        let d = dot("su(2,3)");
        assert!(d.contains("a1 -- a4 [style=dashed"));
    }
}
