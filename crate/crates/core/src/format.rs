//! Text renderings. The structured form is line oriented, versioned by a
//! `freeq/1` header and byte-stable; the human form is not.

use std::fmt::Write;

use crate::oracle::{CertifyReport, RankedSolution};
use crate::solver::{EquationInstance, JsjCase, Pair, Rank1Family, VarietyDescription, VarietyShape};
use crate::word::Word;

pub const SCHEMA: &str = "freeq/1";

pub fn pair(p: &Pair) -> String {
    format!("{},{}", p.0, p.1)
}

fn equation_line(out: &mut String, eq: &EquationInstance) {
    let _ = writeln!(out, "alphabet: {}", eq.alphabet);
    let _ = writeln!(out, "w: {}", eq.w);
    let _ = writeln!(out, "u: {}", eq.u);
}

fn case_lines(out: &mut String, case: &JsjCase) {
    let _ = writeln!(out, "case: {}", case.tag());
    match case {
        JsjCase::Case2HNN { p, q, basis } => {
            let _ = writeln!(out, "hnn.p: {p}");
            let _ = writeln!(out, "hnn.q: {q}");
            let _ = writeln!(out, "hnn.basis: {basis}");
        }
        JsjCase::Case3QH { normalizer } => {
            let _ = writeln!(out, "qh.normalizer: {normalizer}");
        }
        JsjCase::Unresolved(reason) => {
            let _ = writeln!(out, "unresolved: {reason}");
        }
        _ => {}
    }
}

fn rank1_line(out: &mut String, f: &Rank1Family) {
    if f.empty {
        let _ = writeln!(out, "rank1: empty");
    } else {
        let _ = writeln!(
            out,
            "rank1: root={} exponent={} particular={},{} direction={},{}",
            f.root, f.exponent, f.particular.0, f.particular.1, f.direction.0, f.direction.1
        );
    }
}

fn variety_body(out: &mut String, desc: &VarietyDescription, indent: &str) {
    let mut body = String::new();
    equation_line(&mut body, &desc.eq);
    case_lines(&mut body, &desc.case);
    let _ = writeln!(body, "formula: {}", desc.formula);
    let _ = writeln!(body, "diagram: {}", desc.diagram);
    if let Some(f) = &desc.rank1 {
        rank1_line(&mut body, f);
    }
    match &desc.shape {
        VarietyShape::TrivialU { family } => {
            for g in &family.generators {
                let _ = writeln!(body, "lattice: {},{}", g.0, g.1);
            }
        }
        VarietyShape::Primitive { aut } => {
            let _ = writeln!(body, "primitive.aut: {aut}");
        }
        VarietyShape::Reduced { inner, .. } => {
            let _ = writeln!(body, "reduced:");
            variety_body(&mut body, inner, "  ");
        }
        VarietyShape::Empty | VarietyShape::Rank1Only => {}
        VarietyShape::Rank2 { generators, minimal } => {
            for g in &generators.generators {
                let _ = writeln!(body, "generator {}: {}", g.name, g.aut);
            }
            let _ = writeln!(body, "ball: {}", minimal.radius);
            let _ = writeln!(body, "seeds: {}", minimal.seeds.len());
            let _ = writeln!(body, "minimal.count: {}", minimal.solutions.len());
            for p in &minimal.solutions {
                let _ = writeln!(body, "minimal: {}", pair(p));
            }
        }
        VarietyShape::Unresolved { generators } => {
            for g in generators.iter().flat_map(|g| &g.generators) {
                let _ = writeln!(body, "generator {}: {}", g.name, g.aut);
            }
        }
    }
    for line in body.lines() {
        let _ = writeln!(out, "{indent}{line}");
    }
}

pub fn variety_structured(desc: &VarietyDescription) -> String {
    let mut out = format!("{SCHEMA} variety\n");
    variety_body(&mut out, desc, "");
    out.push_str("end\n");
    out
}

pub fn variety_human(desc: &VarietyDescription) -> String {
    let mut out = format!("Equation {} over F({})\n", desc.eq.w, desc.eq.alphabet);
    let _ = writeln!(out, "  right-hand side: {}", desc.eq.u);
    let _ = writeln!(out, "  case: {}, formula: {}", desc.case.tag(), desc.formula);
    match &desc.shape {
        VarietyShape::TrivialU { family } => {
            let _ = writeln!(
                out,
                "  solutions: (r^a, r^b) for any r, (a,b) in the span of {:?}",
                family.generators
            );
        }
        VarietyShape::Primitive { aut } => {
            let _ = writeln!(
                out,
                "  solutions: (X(u,z), Y(u,z)) for any z, with X = {}, Y = {}",
                aut.image_x(),
                aut.image_y()
            );
        }
        VarietyShape::Reduced { inner, .. } => {
            let _ = writeln!(out, "  reduces to the root equation:");
            for line in variety_human(inner).lines() {
                let _ = writeln!(out, "    {line}");
            }
        }
        VarietyShape::Empty => {
            let _ = writeln!(out, "  no solutions");
        }
        VarietyShape::Rank1Only => {}
        VarietyShape::Rank2 { generators, minimal } => {
            let _ = writeln!(out, "  canonical automorphisms: {}", generators.names().join(", "));
            let _ = writeln!(out, "  {} minimal rank 2 solution(s):", minimal.solutions.len());
            for p in &minimal.solutions {
                let _ = writeln!(out, "    x = {}, y = {}", p.0, p.1);
            }
        }
        VarietyShape::Unresolved { .. } => {
            let _ = writeln!(out, "  classification did not finish within the budgets");
        }
    }
    if let Some(f) = desc.rank1.as_ref().filter(|f| !f.empty) {
        let _ = writeln!(
            out,
            "  rank 1: ({}^m1, {}^m2) with {}·m1 + {}·m2 = {}",
            f.root, f.root, f.sums.0, f.sums.1, f.exponent
        );
    }
    out
}

pub fn classify_structured(w: &Word, case: &JsjCase) -> String {
    let mut out = format!("{SCHEMA} classify\nw: {w}\n");
    case_lines(&mut out, case);
    out.push_str("end\n");
    out
}

pub fn brute_structured(eq: &EquationInstance, max_len: usize, sols: &[RankedSolution]) -> String {
    let mut out = format!("{SCHEMA} brute\n");
    equation_line(&mut out, eq);
    let _ = writeln!(out, "ball: {max_len}");
    let _ = writeln!(out, "count: {}", sols.len());
    for s in sols {
        let _ = writeln!(out, "solution: {},{} rank={}", s.x, s.y, s.rank);
    }
    out.push_str("end\n");
    out
}

/// Runtimes are left out so that the output is reproducible.
pub fn certify_structured(eq: &EquationInstance, report: &CertifyReport) -> String {
    let mut out = format!("{SCHEMA} certify\n");
    equation_line(&mut out, eq);
    let _ = writeln!(out, "ball: {}", report.ball);
    let _ = writeln!(out, "closure.ball: {}", report.closure_ball);
    for (rank, n) in report.counts.iter().enumerate() {
        let _ = writeln!(out, "count.rank{rank}: {n}");
    }
    let _ = writeln!(out, "covered.rank1: {}", report.covered_by_rank1);
    let _ = writeln!(out, "covered.orbits: {}", report.covered_by_orbits);
    let _ = writeln!(out, "covered: {}", report.covered());
    for s in &report.uncovered {
        let _ = writeln!(out, "uncovered: {},{} rank={}", s.x, s.y, s.rank);
    }
    out.push_str("end\n");
    out
}

pub fn certify_human(report: &CertifyReport) -> String {
    let mut out = format!(
        "ball {} (closure {}): {} solutions, ranks 0/1/2 = {}/{}/{}\n",
        report.ball,
        report.closure_ball,
        report.total(),
        report.counts[0],
        report.counts[1],
        report.counts[2]
    );
    let _ = writeln!(
        out,
        "brute force {:.3}s, closure {:.3}s",
        report.brute_time.as_secs_f64(),
        report.closure_time.as_secs_f64()
    );
    if report.covered() {
        out.push_str("every solution is covered\n");
    } else {
        let _ = writeln!(out, "{} uncovered:", report.uncovered.len());
        for s in &report.uncovered {
            let _ = writeln!(out, "  x = {}, y = {} (rank {})", s.x, s.y, s.rank);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::{describe_variety, Budgets};

    #[test]
    fn structured_header_and_footer() {
        let eq = EquationInstance::parse("ab", "XYxy", "ABab").unwrap();
        let d = describe_variety(&eq, &Budgets::default()).unwrap();
        let s = variety_structured(&d);
        assert!(s.starts_with("freeq/1 variety\n"));
        assert!(s.ends_with("end\n"));
        assert!(s.contains("minimal: a,b\n"));
        assert!(s.contains("case: Case3QH\n"));
    }

    #[test]
    fn identity_prints_as_one() {
        assert_eq!(pair(&(Word::identity(), Word::parse("a").unwrap())), "1,a");
    }
}
