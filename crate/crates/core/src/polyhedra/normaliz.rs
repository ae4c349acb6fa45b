//! The Normaliz input dialect for covering-form polyhedra:
//!
//! ```text
//! amb_space 2
//! constraints 3
//! 1 0 >= 0
//! 0 1 >= 0
//! 1 2 >= 1
//! VerticesOfPolyhedron
//! ```
//!
//! Only `>=` rows are accepted. Rows with right-hand side 0 must be the
//! coordinate inequalities `x_i >= 0`, and every coordinate needs one. Rows
//! with a positive right-hand side `b` become the column `row / b`.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

use super::{parse_rational, CoveringFormPolyhedron, RationalVector};

const OUTPUT_KEYWORDS: [&str; 3] = ["SupportHyperplanes", "ExtremeRays", "VerticesOfPolyhedron"];

/// Parses the input into a covering-form polyhedron and the list of
/// requested output keywords.
pub fn parse_normaliz(text: &str) -> Result<(CoveringFormPolyhedron, Vec<String>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let header = |lines: &mut dyn Iterator<Item = (usize, &str)>, key: &str| -> Result<usize> {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("missing '{key}' line")))?;
        let rest = line
            .strip_prefix(key)
            .ok_or_else(|| Error::parse(no, format!("expected '{key} <count>'")))?;
        rest.trim()
            .parse()
            .map_err(|_| Error::parse(no, format!("bad count in '{line}'")))
    };
    let s = header(&mut lines, "amb_space")?;
    let k = header(&mut lines, "constraints")?;
    if s == 0 {
        return Err(Error::parse(1, "amb_space must be positive"));
    }

    let mut nonneg = vec![false; s];
    let mut columns = Vec::new();
    for _ in 0..k {
        let (no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(0, format!("expected {k} constraint rows")))?;
        let (lhs, rhs) = line.split_once(">=").ok_or_else(|| {
            Error::parse(no, "only '>=' constraints describe a covering polyhedron")
        })?;
        let row = lhs
            .split_whitespace()
            .map(parse_rational)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|m| Error::parse(no, m))?;
        if row.len() != s {
            return Err(Error::parse(
                no,
                format!("expected {s} coefficients, found {}", row.len()),
            ));
        }
        let b = parse_rational(rhs.trim()).map_err(|m| Error::parse(no, m))?;
        if b.is_zero() {
            let unit = row.iter().positions(|c| !c.is_zero()).collect::<Vec<_>>();
            match unit.as_slice() {
                [i] if row[*i].is_positive() => nonneg[*i] = true,
                _ => {
                    return Err(Error::parse(
                        no,
                        "rows with right-hand side 0 must be coordinate inequalities",
                    ))
                }
            }
        } else if b.is_positive() {
            if row.iter().any(Signed::is_negative) {
                return Err(Error::parse(
                    no,
                    "covering rows need nonnegative coefficients",
                ));
            }
            columns.push(RationalVector::new(row.iter().map(|c| c / &b).collect()));
        } else {
            return Err(Error::parse(
                no,
                "negative right-hand sides are not covering form",
            ));
        }
    }
    if let Some(i) = nonneg.iter().position(|&seen| !seen) {
        return Err(Error::parse(
            0,
            format!("missing the constraint x{} >= 0", i + 1),
        ));
    }

    let mut outputs = Vec::new();
    for (no, line) in lines {
        if !OUTPUT_KEYWORDS.contains(&line) {
            return Err(Error::parse(no, format!("unsupported directive '{line}'")));
        }
        outputs.push(line.to_string());
    }
    let p = CoveringFormPolyhedron::new(s, columns).map_err(|e| Error::parse(0, e.to_string()))?;
    Ok((p, outputs))
}

/// Emits the polyhedron in the same dialect, coordinate rows first, and, when
/// given, a block listing the vertices.
pub fn to_normaliz(p: &CoveringFormPolyhedron, vertices: Option<&[RationalVector]>) -> String {
    let s = p.nvars();
    let mut out = format!("amb_space {s}\nconstraints {}\n", s + p.columns().len());
    for i in 0..s {
        let row = (0..s).map(|j| if i == j { "1" } else { "0" }).join(" ");
        out.push_str(&format!("{row} >= 0\n"));
    }
    for c in p.columns() {
        let scale = BigRational::from_integer(c.denominator_lcm());
        let row = c
            .coords()
            .iter()
            .map(|x| (x * &scale).to_integer())
            .join(" ");
        out.push_str(&format!("{row} >= {}\n", scale.to_integer()));
    }
    out.push_str("VerticesOfPolyhedron\n");
    if let Some(vs) = vertices {
        out.push_str(&format!("\n{} vertices of polyhedron:\n", vs.len()));
        for v in vs {
            out.push_str(&v.coords().iter().join(" "));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyhedra::PolyLimits;

    const BLOCK: &str = "amb_space 4
constraints 8
0 1 0 0 >= 0
1 0 0 0 >= 0
0 0 1 0 >= 0
0 0 0 1 >= 0
1 2 0 0 >= 1
0 2 1 0 >= 1
0 0 1 2 >= 1
1 0 0 2 >= 1
SupportHyperplanes
ExtremeRays
VerticesOfPolyhedron
";

    #[test]
    fn parses_the_four_cycle_block() {
        let (p, outputs) = parse_normaliz(BLOCK).unwrap();
        assert_eq!(p.nvars(), 4);
        assert_eq!(p.columns().len(), 4);
        assert_eq!(outputs.len(), 3);
        let vs = p.vertex_points(&PolyLimits::default()).unwrap();
        let shown: Vec<String> = vs.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["(0,1/2,0,1/2)", "(1,0,1,0)"]);
    }

    #[test]
    fn round_trip() {
        let (p, _) = parse_normaliz(BLOCK).unwrap();
        let text = to_normaliz(&p, None);
        let (q, _) = parse_normaliz(&text).unwrap();
        assert_eq!(p, q);
        assert!(text.starts_with("amb_space 4\nconstraints 8\n1 0 0 0 >= 0\n"));
    }

    #[test]
    fn rational_columns_are_scaled() {
        let p = CoveringFormPolyhedron::new(2, vec![RationalVector::parse("(1/2,1/3)").unwrap()])
            .unwrap();
        let text = to_normaliz(&p, None);
        assert!(text.contains("3 2 >= 6\n"));
        assert_eq!(parse_normaliz(&text).unwrap().0, p);
    }

    #[test]
    fn refuses_other_forms() {
        let cases = [
            ("amb_space 2\nconstraints 1\n1 1 <= 1\n", 3),
            ("amb_space 2\nconstraints 2\n1 0 >= 0\n1 1 >= 1\n", 0),
            (
                "amb_space 2\nconstraints 3\n1 0 >= 0\n0 1 >= 0\n1 -1 >= 1\n",
                5,
            ),
            (
                "amb_space 2\nconstraints 3\n1 0 >= 0\n1 1 >= 0\n1 1 >= 1\n",
                4,
            ),
            (
                "amb_space 2\nconstraints 3\n1 0 >= 0\n0 1 >= 0\n1 1 >= 1\nHilbertBasis\n",
                6,
            ),
            (
                "amb_space 2\nconstraints 3\n1 0 >= 0\n0 1 >= 0\n1 1 1 >= 1\n",
                5,
            ),
        ];
        for (text, line) in cases {
            match parse_normaliz(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
