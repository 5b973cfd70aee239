//! Text formats: algebra files, graph files. Parsers report line-numbered
//! errors; serialization stores one representative per symmetry orbit and
//! parsing completes the orbit, rejecting inconsistent images.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num::Zero;

use crate::algebra::{symmetry_orbit, AlgebraSpec, Flavor};
use crate::graded::{GradedBasis, Parity};
use crate::graph::{GraphKind, OrientedGraph};
use crate::scalar::Scalar;
use crate::tensor::Tensor;


#[derive(thiserror::Error, Debug)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, FormatError> {
    Err(FormatError { line, message: message.into() })
}

/// Parses an algebra file:
///
/// ```text
/// flavor l-infinity
/// dim 3
/// parities odd odd odd
/// inner 1 0 0
/// inner 0 1 0
/// inner 0 0 1
/// d 2 : 1 2 3 = 1
/// ```
///
/// `inner` rows appear in order, one per basis element. Each `d` line gives
/// one lower structure constant; the images under the flavor's symmetry are
/// filled in automatically and conflicting images are rejected.
pub fn parse_algebra(text: &str) -> Result<AlgebraSpec<Scalar>, FormatError> {
    let mut flavor: Option<Flavor> = None;
    let mut dim: Option<usize> = None;
    let mut parities: Option<Vec<Parity>> = None;
    let mut inner_rows: Vec<(usize, Vec<Scalar>)> = Vec::new();
    let mut d_lines: Vec<(usize, usize, Vec<usize>, Scalar)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "flavor" => {
                flavor = Some(match words.next() {
                    Some("a-infinity") => Flavor::AInfinity,
                    Some("l-infinity") => Flavor::LInfinity,
                    other => return err(lineno, format!("unknown flavor {other:?}")),
                });
            }
            "dim" => {
                let n: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or(FormatError { line: lineno, message: "bad dimension".into() })?;
                if n == 0 {
                    return err(lineno, "dimension must be positive");
                }
                dim = Some(n);
            }
            "parities" => {
                let ps: Result<Vec<Parity>, _> = words
                    .map(|w| match w {
                        "even" | "0" => Ok(Parity::Even),
                        "odd" | "1" => Ok(Parity::Odd),
                        other => err(lineno, format!("unknown parity {other:?}")),
                    })
                    .collect();
                parities = Some(ps?);
            }
            "inner" => {
                let row: Result<Vec<Scalar>, _> = words
                    .map(|w| {
                        Scalar::from_str(w)
                            .map_err(|_| FormatError { line: lineno, message: format!("bad rational {w:?}") })
                    })
                    .collect();
                inner_rows.push((lineno, row?));
            }
            "d" => {
                let arity: usize = words
                    .next()
                    .and_then(|w| w.parse().ok())
                    .ok_or(FormatError { line: lineno, message: "bad arity".into() })?;
                if words.next() != Some(":") {
                    return err(lineno, "expected ':' after the arity");
                }
                let rest: Vec<&str> = words.collect();
                let eq = rest
                    .iter()
                    .position(|&w| w == "=")
                    .ok_or(FormatError { line: lineno, message: "expected '='".into() })?;
                let indices: Result<Vec<usize>, _> = rest[..eq]
                    .iter()
                    .map(|w| {
                        w.parse::<usize>()
                            .ok()
                            .and_then(|x| x.checked_sub(1))
                            .ok_or(FormatError { line: lineno, message: format!("bad index {w:?}") })
                    })
                    .collect();
                let indices = indices?;
                if indices.len() != arity + 1 {
                    return err(lineno, format!("arity {arity} needs {} indices", arity + 1));
                }
                if eq + 1 >= rest.len() {
                    return err(lineno, "missing value after '='");
                }
                let value = Scalar::from_str(rest[eq + 1])
                    .map_err(|_| FormatError { line: lineno, message: format!("bad rational {:?}", rest[eq + 1]) })?;
                d_lines.push((lineno, arity, indices, value));
            }
            other => return err(lineno, format!("unknown directive {other:?}")),
        }
    }

    let flavor = flavor.ok_or(FormatError { line: 0, message: "missing flavor line".into() })?;
    let dim = dim.ok_or(FormatError { line: 0, message: "missing dim line".into() })?;
    let parities = parities.ok_or(FormatError { line: 0, message: "missing parities line".into() })?;
    if parities.len() != dim {
        return err(0, format!("expected {dim} parities, got {}", parities.len()));
    }
    let basis = GradedBasis::new(parities);

    if inner_rows.len() != dim {
        return err(0, format!("expected {dim} inner rows, got {}", inner_rows.len()));
    }
    let mut inner = Tensor::zeros(dim, 2);
    for (r, (lineno, row)) in inner_rows.into_iter().enumerate() {
        if row.len() != dim {
            return err(lineno, format!("inner row needs {dim} entries"));
        }
        for (c, v) in row.into_iter().enumerate() {
            inner.set(&[r, c], v);
        }
    }

    let mut lower: BTreeMap<usize, Tensor<Scalar>> = BTreeMap::new();
    for (lineno, arity, indices, value) in d_lines {
        if arity < 2 {
            return err(lineno, "structure constants start at arity 2");
        }
        if indices.iter().any(|&i| i >= dim) {
            return err(lineno, format!("index out of range 1..{dim}"));
        }
        let tensor = lower
            .entry(arity)
            .or_insert_with(|| Tensor::zeros(dim, arity + 1));
        for (image, signed) in symmetry_orbit(flavor, &basis, &indices, &value) {
            let existing = tensor.get(&image);
            if existing.is_zero() {
                tensor.set(&image, signed);
            } else if *existing != signed {
                return err(
                    lineno,
                    format!(
                        "conflicting value for index {:?}: symmetry forces {signed}, already {existing}",
                        image.iter().map(|i| i + 1).collect::<Vec<_>>()
                    ),
                );
            }
        }
    }

    AlgebraSpec::new(flavor, basis, inner, lower)
        .map_err(|e| FormatError { line: 0, message: e.to_string() })
}

/// Serializes an algebra to the file format, one representative per
/// symmetry orbit (the lexicographically least index of the orbit).
pub fn write_algebra(spec: &AlgebraSpec<Scalar>) -> String {
    let mut out = String::new();
    writeln!(out, "flavor {}", spec.flavor()).unwrap();
    writeln!(out, "dim {}", spec.dim()).unwrap();
    let parities: Vec<String> = spec
        .basis()
        .parities()
        .iter()
        .map(|p| p.to_string())
        .collect();
    writeln!(out, "parities {}", parities.join(" ")).unwrap();
    for r in 0..spec.dim() {
        let row: Vec<String> = (0..spec.dim())
            .map(|c| spec.inner().get(&[r, c]).to_string())
            .collect();
        writeln!(out, "inner {}", row.join(" ")).unwrap();
    }
    for arity in spec.arities().collect::<Vec<_>>() {
        let tensor = spec.lower_tensor(arity).unwrap();
        let mut covered: std::collections::BTreeSet<Vec<usize>> = Default::default();
        for (idx, value) in tensor.support() {
            if covered.contains(&idx) {
                continue;
            }
            for (image, _) in symmetry_orbit(spec.flavor(), spec.basis(), &idx, &value) {
                covered.insert(image);
            }
            let shown: Vec<String> = idx.iter().map(|i| (i + 1).to_string()).collect();
            writeln!(out, "d {} : {} = {}", arity, shown.join(" "), value).unwrap();
        }
    }
    out
}

/// Parses a graph file:
///
/// ```text
/// ribbon
/// vertex 1 2 3
/// vertex 4 5 6
/// edge 1 4
/// edge 2 5
/// edge 3 6
/// ```
///
/// The first line names the kind; each `vertex` line lists incident
/// half-edges (in cyclic order for ribbon graphs) and each `edge` line is
/// `tail head`.
pub fn parse_graph(text: &str) -> Result<OrientedGraph, FormatError> {
    let mut kind: Option<GraphKind> = None;
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next().unwrap() {
            "ordinary" => kind = Some(GraphKind::Ordinary),
            "ribbon" => kind = Some(GraphKind::Ribbon),
            "vertex" => {
                let list: Result<Vec<usize>, _> = words
                    .map(|w| {
                        w.parse::<usize>()
                            .ok()
                            .and_then(|x| x.checked_sub(1))
                            .ok_or(FormatError { line: lineno, message: format!("bad half-edge {w:?}") })
                    })
                    .collect();
                vertices.push(list?);
            }
            "edge" => {
                let parse = |w: Option<&str>| {
                    w.and_then(|w| w.parse::<usize>().ok())
                        .and_then(|x| x.checked_sub(1))
                        .ok_or(FormatError { line: lineno, message: "edge needs two half-edges".into() })
                };
                let t = parse(words.next())?;
                let h = parse(words.next())?;
                edges.push((t, h));
            }
            other => return err(lineno, format!("unknown directive {other:?}")),
        }
    }

    let kind = kind.ok_or(FormatError {
        line: 0,
        message: "missing kind line ('ordinary' or 'ribbon')".into(),
    })?;
    OrientedGraph::new(kind, vertices, &edges)
        .map_err(|e| FormatError { line: 0, message: e.to_string() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_linf_relations;
    use crate::zoo;

    #[test]
    fn zoo_round_trips_through_the_file_format() {
        for spec in [zoo::abelian3(), zoo::so3(), zoo::m2k()] {
            let text = write_algebra(&spec);
            let parsed = parse_algebra(&text).unwrap();
            assert_eq!(parsed, spec);
        }
    }

    #[test]
    fn symmetric_completion_fills_the_orbit() {
        let text = "flavor l-infinity\ndim 3\nparities odd odd odd\n\
                    inner 1 0 0\ninner 0 1 0\ninner 0 0 1\nd 2 : 1 2 3 = 1\n";
        let spec = parse_algebra(text).unwrap();
        assert_eq!(spec, zoo::so3());
        assert!(check_linf_relations(&spec, 4).unwrap().passed());
    }

    #[test]
    fn conflicting_images_are_rejected_with_a_line_number() {
        let text = "flavor l-infinity\ndim 3\nparities odd odd odd\n\
                    inner 1 0 0\ninner 0 1 0\ninner 0 0 1\n\
                    d 2 : 1 2 3 = 1\nd 2 : 2 1 3 = 1\n";
        let e = parse_algebra(text).unwrap_err();
        assert_eq!(e.line, 8);
    }

    #[test]
    fn odd_symmetry_on_a_fixed_index_is_a_conflict() {
        // d_{1 1 2} on an odd basis is forced to zero by antisymmetry.
        let text = "flavor l-infinity\ndim 3\nparities odd odd odd\n\
                    inner 1 0 0\ninner 0 1 0\ninner 0 0 1\nd 2 : 1 1 2 = 1\n";
        assert!(parse_algebra(text).is_err());
    }

    #[test]
    fn graph_file_round_trip() {
        let text = "ribbon\nvertex 1 2 3\nvertex 4 5 6\nedge 1 4\nedge 2 5\nedge 3 6\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.kind(), GraphKind::Ribbon);
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edges(), vec![(0, 3), (1, 4), (2, 5)]);
    }

    #[test]
    fn bad_lines_are_reported_with_numbers() {
        let e = parse_graph("ordinary\nvertex 1 2 zz\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = parse_algebra("flavor q-infinity\n").unwrap_err();
        assert_eq!(e.line, 1);
    }
}
