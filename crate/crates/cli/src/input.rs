use std::fs;
use std::io::Read;

use monideal::{CoveringFormPolyhedron, MonomialIdeal, WeightedOrientedGraph};

use crate::CliError;

pub enum Input {
    Ideal(MonomialIdeal),
    Graph(WeightedOrientedGraph),
    Normaliz(CoveringFormPolyhedron),
}

impl Input {
    /// The ideal to work on: a graph stands for its edge ideal.
    pub fn into_ideal(self) -> Result<MonomialIdeal, CliError> {
        match self {
            Input::Ideal(i) => Ok(i),
            Input::Graph(g) => Ok(g.edge_ideal()),
            Input::Normaliz(_) => Err(CliError::usage(
                "this command needs an ideal or a graph, not a polyhedron",
            )),
        }
    }

    pub fn into_graph(self) -> Result<WeightedOrientedGraph, CliError> {
        match self {
            Input::Graph(g) => Ok(g),
            _ => Err(CliError::usage(
                "this command needs a graph file (starting with 'vertices N')",
            )),
        }
    }
}

pub fn read_text(path: &str) -> Result<String, CliError> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::usage(format!("reading stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::usage(format!("{path}: {e}")))
    }
}

fn first_word(text: &str) -> Option<&str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
}

/// Graph files start with `vertices`, Normaliz input with `amb_space`;
/// anything else is read as an ideal.
pub fn load(path: &str) -> Result<Input, CliError> {
    let text = read_text(path)?;
    match first_word(&text) {
        Some("vertices") => Ok(Input::Graph(text.parse()?)),
        Some("amb_space") => Ok(Input::Normaliz(
            monideal::polyhedra::parse_normaliz(&text)?.0,
        )),
        _ => Ok(Input::Ideal(text.parse()?)),
    }
}
