//! Named graph families on the command line: `path:5`, `kmn:2,3`, `i`, ...

use std::fmt;
use std::str::FromStr;

use strongrecolor_core::graph::{
    make_complete_bipartite, make_cycle, make_i, make_path, make_phi, make_psi, make_star,
};
use strongrecolor_core::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    Psi(usize),
    Phi(usize, usize),
    I,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad family spec {spec:?}: {reason} (expected path:N, cycle:N, kmn:M,Q, star:M, psi:N, phi:P,Q or i)")]
pub struct FamilyError {
    spec: String,
    reason: &'static str,
}

impl FromStr for Family {
    type Err = FamilyError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let err = |reason| FamilyError { spec: spec.to_owned(), reason };
        let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
        let nums: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|a| a.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| err("non-numeric argument"))?
        };
        let family = match (name.trim().to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("path", &[n]) => Family::Path(n),
            ("cycle", &[n]) => Family::Cycle(n),
            ("kmn", &[m, q]) => Family::CompleteBipartite(m, q),
            ("star", &[m]) => Family::Star(m),
            ("psi", &[n]) => Family::Psi(n),
            ("phi", &[p, q]) => Family::Phi(p, q),
            ("i", &[]) => Family::I,
            ("path" | "cycle" | "kmn" | "star" | "psi" | "phi" | "i", _) => {
                return Err(err("wrong number of arguments"))
            }
            _ => return Err(err("unknown family")),
        };
        Ok(family)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::CompleteBipartite(m, q) => write!(f, "kmn:{m},{q}"),
            Family::Star(m) => write!(f, "star:{m}"),
            Family::Psi(n) => write!(f, "psi:{n}"),
            Family::Phi(p, q) => write!(f, "phi:{p},{q}"),
            Family::I => write!(f, "i"),
        }
    }
}

impl Family {
    pub fn build(self) -> strongrecolor_core::Result<Graph> {
        match self {
            Family::Path(n) => make_path(n),
            Family::Cycle(n) => make_cycle(n),
            Family::CompleteBipartite(m, q) => make_complete_bipartite(m, q),
            Family::Star(m) => make_star(m),
            Family::Psi(n) => make_psi(n),
            Family::Phi(p, q) => make_phi(p, q),
            Family::I => Ok(make_i()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        for spec in ["path:5", "cycle:4", "kmn:2,3", "star:3", "psi:2", "phi:2,3", "i"] {
            let f: Family = spec.parse().unwrap();
            assert_eq!(f.to_string(), spec);
            assert!(f.build().is_ok());
        }
        assert_eq!("kmn: 2, 3".parse::<Family>(), Ok(Family::CompleteBipartite(2, 3)));
    }

    #[test]
    fn rejects_bad_specs() {
        for spec in ["", "path", "path:x", "kmn:2", "wheel:5", "i:3"] {
            assert!(spec.parse::<Family>().is_err(), "{spec}");
        }
        assert!("phi:1,2".parse::<Family>().unwrap().build().is_err());
    }
}
