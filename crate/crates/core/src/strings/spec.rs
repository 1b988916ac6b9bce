//! JSON description of a fractal string.
//!
//! ```json
//! {"type": "cantor", "depth": 30}
//! {"type": "selfsimilar", "a": 4, "b": 2, "start_index": 1, "normalization": 1, "depth": 30}
//! {"type": "power", "exponent": 0.5, "count": 10000}
//! {"type": "explicit", "atoms": [[3, 1], [9, 2]]}
//! ```

use serde::{Deserialize, Serialize};

use super::selfsimilar::SelfSimilarSpec;
use super::string::{make_cantor_string, make_power_string, GeneralizedFractalString};
use crate::error::Result;
use crate::scalar::{lit, Real};

fn default_depth() -> usize {
    30
}
fn default_start() -> i32 {
    1
}
fn default_norm() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum StringSpec {
    Cantor {
        #[serde(default = "default_depth")]
        depth: usize,
    },
    Selfsimilar {
        a: f64,
        b: f64,
        #[serde(default = "default_start")]
        start_index: i32,
        #[serde(default = "default_norm")]
        normalization: f64,
        #[serde(default = "default_depth")]
        depth: usize,
    },
    Power {
        exponent: f64,
        count: usize,
    },
    Explicit {
        /// `[position, multiplicity]` pairs.
        atoms: Vec<[f64; 2]>,
    },
}

impl StringSpec {
    pub fn unit() -> Self {
        StringSpec::Explicit {
            atoms: vec![[1.0, 1.0]],
        }
    }

    pub fn build<T: Real>(&self) -> Result<GeneralizedFractalString<T>> {
        match self {
            StringSpec::Cantor { depth } => make_cantor_string(*depth),
            StringSpec::Power { exponent, count } => make_power_string(lit(*exponent), *count),
            StringSpec::Explicit { atoms } => {
                let pairs: Vec<(T, T)> = atoms.iter().map(|[x, w]| (lit(*x), lit(*w))).collect();
                GeneralizedFractalString::from_pairs(&pairs)
            }
            StringSpec::Selfsimilar { depth, .. } => self.self_similar::<T>().unwrap()?.truncate(*depth),
        }
    }

    /// Closed-form description, for the lattice variants.
    pub fn self_similar<T: Real>(&self) -> Option<Result<SelfSimilarSpec<T>>> {
        match self {
            StringSpec::Cantor { .. } => Some(Ok(SelfSimilarSpec::cantor())),
            StringSpec::Selfsimilar {
                a,
                b,
                start_index,
                normalization,
                ..
            } => Some(SelfSimilarSpec::new(
                lit(*a),
                lit(*b),
                *start_index,
                lit(*normalization),
            )),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_variant() {
        let specs = [
            r#"{"type":"cantor","depth":5}"#,
            r#"{"type":"selfsimilar","a":4,"b":2,"depth":6}"#,
            r#"{"type":"power","exponent":0.5,"count":100}"#,
            r#"{"type":"explicit","atoms":[[9,2],[3,1]]}"#,
        ];
        for s in specs {
            let spec: StringSpec = serde_json::from_str(s).unwrap();
            let eta = spec.build::<f64>().unwrap();
            assert!(!eta.is_empty());
            let back: StringSpec = serde_json::from_str(&serde_json::to_string(&spec).unwrap()).unwrap();
            assert_eq!(back, spec);
        }
    }

    #[test]
    fn cantor_json_matches_constructor() {
        let spec: StringSpec = serde_json::from_str(r#"{"type":"cantor","depth":2}"#).unwrap();
        assert_eq!(
            spec.build::<f64>().unwrap().atoms(),
            make_cantor_string::<f64>(2).unwrap().atoms()
        );
        assert!(spec.self_similar::<f64>().is_some());
        assert!(StringSpec::unit().self_similar::<f64>().is_none());
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let bad: StringSpec = serde_json::from_str(r#"{"type":"selfsimilar","a":2,"b":3}"#).unwrap();
        assert!(bad.build::<f64>().is_err());
        assert!(serde_json::from_str::<StringSpec>(r#"{"type":"mystery"}"#).is_err());
    }
}
