//! Instance files: `{"group":[m1,...],"sets":[[[c1,...],...],...],"lambda":L}`.

use std::fs;
use std::path::Path;

use sedf_core::sieve::admissible_lambda;
use sedf_core::{Element, Group, SetFamily};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum InstanceError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed instance JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Core(#[from] sedf_core::Error),
    #[error("declared lambda {declared} does not satisfy k^2(m-1) = lambda(v-1) (derived: {})", derived.map_or("none".to_string(), |l| l.to_string()))]
    LambdaMismatch { declared: u64, derived: Option<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub group: Vec<u64>,
    pub sets: Vec<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<u64>,
}

/// A parsed and validated instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub family: SetFamily,
    /// λ declared in the file, already checked against the parameter equation.
    pub declared_lambda: Option<u64>,
}

impl Instance {
    /// Declared λ, or the one forced by the parameter equation.
    pub fn lambda(&self) -> Option<u64> {
        self.declared_lambda
            .or_else(|| derived_lambda(&self.family))
    }
}

/// The λ forced by `k²(m−1) = λ(v−1)`, if it is a positive integer.
pub fn derived_lambda(family: &SetFamily) -> Option<u64> {
    admissible_lambda(family.group().order(), family.m() as u64, family.k() as u64)
        .ok()
        .flatten()
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self, InstanceError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &Path) -> Result<Self, InstanceError> {
        let text = fs::read_to_string(path).map_err(|source| InstanceError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instance files always serialize")
    }

    pub fn from_family(family: &SetFamily, lambda: Option<u64>) -> Self {
        InstanceFile {
            group: family.group().factors().to_vec(),
            sets: (0..family.m())
                .map(|j| family.set_elements(j).into_iter().map(|e| e.0).collect())
                .collect(),
            lambda,
        }
    }

    pub fn to_instance(&self) -> Result<Instance, InstanceError> {
        let group = Group::new(&self.group)?;
        let sets = self
            .sets
            .iter()
            .map(|set| {
                set.iter()
                    .map(|c| group.element(c))
                    .collect::<Result<Vec<Element>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        let family = SetFamily::new(&group, &sets)?;
        if let Some(declared) = self.lambda {
            let derived = derived_lambda(&family);
            if derived != Some(declared) {
                return Err(InstanceError::LambdaMismatch { declared, derived });
            }
        }
        Ok(Instance {
            family,
            declared_lambda: self.lambda,
        })
    }
}

pub fn load(path: &Path) -> Result<Instance, InstanceError> {
    InstanceFile::read(path)?.to_instance()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_exact_round_trip() {
        let text = r#"{"group":[3,3],"sets":[[[0,0],[1,2]],[[2,1],[0,1]]],"lambda":1}"#;
        let file = InstanceFile::from_json(text).unwrap();
        assert_eq!(file.to_json(), text);
        let no_lambda = r#"{"group":[5],"sets":[[[0],[1]],[[2],[4]]]}"#;
        assert_eq!(
            InstanceFile::from_json(no_lambda).unwrap().to_json(),
            no_lambda
        );
    }

    #[test]
    fn validation() {
        let bad = |t: &str| {
            InstanceFile::from_json(t)
                .and_then(|f| f.to_instance())
                .is_err()
        };
        assert!(bad(r#"{"group":[5],"sets":[[[0],[1]],[[1],[4]]]}"#));
        assert!(bad(r#"{"group":[5],"sets":[[[0],[1]],[[2]]]}"#));
        assert!(bad(r#"{"group":[5],"sets":[[[0],[5]],[[2],[4]]]}"#));
        assert!(bad(r#"{"group":[5],"sets":[[[0,0],[1]],[[2],[4]]]}"#));
        assert!(bad(
            r#"{"group":[5],"sets":[[[0],[1]],[[2],[4]]],"lambda":2}"#
        ));
        assert!(bad(
            r#"{"group":[5],"sets":[[[0],[1]],[[2],[4]]],"extra":1}"#
        ));
        let ok = InstanceFile::from_json(r#"{"group":[5],"sets":[[[0],[1]],[[2],[4]]]}"#)
            .unwrap()
            .to_instance()
            .unwrap();
        assert_eq!(ok.lambda(), Some(1));
    }

    #[test]
    fn family_round_trip() {
        let fam = sedf_core::algebra::consecutive_pair_family(3).unwrap();
        let file = InstanceFile::from_family(&fam, Some(1));
        assert_eq!(
            file.to_json(),
            r#"{"group":[10],"sets":[[[0],[1],[2]],[[3],[6],[9]]],"lambda":1}"#
        );
        assert_eq!(file.to_instance().unwrap().family, fam);
    }
}
