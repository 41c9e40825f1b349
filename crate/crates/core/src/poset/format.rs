use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::LabeledPoset;

/// `{"n": 5, "covers": [[1, 3], [3, 5]]}`. Strictness is implicit in the labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub n: usize,
    pub covers: Vec<(usize, usize)>,
}

impl From<&LabeledPoset> for PosetFile {
    fn from(p: &LabeledPoset) -> Self {
        PosetFile {
            n: p.size(),
            covers: p.covers().to_vec(),
        }
    }
}

impl TryFrom<PosetFile> for LabeledPoset {
    type Error = Error;
    fn try_from(f: PosetFile) -> Result<Self> {
        LabeledPoset::new(f.n, &f.covers)
    }
}

impl LabeledPoset {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&PosetFile::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: PosetFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        f.try_into()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let p = LabeledPoset::from_json(r#"{"n": 5, "covers": [[1,3],[3,5],[2,4],[1,4],[2,5]]}"#)
            .unwrap();
        assert_eq!(p.covers().len(), 5);
        assert_eq!(LabeledPoset::from_json(&p.to_json()).unwrap(), p);
        assert!(LabeledPoset::from_json(r#"{"n": 2, "covers": [[1,2],[2,1]]}"#).is_err());
        assert!(LabeledPoset::from_json("{").is_err());
    }
}
