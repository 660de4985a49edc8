//! The on-disk point format: a flat JSON object with rational-as-string
//! coordinates, e.g. `{"n": 3, "x": ["1","2","3"], "y": ["1","0","2"]}`.
//! Strings keep the values exact and make the format trivial to produce
//! from any language.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::point::PointPair;
use crate::rational::Rational;

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PointFile {
    pub n: usize,
    pub x: Vec<String>,
    pub y: Vec<String>,
}

impl PointFile {
    pub fn from_point(p: &PointPair) -> Self {
        PointFile {
            n: p.n(),
            x: p.xs().iter().map(Rational::canonical_string).collect(),
            y: p.ys().iter().map(Rational::canonical_string).collect(),
        }
    }

    pub fn to_point(&self) -> Result<PointPair> {
        if self.x.len() != self.n || self.y.len() != self.n {
            return Err(Error::PointFile(format!(
                "expected {} coordinates, got {} x and {} y",
                self.n,
                self.x.len(),
                self.y.len()
            )));
        }
        let parse = |raw: &[String]| -> Result<Vec<Rational>> {
            raw.iter().map(|s| s.parse::<Rational>()).collect()
        };
        PointPair::new(parse(&self.x)?, parse(&self.y)?)
    }
}

pub fn parse_point_file(text: &str) -> Result<PointPair> {
    let file: PointFile =
        serde_json::from_str(text).map_err(|e| Error::PointFile(e.to_string()))?;
    file.to_point()
}

/// Canonical rendering; parses back to an identical point.
pub fn render_point_file(p: &PointPair) -> String {
    serde_json::to_string(&PointFile::from_point(p)).expect("plain data serializes")
}
