//! JSON encoding of series: alphabet as letter-name array, words as
//! strings (`"ab"` on `{a,b}`, `"01"` on `{x0,x1}`).

use crate::series::{Alphabet, NCSeries};
use crate::NCError;
use scalars::Scalar;

fn word_to_string(alphabet: Alphabet, word: &[u8]) -> String {
    word.iter()
        .map(|&l| match (alphabet, l) {
            (Alphabet::AB, 0) => 'a',
            (Alphabet::AB, 1) => 'b',
            (Alphabet::X01, 0) => '0',
            (Alphabet::X01, 1) => '1',
            _ => unreachable!(),
        })
        .collect()
}

fn word_from_string(alphabet: Alphabet, s: &str) -> Result<Vec<u8>, NCError> {
    s.chars()
        .map(|ch| match (alphabet, ch) {
            (Alphabet::AB, 'a') | (Alphabet::X01, '0') => Ok(0u8),
            (Alphabet::AB, 'b') | (Alphabet::X01, '1') => Ok(1u8),
            _ => Err(NCError::BadEncoding(format!(
                "letter {ch:?} not in alphabet"
            ))),
        })
        .collect()
}

impl NCSeries {
    pub fn to_json(&self) -> serde_json::Value {
        let letters = match self.alphabet() {
            Alphabet::AB => vec!["a", "b"],
            Alphabet::X01 => vec!["x0", "x1"],
        };
        let coeffs: Vec<serde_json::Value> = self
            .coeffs()
            .map(|(w, c)| {
                serde_json::json!([word_to_string(self.alphabet(), w), c.to_json()])
            })
            .collect();
        serde_json::json!({
            "alphabet": letters,
            "degree": self.degree(),
            "coeffs": coeffs,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<NCSeries, NCError> {
        let letters = v["alphabet"]
            .as_array()
            .ok_or_else(|| NCError::BadEncoding("missing alphabet".into()))?;
        let names: Vec<&str> = letters.iter().filter_map(|x| x.as_str()).collect();
        let alphabet = match names.as_slice() {
            ["a", "b"] => Alphabet::AB,
            ["x0", "x1"] => Alphabet::X01,
            other => {
                return Err(NCError::BadEncoding(format!("unknown alphabet {other:?}")))
            }
        };
        let degree = v["degree"]
            .as_u64()
            .ok_or_else(|| NCError::BadEncoding("missing degree".into()))?
            as usize;
        let coeffs = v["coeffs"]
            .as_array()
            .ok_or_else(|| NCError::BadEncoding("missing coeffs".into()))?;
        let mut items = Vec::new();
        for entry in coeffs {
            let pair = entry
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| NCError::BadEncoding("coeff entry must be a pair".into()))?;
            let word_str = pair[0]
                .as_str()
                .ok_or_else(|| NCError::BadEncoding("word must be a string".into()))?;
            let word = word_from_string(alphabet, word_str)?;
            if word.len() > degree {
                return Err(NCError::BadEncoding(format!(
                    "word {word_str:?} exceeds the truncation degree"
                )));
            }
            let scalar = Scalar::from_json(&pair[1])
                .map_err(|e| NCError::BadEncoding(e.to_string()))?;
            items.push((word, scalar));
        }
        Ok(NCSeries::from_coeffs(alphabet, degree, items))
    }
}
