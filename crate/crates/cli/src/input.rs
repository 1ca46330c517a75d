//! The presentation document.
//!
//! ```json
//! {"n": 2, "N": 2,
//!  "relation": [{"word": [0, 1], "coeff": "1"}, {"word": [1, 0], "coeff": "-1"}],
//!  "phi": [[{"word": [], "coeff": "1/2"}], []]}
//! ```
//!
//! `relation` holds one relation; `relations` holds a list of them. Exactly
//! one of the two must be present. `phi`, when given, lists `φ_j(f)` for
//! `j = 0..N-1`, component `j` having words of length `j`. Coefficients are
//! strings, either integers or `p/q`.

use nkoszul::exactlin::field::format_q;
use nkoszul::pbw::PhiMap;
use nkoszul::{Field, Presentation, Tensor, Word, Q};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub word: Vec<usize>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub n: usize,
    #[serde(rename = "N")]
    pub big_n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<Vec<TermDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relations: Option<Vec<Vec<TermDoc>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Vec<TermDoc>>>,
}

/// A parsed document.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub presentation: Presentation<Q>,
    pub phi: Option<PhiMap<Q>>,
}

pub fn parse_presentation(text: &str) -> Result<Parsed, CliError> {
    let doc: Document = serde_json::from_str(text).map_err(|e| CliError::Syntax {
        line: e.line(),
        column: e.column(),
        message: strip_position(&e.to_string()),
    })?;
    from_document(&doc)
}

fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

pub fn from_document(doc: &Document) -> Result<Parsed, CliError> {
    let (n, big_n) = (doc.n, doc.big_n);
    if n == 0 {
        return Err(semantic("n", "need at least one generator"));
    }
    if n > 256 {
        return Err(semantic("n", format!("at most 256 generators are supported, got {n}")));
    }
    if big_n < 2 {
        return Err(semantic("N", format!("relation degree must be at least 2, got {big_n}")));
    }
    let groups: Vec<(String, &[TermDoc])> = match (&doc.relation, &doc.relations) {
        (Some(r), None) => vec![("relation".to_string(), r.as_slice())],
        (None, Some(rs)) => rs
            .iter()
            .enumerate()
            .map(|(i, r)| (format!("relations[{i}]"), r.as_slice()))
            .collect(),
        (Some(_), Some(_)) => return Err(semantic("relation", "give either `relation` or `relations`, not both")),
        (None, None) => return Err(semantic("relation", "missing `relation` or `relations`")),
    };
    let mut rels = Vec::with_capacity(groups.len());
    for (path, terms) in &groups {
        let t = tensor(path, terms, n, big_n)?;
        if t.is_zero() {
            return Err(semantic(path, "relation is zero"));
        }
        rels.push(t);
    }
    let presentation = Presentation::new(n, big_n, rels).map_err(|e| semantic("relations", e.to_string()))?;
    let phi = match &doc.phi {
        None => None,
        Some(comps) => {
            if comps.len() != big_n {
                return Err(semantic(
                    "phi",
                    format!("expected {big_n} components phi_0..phi_{}, got {}", big_n - 1, comps.len()),
                ));
            }
            let comps = comps
                .iter()
                .enumerate()
                .map(|(j, terms)| tensor(&format!("phi[{j}]"), terms, n, j))
                .collect::<Result<Vec<_>, _>>()?;
            Some(PhiMap::new(n, big_n, comps).map_err(|e| semantic("phi", e.to_string()))?)
        }
    };
    Ok(Parsed { presentation, phi })
}

fn semantic(path: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Semantic {
        path: path.into(),
        message: message.into(),
    }
}

fn tensor(path: &str, terms: &[TermDoc], n: usize, degree: usize) -> Result<Tensor<Q>, CliError> {
    let mut parsed = Vec::with_capacity(terms.len());
    for (k, t) in terms.iter().enumerate() {
        let here = format!("{path}[{k}]");
        if t.word.len() != degree {
            return Err(semantic(
                format!("{here}.word"),
                format!("degree mismatch: expected {degree}, found {}", t.word.len()),
            ));
        }
        if let Some((pos, &g)) = t.word.iter().enumerate().find(|(_, &g)| g >= n) {
            return Err(semantic(format!("{here}.word[{pos}]"), format!("generator index {g} ≥ n = {n}")));
        }
        let c = Q::parse(&t.coeff)
            .ok_or_else(|| semantic(format!("{here}.coeff"), format!("not a rational number: {:?}", t.coeff)))?;
        let letters = t.word.iter().map(|&g| g as u8).collect();
        parsed.push((Word::new(letters), c));
    }
    Tensor::from_terms(n, degree, parsed).map_err(|e| semantic(path, e.to_string()))
}

fn terms_of(t: &Tensor<Q>) -> Vec<TermDoc> {
    t.terms()
        .map(|(w, c)| TermDoc {
            word: w.letters().iter().map(|&g| g as usize).collect(),
            coeff: format_q(c),
        })
        .collect()
}

pub fn to_document(p: &Presentation<Q>, phi: Option<&PhiMap<Q>>) -> Document {
    let rels: Vec<Vec<TermDoc>> = p.relations().iter().map(terms_of).collect();
    let (relation, relations) = if rels.len() == 1 {
        (rels.into_iter().next(), None)
    } else {
        (None, Some(rels))
    };
    Document {
        n: p.generators(),
        big_n: p.relation_degree(),
        relation,
        relations,
        phi: phi.map(|m| m.components().iter().map(terms_of).collect()),
    }
}

/// Pretty-printed document for `p`; [`parse_presentation`] reads it back.
pub fn emit(p: &Presentation<Q>, phi: Option<&PhiMap<Q>>) -> String {
    serde_json::to_string_pretty(&to_document(p, phi)).expect("documents serialise")
}
