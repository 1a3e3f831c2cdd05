//! Deterministic text, JSON, and LaTeX rendering of relations, orbit
//! classes, characteristic polynomials, and bijection reports.
//!
//! JSON field order follows the struct declarations below, so repeated runs
//! are byte-identical.

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::charpoly::CharPoly;
use crate::poly::Poly;
use crate::relations::{EntrySet, OrbitClass, Relation, RelationError, ReportEntry};
use crate::walks::BijectionReport;

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RelationJson {
    pub n: usize,
    pub entries: Vec<(u32, u32)>,
    pub coefficients: Vec<String>,
    pub verified_up_to: usize,
}

impl From<&Relation> for RelationJson {
    fn from(rel: &Relation) -> Self {
        RelationJson {
            n: rel.entry_set().n(),
            entries: rel.entry_set().entries().to_vec(),
            coefficients: rel.coeffs().iter().map(Poly::to_string).collect(),
            verified_up_to: rel.verified_up_to(),
        }
    }
}

impl TryFrom<&RelationJson> for Relation {
    type Error = String;

    fn try_from(json: &RelationJson) -> Result<Self, String> {
        let entry_set = EntrySet::new(json.n, json.entries.clone()).map_err(|e| e.to_string())?;
        let coeffs: Vec<Poly> = json
            .coefficients
            .iter()
            .map(|s| Poly::parse(s).map_err(|e| format!("coefficient {s:?}: {e}")))
            .collect::<Result<_, _>>()?;
        Relation::from_parts(entry_set, coeffs, json.verified_up_to).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OrbitClassJson {
    pub representative: Vec<(u32, u32)>,
    pub orbit_size: usize,
    pub group: String,
}

impl From<&OrbitClass> for OrbitClassJson {
    fn from(class: &OrbitClass) -> Self {
        OrbitClassJson {
            representative: class.representative.entries().to_vec(),
            orbit_size: class.orbit_size,
            group: class.group.as_str().to_string(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ReportEntryJson {
    pub class: OrbitClassJson,
    pub relation: Option<RelationJson>,
    pub error: Option<String>,
}

impl From<&ReportEntry> for ReportEntryJson {
    fn from(entry: &ReportEntry) -> Self {
        match &entry.relation {
            Ok(rel) => ReportEntryJson {
                class: (&entry.class).into(),
                relation: Some(rel.into()),
                error: None,
            },
            Err(e) => ReportEntryJson {
                class: (&entry.class).into(),
                relation: None,
                error: Some(e.to_string()),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BijectionReportJson {
    pub n: usize,
    pub m: usize,
    pub i: u32,
    pub domain_size: usize,
    pub codomain_size: usize,
    pub pass: bool,
    pub counterexample: Option<String>,
}

impl From<&BijectionReport> for BijectionReportJson {
    fn from(report: &BijectionReport) -> Self {
        BijectionReportJson {
            n: report.n,
            m: report.m,
            i: report.i,
            domain_size: report.domain_size,
            codomain_size: report.codomain_size,
            pass: report.pass,
            counterexample: report.counterexample.as_ref().map(|w| w.to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharPolyJson {
    pub n: usize,
    /// `p_0 .. p_n` of `det(A - xI)`.
    pub coefficients: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WordListJson {
    pub n: usize,
    pub m: usize,
    pub i: u32,
    pub j: u32,
    pub count: usize,
    pub words: Vec<String>,
}

/// `a[2,1]*(A^m)[1,2] - a[1,2]*(A^m)[2,1] = 0` style rendering. Zero
/// coefficients are skipped; multi-term coefficients are parenthesized.
pub fn relation_text(rel: &Relation) -> String {
    let mut out = String::new();
    let mut first = true;
    for (q, &(i, j)) in rel.coeffs().iter().zip(rel.entry_set().entries()) {
        if q.is_zero() {
            continue;
        }
        let (sign_negative, body) = coefficient_body(q);
        if first {
            if sign_negative {
                out.push('-');
            }
            first = false;
        } else if sign_negative {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        if !body.is_empty() {
            out.push_str(&body);
            out.push('*');
        }
        out.push_str(&format!("(A^m)[{i},{j}]"));
    }
    if first {
        // All coefficients zero cannot happen for a valid Relation.
        out.push('0');
    }
    out.push_str(" = 0");
    out
}

/// Splits a nonzero coefficient into a sign and the body printed before
/// `*(A^m)[i,j]`; an empty body means the coefficient is `+-1`.
fn coefficient_body(q: &Poly) -> (bool, String) {
    if q.num_terms() == 1 {
        let (m, c) = q.leading().expect("single term");
        let negative = c.is_negative();
        let mag = c.abs();
        let body = if m.is_one() {
            if mag.is_one() {
                String::new()
            } else {
                mag.to_string()
            }
        } else {
            let magnitude = Poly::term(m.clone(), mag);
            magnitude.to_string()
        };
        (negative, body)
    } else {
        (false, format!("({q})"))
    }
}

/// LaTeX for a polynomial: `a_{1,2} a_{2,1}^{2} - 3 a_{1,1}` style.
pub fn poly_latex(p: &Poly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        if idx == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else if c.is_negative() {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let mag = c.abs();
        let mut need_space = false;
        if m.is_one() || !mag.is_one() {
            out.push_str(&mag.to_string());
            need_space = true;
        }
        for (v, e) in m.powers() {
            if need_space {
                out.push(' ');
            }
            need_space = true;
            out.push_str(&format!("a_{{{},{}}}", v.row(), v.col()));
            if e > 1 {
                out.push_str(&format!("^{{{e}}}"));
            }
        }
    }
    out
}

/// Math-mode display of the full relation `sum q_s (A^m)_s = 0`.
pub fn relation_latex(rel: &Relation) -> String {
    let mut out = String::new();
    let mut first = true;
    for (q, &(i, j)) in rel.coeffs().iter().zip(rel.entry_set().entries()) {
        if q.is_zero() {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        out.push_str(&format!(
            "\\left({}\\right) \\cdot (A^m)_{{{i},{j}}}",
            poly_latex(q)
        ));
    }
    out.push_str(" = 0");
    out
}

pub fn charpoly_json(cp: &CharPoly<Poly>) -> CharPolyJson {
    CharPolyJson {
        n: cp.n(),
        coefficients: cp.coeffs().iter().map(Poly::to_string).collect(),
    }
}

pub fn charpoly_text(cp: &CharPoly<Poly>) -> String {
    let mut out = String::new();
    for (k, p) in cp.coeffs().iter().enumerate() {
        out.push_str(&format!("p_{k} = {p}\n"));
    }
    out
}

pub fn charpoly_latex(cp: &CharPoly<Poly>) -> String {
    let mut out = String::from("P_A(x) = ");
    let mut first = true;
    for (k, p) in cp.coeffs().iter().enumerate().rev() {
        if p.is_zero() {
            continue;
        }
        if !first {
            out.push_str(" + ");
        }
        first = false;
        let coeff = format!("\\left({}\\right)", poly_latex(p));
        match k {
            0 => out.push_str(&coeff),
            1 => out.push_str(&format!("{coeff} x")),
            _ => out.push_str(&format!("{coeff} x^{{{k}}}")),
        }
    }
    out
}

/// Pretty JSON with a trailing newline.
pub fn to_json_pretty<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializable value");
    text.push('\n');
    text
}

/// Per-class text rendering used by the report verb.
pub fn report_text(entries: &[ReportEntry]) -> String {
    let mut out = String::new();
    for (idx, entry) in entries.iter().enumerate() {
        out.push_str(&format!(
            "class {} of {}: S = {} (orbit size {}, group {})\n",
            idx + 1,
            entries.len(),
            entry.class.representative,
            entry.class.orbit_size,
            entry.class.group
        ));
        match &entry.relation {
            Ok(rel) => {
                out.push_str("  ");
                out.push_str(&relation_text(rel));
                out.push_str(&format!(
                    "   [verified for m = 1..{}]\n",
                    rel.verified_up_to()
                ));
            }
            Err(e) => out.push_str(&format!("  no relation: {e}\n")),
        }
    }
    out
}

/// One orbit class per line.
pub fn classify_text(classes: &[OrbitClass]) -> String {
    let mut out = String::new();
    for class in classes {
        out.push_str(&format!(
            "{} (orbit size {}, group {})\n",
            class.representative, class.orbit_size, class.group
        ));
    }
    out.push_str(&format!("{} classes\n", classes.len()));
    out
}

pub fn report_error_text(e: &RelationError) -> String {
    format!("error: {e}\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::var;
    use crate::relations::{DiscoveryOptions, EntrySet};

    #[test]
    fn two_by_two_relation_text() {
        let s = EntrySet::new(2, vec![(1, 2), (2, 1)]).unwrap();
        let rel = Relation::from_parts(s, vec![var(2, 1), var(1, 2).neg()], 8).unwrap();
        assert_eq!(
            relation_text(&rel),
            "a[2,1]*(A^m)[1,2] - a[1,2]*(A^m)[2,1] = 0"
        );
    }

    #[test]
    fn unit_coefficient_folds_away() {
        let s = EntrySet::new(2, vec![(1, 2), (2, 1)]).unwrap();
        let rel = Relation::from_parts(s, vec![Poly::one(), Poly::zero()], 8).unwrap();
        assert_eq!(relation_text(&rel), "(A^m)[1,2] = 0");
    }

    #[test]
    fn relation_json_round_trip() {
        let a = crate::matrix::SymMatrix::generic(2).unwrap();
        let s = EntrySet::new(2, vec![(1, 2), (2, 1)]).unwrap();
        let rel = crate::relations::find_relation(&a, &s, &DiscoveryOptions::default()).unwrap();
        let json: RelationJson = (&rel).into();
        let text = to_json_pretty(&json);
        let parsed: RelationJson = serde_json::from_str(&text).unwrap();
        let back = Relation::try_from(&parsed).unwrap();
        assert_eq!(back, rel);
    }

    #[test]
    fn latex_subscripts() {
        let p = Poly::parse("a[1,2]^2*a[2,1] - 3*a[1,1]").unwrap();
        assert_eq!(poly_latex(&p), "a_{1,2}^{2} a_{2,1} - 3 a_{1,1}");
    }
}
