//! One record per changemaker: genus, torsion, linearity and the Lemma 5 /
//! Theorem 1 bookkeeping.

use std::collections::BTreeMap;

use cmkit_core::{
    complement_basis, exponents_from_torsion, genus_from_changemaker, gerstein_isomorphic,
    gram_matrix, has_induced_claw, intersection_graph, is_connected, leading_ones,
    recognize_linear_with, standard_basis, torsion_sequence, torus_knot_exponents,
    ChangemakerVector, Changemakers, IsometryConfig, TorsionSequence,
};
use serde::{Deserialize, Serialize};

use crate::output::{join, opt, Row};
use crate::{CliError, SCHEMA};

/// Largest rank the census accepts.
pub const CENSUS_CAPACITY: usize = 6;

/// Rank bound for the isometry searches behind linear-lattice recognition.
pub const SEARCH_RANK: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    /// `(1, 2, ..., 2)`
    #[serde(rename = "family_1_2s")]
    Family12s,
    /// `(1, 1, 1, 2, ..., 2)`
    #[serde(rename = "family_111_2s")]
    Family1112s,
    ClawObstructed,
    Decomposable,
    NonLinearOther,
    #[serde(rename = "sigma_n_ge_3")]
    SigmaNGe3,
    /// `(1, ..., 1)`
    Unknot,
}

impl Classification {
    pub const ALL: [Classification; 7] = [
        Classification::Family12s,
        Classification::Family1112s,
        Classification::ClawObstructed,
        Classification::Decomposable,
        Classification::NonLinearOther,
        Classification::SigmaNGe3,
        Classification::Unknot,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Family12s => "family_1_2s",
            Classification::Family1112s => "family_111_2s",
            Classification::ClawObstructed => "claw_obstructed",
            Classification::Decomposable => "decomposable",
            Classification::NonLinearOther => "non_linear_other",
            Classification::SigmaNGe3 => "sigma_n_ge_3",
            Classification::Unknot => "unknot",
        }
    }

    pub fn is_family(self) -> bool {
        matches!(
            self,
            Classification::Family12s | Classification::Family1112s
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinearParams {
    pub p: i64,
    pub q: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub schema: String,
    pub sigma: Vec<i64>,
    pub n: usize,
    pub p: i64,
    pub g: i64,
    pub linear: Option<LinearParams>,
    pub torsion: Vec<i64>,
    pub exponents: Option<Vec<i64>>,
    pub classification: Classification,
    pub theorem1_applicable: bool,
    pub theorem1_verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading_ones: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claw: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
}

impl CensusRecord {
    /// The Lemma 5 invariant for `sigma_n = 2`: linear exactly for the two
    /// families, a claw exactly when `k >= 4`, disconnected exactly when `k = 2`.
    /// `None` for other shapes.
    pub fn lemma5_consistent(&self) -> Option<bool> {
        let k = self.leading_ones?;
        let claw = self.claw?;
        let connected = self.connected?;
        Some(
            self.linear.is_some() == self.classification.is_family()
                && claw == (k >= 4)
                && !connected == (k == 2),
        )
    }
}

/// Theorem 1 hypothesis `n_3 = g - 2` (with `r >= 3`), read off the torsion
/// values as `t_{g-2} = 1` and `t_{g-3} >= 2`.
pub fn theorem1_applicable(g: i64, t_g_minus_3: i64, t_g_minus_2: i64) -> bool {
    g >= 3 && t_g_minus_2 == 1 && t_g_minus_3 >= 2
}

/// Theorem 1 conclusion for a record whose complement is `Lambda(p, q)`.
pub fn theorem1_conclusion(
    g: i64,
    p: i64,
    linear: LinearParams,
    exponents: Option<&[i64]>,
) -> bool {
    let torus = torus_knot_exponents(g).ok();
    let exponents_match = match (exponents, &torus) {
        (Some(e), Some(t)) => e == t.exponents(),
        _ => false,
    };
    let p_ok = p == 4 * g + 1 || p == 4 * g + 3;
    let lens_ok = gerstein_isomorphic(linear.p, linear.q, 4 * g + 1, g)
        || gerstein_isomorphic(linear.p, linear.q, 4 * g + 3, 3 * g + 2);
    exponents_match && p_ok && lens_ok
}

/// Linearity data for `sigma_n <= 2`; `None` when `sigma_n >= 3`.
pub(crate) struct ShapeFacts {
    pub classification: Classification,
    pub linear: Option<LinearParams>,
    pub leading_ones: Option<usize>,
    pub claw: Option<bool>,
    pub connected: Option<bool>,
}

pub(crate) fn shape_facts(sigma: &ChangemakerVector) -> Result<ShapeFacts, CliError> {
    let config = IsometryConfig::with_max_rank(SEARCH_RANK);
    match sigma.top() {
        1 => {
            let basis = complement_basis(&sigma.to_lattice_vector())?;
            let linear = recognize_linear_with(&gram_matrix(&basis)?, &config)?;
            Ok(ShapeFacts {
                classification: Classification::Unknot,
                linear: linear.map(|(p, q)| LinearParams { p, q }),
                leading_ones: None,
                claw: None,
                connected: None,
            })
        }
        2 => {
            let k = leading_ones(sigma).ok_or_else(|| {
                CliError::BadInput(format!("{sigma} does not have the shape 1^k 2^(n+1-k)"))
            })?;
            let basis = standard_basis(sigma)?;
            let graph = intersection_graph(&basis)?;
            let claw = has_induced_claw(&graph);
            let connected = is_connected(&graph);
            let linear = recognize_linear_with(&gram_matrix(&basis)?, &config)?;
            let classification = if claw {
                Classification::ClawObstructed
            } else if !connected {
                Classification::Decomposable
            } else if k == 1 {
                Classification::Family12s
            } else if k == 3 {
                Classification::Family1112s
            } else {
                Classification::NonLinearOther
            };
            Ok(ShapeFacts {
                classification,
                linear: linear.map(|(p, q)| LinearParams { p, q }),
                leading_ones: Some(k),
                claw: Some(claw),
                connected: Some(connected),
            })
        }
        _ => Ok(ShapeFacts {
            classification: Classification::SigmaNGe3,
            linear: None,
            leading_ones: None,
            claw: None,
            connected: None,
        }),
    }
}

pub fn census_record(sigma: &ChangemakerVector) -> Result<CensusRecord, CliError> {
    let g = genus_from_changemaker(sigma)?;
    let torsion = torsion_sequence(sigma)?;
    let exponents = TorsionSequence::new(torsion.clone())
        .ok()
        .map(|ts| exponents_from_torsion(&ts).exponents().to_vec());
    let facts = shape_facts(sigma)?;
    let t = |i: i64| torsion.get(i as usize).copied().unwrap_or(0);
    let applicable = g >= 3 && theorem1_applicable(g, t(g - 3), t(g - 2));
    let verified = match (applicable, facts.linear) {
        (true, Some(linear)) => Some(theorem1_conclusion(
            g,
            sigma.p(),
            linear,
            exponents.as_deref(),
        )),
        _ => None,
    };
    Ok(CensusRecord {
        schema: SCHEMA.to_string(),
        sigma: sigma.entries().to_vec(),
        n: sigma.rank(),
        p: sigma.p(),
        g,
        linear: facts.linear,
        torsion,
        exponents,
        classification: facts.classification,
        theorem1_applicable: applicable,
        theorem1_verified: verified,
        leading_ones: facts.leading_ones,
        claw: facts.claw,
        connected: facts.connected,
    })
}

impl Row for CensusRecord {
    fn csv_header() -> &'static [&'static str] {
        &[
            "schema",
            "sigma",
            "n",
            "p",
            "g",
            "linear_p",
            "linear_q",
            "torsion",
            "exponents",
            "classification",
            "theorem1_applicable",
            "theorem1_verified",
            "leading_ones",
            "claw",
            "connected",
        ]
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.schema.clone(),
            join(&self.sigma),
            self.n.to_string(),
            self.p.to_string(),
            self.g.to_string(),
            opt(self.linear.map(|l| l.p)),
            opt(self.linear.map(|l| l.q)),
            join(&self.torsion),
            self.exponents.as_deref().map(join).unwrap_or_default(),
            self.classification.as_str().to_string(),
            self.theorem1_applicable.to_string(),
            opt(self.theorem1_verified),
            opt(self.leading_ones),
            opt(self.claw),
            opt(self.connected),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummary {
    pub records: u64,
    pub counts: BTreeMap<String, u64>,
    pub lemma5_holds: bool,
    pub theorem1_holds: bool,
}

#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub max_rank: usize,
    /// Keep only records with this `sigma_n`.
    pub sigma_n: Option<i64>,
}

/// Runs the census over ranks `1..=max_rank` in lexicographic order per rank,
/// handing each record to `sink` as soon as it is built.
pub fn run_census(
    options: &CensusOptions,
    mut sink: impl FnMut(&CensusRecord) -> Result<(), CliError>,
) -> Result<CensusSummary, CliError> {
    if options.max_rank > CENSUS_CAPACITY {
        return Err(CliError::Capacity(format!(
            "census max rank {} exceeds capacity {CENSUS_CAPACITY}",
            options.max_rank
        )));
    }
    let mut summary = CensusSummary {
        records: 0,
        counts: Classification::ALL
            .iter()
            .map(|c| (c.as_str().to_string(), 0))
            .collect(),
        lemma5_holds: true,
        theorem1_holds: true,
    };
    for rank in 1..=options.max_rank {
        // sigma_n = v needs no entry above v
        let bound = options.sigma_n.unwrap_or(i64::MAX);
        for sigma in Changemakers::with_max_entry(rank, bound) {
            if options.sigma_n.is_some_and(|v| sigma.top() != v) {
                continue;
            }
            let record = census_record(&sigma)?;
            summary.records += 1;
            *summary
                .counts
                .get_mut(record.classification.as_str())
                .expect("all keys present") += 1;
            if record.lemma5_consistent() == Some(false) {
                summary.lemma5_holds = false;
            }
            if record.theorem1_applicable
                && (record.theorem1_verified == Some(false) || sigma.top() >= 3)
            {
                summary.theorem1_holds = false;
            }
            sink(&record)?;
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(s: &[i64]) -> ChangemakerVector {
        ChangemakerVector::new(s.to_vec()).unwrap()
    }

    #[test]
    fn records_for_small_vectors() {
        let r = census_record(&cm(&[1, 2, 2])).unwrap();
        assert_eq!((r.p, r.g, r.n), (9, 2, 2));
        assert_eq!(r.torsion, [1, 1, 0]);
        assert_eq!(r.exponents.as_deref(), Some(&[2, 1][..]));
        assert_eq!(r.linear, Some(LinearParams { p: 9, q: 2 }));
        assert_eq!(r.classification, Classification::Family12s);
        assert!(!r.theorem1_applicable);
        assert_eq!(r.theorem1_verified, None);

        let r = census_record(&cm(&[1, 1, 2])).unwrap();
        assert_eq!(r.classification, Classification::Decomposable);
        assert_eq!(r.linear, None);
        assert_eq!(r.lemma5_consistent(), Some(true));

        let r = census_record(&cm(&[1, 1, 1])).unwrap();
        assert_eq!(r.classification, Classification::Unknot);
        assert_eq!(r.linear, Some(LinearParams { p: 3, q: 2 }));
        assert_eq!(r.torsion, [0]);

        let r = census_record(&cm(&[1, 1, 3])).unwrap();
        assert_eq!(r.classification, Classification::SigmaNGe3);
        assert_eq!(r.linear, None);
        assert_eq!(r.torsion, [1, 1, 1, 0]);
    }

    #[test]
    fn theorem1_instances() {
        // (1, 2^[n]) has g = n; applicable once g >= 3
        let r = census_record(&cm(&[1, 2, 2, 2])).unwrap();
        assert_eq!(r.g, 3);
        assert!(r.theorem1_applicable);
        assert_eq!(r.theorem1_verified, Some(true));
        // (1, 1, 1, 2^[n-2]) has g = n - 2
        let r = census_record(&cm(&[1, 1, 1, 2, 2, 2, 2, 2])).unwrap();
        assert_eq!((r.g, r.p), (5, 23));
        assert!(r.theorem1_applicable);
        assert_eq!(r.theorem1_verified, Some(true));
        assert_eq!(r.linear, Some(LinearParams { p: 23, q: 17 }));
    }

    #[test]
    fn applicability_rule() {
        assert!(theorem1_applicable(3, 2, 1));
        assert!(!theorem1_applicable(3, 1, 1));
        assert!(!theorem1_applicable(2, 2, 1));
        assert!(!theorem1_applicable(4, 2, 2));
    }

    #[test]
    fn census_summary_small() {
        let mut seen = Vec::new();
        let summary = run_census(
            &CensusOptions {
                max_rank: 2,
                sigma_n: None,
            },
            |r| {
                seen.push(r.sigma.clone());
                Ok(())
            },
        )
        .unwrap();
        assert_eq!(summary.records, 8);
        assert_eq!(seen[..2], [vec![1, 1], vec![1, 2]]);
        assert_eq!(summary.counts.values().sum::<u64>(), 8);
        assert!(summary.lemma5_holds && summary.theorem1_holds);

        let summary = run_census(
            &CensusOptions {
                max_rank: 0,
                sigma_n: None,
            },
            |_| Ok(()),
        )
        .unwrap();
        assert_eq!(summary.records, 0);
        assert!(run_census(
            &CensusOptions {
                max_rank: 7,
                sigma_n: None
            },
            |_| Ok(())
        )
        .is_err());
    }

    #[test]
    fn record_json_round_trip() {
        let r = census_record(&cm(&[1, 1, 1, 2])).unwrap();
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.starts_with(r#"{"schema":"cmkit/1","sigma":[1,1,1,2]"#));
        let back: CensusRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        for c in Classification::ALL {
            assert_eq!(
                serde_json::to_string(&c).unwrap(),
                format!("\"{}\"", c.as_str())
            );
        }
    }
}
