//! Exhaustive checks of the two lemmas and the main theorem over all
//! changemakers up to a given rank.
//!
//! The enumeration is streamed through [`Changemakers::advance`] with one
//! reused [`TorsionScanner`], so nothing proportional to the number of vectors
//! is ever held in memory.

use cmkit_core::{
    exponents_from_torsion, lemma4_witness, torsion_sequence, ChangemakerVector, Changemakers,
    TorsionScanner, TorsionSequence,
};
use serde::{Deserialize, Serialize};

use crate::census::{shape_facts, theorem1_applicable, theorem1_conclusion, LinearParams};
use crate::output::{join, opt, Row};
use crate::{CliError, SCHEMA, VERIFY_CAPACITY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statement {
    Lemma4,
    Lemma5,
    Theorem1,
}

impl Statement {
    pub fn as_str(self) -> &'static str {
        match self {
            Statement::Lemma4 => "lemma4",
            Statement::Lemma5 => "lemma5",
            Statement::Theorem1 => "theorem1",
        }
    }
}

/// One checked vector. Fields that do not apply to the statement are omitted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub schema: String,
    pub statement: Statement,
    pub sigma: Vec<i64>,
    pub p: i64,
    pub g: i64,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_level: Option<u64>,
    /// `p + <c, sigma>` for the witness `c`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_offset: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_g_minus_3: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_g_minus_2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leading_ones: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub claw: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connected: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear_complement: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub linear: Option<LinearParams>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl Instance {
    fn new(statement: Statement, sigma: &[i64], p: i64, g: i64) -> Self {
        Instance {
            schema: SCHEMA.to_string(),
            statement,
            sigma: sigma.to_vec(),
            p,
            g,
            holds: true,
            witness: None,
            witness_level: None,
            witness_offset: None,
            t_g_minus_3: None,
            t_g_minus_2: None,
            leading_ones: None,
            claw: None,
            connected: None,
            linear_complement: None,
            linear: None,
            exponents: None,
            failure: None,
        }
    }

    fn fail(&mut self, reason: impl Into<String>) {
        self.holds = false;
        self.failure.get_or_insert_with(|| reason.into());
    }
}

impl Row for Instance {
    fn csv_header() -> &'static [&'static str] {
        &[
            "schema",
            "statement",
            "sigma",
            "p",
            "g",
            "holds",
            "witness",
            "witness_level",
            "witness_offset",
            "t_g_minus_3",
            "t_g_minus_2",
            "leading_ones",
            "claw",
            "connected",
            "linear_complement",
            "linear_p",
            "linear_q",
            "exponents",
            "failure",
        ]
    }

    fn csv_fields(&self) -> Vec<String> {
        vec![
            self.schema.clone(),
            self.statement.as_str().to_string(),
            join(&self.sigma),
            self.p.to_string(),
            self.g.to_string(),
            self.holds.to_string(),
            self.witness.as_deref().map(join).unwrap_or_default(),
            opt(self.witness_level),
            opt(self.witness_offset),
            opt(self.t_g_minus_3),
            opt(self.t_g_minus_2),
            opt(self.leading_ones),
            opt(self.claw),
            opt(self.connected),
            opt(self.linear_complement),
            opt(self.linear.map(|l| l.p)),
            opt(self.linear.map(|l| l.q)),
            self.exponents.as_deref().map(join).unwrap_or_default(),
            self.failure.clone().unwrap_or_default(),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummary {
    pub statement: Statement,
    pub max_rank: usize,
    /// Changemakers visited.
    pub enumerated: u64,
    /// Vectors the statement actually constrains.
    pub checked: u64,
    pub counterexamples: u64,
    pub holds: bool,
}

/// Runs `statement` over ranks `1..=max_rank`.
///
/// Every checked instance is handed to `sink` when `report_passing` is set;
/// counterexamples always are.
pub fn run_verify(
    statement: Statement,
    max_rank: usize,
    report_passing: bool,
    mut sink: impl FnMut(&Instance) -> Result<(), CliError>,
) -> Result<VerifySummary, CliError> {
    if max_rank > VERIFY_CAPACITY {
        return Err(CliError::Capacity(format!(
            "verify max rank {max_rank} exceeds capacity {VERIFY_CAPACITY}"
        )));
    }
    let mut summary = VerifySummary {
        statement,
        max_rank,
        enumerated: 0,
        checked: 0,
        counterexamples: 0,
        holds: true,
    };
    let mut scanner = TorsionScanner::default();
    // lemma 5 only concerns sigma_n = 2
    let max_entry = if statement == Statement::Lemma5 {
        2
    } else {
        i64::MAX
    };
    for rank in 1..=max_rank {
        let mut vectors = Changemakers::with_max_entry(rank, max_entry);
        while let Some(sigma) = vectors.advance() {
            summary.enumerated += 1;
            let instance = match statement {
                Statement::Lemma4 => check_lemma4(sigma, &mut scanner, report_passing)?,
                Statement::Lemma5 => check_lemma5(sigma)?,
                Statement::Theorem1 => check_theorem1(sigma, &mut scanner)?,
            };
            let Some(instance) = instance else { continue };
            summary.checked += 1;
            if !instance.holds {
                summary.counterexamples += 1;
                summary.holds = false;
            }
            if report_passing || !instance.holds {
                sink(&instance)?;
            }
        }
    }
    Ok(summary)
}

fn genus(sigma: &[i64]) -> (i64, i64) {
    let p: i64 = sigma.iter().map(|s| s * s).sum();
    let one: i64 = sigma.iter().sum();
    (p, (p - one) / 2)
}

/// For `sigma` with an entry `>= 3`: the witness is a level-one characteristic
/// covector with `p + <c, sigma> = 2g - 6`, and `t_{g-3} <= 1` on its own.
fn check_lemma4(
    sigma: &[i64],
    scanner: &mut TorsionScanner,
    report_passing: bool,
) -> Result<Option<Instance>, CliError> {
    if *sigma.last().expect("non-empty") < 3 {
        return Ok(None);
    }
    let (p, g) = genus(sigma);
    let mut offset = None;
    let mut level = None;
    let mut coords = None;
    let mut failure = None;
    match ChangemakerVector::new(sigma.to_vec())
        .map_err(CliError::from)
        .and_then(|cm| lemma4_witness(&cm).map_err(CliError::from))
    {
        Ok(c) => {
            let dot: i64 = c.coords().iter().zip(sigma).map(|(a, b)| a * b).sum();
            // the pairing is negative definite: <c, sigma> = -sum c_i sigma_i
            let off = p - dot;
            if c.level() != 1 {
                failure = Some(format!("witness level {} != 1", c.level()));
            } else if off != 2 * g - 6 {
                failure = Some(format!("p + <c, sigma> = {off} != 2g - 6 = {}", 2 * g - 6));
            }
            offset = Some(off);
            level = Some(c.level());
            coords = Some(c.coords().to_vec());
        }
        Err(e) => failure = Some(format!("no witness: {e}")),
    }
    scanner.reset(sigma)?;
    let t = scanner.torsion(g - 3)? as i64;
    if t > 1 && failure.is_none() {
        failure = Some(format!("t_(g-3) = {t} > 1"));
    }
    if failure.is_none() && !report_passing {
        return Ok(Some(Instance::new(Statement::Lemma4, sigma, p, g)));
    }
    let mut inst = Instance::new(Statement::Lemma4, sigma, p, g);
    inst.witness = coords;
    inst.witness_level = level;
    inst.witness_offset = offset;
    inst.t_g_minus_3 = Some(t);
    if let Some(f) = failure {
        inst.fail(f);
    }
    Ok(Some(inst))
}

/// For `sigma = 1^k 2^(n+1-k)`: linear iff `k` is 1 or 3, a claw iff `k >= 4`,
/// disconnected iff `k = 2`.
fn check_lemma5(sigma: &[i64]) -> Result<Option<Instance>, CliError> {
    if *sigma.last().expect("non-empty") != 2 {
        return Ok(None);
    }
    let (p, g) = genus(sigma);
    let cm = ChangemakerVector::new(sigma.to_vec())?;
    let facts = shape_facts(&cm)?;
    let k = facts.leading_ones.expect("sigma_n = 2");
    let claw = facts.claw.expect("sigma_n = 2");
    let connected = facts.connected.expect("sigma_n = 2");
    let mut inst = Instance::new(Statement::Lemma5, sigma, p, g);
    inst.leading_ones = Some(k);
    inst.claw = Some(claw);
    inst.connected = Some(connected);
    inst.linear_complement = Some(facts.linear.is_some());
    inst.linear = facts.linear;
    let family = k == 1 || k == 3;
    if facts.linear.is_some() != family {
        inst.fail(format!(
            "linear complement = {} with k = {k}",
            facts.linear.is_some()
        ));
    }
    if claw != (k >= 4) {
        inst.fail(format!("claw = {claw} with k = {k}"));
    }
    if connected == (k == 2) {
        inst.fail(format!("connected = {connected} with k = {k}"));
    }
    Ok(Some(inst))
}

/// Hypothesis instances are vectors with `t_{g-2} = 1` and `t_{g-3} >= 2`
/// whose complement is linear; each must carry the torus-knot exponents of
/// genus `g` and one of the two lens spaces.
fn check_theorem1(
    sigma: &[i64],
    scanner: &mut TorsionScanner,
) -> Result<Option<Instance>, CliError> {
    let (p, g) = genus(sigma);
    if g < 3 {
        return Ok(None);
    }
    scanner.reset(sigma)?;
    let t3 = scanner.torsion(g - 3)? as i64;
    if t3 < 2 {
        return Ok(None);
    }
    let t2 = scanner.torsion(g - 2)? as i64;
    if !theorem1_applicable(g, t3, t2) {
        return Ok(None);
    }
    let mut inst = Instance::new(Statement::Theorem1, sigma, p, g);
    inst.t_g_minus_3 = Some(t3);
    inst.t_g_minus_2 = Some(t2);
    if *sigma.last().expect("non-empty") != 2 {
        // excluded by lemma 4, so reaching this is a failure of the chain of results
        inst.fail("hypothesis met with sigma_n >= 3");
        return Ok(Some(inst));
    }
    let cm = ChangemakerVector::new(sigma.to_vec())?;
    let facts = shape_facts(&cm)?;
    let Some(linear) = facts.linear else {
        return Ok(None);
    };
    inst.linear_complement = Some(true);
    inst.linear = Some(linear);
    let torsion = torsion_sequence(&cm)?;
    let exponents = TorsionSequence::new(torsion)
        .ok()
        .map(|ts| exponents_from_torsion(&ts).exponents().to_vec());
    if !theorem1_conclusion(g, p, linear, exponents.as_deref()) {
        inst.fail(format!(
            "conclusion fails: exponents {exponents:?}, lens space ({}, {})",
            linear.p, linear.q
        ));
    }
    inst.exponents = exponents;
    Ok(Some(inst))
}
