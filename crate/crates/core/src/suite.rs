//! Runs a selection of checks for one value of `m`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::elimination::{check_step1_bounds, check_step2, check_step3, check_step5};
use crate::lemma_engine::{check_lemma8, check_lemma9, Lemma8Options};
use crate::qpoly::{expand_product, poly_equal, FactoredExpr, NamedFactor::*, QPoly};
use crate::ree_data::{character_table, fixed_maximal_subgroups, IndexFormula, ReeInstance, ROW_COUNT};
use crate::report::{VerificationReport as R, Witness};
use crate::witness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CheckSelection {
    Lemma8,
    Lemma9,
    Step1,
    Step2,
    Step3,
    Step5,
    TableIntegrity,
}

impl CheckSelection {
    pub const ALL: [CheckSelection; 7] = [
        CheckSelection::Lemma8,
        CheckSelection::Lemma9,
        CheckSelection::Step1,
        CheckSelection::Step2,
        CheckSelection::Step3,
        CheckSelection::Step5,
        CheckSelection::TableIntegrity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckSelection::Lemma8 => "lemma8",
            CheckSelection::Lemma9 => "lemma9",
            CheckSelection::Step1 => "step1",
            CheckSelection::Step2 => "step2",
            CheckSelection::Step3 => "step3",
            CheckSelection::Step5 => "step5",
            CheckSelection::TableIntegrity => "table-integrity",
        }
    }

    /// Parses a comma-separated list; `all` expands to every check.
    pub fn parse_list(s: &str) -> Result<Vec<CheckSelection>, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            if part == "all" {
                out.extend(Self::ALL);
            } else {
                out.push(part.parse()?);
            }
        }
        out.sort();
        out.dedup();
        if out.is_empty() {
            return Err("empty check selection".into());
        }
        Ok(out)
    }
}

impl FromStr for CheckSelection {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL.into_iter().find(|c| c.name() == s).ok_or_else(|| format!("unknown check '{s}'"))
    }
}

impl fmt::Display for CheckSelection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteOptions {
    pub exhaustive: bool,
    pub n_max: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        Self { exhaustive: false, n_max: 10_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MReport {
    #[serde(with = "m_as_string")]
    pub m: u32,
    pub checks: Vec<R>,
}

impl MReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(R::is_pass)
    }
}

mod m_as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(m: &u32, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&m.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u32, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

fn identity(id: &str, lhs: QPoly, rhs: QPoly) -> R {
    let ok = poly_equal(&lhs, &rhs);
    R::check(id, ok, witness!("lhs" => lhs, "rhs" => rhs))
}

/// Structural checks of the compiled-in tables at `m`.
pub fn table_integrity(m: u32, inst: &Result<ReeInstance, crate::Error>) -> R {
    let id = "table-integrity";
    let q2m1 = QPoly::from_ints(&[-1, 0, 1]);
    let mut children = vec![
        R::check(
            format!("{id}.row-count"),
            character_table().len() == ROW_COUNT,
            witness!("rows" => character_table().len()),
        ),
        identity(&format!("{id}.phi1-phi2"), expand_product(&[Phi1, Phi2]), q2m1),
        identity(&format!("{id}.u1-u2"), expand_product(&[U1, U2]), Phi8.poly()),
        identity(&format!("{id}.w1-w2"), expand_product(&[W1, W2]), Phi24.poly()),
    ];
    let fixed = fixed_maximal_subgroups();
    let index_poly = |i: usize| match &fixed[i].index {
        IndexFormula::Expr(e) => e.expand(),
        IndexFormula::Subfield { .. } => QPoly::zero(),
    };
    children.push(identity(
        &format!("{id}.pa-index"),
        index_poly(0),
        FactoredExpr::one().times(Phi4).with(Phi8, 2).times(Phi12).times(Phi24).expand(),
    ));
    children.push(identity(
        &format!("{id}.pb-index"),
        index_poly(1),
        FactoredExpr::one().with(Phi4, 2).times(Phi8).times(Phi12).times(Phi24).expand(),
    ));

    match inst {
        Err(e) => children.push(R::fail(format!("{id}.multiplicities"), witness!("m" => m, "error" => e))),
        Ok(inst) => {
            children.push(R::pass(format!("{id}.multiplicities")).with("rows", inst.rows().len()));
            let sum = inst.multiplicity_weighted_square_sum();
            children.push(R::check(
                format!("{id}.square-sum"),
                &sum == inst.order(),
                witness!("sum" => &sum, "order" => inst.order()),
            ));
            children.push(match inst.maximal_subgroup_indices() {
                Err(e) => R::fail(format!("{id}.indices-divide-order"), witness!("error" => e)),
                Ok(idx) => match idx.iter().find(|(_, i)| !(inst.order() % i).is_zero()) {
                    Some((name, i)) => {
                        R::fail(format!("{id}.indices-divide-order"), witness!("subgroup" => name, "index" => i))
                    }
                    None => R::pass(format!("{id}.indices-divide-order")).with("subgroups", idx.len()),
                },
            });
            let prod = U1.evaluate(m) * U2.evaluate(m);
            children.push(R::check(
                format!("{id}.u1-u2-value"),
                prod == Phi8.evaluate(m),
                witness!("u1u2" => prod, "phi8" => Phi8.evaluate(m)),
            ));
        }
    }
    R::group(id, children)
}

/// Runs `selection` at `m`; the reports are ordered by check id.
pub fn run_for_m(m: u32, selection: &[CheckSelection], opts: SuiteOptions) -> MReport {
    let inst = ReeInstance::new(m);
    let mut checks: Vec<R> = selection
        .iter()
        .map(|&c| match (c, &inst) {
            (CheckSelection::TableIntegrity, _) => table_integrity(m, &inst),
            (CheckSelection::Step5, _) => check_step5(m),
            (_, Err(e)) => {
                let mut w = Witness::new();
                w.insert("error".into(), e.to_string());
                R::fail(c.name(), w)
            }
            (CheckSelection::Lemma8, Ok(i)) => check_lemma8(i, Lemma8Options { exhaustive: opts.exhaustive }),
            (CheckSelection::Lemma9, Ok(i)) => check_lemma9(i),
            (CheckSelection::Step1, Ok(i)) => check_step1_bounds(i),
            (CheckSelection::Step2, Ok(i)) => check_step2(i, opts.n_max),
            (CheckSelection::Step3, Ok(i)) => check_step3(i),
        })
        .collect();
    checks.sort_by(|a, b| a.id.cmp(&b.id));
    MReport { m, checks }
}
