//! JSON shapes of every file the tool writes. The aggregate artifact is
//! self-contained: `simulate` rebuilds the runnable system from it alone,
//! without the source model.

use fvn_aggregation::{
    AggregatedBlock, AggregatedNetwork, BlockQuotient, OutputBinding, ResidualNode, Source,
};
use fvn_assr::{Assr, Trans};
use fvn_netdsl::{parse_expr, Network, TransitionSystem};
use fvn_stp::{BooleanMatrix, CountMatrix, LogicalMatrix, MatrixJson, StochasticMatrix};
use serde::{Deserialize, Serialize};

pub fn trans_json(l: &Trans) -> MatrixJson {
    match l {
        Trans::Logical(m) => m.into(),
        Trans::Boolean(m) => m.into(),
    }
}

/// A compiled system. Name lists depend on the source kind: networks carry
/// `nodes`/`controls`/`outputs`, raw transition systems `states`/`inputs`/
/// `obs`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AssrJson {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    pub n_states: usize,
    pub m_inputs: usize,
    pub p_obs: usize,
    pub deterministic: bool,
    pub l: MatrixJson,
    pub h: MatrixJson,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub nodes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub controls: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub outputs: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub states: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub inputs: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub obs: Vec<String>,
}

impl AssrJson {
    pub fn from_net(net: &Network, assr: &Assr) -> Self {
        AssrJson {
            name: net.name.clone(),
            k: Some(net.k),
            n_states: assr.n_states,
            m_inputs: assr.m_inputs,
            p_obs: assr.p_obs,
            deterministic: assr.is_deterministic(),
            l: trans_json(&assr.l),
            h: (&assr.h).into(),
            nodes: net.nodes.iter().map(|n| n.name.clone()).collect(),
            controls: net.controls.clone(),
            outputs: net.outputs.iter().map(|o| o.name.clone()).collect(),
            states: Vec::new(),
            inputs: Vec::new(),
            obs: Vec::new(),
        }
    }

    pub fn from_ts(ts: &TransitionSystem, assr: &Assr) -> Self {
        AssrJson {
            name: ts.name.clone(),
            k: None,
            n_states: assr.n_states,
            m_inputs: assr.m_inputs,
            p_obs: assr.p_obs,
            deterministic: assr.is_deterministic(),
            l: trans_json(&assr.l),
            h: (&assr.h).into(),
            nodes: Vec::new(),
            controls: Vec::new(),
            outputs: Vec::new(),
            states: ts.states.clone(),
            inputs: ts.inputs.clone(),
            obs: ts.obs.clone(),
        }
    }
}

/// Quotient of a compiled system by its observation partition. `members`
/// lists the 1-based member states of every class, class order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuotientJson {
    pub name: String,
    pub classes: usize,
    pub inhabited: Vec<usize>,
    pub members: Vec<Vec<usize>>,
    pub deterministic: bool,
    pub original_deterministic: bool,
    pub l: MatrixJson,
    pub h: MatrixJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessJson {
    pub class: usize,
    pub state_a: usize,
    pub state_b: usize,
    pub input: usize,
    pub successor_class: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TraceJson {
    pub obs: Vec<usize>,
    pub inputs: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassRelationJson {
    pub class: usize,
    pub inclusion: bool,
    pub equality: bool,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub unsimulated: Vec<TraceJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub unrealizable: Vec<TraceJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LanguageJson {
    pub horizon: usize,
    pub inclusion: bool,
    pub equality: bool,
    pub classes: Vec<ClassRelationJson>,
}

/// Verdict of `check`: the one-step bisimulation test plus a bounded
/// language comparison as corroborating evidence.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckJson {
    pub name: String,
    pub bisimulation: bool,
    pub original_deterministic: bool,
    pub quotient_deterministic: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<WitnessJson>,
    pub language: LanguageJson,
}

/// Where a wired value is read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "from", rename_all = "lowercase")]
pub enum SourceJson {
    Control { index: usize },
    Residual { index: usize },
    Block { block: usize, digit: usize },
}

impl From<Source> for SourceJson {
    fn from(s: Source) -> Self {
        match s {
            Source::Control(index) => SourceJson::Control { index },
            Source::Residual(index) => SourceJson::Residual { index },
            Source::BlockOutput { block, digit } => SourceJson::Block { block, digit },
        }
    }
}

impl From<SourceJson> for Source {
    fn from(s: SourceJson) -> Self {
        match s {
            SourceJson::Control { index } => Source::Control(index),
            SourceJson::Residual { index } => Source::Residual(index),
            SourceJson::Block { block, digit } => Source::BlockOutput { block, digit },
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AggBlockJson {
    pub name: String,
    pub members: Vec<String>,
    pub declared: Vec<String>,
    pub inputs: Vec<String>,
    pub controls: Vec<usize>,
    pub wires: Vec<SourceJson>,
    pub n_states: usize,
    pub m_inputs: usize,
    pub p_obs: usize,
    pub deterministic: bool,
    pub l: MatrixJson,
    pub h: MatrixJson,
    pub count: MatrixJson,
    pub quotient: MatrixJson,
    pub prob: MatrixJson,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ResidualJson {
    pub name: String,
    pub update: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BindingJson {
    pub name: String,
    pub source: SourceJson,
}

/// A full aggregated network, runnable on its own.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AggJson {
    pub name: String,
    pub k: usize,
    pub controls: Vec<String>,
    pub blocks: Vec<AggBlockJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub residual: Vec<ResidualJson>,
    pub outputs: Vec<BindingJson>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub warnings: Vec<String>,
}

impl AggJson {
    pub fn from_aggregate(name: &str, agg: &AggregatedNetwork) -> Self {
        AggJson {
            name: name.to_string(),
            k: agg.k,
            controls: agg.controls.clone(),
            blocks: agg.blocks.iter().map(block_json).collect(),
            residual: agg
                .residual
                .iter()
                .map(|r| ResidualJson { name: r.name.clone(), update: r.update.to_string() })
                .collect(),
            outputs: agg
                .outputs
                .iter()
                .map(|o| BindingJson { name: o.name.clone(), source: o.source.into() })
                .collect(),
            warnings: agg.warnings.clone(),
        }
    }

    /// Rebuild the runnable aggregate, validating everything `simulate`
    /// relies on so a mangled artifact fails here instead of mid-run.
    pub fn into_aggregate(self) -> Result<(String, AggregatedNetwork), String> {
        if self.k < 2 {
            return Err(format!("k must be at least 2, got {}", self.k));
        }
        let n_blocks = self.blocks.len();
        let n_residual = self.residual.len();
        let declared_len: Vec<usize> = self.blocks.iter().map(|b| b.declared.len()).collect();
        let check_source = |owner: &str, s: SourceJson| -> Result<(), String> {
            match s {
                SourceJson::Control { index } if index < self.controls.len() => Ok(()),
                SourceJson::Residual { index } if index < n_residual => Ok(()),
                SourceJson::Block { block, digit }
                    if block < n_blocks && digit < declared_len[block] =>
                {
                    Ok(())
                }
                other => Err(format!("{owner} reads out-of-range source {other:?}")),
            }
        };

        let mut blocks = Vec::with_capacity(n_blocks);
        for b in self.blocks {
            let who = format!("block `{}`", b.name);
            if b.wires.len() != b.inputs.len() {
                return Err(format!("{who} has {} inputs but {} wires", b.inputs.len(), b.wires.len()));
            }
            for &cj in &b.controls {
                if cj >= self.controls.len() {
                    return Err(format!("{who} reads out-of-range control {cj}"));
                }
            }
            for &w in &b.wires {
                check_source(&who, w)?;
            }
            let xi = checked_power(self.k, b.declared.len())
                .ok_or_else(|| format!("{who} declares too many outputs"))?;
            let eta = checked_power(self.k, b.controls.len() + b.wires.len())
                .and_then(|f| f.checked_mul(xi))
                .ok_or_else(|| format!("{who} has too many inputs"))?;

            let l = match b.l {
                MatrixJson::Logical { rows, cols } => Trans::Logical(
                    LogicalMatrix::new(rows, cols).map_err(|e| format!("{who}: {e}"))?,
                ),
                MatrixJson::Boolean { rows, cols } => Trans::Boolean(
                    BooleanMatrix::from_col_sets(rows, &cols).map_err(|e| format!("{who}: {e}"))?,
                ),
                other => {
                    return Err(format!(
                        "{who}: transition matrix is {}, not logical or boolean",
                        other.kind()
                    ))
                }
            };
            let h = LogicalMatrix::try_from(b.h).map_err(|e| format!("{who}: {e}"))?;
            let assr = Assr::new(b.n_states, b.m_inputs, b.p_obs, l, h)
                .map_err(|e| format!("{who}: {e}"))?;

            let count = CountMatrix::try_from(b.count).map_err(|e| format!("{who}: {e}"))?;
            let boolean_sim =
                BooleanMatrix::try_from(b.quotient).map_err(|e| format!("{who}: {e}"))?;
            let prob = StochasticMatrix::try_from(b.prob).map_err(|e| format!("{who}: {e}"))?;
            for (kind, rows, cols) in [
                ("count", count.rows(), count.ncols()),
                ("quotient", boolean_sim.rows(), boolean_sim.ncols()),
                ("probability", prob.rows(), prob.ncols()),
            ] {
                if (rows, cols) != (xi, eta) {
                    return Err(format!(
                        "{who}: {kind} matrix is {rows}x{cols}, the wiring needs {xi}x{eta}"
                    ));
                }
            }

            blocks.push(AggregatedBlock {
                name: b.name,
                members: b.members,
                declared: b.declared,
                inputs: b.inputs,
                controls: b.controls,
                wires: b.wires.into_iter().map(Source::from).collect(),
                assr,
                quotient: BlockQuotient { count, boolean_sim, prob, deterministic: b.deterministic },
            });
        }

        let mut residual = Vec::with_capacity(n_residual);
        for r in &self.residual {
            let update = parse_expr(&r.update)
                .map_err(|e| format!("residual node `{}`: {e}", r.name))?;
            residual.push(ResidualNode { name: r.name.clone(), update });
        }

        let mut outputs = Vec::with_capacity(self.outputs.len());
        for o in self.outputs {
            let who = format!("output `{}`", o.name);
            if let SourceJson::Control { .. } = o.source {
                return Err(format!("{who} reads a control; outputs may only read state"));
            }
            check_source(&who, o.source)?;
            outputs.push(OutputBinding { name: o.name, source: o.source.into() });
        }

        let agg = AggregatedNetwork {
            k: self.k,
            controls: self.controls,
            blocks,
            residual,
            outputs,
            warnings: self.warnings,
        };
        for r in &agg.residual {
            for v in r.update.var_set() {
                if agg.source_of_name(v).is_none() {
                    return Err(format!(
                        "residual node `{}` reads `{v}`, which nothing provides", r.name
                    ));
                }
            }
        }
        Ok((self.name, agg))
    }
}

fn block_json(b: &AggregatedBlock) -> AggBlockJson {
    AggBlockJson {
        name: b.name.clone(),
        members: b.members.clone(),
        declared: b.declared.clone(),
        inputs: b.inputs.clone(),
        controls: b.controls.clone(),
        wires: b.wires.iter().map(|&w| w.into()).collect(),
        n_states: b.assr.n_states,
        m_inputs: b.assr.m_inputs,
        p_obs: b.assr.p_obs,
        deterministic: b.quotient.deterministic,
        l: trans_json(&b.assr.l),
        h: (&b.assr.h).into(),
        count: (&b.quotient.count).into(),
        quotient: (&b.quotient.boolean_sim).into(),
        prob: (&b.quotient.prob).into(),
    }
}

fn checked_power(base: usize, exp: usize) -> Option<usize> {
    let exp = u32::try_from(exp).ok()?;
    base.checked_pow(exp)
}

/// One simulation of an aggregated system. `words` holds every branch in
/// nondeterministic mode, the single sampled word in probabilistic mode.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunJson {
    pub name: String,
    pub mode: String,
    pub inputs: Vec<usize>,
    pub init_classes: Vec<usize>,
    pub init_residual: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub cap: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub capped: Option<bool>,
    pub words: Vec<Vec<Vec<usize>>>,
}
