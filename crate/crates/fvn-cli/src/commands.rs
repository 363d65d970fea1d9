use crate::artifact::{
    AggJson, AssrJson, CheckJson, ClassRelationJson, LanguageJson, QuotientJson, RunJson,
    TraceJson, WitnessJson,
};
use crate::error::CliError;
use crate::model::{load_model, size_cap, stem, Model};
use crate::{Mode, SimulateArgs};
use fvn_aggregation::{assemble_aggregated_capped, simulate_nondet, simulate_prob, AggState};
use fvn_assr::{compile_network_capped, compile_raw_ts, Assr};
use fvn_netdsl::{NetworkGraph, TransitionSystem};
use fvn_stp::MatrixJson;
use fvn_transition::{check_bisimulation, check_language_relation, OutputPartition, Verdict};
use serde::Serialize;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

struct Compiled {
    name: String,
    json: AssrJson,
    assr: Assr,
}

fn load_compiled(path: &Path) -> Result<Compiled, CliError> {
    match load_model(path)? {
        Model::Net(net) => {
            let assr = compile_network_capped(&net, size_cap()?)?;
            let json = AssrJson::from_net(&net, &assr);
            Ok(Compiled { name: net.name, json, assr })
        }
        Model::Ts(ts) => {
            let assr = compile_raw_ts(&ts);
            let json = AssrJson::from_ts(&ts, &assr);
            Ok(Compiled { name: ts.name, json, assr })
        }
    }
}

fn det_word(deterministic: bool) -> &'static str {
    if deterministic {
        "deterministic"
    } else {
        "nondeterministic"
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn write_text(dir: &Path, file: String, text: &str) -> Result<PathBuf, CliError> {
    std::fs::create_dir_all(dir)
        .map_err(|source| CliError::Write { path: dir.to_path_buf(), source })?;
    let path = dir.join(file);
    std::fs::write(&path, text).map_err(|source| CliError::Write { path: path.clone(), source })?;
    Ok(path)
}

fn write_artifact<T: Serialize>(dir: &Path, file: String, value: &T) -> Result<PathBuf, CliError> {
    let mut s = serde_json::to_string_pretty(value).expect("artifacts always serialize");
    s.push('\n');
    write_text(dir, file, &s)
}

pub fn compile(model_path: &Path, out_dir: &Path) -> Result<(), CliError> {
    let c = load_compiled(model_path)?;
    println!(
        "{}: {} states, {} inputs, {} observations, {}",
        c.name,
        c.assr.n_states,
        c.assr.m_inputs,
        c.assr.p_obs,
        det_word(c.assr.is_deterministic())
    );
    let path = write_artifact(out_dir, format!("{}.assr.json", stem(model_path)), &c.json)?;
    println!("wrote {}", path.display());
    Ok(())
}

pub fn quotient(model_path: &Path, out_dir: &Path) -> Result<(), CliError> {
    let c = load_compiled(model_path)?;
    let q = fvn_transition::quotient(&c.assr);
    let part = OutputPartition::from_h(&c.assr.h);
    let inhabited: Vec<usize> = part.inhabited().collect();
    println!(
        "{}: {} classes ({} inhabited), quotient {}",
        c.name,
        c.assr.p_obs,
        inhabited.len(),
        det_word(q.is_deterministic())
    );
    let json = QuotientJson {
        name: c.name,
        classes: c.assr.p_obs,
        inhabited,
        members: (1..=part.n_classes()).map(|cl| part.members(cl).to_vec()).collect(),
        deterministic: q.is_deterministic(),
        original_deterministic: c.assr.is_deterministic(),
        l: crate::artifact::trans_json(&q.l),
        h: (&q.h).into(),
    };
    let path = write_artifact(out_dir, format!("{}.quotient.json", stem(model_path)), &json)?;
    println!("wrote {}", path.display());
    Ok(())
}

pub fn check(model_path: &Path, horizon: usize, out_dir: &Path) -> Result<(), CliError> {
    let c = load_compiled(model_path)?;
    let report = check_bisimulation(&c.assr);
    let lang = check_language_relation(&c.assr, horizon);
    match report.verdict {
        Verdict::Bisimulation => println!("{}: bisimulation", c.name),
        Verdict::NotBisimulation => {
            println!("{}: simulation only", c.name);
            if let Some(w) = &report.witness {
                println!(
                    "witness: class {} states {} and {} split under input {} at class {}",
                    w.class, w.state_a, w.state_b, w.input, w.successor_class
                );
            }
        }
    }
    println!(
        "language at horizon {}: inclusion {}, equality {}",
        horizon,
        yes_no(lang.inclusion),
        yes_no(lang.equality)
    );
    let trace = |t: &fvn_transition::Trace| TraceJson { obs: t.obs.clone(), inputs: t.inputs.clone() };
    let json = CheckJson {
        name: c.name,
        bisimulation: report.verdict == Verdict::Bisimulation,
        original_deterministic: report.original_deterministic,
        quotient_deterministic: report.quotient_deterministic,
        witness: report.witness.map(|w| WitnessJson {
            class: w.class,
            state_a: w.state_a,
            state_b: w.state_b,
            input: w.input,
            successor_class: w.successor_class,
        }),
        language: LanguageJson {
            horizon: lang.horizon,
            inclusion: lang.inclusion,
            equality: lang.equality,
            classes: lang
                .classes
                .iter()
                .map(|cl| ClassRelationJson {
                    class: cl.class,
                    inclusion: cl.inclusion,
                    equality: cl.equality,
                    unsimulated: cl.unsimulated.iter().map(trace).collect(),
                    unrealizable: cl.unrealizable.iter().map(trace).collect(),
                })
                .collect(),
        },
    };
    let path = write_artifact(out_dir, format!("{}.check.json", stem(model_path)), &json)?;
    println!("wrote {}", path.display());
    Ok(())
}

pub fn aggregate(model_path: &Path, out_dir: &Path) -> Result<(), CliError> {
    let net = match load_model(model_path)? {
        Model::Net(net) => net,
        Model::Ts(_) => {
            return Err(CliError::NotANetwork {
                path: model_path.to_path_buf(),
                command: "aggregate",
            })
        }
    };
    if net.blocks.is_empty() {
        return Err(CliError::NoBlocks { name: net.name });
    }
    let agg = assemble_aggregated_capped(&net, &net.blocks, size_cap()?)?;
    for w in &agg.warnings {
        eprintln!("warning: {w}");
    }
    println!(
        "{}: {} blocks, {} state nodes, {} controls, {} wires, {} residual nodes",
        net.name,
        agg.blocks.len(),
        agg.n_state_nodes(),
        agg.controls.len(),
        agg.n_wires(),
        agg.residual.len()
    );
    let s = stem(model_path);
    for b in &agg.blocks {
        println!(
            "block {}: {} members -> {} classes, {}",
            b.name,
            b.members.len(),
            b.n_classes(agg.k),
            det_word(b.quotient.deterministic)
        );
        let controls: Vec<String> = b
            .controls
            .iter()
            .map(|&j| agg.controls[j].clone())
            .chain(b.inputs.iter().cloned())
            .collect();
        let block_assr = AssrJson {
            name: b.name.clone(),
            k: Some(agg.k),
            n_states: b.assr.n_states,
            m_inputs: b.assr.m_inputs,
            p_obs: b.assr.p_obs,
            deterministic: b.assr.is_deterministic(),
            l: crate::artifact::trans_json(&b.assr.l),
            h: (&b.assr.h).into(),
            nodes: b.members.clone(),
            controls,
            outputs: b.declared.clone(),
            states: Vec::new(),
            inputs: Vec::new(),
            obs: Vec::new(),
        };
        let paths = [
            write_artifact(out_dir, format!("{s}.{}.assr.json", b.name), &block_assr)?,
            write_artifact(
                out_dir,
                format!("{s}.{}.count.json", b.name),
                &MatrixJson::from(&b.quotient.count),
            )?,
            write_artifact(
                out_dir,
                format!("{s}.{}.quotient.json", b.name),
                &MatrixJson::from(&b.quotient.boolean_sim),
            )?,
            write_artifact(
                out_dir,
                format!("{s}.{}.prob.json", b.name),
                &MatrixJson::from(&b.quotient.prob),
            )?,
        ];
        let mut line = String::from("wrote");
        for p in &paths {
            let _ = write!(line, " {}", p.display());
        }
        println!("{line}");
    }
    let path = write_artifact(out_dir, format!("{s}.agg.json"), &AggJson::from_aggregate(&net.name, &agg))?;
    println!("wrote {}", path.display());
    let path = write_text(out_dir, format!("{s}.blocks.dot"), &agg.to_dot())?;
    println!("wrote {}", path.display());
    Ok(())
}

pub fn simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let path = &args.aggregate;
    let src = std::fs::read_to_string(path)
        .map_err(|source| CliError::Read { path: path.clone(), source })?;
    let json: AggJson = serde_json::from_str(&src)
        .map_err(|e| CliError::BadAggregate { path: path.clone(), why: e.to_string() })?;
    let (name, agg) = json
        .into_aggregate()
        .map_err(|why| CliError::BadAggregate { path: path.clone(), why })?;

    let inputs = args.inputs.clone().unwrap_or_else(|| vec![1; args.horizon]);
    let init = match &args.init {
        Some(v) => {
            let need = agg.blocks.len() + agg.residual.len();
            if v.len() != need {
                return Err(CliError::BadArg(format!(
                    "--init needs {need} values ({} block classes, then {} residual levels), got {}",
                    agg.blocks.len(),
                    agg.residual.len(),
                    v.len()
                )));
            }
            AggState {
                classes: v[..agg.blocks.len()].to_vec(),
                residual: v[agg.blocks.len()..].to_vec(),
            }
        }
        None => AggState {
            classes: vec![1; agg.blocks.len()],
            residual: vec![1; agg.residual.len()],
        },
    };

    let file_stem = stem(path);
    let run_stem = file_stem.strip_suffix(".agg").unwrap_or(&file_stem).to_string();
    let json = match args.mode {
        Mode::Nondet => {
            let run = simulate_nondet(&agg, &inputs, &init, args.cap)?;
            println!(
                "{name}: {} words over {} steps{}",
                run.words.len(),
                inputs.len(),
                if run.capped { " (branch cap hit)" } else { "" }
            );
            RunJson {
                name,
                mode: "nondet".to_string(),
                inputs,
                init_classes: init.classes,
                init_residual: init.residual,
                seed: None,
                cap: Some(args.cap),
                capped: Some(run.capped),
                words: run.words,
            }
        }
        Mode::Prob => {
            let word = simulate_prob(&agg, &inputs, &init, args.seed)?;
            println!("{name}: sampled word over {} steps (seed {})", inputs.len(), args.seed);
            println!("{}", format_word(&word));
            RunJson {
                name,
                mode: "prob".to_string(),
                inputs,
                init_classes: init.classes,
                init_residual: init.residual,
                seed: Some(args.seed),
                cap: None,
                capped: None,
                words: vec![word],
            }
        }
    };
    let path = write_artifact(&args.out_dir, format!("{run_stem}.run.json"), &json)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn format_word(word: &[Vec<usize>]) -> String {
    let tuples: Vec<String> = word
        .iter()
        .map(|t| t.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
        .collect();
    tuples.join(" | ")
}

pub fn export_dot(model_path: &Path, out_dir: &Path) -> Result<(), CliError> {
    let dot = match load_model(model_path)? {
        Model::Net(net) => NetworkGraph::build(&net).to_dot(&net),
        Model::Ts(ts) => ts_dot(&ts),
    };
    let path = write_text(out_dir, format!("{}.dot", stem(model_path)), &dot)?;
    println!("wrote {}", path.display());
    Ok(())
}

/// States as "name | observation" nodes, one edge per transition, labeled by
/// input for controlled systems.
fn ts_dot(ts: &TransitionSystem) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph {} {{", ts.name);
    let _ = writeln!(s, "  rankdir=LR;");
    for (i, st) in ts.states.iter().enumerate() {
        let _ = writeln!(s, "  s{i} [label=\"{st} | {}\"];", ts.obs[ts.labels[i]]);
    }
    for slot in 0..ts.n_input_slots() {
        for (i, succs) in ts.trans[slot].iter().enumerate() {
            for &t in succs {
                if ts.is_autonomous() {
                    let _ = writeln!(s, "  s{i} -> s{t};");
                } else {
                    let _ = writeln!(s, "  s{i} -> s{t} [label=\"{}\"];", ts.inputs[slot]);
                }
            }
        }
    }
    s.push_str("}\n");
    s
}
