use crate::ast::TransitionSystem;
use crate::lexer::{lex_line, Tok};
use crate::parser::Line;
use crate::ParseError;
use std::collections::HashSet;

/// Parse a `.ts` raw transition system.
///
/// ```text
/// ts example
/// states x1 x2 x3 x4
/// inputs u1 u2            # omit for an autonomous system
/// obs O1 O2 O3
/// trans x1 u1 -> {x2, x3}
/// trans x4 u2 -> {}       # explicit empty set; omitted pairs are empty too
/// label x1 = O1
/// ```
///
/// Successor sets may be empty and may hold several states. Labels must
/// cover every state. The `obs` line fixes the observation order.
pub fn parse_transition_system(src: &str) -> Result<TransitionSystem, ParseError> {
    let mut name: Option<String> = None;
    let mut states: Option<(usize, Vec<String>)> = None;
    let mut inputs: Option<(usize, Vec<String>)> = None;
    let mut obs: Option<(usize, Vec<String>)> = None;
    let mut trans_lines: Vec<(usize, String, Option<String>, Vec<String>)> = Vec::new();
    let mut label_lines: Vec<(usize, String, String)> = Vec::new();

    for (idx, text) in src.lines().enumerate() {
        let no = idx + 1;
        let toks = lex_line(no, text)?;
        if toks.is_empty() {
            continue;
        }
        let mut line = Line::new(no, toks);
        let head_col = line.col();
        let head = line.expect_ident()?;
        match head.as_str() {
            "ts" => {
                if name.is_some() {
                    return Err(line.err("duplicate `ts` header"));
                }
                name = Some(line.expect_name()?);
                line.expect_end()?;
            }
            "states" | "inputs" | "obs" => {
                let slot = match head.as_str() {
                    "states" => &mut states,
                    "inputs" => &mut inputs,
                    _ => &mut obs,
                };
                if slot.is_some() {
                    return Err(ParseError::new(no, head_col, format!("duplicate `{head}` line")));
                }
                let mut names = Vec::new();
                while line.peek().is_some() {
                    names.push(line.expect_name()?);
                    line.eat(&Tok::Comma);
                }
                if names.is_empty() {
                    return Err(ParseError::new(no, head_col, format!("`{head}` line names nothing")));
                }
                *slot = Some((no, names));
            }
            "trans" => {
                let src_state = line.expect_name()?;
                let input = if line.peek() == Some(&Tok::Arrow) {
                    None
                } else {
                    Some(line.expect_name()?)
                };
                line.expect(Tok::Arrow)?;
                let succ = line.brace_list()?;
                line.expect_end()?;
                trans_lines.push((no, src_state, input, succ));
            }
            "label" => {
                let state = line.expect_name()?;
                line.expect(Tok::Eq)?;
                let ob = line.expect_name()?;
                line.expect_end()?;
                label_lines.push((no, state, ob));
            }
            other => {
                return Err(ParseError::named(
                    no,
                    head_col,
                    other,
                    format!("unknown statement `{other}`"),
                ));
            }
        }
    }

    let Some(name) = name else {
        return Err(ParseError::new(1, 1, "missing `ts <name>` header"));
    };
    let Some((_, states)) = states else {
        return Err(ParseError::new(1, 1, "missing `states` line"));
    };
    let Some((_, obs)) = obs else {
        return Err(ParseError::new(1, 1, "missing `obs` line"));
    };
    let inputs = inputs.map(|(_, v)| v).unwrap_or_default();

    for (list, what) in [(&states, "state"), (&obs, "observation"), (&inputs, "input")] {
        let mut seen = HashSet::new();
        for n in list.iter() {
            if !seen.insert(n.as_str()) {
                return Err(ParseError::named(1, 1, n, format!("{what} `{n}` declared twice")));
            }
        }
    }

    let find = |list: &[String], n: &str| list.iter().position(|x| x == n);

    let slots = inputs.len().max(1);
    let mut trans = vec![vec![Vec::new(); states.len()]; slots];
    let mut filled: HashSet<(usize, usize)> = HashSet::new();
    for (no, src_state, input, succ) in &trans_lines {
        let si = find(&states, src_state).ok_or_else(|| {
            ParseError::named(*no, 1, src_state, format!("unknown state `{src_state}`"))
        })?;
        let ui = match (input, inputs.is_empty()) {
            (Some(u), false) => find(&inputs, u)
                .ok_or_else(|| ParseError::named(*no, 1, u, format!("unknown input `{u}`")))?,
            (None, true) => 0,
            (Some(u), true) => {
                return Err(ParseError::named(
                    *no,
                    1,
                    u,
                    "autonomous system, but `trans` names an input",
                ));
            }
            (None, false) => {
                return Err(ParseError::new(*no, 1, "system has inputs, `trans` must name one"));
            }
        };
        if !filled.insert((ui, si)) {
            return Err(ParseError::named(
                *no,
                1,
                src_state,
                format!("duplicate `trans` line for `{src_state}`"),
            ));
        }
        let mut targets = Vec::new();
        for t in succ {
            let ti = find(&states, t)
                .ok_or_else(|| ParseError::named(*no, 1, t, format!("unknown state `{t}`")))?;
            targets.push(ti);
        }
        targets.sort_unstable();
        targets.dedup();
        trans[ui][si] = targets;
    }

    let mut labels = vec![usize::MAX; states.len()];
    for (no, state, ob) in &label_lines {
        let si = find(&states, state).ok_or_else(|| {
            ParseError::named(*no, 1, state, format!("unknown state `{state}`"))
        })?;
        let oi = find(&obs, ob)
            .ok_or_else(|| ParseError::named(*no, 1, ob, format!("unknown observation `{ob}`")))?;
        if labels[si] != usize::MAX {
            return Err(ParseError::named(*no, 1, state, format!("`{state}` labeled twice")));
        }
        labels[si] = oi;
    }
    if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
        return Err(ParseError::named(
            1,
            1,
            &states[i],
            format!("state `{}` has no label", states[i]),
        ));
    }

    Ok(TransitionSystem { name, states, inputs, obs, trans, labels })
}
