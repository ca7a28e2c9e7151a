//! Construction scripts, one command per line:
//!
//! ```text
//! start 2 2 2        # G_2 ⊔ G_2 ⊔ G_2, labels "0:a_1", "1:b_2", ...
//! example            # three pentagons on 1..15 instead
//! mode loose         # before the first step only
//! step 0:a_1 1:a_2   # optional third token names the new vertex
//! classify
//! ```

use flagsphere::construct::{example_start, ConstructionState, StepMode};
use serde_json::{json, Value};

use crate::report::{to_value, CmdResult, Failure};

fn at(line: usize, msg: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("script line {line}: {msg}"))
}

/// Run a script; returns one entry per `classify` and whether all of them were consistent.
pub fn run(text: &str, default_mode: StepMode) -> CmdResult<(Vec<Value>, bool)> {
    let mut state: Option<ConstructionState> = None;
    let mut mode = default_mode;
    let mut out = Vec::new();
    let mut ok = true;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t: Vec<&str> = raw
            .split('#')
            .next()
            .unwrap_or("")
            .split_whitespace()
            .collect();
        let Some(&cmd) = t.first() else { continue };
        let lift = |e: flagsphere::Error| match Failure::from(e) {
            Failure::Usage(m) => at(line, m),
            g => g,
        };
        match cmd {
            "start" | "example" => {
                if state.is_some() {
                    return Err(at(line, "the construction has already started"));
                }
                let s = if cmd == "example" {
                    if t.len() != 1 {
                        return Err(at(line, "`example` takes no arguments"));
                    }
                    example_start().map_err(lift)?
                } else {
                    let ms = t[1..]
                        .iter()
                        .map(|x| {
                            x.parse::<usize>()
                                .map_err(|_| at(line, format!("`{x}` is not a size")))
                        })
                        .collect::<CmdResult<Vec<_>>>()?;
                    if ms.is_empty() {
                        return Err(at(line, "`start` needs at least one size"));
                    }
                    ConstructionState::start(&ms).map_err(lift)?
                };
                state = Some(s.with_mode(mode));
            }
            "mode" => {
                if t.len() != 2 {
                    return Err(at(line, "usage: mode strict|loose"));
                }
                if state.as_ref().is_some_and(|s| !s.steps().is_empty()) {
                    return Err(at(line, "the mode cannot change after a step"));
                }
                mode = t[1].parse().map_err(lift)?;
                state = state.map(|s| s.with_mode(mode));
            }
            "step" => {
                if !(3..=4).contains(&t.len()) {
                    return Err(at(line, "usage: step X Y [FRESH]"));
                }
                let s = state
                    .as_ref()
                    .ok_or_else(|| at(line, "`step` before `start`"))?;
                state = Some(s.step(t[1], t[2], t.get(3).copied()).map_err(lift)?);
            }
            "classify" => {
                let s = state
                    .as_ref()
                    .ok_or_else(|| at(line, "`classify` before `start`"))?;
                let r = s.classify().map_err(lift)?;
                ok &= r.predictor_agrees
                    && r.dimension_check
                    && r.homology.gorenstein() != Some(false);
                out.push(json!({
                    "line": line,
                    "mode": to_value(&s.mode()),
                    "steps": to_value(&s.steps()),
                    "report": to_value(&r),
                }));
            }
            other => return Err(at(line, format!("unknown command `{other}`"))),
        }
    }
    Ok((out, ok))
}
