//! Builds a derivation script that passes through a list of waypoint words.
//!
//! Usage: `derive_script <diagram.knot> <waypoints.txt>`. Each waypoint line is
//! a word such as `RW(z1,w)W(w,z1)` matched up to rotation, or `rebase <label>`
//! which moves the basepoint to the line starting at `label`, or `m <value>`
//! which searches for any normal form with that exponent.

use knotline_core::parse_diagram;
use knotline_core::wilson::*;

fn matches(w: &WilsonExpr, target: &str) -> Option<usize> {
    (0..w.len().max(1)).find(|&r| w.rotated(r).word() == target)
}

fn power_of(target: &str) -> i64 {
    let mut total = 0;
    let mut rest = target;
    while let Some(i) = rest.find('R') {
        rest = &rest[i + 1..];
        if let Some(exp) = rest.strip_prefix('^') {
            let end = exp
                .find('W')
                .unwrap_or(exp.len())
                .min(exp.find('R').unwrap_or(exp.len()));
            total += exp[..end].parse::<i64>().unwrap();
        } else {
            total += 1;
        }
    }
    total
}

fn tokens(word: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = word;
    while !rest.is_empty() {
        let end = rest[1..].find(['W', 'R']).map_or(rest.len(), |i| i + 1);
        out.push(rest[..end].to_string());
        rest = &rest[end..];
    }
    out
}

fn bigrams(tok: &[String]) -> Vec<(String, String)> {
    let mut v: Vec<(String, String)> = (0..tok.len())
        .map(|i| (tok[i].clone(), tok[(i + 1) % tok.len()].clone()))
        .collect();
    v.sort();
    v
}

fn missing(target: &[(String, String)], have: &[(String, String)]) -> usize {
    let (mut i, mut j, mut miss) = (0, 0, 0);
    while i < target.len() {
        if j == have.len() || target[i] < have[j] {
            miss += 1;
            i += 1;
        } else if target[i] == have[j] {
            i += 1;
            j += 1;
        } else {
            j += 1;
        }
    }
    miss
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let d = parse_diagram(&std::fs::read_to_string(&args[1]).unwrap()).unwrap();
    let waypoints = std::fs::read_to_string(&args[2]).unwrap();
    let budget = Budget {
        expansions: 2_000_000,
        extra_len: 8,
        power_bound: 16,
        block: 2,
    };
    let mut word = encode_wilson(&d);
    let mut steps: Vec<(Step, Option<String>)> = Vec::new();
    for raw in waypoints.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(label) = line.strip_prefix("rebase ") {
            let lines: Vec<Line> = word.factors().iter().filter_map(|f| f.line()).collect();
            let target = lines
                .iter()
                .find(|l| word.left_label(**l) == label)
                .expect("rebase label starts a line");
            let step = Step::new(RuleId::Cyclic, Site::at(0), &[target.start as i64]);
            word = word.apply_rule(step.rule, step.site, &step.params).unwrap();
            steps.push((step, Some(format!("basepoint moved to {label}"))));
            continue;
        }
        if let Some(m) = line.strip_prefix("m ") {
            let m: i64 = m.trim().parse().expect("integer exponent");
            let wide = Budget {
                expansions: 300_000,
                extra_len: 6,
                power_bound: 14,
                block: 2,
            };
            let found = best_first(
                &word,
                &wide,
                |w| w.normal_form().is_some_and(|nf| nf.m == m),
                |w| (w.len(), (w.total_power() + m).abs()),
            )
            .unwrap_or_else(|e| {
                eprintln!("no normal form with m = {m}: {e}");
                std::process::exit(1);
            });
            eprintln!("reached m = {m} after {} expansions", found.expansions);
            let n = found.derivation.steps.len();
            for (i, s) in found.derivation.steps.into_iter().enumerate() {
                steps.push((s, (i + 1 == n).then(|| found.word.word())));
            }
            word = found.word;
            continue;
        }
        let target: String = line.split_whitespace().collect();
        let tpow = power_of(&target);
        let tgrams = bigrams(&tokens(&target));
        let found = best_first(
            &word,
            &budget,
            |w| matches(w, &target).is_some(),
            |w| {
                let grams = bigrams(&tokens(&w.word()));
                (
                    missing(&tgrams, &grams) as i64 + (w.total_power() - tpow).abs(),
                    w.len(),
                )
            },
        );
        let found = match found {
            Ok(f) => f,
            Err(e) => {
                eprintln!("waypoint `{target}` not reached: {e}");
                std::process::exit(1);
            }
        };
        eprintln!("reached `{target}` after {} expansions", found.expansions);
        let n = found.derivation.steps.len();
        for (i, s) in found.derivation.steps.into_iter().enumerate() {
            steps.push((s, (i + 1 == n).then(|| target.clone())));
        }
        word = found.word;
        if let Some(r) = matches(&word, &target).filter(|&r| r != 0) {
            let step = Step::new(RuleId::Cyclic, Site::at(r), &[]);
            word = word.apply_rule(step.rule, step.site, &step.params).unwrap();
            if let Some(last) = steps.last_mut() {
                last.1 = None;
            }
            steps.push((step, Some(target.clone())));
        }
    }
    for (i, (s, note)) in steps.iter().enumerate() {
        let mut text = format!("STEP {}: {} at {}", i + 1, s.rule, s.site);
        if !s.params.is_empty() {
            let p: Vec<String> = s.params.iter().map(|p| p.to_string()).collect();
            text.push_str(&format!(" param {}", p.join(" ")));
        }
        if let Some(n) = note {
            text.push_str(&format!("  # {n}"));
        }
        println!("{text}");
    }
}
