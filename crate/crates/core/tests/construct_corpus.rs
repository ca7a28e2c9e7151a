use flagsphere::construct::{run_corpus, CorpusConfig, CorpusSummary, StepMode};

fn report(s: &CorpusSummary) {
    let t = &s.contingency;
    println!(
        "mode {:?}, {} runs, seed {}",
        s.config.mode,
        s.runs.len(),
        s.config.seed
    );
    println!("                 ternary  not ternary");
    println!("W tree         {:>9} {:>12}", t[1][1], t[1][0]);
    println!("W not a tree   {:>9} {:>12}", t[0][1], t[0][0]);
}

fn check(mode: StepMode) {
    let s = run_corpus(&CorpusConfig {
        mode,
        ..CorpusConfig::default()
    })
    .unwrap();
    report(&s);
    assert!(s.runs.len() >= 200);
    for &i in &s.predictor_disagreements {
        println!(
            "counterexample: {}",
            serde_json::to_string(&s.runs[i]).unwrap()
        );
    }
    assert!(
        s.predictor_disagreements.is_empty(),
        "predictor disagrees with planarity"
    );
    assert!(
        s.dimension_failures.is_empty(),
        "independence number changed: {:?}",
        s.dimension_failures
    );
    assert!(
        s.gorenstein_failures.is_empty(),
        "lost Gorenstein: {:?}",
        s.gorenstein_failures
    );
    assert!(s.runs.iter().all(|r| r.mode == mode));
}

#[test]
fn strict_corpus() {
    check(StepMode::Strict);
}

#[test]
fn loose_corpus() {
    check(StepMode::Loose);
}
