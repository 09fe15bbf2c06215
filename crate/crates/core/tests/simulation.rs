use std::io::Cursor;
use std::path::{Path, PathBuf};

use social_attitudes::config::{Config, CorpusConfig};
use social_attitudes::corpus::{parse_corpus_str, write_corpus, Dimension, VariationClass, Vocabulary};
use social_attitudes::pipeline::mine_corpus;
use social_attitudes::seqmine::{parse_patterns, write_patterns, MinerConfig, Pattern};
use social_attitudes::sim::{run_simulation, Detected, Input, Scenario};
use social_attitudes::synth::{planted_sequence, synthetic_corpus, SynthConfig};
use social_attitudes::Error;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn mined() -> social_attitudes::seqmine::PatternSet {
    let corpus = synthetic_corpus(&SynthConfig::default()).unwrap();
    let miner = MinerConfig {
        min_support: 0.4,
        max_pattern_length: 4,
    };
    mine_corpus(&corpus, &CorpusConfig::default(), &miner).unwrap().0
}

#[test]
fn planted_sequences_top_their_class() {
    let set = mined();
    for dimension in Dimension::ALL {
        for class in VariationClass::ALL {
            let planted = Pattern::new(planted_sequence(dimension, class).iter().copied());
            let stats = set
                .get(&planted, dimension, class)
                .unwrap_or_else(|| panic!("{planted} not mined for {dimension} {class}"));
            assert!(stats.lift > 1.5, "{planted}: lift {}", stats.lift);
        }
    }
}

#[test]
fn centroids_follow_the_step_modes() {
    let set = mined();
    for dimension in Dimension::ALL {
        let c = set.centroids.get(dimension).unwrap();
        for (got, want) in c.iter().zip([-0.8, -0.25, 0.25, 0.8]) {
            assert!((got - want).abs() < 0.05, "{dimension}: {c:?}");
        }
    }
}

#[test]
fn pattern_file_round_trips() {
    let set = mined();
    let text = write_patterns(&set);
    let back = parse_patterns(&text, "mined").unwrap();
    assert_eq!(write_patterns(&back), text);
    assert_eq!(back.centroids, set.centroids);
}

#[test]
fn corpus_file_round_trips() {
    let corpus = synthetic_corpus(&SynthConfig {
        interactions: 2,
        ..Default::default()
    })
    .unwrap();
    let text = write_corpus(&corpus);
    let back = parse_corpus_str(&text, "synth", &Vocabulary::default()).unwrap();
    assert_eq!(back, corpus);
}

fn scripted_lines(scenario: &Scenario) -> String {
    scenario
        .turns
        .iter()
        .map(|t| match &t.detected {
            Detected::Scripted(v) => v
                .iter()
                .map(|(k, x)| format!("{k}={x}"))
                .collect::<Vec<_>>()
                .join(" ")
                + "\n",
            Detected::Interactive => unreachable!(),
        })
        .collect()
}

#[test]
fn interactive_entry_matches_scripted_run() {
    let scenario = Scenario::load(&fixture("interview.toml")).unwrap();
    let patterns = mined();
    let cfg = Config::default();
    let scripted = run_simulation(&scenario, &patterns, &cfg, Input::Scripted).unwrap();

    // a typo first, which is reported and re-asked
    let typed = format!("joy=oops\n{}", scripted_lines(&scenario));
    let mut reader = Cursor::new(typed.into_bytes());
    let mut prompt = Vec::new();
    let interactive = run_simulation(
        &scenario,
        &patterns,
        &cfg,
        Input::Console {
            reader: &mut reader,
            prompt: &mut prompt,
            every_turn: true,
        },
    )
    .unwrap();
    assert_eq!(scripted, interactive);
    let prompt = String::from_utf8(prompt).unwrap();
    assert!(prompt.contains("turn 8 (closing)"));
    assert!(prompt.contains("invalid intensity `oops`"));
}

#[test]
fn moods_and_planner_memory_carry_over() {
    let scenario = Scenario::load(&fixture("interview.toml")).unwrap();
    let trace = run_simulation(&scenario, &mined(), &Config::default(), Input::Scripted).unwrap();
    assert_eq!(trace.len(), 8);
    let exuberant: Vec<f64> = trace.iter().map(|t| t.moods.get("exuberant")).collect();
    assert!(exuberant[..4].windows(2).all(|w| w[1] > w[0]));
    assert!(exuberant[4..].windows(2).all(|w| w[1] < w[0]));
    // the first turn moves away from the origin, later turns do not move
    assert!(!trace[0].sequence.is_empty());
    assert!(trace[1..].iter().all(|t| t.sequence.is_empty()));
    assert_eq!(trace.iter().map(|t| t.turn).collect::<Vec<_>>(), (1..=8).collect::<Vec<_>>());
}

#[test]
fn interactive_turn_without_input_names_the_turn() {
    let text = std::fs::read_to_string(fixture("interview.toml")).unwrap();
    let text = text.replacen(
        "detected = { distress = 0.95, anxious = 0.9, agitated = 0.6 }",
        "detected = \"interactive\"",
        1,
    );
    let scenario = Scenario::from_toml(&text, "edited").unwrap();
    match run_simulation(&scenario, &mined(), &Config::default(), Input::Scripted) {
        Err(Error::Turn { turn: 6, .. }) => {}
        other => panic!("{other:?}"),
    }
    let mut reader = Cursor::new(Vec::new());
    let mut prompt = Vec::new();
    let input = Input::Console {
        reader: &mut reader,
        prompt: &mut prompt,
        every_turn: false,
    };
    match run_simulation(&scenario, &mined(), &Config::default(), input) {
        Err(Error::Turn { turn: 6, .. }) => {}
        other => panic!("{other:?}"),
    }
}

#[test]
fn missing_centroids_are_reported() {
    let scenario = Scenario::load(&fixture("interview.toml")).unwrap();
    let empty = parse_patterns("", "empty").unwrap();
    match run_simulation(&scenario, &empty, &Config::default(), Input::Scripted) {
        Err(Error::Turn { turn: 1, source }) => {
            assert!(source.to_string().contains("centroids"), "{source}")
        }
        other => panic!("{other:?}"),
    }
}
