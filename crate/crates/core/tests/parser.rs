mod common;

use common::{corpus, gen};
use ontobias::ofn::{parse, parse_file, serialize, ParserOptions};
use proptest::prelude::*;

fn round_trip(text: &str) {
    let options = ParserOptions::default();
    let first = parse(text, &options).unwrap();
    let written = serialize(&first.model);
    let second = parse(&written, &options).unwrap_or_else(|e| panic!("{e}\n{written}"));
    // implicit declarations are not written out, so their warnings recur
    let messages = |d: &[ontobias::ofn::ParseDiagnostic]| d.iter().map(|d| d.message.clone()).collect::<Vec<_>>();
    assert_eq!(messages(&second.diagnostics), messages(&first.diagnostics));
    assert!(first.model.structurally_eq(&second.model), "round trip changed the model:\n{written}");
    assert_eq!(serialize(&second.model), written);
}

#[test]
fn corpus_round_trips() {
    let files = corpus();
    assert!(files.len() >= 15, "fixture corpus went missing");
    for path in files {
        let text = std::fs::read_to_string(&path).unwrap();
        round_trip(&text);
    }
}

#[test]
fn corpus_parses_leniently() {
    // lenient parsing of the corpus may warn, but never errors
    for path in corpus() {
        parse_file(&path, &ParserOptions::default()).unwrap_or_else(|e| panic!("{e}"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn random_models_round_trip(model in gen::model()) {
        let written = serialize(&model);
        let parsed = parse(&written, &ParserOptions::strict()).map_err(|e| TestCaseError::fail(format!("{e}\n{written}")))?;
        prop_assert!(parsed.diagnostics.is_empty());
        prop_assert!(model.structurally_eq(&parsed.model), "{}", written);
        let again = parse(&serialize(&parsed.model), &ParserOptions::strict()).unwrap();
        prop_assert!(parsed.model.structurally_eq(&again.model));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn diagnostics_point_inside_the_input(model in gen::model(), cut in 0.0..1.0f64, junk in "[()\"@<>:#a-z \n]{0,6}") {
        let mut text = serialize(&model);
        let mut at = (text.len() as f64 * cut) as usize;
        while !text.is_char_boundary(at) {
            at -= 1;
        }
        text.insert_str(at, &junk);
        let lines: Vec<&str> = text.split('\n').collect();
        let inside = |line: usize, column: usize| {
            line >= 1 && line <= lines.len() && column >= 1 && column <= lines[line - 1].chars().count() + 1
        };
        let (diagnostics, again) = match parse(&text, &ParserOptions::default()) {
            Ok(p) => (p.diagnostics.clone(), parse(&text, &ParserOptions::default()).unwrap().diagnostics),
            Err(e) => {
                let mut all = e.warnings.clone();
                all.push(e.error.clone());
                let mut again = parse(&text, &ParserOptions::default()).unwrap_err().warnings;
                again.push(e.error);
                (all, again)
            }
        };
        prop_assert_eq!(&diagnostics, &again);
        for d in &diagnostics {
            prop_assert!(inside(d.line, d.column), "{} outside input:\n{}", d, text);
        }
    }
}
