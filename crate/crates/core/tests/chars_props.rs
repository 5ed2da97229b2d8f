use proptest::prelude::*;

use trojan_sentinel_core::lexer::load_profile;
use trojan_sentinel_core::scan::{scan_source, Settings};
use trojan_sentinel_core::unicode::{skeleton, ConfusableTable, InvisibleSet};
use trojan_sentinel_core::{CheckId, Finding};

const CHAR_CHECKS: [CheckId; 5] = [
    CheckId::InvisibleInIdentifier,
    CheckId::InvisibleInCode,
    CheckId::InvisibleTerminatorSplit,
    CheckId::HomoglyphMixedScript,
    CheckId::HomoglyphConfusablePair,
];

fn char_findings(src: &str, lang: &str) -> Vec<Finding> {
    scan_source(src, &load_profile(lang).unwrap(), &Settings::default())
        .findings
        .into_iter()
        .filter(|f| CHAR_CHECKS.contains(&f.check_id))
        .collect()
}

fn homoglyph_findings(src: &str, lang: &str) -> Vec<Finding> {
    char_findings(src, lang)
        .into_iter()
        .filter(|f| f.check_id.as_str().starts_with("HOMOGLYPH"))
        .collect()
}

/// Identifiers mixing ASCII letters with Cyrillic and Greek look-alikes and
/// the occasional invisible character.
fn tricky_identifier() -> impl Strategy<Value = String> {
    let piece = prop::sample::select(vec![
        "a", "e", "o", "p", "c", "x", "H", "s", "_", "\u{0430}", "\u{0435}", "\u{043E}", "\u{0440}", "\u{0441}",
        "\u{0445}", "\u{041D}", "\u{03BF}", "\u{03B1}", "\u{200B}", "\u{200D}", "\u{00AD}",
    ]);
    ("[a-z]", prop::collection::vec(piece, 0..6)).prop_map(|(head, rest)| format!("{head}{}", rest.concat()))
}

fn ascii_identifier() -> impl Strategy<Value = String> {
    "[a-zA-Z_][a-zA-Z0-9_]{0,11}"
}

fn program(idents: &[String]) -> String {
    idents.iter().map(|i| format!("int {i} = 0;\n")).collect()
}

fn cleanse(src: &str) -> String {
    let invisibles = InvisibleSet::builtin();
    src.chars()
        .filter(|c| !invisibles.contains(*c))
        .map(|c| {
            if c.is_ascii() {
                c.to_string()
            } else {
                skeleton(&c.to_string(), ConfusableTable::builtin())
            }
        })
        .collect()
}

proptest! {
    #[test]
    fn cleansed_files_have_no_character_findings(idents in prop::collection::vec(tricky_identifier(), 1..12)) {
        let src = cleanse(&program(&idents));
        let found = char_findings(&src, "c");
        prop_assert!(found.is_empty(), "{:?}", found);
    }

    #[test]
    fn pair_detection_ignores_definition_order(a in tricky_identifier(), b in tricky_identifier()) {
        let invisibles = InvisibleSet::builtin();
        let visible = |s: &str| s.chars().filter(|c| !invisibles.contains(*c)).collect::<String>();
        let (a, b) = (visible(&a), visible(&b));
        prop_assume!(!a.is_empty() && !b.is_empty());
        let count = |src: &str| {
            homoglyph_findings(src, "c")
                .iter()
                .filter(|f| f.check_id == CheckId::HomoglyphConfusablePair)
                .count()
        };
        let ab = count(&program(&[a.clone(), b.clone(), a.clone(), b.clone()]));
        let ba = count(&program(&[b.clone(), a.clone(), b.clone()]));
        prop_assert_eq!(ab, ba);
        prop_assert!(ab <= 1);
        let table = ConfusableTable::builtin();
        let expected = a != b && skeleton(&a, table) == skeleton(&b, table) && !(a.is_ascii() && b.is_ascii());
        prop_assert_eq!(ab == 1, expected);
    }

    #[test]
    fn no_split_findings_without_invisibles(src in "[a-z /*\n]{0,60}") {
        for lang in ["c", "rust", "sql"] {
            let found = char_findings(&src, lang);
            prop_assert!(found.iter().all(|f| f.check_id != CheckId::InvisibleTerminatorSplit));
        }
    }

    #[test]
    fn single_script_files_are_not_penalized(
        idents in prop::collection::vec("[\u{0431}-\u{044F}]{1,8}", 1..20),
        greek in prop::collection::vec("[\u{03B1}-\u{03C9}]{1,8}", 1..20),
    ) {
        let table = ConfusableTable::builtin();
        for set in [&idents, &greek] {
            let mut skeletons = std::collections::HashMap::new();
            let mut has_pair = false;
            for i in set.iter() {
                if let Some(prev) = skeletons.insert(skeleton(i, table), i.clone()) {
                    has_pair |= prev != *i;
                }
            }
            prop_assume!(!has_pair);
            let found = homoglyph_findings(&program(set), "c");
            prop_assert!(found.is_empty(), "{:?}", found);
        }
    }
}

#[test]
fn thousand_ascii_identifiers_raise_no_homoglyph_findings() {
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let idents: Vec<String> = (0..1000)
        .map(|_| ascii_identifier().new_tree(&mut runner).unwrap().current())
        .collect();
    assert!(homoglyph_findings(&program(&idents), "c").is_empty());
}

#[test]
fn invisible_identifier_and_split_terminator() {
    let found = char_findings("int say\u{200B}Hello = 1;\n/* a *\u{200B}/ b */\n", "c");
    let ids: Vec<_> = found.iter().map(|f| (f.check_id, f.line)).collect();
    assert_eq!(
        ids,
        [(CheckId::InvisibleInIdentifier, 1), (CheckId::InvisibleTerminatorSplit, 2)]
    );
}
