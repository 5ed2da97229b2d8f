use proptest::prelude::*;

use trojan_sentinel_core::render::{annotate, render_line, render_preview, reorder, resolve_levels};
use trojan_sentinel_core::unicode::{classify_bidi, InvisibleSet};

fn controls_and_text() -> impl Strategy<Value = Vec<char>> {
    prop::collection::vec(
        prop::sample::select(vec![
            'a', 'b', ' ', '(', ')', '{', '}', '1', '\u{05D0}', '\u{05D1}', '\u{0627}', '\u{202A}', '\u{202B}',
            '\u{202C}', '\u{202D}', '\u{202E}', '\u{2066}', '\u{2067}', '\u{2068}', '\u{2069}',
        ]),
        0..40,
    )
}

proptest! {
    #[test]
    fn control_free_ascii_renders_to_itself(line in "[ -~]{0,60}") {
        prop_assert_eq!(render_line(&line, &InvisibleSet::builtin()), line.clone());
        prop_assert_eq!(annotate(&line, &InvisibleSet::builtin()), line);
    }

    #[test]
    fn reorder_drops_exactly_the_controls(p in controls_and_text()) {
        let run = resolve_levels(&p);
        let controls = p.iter().filter(|c| classify_bidi(**c).is_some()).count();
        prop_assert_eq!(reorder(&p, &run.levels).chars().count(), p.len() - controls);
        prop_assert_eq!(reorder(&p, &run.explicit).chars().count(), p.len() - controls);
        prop_assert!(run.levels.iter().all(|&l| l <= 126));
    }

    #[test]
    fn reordering_control_free_text_twice_is_identity(p in controls_and_text()) {
        let plain: Vec<char> = p.into_iter().filter(|c| classify_bidi(*c).is_none()).collect();
        let once: Vec<char> = reorder(&plain, &resolve_levels(&plain).levels).chars().collect();
        let twice = reorder(&once, &resolve_levels(&once).levels);
        prop_assert_eq!(twice, plain.iter().collect::<String>());
    }

    #[test]
    fn annotation_keeps_logical_order(p in controls_and_text()) {
        let line: String = p.iter().collect();
        let annotated = annotate(&line, &InvisibleSet::builtin());
        let mut expected = String::new();
        for c in &p {
            if classify_bidi(*c).is_some() {
                expected.push_str(&format!("<U+{:04X}>", *c as u32));
            } else {
                expected.push(*c);
            }
        }
        prop_assert_eq!(annotated, expected);
    }
}

#[test]
fn preview_examples() {
    let p = render_preview("abc");
    assert_eq!((p.annotated.as_str(), p.rendered.as_str()), ("abc", "abc"));
    assert_eq!(render_preview("a\u{2067}b").annotated, "a<U+2067>b");
    assert_eq!(render_preview("\u{2067}a b c\u{2069}").rendered, "c b a");
    assert_eq!(
        render_preview("\u{2067}\u{2066}a b c\u{2069} \u{2066}d e f\u{2069}\u{2069}").rendered,
        "d e f a b c"
    );
}
