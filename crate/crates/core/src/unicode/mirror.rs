/// Swaps the paired punctuation a right-to-left context displays mirrored.
pub fn mirror(cp: char) -> char {
    match cp {
        '(' => ')',
        ')' => '(',
        '[' => ']',
        ']' => '[',
        '{' => '}',
        '}' => '{',
        '<' => '>',
        '>' => '<',
        other => other,
    }
}
