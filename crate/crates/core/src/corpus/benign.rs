//! Legitimate internationalized sources: right-to-left comments and
//! strings, balanced directional controls, joiners in words and emoji,
//! non-Latin identifiers. None of these should produce an error.

#[derive(Debug, Clone, Copy)]
pub struct BenignSample {
    pub name: &'static str,
    pub language: &'static str,
    pub template: &'static str,
}

const fn sample(name: &'static str, language: &'static str, template: &'static str) -> BenignSample {
    BenignSample {
        name,
        language,
        template,
    }
}

pub const BENIGN_SAMPLES: &[BenignSample] = &[
    sample(
        "hebrew_comment",
        "python",
        "# שלום עולם - ברכה למשתמש\nprint(\"hello\")\n",
    ),
    sample(
        "arabic_string",
        "python",
        "greeting = \"مرحبا بالعالم\"\nprint(greeting)\n",
    ),
    sample(
        "isolated_hebrew_comment",
        "c",
        "/* {RLI}שלום{PDI} is the greeting */\nint greeting_count = 1;\n",
    ),
    sample(
        "isolated_arabic_label",
        "javascript",
        "const name = \"Sam\";\nconst label = \"{RLI}مرحبا{PDI}: \" + name;\nconsole.log(label);\n",
    ),
    sample(
        "embedded_hebrew_comment",
        "java",
        "class Labels {\n    // {RLE}עברית{PDF} label text\n    static String label = \"Hebrew\";\n}\n",
    ),
    sample(
        "persian_zwnj",
        "python",
        "title = \"می{ZWNJ}خواهم\"\nsubtitle = \"کتاب{ZWNJ}ها\"\nprint(title, subtitle)\n",
    ),
    sample(
        "emoji_zwj",
        "javascript",
        "const family = \"\u{1F468}{ZWJ}\u{1F469}{ZWJ}\u{1F467}\";\nconsole.log(family);\n",
    ),
    sample(
        "lrm_in_comment",
        "c",
        "// price: 100{U+200E} ש\"ח\nint price = 100;\n",
    ),
    sample(
        "rtl_format_string",
        "rust",
        "fn main() {\n    let name = \"Dana\";\n    println!(\"{RLI}{}{PDI} :שם\", name);\n}\n",
    ),
    sample(
        "arabic_comment_go",
        "go",
        "package main\n\n// تحقق من المستخدم\nfunc check() bool {\n    return true\n}\n",
    ),
    sample(
        "cyrillic_identifiers",
        "python",
        "привет = 1\nмир = привет + 1\nprint(мир)\n",
    ),
    sample(
        "greek_identifiers",
        "javascript",
        "const αβγ = 1;\nconst δεζ = αβγ * 2;\nconsole.log(δεζ);\n",
    ),
    sample(
        "han_identifiers",
        "java",
        "class 计数器 {\n    int 数量 = 3;\n    int 加倍() { return 数量 * 2; }\n}\n",
    ),
    sample(
        "hebrew_resource_string",
        "csharp",
        "class Messages\n{\n    const string NotFound = \"שגיאה: הקובץ לא נמצא\";\n}\n",
    ),
    sample(
        "arabic_sql_insert",
        "sql",
        "INSERT INTO greetings (lang, text) VALUES ('ar', 'مرحبا');\n",
    ),
    sample(
        "hebrew_echo",
        "bash",
        "#!/usr/bin/env bash\necho \"שלום $USER\"\n",
    ),
    sample(
        "soft_hyphen_string",
        "python",
        "word = \"hy{SHY}phen\"\nprint(word)\n",
    ),
    sample(
        "first_strong_isolate",
        "python",
        "name = \"נועה\"\nmsg = f\"{FSI}{name}{PDI} joined\"\nprint(msg)\n",
    ),
    sample(
        "isolated_number",
        "c",
        "#include <stdio.h>\n\nvoid show(const char *label, int n) {\n    printf(\"%s: {LRI}%d{PDI}\\n\", label, n);\n}\n",
    ),
    sample(
        "nested_isolates_comment",
        "javascript",
        "// {RLI}{LRI}abc{PDI} שלום{PDI}\nlet ok = true;\n",
    ),
    sample(
        "rlm_in_comment",
        "rust",
        "// السعر{U+200F}: 5\nconst PRICE: u32 = 5;\n",
    ),
    sample(
        "hebrew_comment_solidity",
        "solidity",
        "// SPDX-License-Identifier: MIT\npragma solidity ^0.8.0;\n\n// חוזה לדוגמה\ncontract Sample {\n    uint public value = 1;\n}\n",
    ),
    sample(
        "hebrew_string_go",
        "go",
        "package main\n\nimport \"fmt\"\n\nfunc main() {\n    msg := \"שלום\"\n    fmt.Println(msg)\n}\n",
    ),
    sample(
        "arabic_assembly",
        "assembly",
        "# مرحبا\n    .section .rodata\ngreeting:\n    .asciz \"שלום\"\n",
    ),
];
