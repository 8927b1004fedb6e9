//! Java lexer, just deep enough to classify tokens.
//!
//! The keyword pipeline only needs to know which lexemes are identifiers and
//! which are reserved words, literals, comments or punctuation. Malformed
//! input never aborts: an unterminated string or block comment extends to the
//! end of the input and is recorded as a warning.

/// Java SE 8 reserved words. `true`, `false` and `null` are literals, and
/// contextual keywords such as `var` or `record` stay identifiers.
pub const JAVA_KEYWORDS: [&str; 50] = [
    "abstract",
    "assert",
    "boolean",
    "break",
    "byte",
    "case",
    "catch",
    "char",
    "class",
    "const",
    "continue",
    "default",
    "do",
    "double",
    "else",
    "enum",
    "extends",
    "final",
    "finally",
    "float",
    "for",
    "goto",
    "if",
    "implements",
    "import",
    "instanceof",
    "int",
    "interface",
    "long",
    "native",
    "new",
    "package",
    "private",
    "protected",
    "public",
    "return",
    "short",
    "static",
    "strictfp",
    "super",
    "switch",
    "synchronized",
    "this",
    "throw",
    "throws",
    "transient",
    "try",
    "void",
    "volatile",
    "while",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    Identifier,
    Keyword,
    Literal,
    SeparatorOrOperator,
    Comment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub text: String,
}

#[derive(Debug, Clone, Default)]
pub struct LexOutput {
    pub tokens: Vec<Token>,
    pub warnings: Vec<String>,
}

fn is_identifier_start(c: char) -> bool {
    c.is_alphabetic() || c == '_' || c == '$'
}

fn is_identifier_part(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '$'
}

/// Tokenize Java source text. Never fails; lexical damage is reported in
/// `warnings` while the tokens still cover the whole input.
pub fn lex_java(source: &str) -> LexOutput {
    let chars: Vec<char> = source.chars().collect();
    let mut out = LexOutput::default();
    let mut i = 0;

    while i < chars.len() {
        let c = chars[i];

        if c.is_whitespace() {
            i += 1;
            continue;
        }

        // comments
        if c == '/' && chars.get(i + 1) == Some(&'/') {
            let start = i;
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            out.push(TokenKind::Comment, &chars[start..i]);
            continue;
        }
        if c == '/' && chars.get(i + 1) == Some(&'*') {
            let start = i;
            i += 2;
            loop {
                if i + 1 >= chars.len() {
                    i = chars.len();
                    out.warnings.push("unterminated block comment".to_string());
                    break;
                }
                if chars[i] == '*' && chars[i + 1] == '/' {
                    i += 2;
                    break;
                }
                i += 1;
            }
            out.push(TokenKind::Comment, &chars[start..i]);
            continue;
        }

        // string and character literals
        if c == '"' || c == '\'' {
            let start = i;
            i += 1;
            let mut terminated = false;
            while i < chars.len() {
                if chars[i] == '\\' {
                    i += 2.min(chars.len() - i);
                    continue;
                }
                if chars[i] == c {
                    i += 1;
                    terminated = true;
                    break;
                }
                i += 1;
            }
            if !terminated {
                let what = if c == '"' { "string" } else { "character" };
                out.warnings.push(format!("unterminated {what} literal"));
            }
            out.push(TokenKind::Literal, &chars[start..i]);
            continue;
        }

        // numeric literals, including hex, floats and exponents
        if c.is_ascii_digit() || (c == '.' && chars.get(i + 1).is_some_and(|d| d.is_ascii_digit()))
        {
            let start = i;
            i += 1;
            while i < chars.len() {
                let d = chars[i];
                let part_of_number = d.is_alphanumeric()
                    || d == '_'
                    || d == '.'
                    || ((d == '+' || d == '-') && matches!(chars[i - 1], 'e' | 'E' | 'p' | 'P'));
                if !part_of_number {
                    break;
                }
                i += 1;
            }
            out.push(TokenKind::Literal, &chars[start..i]);
            continue;
        }

        if is_identifier_start(c) {
            let start = i;
            while i < chars.len() && is_identifier_part(chars[i]) {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            let kind = if JAVA_KEYWORDS.binary_search(&text.as_str()).is_ok() {
                TokenKind::Keyword
            } else if matches!(text.as_str(), "true" | "false" | "null") {
                TokenKind::Literal
            } else {
                TokenKind::Identifier
            };
            out.tokens.push(Token { kind, text });
            continue;
        }

        out.push(TokenKind::SeparatorOrOperator, &chars[i..i + 1]);
        i += 1;
    }

    out
}

impl LexOutput {
    fn push(&mut self, kind: TokenKind, text: &[char]) {
        self.tokens.push(Token {
            kind,
            text: text.iter().collect(),
        });
    }
}
