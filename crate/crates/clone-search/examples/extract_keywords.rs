//! Turn a Java method into its keyword list, stage by stage.
//!
//! Run with: cargo run --example extract_keywords

use clone_search::lexnorm::{extract_identifiers, lex_java, split_identifier, stem, TokenKind};

const METHOD: &str = r#"public static void copyFile(File src, File dest) throws IOException {
    FileInputStream fis = new FileInputStream(src);
    FileOutputStream fos = new FileOutputStream(dest);
    java.nio.channels.FileChannel channelSrc = fis.getChannel();
    java.nio.channels.FileChannel channelDest = fos.getChannel();
    channelSrc.transferTo(0, channelSrc.size(), channelDest);
    fis.close();
    fos.close();
}"#;

fn main() {
    println!("--- method source ---\n{METHOD}\n");

    let lexed = lex_java(METHOD);
    let identifiers: Vec<&str> = lexed
        .tokens
        .iter()
        .filter(|t| t.kind == TokenKind::Identifier)
        .map(|t| t.text.as_str())
        .collect();
    println!("--- identifier tokens ---\n{}\n", identifiers.join(" "));

    let example = "channelSrc";
    println!(
        "--- splitting and stemming ---\n{} -> {:?} -> {:?}\n",
        example,
        split_identifier(example),
        split_identifier(example)
            .iter()
            .map(|w| stem(w))
            .collect::<Vec<_>>()
    );

    let document = extract_identifiers(METHOD);
    println!("--- keyword list ---\n{}", document.terms.join(" "));
}
