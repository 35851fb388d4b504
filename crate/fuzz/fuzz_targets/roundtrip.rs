#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;
use weylkit::expr::{parse, Format, Render};
use weylkit::pbw::normal_form;
use weylkit::shriek::reduce_expression;
use weylkit::AlgebraKind;

#[derive(Arbitrary, Debug)]
struct Input<'a> {
    n: u8,
    kind: u8,
    text: &'a str,
}

const KINDS: [AlgebraKind; 4] = [AlgebraKind::A, AlgebraKind::B, AlgebraKind::C, AlgebraKind::BShriek];

fuzz_target!(|input: Input| {
    // keep normal forms small: long words in B blow up combinatorially
    if input.text.len() > 64 {
        return;
    }
    let n = usize::from(input.n % 2) + 1;
    let kind = KINDS[usize::from(input.kind) % KINDS.len()];
    let Ok(expr) = parse(input.text, n, kind) else { return };
    if expr.max_word_len() > 12 {
        return;
    }
    if kind == AlgebraKind::BShriek {
        let Ok(e) = reduce_expression(&expr, n) else { return };
        let text = e.render(Format::Text);
        let back = reduce_expression(&parse(&text, n, kind).expect("rendered text parses"), n).unwrap();
        assert_eq!(back, e, "{text}");
    } else {
        let Ok(e) = normal_form(&expr, kind, n) else { return };
        let text = e.render(Format::Text);
        let back = normal_form(&parse(&text, n, kind).expect("rendered text parses"), kind, n).unwrap();
        assert_eq!(back, e, "{text}");
    }
});
