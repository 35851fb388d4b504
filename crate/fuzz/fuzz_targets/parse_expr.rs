#![no_main]

use arbitrary::Arbitrary;
use libfuzzer_sys::fuzz_target;
use weylkit::expr::parse;
use weylkit::AlgebraKind;

#[derive(Arbitrary, Debug)]
struct Input<'a> {
    n: u8,
    kind: u8,
    text: &'a str,
}

const KINDS: [AlgebraKind; 5] = [
    AlgebraKind::A,
    AlgebraKind::B,
    AlgebraKind::C,
    AlgebraKind::BShriek,
    AlgebraKind::CShriek,
];

fuzz_target!(|input: Input| {
    let n = usize::from(input.n % 4) + 1;
    let kind = KINDS[usize::from(input.kind) % KINDS.len()];
    // errors are fine, panics and hangs are not
    let _ = parse(input.text, n, kind);
});
