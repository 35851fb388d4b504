#![no_main]

use libfuzzer_sys::fuzz_target;
use weylkit::expr::{decode_json, Decoded, Format, Render, Tagged};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(decoded) = decode_json(text) else { return };
    // whatever decodes must re-encode to the same element
    let again = match &decoded {
        Decoded::Pbw(e) => e.render(Format::Json),
        Decoded::Shriek(e, kind) => Tagged { element: e, kind: *kind }.render(Format::Json),
    };
    assert_eq!(decode_json(&again).expect("re-encoded element decodes"), decoded);
});
