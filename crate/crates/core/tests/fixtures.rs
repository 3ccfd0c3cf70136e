mod common;

use spinor_algebra::text::parse;
use spinor_algebra::Tolerance;

#[test]
fn expression_fixtures() {
    let text = include_str!("fixtures/expressions.txt");
    let cases = common::read_fixtures(text);
    assert!(cases.len() > 20);
    for (sig, expr, expected) in cases {
        let got = parse(&expr, sig).unwrap_or_else(|e| panic!("{expr}: {e}"));
        let want = parse(&expected, sig).unwrap();
        assert!(got.approx_eq(&want, &Tolerance::default()), "{sig}: {expr} gave {got}, expected {want}");
    }
}
