//! The expression language: parse/format round trips, and every defining
//! relation written as text normalizing to zero.

use mpweyl::algebra::WeylAlgebra;
use mpweyl_cli::expr::{eval, parse, BinOp, Expr, ExprKind, Span, Symbol};
use num_bigint::BigInt;
use proptest::prelude::*;

fn roundtrip(text: &str, n: usize) {
    let e = parse(text, n).unwrap_or_else(|err| panic!("{text:?}: {err:?}"));
    let printed = e.to_string();
    let again = parse(&printed, n).unwrap_or_else(|err| panic!("{printed:?}: {err:?}"));
    assert_eq!(e, again, "{text:?} printed as {printed:?}");
    assert_eq!(printed, again.to_string());
}

/// One expression per line.
const CORPUS_FILE: &str = include_str!("data/roundtrip_corpus.txt");

fn corpus() -> Vec<&'static str> {
    CORPUS_FILE.lines().filter(|l| !l.trim().is_empty()).collect()
}

#[test]
fn corpus_round_trips() {
    let corpus = corpus();
    assert!(corpus.len() >= 50);
    for t in corpus {
        roundtrip(t, 2);
    }
}

#[test]
fn corpus_covers_every_node_type() {
    let mut seen = [false; 9];
    fn walk(e: &Expr, seen: &mut [bool; 9]) {
        match &e.kind {
            ExprKind::Int(_) => seen[0] = true,
            ExprKind::Sym(s) => seen[if s.is_quantum() { 2 } else { 1 }] = true,
            ExprKind::Neg(a) => {
                seen[3] = true;
                walk(a, seen)
            }
            ExprKind::Binary(op, a, b) => {
                let k = match op {
                    BinOp::Add => 4,
                    BinOp::Sub => 5,
                    BinOp::Mul => 6,
                    BinOp::Div => 7,
                };
                seen[k] = true;
                walk(a, seen);
                walk(b, seen)
            }
            ExprKind::Pow(a, _) => {
                seen[8] = true;
                walk(a, seen)
            }
        }
    }
    for t in corpus() {
        walk(&parse(t, 2).unwrap(), &mut seen);
    }
    assert!(seen.iter().all(|&b| b), "{seen:?}");
}

#[test]
fn whitespace_and_newlines_are_insignificant() {
    assert_eq!(parse("  x1\t*\ny1  ", 1).unwrap(), parse("x1*y1", 1).unwrap());
}

#[test]
fn precedence_and_associativity() {
    let p = |t: &str| parse(t, 1).unwrap().to_string();
    assert_eq!(p("x1 - (y1 - x1)"), "x1 - (y1 - x1)");
    assert_eq!(p("(x1 - y1) - x1"), "x1 - y1 - x1");
    assert_eq!(p("x1 + y1*x1"), "x1 + y1*x1");
    assert_eq!(p("(x1 + y1)*x1"), "(x1 + y1)*x1");
    assert_eq!(p("-x1^2"), "-x1^2");
    assert_eq!(p("-(x1^2)"), "-(x1^2)");
    // a leading minus binds to the atom, so -x1^2 squares -x1
    let a = WeylAlgebra::new(1);
    let sq = eval(&a, &parse("-x1^2", 1).unwrap()).unwrap();
    let plain = eval(&a, &parse("x1^2", 1).unwrap()).unwrap();
    assert_eq!(sq, plain);
}

#[test]
fn canonical_element_text_reparses() {
    let a = WeylAlgebra::new(2);
    for t in [
        "y1*x1",
        "(y1 + x2)^3*rho2 - sigma1^-1*y2*x1",
        "e1*f1 - f1*e1",
        "1/(r1 - s2)*x1*y1*x1*y1",
        "-(rho1^2) + 5/7*sigma2^-2*x1^2*y2",
    ] {
        let e = eval(&a, &parse(t, 2).unwrap()).unwrap();
        let text = e.to_string();
        let back = eval(&a, &parse(&text, 2).unwrap_or_else(|err| panic!("{text}: {err:?}"))).unwrap();
        assert_eq!(back, e, "{t} -> {text}");
    }
}

/// The defining relations as text, each of which must normalize to zero.
fn relation_strings(n: usize) -> Vec<String> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            out.push(format!("rho{i}*rho{j} - rho{j}*rho{i}"));
            out.push(format!("rho{i}*sigma{j} - sigma{j}*rho{i}"));
            out.push(format!("sigma{i}*sigma{j} - sigma{j}*sigma{i}"));
            let (rx, ry, sx, sy) = if i == j {
                (format!("r{i}"), format!("r{i}^-1"), format!("s{i}"), format!("s{i}^-1"))
            } else {
                ("1".into(), "1".into(), "1".into(), "1".into())
            };
            out.push(format!("rho{i}*x{j} - {rx}*x{j}*rho{i}"));
            out.push(format!("rho{i}*y{j} - {ry}*y{j}*rho{i}"));
            out.push(format!("sigma{i}*x{j} - {sx}*x{j}*sigma{i}"));
            out.push(format!("sigma{i}*y{j} - {sy}*y{j}*sigma{i}"));
            out.push(format!("x{i}*x{j} - x{j}*x{i}"));
            out.push(format!("y{i}*y{j} - y{j}*y{i}"));
            if i != j {
                out.push(format!("y{i}*x{j} - x{j}*y{i}"));
            }
        }
        out.push(format!("rho{i}*rho{i}^-1 - 1"));
        out.push(format!("sigma{i}^-1*sigma{i} - 1"));
        out.push(format!("y{i}*x{i} - r{i}^2*x{i}*y{i} - sigma{i}^2"));
        out.push(format!("y{i}*x{i} - s{i}^2*x{i}*y{i} - rho{i}^2"));
        out.push(format!(
            "y{i}*x{i} - r{i}^2/(r{i}^2 - s{i}^2)*rho{i}^2 + s{i}^2/(r{i}^2 - s{i}^2)*sigma{i}^2"
        ));
        out.push(format!("x{i}*y{i} - 1/(r{i}^2 - s{i}^2)*(rho{i}^2 - sigma{i}^2)"));
        out.push(format!(
            "y{i}^2*x{i} - (r{i}^2 + s{i}^2)*y{i}*x{i}*y{i} + r{i}^2*s{i}^2*x{i}*y{i}^2"
        ));
        out.push(format!(
            "y{i}*x{i}^2 - (r{i}^2 + s{i}^2)*x{i}*y{i}*x{i} + r{i}^2*s{i}^2*x{i}^2*y{i}"
        ));
        // the down-up generators commute with rho, sigma up to the twists
        out.push(format!("rho{i}^2*x{i}*y{i} - x{i}*y{i}*rho{i}^2"));
    }
    out
}

#[test]
fn relation_strings_normalize_to_zero() {
    for n in 1..=3 {
        let a = WeylAlgebra::new(n);
        for t in relation_strings(n) {
            let e = eval(&a, &parse(&t, n).unwrap_or_else(|err| panic!("{t}: {err:?}"))).unwrap();
            assert!(e.is_zero(), "n = {n}: {t} -> {e}");
        }
    }
}

#[test]
fn relation_strings_through_the_command_line() {
    for t in relation_strings(2) {
        let out = mpweyl_cli::run(["mpweyl", "normalize", "-n", "2", &t], None);
        assert_eq!(out.code, 0, "{t}");
        assert_eq!(out.stdout, "{\n  \"terms\": []\n}\n", "{t}");
    }
}

fn sp() -> Span {
    Span::default()
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u32..40).prop_map(|k| Expr::new(ExprKind::Int(BigInt::from(k)), sp())),
        (0usize..10, 1usize..=2).prop_map(|(k, i)| {
            let prefix = ["r", "s", "rho", "sigma", "x", "y", "e", "f", "w", "wp"][k];
            let i = if Symbol::from_parts(prefix, 1).unwrap().is_quantum() { 1 } else { i };
            Expr::new(ExprKind::Sym(Symbol::from_parts(prefix, i).unwrap()), sp())
        }),
    ]
}

fn is_xy(e: &Expr) -> bool {
    matches!(e.kind, ExprKind::Sym(Symbol::X(_) | Symbol::Y(_)))
}

fn tree() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(|a| Expr::new(ExprKind::Neg(Box::new(a)), sp())),
            (inner.clone(), inner.clone(), 0usize..4).prop_map(|(a, b, k)| {
                let op = [BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Div][k];
                Expr::new(ExprKind::Binary(op, Box::new(a), Box::new(b)), sp())
            }),
            (inner, -3i64..5).prop_map(|(a, k)| {
                let k = if k < 0 && is_xy(&a) { -k } else { k };
                Expr::new(ExprKind::Pow(Box::new(a), k), sp())
            }),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn format_then_parse_is_identity(e in tree()) {
        let text = e.to_string();
        let back = parse(&text, 2).map_err(|err| TestCaseError::fail(format!("{text}: {err:?}")))?;
        prop_assert_eq!(&back, &e, "{}", text);
    }
}
