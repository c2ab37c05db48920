use deftree_core::syntax::{parse_statement, LetterId, QuantKind, Sign, Statement, Term};
use proptest::prelude::*;

const LETTERS: [&str; 8] = ["a", "b", "c", "f", "g", "x", "xi", "eta"];

fn letter() -> impl Strategy<Value = LetterId> {
    prop::sample::select(&LETTERS[..]).prop_map(LetterId::new)
}

fn term() -> impl Strategy<Value = Term> {
    letter().prop_map(Term::Letter).prop_recursive(4, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(f, x)| Term::apply(f, x))
    })
}

fn relation() -> impl Strategy<Value = Statement> {
    (term(), any::<bool>(), term()).prop_map(|(l, eq, r)| Statement::relation(l, if eq { Sign::Eq } else { Sign::Neq }, r))
}

fn abbreviation() -> impl Strategy<Value = Statement> {
    (prop::sample::select(&["A", "B"][..]), prop::collection::vec(term(), 1..4))
        .prop_map(|(h, args)| Statement::abbreviation(LetterId::new(h), args))
}

fn quantified(atom: BoxedStrategy<Statement>) -> impl Strategy<Value = Statement> {
    atom.prop_recursive(5, 12, 2, |inner| {
        (any::<bool>(), inner.clone(), inner).prop_map(|(u, h, c)| {
            Statement::quantified(if u { QuantKind::Universal } else { QuantKind::Existential }, h, c)
        })
    })
    .prop_filter("complexity at most 5", |s| s.complexity() <= 5)
}

fn statement() -> impl Strategy<Value = Statement> {
    quantified(prop_oneof![4 => relation(), 1 => abbreviation()].boxed())
}

fn plain_statement() -> impl Strategy<Value = Statement> {
    quantified(relation().boxed())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn render_then_parse_is_identity(s in statement()) {
        prop_assert_eq!(parse_statement(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn brackets_balance(s in statement()) {
        let text = s.to_string();
        let count = |t: &str| text.split(' ').filter(|w| *w == t).count();
        prop_assert_eq!(count("["), count("]"));
        prop_assert_eq!(count("<"), count(">"));
        prop_assert_eq!(count("("), count(")"));
        let mut depth = 0i32;
        for w in text.split(' ') {
            match w {
                "[" | "<" => depth += 1,
                "]" | ">" => {
                    prop_assert!(depth > 0);
                    depth -= 1;
                }
                _ => {}
            }
        }
    }

    #[test]
    fn constituents_are_recovered(s in statement()) {
        let back = parse_statement(&s.to_string()).unwrap();
        prop_assert_eq!(back.hypothesis(), s.hypothesis());
        prop_assert_eq!(back.conclusion(), s.conclusion());
        if let Statement::Abbreviation { head, args } = &back {
            let Statement::Abbreviation { head: h0, args: a0 } = &s else { unreachable!() };
            prop_assert_eq!(head, h0);
            prop_assert_eq!(args, a0);
        }
    }

    #[test]
    fn dual_is_an_involution(s in plain_statement()) {
        let d = s.dual_structural().unwrap();
        prop_assert_eq!(d.complexity(), s.complexity());
        prop_assert_ne!(&d, &s);
        prop_assert_eq!(d.dual_structural().unwrap(), s);
    }

    #[test]
    fn complexity_adds_up(h in statement(), c in statement(), u in any::<bool>()) {
        let kind = if u { QuantKind::Universal } else { QuantKind::Existential };
        let q = Statement::quantified(kind, h.clone(), c.clone());
        prop_assert_eq!(q.complexity(), 1 + h.complexity() + c.complexity());
    }

    #[test]
    fn substitution_with_a_fresh_letter_inverts(s in statement(), from in letter()) {
        let fresh = LetterId::new("zz");
        let there = s.substitute_letter(&from, &fresh);
        prop_assert_eq!(there.substitute_letter(&fresh, &from), s);
    }
}
