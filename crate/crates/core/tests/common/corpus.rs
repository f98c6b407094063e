//! Fixed arrows and golden readings.

/// Theorems under the default groups, in blocks of four: excluded middle,
/// closure and interior, interaction transitions, de Morgan, and
/// (co)implication against (co)product.
pub const DEFAULT_YES: &[&str] = &[
    "^1 p -> p^0",
    "^1 p -> ^0 p",
    "p^1 -> ^0 p",
    "p^1 -> p^0",
    "p -> ^0(p^0)",
    "p -> (^0 p)^0",
    "(^1 p)^1 -> p",
    "^1(p^1) -> p",
    "(p (\\) q) * n -> p (\\) (q * n)",
    "n * (q (/) p) -> (n * q) (/) p",
    "n * (p (\\) q) -> p (\\) (n * q)",
    "(q (/) p) * n -> (q * n) (/) p",
    "(p * q)^1 -> (^0 q) + (^0 p)",
    "(p * q)^1 -> (^0 p) + (^0 q)",
    "(p^1) * (q^1) -> ^0(q + p)",
    "(q^1) * (p^1) -> ^0(q + p)",
    "p \\ q -> (p^0) + q",
    "p \\ q -> q + (p^0)",
    "q * (^1 p) -> q (/) p",
    "(^1 p) * q -> q (/) p",
];

pub const CLOSURE_INTERIOR: std::ops::Range<usize> = 4..8;
pub const TRANSITIONS: std::ops::Range<usize> = 8..12;
pub const DE_MORGAN: std::ops::Range<usize> = 12..16;

pub const DEFAULT_NO: &[&str] = &["p * q -> q * p", "p^0 -> ^1 p", "^0 p -> p^1", "p -> ^1(p^1)"];

/// Theorems of the converse group alone: four transitions, then four
/// coproduct interactions.
pub const INVERSE_ONLY: &[&str] = &[
    "p (\\) (q * n) -> (p (\\) q) * n",
    "(n * q) (/) p -> n * (q (/) p)",
    "p (\\) (n * q) -> n * (p (\\) q)",
    "(q * n) (/) p -> (q (/) p) * n",
    "(p + q) * n -> p + (q * n)",
    "n * (q + p) -> (n * q) + p",
    "n * (p + q) -> p + (n * q)",
    "(q + p) * n -> (q * n) + p",
];

pub const COPRODUCT: std::ops::Range<usize> = 4..8;

pub const LEXICON: &str = include_str!("../../data/illustrations.lg");

pub const SCOPE: (&str, &str, &[&str]) = (
    "everyone likes someone",
    "s",
    &["\\c. exists (\\y. forall (\\x. c (like y x)))", "\\c. forall (\\x. exists (\\y. c (like y x)))"],
);

pub const GOLDEN: &[(&str, &str, &[&str])] = &[
    (
        "every picture of some teacher",
        "np",
        &[
            "\\a. forall (\\x. implies (exists (\\y. and (teacher y) (pic y x))) (a x))",
            "\\a. exists (\\y. and (teacher y) (forall (\\x. implies (pic y x) (a x))))",
        ],
    ),
    (
        "alice (claims ((some unicorn) left))",
        "s",
        &[
            "\\c. c (claim (\\c'. exists (\\x. and (unicorn x) (c' (left x)))) alice)",
            "\\c. exists (\\x. and (unicorn x) (c (claim (\\c'. c' (left x)) alice)))",
        ],
    ),
    ("molly tease+ed leopold", "s", &["\\c. c (past (tease leopold molly))"]),
    ("hopefully (john left)", "s", &["\\c. c (hpfy (left john))"]),
    ("john (hopefully left)", "s", &["\\c. c (hpfy (left john))"]),
    ("(john left) hopefully", "s", &["\\c. c (hpfy (left john))"]),
];
