//! The fixed regression pool: the formula list the property suites quantify
//! over. The pool is versioned — the hand-written entries below plus fifty
//! seed-pinned random formulas of depth at most three — so property runs are
//! reproducible across machines and releases. `pool_is_stable` guards the
//! seed and generator against accidental drift.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{parse, FoFormula, TeamFormula, TeamQuantifier, Term};
use crate::updates::UpdateKind;

const SEED: u64 = 0x7ea3_0001;
const RANDOM_COUNT: usize = 50;

/// Atom instances over `{x, y, z}`, one or more per atom kind.
pub fn atom_pool() -> Vec<TeamFormula> {
    [
        "const(x)",
        "const(y)",
        "const(z)",
        "const(x, y)",
        "dep(x; y)",
        "dep(y; x)",
        "dep(x, y; z)",
        "dep(z; x)",
        "inc(x; y)",
        "inc(y; z)",
        "inc(x, y; y, z)",
        "exc(x; y)",
        "exc(y; z)",
        "ind(x; y)",
        "ind(x; z)",
        "ind(x, y; z)",
        "cind(x; y; z)",
        "cind(z; x; y)",
        "cind(y; x; z)",
    ]
    .iter()
    .map(|text| parse(text).expect("pool entry parses"))
    .collect()
}

/// The decompositions of the atoms into quantifiers, implications, and
/// `B`/`P` statements.
pub fn decomposition_pool() -> Vec<TeamFormula> {
    [
        "A u. E v. B(u != x | v = y)",
        "A u. (B(u != x) or P(u = y))",
        "A u. (B(u != x) or B(u != y))",
        "ind(x; x)",
        "cind(x; y; y)",
        "const(x) s-> const(y)",
        "const(x) c-> const(y)",
        "const(x) hook-> ind(y; z)",
        "not P(!(x = y))",
        "B(x = y) otimes B(x != y)",
        "forgetting u. dep(x; y)",
        "disbelief u. (B(u = x) and const(u))",
        "doubting u. P(u = x)",
    ]
    .iter()
    .map(|text| parse(text).expect("pool entry parses"))
    .collect()
}

/// The full pool: atoms, decompositions, and the pinned random block.
pub fn regression_pool() -> Vec<TeamFormula> {
    let mut pool = atom_pool();
    pool.extend(decomposition_pool());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_COUNT {
        pool.push(random_formula(&mut rng, 3));
    }
    pool
}

/// Pool entries whose free variables fit the given scope. Structure
/// constants `c0`, `c1`, `c2` are always allowed.
pub fn pool_over(vars: &[&str]) -> Vec<TeamFormula> {
    regression_pool()
        .into_iter()
        .filter(|f| {
            f.free_variables()
                .iter()
                .all(|v| vars.contains(&v.as_str()) || matches!(v.as_str(), "c0" | "c1" | "c2"))
        })
        .collect()
}

const TERMS: [&str; 5] = ["x", "y", "z", "c0", "c1"];

fn random_term(rng: &mut ChaCha8Rng) -> Term {
    Term::Var(TERMS[rng.gen_range(0..TERMS.len())].to_string())
}

fn random_tuple(rng: &mut ChaCha8Rng) -> Vec<Term> {
    let len = rng.gen_range(1..=2);
    (0..len).map(|_| random_term(rng)).collect()
}

fn random_fo(rng: &mut ChaCha8Rng, depth: usize) -> FoFormula {
    if depth == 0 || rng.gen_range(0..3) == 0 {
        let eq = FoFormula::Eq(random_term(rng), random_term(rng));
        return if rng.gen_bool(0.3) {
            FoFormula::Not(Box::new(eq))
        } else {
            eq
        };
    }
    match rng.gen_range(0..4) {
        0 => FoFormula::And(
            Box::new(random_fo(rng, depth - 1)),
            Box::new(random_fo(rng, depth - 1)),
        ),
        1 => FoFormula::Or(
            Box::new(random_fo(rng, depth - 1)),
            Box::new(random_fo(rng, depth - 1)),
        ),
        2 => FoFormula::Exists(
            "v".to_string(),
            Box::new(FoFormula::Eq(Term::Var("v".to_string()), random_term(rng))),
        ),
        _ => FoFormula::Not(Box::new(random_fo(rng, depth - 1))),
    }
}

fn random_atom(rng: &mut ChaCha8Rng) -> TeamFormula {
    match rng.gen_range(0..8) {
        0 => TeamFormula::Belief(random_fo(rng, 1)),
        1 => TeamFormula::Possible(random_fo(rng, 1)),
        2 => TeamFormula::Constancy(random_tuple(rng)),
        3 => TeamFormula::Dependence(random_tuple(rng), random_tuple(rng)),
        4 => {
            let t = random_tuple(rng);
            let mut u = random_tuple(rng);
            u.resize(t.len(), Term::Var("x".to_string()));
            TeamFormula::Inclusion(t, u)
        }
        5 => {
            let t = random_tuple(rng);
            let mut u = random_tuple(rng);
            u.resize(t.len(), Term::Var("y".to_string()));
            TeamFormula::Exclusion(t, u)
        }
        6 => TeamFormula::Independence(random_tuple(rng), random_tuple(rng)),
        _ => TeamFormula::CondIndependence {
            cond: random_tuple(rng),
            left: random_tuple(rng),
            right: random_tuple(rng),
        },
    }
}

fn random_kind(rng: &mut ChaCha8Rng) -> UpdateKind {
    UpdateKind::ALL[rng.gen_range(0..4)]
}

fn random_formula(rng: &mut ChaCha8Rng, depth: usize) -> TeamFormula {
    if depth == 0 {
        return random_atom(rng);
    }
    match rng.gen_range(0..12) {
        0..=3 => random_atom(rng),
        4 => TeamFormula::And(
            Box::new(random_formula(rng, depth - 1)),
            Box::new(random_formula(rng, depth - 1)),
        ),
        5 => TeamFormula::Or(
            Box::new(random_formula(rng, depth - 1)),
            Box::new(random_formula(rng, depth - 1)),
        ),
        6 => TeamFormula::Not(Box::new(random_formula(rng, depth - 1))),
        7 => TeamFormula::Exists1(
            "u".to_string(),
            Box::new(TeamFormula::Belief(FoFormula::Eq(
                Term::Var("u".to_string()),
                random_term(rng),
            ))),
        ),
        8 => TeamFormula::Update(
            random_kind(rng),
            Box::new(random_formula(rng, depth - 1)),
            Box::new(random_formula(rng, depth - 1)),
        ),
        9 => TeamFormula::AdjointImp(
            random_kind(rng),
            Box::new(random_atom(rng)),
            Box::new(random_atom(rng)),
        ),
        10 => TeamFormula::MinImp(
            random_kind(rng),
            Box::new(random_atom(rng)),
            Box::new(random_atom(rng)),
        ),
        _ => {
            // Quantifiers bind a fresh variable so the result stays
            // evaluable over the pool scopes. `forgetting` is excluded:
            // with a fresh variable it would leave the body's occurrences
            // unbound. `forgotten` requires the variable out of scope,
            // which a fresh name guarantees.
            let q = [
                TeamQuantifier::Forgotten,
                TeamQuantifier::Disbelief,
                TeamQuantifier::Regardless,
                TeamQuantifier::Doubting,
                TeamQuantifier::Doubted,
            ][rng.gen_range(0..5)];
            TeamFormula::Quantified(
                q,
                "u".to_string(),
                Box::new(TeamFormula::Belief(FoFormula::Eq(
                    Term::Var("u".to_string()),
                    random_term(rng),
                ))),
            )
        }
    }
}
