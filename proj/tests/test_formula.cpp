#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "alg/formula.hpp"

using namespace alg;

namespace {

int count_kind(const Formula& f, Formula::Kind k) {
    int c = f.kind() == k ? 1 : 0;
    if (f.is_unary()) return c + count_kind(f.lhs(), k);
    if (f.is_binary()) return c + count_kind(f.lhs(), k) + count_kind(f.rhs(), k);
    return c;
}

// random ASTs over the full connective set, for the round-trip property
Formula random_ast(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 6 : 14);
    switch (pick(rng)) {
        case 0: return Formula::var("p");
        case 1: return Formula::var("q");
        case 2: return Formula::one();
        case 3: return Formula::zero();
        case 4: return Formula::top();
        case 5: return Formula::bot();
        case 6: return Formula::var("longer_name3");
        case 7: return Formula::negb(random_ast(rng, depth - 1));
        case 8: return Formula::negz(random_ast(rng, depth - 1));
        case 9: return Formula::box(random_ast(rng, depth - 1));
        case 10: return Formula::dia(random_ast(rng, depth - 1));
        case 11: return Formula::meet(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 12: return Formula::join(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        case 13: return Formula::fus(random_ast(rng, depth - 1), random_ast(rng, depth - 1));
        default: {
            std::uniform_int_distribution<int> res(0, 2);
            Formula l = random_ast(rng, depth - 1), r = random_ast(rng, depth - 1);
            int k = res(rng);
            if (k == 0) return Formula::under(l, r);
            if (k == 1) return Formula::over(l, r);
            return Formula::arrow(l, r);
        }
    }
}

} // namespace

TEST_CASE("grammar examples") {
    Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");

    CHECK(parse_formula("p \\/ ~(p^2)") ==
          Formula::join(p, Formula::negb(Formula::fus(p, p))));

    CHECK(parse_formula("[]_2 p -> q") == Formula::arrow(Formula::boxn(2, p), q));

    CHECK_THROWS_AS(parse_formula("p \\ q / r"), AlgError);
    CHECK_THROWS_AS(parse_formula("p -> q \\ r"), AlgError);
    CHECK(parse_formula("p \\ (q / r)") == Formula::under(p, Formula::over(q, r)));
}

TEST_CASE("precedence and macros") {
    Formula p = Formula::var("p"), q = Formula::var("q");
    // * binds tighter than /\ which binds tighter than \/
    CHECK(parse_formula("p \\/ q /\\ p * q") ==
          Formula::join(p, Formula::meet(q, Formula::fus(p, q))));
    // postfix power binds tighter than prefix negation
    CHECK(parse_formula("~p^2") == Formula::negb(Formula::fus(p, p)));
    // right associativity
    CHECK(parse_formula("p -> q -> p") == Formula::arrow(p, Formula::arrow(q, p)));
    // box/diamond subscripts and hole
    CHECK(parse_formula("<>_2 p") == Formula::dian(2, p));
    CHECK(parse_formula("[] _") == Formula::box(Formula::var("_")));
    CHECK(parse_formula("~~_") == Formula::negb(Formula::negb(Formula::var("_"))));
    // n-fold oplus
    CHECK(parse_formula("2.p") == Formula::nfold(2, p));
    CHECK(parse_formula("1") == Formula::one());
    CHECK_THROWS_AS(parse_formula("3"), AlgError);
    CHECK_THROWS_AS(parse_formula("p \\/"), AlgError);
    CHECK_THROWS_AS(parse_formula("(p"), AlgError);
}

TEST_CASE("macro expansion is literal with collapsed base cases") {
    Formula p = Formula::var("p");
    CHECK(Formula::power(p, 0) == Formula::one());
    CHECK(Formula::power(p, 1) == p);
    CHECK(Formula::boxn(0, p) == p);
    CHECK(Formula::nfold(0, p) == Formula::zero());

    for (int n = 1; n <= 6; ++n)
        CHECK(count_kind(Formula::power(p, n), Formula::Kind::Fus) == n - 1);
    // []_n has n box-strings and n meets
    CHECK(count_kind(Formula::boxn(3, p), Formula::Kind::Meet) == 3);
    CHECK(count_kind(Formula::boxn(3, p), Formula::Kind::Box) == 6);  // 1 + 2 + 3
}

TEST_CASE("expansion of derived connectives") {
    Formula p = Formula::var("p"), q = Formula::var("q");
    Formula e = Formula::negb(p).expand();
    CHECK(e == Formula::under(p, Formula::bot()));
    CHECK(Formula::negz(p).expand() == Formula::under(p, Formula::zero()));
    CHECK(Formula::arrow(p, q).expand() == Formula::under(p, q));
    // idempotent
    CHECK(e.expand() == e);
    // signature-closed: no derived nodes survive
    Formula big = parse_formula("~(p -> !q) /\\ <>p");
    Formula ex = big.expand();
    CHECK(count_kind(ex, Formula::Kind::NegB) == 0);
    CHECK(count_kind(ex, Formula::Kind::NegZ) == 0);
    CHECK(count_kind(ex, Formula::Kind::Arrow) == 0);
}

TEST_CASE("parse . print round trip on random trees") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 500; ++i) {
        Formula f = random_ast(rng, 5);
        Formula g = parse_formula(f.str());
        CHECK(g == f);
    }
    // print . parse = identity up to whitespace on canonical strings
    for (const char* s : {"p \\/ ~(p * p)", "[]p -> q", "(p -> q) -> p", "p /\\ (q \\/ T)",
                          "1 \\ (0 / p)"}) {
        Formula f = parse_formula(s);
        CHECK(parse_formula(f.str()) == f);
    }
}

TEST_CASE("parser rejects garbage without crashing") {
    std::mt19937 rng(414243);
    const std::string pool = "pq()/\\*~!<>[]^._-> 01TB";
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> len(0, 24);
    int parsed = 0;
    for (int i = 0; i < 3000; ++i) {
        std::string s;
        int L = len(rng);
        for (int j = 0; j < L; ++j) s += pool[pick(rng)];
        try {
            Formula f = parse_formula(s);
            ++parsed;
            CHECK(parse_formula(f.str()) == f);  // whatever parses round-trips
        } catch (const AlgError& e) {
            CHECK(e.kind() == ErrorKind::Syntax);
        }
    }
    CHECK(parsed > 0);  // the pool does produce some well-formed strings
    CHECK_THROWS_AS(parse_formula("p^5000"), AlgError);
}

TEST_CASE("scheme families") {
    Formula p = Formula::var("p");
    SchemeFamily flew = scheme_family("flew-il");

    auto s2 = expand_scheme(flew, 2, p);
    REQUIRE(s2.size() == 1);
    CHECK(s2[0] == Formula::negb(Formula::fus(p, p)));

    SchemeFamily fle = scheme_family("fle-il");
    auto s1 = expand_scheme(fle, 1, p);
    REQUIRE(s1.size() == 1);
    CHECK(s1[0] == Formula::negb(Formula::meet(Formula::one(), p)));

    SchemeFamily ik = scheme_family("ik-il");
    auto ik1 = expand_scheme(ik, 1, p);
    REQUIRE(ik1.size() == 1);
    CHECK(ik1[0] == Formula::negb(Formula::meet(p, Formula::box(p))));

    CHECK_THROWS_AS(expand_scheme(flew, flew.bound + 1, p), AlgError);
    CHECK_THROWS_AS(scheme_family("no-such-family"), AlgError);

    // generated formulas mention only the distinguished variable
    for (const char* name : {"classical", "flew-il", "fle-il", "ik-il", "s4-il"}) {
        SchemeFamily f = scheme_family(name);
        for (int n = 1; n <= f.bound; ++n)
            for (const Formula& g : f.generate(n))
                for (const std::string& v : g.variables()) CHECK(v == "p");
    }
    SchemeFamily luk = scheme_family("luk-il:k=3");
    CHECK(luk.generate(1) == luk.generate(5));
}

TEST_CASE("lem axiom forms") {
    Formula p = Formula::var("p"), q = Formula::var("q");

    CHECK(lem_axiom(LemForm::PCP, lem_scheme("flew"), 2) ==
          Formula::join(p, Formula::negb(Formula::fus(p, p))));

    CHECK(lem_axiom(LemForm::PCP, lem_scheme("ikn4"), 1) ==
          Formula::join(Formula::boxn(1, p),
                        Formula::boxn(1, Formula::negb(Formula::boxn(1, p)))));

    // ((1 /\ p) -> q) ->_1 ((~(1 /\ p) ->_1 q) ->_1 q), expanded literally
    Formula op = Formula::meet(Formula::one(), p);
    Formula a = Formula::arrow(op, q);
    Formula np = Formula::negb(op);
    Formula b = Formula::arrow(Formula::meet(Formula::one(), np), q);
    Formula expected = Formula::arrow(
        Formula::meet(Formula::one(), a),
        Formula::arrow(Formula::meet(Formula::one(), b), q));
    CHECK(lem_axiom(LemForm::DDT, lem_scheme("flen"), 1) == expected);

    CHECK_THROWS_AS(lem_scheme("no-such-class"), AlgError);
}

TEST_CASE("ddt families and join schemes") {
    Formula p = Formula::var("p"), q = Formula::var("q");
    CHECK(ddt_family("flew-ddt").generate(2) ==
          std::vector<Formula>{Formula::arrow(Formula::fus(p, p), q)});
    CHECK(join_scheme("s4-or") ==
          std::vector<Formula>{Formula::join(Formula::box(p), Formula::box(q))});
    CHECK(join_scheme("ikn4-or:n=2") ==
          std::vector<Formula>{Formula::join(Formula::boxn(2, p), Formula::boxn(2, q))});
    CHECK_THROWS_AS(join_scheme("bogus"), AlgError);
}
