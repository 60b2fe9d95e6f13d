#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alg/catalog.hpp"
#include "alg/glivenko.hpp"
#include "helpers.hpp"

using namespace alg;

namespace {

GlivenkoPair heyting_pair(const std::vector<FiniteAlgebra>& weak_cat,
                          const std::vector<FiniteAlgebra>& strong_cat) {
    GlivenkoPair pair;
    pair.weak = matrices_for(weak_cat, TranslationStyle::FL, "least");
    pair.strong = matrices_for(strong_cat, TranslationStyle::FL, "least");
    pair.scheme = parse_formula("~~_");
    pair.strong_complete = true;  // Boolean-2 decides classical logic
    return pair;
}

} // namespace

TEST_CASE("classical/intuitionistic correspondence on curated formulas") {
    std::vector<FiniteAlgebra> weak = resolve_catalog("heyting:max=4");
    std::vector<FiniteAlgebra> strong = resolve_catalog("boolean2");
    GlivenkoPair pair = heyting_pair(weak, strong);

    struct Row {
        const char* phi;
        bool classical;
    };
    for (const Row& row : std::initializer_list<Row>{
             {"((p -> q) -> p) -> p", true},  // Peirce
             {"p \\/ ~p", true},
             {"~~p -> p", true},
             {"p", false},
             {"p -> q", false},
             {"p /\\ ~p", false},
         }) {
        GlivenkoReport rep = glivenko_check(pair, {}, parse_formula(row.phi));
        CHECK(rep.strong_side.holds == row.classical);
        CHECK(rep.match);
        CHECK(!rep.exact_mismatch);
    }

    // with premises: Gamma |- phi classically iff Gamma |- ~~phi intuitionistically
    GlivenkoReport with_gamma =
        glivenko_check(pair, {parse_formula("~~p")}, parse_formula("p"));
    CHECK(with_gamma.strong_side.holds);
    CHECK(with_gamma.match);

    CHECK_THROWS_AS(glivenko_check(GlivenkoPair{pair.weak, pair.strong,
                                                parse_formula("~~x"), true},
                                   {}, parse_formula("p")),
                    AlgError);
}

TEST_CASE("no exact mismatches on seeded random formulas") {
    std::vector<FiniteAlgebra> weak = resolve_catalog("heyting:max=4");
    std::vector<FiniteAlgebra> strong = resolve_catalog("boolean2");
    GlivenkoPair pair = heyting_pair(weak, strong);
    std::mt19937 rng(20240801);
    for (int i = 0; i < 200; ++i) {
        Formula phi = random_formula(rng, 8, {"p", "q"});
        GlivenkoReport rep = glivenko_check(pair, {}, phi);
        CHECK(!rep.exact_mismatch);
        CHECK(rep.match);  // Boolean-2 sits inside the weak catalog
    }
}

TEST_CASE("S4/S5 correspondence") {
    std::vector<FiniteAlgebra> weak = resolve_catalog("s4:sizes=2,4");
    std::vector<FiniteAlgebra> strong = resolve_catalog("s5:sizes=2,4");
    GlivenkoPair pair;
    pair.weak = matrices_for(weak, TranslationStyle::Modal, "least");
    pair.strong = matrices_for(strong, TranslationStyle::Modal, "least");
    pair.scheme = parse_formula("~[]~[]_");
    pair.strong_complete = false;

    for (const char* phi : {"[]p -> p", "p -> []p", "[]p \\/ ~[]p", "p \\/ ~p", "p"}) {
        GlivenkoReport rep = glivenko_check(pair, {}, parse_formula(phi));
        CHECK(!rep.exact_mismatch);
        CHECK(rep.match);
    }
}

TEST_CASE("MIPC translation equivalence") {
    // ~~[]a = ~[]~[]a on every monadic Heyting algebra
    std::vector<FiniteAlgebra> cat = resolve_catalog("mipc:max=4");
    REQUIRE(!cat.empty());
    Formula lhs = parse_formula("~~[]x");
    Formula rhs = parse_formula("~[]~[]x");
    for (const FiniteAlgebra& A : cat)
        for (int a = 0; a < A.size(); ++a)
            CHECK(evaluate(A, lhs, {{"x", a}}) == evaluate(A, rhs, {{"x", a}}));
}

TEST_CASE("local Glivenko rows") {
    std::vector<FiniteAlgebra> luk3{make_lukasiewicz_chain(3)};
    auto M3 = matrices_for(luk3, TranslationStyle::FL, "least");
    // p \/ ~p^2 is Luk3-valid, so k = 1 works for every n
    for (const LocalGlivenkoRow& row :
         local_glivenko_check(M3, {}, parse_formula("p \\/ ~p^2"), 3))
        CHECK(row.k == 1);

    std::vector<FiniteAlgebra> b2{make_boolean(1)};
    auto MB = matrices_for(b2, TranslationStyle::FL, "least");
    auto rows = local_glivenko_check(MB, {parse_formula("p")}, parse_formula("p"), 2);
    CHECK(rows[0].n == 1);
    CHECK(rows[0].k == 1);  // ~~p follows from p

    std::vector<FiniteAlgebra> g3{make_godel_chain(3)};
    auto MG = matrices_for(g3, TranslationStyle::FL, "least");
    auto growsv = local_glivenko_check(MG, {}, parse_formula("p \\/ ~p"), 2);
    CHECK(growsv[0].k == 1);  // ~~(p \/ ~p) is Godel-valid
}

TEST_CASE("exact rational countermodels for the infinitary chain") {
    LukCertificate c1 = lukinfty_ddt_countermodel(1);
    CHECK(c1.eps == Rational(1, 3));
    CHECK(c1.ok);
    CHECK(c1.premises_designated);
    CHECK(c1.conclusion_refuted);
    CHECK(c1.v_p == Rational(5, 6));
    CHECK(c1.conclusion == Rational(5, 6));

    LukCertificate c2 = lukinfty_ddt_countermodel(2);
    CHECK(c2.eps == Rational(1, 3));
    CHECK(c2.ok);

    LukCertificate c5 = lukinfty_ddt_countermodel(5);
    CHECK(c5.eps == Rational(1, 5));
    CHECK(c5.ok);

    for (int n : {1, 2, 3, 4, 5, 7}) {
        LukCertificate c = lukinfty_ddt_countermodel(n);
        CHECK(c.ok);
        // v(q_i) nondecreasing, i_max within the predicted window
        for (std::size_t i = 0; i + 1 < c.v_q.size(); ++i) CHECK(c.v_q[i] <= c.v_q[i + 1]);
        int s = 0;
        while (s * s < 2 * n) ++s;
        CHECK(c.i_max <= s + 1);
        for (const Rational& r : c.v_q) {
            CHECK(r >= 0);
            CHECK(r <= 1);
        }
    }
    CHECK_THROWS_AS(lukinfty_ddt_countermodel(0), AlgError);
}

TEST_CASE("shipped pairs never mismatch exactly on random samples") {
    std::mt19937 rng(20240805);
    for (const std::string& name : shipped_pair_names()) {
        ShippedPair sp = shipped_pair(name, 4);
        std::vector<FiniteAlgebra> weak = resolve_catalog(sp.weak_source);
        std::vector<FiniteAlgebra> strong = resolve_catalog(sp.strong_source);
        REQUIRE(!weak.empty());
        REQUIRE(!strong.empty());
        TranslationStyle style = sp.modal ? TranslationStyle::Modal : TranslationStyle::FL;
        GlivenkoPair pair;
        pair.weak = matrices_for(weak, style, "least");
        pair.strong = matrices_for(strong, style, "least");
        pair.scheme = parse_formula(sp.scheme);
        pair.strong_complete = sp.strong_complete;
        for (int i = 0; i < 120; ++i) {
            Formula phi = random_formula(rng, 8, {"p", "q"}, sp.modal);
            GlivenkoReport rep = glivenko_check(pair, {}, phi);
            CHECK(!rep.exact_mismatch);
        }
    }
    CHECK_THROWS_AS(shipped_pair("bogus", 4), AlgError);
}

TEST_CASE("exact Lukasiewicz evaluation") {
    std::map<std::string, Rational> v{{"x", Rational(2, 3)}, {"y", Rational(1, 4)}};
    CHECK(luk_eval(parse_formula("x * x"), v) == Rational(1, 3));
    CHECK(luk_eval(parse_formula("x -> y"), v) == Rational(7, 12));
    CHECK(luk_eval(parse_formula("~x"), v) == Rational(1, 3));
    CHECK(luk_eval(parse_formula("x \\/ y"), v) == Rational(2, 3));
    CHECK(luk_eval(parse_formula("x^3"), v) == Rational(0));
    CHECK(luk_eval(parse_formula("3.y"), v) == Rational(3, 4));
    CHECK(luk_eval(parse_formula("x \\ y"), v) == luk_eval(parse_formula("y / x"), v));
}
