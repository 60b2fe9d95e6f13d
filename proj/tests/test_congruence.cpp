#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "alg/congruence.hpp"
#include "alg/search.hpp"
#include "helpers.hpp"

using namespace alg;
using alg::testing::heyting3;
using alg::testing::s4_boolean4;

namespace {

// brute-force oracle: every partition of {0..n-1}, filtered by compatibility
std::vector<Congruence> oracle_congruences(const FiniteAlgebra& A) {
    int n = A.size();
    std::vector<Congruence> out;
    std::vector<int> assign(static_cast<std::size_t>(n), 0);
    // restricted growth strings enumerate set partitions exactly once
    std::function<void(int, int)> rec = [&](int i, int maxb) {
        if (i == n) {
            Congruence c = Congruence::from_raw(assign);
            if (!compatibility_violation(A, c)) out.push_back(c);
            return;
        }
        for (int b = 0; b <= maxb + 1 && b < n; ++b) {
            assign[static_cast<std::size_t>(i)] = b;
            rec(i + 1, std::max(maxb, b));
        }
    };
    rec(0, -1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("congruence generation examples") {
    FiniteAlgebra b4 = make_boolean(2);  // atoms a = 1, b = 2
    Congruence c = congruence_generated(b4, {{1, 3}});
    CHECK(c.same(1, 3));
    CHECK(c.same(0, 2));
    CHECK(!c.same(0, 1));
    CHECK(c.block_count() == 2);

    CHECK(congruence_generated(b4, {{2, 2}}).is_identity());

    FiniteAlgebra h3 = heyting3();
    Congruence c2 = congruence_generated(h3, {{1, 2}});
    CHECK(c2.same(1, 2));
    CHECK(!c2.same(0, 1));
    CHECK(c2.block_count() == 2);

    CHECK_THROWS_AS(congruence_generated(h3, {{0, 5}}), AlgError);
}

TEST_CASE("full congruence lattices") {
    CHECK(all_congruences(make_lukasiewicz_chain(3)).all.size() == 2);
    CHECK(all_congruences(heyting3()).all.size() == 3);
    CHECK(all_congruences(make_boolean(2)).all.size() == 4);

    // against the brute-force partition oracle on small algebras
    for (const FiniteAlgebra& A :
         {make_lukasiewicz_chain(3), make_lukasiewicz_chain(4), heyting3(), make_godel_chain(4),
          make_boolean(2), s4_boolean4(), make_godel_chain(6),
          direct_product(make_boolean(1), make_godel_chain(3))}) {
        CongruenceLattice lat = all_congruences(A);
        std::vector<Congruence> expect = oracle_congruences(A);
        CHECK(lat.all == expect);
    }
}

TEST_CASE("simplicity and semisimplicity") {
    for (int k = 2; k <= 7; ++k) CHECK(is_simple(make_lukasiewicz_chain(k)));

    SemisimpleCertificate h3 = is_semisimple(heyting3());
    CHECK(!h3.semisimple);
    REQUIRE(h3.coatoms.size() == 1);
    CHECK(h3.coatoms[0].same(1, 2));
    CHECK(!h3.coatom_meet.is_identity());

    SemisimpleCertificate b4 = is_semisimple(make_boolean(2));
    CHECK(b4.semisimple);
    CHECK(!b4.simple);
    CHECK(b4.coatoms.size() == 2);
    CHECK(b4.coatom_meet.is_identity());

    FiniteAlgebra triv("triv", 1, Signature::fl(),
                       {{0}, {0}, {0}, {0}, {0}, {0}, {0}, {0}, {0}});
    SemisimpleCertificate t = is_semisimple(triv);
    CHECK(t.semisimple);
    CHECK(!t.simple);
    CHECK(!is_simple(triv));

    CHECK(!is_semisimple(s4_boolean4()).semisimple);

    CHECK_THROWS_AS(all_congruences(make_lukasiewicz_chain(13)), AlgError);
}

TEST_CASE("coatom quotients are simple and embeddings are injective") {
    for (const FiniteAlgebra& A : {heyting3(), make_godel_chain(4), make_boolean(2),
                                   make_boolean(3), s4_boolean4(), make_lukasiewicz_chain(5)}) {
        SemisimpleCertificate cert = is_semisimple(A);
        for (const Congruence& theta : cert.coatoms) {
            FiniteAlgebra q = quotient(A, theta);
            CHECK(is_simple(q));
        }
        // embedding into the product of coatom quotients is injective iff semisimple
        std::set<std::vector<int>> images(cert.embedding.begin(), cert.embedding.end());
        CHECK((images.size() == static_cast<std::size_t>(A.size())) == cert.semisimple);
    }
}

TEST_CASE("products of simple algebras are semisimple") {
    FiniteAlgebra luk3 = make_lukasiewicz_chain(3);
    FiniteAlgebra b2 = make_boolean(1);
    CHECK(is_semisimple(direct_product(luk3, b2)).semisimple);
    CHECK(is_semisimple(direct_product(luk3, make_lukasiewicz_chain(4))).semisimple);
    CHECK(is_semisimple(direct_product(b2, b2)).semisimple);
}

TEST_CASE("quotient by the Heyting coatom is Boolean") {
    FiniteAlgebra h3 = heyting3();
    SemisimpleCertificate cert = is_semisimple(h3);
    FiniteAlgebra q = quotient(h3, cert.coatoms[0]);
    CHECK(is_isomorphic(q, make_boolean(1)));
}

TEST_CASE("congruence refinement order and joins") {
    FiniteAlgebra b4 = make_boolean(2);
    CongruenceLattice lat = all_congruences(b4);
    for (const Congruence& t : lat.all) {
        CHECK(Congruence::identity(4).refines(t));
        CHECK(t.refines(Congruence::total(4)));
        CHECK(t.intersect(t) == t);
    }
    Congruence ta = congruence_generated(b4, {{1, 3}});
    Congruence tb = congruence_generated(b4, {{2, 3}});
    CHECK(ta.intersect(tb).is_identity());
}
