#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <functional>

#include "alg/catalog.hpp"
#include "alg/io.hpp"
#include "alg/search.hpp"
#include "helpers.hpp"

using namespace alg;

namespace {

// independent oracle: orient each unordered pair three ways (<, >,
// incomparable), keep partial orders, keep bounded lattices, count up to iso
int oracle_lattice_count(int n) {
    if (n == 1) return 1;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<FiniteAlgebra> found;
    std::vector<int> choice(pairs.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k < pairs.size()) {
            for (int c = 0; c < 3; ++c) {
                choice[k] = c;
                rec(k + 1);
            }
            return;
        }
        std::vector<char> leq(static_cast<std::size_t>(n * n), 0);
        for (int i = 0; i < n; ++i) leq[static_cast<std::size_t>(i * n + i)] = 1;
        for (std::size_t t = 0; t < pairs.size(); ++t) {
            if (choice[t] == 1) leq[static_cast<std::size_t>(pairs[t].first * n + pairs[t].second)] = 1;
            if (choice[t] == 2) leq[static_cast<std::size_t>(pairs[t].second * n + pairs[t].first)] = 1;
        }
        auto le = [&](int a, int b) { return leq[static_cast<std::size_t>(a * n + b)] != 0; };
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (!le(a, b)) continue;
                for (int c = 0; c < n; ++c)
                    if (le(b, c) && !le(a, c)) return;  // not transitive
            }
        // all binary meets and joins must exist
        std::vector<int> meet(static_cast<std::size_t>(n * n)), join(meet.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int m = -1, j = -1;
                for (int z = 0; z < n; ++z) {
                    if (le(z, a) && le(z, b) && (m < 0 || le(m, z))) m = z;
                    if (le(a, z) && le(b, z) && (j < 0 || le(z, j))) j = z;
                }
                if (m < 0 || j < 0) return;
                for (int z = 0; z < n; ++z) {
                    if (le(z, a) && le(z, b) && !le(z, m)) return;
                    if (le(a, z) && le(b, z) && !le(j, z)) return;
                }
                meet[static_cast<std::size_t>(a * n + b)] = m;
                join[static_cast<std::size_t>(a * n + b)] = j;
            }
        int bot = -1, top = -1;
        for (int a = 0; a < n; ++a) {
            bool isbot = true, istop = true;
            for (int b = 0; b < n; ++b) {
                isbot &= le(a, b);
                istop &= le(b, a);
            }
            if (isbot) bot = a;
            if (istop) top = a;
        }
        if (bot < 0 || top < 0) return;
        FiniteAlgebra cand("o", n, Signature::lattice(), {meet, join, {top}, {bot}});
        for (const FiniteAlgebra& g : found)
            if (is_isomorphic(cand, g)) return;
        found.push_back(cand);
    };
    rec(0);
    return static_cast<int>(found.size());
}

} // namespace

TEST_CASE("lattice enumeration counts") {
    CHECK(enumerate_lattices(1).size() == 1);
    CHECK(enumerate_lattices(3).size() == 1);
    CHECK(enumerate_lattices(5).size() == 5);
    // 15 and 53 match the independently published counts of unlabeled lattices
    CHECK(enumerate_lattices(6).size() == 15);
    CHECK(enumerate_lattices(7).size() == 53);
    for (int n = 1; n <= 5; ++n)
        CHECK(static_cast<int>(enumerate_lattices(n).size()) == oracle_lattice_count(n));
    CHECK_THROWS_AS(enumerate_lattices(8), AlgError);
    for (const FiniteAlgebra& L : enumerate_lattices(6))
        CHECK(check_membership(L, class_by_name("lattice")).verdict);
}

TEST_CASE("FLew enumeration against generators") {
    Catalog two = enumerate_class(class_by_name("flew"), 2);
    REQUIRE(two.algebras.size() == 1);
    CHECK(is_isomorphic(two.algebras[0], make_boolean(1)));

    Catalog three = enumerate_class(class_by_name("flew"), 3);
    REQUIRE(three.algebras.size() == 2);
    bool saw_luk = false, saw_godel = false;
    for (const FiniteAlgebra& A : three.algebras) {
        saw_luk |= is_isomorphic(A, make_lukasiewicz_chain(3));
        saw_godel |= is_isomorphic(A, make_godel_chain(3));
    }
    CHECK(saw_luk);
    CHECK(saw_godel);

    for (const FiniteAlgebra& A : enumerate_class(class_by_name("flew"), 4).algebras)
        CHECK(check_membership(A, class_by_name("flew")).verdict);
}

TEST_CASE("FLew sizes <= 4 against the fully naive oracle") {
    // all symmetric fusion tables with unit = top, no pruning at all
    AlgebraClass C = class_by_name("flew");
    for (int n = 2; n <= 4; ++n) {
    std::vector<FiniteAlgebra> naive;
    for (const FiniteAlgebra& base : enumerate_lattices(n)) {
        OrderRelation ord = order_from_meet(base);
        std::vector<int> meet = base.table(base.sym_meet());
        std::vector<int> join = base.table(base.sym_join());
        const int top = n - 1;
        std::vector<std::pair<int, int>> free;
        for (int i = 0; i < top; ++i)
            for (int j = i; j < top; ++j) free.emplace_back(i, j);
        std::size_t total = 1;
        for (std::size_t i = 0; i < free.size(); ++i) total *= n;
        std::vector<int> fus(n * n);
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t rest = code;
            for (auto [i, j] : free) {
                int v = static_cast<int>(rest % n);
                rest /= n;
                fus[static_cast<std::size_t>(i * n + j)] = v;
                fus[static_cast<std::size_t>(j * n + i)] = v;
            }
            for (int x = 0; x < n; ++x) {
                fus[static_cast<std::size_t>(top * n + x)] = x;
                fus[static_cast<std::size_t>(x * n + top)] = x;
            }
            bool ok = true;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b)
                    for (int c = 0; c < n; ++c)
                        if (fus[static_cast<std::size_t>(fus[static_cast<std::size_t>(a * n + b)] * n + c)] !=
                            fus[static_cast<std::size_t>(a * n + fus[static_cast<std::size_t>(b * n + c)])]) {
                            ok = false;
                            break;
                        }
            if (!ok) continue;
            std::vector<int> under(n * n), over(n * n);
            for (int x = 0; x < n && ok; ++x)
                for (int z = 0; z < n && ok; ++z) {
                    int cand = -1;
                    for (int y = 0; y < n; ++y)
                        if (ord.leq(fus[static_cast<std::size_t>(x * n + y)], z))
                            cand = cand < 0 ? y : join[static_cast<std::size_t>(cand * n + y)];
                    if (cand < 0 || !ord.leq(fus[static_cast<std::size_t>(x * n + cand)], z)) {
                        ok = false;
                        break;
                    }
                    under[static_cast<std::size_t>(x * n + z)] = cand;
                    over[static_cast<std::size_t>(z * n + x)] = cand;
                }
            if (!ok) continue;
            FiniteAlgebra cand("naive", n, Signature::fl(),
                               {meet, join, fus, under, over, {top}, {0}, {top}, {0}});
            if (!check_membership(cand, C).verdict) continue;
            bool dup = false;
            for (const FiniteAlgebra& g : naive)
                if (is_isomorphic(cand, g)) {
                    dup = true;
                    break;
                }
            if (!dup) naive.push_back(cand);
        }
    }
    Catalog main_path = enumerate_class(C, n);
    REQUIRE(naive.size() == main_path.algebras.size());
    std::set<std::uint64_t> naive_hashes, main_hashes;
    for (const FiniteAlgebra& A : naive) naive_hashes.insert(canonical_hash(A));
    for (std::uint64_t h : main_path.hashes) main_hashes.insert(h);
    CHECK(naive_hashes == main_hashes);
    }
}

TEST_CASE("S4 enumeration over Boolean carriers") {
    Catalog s4_4 = enumerate_class(class_by_name("s4"), 4);
    CHECK(s4_4.algebras.size() == 3);  // preorders on 2 points up to iso
    for (const FiniteAlgebra& A : s4_4.algebras)
        CHECK(check_membership(A, class_by_name("s4")).verdict);

    bool saw_example = false;
    FiniteAlgebra ex = alg::testing::s4_boolean4();
    for (const FiniteAlgebra& A : s4_4.algebras) saw_example |= is_isomorphic(A, ex);
    CHECK(saw_example);

    // no Boolean lattice on sizes other than powers of two
    CHECK(enumerate_class(class_by_name("s4"), 3).algebras.empty());
}

TEST_CASE("isomorphism testing") {
    FiniteAlgebra b2 = make_boolean(1);
    FiniteAlgebra b4 = make_boolean(2);
    CHECK(is_isomorphic(direct_product(b2, b2), b4));
    CHECK(!is_isomorphic(make_lukasiewicz_chain(3), make_godel_chain(3)));
    CHECK(is_isomorphic(b4, b4));
    CHECK(!is_isomorphic(b2, b4));

    // symmetry and transitivity on a catalog sample
    std::vector<FiniteAlgebra> sample = resolve_catalog("flew:max=4");
    for (std::size_t i = 0; i < sample.size(); ++i)
        for (std::size_t j = 0; j < sample.size(); ++j) {
            bool ij = is_isomorphic(sample[i], sample[j]);
            CHECK(ij == is_isomorphic(sample[j], sample[i]));
            CHECK(ij == (i == j));  // catalog entries are pairwise non-isomorphic
        }

    // canonical keys agree exactly on isomorphic pairs
    CHECK(canonical_key(direct_product(b2, b2)) == canonical_key(b4));
    CHECK(canonical_key(make_lukasiewicz_chain(3)) != canonical_key(make_godel_chain(3)));
    CHECK(canonical_hash(direct_product(b2, b2)) == canonical_hash(b4));
}

TEST_CASE("catalog persistence round trip") {
    Catalog cat = enumerate_class(class_by_name("flew"), 3);
    auto dir = std::filesystem::temp_directory_path() / "alg_test_catalog";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    for (const FiniteAlgebra& A : cat.algebras)
        write_algebra_file(dir / (A.name() + ".alg"), A);
    std::vector<FiniteAlgebra> loaded = read_algebra_dir(dir);
    REQUIRE(loaded.size() == cat.algebras.size());
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i].tables() == cat.algebras[i].tables());
        CHECK(check_membership(loaded[i], class_by_name("flew")).verdict);
        CHECK(canonical_hash(loaded[i]) == cat.hashes[i]);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("algebra file format") {
    FiniteAlgebra luk3 = make_lukasiewicz_chain(3);
    std::ostringstream os;
    write_algebra(os, luk3);
    std::istringstream is(os.str());
    FiniteAlgebra back = read_algebra(is, "roundtrip");
    CHECK(back.tables() == luk3.tables());
    CHECK(back.labels() == luk3.labels());
    CHECK(back.name() == luk3.name());

    std::istringstream bad("algebra x\nsize 2\nop f 1\ntable f\n0 7\nend\nend\n");
    CHECK_THROWS_AS(read_algebra(bad, "bad"), AlgError);
    std::istringstream bad2("size 2\n");
    CHECK_THROWS_AS(read_algebra(bad2, "bad2"), AlgError);
    std::istringstream commented(
        "# a comment\nalgebra c2 # trailing\nsize 2\nop /\\ 2\ntable /\\\n0 0\n0 1\nend\nend\n");
    FiniteAlgebra c2 = read_algebra(commented, "c2");
    CHECK(c2.size() == 2);
}

TEST_CASE("catalog sources") {
    CHECK(resolve_catalog("boolean2").size() == 1);
    CHECK(resolve_catalog("luk-chains:max=5").size() == 4);
    CHECK(resolve_catalog("heyting:max=4").size() == 5);  // sizes 1..4: 1+1+1+2
    CHECK(resolve_catalog("s4:sizes=2,4").size() == 4);   // 1 + 3
    for (const FiniteAlgebra& A : resolve_catalog("bl-chains:max=4"))
        CHECK(check_membership(A, class_by_name("bl")).verdict);
    CHECK_THROWS_AS(resolve_catalog("no-such-source"), AlgError);
}
