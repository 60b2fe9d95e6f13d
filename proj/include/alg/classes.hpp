#pragma once

#include <string>
#include <vector>

#include "alg/algebra.hpp"

namespace alg {

enum class TranslationStyle { FL, Modal };

struct Law {
    enum class Kind { Eq, Leq };
    Kind kind = Kind::Eq;
    Formula lhs, rhs;
    std::string label;
};

struct AlgebraClass {
    std::string name;
    Signature base_sig;
    bool needs_residuation = false;  // triple equivalence x <= z/y <=> x*y <= z <=> y <= x\z
    std::vector<Law> laws;
};

struct ClassReport {
    struct Failure {
        std::string label;
        Valuation valuation;
        std::string detail;
    };
    bool verdict = false;
    std::vector<Failure> failures;
};

// Exhaustive law check over all valuations; residuation as three mutual
// implications. Every law symbol must exist in A's signature.
ClassReport check_membership(const FiniteAlgebra& A, const AlgebraClass& C);

// Tokens: lattice, fl, fle, flew, flen:n=K, flewn:n=K, heyting, godel,
// boolean, bl, mv, modal, kn4:n=K, kn45:n=K, s4, s5, ik, ikn4:n=K,
// ikn45:n=K, is4, mipc, ws5. Flags (appended, comma-separated):
// ",dual" adds the optional dual diamond laws, ",nofs" drops <>x->[]y <= [](x->y).
AlgebraClass class_by_name(const std::string& token);

// k-element chain with x*y = max(x+y-1, 0); passes flew (and mv).
FiniteAlgebra make_lukasiewicz_chain(int k);
// k-element chain with x->y = 1 if x <= y else y; passes godel.
FiniteAlgebra make_godel_chain(int k);
// Boolean algebra on 2^atoms elements, atoms >= 1; FL signature.
FiniteAlgebra make_boolean(int atoms);
// Monadic structure on a Heyting-algebra base: the blocks induce the
// relatively complete subalgebra C = { meet B, join B : B in partition };
// []x = max{c in C : c <= x}, <>x = min{c in C : c >= x}.
FiniteAlgebra make_monadic(const FiniteAlgebra& base,
                           const std::vector<std::vector<int>>& partition);

} // namespace alg
