#pragma once

#include <optional>
#include <string>
#include <vector>

#include "alg/classes.hpp"
#include "alg/congruence.hpp"

namespace alg {

// Subset of a carrier, membership-indexed.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int n) : in_(static_cast<std::size_t>(n), 0) {}
    static ElemSet of(int n, const std::vector<int>& elems);

    int size() const { return static_cast<int>(in_.size()); }
    bool contains(int a) const { return in_[static_cast<std::size_t>(a)] != 0; }
    void insert(int a) { in_[static_cast<std::size_t>(a)] = 1; }
    int count() const;
    bool is_full() const { return count() == size(); }

    ElemSet intersect(const ElemSet& other) const;
    bool subset_of(const ElemSet& other) const;
    std::vector<int> elements() const;

    bool operator==(const ElemSet&) const = default;
    bool operator<(const ElemSet& other) const { return in_ < other.in_; }

private:
    std::vector<char> in_;
};

// a |-> a /\ 1 (FL-style, encodes 1 <= a) or a |-> a (modal-style, 1 = a).
int translate(const FiniteAlgebra& A, TranslationStyle style, int a);

struct DeductiveFilter {
    ElemSet set;
    Congruence theta;  // source congruence

    bool operator<(const DeductiveFilter& other) const { return set < other.set; }
};

// Images F_theta = { a : translate(a) ~theta 1 } over the whole congruence
// lattice, deduplicated and sorted.
std::vector<DeductiveFilter> all_filters(const FiniteAlgebra& A, TranslationStyle style,
                                         int cap = 12);

// F for Cg{ (translate(x), 1) : x in X }: the least deductive filter containing X.
DeductiveFilter filter_generated(const FiniteAlgebra& A, TranslationStyle style,
                                 const std::vector<int>& X);

// Least filter = theorems of the finite matrix semantics.
DeductiveFilter least_filter(const FiniteAlgebra& A, TranslationStyle style);

struct Matrix {
    const FiniteAlgebra* algebra = nullptr;
    ElemSet designated;
    std::string name;
};

struct CounterModel {
    int matrix = -1;
    std::string matrix_name;
    Valuation valuation;
};

struct ConsequenceResult {
    bool holds = false;
    std::optional<CounterModel> witness;
};

// Local consequence over the family: every valuation into every matrix that
// designates all of gamma designates phi.
ConsequenceResult consequence(const std::vector<Matrix>& family,
                              const std::vector<Formula>& gamma, const Formula& phi);

// gamma cannot be jointly designated in any matrix with a non-trivial filter.
ConsequenceResult is_antitheorem(const std::vector<Matrix>& family,
                                 const std::vector<Formula>& gamma);

} // namespace alg
