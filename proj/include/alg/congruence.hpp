#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alg/algebra.hpp"

namespace alg {

// Partition of {0..n-1} in normal form: blocks numbered by first occurrence,
// so equal partitions have equal block tables.
class Congruence {
public:
    Congruence() = default;
    explicit Congruence(std::vector<int> block_of);

    static Congruence identity(int n);
    static Congruence total(int n);
    // normalizes an arbitrary block assignment
    static Congruence from_raw(const std::vector<int>& raw);

    int size() const { return static_cast<int>(block_of_.size()); }
    int block_count() const { return nblocks_; }
    int block_of(int a) const { return block_of_[static_cast<std::size_t>(a)]; }
    bool same(int a, int b) const { return block_of(a) == block_of(b); }
    bool is_identity() const { return nblocks_ == size(); }
    bool is_total() const { return nblocks_ == 1; }

    std::vector<std::vector<int>> blocks() const;
    const std::vector<int>& table() const { return block_of_; }

    // refinement order: *this <= other iff every block of *this lies in a block of other
    bool refines(const Congruence& other) const;
    Congruence intersect(const Congruence& other) const;

    bool operator==(const Congruence& other) const { return block_of_ == other.block_of_; }
    bool operator<(const Congruence& other) const { return block_of_ < other.block_of_; }

    std::string str(const FiniteAlgebra& A) const;

private:
    std::vector<int> block_of_;
    int nblocks_ = 0;
};

// nullopt when compatible; otherwise a description of the violation
std::optional<std::string> compatibility_violation(const FiniteAlgebra& A, const Congruence& theta);

// Least congruence containing the given pairs: union-find seeded with the
// pairs, closed under unary polynomial applications until fixpoint.
Congruence congruence_generated(const FiniteAlgebra& A,
                                const std::vector<std::pair<int, int>>& pairs);

struct CongruenceLattice {
    std::vector<Congruence> all;  // sorted, contains identity and total

    int index_of(const Congruence& theta) const;
    // maximal congruences strictly below the total relation
    std::vector<Congruence> coatoms() const;
};

// Principal congruences closed under join (join = regenerate from the union
// of pairs). Guard: |A| <= cap.
CongruenceLattice all_congruences(const FiniteAlgebra& A, int cap = 12);

bool is_simple(const FiniteAlgebra& A, int cap = 12);

struct SemisimpleCertificate {
    bool semisimple = false;
    bool simple = false;
    std::vector<Congruence> coatoms;
    Congruence coatom_meet;
    // subdirect embedding a |-> (block in each coatom quotient); injective iff semisimple
    std::vector<std::vector<int>> embedding;
};

SemisimpleCertificate is_semisimple(const FiniteAlgebra& A, int cap = 12);

// Carrier = blocks of theta (numbered by least member); tables on
// representatives. Throws NotCompatible when theta is not a congruence.
FiniteAlgebra quotient(const FiniteAlgebra& A, const Congruence& theta);

} // namespace alg
